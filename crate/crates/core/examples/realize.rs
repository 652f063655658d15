//! Build forms with prescribed invariants and read the invariants back.
use stable4::{invariants_of, realize_form, Category, F2Vector, Invariants, Parity, Presentation, Tau, WType};

fn main() -> stable4::Result<()> {
    let presentation = Presentation::z3();
    let targets = [
        (
            Category::Topological,
            Invariants { w: WType::TotallyNonSpin, signature: 1, parity: Parity::Odd, tau: Tau::Absent, ks: Some(true) },
        ),
        (
            Category::Topological,
            Invariants { w: WType::Spin, signature: 8, parity: Parity::Odd, tau: Tau::Absent, ks: Some(true) },
        ),
        (
            Category::Smooth,
            Invariants {
                w: WType::Spin,
                signature: -16,
                parity: Parity::Even,
                tau: Tau::Class("010".parse()?),
                ks: None,
            },
        ),
        (
            Category::Smooth,
            Invariants {
                w: WType::AlmostSpin("110".parse()?),
                signature: 0,
                parity: Parity::Even,
                tau: Tau::Class(F2Vector::zero(3)),
                ks: None,
            },
        ),
    ];
    for (category, target) in targets {
        let h = realize_form(&presentation, &target, category)?;
        let back = invariants_of(&h, category);
        println!(
            "{category:<11} {}  rank {:>2}  round trip {}",
            serde_json::to_string(&target.to_json()).unwrap(),
            h.form.matrix().size(),
            if back == target { "ok" } else { "MISMATCH" }
        );
        if let Some(note) = &h.note {
            println!("            note: {note}");
        }
    }
    Ok(())
}
