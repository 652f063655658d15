//! Stable equivalence for spin manifolds with fundamental group Z^3.
use stable4::{decide_stable_equiv, family_z3, Category, F2Vector, Invariants, Parity, Tau, WType};

fn tuple(phi: &str, odd: bool) -> Invariants {
    Invariants {
        w: WType::Spin,
        signature: 0,
        parity: if odd { Parity::Odd } else { Parity::Even },
        tau: if odd { Tau::Absent } else { Tau::Class(phi.parse().unwrap()) },
        ks: None,
    }
}

fn main() -> stable4::Result<()> {
    let family = family_z3();
    let labels: Vec<(String, bool)> = F2Vector::all(3)
        .map(|v| (v.to_string(), false))
        .chain([("odd".to_string(), true)])
        .collect();
    print!("{:>5}", "");
    for (l, _) in &labels {
        print!("{l:>5}");
    }
    println!();
    for (a, odd_a) in &labels {
        print!("{a:>5}");
        for (b, odd_b) in &labels {
            let same = decide_stable_equiv(&tuple(a, *odd_a), &tuple(b, *odd_b), Category::Smooth, &family)?;
            print!("{:>5}", if same { "=" } else { "." });
        }
        println!();
    }

    let bad = Invariants { signature: 8, ..tuple("", true) };
    match decide_stable_equiv(&bad, &bad, Category::Smooth, &family) {
        Err(e) => println!("\nsmooth, signature 8: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
