//! The model forms M_0, M_1 and P(gamma) and their parities.
use stable4::models::gamma_from_tau;
use stable4::{model_m_sigma, model_p, F2Vector, Presentation};

fn main() -> stable4::Result<()> {
    let presentation = Presentation::nil(2)?;
    let group = presentation.group().clone();
    let d = group.h2_dimension();

    let m0 = model_m_sigma(group.clone(), false, F2Vector::zero(d))?;
    let m1 = model_m_sigma(group.clone(), true, F2Vector::zero(d))?;
    println!("M_0: {}\n{}", m0.parity(), m0.form);
    println!("M_1: {}\n{}", m1.parity(), m1.form);

    for tau in F2Vector::all(d) {
        let p = model_p(&presentation, &gamma_from_tau(&group, &tau)?)?;
        println!("P with tau = {tau}: {}, rank {}", p.parity(), p.form.matrix().size());
    }

    let p = model_p(&presentation, &[false, true, false])?;
    println!("\nP(gamma(x) = 1), basis {}:\n{}", p.basis.join(" "), p.form);
    Ok(())
}
