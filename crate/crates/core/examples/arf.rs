//! Arf invariants of quadratic refinements over F_2.
use stable4::{arf, symplectic_basis, F2Matrix, F2Vector, QuadraticFormF2};

fn main() -> stable4::Result<()> {
    let b = QuadraticFormF2::standard_symplectic(2);
    for values in ["0000", "1100", "1111", "1010"] {
        let q = QuadraticFormF2::new(b.clone(), values.parse()?)?;
        println!("q on basis = {values}: arf = {}", u8::from(arf(&q)?));
    }

    let mixed = F2Matrix::from_bitstrings(&["0011", "0001", "1000", "1100"])?;
    let basis = symplectic_basis(&mixed)?;
    let names: Vec<String> = basis.iter().map(F2Vector::to_string).collect();
    println!("symplectic basis of {:?}: {}", mixed.to_bitstrings(), names.join(" "));
    Ok(())
}
