//! Fox derivatives of a word, in the free group and in a quotient.
use std::sync::Arc;

use stable4::{fox_derivative, Group, Presentation, RingElem};

fn main() -> stable4::Result<()> {
    let free = Arc::new(Group::free(["x", "y"])?);
    let w = free.parse_word("x y x^-1 y^-1")?;
    for (j, name) in free.generators().iter().enumerate() {
        println!("D_{name}({}) = {}", free.format_word(&w), fox_derivative(&w, j, &free)?);
    }

    // fundamental identity: sum_j D_j(w) (g_j - 1) = w - 1
    let one = RingElem::one(free.clone());
    let mut sum = RingElem::zero(free.clone());
    for j in 0..free.rank() {
        let g = RingElem::group_element(free.clone(), free.generator_power(j, 1));
        sum = &sum + &(&fox_derivative(&w, j, &free)? * &(&g - &one));
    }
    println!("sum = {sum}");

    let nil = Presentation::nil(2)?;
    println!("\nFox matrix of the Nil(2) presentation:");
    for (r, row) in nil.relators().iter().zip(nil.fox_jacobian()?) {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        println!("  {:<24} | {}", nil.group().format_word(r), cells.join(" | "));
    }
    Ok(())
}
