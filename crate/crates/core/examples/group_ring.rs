//! Arithmetic in Z[pi] for the Heisenberg-type group Nil(2).
use std::sync::Arc;

use stable4::{Group, RingElem};

fn main() -> stable4::Result<()> {
    let g = Arc::new(Group::nil(2)?);
    let elem = |s: &str| -> stable4::Result<RingElem> { RingElem::from_word(g.clone(), &g.parse_word(s)?) };

    // y x = a^-2 x y
    println!("y x = {}", g.format_element(&g.parse_element("y x")?));

    let p = &RingElem::integer(g.clone(), 2) - &elem("x")?;
    let q = &elem("y")? + &elem("a^-1")?;
    let pq = &p * &q;
    println!("p = {p}\nq = {q}\np q = {pq}");
    println!("conj(p q) = {}", pq.involution());
    println!("augmentation(p q) = {}", pq.augmentation());

    let s = &pq + &pq.involution();
    println!("p q + conj(p q) in im(1+T): {}", s.in_image_one_plus_t());
    println!("p q in im(1+T): {}", pq.in_image_one_plus_t());
    println!("3 in im(1+T): {}", RingElem::integer(g, 3).in_image_one_plus_t());
    Ok(())
}
