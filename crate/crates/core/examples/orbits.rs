//! Orbits of H_2(B pi; Z/2) under Out(pi) and stabilizers of w.
use stable4::{family_nil, family_z3, group_closure, orbits, F2Vector};

fn main() -> stable4::Result<()> {
    for family in [family_z3(), family_nil(3)?, family_nil(4)?] {
        let group = group_closure(&family.out_generators, 1 << 20)?;
        println!("{} (d = {}, |image of Out| = {})", family.name, family.d, group.len());
        for orbit in orbits(family.d, &family.out_generators, None)? {
            let members: Vec<String> = orbit.iter().map(F2Vector::to_string).collect();
            println!("  {}", members.join(" "));
        }
    }

    let family = family_nil(4)?;
    let w: F2Vector = "001".parse()?;
    let stabilizer = family.stabilizer(&w)?;
    println!("\nstabilizer of w = {w} in nil:4 has {} elements", stabilizer.len());
    let kernel = |x: &F2Vector| !w.dot(x);
    for orbit in orbits(family.d, &stabilizer, Some(&kernel))? {
        println!("  kernel orbit with representative {} (size {})", orbit[0], orbit.len());
    }
    Ok(())
}
