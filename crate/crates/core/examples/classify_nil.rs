//! Classification tables for the central extensions Nil(z).
use stable4::{classify, family_nil, Category, WType};

fn main() -> stable4::Result<()> {
    for z in 1..=4 {
        let table = classify(&WType::Spin, Category::Smooth, &family_nil(z)?)?;
        println!("{}", table.to_table());
    }
    let family = family_nil(2)?;
    for w in [WType::TotallyNonSpin, "100".parse()?] {
        let table = classify(&w, Category::Topological, &family)?;
        println!("{}", table.to_table());
    }
    Ok(())
}
