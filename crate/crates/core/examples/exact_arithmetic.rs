//! Exact Gaussian-rational arithmetic and the number literal syntax.
//!
//! ```bash
//! cargo run -p lrforest --example exact_arithmetic
//! ```

use lrforest::{parse_number, GaussianRational};

fn main() -> lrforest::Result<()> {
    let a: GaussianRational = "3/5+4/5i".parse()?;
    let b = parse_number("2/5+1/5i")?;

    println!("a + b     = {}", &a + &b);
    println!("a * b     = {}", &a * &b);
    println!("a / b     = {}", a.div(&b)?);
    println!("|a|^2     = {}", a.norm_sq());
    println!("conj(a)   = {}", a.conj());
    println!("as JSON   = {}", serde_json::to_string(&a).unwrap());

    match parse_number("1/0+2i") {
        Ok(z) => println!("unexpected: {z}"),
        Err(e) => println!("rejected  : {e}"),
    }
    Ok(())
}
