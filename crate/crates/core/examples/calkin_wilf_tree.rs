//! The first generations of the complex Calkin-Wilf tree, both as linear
//! fractional maps `(az + b)/(cz + d)` and evaluated at a concrete point.
//!
//! ```bash
//! cargo run -p lrforest --example calkin_wilf_tree
//! cargo run -p lrforest --example calkin_wilf_tree -- dot | dot -Tsvg > tree.svg
//! ```

use lrforest::moebius::matrix_of_word;
use lrforest::{forest, GaussianRational, Mat, PairParams, Word};

fn form(t: &Mat) -> String {
    let side = |x: &num_bigint::BigInt, y: &num_bigint::BigInt| match (x.to_string().as_str(), y.to_string().as_str()) {
        ("0", y) => y.to_string(),
        ("1", "0") => "z".to_string(),
        (x, "0") => format!("{x}z"),
        ("1", y) => format!("z+{y}"),
        (x, y) => format!("{x}z+{y}"),
    };
    let wrap = |s: String| if s.contains('+') { format!("({s})") } else { s };
    let num = side(t.a(), t.b());
    let den = side(t.c(), t.d());
    if den == "1" {
        num
    } else {
        format!("{}/{}", wrap(num), wrap(den))
    }
}

fn main() -> lrforest::Result<()> {
    let p = PairParams::calkin_wilf();
    let z: GaussianRational = "1+1i".parse()?;

    if std::env::args().nth(1).as_deref() == Some("dot") {
        print!("{}", forest::orbit(&z, &p, 3)?.to_dot());
        return Ok(());
    }

    for depth in 0..=3 {
        let row: Vec<String> = Word::all_of_length(depth)
            .map(|w| form(&matrix_of_word(&w, &p)))
            .collect();
        println!("depth {depth}: {}", row.join("   "));
    }

    println!();
    println!("orbit of {z} to depth 2:");
    for (word, value) in forest::orbit(&z, &p, 2)?.nodes() {
        let label = if word.is_empty() { "root".to_string() } else { word.to_string() };
        println!("  {label:>4}  {value}");
    }
    Ok(())
}
