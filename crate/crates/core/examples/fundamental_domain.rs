//! Half crescents, parents and the fundamental domain of `(L_u, R_v)`.
//!
//! Prints a coarse character map of the region `0 < x ≤ 3, 0 < y ≤ 1.5`:
//! `#` marks orphans, `R` points with a right parent and digits the crescent
//! index of points with a left parent.
//!
//! ```bash
//! cargo run -p lrforest --example fundamental_domain -- 2 2
//! ```

use lrforest::exactnum::rat;
use lrforest::forest;
use lrforest::{GaussianRational, Letter, PairParams};

fn main() -> lrforest::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("positive integer"));
    let u = args.next().unwrap_or(1);
    let v = args.next().unwrap_or(1);
    let p = PairParams::new(u, v)?;
    println!("u = {u}, v = {v}; orphans satisfy u(x^2+y^2) >= x and x <= v");

    for row in (1..=15).rev() {
        let line: String = (1..=60)
            .map(|col| {
                let z = GaussianRational::new(rat(col, 20), rat(row, 10));
                match forest::parent(&z, &p).expect("grid lies in D0") {
                    None => '#',
                    Some((_, Letter::R)) => 'R',
                    Some((_, Letter::L)) => {
                        let n = forest::crescent_index(&z, u).expect("grid lies in D0");
                        char::from_digit(n.n().try_into().unwrap_or(9u32).min(9), 10).unwrap()
                    }
                }
            })
            .collect();
        println!("{line}");
    }
    Ok(())
}
