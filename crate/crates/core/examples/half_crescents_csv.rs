//! Boundary data for plotting the half disks `D_1 .. D_4` and the line
//! `x = v`, in the CSV layout of `lrforest regions`.
//!
//! ```bash
//! cargo run -p lrforest --example half_crescents_csv -- 2 > crescents.csv
//! ```

use lrforest::cli::{regions_csv, PairArgs};

fn main() -> lrforest::Result<()> {
    let u = std::env::args().nth(1).map_or(1, |a| a.parse().expect("positive integer"));
    print!("{}", regions_csv(&PairArgs { u, v: u }, 4, 33)?);
    Ok(())
}
