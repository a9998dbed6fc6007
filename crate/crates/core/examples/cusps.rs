//! Infinite paths: repeated `L_u` contracts to 0, repeated `R_v` escapes to
//! infinity, and paths mixing both forever have no limit.
//!
//! ```bash
//! cargo run -p lrforest --example cusps
//! ```

use lrforest::forest::{self, classify_path};
use lrforest::{GaussianRational, Letter, PairParams, PathSpec};

fn main() -> lrforest::Result<()> {
    let (u, v) = (2, 3);
    let p = PairParams::new(u, v)?;
    let z: GaussianRational = "5/3+7/2i".parse()?;

    for n in [1, 2, 5, 10, 50] {
        let l = forest::iterate(&z, Letter::L, n, &p)?;
        let r = forest::iterate(&z, Letter::R, n, &p)?;
        let (lx, ly) = l.to_f64_pair();
        println!(
            "n = {n:>2}: |L^n z|^2 = {} < 1/{}, L^n z ~ {lx:.3e}+{ly:.3e}i; R^n z = {r}",
            forest::lu_iterate_bound(&z, u, n)?,
            (n * u) * (n * u),
        );
    }

    let prefix: lrforest::Word = "RLR".parse()?;
    for spec in [
        PathSpec::EventuallyConstant { prefix: prefix.clone(), tail: Letter::L },
        PathSpec::EventuallyConstant { prefix, tail: Letter::R },
        PathSpec::BothInfinitelyOften,
    ] {
        println!("{spec:?} -> {}", classify_path(&spec));
    }
    Ok(())
}
