//! Decompose matrices into words over `L_u, R_v` and test membership in the
//! semigroup they generate.
//!
//! ```bash
//! cargo run -p lrforest --example word_decomposition
//! ```

use lrforest::moebius::{decompose_word, is_member, matrix_of_word};
use lrforest::{Mat, PairParams, Word};

fn main() -> lrforest::Result<()> {
    let cases = [
        ("[[3,1],[2,1]]", 1, 1),
        ("[[41,29],[24,17]]", 1, 1),
        ("[[1,2],[2,5]]", 2, 2),
        ("[[1,1],[0,1]]", 2, 2),
        ("[[7,6],[8,7]]", 1, 3),
    ];
    for (literal, u, v) in cases {
        let t: Mat = literal.parse()?;
        let p = PairParams::new(u, v)?;
        match decompose_word(&t, &p)? {
            Some(w) => println!("{t} = word {w} over (L_{u}, R_{v}); member: {}", is_member(&t, &p)),
            None => println!("{t} is not in <L_{u}, R_{v}>"),
        }
    }

    let p = PairParams::new(2, 3)?;
    let w: Word = "RRLRLLLR".parse()?;
    let t = matrix_of_word(&w, &p);
    println!("word {w} at (2,3) has matrix {t}, decomposed back to {}", decompose_word(&t, &p)?.unwrap());
    Ok(())
}
