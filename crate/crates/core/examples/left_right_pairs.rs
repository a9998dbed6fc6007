//! Decide whether two matrices form a left-right pair and cross-check the
//! decision with a witness search.
//!
//! ```bash
//! cargo run -p lrforest --example left_right_pairs
//! ```

use lrforest::moebius::{find_overlap_witness, is_left_right_pair};
use lrforest::Mat;

fn main() -> lrforest::Result<()> {
    let cases = [
        ("[[1,0],[1,1]]", "[[1,1],[0,1]]"),
        ("[[1,1],[0,1]]", "[[1,0],[1,1]]"),
        ("[[1,0],[3,1]]", "[[1,2],[0,1]]"),
        ("[[1,0],[1,1]]", "[[1,1],[1,2]]"),
        ("[[2,1],[1,1]]", "[[1,1],[1,2]]"),
        ("[[1,1],[1,2]]", "[[2,1],[1,1]]"),
    ];
    for (l, r) in cases {
        let (l, r): (Mat, Mat) = (l.parse()?, r.parse()?);
        let pair = is_left_right_pair(&l, &r)?;
        let verdict = if pair { "PAIR" } else { "NOT-PAIR" };
        match find_overlap_witness(&l, &r, 12)? {
            Some((z1, z2)) => println!("{l} {r}: {verdict}; L({z1}) = R({z2}) = {}", l.apply(&z1)?),
            None => println!("{l} {r}: {verdict}; no overlap on the grid up to 12"),
        }
    }
    Ok(())
}
