//! Walk a point up to its orphan root and decide whether points share a tree.
//!
//! ```bash
//! cargo run -p lrforest --example trace_to_root -- 13/37+4/37i
//! ```

use lrforest::forest::{self, DEFAULT_MAX_STEPS};
use lrforest::{GaussianRational, PairParams};

fn main() -> lrforest::Result<()> {
    let p = PairParams::calkin_wilf();
    let z: GaussianRational = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "17/5+2/9i".into())
        .parse()?;

    let trace = forest::trace_to_root(&z, &p, DEFAULT_MAX_STEPS)?;
    println!("query : {z}");
    for (i, w) in trace.chain.iter().enumerate().skip(1) {
        println!("  up {i:>3}: {w}");
    }
    println!("root  : {} (orphan: {})", trace.root, forest::is_orphan(&trace.root, &p)?);
    println!("word  : {:?} from the root", trace.word.to_string());
    println!("json  : {}", serde_json::to_string(&trace).unwrap());

    let others = ["1+1i", "3/5+4/5i", "1/2+1/4i", "2+1i"];
    for other in others {
        let w: GaussianRational = other.parse()?;
        println!("same tree as {other:>9}? {}", forest::same_tree(&z, &w, &p)?);
    }
    Ok(())
}
