//! Forests of infinite binary trees on the positive complex quadrant.
//!
//! Two matrices `L, R` in `SL2(N0)` whose images of the quadrant
//! `D0 = {x + yi : x > 0, y > 0}` are disjoint form a *left-right pair*.
//! Drawing an edge from every `z` to `L(z)` and `R(z)` then yields a forest
//! of infinite binary trees; with `L = [[1,0],[1,1]]` and `R = [[1,1],[0,1]]`
//! it is a complex analogue of the Calkin-Wilf tree.
//!
//! Everything is computed exactly over the Gaussian rationals:
//!
//! - [`exactnum`]: the field `Q(i)` and its literal syntax.
//! - [`moebius`]: matrices, words over `{L, R}`, decomposition, membership,
//!   the left-right pair decision and fixed-point classification.
//! - [`forest`]: half disks and crescents, parents and orphans, ancestor
//!   traces, orbit trees and cusps for the pairs `(L_u, R_v)`.
//! - [`cli`]: the `lrforest` command-line front end.
//!
//! ```
//! use lrforest::{forest, GaussianRational, PairParams};
//!
//! let p = PairParams::calkin_wilf();
//! let z: GaussianRational = "1/2+1/4i".parse().unwrap();
//! let trace = forest::trace_to_root(&z, &p, forest::DEFAULT_MAX_STEPS).unwrap();
//! assert_eq!(trace.root.to_string(), "3/5+4/5i");
//! assert_eq!(trace.word.to_string(), "L");
//! ```

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod forest;
pub mod moebius;

pub use error::{Error, Result};
pub use exactnum::{format_number, parse_number, GaussianRational, Rational};
pub use forest::{CuspClass, OrbitTree, PathSpec, RegionIndex, TraceResult};
pub use moebius::{FixedPointClass, Letter, Mat, PairParams, Word};
