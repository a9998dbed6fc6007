//! The forest `F(L_u, R_v)` on the open quadrant `D0 = {x + yi : x > 0, y > 0}`.
//!
//! Every point `z` has the two children `L_u(z) = z/(uz+1)` and
//! `R_v(z) = z + v`, and at most one parent. Points without a parent are
//! orphans; they are exactly the points with `u(x²+y²) ≥ x` and `x ≤ v`, and
//! each one roots a tree of the forest.
//!
//! The half disks `D_n = {z ∈ D0 : nu(x²+y²) < x}` are nested, and `L_u`
//! shifts the crescent `D_n \ D_{n+1}` onto `D_{n+1} \ D_{n+2}`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, Rational};
use crate::moebius::{Letter, Mat, PairParams, Word};

pub const DEFAULT_MAX_STEPS: usize = 10_000;
pub const DEFAULT_DEPTH_CAP: usize = 20;

// Subtrees at least this deep are built on the rayon pool.
const PARALLEL_DEPTH: usize = 12;

pub fn in_d0(z: &GaussianRational) -> bool {
    z.re().is_positive() && z.im().is_positive()
}

fn require_d0(z: &GaussianRational) -> Result<()> {
    if in_d0(z) {
        Ok(())
    } else {
        Err(Error::NotInD0(z.to_string()))
    }
}

fn require_positive(name: &str, value: u64) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParams(format!("{name} must be positive")));
    }
    Ok(())
}

/// Membership in the open half disk `D_n`: `nu(x²+y²) < x`.
pub fn in_dn(z: &GaussianRational, u: u64, n: u64) -> Result<bool> {
    require_d0(z)?;
    require_positive("u", u)?;
    require_positive("n", n)?;
    let scale = Rational::from_integer(BigInt::from(n) * BigInt::from(u));
    Ok(scale * z.norm_sq() < *z.re())
}

/// The index `n` of the half crescent `D_n \ D_{n+1}` containing a point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegionIndex(BigInt);

impl RegionIndex {
    pub fn n(&self) -> &BigInt {
        &self.0
    }
}

impl From<u64> for RegionIndex {
    fn from(n: u64) -> Self {
        RegionIndex(n.into())
    }
}

/// The largest `n ≥ 0` with `n < x / (u(x²+y²))`.
///
/// A point with `t = x/(u|z|²)` exactly equal to an integer `n+1` lies on
/// the boundary of `D_{n+1}` and therefore belongs to crescent `n`.
pub fn crescent_index(z: &GaussianRational, u: u64) -> Result<RegionIndex> {
    require_d0(z)?;
    require_positive("u", u)?;
    let t = z.re() / (Rational::from_integer(u.into()) * z.norm_sq());
    Ok(RegionIndex(t.ceil().to_integer() - BigInt::one()))
}

/// `(L_u(z), R_v(z))`.
pub fn children(z: &GaussianRational, p: &PairParams) -> Result<(GaussianRational, GaussianRational)> {
    require_d0(z)?;
    Ok((child(z, Letter::L, p), child(z, Letter::R, p)))
}

fn child(z: &GaussianRational, side: Letter, p: &PairParams) -> GaussianRational {
    p.generator(side)
        .apply(z)
        .expect("generators never vanish on the quadrant")
}

/// The parent of `z` together with the side `z` hangs on, or `None` for an
/// orphan.
///
/// `R_v^-1(z) = z - v` stays in the quadrant iff `x > v`, and
/// `L_u^-1(z) = z/(1 - uz)` does iff `z ∈ D_1`. At most one holds since
/// points of `D_1` have real part below `1/u ≤ v`.
pub fn parent(z: &GaussianRational, p: &PairParams) -> Result<Option<(GaussianRational, Letter)>> {
    require_d0(z)?;
    let v = Rational::from_integer(p.v().into());
    if *z.re() > v {
        return Ok(Some((z - &GaussianRational::from_rational(v), Letter::R)));
    }
    if in_dn(z, p.u(), 1)? {
        let up = p
            .inverse_generator(Letter::L)
            .apply(z)
            .expect("1 - uz is nonzero off the real axis");
        return Ok(Some((up, Letter::L)));
    }
    Ok(None)
}

/// Orphan test from the closed form of the fundamental domain:
/// `u(x²+y²) ≥ x` and `x ≤ v`.
pub fn is_orphan(z: &GaussianRational, p: &PairParams) -> Result<bool> {
    require_d0(z)?;
    let u = Rational::from_integer(p.u().into());
    let v = Rational::from_integer(p.v().into());
    Ok(u * z.norm_sq() >= *z.re() && *z.re() <= v)
}

/// The ancestor chain of a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceResult {
    /// The orphan rooting the tree that contains the query.
    pub root: GaussianRational,
    /// Path from `root` down to the query, in application order.
    pub word: Word,
    /// The query, its parent, and so on up to `root`.
    pub chain: Vec<GaussianRational>,
}

impl TraceResult {
    pub fn query(&self) -> &GaussianRational {
        self.chain.first().expect("chain contains at least the query")
    }
}

/// Climbs parents until an orphan is reached.
///
/// Stops with [`Error::StepLimit`] after `max_steps` parent steps; every
/// point of the quadrant descends from an orphan, so hitting the limit means
/// the input is huge or something is wrong.
pub fn trace_to_root(z: &GaussianRational, p: &PairParams, max_steps: usize) -> Result<TraceResult> {
    require_d0(z)?;
    let mut chain = vec![z.clone()];
    let mut letters = Vec::new();
    let mut current = z.clone();
    while let Some((up, side)) = parent(&current, p)? {
        if letters.len() == max_steps {
            return Err(Error::StepLimit(max_steps));
        }
        letters.push(side);
        chain.push(up.clone());
        current = up;
    }
    letters.reverse();
    Ok(TraceResult {
        root: current,
        word: Word::new(letters),
        chain,
    })
}

/// Whether two points lie in the same tree, i.e. share a root orphan.
pub fn same_tree(z1: &GaussianRational, z2: &GaussianRational, p: &PairParams) -> Result<bool> {
    let a = trace_to_root(z1, p, DEFAULT_MAX_STEPS)?;
    let b = trace_to_root(z2, p, DEFAULT_MAX_STEPS)?;
    Ok(a.root == b.root)
}

/// The vertex reached from `root` by following `word`.
pub fn follow(root: &GaussianRational, word: &Word, p: &PairParams) -> Result<GaussianRational> {
    require_d0(root)?;
    Ok(word
        .letters()
        .iter()
        .fold(root.clone(), |z, &l| child(&z, l, p)))
}

/// A node of a truncated orbit tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitNode {
    pub value: GaussianRational,
    pub left: Option<Box<OrbitNode>>,
    pub right: Option<Box<OrbitNode>>,
}

impl OrbitNode {
    fn build(value: GaussianRational, depth: usize, p: &PairParams) -> OrbitNode {
        if depth == 0 {
            return OrbitNode {
                value,
                left: None,
                right: None,
            };
        }
        let lv = child(&value, Letter::L, p);
        let rv = child(&value, Letter::R, p);
        let (left, right) = if depth >= PARALLEL_DEPTH {
            rayon::join(
                || OrbitNode::build(lv, depth - 1, p),
                || OrbitNode::build(rv, depth - 1, p),
            )
        } else {
            (
                OrbitNode::build(lv, depth - 1, p),
                OrbitNode::build(rv, depth - 1, p),
            )
        };
        OrbitNode {
            value,
            left: Some(Box::new(left)),
            right: Some(Box::new(right)),
        }
    }

    fn walk<'a>(&'a self, path: &mut Vec<Letter>, visit: &mut impl FnMut(&'a OrbitNode, &[Letter])) {
        visit(self, path);
        for (side, sub) in [(Letter::L, &self.left), (Letter::R, &self.right)] {
            if let Some(sub) = sub {
                path.push(side);
                sub.walk(path, visit);
                path.pop();
            }
        }
    }
}

/// The complete binary tree of descendants of `root` down to `depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTree {
    root: OrbitNode,
    depth: usize,
}

impl OrbitTree {
    pub fn root(&self) -> &OrbitNode {
        &self.root
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn node_count(&self) -> usize {
        (1 << (self.depth + 1)) - 1
    }

    /// `(word, value)` for every node in preorder, left before right.
    pub fn nodes(&self) -> Vec<(Word, &GaussianRational)> {
        let mut out = Vec::with_capacity(self.node_count());
        self.root
            .walk(&mut Vec::new(), &mut |n, path| out.push((Word::new(path.to_vec()), &n.value)));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.root).expect("orbit nodes serialize")
    }

    /// Graphviz rendering with nodes numbered in preorder and edges labelled
    /// by generator.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph orbit {\n");
        let mut ids: Vec<usize> = Vec::new();
        let mut next = 0usize;
        self.root.walk(&mut Vec::new(), &mut |n, path| {
            let id = next;
            next += 1;
            ids.truncate(path.len());
            let _ = writeln!(out, "  n{id} [label=\"{}\"];", n.value);
            if let (Some(&up), Some(side)) = (ids.last(), path.last()) {
                let _ = writeln!(out, "  n{up} -> n{id} [label=\"{side}\"];");
            }
            ids.push(id);
        });
        out.push_str("}\n");
        out
    }
}

impl Serialize for OrbitTree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.root.serialize(serializer)
    }
}

pub fn orbit(z: &GaussianRational, p: &PairParams, depth: usize) -> Result<OrbitTree> {
    orbit_with_cap(z, p, depth, DEFAULT_DEPTH_CAP)
}

pub fn orbit_with_cap(z: &GaussianRational, p: &PairParams, depth: usize, cap: usize) -> Result<OrbitTree> {
    require_d0(z)?;
    if depth > cap {
        return Err(Error::DepthCap { depth, cap });
    }
    Ok(OrbitTree {
        root: OrbitNode::build(z.clone(), depth, p),
        depth,
    })
}

/// Limit behaviour of an infinite path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CuspClass {
    Zero,
    Infinity,
    Divergent,
}

impl std::fmt::Display for CuspClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CuspClass::Zero => "0",
            CuspClass::Infinity => "infinity",
            CuspClass::Divergent => "divergent",
        })
    }
}

/// An infinite path, described by its eventual behaviour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathSpec {
    /// A finite prefix followed by one letter repeated forever.
    EventuallyConstant { prefix: Word, tail: Letter },
    /// Both `L` and `R` are taken infinitely often.
    BothInfinitelyOften,
}

/// The cusp a path converges to, if any.
///
/// A tail of `R` translates to `∞`, a tail of `L` contracts to `0`, and a
/// path alternating infinitely often keeps jumping between `D_1` and steps of
/// length `v`, so it has no limit. The answer does not depend on the prefix.
pub fn classify_path(spec: &PathSpec) -> CuspClass {
    match spec {
        PathSpec::EventuallyConstant { tail: Letter::R, .. } => CuspClass::Infinity,
        PathSpec::EventuallyConstant { tail: Letter::L, .. } => CuspClass::Zero,
        PathSpec::BothInfinitelyOften => CuspClass::Divergent,
    }
}

/// `z` after `n` applications of the generator `side`.
pub fn iterate(z: &GaussianRational, side: Letter, n: u64, p: &PairParams) -> Result<GaussianRational> {
    require_d0(z)?;
    let mut w = z.clone();
    for _ in 0..n {
        w = child(&w, side, p);
    }
    Ok(w)
}

/// `|L_u^n(z)|²`, checked against the half-disk bound `|w|² < 1/(nu)²`
/// that holds for every `w ∈ D_n`.
pub fn lu_iterate_bound(z: &GaussianRational, u: u64, n: u64) -> Result<Rational> {
    require_positive("u", u)?;
    require_positive("n", n)?;
    let p = PairParams::new(u, 1)?;
    let w = iterate(z, Letter::L, n, &p)?;
    let value = w.norm_sq();
    let nu = BigInt::from(n) * BigInt::from(u);
    let bound = Rational::new(BigInt::one(), &nu * &nu);
    if value >= bound {
        return Err(Error::BoundViolated(value.to_string()));
    }
    Ok(value)
}

/// `L_u^n` as a single matrix, which equals `L_{nu}`.
pub fn lu_power(u: u64, n: u64) -> Mat {
    Mat::lower(u * n)
}
