//! Determinant-one integer matrices acting on the quadrant by Möbius
//! transformations, words over the two generators `L_u`, `R_v`, and the
//! decision procedures built on them.
//!
//! # Word convention
//!
//! A [`Word`] lists letters in *application order*: the vertex reached from
//! a root `w` by the word `t1 t2 .. tk` is `tk(..t2(t1(w)))`, so the matrix
//! of the word is the product `Tk · .. · T2 · T1`. The word `LLR` at
//! `u = v = 1` therefore means "apply `L`, then `L`, then `R`" and has
//! matrix `R·L·L = [[3,1],[2,1]]`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, Rational};

/// A 2×2 integer matrix of determinant one.
///
/// Entries may be negative so that inverses are representable; [`Mat::nonneg`]
/// reports membership in `SL2(N0)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mat {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::InvalidMatrix(format!(
                "[[{a},{b}],[{c},{d}]] has determinant {det}, expected 1"
            )));
        }
        Ok(Mat { a, b, c, d })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Mat::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Mat {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// `L_u = [[1,0],[u,1]]`, i.e. `z ↦ z / (uz + 1)`.
    pub fn lower(u: u64) -> Self {
        Mat {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: u.into(),
            d: BigInt::one(),
        }
    }

    /// `R_v = [[1,v],[0,1]]`, i.e. `z ↦ z + v`.
    pub fn upper(v: u64) -> Self {
        Mat {
            a: BigInt::one(),
            b: v.into(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// True when every entry is nonnegative, i.e. the matrix lies in `SL2(N0)`.
    pub fn nonneg(&self) -> bool {
        self.entries().iter().all(|e| !e.is_negative())
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity()
    }

    pub fn entry_sum(&self) -> BigInt {
        &self.a + &self.b + &self.c + &self.d
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn inverse(&self) -> Mat {
        Mat {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// Evaluates `(az + b) / (cz + d)` exactly.
    ///
    /// Multiplying through by the conjugate of `cz + d` and using
    /// `ad - bc = 1` gives
    /// `Re = (ac|z|² + (ad+bc)x + bd) / |cz+d|²` and `Im = y / |cz+d|²`.
    pub fn apply(&self, z: &GaussianRational) -> Result<GaussianRational> {
        let (x, y) = (z.re(), z.im());
        let c = Rational::from_integer(self.c.clone());
        let d = Rational::from_integer(self.d.clone());
        let den_re = &c * x + d;
        let den_im = &c * y;
        let den = &den_re * &den_re + &den_im * &den_im;
        if den.is_zero() {
            return Err(Error::Singular);
        }
        let ac = Rational::from_integer(&self.a * &self.c);
        let ad_bc = Rational::from_integer(&self.a * &self.d + &self.b * &self.c);
        let bd = Rational::from_integer(&self.b * &self.d);
        let re = ac * z.norm_sq() + ad_bc * x + bd;
        Ok(GaussianRational::new(re / &den, y / den))
    }

    fn require_sl2n0(&self, what: &str) -> Result<()> {
        if !self.nonneg() {
            return Err(Error::InvalidMatrix(format!(
                "{what} {self} has a negative entry"
            )));
        }
        Ok(())
    }
}

/// Matrix product `s · t`; as maps, `compose(s, t)(z) = s(t(z))`.
pub fn compose(s: &Mat, t: &Mat) -> Mat {
    s * t
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, t: &Mat) -> Mat {
        Mat {
            a: &self.a * &t.a + &self.b * &t.c,
            b: &self.a * &t.b + &self.b * &t.d,
            c: &self.c * &t.a + &self.d * &t.c,
            d: &self.c * &t.b + &self.d * &t.d,
        }
    }
}

impl Mul for Mat {
    type Output = Mat;
    fn mul(self, t: Mat) -> Mat {
        &self * &t
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `[[a,b],[c,d]]`; whitespace between tokens is ignored.
impl FromStr for Mat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::with_capacity(4);
        let mut pos = 0;
        let bytes = s.as_bytes();
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let expect = |pos: &mut usize, ch: u8| -> Result<()> {
            skip_ws(pos);
            if bytes.get(*pos) == Some(&ch) {
                *pos += 1;
                Ok(())
            } else {
                Err(Error::parse(*pos, format!("expected '{}'", ch as char)))
            }
        };
        let integer = |pos: &mut usize| -> Result<BigInt> {
            skip_ws(pos);
            let start = *pos;
            if matches!(bytes.get(*pos), Some(b'-') | Some(b'+')) {
                *pos += 1;
            }
            let digits = *pos;
            while bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
                *pos += 1;
            }
            if digits == *pos {
                return Err(Error::parse(digits, "expected integer"));
            }
            Ok(s[start..*pos].parse().expect("validated integer"))
        };

        expect(&mut pos, b'[')?;
        for row in 0..2 {
            if row == 1 {
                expect(&mut pos, b',')?;
            }
            expect(&mut pos, b'[')?;
            entries.push(integer(&mut pos)?);
            expect(&mut pos, b',')?;
            entries.push(integer(&mut pos)?);
            expect(&mut pos, b']')?;
        }
        expect(&mut pos, b']')?;
        skip_ws(&mut pos);
        if pos != bytes.len() {
            return Err(Error::parse(pos, "trailing input"));
        }
        let mut it = entries.into_iter();
        let mut next = || it.next().expect("four entries");
        Mat::new(next(), next(), next(), next())
    }
}

/// A generator letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word over `{L, R}` in application order (see the module docs).
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// All words of exactly `len` letters, in lexicographic order (`L < R`).
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        (0u64..1 << len).map(move |bits| {
            Word(
                (0..len)
                    .map(|i| {
                        if bits >> (len - 1 - i) & 1 == 0 {
                            Letter::L
                        } else {
                            Letter::R
                        }
                    })
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                'L' => Ok(Letter::L),
                'R' => Ok(Letter::R),
                other => Err(Error::parse(i, format!("unexpected letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// The generator pair `(L_u, R_v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairParams {
    u: u64,
    v: u64,
    left: Mat,
    right: Mat,
    left_inv: Mat,
    right_inv: Mat,
}

impl PairParams {
    pub fn new(u: u64, v: u64) -> Result<Self> {
        if u == 0 || v == 0 {
            return Err(Error::InvalidParams(format!(
                "u and v must be positive, got u={u}, v={v}"
            )));
        }
        let left = Mat::lower(u);
        let right = Mat::upper(v);
        Ok(PairParams {
            u,
            v,
            left_inv: left.inverse(),
            right_inv: right.inverse(),
            left,
            right,
        })
    }

    /// The complex Calkin-Wilf case `u = v = 1`.
    pub fn calkin_wilf() -> Self {
        PairParams::new(1, 1).expect("u = v = 1 is valid")
    }

    pub fn u(&self) -> u64 {
        self.u
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn left(&self) -> &Mat {
        &self.left
    }

    pub fn right(&self) -> &Mat {
        &self.right
    }

    pub fn generator(&self, letter: Letter) -> &Mat {
        match letter {
            Letter::L => &self.left,
            Letter::R => &self.right,
        }
    }

    pub fn inverse_generator(&self, letter: Letter) -> &Mat {
        match letter {
            Letter::L => &self.left_inv,
            Letter::R => &self.right_inv,
        }
    }
}

/// The matrix `Tk · .. · T1` of a word `t1 .. tk`; the empty word gives `I`.
pub fn matrix_of_word(w: &Word, p: &PairParams) -> Mat {
    w.letters()
        .iter()
        .fold(Mat::identity(), |acc, &l| p.generator(l) * &acc)
}

/// Recovers the word of `t` over `{L_u, R_v}`, or `None` when `t` is not in
/// the monoid they generate.
///
/// Peels the outermost generator by left-multiplying with `L_u^-1` or
/// `R_v^-1` and keeps whichever results stay nonnegative, backtracking if
/// more than one does. Each successful peel strictly lowers the entry sum, so
/// the search depth is bounded by the entry sum of `t`.
pub fn decompose_word(t: &Mat, p: &PairParams) -> Result<Option<Word>> {
    t.require_sl2n0("matrix")?;

    // (matrix, path length before this node, letter peeled to reach it)
    let mut stack: Vec<(Mat, usize, Option<Letter>)> = vec![(t.clone(), 0, None)];
    let mut peeled: Vec<Letter> = Vec::new();
    while let Some((m, len, letter)) = stack.pop() {
        peeled.truncate(len);
        if let Some(l) = letter {
            peeled.push(l);
        }
        if m.is_identity() {
            peeled.reverse();
            return Ok(Some(Word(peeled)));
        }
        for l in [Letter::R, Letter::L] {
            let next = p.inverse_generator(l) * &m;
            if next.nonneg() {
                stack.push((next, peeled.len(), Some(l)));
            }
        }
    }
    Ok(None)
}

/// Membership of `t` in the semigroup `<L_u, R_v>`.
///
/// The identity is not a member: the semigroup is generated without a unit.
pub fn is_member(t: &Mat, p: &PairParams) -> bool {
    if !t.nonneg() || t.is_identity() {
        return false;
    }
    matches!(decompose_word(t, p), Ok(Some(_)))
}

fn require_generator_pair(l: &Mat, r: &Mat) -> Result<()> {
    l.require_sl2n0("L")?;
    r.require_sl2n0("R")?;
    if l.is_identity() || r.is_identity() {
        return Err(Error::InvalidMatrix(
            "left-right pair members must differ from the identity".into(),
        ));
    }
    Ok(())
}

/// Decides whether `L(D0)` and `R(D0)` are disjoint.
///
/// With `M = L^-1 R = [[a,b],[c,d]]` the images meet exactly when `M` maps
/// some point of the quadrant into the quadrant, i.e. when
/// `g(x, y) = ac(x²+y²) + (ad+bc)x + bd` is positive somewhere on `x, y > 0`.
/// Because `det M = 1`, the maximum of `g` along `y → 0` is `1 / (4|ac|)`
/// whenever `ac < 0` and the vertex lies in `x > 0`, so `g` stays
/// nonpositive precisely when all three coefficients are nonpositive.
pub fn is_left_right_pair(l: &Mat, r: &Mat) -> Result<bool> {
    require_generator_pair(l, r)?;
    let m = &l.inverse() * r;
    let quad = &m.a * &m.c;
    let lin = &m.a * &m.d + &m.b * &m.c;
    let constant = &m.b * &m.d;
    Ok(!quad.is_positive() && !lin.is_positive() && !constant.is_positive())
}

/// Grid search for `z1, z2` in the quadrant with `L(z1) = R(z2)`.
///
/// Scans `z2 = p/q + (r/q)i` for `q`, then `p`, then `r` in `1..=bound` and
/// returns the first `(z1, z2)` with `z1 = L^-1 R (z2)` in the quadrant.
pub fn find_overlap_witness(
    l: &Mat,
    r: &Mat,
    search_bound: u64,
) -> Result<Option<(GaussianRational, GaussianRational)>> {
    require_generator_pair(l, r)?;
    let m = &l.inverse() * r;
    for q in 1..=search_bound {
        for p in 1..=search_bound {
            for s in 1..=search_bound {
                let z2 = GaussianRational::new(
                    Rational::new(p.into(), q.into()),
                    Rational::new(s.into(), q.into()),
                );
                let z1 = m.apply(&z2)?;
                if z1.re().is_positive() && z1.im().is_positive() {
                    if l.apply(&z1)? != r.apply(&z2)? {
                        unreachable!("L(M z) = R z for M = L^-1 R");
                    }
                    return Ok(Some((z1, z2)));
                }
            }
        }
    }
    Ok(None)
}

/// Classification of the fixed-point equation `cz² + (d-a)z - b = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedPointClass {
    /// Every point is fixed.
    Identity,
    /// `c = 0`: the map is `z ↦ z + shift`, fixing only `∞`.
    Translation { shift: BigInt },
    /// `c ≠ 0` and `(a+d)² - 4 = 0`: one real double root.
    ParabolicReal { discriminant: BigInt },
    /// `c ≠ 0` and `(a+d)² - 4 > 0`: two distinct real roots.
    HyperbolicReal { discriminant: BigInt },
}

impl FixedPointClass {
    /// Whether the map has a fixed point inside the open quadrant.
    ///
    /// The identity fixes everything; every other class has only real or
    /// infinite fixed points.
    pub fn has_fixed_point_in_d0(&self) -> bool {
        matches!(self, FixedPointClass::Identity)
    }

    pub fn discriminant(&self) -> Option<&BigInt> {
        match self {
            FixedPointClass::ParabolicReal { discriminant }
            | FixedPointClass::HyperbolicReal { discriminant } => Some(discriminant),
            _ => None,
        }
    }
}

pub fn fixed_point_class(t: &Mat) -> Result<FixedPointClass> {
    t.require_sl2n0("matrix")?;
    if t.is_identity() {
        return Ok(FixedPointClass::Identity);
    }
    if t.c.is_zero() {
        return Ok(FixedPointClass::Translation { shift: t.b.clone() });
    }
    let tr = t.trace();
    let discriminant = &tr * &tr - BigInt::from(4);
    // a + d < 2 would force ad = 0 = 1 + bc.
    debug_assert!(!discriminant.is_negative());
    Ok(if discriminant.is_zero() {
        FixedPointClass::ParabolicReal { discriminant }
    } else {
        FixedPointClass::HyperbolicReal { discriminant }
    })
}
