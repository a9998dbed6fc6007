#![allow(dead_code)]

use lrforest::exactnum::rat;
use lrforest::{GaussianRational, Letter, Mat, Word};
use rand::Rng;

/// Random point of the quadrant with numerators and denominators in `1..=bound`.
pub fn random_d0(rng: &mut impl Rng, bound: i64) -> GaussianRational {
    GaussianRational::new(
        rat(rng.gen_range(1..=bound), rng.gen_range(1..=bound)),
        rat(rng.gen_range(1..=bound), rng.gen_range(1..=bound)),
    )
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Inverse of `d` modulo `c` in `1..=c`, for coprime `c, d`.
fn inverse_mod(d: i64, c: i64) -> i64 {
    let (mut r0, mut r1) = (c as i128, (d % c) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    let a = t0.rem_euclid(c as i128) as i64;
    if a == 0 {
        c
    } else {
        a
    }
}

/// Random element of `SL2(N0)` with every entry at most `bound`.
///
/// Draws a coprime bottom row `(c, d)`, solves `ad - bc = 1` with `1 ≤ a ≤ c`
/// (so `0 ≤ b < d`), then applies a random symmetry of the determinant.
pub fn random_sl2n0(rng: &mut impl Rng, bound: i64) -> Mat {
    if rng.gen_ratio(1, 20) {
        let b = rng.gen_range(0..=bound);
        return if rng.gen() {
            Mat::from_i64(1, b, 0, 1).unwrap()
        } else {
            Mat::from_i64(1, 0, b, 1).unwrap()
        };
    }
    let (c, d) = loop {
        let c = rng.gen_range(1..=bound);
        let d = rng.gen_range(1..=bound);
        if gcd(c, d) == 1 {
            break (c, d);
        }
    };
    let a = inverse_mod(d, c);
    let b = (a as i128 * d as i128 - 1) / c as i128;
    let b = b as i64;
    let (a, b, c, d) = match rng.gen_range(0..4) {
        0 => (a, b, c, d),
        1 => (a, c, b, d),
        2 => (d, b, c, a),
        _ => (d, c, b, a),
    };
    Mat::from_i64(a, b, c, d).unwrap()
}

/// All elements of `SL2(N0)` with entries in `0..=bound`.
pub fn enumerate_sl2n0(bound: i64) -> Vec<Mat> {
    let mut out = Vec::new();
    for a in 0..=bound {
        for b in 0..=bound {
            for c in 0..=bound {
                for d in 0..=bound {
                    if a * d - b * c == 1 {
                        out.push(Mat::from_i64(a, b, c, d).unwrap());
                    }
                }
            }
        }
    }
    out
}

pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| if rng.gen() { Letter::L } else { Letter::R })
        .collect()
}
