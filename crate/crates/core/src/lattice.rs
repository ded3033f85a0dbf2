//! Integral vectors in the rank-3 lattice, cone determinants and the
//! Hirzebruch–Jung regular subdivision of 2-dimensional cones.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use crate::error::LatticeError;

/// An integral vector of the rank-3 lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct LatVec(pub [i64; 3]);

impl LatVec {
    pub const E1: LatVec = LatVec([1, 0, 0]);
    pub const E2: LatVec = LatVec([0, 1, 0]);
    pub const E3: LatVec = LatVec([0, 0, 1]);

    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        LatVec([a, b, c])
    }

    pub fn axis(i: usize) -> Self {
        let mut v = [0; 3];
        v[i] = 1;
        LatVec(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 3]
    }

    pub fn dot(&self, other: &LatVec) -> i64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn cross(&self, other: &LatVec) -> LatVec {
        let [a1, a2, a3] = self.0;
        let [b1, b2, b3] = other.0;
        LatVec([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1])
    }

    /// Gcd of the absolute values of the coordinates (0 for the zero vector).
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &c| g.gcd(&c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    /// Exact componentwise division; `None` unless `k` divides every entry.
    pub fn div_exact(&self, k: i64) -> Option<LatVec> {
        if k == 0 || self.0.iter().any(|c| c % k != 0) {
            return None;
        }
        Some(LatVec([self.0[0] / k, self.0[1] / k, self.0[2] / k]))
    }

    /// The unique `k` with `self = k * base`, if it exists.
    pub fn multiple_of(&self, base: &LatVec) -> Option<i64> {
        let i = base.0.iter().position(|&c| c != 0)?;
        if self.0[i] % base.0[i] != 0 {
            return None;
        }
        let k = self.0[i] / base.0[i];
        (*base * k == *self).then_some(k)
    }
}

impl fmt::Display for LatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl Add for LatVec {
    type Output = LatVec;
    fn add(self, o: LatVec) -> LatVec {
        LatVec([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Sub for LatVec {
    type Output = LatVec;
    fn sub(self, o: LatVec) -> LatVec {
        LatVec([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Mul<i64> for LatVec {
    type Output = LatVec;
    fn mul(self, k: i64) -> LatVec {
        LatVec([self.0[0] * k, self.0[1] * k, self.0[2] * k])
    }
}

impl Neg for LatVec {
    type Output = LatVec;
    fn neg(self) -> LatVec {
        self * -1
    }
}

/// Divides out the gcd of the coordinates.
pub fn primitive(v: LatVec) -> Result<LatVec, LatticeError> {
    let g = v.content();
    if g == 0 {
        return Err(LatticeError::ZeroVector);
    }
    Ok(v.div_exact(g).expect("content divides"))
}

/// Determinant of the cone spanned by `u` and `v`: the gcd of the 2x2 minors
/// of the 3x2 matrix `[u v]`.
pub fn cone_det(u: LatVec, v: LatVec) -> Result<u64, LatticeError> {
    let g = u.cross(&v).content();
    if g == 0 {
        return Err(LatticeError::ParallelVectors(u, v));
    }
    Ok(g as u64)
}

/// A regular subdivision `t_0 = u, t_1, ..., t_{α+1} = v` of the cone
/// spanned by `u` and `v`.
///
/// `dets[i]` is `s_i = det(t_i, v)` for `i = 0..=α`, and `weights[i-1]` is the
/// weight `w_i` of the intermediate vector `t_i`, fixed by the mediant
/// relation `w_i t_i = t_{i-1} + t_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionChain {
    pub vectors: Vec<LatVec>,
    pub dets: Vec<u64>,
    pub weights: Vec<i64>,
}

impl SubdivisionChain {
    pub fn start(&self) -> LatVec {
        self.vectors[0]
    }

    pub fn end(&self) -> LatVec {
        *self.vectors.last().expect("chain has two endpoints")
    }

    /// The vectors strictly between the endpoints.
    pub fn intermediates(&self) -> &[LatVec] {
        &self.vectors[1..self.vectors.len() - 1]
    }

    /// The first vector after the start (the end itself for a regular cone).
    pub fn first_step(&self) -> LatVec {
        self.vectors[1]
    }

    /// The same chain read from `v` towards `u`.
    pub fn reversed(&self) -> SubdivisionChain {
        let vectors: Vec<LatVec> = self.vectors.iter().rev().copied().collect();
        let end = vectors[vectors.len() - 1];
        let dets = vectors[..vectors.len() - 1]
            .iter()
            .map(|t| cone_det(*t, end).expect("chain vectors are not parallel"))
            .collect();
        SubdivisionChain {
            vectors,
            dets,
            weights: self.weights.iter().rev().copied().collect(),
        }
    }
}

/// Regular subdivision of the 2-cone spanned by primitive `u` and `v`.
pub fn regular_subdivide(u: LatVec, v: LatVec) -> Result<SubdivisionChain, LatticeError> {
    for w in [u, v] {
        if !w.is_primitive() {
            return Err(LatticeError::NotPrimitive(w));
        }
    }
    let s0 = cone_det(u, v)?;
    let mut vectors = vec![u];
    let mut dets = vec![s0];
    let mut current = u;
    let mut s_cur = s0 as i64;
    while s_cur > 1 {
        let mut found = None;
        for s_next in 1..s_cur {
            let Some(t) = (v + current * s_next).div_exact(s_cur) else {
                continue;
            };
            if cone_det(current, t)? != 1 {
                continue;
            }
            assert!(found.is_none(), "subdivision step is not unique at {current} -> {v}");
            found = Some((t, s_next));
        }
        let (t, s_next) = found.expect("a subdivision step exists for primitive non-parallel vectors");
        debug_assert_eq!(cone_det(t, v)?, s_next as u64);
        vectors.push(t);
        dets.push(s_next as u64);
        current = t;
        s_cur = s_next;
    }
    vectors.push(v);
    let weights = mediant_weights(&vectors);
    Ok(SubdivisionChain { vectors, dets, weights })
}

/// Weights of the interior vectors from `w_i t_i = t_{i-1} + t_{i+1}`.
fn mediant_weights(vectors: &[LatVec]) -> Vec<i64> {
    (1..vectors.len() - 1)
        .map(|i| {
            (vectors[i - 1] + vectors[i + 1])
                .multiple_of(&vectors[i])
                .expect("mediant relation holds along a regular chain")
        })
        .collect()
}

/// Hirzebruch–Jung expansion `s / s1 = w_1 - 1/(w_2 - 1/(... - 1/w_α))` with
/// every `w_i >= 2`.
pub fn hj_expand(s: u64, s1: u64) -> Result<Vec<i64>, LatticeError> {
    if s1 == 0 || s1 >= s || s.gcd(&s1) != 1 {
        return Err(LatticeError::InvalidFraction(s, s1));
    }
    let (mut a, mut b) = (s as i64, s1 as i64);
    let mut out = Vec::new();
    while b > 0 {
        let w = (a + b - 1) / b;
        out.push(w);
        (a, b) = (b, w * b - a);
    }
    Ok(out)
}

/// Value of a Hirzebruch–Jung continued fraction as `(numerator, denominator)`.
pub fn hj_value(weights: &[i64]) -> (i64, i64) {
    let (mut num, mut den) = (1i64, 0i64);
    for &w in weights.iter().rev() {
        (num, den) = (w * num - den, num);
    }
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_divides_content() {
        assert_eq!(primitive(LatVec::new(10, 8, 12)).unwrap(), LatVec::new(5, 4, 6));
        assert_eq!(primitive(LatVec::new(5, 4, 6)).unwrap(), LatVec::new(5, 4, 6));
        assert_eq!(primitive(LatVec::new(0, 0, 7)).unwrap(), LatVec::E3);
        assert_eq!(primitive(LatVec::default()), Err(LatticeError::ZeroVector));
    }

    #[test]
    fn cone_determinants() {
        let u = LatVec::new(5, 4, 6);
        assert_eq!(cone_det(u, LatVec::new(1, 0, 2)).unwrap(), 4);
        assert_eq!(cone_det(u, LatVec::new(0, 3, 2)).unwrap(), 5);
        assert_eq!(cone_det(LatVec::E1, LatVec::E2).unwrap(), 1);
        assert!(matches!(cone_det(u, u), Err(LatticeError::ParallelVectors(..))));
    }

    #[test]
    fn subdivision_of_first_e60_cone() {
        let c = regular_subdivide(LatVec::new(5, 4, 6), LatVec::new(1, 0, 2)).unwrap();
        assert_eq!(
            c.vectors,
            vec![
                LatVec::new(5, 4, 6),
                LatVec::new(4, 3, 5),
                LatVec::new(3, 2, 4),
                LatVec::new(2, 1, 3),
                LatVec::new(1, 0, 2)
            ]
        );
        assert_eq!(c.dets, vec![4, 3, 2, 1]);
        assert_eq!(c.weights, vec![2, 2, 2]);
    }

    #[test]
    fn subdivision_of_second_e60_cone() {
        let c = regular_subdivide(LatVec::new(5, 4, 6), LatVec::new(0, 3, 2)).unwrap();
        assert_eq!(
            c.vectors,
            vec![LatVec::new(5, 4, 6), LatVec::new(3, 3, 4), LatVec::new(1, 2, 2), LatVec::new(0, 3, 2)]
        );
        assert_eq!(c.weights, vec![2, 3]);
        assert_eq!(c.weights, hj_expand(c.dets[0], c.dets[1]).unwrap());
    }

    #[test]
    fn regular_cone_is_its_own_subdivision() {
        let c = regular_subdivide(LatVec::E1, LatVec::E3).unwrap();
        assert_eq!(c.vectors, vec![LatVec::E1, LatVec::E3]);
        assert!(c.weights.is_empty());
        assert_eq!(c.dets, vec![1]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            regular_subdivide(LatVec::E1, LatVec::new(2, 0, 0)),
            Err(LatticeError::NotPrimitive(_))
        ));
        assert!(matches!(
            regular_subdivide(LatVec::E1, LatVec::E1),
            Err(LatticeError::ParallelVectors(..))
        ));
    }

    #[test]
    fn hj_expansions() {
        assert_eq!(hj_expand(4, 3).unwrap(), vec![2, 2, 2]);
        assert_eq!(hj_expand(2, 1).unwrap(), vec![2]);
        assert_eq!(hj_expand(5, 3).unwrap(), vec![2, 3]);
        assert_eq!(hj_expand(7, 2).unwrap(), vec![4, 2]);
        assert_eq!(hj_value(&[2, 3]), (5, 3));
        assert!(hj_expand(4, 2).is_err());
        assert!(hj_expand(3, 3).is_err());
        assert!(hj_expand(3, 0).is_err());
    }

    #[test]
    fn reversed_chain_matches_subdivision_from_other_end() {
        let u = LatVec::new(5, 4, 6);
        let v = LatVec::new(0, 3, 2);
        let fwd = regular_subdivide(u, v).unwrap();
        let back = regular_subdivide(v, u).unwrap();
        assert_eq!(fwd.reversed(), back);
    }
}
