//! Exact multivariate polynomials over the rationals in the ambient
//! variables `x, y, z, w`.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic with `x < y < z < w`. The last entry of the map is
//! therefore the leading term. No stored coefficient is ever zero.

mod algo;
mod parse;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use algo::{determinant, gcd_poly, resultant};
pub use parse::{parse_poly, ParseError};

/// Maximum number of ambient variables.
pub const MAX_VARS: usize = 4;

/// Printable names of the ambient variables, in index order.
pub const VAR_NAMES: [char; MAX_VARS] = ['x', 'y', 'z', 'w'];

/// Exponent vector of a monomial. Unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub [u32; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn new(exps: &[u32]) -> Self {
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial(e)
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(e))
    }

    /// Componentwise minimum (the monomial gcd).
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = [0; MAX_VARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].min(other.0[i]);
        }
        Monomial(e)
    }

    /// Exponents as signed integers, truncated to `n` variables.
    pub fn as_i64(&self, n: usize) -> Vec<i64> {
        self.0[..n].iter().map(|&e| i64::from(e)).collect()
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial(core::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in 3 or 4 variables with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(nvars, Monomial::ONE, c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, rat(c))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        Self::monomial(nvars, Monomial::var(i), BigRational::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        debug_assert!(m.0[nvars..].iter().all(|&e| e == 0));
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, integer coefficient)` pairs.
    pub fn from_terms<'a, I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (&'a [u32], i64)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(Monomial::new(e), rat(c));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Exponent vectors with nonzero coefficient, in ascending monomial order.
    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().copied().collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                existing.is_zero()
            }
            None => {
                self.terms.insert(m, c);
                false
            }
        };
        if remove {
            self.terms.remove(&m);
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Monomial::ONE)
    }

    /// True when the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (*t * *m, a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `var`.
    pub fn partial(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut dm = *m;
            dm.0[var] -= 1;
            out.add_term(dm, c * rat(i64::from(e)));
        }
        out
    }

    /// Simultaneous substitution `var -> poly` for every pair in `map`;
    /// unmapped variables are left in place.
    pub fn substitute(&self, map: &[(usize, MultiPoly)]) -> Self {
        let nvars = map.iter().map(|(_, q)| q.nvars).fold(self.nvars, usize::max);
        let mut images: Vec<MultiPoly> = (0..self.nvars).map(|i| MultiPoly::var(nvars, i)).collect();
        for (v, q) in map {
            images[*v] = q.with_nvars(nvars);
        }
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|q| vec![MultiPoly::one(nvars), q.clone()]).collect();
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(nvars, c.clone());
            for (i, table) in powers.iter_mut().enumerate().take(self.nvars) {
                let e = m.0[i] as usize;
                while table.len() <= e {
                    let next = &table[table.len() - 1] * &images[i];
                    table.push(next);
                }
                if e > 0 {
                    term = &term * &table[e];
                }
            }
            out = out + term;
        }
        out
    }

    /// Evaluates at a rational point with one coordinate per variable.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert!(point.len() >= self.nvars, "point has too few coordinates");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, p) in point.iter().enumerate().take(self.nvars) {
                let e = m.0[i];
                if e > 0 {
                    t *= num_traits::pow(p.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// The same polynomial viewed in a different ambient variable count.
    ///
    /// Panics if a variable that would be dropped actually occurs.
    pub fn with_nvars(&self, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        for v in nvars..self.nvars {
            assert!(!self.involves(v), "cannot drop variable {} that occurs", VAR_NAMES[v]);
        }
        MultiPoly {
            nvars,
            terms: self.terms.clone(),
        }
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = [0; MAX_VARS];
            for (i, &target) in perm.iter().enumerate() {
                e[target] = m.0[i];
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Coefficients as a univariate polynomial in `var`; entry `i` is the
    /// coefficient of `var^i` and does not involve `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![MultiPoly::zero(self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = rest.0[var] as usize;
            rest.0[var] = 0;
            out[e].terms.insert(rest, c.clone());
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    pub fn from_coeffs_in(nvars: usize, var: usize, coeffs: &[MultiPoly]) -> Self {
        let mut out = Self::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut shift = Monomial::ONE;
            shift.0[var] = i as u32;
            for (m, a) in &c.terms {
                out.add_term(*m * shift, a.clone());
            }
        }
        out
    }

    pub fn leading_coeff_in(&self, var: usize) -> MultiPoly {
        self.coeffs_in(var).pop().unwrap_or_else(|| MultiPoly::zero(self.nvars))
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let (lm, lc) = divisor.leading_term().map(|(m, c)| (*m, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars.max(divisor.nvars));
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            let qm = m.checked_div(&lm)?;
            let qc = c / &lc;
            rem = rem - divisor.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(*first, |acc, m| acc.gcd(m)),
        }
    }

    /// Splits off the monomial content: `self = m * rest`.
    pub fn strip_monomial(&self) -> (Monomial, MultiPoly) {
        let m = self.monomial_content();
        let rest = MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.checked_div(&m).expect("monomial content divides"), c.clone()))
                .collect(),
        };
        (m, rest)
    }

    /// Scales to integer coefficients with gcd 1 and positive leading
    /// coefficient. The zero polynomial is returned unchanged.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den / c.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        let mut factor = BigRational::new(den, num_gcd);
        if self.leading_coeff().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// True when `self = c * other` for some nonzero rational `c`.
    pub fn equals_up_to_constant(&self, other: &MultiPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.normalize().terms == other.normalize().terms
    }

    /// Same terms irrespective of the declared variable count.
    pub fn same_terms(&self, other: &MultiPoly) -> bool {
        self.terms == other.terms
    }

    /// Reduces every coefficient modulo a prime; `None` if a denominator is
    /// divisible by `p`.
    pub fn reduce_mod(&self, p: u64) -> Option<Vec<(Monomial, u64)>> {
        let pb = BigInt::from(p);
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let num = c.numer().mod_floor(&pb);
            let den = c.denom().mod_floor(&pb);
            if den.is_zero() {
                return None;
            }
            let num = u64::try_from(num).ok()?;
            let den = u64::try_from(den).ok()?;
            let v = num * modinv(den, p) % p;
            if v != 0 {
                out.push((*m, v));
            }
        }
        Some(out)
    }
}

fn modinv(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self)
    }
}

/// Canonical rendering: terms in descending graded-lex order, `*` between
/// factors, no spaces. Integer polynomials round-trip through [`parse_poly`].
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if idx > 0 {
                f.write_str("+")?;
            }
            let a = c.abs();
            let mut first = true;
            if !a.is_one() || *m == Monomial::ONE {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())?;
                }
                first = false;
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "{}", VAR_NAMES[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl MultiPoly {
    pub fn render(&self) -> String {
        alloc::format!("{self}")
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.nvars = self.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self.nvars = self.nvars.max(rhs.nvars);
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.nvars = self.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;

    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        self.nvars = self.nvars.max(rhs.nvars);
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars.max(rhs.nvars));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(*m1 * *m2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}

/// A 2x3 matrix of polynomials sharing one variable count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix2x3 {
    pub entries: [[MultiPoly; 3]; 2],
}

impl PolyMatrix2x3 {
    pub fn new(entries: [[MultiPoly; 3]; 2]) -> Self {
        let n = entries[0][0].nvars();
        assert!(
            entries.iter().flatten().all(|e| e.nvars() == n),
            "matrix entries must share the variable count"
        );
        PolyMatrix2x3 { entries }
    }

    pub fn nvars(&self) -> usize {
        self.entries[0][0].nvars()
    }

    pub fn get(&self, row: usize, col: usize) -> &MultiPoly {
        &self.entries[row][col]
    }

    /// Applies a substitution to every entry.
    pub fn substitute(&self, map: &[(usize, MultiPoly)]) -> Self {
        let e = &self.entries;
        PolyMatrix2x3::new([
            [e[0][0].substitute(map), e[0][1].substitute(map), e[0][2].substitute(map)],
            [e[1][0].substitute(map), e[1][1].substitute(map), e[1][2].substitute(map)],
        ])
    }
}

/// The three 2x2 minors for column pairs (1,2), (1,3), (2,3), each taken as
/// top-left * bottom-right - top-right * bottom-left.
pub fn minors2x2(m: &PolyMatrix2x3) -> (MultiPoly, MultiPoly, MultiPoly) {
    let e = &m.entries;
    let minor = |a: usize, b: usize| &(&e[0][a] * &e[1][b]) - &(&e[0][b] * &e[1][a]);
    (minor(0, 1), minor(0, 2), minor(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, 3).unwrap()
    }

    #[test]
    fn grlex_orders_by_degree_then_w_z_y_x() {
        let x = Monomial::new(&[1, 0, 0]);
        let y = Monomial::new(&[0, 1, 0]);
        let z = Monomial::new(&[0, 0, 1]);
        let x2 = Monomial::new(&[2, 0, 0]);
        assert!(x < y && y < z && z < x2);
        assert!(Monomial::new(&[1, 1, 0]) < Monomial::new(&[0, 0, 2]));
    }

    #[test]
    fn support_of_e60_form() {
        let f = p("z^3+y^3*z+x^2*y^2");
        let s: Vec<_> = f.support().iter().map(|m| m.as_i64(3)).collect();
        assert_eq!(s.len(), 3);
        for e in [[2, 2, 0], [0, 3, 1], [0, 0, 3]] {
            assert!(s.contains(&e.to_vec()));
        }
        assert!(p("0").support().is_empty());
        assert_eq!(p("5").support(), vec![Monomial::ONE]);
    }

    #[test]
    fn partial_derivatives() {
        assert_eq!(p("z^3+x*z^2+y^7").partial(2), p("3*z^2+2*x*z"));
        assert!(p("y^5").partial(0).is_zero());
        assert_eq!(p("x^2*y^2").partial(1), p("2*x^2*y"));
    }

    #[test]
    fn substitution_and_evaluation() {
        let z2 = p("z^2");
        assert_eq!(z2.substitute(&[(2, p("z+x"))]), p("z^2+2*x*z+x^2"));
        assert_eq!(p("x").substitute(&[]), p("x"));
        let f = p("(z+x)*(z^2-y^5)");
        let pt = [rat(1), rat(1), rat(-1)];
        assert!(f.eval(&pt).is_zero());
    }

    #[test]
    fn minors_of_e07_matrix() {
        let q = |s: &str| parse_poly(s, 4).unwrap();
        let m = PolyMatrix2x3::new([[q("z"), q("w"), q("x^2+y^3")], [q("y"), q("z"), q("w")]]);
        let (a, b, c) = minors2x2(&m);
        assert_eq!(a, q("z^2-y*w"));
        assert_eq!(b, q("z*w-y*(x^2+y^3)"));
        assert_eq!(c, q("w^2-z*(x^2+y^3)"));
    }

    #[test]
    fn minors_vanish_for_identical_rows() {
        let q = |s: &str| parse_poly(s, 4).unwrap();
        let row = [q("x+w"), q("y^2"), q("z")];
        let m = PolyMatrix2x3::new([row.clone(), row]);
        let (a, b, c) = minors2x2(&m);
        assert!(a.is_zero() && b.is_zero() && c.is_zero());
    }

    #[test]
    fn exact_division() {
        let f = p("(z+x)*(z^2-y^5)");
        assert_eq!(f.exact_div(&p("z+x")).unwrap(), p("z^2-y^5"));
        assert!(f.exact_div(&p("z+y")).is_none());
    }

    #[test]
    fn normalize_makes_primitive_positive() {
        let f = p("-4*x^2+6*y");
        assert_eq!(f.normalize(), p("2*x^2-3*y"));
        let half = f.scale(&BigRational::new(BigInt::from(1), BigInt::from(7)));
        assert!(half.equals_up_to_constant(&f));
    }

    #[test]
    fn renders_canonically() {
        assert_eq!(p("x^2*y^2+y^3*z+z^3").render(), "y^3*z+x^2*y^2+z^3");
        assert_eq!(p("3-x").render(), "-x+3");
        assert_eq!(p("0").render(), "0");
    }

    #[test]
    fn strip_monomial_content() {
        let (m, rest) = p("x^2*y^3*z+x^3*y^2").strip_monomial();
        assert_eq!(m, Monomial::new(&[2, 2, 0]));
        assert_eq!(rest, p("y*z+x"));
    }
}
