//! Newton non-degeneracy: every compact face function must define a smooth
//! hypersurface in the torus `(C*)^3`.
//!
//! A face function `In_u(f)` is rewritten as `z^m h(z^b_1, ..., z^b_d)` where
//! `b_1..b_d` is a lattice basis of the differences of its support. The map
//! `z -> (z^b_j)` is a submersion of tori, so `In_u(f)` is smooth in the
//! torus iff `h` is smooth in `(C*)^d`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::NewtonError;
use crate::lattice::LatVec;
use crate::newton::{Face, NewtonPolyhedron};
use crate::poly::{gcd_poly, resultant, Monomial, MultiPoly};

/// Face function with its reduction to essential variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceFunction {
    pub face: Face,
    /// `In_u(f)` in `x, y, z`.
    pub poly: MultiPoly,
    pub essential_dim: usize,
    /// `h` in the first `essential_dim` variables, without monomial factor.
    pub reduced: MultiPoly,
    /// Lattice basis `b_j` of the face support differences.
    pub basis: Vec<LatVec>,
    /// Exponent `m` with `In_u(f) = z^m h(z^b)`; entries may be negative.
    pub monomial: LatVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A single term never vanishes on the torus.
    Monomial,
    /// `gcd` of the listed univariate polynomials, a nonzero constant.
    CommonGcd { system: Vec<MultiPoly>, gcd: MultiPoly },
    /// Pairwise resultants eliminating `var`, with powers of the other
    /// variable removed, have constant `gcd`.
    Resultants {
        var: usize,
        resultants: Vec<MultiPoly>,
        gcd: MultiPoly,
    },
}

impl Certificate {
    /// Recomputes the certificate from its stored inputs.
    pub fn verify(&self) -> bool {
        match self {
            Certificate::Monomial => true,
            Certificate::CommonGcd { system, gcd } => {
                let g = system.iter().fold(MultiPoly::zero(3), |g, p| gcd_poly(&g, p));
                gcd.is_constant() && !gcd.is_zero() && stripped(&g) == *gcd
            }
            Certificate::Resultants { resultants, gcd, .. } => {
                let g = resultants.iter().fold(MultiPoly::zero(3), |g, r| gcd_poly(&g, r));
                gcd.is_constant() && !gcd.is_zero() && g == *gcd
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegenerateEvidence {
    /// A point of the torus where the face function and its gradient vanish.
    Witness { point: [BigRational; 3] },
    /// A point of `(C*)^d` where the reduced function `h` and its gradient
    /// vanish.
    ReducedWitness { point: Vec<BigRational> },
    /// A non-monomial common factor of the system.
    CommonFactor { factor: MultiPoly },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPEvidence {
    pub prime: u64,
    /// Number of common zeros of the reduced system in `(F_p^*)^d`.
    pub solutions: u64,
    /// Up to a few of those zeros.
    pub sample: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NondegVerdict {
    Nondegenerate {
        certificates: Vec<(Vec<LatVec>, Certificate)>,
    },
    Degenerate {
        face: Vec<LatVec>,
        evidence: DegenerateEvidence,
    },
    Unknown {
        face: Vec<LatVec>,
        evidence: Vec<ModPEvidence>,
    },
}

impl NondegVerdict {
    pub fn is_nondegenerate(&self) -> bool {
        matches!(self, NondegVerdict::Nondegenerate { .. })
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, NondegVerdict::Degenerate { .. })
    }
}

/// Which polynomials must vanish simultaneously.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemMode {
    /// `h` and its partial derivatives.
    Full,
    /// The images of `z_i d/dz_i In_u(f)` only; `In_u(f)` itself is implied
    /// by the Euler relation.
    JacobianOnly,
}

fn exps(m: &Monomial) -> LatVec {
    LatVec([m.0[0] as i64, m.0[1] as i64, m.0[2] as i64])
}

pub fn face_function(p: &MultiPoly, np: &NewtonPolyhedron, u: LatVec) -> Result<FaceFunction, NewtonError> {
    let face = np.face_of(u)?;
    if !face.is_compact() {
        return Err(NewtonError::NonCompactFace);
    }
    Ok(reduce_to_essential(restrict(p, face)))
}

/// `In(f)` on an explicit face.
pub fn restrict(p: &MultiPoly, face: Face) -> FaceFunction {
    let mut poly = MultiPoly::zero(3);
    for (m, c) in p.terms() {
        if face.points.contains(&exps(m)) {
            poly.add_term(*m, c.clone());
        }
    }
    FaceFunction {
        face,
        poly,
        essential_dim: 0,
        reduced: MultiPoly::zero(3),
        basis: Vec::new(),
        monomial: LatVec::default(),
    }
}

/// Echelon basis of the lattice spanned by `vectors`.
fn lattice_basis(vectors: &[LatVec]) -> Vec<LatVec> {
    let mut rows: Vec<LatVec> = vectors.iter().copied().filter(|v| !v.is_zero()).collect();
    let mut basis = Vec::new();
    for col in 0..3 {
        // Euclid on column `col` among the remaining rows
        loop {
            let mut nz: Vec<usize> = (0..rows.len()).filter(|&i| rows[i].0[col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&i| rows[i].0[col].abs());
            let p = nz[0];
            let pivot = rows[p];
            for &i in &nz[1..] {
                let q = rows[i].0[col] / pivot.0[col];
                rows[i] = rows[i] - pivot * q;
            }
        }
        if let Some(i) = rows.iter().position(|r| r.0[col] != 0) {
            let mut b = rows.remove(i);
            if b.0[col] < 0 {
                b = -b;
            }
            basis.push(b);
        }
        rows.retain(|r| !r.is_zero());
    }
    basis
}

/// Coordinates of `v` in an echelon basis (exact for lattice members).
fn coordinates(basis: &[LatVec], v: LatVec) -> Vec<i64> {
    let mut rest = v;
    basis
        .iter()
        .map(|b| {
            let col = b.0.iter().position(|&c| c != 0).expect("nonzero basis vector");
            let c = rest.0[col] / b.0[col];
            rest = rest - *b * c;
            c
        })
        .collect()
}

pub fn reduce_to_essential(mut ff: FaceFunction) -> FaceFunction {
    let terms: Vec<(LatVec, BigRational)> = ff.poly.terms().map(|(m, c)| (exps(m), c.clone())).collect();
    if terms.is_empty() {
        return ff;
    }
    let p0 = terms[0].0;
    let diffs: Vec<LatVec> = terms.iter().map(|(p, _)| *p - p0).collect();
    let basis = lattice_basis(&diffs);
    let d = basis.len();
    let coords: Vec<Vec<i64>> = diffs.iter().map(|v| coordinates(&basis, *v)).collect();
    let mins: Vec<i64> = (0..d).map(|j| coords.iter().map(|c| c[j]).min().unwrap_or(0)).collect();
    let mut reduced = MultiPoly::zero(3);
    for ((_, c), co) in terms.iter().zip(&coords) {
        let mut e = [0u32; 4];
        for j in 0..d {
            e[j] = (co[j] - mins[j]) as u32;
        }
        reduced.add_term(Monomial(e), c.clone());
    }
    let monomial = basis.iter().zip(&mins).fold(p0, |acc, (b, &m)| acc + *b * m);
    ff.essential_dim = d;
    ff.reduced = reduced;
    ff.basis = basis;
    ff.monomial = monomial;
    ff
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl FaceFunction {
    /// Polynomials in the essential variables whose common zeros in the
    /// torus are the singular points of the face function there.
    pub fn system(&self, mode: SystemMode) -> Vec<MultiPoly> {
        let d = self.essential_dim;
        let h = &self.reduced;
        match mode {
            SystemMode::Full => {
                let mut out = vec![h.clone()];
                out.extend((0..d).map(|j| h.partial(j)));
                out
            }
            SystemMode::JacobianOnly => (0..3)
                .map(|i| {
                    let mut g = h.scale(&rat(self.monomial.0[i]));
                    for (j, b) in self.basis.iter().enumerate() {
                        let tj = MultiPoly::var(3, j);
                        g = g + (&tj * &h.partial(j)).scale(&rat(b.0[i]));
                    }
                    g
                })
                .filter(|g| !g.is_zero())
                .collect(),
        }
    }
}

/// Values tried for witness coordinates.
fn witness_values() -> Vec<BigRational> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    vec![rat(1), rat(-1), rat(2), rat(-2), half.clone(), -half]
}

/// True when `p` and its three partial derivatives vanish at `point`, all
/// of whose coordinates are nonzero.
pub fn verify_witness(p: &MultiPoly, point: &[BigRational; 3]) -> bool {
    point.iter().all(|c| !c.is_zero())
        && p.eval(point).is_zero()
        && (0..3).all(|i| p.partial(i).eval(point).is_zero())
}

fn find_witness(p: &MultiPoly) -> Option<[BigRational; 3]> {
    let vals = witness_values();
    for a in &vals {
        for b in &vals {
            for c in &vals {
                let pt = [a.clone(), b.clone(), c.clone()];
                if verify_witness(p, &pt) {
                    return Some(pt);
                }
            }
        }
    }
    None
}

/// True when `h` and its first `point.len()` partials vanish at `point`,
/// all of whose coordinates are nonzero.
pub fn verify_reduced_witness(h: &MultiPoly, point: &[BigRational]) -> bool {
    let d = point.len();
    let mut full = point.to_vec();
    full.resize(h.nvars(), BigRational::zero());
    point.iter().all(|c| !c.is_zero())
        && h.eval(&full).is_zero()
        && (0..d).all(|j| h.partial(j).eval(&full).is_zero())
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n: u64 = num_traits::ToPrimitive::to_u64(&n.magnitude().clone()).filter(|&n| n <= DIVISOR_LIMIT)?;
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            out.push(i);
            if i * i != n {
                out.push(n / i);
            }
        }
        i += 1;
    }
    Some(out)
}

/// Nonzero rational roots of a polynomial in the single variable `var`.
fn rational_roots(p: &MultiPoly, var: usize) -> Vec<BigRational> {
    let p = stripped(p);
    if p.is_constant() || (0..p.nvars()).any(|i| i != var && p.involves(i)) {
        return Vec::new();
    }
    let coeffs: Vec<BigRational> = p.coeffs_in(var).iter().map(|c| c.constant_term()).collect();
    let den = coeffs.iter().fold(BigInt::one(), |l, c| num_integer::Integer::lcm(&l, c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    let (Some(num), Some(dens)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return Vec::new();
    };
    let mut roots: Vec<BigRational> = Vec::new();
    for a in &num {
        for b in &dens {
            for sign in [1i64, -1] {
                let r = BigRational::new(BigInt::from(*a) * sign, BigInt::from(*b));
                let at = p.substitute(&[(var, MultiPoly::constant(p.nvars(), r.clone()))]);
                if at.is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

/// Searches for a rational singular point of `h` in `(C*)^2` by
/// eliminating the second variable, then back-substituting.
fn find_reduced_witness(h: &MultiPoly) -> Option<Vec<BigRational>> {
    let system: Vec<MultiPoly> = [h.clone(), h.partial(0), h.partial(1)].into_iter().filter(|q| !q.is_zero()).collect();
    let mut elim = MultiPoly::zero(3);
    for i in 0..system.len() {
        for j in i + 1..system.len() {
            if let Some(r) = resultant(&system[i], &system[j], 1) {
                elim = gcd_poly(&elim, &r);
            }
        }
    }
    for a in rational_roots(&elim, 0) {
        let at_a: Vec<MultiPoly> = system.iter().map(|q| q.substitute(&[(0, MultiPoly::constant(3, a.clone()))])).collect();
        let g = at_a.iter().fold(MultiPoly::zero(3), |g, q| gcd_poly(&g, q));
        for b in rational_roots(&g, 1) {
            let pt = vec![a.clone(), b];
            if verify_reduced_witness(h, &pt) {
                return Some(pt);
            }
        }
    }
    None
}

fn eval_mod(terms: &[(Monomial, u64)], point: &[u64], p: u64) -> u64 {
    let mut acc = 0u64;
    for (m, c) in terms {
        let mut t = *c;
        for (i, &x) in point.iter().enumerate() {
            for _ in 0..m.0[i] {
                t = t * x % p;
            }
        }
        acc = (acc + t) % p;
    }
    acc
}

const PRIMES: [u64; 3] = [11, 31, 101];
const SAMPLE: usize = 4;

fn mod_p_evidence(system: &[MultiPoly], d: usize) -> Vec<ModPEvidence> {
    let mut out = Vec::new();
    for p in PRIMES {
        let Some(reduced) = system.iter().map(|q| q.reduce_mod(p)).collect::<Option<Vec<_>>>() else {
            continue;
        };
        let mut solutions = 0;
        let mut sample = Vec::new();
        let mut point = vec![1u64; d];
        loop {
            if reduced.iter().all(|t| eval_mod(t, &point, p) == 0) {
                solutions += 1;
                if sample.len() < SAMPLE {
                    sample.push(point.clone());
                }
            }
            let mut i = 0;
            while i < d && point[i] == p - 1 {
                point[i] = 1;
                i += 1;
            }
            if i == d {
                break;
            }
            point[i] += 1;
        }
        out.push(ModPEvidence {
            prime: p,
            solutions,
            sample,
        });
    }
    out
}

fn stripped(p: &MultiPoly) -> MultiPoly {
    p.strip_monomial().1.normalize()
}

fn resultant_certificate(system: &[MultiPoly], var: usize) -> Option<Certificate> {
    let mut resultants = Vec::new();
    for i in 0..system.len() {
        for j in i + 1..system.len() {
            if let Some(r) = resultant(&system[i], &system[j], var) {
                if !r.is_zero() {
                    resultants.push(stripped(&r));
                }
            }
        }
    }
    if resultants.is_empty() {
        return None;
    }
    let gcd = resultants.iter().fold(MultiPoly::zero(3), |g, r| gcd_poly(&g, r));
    gcd.is_constant().then_some(Certificate::Resultants { var, resultants, gcd })
}

/// Verdict for one face function.
pub fn check_face(ff: &FaceFunction, mode: SystemMode) -> NondegVerdict {
    let face = ff.face.points.clone();
    if ff.essential_dim == 0 {
        return NondegVerdict::Nondegenerate {
            certificates: vec![(face, Certificate::Monomial)],
        };
    }
    let system = ff.system(mode);
    let common = system.iter().fold(MultiPoly::zero(3), |g, p| gcd_poly(&g, p));
    let factor = stripped(&common);
    if !factor.is_constant() {
        return NondegVerdict::Degenerate {
            face,
            evidence: DegenerateEvidence::CommonFactor { factor },
        };
    }
    if ff.essential_dim == 1 {
        return NondegVerdict::Nondegenerate {
            certificates: vec![(face, Certificate::CommonGcd { system, gcd: factor })],
        };
    }
    for var in (0..ff.essential_dim).rev() {
        if let Some(cert) = resultant_certificate(&system, var) {
            return NondegVerdict::Nondegenerate {
                certificates: vec![(face, cert)],
            };
        }
    }
    if let Some(point) = find_witness(&ff.poly) {
        return NondegVerdict::Degenerate {
            face,
            evidence: DegenerateEvidence::Witness { point },
        };
    }
    if ff.essential_dim == 2 {
        if let Some(point) = find_reduced_witness(&ff.reduced) {
            return NondegVerdict::Degenerate {
                face,
                evidence: DegenerateEvidence::ReducedWitness { point },
            };
        }
    }
    NondegVerdict::Unknown {
        face,
        evidence: mod_p_evidence(&system, ff.essential_dim),
    }
}

/// All compact face functions of `p`: facets, edges, then vertices.
pub fn compact_face_functions(p: &MultiPoly) -> Result<Vec<FaceFunction>, NewtonError> {
    let np = NewtonPolyhedron::new(p)?;
    Ok(np
        .compact_faces()
        .into_iter()
        .map(|f| reduce_to_essential(restrict(p, f)))
        .collect())
}

pub fn check_newton_nondegenerate(p: &MultiPoly) -> NondegVerdict {
    check_newton_nondegenerate_with(p, SystemMode::Full)
}

/// Conjunction over every compact face: the first degenerate face decides,
/// and any undecided face makes the whole verdict undecided.
pub fn check_newton_nondegenerate_with(p: &MultiPoly, mode: SystemMode) -> NondegVerdict {
    let faces = match compact_face_functions(p) {
        Ok(f) => f,
        Err(_) => {
            return NondegVerdict::Unknown {
                face: Vec::new(),
                evidence: Vec::new(),
            }
        }
    };
    let mut certificates = Vec::new();
    let mut unknown = None;
    for ff in &faces {
        match check_face(ff, mode) {
            NondegVerdict::Nondegenerate { certificates: c } => certificates.extend(c),
            d @ NondegVerdict::Degenerate { .. } => return d,
            u @ NondegVerdict::Unknown { .. } => {
                unknown.get_or_insert(u);
            }
        }
    }
    unknown.unwrap_or(NondegVerdict::Nondegenerate { certificates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, 3).unwrap()
    }

    fn f1() -> MultiPoly {
        p("z^3+(x+y^4)*z^2+2*x*y^4*z+(x^2+y^3)*y^4")
    }

    #[test]
    fn face_functions_of_f1() {
        let f = f1();
        let np = NewtonPolyhedron::new(&f).unwrap();
        let mut found = Vec::new();
        for facet in np.compact_facets() {
            found.push(face_function(&f, &np, facet.normal).unwrap().poly);
        }
        assert!(found.contains(&p("z^3+x*z^2+y^7")));
        assert!(found.contains(&p("x*z^2+x^2*y^4+y^7")));
    }

    #[test]
    fn reduction_dimensions() {
        let np = NewtonPolyhedron::new(&p("z^3+y^5+x^2*y^2")).unwrap();
        let edge = np
            .edges
            .iter()
            .find(|e| e.is_compact() && e.points.contains(&LatVec::new(0, 5, 0)) && e.points.contains(&LatVec::new(2, 2, 0)))
            .unwrap()
            .clone();
        let ff = reduce_to_essential(restrict(&p("y^5+x^2*y^2"), edge));
        assert_eq!(ff.essential_dim, 1);
        assert_eq!(ff.reduced, p("x+1"));
        let vertex = reduce_to_essential(restrict(&p("x^3"), np.vertices[0].clone()));
        assert_eq!(vertex.essential_dim, 0);
    }

    #[test]
    fn f1_is_nondegenerate() {
        let v = check_newton_nondegenerate(&f1());
        let NondegVerdict::Nondegenerate { certificates } = v else {
            panic!("expected a certificate, got {v:?}");
        };
        assert!(certificates.iter().all(|(_, c)| c.verify()));
    }

    #[test]
    fn degenerate_cubic_has_witness() {
        let f = p("(z+x)*(z^2-y^5)");
        let v = check_newton_nondegenerate(&f);
        match v {
            NondegVerdict::Degenerate {
                evidence: DegenerateEvidence::Witness { point },
                ..
            } => assert!(verify_witness(&f, &point)),
            other => panic!("expected a witness, got {other:?}"),
        }
        assert!(verify_witness(&f, &[rat(1), rat(1), rat(-1)]));
    }

    #[test]
    fn repeated_factor_on_an_edge() {
        let np = NewtonPolyhedron::new(&p("x^2+2*x*y+y^2+z")).unwrap();
        let edge = np.edges.iter().find(|e| e.is_compact() && e.points.len() == 3).unwrap().clone();
        let ff = reduce_to_essential(restrict(&p("x^2+2*x*y+y^2"), edge));
        assert_eq!(ff.essential_dim, 1);
        assert!(matches!(
            check_face(&ff, SystemMode::Full),
            NondegVerdict::Degenerate {
                evidence: DegenerateEvidence::CommonFactor { .. },
                ..
            }
        ));
    }

    #[test]
    fn jacobian_only_system_agrees() {
        for s in ["z^3+y^3*z+x^2*y^2", "(z+x)*(z^2-y^5)", "z^3+x*z^2+y^7"] {
            let f = p(s);
            let a = check_newton_nondegenerate_with(&f, SystemMode::Full);
            let b = check_newton_nondegenerate_with(&f, SystemMode::JacobianOnly);
            assert_eq!(a.is_nondegenerate(), b.is_nondegenerate(), "{s}");
            assert_eq!(a.is_degenerate(), b.is_degenerate(), "{s}");
        }
    }

    #[test]
    fn lattice_basis_is_echelon() {
        let b = lattice_basis(&[LatVec::new(2, -3, 0), LatVec::new(4, -6, 0)]);
        assert_eq!(b, vec![LatVec::new(2, -3, 0)]);
        let b = lattice_basis(&[LatVec::new(1, 0, -1), LatVec::new(0, 3, -2), LatVec::new(1, 3, -3)]);
        assert_eq!(b.len(), 2);
        for v in [LatVec::new(1, 0, -1), LatVec::new(0, 3, -2)] {
            let c = coordinates(&b, v);
            let back = b.iter().zip(&c).fold(LatVec::default(), |acc, (x, &k)| acc + *x * k);
            assert_eq!(back, v);
        }
    }
}
