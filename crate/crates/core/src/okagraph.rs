//! From a fan in the positive octant to a weighted graph.
//!
//! Every strictly positive generator `u` becomes a central vertex. Each
//! 2-cone at `u` contributes the chain of its regular subdivision, copied
//! `r + 1` times where `r` counts the interior lattice points of the dual
//! edge; far ends that are not strictly positive are dropped. The central
//! weight is fixed by `w u = sum_j c_j t_j`, `t_j` being the first vector
//! after `u` on arm `j` and `c_j` its number of copies.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::OkaError;
use crate::lattice::{regular_subdivide, LatVec, SubdivisionChain};
use crate::newton::NewtonPolyhedron;
use crate::poly::MultiPoly;
use crate::resgraph::{ResolutionGraph, Vertex};

/// A fan given by its rays and 2-cones only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractFan {
    pub generators: Vec<LatVec>,
    pub two_cones: Vec<(usize, usize)>,
}

impl AbstractFan {
    pub fn validate(&self) -> Result<(), OkaError> {
        for g in &self.generators {
            if g.is_zero() || !g.is_nonnegative() || !g.is_primitive() {
                return Err(OkaError::InvalidFan(format!(
                    "generator {g} must be primitive and nonnegative"
                )));
            }
        }
        let n = self.generators.len();
        let mut seen = Vec::new();
        for &(a, b) in &self.two_cones {
            if a >= n || b >= n || a == b {
                return Err(OkaError::InvalidFan(format!("2-cone ({a},{b}) is not a pair of generators")));
            }
            let key = (a.min(b), a.max(b));
            if seen.contains(&key) {
                return Err(OkaError::InvalidFan(format!("2-cone ({a},{b}) listed twice")));
            }
            seen.push(key);
            if self.generators[a].cross(&self.generators[b]).is_zero() {
                return Err(OkaError::InvalidFan(format!("2-cone ({a},{b}) has parallel generators")));
            }
        }
        for i in 0..n {
            if !self.two_cones.iter().any(|&(a, b)| a == i || b == i) {
                return Err(OkaError::InvalidFan(format!(
                    "generator {} lies on no 2-cone",
                    self.generators[i]
                )));
            }
        }
        Ok(())
    }
}

/// One 2-cone seen from a central generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arm {
    pub neighbour: LatVec,
    /// Regular subdivision read from the central generator outwards.
    pub chain: SubdivisionChain,
    pub r: u64,
    pub copies: u64,
    pub far_end_kept: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OkaVertexData {
    pub u: LatVec,
    /// Index of the central vertex in the output graph.
    pub vertex: usize,
    pub weight: i64,
    pub genus: u64,
    pub arms: Vec<Arm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OkaGraph {
    pub graph: ResolutionGraph,
    pub centrals: Vec<OkaVertexData>,
}

impl OkaGraph {
    pub fn central(&self, u: LatVec) -> Option<&OkaVertexData> {
        self.centrals.iter().find(|c| c.u == u)
    }
}

/// The positive integer `w` with `w u = sum_j c_j t_j`.
pub fn central_weight(u: LatVec, arms: &[(LatVec, u64)]) -> Result<i64, OkaError> {
    let sum = arms
        .iter()
        .fold(LatVec::default(), |acc, &(t, c)| acc + t * c as i64);
    match sum.multiple_of(&u) {
        Some(w) if w >= 1 => Ok(w),
        _ => Err(OkaError::NoIntegralWeight { generator: u }),
    }
}

/// Minimal positive integral relation among the neighbours of `u` modulo
/// `u`. Each neighbour `v` is represented by the first vector of the regular
/// subdivision from `u` towards `v`; a relation `sum c_j t_j in Q u` is the
/// same as `sum c_j (t_j x u) = 0`.
pub fn multiplicity_coeffs(u: LatVec, neighbours: &[LatVec]) -> Result<Vec<u64>, OkaError> {
    if !u.is_strictly_positive() {
        return Err(OkaError::InvalidFan(format!("{u} is not strictly positive")));
    }
    let mut cols = Vec::with_capacity(neighbours.len());
    for &v in neighbours {
        cols.push(regular_subdivide(u, v)?.first_step().cross(&u));
    }
    minimal_positive_kernel(&cols)
        .map(|c| c.into_iter().map(|x| x as u64).collect())
        .ok_or(OkaError::NoPositiveRelation { generator: u })
}

/// Search budget for relations when the kernel has dimension two or more.
const SEARCH_POINTS: u64 = 1 << 18;

/// Smallest-sum vector of positive integers `c` with `sum c_j cols_j = 0`,
/// ties broken lexicographically.
pub fn minimal_positive_kernel(cols: &[LatVec]) -> Option<Vec<i64>> {
    let n = cols.len();
    if n == 0 {
        return None;
    }
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut rows: Vec<Vec<BigRational>> = (0..3).map(|i| cols.iter().map(|c| q(c.0[i])).collect()).collect();
    // reduced row echelon form
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..n {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return None;
    }
    // pivot row `r` as integers: den_r * x_{p_r} = -sum_f coef_{r,f} x_f
    let int_rows: Vec<(i128, Vec<i128>)> = (0..pivots.len())
        .map(|row| {
            let den = free.iter().fold(BigInt::one(), |acc, &f| acc.lcm(rows[row][f].denom()));
            let scale = BigRational::from_integer(den.clone());
            let coefs = free
                .iter()
                .map(|&f| (&rows[row][f] * &scale).to_integer().to_i128().expect("small coefficients"))
                .collect();
            (den.to_i128().expect("small denominators"), coefs)
        })
        .collect();
    let solve = |assign: &[i64]| -> Option<Vec<i64>> {
        let mut x = alloc::vec![0i64; n];
        for (&f, &a) in free.iter().zip(assign) {
            x[f] = a;
        }
        for ((den, coefs), &pc) in int_rows.iter().zip(&pivots) {
            let num: i128 = -coefs.iter().zip(assign).map(|(c, &a)| c * a as i128).sum::<i128>();
            if num % den != 0 {
                return None;
            }
            x[pc] = i64::try_from(num / den).ok()?;
        }
        Some(x)
    };
    if free.len() == 1 {
        // one-dimensional kernel: scale the basis vector to a primitive one
        let mut basis = Vec::with_capacity(n);
        let mut x = alloc::vec![BigRational::zero(); n];
        x[free[0]] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = -rows[row][free[0]].clone();
        }
        let den = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        for v in &x {
            basis.push((v * BigRational::from_integer(den.clone())).to_integer());
        }
        let g = basis.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let sign = if basis.iter().all(|v| v.is_positive()) {
            1
        } else if basis.iter().all(|v| v.is_negative()) {
            -1
        } else {
            return None;
        };
        return basis.iter().map(|v| (v * BigInt::from(sign) / &g).to_i64()).collect();
    }
    let bound = {
        let mut b = 1u64;
        while (b + 1).pow(free.len() as u32) <= SEARCH_POINTS {
            b += 1;
        }
        b as i64
    };
    let mut best: Option<(i64, Vec<i64>)> = None;
    let mut assign = alloc::vec![1i64; free.len()];
    loop {
        if let Some(x) = solve(&assign) {
            if x.iter().all(|&v| v > 0) {
                let s: i64 = x.iter().sum();
                if best.as_ref().is_none_or(|(bs, bx)| (s, &x) < (*bs, bx)) {
                    best = Some((s, x));
                }
            }
        }
        let mut i = 0;
        while i < assign.len() && assign[i] == bound {
            assign[i] = 1;
            i += 1;
        }
        if i == assign.len() {
            break;
        }
        assign[i] += 1;
    }
    best.map(|(_, x)| x)
}

struct ConeInput {
    a: usize,
    b: usize,
    r: u64,
    /// The dual face is compact; only then may a cone with no strictly
    /// positive end contribute vertices.
    compact: bool,
}

enum WeightRule {
    /// `c_j = r_j + 1`, for dual fans of Newton polyhedra.
    Copies,
    /// `c_j` from [`multiplicity_coeffs`], for abstract fans.
    Relation,
}

fn chain_label(t: LatVec, copy: u64) -> String {
    if copy == 0 {
        format!("{t}")
    } else {
        format!("{t}#{copy}")
    }
}

/// Adds `copy` of the intermediate vertices of `chain`, returning the first
/// and last new indices.
fn add_chain(g: &mut ResolutionGraph, chain: &SubdivisionChain, copy: u64) -> Option<(usize, usize)> {
    let mut first = None;
    let mut prev: Option<usize> = None;
    for (t, &w) in chain.intermediates().iter().zip(&chain.weights) {
        let v = g.add_vertex(Vertex::labeled(w, 0, chain_label(*t, copy)));
        if let Some(p) = prev {
            g.add_edge(p, v).expect("fresh vertices");
        }
        first.get_or_insert(v);
        prev = Some(v);
    }
    Some((first?, prev?))
}

fn build(
    generators: &[LatVec],
    cones: &[ConeInput],
    genus: &dyn Fn(usize) -> u64,
    rule: WeightRule,
) -> Result<OkaGraph, OkaError> {
    let positive: Vec<bool> = generators.iter().map(LatVec::is_strictly_positive).collect();
    let contributes = |c: &ConeInput| positive[c.a] || positive[c.b] || c.compact;
    if !positive.iter().any(|&p| p) && !cones.iter().any(contributes) {
        return Err(OkaError::NoStrictlyPositiveGenerator);
    }

    let mut g = ResolutionGraph::new();
    let mut centrals: Vec<OkaVertexData> = Vec::new();
    let mut vertex_of = alloc::vec![usize::MAX; generators.len()];
    for (i, &u) in generators.iter().enumerate() {
        if positive[i] {
            let genus_u = genus(i);
            let v = g.add_vertex(Vertex::labeled(0, genus_u as u32, format!("u={u}")));
            vertex_of[i] = v;
            centrals.push(OkaVertexData {
                u,
                vertex: v,
                weight: 0,
                genus: genus_u,
                arms: Vec::new(),
            });
        }
    }

    for cone in cones.iter().filter(|c| contributes(c)) {
        let (ua, ub) = (generators[cone.a], generators[cone.b]);
        let (lo, hi) = if ua <= ub { (cone.a, cone.b) } else { (cone.b, cone.a) };
        let chain = regular_subdivide(generators[lo], generators[hi])?;
        let copies = cone.r + 1;
        for copy in 0..copies {
            let ends = add_chain(&mut g, &chain, copy);
            let mut join = |end: usize, inner: Option<usize>| {
                if positive[end] {
                    let other = if end == lo { hi } else { lo };
                    let target = inner.unwrap_or(vertex_of[other]);
                    if target != usize::MAX {
                        g.add_edge(vertex_of[end], target).expect("distinct vertices");
                    }
                }
            };
            match ends {
                Some((first, last)) => {
                    join(lo, Some(first));
                    join(hi, Some(last));
                }
                // regular cone: an edge only when both ends survive
                None if positive[lo] && positive[hi] => join(lo, None),
                None => {}
            }
        }
        for (end, other, oriented) in [(lo, hi, chain.clone()), (hi, lo, chain.reversed())] {
            if !positive[end] {
                continue;
            }
            let data = centrals.iter_mut().find(|c| c.vertex == vertex_of[end]).expect("central");
            data.arms.push(Arm {
                neighbour: generators[other],
                chain: oriented,
                r: cone.r,
                copies,
                far_end_kept: positive[other],
            });
        }
    }

    for data in &mut centrals {
        let firsts: Vec<LatVec> = data.arms.iter().map(|a| a.chain.first_step()).collect();
        let coeffs: Vec<u64> = match rule {
            WeightRule::Copies => data.arms.iter().map(|a| a.copies).collect(),
            WeightRule::Relation => {
                let nbrs: Vec<LatVec> = data.arms.iter().map(|a| a.neighbour).collect();
                match multiplicity_coeffs(data.u, &nbrs) {
                    Ok(c) => c,
                    Err(OkaError::NoPositiveRelation { generator }) => {
                        return Err(OkaError::NoIntegralWeight { generator })
                    }
                    Err(e) => return Err(e),
                }
            }
        };
        let pairs: Vec<(LatVec, u64)> = firsts.into_iter().zip(coeffs).collect();
        data.weight = central_weight(data.u, &pairs)?;
        g.vertices[data.vertex].weight = data.weight;
    }

    if g.is_empty() || !g.is_connected() {
        return Err(OkaError::DisconnectedResult);
    }
    Ok(OkaGraph { graph: g, centrals })
}

/// The graph of an abstract fan: one copy of every chain, central weights
/// from the minimal relation among the neighbours.
pub fn graph_from_fan(fan: &AbstractFan) -> Result<OkaGraph, OkaError> {
    fan.validate()?;
    let cones: Vec<ConeInput> = fan
        .two_cones
        .iter()
        .map(|&(a, b)| ConeInput {
            a,
            b,
            r: 0,
            compact: false,
        })
        .collect();
    build(&fan.generators, &cones, &|_| 0, WeightRule::Relation)
}

/// Oka's resolution graph of the dual fan of a Newton polyhedron.
///
/// Beyond the strictly positive rays, a compact edge lying on two
/// non-compact facets also contributes its chain with both ends removed.
pub fn oka_resolve_polyhedron(np: &NewtonPolyhedron) -> Result<OkaGraph, OkaError> {
    let fan = np.dual_fan();
    let mut cones = Vec::with_capacity(fan.two_cones.len());
    for (&(a, b), face) in fan.two_cones.iter().zip(&fan.cone_faces) {
        let compact = face.is_compact();
        let r = if compact { np.interior_points(face)? } else { 0 };
        cones.push(ConeInput { a, b, r, compact });
    }
    let genus = |i: usize| -> u64 { np.interior_points(&fan.ray_faces[i]).unwrap_or(0) };
    build(&fan.rays, &cones, &genus, WeightRule::Copies)
}

pub fn oka_resolve(p: &MultiPoly) -> Result<OkaGraph, OkaError> {
    oka_resolve_polyhedron(&NewtonPolyhedron::new(p)?)
}

/// The abstract fan underlying the dual fan of a Newton polyhedron.
pub fn abstract_fan(np: &NewtonPolyhedron) -> AbstractFan {
    let fan = np.dual_fan();
    AbstractFan {
        generators: fan.rays,
        two_cones: fan.two_cones,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::resgraph::tree_isomorphic;
    use alloc::vec;

    fn e60_fan() -> AbstractFan {
        AbstractFan {
            generators: vec![
                LatVec::new(5, 4, 6),
                LatVec::new(1, 0, 2),
                LatVec::new(0, 3, 2),
                LatVec::E1,
                LatVec::E2,
                LatVec::E3,
            ],
            two_cones: vec![(0, 1), (0, 2), (0, 3), (1, 3), (1, 5), (2, 5), (2, 4), (3, 4)],
        }
    }

    fn e7_shape(weights: [i64; 7]) -> ResolutionGraph {
        let vs: Vec<(i64, u32)> = weights.iter().map(|&w| (w, 0)).collect();
        ResolutionGraph::from_parts(&vs, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (0, 6)]).unwrap()
    }

    #[test]
    fn e60_from_abstract_fan() {
        let out = graph_from_fan(&e60_fan()).unwrap();
        assert_eq!(out.graph.len(), 7);
        assert!(tree_isomorphic(&out.graph, &e7_shape([2, 2, 2, 2, 2, 3, 2])).unwrap());
    }

    #[test]
    fn e60_from_polynomial() {
        let out = oka_resolve(&parse_poly("z^3+y^3*z+x^2*y^2", 3).unwrap()).unwrap();
        assert!(tree_isomorphic(&out.graph, &e7_shape([2, 2, 2, 2, 2, 3, 2])).unwrap());
        let c = out.central(LatVec::new(5, 4, 6)).unwrap();
        assert_eq!(c.weight, 2);
        assert_eq!(c.genus, 0);
        assert!(c.arms.iter().all(|a| a.r == 0 && !a.far_end_kept));
    }

    #[test]
    fn central_weights() {
        let u = LatVec::new(5, 4, 6);
        let arms = [(LatVec::new(4, 3, 5), 1), (LatVec::new(3, 3, 4), 1), (LatVec::new(3, 2, 3), 1)];
        assert_eq!(central_weight(u, &arms).unwrap(), 2);
        let one = LatVec::new(1, 1, 1);
        assert_eq!(central_weight(one, &[(LatVec::E1, 1), (LatVec::E2, 1), (LatVec::E3, 1)]).unwrap(), 1);
        let bad = LatVec::new(3, 1, 1);
        let arms = [(LatVec::new(5, 0, 2), 1), (LatVec::new(0, 2, 1), 1), (LatVec::new(0, 1, 0), 1)];
        assert_eq!(central_weight(bad, &arms), Err(OkaError::NoIntegralWeight { generator: bad }));
    }

    #[test]
    fn multiplicity_coefficients() {
        let u = LatVec::new(5, 4, 6);
        let c = multiplicity_coeffs(u, &[LatVec::new(1, 0, 2), LatVec::new(0, 3, 2), LatVec::E1]).unwrap();
        assert_eq!(c, vec![1, 1, 1]);
        let one = LatVec::new(1, 1, 1);
        assert_eq!(multiplicity_coeffs(one, &[LatVec::E1, LatVec::E2, LatVec::E3]).unwrap(), vec![1, 1, 1]);
        let c = multiplicity_coeffs(one, &[LatVec::E1, LatVec::E2, LatVec::E3, LatVec::new(1, 1, 0)]).unwrap();
        assert_eq!(c, vec![1, 1, 2, 1]);
        let bad = LatVec::new(3, 1, 1);
        assert_eq!(
            multiplicity_coeffs(bad, &[LatVec::new(5, 0, 2), LatVec::new(0, 2, 1), LatVec::new(0, 1, 0)]),
            Err(OkaError::NoPositiveRelation { generator: bad })
        );
    }

    #[test]
    fn obstructed_abstract_fan() {
        let fan = AbstractFan {
            generators: vec![LatVec::new(3, 1, 1), LatVec::new(5, 0, 2), LatVec::new(0, 2, 1), LatVec::new(0, 1, 0)],
            two_cones: vec![(0, 1), (0, 2), (0, 3)],
        };
        assert_eq!(
            graph_from_fan(&fan),
            Err(OkaError::NoIntegralWeight {
                generator: LatVec::new(3, 1, 1)
            })
        );
    }

    #[test]
    fn cone_over_a_conic() {
        let out = oka_resolve(&parse_poly("x^2+y^2+z^2", 3).unwrap()).unwrap();
        assert_eq!(out.graph.weights(), vec![2]);
        let fan = AbstractFan {
            generators: vec![LatVec::new(1, 1, 1), LatVec::E1, LatVec::E2, LatVec::E3],
            two_cones: vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3)],
        };
        assert_eq!(graph_from_fan(&fan).unwrap().graph.len(), 1);
    }

    #[test]
    fn invalid_fans() {
        let no_positive = AbstractFan {
            generators: vec![LatVec::E1, LatVec::E2],
            two_cones: vec![(0, 1)],
        };
        assert_eq!(graph_from_fan(&no_positive), Err(OkaError::NoStrictlyPositiveGenerator));
        let dangling = AbstractFan {
            generators: vec![LatVec::new(1, 1, 1), LatVec::E1, LatVec::E2],
            two_cones: vec![(0, 1)],
        };
        assert!(matches!(graph_from_fan(&dangling), Err(OkaError::InvalidFan(_))));
    }

    #[test]
    fn compact_edge_between_non_compact_facets() {
        let out = oka_resolve(&parse_poly("z^3+x^2*y", 3).unwrap()).unwrap();
        assert_eq!(out.graph.weights(), vec![3]);
        assert!(out.centrals.is_empty());
    }
}
