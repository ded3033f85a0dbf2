//! Brute-force oracles for Laufer's algorithm, regular subdivisions and
//! lattice point counts on Newton faces.

use okares_core::lattice::{cone_det, hj_expand, regular_subdivide, LatVec};
use okares_core::newton::NewtonPolyhedron;
use okares_core::oracle::{anti_nef_in_box, boundary_points, edge_interior, minimal_anti_nef, pick_interior, scan_interior};
use okares_core::poly::{Monomial, MultiPoly};
use okares_core::resgraph::{Divisor, ResolutionGraph};
use num_rational::BigRational;
use proptest::prelude::*;

// ---------------------------------------------------------------- Laufer

fn tree(weights: &[i64], parents: &[usize]) -> ResolutionGraph {
    let edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p % (i + 1), i + 1)).collect();
    let verts: Vec<(i64, u32)> = weights.iter().map(|&w| (w, 0)).collect();
    ResolutionGraph::from_parts(&verts, &edges).unwrap()
}

fn graph_strategy() -> impl Strategy<Value = ResolutionGraph> {
    (1usize..=9)
        .prop_flat_map(|n| (prop::collection::vec(1i64..=4, n), prop::collection::vec(0usize..9, n - 1)))
        .prop_map(|(w, p)| tree(&w, &p))
}

const MAX_COEFF: i64 = 8;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn laufer_matches_exhaustive_search(g in graph_strategy()) {
        prop_assume!(g.is_negative_definite());
        let z = g.fundamental_cycle().unwrap();
        prop_assume!(z.coeffs.iter().all(|&a| a <= MAX_COEFF));
        let n = g.len();
        // Small graphs: the full box. Larger ones: the box below Z, which
        // contains the minimum because anti-nef cycles are closed under min.
        let bound: Vec<i64> = if n <= 5 { vec![MAX_COEFF; n] } else { z.coeffs.clone() };
        prop_assert_eq!(minimal_anti_nef(&g, &bound), Some(z.coeffs));
    }

    #[test]
    fn laufer_order_independent(g in graph_strategy(), picks in prop::collection::vec(0usize..64, 64)) {
        prop_assume!(g.is_negative_definite());
        let z = g.fundamental_cycle().unwrap();
        let mut t = 0;
        let other = g
            .fundamental_cycle_with(&mut |c: &[usize]| {
                t += 1;
                c[picks[t % picks.len()] % c.len()]
            })
            .unwrap();
        prop_assert_eq!(z, other);
    }

    #[test]
    fn exhaustive_rationality_agrees(g in graph_strategy()) {
        prop_assume!(g.is_negative_definite());
        let z = g.fundamental_cycle().unwrap();
        prop_assume!(z.coeffs.iter().map(|&a| 2 * a + 1).product::<i64>() <= 200_000);
        prop_assert_eq!(g.is_rational().unwrap(), g.is_rational_exhaustive().unwrap());
    }
}

#[test]
fn fundamental_cycle_of_e8() {
    let g = tree(&[2; 8], &[0, 1, 2, 3, 4, 5, 4]);
    let z = g.fundamental_cycle().unwrap();
    let bound = z.coeffs.clone();
    assert_eq!(anti_nef_in_box(&g, &bound), vec![z.coeffs.clone()]);
    assert_eq!(z.coeffs.iter().sum::<i64>(), 29);
    assert_eq!(g.self_intersection(&Divisor { coeffs: z.coeffs }).unwrap(), -2);
}

// ----------------------------------------------------- regular subdivision

fn check_chain(u: LatVec, v: LatVec) {
    let chain = regular_subdivide(u, v).unwrap();
    assert_eq!(chain.vectors, boundary_points(u, v).unwrap(), "cone {u} {v}");
    for w in chain.vectors.windows(2) {
        assert_eq!(cone_det(w[0], w[1]).unwrap(), 1);
    }
    let d = cone_det(u, v).unwrap();
    if d > 1 {
        assert_eq!(chain.weights, hj_expand(d, chain.dets[1]).unwrap());
    }
}

fn unimodular(m: [[i64; 3]; 3], x: LatVec) -> LatVec {
    LatVec(core::array::from_fn(|r| (0..3).map(|c| m[r][c] * x.0[c]).sum()))
}

const MAX_DET: i64 = 50;

#[test]
fn chains_match_boundary_enumeration_for_all_normal_forms() {
    let transforms = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[1, 2, 0], [0, 1, 0], [3, 1, 1]],
        [[2, 1, 1], [1, 1, 0], [1, 0, 1]],
    ];
    for d in 1..=MAX_DET {
        for q in 0..d.max(1) {
            if num_integer::gcd(d, q) != 1 {
                continue;
            }
            let u = LatVec::new(0, 1, 0);
            let v = LatVec::new(d, -q, 0);
            for m in transforms {
                check_chain(unimodular(m, u), unimodular(m, v));
                check_chain(unimodular(m, v), unimodular(m, u));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn chains_match_boundary_enumeration(a in prop::array::uniform3(-6i64..=6), b in prop::array::uniform3(-6i64..=6)) {
        let (u, v) = (LatVec(a), LatVec(b));
        prop_assume!(u.is_primitive() && v.is_primitive());
        let d = cone_det(u, v);
        prop_assume!(matches!(d, Ok(d) if d as i64 <= MAX_DET));
        check_chain(u, v);
    }
}

// ---------------------------------------------------------- face lattice

fn poly_from(exps: &[[u32; 3]]) -> MultiPoly {
    let mut p = MultiPoly::zero(3);
    for e in exps {
        p.add_term(Monomial::new(e), BigRational::from_integer(1.into()));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn interior_points_match_oracles(exps in prop::collection::vec(prop::array::uniform3(0u32..=7), 3..8)) {
        let p = poly_from(&exps);
        let np = NewtonPolyhedron::new(&p).unwrap();
        for face in np.compact_faces() {
            let got = np.interior_points(&face).unwrap();
            match face.dim {
                2 => {
                    prop_assert_eq!(got, pick_interior(&face));
                    prop_assert_eq!(got, scan_interior(&face));
                }
                1 => prop_assert_eq!(Some(got), edge_interior(&face)),
                _ => prop_assert_eq!(got, 0),
            }
        }
    }

    #[test]
    fn facets_support_every_exponent(exps in prop::collection::vec(prop::array::uniform3(0u32..=7), 1..8)) {
        let p = poly_from(&exps);
        let np = NewtonPolyhedron::new(&p).unwrap();
        for f in &np.facets {
            let min = exps.iter().map(|e| f.normal.dot(&LatVec::new(e[0] as i64, e[1] as i64, e[2] as i64))).min().unwrap();
            prop_assert_eq!(min, f.support_value);
            prop_assert!(f.normal.is_nonnegative() && f.normal.is_primitive());
        }
    }
}
