//! Brute-force reference computations used to cross-check the fast paths:
//! exhaustive anti-nef search, lattice points on the boundary of a cone's
//! convex hull, and lattice point counts on Newton faces.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::LatticeError;
use crate::lattice::{cone_det, LatVec};
use crate::newton::Face;
use crate::resgraph::ResolutionGraph;

fn anti_nef(m: &[Vec<i64>], y: &[i64]) -> bool {
    (0..y.len()).all(|j| (0..y.len()).map(|i| y[i] * m[i][j]).sum::<i64>() <= 0)
}

/// Every divisor with `1 <= y_i <= bound_i` and `Y.E_j <= 0` for all `j`.
pub fn anti_nef_in_box(g: &ResolutionGraph, bound: &[i64]) -> Vec<Vec<i64>> {
    let m = g.intersection_matrix();
    let n = bound.len();
    let mut out = Vec::new();
    if n == 0 || bound.iter().any(|&b| b < 1) {
        return out;
    }
    let mut y = vec![1i64; n];
    loop {
        if anti_nef(&m, &y) {
            out.push(y.clone());
        }
        let mut i = 0;
        while i < n && y[i] == bound[i] {
            y[i] = 1;
            i += 1;
        }
        if i == n {
            return out;
        }
        y[i] += 1;
    }
}

/// The least anti-nef divisor in the box, provided it lies below every
/// other one found.
pub fn minimal_anti_nef(g: &ResolutionGraph, bound: &[i64]) -> Option<Vec<i64>> {
    let found = anti_nef_in_box(g, bound);
    let min = found.iter().min_by_key(|y| y.iter().sum::<i64>())?;
    found
        .iter()
        .all(|y| y.iter().zip(min).all(|(a, b)| a >= b))
        .then(|| min.clone())
}

type P2 = (i64, i64);

fn turn(o: P2, a: P2, b: P2) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Lattice points on the compact boundary of the convex hull of the nonzero
/// lattice points of `cone(u, v)`, from `u` to `v`.
pub fn boundary_points(u: LatVec, v: LatVec) -> Result<Vec<LatVec>, LatticeError> {
    let d = cone_det(u, v)? as i64;
    // lattice points (i u + j v) / d of the triangle i + j <= d
    let mut pts: Vec<P2> = Vec::new();
    for i in 0..=d {
        for j in 0..=d - i {
            if (i, j) != (0, 0) && (u * i + v * j).div_exact(d).is_some() {
                pts.push((i, j));
            }
        }
    }
    pts.sort();
    let mut hull: Vec<P2> = Vec::new();
    for p in pts {
        while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) < 0 {
            hull.pop();
        }
        hull.push(p);
    }
    // runs from v = (0, d) to u = (d, 0)
    Ok(hull.iter().rev().map(|&(i, j)| (u * i + v * j).div_exact(d).expect("lattice point")).collect())
}

/// Convex hull vertices, counter-clockwise.
fn polygon_2d(points: &[P2]) -> Vec<P2> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let mut hull: Vec<P2> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        for k in 0..pts.len() {
            let p = if pass == 0 { pts[k] } else { pts[pts.len() - 1 - k] };
            while hull.len() >= start + 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

fn projection(face: &Face) -> (LatVec, [usize; 2]) {
    let n = face.normals[0];
    let drop = (0..3).find(|&i| n.0[i] != 0).expect("nonzero normal");
    let keep = match drop {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };
    (n, keep)
}

fn face_polygon(face: &Face, keep: [usize; 2]) -> Vec<LatVec> {
    let key = |p: &LatVec| (p.0[keep[0]], p.0[keep[1]]);
    let proj: Vec<P2> = face.points.iter().map(key).collect();
    polygon_2d(&proj)
        .into_iter()
        .map(|q| *face.points.iter().find(|p| key(p) == q).expect("projected support point"))
        .collect()
}

/// Interior lattice points of a compact 2-face by Pick's theorem in the
/// lattice of the face plane.
pub fn pick_interior(face: &Face) -> u64 {
    let (n, keep) = projection(face);
    let poly = face_polygon(face, keep);
    let p0 = poly[0];
    let mut twice_area = 0;
    for w in poly[1..].windows(2) {
        let c = (w[0] - p0).cross(&(w[1] - p0));
        twice_area += c.dot(&n) / n.dot(&n);
    }
    let boundary: i64 = (0..poly.len()).map(|i| (poly[(i + 1) % poly.len()] - poly[i]).content()).sum();
    ((twice_area.abs() - boundary + 2) / 2) as u64
}

/// Interior lattice points of a compact 2-face by scanning its bounding box.
pub fn scan_interior(face: &Face) -> u64 {
    let (n, keep) = projection(face);
    let value = n.dot(&face.points[0]);
    let key = |p: &LatVec| (p.0[keep[0]], p.0[keep[1]]);
    let poly: Vec<P2> = face_polygon(face, keep).iter().map(key).collect();
    let lo: Vec<i64> = (0..3).map(|i| face.points.iter().map(|p| p.0[i]).min().unwrap_or(0)).collect();
    let hi: Vec<i64> = (0..3).map(|i| face.points.iter().map(|p| p.0[i]).max().unwrap_or(0)).collect();
    let mut count = 0;
    for a in lo[0]..=hi[0] {
        for b in lo[1]..=hi[1] {
            for c in lo[2]..=hi[2] {
                let q = LatVec([a, b, c]);
                if n.dot(&q) != value {
                    continue;
                }
                let q2 = key(&q);
                let inside = (0..poly.len()).all(|i| turn(poly[i], poly[(i + 1) % poly.len()], q2) > 0);
                count += u64::from(inside);
            }
        }
    }
    count
}

/// Lattice points strictly between the endpoints of a compact edge.
pub fn edge_interior(face: &Face) -> Option<u64> {
    let (a, b) = face.edge_endpoints()?;
    let d = b - a;
    let steps = d.0.iter().map(|x| x.abs()).max().unwrap_or(0);
    Some((1..steps).filter(|&t| (d * t).div_exact(steps).is_some()).count() as u64)
}
