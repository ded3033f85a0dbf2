//! Newton polyhedra of polynomials in three variables and their dual fans.
//!
//! The polyhedron is `conv(supp f) + R^3_{>=0}`. Its recession cone is the
//! positive octant, so it is always full-dimensional and every facet normal
//! is a nonnegative primitive vector.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::NewtonError;
use crate::lattice::{primitive, LatVec};
use crate::poly::MultiPoly;

/// A face of a Newton polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Support points of the polynomial lying on the face, sorted.
    pub points: Vec<LatVec>,
    /// Axes `i` such that `e_i` is a recession direction of the face.
    pub recession: Vec<usize>,
    /// Normals of the facets of the polyhedron containing this face.
    pub normals: Vec<LatVec>,
    pub dim: usize,
}

impl Face {
    pub fn is_compact(&self) -> bool {
        self.recession.is_empty()
    }

    /// Extreme points of a compact edge, ordered.
    pub fn edge_endpoints(&self) -> Option<(LatVec, LatVec)> {
        if self.dim != 1 || !self.is_compact() {
            return None;
        }
        let a = self.points[0];
        let dir = self.points.iter().map(|p| *p - a).find(|d| !d.is_zero())?;
        let key = |p: &LatVec| (*p - a).dot(&dir);
        let lo = *self.points.iter().min_by_key(|p| key(p))?;
        let hi = *self.points.iter().max_by_key(|p| key(p))?;
        Some((lo.min(hi), lo.max(hi)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: LatVec,
    /// `min <normal, v>` over the support.
    pub support_value: i64,
    pub face: Face,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    pub generators: Vec<LatVec>,
    pub facets: Vec<Facet>,
    pub edges: Vec<Face>,
    pub vertices: Vec<Face>,
}

/// Rank of a set of integral 3-vectors.
fn rank(vectors: &[LatVec]) -> usize {
    let nonzero: Vec<LatVec> = vectors.iter().copied().filter(|v| !v.is_zero()).collect();
    if nonzero.is_empty() {
        return 0;
    }
    let mut crosses = Vec::new();
    for (i, a) in nonzero.iter().enumerate() {
        for b in &nonzero[i + 1..] {
            let c = a.cross(b);
            if !c.is_zero() {
                crosses.push(c);
            }
        }
    }
    if crosses.is_empty() {
        return 1;
    }
    let full = crosses.iter().any(|c| nonzero.iter().any(|v| c.dot(v) != 0));
    if full {
        3
    } else {
        2
    }
}

fn affine_dim(points: &[LatVec], recession: &[usize]) -> usize {
    let base = points[0];
    let mut dirs: Vec<LatVec> = points.iter().map(|p| *p - base).collect();
    dirs.extend(recession.iter().map(|&i| LatVec::axis(i)));
    rank(&dirs)
}

impl NewtonPolyhedron {
    pub fn new(p: &MultiPoly) -> Result<Self, NewtonError> {
        if p.nvars() != 3 {
            return Err(NewtonError::WrongVariableCount(p.nvars()));
        }
        if p.is_zero() {
            return Err(NewtonError::ZeroPolynomial);
        }
        let pts: Vec<LatVec> = p
            .support()
            .iter()
            .map(|m| LatVec([m.0[0] as i64, m.0[1] as i64, m.0[2] as i64]))
            .collect();
        Ok(Self::from_points(&pts))
    }

    /// Builds the polyhedron `conv(points) + R^3_{>=0}`.
    pub fn from_points(points: &[LatVec]) -> Self {
        assert!(!points.is_empty(), "Newton polyhedron of an empty support");
        let generators: Vec<LatVec> = points.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();

        let mut dirs: Vec<LatVec> = (0..3).map(LatVec::axis).collect();
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                dirs.push(*b - *a);
            }
        }
        let mut candidates = BTreeSet::new();
        for (i, a) in dirs.iter().enumerate() {
            for b in &dirs[i + 1..] {
                let c = a.cross(b);
                if c.is_zero() {
                    continue;
                }
                let c = primitive(c).expect("nonzero");
                let c = if c.0.iter().all(|&x| x <= 0) { -c } else { c };
                if c.is_nonnegative() {
                    candidates.insert(c);
                }
            }
        }

        let mut facets = Vec::new();
        for u in candidates {
            let face = face_for(&generators, u);
            if face.dim == 2 {
                let support_value = u.dot(&face.points[0]);
                facets.push(Facet {
                    normal: u,
                    support_value,
                    face,
                });
            }
        }
        for f in &mut facets {
            f.face.normals = alloc::vec![f.normal];
        }

        let mut np = NewtonPolyhedron {
            generators,
            facets,
            edges: Vec::new(),
            vertices: Vec::new(),
        };

        let mut seen = BTreeSet::new();
        for i in 0..np.facets.len() {
            for j in i + 1..np.facets.len() {
                let (a, b) = (&np.facets[i].face, &np.facets[j].face);
                let points: Vec<LatVec> = a.points.iter().filter(|p| b.points.contains(p)).copied().collect();
                if points.is_empty() {
                    continue;
                }
                let recession: Vec<usize> = a.recession.iter().filter(|r| b.recession.contains(r)).copied().collect();
                if affine_dim(&points, &recession) != 1 {
                    continue;
                }
                if seen.insert((points.clone(), recession.clone())) {
                    let normals = np.containing_facets(&points, &recession);
                    np.edges.push(Face {
                        points,
                        recession,
                        normals,
                        dim: 1,
                    });
                }
            }
        }

        for &p in &np.generators {
            let through: Vec<&Facet> = np.facets.iter().filter(|f| f.normal.dot(&p) == f.support_value).collect();
            let on_all = np
                .generators
                .iter()
                .filter(|q| through.iter().all(|f| f.normal.dot(q) == f.support_value))
                .count();
            let recedes = (0..3).any(|i| through.iter().all(|f| f.normal.0[i] == 0));
            if on_all == 1 && !recedes {
                np.vertices.push(Face {
                    points: alloc::vec![p],
                    recession: Vec::new(),
                    normals: through.iter().map(|f| f.normal).collect(),
                    dim: 0,
                });
            }
        }
        np
    }

    fn containing_facets(&self, points: &[LatVec], recession: &[usize]) -> Vec<LatVec> {
        self.facets
            .iter()
            .filter(|f| {
                points.iter().all(|p| f.normal.dot(p) == f.support_value)
                    && recession.iter().all(|&i| f.normal.0[i] == 0)
            })
            .map(|f| f.normal)
            .collect()
    }

    /// The face on which `<u, .>` attains its minimum.
    pub fn face_of(&self, u: LatVec) -> Result<Face, NewtonError> {
        if u.is_zero() || !u.is_nonnegative() {
            return Err(NewtonError::InvalidDirection(u));
        }
        let mut face = face_for(&self.generators, u);
        face.normals = self.containing_facets(&face.points, &face.recession);
        Ok(face)
    }

    pub fn facet(&self, normal: LatVec) -> Option<&Facet> {
        self.facets.iter().find(|f| f.normal == normal)
    }

    pub fn compact_facets(&self) -> impl Iterator<Item = &Facet> {
        self.facets.iter().filter(|f| f.face.is_compact())
    }

    /// All compact faces of every dimension: facets, then edges, then vertices.
    pub fn compact_faces(&self) -> Vec<Face> {
        let mut out: Vec<Face> = self.compact_facets().map(|f| f.face.clone()).collect();
        out.extend(self.edges.iter().filter(|e| e.is_compact()).cloned());
        out.extend(self.vertices.iter().cloned());
        out
    }

    /// Number of lattice points in the relative interior of a compact face.
    pub fn interior_points(&self, face: &Face) -> Result<u64, NewtonError> {
        if !face.is_compact() {
            return Err(NewtonError::NonCompactFace);
        }
        match face.dim {
            0 => Ok(0),
            1 => {
                let (a, b) = face.edge_endpoints().expect("compact edge");
                Ok((b - a).content() as u64 - 1)
            }
            _ => {
                let normal = face.normals[0];
                let value = normal.dot(&face.points[0]);
                let mut lo = [i64::MAX; 3];
                let mut hi = [i64::MIN; 3];
                for p in &face.points {
                    for i in 0..3 {
                        lo[i] = lo[i].min(p.0[i]);
                        hi[i] = hi[i].max(p.0[i]);
                    }
                }
                let others: Vec<&Facet> = self.facets.iter().filter(|f| f.normal != normal).collect();
                let mut count = 0;
                for a in lo[0]..=hi[0] {
                    for b in lo[1]..=hi[1] {
                        for c in lo[2]..=hi[2] {
                            let q = LatVec([a, b, c]);
                            if normal.dot(&q) == value && others.iter().all(|f| f.normal.dot(&q) > f.support_value) {
                                count += 1;
                            }
                        }
                    }
                }
                Ok(count)
            }
        }
    }

    pub fn dual_fan(&self) -> DualFan {
        let rays: Vec<LatVec> = self.facets.iter().map(|f| f.normal).collect();
        let mut two_cones = Vec::new();
        let mut cone_faces = Vec::new();
        for e in &self.edges {
            debug_assert_eq!(e.normals.len(), 2, "an edge lies on exactly two facets");
            let i = rays.iter().position(|r| *r == e.normals[0]).expect("ray");
            let j = rays.iter().position(|r| *r == e.normals[1]).expect("ray");
            two_cones.push((i.min(j), i.max(j)));
            cone_faces.push(e.clone());
        }
        DualFan {
            rays,
            two_cones,
            ray_faces: self.facets.iter().map(|f| f.face.clone()).collect(),
            cone_faces,
        }
    }
}

fn face_for(generators: &[LatVec], u: LatVec) -> Face {
    let m = generators.iter().map(|p| u.dot(p)).min().expect("nonempty support");
    let points: Vec<LatVec> = generators.iter().filter(|p| u.dot(p) == m).copied().collect();
    let recession: Vec<usize> = (0..3).filter(|&i| u.0[i] == 0).collect();
    let dim = affine_dim(&points, &recession);
    Face {
        points,
        recession,
        normals: Vec::new(),
        dim,
    }
}

/// The fan of normal cones of a Newton polyhedron: rays are facet normals
/// and 2-cones are pairs of facets sharing an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFan {
    pub rays: Vec<LatVec>,
    pub two_cones: Vec<(usize, usize)>,
    /// `ray_faces[i]` is the facet with normal `rays[i]`.
    pub ray_faces: Vec<Face>,
    /// `cone_faces[k]` is the edge dual to `two_cones[k]`.
    pub cone_faces: Vec<Face>,
}

impl DualFan {
    /// Indices of the rays adjacent to `ray` through a 2-cone, in cyclic
    /// order around it when `ray` is strictly positive.
    pub fn star(&self, ray: usize) -> Vec<usize> {
        let mut nbrs: Vec<(usize, &Face)> = self
            .two_cones
            .iter()
            .zip(&self.cone_faces)
            .filter_map(|(&(a, b), f)| match (a == ray, b == ray) {
                (true, _) => Some((b, f)),
                (_, true) => Some((a, f)),
                _ => None,
            })
            .collect();
        let mut out = Vec::with_capacity(nbrs.len());
        if nbrs.is_empty() {
            return out;
        }
        // walk the facet polygon: consecutive edges share a vertex
        let (first, mut cur) = nbrs.remove(0);
        out.push(first);
        while !nbrs.is_empty() {
            let next = nbrs
                .iter()
                .position(|(_, f)| f.points.iter().any(|p| cur.points.contains(p)))
                .unwrap_or(0);
            let (r, f) = nbrs.remove(next);
            out.push(r);
            cur = f;
        }
        out
    }

    pub fn strictly_positive_rays(&self) -> impl Iterator<Item = (usize, LatVec)> + '_ {
        self.rays.iter().copied().enumerate().filter(|(_, r)| r.is_strictly_positive())
    }
}
