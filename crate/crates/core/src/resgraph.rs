//! Weighted resolution graphs: intersection form, fundamental cycle,
//! arithmetic genus, rationality, blow-downs and tree isomorphism.
//!
//! A vertex of weight `w` stands for an exceptional curve `E` with `E^2 = -w`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::GraphError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub weight: i64,
    pub genus: u32,
    pub label: Option<String>,
}

impl Vertex {
    pub fn new(weight: i64, genus: u32) -> Self {
        Vertex {
            weight,
            genus,
            label: None,
        }
    }

    pub fn labeled(weight: i64, genus: u32, label: String) -> Self {
        Vertex {
            weight,
            genus,
            label: Some(label),
        }
    }
}

/// A weighted, genus-labelled multigraph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResolutionGraph {
    pub vertices: Vec<Vertex>,
    /// Unordered pairs `(a, b)` with `a < b`; repeated pairs are multi-edges.
    pub edges: Vec<(usize, usize)>,
}

/// An integral cycle `Y = sum a_i E_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Divisor {
    pub coeffs: Vec<i64>,
}

/// Outcome of [`ResolutionGraph::blow_down`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowDown {
    pub graph: ResolutionGraph,
    pub contractions: usize,
}

impl BlowDown {
    /// Every curve was contracted: the point is smooth.
    pub fn is_smooth(&self) -> bool {
        self.graph.vertices.is_empty()
    }
}

impl ResolutionGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// A graph from `(weight, genus)` pairs and an edge list.
    pub fn from_parts(vertices: &[(i64, u32)], edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = ResolutionGraph::new();
        for &(w, genus) in vertices {
            g.add_vertex(Vertex::new(w, genus));
        }
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// A chain of genus-0 vertices with the given weights.
    pub fn path(weights: &[i64]) -> Self {
        let mut g = ResolutionGraph::new();
        for &w in weights {
            g.add_vertex(Vertex::new(w, 0));
        }
        for i in 1..weights.len() {
            g.edges.push((i - 1, i));
        }
        g
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn add_vertex(&mut self, v: Vertex) -> usize {
        self.vertices.push(v);
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        let n = self.vertices.len();
        if a == b || a >= n || b >= n {
            return Err(GraphError::InvalidEdge(a, b));
        }
        self.edges.push((a.min(b), a.max(b)));
        Ok(())
    }

    pub fn weights(&self) -> Vec<i64> {
        self.vertices.iter().map(|v| v.weight).collect()
    }

    /// Number of edge ends at `v`.
    pub fn valence(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Neighbours of `v`, listed once per edge.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }

    pub fn has_multi_edge(&self) -> Option<(usize, usize)> {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        sorted.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.vertices.len().max(1)
    }

    /// `M_ii = -w_i`, `M_ij` = number of edges joining `i` and `j`.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, v) in self.vertices.iter().enumerate() {
            m[i][i] = -v.weight;
        }
        for &(a, b) in &self.edges {
            m[a][b] += 1;
            m[b][a] += 1;
        }
        m
    }

    /// Sylvester's criterion on exact leading principal minors.
    pub fn is_negative_definite(&self) -> bool {
        is_negative_definite(&self.intersection_matrix())
    }

    fn check_divisor(&self, y: &Divisor) -> Result<(), GraphError> {
        if y.coeffs.len() != self.vertices.len() {
            return Err(GraphError::DivisorLength {
                expected: self.vertices.len(),
                got: y.coeffs.len(),
            });
        }
        Ok(())
    }

    /// `(Y . E_j)` for every vertex `j`.
    pub fn intersections(&self, y: &Divisor) -> Result<Vec<i64>, GraphError> {
        self.check_divisor(y)?;
        let m = self.intersection_matrix();
        Ok((0..self.vertices.len())
            .map(|j| y.coeffs.iter().zip(&m).map(|(a, row)| a * row[j]).sum())
            .collect())
    }

    pub fn self_intersection(&self, y: &Divisor) -> Result<i64, GraphError> {
        let dots = self.intersections(y)?;
        Ok(y.coeffs.iter().zip(dots).map(|(a, d)| a * d).sum())
    }

    /// Laufer's algorithm, raising the lowest-index offending coefficient.
    pub fn fundamental_cycle(&self) -> Result<Divisor, GraphError> {
        self.fundamental_cycle_with(&mut |candidates| candidates[0])
    }

    /// Laufer's algorithm with a caller-chosen rule for which offending
    /// vertex to raise; `pick` receives the nonempty list of vertices `j`
    /// with `Z . E_j > 0` and returns one of them.
    pub fn fundamental_cycle_with(
        &self,
        pick: &mut dyn FnMut(&[usize]) -> usize,
    ) -> Result<Divisor, GraphError> {
        if self.vertices.is_empty() || !self.is_negative_definite() {
            return Err(GraphError::NotNegativeDefinite);
        }
        let m = self.intersection_matrix();
        let n = self.vertices.len();
        let mut z = vec![1i64; n];
        let mut dots: Vec<i64> = (0..n).map(|j| (0..n).map(|i| m[i][j]).sum()).collect();
        loop {
            let bad: Vec<usize> = (0..n).filter(|&j| dots[j] > 0).collect();
            if bad.is_empty() {
                return Ok(Divisor { coeffs: z });
            }
            let j = pick(&bad);
            assert!(bad.contains(&j), "pick must return an offending vertex");
            z[j] += 1;
            for (k, d) in dots.iter_mut().enumerate() {
                *d += m[j][k];
            }
        }
    }

    /// `p_a(Y) = 1 + (Y^2 + Y.K) / 2` with `Y.K = sum a_i (w_i - 2 + 2 g_i)`.
    pub fn arithmetic_genus(&self, y: &Divisor) -> Result<i64, GraphError> {
        let yy = self.self_intersection(y)?;
        let yk: i64 = y
            .coeffs
            .iter()
            .zip(&self.vertices)
            .map(|(a, v)| a * (v.weight - 2 + 2 * v.genus as i64))
            .sum();
        Ok(1 + (yy + yk) / 2)
    }

    /// Artin's criterion: `p_a(Z) = 0` for the fundamental cycle `Z`.
    pub fn is_rational(&self) -> Result<bool, GraphError> {
        let z = self.fundamental_cycle()?;
        Ok(self.arithmetic_genus(&z)? == 0)
    }

    /// Brute-force check that `p_a(Y) <= 0` for every `0 < Y <= 2Z`.
    pub fn is_rational_exhaustive(&self) -> Result<bool, GraphError> {
        let z = self.fundamental_cycle()?;
        let bound: Vec<i64> = z.coeffs.iter().map(|a| 2 * a).collect();
        let mut y = vec![0i64; bound.len()];
        loop {
            let mut i = 0;
            while i < y.len() && y[i] == bound[i] {
                y[i] = 0;
                i += 1;
            }
            if i == y.len() {
                return Ok(true);
            }
            y[i] += 1;
            if self.arithmetic_genus(&Divisor { coeffs: y.clone() })? > 0 {
                return Ok(false);
            }
        }
    }

    /// `-Z^2`, defined for rational graphs.
    pub fn multiplicity(&self) -> Result<u64, GraphError> {
        let z = self.fundamental_cycle()?;
        if self.arithmetic_genus(&z)? != 0 {
            return Err(GraphError::NotRational);
        }
        Ok((-self.self_intersection(&z)?) as u64)
    }

    fn remove_vertex(&mut self, v: usize) {
        self.vertices.remove(v);
        self.edges.retain(|&(a, b)| a != v && b != v);
        for e in &mut self.edges {
            if e.0 > v {
                e.0 -= 1;
            }
            if e.1 > v {
                e.1 -= 1;
            }
        }
    }

    /// Contracts genus-0 weight-1 curves of valence at most 2 until none is
    /// left, lowest index first.
    pub fn blow_down(&self) -> Result<BlowDown, GraphError> {
        let mut g = self.clone();
        let mut contractions = 0;
        loop {
            let next = (0..g.vertices.len())
                .find(|&v| g.vertices[v].weight == 1 && g.vertices[v].genus == 0 && g.valence(v) <= 2);
            let Some(v) = next else { break };
            let nbrs = g.neighbours(v);
            if nbrs.len() == 2 && nbrs[0] == nbrs[1] {
                return Err(GraphError::NonSnc {
                    vertex_a: v,
                    vertex_b: nbrs[0],
                });
            }
            for &u in &nbrs {
                g.vertices[u].weight -= 1;
            }
            if let [a, b] = nbrs[..] {
                g.edges.push((a.min(b), a.max(b)));
            }
            g.remove_vertex(v);
            contractions += 1;
        }
        if let Some(v) = (0..g.vertices.len()).find(|&v| g.vertices[v].weight == 1 && g.vertices[v].genus == 0) {
            return Err(GraphError::UnsupportedContraction {
                vertex: v,
                valence: g.valence(v),
            });
        }
        if let Some((a, b)) = g.has_multi_edge() {
            return Err(GraphError::NonSnc { vertex_a: a, vertex_b: b });
        }
        Ok(BlowDown { graph: g, contractions })
    }

    /// Canonical string of a tree, invariant under relabelling of vertices.
    pub fn tree_canonical_form(&self) -> Result<String, GraphError> {
        if !self.is_tree() || self.has_multi_edge().is_some() {
            return Err(GraphError::NotATree);
        }
        if self.vertices.is_empty() {
            return Ok(String::new());
        }
        let adj: Vec<Vec<usize>> = (0..self.vertices.len()).map(|v| self.neighbours(v)).collect();
        tree_centres(&adj)
            .into_iter()
            .map(|c| encode(self, &adj, c, usize::MAX))
            .min()
            .ok_or(GraphError::NotATree)
    }
}

/// Weighted tree isomorphism preserving weights and genera.
pub fn tree_isomorphic(a: &ResolutionGraph, b: &ResolutionGraph) -> Result<bool, GraphError> {
    Ok(a.tree_canonical_form()? == b.tree_canonical_form()?)
}

fn encode(g: &ResolutionGraph, adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[v].iter().filter(|&&u| u != parent).map(|&u| encode(g, adj, u, v)).collect();
    children.sort();
    let vx = &g.vertices[v];
    let mut s = alloc::format!("({},{}", vx.weight, vx.genus);
    for c in children {
        s.push_str(&c);
    }
    s.push(')');
    s
}

/// One or two centres of a tree, found by peeling leaves.
fn tree_centres(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= leaves.len();
        let mut next = Vec::new();
        for &l in &leaves {
            for &u in &adj[l] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        leaves = next;
    }
    leaves
}

/// Sylvester's criterion for a symmetric integer matrix, by exact Gaussian
/// elimination: `M` is negative definite iff every pivot of `-M` is positive.
pub fn is_negative_definite(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(BigInt::from(-x))).collect())
        .collect();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    true
}

/// Multiset of `(weight, genus)` labels, handy for diagnostics.
pub fn weight_profile(g: &ResolutionGraph) -> BTreeMap<(i64, u32), usize> {
    let mut out = BTreeMap::new();
    for v in &g.vertices {
        *out.entry((v.weight, v.genus)).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// E_7 shape: centre 0 with arms of length 3, 2 and 1.
    fn e7(weights: [i64; 7]) -> ResolutionGraph {
        let vs: Vec<(i64, u32)> = weights.iter().map(|&w| (w, 0)).collect();
        ResolutionGraph::from_parts(&vs, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (0, 6)]).unwrap()
    }

    #[test]
    fn intersection_matrices() {
        assert_eq!(ResolutionGraph::path(&[2]).intersection_matrix(), vec![vec![-2]]);
        assert_eq!(
            ResolutionGraph::path(&[2, 2]).intersection_matrix(),
            vec![vec![-2, 1], vec![1, -2]]
        );
    }

    #[test]
    fn negative_definiteness() {
        assert!(ResolutionGraph::path(&[2, 2]).is_negative_definite());
        assert!(!ResolutionGraph::path(&[1, 1]).is_negative_definite());
        assert!(e7([2, 2, 2, 2, 2, 3, 2]).is_negative_definite());
        assert!(!ResolutionGraph::path(&[0]).is_negative_definite());
    }

    #[test]
    fn fundamental_cycles() {
        let z = ResolutionGraph::path(&[2]).fundamental_cycle().unwrap();
        assert_eq!(z.coeffs, vec![1]);
        let g = e7([2; 7]);
        let z = g.fundamental_cycle().unwrap();
        // highest root of E_7
        assert_eq!(z.coeffs, vec![4, 3, 2, 1, 3, 2, 2]);
        assert_eq!(g.self_intersection(&z).unwrap(), -2);
        assert_eq!(
            ResolutionGraph::path(&[1, 1]).fundamental_cycle(),
            Err(GraphError::NotNegativeDefinite)
        );
    }

    #[test]
    fn genus_and_rationality() {
        let one = |w, genus| ResolutionGraph::from_parts(&[(w, genus)], &[]).unwrap();
        let e = Divisor { coeffs: vec![1] };
        assert_eq!(one(2, 0).arithmetic_genus(&e).unwrap(), 0);
        assert_eq!(one(3, 0).arithmetic_genus(&e).unwrap(), 0);
        assert_eq!(one(2, 1).arithmetic_genus(&e).unwrap(), 1);
        assert!(!one(2, 1).is_rational().unwrap());
        assert!(one(2, 0).is_rational().unwrap());
        assert_eq!(one(3, 0).multiplicity().unwrap(), 3);
        assert_eq!(one(2, 1).multiplicity(), Err(GraphError::NotRational));
        assert!(one(2, 0).is_rational_exhaustive().unwrap());
        assert!(!one(2, 1).is_rational_exhaustive().unwrap());
    }

    #[test]
    fn e60_minimal_graph_invariants() {
        let g = e7([2, 2, 2, 2, 2, 3, 2]);
        assert!(g.is_rational().unwrap());
        assert!(g.is_rational_exhaustive().unwrap());
        assert_eq!(g.multiplicity().unwrap(), 3);
    }

    #[test]
    fn blow_downs() {
        let b = ResolutionGraph::path(&[3, 1, 3]).blow_down().unwrap();
        assert_eq!(b.graph.weights(), vec![2, 2]);
        assert_eq!(b.graph.edges, vec![(0, 1)]);
        assert_eq!(b.contractions, 1);
        let s = ResolutionGraph::path(&[1]).blow_down().unwrap();
        assert!(s.is_smooth());
        let chain = ResolutionGraph::path(&[2, 1]).blow_down().unwrap();
        assert_eq!(chain.contractions, 2);
        assert!(chain.is_smooth());
        let star = ResolutionGraph::from_parts(&[(1, 0), (2, 0), (2, 0), (2, 0)], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            star.blow_down(),
            Err(GraphError::UnsupportedContraction { vertex: 0, valence: 3 })
        );
    }

    #[test]
    fn blow_down_creating_a_double_edge_is_flagged() {
        // a triangle through a (-1)-curve
        let g = ResolutionGraph::from_parts(&[(3, 0), (1, 0), (3, 0)], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(g.blow_down(), Err(GraphError::NonSnc { .. })));
    }

    #[test]
    fn isomorphism() {
        let a = e7([2, 2, 2, 2, 2, 3, 2]);
        let perm = [6, 2, 0, 4, 1, 3, 5];
        let mut b = ResolutionGraph::new();
        let mut inv = [0; 7];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        for &old in &perm {
            b.add_vertex(a.vertices[old].clone());
        }
        for &(x, y) in &a.edges {
            b.add_edge(inv[x], inv[y]).unwrap();
        }
        assert!(tree_isomorphic(&a, &b).unwrap());
        assert!(tree_isomorphic(&ResolutionGraph::path(&[2, 3]), &ResolutionGraph::path(&[3, 2])).unwrap());
        assert!(!tree_isomorphic(&ResolutionGraph::path(&[2, 2, 3]), &ResolutionGraph::path(&[2, 3, 2])).unwrap());
        assert!(!tree_isomorphic(&a, &e7([2, 2, 2, 3, 2, 2, 2])).unwrap());
        let cyc = ResolutionGraph::from_parts(&[(2, 0), (2, 0), (2, 0)], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tree_isomorphic(&cyc, &a), Err(GraphError::NotATree));
    }
}
