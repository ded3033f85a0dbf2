//! Graph JSON, DOT and ASCII renderings, and the abstract fan file format.

use std::fmt::Write as _;

use okares_core::lattice::{cone_det, LatVec};
use okares_core::okagraph::AbstractFan;
use okares_core::resgraph::{ResolutionGraph, Vertex};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Ascii,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    weight: i64,
    genus: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<VertexJson>,
    edges: Vec<[usize; 2]>,
}

pub fn graph_value(g: &ResolutionGraph) -> Value {
    let doc = GraphJson {
        vertices: g
            .vertices
            .iter()
            .enumerate()
            .map(|(id, v)| VertexJson {
                id,
                weight: v.weight,
                genus: v.genus,
                label: v.label.clone(),
            })
            .collect(),
        edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
    };
    serde_json::to_value(doc).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<ResolutionGraph, String> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| format!("graph JSON: {e}"))?;
    let mut g = ResolutionGraph::new();
    for (i, v) in doc.vertices.into_iter().enumerate() {
        if v.id != i {
            return Err(format!("graph JSON: vertex ids must be 0..n in order, found {} at {i}", v.id));
        }
        g.add_vertex(Vertex {
            weight: v.weight,
            genus: v.genus,
            label: v.label,
        });
    }
    for [a, b] in doc.edges {
        g.add_edge(a, b).map_err(|e| format!("graph JSON: {e}"))?;
    }
    Ok(g)
}

pub fn graph_dot(g: &ResolutionGraph) -> String {
    let mut s = String::from("graph resolution {\n");
    for (i, v) in g.vertices.iter().enumerate() {
        let _ = writeln!(s, "  {i} [label=\"w={},g={}\"];", v.weight, v.genus);
    }
    for &(a, b) in &g.edges {
        let _ = writeln!(s, "  {a} -- {b};");
    }
    s.push_str("}\n");
    s
}

fn is_central(v: &Vertex) -> bool {
    v.label.as_deref().is_some_and(|l| l.starts_with("u="))
}

/// Highest-weight central vertex, else highest-weight vertex; ties go to
/// the smallest index.
pub fn ascii_root(g: &ResolutionGraph) -> Option<usize> {
    let best = |pred: &dyn Fn(&Vertex) -> bool| {
        g.vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| pred(v))
            .max_by(|(i, a), (j, b)| a.weight.cmp(&b.weight).then(j.cmp(i)))
            .map(|(i, _)| i)
    };
    best(&is_central).or_else(|| best(&|_| true))
}

fn describe(i: usize, v: &Vertex) -> String {
    let mut s = format!("#{i} w={} g={}", v.weight, v.genus);
    if let Some(l) = &v.label {
        let _ = write!(s, " {l}");
    }
    s
}

pub fn graph_ascii(g: &ResolutionGraph) -> String {
    let Some(root) = ascii_root(g) else {
        return "(empty graph)\n".to_string();
    };
    let mut out = String::new();
    let mut seen = vec![false; g.len()];
    let mut roots = vec![root];
    roots.extend(0..g.len());
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let _ = writeln!(out, "{}", describe(r, &g.vertices[r]));
        ascii_children(g, r, None, "", &mut seen, &mut out);
    }
    out
}

fn ascii_children(g: &ResolutionGraph, v: usize, parent: Option<usize>, prefix: &str, seen: &mut [bool], out: &mut String) {
    let mut kids: Vec<usize> = g.neighbours(v);
    if let Some(p) = parent {
        if let Some(pos) = kids.iter().position(|&k| k == p) {
            kids.remove(pos);
        }
    }
    for (n, &k) in kids.iter().enumerate() {
        let last = n + 1 == kids.len();
        let (branch, indent) = if last { ("`-- ", "    ") } else { ("|-- ", "|   ") };
        if seen[k] {
            let _ = writeln!(out, "{prefix}{branch}(back to #{k})");
            continue;
        }
        seen[k] = true;
        let _ = writeln!(out, "{prefix}{branch}{}", describe(k, &g.vertices[k]));
        ascii_children(g, k, Some(v), &format!("{prefix}{indent}"), seen, out);
    }
}

pub fn render_graph(g: &ResolutionGraph, format: Format) -> String {
    match format {
        Format::Json => pretty(&graph_value(g)),
        Format::Dot => graph_dot(g),
        Format::Ascii => graph_ascii(g),
    }
}

/// Pretty JSON with a trailing newline; object keys come out sorted.
pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

#[derive(Serialize, Deserialize)]
struct FanJson {
    generators: Vec<[i64; 3]>,
    two_cones: Vec<[usize; 2]>,
}

pub fn fan_from_json(text: &str) -> Result<AbstractFan, String> {
    let doc: FanJson = serde_json::from_str(text).map_err(|e| format!("fan JSON: {e}"))?;
    Ok(AbstractFan {
        generators: doc.generators.into_iter().map(LatVec).collect(),
        two_cones: doc.two_cones.into_iter().map(|[a, b]| (a, b)).collect(),
    })
}

pub fn fan_value(fan: &AbstractFan) -> Value {
    let doc = FanJson {
        generators: fan.generators.iter().map(|g| g.0).collect(),
        two_cones: fan.two_cones.iter().map(|&(a, b)| [a, b]).collect(),
    };
    serde_json::to_value(doc).expect("fan serializes")
}

/// Determinant of every 2-cone, or the reason it has none.
pub fn cone_table(fan: &AbstractFan) -> Vec<Value> {
    fan.two_cones
        .iter()
        .map(|&(a, b)| {
            let (u, v) = (fan.generators.get(a).copied(), fan.generators.get(b).copied());
            let det = match (u, v) {
                (Some(u), Some(v)) => cone_det(u, v).map(Value::from).unwrap_or_else(|e| Value::from(e.to_string())),
                _ => Value::from("missing generator"),
            };
            json!({
                "cone": [a, b],
                "generators": [u.map(|g| g.0), v.map(|g| g.0)],
                "det": det,
            })
        })
        .collect()
}
