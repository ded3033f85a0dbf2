//! The nine families of rational triple points: determinantal presentations,
//! cubic surfaces in three variables obtained by projection, and their
//! expected minimal resolution graphs.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::CatalogError;
use crate::lattice::LatVec;
use crate::newton::NewtonPolyhedron;
use crate::nondeg::{check_newton_nondegenerate, NondegVerdict};
use crate::okagraph::{multiplicity_coeffs, oka_resolve, OkaGraph};
use crate::poly::{gcd_poly, minors2x2, parse_poly, resultant, MultiPoly, PolyMatrix2x3};
use crate::resgraph::{tree_isomorphic, ResolutionGraph, Vertex};

type MatrixText = [[String; 3]; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RtpFamily {
    A { k: u32, l: u32, m: u32 },
    B { k: u32, m: u32 },
    C { k: u32, l: u32 },
    D { k: u32 },
    E60,
    E07,
    E70,
    F { k: u32 },
    H { n: u32 },
}

/// Branches of the H series by `n mod 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum HBranch {
    /// `n = 3k - 1`
    Minus(u32),
    /// `n = 3k`
    Zero(u32),
    /// `n = 3k + 1`
    Plus(u32),
}

fn h_branch(n: u32) -> HBranch {
    match n % 3 {
        2 => HBranch::Minus(n.div_ceil(3)),
        0 => HBranch::Zero(n / 3),
        _ => HBranch::Plus(n / 3),
    }
}

impl fmt::Display for RtpFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RtpFamily::A { k, l, m } => write!(f, "A:{k},{l},{m}"),
            RtpFamily::B { k, m } => write!(f, "B:{k},{m}"),
            RtpFamily::C { k, l } => write!(f, "C:{k},{l}"),
            RtpFamily::D { k } => write!(f, "D:{k}"),
            RtpFamily::E60 => f.write_str("E60"),
            RtpFamily::E07 => f.write_str("E07"),
            RtpFamily::E70 => f.write_str("E70"),
            RtpFamily::F { k } => write!(f, "F:{k}"),
            RtpFamily::H { n } => write!(f, "H:{n}"),
        }
    }
}

impl RtpFamily {
    /// Parses selectors such as `A:4,3,2`, `B:3,4`, `E60` or `H:5`.
    pub fn parse(selector: &str) -> Result<Self, CatalogError> {
        let bad = || CatalogError::InvalidSelector(selector.to_string());
        let s = selector.trim();
        let (name, args) = match s.split_once(':') {
            Some((n, a)) => (n.trim(), Some(a)),
            None => (s, None),
        };
        let nums: Vec<u32> = match args {
            Some(a) => a
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?,
            None => Vec::new(),
        };
        let fam = match (name, nums.as_slice()) {
            ("A", &[k, l, m]) => RtpFamily::A { k, l, m },
            ("B", &[k, m]) => RtpFamily::B { k, m },
            ("C", &[k, l]) => RtpFamily::C { k, l },
            ("D", &[k]) => RtpFamily::D { k },
            ("E60", &[]) => RtpFamily::E60,
            ("E07", &[]) => RtpFamily::E07,
            ("E70", &[]) => RtpFamily::E70,
            ("F", &[k]) => RtpFamily::F { k },
            ("H", &[n]) => RtpFamily::H { n },
            _ => return Err(bad()),
        };
        fam.validate()?;
        Ok(fam)
    }

    /// Checks parameter domains and the branch conditions of each form.
    pub fn validate(&self) -> Result<(), CatalogError> {
        let out = |why: String| Err(CatalogError::ParameterOutOfRange(why));
        match *self {
            RtpFamily::A { k, l, m } => {
                if k < 2 || l < 2 || m < 2 {
                    return out(format!("A needs k,l,m >= 2, got {k},{l},{m}"));
                }
                if !(k >= l && l >= m) && !(k == l && l < m) {
                    return Err(CatalogError::AmbiguousBranch(format!(
                        "A:{k},{l},{m} (neither k >= l >= m nor k = l < m)"
                    )));
                }
            }
            RtpFamily::B { k, m } => {
                if k < 2 || m < 2 {
                    return out(format!("B needs k,m >= 2, got {k},{m}"));
                }
                let l = m.div_ceil(2);
                if l > k + 1 {
                    return out(format!("B:{k},{m} needs l = {l} <= k + 1"));
                }
            }
            RtpFamily::C { k, l } if k < 2 || l < 2 => return out(format!("C needs k,l >= 2, got {k},{l}")),
            RtpFamily::D { k } | RtpFamily::F { k } if k < 2 => return out(format!("{self} needs k >= 2")),
            RtpFamily::H { n } if n < 1 => return out("H needs n >= 1".to_string()),
            _ => {}
        }
        Ok(())
    }

    /// Every valid instance with parameters in `2..=max` (`H`: `1..=h_max`).
    pub fn sweep(max: u32, h_max: u32) -> Vec<RtpFamily> {
        let mut out = Vec::new();
        let r = || 2..=max;
        for k in r() {
            for l in r() {
                for m in r() {
                    out.push(RtpFamily::A { k, l, m });
                }
            }
        }
        for k in r() {
            for m in r() {
                out.push(RtpFamily::B { k, m });
            }
        }
        for k in r() {
            for l in r() {
                out.push(RtpFamily::C { k, l });
            }
        }
        out.extend(r().map(|k| RtpFamily::D { k }));
        out.extend([RtpFamily::E60, RtpFamily::E07, RtpFamily::E70]);
        out.extend(r().map(|k| RtpFamily::F { k }));
        out.extend((1..=h_max).map(|n| RtpFamily::H { n }));
        out.retain(|f| f.validate().is_ok());
        out
    }

    /// The cubic in `x, y, z` whose normalisation is the singularity.
    pub fn nonisolated_form_text(&self) -> Result<String, CatalogError> {
        self.validate()?;
        Ok(match *self {
            RtpFamily::A { k, l, m } if k >= l && l >= m => {
                format!("z^3+x*z^2-(x+y^{k}+y^{l}+y^{m})*y^{k}*z+y^{}", 2 * k + l)
            }
            RtpFamily::A { k, m, .. } => {
                format!("z^3+(x-y^{k})*z^2-(x+y^{k}+y^{m})*y^{k}*z+y^{}", 2 * k + m)
            }
            RtpFamily::B { k, m } if m % 2 == 0 => {
                let l = m / 2;
                format!("z^3+x*z^2-(y^{}+y^{l})*y^{k}*z-x*y^{}", k + 1, 2 * k + 1)
            }
            RtpFamily::B { k, m } => {
                let l = m.div_ceil(2);
                format!("z^3+(x-y^{})*z^2-y^{}*z-x*y^{}", l - 1, 2 * k + 1, 2 * k + 1)
            }
            RtpFamily::C { k, l } => {
                format!("z^3+x*z^2-{l}*x^{}*y^{}*z-(x^{l}+y^2)*y^{}", l - 1, 2 * k, 2 * k)
            }
            RtpFamily::D { k } => {
                format!("z^3+(x+y^{})*z^2+(2*x*y^{k}-y^2)*y^{k}*z+x^2*y^{}", 2 * k, 2 * k)
            }
            RtpFamily::E60 => "z^3+y^3*z+x^2*y^2".to_string(),
            RtpFamily::E07 => "z^3+y^5+x^2*y^2".to_string(),
            RtpFamily::E70 => "z^3+x^2*y*z+y^4".to_string(),
            RtpFamily::F { k } => {
                format!("z^3+(x+y^{})*z^2+2*x*y^{}*z+(x^2+y^3)*y^{}", 2 * k, 2 * k, 2 * k)
            }
            RtpFamily::H { n } => match h_branch(n) {
                HBranch::Minus(k) => format!("z^3+x^2*y*(x+y^{})", k - 1),
                HBranch::Zero(k) => format!("z^3+x*y^{k}*z+x^3*y"),
                HBranch::Plus(k) => format!("z^3+x*y^{}*z+x^3*y^2", k + 1),
            },
        })
    }

    pub fn nonisolated_form(&self) -> Result<MultiPoly, CatalogError> {
        Ok(parse_poly(&self.nonisolated_form_text()?, 3)?)
    }

    /// Entry texts of the determinantal presentation and of its Miranda form.
    fn matrix_texts(&self) -> Result<(MatrixText, MatrixText), CatalogError> {
        self.validate()?;
        let s = |t: &str| t.to_string();
        let same = |m: [[String; 3]; 2]| (m.clone(), m);
        Ok(match *self {
            RtpFamily::A { k, l, m } => (
                [[s("z"), s("w"), format!("y^{m}")], [format!("y^{k}"), format!("w+y^{l}"), s("x")]],
                [
                    [s("z"), format!("w-(x+y^{l}+y^{m})"), format!("y^{m}")],
                    [format!("-y^{k}"), format!("z-x+y^{k}"), s("w")],
                ],
            ),
            RtpFamily::B { k, m } if m % 2 == 0 => {
                let l = m / 2;
                (
                    [[s("z"), format!("w+y^{l}"), s("x*y")], [format!("y^{k}"), s("x"), s("w")]],
                    [
                        [s("z"), format!("w+y^{l}"), s("x*y")],
                        [format!("y^{k}"), s("z+x"), format!("w-y^{}", k + 1)],
                    ],
                )
            }
            RtpFamily::B { k, m } => {
                let l = m.div_ceil(2);
                (
                    [[s("z"), s("w"), format!("x*y+y^{l}")], [format!("y^{k}"), s("x"), s("w")]],
                    [
                        [s("z"), s("w"), s("x*y")],
                        [format!("y^{k}"), format!("z+x-y^{}", l - 1), format!("w-y^{}", k + 1)],
                    ],
                )
            }
            RtpFamily::C { k, l } => {
                let b = if l >= 3 {
                    let binom = l * (l - 1) * (l - 2) / 6;
                    format!("(1-{binom}*x^{}*y^{})*y^{k}", l - 3, 2 * k)
                } else {
                    format!("y^{k}")
                };
                (
                    [[s("z"), s("w"), format!("x^{l}+y^2")], [format!("y^{k}"), s("x"), s("w")]],
                    [
                        [s("z"), format!("w+{l}*x^{}*y^{k}", l - 1), format!("x^{l}+y^2")],
                        [b, s("z+x"), s("w")],
                    ],
                )
            }
            RtpFamily::D { k } => (
                [[s("z"), s("w+y^2"), s("x^2")], [format!("y^{k}"), s("x"), s("w")]],
                [
                    [s("z"), format!("w+y^2+2*x*y^{k}"), s("x^2")],
                    [format!("y^{k}"), format!("z+x-y^{}", 2 * k), s("w")],
                ],
            ),
            RtpFamily::E60 => (
                [[s("z"), s("w"), s("x^2")], [s("y"), s("z"), s("w+y^2")]],
                [[s("z"), s("w-y^2"), s("x^2")], [s("y"), s("z"), s("w")]],
            ),
            RtpFamily::E07 => same([[s("z"), s("w"), s("x^2+y^3")], [s("y"), s("z"), s("w")]]),
            RtpFamily::E70 => (
                [[s("z"), s("w"), s("y^2")], [s("y"), s("z"), s("w+x^2")]],
                [[s("z"), s("w-x^2"), s("y^2")], [s("y"), s("z"), s("w")]],
            ),
            RtpFamily::F { k } => (
                [[s("z"), s("w"), s("x^2+y^3")], [format!("y^{k}"), s("x"), s("w")]],
                [
                    [s("z"), format!("w+2*x*y^{k}"), s("x^2+y^3")],
                    [format!("y^{k}"), format!("z+x-y^{}", 2 * k), s("w")],
                ],
            ),
            RtpFamily::H { n } => match h_branch(n) {
                HBranch::Minus(k) => same([[s("z"), s("w"), format!("x*y+y^{k}")], [s("x"), s("z"), s("w")]]),
                HBranch::Zero(k) => (
                    [[s("z"), s("w"), s("x*y")], [s("x"), s("z"), format!("w+y^{k}")]],
                    [[s("z"), format!("w-y^{k}"), s("x*y")], [s("x"), s("z"), s("w")]],
                ),
                HBranch::Plus(k) => same([[s("z"), format!("w+y^{k}"), s("x")], [s("x*y"), s("z"), s("w")]]),
            },
        })
    }

    /// The determinantal presentation and its Miranda form, in `x, y, z, w`.
    pub fn family_matrices(&self) -> Result<(PolyMatrix2x3, PolyMatrix2x3), CatalogError> {
        let (t, m) = self.matrix_texts()?;
        let build = |e: &[[String; 3]; 2]| -> Result<PolyMatrix2x3, CatalogError> {
            let p = |s: &String| parse_poly(s, 4);
            Ok(PolyMatrix2x3::new([
                [p(&e[0][0])?, p(&e[0][1])?, p(&e[0][2])?],
                [p(&e[1][0])?, p(&e[1][1])?, p(&e[1][2])?],
            ]))
        };
        let miranda = build(&m)?;
        debug_assert!(miranda_shape(&miranda), "{self}: Miranda entry does not have the expected shape");
        Ok((build(&t)?, miranda))
    }

    /// Curves in a minimal resolution that are contracted after Oka's process.
    pub fn expected_blowdowns(&self) -> Result<usize, CatalogError> {
        self.validate()?;
        Ok(match *self {
            RtpFamily::A { k, l, m } if k >= l && l >= m => usize::from(k % 2 != m % 2),
            RtpFamily::A { .. } => 0,
            RtpFamily::B { k, m } if m % 2 == 0 => usize::from(k % 2 != (m / 2) % 2),
            RtpFamily::B { k, m } => (k + 1 - m.div_ceil(2)) as usize,
            RtpFamily::C { k, .. } => {
                if k % 3 == 2 {
                    0
                } else {
                    2
                }
            }
            RtpFamily::D { k } => usize::from(k % 2 == 1),
            RtpFamily::F { k } => usize::from(k % 3 != 0),
            RtpFamily::E60 | RtpFamily::E07 | RtpFamily::E70 | RtpFamily::H { .. } => 0,
        })
    }
}

/// Miranda data `a, b, c, d` in `x, y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirandaData {
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub c: MultiPoly,
    pub d: MultiPoly,
}

impl MirandaData {
    pub fn parse(a: &str, b: &str, c: &str, d: &str) -> Result<Self, CatalogError> {
        let p = |s: &str| parse_poly(s, 4);
        Ok(MirandaData {
            a: p(a)?,
            b: p(b)?,
            c: p(c)?,
            d: p(d)?,
        })
    }

    /// `[[z+a, w-2d, c], [b, z-2a, w+d]]`
    pub fn matrix(&self) -> PolyMatrix2x3 {
        let z = MultiPoly::var(4, 2);
        let w = MultiPoly::var(4, 3);
        let two = MultiPoly::from_int(4, 2);
        PolyMatrix2x3::new([
            [&z + &self.a, &w - &(&two * &self.d), self.c.clone()],
            [self.b.clone(), &z - &(&two * &self.a), &w + &self.d],
        ])
    }
}

/// The triple-cover equations `F, G, H` in `x, y, z, w`.
pub fn miranda_minors(md: &MirandaData) -> Result<(MultiPoly, MultiPoly, MultiPoly), CatalogError> {
    if md.b.is_zero() || md.c.is_zero() {
        return Err(CatalogError::ZeroBorC);
    }
    Ok(miranda_equations(md))
}

/// `F, G, H` without the nondegeneracy check on `b, c`.
pub fn miranda_equations(md: &MirandaData) -> (MultiPoly, MultiPoly, MultiPoly) {
    let z = MultiPoly::var(4, 2);
    let w = MultiPoly::var(4, 3);
    let k = |n: i64| MultiPoly::from_int(4, n);
    let (a, b, c, d) = (&md.a, &md.b, &md.c, &md.d);
    let f = &(&(&z * &z) - &(&k(2) * &(&(a * a) - &(b * d)))) - &(&(a * &z) + &(b * &w));
    let g = &(&(&z * &w) + &(&(a * d) - &(b * c))) + &(&(d * &z) + &(a * &w));
    let h = &(&(&w * &w) - &(&k(2) * &(&(d * d) - &(a * c)))) - &(&(c * &z) + &(d * &w));
    (f, g, h)
}

/// Entries `(1,1)` and `(2,2)` are `z` plus a function of `x, y`; entries
/// `(1,2)` and `(2,3)` are `w` plus a function of `x, y`; entries `(1,3)`
/// and `(2,1)` are nonzero functions of `x, y`.
pub fn miranda_shape(m: &PolyMatrix2x3) -> bool {
    let base = |p: &MultiPoly| !p.involves(2) && !p.involves(3);
    let shifted = |p: &MultiPoly, var: usize| base(&(p - &MultiPoly::var(m.nvars(), var)));
    shifted(m.get(0, 0), 2)
        && shifted(m.get(1, 1), 2)
        && shifted(m.get(0, 1), 3)
        && shifted(m.get(1, 2), 3)
        && base(m.get(0, 2))
        && base(m.get(1, 0))
        && !m.get(0, 2).is_zero()
        && !m.get(1, 0).is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjectionVerdict {
    /// The eliminant equals the cubic up to a constant after the listed
    /// sign changes of `x, y, z`.
    Match { signs: [i8; 3] },
    Mismatch { eliminant: MultiPoly, expected: MultiPoly },
}

/// Removes repeated factors: `p / gcd(p, dp/dz)` keeps every factor that
/// involves `z` once.
fn squarefree_in_z(p: &MultiPoly) -> MultiPoly {
    let mut q = p.clone();
    loop {
        let g = gcd_poly(&q, &q.partial(2));
        if !g.involves(2) {
            return q.normalize();
        }
        q = q.exact_div(&g).expect("gcd divides").normalize();
    }
}

/// Strips every factor of `p` that does not involve `z`.
fn z_part(p: &MultiPoly) -> MultiPoly {
    let content = p
        .coeffs_in(2)
        .into_iter()
        .filter(|c| !c.is_zero())
        .fold(MultiPoly::zero(p.nvars()), |g, c| gcd_poly(&g, &c));
    p.exact_div(&content).expect("content divides").normalize()
}

/// Eliminates `w` from the Miranda-form equations and compares the image with
/// the cubic surface of the family.
pub fn verify_projection(fam: &RtpFamily) -> Result<ProjectionVerdict, CatalogError> {
    let (_, mir) = fam.family_matrices()?;
    let mir = match *fam {
        RtpFamily::A { k, l, m } if k >= l && l >= m => {
            let shift = parse_poly(&format!("x+y^{k}"), 4)?;
            mir.substitute(&[(0, shift)])
        }
        _ => mir,
    };
    let (m12, m13, m23) = minors2x2(&mir);
    let mut eliminant = MultiPoly::zero(4);
    let eqs = [&m12, &m13, &m23];
    for i in 0..3 {
        for j in i + 1..3 {
            if let Some(r) = resultant(eqs[i], eqs[j], 3) {
                eliminant = gcd_poly(&eliminant, &r);
            }
        }
    }
    let (_, rest) = eliminant.strip_monomial();
    let image = squarefree_in_z(&z_part(&rest)).with_nvars(3);
    let expected = fam.nonisolated_form()?;
    for mask in 0..8u8 {
        let signs: [i8; 3] = core::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 });
        let map: Vec<(usize, MultiPoly)> = (0..3)
            .filter(|&i| signs[i] < 0)
            .map(|i| (i, -MultiPoly::var(3, i)))
            .collect();
        if image.substitute(&map).equals_up_to_constant(&expected) {
            return Ok(ProjectionVerdict::Match { signs });
        }
    }
    Ok(ProjectionVerdict::Mismatch {
        eliminant: image,
        expected,
    })
}

/// Rational number helper for tests and reports.
pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Result of running a family instance through the whole pipeline.
#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub family: RtpFamily,
    pub form: MultiPoly,
    pub oka: OkaGraph,
    pub minimal: ResolutionGraph,
    pub blowdowns: usize,
    pub expected_blowdowns: usize,
    pub graph_matches: bool,
    pub rational: bool,
    pub multiplicity: u64,
    pub nondegenerate: NondegVerdict,
    /// `(r_j + 1)` agrees with the minimal relation at every central vertex.
    pub copies_match_relation: bool,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.graph_matches
            && self.rational
            && self.multiplicity == 3
            && self.blowdowns == self.expected_blowdowns
            && matches!(self.nondegenerate, NondegVerdict::Nondegenerate { .. })
    }
}

/// Oka's process, blow-downs and all invariant checks on one instance.
pub fn verify_family(fam: &RtpFamily) -> Result<FamilyReport, CatalogError> {
    let form = fam.nonisolated_form()?;
    let oka = oka_resolve(&form)?;
    let blown = oka.graph.blow_down()?;
    let minimal = blown.graph;
    let expected = expected_graph(fam)?;
    let graph_matches = !minimal.is_empty() && tree_isomorphic(&minimal, &expected).unwrap_or(false);
    let rational = !minimal.is_empty() && minimal.is_rational()?;
    let multiplicity = if rational { minimal.multiplicity()? } else { 0 };
    let mut copies_match_relation = true;
    for c in &oka.centrals {
        let nbrs: Vec<_> = c.arms.iter().map(|a| a.neighbour).collect();
        let copies: Vec<u64> = c.arms.iter().map(|a| a.copies).collect();
        copies_match_relation &= multiplicity_coeffs(c.u, &nbrs).ok() == Some(copies);
    }
    Ok(FamilyReport {
        family: *fam,
        nondegenerate: check_newton_nondegenerate(&form),
        form,
        oka,
        minimal,
        blowdowns: blown.contractions,
        expected_blowdowns: fam.expected_blowdowns()?,
        graph_matches,
        rational,
        multiplicity,
        copies_match_relation,
    })
}

/// `(z+x)(z^2-y^(2k+1))`: shares its Newton polyhedron with `B:k,2k+2`
/// but is degenerate.
pub fn degenerate_cubic(k: u32) -> MultiPoly {
    parse_poly(&format!("(z+x)*(z^2-y^{})", 2 * k + 1), 3).expect("well-formed")
}

fn newton(p: &MultiPoly) -> Result<NewtonPolyhedron, CatalogError> {
    NewtonPolyhedron::new(p).map_err(|e| CatalogError::Oka(e.into()))
}

/// Facet normals with their faces, compact edges and vertices agree.
pub fn same_newton_polyhedron(p: &MultiPoly, q: &MultiPoly) -> Result<bool, CatalogError> {
    let shape = |np: NewtonPolyhedron| {
        let mut facets: Vec<(LatVec, Vec<LatVec>)> = np.facets.iter().map(|f| (f.normal, sorted(&f.face.points))).collect();
        facets.sort();
        let mut edges: Vec<Vec<LatVec>> = np.edges.iter().map(|e| sorted(&e.points)).collect();
        edges.sort();
        let mut vertices: Vec<Vec<LatVec>> = np.vertices.iter().map(|v| sorted(&v.points)).collect();
        vertices.sort();
        (facets, edges, vertices)
    };
    Ok(shape(newton(p)?) == shape(newton(q)?))
}

fn sorted(points: &[LatVec]) -> Vec<LatVec> {
    let mut v = points.to_vec();
    v.sort();
    v
}

/// Outcome of matching a cubic against catalogue instances by Newton
/// polyhedron.
#[derive(Clone, Debug)]
pub enum RtpMatch {
    /// Non-degenerate; these instances have the same Newton polyhedron.
    Candidates(Vec<RtpFamily>),
    /// Not certified non-degenerate, so the graph from Oka's process says
    /// nothing about the singularity; `twins` share the polyhedron anyway.
    Excluded { twins: Vec<RtpFamily>, verdict: Box<NondegVerdict> },
}

pub fn match_rtp(p: &MultiPoly, candidates: &[RtpFamily]) -> Result<RtpMatch, CatalogError> {
    let mut twins = Vec::new();
    for fam in candidates {
        if same_newton_polyhedron(p, &fam.nonisolated_form()?)? {
            twins.push(*fam);
        }
    }
    let verdict = check_newton_nondegenerate(p);
    Ok(if verdict.is_nondegenerate() {
        RtpMatch::Candidates(twins)
    } else {
        RtpMatch::Excluded { twins, verdict: Box::new(verdict) }
    })
}

/// Chain of `len` (-2)-curves hanging off `at`, returning the far end.
fn arm(g: &mut ResolutionGraph, at: usize, len: u32) -> usize {
    let mut prev = at;
    for _ in 0..len {
        let v = g.add_vertex(Vertex::new(2, 0));
        g.add_edge(prev, v).expect("fresh vertex");
        prev = v;
    }
    prev
}

/// A (-2)-curve meeting `at` and carrying one leaf and one chain of length
/// `tail`.
fn fork(g: &mut ResolutionGraph, at: usize, tail: u32) {
    let node = arm(g, at, 1);
    arm(g, node, 1);
    arm(g, node, tail);
}

/// The minimal resolution graph of the family instance: a single
/// (-3)-curve meeting configurations of (-2)-curves.
pub fn expected_graph(fam: &RtpFamily) -> Result<ResolutionGraph, CatalogError> {
    fam.validate()?;
    let mut g = ResolutionGraph::new();
    let c = g.add_vertex(Vertex::new(3, 0));
    match *fam {
        RtpFamily::A { k, l, m } => {
            for n in [k, l, m] {
                arm(&mut g, c, n - 1);
            }
        }
        RtpFamily::B { k, m } => {
            // A_m met at its second curve
            arm(&mut g, c, k - 1);
            let second = arm(&mut g, c, 1);
            arm(&mut g, second, 1);
            arm(&mut g, second, m - 2);
        }
        RtpFamily::C { k, l } => {
            // D_{l+1} met at the end of its long arm
            arm(&mut g, c, k - 1);
            let node = arm(&mut g, c, l - 1);
            arm(&mut g, node, 1);
            arm(&mut g, node, 1);
        }
        RtpFamily::D { k } => {
            // D_5 met at a leaf of its fork
            arm(&mut g, c, k - 1);
            let leaf = arm(&mut g, c, 1);
            fork(&mut g, leaf, 2);
        }
        RtpFamily::E60 => {
            let leaf = arm(&mut g, c, 1);
            fork(&mut g, leaf, 3);
        }
        RtpFamily::E70 => {
            let leaf = arm(&mut g, c, 1);
            fork(&mut g, leaf, 4);
        }
        RtpFamily::E07 => {
            // E_7 met at the end of its longest arm
            let end = arm(&mut g, c, 3);
            fork(&mut g, end, 2);
        }
        RtpFamily::F { k } => {
            // E_6 met at the end of a long arm
            arm(&mut g, c, k - 1);
            let end = arm(&mut g, c, 2);
            fork(&mut g, end, 2);
        }
        RtpFamily::H { n } => {
            // A_n met at its third curve
            let j = n.min(3);
            let at = arm(&mut g, c, 1);
            arm(&mut g, at, j - 1);
            arm(&mut g, at, n - j);
        }
    }
    Ok(g)
}
