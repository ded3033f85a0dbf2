use alloc::string::String;
use core::fmt;

use crate::lattice::LatVec;
use crate::poly::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    ZeroVector,
    NotPrimitive(LatVec),
    ParallelVectors(LatVec, LatVec),
    InvalidFraction(u64, u64),
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::ZeroVector => f.write_str("zero vector has no primitive direction"),
            LatticeError::NotPrimitive(v) => write!(f, "vector {v} is not primitive"),
            LatticeError::ParallelVectors(u, v) => write!(f, "vectors {u} and {v} are parallel"),
            LatticeError::InvalidFraction(s, s1) => {
                write!(f, "{s}/{s1} is not a reduced fraction with 1 <= s1 < s")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NewtonError {
    ZeroPolynomial,
    WrongVariableCount(usize),
    NonCompactFace,
    InvalidDirection(LatVec),
}

impl fmt::Display for NewtonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NewtonError::ZeroPolynomial => f.write_str("the zero polynomial has no Newton polyhedron"),
            NewtonError::WrongVariableCount(n) => write!(f, "expected a polynomial in 3 variables, got {n}"),
            NewtonError::NonCompactFace => f.write_str("face is not compact"),
            NewtonError::InvalidDirection(u) => write!(f, "direction {u} must be nonzero and nonnegative"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    NotNegativeDefinite,
    NotRational,
    NotATree,
    UnsupportedContraction { vertex: usize, valence: usize },
    NonSnc { vertex_a: usize, vertex_b: usize },
    InvalidEdge(usize, usize),
    DivisorLength { expected: usize, got: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::NotNegativeDefinite => f.write_str("intersection matrix is not negative definite"),
            GraphError::NotRational => f.write_str("graph is not rational"),
            GraphError::NotATree => f.write_str("graph is not a tree"),
            GraphError::UnsupportedContraction { vertex, valence } => {
                write!(f, "(-1)-vertex {vertex} has valence {valence}; contraction unsupported")
            }
            GraphError::NonSnc { vertex_a, vertex_b } => {
                write!(f, "vertices {vertex_a} and {vertex_b} meet more than once after contraction")
            }
            GraphError::InvalidEdge(a, b) => write!(f, "edge ({a},{b}) refers to a missing vertex or is a loop"),
            GraphError::DivisorLength { expected, got } => {
                write!(f, "divisor has {got} coefficients, graph has {expected} vertices")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OkaError {
    Lattice(LatticeError),
    Newton(NewtonError),
    InvalidFan(String),
    NoStrictlyPositiveGenerator,
    DisconnectedResult,
    NoIntegralWeight { generator: LatVec },
    NoPositiveRelation { generator: LatVec },
}

impl fmt::Display for OkaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OkaError::Lattice(e) => e.fmt(f),
            OkaError::Newton(e) => e.fmt(f),
            OkaError::InvalidFan(why) => write!(f, "invalid fan: {why}"),
            OkaError::NoStrictlyPositiveGenerator => f.write_str("fan has no strictly positive generator"),
            OkaError::DisconnectedResult => f.write_str("resulting graph is disconnected"),
            OkaError::NoIntegralWeight { generator } => {
                write!(f, "no integral weight for generator {generator}")
            }
            OkaError::NoPositiveRelation { generator } => {
                write!(f, "no positive integral relation among the neighbours of {generator}")
            }
        }
    }
}

impl From<LatticeError> for OkaError {
    fn from(e: LatticeError) -> Self {
        OkaError::Lattice(e)
    }
}

impl From<NewtonError> for OkaError {
    fn from(e: NewtonError) -> Self {
        OkaError::Newton(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogError {
    ParameterOutOfRange(String),
    AmbiguousBranch(String),
    InvalidSelector(String),
    ZeroBorC,
    Parse(ParseError),
    Oka(OkaError),
    Graph(GraphError),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::ParameterOutOfRange(why) => write!(f, "parameter out of range: {why}"),
            CatalogError::AmbiguousBranch(why) => write!(f, "no catalogued branch covers {why}"),
            CatalogError::InvalidSelector(s) => write!(f, "invalid family selector '{s}'"),
            CatalogError::ZeroBorC => f.write_str("Miranda data requires b and c nonzero"),
            CatalogError::Parse(e) => e.fmt(f),
            CatalogError::Oka(e) => e.fmt(f),
            CatalogError::Graph(e) => e.fmt(f),
        }
    }
}

impl From<ParseError> for CatalogError {
    fn from(e: ParseError) -> Self {
        CatalogError::Parse(e)
    }
}

impl From<OkaError> for CatalogError {
    fn from(e: OkaError) -> Self {
        CatalogError::Oka(e)
    }
}

impl From<GraphError> for CatalogError {
    fn from(e: GraphError) -> Self {
        CatalogError::Graph(e)
    }
}
