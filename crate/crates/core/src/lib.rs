//! Exact-arithmetic construction and machine verification of the Halphen
//! cubics and the dual Hesse configuration they live on.
//!
//! The crate is organized around a fixed coefficient field
//! `K = Q(e, b)` with `e^2 + e + 1 = 0` and `b^3 = 2`:
//!
//! * [`numfield`] — exact arithmetic in `K`, Galois action, complex embedding;
//! * [`polyring`] — ternary cubic forms, univariate and binary polynomials,
//!   Sylvester resultants and the Aronhold quartic invariant;
//! * [`plane`] — projective points, lines, tangent directions, marked-line
//!   coordinates and local intersection multiplicities;
//! * [`hesse`] — the dual Hesse arrangement, its 12 vertices, 9 harmonic
//!   polars and the four singular-point cubic pencils;
//! * [`elliptic`] — the chord–tangent group law and torsion of `x^3+y^3-z^3`;
//! * [`torsion`] — equianharmonic `3m`-torsion parameters on a marked line;
//! * [`halphen`] — generation of the Halphen cubics of order 1 and 2 and
//!   reconciliation with their classical normal forms;
//! * [`audit`] — the singularity census of the full configuration and the
//!   Harbourne index;
//! * [`abelian`] — the companion calculus on the abelian surface `T x T`
//!   over the Eisenstein integers;
//! * [`numeric`] — an arbitrary-precision Weierstrass engine used to
//!   cross-check every exact result and to reach orders `m >= 3`.

pub mod abelian;
pub mod audit;
pub mod elliptic;
pub mod halphen;
pub mod hesse;
pub mod numeric;
pub mod numfield;
pub mod plane;
pub mod polyring;
pub mod torsion;

pub use numfield::{KElem, Rat};

/// Errors shared by the exact-arithmetic layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero in K")]
    DivisionByZero,
    #[error("division by the zero polynomial")]
    ZeroPolynomial,
    #[error("expected distinct points")]
    CoincidentPoints,
    #[error("point does not lie on the curve")]
    PointNotOnCurve,
    #[error("point is a singular point of the curve")]
    SingularPoint,
    #[error("line does not pass through the given point")]
    LineMissesPoint,
    #[error("line is contained in the curve")]
    LineOnCurve,
    #[error("curves share a component through the point")]
    CommonComponent,
    #[error("directions have different base points")]
    BaseMismatch,
    #[error("marking values must be pairwise distinct")]
    DegenerateMarking,
    #[error("parameter must avoid {{0, 1, infinity}}")]
    BranchParameter,
    #[error("torsion order {0} is not supported exactly")]
    UnsupportedOrder(u32),
    #[error("curve is not supported by this operation")]
    UnsupportedCurve,
    #[error("identity of the group law must be a flex")]
    NonFlexIdentity,
    #[error("cube root does not exist in K for this element")]
    NoCubeRoot,
    #[error("n must be a positive multiple of 3")]
    BadIndexArgument,
    #[error("curve classes are parallel")]
    ParallelClasses,
    #[error("evaluation at a lattice point")]
    LatticePoint,
    #[error("precision too low to separate value clusters; retry with at least {0} digits")]
    InsufficientPrecision(u32),
    #[error("no admissible shear found for the resultant sweep")]
    ShearExhausted,
    #[error("{0}")]
    Check(String),
}

pub type Result<T> = std::result::Result<T, Error>;
