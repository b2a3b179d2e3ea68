//! Exact computational algebra over the field with three elements.
//!
//! The library constructs the split Cayley algebra together with its four
//! conjugacy classes of order-3 automorphisms, and mechanically performs the
//! semisimplification recipes that turn an algebra carrying such an
//! automorphism into a superalgebra.  Applied to the Cayley algebra this
//! produces the unital composition superalgebras `B(4,2)` and `B(1,2)`,
//! which exist only in characteristic 3; applied to the 248-dimensional
//! Magic Square algebra `g(C,C')` it produces the Lie superalgebras of the
//! Extended Freudenthal Magic Square.
//!
//! Everything is exact: scalars live in F3, matrices are dense, and every
//! identity (composition laws, Jacobi, super-Jacobi, triality diagrams) is
//! verified by exhaustive sweeps over basis tuples.

pub mod algebra;
pub mod cayley;
pub mod f3;
pub mod semisimplify;
pub mod square;
pub mod superalgebra;

pub use algebra::{
    adjoint_automorphism, check_composition, derivations, extend_hom_from_generators,
    para_hurwitz, skew_transformations, AlgebraPresentation, Automorphism, AutomorphismReport,
    CompositionReport, LieAlgebraPresentation,
};
pub use cayley::{order3_automorphism, split_cayley, standard_conjugation};
pub use f3::{
    equivariant_homs, is_negligible, solve_linear, JordanSplitting, LinearSolution, MatF3, F3,
};
pub use semisimplify::{
    inflate, roundtrip_check, semisimplify_algebra, semisimplify_bimap, semisimplify_form,
    semisimplify_lie, SuperBimap,
};
pub use square::{
    extended_square, induced_automorphism, magic_square, t_triple, ExtSide, SquareAlgebra,
    TrialityAlgebra, TrialityElement,
};
pub use superalgebra::{
    check_composition_super, check_super_jacobi, osp, super_derivations,
    LieSuperAlgebraPresentation, SuperAlgebraPresentation,
};

/// Errors reported by constructors and operations.
///
/// Exhaustive verification failures (a Jacobi sweep finding a witness, a
/// composition check failing on a quadruple) are reported through dedicated
/// report types instead, so callers can inspect the witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Matrix or vector dimensions do not match the operation.
    DimensionMismatch(String),
    /// An operator expected to satisfy `delta^3 = 0` does not.
    NotNilpotent,
    /// A map expected to intertwine the group actions does not.
    NotEquivariant,
    /// A matrix expected to cube to the identity does not.
    NotOrderThree,
    /// A matrix is not an algebra automorphism (carries the failing check).
    NotAutomorphism(String),
    /// A bilinear form required to be nondegenerate is degenerate.
    DegenerateForm,
    /// The supplied generators do not generate the algebra.
    GeneratorsDoNotGenerate,
    /// A partial homomorphism admits no consistent extension.
    InconsistentImages,
    /// A subspace expected to be stable under a map is not.
    NotStable,
    /// The operation needs a unit or a form the presentation does not carry.
    MissingStructure(String),
    /// Chain data does not describe a valid splitting of the operator.
    InvalidSplitting(String),
    /// Catch-all for unsupported construction requests.
    Unsupported(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::DimensionMismatch(s) => write!(f, "dimension mismatch: {s}"),
            Error::NotNilpotent => write!(f, "operator does not satisfy delta^3 = 0"),
            Error::NotEquivariant => write!(f, "map is not equivariant"),
            Error::NotOrderThree => write!(f, "matrix does not cube to the identity"),
            Error::NotAutomorphism(s) => write!(f, "not an automorphism: {s}"),
            Error::DegenerateForm => write!(f, "bilinear form is degenerate"),
            Error::GeneratorsDoNotGenerate => write!(f, "generators do not generate"),
            Error::InconsistentImages => write!(f, "no consistent homomorphic extension"),
            Error::NotStable => write!(f, "subspace is not stable under the map"),
            Error::MissingStructure(s) => write!(f, "missing structure: {s}"),
            Error::InvalidSplitting(s) => write!(f, "invalid splitting: {s}"),
            Error::Unsupported(s) => write!(f, "unsupported: {s}"),
        }
    }
}

impl std::error::Error for Error {}
