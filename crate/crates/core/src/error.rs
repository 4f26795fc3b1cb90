use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("gluing of tet {tet} face {face} is not matched by its partner")]
    NonInvolutive { tet: usize, face: usize },

    #[error("tet {tet} face {face} is glued to itself")]
    SelfGluedFace { tet: usize, face: usize },

    #[error("tetrahedron index {index} out of range (n = {n})")]
    TetOutOfRange { index: usize, n: usize },

    #[error("invalid permutation {0:?}")]
    InvalidPermutation([u8; 4]),

    #[error("triangulation is not a closed 3-manifold: {0}")]
    InvalidTriangulation(String),

    #[error("triangulation is disconnected")]
    Disconnected,

    #[error("pachner 2-3 move undefined on triangle {triangle}: {reason}")]
    MoveUndefined { triangle: usize, reason: &'static str },

    #[error("census limited to at most {max} tetrahedra, got {requested}")]
    CensusTooLarge { requested: usize, max: usize },

    #[error("invalid field parameters r = {r}, q = {q}: {reason}")]
    InvalidField { r: u32, q: u32, reason: &'static str },

    #[error("division by zero in cyclotomic field")]
    DivisionByZero,

    #[error("colours ({0}, {1}, {2}) (doubled) are not admissible")]
    NotAdmissibleTriple(u32, u32, u32),

    #[error("colouring is not admissible for r = {r}")]
    NotAdmissible { r: u32 },

    #[error("vector violates the cocycle condition on triangle {triangle}")]
    NotCocycle { triangle: usize },

    #[error("cohomology class has length {got}, expected {expected}")]
    ClassLength { got: usize, expected: usize },

    #[error("intersection symbol {0:?} admits no loop decomposition")]
    NoDecomposition([[u32; 3]; 2]),

    #[error("intersection symbol {0:?} admits distinct loop decompositions")]
    AmbiguousDecomposition([[u32; 3]; 2]),

    #[error("{0}")]
    Unsupported(String),
}
