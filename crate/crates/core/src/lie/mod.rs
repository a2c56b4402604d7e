pub mod chevalley;
pub mod form;
pub mod roots;

pub use chevalley::{BasisLabel, ChevalleyAlgebra};
pub use form::{FormNormalization, InvariantForm};
pub use roots::{build_root_system, LieType, RootSystem};
