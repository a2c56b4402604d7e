pub mod config;
pub mod current;
pub mod model;
pub mod tensor;

pub use config::{check_mu_regular, regular_cartan_element, GaudinConfig, GaudinInstance, Mode};
pub use current::{combined_map, evaluation_action, realize_current_monomial, RationalOperatorFunction};
pub use model::{chain_space, gaudin_hamiltonians, omega_pair, ChainKind, ChainSpace, GaudinModel, Generator};
pub use tensor::TensorModule;
