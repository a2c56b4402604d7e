pub mod closure;
pub mod counter;
pub mod cyclic;
pub mod eigen;
pub mod frobenius;
pub mod verdict;

pub use closure::{close_algebra, AlgebraImage};
pub use counter::{run_counterexample, CounterexampleReport};
pub use cyclic::{find_cyclic_vector, seeded_rng, CyclicReport};
pub use eigen::{joint_eigen_analysis, EigenReport};
pub use frobenius::{certify_frobenius_via_form, frobenius_gram_probe, FormCertificate, ProbeVerdict};
pub use verdict::{perfect_integrability_verdict, CheckStatus, Verdict};
