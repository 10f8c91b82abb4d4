//! Partitions that are simultaneously s-regular and t-distinct.
//!
//! * [`partition`]: canonical sparse partitions, predicates, text/JSON codecs.
//! * [`enumerate`]: exhaustive generation, used as the counting oracle.
//! * [`glaisher`]: part-frequency matrices, Glaisher's involution `φ_m`, the
//!   diagonal wrap shift and the coprime double-Glaisher map.
//! * [`bijection`]: the map between s-regular t-distinct and t-regular
//!   s-distinct partitions for arbitrary `(s, t)`, and its inverse.
//! * [`qseries`]: exact truncated power series and eta quotients.
//! * [`orbit`]: iteration of `φ_s ∘ φ_t` and orbit censuses.
//! * [`exec`]: sequential / rayon switch for batch work.

pub mod bijection;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod glaisher;
pub mod orbit;
pub mod partition;
pub mod qseries;

pub use bijection::{
    forward, inverse, Bijection, BijectionConfig, ModulusPair, SharedPrime, Variant,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use glaisher::{double_glaisher, from_matrices, phi, to_matrices, unwrap_shift, wrap_shift};
pub use orbit::{census, classify_orbit, step_t, Census, OrbitReport, Outcome};
pub use partition::Partition;
pub use qseries::Series;
