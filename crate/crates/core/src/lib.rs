//! Exact cohomology of tautological bundles on Quot schemes of the
//! projective line.
//!
//! The Quot scheme `Quot(E, n, r)` sits inside a product of two
//! Grassmannians as the zero locus of a regular section of
//! `E = A_1^∨ ⊗ W ⊗ B_2`. Tensoring the Koszul resolution of that section
//! with a homogeneous bundle and splitting every term with the Cauchy,
//! Littlewood–Richardson and Pieri rules reduces everything to
//! Borel–Weil–Bott on each factor.
//!
//! ```
//! use quotcoh::{quot_cohomology, EmbeddingData, Side, TautologicalSheafSpec};
//!
//! let data = EmbeddingData::trivial(2, 2, 0, 2).unwrap();
//! let spec = TautologicalSheafSpec::Wedge { k: 1, side: Side::G2 };
//! let result = quot_cohomology(&data, &spec).unwrap();
//! assert!(result.degenerate);
//! assert_eq!(result.chi, 6.into());
//! ```

#![allow(clippy::int_plus_one)]

pub mod bwb;
pub mod error;
pub mod index;
pub mod partitions;
pub mod quot;
pub mod schur;
pub mod series;
mod ser;

pub use bwb::{bwb, euler_char, BwbResult, GrassmannianContext, HomogeneousBundle};
pub use error::{Error, Result};
pub use index::{kn_index, n_index, IndexReport, IndexShape};
pub use partitions::{weyl_dim, DominantWeight, Partition};
pub use quot::{
    quot_cohomology, CohomologyProfile, EmbeddingData, QuotCohomology, Side, TautologicalSheafSpec,
};
pub use schur::{lr_coefficient, Decomposition, PartitionDecomposition, WeightedDecomposition};
pub use series::{BivariateSeries, IntSeries, SeriesKind};
