//! Exact arithmetic, point configurations and nodal quartic threefolds.

pub mod conditions;
pub mod config;
pub mod error;
pub mod families;
pub mod form;
pub mod invariants;
pub mod linalg;
pub mod point;
pub mod scalar;
pub mod subspace;

pub use conditions::{
    build_separating_cubic, ci_ideal_cubics_dimension, conditions_defect, cone_over_form, separating_form_oracle,
    CubicCertificate, DefectReport,
};
pub use config::{agp_check, find_excluding_subspace, AgpReport, AgpThresholds, ConicSemantics, PointConfiguration};
pub use families::{
    build_family, classify_singularity, designed, designed_nodes, scan_singular, Constituent, FamilyTag, NodeReport,
    QuarticSpec, ScanResult, Singularity,
};
pub use error::{Error, Result};
pub use form::{monomial_basis, HomogeneousForm};
pub use invariants::{
    bound_verdict, cynk_invariants, discriminant_class, fr_canonical, fr_intersect, shokurov_verdict, valera_verdict,
    Conclusion, DivisorClass, InvariantsReport, Verdict,
};
pub use linalg::Matrix;
pub use point::ProjectivePoint;
pub use scalar::{Field, Scalar};
pub use subspace::{span_dimension, LinearSubspace};
