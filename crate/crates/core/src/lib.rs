//! Workbench for the representation theory of serial coalgebras over
//! valued Gabriel quivers.
//!
//! - [`quiver`]: valued quiver data model, DSL parser, graph algorithms.
//! - [`classify`]: seriality, shape taxonomy, Hom-computability,
//!   representation-directedness, and the prime/co-noetherian chain.
//! - [`localize`]: vertex-subset localization by torsion-path enumeration
//!   and comodule restriction.
//! - [`rep`], [`homs`], [`injectives`]: exact-arithmetic comodule engine.
//! - [`field`], [`linalg`]: exact coefficient fields and linear algebra.

pub mod arquiver;
pub mod classify;
pub mod field;
pub mod fixtures;
pub mod homs;
pub mod injectives;
pub mod linalg;
pub mod localize;
pub mod oracles;
pub mod pointed;
pub mod quiver;
pub mod random;
pub mod rep;

pub use arquiver::{
    ar_sequence, build_ar_quiver, classify_indecomposables, tau_orbit_report, verify_almost_split,
    ARNode, ARQuiver, AlmostSplitSeq,
};
pub use classify::{
    classification_report, eg_classify, is_left_serial, is_right_serial, serial_shape,
    ClassificationReport, EgVerdict, ShapeClass,
};
pub use field::{Field, Gf2, Rat};
pub use localize::{localize_colocal, localize_quiver, LocalizationResult, VertexSubset};
pub use pointed::PointedQuiver;
pub use quiver::{parse_quiver, QuiverError, ValuedQuiver, VertexId};
pub use rep::{Morphism, RepError, Representation};
