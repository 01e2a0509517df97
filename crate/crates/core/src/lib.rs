//! Coxeter systems as labeled diagrams: classification of finite parabolic
//! subgroups, the word problem via braid moves, diagram twists, and
//! brute-force checks of reflection rigidity on small finite groups.

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod lab;
pub mod rigidity;
pub mod twist;
pub mod words;

pub use classify::{GroupOrder, SphericalSubset, TypeLabel};
pub use diagram::{diagram_isomorphic, parse_diagram, CoxeterDiagram, Label, VertexBijection};
pub use error::{Error, Result};
pub use lab::{FiniteGroupTable, GeneratingSetRecord, ReflectionSet};
pub use rigidity::{rigidity_report, RigidityReport, Theorem};
pub use twist::{apply_twist, verify_twist, TwistResult, TwistSpec};
pub use words::{CanonicalElement, ElementOrder, GeneratorMap, Word, WordEngine};
