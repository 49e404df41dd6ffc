//! Exact toric geometry for auditing adjoint linear systems.

pub mod audit;
pub mod cone;
pub mod divisor;
pub mod error;
pub mod fan;
pub mod fan_io;
pub mod fixtures;
pub mod ingest;
pub mod lattice;
pub mod polytope;
pub mod report;

pub use audit::{
    conjecture_audit, gorenstein_3fold_audit, hyperbolicity_audit, ConjectureVariant,
    HyperbolicityCertificate, Verdict,
};
pub use divisor::{linear_equivalence, CartierData, Divisor, DivisorClassWitness};
pub use error::{Error, Result};
pub use fan::{Fan, InvariantCurveWall, StarFan};
pub use ingest::{
    batch_audit, parse_palp_stream, AuditReport, BatchMode, Polarization, PolytopeRecord,
};
pub use lattice::{det, solve_dual, DualSolution, DualVector, LatticeVector, UnimodularFrame};
pub use polytope::{minkowski_cover, CoverResult, Halfspace, LatticePolytope};
pub use report::{emit_report, ReportFormat};
