//! Exact checks on the nine-line arrangement and the branch-curve numerology.

mod cyclo;
mod invariants;
mod projective;

pub use cyclo::CycloNum;
pub use invariants::{branch_curve_invariants, check_consistency, ConsistencyReport, CurveInvariants};
pub use projective::{hesse_dual_lines, intersection_lattice, IntersectionPoint, ProjLine, ProjPoint};
