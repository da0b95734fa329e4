//! K-theory of the composition series attached to a manifold with corners.

mod boundary;
mod pages;
mod report;
mod sixterm;

pub use boundary::{boundary_case_k1_qm, family_k_groups, FamilyInput, FamilyReport, QuotientKGroup};
pub use pages::{bott_k_group, d1_differential, e1_page, e2_page, E1Page, E1Slot, E2Page};
pub use report::{page_report, PageReport, HIGHER_DIFFERENTIALS_NOTE};
pub use sixterm::{map_name, six_term_solve, SixTermProblem, SixTermSolution, Slot, SlotSolution};
