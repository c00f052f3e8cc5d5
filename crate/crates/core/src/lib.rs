//! A_alpha spectral radii of simple graphs, closed forms for sequential
//! joins of cliques, and desk-scale searches for the k-connected graph of
//! given order and diameter with the largest A_alpha spectral radius.

pub mod check;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod oracle;
pub mod perron;
pub mod quotient;
pub mod search;
pub mod shift;
pub mod spectra;
pub mod tridiag;
pub mod verify;

pub use check::Check;
pub use error::{Error, Result};
pub use graph::{complete, cycle, path, sequential_join, star, Diameter, Graph, JoinSpec};
pub use graph6::{emit_graph6, parse_graph6};
pub use iso::are_isomorphic;
pub use perron::{
    cell_profile, check_centered, check_cross_inequalities, check_monotonicity, check_monotonicity_oriented,
    recurrence_roots, CellProfile, GldSpec,
};
pub use quotient::{
    cubic_join, quad_join_lambda, quotient_matrix, quotient_spectral_radius, symmetric_join_lambda, theorem_bounds,
    triple_equal_lambda, CubicCoefficients, QuotientMatrix,
};
pub use search::{
    enumerate_critical_class, predicted_extremal, search, search_critical_class, search_exhaustive,
    verify_theorem_bounds_on_argmax, Mode, SearchParams, SearchReport,
};
pub use shift::{apply_shift, ShiftMove};
pub use spectra::{
    a_alpha_matrix, degree_bounds, delta_lower_bound, rayleigh_quotient, spectral_radius, Alpha, SpectralResult,
};
