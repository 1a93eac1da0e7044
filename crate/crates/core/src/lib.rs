pub mod boundary;
pub mod cli;
mod dd;
pub mod dirichlet;
pub mod error;
pub mod gamma;
pub mod integral;
pub mod laurent;
pub mod logcomplex;
mod sum;
pub mod verify;

pub use boundary::{
    boundary_distance_map, gap_check, phase_increments, radial_probe, GapReport, PhaseRecord, PhaseReport, ProbeReport,
};
pub use dirichlet::{
    eval_dirichlet, functional_residuals, map_to_halfplane, pole_spiral, s_minus, s_plus, DirichletParams, HalfPlaneImage,
};
pub use error::{Error, Result};
pub use gamma::{
    asymptotic_log_gamma, gamma_vertical, log_gamma, validate_params, validate_params_nonnegative,
    Parameters, ValidityReport,
};
pub use integral::{admissible_epsilon, eval_integral, eval_integral_on, RayContour};
pub use laurent::{
    contiguity_residual, eval_laurent, eval_power_series, eval_reciprocal_series, inversion_residual,
    reflection_transfer, AnnulusPoint, Method, SeriesEval,
};
pub use logcomplex::LogComplex;
