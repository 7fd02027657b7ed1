//! Experiment drivers: Monte Carlo checks of the limit laws, estimates of
//! the centering constants, and the figure tables.

pub mod dp;
pub mod experiments;
pub mod figures;
pub mod normalization;
pub mod tolerances;

pub use dp::{dp_constant, dtilde_constant, estimate_dp, estimate_dtilde_p, DpGrid};
pub use experiments::{
    farey_statistic, quotient_sum_cf, quotient_sum_stat, run_farey_limit_law, run_farey_main_term, run_real_limit_law,
    sample_alpha, sample_rng, DpMode, ExperimentConfig, ExperimentReport, FareyLawConfig, FareyMainTermConfig,
    Measure, Parity, RealLawConfig, StatSummary, Target,
};
pub use figures::{emit_figure, figure_rows, Figure, FigureRow};
pub use normalization::{NormalizationParams, EULER_GAMMA};
