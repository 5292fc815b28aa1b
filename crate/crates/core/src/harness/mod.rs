//! Example instances, figure sweeps and file-driven runs.

mod examples;
mod figures;
pub mod fixtures;
pub mod io;
mod output;
mod runs;

pub use examples::{
    example_partition, run_example1, run_example2, Example1Config, Example1Report, Example2Config, Example2Row,
    Example2Run, EXAMPLE2_COLUMNS, ORDER_TOL,
};
pub use figures::{
    figure4_scatter, run_figure3, run_figure4, ExperimentRecord, FigureConfig, FigureRun, VIOLATION_TOL,
};
pub use output::{fmt_f64, Scatter, Table};
pub use runs::{memory_labels, run_bound, run_coherence, run_qkd};
