//! Library half of the `idom` binary: sweep drivers, report types, family
//! generation, and input parsing. Everything here is pure computation so
//! the acceptance suite can call the same entry points the binary does.

pub mod gen;
pub mod input;
pub mod report;
pub mod sweeps;

pub use report::{BoundCheck, GraphRecord, SweepReport};
pub use sweeps::{
    default_jobs, run_verify_cubic, run_verify_dorbec, run_verify_props, run_verify_subcubic,
};
