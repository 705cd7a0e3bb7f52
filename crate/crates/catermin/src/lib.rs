//! Library side of the `catermin` command: text formats, verification reports
//! and rayon-parallel sweeps over the per-instance checks of `catermin-core`.

pub mod format;
pub mod report;
pub mod sweep;
