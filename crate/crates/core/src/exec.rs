//! Execution-mode switch for the data-parallel operations. With the
//! `parallel` feature enabled the default is rayon-backed; without it only
//! the sequential path exists. Parallel and sequential paths are required to
//! produce identical results, so the mode is a performance knob only.

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ExecMode {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[cfg_attr(feature = "parallel", default)]
    Parallel,
}
