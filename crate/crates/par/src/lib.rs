//! Map over independent work items, in parallel when the `parallel`
//! feature is enabled and the caller asks for it.
//!
//! Every exact kernel in the workspace is a pure function of its inputs,
//! so results are identical in both modes and always returned in input
//! order.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    Sequential,
    #[default]
    Parallel,
}

impl Mode {
    /// `Parallel` only if rayon is compiled in.
    pub fn effective(self) -> Mode {
        if cfg!(feature = "parallel") {
            self
        } else {
            Mode::Sequential
        }
    }
}

pub fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}

/// Applies `f` to every item, preserving order.
pub fn map<T, R, F>(mode: Mode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match mode.effective() {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Like [`map`] but stops at the first error (in parallel mode, at some error).
pub fn try_map<T, R, E, F>(mode: Mode, items: &[T], f: F) -> Result<Vec<R>, E>
where
    T: Sync,
    R: Send,
    E: Send,
    F: Fn(&T) -> Result<R, E> + Sync + Send,
{
    match mode.effective() {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Maps then folds with an associative `combine`.
pub fn map_reduce<T, R, F, C>(mode: Mode, items: &[T], identity: R, f: F, combine: C) -> R
where
    T: Sync,
    R: Send + Sync + Clone,
    F: Fn(&T) -> R + Sync + Send,
    C: Fn(R, R) -> R + Sync + Send,
{
    match mode.effective() {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).reduce(|| identity.clone(), &combine)
        }
        _ => items.iter().map(f).fold(identity, combine),
    }
}
