//! Execution mode for the oracle sweeps.
//!
//! With the `parallel` feature the sweeps fan out over rayon's pool;
//! without it, or in [`ExecMode::Sequential`], they run in order.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

impl ExecMode {
    /// The mode actually used, after accounting for compiled features.
    pub fn effective(self) -> ExecMode {
        if cfg!(feature = "parallel") {
            self
        } else {
            ExecMode::Sequential
        }
    }
}

/// Map `f` over `items`, preserving order. `init` builds per-worker state.
pub fn map_with<T, S, R, I, F>(mode: ExecMode, items: &[T], init: I, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &T) -> R + Sync + Send,
{
    match mode.effective() {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map_init(&init, |s, x| f(s, x)).collect()
        }
        _ => {
            let mut s = init();
            items.iter().map(|x| f(&mut s, x)).collect()
        }
    }
}

/// Stateless variant of [`map_with`].
pub fn map<T, R, F>(mode: ExecMode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_with(mode, items, || (), |_, x| f(x))
}
