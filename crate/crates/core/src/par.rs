//! Data-parallel helpers. With the `parallel` feature disabled every mode runs
//! sequentially; results are identical either way because all reductions
//! used with these helpers are commutative and exact.

/// How to run a data-parallel loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Map `f` over `items`, keeping input order in the output.
pub fn map_collect<T, R, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
        _ => items.into_iter().map(f).collect(),
    }
}

/// Map then fold with an associative, commutative `combine`.
pub fn map_reduce<T, R, F, C>(mode: ExecMode, items: Vec<T>, identity: R, f: F, combine: C) -> R
where
    T: Send,
    R: Send + Sync + Clone,
    F: Fn(T) -> R + Sync + Send,
    C: Fn(R, R) -> R + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            items
                .into_par_iter()
                .map(f)
                .reduce(|| identity.clone(), &combine)
        }
        _ => items.into_iter().map(f).fold(identity, combine),
    }
}
