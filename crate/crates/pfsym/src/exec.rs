//! Execution strategy for bulk operations.
//!
//! The crate's heavy loops (poset construction, basis enumeration, axiom
//! sweeps) are data-parallel: independent work per element, merged
//! deterministically. With the `parallel` feature (default) they run on the
//! rayon pool; without it, or with [`Exec::Sequential`], they run serially.
//! Results are identical either way — parallel reductions always pick the
//! smallest-index witness, never the first one found.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Whether a bulk operation may fan out onto the rayon pool.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    /// Use the thread pool when the `parallel` feature is enabled
    /// (silently sequential otherwise).
    #[default]
    Parallel,
    /// Stay on the calling thread.
    Sequential,
}

/// `(0..n).map(f)` collected in index order.
pub(crate) fn map_indexed<T, F>(exec: Exec, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// First `Some` produced by `f`, by smallest index; `None` when every index
/// yields `None`. Deterministic under both strategies.
pub(crate) fn find_first<T, F>(exec: Exec, n: usize, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        return (0..n)
            .into_par_iter()
            .filter_map(|i| f(i).map(|t| (i, t)))
            .min_by_key(|(i, _)| *i);
    }
    let _ = exec;
    (0..n).find_map(|i| f(i).map(|t| (i, t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn find_first_picks_smallest_index() {
        for exec in [Exec::Parallel, Exec::Sequential] {
            let hit = find_first(exec, 1000, |i| if i % 7 == 3 { Some(i * 2) } else { None });
            assert_eq!(hit, Some((3, 6)));
            assert_eq!(find_first(exec, 10, |_| None::<u8>), None);
        }
    }

    #[test]
    fn map_indexed_keeps_order() {
        for exec in [Exec::Parallel, Exec::Sequential] {
            assert_eq!(map_indexed(exec, 5, |i| i * i), vec![0, 1, 4, 9, 16]);
        }
    }
}
