//! Batch evaluation with a deterministic result.
//!
//! Searches scan candidates in fixed-size chunks. Inside a chunk the
//! predicate may run on several threads, but the reported hit is always the
//! lowest passing index, so the outcome never depends on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Candidates handed to the thread pool at once.
pub const CHUNK: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    /// Runs on the rayon pool; identical to `Sequential` when the
    /// `parallel` feature is off.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Index of the first item satisfying `pred`.
    pub fn position_first<T, F>(self, items: &[T], pred: F) -> Option<usize>
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().position_first(pred),
            _ => items.iter().position(pred),
        }
    }

    pub fn any<T, F>(self, items: &[T], pred: F) -> bool
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().any(pred),
            _ => items.iter().any(pred),
        }
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Pulls `CHUNK` items at a time from `source` and returns the first
    /// passing item with its zero-based position in the stream, or the
    /// number of items examined when `limit` runs out first.
    pub fn search<T, I, F>(self, source: I, limit: usize, pred: F) -> Result<(usize, T), usize>
    where
        T: Sync + Send,
        I: IntoIterator<Item = T>,
        F: Fn(&T) -> bool + Sync + Send,
    {
        let mut source = source.into_iter();
        let mut seen = 0;
        while seen < limit {
            let chunk: Vec<T> = source.by_ref().take(CHUNK.min(limit - seen)).collect();
            if chunk.is_empty() {
                break;
            }
            if let Some(i) = self.position_first(&chunk, &pred) {
                let index = seen + i;
                return Ok((index, chunk.into_iter().nth(i).expect("index in chunk")));
            }
            seen += chunk.len();
        }
        Err(seen)
    }
}
