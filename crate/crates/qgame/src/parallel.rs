//! Operator search with restarts spread over a thread pool.

use qgame_core::search::{merge_restarts, run_restart};
use qgame_core::{PureState, SearchConfig, SearchResult};
use rayon::prelude::*;

/// Same result as [`qgame_core::search_operators`] for any thread count:
/// every restart owns its RNG stream and the merge is order independent.
pub fn search_parallel(
    state: &PureState,
    config: &SearchConfig,
    threads: Option<usize>,
) -> qgame_core::Result<SearchResult> {
    config.validate()?;
    let run = || {
        (0..config.restarts)
            .into_par_iter()
            .map(|r| run_restart(state, config, r))
            .collect::<qgame_core::Result<Vec<_>>>()
    };
    let outcomes = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|_| qgame_core::Error::InvalidConfig("could not start worker threads"))?
            .install(run)?,
        None => run()?,
    };
    merge_restarts(outcomes, config.tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qgame_core::{make_state, search_operators, StateKind};

    #[test]
    fn matches_sequential_for_any_thread_count() {
        let s = make_state(StateKind::W, 3).unwrap();
        let config = SearchConfig {
            restarts: 12,
            seed: 4,
            ..SearchConfig::default()
        };
        let sequential = search_operators(&s, &config).unwrap();
        for threads in [Some(1), Some(3), None] {
            assert_eq!(search_parallel(&s, &config, threads).unwrap(), sequential);
        }
    }

    #[test]
    fn rejects_zero_restarts() {
        let s = make_state(StateKind::Bell, 2).unwrap();
        let config = SearchConfig {
            restarts: 0,
            ..SearchConfig::default()
        };
        assert!(search_parallel(&s, &config, None).is_err());
    }
}
