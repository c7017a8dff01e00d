//! Deterministic reductions. Every multi-term sum in the heavy forms goes
//! through a fixed binary tree over the index range, so serial and parallel
//! executions produce bit-identical results.

/// Below this range length the sum is taken serially left to right.
const LEAF: usize = 1024;

/// Range lengths at or above this are candidates for `rayon::join`.
const PAR_THRESHOLD: usize = 4096;

pub fn tree_sum_f64<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    fn rec<F: Fn(usize) -> f64 + Sync>(lo: usize, hi: usize, f: &F) -> f64 {
        let len = hi - lo;
        if len <= LEAF {
            let mut acc = 0.0;
            for i in lo..hi {
                acc += f(i);
            }
            return acc;
        }
        let mid = lo + len / 2;
        if len >= PAR_THRESHOLD {
            let (a, b) = rayon::join(|| rec(lo, mid, f), || rec(mid, hi, f));
            a + b
        } else {
            rec(lo, mid, f) + rec(mid, hi, f)
        }
    }
    if n == 0 {
        0.0
    } else {
        rec(0, n, &f)
    }
}

pub fn tree_sum_u64<F>(n: usize, f: F) -> u64
where
    F: Fn(usize) -> u64 + Sync,
{
    fn rec<F: Fn(usize) -> u64 + Sync>(lo: usize, hi: usize, f: &F) -> u64 {
        let len = hi - lo;
        if len <= LEAF {
            let mut acc = 0u64;
            for i in lo..hi {
                acc += f(i);
            }
            return acc;
        }
        let mid = lo + len / 2;
        if len >= PAR_THRESHOLD {
            let (a, b) = rayon::join(|| rec(lo, mid, f), || rec(mid, hi, f));
            a + b
        } else {
            rec(lo, mid, f) + rec(mid, hi, f)
        }
    }
    if n == 0 {
        0
    } else {
        rec(0, n, &f)
    }
}

/// Run `f` on a dedicated rayon pool with the given thread count.
/// `None` uses the global pool. Results are identical either way; this only
/// exists so callers can demonstrate that.
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match threads {
        None => f(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_sum_matches_serial_structure() {
        // Value must not depend on the pool it runs in.
        let f = |i: usize| ((i as f64) * 0.1).sin();
        let n = 50_000;
        let a = with_threads(Some(1), || tree_sum_f64(n, f));
        let b = with_threads(Some(4), || tree_sum_f64(n, f));
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn tree_sum_u64_exact() {
        assert_eq!(tree_sum_u64(1000, |i| i as u64), 499_500);
        assert_eq!(tree_sum_u64(0, |_| 1), 0);
    }
}
