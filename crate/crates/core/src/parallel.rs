//! Deterministic chunked parallelism.
//!
//! Work is split into fixed-size row chunks that are processed independently
//! and merged in chunk order, so results are bit-identical regardless of the
//! number of worker threads. The thread count is `min(available cores,
//! RECTLAB_THREADS)`; callers set the cap through [`set_thread_cap`].

use std::ops::Range;
use std::sync::atomic::{AtomicUsize, Ordering};

static THREAD_CAP: AtomicUsize = AtomicUsize::new(0);

/// Cap the number of worker threads (0 restores the default of one thread
/// per available core).
pub fn set_thread_cap(cap: usize) {
    THREAD_CAP.store(cap, Ordering::Relaxed);
}

/// Resolved worker-thread count.
pub fn effective_threads() -> usize {
    let cores = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    match THREAD_CAP.load(Ordering::Relaxed) {
        0 => cores,
        cap => cap.min(cores).max(1),
    }
}

fn chunk_ranges(rows: usize, chunk_rows: usize) -> Vec<Range<usize>> {
    let chunk_rows = chunk_rows.max(1);
    (0..rows.div_ceil(chunk_rows))
        .map(|c| c * chunk_rows..((c + 1) * chunk_rows).min(rows))
        .collect()
}

/// Apply `f` to each chunk of `chunk_rows` rows (the last chunk may be
/// shorter) and collect the results in chunk order. `f` receives the row
/// range it covers.
pub fn map_chunks<R, F>(rows: usize, chunk_rows: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(Range<usize>) -> R + Sync,
{
    let ranges = chunk_ranges(rows, chunk_rows);
    let threads = effective_threads().min(ranges.len().max(1));
    if threads <= 1 {
        return ranges.into_iter().map(f).collect();
    }

    // Static round-robin assignment: chunk c goes to worker c % threads.
    let n_chunks = ranges.len();
    let mut per_thread: Vec<Vec<(usize, R)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|tid| {
                let f = &f;
                let ranges = &ranges;
                scope.spawn(move || {
                    let mut results = Vec::new();
                    let mut c = tid;
                    while c < ranges.len() {
                        results.push((c, f(ranges[c].clone())));
                        c += threads;
                    }
                    results
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    let mut slots: Vec<Option<R>> = Vec::with_capacity(n_chunks);
    slots.resize_with(n_chunks, || None);
    for bucket in per_thread.drain(..) {
        for (c, r) in bucket {
            slots[c] = Some(r);
        }
    }
    slots.into_iter().map(|s| s.expect("chunk computed")).collect()
}

/// Split `out` into chunks of `chunk_rows` rows of `row_width` elements and
/// apply `f(row_range, chunk)` to each, possibly on multiple threads. Chunks
/// are disjoint, so the result does not depend on scheduling.
pub fn for_each_chunk_mut<T, F>(out: &mut [T], row_width: usize, chunk_rows: usize, f: F)
where
    T: Send,
    F: Fn(Range<usize>, &mut [T]) + Sync,
{
    assert!(row_width > 0, "row width must be positive");
    assert_eq!(out.len() % row_width, 0, "output not a whole number of rows");
    let rows = out.len() / row_width;
    let chunk_rows = chunk_rows.max(1);
    let n_chunks = rows.div_ceil(chunk_rows);
    let threads = effective_threads().min(n_chunks.max(1));
    if threads <= 1 {
        for (c, chunk) in out.chunks_mut(chunk_rows * row_width).enumerate() {
            let start = c * chunk_rows;
            f(start..start + chunk.len() / row_width, chunk);
        }
        return;
    }

    let mut buckets: Vec<Vec<(usize, &mut [T])>> = (0..threads).map(|_| Vec::new()).collect();
    for (c, chunk) in out.chunks_mut(chunk_rows * row_width).enumerate() {
        buckets[c % threads].push((c, chunk));
    }
    std::thread::scope(|scope| {
        for bucket in buckets {
            let f = &f;
            scope.spawn(move || {
                for (c, chunk) in bucket {
                    let start = c * chunk_rows;
                    f(start..start + chunk.len() / row_width, chunk);
                }
            });
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_chunks_preserves_order() {
        let sums = map_chunks(10, 3, |r| r.sum::<usize>());
        assert_eq!(sums, vec![3, 12, 21, 9]);
    }

    #[test]
    fn for_each_chunk_mut_covers_all_rows() {
        let mut out = vec![0.0; 14];
        for_each_chunk_mut(&mut out, 2, 3, |rows, chunk| {
            for (i, row) in rows.enumerate() {
                chunk[i * 2] = row as f64;
                chunk[i * 2 + 1] = row as f64 + 0.5;
            }
        });
        for row in 0..7 {
            assert_eq!(out[row * 2], row as f64);
            assert_eq!(out[row * 2 + 1], row as f64 + 0.5);
        }
    }

    #[test]
    fn results_independent_of_thread_cap() {
        let serial = map_chunks(101, 7, |r| r.map(|i| (i as f64).sqrt()).sum::<f64>());
        set_thread_cap(3);
        let capped = map_chunks(101, 7, |r| r.map(|i| (i as f64).sqrt()).sum::<f64>());
        set_thread_cap(0);
        assert_eq!(serial, capped);
    }
}
