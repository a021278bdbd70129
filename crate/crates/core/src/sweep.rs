//! Sweep grids and an order-preserving parallel map.

use std::num::NonZeroUsize;
use std::thread;

use crate::{Error, Result};

fn check_range(from: f64, to: f64, points: usize) -> Result<()> {
    if !from.is_finite() || !to.is_finite() {
        return Err(Error::Usage(format!("sweep range must be finite, got [{from}, {to}]")));
    }
    if to < from {
        return Err(Error::Usage(format!("sweep range must be ordered, got [{from}, {to}]")));
    }
    if points == 0 {
        return Err(Error::Usage("sweep needs at least one point".into()));
    }
    if points == 1 && to != from {
        return Err(Error::Usage("a single-point sweep needs from == to".into()));
    }
    Ok(())
}

/// `points` evenly spaced values from `from` to `to`, both endpoints exact.
pub fn linspace(from: f64, to: f64, points: usize) -> Result<Vec<f64>> {
    check_range(from, to, points)?;
    if points == 1 {
        return Ok(vec![from]);
    }
    let last = (points - 1) as f64;
    Ok((0..points)
        .map(|k| match k {
            0 => from,
            k if k == points - 1 => to,
            k => from + (to - from) * (k as f64 / last),
        })
        .collect())
}

/// Logarithmically spaced values, both endpoints exact.
pub fn logspace(from: f64, to: f64, points: usize) -> Result<Vec<f64>> {
    check_range(from, to, points)?;
    if from <= 0.0 {
        return Err(Error::Usage(format!("log sweep needs a positive range, got [{from}, {to}]")));
    }
    let (a, b) = (from.ln(), to.ln());
    let mut grid = linspace(a, b, points)?;
    let n = grid.len();
    for (k, v) in grid.iter_mut().enumerate() {
        *v = match k {
            0 => from,
            k if k == n - 1 => to,
            _ => v.exp(),
        };
    }
    Ok(grid)
}

/// Maps `f` over `items` on scoped worker threads; output order matches input order.
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    let workers = thread::available_parallelism().map_or(1, NonZeroUsize::get).min(items.len().max(1));
    if workers <= 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    let f = &f;
    thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(f).collect::<Vec<U>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("sweep worker panicked")).collect()
    })
}
