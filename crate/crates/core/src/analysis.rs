//! Locating peaks and envelopes of sampled observables such as `|d(t)|²`.
//!
//! Everything here works on closures `f(t)` so the coarse grid search can be
//! followed by golden-section refinement on the continuous function.

use alloc::vec::Vec;
use core::f64::consts::PI;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// A located extremum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Extremum {
    pub t: f64,
    pub value: f64,
}

/// `n ≥ 2` equally spaced points on `[0, t_max]`.
pub fn uniform_grid(t_max: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2, "grid needs at least two points");
    let step = t_max / (n - 1) as f64;
    (0..n).map(|k| if k == n - 1 { t_max } else { step * k as f64 }).collect()
}

/// Golden-section search for a maximum of `f` on `[lo, hi]`, stopping once
/// the bracket is narrower than `rel_tol · max(|t|, 1)`. Converges to a local
/// maximum; callers bracket a single peak first.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, rel_tol: f64) -> Extremum {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if hi - lo <= rel_tol * hi.abs().max(1.0) {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    let mut best = if f1 >= f2 { Extremum { t: x1, value: f1 } } else { Extremum { t: x2, value: f2 } };
    for t in [lo, hi] {
        let v = f(t);
        if v > best.value {
            best = Extremum { t, value: v };
        }
    }
    best
}

pub fn golden_section_min<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, rel_tol: f64) -> Extremum {
    let e = golden_section_max(|t| -f(t), lo, hi, rel_tol);
    Extremum { t: e.t, value: -e.value }
}

/// Refines the grid maximum at index `k` within its neighbouring samples.
fn refine_at<F: Fn(f64) -> f64>(f: &F, grid: &[f64], k: usize, rel_tol: f64) -> Extremum {
    let lo = grid[k.saturating_sub(1)];
    let hi = grid[(k + 1).min(grid.len() - 1)];
    let refined = golden_section_max(f, lo, hi, rel_tol);
    let sample = Extremum { t: grid[k], value: f(grid[k]) };
    if refined.value >= sample.value {
        refined
    } else {
        sample
    }
}

/// Global maximum over `[0, t_max]`: grid scan, then golden refinement.
pub fn global_max<F: Fn(f64) -> f64>(f: F, t_max: f64, samples: usize, rel_tol: f64) -> Extremum {
    let grid = uniform_grid(t_max, samples);
    let k = argmax(grid.iter().map(|&t| f(t)));
    refine_at(&f, &grid, k, rel_tol)
}

/// The first "transfer peak": the highest point of the first excursion of
/// `f` above `fraction` of its maximum over the grid.
///
/// The excursion only ends once `f` falls below half the entry level, so fast
/// ripples riding on a slow oscillation, which can cross the entry level
/// several times, do not split one peak into several.
pub fn first_peak<F: Fn(f64) -> f64>(
    f: F,
    t_max: f64,
    samples: usize,
    fraction: f64,
    rel_tol: f64,
) -> Option<Extremum> {
    let grid = uniform_grid(t_max, samples);
    let values: Vec<f64> = grid.iter().map(|&t| f(t)).collect();
    let top = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if top.is_nan() || top <= 0.0 {
        return None;
    }
    let level = fraction * top;
    let start = values.iter().position(|&v| v >= level)?;
    let exit = 0.5 * level;
    let len = values[start..].iter().position(|&v| v < exit).unwrap_or(values.len() - start);
    let k = start + argmax(values[start..start + len].iter().copied());
    Some(refine_at(&f, &grid, k, rel_tol))
}

/// Strict interior local maxima of the sampled series, each refined.
pub fn local_maxima<F: Fn(f64) -> f64>(f: F, t_max: f64, samples: usize, rel_tol: f64) -> Vec<Extremum> {
    let grid = uniform_grid(t_max, samples);
    let values: Vec<f64> = grid.iter().map(|&t| f(t)).collect();
    (1..values.len() - 1)
        .filter(|&k| values[k] > values[k - 1] && values[k] >= values[k + 1])
        .map(|k| refine_at(&f, &grid, k, rel_tol))
        .collect()
}

/// Strict interior local minima of the sampled series, each refined.
pub fn local_minima<F: Fn(f64) -> f64>(f: F, t_max: f64, samples: usize, rel_tol: f64) -> Vec<Extremum> {
    local_maxima(|t| -f(t), t_max, samples, rel_tol).into_iter().map(|e| Extremum { t: e.t, value: -e.value }).collect()
}

/// Heights of the fast-oscillation lobes centred near `(2k+1)π/rate`, for
/// every such centre up to `t_max`.
///
/// Each lobe's height is the local maximum nearest its nominal centre within
/// a quarter period either side, located on `samples_per_lobe` points and then
/// refined.
pub fn odd_lobe_peaks<F: Fn(f64) -> f64>(
    f: F,
    rate: f64,
    t_max: f64,
    samples_per_lobe: usize,
    rel_tol: f64,
) -> Vec<Extremum> {
    let period = 2.0 * PI / rate;
    let half_window = 0.25 * period;
    let mut out = Vec::new();
    let mut k = 0usize;
    loop {
        let centre = (2 * k + 1) as f64 * PI / rate;
        if centre > t_max {
            break;
        }
        let lo = centre - half_window;
        let grid: Vec<f64> = uniform_grid(2.0 * half_window, samples_per_lobe).into_iter().map(|t| lo + t).collect();
        let values: Vec<f64> = grid.iter().map(|&t| f(t)).collect();
        let nearest = (1..values.len() - 1)
            .filter(|&j| values[j] > values[j - 1] && values[j] >= values[j + 1])
            .min_by(|&a, &b| (grid[a] - centre).abs().total_cmp(&(grid[b] - centre).abs()));
        let j = nearest.unwrap_or_else(|| argmax(values.iter().copied()));
        out.push(refine_at(&f, &grid, j, rel_tol));
        k += 1;
    }
    out
}

/// Least-squares fit of `cos²(δt/2)` to envelope points, returning `|δ|`.
///
/// The coarse scan over `[lo, hi]` uses `scan` points before golden
/// refinement, so it needs `hi` below the aliasing limit of the samples.
pub fn fit_cos2_envelope(points: &[Extremum], lo: f64, hi: f64, scan: usize) -> f64 {
    let cost =
        |delta: f64| -> f64 { points.iter().map(|p| (p.value - (0.5 * delta * p.t).cos().powi(2)).powi(2)).sum() };
    let grid: Vec<f64> = uniform_grid(hi - lo, scan).into_iter().map(|x| lo + x).collect();
    let k = argmax(grid.iter().map(|&d| -cost(d)));
    let a = grid[k.saturating_sub(1)];
    let b = grid[(k + 1).min(grid.len() - 1)];
    golden_section_min(cost, a, b, 1e-12).t
}

fn argmax<I: Iterator<Item = f64>>(values: I) -> usize {
    let mut best = (0, f64::NEG_INFINITY);
    for (k, v) in values.enumerate() {
        if v > best.1 {
            best = (k, v);
        }
    }
    best.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_section_finds_parabola_vertex() {
        let e = golden_section_max(|t| 3.0 - (t - 1.234).powi(2), 0.0, 2.0, 1e-10);
        // the vertex is only resolvable to ~√ε
        assert!((e.t - 1.234).abs() < 1e-7);
        let e = golden_section_min(|t| (t - 0.5).powi(2) + 1.0, -1.0, 3.0, 1e-10);
        assert!((e.value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn grid_endpoints_are_exact() {
        let g = uniform_grid(40.0, 2001);
        assert_eq!((g[0], g[2000]), (0.0, 40.0));
        assert_eq!(uniform_grid(0.0, 2), [0.0, 0.0]);
    }

    #[test]
    fn first_peak_ignores_ripples() {
        // slow sin² with a fast low-amplitude ripple
        let f = |t: f64| (0.1 * t).sin().powi(2) * 0.98 + 0.01 * (20.0 * t).sin();
        let p = first_peak(f, 40.0, 4001, 0.5, 1e-9).unwrap();
        assert!((p.t - 5.0 * PI).abs() < 0.2, "{p:?}");
        assert!(p.value > 0.98);
        assert!(first_peak(|_| 0.0, 1.0, 10, 0.5, 1e-9).is_none());
    }

    #[test]
    fn ripples_crossing_the_entry_level_do_not_end_the_peak() {
        // the ripple dips back below 0.5·max just after the first crossing
        let f = |t: f64| (0.1 * t).sin().powi(2) + 0.05 * (20.0 * t).sin();
        let p = first_peak(f, 40.0, 40001, 0.5, 1e-9).unwrap();
        assert!((p.t - 5.0 * PI).abs() < 0.2, "{p:?}");
    }

    #[test]
    fn local_extrema_of_cosine() {
        let maxima = local_maxima(f64::cos, 20.0, 2001, 1e-10);
        assert_eq!(maxima.len(), 3);
        for (e, k) in maxima.iter().zip(1..) {
            assert!((e.t - 2.0 * PI * k as f64).abs() < 1e-6);
        }
        let minima = local_minima(f64::cos, 20.0, 2001, 1e-10);
        assert!((minima[0].t - PI).abs() < 1e-6 && (minima[0].value + 1.0).abs() < 1e-12);
    }

    #[test]
    fn envelope_fit_recovers_beat() {
        let delta = 0.045;
        let f = |t: f64| {
            let c = (delta * t).cos();
            let x = t.cos();
            (x * x - 2.0 * x * c + 1.0) / 4.0
        };
        let lobes = odd_lobe_peaks(f, 1.0, 160.0, 101, 1e-10);
        assert_eq!(lobes.len(), 25);
        let fitted = fit_cos2_envelope(&lobes, 1e-3, 0.3, 600);
        // refined lobe maxima sit slightly off the cos² envelope
        assert!((fitted - delta).abs() < 2e-4, "{fitted}");
    }
}
