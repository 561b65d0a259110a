use std::collections::VecDeque;

use serde::Serialize;

use super::SumOptions;
use crate::error::{Error, Result};

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Outcome of an infinite-series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesResult {
    pub value: f64,
    /// Estimated bound on the omitted remainder.
    pub tail_estimate: f64,
    pub terms_used: usize,
    pub converged: bool,
    /// Σ|term|, used by callers to estimate cancellation error.
    pub abs_sum: f64,
}

impl SeriesResult {
    /// A closed-form value, carried through the same type as a summed series.
    pub fn exact(value: f64) -> Self {
        SeriesResult {
            value,
            tail_estimate: 0.0,
            terms_used: 0,
            converged: true,
            abs_sum: value.abs(),
        }
    }

    /// `factor · self`, with the tail scaled accordingly.
    pub fn scale(self, factor: f64) -> Self {
        SeriesResult {
            value: self.value * factor,
            tail_estimate: self.tail_estimate * factor.abs(),
            abs_sum: self.abs_sum * factor.abs(),
            ..self
        }
    }

    /// `self + other`, adding tails and term counts.
    pub fn combine(self, other: SeriesResult) -> Self {
        SeriesResult {
            value: self.value + other.value,
            tail_estimate: self.tail_estimate + other.tail_estimate,
            terms_used: self.terms_used + other.terms_used,
            converged: self.converged && other.converged,
            abs_sum: self.abs_sum + other.abs_sum,
        }
    }

    /// `self + c` for an exactly known constant `c`.
    pub fn offset(self, c: f64) -> Self {
        SeriesResult {
            value: self.value + c,
            abs_sum: self.abs_sum + c.abs(),
            ..self
        }
    }
}

/// Sliding record of the most recent term magnitudes.
///
/// The tail estimate compares the envelope (block maximum) of the newest
/// `width` terms with that of the `width` terms before, which keeps the
/// estimate meaningful when individual terms vanish or oscillate.
struct TailTracker {
    width: usize,
    history: VecDeque<(usize, f64)>,
}

impl TailTracker {
    fn new(opts: &SumOptions) -> Self {
        let width = opts.consecutive_small.max(3) + 1;
        TailTracker {
            width,
            history: VecDeque::with_capacity(2 * width + 1),
        }
    }

    /// `n` is the 1-based position of the term within the series.
    fn push(&mut self, n: usize, magnitude: f64) {
        if self.history.len() == 2 * self.width {
            self.history.pop_front();
        }
        self.history.push_back((n, magnitude));
    }

    fn block_max(&self, range: std::ops::Range<usize>) -> (usize, f64) {
        range
            .map(|i| self.history[i])
            .fold((0, 0.0), |best, cur| if cur.1 >= best.1 { cur } else { best })
    }

    /// Upper estimate of the remainder after the newest term, or `None`
    /// while fewer than two full blocks have been seen.
    fn estimate(&self) -> Option<f64> {
        if self.history.len() < 2 * self.width {
            return None;
        }
        let (n_old, m_old) = self.block_max(0..self.width);
        let (n_new, m_new) = self.block_max(self.width..2 * self.width);
        if m_new == 0.0 {
            return Some(0.0);
        }
        if m_old == 0.0 {
            // Terms reappeared after a run of zeros: no usable rate.
            return Some(m_new * 99.0);
        }
        let ratio = (m_new / m_old).powf(1.0 / self.width as f64);
        let r = ratio.clamp(0.0, 0.99);
        let geometric = m_new * r / (1.0 - r);

        // Local power-law fit |t_n| ~ C n^{-p}; dominates the geometric
        // bound when decay is slow.
        let n_last = self.history.back().map(|h| h.0).unwrap_or(n_new) as f64;
        let p = (m_old / m_new).ln() / (n_new as f64 / n_old as f64).ln();
        let algebraic = if p.is_finite() && p > 1.0 {
            m_new * n_last / (p - 1.0)
        } else {
            f64::INFINITY
        };
        Some(geometric.max(algebraic))
    }
}

fn check_finite(k: usize, t: f64) -> Result<()> {
    if t.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite {
            at: k as f64,
            value: t,
        })
    }
}

/// Sums `term(k)` for `k = start, start+1, …` until successive terms are
/// negligible and the estimated remainder is below tolerance.
///
/// Running out of `max_terms` is reported through `converged = false`, not as
/// an error.
pub fn sum_series<F>(start: usize, term: F, opts: &SumOptions) -> Result<SeriesResult>
where
    F: Fn(usize) -> f64,
{
    opts.validate()?;
    let mut acc = CompensatedSum::new();
    let mut abs_sum = CompensatedSum::new();
    let mut tracker = TailTracker::new(opts);
    let mut small_run = 0usize;

    for i in 0..opts.max_terms {
        let k = start + i;
        let t = term(k);
        check_finite(k, t)?;
        acc.add(t);
        abs_sum.add(t.abs());
        tracker.push(i + 1, t.abs());

        let value = acc.value();
        if t.abs() <= opts.tolerance(value) {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if small_run >= opts.consecutive_small {
            if let Some(tail) = tracker.estimate() {
                if tail <= opts.tolerance(value) {
                    return Ok(SeriesResult {
                        value,
                        tail_estimate: tail,
                        terms_used: i + 1,
                        converged: true,
                        abs_sum: abs_sum.value(),
                    });
                }
            }
        }
    }

    Ok(SeriesResult {
        value: acc.value(),
        tail_estimate: tracker.estimate().unwrap_or(f64::INFINITY),
        terms_used: opts.max_terms,
        converged: false,
        abs_sum: abs_sum.value(),
    })
}

/// Sums `Σ_{k≥start} (−1)^{k−start} a(k)`.
///
/// Once the coefficients keep one sign and their magnitudes are
/// non-increasing over the recent window, the first omitted magnitude bounds
/// the remainder. Otherwise the behaviour of [`sum_series`] applies.
pub fn sum_alternating<F>(start: usize, a: F, opts: &SumOptions) -> Result<SeriesResult>
where
    F: Fn(usize) -> f64,
{
    opts.validate()?;
    let window = opts.consecutive_small.max(3) + 1;
    let mut acc = CompensatedSum::new();
    let mut abs_sum = CompensatedSum::new();
    let mut tracker = TailTracker::new(opts);
    let mut recent: VecDeque<f64> = VecDeque::with_capacity(window + 1);
    let mut small_run = 0usize;

    let mut next = a(start);
    check_finite(start, next)?;

    let monotone = |recent: &VecDeque<f64>, next: f64| -> bool {
        if recent.len() < window {
            return false;
        }
        let positive = next >= 0.0;
        let same_sign = recent.iter().all(|&x| (x >= 0.0) == positive || x == 0.0);
        let decreasing = recent
            .iter()
            .chain(std::iter::once(&next))
            .zip(recent.iter().skip(1).chain(std::iter::once(&next)))
            .all(|(prev, cur)| cur.abs() <= prev.abs());
        same_sign && decreasing
    };

    for i in 0..opts.max_terms {
        let k = start + i;
        let current = next;
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        let t = sign * current;
        acc.add(t);
        abs_sum.add(t.abs());
        tracker.push(i + 1, t.abs());
        if recent.len() == window {
            recent.pop_front();
        }
        recent.push_back(current);

        next = a(k + 1);
        check_finite(k + 1, next)?;

        let value = acc.value();
        if t.abs() <= opts.tolerance(value) {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if small_run < opts.consecutive_small {
            continue;
        }
        let tail = if monotone(&recent, next) {
            Some(next.abs())
        } else {
            tracker.estimate()
        };
        if let Some(tail) = tail {
            if tail <= opts.tolerance(value) {
                return Ok(SeriesResult {
                    value,
                    tail_estimate: tail,
                    terms_used: i + 1,
                    converged: true,
                    abs_sum: abs_sum.value(),
                });
            }
        }
    }

    let tail = if monotone(&recent, next) {
        next.abs()
    } else {
        tracker.estimate().unwrap_or(f64::INFINITY)
    };
    Ok(SeriesResult {
        value: acc.value(),
        tail_estimate: tail,
        terms_used: opts.max_terms,
        converged: false,
        abs_sum: abs_sum.value(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn geometric_series() {
        let r = sum_series(1, |k| 0.5f64.powi(k as i32), &SumOptions::default()).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-12, "{}", r.value);
        assert!(r.tail_estimate <= 1e-14 + 1e-12);
    }

    #[test]
    fn slow_series_reports_honestly() {
        let opts = SumOptions::default();
        let r = sum_series(1, |k| 1.0 / (k as f64 * k as f64), &opts).unwrap();
        assert!(!r.converged);
        assert_eq!(r.terms_used, opts.max_terms);
        let true_tail = PI * PI / 6.0 - r.value;
        assert!(r.tail_estimate >= true_tail, "{} < {}", r.tail_estimate, true_tail);
        let expected = 1.0 / opts.max_terms as f64;
        assert!(
            (r.tail_estimate / expected - 1.0).abs() < 0.05,
            "tail {} vs 1/max_terms {}",
            r.tail_estimate,
            expected
        );
    }

    #[test]
    fn hyperbolic_sum_matches_brute_force() {
        // 30-term partial sum; the terms fall below 1e-38 well before k = 30.
        let oracle: f64 = (1..=30)
            .map(|k| k as f64 / (PI * k as f64).sinh())
            .collect::<CompensatedSum>()
            .value();
        let r = sum_series(1, |k| k as f64 / (PI * k as f64).sinh(), &SumOptions::default())
            .unwrap();
        assert!(r.converged);
        assert!((r.value - oracle).abs() < 1e-15);
        assert!((r.value - 0.094_573_019_664_761_94).abs() < 1e-15);
    }

    #[test]
    fn non_finite_term_is_an_error() {
        let err = sum_series(1, |k| if k == 3 { f64::NAN } else { 0.1 }, &SumOptions::default());
        assert!(matches!(err, Err(Error::NonFinite { .. })));
        let err = sum_alternating(0, |k| 1.0 / (k as f64), &SumOptions::default());
        assert!(matches!(err, Err(Error::NonFinite { .. })));
    }

    #[test]
    fn catalan_defining_series_is_too_slow() {
        let opts = SumOptions::default();
        let g = 0.915_965_594_177_219_015_054_6;
        let r = sum_alternating(0, |k| 1.0 / ((2 * k + 1) as f64).powi(2), &opts).unwrap();
        assert!(!r.converged);
        let first_omitted = 1.0 / ((2 * opts.max_terms + 1) as f64).powi(2);
        assert!((r.tail_estimate - first_omitted).abs() < 1e-20);
        assert!((r.value - g).abs() <= r.tail_estimate);
        assert!((r.value - g).abs() < 1e-6);
    }

    #[test]
    fn alternating_exponential_series() {
        let oracle: f64 = (1..=40)
            .map(|k| {
                let s = if k % 2 == 1 { 1.0 } else { -1.0 };
                s * k as f64 / (2.0 * PI * k as f64).exp_m1()
            })
            .collect::<CompensatedSum>()
            .value();
        let r = sum_alternating(
            1,
            |k| k as f64 / (2.0 * PI * k as f64).exp_m1(),
            &SumOptions::default(),
        )
        .unwrap();
        assert!(r.converged);
        assert!(r.terms_used < 15);
        assert!((r.value - oracle).abs() < 1e-17);
        assert!((r.value - 0.001_863_981_378_328_637_6).abs() < 1e-16);
    }

    #[test]
    fn zero_series() {
        let r = sum_alternating(0, |_| 0.0, &SumOptions::default()).unwrap();
        assert!(r.converged);
        assert_eq!(r.value, 0.0);
        let r = sum_series(0, |_| 0.0, &SumOptions::default()).unwrap();
        assert!(r.converged);
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn isolated_zero_terms_do_not_stop_the_sum() {
        // sin^2(kπ/2) vanishes at every even k.
        let r = sum_series(
            1,
            |k| (k as f64 * PI / 2.0).sin().powi(2) * 0.8f64.powi(k as i32),
            &SumOptions::default(),
        )
        .unwrap();
        // Σ_{k odd} 0.8^k = 0.8 / (1 − 0.64)
        assert!(r.converged);
        assert!((r.value - 0.8 / 0.36).abs() < 1e-11, "{}", r.value);
    }

    #[test]
    fn compensated_sum_of_tenths() {
        let mut acc = CompensatedSum::new();
        let mut naive = 0.0f64;
        for _ in 0..10_000_000 {
            acc.add(0.1);
            naive += 0.1;
        }
        assert!((acc.value() - 1e6).abs() < 1e-6);
        assert!((naive - 1e6).abs() > 1e-6);
    }
}
