use std::sync::OnceLock;

use super::Rational;
use crate::error::{Error, Result};

/// Largest Bernoulli index served from the exact table.
pub const BERNOULLI_CAP: usize = 34;
/// Largest Eulerian row served from the exact table.
pub const EULERIAN_CAP: usize = 32;

fn binomial(n: u32, k: u32) -> Result<i128> {
    let k = k.min(n - k);
    let mut c: i128 = 1;
    for i in 0..k {
        c = c
            .checked_mul((n - i) as i128)
            .ok_or_else(|| Error::Overflow(format!("C({n},{k})")))?
            / (i as i128 + 1);
    }
    Ok(c)
}

fn bernoulli_table() -> &'static [Rational] {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut b = Vec::with_capacity(BERNOULLI_CAP + 1);
        b.push(Rational::ONE);
        for n in 1..=BERNOULLI_CAP {
            // Σ_{j=0}^{n} C(n+1, j) B_j = 0
            let mut acc = Rational::ZERO;
            for (j, bj) in b.iter().enumerate() {
                let term = binomial(n as u32 + 1, j as u32)
                    .and_then(|c| bj.mul_int(c))
                    .expect("Bernoulli table fits in 128 bits up to the cap");
                acc = acc.add(&term).expect("Bernoulli table fits in 128 bits");
            }
            let bn = acc
                .neg()
                .div_int(n as i128 + 1)
                .expect("Bernoulli table fits in 128 bits");
            b.push(bn);
        }
        b
    })
}

/// Exact Bernoulli number `B_n` with `B_1 = −1/2`.
pub fn bernoulli(n: usize) -> Result<Rational> {
    bernoulli_table()
        .get(n)
        .copied()
        .ok_or_else(|| Error::Overflow(format!("B_{n} exceeds the 128-bit table (cap {BERNOULLI_CAP})")))
}

/// Taylor coefficients of `1/(e^x + 1) = Σ Q_n x^n / n!`.
pub fn q_number(n: usize) -> Result<Rational> {
    if n == 0 {
        return Rational::new(1, 2);
    }
    if n + 1 > BERNOULLI_CAP {
        return Err(Error::Overflow(format!("Q_{n} needs B_{} (cap {BERNOULLI_CAP})", n + 1)));
    }
    let factor = 1i128 - (1i128 << (n + 1));
    bernoulli(n + 1)?.mul_int(factor)?.div_int(n as i128 + 1)
}

/// Abel sum of `Σ_{k≥1} (−1)^{k+1} k^m`, i.e. the alternating zeta value η(−m).
pub fn eta_negative(m: usize) -> Result<Rational> {
    if m == 0 {
        return Rational::new(1, 2);
    }
    if m + 1 > BERNOULLI_CAP {
        return Err(Error::Overflow(format!("η(−{m}) needs B_{} (cap {BERNOULLI_CAP})", m + 1)));
    }
    let factor = (1i128 << (m + 1)) - 1;
    bernoulli(m + 1)?.mul_int(factor)?.div_int(m as i128 + 1)
}

fn eulerian_table() -> &'static [Vec<i128>] {
    static TABLE: OnceLock<Vec<Vec<i128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Row index n holds A(n, 0..n); row 0 is unused.
        let mut rows: Vec<Vec<i128>> = vec![vec![], vec![1]];
        for n in 2..=EULERIAN_CAP {
            let prev = &rows[n - 1];
            let row: Vec<i128> = (0..n)
                .map(|k| {
                    let keep = prev.get(k).copied().unwrap_or(0);
                    let shift = if k > 0 { prev.get(k - 1).copied().unwrap_or(0) } else { 0 };
                    (k as i128 + 1)
                        .checked_mul(keep)
                        .and_then(|a| (n as i128 - k as i128).checked_mul(shift).and_then(|b| a.checked_add(b)))
                        .expect("Eulerian table fits in 128 bits up to the cap")
                })
                .collect();
            rows.push(row);
        }
        rows
    })
}

/// Eulerian number `A(n, k)`: permutations of `n` with `k` ascents.
pub fn eulerian(n: usize, k: usize) -> Result<i128> {
    if n == 0 || k >= n {
        return Err(Error::Domain(format!("A({n},{k}) needs n ≥ 1 and 0 ≤ k < n")));
    }
    eulerian_row(n).map(|row| row[k])
}

/// Row `A(n, 0), …, A(n, n−1)`.
pub fn eulerian_row(n: usize) -> Result<&'static [i128]> {
    if n == 0 {
        return Err(Error::Domain("Eulerian rows start at n = 1".into()));
    }
    eulerian_table()
        .get(n)
        .map(|r| r.as_slice())
        .ok_or_else(|| Error::Overflow(format!("Eulerian row {n} exceeds the table (cap {EULERIAN_CAP})")))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Akiyama–Tanigawa: an independent route to B_n (agrees for n ≥ 2).
    fn at_oracle(n: usize) -> Rational {
        let mut a: Vec<Rational> = Vec::new();
        let mut out = Rational::ZERO;
        for m in 0..=n {
            a.push(Rational::new(1, m as i128 + 1).unwrap());
            for j in (1..=m).rev() {
                a[j - 1] = a[j - 1].sub(&a[j]).unwrap().mul_int(j as i128).unwrap();
            }
            out = a[0];
        }
        out
    }

    #[test]
    fn oracle_values() {
        assert_eq!(bernoulli(0).unwrap(), Rational::ONE);
        assert_eq!(bernoulli(1).unwrap().to_string(), "-1/2");
        assert_eq!(bernoulli(3).unwrap(), Rational::ZERO);
        assert_eq!(bernoulli(6).unwrap().to_string(), "1/42");
        assert_eq!(bernoulli(12).unwrap().to_string(), "-691/2730");
        assert_eq!(bernoulli(34).unwrap().to_string(), "2577687858367/6");
    }

    #[test]
    fn matches_akiyama_tanigawa() {
        for n in 2..=30 {
            assert_eq!(bernoulli(n).unwrap(), at_oracle(n), "B_{n}");
        }
    }

    #[test]
    fn matches_zeta_formula() {
        // B_{2m} = (−1)^{m+1} 2 (2m)! ζ(2m) / (2π)^{2m}
        for m in 1..=10usize {
            let s = 2 * m as i32;
            let n = 2000usize;
            let nf = n as f64;
            // Partial sum plus Euler–Maclaurin tail.
            let zeta: f64 = (1..=n).map(|k| (k as f64).powi(-s)).rev().sum::<f64>()
                + nf.powi(1 - s) / (s as f64 - 1.0)
                - 0.5 * nf.powi(-s)
                + s as f64 / 12.0 * nf.powi(-s - 1);
            let fact: f64 = (1..=2 * m).map(|i| i as f64).product();
            let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
            let approx = sign * 2.0 * fact * zeta / (2.0 * std::f64::consts::PI).powi(2 * m as i32);
            let exact = bernoulli(2 * m).unwrap().to_f64();
            assert!(((approx - exact) / exact).abs() < 1e-9, "m={m}");
        }
    }

    #[test]
    fn beyond_cap_is_an_error() {
        assert!(matches!(bernoulli(BERNOULLI_CAP + 1), Err(Error::Overflow(_))));
        assert!(q_number(BERNOULLI_CAP).is_err());
        assert!(eta_negative(BERNOULLI_CAP).is_err());
    }

    #[test]
    fn q_numbers() {
        let expected = ["1/2", "-1/4", "0", "1/8", "0", "-1/4", "0", "17/16"];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(q_number(n).unwrap().to_string(), *e, "Q_{n}");
        }
    }

    #[test]
    fn q_numbers_match_taylor_expansion() {
        // Σ_{k≤12} Q_k x^k / k! against 1/(e^x+1)
        for &x in &[-0.2f64, -0.1, 0.1, 0.2] {
            let mut fact = 1.0;
            let mut series = 0.0;
            for k in 0..=12usize {
                if k > 0 {
                    fact *= k as f64;
                }
                series += q_number(k).unwrap().to_f64() * x.powi(k as i32) / fact;
            }
            assert!((series - 1.0 / (x.exp() + 1.0)).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn eta_values() {
        assert_eq!(eta_negative(0).unwrap().to_string(), "1/2");
        assert_eq!(eta_negative(1).unwrap().to_string(), "1/4");
        assert_eq!(eta_negative(2).unwrap(), Rational::ZERO);
        assert_eq!(eta_negative(3).unwrap().to_string(), "-1/8");
        assert_eq!(eta_negative(5).unwrap().to_string(), "1/4");
        for m in 1..20 {
            assert_eq!(eta_negative(m).unwrap(), q_number(m).unwrap().neg());
        }
    }

    /// A(n,k) = Σ_{j=0}^{k} (−1)^j C(n+1, j) (k+1−j)^n
    fn eulerian_explicit(n: u32, k: u32) -> i128 {
        (0..=k)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * binomial(n + 1, j).unwrap() * ((k + 1 - j) as i128).pow(n)
            })
            .sum()
    }

    #[test]
    fn eulerian_rows() {
        assert_eq!(eulerian_row(3).unwrap(), &[1, 4, 1]);
        assert_eq!(eulerian_row(5).unwrap(), &[1, 26, 66, 26, 1]);
        assert_eq!(
            eulerian_row(9).unwrap(),
            &[1, 502, 14608, 88234, 156190, 88234, 14608, 502, 1]
        );
        for n in 1..=EULERIAN_CAP {
            assert_eq!(eulerian(n, 0).unwrap(), 1);
        }
        for n in 1..=20u32 {
            for k in 0..n {
                assert_eq!(eulerian(n as usize, k as usize).unwrap(), eulerian_explicit(n, k));
            }
        }
        // Row sums are n!.
        let fact: i128 = (1..=20).product();
        assert_eq!(eulerian_row(20).unwrap().iter().sum::<i128>(), fact);
    }

    #[test]
    fn eulerian_domain() {
        assert!(matches!(eulerian(0, 0), Err(Error::Domain(_))));
        assert!(matches!(eulerian(3, 3), Err(Error::Domain(_))));
        assert!(matches!(eulerian(EULERIAN_CAP + 1, 0), Err(Error::Overflow(_))));
    }
}
