//! Lah, r-Lah and Stirling (second kind) triangles, Bell numbers, and the
//! classical Spivey identity for Bell numbers.
//!
//! Lah and r-Lah entries come from their closed forms; the recurrences here
//! only serve as independent cross-checks.

use num_traits::{One, Zero};

use crate::exact::{binomial_int, factorial, ExactInt};
use crate::poly::{lambda_r_lah, LambdaPoly};
use crate::report::Report;

/// `L(n,k) = (n!/k!)·C(n-1, k-1)`, with `L(0,0) = 1`.
pub fn lah(n: usize, k: usize) -> ExactInt {
    r_lah(n, k, 0)
}

/// `L^r(n,k) = (n!/k!)·C(n+r-1, k+r-1)`; zero for `k > n`.
pub fn r_lah(n: usize, k: usize, r: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    if r == 0 && k == 0 {
        return if n == 0 {
            ExactInt::one()
        } else {
            ExactInt::zero()
        };
    }
    let top = (n + r - 1) as u64;
    let bottom = (k + r - 1) as u64;
    factorial(n) / factorial(k) * binomial_int(top, bottom)
}

/// `{n, k}` via `{n+1, k} = k{n, k} + {n, k-1}`.
pub fn stirling2(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    stirling2_row(n).swap_remove(k)
}

fn stirling2_row(n: usize) -> Vec<ExactInt> {
    let mut row = vec![ExactInt::one()];
    for m in 0..n {
        let mut next = vec![ExactInt::zero(); m + 2];
        for (k, v) in row.iter().enumerate() {
            next[k] += v * ExactInt::from(k);
            next[k + 1] += v;
        }
        row = next;
    }
    row
}

/// Bell number `φ_n`, the row sum of the Stirling triangle.
pub fn bell(n: usize) -> ExactInt {
    stirling2_row(n).into_iter().sum()
}

/// `φ_{n+m} = Σ_j Σ_k C(n,k) {m,j} j^{n-k} φ_k`, with `0^0 = 1`.
pub fn spivey_bell_check(n: usize, m: usize) -> Report {
    let mut report = Report::new("spivey-bell").param("n", n).param("m", m);
    let s = stirling2_row(m);
    let bells: Vec<ExactInt> = (0..=n).map(bell).collect();
    let mut rhs = ExactInt::zero();
    for (j, s_mj) in s.iter().enumerate() {
        for (k, b) in bells.iter().enumerate() {
            let power = num_traits::pow(ExactInt::from(j), n - k);
            rhs += binomial_int(n as u64, k as u64) * s_mj * power * b;
        }
    }
    report.check(|| format!("n={n}, m={m}"), &bell(n + m), &rhs);
    report
}

/// Cross-checks `L^r(n+1,k) = L^r(n,k-1) + (n+k+r)·L^r(n,k)` for
/// `n+1 <= n_max`, which follows from `⟨x+r⟩_{n+1} = ⟨x+r⟩_n (x+r+n)` and
/// `x·(x)_k = (x)_{k+1} + k·(x)_k`.
pub fn r_lah_recurrence_check(n_max: usize, r: usize) -> Report {
    let mut report = Report::new("r-lah-recurrence")
        .param("n_max", n_max)
        .param("r", r);
    for n in 0..n_max {
        for k in 0..=n + 1 {
            let prev = if k == 0 {
                ExactInt::zero()
            } else {
                r_lah(n, k - 1, r)
            };
            let rhs = prev + ExactInt::from(n + k + r) * r_lah(n, k, r);
            report.check(|| format!("n={}, k={k}", n + 1), &r_lah(n + 1, k, r), &rhs);
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    Lah,
    RLah(usize),
    Stirling2,
}

/// Integer triangle, row `n` holding entries for `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub kind: TriangleKind,
    pub rows: Vec<Vec<ExactInt>>,
}

impl Triangle {
    pub fn generate(kind: TriangleKind, n_max: usize) -> Self {
        let rows = match kind {
            TriangleKind::Lah => (0..=n_max)
                .map(|n| (0..=n).map(|k| lah(n, k)).collect())
                .collect(),
            TriangleKind::RLah(r) => (0..=n_max)
                .map(|n| (0..=n).map(|k| r_lah(n, k, r)).collect())
                .collect(),
            TriangleKind::Stirling2 => (0..=n_max).map(stirling2_row).collect(),
        };
        Triangle { kind, rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    /// Zero outside the stored rows or when `k > n`.
    pub fn entry(&self, n: usize, k: usize) -> ExactInt {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(ExactInt::zero)
    }

    pub fn row_sum(&self, n: usize) -> ExactInt {
        self.rows
            .get(n)
            .map(|r| r.iter().sum())
            .unwrap_or_else(ExactInt::zero)
    }
}

/// Source of Lah-type numbers consumed by the identity checks. The closed
/// forms are the default; verification runs can substitute a corrupted
/// table to confirm that failures are detected.
pub trait LahSource: Sync {
    fn r_lah(&self, n: usize, k: usize, r: usize) -> ExactInt;
    fn lambda_r_lah(&self, n: usize, k: usize, r: usize) -> LambdaPoly;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ClosedForm;

impl LahSource for ClosedForm {
    fn r_lah(&self, n: usize, k: usize, r: usize) -> ExactInt {
        r_lah(n, k, r)
    }

    fn lambda_r_lah(&self, n: usize, k: usize, r: usize) -> LambdaPoly {
        lambda_r_lah(n, k, r)
    }
}
