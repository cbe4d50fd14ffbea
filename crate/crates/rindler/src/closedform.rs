//! Analytic oracles for the closed-form expressions satisfied by the
//! helicity-entangled state, evaluated with certified remainder bounds and
//! kept independent of the eigenvalue pipeline they cross-check.
//!
//! With lambda_n = (1-q^2)^2 q^(2n) (n+1):
//!
//! * trace norm of the partial transpose: 2 (1-q^2)^2 sum (n+1) q^(2n) = 2,
//!   so the logarithmic negativity is exactly 1 for every q;
//! * joint entropy: S_AB = -sum lambda_n log2 lambda_n (no elementary closed
//!   form; summed here with an analytic remainder bound);
//! * Bob's entropy: S_B = 1 + S_AB;
//! * mutual information: I = S_A + S_B - S_AB = 1 + (1 + S_AB) - S_AB = 2.

use crate::error::{Error, Result};
use crate::series::{second_moment_tail, weighted_geometric_tail, KahanSum};

/// Value of a closed-form evaluation together with its certification.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormResult {
    pub name: &'static str,
    pub q: f64,
    pub value: f64,
    pub series_terms_used: usize,
    /// Upper bound on |value - exact|.
    pub certified_error: f64,
}

/// sum_{n>=0} (n+1) x^n = 1/(1-x)^2 for 0 <= x < 1.
pub fn weighted_geometric_sum(x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::OutOfRange {
            name: "x",
            value: x,
            expected: "[0, 1)",
        });
    }
    let one_minus = 1.0 - x;
    Ok(1.0 / (one_minus * one_minus))
}

/// Logarithmic negativity of the helicity state: the prefactor cancels the
/// weighted geometric sum, 2 (1-q^2)^2 / (1-q^2)^2 = 2, so log2 gives exactly
/// 1 independent of q in [0, 1).
pub fn helicity_log_negativity_exact(q: f64) -> f64 {
    debug_assert!((0.0..1.0).contains(&q));
    let _ = q;
    1.0
}

/// Mutual information of the helicity state: 1 + (S_AB + 1) - S_AB = 2,
/// independent of q in [0, 1).
pub fn helicity_mutual_info_exact(q: f64) -> f64 {
    debug_assert!((0.0..1.0).contains(&q));
    let _ = q;
    2.0
}

const ENTROPY_SERIES_BUDGET: usize = 50_000_000;

/// Certified upper bound on sum_{n>n_max} h(b_n), where h(b) = -b log2(b/2)
/// bounds the entropy a 2-dimensional block of trace b can carry and
/// b_n <= prefactor * (n+1) x^n.
///
/// Uses monotonicity of h below 2/e together with the geometric majorant
///
/// ```text
/// h(b_n) <= B (1 + max(0, -log2 B)) (n+1) x^n + B log2(1/x) n (n+1) x^n ,
/// ```
///
/// whose sums over n > n_max are exact tails. Returns infinity when a
/// majorant term beyond the cutoff exceeds 2/e, i.e. when the truncation is
/// too coarse to certify.
pub(crate) fn entropy_tail_majorant(prefactor: f64, x: f64, n_max: usize) -> f64 {
    if x == 0.0 || prefactor == 0.0 {
        return 0.0;
    }
    debug_assert!((0.0..1.0).contains(&x) && prefactor > 0.0);
    // The majorant u_n = B (n+1) x^n peaks at n* = (2x-1)/(1-x) for x > 1/2
    // and decreases from n = 0 otherwise; h is monotone only below 2/e, so
    // certification needs max_{n>n_max} u_n <= 2/e.
    let peak = if x > 0.5 {
        ((2.0 * x - 1.0) / (1.0 - x)).ceil() as usize
    } else {
        0
    };
    let u = |n: usize| prefactor * (n + 1) as f64 * x.powi(n as i32);
    let mut u_max = u(n_max + 1);
    if peak > n_max + 1 {
        u_max = u_max.max(u(peak)).max(u(peak + 1));
    }
    if u_max > 2.0 / std::f64::consts::E {
        return f64::INFINITY;
    }
    let log2_inv_x = -x.log2();
    let log_term = 1.0 + (-prefactor.log2()).max(0.0);
    prefactor
        * (log_term * weighted_geometric_tail(x, n_max)
            + log2_inv_x * second_moment_tail(x, n_max))
}

fn helicity_entropy_series(
    name: &'static str,
    offset: f64,
    q: f64,
    tol: f64,
) -> Result<ClosedFormResult> {
    if !(0.0..1.0).contains(&q) {
        return Err(Error::OutOfRange {
            name: "q",
            value: q,
            expected: "[0, 1)",
        });
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::NonPositive {
            name: "tol",
            value: tol,
        });
    }
    if q == 0.0 {
        // Single term lambda_0 = 1 contributes -1 log2 1 = 0.
        return Ok(ClosedFormResult {
            name,
            q,
            value: offset,
            series_terms_used: 1,
            certified_error: 0.0,
        });
    }
    let x = q * q;
    let prefactor = (1.0 - x) * (1.0 - x);
    let mut acc = KahanSum::new();
    let mut terms = 0;
    loop {
        let lambda = prefactor * (terms + 1) as f64 * x.powi(terms as i32);
        if lambda > 0.0 {
            acc.add(-lambda * lambda.log2());
        }
        let remainder = entropy_tail_majorant(prefactor, x, terms);
        terms += 1;
        if remainder <= tol {
            let fp_slack = f64::EPSILON * terms as f64 * acc.value().abs();
            return Ok(ClosedFormResult {
                name,
                q,
                value: offset + acc.value(),
                series_terms_used: terms,
                certified_error: remainder + fp_slack,
            });
        }
        if terms >= ENTROPY_SERIES_BUDGET {
            return Err(Error::NoConvergence {
                q,
                tol,
                budget: ENTROPY_SERIES_BUDGET,
            });
        }
    }
}

/// Joint entropy S_AB = -sum lambda_n log2 lambda_n, summed until the
/// analytic remainder bound drops below `tol`.
pub fn helicity_joint_entropy_exact(q: f64, tol: f64) -> Result<ClosedFormResult> {
    helicity_entropy_series("S_AB", 0.0, q, tol)
}

/// Bob's entropy S_B = 1 + S_AB: the same series offset by one bit.
pub fn helicity_bob_entropy_exact(q: f64, tol: f64) -> Result<ClosedFormResult> {
    helicity_entropy_series("S_B", 1.0, q, tol)
}
