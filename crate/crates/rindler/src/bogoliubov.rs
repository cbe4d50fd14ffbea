//! Mode-level Bogoliubov data and the Rindler expansions of the Minkowski
//! vacuum and one-particle states, with certified truncation control.
//!
//! Everything is parameterized internally by q = e^(-pi*omega): the vacuum in
//! a single boost mode is the two-mode squeezed state
//!
//! ```text
//! |0> = sqrt(1-q^2) sum_n q^n |n>_R |n>_L
//! ```
//!
//! and acting with the Minkowski creation operator gives
//!
//! ```text
//! |1> = (1-q^2) sum_n q^n sqrt(n+1) |n+1>_R |n>_L .
//! ```
//!
//! Truncating either series at `n_max` leaves an exactly known probability
//! tail (geometric, respectively differentiated-geometric), which is carried
//! alongside the coefficients so downstream measures can certify their own
//! truncation error.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::series::KahanSum;

/// Photon helicity s = ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Helicity {
    Plus,
    Minus,
}

impl Helicity {
    pub fn sign(self) -> i8 {
        match self {
            Helicity::Plus => 1,
            Helicity::Minus => -1,
        }
    }
}

/// Opaque transverse-momentum tag. Partner modes flip its sign; the value
/// never enters any numeric formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransverseTag(pub i32);

impl TransverseTag {
    pub fn flipped(self) -> Self {
        TransverseTag(-self.0)
    }
}

/// Identity of a boost mode: dimensionless frequency omega > 0, transverse
/// tags, and helicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeLabel {
    pub omega: f64,
    pub py: TransverseTag,
    pub pz: TransverseTag,
    pub helicity: Helicity,
}

impl ModeLabel {
    pub fn new(omega: f64, py: TransverseTag, pz: TransverseTag, helicity: Helicity) -> Result<Self> {
        if !omega.is_finite() || omega <= 0.0 {
            return Err(Error::NonPositive {
                name: "omega",
                value: omega,
            });
        }
        Ok(Self {
            omega,
            py,
            pz,
            helicity,
        })
    }

    /// The L-sector partner that the vacuum squeezing pairs this mode with:
    /// same omega and helicity, flipped transverse tags.
    pub fn partner(&self) -> Self {
        Self {
            omega: self.omega,
            py: self.py.flipped(),
            pz: self.pz.flipped(),
            helicity: self.helicity,
        }
    }
}

/// Bogoliubov data for one mode: q = e^(-pi*omega) together with the
/// cosh-like and sinh-like coefficients
///
/// ```text
/// c = e^(pi*omega/2) / sqrt(2 sinh(pi*omega)) = 1/sqrt(1-q^2)
/// s = e^(-pi*omega/2) / sqrt(2 sinh(pi*omega)) = q/sqrt(1-q^2)
/// ```
///
/// which satisfy c^2 - s^2 = 1 and q = s/c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezeParams {
    q: f64,
    cosh_coeff: f64,
    sinh_coeff: f64,
}

impl SqueezeParams {
    /// Build from the dimensionless boost frequency omega > 0.
    pub fn from_omega(omega: f64) -> Result<Self> {
        if !omega.is_finite() || omega <= 0.0 {
            return Err(Error::NonPositive {
                name: "omega",
                value: omega,
            });
        }
        let q = (-PI * omega).exp();
        // 1 - q^2 = -expm1(-2*pi*omega), accurate for small omega where the
        // direct difference would cancel.
        let one_minus_q2 = -f64::exp_m1(-2.0 * PI * omega);
        if q >= 1.0 || one_minus_q2 <= 0.0 {
            return Err(Error::DegenerateMode { omega });
        }
        let cosh_coeff = 1.0 / one_minus_q2.sqrt();
        if !cosh_coeff.is_finite() {
            return Err(Error::DegenerateMode { omega });
        }
        Ok(Self {
            q,
            cosh_coeff,
            sinh_coeff: q * cosh_coeff,
        })
    }

    /// Build from detector energy E and proper acceleration a via omega = E/a.
    /// In the infinite-acceleration limit omega -> 0+ and q -> 1-.
    pub fn from_energy_accel(energy: f64, accel: f64) -> Result<Self> {
        Self::from_omega(omega_from_energy(energy, accel)?)
    }

    /// Build directly from q in [0, 1). q = 0 is the inertial limit.
    pub fn from_q(q: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&q) {
            return Err(Error::OutOfRange {
                name: "q",
                value: q,
                expected: "[0, 1)",
            });
        }
        let one_minus_q2 = (1.0 - q) * (1.0 + q);
        let cosh_coeff = 1.0 / one_minus_q2.sqrt();
        Ok(Self {
            q,
            cosh_coeff,
            sinh_coeff: q * cosh_coeff,
        })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn cosh_coeff(&self) -> f64 {
        self.cosh_coeff
    }

    pub fn sinh_coeff(&self) -> f64 {
        self.sinh_coeff
    }

    /// omega recovered from q; infinite for q = 0.
    pub fn omega(&self) -> f64 {
        -self.q.ln() / PI
    }

    /// 1 - q^2, computed without cancellation.
    pub fn one_minus_q_squared(&self) -> f64 {
        (1.0 - self.q) * (1.0 + self.q)
    }
}

/// Which Rindler expansion a coefficient series represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Vacuum,
    OneParticle,
}

/// Truncated expansion coefficients over n = 0..=n_max, plus the exact
/// probability mass beyond the cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSeries {
    pub kind: SeriesKind,
    pub q: f64,
    pub coeffs: Vec<f64>,
    pub tail_bound: f64,
}

impl CoefficientSeries {
    /// Compensated sum of squared coefficients.
    pub fn sum_of_squares(&self) -> f64 {
        let mut acc = KahanSum::new();
        for &c in &self.coeffs {
            acc.add(c * c);
        }
        acc.value()
    }
}

/// omega = E / a, the dimensionless frequency seen by a detector of energy E
/// carried with acceleration a.
pub fn omega_from_energy(energy: f64, accel: f64) -> Result<f64> {
    if !energy.is_finite() || energy <= 0.0 {
        return Err(Error::NonPositive {
            name: "energy",
            value: energy,
        });
    }
    if !accel.is_finite() || accel <= 0.0 {
        return Err(Error::NonPositive {
            name: "acceleration",
            value: accel,
        });
    }
    Ok(energy / accel)
}

/// Squeeze coefficients for a mode of frequency omega.
pub fn squeeze_from_omega(omega: f64) -> Result<SqueezeParams> {
    SqueezeParams::from_omega(omega)
}

/// Exact probability mass of the vacuum series beyond `n_max`:
/// sum_{n>N} (1-q^2) q^(2n) = q^(2(N+1)).
pub fn vacuum_tail(q: f64, n_max: usize) -> f64 {
    if q == 0.0 {
        return 0.0;
    }
    q.powi(2 * (n_max as i32 + 1))
}

/// Exact probability mass of the one-particle series beyond `n_max`:
/// sum_{n>N} (1-q^2)^2 (n+1) q^(2n) = q^(2(N+1)) [(N+2) - (N+1) q^2].
pub fn one_particle_tail(q: f64, n_max: usize) -> f64 {
    if q == 0.0 {
        return 0.0;
    }
    let np1 = (n_max + 1) as f64;
    let np2 = (n_max + 2) as f64;
    q.powi(2 * (n_max as i32 + 1)) * (np2 - np1 * q * q)
}

fn tail_for(kind: SeriesKind, q: f64, n_max: usize) -> f64 {
    match kind {
        SeriesKind::Vacuum => vacuum_tail(q, n_max),
        SeriesKind::OneParticle => one_particle_tail(q, n_max),
    }
}

/// Rindler expansion of the Minkowski vacuum: coeffs[n] = sqrt(1-q^2) q^n.
pub fn vacuum_expansion(p: &SqueezeParams, n_max: usize) -> CoefficientSeries {
    let q = p.q();
    let norm = p.one_minus_q_squared().sqrt();
    let coeffs = (0..=n_max).map(|n| norm * q.powi(n as i32)).collect();
    CoefficientSeries {
        kind: SeriesKind::Vacuum,
        q,
        coeffs,
        tail_bound: vacuum_tail(q, n_max),
    }
}

/// Rindler expansion of the Minkowski one-particle state:
/// coeffs[n] = (1-q^2) q^n sqrt(n+1), pairing |n+1>_R with |n>_L.
pub fn one_particle_expansion(p: &SqueezeParams, n_max: usize) -> CoefficientSeries {
    let q = p.q();
    let norm = p.one_minus_q_squared();
    let coeffs = (0..=n_max)
        .map(|n| norm * q.powi(n as i32) * ((n + 1) as f64).sqrt())
        .collect();
    CoefficientSeries {
        kind: SeriesKind::OneParticle,
        q,
        coeffs,
        tail_bound: one_particle_tail(q, n_max),
    }
}

const CUTOFF_BUDGET: usize = 1 << 31;

/// Smallest n_max whose analytic tail is at most `tol`.
pub fn min_cutoff_for_tolerance(p: &SqueezeParams, kind: SeriesKind, tol: f64) -> Result<usize> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::OutOfRange {
            name: "tol",
            value: tol,
            expected: "(0, 1)",
        });
    }
    let q = p.q();
    if q == 0.0 {
        return Ok(0);
    }
    if q >= 1.0 - f64::EPSILON {
        return Err(Error::NoConvergence {
            q,
            tol,
            budget: CUTOFF_BUDGET,
        });
    }
    // The vacuum tail q^(2(N+1)) <= tol solves in closed form and lower-bounds
    // the one-particle cutoff, so start there and walk.
    let estimate = (tol.ln() / (2.0 * q.ln()) - 1.0).ceil().max(0.0);
    if !estimate.is_finite() || estimate >= CUTOFF_BUDGET as f64 {
        return Err(Error::NoConvergence {
            q,
            tol,
            budget: CUTOFF_BUDGET,
        });
    }
    let mut n = (estimate as usize).saturating_sub(2);
    while tail_for(kind, q, n) > tol {
        n += 1;
        if n >= CUTOFF_BUDGET {
            return Err(Error::NoConvergence {
                q,
                tol,
                budget: CUTOFF_BUDGET,
            });
        }
    }
    while n > 0 && tail_for(kind, q, n - 1) <= tol {
        n -= 1;
    }
    Ok(n)
}
