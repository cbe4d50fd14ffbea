//! Coordinate maps between Minkowski (t, x) and Rindler (tau, rho) coordinates
//! for the four wedges of flat spacetime, plus accelerated-observer bookkeeping.
//!
//! Conventions: rho carries the wedge sign (negative in L and P), the boost
//! parameter tau is dimensionless, and an observer on the worldline of
//! constant rho has proper time rho*tau and proper acceleration 1/|rho|.
//! The transverse coordinates y, z are inert under the boost and are not
//! tracked.

use crate::error::{Error, Result};

/// The four boost-invariant sectors of Minkowski spacetime, separated by the
/// null planes |t| = |x|.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    /// Right wedge: x > |t|.
    R,
    /// Left wedge: x < -|t|.
    L,
    /// Future cone: t > |x|.
    F,
    /// Past cone: t < -|x|.
    P,
}

impl Sector {
    fn name(self) -> &'static str {
        match self {
            Sector::R => "R",
            Sector::L => "L",
            Sector::F => "F",
            Sector::P => "P",
        }
    }

    /// Sign that rho must carry in this sector.
    fn rho_sign(self) -> f64 {
        match self {
            Sector::R | Sector::F => 1.0,
            Sector::L | Sector::P => -1.0,
        }
    }
}

/// An event in inertial coordinates. Only (t, x) matter for the boost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkowskiEvent {
    pub t: f64,
    pub x: f64,
}

impl MinkowskiEvent {
    pub fn new(t: f64, x: f64) -> Self {
        Self { t, x }
    }
}

/// An event in wedge coordinates, tagged with its sector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RindlerEvent {
    pub tau: f64,
    pub rho: f64,
    pub sector: Sector,
}

impl RindlerEvent {
    pub fn new(tau: f64, rho: f64, sector: Sector) -> Self {
        Self { tau, rho, sector }
    }
}

/// A uniformly accelerated observer characterized by proper acceleration `a`
/// and the mode energy `E` its detector is sensitive to; the dimensionless
/// boost frequency is omega = E / a.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObserverParams {
    pub accel: f64,
    pub energy: f64,
    pub omega: f64,
}

impl ObserverParams {
    pub fn new(energy: f64, accel: f64) -> Result<Self> {
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
        Ok(Self {
            accel,
            energy,
            omega: energy / accel,
        })
    }
}

/// Which wedge or cone an event belongs to. Horizon points |t| = |x| are
/// rejected: no sector is defined there.
pub fn classify_sector(e: &MinkowskiEvent) -> Result<Sector> {
    let (t, x) = (e.t, e.x);
    if t.abs() == x.abs() {
        return Err(Error::OnHorizon { t, x });
    }
    if x > t.abs() {
        Ok(Sector::R)
    } else if x < -t.abs() {
        Ok(Sector::L)
    } else if t > x.abs() {
        Ok(Sector::F)
    } else {
        Ok(Sector::P)
    }
}

/// Map an off-horizon event to wedge coordinates.
///
/// R/L: rho = ±sqrt(x^2 - t^2), tau = atanh(t/x).
/// F/P: rho = ±sqrt(t^2 - x^2), tau = atanh(x/t).
pub fn to_rindler(e: &MinkowskiEvent) -> Result<RindlerEvent> {
    let sector = classify_sector(e)?;
    let (t, x) = (e.t, e.x);
    let (tau, rho) = match sector {
        Sector::R => ((t / x).atanh(), (x * x - t * t).sqrt()),
        Sector::L => ((t / x).atanh(), -(x * x - t * t).sqrt()),
        Sector::F => ((x / t).atanh(), (t * t - x * x).sqrt()),
        Sector::P => ((x / t).atanh(), -(t * t - x * x).sqrt()),
    };
    Ok(RindlerEvent { tau, rho, sector })
}

/// Inverse of [`to_rindler`].
///
/// R/L: t = rho sinh(tau), x = rho cosh(tau).
/// F/P: t = rho cosh(tau), x = rho sinh(tau).
pub fn to_minkowski(r: &RindlerEvent) -> Result<MinkowskiEvent> {
    if r.rho == 0.0 {
        return Err(Error::ZeroRho);
    }
    if r.rho.signum() != r.sector.rho_sign() {
        return Err(Error::SectorSignMismatch {
            rho: r.rho,
            sector: r.sector.name(),
        });
    }
    let (sh, ch) = (r.tau.sinh(), r.tau.cosh());
    let (t, x) = match r.sector {
        Sector::R | Sector::L => (r.rho * sh, r.rho * ch),
        Sector::F | Sector::P => (r.rho * ch, r.rho * sh),
    };
    Ok(MinkowskiEvent { t, x })
}

/// Proper acceleration 1/|rho| of the worldline at constant rho.
pub fn proper_acceleration(rho: f64) -> Result<f64> {
    if rho == 0.0 {
        return Err(Error::ZeroRho);
    }
    Ok(1.0 / rho.abs())
}
