//! Gravitational potentials, redshift factors and the orbital Doppler estimate.
//!
//! An observer at potential level σ ages with proper time τ_σ = Θ_σ τ_ref
//! where Θ_σ = 1 + z_σ and z_σ = (W_σ − W_ref)/c². Redshifts are stored as
//! `z` rather than `Θ` so differences of order 1e-14 keep full precision.

mod catalog;

pub use catalog::{parse_catalog, ScenarioCatalog, PRESET_NAMES};

use serde::Serialize;

use crate::error::ensure_finite;
use crate::{Error, Result, SPEED_OF_LIGHT};

/// Central body constants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BodyParams {
    /// Gravitational parameter GM [m³/s²].
    pub gm: f64,
    /// Equatorial radius [m].
    pub equatorial_radius: f64,
    /// Sidereal rotation rate [rad/s].
    pub sidereal_rotation_rate: f64,
}

impl BodyParams {
    pub const EARTH: BodyParams = BodyParams {
        gm: 3.986_004e14,
        equatorial_radius: 6.378_137e6,
        sidereal_rotation_rate: 7.292_115_9e-5,
    };

    pub fn new(gm: f64, equatorial_radius: f64, sidereal_rotation_rate: f64) -> Result<Self> {
        let body = BodyParams { gm, equatorial_radius, sidereal_rotation_rate };
        body.validate()?;
        Ok(body)
    }

    fn validate(&self) -> Result<()> {
        ensure_finite("gm", self.gm)?;
        ensure_finite("equatorial_radius", self.equatorial_radius)?;
        ensure_finite("sidereal_rotation_rate", self.sidereal_rotation_rate)?;
        if self.gm <= 0.0 || self.equatorial_radius <= 0.0 {
            return Err(Error::Domain("gm and equatorial_radius must be positive".into()));
        }
        Ok(())
    }

    /// Radius of the circular orbit co-rotating with the body.
    pub fn synchronous_radius(&self) -> f64 {
        (self.gm / (self.sidereal_rotation_rate * self.sidereal_rotation_rate)).cbrt()
    }
}

impl Default for BodyParams {
    fn default() -> Self {
        BodyParams::EARTH
    }
}

/// An observer at fixed radius moving on a circle with constant speed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StationaryObserver {
    /// Distance from the body center [m].
    pub radius: f64,
    /// Orbital speed [m/s].
    pub orbital_speed: f64,
}

impl StationaryObserver {
    pub fn new(radius: f64, orbital_speed: f64) -> Result<Self> {
        let obs = StationaryObserver { radius, orbital_speed };
        obs.validate()?;
        Ok(obs)
    }

    fn validate(&self) -> Result<()> {
        ensure_finite("radius", self.radius)?;
        ensure_finite("orbital_speed", self.orbital_speed)?;
        if self.radius <= 0.0 {
            return Err(Error::Domain(format!("radius must be positive, got {}", self.radius)));
        }
        if self.orbital_speed < 0.0 {
            return Err(Error::Domain(format!("orbital speed must be non-negative, got {}", self.orbital_speed)));
        }
        Ok(())
    }

    /// Observer at `height` above the equatorial radius, carried along by the
    /// body's rotation at geocentric `latitude` [rad].
    pub fn co_rotating(body: &BodyParams, height: f64, latitude: f64) -> Self {
        let radius = body.equatorial_radius + height;
        StationaryObserver {
            radius,
            orbital_speed: body.sidereal_rotation_rate * radius * latitude.cos().abs(),
        }
    }

    /// Free-falling observer on a circular orbit of the given radius.
    pub fn circular_orbit(body: &BodyParams, radius: f64) -> Self {
        StationaryObserver { radius, orbital_speed: (body.gm / radius).sqrt() }
    }

    /// Observer on the synchronous (geostationary) orbit.
    pub fn geostationary(body: &BodyParams) -> Self {
        StationaryObserver::circular_orbit(body, body.synchronous_radius())
    }
}

/// Potential W = −GM/R − v²/2 [m²/s²].
pub fn potential(obs: &StationaryObserver, body: &BodyParams) -> Result<f64> {
    obs.validate()?;
    body.validate()?;
    Ok(-body.gm / obs.radius - 0.5 * obs.orbital_speed * obs.orbital_speed)
}

/// Redshift factors of the upper and lower arm relative to a reference observer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RedshiftPair {
    z_u: f64,
    z_l: f64,
}

impl RedshiftPair {
    /// Builds the pair from the redshifts z_σ = Θ_σ − 1.
    pub fn from_shifts(z_u: f64, z_l: f64) -> Result<Self> {
        ensure_finite("z_u", z_u)?;
        ensure_finite("z_l", z_l)?;
        if z_u <= -1.0 || z_l <= -1.0 {
            return Err(Error::Domain("redshift factors must be positive".into()));
        }
        Ok(RedshiftPair { z_u, z_l })
    }

    /// Builds the pair from Θ_U and Θ_L.
    pub fn from_thetas(theta_u: f64, theta_l: f64) -> Result<Self> {
        RedshiftPair::from_shifts(theta_u - 1.0, theta_l - 1.0)
    }

    pub fn z_u(&self) -> f64 {
        self.z_u
    }

    pub fn z_l(&self) -> f64 {
        self.z_l
    }

    pub fn theta_u(&self) -> f64 {
        1.0 + self.z_u
    }

    pub fn theta_l(&self) -> f64 {
        1.0 + self.z_l
    }

    /// Δ_Θ = Θ_L − Θ_U.
    pub fn delta_theta(&self) -> f64 {
        self.z_l - self.z_u
    }

    /// Δ_{Θ⁻¹} = 1/Θ_L − 1/Θ_U, evaluated without cancellation.
    pub fn delta_theta_inv(&self) -> f64 {
        (self.z_u - self.z_l) / ((1.0 + self.z_u) * (1.0 + self.z_l))
    }

    /// The same pair with the arms exchanged.
    pub fn swapped(&self) -> Self {
        RedshiftPair { z_u: self.z_l, z_l: self.z_u }
    }
}

/// Two interferometer arms and the observer whose clock defines Θ = 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Scenario {
    pub name: String,
    pub upper: StationaryObserver,
    pub lower: StationaryObserver,
    pub reference: StationaryObserver,
}

impl Scenario {
    /// Scenario referenced to the lower station.
    pub fn new(name: impl Into<String>, upper: StationaryObserver, lower: StationaryObserver) -> Self {
        Scenario { name: name.into(), upper, lower, reference: lower }
    }

    pub fn with_reference(mut self, reference: StationaryObserver) -> Self {
        self.reference = reference;
        self
    }

    /// Tower of `height` on the equator, both arms co-rotating.
    pub fn tower(name: impl Into<String>, body: &BodyParams, height: f64) -> Self {
        Scenario::new(
            name,
            StationaryObserver::co_rotating(body, height, 0.0),
            StationaryObserver::co_rotating(body, 0.0, 0.0),
        )
    }
}

/// Redshift pair of a scenario: z_σ = (W_σ − W_ref)/c².
pub fn redshift_pair(scenario: &Scenario, body: &BodyParams) -> Result<RedshiftPair> {
    let c2 = SPEED_OF_LIGHT * SPEED_OF_LIGHT;
    let w_ref = potential(&scenario.reference, body)?;
    let z_u = (potential(&scenario.upper, body)? - w_ref) / c2;
    let z_l = (potential(&scenario.lower, body)? - w_ref) / c2;
    RedshiftPair::from_shifts(z_u, z_l)
}

/// Relative motion of two coplanar circular orbits, aligned at t = 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DopplerSample {
    /// Separation ΔR(t) [m].
    pub separation: f64,
    /// ΔR(t) − ΔR(0) [m].
    pub separation_change: f64,
    /// Longitudinal relative velocity d(ΔR)/dt [m/s].
    pub radial_velocity: f64,
    /// First-order Doppler redshift Δv/c.
    pub redshift: f64,
}

impl DopplerSample {
    /// Change of the light travel distance in units of `wavelength`.
    pub fn path_phase(&self, wavelength: f64) -> f64 {
        self.separation_change / wavelength
    }
}

/// Longitudinal Doppler shift between satellites on circular orbits `r1`, `r2`.
pub fn doppler_profile(r1: f64, r2: f64, t: f64, body: &BodyParams) -> Result<DopplerSample> {
    body.validate()?;
    for (name, v) in [("r1", r1), ("r2", r2), ("t", t)] {
        ensure_finite(name, v)?;
    }
    if r1 <= body.equatorial_radius || r2 <= body.equatorial_radius {
        return Err(Error::Domain("orbit radii must exceed the equatorial radius".into()));
    }
    if t < 0.0 {
        return Err(Error::Domain(format!("time must be non-negative, got {t}")));
    }
    if r1 == r2 {
        return Err(Error::DegenerateOrbit(r1));
    }
    let w1 = (body.gm / (r1 * r1 * r1)).sqrt();
    let w2 = (body.gm / (r2 * r2 * r2)).sqrt();
    let angle = (w1 - w2) * t;
    let half_sin = (0.5 * angle).sin();
    let initial = (r1 - r2).abs();
    // r1² + r2² − 2 r1 r2 cos θ = (r1 − r2)² + 4 r1 r2 sin²(θ/2)
    let excess = 4.0 * r1 * r2 * half_sin * half_sin;
    let separation = (initial * initial + excess).sqrt();
    let separation_change = excess / (separation + initial);
    let radial_velocity = r1 * r2 * (w1 - w2) * angle.sin() / separation;
    Ok(DopplerSample {
        separation,
        separation_change,
        radial_velocity,
        redshift: radial_velocity / SPEED_OF_LIGHT,
    })
}
