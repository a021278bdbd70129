//! Parsing of quantities with unit suffixes.
//!
//! Frequencies come back as angular frequencies in rad/s. Plain Hz-family
//! suffixes are multiplied by 2π, wavelength suffixes are converted with
//! Ω = 2πc/λ. A bare number is taken in the canonical unit (rad/s, m, s).

use std::f64::consts::TAU;

use crate::{Error, Result, SPEED_OF_LIGHT};

const FREQUENCY: &[(&str, i32)] = &[("THz", 12), ("GHz", 9), ("MHz", 6), ("kHz", 3), ("Hz", 0)];
const LENGTH: &[(&str, i32)] = &[("nm", -9), ("um", -6), ("µm", -6), ("mm", -3), ("km", 3), ("m", 0)];
const TIME: &[(&str, i32)] = &[("fs", -15), ("ps", -12), ("ns", -9), ("us", -6), ("µs", -6), ("ms", -3), ("s", 0)];

fn split(input: &str) -> (&str, &str) {
    let s = input.trim();
    let cut = s
        .char_indices()
        .find(|&(i, c)| c.is_alphabetic() && !(matches!(c, 'e' | 'E') && exponent_follows(&s[i + 1..])))
        .map_or(s.len(), |(i, _)| i);
    (s[..cut].trim(), s[cut..].trim())
}

fn exponent_follows(rest: &str) -> bool {
    let rest = rest.strip_prefix(['+', '-']).unwrap_or(rest);
    rest.starts_with(|c: char| c.is_ascii_digit())
}

fn number(text: &str, input: &str) -> Result<f64> {
    let v: f64 = text.parse().map_err(|_| Error::Usage(format!("cannot parse a number from {input:?}")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Usage(format!("{input:?} is not finite")))
    }
}

/// Scales `v` by 10^exp, dividing for negative exponents so `1310nm` is exactly `1.31e-6`.
fn scaled(v: f64, exp: i32) -> f64 {
    if exp < 0 {
        v / 10f64.powi(-exp)
    } else {
        v * 10f64.powi(exp)
    }
}

fn lookup(table: &[(&str, i32)], unit: &str, v: f64) -> Option<f64> {
    table.iter().find(|(u, _)| *u == unit).map(|&(_, e)| scaled(v, e))
}

/// Angular frequency [rad/s] from e.g. `377.1THz`, `6.28e9rad/s`, `1550nm`.
pub fn parse_frequency(input: &str) -> Result<f64> {
    let (num, unit) = split(input);
    let v = number(num, input)?;
    if unit.is_empty() || unit == "rad/s" {
        return Ok(v);
    }
    if let Some(f) = lookup(FREQUENCY, unit, v) {
        return Ok(TAU * f);
    }
    if let Some(lambda) = lookup(LENGTH, unit, v) {
        if lambda <= 0.0 {
            return Err(Error::Usage(format!("wavelength must be positive, got {input:?}")));
        }
        return Ok(TAU * SPEED_OF_LIGHT / lambda);
    }
    Err(Error::Usage(format!("unknown frequency unit {unit:?} in {input:?}")))
}

/// Length [m] from e.g. `1550nm`, `1.31um`.
pub fn parse_length(input: &str) -> Result<f64> {
    let (num, unit) = split(input);
    let v = number(num, input)?;
    if unit.is_empty() {
        return Ok(v);
    }
    lookup(LENGTH, unit, v)
        .ok_or_else(|| Error::Usage(format!("unknown length unit {unit:?} in {input:?}")))
}

/// Duration [s] from e.g. `1ps`, `0.5s`, `2e-3`.
pub fn parse_duration(input: &str) -> Result<f64> {
    let (num, unit) = split(input);
    let v = number(num, input)?;
    if unit.is_empty() {
        return Ok(v);
    }
    lookup(TIME, unit, v)
        .ok_or_else(|| Error::Usage(format!("unknown time unit {unit:?} in {input:?}")))
}
