//! Angle literals: plain radians or multiples of pi, such as `0.25pi`,
//! `pi/4`, `-pi` or `3pi/2`.

use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid angle `{0}`: expected radians or a multiple of pi such as 0.25pi or pi/4")]
pub struct AngleError(pub String);

pub fn parse_angle(text: &str) -> Result<f64, AngleError> {
    let err = || AngleError(text.to_string());
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.to_ascii_lowercase();
    let value = match s.find("pi") {
        None => s.parse::<f64>().map_err(|_| err())?,
        Some(at) => {
            let coef = match &s[..at] {
                "" | "+" => 1.0,
                "-" => -1.0,
                c => c.trim_end_matches('*').parse::<f64>().map_err(|_| err())?,
            };
            let divisor = match &s[at + 2..] {
                "" => 1.0,
                rest => {
                    let d = rest.strip_prefix('/').ok_or_else(err)?;
                    d.parse::<f64>().map_err(|_| err())?
                }
            };
            if divisor == 0.0 {
                return Err(err());
            }
            coef * PI / divisor
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(err())
    }
}

/// Comma-separated angles.
pub fn parse_angle_list(text: &str) -> Result<Vec<f64>, AngleError> {
    text.split(',').map(parse_angle).collect()
}
