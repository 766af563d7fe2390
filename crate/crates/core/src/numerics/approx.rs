use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

pub const REL_TOL: f64 = 1e-9;
pub const ABS_TOL: f64 = 1e-12;

/// Floating value compared with a mixed relative/absolute tolerance.
#[derive(Clone, Copy, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Approx(pub f64);

impl Approx {
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn approx_eq_tol(self, other: Approx, rel: f64, abs: f64) -> bool {
        let (x, y) = (self.0, other.0);
        let scale = x.abs().max(y.abs());
        (x - y).abs() <= abs.max(rel * scale)
    }

    pub fn approx_eq(self, other: Approx) -> bool {
        self.approx_eq_tol(other, REL_TOL, ABS_TOL)
    }
}

impl From<&Rational> for Approx {
    fn from(r: &Rational) -> Self {
        Approx(r.to_f64())
    }
}

impl From<f64> for Approx {
    fn from(x: f64) -> Self {
        Approx(x)
    }
}

/// Square root of a nonnegative rational.
pub fn sqrt_checked(x: &Rational) -> Result<Approx> {
    if x.is_negative() {
        return Err(Error::NegativeRadicand(x.to_string()));
    }
    Ok(Approx(x.to_f64().sqrt()))
}

impl PartialEq for Approx {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(*other)
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_sig(self.0, 12))
    }
}

impl fmt::Debug for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Formats with `sig` significant digits, trimming trailing zeros.
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

impl Add for Approx {
    type Output = Approx;
    fn add(self, rhs: Approx) -> Approx {
        Approx(self.0 + rhs.0)
    }
}

impl Sub for Approx {
    type Output = Approx;
    fn sub(self, rhs: Approx) -> Approx {
        Approx(self.0 - rhs.0)
    }
}

impl Mul for Approx {
    type Output = Approx;
    fn mul(self, rhs: Approx) -> Approx {
        Approx(self.0 * rhs.0)
    }
}

impl Div for Approx {
    type Output = Approx;
    fn div(self, rhs: Approx) -> Approx {
        Approx(self.0 / rhs.0)
    }
}

impl Neg for Approx {
    type Output = Approx;
    fn neg(self) -> Approx {
        Approx(-self.0)
    }
}
