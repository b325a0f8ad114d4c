use std::path::Path;

use crate::error::{Error, Result};
use crate::rational::{parse_decimal, round_significant, Rational};

pub const DEFAULT_PRECISION: u32 = 120;
pub const MIN_PRECISION: u32 = 50;

/// Working precision of the gravity estimates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// No rounding at all; every quantity is an exact rational.
    Exact,
    /// Round every intermediate result to this many significant decimal digits.
    Digits(u32),
}

/// SI constants, held as exact decimals.
#[derive(Debug, Clone, PartialEq)]
pub struct PhysicalConstants {
    /// Newton's constant, m³ kg⁻¹ s⁻².
    pub g: Rational,
    /// Reduced Planck constant, J s.
    pub hbar: Rational,
    /// Planck time, s.
    pub t_planck: Rational,
    /// Planck energy, J.
    pub e_planck: Rational,
    precision: Precision,
}

const CODATA: [(&str, &str); 4] =
    [("G", "6.67430e-11"), ("hbar", "1.054571817e-34"), ("t_P", "5.391247e-44"), ("E_P", "1.9561e9")];

impl Default for PhysicalConstants {
    fn default() -> Self {
        let value = |i: usize| parse_decimal(CODATA[i].1).expect("valid literal");
        Self {
            g: value(0),
            hbar: value(1),
            t_planck: value(2),
            e_planck: value(3),
            precision: Precision::Digits(DEFAULT_PRECISION),
        }
    }
}

impl PhysicalConstants {
    /// CODATA 2018 values at the default precision.
    pub fn codata() -> Self {
        Self::default()
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn with_precision(mut self, digits: u32) -> Result<Self> {
        if digits < MIN_PRECISION {
            return Err(Error::Constants(format!("precision {digits} is below {MIN_PRECISION} digits")));
        }
        self.precision = Precision::Digits(digits);
        Ok(self)
    }

    /// Exact rational evaluation, for checking scaling laws without rounding.
    pub fn exact(mut self) -> Self {
        self.precision = Precision::Exact;
        self
    }

    pub(crate) fn round(&self, x: Rational) -> Rational {
        match self.precision {
            Precision::Exact => x,
            Precision::Digits(d) => round_significant(&x, d),
        }
    }

    /// Reads `key = value` lines (SI units, decimal literals). Keys are
    /// `G`, `hbar`, `t_P`, `E_P` and `precision`; blank lines and `#`
    /// comments are ignored. Missing keys keep their CODATA defaults.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut constants = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Constants(format!("line {}: expected key = value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let positive = || -> Result<Rational> {
                let v = parse_decimal(value)?;
                if v <= Rational::from_integer(0.into()) {
                    return Err(Error::Constants(format!("line {}: {key} must be positive", lineno + 1)));
                }
                Ok(v)
            };
            match key {
                "G" => constants.g = positive()?,
                "hbar" => constants.hbar = positive()?,
                "t_P" => constants.t_planck = positive()?,
                "E_P" => constants.e_planck = positive()?,
                "precision" => {
                    let digits = value
                        .parse()
                        .map_err(|_| Error::Constants(format!("line {}: bad precision {value:?}", lineno + 1)))?;
                    constants = constants.with_precision(digits)?;
                }
                other => return Err(Error::Constants(format!("line {}: unknown key {other:?}", lineno + 1))),
            }
        }
        Ok(constants)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Constants(format!("{}: {e}", path.display())))?;
        Self::from_config_str(&text)
    }
}
