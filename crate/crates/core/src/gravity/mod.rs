//! Gravitational estimate of the discretisation scale `L` of a qubit.
//!
//! Equating a state-reduction time of `(L − 1)` Planck ticks with the
//! Diósi–Penrose time `ħ/E_G` gives `L = ⌈E_P/E_G⌉`, where `E_G` is the
//! gravitational self-energy of two copies of the mass separated by `b`.
//! The mass's size is the Schrödinger–Newton radius `R = ħ²/(GM³)`.
//!
//! Quantities are exact rationals rounded to the configured number of
//! significant digits after each operation; `E_G` for an electron is of
//! order `10⁻¹⁸⁴ J` with intermediates near `10⁻³⁸⁸`, far outside `f64`.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::capacity::{floor_log2, n_max};
use crate::error::{Error, Result};
use crate::rational::{ceil_int, log10, log10_int, parse_decimal, ratio, to_scientific, Rational};

mod constants;

pub use constants::{PhysicalConstants, Precision, DEFAULT_PRECISION, MIN_PRECISION};

/// Schema version of [`CapacityReport::to_json`].
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Separation ratio `β = b/2R` below which the `b ≪ R` closed form is used.
pub const SMALL_BETA: (i64, i64) = (1, 100);
/// `β` above which the `b ≫ R` closed form is used.
pub const LARGE_BETA: i64 = 100;

/// Julian year in seconds.
pub const YEAR_SECONDS: i64 = 31_557_600;

fn require_positive(x: &Rational, what: &'static str) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositive(what))
    }
}

fn pow(c: &PhysicalConstants, x: &Rational, e: i32) -> Rational {
    c.round(num_traits::pow(x.clone(), e as usize))
}

/// Schrödinger–Newton radius `R = ħ²/(G M³)`.
pub fn sn_radius(mass: &Rational, c: &PhysicalConstants) -> Result<Rational> {
    require_positive(mass, "mass")?;
    let num = pow(c, &c.hbar, 2);
    let den = c.round(&c.g * pow(c, mass, 3));
    Ok(c.round(num / den))
}

/// Self-energy of two uniform spheres of mass `M` and radius `R` displaced by `b`:
///
/// * `β ≤ 1`: `(6GM²/5R)(5β²/3 − 5β³/4 + β⁵/6)`
/// * `β ≥ 1`: `(6GM²/5R)(1 − 5/(12β))`
///
/// with `β = b/2R`. Both branches give `(6GM²/5R)·7/12` at `β = 1`.
pub fn e_g_full(mass: &Rational, radius: &Rational, separation: &Rational, c: &PhysicalConstants) -> Result<Rational> {
    require_positive(mass, "mass")?;
    require_positive(radius, "radius")?;
    require_positive(separation, "separation")?;
    let beta = c.round(separation / (Rational::from_integer(2.into()) * radius));
    let scale = c.round(c.round(ratio(6, 5) * &c.g * pow(c, mass, 2)) / radius);
    let shape = if beta <= Rational::one() {
        let b2 = pow(c, &beta, 2);
        let b3 = pow(c, &beta, 3);
        let b5 = pow(c, &beta, 5);
        c.round(ratio(5, 3) * b2 - ratio(5, 4) * b3 + ratio(1, 6) * b5)
    } else {
        c.round(Rational::one() - c.round(ratio(5, 12) / &beta))
    };
    Ok(c.round(scale * shape))
}

/// `b ≪ R` limit with `R` eliminated: `E_G = G⁴ M¹¹ b² / (2ħ⁶)`.
pub fn e_g_small_b(mass: &Rational, separation: &Rational, c: &PhysicalConstants) -> Result<Rational> {
    if mass.is_negative() {
        return Err(Error::NonPositive("mass"));
    }
    require_positive(separation, "separation")?;
    if mass.is_zero() {
        return Ok(Rational::zero());
    }
    let radius = sn_radius(mass, c)?;
    if separation * Rational::from_integer(100.into()) > radius {
        log::warn!("separation exceeds 1% of the Schrödinger–Newton radius; the b << R form is inaccurate");
    }
    let num = c.round(c.round(pow(c, &c.g, 4) * pow(c, mass, 11)) * pow(c, separation, 2));
    let den = c.round(Rational::from_integer(2.into()) * pow(c, &c.hbar, 6));
    Ok(c.round(num / den))
}

/// `b ≫ R` limit, `E_G = G² M⁵ / ħ²` (the exact asymptote carries a further factor 6/5).
pub fn e_g_large_b(mass: &Rational, c: &PhysicalConstants) -> Result<Rational> {
    require_positive(mass, "mass")?;
    let num = c.round(pow(c, &c.g, 2) * pow(c, mass, 5));
    Ok(c.round(num / pow(c, &c.hbar, 2)))
}

/// Diósi–Penrose collapse time `ħ/E_G`.
pub fn dp_time(e_g: &Rational, c: &PhysicalConstants) -> Result<Rational> {
    require_positive(e_g, "E_G")?;
    Ok(c.round(&c.hbar / e_g))
}

/// `L = ⌈E_P/E_G⌉`, at least 1.
pub fn l_from_energy(e_g: &Rational, c: &PhysicalConstants) -> Result<BigUint> {
    require_positive(e_g, "E_G")?;
    let ratio = c.round(&c.e_planck / e_g);
    let l = ceil_int(&ratio).max(BigInt::one());
    Ok(l.to_biguint().expect("positive"))
}

/// Reduction time `(L − 1)·t_P`: `L` falls by one per Planck time.
pub fn reduction_time(l: &BigUint, c: &PhysicalConstants) -> Result<Rational> {
    if l.is_zero() {
        return Err(Error::NonPositive("L"));
    }
    let ticks = Rational::from_integer(BigInt::from(l - 1u32));
    Ok(c.round(ticks * &c.t_planck))
}

/// Granularity left after time `t`: `max(1, L₀ − ⌊t/t_P⌋)`, exactly.
pub fn reduction_after(l0: &BigUint, t: &Rational, c: &PhysicalConstants) -> Result<BigUint> {
    if t.is_negative() {
        return Err(Error::NonPositive("time"));
    }
    if l0.is_zero() {
        return Err(Error::NonPositive("L"));
    }
    let ticks = (t / &c.t_planck).floor().to_integer();
    let left = BigInt::from(l0.clone()) - ticks;
    Ok(left.max(BigInt::one()).to_biguint().expect("positive"))
}

/// A mass in superposition over separation `b`; `qubit_multiplier` copies
/// of the mass are treated as one composite object.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub mass: Rational,
    pub separation: Rational,
    pub qubit_multiplier: u64,
    pub radius_override: Option<Rational>,
}

impl Scenario {
    pub fn new(mass: Rational, separation: Rational, qubit_multiplier: u64) -> Result<Self> {
        require_positive(&mass, "mass")?;
        require_positive(&separation, "separation")?;
        if qubit_multiplier == 0 {
            return Err(Error::NonPositive("qubit multiplier"));
        }
        Ok(Self { mass, separation, qubit_multiplier, radius_override: None })
    }

    /// Electron (`10⁻³⁰ kg`) over `5 nm`, the typical quantum-dot qubit.
    pub fn electron_qubit() -> Self {
        Self::new(parse_decimal("1e-30").unwrap(), parse_decimal("5e-9").unwrap(), 1).unwrap()
    }

    pub fn with_multiplier(mut self, qubit_multiplier: u64) -> Result<Self> {
        if qubit_multiplier == 0 {
            return Err(Error::NonPositive("qubit multiplier"));
        }
        self.qubit_multiplier = qubit_multiplier;
        Ok(self)
    }

    pub fn with_radius(mut self, radius: Rational) -> Result<Self> {
        require_positive(&radius, "radius")?;
        self.radius_override = Some(radius);
        Ok(self)
    }

    pub fn effective_mass(&self) -> Rational {
        &self.mass * Rational::from_integer(self.qubit_multiplier.into())
    }
}

/// Which self-energy formula produced `E_G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    SmallSeparation,
    Full,
    LargeSeparation,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::SmallSeparation => "b<<R",
            Regime::Full => "full",
            Regime::LargeSeparation => "b>>R",
        }
    }
}

/// Radius, `β`, self-energy and regime for a scenario.
fn self_energy(s: &Scenario, c: &PhysicalConstants) -> Result<(Rational, Rational, Rational, Regime)> {
    let mass = s.effective_mass();
    let radius = match &s.radius_override {
        Some(r) => r.clone(),
        None => sn_radius(&mass, c)?,
    };
    let beta = c.round(&s.separation / (Rational::from_integer(2.into()) * &radius));
    let (e_g, regime) = if s.radius_override.is_some() {
        (e_g_full(&mass, &radius, &s.separation, c)?, Regime::Full)
    } else if beta <= ratio(SMALL_BETA.0, SMALL_BETA.1) {
        (e_g_small_b(&mass, &s.separation, c)?, Regime::SmallSeparation)
    } else if beta >= ratio(LARGE_BETA, 1) {
        (e_g_large_b(&mass, c)?, Regime::LargeSeparation)
    } else {
        (e_g_full(&mass, &radius, &s.separation, c)?, Regime::Full)
    };
    Ok((radius, beta, e_g, regime))
}

/// `L(M) = ⌈E_P/E_G⌉` for the scenario's effective mass.
pub fn l_of_scenario(s: &Scenario, c: &PhysicalConstants) -> Result<BigUint> {
    let (_, _, e_g, _) = self_energy(s, c)?;
    l_from_energy(&e_g, c)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CapacityReport {
    pub scenario: Scenario,
    pub regime: Regime,
    pub radius: Rational,
    pub beta: Rational,
    pub e_g: Rational,
    /// `E_G` from the full piecewise formula, for comparison with the closed forms.
    pub e_g_full: Rational,
    pub tau_dp: Rational,
    pub tau_m: Rational,
    pub l: BigUint,
    pub log10_l: f64,
    pub log2_l: f64,
    pub n_max: u64,
    /// `⌊log₂ L⌋`, the leading-order estimate of `n_max`.
    pub n_max_log2: u64,
    /// How much `L` drops over 10⁹ years of reduction.
    pub l_decrease_per_gyr: BigUint,
}

pub fn scenario_report(s: &Scenario, c: &PhysicalConstants) -> Result<CapacityReport> {
    let (radius, beta, e_g, regime) = self_energy(s, c)?;
    let e_g_full = e_g_full(&s.effective_mass(), &radius, &s.separation, c)?;
    let l = l_from_energy(&e_g, c)?;
    let gyr = Rational::from_integer(BigInt::from(YEAR_SECONDS) * BigInt::from(1_000_000_000u64));
    let remaining = reduction_after(&l, &gyr, c)?;
    let log10_l = log10_int(&l);
    Ok(CapacityReport {
        scenario: s.clone(),
        regime,
        radius,
        beta,
        tau_dp: dp_time(&e_g, c)?,
        tau_m: reduction_time(&l, c)?,
        e_g,
        e_g_full,
        log10_l,
        log2_l: log10_l / std::f64::consts::LOG10_2,
        n_max: n_max(&l),
        n_max_log2: floor_log2(&l),
        l_decrease_per_gyr: &l - remaining,
        l,
    })
}

/// `log₁₀|x|`, or `-inf` for zero.
pub fn log10_or_neg_inf(x: &Rational) -> f64 {
    if x.is_zero() {
        f64::NEG_INFINITY
    } else {
        log10(x)
    }
}

impl CapacityReport {
    /// JSON document with quantities as scientific strings (`digits`
    /// significant digits) plus base-10 logarithms, and `L` in full.
    pub fn to_json(&self, digits: u32) -> serde_json::Value {
        let sci = |x: &Rational| to_scientific(x, digits);
        let log = |x: &Rational| log10_or_neg_inf(x);
        json!({
            "schema_version": REPORT_SCHEMA_VERSION,
            "command": "capacity",
            "mass_kg": sci(&self.scenario.mass),
            "separation_m": sci(&self.scenario.separation),
            "qubit_multiplier": self.scenario.qubit_multiplier,
            "effective_mass_kg": sci(&self.scenario.effective_mass()),
            "regime": self.regime.as_str(),
            "R_m": sci(&self.radius),
            "beta": sci(&self.beta),
            "E_G_J": sci(&self.e_g),
            "log10_E_G": log(&self.e_g),
            "E_G_full_J": sci(&self.e_g_full),
            "tau_DP_s": sci(&self.tau_dp),
            "log10_tau_DP": log(&self.tau_dp),
            "tau_M_s": sci(&self.tau_m),
            "L": self.l.to_str_radix(10),
            "log10_L": self.log10_l,
            "log2_L": self.log2_l,
            "n_max": self.n_max,
            "n_max_log2_estimate": self.n_max_log2,
            "L_decrease_per_1e9_years": self.l_decrease_per_gyr.to_str_radix(10),
        })
    }

    pub fn to_text(&self, digits: u32) -> String {
        let sci = |x: &Rational| to_scientific(x, digits);
        let decrease = Rational::from_integer(BigInt::from_biguint(Sign::Plus, self.l_decrease_per_gyr.clone()));
        [
            format!("mass            {} kg (x{})", sci(&self.scenario.mass), self.scenario.qubit_multiplier),
            format!("separation      {} m", sci(&self.scenario.separation)),
            format!("regime          {}", self.regime.as_str()),
            format!("R               {} m", sci(&self.radius)),
            format!("beta            {}", sci(&self.beta)),
            format!("E_G             {} J", sci(&self.e_g)),
            format!("E_G (full)      {} J", sci(&self.e_g_full)),
            format!("tau_DP          {} s", sci(&self.tau_dp)),
            format!("tau_M           {} s", sci(&self.tau_m)),
            format!("L               ~1e{:.3} ~2^{:.2}", self.log10_l, self.log2_l),
            format!("n_max           {} (floor log2 L = {})", self.n_max, self.n_max_log2),
            format!("L drop / 1e9 yr {}", if decrease.is_zero() { "0".into() } else { sci(&decrease) }),
        ]
        .join("\n")
    }
}
