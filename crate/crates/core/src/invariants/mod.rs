//! Alexander polynomials of braid closures and the coefficient criteria for
//! positive braid knots.

pub mod burau;
pub mod laurent;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

pub use burau::BurauMatrix;
pub use laurent::LaurentPoly;

use crate::braid::{closure_components, BraidWord};
use crate::error::{BraidError, Result};
use crate::satellite::{build_satellite, SatelliteSpec};

fn require_knot(w: &BraidWord) -> Result<()> {
    if closure_components(w).len() != 1 {
        return Err(BraidError::precondition(format!("closure of {w} is not a knot")));
    }
    Ok(())
}

/// Symmetric Alexander polynomial with value 1 at `t = 1`.
pub fn alexander(w: &BraidWord) -> Result<LaurentPoly> {
    require_knot(w)?;
    let n = w.strands() as i64;
    let det = BurauMatrix::of_word(w).identity_minus().determinant();
    // det(I - ρ(w)) = (1 + t + ⋯ + t^{n-1}) Δ(t) up to units
    let one_minus_t = LaurentPoly::from_terms([(0, 1), (1, -1)]);
    let one_minus_tn = LaurentPoly::from_terms([(0, 1), (n, -1)]);
    let raw = (&det * &one_minus_t)
        .div_exact(&one_minus_tn)
        .ok_or_else(|| BraidError::internal("Burau determinant not divisible by (1-t^n)/(1-t)"))?;
    normalize(&raw)
}

/// Centers the support, fixes the sign so the value at 1 is +1, checks symmetry.
fn normalize(p: &LaurentPoly) -> Result<LaurentPoly> {
    let (lo, hi) = match (p.min_degree(), p.max_degree()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(BraidError::internal("Alexander polynomial vanished for a knot")),
    };
    if (lo + hi) % 2 != 0 {
        return Err(BraidError::internal(format!("support of {p} cannot be centered")));
    }
    let centered = p.shift(-(lo + hi) / 2);
    let at_one = centered.evaluate_at_one();
    let out = if at_one == BigInt::one() {
        centered
    } else if at_one == -BigInt::one() {
        -&centered
    } else {
        return Err(BraidError::internal(format!("{p} evaluates to {at_one} at t = 1")));
    };
    if out.reflect() != out {
        return Err(BraidError::internal(format!("{out} is not symmetric")));
    }
    Ok(out)
}

fn degree(p: &LaurentPoly) -> i64 {
    p.max_degree().unwrap_or(0)
}

fn small(c: &BigInt) -> Result<i64> {
    c.to_i64().ok_or_else(|| BraidError::internal(format!("coefficient {c} out of range")))
}

fn require_positive_knot(w: &BraidWord) -> Result<()> {
    if !w.is_positive() {
        return Err(BraidError::NotPositive);
    }
    require_knot(w)
}

/// `(letters - n + 1)/2`, cross-checked against the Alexander degree.
pub fn genus_positive_braid(w: &BraidWord) -> Result<i64> {
    require_positive_knot(w)?;
    let g = (w.len() as i64 - w.strands() as i64 + 1) / 2;
    let d = degree(&alexander(w)?);
    if d != g {
        return Err(BraidError::internal(format!(
            "genus {g} from the word but Alexander degree {d} for {w}"
        )));
    }
    Ok(g)
}

/// `-a_{g-1}` of the Alexander polynomial, after checking `a_g = 1`.
pub fn prime_factor_count(w: &BraidWord) -> Result<i64> {
    let g = genus_positive_braid(w)?;
    if g == 0 {
        return Ok(0);
    }
    let delta = alexander(w)?;
    if delta.coefficient(g) != BigInt::one() {
        return Err(BraidError::internal(format!("leading coefficient of {delta} is not 1")));
    }
    small(&-delta.coefficient(g - 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatelliteAlexander {
    pub satellite: LaurentPoly,
    pub companion: LaurentPoly,
    pub pattern: LaurentPoly,
    pub winding: usize,
    /// `Δ_C(t^n) · Δ_P(t)`.
    pub predicted: LaurentPoly,
    pub holds: bool,
}

/// Both sides of the satellite formula for a knot companion with one pattern.
pub fn satellite_alexander_check(s: &SatelliteSpec) -> Result<SatelliteAlexander> {
    let [pattern] = s.patterns() else {
        return Err(BraidError::precondition("companion closure must be a knot"));
    };
    require_knot(pattern)?;
    let (rendered, _) = build_satellite(s)?;
    let satellite = alexander(&rendered)?;
    let companion = alexander(s.companion())?;
    let pattern_poly = alexander(pattern)?;
    let winding = pattern.strands();
    let predicted = &companion.substitute(winding as i64) * &pattern_poly;
    Ok(SatelliteAlexander {
        holds: predicted == satellite,
        satellite,
        companion,
        pattern: pattern_poly,
        winding,
        predicted,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnknotCompanionVerdict {
    pub winding: usize,
    pub companion_degree: i64,
    pub pattern_genus: i64,
    pub pattern_prime_factors: i64,
    pub satellite_degree: i64,
    /// `n · deg Δ_C + g(P)`.
    pub expected_degree: i64,
    /// `a_{g-1}` of the satellite polynomial.
    pub satellite_subleading: i64,
    /// For winding `n ≥ 2` over a companion of positive degree, `a_{g-1}`
    /// comes from the pattern alone and equals `-p(P)`.
    pub subleading_from_pattern: bool,
    /// A prime positive braid knot needs `a_{g-1} = -1`, which `-p(P)` is not.
    pub positive_braid_knot_possible: bool,
}

/// Coefficient test ruling out positive braid satellites over nontrivial companions.
pub fn unknot_companion_verdict(s: &SatelliteSpec) -> Result<UnknotCompanionVerdict> {
    let [pattern] = s.patterns() else {
        return Err(BraidError::precondition("companion closure must be a knot"));
    };
    let pattern_genus = genus_positive_braid(pattern)?;
    let pattern_prime_factors = prime_factor_count(pattern)?;
    if pattern_prime_factors == 1 {
        return Err(BraidError::precondition("pattern closure must not be prime (p = 1)"));
    }
    let (rendered, _) = build_satellite(s)?;
    let satellite = alexander(&rendered)?;
    let companion_degree = degree(&alexander(s.companion())?);
    let winding = pattern.strands();
    let satellite_degree = degree(&satellite);
    let satellite_subleading = small(&satellite.coefficient(satellite_degree - 1))?;
    let expected_degree = winding as i64 * companion_degree + pattern_genus;
    if satellite_degree != expected_degree {
        return Err(BraidError::internal(format!(
            "satellite degree {satellite_degree}, expected {expected_degree}"
        )));
    }
    let forced = winding >= 2 && companion_degree >= 1;
    Ok(UnknotCompanionVerdict {
        winding,
        companion_degree,
        pattern_genus,
        pattern_prime_factors,
        satellite_degree,
        expected_degree,
        satellite_subleading,
        subleading_from_pattern: !forced || satellite_subleading == -pattern_prime_factors,
        positive_braid_knot_possible: !forced,
    })
}
