//! The three size functionals: Orlicz modular, Luxemburg norm, Lorentz
//! quasinorm. The modular and the Lorentz norm each come in two independent
//! forms (atom sum vs distribution integral, rearrangement integral vs
//! distribution integral) that cross-check one another exactly.

use crate::error::{OlError, Result};
use crate::ext_real::ExtReal;
use crate::step_fn::StepFn;
use crate::young::YoungFn;

/// Orlicz modular `ϱ_A(f) = ∫ A(|f|) dμ` as the atom sum `Σ A(vᵢ)·wᵢ`.
pub fn orlicz_modular(a: &YoungFn, f: &StepFn) -> ExtReal {
    let mut total = ExtReal::ZERO;
    for &(v, w) in f.atoms() {
        let term = a.eval_a(ExtReal::clamped(v)) * ExtReal::clamped(w);
        total = total + term;
        if total.is_infinite() {
            return ExtReal::INFINITY;
        }
    }
    total
}

/// Both modular forms: the atom sum and the distribution-side integral
/// `∫₀^∞ f_*(t)·a(t) dt`, each computed exactly.
pub fn orlicz_modular_forms(a: &YoungFn, f: &StepFn) -> (ExtReal, ExtReal) {
    let sum_form = orlicz_modular(a, f);
    // ∫ f_* a dt over the value axis: plateaus of f_* against exact A increments
    let mut dist_form = ExtReal::ZERO;
    for (measure_above, lo, hi) in f.distribution_plateaus() {
        let inc = a.eval_a(ExtReal::clamped(hi)) + ExtReal::ZERO;
        let dec = a.eval_a(ExtReal::clamped(lo));
        let delta = if inc.is_infinite() {
            ExtReal::INFINITY
        } else {
            ExtReal::clamped(inc.as_f64() - dec.as_f64())
        };
        dist_form = dist_form + ExtReal::clamped(measure_above) * delta;
        if dist_form.is_infinite() {
            break;
        }
    }
    (sum_form, dist_form)
}

/// Luxemburg norm `inf{λ > 0 : ϱ_A(f/λ) ≤ 1}` by geometric bisection.
///
/// The starting bracket is `max value / A⁻¹(1 / total weight)`, expanded
/// geometrically; a bracket that fails to form within the iteration cap is
/// surfaced as an error instead of a wrong value.
pub fn luxemburg_norm(a: &YoungFn, f: &StepFn) -> Result<ExtReal> {
    if f.is_zero() {
        return Ok(ExtReal::ZERO);
    }
    let modular_at = |lambda: f64| -> ExtReal {
        let scaled = f.scaled(1.0 / lambda).expect("positive scaling");
        orlicz_modular(a, &scaled)
    };
    let total_weight: f64 = f.atoms().iter().map(|(_, w)| w).sum();
    let seed = {
        let denom = a.inv_a(ExtReal::clamped(total_weight).recip()).as_f64();
        if denom.is_finite() && denom > 0.0 {
            f.max_value() / denom
        } else {
            1.0
        }
    };
    let mut hi = seed.max(1e-300);
    let mut iterations = 0;
    while modular_at(hi) > ExtReal::ONE {
        hi *= 2.0;
        iterations += 1;
        if iterations > 200 {
            return Err(OlError::Bracket(
                "no upper bracket for the Luxemburg norm within 200 doublings".into(),
            ));
        }
    }
    let mut lo = hi;
    iterations = 0;
    loop {
        let next = lo / 2.0;
        if modular_at(next) > ExtReal::ONE {
            lo = next;
            break;
        }
        lo = next;
        hi = next;
        iterations += 1;
        if iterations > 200 {
            // modular stays ≤ 1 arbitrarily close to zero: the norm is zero
            return Ok(ExtReal::ZERO);
        }
        if lo < 1e-300 {
            return Ok(ExtReal::ZERO);
        }
    }
    for _ in 0..200 {
        let mid = (lo * hi).sqrt();
        if modular_at(mid) > ExtReal::ONE {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-13 * hi {
            break;
        }
    }
    // unit-ball consistency at the returned value
    debug_assert!(modular_at(hi * (1.0 + 1e-9)) <= ExtReal::ONE);
    Ok(ExtReal::clamped(hi))
}

/// Lorentz functional for `p, q ∈ (0, ∞]` in the rearrangement form, exact
/// per plateau. For `q = ∞` the supremum form; `p = ∞` with `q < ∞` is
/// rejected (only `L^∞ = L^{∞,∞}` is meaningful).
pub fn lorentz_norm(p: f64, q: f64, f: &StepFn) -> Result<ExtReal> {
    validate_exponents(p, q)?;
    if q.is_infinite() {
        if p.is_infinite() {
            return Ok(ExtReal::clamped(f.max_value()));
        }
        let mut best = 0.0f64;
        for (v, _, hi) in f.rearrangement_plateaus() {
            best = best.max(hi.powf(1.0 / p) * v);
        }
        return Ok(ExtReal::clamped(best));
    }
    // (∫ [t^(1/p) f*(t)]^q dt/t)^(1/q) with f* constant per plateau
    let mut acc = 0.0f64;
    for (v, lo, hi) in f.rearrangement_plateaus() {
        let e = q / p;
        let piece = (hi.powf(e) - lo.powf(e)) * (p / q);
        acc += v.powf(q) * piece;
    }
    Ok(ExtReal::clamped(acc.powf(1.0 / q)))
}

/// Rearrangement form and distribution form
/// `(p ∫₀^∞ f_*(λ)^(q/p) λ^(q−1) dλ)^(1/q)` side by side, both exact.
pub fn lorentz_norm_forms(p: f64, q: f64, f: &StepFn) -> Result<(ExtReal, ExtReal)> {
    validate_exponents(p, q)?;
    if q.is_infinite() {
        let v = lorentz_norm(p, q, f)?;
        return Ok((v, v));
    }
    let rearr = lorentz_norm(p, q, f)?;
    let mut acc = 0.0f64;
    for (measure_above, lo, hi) in f.distribution_plateaus() {
        acc += measure_above.powf(q / p) * (hi.powf(q) - lo.powf(q)) / q;
    }
    let dist = ExtReal::clamped((p * acc).powf(1.0 / q));
    Ok((rearr, dist))
}

fn validate_exponents(p: f64, q: f64) -> Result<()> {
    if p.is_nan() || q.is_nan() || p <= 0.0 || q <= 0.0 {
        return Err(OlError::Parameter(format!("exponents ({p}, {q}) must be positive")));
    }
    if p.is_infinite() && q.is_finite() {
        return Err(OlError::Parameter(
            "p = ∞ with finite q requests the integral form, which does not exist".into(),
        ));
    }
    Ok(())
}
