//! Closed-form segment algebra for monotone pieces.
//!
//! The segment kinds form a family closed under inversion: shifted powers
//! invert to shifted powers, exponentials to logarithms, and the power-log
//! kinds invert to a bracketed root-finding wrapper whose own inverse is the
//! original segment again. Each kind also knows its exact antiderivative
//! where one exists in closed form.

use crate::error::{OlError, Result};
use crate::quadrature;

/// Euler's number used as the log shift in `t^e · ln(e + t)^α`.
pub const LOG_SHIFT: f64 = std::f64::consts::E;

#[derive(Clone, Debug, PartialEq)]
pub enum Segment {
    /// Constant value; `f64::INFINITY` is allowed.
    Const(f64),
    /// `coeff · (t − x0)^exp + y0`.
    Power { coeff: f64, x0: f64, exp: f64, y0: f64 },
    /// `coeff · t^exp · ln(e + t)^alpha`.
    PowerLog { coeff: f64, exp: f64, alpha: f64 },
    /// Derivative of `coeff · t^rho · ln(e + t)^alpha`; its antiderivative is
    /// therefore exact.
    PowerLogDeriv { coeff: f64, rho: f64, alpha: f64 },
    /// `coeff · e^(rate · t)`.
    Exp { coeff: f64, rate: f64 },
    /// `scale · ln t + shift`, valid for `t > 0`.
    Log { scale: f64, shift: f64 },
    /// Value `x` solving `base(x) = t`, with `x` confined to `[lo, hi]`
    /// where `base` is strictly monotone. Evaluated by bisection.
    InverseOf { base: Box<Segment>, lo: f64, hi: f64 },
}

impl Segment {
    /// Point evaluation. May return `f64::INFINITY`, never NaN for arguments
    /// inside the piece this segment was validated on.
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            Segment::Const(v) => *v,
            Segment::Power { coeff, x0, exp, y0 } => {
                let u = t - x0;
                let u = if u < 0.0 { 0.0 } else { u };
                let p = if *exp == 0.0 {
                    1.0
                } else if u == 0.0 {
                    if *exp > 0.0 {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                } else {
                    u.powf(*exp)
                };
                let v = coeff * p + y0;
                if v.is_nan() {
                    // inf - finite or inf * 0 edge: dominated by the power term
                    if p.is_infinite() && *coeff > 0.0 {
                        f64::INFINITY
                    } else {
                        *y0
                    }
                } else {
                    v
                }
            }
            Segment::PowerLog { coeff, exp, alpha } => {
                let l = (LOG_SHIFT + t).ln();
                let p = if *exp == 0.0 {
                    1.0
                } else if t == 0.0 {
                    if *exp > 0.0 {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                } else {
                    t.powf(*exp)
                };
                coeff * p * l.powf(*alpha)
            }
            Segment::PowerLogDeriv { coeff, rho, alpha } => {
                let l = (LOG_SHIFT + t).ln();
                let first = if *rho == 1.0 {
                    l.powf(*alpha)
                } else if t == 0.0 {
                    if *rho > 1.0 {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                } else {
                    rho * t.powf(rho - 1.0) * l.powf(*alpha)
                };
                let second = if *alpha == 0.0 || t == 0.0 {
                    0.0
                } else {
                    alpha * t.powf(*rho) * l.powf(alpha - 1.0) / (LOG_SHIFT + t)
                };
                coeff * (first + second)
            }
            Segment::Exp { coeff, rate } => coeff * (rate * t).exp(),
            Segment::Log { scale, shift } => {
                if t <= 0.0 {
                    // validated pieces keep t > 0; guard the boundary
                    if *scale >= 0.0 {
                        f64::NEG_INFINITY.max(*shift - 1e308)
                    } else {
                        f64::INFINITY
                    }
                } else {
                    scale * t.ln() + shift
                }
            }
            Segment::InverseOf { base, lo, hi } => {
                invert_by_bisection(base, t, *lo, *hi)
            }
        }
    }

    /// Exact antiderivative over `[lo, hi]` where the kind admits one;
    /// adaptive quadrature otherwise. `hi` may be infinite.
    pub fn integral(&self, lo: f64, hi: f64) -> f64 {
        debug_assert!(lo <= hi);
        if lo == hi {
            return 0.0;
        }
        match self {
            Segment::Const(v) => {
                if *v == 0.0 {
                    0.0
                } else if hi.is_infinite() {
                    f64::INFINITY
                } else {
                    v * (hi - lo)
                }
            }
            Segment::Power { coeff, x0, exp, y0 } => {
                let head = if *coeff == 0.0 {
                    0.0
                } else if *exp == -1.0 {
                    if hi.is_infinite() {
                        f64::INFINITY * coeff.signum()
                    } else {
                        coeff * ((hi - x0) / (lo - x0)).ln()
                    }
                } else {
                    let e1 = exp + 1.0;
                    let at = |t: f64| -> f64 {
                        if t.is_infinite() {
                            if e1 > 0.0 {
                                f64::INFINITY
                            } else {
                                0.0
                            }
                        } else {
                            let u = (t - x0).max(0.0);
                            if u == 0.0 && e1 < 0.0 {
                                f64::INFINITY
                            } else {
                                u.powf(e1)
                            }
                        }
                    };
                    coeff / e1 * (at(hi) - at(lo))
                };
                let tail = if *y0 == 0.0 {
                    0.0
                } else if hi.is_infinite() {
                    f64::INFINITY * y0.signum()
                } else {
                    y0 * (hi - lo)
                };
                head + tail
            }
            Segment::PowerLogDeriv { coeff, rho, alpha } => {
                let anti = |t: f64| -> f64 {
                    if t.is_infinite() {
                        f64::INFINITY
                    } else if t == 0.0 {
                        0.0
                    } else {
                        coeff * t.powf(*rho) * (LOG_SHIFT + t).ln().powf(*alpha)
                    }
                };
                anti(hi) - anti(lo)
            }
            Segment::Exp { coeff, rate } => {
                let anti = |t: f64| -> f64 {
                    if t.is_infinite() {
                        if *rate > 0.0 {
                            f64::INFINITY
                        } else {
                            0.0
                        }
                    } else {
                        coeff / rate * (rate * t).exp()
                    }
                };
                anti(hi) - anti(lo)
            }
            Segment::Log { scale, shift } => {
                if hi.is_infinite() {
                    return f64::INFINITY;
                }
                let anti = |t: f64| -> f64 {
                    if t == 0.0 {
                        0.0
                    } else {
                        scale * (t * t.ln() - t) + shift * t
                    }
                };
                anti(hi) - anti(lo)
            }
            Segment::PowerLog { .. } | Segment::InverseOf { .. } => {
                if hi.is_infinite() {
                    // dominated-tail kinds never reach here in practice
                    let probe = self.eval(lo.max(1.0) * 1e6);
                    if probe > 0.0 {
                        return f64::INFINITY;
                    }
                    return quadrature::integrate_to_infinity(&|t| self.eval(t), lo.max(1e-300))
                        .value();
                }
                quadrature::integrate(&|t| self.eval(t), lo, hi, 1e-11)
            }
        }
    }

    /// Closed-form inverse where available; otherwise a bracketed
    /// root-finding wrapper over `[lo, hi]` (the domain of this segment's
    /// strictly monotone restriction).
    pub fn inverse(&self, lo: f64, hi: f64) -> Result<Segment> {
        match self {
            Segment::Const(_) => Err(OlError::NotInvertible(
                "constant segments have no pointwise inverse".into(),
            )),
            Segment::Power { coeff, x0, exp, y0 } => {
                if *coeff == 0.0 || *exp == 0.0 {
                    return Err(OlError::NotInvertible("degenerate power segment".into()));
                }
                Ok(Segment::Power {
                    coeff: coeff.abs().powf(-1.0 / exp) * if *coeff < 0.0 { 1.0 } else { 1.0 },
                    x0: *y0,
                    exp: 1.0 / exp,
                    y0: *x0,
                })
            }
            Segment::Exp { coeff, rate } => Ok(Segment::Log {
                scale: 1.0 / rate,
                shift: -coeff.ln() / rate,
            }),
            Segment::Log { scale, shift } => Ok(Segment::Exp {
                coeff: (-shift / scale).exp(),
                rate: 1.0 / scale,
            }),
            Segment::InverseOf { base, .. } => Ok((**base).clone()),
            Segment::PowerLog { .. } | Segment::PowerLogDeriv { .. } => Ok(Segment::InverseOf {
                base: Box::new(self.clone()),
                lo,
                hi,
            }),
        }
    }

    /// Limit of the segment as `t → ∞`.
    pub fn limit_at_infinity(&self) -> f64 {
        match self {
            Segment::Const(v) => *v,
            Segment::Power { coeff, exp, y0, .. } => {
                if *coeff == 0.0 || *exp == 0.0 {
                    coeff * if *exp == 0.0 { 1.0 } else { 0.0 } + y0
                } else if *exp > 0.0 {
                    if *coeff > 0.0 {
                        f64::INFINITY
                    } else {
                        f64::NEG_INFINITY
                    }
                } else {
                    *y0
                }
            }
            Segment::PowerLog { coeff, exp, alpha } => {
                if *exp > 0.0 || (*exp == 0.0 && *alpha > 0.0) {
                    coeff.signum() * f64::INFINITY
                } else if *exp == 0.0 && *alpha == 0.0 {
                    *coeff
                } else {
                    0.0
                }
            }
            Segment::PowerLogDeriv { rho, alpha, coeff } => {
                if *rho > 1.0 || (*rho == 1.0 && *alpha >= 0.0) {
                    if *rho == 1.0 && *alpha == 0.0 {
                        *coeff
                    } else {
                        coeff.signum() * f64::INFINITY
                    }
                } else {
                    0.0
                }
            }
            Segment::Exp { coeff, rate } => {
                if *rate > 0.0 {
                    coeff.signum() * f64::INFINITY
                } else {
                    0.0
                }
            }
            Segment::Log { scale, shift } => {
                if *scale > 0.0 {
                    f64::INFINITY
                } else if *scale < 0.0 {
                    f64::NEG_INFINITY
                } else {
                    *shift
                }
            }
            Segment::InverseOf { base, lo, hi } => {
                // base(x) -> t as t -> sup of base's range; the inverse tends
                // to hi (or lo when base decreases)
                let a = base.eval(*lo);
                let b = if hi.is_infinite() {
                    base.limit_at_infinity()
                } else {
                    base.eval(*hi)
                };
                if b >= a {
                    *hi
                } else {
                    *lo
                }
            }
        }
    }
}

/// Solve `base(x) = target` for `x ∈ [lo, hi]` by bisection; `hi` may be
/// infinite, in which case the bracket expands geometrically first. The
/// segment is strictly monotone on the bracket by construction.
fn invert_by_bisection(base: &Segment, target: f64, lo: f64, hi: f64) -> f64 {
    let increasing = {
        let probe_hi = if hi.is_infinite() { lo.max(1.0) * 4.0 } else { hi };
        base.eval(probe_hi) >= base.eval(lo)
    };
    let mut a = lo;
    let mut b = if hi.is_infinite() {
        let mut b = lo.max(1.0);
        let mut guard = 0;
        while base.eval(b) < target && guard < 4200 {
            b *= 2.0;
            guard += 1;
        }
        b
    } else {
        hi
    };
    if target.is_infinite() {
        return if increasing { b } else { a };
    }
    // clamp targets outside the attained range
    let (va, vb) = (base.eval(a), base.eval(b));
    if increasing {
        if target <= va {
            return a;
        }
        if target >= vb {
            return b;
        }
    } else {
        if target >= va {
            return a;
        }
        if target <= vb {
            return b;
        }
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let vm = base.eval(m);
        let go_right = if increasing { vm < target } else { vm > target };
        if go_right {
            a = m;
        } else {
            b = m;
        }
        if (b - a) <= f64::EPSILON * b.abs() {
            break;
        }
    }
    0.5 * (a + b)
}
