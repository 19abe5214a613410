//! Young functions: construction, evaluation, conjugation, and asymptotic
//! description.
//!
//! A Young function is stored through its right-continuous derivative `a`;
//! `A(t) = ∫₀ᵗ a` is recovered by exact per-segment integration. The
//! conjugate is stored through the left-continuous inverse `a⁻¹` and
//! evaluated through the pointwise identity `Ã(t) = t·a⁻¹(t) − A(a⁻¹(t))`,
//! which avoids integrating root-finding wrappers.

use crate::error::{OlError, Result};
use crate::ext_real::ExtReal;
use crate::monotone::{Continuity, Direction, MonotoneFn, Piece};
use crate::segment::Segment;

/// Power-log growth descriptor: `A(t) ≍ t^rho · ln(e + t)^alpha` as `t → ∞`,
/// trusted within a sanity window checked at construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Asymptotic {
    pub rho: f64,
    pub alpha: f64,
}

#[derive(Clone, Debug)]
enum EvalForm {
    /// Integrate the derivative; `cum[i]` caches `A(pieces[i].start)`.
    Direct { cum: Vec<f64> },
    /// This function is the conjugate of `primal`.
    Conjugate { primal: Box<YoungFn> },
}

#[derive(Clone, Debug)]
pub struct YoungFn {
    derivative: MonotoneFn,
    eval_form: EvalForm,
    asymptotic: Option<Asymptotic>,
}

/// Stock family constructors probing the embedding criteria.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    /// `A(t) = t^r`, `r ≥ 1`.
    Power { r: f64 },
    /// `A(t) = t^rho · ln(e + t)^alpha` exactly; `rho ≥ 1`, and `alpha ≥ 0`
    /// when `rho = 1`.
    PowerLog { rho: f64, alpha: f64 },
    /// `A(t) = e^t − 1`.
    ExpMinusOne,
    /// `A = 0` on `[0, t0]`, `∞` beyond: the essential-sup space.
    CapAt { t0: f64 },
    /// Right-continuous step derivative through the given `(t, a(t))` points.
    Piecewise { derivative_points: Vec<(f64, f64)> },
}

impl YoungFn {
    /// Builds a Young function from its right-continuous derivative.
    pub fn from_derivative(derivative: MonotoneFn, asymptotic: Option<Asymptotic>) -> Result<Self> {
        if derivative.direction() != Direction::NonDecreasing {
            return Err(OlError::Invalid(
                "a Young function derivative must be non-decreasing".into(),
            ));
        }
        // A(∞) = ∞ requires the derivative to be eventually positive or to
        // jump to infinity
        let tail_positive = derivative.infinite_from().is_some()
            || derivative.value_at_infinity() > ExtReal::ZERO
            || derivative.eval_f64(1e12) > 0.0;
        if !tail_positive {
            return Err(OlError::Invalid(
                "derivative vanishes identically; the function cannot reach infinity".into(),
            ));
        }
        let mut cum = Vec::with_capacity(derivative.pieces().len());
        let mut acc = 0.0;
        for (i, p) in derivative.pieces().iter().enumerate() {
            cum.push(acc);
            let end = if i + 1 < derivative.pieces().len() {
                derivative.pieces()[i + 1].start
            } else {
                f64::NAN // unused
            };
            if end.is_finite() {
                acc += p.seg.integral(p.start, end);
            }
        }
        let f = YoungFn {
            derivative,
            eval_form: EvalForm::Direct { cum },
            asymptotic,
        };
        if let Some(asy) = f.asymptotic {
            f.check_asymptotic_window(asy)?;
        }
        Ok(f)
    }

    /// `A(t) = ∫₀ᵗ a(s) ds`, exact per segment; `∞` beyond the jump point.
    pub fn eval_a(&self, t: ExtReal) -> ExtReal {
        if t.is_infinite() {
            return ExtReal::INFINITY;
        }
        let tf = t.as_f64();
        if tf == 0.0 {
            return ExtReal::ZERO;
        }
        match &self.eval_form {
            EvalForm::Direct { cum } => {
                if let Some(t0) = self.derivative.infinite_from() {
                    if tf > t0 {
                        return ExtReal::INFINITY;
                    }
                }
                let pieces = self.derivative.pieces();
                let mut i = match pieces
                    .binary_search_by(|p| p.start.partial_cmp(&tf).unwrap())
                {
                    Ok(i) => i,
                    Err(0) => 0,
                    Err(i) => i - 1,
                };
                if i >= pieces.len() {
                    i = pieces.len() - 1;
                }
                let base = cum[i];
                ExtReal::clamped(base + pieces[i].seg.integral(pieces[i].start, tf))
            }
            EvalForm::Conjugate { primal } => {
                // Ã(t) = t·s − A(s) at s = a⁻¹(t)
                let s = self.derivative.eval(t);
                if s.is_infinite() {
                    return ExtReal::INFINITY;
                }
                let sf = s.as_f64();
                let inner = primal.eval_a(s).as_f64();
                ExtReal::clamped(tf * sf - inner)
            }
        }
    }

    /// The right-continuous derivative `a`.
    pub fn derivative(&self) -> &MonotoneFn {
        &self.derivative
    }

    pub fn asymptotic(&self) -> Option<Asymptotic> {
        self.asymptotic
    }

    /// The point past which `A = ∞`, when the function takes the value.
    pub fn caps_at(&self) -> Option<f64> {
        self.derivative.infinite_from()
    }

    /// Young conjugate: the function whose derivative is the left-continuous
    /// inverse of `a`. Conjugating twice recovers the original.
    pub fn conjugate(&self) -> Result<YoungFn> {
        let inv = self.derivative.invert_nondecreasing()?;
        let asymptotic = self.asymptotic.and_then(|a| {
            if a.rho > 1.0 {
                Some(Asymptotic {
                    rho: a.rho / (a.rho - 1.0),
                    alpha: -a.alpha / (a.rho - 1.0),
                })
            } else {
                None
            }
        });
        Ok(YoungFn {
            derivative: inv,
            eval_form: EvalForm::Conjugate { primal: Box::new(self.clone()) },
            asymptotic,
        })
    }

    /// `ln A(t)` computed so that it stays finite even where `A(t)` itself
    /// overflows an `f64`; `+∞` only past a genuine jump.
    pub fn ln_eval_a(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return f64::NEG_INFINITY;
        }
        let v = self.eval_a(ExtReal::clamped(t)).as_f64();
        if v.is_finite() {
            return if v > 0.0 { v.ln() } else { f64::NEG_INFINITY };
        }
        if let Some(t0) = self.caps_at() {
            if t > t0 {
                return f64::INFINITY;
            }
        }
        // overflow: the last segment's antiderivative dominates
        match &self.eval_form {
            EvalForm::Direct { .. } => {
                let last = self.derivative.pieces().last().unwrap();
                ln_antiderivative_tail(&last.seg, t)
            }
            EvalForm::Conjugate { .. } => f64::INFINITY,
        }
    }

    /// Left-continuous inverse `A⁻¹(y) = inf{τ : A(τ) ≥ y}` by guarded
    /// bisection on the exact evaluation.
    pub fn inv_a(&self, y: ExtReal) -> ExtReal {
        if y.is_zero() {
            return ExtReal::ZERO;
        }
        if y.is_infinite() {
            return match self.caps_at() {
                Some(t0) => ExtReal::clamped(t0),
                None => ExtReal::INFINITY,
            };
        }
        let yf = y.as_f64();
        if let Some(t0) = self.caps_at() {
            let at_cap = self.eval_a(ExtReal::clamped(t0));
            if at_cap.as_f64() < yf {
                return ExtReal::clamped(t0);
            }
        }
        let mut hi = 1.0f64;
        let mut guard = 0;
        while self.eval_a(ExtReal::clamped(hi)).as_f64() < yf && guard < 1100 {
            hi *= 2.0;
            guard += 1;
        }
        let mut lo = 0.0f64;
        for _ in 0..200 {
            let m = 0.5 * (lo + hi);
            if m <= lo || m >= hi {
                break;
            }
            if self.eval_a(ExtReal::clamped(m)).as_f64() >= yf {
                hi = m;
            } else {
                lo = m;
            }
            if hi - lo <= f64::EPSILON * hi {
                break;
            }
        }
        ExtReal::clamped(hi)
    }

    /// Replaces the derivative on `[0, 1)` by the constant `A(1)`, making the
    /// function linear near zero while leaving it unchanged on `[1, ∞)`. The
    /// near-zero criterion integral then converges for every admissible
    /// exponent pair, and on a finite measure space the induced Orlicz space
    /// is unchanged up to norm equivalence.
    pub fn modify_near_zero(&self) -> Result<YoungFn> {
        let a1 = self.eval_a(ExtReal::ONE).as_f64();
        if !(a1 > 0.0) || !a1.is_finite() {
            return Err(OlError::Refused(
                "function is degenerate at 1; nothing to match near zero".into(),
            ));
        }
        // already linear on [0, 1)?
        let first = &self.derivative.pieces()[0];
        if let Segment::Const(c) = first.seg {
            let covers_unit = self
                .derivative
                .pieces()
                .get(1)
                .map_or(true, |p| p.start >= 1.0);
            if covers_unit && (c - a1).abs() <= 1e-12 * a1 {
                return Ok(self.clone());
            }
        }
        let mut pieces = vec![Piece { start: 0.0, seg: Segment::Const(a1) }];
        for (i, p) in self.derivative.pieces().iter().enumerate() {
            let end = self
                .derivative
                .pieces()
                .get(i + 1)
                .map(|n| n.start)
                .unwrap_or(f64::INFINITY);
            if end <= 1.0 {
                continue;
            }
            let start = p.start.max(1.0);
            pieces.push(Piece { start, seg: p.seg.clone() });
        }
        let derivative = MonotoneFn::new(
            Direction::NonDecreasing,
            Continuity::Right,
            pieces,
            self.derivative.infinite_from(),
            self.derivative.value_at_infinity(),
        )?;
        YoungFn::from_derivative(derivative, self.asymptotic)
    }

    fn check_asymptotic_window(&self, asy: Asymptotic) -> Result<()> {
        let mut worst: f64 = 1.0;
        let mut t = 1e2f64;
        while t <= 1e12 {
            let model = t.powf(asy.rho) * (crate::segment::LOG_SHIFT + t).ln().powf(asy.alpha);
            let actual = self.eval_a(ExtReal::clamped(t)).as_f64();
            if !actual.is_finite() || actual <= 0.0 {
                return Err(OlError::Invalid(
                    "asymptotic descriptor contradicts an infinite or zero value".into(),
                ));
            }
            let ratio = actual / model;
            worst = worst.max(ratio.max(1.0 / ratio));
            t *= 100.0;
        }
        if worst > 1e3 {
            return Err(OlError::Invalid(format!(
                "asymptotic descriptor off by {worst:.1}x in the sanity window"
            )));
        }
        Ok(())
    }
}

/// Builds one of the stock families, populating the asymptotic descriptor
/// where it is known in closed form.
pub fn make_family(spec: FamilySpec) -> Result<YoungFn> {
    match spec {
        FamilySpec::Power { r } => {
            if !(r >= 1.0) || !r.is_finite() {
                return Err(OlError::Parameter(format!("power exponent {r} must be >= 1")));
            }
            let seg = if r == 1.0 {
                Segment::Const(1.0)
            } else {
                Segment::Power { coeff: r, x0: 0.0, exp: r - 1.0, y0: 0.0 }
            };
            let derivative = MonotoneFn::single(Direction::NonDecreasing, seg)?;
            YoungFn::from_derivative(derivative, Some(Asymptotic { rho: r, alpha: 0.0 }))
        }
        FamilySpec::PowerLog { rho, alpha } => {
            if !(rho >= 1.0) || !rho.is_finite() || !alpha.is_finite() {
                return Err(OlError::Parameter(format!(
                    "power-log exponents ({rho}, {alpha}) out of range"
                )));
            }
            if rho == 1.0 && alpha < 0.0 {
                return Err(OlError::Parameter(
                    "rho = 1 requires a non-negative log exponent for convexity".into(),
                ));
            }
            let seg = Segment::PowerLogDeriv { coeff: 1.0, rho, alpha };
            let derivative = MonotoneFn::single(Direction::NonDecreasing, seg)
                .map_err(|_| OlError::Parameter(format!(
                    "derivative of t^{rho} ln^{alpha}(e+t) is not monotone"
                )))?;
            YoungFn::from_derivative(derivative, Some(Asymptotic { rho, alpha }))
        }
        FamilySpec::ExpMinusOne => {
            let derivative =
                MonotoneFn::single(Direction::NonDecreasing, Segment::Exp { coeff: 1.0, rate: 1.0 })?;
            YoungFn::from_derivative(derivative, None)
        }
        FamilySpec::CapAt { t0 } => {
            if !(t0 > 0.0) || !t0.is_finite() {
                return Err(OlError::Parameter(format!("cap point {t0} must be positive")));
            }
            let derivative = MonotoneFn::new(
                Direction::NonDecreasing,
                Continuity::Right,
                vec![Piece { start: 0.0, seg: Segment::Const(0.0) }],
                Some(t0),
                ExtReal::INFINITY,
            )?;
            YoungFn::from_derivative(derivative, None)
        }
        FamilySpec::Piecewise { derivative_points } => {
            if derivative_points.is_empty() {
                return Err(OlError::Parameter("empty piecewise derivative".into()));
            }
            let mut pts = derivative_points;
            if pts[0].0 != 0.0 {
                // extend the first slope down to zero
                let v0 = pts[0].1;
                pts.insert(0, (0.0, v0));
            }
            let breaks: Vec<f64> = pts.iter().map(|p| p.0).collect();
            let values: Vec<f64> = pts.iter().map(|p| p.1).collect();
            let derivative =
                MonotoneFn::step_from_breaks(Direction::NonDecreasing, &breaks, &values)?;
            YoungFn::from_derivative(derivative, None)
        }
    }
}

/// Parses the Young-function DSL:
/// `pow:r=<f>`, `powlog:rho=<f>,alpha=<f>`, `cap:t0=<f>`, `exp`,
/// `piecewise:[(t,a),(t,a),...]`.
pub fn parse_young_dsl(s: &str) -> Result<FamilySpec> {
    let s = s.trim();
    let (head, rest) = match s.split_once(':') {
        Some((h, r)) => (h, r),
        None => (s, ""),
    };
    let params = |rest: &str| -> Result<Vec<(String, f64)>> {
        rest.split(',')
            .filter(|p| !p.is_empty())
            .map(|p| {
                let (k, v) = p
                    .split_once('=')
                    .ok_or_else(|| OlError::Parse(format!("expected key=value, got `{p}`")))?;
                let v: f64 = v
                    .trim()
                    .parse()
                    .map_err(|_| OlError::Parse(format!("bad number `{v}`")))?;
                Ok((k.trim().to_string(), v))
            })
            .collect()
    };
    match head {
        "pow" => {
            let ps = params(rest)?;
            let r = lookup(&ps, "r")?;
            Ok(FamilySpec::Power { r })
        }
        "powlog" => {
            let ps = params(rest)?;
            Ok(FamilySpec::PowerLog { rho: lookup(&ps, "rho")?, alpha: lookup(&ps, "alpha")? })
        }
        "cap" => {
            let ps = params(rest)?;
            Ok(FamilySpec::CapAt { t0: lookup(&ps, "t0")? })
        }
        "exp" => Ok(FamilySpec::ExpMinusOne),
        "piecewise" => {
            let body = rest.trim();
            let body = body
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| OlError::Parse("piecewise expects [(t,a),...]".into()))?;
            let mut pts = Vec::new();
            for tuple in body.split("),") {
                let tuple = tuple.trim().trim_start_matches('(').trim_end_matches(')');
                if tuple.is_empty() {
                    continue;
                }
                let (t, a) = tuple
                    .split_once(',')
                    .ok_or_else(|| OlError::Parse(format!("bad pair `{tuple}`")))?;
                let t: f64 = t.trim().parse().map_err(|_| OlError::Parse(format!("bad number `{t}`")))?;
                let a: f64 = a.trim().parse().map_err(|_| OlError::Parse(format!("bad number `{a}`")))?;
                pts.push((t, a));
            }
            Ok(FamilySpec::Piecewise { derivative_points: pts })
        }
        other => Err(OlError::Parse(format!("unknown family `{other}`"))),
    }
}

/// Log of the upper-end antiderivative of a segment, for magnitudes past
/// `f64::MAX`. Lower-order terms are negligible at that scale.
fn ln_antiderivative_tail(seg: &Segment, t: f64) -> f64 {
    let lse = |a: f64, b: f64| -> f64 {
        let m = a.max(b);
        if m.is_infinite() {
            return m;
        }
        m + ((a - m).exp() + (b - m).exp()).ln()
    };
    match seg {
        Segment::Const(v) => v.ln() + t.ln(),
        Segment::Power { coeff, x0, exp, y0 } => {
            let e1 = exp + 1.0;
            let head = (coeff / e1).abs().ln() + e1 * (t - x0).ln();
            if *y0 > 0.0 {
                lse(head, y0.ln() + t.ln())
            } else {
                head
            }
        }
        Segment::PowerLogDeriv { coeff, rho, alpha } => {
            coeff.ln() + rho * t.ln() + alpha * (crate::segment::LOG_SHIFT + t).ln().ln()
        }
        Segment::Exp { coeff, rate } => rate * t + (coeff / rate).ln(),
        Segment::Log { scale, shift } => {
            lse(scale.ln() + t.ln() + t.ln().ln(), shift.abs().ln() + t.ln())
        }
        Segment::PowerLog { .. } | Segment::InverseOf { .. } => f64::INFINITY,
    }
}

fn lookup(ps: &[(String, f64)], key: &str) -> Result<f64> {
    ps.iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| OlError::Parse(format!("missing parameter `{key}`")))
}
