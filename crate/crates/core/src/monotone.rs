//! Piecewise monotone functions on `[0, ∞]` with exact left-continuous
//! inversion.
//!
//! A `MonotoneFn` is a list of closed-form segments on consecutive intervals
//! of `[0, ∞)`, an optional point past which the function is identically
//! `∞`, and a stored value at `∞`. Breakpoint evaluation follows the stored
//! one-sided-continuity convention: rearrangements and Young-function
//! derivatives are right-continuous, inverses are left-continuous.

use crate::error::{OlError, Result};
use crate::ext_real::ExtReal;
use crate::segment::Segment;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    NonDecreasing,
    NonIncreasing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Continuity {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct Piece {
    /// Left endpoint of the piece's domain; the first piece starts at 0.
    pub start: f64,
    pub seg: Segment,
}

#[derive(Clone, Debug)]
pub struct MonotoneFn {
    direction: Direction,
    continuity: Continuity,
    pieces: Vec<Piece>,
    /// Function is `∞` strictly beyond this point; pieces cover `[0, t0]`.
    infinite_from: Option<f64>,
    value_at_infinity: ExtReal,
    /// Override for evaluation at exactly 0, used by inverses where the
    /// empty-set conventions (`inf ∅ = ∞`, `sup ∅ = 0`) bind at the origin.
    value_at_zero: Option<ExtReal>,
}

impl MonotoneFn {
    pub fn new(
        direction: Direction,
        continuity: Continuity,
        pieces: Vec<Piece>,
        infinite_from: Option<f64>,
        value_at_infinity: ExtReal,
    ) -> Result<Self> {
        let f = MonotoneFn {
            direction,
            continuity,
            pieces,
            infinite_from,
            value_at_infinity,
            value_at_zero: None,
        };
        f.validate()?;
        Ok(f)
    }

    /// A single-segment function on all of `[0, ∞)`.
    pub fn single(direction: Direction, seg: Segment) -> Result<Self> {
        let vinf = ExtReal::clamped(seg.limit_at_infinity().max(0.0));
        MonotoneFn::new(
            direction,
            Continuity::Right,
            vec![Piece { start: 0.0, seg }],
            None,
            vinf,
        )
    }

    /// Constant function.
    pub fn constant(value: f64) -> Self {
        MonotoneFn {
            direction: Direction::NonDecreasing,
            continuity: Continuity::Right,
            pieces: vec![Piece { start: 0.0, seg: Segment::Const(value) }],
            infinite_from: None,
            value_at_infinity: ExtReal::clamped(value),
            value_at_zero: None,
        }
    }

    /// Right-continuous step function from explicit breakpoints: value
    /// `values[i]` on `[breaks[i], breaks[i+1])` with `breaks[0] == 0`, and
    /// `values[n-1]` on `[breaks[n-1], ∞)`.
    pub fn step_from_breaks(
        direction: Direction,
        breaks: &[f64],
        values: &[f64],
    ) -> Result<Self> {
        if breaks.len() != values.len() || breaks.is_empty() {
            return Err(OlError::Invalid(
                "step function needs equally many breaks and values".into(),
            ));
        }
        let mut pieces = Vec::with_capacity(values.len());
        for (b, v) in breaks.iter().zip(values) {
            pieces.push(Piece { start: *b, seg: Segment::Const(*v) });
        }
        let vinf = ExtReal::clamped(*values.last().unwrap());
        MonotoneFn::new(direction, Continuity::Right, pieces, None, vinf)
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn continuity(&self) -> Continuity {
        self.continuity
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn infinite_from(&self) -> Option<f64> {
        self.infinite_from
    }

    pub fn value_at_infinity(&self) -> ExtReal {
        self.value_at_infinity
    }

    /// Domain end of piece `i`: the next piece's start, the jump point, or `∞`.
    fn piece_end(&self, i: usize) -> f64 {
        if i + 1 < self.pieces.len() {
            self.pieces[i + 1].start
        } else if let Some(t0) = self.infinite_from {
            t0
        } else {
            f64::INFINITY
        }
    }

    /// Exact segment evaluation; `∞` inputs return the stored value, points
    /// beyond the jump return `∞`.
    pub fn eval(&self, t: ExtReal) -> ExtReal {
        if t.is_infinite() {
            return self.value_at_infinity;
        }
        let t = t.as_f64();
        if let Some(t0) = self.infinite_from {
            if t > t0 {
                return ExtReal::INFINITY;
            }
        }
        if t == 0.0 {
            if let Some(v) = self.value_at_zero {
                return v;
            }
        }
        let i = self.locate(t);
        let v = if t == self.pieces[i].start && i > 0 && self.continuity == Continuity::Left {
            self.pieces[i - 1].seg.eval(t)
        } else {
            self.pieces[i].seg.eval(t)
        };
        ExtReal::clamped(v)
    }

    /// Convenience wrapper over finite arguments.
    pub fn eval_f64(&self, t: f64) -> f64 {
        self.eval(ExtReal::clamped(t)).as_f64()
    }

    fn locate(&self, t: f64) -> usize {
        match self
            .pieces
            .binary_search_by(|p| p.start.partial_cmp(&t).unwrap())
        {
            Ok(i) => i,
            Err(0) => 0,
            Err(i) => i - 1,
        }
    }

    /// Exact integral over `[lo, hi]`, `hi` may be infinite. Regions past
    /// the jump contribute `∞`.
    pub fn integral(&self, lo: f64, hi: f64) -> ExtReal {
        if hi <= lo {
            return ExtReal::ZERO;
        }
        if let Some(t0) = self.infinite_from {
            if hi > t0 {
                return ExtReal::INFINITY;
            }
        }
        let mut total = 0.0;
        for (i, p) in self.pieces.iter().enumerate() {
            let a = p.start.max(lo);
            let b = self.piece_end(i).min(hi);
            if a < b {
                total += p.seg.integral(a, b);
                if total.is_infinite() {
                    return ExtReal::INFINITY;
                }
            }
        }
        ExtReal::clamped(total)
    }

    /// Left-continuous inverse `G⁻¹(y) = inf{τ ≥ 0 : G(τ) ≥ y}` of a
    /// non-decreasing function. Satisfies `G⁻¹(G(t)) ≤ t` and the global
    /// convention `inf ∅ = ∞`.
    pub fn invert_nondecreasing(&self) -> Result<MonotoneFn> {
        if self.direction != Direction::NonDecreasing {
            return Err(OlError::WrongDirection { expected: "non-decreasing" });
        }
        let mut out: Vec<Piece> = Vec::new();
        let mut y_cov = self.pieces[0].seg.eval(0.0);
        let push = |pieces: &mut Vec<Piece>, start: f64, seg: Segment| {
            if let Some(last) = pieces.last() {
                if start <= last.start {
                    // zero-width piece: the later one wins only if it starts
                    // strictly further right
                    if start == last.start {
                        pieces.pop();
                    }
                }
            }
            pieces.push(Piece { start, seg });
        };
        if y_cov > 0.0 {
            // H(y) = 0 on [0, G(0)]
            push(&mut out, 0.0, Segment::Const(0.0));
        }
        for (i, p) in self.pieces.iter().enumerate() {
            let t_lo = p.start;
            let t_hi = self.piece_end(i);
            let v_start = p.seg.eval(t_lo);
            let v_end = if t_hi.is_infinite() {
                p.seg.limit_at_infinity()
            } else {
                p.seg.eval(t_hi)
            };
            if v_start > y_cov {
                // jump of G at t_lo: the inverse plateaus at t_lo
                push(&mut out, y_cov, Segment::Const(t_lo));
                y_cov = v_start;
            }
            if v_end > v_start {
                let inv = p.seg.inverse(t_lo, t_hi)?;
                push(&mut out, y_cov, inv);
                y_cov = v_end;
            } else if v_end < v_start {
                return Err(OlError::NotMonotone(format!(
                    "piece starting at {t_lo} decreases"
                )));
            }
        }
        let (infinite_from, vinf) = if let Some(t0) = self.infinite_from {
            // G jumps to ∞ at t0: the inverse is t0 past the last finite value
            if y_cov.is_finite() {
                push(&mut out, y_cov, Segment::Const(t0));
            }
            (None, ExtReal::clamped(t0))
        } else if y_cov.is_finite() {
            // bounded G: empty superlevel sets above the sup
            (Some(y_cov), ExtReal::INFINITY)
        } else {
            (None, ExtReal::INFINITY)
        };
        if out.is_empty() {
            out.push(Piece { start: 0.0, seg: Segment::Const(0.0) });
        }
        if out[0].start > 0.0 {
            out.insert(0, Piece { start: 0.0, seg: Segment::Const(0.0) });
        }
        let f = MonotoneFn {
            direction: Direction::NonDecreasing,
            continuity: Continuity::Left,
            pieces: out,
            infinite_from,
            value_at_infinity: vinf,
            value_at_zero: Some(ExtReal::ZERO),
        };
        f.validate()?;
        Ok(f)
    }

    /// Left-continuous inverse `F⁻¹(y) = sup{τ ≥ 0 : F(τ) ≥ y}` of a
    /// non-increasing function, with `sup ∅ = 0`.
    pub fn invert_nonincreasing(&self) -> Result<MonotoneFn> {
        if self.direction != Direction::NonIncreasing {
            return Err(OlError::WrongDirection { expected: "non-increasing" });
        }
        if self.infinite_from.is_some() {
            return Err(OlError::NotMonotone(
                "a non-increasing function cannot jump to infinity".into(),
            ));
        }
        // collect pieces of the inverse from high y to low y, then reverse
        let mut desc: Vec<(f64, Segment)> = Vec::new(); // (y_start, segment on [y_start, prev))
        let mut cursor = self.pieces[0].seg.eval(0.0);
        for (i, p) in self.pieces.iter().enumerate() {
            let t_lo = p.start;
            let t_hi = self.piece_end(i);
            let v_hi = p.seg.eval(t_lo);
            let v_lo = if t_hi.is_infinite() {
                p.seg.limit_at_infinity()
            } else {
                p.seg.eval(t_hi)
            };
            if v_hi < cursor {
                // downward jump at t_lo: sup sticks at t_lo on the gap
                desc.push((v_hi, Segment::Const(t_lo)));
                cursor = v_hi;
            }
            if v_lo < v_hi {
                let inv = p.seg.inverse(t_lo, t_hi)?;
                desc.push((v_lo, inv));
                cursor = v_lo;
            } else if v_lo > v_hi {
                return Err(OlError::NotMonotone(format!(
                    "piece starting at {t_lo} increases"
                )));
            }
        }
        // below every attained value the superlevel set is the whole line
        if cursor > 0.0 && cursor.is_finite() {
            desc.push((0.0, Segment::Const(f64::INFINITY)));
        }
        let mut pieces: Vec<Piece> = Vec::new();
        for (start, seg) in desc.into_iter().rev() {
            if pieces.last().map_or(true, |p| start > p.start) {
                pieces.push(Piece { start, seg });
            }
        }
        if pieces.is_empty() {
            pieces.push(Piece { start: 0.0, seg: Segment::Const(0.0) });
        }
        if pieces[0].start > 0.0 {
            pieces.insert(0, Piece { start: 0.0, seg: Segment::Const(f64::INFINITY) });
        }
        // above the maximum the superlevel set is empty: sup ∅ = 0
        let y_top = self.pieces[0].seg.eval(0.0);
        if y_top.is_finite() {
            if pieces.last().map_or(true, |p| y_top > p.start) {
                pieces.push(Piece { start: y_top, seg: Segment::Const(0.0) });
            }
        }
        let f = MonotoneFn {
            direction: Direction::NonIncreasing,
            continuity: Continuity::Left,
            pieces,
            infinite_from: None,
            value_at_infinity: ExtReal::ZERO,
            value_at_zero: Some(ExtReal::INFINITY),
        };
        f.validate()?;
        Ok(f)
    }

    /// Piecewise derivative where the segment algebra supports it.
    pub fn differentiate(&self) -> Result<MonotoneFn> {
        let mut pieces = Vec::with_capacity(self.pieces.len());
        for p in &self.pieces {
            let seg = match &p.seg {
                Segment::Const(_) => Segment::Const(0.0),
                Segment::Power { coeff, x0, exp, .. } => Segment::Power {
                    coeff: coeff * exp,
                    x0: *x0,
                    exp: exp - 1.0,
                    y0: 0.0,
                },
                Segment::PowerLog { coeff, exp, alpha } => Segment::PowerLogDeriv {
                    coeff: *coeff,
                    rho: *exp,
                    alpha: *alpha,
                },
                Segment::Exp { coeff, rate } => Segment::Exp { coeff: coeff * rate, rate: *rate },
                Segment::Log { scale, .. } => Segment::Power {
                    coeff: *scale,
                    x0: 0.0,
                    exp: -1.0,
                    y0: 0.0,
                },
                other => {
                    return Err(OlError::NotInvertible(format!(
                        "no closed-form derivative for {other:?}"
                    )))
                }
            };
            pieces.push(Piece { start: p.start, seg });
        }
        let vinf = if self.value_at_infinity.is_infinite() {
            ExtReal::INFINITY
        } else {
            ExtReal::ZERO
        };
        Ok(MonotoneFn {
            direction: Direction::NonDecreasing,
            continuity: Continuity::Right,
            pieces,
            infinite_from: self.infinite_from,
            value_at_infinity: vinf,
            value_at_zero: None,
        })
    }

    /// Sampling-based monotonicity and well-formedness check.
    fn validate(&self) -> Result<()> {
        if self.pieces.is_empty() {
            return Err(OlError::Invalid("no pieces".into()));
        }
        if self.pieces[0].start != 0.0 {
            return Err(OlError::Invalid("first piece must start at 0".into()));
        }
        for w in self.pieces.windows(2) {
            if !(w[1].start > w[0].start) || !w[1].start.is_finite() {
                return Err(OlError::Invalid("piece starts must strictly increase".into()));
            }
        }
        if let Some(t0) = self.infinite_from {
            if t0 < self.pieces.last().unwrap().start {
                return Err(OlError::Invalid(
                    "jump point must not precede the last piece".into(),
                ));
            }
        }
        let mut samples: Vec<f64> = Vec::new();
        for (i, p) in self.pieces.iter().enumerate() {
            let lo = p.start;
            let hi = self.piece_end(i);
            let hi_s = if hi.is_infinite() { (lo.max(1.0)) * 1e6 } else { hi };
            for k in 0..=4 {
                let s = lo + (hi_s - lo) * (k as f64) / 4.0;
                let v = p.seg.eval(s);
                if v.is_nan() || v < -1e-9 {
                    return Err(OlError::NotMonotone(format!(
                        "segment produced {v} at t={s}"
                    )));
                }
                samples.push(v.max(0.0));
            }
        }
        let tol = |a: f64, b: f64| 1e-9 * (1.0 + a.abs().min(1e300) + b.abs().min(1e300));
        for w in samples.windows(2) {
            let ok = match self.direction {
                Direction::NonDecreasing => w[1] >= w[0] - tol(w[0], w[1]),
                Direction::NonIncreasing => w[1] <= w[0] + tol(w[0], w[1]),
            };
            if !ok {
                return Err(OlError::NotMonotone(format!(
                    "samples {} then {} violate {:?}",
                    w[0], w[1], self.direction
                )));
            }
        }
        Ok(())
    }
}
