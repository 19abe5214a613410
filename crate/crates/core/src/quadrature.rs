//! Adaptive quadrature and dyadic-block machinery for improper integrals.

/// Result of a half-line integral attempt.
#[derive(Clone, Debug)]
pub enum Tail {
    /// Converged; the value includes a geometric extrapolation of the tail.
    Converged(f64),
    /// Block sums do not decay; the integral is treated as infinite.
    Diverged,
    /// No verdict within the block budget; the partial sum is attached.
    Undetermined(f64),
}

impl Tail {
    pub fn value(&self) -> f64 {
        match self {
            Tail::Converged(v) => *v,
            Tail::Diverged => f64::INFINITY,
            Tail::Undetermined(v) => *v,
        }
    }

    pub fn is_diverged(&self) -> bool {
        matches!(self, Tail::Diverged)
    }
}

/// Adaptive Simpson on `[a, b]` with relative tolerance `rel_tol`.
///
/// Infinite samples inside the interval make the result infinite. Endpoints
/// where the integrand blows up should be handled by the caller (split or
/// dyadic refinement towards the singular end).
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> f64 {
    if a >= b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    if !fa.is_finite() || !fb.is_finite() || !fm.is_finite() {
        // probe the interior before declaring the integral infinite
        let probes = [0.25, 0.5, 0.75].map(|s| f(a + s * (b - a)));
        if probes.iter().any(|v| v.is_infinite()) {
            return f64::INFINITY;
        }
        // endpoint singularity: creep in from the bad end
        return integrate_endpoint_singular(f, a, b, rel_tol, fa.is_finite());
    }
    let whole = simpson(fa, fm, fb, b - a);
    adaptive(f, a, b, fa, fm, fb, whole, rel_tol, 48)
}

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    rel_tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    if !flm.is_finite() || !frm.is_finite() {
        return f64::INFINITY;
    }
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let err = left + right - whole;
    let scale = (left + right).abs().max(1e-300);
    if depth == 0 || err.abs() <= 15.0 * rel_tol * scale {
        return left + right + err / 15.0;
    }
    adaptive(f, a, m, fa, flm, fm, left, rel_tol, depth - 1)
        + adaptive(f, m, b, fm, frm, fb, right, rel_tol, depth - 1)
}

/// Integrate when exactly one endpoint is singular, by dyadic shrinking
/// towards it with geometric-tail extrapolation.
fn integrate_endpoint_singular(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    rel_tol: f64,
    singular_at_b: bool,
) -> f64 {
    let mut total = 0.0;
    let mut width = 0.5 * (b - a);
    let mut prev = f64::NAN;
    let mut flat_streak = 0;
    for _ in 0..100 {
        let (lo, hi) = if singular_at_b {
            (b - 2.0 * width, b - width)
        } else {
            (a + width, a + 2.0 * width)
        };
        let piece = integrate(f, lo, hi, rel_tol);
        if piece.is_infinite() {
            return f64::INFINITY;
        }
        total += piece;
        if prev.is_finite() && prev > 0.0 {
            // pieces that stop decaying signal a non-integrable singularity
            if piece >= 0.95 * prev {
                flat_streak += 1;
                if flat_streak >= 3 {
                    return f64::INFINITY;
                }
            } else {
                flat_streak = 0;
            }
        }
        if piece.abs() <= rel_tol * total.abs().max(1e-300) {
            return total;
        }
        prev = piece;
        width *= 0.5;
    }
    total
}

/// Half-line integral from `a > 0` via dyadic blocks `[a·2^k, a·2^(k+1)]`
/// with geometric decay detection.
pub fn integrate_to_infinity(f: &dyn Fn(f64) -> f64, a: f64) -> Tail {
    let blocks = dyadic_blocks(f, a, 64);
    classify_blocks(&blocks)
}

/// Block sums `I_k = ∫ f` over `[t0·2^k, t0·2^(k+1)]`, `k = 0..count`.
pub fn dyadic_blocks(f: &dyn Fn(f64) -> f64, t0: f64, count: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    let mut lo = t0;
    for _ in 0..count {
        let hi = lo * 2.0;
        out.push(integrate(f, lo, hi, 1e-10));
        lo = hi;
    }
    out
}

/// Sum dyadic blocks into a convergence verdict: trailing geometric decay
/// gives a converged value with an extrapolated tail, trailing non-decay
/// gives divergence.
pub fn classify_blocks(blocks: &[f64]) -> Tail {
    if blocks.iter().any(|b| b.is_infinite()) {
        return Tail::Diverged;
    }
    let partial: f64 = blocks.iter().sum();
    let n = blocks.len();
    if n < 8 {
        return Tail::Undetermined(partial);
    }
    let last = &blocks[n - 6..];
    if last.iter().all(|&b| b == 0.0) {
        return Tail::Converged(partial);
    }
    // trailing ratio estimate
    let mut ratios = Vec::new();
    for w in last.windows(2) {
        if w[0] > 0.0 {
            ratios.push(w[1] / w[0]);
        }
    }
    if ratios.is_empty() {
        return Tail::Converged(partial);
    }
    let rho = ratios.iter().copied().fold(f64::MIN, f64::max);
    if rho < 0.999 {
        let tail = blocks[n - 1] * rho / (1.0 - rho);
        Tail::Converged(partial + tail)
    } else if rho >= 1.0 {
        Tail::Diverged
    } else {
        Tail::Undetermined(partial)
    }
}
