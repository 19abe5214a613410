//! Property tests for the inversion calculus, rearrangement identities, and
//! functional invariances.

use orlicz_lorentz::embedding::{
    condition_integral_a, condition_integral_a_numeric, condition_integral_dual,
    condition_integral_dual_numeric, divergence_witness, limit_condition, limit_condition_dual,
    modular_inequality_probe, witness_ratio, VerdictState,
};
use orlicz_lorentz::lab::weak_lorentz_limit;
use orlicz_lorentz::monotone::{Direction, MonotoneFn};
use orlicz_lorentz::segment::Segment;
use orlicz_lorentz::young::{make_family, FamilySpec, YoungFn};
use orlicz_lorentz::{
    lorentz_norm, lorentz_norm_forms, luxemburg_norm, orlicz_modular, orlicz_modular_forms,
    ExtReal, StepFn,
};
use proptest::prelude::*;

fn ext(x: f64) -> ExtReal {
    ExtReal::new(x).unwrap()
}

/// Non-decreasing step function from positive gaps and rises.
fn nondecreasing_step(gaps: &[f64], rises: &[f64], base: f64) -> MonotoneFn {
    let mut breaks = vec![0.0];
    let mut level = base;
    let mut levels = vec![level];
    let mut t = 0.0;
    for (g, r) in gaps.iter().zip(rises) {
        t += g;
        level += r;
        breaks.push(t);
        levels.push(level);
    }
    MonotoneFn::step_from_breaks(Direction::NonDecreasing, &breaks, &levels).unwrap()
}

fn arb_step_fn() -> impl Strategy<Value = StepFn> {
    prop::collection::vec((1e-3f64..1e3, 1e-3f64..1e2), 1..20).prop_map(|atoms| {
        let total: f64 = atoms.iter().map(|(_, w)| w).sum();
        StepFn::new(atoms, total * 1.25).unwrap()
    })
}

fn stock_families() -> Vec<(String, YoungFn)> {
    vec![
        ("power(1.5)".into(), make_family(FamilySpec::Power { r: 1.5 }).unwrap()),
        ("power(2)".into(), make_family(FamilySpec::Power { r: 2.0 }).unwrap()),
        ("power(3)".into(), make_family(FamilySpec::Power { r: 3.0 }).unwrap()),
        ("powlog(2,1)".into(), make_family(FamilySpec::PowerLog { rho: 2.0, alpha: 1.0 }).unwrap()),
        ("powlog(2,-1)".into(), make_family(FamilySpec::PowerLog { rho: 2.0, alpha: -1.0 }).unwrap()),
        ("exp".into(), make_family(FamilySpec::ExpMinusOne).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn galois_inequality_for_step_inverses(
        gaps in prop::collection::vec(0.01f64..10.0, 1..6),
        rises in prop::collection::vec(0.0f64..5.0, 6),
        base in 0.0f64..3.0,
        t in 0.0f64..60.0,
    ) {
        let g = nondecreasing_step(&gaps, &rises, base);
        let inv = g.invert_nondecreasing().unwrap();
        let gt = g.eval(ext(t));
        let back = inv.eval(gt);
        prop_assert!(back.as_f64() <= t + 1e-12, "G⁻¹(G({t})) = {back} > {t}");
    }

    #[test]
    fn left_continuity_of_inverse(
        gaps in prop::collection::vec(0.05f64..10.0, 1..6),
        rises in prop::collection::vec(0.05f64..5.0, 6),
        s in 0.05f64..20.0,
    ) {
        let g = nondecreasing_step(&gaps, &rises, 0.0);
        let inv = g.invert_nondecreasing().unwrap();
        let at = inv.eval(ext(s));
        if at.is_finite() && at.as_f64() > 0.0 {
            // just below the inverse point the function stays below s
            let probe = g.eval(ext((at.as_f64() - 1e-9).max(0.0)));
            prop_assert!(probe.as_f64() < s + 1e-9, "G({}) = {probe} >= {s}", at.as_f64() - 1e-9);
        }
    }

    #[test]
    fn inversion_involution_on_powers(c in 0.1f64..10.0, e in 0.2f64..4.0, t in 0.01f64..100.0) {
        let g = MonotoneFn::single(
            Direction::NonDecreasing,
            Segment::Power { coeff: c, x0: 0.0, exp: e, y0: 0.0 },
        ).unwrap();
        let back = g.invert_nondecreasing().unwrap().invert_nondecreasing().unwrap();
        let lhs = g.eval(ext(t)).as_f64();
        let rhs = back.eval(ext(t)).as_f64();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.max(1.0), "{lhs} vs {rhs}");
        prop_assert_eq!(back.direction(), Direction::NonDecreasing);
    }

    #[test]
    fn equimeasurability(f in arb_step_fn(), lam in 1e-4f64..2e3) {
        let lebesgue: f64 = f
            .rearrangement_plateaus()
            .iter()
            .filter(|(v, _, _)| *v > lam)
            .map(|(_, lo, hi)| hi - lo)
            .sum();
        let mu: f64 = f
            .atoms()
            .iter()
            .filter(|(v, _)| *v > lam)
            .map(|(_, w)| w)
            .sum();
        prop_assert!((lebesgue - mu).abs() < 1e-9 * mu.max(1.0));
    }

    #[test]
    fn rearrangement_matches_inverted_distribution(f in arb_step_fn(), t in 1e-4f64..1e3) {
        let r = f.rearrangement();
        let inv = f.distribution().invert_nonincreasing().unwrap();
        // compare off the breakpoints, where the one-sided conventions agree
        let off = t + 1e-7;
        prop_assert_eq!(r.eval(ext(off)).as_f64(), inv.eval(ext(off)).as_f64());
    }

    #[test]
    fn functionals_are_rearrangement_invariant(f in arb_step_fn(), q in 0.6f64..5.0) {
        let mut shuffled: Vec<(f64, f64)> = f.atoms().to_vec();
        shuffled.reverse();
        let g = StepFn::new(shuffled, f.total_measure()).unwrap();
        let a = make_family(FamilySpec::Power { r: 2.0 }).unwrap();
        let m1 = orlicz_modular(&a, &f).as_f64();
        let m2 = orlicz_modular(&a, &g).as_f64();
        prop_assert!((m1 - m2).abs() <= 1e-12 * m1.max(1.0));
        let n1 = lorentz_norm(2.0, q, &f).unwrap().as_f64();
        let n2 = lorentz_norm(2.0, q, &g).unwrap().as_f64();
        prop_assert!((n1 - n2).abs() <= 1e-12 * n1.max(1.0));
    }

    #[test]
    fn lattice_monotonicity(f in arb_step_fn(), bump in 1.0f64..3.0, idx in any::<prop::sample::Index>()) {
        let a = make_family(FamilySpec::PowerLog { rho: 2.0, alpha: 1.0 }).unwrap();
        let mut atoms = f.atoms().to_vec();
        let i = idx.index(atoms.len());
        atoms[i].0 *= bump;
        let g = StepFn::new(atoms, f.total_measure()).unwrap();
        prop_assert!(orlicz_modular(&a, &g) >= orlicz_modular(&a, &f));
        prop_assert!(
            lorentz_norm(2.0, 1.0, &g).unwrap() >= lorentz_norm(2.0, 1.0, &f).unwrap()
        );
        prop_assert!(
            luxemburg_norm(&a, &g).unwrap().as_f64()
                >= luxemburg_norm(&a, &f).unwrap().as_f64() - 1e-10
        );
    }

    #[test]
    fn norms_are_homogeneous_but_modular_is_not(f in arb_step_fn(), c in 0.1f64..10.0) {
        let a = make_family(FamilySpec::Power { r: 2.5 }).unwrap();
        let cf = f.scaled(c).unwrap();
        let lux = luxemburg_norm(&a, &f).unwrap().as_f64();
        let lux_c = luxemburg_norm(&a, &cf).unwrap().as_f64();
        prop_assert!((lux_c - c * lux).abs() <= 1e-9 * (c * lux).max(1e-12), "{lux_c} vs {}", c * lux);
        let lor = lorentz_norm(3.0, 2.0, &f).unwrap().as_f64();
        let lor_c = lorentz_norm(3.0, 2.0, &cf).unwrap().as_f64();
        prop_assert!((lor_c - c * lor).abs() <= 1e-10 * (c * lor).max(1e-12));
        // convexity with A(0)=0 forces superlinear scaling of the modular
        let m = orlicz_modular(&a, &f).as_f64();
        let m2 = orlicz_modular(&a, &f.scaled(2.0).unwrap()).as_f64();
        prop_assert!(m2 >= 2.0 * m - 1e-12 * m.max(1.0));
    }

    #[test]
    fn two_form_agreement(f in arb_step_fn(), p in 1.0f64..5.0, q in 0.6f64..5.0) {
        let a = make_family(FamilySpec::PowerLog { rho: 2.0, alpha: 0.7 }).unwrap();
        let (s, d) = orlicz_modular_forms(&a, &f);
        prop_assert!(s.rel_diff(d) <= 1e-10, "modular forms {s} vs {d}");
        let (r, dd) = lorentz_norm_forms(p, q, &f).unwrap();
        prop_assert!(r.rel_diff(dd) <= 1e-10, "lorentz forms {r} vs {dd}");
    }

    #[test]
    fn lorentz_nesting_finiteness(f in arb_step_fn(), p in 1.0f64..4.0, q in 0.8f64..3.0, extra in 0.1f64..3.0) {
        // q <= r: a finite (p,q) norm forces a finite (p,r) norm
        let r = q + extra;
        let nq = lorentz_norm(p, q, &f).unwrap();
        let nr = lorentz_norm(p, r, &f).unwrap();
        if nq.is_finite() {
            prop_assert!(nr.is_finite());
        }
    }

    #[test]
    fn young_convexity_secant(s in 0.01f64..50.0, t in 0.01f64..50.0, lam in 0.0f64..1.0) {
        for (_, a) in stock_families() {
            let mid = a.eval_a(ext(lam * s + (1.0 - lam) * t)).as_f64();
            let bound = lam * a.eval_a(ext(s)).as_f64() + (1.0 - lam) * a.eval_a(ext(t)).as_f64();
            prop_assert!(mid <= bound * (1.0 + 1e-11) + 1e-12, "secant failed at ({s},{t},{lam})");
        }
    }
}

#[test]
fn numeric_mode_never_contradicts_exact_mode() {
    // wherever a descriptor exists, the numeric verdict agrees or abstains
    let mut checked = 0;
    for &(p, q) in &[(1.5f64, 1.0f64), (2.0, 1.0), (4.0, 1.0), (4.0, 2.0)] {
        for &r in &[1.2f64, 1.8, 2.0, 2.5, 3.0, 4.0, 5.0] {
            let fam = make_family(FamilySpec::Power { r }).unwrap();
            let exact = condition_integral_a(&fam, p, q, ExtReal::ONE).unwrap();
            let stripped = YoungFn::from_derivative(fam.derivative().clone(), None).unwrap();
            let numeric = condition_integral_a_numeric(&stripped, p, q, ExtReal::ONE);
            if numeric.state != VerdictState::Inconclusive {
                assert_eq!(numeric.state, exact.state, "p={p} q={q} r={r}");
            }
            checked += 1;
        }
    }
    for &(rho, alpha) in &[(2.0f64, 0.4f64), (2.0, 1.6), (1.5, 1.0), (2.0, -0.5)] {
        let fam = make_family(FamilySpec::PowerLog { rho, alpha }).unwrap();
        let exact = condition_integral_a(&fam, 2.0, 1.0, ExtReal::ONE).unwrap();
        let stripped = YoungFn::from_derivative(fam.derivative().clone(), None).unwrap();
        let numeric = condition_integral_a_numeric(&stripped, 2.0, 1.0, ExtReal::ONE);
        if numeric.state != VerdictState::Inconclusive {
            assert_eq!(numeric.state, exact.state, "rho={rho} alpha={alpha}");
        }
        checked += 1;
    }
    for &rho in &[1.3f64, 1.7, 2.0, 2.4] {
        let fam = make_family(FamilySpec::Power { r: rho }).unwrap();
        let exact = condition_integral_dual(&fam, 2.0, 4.0, ExtReal::ONE).unwrap();
        let stripped = YoungFn::from_derivative(fam.derivative().clone(), None).unwrap();
        let numeric = condition_integral_dual_numeric(&stripped, 2.0, 4.0, ExtReal::ONE);
        if numeric.state != VerdictState::Inconclusive {
            assert_eq!(numeric.state, exact.state, "dual rho={rho}");
        }
        checked += 1;
    }
    assert!(checked > 30);
}

#[test]
fn integral_regime_coherence() {
    // condition holds: the random probe stays bounded; condition fails: the
    // witness family ratio strictly increases
    let (p, q) = (2.0, 1.0);
    let good = make_family(FamilySpec::Power { r: 3.0 }).unwrap();
    assert!(condition_integral_a(&good, p, q, ExtReal::ONE).unwrap().holds());
    let probe = modular_inequality_probe(&good, p, q, 10_000, 20260809).unwrap();
    assert!(probe.max_ratio.is_finite() && probe.max_ratio > 0.0);

    let bad = make_family(FamilySpec::Power { r: p }).unwrap();
    assert!(!condition_integral_a(&bad, p, q, ExtReal::ONE).unwrap().holds());
    let mut prev = 0.0;
    for n in [1u32, 4, 9, 16] {
        let w = divergence_witness(&bad, p, q, n).unwrap();
        let ratio = witness_ratio(&bad, p, q, &w).unwrap();
        assert!(ratio > prev, "witness ratio stalled at n={n}");
        prev = ratio;
    }
}

#[test]
fn limit_regime_coherence() {
    // the growth limit condition matches the weak-type extremal limit
    let p = 2.0;
    for (name, a) in stock_families() {
        let lim = match limit_condition(&a, p) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let weak = weak_lorentz_limit(&a, p).unwrap();
        if lim {
            assert!(weak.is_zero(), "{name}: growth holds but extremal value {weak} does not vanish");
        } else {
            assert!(!weak.is_zero(), "{name}: growth fails but extremal value vanishes");
        }
    }
}

#[test]
fn duality_coherence_of_limit_conditions() {
    // t^r/B → ∞ exactly when the conjugate grows super-(r')-polynomially
    for &r in &[1.5f64, 2.0, 3.0] {
        let rp = r / (r - 1.0);
        for (name, b) in stock_families() {
            if b.asymptotic().map_or(true, |asy| asy.rho <= 1.0) {
                continue; // conjugate descriptor unavailable
            }
            let direct = limit_condition_dual(&b, r).unwrap();
            let conj = b.conjugate().unwrap();
            let dual = limit_condition(&conj, rp).unwrap();
            assert_eq!(direct, dual, "{name} at r={r}");
        }
    }
}

#[test]
fn report_invariant_almost_compact_implies_continuous() {
    use orlicz_lorentz::classify_orlicz_into_lorentz;
    for (_, a) in stock_families() {
        for &(p, q) in &[(2.0, 1.0), (2.0, 3.0), (1.5, 1.0), (3.0, 4.0)] {
            let rep = match classify_orlicz_into_lorentz(&a, p, q, ExtReal::ONE) {
                Ok(r) => r,
                Err(_) => continue,
            };
            if rep.almost_compact.state == VerdictState::Holds {
                assert_eq!(rep.continuous.state, VerdictState::Holds);
            }
        }
    }
}

#[test]
fn numeric_verdicts_carry_their_blocks() {
    let stripped = YoungFn::from_derivative(
        make_family(FamilySpec::Power { r: 3.0 }).unwrap().derivative().clone(),
        None,
    )
    .unwrap();
    let v = condition_integral_a(&stripped, 2.0, 1.0, ExtReal::ONE).unwrap();
    match v.evidence {
        orlicz_lorentz::Evidence::Numeric { ref blocks, .. } => {
            assert!(blocks.len() >= 40, "auditable block sums missing");
        }
        ref other => panic!("numeric verdict without blocks: {other:?}"),
    }
}
