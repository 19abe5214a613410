use orlicz_lorentz::*;
use orlicz_lorentz::young::{make_family, FamilySpec};

fn main() {
    // criterion 8 quantities: A=power(3), p=2, q=1, lambda=5e-3
    let a = make_family(FamilySpec::Power { r: 3.0 }).unwrap();
    let (p, q, lambda) = (2.0, 1.0, 5e-3);
    println!("-- decomposition S/B over the r grid --");
    for k in 1..=6 {
        let r = 10f64.powi(-k);
        let d = proof_decomposition(&a, p, q, lambda, r).unwrap();
        println!("r=1e-{k}: S={:.6} B={:.6} infS={:.4}", d.s_integral.as_f64(), d.b_integral.as_f64(), d.inf_s.as_f64());
    }
    // chain inequality at r=1e-2 with a layered extremal
    let r = 1e-2;
    let d = proof_decomposition(&a, p, q, lambda, r).unwrap();
    let profile = almost_compactness_profile(&a, p, q, &[r], 8).unwrap();
    println!("phi({r}) = {}", profile[0].phi);
    // unit-ball f supported on <= r: characteristic extremal
    let v = a.inv_a(ExtReal::new(1.0/r).unwrap()).as_f64();
    let f = StepFn::indicator(v, r, 1.0).unwrap();
    let lnorm = lorentz_norm(p, q, &f).unwrap().as_f64();
    let modular = orlicz_modular(&a, &f).as_f64();
    let lhs = lnorm.powf(q);
    let rhs = q * (d.s_integral.as_f64() + d.b_integral.as_f64()) + lambda * q * modular;
    println!("chain: |f|_pq^q = {lhs:.6} <= q(S+B)+lam q rho = {rhs:.6} ? {}", lhs <= rhs);

    // criterion 9: A=power(2p), q=inf, p=2: phi(1e-6) ~ 0.0316
    let a4 = make_family(FamilySpec::Power { r: 4.0 }).unwrap();
    let pts = almost_compactness_profile(&a4, 2.0, f64::INFINITY, &[1e-6], 8).unwrap();
    println!("phi_4(1e-6) = {} (want <= 0.04, closed form 0.031623)", pts[0].phi);
    let a2 = make_family(FamilySpec::Power { r: 2.0 }).unwrap();
    let pts = almost_compactness_profile(&a2, 2.0, f64::INFINITY, &[1e-1, 1e-3, 1e-6], 8).unwrap();
    for pt in &pts { println!("phi_2({}) = {} (want 1 +- 1e-9)", pt.r, pt.phi); }

    // criterion 10: witness ratios
    let a2 = make_family(FamilySpec::Power { r: 2.0 }).unwrap();
    let mut prev = 0.0;
    for n in [1u32, 2, 5, 10, 15, 20] {
        let w = divergence_witness(&a2, 2.0, 1.0, n).unwrap();
        let ratio = orlicz_lorentz::embedding::witness_ratio(&a2, 2.0, 1.0, &w).unwrap();
        println!("witness n={n}: ratio={ratio:.4} (monotone from {prev:.4}: {})", ratio >= prev);
        prev = ratio;
    }
    // boundary family witness
    let ab = make_family(FamilySpec::PowerLog { rho: 2.0, alpha: 1.0 }).unwrap();
    let w1 = divergence_witness(&ab, 2.0, 1.0, 1).unwrap();
    let w20 = divergence_witness(&ab, 2.0, 1.0, 20).unwrap();
    let r1 = orlicz_lorentz::embedding::witness_ratio(&ab, 2.0, 1.0, &w1).unwrap();
    let r20 = orlicz_lorentz::embedding::witness_ratio(&ab, 2.0, 1.0, &w20).unwrap();
    println!("boundary witness: ratio(1)={r1:.4} ratio(20)={r20:.4} growth={:.3}", r20/r1);

    // criterion 11: chain windows
    let b = make_family(FamilySpec::Power { r: 1.5 }).unwrap();
    for k in 1..=5 {
        let t1 = 10f64.powi(k);
        let c = dual_reduction_check(&b, 2.0, 4.0, (t1, t1*100.0)).unwrap();
        println!("window [1e{k},1e{}]: left={:.6e} right={:.6e} ratio={:.4}", k+2, c.left, c.right, c.ratio);
    }
    let bl = make_family(FamilySpec::PowerLog { rho: 1.5, alpha: 1.0 }).unwrap();
    for k in 1..=5 {
        let t1 = 10f64.powi(k);
        let c = dual_reduction_check(&bl, 2.0, 4.0, (t1, t1*100.0)).unwrap();
        println!("powlog window [1e{k}]: ratio={:.4}", c.ratio);
    }
}
