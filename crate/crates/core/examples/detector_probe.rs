use orlicz_lorentz::*;
use orlicz_lorentz::young::{make_family, FamilySpec, YoungFn};

fn strip(y: &YoungFn) -> YoungFn {
    YoungFn::from_derivative(y.derivative().clone(), None).unwrap()
}

fn main() {
    // power cases: numeric must be decisive at |r-p| = 0.1 for p=4, q in {1,2}
    for &(p, q) in &[(1.5f64, 1.0f64), (2.0, 1.0), (4.0, 1.0), (4.0, 2.0)] {
        for &dr in &[-2.0f64, -0.5, -0.1, 0.0, 0.1, 0.5, 2.0] {
            let r = p + dr;
            if r < 1.0 { continue; }
            let a = strip(&make_family(FamilySpec::Power { r }).unwrap());
            let v = condition_integral_a(&a, p, q, ExtReal::ONE).unwrap();
            let expect = if r > p { "holds" } else { "fails" };
            println!("p={p} q={q} r={r}: numeric={:?} expect={expect}", v.state);
        }
    }
    // powlog boundary: exact boundary (p-q)/q, probe alpha = boundary +- 0.2 and +-0.05
    for &(p, q) in &[(2.0f64, 1.0f64), (4.0, 1.0), (4.0, 2.0), (1.5, 1.0)] {
        let b = (p - q) / q;
        for &da in &[-0.2f64, -0.05, 0.05, 0.2] {
            let alpha = b + da;
            let fam = make_family(FamilySpec::PowerLog { rho: p, alpha });
            let Ok(fam) = fam else { println!("p={p} q={q} alpha={alpha}: construction rejected"); continue };
            let a = strip(&fam);
            let v = condition_integral_a(&a, p, q, ExtReal::ONE).unwrap();
            let expect = if alpha > b { "holds" } else { "fails" };
            println!("p={p} q={q} alpha={alpha} (boundary {b}): numeric={:?} expect={expect}", v.state);
        }
    }
    // dual: s=inf interpretation
    for &da in &[-0.2f64, 0.2] {
        let alpha = -1.0 + da;
        let bfam = strip(&make_family(FamilySpec::PowerLog { rho: 2.0, alpha }).unwrap());
        let v = condition_integral_dual(&bfam, 2.0, f64::INFINITY, ExtReal::ONE).unwrap();
        let expect = if alpha < -1.0 { "holds" } else { "fails" };
        println!("dual s=inf alpha={alpha}: numeric={:?} expect={expect}", v.state);
    }
}
