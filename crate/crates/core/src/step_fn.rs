//! Simple functions on a finite measure space, with their distribution
//! functions and non-increasing rearrangements.
//!
//! A step function is a list of (value, weight) atoms plus a total measure;
//! the unlisted remainder carries the value zero. Every functional in the
//! toolkit depends on a function only through its rearrangement, so this is
//! the sole concrete function model.

use crate::error::{OlError, Result};
use crate::monotone::{Direction, MonotoneFn};

#[derive(Clone, Debug, PartialEq)]
pub struct StepFn {
    atoms: Vec<(f64, f64)>,
    total_measure: f64,
}

impl StepFn {
    pub fn new(atoms: Vec<(f64, f64)>, total_measure: f64) -> Result<Self> {
        if !(total_measure > 0.0) || !total_measure.is_finite() {
            return Err(OlError::Parameter(format!(
                "total measure {total_measure} must be positive and finite"
            )));
        }
        let mut support = 0.0;
        for &(v, w) in &atoms {
            if !v.is_finite() || v < 0.0 {
                return Err(OlError::InvalidValue(v));
            }
            if !(w > 0.0) || !w.is_finite() {
                return Err(OlError::Parameter(format!("weight {w} must be positive")));
            }
            support += w;
        }
        if support > total_measure * (1.0 + 1e-12) {
            return Err(OlError::Parameter(format!(
                "atom weights sum to {support}, exceeding the total measure {total_measure}"
            )));
        }
        Ok(StepFn { atoms, total_measure })
    }

    /// The function on a measure-`m` set taking the single value `v`.
    pub fn indicator(v: f64, m: f64, total_measure: f64) -> Result<Self> {
        StepFn::new(vec![(v, m)], total_measure)
    }

    pub fn zero(total_measure: f64) -> Self {
        StepFn { atoms: Vec::new(), total_measure }
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn total_measure(&self) -> f64 {
        self.total_measure
    }

    /// Measure of `{f > 0}`.
    pub fn support_measure(&self) -> f64 {
        self.atoms.iter().filter(|(v, _)| *v > 0.0).map(|(_, w)| w).sum()
    }

    pub fn max_value(&self) -> f64 {
        self.atoms.iter().map(|(v, _)| *v).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.iter().all(|(v, _)| *v == 0.0)
    }

    /// Pointwise scaling of the values.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c >= 0.0) || !c.is_finite() {
            return Err(OlError::InvalidValue(c));
        }
        StepFn::new(
            self.atoms.iter().map(|&(v, w)| (v * c, w)).collect(),
            self.total_measure,
        )
    }

    /// Distinct positive values in decreasing order with merged weights.
    fn merged_desc(&self) -> Vec<(f64, f64)> {
        let mut sorted: Vec<(f64, f64)> = self
            .atoms
            .iter()
            .filter(|(v, _)| *v > 0.0)
            .copied()
            .collect();
        sorted.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(sorted.len());
        for (v, w) in sorted {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += w,
                _ => merged.push((v, w)),
            }
        }
        merged
    }

    /// Distribution function `λ ↦ μ({|f| > λ})`: non-increasing and
    /// right-continuous, with `f_*(0)` equal to the support measure.
    pub fn distribution(&self) -> MonotoneFn {
        let merged = self.merged_desc();
        // ascending values with the measure strictly above each
        let mut breaks = vec![0.0];
        let mut values = Vec::new();
        let mut above = merged.iter().map(|(_, w)| w).sum::<f64>();
        values.push(above);
        for (v, w) in merged.iter().rev() {
            above -= w;
            breaks.push(*v);
            values.push(above.max(0.0));
        }
        MonotoneFn::step_from_breaks(Direction::NonIncreasing, &breaks, &values)
            .expect("distribution construction is internally consistent")
    }

    /// Non-increasing rearrangement: the atoms sorted by decreasing value and
    /// laid out as a right-continuous step function on `(0, total measure)`.
    pub fn rearrangement(&self) -> MonotoneFn {
        let merged = self.merged_desc();
        let mut breaks = vec![0.0];
        let mut values = Vec::new();
        let mut cum = 0.0;
        for (v, w) in &merged {
            values.push(*v);
            cum += w;
            breaks.push(cum);
        }
        values.push(0.0);
        MonotoneFn::step_from_breaks(Direction::NonIncreasing, &breaks, &values)
            .expect("rearrangement construction is internally consistent")
    }

    /// Plateau decomposition of the rearrangement: `(value, cum_lo, cum_hi)`
    /// meaning `f* = value` on `(cum_lo, cum_hi]`. Zero tail omitted.
    pub fn rearrangement_plateaus(&self) -> Vec<(f64, f64, f64)> {
        let merged = self.merged_desc();
        let mut out = Vec::with_capacity(merged.len());
        let mut cum = 0.0;
        for (v, w) in merged {
            out.push((v, cum, cum + w));
            cum += w;
        }
        out
    }

    /// Plateau decomposition of the distribution: `(measure_above, lo, hi)`
    /// meaning `f_* = measure_above` on `[lo, hi)`. The zero tail is omitted.
    pub fn distribution_plateaus(&self) -> Vec<(f64, f64, f64)> {
        let merged = self.merged_desc();
        let mut out = Vec::new();
        let mut above: f64 = merged.iter().map(|(_, w)| w).sum();
        let mut lo = 0.0;
        for (v, w) in merged.iter().rev() {
            out.push((above, lo, *v));
            above -= w;
            lo = *v;
        }
        out
    }
}

/// Evaluate the distribution at a point without building the function.
pub fn distribution_at(f: &StepFn, lambda: f64) -> f64 {
    f.atoms()
        .iter()
        .filter(|(v, _)| *v > lambda)
        .map(|(_, w)| w)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext_real::ExtReal;

    fn ext(x: f64) -> ExtReal {
        ExtReal::new(x).unwrap()
    }

    #[test]
    fn distribution_counts_exceeding_atoms() {
        let f = StepFn::new(vec![(3.0, 1.0), (1.0, 2.0)], 10.0).unwrap();
        let d = f.distribution();
        assert_eq!(d.eval(ext(2.0)).as_f64(), 1.0);
        assert_eq!(d.eval(ext(0.5)).as_f64(), 3.0);
        assert_eq!(d.eval(ext(3.0)).as_f64(), 0.0);
        assert_eq!(d.eval(ext(0.0)).as_f64(), 3.0);
    }

    #[test]
    fn rearrangement_sorts_plateaus() {
        let f = StepFn::new(vec![(1.0, 2.0), (3.0, 1.0)], 3.0).unwrap();
        let r = f.rearrangement();
        assert_eq!(r.eval(ext(0.5)).as_f64(), 3.0);
        assert_eq!(r.eval(ext(2.0)).as_f64(), 1.0);
        assert_eq!(r.eval(ext(2.9)).as_f64(), 1.0);
        assert_eq!(r.eval(ext(3.5)).as_f64(), 0.0);
    }

    #[test]
    fn constant_function_single_plateau() {
        let f = StepFn::indicator(2.5, 4.0, 4.0).unwrap();
        let r = f.rearrangement();
        assert_eq!(r.eval(ext(1.0)).as_f64(), 2.5);
        assert_eq!(r.eval(ext(4.5)).as_f64(), 0.0);
    }

    #[test]
    fn equimeasurability_at_breakpoints() {
        let f = StepFn::new(vec![(2.0, 0.5), (5.0, 1.0), (2.0, 0.25), (0.5, 3.0)], 10.0).unwrap();
        let r = f.rearrangement();
        for &lam in &[0.1, 0.5, 1.0, 2.0, 3.0, 5.0, 6.0] {
            // measure of {f* > lam} on the half-line
            let plats = f.rearrangement_plateaus();
            let lebesgue: f64 = plats
                .iter()
                .filter(|(v, _, _)| *v > lam)
                .map(|(_, lo, hi)| hi - lo)
                .sum();
            assert!(
                (lebesgue - distribution_at(&f, lam)).abs() < 1e-12,
                "λ={lam}"
            );
            let _ = r;
        }
    }

    #[test]
    fn rearrangement_is_inverse_of_distribution_off_breakpoints() {
        let f = StepFn::new(vec![(4.0, 1.0), (2.0, 2.0), (1.0, 0.5)], 5.0).unwrap();
        let via_inverse = f.distribution().invert_nonincreasing().unwrap();
        let r = f.rearrangement();
        for &t in &[0.5, 1.5, 2.7, 3.2, 4.0] {
            assert_eq!(
                r.eval(ext(t)).as_f64(),
                via_inverse.eval(ext(t + 1e-9)).as_f64(),
                "t={t}"
            );
        }
    }

    #[test]
    fn atom_splitting_invariance() {
        let f = StepFn::new(vec![(2.0, 3.0)], 5.0).unwrap();
        let g = StepFn::new(vec![(2.0, 1.0), (2.0, 2.0)], 5.0).unwrap();
        for &t in &[0.5, 2.5, 3.5] {
            assert_eq!(
                f.rearrangement().eval(ext(t)).as_f64(),
                g.rearrangement().eval(ext(t)).as_f64()
            );
        }
    }

    #[test]
    fn rejects_bad_atoms() {
        assert!(StepFn::new(vec![(-1.0, 1.0)], 5.0).is_err());
        assert!(StepFn::new(vec![(1.0, 0.0)], 5.0).is_err());
        assert!(StepFn::new(vec![(1.0, 6.0)], 5.0).is_err());
        assert!(StepFn::new(vec![], 0.0).is_err());
    }
}
