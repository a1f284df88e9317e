//! Adaptive one-dimensional quadrature.

use crate::error::{Error, Result};

/// Upper integration bound.
#[derive(Debug, Clone, Copy)]
pub enum UpperBound {
    Finite(f64),
    PosInf,
}

/// Integrate `f` over `[a, b)` with adaptive Simpson refinement.
///
/// An infinite upper bound is mapped onto [0, 1) with x = a + t/(1-t).
/// Errors if the tolerance is not reached within the refinement budget.
pub fn integrate_1d<F: Fn(f64) -> f64>(f: F, a: f64, b: UpperBound, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParam("tolerance must be positive".into()));
    }
    match b {
        UpperBound::Finite(b) => {
            if !(b > a) {
                return Err(Error::InvalidParam("upper bound must exceed lower".into()));
            }
            adaptive(&f, a, b, tol)
        }
        UpperBound::PosInf => {
            let g = |t: f64| {
                let u = 1.0 - t;
                let x = a + t / u;
                let v = f(x) / (u * u);
                if v.is_finite() {
                    v
                } else {
                    0.0
                }
            };
            adaptive(&g, 0.0, 1.0 - 1e-12, tol)
        }
    }
}

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
    struct Frame {
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    }
    const MAX_DEPTH: u32 = 48;
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(fa, fm, fb, b - a);
    let mut stack = vec![Frame { a, b, fa, fm, fb, whole, tol, depth: 0 }];
    let mut total = 0.0;
    while let Some(fr) = stack.pop() {
        let m = 0.5 * (fr.a + fr.b);
        let lm = 0.5 * (fr.a + m);
        let rm = 0.5 * (m + fr.b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fr.fa, flm, fr.fm, m - fr.a);
        let right = simpson(fr.fm, frm, fr.fb, fr.b - m);
        let delta = left + right - fr.whole;
        // the tolerance floor stops refinement from chasing round-off noise
        let tol_eff = fr.tol.max(1e-15 * fr.whole.abs());
        if delta.abs() <= 15.0 * tol_eff || (fr.b - fr.a) < 1e-14 * (1.0 + fr.a.abs()) {
            total += left + right + delta / 15.0;
        } else if fr.depth >= MAX_DEPTH {
            return Err(Error::QuadratureNonConvergence(format!(
                "no convergence on [{}, {}]",
                fr.a, fr.b
            )));
        } else {
            let half_tol = fr.tol / 2.0;
            stack.push(Frame {
                a: fr.a,
                b: m,
                fa: fr.fa,
                fm: flm,
                fb: fr.fm,
                whole: left,
                tol: half_tol,
                depth: fr.depth + 1,
            });
            stack.push(Frame {
                a: m,
                b: fr.b,
                fa: fr.fm,
                fm: frm,
                fb: fr.fb,
                whole: right,
                tol: half_tol,
                depth: fr.depth + 1,
            });
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_constant() {
        let v = integrate_1d(|_| 1.0, 0.0, UpperBound::Finite(1.0), 1e-10).unwrap();
        assert!((v - 1.0).abs() < 1e-10);
    }

    #[test]
    fn exponential_tail() {
        let v = integrate_1d(|x| (-x).exp(), 0.0, UpperBound::PosInf, 1e-9).unwrap();
        assert!((v - 1.0).abs() < 1e-8, "{v}");
    }

    #[test]
    fn standard_normal_density() {
        let pdf = |x: f64| (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
        // symmetric: integrate over [0, inf) and double
        let half = integrate_1d(pdf, 0.0, UpperBound::PosInf, 1e-9).unwrap();
        assert!((2.0 * half - 1.0).abs() < 1e-8);
    }

    #[test]
    fn polynomial_exact() {
        let v = integrate_1d(|x| x * x * x, 0.0, UpperBound::Finite(2.0), 1e-12).unwrap();
        assert!((v - 4.0).abs() < 1e-10);
    }

    #[test]
    fn rejects_bad_bounds() {
        assert!(integrate_1d(|_| 0.0, 1.0, UpperBound::Finite(0.0), 1e-6).is_err());
        assert!(integrate_1d(|_| 0.0, 0.0, UpperBound::Finite(1.0), 0.0).is_err());
    }
}
