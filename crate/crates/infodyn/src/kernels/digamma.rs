//! Digamma function.

use crate::error::{Error, Result};

/// Digamma ψ(x) for x > 0, accurate to better than 1e-10 on [1e-3, 1e6].
///
/// Small arguments are shifted up with ψ(x+1) = ψ(x) + 1/x until the
/// asymptotic series applies.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::InvalidParam(format!("digamma requires x > 0, got {x}")));
    }
    let mut value = 0.0;
    let mut x = x;
    while x < 6.0 {
        value -= 1.0 / x;
        x += 1.0;
    }
    // ψ(x) ~ ln x - 1/(2x) - Σ B_{2n} / (2n x^{2n})
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let series = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
    Ok(value + x.ln() - 0.5 * inv - series)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn known_values() {
        // scipy.special.psi reference values
        let cases = [
            (1e-3, -1.0005755719318103e3),
            (0.5, -1.9635100260214235),
            (1.0, -EULER_MASCHERONI),
            (1.5, 3.6489973978576520e-2),
            (2.0, 4.2278433509846713e-1),
            (4.9, 1.4837377932548970),
            (5.1, 1.5280095290559887),
            (10.0, 2.2517525890667209),
            (100.0, 4.6001618527380881),
            (1e6, 1.3815510057964190e1),
        ];
        for (x, want) in cases {
            let got = digamma(x).unwrap();
            assert!(
                (got - want).abs() <= 1e-10 * want.abs().max(1.0),
                "psi({x}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn recurrence_on_grid() {
        // ψ(x+1) = ψ(x) + 1/x
        let mut x = 1e-3;
        while x < 50.0 {
            let lhs = digamma(x + 1.0).unwrap();
            let rhs = digamma(x).unwrap() + 1.0 / x;
            assert!((lhs - rhs).abs() < 1e-9, "recurrence at {x}");
            x *= 1.37;
        }
    }

    #[test]
    fn reflection_on_grid() {
        // ψ(1-x) - ψ(x) = π cot(π x) for x in (0, 1)
        for &x in &[0.1, 0.25, 0.3, 0.45, 0.6, 0.75, 0.9] {
            let lhs = digamma(1.0 - x).unwrap() - digamma(x).unwrap();
            let rhs = std::f64::consts::PI / (std::f64::consts::PI * x).tan();
            assert!((lhs - rhs).abs() < 1e-9, "reflection at {x}");
        }
    }

    #[test]
    fn asymptotic_check_at_100() {
        let got = digamma(100.0).unwrap();
        let approx = 100f64.ln() - 1.0 / 200.0;
        assert!((got - approx).abs() < 1e-4);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(digamma(0.0).is_err());
        assert!(digamma(-1.5).is_err());
        assert!(digamma(f64::NAN).is_err());
    }
}
