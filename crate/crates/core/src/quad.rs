//! Adaptive quadrature by panel bisection.
//!
//! Each panel carries the trapezoidal rule at two levels (`h` and `h/2`); their
//! Richardson combination is Simpson's rule, and the difference of the Simpson
//! values on the panel and on its two halves drives the bisection. Refinement
//! is local, so steep regions (for instance near a rough signal) are graded
//! automatically.

/// Default cap on the number of accepted panels.
pub const MAX_PANELS: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadEstimate {
    pub value: f64,
    /// Sum of the local two-level differences.
    pub error_estimate: f64,
    pub panels: usize,
    /// False when the panel cap was hit before every panel met its share of
    /// the tolerance; `value` is then the best available estimate.
    pub converged: bool,
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    simpson: f64,
    depth: u32,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
pub fn integrate<F>(f: F, a: f64, b: f64, tol: f64) -> QuadEstimate
where
    F: FnMut(f64) -> f64,
{
    integrate_with_cap(f, a, b, tol, MAX_PANELS)
}

pub fn integrate_with_cap<F>(mut f: F, a: f64, b: f64, tol: f64, max_panels: usize) -> QuadEstimate
where
    F: FnMut(f64) -> f64,
{
    assert!(tol > 0.0, "tolerance must be positive");
    if a == b {
        return QuadEstimate {
            value: 0.0,
            error_estimate: 0.0,
            panels: 0,
            converged: true,
        };
    }
    let width = b - a;
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let mut stack = vec![Panel {
        a,
        b,
        fa,
        fm,
        fb,
        simpson: simpson(a, b, fa, fm, fb),
        depth: 0,
    }];
    let mut value = 0.0;
    let mut comp = 0.0;
    let mut error = 0.0;
    let mut panels = 0usize;
    let mut converged = true;

    while let Some(p) = stack.pop() {
        let m = 0.5 * (p.a + p.b);
        let (lm, rm) = (0.5 * (p.a + m), 0.5 * (m + p.b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(p.a, m, p.fa, flm, p.fm);
        let right = simpson(m, p.b, p.fm, frm, p.fb);
        let refined = left + right;
        let diff = refined - p.simpson;
        let local_tol = tol * ((p.b - p.a) / width).abs();
        // Pending panels are each at least one more accepted panel.
        let budget_left = panels + stack.len() + 2 <= max_panels;
        let tiny = (m - p.a).abs() <= f64::EPSILON * m.abs().max(1.0) * 4.0;
        if diff.abs() <= 15.0 * local_tol || !budget_left || tiny || p.depth >= 60 {
            if diff.abs() > 15.0 * local_tol || !diff.is_finite() {
                converged = false;
            }
            // Kahan accumulation of the accepted panels.
            let y = (refined + diff / 15.0) - comp;
            let t = value + y;
            comp = (t - value) - y;
            value = t;
            error += diff.abs() / 15.0;
            panels += 1;
        } else {
            stack.push(Panel {
                a: m,
                b: p.b,
                fa: p.fm,
                fm: frm,
                fb: p.fb,
                simpson: right,
                depth: p.depth + 1,
            });
            stack.push(Panel {
                a: p.a,
                b: m,
                fa: p.fa,
                fm: flm,
                fb: p.fm,
                simpson: left,
                depth: p.depth + 1,
            });
        }
    }
    QuadEstimate {
        value,
        error_estimate: error,
        panels,
        converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let q = integrate(|x| x * x * x - 2.0 * x, 0.0, 2.0, 1e-12);
        assert!((q.value - 0.0).abs() < 1e-14);
        assert!(q.converged);
    }

    #[test]
    fn smooth_integrand() {
        let q = integrate(f64::exp, 0.0, 1.0, 1e-12);
        assert!((q.value - (1f64.exp() - 1.0)).abs() < 1e-12);
        assert!(q.converged);
    }

    #[test]
    fn reversed_interval_flips_sign() {
        let q = integrate(f64::sin, std::f64::consts::PI, 0.0, 1e-10);
        assert!((q.value + 2.0).abs() < 1e-10);
    }

    #[test]
    fn singular_endpoint_is_refined() {
        let q = integrate(f64::sqrt, 0.0, 1.0, 1e-10);
        assert!((q.value - 2.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn panel_cap_reports_failure() {
        let q = integrate_with_cap(|x| (1.0 / x).sin(), 1e-6, 1.0, 1e-14, 16);
        assert!(!q.converged);
        assert!(q.panels <= 16);
    }

    #[test]
    fn jump_is_localized() {
        let q = integrate(|x| if x < 0.3 { 1.0 } else { 0.0 }, 0.0, 1.0, 1e-10);
        assert!((q.value - 0.3).abs() < 1e-9);
    }
}
