//! Bounded scalar minimization by Brent's method (golden-section search with
//! parabolic interpolation), following the classical `localmin` scheme.

use crate::error::{Error, Result};

/// Iteration cap used by [`brent_min`].
pub const MAX_ITERATIONS: usize = 200;

const GOLDEN: f64 = 0.381_966_011_250_105_1; // (3 - sqrt 5) / 2
const SQRT_EPS: f64 = 1.490_116_119_384_765_6e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub arg: f64,
    pub value: f64,
    pub iterations: usize,
}

/// Locates a local minimizer of `f` on `[a, b]` to within `xtol`.
///
/// NaN values of `f` are treated as `+inf`, so a function that is undefined
/// near an end of the interval pushes the search inward.
pub fn brent_min<F>(f: F, a: f64, b: f64, xtol: f64) -> Result<Minimum>
where
    F: FnMut(f64) -> f64,
{
    brent_min_with_limit(f, a, b, xtol, MAX_ITERATIONS)
}

pub fn brent_min_with_limit<F>(
    mut f: F,
    a: f64,
    b: f64,
    xtol: f64,
    max_iterations: usize,
) -> Result<Minimum>
where
    F: FnMut(f64) -> f64,
{
    if !(a < b) {
        return Err(Error::Domain(format!(
            "brent_min needs a < b, got [{a}, {b}]"
        )));
    }
    if !(xtol > 0.0) {
        return Err(Error::Domain(format!(
            "brent_min needs xtol > 0, got {xtol}"
        )));
    }
    let mut eval = |x: f64| {
        let y = f(x);
        if y.is_nan() {
            f64::INFINITY
        } else {
            y
        }
    };

    let (mut a, mut b) = (a, b);
    let mut x = a + GOLDEN * (b - a);
    let (mut v, mut w) = (x, x);
    let mut fx = eval(x);
    let (mut fv, mut fw) = (fx, fx);
    let mut d: f64 = 0.0;
    let mut e: f64 = 0.0;

    for iter in 0..max_iterations {
        let xm = 0.5 * (a + b);
        let tol1 = SQRT_EPS * x.abs() + xtol / 3.0;
        let tol2 = 2.0 * tol1;
        if (x - xm).abs() <= tol2 - 0.5 * (b - a) {
            return Ok(Minimum {
                arg: x,
                value: fx,
                iterations: iter,
            });
        }

        let mut golden = true;
        if e.abs() > tol1 {
            // Parabola through (v, fv), (w, fw), (x, fx).
            let r = (x - w) * (fx - fv);
            let mut q = (x - v) * (fx - fw);
            let mut p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if q > 0.0 {
                p = -p;
            } else {
                q = -q;
            }
            let e_prev = e;
            e = d;
            if p.abs() < (0.5 * q * e_prev).abs() && p > q * (a - x) && p < q * (b - x) {
                d = p / q;
                let u = x + d;
                if (u - a) < tol2 || (b - u) < tol2 {
                    d = tol1.copysign(xm - x);
                }
                golden = false;
            }
        }
        if golden {
            e = if x >= xm { a - x } else { b - x };
            d = GOLDEN * e;
        }

        let u = if d.abs() >= tol1 {
            x + d
        } else {
            x + tol1.copysign(d)
        };
        let fu = eval(u);

        if fu <= fx {
            if u >= x {
                a = x;
            } else {
                b = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if u < x {
                a = u;
            } else {
                b = u;
            }
            if fu <= fw || w == x {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if fu <= fv || v == x || v == w {
                v = u;
                fv = fu;
            }
        }
    }
    Err(Error::IterationLimit(max_iterations))
}
