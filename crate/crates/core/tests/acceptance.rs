//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails.
//!
//! `cargo test -p wrightfn --test acceptance [-- N ...]` runs all criteria or
//! only the listed numbers.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use statrs::function::erf::{erf, erfc};

use wrightfn::brent::brent_min;
use wrightfn::contour::{node_count_estimate, strip_search_interval};
use wrightfn::oracle::{
    closed_form_mainardi, gamma, wright_series, MainardiClosedForm, SeriesOptions,
};
use wrightfn::pde::{
    cauchy_solve, signalling_solve, tworod_solve, CauchyProblem, GridFunction, TwoRodConfig,
};
use wrightfn::quad::integrate;
use wrightfn::{
    mainardi_eval, select_contour, trapezoid_sum, wright_eval, EvalPoint, Summation,
    ToleranceProfile, WrightOrder,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn eval_re(lambda: f64, mu: f64, t: f64, x: f64) -> f64 {
    let order = WrightOrder::real(lambda, mu).unwrap();
    wright_eval(order, EvalPoint::new(t, x).unwrap()).unwrap().value.re
}

fn closed_form_accuracy() -> Outcome {
    let xs: Vec<f64> = (0..=20).map(|i| 0.25 * i as f64).collect();
    let max_rel = |kind: MainardiClosedForm| {
        xs.iter()
            .map(|&x| {
                let exact = closed_form_mainardi(kind, x).unwrap();
                let nu = kind.nu();
                let got = eval_re(-nu, 1.0 - nu, 1.0, x);
                ((got - exact) / exact).abs()
            })
            .fold(0.0f64, f64::max)
    };
    let e0 = max_rel(MainardiClosedForm::Exp0);
    let e_half = max_rel(MainardiClosedForm::GaussHalf);
    let e_third = max_rel(MainardiClosedForm::AiryThird);
    outcome(
        e0 <= 1e-12 && e_half <= 1e-12 && e_third <= 1e-10,
        format!(
            "max rel err M_0 {e0:.2e}, M_1/2 {e_half:.2e} (<= 1e-12); M_1/3 {e_third:.2e} (<= 1e-10)"
        ),
    )
}

fn heatmap() -> Outcome {
    let lambdas = [-0.9, -0.7, -0.5, -0.3, -0.1];
    let mut mus = Vec::new();
    for a in [-1.0, 0.0, 0.5, 1.0, 2.0, 3.0] {
        for b in [-1.0, 0.0, 1.0] {
            mus.push(Complex64::new(a, b));
        }
    }
    let boxes: Vec<(f64, Complex64)> = lambdas
        .iter()
        .flat_map(|&l| mus.iter().map(move |&m| (l, m)))
        .collect();
    // (error, oracle available)
    let results: Vec<(f64, bool)> = boxes
        .par_iter()
        .map(|&(lambda, mu)| {
            let order = WrightOrder::new(lambda, mu).unwrap();
            let (mut num, mut den, mut oracle_ok) = (0.0, 0.0, true);
            for i in 0..=20 {
                let x = -5.0 + 0.25 * i as f64;
                let got = wright_eval(order, EvalPoint::new(1.0, x).unwrap()).unwrap().value;
                let s = wright_series(order, Complex64::new(-x.abs(), 0.0), SeriesOptions::default());
                oracle_ok &= s.converged;
                num += (got - s.value).norm_sqr();
                den += s.value.norm_sqr();
            }
            ((num / den).sqrt(), oracle_ok)
        })
        .collect();
    let mut failing = Vec::new();
    let mut worst: f64 = 0.0;
    for (&(lambda, mu), &(err, oracle_ok)) in boxes.iter().zip(&results) {
        let bad = !oracle_ok || !(err <= 1e-9);
        if bad {
            failing.push(format!(
                "({lambda}, {}{:+}i){}",
                mu.re,
                mu.im,
                if oracle_ok { "" } else { "*" }
            ));
        }
        if err.is_finite() {
            worst = worst.max(err);
        } else {
            worst = f64::INFINITY;
        }
    }
    let passed_lambdas: Vec<f64> = lambdas
        .iter()
        .copied()
        .filter(|&l| {
            boxes
                .iter()
                .zip(&results)
                .all(|(b, r)| b.0 != l || (r.1 && r.0 <= 1e-9))
        })
        .collect();
    outcome(
        failing.is_empty(),
        format!(
            "{}/{} boxes within 1e-9 (worst {worst:.2e}); lambdas fully passing {passed_lambdas:?}; failing (* = series oracle not converged): {}",
            boxes.len() - failing.len(),
            boxes.len(),
            if failing.is_empty() { "none".into() } else { failing.join(" ") }
        ),
    )
}

fn parameter_exactness() -> Outcome {
    let tol = ToleranceProfile::new(2.220446e-16, 1e-15).unwrap();
    let mu = Complex64::new(0.5, 0.0);
    let p = select_contour(mu, 1.0, &tol).unwrap();
    let gt = p.gamma * 1.0;
    // Independent closed forms; 30-digit values are h = 0.2039653549, gamma t = 3.8506449473.
    let ell = -(2.220446e-16f64).ln();
    let h_ref = 4.0 * ell / (PI * 225.0);
    let gt_ref = PI * PI * 225.0 / (16.0 * ell);
    let mut pass = p.n_nodes == 15 && (p.step - h_ref).abs() <= 1e-6 && (gt - gt_ref).abs() <= 1e-5;
    let mut worst: f64 = 0.0;
    for t in [1e-3, 1e3] {
        let q = select_contour(mu, t, &tol).unwrap();
        let rel = ((q.gamma * t - gt) / gt).abs();
        worst = worst.max(rel);
        pass &= rel <= 1e-12;
    }
    outcome(
        pass,
        format!(
            "N = {} (15), h = {:.7} ({h_ref:.7}), gamma t = {:.7} ({gt_ref:.7}); gamma t drift over t in {{1e-3, 1e3}}: {worst:.1e}",
            p.n_nodes, p.step, gt
        ),
    )
}

fn optimizer_behaviour() -> Outcome {
    let tol = ToleranceProfile::default();
    let mut prev: Option<(usize, f64)> = None;
    let mut monotone = true;
    let mut worst_gap: f64 = 0.0;
    let mut table = Vec::new();
    for k in 1..=20 {
        let re_mu = 2.0 * k as f64;
        let p = select_contour(Complex64::new(re_mu, 0.0), 1.0, &tol).unwrap();
        if let Some((n, c)) = prev {
            monotone &= p.n_nodes >= n && p.c <= c;
        }
        prev = Some((p.n_nodes, p.c));
        let (a, b) = strip_search_interval(re_mu, &tol).unwrap();
        let m = 10_000;
        let (mut best_c, mut best_n) = (f64::NAN, f64::INFINITY);
        for i in 1..=m {
            let c = a + (b - a) * i as f64 / (m + 1) as f64;
            let n = node_count_estimate(c, re_mu, &tol);
            if n < best_n {
                best_n = n;
                best_c = c;
            }
        }
        // Brent's own answer, recomputed independently of select_contour.
        let brent = brent_min(|c| node_count_estimate(c, re_mu, &tol), a, b, 1e-4).unwrap();
        worst_gap = worst_gap.max((brent.arg - best_c).abs()).max((p.c - best_c).abs());
        table.push(format!("{re_mu}:{}/{:.3}", p.n_nodes, p.c));
    }
    outcome(
        monotone && worst_gap <= 1e-3,
        format!(
            "N nondecreasing and c nonincreasing: {monotone}; max |c_brent - c_grid| = {worst_gap:.1e}; (Re mu:N/c) {}",
            table.join(" ")
        ),
    )
}

fn self_similarity() -> Outcome {
    let lambdas: Vec<f64> = (0..5).map(|i| -0.9 + 0.2 * i as f64).collect();
    let ts: Vec<f64> = (0..5).map(|i| 10f64.powf(-1.0 + 0.5 * i as f64)).collect();
    let xs: Vec<f64> = (0..5).map(|i| 1.25 * i as f64).collect();
    let mut worst: f64 = 0.0;
    let mut worst_mild: f64 = 0.0;
    let mut at = (0.0, 0.0, 0.0, 0.0);
    let mut at_mild = (0.0, 0.0, 0.0, 0.0, 0.0);
    for mu in [0.25, 1.0, 1.75] {
        for &lambda in &lambdas {
            for &t in &ts {
                for &x in &xs {
                    let direct = eval_re(lambda, mu, t, x);
                    let scaled = t.powf(mu - 1.0) * eval_re(lambda, mu, 1.0, x.abs() * t.powf(lambda));
                    let rel = if direct == 0.0 && scaled == 0.0 {
                        0.0
                    } else {
                        ((direct - scaled) / direct).abs()
                    };
                    if !(rel <= worst) {
                        worst = rel;
                        at = (lambda, mu, t, x);
                    }
                    if lambda >= -0.5 - 1e-12 && !(rel <= worst_mild) {
                        worst_mild = rel;
                        at_mild = (lambda, mu, t, x, direct);
                    }
                }
            }
        }
    }
    outcome(
        worst <= 1e-10,
        format!(
            "max rel diff {worst:.2e} at (lambda, mu, t, x) = ({:.1}, {}, {:.3}, {}) (<= 1e-10); over lambda >= -0.5 only: {worst_mild:.2e} at ({:.1}, {}, {:.3}, {}) where |f| = {:.1e}",
            at.0, at.1, at.2, at.3, at_mild.0, at_mild.1, at_mild.2, at_mild.3, at_mild.4.abs()
        ),
    )
}

fn density_normalization() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for nu in [0.25, 0.5, 0.75] {
        let mass = integrate(|z| mainardi_eval(nu, z).unwrap(), 0.0, 20.0, 1e-11);
        let moment = integrate(|z| z * mainardi_eval(nu, z).unwrap(), 0.0, 20.0, 1e-10);
        let e_mass = (mass.value - 1.0).abs();
        let expected = 1.0 / gamma(Complex64::new(1.0 + nu, 0.0)).re;
        let e_moment = (moment.value - expected).abs();
        let ok = e_mass <= 1e-8 && e_moment <= 1e-7;
        pass &= ok;
        parts.push(format!(
            "nu {nu}: |mass - 1| {e_mass:.1e}, |moment - 1/Gamma(1+nu)| {e_moment:.1e}{}",
            if ok { "" } else { " FAIL" }
        ));
    }
    outcome(pass, format!("on [0, 20]: {}", parts.join("; ")))
}

fn square_pulse(x: f64) -> f64 {
    if x.abs() <= 1.0 {
        1.0
    } else {
        0.0
    }
}

fn cauchy_classical() -> Outcome {
    let g = GridFunction::symmetric(5.0, 256, square_pulse).unwrap();
    let problem = CauchyProblem::new(0.5, 1.0, g.clone(), None).unwrap();
    let sol = cauchy_solve(&problem, 1.0).unwrap();
    let max_err = sol
        .u
        .xs()
        .iter()
        .zip(sol.u.values())
        .map(|(&x, &u)| (u - 0.5 * (erf((x + 1.0) / 2.0) - erf((x - 1.0) / 2.0))).abs())
        .fold(0.0f64, f64::max);
    let mut pass = max_err <= 1e-6;
    let mut mass_parts = Vec::new();
    for nu in [0.25, 0.5] {
        let problem = CauchyProblem::new(nu, 1.0, g.clone(), None).unwrap();
        let u = cauchy_solve(&problem, 1.0).unwrap().u;
        let rel = ((u.mass() - g.mass()) / g.mass()).abs();
        pass &= rel <= 1e-6;
        mass_parts.push(format!("nu {nu}: {rel:.1e}"));
    }
    outcome(
        pass,
        format!(
            "n = 256 on [-5, 5): max abs err vs erf solution {max_err:.2e} (<= 1e-6); relative mass defect {} (<= 1e-6)",
            mass_parts.join(", ")
        ),
    )
}

fn signalling_classical() -> Outcome {
    let ts = [0.5, 1.0, 2.0];
    let u = signalling_solve(|_| 1.0, 0.5, 1.0, 1.0, &ts, 1e-10).unwrap();
    let mut worst: f64 = 0.0;
    let mut all_converged = true;
    for (t, q) in ts.iter().zip(&u) {
        worst = worst.max((q.value - erfc(1.0 / (2.0 * t.sqrt()))).abs());
        all_converged &= q.converged;
    }
    outcome(
        worst <= 1e-6 && all_converged,
        format!("max |u - erfc(1/(2 sqrt t))| = {worst:.2e} at t in {{0.5, 1, 2}} (<= 1e-6); quadrature converged: {all_converged}"),
    )
}

fn tworod_identities() -> Outcome {
    let base = TwoRodConfig::default();
    let mut worst_cont: f64 = 0.0;
    for alpha in [0.5, 1.0, 1.5] {
        let cfg = base.with_alpha(alpha).unwrap();
        let right = tworod_solve(&cfg, 0.0, 1.0).unwrap();
        let left = tworod_solve(&cfg, -0.0, 1.0).unwrap();
        worst_cont = worst_cont.max(((right - left) / right).abs());
    }
    let homog = TwoRodConfig::new(1.0, 0.5, 3.0, 3.0, 2.0, 2.0, 1.0).unwrap();
    let mut worst_gauss: f64 = 0.0;
    for t in [0.5, 1.0, 2.0] {
        for i in 0..=20 {
            let x = 0.25 * i as f64;
            let a1 = homog.a1();
            let rho = homog.rho();
            let exact = (-(x - rho).powi(2) / (4.0 * a1 * t)).exp() / (2.0 * (PI * a1 * t).sqrt());
            worst_gauss = worst_gauss.max((tworod_solve(&homog, x, t).unwrap() - exact).abs());
        }
    }
    outcome(
        worst_cont <= 1e-12 && worst_gauss <= 1e-10,
        format!(
            "continuity rel diff {worst_cont:.1e} over alpha in {{0.5, 1, 1.5}} (<= 1e-12); homogeneous limit max abs err {worst_gauss:.1e} (<= 1e-10)"
        ),
    )
}

fn halving_consistency() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_611);
    let tol = ToleranceProfile::default();
    let mut worst_re: f64 = 0.0;
    let mut worst_im: f64 = 0.0;
    for _ in 0..20 {
        let lambda = rng.random_range(-0.9..-0.1);
        let mu = rng.random_range(-1.0..3.0);
        let t = 10f64.powf(rng.random_range(-1.0..1.0));
        let x = rng.random_range(-5.0..5.0);
        let order = WrightOrder::real(lambda, mu).unwrap();
        let point = EvalPoint::new(t, x).unwrap();
        let params = select_contour(order.mu(), t, &tol).unwrap();
        let half = trapezoid_sum(order, point, &params, Summation::Halved).unwrap().value;
        let full = trapezoid_sum(order, point, &params, Summation::Full).unwrap().value;
        worst_re = worst_re.max(((half.re - full.re) / full.re).abs());
        worst_im = worst_im.max((full.im / full.re).abs());
    }
    outcome(
        worst_re <= 1e-13 && worst_im <= 1e-13,
        format!("20 random cases: max rel diff {worst_re:.1e}, max |Im full / Re full| {worst_im:.1e} (<= 1e-13)"),
    )
}

type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "closed-form accuracy", Duration::from_secs(1), closed_form_accuracy),
        (2, "complex-mu heatmap", Duration::from_secs(30), heatmap),
        (3, "parameter-selection exactness", Duration::from_secs(1), parameter_exactness),
        (4, "optimizer behaviour", Duration::from_secs(5), optimizer_behaviour),
        (5, "self-similarity", Duration::from_secs(5), self_similarity),
        (6, "Mainardi density normalization", Duration::from_secs(10), density_normalization),
        (7, "Cauchy solver vs classical limit", Duration::from_secs(2), cauchy_classical),
        (8, "signalling solver vs classical limit", Duration::from_secs(2), signalling_classical),
        (9, "two-rod identities", Duration::from_secs(2), tworod_identities),
        (10, "halved vs full sum", Duration::from_secs(1), halving_consistency),
    ];
    let selected: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = Vec::new();
    for (id, name, budget, run) in criteria {
        if !selected.is_empty() && !selected.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let pass = out.pass && in_time;
        println!(
            "[{}] criterion {id:>2} {name}: {} [{:.2} s, budget {} s{}]",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64(),
            budget.as_secs(),
            if in_time { "" } else { ", over budget" }
        );
        if !pass {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
