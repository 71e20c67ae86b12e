//! Characteristic polynomials and real-rooted polynomial solving.
//!
//! Coefficients are stored lowest degree first: `c[0] + c[1] x + … + c[d] x^d`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Characteristic polynomial det(xI − A) of a square matrix, by
/// Faddeev–LeVerrier. The result is monic.
pub fn char_poly(a: &[Vec<Complex64>]) -> Vec<Complex64> {
    let n = a.len();
    let zero = Complex64::new(0.0, 0.0);
    let mut coeffs = vec![zero; n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut m = vec![vec![zero; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![zero; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| a[i][l] * m[l][j]).sum();
            }
            next[i][i] += coeffs[n - k + 1];
        }
        m = next;
        let tr: Complex64 = (0..n)
            .map(|i| (0..n).map(|l| a[i][l] * m[l][i]).sum::<Complex64>())
            .sum();
        coeffs[n - k] = -tr / k as f64;
    }
    coeffs
}

pub fn eval(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci)
}

/// Value, first and second derivative by Horner.
fn eval2(c: &[f64], x: f64) -> (f64, f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    let mut ddp = 0.0;
    for &ci in c.iter().rev() {
        ddp = ddp * x + 2.0 * dp;
        dp = dp * x + p;
        p = p * x + ci;
    }
    (p, dp, ddp)
}

/// Divide by (x − r); the remainder is dropped.
fn deflate(c: &[f64], r: f64) -> Vec<f64> {
    let d = c.len() - 1;
    let mut q = vec![0.0; d];
    let mut carry = 0.0;
    for i in (1..=d).rev() {
        carry = carry * r + c[i];
        q[i - 1] = carry;
    }
    q
}

const LAGUERRE_ITERS: usize = 200;

/// One root of a real-rooted polynomial by Laguerre's method, which
/// converges from any real start when every root is real.
fn laguerre(c: &[f64], start: f64) -> f64 {
    let n = (c.len() - 1) as f64;
    let mut x = start;
    for _ in 0..LAGUERRE_ITERS {
        let (p, dp, ddp) = eval2(c, x);
        if p == 0.0 {
            return x;
        }
        let g = dp / p;
        let h = g * g - ddp / p;
        // A slightly negative discriminant only arises from rounding when
        // two roots nearly coincide.
        let disc = ((n - 1.0) * (n * h - g * g)).max(0.0).sqrt();
        let denom = if g >= 0.0 { g + disc } else { g - disc };
        if denom == 0.0 {
            return x;
        }
        let step = n / denom;
        x -= step;
        if step.abs() <= f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
            return x;
        }
    }
    x
}

/// All roots of a polynomial known to have only real roots, with
/// multiplicity, each polished against the undeflated polynomial. Fails if
/// any root leaves a residual above `max_residual`.
pub fn real_roots(c: &[f64], max_residual: f64) -> Result<Vec<f64>> {
    let mut c = c.to_vec();
    while c.len() > 1 && *c.last().unwrap() == 0.0 {
        c.pop();
    }
    if c.len() <= 1 {
        return Ok(Vec::new());
    }
    let lead = *c.last().unwrap();
    let monic: Vec<f64> = c.iter().map(|x| x / lead).collect();
    let mut work = monic.clone();
    let mut roots = Vec::with_capacity(monic.len() - 1);
    while work.len() > 2 {
        let r = laguerre(&work, 0.0);
        roots.push(r);
        work = deflate(&work, r);
    }
    roots.push(-work[0] / work[1]);
    for r in roots.iter_mut() {
        // Newton polish on the original, kept only while it helps.
        for _ in 0..4 {
            let (p, dp, _) = eval2(&monic, *r);
            if dp == 0.0 {
                break;
            }
            let cand = *r - p / dp;
            if eval(&monic, cand).abs() < p.abs() {
                *r = cand;
            } else {
                break;
            }
        }
        let res = eval(&monic, *r).abs();
        if !res.is_finite() || res > max_residual {
            return Err(Error::RootFinding(format!(
                "root {r:e} has residual {res:e}"
            )));
        }
    }
    Ok(roots)
}
