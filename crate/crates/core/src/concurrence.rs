//! Wootters concurrence of a two-qubit density matrix.
//!
//! C = max(√r₁ − √r₂ − √r₃ − √r₄, 0) where r₁ ≥ … ≥ r₄ are the eigenvalues
//! of ρ·ρ̃ and ρ̃ = (σ_y⊗σ_y) ρ̄ (σ_y⊗σ_y). For real symmetric ρ the complex
//! conjugate equals the transpose, so this is the same spin flip as the
//! transpose form.
//!
//! Two eigenvalue routes are kept apart:
//! * [`concurrence_numeric`] diagonalises the Hermitian matrix √ρ ρ̃ √ρ
//!   (same spectrum as ρ·ρ̃) with cyclic Jacobi;
//! * [`concurrence_oracle`] solves the characteristic polynomial of ρ·ρ̃
//!   directly, after peeling off structurally zero rows and columns.

use num_complex::Complex64;
use num_rational::Ratio;
use serde::Serialize;

use crate::density::TwoQubitDensity;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix4};
use crate::poly;
use crate::states::MagnonLabel;
use crate::tableaux::StandardYoungTableau;
use crate::tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConcurrenceResult {
    pub pair: (usize, usize),
    pub value: f64,
    /// √r₁ ≥ √r₂ ≥ √r₃ ≥ √r₄.
    pub sqrt_eigs: [f64; 4],
}

impl ConcurrenceResult {
    /// `scale` bounds the rounding in the eigenvalues; anything below
    /// `RELATIVE_EIGEN_FLOOR * max(scale, largest)` is read as zero.
    fn from_eigenvalues(pair: (usize, usize), mut r: [f64; 4], scale: f64) -> Result<Self> {
        let max = r.iter().copied().fold(scale, f64::max);
        for x in r.iter_mut() {
            if *x < -tolerances::PSD_FLOOR {
                return Err(Error::NumericalInstability(format!(
                    "ρ·ρ̃ has eigenvalue {x:e}; input is not positive semidefinite"
                )));
            }
            if *x <= tolerances::RELATIVE_EIGEN_FLOOR * max {
                *x = 0.0;
            }
        }
        r.sort_by(|a, b| b.total_cmp(a));
        let s = r.map(f64::sqrt);
        let value = (s[0] - s[1] - s[2] - s[3]).max(0.0);
        Ok(ConcurrenceResult {
            pair,
            value,
            sqrt_eigs: s,
        })
    }
}

/// σ_y ⊗ σ_y in the basis (00, 01, 10, 11): anti-diagonal (−1, 1, 1, −1).
fn sigma_yy() -> Matrix4 {
    let mut m = linalg::zeros::<4>();
    m[0][3] = Complex64::new(-1.0, 0.0);
    m[1][2] = Complex64::new(1.0, 0.0);
    m[2][1] = Complex64::new(1.0, 0.0);
    m[3][0] = Complex64::new(-1.0, 0.0);
    m
}

/// ρ̃ = (σ_y⊗σ_y) ρ̄ (σ_y⊗σ_y).
pub fn spin_flip(rho: &TwoQubitDensity) -> Matrix4 {
    spin_flip_matrix(rho.matrix())
}

pub(crate) fn spin_flip_matrix(m: &Matrix4) -> Matrix4 {
    let yy = sigma_yy();
    linalg::mul(&linalg::mul(&yy, &linalg::conj(m)), &yy)
}

pub fn concurrence_numeric(rho: &TwoQubitDensity) -> Result<ConcurrenceResult> {
    let m = rho.matrix();
    let eig = linalg::hermitian_eigen(m);
    if let Some(bad) = eig.values.iter().find(|&&x| x < -tolerances::PSD_FLOOR) {
        return Err(Error::NumericalInstability(format!(
            "ρ has eigenvalue {bad:e}"
        )));
    }
    let floor = tolerances::RELATIVE_EIGEN_FLOOR * eig.values.iter().copied().fold(0.0, f64::max);
    let root = eig.apply(|x| if x <= floor { 0.0 } else { x.sqrt() });
    let flipped = spin_flip_matrix(m);
    let sim = linalg::hermitize(&linalg::mul(&linalg::mul(&root, &flipped), &root));
    let r = linalg::hermitian_eigen(&sim).values;
    let top = eig.values.iter().copied().fold(0.0, f64::max);
    ConcurrenceResult::from_eigenvalues(rho.pair(), r, top * top)
}

/// Drop index sets whose row or column is identically zero; each such index
/// contributes a factor x to det(xI − R).
fn structural_deflation(r: &Matrix4) -> (Vec<usize>, usize) {
    let zero = Complex64::new(0.0, 0.0);
    let mut active: Vec<usize> = (0..4).collect();
    let mut zeros = 0;
    loop {
        let found = active.iter().position(|&i| {
            active.iter().all(|&j| r[i][j] == zero) || active.iter().all(|&j| r[j][i] == zero)
        });
        match found {
            Some(pos) => {
                active.remove(pos);
                zeros += 1;
            }
            None => return (active, zeros),
        }
    }
}

/// Eigenvalues of ρ·ρ̃ from its characteristic polynomial.
pub fn rho_rho_tilde_eigenvalues(rho: &TwoQubitDensity) -> Result<[f64; 4]> {
    let m = rho.matrix();
    let flipped = spin_flip_matrix(m);
    let r = linalg::mul(m, &flipped);
    let (active, mut zeros) = structural_deflation(&r);
    let sub: Vec<Vec<Complex64>> = active
        .iter()
        .map(|&i| active.iter().map(|&j| r[i][j]).collect())
        .collect();
    let mut coeffs: Vec<f64> = poly::char_poly(&sub).iter().map(|z| z.re).collect();
    // Trailing coefficients below working precision stand for zero roots.
    // Rounding in ρ·ρ̃ is set by the size of the factors, not of the product.
    let scale = (frobenius(m) * frobenius(&flipped)).max(f64::MIN_POSITIVE);
    while coeffs.len() > 1 {
        // c_0 is the product of the remaining roots, of order scale^degree.
        let degree = (coeffs.len() - 1) as i32;
        if coeffs[0].abs() <= tolerances::RELATIVE_EIGEN_FLOOR * scale.powi(degree) {
            coeffs.remove(0);
            zeros += 1;
        } else {
            break;
        }
    }
    let roots = poly::real_roots(&coeffs, tolerances::ROOT_RESIDUAL)?;
    let mut out = [0.0; 4];
    for (slot, r) in out
        .iter_mut()
        .zip(roots.into_iter().chain(std::iter::repeat_n(0.0, zeros)))
    {
        *slot = r;
    }
    Ok(out)
}

fn frobenius(m: &Matrix4) -> f64 {
    m.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn concurrence_oracle(rho: &TwoQubitDensity) -> Result<ConcurrenceResult> {
    let m = rho.matrix();
    let scale = frobenius(m) * frobenius(&spin_flip_matrix(m));
    ConcurrenceResult::from_eigenvalues(rho.pair(), rho_rho_tilde_eigenvalues(rho)?, scale)
}

/// Exact pairwise concurrence of a one-magnon basis state:
/// 2/N for the row tableau; for second-row entry s, 2/(s(s−1)) when both
/// nodes precede s, 2/s when k = s, and 0 when k > s.
pub fn concurrence_closed_form_exact(
    n: usize,
    y: &StandardYoungTableau,
    j: usize,
    k: usize,
) -> Result<Ratio<u64>> {
    let label = MagnonLabel::from_tableau(n, y).map_err(|e| Error::InvalidInput(e.to_string()))?;
    if j == 0 || j >= k || k > n {
        return Err(Error::InvalidInput(format!(
            "pair ({j}, {k}) is not 1 ≤ j < k ≤ {n}"
        )));
    }
    Ok(label_concurrence(n, label, k))
}

pub(crate) fn label_concurrence(n: usize, label: MagnonLabel, k: usize) -> Ratio<u64> {
    match label {
        MagnonLabel::Row => Ratio::new(2, n as u64),
        MagnonLabel::SecondRow(s) => {
            let s64 = s as u64;
            if k < s {
                Ratio::new(2, s64 * (s64 - 1))
            } else if k == s {
                Ratio::new(2, s64)
            } else {
                Ratio::from_integer(0)
            }
        }
    }
}

pub fn concurrence_closed_form(
    n: usize,
    y: &StandardYoungTableau,
    j: usize,
    k: usize,
) -> Result<f64> {
    concurrence_closed_form_exact(n, y, j, k).map(ratio_f64)
}

pub fn ratio_f64(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
