#![allow(dead_code)]

use magnon::linalg::{self, Matrix, Matrix4};
use magnon::TwoQubitDensity;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn gaussian(rng: &mut StdRng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// G·G† / tr for a 4×4 complex Gaussian G: full-rank PSD, unit trace.
pub fn random_density(rng: &mut StdRng) -> TwoQubitDensity {
    let mut g = linalg::zeros::<4>();
    for row in g.iter_mut() {
        for z in row.iter_mut() {
            *z = gaussian(rng);
        }
    }
    let mut m = linalg::mul(&g, &linalg::adjoint(&g));
    let tr = linalg::trace(&m).re;
    for row in m.iter_mut() {
        for z in row.iter_mut() {
            *z /= tr;
        }
    }
    TwoQubitDensity::new((1, 2), linalg::hermitize(&m)).expect("random density is valid")
}

/// Haar-ish 2×2 unitary from Euler angles and a global phase.
pub fn random_unitary(rng: &mut StdRng) -> Matrix<2> {
    let tau = std::f64::consts::TAU;
    let (alpha, beta, gamma): (f64, f64, f64) = (
        rng.random::<f64>() * tau,
        rng.random::<f64>() * tau,
        rng.random::<f64>() * tau,
    );
    let theta: f64 = rng.random::<f64>() * std::f64::consts::FRAC_PI_2;
    let e = |phi: f64| Complex64::from_polar(1.0, phi);
    let g = e(alpha);
    [
        [g * e(beta) * theta.cos(), g * e(gamma) * theta.sin()],
        [-g * e(-gamma) * theta.sin(), g * e(-beta) * theta.cos()],
    ]
}

/// (U ⊗ V) ρ (U ⊗ V)†.
pub fn local_rotate(rho: &TwoQubitDensity, u: &Matrix<2>, v: &Matrix<2>) -> TwoQubitDensity {
    let w: Matrix4 = linalg::kron2(u, v);
    let m = linalg::mul(&linalg::mul(&w, rho.matrix()), &linalg::adjoint(&w));
    TwoQubitDensity::new(rho.pair(), linalg::hermitize(&m))
        .expect("unitary conjugation keeps validity")
}
