//! Small dense complex matrices and a cyclic Jacobi eigensolver for
//! Hermitian input.

use num_complex::Complex64;

pub type Matrix<const N: usize> = [[Complex64; N]; N];
pub type Matrix4 = Matrix<4>;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

pub fn zeros<const N: usize>() -> Matrix<N> {
    [[ZERO; N]; N]
}

pub fn identity<const N: usize>() -> Matrix<N> {
    let mut m = zeros();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = ONE;
    }
    m
}

pub fn mul<const N: usize>(a: &Matrix<N>, b: &Matrix<N>) -> Matrix<N> {
    let mut c = zeros();
    for i in 0..N {
        for k in 0..N {
            if a[i][k] == ZERO {
                continue;
            }
            for j in 0..N {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

pub fn adjoint<const N: usize>(a: &Matrix<N>) -> Matrix<N> {
    let mut c = zeros();
    for i in 0..N {
        for j in 0..N {
            c[j][i] = a[i][j].conj();
        }
    }
    c
}

pub fn conj<const N: usize>(a: &Matrix<N>) -> Matrix<N> {
    a.map(|row| row.map(|z| z.conj()))
}

pub fn transpose<const N: usize>(a: &Matrix<N>) -> Matrix<N> {
    let mut c = zeros();
    for i in 0..N {
        for j in 0..N {
            c[j][i] = a[i][j];
        }
    }
    c
}

pub fn trace<const N: usize>(a: &Matrix<N>) -> Complex64 {
    (0..N).map(|i| a[i][i]).sum()
}

/// (A + A†) / 2.
pub fn hermitize<const N: usize>(a: &Matrix<N>) -> Matrix<N> {
    let mut c = zeros();
    for i in 0..N {
        for j in 0..N {
            c[i][j] = (a[i][j] + a[j][i].conj()) * 0.5;
        }
    }
    c
}

pub fn max_abs_diff<const N: usize>(a: &Matrix<N>, b: &Matrix<N>) -> f64 {
    let mut m: f64 = 0.0;
    for i in 0..N {
        for j in 0..N {
            m = m.max((a[i][j] - b[i][j]).norm());
        }
    }
    m
}

/// Kronecker product of two 2×2 matrices.
pub fn kron2(a: &Matrix<2>, b: &Matrix<2>) -> Matrix4 {
    let mut c = zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    c[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    c
}

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen<const N: usize> {
    /// Eigenvalues, unsorted, matching the columns of `vectors`.
    pub values: [f64; N],
    /// Unitary whose columns are the eigenvectors.
    pub vectors: Matrix<N>,
    pub sweeps: usize,
}

const MAX_SWEEPS: usize = 64;

/// Cyclic Jacobi: sweep over all (p, q), annihilating each off-diagonal
/// entry with a complex Givens rotation, until the off-diagonal mass is
/// negligible against the diagonal.
///
/// Only the Hermitian part of `a` is used. Off-diagonal entries that are
/// exactly zero are never rotated, so block structure is preserved.
pub fn hermitian_eigen<const N: usize>(a: &Matrix<N>) -> HermitianEigen<N> {
    let mut a = hermitize(a);
    let mut v = identity::<N>();
    let mut sweeps = 0;
    for sweep in 0..MAX_SWEEPS {
        sweeps = sweep;
        let off: f64 = (0..N)
            .flat_map(|i| (0..N).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j].norm_sqr())
            .sum();
        let diag: f64 = (0..N).map(|i| a[i][i].re * a[i][i].re).sum();
        if off == 0.0 || off <= f64::EPSILON * f64::EPSILON * diag * 1e-4 {
            break;
        }
        for p in 0..N {
            for q in p + 1..N {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    let mut values = [0.0; N];
    for (i, x) in values.iter_mut().enumerate() {
        *x = a[i][i].re;
    }
    HermitianEigen {
        values,
        vectors: v,
        sweeps,
    }
}

fn rotate<const N: usize>(a: &mut Matrix<N>, v: &mut Matrix<N>, p: usize, q: usize) {
    let apq = a[p][q];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    // Phase e^{iφ} = a_pq/|a_pq| turns the 2×2 block real; then a real
    // rotation with t = tan θ zeroes it.
    let phase = apq / mag;
    let theta = (a[q][q].re - a[p][p].re) / (2.0 * mag);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    // J = diag(1, e^{-iφ}) · [[c, s], [-s, c]] acting on (p, q).
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;
    for k in 0..N {
        let akp = a[k][p];
        let akq = a[k][q];
        a[k][p] = akp * jpp + akq * jqp;
        a[k][q] = akp * jpq + akq * jqq;
    }
    for k in 0..N {
        let apk = a[p][k];
        let aqk = a[q][k];
        a[p][k] = jpp.conj() * apk + jqp.conj() * aqk;
        a[q][k] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[p][q] = ZERO;
    a[q][p] = ZERO;
    a[p][p] = Complex64::new(a[p][p].re, 0.0);
    a[q][q] = Complex64::new(a[q][q].re, 0.0);
    for row in v.iter_mut() {
        let vkp = row[p];
        let vkq = row[q];
        row[p] = vkp * jpp + vkq * jqp;
        row[q] = vkp * jpq + vkq * jqq;
    }
}

impl<const N: usize> HermitianEigen<N> {
    /// V · diag(f(λ)) · V†.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> Matrix<N> {
        let mut out = zeros();
        for (k, &lam) in self.values.iter().enumerate() {
            let w = f(lam);
            if w == 0.0 {
                continue;
            }
            for i in 0..N {
                for j in 0..N {
                    out[i][j] += self.vectors[i][k] * self.vectors[j][k].conj() * w;
                }
            }
        }
        out
    }

    /// Eigenvalues sorted in decreasing order.
    pub fn sorted_values(&self) -> [f64; N] {
        let mut v = self.values;
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }
}
