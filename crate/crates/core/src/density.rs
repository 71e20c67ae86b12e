//! Two-qubit reduced density matrices.
//!
//! Basis order is (00, 01, 10, 11) with the lower-numbered node in the left
//! slot. Two independent routes are provided:
//!
//! * [`reduced_density_fast`] reads the entries straight off the N
//!   one-magnon amplitudes;
//! * [`reduced_density_oracle`] traces the full 2^N vector by summing over
//!   every assignment of the N − 2 spectator qubits.

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix4};
use crate::states::{FullStateVector, OneMagnonState};
use crate::tolerances;

/// Validated 4×4 density operator of the qubit pair `(j, k)`, `j < k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitDensity {
    pair: (usize, usize),
    matrix: Matrix4,
}

impl TwoQubitDensity {
    /// Accepts a Hermitian, unit-trace, positive semidefinite matrix.
    pub fn new(pair: (usize, usize), matrix: Matrix4) -> Result<Self> {
        if pair.0 >= pair.1 {
            return Err(Error::InvalidPair {
                j: pair.0,
                k: pair.1,
                n: pair.1,
            });
        }
        let herm_err = linalg::max_abs_diff(&matrix, &linalg::adjoint(&matrix));
        if herm_err > tolerances::EXACT_F64 {
            return Err(Error::InvalidInput(format!(
                "matrix is not Hermitian (error {herm_err:e})"
            )));
        }
        let tr = linalg::trace(&matrix);
        if (tr - Complex64::new(1.0, 0.0)).norm() > tolerances::EXACT_F64 {
            return Err(Error::InvalidInput(format!("trace {tr} is not 1")));
        }
        let min = linalg::hermitian_eigen(&matrix)
            .values
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min < -tolerances::PSD_FLOOR {
            return Err(Error::NumericalInstability(format!(
                "density matrix has eigenvalue {min:e}"
            )));
        }
        Ok(TwoQubitDensity { pair, matrix })
    }

    pub fn pair(&self) -> (usize, usize) {
        self.pair
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.matrix
    }

    /// Reduced state of the left (`first = true`) or right qubit.
    pub fn marginal(&self, first: bool) -> [[Complex64; 2]; 2] {
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for a in 0..2 {
            for b in 0..2 {
                for t in 0..2 {
                    let (r, c) = if first {
                        (2 * a + t, 2 * b + t)
                    } else {
                        (2 * t + a, 2 * t + b)
                    };
                    out[a][b] += self.matrix[r][c];
                }
            }
        }
        out
    }
}

impl Serialize for TwoQubitDensity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<Vec<[f64; 2]>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
            .collect();
        let mut st = s.serialize_struct("TwoQubitDensity", 2)?;
        st.serialize_field("pair", &[self.pair.0, self.pair.1])?;
        st.serialize_field("matrix", &rows)?;
        st.end()
    }
}

fn check_pair(n: usize, j: usize, k: usize) -> Result<()> {
    if j == 0 || j >= k || k > n {
        Err(Error::InvalidPair { j, k, n })
    } else {
        Ok(())
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Closed-form R_jk of a one-magnon state.
///
/// ρ(00,00) = Σ_{m∉{j,k}} a_m², ρ(01,01) = a_k², ρ(10,10) = a_j²,
/// ρ(01,10) = ρ(10,01) = a_j·a_k; every entry touching 11 vanishes.
pub fn reduced_density_fast(state: &OneMagnonState, j: usize, k: usize) -> Result<TwoQubitDensity> {
    check_pair(state.n(), j, k)?;
    let a = state.amplitudes();
    let (aj, ak) = (a[j - 1], a[k - 1]);
    let rest: f64 = a
        .iter()
        .enumerate()
        .filter(|&(m, _)| m != j - 1 && m != k - 1)
        .map(|(_, x)| x * x)
        .sum();
    let mut m = linalg::zeros::<4>();
    m[0][0] = re(rest);
    m[1][1] = re(ak * ak);
    m[2][2] = re(aj * aj);
    m[1][2] = re(aj * ak);
    m[2][1] = re(aj * ak);
    TwoQubitDensity::new((j, k), m)
}

/// Raw partial trace keeping qubits `first` and `second` (in that slot
/// order, any two distinct nodes), summing over all 2^(N−2) assignments
/// of the other qubits.
pub fn partial_trace_pair(full: &FullStateVector, first: usize, second: usize) -> Result<Matrix4> {
    let n = full.n();
    if first == second || first == 0 || second == 0 || first > n || second > n {
        return Err(Error::InvalidPair {
            j: first,
            k: second,
            n,
        });
    }
    let bit_a = n - first;
    let bit_b = n - second;
    let mask = (1usize << bit_a) | (1usize << bit_b);
    let amp = full.entries();
    let mut m = linalg::zeros::<4>();
    for rest in 0..amp.len() {
        if rest & mask != 0 {
            continue;
        }
        for row in 0..4 {
            let x = rest | (((row >> 1) & 1) << bit_a) | ((row & 1) << bit_b);
            if amp[x] == Complex64::new(0.0, 0.0) {
                continue;
            }
            for col in 0..4 {
                let y = rest | (((col >> 1) & 1) << bit_a) | ((col & 1) << bit_b);
                m[row][col] += amp[x] * amp[y].conj();
            }
        }
    }
    Ok(m)
}

/// Brute-force R_jk from the full state vector.
pub fn reduced_density_oracle(
    full: &FullStateVector,
    j: usize,
    k: usize,
    cap: usize,
) -> Result<TwoQubitDensity> {
    crate::states::check_cap(full.n(), cap)?;
    check_pair(full.n(), j, k)?;
    TwoQubitDensity::new((j, k), partial_trace_pair(full, j, k)?)
}

/// Swap the two slots: conjugate by the SWAP permutation 01 ↔ 10.
pub fn swap_slots(m: &Matrix4) -> Matrix4 {
    const PERM: [usize; 4] = [0, 2, 1, 3];
    let mut out = linalg::zeros::<4>();
    for r in 0..4 {
        for c in 0..4 {
            out[PERM[r]][PERM[c]] = m[r][c];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{embed_full, MagnonLabel};

    const CAP: usize = tolerances::DEFAULT_BRUTE_FORCE_CAP;

    fn state(n: usize, l: MagnonLabel) -> OneMagnonState {
        OneMagnonState::from_label(n, l).unwrap()
    }

    fn assert_close(a: &Matrix4, b: &Matrix4, tol: f64) {
        let d = linalg::max_abs_diff(a, b);
        assert!(d <= tol, "matrices differ by {d:e}");
    }

    #[test]
    fn two_node_singlet_like_pair() {
        let st = state(5, MagnonLabel::SecondRow(2));
        let rho = reduced_density_fast(&st, 1, 2).unwrap();
        let m = rho.matrix();
        let diag: Vec<f64> = (0..4).map(|i| m[i][i].re).collect();
        for (d, w) in diag.iter().zip([0.0, 0.5, 0.5, 0.0]) {
            assert!((d - w).abs() < 1e-15);
        }
        assert!((m[1][2].re + 0.5).abs() < 1e-15);
        let full = embed_full(&st, CAP).unwrap();
        assert_close(
            m,
            reduced_density_oracle(&full, 1, 2, CAP).unwrap().matrix(),
            1e-15,
        );
    }

    #[test]
    fn symmetric_state_entries() {
        for n in 3..=9 {
            let st = state(n, MagnonLabel::Row);
            let rho = reduced_density_fast(&st, 1, n).unwrap();
            let m = rho.matrix();
            let inv = 1.0 / n as f64;
            assert!((m[0][0].re - (n as f64 - 2.0) * inv).abs() < 1e-14);
            for (r, c) in [(1, 1), (2, 2), (1, 2), (2, 1)] {
                assert!((m[r][c].re - inv).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn spectators_are_in_zero_zero() {
        let st = state(6, MagnonLabel::SecondRow(3));
        let rho = reduced_density_fast(&st, 4, 6).unwrap();
        let mut want = linalg::zeros::<4>();
        want[0][0] = re(1.0);
        assert_close(rho.matrix(), &want, 1e-15);
    }

    #[test]
    fn product_state_oracle() {
        let full = FullStateVector::basis("00000").unwrap();
        for j in 1..=5 {
            for k in j + 1..=5 {
                let rho = reduced_density_oracle(&full, j, k, CAP).unwrap();
                let mut want = linalg::zeros::<4>();
                want[0][0] = re(1.0);
                assert_eq!(rho.matrix(), &want);
            }
        }
    }

    #[test]
    fn hand_traced_pair_without_coherence() {
        // (|1⟩ − |2⟩)/√2 on three nodes, keep (1, 3).
        let h = 0.5f64.sqrt();
        let mut e = vec![Complex64::new(0.0, 0.0); 8];
        e[0b100] = re(h);
        e[0b010] = re(-h);
        let full = FullStateVector::new(3, e).unwrap();
        let rho = reduced_density_oracle(&full, 1, 3, CAP).unwrap();
        let mut want = linalg::zeros::<4>();
        want[0][0] = re(0.5);
        want[2][2] = re(0.5);
        assert_close(rho.matrix(), &want, 1e-15);
    }

    #[test]
    fn fast_equals_oracle_small() {
        for n in 2..=8 {
            for l in MagnonLabel::all(n) {
                let st = state(n, l);
                let full = embed_full(&st, CAP).unwrap();
                for j in 1..=n {
                    for k in j + 1..=n {
                        let fast = reduced_density_fast(&st, j, k).unwrap();
                        let slow = reduced_density_oracle(&full, j, k, CAP).unwrap();
                        assert_close(fast.matrix(), slow.matrix(), tolerances::EXACT_F64);
                        for first in [true, false] {
                            let (a, b) = (fast.marginal(first), slow.marginal(first));
                            for r in 0..2 {
                                for c in 0..2 {
                                    assert!((a[r][c] - b[r][c]).norm() < tolerances::EXACT_F64);
                                }
                            }
                        }
                        assert_eq!(fast.matrix()[3], [Complex64::new(0.0, 0.0); 4]);
                    }
                }
            }
        }
    }

    #[test]
    fn slot_swap_symmetry() {
        let st = state(6, MagnonLabel::SecondRow(5));
        let full = embed_full(&st, CAP).unwrap();
        for j in 1..=6 {
            for k in 1..=6 {
                if j == k {
                    continue;
                }
                let jk = partial_trace_pair(&full, j, k).unwrap();
                let kj = partial_trace_pair(&full, k, j).unwrap();
                assert_close(&swap_slots(&jk), &kj, 1e-15);
            }
        }
    }

    #[test]
    fn invalid_pairs() {
        let st = state(4, MagnonLabel::Row);
        assert!(matches!(
            reduced_density_fast(&st, 2, 2),
            Err(Error::InvalidPair { .. })
        ));
        assert!(matches!(
            reduced_density_fast(&st, 3, 2),
            Err(Error::InvalidPair { .. })
        ));
        assert!(matches!(
            reduced_density_fast(&st, 0, 2),
            Err(Error::InvalidPair { .. })
        ));
        assert!(matches!(
            reduced_density_fast(&st, 1, 5),
            Err(Error::InvalidPair { .. })
        ));
        let full = embed_full(&st, CAP).unwrap();
        assert!(matches!(
            reduced_density_oracle(&full, 1, 2, 3),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn rejects_invalid_matrices() {
        let mut m = linalg::zeros::<4>();
        m[0][0] = re(0.5);
        assert!(TwoQubitDensity::new((1, 2), m).is_err());
        m[1][1] = re(0.5);
        m[0][1] = re(0.1);
        assert!(TwoQubitDensity::new((1, 2), m).is_err());
        m[1][0] = re(0.1);
        assert!(TwoQubitDensity::new((1, 2), m).is_ok());
        let mut neg = linalg::zeros::<4>();
        neg[0][0] = re(1.5);
        neg[1][1] = re(-0.5);
        assert!(matches!(
            TwoQubitDensity::new((1, 2), neg),
            Err(Error::NumericalInstability(_))
        ));
    }

    #[test]
    fn json_layout() {
        let st = state(2, MagnonLabel::Row);
        let rho = reduced_density_fast(&st, 1, 2).unwrap();
        let v = serde_json::to_value(&rho).unwrap();
        assert_eq!(v["pair"], serde_json::json!([1, 2]));
        assert_eq!(v["matrix"].as_array().unwrap().len(), 4);
        assert_eq!(v["matrix"][1][2][1], 0.0);
        assert!((v["matrix"][1][2][0].as_f64().unwrap() - 0.5).abs() < 1e-15);
    }
}
