//! One-magnon Schur-Weyl states.
//!
//! For a ring of N nodes the single-deviation sector is spanned by the node
//! kets |1⟩ … |N⟩. Its irreducible basis is labelled by the row tableau
//! (uniform amplitudes 1/√N) and by the hook tableaux with second-row
//! entry `s ∈ 2..=N`:
//!
//! ```text
//! ⟨j|y_s⟩ = −1/√((s−1)s)   j < s
//!         =  √((s−1)/s)    j = s
//!         =  0             j > s
//! ```
//!
//! Amplitudes are kept exactly as `±√(p/q)` next to their f64 value. Node
//! indices are 1-based at every public boundary.

use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tableaux::StandardYoungTableau;
use crate::tolerances;

/// Exact real amplitude `sign · √(p/q)` with `p/q` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactAmplitude {
    sign: i8,
    p: u64,
    q: u64,
}

impl ExactAmplitude {
    pub const ZERO: ExactAmplitude = ExactAmplitude {
        sign: 0,
        p: 0,
        q: 1,
    };

    /// `sign · √(p/q)`; the sign is forced to 0 when `p = 0`.
    pub fn new(sign: i8, p: u64, q: u64) -> Self {
        assert!(q > 0, "denominator must be positive");
        if p == 0 || sign == 0 {
            return Self::ZERO;
        }
        let g = p.gcd(&q);
        ExactAmplitude {
            sign: sign.signum(),
            p: p / g,
            q: q / g,
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn value(&self) -> f64 {
        f64::from(self.sign) * (self.p as f64 / self.q as f64).sqrt()
    }

    /// Exact square, `p/q`.
    pub fn squared(&self) -> (u64, u64) {
        (self.p, self.q)
    }

    /// Magnitude as `a√b/c` with `b` squarefree, e.g. `√3/2`, `2√5/5`, `1/2`.
    pub fn render_magnitude(&self) -> String {
        if self.sign == 0 {
            return "0".to_string();
        }
        let (a, b, c) = radical_form(self.p, self.q);
        let mut out = String::new();
        if b == 1 {
            out.push_str(&a.to_string());
        } else {
            if a != 1 {
                out.push_str(&a.to_string());
            }
            out.push('√');
            out.push_str(&b.to_string());
        }
        if c != 1 {
            out.push('/');
            out.push_str(&c.to_string());
        }
        out
    }
}

/// √(p/q) = a√b / c with b squarefree and gcd(a, c) = 1.
fn radical_form(p: u64, q: u64) -> (u64, u64, u64) {
    let mut rest = p * q;
    let mut a = 1u64;
    let mut f = 2u64;
    while f * f <= rest {
        while rest.is_multiple_of(f * f) {
            rest /= f * f;
            a *= f;
        }
        f += 1;
    }
    let g = a.gcd(&q);
    (a / g, rest, q / g)
}

impl fmt::Display for ExactAmplitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            f.write_str("−")?;
        }
        f.write_str(&self.render_magnitude())
    }
}

impl Serialize for ExactAmplitude {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ExactAmplitude", 4)?;
        st.serialize_field("sign", &self.sign)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("float", &self.value())?;
        st.end()
    }
}

/// Which basis vector of the one-magnon sector a tableau names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MagnonLabel {
    /// Shape (N): the uniform superposition.
    Row,
    /// Shape (N−1,1) with this second-row entry.
    SecondRow(usize),
}

impl MagnonLabel {
    /// Classify `y` as a label for the `n`-node ring.
    pub fn from_tableau(n: usize, y: &StandardYoungTableau) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSize { n, min: 2 });
        }
        if y.size() != n {
            return Err(Error::InvalidLabel(format!(
                "tableau {y} has {} boxes, expected {n}",
                y.size()
            )));
        }
        match y.shape().parts() {
            [m] if *m == n => Ok(MagnonLabel::Row),
            [a, 1] if *a == n - 1 => Ok(MagnonLabel::SecondRow(y.rows()[1][0])),
            other => Err(Error::InvalidLabel(format!(
                "shape {other:?} is neither ({n}) nor ({},1)",
                n - 1
            ))),
        }
    }

    pub fn tableau(self, n: usize) -> Result<StandardYoungTableau> {
        match self {
            MagnonLabel::Row => {
                if n < 2 {
                    return Err(Error::InvalidSize { n, min: 2 });
                }
                Ok(StandardYoungTableau::row_tableau(n))
            }
            MagnonLabel::SecondRow(s) => StandardYoungTableau::hook_tableau(n, s)
                .map_err(|e| Error::InvalidLabel(e.to_string())),
        }
    }

    /// All N labels in basis order: row first, then s = 2..=N.
    pub fn all(n: usize) -> Vec<MagnonLabel> {
        std::iter::once(MagnonLabel::Row)
            .chain((2..=n).map(MagnonLabel::SecondRow))
            .collect()
    }

    /// Amplitude on node `j`.
    pub fn amplitude(self, n: usize, j: usize) -> ExactAmplitude {
        let n64 = n as u64;
        let j64 = j as u64;
        match self {
            MagnonLabel::Row => ExactAmplitude::new(1, 1, n64),
            MagnonLabel::SecondRow(s) => {
                let s = s as u64;
                if j64 < s {
                    ExactAmplitude::new(-1, 1, (s - 1) * s)
                } else if j64 == s {
                    ExactAmplitude::new(1, s - 1, s)
                } else {
                    ExactAmplitude::ZERO
                }
            }
        }
    }
}

fn check_node(n: usize, j: usize) -> Result<()> {
    if (1..=n).contains(&j) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("node {j} outside 1..={n}")))
    }
}

/// Exact ⟨j|λ y⟩.
pub fn amplitude_exact(n: usize, y: &StandardYoungTableau, j: usize) -> Result<ExactAmplitude> {
    let label = MagnonLabel::from_tableau(n, y)?;
    check_node(n, j)?;
    Ok(label.amplitude(n, j))
}

/// ⟨j|λ y⟩ as f64.
pub fn amplitude(n: usize, y: &StandardYoungTableau, j: usize) -> Result<f64> {
    amplitude_exact(n, y, j).map(|a| a.value())
}

/// A one-magnon basis state with its amplitudes over the node kets.
#[derive(Debug, Clone, PartialEq)]
pub struct OneMagnonState {
    n: usize,
    label: StandardYoungTableau,
    kind: MagnonLabel,
    exact: Vec<ExactAmplitude>,
    values: Vec<f64>,
}

pub fn build_state(n: usize, y: &StandardYoungTableau) -> Result<OneMagnonState> {
    let kind = MagnonLabel::from_tableau(n, y)?;
    let exact: Vec<ExactAmplitude> = (1..=n).map(|j| kind.amplitude(n, j)).collect();
    let values = exact.iter().map(ExactAmplitude::value).collect();
    Ok(OneMagnonState {
        n,
        label: y.clone(),
        kind,
        exact,
        values,
    })
}

impl OneMagnonState {
    pub fn from_label(n: usize, label: MagnonLabel) -> Result<Self> {
        build_state(n, &label.tableau(n)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &StandardYoungTableau {
        &self.label
    }

    pub fn kind(&self) -> MagnonLabel {
        self.kind
    }

    pub fn exact_amplitudes(&self) -> &[ExactAmplitude] {
        &self.exact
    }

    /// Amplitudes indexed by node − 1.
    pub fn amplitudes(&self) -> &[f64] {
        &self.values
    }

    /// Amplitude on the 1-based node `j`.
    pub fn at(&self, j: usize) -> f64 {
        self.values[j - 1]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|a| a * a).sum()
    }

    /// The expansion over node kets, grouping equal coefficients:
    /// `√3/2 |4⟩ − √3/6 (|1⟩+|2⟩+|3⟩)`.
    pub fn render_expansion(&self) -> String {
        fn kets(nodes: impl Iterator<Item = usize>) -> String {
            let ks: Vec<String> = nodes.map(|j| format!("|{j}⟩")).collect();
            if ks.len() == 1 {
                ks[0].clone()
            } else {
                format!("({})", ks.join("+"))
            }
        }
        match self.kind {
            MagnonLabel::Row => format!("{} {}", self.exact[0], kets(1..=self.n)),
            MagnonLabel::SecondRow(s) => format!(
                "{} |{s}⟩ − {} {}",
                self.exact[s - 1],
                self.exact[0].render_magnitude(),
                kets(1..s)
            ),
        }
    }

    /// `|label⟩ = expansion`.
    pub fn render_line(&self) -> String {
        format!(
            "|{}⟩ = {}",
            self.label.render_inline(),
            self.render_expansion()
        )
    }
}

impl Serialize for OneMagnonState {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("OneMagnonState", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("label", &self.label)?;
        st.serialize_field("amplitudes", &self.exact)?;
        st.end()
    }
}

/// Index of the weight-one word with its deviation at `node`: node 1 is the
/// most significant bit.
pub fn basis_index(n: usize, node: usize) -> usize {
    1 << (n - node)
}

/// A vector in the full 2^N computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct FullStateVector {
    n: usize,
    entries: Vec<Complex64>,
}

impl FullStateVector {
    /// Wrap raw entries; the length must be 2^n and the norm 1.
    pub fn new(n: usize, entries: Vec<Complex64>) -> Result<Self> {
        if n >= usize::BITS as usize || entries.len() != 1usize << n {
            return Err(Error::InvalidInput(format!(
                "{} entries do not form a {n}-qubit state",
                entries.len()
            )));
        }
        let norm: f64 = entries.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > tolerances::EXACT_F64 {
            return Err(Error::InvalidInput(format!(
                "state has squared norm {norm}, expected 1"
            )));
        }
        Ok(FullStateVector { n, entries })
    }

    /// The basis state |i_1 … i_n⟩ written as a bit string, node 1 first.
    pub fn basis(bits: &str) -> Result<Self> {
        let n = bits.len();
        let idx = usize::from_str_radix(bits, 2)
            .map_err(|e| Error::Parse(format!("basis word {bits:?}: {e}")))?;
        let mut entries = vec![Complex64::new(0.0, 0.0); 1 << n];
        entries[idx] = Complex64::new(1.0, 0.0);
        Ok(FullStateVector { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }
}

/// Check `n` against a brute-force cap.
pub fn check_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(tolerances::MAX_BRUTE_FORCE_CAP);
    if n > cap {
        Err(Error::ResourceLimit { n, cap })
    } else {
        Ok(())
    }
}

/// Embed a one-magnon state in the 2^N tensor space.
pub fn embed_full(state: &OneMagnonState, cap: usize) -> Result<FullStateVector> {
    let n = state.n();
    check_cap(n, cap)?;
    let mut entries = vec![Complex64::new(0.0, 0.0); 1 << n];
    for (j, &a) in (1..=n).zip(state.amplitudes()) {
        entries[basis_index(n, j)] = Complex64::new(a, 0.0);
    }
    Ok(FullStateVector { n, entries })
}

/// Pairwise inner products of the N basis states, in [`MagnonLabel::all`] order.
pub fn gram_matrix(n: usize) -> Result<Vec<Vec<f64>>> {
    let states = MagnonLabel::all(n)
        .into_iter()
        .map(|l| OneMagnonState::from_label(n, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(states
        .iter()
        .map(|a| {
            states
                .iter()
                .map(|b| {
                    a.amplitudes()
                        .iter()
                        .zip(b.amplitudes())
                        .map(|(x, y)| x * y)
                        .sum()
                })
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hook(n: usize, s: usize) -> StandardYoungTableau {
        StandardYoungTableau::hook_tableau(n, s).unwrap()
    }

    #[test]
    fn five_node_amplitudes() {
        let y4 = hook(5, 4);
        assert!((amplitude(5, &y4, 4).unwrap() - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert_eq!(amplitude(5, &y4, 5).unwrap(), 0.0);
        let row = StandardYoungTableau::row_tableau(5);
        for j in 1..=5 {
            assert!((amplitude(5, &row, j).unwrap() - 5f64.sqrt() / 5.0).abs() < 1e-15);
        }
    }

    #[test]
    fn amplitude_errors() {
        let y = hook(5, 4);
        assert!(matches!(amplitude(6, &y, 1), Err(Error::InvalidLabel(_))));
        assert!(matches!(amplitude(5, &y, 0), Err(Error::InvalidInput(_))));
        let odd = StandardYoungTableau::new(vec![vec![1, 2, 5], vec![3, 4]]).unwrap();
        assert!(matches!(amplitude(5, &odd, 1), Err(Error::InvalidLabel(_))));
    }

    #[test]
    fn built_states() {
        let s = build_state(5, &hook(5, 2)).unwrap();
        let h = 2f64.sqrt() / 2.0;
        let want = [-h, h, 0.0, 0.0, 0.0];
        for (a, b) in s.amplitudes().iter().zip(want) {
            assert!((a - b).abs() < 1e-15);
        }
        let two = build_state(2, &StandardYoungTableau::row_tableau(2)).unwrap();
        assert!(two
            .amplitudes()
            .iter()
            .all(|a| (a - 0.5f64.sqrt()).abs() < 1e-15));
        let eight = build_state(8, &hook(8, 5)).unwrap();
        assert!((eight.norm_sqr() - 1.0).abs() < tolerances::EXACT_F64);
    }

    #[test]
    fn exact_norm_is_one() {
        // Σ p/q over the amplitudes, in exact rational arithmetic.
        for n in 2..=14 {
            for label in MagnonLabel::all(n) {
                let st = OneMagnonState::from_label(n, label).unwrap();
                let sum = st.exact_amplitudes().iter().fold(
                    num_rational::Ratio::new(0u64, 1),
                    |acc, a| {
                        let (p, q) = a.squared();
                        acc + num_rational::Ratio::new(p, q)
                    },
                );
                assert_eq!(sum, num_rational::Ratio::from_integer(1), "n={n} {label:?}");
            }
        }
    }

    #[test]
    fn radical_rendering() {
        let cases = [
            ((1, 1, 2), "√2/2"),
            ((1, 3, 4), "√3/2"),
            ((-1, 1, 12), "−√3/6"),
            ((1, 2, 3), "√6/3"),
            ((-1, 1, 6), "−√6/6"),
            ((1, 4, 5), "2√5/5"),
            ((-1, 1, 20), "−√5/10"),
            ((1, 1, 5), "√5/5"),
            ((1, 1, 4), "1/2"),
            ((1, 1, 1), "1"),
            ((0, 1, 3), "0"),
        ];
        for ((sign, p, q), want) in cases {
            assert_eq!(ExactAmplitude::new(sign, p, q).to_string(), want);
        }
    }

    #[test]
    fn expansions() {
        let line = |n, l| OneMagnonState::from_label(n, l).unwrap().render_expansion();
        assert_eq!(
            line(5, MagnonLabel::SecondRow(4)),
            "√3/2 |4⟩ − √3/6 (|1⟩+|2⟩+|3⟩)"
        );
        assert_eq!(line(5, MagnonLabel::SecondRow(2)), "√2/2 |2⟩ − √2/2 |1⟩");
        assert_eq!(line(2, MagnonLabel::Row), "√2/2 (|1⟩+|2⟩)");
    }

    #[test]
    fn embedding() {
        let two = OneMagnonState::from_label(2, MagnonLabel::Row).unwrap();
        let full = embed_full(&two, 14).unwrap();
        let h = 0.5f64.sqrt();
        let re: Vec<f64> = full.entries().iter().map(|z| z.re).collect();
        assert_eq!(re, vec![0.0, h, h, 0.0]);
        let three = OneMagnonState::from_label(5, MagnonLabel::SecondRow(3)).unwrap();
        let full = embed_full(&three, 14).unwrap();
        assert_eq!(full.entries().iter().filter(|z| z.norm() > 0.0).count(), 3);
        assert!((full.norm_sqr() - 1.0).abs() < tolerances::EXACT_F64);
        for (i, z) in full.entries().iter().enumerate() {
            if z.norm() > 0.0 {
                assert_eq!(i.count_ones(), 1);
            }
        }
        let big = OneMagnonState::from_label(15, MagnonLabel::Row).unwrap();
        assert_eq!(
            embed_full(&big, 14),
            Err(Error::ResourceLimit { n: 15, cap: 14 })
        );
    }

    #[test]
    fn gram_is_identity() {
        for n in [2, 5, 12] {
            let g = gram_matrix(n).unwrap();
            for (i, row) in g.iter().enumerate() {
                for (k, &x) in row.iter().enumerate() {
                    let want = if i == k { 1.0 } else { 0.0 };
                    assert!(
                        (x - want).abs() < tolerances::EXACT_F64,
                        "n={n} ({i},{k}) {x}"
                    );
                }
            }
        }
    }

    #[test]
    fn sign_and_support_structure() {
        for n in 2..=14 {
            for s in 2..=n {
                let st = OneMagnonState::from_label(n, MagnonLabel::SecondRow(s)).unwrap();
                let a = st.amplitudes();
                assert!(a[s - 1] > 0.0);
                assert!(a[..s - 1].iter().all(|&x| x < 0.0 && x == a[0]));
                assert!(a[s..].iter().all(|&x| x == 0.0));
            }
        }
    }

    #[test]
    fn basis_has_full_rank() {
        // Gaussian elimination on the N×N amplitude matrix.
        for n in 2..=14 {
            let mut m: Vec<Vec<f64>> = MagnonLabel::all(n)
                .into_iter()
                .map(|l| {
                    OneMagnonState::from_label(n, l)
                        .unwrap()
                        .amplitudes()
                        .to_vec()
                })
                .collect();
            let mut rank = 0;
            for col in 0..n {
                let Some(piv) =
                    (rank..n).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
                else {
                    break;
                };
                if m[piv][col].abs() < 1e-12 {
                    continue;
                }
                m.swap(rank, piv);
                for r in rank + 1..n {
                    let f = m[r][col] / m[rank][col];
                    for c in col..n {
                        m[r][c] -= f * m[rank][c];
                    }
                }
                rank += 1;
            }
            assert_eq!(rank, n);
        }
    }

    #[test]
    fn json_schema() {
        let st = OneMagnonState::from_label(5, MagnonLabel::SecondRow(4)).unwrap();
        let v = serde_json::to_value(&st).unwrap();
        assert_eq!(v["n"], 5);
        assert_eq!(v["label"]["rows"], serde_json::json!([[1, 2, 3, 5], [4]]));
        assert_eq!(v["amplitudes"][3]["sign"], 1);
        assert_eq!(v["amplitudes"][3]["p"], 3);
        assert_eq!(v["amplitudes"][3]["q"], 4);
        assert_eq!(v["amplitudes"][0]["q"], 12);
        assert_eq!(v["amplitudes"][4]["sign"], 0);
    }
}
