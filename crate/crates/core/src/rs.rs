//! Robinson-Schensted row insertion.
//!
//! The engine is generic over any totally ordered alphabet; the binary
//! [`Word`] front end produces a pair of a [`WeylTableau`] (insertion
//! tableau P) and a [`StandardYoungTableau`] (recording tableau Q).
//!
//! Bumping uses the semistandard rule: a letter `x` displaces the leftmost
//! entry strictly greater than `x`, so equal letters queue up along a row.
//! Under this rule a configuration whose single `1` sits at node `j < N`
//! ends with its second-row Q entry at `j + 1` (the first `0` after the `1`
//! does the bump), and the configuration with the `1` at node `N` yields the
//! one-row tableau.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::tableaux::{render_rows, StandardYoungTableau, WeylTableau};

/// Insertion and recording tableaux after some number of steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snapshot<T> {
    pub letter: T,
    pub p: Vec<Vec<T>>,
    pub q: Vec<Vec<usize>>,
}

/// Output of the generic engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schensted<T> {
    pub p: Vec<Vec<T>>,
    pub q: Vec<Vec<usize>>,
    pub trace: Vec<Snapshot<T>>,
}

/// Row-insert `x` into `p`; returns the row index where a new box appeared.
fn row_insert<T: Ord>(p: &mut Vec<Vec<T>>, mut x: T) -> usize {
    for (r, row) in p.iter_mut().enumerate() {
        let pos = row.partition_point(|y| *y <= x);
        if pos == row.len() {
            row.push(x);
            return r;
        }
        x = std::mem::replace(&mut row[pos], x);
    }
    p.push(vec![x]);
    p.len() - 1
}

/// Schensted insertion of `letters` in order. Snapshots are recorded after
/// every step when `keep_trace` is set.
pub fn schensted<T: Ord + Clone>(letters: &[T], keep_trace: bool) -> Schensted<T> {
    let mut p: Vec<Vec<T>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    let mut trace = Vec::new();
    for (i, x) in letters.iter().enumerate() {
        let r = row_insert(&mut p, x.clone());
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(i + 1);
        if keep_trace {
            trace.push(Snapshot {
                letter: x.clone(),
                p: p.clone(),
                q: q.clone(),
            });
        }
    }
    Schensted { p, q, trace }
}

/// A magnetic configuration: a word over {0 = spin up, 1 = spin down}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|&&x| x > 1) {
            return Err(Error::Parse(format!("letter {bad} is not a spin value")));
        }
        Ok(Word { letters })
    }

    /// The configuration of `n` nodes with a single deviation at node `j`
    /// (1-based).
    pub fn one_magnon(n: usize, j: usize) -> Result<Self> {
        if !(1..=n).contains(&j) {
            return Err(Error::InvalidInput(format!("node {j} outside 1..={n}")));
        }
        let mut letters = vec![0; n];
        letters[j - 1] = 1;
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of spin deviations.
    pub fn weight(&self) -> usize {
        self.letters.iter().filter(|&&x| x == 1).count()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse(format!("'{other}' is not a binary letter"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word { letters })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.letters {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RsStep {
    pub step: usize,
    pub letter: u8,
    pub p: WeylTableau,
    pub q: StandardYoungTableau,
}

/// RS(w) = (P, Q), optionally with the snapshot after every insertion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RsPair {
    pub word: Word,
    pub p: WeylTableau,
    pub q: StandardYoungTableau,
    pub steps: Vec<RsStep>,
}

fn weyl(rows: Vec<Vec<u8>>) -> WeylTableau {
    WeylTableau::new(rows).expect("row insertion of a binary word yields a Weyl tableau")
}

fn standard(rows: Vec<Vec<usize>>) -> StandardYoungTableau {
    StandardYoungTableau::new(rows).expect("recording tableau is standard")
}

impl RsPair {
    /// One line per insertion, then the final pair.
    pub fn render_trace(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&format!(
                "step {}: insert {} → P = {}, Q = {}\n",
                s.step,
                s.letter,
                s.p.render_inline(),
                s.q.render_inline()
            ));
        }
        out.push_str(&format!(
            "result: P = {}, Q = {}\n",
            self.p.render_inline(),
            self.q.render_inline()
        ));
        out
    }
}

/// Run RS on a binary word, keeping the full trace.
pub fn rs_insert_word(word: &Word) -> RsPair {
    rs_insert_word_with(word, true)
}

pub fn rs_insert_word_with(word: &Word, keep_trace: bool) -> RsPair {
    let run = schensted(word.letters(), keep_trace);
    let steps = run
        .trace
        .into_iter()
        .enumerate()
        .map(|(i, s)| RsStep {
            step: i + 1,
            letter: s.letter,
            p: weyl(s.p),
            q: standard(s.q),
        })
        .collect();
    RsPair {
        word: word.clone(),
        p: weyl(run.p),
        q: standard(run.q),
        steps,
    }
}

/// RS image of the one-magnon configuration with its deviation at node `j`,
/// built from the closed form rather than by insertion. No trace is kept.
pub fn rs_one_magnon(n: usize, j: usize) -> Result<RsPair> {
    let word = Word::one_magnon(n, j)?;
    let (p_rows, q) = if j < n {
        (
            vec![vec![0; n - 1], vec![1]],
            StandardYoungTableau::hook_tableau(n, j + 1)?,
        )
    } else {
        let mut row = vec![0; n - 1];
        row.push(1);
        (vec![row], StandardYoungTableau::row_tableau(n))
    };
    Ok(RsPair {
        word,
        p: weyl(p_rows),
        q,
        steps: Vec::new(),
    })
}

/// Recording tableau of every one-magnon configuration of `n` nodes,
/// computed with the insertion engine.
pub fn classify_all_configurations(n: usize) -> Result<BTreeMap<Word, StandardYoungTableau>> {
    classify_all_configurations_with(n, Execution::default())
}

pub fn classify_all_configurations_with(
    n: usize,
    exec: Execution,
) -> Result<BTreeMap<Word, StandardYoungTableau>> {
    if n < 2 {
        return Err(Error::InvalidSize { n, min: 2 });
    }
    let words = (1..=n)
        .map(|j| Word::one_magnon(n, j))
        .collect::<Result<Vec<_>>>()?;
    let pairs = exec.map(words, |w| {
        let q = rs_insert_word_with(&w, false).q;
        (w, q)
    });
    Ok(pairs.into_iter().collect())
}

/// Render a generic tableau inline, for alphabets other than {0,1}.
pub fn render_inline<T: fmt::Display>(rows: &[Vec<T>]) -> String {
    render_rows(rows, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_trace() {
        let pair = rs_insert_word(&w("00100"));
        let snaps: Vec<(String, String)> = pair
            .steps
            .iter()
            .map(|s| (s.p.render_inline(), s.q.render_inline()))
            .collect();
        let expected = [
            ("0", "1"),
            ("00", "12"),
            ("001", "123"),
            ("000/1", "123/4"),
            ("0000/1", "1235/4"),
        ];
        assert_eq!(snaps.len(), 5);
        for (got, want) in snaps.iter().zip(expected) {
            assert_eq!((got.0.as_str(), got.1.as_str()), want);
        }
        assert_eq!(pair.p.rows(), &[vec![0, 0, 0, 0], vec![1]]);
        assert_eq!(pair.q.rows(), &[vec![1, 2, 3, 5], vec![4]]);
    }

    #[test]
    fn empty_word() {
        let pair = rs_insert_word(&w(""));
        assert!(pair.p.rows().is_empty());
        assert!(pair.q.rows().is_empty());
        assert_eq!(pair.render_trace(), "result: P = ∅, Q = ∅\n");
    }

    #[test]
    fn terminal_one_does_not_bump() {
        let pair = rs_insert_word(&w("00001"));
        assert_eq!(pair.p.rows(), &[vec![0, 0, 0, 0, 1]]);
        assert_eq!(pair.q.rows(), &[vec![1, 2, 3, 4, 5]]);
    }

    #[test]
    fn alternating_word_has_two_full_rows() {
        let pair = rs_insert_word(&w("01010"));
        assert_eq!(pair.p.shape().parts(), &[3, 2]);
        assert_eq!(pair.p.rows(), &[vec![0, 0, 0], vec![1, 1]]);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(rs_one_magnon(5, 3).unwrap().q.rows()[1], vec![4]);
        assert_eq!(
            rs_one_magnon(6, 6).unwrap().q,
            StandardYoungTableau::row_tableau(6)
        );
        assert_eq!(
            rs_one_magnon(5, 1).unwrap().q.rows(),
            &[vec![1, 3, 4, 5], vec![2]]
        );
        assert!(matches!(rs_one_magnon(5, 0), Err(Error::InvalidInput(_))));
        assert!(matches!(rs_one_magnon(5, 6), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn two_node_classification() {
        let map = classify_all_configurations(2).unwrap();
        assert_eq!(map[&w("10")].rows(), &[vec![1], vec![2]]);
        assert_eq!(map[&w("01")].rows(), &[vec![1, 2]]);
        assert!(classify_all_configurations(1).is_err());
    }

    #[test]
    fn ten_node_classification_is_injective() {
        let map = classify_all_configurations(10).unwrap();
        let mut images: Vec<_> = map.values().cloned().collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 10);
    }

    #[test]
    fn closed_form_matches_engine() {
        for n in 2..=12 {
            for j in 1..=n {
                let fast = rs_one_magnon(n, j).unwrap();
                let slow = rs_insert_word_with(&Word::one_magnon(n, j).unwrap(), false);
                assert_eq!(fast.p, slow.p, "n={n} j={j}");
                assert_eq!(fast.q, slow.q, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn parse_rejects_non_binary() {
        assert!(matches!("0120".parse::<Word>(), Err(Error::Parse(_))));
        assert!(Word::new(vec![0, 3]).is_err());
    }

    #[test]
    fn generic_alphabet() {
        let run = schensted(&[3, 1, 4, 1, 5, 9, 2, 6], false);
        assert_eq!(run.p, vec![vec![1, 1, 2, 6], vec![3, 4, 5, 9]]);
        assert_eq!(run.q, vec![vec![1, 3, 5, 6], vec![2, 4, 7, 8]]);
        let chars = schensted(&['c', 'a', 'b'], false);
        assert_eq!(render_inline(&chars.p), "ab/c");
    }

    #[test]
    fn json_trace() {
        let pair = rs_insert_word(&w("10"));
        let v = serde_json::to_value(&pair).unwrap();
        assert_eq!(v["word"], "10");
        assert_eq!(v["steps"][1]["p"]["rows"], serde_json::json!([[0], [1]]));
        assert_eq!(v["q"]["shape"], serde_json::json!([1, 1]));
    }

    proptest! {
        #[test]
        fn shapes_agree_after_every_step(bits in proptest::collection::vec(0u8..=1, 0..=16)) {
            let word = Word::new(bits).unwrap();
            let pair = rs_insert_word(&word);
            for (k, s) in pair.steps.iter().enumerate() {
                prop_assert_eq!(s.p.shape(), s.q.shape());
                prop_assert_eq!(s.q.size(), k + 1);
            }
            prop_assert_eq!(pair.p.shape(), pair.q.shape());
            prop_assert_eq!(pair.p.content().1, word.weight());
        }

        #[test]
        fn one_magnon_insertion_structure(n in 2usize..=12, seed in 0usize..1000) {
            let j = seed % n + 1;
            let pair = rs_insert_word(&Word::one_magnon(n, j).unwrap());
            let rows = pair.p.rows();
            if rows.len() == 2 {
                prop_assert_eq!(&rows[1], &vec![1u8]);
                prop_assert!(rows[0].iter().all(|&x| x == 0));
            } else {
                prop_assert_eq!(j, n);
            }
        }
    }
}
