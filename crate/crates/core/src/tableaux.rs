//! Partitions, standard Young tableaux and two-letter semistandard (Weyl)
//! tableaux, together with the counting identities behind the one-magnon
//! basis labels.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition stored as weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "partition {parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            n: 0,
        }
    }

    /// The one-row shape `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n], n }
        }
    }

    /// The hook shape `(n-1, 1)`, n ≥ 2.
    pub fn hook(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSize { n, min: 2 });
        }
        Ok(Partition {
            parts: vec![n - 1, 1],
            n,
        })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    fn require_two_rows(&self) -> Result<()> {
        if self.parts.len() > 2 {
            Err(Error::OutOfScope(format!(
                "shape {self} has {} rows; only shapes with at most two rows are supported",
                self.parts.len()
            )))
        } else {
            Ok(())
        }
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn shape_of<T>(rows: &[Vec<T>]) -> Result<Partition> {
    Partition::new(rows.iter().map(Vec::len).collect())
}

/// Render rows of a tableau. Inline form joins rows with `/`; entries are
/// concatenated when every entry is a single character, space-separated
/// otherwise. Block form puts one row per line. The empty tableau is `∅`.
pub(crate) fn render_rows<T: fmt::Display>(rows: &[Vec<T>], inline: bool) -> String {
    if rows.is_empty() {
        return "∅".to_string();
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect();
    let compact = cells.iter().flatten().all(|c| c.chars().count() == 1);
    let sep = if compact { "" } else { " " };
    let lines: Vec<String> = cells.iter().map(|r| r.join(sep)).collect();
    lines.join(if inline { "/" } else { "\n" })
}

/// A filling of a partition with 1..n, strictly increasing along rows and
/// down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(try_from = "TableauJson<usize>")]
pub struct StandardYoungTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct TableauJson<T> {
    shape: Vec<usize>,
    rows: Vec<Vec<T>>,
}

impl TryFrom<TableauJson<usize>> for StandardYoungTableau {
    type Error = Error;

    fn try_from(raw: TableauJson<usize>) -> Result<Self> {
        let t = StandardYoungTableau::new(raw.rows)?;
        if t.shape.parts() != raw.shape.as_slice() {
            return Err(Error::InvalidInput(format!(
                "declared shape {:?} does not match rows of shape {}",
                raw.shape, t.shape
            )));
        }
        Ok(t)
    }
}

impl StandardYoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = shape_of(&rows)?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidInput(format!(
                    "tableau {rows:?} is not a filling of 1..{n}"
                )));
            }
            seen[x] = true;
        }
        check_monotone(&rows, |a, b| a < b, |a, b| a < b)?;
        Ok(StandardYoungTableau { shape, rows })
    }

    pub fn empty() -> Self {
        StandardYoungTableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    /// The single-row tableau `1 2 … n`.
    pub fn row_tableau(n: usize) -> Self {
        let rows = if n == 0 {
            Vec::new()
        } else {
            vec![(1..=n).collect()]
        };
        StandardYoungTableau {
            shape: Partition::row(n),
            rows,
        }
    }

    /// The hook tableau of shape `(n-1,1)` with `second` alone in row two.
    pub fn hook_tableau(n: usize, second: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSize { n, min: 2 });
        }
        if !(2..=n).contains(&second) {
            return Err(Error::InvalidInput(format!(
                "second-row entry {second} outside 2..={n}"
            )));
        }
        let first: Vec<usize> = (1..=n).filter(|&x| x != second).collect();
        StandardYoungTableau::new(vec![first, vec![second]])
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn render_inline(&self) -> String {
        render_rows(&self.rows, true)
    }

    pub fn render_block(&self) -> String {
        render_rows(&self.rows, false)
    }
}

impl Serialize for StandardYoungTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("StandardYoungTableau", 2)?;
        st.serialize_field("shape", self.shape.parts())?;
        st.serialize_field("rows", &self.rows)?;
        st.end()
    }
}

impl fmt::Display for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_inline())
    }
}

/// Semistandard tableau over the spin alphabet {0, 1}: weakly increasing
/// rows, strictly increasing columns, so at most two rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Deserialize)]
#[serde(try_from = "TableauJson<u8>")]
pub struct WeylTableau {
    shape: Partition,
    rows: Vec<Vec<u8>>,
}

impl TryFrom<TableauJson<u8>> for WeylTableau {
    type Error = Error;

    fn try_from(raw: TableauJson<u8>) -> Result<Self> {
        let t = WeylTableau::new(raw.rows)?;
        if t.shape.parts() != raw.shape.as_slice() {
            return Err(Error::InvalidInput(format!(
                "declared shape {:?} does not match rows of shape {}",
                raw.shape, t.shape
            )));
        }
        Ok(t)
    }
}

impl WeylTableau {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let shape = shape_of(&rows)?;
        if rows.iter().flatten().any(|&x| x > 1) {
            return Err(Error::InvalidInput(format!(
                "tableau {rows:?} uses letters outside {{0,1}}"
            )));
        }
        if rows.len() > 2 {
            return Err(Error::InvalidInput(format!(
                "a two-letter semistandard tableau has at most 2 rows, got {}",
                rows.len()
            )));
        }
        check_monotone(&rows, |a, b| a <= b, |a, b| a < b)?;
        Ok(WeylTableau { shape, rows })
    }

    pub fn empty() -> Self {
        WeylTableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Number of zeros and ones.
    pub fn content(&self) -> (usize, usize) {
        let ones = self.rows.iter().flatten().filter(|&&x| x == 1).count();
        (self.shape.size() - ones, ones)
    }

    pub fn render_inline(&self) -> String {
        render_rows(&self.rows, true)
    }

    pub fn render_block(&self) -> String {
        render_rows(&self.rows, false)
    }
}

impl Serialize for WeylTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("WeylTableau", 2)?;
        st.serialize_field("shape", self.shape.parts())?;
        st.serialize_field("rows", &self.rows)?;
        st.end()
    }
}

impl fmt::Display for WeylTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_inline())
    }
}

fn check_monotone<T: PartialOrd + fmt::Debug>(
    rows: &[Vec<T>],
    row_ok: impl Fn(&T, &T) -> bool,
    col_ok: impl Fn(&T, &T) -> bool,
) -> Result<()> {
    for row in rows {
        if row.windows(2).any(|w| !row_ok(&w[0], &w[1])) {
            return Err(Error::InvalidInput(format!(
                "row {row:?} violates row monotonicity"
            )));
        }
    }
    for pair in rows.windows(2) {
        for (c, below) in pair[1].iter().enumerate() {
            if !col_ok(&pair[0][c], below) {
                return Err(Error::InvalidInput(format!(
                    "column {} violates column strictness",
                    c + 1
                )));
            }
        }
    }
    Ok(())
}

/// The N one-magnon basis labels: the row tableau, then the hook tableaux
/// with second-row entry 2, 3, …, N.
pub fn one_magnon_tableaux(n: usize) -> Result<Vec<StandardYoungTableau>> {
    if n < 2 {
        return Err(Error::InvalidSize { n, min: 2 });
    }
    let mut out = Vec::with_capacity(n);
    out.push(StandardYoungTableau::row_tableau(n));
    for s in 2..=n {
        out.push(StandardYoungTableau::hook_tableau(n, s)?);
    }
    Ok(out)
}

/// All standard fillings of a shape with at most two rows, generated by
/// placing 1, 2, …, n one at a time wherever the partial shape stays a
/// partition.
pub fn standard_tableaux(shape: &Partition) -> Result<Vec<StandardYoungTableau>> {
    shape.require_two_rows()?;
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|_| Vec::new()).collect();
    place_next(shape.parts(), &mut rows, 1, &mut |rows| {
        let filled: Vec<Vec<usize>> = rows.to_vec();
        out.push(StandardYoungTableau::new(filled).expect("placement keeps tableaux standard"));
    });
    Ok(out)
}

fn place_next(
    parts: &[usize],
    rows: &mut Vec<Vec<usize>>,
    next: usize,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    let n: usize = parts.iter().sum();
    if next > n {
        visit(rows);
        return;
    }
    for r in 0..parts.len() {
        let len = rows[r].len();
        let fits = len < parts[r] && (r == 0 || rows[r - 1].len() > len);
        if fits {
            rows[r].push(next);
            place_next(parts, rows, next + 1, visit);
            rows[r].pop();
        }
    }
}

/// |SYT(λ)| by explicit enumeration of standard fillings.
pub fn count_syt_enumerated(shape: &Partition) -> Result<u128> {
    Ok(standard_tableaux(shape)?.len() as u128)
}

/// |SYT(λ)| by the hook-length formula n! / ∏ hook(c).
pub fn count_syt_hook(shape: &Partition) -> Result<u128> {
    shape.require_two_rows()?;
    let parts = shape.parts();
    let mut hooks: Vec<u128> = Vec::with_capacity(shape.size());
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = parts[r + 1..].iter().filter(|&&l| l > c).count();
            hooks.push((arm + leg + 1) as u128);
        }
    }
    // Reduce after every factor so intermediates stay small.
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (k, h) in (1..=shape.size() as u128).zip(hooks) {
        num = num.checked_mul(k).ok_or_else(|| overflow(shape))?;
        den = den.checked_mul(h).ok_or_else(|| overflow(shape))?;
        let g = num_integer::gcd(num, den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    Ok(num / den)
}

fn overflow(shape: &Partition) -> Error {
    Error::OutOfScope(format!("hook-length count for {shape} overflows u128"))
}

/// Above this size the enumeration reference path is skipped.
pub const SYT_ENUMERATION_LIMIT: usize = 20;

/// |SYT(λ)| for shapes with at most two rows. Up to
/// [`SYT_ENUMERATION_LIMIT`] boxes the hook-length value is cross-checked
/// against explicit enumeration.
pub fn count_syt_two_row(shape: &Partition) -> Result<u128> {
    let fast = count_syt_hook(shape)?;
    if shape.size() <= SYT_ENUMERATION_LIMIT {
        let slow = count_syt_enumerated(shape)?;
        if slow != fast {
            return Err(Error::NumericalInstability(format!(
                "hook-length count {fast} disagrees with enumeration {slow} for {shape}"
            )));
        }
    }
    Ok(fast)
}

/// Kostka number K_{λ,μ} for two-letter content μ = (#zeros, #ones), by
/// enumerating every {0,1} filling of λ.
pub fn kostka_two_letter(shape: &Partition, weight: (usize, usize)) -> Result<u64> {
    shape.require_two_rows()?;
    let n = shape.size();
    if weight.0 + weight.1 != n {
        return Err(Error::InvalidInput(format!(
            "weight ({}, {}) has {} letters but shape {shape} has {n} boxes",
            weight.0,
            weight.1,
            weight.0 + weight.1
        )));
    }
    if n > 24 {
        return Err(Error::OutOfScope(format!(
            "Kostka enumeration over 2^{n} fillings"
        )));
    }
    let parts = shape.parts();
    let mut count = 0;
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != weight.1 {
            continue;
        }
        let mut bit = 0;
        let rows: Vec<Vec<u8>> = parts
            .iter()
            .map(|&len| {
                let row = (0..len).map(|i| ((mask >> (bit + i)) & 1) as u8).collect();
                bit += len;
                row
            })
            .collect();
        if WeylTableau::new(rows).is_ok() {
            count += 1;
        }
    }
    Ok(count)
}

/// Binomial coefficient C(n, k) in u128; `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Dimension of the r-deviation sector of N qubits, C(N, r).
pub fn sector_dimension(n: usize, r: usize) -> Result<u128> {
    if r > n {
        return Err(Error::InvalidInput(format!("r = {r} outside 0..={n}")));
    }
    binomial(n, r).ok_or_else(|| Error::OutOfScope(format!("C({n}, {r}) overflows u128")))
}
