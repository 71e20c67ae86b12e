//! Entangled graphs: one vertex per qubit, one weighted edge per pair with
//! nonzero concurrence.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::concurrence::{concurrence_numeric, label_concurrence, ratio_f64};
use crate::density::reduced_density_fast;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::rs::{rs_insert_word_with, Word};
use crate::states::{MagnonLabel, OneMagnonState};
use crate::tableaux::StandardYoungTableau;
use crate::tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeClass {
    /// Bond among the nodes preceding the special node.
    C1,
    /// Bond between the special node and an earlier node.
    C2,
    /// Bond of the fully symmetric state.
    #[serde(rename = "UNIFORM")]
    Uniform,
}

impl EdgeClass {
    fn dot_style(self) -> &'static str {
        match self {
            EdgeClass::C2 => "dotted",
            EdgeClass::C1 | EdgeClass::Uniform => "solid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub j: usize,
    pub k: usize,
    pub weight: f64,
    pub class: EdgeClass,
    /// Exact weight, known in closed-form mode.
    #[serde(skip)]
    pub exact: Option<Ratio<u64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildMode {
    ClosedForm,
    Numeric,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson")]
pub struct EntangledGraph {
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<GraphJson> for EntangledGraph {
    type Error = Error;

    fn try_from(raw: GraphJson) -> Result<Self> {
        EntangledGraph::new(raw.n, raw.edges)
    }
}

impl EntangledGraph {
    /// Edges are sorted by (j, k). Rejects self-loops, repeated pairs,
    /// weights outside (0, 1] and classes whose weights disagree.
    pub fn new(n: usize, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_by_key(|e| (e.j, e.k));
        let mut seen = BTreeSet::new();
        for e in &edges {
            if e.j == 0 || e.j >= e.k || e.k > n {
                return Err(Error::InvalidInput(format!(
                    "edge ({}, {}) on {n} vertices",
                    e.j, e.k
                )));
            }
            if !seen.insert((e.j, e.k)) {
                return Err(Error::InvalidInput(format!(
                    "duplicate edge ({}, {})",
                    e.j, e.k
                )));
            }
            if !(e.weight > 0.0 && e.weight <= 1.0 + tolerances::CONCURRENCE) {
                return Err(Error::InvalidInput(format!(
                    "edge weight {} outside (0, 1]",
                    e.weight
                )));
            }
        }
        for class in [EdgeClass::C1, EdgeClass::C2] {
            let ws: Vec<f64> = edges
                .iter()
                .filter(|e| e.class == class)
                .map(|e| e.weight)
                .collect();
            if let Some(&w0) = ws.first() {
                if ws.iter().any(|w| (w - w0).abs() > tolerances::CONCURRENCE) {
                    return Err(Error::InvalidInput(format!(
                        "{class:?} edges carry different weights"
                    )));
                }
            }
        }
        Ok(EntangledGraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, j: usize, k: usize) -> Option<&Edge> {
        let (j, k) = (j.min(k), j.max(k));
        self.edges.iter().find(|e| e.j == j && e.k == k)
    }

    pub fn count_class(&self, class: EdgeClass) -> usize {
        self.edges.iter().filter(|e| e.class == class).count()
    }

    /// Vertices touched by no edge.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        let touched: BTreeSet<usize> = self.edges.iter().flat_map(|e| [e.j, e.k]).collect();
        (1..=self.n).filter(|v| !touched.contains(v)).collect()
    }

    /// Relabel vertex `v` as `perm[v - 1]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<EntangledGraph> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=self.n).collect::<Vec<_>>() {
            return Err(Error::InvalidInput(format!(
                "{perm:?} is not a permutation of 1..={}",
                self.n
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (perm[e.j - 1], perm[e.k - 1]);
                Edge {
                    j: a.min(b),
                    k: a.max(b),
                    ..e.clone()
                }
            })
            .collect();
        EntangledGraph::new(self.n, edges)
    }

    /// Graphviz rendering: C1 and uniform bonds solid, C2 bonds dotted,
    /// labelled with the exact weight when known.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "'"));
        for v in 1..=self.n {
            let _ = writeln!(out, "  {v};");
        }
        for e in &self.edges {
            let label = match e.exact {
                Some(r) => format_ratio(r),
                None => format_sig(e.weight),
            };
            let _ = writeln!(
                out,
                "  {} -- {} [style={}, label=\"{}\"];",
                e.j,
                e.k,
                e.class.dot_style(),
                label
            );
        }
        out.push_str("}\n");
        out
    }
}

pub fn format_ratio(r: Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Ten significant digits.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let decimals = (9 - x.abs().log10().floor() as i32).max(0) as usize;
    format!("{x:.decimals$}")
}

fn closed_form_graph(n: usize, label: MagnonLabel) -> Result<EntangledGraph> {
    let mut edges = Vec::new();
    for k in 2..=n {
        let w = label_concurrence(n, label, k);
        if *w.numer() == 0 {
            continue;
        }
        let class = match label {
            MagnonLabel::Row => EdgeClass::Uniform,
            MagnonLabel::SecondRow(s) if k == s => EdgeClass::C2,
            MagnonLabel::SecondRow(_) => EdgeClass::C1,
        };
        for j in 1..k {
            edges.push(Edge {
                j,
                k,
                weight: ratio_f64(w),
                class,
                exact: Some(w),
            });
        }
    }
    EntangledGraph::new(n, edges)
}

fn numeric_graph(n: usize, y: &StandardYoungTableau) -> Result<EntangledGraph> {
    let state = crate::states::build_state(n, y)?;
    numeric_graph_of(&state)
}

fn numeric_graph_of(state: &OneMagnonState) -> Result<EntangledGraph> {
    let n = state.n();
    let mut raw = Vec::new();
    for j in 1..=n {
        for k in j + 1..=n {
            let c = concurrence_numeric(&reduced_density_fast(state, j, k)?)?.value;
            if c > tolerances::EDGE_THRESHOLD {
                raw.push((j, k, c));
            }
        }
    }
    let classes = classify_weights(n, &raw);
    let edges = raw
        .into_iter()
        .zip(classes)
        .map(|((j, k, weight), class)| Edge {
            j,
            k,
            weight,
            class,
            exact: None,
        })
        .collect();
    EntangledGraph::new(n, edges)
}

/// Tag edges from their weights alone. Weights within the edge threshold
/// form one level; a single level spanning the complete graph on every
/// vertex is the uniform state, otherwise two-means splits the levels into
/// C1 (light) and C2 (heavy).
fn classify_weights(n: usize, raw: &[(usize, usize, f64)]) -> Vec<EdgeClass> {
    let mut levels: Vec<f64> = raw.iter().map(|e| e.2).collect();
    levels.sort_by(f64::total_cmp);
    levels.dedup_by(|a, b| (*a - *b).abs() <= tolerances::EDGE_THRESHOLD);
    if levels.len() <= 1 {
        let complete = raw.len() == n * (n - 1) / 2;
        let class = if complete {
            EdgeClass::Uniform
        } else {
            EdgeClass::C2
        };
        return vec![class; raw.len()];
    }
    // Optimal 1-D two-means split point over the sorted levels.
    let sse = |xs: &[f64]| {
        let m = xs.iter().sum::<f64>() / xs.len() as f64;
        xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>()
    };
    let split = (1..levels.len())
        .min_by(|&a, &b| {
            let ca = sse(&levels[..a]) + sse(&levels[a..]);
            let cb = sse(&levels[..b]) + sse(&levels[b..]);
            ca.total_cmp(&cb)
        })
        .unwrap_or(1);
    let cut = levels[split];
    raw.iter()
        .map(|e| {
            if e.2 >= cut - tolerances::EDGE_THRESHOLD {
                EdgeClass::C2
            } else {
                EdgeClass::C1
            }
        })
        .collect()
}

/// Entangled graph of the basis state labelled `y`.
pub fn build_graph(n: usize, y: &StandardYoungTableau, mode: BuildMode) -> Result<EntangledGraph> {
    let label = MagnonLabel::from_tableau(n, y).map_err(|e| Error::InvalidInput(e.to_string()))?;
    match mode {
        BuildMode::ClosedForm => closed_form_graph(n, label),
        BuildMode::Numeric => numeric_graph(n, y),
    }
}

/// Same vertex count, same edge set, weights within `tol`. Class tags are
/// not compared.
pub fn graph_equal(a: &EntangledGraph, b: &EntangledGraph, tol: f64) -> bool {
    a.n == b.n
        && a.edges.len() == b.edges.len()
        && a.edges
            .iter()
            .zip(&b.edges)
            .all(|(x, y)| x.j == y.j && x.k == y.k && (x.weight - y.weight).abs() <= tol)
}

/// One entry per one-magnon configuration, in node order.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifiedGraph {
    pub word: Word,
    pub label: StandardYoungTableau,
    pub graph: EntangledGraph,
}

/// Take every single-deviation configuration, map it to its basis label
/// with RS, and draw the graph of that label.
pub fn enumerate_graphs(n: usize) -> Result<Vec<ClassifiedGraph>> {
    enumerate_graphs_with(n, BuildMode::ClosedForm, Execution::default())
}

pub fn enumerate_graphs_with(
    n: usize,
    mode: BuildMode,
    exec: Execution,
) -> Result<Vec<ClassifiedGraph>> {
    if n < 2 {
        return Err(Error::InvalidSize { n, min: 2 });
    }
    let words = (1..=n)
        .map(|j| Word::one_magnon(n, j))
        .collect::<Result<Vec<_>>>()?;
    exec.map(words, |word| {
        let label = rs_insert_word_with(&word, false).q;
        let graph = build_graph(n, &label, mode)?;
        Ok(ClassifiedGraph { word, label, graph })
    })
    .into_iter()
    .collect()
}
