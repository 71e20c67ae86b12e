//! Cross-check suite: every closed form against its independent route, for
//! each ring size up to a limit.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::concurrence::{concurrence_closed_form, concurrence_numeric, concurrence_oracle};
use crate::density::{reduced_density_fast, reduced_density_oracle};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{build_graph, graph_equal, BuildMode};
use crate::linalg;
use crate::rs::{classify_all_configurations_with, rs_insert_word_with, rs_one_magnon, Word};
use crate::states::{check_cap, embed_full, gram_matrix, MagnonLabel, OneMagnonState};
use crate::tableaux::{count_syt_two_row, one_magnon_tableaux, sector_dimension, Partition};
use crate::tolerances;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub n: usize,
    pub passed: bool,
    /// Largest observed deviation, when the check is numeric.
    pub max_error: Option<f64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub n_max: usize,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let err = c
                .max_error
                .map(|e| format!(" max_err={e:.1e}"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "[{}] n={:<2} {:<28}{}{}",
                if c.passed { "PASS" } else { "FAIL" },
                c.n,
                c.name,
                err,
                if c.detail.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", c.detail)
                }
            );
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        );
        out
    }
}

fn numeric(name: &'static str, n: usize, err: f64, tol: f64) -> CheckOutcome {
    CheckOutcome {
        name,
        n,
        passed: err <= tol,
        max_error: Some(err),
        detail: if err <= tol {
            String::new()
        } else {
            format!("tolerance {tol:e}")
        },
    }
}

fn logical(name: &'static str, n: usize, ok: bool, detail: String) -> CheckOutcome {
    CheckOutcome {
        name,
        n,
        passed: ok,
        max_error: None,
        detail: if ok { String::new() } else { detail },
    }
}

fn failed(name: &'static str, n: usize, e: Error) -> CheckOutcome {
    CheckOutcome {
        name,
        n,
        passed: false,
        max_error: None,
        detail: e.to_string(),
    }
}

fn wrap(name: &'static str, n: usize, f: impl FnOnce() -> Result<CheckOutcome>) -> CheckOutcome {
    f().unwrap_or_else(|e| failed(name, n, e))
}

/// Every check for one ring size.
pub fn checks_for(n: usize, cap: usize) -> Vec<CheckOutcome> {
    let mut out = Vec::new();

    out.push(wrap("orthonormality", n, || {
        let g = gram_matrix(n)?;
        let mut err: f64 = 0.0;
        for (i, row) in g.iter().enumerate() {
            for (k, x) in row.iter().enumerate() {
                err = err.max((x - if i == k { 1.0 } else { 0.0 }).abs());
            }
        }
        Ok(numeric("orthonormality", n, err, tolerances::EXACT_F64))
    }));

    out.push(wrap("dimension identities", n, || {
        let total: u128 = (0..=n)
            .map(|r| sector_dimension(n, r))
            .sum::<Result<u128>>()?;
        let hooks = count_syt_two_row(&Partition::hook(n)?)?;
        let labels = one_magnon_tableaux(n)?.len();
        let ok = total == 1u128 << n && hooks == (n - 1) as u128 && labels == n;
        Ok(logical(
            "dimension identities",
            n,
            ok,
            format!("Σ C(n,r) = {total}, |SYT(n-1,1)| = {hooks}, labels = {labels}"),
        ))
    }));

    out.push(wrap("rs bijection", n, || {
        let map = classify_all_configurations_with(n, Execution::Sequential)?;
        let image: BTreeSet<_> = map.values().cloned().collect();
        let expected: BTreeSet<_> = one_magnon_tableaux(n)?.into_iter().collect();
        let mut closed_ok = true;
        for j in 1..=n {
            let fast = rs_one_magnon(n, j)?;
            let slow = rs_insert_word_with(&Word::one_magnon(n, j)?, false);
            closed_ok &= fast.p == slow.p && fast.q == slow.q;
        }
        Ok(logical(
            "rs bijection",
            n,
            map.len() == n && image == expected && closed_ok,
            format!(
                "image size {}, closed form agrees: {closed_ok}",
                image.len()
            ),
        ))
    }));

    let states: Vec<OneMagnonState> = match MagnonLabel::all(n)
        .into_iter()
        .map(|l| OneMagnonState::from_label(n, l))
        .collect::<Result<Vec<_>>>()
    {
        Ok(s) => s,
        Err(e) => {
            out.push(failed("states", n, e));
            return out;
        }
    };

    out.push(wrap("density fast = oracle", n, || {
        let mut err: f64 = 0.0;
        for st in &states {
            let full = embed_full(st, cap)?;
            for j in 1..=n {
                for k in j + 1..=n {
                    let a = reduced_density_fast(st, j, k)?;
                    let b = reduced_density_oracle(&full, j, k, cap)?;
                    err = err.max(linalg::max_abs_diff(a.matrix(), b.matrix()));
                }
            }
        }
        Ok(numeric(
            "density fast = oracle",
            n,
            err,
            tolerances::EXACT_F64,
        ))
    }));

    out.push(wrap("concurrence three routes", n, || {
        let mut err: f64 = 0.0;
        for st in &states {
            for j in 1..=n {
                for k in j + 1..=n {
                    let rho = reduced_density_fast(st, j, k)?;
                    let closed = concurrence_closed_form(n, st.label(), j, k)?;
                    let num = concurrence_numeric(&rho)?.value;
                    let orc = concurrence_oracle(&rho)?.value;
                    err = err
                        .max((closed - num).abs())
                        .max((closed - orc).abs())
                        .max((num - orc).abs());
                }
            }
        }
        Ok(numeric(
            "concurrence three routes",
            n,
            err,
            tolerances::CONCURRENCE,
        ))
    }));

    out.push(wrap("one-magnon product rule", n, || {
        let mut err: f64 = 0.0;
        for st in &states {
            for j in 1..=n {
                for k in j + 1..=n {
                    let c = concurrence_numeric(&reduced_density_fast(st, j, k)?)?.value;
                    err = err.max((c - 2.0 * (st.at(j) * st.at(k)).abs()).abs());
                }
            }
        }
        Ok(numeric(
            "one-magnon product rule",
            n,
            err,
            tolerances::CONCURRENCE,
        ))
    }));

    out.push(wrap("graph closed = numeric", n, || {
        let mut mismatched = Vec::new();
        for st in &states {
            let a = build_graph(n, st.label(), BuildMode::ClosedForm)?;
            let b = build_graph(n, st.label(), BuildMode::Numeric)?;
            if !graph_equal(&a, &b, tolerances::CONCURRENCE) {
                mismatched.push(st.label().render_inline());
            }
        }
        Ok(logical(
            "graph closed = numeric",
            n,
            mismatched.is_empty(),
            format!("mismatched labels: {}", mismatched.join(", ")),
        ))
    }));

    out
}

/// Run the suite for every n in 2..=n_max.
pub fn run(n_max: usize, cap: usize, exec: Execution) -> Result<VerifyReport> {
    if n_max < 2 {
        return Err(Error::InvalidSize { n: n_max, min: 2 });
    }
    check_cap(n_max, cap)?;
    let sizes: Vec<usize> = (2..=n_max).collect();
    let checks = exec
        .map(sizes, |n| checks_for(n, cap))
        .into_iter()
        .flatten()
        .collect();
    Ok(VerifyReport { n_max, checks })
}
