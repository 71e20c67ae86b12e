//! Command-line front end: states, RS traces, entangled graphs, the
//! concurrence table and the cross-check suite.
//!
//! Every command renders into a `String`; `main` only prints and exits, so
//! the whole surface is testable in-process through [`run`].

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use magnon::concurrence::ratio_f64;
use magnon::graph::{format_ratio, format_sig};
use magnon::states::check_cap;
use magnon::tolerances;
use magnon::{
    build_graph, concurrence_closed_form, concurrence_closed_form_exact, concurrence_numeric,
    concurrence_oracle, embed_full, enumerate_graphs_with, graph_equal, reduced_density_fast,
    reduced_density_oracle, rs_insert_word, verify, BuildMode, EdgeClass, EntangledGraph,
    Execution, MagnonLabel, OneMagnonState, Word,
};
use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] magnon::Error),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => 1,
            CliError::Usage(_) | CliError::Core(_) => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Mode {
    #[default]
    Closed,
    Numeric,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    Row,
    SecondRow(usize),
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub selector: Selector,
    pub format: Format,
    pub mode: Mode,
    pub cap: usize,
}

impl RunConfig {
    pub fn new(
        n: usize,
        selector: Selector,
        format: Format,
        mode: Mode,
        cap: usize,
    ) -> CliResult<Self> {
        if n < 2 {
            return Err(magnon::Error::InvalidSize { n, min: 2 }.into());
        }
        if cap > tolerances::MAX_BRUTE_FORCE_CAP {
            return Err(CliError::Usage(format!(
                "cap {cap} exceeds the hard limit {}",
                tolerances::MAX_BRUTE_FORCE_CAP
            )));
        }
        if let Selector::SecondRow(s) = selector {
            if !(2..=n).contains(&s) {
                return Err(CliError::Usage(format!(
                    "--second-row must lie in 2..={n}, got {s}"
                )));
            }
        }
        if mode == Mode::Verify {
            check_cap(n, cap)?;
        }
        Ok(RunConfig {
            n,
            selector,
            format,
            mode,
            cap,
        })
    }

    fn labels(&self) -> Vec<MagnonLabel> {
        match self.selector {
            Selector::Row => vec![MagnonLabel::Row],
            Selector::SecondRow(s) => vec![MagnonLabel::SecondRow(s)],
            Selector::All => MagnonLabel::all(self.n),
        }
    }

    fn require_format(&self, allowed: &[Format], command: &str) -> CliResult<()> {
        if allowed.contains(&self.format) {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "{command} does not support {:?} output",
                self.format
            )))
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

/// Exact expansion of each selected basis state.
pub fn cmd_state(cfg: &RunConfig) -> CliResult<String> {
    cfg.require_format(&[Format::Text, Format::Json], "state")?;
    let states = cfg
        .labels()
        .into_iter()
        .map(|l| OneMagnonState::from_label(cfg.n, l))
        .collect::<magnon::Result<Vec<_>>>()?;
    Ok(match (cfg.format, cfg.selector) {
        (Format::Json, Selector::All) => json(&states),
        (Format::Json, _) => json(&states[0]),
        _ => states.iter().map(|s| s.render_line() + "\n").collect(),
    })
}

/// Insertion trace of a binary word.
pub fn cmd_rs(word: &str, format: Format) -> CliResult<String> {
    let word: Word = word.parse()?;
    let pair = rs_insert_word(&word);
    match format {
        Format::Text => Ok(pair.render_trace()),
        Format::Json => Ok(json(&pair)),
        Format::Dot => Err(CliError::Usage("rs does not support Dot output".into())),
    }
}

fn class_name(c: EdgeClass) -> &'static str {
    match c {
        EdgeClass::C1 => "C1",
        EdgeClass::C2 => "C2",
        EdgeClass::Uniform => "UNIFORM",
    }
}

fn build_mode(mode: Mode) -> BuildMode {
    match mode {
        Mode::Numeric => BuildMode::Numeric,
        Mode::Closed | Mode::Verify => BuildMode::ClosedForm,
    }
}

/// Recompute a closed-form graph numerically and through the full-space
/// oracle; any disagreement is a failed check.
fn cross_check_graph(
    n: usize,
    label: MagnonLabel,
    closed: &EntangledGraph,
    cap: usize,
) -> CliResult<()> {
    let y = label.tableau(n)?;
    let numeric = build_graph(n, &y, BuildMode::Numeric)?;
    if !graph_equal(closed, &numeric, tolerances::CONCURRENCE) {
        return Err(CliError::CheckFailed(format!(
            "numeric graph of {} differs",
            y.render_inline()
        )));
    }
    let state = OneMagnonState::from_label(n, label)?;
    let full = embed_full(&state, cap)?;
    for j in 1..=n {
        for k in j + 1..=n {
            let c = concurrence_oracle(&reduced_density_oracle(&full, j, k, cap)?)?.value;
            let w = closed.edge(j, k).map_or(0.0, |e| e.weight);
            if (c - w).abs() > tolerances::CONCURRENCE {
                return Err(CliError::CheckFailed(format!(
                    "oracle concurrence {c} for ({j},{k}) of {} against {w}",
                    y.render_inline()
                )));
            }
        }
    }
    Ok(())
}

fn render_graph_text(out: &mut String, header: &str, g: &EntangledGraph) {
    let _ = writeln!(out, "{header}");
    for e in g.edges() {
        let exact = e
            .exact
            .map(format_ratio)
            .map(|r| format!("{r}  "))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "  {} -- {}  {:<7} {}{}",
            e.j,
            e.k,
            class_name(e.class),
            exact,
            format_sig(e.weight)
        );
    }
    let iso = g.isolated_vertices();
    if !iso.is_empty() {
        let list: Vec<String> = iso.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "  isolated: {}", list.join(" "));
    }
}

#[derive(Serialize)]
struct GraphEntry<'a> {
    word: &'a Word,
    label: &'a magnon::StandardYoungTableau,
    graph: &'a EntangledGraph,
}

/// Entangled graph of each selected label. With `--all` the labels are
/// reached from the configurations through RS, in node order.
pub fn cmd_graph(cfg: &RunConfig) -> CliResult<String> {
    let n = cfg.n;
    let mut out = String::new();
    if cfg.selector == Selector::All {
        let all = enumerate_graphs_with(n, build_mode(cfg.mode), Execution::default())?;
        if cfg.mode == Mode::Verify {
            for c in &all {
                cross_check_graph(
                    n,
                    MagnonLabel::from_tableau(n, &c.label)?,
                    &c.graph,
                    cfg.cap,
                )?;
            }
        }
        match cfg.format {
            Format::Json => {
                let entries: Vec<GraphEntry> = all
                    .iter()
                    .map(|c| GraphEntry {
                        word: &c.word,
                        label: &c.label,
                        graph: &c.graph,
                    })
                    .collect();
                out = json(&entries);
            }
            Format::Dot => {
                for c in &all {
                    out.push_str(&c.graph.to_dot(&c.label.render_inline()));
                }
            }
            Format::Text => {
                for c in &all {
                    render_graph_text(
                        &mut out,
                        &format!("{} ↦ |{}⟩", c.word, c.label.render_inline()),
                        &c.graph,
                    );
                }
            }
        }
        return Ok(out);
    }
    let label = cfg.labels()[0];
    let y = label.tableau(n)?;
    let g = build_graph(n, &y, build_mode(cfg.mode))?;
    if cfg.mode == Mode::Verify {
        cross_check_graph(n, label, &g, cfg.cap)?;
    }
    Ok(match cfg.format {
        Format::Json => json(&g),
        Format::Dot => g.to_dot(&y.render_inline()),
        Format::Text => {
            render_graph_text(&mut out, &format!("|{}⟩", y.render_inline()), &g);
            out
        }
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Weight {
    pub exact: String,
    pub float: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub label: String,
    pub classes: Vec<&'static str>,
    pub c1: Option<Weight>,
    pub c2: Option<Weight>,
    pub c: Option<Weight>,
    /// Largest |numeric − closed form| over every pair.
    pub max_delta: f64,
}

/// One row per label: s ascending, then the row tableau.
pub fn table_rows(n: usize) -> CliResult<Vec<TableRow>> {
    let mut labels: Vec<MagnonLabel> = (2..=n).map(MagnonLabel::SecondRow).collect();
    labels.push(MagnonLabel::Row);
    let mut rows = Vec::new();
    for label in labels {
        let y = label.tableau(n)?;
        let state = OneMagnonState::from_label(n, label)?;
        let mut row = TableRow {
            label: y.render_inline(),
            classes: Vec::new(),
            c1: None,
            c2: None,
            c: None,
            max_delta: 0.0,
        };
        for j in 1..=n {
            for k in j + 1..=n {
                let exact = concurrence_closed_form_exact(n, &y, j, k)?;
                let closed = concurrence_closed_form(n, &y, j, k)?;
                let numeric = concurrence_numeric(&reduced_density_fast(&state, j, k)?)?.value;
                row.max_delta = row.max_delta.max((numeric - closed).abs());
                if *exact.numer() == 0 {
                    continue;
                }
                let (slot, name) = match label {
                    MagnonLabel::Row => (&mut row.c, "UNIFORM"),
                    MagnonLabel::SecondRow(s) if k == s => (&mut row.c2, "C2"),
                    MagnonLabel::SecondRow(_) => (&mut row.c1, "C1"),
                };
                if slot.is_none() {
                    *slot = Some(Weight {
                        exact: format_ratio(exact),
                        float: ratio_f64(exact),
                    });
                    row.classes.push(name);
                }
            }
        }
        row.classes.sort_unstable();
        rows.push(row);
    }
    Ok(rows)
}

pub fn cmd_table(n: usize, format: Format) -> CliResult<String> {
    let rows = table_rows(n)?;
    match format {
        Format::Json => Ok(json(&rows)),
        Format::Dot => Err(CliError::Usage("table does not support Dot output".into())),
        Format::Text => {
            let cell = |w: &Option<Weight>| match w {
                Some(w) => format!("{} ({})", w.exact, format_sig(w.float)),
                None => "-".to_string(),
            };
            let width = rows
                .iter()
                .map(|r| r.label.chars().count())
                .max()
                .unwrap_or(0)
                .max(7);
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:<width$}  {:<10}  {:<22}  {:<22}  {:<22}  max|Δ|",
                "tableau", "classes", "C1", "C2", "C"
            );
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{:<width$}  {:<10}  {:<22}  {:<22}  {:<22}  {:.1e}",
                    r.label,
                    r.classes.join(","),
                    cell(&r.c1),
                    cell(&r.c2),
                    cell(&r.c),
                    r.max_delta
                );
            }
            Ok(out)
        }
    }
}

/// Every cross-check for ring sizes 2..=n_max. A failing check is reported
/// in full and turned into a nonzero exit by the caller.
pub fn cmd_verify(n_max: usize, cap: usize, format: Format) -> CliResult<(String, bool)> {
    let report = verify::run(n_max, cap, Execution::default())?;
    let text = match format {
        Format::Json => json(&report),
        Format::Text => report.render(),
        Format::Dot => return Err(CliError::Usage("verify does not support Dot output".into())),
    };
    Ok((text, report.all_passed()))
}

#[derive(Parser, Debug)]
#[command(
    name = "magnon",
    version,
    about = "One-magnon Schur-Weyl states and their entangled graphs"
)]
pub struct Cli {
    /// Largest N for paths that build the full 2^N state vector.
    #[arg(long, global = true, env = "MAGNON_BRUTE_FORCE_CAP", default_value_t = tolerances::DEFAULT_BRUTE_FORCE_CAP)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
#[group(multiple = false)]
pub struct LabelArgs {
    /// The fully symmetric state, shape (N).
    #[arg(long)]
    pub row: bool,
    /// The shape-(N−1,1) state whose second row holds this entry.
    #[arg(long, value_name = "S")]
    pub second_row: Option<usize>,
    /// Every label (the default).
    #[arg(long)]
    pub all: bool,
}

impl LabelArgs {
    fn selector(self) -> Selector {
        match (self.row, self.second_row) {
            (true, _) => Selector::Row,
            (_, Some(s)) => Selector::SecondRow(s),
            _ => Selector::All,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print basis states as combinations of node kets.
    State {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Trace Robinson-Schensted insertion of a binary word.
    Rs {
        #[arg(default_value = "")]
        word: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Entangled graph of one or all labels.
    Graph {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum, default_value = "closed")]
        mode: Mode,
    },
    /// Pairwise concurrences of every label, exact and numeric.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run every cross-check for N = 2..=n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// What a finished invocation prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn err(e: CliError) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        }
    }
}

pub fn execute(cli: Cli) -> Outcome {
    let cap = cli.cap;
    let result = match cli.command {
        Command::State { n, label, format } => {
            RunConfig::new(n, label.selector(), format, Mode::Closed, cap)
                .and_then(|c| cmd_state(&c))
        }
        Command::Rs { word, format } => cmd_rs(&word, format),
        Command::Graph {
            n,
            label,
            format,
            mode,
        } => RunConfig::new(n, label.selector(), format, mode, cap).and_then(|c| cmd_graph(&c)),
        Command::Table { n, format } => cmd_table(n, format),
        Command::Verify { n, format } => match cmd_verify(n, cap, format) {
            Ok((text, true)) => Ok(text),
            Ok((text, false)) => {
                return Outcome {
                    stdout: text,
                    stderr: "error: verification failed\n".into(),
                    code: 1,
                }
            }
            Err(e) => Err(e),
        },
    };
    result.map_or_else(Outcome::err, Outcome::ok)
}

/// Parse and run; clap's own help and usage errors become outcomes too.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            }
        }
    }
}
