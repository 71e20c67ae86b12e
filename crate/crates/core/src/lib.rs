//! One-magnon Schur-Weyl states of an N-qubit ring and their pairwise
//! entanglement.
//!
//! The single-deviation sector of N spin-½ nodes has an orthonormal basis
//! labelled by standard Young tableaux of shape (N) and (N−1,1). This crate
//! builds those states, computes every two-qubit reduced density matrix and
//! its Wootters concurrence, assembles the resulting entangled graphs, and
//! links configurations to labels through the Robinson-Schensted
//! correspondence. Every closed form has an independent brute-force route
//! next to it; [`verify`] runs them all against each other.
//!
//! ```
//! use magnon::{build_graph, BuildMode, StandardYoungTableau};
//!
//! let y = StandardYoungTableau::hook_tableau(5, 4).unwrap();
//! let g = build_graph(5, &y, BuildMode::ClosedForm).unwrap();
//! assert_eq!(g.edges().len(), 6);
//! assert_eq!(g.isolated_vertices(), vec![5]);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod concurrence;
pub mod density;
pub mod error;
pub mod exec;
pub mod graph;
pub mod linalg;
pub mod poly;
pub mod rs;
pub mod states;
pub mod tableaux;
pub mod tolerances;
pub mod verify;

pub use concurrence::{
    concurrence_closed_form, concurrence_closed_form_exact, concurrence_numeric,
    concurrence_oracle, spin_flip, ConcurrenceResult,
};
pub use density::{reduced_density_fast, reduced_density_oracle, TwoQubitDensity};
pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{
    build_graph, enumerate_graphs, enumerate_graphs_with, graph_equal, BuildMode, ClassifiedGraph,
    Edge, EdgeClass, EntangledGraph,
};
pub use rs::{
    classify_all_configurations, classify_all_configurations_with, rs_insert_word, rs_one_magnon,
    RsPair, RsStep, Word,
};
pub use states::{
    amplitude, amplitude_exact, build_state, embed_full, gram_matrix, ExactAmplitude,
    FullStateVector, MagnonLabel, OneMagnonState,
};
pub use tableaux::{
    count_syt_two_row, kostka_two_letter, one_magnon_tableaux, sector_dimension, Partition,
    StandardYoungTableau, WeylTableau,
};
