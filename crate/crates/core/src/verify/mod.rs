//! Brute-force oracle and theorem checks.

pub mod oracle;
pub mod theorems;

pub use oracle::{brute_force_min_moves, brute_force_span, DEFAULT_ORACLE_CAP};
pub use theorems::{
    check_interval_theorems, check_oracle_agreement, check_span1_structure, check_span_inequalities, verify_graph,
    Check, CheckStatus, TheoremReport, Witness,
};
