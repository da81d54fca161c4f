//! Generalized Littlewood–Richardson coefficients for `GL_n`, and invariant
//! dimensions for `O_n` / `Sp_2n`, computed by summing over hollow
//! LR-contingency tables.
//!
//! Module map:
//! * [`partition`]: partitions, rational weights, `combine` / `split` / `dual`.
//! * [`lr`]: LR coefficients, Schur products, Pieri rules, multi-factor LR.
//! * [`tables`]: integer contingency tables with fixed margins.
//! * [`contingency`]: LR-contingency tables and `LRC^λ(𝛍)` for `GL_n`.
//! * [`osp`]: symmetric tables and invariants for `O_n` / `Sp_2n`.
//! * [`oracle`]: table-free cross-checks for both.

pub mod contingency;
pub mod error;
pub mod identities;
pub mod lr;
pub mod oracle;
pub mod osp;
pub mod partition;
pub mod tables;

pub use contingency::{
    enumerate_lrct, hom_dimension, lrc_general, lrc_zero, lrc_zero_summary, table_norm, LrcSummary,
    MarginSpec, PartitionMatrix,
};
pub use error::{Error, Result};
pub use identities::{hook_identity_check, hook_multiplicity};
pub use lr::{lr_coefficient, multi_lr, pieri_column, pieri_row, schur_product, ExpansionMap};
pub use oracle::{oracle_gl_invariants, oracle_osp_invariants};
pub use osp::{
    enumerate_sym_lrct, o_invariant_dim, osp_invariant_dim, sp_invariant_dim, sym_table_norm,
    Group, SymMarginSpec,
};
pub use partition::{combine, split, GlWeight, Partition};
pub use tables::{
    count_tables, derangement_count, enumerate_tables, fpf_involution_count, IntTable, TableIter,
    TableSpec,
};

pub use num_bigint::BigUint;
