//! Invariant dimensions for `O_n` and `Sp_2n` from hollow symmetric
//! LR_Sym-contingency tables, whose norm `[[Λ]]_𝛍` takes LR factors across
//! rows only.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::contingency::{CellCandidates, PartitionMatrix};
use crate::error::{Error, Result};
use crate::lr::multi_lr;
use crate::partition::Partition;
use crate::tables::{enumerate_tables, IntTable, TableSpec};

/// Which classical group a stable-range message refers to. The computed
/// values coincide for both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    Orthogonal,
    Symplectic,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Orthogonal => "O_n",
            Group::Symplectic => "Sp_2n",
        })
    }
}

/// Margins `(μ₁,…,μ_r)` for `O_n` / `Sp_2n`, labelled by partitions.
///
/// Within the stable range the `O_n` label condition `μᵢ′(1) + μᵢ′(2) <= n`
/// holds automatically, so it is not tracked separately.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymMarginSpec {
    partitions: Vec<Partition>,
    n: usize,
}

impl SymMarginSpec {
    pub fn new(partitions: Vec<Partition>, n: usize) -> Result<Self> {
        if partitions.is_empty() {
            return Err(Error::PreconditionViolated("margin vector is empty".into()));
        }
        Ok(SymMarginSpec { partitions, n })
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `2 Σᵢ ℓ(μᵢ)`.
    pub fn stable_threshold(&self) -> usize {
        2 * self.partitions.iter().map(Partition::length).sum::<usize>()
    }

    pub fn in_stable_range(&self) -> bool {
        self.n >= self.stable_threshold()
    }

    pub fn with_rank(&self, n: usize) -> Self {
        SymMarginSpec {
            partitions: self.partitions.clone(),
            n,
        }
    }

    pub(crate) fn require_stable(&self, group: Group) -> Result<()> {
        if self.in_stable_range() {
            Ok(())
        } else {
            Err(Error::OutsideStableRange {
                n: self.n,
                threshold: self.stable_threshold(),
                group: Some(group),
            })
        }
    }
}

/// `[[Λ]]_𝛍 = ∏ᵢ LRC^{μᵢ}(𝛌ᵢ•)`.
pub fn sym_table_norm(table: &PartitionMatrix, margins: &SymMarginSpec) -> Result<BigUint> {
    if table.order() != margins.len() {
        return Err(Error::DimensionMismatch {
            expected: margins.len(),
            found: table.order(),
        });
    }
    if !table.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut norm = BigUint::one();
    for (i, mu) in margins.partitions().iter().enumerate() {
        norm *= multi_lr(mu, &table.row(i));
        if norm.is_zero() {
            break;
        }
    }
    Ok(norm)
}

fn sym_size_tables(margins: &SymMarginSpec, hollow: bool) -> impl Iterator<Item = IntTable> {
    let spec = TableSpec::symmetric(margins.partitions().iter().map(Partition::size).collect())
        .hollow(hollow);
    enumerate_tables(&spec)
}

fn sym_candidates(margins: &SymMarginSpec) -> CellCandidates {
    let mu = margins.partitions();
    CellCandidates::new(mu.len(), |i, j| mu[i].intersection(&mu[j]))
}

/// Fills the upper triangle of a symmetric size-table and mirrors it. Only
/// cells of nonzero size are searched.
struct SymFiller<'a> {
    margins: &'a SymMarginSpec,
    cells: Vec<(usize, usize, &'a [Partition])>,
    current: PartitionMatrix,
}

impl<'a> SymFiller<'a> {
    /// `None` when some cell admits no partition at all.
    fn new(
        margins: &'a SymMarginSpec,
        candidates: &'a CellCandidates,
        sizes: &IntTable,
    ) -> Option<Self> {
        let r = margins.len();
        let mut cells = Vec::new();
        for (i, row) in sizes.iter().enumerate() {
            for (j, &size) in row.iter().enumerate().skip(i) {
                if size == 0 {
                    continue;
                }
                let choices = candidates.get(i, j, size);
                if choices.is_empty() {
                    return None;
                }
                cells.push((i, j, choices));
            }
        }
        Some(SymFiller {
            margins,
            cells,
            current: PartitionMatrix::empty(r),
        })
    }

    fn visit(&mut self, emit: &mut dyn FnMut(&PartitionMatrix, BigUint)) {
        self.step(0, 0, BigUint::one(), emit);
    }

    /// `row` is the first row whose factor has not been taken yet. Row `i`
    /// is complete once every upper-triangle cell in rows `<= i` is set.
    fn step(
        &mut self,
        idx: usize,
        row: usize,
        partial: BigUint,
        emit: &mut dyn FnMut(&PartitionMatrix, BigUint),
    ) {
        let r = self.margins.len();
        let next_row = self.cells.get(idx).map_or(r, |&(i, _, _)| i);
        let mut partial = partial;
        for i in row..next_row {
            partial *= multi_lr(&self.margins.partitions()[i], &self.current.row(i));
            if partial.is_zero() {
                return;
            }
        }
        if idx == self.cells.len() {
            debug_assert_eq!(
                partial,
                (0..r)
                    .map(|j| multi_lr(&self.margins.partitions()[j], &self.current.column(j)))
                    .product::<BigUint>(),
                "column product must agree with row product on a symmetric table"
            );
            emit(&self.current, partial);
            return;
        }
        let (i, j, choices) = self.cells[idx];
        for choice in choices {
            self.current.set(j, i, choice.clone());
            self.current.set(i, j, choice.clone());
            self.step(idx + 1, next_row, partial.clone(), emit);
        }
        self.current.set(i, j, Partition::empty());
        self.current.set(j, i, Partition::empty());
    }
}

/// Every symmetric LR_Sym-contingency table (hollow ones only when
/// `hollow`) with its norm.
pub fn enumerate_sym_lrct(
    margins: &SymMarginSpec,
    hollow: bool,
) -> impl Iterator<Item = (PartitionMatrix, BigUint)> + '_ {
    let candidates = sym_candidates(margins);
    sym_size_tables(margins, hollow).flat_map(move |sizes| {
        let mut found = Vec::new();
        if let Some(mut filler) = SymFiller::new(margins, &candidates, &sizes) {
            filler.visit(&mut |t, norm| found.push((t.clone(), norm)));
        }
        found
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OspSummary {
    pub value: BigUint,
    pub table_count: usize,
}

/// Invariant dimension with stable-range errors phrased for `group`.
pub fn invariant_dim_summary(margins: &SymMarginSpec, group: Group) -> Result<OspSummary> {
    margins.require_stable(group)?;
    let sizes: Vec<IntTable> = sym_size_tables(margins, true).collect();
    let candidates = sym_candidates(margins);
    let (value, table_count) = sizes
        .par_iter()
        .map(|t| {
            let mut sum = BigUint::zero();
            let mut count = 0usize;
            if let Some(mut filler) = SymFiller::new(margins, &candidates, t) {
                filler.visit(&mut |_, norm| {
                    sum += norm;
                    count += 1;
                });
            }
            (sum, count)
        })
        .reduce(|| (BigUint::zero(), 0), |(a, m), (b, k)| (a + b, m + k));
    Ok(OspSummary { value, table_count })
}

/// `dim(E^{μ₁}_n ⊗ … ⊗ E^{μ_r}_n)^{O_n}`, equal to the `Sp_2n` value.
pub fn osp_invariant_dim(margins: &SymMarginSpec) -> Result<BigUint> {
    o_invariant_dim(margins)
}

pub fn o_invariant_dim(margins: &SymMarginSpec) -> Result<BigUint> {
    invariant_dim_summary(margins, Group::Orthogonal).map(|s| s.value)
}

/// `dim(V^{μ₁}_{2n} ⊗ … ⊗ V^{μ_r}_{2n})^{Sp_2n}`.
pub fn sp_invariant_dim(margins: &SymMarginSpec) -> Result<BigUint> {
    invariant_dim_summary(margins, Group::Symplectic).map(|s| s.value)
}
