//! Hollow LR-contingency tables and the invariant dimension
//! `LRC^0(𝛍) = Σ_Λ ‖Λ‖_𝛍` for rational `GL_n` weights in the stable range.
//!
//! The search runs in two phases. Integer size-tables with row margins
//! `|μᵢ⁺|` and column margins `|μⱼ⁻|` come from [`crate::tables`]; each
//! size-table is then filled cell by cell with partitions of the prescribed
//! size, and a row's LR factor is evaluated as soon as the row is complete.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use once_cell::sync::OnceCell;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lr::multi_lr;
use crate::partition::{GlWeight, Partition};
use crate::tables::{enumerate_tables, IntTable, TableSpec};

/// The margin vector `𝛍 = (μ₁,…,μ_r)` of weights sharing one rank `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarginSpec {
    weights: Vec<GlWeight>,
    n: usize,
}

impl MarginSpec {
    pub fn new(weights: Vec<GlWeight>) -> Result<Self> {
        let first = weights
            .first()
            .ok_or_else(|| Error::PreconditionViolated("margin vector is empty".into()))?;
        let n = first.rank();
        if let Some(w) = weights.iter().find(|w| w.rank() != n) {
            return Err(Error::RankMismatch(n, w.rank()));
        }
        Ok(MarginSpec { weights, n })
    }

    /// Builds weights from `(plus, minus)` pairs in rank `n`.
    pub fn from_pairs(pairs: Vec<(Partition, Partition)>, n: usize) -> Result<Self> {
        let weights = pairs
            .into_iter()
            .map(|(plus, minus)| GlWeight::new(plus, minus, n))
            .collect::<Result<Vec<_>>>()?;
        MarginSpec::new(weights)
    }

    pub fn weights(&self) -> &[GlWeight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `𝛍⁺ = (μ₁⁺,…,μ_r⁺)`.
    pub fn plus(&self) -> Vec<&Partition> {
        self.weights.iter().map(GlWeight::plus).collect()
    }

    /// `𝛍⁻ = (μ₁⁻,…,μ_r⁻)`.
    pub fn minus(&self) -> Vec<&Partition> {
        self.weights.iter().map(GlWeight::minus).collect()
    }

    /// `Σᵢ ℓ(μᵢ⁺) + ℓ(μᵢ⁻)`.
    pub fn stable_threshold(&self) -> usize {
        self.weights.iter().map(GlWeight::depth).sum()
    }

    pub fn in_stable_range(&self) -> bool {
        self.n >= self.stable_threshold()
    }

    /// The same weights re-embedded in rank `n`.
    pub fn with_rank(&self, n: usize) -> Result<Self> {
        let weights = self
            .weights
            .iter()
            .map(|w| w.with_rank(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(MarginSpec { weights, n })
    }

    /// Every weight replaced by its dual.
    pub fn dual(&self) -> Self {
        MarginSpec {
            weights: self.weights.iter().map(GlWeight::dual).collect(),
            n: self.n,
        }
    }

    fn require_stable(&self) -> Result<()> {
        if self.in_stable_range() {
            Ok(())
        } else {
            Err(Error::OutsideStableRange {
                n: self.n,
                threshold: self.stable_threshold(),
                group: None,
            })
        }
    }
}

/// An `r x r` matrix of partitions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartitionMatrix {
    r: usize,
    cells: Vec<Partition>,
}

impl PartitionMatrix {
    /// All cells empty.
    pub fn empty(r: usize) -> Self {
        PartitionMatrix {
            r,
            cells: vec![Partition::empty(); r * r],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Partition>>) -> Result<Self> {
        let r = rows.len();
        if let Some(bad) = rows.iter().find(|row| row.len() != r) {
            return Err(Error::DimensionMismatch {
                expected: r,
                found: bad.len(),
            });
        }
        Ok(PartitionMatrix {
            r,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize) -> &Partition {
        &self.cells[i * self.r + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Partition) {
        self.cells[i * self.r + j] = value;
    }

    /// Row vector `𝛌ᵢ•`.
    pub fn row(&self, i: usize) -> Vec<Partition> {
        self.cells[i * self.r..(i + 1) * self.r].to_vec()
    }

    /// Column vector `𝛌•ⱼ`.
    pub fn column(&self, j: usize) -> Vec<Partition> {
        (0..self.r).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Partition>> {
        (0..self.r).map(|i| self.row(i)).collect()
    }

    pub fn is_hollow(&self) -> bool {
        (0..self.r).all(|i| self.get(i, i).is_empty())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.r).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Cell sizes as an integer table.
    pub fn size_table(&self) -> IntTable {
        self.rows()
            .iter()
            .map(|row| row.iter().map(Partition::size).collect())
            .collect()
    }
}

impl fmt::Display for PartitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.r {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.r {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for PartitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `‖Λ‖_𝛍 = ∏ᵢ LRC^{μᵢ⁺}(𝛌ᵢ•) · LRC^{μᵢ⁻}(𝛌•ᵢ)`.
pub fn table_norm(table: &PartitionMatrix, margins: &MarginSpec) -> Result<BigUint> {
    if table.order() != margins.len() {
        return Err(Error::DimensionMismatch {
            expected: margins.len(),
            found: table.order(),
        });
    }
    let mut norm = BigUint::one();
    for (i, w) in margins.weights().iter().enumerate() {
        norm *= multi_lr(w.plus(), &table.row(i));
        if norm.is_zero() {
            return Ok(norm);
        }
    }
    for (i, w) in margins.weights().iter().enumerate() {
        norm *= multi_lr(w.minus(), &table.column(i));
        if norm.is_zero() {
            break;
        }
    }
    Ok(norm)
}

/// Integer size-tables every LR-contingency table must project onto.
fn size_tables(margins: &MarginSpec, hollow: bool) -> impl Iterator<Item = IntTable> {
    let spec = TableSpec::new(
        margins.plus().iter().map(|p| p.size()).collect(),
        margins.minus().iter().map(|p| p.size()).collect(),
    )
    .hollow(hollow);
    enumerate_tables(&spec)
}

/// Partitions allowed in each cell, by cell size. Lists are built on first
/// use and shared by every size-table of one margin vector.
pub(crate) struct CellCandidates {
    r: usize,
    shapes: Vec<Partition>,
    by_size: Vec<Vec<OnceCell<Vec<Partition>>>>,
}

impl CellCandidates {
    /// `shape(i, j)` bounds the diagram of cell `(i, j)`.
    pub(crate) fn new(r: usize, shape: impl Fn(usize, usize) -> Partition) -> Self {
        let shapes: Vec<Partition> = (0..r * r).map(|c| shape(c / r, c % r)).collect();
        let by_size = shapes
            .iter()
            .map(|s| (0..=s.size()).map(|_| OnceCell::new()).collect())
            .collect();
        CellCandidates { r, shapes, by_size }
    }

    /// Partitions of `size` fitting in the shape of cell `(i, j)`.
    pub(crate) fn get(&self, i: usize, j: usize, size: usize) -> &[Partition] {
        let c = i * self.r + j;
        match self.by_size[c].get(size) {
            Some(cell) => cell.get_or_init(|| Partition::within(size, &self.shapes[c])),
            None => &[],
        }
    }
}

/// Candidates for hollow tables with margins `margins`. A factor outside its
/// target diagram kills the LR coefficient, so cell `(i, j)` lives inside
/// `μᵢ⁺ ∩ μⱼ⁻`, which also bounds its length.
fn gl_candidates(margins: &MarginSpec) -> CellCandidates {
    let w = margins.weights();
    CellCandidates::new(w.len(), |i, j| w[i].plus().intersection(w[j].minus()))
}

/// Fills one size-table with partitions, visiting every filling whose norm
/// is nonzero. Only cells of nonzero size are searched.
struct Filler<'a> {
    margins: &'a MarginSpec,
    cells: Vec<(usize, usize, &'a [Partition])>,
    current: PartitionMatrix,
}

impl<'a> Filler<'a> {
    /// `None` when some cell admits no partition at all.
    fn new(
        margins: &'a MarginSpec,
        candidates: &'a CellCandidates,
        sizes: &IntTable,
    ) -> Option<Self> {
        let r = margins.len();
        let mut cells = Vec::new();
        for (i, row) in sizes.iter().enumerate() {
            for (j, &size) in row.iter().enumerate() {
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
        Some(Filler {
            margins,
            cells,
            current: PartitionMatrix::empty(r),
        })
    }

    fn visit(&mut self, emit: &mut dyn FnMut(&PartitionMatrix, BigUint)) {
        self.cell(0, BigUint::one(), emit);
    }

    fn cell(
        &mut self,
        idx: usize,
        partial: BigUint,
        emit: &mut dyn FnMut(&PartitionMatrix, BigUint),
    ) {
        if idx == self.cells.len() {
            let mut norm = partial;
            for (j, w) in self.margins.weights().iter().enumerate() {
                // an empty column margin forces an empty column, factor 1
                if w.minus().is_empty() {
                    continue;
                }
                norm *= multi_lr(w.minus(), &self.current.column(j));
                if norm.is_zero() {
                    return;
                }
            }
            emit(&self.current, norm);
            return;
        }
        let (i, j, choices) = self.cells[idx];
        let closes_row = self
            .cells
            .get(idx + 1)
            .is_none_or(|&(next, _, _)| next != i);
        for choice in choices {
            self.current.set(i, j, choice.clone());
            if closes_row {
                let factor = multi_lr(self.margins.weights()[i].plus(), &self.current.row(i));
                if factor.is_zero() {
                    continue;
                }
                self.cell(idx + 1, &partial * factor, emit);
            } else {
                self.cell(idx + 1, partial.clone(), emit);
            }
        }
        self.current.set(i, j, Partition::empty());
    }
}

/// Every LR-contingency table with margins `margins` (hollow ones only when
/// `hollow`), each once with its norm. Tables are grouped by size-table, in
/// the size-tables' enumeration order, then by cell candidates in
/// canonical partition order.
pub fn enumerate_lrct(
    margins: &MarginSpec,
    hollow: bool,
) -> impl Iterator<Item = (PartitionMatrix, BigUint)> + '_ {
    let candidates = gl_candidates(margins);
    size_tables(margins, hollow).flat_map(move |sizes| {
        let mut found = Vec::new();
        if let Some(mut filler) = Filler::new(margins, &candidates, &sizes) {
            filler.visit(&mut |t, norm| found.push((t.clone(), norm)));
        }
        found
    })
}

/// Value and number of contributing tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrcSummary {
    pub value: BigUint,
    pub table_count: usize,
}

/// `LRC^0(𝛍)`: the dimension of `GL_n`-invariants in `F^{μ₁} ⊗ … ⊗ F^{μ_r}`.
pub fn lrc_zero(margins: &MarginSpec) -> Result<BigUint> {
    lrc_zero_summary(margins).map(|s| s.value)
}

/// Like [`lrc_zero`], also reporting how many hollow tables contributed.
/// Size-tables are processed in parallel on the current rayon pool.
pub fn lrc_zero_summary(margins: &MarginSpec) -> Result<LrcSummary> {
    margins.require_stable()?;
    let sizes: Vec<IntTable> = size_tables(margins, true).collect();
    let candidates = gl_candidates(margins);
    let (value, table_count) = sizes
        .par_iter()
        .map(|t| {
            let mut sum = BigUint::zero();
            let mut count = 0usize;
            if let Some(mut filler) = Filler::new(margins, &candidates, t) {
                filler.visit(&mut |_, norm| {
                    sum += norm;
                    count += 1;
                });
            }
            (sum, count)
        })
        .reduce(|| (BigUint::zero(), 0), |(a, m), (b, k)| (a + b, m + k));
    Ok(LrcSummary { value, table_count })
}

/// The margin vector `((λ⁻, λ⁺), μ₁, …, μ_r)` whose invariants give `LRC^λ(𝛍)`.
pub fn extended_margins(lambda: &GlWeight, margins: &MarginSpec) -> Result<MarginSpec> {
    if lambda.rank() != margins.rank() {
        return Err(Error::RankMismatch(margins.rank(), lambda.rank()));
    }
    let mut weights = Vec::with_capacity(margins.len() + 1);
    weights.push(lambda.dual());
    weights.extend(margins.weights().iter().cloned());
    MarginSpec::new(weights)
}

/// `LRC^λ(𝛍) = [F^λ : F^{μ₁} ⊗ … ⊗ F^{μ_r}]`.
pub fn lrc_general(lambda: &GlWeight, margins: &MarginSpec) -> Result<BigUint> {
    lrc_zero(&extended_margins(lambda, margins)?)
}

/// Margins for `Hom(⊗ F^{sourceᵢ}, ⊗ F^{targetⱼ})`: duals of the sources
/// followed by the targets.
pub fn hom_margins(sources: &[Partition], targets: &[Partition], n: usize) -> Result<MarginSpec> {
    let mut pairs: Vec<(Partition, Partition)> = sources
        .iter()
        .map(|s| (Partition::empty(), s.clone()))
        .collect();
    pairs.extend(targets.iter().map(|t| (t.clone(), Partition::empty())));
    if pairs.is_empty() {
        pairs.push((Partition::empty(), Partition::empty()));
    }
    MarginSpec::from_pairs(pairs, n)
}

/// `dim Hom_{GL_n}(⊗ F^{sourceᵢ}, ⊗ F^{targetⱼ})`.
pub fn hom_dimension(sources: &[Partition], targets: &[Partition], n: usize) -> Result<BigUint> {
    lrc_zero(&hom_margins(sources, targets, n)?)
}
