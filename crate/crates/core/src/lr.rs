//! Classical Littlewood–Richardson machinery.
//!
//! [`lr_coefficient`] counts LR tableaux row by row: each row of the skew
//! shape `λ/μ` is described by how many copies of each value it holds, and the
//! column-strict and lattice-word conditions are checked on those counts as
//! the row is chosen. [`schur_product`] instead grows `μ` by one horizontal
//! strip per value of `ν`, which yields every `λ` with its coefficient in a
//! single pass.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::partition::Partition;

/// Sparse map `Partition -> multiplicity`. Never stores a zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpansionMap {
    entries: BTreeMap<Partition, BigUint>,
}

impl ExpansionMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// The single term `1·s_λ`.
    pub fn unit(lambda: Partition) -> Self {
        let mut map = Self::new();
        map.add(lambda, BigUint::one());
        map
    }

    pub fn add(&mut self, key: Partition, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.entries.entry(key).or_default() += coeff;
    }

    /// Coefficient of `key`, zero if absent.
    pub fn get(&self, key: &Partition) -> BigUint {
        self.entries.get(key).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Partition> {
        self.entries.keys()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    fn from_counts(counts: HashMap<Partition, u64>) -> Self {
        let entries = counts
            .into_iter()
            .filter(|(_, c)| *c > 0)
            .map(|(k, c)| (k, BigUint::from(c)))
            .collect();
        ExpansionMap { entries }
    }
}

impl IntoIterator for ExpansionMap {
    type Item = (Partition, BigUint);
    type IntoIter = std::collections::btree_map::IntoIter<Partition, BigUint>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.into_iter()
    }
}

type Triple = (Partition, Partition, Partition);
type Memo<K> = Lazy<RwLock<HashMap<K, BigUint>>>;

static LR_MEMO: Memo<Triple> = Lazy::new(Default::default);
static MULTI_MEMO: Memo<(Partition, Vec<Partition>)> = Lazy::new(Default::default);

/// Drops every memoized coefficient.
pub fn clear_memo() {
    LR_MEMO.write().clear();
    MULTI_MEMO.write().clear();
}

/// `c^λ_{μν}`: the number of LR tableaux of shape `λ/μ` and content `ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return BigUint::zero();
    }
    if mu.is_empty() || nu.is_empty() {
        return BigUint::one();
    }
    let (small, large) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let key = (lambda.clone(), small.clone(), large.clone());
    if let Some(v) = LR_MEMO.read().get(&key) {
        return v.clone();
    }
    // skew by the larger partition: fewer cells to fill
    let value = BigUint::from(TableauCounter::new(lambda, large, small).count());
    LR_MEMO.write().insert(key, value.clone());
    value
}

/// Row-by-row LR tableau search over per-row value counts.
struct TableauCounter<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    nu: &'a Partition,
    /// content placed in rows above the current one
    cum: Vec<usize>,
    /// value counts of the previous row
    prev: Vec<usize>,
    /// value counts of the row being filled
    cur: Vec<usize>,
    found: u64,
}

impl<'a> TableauCounter<'a> {
    fn new(lambda: &'a Partition, mu: &'a Partition, nu: &'a Partition) -> Self {
        let k = nu.length();
        TableauCounter {
            lambda,
            mu,
            nu,
            cum: vec![0; k],
            prev: vec![0; k],
            cur: vec![0; k],
            found: 0,
        }
    }

    fn count(mut self) -> u64 {
        self.row(0);
        self.found
    }

    fn row(&mut self, i: usize) {
        if i == self.lambda.length() {
            self.found += 1;
            return;
        }
        let cells = self.lambda.part(i) - self.mu.part(i);
        self.cur.iter_mut().for_each(|c| *c = 0);
        self.value(
            i,
            0,
            cells,
            self.mu.part(i),
            self.mu.part(i.saturating_sub(1)),
        );
    }

    /// Chooses how many `k`s go in row `i`. `pos` is the column reached so
    /// far in this row; `limit` the column reached by values `< k` in row `i-1`.
    fn value(&mut self, i: usize, k: usize, remaining: usize, pos: usize, limit: usize) {
        let top = i.min(self.nu.length() - 1);
        if remaining == 0 {
            self.finish_row(i);
            return;
        }
        if k > top {
            return;
        }
        let mut hi = remaining.min(self.nu.part(k) - self.cum[k]);
        if k > 0 {
            hi = hi.min(self.cum[k - 1] - self.cum[k]);
        }
        if i > 0 {
            if pos > limit {
                return;
            }
            hi = hi.min(limit - pos);
        }
        let lo = if k == top { remaining } else { 0 };
        if lo > hi {
            return;
        }
        let next_limit = limit + self.prev[k];
        for n in (lo..=hi).rev() {
            self.cur[k] = n;
            self.value(i, k + 1, remaining - n, pos + n, next_limit);
        }
        self.cur[k] = 0;
    }

    fn finish_row(&mut self, i: usize) {
        let saved_prev = std::mem::replace(&mut self.prev, self.cur.clone());
        for (c, n) in self.cum.iter_mut().zip(&self.prev) {
            *c += n;
        }
        let saved_cur = self.cur.clone();
        self.row(i + 1);
        self.cur = saved_cur;
        for (c, n) in self.cum.iter_mut().zip(&self.prev) {
            *c -= n;
        }
        self.prev = saved_prev;
    }
}

/// Constraints on the shapes produced by a product expansion.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct ShapeBound<'a> {
    pub max_length: Option<usize>,
    pub within: Option<&'a Partition>,
}

/// Expansion of `s_μ · s_ν` restricted to `ℓ(λ) <= max_length`.
pub fn schur_product(mu: &Partition, nu: &Partition, max_length: Option<usize>) -> ExpansionMap {
    ExpansionMap::from_counts(product_counts(
        mu,
        nu,
        ShapeBound {
            max_length,
            within: None,
        },
    ))
}

pub(crate) fn product_counts(
    mu: &Partition,
    nu: &Partition,
    bound: ShapeBound<'_>,
) -> HashMap<Partition, u64> {
    let mut rows = mu.length() + nu.length();
    if let Some(m) = bound.max_length {
        rows = rows.min(m);
    }
    if let Some(w) = bound.within {
        rows = rows.min(w.length());
    }
    let mut out = HashMap::new();
    if mu.length() > rows || bound.within.is_some_and(|w| !w.contains(mu)) {
        return out;
    }
    let mut shape = vec![0; rows];
    shape[..mu.length()].copy_from_slice(mu.parts());
    let mut grower = StripGrower {
        nu: nu.parts(),
        within: bound.within,
        shape,
        counts: vec![vec![0; rows]; nu.length()],
        out: &mut out,
    };
    grower.strip(0);
    out
}

/// Adds `ν(1)` ones, then `ν(2)` twos, … as horizontal strips, keeping the
/// reading word a lattice word.
struct StripGrower<'a, 'o> {
    nu: &'a [usize],
    within: Option<&'a Partition>,
    shape: Vec<usize>,
    /// counts[k][i]: copies of value k in row i
    counts: Vec<Vec<usize>>,
    out: &'o mut HashMap<Partition, u64>,
}

impl StripGrower<'_, '_> {
    fn strip(&mut self, k: usize) {
        if k == self.nu.len() {
            *self
                .out
                .entry(Partition::from_sorted(self.shape.clone()))
                .or_default() += 1;
            return;
        }
        let old = self.shape.clone();
        // lattice condition keeps value k out of the first k rows
        let above_prev = if k > 0 {
            self.counts[k - 1].iter().take(k).sum()
        } else {
            0
        };
        self.place(k, k, self.nu[k], &old, 0, above_prev);
    }

    /// `placed_k` counts copies of `k` in rows above `i`; `above_prev`
    /// counts copies of `k-1` in rows above `i`.
    fn place(
        &mut self,
        k: usize,
        i: usize,
        remaining: usize,
        old: &[usize],
        placed_k: usize,
        above_prev: usize,
    ) {
        if remaining == 0 {
            self.strip(k + 1);
            return;
        }
        if i >= self.shape.len() {
            return;
        }
        let mut hi = remaining;
        if i > 0 {
            if old[i - 1] == 0 {
                return;
            }
            hi = hi.min(old[i - 1] - old[i]);
        }
        if let Some(w) = self.within {
            hi = hi.min(w.part(i).saturating_sub(old[i]));
        }
        if k > 0 {
            hi = hi.min(above_prev - placed_k);
        }
        let prev_here = if k > 0 { self.counts[k - 1][i] } else { 0 };
        for a in (0..=hi).rev() {
            self.shape[i] += a;
            self.counts[k][i] = a;
            self.place(
                k,
                i + 1,
                remaining - a,
                old,
                placed_k + a,
                above_prev + prev_here,
            );
            self.shape[i] -= a;
        }
        self.counts[k][i] = 0;
    }
}

/// Expansion of `s_μ · s_(k)`: add a horizontal strip of `k` boxes.
pub fn pieri_row(mu: &Partition, k: usize, max_length: Option<usize>) -> ExpansionMap {
    let rows = max_length.map_or(mu.length() + 1, |m| m.min(mu.length() + 1));
    let mut out = ExpansionMap::new();
    if mu.length() > rows {
        return out;
    }
    let mut shape: Vec<usize> = (0..rows).map(|i| mu.part(i)).collect();
    horizontal(mu, 0, k, &mut shape, &mut out);
    out
}

fn horizontal(
    mu: &Partition,
    i: usize,
    remaining: usize,
    shape: &mut Vec<usize>,
    out: &mut ExpansionMap,
) {
    if remaining == 0 {
        out.add(Partition::from_sorted(shape.clone()), BigUint::one());
        return;
    }
    if i >= shape.len() {
        return;
    }
    let room = if i == 0 {
        remaining
    } else {
        (mu.part(i - 1) - mu.part(i)).min(remaining)
    };
    for a in 0..=room {
        shape[i] += a;
        horizontal(mu, i + 1, remaining - a, shape, out);
        shape[i] -= a;
    }
}

/// Expansion of `s_μ · s_(1^k)`: add a vertical strip of `k` boxes.
pub fn pieri_column(mu: &Partition, k: usize, max_length: Option<usize>) -> ExpansionMap {
    let rows = max_length.map_or(mu.length() + k, |m| m.min(mu.length() + k));
    let mut out = ExpansionMap::new();
    if mu.length() > rows {
        return out;
    }
    let mut shape: Vec<usize> = (0..rows).map(|i| mu.part(i)).collect();
    vertical(0, k, &mut shape, &mut out);
    out
}

fn vertical(i: usize, remaining: usize, shape: &mut Vec<usize>, out: &mut ExpansionMap) {
    if remaining == 0 {
        out.add(Partition::from_sorted(shape.clone()), BigUint::one());
        return;
    }
    if i >= shape.len() || shape.len() - i < remaining {
        return;
    }
    // a box in row i keeps the shape a partition iff row i-1 is longer
    // after its own (possible) box
    if i == 0 || shape[i - 1] > shape[i] {
        shape[i] += 1;
        vertical(i + 1, remaining - 1, shape, out);
        shape[i] -= 1;
    }
    vertical(i + 1, remaining, shape, out);
}

/// `[F^target : F^{ν₁} ⊗ … ⊗ F^{ν_r}]` for polynomial labels.
pub fn multi_lr(target: &Partition, factors: &[Partition]) -> BigUint {
    let mut live: Vec<Partition> = factors.iter().filter(|f| !f.is_empty()).cloned().collect();
    let total: usize = live.iter().map(Partition::size).sum();
    if total != target.size() || live.iter().any(|f| !target.contains(f)) {
        return BigUint::zero();
    }
    match live.len() {
        0 => return BigUint::one(),
        1 => return BigUint::from((live[0] == *target) as u8),
        2 => return lr_coefficient(target, &live[0], &live[1]),
        _ => {}
    }
    live.sort_by(|a, b| b.cmp(a));
    let key = (target.clone(), live);
    if let Some(v) = MULTI_MEMO.read().get(&key) {
        return v.clone();
    }
    let value = fold_into(target, &key.1);
    MULTI_MEMO.write().insert(key, value.clone());
    value
}

/// Left fold of all but the last factor inside `target`, closed by a single
/// LR coefficient against the last factor.
fn fold_into(target: &Partition, factors: &[Partition]) -> BigUint {
    let (last, init) = factors.split_last().expect("at least three factors");
    let bound = ShapeBound {
        max_length: Some(target.length()),
        within: Some(target),
    };
    let mut acc: HashMap<Partition, BigUint> = HashMap::new();
    acc.insert(init[0].clone(), BigUint::one());
    for factor in &init[1..] {
        let mut next: HashMap<Partition, BigUint> = HashMap::new();
        for (shape, coeff) in &acc {
            for (lambda, c) in product_counts(shape, factor, bound) {
                *next.entry(lambda).or_default() += coeff * BigUint::from(c);
            }
        }
        acc = next;
    }
    acc.iter()
        .map(|(shape, coeff)| coeff * lr_coefficient(target, shape, last))
        .sum()
}
