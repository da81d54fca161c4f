//! Classical contingency tables: nonnegative integer matrices with fixed
//! row and column sums, optionally hollow (zero diagonal), symmetric, or with
//! entries capped.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Margins and side conditions for a family of integer tables.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TableSpec {
    pub row_margins: Vec<usize>,
    pub col_margins: Vec<usize>,
    pub hollow: bool,
    pub symmetric: bool,
    pub entry_cap: Option<usize>,
}

impl TableSpec {
    pub fn new(row_margins: Vec<usize>, col_margins: Vec<usize>) -> Self {
        TableSpec {
            row_margins,
            col_margins,
            ..Default::default()
        }
    }

    /// Square symmetric spec with equal row and column margins.
    pub fn symmetric(margins: Vec<usize>) -> Self {
        TableSpec {
            row_margins: margins.clone(),
            col_margins: margins,
            symmetric: true,
            ..Default::default()
        }
    }

    pub fn hollow(mut self, hollow: bool) -> Self {
        self.hollow = hollow;
        self
    }

    pub fn with_cap(mut self, cap: Option<usize>) -> Self {
        self.entry_cap = cap;
        self
    }

    pub fn rows(&self) -> usize {
        self.row_margins.len()
    }

    pub fn cols(&self) -> usize {
        self.col_margins.len()
    }

    /// False when no table can exist for trivial reasons.
    fn is_feasible(&self) -> bool {
        let rows: usize = self.row_margins.iter().sum();
        let cols: usize = self.col_margins.iter().sum();
        rows == cols && (!self.symmetric || self.row_margins == self.col_margins)
    }

    fn cap(&self) -> usize {
        self.entry_cap.unwrap_or(usize::MAX)
    }

    /// Largest value cell `(i, j)` may ever hold.
    fn cell_cap(&self, i: usize, j: usize) -> usize {
        if self.hollow && i == j {
            0
        } else {
            self.cap()
        }
    }
}

/// Exact number of tables satisfying `spec`.
pub fn count_tables(spec: &TableSpec) -> BigUint {
    if !spec.is_feasible() {
        return BigUint::zero();
    }
    let mut counter = Counter {
        spec,
        memo: HashMap::new(),
    };
    if spec.symmetric {
        counter.symmetric_rows(0, spec.row_margins.clone())
    } else {
        counter.rows(0, spec.col_margins.clone())
    }
}

/// Depth-first over rows, memoized on the remaining margins.
struct Counter<'a> {
    spec: &'a TableSpec,
    memo: HashMap<(usize, Vec<usize>), BigUint>,
}

impl Counter<'_> {
    fn rows(&mut self, i: usize, cols_left: Vec<usize>) -> BigUint {
        if i == self.spec.rows() {
            return if cols_left.iter().all(|&c| c == 0) {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        let key = (i, cols_left);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut cols_left = key.1.clone();
        let mut total = BigUint::zero();
        let mut row_choices = Vec::new();
        let caps: Vec<usize> = (0..self.spec.cols())
            .map(|j| self.spec.cell_cap(i, j).min(cols_left[j]))
            .collect();
        compositions(
            self.spec.row_margins[i],
            &caps,
            0,
            &mut cols_left,
            &mut |rest| row_choices.push(rest.to_vec()),
        );
        for rest in row_choices {
            total += self.rows(i + 1, rest);
        }
        self.memo.insert(key, total.clone());
        total
    }

    /// `left[0]` is what row `i` still needs; `left[1..]` the remaining
    /// margins of rows `i+1..`, already reduced by the mirrored entries.
    fn symmetric_rows(&mut self, i: usize, left: Vec<usize>) -> BigUint {
        let r = self.spec.rows();
        if i == r {
            return BigUint::one();
        }
        let key = (i, left);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let left = &key.1;
        let need = left[0];
        let mut total = BigUint::zero();
        // diagonal entry counts once toward row i
        let diag_max = self.spec.cell_cap(i, i).min(need);
        for diag in 0..=diag_max {
            let mut rest: Vec<usize> = left[1..].to_vec();
            let caps: Vec<usize> = rest
                .iter()
                .enumerate()
                .map(|(off, &m)| self.spec.cell_cap(i, i + 1 + off).min(m))
                .collect();
            let mut choices = Vec::new();
            compositions(need - diag, &caps, 0, &mut rest, &mut |rem| {
                choices.push(rem.to_vec())
            });
            for rem in choices {
                total += self.symmetric_rows(i + 1, rem);
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// Calls `emit` with `left` reduced by every way of writing `amount` as a
/// sum of entries bounded by `caps`, starting at position `j`.
fn compositions(
    amount: usize,
    caps: &[usize],
    j: usize,
    left: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if j == caps.len() {
        if amount == 0 {
            emit(left);
        }
        return;
    }
    let room: usize = caps[j + 1..]
        .iter()
        .fold(0usize, |a, &c| a.saturating_add(c));
    let hi = amount.min(caps[j]);
    let lo = amount.saturating_sub(room);
    for v in lo..=hi {
        left[j] -= v;
        compositions(amount - v, caps, j + 1, left, emit);
        left[j] += v;
    }
}

/// A single table, row-major.
pub type IntTable = Vec<Vec<usize>>;

/// Every table satisfying `spec`, each once, in descending row-major
/// lexicographic order (each cell takes its largest feasible value first).
pub fn enumerate_tables(spec: &TableSpec) -> TableIter {
    TableIter::new(spec.clone())
}

/// Lazy backtracking stream of tables.
pub struct TableIter {
    spec: TableSpec,
    cells: Vec<(usize, usize)>,
    values: Vec<usize>,
    lows: Vec<usize>,
    row_left: Vec<usize>,
    col_left: Vec<usize>,
    depth: usize,
    started: bool,
    done: bool,
}

impl TableIter {
    fn new(spec: TableSpec) -> Self {
        let (r, s) = (spec.rows(), spec.cols());
        let cells: Vec<(usize, usize)> = (0..r)
            .flat_map(|i| (0..s).map(move |j| (i, j)))
            .filter(|&(i, j)| !spec.symmetric || j >= i)
            .collect();
        let done = !spec.is_feasible();
        TableIter {
            row_left: spec.row_margins.clone(),
            col_left: spec.col_margins.clone(),
            values: vec![0; cells.len()],
            lows: vec![0; cells.len()],
            cells,
            spec,
            depth: 0,
            started: false,
            done,
        }
    }

    /// Range of values cell `d` may take given the entries chosen before it.
    fn bounds(&self, d: usize) -> Option<(usize, usize)> {
        let (i, j) = self.cells[d];
        let cap = self.spec.cell_cap(i, j);
        let mut hi = cap.min(self.row_left[i]);
        if self.spec.symmetric {
            if i != j {
                hi = hi.min(self.row_left[j]);
            }
        } else {
            hi = hi.min(self.col_left[j]);
        }
        // the rest of row i must be able to take what this cell leaves
        let rest_of_row = self.cells[d + 1..]
            .iter()
            .take_while(|&&(ri, _)| ri == i)
            .map(|&(_, cj)| {
                let c = self.spec.cell_cap(i, cj);
                if self.spec.symmetric {
                    c.min(self.row_left[cj])
                } else {
                    c.min(self.col_left[cj])
                }
            })
            .fold(0usize, |a, c| a.saturating_add(c));
        let mut lo = self.row_left[i].saturating_sub(rest_of_row);
        if !self.spec.symmetric && i + 1 == self.spec.rows() {
            lo = lo.max(self.col_left[j]);
        }
        (lo <= hi).then_some((lo, hi))
    }

    fn apply(&mut self, d: usize, v: usize, sign_add: bool) {
        let (i, j) = self.cells[d];
        let update = |x: &mut usize| {
            if sign_add {
                *x += v
            } else {
                *x -= v
            }
        };
        if self.spec.symmetric {
            update(&mut self.row_left[i]);
            if i != j {
                update(&mut self.row_left[j]);
            }
        } else {
            update(&mut self.row_left[i]);
            update(&mut self.col_left[j]);
        }
    }

    /// Fills cells from `self.depth` on with their largest feasible values.
    /// Returns false if some cell has no feasible value.
    fn descend(&mut self) -> bool {
        while self.depth < self.cells.len() {
            match self.bounds(self.depth) {
                Some((lo, hi)) => {
                    self.values[self.depth] = hi;
                    self.lows[self.depth] = lo;
                    self.apply(self.depth, hi, false);
                    self.depth += 1;
                }
                None => return false,
            }
        }
        true
    }

    /// Steps the deepest cell that can still decrease. False when exhausted.
    fn backtrack(&mut self) -> bool {
        while self.depth > 0 {
            self.depth -= 1;
            let d = self.depth;
            let v = self.values[d];
            self.apply(d, v, true);
            if v > self.lows[d] {
                self.values[d] = v - 1;
                self.apply(d, v - 1, false);
                self.depth += 1;
                return true;
            }
        }
        false
    }

    fn complete(&self) -> bool {
        self.row_left.iter().all(|&x| x == 0)
            && (self.spec.symmetric || self.col_left.iter().all(|&x| x == 0))
    }

    fn current(&self) -> IntTable {
        let mut table = vec![vec![0; self.spec.cols()]; self.spec.rows()];
        for (&(i, j), &v) in self.cells.iter().zip(&self.values) {
            table[i][j] = v;
            if self.spec.symmetric {
                table[j][i] = v;
            }
        }
        table
    }
}

impl Iterator for TableIter {
    type Item = IntTable;

    fn next(&mut self) -> Option<IntTable> {
        if self.done {
            return None;
        }
        if self.started && !self.backtrack() {
            self.done = true;
            return None;
        }
        self.started = true;
        loop {
            if self.descend() && self.complete() {
                return Some(self.current());
            }
            if !self.backtrack() {
                self.done = true;
                return None;
            }
        }
    }
}

/// Number of derangements `!r`.
pub fn derangement_count(r: usize) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::zero());
    if r == 0 {
        return prev;
    }
    for k in 2..=r {
        let next = BigUint::from(k - 1) * (&cur + &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Number of fixed-point-free involutions on `r` letters: `(r-1)!!` for even
/// `r`, zero for odd `r`.
pub fn fpf_involution_count(r: usize) -> BigUint {
    if r % 2 == 1 {
        return BigUint::zero();
    }
    (1..r).step_by(2).map(BigUint::from).product()
}
