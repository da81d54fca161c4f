//! Partitions and rational `GL_n` weights.
//!
//! A [`Partition`] is stored in canonical form (no trailing zeros), so
//! equality and hashing see one representation per Young diagram. A
//! [`GlWeight`] is a weakly decreasing integer `n`-tuple, kept as the pair of
//! partitions formed by its positive entries and its negated negative entries.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(format_seq(&parts)));
        }
        Ok(Partition { parts })
    }

    /// Caller guarantees `parts` is weakly decreasing; trailing zeros are stripped.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(k)`.
    pub fn row(k: usize) -> Self {
        Partition::from_sorted(vec![k])
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition::from_sorted(vec![1; k])
    }

    /// The `rows x cols` rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        Partition::from_sorted(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    #[inline]
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Cellwise intersection of two diagrams.
    pub fn intersection(&self, other: &Partition) -> Partition {
        Partition::from_sorted(
            self.parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Complement of `self` inside the `rows x cols` rectangle, rotated by a
    /// half turn so it is again a partition. `None` if `self` does not fit.
    pub fn complement_in_rectangle(&self, rows: usize, cols: usize) -> Option<Partition> {
        if self.length() > rows || self.part(0) > cols {
            return None;
        }
        Some(Partition::from_sorted(
            (0..rows).rev().map(|i| cols - self.part(i)).collect(),
        ))
    }

    /// Adds `k` to each of the first `n` parts (the diagram shifted by `k`
    /// full columns of height `n`). Requires `length() <= n`.
    pub fn add_columns(&self, n: usize, k: usize) -> Partition {
        debug_assert!(self.length() <= n);
        Partition::from_sorted((0..n).map(|i| self.part(i) + k).collect())
    }

    /// All partitions of `size` with at most `max_length` parts, each at most
    /// `max_part`, in the canonical order.
    pub fn bounded(size: usize, max_length: usize, max_part: usize) -> Vec<Partition> {
        let cap = Partition::rectangle(max_length, max_part);
        Partition::within(size, &cap)
    }

    /// All partitions of `size` whose diagram lies inside `shape`, in the
    /// canonical order.
    pub fn within(size: usize, shape: &Partition) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(shape.length());
        fill_within(size, shape, usize::MAX, &mut current, &mut out);
        out.sort();
        out
    }

    /// All partitions of `size`.
    pub fn all_of_size(size: usize) -> Vec<Partition> {
        Partition::bounded(size, size, size)
    }
}

fn fill_within(
    remaining: usize,
    shape: &Partition,
    prev: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    let row = current.len();
    if row >= shape.length() {
        return;
    }
    // the rest of the shape below this row must be able to absorb the remainder
    let hi = remaining.min(prev).min(shape.part(row));
    for p in (1..=hi).rev() {
        let room: usize = (row + 1..shape.length())
            .map(|i| shape.part(i).min(p))
            .sum();
        if p + room < remaining {
            break;
        }
        current.push(p);
        fill_within(remaining - p, shape, p, current, out);
        current.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn format_seq<T: fmt::Display>(items: &[T]) -> String {
    let body: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("[{}]", body.join(","))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_seq(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a bracketed, comma-separated integer list such as `[3, 1, -2]`.
pub(crate) fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [..], got {trimmed:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad integer {:?}: {e}", tok.trim())))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = parse_int_list(s)?;
        if values.iter().any(|&v| v < 0) {
            return Err(Error::Parse(format!("negative part in partition {s:?}")));
        }
        Partition::new(values.into_iter().map(|v| v as usize).collect())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl<const N: usize> TryFrom<[usize; N]> for Partition {
    type Error = Error;

    fn try_from(parts: [usize; N]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }
}

/// Builds the `n`-tuple `(α(1),…,α(a), 0,…,0, −β(b),…,−β(1))`.
pub fn combine(alpha: &Partition, beta: &Partition, n: usize) -> Result<Vec<i64>> {
    if alpha.length() + beta.length() > n {
        return Err(Error::LengthOverflow {
            plus: alpha.length(),
            minus: beta.length(),
            n,
        });
    }
    let mut tuple = Vec::with_capacity(n);
    tuple.extend(alpha.parts().iter().map(|&p| p as i64));
    tuple.resize(n - beta.length(), 0);
    tuple.extend(beta.parts().iter().rev().map(|&p| -(p as i64)));
    Ok(tuple)
}

/// Splits a weakly decreasing tuple into its positive and negative parts.
pub fn split(tuple: &[i64]) -> Result<GlWeight> {
    if tuple.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDecreasing(format_seq(tuple)));
    }
    let plus = tuple
        .iter()
        .take_while(|&&v| v > 0)
        .map(|&v| v as usize)
        .collect();
    let minus = tuple
        .iter()
        .rev()
        .take_while(|&&v| v < 0)
        .map(|&v| (-v) as usize)
        .collect();
    Ok(GlWeight {
        plus: Partition::from_sorted(plus),
        minus: Partition::from_sorted(minus),
        n: tuple.len(),
    })
}

/// Highest weight of an irreducible rational representation of `GL_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GlWeight {
    plus: Partition,
    minus: Partition,
    n: usize,
}

impl GlWeight {
    pub fn new(plus: Partition, minus: Partition, n: usize) -> Result<Self> {
        if plus.length() + minus.length() > n {
            return Err(Error::LengthOverflow {
                plus: plus.length(),
                minus: minus.length(),
                n,
            });
        }
        Ok(GlWeight { plus, minus, n })
    }

    /// A polynomial weight `(λ, 0)`.
    pub fn polynomial(plus: Partition, n: usize) -> Result<Self> {
        GlWeight::new(plus, Partition::empty(), n)
    }

    pub fn trivial(n: usize) -> Self {
        GlWeight {
            plus: Partition::empty(),
            minus: Partition::empty(),
            n,
        }
    }

    pub fn plus(&self) -> &Partition {
        &self.plus
    }

    pub fn minus(&self) -> &Partition {
        &self.minus
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_trivial(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }

    /// `ℓ(λ⁺) + ℓ(λ⁻)`.
    pub fn depth(&self) -> usize {
        self.plus.length() + self.minus.length()
    }

    pub fn to_tuple(&self) -> Vec<i64> {
        combine(&self.plus, &self.minus, self.n).expect("weight invariant guarantees fit")
    }

    /// The weight of the dual representation.
    pub fn dual(&self) -> GlWeight {
        GlWeight {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
            n: self.n,
        }
    }

    /// Tensoring with `det^k`: adds `k` to every entry.
    pub fn twist(&self, k: i64) -> GlWeight {
        let shifted: Vec<i64> = self.to_tuple().into_iter().map(|v| v + k).collect();
        split(&shifted).expect("shifting preserves monotonicity")
    }

    /// Same weight re-embedded in rank `n` (zeros inserted or removed in the middle).
    pub fn with_rank(&self, n: usize) -> Result<GlWeight> {
        GlWeight::new(self.plus.clone(), self.minus.clone(), n)
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_seq(&self.to_tuple()))
    }
}

impl fmt::Debug for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GlWeight({}/{}; n={})", self.plus, self.minus, self.n)
    }
}

impl FromStr for GlWeight {
    type Err = Error;

    /// Parses a full tuple such as `[3,1,0,0,-2]`; the rank is its length.
    fn from_str(s: &str) -> Result<Self> {
        let tuple = parse_int_list(s)?;
        if tuple.is_empty() {
            return Err(Error::Parse("a weight needs at least one entry".into()));
        }
        split(&tuple)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2, 2]).conjugate(), p(&[3, 3]));
    }

    #[test]
    fn canonical_form_strips_zeros() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(p(&[0]), Partition::empty());
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::NotDecreasing(_))
        ));
    }

    #[test]
    fn conjugate_is_involution_up_to_30() {
        for size in 0..=30 {
            for lambda in Partition::all_of_size(size) {
                let c = lambda.conjugate();
                assert_eq!(c.size(), lambda.size());
                assert_eq!(c.length(), lambda.part(0));
                assert_eq!(c.conjugate(), lambda);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Partition::bounded(4, 2, 3), vec![p(&[2, 2]), p(&[3, 1])]);
        assert_eq!(Partition::within(3, &p(&[2, 1])), vec![p(&[2, 1])]);
        assert!(Partition::within(4, &p(&[2, 1])).is_empty());
    }

    #[test]
    fn ordering_is_size_then_lex() {
        let mut v = vec![p(&[3]), p(&[1, 1]), p(&[2, 1]), p(&[2]), p(&[1, 1, 1])];
        v.sort();
        assert_eq!(
            v,
            vec![p(&[1, 1]), p(&[2]), p(&[1, 1, 1]), p(&[2, 1]), p(&[3])]
        );
    }

    #[test]
    fn combine_examples() {
        assert_eq!(
            combine(&p(&[3, 1]), &p(&[2]), 5).unwrap(),
            vec![3, 1, 0, 0, -2]
        );
        assert_eq!(combine(&p(&[1]), &p(&[1]), 2).unwrap(), vec![1, -1]);
        assert!(matches!(
            combine(&p(&[2, 1]), &p(&[2, 1]), 3),
            Err(Error::LengthOverflow { .. })
        ));
    }

    #[test]
    fn split_examples() {
        let w = split(&[3, 1, 0, 0, -2]).unwrap();
        assert_eq!((w.plus(), w.minus(), w.rank()), (&p(&[3, 1]), &p(&[2]), 5));
        let z = split(&[0, 0, 0]).unwrap();
        assert!(z.is_trivial());
        assert_eq!(z.rank(), 3);
        assert!(matches!(split(&[1, 2, 0]), Err(Error::NotDecreasing(_))));
    }

    #[test]
    fn dual_examples() {
        let w = GlWeight::new(p(&[3, 1]), p(&[2]), 5).unwrap();
        assert_eq!(w.dual(), GlWeight::new(p(&[2]), p(&[3, 1]), 5).unwrap());
        assert_eq!(GlWeight::trivial(4).dual(), GlWeight::trivial(4));
        let adj = GlWeight::new(p(&[1]), p(&[1]), 4).unwrap();
        assert_eq!(adj.dual(), adj);
    }

    #[test]
    fn split_combine_round_trip_exhaustive() {
        for n in 1..=12 {
            for a in 0..=6 {
                for alpha in Partition::all_of_size(a) {
                    for b in 0..=6 {
                        for beta in Partition::all_of_size(b) {
                            if alpha.length() + beta.length() > n {
                                continue;
                            }
                            let t = combine(&alpha, &beta, n).unwrap();
                            assert_eq!(t.len(), n);
                            let w = split(&t).unwrap();
                            assert_eq!((w.plus(), w.minus()), (&alpha, &beta));
                            let d = w.dual();
                            assert_eq!(d.dual(), w);
                            assert_eq!(d.depth(), w.depth());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn twist_and_text() {
        let w: GlWeight = "[ 3, 1, 0, 0, -2 ]".parse().unwrap();
        assert_eq!(w.to_string(), "[3,1,0,0,-2]");
        assert_eq!(w.twist(2).to_string(), "[5,3,2,2,0]");
        assert_eq!(w.twist(2).twist(-2), w);
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,-1]".parse::<Partition>().is_err());
        assert!("1,2".parse::<GlWeight>().is_err());
    }

    #[test]
    fn complement_in_rectangle() {
        assert_eq!(p(&[3, 1]).complement_in_rectangle(3, 3), Some(p(&[3, 2])));
        assert_eq!(p(&[4]).complement_in_rectangle(2, 3), None);
        assert_eq!(p(&[2, 1]).add_columns(3, 1), p(&[3, 2, 1]));
    }
}
