#![allow(dead_code)]

use lrtables::{GlWeight, MarginSpec, Partition};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Uniform over partitions with size <= max_size and length <= max_len.
pub fn random_partition(rng: &mut StdRng, max_size: usize, max_len: usize) -> Partition {
    let pool: Vec<Partition> = (0..=max_size)
        .flat_map(|s| Partition::bounded(s, max_len, s))
        .collect();
    pool.choose(rng).unwrap().clone()
}

/// A random margin vector in the stable range. With probability `balance`
/// the total sizes of plus and minus parts are forced equal, so the value
/// has a chance to be nonzero.
pub fn random_margins(
    rng: &mut StdRng,
    max_r: usize,
    max_size: usize,
    max_len: usize,
    balance: f64,
) -> MarginSpec {
    let force = rng.gen_bool(balance);
    loop {
        let r = rng.gen_range(1..=max_r);
        let pairs: Vec<(Partition, Partition)> = (0..r)
            .map(|_| {
                (
                    random_partition(rng, max_size, max_len),
                    random_partition(rng, max_size, max_len),
                )
            })
            .collect();
        let plus: usize = pairs.iter().map(|(a, _)| a.size()).sum();
        let minus: usize = pairs.iter().map(|(_, b)| b.size()).sum();
        if force && plus != minus {
            continue;
        }
        let threshold: usize = pairs.iter().map(|(a, b)| a.length() + b.length()).sum();
        let n = threshold.max(1) + rng.gen_range(0..=1);
        return MarginSpec::from_pairs(pairs, n).unwrap();
    }
}

pub fn permuted(m: &MarginSpec, rng: &mut StdRng) -> MarginSpec {
    let mut w: Vec<GlWeight> = m.weights().to_vec();
    w.shuffle(rng);
    MarginSpec::new(w).unwrap()
}

/// Number of LR tableaux of shape λ/μ and content ν by plain backtracking
/// over semistandard fillings, lattice condition checked on the finished word.
pub fn brute_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..lambda.length())
        .flat_map(|i| (mu.part(i)..lambda.part(i)).map(move |j| (i, j)))
        .collect();
    let mut grid = vec![vec![0usize; lambda.part(0)]; lambda.length()];
    let mut content = vec![0usize; nu.length()];
    let mut found = 0;
    fill(
        0,
        &cells,
        lambda,
        mu,
        nu,
        &mut grid,
        &mut content,
        &mut found,
    );
    found
}

#[allow(clippy::too_many_arguments)]
fn fill(
    idx: usize,
    cells: &[(usize, usize)],
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    grid: &mut Vec<Vec<usize>>,
    content: &mut Vec<usize>,
    found: &mut u64,
) {
    if idx == cells.len() {
        // reading word: rows top to bottom, each right to left
        let mut seen = vec![0usize; nu.length() + 1];
        for (i, row) in grid.iter().enumerate() {
            for j in (mu.part(i)..lambda.part(i)).rev() {
                let v = row[j];
                seen[v] += 1;
                if v > 1 && seen[v] > seen[v - 1] {
                    return;
                }
            }
        }
        *found += 1;
        return;
    }
    let (i, j) = cells[idx];
    for v in 1..=nu.length() {
        if content[v - 1] == nu.part(v - 1) {
            continue;
        }
        if j > mu.part(i) && grid[i][j - 1] > v {
            continue;
        }
        if i > 0 && j >= mu.part(i - 1) && grid[i - 1][j] >= v {
            continue;
        }
        grid[i][j] = v;
        content[v - 1] += 1;
        fill(idx + 1, cells, lambda, mu, nu, grid, content, found);
        content[v - 1] -= 1;
        grid[i][j] = 0;
    }
}

/// Count of r×s nonnegative integer matrices with the given margins: every
/// row is drawn independently from all compositions of its margin, and the
/// assembled matrix is filtered on columns, diagonal and symmetry.
pub fn brute_tables(
    rows: &[usize],
    cols: &[usize],
    hollow: bool,
    symmetric: bool,
    cap: Option<usize>,
) -> u64 {
    let s = cols.len();
    let cap = cap.unwrap_or(usize::MAX);
    let choices: Vec<Vec<Vec<usize>>> = rows.iter().map(|&m| compositions(m, s, cap)).collect();
    let mut picked: Vec<&Vec<usize>> = Vec::with_capacity(rows.len());
    let mut count = 0;
    product(&choices, &mut picked, &mut |table| {
        let r = table.len();
        let ok = (0..s).all(|j| table.iter().map(|row| row[j]).sum::<usize>() == cols[j])
            && (!hollow || (0..r.min(s)).all(|i| table[i][i] == 0))
            && (!symmetric
                || (r == s && (0..r).all(|i| (0..s).all(|j| table[i][j] == table[j][i]))));
        if ok {
            count += 1;
        }
    });
    count
}

fn compositions(total: usize, parts: usize, cap: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total.min(cap) {
        for mut rest in compositions(total - first, parts - 1, cap) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn product<'a>(
    choices: &'a [Vec<Vec<usize>>],
    picked: &mut Vec<&'a Vec<usize>>,
    visit: &mut dyn FnMut(&[&Vec<usize>]),
) {
    if picked.len() == choices.len() {
        visit(picked);
        return;
    }
    for row in &choices[picked.len()] {
        picked.push(row);
        product(choices, picked, visit);
        picked.pop();
    }
}

/// Count of symmetric r×r tables with row margins `margins`, by an odometer
/// over the upper triangle (diagonal included unless `hollow`).
pub fn brute_symmetric_tables(margins: &[usize], hollow: bool) -> u64 {
    let r = margins.len();
    let cells: Vec<(usize, usize)> = (0..r)
        .flat_map(|i| (i..r).map(move |j| (i, j)))
        .filter(|&(i, j)| !(hollow && i == j))
        .collect();
    let max = margins.iter().copied().max().unwrap_or(0);
    let mut values = vec![0usize; cells.len()];
    let mut count = 0;
    loop {
        let mut sums = vec![0usize; r];
        for (&(i, j), &v) in cells.iter().zip(&values) {
            sums[i] += v;
            if i != j {
                sums[j] += v;
            }
        }
        if sums == margins {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == cells.len() {
                return count;
            }
            if values[k] < max {
                values[k] += 1;
                break;
            }
            values[k] = 0;
            k += 1;
        }
    }
}

/// Every permutation of `0..r` in some order.
pub fn permutations(r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for perm in permutations(r - 1) {
        for slot in 0..r {
            let mut next = perm.clone();
            next.insert(slot, r - 1);
            out.push(next);
        }
    }
    out
}

pub fn brute_derangements(r: usize) -> u64 {
    permutations(r)
        .iter()
        .filter(|p| p.iter().enumerate().all(|(i, &x)| i != x))
        .count() as u64
}

pub fn brute_fpf_involutions(r: usize) -> u64 {
    permutations(r)
        .iter()
        .filter(|p| p.iter().enumerate().all(|(i, &x)| i != x && p[x] == i))
        .count() as u64
}
