//! Independent routes to the same invariant dimensions, built only from
//! classical LR coefficients and never from contingency tables.
//!
//! * `GL_n`: twist every weight by a power of the determinant until it is
//!   polynomial, then count copies of the resulting power of `det` (a
//!   rectangle `(K^n)`) in the product of Schur functions.
//! * `O_n` / `Sp_2n`: fold the factors through the stable-range product
//!   `s_μ · s_ν = Σ_λ N^λ_{μν} s_λ`, with the Newell–Littlewood numbers
//!   `N^λ_{μν} = Σ_{α,β,γ} c^μ_{αβ} c^ν_{αγ} c^λ_{βγ}`, and read off the
//!   trivial component. This product rule is classical background used only
//!   as a cross-check; its validity in the stable range is taken as known.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::contingency::MarginSpec;
use crate::error::Result;
use crate::lr::{lr_coefficient, multi_lr, schur_product, ExpansionMap};
use crate::osp::{Group, SymMarginSpec};
use crate::partition::Partition;

/// `dim(F^{μ₁} ⊗ … ⊗ F^{μ_r})^{GL_n}` by determinant shifting. Valid for any
/// rank, inside or outside the stable range.
pub fn oracle_gl_invariants(margins: &MarginSpec) -> BigUint {
    oracle_gl_invariants_shifted(margins, &[])
}

/// As [`oracle_gl_invariants`], twisting weight `i` by `det^{kᵢ + extra[i]}`
/// where `kᵢ = μᵢ⁻(1)`. Missing `extra` entries count as zero. The result
/// does not depend on `extra`.
pub fn oracle_gl_invariants_shifted(margins: &MarginSpec, extra: &[usize]) -> BigUint {
    let n = margins.rank();
    let mut shifted = Vec::with_capacity(margins.len());
    let mut total_shift = 0usize;
    for (i, w) in margins.weights().iter().enumerate() {
        let k = w.minus().part(0) + extra.get(i).copied().unwrap_or(0);
        let twisted = w.twist(k as i64);
        debug_assert!(twisted.minus().is_empty());
        shifted.push(twisted.plus().clone());
        total_shift += k;
    }
    let (last, init) = shifted.split_last().expect("margin vectors are nonempty");
    // s_P · s_last contains the rectangle (K^n) once iff P is the rotated
    // complement of `last` inside it, and never otherwise
    match last.complement_in_rectangle(n, total_shift) {
        Some(target) => multi_lr(&target, init),
        None => BigUint::zero(),
    }
}

/// `s_{μ/α}` expanded in Schur functions: `β ↦ c^μ_{αβ}`.
fn skew_expansion(mu: &Partition, alpha: &Partition) -> ExpansionMap {
    let mut out = ExpansionMap::new();
    if !mu.contains(alpha) {
        return out;
    }
    for beta in Partition::within(mu.size() - alpha.size(), mu) {
        out.add(beta.clone(), lr_coefficient(mu, alpha, &beta));
    }
    out
}

/// Stable-range product of `O_n` / `Sp_2n` characters: `λ ↦ N^λ_{μν}`.
pub fn newell_littlewood_product(mu: &Partition, nu: &Partition) -> ExpansionMap {
    let common = mu.intersection(nu);
    let mut out = ExpansionMap::new();
    for a in 0..=common.size() {
        for alpha in Partition::within(a, &common) {
            let left = skew_expansion(mu, &alpha);
            let right = skew_expansion(nu, &alpha);
            for (beta, cb) in left.iter() {
                for (gamma, cg) in right.iter() {
                    let weight = cb * cg;
                    for (lambda, c) in schur_product(beta, gamma, None) {
                        out.add(lambda, &weight * c);
                    }
                }
            }
        }
    }
    out
}

/// `N^λ_{μν}` straight from the triple sum.
pub fn newell_littlewood(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    let mut total = BigUint::zero();
    let common = mu.intersection(nu);
    for a in 0..=common.size() {
        for alpha in Partition::within(a, &common) {
            let (bs, gs) = (mu.size() - a, nu.size() - a);
            if bs + gs != lambda.size() {
                continue;
            }
            for beta in Partition::within(bs, mu) {
                let c1 = lr_coefficient(mu, &alpha, &beta);
                if c1.is_zero() {
                    continue;
                }
                for gamma in Partition::within(gs, nu) {
                    let c2 = lr_coefficient(nu, &alpha, &gamma);
                    if c2.is_zero() {
                        continue;
                    }
                    total += &c1 * c2 * lr_coefficient(lambda, &beta, &gamma);
                }
            }
        }
    }
    total
}

/// `dim(⊗ E^{μᵢ}_n)^{O_n}` by folding Newell–Littlewood products.
pub fn oracle_osp_invariants(margins: &SymMarginSpec) -> Result<BigUint> {
    margins.require_stable(Group::Orthogonal)?;
    let parts = margins.partitions();
    let mut acc = ExpansionMap::unit(parts[0].clone());
    for (idx, mu) in parts.iter().enumerate().skip(1) {
        // N^λ_{κμ} ≠ 0 forces |λ| >= |κ| - |μ|, so a key larger than all the
        // factors still to come can never fold down to the empty partition
        let rest: usize = parts[idx..].iter().map(Partition::size).sum();
        let mut next = ExpansionMap::new();
        for (kappa, coeff) in acc.iter() {
            if kappa.size() > rest {
                continue;
            }
            for (lambda, c) in newell_littlewood_product(kappa, mu) {
                next.add(lambda, coeff * c);
            }
        }
        acc = next;
    }
    Ok(acc.get(&Partition::empty()))
}

/// Checks the hook identity `[F^{((r+1)^r, r^s)} : (F^{(r+1,1^s)})^{⊗r}] = 1`
/// by classical LR folding, with no twisting. Used to cross-check the
/// table-method version in [`crate::identities`].
pub fn hook_multiplicity_direct(r: usize, s: usize) -> BigUint {
    let mut target = vec![r + 1; r];
    target.extend(std::iter::repeat_n(r, s));
    let mut hook = vec![r + 1];
    hook.extend(std::iter::repeat_n(1, s));
    let target = Partition::new(target).expect("weakly decreasing");
    let hook = Partition::new(hook).expect("weakly decreasing");
    multi_lr(&target, &vec![hook; r])
}
