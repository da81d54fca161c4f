//! The hook identity `[F^{((r+1)^r, r^s)} : (F^{(r+1, 1^s)})^{⊗r}] = 1` for
//! `s >= r² + r`, evaluated through the contingency-table method.
//!
//! In rank `n = r + s + 1` the target is twisted by `det^{-r}` and each hook
//! by `det^{-1}`, which turns the question into `LRC^λ(𝛍)` with
//! `λ = (1^r, 0^s, -r)` and `r` copies of `(r, 0^s, -1^r)`.

use num_bigint::BigUint;
use num_traits::One;

use crate::contingency::{lrc_general, MarginSpec};
use crate::error::{Error, Result};
use crate::partition::split;

/// The multiplicity, computed by [`lrc_general`] on the twisted weights.
pub fn hook_multiplicity(r: usize, s: usize) -> Result<BigUint> {
    if r == 0 || s < r * r + r {
        return Err(Error::PreconditionViolated(format!(
            "hook identity needs r >= 1 and s >= r^2 + r, got r = {r}, s = {s}"
        )));
    }
    let n = r + s + 1;
    let r_i = r as i64;

    let mut target: Vec<i64> = vec![r_i + 1; r];
    target.extend(std::iter::repeat_n(r_i, s));
    target.push(0);
    let target = split(&target)?.twist(-r_i);

    let mut hook: Vec<i64> = vec![r_i + 1];
    hook.extend(std::iter::repeat_n(1, s));
    hook.extend(std::iter::repeat_n(0, r));
    let hook = split(&hook)?.twist(-1);

    debug_assert_eq!(target.rank(), n);
    let margins = MarginSpec::new(vec![hook; r])?;
    lrc_general(&target, &margins)
}

/// True iff the hook multiplicity equals one.
pub fn hook_identity_check(r: usize, s: usize) -> Result<bool> {
    Ok(hook_multiplicity(r, s)? == BigUint::one())
}
