//! Exact decision procedure for "Λ admits p".
//!
//! Write a nonincreasing sequence of nonzero members `s_1 >= ... >= s_n` of
//! a semigroup with multiplicity `m` through its increments
//!
//! ```text
//! δ_j = s_j - s_{j+1}  (j < n),    δ_n = s_n - m,
//! ```
//!
//! so that `s_i = m + δ_i + ... + δ_n` and
//!
//! ```text
//! p(s) = σ_1 δ_1 + ... + σ_n δ_n + σ_n m + a_0.
//! ```
//!
//! If some `σ_j < 0` no semigroup admits `p`. Otherwise `p(s)` is at least
//! `σ_n m + a_0`, and only values up to the Frobenius number `F` can fail, so
//! only increments with `Σ σ_j δ_j <= R = F - σ_n m - a_0` matter. That bounds
//! every `δ_j` with `σ_j >= 1` by `⌊R / σ_j⌋`.
//!
//! Increments with `σ_j = 0` do not change the value. A violating sequence
//! with such a `δ_j > c` (the conductor) can have it lowered to `c`: the value
//! is unchanged and the entries `s_1..s_j` it shifts stay at or above
//! `m + c > F`, so they remain members. Capping those increments at `c`
//! therefore loses no violation, and the search over the resulting box is
//! exact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::{check_variety_hypotheses, Pattern};
use crate::semigroup::NumericalSemigroup;

/// Default ceiling on the number of increment vectors a single decision may
/// inspect.
pub const DEFAULT_SEARCH_CEILING: u128 = 1_000_000_000;

/// A nonincreasing sequence of nonzero members whose value is not a member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub sequence: Vec<u64>,
    pub value: i64,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.sequence.iter().map(u64::to_string).collect();
        write!(f, "s=({}) -> {}", parts.join(","), self.value)
    }
}

/// Per-increment bounds of the finite search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaBox {
    /// `F - σ_n m - a_0`; negative means nothing can fail.
    pub slack: i64,
    pub bounds: Vec<u64>,
}

impl DeltaBox {
    /// `None` when some partial sum is negative (then no box is needed: the
    /// pattern fails everywhere).
    pub fn new(sg: &NumericalSemigroup, p: &Pattern) -> Option<DeltaBox> {
        let sigma = p.partial_sums();
        if sigma.iter().any(|&s| s < 0) {
            return None;
        }
        let m = sg.multiplicity() as i64;
        let slack = sg.frobenius() - p.total() * m - p.constant();
        let bounds = sigma
            .iter()
            .map(|&s| {
                if slack < 0 {
                    0
                } else if s >= 1 {
                    (slack / s) as u64
                } else {
                    sg.conductor()
                }
            })
            .collect();
        Some(DeltaBox { slack, bounds })
    }

    /// Number of increment vectors in the box.
    pub fn volume(&self) -> u128 {
        self.bounds
            .iter()
            .fold(1u128, |acc, &b| acc.saturating_mul(b as u128 + 1))
    }
}

pub fn admits(sg: &NumericalSemigroup, p: &Pattern) -> Result<bool> {
    Ok(violating_sequence(sg, p)?.is_none())
}

pub fn violating_sequence(sg: &NumericalSemigroup, p: &Pattern) -> Result<Option<Witness>> {
    violating_sequence_with_ceiling(sg, p, DEFAULT_SEARCH_CEILING)
}

/// First violating sequence in lexicographic order of `(δ_1, ..., δ_n)`.
pub fn violating_sequence_with_ceiling(
    sg: &NumericalSemigroup,
    p: &Pattern,
    ceiling: u128,
) -> Result<Option<Witness>> {
    let n = p.len();
    let m = sg.multiplicity();
    let Some(dbox) = DeltaBox::new(sg, p) else {
        return Ok(Some(negative_sum_witness(sg, p)));
    };
    if dbox.slack < 0 {
        return Ok(None);
    }
    let volume = dbox.volume();
    if volume > ceiling {
        return Err(Error::SearchTooLarge { volume, ceiling });
    }
    let mut search = Search {
        sg,
        p,
        sigma: p.partial_sums(),
        bounds: &dbox.bounds,
        delta: vec![0; n],
        seq: vec![0; n],
        m,
    };
    Ok(search.run(0, dbox.slack))
}

struct Search<'a> {
    sg: &'a NumericalSemigroup,
    p: &'a Pattern,
    sigma: Vec<i64>,
    bounds: &'a [u64],
    delta: Vec<u64>,
    seq: Vec<i64>,
    m: u64,
}

impl Search<'_> {
    fn run(&mut self, j: usize, budget: i64) -> Option<Witness> {
        let n = self.delta.len();
        if j == n {
            return self.check();
        }
        let s = self.sigma[j];
        let top = if s > 0 {
            self.bounds[j].min((budget / s) as u64)
        } else {
            self.bounds[j]
        };
        for d in 0..=top {
            self.delta[j] = d;
            if let Some(w) = self.run(j + 1, budget - s * d as i64) {
                return Some(w);
            }
        }
        None
    }

    fn check(&mut self) -> Option<Witness> {
        let mut acc = self.m;
        for i in (0..self.delta.len()).rev() {
            acc += self.delta[i];
            if !self.sg.contains_u(acc) {
                return None;
            }
            self.seq[i] = acc as i64;
        }
        let value = self.p.eval(&self.seq);
        (!self.sg.contains(value)).then(|| Witness {
            sequence: self.seq.iter().map(|&x| x as u64).collect(),
            value,
        })
    }
}

/// A nonincreasing sequence of nonzero members with `p(s) = target`, if any.
/// Requires every partial sum of `p` to be nonnegative.
///
/// If `Λ` admits `p` and `x > F(Λ)` is a minimal generator, then `Λ ∖ {x}`
/// admits `p` exactly when this finds nothing for target `x` in `Λ ∖ {x}`,
/// which is far cheaper than deciding admission from scratch: the entries are
/// fixed from `s_n` upwards with membership checked as they are chosen, and
/// the last increment is solved for rather than searched (`σ_1 = a_1 >= 1`).
pub fn sequence_with_value(sg: &NumericalSemigroup, p: &Pattern, target: i64) -> Option<Witness> {
    let sigma = p.partial_sums();
    assert!(sigma.iter().all(|&s| s >= 0), "negative partial sum in {p}");
    let m = sg.multiplicity() as i64;
    let rest = target - p.total() * m - p.constant();
    if rest < 0 {
        return None;
    }
    let mut seq = vec![0i64; p.len()];
    let found = hit(sg, &sigma, p.len() - 1, m, rest, &mut seq);
    found.then(|| {
        debug_assert_eq!(p.eval(&seq), target);
        Witness {
            sequence: seq.iter().map(|&x| x as u64).collect(),
            value: target,
        }
    })
}

/// Chooses `δ_j` (so `s_j = below + δ_j`) with `Σ_{i<=j} σ_i δ_i = rest`.
fn hit(
    sg: &NumericalSemigroup,
    sigma: &[i64],
    j: usize,
    below: i64,
    rest: i64,
    seq: &mut [i64],
) -> bool {
    let s = sigma[j];
    if j == 0 {
        if rest % s != 0 {
            return false;
        }
        seq[0] = below + rest / s;
        return sg.contains(seq[0]);
    }
    let top = if s > 0 {
        rest / s
    } else {
        sg.conductor() as i64
    };
    for d in 0..=top {
        let x = below + d;
        if !sg.contains(x) {
            continue;
        }
        seq[j] = x;
        if hit(sg, sigma, j - 1, x, rest - s * d, seq) {
            return true;
        }
    }
    false
}

/// Violation for a pattern with a negative partial sum `σ_j`: put a large
/// member `l` in the first `j` slots and `m` elsewhere.
fn negative_sum_witness(sg: &NumericalSemigroup, p: &Pattern) -> Witness {
    let sigma = p.partial_sums();
    let j = sigma.iter().position(|&s| s < 0).unwrap();
    let m = sg.multiplicity() as i64;
    let tail: i64 = p.coefficients()[j + 1..].iter().sum::<i64>() * m + p.constant();
    // σ_j l + tail < 0  ⟸  l > tail / -σ_j; also l >= c keeps l a member.
    let neg = -sigma[j];
    let l = (tail.max(0) / neg + 1).max(sg.conductor() as i64).max(m);
    let sequence: Vec<u64> = (0..p.len())
        .map(|i| if i <= j { l as u64 } else { m as u64 })
        .collect();
    let args: Vec<i64> = sequence.iter().map(|&x| x as i64).collect();
    let value = p.eval(&args);
    debug_assert!(value < 0);
    Witness { sequence, value }
}

/// Whether `x` is a minimal generator of `Λ` relative to the variety of
/// multiplicity-`m` semigroups admitting `p`, i.e. whether `Λ ∖ {x}` is still
/// a member of that variety. That holds iff `x ≠ m`, `x` is a classical
/// minimal generator, and no nonincreasing sequence of nonzero members of
/// `Λ ∖ {x}` evaluates to `x`.
pub fn is_minimal_v_generator(sg: &NumericalSemigroup, p: &Pattern, x: u64) -> Result<bool> {
    let m = sg.multiplicity();
    check_variety_hypotheses(p, m)?;
    if !admits(sg, p)? {
        return Err(Error::PreconditionViolated(format!(
            "{sg} does not admit {p}"
        )));
    }
    if !sg.contains_u(x) || x == 0 {
        return Err(Error::NotMember(x as i64));
    }
    if x == m || !sg.is_minimal_generator(x) {
        return Ok(false);
    }
    // Λ already admits p, so the only value that can fail in Λ ∖ {x} is x.
    Ok(sequence_with_value(&sg.remove_element(x)?, p, x as i64).is_none())
}
