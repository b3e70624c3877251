//! Brute-force reference machinery for tests and for reproducing hand-derived
//! values. Nothing here uses the admission search or the variety code.

use crate::pattern::Pattern;
use crate::semigroup::NumericalSemigroup;

/// All numerical semigroups of genus at most `max_genus`, optionally only
/// those of one multiplicity, generated depth-first by the removal tree
/// rooted at the full set (children of `Λ` are `Λ ∖ {x}` for minimal
/// generators `x > F(Λ)`).
pub struct SemigroupUniverse {
    max_genus: u64,
    multiplicity: Option<u64>,
    stack: Vec<NumericalSemigroup>,
}

impl SemigroupUniverse {
    pub fn new(max_genus: u64, multiplicity: Option<u64>) -> Self {
        SemigroupUniverse {
            max_genus,
            multiplicity,
            stack: vec![NumericalSemigroup::full()],
        }
    }
}

impl Iterator for SemigroupUniverse {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        loop {
            let sg = self.stack.pop()?;
            if sg.genus() < self.max_genus {
                let f = sg.frobenius();
                for x in sg.minimal_generators().into_iter().rev() {
                    if (x as i64) <= f {
                        continue;
                    }
                    let child = sg.remove_element(x).expect("minimal generator");
                    // Multiplicity never decreases down the tree.
                    if self.multiplicity.is_some_and(|m| child.multiplicity() > m) {
                        continue;
                    }
                    self.stack.push(child);
                }
            }
            if self.multiplicity.is_none_or(|m| sg.multiplicity() == m) {
                return Some(sg);
            }
        }
    }
}

pub fn enumerate_semigroups(max_genus: u64, multiplicity: Option<u64>) -> Vec<NumericalSemigroup> {
    SemigroupUniverse::new(max_genus, multiplicity).collect()
}

/// Number of numerical semigroups of each genus `0..=max_genus`.
pub fn genus_counts(max_genus: u64) -> Vec<u64> {
    let mut counts = vec![0; max_genus as usize + 1];
    for sg in SemigroupUniverse::new(max_genus, None) {
        counts[sg.genus() as usize] += 1;
    }
    counts
}

/// Checks `p(s) ∈ Λ` for every nonincreasing sequence of nonzero members
/// with `s_1 <= s1_bound`. A semi-decision: exact only when the bound is
/// large enough.
pub fn naive_admits(sg: &NumericalSemigroup, p: &Pattern, s1_bound: u64) -> bool {
    naive_violation(sg, p, s1_bound).is_none()
}

/// First violating sequence with `s_1 <= s1_bound`, scanning `s_1` upwards.
pub fn naive_violation(sg: &NumericalSemigroup, p: &Pattern, s1_bound: u64) -> Option<Vec<i64>> {
    let members: Vec<i64> = (1..=s1_bound as i64).filter(|&x| sg.contains(x)).collect();
    let mut seq = vec![0i64; p.len()];
    scan(sg, p, &members, members.len(), 0, 0, &mut seq).then_some(seq)
}

/// Fills `seq[pos..]` from `members[..limit]` (nonincreasing). Returns true
/// when a violation has been written into `seq`.
fn scan(
    sg: &NumericalSemigroup,
    p: &Pattern,
    members: &[i64],
    limit: usize,
    pos: usize,
    partial: i64,
    seq: &mut [i64],
) -> bool {
    if limit == 0 {
        return false;
    }
    // Over real sequences u >= t_pos >= ... >= t_n >= m the remaining value
    // is linear, so its minimum sits at a vertex (u, ..., u, m, ..., m). If
    // even that clears the conductor, nothing below can fail.
    let c = sg.conductor() as i64;
    if subtree_minimum(p, pos, partial, members[limit - 1], members[0]) >= c {
        return false;
    }
    let a = p.coefficients()[pos];
    if pos + 1 == p.len() {
        let base = partial + p.constant();
        for &x in &members[..limit] {
            if !sg.contains(base + a * x) {
                seq[pos] = x;
                return true;
            }
        }
        return false;
    }
    for i in 0..limit {
        let x = members[i];
        seq[pos] = x;
        if scan(sg, p, members, i + 1, pos + 1, partial + a * x, seq) {
            return true;
        }
    }
    false
}

fn subtree_minimum(p: &Pattern, pos: usize, partial: i64, upper: i64, lower: i64) -> i64 {
    let rest = &p.coefficients()[pos..];
    (0..=rest.len())
        .map(|k| {
            let high: i64 = rest[..k].iter().sum();
            let low: i64 = rest[k..].iter().sum();
            partial + high * upper + low * lower + p.constant()
        })
        .min()
        .unwrap()
}
