//! Bounds on the number of rational places of a function field computed from
//! the Weierstrass semigroup `Λ` of one rational place and the field size `q`.
//!
//! * Geil–Matsumoto: `#(Λ ∖ ∪_{λ ∈ Λ∖{0}} (qλ + Λ)) + 1`
//! * Lewittes: `1 + q·m`
//! * Beelen–Ruano (places with nonzero coordinates): the Geil–Matsumoto
//!   count with `q - 1` in place of `q`.
//!
//! Geil–Matsumoto never exceeds Lewittes, and they agree exactly when
//! `qx - qm ∈ Λ` for every minimal generator `x`.

use serde::{Deserialize, Serialize};

use crate::semigroup::NumericalSemigroup;

/// Number of members `x` not of the form `factor·λ + μ` with `λ` a nonzero
/// member and `μ` a member, plus one.
///
/// Members at or above `factor·m + c` are always covered (take `λ = m`), so
/// only `[0, factor·m + c)` is scanned.
pub fn place_count_bound(sg: &NumericalSemigroup, factor: u64) -> u64 {
    assert!(factor >= 1, "factor must be positive");
    let window = factor * sg.multiplicity() + sg.conductor();
    count_uncovered(sg, factor, window) + 1
}

pub fn count_uncovered(sg: &NumericalSemigroup, factor: u64, window: u64) -> u64 {
    let m = sg.multiplicity();
    sg.members_below(window)
        .filter(|&x| {
            let covered = (m..=x / factor)
                .any(|lambda| sg.contains_u(lambda) && sg.contains_u(x - factor * lambda));
            !covered
        })
        .count() as u64
}

pub fn gm_bound(sg: &NumericalSemigroup, q: u64) -> u64 {
    assert!(q >= 2, "field size must be at least 2");
    place_count_bound(sg, q)
}

pub fn lewittes_bound(sg: &NumericalSemigroup, q: u64) -> u64 {
    assert!(q >= 2, "field size must be at least 2");
    1 + q * sg.multiplicity()
}

pub fn br_bound(sg: &NumericalSemigroup, q: u64) -> u64 {
    assert!(q >= 2, "field size must be at least 2");
    place_count_bound(sg, q - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coincidence {
    pub holds: bool,
    /// Smallest minimal generator `x` with `kx - km ∉ Λ`.
    pub failing_generator: Option<u64>,
}

/// Whether `kx - km ∈ Λ` for every minimal generator `x`. Asserts that this
/// agrees with the bound comparison and with `Λ ∖ {0} ⊆ m + Λ/k`.
pub fn bound_coincidence(sg: &NumericalSemigroup, k: u64) -> Coincidence {
    let by_generators = generator_criterion(sg, k);
    let by_bound = place_count_bound(sg, k) == 1 + k * sg.multiplicity();
    let by_quotient = quotient_criterion(sg, k);
    assert!(
        by_generators.holds == by_bound && by_bound == by_quotient,
        "coincidence criteria disagree on {sg} with k = {k}"
    );
    by_generators
}

/// `gm_bound == lewittes_bound`, with the first failing generator if not.
pub fn gm_equals_lewittes(sg: &NumericalSemigroup, q: u64) -> Coincidence {
    assert!(q >= 2, "field size must be at least 2");
    bound_coincidence(sg, q)
}

pub fn generator_criterion(sg: &NumericalSemigroup, k: u64) -> Coincidence {
    let m = sg.multiplicity() as i64;
    let k = k as i64;
    let failing_generator = sg
        .minimal_generators()
        .into_iter()
        .find(|&x| !sg.contains(k * x as i64 - k * m));
    Coincidence {
        holds: failing_generator.is_none(),
        failing_generator,
    }
}

/// `Λ ∖ {0} ⊆ m + Λ/k`, i.e. `kx - km ∈ Λ` for every nonzero member `x`.
pub fn quotient_criterion(sg: &NumericalSemigroup, k: u64) -> bool {
    let quo = sg.quotient(k);
    let m = sg.multiplicity() as i64;
    // x - m ∈ Λ/k holds for all x >= m + conductor(Λ/k).
    let bound = sg.multiplicity() + quo.conductor();
    sg.members_below(bound)
        .skip(1)
        .all(|x| quo.contains(x as i64 - m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub gm: u64,
    pub lewittes: u64,
    pub br: u64,
    pub coincide_gm_lewittes: bool,
    /// `br == 1 + (q-1)·m`.
    pub coincide_br: bool,
    pub failing_generator: Option<u64>,
}

pub fn bound_report(sg: &NumericalSemigroup, q: u64) -> BoundReport {
    let gm = gm_bound(sg, q);
    let lewittes = lewittes_bound(sg, q);
    let br = br_bound(sg, q);
    let c = gm_equals_lewittes(sg, q);
    BoundReport {
        gm,
        lewittes,
        br,
        coincide_gm_lewittes: c.holds,
        coincide_br: br == 1 + (q - 1) * sg.multiplicity(),
        failing_generator: c.failing_generator,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    /// Direct set computation over a generous window, independent of the
    /// window argument above.
    fn surviving(sg: &NumericalSemigroup, factor: u64, window: u64) -> Vec<u64> {
        let members: Vec<u64> = sg.members_below(window).collect();
        let mut covered = vec![false; window as usize];
        for &l in members.iter().filter(|&&l| l > 0) {
            for &mu in &members {
                let x = factor * l + mu;
                if x < window {
                    covered[x as usize] = true;
                }
            }
        }
        members
            .into_iter()
            .filter(|&x| !covered[x as usize])
            .collect()
    }

    #[test]
    fn gm_examples() {
        let s23 = sg(&[2, 3]);
        assert_eq!(surviving(&s23, 2, 40), vec![0, 2, 3, 5]);
        assert_eq!(gm_bound(&s23, 2), 5);
        let o3 = NumericalSemigroup::ordinary(3);
        assert_eq!(surviving(&o3, 2, 40), vec![0, 3, 4, 5, 7]);
        assert_eq!(gm_bound(&o3, 2), 6);
        let s36 = NumericalSemigroup::from_gaps(&[1, 2, 4, 5]).unwrap();
        assert_eq!(s36, sg(&[3, 7, 8]));
        assert_eq!(surviving(&s36, 2, 40).len() as u64 + 1, 7);
        assert_eq!(gm_bound(&s36, 2), 7);
    }

    #[test]
    fn lewittes_examples() {
        assert_eq!(lewittes_bound(&sg(&[2, 3]), 2), 5);
        assert_eq!(lewittes_bound(&NumericalSemigroup::ordinary(3), 2), 7);
        assert_eq!(lewittes_bound(&NumericalSemigroup::ordinary(5), 3), 16);
    }

    #[test]
    fn br_examples() {
        assert_eq!(br_bound(&sg(&[2, 3]), 3), gm_bound(&sg(&[2, 3]), 2));
        assert_eq!(br_bound(&NumericalSemigroup::ordinary(3), 3), 6);
        assert_eq!(br_bound(&NumericalSemigroup::full(), 2), 2);
        assert_eq!(surviving(&NumericalSemigroup::full(), 1, 20), vec![0]);
    }

    #[test]
    fn coincidence_examples() {
        let s36 = sg(&[3, 7, 8]);
        assert_eq!(
            gm_equals_lewittes(&s36, 2),
            Coincidence {
                holds: true,
                failing_generator: None
            }
        );
        assert_eq!(
            gm_equals_lewittes(&NumericalSemigroup::ordinary(3), 2),
            Coincidence {
                holds: false,
                failing_generator: Some(4)
            }
        );
        assert!(gm_equals_lewittes(&sg(&[2, 3]), 2).holds);
    }

    #[test]
    fn window_doubling_changes_nothing() {
        for s in crate::oracle::enumerate_semigroups(7, None) {
            for factor in 1..=5 {
                let w = factor * s.multiplicity() + s.conductor();
                assert_eq!(
                    count_uncovered(&s, factor, w),
                    count_uncovered(&s, factor, 2 * w),
                    "{s} factor {factor}"
                );
                assert_eq!(
                    count_uncovered(&s, factor, w),
                    surviving(&s, factor, 2 * w + 10).len() as u64
                );
            }
        }
    }

    #[test]
    fn report() {
        let r = bound_report(&NumericalSemigroup::ordinary(3), 2);
        assert_eq!(
            r,
            BoundReport {
                gm: 6,
                lewittes: 7,
                br: 2,
                coincide_gm_lewittes: false,
                coincide_br: false,
                failing_generator: Some(4)
            }
        );
    }
}
