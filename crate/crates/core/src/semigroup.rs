//! Numerical semigroups stored as a membership bitmap below the conductor.
//!
//! A numerical semigroup is a cofinite submonoid of the nonnegative integers.
//! Everything at or above the conductor `c = F + 1` is a member, so the value
//! is fully described by the membership of `[0, c)`. The full set of
//! nonnegative integers is the value with `c = 0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest conductor any constructor will produce.
pub const DEFAULT_CONDUCTOR_LIMIT: u64 = 1 << 20;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    /// `members[x]` for `x < conductor`; `members[conductor - 1]` is false.
    members: Vec<bool>,
    multiplicity: u64,
    genus: u64,
}

impl NumericalSemigroup {
    /// The full set of nonnegative integers.
    pub fn full() -> Self {
        NumericalSemigroup {
            members: Vec::new(),
            multiplicity: 1,
            genus: 0,
        }
    }

    /// The ordinary semigroup `{0, m, →}`.
    pub fn ordinary(m: u64) -> Self {
        assert!(m >= 1, "multiplicity must be positive");
        let mut members = vec![false; m as usize];
        if let Some(zero) = members.first_mut() {
            *zero = true;
        }
        Self::from_bitmap_unchecked(members)
    }

    /// Additive closure of `generators`, which must have gcd 1.
    pub fn from_generators(generators: &[u64]) -> Result<Self> {
        Self::from_generators_with_limit(generators, DEFAULT_CONDUCTOR_LIMIT)
    }

    pub fn from_generators_with_limit(generators: &[u64], limit: u64) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotCofinite { gcd: g });
        }
        let mut gens: Vec<u64> = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let m = gens[0];

        // Sieve forward until a run of m consecutive members appears; from
        // there on every integer is a member.
        let mut reach: Vec<bool> = vec![true];
        let mut run = 0u64;
        let mut x = 0u64;
        while run < m {
            x += 1;
            if x > limit + m {
                return Err(Error::ConductorTooLarge { limit });
            }
            let hit = gens
                .iter()
                .take_while(|&&g| g <= x)
                .any(|&g| reach[(x - g) as usize]);
            reach.push(hit);
            run = if hit { run + 1 } else { 0 };
        }
        let conductor = x + 1 - m;
        if conductor > limit {
            return Err(Error::ConductorTooLarge { limit });
        }
        reach.truncate(conductor as usize);
        Ok(Self::from_bitmap_unchecked(reach))
    }

    /// Semigroup whose gap set is exactly `gaps`; fails if the complement is
    /// not closed under addition.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        let Some(&max) = gaps.iter().max() else {
            return Ok(Self::full());
        };
        if gaps.contains(&0) {
            return Err(Error::Parse("0 cannot be a gap".into()));
        }
        let mut members = vec![true; max as usize + 1];
        for &g in gaps {
            members[g as usize] = false;
        }
        Self::from_bitmap(members)
    }

    /// Builds from membership of `[0, bits.len())`; everything above is a
    /// member. Validates additive closure.
    pub fn from_bitmap(bits: Vec<bool>) -> Result<Self> {
        if bits.first() == Some(&false) {
            return Err(Error::Parse("0 must be a member".into()));
        }
        let sg = Self::from_bitmap_unchecked(bits);
        sg.check_closure()?;
        Ok(sg)
    }

    /// Membership predicate over `[0, bound)`, everything at or above `bound`
    /// is a member.
    pub fn from_predicate(bound: u64, pred: impl Fn(u64) -> bool) -> Result<Self> {
        Self::from_bitmap((0..bound).map(|x| x == 0 || pred(x)).collect())
    }

    pub(crate) fn from_bitmap_unchecked(mut bits: Vec<bool>) -> Self {
        while bits.last() == Some(&true) {
            bits.pop();
        }
        let conductor = bits.len() as u64;
        let multiplicity = bits
            .iter()
            .skip(1)
            .position(|&b| b)
            .map_or(conductor.max(1), |i| i as u64 + 1);
        let genus = bits.iter().filter(|&&b| !b).count() as u64;
        NumericalSemigroup {
            members: bits,
            multiplicity,
            genus,
        }
    }

    fn check_closure(&self) -> Result<()> {
        let c = self.members.len();
        for x in 1..c {
            if !self.members[x] {
                continue;
            }
            for y in x..c - x {
                if self.members[y] && !self.members[x + y] {
                    return Err(Error::NotAdditivelyClosed {
                        x: x as u64,
                        y: y as u64,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn conductor(&self) -> u64 {
        self.members.len() as u64
    }

    /// Largest gap, or -1 for the full set.
    pub fn frobenius(&self) -> i64 {
        self.members.len() as i64 - 1
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn is_full(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_ordinary(&self) -> bool {
        self.conductor() == self.multiplicity || self.is_full()
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        self.members.get(x as usize).copied().unwrap_or(true)
    }

    #[inline]
    pub(crate) fn contains_u(&self, x: u64) -> bool {
        self.members.get(x as usize).copied().unwrap_or(true)
    }

    /// Gaps in increasing order.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor())
            .filter(|&x| !self.contains_u(x))
            .collect()
    }

    /// Members strictly below `bound`, increasing.
    pub fn members_below(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..bound).filter(move |&x| self.contains_u(x))
    }

    /// Apéry set of a nonzero member `x`: the least member of each residue
    /// class modulo `x`, returned in increasing order.
    pub fn apery(&self, x: u64) -> Result<Vec<u64>> {
        if x == 0 || !self.contains_u(x) {
            return Err(Error::NotMember(x as i64));
        }
        let mut least = vec![None; x as usize];
        let mut found = 0;
        let mut s = 0u64;
        while found < x {
            if self.contains_u(s) {
                let slot = &mut least[(s % x) as usize];
                if slot.is_none() {
                    *slot = Some(s);
                    found += 1;
                }
            }
            s += 1;
        }
        let mut out: Vec<u64> = least.into_iter().flatten().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Whether a nonzero member cannot be written as a sum of two nonzero
    /// members.
    pub fn is_minimal_generator(&self, x: u64) -> bool {
        if x == 0 || !self.contains_u(x) {
            return false;
        }
        let m = self.multiplicity;
        !(m..=x / 2).any(|y| self.contains_u(y) && self.contains_u(x - y))
    }

    /// The unique minimal generating set, increasing.
    pub fn minimal_generators(&self) -> Vec<u64> {
        // Every minimal generator is at most c + m.
        let bound = self.conductor() + self.multiplicity;
        (1..=bound)
            .filter(|&x| self.is_minimal_generator(x))
            .collect()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators().len()
    }

    /// Maximal embedding dimension: as many minimal generators as the
    /// multiplicity.
    pub fn is_med(&self) -> bool {
        self.embedding_dimension() as u64 == self.multiplicity
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let c = self.members.len().max(other.members.len());
        let bits = (0..c as u64)
            .map(|x| self.contains_u(x) && other.contains_u(x))
            .collect();
        Self::from_bitmap_unchecked(bits)
    }

    /// `Λ ∪ {F(Λ)}`.
    pub fn adjoin_frobenius(&self) -> Result<Self> {
        if self.is_full() {
            return Err(Error::IsFullSet);
        }
        let mut bits = self.members.clone();
        bits.pop();
        Ok(Self::from_bitmap_unchecked(bits))
    }

    /// `Λ ∖ {x}` for a minimal generator `x`.
    pub fn remove_element(&self, x: u64) -> Result<Self> {
        if !self.is_minimal_generator(x) {
            return Err(Error::NotMinimalGenerator(x));
        }
        let mut bits = self.members.clone();
        if bits.len() <= x as usize {
            bits.resize(x as usize + 1, true);
        }
        bits[x as usize] = false;
        Ok(Self::from_bitmap_unchecked(bits))
    }

    /// `Λ/k = { x : kx ∈ Λ }`.
    pub fn quotient(&self, k: u64) -> Self {
        assert!(k >= 1, "quotient needs a positive divisor");
        let bound = self.conductor().div_ceil(k);
        let bits = (0..bound).map(|x| self.contains_u(k * x)).collect();
        Self::from_bitmap_unchecked(bits)
    }

    /// Whether every member of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        let c = self.conductor().max(other.conductor());
        (0..c).all(|x| !self.contains_u(x) || other.contains_u(x))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.minimal_generators().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

fn parse_list(body: &str) -> Result<Vec<u64>> {
    body.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("not a nonnegative integer: {t:?}")))
        })
        .collect()
}

/// Accepts `<g1,g2,...>` (also with `⟨ ⟩`) or `gaps:x1,x2,...`.
impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("gaps:") {
            return Self::from_gaps(&parse_list(rest)?);
        }
        let body = s
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .or_else(|| s.strip_prefix('⟨').and_then(|r| r.strip_suffix('⟩')))
            .ok_or_else(|| Error::Parse(format!("expected <g1,...> or gaps:..., got {s:?}")))?;
        Self::from_generators(&parse_list(body)?)
    }
}

/// JSON form of a semigroup: its minimal generators plus cached invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub gens: Vec<u64>,
    pub multiplicity: u64,
    pub frobenius: i64,
    pub genus: u64,
}

impl From<&NumericalSemigroup> for SemigroupRecord {
    fn from(sg: &NumericalSemigroup) -> Self {
        SemigroupRecord {
            gens: sg.minimal_generators(),
            multiplicity: sg.multiplicity(),
            frobenius: sg.frobenius(),
            genus: sg.genus(),
        }
    }
}

impl TryFrom<SemigroupRecord> for NumericalSemigroup {
    type Error = Error;

    fn try_from(rec: SemigroupRecord) -> Result<Self> {
        let sg = NumericalSemigroup::from_generators(&rec.gens)?;
        if sg.multiplicity() != rec.multiplicity
            || sg.frobenius() != rec.frobenius
            || sg.genus() != rec.genus
        {
            return Err(Error::Parse(format!(
                "invariants in record do not match generators {:?}",
                rec.gens
            )));
        }
        Ok(sg)
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        SemigroupRecord::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let rec = SemigroupRecord::deserialize(deserializer)?;
        NumericalSemigroup::try_from(rec).map_err(serde::de::Error::custom)
    }
}
