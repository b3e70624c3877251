//! Linear patterns `a1*x1 + ... + an*xn + a0` and their admissibility theory.
//!
//! A semigroup admits a pattern when evaluating it on every nonincreasing
//! sequence of *nonzero* members gives a member. Admissibility of a pattern
//! is decided from the partial sums `σ_j = a_1 + ... + a_j` and the constant
//! term alone; see [`classify`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::admission;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PatternRecord", into = "PatternRecord")]
pub struct Pattern {
    coefficients: Vec<i64>,
    constant: i64,
}

#[derive(Serialize, Deserialize)]
struct PatternRecord {
    coefficients: Vec<i64>,
    constant: i64,
}

impl TryFrom<PatternRecord> for Pattern {
    type Error = Error;
    fn try_from(r: PatternRecord) -> Result<Self> {
        Pattern::new(r.coefficients, r.constant)
    }
}

impl From<Pattern> for PatternRecord {
    fn from(p: Pattern) -> Self {
        PatternRecord {
            coefficients: p.coefficients,
            constant: p.constant,
        }
    }
}

impl Pattern {
    pub fn new(coefficients: Vec<i64>, constant: i64) -> Result<Self> {
        if coefficients.is_empty() || coefficients.contains(&0) {
            return Err(Error::InvalidPattern);
        }
        Ok(Pattern {
            coefficients,
            constant,
        })
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn constant(&self) -> i64 {
        self.constant
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_homogeneous(&self) -> bool {
        self.constant == 0
    }

    /// Same coefficients with a different constant term.
    pub fn with_constant(&self, constant: i64) -> Pattern {
        Pattern {
            coefficients: self.coefficients.clone(),
            constant,
        }
    }

    /// `σ_j = a_1 + ... + a_j` for `j = 1..=n`.
    pub fn partial_sums(&self) -> Vec<i64> {
        self.coefficients
            .iter()
            .scan(0, |acc, &a| {
                *acc += a;
                Some(*acc)
            })
            .collect()
    }

    /// `σ_n`, the sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.coefficients.iter().sum()
    }

    pub fn eval(&self, s: &[i64]) -> i64 {
        assert_eq!(s.len(), self.len(), "pattern arity mismatch");
        self.coefficients
            .iter()
            .zip(s)
            .map(|(a, x)| a * x)
            .sum::<i64>()
            + self.constant
    }

    /// Value on the constant sequence `(x, ..., x)`.
    pub fn eval_diagonal(&self, x: i64) -> i64 {
        self.total() * x + self.constant
    }

    /// The pattern `x1 + x2 - m` characterizing maximal embedding dimension.
    pub fn med(m: i64) -> Pattern {
        Pattern::new(vec![1, 1], -m).unwrap()
    }

    /// `q*x1 - q*m`, tied to the Geil–Matsumoto bound.
    pub fn geil_matsumoto(q: i64, m: i64) -> Result<Pattern> {
        Pattern::new(vec![q], -q * m)
    }

    /// `(q-1)*x1 - (q-1)*m`, tied to the Beelen–Ruano bound.
    pub fn beelen_ruano(q: i64, m: i64) -> Result<Pattern> {
        Pattern::new(vec![q - 1], -(q - 1) * m)
    }

    /// `x1 + x2 - n`, satisfied by combinatorial configuration semigroups.
    pub fn configuration(n: i64) -> Pattern {
        Pattern::new(vec![1, 1], -n).unwrap()
    }

    /// `x1 + x2 - x3`.
    pub fn arf() -> Pattern {
        Pattern::new(vec![1, 1, -1], 0).unwrap()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &a) in self.coefficients.iter().enumerate() {
            let sign = if a < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let mag = a.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}x{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}x{}", i + 1)?;
            }
        }
        match self.constant {
            0 => Ok(()),
            c if c < 0 => write!(f, "{c}"),
            c => write!(f, "+{c}"),
        }
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

fn parse_int(t: &str) -> Result<i64> {
    t.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
}

fn parse_machine(s: &str) -> Result<Pattern> {
    let mut coeffs = None;
    let mut constant = None;
    for part in s.split(';') {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
        match key.trim() {
            "coeffs" => {
                coeffs = Some(val.split(',').map(parse_int).collect::<Result<Vec<_>>>()?);
            }
            "const" => constant = Some(parse_int(val)?),
            other => return Err(Error::Parse(format!("unknown key {other:?}"))),
        }
    }
    let coeffs = coeffs.ok_or_else(|| Error::Parse("missing coeffs=".into()))?;
    Pattern::new(coeffs, constant.unwrap_or(0)).map_err(|_| Error::Parse("zero coefficient".into()))
}

fn parse_infix(s: &str) -> Result<Pattern> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty pattern".into()));
    }
    // Split into signed terms.
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > start {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);

    let mut slots: Vec<Option<i64>> = Vec::new();
    let mut constant: Option<i64> = None;
    for term in terms {
        let (neg, body) = match term.as_bytes()[0] {
            b'-' => (true, &term[1..]),
            b'+' => (false, &term[1..]),
            _ => (false, term),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        match body.find('x') {
            Some(pos) => {
                let coef_txt = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
                let mag = if coef_txt.is_empty() {
                    1
                } else {
                    coef_txt
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient in term {term:?}")))?
                };
                let idx: usize = body[pos + 1..]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable in term {term:?}")))?;
                if idx == 0 {
                    return Err(Error::Parse("variables are numbered from x1".into()));
                }
                if mag == 0 {
                    return Err(Error::Parse(format!("zero coefficient in term {term:?}")));
                }
                if slots.len() < idx {
                    slots.resize(idx, None);
                }
                if slots[idx - 1].is_some() {
                    return Err(Error::Parse(format!("variable x{idx} appears twice")));
                }
                slots[idx - 1] = Some(if neg { -mag } else { mag });
            }
            None => {
                if constant.is_some() {
                    return Err(Error::Parse("more than one constant term".into()));
                }
                let v = parse_int(body)?;
                constant = Some(if neg { -v } else { v });
            }
        }
    }
    let coefficients = slots
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| Error::Parse(format!("variable x{} is missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    if coefficients.is_empty() {
        return Err(Error::Parse("pattern has no variables".into()));
    }
    Pattern::new(coefficients, constant.unwrap_or(0))
}

/// Accepts `x1+x2-1`, `2x1-6`, `2*x1 - 6`, or `coeffs=1,1;const=-1`.
impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with("coeffs") {
            parse_machine(s)
        } else {
            parse_infix(s)
        }
    }
}

/// What the set `S(p)` of semigroups admitting `p` looks like.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdmissibilityClass {
    /// No semigroup admits the pattern.
    Empty,
    /// Only the full set of nonnegative integers admits it.
    #[serde(rename = "exactly-N0")]
    ExactlyN0,
    /// Some semigroup other than the full set admits it.
    Admissible,
}

impl fmt::Display for AdmissibilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdmissibilityClass::Empty => "empty",
            AdmissibilityClass::ExactlyN0 => "exactly-N0",
            AdmissibilityClass::Admissible => "admissible",
        })
    }
}

pub fn classify(p: &Pattern) -> AdmissibilityClass {
    use AdmissibilityClass::*;
    let sigma = p.partial_sums();
    let total = *sigma.last().unwrap();
    let a0 = p.constant();
    if sigma.iter().any(|&s| s < 0) {
        return Empty;
    }
    if total <= 0 && a0 < 0 {
        return Empty;
    }
    if total == 1 && a0 < 0 {
        // Only the full set can admit it, and it does iff p(1,...,1) >= 0.
        return if a0 == -1 { ExactlyN0 } else { Empty };
    }
    if total == 0 && a0 == 1 {
        // p(m,...,m) = 1 must be a member, forcing the full set.
        return ExactlyN0;
    }
    if total == 0 && a0 == 0 && smallest_step(&sigma) == 1 {
        // Taking s_n past the conductor, the values are exactly the monoid
        // generated by the positive σ_j; a step of 1 reaches every integer.
        return ExactlyN0;
    }
    Admissible
}

/// Smallest positive partial sum. For homogeneous patterns with `σ_n = 0`
/// the attainable values form the monoid these partial sums generate.
fn smallest_step(sigma: &[i64]) -> i64 {
    sigma
        .iter()
        .copied()
        .filter(|&s| s > 0)
        .min()
        .expect("σ_1 = a_1 > 0")
}

/// The multiplicities `m` for which `{0, m, →}` admits an admissible pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MultiplicityCondition {
    /// `m >= min`.
    LowerBounded { min: u64 },
    /// Every positive `m`.
    All,
    /// `lo <= m <= hi`; empty when `hi < lo`.
    Interval { lo: u64, hi: u64 },
}

impl MultiplicityCondition {
    pub fn is_admissible(&self, m: u64) -> bool {
        match *self {
            MultiplicityCondition::LowerBounded { min } => m >= min,
            MultiplicityCondition::All => m >= 1,
            MultiplicityCondition::Interval { lo, hi } => lo <= m && m <= hi,
        }
    }

    /// Smallest admissible multiplicity, if any.
    pub fn min(&self) -> Option<u64> {
        match *self {
            MultiplicityCondition::LowerBounded { min } => Some(min),
            MultiplicityCondition::All => Some(1),
            MultiplicityCondition::Interval { lo, hi } => (lo <= hi).then_some(lo),
        }
    }
}

impl fmt::Display for MultiplicityCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MultiplicityCondition::LowerBounded { min } => write!(f, "m >= {min}"),
            MultiplicityCondition::All => write!(f, "m >= 1"),
            MultiplicityCondition::Interval { lo, hi } if hi < lo => write!(f, "none"),
            MultiplicityCondition::Interval { lo, hi } => write!(f, "{lo} <= m <= {hi}"),
        }
    }
}

pub fn admissible_multiplicities(p: &Pattern) -> Result<MultiplicityCondition> {
    if classify(p) != AdmissibilityClass::Admissible {
        return Err(Error::NotAdmissible);
    }
    let total = p.total();
    let a0 = p.constant();
    Ok(match total {
        t if t > 1 => {
            // ceil(-a0 / (t - 1)), exact integer arithmetic
            let min = (-a0).div_euclid(t - 1) + i64::from((-a0).rem_euclid(t - 1) != 0);
            MultiplicityCondition::LowerBounded {
                min: min.max(1) as u64,
            }
        }
        1 => MultiplicityCondition::All,
        _ if a0 == 0 => MultiplicityCondition::Interval {
            lo: 1,
            hi: smallest_step(&p.partial_sums()) as u64,
        },
        _ => MultiplicityCondition::Interval {
            lo: 1,
            hi: a0.max(0) as u64,
        },
    })
}

/// Either a pattern or, once every variable has been dropped, a constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerivedPattern {
    Pattern(Pattern),
    Constant(i64),
}

impl DerivedPattern {
    pub fn partial_sums(&self) -> Vec<i64> {
        match self {
            DerivedPattern::Pattern(p) => p.partial_sums(),
            DerivedPattern::Constant(_) => Vec::new(),
        }
    }
}

impl fmt::Display for DerivedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivedPattern::Pattern(p) => p.fmt(f),
            DerivedPattern::Constant(c) => write!(f, "{c}"),
        }
    }
}

/// `p - x1` when `a1 > 1`, otherwise `p(0, x1, ..., x_{n-1})`.
pub fn derived_pattern(p: &Pattern) -> Result<DerivedPattern> {
    let a1 = p.coefficients()[0];
    if a1 < 1 {
        return Err(Error::NegativeLead(a1));
    }
    if a1 > 1 {
        let mut coefficients = p.coefficients().to_vec();
        coefficients[0] -= 1;
        return Ok(DerivedPattern::Pattern(Pattern::new(
            coefficients,
            p.constant(),
        )?));
    }
    let rest = p.coefficients()[1..].to_vec();
    if rest.is_empty() {
        Ok(DerivedPattern::Constant(p.constant()))
    } else {
        Ok(DerivedPattern::Pattern(Pattern::new(rest, p.constant())?))
    }
}

pub fn is_strongly_admissible(p: &Pattern) -> bool {
    if classify(p) != AdmissibilityClass::Admissible {
        return false;
    }
    match derived_pattern(p) {
        Ok(d) => d.partial_sums().iter().all(|&s| s >= 0),
        Err(_) => false,
    }
}

/// Fails unless `p` is strongly admissible and `m` is a `p`-admissible
/// multiplicity; these are the hypotheses of the m-variety machinery.
pub fn check_variety_hypotheses(p: &Pattern, m: u64) -> Result<()> {
    if !is_strongly_admissible(p) {
        return Err(Error::PreconditionViolated(format!(
            "{p} is not strongly admissible"
        )));
    }
    let cond = admissible_multiplicities(p)?;
    if !cond.is_admissible(m) {
        return Err(Error::PreconditionViolated(format!(
            "multiplicity {m} is not {p}-admissible ({cond})"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipleOfMultiplicityReport {
    /// `k = -1` or some partial sum equals 1.
    pub applicable: bool,
    /// Whether `{0, m, →}` admits `a·x + k·m`.
    pub ordinary_admits: bool,
}

/// Patterns whose constant is `k*m`. When `k = -1` or some `σ_j = 1`, the
/// existence of any multiplicity-`m` semigroup admitting the pattern is
/// equivalent to `{0, m, →}` admitting it, and to `σ_j >= 0` for all `j`
/// together with `σ_n + k >= 1`. Otherwise the ordinary semigroup is tested
/// directly.
pub fn multiple_of_multiplicity_check(
    coefficients: &[i64],
    k: i64,
    m: u64,
) -> Result<MultipleOfMultiplicityReport> {
    if m <= 1 {
        return Err(Error::PreconditionViolated("m must exceed 1".into()));
    }
    if k == 0 {
        return Err(Error::PreconditionViolated("k must be nonzero".into()));
    }
    let p = Pattern::new(coefficients.to_vec(), k * m as i64)?;
    let sigma = p.partial_sums();
    let applicable = k == -1 || sigma.contains(&1);
    let ordinary_admits = if applicable {
        sigma.iter().all(|&s| s >= 0) && p.total() + k >= 1
    } else {
        admission::admits(&NumericalSemigroup::ordinary(m), &p)?
    };
    Ok(MultipleOfMultiplicityReport {
        applicable,
        ordinary_admits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use AdmissibilityClass::*;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(pat("x1+x2-1"), Pattern::new(vec![1, 1], -1).unwrap());
        assert_eq!(pat("2x1-6"), Pattern::new(vec![2], -6).unwrap());
        assert_eq!(pat("2*x1 - 6"), pat("2x1-6"));
        assert_eq!(pat("-x1+2x2+3"), Pattern::new(vec![-1, 2], 3).unwrap());
        assert_eq!(pat("3+x2+x1"), Pattern::new(vec![1, 1], 3).unwrap());
        assert_eq!(pat("coeffs=1,1;const=-1"), pat("x1+x2-1"));
        for s in ["x1+x2-1", "2x1-6", "-x1+2x2+3", "x1+x2-x3", "3x1"] {
            assert_eq!(pat(s).to_string(), s);
        }
        for bad in [
            "",
            "0x1+x2",
            "x1+x3",
            "x1+x1",
            "x0",
            "x1+",
            "coeffs=1,0;const=1",
            "x1+2+3",
            "yx1",
        ] {
            assert!(bad.parse::<Pattern>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn json_rejects_zero_coefficients() {
        let p: Pattern = serde_json::from_str(r#"{"coefficients":[1,1],"constant":-1}"#).unwrap();
        assert_eq!(p, pat("x1+x2-1"));
        assert!(
            serde_json::from_str::<Pattern>(r#"{"coefficients":[1,0],"constant":-1}"#).is_err()
        );
    }

    #[test]
    fn partial_sums() {
        assert_eq!(pat("x1-x2+x3+1").partial_sums(), vec![1, 0, 1]);
        assert_eq!(pat("2x1-6").partial_sums(), vec![2]);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&pat("x1+x2-1")), Admissible);
        assert_eq!(classify(&pat("x1-1")), ExactlyN0);
        assert_eq!(classify(&pat("-x1+2x2+3")), Empty);
        assert_eq!(classify(&pat("x1-3")), Empty);
        assert_eq!(classify(&pat("x1-x2+1")), ExactlyN0);
        assert_eq!(classify(&pat("x1-x2+2")), Admissible);
        assert_eq!(classify(&pat("x1-x2-1")), Empty);
        assert_eq!(classify(&pat("2x1-6")), Admissible);
        // homogeneous with σ_n = 0
        assert_eq!(classify(&pat("x1-x2")), ExactlyN0);
        assert_eq!(classify(&pat("x1+2x2-3x3")), ExactlyN0);
        assert_eq!(classify(&pat("2x1-2x2")), Admissible);
        assert_eq!(classify(&pat("2x1+x2-3x3")), Admissible);
    }

    #[test]
    fn multiplicity_conditions() {
        use MultiplicityCondition::*;
        assert_eq!(
            admissible_multiplicities(&pat("2x1-6")).unwrap(),
            LowerBounded { min: 6 }
        );
        assert_eq!(
            admissible_multiplicities(&pat("x1+x2-1")).unwrap(),
            LowerBounded { min: 1 }
        );
        assert_eq!(
            admissible_multiplicities(&pat("x1+x2")).unwrap(),
            LowerBounded { min: 1 }
        );
        assert_eq!(
            admissible_multiplicities(&pat("3x1-7")).unwrap(),
            LowerBounded { min: 4 }
        );
        assert_eq!(
            admissible_multiplicities(&pat("3x1+7")).unwrap(),
            LowerBounded { min: 1 }
        );
        assert_eq!(admissible_multiplicities(&pat("x1+4")).unwrap(), All);
        assert_eq!(
            admissible_multiplicities(&pat("x1-x2+4")).unwrap(),
            Interval { lo: 1, hi: 4 }
        );
        assert_eq!(
            admissible_multiplicities(&pat("x1-1")),
            Err(Error::NotAdmissible)
        );
        assert_eq!(
            admissible_multiplicities(&pat("2x1+x2-3x3")).unwrap(),
            Interval { lo: 1, hi: 2 }
        );
        assert_eq!(
            admissible_multiplicities(&pat("3x1-3x2")).unwrap(),
            Interval { lo: 1, hi: 3 }
        );
        assert!(!Interval { lo: 1, hi: 0 }.is_admissible(1));
        assert_eq!(Interval { lo: 1, hi: 0 }.min(), None);
    }

    #[test]
    fn derived_patterns() {
        assert_eq!(
            derived_pattern(&pat("x1+x2-1")).unwrap(),
            DerivedPattern::Pattern(pat("x1-1"))
        );
        assert_eq!(
            derived_pattern(&pat("2x1-6")).unwrap(),
            DerivedPattern::Pattern(pat("x1-6"))
        );
        assert_eq!(
            derived_pattern(&pat("x1")).unwrap(),
            DerivedPattern::Constant(0)
        );
        assert_eq!(
            derived_pattern(&pat("-x1+x2")),
            Err(Error::NegativeLead(-1))
        );
    }

    #[test]
    fn strong_admissibility() {
        assert!(is_strongly_admissible(&pat("x1+x2-1")));
        assert!(is_strongly_admissible(&Pattern::arf()));
        assert!(is_strongly_admissible(&pat("x1+2x2-2x3")));
        assert!(!is_strongly_admissible(&pat("x1-x2+x3+1")));
        assert!(!is_strongly_admissible(&pat("x1-1")));
        assert!(is_strongly_admissible(&pat("x1+1")));
    }

    #[test]
    fn named_constructors() {
        assert_eq!(Pattern::med(4), pat("x1+x2-4"));
        assert_eq!(Pattern::geil_matsumoto(2, 3).unwrap(), pat("2x1-6"));
        assert_eq!(Pattern::beelen_ruano(3, 3).unwrap(), pat("2x1-6"));
        assert_eq!(Pattern::configuration(1), pat("x1+x2-1"));
        assert_eq!(Pattern::arf(), pat("x1+x2-x3"));
        assert!(Pattern::beelen_ruano(1, 3).is_err());
    }

    #[test]
    fn multiple_of_multiplicity_examples() {
        let r = multiple_of_multiplicity_check(&[1, 1], -1, 4).unwrap();
        assert!(r.applicable && r.ordinary_admits);
        let r = multiple_of_multiplicity_check(&[2], -2, 3).unwrap();
        assert!(!r.applicable && !r.ordinary_admits);
        let r = multiple_of_multiplicity_check(&[1, 1], -3, 4).unwrap();
        assert!(r.applicable && !r.ordinary_admits);
        assert!(multiple_of_multiplicity_check(&[1], 0, 4).is_err());
        assert!(multiple_of_multiplicity_check(&[1], 1, 1).is_err());
    }
}
