//! The m-variety `S_m(p)` of multiplicity-`m` semigroups admitting a strongly
//! admissible pattern `p`.
//!
//! `S_m(p)` is closed under intersection and under adjoining the Frobenius
//! number (except at the root `{0, m, →}`), so its members form a tree: the
//! parent of `Λ` is `Λ ∪ {F(Λ)}`, and the children of `Λ` are `Λ ∖ {x}` for
//! the minimal generators `x > F(Λ)` of `Λ` relative to the variety.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::admission::{admits, is_minimal_v_generator, sequence_with_value, violating_sequence};
use crate::error::{Error, Result};
use crate::pattern::{check_variety_hypotheses, Pattern};
use crate::semigroup::{gcd, NumericalSemigroup};

/// Default ceiling on the number of nodes an exhaustive enumeration may
/// produce.
pub const DEFAULT_NODE_CEILING: usize = 1_000_000;

/// A finitely generated submonoid `d · Λ'` of the nonnegative integers,
/// where `Λ'` is a numerical semigroup. Every submonoid has this form with
/// `d` the gcd of its elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubmonoidRep {
    pub scale: u64,
    pub core: NumericalSemigroup,
}

impl SubmonoidRep {
    pub fn from_generators(gens: &[u64]) -> Result<SubmonoidRep> {
        let gens: Vec<u64> = gens.iter().copied().filter(|&g| g != 0).collect();
        let scale = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if scale == 0 {
            return Err(Error::EmptyGenerators);
        }
        let reduced: Vec<u64> = gens.iter().map(|g| g / scale).collect();
        Ok(SubmonoidRep {
            scale,
            core: NumericalSemigroup::from_generators(&reduced)?,
        })
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x as u64).is_multiple_of(self.scale) && self.core.contains(x / self.scale as i64)
    }

    /// Smallest nonzero element.
    pub fn min_nonzero(&self) -> u64 {
        self.scale * self.core.multiplicity()
    }

    pub fn minimal_generators(&self) -> Vec<u64> {
        self.core
            .minimal_generators()
            .into_iter()
            .map(|g| g * self.scale)
            .collect()
    }

    /// The numerical semigroup, when `scale = 1`.
    pub fn as_semigroup(&self) -> Option<&NumericalSemigroup> {
        (self.scale == 1).then_some(&self.core)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &SubmonoidRep) -> bool {
        if !self.scale.is_multiple_of(other.scale) {
            // Some element of self is not a multiple of other's scale.
            return false;
        }
        // Beyond the scaled conductors both sides are eventually periodic;
        // checking up to the larger scaled conductor plus one period suffices.
        let bound =
            self.scale * self.core.conductor() + other.scale * other.core.conductor() + self.scale;
        (0..=bound / self.scale)
            .all(|t| !self.core.contains(t as i64) || other.contains((t * self.scale) as i64))
    }
}

impl std::fmt::Display for SubmonoidRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.scale == 1 {
            self.core.fmt(f)
        } else {
            write!(f, "{}*{}", self.scale, self.core)
        }
    }
}

/// Children of a tree node, ordered by the removed element.
pub fn children(sg: &NumericalSemigroup, p: &Pattern) -> Result<Vec<NumericalSemigroup>> {
    let m = sg.multiplicity();
    check_variety_hypotheses(p, m)?;
    if !admits(sg, p)? {
        return Err(Error::PreconditionViolated(format!(
            "{sg} does not admit {p}"
        )));
    }
    Ok(children_with_elements(sg, p)?
        .into_iter()
        .map(|(_, c)| c)
        .collect())
}

fn children_with_elements(
    sg: &NumericalSemigroup,
    p: &Pattern,
) -> Result<Vec<(u64, NumericalSemigroup)>> {
    let m = sg.multiplicity();
    let f = sg.frobenius();
    let mut out = Vec::new();
    for x in sg.minimal_generators() {
        if x == m || (x as i64) <= f {
            continue;
        }
        let child = sg.remove_element(x)?;
        if sequence_with_value(&child, p, x as i64).is_none() {
            out.push((x, child));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusLimit {
    /// Nodes of genus at most this value.
    Cap(u64),
    /// The whole variety, guarded by a node ceiling.
    Exhaustive { node_ceiling: usize },
}

impl GenusLimit {
    pub fn exhaustive() -> Self {
        GenusLimit::Exhaustive {
            node_ceiling: DEFAULT_NODE_CEILING,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub semigroup: NumericalSemigroup,
    pub parent: Option<usize>,
    /// The element removed from the parent, which is the node's Frobenius
    /// number.
    pub removed: Option<u64>,
}

/// Breadth-first arrangement of `S_m(p)`: node 0 is `{0, m, →}`, nodes are
/// grouped by genus and ordered within a layer by parent, then by removed
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyTree {
    pub nodes: Vec<TreeNode>,
}

pub fn tree_enumerate(p: &Pattern, m: u64, limit: GenusLimit) -> Result<VarietyTree> {
    check_variety_hypotheses(p, m)?;
    let root = NumericalSemigroup::ordinary(m);
    let mut nodes = vec![TreeNode {
        semigroup: root,
        parent: None,
        removed: None,
    }];
    let mut layer = 0..1;
    loop {
        let genus = nodes[layer.start].semigroup.genus();
        if let GenusLimit::Cap(cap) = limit {
            if genus >= cap {
                break;
            }
        }
        // Subtrees are independent; collect each parent's children in
        // parallel and append in parent order.
        let expanded: Vec<Vec<(u64, NumericalSemigroup)>> = nodes[layer.clone()]
            .par_iter()
            .map(|node| children_with_elements(&node.semigroup, p))
            .collect::<Result<_>>()?;
        let start = nodes.len();
        for (offset, kids) in expanded.into_iter().enumerate() {
            for (x, child) in kids {
                nodes.push(TreeNode {
                    semigroup: child,
                    parent: Some(layer.start + offset),
                    removed: Some(x),
                });
            }
            if let GenusLimit::Exhaustive { node_ceiling } = limit {
                if nodes.len() > node_ceiling {
                    return Err(Error::NodeCeilingExceeded {
                        ceiling: node_ceiling,
                    });
                }
            }
        }
        if nodes.len() == start {
            break;
        }
        layer = start..nodes.len();
    }
    Ok(VarietyTree { nodes })
}

impl VarietyTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn semigroups(&self) -> impl Iterator<Item = &NumericalSemigroup> {
        self.nodes.iter().map(|n| &n.semigroup)
    }

    /// Canonical node set: generator lists ordered by genus, then
    /// lexicographically.
    pub fn canonical_generator_sets(&self) -> Vec<Vec<u64>> {
        let set: BTreeSet<(u64, Vec<u64>)> = self
            .semigroups()
            .map(|s| (s.genus(), s.minimal_generators()))
            .collect();
        set.into_iter().map(|(_, g)| g).collect()
    }

    pub fn to_record(&self) -> TreeRecord {
        TreeRecord {
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(id, n)| NodeRecord {
                    id,
                    gens: n.semigroup.minimal_generators(),
                    genus: n.semigroup.genus(),
                    parent: n.parent,
                    removed: n.removed,
                })
                .collect(),
        }
    }

    pub fn from_record(rec: &TreeRecord) -> Result<VarietyTree> {
        let mut nodes = Vec::with_capacity(rec.nodes.len());
        for (i, n) in rec.nodes.iter().enumerate() {
            if n.id != i {
                return Err(Error::Parse(format!(
                    "node ids must be 0..n, found {} at {i}",
                    n.id
                )));
            }
            let semigroup = NumericalSemigroup::from_generators(&n.gens)?;
            if semigroup.genus() != n.genus {
                return Err(Error::Parse(format!(
                    "node {i}: genus does not match generators"
                )));
            }
            if n.parent.is_some_and(|p| p >= i) {
                return Err(Error::Parse(format!("node {i}: parent must precede it")));
            }
            nodes.push(TreeNode {
                semigroup,
                parent: n.parent,
                removed: n.removed,
            });
        }
        Ok(VarietyTree { nodes })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("tree record serializes")
    }

    pub fn from_json(s: &str) -> Result<VarietyTree> {
        let rec: TreeRecord = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_record(&rec)
    }

    /// Graphviz rendering: node labels are generator lists, edge labels the
    /// removed element.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph variety {\n  node [shape=plaintext];\n");
        for (id, n) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{id} [label=\"{}\"];", n.semigroup).unwrap();
        }
        for (id, n) in self.nodes.iter().enumerate() {
            if let (Some(parent), Some(x)) = (n.parent, n.removed) {
                writeln!(out, "  n{parent} -- n{id} [label=\"-{x}\"];").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRecord {
    pub nodes: Vec<NodeRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub id: usize,
    pub gens: Vec<u64>,
    pub genus: u64,
    pub parent: Option<usize>,
    pub removed: Option<u64>,
}

/// `S_m(p)` is finite iff `gcd(m, a_0) = 1`.
pub fn is_variety_finite(p: &Pattern, m: u64) -> Result<bool> {
    check_variety_hypotheses(p, m)?;
    if p.constant() == 0 {
        return Err(Error::PreconditionViolated(
            "finiteness criterion needs a nonzero constant term".into(),
        ));
    }
    Ok(gcd(m, p.constant().unsigned_abs()) == 1)
}

/// `Λ_k = {d·i : i >= m/d} ∪ {0} ∪ [k, ∞)` with `d = gcd(m, a_0) ≠ 1`: a
/// member of `S_m(p)` for every `k >= m`. Members with `k ≢ 1 (mod d)` and
/// `k > m` have Frobenius number `k - 1`, so they are pairwise distinct.
pub fn infinite_family_witness(p: &Pattern, m: u64, k: u64) -> Result<NumericalSemigroup> {
    check_variety_hypotheses(p, m)?;
    let d = gcd(m, p.constant().unsigned_abs());
    if d == 1 {
        return Err(Error::GcdIsOne);
    }
    if k < m {
        return Err(Error::PreconditionViolated(format!(
            "k = {k} is below m = {m}"
        )));
    }
    NumericalSemigroup::from_predicate(k, |x| x >= m && x % d == 0)
}

/// Smallest submonoid containing `A ∪ {m}` closed under `p` applied to
/// nonincreasing sequences of nonzero elements: the intersection of all
/// members of `S_m(p)` containing `A`.
///
/// Saturates: while the current monoid `d·Λ'` is not closed, adjoin a
/// violating value. If `d ∤ a_0`, the constant sequence at the least nonzero
/// element violates and the new value lowers `d`. Otherwise `p(d·t) =
/// d·(Σ a_i t_i + a_0/d)`, so violations are exactly the admission failures
/// of `Λ'` for the pattern with constant `a_0/d`; each adjunction lowers the
/// genus of `Λ'`.
pub fn v_closure(p: &Pattern, m: u64, elements: &[u64]) -> Result<SubmonoidRep> {
    check_variety_hypotheses(p, m)?;
    if let Some(&bad) = elements.iter().find(|&&a| a != 0 && a < m) {
        return Err(Error::ElementBelowMultiplicity {
            element: bad,
            multiplicity: m,
        });
    }
    let mut gens: Vec<u64> = elements.iter().copied().filter(|&a| a != 0).collect();
    gens.push(m);
    let mut monoid = SubmonoidRep::from_generators(&gens)?;
    loop {
        let d = monoid.scale as i64;
        let value = if p.constant() % d != 0 {
            p.eval_diagonal(monoid.min_nonzero() as i64)
        } else {
            let scaled = p.with_constant(p.constant() / d);
            match violating_sequence(&monoid.core, &scaled)? {
                Some(w) => d * w.value,
                None => break,
            }
        };
        // Values of p on elements >= m are at least the largest entry.
        debug_assert!(value >= m as i64 && !monoid.contains(value));
        let mut next = monoid.minimal_generators();
        next.push(value as u64);
        monoid = SubmonoidRep::from_generators(&next)?;
    }
    Ok(monoid)
}

/// The unique minimal generating system of `Λ` relative to `S_m(p)`.
pub fn minimal_v_generating_system(sg: &NumericalSemigroup, p: &Pattern) -> Result<Vec<u64>> {
    let m = sg.multiplicity();
    check_variety_hypotheses(p, m)?;
    if !admits(sg, p)? {
        return Err(Error::PreconditionViolated(format!(
            "{sg} does not admit {p}"
        )));
    }
    let mut out = Vec::new();
    // Λ ∖ {x} is a monoid only for classical minimal generators.
    for x in sg.minimal_generators() {
        if is_minimal_v_generator(sg, p, x)? {
            out.push(x);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn children_examples() {
        let p = pat("x1+x2-1");
        let kids = children(&NumericalSemigroup::ordinary(5), &p).unwrap();
        assert_eq!(
            kids,
            vec![sg(&[5, 7, 8, 9, 11]), sg(&[5, 6, 8, 9]), sg(&[5, 6, 7, 9])]
        );
        assert!(children(&sg(&[5, 9, 13, 17, 21]), &p).unwrap().is_empty());
        assert!(children(&sg(&[2, 3]), &p).unwrap().is_empty());
        assert!(matches!(
            children(&sg(&[5, 6, 7, 8]), &p),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn trivial_tree() {
        let t = tree_enumerate(&pat("x1+x2-1"), 1, GenusLimit::exhaustive()).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t.nodes[0].semigroup.is_full());
    }

    #[test]
    fn node_ceiling() {
        assert_eq!(
            tree_enumerate(
                &pat("x1+x2-4"),
                4,
                GenusLimit::Exhaustive { node_ceiling: 50 }
            ),
            Err(Error::NodeCeilingExceeded { ceiling: 50 })
        );
    }

    #[test]
    fn finiteness_examples() {
        assert!(is_variety_finite(&pat("x1+x2-1"), 5).unwrap());
        assert!(!is_variety_finite(&pat("x1+x2-4"), 4).unwrap());
        assert!(is_variety_finite(&pat("x1+x2-6"), 35).unwrap());
        assert!(is_variety_finite(&pat("x1+x2"), 3).is_err());
        assert!(matches!(
            is_variety_finite(&pat("x1+x2-6"), 5),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn infinite_family_examples() {
        let w = infinite_family_witness(&pat("x1+x2-4"), 4, 10).unwrap();
        assert_eq!(
            w,
            NumericalSemigroup::from_gaps(&[1, 2, 3, 5, 6, 7, 9]).unwrap()
        );
        let p = pat("x1+x2-6");
        // m = 4 is not p-admissible here: {0,4,6,8,9,→} fails at 4+4-6 = 2.
        assert!(matches!(
            infinite_family_witness(&p, 4, 9),
            Err(Error::PreconditionViolated(_))
        ));
        let w = infinite_family_witness(&p, 8, 11).unwrap();
        assert_eq!(w.members_below(12).collect::<Vec<_>>(), vec![0, 8, 10, 11]);
        assert!(admits(&w, &p).unwrap());
        assert_eq!(
            infinite_family_witness(&pat("x1+x2-4"), 4, 4).unwrap(),
            NumericalSemigroup::ordinary(4)
        );
        assert_eq!(
            infinite_family_witness(&pat("x1+x2-1"), 5, 9),
            Err(Error::GcdIsOne)
        );
    }

    #[test]
    fn closure_examples() {
        let c = v_closure(&pat("x1+x2-4"), 4, &[4]).unwrap();
        assert_eq!(c.scale, 4);
        assert!(c.core.is_full());
        let c = v_closure(&pat("x1+x2-1"), 5, &[5, 6, 7, 8]).unwrap();
        assert_eq!(c.as_semigroup(), Some(&NumericalSemigroup::ordinary(5)));
        let p = pat("x1+x2-1");
        assert_eq!(
            v_closure(&p, 5, &[0]).unwrap(),
            v_closure(&p, 5, &[]).unwrap()
        );
        assert_eq!(
            v_closure(&p, 5, &[3]),
            Err(Error::ElementBelowMultiplicity {
                element: 3,
                multiplicity: 5
            })
        );
    }

    #[test]
    fn mingen_examples() {
        let p = pat("x1+x2-1");
        assert_eq!(
            minimal_v_generating_system(&NumericalSemigroup::ordinary(5), &p).unwrap(),
            vec![6, 7, 8]
        );
        let s = sg(&[5, 6, 8, 9]);
        let g = minimal_v_generating_system(&s, &p).unwrap();
        assert!(g.iter().all(|x| [6, 8, 9].contains(x)));
        assert_eq!(v_closure(&p, 5, &g).unwrap().as_semigroup(), Some(&s));
        assert!(minimal_v_generating_system(&NumericalSemigroup::full(), &p)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn submonoid_subset() {
        let a = SubmonoidRep::from_generators(&[4, 6]).unwrap();
        let b = SubmonoidRep::from_generators(&[2]).unwrap();
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        let c = SubmonoidRep::from_generators(&[4, 5]).unwrap();
        assert!(!c.is_subset_of(&b));
        assert!(a.contains(10) && !a.contains(2) && !a.contains(-4));
    }

    #[test]
    fn json_and_dot() {
        let t = tree_enumerate(&pat("x1+x2-1"), 5, GenusLimit::Cap(5)).unwrap();
        let j = t.to_json();
        assert!(j.starts_with(
            r#"{"nodes":[{"id":0,"gens":[5,6,7,8,9],"genus":4,"parent":null,"removed":null}"#
        ));
        assert_eq!(VarietyTree::from_json(&j).unwrap(), t);
        let dot = t.to_dot();
        assert!(dot.contains("n0 [label=\"<5,6,7,8,9>\"]"));
        assert!(dot.contains("n0 -- n2 [label=\"-7\"]"));
    }
}
