//! Structural invariants of Cayley tables.

pub mod abelian;
pub mod hom;
pub mod iso;
pub mod subgroup;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::table::GroupTable;
use hom::Homomorphism;
use subgroup::Subgroup;

pub use abelian::{abelian_basis, abelian_invariants, subgroup_invariants};
pub use hom::verify_homomorphism;
pub use iso::{fingerprint, is_isomorphic, small_generating_set, Fingerprint};

pub fn center(g: &GroupTable) -> Subgroup {
    let z: Vec<usize> = (0..g.order())
        .filter(|&x| (0..g.order()).all(|y| g.commutes(x, y)))
        .collect();
    Subgroup::from_elements(g, &z).expect("center is a subgroup")
}

/// `[x, y] = x y x⁻¹ y⁻¹`.
pub fn commutator(g: &GroupTable, x: usize, y: usize) -> usize {
    g.commutator(x, y)
}

pub fn derived_subgroup(g: &GroupTable) -> Subgroup {
    let mut seen = vec![false; g.order()];
    let mut comms = Vec::new();
    for x in 0..g.order() {
        for y in 0..g.order() {
            let c = g.commutator(x, y);
            if !std::mem::replace(&mut seen[c], true) {
                comms.push(c);
            }
        }
    }
    Subgroup::generated(g, &comms)
}

pub fn subgroup_generated(g: &GroupTable, gens: &[usize]) -> Subgroup {
    Subgroup::generated(g, gens)
}

/// Conjugacy classes, each sorted, ordered by smallest element; the class of
/// the identity comes first.
pub fn conjugacy_classes(g: &GroupTable) -> Vec<Vec<usize>> {
    let mut class_of = vec![usize::MAX; g.order()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = vec![g.identity()];
    order.extend((0..g.order()).filter(|&x| x != g.identity()));
    for x in order {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut cls = Vec::new();
        for h in 0..g.order() {
            let y = g.conjugate(h, x);
            if class_of[y] == usize::MAX {
                class_of[y] = id;
                cls.push(y);
            }
        }
        cls.sort_unstable();
        classes.push(cls);
    }
    classes
}

/// Map element order → number of elements of that order.
pub fn element_orders(g: &GroupTable) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for x in 0..g.order() {
        *h.entry(g.element_order(x)).or_insert(0) += 1;
    }
    h
}

pub fn exponent(g: &GroupTable) -> usize {
    element_orders(g).keys().fold(1, |acc, &k| lcm(acc, k))
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Quotient table and the coset index of every element. Cosets are numbered
/// by first occurrence, the identity coset first.
pub(crate) fn quotient_table(g: &GroupTable, n: &Subgroup) -> Result<(GroupTable, Vec<usize>)> {
    if !n.is_normal(g) {
        return Err(Error::NotNormal);
    }
    let mut coset = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    let mut order = vec![g.identity()];
    order.extend((0..g.order()).filter(|&x| x != g.identity()));
    for x in order {
        if coset[x] != usize::MAX {
            continue;
        }
        for &k in n.elements() {
            coset[g.mul(x, k)] = reps.len();
        }
        reps.push(x);
    }
    let labels = reps.iter().map(|&r| g.label(r)).collect();
    let q = GroupTable::from_fn(reps.len(), |i, j| coset[g.mul(reps[i], reps[j])], Some(labels))?;
    Ok((q, coset))
}

/// `G/N` with the natural projection.
pub fn quotient(g: &Arc<GroupTable>, n: &Subgroup) -> Result<(Arc<GroupTable>, Homomorphism)> {
    let (q, coset) = quotient_table(g, n)?;
    let q = Arc::new(q);
    let proj = Homomorphism::new(g.clone(), q.clone(), coset)?;
    Ok((q, proj))
}

/// Invariant factors of `G/[G,G]`.
pub fn abelianization(g: &GroupTable) -> Vec<u64> {
    let (q, _) = quotient_table(g, &derived_subgroup(g)).expect("derived subgroup is normal");
    abelian_invariants(&q).expect("abelianization is abelian")
}

/// Analysis report written by the command line front end.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub order: usize,
    pub center_order: usize,
    pub derived_order: usize,
    pub abelianization: Vec<u64>,
    pub class_count: usize,
    pub order_histogram: BTreeMap<usize, usize>,
}

pub fn analyze(g: &GroupTable) -> AnalysisReport {
    AnalysisReport {
        order: g.order(),
        center_order: center(g).order(),
        derived_order: derived_subgroup(g).order(),
        abelianization: abelianization(g),
        class_count: conjugacy_classes(g).len(),
        order_histogram: element_orders(g),
    }
}
