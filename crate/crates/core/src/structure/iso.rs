//! Fingerprints and exact isomorphism testing by backtracking over images of
//! a small generating set.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::group::table::GroupTable;
use crate::structure::hom::Homomorphism;
use crate::structure::subgroup::Subgroup;
use crate::structure::{abelianization, center, conjugacy_classes, derived_subgroup, element_orders};

/// Isomorphism invariants; equal for isomorphic groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub center_order: usize,
    pub derived_order: usize,
    pub abelianization: Vec<u64>,
    pub class_count: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    /// `(element order, class size, number of elements)` triples.
    pub order_class_profile: Vec<(usize, usize, usize)>,
    /// Filled in by the characters module when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irrep_degrees: Option<Vec<usize>>,
}

/// `(element order, class size)` for every element.
fn signatures(g: &GroupTable) -> Vec<(usize, usize)> {
    let mut sig = vec![(0, 0); g.order()];
    for cls in conjugacy_classes(g) {
        for &x in &cls {
            sig[x] = (g.element_order(x), cls.len());
        }
    }
    sig
}

pub fn fingerprint(g: &GroupTable) -> Fingerprint {
    let mut profile: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for s in signatures(g) {
        *profile.entry(s).or_insert(0) += 1;
    }
    Fingerprint {
        order: g.order(),
        center_order: center(g).order(),
        derived_order: derived_subgroup(g).order(),
        abelianization: abelianization(g),
        class_count: conjugacy_classes(g).len(),
        order_histogram: element_orders(g),
        order_class_profile: profile.into_iter().map(|((o, c), n)| (o, c, n)).collect(),
        irrep_degrees: None,
    }
}

/// A generating set that is minimal among single elements and pairs; larger
/// sets are completed greedily. Among generating pairs the one with the
/// fewest signature-compatible candidate images is preferred.
pub fn small_generating_set(g: &GroupTable) -> Vec<usize> {
    let n = g.order();
    if n == 1 {
        return Vec::new();
    }
    let sig = signatures(g);
    let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &s in &sig {
        *count.entry(s).or_insert(0) += 1;
    }
    let score = |x: usize| count[&sig[x]];
    if let Some(x) = (0..n).filter(|&x| g.element_order(x) == n).min_by_key(|&x| score(x)) {
        return vec![x];
    }
    let mut best: Option<(usize, [usize; 2])> = None;
    let mut best_partial: (usize, usize, [usize; 2]) = (0, usize::MAX, [g.identity(); 2]);
    for x in 0..n {
        if x == g.identity() {
            continue;
        }
        for y in x + 1..n {
            if y == g.identity() || g.commutes(x, y) && g.element_order(x) * g.element_order(y) < n {
                continue;
            }
            let s = score(x) * score(y);
            if best.is_some_and(|(b, _)| b <= s) {
                continue;
            }
            let h = Subgroup::generated(g, &[x, y]).order();
            if h == n {
                best = Some((s, [x, y]));
            } else if best.is_none() && (h > best_partial.0 || h == best_partial.0 && s < best_partial.1) {
                best_partial = (h, s, [x, y]);
            }
        }
    }
    if let Some((_, pair)) = best {
        return pair.to_vec();
    }
    let mut gens = best_partial.2.to_vec();
    if best_partial.0 == 0 {
        // every pair commutes with small product; start from one element
        gens = vec![(0..n).max_by_key(|&x| g.element_order(x)).unwrap()];
    }
    loop {
        let cur = Subgroup::generated(g, &gens);
        if cur.order() == n {
            return gens;
        }
        let next = (0..n)
            .filter(|&x| !cur.contains(x))
            .max_by_key(|&x| {
                let mut t = gens.clone();
                t.push(x);
                (Subgroup::generated(g, &t).order(), usize::MAX - score(x))
            })
            .unwrap();
        gens.push(next);
    }
}

/// An isomorphism `g1 → g2`, or `None` if the groups are not isomorphic.
pub fn is_isomorphic(g1: &Arc<GroupTable>, g2: &Arc<GroupTable>) -> Option<Homomorphism> {
    if g1.order() != g2.order() {
        return None;
    }
    if fingerprint(g1) != fingerprint(g2) {
        return None;
    }
    let gens = small_generating_set(g1);
    let sig1 = signatures(g1);
    let sig2 = signatures(g2);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| (0..g2.order()).filter(|&y| sig2[y] == sig1[x]).collect())
        .collect();
    let mut search = Search {
        g1,
        g2,
        gens: &gens,
        candidates: &candidates,
        images: Vec::new(),
        map: vec![usize::MAX; g1.order()],
        used: vec![false; g2.order()],
    };
    search.extend();
    if search.run(0) {
        let images = search.map;
        Homomorphism::new(g1.clone(), g2.clone(), images).ok()
    } else {
        None
    }
}

struct Search<'a> {
    g1: &'a GroupTable,
    g2: &'a GroupTable,
    gens: &'a [usize],
    candidates: &'a [Vec<usize>],
    images: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn run(&mut self, level: usize) -> bool {
        if level == self.gens.len() {
            return true;
        }
        for i in 0..self.candidates[level].len() {
            let y = self.candidates[level][i];
            self.images.push(y);
            if self.extend() && self.run(level + 1) {
                return true;
            }
            self.images.pop();
        }
        false
    }

    /// Rebuilds the partial map on the subgroup generated by the generators
    /// assigned so far; false on inconsistency or non-injectivity.
    fn extend(&mut self) -> bool {
        let (g1, g2) = (self.g1, self.g2);
        self.map.iter_mut().for_each(|m| *m = usize::MAX);
        self.used.iter_mut().for_each(|u| *u = false);
        self.map[g1.identity()] = g2.identity();
        self.used[g2.identity()] = true;
        let mut queue = vec![g1.identity()];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (k, &img) in self.images.iter().enumerate() {
                let s = self.gens[k];
                let xs = g1.mul(x, s);
                let ys = g2.mul(self.map[x], img);
                if self.map[xs] == usize::MAX {
                    if self.used[ys] {
                        return false;
                    }
                    self.used[ys] = true;
                    self.map[xs] = ys;
                    queue.push(xs);
                } else if self.map[xs] != ys {
                    return false;
                }
            }
        }
        true
    }
}
