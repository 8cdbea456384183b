//! Reference constructions: cyclic and symmetric groups, direct and
//! semidirect products.

use crate::error::{Error, Result};
use crate::group::table::GroupTable;

/// `C_n` on residues `0..n`.
pub fn cyclic(n: usize) -> GroupTable {
    assert!(n > 0, "cyclic group of order 0");
    let labels = (0..n).map(|i| i.to_string()).collect();
    GroupTable::from_fn(n, |a, b| (a + b) % n, Some(labels)).expect("cyclic group")
}

/// Direct product of abelian cyclic factors, e.g. `&[2, 2]` for `C2 × C2`.
pub fn abelian(factors: &[usize]) -> GroupTable {
    factors
        .iter()
        .fold(cyclic(1), |acc, &n| direct_product(&acc, &cyclic(n)))
}

/// `S_n` acting on `{0..n-1}`, elements in lexicographic order of one-line
/// notation, product `(στ)(i) = σ(τ(i))`.
pub fn symmetric(n: usize) -> GroupTable {
    let perms = permutations(n);
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    let labels = perms
        .iter()
        .map(|p| format!("[{}]", p.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")))
        .collect();
    GroupTable::from_fn(
        perms.len(),
        |a, b| {
            let c: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
            index(&c)
        },
        Some(labels),
    )
    .expect("symmetric group")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// `G1 × G2` with element `(a, b)` at index `a·|G2| + b`.
pub fn direct_product(g1: &GroupTable, g2: &GroupTable) -> GroupTable {
    let n2 = g2.order();
    let labels = (0..g1.order() * n2)
        .map(|i| format!("({},{})", g1.label(i / n2), g2.label(i % n2)))
        .collect();
    GroupTable::from_fn(
        g1.order() * n2,
        |x, y| g1.mul(x / n2, y / n2) * n2 + g2.mul(x % n2, y % n2),
        Some(labels),
    )
    .expect("direct product of groups is a group")
}

/// An action of `acting` on `acted` by automorphisms, stored as a table
/// `action[h·|N| + n] = h·n`.
#[derive(Clone, Debug)]
pub struct ActionSpec<'a> {
    acting: &'a GroupTable,
    acted: &'a GroupTable,
    action: Vec<usize>,
}

impl<'a> ActionSpec<'a> {
    /// Tabulates `f` and checks that it is a homomorphism into `Aut(acted)`.
    pub fn new<F>(acting: &'a GroupTable, acted: &'a GroupTable, f: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> usize,
    {
        let nn = acted.order();
        let mut action = Vec::with_capacity(acting.order() * nn);
        for h in 0..acting.order() {
            for g in 0..nn {
                action.push(f(h, g));
            }
        }
        let out = Self {
            acting,
            acted,
            action,
        };
        out.check()?;
        Ok(out)
    }

    /// Action determined by the images of a generating set of `acting`; each
    /// image is a map on `acted`.
    pub fn from_generator_maps(
        acting: &'a GroupTable,
        acted: &'a GroupTable,
        gens: &[(usize, Vec<usize>)],
    ) -> Result<Self> {
        let nn = acted.order();
        let mut maps: Vec<Option<Vec<usize>>> = vec![None; acting.order()];
        maps[acting.identity()] = Some((0..nn).collect());
        let mut queue = vec![acting.identity()];
        while let Some(h) = queue.pop() {
            for (g, m) in gens {
                let hg = acting.mul(h, *g);
                let mh = maps[h].clone().unwrap();
                let composed: Vec<usize> = (0..nn).map(|x| mh[m[x]]).collect();
                match &maps[hg] {
                    None => {
                        maps[hg] = Some(composed);
                        queue.push(hg);
                    }
                    Some(existing) if *existing != composed => {
                        return Err(Error::InvalidAction(format!(
                            "generator images are inconsistent at element {hg}"
                        )))
                    }
                    _ => {}
                }
            }
        }
        if maps.iter().any(Option::is_none) {
            return Err(Error::InvalidAction("generators do not generate the acting group".into()));
        }
        let maps: Vec<Vec<usize>> = maps.into_iter().map(Option::unwrap).collect();
        Self::new(acting, acted, |h, x| maps[h][x])
    }

    pub fn apply(&self, h: usize, g: usize) -> usize {
        self.action[h * self.acted.order() + g]
    }

    fn check(&self) -> Result<()> {
        let n = self.acted;
        let h = self.acting;
        for g in 0..n.order() {
            if self.apply(h.identity(), g) != g {
                return Err(Error::InvalidAction("identity does not act trivially".into()));
            }
        }
        for a in 0..h.order() {
            let mut hit = vec![false; n.order()];
            for x in 0..n.order() {
                let ax = self.apply(a, x);
                if ax >= n.order() || hit[ax] {
                    return Err(Error::InvalidAction(format!("element {a} does not act bijectively")));
                }
                hit[ax] = true;
                for y in 0..n.order() {
                    if self.apply(a, n.mul(x, y)) != n.mul(ax, self.apply(a, y)) {
                        return Err(Error::InvalidAction(format!(
                            "element {a} does not act by a homomorphism"
                        )));
                    }
                }
            }
            for b in 0..h.order() {
                let ab = h.mul(a, b);
                for x in 0..n.order() {
                    if self.apply(ab, x) != self.apply(a, self.apply(b, x)) {
                        return Err(Error::InvalidAction(format!(
                            "action of {a}·{b} is not the composite"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `N ⋊ H` with `(n₁,h₁)(n₂,h₂) = (n₁·(h₁·n₂), h₁h₂)`; element `(n, h)` at
/// index `n·|H| + h`.
pub fn semidirect_product(n: &GroupTable, h: &GroupTable, action: &ActionSpec<'_>) -> Result<GroupTable> {
    if !std::ptr::eq(action.acted, n) && action.acted != n {
        return Err(Error::InvalidAction("action is not on the given normal factor".into()));
    }
    if !std::ptr::eq(action.acting, h) && action.acting != h {
        return Err(Error::InvalidAction("action is not by the given complement".into()));
    }
    let nh = h.order();
    let labels = (0..n.order() * nh)
        .map(|i| format!("({},{})", n.label(i / nh), h.label(i % nh)))
        .collect();
    GroupTable::from_fn(
        n.order() * nh,
        |x, y| {
            let (n1, h1) = (x / nh, x % nh);
            let (n2, h2) = (y / nh, y % nh);
            n.mul(n1, action.apply(h1, n2)) * nh + h.mul(h1, h2)
        },
        Some(labels),
    )
}
