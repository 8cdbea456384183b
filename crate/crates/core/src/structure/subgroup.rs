use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::table::GroupTable;

/// A subgroup given by its sorted element indices in some ambient table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn trivial(g: &GroupTable) -> Self {
        Self {
            elements: vec![g.identity()],
        }
    }

    pub fn whole(g: &GroupTable) -> Self {
        Self {
            elements: (0..g.order()).collect(),
        }
    }

    /// Checks closure and returns the subgroup with exactly these elements.
    pub fn from_elements(g: &GroupTable, elements: &[usize]) -> Result<Self> {
        let mut e = elements.to_vec();
        e.sort_unstable();
        e.dedup();
        if let Some(&x) = e.iter().find(|&&x| x >= g.order()) {
            return Err(Error::NotSubgroup(format!("element {x} out of range")));
        }
        let mut member = vec![false; g.order()];
        for &x in &e {
            member[x] = true;
        }
        if !member[g.identity()] {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for &x in &e {
            if !member[g.inv(x)] {
                return Err(Error::NotSubgroup(format!("inverse of {} missing", g.label(x))));
            }
            for &y in &e {
                if !member[g.mul(x, y)] {
                    return Err(Error::NotSubgroup(format!(
                        "{}·{} not in set",
                        g.label(x),
                        g.label(y)
                    )));
                }
            }
        }
        Ok(Self { elements: e })
    }

    /// Subgroup generated by `gens`.
    pub fn generated(g: &GroupTable, gens: &[usize]) -> Self {
        let mut member = vec![false; g.order()];
        let mut elements = vec![g.identity()];
        member[g.identity()] = true;
        let mut useful: Vec<usize> = Vec::new();
        for &s in gens {
            if member[s] {
                continue;
            }
            useful.push(s);
            // extend the closure under right multiplication by all useful gens
            let mut head = 0;
            while head < elements.len() {
                let x = elements[head];
                head += 1;
                for &t in &useful {
                    let y = g.mul(x, t);
                    if !member[y] {
                        member[y] = true;
                        elements.push(y);
                    }
                }
            }
        }
        elements.sort_unstable();
        Self { elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            elements: self.elements.iter().copied().filter(|&x| other.contains(x)).collect(),
        }
    }

    pub fn membership(&self, g: &GroupTable) -> Vec<bool> {
        let mut m = vec![false; g.order()];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }

    pub fn is_normal(&self, g: &GroupTable) -> bool {
        let m = self.membership(g);
        (0..g.order()).all(|x| self.elements.iter().all(|&n| m[g.conjugate(x, n)]))
    }

    pub fn is_central(&self, g: &GroupTable) -> bool {
        self.elements.iter().all(|&z| (0..g.order()).all(|x| g.commutes(x, z)))
    }

    pub fn labels(&self, g: &GroupTable) -> Vec<String> {
        self.elements.iter().map(|&x| g.label(x)).collect()
    }
}
