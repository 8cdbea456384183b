//! Invariant factors and bases of finite abelian groups given by elements.

use crate::error::{Error, Result};
use crate::group::table::GroupTable;
use crate::structure::subgroup::Subgroup;

pub(crate) fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Combines elementary divisors `p^k` into invariant factors `d₁ | d₂ | …`.
pub fn invariant_factors_from_primary(primary: &[(u64, Vec<u32>)]) -> Vec<u64> {
    let len = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for (p, exps) in primary {
        let mut e = exps.clone();
        e.sort_unstable();
        // the largest exponents go into the last (largest) factors
        let off = len - e.len();
        for (i, k) in e.iter().enumerate() {
            out[off + i] *= p.pow(*k);
        }
    }
    out.retain(|&d| d > 1);
    out
}

/// Invariant factors of the abelian subgroup with the given elements, by
/// counting solutions of `x^(p^k) = 1`.
pub fn invariants_of_elements(g: &GroupTable, elements: &[usize]) -> Result<Vec<u64>> {
    for &x in elements {
        for &y in elements {
            if !g.commutes(x, y) {
                return Err(Error::NotAbelian);
            }
        }
    }
    let n = elements.len() as u64;
    let mut primary = Vec::new();
    for (p, e) in prime_factors(n) {
        // r[k] = number of elements killed by p^k
        let mut counts = vec![1u64];
        for k in 1..=e {
            let q = p.pow(k) as i64;
            counts.push(elements.iter().filter(|&&x| g.pow(x, q) == g.identity()).count() as u64);
        }
        // rank of p^(k-1)A / p^k A layers: log_p(counts[k]/counts[k-1])
        let mut ge: Vec<u32> = Vec::new();
        for k in 1..=e as usize {
            let mut ratio = counts[k] / counts[k - 1];
            let mut r = 0;
            while ratio > 1 {
                ratio /= p;
                r += 1;
            }
            ge.push(r);
        }
        // ge[k-1] = number of cyclic factors of order ≥ p^k
        let mut exps = Vec::new();
        for k in 1..=ge.len() {
            let here = ge[k - 1] - ge.get(k).copied().unwrap_or(0);
            exps.extend(std::iter::repeat_n(k as u32, here as usize));
        }
        primary.push((p, exps));
    }
    Ok(invariant_factors_from_primary(&primary))
}

/// Invariant factors of an abelian table.
pub fn abelian_invariants(a: &GroupTable) -> Result<Vec<u64>> {
    let all: Vec<usize> = (0..a.order()).collect();
    invariants_of_elements(a, &all)
}

/// Invariant factors of an abelian subgroup.
pub fn subgroup_invariants(g: &GroupTable, s: &Subgroup) -> Result<Vec<u64>> {
    invariants_of_elements(g, s.elements())
}

/// Elements `b₁, …, b_k` of an abelian subgroup with `order(bᵢ) = dᵢ` (the
/// invariant factors) such that every element is uniquely `∏ bᵢ^{aᵢ}`.
pub fn abelian_basis(g: &GroupTable, s: &Subgroup) -> Result<Vec<usize>> {
    let inv = subgroup_invariants(g, s)?;
    let mut chosen = Vec::new();
    if search_basis(g, s, &inv, inv.len(), &mut chosen) {
        chosen.reverse();
        Ok(chosen)
    } else {
        Err(Error::NotSubgroup("no basis found for abelian subgroup".into()))
    }
}

// Picks basis elements from the largest factor down so the generated
// subgroup always has the product of the chosen orders.
fn search_basis(g: &GroupTable, s: &Subgroup, inv: &[u64], left: usize, chosen: &mut Vec<usize>) -> bool {
    if left == 0 {
        return true;
    }
    let d = inv[left - 1] as usize;
    let target: usize = inv[left - 1..].iter().map(|&x| x as usize).product();
    for &x in s.elements() {
        if g.element_order(x) != d {
            continue;
        }
        chosen.push(x);
        if Subgroup::generated(g, chosen).order() == target && search_basis(g, s, inv, left - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::products::{abelian, cyclic, symmetric};

    #[test]
    fn invariants_of_products() {
        assert_eq!(abelian_invariants(&abelian(&[3, 3])).unwrap(), vec![3, 3]);
        assert_eq!(abelian_invariants(&abelian(&[2, 3])).unwrap(), vec![6]);
        assert_eq!(abelian_invariants(&abelian(&[4, 2, 3])).unwrap(), vec![2, 12]);
        assert_eq!(abelian_invariants(&cyclic(1)).unwrap(), Vec::<u64>::new());
        assert!(abelian_invariants(&symmetric(3)).is_err());
    }

    #[test]
    fn basis_generates() {
        let g = abelian(&[2, 4, 3]);
        let all = Subgroup::whole(&g);
        let b = abelian_basis(&g, &all).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(g.element_order(b[0]), 2);
        assert_eq!(g.element_order(b[1]), 12);
        assert_eq!(Subgroup::generated(&g, &b).order(), 24);
    }
}
