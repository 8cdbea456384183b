//! Small reference groups built independently of the catalogue, and a
//! parser for their names (`C6`, `S4`, `D5`, `Q8`, `A4`, `C2xC2`, ...).

use crate::error::{Error, Result};
use crate::group::products::{abelian, cyclic, direct_product, semidirect_product, symmetric, ActionSpec};
use crate::group::table::GroupTable;

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize) -> GroupTable {
    let cn = cyclic(n);
    let c2 = cyclic(2);
    let act = ActionSpec::new(&c2, &cn, |h, x| if h == 0 { x } else { (n - x) % n }).expect("inversion");
    semidirect_product(&cn, &c2, &act).expect("dihedral group")
}

/// Dicyclic group `⟨a, x | a^{2n} = 1, x² = aⁿ, x a x⁻¹ = a⁻¹⟩` of order
/// `4n`; `dicyclic(2)` is the quaternion group.
pub fn dicyclic(n: usize) -> GroupTable {
    let m = 2 * n;
    // a^k x^j at index 2k + j
    let labels = (0..2 * m).map(|i| format!("a^{}x^{}", i / 2, i % 2)).collect();
    GroupTable::from_fn(
        2 * m,
        |p, q| {
            let (k1, j1, k2, j2) = (p / 2, p % 2, q / 2, q % 2);
            let (k, j) = match (j1, j2) {
                (0, _) => (k1 + k2, j2),
                (_, 0) => (k1 + m - k2, 1),
                _ => (k1 + m - k2 + n, 0),
            };
            2 * (k % m) + j
        },
        Some(labels),
    )
    .expect("dicyclic group")
}

/// `A₄ ≅ (C2 × C2) ⋊ C3`.
pub fn alternating4() -> GroupTable {
    let v = abelian(&[2, 2]);
    let c3 = cyclic(3);
    // (u, v) ↦ (v, u + v) at index 2u + v has order 3
    let rot = |x: usize| {
        let (u, w) = (x / 2, x % 2);
        2 * w + (u ^ w)
    };
    let act = ActionSpec::new(&c3, &v, |h, x| (0..h).fold(x, |y, _| rot(y))).expect("rotation");
    semidirect_product(&v, &c3, &act).expect("A4")
}

fn parse_factor(s: &str) -> Option<GroupTable> {
    let num = |t: &str| t.parse::<usize>().ok().filter(|&n| n >= 1);
    let s = s.trim();
    match s.to_ascii_uppercase().as_str() {
        "A4" => return Some(alternating4()),
        "Q8" => return Some(dicyclic(2)),
        _ => {}
    }
    let (head, rest) = s.split_at(s.find(|c: char| c.is_ascii_digit())?);
    let n = num(rest)?;
    match head.to_ascii_uppercase().as_str() {
        "C" => Some(cyclic(n)),
        "S" if n <= 6 => Some(symmetric(n)),
        "D" if n >= 2 => Some(dihedral(n)),
        "DIC" if n >= 2 => Some(dicyclic(n)),
        _ => None,
    }
}

/// A reference group by name: `Cn`, `Sn` (n ≤ 6), `Dn` (order 2n),
/// `DICn` (order 4n), `Q8`, `A4`, or a direct product such as `C2xC2`.
pub fn parse_reference(s: &str) -> Result<GroupTable> {
    let mut acc: Option<GroupTable> = None;
    for part in s.split(['x', 'X', '*']) {
        let g = parse_factor(part).ok_or_else(|| Error::UnknownKey(s.to_string()))?;
        acc = Some(match acc {
            None => g,
            Some(a) => direct_product(&a, &g),
        });
    }
    acc.ok_or_else(|| Error::UnknownKey(s.to_string()))
}

/// One group from each isomorphism class of order at most 12.
pub fn small_groups() -> Vec<(String, GroupTable)> {
    let mut out: Vec<(String, GroupTable)> = (1..=12).map(|n| (format!("C{n}"), cyclic(n))).collect();
    for name in ["C2xC2", "S3", "C2xC4", "C2xC2xC2", "D4", "Q8", "C3xC3", "D5", "C2xC6", "D6", "A4", "DIC3"] {
        out.push((name.to_string(), parse_reference(name).expect("reference name")));
    }
    out.sort_by_key(|(_, g)| g.order());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{center, is_isomorphic};
    use std::sync::Arc;

    #[test]
    fn quaternion() {
        let q = dicyclic(2);
        assert_eq!(q.order(), 8);
        assert_eq!(center(&q).order(), 2);
        // six elements of order 4, one of order 2
        assert_eq!((0..8).filter(|&x| q.element_order(x) == 4).count(), 6);
    }

    #[test]
    fn alternating_four() {
        let a4 = alternating4();
        assert_eq!(a4.order(), 12);
        assert_eq!(center(&a4).order(), 1);
        assert_eq!((0..12).filter(|&x| a4.element_order(x) == 3).count(), 8);
    }

    #[test]
    fn parse_names() {
        assert_eq!(parse_reference("C2xC2").unwrap().order(), 4);
        assert_eq!(parse_reference("d4").unwrap().order(), 8);
        assert_eq!(parse_reference("S4").unwrap().order(), 24);
        assert!(parse_reference("G20").is_err());
        assert!(parse_reference("C0").is_err());
    }

    #[test]
    fn small_groups_pairwise_distinct() {
        let gs: Vec<Arc<GroupTable>> = small_groups().into_iter().map(|(_, g)| Arc::new(g)).collect();
        assert_eq!(gs.len(), 24);
        for i in 0..gs.len() {
            for j in i + 1..gs.len() {
                assert!(is_isomorphic(&gs[i], &gs[j]).is_none(), "{i} ≅ {j}");
            }
        }
    }
}
