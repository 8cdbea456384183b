use std::sync::Arc;

use crate::cohomology::cocycle::CocycleTable;
use crate::error::Result;
use crate::group::table::GroupTable;
use crate::structure::hom::Homomorphism;
use crate::structure::subgroup::Subgroup;

/// Index of the pair `(a, g)` in the extension built from a cocycle mod `m`.
pub fn pair_index(m: u64, a: u64, g: usize) -> usize {
    g * m as usize + (a % m) as usize
}

/// Central extension `ℤ_m ×_f G` with `(a₁,g₁)(a₂,g₂) = (a₁+a₂+f(g₁,g₂), g₁g₂)`,
/// the projection onto `G` and the central copy of `ℤ_m`.
pub fn extension_from_cocycle(
    g: &Arc<GroupTable>,
    m: u64,
    f: &CocycleTable,
) -> Result<(Arc<GroupTable>, Homomorphism, Subgroup)> {
    if f.modulus() != m {
        return Err(crate::Error::InvalidModulus(format!(
            "cocycle is mod {}, extension requested mod {m}",
            f.modulus()
        )));
    }
    f.validate(g)?;
    let mu = m as usize;
    let n = g.order() * mu;
    let labels = (0..n).map(|i| format!("({},{})", i % mu, g.label(i / mu))).collect();
    let e = GroupTable::from_fn(
        n,
        |x, y| {
            let (a1, g1) = ((x % mu) as u64, x / mu);
            let (a2, g2) = ((y % mu) as u64, y / mu);
            pair_index(m, a1 + a2 + f.get(g1, g2), g.mul(g1, g2))
        },
        Some(labels),
    )?;
    let e = Arc::new(e);
    let proj = Homomorphism::new(e.clone(), g.clone(), (0..n).map(|i| i / mu).collect())?;
    let kernel: Vec<usize> = (0..mu).map(|a| pair_index(m, a as u64, g.identity())).collect();
    let a = Subgroup::from_elements(&e, &kernel)?;
    Ok((e, proj, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::products::{cyclic, direct_product};
    use crate::structure::is_isomorphic;

    #[test]
    fn split_extension_is_direct_product() {
        let c2 = Arc::new(cyclic(2));
        let f = CocycleTable::zero(2, 3);
        let (e, p, a) = extension_from_cocycle(&c2, 3, &f).unwrap();
        assert_eq!(e.order(), 6);
        assert_eq!(p.kernel(), a);
        assert!(a.is_central(&e));
        let reference = Arc::new(direct_product(&cyclic(3), &cyclic(2)));
        assert!(is_isomorphic(&e, &reference).is_some());
    }

    #[test]
    fn carry_cocycle_gives_cyclic() {
        // the carry cocycle of C2 mod 2 gives C4
        let c2 = Arc::new(cyclic(2));
        let f = CocycleTable::new(2, 2, vec![0, 0, 0, 1]).unwrap();
        let (e, _, _) = extension_from_cocycle(&c2, 2, &f).unwrap();
        assert!(is_isomorphic(&e, &Arc::new(cyclic(4))).is_some());
    }

    #[test]
    fn rejects_non_cocycle() {
        let c3 = Arc::new(cyclic(3));
        let f = CocycleTable::new(3, 3, vec![0, 0, 0, 0, 1, 0, 0, 0, 0]).unwrap();
        assert!(extension_from_cocycle(&c3, 3, &f).is_err());
    }
}
