//! Partition of the irreducible characters of a central extension by their
//! central character on the kernel.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::table::GroupTable;
use crate::structure::abelian_basis;
use crate::structure::subgroup::Subgroup;

use super::{character_table, CharacterTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinType {
    /// `τ(bᵢ) = exp(2πi·τᵢ/dᵢ)` on the basis `bᵢ` of `A`.
    pub tau: Vec<u64>,
    /// Indices into the character table.
    pub characters: Vec<usize>,
    pub degrees: Vec<usize>,
    pub sum_of_squares: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinTypePartition {
    pub subgroup: Vec<String>,
    pub basis: Vec<String>,
    pub basis_orders: Vec<usize>,
    pub types: Vec<SpinType>,
}

impl SpinTypePartition {
    /// `τ ≡ 1`.
    pub fn trivial_type(&self) -> Option<&SpinType> {
        self.types.iter().find(|t| t.tau.iter().all(|&x| x == 0))
    }

    pub fn subgroup_order(&self) -> usize {
        self.basis_orders.iter().product()
    }
}

pub fn spin_types(h: &GroupTable, a: &Subgroup) -> Result<SpinTypePartition> {
    if !a.is_central(h) {
        return Err(Error::NotCentral);
    }
    spin_types_with_table(h, &character_table(h)?, a)
}

/// Spin types using an already computed character table of `h`.
pub fn spin_types_with_table(h: &GroupTable, table: &CharacterTable, a: &Subgroup) -> Result<SpinTypePartition> {
    if !a.is_central(h) {
        return Err(Error::NotCentral);
    }
    let basis = abelian_basis(h, a)?;
    let orders: Vec<usize> = basis.iter().map(|&b| h.element_order(b)).collect();
    let k = table.field();
    let e = table.exponent();
    let mut types: Vec<SpinType> = Vec::new();
    for (i, &d) in table.degrees().iter().enumerate() {
        let mut tau = Vec::with_capacity(basis.len());
        for (&b, &o) in basis.iter().zip(&orders) {
            let t = k.root_of_unity_multiple(table.value_at(i, b), d as i64).ok_or_else(|| {
                Error::CharacterVerification(format!("χ_{i} is not scalar on a central element"))
            })?;
            let step = e / o;
            if t % step != 0 {
                return Err(Error::CharacterVerification(format!(
                    "central character of χ_{i} has the wrong order"
                )));
            }
            tau.push((t / step) as u64);
        }
        match types.iter_mut().find(|s| s.tau == tau) {
            Some(s) => {
                s.characters.push(i);
                s.degrees.push(d);
                s.sum_of_squares += d * d;
            }
            None => types.push(SpinType {
                tau,
                characters: vec![i],
                degrees: vec![d],
                sum_of_squares: d * d,
            }),
        }
    }
    types.sort_by(|x, y| x.tau.cmp(&y.tau));
    let part = SpinTypePartition {
        subgroup: a.labels(h),
        basis: basis.iter().map(|&b| h.label(b)).collect(),
        basis_orders: orders,
        types,
    };
    let q = h.order() / a.order();
    if let Some(t) = part.types.iter().find(|t| t.sum_of_squares != q) {
        return Err(Error::CharacterVerification(format!(
            "spin type {:?} has Σd² = {} ≠ |H|/|A| = {q}",
            t.tau, t.sum_of_squares
        )));
    }
    Ok(part)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::products::{cyclic, symmetric};
    use crate::structure::center;

    #[test]
    fn trivial_kernel_single_type() {
        let g = symmetric(4);
        let p = spin_types(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(p.types.len(), 1);
        assert_eq!(p.types[0].characters.len(), 5);
        assert!(p.types[0].tau.is_empty());
    }

    #[test]
    fn cyclic_kernel_is_whole_group() {
        let g = cyclic(4);
        let p = spin_types(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(p.types.len(), 4);
        assert!(p.types.iter().all(|t| t.sum_of_squares == 1));
        assert!(p.trivial_type().is_some());
    }

    #[test]
    fn non_central_rejected() {
        let g = symmetric(3);
        let s = Subgroup::whole(&g);
        assert!(matches!(spin_types(&g, &s), Err(Error::NotCentral)));
        assert_eq!(center(&g).order(), 1);
    }
}
