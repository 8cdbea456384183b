//! Exact character tables and spin types.

pub mod cyclotomic;
pub mod dixon;
pub mod spin;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::table::GroupTable;
use crate::structure::iso::{fingerprint, Fingerprint};

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic, CyclotomicField};
pub use dixon::{dixon_prime, primitive_root};
pub use spin::{spin_types, spin_types_with_table, SpinType, SpinTypePartition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassInfo {
    pub representative: String,
    #[serde(skip)]
    pub representative_index: usize,
    pub size: usize,
    pub element_order: usize,
}

/// Irreducible characters of a finite group with values in `ℤ[ζ_e]`,
/// `e` the exponent. Row `i` is the `i`-th irreducible, column `k` the
/// `k`-th conjugacy class; the trivial character and the identity class
/// come first.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    order: usize,
    exponent: usize,
    prime: u64,
    classes: Vec<ClassInfo>,
    class_of: Vec<usize>,
    degrees: Vec<usize>,
    values: Vec<Vec<Cyclotomic>>,
    field: CyclotomicField,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterTableJson {
    pub order: usize,
    pub exponent: usize,
    pub prime: u64,
    /// Values are coefficient vectors in `1, ζ, …, ζ^{φ(e)−1}`,
    /// `ζ = exp(2πi/e)`.
    pub basis: String,
    pub classes: Vec<ClassInfo>,
    pub degrees: Vec<usize>,
    pub characters: Vec<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spin_types: Option<SpinTypePartition>,
}

pub fn character_table(g: &GroupTable) -> Result<CharacterTable> {
    let out = dixon::dixon(g)?;
    let r = out.classes.len();
    // trivial first, then by degree, then by values
    let mut idx: Vec<usize> = (0..r).collect();
    let trivial = |i: usize| out.degrees[i] == 1 && out.residues[i].iter().all(|&x| x == 1);
    idx.sort_by(|&a, &b| {
        (!trivial(a), out.degrees[a], &out.values[a]).cmp(&(!trivial(b), out.degrees[b], &out.values[b]))
    });
    let classes = out
        .classes
        .iter()
        .map(|c| ClassInfo {
            representative: g.label(c[0]),
            representative_index: c[0],
            size: c.len(),
            element_order: g.element_order(c[0]),
        })
        .collect();
    let table = CharacterTable {
        order: g.order(),
        exponent: out.exponent,
        prime: out.prime,
        classes,
        class_of: out.class_of,
        degrees: idx.iter().map(|&i| out.degrees[i]).collect(),
        values: idx.iter().map(|&i| out.values[i].clone()).collect(),
        field: out.field,
    };
    table.verify()?;
    Ok(table)
}

impl CharacterTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `χ_i` on class `k`.
    pub fn value(&self, i: usize, k: usize) -> &Cyclotomic {
        &self.values[i][k]
    }

    /// `χ_i(x)` for a group element `x`.
    pub fn value_at(&self, i: usize, x: usize) -> &Cyclotomic {
        &self.values[i][self.class_of[x]]
    }

    pub fn characters(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn linear_characters(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    /// Checks the square shape, `Σ χ(1)² = |G|`, `χ(1) | |G|`, and exact row
    /// and column orthogonality.
    #[allow(clippy::needless_range_loop)]
    pub fn verify(&self) -> Result<()> {
        let r = self.classes.len();
        let k = &self.field;
        let fail = |m: String| Err(Error::CharacterVerification(m));
        if self.values.len() != r {
            return fail(format!("{} characters for {r} classes", self.values.len()));
        }
        let sum: usize = self.degrees.iter().map(|d| d * d).sum();
        if sum != self.order {
            return fail(format!("sum of squared degrees {sum} ≠ {}", self.order));
        }
        if let Some(d) = self.degrees.iter().find(|&&d| !self.order.is_multiple_of(d)) {
            return fail(format!("degree {d} does not divide {}", self.order));
        }
        for (i, row) in self.values.iter().enumerate() {
            if row[0] != k.from_int(self.degrees[i] as i64) {
                return fail(format!("χ_{i}(1) ≠ {}", self.degrees[i]));
            }
        }
        let conj: Vec<Vec<Cyclotomic>> = self.values.iter().map(|row| row.iter().map(|v| k.conj(v)).collect()).collect();
        for i in 0..r {
            for j in i..r {
                let mut s = k.zero();
                for c in 0..r {
                    let t = k.mul(&self.values[i][c], &conj[j][c]);
                    s = k.add(&s, &k.scale(&t, self.classes[c].size as i64));
                }
                let want = if i == j { self.order as i64 } else { 0 };
                if s != k.from_int(want) {
                    return fail(format!("row orthogonality fails for characters {i}, {j}"));
                }
            }
        }
        for a in 0..r {
            for b in a..r {
                let mut s = k.zero();
                for i in 0..r {
                    s = k.add(&s, &k.mul(&self.values[i][a], &conj[i][b]));
                }
                let want = if a == b { (self.order / self.classes[a].size) as i64 } else { 0 };
                if s != k.from_int(want) {
                    return fail(format!("column orthogonality fails for classes {a}, {b}"));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self, spin: Option<SpinTypePartition>) -> CharacterTableJson {
        CharacterTableJson {
            order: self.order,
            exponent: self.exponent,
            prime: self.prime,
            basis: format!("power basis of z{e} modulo Phi_{e}", e = self.exponent),
            classes: self.classes.clone(),
            degrees: self.degrees.clone(),
            characters: self.values.iter().map(|row| row.iter().map(|v| v.coeffs().to_vec()).collect()).collect(),
            spin_types: spin,
        }
    }

    /// Aligned text rendering with one row per irreducible.
    pub fn render(&self) -> String {
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut head = vec![String::new()];
        head.extend(self.classes.iter().map(|c| format!("{}[{}|{}]", c.representative, c.element_order, c.size)));
        rows.push(head);
        for (i, row) in self.values.iter().enumerate() {
            let mut r = vec![format!("X.{}", i + 1)];
            r.extend(row.iter().map(|v| self.field.display(v)));
            rows.push(r);
        }
        let widths: Vec<usize> = (0..rows[0].len())
            .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for r in rows {
            let cells: Vec<String> = r.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// Degrees of the irreducible characters, ascending.
pub fn irrep_degrees(g: &GroupTable) -> Result<Vec<usize>> {
    let mut d = character_table(g)?.degrees;
    d.sort_unstable();
    Ok(d)
}

/// [`fingerprint`] with the irreducible degrees filled in.
pub fn fingerprint_with_degrees(g: &GroupTable) -> Result<Fingerprint> {
    let mut f = fingerprint(g);
    f.irrep_degrees = Some(irrep_degrees(g)?);
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::products::{abelian, cyclic, symmetric};

    #[test]
    fn cyclic_three() {
        let t = character_table(&cyclic(3)).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1]);
        let k = t.field();
        let (w, w2) = (k.zeta(1), k.zeta(2));
        let rows = &t.characters()[1..];
        for row in rows {
            assert_eq!(row[0], k.from_int(1));
            assert!(row[1] == w && row[2] == w2 || row[1] == w2 && row[2] == w);
        }
        assert_ne!(rows[0], rows[1]);
    }

    #[test]
    fn symmetric_degrees() {
        assert_eq!(irrep_degrees(&symmetric(3)).unwrap(), vec![1, 1, 2]);
        assert_eq!(irrep_degrees(&symmetric(4)).unwrap(), vec![1, 1, 2, 3, 3]);
        let t = character_table(&symmetric(4)).unwrap();
        // S4 is rational
        assert!(t.characters().iter().flatten().all(|v| v.as_integer().is_some()));
    }

    #[test]
    fn abelian_all_linear() {
        let g = abelian(&[2, 4]);
        assert_eq!(irrep_degrees(&g).unwrap(), vec![1; 8]);
        let t = character_table(&cyclic(1)).unwrap();
        assert_eq!(t.degrees(), &[1]);
    }

    #[test]
    fn render_and_json() {
        let t = character_table(&symmetric(3)).unwrap();
        assert_eq!(t.render().lines().count(), 4);
        let j = serde_json::to_value(t.to_json(None)).unwrap();
        assert_eq!(j["degrees"], serde_json::json!([1, 1, 2]));
        assert!(j.get("spin_types").is_none());
    }

    #[test]
    fn tampered_table_fails() {
        let mut t = character_table(&symmetric(3)).unwrap();
        let one = t.field.from_int(1);
        t.values[1][1] = one;
        assert!(t.verify().is_err());
    }
}
