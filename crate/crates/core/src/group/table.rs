//! Finite groups as explicit Cayley tables.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group given by its full multiplication table.
///
/// Elements are the indices `0..order`; `mul(i, j)` is the index of `gᵢ·gⱼ`.
/// Tables are immutable once built and every public constructor except
/// [`GroupTable::from_parts_unchecked`] verifies the group axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl GroupTable {
    /// Builds a table from `f(i, j) = i·j`, locating identity and inverses
    /// and verifying all axioms.
    pub fn from_fn<F>(order: usize, f: F, labels: Option<Vec<String>>) -> Result<Self>
    where
        F: Fn(usize, usize) -> usize,
    {
        let mut table = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                table.push(f(i, j));
            }
        }
        Self::from_flat(order, table, labels)
    }

    /// Builds a table from row-major rows.
    pub fn from_rows(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidTable("table is not square".into()));
        }
        Self::from_flat(order, rows.into_iter().flatten().collect(), labels)
    }

    pub fn from_flat(order: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable("table is not square".into()));
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::InvalidTable(format!(
                    "{} labels for {} elements",
                    l.len(),
                    order
                )));
            }
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| table[e * order + j] == j && table[j * order + e] == j))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        let mut inverses = vec![usize::MAX; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            let j = row
                .iter()
                .position(|&x| x == identity)
                .ok_or_else(|| Error::InvalidTable(format!("element {i} has no inverse")))?;
            inverses[i] = j;
        }
        let g = Self {
            order,
            table,
            identity,
            inverses,
            labels,
        };
        let report = verify_axioms(&g);
        if report.all_pass() {
            Ok(g)
        } else {
            Err(Error::NotAGroup(Box::new(report)))
        }
    }

    /// Wraps raw data without any checking. Intended for feeding deliberately
    /// broken tables to [`verify_axioms`].
    pub fn from_parts_unchecked(
        order: usize,
        table: Vec<usize>,
        identity: usize,
        inverses: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Self {
        Self {
            order,
            table,
            identity,
            inverses,
            labels,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn flat(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// The commutator `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        self.mul(self.mul(xy, self.inv(x)), self.inv(y))
    }

    /// Conjugate `g x g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of an element, falling back to its index.
    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidTable("label count mismatch".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Product of a sequence of (element, exponent) factors.
    pub fn eval(&self, factors: &[(usize, i64)]) -> usize {
        factors
            .iter()
            .fold(self.identity, |acc, &(g, k)| self.mul(acc, self.pow(g, k)))
    }

    pub fn to_json(&self) -> CayleyJson {
        CayleyJson {
            order: self.order,
            labels: (0..self.order).map(|i| self.label(i)).collect(),
            table: self.rows(),
        }
    }

    pub fn from_json(json: CayleyJson) -> Result<Self> {
        if json.order != json.table.len() {
            return Err(Error::InvalidTable(format!(
                "declared order {} but table has {} rows",
                json.order,
                json.table.len()
            )));
        }
        let labels = if json.labels.is_empty() {
            None
        } else {
            Some(json.labels)
        };
        Self::from_rows(json.table, labels)
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_json())?)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(serde_json::from_str(s)?)
    }
}

/// Cayley-table file format: `{"order": n, "labels": [...], "table": [[...]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CayleyJson {
    pub order: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

/// Outcome of [`verify_axioms`]; failures are entries, not errors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub in_range: bool,
    pub identity: bool,
    pub inverses: bool,
    pub latin: bool,
    pub associativity: bool,
    pub triples_checked: u64,
    pub first_failure: Option<String>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.in_range && self.identity && self.inverses && self.latin && self.associativity
    }
}

impl std::fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "range={} identity={} inverses={} latin={} assoc={}",
            self.in_range, self.identity, self.inverses, self.latin, self.associativity
        )?;
        if let Some(m) = &self.first_failure {
            write!(f, " ({m})")?;
        }
        Ok(())
    }
}

/// Brute-force check of every group axiom, including associativity over all
/// `order³` triples (parallel over the first factor).
pub fn verify_axioms(g: &GroupTable) -> AxiomReport {
    let n = g.order;
    let t = &g.table;
    let mut failure: Option<String> = None;
    let mut note = |msg: String| {
        if failure.is_none() {
            failure = Some(msg);
        }
    };

    let in_range = t.len() == n * n
        && g.inverses.len() == n
        && g.identity < n
        && t.iter().all(|&x| x < n)
        && g.inverses.iter().all(|&x| x < n);
    if !in_range {
        note("table dimensions or entries out of range".into());
        return AxiomReport {
            in_range,
            identity: false,
            inverses: false,
            latin: false,
            associativity: false,
            triples_checked: 0,
            first_failure: failure,
        };
    }

    let e = g.identity;
    let identity = (0..n).all(|j| t[e * n + j] == j && t[j * n + e] == j);
    if !identity {
        note(format!("element {e} is not a two-sided identity"));
    }
    let inverses = (0..n).all(|i| t[i * n + g.inverses[i]] == e && t[g.inverses[i] * n + i] == e);
    if !inverses {
        note("inverse table is wrong".into());
    }

    let mut latin = true;
    let mut seen = vec![usize::MAX; n];
    'rows: for i in 0..n {
        for j in 0..n {
            let x = t[i * n + j];
            if seen[x] == i {
                latin = false;
                note(format!("row {i} repeats entry {x}"));
                break 'rows;
            }
            seen[x] = i;
        }
    }
    if latin {
        seen.iter_mut().for_each(|s| *s = usize::MAX);
        'cols: for j in 0..n {
            for i in 0..n {
                let x = t[i * n + j];
                if seen[x] == j {
                    latin = false;
                    note(format!("column {j} repeats entry {x}"));
                    break 'cols;
                }
                seen[x] = j;
            }
        }
    }

    let bad = (0..n).into_par_iter().find_map_first(|a| {
        let row_a = &t[a * n..(a + 1) * n];
        for b in 0..n {
            let ab = row_a[b];
            let row_ab = &t[ab * n..(ab + 1) * n];
            let row_b = &t[b * n..(b + 1) * n];
            for c in 0..n {
                if row_ab[c] != row_a[row_b[c]] {
                    return Some((a, b, c));
                }
            }
        }
        None
    });
    let associativity = bad.is_none();
    if let Some((a, b, c)) = bad {
        note(format!("(g{a}·g{b})·g{c} ≠ g{a}·(g{b}·g{c})"));
    }

    AxiomReport {
        in_range,
        identity,
        inverses,
        latin,
        associativity,
        triples_checked: (n as u64).pow(3),
        first_failure: failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> GroupTable {
        GroupTable::from_fn(n, |a, b| (a + b) % n, None).unwrap()
    }

    #[test]
    fn cyclic_passes() {
        let g = cyclic(7);
        assert!(verify_axioms(&g).all_pass());
        assert_eq!(g.element_order(3), 7);
        assert_eq!(g.pow(3, -2), 1);
    }

    #[test]
    fn rejects_non_group() {
        // subtraction mod 3 has no two-sided identity
        let r = GroupTable::from_fn(3, |a, b| (a + 3 - b) % 3, None);
        assert!(r.is_err());
    }

    #[test]
    fn corrupted_entry_detected() {
        let g = cyclic(5);
        let mut t = g.flat().to_vec();
        t[2 * 5 + 3] = 4;
        let bad = GroupTable::from_parts_unchecked(5, t, 0, g.inverses().to_vec(), None);
        let r = verify_axioms(&bad);
        assert!(!r.all_pass());
        assert!(!r.latin || !r.associativity);
    }

    #[test]
    fn json_round_trip() {
        let g = cyclic(4);
        let s = g.to_json_string().unwrap();
        let h = GroupTable::from_json_str(&s).unwrap();
        assert_eq!(h.rows(), g.rows());
        assert_eq!(h.label(3), "3");
    }
}
