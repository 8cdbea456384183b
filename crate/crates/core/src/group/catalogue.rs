//! The named groups: the order-18 group and its covers of order 54, the
//! exponent-3 group of order 27 with its extensions of order 81 and 243, and
//! the double covers `T′` of `S_n`.
//!
//! Groups with a normal-form rule are built from that rule and then rebuilt by
//! coset enumeration from their defining presentation; the two tables must
//! agree under the bijection that sends a normal-form tuple to the element
//! named by the corresponding generator word.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::coset::{coset_cap, enumerate_cosets, CosetTable};
use crate::group::normal_form::{
    dihedral_heisenberg_product, g243_collector, g39_collector, g81_collector, Collector, MixedRadix,
};
use crate::group::presentation::{Presentation, Word};
use crate::group::table::{verify_axioms, GroupTable};
use crate::structure::hom::Homomorphism;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogueKey {
    /// Non-abelian group of order 18, `(C3×C3)⋊C2` with inversion.
    G20,
    /// Order-54 cover of `G20` from the closed-form product rule.
    R54,
    /// Order-54 cover of `G20` from its four-generator presentation.
    RP54,
    /// Extraspecial group of order 27 and exponent 3.
    G39,
    /// One-step extension of `G39` of order 81.
    G81,
    /// Variant of `G81` with `ξ₁³ = z^a`, `ξ₃³ = z^b`.
    G81Var { a: u8, b: u8 },
    /// Order-243 extension of `G81`.
    G243,
    /// Double cover presentation of `S_n`, `3 ≤ n ≤ 5`.
    TPrime { n: u8 },
}

impl CatalogueKey {
    /// Every key with a fixed parameter choice, in display order.
    pub fn all() -> Vec<CatalogueKey> {
        let mut v = vec![Self::G20, Self::R54, Self::RP54, Self::G39, Self::G81];
        for a in 0..3 {
            for b in 0..3 {
                v.push(Self::G81Var { a, b });
            }
        }
        v.push(Self::G243);
        for n in 3..=5 {
            v.push(Self::TPrime { n });
        }
        v
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::G81Var { a, b } if a > 2 || b > 2 => Err(Error::ParamOutOfRange(format!(
                "G81VAR parameters must lie in 0..=2, got ({a},{b})"
            ))),
            Self::TPrime { n } if !(3..=5).contains(&n) => Err(Error::ParamOutOfRange(format!(
                "TPRIME requires 3 ≤ n ≤ 5, got {n}"
            ))),
            _ => Ok(()),
        }
    }

    /// Documented order of the group.
    pub fn expected_order(&self) -> usize {
        match *self {
            Self::G20 => 18,
            Self::R54 | Self::RP54 => 54,
            Self::G39 => 27,
            Self::G81 | Self::G81Var { .. } => 81,
            Self::G243 => 243,
            // n = 3 has no (ηᵢηₖ)² relators, so ζ splits off: C2 × S3
            Self::TPrime { n } => 2 * (1..=n as usize).product::<usize>(),
        }
    }

    pub fn has_normal_form(&self) -> bool {
        !matches!(self, Self::RP54 | Self::TPrime { .. })
    }

    /// Moduli of the normal-form parameters in written order.
    pub fn normal_form_space(&self) -> Option<MixedRadix> {
        let m = match self {
            Self::G20 => vec![3, 3, 2],
            Self::R54 => vec![3, 3, 3, 2],
            Self::G39 => vec![3, 3, 3],
            Self::G81 | Self::G81Var { .. } => vec![3; 4],
            Self::G243 => vec![3; 5],
            Self::RP54 | Self::TPrime { .. } => return None,
        };
        Some(MixedRadix::new(m))
    }

    fn collector(&self) -> Option<Collector> {
        match *self {
            Self::G39 => Some(g39_collector()),
            Self::G81 => Some(g81_collector(0, 0)),
            Self::G81Var { a, b } => Some(g81_collector(a as u32, b as u32)),
            Self::G243 => Some(g243_collector()),
            _ => None,
        }
    }
}

impl fmt::Display for CatalogueKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::G20 => write!(f, "G20"),
            Self::R54 => write!(f, "R54"),
            Self::RP54 => write!(f, "RP54"),
            Self::G39 => write!(f, "G39"),
            Self::G81 => write!(f, "G81"),
            Self::G81Var { a, b } => write!(f, "G81VAR({a},{b})"),
            Self::G243 => write!(f, "G243"),
            Self::TPrime { n } => write!(f, "TPRIME({n})"),
        }
    }
}

impl Serialize for CatalogueKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for CatalogueKey {
    type Err = Error;

    /// Accepts `G20`, `G81VAR(1,2)`, `TPRIME(4)` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_uppercase();
        let (head, args) = match t.find('(') {
            Some(i) if t.ends_with(')') => (&t[..i], Some(&t[i + 1..t.len() - 1])),
            Some(_) => return Err(Error::UnknownKey(s.into())),
            None => (t.as_str(), None),
        };
        let nums = |a: &str| -> Result<Vec<u8>> {
            a.split(',')
                .map(|x| x.parse::<u8>().map_err(|_| Error::ParamOutOfRange(format!("bad parameter `{x}` in `{s}`"))))
                .collect()
        };
        let key = match (head, args) {
            ("G20", None) => Self::G20,
            ("R54", None) => Self::R54,
            ("RP54", None) => Self::RP54,
            ("G39", None) => Self::G39,
            ("G81", None) => Self::G81,
            ("G243", None) => Self::G243,
            ("G81VAR", Some(a)) => match nums(a)?.as_slice() {
                [a, b] => Self::G81Var { a: *a, b: *b },
                _ => return Err(Error::ParamOutOfRange(format!("G81VAR takes two parameters: `{s}`"))),
            },
            ("TPRIME", Some(a)) => match nums(a)?.as_slice() {
                [n] => Self::TPrime { n: *n },
                _ => return Err(Error::ParamOutOfRange(format!("TPRIME takes one parameter: `{s}`"))),
            },
            _ => return Err(Error::UnknownKey(s.into())),
        };
        key.validate()?;
        Ok(key)
    }
}

/// A parameter tuple of a catalogue normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormTuple {
    pub key: CatalogueKey,
    pub params: Vec<u32>,
}

impl NormalFormTuple {
    pub fn new(key: CatalogueKey, params: Vec<u32>) -> Result<Self> {
        let space = key
            .normal_form_space()
            .ok_or_else(|| Error::NoNormalFormRule(key.to_string()))?;
        space.check(&params)?;
        Ok(Self { key, params })
    }

    pub fn index(&self) -> usize {
        self.key.normal_form_space().expect("validated").encode(&self.params)
    }
}

impl fmt::Display for NormalFormTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&MixedRadix::render(&self.params))
    }
}

fn raw_product(key: CatalogueKey, t: &[u32], u: &[u32]) -> Vec<u32> {
    match key {
        CatalogueKey::G20 => dihedral_heisenberg_product(false, t, u),
        CatalogueKey::R54 => dihedral_heisenberg_product(true, t, u),
        _ => key.collector().expect("normal-form key").product(t, u),
    }
}

/// Normal form of the product `t1 · t2`.
pub fn product_normal_form(
    key: CatalogueKey,
    t1: &NormalFormTuple,
    t2: &NormalFormTuple,
) -> Result<NormalFormTuple> {
    key.validate()?;
    let space = key
        .normal_form_space()
        .ok_or_else(|| Error::NoNormalFormRule(key.to_string()))?;
    if t1.key != key || t2.key != key {
        return Err(Error::InvalidTuple("tuple belongs to a different catalogue group".into()));
    }
    space.check(&t1.params)?;
    space.check(&t2.params)?;
    Ok(NormalFormTuple {
        key,
        params: raw_product(key, &t1.params, &t2.params),
    })
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn g(i: usize) -> Word {
    Word::gen(i)
}

fn pw(i: usize, k: i64) -> Word {
    Word::power(i, k)
}

/// Defining presentation of a catalogue group.
pub fn presentation(key: CatalogueKey) -> Result<Presentation> {
    key.validate()?;
    let rel = Word::relation;
    let comm = |a: &Word, b: &Word| Word::commutator(a, b);
    let id = Word::identity();
    match key {
        CatalogueKey::G20 => {
            // a² = b² = c² = (abc)² = (ab)³ = (ac)³ = 1
            let (a, b, c) = (0, 1, 2);
            Presentation::new(
                names(&["a", "b", "c"]),
                vec![
                    pw(a, 2),
                    pw(b, 2),
                    pw(c, 2),
                    (g(a) * g(b) * g(c)).pow(2),
                    (g(a) * g(b)).pow(3),
                    (g(a) * g(c)).pow(3),
                ],
                vec![],
            )
        }
        CatalogueKey::R54 => {
            let (z, x1, x2, w) = (0, 1, 2, 3);
            Presentation::new(
                names(&["z12", "xi1", "xi2", "w"]),
                vec![
                    pw(x1, 3),
                    pw(x2, 3),
                    pw(z, 3),
                    pw(w, 2),
                    // ξ₂ξ₁ = z⁻¹ξ₁ξ₂
                    rel(&(g(x2) * g(x1)), &(pw(z, -1) * g(x1) * g(x2))),
                    // wξᵢw⁻¹ = ξᵢ⁻¹
                    rel(&(g(w) * g(x1) * pw(w, -1)), &pw(x1, -1)),
                    rel(&(g(w) * g(x2) * pw(w, -1)), &pw(x2, -1)),
                ],
                vec![z],
            )
        }
        CatalogueKey::RP54 => {
            let (e1, e2, e3, zeta) = (0, 1, 2, 3);
            Presentation::new(
                names(&["eta1", "eta2", "eta3", "zeta"]),
                vec![
                    pw(e1, 2),
                    pw(e2, 2),
                    pw(e3, 2),
                    pw(zeta, 3),
                    rel(&(g(e1) * g(e2) * g(e3)).pow(2), &g(zeta)),
                    (g(e1) * g(e2)).pow(3),
                    (g(e1) * g(e3)).pow(3),
                ],
                vec![zeta],
            )
        }
        CatalogueKey::G39 => {
            // a³ = b³ = (ab)³ = (a⁻¹b)³ = 1
            let (a, b) = (0, 1);
            Presentation::new(
                names(&["a", "b"]),
                vec![
                    pw(a, 3),
                    pw(b, 3),
                    (g(a) * g(b)).pow(3),
                    (pw(a, -1) * g(b)).pow(3),
                ],
                vec![],
            )
        }
        CatalogueKey::G81 | CatalogueKey::G81Var { .. } => {
            let (pa, pb) = match key {
                CatalogueKey::G81Var { a, b } => (a as i64, b as i64),
                _ => (0, 0),
            };
            let (x1, x2, x3, z) = (0, 1, 2, 3);
            Presentation::new(
                names(&["xi1", "xi2", "xi3", "z12"]),
                vec![
                    rel(&pw(x1, 3), &pw(z, pa)),
                    pw(x2, 3),
                    rel(&pw(x3, 3), &pw(z, pb)),
                    pw(z, 3),
                    rel(&g(z), &comm(&g(x1), &g(x2))),
                    rel(&g(x2), &comm(&g(x1), &g(x3))),
                    comm(&g(x2), &g(x3)),
                ],
                vec![z],
            )
        }
        CatalogueKey::G243 => {
            let (e1, e2, e3, z12, z23) = (0, 1, 2, 3, 4);
            let conj = |a: i64, x: Word| pw(e3, a) * x * pw(e3, -a);
            Presentation::new(
                names(&["eta1", "eta2", "eta3", "z12", "z23"]),
                vec![
                    pw(e1, 3),
                    pw(e2, 3),
                    pw(e3, 3),
                    pw(z12, 3),
                    pw(z23, 3),
                    rel(&(g(e2) * g(e1)), &(pw(z12, -1) * g(e1) * g(e2))),
                    rel(&conj(1, g(e1)), &(g(z12) * g(e1) * pw(e2, 2))),
                    rel(&conj(1, pw(e1, 2)), &(pw(e1, 2) * g(e2))),
                    rel(&conj(2, g(e1)), &(pw(z12, 2) * g(z23) * g(e1) * g(e2))),
                    rel(&conj(2, pw(e1, 2)), &(pw(z23, 2) * pw(e1, 2) * pw(e2, 2))),
                    rel(&conj(1, g(e2)), &(pw(z23, 2) * g(e2))),
                    rel(&conj(1, pw(e2, 2)), &(g(z23) * pw(e2, 2))),
                    rel(&conj(2, g(e2)), &(g(z23) * g(e2))),
                    rel(&conj(2, pw(e2, 2)), &(pw(z23, 2) * pw(e2, 2))),
                ],
                vec![z12, z23],
            )
        }
        CatalogueKey::TPrime { n } => {
            let k = n as usize - 1;
            let zeta = k;
            let mut gens: Vec<String> = (1..=k).map(|i| format!("eta{i}")).collect();
            gens.push("zeta".into());
            let mut rels = vec![pw(zeta, 2)];
            for i in 0..k {
                rels.push(pw(i, 2));
            }
            for i in 0..k.saturating_sub(1) {
                rels.push((g(i) * g(i + 1)).pow(3));
            }
            for i in 0..k {
                for j in i + 2..k {
                    rels.push(rel(&(g(i) * g(j)).pow(2), &g(zeta)));
                }
            }
            let _ = &id;
            Presentation::new(gens, rels, vec![zeta])
        }
    }
}

/// Generator word naming the element with the given normal-form tuple.
fn normal_form_word(key: CatalogueKey, p: &[u32]) -> Word {
    let e = |x: u32| x as i64;
    match key {
        CatalogueKey::G20 => {
            let (a, b, c) = (0, 1, 2);
            (g(a) * g(b)).pow(e(p[0])) * (g(c) * g(a)).pow(e(p[1])) * pw(a, e(p[2]))
        }
        CatalogueKey::R54 => pw(0, e(p[0])) * pw(1, e(p[1])) * pw(2, e(p[2])) * pw(3, e(p[3])),
        CatalogueKey::G39 => {
            let (a, b) = (0, 1);
            let c = g(b) * g(a) * pw(b, -1) * pw(a, -1);
            pw(b, e(p[0])) * c.pow(e(p[1])) * pw(a, e(p[2]))
        }
        CatalogueKey::G81 | CatalogueKey::G81Var { .. } => {
            pw(3, e(p[0])) * pw(0, e(p[1])) * pw(1, e(p[2])) * pw(2, e(p[3]))
        }
        CatalogueKey::G243 => {
            pw(3, e(p[0])) * pw(4, e(p[1])) * pw(0, e(p[2])) * pw(1, e(p[3])) * pw(2, e(p[4]))
        }
        CatalogueKey::RP54 | CatalogueKey::TPrime { .. } => unreachable!("no normal form"),
    }
}

/// Named elements of a normal-form group as tuples.
fn normal_form_generators(key: CatalogueKey) -> Vec<(&'static str, Vec<u32>)> {
    match key {
        CatalogueKey::G20 => vec![("x1", vec![1, 0, 0]), ("x2", vec![0, 1, 0]), ("a", vec![0, 0, 1])],
        CatalogueKey::R54 => vec![
            ("z12", vec![1, 0, 0, 0]),
            ("xi1", vec![0, 1, 0, 0]),
            ("xi2", vec![0, 0, 1, 0]),
            ("w", vec![0, 0, 0, 1]),
        ],
        CatalogueKey::G39 => vec![("x1", vec![1, 0, 0]), ("x2", vec![0, 1, 0]), ("x3", vec![0, 0, 1])],
        CatalogueKey::G81 | CatalogueKey::G81Var { .. } => vec![
            ("z12", vec![1, 0, 0, 0]),
            ("xi1", vec![0, 1, 0, 0]),
            ("xi2", vec![0, 0, 1, 0]),
            ("xi3", vec![0, 0, 0, 1]),
        ],
        CatalogueKey::G243 => vec![
            ("z12", vec![1, 0, 0, 0, 0]),
            ("z23", vec![0, 1, 0, 0, 0]),
            ("eta1", vec![0, 0, 1, 0, 0]),
            ("eta2", vec![0, 0, 0, 1, 0]),
            ("eta3", vec![0, 0, 0, 0, 1]),
        ],
        CatalogueKey::RP54 | CatalogueKey::TPrime { .. } => vec![],
    }
}

/// Table built directly from the normal-form product rule (axioms verified,
/// no cross-check).
pub fn normal_form_table(key: CatalogueKey) -> Result<GroupTable> {
    key.validate()?;
    let space = key
        .normal_form_space()
        .ok_or_else(|| Error::NoNormalFormRule(key.to_string()))?;
    let n = space.size();
    let tuples: Vec<Vec<u32>> = (0..n).map(|i| space.decode(i)).collect();
    let labels = tuples.iter().map(|t| MixedRadix::render(t)).collect();
    GroupTable::from_fn(n, |i, j| space.encode(&raw_product(key, &tuples[i], &tuples[j])), Some(labels))
}

/// Result of comparing the normal-form table with the coset-enumeration table.
#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub key: CatalogueKey,
    pub order: usize,
    pub coset_order: usize,
    pub products_compared: usize,
    /// `bijection[i]` is the coset-table element matched with tuple `i`.
    #[serde(skip)]
    pub bijection: Vec<usize>,
}

fn enumerate(key: CatalogueKey) -> Result<(Presentation, CosetTable)> {
    let p = presentation(key)?;
    let cap = coset_cap(10 * key.expected_order());
    let ct = enumerate_cosets(&p, cap)?;
    Ok((p, ct))
}

/// Compares every product of the normal-form table with the coset table
/// obtained from the presentation.
pub fn cross_check(key: CatalogueKey, nf: &GroupTable) -> Result<CrossCheck> {
    let space = key
        .normal_form_space()
        .ok_or_else(|| Error::NoNormalFormRule(key.to_string()))?;
    let (_, ct) = enumerate(key)?;
    let tc = ct.to_group_table()?;
    let mismatch = |detail: String| Error::CrossCheckMismatch {
        key: key.to_string(),
        detail,
    };
    if tc.order() != nf.order() {
        return Err(mismatch(format!(
            "normal form has {} elements, coset enumeration {}",
            nf.order(),
            tc.order()
        )));
    }
    let n = nf.order();
    let bijection: Vec<usize> = (0..n)
        .map(|i| ct.element(&normal_form_word(key, &space.decode(i))))
        .collect();
    let mut hit = vec![false; n];
    for (i, &b) in bijection.iter().enumerate() {
        if hit[b] {
            return Err(mismatch(format!("tuple {} collides with another tuple", nf.label(i))));
        }
        hit[b] = true;
    }
    for i in 0..n {
        for j in 0..n {
            if bijection[nf.mul(i, j)] != tc.mul(bijection[i], bijection[j]) {
                return Err(mismatch(format!("product {}·{} differs", nf.label(i), nf.label(j))));
            }
        }
    }
    Ok(CrossCheck {
        key,
        order: n,
        coset_order: tc.order(),
        products_compared: n * n,
        bijection,
    })
}

/// A catalogue group together with its named generators.
#[derive(Clone, Debug)]
pub struct CatalogueGroup {
    pub key: CatalogueKey,
    pub table: Arc<GroupTable>,
    generators: Vec<(String, usize)>,
}

impl CatalogueGroup {
    /// Element by generator name (`"xi1"`, `"z12"`, `"zeta"`, ...).
    pub fn element(&self, name: &str) -> Option<usize> {
        self.generators.iter().find(|(n, _)| n == name).map(|&(_, e)| e)
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    /// Element with the given normal-form parameters.
    pub fn tuple(&self, params: &[u32]) -> Result<usize> {
        Ok(NormalFormTuple::new(self.key, params.to_vec())?.index())
    }
}

/// Builds and fully verifies a catalogue group.
pub fn build_catalogue(key: CatalogueKey) -> Result<CatalogueGroup> {
    key.validate()?;
    if key.has_normal_form() {
        let table = normal_form_table(key)?;
        cross_check(key, &table)?;
        let space = key.normal_form_space().unwrap();
        let mut generators: Vec<(String, usize)> = normal_form_generators(key)
            .into_iter()
            .map(|(n, t)| (n.to_string(), space.encode(&t)))
            .collect();
        let find = |gens: &Vec<(String, usize)>, n: &str| gens.iter().find(|(m, _)| m == n).unwrap().1;
        match key {
            CatalogueKey::G20 => {
                // b = a·x₁, c = x₂·a
                let a = find(&generators, "a");
                let b = table.mul(a, find(&generators, "x1"));
                let c = table.mul(find(&generators, "x2"), a);
                generators.push(("b".into(), b));
                generators.push(("c".into(), c));
            }
            CatalogueKey::G39 => {
                generators.push(("a".into(), find(&generators, "x3")));
                generators.push(("b".into(), find(&generators, "x1")));
                let c = find(&generators, "x2");
                generators.push(("c".into(), c));
            }
            _ => {}
        }
        Ok(CatalogueGroup {
            key,
            table: Arc::new(table),
            generators,
        })
    } else {
        let (p, ct) = enumerate(key)?;
        let table = ct.to_group_table()?;
        let report = verify_axioms(&table);
        if !report.all_pass() {
            return Err(Error::NotAGroup(Box::new(report)));
        }
        let generators = p
            .generators()
            .iter()
            .enumerate()
            .map(|(i, name)| (name.clone(), ct.element(&Word::gen(i))))
            .collect();
        Ok(CatalogueGroup {
            key,
            table: Arc::new(table),
            generators,
        })
    }
}

/// Builds a catalogue group as a verified Cayley table.
pub fn build_named(key: CatalogueKey) -> Result<GroupTable> {
    Ok(Arc::unwrap_or_clone(build_catalogue(key)?.table))
}

/// The covering map from `src` onto `dst` for the catalogue pairs
/// `R54 → G20`, `RP54 → G20`, `G81 → G39` (and every variant) and
/// `G243 → G81`.
pub fn covering_map(src: &CatalogueGroup, dst: &CatalogueGroup) -> Result<Homomorphism> {
    use CatalogueKey::*;
    let drop_param = |i: usize| -> Result<Homomorphism> {
        let (ss, ds) = (src.key.normal_form_space().unwrap(), dst.key.normal_form_space().unwrap());
        let images = (0..src.table.order())
            .map(|x| {
                let mut t = ss.decode(x);
                t.remove(i);
                ds.encode(&t)
            })
            .collect();
        Homomorphism::new(src.table.clone(), dst.table.clone(), images)
    };
    match (src.key, dst.key) {
        (R54, G20) | (G81, G39) | (G81Var { .. }, G39) => drop_param(0),
        (G243, G81) => drop_param(1),
        (RP54, G20) => {
            let e = |n: &str| src.element(n).unwrap();
            let f = |n: &str| dst.element(n).unwrap();
            Homomorphism::from_generators(
                src.table.clone(),
                dst.table.clone(),
                &[
                    (e("eta1"), f("a")),
                    (e("eta2"), f("b")),
                    (e("eta3"), f("c")),
                    (e("zeta"), dst.table.identity()),
                ],
            )
        }
        (s, d) => Err(Error::InvalidHomomorphism(format!("no covering map {s} → {d} in the catalogue"))),
    }
}

/// `TPRIME(n) → S_n` sending `ηᵢ` to the transposition `(i i+1)` and `ζ` to 1.
pub fn tprime_to_symmetric(src: &CatalogueGroup, sn: Arc<GroupTable>) -> Result<Homomorphism> {
    let CatalogueKey::TPrime { n } = src.key else {
        return Err(Error::InvalidHomomorphism(format!("{} is not a TPRIME group", src.key)));
    };
    let n = n as usize;
    let mut gens = Vec::new();
    for i in 1..n {
        let mut perm: Vec<usize> = (1..=n).collect();
        perm.swap(i - 1, i);
        let label = format!("[{}]", perm.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
        let t = sn
            .find_label(&label)
            .ok_or_else(|| Error::InvalidHomomorphism(format!("target has no element {label}")))?;
        gens.push((src.element(&format!("eta{i}")).unwrap(), t));
    }
    gens.push((src.element("zeta").unwrap(), sn.identity()));
    Homomorphism::from_generators(src.table.clone(), sn, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_keys() {
        assert_eq!("g20".parse::<CatalogueKey>().unwrap(), CatalogueKey::G20);
        assert_eq!(
            "G81VAR(1, 2)".parse::<CatalogueKey>().unwrap(),
            CatalogueKey::G81Var { a: 1, b: 2 }
        );
        assert_eq!("TPRIME(4)".parse::<CatalogueKey>().unwrap(), CatalogueKey::TPrime { n: 4 });
        assert!("TPRIME(6)".parse::<CatalogueKey>().is_err());
        assert!("G81VAR(3,0)".parse::<CatalogueKey>().is_err());
        assert!("G99".parse::<CatalogueKey>().is_err());
        for k in CatalogueKey::all() {
            assert_eq!(k.to_string().parse::<CatalogueKey>().unwrap(), k);
        }
    }

    #[test]
    fn r54_product_rule() {
        let k = CatalogueKey::R54;
        let t = |p: Vec<u32>| NormalFormTuple::new(k, p).unwrap();
        let r = product_normal_form(k, &t(vec![0, 1, 1, 0]), &t(vec![0, 1, 0, 0])).unwrap();
        assert_eq!(r.params, vec![2, 2, 1, 0]);
        let r = product_normal_form(k, &t(vec![0, 0, 0, 0]), &t(vec![2, 1, 2, 1])).unwrap();
        assert_eq!(r.params, vec![2, 1, 2, 1]);
    }

    #[test]
    fn g81_product_rule() {
        let k = CatalogueKey::G81;
        let t = |p: Vec<u32>| NormalFormTuple::new(k, p).unwrap();
        let r = product_normal_form(k, &t(vec![0, 0, 0, 1]), &t(vec![0, 1, 0, 0])).unwrap();
        assert_eq!(r.params, vec![1, 1, 2, 1]);
    }

    #[test]
    fn product_errors() {
        let bad = NormalFormTuple {
            key: CatalogueKey::R54,
            params: vec![0, 0, 0, 5],
        };
        let ok = NormalFormTuple::new(CatalogueKey::R54, vec![0, 0, 0, 0]).unwrap();
        assert!(product_normal_form(CatalogueKey::R54, &bad, &ok).is_err());
        assert!(NormalFormTuple::new(CatalogueKey::RP54, vec![]).is_err());
        assert!(product_normal_form(CatalogueKey::G39, &ok, &ok).is_err());
    }

    #[test]
    fn small_builds() {
        assert_eq!(build_named(CatalogueKey::G20).unwrap().order(), 18);
        assert_eq!(build_named(CatalogueKey::G39).unwrap().order(), 27);
        assert_eq!(build_named(CatalogueKey::TPrime { n: 3 }).unwrap().order(), 12);
    }

    #[test]
    fn covering_maps() {
        let g20 = build_catalogue(CatalogueKey::G20).unwrap();
        for k in [CatalogueKey::R54, CatalogueKey::RP54] {
            let h = build_catalogue(k).unwrap();
            let d = covering_map(&h, &g20).unwrap();
            assert!(d.is_surjective());
            assert_eq!(d.kernel().order(), 3);
        }
        let t4 = build_catalogue(CatalogueKey::TPrime { n: 4 }).unwrap();
        let s4 = Arc::new(crate::group::products::symmetric(4));
        let p = tprime_to_symmetric(&t4, s4).unwrap();
        assert!(p.is_surjective());
        assert_eq!(p.kernel().order(), 2);
    }
}
