//! Normalized 2-cocycles with trivial coefficients `ℤ_m`, `H²(G, ℤ_m)` and
//! the Schur multiplier.
//!
//! A normalized cocycle is determined by its values `f(u, s)` for `s` in a
//! generating set `S`: along a spanning tree of the Cayley graph,
//! `f(x, ys) = f(x, y) + f(xy, s) − f(y, s)`. The cocycle identity then
//! reduces to one linear equation per element `x` and non-tree edge `(y, s)`.
//! The systems are solved separately over each `ℤ/p^k` with `p^k ‖ m`.

use serde::Serialize;

use crate::cohomology::modular::{inv_mod, local_snf, Echelon, LocalRing, LocalSnf};
use crate::error::{Error, Result};
use crate::group::table::GroupTable;
use crate::structure::abelian::{invariant_factors_from_primary, prime_factors};
use crate::structure::{abelianization, small_generating_set};

/// Default group-order cap for cohomology computations.
pub const DEFAULT_SIZE_CAP: usize = 100;

#[derive(Clone, Copy, Debug)]
pub struct CohomologyOptions {
    pub cap: usize,
    pub force: bool,
}

impl Default for CohomologyOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_SIZE_CAP,
            force: false,
        }
    }
}

impl CohomologyOptions {
    pub fn forced() -> Self {
        Self {
            force: true,
            ..Self::default()
        }
    }

    fn check(&self, g: &GroupTable) -> Result<()> {
        if g.order() > self.cap && !self.force {
            return Err(Error::SizeCap {
                order: g.order(),
                cap: self.cap,
            });
        }
        Ok(())
    }
}

/// A function `G × G → ℤ_m`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleTable {
    n: usize,
    m: u64,
    values: Vec<u64>,
}

impl CocycleTable {
    pub fn new(n: usize, m: u64, values: Vec<u64>) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(format!("modulus must be at least 2, got {m}")));
        }
        if values.len() != n * n {
            return Err(Error::InvalidCocycle(format!("expected {} values, got {}", n * n, values.len())));
        }
        if let Some(v) = values.iter().find(|&&v| v >= m) {
            return Err(Error::InvalidCocycle(format!("value {v} not reduced mod {m}")));
        }
        Ok(Self { n, m, values })
    }

    pub fn zero(n: usize, m: u64) -> Self {
        Self {
            n,
            m,
            values: vec![0; n * n],
        }
    }

    pub fn from_fn(n: usize, m: u64, f: impl Fn(usize, usize) -> u64) -> Self {
        let mut values = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                values.push(f(x, y) % m);
            }
        }
        Self { n, m, values }
    }

    /// `δt(x, y) = t(x) + t(y) − t(xy)`.
    pub fn coboundary(g: &GroupTable, m: u64, t: &[u64]) -> Self {
        Self::from_fn(g.order(), m, |x, y| (t[x] % m + t[y] % m + m - t[g.mul(x, y)] % m) % m)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u64 {
        self.values[x * self.n + y]
    }

    pub fn add(&self, other: &CocycleTable) -> Result<CocycleTable> {
        if self.n != other.n || self.m != other.m {
            return Err(Error::InvalidCocycle("adding cocycles of different shape".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| (a + b) % self.m).collect();
        Ok(Self { values, ..*self })
    }

    pub fn scale(&self, c: u64) -> CocycleTable {
        let values = self.values.iter().map(|&a| a * (c % self.m) % self.m).collect();
        Self { values, ..*self }
    }

    pub fn is_normalized(&self, g: &GroupTable) -> bool {
        let e = g.identity();
        (0..self.n).all(|x| self.get(e, x) == 0 && self.get(x, e) == 0)
    }

    /// First triple violating `f(x,y) + f(xy,z) = f(y,z) + f(x,yz)`.
    pub fn cocycle_violation(&self, g: &GroupTable) -> Option<(usize, usize, usize)> {
        let m = self.m;
        for x in 0..self.n {
            for y in 0..self.n {
                let xy = g.mul(x, y);
                let fxy = self.get(x, y);
                for z in 0..self.n {
                    let lhs = (fxy + self.get(xy, z)) % m;
                    let rhs = (self.get(y, z) + self.get(x, g.mul(y, z))) % m;
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_cocycle(&self, g: &GroupTable) -> bool {
        self.cocycle_violation(g).is_none()
    }

    /// Checks shape, normalization and the cocycle identity.
    pub fn validate(&self, g: &GroupTable) -> Result<()> {
        if self.n != g.order() {
            return Err(Error::InvalidCocycle(format!(
                "cocycle on {} elements for a group of order {}",
                self.n,
                g.order()
            )));
        }
        if !self.is_normalized(g) {
            return Err(Error::InvalidCocycle("not normalized".into()));
        }
        if let Some((x, y, z)) = self.cocycle_violation(g) {
            return Err(Error::InvalidCocycle(format!(
                "cocycle identity fails at ({}, {}, {})",
                g.label(x),
                g.label(y),
                g.label(z)
            )));
        }
        Ok(())
    }
}

/// A finite abelian group `⊕ ℤ/dᵢ` with one representative per factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianStructure<T> {
    pub invariants: Vec<u64>,
    pub generators: Vec<T>,
}

impl<T> AbelianStructure<T> {
    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }
}

/// Spanning tree of the right Cayley graph for a generating set.
struct Tree {
    gens: Vec<usize>,
    /// BFS order starting at the identity.
    order: Vec<usize>,
    /// `(parent, generator index)`; unused for the identity.
    parent: Vec<(usize, usize)>,
    /// `(y, generator index)` with `y·s` reached by a different tree edge.
    non_tree: Vec<(usize, usize)>,
    /// Position of each non-identity element among the variables.
    pos: Vec<usize>,
}

impl Tree {
    fn new(g: &GroupTable) -> Self {
        let gens = small_generating_set(g);
        let n = g.order();
        let mut parent = vec![(usize::MAX, usize::MAX); n];
        let mut seen = vec![false; n];
        let mut order = vec![g.identity()];
        seen[g.identity()] = true;
        let mut head = 0;
        while head < order.len() {
            let y = order[head];
            head += 1;
            for (j, &s) in gens.iter().enumerate() {
                let ys = g.mul(y, s);
                if !seen[ys] {
                    seen[ys] = true;
                    parent[ys] = (y, j);
                    order.push(ys);
                }
            }
        }
        let mut non_tree = Vec::new();
        for &y in &order {
            for (j, &s) in gens.iter().enumerate() {
                if parent[g.mul(y, s)] != (y, j) {
                    non_tree.push((y, j));
                }
            }
        }
        let mut pos = vec![usize::MAX; n];
        let mut k = 0;
        for (x, p) in pos.iter_mut().enumerate() {
            if x != g.identity() {
                *p = k;
                k += 1;
            }
        }
        Self {
            gens,
            order,
            parent,
            non_tree,
            pos,
        }
    }

    fn vars(&self) -> usize {
        self.order.len().saturating_sub(1) * self.gens.len()
    }

    fn var(&self, u: usize, j: usize) -> Option<usize> {
        (self.pos[u] != usize::MAX).then(|| self.pos[u] * self.gens.len() + j)
    }
}

/// Solution data of the cocycle system over one `ℤ/p^k`.
struct PrimePart {
    ring: LocalRing,
    snf: LocalSnf,
    /// Kernel generators (variable vectors) with order exponents.
    kernel: Vec<(Vec<u64>, u32)>,
}

impl PrimePart {
    /// Coordinates of a cocycle (variable vector) in the kernel basis.
    fn coords(&self, v: &[u64]) -> Vec<u64> {
        let r = self.ring;
        let w = self.snf.apply_inverse(v);
        let mut out = Vec::with_capacity(self.kernel.len());
        let mut ki = 0;
        for (i, &a) in self.snf.diag_val.iter().enumerate() {
            if a == 0 {
                debug_assert_eq!(w[i], 0, "vector is not in the kernel");
                continue;
            }
            let step = r.p.pow(r.k - a);
            debug_assert_eq!(w[i] % step, 0, "vector is not in the kernel");
            out.push((w[i] / step) % r.p.pow(a));
            ki += 1;
        }
        debug_assert_eq!(ki, self.kernel.len());
        out
    }
}

fn prime_powers(m: u64) -> Vec<LocalRing> {
    prime_factors(m).into_iter().map(|(p, k)| LocalRing::new(p, k)).collect()
}

/// CRT idempotent of the `q`-component of `ℤ_m`.
fn idempotent(m: u64, q: u64) -> u64 {
    let c = m / q;
    if c == 1 {
        return 1;
    }
    c * inv_mod(c % q, q) % m
}

/// The cocycle system of `g` in the variables `f(u, s)`.
struct CocycleSystem<'a> {
    g: &'a GroupTable,
    tree: Tree,
}

impl<'a> CocycleSystem<'a> {
    fn new(g: &'a GroupTable) -> Self {
        Self { g, tree: Tree::new(g) }
    }

    /// Calls `emit` with every equation row (integer coefficients).
    fn equations(&self, mut emit: impl FnMut(&[i64])) {
        let g = self.g;
        let t = &self.tree;
        let nv = t.vars();
        let n = g.order();
        // rows of f_row: f(x, y) as a combination of variables, y-major
        let mut f_row = vec![0i64; n * nv];
        let mut eq = vec![0i64; nv];
        for x in 0..n {
            let e = g.identity();
            f_row[e * nv..(e + 1) * nv].iter_mut().for_each(|c| *c = 0);
            for &y in t.order.iter().skip(1) {
                let (p, j) = t.parent[y];
                f_row.copy_within(p * nv..(p + 1) * nv, y * nv);
                if let Some(v) = t.var(g.mul(x, p), j) {
                    f_row[y * nv + v] += 1;
                }
                if let Some(v) = t.var(p, j) {
                    f_row[y * nv + v] -= 1;
                }
            }
            for &(y, j) in &t.non_tree {
                let ys = g.mul(y, t.gens[j]);
                let (fy, fys) = (&f_row[y * nv..(y + 1) * nv], &f_row[ys * nv..(ys + 1) * nv]);
                for (e, (a, b)) in eq.iter_mut().zip(fy.iter().zip(fys)) {
                    *e = a - b;
                }
                if let Some(v) = t.var(g.mul(x, y), j) {
                    eq[v] += 1;
                }
                if let Some(v) = t.var(y, j) {
                    eq[v] -= 1;
                }
                if eq.iter().any(|&c| c != 0) {
                    emit(&eq);
                }
            }
        }
    }

    /// Variable vector of a full table.
    fn restrict(&self, f: &CocycleTable, ring: LocalRing) -> Vec<u64> {
        let t = &self.tree;
        let mut v = vec![0; t.vars()];
        for u in 0..self.g.order() {
            for (j, &s) in t.gens.iter().enumerate() {
                if let Some(i) = t.var(u, j) {
                    v[i] = f.get(u, s) % ring.q;
                }
            }
        }
        v
    }

    /// Full table of the cochain with the given variable values (over `ℤ_m`).
    fn expand(&self, v: &[u64], m: u64) -> CocycleTable {
        let g = self.g;
        let t = &self.tree;
        let n = g.order();
        let val = |u: usize, j: usize| t.var(u, j).map_or(0, |i| v[i] % m);
        let mut values = vec![0u64; n * n];
        for x in 0..n {
            for &y in t.order.iter().skip(1) {
                let (p, j) = t.parent[y];
                let f = values[x * n + p] + val(g.mul(x, p), j) + m - val(p, j);
                values[x * n + y] = f % m;
            }
        }
        CocycleTable { n, m, values }
    }

    fn solve(&self, ring: LocalRing) -> PrimePart {
        let nv = self.tree.vars();
        let mut ech = Echelon::new(ring, nv);
        self.equations(|row| ech.insert(row.iter().map(|&c| ring.reduce(c)).collect()));
        let snf = local_snf(ring, ech.rows(), nv);
        let kernel = snf.kernel();
        PrimePart { ring, snf, kernel }
    }
}

/// Generators of one primary component with their order exponents.
type LocalPart<T> = (LocalRing, Vec<(T, u32)>);

/// `Hom(G, ℤ_m)` with each generator given by its values on all elements.
pub fn hom_to_cyclic(g: &GroupTable, m: u64) -> Result<AbelianStructure<Vec<u64>>> {
    if m < 2 {
        return Err(Error::InvalidModulus(format!("modulus must be at least 2, got {m}")));
    }
    let tree = Tree::new(g);
    let k = tree.gens.len();
    let mut parts: Vec<LocalPart<Vec<u64>>> = Vec::new();
    for ring in prime_powers(m) {
        let mut ech = Echelon::new(ring, k);
        // χ along the tree as a combination of χ(s)
        let mut chi: Vec<Vec<i64>> = vec![vec![0; k]; g.order()];
        for &y in tree.order.iter().skip(1) {
            let (p, j) = tree.parent[y];
            let mut row = chi[p].clone();
            row[j] += 1;
            chi[y] = row;
        }
        for &(y, j) in &tree.non_tree {
            let ys = g.mul(y, tree.gens[j]);
            let row: Vec<u64> = (0..k)
                .map(|i| ring.reduce(chi[y][i] + i64::from(i == j) - chi[ys][i]))
                .collect();
            ech.insert(row);
        }
        let snf = local_snf(ring, ech.rows(), k);
        let ker = snf.kernel();
        // expand to full value tables mod q
        let gens = ker
            .into_iter()
            .map(|(v, e)| {
                let vals = chi
                    .iter()
                    .map(|row| row.iter().zip(&v).fold(0i64, |acc, (&c, &x)| acc + c * x as i64))
                    .map(|x| ring.reduce(x))
                    .collect();
                (vals, e)
            })
            .collect();
        parts.push((ring, gens));
    }
    let (invariants, generators) = combine(m, &parts, |vals: &Vec<u64>, e| vals.iter().map(|&x| x * e % m).collect());
    Ok(AbelianStructure {
        invariants,
        generators,
    })
}

/// Merges per-prime generators of order `p^e` into invariant-factor
/// generators; `lift` embeds a `ℤ/q` object into `ℤ_m` via the idempotent.
fn combine<T, L>(
    m: u64,
    parts: &[(LocalRing, Vec<(T, u32)>)],
    lift: L,
) -> (Vec<u64>, Vec<T>)
where
    T: Clone + Summable,
    L: Fn(&T, u64) -> T,
{
    let mut primary = Vec::new();
    let mut sorted_parts: Vec<Vec<(T, u32)>> = Vec::new();
    for (ring, gens) in parts {
        let mut g: Vec<(T, u32)> = gens.iter().filter(|(_, e)| *e > 0).cloned().collect();
        g.sort_by_key(|(_, e)| *e);
        primary.push((ring.p, g.iter().map(|(_, e)| *e).collect::<Vec<u32>>()));
        let e = idempotent(m, ring.q);
        sorted_parts.push(g.into_iter().map(|(t, ex)| (lift(&t, e), ex)).collect());
    }
    let invariants = invariant_factors_from_primary(&primary);
    let len = invariants.len();
    let mut generators: Vec<Option<T>> = vec![None; len];
    for part in &sorted_parts {
        let off = len - part.len();
        for (i, (t, _)) in part.iter().enumerate() {
            generators[off + i] = Some(match generators[off + i].take() {
                None => t.clone(),
                Some(acc) => acc.sum(t, m),
            });
        }
    }
    (invariants, generators.into_iter().map(|g| g.expect("every factor has a generator")).collect())
}

trait Summable {
    fn sum(&self, other: &Self, m: u64) -> Self;
}

impl Summable for Vec<u64> {
    fn sum(&self, other: &Self, m: u64) -> Self {
        self.iter().zip(other).map(|(a, b)| (a + b) % m).collect()
    }
}

impl Summable for CocycleTable {
    fn sum(&self, other: &Self, _m: u64) -> Self {
        self.add(other).expect("same shape")
    }
}

/// Bockstein image of `χ ∈ Hom(G, ℤ_m)`:
/// `δχ(x, y) = (λ(x) + λ(y) − λ(xy)) / m` with `λ` the lift to `[0, m)`.
pub fn bockstein(g: &GroupTable, m: u64, chi: &[u64]) -> CocycleTable {
    CocycleTable::from_fn(g.order(), m, |x, y| {
        let w = (chi[x] % m + chi[y] % m) as i64 - (chi[g.mul(x, y)] % m) as i64;
        (w.div_euclid(m as i64)).rem_euclid(m as i64) as u64
    })
}

/// Result of the subquotient computation shared by `H²` and `M(G)`.
struct Quotient {
    h2: AbelianStructure<CocycleTable>,
}

fn subquotient(
    g: &GroupTable,
    m: u64,
    sys: &CocycleSystem<'_>,
    extra: &[CocycleTable],
) -> Quotient {
    let n = g.order();
    let mut parts: Vec<LocalPart<CocycleTable>> = Vec::new();
    for ring in prime_powers(m) {
        let part = sys.solve(ring);
        let r = part.kernel.len();
        // relations: coboundaries of point masses, extra cocycles, orders
        let mut relations: Vec<Vec<u64>> = Vec::new();
        for u in 0..n {
            if u == g.identity() {
                continue;
            }
            let mut t = vec![0u64; n];
            t[u] = 1;
            let cb = CocycleTable::coboundary(g, ring.q, &t);
            relations.push(part.coords(&sys.restrict(&cb, ring)));
        }
        for f in extra {
            relations.push(part.coords(&sys.restrict(f, ring)));
        }
        for (i, &(_, e)) in part.kernel.iter().enumerate() {
            let mut row = vec![0u64; r];
            row[i] = ring.p.pow(e) % ring.q;
            relations.push(row);
        }
        let mut ech = Echelon::new(ring, r);
        for row in relations {
            ech.insert(row);
        }
        let snf2 = local_snf(ring, ech.rows(), r);
        let mut gens = Vec::new();
        for (j, &b) in snf2.diag_val.iter().enumerate() {
            if b == 0 {
                continue;
            }
            // generator: row j of V2⁻¹ in kernel coordinates
            let coeff = &snf2.v_inv[j];
            let mut v = vec![0u64; sys.tree.vars()];
            for (c, (kv, _)) in coeff.iter().zip(&part.kernel) {
                if *c == 0 {
                    continue;
                }
                for (x, &y) in v.iter_mut().zip(kv) {
                    *x = ring.add(*x, ring.mul(*c, y));
                }
            }
            gens.push((sys.expand(&v, ring.q), b));
        }
        parts.push((ring, gens));
    }
    // embed each ℤ/q part into ℤ_m through its idempotent
    let (invariants, generators) = combine(m, &parts, |f: &CocycleTable, e| {
        CocycleTable::from_fn(f.n, m, |x, y| f.get(x, y) * e % m)
    });
    Quotient {
        h2: AbelianStructure {
            invariants,
            generators,
        },
    }
}

/// `H²(G, ℤ_m)` for the trivial action, with generator cocycles.
pub fn h2_trivial_coefficients(
    g: &GroupTable,
    m: u64,
    opts: CohomologyOptions,
) -> Result<AbelianStructure<CocycleTable>> {
    if m < 2 {
        return Err(Error::InvalidModulus(format!("modulus must be at least 2, got {m}")));
    }
    opts.check(g)?;
    let sys = CocycleSystem::new(g);
    let q = subquotient(g, m, &sys, &[]);
    verify_generators(g, &q.h2)?;
    Ok(q.h2)
}

fn verify_generators(g: &GroupTable, s: &AbelianStructure<CocycleTable>) -> Result<()> {
    for f in &s.generators {
        f.validate(g)?;
    }
    Ok(())
}

/// Multiplier report written by the command line front end.
#[derive(Clone, Debug, Serialize)]
pub struct MultiplierReport {
    pub group: String,
    pub coeff_modulus: u64,
    pub h2_invariants: Vec<u64>,
    pub hom_size: u64,
    pub multiplier_invariants: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator_cocycles: Option<String>,
    #[serde(skip)]
    pub multiplier: AbelianStructure<CocycleTable>,
}

fn check_modulus(g: &GroupTable, m: u64) -> Result<()> {
    if m < 2 {
        if g.order() == 1 {
            return Ok(());
        }
        return Err(Error::InvalidModulus(format!("modulus must be at least 2, got {m}")));
    }
    let ab_exp = abelianization(g).last().copied().unwrap_or(1);
    if !m.is_multiple_of(ab_exp) {
        return Err(Error::InvalidModulus(format!(
            "modulus {m} is not a multiple of the abelianization exponent {ab_exp}"
        )));
    }
    Ok(())
}

/// `H²(G, ℤ_m)`, `|Hom(G, ℤ_m)|` and `M(G) = H²(G, ℤ_m) / δ Hom(G, ℤ_m)`.
pub fn multiplier_report(
    g: &GroupTable,
    name: &str,
    m: Option<u64>,
    opts: CohomologyOptions,
) -> Result<MultiplierReport> {
    opts.check(g)?;
    let m = m.unwrap_or(g.order() as u64);
    check_modulus(g, m)?;
    if g.order() == 1 {
        return Ok(MultiplierReport {
            group: name.into(),
            coeff_modulus: m,
            h2_invariants: vec![],
            hom_size: 1,
            multiplier_invariants: vec![],
            generator_cocycles: None,
            multiplier: AbelianStructure {
                invariants: vec![],
                generators: vec![],
            },
        });
    }
    let sys = CocycleSystem::new(g);
    let h2 = subquotient(g, m, &sys, &[]);
    let hom = hom_to_cyclic(g, m)?;
    let images: Vec<CocycleTable> = hom.generators.iter().map(|chi| bockstein(g, m, chi)).collect();
    let mq = subquotient(g, m, &sys, &images);
    verify_generators(g, &h2.h2)?;
    verify_generators(g, &mq.h2)?;
    Ok(MultiplierReport {
        group: name.into(),
        coeff_modulus: m,
        h2_invariants: h2.h2.invariants,
        hom_size: hom.order(),
        multiplier_invariants: mq.h2.invariants.clone(),
        generator_cocycles: None,
        multiplier: mq.h2,
    })
}

/// Schur multiplier `M(G)` with representative cocycles over `ℤ_m`
/// (`m = |G|` by default).
pub fn schur_multiplier(
    g: &GroupTable,
    m: Option<u64>,
    opts: CohomologyOptions,
) -> Result<AbelianStructure<CocycleTable>> {
    Ok(multiplier_report(g, "", m, opts)?.multiplier)
}
