//! Central extensions: efficiency, one-step extensions through commuting
//! pairs, the representation-group criterion and an exhaustive search for
//! one-step extensions.

use std::sync::Arc;

use serde::Serialize;

use crate::cohomology::{extension_from_cocycle, h2_trivial_coefficients, schur_multiplier, CocycleTable, CohomologyOptions};
use crate::cohomology::extension::pair_index;
use crate::error::{Error, Result};
use crate::group::table::GroupTable;
use crate::structure::hom::Homomorphism;
use crate::structure::subgroup::Subgroup;
use crate::structure::{center, derived_subgroup, gcd, is_isomorphic, quotient, subgroup_invariants};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EfficiencyReport {
    /// `A ⊆ Z(H)`.
    pub central_ok: bool,
    /// `A ⊆ [H, H]`.
    pub derived_ok: bool,
    pub quotient_iso_ok: Option<bool>,
    pub multiplier_match: Option<bool>,
}

impl EfficiencyReport {
    pub fn efficient(&self) -> bool {
        self.central_ok && self.derived_ok
    }
}

pub fn is_efficient(h: &GroupTable, a: &Subgroup) -> EfficiencyReport {
    EfficiencyReport {
        central_ok: a.is_subset(&center(h)),
        derived_ok: a.is_subset(&derived_subgroup(h)),
        quotient_iso_ok: None,
        multiplier_match: None,
    }
}

/// A candidate one-step efficient central extension `α: K → H` with
/// `[ξ, η] = z` of order `d`.
#[derive(Clone, Debug)]
pub struct ExtensionWitness {
    pub k: Arc<GroupTable>,
    pub alpha: Homomorphism,
    pub xi: usize,
    pub eta: usize,
    pub z: usize,
    pub d: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct OneStepReport {
    /// `x`, `y` commute and share the order `d > 1`.
    pub pair_ok: bool,
    pub alpha_surjective: bool,
    pub kernel_is_z: bool,
    pub alpha_xi_is_x: bool,
    pub alpha_eta_is_y: bool,
    pub commutator_is_z: bool,
    pub order_z_is_d: bool,
    pub alpha_z_trivial: bool,
    pub z_central: bool,
    pub z_derived: bool,
    pub violations: Vec<String>,
}

impl OneStepReport {
    /// `[ξ,η] = z ↦ [x,y] = 1` with `α(ξ) = x`, `α(η) = y`, `order(z) = d`.
    pub fn condition_a(&self) -> bool {
        self.alpha_xi_is_x && self.alpha_eta_is_y && self.commutator_is_z && self.order_z_is_d && self.alpha_z_trivial
    }

    /// `⟨z⟩ ⊆ Z(K) ∩ [K, K]`.
    pub fn condition_b(&self) -> bool {
        self.z_central && self.z_derived
    }

    pub fn passed(&self) -> bool {
        self.pair_ok && self.alpha_surjective && self.kernel_is_z && self.condition_a() && self.condition_b()
    }
}

pub fn verify_one_step(w: &ExtensionWitness, x: usize, y: usize) -> OneStepReport {
    let k = &*w.k;
    let h = &**w.alpha.target();
    let mut r = OneStepReport::default();
    let fail = |ok: bool, msg: String, v: &mut Vec<String>| {
        if !ok {
            v.push(msg);
        }
        ok
    };
    let mut v = Vec::new();
    r.pair_ok = fail(
        h.commutes(x, y) && h.element_order(x) == w.d && h.element_order(y) == w.d && w.d > 1,
        format!("x, y must commute and have order d = {} > 1", w.d),
        &mut v,
    );
    r.alpha_surjective = fail(w.alpha.is_surjective(), "α is not surjective".into(), &mut v);
    let zsub = Subgroup::generated(k, &[w.z]);
    r.kernel_is_z = fail(w.alpha.kernel() == zsub, "ker α ≠ ⟨z⟩".into(), &mut v);
    r.alpha_xi_is_x = fail(w.alpha.apply(w.xi) == x, "α(ξ) ≠ x".into(), &mut v);
    r.alpha_eta_is_y = fail(w.alpha.apply(w.eta) == y, "α(η) ≠ y".into(), &mut v);
    r.commutator_is_z = fail(k.commutator(w.xi, w.eta) == w.z, "[ξ, η] ≠ z".into(), &mut v);
    let oz = k.element_order(w.z);
    r.order_z_is_d = fail(oz == w.d, format!("order(z) = {oz} ≠ d = {}", w.d), &mut v);
    r.alpha_z_trivial = fail(w.alpha.apply(w.z) == h.identity(), "α(z) ≠ 1".into(), &mut v);
    r.z_central = fail(zsub.is_subset(&center(k)), "⟨z⟩ ⊄ Z(K)".into(), &mut v);
    r.z_derived = fail(zsub.is_subset(&derived_subgroup(k)), "⟨z⟩ ⊄ [K, K]".into(), &mut v);
    r.violations = v;
    r
}

#[derive(Clone, Debug, Serialize)]
pub struct RepresentationGroupReport {
    pub central_ok: bool,
    pub derived_ok: bool,
    pub kernel_invariants: Vec<u64>,
    pub multiplier_invariants: Vec<u64>,
    pub multiplier_match: bool,
    pub quotient_iso_ok: bool,
    pub order_ok: bool,
}

impl RepresentationGroupReport {
    pub fn positive(&self) -> bool {
        self.central_ok && self.derived_ok && self.multiplier_match && self.quotient_iso_ok && self.order_ok
    }

    pub fn efficiency(&self) -> EfficiencyReport {
        EfficiencyReport {
            central_ok: self.central_ok,
            derived_ok: self.derived_ok,
            quotient_iso_ok: Some(self.quotient_iso_ok),
            multiplier_match: Some(self.multiplier_match),
        }
    }
}

/// `A ⊆ Z(H) ∩ [H,H]`, `A ≅ M(G)` and `H/A ≅ G`.
pub fn verify_representation_group(
    h: &Arc<GroupTable>,
    a: &Subgroup,
    g: &Arc<GroupTable>,
    opts: CohomologyOptions,
) -> Result<RepresentationGroupReport> {
    let eff = is_efficient(h, a);
    let kernel_invariants = subgroup_invariants(h, a)?;
    let multiplier_invariants = schur_multiplier(g, None, opts)?.invariants;
    let quotient_iso_ok = if eff.central_ok {
        let (q, _) = quotient(h, a)?;
        is_isomorphic(&q, g).is_some()
    } else {
        false
    };
    Ok(RepresentationGroupReport {
        central_ok: eff.central_ok,
        derived_ok: eff.derived_ok,
        multiplier_match: kernel_invariants == multiplier_invariants,
        kernel_invariants,
        multiplier_invariants,
        quotient_iso_ok,
        order_ok: h.order() == a.order() * g.order(),
    })
}

/// One isomorphism class found by the stairway search.
#[derive(Clone, Debug)]
pub struct StairwayResult {
    pub witness: ExtensionWitness,
    /// The commuting pair `(x, y)` in the base group.
    pub pair: (usize, usize),
    /// Coordinates of the cocycle class in the `H²(G, ℤ_d)` basis.
    pub class: Vec<u64>,
    pub cocycle: CocycleTable,
    /// Number of (pair, class) combinations that gave this class.
    pub hits: usize,
}

/// Stairway report entry written by the command line front end.
#[derive(Clone, Debug, Serialize)]
pub struct StairwayEntry {
    pub pair: [String; 2],
    pub extension_order: usize,
    pub efficient: bool,
    pub class: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso_class_representative: Option<String>,
}

impl StairwayResult {
    pub fn entry(&self, g: &GroupTable) -> StairwayEntry {
        let k = &*self.witness.k;
        let z = Subgroup::generated(k, &[self.witness.z]);
        StairwayEntry {
            pair: [g.label(self.pair.0), g.label(self.pair.1)],
            extension_order: k.order(),
            efficient: is_efficient(k, &z).efficient(),
            class: self.class.clone(),
            iso_class_representative: None,
        }
    }
}

/// Commuting pairs `(x, y)` of order `d` with `y ∉ ⟨x⟩`, one per orbit of
/// simultaneous conjugation (pairs and their swaps identified).
pub fn commuting_pairs(g: &GroupTable, d: usize) -> Vec<(usize, usize)> {
    let n = g.order();
    let of_order: Vec<usize> = (0..n).filter(|&x| g.element_order(x) == d).collect();
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &x in &of_order {
        let cyc = Subgroup::generated(g, &[x]);
        for &y in &of_order {
            if !g.commutes(x, y) || cyc.contains(y) {
                continue;
            }
            let canon = (0..n)
                .flat_map(|h| {
                    let (a, b) = (g.conjugate(h, x), g.conjugate(h, y));
                    [(a, b), (b, a)]
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                out.push(canon);
            }
        }
    }
    out
}

/// Exhaustive search for one-step efficient central extensions of `g` by
/// `ℤ_d`: every class of `H²(G, ℤ_d)` up to unit scaling is tried against
/// the commuting pairs; results are deduplicated up to isomorphism.
pub fn stairway_search(
    g: &Arc<GroupTable>,
    d: usize,
    max_results: usize,
    opts: CohomologyOptions,
) -> Result<Vec<StairwayResult>> {
    if d < 2 {
        return Err(Error::InvalidModulus(format!("extension order must be at least 2, got {d}")));
    }
    let m = d as u64;
    let h2 = h2_trivial_coefficients(g, m, opts)?;
    let pairs = commuting_pairs(g, d);
    let mut results: Vec<StairwayResult> = Vec::new();
    if pairs.is_empty() || h2.is_trivial() {
        return Ok(results);
    }
    let units: Vec<u64> = (1..m).filter(|&u| gcd(u as usize, d) == 1).collect();
    let inv = &h2.invariants;
    let total: u64 = inv.iter().product();
    for code in 1..total {
        let mut c = Vec::with_capacity(inv.len());
        let mut r = code;
        for &di in inv.iter().rev() {
            c.push(r % di);
            r /= di;
        }
        c.reverse();
        let canonical = units
            .iter()
            .map(|&u| c.iter().zip(inv).map(|(&x, &di)| x * u % di).collect::<Vec<u64>>())
            .min()
            .unwrap();
        if canonical != c {
            continue;
        }
        let mut f = CocycleTable::zero(g.order(), m);
        for (&cj, gen) in c.iter().zip(&h2.generators) {
            if cj != 0 {
                f = f.add(&gen.scale(cj))?;
            }
        }
        // [ξ, η] = f(x,y) − f(y,x) must generate ℤ_d
        let good: Vec<(usize, usize)> = pairs
            .iter()
            .copied()
            .filter(|&(x, y)| {
                let w = (f.get(x, y) + m - f.get(y, x)) % m;
                gcd(w as usize, d) == 1
            })
            .collect();
        let Some(&(x, y)) = good.first() else { continue };
        let (k, alpha, _) = extension_from_cocycle(g, m, &f)?;
        let mut found = None;
        'lift: for a in 0..m {
            for b in 0..m {
                let xi = pair_index(m, a, x);
                let eta = pair_index(m, b, y);
                let w = ExtensionWitness {
                    k: k.clone(),
                    alpha: alpha.clone(),
                    xi,
                    eta,
                    z: k.commutator(xi, eta),
                    d,
                };
                if verify_one_step(&w, x, y).passed() {
                    found = Some(w);
                    break 'lift;
                }
            }
        }
        let Some(witness) = found else { continue };
        if let Some(r) = results.iter_mut().find(|r| is_isomorphic(&r.witness.k, &witness.k).is_some()) {
            r.hits += good.len();
            continue;
        }
        results.push(StairwayResult {
            witness,
            pair: (x, y),
            class: c,
            cocycle: f,
            hits: good.len(),
        });
        if results.len() >= max_results {
            break;
        }
    }
    Ok(results)
}
