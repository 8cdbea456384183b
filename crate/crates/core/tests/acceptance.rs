//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons
//! throughout. Exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use fgx_core::characters::{character_table, irrep_degrees, spin_types};
use fgx_core::cohomology::{
    extension_from_cocycle, h2_trivial_coefficients, schur_multiplier, CocycleTable, CohomologyOptions,
};
use fgx_core::extensions::{is_efficient, stairway_search, verify_one_step, verify_representation_group, ExtensionWitness};
use fgx_core::group::catalogue::{cross_check, normal_form_table};
use fgx_core::group::{
    abelian, build_catalogue, covering_map, cyclic, semidirect_product, small_groups, symmetric, ActionSpec,
    CatalogueGroup, CatalogueKey,
};
use fgx_core::structure::{center, derived_subgroup, is_isomorphic, quotient};
use fgx_core::{verify_axioms, GroupTable, Subgroup};

type Verdict = Result<String, String>;

struct Catalogue(BTreeMap<CatalogueKey, CatalogueGroup>);

impl Catalogue {
    fn load() -> Self {
        Self(
            CatalogueKey::all()
                .into_iter()
                .map(|k| (k, build_catalogue(k).unwrap_or_else(|e| panic!("building {k}: {e}"))))
                .collect(),
        )
    }

    fn get(&self, key: &str) -> &CatalogueGroup {
        &self.0[&key.parse::<CatalogueKey>().unwrap()]
    }

    fn el(&self, key: &str, name: &str) -> usize {
        self.get(key).element(name).unwrap_or_else(|| panic!("{key} has no generator {name}"))
    }

    fn sub(&self, key: &str, names: &[&str]) -> Subgroup {
        let gens: Vec<usize> = names.iter().map(|n| self.el(key, n)).collect();
        Subgroup::generated(&self.get(key).table, &gens)
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn orders(c: &Catalogue) -> Verdict {
    let mut want: Vec<(String, usize)> = vec![
        ("G20".into(), 18),
        ("R54".into(), 54),
        ("RP54".into(), 54),
        ("G39".into(), 27),
        ("G81".into(), 81),
        ("G243".into(), 243),
        ("TPRIME(4)".into(), 48),
    ];
    for a in 0..3 {
        for b in 0..3 {
            want.push((format!("G81VAR({a},{b})"), 81));
        }
    }
    let mut sweep = Duration::ZERO;
    for (key, order) in &want {
        let g = &c.get(key).table;
        ensure(g.order() == *order, format!("{key}: order {} ≠ {order}", g.order()))?;
        let t = Instant::now();
        let report = verify_axioms(g);
        let dt = t.elapsed();
        ensure(report.all_pass(), format!("{key}: axioms fail: {report:?}"))?;
        if key == "G243" {
            ensure(dt < Duration::from_secs(2), format!("G243 associativity sweep took {dt:?}"))?;
            sweep = dt;
        }
    }
    Ok(format!("{} groups verified; G243 sweep {sweep:.2?}", want.len()))
}

fn cross_construction(_: &Catalogue) -> Verdict {
    let mut total = 0;
    for key in [CatalogueKey::G20, CatalogueKey::R54, CatalogueKey::G39, CatalogueKey::G81, CatalogueKey::G243] {
        let nf = normal_form_table(key).map_err(err)?;
        let cc = cross_check(key, &nf).map_err(err)?;
        ensure(cc.coset_order == nf.order(), format!("{key}: coset order {}", cc.coset_order))?;
        ensure(cc.products_compared == nf.order() * nf.order(), format!("{key}: partial comparison"))?;
        // the bijection must be a permutation
        let mut seen = vec![false; nf.order()];
        for &b in &cc.bijection {
            ensure(!seen[b], format!("{key}: bijection repeats {b}"))?;
            seen[b] = true;
        }
        total += cc.products_compared;
    }
    Ok(format!("{total} products compared"))
}

fn centers_derived(c: &Catalogue) -> Verdict {
    let cases: [(&str, Subgroup, Subgroup, usize); 5] = [
        ("Z(R54)", center(&c.get("R54").table), c.sub("R54", &["z12"]), 3),
        ("Z(G81)", center(&c.get("G81").table), c.sub("G81", &["z12"]), 3),
        ("[G81,G81]", derived_subgroup(&c.get("G81").table), c.sub("G81", &["xi2", "z12"]), 9),
        ("Z(G243)", center(&c.get("G243").table), c.sub("G243", &["z12", "z23"]), 9),
        (
            "[G243,G243]",
            derived_subgroup(&c.get("G243").table),
            c.sub("G243", &["z12", "z23", "eta2"]),
            27,
        ),
    ];
    for (name, got, want, order) in &cases {
        ensure(got == want, format!("{name} differs from the expected element set"))?;
        ensure(got.order() == *order, format!("{name} has order {}", got.order()))?;
    }
    Ok("5 element-set equalities".into())
}

fn multipliers(c: &Catalogue) -> Verdict {
    let forced = CohomologyOptions::forced();
    let cases: [(&str, &GroupTable, Vec<u64>); 4] = [
        ("G20", &c.get("G20").table, vec![3]),
        ("G39", &c.get("G39").table, vec![3, 3]),
        ("S4", &symmetric(4), vec![2]),
        ("G81", &c.get("G81").table, vec![3]),
    ];
    let mut out = Vec::new();
    for (name, g, want) in cases {
        let got = schur_multiplier(g, None, forced).map_err(err)?.invariants;
        ensure(got == want, format!("M({name}) = {got:?}, expected {want:?}"))?;
        out.push(format!("M({name})={got:?}"));
    }
    Ok(out.join(" "))
}

fn representation_groups(c: &Catalogue) -> Verdict {
    let opts = CohomologyOptions::default();
    for (h, a, g) in [("R54", vec!["z12"], "G20"), ("RP54", vec!["zeta"], "G20"), ("G243", vec!["z12", "z23"], "G39")] {
        let r = verify_representation_group(&c.get(h).table, &c.sub(h, &a), &c.get(g).table, opts).map_err(err)?;
        ensure(r.positive(), format!("({h}, {g}) negative: {r:?}"))?;
    }
    let r = verify_representation_group(&c.get("G81").table, &c.sub("G81", &["z12"]), &c.get("G39").table, opts)
        .map_err(err)?;
    ensure(!r.positive(), "G81 accepted as a representation group of G39")?;
    ensure(!r.multiplier_match, "G81 negative but not on the multiplier clause")?;
    ensure(r.central_ok && r.derived_ok && r.quotient_iso_ok && r.order_ok, format!("G81: {r:?}"))?;
    Ok(format!(
        "3 positive; G81 fails only the multiplier match ({:?} vs {:?})",
        r.kernel_invariants, r.multiplier_invariants
    ))
}

fn one_step(c: &Catalogue) -> Verdict {
    let cases = [
        ("R54", "G20", ["xi1", "xi2", "z12"], ["x1", "x2"]),
        ("G81", "G39", ["xi1", "xi2", "z12"], ["x1", "x2"]),
        ("G243", "G81", ["eta2", "eta3", "z23"], ["xi2", "xi3"]),
    ];
    for (src, dst, [xi, eta, z], [x, y]) in cases {
        let w = ExtensionWitness {
            k: c.get(src).table.clone(),
            alpha: covering_map(c.get(src), c.get(dst)).map_err(err)?,
            xi: c.el(src, xi),
            eta: c.el(src, eta),
            z: c.el(src, z),
            d: 3,
        };
        let r = verify_one_step(&w, c.el(dst, x), c.el(dst, y));
        ensure(r.passed() && r.condition_b(), format!("{src} -> {dst}: {:?}", r.violations))?;
    }
    // ξ₁ = ab-lift and ξ₂ = ca-lift in R54
    let g20 = &c.get("G20").table;
    let (a, b, cc) = (c.el("G20", "a"), c.el("G20", "b"), c.el("G20", "c"));
    ensure(g20.mul(a, b) == c.el("G20", "x1") && g20.mul(cc, a) == c.el("G20", "x2"), "x1 ≠ ab or x2 ≠ ca")?;
    Ok("3 witnesses pass (A) and (B)".into())
}

fn structure(c: &Catalogue) -> Verdict {
    let n = abelian(&[3, 3]);
    let (c2, c3) = (cyclic(2), cyclic(3));
    let inv = ActionSpec::new(&c2, &n, |h, x| if h == 0 { x } else { n.inv(x) }).map_err(err)?;
    let heis = ActionSpec::new(&c3, &n, |h, x| 3 * (x / 3) + (x % 3 + h * (x / 3)) % 3).map_err(err)?;
    let r20 = Arc::new(semidirect_product(&n, &c2, &inv).map_err(err)?);
    let r39 = Arc::new(semidirect_product(&n, &c3, &heis).map_err(err)?);
    ensure(is_isomorphic(&c.get("G20").table, &r20).is_some(), "G20 ≇ (C3×C3)⋊C2")?;
    ensure(is_isomorphic(&c.get("G39").table, &r39).is_some(), "G39 ≇ (C3×C3)⋊C3")?;
    let g = &c.get("G39").table;
    let (a, b) = (c.el("G39", "a"), c.el("G39", "b"));
    let cm = g.commutator(b, a);
    ensure(cm != g.identity() && g.pow(cm, 3) == g.identity(), "c = [b,a] does not have order 3")?;
    ensure(center(g) == Subgroup::generated(g, &[cm]), "Z(G39) ≠ <c>")?;
    ensure(g.commutes(g.conjugate(b, a), a), "bab⁻¹ does not commute with a")?;
    ensure(g.commutes(g.conjugate(a, b), b), "aba⁻¹ does not commute with b")?;
    Ok("two semidirect isomorphisms and four identities".into())
}

fn variants(c: &Catalogue) -> Verdict {
    let mut reps: Vec<(Arc<GroupTable>, Vec<String>)> = vec![(c.get("G81").table.clone(), vec!["G81".into()])];
    for a in 0..3 {
        for b in 0..3 {
            let key = format!("G81VAR({a},{b})");
            let g = &c.get(&key).table;
            ensure(g.order() == 81, format!("{key}: order {}", g.order()))?;
            ensure(is_efficient(g, &c.sub(&key, &["z12"])).efficient(), format!("{key} not efficient"))?;
            match reps.iter_mut().find(|(r, _)| is_isomorphic(r, g).is_some()) {
                Some((_, names)) => names.push(key),
                None => reps.push((g.clone(), vec![key])),
            }
        }
    }
    let classes: Vec<String> = reps.iter().map(|(_, n)| format!("{{{}}}", n.join(" "))).collect();
    Ok(format!("{} classes: {}", classes.len(), classes.join(" ")))
}

fn characters(c: &Catalogue) -> Verdict {
    for (key, g) in &c.0 {
        let t = character_table(&g.table).map_err(err)?;
        let s: usize = t.degrees().iter().map(|d| d * d).sum();
        ensure(s == g.table.order(), format!("{key}: Σd² = {s}"))?;
        ensure(t.degrees().len() == t.class_count(), format!("{key}: table not square"))?;
    }
    for (key, gens, types, q) in [("R54", vec!["z12"], 3, 18), ("G243", vec!["z12", "z23"], 9, 27)] {
        let p = spin_types(&c.get(key).table, &c.sub(key, &gens)).map_err(err)?;
        ensure(p.types.len() == types, format!("{key}: {} spin types", p.types.len()))?;
        ensure(p.types.iter().all(|t| t.sum_of_squares == q), format!("{key}: Σd² per type ≠ {q}"))?;
        if key == "R54" {
            // the three cube roots of unity on z12
            let taus: Vec<u64> = p.types.iter().map(|t| t.tau[0]).collect();
            ensure(p.basis_orders == vec![3] && taus == vec![0, 1, 2], format!("R54 τ values {taus:?}"))?;
        }
    }
    let d39 = irrep_degrees(&c.get("G39").table).map_err(err)?;
    ensure(d39 == [vec![1; 9], vec![3; 2]].concat(), format!("G39 degrees {d39:?}"))?;
    let dr = irrep_degrees(&c.get("R54").table).map_err(err)?;
    let drp = irrep_degrees(&c.get("RP54").table).map_err(err)?;
    let iso = is_isomorphic(&c.get("R54").table, &c.get("RP54").table).is_some();
    let (f1, f2) = (dr.contains(&3), drp.contains(&3));
    if iso {
        ensure(dr == drp, "isomorphic groups with different degrees")?;
    } else {
        ensure(f1 != f2, "non-isomorphic R54, RP54 not separated by degree 3")?;
    }
    Ok(format!("R54 has degree 3: {f1}; RP54 has degree 3: {f2}; R54 ≅ RP54: {iso}"))
}

fn stairway(c: &Catalogue) -> Verdict {
    let opts = CohomologyOptions::default();
    let g20 = &c.get("G20").table;
    let r20 = stairway_search(g20, 3, 100, opts).map_err(err)?;
    let mut hit = false;
    for r in &r20 {
        let z = Subgroup::generated(&r.witness.k, &[r.witness.z]);
        if verify_representation_group(&r.witness.k, &z, g20, opts).map_err(err)?.positive() {
            hit = true;
        }
    }
    ensure(hit, "no G20 extension passes the representation-group criteria")?;
    let r39 = stairway_search(&c.get("G39").table, 3, 100, opts).map_err(err)?;
    let g81 = &c.get("G81").table;
    ensure(r39.iter().any(|r| is_isomorphic(&r.witness.k, g81).is_some()), "G81 not found over G39")?;
    Ok(format!("{} class(es) over G20, {} over G39", r20.len(), r39.len()))
}

fn commutator_identity(g: &GroupTable) -> (usize, usize) {
    let n = g.order();
    let (mut pairs, mut bad) = (0, 0);
    for x in 0..n {
        for y in 0..n {
            let z = g.commutator(x, y);
            if !(g.commutes(z, x) && g.commutes(z, y)) {
                continue;
            }
            pairs += 1;
            let (ox, oy) = (g.element_order(x) as i64, g.element_order(y) as i64);
            for m in 1..ox {
                for k in 1..oy {
                    if g.commutator(g.pow(x, m), g.pow(y, k)) != g.pow(z, m * k) {
                        bad += 1;
                    }
                }
            }
        }
    }
    (pairs, bad)
}

fn properties(c: &Catalogue) -> Verdict {
    let mut pairs = 0;
    for (key, g) in &c.0 {
        let (p, bad) = commutator_identity(&g.table);
        ensure(bad == 0, format!("{key}: {bad} violations of [x^m, y^n] = z^(mn)"))?;
        pairs += p;
    }
    for (h, gens, g) in [("R54", vec!["z12"], "G20"), ("G243", vec!["z12", "z23"], "G39")] {
        let (q, _) = quotient(&c.get(h).table, &c.sub(h, &gens)).map_err(err)?;
        ensure(is_isomorphic(&q, &c.get(g).table).is_some(), format!("{h}/<{gens:?}> ≇ {g}"))?;
    }
    let mut compared = 0;
    for (name, g) in small_groups() {
        let g = Arc::new(g);
        for m in [2u64, 3, 4] {
            let h2 = h2_trivial_coefficients(&g, m, CohomologyOptions::default()).map_err(err)?;
            let mut fs = vec![CocycleTable::zero(g.order(), m)];
            fs.extend(h2.generators.iter().cloned());
            for (s, f) in fs.iter().enumerate() {
                let t: Vec<u64> = (0..g.order())
                    .map(|x| if x == g.identity() { 0 } else { (5 * x as u64 + s as u64) % m })
                    .collect();
                let f2 = f.add(&CocycleTable::coboundary(&g, m, &t)).map_err(err)?;
                let (e1, _, _) = extension_from_cocycle(&g, m, f).map_err(err)?;
                let (e2, _, _) = extension_from_cocycle(&g, m, &f2).map_err(err)?;
                ensure(is_isomorphic(&e1, &e2).is_some(), format!("{name}, m = {m}: f and f + δt differ"))?;
                compared += 1;
            }
        }
    }
    Ok(format!("{pairs} commuting-commutator pairs, 2 quotients, {compared} cocycle comparisons"))
}

type Criterion = (&'static str, fn(&Catalogue) -> Verdict);

const CRITERIA: [Criterion; 11] = [
    ("orders and group axioms", orders),
    ("normal form vs coset enumeration", cross_construction),
    ("centers and derived subgroups", centers_derived),
    ("Schur multipliers", multipliers),
    ("representation-group criteria", representation_groups),
    ("one-step witnesses", one_step),
    ("semidirect structure", structure),
    ("G81 variants", variants),
    ("characters and spin types", characters),
    ("stairway search", stairway),
    ("property suites", properties),
];

fn main() -> ExitCode {
    let t0 = Instant::now();
    let cat = Catalogue::load();
    println!("catalogue built in {:.2?}", t0.elapsed());
    let mut failed = 0;
    for (i, (name, f)) in CRITERIA.iter().enumerate() {
        let t = Instant::now();
        let verdict = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| f(&cat)))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let dt = t.elapsed();
        match verdict {
            Ok(msg) => println!("criterion {:>2} PASS  {name} [{dt:.2?}]: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} [{dt:.2?}]: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
