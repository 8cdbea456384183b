//! Worked examples for every module, checked against hand computations,
//! brute-force oracles and independently built reference groups.

use std::sync::Arc;

use fgx_core::characters::{character_table, irrep_degrees, spin_types};
use fgx_core::cohomology::{
    extension_from_cocycle, h2_trivial_coefficients, hom_to_cyclic, schur_multiplier, CocycleTable, CohomologyOptions,
};
use fgx_core::extensions::{is_efficient, stairway_search, verify_one_step, ExtensionWitness};
use fgx_core::group::catalogue::presentation;
use fgx_core::group::{
    abelian, build_catalogue, build_named, covering_map, cyclic, direct_product, parse_reference, product_normal_form,
    small_groups, todd_coxeter, CatalogueGroup, CatalogueKey, NormalFormTuple, Presentation, Word,
};
use fgx_core::structure::{
    abelian_invariants, abelianization, center, commutator, conjugacy_classes, derived_subgroup, element_orders,
    exponent, is_isomorphic, quotient,
};
use fgx_core::{verify_axioms, GroupTable, Homomorphism, Subgroup};

fn cat(key: &str) -> CatalogueGroup {
    build_catalogue(key.parse().unwrap()).unwrap()
}

fn sub(c: &CatalogueGroup, names: &[&str]) -> Subgroup {
    let gens: Vec<usize> = names.iter().map(|n| c.element(n).unwrap()).collect();
    Subgroup::generated(&c.table, &gens)
}

fn tuple(key: CatalogueKey, p: &[u32]) -> NormalFormTuple {
    NormalFormTuple::new(key, p.to_vec()).unwrap()
}

#[test]
fn named_orders() {
    assert_eq!(build_named(CatalogueKey::G20).unwrap().order(), 18);
    assert_eq!(build_named(CatalogueKey::G243).unwrap().order(), 243);
    assert_eq!(build_named(CatalogueKey::TPrime { n: 4 }).unwrap().order(), 48);
    assert_eq!(build_named(CatalogueKey::G81Var { a: 1, b: 2 }).unwrap().order(), 81);
}

#[test]
fn product_rule_examples() {
    let r = CatalogueKey::R54;
    let p = product_normal_form(r, &tuple(r, &[0, 1, 1, 0]), &tuple(r, &[0, 1, 0, 0])).unwrap();
    assert_eq!(p.params, vec![2, 2, 1, 0]);
    let x = tuple(r, &[2, 1, 0, 1]);
    assert_eq!(product_normal_form(r, &tuple(r, &[0, 0, 0, 0]), &x).unwrap(), x);
    // ξ₃ · ξ₁ = z₁₂ ξ₁ ξ₂²
    let g = CatalogueKey::G81;
    let p = product_normal_form(g, &tuple(g, &[0, 0, 0, 1]), &tuple(g, &[0, 1, 0, 0])).unwrap();
    assert_eq!(p.params, vec![1, 1, 2, 1]);
}

#[test]
fn presentations_enumerate() {
    assert_eq!(todd_coxeter(&presentation(CatalogueKey::G20).unwrap(), 1000).unwrap().order(), 18);
    assert_eq!(todd_coxeter(&presentation(CatalogueKey::RP54).unwrap(), 1000).unwrap().order(), 54);
    let trivial = Presentation::new(vec!["g".into()], vec![Word::gen(0)], vec![]).unwrap();
    assert_eq!(todd_coxeter(&trivial, 10).unwrap().order(), 1);
}

#[test]
fn axioms_and_corruption() {
    assert!(verify_axioms(&build_named(CatalogueKey::R54).unwrap()).all_pass());
    assert!(verify_axioms(&build_named(CatalogueKey::G81).unwrap()).all_pass());
    let g = build_named(CatalogueKey::G20).unwrap();
    let mut rows = g.rows();
    rows[5][7] = rows[5][8];
    assert!(GroupTable::from_rows(rows, None).is_err());
}

#[test]
fn semidirect_references() {
    let g20 = Arc::new(build_named(CatalogueKey::G20).unwrap());
    let d = direct_product(&cyclic(3), &cyclic(3));
    assert!(d.is_abelian());
    assert_eq!(abelian_invariants(&d).unwrap(), vec![3, 3]);
    // (C3 × C3) ⋊ C2 by inversion is the generalised dihedral group of C3 × C3
    let n = abelian(&[3, 3]);
    let c2 = cyclic(2);
    let act = fgx_core::group::ActionSpec::new(&c2, &n, |h, x| if h == 0 { x } else { n.inv(x) }).unwrap();
    let sd = Arc::new(fgx_core::group::semidirect_product(&n, &c2, &act).unwrap());
    assert!(is_isomorphic(&g20, &sd).is_some());
    assert!(is_isomorphic(&Arc::new(cyclic(4)), &Arc::new(abelian(&[2, 2]))).is_none());
}

#[test]
fn extraspecial_reference() {
    // Heisenberg group of 3×3 unitriangular matrices over F_3, built directly
    let idx = |a: usize, b: usize, c: usize| 9 * a + 3 * b + c;
    let heis = GroupTable::from_fn(
        27,
        |x, y| {
            let (a1, b1, c1) = (x / 9, x / 3 % 3, x % 3);
            let (a2, b2, c2) = (y / 9, y / 3 % 3, y % 3);
            idx((a1 + a2) % 3, (b1 + b2) % 3, (c1 + c2 + a1 * b2) % 3)
        },
        None,
    )
    .unwrap();
    let g39 = Arc::new(build_named(CatalogueKey::G39).unwrap());
    assert!(is_isomorphic(&g39, &Arc::new(heis)).is_some());
}

#[test]
fn centers_and_derived() {
    let r54 = cat("R54");
    assert_eq!(center(&r54.table), sub(&r54, &["z12"]));
    let g243 = cat("G243");
    assert_eq!(center(&g243.table), sub(&g243, &["z12", "z23"]));
    assert_eq!(derived_subgroup(&g243.table).order(), 27);
    let g81 = cat("G81");
    assert_eq!(derived_subgroup(&g81.table), sub(&g81, &["xi2", "z12"]));
    let a = abelian(&[3, 3]);
    assert_eq!(center(&a).order(), 9);
    assert_eq!(derived_subgroup(&a).order(), 1);
}

#[test]
fn classes_orders_exponent() {
    let g39 = build_named(CatalogueKey::G39).unwrap();
    assert_eq!(conjugacy_classes(&g39).len(), 11);
    assert_eq!(exponent(&g39), 3);
    let eo = element_orders(&cyclic(2));
    assert_eq!(eo.into_iter().collect::<Vec<_>>(), vec![(1, 1), (2, 1)]);
}

#[test]
fn commutator_examples() {
    let g39 = cat("G39");
    let e = |n: &str| g39.element(n).unwrap();
    assert_eq!(commutator(&g39.table, e("x1"), e("x3")), e("x2"));
    let r54 = cat("R54");
    let e = |n: &str| r54.element(n).unwrap();
    assert_eq!(commutator(&r54.table, e("xi1"), e("xi2")), e("z12"));
}

#[test]
fn quotients() {
    let r54 = cat("R54");
    let (q, p) = quotient(&r54.table, &sub(&r54, &["z12"])).unwrap();
    assert!(is_isomorphic(&q, &cat("G20").table).is_some());
    assert!(p.is_surjective());
    let g243 = cat("G243");
    let (q, _) = quotient(&g243.table, &sub(&g243, &["z12", "z23"])).unwrap();
    assert!(is_isomorphic(&q, &cat("G39").table).is_some());
    let g = cat("G20");
    let (q, _) = quotient(&g.table, &Subgroup::trivial(&g.table)).unwrap();
    assert!(is_isomorphic(&q, &g.table).is_some());
}

#[test]
fn covering_maps() {
    let (r54, g20) = (cat("R54"), cat("G20"));
    let d = covering_map(&r54, &g20).unwrap();
    assert!(d.verify());
    assert_eq!(d.kernel(), sub(&r54, &["z12"]));
    for (s, t) in [("xi1", "x1"), ("xi2", "x2"), ("w", "a")] {
        assert_eq!(d.apply(r54.element(s).unwrap()), g20.element(t).unwrap(), "{s}");
    }
    let (g243, g81, g39) = (cat("G243"), cat("G81"), cat("G39"));
    let d2 = covering_map(&g243, &g81).unwrap();
    assert_eq!(d2.kernel(), sub(&g243, &["z23"]));
    let id = Homomorphism::identity(g39.table.clone());
    assert_eq!(id.kernel().order(), 1);
    // the two-step chain G243 → G81 → G39
    let chain = d2.then(&covering_map(&g81, &g39).unwrap()).unwrap();
    let k = chain.kernel();
    assert!(chain.is_surjective());
    assert_eq!(k.order(), 9);
    assert!(k.is_central(&g243.table));
    assert!(k.is_subset(&derived_subgroup(&g243.table)));
}

/// `|H²(G, ℤ_m)|` by enumerating every normalised function `G × G → ℤ_m`.
fn brute_force_h2_order(g: &GroupTable, m: u64) -> u64 {
    let n = g.order();
    let e = g.identity();
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != e && y != e)
        .collect();
    let total = m.pow(free.len() as u32);
    let mut cocycles = 0u64;
    for code in 0..total {
        let mut f = vec![0u64; n * n];
        let mut c = code;
        for &(x, y) in &free {
            f[x * n + y] = c % m;
            c /= m;
        }
        let ok = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    let l = f[y * n + z] + f[x * n + g.mul(y, z)];
                    let r = f[g.mul(x, y) * n + z] + f[x * n + y];
                    l % m == r % m
                })
            })
        });
        cocycles += u64::from(ok);
    }
    let mut cobs = std::collections::HashSet::new();
    let others: Vec<usize> = (0..n).filter(|&x| x != e).collect();
    for code in 0..m.pow(others.len() as u32) {
        let mut t = vec![0u64; n];
        let mut c = code;
        for &x in &others {
            t[x] = c % m;
            c /= m;
        }
        cobs.insert(CocycleTable::coboundary(g, m, &t).values().to_vec());
    }
    cocycles / cobs.len() as u64
}

#[test]
fn h2_against_brute_force() {
    for (name, m) in [("C2", 2u64), ("C3", 3), ("C4", 2), ("C2xC2", 2), ("C2", 4)] {
        let g = parse_reference(name).unwrap();
        let h2 = h2_trivial_coefficients(&g, m, CohomologyOptions::default()).unwrap();
        assert_eq!(h2.order(), brute_force_h2_order(&g, m), "{name}, m = {m}");
    }
    let v4 = abelian(&[2, 2]);
    assert_eq!(h2_trivial_coefficients(&v4, 2, CohomologyOptions::default()).unwrap().invariants, vec![2, 2, 2]);
    assert_eq!(schur_multiplier(&v4, Some(2), CohomologyOptions::default()).unwrap().invariants, vec![2]);
}

#[test]
fn h2_examples() {
    let c6 = cyclic(6);
    assert_eq!(h2_trivial_coefficients(&c6, 6, CohomologyOptions::default()).unwrap().invariants, vec![6]);
    let g20 = build_named(CatalogueKey::G20).unwrap();
    let h = h2_trivial_coefficients(&g20, 18, CohomologyOptions::default()).unwrap();
    assert_eq!(h.order() % 3, 0);
    assert_eq!(hom_to_cyclic(&g20, 18).unwrap().order(), 2);
}

#[test]
fn multipliers_of_small_groups() {
    // classical values for every group of order at most 12
    let known = [
        ("C2xC2", vec![2]),
        ("C2xC4", vec![2]),
        ("C2xC2xC2", vec![2, 2, 2]),
        ("D4", vec![2]),
        ("Q8", vec![]),
        ("C3xC3", vec![3]),
        ("S3", vec![]),
        ("D5", vec![]),
        ("C2xC6", vec![2]),
        ("D6", vec![2]),
        ("A4", vec![2]),
        ("DIC3", vec![]),
    ];
    for (name, g) in small_groups() {
        let want: Vec<u64> = known.iter().find(|(n, _)| *n == name).map(|(_, v)| v.clone()).unwrap_or_default();
        let got = schur_multiplier(&g, None, CohomologyOptions::default()).unwrap().invariants;
        assert_eq!(got, want, "M({name})");
    }
}

#[test]
fn extension_examples() {
    let g20 = Arc::new(build_named(CatalogueKey::G20).unwrap());
    let (e, _, a) = extension_from_cocycle(&g20, 3, &CocycleTable::zero(18, 3)).unwrap();
    assert!(is_isomorphic(&e, &Arc::new(direct_product(&g20, &cyclic(3)))).is_some());
    let eff = is_efficient(&e, &a);
    assert!(eff.central_ok && !eff.derived_ok);
    let c2 = Arc::new(cyclic(2));
    for m in 2..6u64 {
        let f = CocycleTable::coboundary(&c2, m, &[0, 1]);
        let (e, _, _) = extension_from_cocycle(&c2, m, &f).unwrap();
        assert!(is_isomorphic(&e, &Arc::new(direct_product(&cyclic(m as usize), &c2))).is_some(), "m = {m}");
    }
}

#[test]
fn efficiency_examples() {
    let r54 = cat("R54");
    assert!(is_efficient(&r54.table, &sub(&r54, &["z12"])).efficient());
    let g243 = cat("G243");
    assert!(is_efficient(&g243.table, &sub(&g243, &["z12", "z23"])).efficient());
}

#[test]
fn one_step_with_trivial_z_fails() {
    let (g81, g39) = (cat("G81"), cat("G39"));
    let w = ExtensionWitness {
        k: g81.table.clone(),
        alpha: covering_map(&g81, &g39).unwrap(),
        xi: g81.element("xi1").unwrap(),
        eta: g81.element("xi2").unwrap(),
        z: g81.table.identity(),
        d: 3,
    };
    let r = verify_one_step(&w, g39.element("x1").unwrap(), g39.element("x2").unwrap());
    assert!(!r.order_z_is_d);
    assert!(!r.condition_a());
    assert!(!r.passed());
}

#[test]
fn stairway_examples() {
    let opts = CohomologyOptions::default();
    assert!(stairway_search(&Arc::new(cyclic(5)), 5, 10, opts).unwrap().is_empty());
    let g20 = Arc::new(build_named(CatalogueKey::G20).unwrap());
    let r = stairway_search(&g20, 3, 10, opts).unwrap();
    let r54 = cat("R54");
    assert!(r.iter().any(|x| x.witness.k.order() == 54 && is_isomorphic(&x.witness.k, &r54.table).is_some()));
    let g39 = Arc::new(build_named(CatalogueKey::G39).unwrap());
    let found = stairway_search(&g39, 3, 100, opts).unwrap();
    let mut targets = vec![CatalogueKey::G81];
    targets.extend((0..3).flat_map(|a| (0..3).map(move |b| CatalogueKey::G81Var { a, b })));
    for key in targets {
        let t = Arc::new(build_named(key).unwrap());
        assert!(found.iter().any(|x| is_isomorphic(&x.witness.k, &t).is_some()), "{key}");
    }
}

#[test]
fn character_examples() {
    let g39 = build_named(CatalogueKey::G39).unwrap();
    assert_eq!(irrep_degrees(&g39).unwrap(), [vec![1; 9], vec![3; 2]].concat());
    let t = character_table(&cyclic(3)).unwrap();
    assert_eq!(t.linear_characters(), 3);
    for key in [CatalogueKey::R54, CatalogueKey::RP54, CatalogueKey::G81] {
        let d = irrep_degrees(&build_named(key).unwrap()).unwrap();
        assert_eq!(d.iter().map(|x| x * x).sum::<usize>(), key.expected_order(), "{key}");
    }
    assert!(irrep_degrees(&abelian(&[3, 3])).unwrap().iter().all(|&d| d == 1));
}

#[test]
fn spin_type_examples() {
    let r54 = cat("R54");
    let p = spin_types(&r54.table, &sub(&r54, &["z12"])).unwrap();
    assert_eq!(p.types.len(), 3);
    assert!(p.types.iter().all(|t| t.sum_of_squares == 18));
    let g243 = cat("G243");
    let p = spin_types(&g243.table, &sub(&g243, &["z12", "z23"])).unwrap();
    assert_eq!(p.types.len(), 9);
    assert!(p.types.iter().all(|t| t.sum_of_squares == 27));
    let p = spin_types(&r54.table, &Subgroup::trivial(&r54.table)).unwrap();
    assert_eq!(p.types.len(), 1);
    assert_eq!(p.types[0].characters.len(), 10);
}

#[test]
fn trivial_spin_type_is_quotient_table() {
    for (key, gens) in [("R54", vec!["z12"]), ("G243", vec!["z12", "z23"]), ("G81", vec!["z12"])] {
        let c = cat(key);
        let a = sub(&c, &gens);
        let p = spin_types(&c.table, &a).unwrap();
        let mut d = p.trivial_type().unwrap().degrees.clone();
        d.sort_unstable();
        let (q, _) = quotient(&c.table, &a).unwrap();
        assert_eq!(d, irrep_degrees(&q).unwrap(), "{key}");
    }
}

#[test]
fn linear_characters_match_abelianization() {
    for key in CatalogueKey::all() {
        let g = build_named(key).unwrap();
        let t = character_table(&g).unwrap();
        let ab: u64 = abelianization(&g).iter().product();
        assert_eq!(t.linear_characters() as u64, ab, "{key}");
    }
}
