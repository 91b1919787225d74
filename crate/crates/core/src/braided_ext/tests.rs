use super::*;
use crate::examples::*;

fn split(h: &HopfAlgebra) -> (Vec<Obj>, Vec<Obj>) {
    generator_objects(h).into_iter().partition(|o| o.sector() == 0)
}

fn braided(data: &ExampleData) -> BraidData {
    let e = build_ext_data(&data.hopf, &data.gamma, &data.lambda).unwrap();
    build_braid_data(&e, data.sigma.as_ref().unwrap(), data.beta.as_ref().unwrap()).unwrap()
}

fn sf(d: usize, zeta: i8) -> ExampleData {
    build_sf(&SfParams { d, zeta, i_plus: true, beta_principal: true }).unwrap()
}

fn ty_z2() -> ExampleData {
    let mut p = TyParams::standard(vec![2], true).unwrap();
    let (s, b) = ty_braiding_candidates(&p)
        .unwrap()
        .into_iter()
        .find(|(s, b)| {
            let d = build_ty(&p).unwrap();
            let e = build_ext_data(&d.hopf, &d.gamma, &d.lambda).unwrap();
            let sig = d.hopf.el(s.clone()).unwrap();
            check_braiding_conditions(&e, &sig, b, &d.hopf.parity_operator()).unwrap().all_pass()
        })
        .unwrap();
    p.sigma = Some(s);
    p.beta = Some(b);
    build_ty(&p).unwrap()
}

fn h16(zeta: i8) -> ExampleData {
    build_h16(&H16Params { zeta, beta_principal: true }).unwrap()
}

fn bump(x: &Mor, k: usize) -> Mor {
    let mut y = x.clone();
    y.entries[k] = y.entries[k].add(&CycNum::one());
    y
}

fn fails(r: Report) -> Vec<String> {
    r.failing_ids().into_iter().map(String::from).collect()
}

fn is_id(m: &Mor) -> bool {
    *m == Mor::identity(&m.src)
}

#[test]
fn hexagons_hold_both_routes() {
    for data in [sf(2, 1), sf(2, -1), ty_z2()] {
        let b = braided(&data);
        assert!(check_hexagons_reduced(&b).unwrap().all_pass(), "{}", data.name);
        let (o0, o1) = split(&data.hopf);
        let m = hexagons_on_modules_report(&b, &o0, &o1).unwrap();
        assert_eq!(m.items.len(), 16);
        assert!(m.all_pass(), "{}: {:?}", data.name, m.failing_ids());
    }
}

#[test]
fn h16_reduced_hexagons() {
    for z in [1, -1] {
        let b = braided(&h16(z));
        assert!(check_hexagons_reduced(&b).unwrap().all_pass());
    }
}

#[test]
fn hexagon_routes_agree_under_perturbation() {
    for data in [sf(2, -1), ty_z2()] {
        let b = braided(&data);
        let (o0, o1) = split(&data.hopf);
        let d = data.hopf.dim();
        let mut cases: Vec<(String, BraidData)> = vec![];
        for k in [0, d - 1] {
            let mut c = b.clone();
            c.sigma = bump(&b.sigma, k);
            cases.push((format!("sigma[{k}]"), c));
            let mut c = b.clone();
            c.tau = bump(&b.tau, k);
            cases.push((format!("tau[{k}]"), c));
            let mut c = b.clone();
            c.nu = bump(&b.nu, k);
            cases.push((format!("nu[{k}]"), c));
        }
        for k in [0, d * d - 1] {
            let mut c = b.clone();
            c.r = bump(&b.r, k);
            cases.push((format!("R[{k}]"), c));
            let mut c = b.clone();
            c.ext.gamma = bump(&b.ext.gamma, k);
            cases.push((format!("gamma[{k}]"), c));
            let mut c = b.clone();
            c.ext.gamma_inv = bump(&b.ext.gamma_inv, k);
            cases.push((format!("gamma_inv[{k}]"), c));
            let mut c = b.clone();
            c.ext.delta = bump(&b.ext.delta, k);
            cases.push((format!("delta[{k}]"), c));
            let mut c = b.clone();
            c.ext.delta_tilde = bump(&b.ext.delta_tilde, k);
            cases.push((format!("delta_tilde[{k}]"), c));
        }
        let mut c = b.clone();
        c.ext.phi = b.ext.phi.scale(&CycNum::int(2));
        cases.push(("phi".into(), c));
        let mut c = b.clone();
        c.ext.phi_inv = b.ext.phi_inv.scale(&CycNum::int(2));
        cases.push(("phi_inv".into(), c));
        for (name, c) in &cases {
            let red = fails(check_hexagons_reduced(c).unwrap());
            let m = fails(hexagons_on_modules_report(c, &o0, &o1).unwrap());
            assert!(!red.is_empty(), "{} {name}", data.name);
            assert_eq!(red, m, "{} {name}", data.name);
            if name == "phi" {
                assert_eq!(red, ["H-8R"]);
            }
            if name == "phi_inv" {
                assert_eq!(red, ["H-8L"]);
            }
        }
    }
}

#[test]
fn wrong_sigma_breaks_hexagons_consistently() {
    // σ = 1 on Z/2 does not produce the copairing χ
    let d = ty_z2();
    let e = build_ext_data(&d.hopf, &d.gamma, &d.lambda).unwrap();
    let one = d.hopf.one();
    let b = derive_braid_data(&e, &one, &CycNum::one()).unwrap();
    assert!(!check_braiding_conditions(&e, &one, &CycNum::one(), &d.hopf.parity_operator()).unwrap().all_pass());
    let (o0, o1) = split(&d.hopf);
    let red = fails(check_hexagons_reduced(&b).unwrap());
    assert!(!red.is_empty());
    assert_eq!(red, fails(hexagons_on_modules_report(&b, &o0, &o1).unwrap()));
}

#[test]
fn invariants_and_ribbon() {
    for data in [sf(2, 1), sf(2, -1), ty_z2(), h16(1), h16(-1)] {
        let b = braided(&data);
        assert!(braid_invariants(&b).unwrap().all_pass(), "{}", data.name);
        assert!(ribbon_identities(&b).unwrap().all_pass(), "{}", data.name);
    }
}

#[test]
fn twist_matches_pivotal_route() {
    for data in [sf(2, 1), sf(2, -1), ty_z2()] {
        let b = braided(&data);
        for o in generator_objects(&data.hopf) {
            let Obj::Leaf { obj, name } = &o else { unreachable!() };
            assert_eq!(twist(&b, obj).unwrap(), twist_via_pivotal(&b, obj).unwrap(), "{} {name}", data.name);
        }
    }
}

#[test]
fn double_braiding_closed_form_agrees() {
    for data in [sf(2, 1), sf(2, -1), ty_z2(), h16(-1)] {
        let b = braided(&data);
        let gens = generator_objects(&data.hopf);
        for x in &gens {
            for y in &gens {
                assert_eq!(
                    double_braiding(&b, x, y).unwrap(),
                    double_braiding_closed_form(&b, x, y).unwrap(),
                    "{} {} {}",
                    data.name,
                    x.name(),
                    y.name()
                );
            }
        }
    }
}

#[test]
fn sf_transparency() {
    for z in [1, -1] {
        let data = sf(2, z);
        let b = braided(&data);
        let gens = generator_objects(&data.hopf);
        let t = transparent_objects(&b, &gens).unwrap();
        assert_eq!(t.transparent.iter().map(|&i| gens[i].name()).collect::<Vec<_>>(), ["k"]);
        assert!(t.q_nondegenerate);
        // Πk against a sector-1 object double-braids to −id
        let pk = gens.iter().find(|o| o.name() == "Πk").unwrap();
        let one = gens.iter().find(|o| o.name() == "1").unwrap();
        let db = double_braiding(&b, pk, one).unwrap();
        assert_eq!(db, Mor::identity(&db.src).scale(&CycNum::int(-1)));
    }
}

#[test]
fn h16_double_braidings() {
    let gens_of = |d: &ExampleData| generator_objects(&d.hopf);
    let d = h16(1);
    let b = braided(&d);
    for x in gens_of(&d) {
        for y in gens_of(&d) {
            assert!(is_id(&double_braiding(&b, &x, &y).unwrap()));
        }
    }
    let d = h16(-1);
    let b = braided(&d);
    for x in gens_of(&d) {
        for y in gens_of(&d) {
            let db = double_braiding(&b, &x, &y).unwrap();
            if x.sector() == 1 && y.sector() == 1 {
                assert_eq!(db, Mor::identity(&db.src).scale(&CycNum::int(-1)));
            } else {
                assert!(is_id(&db));
            }
        }
    }
    let t = transparent_objects(&b, &gens_of(&d)).unwrap();
    assert_eq!(t.transparent, [0, 1]);
}

#[test]
fn reverse_and_cocycle() {
    for data in [sf(2, -1), ty_z2()] {
        let b = braided(&data);
        let r = reverse_data(&b).unwrap();
        let rr = reverse_data(&r).unwrap();
        assert_eq!(rr.r, b.r);
        assert_eq!(rr.ext.gamma, b.ext.gamma);
        assert_eq!(rr.beta, b.beta);
        let twice = cocycle_twist(&cocycle_twist(&b, 1).unwrap(), 1).unwrap();
        let two = cocycle_twist(&b, 2).unwrap();
        assert_eq!((twice.beta.clone(), twice.ext.lambda.clone()), (two.beta, two.ext.lambda));
        let four = cocycle_twist(&twice, 2).unwrap();
        assert_eq!((four.beta, four.ext.lambda), (b.beta.clone(), b.ext.lambda.clone()));
    }
    // reverse of symplectic fermions has R′ = exp(C) = γ
    let data = sf(2, 1);
    let r = reverse_data(&braided(&data)).unwrap();
    assert_eq!(r.r, data.gamma);
}

#[test]
fn ty_braidings_enumerated() {
    let mut total = 0;
    for pos in [true, false] {
        let p = TyParams::standard(vec![2], pos).unwrap();
        let d = build_ty(&p).unwrap();
        let e = build_ext_data(&d.hopf, &d.gamma, &d.lambda).unwrap();
        let omega = d.hopf.parity_operator();
        let mut valid = 0;
        for (s, beta) in ty_braiding_candidates(&p).unwrap() {
            let sig = d.hopf.el(s).unwrap();
            let full = check_braiding_conditions(&e, &sig, &beta, &omega).unwrap().all_pass();
            let comm = check_braiding_conditions_commutative(&e, &sig, &beta, &omega).unwrap().all_pass();
            assert_eq!(full, comm);
            valid += usize::from(full);
        }
        assert_eq!(valid, 4);
        total += valid;
    }
    assert_eq!(total, 8);
    let z4 = TyParams::standard(vec![4], true).unwrap();
    assert!(matches!(ty_braiding_candidates(&z4), Err(Error::BraidingImpossible(_))));
}

#[test]
fn sweedler_has_no_braiding() {
    let t = CycNum::one();
    let data = build_sweedler(&t).unwrap();
    let h = &data.hopf;
    let e = build_ext_data(h, &data.gamma, &data.lambda).unwrap();
    let found = sweedler_sigma_search(&data, &t).unwrap();
    assert_eq!(found.len(), 4);
    let x = h.basis_el(2);
    for s in &found {
        let r = check_braiding_conditions(&e, s, &CycNum::one(), &h.parity_operator()).unwrap();
        assert!(r.item_passes("a'"));
        assert!(!r.all_pass());
        let s2 = power(h, s, 2).unwrap();
        let conj = h.mult(&h.mult(&s2, &x).unwrap(), &h.mult_inverse(&s2).unwrap()).unwrap();
        assert_eq!(conj, x.scale(&CycNum::int(-1)));
        assert!(ad_sigma_squared_witness(h, s).unwrap().unwrap().contains("Ad_σ²(x) = (-1)·x"));
        let b = derive_braid_data(&e, s, &CycNum::one()).unwrap();
        assert!(matches!(twist(&b, &GradedObject::One(GObject::unit())), Err(Error::NotRibbon(_))));
        assert!(matches!(ribbon_identities(&b), Err(Error::NotRibbon(_))));
    }
}
