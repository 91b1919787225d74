//! The monoidal extension `C = Rep(H) + S` built from a copairing `γ` and a right
//! cointegral `λ`: condition checks, derived data, associators on actual objects,
//! the sixteen reduced pentagon identities, rigidity and transport.

mod engine;
mod pentagon;

use serde::{Deserialize, Serialize};

pub use engine::{act, assoc, GradedObject, Obj};
pub use pentagon::{check_pentagon_reduced, pentagon_case_pattern, PENTAGON_PATTERNS};

use crate::cyclofield::CycNum;
use crate::error::{Error, Result};
use crate::gvect::{self, dual_data, GObject, Mor, State};
use crate::hopfcore::{
    distinguished_grouplike, find_cointegral, find_integral, hopf_map_report, HModule, HopfAlgebra, Side,
};
use crate::report::Report;

/// Flattened dimension above which associator matrices are refused.
pub const MATRIX_LIMIT: usize = 4096;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtData {
    pub hopf: HopfAlgebra,
    pub gamma: Mor,
    pub gamma_inv: Mor,
    pub lambda: Mor,
    pub g: Mor,
    /// `Γ : H∨ → H`
    pub big_gamma: Mor,
    pub delta: Mor,
    pub delta_tilde: Mor,
    pub phi: Mor,
    pub phi_inv: Mor,
    /// `Λ = (λ⊗id)∘γ⁻¹`
    pub big_lambda: Mor,
    /// `Λ′ = (id⊗λ)∘γ⁻¹`
    pub big_lambda_prime: Mor,
}

/// `(f⊗g)` applied to an element of `H⊗H`.
fn map_pair(h: &HopfAlgebra, x: &Mor, f: &Mor, g: &Mor) -> Result<Mor> {
    let mut st = h.state_of(x)?;
    h.map_at(&mut st, 0, f)?;
    h.map_at(&mut st, 1, g)?;
    h.el_n(2, st.dense())
}

/// `(id⊗f)` with a functional `f`, giving an element of `H`.
fn contract_right(h: &HopfAlgebra, x: &Mor, f: &Mor) -> Result<Mor> {
    let mut st = h.state_of(x)?;
    h.func_at(&mut st, 1, f)?;
    h.el(st.dense())
}

fn contract_left(h: &HopfAlgebra, x: &Mor, f: &Mor) -> Result<Mor> {
    let mut st = h.state_of(x)?;
    h.func_at(&mut st, 0, f)?;
    h.el(st.dense())
}

/// `γ` as a `d × d` matrix `(γ_{ij})` with `γ = Σ γ_{ij} e_i⊗e_j`.
fn as_square(h: &HopfAlgebra, x: &Mor) -> Result<Mor> {
    Mor::new(h.carrier.clone(), h.carrier.clone(), x.entries.clone())
}

/// `(id⊗ε)∘γ = η = (ε⊗id)∘γ`, `(id⊗S)∘γ = (S⊗id)∘γ`, P-3, P-4 and non-degeneracy.
pub fn check_copairing(h: &HopfAlgebra, gamma: &Mor) -> Result<Report> {
    let mut r = Report::new("check_copairing");
    if gamma.rows() != h.dim() * h.dim() || gamma.cols() != 1 {
        return Err(Error::Shape("γ must be an element of H⊗H".into()));
    }
    r.check_mor("counit_left", &contract_left(h, gamma, &h.eps)?, &h.eta);
    r.check_mor("counit_right", &contract_right(h, gamma, &h.eps)?, &h.eta);
    let id = Mor::identity(&h.carrier);
    r.check_mor("antipode_symmetric", &map_pair(h, gamma, &id, &h.s)?, &map_pair(h, gamma, &h.s, &id)?);
    let p = pentagon::copairing_identities(h, gamma)?;
    r.extend(p);
    let m = as_square(h, gamma)?;
    let rank = m.rank();
    r.check("nondegenerate", rank == h.dim(), || format!("rank of γ is {rank} < {}", h.dim()));
    Ok(r)
}

/// `(λ⊗λ)∘(id⊗S)∘γ`.
pub fn normalisation_scalar(h: &HopfAlgebra, gamma: &Mor, lambda: &Mor) -> Result<CycNum> {
    let mut st = h.state_of(gamma)?;
    h.s_at(&mut st, 1)?;
    h.func_at(&mut st, 1, lambda)?;
    h.func_at(&mut st, 0, lambda)?;
    Ok(st.dense()[0].clone())
}

/// Right-cointegral property, the distinguished group-like and the normalisation
/// `(λ⊗λ)∘(id⊗S)∘γ = 1`. Returns the report, `g` (if it exists) and the raw scalar.
pub fn check_cointegral_norm(h: &HopfAlgebra, gamma: &Mor, lambda: &Mor) -> Result<(Report, Option<Mor>, CycNum)> {
    let mut r = Report::new("check_cointegral_norm");
    let mut st = State::identity(h.legs(1));
    h.delta_at(&mut st, 0)?;
    h.func_at(&mut st, 0, lambda)?;
    let lhs = st.to_mor();
    let rhs = h.eta.compose(lambda)?;
    r.push("right_cointegral", crate::report::mor_witness(&lhs, &rhs));
    let gamma_inv = map_pair(h, gamma, &h.s, &Mor::identity(&h.carrier))?;
    let g = match distinguished_grouplike(h, lambda, &gamma_inv) {
        Ok(g) => {
            r.pass("distinguished_grouplike");
            Some(g)
        }
        Err(e) => {
            r.fail("distinguished_grouplike", e.to_string());
            None
        }
    };
    let scalar = normalisation_scalar(h, gamma, lambda)?;
    r.check("normalisation", scalar.is_one(), || format!("(λ⊗λ)∘(id⊗S)∘γ = {scalar}"));
    Ok((r, g, scalar))
}

/// Rescale `λ` by `root` where `root² · scalar = 1` is verified first.
pub fn rescale_lambda(lambda: &Mor, scalar: &CycNum, root: &CycNum) -> Result<Mor> {
    if !root.mul(root).mul(scalar).is_one() {
        return Err(Error::InvalidInput(format!("{root}² · {scalar} ≠ 1")));
    }
    Ok(lambda.scale(root))
}

/// `c⁻¹_{H,H}∘γ = (id⊗(S²∘Ad_{g⁻¹}))∘γ`.
pub fn check_symmetry_condition(h: &HopfAlgebra, gamma: &Mor, g: &Mor) -> Result<Report> {
    let mut r = Report::new("check_symmetry_condition");
    let mut st = h.state_of(gamma)?;
    st.swap(0)?;
    let lhs = st.to_mor();
    let ginv = h.mult_inverse(g)?;
    let f = h.s.compose(&h.s)?.compose(&h.ad(&ginv)?)?;
    let rhs = map_pair(h, gamma, &Mor::identity(&h.carrier), &f)?;
    r.push("symmetry", crate::report::mor_witness(&lhs, &rhs));
    Ok(r)
}

/// All derived data from `(γ, λ, g)` with no checks; used for negative controls.
pub fn derive_ext_data(h: &HopfAlgebra, gamma: &Mor, lambda: &Mor, g: &Mor) -> Result<ExtData> {
    let d = h.dim();
    let id = Mor::identity(&h.carrier);
    let gamma_inv = map_pair(h, gamma, &h.s, &id)?;
    let s2 = h.s.compose(&h.s)?;
    let delta = map_pair(h, gamma, &id, &h.right_mult_operator(g)?.compose(&s2)?)?;
    let ginv = h.mult_inverse(g)?;
    let delta_tilde = map_pair(h, gamma, &h.s, &h.left_mult_operator(&ginv)?)?;
    // φ(u) = (id⊗λ)(S(γ′) ⊗ γ″u)
    let mut phi = Mor::zero(&h.carrier, &h.carrier);
    for j in 0..d {
        let mut st = h.state_of(gamma)?;
        h.insert_at(&mut st, 2, &h.basis_el(j))?;
        h.mul_at(&mut st, 1)?;
        h.func_at(&mut st, 1, lambda)?;
        h.s_at(&mut st, 0)?;
        for (i, v) in st.dense().into_iter().enumerate() {
            phi.set(i, j, v);
        }
    }
    let phi_inv = phi.inverse().map_err(|_| Error::ExtData("φ is not invertible".into()))?;
    let hd = dual_data(&h.carrier).dual;
    let big_gamma = Mor::from_fn(&hd, &h.carrier, |j, i| gamma_inv.entries[i * d + j].clone());
    let big_lambda = contract_left(h, &gamma_inv, lambda)?;
    let big_lambda_prime = contract_right(h, &gamma_inv, lambda)?;
    Ok(ExtData {
        hopf: h.clone(),
        gamma: gamma.clone(),
        gamma_inv,
        lambda: lambda.clone(),
        g: g.clone(),
        big_gamma,
        delta,
        delta_tilde,
        phi,
        phi_inv,
        big_lambda,
        big_lambda_prime,
    })
}

/// Run the three condition checks, derive all data and verify the invariants.
pub fn build_ext_data(h: &HopfAlgebra, gamma: &Mor, lambda: &Mor) -> Result<ExtData> {
    let fail = |r: &Report| Error::ExtData(format!("{}: {}", r.title, r.failing_ids().join(", ")));
    let cp = check_copairing(h, gamma)?;
    if !cp.all_pass() {
        return Err(fail(&cp));
    }
    let (cn, g, _) = check_cointegral_norm(h, gamma, lambda)?;
    if !cn.all_pass() {
        return Err(fail(&cn));
    }
    let g = g.expect("checked");
    let sy = check_symmetry_condition(h, gamma, &g)?;
    if !sy.all_pass() {
        return Err(fail(&sy));
    }
    let e = derive_ext_data(h, gamma, lambda, &g)?;
    let inv = ext_invariants(&e)?;
    if !inv.all_pass() {
        return Err(fail(&inv));
    }
    Ok(e)
}

/// The invariants relating the derived data to each other and to `H`.
pub fn ext_invariants(e: &ExtData) -> Result<Report> {
    let h = &e.hopf;
    let mut r = Report::new("ext_invariants");
    let one2 = h.eta.tensor(&h.eta);
    r.check_mor("gamma_inverse", &h.mult_tensor(&e.gamma, &e.gamma_inv)?, &one2);
    r.check_mor("gamma_inverse_other_side", &h.mult_tensor(&e.gamma_inv, &e.gamma)?, &one2);
    let gm = h.left_mult_operator(&e.g)?;
    r.check_mor("phi_inverse_via_S_left", &e.phi_inv, &gm.compose(&e.phi)?.compose(&h.s)?);
    r.check_mor("phi_inverse_via_S_right", &e.phi_inv, &h.s.compose(&e.phi)?.compose(&gm)?);
    let left_integrals = find_integral(h, Side::Left)?;
    let is_left_integral = |x: &Mor| -> Result<bool> {
        for k in 0..h.dim() {
            let lhs = h.mult(&h.basis_el(k), x)?;
            let rhs = x.scale(&h.eps.entries[k]);
            if lhs.entries != rhs.entries {
                return Ok(false);
            }
        }
        Ok(true)
    };
    r.check("Lambda_left_integral", is_left_integral(&e.big_lambda)?, || "x·Λ ≠ ε(x)Λ".into());
    r.check("Lambda_prime_left_integral", is_left_integral(&e.big_lambda_prime)?, || "x·Λ′ ≠ ε(x)Λ′".into());
    r.check("left_integral_space_1d", left_integrals.len() == 1, || {
        format!("{} independent left integrals", left_integrals.len())
    });
    let ll = e.lambda.compose(&e.big_lambda)?.entries[0].clone();
    r.check("lambda_Lambda", ll.is_one(), || format!("λ∘Λ = {ll}"));
    let llp = e.lambda.compose(&e.big_lambda_prime)?.entries[0].clone();
    r.check("lambda_Lambda_prime", llp.is_one(), || format!("λ∘Λ′ = {llp}"));
    r.check_mor("lambda_S_g", &e.lambda.compose(&h.s)?, &e.lambda.compose(&gm)?);
    r.check_mor("lambda_Sinv_g", &e.lambda.compose(&h.s_inv)?, &e.lambda.compose(&h.right_mult_operator(&e.g)?)?);
    // Δ∘Λ as a copairing is non-degenerate
    let dl = h.delta.compose(&e.big_lambda)?;
    let rank = as_square(h, &dl)?.rank();
    r.check("Delta_Lambda_nondegenerate", rank == h.dim(), || format!("rank {rank}"));
    // Γ : H∨ → H is a Hopf isomorphism
    let dual = crate::hopfcore::dual_hopf(h)?;
    let iso = hopf_map_report(&e.big_gamma, &dual, h)?;
    r.check("Gamma_hopf_map", iso.all_pass(), || iso.failing_ids().join(", "));
    r.check("Gamma_invertible", e.big_gamma.rank() == h.dim(), || "Γ is singular".into());
    // δ̃ = (id⊗g⁻¹M)∘γ⁻¹
    let ginv = h.mult_inverse(&e.g)?;
    let dt = map_pair(h, &e.gamma_inv, &Mor::identity(&h.carrier), &h.left_mult_operator(&ginv)?)?;
    r.check_mor("delta_tilde", &e.delta_tilde, &dt);
    // the right cointegral is unique up to scalar
    let rc = find_cointegral(h, Side::Right)?;
    r.check("right_cointegral_space_1d", rc.len() == 1, || format!("{} independent right cointegrals", rc.len()));
    Ok(r)
}

// ---- associators on objects --------------------------------------------------------

fn check_size(legs: &[GObject]) -> Result<usize> {
    let n: usize = legs.iter().map(GObject::dim).product();
    if n > MATRIX_LIMIT {
        return Err(Error::SizeLimit(n, MATRIX_LIMIT));
    }
    Ok(n)
}

/// `α_{A,B,C} : A⊗(B⊗C) → (A⊗B)⊗C` as a matrix, with its inverse verified.
pub fn assoc_matrix(e: &ExtData, a: &Obj, b: &Obj, c: &Obj) -> Result<(Mor, Mor)> {
    let src = Obj::tensor(a, &Obj::tensor(b, c));
    let legs = src.legs(&e.hopf);
    check_size(&legs)?;
    let mut fwd = State::identity(legs.clone());
    assoc(&mut fwd, 0, a, b, c, e, false)?;
    let tgt_legs = fwd.legs().to_vec();
    let mut inv = State::identity(tgt_legs);
    assoc(&mut inv, 0, a, b, c, e, true)?;
    let (f, i) = (fwd.to_mor(), inv.to_mor());
    let id = Mor::identity(&f.src);
    if i.compose(&f)?.entries != id.entries || f.compose(&i)?.entries != Mor::identity(&f.dst).entries {
        return Err(Error::ExtData("associator and its inverse do not compose to the identity".into()));
    }
    Ok((f, i))
}

/// Both sides of the pentagon on `A⊗(B⊗(C⊗D))`; `None` if equal, else the witness.
pub fn pentagon_on_modules(e: &ExtData, a: &Obj, b: &Obj, c: &Obj, d: &Obj) -> Result<Option<String>> {
    let h = &e.hopf;
    let cd = Obj::tensor(c, d);
    let bcd = Obj::tensor(b, &cd);
    let src = Obj::tensor(a, &bcd);
    let legs = src.legs(h);
    check_size(&legs)?;
    let mut lhs = State::identity(legs.clone());
    assoc(&mut lhs, 0, a, b, &cd, e, false)?;
    assoc(&mut lhs, 0, &Obj::tensor(a, b), c, d, e, false)?;
    let mut rhs = State::identity(legs);
    let off = Obj::internal_offset(a, &bcd) + a.legs(h).len();
    assoc(&mut rhs, off, b, c, d, e, false)?;
    let bc = Obj::tensor(b, c);
    assoc(&mut rhs, 0, a, &bc, d, e, false)?;
    let abc = Obj::tensor(a, &bc);
    assoc(&mut rhs, Obj::internal_offset(&abc, d), a, b, c, e, false)?;
    Ok(crate::report::state_witness(&lhs, &rhs))
}

pub fn check_pentagon_on_modules(e: &ExtData, a: &Obj, b: &Obj, c: &Obj, d: &Obj) -> Result<bool> {
    Ok(pentagon_on_modules(e, a, b, c, d)?.is_none())
}

/// Module-level pentagon for every sector pattern, items named like the reduced
/// cases; each pattern is run over all choices from `objs0` × `objs1`.
pub fn pentagon_on_modules_report(e: &ExtData, objs0: &[Obj], objs1: &[Obj]) -> Result<Report> {
    let mut r = Report::new("pentagon_on_modules");
    for (k, pat) in PENTAGON_PATTERNS.iter().enumerate() {
        let mut witness = None;
        let pools: Vec<&[Obj]> = pat.iter().map(|&s| if s == 0 { objs0 } else { objs1 }).collect();
        'outer: for a in pools[0] {
            for b in pools[1] {
                for c in pools[2] {
                    for d in pools[3] {
                        if let Some(w) = pentagon_on_modules(e, a, b, c, d)? {
                            witness = Some(format!("{}{}{}{}: {w}", a.name(), b.name(), c.name(), d.name()));
                            break 'outer;
                        }
                    }
                }
            }
        }
        r.push(format!("P-{}", k + 1), witness);
    }
    Ok(r)
}

// ---- rigidity ----------------------------------------------------------------------

/// Duality data of a graded object: the dual object and the maps
/// `ev : X*⊗X → 1`, `coev : 1 → X⊗X*`, each a morphism in `C`.
#[derive(Clone, Debug)]
pub struct Rigidity {
    pub dual: Obj,
    pub ev: Mor,
    pub coev: Mor,
    pub report: Report,
}

/// Left duals: for `M ∈ C₀` the module `M*` with base ev/coev; for `X ∈ C₁` the object
/// `X∨ ∈ C₁` with `ev = ε⊗ev_X` and `coev = Λ⊗coev_X`. Module-map properties and both
/// zig-zag identities are verified through the associators.
pub fn rigidity_data(e: &ExtData, x: &GradedObject) -> Result<Rigidity> {
    let (dual, ev, coev) = left_dual(e, x)?;
    let h = &e.hopf;
    let mut r = Report::new("rigidity");
    match x {
        GradedObject::Zero(m) => {
            let (right, left) = crate::hopfcore::dual_modules(h, m)?;
            let dd = dual_data(&m.carrier);
            debug_assert!(ev == dd.ev && coev == dd.coev);
            // ev: M*⊗M → k, coev: k → M⊗M*, ev~: M⊗*M → k, coev~: k → *M⊗M
            let tm = |a: &HModule, b: &HModule| crate::hopfcore::tensor_module(h, a, b);
            let triv = crate::hopfcore::trivial_module(h, false);
            r.push("ev_module_map", module_map_witness(h, &tm(&right, m)?, &triv, &dd.ev)?);
            r.push("coev_module_map", module_map_witness(h, &triv, &tm(m, &right)?, &dd.coev)?);
            r.push("ev_tilde_module_map", module_map_witness(h, &tm(m, &left)?, &triv, &dd.ev_tilde)?);
            r.push("coev_tilde_module_map", module_map_witness(h, &triv, &tm(&left, m)?, &dd.coev_tilde)?);
            // associators among sector-0 objects are identities: base zig-zags
            let v = &m.carrier;
            let zig = gvect::compose(
                &gvect::tensor(&Mor::identity(v), &dd.ev),
                &gvect::tensor(&dd.coev, &Mor::identity(v)),
            )?;
            r.check_mor("zigzag_object", &zig, &Mor::identity(v));
            let w = &dd.dual;
            let zag = gvect::compose(
                &gvect::tensor(&dd.ev, &Mor::identity(w)),
                &gvect::tensor(&Mor::identity(w), &dd.coev),
            )?;
            r.check_mor("zigzag_dual", &zag, &Mor::identity(w));
            let report = r;
            if !report.all_pass() {
                return Err(Error::Rigidity(report.failing_ids().join(", ")));
            }
            Ok(Rigidity { dual, ev, coev, report })
        }
        GradedObject::One(v) => {
            let dd = dual_data(v);
            let xo = Obj::leaf(x.clone());
            let xd = dual;
            // module maps: ε and Λ (left integral) intertwine left multiplication
            let mut st = State::identity(vec![h.leg(), h.leg()]);
            h.mul_at(&mut st, 0)?;
            h.eps_at(&mut st, 0)?;
            let mut st2 = State::identity(vec![h.leg(), h.leg()]);
            h.eps_at(&mut st2, 0)?;
            h.eps_at(&mut st2, 0)?;
            r.check_state("ev_module_map", &st, &st2);
            let mut st = State::identity(vec![h.leg()]);
            h.insert_at(&mut st, 1, &e.big_lambda)?;
            h.mul_at(&mut st, 0)?;
            let mut st2 = State::identity(vec![h.leg()]);
            h.eps_at(&mut st2, 0)?;
            h.insert_at(&mut st2, 0, &e.big_lambda)?;
            r.check_state("coev_module_map", &st, &st2);
            // zig-zag 1: X → (X⊗X*)⊗X → X⊗(X*⊗X) → X
            let mut z = State::identity(vec![v.clone()]);
            z.insert(0, &coev, vec![h.leg(), v.clone(), dd.dual.clone()])?;
            assoc(&mut z, 0, &xo, &xd, &xo, e, true)?;
            z.apply(1, 3, &ev, vec![])?;
            r.check_state("zigzag_object", &z, &State::identity(vec![v.clone()]));
            // zig-zag 2: X* → X*⊗(X⊗X*) → (X*⊗X)⊗X* → X*
            let w = dd.dual.clone();
            let mut z = State::identity(vec![w.clone()]);
            z.insert(1, &coev, vec![h.leg(), v.clone(), w.clone()])?;
            assoc(&mut z, 0, &xd, &xo, &xd, e, false)?;
            z.apply(0, 3, &ev, vec![])?;
            r.check_state("zigzag_dual", &z, &State::identity(vec![w.clone()]));
            let scalar_inv = h.eps.compose(&e.phi_inv)?.compose(&e.big_lambda)?.entries[0].clone();
            let scalar = h.eps.compose(&e.phi)?.compose(&e.big_lambda)?.entries[0].clone();
            r.check("eps_phi_inv_Lambda", scalar_inv.is_one(), || format!("ε∘φ⁻¹∘Λ = {scalar_inv}"));
            r.check("eps_phi_Lambda", scalar.is_one(), || format!("ε∘φ∘Λ = {scalar}"));
            let report = r;
            if !report.all_pass() {
                return Err(Error::Rigidity(report.failing_ids().join(", ")));
            }
            Ok(Rigidity { dual: xd, ev, coev, report })
        }
    }
}

/// The left dual with its evaluation and coevaluation, unchecked.
pub fn left_dual(e: &ExtData, x: &GradedObject) -> Result<(Obj, Mor, Mor)> {
    let h = &e.hopf;
    match x {
        GradedObject::Zero(m) => {
            let (right, _) = crate::hopfcore::dual_modules(h, m)?;
            let dd = dual_data(&m.carrier);
            Ok((Obj::leaf(GradedObject::Zero(right)), dd.ev, dd.coev))
        }
        GradedObject::One(v) => {
            let dd = dual_data(v);
            // ev: [H, X∨, X] → 1 ; coev: 1 → [H, X, X∨]
            let ev = h.eps.tensor(&dd.ev);
            let coev = e.big_lambda.tensor(&dd.coev);
            Ok((Obj::leaf(GradedObject::One(dd.dual)), ev, coev))
        }
    }
}

/// `f∘ρ_A = ρ_B∘(id⊗f)` for `f : A → B`.
fn module_map_witness(h: &HopfAlgebra, a: &HModule, b: &HModule, f: &Mor) -> Result<Option<String>> {
    let lhs = f.compose(&a.rho)?;
    let rhs = b.rho.compose(&Mor::identity(&h.carrier).tensor(f))?;
    Ok(crate::report::mor_witness(&lhs, &rhs))
}

// ---- transport ---------------------------------------------------------------------

/// Data over `H′` obtained along a Hopf isomorphism `f : H′ → H`:
/// `γ′ = (f⁻¹⊗f⁻¹)∘γ`, `λ′ = λ∘f`.
pub fn transport(e: &ExtData, h_prime: &HopfAlgebra, f: &Mor) -> Result<ExtData> {
    let rep = hopf_map_report(f, h_prime, &e.hopf)?;
    if !rep.all_pass() {
        return Err(Error::Iso(format!("not a Hopf map: {}", rep.failing_ids().join(", "))));
    }
    let f = f.clone().with_objects(&h_prime.carrier, &e.hopf.carrier)?;
    let finv = f.inverse().map_err(|_| Error::Iso("map is not invertible".into()))?;
    let mut st = e.hopf.state_of(&e.gamma)?;
    st.apply(0, 1, &finv, vec![h_prime.leg()])?;
    st.apply(1, 1, &finv, vec![h_prime.leg()])?;
    let gamma = h_prime.el_n(2, st.dense())?;
    let lambda = e.lambda.compose(&f)?.with_objects(&h_prime.carrier, &GObject::unit())?;
    build_ext_data(h_prime, &gamma, &lambda)
}

/// Whether an automorphism `f` of `H` fixes both `γ` and `λ`.
pub fn check_aut_fixes(e: &ExtData, f: &Mor) -> Result<bool> {
    let t = transport(e, &e.hopf, f)?;
    Ok(t.gamma == e.gamma && t.lambda == e.lambda)
}
