//! Braidings on the extension from an element `σ` and a scalar `β`: condition checks,
//! the derived R-matrix data, the sixteen reduced hexagons, double braidings, twists,
//! transparency, the reverse category and the `Z/4` cocycle twist.

mod hexagon;

use serde::Serialize;

pub use hexagon::{check_hexagons_reduced, hexagons_on_modules_report, HEXAGON_PATTERNS};

use crate::cyclofield::CycNum;
use crate::error::{Error, Result};
use crate::gvect::{dual_data, GObject, Mor, State};
use crate::hopfcore::{regular_module, trivial_module, HopfAlgebra};
use crate::monoidal_ext::{act, assoc, build_ext_data, ExtData, GradedObject, Obj, MATRIX_LIMIT};
use crate::report::{mor_witness, Report};

#[derive(Clone, Debug)]
pub struct BraidData {
    pub ext: ExtData,
    pub sigma: Mor,
    pub sigma_inv: Mor,
    pub beta: CycNum,
    /// `R = (σM⊗σM)∘Δ∘σ⁻¹`
    pub r: Mor,
    pub tau: Mor,
    /// `ν = β·σ⁻¹`
    pub nu: Mor,
    pub omega_h: Mor,
    /// Drinfeld element `g·σ²`.
    pub u: Mor,
    /// Monodromy `(M_{σ²}⊗M_{σ²})∘Δ∘σ⁻²`.
    pub q: Mor,
    /// `σ⁻²`
    pub t: Mor,
}

fn hh(h: &HopfAlgebra) -> Vec<GObject> {
    h.legs(2)
}

/// `(x⊗y)` for elements of `H`.
fn pair(h: &HopfAlgebra, x: &Mor, y: &Mor) -> Result<Mor> {
    h.el_n(2, x.tensor(y).entries)
}

/// `(L_a ⊗ R_b)∘Δ(x)` style products: `(a⊗b)·Δ(x)·(c⊗d)` in `H⊗H`.
fn sandwich(h: &HopfAlgebra, left: &Mor, x2: &Mor, right: &Mor) -> Result<Mor> {
    h.mult_tensor(&h.mult_tensor(left, x2)?, right)
}

pub(crate) fn power(h: &HopfAlgebra, x: &Mor, n: i32) -> Result<Mor> {
    let base = if n < 0 { h.mult_inverse(x)? } else { x.clone() };
    let mut out = h.one();
    for _ in 0..n.unsigned_abs() {
        out = h.mult(&out, &base)?;
    }
    Ok(out)
}

/// `(σ^a M ⊗ M_{σ^b})∘Δ∘σ^c`-type elements: `(x⊗1)·Δ(y)·(1⊗z)`.
fn conj_delta(h: &HopfAlgebra, x: &Mor, y: &Mor, z: &Mor) -> Result<Mor> {
    sandwich(h, &pair(h, x, &h.eta)?, &h.delta.compose(y)?, &pair(h, &h.eta, z)?)
}

/// `γ(σ) = (σ⁻¹M ⊗ M_{σ⁻¹})∘Δ∘σ`.
pub fn gamma_from_sigma(h: &HopfAlgebra, sigma: &Mor) -> Result<Mor> {
    let si = h.mult_inverse(sigma)?;
    conj_delta(h, &si, sigma, &si)
}

/// Conditions a′, b, c, d, e′ for `(σ, β)` against built extension data.
pub fn check_braiding_conditions(e: &ExtData, sigma: &Mor, beta: &CycNum, omega_h: &Mor) -> Result<Report> {
    let h = &e.hopf;
    let mut r = Report::new("check_braiding_conditions");
    if beta.is_zero() {
        return Err(Error::InvalidInput("β must be invertible".into()));
    }
    let si = h.mult_inverse(sigma)?;
    let ad = h.ad(sigma)?;
    let ad_inv = h.ad(&si)?;
    // a′
    r.push("a'", mor_witness(&e.gamma, &gamma_from_sigma(h, sigma)?));
    // b
    let lam_sigma = e.lambda.compose(sigma)?.entries[0].clone();
    let w = mor_witness(&e.lambda.compose(&h.s)?, &e.lambda.compose(&ad)?).or_else(|| {
        (lam_sigma != beta.mul(beta)).then(|| format!("λ(σ) = {lam_sigma}, β² = {}", beta.mul(beta)))
    });
    r.push("b", w);
    // c
    let mut w = mor_witness(&h.eps.compose(&ad)?, &h.eps);
    if w.is_none() {
        let lhs = h.delta.compose(&ad)?;
        let rhs = ad.tensor(&ad).compose(&crate::gvect::braiding(&h.carrier, &h.carrier))?.compose(&h.delta)?;
        w = mor_witness(&lhs, &rhs).map(|s| format!("Δ∘Ad_σ: {s}"));
    }
    if w.is_none() {
        w = mor_witness(&ad.compose(&h.s)?, &h.s_inv.compose(&ad)?).map(|s| format!("Ad_σ∘S: {s}"));
    }
    r.push("c", w);
    // d
    let s_sigma = h.s.compose(sigma)?;
    let mut w = mor_witness(&s_sigma, &h.mult(&e.g, sigma)?);
    if w.is_none() {
        w = mor_witness(&s_sigma, &h.mult(sigma, &h.mult_inverse(&e.g)?)?);
    }
    r.push("d", w);
    // e′
    let mut lhs = h.state_of(&e.gamma_inv)?;
    h.map_at(&mut lhs, 1, omega_h)?;
    let mut rhs = h.state_of(&e.gamma_inv)?;
    h.map_at(&mut rhs, 0, &ad)?;
    h.map_at(&mut rhs, 1, &h.s.compose(&ad_inv)?)?;
    r.check_state("e'", &lhs, &rhs);
    Ok(r)
}

/// The simplified conditions for commutative `H`: a, b (`λ∘S = λ`), d (`S(σ) = σ`),
/// e (`ω_H = S`).
pub fn check_braiding_conditions_commutative(e: &ExtData, sigma: &Mor, beta: &CycNum, omega_h: &Mor) -> Result<Report> {
    let h = &e.hopf;
    let mut r = Report::new("check_braiding_conditions_commutative");
    r.push("a", mor_witness(&e.gamma, &gamma_from_sigma(h, sigma)?));
    let lam_sigma = e.lambda.compose(sigma)?.entries[0].clone();
    let w = mor_witness(&e.lambda.compose(&h.s)?, &e.lambda)
        .or_else(|| (lam_sigma != beta.mul(beta)).then(|| format!("λ(σ) = {lam_sigma}")));
    r.push("b", w);
    r.push("d", mor_witness(&h.s.compose(sigma)?, sigma));
    r.push("e", mor_witness(omega_h, &h.s));
    Ok(r)
}

/// `Ad_σ²` on every basis vector it moves, if any.
pub fn ad_sigma_squared_witness(h: &HopfAlgebra, sigma: &Mor) -> Result<Option<String>> {
    let ad = h.ad(sigma)?;
    let ad2 = ad.compose(&ad)?;
    let mut moved = Vec::new();
    for j in 0..h.dim() {
        let col = ad2.col(j);
        let mut e = vec![CycNum::zero(); h.dim()];
        e[j] = CycNum::one();
        if col != e {
            let terms: Vec<String> = col
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| format!("({c})·{}", h.carrier.basis[i]))
                .collect();
            moved.push(format!("Ad_σ²({}) = {}", h.carrier.basis[j], terms.join(" + ")));
        }
    }
    Ok((!moved.is_empty()).then(|| moved.join("; ")))
}

fn fail_with(r: &Report) -> Error {
    Error::BraidData(format!("{}: {}", r.title, r.failing_ids().join(", ")))
}

/// Derive `R, τ, ν, u, Q, t` and verify every identity relating them.
pub fn build_braid_data(e: &ExtData, sigma: &Mor, beta: &CycNum) -> Result<BraidData> {
    let h = &e.hopf;
    let omega_h = h.parity_operator();
    let cond = check_braiding_conditions(e, sigma, beta, &omega_h)?;
    if !cond.all_pass() {
        return Err(fail_with(&cond));
    }
    let b = derive_braid_data(e, sigma, beta)?;
    let inv = braid_invariants(&b)?;
    if !inv.all_pass() {
        return Err(fail_with(&inv));
    }
    Ok(b)
}

/// All derived braiding data with no checks.
pub fn derive_braid_data(e: &ExtData, sigma: &Mor, beta: &CycNum) -> Result<BraidData> {
    let h = &e.hopf;
    let sigma_inv = h.mult_inverse(sigma)?;
    let r = sandwich(h, &pair(h, sigma, sigma)?, &h.delta.compose(&sigma_inv)?, &h.eta.tensor(&h.eta))?;
    let s2 = power(h, sigma, 2)?;
    let sm2 = power(h, sigma, -2)?;
    let q = sandwich(h, &h.eta.tensor(&h.eta), &h.delta.compose(&sm2)?, &pair(h, &s2, &s2)?)?;
    Ok(BraidData {
        ext: e.clone(),
        sigma: sigma.clone(),
        sigma_inv: sigma_inv.clone(),
        beta: beta.clone(),
        r,
        tau: sigma.clone(),
        nu: sigma_inv.scale(beta),
        omega_h: h.parity_operator(),
        u: h.mult(&e.g, &s2)?,
        q,
        t: sm2,
    })
}

pub fn braid_invariants(b: &BraidData) -> Result<Report> {
    let e = &b.ext;
    let h = &e.hopf;
    let mut r = Report::new("braid_invariants");
    // quasi-cocommutativity: Δ^cop(x)·R = R·Δ(x)
    let w = crate::hopfcore::compare_maps(
        &[h.leg()],
        |st| {
            h.delta_at(st, 0)?;
            st.swap(0)?;
            h.insert_at(st, 2, &b.r)?;
            st.move_legs(2, 1, 1)?;
            h.mul_at(st, 0)?;
            h.mul_at(st, 1)
        },
        |st| {
            h.delta_at(st, 0)?;
            h.insert_at(st, 0, &b.r)?;
            st.move_legs(2, 1, 1)?;
            h.mul_at(st, 0)?;
            h.mul_at(st, 1)
        },
    )?;
    r.push("R_quasi_cocommutative", w);
    let rank = Mor::new(h.carrier.clone(), h.carrier.clone(), b.r.entries.clone())?.rank();
    r.check("R_nondegenerate", rank == h.dim(), || format!("rank {rank}"));
    // c∘R = (Ad_σ⊗Ad_σ)∘R
    let ad = h.ad(&b.sigma)?;
    let cr = swap_el(h, &b.r)?;
    r.check_mor("R_flip_Ad_sigma", &cr, &ad.tensor(&ad).compose(&b.r)?.with_objects(&GObject::unit(), &h.power(2))?);
    // Drinfeld element
    let mut st = h.state_of(&b.r)?;
    st.swap(0)?;
    h.s_at(&mut st, 0)?;
    h.mul_at(&mut st, 0)?;
    r.check_mor("u_drinfeld", &b.u, &h.el(st.dense())?);
    let s2 = h.s.compose(&h.s)?;
    r.check_mor("S2_Ad_u", &s2, &h.ad(&b.u)?);
    let ad2 = ad.compose(&ad)?;
    r.check_mor("S2_Ad_g_Ad_sigma2", &s2, &h.ad(&e.g)?.compose(&ad2)?);
    r.check_mor("Ad_sigma4", &ad2.compose(&ad2)?, &Mor::identity(&h.carrier));
    r.check_mor("Ad_g_Ad_sigma", &h.ad(&e.g)?.compose(&ad)?, &ad.compose(&h.ad(&h.mult_inverse(&e.g)?)?)?);
    // monodromy, both formulas
    let q2 = h.mult_tensor(&cr, &b.r)?;
    r.check_mor("Q_formulas_agree", &b.q, &q2);
    r.check_mor("omega_squared", &b.omega_h.compose(&b.omega_h)?, &Mor::identity(&h.carrier));
    r.check("eps_sigma", h.eps.compose(&b.sigma)?.entries[0].is_one(), || "ε(σ) ≠ 1".into());
    Ok(r)
}

fn swap_el(h: &HopfAlgebra, x: &Mor) -> Result<Mor> {
    let mut st = h.state_of(x)?;
    st.swap(0)?;
    h.el_n(2, st.dense())
}

/// Ribbon-element identities for `t = σ⁻²`; requires `Ad_σ² = id`.
pub fn ribbon_identities(b: &BraidData) -> Result<Report> {
    let h = &b.ext.hopf;
    if let Some(w) = ad_sigma_squared_witness(h, &b.sigma)? {
        return Err(Error::NotRibbon(w));
    }
    let mut r = Report::new("ribbon_identities");
    let et = h.eps.compose(&b.t)?.entries[0].clone();
    r.check("eps_t", et.is_one(), || format!("ε(t) = {et}"));
    r.check_mor("S_t", &h.s.compose(&b.t)?, &b.t);
    let tt = pair(h, &b.t, &b.t)?;
    r.check_mor("Delta_t", &h.delta.compose(&b.t)?, &h.mult_tensor(&b.q, &tt)?);
    r.check_mor("t_central", &h.left_mult_operator(&b.t)?, &h.right_mult_operator(&b.t)?);
    Ok(r)
}

// ---- braiding on objects -------------------------------------------------------------

/// Parity involution on each leg of `o`, starting at `p`.
fn omega(st: &mut State, p: usize, o: &Obj, h: &HopfAlgebra) -> Result<()> {
    for (i, l) in o.legs(h).iter().enumerate() {
        let par = Mor::from_fn(l, l, |a, c| {
            if a != c {
                CycNum::zero()
            } else if l.parity[a] == 1 {
                CycNum::int(-1)
            } else {
                CycNum::one()
            }
        });
        st.apply(p + i, 1, &par, vec![l.clone()])?;
    }
    Ok(())
}

/// `c_{A,B}` applied to the legs of `A⊗B` starting at `p`, giving the legs of `B⊗A`.
pub fn braid(st: &mut State, p: usize, a: &Obj, b: &Obj, bd: &BraidData) -> Result<()> {
    let h = &bd.ext.hopf;
    let (la, lb) = (a.num_legs(), b.num_legs());
    match (a.sector(), b.sector()) {
        (0, 0) => {
            st.insert(p, &bd.r, hh(h))?;
            st.move_legs(p + 1, 1, p + 1 + la)?;
            act(st, p, a, h)?;
            act(st, p + la, b, h)?;
            st.move_legs(p, la, p + lb)?;
        }
        (0, 1) => {
            st.insert(p, &bd.sigma, vec![h.leg()])?;
            act(st, p, a, h)?;
            st.move_legs(p, la, p + lb)?;
        }
        (1, 0) => {
            st.move_legs(p, la, p + lb)?;
            st.insert(p, &bd.tau, vec![h.leg()])?;
            act(st, p, b, h)?;
            omega(st, p, b, h)?;
        }
        (1, 1) => {
            h.map_at(st, p, &h.right_mult_operator(&bd.nu)?)?;
            st.move_legs(p + 1, la, p + 1 + lb)?;
            omega(st, p + 1, b, h)?;
        }
        _ => unreachable!("sectors are 0 or 1"),
    }
    Ok(())
}

fn check_size(legs: &[GObject]) -> Result<()> {
    let n: usize = legs.iter().map(GObject::dim).product();
    if n > MATRIX_LIMIT {
        return Err(Error::SizeLimit(n, MATRIX_LIMIT));
    }
    Ok(())
}

/// `c_{A,B}` as a matrix.
pub fn braid_matrix(bd: &BraidData, a: &Obj, b: &Obj) -> Result<Mor> {
    let legs = Obj::tensor(a, b).legs(&bd.ext.hopf);
    check_size(&legs)?;
    let mut st = State::identity(legs);
    braid(&mut st, 0, a, b, bd)?;
    Ok(st.to_mor())
}

/// `c_{B,A}∘c_{A,B}`.
pub fn double_braiding(bd: &BraidData, a: &Obj, b: &Obj) -> Result<Mor> {
    let ab = braid_matrix(bd, a, b)?;
    let ba = braid_matrix(bd, b, a)?;
    ba.compose(&ab)
}
/// The double braiding from its closed form: `Q` acting on `A⊗B` in `C₀⊗C₀`; `σ²`
/// and `ω` on the `C₀` factor in mixed sectors; `λ(σ)·σ⁻²M ⊗ ω ⊗ ω` in `C₁⊗C₁`.
pub fn double_braiding_closed_form(bd: &BraidData, a: &Obj, b: &Obj) -> Result<Mor> {
    let h = &bd.ext.hopf;
    let legs = Obj::tensor(a, b).legs(h);
    check_size(&legs)?;
    let la = a.num_legs();
    let mut st = State::identity(legs);
    let s2 = power(h, &bd.sigma, 2)?;
    match (a.sector(), b.sector()) {
        (0, 0) => {
            st.insert(0, &bd.q, hh(h))?;
            st.move_legs(1, 1, 1 + la)?;
            act(&mut st, 0, a, h)?;
            act(&mut st, la, b, h)?;
        }
        (0, 1) => {
            st.insert(0, &s2, vec![h.leg()])?;
            act(&mut st, 0, a, h)?;
            omega(&mut st, 0, a, h)?;
        }
        (1, 0) => {
            st.insert(la, &s2, vec![h.leg()])?;
            act(&mut st, la, b, h)?;
            omega(&mut st, la, b, h)?;
        }
        _ => {
            let lam_sigma = bd.ext.lambda.compose(&bd.sigma)?.entries[0].clone();
            h.map_at(&mut st, 0, &h.left_mult_operator(&bd.t)?)?;
            omega(&mut st, 1, a, h)?;
            omega(&mut st, 1 + la, b, h)?;
            st.scale(&lam_sigma);
        }
    }
    Ok(st.to_mor())
}

// ---- twist ---------------------------------------------------------------------------

/// `θ_M = ρ_M∘(σ⁻²⊗id)`, `θ_X = β⁻¹·ω_X`; refused unless `Ad_σ² = id`.
pub fn twist(bd: &BraidData, x: &GradedObject) -> Result<Mor> {
    let h = &bd.ext.hopf;
    if let Some(w) = ad_sigma_squared_witness(h, &bd.sigma)? {
        return Err(Error::NotRibbon(w));
    }
    let o = Obj::leaf(x.clone());
    let legs = o.legs(h);
    let mut st = State::identity(legs);
    match x {
        GradedObject::Zero(_) => {
            st.insert(0, &bd.t, vec![h.leg()])?;
            act(&mut st, 0, &o, h)?;
        }
        GradedObject::One(_) => {
            omega(&mut st, 0, &o, h)?;
            st.scale(&bd.beta.inv()?);
        }
    }
    Ok(st.to_mor())
}

/// The twist from the pivotal composite
/// `A → A(AA*) → (AA)A* → (AA)A* → A(AA*) → A` with right evaluation through the
/// pivotal structure (acting with `g` on `C₀`, trivial on `C₁`).
pub fn twist_via_pivotal(bd: &BraidData, x: &GradedObject) -> Result<Mor> {
    let e = &bd.ext;
    let h = &e.hopf;
    let (ad, _, coev) = crate::monoidal_ext::left_dual(e, x)?;
    let a = Obj::leaf(x.clone());
    let v = &a.legs(h)[0];
    let dd = dual_data(v);
    let mut st = State::identity(vec![v.clone()]);
    let aa = Obj::tensor(&a, &a);
    match x {
        GradedObject::Zero(_) => {
            st.insert(1, &coev, vec![v.clone(), dd.dual.clone()])?;
            assoc(&mut st, 0, &a, &a, &ad, e, false)?;
            braid(&mut st, 0, &a, &a, bd)?;
            assoc(&mut st, 0, &a, &a, &ad, e, true)?;
            st.insert(1, &e.g, vec![h.leg()])?;
            act(&mut st, 1, &a, h)?;
            st.apply(1, 2, &dd.ev_tilde, vec![])?;
        }
        GradedObject::One(_) => {
            st.insert(1, &coev, vec![h.leg(), v.clone(), dd.dual.clone()])?;
            assoc(&mut st, 0, &a, &a, &ad, e, false)?;
            braid(&mut st, Obj::internal_offset(&aa, &ad), &a, &a, bd)?;
            assoc(&mut st, 0, &a, &a, &ad, e, true)?;
            h.eps_at(&mut st, 1)?;
            st.apply(1, 2, &dd.ev_tilde, vec![])?;
        }
    }
    Ok(st.to_mor())
}

// ---- transparency --------------------------------------------------------------------

/// The generator objects used to test transparency.
pub fn generator_objects(h: &HopfAlgebra) -> Vec<Obj> {
    let mut v = vec![
        Obj::named("H", GradedObject::Zero(regular_module(h))),
        Obj::named("k", GradedObject::Zero(trivial_module(h, false))),
        Obj::named("1", GradedObject::One(GObject::unit())),
    ];
    if h.is_super() {
        v.push(Obj::named("Πk", GradedObject::Zero(trivial_module(h, true))));
        v.push(Obj::named("Π1", GradedObject::One(GObject::line(true))));
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct Transparency {
    /// Indices into the candidate list.
    pub transparent: Vec<usize>,
    pub q_nondegenerate: bool,
}

pub fn transparent_objects(bd: &BraidData, candidates: &[Obj]) -> Result<Transparency> {
    let h = &bd.ext.hopf;
    let gens = generator_objects(h);
    let mut transparent = Vec::new();
    'c: for (i, c) in candidates.iter().enumerate() {
        for g in &gens {
            let db = double_braiding(bd, c, g)?;
            if db != Mor::identity(&db.src) {
                continue 'c;
            }
        }
        transparent.push(i);
    }
    let rank = Mor::new(h.carrier.clone(), h.carrier.clone(), bd.q.entries.clone())?.rank();
    Ok(Transparency { transparent, q_nondegenerate: rank == h.dim() })
}

// ---- reverse category and cocycle twist ----------------------------------------------

/// Data `(λ, σ⁻¹, β⁻¹)` with the copairing determined by `σ⁻¹`; checks `c∘R⁻¹ = R′`.
pub fn reverse_data(bd: &BraidData) -> Result<BraidData> {
    let e = &bd.ext;
    let h = &e.hopf;
    let gamma = gamma_from_sigma(h, &bd.sigma_inv)?;
    let e2 = build_ext_data(h, &gamma, &e.lambda)?;
    let rev = build_braid_data(&e2, &bd.sigma_inv, &bd.beta.inv()?)?;
    let r_inv = r_inverse(bd)?;
    if swap_el(h, &r_inv)? != rev.r {
        return Err(Error::BraidData("c∘R⁻¹ ≠ R′".into()));
    }
    Ok(rev)
}

/// `R⁻¹ = Δ(σ)·(σ⁻¹⊗σ⁻¹)`, confirmed by multiplying back on both sides.
fn r_inverse(bd: &BraidData) -> Result<Mor> {
    let h = &bd.ext.hopf;
    let inv = h.mult_tensor(&h.delta.compose(&bd.sigma)?, &pair(h, &bd.sigma_inv, &bd.sigma_inv)?)?;
    let one = h.eta.tensor(&h.eta);
    if h.mult_tensor(&bd.r, &inv)?.entries != one.entries || h.mult_tensor(&inv, &bd.r)?.entries != one.entries {
        return Err(Error::NoInverse);
    }
    Ok(inv)
}

/// `(λ, σ, β) ↦ ((−1)^m λ, σ, i^m β)`.
pub fn cocycle_twist(bd: &BraidData, m: u8) -> Result<BraidData> {
    let e = &bd.ext;
    let h = &e.hopf;
    let m = m % 4;
    let sign = if m % 2 == 0 { CycNum::one() } else { CycNum::int(-1) };
    let lambda = e.lambda.scale(&sign);
    let e2 = build_ext_data(h, &e.gamma, &lambda)?;
    let beta = bd.beta.mul(&CycNum::root_of_unity(4, m as i64));
    build_braid_data(&e2, &bd.sigma, &beta)
}

#[cfg(test)]
mod tests;
