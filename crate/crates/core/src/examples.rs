//! Constructors for the four example families: Tambara-Yamagami data on `k(A)`,
//! symplectic fermions, Sweedler's `H4` and the 16-dimensional triangular `H16`.

use serde::{Deserialize, Serialize};

use crate::cyclofield::CycNum;
use crate::error::{Error, Result};
use crate::gvect::{GObject, Mor, State};
use crate::hopfcore::{basis_vector, HopfAlgebra};

/// Tensors feeding the monoidal (and optionally braided) checkers.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExampleData {
    pub name: String,
    pub hopf: HopfAlgebra,
    pub gamma: Mor,
    pub lambda: Mor,
    pub sigma: Option<Mor>,
    pub beta: Option<CycNum>,
    /// Human-readable record of every root choice made.
    pub choices: Vec<String>,
}

/// Hopf algebra from multiplication and coproduct tables over the basis.
fn from_tables(
    carrier: GObject,
    mult: impl Fn(usize, usize) -> Vec<(usize, CycNum)>,
    cop: impl Fn(usize) -> Vec<(usize, usize, CycNum)>,
    unit: usize,
    eps: Vec<CycNum>,
    s: Option<Mor>,
) -> Result<HopfAlgebra> {
    let d = carrier.dim();
    let hh = carrier.tensor(&carrier);
    let mut mu = Mor::zero(&hh, &carrier);
    for i in 0..d {
        for j in 0..d {
            for (k, c) in mult(i, j) {
                let v = mu.get(k, i * d + j).add(&c);
                mu.set(k, i * d + j, v);
            }
        }
    }
    let mut delta = Mor::zero(&carrier, &hh);
    for i in 0..d {
        for (a, b, c) in cop(i) {
            let v = delta.get(a * d + b, i).add(&c);
            delta.set(a * d + b, i, v);
        }
    }
    let eta = Mor::element(&carrier, basis_vector(d, unit))?;
    let eps = Mor::functional(&carrier, eps)?;
    HopfAlgebra::new(carrier, mu, eta, delta, eps, s)
}

fn kron_el(h: &HopfAlgebra, x: &Mor, y: &Mor) -> Result<Mor> {
    x.tensor(y).with_objects(&GObject::unit(), &h.power(2))
}

/// `exp(x)` for nilpotent `x ∈ H^{⊗n}` (braided product), summed until the terms vanish.
fn exp_nilpotent(h: &HopfAlgebra, x: &Mor, one: &Mor) -> Result<Mor> {
    let mut sum = one.clone();
    let mut term = one.clone();
    for k in 1..=h.dim() as i64 + 1 {
        term = h.mult_tensor(&term, x)?.scale(&CycNum::frac(1, k));
        if term.is_zero() {
            return Ok(sum);
        }
        sum = sum.add(&term)?;
    }
    Err(Error::InvalidInput("exponent is not nilpotent".into()))
}

// ---- Tambara-Yamagami -------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TyParams {
    /// Cyclic factor orders of `A`.
    pub orders: Vec<u32>,
    /// `χ(a, b)` indexed by the element enumeration of [`ty_elements`]; `None` = standard
    /// `Π ζ_{n_k}^{a_k b_k}`.
    pub chi: Option<Vec<Vec<CycNum>>>,
    pub c: CycNum,
    /// Quadratic function `σ(a)` and `β`, for the braided request.
    pub sigma: Option<Vec<CycNum>>,
    pub beta: Option<CycNum>,
}

impl TyParams {
    /// Standard data with `c = ±|A|^{-1/2}`.
    pub fn standard(orders: Vec<u32>, positive_c: bool) -> Result<Self> {
        let n: u64 = orders.iter().map(|&o| o as u64).product();
        let c = CycNum::sqrt_int(n)?.inv()?;
        Ok(TyParams { orders, chi: None, c: if positive_c { c } else { c.neg() }, sigma: None, beta: None })
    }
}

/// Elements of `A = Π Z/n_k` in mixed-radix order (last factor fastest).
pub fn ty_elements(orders: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &n in orders {
        out = out.into_iter().flat_map(|e| (0..n).map(move |k| [e.clone(), vec![k]].concat())).collect();
    }
    out
}

fn group_index(orders: &[u32], e: &[u32]) -> usize {
    orders.iter().zip(e).fold(0, |acc, (&n, &k)| acc * n as usize + k as usize)
}

pub fn standard_bicharacter(orders: &[u32]) -> Vec<Vec<CycNum>> {
    let els = ty_elements(orders);
    els.iter()
        .map(|a| {
            els.iter()
                .map(|b| {
                    orders.iter().enumerate().fold(CycNum::one(), |acc, (k, &n)| {
                        acc.mul(&CycNum::root_of_unity(n, (a[k] * b[k]) as i64))
                    })
                })
                .collect()
        })
        .collect()
}

/// The function algebra `k(A)` with idempotent basis `p_a`.
pub fn function_algebra(orders: &[u32]) -> Result<HopfAlgebra> {
    if orders.is_empty() || orders.iter().any(|&n| n == 0) {
        return Err(Error::InvalidInput("A needs positive cyclic orders".into()));
    }
    let els = ty_elements(orders);
    let labels: Vec<String> = els.iter().map(|e| format!("p{e:?}")).collect();
    let carrier = GObject::even(&labels);
    let d = els.len();
    let sub = |a: &[u32], b: &[u32]| -> Vec<u32> {
        orders.iter().enumerate().map(|(k, &n)| (a[k] + n - b[k]) % n).collect()
    };
    let neg = |a: &[u32]| -> Vec<u32> { orders.iter().enumerate().map(|(k, &n)| (n - a[k]) % n).collect() };
    let s = Mor::from_fn(&carrier, &carrier, |i, j| {
        if i == group_index(orders, &neg(&els[j])) {
            CycNum::one()
        } else {
            CycNum::zero()
        }
    });
    let eta = vec![CycNum::one(); d];
    let h = from_tables(
        carrier.clone(),
        |i, j| if i == j { vec![(i, CycNum::one())] } else { vec![] },
        |i| (0..d).map(|b| (b, group_index(orders, &sub(&els[i], &els[b])), CycNum::one())).collect(),
        0,
        basis_vector(d, 0),
        Some(s),
    )?;
    // the unit is Σ p_a, not a basis vector
    let eta = Mor::element(&carrier, eta)?;
    HopfAlgebra::new(h.carrier, h.mu, eta, h.delta, h.eps, Some(h.s))
}

pub fn is_elementary_2_group(orders: &[u32]) -> bool {
    orders.iter().all(|&n| n == 2 || n == 1)
}

pub fn build_ty(p: &TyParams) -> Result<ExampleData> {
    let h = function_algebra(&p.orders)?;
    let d = h.dim();
    let chi = p.chi.clone().unwrap_or_else(|| standard_bicharacter(&p.orders));
    if chi.len() != d || chi.iter().any(|r| r.len() != d) {
        return Err(Error::Shape(format!("χ must be a {d}×{d} table")));
    }
    let gamma = h.el_n(2, chi.iter().flatten().cloned().collect())?;
    let lambda = h.functional(vec![p.c.clone(); d])?;
    let mut choices = vec![format!("c = {}", p.c)];
    let (sigma, beta) = match (&p.sigma, &p.beta) {
        (None, None) => (None, None),
        (Some(s), Some(b)) => {
            if !is_elementary_2_group(&p.orders) {
                return Err(Error::BraidingImpossible(format!(
                    "A = {:?} is not an elementary abelian 2-group",
                    p.orders
                )));
            }
            choices.push(format!("beta = {b}"));
            (Some(h.el(s.clone())?), Some(b.clone()))
        }
        _ => return Err(Error::InvalidInput("σ and β must be given together".into())),
    };
    Ok(ExampleData { name: format!("ty{:?}", p.orders), hopf: h, gamma, lambda, sigma, beta, choices })
}

/// Candidate `(σ, β)` pairs for `A = (Z/2)^n`: ε-normalised functions with values in
/// `{±1, ±i}`, each with both square roots of `λ(σ)` (skipped when `λ(σ)` is not a root
/// of unity). Refused for other groups.
pub fn ty_braiding_candidates(p: &TyParams) -> Result<Vec<(Vec<CycNum>, CycNum)>> {
    if !is_elementary_2_group(&p.orders) {
        return Err(Error::BraidingImpossible(format!("A = {:?} is not an elementary abelian 2-group", p.orders)));
    }
    let d: usize = p.orders.iter().map(|&n| n as usize).product();
    let fourth: Vec<CycNum> = (0..4).map(|k| CycNum::root_of_unity(4, k)).collect();
    let mut out = Vec::new();
    let total = 4usize.pow(d as u32 - 1);
    for code in 0..total {
        let mut s = vec![CycNum::one()];
        let mut c = code;
        for _ in 1..d {
            s.push(fourth[c % 4].clone());
            c /= 4;
        }
        let lam_sigma = s.iter().fold(CycNum::zero(), |acc, v| acc.add(v)).mul(&p.c);
        for principal in [true, false] {
            if let Ok(beta) = lam_sigma.sqrt_root_of_unity(principal) {
                out.push((s.clone(), beta));
            }
        }
    }
    Ok(out)
}

// ---- symplectic fermions -----------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SfParams {
    pub d: usize,
    /// `ζ ∈ {±1}`.
    pub zeta: i8,
    /// `√−1 = +i` if true, `−i` otherwise.
    pub i_plus: bool,
    /// Principal square root for `β` if true.
    pub beta_principal: bool,
}

fn subsets(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 0..=d {
        let mut c: Vec<usize> = (0..k).collect();
        loop {
            out.push(c.clone());
            // next combination
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if c[i] < d - k + i {
                    c[i] += 1;
                    for j in i + 1..k {
                        c[j] = c[j - 1] + 1;
                    }
                    i = usize::MAX;
                    break;
                }
            }
            if i != usize::MAX {
                break;
            }
        }
    }
    out
}

/// The exterior algebra on `d` odd primitive generators, as a Hopf algebra in `svect`.
/// The product is fixed on ordered monomials; the coproduct is extended
/// multiplicatively from `Δ(a_i) = a_i⊗1 + 1⊗a_i` with the Koszul-signed product on
/// `H⊗H`, and the antipode is solved from the bubble property.
pub fn exterior_algebra(d: usize) -> Result<HopfAlgebra> {
    let subs = subsets(d);
    let n = subs.len();
    let index = |s: &[usize]| subs.iter().position(|t| t == s).expect("subset");
    let labels: Vec<String> = subs
        .iter()
        .map(|s| if s.is_empty() { "1".into() } else { s.iter().map(|i| format!("a{}", i + 1)).collect() })
        .collect();
    let parity: Vec<u8> = subs.iter().map(|s| (s.len() % 2) as u8).collect();
    let carrier = GObject::new(labels, parity)?;
    let merge = |a: &[usize], b: &[usize]| -> Option<(usize, CycNum)> {
        if a.iter().any(|x| b.contains(x)) {
            return None;
        }
        let inversions = a.iter().map(|x| b.iter().filter(|y| x > y).count()).sum::<usize>();
        let mut m: Vec<usize> = a.iter().chain(b).copied().collect();
        m.sort();
        Some((index(&m), CycNum::int(if inversions % 2 == 0 { 1 } else { -1 })))
    };
    // provisional coproduct on generators only; products of generators are then used
    let hh = carrier.tensor(&carrier);
    let mut mu = Mor::zero(&hh, &carrier);
    for i in 0..n {
        for j in 0..n {
            if let Some((k, c)) = merge(&subs[i], &subs[j]) {
                mu.set(k, i * n + j, c);
            }
        }
    }
    let eta = Mor::element(&carrier, basis_vector(n, 0))?;
    let eps = Mor::functional(&carrier, basis_vector(n, 0))?;
    let provisional = HopfAlgebra {
        carrier: carrier.clone(),
        mu: mu.clone(),
        eta: eta.clone(),
        delta: Mor::zero(&carrier, &hh),
        eps: eps.clone(),
        s: Mor::identity(&carrier),
        s_inv: Mor::identity(&carrier),
    };
    let one = Mor::element(&carrier, basis_vector(n, 0))?;
    let mut delta = Mor::zero(&carrier, &hh);
    for (k, s) in subs.iter().enumerate() {
        let mut acc = kron_el(&provisional, &one, &one)?;
        for &g in s {
            let a = Mor::element(&carrier, basis_vector(n, index(&[g])))?;
            let dg = kron_el(&provisional, &a, &one)?.add(&kron_el(&provisional, &one, &a)?)?;
            acc = provisional.mult_tensor(&acc, &dg)?;
        }
        for r in 0..n * n {
            delta.set(r, k, acc.get(r, 0).clone());
        }
    }
    HopfAlgebra::new(carrier, mu, eta, delta, eps, None)
}

/// Generator `a_i` (0-based) of the exterior algebra.
pub fn sf_generator(h: &HopfAlgebra, i: usize) -> Mor {
    let k = h.carrier.basis.iter().position(|l| *l == format!("a{}", i + 1)).expect("generator");
    h.basis_el(k)
}

/// `C = Σ b_i ⊗ a_i` with `b = (a₂, −a₁, a₄, −a₃, …)`.
pub fn sf_copairing_c(h: &HopfAlgebra, d: usize) -> Result<Mor> {
    let mut c = Mor::zero(&GObject::unit(), &h.power(2));
    for m in 0..d / 2 {
        let (a1, a2) = (sf_generator(h, 2 * m), sf_generator(h, 2 * m + 1));
        c = c.add(&kron_el(h, &a2, &a1)?)?;
        c = c.sub(&kron_el(h, &a1, &a2)?)?;
    }
    Ok(c)
}

/// `Ĉ = −2 Σ a_{2m−1} a_{2m}`.
pub fn sf_c_hat(h: &HopfAlgebra, d: usize) -> Result<Mor> {
    let mut c = Mor::zero(&GObject::unit(), &h.carrier);
    for m in 0..d / 2 {
        let p = h.mult(&sf_generator(h, 2 * m), &sf_generator(h, 2 * m + 1))?;
        c = c.add(&p.scale(&CycNum::int(-2)))?;
    }
    Ok(c)
}

pub fn build_sf(p: &SfParams) -> Result<ExampleData> {
    if p.d == 0 || p.d % 2 == 1 {
        return Err(Error::InvalidInput(format!("d = {} must be even and positive", p.d)));
    }
    if p.zeta != 1 && p.zeta != -1 {
        return Err(Error::InvalidInput("ζ must be ±1".into()));
    }
    if p.d > 8 {
        return Err(Error::SizeLimit(1 << p.d, 256));
    }
    let d = p.d;
    let h = exterior_algebra(d)?;
    let one2 = kron_el(&h, &h.eta, &h.eta)?;
    let c = sf_copairing_c(&h, d)?;
    let gamma = exp_nilpotent(&h, &c, &one2)?;
    let ch = sf_c_hat(&h, d)?;
    let mut top = h.eta.clone();
    for _ in 0..d / 2 {
        top = h.mult(&top, &ch)?;
    }
    let top_index = h.dim() - 1;
    let vol = top.entries[top_index].inv()?;
    let sqrt_m1 = if p.i_plus { CycNum::i() } else { CycNum::i().neg() };
    let fact: i64 = (1..=(d / 2) as i64).product();
    let coef = CycNum::int(p.zeta as i64 * fact)
        .mul(&sqrt_m1.scale(&crate::cyclofield::Rat::int(2)).pow((d / 2) as u32))
        .mul(&vol);
    let mut lam = vec![CycNum::zero(); h.dim()];
    lam[top_index] = coef;
    let lambda = h.functional(lam)?;
    let sigma = exp_nilpotent(&h, &ch.scale(&CycNum::frac(1, 2)), &h.eta)?;
    let b2 = lambda.compose(&sigma)?.entries[0].clone();
    let beta = b2.sqrt_root_of_unity(p.beta_principal)?;
    let choices = vec![
        format!("sqrt(-1) = {sqrt_m1}"),
        format!("beta = {beta} ({} root of {b2})", if p.beta_principal { "principal" } else { "other" }),
    ];
    Ok(ExampleData { name: format!("sf{d}"), hopf: h, gamma, lambda, sigma: Some(sigma), beta: Some(beta), choices })
}

// ---- Sweedler ----------------------------------------------------------------------

/// `H4` with basis `1, g, x, gx` (index `a + 2b` for `g^a x^b`).
pub fn sweedler() -> Result<HopfAlgebra> {
    let carrier = GObject::even(&["1", "g", "x", "gx"]);
    let mult = |i: usize, j: usize| -> Vec<(usize, CycNum)> {
        let (a, b, c, e) = (i % 2, i / 2, j % 2, j / 2);
        if b + e >= 2 {
            return vec![];
        }
        // x g = −g x
        let s = if b * c == 1 { -1 } else { 1 };
        vec![((a + c) % 2 + 2 * (b + e), CycNum::int(s))]
    };
    let one = CycNum::one;
    let cop = |i: usize| -> Vec<(usize, usize, CycNum)> {
        match i {
            0 => vec![(0, 0, one())],
            1 => vec![(1, 1, one())],
            2 => vec![(0, 2, one()), (2, 1, one())],
            _ => vec![(1, 3, one()), (3, 0, one())],
        }
    };
    let eps = vec![one(), one(), CycNum::zero(), CycNum::zero()];
    from_tables(carrier, mult, cop, 0, eps, None)
}

/// `γ_s`.
pub fn sweedler_gamma(h: &HopfAlgebra, s: &CycNum) -> Result<Mor> {
    let half = CycNum::frac(1, 2);
    let hs = s.mul(&half);
    let mut v = vec![CycNum::zero(); 16];
    for (a, b, c) in [(0, 0, half.clone()), (0, 1, half.clone()), (1, 0, half.clone()), (1, 1, half.neg())] {
        v[a * 4 + b] = c;
    }
    for (a, b, c) in [(2, 2, hs.clone()), (2, 3, hs.clone()), (3, 2, hs.clone()), (3, 3, hs.neg())] {
        v[a * 4 + b] = c;
    }
    h.el_n(2, v)
}

pub fn sweedler_lambda(h: &HopfAlgebra, t: &CycNum) -> Result<Mor> {
    h.functional(vec![CycNum::zero(), CycNum::zero(), CycNum::zero(), t.clone()])
}

/// `(γ_{2/t²}, λ_t)`.
pub fn build_sweedler(t: &CycNum) -> Result<ExampleData> {
    if t.is_zero() {
        return Err(Error::InvalidInput("t must be nonzero".into()));
    }
    let h = sweedler()?;
    let s = CycNum::int(2).mul(&t.mul(t).inv()?);
    let gamma = sweedler_gamma(&h, &s)?;
    let lambda = sweedler_lambda(&h, t)?;
    Ok(ExampleData {
        name: "sweedler".into(),
        hopf: h,
        gamma,
        lambda,
        sigma: None,
        beta: None,
        choices: vec![format!("t = {t}"), format!("s = {s}")],
    })
}

/// The automorphism `f_c`: `g ↦ g`, `x ↦ cx`.
pub fn sweedler_rescaling(c: &CycNum) -> Mor {
    let carrier = GObject::even(&["1", "g", "x", "gx"]);
    Mor::from_fn(&carrier, &carrier, |i, j| {
        if i != j {
            CycNum::zero()
        } else if i >= 2 {
            c.clone()
        } else {
            CycNum::one()
        }
    })
}

/// Exhaustive search for invertible `σ` with `Δ(σ) = (σ⊗1)·γ·(1⊗σ)` (the copairing
/// condition a′, multiplied out). Example-scale only: `σ = p + qg + (rx + w gx)/t`
/// with `p, q ∈ {(u + v i)/2 : |u|,|v| ≤ 2}` and `r, w ∈ {u + v i : |u|,|v| ≤ 1}`. The
/// condition is homogeneous in the `x`-degree, so `(p, q)` is fixed first from the
/// degree-zero part.
pub fn sweedler_sigma_search(data: &ExampleData, t: &CycNum) -> Result<Vec<Mor>> {
    let h = &data.hopf;
    let i = CycNum::i();
    let gauss = |range: i64, denom: i64| -> Vec<CycNum> {
        let mut v = Vec::new();
        for u in -range..=range {
            for w in -range..=range {
                v.push(CycNum::frac(u, denom).add(&i.mul(&CycNum::frac(w, denom))));
            }
        }
        v
    };
    let grouplike = gauss(2, 2);
    let nilpotent: Vec<CycNum> = gauss(1, 1).into_iter().map(|c| c.div(t)).collect::<Result<_>>()?;
    let residual = |sigma: &Mor| -> Result<Mor> {
        let lhs = h.delta.compose(sigma)?;
        let left = kron_el(h, sigma, &h.eta)?;
        let right = kron_el(h, &h.eta, sigma)?;
        let rhs = h.mult_tensor(&h.mult_tensor(&left, &data.gamma)?, &right)?;
        lhs.sub(&rhs)
    };
    let degree_zero = [0usize, 1, 4, 5];
    let mut out = Vec::new();
    for p in &grouplike {
        for q in &grouplike {
            if p.is_zero() && q.is_zero() {
                continue;
            }
            let s0 = h.el(vec![p.clone(), q.clone(), CycNum::zero(), CycNum::zero()])?;
            let res = residual(&s0)?;
            if degree_zero.iter().any(|&k| !res.entries[k].is_zero()) {
                continue;
            }
            for r in &nilpotent {
                for w in &nilpotent {
                    let s = h.el(vec![p.clone(), q.clone(), r.clone(), w.clone()])?;
                    if residual(&s)?.is_zero() && h.mult_inverse(&s).is_ok() {
                        out.push(s);
                    }
                }
            }
        }
    }
    Ok(out)
}

// ---- H16 ---------------------------------------------------------------------------

/// Elements `(m, n, u)` of `(Z/2 × Z/2) ⋉ Z/4`, index `8m + 4n + u`.
fn h16_elements() -> Vec<(u32, u32, u32)> {
    let mut v = Vec::new();
    for m in 0..2 {
        for n in 0..2 {
            for u in 0..4 {
                v.push((m, n, u));
            }
        }
    }
    v
}

fn h16_index(e: (u32, u32, u32)) -> usize {
    (e.0 * 8 + e.1 * 4 + e.2) as usize
}

fn h16_mul(a: (u32, u32, u32), b: (u32, u32, u32)) -> (u32, u32, u32) {
    let u = if a.1 == 0 { a.2 + b.2 } else { a.2 + 4 - b.2 };
    ((a.0 + b.0) % 2, (a.1 + b.1) % 2, u % 4)
}

/// The group algebra `k[G̃]` (Hopf structure with group-like basis).
fn h16_group_algebra() -> Result<HopfAlgebra> {
    let els = h16_elements();
    let labels: Vec<String> = els.iter().map(|e| format!("g{}{}{}", e.0, e.1, e.2)).collect();
    let carrier = GObject::even(&labels);
    let inverse = |a: (u32, u32, u32)| *els.iter().find(|&&b| h16_mul(a, b) == (0, 0, 0)).expect("group");
    let s = Mor::from_fn(&carrier, &carrier, |i, j| {
        if i == h16_index(inverse(els[j])) {
            CycNum::one()
        } else {
            CycNum::zero()
        }
    });
    from_tables(
        carrier,
        |i, j| vec![(h16_index(h16_mul(els[i], els[j])), CycNum::one())],
        |i| vec![(i, i, CycNum::one())],
        0,
        vec![CycNum::one(); 16],
        Some(s),
    )
}

/// The twist `J̄ = ¼ Σ_{x,y} ψ_y(x) p(x) ⊗ (0,0;y)` with `ψ_y(x) = i^{xy}` and
/// `p: Z/4 → Z/2×Z/2` sending `0,1,2,3` to `(0,0),(0,1),(1,0),(1,1)`; and its inverse.
fn h16_twist(g: &HopfAlgebra) -> Result<(Mor, Mor)> {
    let p = |x: u32| -> (u32, u32) {
        match x % 4 {
            0 => (0, 0),
            1 => (0, 1),
            2 => (1, 0),
            _ => (1, 1),
        }
    };
    let mut j = vec![CycNum::zero(); 256];
    let mut jinv = vec![CycNum::zero(); 256];
    for x in 0..4u32 {
        for y in 0..4u32 {
            let (m, n) = p(x);
            let (mi, ni) = p(4 - x);
            let yy = h16_index((0, 0, y));
            let psi = CycNum::root_of_unity(4, (x * y) as i64).scale(&crate::cyclofield::Rat::frac(1, 4));
            let psi_inv = CycNum::root_of_unity(4, -((x * y) as i64)).scale(&crate::cyclofield::Rat::frac(1, 4));
            j[h16_index((m, n, 0)) * 16 + yy].add_assign(&psi);
            jinv[h16_index((mi, ni, 0)) * 16 + yy].add_assign(&psi_inv);
        }
    }
    let j = g.el_n(2, j)?;
    let jinv = g.el_n(2, jinv)?;
    if g.mult_tensor(&j, &jinv)? != kron_el(g, &g.eta, &g.eta)? {
        return Err(Error::InvalidInput("twist is not invertible".into()));
    }
    Ok((j, jinv))
}

/// The displayed `σ ∈ H16`.
pub fn h16_sigma(h: &HopfAlgebra) -> Result<Mor> {
    let i = CycNum::i();
    let (one, m1, mi) = (CycNum::one(), CycNum::int(-1), i.neg());
    let coef: [((u32, u32, u32), CycNum); 16] = [
        ((0, 0, 0), one.clone()),
        ((0, 0, 1), i.clone()),
        ((0, 0, 2), m1.clone()),
        ((0, 0, 3), mi.clone()),
        ((0, 1, 0), one.clone()),
        ((0, 1, 1), one.clone()),
        ((0, 1, 2), one.clone()),
        ((0, 1, 3), one.clone()),
        ((1, 0, 0), one.clone()),
        ((1, 0, 1), mi.clone()),
        ((1, 0, 2), m1.clone()),
        ((1, 0, 3), i.clone()),
        ((1, 1, 0), one.clone()),
        ((1, 1, 1), m1.clone()),
        ((1, 1, 2), one.clone()),
        ((1, 1, 3), m1),
    ];
    let mut v = vec![CycNum::zero(); 16];
    for (e, c) in coef {
        v[h16_index(e)] = c.scale(&crate::cyclofield::Rat::frac(1, 4));
    }
    h.el(v)
}

/// `H16` by twisting `k[G̃]` with `J̄`: `Δ(a) = J̄⁻¹ (a⊗a) J̄`, `S(a) = Q̄⁻¹ S₀(a) Q̄` with
/// `Q̄ = μ∘(S₀⊗id)(J̄)`. Also returns `J̄` and `J̄⁻¹`.
pub fn h16_hopf() -> Result<(HopfAlgebra, Mor, Mor)> {
    let g = h16_group_algebra()?;
    let (j, jinv) = h16_twist(&g)?;
    let hh = g.power(2);
    let mut delta = Mor::zero(&g.carrier, &hh);
    for k in 0..16 {
        let e = g.basis_el(k);
        let col = g.mult_tensor(&g.mult_tensor(&jinv, &kron_el(&g, &e, &e)?)?, &j)?;
        for r in 0..256 {
            delta.set(r, k, col.get(r, 0).clone());
        }
    }
    let mut st = g.state_of(&j)?;
    g.s_at(&mut st, 0)?;
    g.mul_at(&mut st, 0)?;
    let q = g.el(st.dense())?;
    let qinv = g.mult_inverse(&q)?;
    let s = g.left_mult_operator(&qinv)?.compose(&g.right_mult_operator(&q)?)?.compose(&g.s)?;
    let h = HopfAlgebra::new(g.carrier.clone(), g.mu.clone(), g.eta.clone(), delta, g.eps.clone(), Some(s))?;
    Ok((h, j, jinv))
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct H16Params {
    pub zeta: i8,
    pub beta_principal: bool,
}

pub fn build_h16(p: &H16Params) -> Result<ExampleData> {
    if p.zeta != 1 && p.zeta != -1 {
        return Err(Error::InvalidInput("ζ must be ±1".into()));
    }
    let (h, _, _) = h16_hopf()?;
    let sigma = h16_sigma(&h)?;
    let sinv = h.mult_inverse(&sigma)?;
    let ds = h.delta.compose(&sigma)?;
    let gamma = h.mult_tensor(&h.mult_tensor(&kron_el(&h, &sinv, &h.eta)?, &ds)?, &kron_el(&h, &h.eta, &sinv)?)?;
    let mut lam = vec![CycNum::zero(); 16];
    lam[0] = CycNum::int(4 * p.zeta as i64);
    let lambda = h.functional(lam)?;
    let b2 = lambda.compose(&sigma)?.entries[0].clone();
    let beta = b2.sqrt_root_of_unity(p.beta_principal)?;
    let choices = vec![format!("zeta = {}", p.zeta), format!("beta = {beta}")];
    Ok(ExampleData { name: "h16".into(), hopf: h, gamma, lambda, sigma: Some(sigma), beta: Some(beta), choices })
}

/// `(R-matrix via the twist) R = J̄₂₁⁻¹ J̄`.
pub fn h16_twist_r_matrix() -> Result<Mor> {
    let (h, j, jinv) = h16_hopf()?;
    let mut st = h.state_of(&jinv)?;
    st.swap(0)?;
    let jinv21 = h.el_n(2, st.dense())?;
    h.mult_tensor(&jinv21, &j)
}

/// `x` as a state, for callers building leg computations.
pub fn element_state(h: &HopfAlgebra, x: &Mor) -> Result<State> {
    h.state_of(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::verify_hopf;

    #[test]
    fn sweedler_is_hopf() {
        let h = sweedler().unwrap();
        assert!(verify_hopf(&h).unwrap().all_pass());
        // S(x) = gx, S(gx) = −x
        assert_eq!(*h.s.get(3, 2), CycNum::one());
        assert_eq!(*h.s.get(2, 3), CycNum::int(-1));
    }

    #[test]
    fn exterior_algebra_d2() {
        let h = exterior_algebra(2).unwrap();
        assert!(verify_hopf(&h).unwrap().all_pass());
        assert_eq!(h.carrier.basis.as_slice(), ["1", "a1", "a2", "a1a2"]);
        // S(a_i) = −a_i, and the braided anti-multiplicativity gives S(a1a2) = a1a2
        assert_eq!(*h.s.get(1, 1), CycNum::int(-1));
        assert_eq!(*h.s.get(3, 3), CycNum::one());
        let s2 = h.s.compose(&h.s).unwrap();
        assert_eq!(s2, Mor::identity(&h.carrier));
    }

    #[test]
    fn function_algebra_z2() {
        let h = function_algebra(&[2]).unwrap();
        assert!(verify_hopf(&h).unwrap().all_pass());
    }

    #[test]
    fn h16_twisted_is_hopf() {
        let (h, _, _) = h16_hopf().unwrap();
        let r = verify_hopf(&h).unwrap();
        assert!(r.all_pass(), "{:?}", r.failing_ids());
    }

    #[test]
    fn subsets_ordered() {
        assert_eq!(subsets(2), vec![vec![], vec![0], vec![1], vec![0, 1]]);
        assert_eq!(subsets(4).len(), 16);
    }
}
