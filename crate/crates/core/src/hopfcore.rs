//! Hopf algebras in `vect`/`svect`: structure tensors, axiom checks, derived
//! Hopf algebras, (co)integrals, the distinguished group-like and modules.

use serde::{Deserialize, Serialize};

use crate::cyclofield::CycNum;
use crate::error::{Error, Result};
use crate::gvect::{self, dual_data, GObject, Mor, State};
use crate::report::{state_witness, Report};

/// Product-to-state threshold: identities on inputs larger than this are
/// checked slice by slice (all input legs but the last fixed to basis vectors).
const WHOLE_INPUT_LIMIT: usize = 256;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HopfAlgebra {
    pub carrier: GObject,
    pub mu: Mor,
    pub eta: Mor,
    pub delta: Mor,
    pub eps: Mor,
    pub s: Mor,
    pub s_inv: Mor,
}

/// Left or right (co)integrals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OpCop {
    Op,
    Cop,
}

/// Evaluate two composites on the same input legs and compare them exactly.
pub fn compare_maps<F, G>(inputs: &[GObject], lhs: F, rhs: G) -> Result<Option<String>>
where
    F: Fn(&mut State) -> Result<()>,
    G: Fn(&mut State) -> Result<()>,
{
    let total: usize = inputs.iter().map(GObject::dim).product();
    if inputs.len() <= 1 || total <= WHOLE_INPUT_LIMIT {
        let mut a = State::identity(inputs.to_vec());
        let mut b = a.clone();
        lhs(&mut a)?;
        rhs(&mut b)?;
        return Ok(state_witness(&a, &b));
    }
    let (fixed, last) = inputs.split_at(inputs.len() - 1);
    let dims: Vec<usize> = fixed.iter().map(GObject::dim).collect();
    let mut digits = vec![0usize; fixed.len()];
    loop {
        let mut factors: Vec<(GObject, Option<Vec<CycNum>>)> = fixed
            .iter()
            .zip(&digits)
            .map(|(g, &d)| (g.clone(), Some(basis_vector(g.dim(), d))))
            .collect();
        factors.push((last[0].clone(), None));
        let mut a = State::product(factors)?;
        let mut b = a.clone();
        lhs(&mut a)?;
        rhs(&mut b)?;
        if let Some(w) = state_witness(&a, &b) {
            return Ok(Some(format!("input basis {digits:?}: {w}")));
        }
        let mut i = fixed.len();
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < dims[i] {
                break;
            }
            digits[i] = 0;
        }
    }
}

pub fn basis_vector(n: usize, k: usize) -> Vec<CycNum> {
    let mut v = vec![CycNum::zero(); n];
    v[k] = CycNum::one();
    v
}

impl HopfAlgebra {
    /// Build from structure tensors; `S⁻¹` is computed by inversion. If `s` is
    /// `None` the antipode is solved from the bubble property.
    pub fn new(carrier: GObject, mu: Mor, eta: Mor, delta: Mor, eps: Mor, s: Option<Mor>) -> Result<Self> {
        let d = carrier.dim();
        let hh = carrier.tensor(&carrier);
        let shape = |m: &Mor, r: usize, c: usize, name: &str| -> Result<()> {
            if m.rows() != r || m.cols() != c {
                return Err(Error::Shape(format!("{name} is {}×{}, expected {r}×{c}", m.rows(), m.cols())));
            }
            Ok(())
        };
        shape(&mu, d, d * d, "μ")?;
        shape(&eta, d, 1, "η")?;
        shape(&delta, d * d, d, "Δ")?;
        shape(&eps, 1, d, "ε")?;
        let mu = mu.with_objects(&hh, &carrier)?;
        let eta = eta.with_objects(&GObject::unit(), &carrier)?;
        let delta = delta.with_objects(&carrier, &hh)?;
        let eps = eps.with_objects(&carrier, &GObject::unit())?;
        let s = match s {
            Some(s) => {
                shape(&s, d, d, "S")?;
                s.with_objects(&carrier, &carrier)?
            }
            None => solve_antipode(&carrier, &mu, &eta, &delta, &eps)?,
        };
        let s_inv = s.inverse().map_err(|_| Error::NoInverse)?;
        Ok(HopfAlgebra { carrier, mu, eta, delta, eps, s, s_inv })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn leg(&self) -> GObject {
        self.carrier.clone()
    }

    pub fn legs(&self, n: usize) -> Vec<GObject> {
        vec![self.carrier.clone(); n]
    }

    /// `H^{⊗n}` as a single graded space.
    pub fn power(&self, n: usize) -> GObject {
        GObject::tensor_all(&self.legs(n))
    }

    pub fn is_super(&self) -> bool {
        !self.carrier.is_even()
    }

    /// Element of `H` from coordinates.
    pub fn el(&self, coords: Vec<CycNum>) -> Result<Mor> {
        Mor::element(&self.carrier, coords)
    }

    /// Element of `H^{⊗n}` from flat coordinates.
    pub fn el_n(&self, n: usize, coords: Vec<CycNum>) -> Result<Mor> {
        Mor::element(&self.power(n), coords)
    }

    pub fn basis_el(&self, k: usize) -> Mor {
        Mor::element(&self.carrier, basis_vector(self.dim(), k)).expect("basis")
    }

    pub fn one(&self) -> Mor {
        self.eta.clone()
    }

    /// Functional `H → 1`.
    pub fn functional(&self, values: Vec<CycNum>) -> Result<Mor> {
        Mor::functional(&self.carrier, values)
    }

    // ---- leg operations on states -------------------------------------------------

    pub fn mul_at(&self, st: &mut State, pos: usize) -> Result<()> {
        st.apply(pos, 2, &self.mu, vec![self.leg()]).map(|_| ())
    }

    pub fn delta_at(&self, st: &mut State, pos: usize) -> Result<()> {
        st.apply(pos, 1, &self.delta, self.legs(2)).map(|_| ())
    }

    pub fn map_at(&self, st: &mut State, pos: usize, f: &Mor) -> Result<()> {
        st.apply(pos, 1, f, vec![self.leg()]).map(|_| ())
    }

    pub fn s_at(&self, st: &mut State, pos: usize) -> Result<()> {
        self.map_at(st, pos, &self.s)
    }

    pub fn sinv_at(&self, st: &mut State, pos: usize) -> Result<()> {
        self.map_at(st, pos, &self.s_inv)
    }

    /// Apply a functional `H → 1` to one leg.
    pub fn func_at(&self, st: &mut State, pos: usize, f: &Mor) -> Result<()> {
        st.apply(pos, 1, f, vec![]).map(|_| ())
    }

    pub fn eps_at(&self, st: &mut State, pos: usize) -> Result<()> {
        self.func_at(st, pos, &self.eps)
    }

    /// Insert an element of `H^{⊗n}` (`n` = number of its legs) at leg position `pos`.
    pub fn insert_at(&self, st: &mut State, pos: usize, x: &Mor) -> Result<()> {
        let n = self.tensor_degree(x)?;
        st.insert(pos, x, self.legs(n)).map(|_| ())
    }

    fn tensor_degree(&self, x: &Mor) -> Result<usize> {
        let d = self.dim();
        let mut n = 0;
        let mut size = 1;
        while size < x.rows() {
            size *= d;
            n += 1;
        }
        if size != x.rows() || x.cols() != 1 {
            return Err(Error::Shape(format!("{}-dimensional element is not in a power of H", x.rows())));
        }
        Ok(n)
    }

    /// State holding the element `x ∈ H^{⊗n}`.
    pub fn state_of(&self, x: &Mor) -> Result<State> {
        let n = self.tensor_degree(x)?;
        State::element(self.legs(n), &x.entries)
    }

    // ---- elements ------------------------------------------------------------------

    pub fn apply(&self, f: &Mor, x: &Mor) -> Result<Mor> {
        f.compose(x)
    }

    pub fn mult(&self, x: &Mor, y: &Mor) -> Result<Mor> {
        self.mu.compose(&x.tensor(y))
    }

    /// Product in `H^{⊗n}` with the braided (Koszul-signed) multiplication.
    pub fn mult_tensor(&self, x: &Mor, y: &Mor) -> Result<Mor> {
        let n = self.tensor_degree(x)?;
        if self.tensor_degree(y)? != n {
            return Err(Error::Shape("factors live in different powers of H".into()));
        }
        let mut st = State::element(self.legs(2 * n), &x.tensor(y).entries)?;
        let perm: Vec<usize> = (0..n).flat_map(|i| [i, n + i]).collect();
        st.permute(&perm)?;
        for i in 0..n {
            self.mul_at(&mut st, i)?;
        }
        Ok(st.to_mor().with_objects(&GObject::unit(), &self.power(n))?)
    }

    pub fn left_mult_operator(&self, x: &Mor) -> Result<Mor> {
        let mut st = State::identity(vec![self.leg()]);
        self.insert_at(&mut st, 0, x)?;
        self.mul_at(&mut st, 0)?;
        st.to_mor().with_objects(&self.carrier, &self.carrier)
    }

    pub fn right_mult_operator(&self, x: &Mor) -> Result<Mor> {
        let mut st = State::identity(vec![self.leg()]);
        self.insert_at(&mut st, 1, x)?;
        self.mul_at(&mut st, 0)?;
        st.to_mor().with_objects(&self.carrier, &self.carrier)
    }

    /// Two-sided inverse of `x`, or `NoInverse`.
    pub fn mult_inverse(&self, x: &Mor) -> Result<Mor> {
        let l = self.left_mult_operator(x)?;
        let y = gvect::solve(&l.entries, l.rows(), l.cols(), &self.eta.entries).ok_or(Error::NoInverse)?;
        let y = self.el(y)?;
        if self.mult(&y, x)? != self.eta {
            return Err(Error::NoInverse);
        }
        Ok(y)
    }

    /// `Ad_x = ₓM ∘ M_{x⁻¹}`.
    pub fn ad(&self, x: &Mor) -> Result<Mor> {
        let xi = self.mult_inverse(x)?;
        self.left_mult_operator(x)?.compose(&self.right_mult_operator(&xi)?)
    }

    pub fn is_grouplike(&self, x: &Mor) -> bool {
        let Ok(dx) = self.delta.compose(x) else { return false };
        let Ok(ex) = self.eps.compose(x) else { return false };
        dx.entries == x.tensor(x).entries && ex.entries[0].is_one()
    }

    /// `c_{H,H}` on `H ⊗ H`.
    pub fn swap(&self) -> Mor {
        gvect::braiding(&self.carrier, &self.carrier)
    }

    /// The parity involution `ω_H`.
    pub fn parity_operator(&self) -> Mor {
        Mor::from_fn(&self.carrier, &self.carrier, |i, j| {
            if i != j {
                CycNum::zero()
            } else if self.carrier.parity[i] == 1 {
                CycNum::int(-1)
            } else {
                CycNum::one()
            }
        })
    }

    pub fn is_commutative(&self) -> Result<Option<(usize, usize)>> {
        let c = self.mu.compose(&self.swap())?;
        Ok(c.first_difference(&self.mu).map(|(_, col, _, _)| (col / self.dim(), col % self.dim())))
    }

    /// A basis vector `e_k` with `Δ^{op}(e_k) ≠ Δ(e_k)`, if any.
    pub fn is_cocommutative(&self) -> Result<Option<usize>> {
        let c = self.swap().compose(&self.delta)?;
        Ok(c.first_difference(&self.delta).map(|(_, col, _, _)| col))
    }
}

/// Solve `μ∘(S⊗id)∘Δ = η∘ε` for `S` (used when a descriptor omits the antipode).
fn solve_antipode(h: &GObject, mu: &Mor, eta: &Mor, delta: &Mor, eps: &Mor) -> Result<Mor> {
    let d = h.dim();
    // unknown S[a][j] (row a, col j), index a*d+j; equation for each input x, output k:
    // Σ_{j,l} Δ[(j,l),x] Σ_a S[a][j] μ[k,(a,l)] = η_k ε_x
    let n = d * d;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for x in 0..d {
        for k in 0..d {
            let mut row = vec![CycNum::zero(); n];
            for j in 0..d {
                for l in 0..d {
                    let dv = delta.get(j * d + l, x);
                    if dv.is_zero() {
                        continue;
                    }
                    for a in 0..d {
                        let m = mu.get(k, a * d + l);
                        if !m.is_zero() {
                            row[a * d + j].mul_add_assign(dv, m);
                        }
                    }
                }
            }
            rows.extend(row);
            rhs.push(eta.get(k, 0).mul(eps.get(0, x)));
        }
    }
    let sol = gvect::solve(&rows, d * d, n, &rhs).ok_or_else(|| Error::InvalidInput("no antipode exists".into()))?;
    Mor::new(h.clone(), h.clone(), sol)
}

/// Itemised check of the Hopf-algebra axioms.
pub fn verify_hopf(h: &HopfAlgebra) -> Result<Report> {
    let mut r = Report::new("verify_hopf");
    let l1 = h.legs(1);
    let l2 = h.legs(2);
    let l3 = h.legs(3);
    r.push(
        "mu_associative",
        compare_maps(
            &l3,
            |s| {
                h.mul_at(s, 0)?;
                h.mul_at(s, 0)
            },
            |s| {
                h.mul_at(s, 1)?;
                h.mul_at(s, 0)
            },
        )?,
    );
    for (id, pos) in [("mu_unit_left", 0), ("mu_unit_right", 1)] {
        r.push(
            id,
            compare_maps(
                &l1,
                |s| {
                    h.insert_at(s, pos, &h.eta)?;
                    h.mul_at(s, 0)
                },
                |_| Ok(()),
            )?,
        );
    }
    r.push(
        "delta_coassociative",
        compare_maps(
            &l1,
            |s| {
                h.delta_at(s, 0)?;
                h.delta_at(s, 0)
            },
            |s| {
                h.delta_at(s, 0)?;
                h.delta_at(s, 1)
            },
        )?,
    );
    for (id, pos) in [("delta_counit_left", 0), ("delta_counit_right", 1)] {
        r.push(
            id,
            compare_maps(
                &l1,
                |s| {
                    h.delta_at(s, 0)?;
                    h.eps_at(s, pos)
                },
                |_| Ok(()),
            )?,
        );
    }
    r.push(
        "delta_multiplicative",
        compare_maps(
            &l2,
            |s| {
                h.mul_at(s, 0)?;
                h.delta_at(s, 0)
            },
            |s| {
                h.delta_at(s, 0)?;
                h.delta_at(s, 2)?;
                s.move_legs(2, 1, 1)?;
                h.mul_at(s, 0)?;
                h.mul_at(s, 1)
            },
        )?,
    );
    let dn = h.delta.compose(&h.eta)?;
    r.check_mor("delta_unit", &dn, &h.eta.tensor(&h.eta).with_objects(&GObject::unit(), &h.power(2))?);
    r.push(
        "eps_multiplicative",
        compare_maps(
            &l2,
            |s| {
                h.mul_at(s, 0)?;
                h.eps_at(s, 0)
            },
            |s| {
                h.eps_at(s, 0)?;
                h.eps_at(s, 0)
            },
        )?,
    );
    r.check_mor("eps_unit", &h.eps.compose(&h.eta)?, &Mor::scalar(CycNum::one()));
    let bubble = |left: bool| {
        compare_maps(
            &l1,
            move |s| {
                h.delta_at(s, 0)?;
                h.s_at(s, if left { 0 } else { 1 })?;
                h.mul_at(s, 0)
            },
            |s| {
                h.eps_at(s, 0)?;
                h.insert_at(s, 0, &h.eta)
            },
        )
    };
    r.push("antipode_left", bubble(true)?);
    r.push("antipode_right", bubble(false)?);
    let id = Mor::identity(&h.carrier);
    let ss = h.s.compose(&h.s_inv)?;
    let ss2 = h.s_inv.compose(&h.s)?;
    r.check("antipode_invertible", ss.entries == id.entries && ss2.entries == id.entries, || {
        "S ∘ S⁻¹ ≠ id".into()
    });
    r.check(
        "structure_maps_even",
        [&h.mu, &h.eta, &h.delta, &h.eps, &h.s].iter().all(|m| m.is_even()),
        || "a structure map changes parity".into(),
    );
    Ok(r)
}

/// The antipode identities: `S` is an algebra and coalgebra anti-homomorphism.
pub fn antipode_identities(h: &HopfAlgebra) -> Result<Report> {
    let mut r = Report::new("antipode_identities");
    r.push(
        "S_anti_multiplicative",
        compare_maps(
            &h.legs(2),
            |s| {
                h.mul_at(s, 0)?;
                h.s_at(s, 0)
            },
            |s| {
                h.s_at(s, 0)?;
                h.s_at(s, 1)?;
                s.swap(0)?;
                h.mul_at(s, 0)
            },
        )?,
    );
    r.push(
        "S_anti_comultiplicative",
        compare_maps(
            &h.legs(1),
            |s| {
                h.s_at(s, 0)?;
                h.delta_at(s, 0)
            },
            |s| {
                h.delta_at(s, 0)?;
                s.swap(0)?;
                h.s_at(s, 0)?;
                h.s_at(s, 1)
            },
        )?,
    );
    r.check_mor("S_unit", &h.s.compose(&h.eta)?, &h.eta);
    r.check_mor("eps_S", &h.eps.compose(&h.s)?, &h.eps);
    Ok(r)
}

/// Check that `f : a → b` is a morphism of Hopf algebras.
pub fn hopf_map_report(f: &Mor, a: &HopfAlgebra, b: &HopfAlgebra) -> Result<Report> {
    let mut r = Report::new("hopf_map");
    if f.rows() != b.dim() || f.cols() != a.dim() {
        return Err(Error::Shape("map does not go between the carriers".into()));
    }
    let f = f.clone().with_objects(&a.carrier, &b.carrier)?;
    r.push(
        "multiplicative",
        compare_maps(
            &a.legs(2),
            |s| {
                a.mul_at(s, 0)?;
                s.apply(0, 1, &f, vec![b.leg()]).map(|_| ())
            },
            |s| {
                s.apply(0, 1, &f, vec![b.leg()])?;
                s.apply(1, 1, &f, vec![b.leg()])?;
                b.mul_at(s, 0)
            },
        )?,
    );
    r.check_mor("unital", &f.compose(&a.eta)?, &b.eta);
    r.push(
        "comultiplicative",
        compare_maps(
            &a.legs(1),
            |s| {
                s.apply(0, 1, &f, vec![b.leg()])?;
                b.delta_at(s, 0)
            },
            |s| {
                a.delta_at(s, 0)?;
                s.apply(0, 1, &f, vec![b.leg()])?;
                s.apply(1, 1, &f, vec![b.leg()]).map(|_| ())
            },
        )?,
    );
    r.check_mor("counital", &b.eps.compose(&f)?, &a.eps);
    Ok(r)
}

/// The dual Hopf algebra on `H∨`, with products defined through the nested pairing
/// `⟨α⊗β, x⊗y⟩ = ⟨α, y⟩⟨β, x⟩`: `μ∨ = Δ^∨`, `Δ∨(α)(x⊗y) = α(yx)`, `η∨ = ε^∨`,
/// `ε∨ = η^∨`, `S∨ = S^∨`.
pub fn dual_hopf(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let d = h.dim();
    let hd = dual_data(&h.carrier).dual;
    let hdhd = hd.tensor(&hd);
    let mu = Mor::from_fn(&hdhd, &hd, |x, ab| h.delta.get((ab % d) * d + ab / d, x).clone());
    let delta = Mor::from_fn(&hd, &hdhd, |ab, z| h.mu.get(z, (ab % d) * d + ab / d).clone());
    let eta = Mor::element(&hd, h.eps.entries.clone())?;
    let eps = Mor::functional(&hd, h.eta.entries.clone())?;
    let s = h.s.transpose().with_objects(&hd, &hd)?;
    HopfAlgebra::new(hd, mu, eta, delta, eps, Some(s))
}

/// `H^op` (product `μ∘c⁻¹`) or `H_cop` (coproduct `c⁻¹∘Δ`), both with antipode `S⁻¹`.
pub fn op_cop(h: &HopfAlgebra, which: OpCop) -> Result<HopfAlgebra> {
    let c = h.swap();
    let (mu, delta) = match which {
        OpCop::Op => (h.mu.compose(&c)?, h.delta.clone()),
        OpCop::Cop => (h.mu.clone(), c.compose(&h.delta)?),
    };
    HopfAlgebra::new(h.carrier.clone(), mu, h.eta.clone(), delta, h.eps.clone(), Some(h.s_inv.clone()))
}

/// Basis of cointegrals: right `(λ⊗id)∘Δ = η∘λ`, left `(id⊗λ)∘Δ = η∘λ`.
pub fn find_cointegral(h: &HopfAlgebra, side: Side) -> Result<Vec<Mor>> {
    let d = h.dim();
    let mut a = vec![CycNum::zero(); d * d * d];
    for x in 0..d {
        for k in 0..d {
            let row = x * d + k;
            for j in 0..d {
                let idx = match side {
                    Side::Right => j * d + k,
                    Side::Left => k * d + j,
                };
                let mut v = h.delta.get(idx, x).clone();
                if j == x {
                    v = v.sub(h.eta.get(k, 0));
                }
                a[row * d + j] = v;
            }
        }
    }
    gvect::kernel(&a, d * d, d).into_iter().map(|v| h.functional(v)).collect()
}

/// Basis of integrals: left `xΛ = ε(x)Λ`, right `Λx = ε(x)Λ`.
pub fn find_integral(h: &HopfAlgebra, side: Side) -> Result<Vec<Mor>> {
    let d = h.dim();
    let mut a = vec![CycNum::zero(); d * d * d];
    for x in 0..d {
        for k in 0..d {
            let row = x * d + k;
            for j in 0..d {
                let idx = match side {
                    Side::Left => x * d + j,
                    Side::Right => j * d + x,
                };
                let mut v = h.mu.get(k, idx).clone();
                if j == k {
                    v = v.sub(h.eps.get(0, x));
                }
                a[row * d + j] = v;
            }
        }
    }
    gvect::kernel(&a, d * d, d).into_iter().map(|v| h.el(v)).collect()
}

/// `(id⊗λ)∘Δ` as a map `H → H`.
fn id_lambda_delta(h: &HopfAlgebra, lambda: &Mor) -> Result<Mor> {
    let mut st = State::identity(h.legs(1));
    h.delta_at(&mut st, 0)?;
    h.func_at(&mut st, 1, lambda)?;
    st.to_mor().with_objects(&h.carrier, &h.carrier)
}

/// The distinguished group-like `g` with `(id⊗λ)∘Δ = g∘λ`, obtained by applying both
/// sides to `Λ′ = (id⊗λ)∘γ⁻¹`; the defining identity, `Δg = g⊗g` and `g⁻¹ = S(g)`
/// are verified.
pub fn distinguished_grouplike(h: &HopfAlgebra, lambda: &Mor, gamma_inv: &Mor) -> Result<Mor> {
    let mut st = h.state_of(gamma_inv)?;
    h.func_at(&mut st, 1, lambda)?;
    let lam_prime = h.el(st.dense())?;
    let norm = lambda.compose(&lam_prime)?.entries[0].clone();
    if norm.is_zero() {
        return Err(Error::NotUnimodularCompatible("λ(Λ′) = 0".into()));
    }
    let g = id_lambda_delta(h, lambda)?.compose(&lam_prime)?.scale(&norm.inv()?);
    check_grouplike_identity(h, lambda, &g)?;
    Ok(g)
}

/// Same `g`, solved directly from a basis vector on which `λ` is nonzero.
pub fn distinguished_grouplike_direct(h: &HopfAlgebra, lambda: &Mor) -> Result<Mor> {
    let k = lambda
        .entries
        .iter()
        .position(|v| !v.is_zero())
        .ok_or_else(|| Error::NotUnimodularCompatible("λ = 0".into()))?;
    let g = id_lambda_delta(h, lambda)?.compose(&h.basis_el(k))?.scale(&lambda.entries[k].inv()?);
    check_grouplike_identity(h, lambda, &g)?;
    Ok(g)
}

fn check_grouplike_identity(h: &HopfAlgebra, lambda: &Mor, g: &Mor) -> Result<()> {
    let lhs = id_lambda_delta(h, lambda)?;
    let rhs = g.compose(lambda)?;
    if lhs.entries != rhs.entries {
        return Err(Error::NotUnimodularCompatible("(id⊗λ)∘Δ ≠ g∘λ".into()));
    }
    if !h.is_grouplike(g) {
        return Err(Error::NotUnimodularCompatible("g is not group-like".into()));
    }
    if h.mult_inverse(g)? != h.s.compose(g)? {
        return Err(Error::NotUnimodularCompatible("g⁻¹ ≠ S(g)".into()));
    }
    Ok(())
}

// ---- modules -----------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HModule {
    pub carrier: GObject,
    /// `H ⊗ M → M`
    pub rho: Mor,
}

impl HModule {
    pub fn new(h: &HopfAlgebra, carrier: GObject, rho: Mor) -> Result<Self> {
        let rho = rho.with_objects(&h.carrier.tensor(&carrier), &carrier)?;
        Ok(HModule { carrier, rho })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }
}

pub fn module_check(h: &HopfAlgebra, m: &HModule) -> Result<Report> {
    let mut r = Report::new("module_check");
    if m.rho.rows() != m.dim() || m.rho.cols() != h.dim() * m.dim() {
        return Err(Error::Shape("action has the wrong shape".into()));
    }
    let legs = vec![h.leg(), h.leg(), m.carrier.clone()];
    r.push(
        "action_associative",
        compare_maps(
            &legs,
            |s| {
                s.apply(1, 2, &m.rho, vec![m.carrier.clone()])?;
                s.apply(0, 2, &m.rho, vec![m.carrier.clone()]).map(|_| ())
            },
            |s| {
                h.mul_at(s, 0)?;
                s.apply(0, 2, &m.rho, vec![m.carrier.clone()]).map(|_| ())
            },
        )?,
    );
    r.push(
        "action_unital",
        compare_maps(
            std::slice::from_ref(&m.carrier),
            |s| {
                h.insert_at(s, 0, &h.eta)?;
                s.apply(0, 2, &m.rho, vec![m.carrier.clone()]).map(|_| ())
            },
            |_| Ok(()),
        )?,
    );
    r.check("action_even", m.rho.is_even(), || "ρ changes parity".into());
    Ok(r)
}

fn checked(h: &HopfAlgebra, m: HModule) -> Result<HModule> {
    let rep = module_check(h, &m)?;
    if !rep.all_pass() {
        return Err(Error::Module(rep.failing_ids().join(", ")));
    }
    Ok(m)
}

pub fn regular_module(h: &HopfAlgebra) -> HModule {
    HModule { carrier: h.carrier.clone(), rho: h.mu.clone() }
}

/// The trivial module `k` (or `Πk` if `odd`) with action `ε ⊗ id`.
pub fn trivial_module(h: &HopfAlgebra, odd: bool) -> HModule {
    let line = GObject::line(odd);
    let rho = h.eps.tensor(&Mor::identity(&line)).with_objects(&h.carrier.tensor(&line), &line).expect("dims");
    HModule { carrier: line, rho }
}

/// `M ⊗ N` with `ρ = (ρ_M⊗ρ_N)∘(id⊗c_{H,M}⊗id)∘(Δ⊗id⊗id)`.
pub fn tensor_module(h: &HopfAlgebra, m: &HModule, n: &HModule) -> Result<HModule> {
    let mut st = State::identity(vec![h.leg(), m.carrier.clone(), n.carrier.clone()]);
    h.delta_at(&mut st, 0)?;
    st.move_legs(1, 1, 2)?;
    st.apply(0, 2, &m.rho, vec![m.carrier.clone()])?;
    st.apply(1, 2, &n.rho, vec![n.carrier.clone()])?;
    let carrier = m.carrier.tensor(&n.carrier);
    let rho = st.to_mor().with_objects(&h.carrier.tensor(&carrier), &carrier)?;
    checked(h, HModule { carrier, rho })
}

/// Left and right duals `(M*, *M)` on `M∨`: `h·f = f(S(h)−)` and `h·f = f(S⁻¹(h)−)`,
/// written with the duality maps so that `ev: M*⊗M → 1` and `ev~: M⊗*M → 1` are
/// module maps.
pub fn dual_modules(h: &HopfAlgebra, m: &HModule) -> Result<(HModule, HModule)> {
    let dd = dual_data(&m.carrier);
    let md = dd.dual.clone();
    let mc = m.carrier.clone();
    // M*: [H, M∨] → [M∨, H] → [M∨, H, M, M∨] → [M∨, M, M∨] → [M∨]
    let mut st = State::identity(vec![h.leg(), md.clone()]);
    h.s_at(&mut st, 0)?;
    st.swap(0)?;
    st.insert(2, &dd.coev, vec![mc.clone(), md.clone()])?;
    st.apply(1, 2, &m.rho, vec![mc.clone()])?;
    st.apply(0, 2, &dd.ev, vec![])?;
    let right = HModule { carrier: md.clone(), rho: st.to_mor().with_objects(&h.carrier.tensor(&md), &md)? };
    // *M: [H, M∨] → [M∨, M, H, M∨] → [M∨, H, M, M∨] → [M∨, M, M∨] → [M∨]
    let mut st = State::identity(vec![h.leg(), md.clone()]);
    h.sinv_at(&mut st, 0)?;
    st.insert(0, &dd.coev_tilde, vec![md.clone(), mc.clone()])?;
    st.move_legs(2, 1, 1)?;
    st.apply(1, 2, &m.rho, vec![mc.clone()])?;
    st.apply(1, 2, &dd.ev_tilde, vec![])?;
    let left = HModule { carrier: md.clone(), rho: st.to_mor().with_objects(&h.carrier.tensor(&md), &md)? };
    Ok((checked(h, right)?, checked(h, left)?))
}

/// The four module identities behind the mixed-sector associators. With
/// `T(h⊗m) = h₁⊗h₂m` on `H⊗M` and `V(m⊗h) = h₂⊗S⁻¹(h₁)m` from `M⊗H` to `H⊗M`:
/// a) `T` is inverted by `h⊗m ↦ h₁⊗S(h₂)m`; b) `V` is inverted by `h⊗m ↦ h₁m⊗h₂`;
/// c) `T` intertwines left multiplication on `H` with the diagonal action;
/// d) `V` intertwines the diagonal action on `M⊗H` with left multiplication on `H`.
pub fn intertwiner_identities(h: &HopfAlgebra, m: &HModule) -> Result<Report> {
    let mut r = Report::new("intertwiner_identities");
    let mc = m.carrier.clone();
    let rho = |s: &mut State, pos: usize| s.apply(pos, 2, &m.rho, vec![mc.clone()]).map(|_| ());
    // all maps act on legs (pos, pos+1)
    let t = |s: &mut State, pos: usize| -> Result<()> {
        h.delta_at(s, pos)?;
        rho(s, pos + 1)
    };
    let t_inv = |s: &mut State, pos: usize| -> Result<()> {
        h.delta_at(s, pos)?;
        h.s_at(s, pos + 1)?;
        rho(s, pos + 1)
    };
    // [m, h] → [m, h₁, h₂] → [h₂, m, h₁] → [h₂, h₁, m] → [h₂, S⁻¹(h₁)m]
    let v = |s: &mut State, pos: usize| -> Result<()> {
        h.delta_at(s, pos + 1)?;
        s.move_legs(pos + 2, 1, pos)?;
        s.swap(pos + 1)?;
        h.sinv_at(s, pos + 1)?;
        rho(s, pos + 1)
    };
    // [h, m] → [h₁, h₂, m] → [h₁, m, h₂] → [h₁m, h₂]
    let v_inv = |s: &mut State, pos: usize| -> Result<()> {
        h.delta_at(s, pos)?;
        s.swap(pos + 1)?;
        rho(s, pos)
    };
    let hm = vec![h.leg(), mc.clone()];
    let mh = vec![mc.clone(), h.leg()];
    let ident = |_: &mut State| Ok(());
    let a1 = compare_maps(&hm, |s| { t_inv(s, 0)?; t(s, 0) }, ident)?;
    let a2 = compare_maps(&hm, |s| { t(s, 0)?; t_inv(s, 0) }, ident)?;
    r.push("a", a1.or(a2));
    let b1 = compare_maps(&hm, |s| { v_inv(s, 0)?; v(s, 0) }, ident)?;
    let b2 = compare_maps(&mh, |s| { v(s, 0)?; v_inv(s, 0) }, ident)?;
    r.push("b", b1.or(b2));
    let hhm = vec![h.leg(), h.leg(), mc.clone()];
    r.push(
        "c",
        compare_maps(
            &hhm,
            |s| {
                h.mul_at(s, 0)?;
                t(s, 0)
            },
            |s| {
                // k·T(h⊗m) with k acting diagonally on H ⊗ M
                t(s, 1)?;
                h.delta_at(s, 0)?;
                s.swap(1)?;
                h.mul_at(s, 0)?;
                rho(s, 1)
            },
        )?,
    );
    let hmh = vec![h.leg(), mc.clone(), h.leg()];
    r.push(
        "d",
        compare_maps(
            &hmh,
            |s| {
                // [k, m, h] → [k₁m, k₂h] → V
                h.delta_at(s, 0)?;
                s.swap(1)?;
                rho(s, 0)?;
                h.mul_at(s, 1)?;
                v(s, 0)
            },
            |s| {
                v(s, 1)?;
                h.mul_at(s, 0)
            },
        )?,
    );
    Ok(r)
}
