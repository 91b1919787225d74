//! Parity-graded vector spaces and exact morphisms between them.
//!
//! Flattening is row-major with the leftmost tensor factor most significant,
//! everywhere. The symmetric braiding carries the Koszul sign; with all
//! parities even this is plain `vect`.

mod linalg;
mod state;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclofield::CycNum;
use crate::error::{Error, Result};

pub use linalg::{inverse, kernel, rank, rref, solve};
pub use state::State;

/// Finite-dimensional parity-graded vector space with a fixed ordered basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GObject {
    pub basis: Arc<Vec<String>>,
    pub parity: Arc<Vec<u8>>,
}

impl GObject {
    pub fn new(basis: Vec<String>, parity: Vec<u8>) -> Result<Self> {
        if basis.len() != parity.len() {
            return Err(Error::Shape(format!("{} labels but {} parities", basis.len(), parity.len())));
        }
        if parity.iter().any(|&p| p > 1) {
            return Err(Error::InvalidInput("parity bits must be 0 or 1".into()));
        }
        Ok(GObject { basis: Arc::new(basis), parity: Arc::new(parity) })
    }

    /// Purely even space with the given labels.
    pub fn even<S: ToString>(labels: &[S]) -> Self {
        let basis: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let n = basis.len();
        GObject { basis: Arc::new(basis), parity: Arc::new(vec![0; n]) }
    }

    /// The tensor unit `1`.
    pub fn unit() -> Self {
        GObject::even(&["1"])
    }

    /// One-dimensional space of the given parity.
    pub fn line(odd: bool) -> Self {
        GObject::new(vec![if odd { "π".into() } else { "1".into() }], vec![odd as u8]).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn is_even(&self) -> bool {
        self.parity.iter().all(|&p| p == 0)
    }

    pub fn tensor(&self, o: &GObject) -> GObject {
        let mut basis = Vec::with_capacity(self.dim() * o.dim());
        let mut parity = Vec::with_capacity(self.dim() * o.dim());
        for (a, pa) in self.basis.iter().zip(self.parity.iter()) {
            for (b, pb) in o.basis.iter().zip(o.parity.iter()) {
                basis.push(format!("{a}⊗{b}"));
                parity.push(pa ^ pb);
            }
        }
        GObject { basis: Arc::new(basis), parity: Arc::new(parity) }
    }

    pub fn tensor_all(objs: &[GObject]) -> GObject {
        match objs.split_first() {
            None => GObject::unit(),
            Some((first, rest)) => rest.iter().fold(first.clone(), |acc, o| acc.tensor(o)),
        }
    }

    /// The dual space, labelled `v*`, with the same parities.
    pub fn dual(&self) -> GObject {
        GObject {
            basis: Arc::new(self.basis.iter().map(|b| format!("{b}*")).collect()),
            parity: self.parity.clone(),
        }
    }

    /// Same dimension and parity pattern.
    pub fn same_shape(&self, o: &GObject) -> bool {
        self.parity == o.parity
    }
}

/// Exact matrix `dst × src` between graded spaces.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Mor {
    pub src: GObject,
    pub dst: GObject,
    pub entries: Vec<CycNum>,
}

/// Equality of matrices between spaces of the same graded shape; basis labels are
/// ignored, so that e.g. `1 ⊗ 1` and `1` compare equal.
impl PartialEq for Mor {
    fn eq(&self, o: &Mor) -> bool {
        self.src.parity == o.src.parity && self.dst.parity == o.dst.parity && self.entries == o.entries
    }
}

impl Mor {
    pub fn new(src: GObject, dst: GObject, entries: Vec<CycNum>) -> Result<Self> {
        if entries.len() != src.dim() * dst.dim() {
            return Err(Error::Shape(format!(
                "{} entries for a {}×{} matrix",
                entries.len(),
                dst.dim(),
                src.dim()
            )));
        }
        Ok(Mor { src, dst, entries })
    }

    pub fn zero(src: &GObject, dst: &GObject) -> Self {
        Mor { src: src.clone(), dst: dst.clone(), entries: vec![CycNum::zero(); src.dim() * dst.dim()] }
    }

    pub fn identity(v: &GObject) -> Self {
        Mor::from_fn(v, v, |i, j| if i == j { CycNum::one() } else { CycNum::zero() })
    }

    pub fn from_fn(src: &GObject, dst: &GObject, f: impl Fn(usize, usize) -> CycNum) -> Self {
        let mut entries = Vec::with_capacity(src.dim() * dst.dim());
        for i in 0..dst.dim() {
            for j in 0..src.dim() {
                entries.push(f(i, j));
            }
        }
        Mor { src: src.clone(), dst: dst.clone(), entries }
    }

    /// Element `1 → v` with the given coordinates.
    pub fn element(v: &GObject, coords: Vec<CycNum>) -> Result<Self> {
        Mor::new(GObject::unit(), v.clone(), coords)
    }

    /// Functional `v → 1` with the given values on the basis.
    pub fn functional(v: &GObject, values: Vec<CycNum>) -> Result<Self> {
        Mor::new(v.clone(), GObject::unit(), values)
    }

    pub fn scalar(c: CycNum) -> Self {
        Mor { src: GObject::unit(), dst: GObject::unit(), entries: vec![c] }
    }

    pub fn rows(&self) -> usize {
        self.dst.dim()
    }

    pub fn cols(&self) -> usize {
        self.src.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.cols() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        let c = self.cols();
        self.entries[i * c + j] = v;
    }

    /// Column `j` as a coordinate vector.
    pub fn col(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows()).map(|i| self.get(i, j).clone()).collect()
    }

    /// Row `i` as a coordinate vector.
    pub fn row(&self, i: usize) -> Vec<CycNum> {
        self.entries[i * self.cols()..(i + 1) * self.cols()].to_vec()
    }

    /// Coordinates of an element (`1 → v`) or values of a functional (`v → 1`).
    pub fn vector(&self) -> Vec<CycNum> {
        self.entries.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycNum::is_zero)
    }

    pub fn with_objects(mut self, src: &GObject, dst: &GObject) -> Result<Self> {
        if src.dim() != self.src.dim() || dst.dim() != self.dst.dim() {
            return Err(Error::Shape("relabelling must keep dimensions".into()));
        }
        self.src = src.clone();
        self.dst = dst.clone();
        Ok(self)
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &Mor) -> Result<Mor> {
        compose(self, g)
    }

    pub fn tensor(&self, g: &Mor) -> Mor {
        tensor(self, g)
    }

    pub fn scale(&self, c: &CycNum) -> Mor {
        Mor { src: self.src.clone(), dst: self.dst.clone(), entries: self.entries.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn add(&self, o: &Mor) -> Result<Mor> {
        if self.src.dim() != o.src.dim() || self.dst.dim() != o.dst.dim() {
            return Err(Error::Shape("sum of differently shaped morphisms".into()));
        }
        Ok(Mor {
            src: self.src.clone(),
            dst: self.dst.clone(),
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, o: &Mor) -> Result<Mor> {
        self.add(&o.scale(&CycNum::int(-1)))
    }

    pub fn transpose(&self) -> Mor {
        Mor::from_fn(&self.dst, &self.src, |i, j| self.get(j, i).clone())
    }

    /// True when every nonzero entry connects basis vectors of equal parity.
    pub fn is_even(&self) -> bool {
        (0..self.rows()).all(|i| {
            (0..self.cols()).all(|j| self.get(i, j).is_zero() || self.dst.parity[i] == self.src.parity[j])
        })
    }

    /// First entry where two equally shaped morphisms differ: `(row, col, self, other)`.
    pub fn first_difference(&self, o: &Mor) -> Option<(usize, usize, CycNum, CycNum)> {
        if self.entries.len() != o.entries.len() {
            return Some((usize::MAX, usize::MAX, CycNum::zero(), CycNum::zero()));
        }
        let c = self.cols().max(1);
        self.entries
            .iter()
            .zip(&o.entries)
            .position(|(a, b)| a != b)
            .map(|k| (k / c, k % c, self.entries[k].clone(), o.entries[k].clone()))
    }

    /// Matrix inverse; fails with `NoInverse` if singular.
    pub fn inverse(&self) -> Result<Mor> {
        let inv = inverse(&self.entries, self.rows(), self.cols()).ok_or(Error::NoInverse)?;
        Mor::new(self.dst.clone(), self.src.clone(), inv)
    }

    pub fn rank(&self) -> usize {
        rank(&self.entries, self.rows(), self.cols())
    }
}

/// `f ∘ g`.
pub fn compose(f: &Mor, g: &Mor) -> Result<Mor> {
    if f.src.dim() != g.dst.dim() || !f.src.same_shape(&g.dst) {
        return Err(Error::Shape(format!(
            "cannot compose: source of f has dim {}, target of g has dim {}",
            f.src.dim(),
            g.dst.dim()
        )));
    }
    let (n, m, p) = (f.rows(), f.cols(), g.cols());
    let mut out = vec![CycNum::zero(); n * p];
    for i in 0..n {
        for k in 0..m {
            let a = f.get(i, k);
            if a.is_zero() {
                continue;
            }
            for j in 0..p {
                let b = g.get(k, j);
                if !b.is_zero() {
                    out[i * p + j].mul_add_assign(a, b);
                }
            }
        }
    }
    Mor::new(g.src.clone(), f.dst.clone(), out)
}

/// Kronecker product; the left factor is most significant.
pub fn tensor(f: &Mor, g: &Mor) -> Mor {
    let src = f.src.tensor(&g.src);
    let dst = f.dst.tensor(&g.dst);
    let (gr, gc) = (g.rows(), g.cols());
    let cols = src.dim();
    let mut out = vec![CycNum::zero(); dst.dim() * cols];
    for i in 0..f.rows() {
        for j in 0..f.cols() {
            let a = f.get(i, j);
            if a.is_zero() {
                continue;
            }
            for k in 0..gr {
                for l in 0..gc {
                    let b = g.get(k, l);
                    if !b.is_zero() {
                        out[(i * gr + k) * cols + j * gc + l] = a.mul(b);
                    }
                }
            }
        }
    }
    Mor { src, dst, entries: out }
}

/// Symmetric braiding `c_{U,V}(u⊗v) = (−1)^{|u||v|} v⊗u`.
pub fn braiding(u: &GObject, v: &GObject) -> Mor {
    let src = u.tensor(v);
    let dst = v.tensor(u);
    let (n, m) = (u.dim(), v.dim());
    let mut out = Mor::zero(&src, &dst);
    for i in 0..n {
        for j in 0..m {
            let s = if u.parity[i] & v.parity[j] == 1 { -1 } else { 1 };
            out.set(j * n + i, i * m + j, CycNum::int(s));
        }
    }
    out
}

/// Duality data of the base category.
#[derive(Clone, Debug)]
pub struct DualData {
    pub dual: GObject,
    /// `V∨ ⊗ V → 1`
    pub ev: Mor,
    /// `1 → V ⊗ V∨`
    pub coev: Mor,
    /// `V ⊗ V∨ → 1`, equal to `ev ∘ c_{V,V∨}`
    pub ev_tilde: Mor,
    /// `1 → V∨ ⊗ V`, equal to `c_{V,V∨} ∘ coev`
    pub coev_tilde: Mor,
}

pub fn dual_data(v: &GObject) -> DualData {
    let d = v.dual();
    let n = v.dim();
    let sign = |i: usize| CycNum::int(if v.parity[i] == 1 { -1 } else { 1 });
    let dv = d.tensor(v);
    let vd = v.tensor(&d);
    let ev = Mor::from_fn(&dv, &GObject::unit(), |_, k| if k / n == k % n { CycNum::one() } else { CycNum::zero() });
    let coev = Mor::from_fn(&GObject::unit(), &vd, |k, _| if k / n == k % n { CycNum::one() } else { CycNum::zero() });
    let ev_tilde = Mor::from_fn(&vd, &GObject::unit(), |_, k| if k / n == k % n { sign(k % n) } else { CycNum::zero() });
    let coev_tilde = Mor::from_fn(&GObject::unit(), &dv, |k, _| if k / n == k % n { sign(k % n) } else { CycNum::zero() });
    DualData { dual: d, ev, coev, ev_tilde, coev_tilde }
}

/// The pivotal isomorphism `V → V∨∨ = (ev~_V ⊗ id)∘(id_V ⊗ coev_{V∨})`, written in the
/// basis of `V∨∨` induced from `V` by the Koszul-signed canonical identification
/// `v ↦ (f ↦ (−1)^{|f||v|} f(v))`.
pub fn double_dual_map(v: &GObject) -> Result<Mor> {
    let dd = dual_data(v);
    let ddd = dual_data(&dd.dual);
    let step1 = tensor(&Mor::identity(v), &ddd.coev);
    let step2 = tensor(&dd.ev_tilde, &Mor::identity(&ddd.dual));
    let raw = compose(&step2, &step1)?;
    // change of basis from the plain dual basis of V∨∨ to the Koszul-induced one
    let koszul = Mor::from_fn(&ddd.dual, v, |i, j| {
        if i == j {
            CycNum::int(if v.parity[i] == 1 { -1 } else { 1 })
        } else {
            CycNum::zero()
        }
    });
    compose(&koszul, &raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z2_group_algebra() -> (GObject, Mor) {
        let h = GObject::even(&["e", "g"]);
        let hh = h.tensor(&h);
        let mu = Mor::from_fn(&hh, &h, |i, k| if (k / 2 + k % 2) % 2 == i { CycNum::one() } else { CycNum::zero() });
        (h, mu)
    }

    #[test]
    fn compose_examples() {
        let v = GObject::new(vec!["a".into(), "b".into()], vec![0, 1]).unwrap();
        let f = Mor::from_fn(&v, &v, |i, j| CycNum::int((i + 2 * j) as i64));
        assert_eq!(compose(&Mor::identity(&v), &f).unwrap(), f);
        let w = GObject::even(&["x", "y"]);
        let c = braiding(&w, &w);
        assert_eq!(compose(&c, &c).unwrap(), Mor::identity(&w.tensor(&w)));
        let u = GObject::even(&["p", "q", "r"]);
        assert!(matches!(compose(&Mor::identity(&u), &f), Err(Error::Shape(_))));
    }

    #[test]
    fn tensor_examples() {
        let v = GObject::even(&["a", "b"]);
        let w = GObject::even(&["x", "y", "z"]);
        assert_eq!(tensor(&Mor::identity(&v), &Mor::identity(&w)), Mor::identity(&v.tensor(&w)));
        let s = tensor(&Mor::scalar(CycNum::int(3)), &Mor::scalar(CycNum::int(5)));
        assert_eq!(s.entries, vec![CycNum::int(15)]);
    }

    #[test]
    fn product_group_from_tensor() {
        // (μ⊗μ)∘(id⊗c⊗id) on k[Z/2] is the multiplication of k[Z/2 × Z/2]
        let (h, mu) = z2_group_algebra();
        let id = Mor::identity(&h);
        let mid = tensor(&tensor(&id, &braiding(&h, &h)), &id);
        let m2 = compose(&tensor(&mu, &mu), &mid).unwrap();
        // oracle: brute-force group table for (a1,a2)·(b1,b2) = (a1+b1, a2+b2)
        for a in 0..4usize {
            for b in 0..4usize {
                let (a1, a2, b1, b2) = (a / 2, a % 2, b / 2, b % 2);
                let target = ((a1 + b1) % 2) * 2 + (a2 + b2) % 2;
                for t in 0..4 {
                    let want = if t == target { CycNum::one() } else { CycNum::zero() };
                    assert_eq!(*m2.get(t, a * 4 + b), want);
                }
            }
        }
    }

    #[test]
    fn braiding_signs() {
        let e = GObject::even(&["a", "b"]);
        let c = braiding(&e, &e);
        assert_eq!(*c.get(1, 2), CycNum::one());
        let o = GObject::line(true);
        let c = braiding(&o, &o);
        assert_eq!(c.entries, vec![CycNum::int(-1)]);
        let m = GObject::new(vec!["0".into(), "1".into()], vec![0, 1]).unwrap();
        let c1 = braiding(&m, &o);
        let c2 = braiding(&o, &m);
        assert_eq!(compose(&c2, &c1).unwrap(), Mor::identity(&m.tensor(&o)));
    }

    fn zigzags(v: &GObject) {
        let dd = dual_data(v);
        let id_v = Mor::identity(v);
        let id_d = Mor::identity(&dd.dual);
        let z1 = compose(&tensor(&id_v, &dd.ev), &tensor(&dd.coev, &id_v)).unwrap();
        assert_eq!(z1.entries, id_v.entries);
        let z2 = compose(&tensor(&dd.ev, &id_d), &tensor(&id_d, &dd.coev)).unwrap();
        assert_eq!(z2.entries, id_d.entries);
        let z3 = compose(&tensor(&dd.ev_tilde, &id_v), &tensor(&id_v, &dd.coev_tilde)).unwrap();
        assert_eq!(z3.entries, id_v.entries);
        let z4 = compose(&tensor(&id_d, &dd.ev_tilde), &tensor(&dd.coev_tilde, &id_d)).unwrap();
        assert_eq!(z4.entries, id_d.entries);
        let evc = compose(&dd.ev, &braiding(v, &dd.dual)).unwrap();
        assert_eq!(evc.entries, dd.ev_tilde.entries);
    }

    #[test]
    fn dual_data_examples() {
        let one = GObject::unit();
        let dd = dual_data(&one);
        assert_eq!(dd.ev.entries, vec![CycNum::one()]);
        assert_eq!(dd.coev.entries, vec![CycNum::one()]);
        zigzags(&z2_group_algebra().0);
        zigzags(&GObject::new(vec!["1".into(), "a".into(), "b".into(), "ab".into()], vec![0, 1, 1, 0]).unwrap());
        for v in [GObject::even(&["a", "b"]), GObject::new(vec!["x".into(), "y".into()], vec![1, 0]).unwrap()] {
            let d = double_dual_map(&v).unwrap();
            assert_eq!(d.entries, Mor::identity(&v).entries);
        }
    }

    fn arb_mat(r: usize, c: usize) -> impl Strategy<Value = Vec<CycNum>> {
        prop::collection::vec(-3i64..4, r * c).prop_map(|v| v.into_iter().map(CycNum::int).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn interchange_law(a in arb_mat(2, 3), b in arb_mat(3, 2), c in arb_mat(2, 2), d in arb_mat(2, 2)) {
            let u2 = GObject::new(vec!["u".into(), "v".into()], vec![0, 1]).unwrap();
            let u3 = GObject::new(vec!["p".into(), "q".into(), "r".into()], vec![1, 0, 0]).unwrap();
            let f = Mor::new(u3.clone(), u2.clone(), a).unwrap();
            let f2 = Mor::new(u2.clone(), u3.clone(), b).unwrap();
            let g = Mor::new(u2.clone(), u2.clone(), c).unwrap();
            let g2 = Mor::new(u2.clone(), u2.clone(), d).unwrap();
            let lhs = compose(&tensor(&f, &g), &tensor(&f2, &g2)).unwrap();
            let rhs = tensor(&compose(&f, &f2).unwrap(), &compose(&g, &g2).unwrap());
            prop_assert_eq!(lhs.entries, rhs.entries);
        }

        #[test]
        fn braiding_natural(a in arb_mat(2, 2), b in arb_mat(2, 2)) {
            // even maps on graded spaces: zero out parity-changing entries
            let u = GObject::new(vec!["a".into(), "b".into()], vec![0, 1]).unwrap();
            let mut f = Mor::new(u.clone(), u.clone(), a).unwrap();
            let mut g = Mor::new(u.clone(), u.clone(), b).unwrap();
            for m in [&mut f, &mut g] {
                m.set(0, 1, CycNum::zero());
                m.set(1, 0, CycNum::zero());
            }
            let c = braiding(&u, &u);
            let lhs = compose(&c, &tensor(&f, &g)).unwrap();
            let rhs = compose(&tensor(&g, &f), &c).unwrap();
            prop_assert_eq!(lhs.entries, rhs.entries);
        }
    }
}
