//! A linear map into a tensor product of "legs", manipulated leg by leg.
//!
//! `State` holds the matrix of a map `cols → L₀ ⊗ … ⊗ L_{n-1}` (rows row-major over
//! the legs, the column index fastest). Structure maps are applied to consecutive
//! legs, legs are reordered with the Koszul sign, and elements are inserted by
//! braiding them in from the left. Every string diagram in this crate is evaluated
//! this way, so one set of sign rules governs all of them. Only nonzero entries
//! are stored: diagrams on `H^{⊗4}` and beyond stay cheap when the structure
//! tensors are sparse.

use std::collections::HashMap;

use crate::cyclofield::CycNum;
use crate::error::{Error, Result};

use super::{GObject, Mor};

#[derive(Clone, Debug)]
pub struct State {
    legs: Vec<GObject>,
    cols: GObject,
    /// flat index `row * ncols + col` → nonzero value
    data: HashMap<usize, CycNum>,
}

fn insert_add(map: &mut HashMap<usize, CycNum>, k: usize, v: CycNum) {
    match map.entry(k) {
        std::collections::hash_map::Entry::Occupied(mut e) => e.get_mut().add_assign(&v),
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(v);
        }
    }
}

impl State {
    /// Identity on `L₀ ⊗ … ⊗ L_{n-1}`.
    pub fn identity(legs: Vec<GObject>) -> Self {
        let cols = GObject::tensor_all(&legs);
        let n = cols.dim();
        let data = (0..n).map(|i| (i * n + i, CycNum::one())).collect();
        State { legs, cols, data }
    }

    /// The element `1 → L₀ ⊗ …` with the given flat coordinates.
    pub fn element(legs: Vec<GObject>, coords: &[CycNum]) -> Result<Self> {
        let n: usize = legs.iter().map(GObject::dim).product();
        if coords.len() != n {
            return Err(Error::Shape(format!("{} coordinates for a {n}-dimensional product", coords.len())));
        }
        let data = coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect();
        Ok(State { legs, cols: GObject::unit(), data })
    }

    /// Tensor product of per-leg maps: `None` is the identity of that leg,
    /// `Some(v)` the fixed vector `v` (contributing no column).
    pub fn product(factors: Vec<(GObject, Option<Vec<CycNum>>)>) -> Result<Self> {
        let mut st = State { legs: vec![], cols: GObject::unit(), data: HashMap::from([(0, CycNum::one())]) };
        let mut free = Vec::new();
        for (leg, fixed) in factors {
            let piece = match fixed {
                None => {
                    free.push(leg.clone());
                    State::identity(vec![leg])
                }
                Some(v) => State::element(vec![leg], &v)?,
            };
            st = st.kron(&piece);
        }
        st.cols = GObject::tensor_all(&free);
        Ok(st)
    }

    /// `self ⊗ other` (legs concatenated, columns combined with self's most significant).
    pub fn kron(&self, other: &State) -> State {
        let c1 = self.ncols();
        let (r2, c2) = (other.rows(), other.ncols());
        let nc = c1 * c2;
        let mut data = HashMap::with_capacity(self.data.len() * other.data.len());
        for (&ka, a) in &self.data {
            let (i, j) = (ka / c1, ka % c1);
            for (&kb, b) in &other.data {
                let (k, l) = (kb / c2, kb % c2);
                data.insert((i * r2 + k) * nc + j * c2 + l, a.mul(b));
            }
        }
        let mut legs = self.legs.clone();
        legs.extend(other.legs.iter().cloned());
        State { legs, cols: self.cols.tensor(&other.cols), data }
    }

    pub fn legs(&self) -> &[GObject] {
        &self.legs
    }

    pub fn rows(&self) -> usize {
        self.legs.iter().map(GObject::dim).product()
    }

    pub fn ncols(&self) -> usize {
        self.cols.dim()
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.data.len()
    }

    /// Dense entries, row-major with the column index fastest.
    pub fn dense(&self) -> Vec<CycNum> {
        let mut v = vec![CycNum::zero(); self.rows() * self.ncols()];
        for (&k, x) in &self.data {
            v[k] = x.clone();
        }
        v
    }

    /// Apply `op : L_pos ⊗ … ⊗ L_{pos+k-1} → out₀ ⊗ …` in place.
    pub fn apply(&mut self, pos: usize, k: usize, op: &Mor, out: Vec<GObject>) -> Result<&mut Self> {
        if pos + k > self.legs.len() {
            return Err(Error::Shape(format!("legs {pos}..{} out of range", pos + k)));
        }
        let din: usize = self.legs[pos..pos + k].iter().map(GObject::dim).product();
        let dout: usize = out.iter().map(GObject::dim).product();
        if op.cols() != din || op.rows() != dout {
            return Err(Error::Shape(format!(
                "operator {}×{} applied to {din}-dimensional legs with {dout}-dimensional output",
                op.rows(),
                op.cols()
            )));
        }
        let q: usize = self.legs[pos + k..].iter().map(GObject::dim).product::<usize>() * self.ncols();
        let mut by_col: Vec<Vec<(usize, &CycNum)>> = vec![Vec::new(); din];
        for o in 0..dout {
            for (i, slot) in by_col.iter_mut().enumerate() {
                let v = op.get(o, i);
                if !v.is_zero() {
                    slot.push((o, v));
                }
            }
        }
        let mut data = HashMap::with_capacity(self.data.len());
        for (&key, x) in &self.data {
            let (pi, rest) = (key / (din * q), key % (din * q));
            let (i, qi) = (rest / q, rest % q);
            for &(o, v) in &by_col[i] {
                insert_add(&mut data, (pi * dout + o) * q + qi, v.mul(x));
            }
        }
        data.retain(|_, v: &mut CycNum| !v.is_zero());
        self.data = data;
        self.legs.splice(pos..pos + k, out);
        Ok(self)
    }

    /// Reorder legs: new leg `i` is old leg `perm[i]`, with the Koszul sign.
    pub fn permute(&mut self, perm: &[usize]) -> Result<&mut Self> {
        let n = self.legs.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::Shape(format!("{perm:?} is not a permutation of {n} legs")));
        }
        if perm.iter().enumerate().all(|(i, &p)| i == p) {
            return Ok(self);
        }
        let old_dims: Vec<usize> = self.legs.iter().map(GObject::dim).collect();
        let mut old_stride = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            old_stride[i] = old_stride[i + 1] * old_dims[i + 1];
        }
        let new_legs: Vec<GObject> = perm.iter().map(|&i| self.legs[i].clone()).collect();
        let new_dims: Vec<usize> = new_legs.iter().map(GObject::dim).collect();
        let mut new_stride = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            new_stride[i] = new_stride[i + 1] * new_dims[i + 1];
        }
        let graded = self.legs.iter().any(|l| !l.is_even());
        let nc = self.ncols();
        let mut data = HashMap::with_capacity(self.data.len());
        let mut old_digits = vec![0usize; n];
        for (&key, x) in &self.data {
            let (row, c) = (key / nc, key % nc);
            for i in 0..n {
                old_digits[i] = (row / old_stride[i]) % old_dims[i];
            }
            let mut new_row = 0;
            for i in 0..n {
                new_row += old_digits[perm[i]] * new_stride[i];
            }
            let mut negative = false;
            if graded {
                for i in 0..n {
                    if self.legs[perm[i]].parity[old_digits[perm[i]]] == 0 {
                        continue;
                    }
                    for j in i + 1..n {
                        if perm[i] > perm[j] && self.legs[perm[j]].parity[old_digits[perm[j]]] == 1 {
                            negative = !negative;
                        }
                    }
                }
            }
            data.insert(new_row * nc + c, if negative { x.neg() } else { x.clone() });
        }
        self.data = data;
        self.legs = new_legs;
        Ok(self)
    }

    /// Move legs `src..src+cnt` so that they start at `dst` in the list without them.
    pub fn move_legs(&mut self, src: usize, cnt: usize, dst: usize) -> Result<&mut Self> {
        let n = self.legs.len();
        if src + cnt > n || dst + cnt > n {
            return Err(Error::Shape(format!("cannot move legs {src}..{} to {dst}", src + cnt)));
        }
        let moved: Vec<usize> = (src..src + cnt).collect();
        let others: Vec<usize> = (0..n).filter(|i| !moved.contains(i)).collect();
        let mut perm = others[..dst].to_vec();
        perm.extend(&moved);
        perm.extend(&others[dst..]);
        self.permute(&perm)
    }

    /// Swap two adjacent legs `i, i+1`.
    pub fn swap(&mut self, i: usize) -> Result<&mut Self> {
        self.move_legs(i, 1, i + 1)
    }

    /// Insert an element (`1 → W₀ ⊗ …`) so that its legs start at `pos`; it enters from
    /// the left and is braided past the first `pos` legs.
    pub fn insert(&mut self, pos: usize, elem: &Mor, legs: Vec<GObject>) -> Result<&mut Self> {
        if elem.cols() != 1 {
            return Err(Error::Shape("only elements (maps out of 1) can be inserted".into()));
        }
        let cnt = legs.len();
        let e = State::element(legs, &elem.entries)?;
        let mut k = e.kron(self);
        k.cols = self.cols.clone();
        *self = k;
        self.move_legs(0, cnt, pos)
    }

    /// Multiply by a scalar.
    pub fn scale(&mut self, c: &CycNum) -> &mut Self {
        if c.is_zero() {
            self.data.clear();
        } else {
            for v in self.data.values_mut() {
                *v = v.mul(c);
            }
        }
        self
    }

    /// The underlying morphism `cols → ⊗ legs`.
    pub fn to_mor(&self) -> Mor {
        Mor { src: self.cols.clone(), dst: GObject::tensor_all(&self.legs), entries: self.dense() }
    }

    /// First flat index at which two states differ, with both values.
    pub fn first_difference(&self, o: &State) -> Option<(usize, CycNum, CycNum)> {
        let dims = |s: &State| s.legs.iter().map(GObject::dim).collect::<Vec<_>>();
        if dims(self) != dims(o) || self.ncols() != o.ncols() {
            return Some((usize::MAX, CycNum::zero(), CycNum::zero()));
        }
        let zero = CycNum::zero();
        self.data
            .keys()
            .chain(o.data.keys())
            .filter(|k| self.data.get(k).unwrap_or(&zero) != o.data.get(k).unwrap_or(&zero))
            .min()
            .map(|&k| (k, self.data.get(&k).unwrap_or(&zero).clone(), o.data.get(&k).unwrap_or(&zero).clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gvect::{braiding, compose, tensor};

    fn odd_even() -> GObject {
        GObject::new(vec!["e".into(), "o".into()], vec![0, 1]).unwrap()
    }

    #[test]
    fn permute_matches_braiding() {
        let v = odd_even();
        let w = GObject::new(vec!["o1".into(), "o2".into(), "e".into()], vec![1, 1, 0]).unwrap();
        let mut s = State::identity(vec![v.clone(), w.clone()]);
        s.permute(&[1, 0]).unwrap();
        assert_eq!(s.to_mor().entries, braiding(&v, &w).entries);
    }

    #[test]
    fn move_is_composite_of_swaps() {
        let v = odd_even();
        let legs = vec![v.clone(), v.clone(), v.clone()];
        let mut a = State::identity(legs.clone());
        a.move_legs(0, 1, 2).unwrap();
        let id = crate::gvect::Mor::identity(&v);
        let c = braiding(&v, &v);
        let m = compose(&tensor(&id, &c), &tensor(&c, &id)).unwrap();
        assert_eq!(a.to_mor().entries, m.entries);
    }

    #[test]
    fn apply_matches_tensor() {
        let v = odd_even();
        let f = crate::gvect::Mor::from_fn(&v, &v, |i, j| CycNum::int((1 + i * 2 + j) as i64 * ((i == j) as i64)));
        let mut s = State::identity(vec![v.clone(), v.clone()]);
        s.apply(1, 1, &f, vec![v.clone()]).unwrap();
        let id = crate::gvect::Mor::identity(&v);
        assert_eq!(s.to_mor().entries, tensor(&id, &f).entries);
    }

    #[test]
    fn insert_braids_in() {
        let v = odd_even();
        let x = crate::gvect::Mor::element(&v, vec![CycNum::zero(), CycNum::one()]).unwrap();
        let mut s = State::identity(vec![v.clone()]);
        s.insert(1, &x, vec![v.clone()]).unwrap();
        // o ⊗ e ↦ e ⊗ o (no sign), o ⊗ o ↦ −o ⊗ o
        let m = s.to_mor();
        assert_eq!(*m.get(1, 0), CycNum::one());
        assert_eq!(*m.get(3, 1), CycNum::int(-1));
    }
}
