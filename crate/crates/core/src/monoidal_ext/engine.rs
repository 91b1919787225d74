//! Graded objects, their tensor expressions, and the associators acting on leg states.
//!
//! Leg layout of a tensor expression: `A⊗B` is the concatenation of the legs of `A` and
//! `B`, except that a product of two objects of `C₁` carries a leading `H` leg.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gvect::{GObject, State};
use crate::hopfcore::{HModule, HopfAlgebra};

use super::ExtData;

#[derive(Clone, Debug)]
pub enum GradedObject {
    /// An `H`-module, in `C₀`.
    Zero(HModule),
    /// A plain super vector space, in `C₁`.
    One(GObject),
}

impl GradedObject {
    pub fn sector(&self) -> u8 {
        match self {
            GradedObject::Zero(_) => 0,
            GradedObject::One(_) => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Obj {
    Leaf { name: String, obj: Arc<GradedObject> },
    Tensor(Box<Obj>, Box<Obj>),
}

impl Obj {
    pub fn leaf(obj: GradedObject) -> Obj {
        let name = match &obj {
            GradedObject::Zero(m) => format!("M{}", m.dim()),
            GradedObject::One(v) => format!("X{}", v.dim()),
        };
        Obj::named(name, obj)
    }

    pub fn named(name: impl Into<String>, obj: GradedObject) -> Obj {
        Obj::Leaf { name: name.into(), obj: Arc::new(obj) }
    }

    pub fn tensor(a: &Obj, b: &Obj) -> Obj {
        Obj::Tensor(Box::new(a.clone()), Box::new(b.clone()))
    }

    pub fn name(&self) -> String {
        match self {
            Obj::Leaf { name, .. } => name.clone(),
            Obj::Tensor(a, b) => format!("({}⊗{})", a.name(), b.name()),
        }
    }

    pub fn sector(&self) -> u8 {
        match self {
            Obj::Leaf { obj, .. } => obj.sector(),
            Obj::Tensor(a, b) => (a.sector() + b.sector()) % 2,
        }
    }

    pub fn legs(&self, h: &HopfAlgebra) -> Vec<GObject> {
        match self {
            Obj::Leaf { obj, .. } => match obj.as_ref() {
                GradedObject::Zero(m) => vec![m.carrier.clone()],
                GradedObject::One(v) => vec![v.clone()],
            },
            Obj::Tensor(a, b) => {
                let mut out = Vec::new();
                if a.sector() == 1 && b.sector() == 1 {
                    out.push(h.leg());
                }
                out.extend(a.legs(h));
                out.extend(b.legs(h));
                out
            }
        }
    }

    pub fn num_legs(&self) -> usize {
        match self {
            Obj::Leaf { .. } => 1,
            Obj::Tensor(a, b) => {
                usize::from(a.sector() == 1 && b.sector() == 1) + a.num_legs() + b.num_legs()
            }
        }
    }

    /// Number of internal `H` legs placed in front of `A`'s legs in `A⊗B`.
    pub fn internal_offset(a: &Obj, b: &Obj) -> usize {
        usize::from(a.sector() == 1 && b.sector() == 1)
    }
}

/// The `H` leg at position `p` acts on the `C₀` object `o` whose legs follow it; the `H`
/// leg is consumed.
pub fn act(st: &mut State, p: usize, o: &Obj, h: &HopfAlgebra) -> Result<()> {
    if o.sector() != 0 {
        return Err(Error::InvalidInput(format!("{} is not in C₀", o.name())));
    }
    match o {
        Obj::Leaf { obj, .. } => match obj.as_ref() {
            GradedObject::Zero(m) => {
                st.apply(p, 2, &m.rho, vec![m.carrier.clone()])?;
            }
            GradedObject::One(_) => unreachable!("sector checked"),
        },
        Obj::Tensor(a, b) => {
            if a.sector() == 0 {
                h.delta_at(st, p)?;
                let na = a.num_legs();
                st.move_legs(p + 1, 1, p + 1 + na)?;
                act(st, p, a, h)?;
                act(st, p + na, b, h)?;
            } else {
                h.mul_at(st, p)?;
            }
        }
    }
    Ok(())
}

/// Apply `α_{A,B,C}` (or its inverse) to the legs starting at `p`: the forward map takes
/// the legs of `A⊗(B⊗C)` to those of `(A⊗B)⊗C`.
pub fn assoc(st: &mut State, p: usize, a: &Obj, b: &Obj, c: &Obj, e: &ExtData, inv: bool) -> Result<()> {
    let h = &e.hopf;
    let (la, lb, lc) = (a.num_legs(), b.num_legs(), c.num_legs());
    let hh = || h.legs(2);
    match (a.sector(), b.sector(), c.sector()) {
        (0, 0, 0) | (0, 0, 1) | (1, 0, 0) => {}
        (0, 1, 0) => {
            let g = if inv { &e.gamma_inv } else { &e.gamma };
            st.move_legs(p + la, lb, p + la + lc)?;
            st.insert(p, g, hh())?;
            st.move_legs(p + 1, 1, p + 1 + la)?;
            act(st, p, a, h)?;
            act(st, p + la, c, h)?;
            st.move_legs(p + la, lc, p + la + lb)?;
        }
        (0, 1, 1) => {
            if !inv {
                h.delta_at(st, p + la)?;
                st.move_legs(p, la, p + 2)?;
                st.move_legs(p + 1, 1, p)?;
                h.sinv_at(st, p + 1)?;
                act(st, p + 1, a, h)?;
            } else {
                h.delta_at(st, p)?;
                st.move_legs(p + 1, 1, p + 1 + la)?;
                act(st, p, a, h)?;
            }
        }
        (1, 1, 0) => {
            h.delta_at(st, p)?;
            if inv {
                h.s_at(st, p + 1)?;
            }
            st.move_legs(p + 1, 1, p + 1 + la + lb)?;
            act(st, p + 1 + la + lb, c, h)?;
        }
        (1, 0, 1) => {
            let d = if inv { &e.delta_tilde } else { &e.delta };
            st.insert(p + 1, d, hh())?;
            h.mul_at(st, p)?;
            st.move_legs(p + 1, 1, p + 1 + la)?;
            act(st, p + 1 + la, b, h)?;
        }
        (1, 1, 1) => {
            if !inv {
                st.move_legs(p + la, 1, p)?;
                h.map_at(st, p, &e.phi)?;
            } else {
                h.map_at(st, p, &e.phi_inv)?;
                st.move_legs(p, 1, p + la)?;
            }
        }
        _ => unreachable!("sectors are 0 or 1"),
    }
    Ok(())
}
