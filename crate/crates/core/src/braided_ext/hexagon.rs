//! Hexagon identities: the sixteen reduced forms on powers of `H`, and both hexagons
//! evaluated on actual objects.
//!
//! Case `k` has sector pattern `HEXAGON_PATTERNS[k-1]` for `(A, B, C)`; `L` is the
//! hexagon containing `c_{A,B⊗C}`, `R` the one containing `c_{A⊗B,C}`.

use crate::error::Result;
use crate::gvect::State;
use crate::hopfcore::{compare_maps, HopfAlgebra};
use crate::monoidal_ext::{assoc, Obj};
use crate::report::{state_witness, Report};

use super::{braid, check_size, BraidData};

pub const HEXAGON_PATTERNS: [[u8; 3]; 8] =
    [[0, 0, 0], [0, 0, 1], [0, 1, 0], [1, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0], [1, 1, 1]];

type Step<'a> = Box<dyn Fn(&mut State) -> Result<()> + 'a>;

fn run(r: &mut Report, id: &str, h: &HopfAlgebra, n: usize, l: Step<'_>, rr: Step<'_>) -> Result<()> {
    r.push(id, compare_maps(&h.legs(n), l, rr)?);
    Ok(())
}

/// All sixteen reduced hexagon identities, in the order 1L, 1R, …, 8L, 8R.
pub fn check_hexagons_reduced(b: &BraidData) -> Result<Report> {
    let e = &b.ext;
    let h = &e.hopf;
    let mut r = Report::new("hexagons_reduced");
    let (rr, sigma, tau, nu, om) = (&b.r, &b.sigma, &b.tau, &b.nu, &b.omega_h);
    let (gamma, gbar, delta, dtil) = (&e.gamma, &e.gamma_inv, &e.delta, &e.delta_tilde);
    let om_tau = om.compose(tau)?;
    let om_tau = &om_tau;

    // 1L: (id⊗Δ)R = R₁₃R₁₂
    run(
        &mut r,
        "H-1L",
        h,
        0,
        Box::new(|st| {
            h.insert_at(st, 0, rr)?;
            h.delta_at(st, 1)
        }),
        Box::new(|st| {
            h.insert_at(st, 0, rr)?;
            h.insert_at(st, 2, rr)?;
            st.move_legs(1, 1, 3)?;
            h.mul_at(st, 0)
        }),
    )?;
    // 1R: (Δ⊗id)R = R₁₃R₂₃
    run(
        &mut r,
        "H-1R",
        h,
        0,
        Box::new(|st| {
            h.insert_at(st, 0, rr)?;
            h.delta_at(st, 0)
        }),
        Box::new(|st| {
            h.insert_at(st, 0, rr)?;
            h.insert_at(st, 2, rr)?;
            st.move_legs(2, 1, 1)?;
            h.mul_at(st, 2)
        }),
    )?;
    // 2L: γ̄′ ⊗ γ̄″σ = R″ ⊗ σR′
    run(
        &mut r,
        "H-2L",
        h,
        0,
        Box::new(|st| {
            h.insert_at(st, 0, gbar)?;
            h.insert_at(st, 2, sigma)?;
            h.mul_at(st, 1)
        }),
        Box::new(|st| {
            h.insert_at(st, 0, rr)?;
            st.swap(0)?;
            h.insert_at(st, 1, sigma)?;
            h.mul_at(st, 1)
        }),
    )?;
    // 2R: Δσ = (σ⊗1)γ(1⊗σ)
    run(
        &mut r,
        "H-2R",
        h,
        0,
        Box::new(|st| {
            h.insert_at(st, 0, sigma)?;
            h.delta_at(st, 0)
        }),
        Box::new(|st| {
            h.insert_at(st, 0, gamma)?;
            h.insert_at(st, 0, sigma)?;
            h.mul_at(st, 0)?;
            h.insert_at(st, 2, sigma)?;
            h.mul_at(st, 1)
        }),
    )?;
    // 3L: γ̄″ ⊗ σγ̄′ = R″ ⊗ R′σ
    run(
        &mut r,
        "H-3L",
        h,
        0,
        Box::new(|st| {
            h.insert_at(st, 0, gbar)?;
            st.swap(0)?;
            h.insert_at(st, 1, sigma)?;
            h.mul_at(st, 1)
        }),
        Box::new(|st| {
            h.insert_at(st, 0, rr)?;
            st.swap(0)?;
            h.insert_at(st, 2, sigma)?;
            h.mul_at(st, 1)
        }),
    )?;
    // 3R: ω(τγ″) ⊗ γ′ = R″ω(τ) ⊗ R′
    run(
        &mut r,
        "H-3R",
        h,
        0,
        Box::new(|st| {
            h.insert_at(st, 0, gamma)?;
            h.insert_at(st, 1, tau)?;
            h.mul_at(st, 1)?;
            h.map_at(st, 1, om)?;
            st.swap(0).map(|_| ())
        }),
        Box::new(|st| {
            h.insert_at(st, 0, rr)?;
            h.insert_at(st, 2, om_tau)?;
            h.mul_at(st, 1)?;
            st.swap(0).map(|_| ())
        }),
    )?;
    // 4L: ω(τ₁) ⊗ ω(τ₂) = γ̄′ω(τ) ⊗ ω(τγ̄″)
    run(
        &mut r,
        "H-4L",
        h,
        0,
        Box::new(|st| {
            h.insert_at(st, 0, tau)?;
            h.delta_at(st, 0)?;
            h.map_at(st, 0, om)?;
            h.map_at(st, 1, om)
        }),
        Box::new(|st| {
            h.insert_at(st, 0, gbar)?;
            h.insert_at(st, 1, om_tau)?;
            h.mul_at(st, 0)?;
            h.insert_at(st, 1, tau)?;
            h.mul_at(st, 1)?;
            h.map_at(st, 1, om)
        }),
    )?;
    // 4R: γ′ω(τ) ⊗ γ″ = ω(τR″) ⊗ R′
    run(
        &mut r,
        "H-4R",
        h,
        0,
        Box::new(|st| {
            h.insert_at(st, 0, gamma)?;
            h.insert_at(st, 1, om_tau)?;
            h.mul_at(st, 0)
        }),
        Box::new(|st| {
            h.insert_at(st, 0, rr)?;
            h.insert_at(st, 1, tau)?;
            h.mul_at(st, 1)?;
            h.map_at(st, 1, om)?;
            st.swap(0).map(|_| ())
        }),
    )?;
    // 5L: (R″h₂)₁ ⊗ S((R″h₂)₂)R′h₁ = hδ̃′ ⊗ σδ̃″σ
    run(
        &mut r,
        "H-5L",
        h,
        1,
        Box::new(|st| {
            h.delta_at(st, 0)?;
            h.insert_at(st, 0, rr)?;
            st.move_legs(2, 1, 1)?;
            h.mul_at(st, 0)?;
            h.mul_at(st, 1)?;
            h.delta_at(st, 1)?;
            h.s_at(st, 2)?;
            st.move_legs(0, 1, 2)?;
            h.mul_at(st, 1)
        }),
        Box::new(|st| {
            h.insert_at(st, 1, dtil)?;
            h.mul_at(st, 0)?;
            h.insert_at(st, 1, sigma)?;
            h.mul_at(st, 1)?;
            h.insert_at(st, 2, sigma)?;
            h.mul_at(st, 1)
        }),
    )?;
    // 5R: h₂νδ′ ⊗ δ″S⁻¹h₁ = (hν)₂ ⊗ σS⁻¹((hν)₁)
    run(
        &mut r,
        "H-5R",
        h,
        1,
        Box::new(|st| {
            h.delta_at(st, 0)?;
            st.swap(0)?;
            h.sinv_at(st, 1)?;
            h.insert_at(st, 1, nu)?;
            h.mul_at(st, 0)?;
            h.insert_at(st, 1, delta)?;
            h.mul_at(st, 0)?;
            h.mul_at(st, 1)
        }),
        Box::new(|st| {
            h.insert_at(st, 1, nu)?;
            h.mul_at(st, 0)?;
            h.delta_at(st, 0)?;
            st.swap(0)?;
            h.sinv_at(st, 1)?;
            h.insert_at(st, 1, sigma)?;
            h.mul_at(st, 1)
        }),
    )?;
    // 6L: (δ̃′ν)₁ω(δ̃″) ⊗ (δ̃′ν)₂ = ω(τ) ⊗ ν
    run(
        &mut r,
        "H-6L",
        h,
        0,
        Box::new(|st| {
            h.insert_at(st, 0, dtil)?;
            h.insert_at(st, 1, nu)?;
            h.mul_at(st, 0)?;
            h.map_at(st, 1, om)?;
            h.delta_at(st, 0)?;
            st.move_legs(2, 1, 1)?;
            h.mul_at(st, 0)
        }),
        Box::new(|st| {
            h.insert_at(st, 0, nu)?;
            h.insert_at(st, 0, om_tau)
        }),
    )?;
    // 6R: Δ(δ′ν)(1⊗δ″) = ν ⊗ σ
    run(
        &mut r,
        "H-6R",
        h,
        0,
        Box::new(|st| {
            h.insert_at(st, 0, delta)?;
            h.insert_at(st, 1, nu)?;
            h.mul_at(st, 0)?;
            h.delta_at(st, 0)?;
            h.mul_at(st, 1)
        }),
        Box::new(|st| {
            h.insert_at(st, 0, sigma)?;
            h.insert_at(st, 0, nu)
        }),
    )?;
    // 7L: h₁νδ̃′ ⊗ δ̃″ω(Sh₂) = (hν)₁ ⊗ ω(τS((hν)₂))
    run(
        &mut r,
        "H-7L",
        h,
        1,
        Box::new(|st| {
            h.delta_at(st, 0)?;
            h.s_at(st, 1)?;
            h.map_at(st, 1, om)?;
            h.insert_at(st, 1, nu)?;
            h.mul_at(st, 0)?;
            h.insert_at(st, 1, dtil)?;
            h.mul_at(st, 0)?;
            h.mul_at(st, 1)
        }),
        Box::new(|st| {
            h.insert_at(st, 1, nu)?;
            h.mul_at(st, 0)?;
            h.delta_at(st, 0)?;
            h.s_at(st, 1)?;
            h.insert_at(st, 1, tau)?;
            h.mul_at(st, 1)?;
            h.map_at(st, 1, om)
        }),
    )?;
    // 7R: (R′h₁)₂ ⊗ S⁻¹((R′h₁)₁)R″h₂ = hδ′ ⊗ ω(τδ″)τ
    run(
        &mut r,
        "H-7R",
        h,
        1,
        Box::new(|st| {
            h.delta_at(st, 0)?;
            h.insert_at(st, 0, rr)?;
            st.move_legs(2, 1, 1)?;
            h.mul_at(st, 0)?;
            h.mul_at(st, 1)?;
            h.delta_at(st, 0)?;
            st.swap(0)?;
            h.sinv_at(st, 1)?;
            h.mul_at(st, 1)
        }),
        Box::new(|st| {
            h.insert_at(st, 1, delta)?;
            h.mul_at(st, 0)?;
            h.insert_at(st, 1, tau)?;
            h.mul_at(st, 1)?;
            h.map_at(st, 1, om)?;
            h.insert_at(st, 2, tau)?;
            h.mul_at(st, 1)
        }),
    )?;
    // 8L: φ⁻¹(ω(τφ⁻¹(h))) = φ⁻¹(hν)ν
    run(
        &mut r,
        "H-8L",
        h,
        1,
        Box::new(|st| {
            h.map_at(st, 0, &e.phi_inv)?;
            h.insert_at(st, 0, tau)?;
            h.mul_at(st, 0)?;
            h.map_at(st, 0, om)?;
            h.map_at(st, 0, &e.phi_inv)
        }),
        Box::new(|st| {
            h.insert_at(st, 1, nu)?;
            h.mul_at(st, 0)?;
            h.map_at(st, 0, &e.phi_inv)?;
            h.insert_at(st, 1, nu)?;
            h.mul_at(st, 0)
        }),
    )?;
    // 8R: φ(σφ(h)) = φ(hν)ν
    run(
        &mut r,
        "H-8R",
        h,
        1,
        Box::new(|st| {
            h.map_at(st, 0, &e.phi)?;
            h.insert_at(st, 0, sigma)?;
            h.mul_at(st, 0)?;
            h.map_at(st, 0, &e.phi)
        }),
        Box::new(|st| {
            h.insert_at(st, 1, nu)?;
            h.mul_at(st, 0)?;
            h.map_at(st, 0, &e.phi)?;
            h.insert_at(st, 1, nu)?;
            h.mul_at(st, 0)
        }),
    )?;
    Ok(r)
}

/// Left hexagon on `(A⊗B)⊗C`; `None` if both sides agree.
pub fn hexagon_left(b: &BraidData, x: &Obj, y: &Obj, z: &Obj) -> Result<Option<String>> {
    let e = &b.ext;
    let h = &e.hopf;
    let legs = Obj::tensor(&Obj::tensor(x, y), z).legs(h);
    check_size(&legs)?;
    let mut s1 = State::identity(legs.clone());
    assoc(&mut s1, 0, x, y, z, e, true)?;
    braid(&mut s1, 0, x, &Obj::tensor(y, z), b)?;
    assoc(&mut s1, 0, y, z, x, e, true)?;
    let mut s2 = State::identity(legs);
    braid(&mut s2, Obj::internal_offset(&Obj::tensor(x, y), z), x, y, b)?;
    assoc(&mut s2, 0, y, x, z, e, true)?;
    let off = Obj::internal_offset(y, &Obj::tensor(x, z)) + y.num_legs();
    braid(&mut s2, off, x, z, b)?;
    Ok(state_witness(&s1, &s2))
}

/// Right hexagon on `A⊗(B⊗C)`.
pub fn hexagon_right(b: &BraidData, x: &Obj, y: &Obj, z: &Obj) -> Result<Option<String>> {
    let e = &b.ext;
    let h = &e.hopf;
    let legs = Obj::tensor(x, &Obj::tensor(y, z)).legs(h);
    check_size(&legs)?;
    let mut s1 = State::identity(legs.clone());
    assoc(&mut s1, 0, x, y, z, e, false)?;
    braid(&mut s1, 0, &Obj::tensor(x, y), z, b)?;
    assoc(&mut s1, 0, z, x, y, e, false)?;
    let mut s2 = State::identity(legs);
    let off = Obj::internal_offset(x, &Obj::tensor(y, z)) + x.num_legs();
    braid(&mut s2, off, y, z, b)?;
    assoc(&mut s2, 0, x, z, y, e, false)?;
    braid(&mut s2, Obj::internal_offset(&Obj::tensor(x, z), y), x, z, b)?;
    Ok(state_witness(&s1, &s2))
}

/// Both hexagons for every sector pattern over the given objects, named like the
/// reduced cases.
pub fn hexagons_on_modules_report(b: &BraidData, objs0: &[Obj], objs1: &[Obj]) -> Result<Report> {
    let mut r = Report::new("hexagons_on_modules");
    for (k, pat) in HEXAGON_PATTERNS.iter().enumerate() {
        let pools: Vec<&[Obj]> = pat.iter().map(|&s| if s == 0 { objs0 } else { objs1 }).collect();
        for (side, f) in [("L", hexagon_left as fn(&BraidData, &Obj, &Obj, &Obj) -> _), ("R", hexagon_right)] {
            let mut witness = None;
            'outer: for x in pools[0] {
                for y in pools[1] {
                    for z in pools[2] {
                        if let Some(w) = f(b, x, y, z)? {
                            witness = Some(format!("{}{}{}: {w}", x.name(), y.name(), z.name()));
                            break 'outer;
                        }
                    }
                }
            }
            r.push(format!("H-{}{side}", k + 1), witness);
        }
    }
    Ok(r)
}
