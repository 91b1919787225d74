//! The sixteen pentagon identities written directly in terms of `H`, `γ`, `δ`, `δ̃`, `φ`.
//!
//! Each case `P-k` corresponds to one sector pattern of `(A, B, C, D)`; with the module
//! legs stripped off, the pentagon for that pattern becomes the identity computed here.
//! The cases 1, 2, 5 relate identity associators only.

use crate::error::Result;
use crate::gvect::State;
use crate::hopfcore::{compare_maps, HopfAlgebra};
use crate::report::Report;

use super::ExtData;

/// Sector pattern `(A, B, C, D)` of each case, in order `P-1 … P-16`.
pub const PENTAGON_PATTERNS: [[u8; 4]; 16] = [
    [0, 0, 0, 0],
    [0, 0, 0, 1],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [1, 0, 0, 0],
    [0, 0, 1, 1],
    [0, 1, 0, 1],
    [1, 0, 0, 1],
    [0, 1, 1, 0],
    [1, 0, 1, 0],
    [1, 1, 0, 0],
    [0, 1, 1, 1],
    [1, 0, 1, 1],
    [1, 1, 0, 1],
    [1, 1, 1, 0],
    [1, 1, 1, 1],
];

pub fn pentagon_case_pattern(k: usize) -> Option<[u8; 4]> {
    PENTAGON_PATTERNS.get(k.wrapping_sub(1)).copied()
}

type Step<'a> = Box<dyn Fn(&mut State) -> Result<()> + 'a>;

/// `(Δ⊗id)x = x₁₃x₂₃` for an even element `x ∈ H⊗H`.
fn delta_left_identity<'a>(h: &'a HopfAlgebra, x: &'a crate::gvect::Mor) -> (Step<'a>, Step<'a>) {
    (
        Box::new(move |st| {
            h.insert_at(st, 0, x)?;
            h.delta_at(st, 0)
        }),
        Box::new(move |st| {
            h.insert_at(st, 0, x)?;
            h.insert_at(st, 2, x)?;
            st.move_legs(2, 1, 1)?;
            h.mul_at(st, 2)
        }),
    )
}

/// `(id⊗Δ)x = x₁₂x₁₃`.
fn delta_right_identity<'a>(h: &'a HopfAlgebra, x: &'a crate::gvect::Mor) -> (Step<'a>, Step<'a>) {
    (
        Box::new(move |st| {
            h.insert_at(st, 0, x)?;
            h.delta_at(st, 1)
        }),
        Box::new(move |st| {
            h.insert_at(st, 0, x)?;
            h.insert_at(st, 2, x)?;
            st.move_legs(2, 1, 1)?;
            h.mul_at(st, 0)
        }),
    )
}

/// `a ⊗ b ↦ γ′a ⊗ γ″b` as an operator on `H⊗H`; applying it keeps states narrower
/// than inserting `γ` and multiplying.
fn gamma_multiplication(h: &HopfAlgebra, gamma: &crate::gvect::Mor) -> Result<crate::gvect::Mor> {
    let mut st = State::identity(h.legs(2));
    h.insert_at(&mut st, 0, gamma)?;
    st.move_legs(1, 1, 2)?;
    h.mul_at(&mut st, 0)?;
    h.mul_at(&mut st, 1)?;
    Ok(st.to_mor())
}

fn run(r: &mut Report, id: &str, h: &HopfAlgebra, n: usize, (l, rr): (Step<'_>, Step<'_>)) -> Result<()> {
    let w = compare_maps(&h.legs(n), l, rr)?;
    r.push(id, w);
    Ok(())
}

/// P-3 and P-4 for `γ` alone; part of the copairing conditions.
pub(crate) fn copairing_identities(h: &HopfAlgebra, gamma: &crate::gvect::Mor) -> Result<Report> {
    let mut r = Report::new("copairing_identities");
    run(&mut r, "P-3", h, 0, delta_left_identity(h, gamma))?;
    run(&mut r, "P-4", h, 0, delta_right_identity(h, gamma))?;
    Ok(r)
}

/// All sixteen reduced pentagon identities.
pub fn check_pentagon_reduced(e: &ExtData) -> Result<Report> {
    let h = &e.hopf;
    let mut r = Report::new("pentagon_reduced");
    let (phi, delta, gamma) = (&e.phi, &e.delta, &e.gamma);
    for k in [1, 2] {
        r.pass(format!("P-{k}"));
    }
    run(&mut r, "P-3", h, 0, delta_left_identity(h, gamma))?;
    run(&mut r, "P-4", h, 0, delta_right_identity(h, gamma))?;
    r.pass("P-5");
    let gamma_mult = gamma_multiplication(h, gamma)?;
    // P-6: h₂ ⊗ Δ(S⁻¹h₁) = h₃ ⊗ S⁻¹h₂ ⊗ S⁻¹h₁
    run(
        &mut r,
        "P-6",
        h,
        1,
        (
            Box::new(|st| {
                h.delta_at(st, 0)?;
                st.swap(0)?;
                h.sinv_at(st, 1)?;
                h.delta_at(st, 1)
            }),
            Box::new(|st| {
                h.delta_at(st, 0)?;
                st.swap(0)?;
                h.sinv_at(st, 1)?;
                h.delta_at(st, 0)?;
                st.swap(0)?;
                h.sinv_at(st, 1)
            }),
        ),
    )?;
    // P-7: h₂δ′ ⊗ S⁻¹h₁ ⊗ δ″ = (hδ′)₂ ⊗ γ′S⁻¹((hδ′)₁) ⊗ γ″δ″
    run(
        &mut r,
        "P-7",
        h,
        1,
        (
            Box::new(|st| {
                h.delta_at(st, 0)?;
                st.swap(0)?;
                h.sinv_at(st, 1)?;
                h.insert_at(st, 1, delta)?;
                h.mul_at(st, 0)?;
                st.swap(1).map(|_| ())
            }),
            Box::new(|st| {
                h.insert_at(st, 1, delta)?;
                h.mul_at(st, 0)?;
                h.delta_at(st, 0)?;
                st.swap(0)?;
                h.sinv_at(st, 1)?;
                st.apply(1, 2, &gamma_mult, h.legs(2)).map(|_| ())
            }),
        ),
    )?;
    run(&mut r, "P-8", h, 0, delta_right_identity(h, delta))?;
    // P-9: h₂₁ ⊗ S⁻¹h₁ ⊗ h₂₂ = h₁₂ ⊗ S⁻¹h₁₁ ⊗ h₂
    run(
        &mut r,
        "P-9",
        h,
        1,
        (
            Box::new(|st| {
                h.delta_at(st, 0)?;
                st.swap(0)?;
                h.sinv_at(st, 1)?;
                h.delta_at(st, 0)?;
                st.move_legs(1, 1, 2).map(|_| ())
            }),
            Box::new(|st| {
                h.delta_at(st, 0)?;
                h.delta_at(st, 0)?;
                st.swap(0)?;
                h.sinv_at(st, 1)
            }),
        ),
    )?;
    // P-10: δ′₁ ⊗ δ″ ⊗ δ′₂ = δ′ ⊗ δ″γ′ ⊗ γ″
    run(
        &mut r,
        "P-10",
        h,
        0,
        (
            Box::new(|st| {
                h.insert_at(st, 0, delta)?;
                h.delta_at(st, 0)?;
                st.swap(1).map(|_| ())
            }),
            Box::new(|st| {
                h.insert_at(st, 0, delta)?;
                h.insert_at(st, 2, gamma)?;
                h.mul_at(st, 1)
            }),
        ),
    )?;
    // P-11: coassociativity
    run(
        &mut r,
        "P-11",
        h,
        1,
        (
            Box::new(|st| {
                h.delta_at(st, 0)?;
                h.delta_at(st, 1)
            }),
            Box::new(|st| {
                h.delta_at(st, 0)?;
                h.delta_at(st, 0)
            }),
        ),
    )?;
    // P-12: φ(γ″h) ⊗ γ′ = φ(h)₂ ⊗ S⁻¹(φ(h)₁)
    run(
        &mut r,
        "P-12",
        h,
        1,
        (
            Box::new(|st| {
                h.insert_at(st, 0, gamma)?;
                h.mul_at(st, 1)?;
                h.map_at(st, 1, phi)?;
                st.swap(0).map(|_| ())
            }),
            Box::new(|st| {
                h.map_at(st, 0, phi)?;
                h.delta_at(st, 0)?;
                h.sinv_at(st, 0)?;
                st.swap(0).map(|_| ())
            }),
        ),
    )?;
    // P-13: φ(h) ⊗ 1 = φ(h₂)δ′ ⊗ δ″S⁻¹(h₁)
    run(
        &mut r,
        "P-13",
        h,
        1,
        (
            Box::new(|st| {
                h.map_at(st, 0, phi)?;
                h.insert_at(st, 1, &h.eta)
            }),
            Box::new(|st| {
                h.delta_at(st, 0)?;
                st.swap(0)?;
                h.sinv_at(st, 1)?;
                h.map_at(st, 0, phi)?;
                h.insert_at(st, 1, delta)?;
                h.mul_at(st, 0)?;
                h.mul_at(st, 1)
            }),
        ),
    )?;
    // P-14: φ(h) ⊗ 1 = Δ(φ(hδ′))(1⊗δ″)
    run(
        &mut r,
        "P-14",
        h,
        1,
        (
            Box::new(|st| {
                h.map_at(st, 0, phi)?;
                h.insert_at(st, 1, &h.eta)
            }),
            Box::new(|st| {
                h.insert_at(st, 1, delta)?;
                h.mul_at(st, 0)?;
                h.map_at(st, 0, phi)?;
                h.delta_at(st, 0)?;
                h.mul_at(st, 1)
            }),
        ),
    )?;
    // P-15: γ′φ(h) ⊗ γ″ = φ(h₁) ⊗ h₂
    run(
        &mut r,
        "P-15",
        h,
        1,
        (
            Box::new(|st| {
                h.map_at(st, 0, phi)?;
                h.insert_at(st, 0, gamma)?;
                st.swap(1)?;
                h.mul_at(st, 0)
            }),
            Box::new(|st| {
                h.delta_at(st, 0)?;
                h.map_at(st, 0, phi)
            }),
        ),
    )?;
    // P-16: h₂ ⊗ S⁻¹h₁ = δ′ ⊗ φ(δ″φ(h))
    run(
        &mut r,
        "P-16",
        h,
        1,
        (
            Box::new(|st| {
                h.delta_at(st, 0)?;
                st.swap(0)?;
                h.sinv_at(st, 1)
            }),
            Box::new(|st| {
                h.map_at(st, 0, phi)?;
                h.insert_at(st, 0, delta)?;
                h.mul_at(st, 1)?;
                h.map_at(st, 1, phi)
            }),
        ),
    )?;
    Ok(r)
}
