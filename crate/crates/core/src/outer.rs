//! Outer actions: the quotient `E/Z` by the center of the kernel with its
//! conjugation action on `H`, identifications of these data between two
//! extensions, the diagonal-normality criterion and the classical
//! `κ: G → Out(H)`.

use crate::aut::AutGroup;
use crate::cocycles::cocycle_automorphisms;
use crate::error::{Error, Result};
use crate::extension::{
    ext_isomorphism, fiber_product_extension, pushforward_with_map, ExtIso, Extension,
    FiberExtension,
};
use crate::group::{center, quotient, FiniteGroup, Subgroup};
use crate::hom::GroupHom;

/// `E/Z` together with everything needed to compare outer actions.
#[derive(Clone, Debug)]
pub struct OuterProfile {
    pub extension: Extension,
    /// `1 → H/Z → E/Z → G → 1`
    pub e0: Extension,
    /// `E → E/Z`
    pub to_e0: GroupHom,
    /// `H → H/Z`
    pub to_hz: GroupHom,
    pub center: Subgroup,
    /// conjugation on `H` by each element of `E/Z`
    pub action: Vec<Vec<usize>>,
    /// automorphisms of the extension `E/Z`
    pub e0_auts: Vec<ExtIso>,
}

impl OuterProfile {
    pub fn new(e: &Extension) -> Self {
        let h = e.sub();
        let z = center(h);
        let (_, to_hz) = quotient(h, &z).expect("the center is normal");
        let (e0, to_e0) =
            pushforward_with_map(e, &to_hz).expect("the center is characteristic, hence normal in E");
        let mut action = vec![Vec::new(); e0.total().order()];
        for x in e.total().elements() {
            let y = to_e0.apply(x);
            if action[y].is_empty() {
                action[y] = e.conj_on_sub(x);
            }
        }
        let e0_auts = cocycle_automorphisms(&e0);
        OuterProfile {
            extension: e.clone(),
            e0,
            to_e0,
            to_hz,
            center: z,
            action,
            e0_auts,
        }
    }
}

pub fn quotient_by_center(e: &Extension) -> Extension {
    OuterProfile::new(e).e0
}

/// An identification `E1/Z → E2/Z` of extensions of `G` by `H/Z`.
#[derive(Clone, Debug)]
pub struct OuterWitness {
    pub e0_iso: ExtIso,
    /// whether the identification carries the action on `H` of `E1/Z` to
    /// that of `E2/Z`
    pub action_check: bool,
    /// number of compatible identifications found by the search
    pub multiplicity: usize,
}

impl OuterWitness {
    pub fn from_iso(p1: &OuterProfile, p2: &OuterProfile, iso: ExtIso) -> Self {
        let action_check = action_compatible(p1, p2, &iso);
        OuterWitness {
            e0_iso: iso,
            action_check,
            multiplicity: usize::from(action_check),
        }
    }

    pub fn identity(p: &OuterProfile) -> Self {
        OuterWitness {
            e0_iso: ExtIso::identity(&p.e0),
            action_check: true,
            multiplicity: 1,
        }
    }

    pub fn inverse(&self) -> Self {
        OuterWitness {
            e0_iso: self.e0_iso.inverse(),
            ..self.clone()
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &OuterWitness) -> Result<Self> {
        Ok(OuterWitness {
            e0_iso: self.e0_iso.then(&other.e0_iso)?,
            action_check: self.action_check && other.action_check,
            multiplicity: self.multiplicity.min(other.multiplicity),
        })
    }
}

/// Pointwise check that `ψ` transports the action of `E1/Z` on `H` to
/// that of `E2/Z`.
pub fn action_compatible(p1: &OuterProfile, p2: &OuterProfile, iso: &ExtIso) -> bool {
    p1.e0
        .total()
        .elements()
        .all(|y| p2.action[iso.apply(y)] == p1.action[y])
}

/// Every isomorphism of extensions `E1/Z → E2/Z`: one found by search,
/// composed with the automorphisms of `E2/Z` described by crossed
/// morphisms.
pub fn e0_identifications(p1: &OuterProfile, p2: &OuterProfile) -> Result<Vec<ExtIso>> {
    if !p1.extension.same_signature(&p2.extension) {
        return Err(Error::SignatureMismatch);
    }
    let Some(psi0) = ext_isomorphism(&p1.e0, &p2.e0)? else {
        return Ok(Vec::new());
    };
    p2.e0_auts.iter().map(|a| psi0.then(a)).collect()
}

pub fn same_outer_action_profiles(p1: &OuterProfile, p2: &OuterProfile) -> Result<Option<OuterWitness>> {
    let mut found: Option<ExtIso> = None;
    let mut multiplicity = 0;
    for iso in e0_identifications(p1, p2)? {
        if action_compatible(p1, p2, &iso) {
            multiplicity += 1;
            if found.is_none() {
                found = Some(iso);
            }
        }
    }
    Ok(found.map(|e0_iso| OuterWitness {
        e0_iso,
        action_check: true,
        multiplicity,
    }))
}

pub fn same_outer_action(e1: &Extension, e2: &Extension) -> Result<Option<OuterWitness>> {
    if !e1.same_signature(e2) {
        return Err(Error::SignatureMismatch);
    }
    same_outer_action_profiles(&OuterProfile::new(e1), &OuterProfile::new(e2))
}

/// `E1 ×_{E0} E2` for `E1 → E1/Z = E0` and `E2 → E2/Z → E0` through the
/// inverse of the witness; an extension of `G` by `H ×_{H/Z} H`.
pub fn fiber_over_e0(p1: &OuterProfile, p2: &OuterProfile, iso: &ExtIso) -> Result<FiberExtension> {
    let back = iso.inverse();
    let f2 = p2.to_e0.then(back.map())?;
    fiber_product_extension(&p1.extension, &p2.extension, &p1.to_e0, &f2)
}

/// `Δ(H) = {(ι1 h, ι2 h)}` inside `E1 ×_{E0} E2`.
pub fn diagonal(fe: &FiberExtension, e1: &Extension, e2: &Extension) -> Subgroup {
    let elems = e1.sub().elements().map(|h| {
        fe.total
            .index_of(e1.incl().apply(h), e2.incl().apply(h))
            .expect("the diagonal lies over a common point of E0")
    });
    Subgroup::new(&fe.total.group, elems).expect("the diagonal is a subgroup")
}

pub fn delta_normality_profiles(p1: &OuterProfile, p2: &OuterProfile, iso: &ExtIso) -> Result<bool> {
    let fe = fiber_over_e0(p1, p2, iso)?;
    Ok(diagonal(&fe, &p1.extension, &p2.extension).is_normal())
}

/// Whether `Δ(H)` is normal in `E1 ×_{E0} E2` for the identification in `w`.
pub fn delta_normality_test(e1: &Extension, e2: &Extension, w: &OuterWitness) -> Result<bool> {
    delta_normality_profiles(&OuterProfile::new(e1), &OuterProfile::new(e2), &w.e0_iso)
}

/// `G → Out(H)`, into the realization `AutGroup::of(H).out_group()`.
pub fn classical_kappa(e: &Extension) -> GroupHom {
    classical_kappa_with(e, &AutGroup::of(e.sub()))
}

pub fn classical_kappa_with(e: &Extension, aut: &AutGroup) -> GroupHom {
    let (out, p) = aut.out_group();
    let map = e
        .quot()
        .elements()
        .map(|g| {
            let a = aut.index_of(&e.conj_on_sub(e.lift(g))).expect("conjugation is an automorphism");
            p.apply(a)
        })
        .collect();
    GroupHom::new_unchecked(e.quot(), &out, map)
}

/// The center of `H` as a group in its own right.
pub fn center_group(h: &FiniteGroup) -> (FiniteGroup, GroupHom) {
    center(h).to_group()
}
