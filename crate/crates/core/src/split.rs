//! Split extensions in an outer class: the map `δ` sending a section of
//! `E0 = E/Z` to an extension of `G` by `Z`, the induced map `δ_E` into
//! the class set, and the checks that its image is the split locus.

use serde::Serialize;

use crate::aut::GroupAction;
use crate::cocycles::{baer_diff, extension_from_cocycle, h1_coc, CrossedMorphism, TwoCocycle};
use crate::error::{Error, Result};
use crate::extension::{all_sections, find_section, is_split, pullback, Extension};
use crate::hom::GroupHom;
use crate::outer::{same_outer_action_profiles, OuterProfile};
use crate::torsor::{act_with, induced_action_on_center, CenterAction, ExtClassSet};

/// `E` seen as an extension of `E0` by `Z`, pulled back along `s: G → E0`.
pub fn delta_map(e: &Extension, s: &GroupHom) -> Result<Extension> {
    delta_map_with(&OuterProfile::new(e), &induced_action_on_center(e), s)
}

pub fn delta_map_with(p: &OuterProfile, centre: &CenterAction, s: &GroupHom) -> Result<Extension> {
    let (e, e0) = (&p.extension, &p.e0);
    if s.domain() != e.quot() || s.codomain() != e0.total() {
        return Err(Error::NotASection);
    }
    if e.quot().elements().any(|g| e0.proj().apply(s.apply(g)) != g) {
        return Err(Error::NotASection);
    }
    let z_in_e = centre.incl.then(e.incl())?;
    let over_e0 = Extension::new(&centre.center, e.total(), e0.total(), z_in_e, p.to_e0.clone())?;
    pullback(&over_e0, s)
}

/// `(−δ(s))·[E]`.
pub fn delta_e_map(e: &Extension, s: &GroupHom) -> Result<Extension> {
    delta_e_with(&OuterProfile::new(e), &induced_action_on_center(e), s)
}

pub fn delta_e_with(p: &OuterProfile, centre: &CenterAction, s: &GroupHom) -> Result<Extension> {
    let es = delta_map_with(p, centre, s)?;
    let split = extension_from_cocycle(&TwoCocycle::zero(&centre.action));
    act_with(centre, &p.extension, &baer_diff(&split, &es)?)
}

/// `g ↦ ι0(b(g))·s0(g)` for a crossed morphism `b: G → H/Z` relative to the
/// action of `s0` on `H/Z`.
pub fn twisted_section(e0: &Extension, s0: &GroupHom, b: &CrossedMorphism) -> GroupHom {
    let t = e0.total();
    let map = e0
        .quot()
        .elements()
        .map(|g| t.mul(e0.incl().apply(b.apply(g)), s0.apply(g)))
        .collect();
    GroupHom::new_unchecked(e0.quot(), t, map)
}

/// The action of `G` on the kernel of `e` through a homomorphic section.
pub fn action_through(e: &Extension, s: &GroupHom) -> GroupAction {
    let images = e.quot().elements().map(|g| e.conj_on_sub(s.apply(g))).collect();
    GroupAction::new_unchecked(e.quot(), e.sub(), images)
}

/// Outcome of [`split_locus_check`]. Indices refer to the members of the
/// class set.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SplitReport {
    pub e0_split: bool,
    pub split_members: Vec<usize>,
    pub delta_image: Vec<usize>,
    pub image_is_split_locus: bool,
    pub nonempty_iff_e0_split: bool,
    pub base_independent: bool,
    pub section_independent: bool,
    /// `None` when no member is split
    pub exact_at_h1: Option<bool>,
    pub exact_at_ext: Option<bool>,
    pub counterexample: Option<String>,
}

impl SplitReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn first(slot: &mut Option<String>, msg: String) {
    if slot.is_none() {
        *slot = Some(msg);
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

/// Compares the split members with the image of `δ_E` and, when a split
/// member exists, checks exactness of
/// `H¹(G, H) → H¹(G, H/Z) → Ext(G, Z, E) → Ext(G, H, E)` at the middle.
pub fn split_report(s: &ExtClassSet) -> Result<SplitReport> {
    let centre = s.centre();
    let members = s.members();
    let index = s.member_index();
    let pbase = OuterProfile::new(s.base());
    let mut failure = None;

    let split_members: Vec<usize> = (0..members.len()).filter(|&i| is_split(&members[i])).collect();
    let sections0 = all_sections(&pbase.e0);
    let e0_split = !sections0.is_empty();
    let delta_image = sorted(
        sections0
            .iter()
            .map(|sec| index.locate(&delta_e_with(&pbase, centre, sec)?))
            .collect::<Result<_>>()?,
    );
    let image_is_split_locus = delta_image == split_members;
    if !image_is_split_locus {
        first(&mut failure, format!("split members {split_members:?} but δ_E image {delta_image:?}"));
    }
    let nonempty_iff_e0_split = split_members.is_empty() != e0_split;
    if !nonempty_iff_e0_split {
        first(&mut failure, format!("E0 split is {e0_split} but split members are {split_members:?}"));
    }

    // δ_E computed from any member, sections transported to the base
    let mut base_independent = true;
    for (i, p) in s.profiles().iter().enumerate() {
        let w = same_outer_action_profiles(p, &pbase)?
            .ok_or_else(|| Error::ViolationFound(format!("member {i} left the outer class")))?;
        for sec in all_sections(&p.e0) {
            let moved = sec.then(w.e0_iso.map())?;
            let here = index.locate(&delta_e_with(p, centre, &sec)?)?;
            let there = index.locate(&delta_e_with(&pbase, centre, &moved)?)?;
            if here != there {
                base_independent = false;
                first(&mut failure, format!("δ_E from E{i} differs from the base on a section"));
            }
        }
    }

    let mut section_independent = true;
    let mut exact_at_h1 = None;
    let mut exact_at_ext = None;
    if let Some(&b) = split_members.first() {
        let eb = &members[b];
        let pb = &s.profiles()[b];
        let sigma = find_section(eb).expect("split member has a section");
        let s0 = sigma.then(&pb.to_e0)?;
        let on_h = action_through(eb, &sigma);
        let on_hz = action_through(&pb.e0, &s0);
        let h1_h = h1_coc(&on_h);
        let h1_hz = h1_coc(&on_hz);
        let zindex = s.zindex();
        let split = extension_from_cocycle(&TwoCocycle::zero(&centre.action));

        // δ on every crossed morphism, constant on classes
        let delta: Vec<usize> = h1_hz
            .cocycles
            .iter()
            .map(|c| zindex.locate(&delta_map_with(pb, centre, &twisted_section(&pb.e0, &s0, c))?))
            .collect::<Result<_>>()?;
        let mut delta_class = vec![usize::MAX; h1_hz.len()];
        for (i, &d) in delta.iter().enumerate() {
            let c = h1_hz.class_of[i];
            if delta_class[c] == usize::MAX {
                delta_class[c] = d;
            } else if delta_class[c] != d {
                first(&mut failure, format!("δ is not constant on the H¹ class {c}"));
            }
        }

        // at H¹(G, H/Z): image of H¹(G, H) equals δ⁻¹(neutral)
        let from_h = sorted(
            h1_h.cocycles
                .iter()
                .map(|a| {
                    let reduced: Vec<usize> = a.map().iter().map(|&x| pb.to_hz.apply(x)).collect();
                    h1_hz
                        .class_of_map(&reduced)
                        .ok_or_else(|| Error::ViolationFound("reduced cocycle is not a cocycle".into()))
                })
                .collect::<Result<_>>()?,
        );
        let kernel_of_delta: Vec<usize> =
            (0..h1_hz.len()).filter(|&c| delta_class[c] == s.neutral()).collect();
        exact_at_h1 = Some(from_h == kernel_of_delta);
        if from_h != kernel_of_delta {
            first(&mut failure, format!("image {from_h:?} is not the kernel {kernel_of_delta:?} of δ"));
        }

        // at Ext(G, Z, E): image of δ equals the ζ with (−ζ)·[E_b] split,
        // the split classes being the distinguished subset of the last term
        let image = sorted(delta_class.clone());
        let mut to_split = Vec::new();
        for (j, z) in s.zgroup().iter().enumerate() {
            let moved = act_with(centre, eb, &baer_diff(&split, z)?)?;
            if split_members.binary_search(&index.locate(&moved)?).is_ok() {
                to_split.push(j);
            }
        }
        exact_at_ext = Some(image == to_split);
        if image != to_split {
            first(&mut failure, format!("δ image {image:?} differs from {to_split:?}"));
        }

        // another base section: b′ = b·(s0 s0′⁻¹) parametrizes the same sections
        let t0 = pb.e0.total();
        for s1 in all_sections(&pb.e0) {
            let on_hz1 = action_through(&pb.e0, &s1);
            let hz = pb.e0.sub();
            let twisted: Vec<Vec<usize>> = h1_hz
                .cocycles
                .iter()
                .map(|c| {
                    pb.e0
                        .quot()
                        .elements()
                        .map(|g| {
                            let shift = pb.e0.sub_index(t0.mul(s0.apply(g), t0.inv(s1.apply(g))));
                            hz.mul(c.apply(g), shift.expect("both sections lie over g"))
                        })
                        .collect()
                })
                .collect();
            let mut seen: Vec<Vec<usize>> = Vec::new();
            for (c, map) in h1_hz.cocycles.iter().zip(&twisted) {
                let Ok(c1) = CrossedMorphism::new(&on_hz1, map.clone()) else {
                    section_independent = false;
                    first(&mut failure, "twisted table is not a crossed morphism".into());
                    continue;
                };
                let lhs = twisted_section(&pb.e0, &s0, c);
                let rhs = twisted_section(&pb.e0, &s1, &c1);
                let d0 = zindex.locate(&delta_map_with(pb, centre, &lhs)?)?;
                let d1 = zindex.locate(&delta_map_with(pb, centre, &rhs)?)?;
                if lhs != rhs || d0 != d1 {
                    section_independent = false;
                    first(&mut failure, "twisting does not commute with δ".into());
                }
                seen.push(c1.map().to_vec());
            }
            seen.sort();
            seen.dedup();
            if seen.len() != h1_coc(&on_hz1).cocycles.len() {
                section_independent = false;
                first(&mut failure, "twisting is not a bijection of crossed morphisms".into());
            }
        }
    }

    Ok(SplitReport {
        e0_split,
        split_members,
        delta_image,
        image_is_split_locus,
        nonempty_iff_e0_split,
        base_independent,
        section_independent,
        exact_at_h1,
        exact_at_ext,
        counterexample: failure,
    })
}

/// [`split_report`], raising `ViolationFound` on the first failure.
pub fn split_locus_check(s: &ExtClassSet) -> Result<SplitReport> {
    let report = split_report(s)?;
    match &report.counterexample {
        Some(c) => Err(Error::ViolationFound(c.clone())),
        None => Ok(report),
    }
}

/// `δ_E` on a class of crossed morphisms relative to a base section.
pub fn delta_e_of_class(e: &Extension, s0: &GroupHom, b: &CrossedMorphism) -> Result<Extension> {
    let p = OuterProfile::new(e);
    if find_section(&p.e0).is_none() {
        return Err(Error::QuotientNotSplit);
    }
    let centre = induced_action_on_center(e);
    delta_e_with(&p, &centre, &twisted_section(&p.e0, s0, b))
}
