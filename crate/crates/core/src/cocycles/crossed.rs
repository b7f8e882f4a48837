//! Crossed morphisms `a(gh) = a(g)·ᵍa(h)`, their nonabelian H¹, and the
//! description of extension automorphisms by crossed morphisms into the
//! center of the kernel.

use std::collections::HashMap;

use crate::aut::GroupAction;
use crate::error::{Error, Result};
use crate::extension::{all_ext_isomorphisms, all_sections, ExtIso, Extension};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::torsor::induced_action_on_center;

use super::factor::FactorSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedMorphism {
    action: GroupAction,
    map: Vec<usize>,
}

impl CrossedMorphism {
    pub fn new(action: &GroupAction, map: Vec<usize>) -> Result<Self> {
        let (g, m) = (action.acting(), action.module());
        if map.len() != g.order() || map.iter().any(|&x| x >= m.order()) {
            return Err(Error::InvalidTable("crossed morphism table has the wrong shape".into()));
        }
        for x in g.elements() {
            for y in g.elements() {
                if map[g.mul(x, y)] != m.mul(map[x], action.apply(x, map[y])) {
                    return Err(Error::NotAHomomorphism { x, y });
                }
            }
        }
        Ok(Self::new_unchecked(action, map))
    }

    pub(crate) fn new_unchecked(action: &GroupAction, map: Vec<usize>) -> Self {
        CrossedMorphism {
            action: action.clone(),
            map,
        }
    }

    pub fn trivial(action: &GroupAction) -> Self {
        let m = action.module();
        Self::new_unchecked(action, vec![m.identity(); action.acting().order()])
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn group(&self) -> &FiniteGroup {
        self.action.acting()
    }

    pub fn coeff(&self) -> &FiniteGroup {
        self.action.module()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn is_trivial(&self) -> bool {
        let e = self.coeff().identity();
        self.map.iter().all(|&x| x == e)
    }

    /// `g ↦ m · a(g) · ᵍm⁻¹`.
    pub fn conjugate(&self, m: usize) -> CrossedMorphism {
        let c = self.coeff();
        let map = self
            .group()
            .elements()
            .map(|g| c.mul(c.mul(m, self.map[g]), self.action.apply(g, c.inv(m))))
            .collect();
        Self::new_unchecked(&self.action, map)
    }
}

/// `M ⋊ G` on the set `M × G`, element `(m, g)` at `m * |G| + g`.
pub fn semidirect(action: &GroupAction) -> Extension {
    let (g, m) = (action.acting(), action.module());
    let twist = vec![m.identity(); g.order() * g.order()];
    FactorSystem::new_unchecked(g, m, action.images().to_vec(), twist).to_extension()
}

/// All crossed morphisms for `action`, sorted by table.
///
/// A crossed morphism is the same thing as a homomorphic section
/// `g ↦ (a(g), g)` of `M ⋊ G`, so the section search supplies the pruning.
pub fn z1_cocycles(action: &GroupAction) -> Vec<CrossedMorphism> {
    let sd = semidirect(action);
    let ng = action.acting().order();
    all_sections(&sd)
        .iter()
        .map(|s| CrossedMorphism::new_unchecked(action, s.map().iter().map(|&x| x / ng).collect()))
        .collect()
}

/// Crossed morphisms into an abelian module under pointwise product.
#[derive(Clone, Debug)]
pub struct Z1Group {
    pub cocycles: Vec<CrossedMorphism>,
    pub group: FiniteGroup,
}

pub fn z1_group(action: &GroupAction) -> Result<Z1Group> {
    let m = action.module();
    if !m.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let cocycles = z1_cocycles(action);
    let index: HashMap<&[usize], usize> =
        cocycles.iter().enumerate().map(|(i, a)| (a.map(), i)).collect();
    let n = cocycles.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &cocycles {
        for b in &cocycles {
            let prod: Vec<usize> = a.map.iter().zip(&b.map).map(|(&x, &y)| m.mul(x, y)).collect();
            table.push(index[prod.as_slice()]);
        }
    }
    let group = FiniteGroup::from_trusted(n, table);
    Ok(Z1Group { cocycles, group })
}

/// Crossed morphisms modulo `a ~ (g ↦ m·a(g)·ᵍm⁻¹)`.
#[derive(Clone, Debug)]
pub struct H1Coc {
    pub cocycles: Vec<CrossedMorphism>,
    /// class of each cocycle; classes are numbered by their least member
    pub class_of: Vec<usize>,
    /// members of each class, ascending
    pub classes: Vec<Vec<usize>>,
}

impl H1Coc {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn index_of(&self, a: &[usize]) -> Option<usize> {
        self.cocycles.binary_search_by(|c| c.map().cmp(a)).ok()
    }

    /// Class of the trivial crossed morphism.
    pub fn distinguished(&self) -> usize {
        let e = self.cocycles[0].coeff().identity();
        let trivial = vec![e; self.cocycles[0].group().order()];
        self.class_of[self.index_of(&trivial).expect("the trivial map is a cocycle")]
    }

    pub fn class_of_map(&self, a: &[usize]) -> Option<usize> {
        self.index_of(a).map(|i| self.class_of[i])
    }
}

pub fn h1_coc(action: &GroupAction) -> H1Coc {
    let cocycles = z1_cocycles(action);
    let mut class_of = vec![usize::MAX; cocycles.len()];
    let mut classes = Vec::new();
    for i in 0..cocycles.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let k = classes.len();
        let mut members = Vec::new();
        for m in action.module().elements() {
            let conj = cocycles[i].conjugate(m);
            let j = cocycles
                .binary_search_by(|c| c.map().cmp(conj.map()))
                .expect("conjugates of cocycles are cocycles");
            if class_of[j] == usize::MAX {
                class_of[j] = k;
                members.push(j);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    H1Coc {
        cocycles,
        class_of,
        classes,
    }
}

/// `x ↦ ι(a(π x))·x` for a crossed morphism `a: G → Z(H)`.
pub fn automorphism_from_cocycle(e: &Extension, incl_z: &GroupHom, a: &CrossedMorphism) -> ExtIso {
    let t = e.total();
    let map = t
        .elements()
        .map(|x| t.mul(e.incl().apply(incl_z.apply(a.apply(e.proj().apply(x)))), x))
        .collect();
    ExtIso::new_unchecked(e, e, GroupHom::new_unchecked(t, t, map))
}

/// Automorphisms of an extension computed twice: by direct search and as
/// `x ↦ ι(a(π x))·x` over crossed morphisms `a: G → Z`.
#[derive(Clone, Debug)]
pub struct AutExtension {
    pub direct: Vec<ExtIso>,
    pub cocycles: Vec<CrossedMorphism>,
    pub from_cocycles: Vec<ExtIso>,
    /// `direct[correspondence[i]]` is the automorphism of `cocycles[i]`
    pub correspondence: Vec<usize>,
}

impl AutExtension {
    pub fn len(&self) -> usize {
        self.direct.len()
    }

    pub fn is_empty(&self) -> bool {
        self.direct.is_empty()
    }
}

/// Only the cocycle route, without the independent search.
pub fn cocycle_automorphisms(e: &Extension) -> Vec<ExtIso> {
    let centre = induced_action_on_center(e);
    z1_cocycles(&centre.action)
        .iter()
        .map(|a| automorphism_from_cocycle(e, &centre.incl, a))
        .collect()
}

/// Both routes, with the bijection and the product-to-composition
/// compatibility checked exhaustively.
pub fn aut_extension(e: &Extension) -> Result<AutExtension> {
    let direct = all_ext_isomorphisms(e, e)?;
    let centre = induced_action_on_center(e);
    let z1 = z1_group(&centre.action)?;
    let from_cocycles: Vec<ExtIso> =
        z1.cocycles.iter().map(|a| automorphism_from_cocycle(e, &centre.incl, a)).collect();
    if direct.len() != from_cocycles.len() {
        return Err(Error::ViolationFound(format!(
            "{} automorphisms found directly but {} crossed morphisms",
            direct.len(),
            from_cocycles.len()
        )));
    }
    let index: HashMap<&[usize], usize> =
        direct.iter().enumerate().map(|(i, a)| (a.map().map(), i)).collect();
    let mut correspondence = Vec::with_capacity(direct.len());
    for (i, iso) in from_cocycles.iter().enumerate() {
        ExtIso::new(e, e, iso.map().clone())?;
        let j = *index.get(iso.map().map()).ok_or_else(|| {
            Error::ViolationFound(format!("cocycle {i} gives a map missing from the direct search"))
        })?;
        if correspondence.contains(&j) {
            return Err(Error::ViolationFound(format!("two cocycles give automorphism {j}")));
        }
        correspondence.push(j);
    }
    // pointwise product of cocycles corresponds to composition
    let n = z1.cocycles.len();
    let t = e.total();
    for a in 0..n {
        for b in 0..n {
            let ab = z1.group.mul(a, b);
            let fa = from_cocycles[a].map().map();
            let fb = from_cocycles[b].map().map();
            let composite = t.elements().all(|x| fa[fb[x]] == from_cocycles[ab].apply(x));
            if !composite {
                return Err(Error::ViolationFound(format!(
                    "cocycles {a} and {b} do not compose like their product"
                )));
            }
        }
    }
    Ok(AutExtension {
        direct,
        cocycles: z1.cocycles,
        from_cocycles,
        correspondence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic, symmetric};
    use crate::testing::{s3_ext, z4_ext};

    fn inversion_c3() -> GroupAction {
        GroupAction::new(&cyclic(2), &cyclic(3), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
    }

    #[test]
    fn crossed_morphism_counts() {
        let c1 = FiniteGroup::trivial();
        assert_eq!(z1_cocycles(&GroupAction::trivial(&c1, &cyclic(5))).len(), 1);
        assert_eq!(z1_cocycles(&GroupAction::trivial(&cyclic(2), &cyclic(2))).len(), 2);
        // a(t) + ᵗa(t) = a(t) − a(t) = 0 for every a(t) ∈ C3
        let inv = z1_cocycles(&inversion_c3());
        assert_eq!(inv.len(), 3);
        for a in &inv {
            CrossedMorphism::new(&inversion_c3(), a.map().to_vec()).unwrap();
        }
        assert!(CrossedMorphism::new(&GroupAction::trivial(&cyclic(2), &cyclic(3)), vec![0, 1]).is_err());
    }

    #[test]
    fn h1_orbits() {
        let c1 = FiniteGroup::trivial();
        assert_eq!(h1_coc(&GroupAction::trivial(&cyclic(3), &c1)).len(), 1);
        assert_eq!(h1_coc(&GroupAction::trivial(&cyclic(2), &cyclic(2))).len(), 2);
        // homs C2 → S3 up to conjugacy: identity and one class of transpositions
        let s3 = symmetric(3);
        let h1 = h1_coc(&GroupAction::trivial(&cyclic(2), &s3));
        assert_eq!(h1.cocycles.len(), 4);
        let involution_classes = {
            let inv: Vec<usize> = s3.elements().filter(|&x| s3.mul(x, x) == 0).collect();
            let mut reps: Vec<usize> = inv
                .iter()
                .map(|&x| s3.elements().map(|g| s3.conj(g, x)).min().unwrap())
                .collect();
            reps.sort_unstable();
            reps.dedup();
            reps.len()
        };
        assert_eq!(h1.len(), involution_classes);
        assert_eq!(h1.distinguished(), 0);
    }

    #[test]
    fn automorphisms_both_ways() {
        let trivial_g = Extension::trivial_quotient(&cyclic(3));
        assert_eq!(aut_extension(&trivial_g).unwrap().len(), 1);
        let z4 = aut_extension(&z4_ext()).unwrap();
        assert_eq!(z4.len(), 2);
        let negation: Vec<usize> = vec![0, 3, 2, 1];
        assert!(z4.direct.iter().any(|a| a.map().map() == negation.as_slice()));
        assert_eq!(aut_extension(&s3_ext()).unwrap().len(), 3);
        assert_eq!(cocycle_automorphisms(&s3_ext()).len(), 3);
    }
}
