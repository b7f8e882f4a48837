//! Automorphism groups realized as finite groups, and group actions.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{quotient, FiniteGroup, Subgroup};
use crate::hom::{automorphism_maps, GroupHom};

/// `Aut(G)` on its own elements. Element `i` is the automorphism
/// `maps()[i]`; the product `a·b` is the composite `a ∘ b`.
#[derive(Clone, Debug)]
pub struct AutGroup {
    base: FiniteGroup,
    maps: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    group: FiniteGroup,
}

impl AutGroup {
    pub fn of(base: &FiniteGroup) -> Self {
        let maps = automorphism_maps(base);
        let index: HashMap<Vec<usize>, usize> =
            maps.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let n = maps.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &maps {
            for b in &maps {
                let ab: Vec<usize> = b.iter().map(|&x| a[x]).collect();
                table.push(index[&ab]);
            }
        }
        AutGroup {
            base: base.clone(),
            group: FiniteGroup::from_trusted(n, table),
            maps,
            index,
        }
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn index_of(&self, map: &[usize]) -> Option<usize> {
        self.index.get(map).copied()
    }

    pub fn automorphisms(&self) -> Vec<GroupHom> {
        self.maps
            .iter()
            .map(|m| GroupHom::new_unchecked(&self.base, &self.base, m.clone()))
            .collect()
    }

    /// Index of conjugation `x ↦ g x g⁻¹`.
    pub fn inner_of(&self, g: usize) -> usize {
        let map: Vec<usize> = self.base.elements().map(|x| self.base.conj(g, x)).collect();
        self.index[&map]
    }

    pub fn inner(&self) -> Subgroup {
        let mut elems: Vec<usize> = self.base.elements().map(|g| self.inner_of(g)).collect();
        elems.sort_unstable();
        elems.dedup();
        Subgroup::from_sorted(&self.group, elems)
    }

    /// `Out(G) = Aut(G)/Inn(G)` with the projection from `Aut(G)`.
    pub fn out_group(&self) -> (FiniteGroup, GroupHom) {
        quotient(&self.group, &self.inner()).expect("inner automorphisms form a normal subgroup")
    }
}

pub fn automorphisms(g: &FiniteGroup) -> Vec<GroupHom> {
    AutGroup::of(g).automorphisms()
}

pub fn inner_automorphisms(g: &FiniteGroup) -> (AutGroup, Subgroup) {
    let aut = AutGroup::of(g);
    let inn = aut.inner();
    (aut, inn)
}

pub fn out_group(g: &FiniteGroup) -> (FiniteGroup, GroupHom) {
    AutGroup::of(g).out_group()
}

/// An action of `acting` on `module` by automorphisms, stored as one
/// permutation table per acting element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    acting: FiniteGroup,
    module: FiniteGroup,
    images: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(acting: &FiniteGroup, module: &FiniteGroup, images: Vec<Vec<usize>>) -> Result<Self> {
        if images.len() != acting.order() {
            return Err(Error::DomainMismatch("one table per acting element expected".into()));
        }
        for img in &images {
            GroupHom::new(module, module, img.clone())?;
            if !GroupHom::new_unchecked(module, module, img.clone()).is_bijective() {
                return Err(Error::NotInjective);
            }
        }
        for g in acting.elements() {
            for h in acting.elements() {
                let gh = acting.mul(g, h);
                if module.elements().any(|m| images[gh][m] != images[g][images[h][m]]) {
                    return Err(Error::NotAHomomorphism { x: g, y: h });
                }
            }
        }
        Ok(Self::new_unchecked(acting, module, images))
    }

    pub(crate) fn new_unchecked(acting: &FiniteGroup, module: &FiniteGroup, images: Vec<Vec<usize>>) -> Self {
        GroupAction {
            acting: acting.clone(),
            module: module.clone(),
            images,
        }
    }

    pub fn trivial(acting: &FiniteGroup, module: &FiniteGroup) -> Self {
        let id: Vec<usize> = module.elements().collect();
        Self::new_unchecked(acting, module, vec![id; acting.order()])
    }

    /// Reads an action off a homomorphism into `aut.group()`.
    pub fn from_hom(hom: &GroupHom, aut: &AutGroup) -> Result<Self> {
        if hom.codomain() != aut.group() {
            return Err(Error::CodomainMismatch("homomorphism does not land in Aut".into()));
        }
        let images = hom.map().iter().map(|&a| aut.maps()[a].clone()).collect();
        Ok(Self::new_unchecked(hom.domain(), aut.base(), images))
    }

    pub fn to_hom(&self, aut: &AutGroup) -> GroupHom {
        assert_eq!(aut.base(), &self.module);
        let map = self
            .images
            .iter()
            .map(|img| aut.index_of(img).expect("action is by automorphisms"))
            .collect();
        GroupHom::new_unchecked(&self.acting, aut.group(), map)
    }

    pub fn acting(&self) -> &FiniteGroup {
        &self.acting
    }

    pub fn module(&self) -> &FiniteGroup {
        &self.module
    }

    pub fn images(&self) -> &[Vec<usize>] {
        &self.images
    }

    /// `ᵍm`.
    #[inline]
    pub fn apply(&self, g: usize, m: usize) -> usize {
        self.images[g][m]
    }

    pub fn is_trivial(&self) -> bool {
        self.images
            .iter()
            .all(|img| img.iter().enumerate().all(|(i, &j)| i == j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic, klein, quaternion, symmetric};

    #[test]
    fn small_automorphism_groups() {
        assert_eq!(automorphisms(&cyclic(2)).len(), 1);

        let s3 = AutGroup::of(&symmetric(3));
        assert_eq!(s3.group().order(), 6);
        assert_eq!(s3.inner().order(), 6);
        assert_eq!(s3.out_group().0.order(), 1);

        assert_eq!(automorphisms(&klein()).len(), 6);

        let q8 = AutGroup::of(&quaternion());
        assert_eq!(q8.group().order(), 24);
        assert_eq!(q8.inner().order(), 4);
        assert_eq!(q8.out_group().0.order(), 6);
    }

    #[test]
    fn inner_is_normal_and_closed() {
        for g in [symmetric(3), quaternion(), crate::catalog::dihedral(4)] {
            let aut = AutGroup::of(&g);
            assert_eq!(aut.maps()[0], g.elements().collect::<Vec<_>>());
            assert!(aut.inner().is_normal());
            FiniteGroup::from_flat(aut.group().order(), aut.group().table().to_vec()).unwrap();
        }
    }

    #[test]
    fn action_round_trip() {
        let c2 = cyclic(2);
        let c3 = cyclic(3);
        let inversion = GroupAction::new(&c2, &c3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let aut = AutGroup::of(&c3);
        let hom = inversion.to_hom(&aut);
        assert_eq!(GroupAction::from_hom(&hom, &aut).unwrap(), inversion);
        assert!(!inversion.is_trivial());
        assert!(GroupAction::new(&c3, &c3, vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1]]).is_err());
    }
}
