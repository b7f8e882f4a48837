//! Homomorphisms and the backtracking searches built on generator images.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    map: Vec<usize>,
}

impl GroupHom {
    /// Validates `map` exhaustively on all pairs.
    pub fn new(domain: &FiniteGroup, codomain: &FiniteGroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != domain.order() {
            return Err(Error::DomainMismatch(format!(
                "map has {} entries for a domain of order {}",
                map.len(),
                domain.order()
            )));
        }
        if map.iter().any(|&y| y >= codomain.order()) {
            return Err(Error::CodomainMismatch("image out of range".into()));
        }
        if map[domain.identity()] != codomain.identity() {
            return Err(Error::NotAHomomorphism {
                x: domain.identity(),
                y: domain.identity(),
            });
        }
        for x in domain.elements() {
            for y in domain.elements() {
                if map[domain.mul(x, y)] != codomain.mul(map[x], map[y]) {
                    return Err(Error::NotAHomomorphism { x, y });
                }
            }
        }
        Ok(Self::new_unchecked(domain, codomain, map))
    }

    pub(crate) fn new_unchecked(domain: &FiniteGroup, codomain: &FiniteGroup, map: Vec<usize>) -> Self {
        GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            map,
        }
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        Self::new_unchecked(g, g, g.elements().collect())
    }

    /// The map sending everything to the identity.
    pub fn trivial(domain: &FiniteGroup, codomain: &FiniteGroup) -> Self {
        Self::new_unchecked(domain, codomain, vec![codomain.identity(); domain.order()])
    }

    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn kernel(&self) -> Subgroup {
        let id = self.codomain.identity();
        Subgroup::from_sorted(
            &self.domain,
            self.domain.elements().filter(|&x| self.map[x] == id).collect(),
        )
    }

    pub fn image(&self) -> Subgroup {
        let mut elements = self.map.clone();
        elements.sort_unstable();
        elements.dedup();
        Subgroup::from_sorted(&self.codomain, elements)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.codomain.order()
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_injective()
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if self.codomain != other.domain {
            return Err(Error::DomainMismatch(
                "codomain of the first map differs from the domain of the second".into(),
            ));
        }
        Ok(Self::new_unchecked(
            &self.domain,
            &other.codomain,
            self.map.iter().map(|&x| other.map[x]).collect(),
        ))
    }

    pub fn inverse(&self) -> Option<GroupHom> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(Self::new_unchecked(&self.codomain, &self.domain, inv))
    }
}

/// `g ∘ f` for `f: A → B`, `g: B → C`.
pub fn compose(f: &GroupHom, g: &GroupHom) -> Result<GroupHom> {
    f.then(g)
}

/// Propagates generator images along the right Cayley graph of the subgroup
/// they generate. Returns `None` if some edge `x → x·g` receives two
/// different images, which is exactly the failure of the homomorphism
/// property on that subgroup.
pub(crate) fn extend_images(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<Option<usize>>> {
    let mut map = vec![None; domain.order()];
    map[domain.identity()] = Some(codomain.identity());
    let mut queue = VecDeque::from([domain.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x].expect("queued elements are mapped");
        for (&g, &img) in gens.iter().zip(images) {
            let y = domain.mul(x, g);
            let fy = codomain.mul(fx, img);
            match map[y] {
                None => {
                    map[y] = Some(fy);
                    queue.push_back(y);
                }
                Some(v) if v != fy => return None,
                Some(_) => {}
            }
        }
    }
    Some(map)
}

/// Enumerates homomorphisms `domain → codomain` determined by images of
/// `gens` drawn from `candidates[i]`, pruning any prefix that is already
/// inconsistent on the subgroup it generates. `gens` must generate `domain`.
pub(crate) fn search_homs<F>(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    mut visit: F,
) where
    F: FnMut(Vec<usize>) -> ControlFlow<()>,
{
    fn rec<F: FnMut(Vec<usize>) -> ControlFlow<()>>(
        domain: &FiniteGroup,
        codomain: &FiniteGroup,
        gens: &[usize],
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        visit: &mut F,
    ) -> ControlFlow<()> {
        let k = images.len();
        let Some(partial) = extend_images(domain, codomain, &gens[..k], images) else {
            return ControlFlow::Continue(());
        };
        if k == gens.len() {
            let full = partial
                .into_iter()
                .map(|v| v.expect("generators span the domain"))
                .collect();
            return visit(full);
        }
        for &c in &candidates[k] {
            images.push(c);
            let flow = rec(domain, codomain, gens, candidates, images, visit);
            images.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    let mut images = Vec::with_capacity(gens.len());
    let _ = rec(domain, codomain, gens, candidates, &mut images, &mut visit);
}

/// All homomorphisms `g → h`, sorted by map table.
pub fn all_homs(g: &FiniteGroup, h: &FiniteGroup) -> Vec<GroupHom> {
    let gens = g.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let ord = g.element_order(x);
            h.elements().filter(|&y| ord.is_multiple_of(h.element_order(y))).collect()
        })
        .collect();
    let mut out = Vec::new();
    search_homs(g, h, &gens, &candidates, |map| {
        out.push(map);
        ControlFlow::Continue(())
    });
    out.sort();
    out.into_iter().map(|m| GroupHom::new_unchecked(g, h, m)).collect()
}

/// Bijective homomorphisms `g1 → g2` found by backtracking over images of a
/// greedy generating set; images must preserve element orders.
fn search_isomorphisms<F>(g1: &FiniteGroup, g2: &FiniteGroup, mut visit: F)
where
    F: FnMut(Vec<usize>) -> ControlFlow<()>,
{
    if g1.order() != g2.order() || g1.order_profile() != g2.order_profile() {
        return;
    }
    let gens = g1.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let ord = g1.element_order(x);
            g2.elements().filter(|&y| g2.element_order(y) == ord).collect()
        })
        .collect();
    search_homs(g1, g2, &gens, &candidates, |map| {
        let mut seen = vec![false; g2.order()];
        for &y in &map {
            if seen[y] {
                return ControlFlow::Continue(());
            }
            seen[y] = true;
        }
        visit(map)
    });
}

pub fn find_isomorphism(g1: &FiniteGroup, g2: &FiniteGroup) -> Option<GroupHom> {
    let mut found = None;
    search_isomorphisms(g1, g2, |map| {
        found = Some(map);
        ControlFlow::Break(())
    });
    found.map(|m| GroupHom::new_unchecked(g1, g2, m))
}

pub fn are_isomorphic(g1: &FiniteGroup, g2: &FiniteGroup) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// All automorphism tables of `g`, sorted; the identity comes first.
pub(crate) fn automorphism_maps(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    search_isomorphisms(g, g, |map| {
        out.push(map);
        ControlFlow::Continue(())
    });
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic, klein, symmetric};

    #[test]
    fn kernel_image_compose() {
        let z4 = cyclic(4);
        let z2 = cyclic(2);
        assert_eq!(GroupHom::identity(&z4).kernel().elements(), &[0]);
        let mod2 = GroupHom::new(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
        assert_eq!(mod2.image().order(), 2);
        assert_eq!(mod2.kernel().elements(), &[0, 2]);

        let double = GroupHom::new(&z2, &z4, vec![0, 2]).unwrap();
        let zero = double.then(&mod2).unwrap();
        assert_eq!(zero.map(), &[0, 0]);
        assert!(matches!(mod2.then(&mod2), Err(Error::DomainMismatch(_))));
        assert!(matches!(
            GroupHom::new(&z4, &z2, vec![0, 1, 1, 0]),
            Err(Error::NotAHomomorphism { .. })
        ));
    }

    #[test]
    fn isomorphism_search() {
        let s3 = symmetric(3);
        let id = find_isomorphism(&s3, &s3).unwrap();
        assert!(id.is_bijective());
        assert!(find_isomorphism(&cyclic(4), &klein()).is_none());
        let c2 = cyclic(2);
        let c6 = crate::group::direct_product(&c2, &cyclic(3)).group;
        let iso = find_isomorphism(&c6, &cyclic(6)).unwrap();
        GroupHom::new(iso.domain(), iso.codomain(), iso.map().to_vec()).unwrap();
        let back = iso.inverse().unwrap();
        GroupHom::new(back.domain(), back.codomain(), back.map().to_vec()).unwrap();
    }

    #[test]
    fn hom_counts() {
        assert_eq!(all_homs(&cyclic(2), &cyclic(2)).len(), 2);
        assert_eq!(all_homs(&klein(), &cyclic(2)).len(), 4);
        assert_eq!(all_homs(&symmetric(3), &cyclic(2)).len(), 2);
        assert_eq!(all_homs(&symmetric(3), &cyclic(3)).len(), 1);
    }
}
