//! Extensions `1 → H → E → G → 1` and the operations on them: fiber
//! products, pullbacks, pushforwards, sections and strict isomorphisms.

use std::fmt;
use std::ops::ControlFlow;
use std::sync::Arc;

use crate::aut::{AutGroup, GroupAction};
use crate::error::{Error, Result};
use crate::group::{quotient, FiniteGroup, Subgroup};
use crate::hom::{search_homs, GroupHom};

#[derive(Clone)]
pub struct Extension {
    inner: Arc<ExtData>,
}

struct ExtData {
    sub: FiniteGroup,
    total: FiniteGroup,
    quot: FiniteGroup,
    incl: GroupHom,
    proj: GroupHom,
    /// total element -> kernel element, for elements of `incl(sub)`
    sub_of: Vec<Option<usize>>,
    /// quotient element -> sorted preimage in the total group
    fibers: Vec<Vec<usize>>,
}

impl fmt::Debug for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Extension({} -> {} -> {})",
            self.sub().order(),
            self.total().order(),
            self.quot().order()
        )
    }
}

impl Extension {
    /// Validates exactness of `sub --incl--> total --proj--> quot`.
    pub fn new(
        sub: &FiniteGroup,
        total: &FiniteGroup,
        quot: &FiniteGroup,
        incl: GroupHom,
        proj: GroupHom,
    ) -> Result<Self> {
        if incl.domain() != sub || incl.codomain() != total {
            return Err(Error::DomainMismatch("inclusion must map sub into total".into()));
        }
        if proj.domain() != total || proj.codomain() != quot {
            return Err(Error::DomainMismatch("projection must map total onto quot".into()));
        }
        if !incl.is_injective() {
            return Err(Error::NotInjective);
        }
        if !proj.is_surjective() {
            return Err(Error::NotSurjective);
        }
        if incl.image() != proj.kernel() {
            return Err(Error::NotExact);
        }
        let mut sub_of = vec![None; total.order()];
        for h in sub.elements() {
            sub_of[incl.apply(h)] = Some(h);
        }
        let mut fibers = vec![Vec::new(); quot.order()];
        for x in total.elements() {
            fibers[proj.apply(x)].push(x);
        }
        Ok(Extension {
            inner: Arc::new(ExtData {
                sub: sub.clone(),
                total: total.clone(),
                quot: quot.clone(),
                incl,
                proj,
                sub_of,
                fibers,
            }),
        })
    }

    /// `1 → H → H → 1 → 1`.
    pub fn trivial_quotient(h: &FiniteGroup) -> Self {
        let c1 = FiniteGroup::trivial();
        Self::new(h, h, &c1, GroupHom::identity(h), GroupHom::trivial(h, &c1))
            .expect("identity over the trivial group is exact")
    }

    /// `1 → 1 → G → G → 1`.
    pub fn trivial_kernel(g: &FiniteGroup) -> Self {
        let c1 = FiniteGroup::trivial();
        Self::new(&c1, g, g, GroupHom::trivial(&c1, g), GroupHom::identity(g))
            .expect("identity is exact")
    }

    pub fn sub(&self) -> &FiniteGroup {
        &self.inner.sub
    }

    pub fn total(&self) -> &FiniteGroup {
        &self.inner.total
    }

    pub fn quot(&self) -> &FiniteGroup {
        &self.inner.quot
    }

    pub fn incl(&self) -> &GroupHom {
        &self.inner.incl
    }

    pub fn proj(&self) -> &GroupHom {
        &self.inner.proj
    }

    /// Preimage of `x` under the inclusion, if `x` lies in the kernel.
    #[inline]
    pub fn sub_index(&self, x: usize) -> Option<usize> {
        self.inner.sub_of[x]
    }

    pub fn fiber(&self, g: usize) -> &[usize] {
        &self.inner.fibers[g]
    }

    /// Smallest total element over `g`.
    pub fn lift(&self, g: usize) -> usize {
        self.inner.fibers[g][0]
    }

    pub fn same_signature(&self, other: &Extension) -> bool {
        self.sub() == other.sub() && self.quot() == other.quot()
    }

    pub fn kernel_subgroup(&self) -> Subgroup {
        self.incl().image()
    }

    pub fn is_central(&self) -> bool {
        let e = self.total();
        self.sub().elements().all(|h| {
            let x = self.incl().apply(h);
            e.elements().all(|y| e.mul(x, y) == e.mul(y, x))
        })
    }

    /// Conjugation by a total element, read on the kernel: `h ↦ x h x⁻¹`.
    pub fn conj_on_sub(&self, x: usize) -> Vec<usize> {
        let e = self.total();
        self.sub()
            .elements()
            .map(|h| {
                self.sub_index(e.conj(x, self.incl().apply(h)))
                    .expect("kernel is normal")
            })
            .collect()
    }

    /// The action of the quotient on an abelian kernel.
    pub fn abelian_action(&self) -> Result<GroupAction> {
        if !self.sub().is_abelian() {
            return Err(Error::NotAbelian);
        }
        let images = self.quot().elements().map(|g| self.conj_on_sub(self.lift(g))).collect();
        Ok(GroupAction::new_unchecked(self.quot(), self.sub(), images))
    }

    /// An isomorphic copy with the total group relabelled by `perm`
    /// (old index -> new index).
    pub fn relabeled(&self, perm: &[usize]) -> Extension {
        let total = self.total().relabeled(perm);
        let incl_map = self.incl().map().iter().map(|&x| perm[x]).collect();
        let mut proj_map = vec![0; total.order()];
        for x in self.total().elements() {
            proj_map[perm[x]] = self.proj().apply(x);
        }
        Extension::new(
            self.sub(),
            &total,
            self.quot(),
            GroupHom::new_unchecked(self.sub(), &total, incl_map),
            GroupHom::new_unchecked(&total, self.quot(), proj_map),
        )
        .expect("relabelling preserves exactness")
    }

    /// Copy relabelled by reversing element indices.
    pub fn reversed(&self) -> Extension {
        let n = self.total().order();
        let perm: Vec<usize> = (0..n).map(|x| n - 1 - x).collect();
        self.relabeled(&perm)
    }
}

pub fn make_extension(
    sub: &FiniteGroup,
    total: &FiniteGroup,
    quot: &FiniteGroup,
    incl: GroupHom,
    proj: GroupHom,
) -> Result<Extension> {
    Extension::new(sub, total, quot, incl, proj)
}

/// `G1 ×_H G2` as the subgroup `{(x, y) : φ1(x) = φ2(y)}`, elements in
/// sorted pair order.
#[derive(Clone, Debug)]
pub struct FiberProduct {
    pub group: FiniteGroup,
    pub p1: GroupHom,
    pub p2: GroupHom,
    pairs: Vec<(usize, usize)>,
    index: Vec<usize>,
    right_order: usize,
}

impl FiberProduct {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        self.pairs[i]
    }

    pub fn index_of(&self, x: usize, y: usize) -> Option<usize> {
        match self.index[x * self.right_order + y] {
            usize::MAX => None,
            i => Some(i),
        }
    }

    /// The unique map from a cone `(a: K → G1, b: K → G2)` with
    /// `φ1∘a = φ2∘b`.
    pub fn lift_cone(&self, a: &GroupHom, b: &GroupHom) -> Result<GroupHom> {
        if a.domain() != b.domain() {
            return Err(Error::DomainMismatch("cone legs have different domains".into()));
        }
        let map = a
            .domain()
            .elements()
            .map(|k| {
                self.index_of(a.apply(k), b.apply(k))
                    .ok_or_else(|| Error::CodomainMismatch("cone does not commute".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupHom::new_unchecked(a.domain(), &self.group, map))
    }
}

pub fn fiber_product(phi1: &GroupHom, phi2: &GroupHom) -> Result<FiberProduct> {
    if phi1.codomain() != phi2.codomain() {
        return Err(Error::CodomainMismatch("fiber product over different groups".into()));
    }
    let (g1, g2) = (phi1.domain(), phi2.domain());
    let (n1, n2) = (g1.order(), g2.order());
    let mut pairs = Vec::new();
    let mut index = vec![usize::MAX; n1 * n2];
    for x in 0..n1 {
        for y in 0..n2 {
            if phi1.apply(x) == phi2.apply(y) {
                index[x * n2 + y] = pairs.len();
                pairs.push((x, y));
            }
        }
    }
    let m = pairs.len();
    let mut table = Vec::with_capacity(m * m);
    for &(x1, y1) in &pairs {
        for &(x2, y2) in &pairs {
            table.push(index[g1.mul(x1, x2) * n2 + g2.mul(y1, y2)]);
        }
    }
    let group = FiniteGroup::from_trusted(m, table);
    let p1 = GroupHom::new_unchecked(&group, g1, pairs.iter().map(|p| p.0).collect());
    let p2 = GroupHom::new_unchecked(&group, g2, pairs.iter().map(|p| p.1).collect());
    Ok(FiberProduct {
        group,
        p1,
        p2,
        pairs,
        index,
        right_order: n2,
    })
}

/// `E1 ×_T E2` for maps `fi: Ei → T` over a common quotient `G`, as an
/// extension of `G` by `H1 ×_T H2`.
#[derive(Clone, Debug)]
pub struct FiberExtension {
    pub extension: Extension,
    pub total: FiberProduct,
    pub sub: FiberProduct,
}

pub fn fiber_product_extension(
    e1: &Extension,
    e2: &Extension,
    f1: &GroupHom,
    f2: &GroupHom,
) -> Result<FiberExtension> {
    if e1.quot() != e2.quot() {
        return Err(Error::SignatureMismatch);
    }
    let total = fiber_product(f1, f2)?;
    let sub = fiber_product(&e1.incl().then(f1)?, &e2.incl().then(f2)?)?;
    let incl_map = sub
        .pairs()
        .iter()
        .map(|&(h1, h2)| {
            total
                .index_of(e1.incl().apply(h1), e2.incl().apply(h2))
                .expect("kernel pairs lie in the fiber product")
        })
        .collect();
    let proj_map: Vec<usize> = total
        .pairs()
        .iter()
        .map(|&(x, y)| {
            let g = e1.proj().apply(x);
            if e2.proj().apply(y) == g {
                Ok(g)
            } else {
                Err(Error::DomainMismatch("maps are not over a common quotient".into()))
            }
        })
        .collect::<Result<_>>()?;
    let extension = Extension::new(
        &sub.group,
        &total.group,
        e1.quot(),
        GroupHom::new_unchecked(&sub.group, &total.group, incl_map),
        GroupHom::new_unchecked(&total.group, e1.quot(), proj_map),
    )?;
    Ok(FiberExtension {
        extension,
        total,
        sub,
    })
}

/// `E1 ×_G E2`, an extension of `G` by `H1 × H2`.
pub fn fiber_product_over_quotient(e1: &Extension, e2: &Extension) -> Result<FiberExtension> {
    fiber_product_extension(e1, e2, e1.proj(), e2.proj())
}

/// `f*(E) = E ×_G G'` together with the comparison map to `E`.
pub fn pullback_square(e: &Extension, f: &GroupHom) -> Result<(Extension, GroupHom)> {
    if f.codomain() != e.quot() {
        return Err(Error::CodomainMismatch("pullback along a map into another group".into()));
    }
    let fp = fiber_product(e.proj(), f)?;
    let g2 = f.domain();
    let incl_map = e
        .sub()
        .elements()
        .map(|h| fp.index_of(e.incl().apply(h), g2.identity()).expect("kernel lies over 1"))
        .collect();
    let ext = Extension::new(
        e.sub(),
        &fp.group,
        g2,
        GroupHom::new_unchecked(e.sub(), &fp.group, incl_map),
        fp.p2.clone(),
    )?;
    Ok((ext, fp.p1))
}

pub fn pullback(e: &Extension, f: &GroupHom) -> Result<Extension> {
    pullback_square(e, f).map(|(ext, _)| ext)
}

/// `f_*(E) = [1 → H' → E/ker f → G → 1]` for surjective `f: H → H'`,
/// together with the quotient map `E → E/ker f`.
pub fn pushforward_with_map(e: &Extension, f: &GroupHom) -> Result<(Extension, GroupHom)> {
    if f.domain() != e.sub() {
        return Err(Error::DomainMismatch("pushforward along a map from another group".into()));
    }
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let ker = Subgroup::from_sorted(e.total(), {
        let mut v: Vec<usize> = f.kernel().elements().iter().map(|&h| e.incl().apply(h)).collect();
        v.sort_unstable();
        v
    });
    if !ker.is_normal() {
        return Err(Error::KernelNotNormalInE);
    }
    let (q, qmap) = quotient(e.total(), &ker)?;
    let target = f.codomain();
    let mut preimage = vec![usize::MAX; target.order()];
    for h in e.sub().elements().rev() {
        preimage[f.apply(h)] = h;
    }
    let incl_map = preimage
        .iter()
        .map(|&h| qmap.apply(e.incl().apply(h)))
        .collect();
    let mut proj_map = vec![0; q.order()];
    for x in e.total().elements() {
        proj_map[qmap.apply(x)] = e.proj().apply(x);
    }
    let ext = Extension::new(
        target,
        &q,
        e.quot(),
        GroupHom::new_unchecked(target, &q, incl_map),
        GroupHom::new_unchecked(&q, e.quot(), proj_map),
    )?;
    Ok((ext, qmap))
}

pub fn pushforward(e: &Extension, f: &GroupHom) -> Result<Extension> {
    pushforward_with_map(e, f).map(|(ext, _)| ext)
}

fn section_search<F: FnMut(Vec<usize>) -> ControlFlow<()>>(e: &Extension, visit: F) {
    let g = e.quot();
    let gens = g.generators();
    let candidates: Vec<Vec<usize>> = gens.iter().map(|&t| e.fiber(t).to_vec()).collect();
    search_homs(g, e.total(), &gens, &candidates, visit);
}

/// A homomorphic section `s: G → E` with `proj ∘ s = id`, if any.
pub fn find_section(e: &Extension) -> Option<GroupHom> {
    let mut found = None;
    section_search(e, |map| {
        found = Some(map);
        ControlFlow::Break(())
    });
    found.map(|m| GroupHom::new_unchecked(e.quot(), e.total(), m))
}

pub fn is_split(e: &Extension) -> bool {
    find_section(e).is_some()
}

/// Every homomorphic section, sorted by map table.
pub fn all_sections(e: &Extension) -> Vec<GroupHom> {
    let mut out = Vec::new();
    section_search(e, |map| {
        out.push(map);
        ControlFlow::Continue(())
    });
    out.sort();
    out.into_iter()
        .map(|m| GroupHom::new_unchecked(e.quot(), e.total(), m))
        .collect()
}

/// An isomorphism of totals inducing the identity on kernel and quotient.
#[derive(Clone, Debug)]
pub struct ExtIso {
    source: Extension,
    target: Extension,
    map: GroupHom,
}

impl ExtIso {
    pub fn new(source: &Extension, target: &Extension, map: GroupHom) -> Result<Self> {
        if !source.same_signature(target) {
            return Err(Error::SignatureMismatch);
        }
        if map.domain() != source.total() || map.codomain() != target.total() {
            return Err(Error::DomainMismatch("map between the wrong totals".into()));
        }
        if !map.is_bijective() {
            return Err(Error::NotInjective);
        }
        let incl_ok = source
            .sub()
            .elements()
            .all(|h| map.apply(source.incl().apply(h)) == target.incl().apply(h));
        let proj_ok = source
            .total()
            .elements()
            .all(|x| target.proj().apply(map.apply(x)) == source.proj().apply(x));
        if !(incl_ok && proj_ok) {
            return Err(Error::ViolationFound("map does not commute with the extension data".into()));
        }
        Ok(Self::new_unchecked(source, target, map))
    }

    pub(crate) fn new_unchecked(source: &Extension, target: &Extension, map: GroupHom) -> Self {
        ExtIso {
            source: source.clone(),
            target: target.clone(),
            map,
        }
    }

    pub fn identity(e: &Extension) -> Self {
        Self::new_unchecked(e, e, GroupHom::identity(e.total()))
    }

    pub fn source(&self) -> &Extension {
        &self.source
    }

    pub fn target(&self) -> &Extension {
        &self.target
    }

    pub fn map(&self) -> &GroupHom {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map.apply(x)
    }

    pub fn inverse(&self) -> ExtIso {
        Self::new_unchecked(
            &self.target,
            &self.source,
            self.map.inverse().expect("extension isomorphisms are bijective"),
        )
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ExtIso) -> Result<ExtIso> {
        Ok(Self::new_unchecked(&self.source, &other.target, self.map.then(&other.map)?))
    }
}

fn ext_iso_search<F: FnMut(Vec<usize>) -> ControlFlow<()>>(
    e1: &Extension,
    e2: &Extension,
    mut visit: F,
) -> Result<()> {
    if !e1.same_signature(e2) {
        return Err(Error::SignatureMismatch);
    }
    if e1.total().order() != e2.total().order() {
        return Ok(());
    }
    let mut gens = Vec::new();
    let mut candidates = Vec::new();
    for h in e1.sub().generators() {
        gens.push(e1.incl().apply(h));
        candidates.push(vec![e2.incl().apply(h)]);
    }
    for t in e1.quot().generators() {
        gens.push(e1.lift(t));
        candidates.push(e2.fiber(t).to_vec());
    }
    search_homs(e1.total(), e2.total(), &gens, &candidates, |map| {
        let mut seen = vec![false; map.len()];
        for &y in &map {
            if std::mem::replace(&mut seen[y], true) {
                return ControlFlow::Continue(());
            }
        }
        visit(map)
    });
    Ok(())
}

/// An isomorphism of extensions `E1 → E2` (identity on `H` and `G`).
pub fn ext_isomorphism(e1: &Extension, e2: &Extension) -> Result<Option<ExtIso>> {
    let mut found = None;
    ext_iso_search(e1, e2, |map| {
        found = Some(map);
        ControlFlow::Break(())
    })?;
    Ok(found.map(|m| ExtIso::new_unchecked(e1, e2, GroupHom::new_unchecked(e1.total(), e2.total(), m))))
}

/// All isomorphisms of extensions `E1 → E2`, sorted by map table.
pub fn all_ext_isomorphisms(e1: &Extension, e2: &Extension) -> Result<Vec<ExtIso>> {
    let mut out = Vec::new();
    ext_iso_search(e1, e2, |map| {
        out.push(map);
        ControlFlow::Continue(())
    })?;
    out.sort();
    Ok(out
        .into_iter()
        .map(|m| ExtIso::new_unchecked(e1, e2, GroupHom::new_unchecked(e1.total(), e2.total(), m)))
        .collect())
}

pub fn is_isomorphic(e1: &Extension, e2: &Extension) -> bool {
    matches!(ext_isomorphism(e1, e2), Ok(Some(_)))
}

/// Conjugation of the total group on a normal subgroup `N`.
#[derive(Clone, Debug)]
pub struct ConjugationAction {
    /// `N` re-indexed as a group; position `i` is `N.elements()[i]`.
    pub subgroup: FiniteGroup,
    pub aut: AutGroup,
    /// `total → Aut(N)`.
    pub hom: GroupHom,
}

pub fn conjugation_action(e: &Extension, n: &Subgroup) -> Result<ConjugationAction> {
    if n.ambient() != e.total() {
        return Err(Error::DomainMismatch("subgroup of another group".into()));
    }
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let (ng, _) = n.to_group();
    let aut = AutGroup::of(&ng);
    let t = e.total();
    let map = t
        .elements()
        .map(|x| {
            let img: Vec<usize> = n
                .elements()
                .iter()
                .map(|&s| n.position(t.conj(x, s)).expect("normal"))
                .collect();
            aut.index_of(&img).expect("conjugation is an automorphism")
        })
        .collect();
    let hom = GroupHom::new_unchecked(t, aut.group(), map);
    Ok(ConjugationAction {
        subgroup: ng,
        aut,
        hom,
    })
}

/// Factors `hom: total → A` through the projection to `G`.
pub fn factor_through_quotient(e: &Extension, hom: &GroupHom) -> Result<GroupHom> {
    if hom.domain() != e.total() {
        return Err(Error::DomainMismatch("map is not defined on the total group".into()));
    }
    let map = e
        .quot()
        .elements()
        .map(|g| {
            let fib = e.fiber(g);
            let v = hom.apply(fib[0]);
            if fib.iter().all(|&x| hom.apply(x) == v) {
                Ok(v)
            } else {
                Err(Error::DoesNotFactor)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupHom::new_unchecked(e.quot(), hom.codomain(), map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic, dihedral, klein, symmetric};
    use crate::group::{center, direct_product, subgroup_generated};
    use crate::hom::find_isomorphism;

    pub(crate) fn z4_ext() -> Extension {
        let (z2, z4) = (cyclic(2), cyclic(4));
        Extension::new(
            &z2,
            &z4,
            &z2,
            GroupHom::new(&z2, &z4, vec![0, 2]).unwrap(),
            GroupHom::new(&z4, &z2, vec![0, 1, 0, 1]).unwrap(),
        )
        .unwrap()
    }

    fn v4_ext() -> Extension {
        let z2 = cyclic(2);
        let p = direct_product(&z2, &z2);
        Extension::new(&z2, &p.group, &z2, p.inj1, p.proj2).unwrap()
    }

    fn s3_ext() -> Extension {
        let s3 = symmetric(3);
        let rot = subgroup_generated(&s3, &[s3.elements().find(|&x| s3.element_order(x) == 3).unwrap()]);
        let (c3, incl) = rot.to_group();
        let (q, proj) = quotient(&s3, &rot).unwrap();
        Extension::new(&c3, &s3, &q, incl, proj).unwrap()
    }

    #[test]
    fn validation() {
        let v4 = klein();
        Extension::trivial_quotient(&v4);
        z4_ext();
        let (z2, z4) = (cyclic(2), cyclic(4));
        let err = Extension::new(
            &z2,
            &z4,
            &z2,
            GroupHom::new(&z2, &z4, vec![0, 2]).unwrap(),
            GroupHom::trivial(&z4, &z2),
        )
        .unwrap_err();
        assert_eq!(err, Error::NotSurjective);
        let err = Extension::new(
            &z2,
            &z4,
            &z2,
            GroupHom::trivial(&z2, &z4),
            GroupHom::new(&z4, &z2, vec![0, 1, 0, 1]).unwrap(),
        )
        .unwrap_err();
        assert_eq!(err, Error::NotInjective);
    }

    #[test]
    fn fiber_products() {
        let s3 = symmetric(3);
        let id = GroupHom::identity(&s3);
        let diag = fiber_product(&id, &id).unwrap();
        assert!(find_isomorphism(&diag.group, &s3).is_some());

        let c1 = FiniteGroup::trivial();
        let (a, b) = (dihedral(4), cyclic(3));
        let full = fiber_product(&GroupHom::trivial(&a, &c1), &GroupHom::trivial(&b, &c1)).unwrap();
        assert_eq!(full.group, direct_product(&a, &b).group);

        let (z4, z2) = (cyclic(4), cyclic(2));
        let mod2 = GroupHom::new(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
        let fp = fiber_product(&mod2, &mod2).unwrap();
        // brute force: count pairs with equal residues
        let brute = (0..4).flat_map(|x| (0..4).map(move |y| (x, y))).filter(|(x, y)| x % 2 == y % 2).count();
        assert_eq!(fp.group.order(), brute);
        assert_eq!(fp.group.order(), 2 * 2 * 2);

        assert!(matches!(fiber_product(&mod2, &id), Err(Error::CodomainMismatch(_))));
    }

    #[test]
    fn pullbacks() {
        let e = z4_ext();
        let same = pullback(&e, &GroupHom::identity(e.quot())).unwrap();
        assert!(is_isomorphic(&same, &e));

        let c1 = FiniteGroup::trivial();
        let over_point = pullback(&e, &GroupHom::trivial(&c1, e.quot())).unwrap();
        assert!(find_isomorphism(over_point.total(), e.sub()).is_some());

        let mod2 = GroupHom::new(&cyclic(4), &cyclic(2), vec![0, 1, 0, 1]).unwrap();
        let (pb, cmp) = pullback_square(&e, &mod2).unwrap();
        assert_eq!(pb.total().order(), 8);
        assert_eq!(crate::catalog::identify(pb.total()).as_deref(), Some("C2xC4"));
        for x in pb.total().elements() {
            assert_eq!(e.proj().apply(cmp.apply(x)), mod2.apply(pb.proj().apply(x)));
        }
        assert!(matches!(pullback(&e, &GroupHom::identity(&cyclic(4))), Err(Error::CodomainMismatch(_))));
    }

    #[test]
    fn pushforwards() {
        let e = z4_ext();
        assert!(is_isomorphic(&pushforward(&e, &GroupHom::identity(e.sub())).unwrap(), &e));

        let c1 = FiniteGroup::trivial();
        let killed = pushforward(&e, &GroupHom::trivial(e.sub(), &c1)).unwrap();
        assert_eq!(killed.sub().order(), 1);
        assert!(find_isomorphism(killed.total(), e.quot()).is_some());

        // (C2×C2 → C2×C4 → C2) pushed along the first projection
        let (z2, z4) = (cyclic(2), cyclic(4));
        let hh = direct_product(&z2, &z2);
        let total = direct_product(&z2, &z4);
        let incl_map = hh.group.elements().map(|x| (x / 2) * 4 + 2 * (x % 2)).collect();
        let proj_map = total.group.elements().map(|x| (x % 4) % 2).collect();
        let big = Extension::new(
            &hh.group,
            &total.group,
            &z2,
            GroupHom::new(&hh.group, &total.group, incl_map).unwrap(),
            GroupHom::new(&total.group, &z2, proj_map).unwrap(),
        )
        .unwrap();
        let pushed = pushforward(&big, &hh.proj1).unwrap();
        assert_eq!(pushed.total().order(), 2 * 2);
        assert!(matches!(
            pushforward(&big, &GroupHom::trivial(&hh.group, &z2)),
            Err(Error::NotSurjective)
        ));
    }

    #[test]
    fn kernel_must_be_normal() {
        // V4 ⊲ S4 pushed along a map killing one of its order-2 subgroups
        let s4 = symmetric(4);
        let normal_v4 = {
            let cands: Vec<usize> = s4.elements().filter(|&x| s4.element_order(x) == 2).collect();
            let mut found = None;
            'outer: for &a in &cands {
                for &b in &cands {
                    let sg = subgroup_generated(&s4, &[a, b]);
                    if sg.order() == 4 && sg.is_normal() && s4.element_order(s4.mul(a, b)) == 2 {
                        found = Some(sg);
                        break 'outer;
                    }
                }
            }
            found.unwrap()
        };
        let (vg, incl) = normal_v4.to_group();
        let (q, proj) = quotient(&s4, &normal_v4).unwrap();
        let e = Extension::new(&vg, &s4, &q, incl, proj).unwrap();
        // kill one order-2 subgroup of V4: not normal in S4
        let z2 = cyclic(2);
        let f = crate::hom::all_homs(&vg, &z2).into_iter().find(|f| f.is_surjective()).unwrap();
        assert_eq!(pushforward(&e, &f).unwrap_err(), Error::KernelNotNormalInE);
    }

    #[test]
    fn sections() {
        assert!(find_section(&v4_ext()).is_some());
        assert!(find_section(&z4_ext()).is_none());
        let e = Extension::trivial_quotient(&symmetric(3));
        assert_eq!(find_section(&e).unwrap().map(), &[0]);
        assert_eq!(all_sections(&v4_ext()).len(), 2);
    }

    #[test]
    fn extension_isomorphisms() {
        let e = z4_ext();
        let id = ext_isomorphism(&e, &e).unwrap().unwrap();
        ExtIso::new(&e, &e, id.map().clone()).unwrap();
        assert!(ext_isomorphism(&e, &v4_ext()).unwrap().is_none());
        assert_eq!(
            ext_isomorphism(&e, &s3_ext()).unwrap_err(),
            Error::SignatureMismatch
        );
        assert!(is_isomorphic(&e.reversed(), &e));
        assert_eq!(all_ext_isomorphisms(&e, &e).unwrap().len(), 2);
    }

    #[test]
    fn conjugation() {
        let e = s3_ext();
        let act = conjugation_action(&e, &e.kernel_subgroup()).unwrap();
        let on_g = factor_through_quotient(&e, &act.hom).unwrap();
        let g = e.quot().elements().find(|&g| g != e.quot().identity()).unwrap();
        let inv = &act.aut.maps()[on_g.apply(g)];
        for x in act.subgroup.elements() {
            assert_eq!(inv[x], act.subgroup.inv(x));
        }

        let d4 = dihedral(4);
        let z = center(&d4);
        let (zg, zincl) = z.to_group();
        let (q, proj) = quotient(&d4, &z).unwrap();
        let e = Extension::new(&zg, &d4, &q, zincl, proj).unwrap();
        let act = conjugation_action(&e, &z).unwrap();
        let on_g = factor_through_quotient(&e, &act.hom).unwrap();
        assert!(on_g.map().iter().all(|&a| a == 0));

        // conjugation of D4 on itself does not factor through D4/Z
        let whole = Extension::trivial_quotient(&d4);
        let act = conjugation_action(&whole, &Subgroup::whole(&d4)).unwrap();
        assert_eq!(factor_through_quotient(&whole, &act.hom).unwrap_err(), Error::DoesNotFactor);
    }
}
