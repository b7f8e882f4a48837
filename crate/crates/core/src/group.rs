//! Finite groups stored as Cayley tables over dense element indices.
//!
//! Every group in the crate lives on `0..order`. Derived groups (subgroups,
//! quotients, products) are re-indexed densely so that downstream code only
//! ever sees tables.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::GroupHom;

#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupData>,
}

struct GroupData {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    name: Option<String>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.order == other.inner.order && self.inner.table == other.inner.table)
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.inner.name {
            Some(name) => write!(f, "FiniteGroup({name}, order {})", self.order()),
            None => write!(f, "FiniteGroup(order {})", self.order()),
        }
    }
}

impl FiniteGroup {
    /// Validates a square Cayley table given as rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::InvalidTable(format!(
                "row {i} has length {} but the table has {n} rows",
                row.len()
            )));
        }
        Self::from_flat(n, rows.concat())
    }

    /// Validates a row-major Cayley table of `order * order` entries.
    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range 0..{order}")));
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        let mut inverse = Vec::with_capacity(order);
        for x in 0..order {
            let y = (0..order)
                .find(|&y| mul(x, y) == identity && mul(y, x) == identity)
                .ok_or(Error::NoInverse { element: x })?;
            inverse.push(y);
        }
        for a in 0..order {
            for b in 0..order {
                let ab = mul(a, b);
                for c in 0..order {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(Self::assemble(order, table, identity, inverse))
    }

    /// Builds a group from a table already known to be a group law, e.g. one
    /// induced on a subgroup, product or quotient of validated groups.
    pub(crate) fn from_trusted(order: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mul = |a: usize, b: usize| table[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x))
            .expect("derived table has an identity");
        let mut inverse = vec![0; order];
        for x in 0..order {
            for y in 0..order {
                if mul(x, y) == identity {
                    inverse[x] = y;
                    break;
                }
            }
        }
        Self::assemble(order, table, identity, inverse)
    }

    fn assemble(order: usize, table: Vec<usize>, identity: usize, inverse: Vec<usize>) -> Self {
        FiniteGroup {
            inner: Arc::new(GroupData {
                order,
                table,
                identity,
                inverse,
                name: None,
            }),
        }
    }

    pub fn trivial() -> Self {
        Self::from_trusted(1, vec![0])
    }

    pub fn with_name(self, name: impl Into<String>) -> Self {
        let d = &self.inner;
        FiniteGroup {
            inner: Arc::new(GroupData {
                order: d.order,
                table: d.table.clone(),
                identity: d.identity,
                inverse: d.inverse.clone(),
                name: Some(name.into()),
            }),
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.inner.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.inner.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.table[a * self.inner.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inner.inverse[a]
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn table(&self) -> &[usize] {
        &self.inner.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.inner.table.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity(), |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Element orders sorted ascending; an isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Closure of `gens` under right multiplication, sorted.
    pub(crate) fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([self.identity()]);
        seen[self.identity()] = true;
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&x| seen[x]).collect()
    }

    /// A small generating set chosen greedily: each step adds the element
    /// that enlarges the generated subgroup the most (ties to the smallest
    /// index). Empty for the trivial group.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity()];
        while span.len() < self.order() {
            let mut best: Option<(usize, usize)> = None;
            for x in self.elements() {
                if span.binary_search(&x).is_ok() {
                    continue;
                }
                gens.push(x);
                let size = self.closure(&gens).len();
                gens.pop();
                if best.is_none_or(|(_, s)| size > s) {
                    best = Some((x, size));
                }
            }
            let (x, _) = best.expect("a missing element exists");
            gens.push(x);
            span = self.closure(&gens);
        }
        gens
    }

    /// Spanning tree of the right Cayley graph on `gens`, in BFS order from
    /// the identity. Each entry is `(element, parent, generator position)`;
    /// the identity is not listed.
    pub(crate) fn spanning_tree(&self, gens: &[usize]) -> Vec<(usize, usize, usize)> {
        let mut seen = vec![false; self.order()];
        seen[self.identity()] = true;
        let mut queue = VecDeque::from([self.identity()]);
        let mut tree = Vec::with_capacity(self.order() - 1);
        while let Some(x) = queue.pop_front() {
            for (pos, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    tree.push((y, x, pos));
                    queue.push_back(y);
                }
            }
        }
        tree
    }

    /// Applies a relabelling `perm` (old index -> new index) to the table.
    pub(crate) fn relabeled(&self, perm: &[usize]) -> FiniteGroup {
        let n = self.order();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        FiniteGroup::from_trusted(n, table)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A subset of a group closed under multiplication and inversion.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    ambient: FiniteGroup,
    elements: Vec<usize>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup({:?} of order {})", self.elements, self.ambient.order())
    }
}

impl Subgroup {
    pub fn new(ambient: &FiniteGroup, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut elements: Vec<usize> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&x| x >= ambient.order()) {
            return Err(Error::NotASubgroup("element out of range".into()));
        }
        if elements.binary_search(&ambient.identity()).is_err() {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for &a in &elements {
            if elements.binary_search(&ambient.inv(a)).is_err() {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &elements {
                if elements.binary_search(&ambient.mul(a, b)).is_err() {
                    return Err(Error::NotASubgroup(format!("{a}*{b} missing")));
                }
            }
        }
        Ok(Subgroup {
            ambient: ambient.clone(),
            elements,
        })
    }

    pub(crate) fn from_sorted(ambient: &FiniteGroup, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            ambient: ambient.clone(),
            elements,
        }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_sorted(g, g.elements().collect())
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_sorted(g, vec![g.identity()])
    }

    pub fn ambient(&self) -> &FiniteGroup {
        &self.ambient
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Position of `x` in the sorted element list, i.e. its index in
    /// [`Subgroup::to_group`].
    pub fn position(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.ambient;
        g.elements()
            .all(|x| self.elements.iter().all(|&s| self.contains(g.conj(x, s))))
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// The subgroup as a group in its own right, re-indexed by sorted
    /// position, together with its inclusion into the ambient group.
    pub fn to_group(&self) -> (FiniteGroup, GroupHom) {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.elements {
            for &b in &self.elements {
                let p = self
                    .position(self.ambient.mul(a, b))
                    .expect("subgroup is closed");
                table.push(p);
            }
        }
        let group = FiniteGroup::from_trusted(n, table);
        let incl = GroupHom::new_unchecked(&group, &self.ambient, self.elements.clone());
        (group, incl)
    }
}

pub fn subgroup_generated(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    Subgroup::from_sorted(g, g.closure(gens))
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let elements = g
        .elements()
        .filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    Subgroup::from_sorted(g, elements)
}

/// Quotient by a normal subgroup. Cosets are labelled by their minimal
/// element and ordered by label.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, GroupHom)> {
    if n.ambient() != g {
        return Err(Error::DomainMismatch("subgroup of a different group".into()));
    }
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let mut label = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if label[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for &s in n.elements() {
            label[g.mul(x, s)] = idx;
        }
    }
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            table.push(label[g.mul(a, b)]);
        }
    }
    let q = FiniteGroup::from_trusted(m, table);
    let proj = GroupHom::new_unchecked(g, &q, label);
    Ok((q, proj))
}

/// `G1 × G2` on indices `a * |G2| + b`, with injections and projections.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: FiniteGroup,
    pub inj1: GroupHom,
    pub inj2: GroupHom,
    pub proj1: GroupHom,
    pub proj2: GroupHom,
}

pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> DirectProduct {
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1 * n2;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (a1, b1) = (x / n2, x % n2);
            let (a2, b2) = (y / n2, y % n2);
            table.push(g1.mul(a1, a2) * n2 + g2.mul(b1, b2));
        }
    }
    let group = FiniteGroup::from_trusted(n, table);
    let inj1 = GroupHom::new_unchecked(
        g1,
        &group,
        (0..n1).map(|a| a * n2 + g2.identity()).collect(),
    );
    let inj2 = GroupHom::new_unchecked(
        g2,
        &group,
        (0..n2).map(|b| g1.identity() * n2 + b).collect(),
    );
    let proj1 = GroupHom::new_unchecked(&group, g1, (0..n).map(|x| x / n2).collect());
    let proj2 = GroupHom::new_unchecked(&group, g2, (0..n).map(|x| x % n2).collect());
    DirectProduct {
        group,
        inj1,
        inj2,
        proj1,
        proj2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::hom::find_isomorphism;

    fn z4() -> FiniteGroup {
        catalog::cyclic(4)
    }

    #[test]
    fn trivial_table() {
        let g = FiniteGroup::from_rows(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
        assert!(g.generators().is_empty());
    }

    #[test]
    fn z4_table() {
        let rows: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        let g = FiniteGroup::from_rows(&rows).unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g, z4());
    }

    #[test]
    fn rejects_bad_tables() {
        // identity 0, both others self-inverse, but (1*2)*1 != 1*(2*1)
        let rows = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 1, 0]];
        assert!(matches!(
            FiniteGroup::from_rows(&rows),
            Err(Error::NotAssociative { .. })
        ));
        let rows = vec![vec![1, 1], vec![1, 1]];
        assert_eq!(FiniteGroup::from_rows(&rows).unwrap_err(), Error::NoIdentity);
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert_eq!(
            FiniteGroup::from_rows(&rows).unwrap_err(),
            Error::NoInverse { element: 1 }
        );
        let rows = vec![vec![0, 1], vec![1]];
        assert!(matches!(FiniteGroup::from_rows(&rows), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn products() {
        let c1 = FiniteGroup::trivial();
        let s3 = catalog::symmetric(3);
        let p = direct_product(&c1, &s3);
        assert!(find_isomorphism(&p.group, &s3).is_some());

        let c2 = catalog::cyclic(2);
        let v = direct_product(&c2, &c2);
        assert_eq!(v.group.order(), 4);
        assert_eq!(v.group.exponent(), 2);

        let c6 = direct_product(&c2, &catalog::cyclic(3)).group;
        assert!(find_isomorphism(&c6, &catalog::cyclic(6)).is_some());
        for h in [&p.inj1, &p.inj2, &p.proj1, &p.proj2] {
            GroupHom::new(h.domain(), h.codomain(), h.map().to_vec()).unwrap();
        }
    }

    #[test]
    fn generated_subgroups() {
        let g = z4();
        assert_eq!(subgroup_generated(&g, &[]).elements(), &[0]);
        assert_eq!(subgroup_generated(&g, &[2]).elements(), &[0, 2]);
        let s3 = catalog::symmetric(3);
        let three_cycle = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        assert_eq!(subgroup_generated(&s3, &[three_cycle]).order(), 3);
    }

    #[test]
    fn normality_and_center() {
        let s3 = catalog::symmetric(3);
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        assert!(!subgroup_generated(&s3, &[t]).is_normal());
        assert_eq!(center(&s3).order(), 1);
        assert!(center(&s3).is_normal());

        let q8 = catalog::quaternion();
        let z = center(&q8);
        assert_eq!(z.order(), 2);
        assert!(z.is_normal());

        let v4 = catalog::klein();
        assert_eq!(center(&v4).order(), 4);
        for x in v4.elements() {
            assert!(subgroup_generated(&v4, &[x]).is_normal());
        }
    }

    #[test]
    fn quotients() {
        let g = z4();
        let (q, _) = quotient(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(q.order(), 1);

        let (q, proj) = quotient(&g, &subgroup_generated(&g, &[2])).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj.kernel().elements(), &[0, 2]);
        assert!(proj.is_surjective());

        let q8 = catalog::quaternion();
        let (q, _) = quotient(&q8, &center(&q8)).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2);
        assert!(find_isomorphism(&q, &catalog::klein()).is_some());

        let s3 = catalog::symmetric(3);
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        assert_eq!(
            quotient(&s3, &subgroup_generated(&s3, &[t])).unwrap_err(),
            Error::NotNormal
        );
    }

    #[test]
    fn derived_tables_are_associative() {
        let groups = [
            direct_product(&catalog::quaternion(), &catalog::cyclic(3)).group,
            quotient(&catalog::dihedral(4), &center(&catalog::dihedral(4))).unwrap().0,
            center(&catalog::dihedral(4)).to_group().0,
        ];
        for g in groups {
            FiniteGroup::from_flat(g.order(), g.table().to_vec()).unwrap();
        }
    }
}
