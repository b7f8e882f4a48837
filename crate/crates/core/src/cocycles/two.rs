//! Normalized 2-cocycles with abelian coefficients, H², the extension on
//! `A × G` attached to a cocycle, and Baer sums.

use std::collections::HashMap;

use crate::aut::GroupAction;
use crate::error::{Error, Result};
use crate::extension::{fiber_product_over_quotient, pushforward, Extension};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;

use super::factor::FactorSystem;
use super::solve::TwistSolver;

/// A normalized 2-cocycle `f: G × G → A`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycle {
    action: GroupAction,
    map: Vec<usize>,
}

impl TwoCocycle {
    pub fn new(action: &GroupAction, map: Vec<usize>) -> Result<Self> {
        let (g, a) = (action.acting(), action.module());
        if !a.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let n = g.order();
        if map.len() != n * n || map.iter().any(|&x| x >= a.order()) {
            return Err(Error::InvalidTable("cocycle table has the wrong shape".into()));
        }
        let f = |x: usize, y: usize| map[x * n + y];
        let (e, zero) = (g.identity(), a.identity());
        for x in g.elements() {
            if f(e, x) != zero || f(x, e) != zero {
                return Err(Error::ViolationFound(format!("cocycle is not normalized at {x}")));
            }
        }
        for x in g.elements() {
            for y in g.elements() {
                for z in g.elements() {
                    let lhs = a.mul(action.apply(x, f(y, z)), f(x, g.mul(y, z)));
                    let rhs = a.mul(f(g.mul(x, y), z), f(x, y));
                    if lhs != rhs {
                        return Err(Error::ViolationFound(format!(
                            "cocycle identity fails at ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(Self::new_unchecked(action, map))
    }

    pub(crate) fn new_unchecked(action: &GroupAction, map: Vec<usize>) -> Self {
        TwoCocycle {
            action: action.clone(),
            map,
        }
    }

    pub fn zero(action: &GroupAction) -> Self {
        let n = action.acting().order();
        Self::new_unchecked(action, vec![action.module().identity(); n * n])
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
    pub fn value(&self, x: usize, y: usize) -> usize {
        self.map[x * self.group().order() + y]
    }

    /// Pointwise sum.
    pub fn add(&self, other: &TwoCocycle) -> Result<TwoCocycle> {
        if self.action != other.action {
            return Err(Error::ActionMismatch);
        }
        let a = self.coeff();
        let map = self.map.iter().zip(&other.map).map(|(&x, &y)| a.mul(x, y)).collect();
        Ok(Self::new_unchecked(&self.action, map))
    }

    pub fn neg(&self) -> TwoCocycle {
        let a = self.coeff();
        Self::new_unchecked(&self.action, self.map.iter().map(|&x| a.inv(x)).collect())
    }

    pub fn to_factor_system(&self) -> FactorSystem {
        FactorSystem::new_unchecked(self.group(), self.coeff(), self.action.images().to_vec(), self.map.clone())
    }
}

/// `(δc)(x, y) = c(x) + ˣc(y) − c(xy)` for a normalized 1-cochain `c`.
pub fn coboundary(action: &GroupAction, c: &[usize]) -> Vec<usize> {
    let (g, a) = (action.acting(), action.module());
    let mut out = Vec::with_capacity(g.order() * g.order());
    for x in g.elements() {
        for y in g.elements() {
            out.push(a.mul(a.mul(c[x], action.apply(x, c[y])), a.inv(c[g.mul(x, y)])));
        }
    }
    out
}

/// Exhaustive normalized cocycles, coboundaries and classes for one action.
#[derive(Clone, Debug)]
pub struct Cohomology2 {
    action: GroupAction,
    /// all normalized cocycles, sorted by table
    pub cocycles: Vec<TwoCocycle>,
    /// coboundaries of normalized cochains, sorted and distinct
    pub coboundaries: Vec<Vec<usize>>,
    /// class of each cocycle; classes are numbered by their least member
    pub class_of: Vec<usize>,
    /// least cocycle of each class
    pub reps: Vec<usize>,
    index: HashMap<Vec<usize>, usize>,
}

impl Cohomology2 {
    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    /// `|H²|`.
    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn rep(&self, class: usize) -> &TwoCocycle {
        &self.cocycles[self.reps[class]]
    }

    pub fn class_of_map(&self, map: &[usize]) -> Option<usize> {
        self.index.get(map).map(|&i| self.class_of[i])
    }

    pub fn class_of(&self, f: &TwoCocycle) -> Option<usize> {
        if f.action() != &self.action {
            return None;
        }
        self.class_of_map(f.map())
    }

    /// Class of the sum of class representatives.
    pub fn add(&self, c1: usize, c2: usize) -> usize {
        let sum = self.rep(c1).add(self.rep(c2)).expect("same action");
        self.class_of(&sum).expect("sums of cocycles are cocycles")
    }

    /// The class of the zero cocycle.
    pub fn zero(&self) -> usize {
        self.class_of(&TwoCocycle::zero(&self.action)).expect("zero is a cocycle")
    }
}

/// Calls `visit` with every normalized cochain `c: G → A` (value at the
/// identity fixed to zero), in lexicographic order.
fn for_each_cochain(g: &FiniteGroup, a: &FiniteGroup, mut visit: impl FnMut(&[usize])) {
    let e = g.identity();
    let free: Vec<usize> = g.elements().filter(|&x| x != e).collect();
    let mut c = vec![a.identity(); g.order()];
    let mut digits = vec![0usize; free.len()];
    loop {
        for (k, &x) in free.iter().enumerate() {
            c[x] = digits[k];
        }
        visit(&c);
        let mut k = free.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < a.order() {
                break;
            }
            digits[k] = 0;
        }
    }
}

pub fn two_cocycles(action: &GroupAction) -> Result<Cohomology2> {
    let (g, a) = (action.acting(), action.module());
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = g.order();
    let e = g.identity();
    let all: Vec<usize> = a.elements().collect();
    let domains = (0..n * n)
        .map(|cell| {
            if cell / n == e || cell % n == e {
                vec![a.identity()]
            } else {
                all.clone()
            }
        })
        .collect();
    let mut maps = Vec::new();
    TwistSolver::new(g, a, action.images(), domains).solve(|t| maps.push(t.to_vec()));
    maps.sort();

    let mut coboundaries = Vec::new();
    for_each_cochain(g, a, |c| coboundaries.push(coboundary(action, c)));
    coboundaries.sort();
    coboundaries.dedup();

    let index: HashMap<Vec<usize>, usize> =
        maps.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut class_of = vec![usize::MAX; maps.len()];
    let mut reps = Vec::new();
    for i in 0..maps.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let k = reps.len();
        reps.push(i);
        for b in &coboundaries {
            let shifted: Vec<usize> = maps[i].iter().zip(b).map(|(&x, &y)| a.mul(x, y)).collect();
            let j = *index.get(&shifted).ok_or_else(|| {
                Error::ViolationFound("cocycle plus coboundary is not a cocycle".into())
            })?;
            class_of[j] = k;
        }
    }
    let cocycles = maps.into_iter().map(|m| TwoCocycle::new_unchecked(action, m)).collect();
    Ok(Cohomology2 {
        action: action.clone(),
        cocycles,
        coboundaries,
        class_of,
        reps,
        index,
    })
}

/// The extension on `A × G` with `(a, x)(b, y) = (a + ˣb + f(x, y), xy)`.
pub fn extension_from_cocycle(f: &TwoCocycle) -> Extension {
    f.to_factor_system().to_extension()
}

/// Reads a cocycle off a set-theoretic section with `s(1) = 1`.
pub fn cocycle_from_extension(e: &Extension, section: &[usize]) -> Result<TwoCocycle> {
    let action = e.abelian_action()?;
    let fs = FactorSystem::from_section(e, section)?;
    Ok(TwoCocycle::new_unchecked(&action, fs.twist_table().to_vec()))
}

/// The set-section `g ↦ least element of the fiber`, moved to hit `1` at `1`.
pub fn standard_section(e: &Extension) -> Vec<usize> {
    let mut s: Vec<usize> = e.quot().elements().map(|g| e.lift(g)).collect();
    s[e.quot().identity()] = e.total().identity();
    s
}

fn baer_combine(e1: &Extension, e2: &Extension, subtract: bool) -> Result<Extension> {
    if !e1.same_signature(e2) {
        return Err(Error::SignatureMismatch);
    }
    if e1.abelian_action()? != e2.abelian_action()? {
        return Err(Error::ActionMismatch);
    }
    let a = e1.sub();
    let fp = fiber_product_over_quotient(e1, e2)?;
    let map = fp
        .sub
        .pairs()
        .iter()
        .map(|&(x, y)| a.mul(x, if subtract { a.inv(y) } else { y }))
        .collect();
    let op = GroupHom::new_unchecked(&fp.sub.group, a, map);
    pushforward(&fp.extension, &op)
}

/// `+₊(E1 ×_G E2)`.
pub fn baer_sum(e1: &Extension, e2: &Extension) -> Result<Extension> {
    baer_combine(e1, e2, false)
}

/// `−₊(E1 ×_G E2)` with `(a, b) ↦ a − b`.
pub fn baer_diff(e1: &Extension, e2: &Extension) -> Result<Extension> {
    baer_combine(e1, e2, true)
}

/// `A ⋊ G` for the action of `e`.
pub fn split_like(e: &Extension) -> Result<Extension> {
    Ok(extension_from_cocycle(&TwoCocycle::zero(&e.abelian_action()?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{by_name, identify};
    use crate::extension::{is_isomorphic, is_split};
    use crate::testing::{c6_ext, s3_ext, v4_ext, z4_ext};

    fn trivial(g: &str, a: &str) -> GroupAction {
        GroupAction::trivial(&by_name(g).unwrap(), &by_name(a).unwrap())
    }

    #[test]
    fn h2_orders() {
        assert_eq!(two_cocycles(&trivial("C1", "C3")).unwrap().order(), 1);
        assert_eq!(two_cocycles(&trivial("C2", "C2")).unwrap().order(), 2);
        assert_eq!(two_cocycles(&trivial("V4", "C2")).unwrap().order(), 8);
        assert_eq!(two_cocycles(&trivial("C2", "S3")).unwrap_err(), Error::NotAbelian);
        // |Z²| = |B²|·|H²| with |B²| = |C¹| / |Z¹|
        let h = two_cocycles(&trivial("V4", "C2")).unwrap();
        assert_eq!(h.coboundaries.len(), 8 / 4);
        assert_eq!(h.cocycles.len(), h.coboundaries.len() * h.order());
        for f in &h.cocycles {
            TwoCocycle::new(h.action(), f.map().to_vec()).unwrap();
        }
    }

    #[test]
    fn cocycle_extensions() {
        let h = two_cocycles(&trivial("C2", "C2")).unwrap();
        let zero = extension_from_cocycle(rep_of(&h, h.zero()));
        assert!(is_split(&zero));
        let other = extension_from_cocycle(rep_of(&h, 1 - h.zero()));
        assert_eq!(identify(other.total()).as_deref(), Some("C4"));
        for e in [z4_ext(), v4_ext(), s3_ext(), c6_ext()] {
            let f = cocycle_from_extension(&e, &standard_section(&e)).unwrap();
            assert!(is_isomorphic(&extension_from_cocycle(&f), &e));
        }
    }

    fn rep_of(h: &Cohomology2, c: usize) -> &TwoCocycle {
        h.rep(c)
    }

    #[test]
    fn baer_sums() {
        let (z4, v4) = (z4_ext(), v4_ext());
        assert!(is_isomorphic(&baer_sum(&z4, &z4).unwrap(), &v4));
        assert!(is_isomorphic(&baer_sum(&z4, &v4).unwrap(), &z4));
        assert!(is_isomorphic(&baer_diff(&z4, &z4).unwrap(), &v4));
        let split = split_like(&s3_ext()).unwrap();
        assert!(is_isomorphic(&baer_sum(&s3_ext(), &split).unwrap(), &s3_ext()));
        assert_eq!(baer_sum(&s3_ext(), &c6_ext()).unwrap_err(), Error::ActionMismatch);
        let q = Extension::trivial_quotient(&by_name("S3").unwrap());
        assert_eq!(baer_sum(&q, &q).unwrap_err(), Error::NotAbelian);
    }
}
