//! Schreier factor systems: the data `(lift, twist)` recovering an extension
//! on the set `H × G`.

use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::group::FiniteGroup;
use crate::hom::GroupHom;

/// A normalized factor system of `G` in `H`.
///
/// `lift[g]` is an automorphism of `H` and `twist[g * |G| + h] ∈ H`, with
/// `lift(g)∘lift(h) = inn(twist(g,h))∘lift(gh)` and
/// `twist(g,h)·twist(gh,k) = lift(g)(twist(h,k))·twist(g,hk)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSystem {
    group: FiniteGroup,
    kernel: FiniteGroup,
    lift: Vec<Vec<usize>>,
    twist: Vec<usize>,
}

impl FactorSystem {
    pub fn new(group: &FiniteGroup, kernel: &FiniteGroup, lift: Vec<Vec<usize>>, twist: Vec<usize>) -> Result<Self> {
        let (n, h) = (group.order(), kernel);
        if lift.len() != n || twist.len() != n * n {
            return Err(Error::InvalidTable("factor system tables have the wrong size".into()));
        }
        for l in &lift {
            let hom = GroupHom::new(h, h, l.clone())?;
            if !hom.is_bijective() {
                return Err(Error::NotInjective);
            }
        }
        if twist.iter().any(|&x| x >= h.order()) {
            return Err(Error::InvalidTable("twist value out of range".into()));
        }
        let fs = Self::new_unchecked(group, kernel, lift, twist);
        let (e, one) = (group.identity(), h.identity());
        let identity_map: Vec<usize> = h.elements().collect();
        if fs.lift[e] != identity_map {
            return Err(Error::ViolationFound("lift(1) is not the identity".into()));
        }
        for g in group.elements() {
            if fs.twist(e, g) != one || fs.twist(g, e) != one {
                return Err(Error::ViolationFound(format!("twist is not normalized at {g}")));
            }
        }
        for a in group.elements() {
            for b in group.elements() {
                let ab = group.mul(a, b);
                let t = fs.twist(a, b);
                for x in h.elements() {
                    let lhs = fs.lift[a][fs.lift[b][x]];
                    let rhs = h.conj(t, fs.lift[ab][x]);
                    if lhs != rhs {
                        return Err(Error::ViolationFound(format!(
                            "lift({a})∘lift({b}) differs from inn(twist)∘lift({ab})"
                        )));
                    }
                }
                for c in group.elements() {
                    let lhs = h.mul(t, fs.twist(ab, c));
                    let rhs = h.mul(fs.lift[a][fs.twist(b, c)], fs.twist(a, group.mul(b, c)));
                    if lhs != rhs {
                        return Err(Error::ViolationFound(format!(
                            "cocycle identity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(fs)
    }

    pub(crate) fn new_unchecked(group: &FiniteGroup, kernel: &FiniteGroup, lift: Vec<Vec<usize>>, twist: Vec<usize>) -> Self {
        FactorSystem {
            group: group.clone(),
            kernel: kernel.clone(),
            lift,
            twist,
        }
    }

    /// Reads the factor system of `e` off a set-theoretic section given as
    /// `section[g] ∈ E` with `proj(section[g]) = g` and `section[1] = 1`.
    pub fn from_section(e: &Extension, section: &[usize]) -> Result<Self> {
        let (g, t) = (e.quot(), e.total());
        if section.len() != g.order()
            || section[g.identity()] != t.identity()
            || g.elements().any(|x| e.proj().apply(section[x]) != x)
        {
            return Err(Error::NotASection);
        }
        let lift = g.elements().map(|x| e.conj_on_sub(section[x])).collect();
        let mut twist = Vec::with_capacity(g.order() * g.order());
        for a in g.elements() {
            for b in g.elements() {
                let prod = t.mul(t.mul(section[a], section[b]), t.inv(section[g.mul(a, b)]));
                twist.push(e.sub_index(prod).expect("product lies over 1"));
            }
        }
        Ok(Self::new_unchecked(g, e.sub(), lift, twist))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn kernel(&self) -> &FiniteGroup {
        &self.kernel
    }

    pub fn lift(&self) -> &[Vec<usize>] {
        &self.lift
    }

    pub fn twist_table(&self) -> &[usize] {
        &self.twist
    }

    #[inline]
    pub fn twist(&self, a: usize, b: usize) -> usize {
        self.twist[a * self.group.order() + b]
    }

    /// The group on `H × G`, element `(h, g)` at index `h * |G| + g`, with
    /// `(a, g)(b, h) = (a · lift(g)(b) · twist(g, h), gh)`.
    pub fn to_extension(&self) -> Extension {
        let (g, h) = (&self.group, &self.kernel);
        let (ng, nh) = (g.order(), h.order());
        let n = ng * nh;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let (a, ga) = (x / ng, x % ng);
            for y in 0..n {
                let (b, gb) = (y / ng, y % ng);
                let hh = h.mul(h.mul(a, self.lift[ga][b]), self.twist(ga, gb));
                table.push(hh * ng + g.mul(ga, gb));
            }
        }
        let total = FiniteGroup::from_trusted(n, table);
        let incl = GroupHom::new_unchecked(h, &total, h.elements().map(|a| a * ng + g.identity()).collect());
        let proj = GroupHom::new_unchecked(&total, g, (0..n).map(|x| x % ng).collect());
        Extension::new(h, &total, g, incl, proj).expect("factor systems define extensions")
    }
}
