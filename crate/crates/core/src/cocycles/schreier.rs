//! Enumeration of all extensions of `G` by `H` through factor systems.
//!
//! Every extension has a tree section (see [`crate::classes`]), whose
//! factor system has trivial twist on the tree edges and whose lift is
//! determined by the lifts of the generators. Searching only those systems
//! loses no classes and shrinks the space from `|Aut H|^(|G|-1)` lifts to
//! `|Aut H|^d` for `d` generators.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::aut::AutGroup;
use crate::classes::class_key;
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::group::FiniteGroup;

use super::factor::FactorSystem;
use super::solve::TwistSolver;

/// Which factor systems to search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gauge {
    /// lifts fixed by the generators, twist trivial on a spanning tree
    Tree,
    /// every normalized factor system; only feasible for tiny groups
    Full,
}

struct Setup {
    aut: AutGroup,
    /// automorphism indices `i` with `inn_of(x) = i`, listed per index
    inn_preimage: Vec<Vec<usize>>,
}

impl Setup {
    fn new(h: &FiniteGroup) -> Self {
        let aut = AutGroup::of(h);
        let mut inn_preimage = vec![Vec::new(); aut.group().order()];
        for x in h.elements() {
            inn_preimage[aut.inner_of(x)].push(x);
        }
        Setup { aut, inn_preimage }
    }

    /// Factor systems with the given lift (as automorphism indices) and the
    /// given cells forced to the identity.
    fn systems(&self, g: &FiniteGroup, h: &FiniteGroup, phi: &[usize], trivial: &[bool]) -> Vec<FactorSystem> {
        let n = g.order();
        let ag = self.aut.group();
        let mut domains = Vec::with_capacity(n * n);
        for a in g.elements() {
            for b in g.elements() {
                let target = ag.mul(ag.mul(phi[a], phi[b]), ag.inv(phi[g.mul(a, b)]));
                let dom = &self.inn_preimage[target];
                if dom.is_empty() {
                    return Vec::new();
                }
                if trivial[a * n + b] {
                    if target != ag.identity() {
                        return Vec::new();
                    }
                    domains.push(vec![h.identity()]);
                } else {
                    domains.push(dom.clone());
                }
            }
        }
        let lift: Vec<Vec<usize>> = phi.iter().map(|&i| self.aut.maps()[i].clone()).collect();
        let mut out = Vec::new();
        TwistSolver::new(g, h, &lift, domains).solve(|t| {
            out.push(FactorSystem::new_unchecked(g, h, lift.clone(), t.to_vec()));
        });
        out
    }
}

fn odometer(radix: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = radix.checked_pow(len as u32).expect("search space fits in usize");
    (0..total).map(move |mut k| {
        let mut digits = vec![0; len];
        for d in digits.iter_mut().rev() {
            *d = k % radix;
            k /= radix;
        }
        digits
    })
}

/// Every factor system of the chosen gauge, in deterministic order.
pub fn factor_systems(g: &FiniteGroup, h: &FiniteGroup, gauge: Gauge) -> Vec<FactorSystem> {
    let setup = Setup::new(h);
    let n = g.order();
    let e = g.identity();
    let naut = setup.aut.group().order();
    let mut trivial = vec![false; n * n];
    for x in g.elements() {
        trivial[e * n + x] = true;
        trivial[x * n + e] = true;
    }
    let lifts: Vec<Vec<usize>> = match gauge {
        Gauge::Tree => {
            let gens = g.generators();
            let tree = g.spanning_tree(&gens);
            for &(_, parent, pos) in &tree {
                trivial[parent * n + gens[pos]] = true;
            }
            let ag = setup.aut.group();
            odometer(naut, gens.len())
                .map(|choice| {
                    let mut phi = vec![ag.identity(); n];
                    for &(y, parent, pos) in &tree {
                        phi[y] = ag.mul(phi[parent], choice[pos]);
                    }
                    phi
                })
                .collect()
        }
        Gauge::Full => odometer(naut, n - 1)
            .map(|choice| {
                let mut phi = vec![0; n];
                let mut it = choice.into_iter();
                for (x, slot) in phi.iter_mut().enumerate() {
                    *slot = if x == e { setup.aut.group().identity() } else { it.next().unwrap() };
                }
                phi
            })
            .collect(),
    };
    lifts
        .par_iter()
        .map(|phi| setup.systems(g, h, phi, &trivial))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Representatives of every isomorphism class of extensions of `g` by `h`,
/// ordered by first appearance in the tree-gauge search.
pub fn schreier_enumerate(g: &FiniteGroup, h: &FiniteGroup, bound: usize) -> Result<Vec<Extension>> {
    schreier_enumerate_gauged(g, h, bound, Gauge::Tree)
}

pub fn schreier_enumerate_gauged(g: &FiniteGroup, h: &FiniteGroup, bound: usize, gauge: Gauge) -> Result<Vec<Extension>> {
    let product = g.order() * h.order();
    if product > bound {
        return Err(Error::BoundExceeded { product, bound });
    }
    let systems = factor_systems(g, h, gauge);
    let keyed: Vec<(Vec<usize>, Extension)> = systems
        .par_iter()
        .map(|fs| {
            let ext = fs.to_extension();
            (class_key(&ext), ext)
        })
        .collect();
    let mut seen = HashSet::new();
    Ok(keyed
        .into_iter()
        .filter_map(|(key, ext)| seen.insert(key).then_some(ext))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{by_name, identify};
    use std::collections::BTreeSet;

    fn enumerate(g: &str, h: &str, gauge: Gauge) -> Vec<Extension> {
        schreier_enumerate_gauged(&by_name(g).unwrap(), &by_name(h).unwrap(), 64, gauge).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate("C2", "C2", Gauge::Tree).len(), 2);
        let c2c3: BTreeSet<String> = enumerate("C2", "C3", Gauge::Tree)
            .iter()
            .map(|e| identify(e.total()).unwrap())
            .collect();
        assert_eq!(c2c3, BTreeSet::from(["C6".to_string(), "S3".to_string()]));
        assert_eq!(enumerate("V4", "C2", Gauge::Tree).len(), 8);
        let err = schreier_enumerate(&by_name("V4").unwrap(), &by_name("Q8").unwrap(), 24).unwrap_err();
        assert_eq!(err, Error::BoundExceeded { product: 32, bound: 24 });
    }

    #[test]
    fn tree_gauge_loses_nothing() {
        for (g, h) in [("C2", "C2"), ("C2", "C3"), ("C3", "C2"), ("C2", "C4"), ("C3", "C3"), ("C2", "V4"), ("C4", "C2"), ("V4", "C2"), ("S3", "C2"), ("C2", "S3")] {
            let keys = |gauge| -> BTreeSet<Vec<usize>> { enumerate(g, h, gauge).iter().map(class_key).collect() };
            assert_eq!(keys(Gauge::Tree), keys(Gauge::Full), "{g} by {h}");
        }
    }

    #[test]
    fn systems_validate() {
        let (g, h) = (by_name("C4").unwrap(), by_name("C4").unwrap());
        for fs in factor_systems(&g, &h, Gauge::Tree) {
            FactorSystem::new(fs.group(), fs.kernel(), fs.lift().to_vec(), fs.twist_table().to_vec()).unwrap();
        }
    }
}
