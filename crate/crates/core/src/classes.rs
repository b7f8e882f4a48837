//! Canonical keys for extension classes.
//!
//! Fix a generating set of `G` and a BFS spanning tree of its Cayley graph.
//! A *tree section* picks any lift of each generator and extends along tree
//! edges, `s(x·t) = s(x)·s(t)`. An isomorphism of extensions carries tree
//! sections to tree sections with the same factor system, and equal factor
//! systems give an isomorphism, so the least factor system over all tree
//! sections is a complete invariant of the class.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::extension::{ext_isomorphism, Extension};
use crate::group::FiniteGroup;

/// Lifts of the quotient generators to try for canonical keys.
fn tree_sections(e: &Extension) -> (Vec<(usize, usize, usize)>, Vec<usize>) {
    let gens = e.quot().generators();
    (e.quot().spanning_tree(&gens), gens)
}

/// Tree sections of `e`, one per choice of generator lifts.
pub(crate) fn for_each_tree_section(e: &Extension, mut visit: impl FnMut(&[usize])) {
    let (tree, gens) = tree_sections(e);
    let (g, t) = (e.quot(), e.total());
    let fibers: Vec<&[usize]> = gens.iter().map(|&x| e.fiber(x)).collect();
    let mut choice = vec![0usize; gens.len()];
    let mut section = vec![t.identity(); g.order()];
    loop {
        for &(y, parent, pos) in &tree {
            section[y] = t.mul(section[parent], fibers[pos][choice[pos]]);
        }
        visit(&section);
        // mixed-radix increment
        let mut k = 0;
        loop {
            if k == choice.len() {
                return;
            }
            choice[k] += 1;
            if choice[k] < fibers[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Lexicographically least `(lift tables, twist table)` over tree sections.
pub fn class_key(e: &Extension) -> Vec<usize> {
    let (g, t) = (e.quot(), e.total());
    let mut best: Option<Vec<usize>> = None;
    let mut buf = Vec::new();
    for_each_tree_section(e, |section| {
        buf.clear();
        for x in g.elements() {
            buf.extend(e.conj_on_sub(section[x]));
        }
        for a in g.elements() {
            for b in g.elements() {
                let prod = t.mul(t.mul(section[a], section[b]), t.inv(section[g.mul(a, b)]));
                buf.push(e.sub_index(prod).expect("product lies over 1"));
            }
        }
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    });
    best.expect("at least one tree section")
}

/// A set of pairwise non-isomorphic extensions of a fixed `G` by a fixed
/// `H`, indexed by [`class_key`]. Lookups are confirmed with an explicit
/// isomorphism of extensions.
#[derive(Clone, Debug)]
pub struct ClassIndex {
    sub: FiniteGroup,
    quot: FiniteGroup,
    keys: HashMap<Vec<usize>, usize>,
    members: Vec<Extension>,
}

impl ClassIndex {
    pub fn new(sub: &FiniteGroup, quot: &FiniteGroup) -> Self {
        ClassIndex {
            sub: sub.clone(),
            quot: quot.clone(),
            keys: HashMap::new(),
            members: Vec::new(),
        }
    }

    pub fn from_members(sub: &FiniteGroup, quot: &FiniteGroup, members: &[Extension]) -> Result<Self> {
        let mut idx = Self::new(sub, quot);
        for m in members {
            let (_, fresh) = idx.insert(m)?;
            if !fresh {
                return Err(Error::ViolationFound("duplicate class in member list".into()));
            }
        }
        Ok(idx)
    }

    fn check(&self, e: &Extension) -> Result<()> {
        if e.sub() != &self.sub || e.quot() != &self.quot {
            return Err(Error::SignatureMismatch);
        }
        Ok(())
    }

    /// Index of the class of `e`, adding it if new.
    pub fn insert(&mut self, e: &Extension) -> Result<(usize, bool)> {
        self.check(e)?;
        let key = class_key(e);
        if let Some(&i) = self.keys.get(&key) {
            return Ok((i, false));
        }
        let i = self.members.len();
        self.keys.insert(key, i);
        self.members.push(e.clone());
        Ok((i, true))
    }

    pub fn find(&self, e: &Extension) -> Result<Option<usize>> {
        self.check(e)?;
        let Some(&i) = self.keys.get(&class_key(e)) else {
            return Ok(None);
        };
        match ext_isomorphism(e, &self.members[i])? {
            Some(_) => Ok(Some(i)),
            None => Err(Error::ViolationFound(
                "equal class keys without an isomorphism of extensions".into(),
            )),
        }
    }

    /// Like [`ClassIndex::find`] but a missing class is an error.
    pub fn locate(&self, e: &Extension) -> Result<usize> {
        self.find(e)?
            .ok_or_else(|| Error::ViolationFound("extension outside the enumerated classes".into()))
    }

    pub fn members(&self) -> &[Extension] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}
