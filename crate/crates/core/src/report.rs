//! The full classification pipeline for a pair `(G, H)`.

use std::time::Instant;

use serde::Serialize;

use crate::catalog::identify;
use crate::cocycles::schreier_enumerate;
use crate::error::{Error, Result};
use crate::extension::{is_split, Extension};
use crate::group::FiniteGroup;
use crate::outer::{classical_kappa, same_outer_action_profiles, OuterProfile};
use crate::split::split_locus_check;
use crate::torsor::{verify_simply_transitive, ExtClassSet};

pub const DEFAULT_BOUND: usize = 32;

/// A readable name: the group's own, a catalog match, or its order.
pub fn display_name(g: &FiniteGroup) -> String {
    g.name()
        .map(str::to_string)
        .or_else(|| identify(g))
        .unwrap_or_else(|| format!("order {}", g.order()))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassEntry {
    pub label: String,
    pub total: String,
    pub split: bool,
    pub central: bool,
    /// `κ: G → Out(H)` as a table
    pub kappa: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OuterClassEntry {
    pub members: Vec<String>,
    pub zgroup_order: usize,
    pub torsor_verified: bool,
    pub e0_split: bool,
    pub split_members: Vec<String>,
    pub delta_image: Vec<String>,
    /// compatible identifications `E/Z → E_base/Z` per member
    pub witness_multiplicity: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ClassificationReport {
    pub pair: (String, String),
    pub bound: usize,
    pub classes: Vec<ClassEntry>,
    pub outer_classes: Vec<OuterClassEntry>,
    /// seconds per phase; only present when requested
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Vec<(String, f64)>>,
}

impl ClassificationReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    pub timing: bool,
}

struct Clock {
    enabled: bool,
    last: Instant,
    phases: Vec<(String, f64)>,
}

impl Clock {
    fn lap(&mut self, name: &str) {
        if self.enabled {
            let now = Instant::now();
            self.phases.push((name.to_string(), (now - self.last).as_secs_f64()));
            self.last = now;
        }
    }
}

/// Partitions extensions by outer action; each part lists indices in order.
pub fn outer_partition(profiles: &[OuterProfile]) -> Result<Vec<Vec<usize>>> {
    let mut parts: Vec<Vec<usize>> = Vec::new();
    'next: for (k, p) in profiles.iter().enumerate() {
        for part in parts.iter_mut() {
            if same_outer_action_profiles(&profiles[part[0]], p)?.is_some() {
                part.push(k);
                continue 'next;
            }
        }
        parts.push(vec![k]);
    }
    Ok(parts)
}

pub fn classify(g: &FiniteGroup, h: &FiniteGroup, bound: usize) -> Result<ClassificationReport> {
    classify_with(g, h, bound, &ClassifyOptions::default())
}

pub fn classify_with(g: &FiniteGroup, h: &FiniteGroup, bound: usize, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let mut clock = Clock {
        enabled: opts.timing,
        last: Instant::now(),
        phases: Vec::new(),
    };
    let members = schreier_enumerate(g, h, bound)?;
    clock.lap("enumerate");
    let label = |i: usize| format!("E{i}");
    let classes = members
        .iter()
        .enumerate()
        .map(|(i, e)| ClassEntry {
            label: label(i),
            total: display_name(e.total()),
            split: is_split(e),
            central: e.is_central(),
            kappa: classical_kappa(e).map().to_vec(),
        })
        .collect();
    let profiles: Vec<OuterProfile> = members.iter().map(OuterProfile::new).collect();
    let parts = outer_partition(&profiles)?;
    clock.lap("partition");

    let mut outer_classes = Vec::new();
    for part in &parts {
        let exts: Vec<Extension> = part.iter().map(|&i| members[i].clone()).collect();
        let set = ExtClassSet::from_members(&exts[0], &exts)?;
        if set.zgroup().len() != exts.len() {
            return Err(Error::ViolationFound(format!(
                "outer class of {} has {} members but |Ext(G, Z)| = {}",
                label(part[0]),
                exts.len(),
                set.zgroup().len()
            )));
        }
        verify_simply_transitive(&set)?;
        let split = split_locus_check(&set)?;
        let multiplicity = part
            .iter()
            .map(|&i| {
                same_outer_action_profiles(&profiles[i], &profiles[part[0]])
                    .map(|w| w.map_or(0, |w| w.multiplicity))
            })
            .collect::<Result<_>>()?;
        let names = |v: &[usize]| v.iter().map(|&k| label(part[k])).collect::<Vec<_>>();
        outer_classes.push(OuterClassEntry {
            members: part.iter().map(|&i| label(i)).collect(),
            zgroup_order: set.zgroup().len(),
            torsor_verified: true,
            e0_split: split.e0_split,
            split_members: names(&split.split_members),
            delta_image: names(&split.delta_image),
            witness_multiplicity: multiplicity,
        });
    }
    clock.lap("verify");

    Ok(ClassificationReport {
        pair: (display_name(g), display_name(h)),
        bound,
        classes,
        outer_classes,
        timing: opts.timing.then_some(clock.phases),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::by_name;

    fn run(g: &str, h: &str) -> ClassificationReport {
        classify(&by_name(g).unwrap(), &by_name(h).unwrap(), DEFAULT_BOUND).unwrap()
    }

    #[test]
    fn small_reports() {
        let r = run("C2", "C2");
        assert_eq!(r.outer_classes.len(), 1);
        let oc = &r.outer_classes[0];
        assert_eq!((oc.members.len(), oc.zgroup_order, oc.split_members.len()), (2, 2, 1));

        let r = run("C2", "S3");
        assert!(r.outer_classes.iter().all(|oc| oc.members.len() == 1));

        let r = run("V4", "C2");
        assert_eq!(r.outer_classes.len(), 1);
        assert_eq!((r.outer_classes[0].members.len(), r.outer_classes[0].zgroup_order), (8, 8));
    }

    #[test]
    fn timing_is_opt_in() {
        let (g, h) = (by_name("C2").unwrap(), by_name("C3").unwrap());
        assert!(classify(&g, &h, 8).unwrap().timing.is_none());
        let timed = classify_with(&g, &h, 8, &ClassifyOptions { timing: true }).unwrap();
        assert_eq!(timed.timing.unwrap().len(), 3);
        assert!(matches!(classify(&g, &h, 5), Err(Error::BoundExceeded { .. })));
    }
}
