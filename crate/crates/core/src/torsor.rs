//! The action of `Ext(G, Z, E)` on the extensions inducing the outer action
//! of `E`, the difference of two such extensions, and exhaustive checks of
//! simple transitivity.

use rayon::prelude::*;
use serde::Serialize;

use crate::aut::{AutGroup, GroupAction};
use crate::classes::ClassIndex;
use crate::cocycles::{baer_sum, extension_from_cocycle, two_cocycles, Cohomology2, TwoCocycle};
use crate::error::{Error, Result};
use crate::extension::{ext_isomorphism, fiber_product_over_quotient, pushforward, Extension};
use crate::group::{center, FiniteGroup, Subgroup};
use crate::hom::GroupHom;
use crate::outer::{fiber_over_e0, same_outer_action_profiles, OuterProfile, OuterWitness};

/// `Z = Z(H)` re-indexed as a group, with the action of `G` on it.
#[derive(Clone, Debug)]
pub struct CenterAction {
    pub center: FiniteGroup,
    /// `Z → H`
    pub incl: GroupHom,
    pub subgroup: Subgroup,
    pub action: GroupAction,
}

impl CenterAction {
    pub fn to_hom(&self) -> GroupHom {
        self.action.to_hom(&AutGroup::of(&self.center))
    }
}

pub fn induced_action_on_center(e: &Extension) -> CenterAction {
    let z = center(e.sub());
    let (zg, incl) = z.to_group();
    let t = e.total();
    let images = e
        .quot()
        .elements()
        .map(|g| {
            let x = e.lift(g);
            z.elements()
                .iter()
                .map(|&h| {
                    let c = e.sub_index(t.conj(x, e.incl().apply(h))).expect("kernel is normal");
                    z.position(c).expect("the center is characteristic")
                })
                .collect()
        })
        .collect();
    CenterAction {
        action: GroupAction::new_unchecked(e.quot(), &zg, images),
        center: zg,
        incl,
        subgroup: z,
    }
}

fn check_center_extension(centre: &CenterAction, e: &Extension, ep: &Extension) -> Result<()> {
    if ep.sub() != &centre.center || ep.quot() != e.quot() {
        return Err(Error::SignatureMismatch);
    }
    if ep.abelian_action()? != centre.action {
        return Err(Error::ActionMismatch);
    }
    Ok(())
}

/// `μ₊(E ×_G E')` for `μ: H × Z → H`, `(h, z) ↦ h·z`.
pub fn act(e: &Extension, ep: &Extension) -> Result<Extension> {
    act_with(&induced_action_on_center(e), e, ep)
}

pub fn act_with(centre: &CenterAction, e: &Extension, ep: &Extension) -> Result<Extension> {
    check_center_extension(centre, e, ep)?;
    let h = e.sub();
    let fp = fiber_product_over_quotient(e, ep)?;
    let map = fp
        .sub
        .pairs()
        .iter()
        .map(|&(x, z)| h.mul(x, centre.incl.apply(z)))
        .collect();
    let mu = GroupHom::new_unchecked(&fp.sub.group, h, map);
    Ok(pushforward(&fp.extension, &mu).expect("the kernel of μ is normal once the actions agree"))
}

/// `∇₊(E1 ×_{E0} E2)` with `∇(h1, h2) = h1⁻¹h2 ∈ Z`.
pub fn diff(e1: &Extension, e2: &Extension, w: &OuterWitness) -> Result<Extension> {
    diff_profiles(&OuterProfile::new(e1), &OuterProfile::new(e2), w)
}

pub fn diff_profiles(p1: &OuterProfile, p2: &OuterProfile, w: &OuterWitness) -> Result<Extension> {
    if !p1.extension.same_signature(&p2.extension) {
        return Err(Error::SignatureMismatch);
    }
    if !w.action_check {
        return Err(Error::NotSameOuterAction);
    }
    let h = p1.extension.sub();
    let fe = fiber_over_e0(p1, p2, &w.e0_iso)?;
    let z = &p1.center;
    let nabla = fe
        .sub
        .pairs()
        .iter()
        .map(|&(a, b)| {
            z.position(h.mul(h.inv(a), b))
                .expect("pairs over a common coset differ by a central element")
        })
        .collect();
    let (zg, _) = z.to_group();
    let nabla = GroupHom::new_unchecked(&fe.sub.group, &zg, nabla);
    pushforward(&fe.extension, &nabla).map_err(|err| match err {
        Error::KernelNotNormalInE => Error::NotSameOuterAction,
        other => other,
    })
}

/// `act(act(E, E'1), E'2) ≅ act(E, E'1 + E'2)`.
pub fn act_compatibility_check(e: &Extension, z1: &Extension, z2: &Extension) -> Result<bool> {
    let lhs = act(&act(e, z1)?, z2)?;
    let rhs = act(e, &baer_sum(z1, z2)?)?;
    Ok(ext_isomorphism(&lhs, &rhs)?.is_some())
}

/// The extensions inducing the outer action of `base`, with `Ext(G, Z, E)`.
#[derive(Clone, Debug)]
pub struct ExtClassSet {
    base: Extension,
    centre: CenterAction,
    members: ClassIndex,
    profiles: Vec<OuterProfile>,
    zgroup: ClassIndex,
    neutral: usize,
}

impl ExtClassSet {
    /// Validates that every member has the outer action of `base`, that
    /// members and `zgroup` are pairwise non-isomorphic by explicit search,
    /// and that `zgroup` carries the induced action on the center.
    pub fn new(base: &Extension, members: &[Extension], zgroup: &[Extension]) -> Result<Self> {
        let centre = induced_action_on_center(base);
        let pbase = OuterProfile::new(base);
        let profiles: Vec<OuterProfile> = members.par_iter().map(OuterProfile::new).collect();
        for (i, p) in profiles.iter().enumerate() {
            if !p.extension.same_signature(base) {
                return Err(Error::SignatureMismatch);
            }
            if same_outer_action_profiles(&pbase, p)?.is_none() {
                return Err(Error::ViolationFound(format!("member {i} has another outer action")));
            }
        }
        pairwise_distinct(members, "member")?;
        for (i, z) in zgroup.iter().enumerate() {
            check_center_extension(&centre, base, z)
                .map_err(|_| Error::ViolationFound(format!("zgroup entry {i} has the wrong action")))?;
        }
        pairwise_distinct(zgroup, "zgroup entry")?;
        let zindex = ClassIndex::from_members(&centre.center, base.quot(), zgroup)?;
        let split = extension_from_cocycle(&TwoCocycle::zero(&centre.action));
        let neutral = zindex
            .find(&split)?
            .ok_or_else(|| Error::ViolationFound("zgroup lacks the split class".into()))?;
        Ok(ExtClassSet {
            base: base.clone(),
            members: ClassIndex::from_members(base.sub(), base.quot(), members)?,
            profiles,
            zgroup: zindex,
            neutral,
            centre,
        })
    }

    /// Uses one extension per class of `H²(G, Z)` as the group.
    pub fn from_members(base: &Extension, members: &[Extension]) -> Result<Self> {
        let (_, zgroup) = zgroup_of(base)?;
        Self::new(base, members, &zgroup)
    }

    pub fn base(&self) -> &Extension {
        &self.base
    }

    pub fn centre(&self) -> &CenterAction {
        &self.centre
    }

    pub fn members(&self) -> &[Extension] {
        self.members.members()
    }

    pub fn member_index(&self) -> &ClassIndex {
        &self.members
    }

    pub fn profiles(&self) -> &[OuterProfile] {
        &self.profiles
    }

    pub fn zgroup(&self) -> &[Extension] {
        self.zgroup.members()
    }

    pub fn zindex(&self) -> &ClassIndex {
        &self.zgroup
    }

    /// Index of the split class `Z ⋊ G` in [`ExtClassSet::zgroup`].
    pub fn neutral(&self) -> usize {
        self.neutral
    }
}

fn pairwise_distinct(list: &[Extension], what: &str) -> Result<()> {
    let n = list.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let clash = pairs
        .par_iter()
        .map(|&(i, j)| ext_isomorphism(&list[i], &list[j]).map(|w| w.map(|_| (i, j))))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    match clash {
        Some((i, j)) => Err(Error::ViolationFound(format!("{what}s {i} and {j} are isomorphic"))),
        None => Ok(()),
    }
}

/// `H²(G, Z)` for the action induced by `e`, with one extension per class
/// in class order.
pub fn zgroup_of(e: &Extension) -> Result<(Cohomology2, Vec<Extension>)> {
    let centre = induced_action_on_center(e);
    let h2 = two_cocycles(&centre.action)?;
    let list = (0..h2.order()).map(|c| extension_from_cocycle(h2.rep(c))).collect();
    Ok((h2, list))
}

/// Outcome of [`verify_simply_transitive`].
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TorsorReport {
    pub pairs_checked: usize,
    /// `action_table[i][j]`: index of the member `act(members[i], zgroup[j])`
    pub action_table: Vec<Vec<usize>>,
    pub well_defined: bool,
    pub free: bool,
    pub transitive: bool,
    pub round_trips: bool,
    pub counterexample: Option<String>,
}

impl TorsorReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct RowResult {
    row: Vec<Option<usize>>,
    failure: Option<String>,
    well_defined: bool,
    round_trip: bool,
}

fn first<T>(slot: &mut Option<T>, value: T) {
    if slot.is_none() {
        *slot = Some(value);
    }
}

fn row(s: &ExtClassSet, i: usize) -> Result<RowResult> {
    let m = &s.members()[i];
    let pm = &s.profiles[i];
    let mr = m.reversed();
    let mut out = RowResult {
        row: Vec::with_capacity(s.zgroup().len()),
        failure: None,
        well_defined: true,
        round_trip: true,
    };
    for (j, z) in s.zgroup().iter().enumerate() {
        let r = act_with(&s.centre, m, z)?;
        let k = s.members.find(&r)?;
        out.row.push(k);
        let Some(k) = k else {
            first(&mut out.failure, format!("act(E{i}, Z{j}) is not a member"));
            continue;
        };
        let again = act_with(&s.centre, &mr, &z.reversed())?;
        if s.members.find(&again)? != Some(k) {
            out.well_defined = false;
            first(&mut out.failure, format!("act(E{i}, Z{j}) changes class on relabelled inputs"));
        }
        // diff(E, act(E, ζ)) recovers ζ
        let pr = OuterProfile::new(&r);
        let back = match same_outer_action_profiles(pm, &pr)? {
            Some(w) => s.zgroup.find(&diff_profiles(pm, &pr, &w)?)?,
            None => None,
        };
        if back != Some(j) {
            out.round_trip = false;
            first(&mut out.failure, format!("diff(E{i}, act(E{i}, Z{j})) is not Z{j}"));
        }
    }
    Ok(out)
}

/// Builds the full action table and checks well-definedness, freeness,
/// transitivity and both round trips. Failures are reported, not raised;
/// the first one in index order is the counterexample.
pub fn torsor_report(s: &ExtClassSet) -> Result<TorsorReport> {
    let n = s.members().len();
    let nz = s.zgroup().len();
    let rows = (0..n).into_par_iter().map(|i| row(s, i)).collect::<Result<Vec<_>>>()?;
    let mut failure = None;
    let mut well_defined = true;
    let mut round_trips = true;
    for r in &rows {
        if let Some(f) = &r.failure {
            first(&mut failure, f.clone());
        }
        well_defined &= r.well_defined;
        round_trips &= r.round_trip;
    }
    let table: Vec<Vec<usize>> = rows
        .iter()
        .map(|r| r.row.iter().map(|k| k.unwrap_or(usize::MAX)).collect())
        .collect();

    let mut free = true;
    let mut transitive = true;
    for (i, r) in table.iter().enumerate() {
        let fixed: Vec<usize> = (0..nz).filter(|&j| r[j] == i).collect();
        if fixed != [s.neutral] {
            free = false;
            first(&mut failure, format!("E{i} is fixed by Z classes {fixed:?}"));
        }
        let mut hit = vec![false; n];
        for &k in r.iter().filter(|&&k| k < n) {
            hit[k] = true;
        }
        if let Some(k) = hit.iter().position(|&b| !b) {
            transitive = false;
            first(&mut failure, format!("no Z class carries E{i} to E{k}"));
        }
    }

    // act(E1, diff(E1, E2)) recovers E2
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |k| (i, k))).collect();
    let recovered = pairs
        .par_iter()
        .map(|&(i, k)| -> Result<Option<String>> {
            let (pi, pk) = (&s.profiles[i], &s.profiles[k]);
            let Some(w) = same_outer_action_profiles(pi, pk)? else {
                return Ok(Some(format!("E{i} and E{k} have different outer actions")));
            };
            let d = diff_profiles(pi, pk, &w)?;
            let Some(j) = s.zgroup.find(&d)? else {
                return Ok(Some(format!("diff(E{i}, E{k}) is not a Z class")));
            };
            if table[i][j] != k {
                return Ok(Some(format!("act(E{i}, diff(E{i}, E{k})) is not E{k}")));
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?;
    for f in recovered.into_iter().flatten() {
        round_trips = false;
        first(&mut failure, f);
    }

    Ok(TorsorReport {
        pairs_checked: n * nz + n * n,
        action_table: table,
        well_defined,
        free,
        transitive,
        round_trips,
        counterexample: failure,
    })
}

/// [`torsor_report`], raising `ViolationFound` on the first failure.
pub fn verify_simply_transitive(s: &ExtClassSet) -> Result<TorsorReport> {
    let report = torsor_report(s)?;
    match &report.counterexample {
        Some(c) => Err(Error::ViolationFound(c.clone())),
        None => Ok(report),
    }
}

/// `baer[a][b]`: index of the categorical Baer sum of two Z classes.
pub fn baer_table(s: &ExtClassSet) -> Result<Vec<Vec<usize>>> {
    let z = s.zgroup();
    (0..z.len())
        .into_par_iter()
        .map(|a| {
            (0..z.len())
                .map(|b| s.zgroup.locate(&baer_sum(&z[a], &z[b])?))
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

/// Compatibility of the action with the Baer sum on every triple, read off
/// the action table.
pub fn act_compatibility_table(report: &TorsorReport, baer: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
    let t = &report.action_table;
    for (i, row) in t.iter().enumerate() {
        for a in 0..baer.len() {
            for b in 0..baer.len() {
                if t[row[a]][b] != row[baer[a][b]] {
                    return Some((i, a, b));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::by_name;
    use crate::cocycles::schreier_enumerate;
    use crate::extension::is_isomorphic;
    use crate::outer::same_outer_action;
    use crate::testing::{c6_ext, d4_over_v4, q8_over_v4, s3_ext, v4_ext, z4_ext};

    #[test]
    fn center_actions() {
        assert!(induced_action_on_center(&c6_ext()).action.is_trivial());
        let s3 = induced_action_on_center(&s3_ext());
        assert_eq!(s3.action.images()[1], vec![0, 2, 1]);
        assert!(induced_action_on_center(&d4_over_v4()).action.is_trivial());
        assert_eq!(s3.to_hom().image().order(), 2);
    }

    #[test]
    fn acting() {
        let (z4, v4) = (z4_ext(), v4_ext());
        assert!(is_isomorphic(&act(&z4, &v4).unwrap(), &z4));
        assert!(is_isomorphic(&act(&z4, &z4).unwrap(), &v4));
        assert_eq!(act(&s3_ext(), &c6_ext()).unwrap_err(), Error::ActionMismatch);

        let (d4, q8) = (d4_over_v4(), q8_over_v4());
        let (_, zgroup) = zgroup_of(&d4).unwrap();
        let hits = zgroup
            .iter()
            .filter(|z| is_isomorphic(&act(&d4, z).unwrap(), &q8))
            .count();
        assert_eq!(hits, 1);
    }

    #[test]
    fn differences() {
        let (z4, v4) = (z4_ext(), v4_ext());
        let w = same_outer_action(&z4, &z4).unwrap().unwrap();
        assert!(is_isomorphic(&diff(&z4, &z4, &w).unwrap(), &v4));
        let w = same_outer_action(&z4, &v4).unwrap().unwrap();
        assert!(is_isomorphic(&diff(&z4, &v4, &w).unwrap(), &z4));

        let (q8, d4) = (q8_over_v4(), d4_over_v4());
        let w = same_outer_action(&q8, &d4).unwrap().unwrap();
        let x = diff(&q8, &d4, &w).unwrap();
        assert!(is_isomorphic(&act(&q8, &x).unwrap(), &d4));

        let bad = OuterWitness { action_check: false, ..w };
        assert_eq!(diff(&q8, &d4, &bad).unwrap_err(), Error::NotSameOuterAction);
    }

    fn class_set(g: &str, h: &str) -> ExtClassSet {
        let members = schreier_enumerate(&by_name(g).unwrap(), &by_name(h).unwrap(), 64).unwrap();
        ExtClassSet::from_members(&members[0], &members).unwrap()
    }

    #[test]
    fn simply_transitive() {
        let s = class_set("C2", "C2");
        let r = verify_simply_transitive(&s).unwrap();
        assert_eq!(s.zgroup().len(), 2);
        // regular action of C2 on two points
        let n = s.neutral();
        assert_eq!(r.action_table[0][n], 0);
        assert_eq!(r.action_table[0][1 - n], 1);

        let s = class_set("V4", "C2");
        assert_eq!((s.members().len(), s.zgroup().len()), (8, 8));
        assert!(verify_simply_transitive(&s).unwrap().holds());

        let s = class_set("C2", "S3");
        assert_eq!((s.members().len(), s.zgroup().len()), (1, 1));
        verify_simply_transitive(&s).unwrap();
    }

    #[test]
    fn compatibility() {
        let (z4, v4) = (z4_ext(), v4_ext());
        assert!(act_compatibility_check(&z4, &v4, &v4).unwrap());
        assert!(act_compatibility_check(&z4, &z4, &z4).unwrap());
        let set = class_set("V4", "C2");
        let report = verify_simply_transitive(&set).unwrap();
        assert_eq!(act_compatibility_table(&report, &baer_table(&set).unwrap()), None);
    }

    #[test]
    fn class_set_validation() {
        let z4 = z4_ext();
        assert!(ExtClassSet::from_members(&z4, &[z4.clone(), z4.reversed()]).is_err());
        assert!(ExtClassSet::from_members(&s3_ext(), &[s3_ext(), c6_ext()]).is_err());
    }
}
