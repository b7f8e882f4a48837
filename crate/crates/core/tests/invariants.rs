use grpext::aut::GroupAction;
use grpext::catalog::by_name;
use grpext::cocycles::{
    baer_diff, baer_sum, cocycle_from_extension, extension_from_cocycle, standard_section, two_cocycles,
    Cohomology2,
};
use grpext::extension::{fiber_product, is_isomorphic, is_split, pullback, pushforward, Extension};
use grpext::group::{center, quotient, subgroup_generated, FiniteGroup};
use grpext::hom::{all_homs, find_isomorphism, GroupHom};
use grpext::io::to_json;
use grpext::report::classify;
use proptest::prelude::*;

const SMALL: &[&str] = &["C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3", "D4", "Q8", "C2xC4", "C2xS3"];

fn group(i: usize) -> FiniteGroup {
    by_name(SMALL[i % SMALL.len()]).unwrap()
}

/// `g` acting on `C3` by inversion through its nontrivial maps onto `C2`.
fn inversion(g: &FiniteGroup) -> GroupAction {
    let c3 = by_name("C3").unwrap();
    let sign = all_homs(g, &by_name("C2").unwrap()).pop().unwrap();
    let images = g.elements().map(|x| if sign.apply(x) == 0 { vec![0, 1, 2] } else { vec![0, 2, 1] }).collect();
    GroupAction::new(g, &c3, images).unwrap()
}

fn relabel(g: &FiniteGroup, perm: &[usize]) -> FiniteGroup {
    let n = g.order();
    let mut table = vec![0; n * n];
    for x in g.elements() {
        for y in g.elements() {
            table[perm[x] * n + perm[y]] = perm[g.mul(x, y)];
        }
    }
    FiniteGroup::from_flat(n, table).unwrap()
}

fn class_of(h2: &Cohomology2, e: &Extension) -> usize {
    let f = cocycle_from_extension(e, &standard_section(e)).unwrap();
    h2.class_of(&f).unwrap()
}

fn surjections(h: &FiniteGroup, targets: &[&str]) -> Vec<GroupHom> {
    targets
        .iter()
        .flat_map(|t| all_homs(h, &by_name(t).unwrap()))
        .filter(GroupHom::is_surjective)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lagrange(gi in 0usize..12, a in 0usize..64, b in 0usize..64) {
        let g = group(gi);
        let n = g.order();
        let s = subgroup_generated(&g, &[a % n, b % n]);
        prop_assert_eq!(n % s.order(), 0);
        prop_assert!(s.elements().iter().all(|&x| s.elements().iter().all(|&y| s.contains(g.mul(x, g.inv(y))))));
    }

    #[test]
    fn quotient_kernel(gi in 0usize..12, a in 0usize..64) {
        let g = group(gi);
        let s = subgroup_generated(&g, &[a % g.order()]);
        let n = if s.is_normal() { s } else { center(&g) };
        let (q, proj) = quotient(&g, &n).unwrap();
        let ker = proj.kernel();
        prop_assert_eq!(ker.elements(), n.elements());
        prop_assert_eq!(q.order() * n.order(), g.order());
        prop_assert!(proj.is_surjective());
        GroupHom::new(&g, &q, proj.map().to_vec()).unwrap();
    }

    #[test]
    fn isomorphism_symmetry(gi in 0usize..12, perm in Just((0usize..24).collect::<Vec<_>>()).prop_shuffle()) {
        let g = group(gi);
        let p: Vec<usize> = perm.into_iter().filter(|&x| x < g.order()).collect();
        let h = relabel(&g, &p);
        let f = find_isomorphism(&g, &h).unwrap();
        let back = find_isomorphism(&h, &g).unwrap();
        GroupHom::new(&h, &g, f.inverse().unwrap().map().to_vec()).unwrap();
        prop_assert!(back.then(&f).unwrap().is_bijective());
    }

    #[test]
    fn pullback_functoriality(gi in 0usize..4, ci in 0usize..16, fi in 0usize..64, hi in 0usize..64) {
        let (g, m) = [("C2", "C2"), ("V4", "C2"), ("C2", "C4"), ("S3", "C3")][gi];
        let (g, m) = (by_name(g).unwrap(), by_name(m).unwrap());
        let action = if m.order() == 3 {
            inversion(&g)
        } else {
            GroupAction::trivial(&g, &m)
        };
        let h2 = two_cocycles(&action).unwrap();
        let e = extension_from_cocycle(h2.rep(ci % h2.order()));
        let k = by_name("C2xC2").unwrap();
        let l = by_name("C4").unwrap();
        let fs = all_homs(&k, &g);
        let gs = all_homs(&l, &k);
        let f = &fs[fi % fs.len()];
        let h = &gs[hi % gs.len()];
        let twice = pullback(&pullback(&e, f).unwrap(), h).unwrap();
        let once = pullback(&e, &h.then(f).unwrap()).unwrap();
        prop_assert!(is_isomorphic(&twice, &once));
        prop_assert!(is_isomorphic(&pullback(&e, &GroupHom::identity(&g)).unwrap(), &e));
    }

    #[test]
    fn pushforward_composition(gi in 0usize..3, mi in 0usize..3, ci in 0usize..64, fi in 0usize..64, hi in 0usize..64) {
        let g = by_name(["C2", "C3", "V4"][gi]).unwrap();
        let m = by_name(["C4", "C6", "C2xC4"][mi]).unwrap();
        let h2 = two_cocycles(&GroupAction::trivial(&g, &m)).unwrap();
        let e = extension_from_cocycle(h2.rep(ci % h2.order()));
        let fs = surjections(&m, &["C2", "C3", "C4", "V4"]);
        let f = &fs[fi % fs.len()];
        let gs = surjections(f.codomain(), &["C1", "C2"]);
        let h = &gs[hi % gs.len()];
        let twice = pushforward(&pushforward(&e, f).unwrap(), h).unwrap();
        let once = pushforward(&e, &f.then(h).unwrap()).unwrap();
        prop_assert!(is_isomorphic(&twice, &once));
        prop_assert!(is_isomorphic(&pushforward(&e, &GroupHom::identity(&m)).unwrap(), &e));
    }

    #[test]
    fn fiber_product_universal(i1 in 0usize..64, i2 in 0usize..64, ia in 0usize..64, ib in 0usize..64) {
        let (g1, g2, q) = (by_name("C4").unwrap(), by_name("S3").unwrap(), by_name("C2").unwrap());
        let k = by_name("C2xC2").unwrap();
        let p1s = all_homs(&g1, &q);
        let p2s = all_homs(&g2, &q);
        let (phi1, phi2) = (&p1s[i1 % p1s.len()], &p2s[i2 % p2s.len()]);
        let fp = fiber_product(phi1, phi2).unwrap();
        prop_assert_eq!(fp.p1.then(phi1).unwrap(), fp.p2.then(phi2).unwrap());
        let legs_a = all_homs(&k, &g1);
        let a = &legs_a[ia % legs_a.len()];
        let target = a.then(phi1).unwrap();
        let legs_b: Vec<GroupHom> = all_homs(&k, &g2).into_iter().filter(|b| b.then(phi2).unwrap() == target).collect();
        prop_assume!(!legs_b.is_empty());
        let b = &legs_b[ib % legs_b.len()];
        let u = fp.lift_cone(a, b).unwrap();
        GroupHom::new(&k, &fp.group, u.map().to_vec()).unwrap();
        prop_assert_eq!(&u.then(&fp.p1).unwrap(), a);
        prop_assert_eq!(&u.then(&fp.p2).unwrap(), b);
    }

    #[test]
    fn baer_group_axioms(ai in 0usize..4, i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let (g, m, flip) = [("C2", "C4", false), ("V4", "C2", false), ("C2", "C3", true), ("C4", "C2", false)][ai];
        let (g, m) = (by_name(g).unwrap(), by_name(m).unwrap());
        let action = if flip {
            inversion(&g)
        } else {
            GroupAction::trivial(&g, &m)
        };
        let h2 = two_cocycles(&action).unwrap();
        let n = h2.order();
        let (i, j, k) = (i % n, j % n, k % n);
        let e = |c: usize| extension_from_cocycle(h2.rep(c));
        let sum = |x: &Extension, y: &Extension| baer_sum(x, y).unwrap();
        prop_assert_eq!(class_of(&h2, &sum(&e(i), &e(j))), h2.add(i, j));
        prop_assert_eq!(class_of(&h2, &sum(&e(i), &e(j))), class_of(&h2, &sum(&e(j), &e(i))));
        let left = sum(&sum(&e(i), &e(j)), &e(k));
        let right = sum(&e(i), &sum(&e(j), &e(k)));
        prop_assert_eq!(class_of(&h2, &left), class_of(&h2, &right));
        prop_assert_eq!(class_of(&h2, &sum(&e(i), &e(h2.zero()))), i);
        prop_assert!(is_split(&baer_diff(&e(i), &e(i)).unwrap()));
        prop_assert_eq!(is_split(&e(i)), i == h2.zero());
    }
}

#[test]
fn classification_is_deterministic() {
    for (g, h) in [("C2", "C4"), ("S3", "C3"), ("C2", "Q8")] {
        let (g, h) = (by_name(g).unwrap(), by_name(h).unwrap());
        let a = to_json(&classify(&g, &h, 64).unwrap());
        let b = to_json(&classify(&g, &h, 64).unwrap());
        assert_eq!(a, b);
    }
}

#[test]
fn classification_ignores_labels() {
    let h = by_name("D4").unwrap();
    let perm = [3, 0, 6, 1, 7, 2, 5, 4];
    let g = by_name("C2").unwrap();
    let plain = classify(&g, &h, 64).unwrap();
    let moved = classify(&g, &relabel(&h, &perm), 64).unwrap();
    assert_eq!(plain.classes.len(), moved.classes.len());
    assert_eq!(plain.outer_classes.len(), moved.outer_classes.len());
}
