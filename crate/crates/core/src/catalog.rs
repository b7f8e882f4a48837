//! Named small groups: `Cn`, `Dn` (order 2n), `S3`, `S4`, `Q8`, `V4` and
//! direct products written `C2xS3`.

use crate::error::{Error, Result};
use crate::group::{direct_product, FiniteGroup};
use crate::hom::are_isomorphic;

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n > 0);
    let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    FiniteGroup::from_trusted(n, table).with_name(format!("C{n}"))
}

/// Symmetries of the n-gon, elements `r^i s^j` at index `i + n*j`.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n > 0);
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let (a, b) = (x % n, x / n);
            let (c, d) = (y % n, y / n);
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            table.push(rot + n * ((b + d) % 2));
        }
    }
    FiniteGroup::from_trusted(order, table).with_name(format!("D{n}"))
}

/// Permutations of `0..n` in lexicographic order, composed right to left.
pub fn symmetric(n: usize) -> FiniteGroup {
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        perms.push(p.clone());
        if !next_permutation(&mut p) {
            break;
        }
    }
    let order = perms.len();
    let mut table = Vec::with_capacity(order * order);
    for s in &perms {
        for t in &perms {
            let st: Vec<usize> = t.iter().map(|&x| s[x]).collect();
            table.push(perms.binary_search(&st).expect("closed under composition"));
        }
    }
    FiniteGroup::from_trusted(order, table).with_name(format!("S{n}"))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Quaternion units `1, -1, i, -i, j, -j, k, -k` at indices `0..8`.
pub fn quaternion() -> FiniteGroup {
    // unit product: (unit, sign flip) for units 1,i,j,k
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let mut table = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (u, su) = (x / 2, x % 2 == 1);
            let (v, sv) = (y / 2, y % 2 == 1);
            let (w, flip) = UNIT[u][v];
            let neg = su ^ sv ^ flip;
            table.push(2 * w + usize::from(neg));
        }
    }
    FiniteGroup::from_trusted(8, table).with_name("Q8")
}

pub fn klein() -> FiniteGroup {
    let c2 = cyclic(2);
    direct_product(&c2, &c2).group.with_name("V4")
}

fn atom(name: &str) -> Result<FiniteGroup> {
    let unknown = || Error::UnknownGroup(name.to_string());
    let num = |s: &str| s.parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(unknown);
    match name {
        "V4" | "K4" => Ok(klein()),
        "Q8" => Ok(quaternion()),
        "S3" => Ok(symmetric(3)),
        "S4" => Ok(symmetric(4)),
        _ => {
            if let Some(n) = name.strip_prefix('C') {
                Ok(cyclic(num(n)?))
            } else if let Some(n) = name.strip_prefix("Z/") {
                Ok(cyclic(num(n)?))
            } else if let Some(n) = name.strip_prefix('D') {
                Ok(dihedral(num(n)?))
            } else {
                Err(unknown())
            }
        }
    }
}

/// Resolves a catalog name; products associate to the left.
pub fn by_name(name: &str) -> Result<FiniteGroup> {
    let name = name.trim();
    let mut factors = name.split(['x', '×']).map(str::trim);
    let first = factors.next().filter(|s| !s.is_empty());
    let mut acc = atom(first.ok_or_else(|| Error::UnknownGroup(name.to_string()))?)?;
    let mut composite = false;
    for f in factors {
        acc = direct_product(&acc, &atom(f)?).group;
        composite = true;
    }
    Ok(if composite { acc.with_name(name) } else { acc })
}

/// Names tried by [`identify`], grouped by order.
const KNOWN: &[&str] = &[
    "C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3", "C7", "C8", "C2xC4", "C2xC2xC2", "D4", "Q8",
    "C9", "C3xC3", "C10", "D5", "C12", "C2xC6", "D6", "C3xC4", "C14", "D7", "C16", "C4xC4",
    "C2xC8", "C2xC2xC4", "C2xD4", "C2xQ8", "C2xC2xC2xC2", "C18", "C3xC6", "D9", "C3xS3", "C20",
    "C2xC10", "D10", "C24", "C2xC12", "C2xC2xC6", "S4", "D12", "C2xD6", "C4xS3", "C3xD4",
    "C3xQ8", "C2xC2xS3",
];

/// A catalog name for a group isomorphic to `g`, if one is listed.
pub fn identify(g: &FiniteGroup) -> Option<String> {
    KNOWN
        .iter()
        .filter_map(|name| by_name(name).ok().map(|h| (name, h)))
        .filter(|(_, h)| h.order() == g.order())
        .find(|(_, h)| are_isomorphic(g, h))
        .map(|(name, _)| (*name).to_string())
}
