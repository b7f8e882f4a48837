//! Small extensions shared by the unit tests.

use crate::catalog::{by_name, identify};
use crate::cocycles::schreier_enumerate;
use crate::extension::Extension;
use crate::hom::GroupHom;

pub(crate) fn ext(sub: &str, total: &str, quot: &str, incl: &[usize], proj: &[usize]) -> Extension {
    let (h, e, g) = (by_name(sub).unwrap(), by_name(total).unwrap(), by_name(quot).unwrap());
    let incl = GroupHom::new(&h, &e, incl.to_vec()).unwrap();
    let proj = GroupHom::new(&e, &g, proj.to_vec()).unwrap();
    Extension::new(&h, &e, &g, incl, proj).unwrap()
}

pub(crate) fn z4_ext() -> Extension {
    ext("C2", "C4", "C2", &[0, 2], &[0, 1, 0, 1])
}

pub(crate) fn v4_ext() -> Extension {
    ext("C2", "V4", "C2", &[0, 2], &[0, 1, 0, 1])
}

pub(crate) fn s3_ext() -> Extension {
    ext("C3", "S3", "C2", &[0, 3, 4], &[0, 1, 1, 0, 0, 1])
}

pub(crate) fn c6_ext() -> Extension {
    ext("C3", "C6", "C2", &[0, 2, 4], &[0, 1, 0, 1, 0, 1])
}

pub(crate) fn q8_over_v4() -> Extension {
    ext("C2", "Q8", "V4", &[0, 1], &[0, 0, 2, 2, 1, 1, 3, 3])
}

pub(crate) fn d4_over_v4() -> Extension {
    ext("C2", "D4", "V4", &[0, 2], &[0, 2, 0, 2, 1, 3, 1, 3])
}

/// Enumerated classes of `g` by `h` whose total is the catalog group `name`.
pub(crate) fn classes_with_total(g: &str, h: &str, name: &str) -> Vec<Extension> {
    let (g, h) = (by_name(g).unwrap(), by_name(h).unwrap());
    schreier_enumerate(&g, &h, 64)
        .unwrap()
        .into_iter()
        .filter(|e| identify(e.total()).as_deref() == Some(name))
        .collect()
}
