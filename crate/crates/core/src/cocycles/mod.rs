//! Cocycle-side machinery: crossed morphisms and extension automorphisms,
//! 2-cocycles and Baer sums, and factor systems with the complete
//! enumeration of extensions built on them.

mod crossed;
mod factor;
mod schreier;
mod solve;
mod two;

pub use crossed::{
    aut_extension, automorphism_from_cocycle, cocycle_automorphisms, h1_coc, semidirect,
    z1_cocycles, z1_group, AutExtension, CrossedMorphism, H1Coc, Z1Group,
};
pub use factor::FactorSystem;
pub use schreier::{factor_systems, schreier_enumerate, schreier_enumerate_gauged, Gauge};
pub use two::{
    baer_diff, baer_sum, coboundary, cocycle_from_extension, extension_from_cocycle, split_like,
    standard_section, two_cocycles, Cohomology2, TwoCocycle,
};
