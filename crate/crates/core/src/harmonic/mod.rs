//! Winding and cutting numbers, the standard harmonic cycle and cocycle, and
//! certificates bundling every identity relating them.

mod certificate;
mod standard;
mod winding;

pub use certificate::{build_certificate, CertificateOptions, EnergyReport, HarmonicCertificate, Mode};
pub use standard::{
    harmonic_generator, rational_cutting, rational_winding, standard_harmonic_cocycle,
    standard_harmonic_cocycle_bruteforce, standard_harmonic_cocycle_fast, standard_harmonic_cycle,
    standard_harmonic_cycle_bruteforce, standard_harmonic_cycle_fast,
};
pub use winding::{
    cutting_homology_check, cutting_number, cycletree_winding_identity, winding_homology_check, winding_number,
    CuttingFrame, HomologyCheck, WindingFrame,
};
