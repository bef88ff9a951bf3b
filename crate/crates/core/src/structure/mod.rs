//! Structural analysis: chordality, interval recognition, cut sets, and the
//! graph families used to exercise them.

pub mod chordal;
pub mod cuts;
pub mod families;
pub mod interval;

pub use chordal::{find_asteroidal_triple, find_induced_subdivided_claw, is_chordal, Chordality};
pub use cuts::{augment, minimal_cut_sets, s_lobes, CutSet, CutSetCatalog, DEFAULT_CUT_CAP};
pub use families::{fixture, generate_family, Family};
pub use interval::{
    end_cliques, interval_certificate, is_interval, maximal_cliques, IntervalCertificate, NonIntervalWitness,
    DEFAULT_REPRESENTATION_CAP,
};
