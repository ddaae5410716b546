//! Exact analysis of fractional revival and perfect state transfer for
//! continuous-time quantum walks on graphs in association schemes.

pub mod bigfloat;
pub mod drg;
pub mod error;
pub mod hamming;
pub mod number_theory;
pub mod oracle;
pub mod revival;
pub mod scheme;
pub mod spectrum;
pub mod time;
pub mod weighted;

pub use drg::{build_family, reproduce_table, DrgFamily, DrgFamilyInstance, TableRow};
pub use error::{Error, Result};
pub use hamming::{
    analyze_hamming, balanced_at_pi_over_2k, family_pi_over_2k, hamming_fr_test, hamming_g_hg, hamming_spectrum,
    BalancedCheck, Connectivity, HammingGraphSpec,
};
pub use oracle::{amplitude_profile, dense_walk, verify_revival, AmplitudeProfile, RevivalCheck};
pub use revival::{
    analyze_spectrum, check_fr_at_time, classify, compute_g_h_mu, revival_params, AdmissibleM, BetaPhase,
    Classification, HValue, RevivalInvariants, RevivalKind, RevivalParameters, RevivalVerdict,
};
pub use scheme::{ExplicitScheme, SchemeEigenbasis};
pub use spectrum::{SchemeSpectrum, Sign};
pub use time::{PiAngle, WalkTime};
pub use weighted::{balanced_at_omega, classify_wa2_plus_a1, WeightedSpanSpec};
