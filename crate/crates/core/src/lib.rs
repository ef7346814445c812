//! Splice calculus on alternating link diagrams: splice-unknotting
//! numbers, maximal Euler characteristic of spanning state surfaces,
//! crosscap number and orientable genus, prime factorization with
//! negative-factor bookkeeping, and the two-component genus pipeline.

pub mod bracket;
pub mod diagram;
pub mod error;

pub mod gen;


pub mod pipeline;
pub mod search;
pub mod splice;


pub use bracket::{brackets_distinguish, kauffman_bracket, linking_number, writhe};
pub use diagram::{Components, Crossing, CrossingId, EdgeId, Face, PlanarDiagram, Port};
pub use error::{Error, Result};
pub mod factor;
pub mod surface;
pub use factor::{analyze_knot, bracket_m, connected_sum, is_negative_factor, prime_factors, reduce_monogons, FactorInfo, FactorReport};
pub use pipeline::{add_twist_bigons, join_at_bigon, theorem_check, two_component_genus, GenusReport, TwistVariant};
pub use search::{exhaustive_min, u_minus, u_minus_2, CostModel, SearchOptions, WitnessSequence};
pub use splice::{available_moves, classify, count_state_circles, is_orientable_state, seifert_state, smooth, MoveSet, SpliceKind, SpliceMove, State, Way};
pub use surface::{adams_kindred, beta1, brute_chi_max, clark_check, genus_from_chi, ChiReport, GenusBound, GenusValues};
