//! Exact rationals, continued fractions, the Gauss map and Farey fractions.

mod cf;
mod farey;
mod rational;

pub use cf::{
    cf_alternate, cf_expand, convergents, dist_to_nearest_int, gauss_map, gauss_map2, CfExpansion,
    Convergents,
};
pub use farey::{farey_enumerate, farey_len, farey_pairs, farey_sample, totients, FareyPairs, FareySampler};
pub use rational::Rational;
