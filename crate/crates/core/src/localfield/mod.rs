//! Finite fields, unramified extensions of `Q_p` at finite precision, and
//! unramified local reciprocity.

mod ff;
mod reciprocity;
mod tower;
mod units;

pub use ff::{build_finite_field, is_prime, FFElement, FiniteField, MAX_FIELD_DEGREE, MAX_FIELD_SIZE};
pub use reciprocity::{
    cup_matches_reciprocity, fundamental_cocycle, inv_unramified, norm_map, reciprocity_check, splitting_checks,
    Check, ReciprocityReport, SAMPLED_UNITS, SWEEP_LIMIT,
};
pub use tower::{build_tower, norm_lift, norm_tower, OElement, UnramifiedTower, MAX_TOWER_SIZE};
pub use units::{truncated_mult_module, TruncatedMultGroup};
