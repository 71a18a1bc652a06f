//! Minimum distance, weight enumerators, duality checks and classification.

pub mod bounds;
pub mod distance;
pub mod duality;
pub mod enumerator;

pub use bounds::{classify, Bound, BoundsTable, Classification};
pub use distance::{min_distance, min_distance_with, DistanceOptions, DistanceResult, DistanceStrategy};
pub use duality::{check_self_dual, macwilliams_check, macwilliams_transform, MacWilliamsViolation, SelfDualReport};
pub use enumerator::{weight_enumerator, EnumerationOptions, WeightEnumerator, DEFAULT_LENGTH_GUARD};
