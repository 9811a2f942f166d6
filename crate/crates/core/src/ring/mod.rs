//! The ring catalog: descriptors, elements and ideals.

mod descriptor;
mod element;
mod ideal;

pub use descriptor::{RingDescriptor, RingKind};
pub use element::{ElementValue, RingElement};
pub use ideal::{
    enumerate_divisor_ideals, ideal_colon, ideal_colon_element, ideal_intersection,
    ideal_product, ideal_sum, intersect_all, is_primary_ideal, is_prime_ideal, radical, Ideal,
    IdealGenerator,
};
