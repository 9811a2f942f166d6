//! Named worked examples with expected outcomes, checked by both the fast
//! procedures and the brute-force oracle on a finite image.

use crate::classify::{classify, is_s_primary};
use crate::error::Result;
use crate::multiplicative::MultiplicativeSet;
use crate::oracle::build_universe;
use crate::ring::{Ideal, RingDescriptor, RingElement};

/// Truncation sizes for the Boolean product ring.
pub const BOOLEAN_TRUNCATIONS: [usize; 4] = [2, 3, 4, 6];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl FixtureOutcome {
    fn new(name: impl Into<String>, expected: String, computed: Result<String>) -> Self {
        let computed = computed.unwrap_or_else(|e| format!("error: {e}"));
        FixtureOutcome {
            name: name.into(),
            pass: computed == expected,
            expected,
            computed,
        }
    }
}

/// Elements of `Z/n` not divisible by `p`, i.e. the image of `Z ∖ pZ`.
fn image_of_complement(n: u64, p: i64) -> Result<(RingDescriptor, MultiplicativeSet)> {
    let r = RingDescriptor::modular(n)?;
    let elems: Vec<RingElement> = (0..n as i64).filter(|v| v % p != 0).map(|v| r.from_i64(v)).collect();
    let s = MultiplicativeSet::explicit(&r, &elems)?;
    Ok((r, s))
}

fn six_z() -> FixtureOutcome {
    let expected = "s_irreducible=true irreducible=false; Z/36: s_irreducible=true irreducible=false".to_string();
    let computed = (|| {
        let z = RingDescriptor::integers();
        let q = Ideal::principal(&z.from_i64(6));
        let s = MultiplicativeSet::complement_of_primes(&z, &[z.from_i64(3)])?;
        let r = classify(&q, &s)?;
        let (ring, image) = image_of_complement(36, 3)?;
        let mut u = build_universe(&ring, &[], 64)?;
        let si = u.add_set(&image)?;
        let one = u.add_set(&MultiplicativeSet::explicit(&ring, &[ring.one()])?)?;
        let q36 = u.ideal_index(&Ideal::principal(&ring.from_i64(6)));
        Ok(format!(
            "s_irreducible={} irreducible={}; Z/36: s_irreducible={} irreducible={}",
            r.flags.s_irreducible,
            r.flags.irreducible,
            u.brute_is_s_irreducible(q36, si),
            u.brute_is_s_irreducible(q36, one),
        ))
    })();
    FixtureOutcome::new("6Z-s-irreducible", expected, computed)
}

fn four_z() -> FixtureOutcome {
    let expected = "s_primary=true s_prime=false; Z/16: s_primary=true s_prime=false".to_string();
    let computed = (|| {
        let z = RingDescriptor::integers();
        let q = Ideal::principal(&z.from_i64(4));
        let s = MultiplicativeSet::complement_of_primes(&z, &[z.from_i64(2)])?;
        let r = classify(&q, &s)?;
        let (ring, image) = image_of_complement(16, 2)?;
        let mut u = build_universe(&ring, &[], 64)?;
        let si = u.add_set(&image)?;
        let q16 = u.ideal_index(&Ideal::principal(&ring.from_i64(4)));
        Ok(format!(
            "s_primary={} s_prime={}; Z/16: s_primary={} s_prime={}",
            r.flags.s_primary,
            r.flags.s_prime,
            u.brute_is_s_primary(q16, si),
            u.brute_is_s_prime(q16, si),
        ))
    })();
    FixtureOutcome::new("4Z-s-primary-not-s-prime", expected, computed)
}

fn boolean_zero(k: usize) -> FixtureOutcome {
    let mut e1 = vec![0i64; k];
    e1[0] = 1;
    let e1_text = format!("({})", e1.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
    let expected = format!("s_primary=true witness={e1_text} oracle=true oracle_witness=true");
    let computed = (|| {
        let r = RingDescriptor::boolean(k)?;
        let e = r.tuple(&e1)?;
        let s = MultiplicativeSet::explicit(&r, &[r.one(), e.clone()])?;
        let zero = Ideal::zero(&r);
        let v = is_s_primary(&zero, &s)?;
        let witness = v.witness.map(|w| w.witness.to_string()).unwrap_or_else(|| "none".into());
        let mut u = build_universe(&r, &[], 64)?;
        let si = u.add_set(&s)?;
        let z = u.ideal_index(&zero);
        Ok(format!(
            "s_primary={} witness={witness} oracle={} oracle_witness={}",
            v.holds,
            u.brute_is_s_primary(z, si),
            u.witness_works(z, u.element_index(&e), false),
        ))
    })();
    FixtureOutcome::new(format!("boolean-zero-s-primary-k{k}"), expected, computed)
}

pub fn fixture_names() -> Vec<String> {
    let mut names = vec!["6Z-s-irreducible".to_string(), "4Z-s-primary-not-s-prime".to_string()];
    names.extend(BOOLEAN_TRUNCATIONS.iter().map(|k| format!("boolean-zero-s-primary-k{k}")));
    names
}

/// Runs every fixture in a fixed order.
pub fn run_fixtures() -> Vec<FixtureOutcome> {
    let mut out = vec![six_z(), four_z()];
    out.extend(BOOLEAN_TRUNCATIONS.iter().map(|&k| boolean_zero(k)));
    out
}
