use proptest::prelude::*;

use sprimary::arith::poly::Poly;
use sprimary::classify::{classify, is_s_primary, is_s_prime};
use sprimary::decompose::{is_minimal_decomposition, primary_decomposition, s_primary_decomposition};
use sprimary::multiplicative::{saturate, MultiplicativeSet};
use sprimary::oracle::build_universe;
use sprimary::ring::{
    ideal_colon_element, ideal_intersection, ideal_product, ideal_sum, intersect_all, is_primary_ideal,
    is_prime_ideal, radical, Ideal, RingDescriptor, RingElement, RingKind,
};

fn ring_strategy() -> impl Strategy<Value = RingDescriptor> {
    prop_oneof![
        Just(RingDescriptor::integers()),
        (2u64..=200).prop_map(|n| RingDescriptor::modular(n).unwrap()),
        prop::sample::select(vec![2u64, 3, 5]).prop_map(|p| RingDescriptor::polynomials(p).unwrap()),
        prop::sample::select(vec![vec![2u64, 2], vec![2, 3], vec![2, 4], vec![3, 9], vec![2, 2, 2], vec![4, 6]])
            .prop_map(|m| RingDescriptor::product(&m).unwrap()),
    ]
}

/// Deterministic element of `ring` from a seed.
fn element(ring: &RingDescriptor, seed: u64) -> RingElement {
    match ring.kind() {
        RingKind::Integers => ring.from_i64((seed % 601) as i64 - 300),
        RingKind::PolynomialsOverPrimeField(p) => {
            let mut s = seed;
            let mut coeffs = Vec::new();
            for _ in 0..=(seed % 4) {
                coeffs.push(s % p);
                s /= p;
            }
            ring.polynomial(Poly::new(*p, coeffs)).unwrap()
        }
        _ => ring.element_at((seed % ring.size().unwrap()) as usize),
    }
}

fn ring_and_elements(k: usize) -> impl Strategy<Value = (RingDescriptor, Vec<RingElement>)> {
    (ring_strategy(), prop::collection::vec(any::<u64>(), k))
        .prop_map(|(r, seeds)| {
            let es = seeds.iter().map(|&s| element(&r, s)).collect();
            (r, es)
        })
}

/// A multiplicative set built from a seed; `None` when the seed gives an
/// invalid set (e.g. a nilpotent generator).
fn mult_set(ring: &RingDescriptor, seed: u64) -> Option<MultiplicativeSet> {
    let e = element(ring, seed / 3);
    match seed % 3 {
        0 => Some(MultiplicativeSet::units(ring)),
        1 => {
            let ps = Ideal::principal(&e).minimal_primes();
            let gens: Vec<RingElement> = ps.iter().take(2).map(|p| p.generator_element()).collect();
            if gens.is_empty() {
                return None;
            }
            MultiplicativeSet::complement_of_primes(ring, &gens).ok()
        }
        _ => MultiplicativeSet::generated_by(ring, &[e]).ok(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, max_global_rejects: 1 << 20, ..ProptestConfig::default() })]

    #[test]
    fn lattice_laws((_r, es) in ring_and_elements(3)) {
        let [a, b, c] = [0, 1, 2].map(|k| Ideal::principal(&es[k]));
        prop_assert_eq!(ideal_sum(&a, &b)?, ideal_sum(&b, &a)?);
        prop_assert_eq!(ideal_intersection(&a, &b)?, ideal_intersection(&b, &a)?);
        prop_assert_eq!(
            ideal_sum(&ideal_sum(&a, &b)?, &c)?,
            ideal_sum(&a, &ideal_sum(&b, &c)?)?
        );
        prop_assert_eq!(
            ideal_intersection(&ideal_intersection(&a, &b)?, &c)?,
            ideal_intersection(&a, &ideal_intersection(&b, &c)?)?
        );
        prop_assert_eq!(ideal_intersection(&a, &ideal_sum(&a, &b)?)?, a.clone());
        prop_assert_eq!(ideal_sum(&a, &ideal_intersection(&a, &b)?)?, a.clone());
        let ab = ideal_intersection(&a, &b)?;
        prop_assert_eq!(a.is_subset_of(&b), ab == a);
        prop_assert!(ideal_product(&a, &b)?.is_subset_of(&ab));
    }

    #[test]
    fn colon_membership((_r, es) in ring_and_elements(3)) {
        let a = Ideal::principal(&es[0]);
        let (y, x) = (&es[1], &es[2]);
        let colon = ideal_colon_element(&a, y)?;
        prop_assert_eq!(colon.contains(x), a.contains(&x.mul(y)));
        prop_assert!(a.is_subset_of(&colon));
    }

    #[test]
    fn radical_laws((_r, es) in ring_and_elements(2)) {
        let a = Ideal::principal(&es[0]);
        let b = Ideal::principal(&es[1]);
        let ra = radical(&a);
        prop_assert!(a.is_subset_of(&ra));
        prop_assert_eq!(radical(&ra), ra.clone());
        prop_assert_eq!(radical(&ideal_intersection(&a, &b)?), ideal_intersection(&ra, &radical(&b))?);
        if is_prime_ideal(&a) {
            prop_assert!(is_primary_ideal(&a));
        }
    }

    #[test]
    fn primary_components_recompose((_r, es) in ring_and_elements(1)) {
        let a = Ideal::principal(&es[0]);
        prop_assume!(a.is_proper() && !a.is_zero_ideal());
        let comps = a.primary_components()?;
        prop_assert!(comps.iter().all(is_primary_ideal));
        prop_assert_eq!(intersect_all(a.ring(), comps.iter())?, a);
    }

    #[test]
    fn saturation_contract_and_idempotence((r, es) in ring_and_elements(2), seed in any::<u64>()) {
        let s = mult_set(&r, seed);
        prop_assume!(s.is_some());
        let s = s.unwrap();
        let i = Ideal::principal(&es[0]);
        let (sat, w) = saturate(&s, &i)?;
        prop_assert!(i.is_subset_of(&sat));
        prop_assert!(w.verify_membership(&s));
        prop_assert!(ideal_product(&Ideal::principal(&w.witness), &sat)?.is_subset_of(&i));
        prop_assert_eq!(saturate(&s, &sat)?.0, sat.clone());
        let j = ideal_intersection(&i, &Ideal::principal(&es[1]))?;
        prop_assert!(saturate(&s, &j)?.0.is_subset_of(&sat));
    }

    #[test]
    fn predicate_implications((r, es) in ring_and_elements(1), seed in any::<u64>()) {
        let s = mult_set(&r, seed);
        prop_assume!(s.is_some());
        let s = s.unwrap();
        let q = Ideal::principal(&es[0]);
        prop_assume!(q.is_proper());
        let c = classify(&q, &s)?;
        if c.flags.s_prime.known() == Some(true) {
            prop_assert_eq!(c.flags.s_primary.known(), Some(true));
        }
        if c.flags.s_primary.known() == Some(true) {
            prop_assert!(is_primary_ideal(&saturate(&s, &q)?.0));
        }
        let units = MultiplicativeSet::units(&r);
        prop_assert_eq!(is_s_prime(&q, &units)?.holds, is_prime_ideal(&q));
        prop_assert_eq!(is_s_primary(&q, &units)?.holds, is_primary_ideal(&q));
    }

    #[test]
    fn decomposition_recomposes((r, es) in ring_and_elements(1), seed in any::<u64>()) {
        let s = mult_set(&r, seed);
        prop_assume!(s.is_some());
        let s = s.unwrap();
        let i = Ideal::principal(&es[0]);
        prop_assume!(i.is_proper() && s.is_disjoint(&i)?);
        prop_assume!(!(i.is_zero_ideal() && !r.is_finite()));
        let d = s_primary_decomposition(&i, &s)?;
        for c in &d.components {
            prop_assert!(is_s_primary(&c.ideal, &s)?.holds);
        }
        prop_assert_eq!(intersect_all(&r, d.component_ideals().iter())?, i.clone());
        prop_assert!(is_minimal_decomposition(&d));
        prop_assert!(d.assembly_identity_holds()?);
        if s.is_units_only() {
            prop_assert_eq!(d.component_ideals(), primary_decomposition(&i)?.component_ideals());
        }
    }
}

/// Fast lattice operations agree with the bitset model on every ideal pair.
#[test]
fn finite_operations_match_enumeration() {
    let rings = [
        RingDescriptor::modular(36).unwrap(),
        RingDescriptor::modular(60).unwrap(),
        RingDescriptor::product(&[2, 4]).unwrap(),
        RingDescriptor::product(&[2, 3, 4]).unwrap(),
    ];
    for r in rings {
        let u = build_universe(&r, &[], 4096).unwrap();
        let ideals = u.all_ideals.clone();
        for (a, ia) in ideals.iter().enumerate() {
            assert_eq!(u.radical(a), u.ideal_index(&radical(ia)), "{r}: rad {ia}");
            assert_eq!(u.is_prime(a), is_prime_ideal(ia), "{r}: prime {ia}");
            assert_eq!(u.is_primary(a), is_primary_ideal(ia), "{r}: primary {ia}");
            for (b, ib) in ideals.iter().enumerate() {
                assert_eq!(u.meet(a, b), u.ideal_index(&ideal_intersection(ia, ib).unwrap()));
                assert_eq!(u.sum(a, b), u.ideal_index(&ideal_sum(ia, ib).unwrap()));
                assert_eq!(u.subset(a, b), ia.is_subset_of(ib));
            }
            for x in 0..u.size() {
                let e = &u.all_elements[x];
                assert_eq!(u.colon_element(a, x), u.ideal_index(&ideal_colon_element(ia, e).unwrap()));
            }
        }
    }
}
