//! Brute force over fully enumerated finite rings.
//!
//! Everything here works from the multiplication table and explicit member
//! sets; nothing calls the saturation machinery, so agreement with the fast
//! procedures is a real cross-check.

mod sweep;

pub use sweep::{sweep, Counterexample, SweepReport, Theorem};

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::{Mutex, OnceLock};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::multiplicative::MultiplicativeSet;
use crate::ring::{Ideal, RingDescriptor, RingElement};

/// Which multiplicative sets a universe carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MultSetPolicy {
    /// `{1, a, a², …}` for every non-nilpotent `a`, deduplicated.
    GeneratedByOne,
    UnitGroup,
    /// Every multiplicatively closed subset containing 1 and not 0. Only for
    /// rings with at most [`ALL_SUBSETS_LIMIT`] elements.
    AllClosedSubsets,
}

pub const ALL_SUBSETS_LIMIT: usize = 16;

/// Lazily computed per-ideal data.
struct IdealTables {
    /// `absorb[u] = {a : u·a ∈ Q}`.
    absorb: Vec<FixedBitSet>,
    /// Distinct rows of `absorb` with the elements producing them.
    classes: Vec<(FixedBitSet, FixedBitSet)>,
    /// `good[u]` = ideals `J` (by index) with `u·J ⊆ Q`.
    good: Vec<FixedBitSet>,
}

pub struct FiniteUniverse {
    pub ring: RingDescriptor,
    pub all_elements: Vec<RingElement>,
    pub all_ideals: Vec<Ideal>,
    pub candidate_mult_sets: Vec<MultiplicativeSet>,
    mul: Vec<u32>,
    members: Vec<FixedBitSet>,
    generators: Vec<usize>,
    by_members: HashMap<FixedBitSet, usize>,
    by_ideal: HashMap<Ideal, usize>,
    set_members: Vec<Vec<usize>>,
    set_bits: Vec<FixedBitSet>,
    radicals: Vec<OnceLock<usize>>,
    primes: Vec<OnceLock<bool>>,
    primaries: Vec<OnceLock<bool>>,
    tables: Vec<OnceLock<IdealTables>>,
    saturations: Mutex<HashMap<(usize, usize), usize>>,
}

/// Builds the universe of a finite ring. `max_elements` bounds the ring size.
pub fn build_universe(
    ring: &RingDescriptor,
    policies: &[MultSetPolicy],
    max_elements: usize,
) -> Result<FiniteUniverse> {
    let n = ring
        .size()
        .ok_or_else(|| Error::UnsupportedEnumeration(format!("{ring} is infinite")))?
        as usize;
    if n > max_elements {
        return Err(Error::CapExceeded {
            what: format!("elements of {ring}"),
            needed: n.to_string(),
            cap: max_elements,
        });
    }
    let elements = ring.elements().expect("finite ring");
    for (k, e) in elements.iter().enumerate() {
        debug_assert_eq!(e.index(), Some(k));
    }
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in a..n {
            let p = elements[a].mul(&elements[b]).index().expect("finite") as u32;
            mul[a * n + b] = p;
            mul[b * n + a] = p;
        }
    }
    let ideals = Ideal::zero(ring).divisor_ideals()?;
    let mut u = FiniteUniverse {
        ring: ring.clone(),
        all_elements: elements,
        all_ideals: Vec::new(),
        candidate_mult_sets: Vec::new(),
        mul,
        members: Vec::new(),
        generators: Vec::new(),
        by_members: HashMap::new(),
        by_ideal: HashMap::new(),
        set_members: Vec::new(),
        set_bits: Vec::new(),
        radicals: Vec::new(),
        primes: Vec::new(),
        primaries: Vec::new(),
        tables: Vec::new(),
        saturations: Mutex::new(HashMap::new()),
    };
    for (k, ideal) in ideals.iter().enumerate() {
        let g = ideal.generator_element().index().expect("finite");
        let bits = u.principal_members(g);
        if u.by_members.insert(bits.clone(), k).is_some() {
            return Err(Error::contract(format!("duplicate ideal {ideal} in {ring}")));
        }
        u.by_ideal.insert(ideal.clone(), k);
        u.members.push(bits);
        u.generators.push(g);
    }
    // Every principal ideal must be listed; all catalog rings are principal.
    for x in 0..n {
        if !u.by_members.contains_key(&u.principal_members(x)) {
            return Err(Error::contract(format!(
                "ideal ({}) missing from the enumeration of {ring}",
                u.all_elements[x]
            )));
        }
    }
    let m = ideals.len();
    u.all_ideals = ideals;
    u.radicals = (0..m).map(|_| OnceLock::new()).collect();
    u.primes = (0..m).map(|_| OnceLock::new()).collect();
    u.primaries = (0..m).map(|_| OnceLock::new()).collect();
    u.tables = (0..m).map(|_| OnceLock::new()).collect();

    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for policy in policies {
        let candidates: Vec<(Vec<usize>, MultiplicativeSet)> = match policy {
            MultSetPolicy::UnitGroup => {
                let mem: Vec<usize> = (0..n).filter(|&x| u.is_unit_brute(x)).collect();
                vec![(mem, MultiplicativeSet::units(ring))]
            }
            MultSetPolicy::GeneratedByOne => {
                let mut out = Vec::new();
                for a in 0..n {
                    let closure = u.closure(&[a]);
                    if closure.contains(&0) {
                        continue;
                    }
                    let set = MultiplicativeSet::generated_by(ring, &[u.all_elements[a].clone()])?;
                    out.push((closure, set));
                }
                out
            }
            MultSetPolicy::AllClosedSubsets => {
                if n > ALL_SUBSETS_LIMIT {
                    return Err(Error::CapExceeded {
                        what: format!("closed subsets of {ring}"),
                        needed: n.to_string(),
                        cap: ALL_SUBSETS_LIMIT,
                    });
                }
                let mut out = Vec::new();
                for mem in u.all_closed_subsets() {
                    let elts: Vec<RingElement> =
                        mem.iter().map(|&x| u.all_elements[x].clone()).collect();
                    out.push((mem, MultiplicativeSet::explicit(ring, &elts)?));
                }
                out
            }
        };
        for (mem, set) in candidates {
            if seen.insert(mem.clone()) {
                u.push_set(mem, set);
            }
        }
    }
    Ok(u)
}

impl FiniteUniverse {
    pub fn size(&self) -> usize {
        self.all_elements.len()
    }

    #[inline]
    pub(crate) fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b] as usize
    }

    fn principal_members(&self, g: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.size());
        for r in 0..self.size() {
            bits.insert(self.mul(r, g));
        }
        bits
    }

    fn is_unit_brute(&self, x: usize) -> bool {
        let one = self.ring.one().index().expect("finite");
        (0..self.size()).any(|y| self.mul(x, y) == one)
    }

    /// Multiplicative closure of `gens ∪ {1}`, sorted.
    fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let one = self.ring.one().index().expect("finite");
        let mut bits = FixedBitSet::with_capacity(self.size());
        bits.insert(one);
        let mut queue: VecDeque<usize> = VecDeque::from([one]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !bits.put(y) {
                    queue.push_back(y);
                }
            }
        }
        bits.ones().collect()
    }

    fn all_closed_subsets(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let start = self.closure(&[]);
        let mut queue = VecDeque::from([start.clone()]);
        found.insert(start);
        while let Some(set) = queue.pop_front() {
            for x in 1..n {
                if set.contains(&x) {
                    continue;
                }
                let mut gens = set.clone();
                gens.push(x);
                let next = self.closure(&gens);
                if next.contains(&0) {
                    continue;
                }
                if found.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        found.into_iter().collect()
    }

    fn push_set(&mut self, mem: Vec<usize>, set: MultiplicativeSet) {
        let mut bits = FixedBitSet::with_capacity(self.size());
        bits.extend(mem.iter().copied());
        self.set_members.push(mem);
        self.set_bits.push(bits);
        self.candidate_mult_sets.push(set);
    }

    /// Adds an outside set; its members come from the set itself and are
    /// checked for closure here. Returns its index.
    pub fn add_set(&mut self, set: &MultiplicativeSet) -> Result<usize> {
        set.ring().ensure_same(&self.ring)?;
        let mem: Vec<usize> = (0..self.size())
            .filter(|&x| set.contains(&self.all_elements[x]))
            .collect();
        let closed = mem
            .iter()
            .all(|&a| mem.iter().all(|&b| mem.binary_search(&self.mul(a, b)).is_ok()));
        let one = self.ring.one().index().expect("finite");
        if !closed || mem.binary_search(&one).is_err() || mem.first() == Some(&0) {
            return Err(Error::InvalidMultiplicativeSet(format!(
                "{set} is not multiplicatively closed in {}",
                self.ring
            )));
        }
        self.push_set(mem, set.clone());
        Ok(self.set_members.len() - 1)
    }

    pub fn set_members(&self, si: usize) -> &[usize] {
        &self.set_members[si]
    }

    pub fn ideal_index(&self, i: &Ideal) -> usize {
        self.by_ideal[i]
    }

    pub fn ideal_members(&self, k: usize) -> &FixedBitSet {
        &self.members[k]
    }

    /// The ideal with exactly these members, if any.
    pub fn ideal_of(&self, bits: &FixedBitSet) -> Option<usize> {
        self.by_members.get(bits).copied()
    }

    fn ideal_of_checked(&self, bits: &FixedBitSet, what: &str) -> usize {
        self.ideal_of(bits)
            .unwrap_or_else(|| panic!("{what} is not an ideal of {}", self.ring))
    }

    pub fn contains(&self, k: usize, x: usize) -> bool {
        self.members[k].contains(x)
    }

    pub fn subset(&self, a: usize, b: usize) -> bool {
        self.members[a].is_subset(&self.members[b])
    }

    pub fn is_proper(&self, k: usize) -> bool {
        !self.contains(k, self.ring.one().index().expect("finite"))
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        let mut bits = self.members[a].clone();
        bits.intersect_with(&self.members[b]);
        self.ideal_of_checked(&bits, "an intersection")
    }

    pub fn meet_all(&self, ks: &[usize]) -> usize {
        let mut bits = FixedBitSet::with_capacity(self.size());
        bits.insert_range(..);
        for &k in ks {
            bits.intersect_with(&self.members[k]);
        }
        self.ideal_of_checked(&bits, "an intersection")
    }

    /// Smallest listed ideal containing both.
    pub fn sum(&self, a: usize, b: usize) -> usize {
        let mut bits = self.members[a].clone();
        bits.union_with(&self.members[b]);
        let mut acc = FixedBitSet::with_capacity(self.size());
        acc.insert_range(..);
        for m in &self.members {
            if bits.is_subset(m) {
                acc.intersect_with(m);
            }
        }
        self.ideal_of_checked(&acc, "a sum")
    }

    /// Ideal generated by one element.
    pub fn principal(&self, x: usize) -> usize {
        self.ideal_of_checked(&self.principal_members(x), "a principal ideal")
    }

    /// `{a : x·a ∈ I}`.
    pub fn colon_element(&self, k: usize, x: usize) -> usize {
        let bits = self.absorb_row(k, x);
        self.ideal_of_checked(&bits, "a colon")
    }

    fn absorb_row(&self, k: usize, u: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.size());
        for a in 0..self.size() {
            if self.contains(k, self.mul(u, a)) {
                bits.insert(a);
            }
        }
        bits
    }

    pub fn radical(&self, k: usize) -> usize {
        *self.radicals[k].get_or_init(|| {
            let n = self.size();
            let mut bits = FixedBitSet::with_capacity(n);
            for a in 0..n {
                let mut x = a;
                for _ in 0..n {
                    if self.contains(k, x) {
                        bits.insert(a);
                        break;
                    }
                    x = self.mul(x, a);
                }
            }
            self.ideal_of_checked(&bits, "a radical")
        })
    }

    pub fn is_prime(&self, k: usize) -> bool {
        *self.primes[k].get_or_init(|| {
            let n = self.size();
            self.is_proper(k)
                && (0..n).all(|a| {
                    self.contains(k, a) || (0..n).all(|b| self.contains(k, b) || !self.contains(k, self.mul(a, b)))
                })
        })
    }

    pub fn is_primary(&self, k: usize) -> bool {
        *self.primaries[k].get_or_init(|| {
            let n = self.size();
            let r = self.radical(k);
            self.is_proper(k)
                && (0..n).all(|a| {
                    self.contains(k, a)
                        || (0..n).all(|b| self.contains(r, b) || !self.contains(k, self.mul(a, b)))
                })
        })
    }

    /// Primes minimal under inclusion.
    pub fn minimal_primes(&self) -> Vec<usize> {
        let primes: Vec<usize> = (0..self.all_ideals.len()).filter(|&k| self.is_prime(k)).collect();
        primes
            .iter()
            .copied()
            .filter(|&p| !primes.iter().any(|&q| q != p && self.subset(q, p)))
            .collect()
    }

    fn tables(&self, k: usize) -> &IdealTables {
        self.tables[k].get_or_init(|| {
            let n = self.size();
            let absorb: Vec<FixedBitSet> = (0..n).map(|u| self.absorb_row(k, u)).collect();
            let mut index: HashMap<&FixedBitSet, usize> = HashMap::new();
            let mut classes: Vec<(FixedBitSet, FixedBitSet)> = Vec::new();
            for (a, row) in absorb.iter().enumerate() {
                let c = *index.entry(row).or_insert_with(|| {
                    classes.push((row.clone(), FixedBitSet::with_capacity(n)));
                    classes.len() - 1
                });
                classes[c].1.insert(a);
            }
            let m = self.all_ideals.len();
            let good = (0..n)
                .map(|u| {
                    let mut bits = FixedBitSet::with_capacity(m);
                    for j in 0..m {
                        if self.contains(k, self.mul(u, self.generators[j])) {
                            bits.insert(j);
                        }
                    }
                    bits
                })
                .collect();
            IdealTables {
                absorb,
                classes,
                good,
            }
        })
    }

    /// `s·J ⊆ Q`.
    pub fn pushes_into(&self, s: usize, j: usize, q: usize) -> bool {
        self.contains(q, self.mul(s, self.generators[j]))
    }

    pub fn disjoint(&self, k: usize, si: usize) -> bool {
        self.members[k].is_disjoint(&self.set_bits[si])
    }

    pub fn in_set(&self, si: usize, x: usize) -> bool {
        self.set_bits[si].contains(x)
    }

    /// `{a : s·a ∈ I for some s ∈ S}`.
    pub fn saturation(&self, k: usize, si: usize) -> usize {
        if let Some(&v) = self.saturations.lock().expect("poisoned").get(&(k, si)) {
            return v;
        }
        let t = self.tables(k);
        let mut bits = FixedBitSet::with_capacity(self.size());
        for &s in &self.set_members[si] {
            bits.union_with(&t.absorb[s]);
        }
        let v = self.ideal_of_checked(&bits, "a saturation");
        self.saturations.lock().expect("poisoned").insert((k, si), v);
        v
    }

    /// `s·a ∈ Q` or `s·b ∈ target` whenever `ab ∈ Q`, for this one `s`.
    /// `target` is `Q` for the prime condition and `rad Q` for the primary one.
    pub fn witness_works(&self, q: usize, s: usize, prime: bool) -> bool {
        let target = if prime { q } else { self.radical(q) };
        let tq = self.tables(q);
        let tt = self.tables(target);
        tq.classes
            .iter()
            .all(|(b_set, a_set)| a_set.is_subset(&tq.absorb[s]) || b_set.is_subset(&tt.absorb[s]))
    }

    /// Definition-literal S-prime test: `Q ∩ S = ∅` and one `s` serves all
    /// pairs `(a, b)`.
    pub fn brute_is_s_prime(&self, q: usize, si: usize) -> bool {
        self.disjoint(q, si) && self.set_members[si].iter().any(|&s| self.witness_works(q, s, true))
    }

    pub fn brute_is_s_primary(&self, q: usize, si: usize) -> bool {
        self.disjoint(q, si) && self.set_members[si].iter().any(|&s| self.witness_works(q, s, false))
    }

    /// Definition-literal S-irreducibility: `Q ∩ S = ∅`, and whenever
    /// `s(I ∩ J) ⊆ Q ⊆ I ∩ J` some `s'` gives `ss'I ⊆ Q` or `ss'J ⊆ Q`.
    pub fn brute_is_s_irreducible(&self, q: usize, si: usize) -> bool {
        if !self.disjoint(q, si) {
            return false;
        }
        let t = self.tables(q);
        let m = self.all_ideals.len();
        let over: Vec<usize> = (0..m).filter(|&i| self.subset(q, i)).collect();
        let mems = &self.set_members[si];
        for &s in mems {
            let mut reach = FixedBitSet::with_capacity(m);
            for &s2 in mems {
                reach.union_with(&t.good[self.mul(s, s2)]);
            }
            for (a, &i) in over.iter().enumerate() {
                if reach.contains(i) {
                    continue;
                }
                for &j in &over[a..] {
                    if reach.contains(j) {
                        continue;
                    }
                    if t.good[s].contains(self.meet(i, j)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `s·x ∈ P` with `s ∈ S` forces `x ∈ P`.
    pub fn zero_divisor_free(&self, p: usize, si: usize) -> bool {
        let t = self.tables(p);
        self.set_members[si].iter().all(|&s| t.absorb[s] == self.members[p])
    }

    /// All minimal S-primary decompositions of `I` as sorted index lists,
    /// at most `cap` of them; the flag reports truncation.
    pub fn minimal_decompositions(&self, i: usize, si: usize, cap: usize) -> (Vec<Vec<usize>>, bool) {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for q in 0..self.all_ideals.len() {
            if self.subset(i, q) && self.brute_is_s_primary(q, si) {
                groups.entry(self.saturation(self.radical(q), si)).or_default().push(q);
            }
        }
        let groups: Vec<Vec<usize>> = groups.into_values().collect();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        let truncated = self.choose(i, si, &groups, 0, &mut chosen, &mut out, cap);
        for d in &mut out {
            d.sort();
        }
        out.sort();
        (out, truncated)
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &self,
        i: usize,
        si: usize,
        groups: &[Vec<usize>],
        at: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> bool {
        if at == groups.len() {
            if !chosen.is_empty() && self.meet_all(chosen) == i && self.is_minimal(chosen, si) {
                if out.len() >= cap {
                    return true;
                }
                out.push(chosen.clone());
            }
            return false;
        }
        if self.choose(i, si, groups, at + 1, chosen, out, cap) {
            return true;
        }
        for &q in &groups[at] {
            chosen.push(q);
            let stop = self.choose(i, si, groups, at + 1, chosen, out, cap);
            chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }

    /// Distinct saturated radicals and no `S(Q_i) ⊇ ⋂_{j≠i} S(Q_j)`.
    pub fn is_minimal(&self, comps: &[usize], si: usize) -> bool {
        let keys: BTreeSet<usize> = comps
            .iter()
            .map(|&q| self.saturation(self.radical(q), si))
            .collect();
        if keys.len() != comps.len() {
            return false;
        }
        let sats: Vec<usize> = comps.iter().map(|&q| self.saturation(q, si)).collect();
        (0..comps.len()).all(|a| {
            let others: Vec<usize> = (0..comps.len()).filter(|&b| b != a).map(|b| sats[b]).collect();
            !self.subset(self.meet_all(&others), sats[a])
        })
    }

    /// Index list of the components whose primes are isolated.
    pub fn isolated(&self, comps: &[usize], si: usize) -> Vec<usize> {
        let rads: Vec<usize> = comps.iter().map(|&q| self.radical(q)).collect();
        (0..comps.len())
            .filter(|&a| {
                let sat = self.saturation(rads[a], si);
                (0..comps.len()).all(|b| b == a || !self.subset(rads[b], sat))
            })
            .collect()
    }

    pub fn element_index(&self, x: &RingElement) -> usize {
        x.index().expect("element of a finite ring")
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn universe(r: RingDescriptor, policies: &[MultSetPolicy]) -> FiniteUniverse {
        build_universe(&r, policies, 4096).unwrap()
    }

    #[test]
    fn sizes() {
        let u = universe(RingDescriptor::modular(12).unwrap(), &[]);
        assert_eq!((u.size(), u.all_ideals.len()), (12, 6));
        let u = universe(RingDescriptor::boolean(2).unwrap(), &[]);
        assert_eq!((u.size(), u.all_ideals.len()), (4, 4));
        let u = universe(RingDescriptor::boolean(3).unwrap(), &[]);
        assert_eq!((u.size(), u.all_ideals.len()), (8, 8));
        assert!(build_universe(&RingDescriptor::modular(5000).unwrap(), &[], 4096).is_err());
        assert!(build_universe(&RingDescriptor::integers(), &[], 4096).is_err());
    }

    #[test]
    fn set_policies() {
        let r = RingDescriptor::modular(12).unwrap();
        let u = universe(r.clone(), &[MultSetPolicy::UnitGroup]);
        assert_eq!(u.set_members(0), [1, 5, 7, 11]);
        let u = universe(r, &[MultSetPolicy::GeneratedByOne]);
        // Non-nilpotent generators give {1}, {1,5}, {1,7}, {1,11}, {1,3,9},
        // {1,4}, {1,8,4}, {1,9}; (1,2)… meet 0 and are dropped.
        assert!(u.set_members.iter().all(|m| !m.contains(&0)));
        assert!(u.set_members.contains(&vec![1, 4]));
        assert!(u.set_members.contains(&vec![1, 3, 9]));
        let b = universe(RingDescriptor::boolean(2).unwrap(), &[MultSetPolicy::AllClosedSubsets]);
        // {1}, {1,e1}, {1,e2}: {1,e1,e2} contains 0.
        assert_eq!(b.candidate_mult_sets.len(), 3);
        assert!(build_universe(&RingDescriptor::modular(17).unwrap(), &[MultSetPolicy::AllClosedSubsets], 4096).is_err());
    }

    #[test]
    fn brute_examples() {
        let r = RingDescriptor::boolean(3).unwrap();
        let mut u = universe(r.clone(), &[]);
        let e = r.tuple(&[1, 0, 0]).unwrap();
        let s = MultiplicativeSet::explicit(&r, &[r.one(), e]).unwrap();
        let si = u.add_set(&s).unwrap();
        let zero = u.ideal_index(&Ideal::zero(&r));
        assert!(u.brute_is_s_primary(zero, si));
        assert!(u.brute_is_s_prime(zero, si) == u.is_prime(u.saturation(zero, si)));

        let r = RingDescriptor::modular(12).unwrap();
        let mut u = universe(r.clone(), &[]);
        let one = u.add_set(&MultiplicativeSet::explicit(&r, &[r.one()]).unwrap()).unwrap();
        let i4 = u.ideal_index(&Ideal::principal(&r.from_i64(4)));
        let i6 = u.ideal_index(&Ideal::principal(&r.from_i64(6)));
        assert!(u.brute_is_s_primary(i4, one));
        assert!(!u.brute_is_s_primary(i6, one));

        let r = RingDescriptor::modular(36).unwrap();
        let mut u = universe(r.clone(), &[]);
        let one = u.add_set(&MultiplicativeSet::explicit(&r, &[r.one()]).unwrap()).unwrap();
        let not3: Vec<RingElement> = (0..36).filter(|v| v % 3 != 0).map(|v| r.from_i64(v)).collect();
        let image = u.add_set(&MultiplicativeSet::explicit(&r, &not3).unwrap()).unwrap();
        let i6 = u.ideal_index(&Ideal::principal(&r.from_i64(6)));
        assert!(!u.brute_is_s_irreducible(i6, one));
        assert!(u.brute_is_s_irreducible(i6, image));
        assert!(!u.brute_is_s_prime(i6, one));
        assert!(u.brute_is_s_prime(i6, image));
        let i2 = u.ideal_index(&Ideal::principal(&r.from_i64(2)));
        assert!(u.brute_is_s_irreducible(i2, one));
    }
}
