use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::FiniteUniverse;
use crate::classify::{is_s_irreducible, is_s_primary, is_s_prime};
use crate::decompose::{
    associated_s_primes, cross_with_meeting_ideal, first_uniqueness_report,
    intersect_same_prime_components, is_minimal_decomposition, minimalize, primary_decomposition,
    restrict_decomposition, s_primary_decomposition, second_uniqueness_check, theorem_min_check,
    Decomposition,
};
use crate::error::{Error, Result};
use crate::multiplicative::{saturate, Caps, MultiplicativeSet};
use crate::ring::{radical, Ideal};

/// Enumerated minimal decompositions per instance.
pub const DECOMPOSITION_CAP: usize = 256;
/// Enumerated decompositions that are also rebuilt through the fast path.
const FAST_REBUILDS: usize = 8;
/// Larger sets tried per set in the restriction sweep.
const SUPERSETS_PER_SET: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Fast predicates, saturation and radical against brute force.
    Equivalence,
    /// S-irreducible implies S-primary.
    Sp,
    /// Decompositions exist, recompose, and minimalize.
    Existence,
    /// `(I : s) ∩ (I + Rs) = I` for the returned `s`.
    Assembly,
    /// With `S` the units, S-primary and classical decompositions agree.
    Degeneration,
    FirstUniqueness,
    SecondUniqueness,
    /// Minimal primes of `R` among the radicals of a decomposition of `(0)`.
    Min,
    /// Intersections of S-primary ideals with a common saturated radical,
    /// and of a primary ideal with an ideal meeting `S`.
    Intersections,
    /// Restriction to a larger multiplicative set.
    Restriction,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::Equivalence,
        Theorem::Sp,
        Theorem::Existence,
        Theorem::Assembly,
        Theorem::Degeneration,
        Theorem::FirstUniqueness,
        Theorem::SecondUniqueness,
        Theorem::Min,
        Theorem::Intersections,
        Theorem::Restriction,
    ];
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string tag"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub ideal: String,
    pub mult_set: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub universe: String,
    pub theorem: Theorem,
    pub instances: u64,
    /// Instances outside the hypothesis; reported, not checked.
    pub skipped: u64,
    /// Instances whose decomposition enumeration hit the cap.
    pub truncated: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Default)]
struct Partial {
    instances: u64,
    skipped: u64,
    truncated: u64,
    found: Vec<Counterexample>,
}

struct Cx<'a> {
    u: &'a FiniteUniverse,
    si: usize,
    out: Partial,
}

impl<'a> Cx<'a> {
    fn set(&self) -> &'a MultiplicativeSet {
        &self.u.candidate_mult_sets[self.si]
    }

    fn ideal(&self, k: usize) -> &'a Ideal {
        &self.u.all_ideals[k]
    }

    fn fail(&mut self, k: usize, detail: impl Into<String>) {
        self.out.found.push(Counterexample {
            ideal: self.u.all_ideals[k].to_string(),
            mult_set: self.set().to_string(),
            detail: detail.into(),
        });
    }

    /// Records a fast-path error as a counterexample.
    fn ok<T>(&mut self, k: usize, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(k, format!("{what}: {e}"));
                None
            }
        }
    }

    fn idx(&self, i: &Ideal) -> usize {
        self.u.ideal_index(i)
    }

    fn comps(&self, d: &Decomposition) -> Vec<usize> {
        d.components.iter().map(|c| self.idx(&c.ideal)).collect()
    }

    fn key(&self, q: usize) -> usize {
        self.u.saturation(self.u.radical(q), self.si)
    }

    fn proper_disjoint(&self, k: usize) -> bool {
        self.u.is_proper(k) && self.u.disjoint(k, self.si)
    }
}

/// Evaluates `theorem` over every (ideal, set) pair of the universe.
pub fn sweep(u: &FiniteUniverse, theorem: Theorem) -> SweepReport {
    let start = Instant::now();
    let parts: Vec<Partial> = if theorem == Theorem::Degeneration {
        vec![degeneration(u)]
    } else {
        (0..u.candidate_mult_sets.len())
            .into_par_iter()
            .map(|si| {
                let mut cx = Cx {
                    u,
                    si,
                    out: Partial::default(),
                };
                match theorem {
                    Theorem::Equivalence => equivalence(&mut cx),
                    Theorem::Sp => sp(&mut cx),
                    Theorem::Existence => existence(&mut cx, false),
                    Theorem::Assembly => existence(&mut cx, true),
                    Theorem::FirstUniqueness => uniqueness(&mut cx, true),
                    Theorem::SecondUniqueness => uniqueness(&mut cx, false),
                    Theorem::Min => min(&mut cx),
                    Theorem::Intersections => intersections(&mut cx),
                    Theorem::Restriction => restriction(&mut cx),
                    Theorem::Degeneration => unreachable!(),
                }
                cx.out
            })
            .collect()
    };
    let mut report = SweepReport {
        universe: u.ring.to_string(),
        theorem,
        instances: 0,
        skipped: 0,
        truncated: 0,
        counterexamples: Vec::new(),
        elapsed_ms: 0,
    };
    for p in parts {
        report.instances += p.instances;
        report.skipped += p.skipped;
        report.truncated += p.truncated;
        report.counterexamples.extend(p.found);
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

fn equivalence(cx: &mut Cx) {
    let u = cx.u;
    let si = cx.si;
    let s = cx.set();
    for q in 0..u.all_ideals.len() {
        cx.out.instances += 1;
        let qi = cx.ideal(q);
        if let Some(v) = cx.ok(q, "is_s_prime", is_s_prime(qi, s)) {
            if v.holds != u.brute_is_s_prime(q, si) {
                cx.fail(q, format!("is_s_prime says {}", v.holds));
            }
            if let Some(w) = v.witness {
                let w = u.element_index(&w.witness);
                if !u.in_set(si, w) || !u.witness_works(q, w, true) {
                    cx.fail(q, "S-prime witness fails the definition");
                }
            }
        }
        if let Some(v) = cx.ok(q, "is_s_primary", is_s_primary(qi, s)) {
            if v.holds != u.brute_is_s_primary(q, si) {
                cx.fail(q, format!("is_s_primary says {}", v.holds));
            }
            if let Some(w) = v.witness {
                let w = u.element_index(&w.witness);
                if !u.in_set(si, w) || !u.witness_works(q, w, false) {
                    cx.fail(q, "S-primary witness fails the definition");
                }
            }
        }
        if let Some(v) = cx.ok(q, "is_s_irreducible", is_s_irreducible(qi, s)) {
            if v.holds != u.brute_is_s_irreducible(q, si) {
                cx.fail(q, format!("is_s_irreducible says {}", v.holds));
            }
            if let Some(c) = v.counterexample {
                let (k, i, j) = (cx.idx(&c.k), cx.idx(&c.i), cx.idx(&c.j));
                let s_idx = u.element_index(&c.s);
                let sat = u.saturation(q, si);
                let valid = u.meet(i, j) == k
                    && u.subset(q, k)
                    && !u.subset(i, sat)
                    && !u.subset(j, sat)
                    && u.in_set(si, s_idx)
                    && u.pushes_into(s_idx, k, q);
                if !valid {
                    cx.fail(q, "S-irreducibility counterexample is invalid");
                }
            }
        }
        if let Some((sat, _)) = cx.ok(q, "saturate", saturate(s, qi)) {
            if cx.idx(&sat) != u.saturation(q, si) {
                cx.fail(q, format!("saturation {sat} disagrees"));
            }
        }
        if cx.idx(&radical(qi)) != u.radical(q) {
            cx.fail(q, "radical disagrees");
        }
    }
}

fn sp(cx: &mut Cx) {
    let u = cx.u;
    for q in 0..u.all_ideals.len() {
        if !cx.proper_disjoint(q) {
            continue;
        }
        cx.out.instances += 1;
        if u.brute_is_s_irreducible(q, cx.si) && !u.brute_is_s_primary(q, cx.si) {
            cx.fail(q, "S-irreducible but not S-primary");
        }
        let (qi, s) = (cx.ideal(q), cx.set());
        let irr = cx.ok(q, "is_s_irreducible", is_s_irreducible(qi, s));
        let pri = cx.ok(q, "is_s_primary", is_s_primary(qi, s));
        if let (Some(irr), Some(pri)) = (irr, pri) {
            if irr.holds && !pri.holds {
                cx.fail(q, "fast: S-irreducible but not S-primary");
            }
        }
    }
}

fn existence(cx: &mut Cx, assembly: bool) {
    let u = cx.u;
    for i in 0..u.all_ideals.len() {
        let (ii, s) = (cx.ideal(i), cx.set());
        if !u.is_proper(i) {
            continue;
        }
        if !u.disjoint(i, cx.si) {
            if !matches!(s_primary_decomposition(ii, s), Err(Error::NotDisjoint { .. })) {
                cx.fail(i, "meets S but was not rejected");
            }
            continue;
        }
        cx.out.instances += 1;
        let Some(dec) = cx.ok(i, "s_primary_decomposition", s_primary_decomposition(ii, s)) else {
            continue;
        };
        let comps = cx.comps(&dec);
        if assembly {
            let w = u.element_index(&dec.assembly_witness.witness);
            let lhs = u.meet(u.colon_element(i, w), u.sum(i, u.principal(w)));
            if !u.in_set(cx.si, w) || lhs != i {
                cx.fail(i, format!("assembly identity fails for s = {}", dec.assembly_witness.witness));
            }
            continue;
        }
        if let Some(&bad) = comps.iter().find(|&&q| !u.brute_is_s_primary(q, cx.si)) {
            cx.fail(i, format!("component {} is not S-primary", u.all_ideals[bad]));
        }
        if u.meet_all(&comps) != i {
            cx.fail(i, "components do not recompose");
        }
        if !u.is_minimal(&comps, cx.si) {
            cx.fail(i, "construction is not minimal");
        }
        if let Some(m) = cx.ok(i, "minimalize", minimalize(&dec)) {
            let mc = cx.comps(&m);
            if !is_minimal_decomposition(&m) || !u.is_minimal(&mc, cx.si) || u.meet_all(&mc) != i {
                cx.fail(i, "minimalize output is not a minimal decomposition");
            }
        }
    }
}

fn degeneration(u: &FiniteUniverse) -> Partial {
    let mut out = Partial::default();
    let units = MultiplicativeSet::units(&u.ring);
    for i in 0..u.all_ideals.len() {
        if !u.is_proper(i) {
            continue;
        }
        out.instances += 1;
        let ii = &u.all_ideals[i];
        let got = s_primary_decomposition(ii, &units).map(|d| d.component_ideals());
        let want = primary_decomposition(ii).map(|d| d.component_ideals());
        let brute_ok = want.as_ref().is_ok_and(|w| {
            let idx: Vec<usize> = w.iter().map(|c| u.ideal_index(c)).collect();
            idx.iter().all(|&q| u.is_primary(q)) && u.meet_all(&idx) == i
        });
        if got != want || !brute_ok {
            out.found.push(Counterexample {
                ideal: ii.to_string(),
                mult_set: units.to_string(),
                detail: format!("{got:?} vs {want:?}"),
            });
        }
    }
    out
}

fn uniqueness(cx: &mut Cx, first: bool) {
    let u = cx.u;
    let si = cx.si;
    for i in 0..u.all_ideals.len() {
        if !cx.proper_disjoint(i) {
            continue;
        }
        cx.out.instances += 1;
        let (decs, truncated) = u.minimal_decompositions(i, si, DECOMPOSITION_CAP);
        if truncated {
            cx.out.truncated += 1;
        }
        if decs.is_empty() {
            cx.fail(i, "no minimal decomposition found");
            continue;
        }
        let (ii, s) = (cx.ideal(i), cx.set());
        let Some(cons) = cx.ok(i, "s_primary_decomposition", s_primary_decomposition(ii, s)) else {
            continue;
        };
        let mut cons_idx = cx.comps(&cons);
        cons_idx.sort();
        if !truncated && !decs.contains(&cons_idx) {
            cx.fail(i, "construction missing from the enumeration");
        }
        let rebuilt: Vec<Decomposition> = decs
            .iter()
            .take(FAST_REBUILDS)
            .filter_map(|d| {
                let ideals: Vec<Ideal> = d.iter().map(|&q| u.all_ideals[q].clone()).collect();
                cx.ok(i, "from_components", Decomposition::from_components(ii, s, &ideals, None))
            })
            .collect();
        if rebuilt.iter().any(|d| !d.minimal) {
            cx.fail(i, "enumerated decomposition judged non-minimal");
        }
        if first {
            let primes: BTreeSet<usize> = (0..u.size())
                .map(|x| u.saturation(u.radical(u.colon_element(i, x)), si))
                .filter(|&p| u.is_prime(p))
                .collect();
            for d in &decs {
                let assoc: BTreeSet<usize> = d.iter().map(|&q| cx.key(q)).collect();
                if assoc != primes {
                    cx.fail(i, format!("associated primes of {d:?} differ"));
                }
            }
            for d in rebuilt.iter().chain(std::iter::once(&cons)) {
                if let Some(a) = cx.ok(i, "associated_s_primes", associated_s_primes(d)) {
                    let a: BTreeSet<usize> = a.iter().map(|p| cx.idx(p)).collect();
                    if a != primes {
                        cx.fail(i, "fast associated primes differ");
                    }
                }
            }
            let report = first_uniqueness_report(ii, s, &cons, Caps::default());
            if let Some(r) = cx.ok(i, "first_uniqueness_report", report) {
                if !r.agrees {
                    cx.fail(i, "first uniqueness report disagrees");
                }
            }
        } else {
            let isolated_meet = |d: &[usize]| {
                let iso: Vec<usize> = u.isolated(d, si).into_iter().map(|k| d[k]).collect();
                u.meet_all(&iso)
            };
            let reference = isolated_meet(&decs[0]);
            if decs.iter().any(|d| isolated_meet(d) != reference) {
                cx.fail(i, "isolated components intersect differently");
            }
            for d in &rebuilt {
                if let Some(same) = cx.ok(i, "second_uniqueness_check", second_uniqueness_check(&cons, d)) {
                    if !same {
                        cx.fail(i, "fast second uniqueness check fails");
                    }
                }
            }
        }
    }
}

fn min(cx: &mut Cx) {
    let u = cx.u;
    let si = cx.si;
    let zero = u.ideal_index(&Ideal::zero(&u.ring));
    let (decs, truncated) = u.minimal_decompositions(zero, si, DECOMPOSITION_CAP);
    if truncated {
        cx.out.truncated += 1;
    }
    let minimal_primes = u.minimal_primes();
    for d in &decs {
        let rads: BTreeSet<usize> = d.iter().map(|&q| u.radical(q)).collect();
        if !rads.iter().all(|&p| u.zero_divisor_free(p, si)) {
            cx.out.skipped += 1;
            continue;
        }
        cx.out.instances += 1;
        if let Some(&m) = minimal_primes.iter().find(|m| !rads.contains(m)) {
            cx.fail(zero, format!("minimal prime {} is not a radical of {d:?}", u.all_ideals[m]));
        }
    }
    let Some(cons) = cx.ok(zero, "s_primary_decomposition", s_primary_decomposition(&Ideal::zero(&u.ring), cx.set()))
    else {
        return;
    };
    if let Some(r) = cx.ok(zero, "theorem_min_check", theorem_min_check(&cons)) {
        let brute = cons
            .components
            .iter()
            .all(|c| u.zero_divisor_free(u.ideal_index(&c.radical), si));
        if r.hypothesis_holds != brute || r.conclusion_holds == Some(false) {
            cx.fail(zero, "theorem_min_check disagrees");
        }
    }
}

fn intersections(cx: &mut Cx) {
    let u = cx.u;
    let si = cx.si;
    let m = u.all_ideals.len();
    let sp: Vec<usize> = (0..m).filter(|&q| u.brute_is_s_primary(q, si)).collect();
    for (a, &q1) in sp.iter().enumerate() {
        for &q2 in &sp[a..] {
            if cx.key(q1) != cx.key(q2) {
                continue;
            }
            cx.out.instances += 1;
            let meet = u.meet(q1, q2);
            if !u.brute_is_s_primary(meet, si) || cx.key(meet) != cx.key(q1) {
                cx.fail(meet, "intersection with a common saturated radical is not S-primary");
            }
            let pair = [u.all_ideals[q1].clone(), u.all_ideals[q2].clone()];
            if let Some(got) = cx.ok(meet, "intersect_same_prime_components", intersect_same_prime_components(&pair, cx.set())) {
                if cx.idx(&got) != meet {
                    cx.fail(meet, "fast intersection differs");
                }
            }
        }
    }
    for q in 0..m {
        if !u.is_primary(q) || !u.disjoint(q, si) {
            continue;
        }
        for j in (0..m).filter(|&j| !u.disjoint(j, si)) {
            cx.out.instances += 1;
            let meet = u.meet(q, j);
            if !u.brute_is_s_primary(meet, si) || u.radical(meet) != u.meet(u.radical(q), u.radical(j)) {
                cx.fail(meet, format!("primary {} crossed with {} fails", u.all_ideals[q], u.all_ideals[j]));
            }
            let r = cross_with_meeting_ideal(&u.all_ideals[q], &u.all_ideals[j], cx.set());
            if let Some(got) = cx.ok(meet, "cross_with_meeting_ideal", r) {
                if cx.idx(&got) != meet {
                    cx.fail(meet, "fast cross differs");
                }
            }
        }
    }
}

fn restriction(cx: &mut Cx) {
    let u = cx.u;
    let si = cx.si;
    let mine = u.set_members(si);
    let larger: Vec<usize> = (0..u.candidate_mult_sets.len())
        .filter(|&sj| sj != si && mine.iter().all(|&x| u.in_set(sj, x)))
        .take(SUPERSETS_PER_SET)
        .collect();
    for i in 0..u.all_ideals.len() {
        if !cx.proper_disjoint(i) {
            continue;
        }
        let Some(dec) = cx.ok(i, "s_primary_decomposition", s_primary_decomposition(cx.ideal(i), cx.set())) else {
            continue;
        };
        for &sj in &larger {
            cx.out.instances += 1;
            let Some(r) = cx.ok(i, "restrict_decomposition", restrict_decomposition(&dec, &u.candidate_mult_sets[sj]))
            else {
                continue;
            };
            let kept: Vec<usize> = cx.comps(&dec).into_iter().filter(|&q| u.disjoint(q, sj)).collect();
            let got: Vec<usize> = r.kept.iter().map(|c| cx.idx(&c.ideal)).collect();
            let meet = u.meet_all(&kept);
            let sat = u.saturation(i, sj);
            let t = u.element_index(&r.witness.witness);
            let absorbed = u.ideal_members(sat).ones().all(|x| u.contains(meet, u.mul(t, x)));
            if got != kept || cx.idx(&r.saturation) != sat || !u.in_set(si, t) || !absorbed || !u.subset(meet, sat) {
                cx.fail(i, format!("restriction to {} fails", u.candidate_mult_sets[sj]));
            }
        }
    }
}
