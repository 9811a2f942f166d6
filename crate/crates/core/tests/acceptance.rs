//! Acceptance run: one PASS/FAIL line per criterion.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sprimary::classify::is_s_primary;
use sprimary::decompose::{
    is_minimal_decomposition, minimalize, primary_decomposition, restrict_decomposition, s_primary_decomposition,
    Decomposition,
};
use sprimary::fixtures::run_fixtures;
use sprimary::multiplicative::{restrict_contract_checks, saturate, saturate_contract_checks, MultiplicativeSet};
use sprimary::oracle::{build_universe, sweep, FiniteUniverse, MultSetPolicy, SweepReport, Theorem, ALL_SUBSETS_LIMIT};
use sprimary::ring::{intersect_all, Ideal, RingDescriptor};
use sprimary::Error;

const SEED: u64 = 0x5eed_2024;
const INTEGER_SAMPLES: usize = 500;
const INTEGER_BOUND: u64 = 1_000_000;
const MAX_MODULUS: u64 = 200;
const MAX_PRODUCT_SIZE: u64 = 64;
const FIXTURE_BUDGET: Duration = Duration::from_secs(1);
const EQUIVALENCE_BUDGET: Duration = Duration::from_secs(300);

/// Non-decreasing tuples of moduli, each at least 2, of arity at least 2
/// and product at most `bound`.
fn product_moduli(bound: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, min: u64, size: u64, bound: u64, out: &mut Vec<Vec<u64>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        for m in min..=bound / size {
            prefix.push(m);
            extend(prefix, m, size * m, bound, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 2, 1, bound, &mut out);
    out
}

fn universes() -> Vec<FiniteUniverse> {
    let mut rings: Vec<RingDescriptor> = (2..=MAX_MODULUS).map(|n| RingDescriptor::modular(n).unwrap()).collect();
    rings.extend(product_moduli(MAX_PRODUCT_SIZE).iter().map(|m| RingDescriptor::product(m).unwrap()));
    rings
        .iter()
        .map(|r| {
            let mut policies = vec![MultSetPolicy::UnitGroup, MultSetPolicy::GeneratedByOne];
            if r.size().unwrap() as usize <= ALL_SUBSETS_LIMIT {
                policies.push(MultSetPolicy::AllClosedSubsets);
            }
            build_universe(r, &policies, 4096).unwrap()
        })
        .collect()
}

#[derive(Default)]
struct Tally {
    instances: u64,
    skipped: u64,
    truncated: u64,
    counterexamples: Vec<String>,
    elapsed: Duration,
}

impl Tally {
    fn add(&mut self, r: &SweepReport, elapsed: Duration) {
        self.instances += r.instances;
        self.skipped += r.skipped;
        self.truncated += r.truncated;
        self.elapsed += elapsed;
        self.counterexamples.extend(
            r.counterexamples
                .iter()
                .map(|c| format!("{}: {} over {}: {}", r.universe, c.ideal, c.mult_set, c.detail)),
        );
    }

    fn summary(&self) -> String {
        format!(
            "{} instances, {} skipped, {} truncated, {} counterexamples, {:.1}s",
            self.instances,
            self.skipped,
            self.truncated,
            self.counterexamples.len(),
            self.elapsed.as_secs_f64()
        )
    }
}

fn integer_sets(z: &RingDescriptor) -> Vec<MultiplicativeSet> {
    let mut sets = vec![MultiplicativeSet::units(z)];
    for p in [2, 3, 5, 7, 11, 13] {
        sets.push(MultiplicativeSet::complement_of_primes(z, &[z.from_i64(p)]).unwrap());
    }
    sets.push(MultiplicativeSet::generated_by(z, &[z.from_i64(2)]).unwrap());
    sets.push(MultiplicativeSet::generated_by(z, &[z.from_i64(6)]).unwrap());
    sets
}

fn sample_composites(rng: &mut ChaCha8Rng, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q = rng.gen_range(4..=INTEGER_BOUND);
        if !sprimary::arith::integer::is_prime_u64(q) {
            out.push(q);
        }
    }
    out
}

/// Problems found on one integer instance for the existence criterion, and
/// separately for the assembly identity.
fn check_integer_instance(i: &Ideal, s: &MultiplicativeSet) -> Result<(Vec<String>, Vec<String>), Error> {
    let mut existence = Vec::new();
    let mut assembly = Vec::new();
    let d = s_primary_decomposition(i, s)?;
    for c in &d.components {
        if !is_s_primary(&c.ideal, s)?.holds {
            existence.push(format!("{i} over {s}: component {} not S-primary", c.ideal));
        }
    }
    if intersect_all(i.ring(), d.component_ideals().iter())? != *i {
        existence.push(format!("{i} over {s}: components do not recompose"));
    }
    // Padding with a saturated component forces minimalize to do work.
    let mut padded = d.component_ideals();
    padded.push(saturate(s, &padded[0])?.0);
    let m = minimalize(&Decomposition::from_components(i, s, &padded, None)?)?;
    if !is_minimal_decomposition(&m) || !is_minimal_decomposition(&minimalize(&d)?) {
        existence.push(format!("{i} over {s}: minimalize result not minimal"));
    }
    if !d.assembly_identity_holds()? {
        assembly.push(format!("{i} over {s}: assembly identity fails for {}", d.assembly_witness));
    }
    Ok((existence, assembly))
}

struct Line {
    number: u32,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn main() {
    let saturate_before = saturate_contract_checks();
    let restrict_before = restrict_contract_checks();
    let mut lines = Vec::new();

    // 1
    let start = Instant::now();
    let fixtures = run_fixtures();
    let fixture_time = start.elapsed();
    let failing: Vec<&str> = fixtures.iter().filter(|f| !f.pass).map(|f| f.name.as_str()).collect();
    lines.push(Line {
        number: 1,
        name: "fixture replay",
        pass: failing.is_empty() && fixture_time < FIXTURE_BUDGET,
        detail: format!("{} fixtures, failing {:?}, {:.3}s", fixtures.len(), failing, fixture_time.as_secs_f64()),
    });

    let us = universes();
    let mut tallies: HashMap<Theorem, Tally> = HashMap::new();
    for u in &us {
        for t in Theorem::ALL {
            let start = Instant::now();
            let r = sweep(u, t);
            tallies.entry(t).or_default().add(&r, start.elapsed());
        }
    }
    let tally = |t: Theorem| &tallies[&t];
    let clean = |t: Theorem| tally(t).counterexamples.is_empty();

    // 2
    let eq = tally(Theorem::Equivalence);
    lines.push(Line {
        number: 2,
        name: "oracle equivalence",
        pass: clean(Theorem::Equivalence) && eq.elapsed < EQUIVALENCE_BUDGET,
        detail: format!("{} universes; {}", us.len(), eq.summary()),
    });

    // 3
    lines.push(Line {
        number: 3,
        name: "S-irreducible implies S-primary",
        pass: clean(Theorem::Sp),
        detail: tally(Theorem::Sp).summary(),
    });

    // 4 and 5 share the integer sample.
    let z = RingDescriptor::integers();
    let sets = integer_sets(&z);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let composites = sample_composites(&mut rng, INTEGER_SAMPLES);
    let mut existence_problems = Vec::new();
    let mut assembly_problems = Vec::new();
    let mut integer_instances = 0u64;
    for &q in &composites {
        let i = Ideal::principal(&z.from_i64(q as i64));
        for s in &sets {
            if !s.is_disjoint(&i).unwrap() {
                continue;
            }
            integer_instances += 1;
            match check_integer_instance(&i, s) {
                Ok((e, a)) => {
                    existence_problems.extend(e);
                    assembly_problems.extend(a);
                }
                Err(e) => existence_problems.push(format!("{i} over {s}: {e}")),
            }
        }
    }

    lines.push(Line {
        number: 4,
        name: "existence and minimalization",
        pass: clean(Theorem::Existence) && existence_problems.is_empty(),
        detail: format!(
            "finite: {}; integers: {} instances, {} problems {:?}",
            tally(Theorem::Existence).summary(),
            integer_instances,
            existence_problems.len(),
            existence_problems.iter().take(3).collect::<Vec<_>>()
        ),
    });

    lines.push(Line {
        number: 5,
        name: "assembly identity",
        pass: clean(Theorem::Assembly) && assembly_problems.is_empty(),
        detail: format!(
            "finite: {}; integers: {} instances, {} failures",
            tally(Theorem::Assembly).summary(),
            integer_instances,
            assembly_problems.len()
        ),
    });

    // 6, 7
    for (number, name, t) in [
        (6, "first uniqueness", Theorem::FirstUniqueness),
        (7, "second uniqueness", Theorem::SecondUniqueness),
    ] {
        lines.push(Line {
            number,
            name,
            pass: clean(t),
            detail: tally(t).summary(),
        });
    }

    // 8: restriction on integers too, from units and gen(2) to larger sets.
    let mut restrict_problems = Vec::new();
    for &q in composites.iter().take(100) {
        let i = Ideal::principal(&z.from_i64(q as i64));
        for (small, large) in [(0usize, 1usize), (0, 2), (7, 2), (7, 3), (8, 4)] {
            let (small, large) = (&sets[small], &sets[large]);
            if !small.is_disjoint(&i).unwrap() {
                continue;
            }
            let outcome = s_primary_decomposition(&i, small).and_then(|d| restrict_decomposition(&d, large));
            if let Err(e) = outcome {
                restrict_problems.push(format!("{i}: {small} -> {large}: {e}"));
            }
        }
    }
    let saturate_calls = saturate_contract_checks() - saturate_before;
    let restrict_calls = restrict_contract_checks() - restrict_before;
    let violations: usize = tallies
        .values()
        .flat_map(|t| &t.counterexamples)
        .chain(&existence_problems)
        .chain(&restrict_problems)
        .filter(|c| c.contains("contract"))
        .count();
    lines.push(Line {
        number: 8,
        name: "saturation and restriction contracts",
        pass: saturate_calls > 0 && restrict_calls > 0 && violations == 0 && restrict_problems.is_empty(),
        detail: format!(
            "{saturate_calls} saturate checks, {restrict_calls} restrict checks, {violations} violations, {} restriction errors",
            restrict_problems.len()
        ),
    });

    // 9
    let mut degeneration_problems = Vec::new();
    let units = MultiplicativeSet::units(&z);
    let sampled: Vec<u64> = (0..INTEGER_SAMPLES).map(|_| rng.gen_range(2..=INTEGER_BOUND)).collect();
    for &q in &sampled {
        let i = Ideal::principal(&z.from_i64(q as i64));
        let same = s_primary_decomposition(&i, &units)
            .and_then(|d| Ok(d.component_ideals() == primary_decomposition(&i)?.component_ideals()));
        match same {
            Ok(true) => {}
            Ok(false) => degeneration_problems.push(format!("{i}: differs")),
            Err(e) => degeneration_problems.push(format!("{i}: {e}")),
        }
    }
    lines.push(Line {
        number: 9,
        name: "degeneration to classical",
        pass: clean(Theorem::Degeneration) && degeneration_problems.is_empty(),
        detail: format!(
            "finite: {}; integers: {} ideals, {} problems",
            tally(Theorem::Degeneration).summary(),
            sampled.len(),
            degeneration_problems.len()
        ),
    });

    // 10: hypothesis failures show up as skipped.
    let min = tally(Theorem::Min);
    lines.push(Line {
        number: 10,
        name: "minimal primes among radicals",
        pass: clean(Theorem::Min),
        detail: format!("{} (skipped = hypothesis fails)", min.summary()),
    });

    for t in [Theorem::Intersections, Theorem::Restriction] {
        println!("info {t}: {}", tally(t).summary());
    }
    for l in &lines {
        println!(
            "criterion {:>2} {}: {} ({})",
            l.number,
            if l.pass { "PASS" } else { "FAIL" },
            l.name,
            l.detail
        );
    }
    for t in Theorem::ALL {
        for c in tally(t).counterexamples.iter().take(5) {
            println!("  {t}: {c}");
        }
    }
    let failed: Vec<u32> = lines.iter().filter(|l| !l.pass).map(|l| l.number).collect();
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
