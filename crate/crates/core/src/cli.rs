//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain error, 2 parse error, 3 contract
//! violation (including oracle disagreement and failing fixtures).

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classify::classify_with;
use crate::decompose::{
    first_uniqueness_report, isolated_s_primes, minimalize, s_primary_decomposition,
    theorem_min_check, Decomposition,
};
use crate::error::Error;
use crate::fixtures::run_fixtures;
use crate::multiplicative::{saturate_with, Caps, MultiplicativeSet};
use crate::oracle::{build_universe, sweep, MultSetPolicy, Theorem, ALL_SUBSETS_LIMIT};
use crate::parse::{parse_ideal, parse_ideal_list, parse_mult_set, parse_ring};
use crate::report::{
    ClassificationDto, DecompositionDto, Envelope, ErrorDto, FixtureDto, SaturationDto,
    SweepListDto, UniquenessDto,
};
use crate::ring::{Ideal, RingDescriptor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "sprimary", version, about = "S-primary ideals and decompositions over computable rings")]
struct Cli {
    /// Output mode.
    #[arg(long, value_enum, env = "SPRIMARY_FORMAT", default_value = "text", global = true)]
    format: Format,
    /// Largest finite enumeration (ring elements, residues) allowed.
    #[arg(long, default_value_t = 4096, global = true)]
    max_elements: usize,
    /// Most passes of colon stabilization during saturation.
    #[arg(long, default_value_t = 8, global = true)]
    max_witness_degree: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Target {
    /// Ring, e.g. `Z`, `Z/12`, `GF(5)[x]`, `Z/2 x Z/2`.
    #[arg(long)]
    ring: String,
    /// Ideal, e.g. `(6)`, `(x^2+1)`, `(0,1,0)`.
    #[arg(long)]
    ideal: String,
    /// Multiplicative set, e.g. `units`, `complement(3)`, `gen(2)`.
    #[arg(long, default_value = "units")]
    mult: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every predicate on an ideal.
    Classify(Target),
    /// Saturation S(I) with its stabilizer.
    Saturate(Target),
    /// Minimal S-primary decomposition.
    Decompose(Target),
    /// Minimalize a given list of S-primary components.
    Minimalize {
        #[command(flatten)]
        target: Target,
        /// Components separated by `;`.
        #[arg(long)]
        components: String,
    },
    /// Decomposition with uniqueness data.
    Report(Target),
    /// Exhaustive sweeps over a finite ring.
    OracleVerify {
        #[arg(long)]
        ring: String,
        /// Sweeps to run; all when omitted.
        #[arg(long = "theorem", value_parser = parse_theorem)]
        theorems: Vec<Theorem>,
    },
    /// Replay the named worked examples.
    PaperExamples,
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    Theorem::ALL
        .into_iter()
        .find(|t| t.to_string() == s)
        .ok_or_else(|| {
            let names: Vec<String> = Theorem::ALL.iter().map(|t| t.to_string()).collect();
            format!("expected one of {}", names.join(", "))
        })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::ContractViolation(_) => 3,
        _ => 1,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::RingMismatch { .. } => "ring-mismatch",
        Error::Parse { .. } => "parse",
        Error::InvalidRing(_) => "invalid-ring",
        Error::InvalidElement(_) => "invalid-element",
        Error::InvalidMultiplicativeSet(_) => "invalid-multiplicative-set",
        Error::UnsupportedEnumeration(_) => "unsupported-enumeration",
        Error::CapExceeded { .. } => "cap-exceeded",
        Error::NotDisjoint { .. } => "not-disjoint",
        Error::UnitIdeal => "unit-ideal",
        Error::Precondition(_) => "precondition",
        Error::ContractViolation(_) => "contract-violation",
    }
}

/// Error tagged with the argument it came from.
struct Failure {
    error: Error,
    context: Option<&'static str>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, context: None }
    }
}

fn at(context: &'static str) -> impl Fn(Error) -> Failure {
    move |error| Failure {
        error,
        context: Some(context),
    }
}

struct Output<'a> {
    format: Format,
    caps: Caps,
    command: &'static str,
    out: &'a mut dyn Write,
}

impl Output<'_> {
    fn emit<T: Serialize>(&mut self, value: T, text: String) {
        let _ = match self.format {
            Format::Json => writeln!(
                self.out,
                "{}",
                serde_json::to_string_pretty(&Envelope::new(self.command, self.caps, value)).expect("serializable")
            ),
            Format::Text => write!(self.out, "{text}"),
        };
    }
}

fn parse_target(t: &Target) -> Result<(RingDescriptor, Ideal, MultiplicativeSet), Failure> {
    let ring = parse_ring(&t.ring).map_err(at("--ring"))?;
    let ideal = parse_ideal(&ring, &t.ideal).map_err(at("--ideal"))?;
    let set = parse_mult_set(&ring, &t.mult).map_err(at("--mult"))?;
    Ok((ring, ideal, set))
}

fn header(command: &str, caps: Caps) -> String {
    format!(
        "{command} (max-elements {}, max-witness-degree {})\n",
        caps.max_elements, caps.max_witness_degree
    )
}

fn decomposition_text(d: &Decomposition) -> String {
    let mut t = format!(
        "ring: {}\nideal: {}\nmultiplicative set: {}\nminimal: {}\nassembly witness: {}\n",
        d.ideal.ring(),
        d.ideal,
        d.mult_set,
        d.minimal,
        d.assembly_witness
    );
    for (k, c) in d.components.iter().enumerate() {
        t += &format!(
            "component {k}: {} radical {} saturation {} witness {}\n",
            c.ideal, c.radical, c.saturation, c.witness
        );
    }
    t
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let caps = Caps {
        max_elements: cli.max_elements,
        max_witness_degree: cli.max_witness_degree,
    };
    let command = match &cli.command {
        Command::Classify(_) => "classify",
        Command::Saturate(_) => "saturate",
        Command::Decompose(_) => "decompose",
        Command::Minimalize { .. } => "minimalize",
        Command::Report(_) => "report",
        Command::OracleVerify { .. } => "oracle-verify",
        Command::PaperExamples => "paper-examples",
    };
    let format = cli.format;
    let mut o = Output {
        format,
        caps,
        command,
        out,
    };
    match execute(&cli.command, &mut o) {
        Ok(code) => code,
        Err(f) => {
            let message = match f.context {
                Some(c) => format!("{c}: {}", f.error),
                None => f.error.to_string(),
            };
            if format == Format::Json {
                o.emit(
                    ErrorDto {
                        kind: error_kind(&f.error).into(),
                        message: message.clone(),
                    },
                    String::new(),
                );
            }
            let _ = writeln!(err, "error: {message}");
            exit_code(&f.error)
        }
    }
}

fn execute(command: &Command, o: &mut Output) -> Result<i32, Failure> {
    let caps = o.caps;
    let head = header(o.command, caps);
    match command {
        Command::Classify(t) => {
            let (_, q, s) = parse_target(t)?;
            let r = classify_with(&q, &s, caps)?;
            let f = &r.flags;
            let mut text = head;
            text += &format!("ring: {}\nideal: {}\nmultiplicative set: {}\n", q.ring(), q, s);
            for (name, v) in [
                ("prime", f.prime),
                ("primary", f.primary),
                ("irreducible", f.irreducible),
                ("s_prime", f.s_prime),
                ("s_primary", f.s_primary),
                ("s_irreducible", f.s_irreducible),
                ("s_finite", f.s_finite),
                ("disjoint_from_s", f.disjoint_from_s),
            ] {
                text += &format!("{name}: {v}\n");
            }
            if let Some(w) = &r.s_prime_witness {
                text += &format!("s_prime witness: {w}\n");
            }
            if let Some(w) = &r.s_primary_witness {
                text += &format!("s_primary witness: {w}\n");
            }
            if let Some(c) = &r.s_irreducible_counterexample {
                text += &format!("s_irreducible counterexample: {} = {} ∩ {} with s = {}\n", c.k, c.i, c.j, c.s);
            }
            text += &format!(
                "radical: {}\nsaturation: {} (witness {})\n",
                r.radical, r.saturation, r.saturation_witness
            );
            o.emit(ClassificationDto::from(&r), text);
        }
        Command::Saturate(t) => {
            let (_, i, s) = parse_target(t)?;
            let (sat, w) = saturate_with(&s, &i, caps)?;
            let text = format!("{head}S({i}) = {sat} for S = {s}\nwitness: {w}\n");
            o.emit(SaturationDto::new(&i, &s, &sat, &w), text);
        }
        Command::Decompose(t) => {
            let (_, i, s) = parse_target(t)?;
            let d = s_primary_decomposition(&i, &s)?;
            o.emit(DecompositionDto::from(&d), head + &decomposition_text(&d));
        }
        Command::Minimalize { target, components } => {
            let (ring, i, s) = parse_target(target)?;
            let comps = parse_ideal_list(&ring, components).map_err(at("--components"))?;
            let given = Decomposition::from_components(&i, &s, &comps, None)?;
            let d = minimalize(&given)?;
            o.emit(DecompositionDto::from(&d), head + &decomposition_text(&d));
        }
        Command::Report(t) => {
            let (_, i, s) = parse_target(t)?;
            let d = s_primary_decomposition(&i, &s)?;
            let first = first_uniqueness_report(&i, &s, &d, caps)?;
            let isolated = isolated_s_primes(&d)?;
            let min = if i.is_zero_ideal() {
                Some(theorem_min_check(&d)?)
            } else {
                None
            };
            let mut text = head + &decomposition_text(&d);
            let assoc: Vec<String> = first.associated.iter().map(|p| p.to_string()).collect();
            text += &format!("associated S-primes: {}\n", assoc.join(", "));
            for (p, x) in &first.observed {
                text += &format!("  {p} = S(rad(I : {x}))\n");
            }
            text += &format!(
                "first uniqueness: {} over {} test elements\nisolated components: {:?}\n",
                if first.agrees { "agrees" } else { "DISAGREES" },
                first.test_set_size,
                isolated
            );
            if let Some(m) = &min {
                text += &match m.conclusion_holds {
                    Some(c) => format!("minimal primes covered: {c}\n"),
                    None => "minimal primes: hypothesis not satisfied\n".to_string(),
                };
            }
            let agrees = first.agrees && min.as_ref().is_none_or(|m| m.conclusion_holds != Some(false));
            o.emit(UniquenessDto::new(&d, &first, &isolated, min.as_ref()), text);
            if !agrees {
                return Ok(3);
            }
        }
        Command::OracleVerify { ring, theorems } => {
            let ring = parse_ring(ring).map_err(at("--ring"))?;
            let n = ring
                .size()
                .ok_or_else(|| Error::UnsupportedEnumeration(format!("{ring} is infinite")))?;
            let mut policies = vec![MultSetPolicy::UnitGroup, MultSetPolicy::GeneratedByOne];
            if n as usize <= ALL_SUBSETS_LIMIT {
                policies.push(MultSetPolicy::AllClosedSubsets);
            }
            let u = build_universe(&ring, &policies, caps.max_elements)?;
            let chosen: Vec<Theorem> = if theorems.is_empty() { Theorem::ALL.to_vec() } else { theorems.clone() };
            let reports: Vec<_> = chosen.iter().map(|&t| sweep(&u, t)).collect();
            let passed = reports.iter().all(|r| r.passed());
            let mut text = head;
            for r in &reports {
                text += &format!(
                    "{} {}: {} instances, {} skipped, {} truncated, {} counterexamples ({} ms)\n",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.theorem,
                    r.instances,
                    r.skipped,
                    r.truncated,
                    r.counterexamples.len(),
                    r.elapsed_ms
                );
                for c in r.counterexamples.iter().take(5) {
                    text += &format!("  {} over {}: {}\n", c.ideal, c.mult_set, c.detail);
                }
            }
            o.emit(SweepListDto { reports, passed }, text);
            if !passed {
                return Ok(3);
            }
        }
        Command::PaperExamples => {
            let outcomes = run_fixtures();
            let mut text = head;
            for f in &outcomes {
                text += &format!(
                    "{} {}\n  expected: {}\n  computed: {}\n",
                    if f.pass { "PASS" } else { "FAIL" },
                    f.name,
                    f.expected,
                    f.computed
                );
            }
            let pass = outcomes.iter().all(|f| f.pass);
            let dtos: Vec<FixtureDto> = outcomes.iter().map(Into::into).collect();
            o.emit(dtos, text);
            if !pass {
                return Ok(3);
            }
        }
    }
    Ok(0)
}
