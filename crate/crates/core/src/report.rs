//! JSON shapes for CLI output. Field order is declaration order; ring values
//! are decimal or polynomial strings.

use serde::{Deserialize, Serialize};

use crate::classify::{ClassificationReport, SplitWitness, Tri};
use crate::decompose::{Component, Decomposition, FirstUniquenessReport, TheoremMinReport};
use crate::fixtures::FixtureOutcome;
use crate::multiplicative::{Caps, MultiplicativeSet, WitnessCertificate};
use crate::oracle::SweepReport;
use crate::ring::{Ideal, RingElement};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapsDto {
    pub max_elements: u64,
    pub max_witness_degree: u32,
}

impl From<Caps> for CapsDto {
    fn from(c: Caps) -> Self {
        CapsDto {
            max_elements: c.max_elements as u64,
            max_witness_degree: c.max_witness_degree,
        }
    }
}

/// Top-level object of every JSON response.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema: u32,
    pub command: String,
    pub caps: CapsDto,
    pub result: T,
}

impl<T> Envelope<T> {
    pub fn new(command: &str, caps: Caps, result: T) -> Self {
        Envelope {
            schema: SCHEMA,
            command: command.into(),
            caps: caps.into(),
            result,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDto {
    pub kind: String,
    pub message: String,
}

fn s<T: ToString>(x: &T) -> String {
    x.to_string()
}

fn gens(i: &Ideal) -> Vec<String> {
    vec![i.generator_element().to_string()]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDto {
    pub witness: String,
    pub kind: String,
    pub provenance: Vec<String>,
}

impl From<&WitnessCertificate> for WitnessDto {
    fn from(w: &WitnessCertificate) -> Self {
        WitnessDto {
            witness: s(&w.witness),
            kind: s(&w.kind),
            provenance: w.provenance.iter().map(s).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitDto {
    pub intersection: String,
    pub left: String,
    pub right: String,
    pub s: String,
}

impl From<&SplitWitness> for SplitDto {
    fn from(w: &SplitWitness) -> Self {
        SplitDto {
            intersection: s(&w.k),
            left: s(&w.i),
            right: s(&w.j),
            s: s(&w.s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriDto {
    True,
    False,
    Unknown,
}

impl From<Tri> for TriDto {
    fn from(t: Tri) -> Self {
        match t {
            Tri::True => TriDto::True,
            Tri::False => TriDto::False,
            Tri::Unknown => TriDto::Unknown,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagsDto {
    pub prime: TriDto,
    pub primary: TriDto,
    pub irreducible: TriDto,
    pub s_prime: TriDto,
    pub s_primary: TriDto,
    pub s_irreducible: TriDto,
    pub s_finite: TriDto,
    pub disjoint_from_s: TriDto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SFiniteDto {
    pub holds: bool,
    pub s: String,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationDto {
    pub ring: String,
    pub ideal: String,
    pub multiplicative_set: String,
    pub flags: FlagsDto,
    pub s_prime_witness: Option<WitnessDto>,
    pub s_primary_witness: Option<WitnessDto>,
    pub s_irreducible_counterexample: Option<SplitDto>,
    pub s_finite: SFiniteDto,
    pub radical: String,
    pub saturation: String,
    pub saturation_witness: WitnessDto,
}

impl From<&ClassificationReport> for ClassificationDto {
    fn from(r: &ClassificationReport) -> Self {
        let f = &r.flags;
        ClassificationDto {
            ring: s(r.ideal.ring()),
            ideal: s(&r.ideal),
            multiplicative_set: s(&r.mult_set),
            flags: FlagsDto {
                prime: f.prime.into(),
                primary: f.primary.into(),
                irreducible: f.irreducible.into(),
                s_prime: f.s_prime.into(),
                s_primary: f.s_primary.into(),
                s_irreducible: f.s_irreducible.into(),
                s_finite: f.s_finite.into(),
                disjoint_from_s: f.disjoint_from_s.into(),
            },
            s_prime_witness: r.s_prime_witness.as_ref().map(Into::into),
            s_primary_witness: r.s_primary_witness.as_ref().map(Into::into),
            s_irreducible_counterexample: r.s_irreducible_counterexample.as_ref().map(Into::into),
            s_finite: SFiniteDto {
                holds: r.s_finite.holds,
                s: s(&r.s_finite.s),
                generators: r.s_finite.generators.iter().map(s).collect(),
            },
            radical: s(&r.radical),
            saturation: s(&r.saturation),
            saturation_witness: (&r.saturation_witness).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationDto {
    pub ring: String,
    pub ideal: String,
    pub multiplicative_set: String,
    pub saturation: String,
    pub witness: WitnessDto,
}

impl SaturationDto {
    pub fn new(i: &Ideal, set: &MultiplicativeSet, sat: &Ideal, w: &WitnessCertificate) -> Self {
        SaturationDto {
            ring: s(i.ring()),
            ideal: s(i),
            multiplicative_set: s(set),
            saturation: s(sat),
            witness: w.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDto {
    pub generators: Vec<String>,
    pub radical: String,
    pub saturation: String,
    pub witness: WitnessDto,
}

impl From<&Component> for ComponentDto {
    fn from(c: &Component) -> Self {
        ComponentDto {
            generators: gens(&c.ideal),
            radical: s(&c.radical),
            saturation: s(&c.saturation),
            witness: (&c.witness).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDto {
    pub ring: String,
    pub ideal: String,
    pub multiplicative_set: String,
    pub components: Vec<ComponentDto>,
    pub minimal: bool,
    pub assembly_witness: WitnessDto,
}

impl From<&Decomposition> for DecompositionDto {
    fn from(d: &Decomposition) -> Self {
        DecompositionDto {
            ring: s(d.ideal.ring()),
            ideal: s(&d.ideal),
            multiplicative_set: s(&d.mult_set),
            components: d.components.iter().map(Into::into).collect(),
            minimal: d.minimal,
            assembly_witness: (&d.assembly_witness).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObservedPrimeDto {
    pub prime: String,
    pub x: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremMinDto {
    pub hypothesis: Vec<bool>,
    pub hypothesis_holds: bool,
    pub radicals: Vec<String>,
    pub minimal_primes: Vec<String>,
    pub missing: Vec<String>,
    pub conclusion_holds: Option<bool>,
}

impl From<&TheoremMinReport> for TheoremMinDto {
    fn from(r: &TheoremMinReport) -> Self {
        TheoremMinDto {
            hypothesis: r.hypothesis.clone(),
            hypothesis_holds: r.hypothesis_holds,
            radicals: r.radicals.iter().map(s).collect(),
            minimal_primes: r.minimal_primes.iter().map(s).collect(),
            missing: r.missing.iter().map(s).collect(),
            conclusion_holds: r.conclusion_holds,
        }
    }
}

/// Output of the `report` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessDto {
    pub decomposition: DecompositionDto,
    pub associated_s_primes: Vec<String>,
    pub observed: Vec<ObservedPrimeDto>,
    pub test_set_size: u64,
    pub first_uniqueness_agrees: bool,
    pub isolated_components: Vec<u64>,
    pub theorem_min: Option<TheoremMinDto>,
}

impl UniquenessDto {
    pub fn new(
        dec: &Decomposition,
        first: &FirstUniquenessReport,
        isolated: &[usize],
        min: Option<&TheoremMinReport>,
    ) -> Self {
        UniquenessDto {
            decomposition: dec.into(),
            associated_s_primes: first.associated.iter().map(s).collect(),
            observed: first
                .observed
                .iter()
                .map(|(p, x): &(Ideal, RingElement)| ObservedPrimeDto { prime: s(p), x: s(x) })
                .collect(),
            test_set_size: first.test_set_size as u64,
            first_uniqueness_agrees: first.agrees,
            isolated_components: isolated.iter().map(|&k| k as u64).collect(),
            theorem_min: min.map(Into::into),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureDto {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl From<&FixtureOutcome> for FixtureDto {
    fn from(f: &FixtureOutcome) -> Self {
        FixtureDto {
            name: f.name.clone(),
            expected: f.expected.clone(),
            computed: f.computed.clone(),
            pass: f.pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepListDto {
    pub reports: Vec<SweepReport>,
    pub passed: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::decompose::{first_uniqueness_report, isolated_s_primes, s_primary_decomposition};
    use crate::multiplicative::saturate;
    use crate::oracle::{build_universe, sweep, MultSetPolicy, Theorem};
    use crate::ring::RingDescriptor;
    use serde::de::DeserializeOwned;

    fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(x: &T) {
        let text = serde_json::to_string(&Envelope::new("test", Caps::default(), x)).unwrap();
        let back: Envelope<T> = serde_json::from_str(&text).unwrap();
        assert_eq!(&back.result, x);
        assert!(text.starts_with("{\"schema\":1,"));
    }

    #[test]
    fn every_report_round_trips() {
        let z = RingDescriptor::integers();
        let q = Ideal::principal(&z.from_i64(6));
        let set = MultiplicativeSet::complement_of_primes(&z, &[z.from_i64(3)]).unwrap();
        round_trip(&ClassificationDto::from(&classify(&q, &set).unwrap()));
        let (sat, w) = saturate(&set, &q).unwrap();
        round_trip(&SaturationDto::new(&q, &set, &sat, &w));
        let d = s_primary_decomposition(&q, &set).unwrap();
        round_trip(&DecompositionDto::from(&d));
        let f = first_uniqueness_report(&q, &set, &d, Caps::default()).unwrap();
        round_trip(&UniquenessDto::new(&d, &f, &isolated_s_primes(&d).unwrap(), None));
        let u = build_universe(&RingDescriptor::modular(12).unwrap(), &[MultSetPolicy::GeneratedByOne], 4096).unwrap();
        round_trip(&SweepListDto {
            reports: vec![sweep(&u, Theorem::Sp)],
            passed: true,
        });
        round_trip(&FixtureDto {
            name: "n".into(),
            expected: "e".into(),
            computed: "c".into(),
            pass: true,
        });
    }

    #[test]
    fn decomposition_field_order() {
        let z = RingDescriptor::integers();
        let d = s_primary_decomposition(&Ideal::principal(&z.from_i64(12)), &MultiplicativeSet::units(&z)).unwrap();
        let text = serde_json::to_string(&DecompositionDto::from(&d)).unwrap();
        let keys = ["\"ring\"", "\"ideal\"", "\"multiplicative_set\"", "\"components\"", "\"minimal\"", "\"assembly_witness\""];
        let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(text.contains("\"generators\":[\"4\"]"));
    }
}
