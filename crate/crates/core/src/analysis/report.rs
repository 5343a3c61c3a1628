use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::Generator;
use crate::grading::Degree;
use crate::module::{BModuleSpec, IndVector, InducedModule};
use crate::rational::{format_abs, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    SimpleWithinCap,
    Simple,
    Reducible,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::SimpleWithinCap => "simple-within-cap",
            Verdict::Simple => "simple",
            Verdict::Reducible => "reducible",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// A vector in either a finite spec or an induced module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WitnessVector {
    Finite(Vec<Rational>),
    Induced(IndVector),
}

/// Generator of an invariant subspace, with a spanning set of it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub generator: WitnessVector,
    pub span: Vec<WitnessVector>,
    /// `generator` rendered with basis names.
    pub text: String,
    pub span_text: Vec<String>,
}

impl Witness {
    pub fn finite(spec: &BModuleSpec, generator: Vec<Rational>, span: Vec<Vec<Rational>>) -> Self {
        Witness {
            text: format_dense(spec, &generator),
            span_text: span.iter().map(|v| format_dense(spec, v)).collect(),
            generator: WitnessVector::Finite(generator),
            span: span.into_iter().map(WitnessVector::Finite).collect(),
        }
    }

    pub fn induced(m: &InducedModule, generator: IndVector, span: Vec<IndVector>) -> Self {
        Witness {
            text: m.format_vector(&generator),
            span_text: span.iter().map(|v| m.format_vector(v)).collect(),
            generator: WitnessVector::Induced(generator),
            span: span.into_iter().map(WitnessVector::Induced).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.span.len()
    }

    pub fn induced_span(&self) -> Vec<&IndVector> {
        self.span
            .iter()
            .filter_map(|v| match v {
                WitnessVector::Induced(x) => Some(x),
                WitnessVector::Finite(_) => None,
            })
            .collect()
    }
}

/// Outcome of a simplicity test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicityReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Which test produced the verdict.
    pub method: String,
    pub seed: Option<u64>,
    pub level: Option<u32>,
    pub notes: Vec<String>,
}

impl SimplicityReport {
    pub fn new(verdict: Verdict, method: &str) -> Self {
        SimplicityReport {
            verdict,
            witness: None,
            method: method.to_string(),
            seed: None,
            level: None,
            notes: Vec::new(),
        }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_level(mut self, t: u32) -> Self {
        self.level = Some(t);
        self
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct WitnessFile<'a> {
            generator: &'a str,
            dim: usize,
            span: &'a [String],
        }
        #[derive(Serialize)]
        struct ReportFile<'a> {
            verdict: Verdict,
            method: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            level: Option<u32>,
            #[serde(skip_serializing_if = "Option::is_none")]
            seed: Option<u64>,
            witness: Option<WitnessFile<'a>>,
            notes: &'a [String],
        }
        let file = ReportFile {
            verdict: self.verdict,
            method: &self.method,
            level: self.level,
            seed: self.seed,
            witness: self.witness.as_ref().map(|w| WitnessFile {
                generator: &w.text,
                dim: w.dim(),
                span: &w.span_text,
            }),
            notes: &self.notes,
        };
        serde_json::to_string_pretty(&file).expect("serializable")
    }
}

impl fmt::Display for SimplicityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.verdict)?;
        writeln!(f, "method: {}", self.method)?;
        if let Some(t) = self.level {
            writeln!(f, "level: {t}")?;
        }
        if let Some(s) = self.seed {
            writeln!(f, "seed: {s}")?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness: {}", w.text)?;
            writeln!(f, "witness span dim: {}", w.dim())?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// Renders a coordinate vector of a finite spec, e.g. `2*v0 - v1`.
pub fn format_dense(spec: &BModuleSpec, v: &[Rational]) -> String {
    let mut s = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        match (s.is_empty(), neg) {
            (true, true) => s.push('-'),
            (true, false) => {}
            (false, true) => s.push_str(" - "),
            (false, false) => s.push_str(" + "),
        }
        if !(c == &Rational::one() || c == &-Rational::one()) {
            s.push_str(&format_abs(c));
            s.push('*');
        }
        s.push_str(&spec.basis_name(i));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// One step of a degree-lowering reduction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionStep {
    pub generator: Generator,
    pub degree: Degree,
}

/// Steps taken from a vector down to `1 (x) V`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub terminal: IndVector,
}

impl ReductionTrace {
    pub fn to_json(&self, m: &InducedModule) -> String {
        #[derive(Serialize)]
        struct Step {
            generator: String,
            degree: String,
        }
        #[derive(Serialize)]
        struct TraceFile {
            steps: Vec<Step>,
            terminal: String,
        }
        let file = TraceFile {
            steps: self
                .steps
                .iter()
                .map(|s| Step {
                    generator: s.generator.to_string(),
                    degree: s.degree.to_string(),
                })
                .collect(),
            terminal: m.format_vector(&self.terminal),
        };
        serde_json::to_string_pretty(&file).expect("serializable")
    }
}
