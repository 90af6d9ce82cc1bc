//! Checker verdicts with witnesses.

use std::fmt;

use serde_json::{json, Value as Json};

use crate::graded::Vector;
use crate::scalar::Scalar;

pub const DEFAULT_WITNESS_CAP: usize = 16;

/// Either side of a checked equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    Vector(Vector),
}

impl Value {
    pub fn render(&self, labels: &[String]) -> String {
        match self {
            Value::Scalar(s) => s.to_string(),
            Value::Vector(v) => v.render(labels),
        }
    }
}

/// One violated equation instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub equation: String,
    /// Basis indices (into the report's labels) the equation was evaluated on.
    pub tuple: Vec<usize>,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub witnesses: Vec<Witness>,
    /// Equation instances evaluated (the full space, even when stopping early).
    pub checked_count: u64,
    /// Total violations seen; may exceed `witnesses.len()` when capped.
    pub violations: u64,
    /// Names for the indices used in witness tuples.
    pub labels: Vec<String>,
    pub cap: Option<usize>,
}

impl AxiomReport {
    pub fn new(labels: Vec<String>) -> Self {
        AxiomReport {
            witnesses: Vec::new(),
            checked_count: 0,
            violations: 0,
            labels,
            cap: Some(DEFAULT_WITNESS_CAP),
        }
    }

    pub fn with_cap(mut self, cap: Option<usize>) -> Self {
        self.cap = cap;
        self
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn verdict(&self) -> Verdict {
        if self.passed() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Counts one checked instance; the witness is built only on failure.
    pub fn record(&mut self, witness: impl FnOnce() -> Witness, ok: bool) {
        self.checked_count += 1;
        if !ok {
            self.violations += 1;
            if self.cap.is_none_or(|c| self.witnesses.len() < c) {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn push_witness(&mut self, w: Witness) {
        self.violations += 1;
        if self.cap.is_none_or(|c| self.witnesses.len() < c) {
            self.witnesses.push(w);
        }
    }

    /// Appends another report over the same labels.
    pub fn merge(&mut self, other: AxiomReport) {
        self.checked_count += other.checked_count;
        for w in other.witnesses {
            if self.cap.is_none_or(|c| self.witnesses.len() < c) {
                self.witnesses.push(w);
            }
        }
        self.violations += other.violations;
    }

    pub fn label(&self, i: usize) -> String {
        self.labels.get(i).cloned().unwrap_or_else(|| format!("#{i}"))
    }

    pub fn render_tuple(&self, tuple: &[usize]) -> String {
        let names: Vec<String> = tuple.iter().map(|&i| self.label(i)).collect();
        format!("({})", names.join(", "))
    }

    pub fn to_json(&self) -> Json {
        let witnesses: Vec<Json> = self
            .witnesses
            .iter()
            .map(|w| {
                json!({
                    "equation": w.equation,
                    "tuple": w.tuple.iter().map(|&i| self.label(i)).collect::<Vec<_>>(),
                    "lhs": w.lhs.render(&self.labels),
                    "rhs": w.rhs.render(&self.labels),
                })
            })
            .collect();
        json!({
            "verdict": self.verdict().to_string(),
            "checked_count": self.checked_count,
            "violations": self.violations,
            "witnesses": witnesses,
        })
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verdict: {} (checked {}, violations {})",
            self.verdict(),
            self.checked_count,
            self.violations
        )?;
        for w in &self.witnesses {
            writeln!(
                f,
                "  {} at {}: lhs = {}, rhs = {}",
                w.equation,
                self.render_tuple(&w.tuple),
                w.lhs.render(&self.labels),
                w.rhs.render(&self.labels)
            )?;
        }
        if (self.witnesses.len() as u64) < self.violations {
            writeln!(f, "  ... {} more", self.violations - self.witnesses.len() as u64)?;
        }
        Ok(())
    }
}
