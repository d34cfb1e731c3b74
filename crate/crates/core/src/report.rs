//! Verdicts and witnesses produced by every checker.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::{Tensor2, Tensor3};
use crate::exact::{Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// The nonzero quantity that makes a check fail.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Residual {
    Polynomial(Polynomial),
    Vector(Vec<Rational>),
    Tensor2(Tensor2),
    Tensor3(Tensor3),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Polynomial(p) => p.is_zero(),
            Residual::Vector(v) => v.iter().all(Rational::is_zero),
            Residual::Tensor2(t) => t.is_zero(),
            Residual::Tensor3(t) => t.is_zero(),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Polynomial(p) => write!(f, "{p}"),
            Residual::Vector(v) => {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "({})", parts.join(", "))
            }
            Residual::Tensor2(t) => write!(f, "{t}"),
            Residual::Tensor3(t) => write!(f, "{t}"),
        }
    }
}

/// Indices are 1-based, matching the `x^i` / `e_i` naming in rendered output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
    pub residual: Residual,
}

impl Witness {
    /// Takes 0-based indices and stores them 1-based.
    pub fn at(indices: &[usize], residual: Residual) -> Self {
        Witness {
            indices: indices.iter().map(|i| i + 1).collect(),
            context: None,
            residual,
        }
    }

    pub fn with_context(mut self, context: impl Into<String>) -> Self {
        self.context = Some(context.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    /// Wall-clock time; kept out of JSON so reports stay byte-reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn from_witnesses(
        check: impl Into<String>,
        witnesses: Vec<Witness>,
        started: Instant,
    ) -> Self {
        let verdict = if witnesses.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        CheckReport {
            check: check.into(),
            verdict,
            witnesses,
            elapsed: started.elapsed(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.verdict)?;
        for w in &self.witnesses {
            let idx: Vec<String> = w.indices.iter().map(ToString::to_string).collect();
            write!(f, "\n  at ({})", idx.join(","))?;
            if let Some(ctx) = &w.context {
                write!(f, " [{ctx}]")?;
            }
            write!(f, ": {}", w.residual)?;
        }
        Ok(())
    }
}
