//! Check results as plain data.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Every label a report may carry, in registry order.
pub const LABELS: &[&str] = &[
    // idempotent splitting
    "split-ip",
    "split-pi",
    // monoids and modules
    "monoid-assoc",
    "monoid-unit-left",
    "monoid-unit-right",
    "module-assoc",
    "module-unit",
    // quadruples
    "wmeas-wcp",
    "idem-wcp",
    "nabla-linear",
    "twis-wcp",
    "cocy2-wcp",
    "idemp-sigma-inv",
    "fi-nab",
    "c1",
    "aw",
    "c11",
    "aw1",
    "assoc-wcp",
    "normalized-wcp",
    "otra-prop",
    "vieja-proof",
    "prod-wcp",
    // preunits
    "preunit-1",
    "preunit-2",
    "nabla-nu-idem",
    "nabla-nu-eq",
    "preunit-idemp",
    "pre1-wcp",
    "pre2-wcp",
    "pre3-wcp",
    "beta-unit",
    "beta-mult",
    "beta-bar-mult",
    "beta-bar-unit",
    "m-assoc",
    "m-linear",
    "m-normalized",
    "round-trip",
    // iteration
    "falso-idemp",
    "falso-idemp2",
    "falso-idemp-link",
    "twisting-i",
    "twisting-ii",
    "sigma1",
    "sigma2",
    "sigma3",
    "pre-1",
    "pre-2",
    // isomorphism
    "new-it-1",
    "new-it-2",
    "new-it-3",
    "i-mult",
    "i-unit",
    "outer-nabla-idem",
    "outer-nabla-linear",
    "outer-nabla",
    "omega-left-inv",
    "omega-right-inv",
    "omega-factor",
    "iso-mult",
    "iso-unit",
    // laws
    "W1",
    "W2",
    "W3",
    "W4",
    "W5",
    "W6",
    "DL1",
    "DL2",
    "DL3",
    "DL4",
    "WDL1",
    "WDL2",
    "idem=idem",
    "equ-idem",
    "new-nabla",
    "tech2",
    "tech3",
    "YB-Comp",
    "closed-product",
    "closed-sigma",
    "closed-preunit",
    "brz1",
    "brz2",
    "brz3",
    "brz-nabla",
    "DP1",
    "DP2",
    "DP3",
    "DP4",
    "DP1-necessity",
    "DP2-necessity",
];

pub fn is_registered(label: &str) -> bool {
    LABELS.contains(&label)
}

/// Position of an equation failure: a basis input and the output coordinate where
/// the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub input: Vec<usize>,
    pub input_factors: Vec<String>,
    pub output: Vec<usize>,
    pub output_factors: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

fn fmt_index(f: &mut fmt::Formatter<'_>, names: &[String], idx: &[usize]) -> fmt::Result {
    if names.is_empty() {
        return write!(f, "1");
    }
    for (k, (n, i)) in names.iter().zip(idx).enumerate() {
        if k > 0 {
            write!(f, "⊗")?;
        }
        write!(f, "{n}[{i}]")?;
    }
    Ok(())
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "input ")?;
        fmt_index(f, &self.input_factors, &self.input)?;
        write!(f, ", output ")?;
        fmt_index(f, &self.output_factors, &self.output)?;
        write!(f, ": lhs {} vs rhs {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub context: String,
    pub pass: bool,
    /// The check's hypotheses were not met; `pass` is then vacuously true.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub skipped: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn new(label: &str, context: &str, witness: Option<Witness>) -> Check {
        debug_assert!(is_registered(label), "unregistered label {label}");
        Check {
            label: label.to_string(),
            context: context.to_string(),
            pass: witness.is_none(),
            skipped: false,
            witness,
        }
    }

    /// A failure with no single differing entry, e.g. when the two sides do
    /// not even have the same shape.
    pub fn failed(label: &str, context: &str) -> Check {
        debug_assert!(is_registered(label), "unregistered label {label}");
        Check {
            label: label.to_string(),
            context: context.to_string(),
            pass: false,
            skipped: false,
            witness: None,
        }
    }

    pub fn skipped(label: &str, context: &str) -> Check {
        debug_assert!(is_registered(label), "unregistered label {label}");
        Check {
            label: label.to_string(),
            context: context.to_string(),
            pass: true,
            skipped: true,
            witness: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// First check with this label (in any context).
    pub fn get(&self, label: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.label == label)
    }

    pub fn get_in(&self, label: &str, context: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.label == label && c.context == context)
    }

    /// True when a check with this label exists and passed (in every context).
    pub fn passed(&self, label: &str) -> bool {
        let mut seen = false;
        for c in self.checks.iter().filter(|c| c.label == label) {
            seen = true;
            if !c.pass {
                return false;
            }
        }
        seen
    }

    /// One aligned line per check: status, label, context, witness.
    pub fn render_text(&self) -> String {
        let lw = self.checks.iter().map(|c| c.label.chars().count()).max().unwrap_or(0);
        let cw = self.checks.iter().map(|c| c.context.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let status = match (c.pass, c.skipped) {
                (_, true) => "SKIP",
                (true, false) => "PASS",
                (false, false) => "FAIL",
            };
            let mut line = format!("{status}  {:lw$}", c.label);
            if cw > 0 {
                line.push_str(&format!("  {:cw$}", c.context));
            }
            if let Some(w) = &c.witness {
                line.push_str(&format!("  {w}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}
