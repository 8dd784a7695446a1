//! Named pass/fail checks collected by the verification suites.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// An ordered list of checks plus informational facts that do not affect the verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    pub facts: Vec<(String, String)>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report { title: title.into(), ..Report::default() }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) -> bool {
        self.checks.push(Check { name: name.into(), passed, detail: None });
        passed
    }

    pub fn check_with(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        let detail = Some(detail.into()).filter(|d: &String| !d.is_empty());
        self.checks.push(Check { name: name.into(), passed, detail });
        passed
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.facts.push((key.into(), value.into()));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Appends all checks of `other`, prefixing their names. A bare prefix such as `V_B` is
    /// joined with `": "`; one that already ends in a space is used verbatim.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        let prefix = if prefix.is_empty() || prefix.ends_with(' ') { prefix.to_string() } else { format!("{prefix}: ") };
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
        for (k, v) in other.facts {
            self.facts.push((format!("{prefix}{k}"), v));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}] {}", self.title, if self.passed() { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            write!(f, "  {} {}", if c.passed { "ok  " } else { "FAIL" }, c.name)?;
            if let Some(d) = &c.detail {
                write!(f, ": {d}")?;
            }
            writeln!(f)?;
        }
        for (k, v) in &self.facts {
            writeln!(f, "  - {k}: {v}")?;
        }
        Ok(())
    }
}
