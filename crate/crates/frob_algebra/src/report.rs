use std::fmt;

/// Outcome of one instance of one relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub relation: String,
    pub at: String,
    pub passed: bool,
    /// Both sides, rendered, when the check failed.
    pub witness: Option<(String, String)>,
}

/// A list of relation checks, grouped under a title.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub title: String,
    pub entries: Vec<CheckEntry>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), entries: Vec::new() }
    }

    pub fn check_eq<T: PartialEq + fmt::Debug>(&mut self, relation: &str, at: impl Into<String>, lhs: &T, rhs: &T) -> bool {
        let passed = lhs == rhs;
        self.entries.push(CheckEntry {
            relation: relation.to_string(),
            at: at.into(),
            passed,
            witness: (!passed).then(|| (format!("{lhs:?}"), format!("{rhs:?}"))),
        });
        passed
    }

    pub fn record(&mut self, relation: &str, at: impl Into<String>, passed: bool, detail: Option<String>) {
        self.entries.push(CheckEntry {
            relation: relation.to_string(),
            at: at.into(),
            passed,
            witness: detail.map(|d| (d, String::new())),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    /// Relation names in first-seen order with pass and total counts.
    pub fn summary(&self) -> Vec<(String, usize, usize)> {
        let mut out: Vec<(String, usize, usize)> = Vec::new();
        for e in &self.entries {
            match out.iter_mut().find(|(n, _, _)| *n == e.relation) {
                Some(row) => {
                    row.1 += usize::from(e.passed);
                    row.2 += 1;
                }
                None => out.push((e.relation.clone(), usize::from(e.passed), 1)),
            }
        }
        out
    }

    pub fn failed_relations(&self) -> Vec<String> {
        self.summary().into_iter().filter(|(_, p, t)| p != t).map(|(n, _, _)| n).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.title, if self.passed() { "pass" } else { "FAIL" })?;
        for (name, p, t) in self.summary() {
            writeln!(f, "  {:<24} {p}/{t}", name)?;
        }
        for e in self.failures().take(5) {
            writeln!(f, "  failed {} at {}", e.relation, e.at)?;
            if let Some((l, r)) = &e.witness {
                writeln!(f, "    lhs {l}")?;
                if !r.is_empty() {
                    writeln!(f, "    rhs {r}")?;
                }
            }
        }
        Ok(())
    }
}
