//! Run reports.
//!
//! The `report` format is line based and deterministic:
//!
//! ```text
//! command: <subcommand and arguments>
//! input <name>: sha256:<first 16 hex digits>
//! result <key>: <value>
//! check <name>: pass|fail <passed>/<total>
//! note: <free text>
//! status: pass|fail
//! ```
//!
//! Rationals are printed as `p/q` (or `p` when integral) and matrices as
//! `[row; row]`. The `table` format shows the same content as aligned
//! columns for reading.

use std::fmt::Write as _;

use clap::ValueEnum;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Report,
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: usize,
    pub total: usize,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub results: Vec<(String, String)>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let hex: String = hash.iter().take(8).map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport { command: command.into(), ..Default::default() }
    }

    pub fn input(&mut self, name: impl Into<String>, bytes: &[u8]) {
        self.inputs.push((name.into(), digest(bytes)));
    }

    pub fn result(&mut self, key: impl Into<String>, value: impl ToString) {
        self.results.push((key.into(), value.to_string()));
    }

    pub fn check(&mut self, name: impl Into<String>, passed: usize, total: usize) {
        self.checks.push(Check { name: name.into(), passed, total });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Report => self.render_report(),
            Format::Table => self.render_table(),
        }
    }

    fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    fn render_report(&self) -> String {
        let mut s = String::new();
        writeln!(s, "command: {}", self.command).unwrap();
        for (name, d) in &self.inputs {
            writeln!(s, "input {name}: {d}").unwrap();
        }
        for (k, v) in &self.results {
            writeln!(s, "result {k}: {v}").unwrap();
        }
        for c in &self.checks {
            writeln!(s, "check {}: {} {}/{}", c.name, if c.ok() { "pass" } else { "fail" }, c.passed, c.total).unwrap();
        }
        for n in &self.notes {
            writeln!(s, "note: {n}").unwrap();
        }
        writeln!(s, "status: {}", self.status()).unwrap();
        s
    }

    fn render_table(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![("command".into(), self.command.clone())];
        rows.extend(self.inputs.iter().map(|(n, d)| (format!("input {n}"), d.clone())));
        rows.extend(self.results.iter().cloned());
        rows.extend(
            self.checks
                .iter()
                .map(|c| (c.name.clone(), format!("{:<4} {}/{}", if c.ok() { "ok" } else { "FAIL" }, c.passed, c.total))),
        );
        rows.extend(self.notes.iter().map(|n| ("note".to_string(), n.clone())));
        rows.push(("status".into(), self.status().into()));
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut s = String::new();
        for (k, v) in rows {
            writeln!(s, "{k:<width$} | {v}").unwrap();
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_lists_every_part_in_order() {
        let mut r = RunReport::new("center clifford1");
        r.input("algebra", b"abc");
        r.result("dims", "1 1");
        r.check("closed family", 3, 3);
        let text = r.render(Format::Report);
        assert_eq!(
            text,
            "command: center clifford1\ninput algebra: sha256:ba7816bf8f01cfea\nresult dims: 1 1\n\
             check closed family: pass 3/3\nstatus: pass\n"
        );
        r.check("broken", 0, 1);
        assert!(r.render(Format::Table).ends_with("status        | fail\n"));
    }
}
