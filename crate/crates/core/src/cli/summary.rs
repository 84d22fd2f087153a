//! Human-readable digest of a JSONL report.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::Value;

use super::ReportRecord;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct Summary {
    pub lines: Vec<String>,
    /// Malformed lines, 1-based, with the parse error.
    pub malformed: Vec<(usize, String)>,
    /// Some record reports a violation or candidate.
    pub findings: bool,
}

impl Summary {
    pub fn render(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            let _ = writeln!(s, "{l}");
        }
        for (n, e) in &self.malformed {
            let _ = writeln!(s, "line {n}: malformed record: {e}");
        }
        s
    }
}

fn count(v: &Value, key: &str) -> u64 {
    v[key].as_u64().unwrap_or(0)
}

fn suite_line(r: &ReportRecord, p: &Value, witness_dir: &Path) -> (Vec<String>, bool) {
    let pred = p["predicate"].as_str().unwrap_or("?");
    let head = format!(
        "{pred:<18} checked {:>6}  premises {:>5}  violations {:>3}  caveats {}",
        count(p, "modules_checked"),
        count(p, "premises_satisfied"),
        count(p, "violations"),
        r.caveats.len(),
    );
    if p["applicable"] == Value::Bool(false) {
        return (vec![format!("{head}  NOT APPLICABLE")], false);
    }
    let witnesses = p["witnesses"].as_array().cloned().unwrap_or_default();
    let verdict = if count(p, "violations") > 0 {
        "VIOLATION".to_string()
    } else if count(p, "candidates") > 0 {
        let bounded = witnesses.iter().any(|w| w["certification"] == "bounded");
        if bounded { "CANDIDATE (bounded)" } else { "CANDIDATE (exact)" }.to_string()
    } else {
        "OK".to_string()
    };
    let findings = verdict != "OK";
    let mut out = vec![format!("{head}  {verdict}")];
    for w in witnesses {
        let hash = w["content_hash"].as_str().unwrap_or("?");
        out.push(format!(
            "    {} witness: {}",
            w["kind"].as_str().unwrap_or("?"),
            witness_dir.join(format!("{hash}.json")).display()
        ));
    }
    (out, findings)
}

/// Summarise the records in `path`; malformed lines are reported and skipped.
pub fn report_summary(path: &Path) -> Result<Summary> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let witness_dir = path.parent().unwrap_or(Path::new(""));
    let mut s = Summary::default();
    let mut records = 0;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let r: ReportRecord = match serde_json::from_str(line) {
            Ok(r) => r,
            Err(e) => {
                s.malformed.push((i + 1, e.to_string()));
                continue;
            }
        };
        records += 1;
        let p = &r.payload;
        if p.get("predicate").is_some() {
            let (lines, findings) = suite_line(&r, p, witness_dir);
            s.lines.extend(lines);
            s.findings |= findings;
        } else {
            let kind = p["kind"].as_str().unwrap_or("record");
            let note = if r.caveats.is_empty() { "OK".to_string() } else { r.caveats.join("; ") };
            s.lines.push(format!("{kind:<18} {note}"));
        }
    }
    if records == 0 {
        s.lines.push("no records".into());
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::{Command, JobConfig};
    use serde_json::json;

    fn rec(payload: Value, caveats: Vec<String>) -> String {
        let r = ReportRecord {
            schema_version: "1".into(),
            timestamp: "2026-01-01T00:00:00Z".into(),
            job: JobConfig::new(Command::Verify),
            algebra_hash: "h".into(),
            algebra: json!({}),
            payload,
            caveats,
        };
        serde_json::to_string(&r).unwrap()
    }

    fn summarise(text: &str) -> Summary {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.jsonl");
        std::fs::write(&path, text).unwrap();
        report_summary(&path).unwrap()
    }

    #[test]
    fn clean_report_is_ok() {
        let p = json!({"predicate": "thm3.4", "applicable": true, "modules_checked": 11, "premises_satisfied": 1,
                       "violations": 0, "candidates": 0, "witnesses": []});
        let s = summarise(&(rec(p, vec![]) + "\n"));
        assert!(s.lines[0].ends_with("OK"));
        assert!(!s.findings);
    }

    #[test]
    fn bounded_candidate_is_flagged() {
        let p = json!({"predicate": "gnc_bounded", "applicable": true, "modules_checked": 4, "premises_satisfied": 1,
                       "violations": 0, "candidates": 1,
                       "witnesses": [{"kind": "candidate", "content_hash": "abc", "certification": "bounded"}]});
        let s = summarise(&rec(p, vec!["bounded".into()]));
        assert!(s.lines[0].contains("CANDIDATE (bounded)"));
        assert!(s.lines[1].contains("abc.json"));
        assert!(s.findings);
    }

    #[test]
    fn empty_and_malformed() {
        assert_eq!(summarise("").lines, vec!["no records"]);
        let good = rec(json!({"kind": "ext"}), vec![]);
        let s = summarise(&format!("{{oops\n{good}\nnot json\n"));
        assert_eq!(s.malformed.iter().map(|m| m.0).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(s.lines.len(), 1);
        assert!(s.render().contains("line 3: malformed record"));
    }
}
