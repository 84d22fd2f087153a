//! Run a job the way the command line does, then summarise the JSONL report.

use std::path::Path;

use homlab::cli::{execute, report_summary, write_records, Command, JobConfig};

fn main() -> homlab::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let dir = std::env::temp_dir().join("homlab-example");
    let out = dir.join("report.jsonl");
    let _ = std::fs::remove_file(&out);

    let mut cfg = JobConfig::new(Command::Verify);
    cfg.algebra = Some(data.join("k2x3.json"));
    cfg.predicates = vec!["thm4.6".into(), "thm4.7".into(), "gnc_bounded".into()];
    cfg.exhaustive = true;
    cfg.bound = 3;
    cfg.out = Some(out.clone());
    let outcome = execute(&cfg)?;
    write_records(&outcome.records, Some(&out))?;
    println!("exit status {}", outcome.status.code());
    print!("{}", report_summary(&out)?.render());
    Ok(())
}
