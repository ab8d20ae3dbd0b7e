//! Running a batch job from a JSON config without the binary.

use psc_core::cli::{run, JobConfig, JobKind};

fn main() -> psc_core::Result<()> {
    let cfg = JobConfig::from_json(r#"{"cocycle": {"p": 2, "q": 3, "a": "1", "b": "0", "c": "0", "d": "1"}, "window": 12}"#)?;
    let out = run(JobKind::CocycleBichar, &cfg, Some(5))?;
    println!("{}", out.report.summary());
    println!("{}", serde_json::to_string_pretty(&out.report)?);
    Ok(())
}
