//! Artifact serialization. CSV files start with a `# schema_version=N` line;
//! JSON files wrap their payload as `{schema_version, artifact, scenario, data}`.

use std::io::Write;
use std::path::Path;

use anyhow::Context;
use serde::Serialize;

use crate::config::SCHEMA_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    artifact: &'a str,
    scenario: &'a str,
    data: &'a T,
}

pub fn csv_bytes<T: Serialize>(rows: &[T]) -> anyhow::Result<Vec<u8>> {
    let mut out = format!("# schema_version={SCHEMA_VERSION}\n").into_bytes();
    let mut w = csv::Writer::from_writer(&mut out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    drop(w);
    Ok(out)
}

pub fn json_bytes<T: Serialize>(artifact: &str, scenario: &str, data: &T) -> anyhow::Result<Vec<u8>> {
    let env = Envelope { schema_version: SCHEMA_VERSION, artifact, scenario, data };
    let mut s = serde_json::to_vec_pretty(&env)?;
    s.push(b'\n');
    Ok(s)
}

pub fn write_file(dir: &Path, name: &str, bytes: &[u8]) -> anyhow::Result<()> {
    let path = dir.join(name);
    std::fs::write(&path, bytes).with_context(|| format!("writing {}", path.display()))
}

pub fn stdout(bytes: &[u8]) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(bytes)?;
    out.flush()?;
    Ok(())
}
