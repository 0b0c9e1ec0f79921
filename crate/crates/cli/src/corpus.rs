//! Runs every instance file of a directory on a worker pool.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::run::{run_source, InstanceReport, RunConfig, Selection};

pub const EXTENSION: &str = "fl";

/// Instance files directly inside `dir`, sorted by path.
pub fn instance_files(dir: &Path) -> io::Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == EXTENSION) {
            out.push(path);
        }
    }
    out.sort();
    Ok(out)
}

fn run_file(dir: &Path, path: &Path, cfg: &RunConfig) -> InstanceReport {
    let label = path.strip_prefix(dir).unwrap_or(path).to_string_lossy().replace('\\', "/");
    match fs::read_to_string(path) {
        Ok(text) => run_source(&label, &text, cfg, &Selection::default()),
        Err(e) => InstanceReport {
            path: label,
            digest: String::new(),
            parse_error: Some(format!("cannot read file: {e}")),
            outcomes: Vec::new(),
        },
    }
}

/// Reports in path order. `jobs = 0` lets the pool pick a size.
pub fn corpus_run(dir: &Path, jobs: usize, cfg: &RunConfig) -> io::Result<Vec<InstanceReport>> {
    let files = instance_files(dir)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(io::Error::other)?;
    Ok(pool.install(|| files.par_iter().map(|p| run_file(dir, p, cfg)).collect()))
}
