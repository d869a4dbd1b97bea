//! Support code for the `voterank` command-line tool: experiment files,
//! seed-file parsing and output sinks.

pub mod experiment;

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use voterank::Graph;

/// A buffered file, or stdout when `path` is `None`.
pub fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?))
        }
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

/// Reads seed nodes by label. Accepts a spreader CSV with a `node_label`
/// column, or one label per line (`#` comments and blank lines skipped).
pub fn read_seeds(g: &Graph, path: &Path) -> Result<Vec<usize>> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let mut lines = BufReader::new(file).lines();
    let mut labels = Vec::new();
    let first = match lines.next() {
        Some(line) => line?,
        None => bail!("seed file {} is empty", path.display()),
    };
    let header: Vec<&str> = first.split(',').map(str::trim).collect();
    if let Some(col) = header.iter().position(|&h| h == "node_label") {
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let field = line.split(',').nth(col).with_context(|| format!("short row {line:?}"))?;
            labels.push(field.trim().to_string());
        }
    } else {
        for line in std::iter::once(Ok(first)).chain(lines) {
            let line = line?;
            let line = line.trim();
            if !line.is_empty() && !line.starts_with('#') {
                labels.push(line.to_string());
            }
        }
    }
    if labels.is_empty() {
        bail!("seed file {} lists no nodes", path.display());
    }
    let index = g.label_index();
    labels
        .iter()
        .map(|l| index.get(l.as_str()).copied().with_context(|| format!("seed {l:?} is not a node of the graph")))
        .collect()
}
