use std::collections::BTreeMap;
use std::fmt;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::render::{module_name, render_index, render_solver_source};
use super::{CodegenError, TemplateSet};
use crate::tableau::ButcherTableau;

pub const GENERATED_DIR: &str = "generated";
pub const INDEX_FILE: &str = "mod.rs";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    /// `None` for the index file.
    pub method: Option<String>,
    /// Relative to the output directory, `/`-separated.
    pub path: String,
    pub sha256: String,
}

/// Files written by one generator run: method files in input order, then
/// the index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn methods(&self) -> impl Iterator<Item = &ManifestEntry> {
        self.entries.iter().filter(|e| e.method.is_some())
    }

    pub fn index(&self) -> Option<&ManifestEntry> {
        self.entries.iter().find(|e| e.method.is_none())
    }
}

impl fmt::Display for Manifest {
    /// One `<relative-path> <sha256-hex>` line per file.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{} {}", e.path, e.sha256)?;
        }
        Ok(())
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Renders every method and the index without touching the file system.
/// Keys are paths relative to the output directory.
pub fn render_module_set(
    methods: &[ButcherTableau],
    templates: &TemplateSet,
) -> Result<Vec<(Option<String>, String, String)>, CodegenError> {
    let mut seen = BTreeMap::new();
    for t in methods {
        if let Some(first) = seen.insert(module_name(t.name()), t.name()) {
            return Err(CodegenError::DuplicateMethod {
                first: first.to_string(),
                second: t.name().to_string(),
            });
        }
    }
    let solvers = methods
        .iter()
        .map(|t| render_solver_source(t, templates))
        .collect::<Result<Vec<_>, _>>()?;
    let mut files: Vec<_> = solvers
        .iter()
        .map(|s| {
            (
                Some(s.method_name.clone()),
                format!("{GENERATED_DIR}/{}.rs", s.module_name),
                s.file_source(),
            )
        })
        .collect();
    files.push((
        None,
        format!("{GENERATED_DIR}/{INDEX_FILE}"),
        render_index(&solvers),
    ));
    Ok(files)
}

fn io_error(path: &Path, e: std::io::Error) -> CodegenError {
    CodegenError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    }
}

/// Writes `bytes` to a temporary sibling of `path`, then renames it over `path`.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CodegenError> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| io_error(path, e))?;
    tmp.write_all(bytes).map_err(|e| io_error(path, e))?;
    tmp.as_file().sync_all().map_err(|e| io_error(path, e))?;
    tmp.persist(path).map_err(|e| io_error(path, e.error))?;
    Ok(())
}

/// Writes one source file per method plus the index under
/// `out_dir/generated`. Every tableau is rendered before the first write,
/// so invalid input leaves the directory untouched.
pub fn generate_module_set(
    methods: &[ButcherTableau],
    out_dir: &Path,
    templates: &TemplateSet,
) -> Result<Manifest, CodegenError> {
    let files = render_module_set(methods, templates)?;
    let dir: PathBuf = out_dir.join(GENERATED_DIR);
    std::fs::create_dir_all(&dir).map_err(|e| io_error(&dir, e))?;
    let mut entries = Vec::with_capacity(files.len());
    for (method, rel, source) in files {
        write_atomic(&out_dir.join(&rel), source.as_bytes())?;
        entries.push(ManifestEntry {
            method,
            path: rel,
            sha256: sha256_hex(source.as_bytes()),
        });
    }
    Ok(Manifest { entries })
}
