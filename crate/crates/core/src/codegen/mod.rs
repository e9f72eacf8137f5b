//! Specialized solver source generation from text templates.
//!
//! Templates use `{{name}}` placeholders, a `{{#stages}}...{{/stages}}` loop
//! expanded once per stage, and `{{#variant NAME}}...{{/variant}}` sections
//! for the five driver variants.

mod emit;
mod render;
mod template;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

pub use emit::{
    generate_module_set, render_module_set, sha256_hex, Manifest, ManifestEntry, GENERATED_DIR, INDEX_FILE,
};
pub use render::{module_name, render_index, render_solver_source, type_name, GeneratedSolver};
pub use template::{Template, TemplateSet, GLOBAL_PLACEHOLDERS, STAGE_PLACEHOLDERS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodegenError {
    #[error("template {template}, byte {offset}: {message}")]
    Template {
        template: String,
        offset: usize,
        message: String,
    },
    #[error("{}: {message}", path.display())]
    Io { path: PathBuf, message: String },
    #[error("invalid tableau {0}")]
    InvalidTableau(String),
    #[error("duplicate method name: `{second}` clashes with `{first}`")]
    DuplicateMethod { first: String, second: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    AdaptiveTrajectory,
    AdaptiveLast,
    AdaptiveInfo,
    FixedTrajectory,
    FixedLast,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::AdaptiveTrajectory,
        Variant::AdaptiveLast,
        Variant::AdaptiveInfo,
        Variant::FixedTrajectory,
        Variant::FixedLast,
    ];
    pub const ADAPTIVE: [Variant; 3] = [
        Variant::AdaptiveTrajectory,
        Variant::AdaptiveLast,
        Variant::AdaptiveInfo,
    ];
    pub const FIXED: [Variant; 2] = [Variant::FixedTrajectory, Variant::FixedLast];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::AdaptiveTrajectory => "adaptive-trajectory",
            Variant::AdaptiveLast => "adaptive-last",
            Variant::AdaptiveInfo => "adaptive-info",
            Variant::FixedTrajectory => "fixed-trajectory",
            Variant::FixedLast => "fixed-last",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variant::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| s.to_string())
    }
}

/// Source of one driver variant of one method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedModule {
    pub method_name: String,
    pub variant: Variant,
    pub source: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::shipped_methods;

    #[test]
    fn shipped_set_has_ten_files_and_is_reproducible() {
        let dir = tempfile::tempdir().unwrap();
        let templates = TemplateSet::builtin();
        let first = generate_module_set(&shipped_methods(), dir.path(), &templates).unwrap();
        assert_eq!(first.entries.len(), 10);
        assert_eq!(first.methods().count(), 9);
        assert_eq!(first.index().unwrap().path, "generated/mod.rs");
        for e in &first.entries {
            let bytes = std::fs::read(dir.path().join(&e.path)).unwrap();
            assert_eq!(sha256_hex(&bytes), e.sha256);
        }
        let second = generate_module_set(&shipped_methods(), dir.path(), &templates).unwrap();
        assert_eq!(first.to_string(), second.to_string());
        let leftovers: Vec<_> = std::fs::read_dir(dir.path().join("generated"))
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .filter(|n| !n.ends_with(".rs"))
            .collect();
        assert!(leftovers.is_empty(), "{leftovers:?}");
    }

    #[test]
    fn empty_set_writes_only_the_index() {
        let dir = tempfile::tempdir().unwrap();
        let m = generate_module_set(&[], dir.path(), &TemplateSet::builtin()).unwrap();
        assert_eq!(m.methods().count(), 0);
        assert_eq!(m.entries.len(), 1);
        assert_eq!(
            std::fs::read_dir(dir.path().join("generated")).unwrap().count(),
            1
        );
    }

    #[test]
    fn duplicate_names_write_nothing() {
        let dir = tempfile::tempdir().unwrap();
        let dopri5 = shipped_methods()
            .into_iter()
            .find(|t| t.name() == "DOPRI5")
            .unwrap();
        let err =
            generate_module_set(&[dopri5.clone(), dopri5], dir.path(), &TemplateSet::builtin()).unwrap_err();
        assert!(matches!(err, CodegenError::DuplicateMethod { .. }), "{err}");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
    }

    #[test]
    fn unwritable_output_names_the_path() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        std::fs::write(&blocker, "").unwrap();
        let err = generate_module_set(&shipped_methods(), &blocker, &TemplateSet::builtin()).unwrap_err();
        assert!(
            matches!(err, CodegenError::Io { ref path, .. } if path.starts_with(&blocker)),
            "{err}"
        );
    }

    #[test]
    fn variant_names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(v.as_str().parse::<Variant>().unwrap(), v);
        }
        assert!("adaptive".parse::<Variant>().is_err());
    }
}
