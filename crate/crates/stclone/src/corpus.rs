//! Corpus ingestion: directory walking, include/exclude filtering, and
//! extension-based language routing.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use globset::{Glob, GlobSet, GlobSetBuilder};
use rayon::prelude::*;
use thiserror::Error;
use walkdir::WalkDir;

use crate::lang::LanguageId;

/// Extension to language routing, overridable per extension.
#[derive(Debug, Clone)]
pub struct LanguageMap {
    map: BTreeMap<String, LanguageId>,
    /// Language assigned to unmapped extensions; unmapped files are skipped
    /// when unset.
    pub default: Option<LanguageId>,
}

impl Default for LanguageMap {
    fn default() -> Self {
        let mut map = BTreeMap::new();
        for ext in ["st", "pou", "exp", "iec"] {
            map.insert(ext.to_string(), LanguageId::St);
        }
        for ext in ["c", "h", "cpp", "hpp", "cc"] {
            map.insert(ext.to_string(), LanguageId::Cpp);
        }
        LanguageMap { map, default: None }
    }
}

impl LanguageMap {
    pub fn set(&mut self, extension: &str, language: LanguageId) {
        self.map.insert(extension.trim_start_matches('.').to_ascii_lowercase(), language);
    }

    /// Parses an `EXT=LANG` mapping override.
    pub fn parse_override(spec: &str) -> Result<(String, LanguageId), String> {
        let (ext, lang) = spec
            .split_once('=')
            .ok_or_else(|| format!("expected EXT=LANG, got {spec:?}"))?;
        let language = LanguageId::parse(lang)
            .ok_or_else(|| format!("unknown language {lang:?} in {spec:?}"))?;
        Ok((ext.trim_start_matches('.').to_ascii_lowercase(), language))
    }

    pub fn language_for(&self, path: &Path) -> Option<LanguageId> {
        path.extension()
            .and_then(|e| e.to_str())
            .and_then(|e| self.map.get(&e.to_ascii_lowercase()).copied())
            .or(self.default)
    }
}

/// What to walk and how to filter it.
#[derive(Debug, Clone, Default)]
pub struct CorpusSpec {
    pub roots: Vec<PathBuf>,
    /// Include globs over root-relative paths; empty means everything.
    pub include: Vec<String>,
    pub exclude: Vec<String>,
    pub languages: LanguageMap,
    /// Fail on the first unreadable or non-UTF-8 file instead of skipping.
    pub strict: bool,
}

/// One loaded source file with its routed language.
#[derive(Debug, Clone)]
pub struct SourceFile {
    /// Display path with forward slashes (root-joined).
    pub path: String,
    pub language: LanguageId,
    pub text: String,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("unreadable root {path}: {source}")]
    Root {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("bad glob pattern {pattern:?}: {message}")]
    Pattern { pattern: String, message: String },
    #[error("unreadable input {path}: {message}")]
    File { path: String, message: String },
}

/// Loaded corpus plus skip warnings (used when not strict).
#[derive(Debug, Default)]
pub struct LoadOutcome {
    pub files: Vec<SourceFile>,
    pub warnings: Vec<String>,
}

fn build_globset(patterns: &[String]) -> Result<Option<GlobSet>, LoadError> {
    if patterns.is_empty() {
        return Ok(None);
    }
    let mut builder = GlobSetBuilder::new();
    for pattern in patterns {
        let glob = Glob::new(pattern).map_err(|e| LoadError::Pattern {
            pattern: pattern.clone(),
            message: e.to_string(),
        })?;
        builder.add(glob);
    }
    builder
        .build()
        .map(Some)
        .map_err(|e| LoadError::Pattern { pattern: String::new(), message: e.to_string() })
}

fn slash(path: &Path) -> String {
    path.to_string_lossy().replace('\\', "/")
}

/// Walks the roots and loads every routed, filtered file as UTF-8.
///
/// Files are returned in path-sorted order; files appearing under several
/// roots are loaded once. Unreadable or non-UTF-8 files are skipped with a
/// warning unless `strict` is set.
pub fn load_corpus(spec: &CorpusSpec) -> Result<LoadOutcome, LoadError> {
    let include = build_globset(&spec.include)?;
    let exclude = build_globset(&spec.exclude)?;

    let mut candidates: Vec<(String, LanguageId)> = Vec::new();
    let mut warnings = Vec::new();
    let mut seen: BTreeMap<PathBuf, ()> = BTreeMap::new();
    for root in &spec.roots {
        fs::metadata(root).map_err(|e| LoadError::Root { path: slash(root), source: e })?;
        for entry in WalkDir::new(root).follow_links(false).sort_by_file_name() {
            let entry = match entry {
                Ok(entry) => entry,
                Err(e) => {
                    if spec.strict {
                        return Err(LoadError::File {
                            path: e.path().map(slash).unwrap_or_default(),
                            message: e.to_string(),
                        });
                    }
                    warnings.push(format!("skipping unreadable entry: {e}"));
                    continue;
                }
            };
            if !entry.file_type().is_file() {
                continue;
            }
            let rel = entry.path().strip_prefix(root).unwrap_or(entry.path());
            let rel_str = slash(rel);
            if let Some(include) = &include {
                if !include.is_match(&rel_str) {
                    continue;
                }
            }
            if let Some(exclude) = &exclude {
                if exclude.is_match(&rel_str) {
                    continue;
                }
            }
            let Some(language) = spec.languages.language_for(entry.path()) else {
                continue;
            };
            let canonical = entry.path().canonicalize().unwrap_or_else(|_| entry.path().to_path_buf());
            if seen.insert(canonical, ()).is_none() {
                candidates.push((slash(entry.path()), language));
            }
        }
    }
    candidates.sort();

    let loaded: Vec<Result<SourceFile, String>> = candidates
        .par_iter()
        .map(|(path, language)| {
            let bytes = fs::read(path).map_err(|e| format!("{path}: {e}"))?;
            let text = String::from_utf8(bytes).map_err(|_| format!("{path}: not valid UTF-8"))?;
            Ok(SourceFile { path: path.clone(), language: *language, text })
        })
        .collect();

    let mut files = Vec::with_capacity(loaded.len());
    for result in loaded {
        match result {
            Ok(file) => files.push(file),
            Err(message) if spec.strict => {
                return Err(LoadError::File { path: String::new(), message });
            }
            Err(message) => warnings.push(format!("skipping {message}")),
        }
    }
    Ok(LoadOutcome { files, warnings })
}
