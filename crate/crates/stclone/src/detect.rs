//! Clone detection over significant-line sequences.
//!
//! Matching is index-based: line texts are interned corpus-wide (per
//! language), positions are grouped by symbol, and maximal runs grow from
//! seed pairs whose previous positions differ. Equal symbols mean equal
//! normalized text by construction, so hash collisions cannot produce a
//! false match.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::lang::{LanguageId, LanguageProfile};
use crate::normalize::{
    fingerprint_bytes, significant_lines_filtered, NormalizationOptions, SignificantLine,
};

/// Detector configuration. Defaults follow the study setup: minimum clone
/// length of 5 significant lines, overlapping clones allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetectionConfig {
    pub options: NormalizationOptions,
    pub min_lines: usize,
    pub allow_overlap: bool,
    pub ignore_punct_lines: bool,
    /// Per-fingerprint seed cap for degenerate corpora where one line text
    /// occurs extremely often (for example brace-only lines). `None` seeds
    /// every pair.
    pub seed_cap: Option<usize>,
}

impl Default for DetectionConfig {
    fn default() -> Self {
        DetectionConfig {
            options: NormalizationOptions::none(),
            min_lines: 5,
            allow_overlap: true,
            ignore_punct_lines: false,
            seed_cap: None,
        }
    }
}

/// One lexed source file of the corpus.
#[derive(Debug, Clone)]
pub struct CorpusFile {
    pub file_id: usize,
    pub path: String,
    pub language: LanguageId,
    /// Significant lines, strictly increasing in `original_line`.
    pub lines: Vec<SignificantLine>,
}

impl CorpusFile {
    pub fn new(
        file_id: usize,
        path: impl Into<String>,
        language: LanguageId,
        lines: Vec<SignificantLine>,
    ) -> CorpusFile {
        debug_assert!(lines.windows(2).all(|w| w[0].original_line < w[1].original_line));
        CorpusFile { file_id, path: path.into(), language, lines }
    }

    /// Lexes and normalizes `file_text` according to the config.
    pub fn from_source(
        file_id: usize,
        path: impl Into<String>,
        language: LanguageId,
        file_text: &str,
        config: &DetectionConfig,
    ) -> CorpusFile {
        let profile = LanguageProfile::for_language(language);
        let lines = significant_lines_filtered(
            file_text,
            &profile,
            config.options,
            config.ignore_punct_lines,
        );
        CorpusFile::new(file_id, path, language, lines)
    }

    pub fn total_significant(&self) -> usize {
        self.lines.len()
    }
}

/// A block of consecutive significant lines of one file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Block {
    pub file_id: usize,
    /// 1-based inclusive original line range.
    pub start_line: u32,
    pub end_line: u32,
    /// Number of significant lines covered.
    pub sig_count: usize,
    /// Index of the first covered line in the file's significant-line list.
    pub sig_start: usize,
}

impl Block {
    /// Range of covered indexes into the file's significant-line list.
    pub fn sig_range(&self) -> std::ops::Range<usize> {
        self.sig_start..self.sig_start + self.sig_count
    }
}

/// Two blocks equal under the configured similarity operator, ordered by
/// `(file_id, start_line)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClonePair {
    pub a: Block,
    pub b: Block,
}

/// An equivalence class of blocks sharing one normalized-line sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CloneClass {
    pub class_id: usize,
    /// Digest of the class's line-fingerprint sequence.
    pub sequence_key: u64,
    /// Significant lines per block (equal across blocks).
    pub sig_count: usize,
    /// At least two blocks, sorted by corpus order and start line.
    pub blocks: Vec<Block>,
}

impl CloneClass {
    /// All block pairs of the class in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = ClonePair> + '_ {
        self.blocks.iter().enumerate().flat_map(move |(i, a)| {
            self.blocks[i + 1..].iter().map(move |b| ClonePair { a: *a, b: *b })
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DetectError {
    #[error("corpus has no significant lines")]
    EmptyCorpus,
}

/// A maximal matching window between two sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct MatchRun {
    pub offset_a: usize,
    pub offset_b: usize,
    pub len: usize,
}

/// Finds all maximal runs of equal consecutive values of length at least
/// `min_lines`.
///
/// A run is maximal when extending it one position up or down breaks
/// equality or a sequence boundary. With `same_sequence` the two slices are
/// the same sequence and only runs with `offset_a < offset_b` are reported.
///
/// Values must already be collision-free (the detector passes interned
/// text symbols, so equality is literal text equality).
pub fn find_maximal_runs<T: Eq + std::hash::Hash>(
    seq_a: &[T],
    seq_b: &[T],
    min_lines: usize,
    same_sequence: bool,
) -> Vec<MatchRun> {
    assert!(min_lines >= 1, "min_lines must be at least 1");
    let mut by_value: HashMap<&T, Vec<usize>> = HashMap::new();
    for (j, v) in seq_b.iter().enumerate() {
        by_value.entry(v).or_default().push(j);
    }
    let mut runs = Vec::new();
    for (i, v) in seq_a.iter().enumerate() {
        let Some(bs) = by_value.get(v) else { continue };
        for &j in bs {
            if same_sequence && j <= i {
                continue;
            }
            if i > 0 && j > 0 && seq_a[i - 1] == seq_b[j - 1] {
                continue; // interior of a longer run
            }
            let mut len = 0;
            while i + len < seq_a.len() && j + len < seq_b.len() && seq_a[i + len] == seq_b[j + len]
            {
                len += 1;
            }
            if len >= min_lines {
                runs.push(MatchRun { offset_a: i, offset_b: j, len });
            }
        }
    }
    runs.sort_unstable();
    runs
}

/// Internal run between two corpus files (indexes into the corpus slice).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct RawRun {
    file_a: usize,
    a: usize,
    file_b: usize,
    b: usize,
    len: usize,
}

impl RawRun {
    fn a_iv(&self) -> (usize, usize) {
        (self.a, self.a + self.len)
    }
    fn b_iv(&self) -> (usize, usize) {
        (self.b, self.b + self.len)
    }
}

fn proper_subset(inner: (usize, usize), outer: (usize, usize)) -> bool {
    outer.0 <= inner.0 && inner.1 <= outer.1 && inner != outer
}

/// Finds every maximal duplicated run of at least `config.min_lines`
/// significant lines between any two corpus files (or within one file) and
/// groups the surviving blocks into clone classes.
///
/// Runs whose intervals are both strictly contained in another run between
/// the same two regions are subsumed. Files of different languages never
/// match. Output order is canonical: descending block length, then path and
/// start line of the first block.
pub fn detect(
    corpus: &[CorpusFile],
    config: &DetectionConfig,
) -> Result<Vec<CloneClass>, DetectError> {
    assert!(config.min_lines >= 1, "min_lines must be at least 1");
    if corpus.iter().map(CorpusFile::total_significant).sum::<usize>() == 0 {
        return Err(DetectError::EmptyCorpus);
    }

    // Intern normalized texts, per language so profiles never compare.
    let mut intern: HashMap<(LanguageId, &str), u32> = HashMap::new();
    let mut syms: Vec<Vec<u32>> = Vec::with_capacity(corpus.len());
    for file in corpus {
        let seq = file
            .lines
            .iter()
            .map(|line| {
                let next = intern.len() as u32;
                *intern
                    .entry((file.language, line.normalized_text.as_str()))
                    .or_insert(next)
            })
            .collect();
        syms.push(seq);
    }

    // Positions per symbol, in (file, index) order.
    let mut positions: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (f, seq) in syms.iter().enumerate() {
        for (idx, &sym) in seq.iter().enumerate() {
            positions.entry(sym).or_default().push((f, idx));
        }
    }

    let mut runs: Vec<RawRun> = Vec::new();
    let mut capped_buckets = 0usize;
    for bucket in positions.values() {
        if bucket.len() < 2 {
            continue;
        }
        let seeds = match config.seed_cap {
            Some(cap) if bucket.len() > cap => {
                capped_buckets += 1;
                &bucket[..cap]
            }
            _ => &bucket[..],
        };
        for (x, &(fa, a)) in seeds.iter().enumerate() {
            for &(fb, b) in &seeds[x + 1..] {
                if a > 0 && b > 0 && syms[fa][a - 1] == syms[fb][b - 1] {
                    continue;
                }
                let (sa, sb) = (&syms[fa], &syms[fb]);
                let mut len = 0;
                while a + len < sa.len() && b + len < sb.len() && sa[a + len] == sb[b + len] {
                    len += 1;
                }
                if len >= config.min_lines {
                    runs.push(RawRun { file_a: fa, a, file_b: fb, b, len });
                }
            }
        }
    }
    runs.sort_unstable();
    if capped_buckets > 0 {
        eprintln!(
            "warning: seed cap {} truncated candidate seeding for {} repeated line text(s); \
             some clones of those lines may go unreported",
            config.seed_cap.unwrap_or(0),
            capped_buckets
        );
    }

    // Subsumption, per file pair.
    let mut by_pair: BTreeMap<(usize, usize), Vec<RawRun>> = BTreeMap::new();
    for run in runs {
        by_pair.entry((run.file_a, run.file_b)).or_default().push(run);
    }
    let mut kept: Vec<RawRun> = Vec::new();
    for group in by_pair.values() {
        for run in group {
            let subsumed = group.iter().any(|other| {
                proper_subset(run.a_iv(), other.a_iv()) && proper_subset(run.b_iv(), other.b_iv())
            });
            if !subsumed {
                kept.push(*run);
            }
        }
    }

    // Classes keyed by the exact symbol sequence.
    let mut class_blocks: HashMap<Vec<u32>, BTreeSet<(usize, usize, usize)>> = HashMap::new();
    for run in &kept {
        let key: Vec<u32> = syms[run.file_a][run.a..run.a + run.len].to_vec();
        let entry = class_blocks.entry(key).or_default();
        entry.insert((run.file_a, run.a, run.len));
        entry.insert((run.file_b, run.b, run.len));
    }

    // Optionally prune overlapping blocks within each file, longest first.
    let pruned: BTreeSet<(usize, usize, usize)> = if config.allow_overlap {
        BTreeSet::new()
    } else {
        prune_overlaps(&class_blocks)
    };

    let mut classes: Vec<CloneClass> = Vec::new();
    for (key, blocks) in &class_blocks {
        let mut blocks: Vec<Block> = blocks
            .iter()
            .filter(|b| !pruned.contains(b))
            .map(|&(f, start, len)| {
                let file = &corpus[f];
                Block {
                    file_id: file.file_id,
                    start_line: file.lines[start].original_line,
                    end_line: file.lines[start + len - 1].original_line,
                    sig_count: len,
                    sig_start: start,
                }
            })
            .collect();
        blocks.sort_by_key(|b| (b.file_id, b.start_line));
        if blocks.len() < 2 {
            continue;
        }
        verify_class_texts(corpus, &blocks);
        let rep = &blocks[0];
        let rep_file = corpus.iter().position(|f| f.file_id == rep.file_id).unwrap();
        let sequence_key = sequence_digest(&corpus[rep_file].lines[rep.sig_range()]);
        classes.push(CloneClass {
            class_id: 0,
            sequence_key,
            sig_count: key.len(),
            blocks,
        });
    }

    classes.sort_by(|x, y| {
        y.sig_count
            .cmp(&x.sig_count)
            .then_with(|| {
                path_of(corpus, &x.blocks[0]).cmp(path_of(corpus, &y.blocks[0]))
            })
            .then_with(|| x.blocks[0].start_line.cmp(&y.blocks[0].start_line))
            .then_with(|| x.sequence_key.cmp(&y.sequence_key))
    });
    for (i, class) in classes.iter_mut().enumerate() {
        class.class_id = i + 1;
    }
    Ok(classes)
}

fn path_of<'a>(corpus: &'a [CorpusFile], block: &Block) -> &'a str {
    &corpus[corpus.iter().position(|f| f.file_id == block.file_id).unwrap()].path
}

/// Greedy non-overlap selection: longest block first, lowest start next.
fn prune_overlaps(
    class_blocks: &HashMap<Vec<u32>, BTreeSet<(usize, usize, usize)>>,
) -> BTreeSet<(usize, usize, usize)> {
    let mut all: Vec<(usize, usize, usize)> = class_blocks
        .values()
        .flat_map(|set| set.iter().copied())
        .collect();
    all.sort_unstable();
    all.dedup();
    all.sort_by(|&(fa, sa, la), &(fb, sb, lb)| {
        lb.cmp(&la).then(fa.cmp(&fb)).then(sa.cmp(&sb))
    });

    let mut kept_per_file: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    let mut pruned = BTreeSet::new();
    for (f, start, len) in all {
        let ivs = kept_per_file.entry(f).or_default();
        let end = start + len;
        if ivs.iter().any(|&(s, e)| start < e && s < end) {
            pruned.insert((f, start, len));
        } else {
            ivs.push((start, end));
        }
    }
    pruned
}

/// Literal text verification of class soundness (not digest-based).
fn verify_class_texts(corpus: &[CorpusFile], blocks: &[Block]) {
    let rep = &blocks[0];
    let rep_file = &corpus[corpus.iter().position(|f| f.file_id == rep.file_id).unwrap()];
    let rep_texts: Vec<&str> = rep_file.lines[rep.sig_range()]
        .iter()
        .map(|l| l.normalized_text.as_str())
        .collect();
    for block in &blocks[1..] {
        let file = &corpus[corpus.iter().position(|f| f.file_id == block.file_id).unwrap()];
        let texts = file.lines[block.sig_range()].iter().map(|l| l.normalized_text.as_str());
        assert!(
            texts.eq(rep_texts.iter().copied()),
            "clone class blocks disagree on normalized text"
        );
    }
}

fn sequence_digest(lines: &[SignificantLine]) -> u64 {
    let mut buf = Vec::with_capacity(lines.len() * 8);
    for line in lines {
        buf.extend_from_slice(&line.fingerprint.to_le_bytes());
    }
    fingerprint_bytes(&buf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::LanguageId;

    fn st_file(file_id: usize, path: &str, text: &str, config: &DetectionConfig) -> CorpusFile {
        CorpusFile::from_source(file_id, path, LanguageId::St, text, config)
    }

    fn runs(triples: &[(usize, usize, usize)]) -> Vec<MatchRun> {
        triples
            .iter()
            .map(|&(a, b, len)| MatchRun { offset_a: a, offset_b: b, len })
            .collect()
    }

    #[test]
    fn run_in_the_middle_of_two_sequences() {
        let a = [1u64, 2, 3, 4, 5, 6];
        let b = [9u64, 2, 3, 4, 5, 8];
        assert_eq!(find_maximal_runs(&a, &b, 4, false), runs(&[(1, 1, 4)]));
    }

    #[test]
    fn identical_sequences_give_one_full_run() {
        let a = [7u64, 8, 9, 10, 11];
        assert_eq!(find_maximal_runs(&a, &a, 5, false), runs(&[(0, 0, 5)]));
    }

    #[test]
    fn periodic_self_match_matches_brute_force_oracle() {
        // Frozen from the independent brute-force oracle (all offset pairs,
        // maximality by equality or boundary).
        let seq: Vec<u64> = "ababab".bytes().map(u64::from).collect();
        assert_eq!(find_maximal_runs(&seq, &seq, 2, true), runs(&[(0, 2, 4), (0, 4, 2)]));

        let seq: Vec<u64> = "aaaa".bytes().map(u64::from).collect();
        assert_eq!(find_maximal_runs(&seq, &seq, 2, true), runs(&[(0, 1, 3), (0, 2, 2)]));
    }

    #[test]
    fn below_min_lines_reports_nothing() {
        let a = [1u64, 2, 3, 4];
        assert!(find_maximal_runs(&a, &a, 5, false).is_empty());
    }

    #[test]
    fn random_sequences_match_brute_force_runs() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;

        // All offset pairs, maximality by equality or boundary.
        fn brute(a: &[u8], b: &[u8], min: usize, same: bool) -> Vec<MatchRun> {
            let mut runs = Vec::new();
            for i in 0..a.len() {
                for j in 0..b.len() {
                    if same && j <= i {
                        continue;
                    }
                    if a[i] != b[j] || (i > 0 && j > 0 && a[i - 1] == b[j - 1]) {
                        continue;
                    }
                    let mut len = 0;
                    while i + len < a.len() && j + len < b.len() && a[i + len] == b[j + len] {
                        len += 1;
                    }
                    if len >= min {
                        runs.push(MatchRun { offset_a: i, offset_b: j, len });
                    }
                }
            }
            runs
        }

        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let alphabet = rng.random_range(2..=5);
            let seq_a: Vec<u8> =
                (0..rng.random_range(5..40)).map(|_| rng.random_range(0..alphabet)).collect();
            let seq_b: Vec<u8> =
                (0..rng.random_range(5..40)).map(|_| rng.random_range(0..alphabet)).collect();
            let min = rng.random_range(1..=4);
            assert_eq!(
                find_maximal_runs(&seq_a, &seq_b, min, false),
                brute(&seq_a, &seq_b, min, false)
            );
            assert_eq!(
                find_maximal_runs(&seq_a, &seq_a, min, true),
                brute(&seq_a, &seq_a, min, true)
            );
        }
    }

    fn shared_five() -> &'static str {
        "a := 1;\nb := a + 2;\nc := b * b;\nd := c - a;\ne := d / 2;\n"
    }

    #[test]
    fn two_files_sharing_five_lines_form_one_class() {
        let config = DetectionConfig::default();
        let corpus = vec![
            st_file(0, "one.st", shared_five(), &config),
            st_file(1, "two.st", shared_five(), &config),
        ];
        let classes = detect(&corpus, &config).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].blocks.len(), 2);
        assert_eq!(classes[0].sig_count, 5);
        assert_eq!(classes[0].class_id, 1);
        assert_eq!(classes[0].blocks[0].start_line, 1);
        assert_eq!(classes[0].blocks[0].end_line, 5);
    }

    #[test]
    fn four_shared_lines_stay_below_the_default_minimum() {
        let config = DetectionConfig::default();
        let four = "a := 1;\nb := a + 2;\nc := b * b;\nd := c - a;\n";
        let corpus = vec![
            st_file(0, "one.st", four, &config),
            st_file(1, "two.st", four, &config),
        ];
        assert!(detect(&corpus, &config).unwrap().is_empty());
    }

    #[test]
    fn renamed_fragment_matches_only_under_identifier_normalization() {
        let text = |v: &str| {
            format!(
                "{v}1 := 1;\n{v}2 := {v}1 + 2;\n{v}3 := {v}2 * {v}2;\n{v}4 := {v}3 - {v}1;\n{v}5 := {v}4 / 2;\n{v}6 := {v}5;\n"
            )
        };
        for (options, expect_classes) in [
            (NormalizationOptions::identifiers(), 1usize),
            (NormalizationOptions::none(), 0),
        ] {
            let config = DetectionConfig { options, min_lines: 5, ..Default::default() };
            let corpus = vec![
                st_file(0, "a.st", &text("alpha"), &config),
                st_file(1, "b.st", &text("beta"), &config),
                st_file(2, "c.st", &text("gamma"), &config),
            ];
            let classes = detect(&corpus, &config).unwrap();
            assert_eq!(classes.len(), expect_classes, "{options:?}");
            if expect_classes == 1 {
                assert_eq!(classes[0].blocks.len(), 3);
                assert_eq!(classes[0].sig_count, 6);
            }
        }
    }

    #[test]
    fn contained_runs_are_subsumed_per_file_pair() {
        // b embeds the whole of a; the short echo of a's head at b's tail is
        // also inside the long run on both sides, so only one class remains.
        let a = "p := 1;\nq := 2;\nr := 3;\np2 := 4;\nq2 := 5;\n";
        let b = format!("s0 := 0;\n{a}s9 := 9;\np := 1;\nq := 2;\n");
        let config = DetectionConfig { min_lines: 2, ..Default::default() };
        let corpus = vec![
            st_file(0, "a.st", a, &config),
            st_file(1, "b.st", &b, &config),
        ];
        let classes = detect(&corpus, &config).unwrap();
        // The 5-line run survives; the 2-line (p,q) echo appears as its own
        // class only via the pair whose intervals are not both contained.
        assert_eq!(classes[0].sig_count, 5);
        let two_line: Vec<_> = classes.iter().filter(|c| c.sig_count == 2).collect();
        assert_eq!(two_line.len(), 1);
        // a.st's (p,q) head vs b.st's trailing echo: b-interval sticks out of
        // the long run's b-interval, so it is kept.
        assert_eq!(two_line[0].blocks.len(), 3);
    }

    #[test]
    fn overlap_pruning_keeps_longest_blocks() {
        // Two copies of a periodic file. With overlap allowed, the phase-
        // shifted self-clone survives next to the full-file clone; without
        // overlap, greedy longest-first pruning leaves only the full copy.
        let text = "x := 1;\ny := 2;\nx := 1;\ny := 2;\nx := 1;\ny := 2;\n";
        let base = DetectionConfig { min_lines: 2, ..Default::default() };
        let corpus = vec![st_file(0, "p.st", text, &base), st_file(1, "q.st", text, &base)];

        let with_overlap = detect(&corpus, &base).unwrap();
        assert_eq!(
            with_overlap.iter().map(|c| (c.sig_count, c.blocks.len())).collect::<Vec<_>>(),
            vec![(6, 2), (4, 4)]
        );

        let config = DetectionConfig { allow_overlap: false, ..base };
        let pruned = detect(&corpus, &config).unwrap();
        assert_eq!(
            pruned.iter().map(|c| (c.sig_count, c.blocks.len())).collect::<Vec<_>>(),
            vec![(6, 2)]
        );
        for class in &pruned {
            let mut ivs: Vec<_> = class
                .blocks
                .iter()
                .map(|b| (b.file_id, b.sig_start, b.sig_start + b.sig_count))
                .collect();
            ivs.sort_unstable();
            for w in ivs.windows(2) {
                assert!(w[0].0 != w[1].0 || w[0].2 <= w[1].1, "overlap in {ivs:?}");
            }
        }
    }

    #[test]
    fn cross_language_lines_never_match() {
        let text = "a = 1;\nb = 2;\nc = 3;\nd = 4;\ne = 5;\n";
        let config = DetectionConfig::default();
        let corpus = vec![
            CorpusFile::from_source(0, "x.st", LanguageId::St, text, &config),
            CorpusFile::from_source(1, "y.c", LanguageId::Cpp, text, &config),
        ];
        assert!(detect(&corpus, &config).unwrap().is_empty());
    }

    #[test]
    fn empty_corpus_is_an_error() {
        let config = DetectionConfig::default();
        assert_eq!(detect(&[], &config), Err(DetectError::EmptyCorpus));
        let corpus = vec![st_file(0, "empty.st", "(* nothing *)\n\n", &config)];
        assert_eq!(detect(&corpus, &config), Err(DetectError::EmptyCorpus));
    }

    #[test]
    fn pairs_are_canonically_ordered() {
        let config = DetectionConfig::default();
        let corpus = vec![
            st_file(0, "one.st", shared_five(), &config),
            st_file(1, "two.st", shared_five(), &config),
            st_file(2, "three.st", shared_five(), &config),
        ];
        let classes = detect(&corpus, &config).unwrap();
        let pairs: Vec<ClonePair> = classes[0].pairs().collect();
        assert_eq!(pairs.len(), 3);
        for pair in pairs {
            assert!((pair.a.file_id, pair.a.start_line) <= (pair.b.file_id, pair.b.start_line));
            assert_ne!(pair.a, pair.b);
        }
    }

    #[test]
    fn detect_is_deterministic() {
        let config = DetectionConfig { min_lines: 2, ..Default::default() };
        let base = "a := 1;\nb := 2;\nc := 3;\na := 1;\nb := 2;\n";
        let corpus = vec![
            st_file(0, "m.st", base, &config),
            st_file(1, "n.st", base, &config),
        ];
        let first = detect(&corpus, &config).unwrap();
        let second = detect(&corpus, &config).unwrap();
        assert_eq!(first, second);
    }
}
