//! Dataset construction: the seeded random pair generator, FASTA corpus
//! ingestion with length bucketing, pair sampling, and the tab-separated
//! pair-file format.
//!
//! # Reproducibility
//!
//! Every random decision comes from a ChaCha8 stream whose 32-byte seed
//! block is, in order: the 64-bit master seed (little-endian, bytes 0..8),
//! the 64-bit record index (little-endian, bytes 8..16), a one-byte domain
//! tag (byte 16; 0 = random pair generation, 1 = pair sampling), and zeros.
//! Uniform integers below a bound are drawn by rejection from `next_u64`
//! (values above the largest multiple of the bound are redrawn, then
//! reduced modulo the bound). Draw order is normative: a random pair draws
//! the `n` symbols of `x` first, then per edit operation the operation
//! choice (one draw below 3; 0 and 1 select substitution — skipped
//! entirely when the remaining budget forces a substitution), then its
//! positions (substitution: position, then symbol; delete–insert: delete
//! position, then insert slot, then symbol). Pair sampling draws the first
//! string's index, then the second's among the remaining. Because each
//! record has its own stream, parallel generation reproduces sequential
//! generation exactly.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::strcore::{edit_distance, Alphabet, SymbolString};
use crate::{Error, Result};

/// Parameters of the seeded random pair generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSpec {
    n: usize,
    sigma: usize,
    e: usize,
    count: usize,
    seed: u64,
}

impl RandomSpec {
    /// Validates `n ≥ 1`, `2 ≤ sigma ≤ 62` (the canonical alphabet),
    /// `e ≥ 1`, and `count ≥ 1`.
    pub fn new(n: usize, sigma: usize, e: usize, count: usize, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("string length n must be ≥ 1".into()));
        }
        if !(2..=62).contains(&sigma) {
            return Err(Error::InvalidInput(format!(
                "alphabet size must be in 2..=62, got {sigma}"
            )));
        }
        if e == 0 {
            return Err(Error::InvalidInput("edit budget e must be ≥ 1".into()));
        }
        if count == 0 {
            return Err(Error::InvalidInput("pair count must be ≥ 1".into()));
        }
        Ok(RandomSpec { n, sigma, e, count, seed })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// A corpus length bucket: admits raw lengths in `[target_n, 3·target_n − 1]`
/// and truncates admitted sequences to exactly `target_n` symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BucketSpec {
    target_n: usize,
}

impl BucketSpec {
    /// The supported bucket targets.
    pub const TARGETS: [usize; 3] = [100, 300, 1000];

    pub fn new(target_n: usize) -> Result<Self> {
        if !Self::TARGETS.contains(&target_n) {
            return Err(Error::InvalidInput(format!(
                "bucket target must be one of {:?}, got {target_n}",
                Self::TARGETS
            )));
        }
        Ok(BucketSpec { target_n })
    }

    pub fn target_n(&self) -> usize {
        self.target_n
    }

    pub fn min_len(&self) -> usize {
        self.target_n
    }

    pub fn max_len(&self) -> usize {
        3 * self.target_n - 1
    }
}

/// Provenance of a pair: a source tag plus free-form key–value parameters
/// (serialized sorted by key).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairMeta {
    pub source: String,
    pub params: BTreeMap<String, String>,
}

/// One string pair, optionally with its cached exact distance (which, when
/// present, always equals `edit_distance(x, y)`).
#[derive(Debug, Clone, PartialEq)]
pub struct PairRecord {
    pub id: u64,
    pub x: SymbolString,
    pub y: SymbolString,
    pub exact: Option<usize>,
    pub meta: PairMeta,
}

const DOMAIN_RANDOM_PAIR: u8 = 0;
const DOMAIN_SAMPLE: u8 = 1;

/// Dedicated ChaCha8 stream for one record of one domain under one master
/// seed; see the module documentation for the seed block layout.
fn substream(master_seed: u64, index: u64, domain: u8) -> ChaCha8Rng {
    let mut seed = [0u8; 32];
    seed[0..8].copy_from_slice(&master_seed.to_le_bytes());
    seed[8..16].copy_from_slice(&index.to_le_bytes());
    seed[16] = domain;
    ChaCha8Rng::from_seed(seed)
}

/// Uniform draw from `0..bound` by rejection sampling, so every value is
/// exactly equally likely.
fn draw_below(rng: &mut impl RngCore, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let overflow = (u64::MAX % bound + 1) % bound;
    let limit = u64::MAX - overflow;
    loop {
        let v = rng.next_u64();
        if v <= limit {
            return v % bound;
        }
    }
}

/// Generates pair number `pair_index` of the dataset described by `spec`.
///
/// `x` is drawn uniformly from Σⁿ and `y` starts as a copy; edit
/// operations are applied to `y` until their total cost reaches `e`: with
/// probability 2/3 a substitution at a uniform position with a uniform
/// symbol (cost 1), with probability 1/3 a deletion at a uniform position
/// followed by an insertion of a uniform symbol at a uniform slot
/// (cost 2, leaving `|y| = n`). A remaining budget of exactly 1 forces a
/// substitution. The exact distance is computed and cached; it never
/// exceeds `e` (each cost unit pays for at most one unit edit) but can
/// fall short, e.g. when a substitution redraws the original symbol.
pub fn gen_random_pair(spec: &RandomSpec, pair_index: u64) -> PairRecord {
    let alphabet = Alphabet::canonical(spec.sigma).expect("sigma validated by RandomSpec");
    let mut rng = substream(spec.seed, pair_index, DOMAIN_RANDOM_PAIR);
    let sigma = spec.sigma as u64;

    let data: Vec<u32> = (0..spec.n)
        .map(|_| draw_below(&mut rng, sigma) as u32)
        .collect();
    let mut y_data = data.clone();

    let mut budget = spec.e;
    while budget > 0 {
        let substitute = budget == 1 || draw_below(&mut rng, 3) < 2;
        if substitute {
            let pos = draw_below(&mut rng, spec.n as u64) as usize;
            let sym = draw_below(&mut rng, sigma) as u32;
            y_data[pos] = sym;
            budget -= 1;
        } else {
            let del = draw_below(&mut rng, spec.n as u64) as usize;
            y_data.remove(del);
            let slot = draw_below(&mut rng, spec.n as u64) as usize;
            let sym = draw_below(&mut rng, sigma) as u32;
            y_data.insert(slot, sym);
            budget -= 2;
        }
    }

    let x = SymbolString::from_indices(&alphabet, data).expect("indices below sigma");
    let y = SymbolString::from_indices(&alphabet, y_data).expect("indices below sigma");
    let exact = edit_distance(&x, &y).expect("same alphabet");
    let mut params = BTreeMap::new();
    params.insert("n".into(), spec.n.to_string());
    params.insert("sigma".into(), spec.sigma.to_string());
    params.insert("e".into(), spec.e.to_string());
    params.insert("seed".into(), spec.seed.to_string());
    PairRecord {
        id: pair_index,
        x,
        y,
        exact: Some(exact),
        meta: PairMeta {
            source: "random".into(),
            params,
        },
    }
}

/// All `count` pairs of the dataset, ids `0..count`.
pub fn gen_random_pairs(spec: &RandomSpec) -> Vec<PairRecord> {
    (0..spec.count as u64)
        .map(|i| gen_random_pair(spec, i))
        .collect()
}

/// Outcome of FASTA ingestion: the bucketed strings, their shared observed
/// alphabet, and how many records were scanned in total.
#[derive(Debug, Clone)]
pub struct IngestResult {
    pub alphabet: Arc<Alphabet>,
    pub strings: Vec<SymbolString>,
    pub records_scanned: usize,
}

/// Reads a FASTA file and keeps the sequences whose raw length falls in
/// the bucket's admission range, truncated to exactly `target_n` symbols.
///
/// Header lines start with `>`; a record's sequence is the concatenation
/// of its following lines with all whitespace removed, case-folded to
/// uppercase. The alphabet is built from the characters of the retained
/// (truncated) sequences. Errors on unreadable files, on sequence data
/// before any header (with its line number), and when no sequence is
/// admitted.
pub fn ingest_fasta(path: impl AsRef<Path>, bucket: &BucketSpec) -> Result<IngestResult> {
    let reader = BufReader::new(File::open(path)?);
    let mut raw: Vec<String> = Vec::new();
    let mut current: Option<String> = None;
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = i + 1;
        if line.starts_with('>') {
            if let Some(seq) = current.take() {
                raw.push(seq);
            }
            current = Some(String::new());
        } else {
            let trimmed: String = line
                .chars()
                .filter(|c| !c.is_whitespace())
                .flat_map(char::to_uppercase)
                .collect();
            if trimmed.is_empty() {
                continue;
            }
            match current.as_mut() {
                Some(seq) => seq.push_str(&trimmed),
                None => {
                    return Err(Error::Malformed {
                        line: line_no,
                        msg: "sequence data before any FASTA header".into(),
                    })
                }
            }
        }
    }
    if let Some(seq) = current.take() {
        raw.push(seq);
    }

    let records_scanned = raw.len();
    let kept: Vec<String> = raw
        .into_iter()
        .filter(|s| {
            let len = s.chars().count();
            len >= bucket.min_len() && len <= bucket.max_len()
        })
        .map(|s| s.chars().take(bucket.target_n()).collect())
        .collect();
    if kept.is_empty() {
        return Err(Error::InvalidInput(format!(
            "no sequences admitted by bucket {} (scanned {records_scanned} records)",
            bucket.target_n()
        )));
    }
    let alphabet = Arc::new(Alphabet::from_observed(kept.iter().map(String::as_str))?);
    let strings = kept
        .iter()
        .map(|t| SymbolString::from_text(&alphabet, t).expect("alphabet built from these texts"))
        .collect();
    Ok(IngestResult {
        alphabet,
        strings,
        records_scanned,
    })
}

/// Draws `count` pairs of distinct indices uniformly (with replacement
/// across draws) from `strings`. Requires at least two strings.
pub fn sample_pairs(strings: &[SymbolString], count: usize, seed: u64) -> Result<Vec<PairRecord>> {
    if strings.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "pair sampling needs at least 2 strings, got {}",
            strings.len()
        )));
    }
    let m = strings.len() as u64;
    let mut out = Vec::with_capacity(count);
    for id in 0..count as u64 {
        let mut rng = substream(seed, id, DOMAIN_SAMPLE);
        let i = draw_below(&mut rng, m) as usize;
        let mut j = draw_below(&mut rng, m - 1) as usize;
        if j >= i {
            j += 1;
        }
        let mut params = BTreeMap::new();
        params.insert("i".into(), i.to_string());
        params.insert("j".into(), j.to_string());
        out.push(PairRecord {
            id,
            x: strings[i].clone(),
            y: strings[j].clone(),
            exact: None,
            meta: PairMeta {
                source: "corpus".into(),
                params,
            },
        });
    }
    Ok(out)
}

/// The pair-file header row.
pub const PAIR_FILE_HEADER: &str = "id\tx\ty\texact\tsource\tparams";

fn check_field(value: &str, what: &str) -> Result<()> {
    if value.contains(['\t', '\n', '\r']) {
        return Err(Error::InvalidInput(format!(
            "{what} contains a tab or line break and cannot be serialized: {value:?}"
        )));
    }
    Ok(())
}

/// Writes pairs as UTF-8 tab-separated records under [`PAIR_FILE_HEADER`],
/// one line per record, LF line endings; `exact` is left empty when
/// uncached and `params` serializes as `key=value` entries joined by `;`
/// in key order. Symbols are written as their original characters, so
/// fields must not contain tabs, line breaks, or (for params) unescaped
/// separators.
pub fn write_pairs(pairs: &[PairRecord], path: impl AsRef<Path>) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    out.write_all(PAIR_FILE_HEADER.as_bytes())?;
    out.write_all(b"\n")?;
    for p in pairs {
        let x = p.x.to_text();
        let y = p.y.to_text();
        check_field(&x, "pair text")?;
        check_field(&y, "pair text")?;
        check_field(&p.meta.source, "source tag")?;
        let mut params = String::new();
        for (i, (k, v)) in p.meta.params.iter().enumerate() {
            check_field(k, "params key")?;
            check_field(v, "params value")?;
            if k.contains(['=', ';']) || v.contains(';') {
                return Err(Error::InvalidInput(format!(
                    "params entry {k:?}={v:?} contains a reserved separator"
                )));
            }
            if i > 0 {
                params.push(';');
            }
            params.push_str(k);
            params.push('=');
            params.push_str(v);
        }
        let exact = p.exact.map(|d| d.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            p.id, x, y, exact, p.meta.source, params
        )?;
    }
    out.flush()?;
    Ok(())
}

/// Reads a pair file written by [`write_pairs`].
///
/// The alphabet is rebuilt from the characters observed in the file, so a
/// round trip preserves ids, texts, exact distances, and metadata (the
/// rebuilt alphabet may be smaller than the original writer's if not every
/// symbol occurs). Schema violations report their line number and, for a
/// bad header, the first missing column.
pub fn read_pairs(path: impl AsRef<Path>) -> Result<Vec<PairRecord>> {
    let reader = BufReader::new(File::open(path)?);
    let mut lines = reader.lines();
    let header = lines
        .next()
        .transpose()?
        .ok_or(Error::Malformed {
            line: 1,
            msg: "empty file, expected header row".into(),
        })?;
    if header != PAIR_FILE_HEADER {
        let present: Vec<&str> = header.split('\t').collect();
        let missing = PAIR_FILE_HEADER
            .split('\t')
            .find(|col| !present.contains(col));
        let msg = match missing {
            Some(col) => format!("header is missing column `{col}`"),
            None => format!("malformed header {header:?}"),
        };
        return Err(Error::Malformed { line: 1, msg });
    }

    struct Row {
        line: usize,
        id: u64,
        x: String,
        y: String,
        exact: Option<usize>,
        meta: PairMeta,
    }
    let mut rows: Vec<Row> = Vec::new();
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        let line = line?;
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 6 {
            return Err(Error::Malformed {
                line: line_no,
                msg: format!("expected 6 tab-separated fields, got {}", fields.len()),
            });
        }
        let id = fields[0].parse::<u64>().map_err(|_| Error::Malformed {
            line: line_no,
            msg: format!("invalid id {:?}", fields[0]),
        })?;
        let exact = if fields[3].is_empty() {
            None
        } else {
            Some(fields[3].parse::<usize>().map_err(|_| Error::Malformed {
                line: line_no,
                msg: format!("invalid exact distance {:?}", fields[3]),
            })?)
        };
        let mut params = BTreeMap::new();
        if !fields[5].is_empty() {
            for entry in fields[5].split(';') {
                let (k, v) = entry.split_once('=').ok_or_else(|| Error::Malformed {
                    line: line_no,
                    msg: format!("params entry {entry:?} is not key=value"),
                })?;
                params.insert(k.to_string(), v.to_string());
            }
        }
        rows.push(Row {
            line: line_no,
            id,
            x: fields[1].to_string(),
            y: fields[2].to_string(),
            exact,
            meta: PairMeta {
                source: fields[4].to_string(),
                params,
            },
        });
    }

    let alphabet = Arc::new(
        Alphabet::from_observed(rows.iter().flat_map(|r| [r.x.as_str(), r.y.as_str()]))
            .map_err(|_| Error::Malformed {
                line: 1,
                msg: "file contains no symbol characters".into(),
            })?,
    );
    rows.into_iter()
        .map(|r| {
            let build = |text: &str| {
                SymbolString::from_text(&alphabet, text).map_err(|_| Error::Malformed {
                    line: r.line,
                    msg: "text contains characters outside the observed alphabet".into(),
                })
            };
            Ok(PairRecord {
                id: r.id,
                x: build(&r.x)?,
                y: build(&r.y)?,
                exact: r.exact,
                meta: r.meta,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(n: usize, sigma: usize, e: usize, count: usize, seed: u64) -> RandomSpec {
        RandomSpec::new(n, sigma, e, count, seed).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(RandomSpec::new(0, 4, 1, 1, 0).is_err());
        assert!(RandomSpec::new(10, 1, 1, 1, 0).is_err());
        assert!(RandomSpec::new(10, 63, 1, 1, 0).is_err());
        assert!(RandomSpec::new(10, 4, 0, 1, 0).is_err());
        assert!(RandomSpec::new(10, 4, 1, 0, 0).is_err());
        assert!(RandomSpec::new(10, 4, 1, 1, 0).is_ok());
    }

    #[test]
    fn bucket_validation() {
        assert!(BucketSpec::new(100).is_ok());
        assert!(BucketSpec::new(200).is_err());
        let b = BucketSpec::new(300).unwrap();
        assert_eq!((b.min_len(), b.max_len()), (300, 899));
        let b = BucketSpec::new(1000).unwrap();
        assert_eq!((b.min_len(), b.max_len()), (1000, 2999));
    }

    #[test]
    fn draw_below_is_in_range_and_covers() {
        let mut rng = substream(1, 2, DOMAIN_RANDOM_PAIR);
        let mut counts = [0usize; 3];
        for _ in 0..3000 {
            counts[draw_below(&mut rng, 3) as usize] += 1;
        }
        assert!(counts.iter().all(|&c| c > 800), "{counts:?}");
    }

    #[test]
    fn generation_is_deterministic() {
        let s = spec(50, 4, 4, 5, 99);
        let a = gen_random_pair(&s, 3);
        let b = gen_random_pair(&s, 3);
        assert_eq!(a, b);
        assert_eq!(gen_random_pairs(&s), gen_random_pairs(&s));
        // Different indices and different seeds give different pairs.
        assert_ne!(gen_random_pair(&s, 0).x, gen_random_pair(&s, 1).x);
        let other = spec(50, 4, 4, 5, 100);
        assert_ne!(gen_random_pair(&other, 3).x, a.x);
    }

    #[test]
    fn single_edit_budget_is_one_substitution() {
        for idx in 0..50 {
            let p = gen_random_pair(&spec(20, 4, 1, 1, 7), idx);
            assert_eq!(p.y.len(), 20);
            assert!(p.exact.unwrap() <= 1);
        }
    }

    #[test]
    fn budget_bounds_exact_distance() {
        for idx in 0..100 {
            let p = gen_random_pair(&spec(30, 4, 4, 1, 11), idx);
            assert_eq!(p.y.len(), 30);
            let d = edit_distance(&p.x, &p.y).unwrap();
            assert_eq!(p.exact, Some(d));
            assert!(d <= 4);
        }
    }

    #[test]
    fn odd_budget_with_deletions_still_lands_exactly() {
        // e = 3 can spend 2 on a delete-insert and must then force a
        // substitution; |y| stays n and d ≤ 3 throughout.
        for idx in 0..100 {
            let p = gen_random_pair(&spec(12, 3, 3, 1, 5), idx);
            assert_eq!(p.y.len(), 12);
            assert!(p.exact.unwrap() <= 3);
        }
    }

    #[test]
    fn random_pair_metadata_is_recorded() {
        let p = gen_random_pair(&spec(10, 4, 2, 1, 42), 6);
        assert_eq!(p.meta.source, "random");
        assert_eq!(p.meta.params["n"], "10");
        assert_eq!(p.meta.params["sigma"], "4");
        assert_eq!(p.meta.params["e"], "2");
        assert_eq!(p.meta.params["seed"], "42");
        assert_eq!(p.id, 6);
    }

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f.flush().unwrap();
        f
    }

    #[test]
    fn fasta_bucket_admission() {
        let fasta = format!(
            ">kept 150\n{}\n>short 99\n{}\n>long 300\n{}\n>kept 100\n{}\n",
            "ac".repeat(75),
            "A".repeat(99),
            "G".repeat(300),
            "T".repeat(100),
        );
        let f = write_temp(&fasta);
        let r = ingest_fasta(f.path(), &BucketSpec::new(100).unwrap()).unwrap();
        assert_eq!(r.records_scanned, 4);
        assert_eq!(r.strings.len(), 2);
        assert!(r.strings.iter().all(|s| s.len() == 100));
        // Case folding happened before alphabet construction.
        assert_eq!(r.strings[0].to_text(), "AC".repeat(50));
        assert_eq!(r.strings[1].to_text(), "T".repeat(100));
        assert_eq!(r.alphabet.symbols(), &['A', 'C', 'T']);
    }

    #[test]
    fn fasta_multiline_and_whitespace() {
        let fasta = format!(">r\n{}\n  {}  \n\n", "A".repeat(60), "c G t".repeat(20));
        let f = write_temp(&fasta);
        let r = ingest_fasta(f.path(), &BucketSpec::new(100).unwrap()).unwrap();
        assert_eq!(r.strings.len(), 1);
        assert_eq!(r.strings[0].len(), 100);
        assert_eq!(&r.strings[0].to_text()[..62], &format!("{}CG", "A".repeat(60)));
    }

    #[test]
    fn fasta_rejects_headerless_sequence() {
        let f = write_temp("ACGT\n>r\nACGT\n");
        let err = ingest_fasta(f.path(), &BucketSpec::new(100).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 1, .. }), "{err}");
    }

    #[test]
    fn fasta_errors_when_nothing_admitted() {
        let f = write_temp(">r\nACGT\n");
        assert!(ingest_fasta(f.path(), &BucketSpec::new(100).unwrap()).is_err());
    }

    #[test]
    fn sampling_is_deterministic_with_distinct_indices() {
        let alphabet = Alphabet::canonical(4).unwrap();
        let strings: Vec<SymbolString> = (0..5)
            .map(|i| {
                SymbolString::from_indices(&alphabet, vec![i as u32 % 4; 10]).unwrap()
            })
            .collect();
        let a = sample_pairs(&strings, 40, 3).unwrap();
        let b = sample_pairs(&strings, 40, 3).unwrap();
        assert_eq!(a, b);
        for p in &a {
            let i: usize = p.meta.params["i"].parse().unwrap();
            let j: usize = p.meta.params["j"].parse().unwrap();
            assert_ne!(i, j);
            assert_eq!(p.meta.source, "corpus");
            assert!(p.exact.is_none());
        }
        assert_eq!(a.len(), 40);
        assert!(sample_pairs(&strings[..1], 4, 3).is_err());
    }

    #[test]
    fn two_string_sampling_uses_both_orders() {
        let alphabet = Alphabet::canonical(2).unwrap();
        let strings = vec![
            SymbolString::from_text(&alphabet, "AAAA").unwrap(),
            SymbolString::from_text(&alphabet, "BBBB").unwrap(),
        ];
        let pairs = sample_pairs(&strings, 30, 1).unwrap();
        let firsts: std::collections::HashSet<String> =
            pairs.iter().map(|p| p.x.to_text()).collect();
        assert_eq!(firsts.len(), 2, "both orders should occur in 30 draws");
    }

    #[test]
    fn pair_file_round_trip() {
        let s = spec(16, 4, 3, 8, 21);
        let mut pairs = gen_random_pairs(&s);
        pairs[2].exact = None; // exercise the empty-exact column
        let f = tempfile::NamedTempFile::new().unwrap();
        write_pairs(&pairs, f.path()).unwrap();
        let back = read_pairs(f.path()).unwrap();
        assert_eq!(back.len(), pairs.len());
        for (orig, got) in pairs.iter().zip(&back) {
            assert_eq!(orig.id, got.id);
            assert_eq!(orig.x.to_text(), got.x.to_text());
            assert_eq!(orig.y.to_text(), got.y.to_text());
            assert_eq!(orig.exact, got.exact);
            assert_eq!(orig.meta, got.meta);
        }
    }

    #[test]
    fn pair_file_bytes_are_pinned() {
        let alphabet = Alphabet::canonical(3).unwrap();
        let x = SymbolString::from_text(&alphabet, "ABC").unwrap();
        let y = SymbolString::from_text(&alphabet, "ACC").unwrap();
        let mut params = BTreeMap::new();
        params.insert("e".to_string(), "1".to_string());
        let pairs = vec![PairRecord {
            id: 0,
            x,
            y,
            exact: Some(1),
            meta: PairMeta {
                source: "random".into(),
                params,
            },
        }];
        let f = tempfile::NamedTempFile::new().unwrap();
        write_pairs(&pairs, f.path()).unwrap();
        let bytes = std::fs::read_to_string(f.path()).unwrap();
        assert_eq!(bytes, "id\tx\ty\texact\tsource\tparams\n0\tABC\tACC\t1\trandom\te=1\n");
    }

    #[test]
    fn read_rejects_schema_violations() {
        let missing = write_temp("id\tx\ty\tsource\tparams\n");
        let err = read_pairs(missing.path()).unwrap_err();
        assert!(err.to_string().contains("exact"), "{err}");

        let short_row = write_temp("id\tx\ty\texact\tsource\tparams\n0\tA\tB\n");
        let err = read_pairs(short_row.path()).unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 2, .. }), "{err}");

        let bad_id = write_temp("id\tx\ty\texact\tsource\tparams\nzero\tA\tB\t\trandom\t\n");
        assert!(read_pairs(bad_id.path()).is_err());

        let bad_params = write_temp("id\tx\ty\texact\tsource\tparams\n0\tA\tB\t\trandom\tnokey\n");
        assert!(read_pairs(bad_params.path()).is_err());
    }

    proptest! {
        #[test]
        fn generated_pairs_respect_budget(
            n in 1usize..24,
            sigma in 2usize..6,
            e in 1usize..6,
            seed in 0u64..1000,
        ) {
            let p = gen_random_pair(&spec(n, sigma, e, 1, seed), 0);
            prop_assert_eq!(p.y.len(), n);
            prop_assert!(p.exact.unwrap() <= e);
        }
    }
}
