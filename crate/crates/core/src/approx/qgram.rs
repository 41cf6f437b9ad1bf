//! q-gram profile distances.

use std::collections::HashMap;

use super::QGramParams;
use crate::strcore::{ensure_same_alphabet, SymbolString};
use crate::{Error, Result};

/// Sentinel used to pad strings; distinct from every alphabet index.
const SENTINEL: u32 = u32::MAX;

/// Occurrence counts of every length-q substring of one string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QGramProfile {
    counts: HashMap<Box<[u32]>, u64>,
    q: usize,
    source_length: usize,
}

impl QGramProfile {
    /// Count of one gram (0 when absent).
    pub fn count_of(&self, gram: &[u32]) -> u64 {
        self.counts.get(gram).copied().unwrap_or(0)
    }

    /// All grams with their counts.
    pub fn counts(&self) -> &HashMap<Box<[u32]>, u64> {
        &self.counts
    }

    /// The gram length.
    pub fn q(&self) -> usize {
        self.q
    }

    /// Length of the profiled string.
    pub fn source_length(&self) -> usize {
        self.source_length
    }

    /// Total number of gram occurrences: `max(0, n − q + 1)`.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// L1 distance between two profiles of the same gram length.
    pub fn l1(&self, other: &Self) -> Result<u64> {
        if self.q != other.q {
            return Err(Error::InvalidInput(format!(
                "cannot compare profiles with different gram lengths ({} vs {})",
                self.q, other.q
            )));
        }
        Ok(map_l1(&self.counts, &other.counts))
    }
}

fn map_l1(a: &HashMap<Box<[u32]>, u64>, b: &HashMap<Box<[u32]>, u64>) -> u64 {
    let mut total = 0;
    for (gram, &ca) in a {
        let cb = b.get(gram).copied().unwrap_or(0);
        total += ca.abs_diff(cb);
    }
    for (gram, &cb) in b {
        if !a.contains_key(gram) {
            total += cb;
        }
    }
    total
}

fn profile_of(seq: &[u32], q: usize, source_length: usize) -> QGramProfile {
    let mut counts: HashMap<Box<[u32]>, u64> = HashMap::new();
    if q <= seq.len() {
        for w in seq.windows(q) {
            *counts.entry(Box::from(w)).or_insert(0) += 1;
        }
    }
    QGramProfile {
        counts,
        q,
        source_length,
    }
}

/// Counts every length-q substring of `x`. Strings shorter than q yield the
/// empty profile.
pub fn qgram_profile(x: &SymbolString, p: &QGramParams) -> QGramProfile {
    profile_of(x.symbols(), p.q(), x.len())
}

/// Unnormalized q-gram distance: the L1 difference of the two profiles,
/// `Σ_g |count_x(g) − count_y(g)|`.
///
/// Symmetric and zero on equal inputs. Errors when the alphabets differ.
pub fn baryossef_distance(x: &SymbolString, y: &SymbolString, p: &QGramParams) -> Result<f64> {
    ensure_same_alphabet(x, y)?;
    let px = qgram_profile(x, p);
    let py = qgram_profile(y, p);
    Ok(px.l1(&py).expect("same q by construction") as f64)
}

/// Normalized padded q-gram distance: both strings are padded with `q − 1`
/// sentinel symbols (outside the alphabet) at each end, and the padded
/// profiles' L1 difference is divided by the common length n.
///
/// Symmetric and zero on equal inputs. Errors when the alphabets differ or
/// the lengths are unequal or zero.
pub fn sokolov_distance(x: &SymbolString, y: &SymbolString, p: &QGramParams) -> Result<f64> {
    ensure_same_alphabet(x, y)?;
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let n = x.len();
    if n == 0 {
        return Err(Error::InvalidInput(
            "padded q-gram distance requires nonempty strings".into(),
        ));
    }
    let q = p.q();
    let pad = |s: &SymbolString| -> Vec<u32> {
        let mut v = vec![SENTINEL; q - 1];
        v.extend_from_slice(s.symbols());
        v.extend(std::iter::repeat_n(SENTINEL, q - 1));
        v
    };
    let px = profile_of(&pad(x), q, n + 2 * (q - 1));
    let py = profile_of(&pad(y), q, n + 2 * (q - 1));
    Ok(map_l1(&px.counts, &py.counts) as f64 / n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strcore::Alphabet;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn alpha(sym: &str) -> Arc<Alphabet> {
        Arc::new(Alphabet::new(sym.chars()).unwrap())
    }

    fn s(al: &Arc<Alphabet>, text: &str) -> SymbolString {
        SymbolString::from_text(al, text).unwrap()
    }

    fn q(v: usize) -> QGramParams {
        QGramParams::new(v).unwrap()
    }

    #[test]
    fn profile_examples() {
        let al = alpha("abcdefgh");
        let p = qgram_profile(&s(&al, "abcdefgh"), &q(2));
        assert_eq!(p.counts().len(), 7); // ab bc cd de ef fg gh
        assert_eq!(p.total(), 7);
        assert!(p.counts().values().all(|&c| c == 1));

        let p = qgram_profile(&s(&al, "aaaa"), &q(2));
        assert_eq!(p.counts().len(), 1);
        assert_eq!(p.count_of(&[0, 0]), 3);

        let p = qgram_profile(&s(&al, "ab"), &q(3));
        assert!(p.counts().is_empty());
        assert_eq!(p.total(), 0);
    }

    #[test]
    fn baryossef_examples() {
        let al = alpha("abcdefgh");
        let d = baryossef_distance(&s(&al, "abcdefgh"), &s(&al, "efghabcd"), &q(2)).unwrap();
        assert_eq!(d, 2.0); // only "ha" vs "de" differ

        let x = s(&al, "abcdefga");
        assert_eq!(baryossef_distance(&x, &x, &q(3)).unwrap(), 0.0);

        // aa: |3−2| = 1, ab: |0−1| = 1
        let d = baryossef_distance(&s(&al, "aaaa"), &s(&al, "aaab"), &q(2)).unwrap();
        assert_eq!(d, 2.0);
    }

    #[test]
    fn sokolov_examples() {
        let al = alpha("abcd");
        let x = s(&al, "abcd");
        assert_eq!(sokolov_distance(&x, &x, &q(4)).unwrap(), 0.0);

        // Padded ⊥ab⊥ vs ⊥ba⊥: grams {⊥a, ab, b⊥} vs {⊥b, ba, a⊥}, L1 = 6, n = 2.
        let d = sokolov_distance(&s(&al, "ab"), &s(&al, "ba"), &q(2)).unwrap();
        assert_eq!(d, 3.0);
    }

    #[test]
    fn sokolov_rejects_unequal_or_empty() {
        let al = alpha("ab");
        assert!(matches!(
            sokolov_distance(&s(&al, "ab"), &s(&al, "a"), &q(2)),
            Err(Error::LengthMismatch { left: 2, right: 1 })
        ));
        assert!(sokolov_distance(&s(&al, ""), &s(&al, ""), &q(2)).is_err());
    }

    #[test]
    fn qgram_params_validate() {
        assert!(QGramParams::new(0).is_err());
        assert_eq!(QGramParams::new(4).unwrap().q(), 4);
    }

    proptest! {
        /// One substitution changes at most q grams on each side, so the L1
        /// profile distance moves by at most 2q.
        #[test]
        fn baryossef_single_edit_sensitivity(
            data in proptest::collection::vec(0u32..4, 1..=40),
            pos_seed: usize,
            sym in 0u32..4,
            qv in 1usize..=6,
        ) {
            let al = alpha("abcd");
            let x = SymbolString::from_indices(&al, data.clone()).unwrap();
            let mut edited = data;
            let pos = pos_seed % edited.len();
            edited[pos] = sym;
            let y = SymbolString::from_indices(&al, edited).unwrap();
            let d = baryossef_distance(&x, &y, &q(qv)).unwrap();
            prop_assert!(d <= 2.0 * qv as f64);
        }

        #[test]
        fn both_qgram_distances_are_symmetric_and_zero_on_self(
            a in proptest::collection::vec(0u32..3, 1..=20),
            b in proptest::collection::vec(0u32..3, 1..=20),
            qv in 1usize..=4,
        ) {
            let al = alpha("abc");
            let x = SymbolString::from_indices(&al, a).unwrap();
            let y = SymbolString::from_indices(&al, b).unwrap();
            prop_assert_eq!(baryossef_distance(&x, &x, &q(qv)).unwrap(), 0.0);
            prop_assert_eq!(
                baryossef_distance(&x, &y, &q(qv)).unwrap(),
                baryossef_distance(&y, &x, &q(qv)).unwrap()
            );
            if x.len() == y.len() {
                prop_assert_eq!(sokolov_distance(&x, &x, &q(qv)).unwrap(), 0.0);
                prop_assert_eq!(
                    sokolov_distance(&x, &y, &q(qv)).unwrap(),
                    sokolov_distance(&y, &x, &q(qv)).unwrap()
                );
            }
        }
    }
}
