//! Distinctness checks and the alphabet expansion Σ → Σ^t.
//!
//! The two Ulam-metric distances require strings whose symbols are all
//! distinct. Arbitrary strings are converted by replacing each string with
//! its sequence of t-grams for the smallest t that makes every gram unique.
//! A t-gram expansion stretches edit distance by a factor of at most 2t, so
//! the harness records t for every pair it expands.

use std::collections::HashSet;

use crate::strcore::SymbolString;
use crate::{Error, Result};

/// A string re-encoded as its sequence of t-gram tuple-symbols.
///
/// Tuple-symbols are identified by content, so identical substrings of two
/// different strings map to the same expanded symbol. Construction rejects
/// orders whose grams are not pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedString {
    grams: Vec<Box<[u32]>>,
    t: usize,
    source_length: usize,
}

impl ExpandedString {
    /// The t-gram tuple-symbols, in source order (length `n − t + 1`).
    pub fn grams(&self) -> &[Box<[u32]>] {
        &self.grams
    }

    /// The expansion order t.
    pub fn t(&self) -> usize {
        self.t
    }

    /// The length of the source string.
    pub fn source_length(&self) -> usize {
        self.source_length
    }

    /// Number of tuple-symbols.
    pub fn len(&self) -> usize {
        self.grams.len()
    }

    /// True when there are no tuple-symbols (never for a valid expansion).
    pub fn is_empty(&self) -> bool {
        self.grams.is_empty()
    }

    /// Upper bound on how much this expansion inflates distortion: 2t.
    pub fn distortion_penalty(&self) -> usize {
        2 * self.t
    }
}

/// True iff all symbols of `x` are pairwise distinct (vacuously true for
/// the empty string).
pub fn is_ulam(x: &SymbolString) -> bool {
    all_distinct(x.symbols(), 1)
}

/// True iff the `t`-grams of `seq` are pairwise distinct.
fn all_distinct(seq: &[u32], t: usize) -> bool {
    if t > seq.len() {
        return true; // no grams at all
    }
    let mut seen: HashSet<&[u32]> = HashSet::with_capacity(seq.len() - t + 1);
    seq.windows(t).all(|w| seen.insert(w))
}

/// Smallest t whose t-grams of `x` are pairwise distinct.
///
/// Always at most |x| (a single full-length gram is trivially distinct).
/// Distinctness is monotone in t — equal (t+1)-grams would have equal
/// t-prefixes — so the upward scan stops at the true minimum.
/// Errors on the empty string.
pub fn minimal_order(x: &SymbolString) -> Result<usize> {
    if x.is_empty() {
        return Err(Error::InvalidInput(
            "cannot expand an empty string".into(),
        ));
    }
    let seq = x.symbols();
    Ok((1..=seq.len())
        .find(|&t| all_distinct(seq, t))
        .expect("t = |x| always yields one distinct gram"))
}

/// Smallest t valid for the pair: both strings' t-grams must be pairwise
/// distinct, so this is the larger of the per-string minima.
///
/// Errors when either string is empty, or when the required t exceeds the
/// shorter string's length (the shorter string would have no t-grams).
pub fn minimal_expansion_order(x: &SymbolString, y: &SymbolString) -> Result<usize> {
    let t = minimal_order(x)?.max(minimal_order(y)?);
    let shorter = x.len().min(y.len());
    if t > shorter {
        return Err(Error::NoJointExpansion {
            required: t,
            shorter,
        });
    }
    Ok(t)
}

/// Re-encodes `x` as its sequence of t-grams.
///
/// Errors when `t` is zero or exceeds |x|, or when the t-grams are not
/// pairwise distinct.
pub fn expand(x: &SymbolString, t: usize) -> Result<ExpandedString> {
    if t == 0 {
        return Err(Error::InvalidInput("expansion order must be positive".into()));
    }
    if t > x.len() {
        return Err(Error::InvalidInput(format!(
            "expansion order {t} exceeds the string length {}",
            x.len()
        )));
    }
    let seq = x.symbols();
    if !all_distinct(seq, t) {
        return Err(Error::NonDistinctGrams { t });
    }
    Ok(ExpandedString {
        grams: seq.windows(t).map(Box::from).collect(),
        t,
        source_length: seq.len(),
    })
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

    #[test]
    fn ulam_check() {
        let al = alpha("abcd");
        assert!(is_ulam(&s(&al, "abcd")));
        assert!(!is_ulam(&s(&al, "abab")));
        assert!(is_ulam(&s(&al, "")));
    }

    #[test]
    fn minimal_order_examples() {
        let al = alpha("abcd");
        assert_eq!(
            minimal_expansion_order(&s(&al, "abcd"), &s(&al, "dcba")).unwrap(),
            1
        );
        assert_eq!(
            minimal_expansion_order(&s(&al, "abab"), &s(&al, "abab")).unwrap(),
            3
        );
        assert_eq!(
            minimal_expansion_order(&s(&al, "aaaa"), &s(&al, "aaaa")).unwrap(),
            4
        );
    }

    #[test]
    fn joint_order_is_max_of_per_string_minima() {
        let al = alpha("abcd");
        let x = s(&al, "abab"); // needs t = 3
        let y = s(&al, "abcd"); // needs t = 1
        assert_eq!(minimal_expansion_order(&x, &y).unwrap(), 3);
    }

    #[test]
    fn joint_order_can_be_impossible() {
        let al = alpha("abcd");
        let x = s(&al, "aaaa"); // needs t = 4
        let y = s(&al, "ab"); // has no 4-grams
        assert!(matches!(
            minimal_expansion_order(&x, &y),
            Err(Error::NoJointExpansion {
                required: 4,
                shorter: 2
            })
        ));
    }

    #[test]
    fn empty_strings_are_rejected() {
        let al = alpha("ab");
        assert!(minimal_order(&s(&al, "")).is_err());
        assert!(minimal_expansion_order(&s(&al, "a"), &s(&al, "")).is_err());
    }

    #[test]
    fn expand_examples() {
        let al = alpha("abcd");
        let e = expand(&s(&al, "abcd"), 1).unwrap();
        assert_eq!(e.len(), 4);
        assert_eq!(e.t(), 1);
        assert_eq!(e.distortion_penalty(), 2);

        let e = expand(&s(&al, "abab"), 3).unwrap();
        assert_eq!(e.len(), 2); // aba, bab
        assert_ne!(e.grams()[0], e.grams()[1]);

        let e = expand(&s(&al, "ab"), 2).unwrap();
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn expand_rejects_bad_orders() {
        let al = alpha("ab");
        assert!(matches!(
            expand(&s(&al, "abab"), 2),
            Err(Error::NonDistinctGrams { t: 2 })
        ));
        assert!(expand(&s(&al, "ab"), 3).is_err());
        assert!(expand(&s(&al, "ab"), 0).is_err());
    }

    #[test]
    fn equal_substrings_share_gram_content() {
        let al = alpha("abcd");
        let ex = expand(&s(&al, "abcd"), 2).unwrap();
        let ey = expand(&s(&al, "dabc"), 2).unwrap();
        // "ab" and "bc" occur in both strings and compare equal by content.
        assert_eq!(ex.grams()[0], ey.grams()[1]);
        assert_eq!(ex.grams()[1], ey.grams()[2]);
    }

    /// Dumb reference: smallest t whose grams are distinct, by quadratic
    /// comparison of every gram pair.
    fn minimal_order_bruteforce(seq: &[u32]) -> usize {
        'outer: for t in 1..=seq.len() {
            let grams: Vec<&[u32]> = seq.windows(t).collect();
            for i in 0..grams.len() {
                for j in (i + 1)..grams.len() {
                    if grams[i] == grams[j] {
                        continue 'outer;
                    }
                }
            }
            return t;
        }
        unreachable!("the full string is always a distinct single gram")
    }

    proptest! {
        #[test]
        fn minimal_order_matches_bruteforce(data in proptest::collection::vec(0u32..4, 1..=12)) {
            let al = alpha("abcd");
            let x = SymbolString::from_indices(&al, data.clone()).unwrap();
            prop_assert_eq!(minimal_order(&x).unwrap(), minimal_order_bruteforce(&data));
        }

        #[test]
        fn expansion_at_minimal_order_is_distinct(data in proptest::collection::vec(0u32..4, 1..=16)) {
            let al = alpha("abcd");
            let x = SymbolString::from_indices(&al, data).unwrap();
            let t = minimal_order(&x).unwrap();
            let e = expand(&x, t).unwrap();
            let unique: HashSet<&Box<[u32]>> = e.grams().iter().collect();
            prop_assert_eq!(unique.len(), e.len());
            if t > 1 {
                prop_assert!(expand(&x, t - 1).is_err());
            }
        }
    }
}
