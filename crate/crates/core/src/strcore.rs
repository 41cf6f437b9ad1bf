//! Alphabets, symbol strings, and the exact edit distance.
//!
//! Strings are stored as dense indices into a shared [`Alphabet`], so symbol
//! comparison is integer comparison and alphabets can be built from whatever
//! characters a dataset actually contains.

use std::collections::HashMap;
use std::sync::Arc;

use crate::{Error, Result};

/// Symbols usable by [`Alphabet::canonical`], in index order.
const CANONICAL_SYMBOLS: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

/// An ordered set of distinct symbols.
///
/// `bit_width` is the number of bits needed to describe one symbol,
/// `max(1, ⌈lg size⌉)`; it seeds the alphabet-reduction rounds of the
/// shrink-based distance.
#[derive(Debug, Clone)]
pub struct Alphabet {
    symbols: Vec<char>,
    index: HashMap<char, u32>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    /// Builds an alphabet from symbols in the given order.
    ///
    /// Errors when the set is empty or contains a duplicate.
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::InvalidInput(
                "alphabet must contain at least one symbol".into(),
            ));
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, &ch) in symbols.iter().enumerate() {
            if index.insert(ch, i as u32).is_some() {
                return Err(Error::InvalidInput(format!(
                    "duplicate symbol {ch:?} in alphabet"
                )));
            }
        }
        Ok(Self { symbols, index })
    }

    /// Builds the alphabet of all characters observed in `texts`, sorted.
    pub fn from_observed<'a>(texts: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut seen: Vec<char> = texts.into_iter().flat_map(|t| t.chars()).collect();
        seen.sort_unstable();
        seen.dedup();
        Self::new(seen)
    }

    /// The canonical `size`-symbol alphabet: uppercase letters, then
    /// lowercase, then digits (at most 62 symbols).
    pub fn canonical(size: usize) -> Result<Arc<Self>> {
        if size == 0 || size > CANONICAL_SYMBOLS.chars().count() {
            return Err(Error::InvalidInput(format!(
                "canonical alphabet size must be in 1..=62, got {size}"
            )));
        }
        Ok(Arc::new(Self::new(CANONICAL_SYMBOLS.chars().take(size))?))
    }

    /// Number of symbols |Σ|.
    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    /// Bits per symbol: `max(1, ⌈lg size⌉)`.
    pub fn bit_width(&self) -> u32 {
        let ceil_log2 = usize::BITS - (self.size() - 1).leading_zeros();
        ceil_log2.max(1)
    }

    /// The index of `ch`, if it is in the alphabet.
    pub fn index_of(&self, ch: char) -> Option<u32> {
        self.index.get(&ch).copied()
    }

    /// The symbol at `index`. Panics when out of range.
    pub fn symbol(&self, index: u32) -> char {
        self.symbols[index as usize]
    }

    /// All symbols in index order.
    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }
}

/// A finite sequence of symbols over a shared [`Alphabet`].
///
/// Stored as dense indices; may be empty. Two strings compare equal when
/// their alphabets and index sequences are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolString {
    alphabet: Arc<Alphabet>,
    data: Vec<u32>,
}

impl SymbolString {
    /// Interns `text` over `alphabet`; every character must be a symbol.
    pub fn from_text(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let mut data = Vec::with_capacity(text.len());
        for ch in text.chars() {
            match alphabet.index_of(ch) {
                Some(i) => data.push(i),
                None => {
                    return Err(Error::InvalidInput(format!(
                        "character {ch:?} is not in the alphabet"
                    )))
                }
            }
        }
        Ok(Self {
            alphabet: Arc::clone(alphabet),
            data,
        })
    }

    /// Wraps raw indices; every index must be below the alphabet size.
    pub fn from_indices(alphabet: &Arc<Alphabet>, data: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = data.iter().find(|&&i| i as usize >= alphabet.size()) {
            return Err(Error::InvalidInput(format!(
                "symbol index {bad} is out of range for an alphabet of size {}",
                alphabet.size()
            )));
        }
        Ok(Self {
            alphabet: Arc::clone(alphabet),
            data,
        })
    }

    /// Length in symbols.
    pub fn len(&self) -> usize {
        self.data.len()
    }

    /// True when the string has no symbols.
    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// The underlying symbol indices.
    pub fn symbols(&self) -> &[u32] {
        &self.data
    }

    /// The shared alphabet.
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Renders the string back to characters.
    pub fn to_text(&self) -> String {
        self.data
            .iter()
            .map(|&i| self.alphabet.symbol(i))
            .collect()
    }
}

/// Errors unless both strings share one alphabet (by content).
pub(crate) fn ensure_same_alphabet(x: &SymbolString, y: &SymbolString) -> Result<()> {
    if Arc::ptr_eq(&x.alphabet, &y.alphabet) || x.alphabet == y.alphabet {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch)
    }
}

/// Exact edit distance: the minimum number of unit-cost insertions,
/// deletions, and substitutions transforming `x` into `y`.
///
/// Symmetric, zero iff `x == y`, at most `max(|x|, |y|)`, and satisfies the
/// triangle inequality. Errors when the alphabets differ.
pub fn edit_distance(x: &SymbolString, y: &SymbolString) -> Result<usize> {
    ensure_same_alphabet(x, y)?;
    Ok(levenshtein(x.symbols(), y.symbols()))
}

/// Unit-cost Levenshtein distance over any comparable symbols.
///
/// Two-row dynamic program: O(|a|·|b|) time, O(min row) memory. Used both on
/// raw symbol indices and on content-compared blocks.
pub fn levenshtein<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut curr: Vec<usize> = vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        curr[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let substitute = prev[j] + usize::from(ca != cb);
            curr[j + 1] = substitute.min(prev[j + 1] + 1).min(curr[j] + 1);
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[b.len()]
}

/// Longest input the brute-force oracle accepts.
pub const ORACLE_LENGTH_CAP: usize = 10;

/// Brute-force edit distance by naive recursion over the three edit
/// operations, with no memoization.
///
/// Deliberately the dumbest correct implementation — it exists to verify
/// [`edit_distance`], not to be fast. Errors when either input is longer
/// than [`ORACLE_LENGTH_CAP`] or the alphabets differ.
pub fn edit_distance_oracle(x: &SymbolString, y: &SymbolString) -> Result<usize> {
    ensure_same_alphabet(x, y)?;
    for len in [x.len(), y.len()] {
        if len > ORACLE_LENGTH_CAP {
            return Err(Error::OracleCap {
                len,
                cap: ORACLE_LENGTH_CAP,
            });
        }
    }
    Ok(oracle_recurse(x.symbols(), y.symbols()))
}

fn oracle_recurse(a: &[u32], b: &[u32]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }
    let substitute = oracle_recurse(&a[1..], &b[1..]) + usize::from(a[0] != b[0]);
    let delete = oracle_recurse(&a[1..], b) + 1;
    let insert = oracle_recurse(a, &b[1..]) + 1;
    substitute.min(delete).min(insert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn alpha(sym: &str) -> Arc<Alphabet> {
        Arc::new(Alphabet::new(sym.chars()).unwrap())
    }

    fn s(al: &Arc<Alphabet>, text: &str) -> SymbolString {
        SymbolString::from_text(al, text).unwrap()
    }

    #[test]
    fn alphabet_rejects_empty_and_duplicates() {
        assert!(Alphabet::new("".chars()).is_err());
        assert!(Alphabet::new("aba".chars()).is_err());
    }

    #[test]
    fn alphabet_bit_width() {
        assert_eq!(alpha("a").bit_width(), 1);
        assert_eq!(alpha("ab").bit_width(), 1);
        assert_eq!(alpha("abc").bit_width(), 2);
        assert_eq!(alpha("abcd").bit_width(), 2);
        assert_eq!(alpha("abcde").bit_width(), 3);
        // |Σ| = 20 needs 5 bits.
        assert_eq!(Alphabet::canonical(20).unwrap().bit_width(), 5);
    }

    #[test]
    fn canonical_alphabet_bounds() {
        assert_eq!(Alphabet::canonical(4).unwrap().symbols(), ['A', 'B', 'C', 'D']);
        assert_eq!(Alphabet::canonical(62).unwrap().size(), 62);
        assert!(Alphabet::canonical(0).is_err());
        assert!(Alphabet::canonical(63).is_err());
    }

    #[test]
    fn string_round_trips_text() {
        let al = alpha("abcd");
        let x = s(&al, "dcba");
        assert_eq!(x.len(), 4);
        assert_eq!(x.to_text(), "dcba");
        assert!(SymbolString::from_text(&al, "xyz").is_err());
        assert!(SymbolString::from_indices(&al, vec![0, 4]).is_err());
    }

    #[test]
    fn distance_examples() {
        let al = alpha("abcdefghiklmnst");
        assert_eq!(edit_distance(&s(&al, ""), &s(&al, "abc")).unwrap(), 3);
        assert_eq!(
            edit_distance(&s(&al, "abcdefgh"), &s(&al, "efghabcd")).unwrap(),
            8
        );
        assert_eq!(
            edit_distance(&s(&al, "kitten"), &s(&al, "sitting")).unwrap(),
            3
        );
    }

    #[test]
    fn oracle_examples() {
        let al = alpha("abc");
        assert_eq!(edit_distance_oracle(&s(&al, "a"), &s(&al, "a")).unwrap(), 0);
        assert_eq!(edit_distance_oracle(&s(&al, "ab"), &s(&al, "ba")).unwrap(), 2);
        assert_eq!(edit_distance_oracle(&s(&al, "abc"), &s(&al, "")).unwrap(), 3);
    }

    #[test]
    fn oracle_enforces_cap() {
        let al = alpha("ab");
        let long = s(&al, &"ab".repeat(6));
        assert!(matches!(
            edit_distance_oracle(&long, &s(&al, "a")),
            Err(Error::OracleCap { len: 12, cap: 10 })
        ));
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let a1 = alpha("ab");
        let a2 = alpha("abc");
        assert!(matches!(
            edit_distance(&s(&a1, "ab"), &s(&a2, "ab")),
            Err(Error::AlphabetMismatch)
        ));
    }

    #[test]
    fn matches_oracle_exhaustively_up_to_length_3() {
        let al = alpha("ab");
        let mut strings = vec![s(&al, "")];
        for len in 1..=3usize {
            for bits in 0..(1u32 << len) {
                let data: Vec<u32> = (0..len).map(|i| (bits >> i) & 1).collect();
                strings.push(SymbolString::from_indices(&al, data).unwrap());
            }
        }
        for x in &strings {
            for y in &strings {
                assert_eq!(
                    edit_distance(x, y).unwrap(),
                    edit_distance_oracle(x, y).unwrap(),
                    "mismatch for {:?} vs {:?}",
                    x.to_text(),
                    y.to_text()
                );
            }
        }
    }

    fn arb_string(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(0u32..4, 0..=max_len)
    }

    proptest! {
        #[test]
        fn symmetric_and_bounded(a in arb_string(24), b in arb_string(24)) {
            let al = alpha("abcd");
            let x = SymbolString::from_indices(&al, a).unwrap();
            let y = SymbolString::from_indices(&al, b).unwrap();
            let d = edit_distance(&x, &y).unwrap();
            prop_assert_eq!(d, edit_distance(&y, &x).unwrap());
            let lo = x.len().abs_diff(y.len());
            let hi = x.len().max(y.len());
            prop_assert!(d >= lo && d <= hi);
            prop_assert_eq!(d == 0, x == y);
        }

        #[test]
        fn triangle_inequality(a in arb_string(16), b in arb_string(16), c in arb_string(16)) {
            let al = alpha("abcd");
            let x = SymbolString::from_indices(&al, a).unwrap();
            let y = SymbolString::from_indices(&al, b).unwrap();
            let z = SymbolString::from_indices(&al, c).unwrap();
            let xz = edit_distance(&x, &z).unwrap();
            let xy = edit_distance(&x, &y).unwrap();
            let yz = edit_distance(&y, &z).unwrap();
            prop_assert!(xz <= xy + yz);
        }

        #[test]
        fn agrees_with_oracle_on_short_strings(
            a in proptest::collection::vec(0u32..2, 0..=5),
            b in proptest::collection::vec(0u32..2, 0..=5),
        ) {
            let al = alpha("ab");
            let x = SymbolString::from_indices(&al, a).unwrap();
            let y = SymbolString::from_indices(&al, b).unwrap();
            prop_assert_eq!(
                edit_distance(&x, &y).unwrap(),
                edit_distance_oracle(&x, &y).unwrap()
            );
        }
    }
}
