//! Inverse-position distance on strings with all-distinct symbols.

use std::collections::HashMap;
use std::hash::Hash;

use crate::{Error, Result};

/// Sum over ordered symbol pairs `(a, b)`, `a ≠ b`, of
/// `|T_P(a,b) − T_Q(a,b)|`, where `T_S(a,b) = 1/(pos_S(b) − pos_S(a))` when
/// both symbols occur in `S` and 0 otherwise.
///
/// Inputs are symbol slices with all elements distinct (the Ulam condition);
/// pass a plain string's symbols or an expansion's grams. Ordered pairs
/// double every term uniformly, which cancels in any distortion ratio.
/// Symmetric and zero on equal inputs. Errors when either input repeats a
/// symbol.
pub fn charikar_distance<S: Eq + Hash>(p: &[S], q: &[S]) -> Result<f64> {
    let pos_p = position_map(p)?;
    let pos_q = position_map(q)?;
    let mut total = 0.0;
    // Pairs with both symbols in P contribute |T_P − T_Q| (T_Q may be 0).
    for (i, a) in p.iter().enumerate() {
        for (j, b) in p.iter().enumerate() {
            if i == j {
                continue;
            }
            let tp = 1.0 / (j as f64 - i as f64);
            let tq = match (pos_q.get(a), pos_q.get(b)) {
                (Some(&qa), Some(&qb)) => 1.0 / (qb as f64 - qa as f64),
                _ => 0.0,
            };
            total += (tp - tq).abs();
        }
    }
    // Remaining pairs: both symbols in Q but not both in P, so T_P = 0.
    for (i, a) in q.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            if i == j || (pos_p.contains_key(a) && pos_p.contains_key(b)) {
                continue;
            }
            total += (1.0 / (j as f64 - i as f64)).abs();
        }
    }
    Ok(total)
}

/// Maps each symbol to its position, rejecting repeated symbols.
pub(super) fn position_map<S: Eq + Hash>(s: &[S]) -> Result<HashMap<&S, usize>> {
    let mut map = HashMap::with_capacity(s.len());
    for (i, sym) in s.iter().enumerate() {
        if map.insert(sym, i).is_some() {
            return Err(Error::NotUlam);
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn chars(text: &str) -> Vec<char> {
        text.chars().collect()
    }

    #[test]
    fn zero_on_equal_inputs() {
        let p = chars("abcdef");
        assert_eq!(charikar_distance(&p, &p).unwrap(), 0.0);
        let empty: Vec<char> = vec![];
        assert_eq!(charikar_distance(&empty, &empty).unwrap(), 0.0);
    }

    #[test]
    fn swap_example() {
        // Pairs (a,b) and (b,a) each contribute |1 − (−1)| = 2.
        let d = charikar_distance(&chars("ab"), &chars("ba")).unwrap();
        assert_eq!(d, 4.0);
    }

    #[test]
    fn omitted_symbol_example() {
        // (a,c) and (c,a) contribute 0.5 each; (b,c) and (c,b) contribute 1
        // each; (a,b) and (b,a) contribute 0.
        let d = charikar_distance(&chars("abc"), &chars("ab")).unwrap();
        assert_eq!(d, 3.0);
    }

    #[test]
    fn rejects_repeated_symbols() {
        assert!(matches!(
            charikar_distance(&chars("aba"), &chars("ab")),
            Err(Error::NotUlam)
        ));
        assert!(matches!(
            charikar_distance(&chars("ab"), &chars("bb")),
            Err(Error::NotUlam)
        ));
    }

    #[test]
    fn works_on_gram_tuples() {
        let p: Vec<Box<[u32]>> = vec![Box::from([0u32, 1]), Box::from([1u32, 0])];
        let q: Vec<Box<[u32]>> = vec![Box::from([1u32, 0]), Box::from([0u32, 1])];
        assert_eq!(charikar_distance(&p, &q).unwrap(), 4.0);
    }

    fn arb_distinct(max: usize) -> impl Strategy<Value = Vec<u16>> {
        // A shuffled subset of 0..32 is always duplicate-free.
        proptest::collection::vec(0u16..32, 0..=max).prop_map(|mut v| {
            v.sort_unstable();
            v.dedup();
            v
        })
    }

    proptest! {
        #[test]
        fn symmetric_and_nonnegative(a in arb_distinct(12), b in arb_distinct(12)) {
            let d_ab = charikar_distance(&a, &b).unwrap();
            let d_ba = charikar_distance(&b, &a).unwrap();
            prop_assert!((d_ab - d_ba).abs() < 1e-12);
            prop_assert!(d_ab >= 0.0);
        }
    }
}
