use std::collections::HashSet;

use crate::error::{Error, Result};

const GREEDY_LIMIT: u64 = 5000;

/// A subset of `1..=m` with no three-term arithmetic progression.
///
/// Up to 5000 this is the greedy sequence 1, 2, 4, 5, 10, 11, ...; above that it
/// is the largest sphere shell among base-`d` integers with digits below `d / 2`.
pub fn behrend_set(m: u64) -> Vec<u64> {
    let set = if m <= GREEDY_LIMIT {
        greedy(m)
    } else {
        sphere(m)
    };
    assert!(is_ap_free(&set), "progression in the set for m = {m}");
    set
}

fn greedy(m: u64) -> Vec<u64> {
    let mut set: Vec<u64> = Vec::new();
    let mut member = vec![false; m as usize + 1];
    for x in 1..=m {
        // x is the largest term, so look for y < x with 2y - x already present
        let blocked = set
            .iter()
            .rev()
            .take_while(|&&y| 2 * y > x)
            .any(|&y| member[(2 * y - x) as usize]);
        if !blocked {
            set.push(x);
            member[x as usize] = true;
        }
    }
    set
}

fn sphere(m: u64) -> Vec<u64> {
    let mut best = Vec::new();
    // one digit only gives singletons, so d^2 <= m
    for d in (3u64..).take_while(|d| d * d <= m) {
        let half = d.div_ceil(2);
        let mut k = 2u32;
        while d.checked_pow(k).is_some_and(|p| p <= m) {
            let shell = largest_shell(m, d, half, k);
            if shell.len() > best.len() {
                best = shell;
            }
            k += 1;
        }
    }
    best
}

/// Integers `1 + sum a_i d^i <= m` with `0 <= a_i < half`, grouped by `sum a_i^2`;
/// returns the biggest group. Digits below `d / 2` add without carries, so a
/// progression would force a progression of digit vectors on one sphere.
fn largest_shell(m: u64, d: u64, half: u64, k: u32) -> Vec<u64> {
    let mut shells: std::collections::HashMap<u64, Vec<u64>> = std::collections::HashMap::new();
    let mut digits = vec![0u64; k as usize];
    loop {
        let value = 1 + digits.iter().rev().fold(0u64, |acc, &a| acc * d + a);
        if value <= m {
            let norm = digits.iter().map(|a| a * a).sum();
            shells.entry(norm).or_default().push(value);
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                let mut best: Vec<u64> = shells
                    .into_iter()
                    .max_by_key(|(norm, v)| (v.len(), std::cmp::Reverse(*norm)))
                    .map(|(_, v)| v)
                    .unwrap_or_default();
                best.sort_unstable();
                return best;
            }
            digits[i] += 1;
            if digits[i] < half {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// No distinct `x, y, z` in the set with `x + z = 2y`.
pub fn is_ap_free(set: &[u64]) -> bool {
    let members: HashSet<u64> = set.iter().copied().collect();
    set.iter().enumerate().all(|(i, &x)| {
        set[i + 1..]
            .iter()
            .all(|&z| (x + z) % 2 == 1 || x == z || !members.contains(&((x + z) / 2)))
    })
}

/// Residues mod `N` split into triples, each summing to zero, with no other
/// zero-sum three-subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriSumSet {
    pub modulus: u64,
    pub triples: Vec<[u64; 3]>,
}

impl TriSumSet {
    pub fn elements(&self) -> impl Iterator<Item = u64> + '_ {
        self.triples.iter().flatten().copied()
    }

    pub fn len(&self) -> usize {
        3 * self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// First zero-sum three-subset that is not one of the triples, scanning all
    /// subsets.
    pub fn extra_zero_sum(&self) -> Option<[u64; 3]> {
        let elems: Vec<u64> = self.elements().collect();
        let n = self.modulus;
        let len = elems.len();
        for i in 0..len {
            for j in i + 1..len {
                for k in j + 1..len {
                    if (elems[i] + elems[j] + elems[k]).is_multiple_of(n)
                        && !(i / 3 == j / 3 && j / 3 == k / 3)
                    {
                        return Some([elems[i], elems[j], elems[k]]);
                    }
                }
            }
        }
        None
    }
}

const EXHAUSTIVE_LIMIT: u64 = 3000;

/// `{x, N/3 + x, N - N/3 - 2x}` for `x` in `behrend_set(N / 20)`.
pub fn matching_trisum_set(n: u64) -> Result<TriSumSet> {
    if n < 60 {
        return Err(Error::PreconditionViolated(format!(
            "need N >= 60, got {n}"
        )));
    }
    let t = n / 3;
    let triples: Vec<[u64; 3]> = behrend_set(n / 20)
        .into_iter()
        .map(|x| [x, t + x, n - t - 2 * x])
        .collect();
    let set = TriSumSet {
        modulus: n,
        triples,
    };
    let mut seen = HashSet::new();
    assert!(
        set.elements().all(|x| seen.insert(x)),
        "translates overlap for N = {n}"
    );
    if n <= EXHAUSTIVE_LIMIT {
        assert_eq!(set.extra_zero_sum(), None, "extra zero sum for N = {n}");
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn greedy_examples() {
        assert_eq!(behrend_set(1), vec![1]);
        assert_eq!(behrend_set(3), vec![1, 2]);
        assert_eq!(behrend_set(14), vec![1, 2, 4, 5, 10, 11, 13, 14]);
        assert_eq!(behrend_set(30).len(), 10);
    }

    #[test]
    fn greedy_is_the_ternary_sequence() {
        // x - 1 has only digits 0 and 1 in base 3
        let set = behrend_set(2000);
        let expected: Vec<u64> = (1..=2000u64)
            .filter(|&x| {
                let mut v = x - 1;
                while v > 0 {
                    if v % 3 == 2 {
                        return false;
                    }
                    v /= 3;
                }
                true
            })
            .collect();
        assert_eq!(set, expected);
    }

    #[test]
    fn sphere_sets_are_ap_free() {
        for m in [5001, 20_000, 100_000] {
            let set = behrend_set(m);
            assert!(set.iter().all(|&x| (1..=m).contains(&x)));
            assert!(is_ap_free(&set));
            assert!(set.len() > 20, "m = {m}: {}", set.len());
        }
    }

    #[test]
    fn ap_detection() {
        assert!(!is_ap_free(&[1, 2, 3]));
        assert!(!is_ap_free(&[1, 5, 9, 20]));
        assert!(is_ap_free(&[1, 2, 4, 5]));
    }

    #[test]
    fn trisum_examples() {
        let s = matching_trisum_set(60).unwrap();
        assert_eq!(s.triples, vec![[1, 21, 38], [2, 22, 36]]);
        assert!(matching_trisum_set(59).is_err());
        for n in [60, 61, 100, 600, 1000, 3000] {
            let s = matching_trisum_set(n).unwrap();
            assert_eq!(s.len(), 3 * behrend_set(n / 20).len());
            assert!(s.triples.iter().all(|t| t.iter().sum::<u64>() % n == 0));
        }
    }

    #[test]
    fn extra_zero_sums_are_found() {
        let s = TriSumSet {
            modulus: 10,
            triples: vec![[1, 2, 7], [3, 4, 5]],
        };
        assert_eq!(s.extra_zero_sum(), Some([1, 4, 5]));
    }
}
