use std::fmt;

use super::LrcParams;
use crate::combinat::{next_combination, Combinations};
use crate::error::{Error, Result};
use crate::numtheory::binomial;

/// A set of erased coordinates, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ErasurePattern {
    indices: Vec<usize>,
}

impl ErasurePattern {
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<ErasurePattern> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElements);
        }
        if let Some(&last) = indices.last() {
            if last >= n {
                return Err(Error::InvalidParams(format!(
                    "erased index {last} out of range for length {n}"
                )));
            }
        }
        Ok(ErasurePattern { indices })
    }

    pub fn empty() -> ErasurePattern {
        ErasurePattern {
            indices: Vec::new(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Erasures per local group of size `r`, for `g` groups.
    pub fn group_counts(&self, r: usize, g: usize) -> Vec<usize> {
        let mut counts = vec![0; g];
        for &i in &self.indices {
            counts[i / r] += 1;
        }
        counts
    }

    /// Parses `0,5,7`; an empty string is the empty pattern.
    pub fn parse(s: &str, n: usize) -> Result<ErasurePattern> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ErasurePattern::empty());
        }
        let indices = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(0, format!("invalid index `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        ErasurePattern::new(indices, n)
    }
}

impl fmt::Display for ErasurePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Vectors `t` of extra erasures per group: `0 <= t_i <= min(h, r - a)` and
/// `sum t_i = h`, in decreasing lexicographic order.
pub fn extras_vectors(g: usize, h: usize, cap: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let g = cur.len();
        if i == g {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let remaining_groups = g - i - 1;
        for t in (0..=cap.min(left)).rev() {
            if left - t > remaining_groups * cap {
                continue;
            }
            cur[i] = t;
            rec(i + 1, left - t, cap, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, h, cap, &mut vec![0; g], &mut out);
    out
}

/// Number of maximal patterns: sum over extras vectors of `prod C(r, a + t_i)`.
pub fn pattern_count(params: &LrcParams) -> u128 {
    let (r, a) = (params.r as u64, params.a as u64);
    extras_vectors(params.g(), params.h, params.h.min(params.r - params.a))
        .iter()
        .map(|t| {
            t.iter().fold(1u128, |acc, &ti| {
                acc.saturating_mul(binomial(r, a + ti as u64))
            })
        })
        .fold(0u128, u128::saturating_add)
}

/// Every maximal erasure pattern exactly once: `a` erasures in each group plus
/// `h` more anywhere. Ordered by extras vector (decreasing lexicographic),
/// then by the per-group subsets with the last group varying fastest.
pub fn enumerate_mr_patterns(params: &LrcParams) -> impl Iterator<Item = ErasurePattern> + '_ {
    let (r, a, g) = (params.r, params.a, params.g());
    extras_vectors(g, params.h, params.h.min(r - a))
        .into_iter()
        .flat_map(move |t| PatternOdometer::new(r, a, t))
}

struct PatternOdometer {
    r: usize,
    subsets: Option<Vec<Vec<usize>>>,
}

impl PatternOdometer {
    fn new(r: usize, a: usize, t: Vec<usize>) -> Self {
        let subsets = t.iter().map(|&ti| (0..a + ti).collect()).collect();
        PatternOdometer {
            r,
            subsets: Some(subsets),
        }
    }
}

impl Iterator for PatternOdometer {
    type Item = ErasurePattern;

    fn next(&mut self) -> Option<ErasurePattern> {
        let r = self.r;
        let cur = self.subsets.as_mut()?;
        let indices = cur
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |&j| i * r + j))
            .collect();
        let mut advanced = false;
        for s in cur.iter_mut().rev() {
            if next_combination(s, r) {
                advanced = true;
                break;
            }
            let k = s.len();
            s.clear();
            s.extend(0..k);
        }
        if !advanced {
            self.subsets = None;
        }
        Some(ErasurePattern { indices })
    }
}

/// `C(r, k)` subsets in lexicographic order, as a flat table of offsets.
pub(crate) fn subset_table(r: usize, k: usize) -> Vec<Vec<usize>> {
    Combinations::new(r, k).collect()
}
