//! Exhaustive maximal-recoverability check.
//!
//! A group hit by exactly `a` erasures is always repaired by its MDS local code,
//! so a maximal pattern is correctable iff the groups carrying extra erasures are.
//! For a group `i` and an erased column set `S` with `|S| = a + t`, the solutions
//! of the local equations restricted to `S` form a `t`-dimensional space
//! `null(A_i(S))`, and the heavy rows act on it through the `h x t` matrix
//! `P(i, S) = B_i(S) * null(A_i(S))`. The pattern is correctable iff the `h x h`
//! matrix `[P(i_1, S_1) | ... | P(i_l, S_l)]` over the heavy groups is nonsingular.
//! Only heavy configurations are enumerated; the first failing one, completed with
//! the first `a` columns of every other group, is also the first failing maximal
//! pattern in [`enumerate_mr_patterns`](super::enumerate_mr_patterns) order.

use std::collections::HashMap;

use rayon::prelude::*;

use super::pattern::{extras_vectors, pattern_count, subset_table};
use super::{ErasurePattern, LrcCode, LrcParams};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::numtheory::binomial;

pub const DEFAULT_BUDGET: u64 = 100_000_000;
const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Maximum number of reduced rank checks.
    pub budget: u64,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: DEFAULT_BUDGET,
            threads: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    MaximallyRecoverable,
    Counterexample(ErasurePattern),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub verdict: Verdict,
    /// Number of maximal erasure patterns covered.
    pub patterns: u128,
    /// Number of reduced rank checks those patterns collapse to.
    pub checks: u128,
}

impl VerifyReport {
    pub fn is_mr(&self) -> bool {
        self.verdict == Verdict::MaximallyRecoverable
    }

    pub fn counterexample(&self) -> Option<&ErasurePattern> {
        match &self.verdict {
            Verdict::Counterexample(p) => Some(p),
            Verdict::MaximallyRecoverable => None,
        }
    }
}

/// True iff the columns of the parity-check matrix indexed by `pattern` are independent.
pub fn is_correctable(code: &LrcCode, pattern: &ErasurePattern) -> bool {
    code.parity_check().select_columns(pattern.indices()).rank() == pattern.len()
}

/// Sum over extras vectors of the product of `C(r, a + t_i)` over groups with `t_i > 0`.
pub fn reduced_check_count(params: &LrcParams) -> u128 {
    let (r, a) = (params.r as u64, params.a as u64);
    extras_vectors(params.g(), params.h, params.h.min(params.r - params.a))
        .iter()
        .map(|t| {
            t.iter().filter(|&&ti| ti > 0).fold(1u128, |acc, &ti| {
                acc.saturating_mul(binomial(r, a + ti as u64))
            })
        })
        .fold(0u128, u128::saturating_add)
}

pub fn verify_mr(code: &LrcCode) -> Result<VerifyReport> {
    verify_mr_with(code, &VerifyOptions::default())
}

pub fn verify_mr_with(code: &LrcCode, opts: &VerifyOptions) -> Result<VerifyReport> {
    let params = code.params();
    let patterns = pattern_count(params);
    let checks = reduced_check_count(params);
    if checks > opts.budget as u128 {
        return Err(Error::BudgetExceeded {
            patterns,
            checks: checks.min(u64::MAX as u128) as u64,
            budget: opts.budget,
        });
    }
    let run = || search(code);
    let verdict = match opts.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    Ok(VerifyReport {
        verdict,
        patterns,
        checks,
    })
}

/// `P(i, S)` for every group and every needed extra count `t`, flattened row-major.
struct Projections {
    h: usize,
    /// `subsets[t]`: all `(a + t)`-subsets of a group, lexicographic.
    subsets: Vec<Vec<Vec<usize>>>,
    /// `mats[group][t][subset]`: the `h x t` block.
    mats: Vec<Vec<Vec<Vec<Elem>>>>,
}

impl Projections {
    fn new(code: &LrcCode, needed: &[bool]) -> Projections {
        let p = code.params();
        let (r, a, h) = (p.r, p.a, p.h);
        let subsets: Vec<Vec<Vec<usize>>> = (0..needed.len())
            .map(|t| {
                if t > 0 && needed[t] {
                    subset_table(r, a + t)
                } else {
                    Vec::new()
                }
            })
            .collect();
        let mats = (0..p.g())
            .map(|i| {
                let ab = &code.a_blocks()[i];
                let bb = &code.b_blocks()[i];
                subsets
                    .iter()
                    .enumerate()
                    .map(|(t, list)| {
                        list.par_iter()
                            .map(|s| {
                                let null = ab.select_columns(s).null_space();
                                debug_assert_eq!(null.cols(), t, "local block is MDS");
                                let proj = bb.select_columns(s).mul(&null).expect("shapes agree");
                                (0..h).flat_map(|row| proj.row(row).to_vec()).collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Projections { h, subsets, mats }
    }

    fn block(&self, group: usize, t: usize, idx: usize) -> &[Elem] {
        &self.mats[group][t][idx]
    }
}

fn search(code: &LrcCode) -> Verdict {
    let p = code.params();
    let cap = p.h.min(p.r - p.a);
    let vectors = extras_vectors(p.g(), p.h, cap);
    let mut needed = vec![false; cap + 1];
    for t in &vectors {
        for &ti in t {
            needed[ti] = true;
        }
    }
    let proj = Projections::new(code, &needed);
    let f = code.field();
    for t in &vectors {
        let heavy: Vec<(usize, usize)> = t
            .iter()
            .enumerate()
            .filter(|(_, &ti)| ti > 0)
            .map(|(i, &ti)| (i, ti))
            .collect();
        let failure = match heavy.len() {
            0 => None,
            1 => first_failure_single(f, &proj, heavy[0]),
            2 if p.h == 2 => first_failure_pair(f, &proj, heavy[0].0, heavy[1].0),
            _ => first_failure_general(f, &proj, &heavy),
        };
        if let Some(digits) = failure {
            return Verdict::Counterexample(pattern_from(p, &proj, t, &heavy, &digits));
        }
    }
    Verdict::MaximallyRecoverable
}

fn pattern_from(
    p: &LrcParams,
    proj: &Projections,
    t: &[usize],
    heavy: &[(usize, usize)],
    digits: &[usize],
) -> ErasurePattern {
    let mut indices = Vec::with_capacity(p.redundancy());
    let mut next = 0;
    for (i, &ti) in t.iter().enumerate() {
        let base = i * p.r;
        if ti == 0 {
            indices.extend(base..base + p.a);
        } else {
            debug_assert_eq!(heavy[next].0, i);
            indices.extend(proj.subsets[ti][digits[next]].iter().map(|&j| base + j));
            next += 1;
        }
    }
    ErasurePattern::new(indices, p.n).expect("indices are distinct and in range")
}

fn first_failure_single(
    f: &Field,
    proj: &Projections,
    (group, t): (usize, usize),
) -> Option<Vec<usize>> {
    let h = proj.h;
    (0..proj.subsets[t].len())
        .into_par_iter()
        .find_first(|&idx| {
            let mut m = proj.block(group, t, idx).to_vec();
            is_singular(f, &mut m, h)
        })
        .map(|idx| vec![idx])
}

/// Projective class of a 2-vector; `u64::MAX` for the zero vector.
fn projective_key(f: &Field, x: Elem, y: Elem) -> u64 {
    if !x.is_zero() {
        f.div(y, x).expect("nonzero").value()
    } else if !y.is_zero() {
        f.order()
    } else {
        u64::MAX
    }
}

/// Two heavy groups with one extra erasure each and `h = 2`: the 2x2 check fails
/// iff the two projected vectors are proportional.
fn first_failure_pair(f: &Field, proj: &Projections, g1: usize, g2: usize) -> Option<Vec<usize>> {
    let count = proj.subsets[1].len();
    let key = |g: usize, idx: usize| {
        let v = proj.block(g, 1, idx);
        projective_key(f, v[0], v[1])
    };
    let mut first_in_second: HashMap<u64, usize> = HashMap::new();
    for idx in 0..count {
        first_in_second.entry(key(g2, idx)).or_insert(idx);
    }
    let zero_in_second = first_in_second.get(&u64::MAX).copied();
    (0..count).find_map(|i1| {
        let k = key(g1, i1);
        if k == u64::MAX {
            return Some(vec![i1, 0]);
        }
        let hit = match (first_in_second.get(&k).copied(), zero_in_second) {
            (Some(x), Some(z)) => Some(x.min(z)),
            (x, z) => x.or(z),
        };
        hit.map(|i2| vec![i1, i2])
    })
}

fn first_failure_general(
    f: &Field,
    proj: &Projections,
    heavy: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let h = proj.h;
    let radices: Vec<u64> = heavy
        .iter()
        .map(|&(_, t)| proj.subsets[t].len() as u64)
        .collect();
    let total: u64 = radices.iter().product();
    let chunks = total.div_ceil(CHUNK);
    (0..chunks).into_par_iter().find_map_first(|c| {
        let start = c * CHUNK;
        let end = (start + CHUNK).min(total);
        let mut digits = vec![0usize; heavy.len()];
        let mut rest = start;
        for k in (0..heavy.len()).rev() {
            digits[k] = (rest % radices[k]) as usize;
            rest /= radices[k];
        }
        let mut m = vec![Elem::ZERO; h * h];
        for _ in start..end {
            let mut col = 0;
            for (k, &(group, t)) in heavy.iter().enumerate() {
                let b = proj.block(group, t, digits[k]);
                for row in 0..h {
                    m[row * h + col..row * h + col + t].copy_from_slice(&b[row * t..(row + 1) * t]);
                }
                col += t;
            }
            if is_singular(f, &mut m, h) {
                return Some(digits);
            }
            for k in (0..heavy.len()).rev() {
                digits[k] += 1;
                if (digits[k] as u64) < radices[k] {
                    break;
                }
                digits[k] = 0;
            }
        }
        None
    })
}

/// Destructive singularity test of an `n x n` row-major matrix.
fn is_singular(f: &Field, m: &mut [Elem], n: usize) -> bool {
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i * n + c].is_zero()) else {
            return true;
        };
        if p != c {
            for j in c..n {
                m.swap(p * n + j, c * n + j);
            }
        }
        let inv = f.inv(m[c * n + c]).expect("pivot is nonzero");
        for i in c + 1..n {
            let x = m[i * n + c];
            if x.is_zero() {
                continue;
            }
            let factor = f.mul(x, inv);
            for j in c..n {
                m[i * n + j] = f.sub(m[i * n + j], f.mul(factor, m[c * n + j]));
            }
        }
    }
    false
}
