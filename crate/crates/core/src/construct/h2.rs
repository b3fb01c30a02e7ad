//! Two heavy parities.
//!
//! Nodes `alpha_1..alpha_r` are distinct elements of a subgroup G and
//! `lambda_1..lambda_g` lie in distinct cosets of G. Every group uses the local
//! block with rows `alpha^1, ..., alpha^a`; the heavy block of group `i` is
//! `[lambda_i ... lambda_i ; alpha^(a+1)]`. A pattern with one extra erasure in
//! each of two groups then reduces to `lambda_i * P' - lambda_j * P != 0` where
//! `P, P'` are products of nodes, i.e. elements of G.

use super::search::{find_field_h2, FieldSearchResult};
use crate::error::{Error, Result};
use crate::field::{Elem, SubgroupData};
use crate::lrc::{assemble, check_shape, LrcCode, LrcParams};
use crate::matrix::{vandermonde, Matrix};

/// The elements chosen for one instance of the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H2Parameters {
    pub alphas: Vec<Elem>,
    pub lambdas: Vec<Elem>,
}

impl H2Parameters {
    pub fn choose(n: usize, r: usize, a: usize, found: &FieldSearchResult) -> Result<H2Parameters> {
        check_shape(n, r, a, 2)?;
        let g = (n / r) as u64;
        let sub = &found.subgroup;
        if sub.order() < r as u64 {
            return Err(Error::PreconditionViolated(format!(
                "subgroup of order {} is smaller than r = {r}",
                sub.order()
            )));
        }
        if sub.coset_count() < g {
            return Err(Error::PreconditionViolated(format!(
                "subgroup has {} cosets, need {g}",
                sub.coset_count()
            )));
        }
        let reps = if sub.coset_reps().len() as u64 >= g {
            sub.coset_reps()[..g as usize].to_vec()
        } else {
            SubgroupData::of_order(&found.field, sub.order(), g)?
                .coset_reps()
                .to_vec()
        };
        Ok(H2Parameters {
            alphas: sub.elements().take(r).collect(),
            lambdas: reps,
        })
    }
}

pub fn construct_h2(n: usize, r: usize, a: usize, found: &FieldSearchResult) -> Result<LrcCode> {
    let choice = H2Parameters::choose(n, r, a, found)?;
    let f = &found.field;
    let params = LrcParams::new(n, r, a, 2, f)?;
    let local = vandermonde(f, &choice.alphas, a, 1)?;
    let top = vandermonde(f, &choice.alphas, 1, a as u64 + 1)?;
    let b_blocks = choice
        .lambdas
        .iter()
        .map(|&lambda| Matrix::from_fn(f, 2, r, |i, j| if i == 0 { lambda } else { top[(0, j)] }))
        .collect();
    assemble(params, vec![local; n / r], b_blocks)
}

/// Searches for a field and builds the code over it.
pub fn build_h2(n: usize, r: usize, a: usize, char2: bool) -> Result<LrcCode> {
    check_shape(n, r, a, 2)?;
    construct_h2(n, r, a, &find_field_h2(n, r, char2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Combinations;
    use crate::construct::search_field_prime;
    use crate::lrc::verify_mr;

    #[test]
    fn desk_scale_instances_are_mr() {
        let found = search_field_prime(4, 3).unwrap();
        assert_eq!(found.q, 13);
        let code = construct_h2(8, 4, 1, &found).unwrap();
        assert!(verify_mr(&code).unwrap().is_mr());
        let code = build_h2(6, 3, 1, false).unwrap();
        assert!(verify_mr(&code).unwrap().is_mr());
        let code = build_h2(12, 4, 2, true).unwrap();
        assert!(code.field().order().is_power_of_two());
        assert!(verify_mr(&code).unwrap().is_mr());
    }

    #[test]
    fn cross_group_determinants_are_nonzero() {
        for (n, r, a) in [(8, 4, 1), (12, 4, 2), (24, 6, 3), (16, 8, 1)] {
            let found = find_field_h2(n, r, false).unwrap();
            let f = &found.field;
            let p = H2Parameters::choose(n, r, a, &found).unwrap();
            let prods: Vec<Elem> = Combinations::new(r, a + 1)
                .map(|s| f.product(s.iter().map(|&j| p.alphas[j])))
                .collect();
            for (i, &li) in p.lambdas.iter().enumerate() {
                for &lj in &p.lambdas[..i] {
                    for &pi in &prods {
                        for &pj in &prods {
                            let det = f.sub(f.mul(li, pj), f.mul(lj, pi));
                            assert!(!det.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn preconditions() {
        let found = search_field_prime(4, 3).unwrap();
        assert!(matches!(
            construct_h2(8, 4, 3, &found),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            construct_h2(10, 5, 1, &found),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            construct_h2(16, 4, 1, &found),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
