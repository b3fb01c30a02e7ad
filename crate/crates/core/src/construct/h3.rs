//! Three heavy parities over a cubic extension `F = F0^3`.
//!
//! All nodes live in the base field F0. With `G` a subgroup of `F0^*`, the
//! nodes `alpha_j` are drawn from
//! `Omega = { x : (x - beta_{a+2}) / (x - beta_{a+3}) in G }`.
//! The heavy block of group `i` has rows
//! `lambda_i / (alpha_j - beta_{a+1})`, `mu_i / (alpha_j - beta_{a+2})` and
//! `1 / (alpha_j - beta_{a+3})`, where the `mu_i` come from distinct cosets of G
//! and the `lambda_i = v0 + gamma_i v1 + gamma_i^2 v2` are 3-wise independent
//! over F0.

use super::search::{find_field_h3, FieldSearchResult};
use crate::error::{Error, Result};
use crate::field::{Elem, Field, SubgroupData};
use crate::lrc::{assemble, check_shape, LrcCode, LrcParams};
use crate::matrix::{cauchy, Matrix};

/// The elements chosen for one instance of the construction. Everything except
/// `lambdas` is an element of the base field; `lambdas` live in the extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H3Parameters {
    pub base: Field,
    pub extension: Field,
    pub alphas: Vec<Elem>,
    /// `beta_1 .. beta_a`, the Cauchy poles of the local blocks.
    pub betas: Vec<Elem>,
    /// `beta_{a+1}, beta_{a+2}, beta_{a+3}`.
    pub heavy_betas: [Elem; 3],
    pub mus: Vec<Elem>,
    pub gammas: Vec<Elem>,
    pub lambdas: Vec<Elem>,
}

/// `{ x in F0 : x != b3, (x - b2) / (x - b3) in G }`, in increasing encoding.
pub fn omega_set(sub: &SubgroupData, b2: Elem, b3: Elem) -> Vec<Elem> {
    let f = sub.field();
    f.elements()
        .filter(|&x| x != b3)
        .filter(|&x| {
            let ratio = f.div(f.sub(x, b2), f.sub(x, b3)).expect("x != b3");
            sub.contains(ratio)
        })
        .collect()
}

impl H3Parameters {
    pub fn choose(n: usize, r: usize, a: usize, found: &FieldSearchResult) -> Result<H3Parameters> {
        check_shape(n, r, a, 3)?;
        let g = n / r;
        let f0 = &found.field;
        let sub = &found.subgroup;
        let q0 = f0.order();
        if q0 < 2 * r as u64 + 3 {
            return Err(Error::PreconditionViolated(format!(
                "base field order {q0} is below 2r + 3 = {}",
                2 * r + 3
            )));
        }
        if sub.order() < r as u64 + 2 || sub.coset_count() < g as u64 {
            return Err(Error::PreconditionViolated(format!(
                "subgroup of order {} with {} cosets, need order >= {} and >= {g} cosets",
                sub.order(),
                sub.coset_count(),
                r + 2
            )));
        }
        if g as u64 > q0 {
            return Err(Error::PreconditionViolated(format!(
                "need {g} distinct gammas in a field of order {q0}"
            )));
        }

        let b1 = f0.elem(0);
        let mut best = 0;
        let mut picked = None;
        'scan: for v2 in 1..q0 {
            for v3 in 1..q0 {
                if v3 == v2 {
                    continue;
                }
                let (b2, b3) = (f0.elem(v2), f0.elem(v3));
                let omega: Vec<Elem> = omega_set(sub, b2, b3)
                    .into_iter()
                    .filter(|&x| x != b1)
                    .collect();
                best = best.max(omega.len());
                if omega.len() >= r {
                    picked = Some((b2, b3, omega));
                    break 'scan;
                }
            }
        }
        let (b2, b3, omega) = picked.ok_or(Error::OmegaTooSmall {
            found: best,
            needed: r,
        })?;
        let alphas = omega[..r].to_vec();
        let used = |x: &Elem| alphas.contains(x) || [b1, b2, b3].contains(x);
        let betas: Vec<Elem> = f0.elements().filter(|x| !used(x)).take(a).collect();
        if betas.len() < a {
            return Err(Error::PreconditionViolated(
                "base field too small for the local poles".into(),
            ));
        }

        let mus = if sub.coset_reps().len() >= g {
            sub.coset_reps()[..g].to_vec()
        } else {
            SubgroupData::of_order(f0, sub.order(), g as u64)?
                .coset_reps()
                .to_vec()
        };
        let ext = f0.cubic_extension()?;
        let gammas: Vec<Elem> = f0.elements().take(g).collect();
        let lambdas = gammas
            .iter()
            .map(|&c| ext.from_coords(&[Elem::ONE, c, f0.mul(c, c)]))
            .collect();
        Ok(H3Parameters {
            base: f0.clone(),
            extension: ext,
            alphas,
            betas,
            heavy_betas: [b1, b2, b3],
            mus,
            gammas,
            lambdas,
        })
    }
}

pub fn construct_h3(n: usize, r: usize, a: usize, found: &FieldSearchResult) -> Result<LrcCode> {
    let p = H3Parameters::choose(n, r, a, found)?;
    let (f0, f) = (&p.base, &p.extension);
    let params = LrcParams::new(n, r, a, 3, f)?;
    let local = cauchy(f, &p.alphas, &p.betas)?;
    // 1 / (alpha_j - beta_{a+k}) for k = 1, 2, 3, computed in F0 and embedded.
    let poles: Vec<Vec<Elem>> = p
        .heavy_betas
        .iter()
        .map(|&b| {
            p.alphas
                .iter()
                .map(|&x| f.embed(f0.inv(f0.sub(x, b)).expect("alpha avoids the poles")))
                .collect()
        })
        .collect();
    let b_blocks = p
        .lambdas
        .iter()
        .zip(&p.mus)
        .map(|(&lambda, &mu)| {
            let scale = [lambda, f.embed(mu), Elem::ONE];
            Matrix::from_fn(f, 3, r, |k, j| f.mul(scale[k], poles[k][j]))
        })
        .collect();
    assemble(params, vec![local; n / r], b_blocks)
}

/// Searches for a base field and builds the code over its cubic extension.
pub fn build_h3(n: usize, r: usize, a: usize) -> Result<LrcCode> {
    check_shape(n, r, a, 3)?;
    construct_h3(n, r, a, &find_field_h3(n, r)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::subgroup_with_cosets;
    use crate::lrc::verify_mr;

    #[test]
    fn omega_has_one_fewer_element_than_the_subgroup() {
        for q0 in [11u64, 13, 16, 25, 27, 31] {
            let f0 = Field::new(
                crate::numtheory::prime_power(q0).unwrap().0,
                crate::numtheory::prime_power(q0).unwrap().1,
            )
            .unwrap();
            for d in crate::numtheory::divisors(q0 - 1) {
                let sub = SubgroupData::of_order(&f0, d, 1).unwrap();
                let om = omega_set(&sub, f0.elem(1), f0.elem(2));
                assert_eq!(om.len() as u64, d - 1, "q0={q0} d={d}");
            }
        }
    }

    #[test]
    fn lambdas_are_three_wise_independent() {
        let found = find_field_h3(48, 4).unwrap();
        let p = H3Parameters::choose(48, 4, 1, &found).unwrap();
        assert_eq!(p.lambdas.len(), 12);
        let coords: Vec<Vec<Elem>> = p.lambdas.iter().map(|&l| p.extension.coords(l)).collect();
        let g = coords.len();
        for i in 0..g {
            for j in i + 1..g {
                for k in j + 1..g {
                    let m = Matrix::from_rows(
                        &p.base,
                        &[coords[i].clone(), coords[j].clone(), coords[k].clone()],
                    )
                    .unwrap();
                    assert_eq!(m.rank(), 3);
                }
            }
        }
    }

    #[test]
    fn choices_are_distinct_and_valid() {
        let found = find_field_h3(8, 4).unwrap();
        let p = H3Parameters::choose(8, 4, 2, &found).unwrap();
        let mut all: Vec<Elem> = p
            .alphas
            .iter()
            .chain(&p.betas)
            .chain(&p.heavy_betas)
            .copied()
            .collect();
        let len = all.len();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), len);
        assert_eq!(p.heavy_betas, [Elem(0), Elem(1), Elem(2)]);
        assert!(p.mus.iter().all(|m| !m.is_zero()));
        for i in 0..p.mus.len() {
            for j in 0..i {
                assert!(!found
                    .subgroup
                    .contains(p.base.div(p.mus[i], p.mus[j]).unwrap()));
            }
        }
    }

    #[test]
    fn desk_scale_instance_is_mr() {
        let found = find_field_h3(8, 4).unwrap();
        assert_eq!(found.q, 13);
        let code = construct_h3(8, 4, 1, &found).unwrap();
        assert_eq!(code.field().order(), 2197);
        assert!(verify_mr(&code).unwrap().is_mr());
        let code = build_h3(6, 3, 1).unwrap();
        assert!(verify_mr(&code).unwrap().is_mr());
    }

    #[test]
    fn tower_base_field() {
        let f0 = Field::new(2, 4).unwrap();
        let sub = subgroup_with_cosets(&f0, 5, 3).unwrap();
        let found = FieldSearchResult {
            q: 16,
            field: f0,
            subgroup: sub,
            witnesses: (5, 3),
        };
        let code = construct_h3(9, 3, 1, &found).unwrap();
        assert_eq!(code.field().order(), 4096);
        assert!(verify_mr(&code).unwrap().is_mr());
    }

    #[test]
    fn rejects_small_subgroups() {
        let f0 = Field::prime(13).unwrap();
        let sub = subgroup_with_cosets(&f0, 4, 3).unwrap();
        let found = FieldSearchResult {
            q: 13,
            field: f0,
            subgroup: sub,
            witnesses: (4, 3),
        };
        assert!(matches!(
            construct_h3(8, 4, 1, &found),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
