//! Vandermonde and Cauchy matrices, and the block determinant expansion used
//! to cross-check the recoverability arguments.

use std::collections::HashSet;

use super::Matrix;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// `entry(j, i) = elems[i]^(start_power + j)` for `j < num_rows`.
pub fn vandermonde(
    field: &Field,
    elems: &[Elem],
    num_rows: usize,
    start_power: u64,
) -> Result<Matrix> {
    let mut seen = HashSet::new();
    for &e in elems {
        field.check(e)?;
        if !seen.insert(e) {
            return Err(Error::DuplicateElements);
        }
    }
    if start_power >= 1 && elems.contains(&Elem::ZERO) {
        return Err(Error::PreconditionViolated(
            "zero node in a Vandermonde matrix starting at a positive power".into(),
        ));
    }
    Ok(Matrix::from_fn(field, num_rows, elems.len(), |j, i| {
        field.pow(elems[i], start_power + j as u64)
    }))
}

fn check_cauchy_nodes(field: &Field, alphas: &[Elem], betas: &[Elem]) -> Result<()> {
    let mut seen = HashSet::new();
    for &e in alphas.iter().chain(betas) {
        field.check(e)?;
        if !seen.insert(e) {
            return Err(Error::Collision);
        }
    }
    Ok(())
}

/// `entry(j, i) = 1 / (alphas[i] - betas[j])`: one row per beta, one column per alpha.
pub fn cauchy(field: &Field, alphas: &[Elem], betas: &[Elem]) -> Result<Matrix> {
    check_cauchy_nodes(field, alphas, betas)?;
    Ok(Matrix::from_fn(field, betas.len(), alphas.len(), |j, i| {
        field
            .inv(field.sub(alphas[i], betas[j]))
            .expect("distinct nodes")
    }))
}

/// Product formula for the determinant of a square Cauchy matrix.
pub fn cauchy_det_closed_form(field: &Field, alphas: &[Elem], betas: &[Elem]) -> Result<Elem> {
    if alphas.len() != betas.len() {
        return Err(Error::NotSquare {
            rows: betas.len(),
            cols: alphas.len(),
        });
    }
    check_cauchy_nodes(field, alphas, betas)?;
    let f = field;
    let n = alphas.len();
    let mut num = Elem::ONE;
    for i in 0..n {
        for j in 0..i {
            num = f.mul(num, f.sub(alphas[i], alphas[j]));
            num = f.mul(num, f.sub(betas[j], betas[i]));
        }
    }
    let den = f.product(
        alphas
            .iter()
            .flat_map(|&a| betas.iter().map(move |&b| f.sub(a, b))),
    );
    f.div(num, den)
}

fn block_shapes(c_list: &[Matrix], d_list: &[Matrix]) -> Result<(Field, usize, usize, Vec<usize>)> {
    if c_list.is_empty() || c_list.len() != d_list.len() {
        return Err(Error::ShapeMismatch(
            "need the same positive number of C and D blocks".into(),
        ));
    }
    let field = c_list[0].field().clone();
    let a = c_list[0].rows();
    let h = d_list[0].rows();
    let mut t = Vec::with_capacity(c_list.len());
    for (c, d) in c_list.iter().zip(d_list) {
        if c.field() != &field || d.field() != &field {
            return Err(Error::FieldMismatch);
        }
        if c.rows() != a || d.rows() != h || c.cols() != d.cols() || c.cols() < a {
            return Err(Error::ShapeMismatch(format!(
                "C block {}x{} with D block {}x{}",
                c.rows(),
                c.cols(),
                d.rows(),
                d.cols()
            )));
        }
        t.push(c.cols() - a);
    }
    if t.iter().sum::<usize>() != h {
        return Err(Error::ShapeMismatch(format!(
            "extra columns {t:?} do not sum to {h}"
        )));
    }
    Ok((field, a, h, t))
}

/// Determinant of the square matrix with the `C_i` on the block diagonal and
/// the `D_i` side by side underneath.
pub fn block_det_lhs(c_list: &[Matrix], d_list: &[Matrix]) -> Result<Elem> {
    let (field, a, h, _) = block_shapes(c_list, d_list)?;
    let l = c_list.len();
    let size = a * l + h;
    let mut m = Matrix::zeros(&field, size, size);
    let mut col = 0;
    for (i, (c, d)) in c_list.iter().zip(d_list).enumerate() {
        m.set_block(a * i, col, c);
        m.set_block(a * l, col, d);
        col += c.cols();
    }
    m.det()
}

/// The same determinant expanded over ordered partitions of the D rows:
/// `(-1)^(a * sum t_i (l - i)) * sum sgn(S) * prod det[C_i ; D_i rows S_i]`.
pub fn block_det_rhs(c_list: &[Matrix], d_list: &[Matrix]) -> Result<Elem> {
    let (field, a, h, t) = block_shapes(c_list, d_list)?;
    let f = &field;
    let l = t.len();
    let exponent: usize = t
        .iter()
        .enumerate()
        .map(|(i, ti)| a * ti * (l - 1 - i))
        .sum();
    let mut total = Elem::ZERO;
    for parts in ordered_partitions(h, &t) {
        let mut term = Elem::ONE;
        for (i, s) in parts.iter().enumerate() {
            let block = c_list[i].vstack(&d_list[i].select_rows(s))?;
            term = f.mul(term, block.det()?);
            if term.is_zero() {
                break;
            }
        }
        if term.is_zero() {
            continue;
        }
        if partition_sign(&parts) {
            term = f.neg(term);
        }
        total = f.add(total, term);
    }
    Ok(if exponent % 2 == 1 {
        f.neg(total)
    } else {
        total
    })
}

/// All ordered partitions of `0..h` into sorted parts of sizes `t`.
pub fn ordered_partitions(h: usize, t: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rec(
        remaining: &[usize],
        t: &[usize],
        acc: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let Some((&first, rest)) = t.split_first() else {
            out.push(acc.clone());
            return;
        };
        for pick in crate::combinat::Combinations::new(remaining.len(), first) {
            let chosen: Vec<usize> = pick.iter().map(|&k| remaining[k]).collect();
            let left: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|x| !chosen.contains(x))
                .collect();
            acc.push(chosen);
            rec(&left, rest, acc, out);
            acc.pop();
        }
    }
    let all: Vec<usize> = (0..h).collect();
    let mut out = Vec::new();
    rec(&all, t, &mut Vec::new(), &mut out);
    out
}

/// True when the concatenation of the parts is an odd permutation.
pub fn partition_sign(parts: &[Vec<usize>]) -> bool {
    let seq: Vec<usize> = parts.iter().flatten().copied().collect();
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}
