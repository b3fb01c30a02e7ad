use super::{ErasurePattern, LrcCode};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::matrix::Matrix;

/// Random-access storage for the symbols of a codeword.
pub trait SymbolSource {
    fn read(&self, index: usize) -> Elem;
}

impl SymbolSource for [Elem] {
    fn read(&self, index: usize) -> Elem {
        self[index]
    }
}

impl SymbolSource for Vec<Elem> {
    fn read(&self, index: usize) -> Elem {
        self[index]
    }
}

/// `k x n` generator matrix in reduced row echelon form, so it is the identity on
/// the lexicographically first information set.
pub fn generator_matrix(code: &LrcCode) -> Result<Matrix> {
    Ok(SystematicEncoder::new(code)?.generator)
}

#[derive(Debug, Clone)]
pub struct SystematicEncoder {
    generator: Matrix,
    information_set: Vec<usize>,
}

impl SystematicEncoder {
    pub fn new(code: &LrcCode) -> Result<SystematicEncoder> {
        let h = code.parity_check();
        let expected = code.params().redundancy();
        let rank = h.rank();
        if rank != expected {
            return Err(Error::RankDeficient { rank, expected });
        }
        let rref = h.null_space().transpose().rref();
        Ok(SystematicEncoder {
            generator: rref.matrix,
            information_set: rref.pivots,
        })
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Coordinates where the codeword repeats the message.
    pub fn information_set(&self) -> &[usize] {
        &self.information_set
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if message.len() != self.generator.rows() {
            return Err(Error::LengthMismatch {
                expected: self.generator.rows(),
                got: message.len(),
            });
        }
        self.generator.vec_mul(message)
    }
}

pub fn encode(code: &LrcCode, message: &[Elem]) -> Result<Vec<Elem>> {
    SystematicEncoder::new(code)?.encode(message)
}

/// Recovers the erased symbols of `received` (values at erased positions are ignored).
pub fn decode_erasures(
    code: &LrcCode,
    received: &[Elem],
    erased: &ErasurePattern,
) -> Result<Vec<Elem>> {
    let n = code.params().n;
    if received.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: received.len(),
        });
    }
    if erased.indices().last().is_some_and(|&i| i >= n) {
        return Err(Error::InvalidParams("erased index out of range".into()));
    }
    let f = code.field();
    for &x in received {
        f.check(x)?;
    }
    let h = code.parity_check();
    let known: Vec<usize> = (0..n).filter(|&i| !erased.contains(i)).collect();
    let h_erased = h.select_columns(erased.indices());
    if h_erased.rank() < erased.len() {
        return Err(Error::Uncorrectable(erased.clone()));
    }
    let known_vals: Vec<Elem> = known.iter().map(|&i| received[i]).collect();
    let syndrome = h.select_columns(&known).mul_vec(&known_vals)?;
    let rhs: Vec<Elem> = syndrome.iter().map(|&s| f.neg(s)).collect();
    let solution = h_erased.solve(&rhs).map_err(|_| Error::Inconsistent)?;
    let mut word = received.to_vec();
    for (&i, v) in erased.indices().iter().zip(solution) {
        word[i] = v;
    }
    Ok(word)
}

/// Rebuilds one local group from its own surviving symbols only.
///
/// `erased` holds global coordinates, all inside `group`. Returns the `r`
/// symbols of the group.
pub fn local_repair<S: SymbolSource + ?Sized>(
    code: &LrcCode,
    group: usize,
    erased: &[usize],
    source: &S,
) -> Result<Vec<Elem>> {
    let p = code.params();
    if group >= p.g() {
        return Err(Error::InvalidParams(format!("no group {group}")));
    }
    let range = p.group_range(group);
    let mut offsets: Vec<usize> = Vec::with_capacity(erased.len());
    for &i in erased {
        if !range.contains(&i) {
            return Err(Error::InvalidParams(format!(
                "index {i} is not in group {group}"
            )));
        }
        offsets.push(i - range.start);
    }
    offsets.sort_unstable();
    offsets.dedup();
    if offsets.len() > p.a {
        return Err(Error::TooManyErasures {
            group,
            erased: offsets.len(),
            max: p.a,
        });
    }
    let f = code.field();
    let local = &code.a_blocks()[group];
    let known: Vec<usize> = (0..p.r).filter(|j| !offsets.contains(j)).collect();
    let mut symbols = vec![Elem::ZERO; p.r];
    for &j in &known {
        symbols[j] = source.read(range.start + j);
    }
    if offsets.is_empty() {
        return Ok(symbols);
    }
    let known_vals: Vec<Elem> = known.iter().map(|&j| symbols[j]).collect();
    let syndrome = local.select_columns(&known).mul_vec(&known_vals)?;
    let rhs: Vec<Elem> = syndrome.iter().map(|&s| f.neg(s)).collect();
    let solution = local
        .select_columns(&offsets)
        .solve(&rhs)
        .map_err(|_| Error::Inconsistent)?;
    for (&j, v) in offsets.iter().zip(solution) {
        symbols[j] = v;
    }
    Ok(symbols)
}
