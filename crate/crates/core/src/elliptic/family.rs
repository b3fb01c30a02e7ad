use rayon::prelude::*;

use super::behrend::matching_trisum_set;
use super::curve::{collinear, det3, ProjectivePoint, SingularCurve};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::lrc::{assemble, LrcCode, LrcParams};
use crate::matrix::Matrix;

/// Families at most this large are checked exhaustively on construction.
pub const BRUTE_FORCE_LIMIT: usize = 300;

/// Points of the projective plane partitioned into collinear triples. Point
/// `3i + j` is member `j` of triple `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleFamily {
    field: Field,
    points: Vec<ProjectivePoint>,
}

impl TripleFamily {
    pub fn new(field: &Field, points: Vec<ProjectivePoint>) -> Result<TripleFamily> {
        if !points.len().is_multiple_of(3) {
            return Err(Error::ShapeMismatch(format!(
                "{} points do not split into triples",
                points.len()
            )));
        }
        for p in &points {
            for c in p.coords() {
                field.check(c)?;
            }
        }
        Ok(TripleFamily {
            field: field.clone(),
            points,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn num_triples(&self) -> usize {
        self.points.len() / 3
    }

    pub fn triple(&self, i: usize) -> [ProjectivePoint; 3] {
        [
            self.points[3 * i],
            self.points[3 * i + 1],
            self.points[3 * i + 2],
        ]
    }

    pub fn triples(&self) -> impl Iterator<Item = [ProjectivePoint; 3]> + '_ {
        (0..self.num_triples()).map(|i| self.triple(i))
    }

    /// The first `g` triples.
    pub fn truncate(&self, g: usize) -> TripleFamily {
        TripleFamily {
            field: self.field.clone(),
            points: self.points[..3 * g.min(self.num_triples())].to_vec(),
        }
    }

    /// First triple whose points are not collinear.
    pub fn first_non_collinear(&self) -> Option<usize> {
        (0..self.num_triples()).find(|&i| {
            let [a, b, c] = self.triple(i);
            !collinear(&self.field, &a, &b, &c)
        })
    }

    /// First collinear three-subset (in lexicographic order) other than a
    /// listed triple. Repeated points count as collinear.
    pub fn extra_collinear(&self) -> Option<[usize; 3]> {
        let f = &self.field;
        let pts: Vec<[Elem; 3]> = self.points.iter().map(ProjectivePoint::coords).collect();
        let n = pts.len();
        (0..n).into_par_iter().find_map_first(|i| {
            for j in i + 1..n {
                for k in j + 1..n {
                    if i / 3 == k / 3 {
                        continue;
                    }
                    if det3(f, &pts[i], &pts[j], &pts[k]).is_zero() {
                        return Some([i, j, k]);
                    }
                }
            }
            None
        })
    }

    /// Exhaustive check: every triple collinear and nothing else.
    pub fn check(&self) -> Result<()> {
        if let Some(i) = self.first_non_collinear() {
            return Err(Error::NotCollinear(i));
        }
        match self.extra_collinear() {
            Some(t) => Err(Error::ExtraCollinearTriple(t)),
            None => Ok(()),
        }
    }

    /// Triples as unordered point sets, for comparisons up to reordering
    /// within a triple.
    pub fn triple_sets(&self) -> Vec<[ProjectivePoint; 3]> {
        self.triples()
            .map(|mut t| {
                t.sort();
                t
            })
            .collect()
    }
}

/// Points `phi^-1(g^x)` for the residues `x` of `matching_trisum_set(q - 1)`,
/// on the curve `Y (Y - X) Z = X^3`, with `g` the primitive element.
pub fn matching_collinear_family(field: &Field) -> Result<TripleFamily> {
    let q = field.order();
    if q < 61 {
        return Err(Error::PreconditionViolated(format!(
            "need q >= 61, got {q}"
        )));
    }
    let curve = SingularCurve::standard(field);
    let g = field.primitive_element();
    let sums = matching_trisum_set(q - 1)?;
    let points = sums
        .elements()
        .map(|k| curve.phi_inverse(field.pow(g, k)))
        .collect::<Result<Vec<_>>>()?;
    let family = TripleFamily::new(field, points)?;
    if family.points.len() <= BRUTE_FORCE_LIMIT {
        family.check()?;
    }
    Ok(family)
}

/// Scales the points of each triple to sum to zero and uses them as heavy
/// columns: `A_i = [1 1 1]`, `B_i = [0 | -b | c]`. The code is maximally
/// recoverable exactly when the family is matching-collinear.
pub fn triples_to_code(family: &TripleFamily) -> Result<LrcCode> {
    let g = family.num_triples();
    if g < 2 {
        return Err(Error::PreconditionViolated(format!(
            "need at least 2 triples, got {g}"
        )));
    }
    let f = family.field();
    let params = LrcParams::new(3 * g, 3, 1, 3, f)?;
    let ones = Matrix::from_fn(f, 1, 3, |_, _| Elem::ONE);
    let mut b_blocks = Vec::with_capacity(g);
    for (i, t) in family.triples().enumerate() {
        let m = Matrix::from_fn(f, 3, 3, |row, col| t[col].coords()[row]);
        if !m.det()?.is_zero() {
            return Err(Error::NotCollinear(i));
        }
        let null = m.null_space();
        if null.cols() != 1 {
            return Err(Error::DegenerateScaling(i));
        }
        let s = null.column(0);
        if s.iter().any(|c| c.is_zero()) {
            return Err(Error::DegenerateScaling(i));
        }
        b_blocks.push(Matrix::from_fn(f, 3, 3, |row, col| match col {
            0 => Elem::ZERO,
            1 => f.neg(f.mul(s[1], m[(row, 1)])),
            _ => f.mul(s[2], m[(row, 2)]),
        }));
    }
    assemble(params, vec![ones; g], b_blocks)
}

/// Reverse direction: after scaling columns so each local row is all ones, the
/// heavy columns `v1, v2, v3` of a group give the triple
/// `v2 - v1, v3 - v2, v1 - v3`.
pub fn code_to_triples(code: &LrcCode) -> Result<TripleFamily> {
    let p = code.params();
    if (p.r, p.a, p.h) != (3, 1, 3) {
        return Err(Error::ShapeMismatch(format!(
            "need r = 3, a = 1, h = 3, got r = {}, a = {}, h = {}",
            p.r, p.a, p.h
        )));
    }
    let f = code.field();
    let mut points = Vec::with_capacity(p.n);
    for (i, (a, b)) in code.a_blocks().iter().zip(code.b_blocks()).enumerate() {
        let cols: Vec<Vec<Elem>> = (0..3)
            .map(|j| {
                let w = f
                    .inv(a[(0, j)])
                    .map_err(|_| Error::ShapeMismatch(format!("zero local entry in group {i}")))?;
                Ok(b.column(j).into_iter().map(|x| f.mul(x, w)).collect())
            })
            .collect::<Result<_>>()?;
        for (u, v) in [(1, 0), (2, 1), (0, 2)] {
            let diff: Vec<Elem> = cols[u]
                .iter()
                .zip(&cols[v])
                .map(|(&x, &y)| f.sub(x, y))
                .collect();
            points.push(
                ProjectivePoint::from_vec(f, &diff).map_err(|_| Error::DegenerateScaling(i))?,
            );
        }
    }
    let family = TripleFamily::new(f, points)?;
    if family.points.len() <= BRUTE_FORCE_LIMIT {
        family.check()?;
    }
    Ok(family)
}

/// Smallest prime power `q >= 61` whose family has at least `g` triples,
/// truncated to exactly `g`.
pub fn smallest_family(g: usize) -> Result<TripleFamily> {
    for q in 61u64..=1 << 20 {
        let Some((p, m)) = crate::numtheory::prime_power(q) else {
            continue;
        };
        if super::behrend_set((q - 1) / 20).len() < g {
            continue;
        }
        let family = matching_collinear_family(&Field::new(p, m)?)?;
        return Ok(family.truncate(g));
    }
    Err(Error::SweepExhausted)
}
