use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// A point of the projective plane, scaled so its last nonzero coordinate is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    pub x: Elem,
    pub y: Elem,
    pub z: Elem,
}

impl ProjectivePoint {
    pub fn new(field: &Field, x: Elem, y: Elem, z: Elem) -> Result<ProjectivePoint> {
        let last = [z, y, x]
            .into_iter()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::PreconditionViolated("all coordinates are zero".into()))?;
        let s = field.inv(last)?;
        Ok(ProjectivePoint {
            x: field.mul(x, s),
            y: field.mul(y, s),
            z: field.mul(z, s),
        })
    }

    pub fn from_vec(field: &Field, v: &[Elem]) -> Result<ProjectivePoint> {
        match v {
            &[x, y, z] => ProjectivePoint::new(field, x, y, z),
            _ => Err(Error::ShapeMismatch(format!(
                "point needs 3 coordinates, got {}",
                v.len()
            ))),
        }
    }

    pub fn coords(&self) -> [Elem; 3] {
        [self.x, self.y, self.z]
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}:{}:{})",
            self.x.value(),
            self.y.value(),
            self.z.value()
        )
    }
}

/// Determinant of the 3x3 matrix with the points as rows.
pub fn det3(f: &Field, p: &[Elem; 3], q: &[Elem; 3], r: &[Elem; 3]) -> Elem {
    let minor = |i: usize, j: usize| f.sub(f.mul(q[i], r[j]), f.mul(q[j], r[i]));
    f.add(
        f.sub(f.mul(p[0], minor(1, 2)), f.mul(p[1], minor(0, 2))),
        f.mul(p[2], minor(0, 1)),
    )
}

pub fn collinear(f: &Field, p: &ProjectivePoint, q: &ProjectivePoint, r: &ProjectivePoint) -> bool {
    det3(f, &p.coords(), &q.coords(), &r.coords()).is_zero()
}

/// The nodal cubic `(Y - alpha X)(Y - beta X) Z = X^3`. Its smooth points form
/// a group isomorphic to `F_q^*`, with three smooth points summing to the
/// identity exactly when they are collinear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularCurve {
    field: Field,
    alpha: Elem,
    beta: Elem,
}

impl SingularCurve {
    pub fn new(field: &Field, alpha: Elem, beta: Elem) -> Result<SingularCurve> {
        field.check(alpha)?;
        field.check(beta)?;
        if alpha == beta {
            return Err(Error::PreconditionViolated(
                "alpha and beta must differ".into(),
            ));
        }
        Ok(SingularCurve {
            field: field.clone(),
            alpha,
            beta,
        })
    }

    /// `alpha = 0`, `beta = 1`.
    pub fn standard(field: &Field) -> SingularCurve {
        SingularCurve::new(field, Elem::ZERO, Elem::ONE).expect("0 != 1")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    pub fn beta(&self) -> Elem {
        self.beta
    }

    /// The point at infinity `(0:1:0)`, the group identity.
    pub fn identity(&self) -> ProjectivePoint {
        ProjectivePoint {
            x: Elem::ZERO,
            y: Elem::ONE,
            z: Elem::ZERO,
        }
    }

    /// The node `(0:0:1)`.
    pub fn singular_point(&self) -> ProjectivePoint {
        ProjectivePoint {
            x: Elem::ZERO,
            y: Elem::ZERO,
            z: Elem::ONE,
        }
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        let f = &self.field;
        let l1 = f.sub(p.y, f.mul(self.alpha, p.x));
        let l2 = f.sub(p.y, f.mul(self.beta, p.x));
        f.mul(f.mul(l1, l2), p.z) == f.pow(p.x, 3)
    }

    /// `(y - beta x) / (y - alpha x)`, and 1 at infinity.
    pub fn phi(&self, p: &ProjectivePoint) -> Result<Elem> {
        if !self.contains(p) {
            return Err(Error::NotOnCurve);
        }
        if *p == self.singular_point() {
            return Err(Error::SingularPoint);
        }
        if *p == self.identity() {
            return Ok(Elem::ONE);
        }
        let f = &self.field;
        let num = f.sub(p.y, f.mul(self.beta, p.x));
        let den = f.sub(p.y, f.mul(self.alpha, p.x));
        f.div(num, den)
    }

    /// Inverse of [`SingularCurve::phi`]: the smooth point on the line
    /// `y = k x` through the node, `k = (beta - u alpha) / (1 - u)`.
    pub fn phi_inverse(&self, u: Elem) -> Result<ProjectivePoint> {
        let f = &self.field;
        f.check(u)?;
        if u.is_zero() {
            return Err(Error::ZeroInput);
        }
        if u == Elem::ONE {
            return Ok(self.identity());
        }
        let k = f.div(f.sub(self.beta, f.mul(u, self.alpha)), f.sub(Elem::ONE, u))?;
        let x = f.mul(f.sub(k, self.alpha), f.sub(k, self.beta));
        let p = ProjectivePoint {
            x,
            y: f.mul(k, x),
            z: Elem::ONE,
        };
        assert!(self.contains(&p), "phi_inverse left the curve");
        assert_eq!(self.phi(&p), Ok(u), "phi_inverse is not a right inverse");
        Ok(p)
    }
}

/// `curve.phi(p)` as a free function.
pub fn curve_phi(curve: &SingularCurve, p: &ProjectivePoint) -> Result<Elem> {
    curve.phi(p)
}

pub fn phi_inverse(curve: &SingularCurve, u: Elem) -> Result<ProjectivePoint> {
    curve.phi_inverse(u)
}
