use std::fmt;

use super::check_shape;
use crate::error::{Error, Result};
use crate::numtheory::binomial;

/// An exact fraction in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    pub num: i128,
    pub den: i128,
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Rational {
        assert!(den != 0, "zero denominator");
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i128;
        let s = if den < 0 { -1 } else { 1 };
        Rational {
            num: s * num / g,
            den: s * den / g,
        }
    }

    pub fn ceil(self) -> i128 {
        self.num.div_euclid(self.den) + i128::from(self.num.rem_euclid(self.den) != 0)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerBound {
    /// Every maximally recoverable code needs `q >= q_min`; `value` is the
    /// unrounded right-hand side.
    Exact { q_min: i128, value: Rational },
    /// Only the growth exponent `1 + alpha` is known: `q >= Omega(n^(1+alpha))`
    /// up to unspecified constants.
    Exponent { alpha: Rational },
}

impl LowerBound {
    pub fn exponent(&self) -> Option<Rational> {
        match self {
            LowerBound::Exponent { alpha } => Some(Rational::new(alpha.num + alpha.den, alpha.den)),
            LowerBound::Exact { .. } => None,
        }
    }

    /// True when a field of order `q` is not ruled out.
    pub fn admits(&self, q: u64) -> bool {
        match self {
            LowerBound::Exact { q_min, .. } => q as i128 >= *q_min,
            LowerBound::Exponent { .. } => true,
        }
    }
}

impl fmt::Display for LowerBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LowerBound::Exact { q_min, .. } => write!(f, "exact q>={q_min}"),
            LowerBound::Exponent { alpha } => write!(
                f,
                "asymptotic exponent={} alpha={}",
                self.exponent().expect("exponent variant"),
                alpha
            ),
        }
    }
}

/// Smallest field order any maximally recoverable `(n, r, h, a)` code can use.
///
/// With at least `h` groups the bound is explicit:
/// `(g/(h-1) - 1) * C(r, a+1) - 4` when `h >= a + 2`, otherwise
/// `(g/(h-1) - 1) * C(r-a+h-2, h-1) - 4`. With fewer groups only the
/// exponent `1 + alpha`, `alpha = min(a, h - 2*ceil(h/g)) / ceil(h/g)`, is reported.
pub fn lower_bound_q(n: usize, r: usize, a: usize, h: usize) -> Result<LowerBound> {
    if h < 2 {
        return Err(Error::OutOfScope(format!("needs h >= 2, got h = {h}")));
    }
    check_shape(n, r, a, h)?;
    let g = (n / r) as i128;
    let (hi, ai) = (h as i128, a as i128);
    if g < hi {
        let c = (hi + g - 1) / g;
        let alpha = Rational::new(ai.min(hi - 2 * c), c);
        return Ok(LowerBound::Exponent { alpha });
    }
    let binom = if a + 2 <= h {
        binomial(r as u64, a as u64 + 1)
    } else {
        binomial((r - a + h - 2) as u64, h as u64 - 1)
    } as i128;
    // (g/(h-1) - 1) * binom - 4 = ((g - h + 1) * binom - 4 * (h - 1)) / (h - 1)
    let value = Rational::new((g - hi + 1) * binom - 4 * (hi - 1), hi - 1);
    Ok(LowerBound::Exact {
        q_min: value.ceil(),
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples() {
        let b = lower_bound_q(100, 10, 1, 3).unwrap();
        assert_eq!(b.to_string(), "exact q>=176");
        let b = lower_bound_q(100, 10, 3, 3).unwrap();
        assert_eq!(b.to_string(), "exact q>=108");
        let b = lower_bound_q(100, 50, 1, 4).unwrap();
        assert_eq!(
            b,
            LowerBound::Exponent {
                alpha: Rational::new(0, 1)
            }
        );
        assert_eq!(b.exponent(), Some(Rational::new(1, 1)));
        assert_eq!(b.to_string(), "asymptotic exponent=1 alpha=0");
        assert!(matches!(
            lower_bound_q(100, 10, 1, 1),
            Err(Error::OutOfScope(_))
        ));
    }

    #[test]
    fn rounding_is_upward() {
        // g = 5, h = 3, a = 1, r = 4: (5/2 - 1) * 6 - 4 = 5
        assert_eq!(
            lower_bound_q(20, 4, 1, 3).unwrap(),
            LowerBound::Exact {
                q_min: 5,
                value: Rational::new(5, 1)
            }
        );
        // g = 4, h = 3, a = 1, r = 3: (4/2 - 1) * 3 - 4 = -1
        assert!(matches!(
            lower_bound_q(12, 3, 1, 3).unwrap(),
            LowerBound::Exact { q_min: -1, .. }
        ));
        // g = 3, h = 2 < a + 2: (3 - 1) * C(3, 1) - 4 = 2
        assert!(matches!(
            lower_bound_q(15, 5, 2, 2).unwrap(),
            LowerBound::Exact { q_min: 2, .. }
        ));
        assert_eq!(Rational::new(7, 2).ceil(), 4);
        assert_eq!(Rational::new(-7, 2).ceil(), -3);
        assert_eq!(Rational::new(6, -4), Rational::new(-3, 2));
    }

    #[test]
    fn exponent_with_single_group() {
        // g = 1, h = 3: ceil(h/g) = 3, alpha = min(1, 3 - 6) / 3 = -1
        let b = lower_bound_q(10, 10, 1, 3).unwrap();
        assert_eq!(
            b,
            LowerBound::Exponent {
                alpha: Rational::new(-1, 1)
            }
        );
    }
}
