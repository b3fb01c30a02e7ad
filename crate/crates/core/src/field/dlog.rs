use std::collections::HashMap;

use super::{Elem, Field};
use crate::error::{Error, Result};

/// Fields up to this order get a full log table.
pub const FULL_TABLE_LIMIT: u64 = 1 << 24;

/// Precomputed discrete logarithms to a fixed base.
pub struct DiscreteLog {
    field: Field,
    base: Elem,
    strategy: Strategy,
}

enum Strategy {
    Table(Vec<u32>),
    BabyGiant {
        step: u64,
        baby: HashMap<Elem, u64>,
        giant: Elem,
    },
}

impl DiscreteLog {
    /// Full table for small fields, baby-step/giant-step above [`FULL_TABLE_LIMIT`].
    pub fn new(field: &Field, base: Elem) -> Result<DiscreteLog> {
        if field.order() <= FULL_TABLE_LIMIT {
            Self::table(field, base)
        } else {
            Self::baby_giant(field, base)
        }
    }

    pub fn table(field: &Field, base: Elem) -> Result<DiscreteLog> {
        if base.is_zero() {
            return Err(Error::NotInGroup);
        }
        let n = field.order() - 1;
        let mut table = vec![u32::MAX; field.order() as usize];
        let mut x = Elem::ONE;
        for k in 0..n {
            if table[x.0 as usize] != u32::MAX {
                break;
            }
            table[x.0 as usize] = k as u32;
            x = field.mul(x, base);
        }
        Ok(DiscreteLog {
            field: field.clone(),
            base,
            strategy: Strategy::Table(table),
        })
    }

    pub fn baby_giant(field: &Field, base: Elem) -> Result<DiscreteLog> {
        if base.is_zero() {
            return Err(Error::NotInGroup);
        }
        let n = field.order() - 1;
        let step = (n as f64).sqrt().ceil() as u64;
        let mut baby = HashMap::with_capacity(step as usize);
        let mut x = Elem::ONE;
        for j in 0..step {
            baby.entry(x).or_insert(j);
            x = field.mul(x, base);
        }
        let giant = field.inv(x)?;
        Ok(DiscreteLog {
            field: field.clone(),
            base,
            strategy: Strategy::BabyGiant { step, baby, giant },
        })
    }

    pub fn base(&self) -> Elem {
        self.base
    }

    /// Smallest `k` in `[0, q-1)` with `base^k = u`.
    pub fn log(&self, u: Elem) -> Result<u64> {
        self.field.check(u)?;
        if u.is_zero() {
            return Err(Error::NotInGroup);
        }
        match &self.strategy {
            Strategy::Table(t) => match t[u.0 as usize] {
                u32::MAX => Err(Error::NotInGroup),
                k => Ok(k as u64),
            },
            Strategy::BabyGiant { step, baby, giant } => {
                let n = self.field.order() - 1;
                let mut gamma = u;
                for i in 0..*step {
                    if let Some(&j) = baby.get(&gamma) {
                        let k = i * step + j;
                        if k < n {
                            return Ok(k);
                        }
                    }
                    gamma = self.field.mul(gamma, *giant);
                }
                Err(Error::NotInGroup)
            }
        }
    }
}

/// One-shot `log_g(u)`; build a [`DiscreteLog`] when taking many logs to one base.
pub fn discrete_log(field: &Field, g: Elem, u: Elem) -> Result<u64> {
    if u.is_zero() {
        return Err(Error::NotInGroup);
    }
    DiscreteLog::baby_giant(field, g)?.log(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let f = Field::prime(7).unwrap();
        let g = f.elem(3);
        assert_eq!(discrete_log(&f, g, f.elem(1)), Ok(0));
        assert_eq!(discrete_log(&f, g, f.elem(3)), Ok(1));
        assert_eq!(discrete_log(&f, g, f.elem(6)), Ok(3));
        assert_eq!(discrete_log(&f, g, f.elem(0)), Err(Error::NotInGroup));
    }

    #[test]
    fn strategies_agree_exhaustively() {
        for (p, m) in [(2, 10), (257, 1), (3, 5)] {
            let f = Field::new(p, m).unwrap();
            let g = f.primitive_element();
            let table = DiscreteLog::table(&f, g).unwrap();
            let bsgs = DiscreteLog::baby_giant(&f, g).unwrap();
            let mut x = Elem::ONE;
            for k in 0..f.order() - 1 {
                assert_eq!(table.log(x), Ok(k));
                assert_eq!(bsgs.log(x), Ok(k));
                x = f.mul(x, g);
            }
        }
    }

    #[test]
    fn large_prime_field_uses_baby_giant() {
        let f = Field::prime(1_099_511_627_689).unwrap();
        let g = f.primitive_element();
        let dl = DiscreteLog::new(&f, g).unwrap();
        assert!(matches!(dl.strategy, Strategy::BabyGiant { .. }));
        for k in [0u64, 1, 12_345_678, f.order() - 2] {
            assert_eq!(dl.log(f.pow(g, k)), Ok(k));
        }
    }

    #[test]
    fn non_generator_base_reports_missing_elements() {
        let f = Field::prime(7).unwrap();
        let dl = DiscreteLog::table(&f, f.elem(2)).unwrap();
        assert_eq!(dl.log(f.elem(4)), Ok(2));
        assert_eq!(dl.log(f.elem(3)), Err(Error::NotInGroup));
    }
}
