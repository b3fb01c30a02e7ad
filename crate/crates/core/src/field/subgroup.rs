use super::{Elem, Field};
use crate::error::{Error, Result};
use crate::numtheory::{prime_factors, smallest_split};

/// A cyclic subgroup G of the multiplicative group together with
/// representatives of distinct cosets of G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupData {
    field: Field,
    generator: Elem,
    order: u64,
    coset_reps: Vec<Elem>,
}

impl SubgroupData {
    /// The subgroup of order `d` (which must divide q-1) with representatives
    /// `g^0, ..., g^(reps-1)` for the primitive element g.
    pub fn of_order(field: &Field, d: u64, reps: u64) -> Result<SubgroupData> {
        let n = field.order() - 1;
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::NotFound(format!("{d} does not divide {n}")));
        }
        if reps > n / d {
            return Err(Error::NotFound(format!(
                "subgroup of order {d} has only {} cosets",
                n / d
            )));
        }
        let g = field.primitive_element();
        Ok(SubgroupData {
            field: field.clone(),
            generator: field.pow(g, n / d),
            order: d,
            coset_reps: (0..reps)
                .scan(Elem::ONE, |x, _| {
                    let cur = *x;
                    *x = field.mul(*x, g);
                    Some(cur)
                })
                .collect(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coset_reps(&self) -> &[Elem] {
        &self.coset_reps
    }

    /// Total number of cosets of G in the multiplicative group.
    pub fn coset_count(&self) -> u64 {
        (self.field.order() - 1) / self.order
    }

    pub fn contains(&self, x: Elem) -> bool {
        !x.is_zero() && self.field.pow(x, self.order) == Elem::ONE
    }

    /// `generator^0, generator^1, ..., generator^(d-1)`.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        let f = &self.field;
        (0..self.order).scan(Elem::ONE, move |x, _| {
            let cur = *x;
            *x = f.mul(*x, self.generator);
            Some(cur)
        })
    }

    /// True when `generator` has multiplicative order exactly `d`.
    pub fn generator_has_exact_order(&self) -> bool {
        let f = &self.field;
        f.pow(self.generator, self.order) == Elem::ONE
            && prime_factors(self.order)
                .iter()
                .all(|&l| f.pow(self.generator, self.order / l) != Elem::ONE)
    }
}

/// Smallest subgroup of order `d >= min_size` leaving at least `min_cosets` cosets.
pub fn subgroup_with_cosets(field: &Field, min_size: u64, min_cosets: u64) -> Result<SubgroupData> {
    let n = field.order() - 1;
    let min_cosets = min_cosets.max(1);
    let d = smallest_split(n, min_size.max(1), min_cosets).ok_or_else(|| {
        Error::NotFound(format!(
            "GF({}) has no subgroup of size >= {min_size} with >= {min_cosets} cosets",
            field.order()
        ))
    })?;
    SubgroupData::of_order(field, d, min_cosets)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_scan_examples() {
        let f = Field::prime(13).unwrap();
        let s = subgroup_with_cosets(&f, 4, 3).unwrap();
        assert_eq!(s.order(), 4);
        assert_eq!(s.coset_count(), 3);
        assert_eq!(s.coset_reps().len(), 3);
        assert!(matches!(
            subgroup_with_cosets(&f, 5, 3),
            Err(Error::NotFound(_))
        ));
        let trivial = subgroup_with_cosets(&f, 1, 1).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.generator(), Elem::ONE);
    }

    #[test]
    fn elements_and_cosets_are_distinct() {
        for (p, m) in [(13, 1), (2, 4), (3, 3), (61, 1), (2, 8)] {
            let f = Field::new(p, m).unwrap();
            let n = f.order() - 1;
            for d in crate::numtheory::divisors(n) {
                let s = SubgroupData::of_order(&f, d, n / d).unwrap();
                assert!(s.generator_has_exact_order());
                let elems: std::collections::HashSet<_> = s.elements().collect();
                assert_eq!(elems.len() as u64, d);
                assert!(elems.iter().all(|&x| s.contains(x)));
                let reps = s.coset_reps();
                for i in 0..reps.len() {
                    for j in 0..i {
                        let ratio = f.div(reps[i], reps[j]).unwrap();
                        assert!(!s.contains(ratio));
                    }
                }
            }
        }
    }
}
