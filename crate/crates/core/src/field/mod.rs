//! Exact arithmetic in GF(p), GF(p^m) and cubic towers GF(q0^3).
//!
//! A [`Field`] is a cheap-to-clone handle; elements are [`Elem`] values that only
//! make sense together with the field that produced them. Every element has a
//! canonical integer encoding: the base-p evaluation of its coefficient digits,
//! least significant first. For a tower GF(q0^3) over GF(q0) the encoding is
//! `c0 + c1*q0 + c2*q0^2` with `ci` the encodings of the base coordinates, which is
//! again a base-p digit string, so the encoding is uniform across all fields.
//!
//! Non-prime fields up to [`TABLE_LIMIT`] elements multiply through exp/log
//! tables built at construction; larger ones fall back to polynomial arithmetic.

mod dlog;
mod poly;
mod subgroup;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, mul_mod, prime_factors};

pub use dlog::{discrete_log, DiscreteLog};
pub use subgroup::{subgroup_with_cosets, SubgroupData};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 40;
/// Largest order for which exp/log tables are built.
pub const TABLE_LIMIT: u64 = 1 << 21;

/// A field element as its canonical integer encoding.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub(crate) u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone)]
pub struct Field(Arc<Inner>);

struct Inner {
    p: u64,
    order: u64,
    /// Degree over the prime subfield.
    total_degree: u32,
    /// Degree over `base` (1 for prime fields).
    degree: u32,
    base: Option<Field>,
    /// Monic modulus over `base`, constant term first; empty for prime fields.
    modulus: Vec<Elem>,
    repr: Repr,
    primitive: OnceLock<Elem>,
    tables: Option<LogTables>,
}

enum Repr {
    Prime,
    /// GF(2^m) directly over GF(2); `modulus` carries all m+1 bits.
    Binary {
        modulus: u64,
    },
    /// Polynomials over an arbitrary base field.
    Poly,
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Field {
    /// GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_ORDER {
            return Err(Error::Overflow(format!("p = {p} exceeds 2^40")));
        }
        Ok(Field(Arc::new(Inner {
            p,
            order: p,
            total_degree: 1,
            degree: 1,
            base: None,
            modulus: Vec::new(),
            repr: Repr::Prime,
            primitive: OnceLock::new(),
            tables: None,
        })))
    }

    /// GF(p^m) with the lowest irreducible monic modulus in increasing encoding order.
    pub fn new(p: u64, m: u32) -> Result<Field> {
        if m == 0 {
            return Err(Error::Overflow("degree must be positive".into()));
        }
        let prime = Field::prime(p)?;
        if m == 1 {
            return Ok(prime);
        }
        checked_order(p, m)?;
        let modulus = poly::lowest_irreducible(&prime, m);
        Field::extension(&prime, modulus)
    }

    /// Extension of `base` by an explicit monic modulus (constant term first).
    pub fn extension(base: &Field, modulus: Vec<Elem>) -> Result<Field> {
        if modulus.len() < 2 {
            return Err(Error::ShapeMismatch("modulus needs degree >= 1".into()));
        }
        let degree = (modulus.len() - 1) as u32;
        if *modulus.last().unwrap() != Elem::ONE {
            return Err(Error::ShapeMismatch("modulus must be monic".into()));
        }
        for &c in &modulus {
            base.check(c)?;
        }
        if degree == 1 {
            return Ok(base.clone());
        }
        let order = checked_order(base.order(), degree)?;
        if !poly::is_irreducible(base, &modulus) {
            return Err(Error::Reducible);
        }
        let repr = if base.is_prime_field() && base.characteristic() == 2 {
            let bits = modulus
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, c)| acc | (c.0 << i));
            Repr::Binary { modulus: bits }
        } else {
            Repr::Poly
        };
        let mut field = Field(Arc::new(Inner {
            p: base.characteristic(),
            order,
            total_degree: base.total_degree() * degree,
            degree,
            base: Some(base.clone()),
            modulus,
            repr,
            primitive: OnceLock::new(),
            tables: None,
        }));
        if order <= TABLE_LIMIT {
            let tables = field.build_tables();
            Arc::get_mut(&mut field.0)
                .expect("freshly built field is not shared")
                .tables = Some(tables);
        }
        Ok(field)
    }

    /// Degree-3 extension of `self`. Over a prime base this is exactly `Field::new(p, 3)`;
    /// over a non-prime base it is a tower whose coordinates live in `self`.
    pub fn cubic_extension(&self) -> Result<Field> {
        if self.order() > 1 << 13 {
            return Err(Error::Overflow(format!(
                "cubic extension of a field of order {} exceeds 2^40",
                self.order()
            )));
        }
        if self.is_prime_field() {
            return Field::new(self.characteristic(), 3);
        }
        let modulus = poly::lowest_irreducible(self, 3);
        Field::extension(self, modulus)
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    #[inline]
    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Degree over the immediate base field.
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    /// Degree over the prime subfield.
    pub fn total_degree(&self) -> u32 {
        self.0.total_degree
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self.0.repr, Repr::Prime)
    }

    /// Immediate base field, `None` for prime fields.
    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    /// The base field when this field was built as an extension of a non-prime field.
    pub fn tower_base(&self) -> Option<&Field> {
        self.base().filter(|b| !b.is_prime_field())
    }

    /// Monic modulus over [`Field::base`], constant term first.
    pub fn modulus(&self) -> &[Elem] {
        &self.0.modulus
    }

    /// Power basis `1, X, ..., X^(d-1)` over the immediate base.
    pub fn basis(&self) -> Vec<Elem> {
        let qb = self.base().map_or(self.order(), Field::order);
        (0..self.degree()).map(|i| Elem(qb.pow(i))).collect()
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    #[inline]
    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Element with encoding `value`; panics when out of range.
    pub fn elem(&self, value: u64) -> Elem {
        assert!(
            value < self.order(),
            "encoding {value} out of range for GF({})",
            self.order()
        );
        Elem(value)
    }

    pub fn try_elem(&self, value: u64) -> Result<Elem> {
        let e = Elem(value);
        self.check(e)?;
        Ok(e)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.0.p as i64) as u64)
    }

    pub fn check(&self, e: Elem) -> Result<()> {
        if e.0 < self.order() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                value: e.0,
                order: self.order(),
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order()).map(Elem)
    }

    /// Base-p digits of `e`, least significant first, `total_degree` of them.
    pub fn digits(&self, e: Elem) -> Vec<u64> {
        let p = self.0.p;
        let mut v = e.0;
        (0..self.total_degree())
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u64]) -> Result<Elem> {
        if digits.len() != self.total_degree() as usize {
            return Err(Error::LengthMismatch {
                expected: self.total_degree() as usize,
                got: digits.len(),
            });
        }
        let p = self.0.p;
        let mut acc = 0u64;
        for &d in digits.iter().rev() {
            if d >= p {
                return Err(Error::ElementOutOfRange { value: d, order: p });
            }
            acc = acc * p + d;
        }
        Ok(Elem(acc))
    }

    /// Coordinates over the immediate base field.
    pub fn coords(&self, e: Elem) -> Vec<Elem> {
        let qb = self.base().map_or(self.order(), Field::order);
        let mut v = e.0;
        (0..self.degree())
            .map(|_| {
                let c = v % qb;
                v /= qb;
                Elem(c)
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[Elem]) -> Elem {
        let qb = self.base().map_or(self.order(), Field::order);
        debug_assert_eq!(coords.len(), self.degree() as usize);
        Elem(coords.iter().rev().fold(0u64, |acc, c| acc * qb + c.0))
    }

    /// Embeds an element of the immediate base field.
    #[inline]
    pub fn embed(&self, base_elem: Elem) -> Elem {
        base_elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.0.total_degree == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= p { s - p } else { s });
        }
        self.digitwise(a.0, b.0, |x, y| {
            let s = x + y;
            if s >= p {
                s - p
            } else {
                s
            }
        })
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.0.total_degree == 1 {
            return Elem(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + p - b.0 });
        }
        self.digitwise(a.0, b.0, |x, y| if x >= y { x - y } else { x + p - y })
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.sub(Elem::ZERO, a)
    }

    fn digitwise(&self, mut a: u64, mut b: u64, f: impl Fn(u64, u64) -> u64) -> Elem {
        let p = self.0.p;
        let mut out = 0u64;
        let mut place = 1u64;
        while a > 0 || b > 0 {
            out += f(a % p, b % p) * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if let Repr::Prime = self.0.repr {
            let p = self.0.p;
            return Elem(if p < 1 << 32 {
                a.0 * b.0 % p
            } else {
                mul_mod(a.0, b.0, p)
            });
        }
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        match self.tables() {
            Some(t) => {
                let s = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                Elem(t.exp[s] as u64)
            }
            None => self.mul_raw(a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivideByZero);
        }
        if let Repr::Prime = self.0.repr {
            return Ok(Elem(inv_mod_prime(a.0, self.0.p)));
        }
        match self.tables() {
            Some(t) => {
                let n = self.order() as usize - 1;
                let l = t.log[a.0 as usize] as usize;
                Ok(Elem(t.exp[(n - l) % n] as u64))
            }
            None => Ok(self.pow_raw(a, self.order() - 2)),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let k = k % (self.order() - 1);
        let mut acc = Elem::ONE;
        let mut base = a;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Sum of a sequence of elements.
    pub fn sum(&self, it: impl IntoIterator<Item = Elem>) -> Elem {
        it.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }

    /// Product of a sequence of elements.
    pub fn product(&self, it: impl IntoIterator<Item = Elem>) -> Elem {
        it.into_iter().fold(Elem::ONE, |acc, x| self.mul(acc, x))
    }

    /// Generator of the multiplicative group: the first element, in increasing
    /// encoding order, whose order is exactly q-1.
    pub fn primitive_element(&self) -> Elem {
        *self.0.primitive.get_or_init(|| self.find_primitive())
    }

    fn find_primitive(&self) -> Elem {
        let n = self.order() - 1;
        if n == 1 {
            return Elem::ONE;
        }
        let factors = prime_factors(n);
        (1..self.order())
            .map(Elem)
            .find(|&c| factors.iter().all(|&l| self.pow_raw(c, n / l) != Elem::ONE))
            .expect("multiplicative group of a finite field is cyclic")
    }

    #[inline]
    fn tables(&self) -> Option<&LogTables> {
        self.0.tables.as_ref()
    }

    fn build_tables(&self) -> LogTables {
        let q = self.order() as usize;
        let g = self.primitive_element();
        let mut exp = vec![0u32; 2 * (q - 1)];
        let mut log = vec![0u32; q];
        let mut x = Elem::ONE;
        for i in 0..q - 1 {
            exp[i] = x.0 as u32;
            exp[i + q - 1] = x.0 as u32;
            log[x.0 as usize] = i as u32;
            x = self.mul_raw(x, g);
        }
        LogTables { exp, log }
    }

    /// Multiplication without tables.
    fn mul_raw(&self, a: Elem, b: Elem) -> Elem {
        match self.0.repr {
            Repr::Prime => Elem(mul_mod(a.0, b.0, self.0.p)),
            Repr::Binary { modulus } => Elem(clmul_reduce(a.0, b.0, modulus, self.0.degree)),
            Repr::Poly => {
                let base = self.base().expect("extension has a base");
                let x = self.coords(a);
                let y = self.coords(b);
                let prod = poly::mul(base, &x, &y);
                let r = poly::rem_monic(base, prod, &self.0.modulus);
                let mut coords = vec![Elem::ZERO; self.degree() as usize];
                coords[..r.len()].copy_from_slice(&r);
                self.from_coords(&coords)
            }
        }
    }

    fn pow_raw(&self, a: Elem, mut k: u64) -> Elem {
        let mut acc = Elem::ONE;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            k >>= 1;
        }
        acc
    }

    /// Canonical text: a bare integer for prime fields, otherwise comma-separated
    /// base-p digits, least significant first.
    pub fn render(&self, e: Elem) -> String {
        if self.total_degree() == 1 {
            return e.0.to_string();
        }
        self.digits(e)
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(&self, s: &str) -> Result<Elem> {
        let bad = || Error::parse(0, format!("invalid element `{s}`"));
        if self.total_degree() == 1 {
            let v: u64 = s.trim().parse().map_err(|_| bad())?;
            return self.try_elem(v).map_err(|_| bad());
        }
        let digits = s
            .split(',')
            .map(|d| d.trim().parse::<u64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        self.from_digits(&digits).map_err(|_| bad())
    }

    fn same_field(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.degree == other.0.degree
                && self.0.modulus == other.0.modulus
                && self.0.base == other.0.base)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tower_base() {
            Some(b) => write!(f, "GF({}^{}) over {:?}", b.order(), self.degree(), b),
            None => write!(f, "GF({}^{})", self.0.p, self.0.degree),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}

fn checked_order(q: u64, m: u32) -> Result<u64> {
    match q.checked_pow(m) {
        Some(v) if v <= MAX_ORDER => Ok(v),
        _ => Err(Error::Overflow(format!("{q}^{m} exceeds 2^40"))),
    }
}

fn inv_mod_prime(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i128) as u64
}

/// Carry-less product of two degree < m polynomials over GF(2), reduced by `modulus`.
fn clmul_reduce(a: u64, b: u64, modulus: u64, m: u32) -> u64 {
    let mut prod: u128 = 0;
    let mut x = a as u128;
    let mut y = b;
    while y != 0 {
        if y & 1 == 1 {
            prod ^= x;
        }
        x <<= 1;
        y >>= 1;
    }
    let m = m as i32;
    let mut top = 127 - prod.leading_zeros() as i32;
    while prod != 0 && top >= m {
        prod ^= (modulus as u128) << (top - m);
        top = 127 - prod.leading_zeros() as i32;
    }
    prod as u64
}

#[cfg(test)]
mod tests;
