//! Finding fields whose multiplicative group has a subgroup of a given size
//! with enough cosets.

use crate::error::{Error, Result};
use crate::field::{Field, SubgroupData};
use crate::numtheory::{is_prime, prime_power, smallest_split};

/// A field together with a subgroup G of its multiplicative group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSearchResult {
    pub q: u64,
    pub field: Field,
    pub subgroup: SubgroupData,
    /// `(A, B)` with `A = |G|` and `A * B = q - 1`.
    pub witnesses: (u64, u64),
}

impl FieldSearchResult {
    fn new(field: Field, a_order: u64, reps: u64) -> Result<FieldSearchResult> {
        let q = field.order();
        let subgroup = SubgroupData::of_order(&field, a_order, reps)?;
        Ok(FieldSearchResult {
            q,
            field,
            subgroup,
            witnesses: (a_order, (q - 1) / a_order),
        })
    }

    /// The smallest subgroup of `field` with at least `min_size` elements and
    /// `min_cosets` cosets.
    pub fn for_field(field: &Field, min_size: u64, min_cosets: u64) -> Result<FieldSearchResult> {
        let q = field.order();
        let d = smallest_split(q - 1, min_size.max(1), min_cosets.max(1)).ok_or_else(|| {
            Error::NotFound(format!(
                "GF({q}) has no subgroup of size >= {min_size} with >= {min_cosets} cosets"
            ))
        })?;
        FieldSearchResult::new(field.clone(), d, min_cosets.max(1))
    }

    /// Achieved `AB / (a*b)`.
    pub fn ratio(&self, a: u64, b: u64) -> f64 {
        (self.q - 1) as f64 / (a as f64 * b as f64)
    }
}

const SWEEP_FACTOR: u64 = 64;

fn check_ab(a: u64, b: u64) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParams("a and b must be positive".into()));
    }
    if a.checked_mul(b).is_none_or(|n| n > 1 << 30) {
        return Err(Error::PreconditionViolated(format!(
            "a * b = {a} * {b} exceeds 2^30"
        )));
    }
    Ok(())
}

/// Prime `q = AB + 1` with `A >= a`, `B >= b`, scanning `AB` upward from `ab`
/// (capped at `64ab`). Among splits of the first qualifying `AB` the smallest `A` wins.
pub fn search_field_prime(a: u64, b: u64) -> Result<FieldSearchResult> {
    check_ab(a, b)?;
    let n = a * b;
    let (m, big_a) = (n..=SWEEP_FACTOR * n)
        .filter(|&m| is_prime(m + 1))
        .find_map(|m| smallest_split(m, a, b).map(|d| (m, d)))
        .ok_or(Error::SweepExhausted)?;
    FieldSearchResult::new(Field::prime(m + 1)?, big_a, b)
}

/// `exp` of the sum of `2^(-2^j)` over `j >= 0`.
fn recipe_constant() -> f64 {
    (0..8).map(|j| 2f64.powi(-(1 << j))).sum::<f64>().exp()
}

/// Power-of-two field from the explicit factorization
/// `2^(l*2^m) - 1 = (x - 1) * prod_{i<m} (1 + x^(2^i))`, `x = 2^l`.
///
/// `m` is the smallest value with `(2^m - 1)^2 >= log2(ab)`, `l` the smallest
/// with `2^(l*(2^m - 1)) >= C*ab + 1`. The subgroup order is
/// `A = prod_{i in bits(alpha)} (1 + x^(2^i))` for the least `alpha` with `x^alpha >= a`.
pub fn char2_recipe(a: u64, b: u64) -> Result<FieldSearchResult> {
    check_ab(a, b)?;
    let n = (a * b) as f64;
    let log_n = n.log2();
    let m = (1u32..)
        .find(|&m| ((1u64 << m) - 1).pow(2) as f64 >= log_n)
        .expect("unbounded search");
    let span = (1u64 << m) - 1;
    let target = recipe_constant() * n + 1.0;
    let l = (1u64..)
        .find(|&l| (l * span) as f64 >= target.log2())
        .expect("unbounded search");
    let exp = l * (1 << m);
    if exp > 40 {
        return Err(Error::Overflow(format!("recipe needs q = 2^{exp}")));
    }
    let q = 1u64 << exp;
    let x = 1u64 << l;
    let mut alpha = 0u64;
    let mut power = 1u64;
    while power < a {
        alpha += 1;
        power = power.saturating_mul(x);
    }
    if alpha >= 1 << m {
        return Err(Error::SweepExhausted);
    }
    let big_a: u64 = (0..m)
        .filter(|i| alpha >> i & 1 == 1)
        .map(|i| 1 + x.pow(1 << i))
        .product();
    let big_b = (q - 1) / big_a;
    debug_assert_eq!(big_a * big_b, q - 1);
    if big_a < a || big_b < b {
        return Err(Error::SweepExhausted);
    }
    FieldSearchResult::new(Field::new(2, exp as u32)?, big_a, b)
}

/// Smallest power of two `q <= 2^40` such that `q - 1` splits as `A * B` with
/// `A >= a`, `B >= b`.
fn char2_sweep(a: u64, b: u64) -> Option<(u32, u64)> {
    (1u32..=40).find_map(|e| smallest_split((1u64 << e) - 1, a, b).map(|d| (e, d)))
}

/// Power-of-two field with a subgroup of size at least `a` and at least `b` cosets:
/// the smaller of [`char2_recipe`] and a direct sweep over powers of two.
pub fn search_field_char2(a: u64, b: u64) -> Result<FieldSearchResult> {
    check_ab(a, b)?;
    let recipe = char2_recipe(a, b);
    match (char2_sweep(a, b), recipe) {
        (Some((e, d)), Ok(r)) if (1u64 << e) < r.q => {
            FieldSearchResult::new(Field::new(2, e)?, d, b)
        }
        (_, Ok(r)) => Ok(r),
        (Some((e, d)), Err(_)) => FieldSearchResult::new(Field::new(2, e)?, d, b),
        (None, Err(e)) => Err(e),
    }
}

pub fn field_of_order(q: u64) -> Result<Field> {
    let (p, m) =
        prime_power(q).ok_or_else(|| Error::InvalidParams(format!("{q} is not a prime power")))?;
    Field::new(p, m)
}

/// Smallest prime power `q` in `[lo, hi]` (powers of two only when `char2`) with a
/// subgroup of order `>= min_size` leaving `>= min_cosets` cosets.
fn sweep_prime_powers(
    lo: u64,
    hi: u64,
    char2: bool,
    min_size: u64,
    min_cosets: u64,
) -> Option<(u64, u64)> {
    let candidates: Box<dyn Iterator<Item = u64>> = if char2 {
        Box::new(
            (1..=40)
                .map(|e| 1u64 << e)
                .filter(move |&q| q >= lo && q <= hi),
        )
    } else {
        Box::new((lo.max(2)..=hi).filter(|&q| prime_power(q).is_some()))
    };
    candidates
        .into_iter()
        .find_map(|q| smallest_split(q - 1, min_size, min_cosets).map(|d| (q, d)))
}

fn check_divides(n: usize, r: usize) -> Result<(u64, u64)> {
    if r == 0 || !n.is_multiple_of(r) {
        return Err(Error::InvalidParams(format!("r = {r} must divide n = {n}")));
    }
    Ok((r as u64, (n / r) as u64))
}

/// Field for the two-heavy-parity construction: a subgroup with at least `r`
/// elements and at least `n / r` cosets. Returns the smaller of the constructive
/// search and a direct sweep over prime powers in `(n, 8n]`.
pub fn find_field_h2(n: usize, r: usize, char2: bool) -> Result<FieldSearchResult> {
    let (r, g) = check_divides(n, r)?;
    let constructive = if char2 {
        search_field_char2(r, g)
    } else {
        search_field_prime(r, g)
    };
    let n = n as u64;
    let swept = sweep_prime_powers(n + 1, 8 * n, char2, r, g);
    match (swept, constructive) {
        (Some((q, d)), Ok(c)) if q < c.q => FieldSearchResult::new(field_of_order(q)?, d, g),
        (_, Ok(c)) => Ok(c),
        (Some((q, d)), Err(_)) => FieldSearchResult::new(field_of_order(q)?, d, g),
        (None, Err(e)) => Err(e),
    }
}

/// Base field for the three-heavy-parity construction: the smallest prime power
/// `q0 >= 2r + 3` with a subgroup of at least `r + 2` elements and at least
/// `n / r` cosets.
pub fn find_field_h3(n: usize, r: usize) -> Result<FieldSearchResult> {
    let (r, g) = check_divides(n, r)?;
    let (q0, d) =
        sweep_prime_powers(2 * r + 3, 1 << 13, false, r + 2, g).ok_or(Error::SweepExhausted)?;
    FieldSearchResult::new(field_of_order(q0)?, d, g)
}
