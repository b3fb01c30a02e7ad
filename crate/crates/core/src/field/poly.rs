//! Dense univariate polynomials over a [`Field`], constant term first.

use super::{Elem, Field};

fn trim(mut a: Vec<Elem>) -> Vec<Elem> {
    while a.last() == Some(&Elem::ZERO) {
        a.pop();
    }
    a
}

pub(crate) fn mul(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Remainder of `a` modulo a monic `m`.
pub(crate) fn rem_monic(f: &Field, a: Vec<Elem>, m: &[Elem]) -> Vec<Elem> {
    let lead_inv = f.inv(*m.last().expect("nonzero divisor")).unwrap();
    rem(f, a, m, lead_inv)
}

fn rem(f: &Field, mut a: Vec<Elem>, m: &[Elem], lead_inv: Elem) -> Vec<Elem> {
    let dm = m.len() - 1;
    a = trim(a);
    while a.len() > dm {
        let shift = a.len() - 1 - dm;
        let c = f.mul(*a.last().unwrap(), lead_inv);
        for (i, &mi) in m.iter().enumerate() {
            a[shift + i] = f.sub(a[shift + i], f.mul(c, mi));
        }
        a = trim(a);
    }
    a
}

fn gcd(f: &Field, a: Vec<Elem>, b: Vec<Elem>) -> Vec<Elem> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let lead_inv = f.inv(*b.last().unwrap()).unwrap();
        let r = rem(f, a, &b, lead_inv);
        a = b;
        b = r;
    }
    a
}

fn pow_mod(f: &Field, base: &[Elem], mut e: u64, m: &[Elem]) -> Vec<Elem> {
    let mut acc = vec![Elem::ONE];
    let mut b = rem_monic(f, base.to_vec(), m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem_monic(f, mul(f, &acc, &b), m);
        }
        b = rem_monic(f, mul(f, &b, &b), m);
        e >>= 1;
    }
    acc
}

/// Ben-Or test: a monic `m` of degree d is irreducible iff
/// gcd(x^(Q^i) - x, m) = 1 for every i <= d/2.
pub(crate) fn is_irreducible(f: &Field, m: &[Elem]) -> bool {
    let d = m.len() - 1;
    if d <= 1 {
        return d == 1;
    }
    if m[0].is_zero() {
        return false;
    }
    let x = vec![Elem::ZERO, Elem::ONE];
    let mut h = x.clone();
    for _ in 0..d / 2 {
        h = pow_mod(f, &h, f.order(), m);
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), Elem::ZERO);
        diff[1] = f.sub(diff[1], Elem::ONE);
        let g = gcd(f, diff, m.to_vec());
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// First monic irreducible of degree `d` over `f`, scanning the lower
/// coefficients in increasing integer encoding.
pub(crate) fn lowest_irreducible(f: &Field, d: u32) -> Vec<Elem> {
    let q = f.order();
    let count = q.pow(d);
    (0..count)
        .map(|enc| {
            let mut coeffs: Vec<Elem> = (0..d).map(|i| Elem(enc / q.pow(i) % q)).collect();
            coeffs.push(Elem::ONE);
            coeffs
        })
        .find(|m| is_irreducible(f, m))
        .expect("irreducible polynomials of every degree exist")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_root(f: &Field, m: &[Elem]) -> bool {
        f.elements().any(|x| {
            let v = m
                .iter()
                .rev()
                .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c));
            v.is_zero()
        })
    }

    #[test]
    fn cubic_irreducible_iff_rootless() {
        let f = Field::prime(5).unwrap();
        for enc in 0..125u64 {
            let m = vec![Elem(enc % 5), Elem(enc / 5 % 5), Elem(enc / 25), Elem::ONE];
            assert_eq!(is_irreducible(&f, &m), !has_root(&f, &m), "{m:?}");
        }
    }

    #[test]
    fn quartic_with_quadratic_factors_is_rejected() {
        let f = Field::prime(2).unwrap();
        // (x^2+x+1)^2 = x^4+x^2+1 has no roots but is reducible
        let m = [1, 0, 1, 0, 1].map(Elem).to_vec();
        assert!(!has_root(&f, &m));
        assert!(!is_irreducible(&f, &m));
        assert!(is_irreducible(&f, &[1, 1, 0, 0, 1].map(Elem)));
    }

    #[test]
    fn lowest_choices() {
        let gf2 = Field::prime(2).unwrap();
        assert_eq!(lowest_irreducible(&gf2, 3), [1, 1, 0, 1].map(Elem).to_vec());
        assert_eq!(
            lowest_irreducible(&gf2, 4),
            [1, 1, 0, 0, 1].map(Elem).to_vec()
        );
        let gf13 = Field::prime(13).unwrap();
        assert_eq!(
            lowest_irreducible(&gf13, 3),
            [2, 0, 0, 1].map(Elem).to_vec()
        );
    }
}
