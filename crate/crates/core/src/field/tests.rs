use super::*;
use proptest::prelude::*;

fn panel() -> Vec<Field> {
    vec![
        Field::prime(13).unwrap(),
        Field::new(2, 3).unwrap(),
        Field::new(2, 10).unwrap(),
        Field::new(13, 3).unwrap(),
        Field::new(2, 2).unwrap().cubic_extension().unwrap(),
        Field::new(3, 2).unwrap().cubic_extension().unwrap(),
        Field::new(2, 24).unwrap(),
        Field::prime(1_099_511_627_689).unwrap(),
    ]
}

#[test]
fn construction_examples() {
    let f = Field::prime(13).unwrap();
    assert_eq!(f.order(), 13);
    assert!(f.modulus().is_empty());
    let f8 = Field::new(2, 3).unwrap();
    assert_eq!(f8.order(), 8);
    assert_eq!(f8.modulus(), &[1, 1, 0, 1].map(Elem));
    assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
    assert!(matches!(Field::new(2, 41), Err(Error::Overflow(_))));
    assert!(matches!(Field::new(3, 26), Err(Error::Overflow(_))));
}

#[test]
fn cubic_extensions() {
    let gf13 = Field::prime(13).unwrap();
    let e = gf13.cubic_extension().unwrap();
    assert_eq!(e.order(), 2197);
    assert_eq!(e.modulus(), &[2, 0, 0, 1].map(Elem));
    assert_eq!(e, Field::new(13, 3).unwrap());
    assert_eq!(e.basis(), vec![Elem(1), Elem(13), Elem(169)]);

    let gf2 = Field::prime(2).unwrap();
    assert_eq!(gf2.cubic_extension().unwrap(), Field::new(2, 3).unwrap());

    let gf4 = Field::new(2, 2).unwrap();
    let tower = gf4.cubic_extension().unwrap();
    assert_eq!(tower.order(), 64);
    assert_eq!(tower.tower_base(), Some(&gf4));
    assert_eq!(tower.total_degree(), 6);
    assert_ne!(tower, Field::new(2, 6).unwrap());

    assert!(matches!(
        Field::prime(8209).unwrap().cubic_extension(),
        Err(Error::Overflow(_))
    ));
}

#[test]
fn arithmetic_examples() {
    let f7 = Field::prime(7).unwrap();
    assert_eq!(f7.mul(f7.elem(3), f7.elem(5)), Elem::ONE);
    let f8 = Field::new(2, 3).unwrap();
    // X * X^2 = X^3 = X + 1
    assert_eq!(f8.mul(f8.elem(2), f8.elem(4)), f8.elem(3));
    for f in panel() {
        assert_eq!(f.inv(Elem::ONE), Ok(Elem::ONE));
        assert_eq!(f.inv(Elem::ZERO), Err(Error::DivideByZero));
        assert_eq!(f.div(Elem::ONE, Elem::ZERO), Err(Error::DivideByZero));
    }
}

#[test]
fn primitive_examples() {
    assert_eq!(Field::prime(7).unwrap().primitive_element(), Elem(3));
    assert_eq!(Field::prime(13).unwrap().primitive_element(), Elem(2));
    assert_eq!(Field::prime(2).unwrap().primitive_element(), Elem(1));
}

#[test]
fn lagrange_and_primitive_bijection() {
    for (p, m) in [(2, 1), (3, 1), (2, 6), (5, 3), (7, 4), (4093, 1), (2, 12)] {
        let f = Field::new(p, m).unwrap();
        let n = f.order() - 1;
        for u in f.elements().skip(1) {
            assert_eq!(f.pow(u, n), Elem::ONE);
        }
        let g = f.primitive_element();
        let mut seen = vec![false; f.order() as usize];
        let mut x = Elem::ONE;
        for _ in 0..n {
            assert!(!seen[x.0 as usize]);
            seen[x.0 as usize] = true;
            x = f.mul(x, g);
        }
        assert!(!seen[0]);
    }
}

#[test]
fn tower_lagrange_and_bijection() {
    let tower = Field::new(3, 2).unwrap().cubic_extension().unwrap();
    let g = tower.primitive_element();
    let mut x = Elem::ONE;
    let mut seen = std::collections::HashSet::new();
    for _ in 0..tower.order() - 1 {
        assert!(seen.insert(x));
        assert_eq!(tower.pow(x, tower.order() - 1), Elem::ONE);
        x = tower.mul(x, g);
    }
    assert_eq!(x, Elem::ONE);
}

#[test]
fn table_and_polynomial_paths_agree() {
    let f = Field::new(3, 5).unwrap();
    let gf13_3 = Field::new(13, 3).unwrap();
    for field in [f, gf13_3] {
        for a in field.elements().step_by(7) {
            for b in field.elements().step_by(11) {
                assert_eq!(field.mul(a, b), field.mul_raw(a, b));
            }
        }
    }
}

#[test]
fn text_round_trip() {
    let f = Field::new(13, 3).unwrap();
    let e = f.from_digits(&[3, 0, 1]).unwrap();
    assert_eq!(f.render(e), "3,0,1");
    assert_eq!(f.parse("3,0,1"), Ok(e));
    assert!(f.parse("3,0").is_err());
    assert!(f.parse("13,0,0").is_err());
    let p = Field::prime(7).unwrap();
    assert_eq!(p.render(Elem(5)), "5");
    assert!(p.parse("7").is_err());
    let tower = Field::new(2, 2).unwrap().cubic_extension().unwrap();
    let t = tower.from_coords(&[Elem(1), Elem(2), Elem(3)]);
    assert_eq!(tower.render(t), "1,0,0,1,1,1");
}

fn check_axioms(f: &Field, a: Elem, b: Elem, c: Elem) {
    assert_eq!(f.add(a, b), f.add(b, a));
    assert_eq!(f.mul(a, b), f.mul(b, a));
    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
    assert_eq!(f.sub(f.add(a, b), b), a);
    if !a.is_zero() {
        assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
        assert_eq!(f.div(f.mul(b, a), a), Ok(b));
    }
}

proptest! {
    #![proptest_config(crate::testutil::proptest_config(10_000))]

    #[test]
    fn field_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        thread_local!(static PANEL: Vec<Field> = panel());
        PANEL.with(|fields| {
            for f in fields {
                let q = f.order();
                check_axioms(f, Elem(a % q), Elem(b % q), Elem(c % q));
            }
        });
    }
}
