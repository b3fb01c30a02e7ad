// Finite field arithmetic: prime fields, GF(2^m), general extensions, and
// towers built as cubic extensions of a smaller field.
//
//     cargo run --example field_arithmetic

use mrlrc::field::{discrete_log, Field};

fn main() {
    let gf13 = Field::prime(13).unwrap();
    let (a, b) = (gf13.elem(7), gf13.elem(9));
    println!("GF(13): 7 + 9 = {}", gf13.render(gf13.add(a, b)));
    println!("GF(13): 7 * 9 = {}", gf13.render(gf13.mul(a, b)));
    println!("GF(13): 1 / 7 = {}", gf13.render(gf13.inv(a).unwrap()));

    let gf8 = Field::new(2, 3).unwrap();
    let x = gf8.elem(0b010);
    println!(
        "GF(8) modulus (constant first): {:?}",
        gf8.modulus().iter().map(|c| c.value()).collect::<Vec<_>>()
    );
    println!("GF(8): x^3 = {}", gf8.render(gf8.pow(x, 3)));

    let gf2197 = Field::new(13, 3).unwrap();
    let g = gf2197.primitive_element();
    let u = gf2197.elem(1234);
    let k = discrete_log(&gf2197, g, u).unwrap();
    println!(
        "GF(13^3): primitive element {}, log of {} is {k}",
        gf2197.render(g),
        gf2197.render(u)
    );
    assert_eq!(gf2197.pow(g, k), u);

    // a tower: GF(4) extended by an irreducible cubic
    let gf4 = Field::new(2, 2).unwrap();
    let tower = gf4.cubic_extension().unwrap();
    let y = tower.elem(37);
    println!(
        "{:?}: {} has coordinates {:?} over GF(4)",
        tower,
        tower.render(y),
        tower
            .coords(y)
            .iter()
            .map(|c| c.value())
            .collect::<Vec<_>>()
    );
    println!(
        "inverse of {} is {}",
        tower.render(y),
        tower.render(tower.inv(y).unwrap())
    );
}
