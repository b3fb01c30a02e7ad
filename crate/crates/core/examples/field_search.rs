// Field searches: a prime q = AB + 1, a power of two with an explicit
// factorization of q - 1, and the fields used by the two constructions.
//
//     cargo run --example field_search

use mrlrc::construct::{
    char2_recipe, find_field_h2, find_field_h3, search_field_char2, search_field_prime,
};

fn main() {
    for (a, b) in [(4, 3), (10, 10), (100, 37), (1000, 1000)] {
        let p = search_field_prime(a, b).unwrap();
        let c = search_field_char2(a, b).unwrap();
        println!(
            "a={a} b={b}: prime q={} (A={}, B={}, ratio {:.3}); power of two q={} (A={}, B={})",
            p.q,
            p.witnesses.0,
            p.witnesses.1,
            p.ratio(a, b),
            c.q,
            c.witnesses.0,
            c.witnesses.1
        );
    }
    let recipe = char2_recipe(2, 3).unwrap();
    println!(
        "strict power-of-two recipe for (2, 3): q={} with A={} B={}",
        recipe.q, recipe.witnesses.0, recipe.witnesses.1
    );

    for (n, r) in [(8, 4), (12, 3), (48, 6), (1000, 10), (100_000, 50)] {
        let h2 = find_field_h2(n, r, false).unwrap();
        let h2c = find_field_h2(n, r, true).unwrap();
        // the cubic extension must stay below 2^40, so base fields stop at 2^13
        let h3 = match find_field_h3(n, r) {
            Ok(f) => format!("base q0={} so q={}", f.q, f.q.pow(3)),
            Err(e) => format!("no base field ({e})"),
        };
        println!("n={n} r={r}: h=2 q={} (char 2: {}), h=3 {h3}", h2.q, h2c.q);
    }
}
