// Field-size lower bounds for maximally recoverable codes, next to the field
// sizes the constructions achieve.
//
//     cargo run --example lower_bounds

use mrlrc::construct::{find_field_h2, find_field_h3};
use mrlrc::lrc::lower_bound_q;

fn main() {
    for (n, r, a, h) in [
        (100, 10, 1, 3),
        (100, 10, 3, 3),
        (100, 50, 1, 4),
        (48, 4, 1, 2),
        (96, 8, 2, 2),
        (64, 8, 1, 3),
    ] {
        let bound = lower_bound_q(n, r, a, h).unwrap();
        let achieved = match h {
            2 => find_field_h2(n, r, false).map(|f| f.q).ok(),
            3 => find_field_h3(n, r).map(|f| f.q.pow(3)).ok(),
            _ => None,
        };
        let achieved = achieved.map_or("-".to_string(), |q| q.to_string());
        println!("n={n:<4} r={r:<3} a={a} h={h}: {bound:<34} construction q={achieved}");
    }
}
