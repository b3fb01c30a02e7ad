// The two-heavy-parity construction: search for a field, build the code,
// check maximal recoverability exhaustively, and compare with the lower bound.
//
//     cargo run --example h2_construction -- 24 6 2

use mrlrc::construct::{construct_h2, find_field_h2, H2Parameters};
use mrlrc::lrc::{lower_bound_q, verify_mr};
use mrlrc::text::write_code;

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (n, r, a) = match args[..] {
        [n, r, a] => (n, r, a),
        _ => (12, 4, 1),
    };
    let found = find_field_h2(n, r, false).unwrap();
    println!(
        "n={n} r={r} a={a}: GF({}) with a subgroup of order {} and {} cosets",
        found.q,
        found.subgroup.order(),
        found.subgroup.coset_count()
    );
    let choice = H2Parameters::choose(n, r, a, &found).unwrap();
    let f = &found.field;
    println!(
        "  nodes   {:?}",
        choice
            .alphas
            .iter()
            .map(|&x| f.render(x))
            .collect::<Vec<_>>()
    );
    println!(
        "  lambdas {:?}",
        choice
            .lambdas
            .iter()
            .map(|&x| f.render(x))
            .collect::<Vec<_>>()
    );

    let code = construct_h2(n, r, a, &found).unwrap();
    let report = verify_mr(&code).unwrap();
    println!(
        "  {} maximal patterns ({} reduced checks): {}",
        report.patterns,
        report.checks,
        if report.is_mr() {
            "maximally recoverable"
        } else {
            "NOT maximally recoverable"
        }
    );
    println!("  lower bound: {}", lower_bound_q(n, r, a, 2).unwrap());
    if n <= 12 {
        print!("{}", write_code(&code));
    }
}
