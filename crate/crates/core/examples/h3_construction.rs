// The three-heavy-parity construction over a cubic extension of a small base
// field, with a look at the chosen parameters.
//
//     cargo run --example h3_construction

use mrlrc::construct::{construct_h3, find_field_h3, omega_set, H3Parameters};
use mrlrc::lrc::{lower_bound_q, verify_mr};

fn main() {
    let (n, r, a) = (12, 4, 1);
    let found = find_field_h3(n, r).unwrap();
    let f0 = &found.field;
    println!(
        "base field GF({}) with a subgroup of order {} ({} cosets); code over GF({})",
        found.q,
        found.subgroup.order(),
        found.subgroup.coset_count(),
        found.q.pow(3)
    );
    let p = H3Parameters::choose(n, r, a, &found).unwrap();
    let render = |v: &[mrlrc::Elem]| v.iter().map(|&x| f0.render(x)).collect::<Vec<_>>();
    let [b1, b2, b3] = p.heavy_betas;
    let omega = omega_set(&found.subgroup, b2, b3);
    println!("  heavy poles {:?}", render(&[b1, b2, b3]));
    println!(
        "  omega       {:?} ({} elements)",
        render(&omega),
        omega.len()
    );
    println!("  nodes       {:?}", render(&p.alphas));
    println!("  local poles {:?}", render(&p.betas));
    println!("  mus         {:?}", render(&p.mus));
    for (gamma, lambda) in p.gammas.iter().zip(&p.lambdas) {
        println!(
            "  gamma {} -> lambda {}",
            f0.render(*gamma),
            p.extension.render(*lambda)
        );
    }

    let code = construct_h3(n, r, a, &found).unwrap();
    let report = verify_mr(&code).unwrap();
    println!(
        "  {} maximal patterns: {}",
        report.patterns,
        if report.is_mr() {
            "maximally recoverable"
        } else {
            "NOT maximally recoverable"
        }
    );
    println!("  lower bound: {}", lower_bound_q(n, r, a, 3).unwrap());
}
