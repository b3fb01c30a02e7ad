// Exhaustive maximal recoverability check, and what happens when a single
// heavy-parity entry is damaged.
//
//     cargo run --example mr_verification

use mrlrc::construct::build_h2;
use mrlrc::lrc::{
    is_correctable, pattern_count, reduced_check_count, verify_mr_with, VerifyOptions,
};

fn main() {
    let code = build_h2(16, 4, 2, false).unwrap();
    let p = code.params();
    println!(
        "n={} r={} a={} h={} over {}: {} maximal patterns, {} reduced checks",
        p.n,
        p.r,
        p.a,
        p.h,
        code.field(),
        pattern_count(p),
        reduced_check_count(p)
    );
    let opts = VerifyOptions {
        budget: 10_000_000,
        threads: Some(1),
    };
    let report = verify_mr_with(&code, &opts).unwrap();
    println!("verdict: {:?}", report.verdict);

    let mut block = code.b_blocks()[2].clone();
    block[(1, 0)] = code.field().zero();
    let damaged = code.with_b_block(2, block).unwrap();
    let report = verify_mr_with(&damaged, &opts).unwrap();
    let pattern = report.counterexample().expect("damaged code fails");
    println!("after zeroing one entry: counterexample {pattern}");
    println!(
        "  correctable by the original code: {}",
        is_correctable(&code, pattern)
    );
    println!(
        "  correctable by the damaged code:  {}",
        is_correctable(&damaged, pattern)
    );

    let tight = VerifyOptions {
        budget: 50,
        threads: None,
    };
    println!(
        "with a budget of 50 checks: {}",
        verify_mr_with(&code, &tight).unwrap_err()
    );
}
