// Matching collinear triples on a nodal cubic, and the code they define.
//
//     cargo run --example elliptic_family -- 241

use mrlrc::construct::field_of_order;
use mrlrc::elliptic::{
    behrend_set, code_to_triples, matching_collinear_family, matching_trisum_set, triples_to_code,
    SingularCurve,
};
use mrlrc::lrc::verify_mr;

fn main() {
    let q: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(61);
    let f = field_of_order(q).unwrap();
    let n = q - 1;
    println!(
        "progression-free set in 1..={}: {:?}",
        n / 20,
        behrend_set(n / 20)
    );
    let sums = matching_trisum_set(n).unwrap();
    println!("zero-sum triples mod {n}: {:?}", sums.triples);

    let curve = SingularCurve::standard(&f);
    let g = f.primitive_element();
    println!(
        "curve Y(Y - X)Z = X^3 over GF({q}), primitive element {}",
        f.render(g)
    );
    let family = matching_collinear_family(&f).unwrap();
    for (t, k) in family.triples().zip(&sums.triples) {
        let pts: Vec<String> = t.iter().map(|p| p.to_string()).collect();
        let phis: Vec<String> = t.iter().map(|p| f.render(curve.phi(p).unwrap())).collect();
        println!(
            "  exponents {k:?}: points {} (phi = {})",
            pts.join(" "),
            phis.join(", ")
        );
    }
    family.check().unwrap();
    println!(
        "{} points, no collinear triples besides the listed ones",
        family.points().len()
    );

    let code = triples_to_code(&family.truncate(6)).unwrap();
    let report = verify_mr(&code).unwrap();
    println!(
        "code n={} r=3 a=1 h=3 over GF({q}): {} patterns, maximally recoverable: {}",
        code.params().n,
        report.patterns,
        report.is_mr()
    );
    let back = code_to_triples(&code).unwrap();
    assert_eq!(back.triple_sets(), family.truncate(6).triple_sets());
    println!("reading the triples back from the code gives the same family");
}
