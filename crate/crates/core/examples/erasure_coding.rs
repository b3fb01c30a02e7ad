// Systematic encoding, erasure decoding, and repair of a single group from its
// own symbols.
//
//     cargo run --example erasure_coding

use mrlrc::construct::build_h2;
use mrlrc::lrc::{decode_erasures, local_repair, ErasurePattern, SystematicEncoder};
use mrlrc::Error;

fn main() {
    let code = build_h2(12, 4, 1, false).unwrap();
    let f = code.field().clone();
    let p = code.params().clone();
    println!(
        "code n={} k={} r={} a={} h={} over {}",
        p.n,
        p.k(),
        p.r,
        p.a,
        p.h,
        f
    );

    let enc = SystematicEncoder::new(&code).unwrap();
    println!("information set {:?}", enc.information_set());
    let message: Vec<_> = (0..p.k() as u64)
        .map(|i| f.elem((5 * i + 2) % f.order()))
        .collect();
    let word = enc.encode(&message).unwrap();
    let show = |w: &[mrlrc::Elem]| w.iter().map(|&e| f.render(e)).collect::<Vec<_>>().join(" ");
    println!("codeword  {}", show(&word));

    // one erasure per group plus two anywhere
    let pattern = ErasurePattern::parse("0,1,5,9,10", p.n).unwrap();
    let mut received = word.clone();
    for &i in pattern.indices() {
        received[i] = f.zero();
    }
    let decoded = decode_erasures(&code, &received, &pattern).unwrap();
    println!("erased {pattern} -> {}", show(&decoded));
    assert_eq!(decoded, word);

    // a single loss is repaired from the three other symbols of its group
    let group = p.group_of(6);
    let repaired = local_repair(&code, group, &[6], &word[..]).unwrap();
    println!("group {group} repaired locally: {}", show(&repaired));

    let too_many = ErasurePattern::parse("0,1,2,3", p.n).unwrap();
    match decode_erasures(&code, &received, &too_many) {
        Err(Error::Uncorrectable(pat)) => println!("pattern {pat} is beyond the code, as expected"),
        other => panic!("unexpected {other:?}"),
    }
}
