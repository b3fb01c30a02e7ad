// Linear algebra over finite fields: elimination, null spaces, Vandermonde and
// Cauchy matrices, and the block determinant expansion.
//
//     cargo run --example structured_matrices

use mrlrc::field::Field;
use mrlrc::matrix::{
    block_det_lhs, block_det_rhs, cauchy, cauchy_det_closed_form, vandermonde, Matrix,
};

fn show(m: &Matrix) {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|&e| m.field().render(e)).collect();
        println!("  [{}]", row.join(" "));
    }
}

fn main() {
    let f = Field::prime(7).unwrap();
    let v = vandermonde(&f, &[f.elem(2), f.elem(3)], 2, 1).unwrap();
    println!("Vandermonde over GF(7), nodes 2, 3, powers 1..2:");
    show(&v);

    let alphas = [f.elem(1), f.elem(2)];
    let betas = [f.elem(3), f.elem(4)];
    let c = cauchy(&f, &alphas, &betas).unwrap();
    println!("Cauchy over GF(7):");
    show(&c);
    println!(
        "det = {}, product formula = {}",
        f.render(c.det().unwrap()),
        f.render(cauchy_det_closed_form(&f, &alphas, &betas).unwrap())
    );

    let m = Matrix::from_u64(&f, &[&[1, 1, 0], &[0, 1, 1]]).unwrap();
    let ns = m.null_space();
    println!(
        "null space of [[1 1 0] [0 1 1]] has {} column(s):",
        ns.cols()
    );
    show(&ns);
    println!("rank = {}, rref pivots = {:?}", m.rank(), m.rref().pivots);

    // two diagonal blocks C_i over a strip of D_i
    let g = Field::prime(13).unwrap();
    let c1 = Matrix::from_u64(&g, &[&[1, 2]]).unwrap();
    let c2 = Matrix::from_u64(&g, &[&[3, 5, 7]]).unwrap();
    let d1 = Matrix::from_u64(&g, &[&[4, 1], &[2, 9], &[6, 6]]).unwrap();
    let d2 = Matrix::from_u64(&g, &[&[1, 0, 3], &[8, 2, 2], &[5, 11, 4]]).unwrap();
    let lhs = block_det_lhs(&[c1.clone(), c2.clone()], &[d1.clone(), d2.clone()]).unwrap();
    let rhs = block_det_rhs(&[c1, c2], &[d1, d2]).unwrap();
    println!(
        "block determinant: direct {} vs partition expansion {}",
        g.render(lhs),
        g.render(rhs)
    );
}
