//! Smith normal form of an integer matrix: the diagonal of invariant
//! factors, the unimodular transforms, and what that buys you — kernels,
//! integral solvability, and the classification of f.g. abelian groups.

use knotalg::exact_linalg::{smith_normal_form, AbelianGroup, IntMatrix};

fn main() {
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
    println!("M =\n{}\n", m);

    let s = smith_normal_form(&m);
    println!("D = U M V =\n{}\n", s.d);
    println!("U =\n{}\n", s.u);
    println!("V =\n{}\n", s.v);
    println!("invariant factors: {:?}", s.diagonal());
    println!("rank over Q: {}", s.rank());

    // the cokernel Z^3 / im(M) read off the invariant factors
    let group = AbelianGroup::from_presentation(3, &m);
    println!("Z^3 / M Z^3 = {}", group);

    // integral linear solving through the decomposition
    let rhs = IntMatrix::from_rows(&[vec![2], vec![6], vec![14]]);
    match s.solve(&rhs) {
        Some(x) => println!("a solution of M x = {:?}: x = {:?}", rhs, x),
        None => println!("M x = {:?} has no integral solution", rhs),
    }
}
