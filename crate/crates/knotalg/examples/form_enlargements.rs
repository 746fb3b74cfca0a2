//! ε-symmetric forms and their enlargements: exact inertia, the rank-1
//! equality |Δσ| + |Δn| = 1, the annihilator that accounts for the
//! signature jump, and sublagrangian quotients.

use knotalg::exact_linalg::IntMatrix;
use knotalg::forms::{
    enlarge, inertia, is_h_enlargement, perp_of_base, signature, sublagrangian_quotient,
    verify_inv1, EnlargementSpec, Eps, EpsSymmetricForm, Subform,
};

fn main() {
    let base = EpsSymmetricForm::new(
        Eps::Plus,
        IntMatrix::from_rows(&[vec![2, 1], vec![1, -1]]),
    )
    .unwrap();
    let p = inertia(&base);
    println!(
        "base inertia: (r+, r-, n) = ({}, {}, {}), signature {}",
        p.r_plus,
        p.r_minus,
        p.nullity,
        p.signature()
    );

    // a rank-(0,1) enlargement: one new generator pairing into the base
    let spec = EnlargementSpec::new(
        base.clone(),
        IntMatrix::from_rows(&[vec![3], vec![0]]),
        IntMatrix::zeros(0, 1),
        IntMatrix::from_rows(&[vec![1]]),
    )
    .unwrap();
    let big = enlarge(&spec);
    println!("enlarged gram:\n{}", big.gram());
    let report = verify_inv1(&base, &big, 1).unwrap();
    println!(
        "rank-1 move: dsigma = {}, dn = {}, |dsigma| + |dn| = 1: {:?}",
        report.delta_sigma, report.delta_nullity, report.equality_if_rank1
    );
    // the annihilator of the base explains the jump exactly
    let perp = perp_of_base(&spec);
    println!(
        "sigma(enlarged) - sigma(base) = {} = sigma(perp) = {}",
        signature(&big) - signature(&base),
        signature(&perp)
    );

    // a hyperbolic H-enlargement changes nothing
    let h = EnlargementSpec::new(
        base.clone(),
        IntMatrix::zeros(2, 1),
        IntMatrix::from_rows(&[vec![1]]),
        IntMatrix::zeros(1, 1),
    )
    .unwrap();
    assert!(is_h_enlargement(&h));
    let stabilized = enlarge(&h);
    println!(
        "H-enlargement: signature {} -> {}, nullity {} -> {}",
        signature(&base),
        signature(&stabilized),
        inertia(&base).nullity,
        inertia(&stabilized).nullity
    );

    // and the quotient by its middle sublagrangian undoes it
    let l = Subform::new(
        &stabilized,
        IntMatrix::from_rows(&[vec![0], vec![0], vec![1], vec![0]]),
    )
    .unwrap();
    let q = sublagrangian_quotient(&stabilized, &l).unwrap();
    println!("quotient by the new sublagrangian has gram:\n{}", q.gram());
}
