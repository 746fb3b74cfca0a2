//! Chain complexes over Z: homology, mapping cones, duals, unions, and
//! quasi-isomorphism detection through cone acyclicity.

use knotalg::chain::{cone, is_quasi_iso, union, ChainComplex, ChainMap};
use knotalg::exact_linalg::IntMatrix;

fn main() {
    // 0 -> Z --2--> Z -> 0 in degrees 1, 0
    let c = ChainComplex::new(0, vec![1, 1], vec![IntMatrix::from_rows(&[vec![2]])]).unwrap();
    for (r, h) in c.homology() {
        println!("H_{} = {}", r, h);
    }

    // the cone of multiplication by 2 on Z picks up the torsion
    let z = ChainComplex::concentrated(0, 1);
    let double = ChainMap::new(
        z.clone(),
        z.clone(),
        0,
        vec![IntMatrix::from_rows(&[vec![2]])],
    )
    .unwrap();
    let k = cone(&double);
    println!("\ncone(x2 : Z -> Z):");
    for (r, h) in k.homology() {
        println!("H_{} = {}", r, h);
    }
    println!("x2 is a quasi-isomorphism: {}", is_quasi_iso(&double));
    println!(
        "identity is a quasi-isomorphism: {}",
        is_quasi_iso(&ChainMap::identity(&c))
    );

    // glue two intervals along their boundary spheres: a circle
    let s0 = ChainComplex::concentrated(0, 2);
    let interval = ChainComplex::concentrated(0, 1);
    let collapse = ChainMap::new(
        s0.clone(),
        interval.clone(),
        0,
        vec![IntMatrix::from_rows(&[vec![1, 1]])],
    )
    .unwrap();
    let circle = union(&collapse, &collapse).unwrap();
    println!("\ninterval u_(S^0) interval:");
    for (r, h) in circle.homology() {
        println!("H_{} = {}", r, h);
    }

    // dualizing twice restores the ranks
    let d = c.dual(1);
    println!(
        "\ndual at m = 1 has differential {:?}",
        d.differential_at(1)
    );
    println!(
        "double dual ranks: {:?}",
        (0..=1).map(|r| c.dual(1).dual(1).rank_at(r)).collect::<Vec<_>>()
    );
}
