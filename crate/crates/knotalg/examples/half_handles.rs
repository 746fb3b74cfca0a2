//! The half-handle complex of a degree-lowering chain map d : C+ -> C-[-1]
//! and the H-cobordism criterion: the total complex is the cone of d up to
//! a shift, and the cobordism is an H-cobordism exactly when that cone is
//! acyclic.

use knotalg::chain::{half_handle_complex, is_h_cobordism, ChainComplex, HalfHandleData};
use knotalg::exact_linalg::IntMatrix;

fn show(h: &HalfHandleData, name: &str) {
    let c = half_handle_complex(h);
    println!("{}:", name);
    if c.is_zero_complex() {
        println!("  total complex is zero");
    }
    for (r, group) in c.homology() {
        println!("  H_{} = {}", r, group);
    }
    println!("  H-cobordism: {}\n", is_h_cobordism(h));
}

fn main() {
    let z1 = ChainComplex::concentrated(1, 1);
    let z0 = ChainComplex::concentrated(0, 1);

    // a cancelling pair: d is an isomorphism
    let h = HalfHandleData::new(
        z1.clone(),
        z0.clone(),
        1,
        vec![IntMatrix::from_rows(&[vec![1]])],
    )
    .unwrap();
    show(&h, "d = 1");

    // d = 0 leaves both handles alive
    let h = HalfHandleData::new(z1.clone(), z0.clone(), 1, vec![IntMatrix::zeros(1, 1)]).unwrap();
    show(&h, "d = 0");

    // d = 2 creates torsion, so no H-cobordism
    let h = HalfHandleData::new(
        z1,
        z0,
        1,
        vec![IntMatrix::from_rows(&[vec![2]])],
    )
    .unwrap();
    show(&h, "d = 2");
}
