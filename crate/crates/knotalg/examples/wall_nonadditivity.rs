//! Wall's correction to Novikov additivity: the signature of the kernel
//! form built from three lagrangians of one (-1)-symmetric form. The
//! standard example — the skew plane with its diagonal, vertical and
//! horizontal lagrangians — gives 1, the signature of the glued-up
//! closed four-manifold.

use knotalg::exact_linalg::IntMatrix;
use knotalg::forms::{wall_triad_signature, Eps, EpsSymmetricForm, TriadLagrangians};

fn main() {
    let ambient = EpsSymmetricForm::new(
        Eps::Minus,
        IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]),
    )
    .unwrap();
    let diagonal = IntMatrix::from_rows(&[vec![1], vec![1]]);
    let vertical = IntMatrix::from_rows(&[vec![0], vec![1]]);
    let horizontal = IntMatrix::from_rows(&[vec![1], vec![0]]);

    let triad = TriadLagrangians::new(
        ambient.clone(),
        diagonal.clone(),
        vertical.clone(),
        horizontal.clone(),
    )
    .unwrap();
    println!("wall signature = {}", wall_triad_signature(&triad));

    // swapping the outer lagrangians flips the sign
    let swapped =
        TriadLagrangians::new(ambient.clone(), horizontal, vertical.clone(), diagonal.clone())
            .unwrap();
    println!("after swapping L- and L+: {}", wall_triad_signature(&swapped));

    // two coinciding lagrangians force 0
    let degenerate = TriadLagrangians::new(ambient, diagonal.clone(), diagonal, vertical).unwrap();
    println!("with a repeated lagrangian: {}", wall_triad_signature(&degenerate));
}
