//! Splitting a relative cobordism triad into left and right pieces: the
//! derived complexes C'', B'', W-, W+ and the four quasi-isomorphism
//! certificates recovering D, E, C and C'.

use knotalg::chain::{split_triad, ChainComplex, ChainMap, RelativeCobordismTriad};
use knotalg::exact_linalg::IntMatrix;

fn main() {
    // six one-dimensional complexes in degree 0; scalar maps arranged so
    // both squares commute: 3*2 = 1*6 and 5*4 = 1*20
    let z = ChainComplex::concentrated(0, 1);
    let scalar = |v: i64| {
        ChainMap::new(
            z.clone(),
            z.clone(),
            0,
            vec![IntMatrix::from_rows(&[vec![v]])],
        )
        .unwrap()
    };
    let triad = RelativeCobordismTriad::new(
        scalar(2),  // B  -> C
        scalar(6),  // B  -> E
        scalar(4),  // B' -> C'
        scalar(20), // B' -> E
        scalar(3),  // C  -> D
        scalar(5),  // C' -> D
        scalar(1),  // E  -> D
    )
    .unwrap();

    let s = split_triad(&triad).unwrap();
    for (name, c) in [
        ("C''", &s.c_dprime),
        ("B''", &s.b_dprime),
        ("W-", &s.w_minus),
        ("W+", &s.w_plus),
    ] {
        println!("{:4} homology:", name);
        for (r, h) in c.homology() {
            println!("       H_{} = {}", r, h);
        }
    }
    let c = s.certificates;
    println!("D  ~ cone(C'' -> C + C') : {}", c.d_recovered);
    println!("E  ~ cone(B'' -> W- + W+): {}", c.e_recovered);
    println!("C  ~ cone(B'' -> W- + C''): {}", c.c_recovered);
    println!("C' ~ cone(B'' -> C'' + W+): {}", c.c_prime_recovered);
}
