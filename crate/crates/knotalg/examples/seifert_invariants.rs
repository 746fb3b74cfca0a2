//! Invariants of a Seifert form: the symmetrized intersection form, the
//! Alexander polynomial, exact Levine-Tristram signatures and nullities,
//! and how they separate a knot from its mirror.

use knotalg::polyarith::RootOfUnity;
use knotalg::seifert::{alexander, distinguish, lt_invariants, symmetrize, SeifertForm};

fn main() {
    let trefoil = SeifertForm::trefoil();
    println!("Seifert matrix:\n{}", trefoil.matrix());
    println!(
        "intersection form A + (-1)^n A^T:\n{}",
        symmetrize(&trefoil).gram()
    );
    println!("alexander polynomial: {}", alexander(&trefoil));

    for (p, q) in [(1i64, 2i64), (1, 3), (1, 6), (2, 7)] {
        let xi = RootOfUnity::new(p, q).unwrap();
        let lt = lt_invariants(&trefoil, xi).unwrap();
        println!(
            "xi = {}: signature {:3}, nullity {}, Delta(xi) = 0: {}",
            lt.xi, lt.signature, lt.nullity, lt.alexander_value_is_zero
        );
    }

    // the mirror has the same Alexander polynomial but opposite signature
    let mirror = SeifertForm::new(trefoil.matrix().transpose().neg(), 1).unwrap();
    println!("\nmirror alexander polynomial: {}", alexander(&mirror));
    match distinguish(&trefoil, &mirror, 6).unwrap() {
        Some(d) => println!("distinguished: {:?}", d),
        None => println!("not distinguished by computed invariants"),
    }
}
