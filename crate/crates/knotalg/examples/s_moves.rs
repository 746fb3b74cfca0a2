//! S-moves on Seifert forms: stabilization leaves every computed invariant
//! unchanged, basis-visible reductions recover the smaller form, and the
//! bounded breadth-first search reconstructs short move chains.

use knotalg::exact_linalg::IntMatrix;
use knotalg::polyarith::RootOfUnity;
use knotalg::seifert::{
    alexander, bounded_s_search, lt_invariants, s_enlarge, s_reduce_candidates, SMove, SeifertForm,
};

fn main() {
    let trefoil = SeifertForm::trefoil();
    let alpha = IntMatrix::from_rows(&[vec![2], vec![-1]]);
    let up = s_enlarge(&trefoil, SMove::Column, &alpha).unwrap();
    let beta = IntMatrix::from_rows(&[vec![0, 1, 0, 3]]);
    let up2 = s_enlarge(&up, SMove::Row, &beta).unwrap();
    println!("after two stabilizations ({}x{}):\n{}", up2.dim(), up2.dim(), up2.matrix());

    println!("alexander stays {}", alexander(&up2));
    let xi = RootOfUnity::new(1, 2).unwrap();
    let (a, b) = (
        lt_invariants(&trefoil, xi).unwrap(),
        lt_invariants(&up2, xi).unwrap(),
    );
    println!(
        "(n, sigma) at -1: ({}, {}) before, ({}, {}) after",
        a.nullity, a.signature, b.nullity, b.signature
    );

    let reductions = s_reduce_candidates(&up2);
    println!("{} basis-visible reduction(s) found", reductions.len());

    match bounded_s_search(&trefoil, &up2, 4, 3) {
        Some(moves) => println!("search reconnects the forms in {} move(s)", moves),
        None => println!("search found no chain within the bounds"),
    }
}
