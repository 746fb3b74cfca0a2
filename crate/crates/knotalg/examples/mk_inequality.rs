//! The Murasugi-Kawauchi inequality checker: given two Seifert forms, the
//! middle Betti numbers of a closed surface sewn from their Seifert
//! surfaces, and a root of unity, bound the signature difference.

use knotalg::polyarith::RootOfUnity;
use knotalg::seifert::{mk_check, MKInstance, SeifertForm};

fn main() {
    let minus_one = RootOfUnity::new(1, 2).unwrap();

    // trefoil against the unknot through a genus-2 closed surface
    let inst = MKInstance::new(
        SeifertForm::trefoil(),
        SeifertForm::empty(1),
        4, // b_n of the closed surface
        2, // b_n of the trefoil's Seifert surface
        0, // b_n of the disk
        minus_one,
    )
    .unwrap();
    let r = mk_check(&inst).unwrap();
    println!(
        "trefoil vs unknot at -1: |sigma_0 - sigma_1| = {} <= {} (slack {})",
        r.lhs, r.rhs, r.slack
    );

    // the same embedding on both ends: zero on both sides of a product
    let tre = SeifertForm::trefoil();
    let inst = MKInstance::new(tre.clone(), tre, 4, 2, 2, minus_one).unwrap();
    let r = mk_check(&inst).unwrap();
    println!(
        "trefoil vs itself: lhs = {}, rhs = {}, holds = {}",
        r.lhs, r.rhs, r.holds
    );
}
