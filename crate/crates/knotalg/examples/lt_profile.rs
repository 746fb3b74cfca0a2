//! A Levine-Tristram profile: nullity and signature at every root of
//! unity with denominator up to 12, printed exactly. The nullity lights up
//! precisely where the Alexander polynomial vanishes.

use knotalg::polyarith::RootOfUnity;
use knotalg::seifert::{alexander, lt_invariants, SeifertForm};

fn main() {
    let form = SeifertForm::trefoil();
    println!("Delta = {}", alexander(&form));
    println!("{:>6} {:>8} {:>10} {:>11}", "p/q", "nullity", "signature", "Delta(xi)=0");
    for xi in RootOfUnity::all_with_denominator_up_to(12) {
        let lt = lt_invariants(&form, xi).unwrap();
        println!(
            "{:>6} {:>8} {:>10} {:>11}",
            lt.xi.to_string(),
            lt.nullity,
            lt.signature,
            lt.alexander_value_is_zero
        );
    }
}
