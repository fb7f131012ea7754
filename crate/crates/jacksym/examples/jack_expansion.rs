//! Jack functions P_λ in the monomial basis, their norms, and a
//! specialization at a numeric α.

use jacksym::alpha::eval_alpha;
use jacksym::field::rat;
use jacksym::jack::{jack_norm, jack_p};
use jacksym::partition::enumerate;
use jacksym::AlphaRat;

fn main() {
    for lam in enumerate(3, None) {
        let p = jack_p(&lam);
        println!("P[{lam}] = {}", p.body.to_m());
        println!("  <P, P> = {}", jacksym::alpha::ShowAlpha(&jack_norm(&lam)));
    }
    let p21 = jack_p(&jacksym::part![2, 1]).body.to_m();
    let at_two = jacksym::SymFun::from_terms(
        p21.basis(),
        p21.terms().iter().map(|(l, c)| (l.clone(), AlphaRat::constant(eval_alpha(c, &rat(2, 1)).unwrap()))),
    );
    println!("P[2,1] at α = 2: {at_two}");
}
