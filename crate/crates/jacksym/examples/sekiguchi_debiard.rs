//! The commuting operators A^(k): their action on power sums, the
//! eigenvalue series A(u) on P_λ, and its Pochhammer coefficients.

use jacksym::alpha::ShowAlpha;
use jacksym::jack::jack_p;
use jacksym::ops::{apply_a, eigenvalue_a_k, eigenvalue_a_series, ShowU};
use jacksym::{part, SymFun};

fn main() {
    let f = SymFun::p(part![2, 1]);
    for k in 1..=3 {
        println!("A^({k}) p[2,1] = {}", apply_a(k, &f));
    }
    let lam = part![3, 1];
    println!("A(u) on P[{lam}]: {}", ShowU(&eigenvalue_a_series(&lam)));
    let p = jack_p(&lam).to_p();
    for k in 1..=lam.len() {
        let e = eigenvalue_a_k(&lam, k);
        assert!(apply_a(k, &p).same_element(&p.scale(&e)));
        println!("  A^({k}) eigenvalue {}", ShowAlpha(&e));
    }
    let a1a2 = apply_a(1, &apply_a(2, &f));
    let a2a1 = apply_a(2, &apply_a(1, &f));
    println!("[A^(1), A^(2)] p[2,1] = 0: {}", a1a2.same_element(&a2a1));
}
