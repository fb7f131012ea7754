//! The Hamiltonians H^(1), H^(2) as combinations of A^(1), A^(2), and the
//! Heisenberg modes a_n with their commutation relation.

use jacksym::ops::{apply_a, apply_h1, apply_h2, heisenberg_a};
use jacksym::{part, SymFun};

fn main() {
    let f = SymFun::p(part![2, 1]);
    println!("H^(1) p[2,1] = {}", apply_h1(&f));
    println!("H^(2) p[2,1] = {}", apply_h2(&f));
    let a1 = apply_a(1, &f);
    let combo = apply_a(1, &a1.add(&f)).sub(&apply_a(2, &f).scale(&jacksym::alpha::int(2)));
    println!("A^(1)(A^(1) + 1) − 2A^(2) agrees with H^(2): {}", combo.same_element(&apply_h2(&f)));

    let g = SymFun::p(part![2]);
    let up_down = heisenberg_a(2, &heisenberg_a(-2, &g).unwrap()).unwrap();
    let down_up = heisenberg_a(-2, &heisenberg_a(2, &g).unwrap()).unwrap();
    println!("[a_2, a_-2] p[2] = {}", up_down.sub(&down_up));
}
