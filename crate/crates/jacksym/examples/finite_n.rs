//! The operator S_N(u) in N variables: eigenvalues on restricted Jack
//! functions and stability under dropping a variable.

use jacksym::finite::{check_eigen_s_n, check_stability_a_n, finite_eigenvalue, restrict};
use jacksym::jack::jack_p;
use jacksym::ops::format_upoly;
use jacksym::part;

fn main() {
    let lam = part![2, 1];
    for n in 2..=3 {
        println!("S_{n}(u) on P[{lam}]: eigenvalue {}", format_upoly(&finite_eigenvalue(&lam, n)));
        println!("  verified: {}", check_eigen_s_n(&lam, n).unwrap());
    }
    println!("P[{lam}] in 3 variables: {}", restrict(&jack_p(&lam).body, 3));
    let f = jack_p(&part![2]).body;
    println!("stability from 3 to 2 variables: {}", check_stability_a_n(&f, 3).unwrap());
}
