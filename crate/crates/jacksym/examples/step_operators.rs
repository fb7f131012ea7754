//! The raising and lowering series B(u), C(u): matrix elements between Jack
//! functions and single-box steps at the special points.

use jacksym::alpha::ShowAlpha;
use jacksym::jack::jack_p;
use jacksym::ops::{b_series_at, c_series_at, matrix_element_b, step_down, step_point, step_up, ShowU};
use jacksym::part;

fn main() {
    let mu = part![2, 1];
    for (i, lam) in mu.up_steps() {
        println!("B_[{lam}][{mu}](u) = {}  (row {i})", ShowU(&matrix_element_b(&lam, &mu).unwrap()));
    }

    let lam = part![2, 1];
    for (i, _) in lam.down_steps() {
        let (mu, c) = step_down(&lam, i).unwrap();
        let image = c_series_at(&jack_p(&lam).to_p(), &step_point(&lam, i)).unwrap();
        assert!(image.same_element(&jack_p(&mu).body.scale(&c)));
        println!("C at u = {}: P[{lam}] -> {} · P[{mu}]", ShowAlpha(&step_point(&lam, i)), ShowAlpha(&c));
    }

    let (mu, c) = step_up(&part![2], 1).unwrap();
    println!("step_up coefficient for P[{mu}] -> P[2]: {}", ShowAlpha(&c));
    let image = b_series_at(&jack_p(&mu).to_p(), &step_point(&part![2], 1)).unwrap();
    println!("B(u) P[{mu}] at u = 2α: {}", image.to_m());
    let image = b_series_at(&jack_p(&mu).to_p(), &step_point(&mu, 1)).unwrap();
    println!("B(u) P[{mu}] at u = α:  {}  (a multiple of P[2] alone)", image.to_m());
}
