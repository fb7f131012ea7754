//! The determinantal identity on a numeric instance, its series form, and
//! the term count of the cancelling sum.

use jacksym::field::rat;
use jacksym::finite::{
    cancelling_sum, detid_check, detid_check_series, detid_sides, term_count_closed_form, PsiInstance,
};

fn main() {
    let inst = PsiInstance::new(vec![rat(1, 1), rat(2, 1), rat(-1, 3)], vec![rat(1, 2), rat(3, 1)]).unwrap();
    let (lhs, rhs) = detid_sides(&inst);
    println!("instance {}", serde_json::to_string(&inst).unwrap());
    println!("det side coefficients: {:?}", lhs.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("pair side coefficients: {:?}", rhs.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("identity holds: {}", detid_check(&inst));
    println!("series form, N = 2, degree 3: {}", detid_check_series(2, 3).unwrap());
    for (n, k) in [(3, 1), (4, 2), (5, 2)] {
        let (count, sum) = cancelling_sum(n, k).unwrap();
        println!(
            "N = {n}, k = {k}: {count} terms (closed form {}), sum vanishes: {}",
            term_count_closed_form(n, k),
            sum.is_zero()
        );
    }
}
