//! The reproducing kernel exp(Σ p_n(x) p_n(y)/(αn)) and the lemma that
//! adjoints on x act as multiplication on y.

use jacksym::cli::kernel_term;
use jacksym::symfun::{kernel_lemma_check, kernel_truncated};
use jacksym::{part, SymFun};

fn main() {
    for ((x, y), c) in kernel_truncated(3) {
        println!("{}", kernel_term(&c, &x, &y));
    }
    for f in [SymFun::p(part![1]), SymFun::p(part![2, 1]), SymFun::m(part![1, 1, 1])] {
        println!("lemma for {f}: {}", kernel_lemma_check(&f, 5).unwrap());
    }
}
