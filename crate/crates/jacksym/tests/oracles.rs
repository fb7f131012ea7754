//! Cross-checks against computations that share no code path with the
//! library's own algorithms: explicit-variable expansions, bialternants,
//! differential operators in finitely many variables and Gaussian elimination.

use jacksym::alpha::{alpha, eval_alpha, int};
use jacksym::field::{rat, Rational};
use jacksym::finite::{detid_sides, restrict, signed_permutations, vandermonde, MultiPoly, PsiInstance};
use jacksym::jack::jack_p;
use jacksym::partition::{enumerate, enumerate_up_to};
use jacksym::symfun::{mul, p_to_m};
use jacksym::{part, AlphaRat, Basis, Partition, SymFun};
use num_traits::{One, Zero};
use rand::SeedableRng;

fn power_sum_in(n: usize, k: u32) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = k;
        out.add_term(e, &int(1));
    }
    out
}

fn partial(f: &MultiPoly, i: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(f.nvars());
    for (e, c) in f.terms() {
        if e[i] > 0 {
            let mut d = e.clone();
            d[i] -= 1;
            out.add_term(d, &c.scale(&Rational::from_integer(e[i].into())));
        }
    }
    out
}

fn x_pow_times(f: &MultiPoly, i: usize, k: u32) -> MultiPoly {
    let mut e = vec![0; f.nvars()];
    e[i] = k;
    MultiPoly::monomial(f.nvars(), e, int(1)).mul(f)
}

fn specialize(f: &SymFun, a: &Rational) -> SymFun {
    SymFun::from_terms(
        f.basis(),
        f.terms().iter().map(|(l, c)| (l.clone(), AlphaRat::constant(eval_alpha(c, a).unwrap()))),
    )
}

#[test]
fn power_sums_expand_like_explicit_products() {
    for w in 1..=6 {
        let n = w as usize;
        for mu in enumerate(w, None) {
            let explicit = mu.parts().iter().fold(MultiPoly::one(n), |acc, &k| acc.mul(&power_sum_in(n, k)));
            let via_table = p_to_m(&SymFun::p(mu.clone()));
            for lam in enumerate(w, None) {
                let mut exps: Vec<u32> = lam.parts().to_vec();
                exps.resize(n, 0);
                let direct = explicit.terms().get(&exps).cloned().unwrap_or_else(AlphaRat::zero);
                assert_eq!(via_table.coeff(&lam), direct, "p{mu} at m{lam}");
            }
        }
    }
}

#[test]
fn jack_at_one_is_the_bialternant() {
    for lam in enumerate_up_to(5) {
        let n = lam.len().max(1) + 1;
        let mut alternant = MultiPoly::zero(n);
        for (sigma, sign) in signed_permutations(n) {
            let mut e = vec![0u32; n];
            for i in 0..n {
                let j = sigma[i];
                e[i] = lam.part(j + 1) + (n - 1 - j) as u32;
            }
            alternant.add_term(e, &int(sign));
        }
        let schur = alternant.div_exact(&vandermonde(n, n)).expect("alternant is divisible");
        let p = specialize(&jack_p(&lam).body, &Rational::one());
        assert_eq!(restrict(&p, n), schur, "P{lam} at α = 1");
    }
}

#[test]
fn jack_at_zero_is_an_elementary_product() {
    for lam in enumerate_up_to(6) {
        let e_prod = lam
            .conjugate()
            .parts()
            .iter()
            .fold(SymFun::one(), |acc, &k| mul(&acc, &SymFun::m(Partition::new(vec![1; k as usize]))));
        let p = specialize(&jack_p(&lam).body, &Rational::zero());
        assert!(p.same_element(&e_prod), "P{lam} at α = 0");
    }
}

/// `(α/2) Σ x_i² ∂_i² + Σ_{i<j} (x_i² ∂_i − x_j² ∂_j)/(x_i − x_j)`.
fn laplace_beltrami(f: &MultiPoly) -> MultiPoly {
    let n = f.nvars();
    let half_alpha = alpha().scale(&rat(1, 2));
    let mut out = MultiPoly::zero(n);
    for i in 0..n {
        out = out.add(&x_pow_times(&partial(&partial(f, i), i), i, 2).scale(&half_alpha));
    }
    for i in 0..n {
        for j in i + 1..n {
            let num = x_pow_times(&partial(f, i), i, 2).sub(&x_pow_times(&partial(f, j), j, 2));
            let diff = MultiPoly::var(n, i).sub(&MultiPoly::var(n, j));
            out = out.add(&num.div_exact(&diff).expect("antisymmetric numerator"));
        }
    }
    out
}

#[test]
fn jack_diagonalizes_the_laplace_beltrami_operator() {
    for lam in enumerate_up_to(5) {
        let n = lam.len().max(1) + 1;
        let f = restrict(&jack_p(&lam).body, n);
        let mut eigen = AlphaRat::zero();
        for (idx, &part) in lam.parts().iter().enumerate() {
            let l = part as i64;
            eigen = eigen.add(&alpha().scale(&rat(l * (l - 1), 2))).add(&int((n - 1 - idx) as i64 * l));
        }
        assert_eq!(laplace_beltrami(&f), f.scale(&eigen), "P{lam} in {n} variables");
    }
}

#[test]
fn small_jacks_by_hand() {
    let a1 = alpha().add(&int(1));
    let expected = SymFun::from_terms(Basis::Monomial, [(part![2], int(1)), (part![1, 1], int(2).div(&a1).unwrap())]);
    assert_eq!(jack_p(&part![2]).body.to_m(), expected);
    assert_eq!(jack_p(&part![1, 1]).body.to_m(), SymFun::m(part![1, 1]));
    let two_a1 = alpha().scale(&rat(2, 1)).add(&int(1));
    let p21 = jack_p(&part![2, 1]).body.to_m();
    assert_eq!(p21.coeff(&part![1, 1, 1]), int(6).div(&alpha().add(&int(2))).unwrap());
    let p3 = jack_p(&part![3]).body.to_m();
    assert_eq!(p3.coeff(&part![2, 1]), int(3).div(&two_a1).unwrap());
}

fn gaussian_det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(pivot) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if pivot != c {
            m.swap(pivot, c);
            det = -det;
        }
        det *= &m[c][c];
        let pivot_row = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            let f = &row[c] / &pivot_row[c];
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x -= &f * p;
            }
        }
    }
    det
}

#[test]
fn determinant_matches_gaussian_elimination() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for n in 1..=4 {
        for m in 0..=4 {
            let inst = PsiInstance::random(n, m, &mut rng);
            let psi = inst.matrix();
            let (lhs, rhs) = detid_sides(&inst);
            for u in -3i64..=3 {
                let u = Rational::from_integer(u.into());
                let matrix: Vec<Vec<Rational>> = (0..n)
                    .map(|i| {
                        let s: Rational = psi[i].iter().sum();
                        (1..=n)
                            .map(|j| {
                                num_traits::pow(inst.x[i].clone(), n - j)
                                    * (&u + Rational::from_integer((j as i64 - 1).into()) + &s)
                            })
                            .collect()
                    })
                    .collect();
                let det = gaussian_det(matrix);
                assert_eq!(lhs.eval(&u), det, "n={n} m={m}");
                assert_eq!(rhs.eval(&u), det, "n={n} m={m}");
            }
        }
    }
}
