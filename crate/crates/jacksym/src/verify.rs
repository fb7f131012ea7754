//! Verification suites: exhaustive exact checks of the operator identities
//! over bounded ranges, reported per check with the first counterexample.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alpha::{alpha, int, ShowAlpha};
use crate::error::Error;
use crate::finite::{
    cancelling_sum, check_eigen_s_n, check_stability_a_n, detid_check, detid_check_series, detid_sides,
    detid_term_count, restrict, s_n_coefficient, term_count_closed_form, PsiInstance,
};
use crate::jack::{
    conjugate_extension, d_dp1, from_jack_basis, gram_schmidt, jack_p, jack_weight, pieri_down_coeff,
    pieri_down_expansion, pieri_up_coeff, pieri_up_expansion,
};
use crate::ops::{
    apply_a, apply_b, apply_c, apply_h1, apply_h2, b_series_at, c_series_at, eigenvalue_a_k, expand_pochhammer,
    graded_matrix, heisenberg_a, mat_mul, matrix_element_b, matrix_element_c, skip_product_at_step, step_down,
    step_point, step_up,
};
use crate::partition::{enumerate, enumerate_up_to, Partition};
use crate::symfun::{inner_product, mul, p_derivative, p_norm, Basis, SymFun};
use crate::{field::rat, part};

/// Outcome of one named family of exact checks.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    pub fn new(name: &str) -> Self {
        Check { name: name.to_string(), cases: 0, failures: 0, counterexample: None }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Records one case; `describe` is only called for the first failure.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }

    /// Records a case whose evaluation may fail; an error counts as a failure.
    pub fn record_result(&mut self, r: Result<bool, Error>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, describe),
            Err(e) => self.record(false, || format!("{}: {e}", describe())),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} cases)", self.name, self.cases)
        } else {
            write!(f, "FAIL {} ({} of {} cases failed)", self.name, self.failures, self.cases)?;
            if let Some(c) = &self.counterexample {
                write!(f, "\n     first counterexample: {c}")?;
            }
            Ok(())
        }
    }
}

/// A suite run: its name and the checks it performed.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_counterexample(&self) -> Option<(&str, &str)> {
        self.checks.iter().find_map(|c| c.counterexample.as_deref().map(|ce| (c.name.as_str(), ce)))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Bounds shared by the suites.
#[derive(Clone, Debug)]
pub struct Bounds {
    /// Largest weight of symmetric functions exercised.
    pub max_weight: u32,
    /// Largest operator index `k` for `A^(k)`, `B^(k)`, `C^(k)`.
    pub max_k: usize,
    /// Largest weight for step-operator and matrix-element checks.
    pub step_weight: u32,
    /// Largest number of variables for finite-N and numeric determinant checks.
    pub n: usize,
    /// Largest number of `ψ` values in numeric determinant checks.
    pub m: usize,
    /// Random instances per `(N, M)`.
    pub seeds: u64,
    /// Base seed for random instances.
    pub seed: u64,
    /// Largest number of variables for the series form of the determinant.
    pub series_n: usize,
    /// Truncation degree in `y` for the series form.
    pub ydeg: u32,
    /// Largest `N` for the term count of the cancelling sum.
    pub count_n: usize,
    /// Largest `|m|`, `|n|` for Heisenberg relations.
    pub max_mode: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_weight: 6,
            max_k: 4,
            step_weight: 6,
            n: 3,
            m: 3,
            seeds: 20,
            seed: 0,
            series_n: 3,
            ydeg: 3,
            count_n: 6,
            max_mode: 4,
        }
    }
}

fn show(f: &SymFun) -> String {
    f.to_string()
}

fn p(l: &Partition) -> SymFun {
    SymFun::p(l.clone())
}

fn p1() -> SymFun {
    SymFun::p(part![1])
}

/// `[A^(j), A^(k)] = 0` as matrices on each weight component.
pub fn a_commute(max_weight: u32, max_k: usize) -> Check {
    let mut check = Check::new("A-commute");
    for w in 0..=max_weight {
        let mats: Vec<_> = (1..=max_k).map(|k| graded_matrix(w, |f| apply_a(k, f))).collect();
        for j in 0..max_k {
            for k in j + 1..max_k {
                let ok = mat_mul(&mats[j], &mats[k]) == mat_mul(&mats[k], &mats[j]);
                check.record(ok, || format!("[A^({}), A^({})] ≠ 0 on weight {w}", j + 1, k + 1));
            }
        }
    }
    check
}

/// `⟨A^(k) p_μ, p_ν⟩ = ⟨p_μ, A^(k) p_ν⟩`.
pub fn a_self_adjoint(max_weight: u32, max_k: usize) -> Check {
    let mut check = Check::new("A-self-adjoint");
    for w in 0..=max_weight {
        let parts = enumerate(w, None);
        for k in 1..=max_k {
            let mat = graded_matrix(w, |f| apply_a(k, f));
            for (a, mu) in parts.iter().enumerate() {
                for (b, nu) in parts.iter().enumerate().skip(a + 1) {
                    let ok = mat[b][a].mul(&p_norm(nu)) == mat[a][b].mul(&p_norm(mu));
                    check.record(ok, || format!("A^({k}) not self-adjoint on p[{mu}], p[{nu}]"));
                }
            }
        }
    }
    check
}

/// `A^(k) P_λ = e_k(λ) P_λ`, including the vanishing for `k > ℓ(λ)`.
pub fn a_eigen(max_weight: u32, max_k: usize) -> Check {
    let mut check = Check::new("A-eigen");
    for lam in enumerate_up_to(max_weight) {
        let jack = jack_p(&lam).to_p();
        for k in 1..=max_k {
            let lhs = apply_a(k, &jack);
            let ev = eigenvalue_a_k(&lam, k);
            check.record(lhs == jack.scale(&ev), || {
                format!("A^({k}) P[{lam}] = {} but eigenvalue is {}", show(&lhs), ShowAlpha(&ev))
            });
        }
    }
    check
}

/// `⟨P_λ, P_μ⟩ = 0` for distinct partitions of one weight.
pub fn jack_orthogonal(max_weight: u32) -> Check {
    let mut check = Check::new("jack-orthogonal");
    for w in 0..=max_weight {
        let parts = enumerate(w, None);
        let jacks: Vec<SymFun> = parts.iter().map(|l| jack_p(l).to_p()).collect();
        for a in 0..parts.len() {
            for b in a + 1..parts.len() {
                let ip = inner_product(&jacks[a], &jacks[b]);
                check.record(ip.is_zero(), || format!("⟨P[{}], P[{}]⟩ = {}", parts[a], parts[b], ShowAlpha(&ip)));
            }
        }
    }
    check
}

/// `P_λ = m_λ + Σ_{μ<λ} c m_μ` with `μ` strictly dominated.
pub fn jack_unitriangular(max_weight: u32) -> Check {
    let mut check = Check::new("jack-unitriangular");
    for lam in enumerate_up_to(max_weight) {
        let body = jack_p(&lam).body;
        let ok = body.coeff(&lam) == int(1)
            && body.terms().keys().all(|mu| mu == &lam || (mu.dominance_leq(&lam) && mu != &lam));
        check.record(ok, || format!("P[{lam}] = {}", show(&body)));
    }
    check
}

/// Gram–Schmidt along a second linear extension of dominance gives the same `P_λ`.
pub fn jack_order_independent(max_weight: u32) -> Check {
    let mut check = Check::new("jack-order-independent");
    for w in 0..=max_weight {
        let reference = jack_weight(w);
        for j in gram_schmidt(&conjugate_extension(w)) {
            let ok = reference[&j.label] == j;
            check.record(ok, || format!("P[{}] depends on the processing order", j.label));
        }
    }
    check
}

/// `P_(2) = m_(2) + 2/(α+1) m_(1,1)`.
pub fn jack_p2() -> Check {
    let mut check = Check::new("jack-P2");
    let expected = SymFun::from_terms(
        Basis::Monomial,
        [(part![2], int(1)), (part![1, 1], int(2).div(&crate::alpha::alpha_linear(1, 1)).expect("α+1 ≠ 0"))],
    );
    let got = jack_p(&part![2]).body;
    check.record(got == expected, || format!("P[2] = {}", show(&got)));
    check
}

/// `p_1 P_μ` against the Pieri-up coefficients.
pub fn pieri_up(max_weight: u32) -> Check {
    let mut check = Check::new("pieri-up");
    for mu in enumerate_up_to(max_weight.saturating_sub(1)) {
        let lhs = mul(&p1(), &jack_p(&mu).to_p());
        let rhs = pieri_up_expansion(&mu).map(|t| from_jack_basis(&t));
        check.record_result(rhs.map(|r| r.same_element(&lhs)), || format!("p1·P[{mu}] mismatch"));
    }
    check
}

/// `∂P_λ/∂p_1` against the Pieri-down coefficients.
pub fn pieri_down(max_weight: u32) -> Check {
    let mut check = Check::new("pieri-down");
    for lam in enumerate_up_to(max_weight) {
        let lhs = p_derivative(&jack_p(&lam).to_p(), 1);
        let adjoint_form = d_dp1(&jack_p(&lam).body);
        let rhs = pieri_down_expansion(&lam).map(|t| from_jack_basis(&t));
        let ok = rhs.map(|r| r.same_element(&lhs) && adjoint_form.same_element(&lhs));
        check.record_result(ok, || format!("∂P[{lam}]/∂p1 mismatch"));
    }
    check
}

/// `[p_1, A^(k)] = α B^(k)` on each `p_ν`.
pub fn b_commutator(max_weight: u32, max_k: usize) -> Check {
    let mut check = Check::new("B-commutator");
    for nu in enumerate_up_to(max_weight) {
        let f = p(&nu);
        for k in 1..=max_k {
            let lhs = mul(&p1(), &apply_a(k, &f)).sub(&apply_a(k, &mul(&p1(), &f)));
            let rhs = apply_b(k, &f).map(|b| b.scale(&alpha()));
            check.record_result(rhs.map(|r| r.same_element(&lhs)), || {
                format!("[p1, A^({k})] p[{nu}] ≠ α B^({k}) p[{nu}]")
            });
        }
    }
    check
}

/// `[A^(k), ∂/∂p_1] = C^(k)` on each `p_ν`.
pub fn c_commutator(max_weight: u32, max_k: usize) -> Check {
    let mut check = Check::new("C-commutator");
    for nu in enumerate_up_to(max_weight) {
        let f = p(&nu);
        for k in 1..=max_k {
            let lhs = apply_a(k, &p_derivative(&f, 1)).sub(&p_derivative(&apply_a(k, &f), 1));
            let rhs = apply_c(k, &f);
            check.record_result(rhs.map(|r| r.same_element(&lhs)), || {
                format!("[A^({k}), ∂1] p[{nu}] ≠ C^({k}) p[{nu}]")
            });
        }
    }
    check
}

/// `⟨B^(k) f, g⟩ = ⟨f, C^(k) g⟩` on power sums.
pub fn b_c_adjoint(max_weight: u32, max_k: usize) -> Check {
    let mut check = Check::new("B-C-adjoint");
    for w in 0..max_weight {
        for nu in enumerate(w, None) {
            for rho in enumerate(w + 1, None) {
                for k in 1..=max_k {
                    let ok = apply_b(k, &p(&nu)).and_then(|b| {
                        let c = apply_c(k, &p(&rho))?;
                        Ok(inner_product(&b, &p(&rho)) == inner_product(&p(&nu), &c))
                    });
                    check.record_result(ok, || format!("⟨B^({k}) p[{nu}], p[{rho}]⟩ ≠ ⟨p[{nu}], C^({k}) p[{rho}]⟩"));
                }
            }
        }
    }
    check
}

/// `B^(k) P_μ = Σ_λ e_k(B_λμ) P_λ`, the coefficients read off the Pochhammer
/// expansion of each matrix element.
pub fn b_matrix_elements(max_weight: u32) -> Check {
    let mut check = Check::new("B-matrix-elements");
    for mu in enumerate_up_to(max_weight) {
        let jack = jack_p(&mu).to_p();
        let expansions: Result<Vec<_>, Error> = mu
            .up_steps()
            .into_iter()
            .map(|(_, lam)| {
                let e = expand_pochhammer(&matrix_element_b(&lam, &mu)?, lam.len())?;
                Ok((lam, e))
            })
            .collect();
        let expansions = match expansions {
            Ok(e) => e,
            Err(e) => {
                check.record(false, || format!("B matrix elements for μ = {mu}: {e}"));
                continue;
            }
        };
        for k in 1..=mu.weight() as usize + 1 {
            let terms: Vec<_> = expansions.iter().map(|(l, e)| (l.clone(), e.coeff(k))).collect();
            let rhs = from_jack_basis(&terms);
            let ok = apply_b(k, &jack).map(|lhs| lhs.same_element(&rhs));
            check.record_result(ok, || format!("B^({k}) P[{mu}] disagrees with its matrix elements"));
        }
    }
    check
}

/// `C^(k) P_λ = Σ_μ e_k(C_μλ) P_μ`.
pub fn c_matrix_elements(max_weight: u32) -> Check {
    let mut check = Check::new("C-matrix-elements");
    for lam in enumerate_up_to(max_weight) {
        let jack = jack_p(&lam).to_p();
        let expansions: Result<Vec<_>, Error> = lam
            .down_steps()
            .into_iter()
            .map(|(_, mu)| {
                let e = expand_pochhammer(&matrix_element_c(&mu, &lam)?, lam.len())?;
                Ok((mu, e))
            })
            .collect();
        let expansions = match expansions {
            Ok(e) => e,
            Err(e) => {
                check.record(false, || format!("C matrix elements for λ = {lam}: {e}"));
                continue;
            }
        };
        for k in 1..=lam.weight() as usize {
            let terms: Vec<_> = expansions.iter().map(|(m, e)| (m.clone(), e.coeff(k))).collect();
            let rhs = from_jack_basis(&terms);
            let ok = apply_c(k, &jack).map(|lhs| lhs.same_element(&rhs));
            check.record_result(ok, || format!("C^({k}) P[{lam}] disagrees with its matrix elements"));
        }
    }
    check
}

fn single_box_moves(max_weight: u32) -> impl Iterator<Item = (Partition, usize)> {
    enumerate_up_to(max_weight).into_iter().flat_map(|lam| {
        let rows: Vec<usize> = lam.down_steps().into_iter().map(|(i, _)| i).collect();
        rows.into_iter().map(move |i| (lam.clone(), i))
    })
}

/// The up-step coefficient equals the Pieri-up coefficient times the
/// evaluated skip product.
pub fn step_up_closed_form(max_weight: u32) -> Check {
    let mut check = Check::new("step-up-closed-form");
    for (lam, i) in single_box_moves(max_weight) {
        let ok =
            step_up(&lam, i).and_then(|(mu, c)| Ok(c == pieri_up_coeff(&mu, i)?.mul(&skip_product_at_step(&lam, i)?)));
        check.record_result(ok, || format!("step_up(({lam}), {i})"));
    }
    check
}

/// The down-step coefficient equals α times the Pieri-down coefficient times
/// the evaluated skip product.
pub fn step_down_closed_form(max_weight: u32) -> Check {
    let mut check = Check::new("step-down-closed-form");
    for (lam, i) in single_box_moves(max_weight) {
        let ok = step_down(&lam, i)
            .and_then(|(_, c)| Ok(c == alpha().mul(&pieri_down_coeff(&lam, i)?).mul(&skip_product_at_step(&lam, i)?)));
        check.record_result(ok, || format!("step_down(({lam}), {i})"));
    }
    check
}

/// `C(αλ_i − i + 1) P_λ = c · P_μ` with the full operator series.
pub fn step_down_operator(max_weight: u32) -> Check {
    let mut check = Check::new("step-down-operator");
    for (lam, i) in single_box_moves(max_weight) {
        let ok = step_down(&lam, i).and_then(|(mu, c)| {
            let image = c_series_at(&jack_p(&lam).to_p(), &step_point(&lam, i))?;
            Ok(image.same_element(&jack_p(&mu).body.scale(&c)))
        });
        check.record_result(ok, || format!("C(αλ_{i} − {i} + 1) P[{lam}] is not proportional to P[μ]"));
    }
    check
}

/// `B(αλ_i − i + 1) P_μ = c · P_λ` with the full operator series.
pub fn step_up_operator(max_weight: u32) -> Check {
    let mut check = Check::new("step-up-operator");
    for (lam, i) in single_box_moves(max_weight) {
        let mut residue = SymFun::zero(Basis::Monomial);
        let u0 = step_point(&lam, i);
        let mu = lam.remove_box(i).expect("valid move");
        let ok = step_up(&lam, i).and_then(|(_, c)| {
            let image = b_series_at(&jack_p(&mu).to_p(), &u0)?;
            residue = image.to_m().sub(&jack_p(&lam).body.scale(&c));
            Ok(residue.is_zero())
        });
        check.record_result(ok, || {
            let stray: Vec<String> = crate::jack::to_jack_basis(&residue)
                .into_iter()
                .map(|(l, c)| format!("{}·P[{l}]", ShowAlpha(&c)))
                .collect();
            format!("B(u) P[{mu}] at u = {} leaves {} besides the P[{lam}] term", ShowAlpha(&u0), stray.join(" + "))
        });
    }
    check
}

/// `B(αμ_i − i + 1) P_μ = B_λμ(αμ_i − i + 1) P_λ` whenever row `i` of `μ` is
/// nonempty: at this point every other up-step carries a vanishing factor.
pub fn step_up_isolating_point(max_weight: u32) -> Check {
    let mut check = Check::new("step-up-isolating-point");
    for (lam, i) in single_box_moves(max_weight) {
        let mu = lam.remove_box(i).expect("valid move");
        if mu.part(i) == 0 {
            continue;
        }
        let u0 = step_point(&mu, i);
        let ok = matrix_element_b(&lam, &mu).and_then(|b| {
            let c = b.eval(&u0)?;
            let image = b_series_at(&jack_p(&mu).to_p(), &u0)?;
            Ok(image.same_element(&jack_p(&lam).body.scale(&c)))
        });
        check.record_result(ok, || format!("B(αμ_{i} − {i} + 1) P[{mu}] is not proportional to P[{lam}]"));
    }
    check
}

/// The worked step values `step_down((1),1) = 1` and `step_up((1),1) = 1/α`.
pub fn step_worked_values() -> Check {
    let mut check = Check::new("step-worked-values");
    let down = step_down(&part![1], 1).map(|(mu, c)| mu.is_empty() && c == int(1));
    check.record_result(down, || "step_down((1), 1)".into());
    let up = step_up(&part![1], 1).map(|(mu, c)| mu.is_empty() && int(1).div(&alpha()).is_ok_and(|v| v == c));
    check.record_result(up, || "step_up((1), 1)".into());
    check
}

/// `−A^(1) = H^(1)` on each `p_ν`.
pub fn hs1(max_weight: u32) -> Check {
    let mut check = Check::new("HS1");
    for nu in enumerate_up_to(max_weight) {
        let f = p(&nu);
        check.record(apply_a(1, &f).neg() == apply_h1(&f), || format!("−A^(1) p[{nu}] ≠ H^(1) p[{nu}]"));
    }
    check
}

/// `A^(1)(A^(1) + 1) − 2A^(2) = H^(2)` on each `p_ν`.
pub fn hs2(max_weight: u32) -> Check {
    let mut check = Check::new("HS2");
    for nu in enumerate_up_to(max_weight) {
        let f = p(&nu);
        let a1 = apply_a(1, &f);
        let lhs = apply_a(1, &a1.add(&f)).sub(&apply_a(2, &f).scale(&int(2)));
        let rhs = apply_h2(&f);
        check.record(lhs.same_element(&rhs), || format!("on p[{nu}]: {} vs {}", show(&lhs), show(&rhs)));
    }
    check
}

/// `f^*(Π)/Π = f(y)` for every power sum of weight at most `max_weight`,
/// with Π truncated at that weight.
pub fn kernel_lemma(max_weight: u32) -> Check {
    let mut check = Check::new("kernel-lemma");
    for lam in enumerate_up_to(max_weight) {
        let ok = crate::symfun::kernel_lemma_check(&p(&lam), max_weight);
        check.record_result(ok, || format!("kernel lemma fails for p[{lam}]"));
    }
    check
}

/// `[a_m, a_n] = mα δ_{m+n,0}` on each `p_ν`.
pub fn heisenberg(max_weight: u32, max_mode: i64) -> Check {
    let mut check = Check::new("heisenberg");
    let modes: Vec<i64> = (-max_mode..=max_mode).filter(|&n| n != 0).collect();
    for nu in enumerate_up_to(max_weight) {
        let f = p(&nu);
        for &a in &modes {
            for &b in &modes {
                let ok = (|| {
                    let ab = heisenberg_a(a, &heisenberg_a(b, &f)?)?;
                    let ba = heisenberg_a(b, &heisenberg_a(a, &f)?)?;
                    let expected =
                        if a + b == 0 { f.scale(&alpha().mul(&int(a))) } else { SymFun::zero(Basis::PowerSum) };
                    Ok(ab.sub(&ba).same_element(&expected))
                })();
                check.record_result(ok, || format!("[a_{a}, a_{b}] p[{nu}]"));
            }
        }
    }
    check
}

/// `S_N(u) P_λ = Π_i (u + i − 1 − αλ_i) P_λ` for `ℓ(λ) ≤ N`.
pub fn finite_eigen(max_weight: u32, max_n: usize) -> Check {
    let mut check = Check::new("S_N-eigen");
    for n in 1..=max_n {
        for lam in enumerate_up_to(max_weight).into_iter().filter(|l| l.len() <= n) {
            check.record_result(check_eigen_s_n(&lam, n), || format!("S_{n}(u) P[{lam}]"));
        }
    }
    check
}

/// Setting `x_N = 0` intertwines `A_N(u)` with `A_{N−1}(u)` on Jack and power-sum inputs.
pub fn finite_stability(max_weight: u32, max_n: usize) -> Check {
    let mut check = Check::new("A_N-stability");
    for n in 1..=max_n {
        for lam in enumerate_up_to(max_weight).into_iter().filter(|l| l.len() <= n) {
            check.record_result(check_stability_a_n(&jack_p(&lam).body, n), || format!("N = {n}, f = P[{lam}]"));
            check.record_result(check_stability_a_n(&p(&lam), n), || format!("N = {n}, f = p[{lam}]"));
        }
    }
    check
}

/// The `u`-coefficients of `S_N(u)` commute on restricted monomial functions.
pub fn finite_coefficients_commute(max_weight: u32, max_n: usize) -> Check {
    let mut check = Check::new("S_N-coefficients-commute");
    for n in 1..=max_n {
        for lam in enumerate_up_to(max_weight).into_iter().filter(|l| l.len() <= n) {
            let f = restrict(&SymFun::m(lam.clone()), n);
            for j in 0..=n {
                for k in j + 1..=n {
                    let ok = (|| {
                        let jk = s_n_coefficient(&s_n_coefficient(&f, k)?, j)?;
                        let kj = s_n_coefficient(&s_n_coefficient(&f, j)?, k)?;
                        Ok(jk == kj)
                    })();
                    check.record_result(ok, || format!("N = {n}, coefficients u^{j}, u^{k} on m[{lam}]"));
                }
            }
        }
    }
    check
}

fn instance_rng(seed: u64, n: usize, m: usize, s: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 48) ^ ((m as u64) << 40) ^ s)
}

/// The determinantal identity on random numeric instances, `N ≤ max_n`, `M ≤ max_m`.
pub fn detid_random(max_n: usize, max_m: usize, seeds: u64, seed: u64) -> Check {
    let mut check = Check::new("detid-random");
    for n in 1..=max_n {
        for m in 0..=max_m {
            for s in 0..seeds {
                let inst = PsiInstance::random(n, m, &mut instance_rng(seed, n, m, s));
                let ok = inst.three_term_relation_holds() && detid_check(&inst);
                check.record(ok, || serde_json::to_string(&inst).expect("serializable"));
            }
        }
    }
    check
}

/// The worked instance `x = (2, 3)`, `ψ = (1)`: both sides are `−u² − 9u/2 − 7/2`.
pub fn detid_worked_example() -> Check {
    let mut check = Check::new("detid-worked-example");
    let inst = PsiInstance::new(vec![rat(2, 1), rat(3, 1)], vec![rat(1, 1)]).expect("valid instance");
    let (lhs, rhs) = detid_sides(&inst);
    let expected = crate::poly::Poly::new(vec![rat(-7, 2), rat(-9, 2), rat(-1, 1)]);
    check.record(lhs == expected && rhs == expected, || format!("{lhs:?} vs {rhs:?}"));
    check
}

/// The series form for `N ≤ max_n`, `D ≤ max_d`.
pub fn detid_series(max_n: usize, max_d: u32) -> Check {
    let mut check = Check::new("detid-series");
    for n in 1..=max_n {
        for d in 1..=max_d {
            check.record_result(detid_check_series(n, d), || format!("N = {n}, D = {d}"));
        }
    }
    check
}

/// The term count of the cancelling sum against its closed form, and the
/// cancellation itself.
pub fn detid_term_counts(max_n: usize) -> Check {
    let mut check = Check::new("detid-term-count");
    for n in 2..=max_n {
        for k in 1..n {
            let ok = detid_term_count(n, k).map(|c| c == term_count_closed_form(n, k));
            check.record_result(ok, || format!("N = {n}, k = {k}"));
        }
    }
    check
}

pub fn detid_cancellation(max_n: usize) -> Check {
    let mut check = Check::new("detid-cancellation");
    for n in 2..=max_n {
        for k in 1..n {
            check.record_result(cancelling_sum(n, k).map(|(_, s)| s.is_zero()), || format!("N = {n}, k = {k}"));
        }
    }
    check
}

/// The named suites.
pub const SUITES: [&str; 9] = ["commute", "eigen", "pieri", "hs", "kernel", "detid", "stability", "heisenberg", "all"];

/// Runs one suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, b: &Bounds) -> Option<Report> {
    let w = b.max_weight;
    let sw = b.step_weight.min(w);
    let checks = match name {
        "commute" => vec![a_commute(w, b.max_k), a_self_adjoint(w, b.max_k)],
        "eigen" => {
            vec![a_eigen(w, b.max_k), jack_p2(), jack_orthogonal(w), jack_unitriangular(w), jack_order_independent(w)]
        }
        "pieri" => vec![
            pieri_up(w),
            pieri_down(w),
            b_commutator(w, b.max_k),
            c_commutator(w, b.max_k),
            b_c_adjoint(w, b.max_k),
            b_matrix_elements(sw),
            c_matrix_elements(sw),
            step_worked_values(),
            step_up_closed_form(sw),
            step_down_closed_form(sw),
            step_down_operator(sw),
            step_up_operator(sw),
            step_up_isolating_point(sw),
        ],
        "hs" => vec![hs1(w), hs2(w)],
        "kernel" => vec![kernel_lemma(w)],
        "detid" => vec![
            detid_worked_example(),
            detid_random(b.n, b.m, b.seeds, b.seed),
            detid_series(b.series_n, b.ydeg),
            detid_term_counts(b.count_n),
            detid_cancellation(b.count_n),
        ],
        "stability" => vec![finite_eigen(w, b.n), finite_stability(w, b.n), finite_coefficients_commute(w, b.n)],
        "heisenberg" => vec![heisenberg(w, b.max_mode)],
        "all" => {
            let checks =
                SUITES[..SUITES.len() - 1].iter().flat_map(|s| run_suite(s, b).expect("known suite").checks).collect();
            return Some(Report { suite: "all".into(), checks });
        }
        _ => return None,
    };
    Some(Report { suite: name.to_string(), checks })
}
