//! Operators on Λ at N = ∞: the Sekiguchi–Debiard hierarchy `A^(k)`, the
//! step hierarchies `B^(k)` and `C^(k)`, their eigenvalues and matrix
//! elements on Jack functions, the collective-variable Hamiltonians and the
//! Heisenberg generators.
//!
//! The generating series are `A(u) = 1 + Σ_k A^(k)/(u)_k`,
//! `B(u) = Σ_k B^(k)/(u)_k` and `C(u) = Σ_k C^(k)/(u)_k`, where `(u)_k` is the
//! rising factorial. Operators act on [`SymFun`] values directly; matrices on
//! graded components are only assembled when a caller asks for them.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::alpha::{alpha, alpha_linear, alpha_rat_to_json, int, is_top_level_sum, signed_parts, AlphaRat};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::jack::{pieri_down_coeff, pieri_up_coeff};
use crate::partition::{c_of, enumerate, Partition};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::symfun::{adjoint_apply, mul, p_derivative, weight_table, Basis, SymFun};

/// Polynomial in the spectral variable u over Q(α).
pub type UPoly = Poly<AlphaRat>;
/// Rational function of u over Q(α), in reduced form with monic denominator.
pub type UPolyRat = RatFunc<AlphaRat>;

/// `u + c`.
pub fn u_plus(c: AlphaRat) -> UPoly {
    Poly::linear(int(1), c)
}

/// `(u + k)(u + k + 1)…(u + l − 1)`; one when `k ≥ l`.
pub fn shifted_factorial<F: Field>(k: usize, l: usize) -> Poly<F> {
    (k..l).fold(Poly::one(), |acc, j| acc.mul(&Poly::linear(F::one(), F::from_i64(j as i64))))
}

/// The Pochhammer symbol `(u)_l`.
pub fn pochhammer(l: usize) -> UPoly {
    shifted_factorial(0, l)
}

/// `(x)_k` for a field element `x`.
pub fn pochhammer_at(x: &AlphaRat, k: usize) -> AlphaRat {
    (0..k).fold(int(1), |acc, j| acc.mul(&x.add(&int(j as i64))))
}

/// Coefficients `e_0..e_l` of `Σ_k e_k/(u)_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct PochhammerExpansion {
    pub coeffs: Vec<AlphaRat>,
}

impl PochhammerExpansion {
    /// `e_k`, zero past the stored range.
    pub fn coeff(&self, k: usize) -> AlphaRat {
        self.coeffs.get(k).cloned().unwrap_or_else(AlphaRat::zero)
    }

    /// Reassembles `Σ_k e_k/(u)_k` as a rational function.
    pub fn to_ratfunc(&self) -> UPolyRat {
        let l = self.coeffs.len().saturating_sub(1);
        let mut num = Poly::zero();
        for (k, e) in self.coeffs.iter().enumerate() {
            num = num.add(&shifted_factorial(k, l).scale(e));
        }
        UPolyRat::new(num, pochhammer(l)).expect("nonzero denominator")
    }
}

/// Renders a polynomial in u with coefficients in Q(α), highest power first.
pub fn format_upoly(p: &UPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (negative, coeff) = signed_parts(c);
        let leading = out.is_empty();
        if !out.is_empty() {
            out.push_str(if negative { " - " } else { " + " });
        } else if negative {
            out.push('-');
        }
        let compound = is_top_level_sum(&coeff) || coeff.contains('/');
        let var = match k {
            0 => String::new(),
            1 => "u".into(),
            k => format!("u^{k}"),
        };
        match (k, coeff.as_str()) {
            (0, _) if !leading && is_top_level_sum(&coeff) => out.push_str(&format!("({coeff})")),
            (0, _) => out.push_str(&coeff),
            (_, "1") => out.push_str(&var),
            _ if compound => out.push_str(&format!("({coeff}){var}")),
            _ => out.push_str(&format!("{coeff}{var}")),
        }
    }
    out
}

/// Display wrapper for rational functions of u.
pub struct ShowU<'a>(pub &'a UPolyRat);

impl std::fmt::Display for ShowU<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let num = format_upoly(self.0.num());
        if self.0.den().is_one() {
            return f.write_str(&num);
        }
        let wrap = |s: String, single: bool| if single { s } else { format!("({s})") };
        let single = |p: &UPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
        write!(f, "{}/{}", wrap(num, single(self.0.num())), wrap(format_upoly(self.0.den()), single(self.0.den())))
    }
}

/// JSON form `{"num": [[k, c], ...], "den": [[k, c], ...]}` with `c` in the
/// Q(α) JSON form.
pub fn upoly_rat_to_json(v: &UPolyRat) -> serde_json::Value {
    let pairs = |p: &UPoly| {
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| serde_json::json!([k, alpha_rat_to_json(c)]))
            .collect::<Vec<_>>()
    };
    serde_json::json!({"num": pairs(v.num()), "den": pairs(v.den())})
}

/// Writes `v = Σ_{k≤l} e_k/(u)_k`.
///
/// Requires the denominator of `v` to divide `(u)_l` and the numerator over
/// `(u)_l` to have degree at most `l`.
pub fn expand_pochhammer(v: &UPolyRat, l: usize) -> Result<PochhammerExpansion> {
    let cofactor = pochhammer(l)
        .div_exact(v.den())
        .ok_or_else(|| Error::Precondition(format!("denominator does not divide (u)_{l}")))?;
    let mut rest = v.num().mul(&cofactor);
    if rest.degree().is_some_and(|d| d > l) {
        return Err(Error::Precondition(format!("numerator degree exceeds {l}")));
    }
    // (u+k)…(u+l−1) is monic of degree l−k, so peel off from the top.
    let mut coeffs = vec![AlphaRat::zero(); l + 1];
    for (k, slot) in coeffs.iter_mut().enumerate() {
        let e = rest.coeff(l - k);
        if !e.is_zero() {
            rest = rest.sub(&shifted_factorial(k, l).scale(&e));
        }
        *slot = e;
    }
    debug_assert!(rest.is_zero());
    Ok(PochhammerExpansion { coeffs })
}

/// Eigenvalue of `A(u)` on `P_λ`: `Π_{i≤ℓ(λ)} (u+i−1−αλ_i)/(u+i−1)`.
pub fn eigenvalue_a_series(lambda: &Partition) -> UPolyRat {
    let mut num = Poly::one();
    for (idx, &part) in lambda.parts().iter().enumerate() {
        num = num.mul(&u_plus(alpha_linear(-(part as i64), idx as i64)));
    }
    UPolyRat::new(num, pochhammer(lambda.len())).expect("nonzero denominator")
}

/// Eigenvalue of `A^(k)` on `P_λ`, read off the Pochhammer expansion of
/// [`eigenvalue_a_series`].
pub fn eigenvalue_a_k(lambda: &Partition, k: usize) -> AlphaRat {
    if k > lambda.len() {
        return AlphaRat::zero();
    }
    expand_pochhammer(&eigenvalue_a_series(lambda), lambda.len())
        .expect("eigenvalue denominators divide (u)_ℓ")
        .coeff(k)
}

/// `m_λ` in the power-sum basis, memoized.
pub fn monomial_in_p(lambda: &Partition) -> Arc<SymFun> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<SymFun>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().expect("monomial cache").get(lambda) {
        return f.clone();
    }
    let table = weight_table(lambda.weight());
    let row = &table.m_in_p[table.index[lambda]];
    let f = Arc::new(SymFun::from_terms(
        Basis::PowerSum,
        row.iter().map(|(mu, c)| (table.partitions[*mu].clone(), AlphaRat::constant(c.clone()))),
    ));
    cache.write().expect("monomial cache").entry(lambda.clone()).or_insert(f).clone()
}

/// `m_left · m_right^*(f)`.
fn monomial_sandwich(left: &Partition, right: &Partition, f: &SymFun) -> SymFun {
    let inner = adjoint_apply(&monomial_in_p(right), f);
    if inner.is_zero() {
        return inner;
    }
    mul(&monomial_in_p(left), &inner)
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `A^(k) f = (−1)^k Σ_{ℓ(λ)=k} c_λ m_λ m_λ^* f`.
///
/// Only `|λ| ≤ deg f` contribute since `m_λ^*` lowers degree by `|λ|`.
pub fn apply_a(k: usize, f: &SymFun) -> SymFun {
    let f = f.to_p();
    let mut out = SymFun::zero(Basis::PowerSum);
    let Some(deg) = f.degree() else {
        return out;
    };
    if k == 0 {
        return f;
    }
    for w in k as u32..=deg {
        for lam in enumerate(w, Some(k)) {
            let term = monomial_sandwich(&lam, &lam, &f);
            if !term.is_zero() {
                out = out.add(&term.scale(&c_of(&lam).mul(&int(sign(k)))));
            }
        }
    }
    out
}

/// `B^(k+1) f = (−1)^k Σ_{ℓ(μ)=k} c_{μ⊔1} m_{μ⊔1} m_μ^* f`; raises degree by one.
pub fn apply_b(k: usize, f: &SymFun) -> Result<SymFun> {
    if k == 0 {
        return Err(Error::Precondition("B^(k) is defined for k ≥ 1".into()));
    }
    let k = k - 1;
    let f = f.to_p();
    let mut out = SymFun::zero(Basis::PowerSum);
    let Some(deg) = f.degree() else {
        return Ok(out);
    };
    for w in k as u32..=deg {
        for mu in enumerate(w, Some(k)) {
            let up = mu.append_one();
            let term = monomial_sandwich(&up, &mu, &f);
            if !term.is_zero() {
                out = out.add(&term.scale(&c_of(&up).mul(&int(sign(k)))));
            }
        }
    }
    Ok(out)
}

/// `C^(k+1) f = (−1)^k Σ_{ℓ(μ)=k} c_{μ⊔1} m_μ m_{μ⊔1}^* f`; lowers degree by one.
pub fn apply_c(k: usize, f: &SymFun) -> Result<SymFun> {
    if k == 0 {
        return Err(Error::Precondition("C^(k) is defined for k ≥ 1".into()));
    }
    let k = k - 1;
    let f = f.to_p();
    let mut out = SymFun::zero(Basis::PowerSum);
    let Some(deg) = f.degree() else {
        return Ok(out);
    };
    for w in k as u32..deg {
        for mu in enumerate(w, Some(k)) {
            let up = mu.append_one();
            let term = monomial_sandwich(&mu, &up, &f);
            if !term.is_zero() {
                out = out.add(&term.scale(&c_of(&up).mul(&int(sign(k)))));
            }
        }
    }
    Ok(out)
}

/// `B(u₀) f = Σ_k B^(k) f / (u₀)_k`, a finite sum for fixed `f`.
pub fn b_series_at(f: &SymFun, u0: &AlphaRat) -> Result<SymFun> {
    let deg = f.degree().unwrap_or(0) as usize;
    let mut out = SymFun::zero(Basis::PowerSum);
    for k in 1..=deg + 1 {
        let term = apply_b(k, f)?;
        if !term.is_zero() {
            out = out.add(&term.scale(&pochhammer_at(u0, k).inv()?));
        }
    }
    Ok(out)
}

/// `C(u₀) f = Σ_k C^(k) f / (u₀)_k`.
pub fn c_series_at(f: &SymFun, u0: &AlphaRat) -> Result<SymFun> {
    let deg = f.degree().unwrap_or(0) as usize;
    let mut out = SymFun::zero(Basis::PowerSum);
    for k in 1..=deg {
        let term = apply_c(k, f)?;
        if !term.is_zero() {
            out = out.add(&term.scale(&pochhammer_at(u0, k).inv()?));
        }
    }
    Ok(out)
}

/// `1/(u+i−1) · Π_{j≠i, j≤ℓ(λ)} (u+j−1−αλ_j)/(u+j−1)`.
pub fn skip_product(lambda: &Partition, i: usize) -> UPolyRat {
    let mut num = Poly::one();
    for j in 1..=lambda.len() {
        if j != i {
            num = num.mul(&u_plus(alpha_linear(-(lambda.part(j) as i64), j as i64 - 1)));
        }
    }
    UPolyRat::new(num, pochhammer(lambda.len().max(i))).expect("nonzero denominator")
}

/// The skip product evaluated at `u = αλ_i − i + 1`, written as
/// `Π_{j≤ℓ} 1/(αλ_i − i + j) · Π_{j≠i} (αλ_i − αλ_j − i + j)`.
pub fn skip_product_at_step(lambda: &Partition, i: usize) -> Result<AlphaRat> {
    let li = lambda.part(i) as i64;
    let ii = i as i64;
    let mut acc = int(1);
    for j in 1..=lambda.len() {
        let jj = j as i64;
        acc = acc.div(&alpha_linear(li, -ii + jj))?;
        if j != i {
            acc = acc.mul(&alpha_linear(li - lambda.part(j) as i64, -ii + jj));
        }
    }
    Ok(acc)
}

/// Matrix element `B_λμ(u)` of `B(u)P_μ = Σ_λ B_λμ(u) P_λ`.
pub fn matrix_element_b(lambda: &Partition, mu: &Partition) -> Result<UPolyRat> {
    let i = mu.added_box_row(lambda).ok_or_else(|| Error::NotSingleStep(mu.to_string(), lambda.to_string()))?;
    Ok(skip_product(lambda, i).mul(&UPolyRat::constant(pieri_up_coeff(mu, i)?)))
}

/// Matrix element `C_μλ(u)` of `C(u)P_λ = Σ_μ C_μλ(u) P_μ`.
pub fn matrix_element_c(mu: &Partition, lambda: &Partition) -> Result<UPolyRat> {
    let i = mu.added_box_row(lambda).ok_or_else(|| Error::NotSingleStep(mu.to_string(), lambda.to_string()))?;
    let c = pieri_down_coeff(lambda, i)?.mul(&alpha());
    Ok(skip_product(lambda, i).mul(&UPolyRat::constant(c)))
}

/// The evaluation point `αλ_i − i + 1`.
pub fn step_point(lambda: &Partition, i: usize) -> AlphaRat {
    alpha_linear(lambda.part(i) as i64, 1 - i as i64)
}

/// The up step landing on `λ` through row `i`: returns `μ` (λ with that box
/// removed) and `B_λμ(αλ_i − i + 1)`, evaluated on the reduced matrix element.
pub fn step_up(lambda: &Partition, i: usize) -> Result<(Partition, AlphaRat)> {
    let mu = lambda.remove_box(i).ok_or_else(|| Error::InvalidIndex { partition: lambda.to_string(), index: i })?;
    let element = matrix_element_b(lambda, &mu)?;
    let coeff = element
        .eval(&step_point(lambda, i))
        .map_err(|_| Error::Pole(format!("B_λμ at u = αλ_{i} − {i} + 1 for λ = {lambda}")))?;
    Ok((mu, coeff))
}

/// The down step from `λ` through row `i`: returns `μ` and `C_μλ(αλ_i − i + 1)`.
pub fn step_down(lambda: &Partition, i: usize) -> Result<(Partition, AlphaRat)> {
    let mu = lambda.remove_box(i).ok_or_else(|| Error::InvalidIndex { partition: lambda.to_string(), index: i })?;
    let element = matrix_element_c(&mu, lambda)?;
    let coeff = element
        .eval(&step_point(lambda, i))
        .map_err(|_| Error::Pole(format!("C_μλ at u = αλ_{i} − {i} + 1 for λ = {lambda}")))?;
    Ok((mu, coeff))
}

/// `H^(1) = Σ_n α n p_n ∂/∂p_n`; multiplies each p_λ by α|λ|.
pub fn apply_h1(f: &SymFun) -> SymFun {
    let f = f.to_p();
    SymFun::from_terms(
        Basis::PowerSum,
        f.terms().iter().map(|(l, c)| (l.clone(), c.mul(&alpha()).mul(&int(l.weight() as i64)))),
    )
}

/// The second Hamiltonian in collective variables: splitting terms
/// `α(m+n) p_m p_n ∂_{m+n}`, joining terms `α² m n p_{m+n} ∂_m ∂_n` and the
/// diagonal `(α−1) Σ α n² p_n ∂_n`.
pub fn apply_h2(f: &SymFun) -> SymFun {
    let f = f.to_p();
    let mut out = SymFun::zero(Basis::PowerSum);
    let Some(deg) = f.degree() else {
        return out;
    };
    let a = alpha();
    let a2 = a.mul(&a);
    for m in 1..=deg {
        for n in 1..=deg - m.min(deg) {
            if m + n > deg {
                break;
            }
            let split = p_derivative(&f, m + n);
            if !split.is_zero() {
                let c = a.mul(&int((m + n) as i64));
                out = out.add(&mul(&SymFun::p(Partition::new(vec![m, n])), &split).scale(&c));
            }
            let join = p_derivative(&p_derivative(&f, m), n);
            if !join.is_zero() {
                let c = a2.mul(&int((m * n) as i64));
                out = out.add(&mul(&SymFun::p(Partition::new(vec![m + n])), &join).scale(&c));
            }
        }
    }
    let diag_scale = a.sub(&int(1)).mul(&a);
    for n in 1..=deg {
        let d = p_derivative(&f, n);
        if !d.is_zero() {
            let c = diag_scale.mul(&int((n * n) as i64));
            out = out.add(&mul(&SymFun::p(Partition::new(vec![n])), &d).scale(&c));
        }
    }
    out
}

/// Heisenberg generator: `a_n f = p_{−n} f` for `n < 0`, `α n ∂f/∂p_n` for `n > 0`.
pub fn heisenberg_a(n: i64, f: &SymFun) -> Result<SymFun> {
    match n {
        0 => Err(Error::Precondition("a_0 is not part of the Heisenberg action".into())),
        n if n < 0 => Ok(mul(&SymFun::p(Partition::new(vec![(-n) as u32])), f)),
        n => Ok(p_derivative(&f.to_p(), n as u32).scale(&alpha().mul(&int(n)))),
    }
}

/// Matrix of a degree-preserving operator on the p-basis of weight `n`;
/// column `j` holds the image of the `j`-th basis element.
pub fn graded_matrix(n: u32, op: impl Fn(&SymFun) -> SymFun) -> Vec<Vec<AlphaRat>> {
    let table = weight_table(n);
    let size = table.partitions.len();
    let mut mat = vec![vec![AlphaRat::zero(); size]; size];
    for (j, nu) in table.partitions.iter().enumerate() {
        let image = op(&SymFun::p(nu.clone())).to_p();
        for (lam, c) in image.terms() {
            let i = *table.index.get(lam).expect("operator must preserve degree");
            mat[i][j] = c.clone();
        }
    }
    mat
}

/// Product of square matrices over Q(α).
pub fn mat_mul(a: &[Vec<AlphaRat>], b: &[Vec<AlphaRat>]) -> Vec<Vec<AlphaRat>> {
    let n = a.len();
    let mut out = vec![vec![AlphaRat::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::alpha_pow;
    use crate::jack::jack_p;
    use crate::part;

    fn u() -> UPoly {
        u_plus(int(0))
    }

    fn ratio(num: UPoly, den: UPoly) -> UPolyRat {
        UPolyRat::new(num, den).unwrap()
    }

    #[test]
    fn a_examples() {
        let p1 = SymFun::p(part![1]);
        assert_eq!(apply_a(1, &p1), p1.scale(&alpha().neg()));
        assert!(apply_a(2, &p1).is_zero());
        let p11 = SymFun::p(part![1, 1]);
        let expected = p11.sub(&SymFun::p(part![2])).scale(&alpha_pow(2));
        assert_eq!(apply_a(2, &p11), expected);
    }

    #[test]
    fn eigenvalue_series_examples() {
        assert_eq!(eigenvalue_a_series(&Partition::empty()), UPolyRat::one());
        assert_eq!(eigenvalue_a_series(&part![1]), ratio(u_plus(alpha().neg()), u()));
        let num = u_plus(alpha().neg()).mul(&u_plus(alpha_linear(-1, 1)));
        assert_eq!(eigenvalue_a_series(&part![1, 1]), ratio(num, u().mul(&u_plus(int(1)))));
    }

    #[test]
    fn pochhammer_examples() {
        let e = expand_pochhammer(&eigenvalue_a_series(&part![1]), 1).unwrap();
        assert_eq!(e.coeffs, vec![int(1), alpha().neg()]);
        let e = expand_pochhammer(&eigenvalue_a_series(&part![1, 1]), 2).unwrap();
        assert_eq!(e.coeffs, vec![int(1), alpha().mul(&int(-2)), alpha().mul(&alpha_linear(1, 1))]);
        assert_eq!(e.to_ratfunc(), eigenvalue_a_series(&part![1, 1]));
        let e = expand_pochhammer(&UPolyRat::one(), 0).unwrap();
        assert_eq!(e.coeffs, vec![int(1)]);
        // 1/(u+5) does not fit over (u)_2.
        assert!(expand_pochhammer(&ratio(Poly::one(), u_plus(int(5))), 2).is_err());
        // u^3/(u)_2 has too high a numerator.
        assert!(expand_pochhammer(&ratio(u().pow(3), pochhammer(2)), 2).is_err());
    }

    #[test]
    fn u_display() {
        assert_eq!(ShowU(&eigenvalue_a_series(&part![1])).to_string(), "(u - α)/u");
        let b = matrix_element_b(&part![1, 1], &part![1]).unwrap();
        assert_eq!(ShowU(&b).to_string(), "((2α/(α+1))u - 2α^2/(α+1))/(u^2 + u)");
        assert_eq!(ShowU(&UPolyRat::one()).to_string(), "1");
    }

    #[test]
    fn eigenvalue_k_examples() {
        assert_eq!(eigenvalue_a_k(&part![1], 1), alpha().neg());
        assert!(eigenvalue_a_k(&part![1], 2).is_zero());
        assert_eq!(eigenvalue_a_k(&part![1, 1], 2), alpha().mul(&alpha_linear(1, 1)));
    }

    #[test]
    fn b_examples() {
        let p2 = SymFun::p(part![2]);
        assert_eq!(apply_b(1, &p2).unwrap(), SymFun::p(part![2, 1]));
        let b2 = apply_b(2, &SymFun::p(part![1])).unwrap();
        assert!(b2.same_element(&SymFun::m(part![1, 1]).scale(&alpha().mul(&int(-2)))));
        assert!(apply_b(2, &SymFun::one()).unwrap().is_zero());
        assert!(apply_b(0, &p2).is_err());
    }

    #[test]
    fn c_examples() {
        assert_eq!(apply_c(1, &SymFun::p(part![1])).unwrap(), SymFun::constant(alpha()));
        let c2 = apply_c(2, &SymFun::m(part![1, 1])).unwrap();
        assert_eq!(c2, SymFun::p(part![1]).scale(&alpha().mul(&alpha_linear(1, 1)).neg()));
        assert!(apply_c(2, &SymFun::p(part![1])).unwrap().is_zero());
    }

    #[test]
    fn matrix_element_examples() {
        let inv_u = ratio(Poly::one(), u());
        assert_eq!(matrix_element_b(&part![1], &Partition::empty()).unwrap(), inv_u);
        assert_eq!(matrix_element_b(&part![2], &part![1]).unwrap(), inv_u);
        let c = alpha().mul(&int(2)).div(&alpha_linear(1, 1)).unwrap();
        let expected = ratio(u_plus(alpha().neg()).scale(&c), u().mul(&u_plus(int(1))));
        assert_eq!(matrix_element_b(&part![1, 1], &part![1]).unwrap(), expected);
        assert!(matrix_element_b(&part![2], &Partition::empty()).is_err());

        assert_eq!(matrix_element_c(&Partition::empty(), &part![1]).unwrap(), ratio(Poly::constant(alpha()), u()));
        let expected = ratio(u_plus(alpha().neg()).scale(&alpha()), u().mul(&u_plus(int(1))));
        assert_eq!(matrix_element_c(&part![1], &part![1, 1]).unwrap(), expected);
        assert_eq!(matrix_element_c(&part![1], &part![2]).unwrap(), ratio(Poly::constant(c), u()));
        assert!(matrix_element_c(&part![1, 1], &part![1]).is_err());
    }

    #[test]
    fn step_examples() {
        assert_eq!(step_up(&part![1], 1).unwrap(), (Partition::empty(), int(1).div(&alpha()).unwrap()));
        assert_eq!(step_up(&part![2], 1).unwrap(), (part![1], int(1).div(&alpha().mul(&int(2))).unwrap()));
        // (2α/(α+1)) · (−1)/((α−1)α)
        let expected = int(-2).div(&alpha_linear(1, 1).mul(&alpha_linear(1, -1))).unwrap();
        assert_eq!(step_up(&part![1, 1], 2).unwrap(), (part![1], expected));

        assert_eq!(step_down(&part![1], 1).unwrap(), (Partition::empty(), int(1)));
        let expected = int(-1).div(&alpha_linear(1, -1)).unwrap();
        assert_eq!(step_down(&part![1, 1], 2).unwrap(), (part![1], expected));
        assert_eq!(step_down(&part![2], 1).unwrap(), (part![1], int(1).div(&alpha_linear(1, 1)).unwrap()));
        assert!(step_down(&part![1, 1], 1).is_err());
    }

    #[test]
    fn skip_product_at_step_matches_evaluation() {
        for lam in crate::partition::enumerate_up_to(5) {
            for (i, _) in lam.down_steps() {
                let direct = skip_product(&lam, i).eval(&step_point(&lam, i)).unwrap();
                assert_eq!(skip_product_at_step(&lam, i).unwrap(), direct);
            }
        }
    }

    #[test]
    fn hamiltonian_examples() {
        let p1 = SymFun::p(part![1]);
        assert_eq!(apply_h1(&p1), p1.scale(&alpha()));
        let p21 = SymFun::p(part![2, 1]);
        assert_eq!(apply_h1(&p21), p21.scale(&alpha().mul(&int(3))));
        assert!(apply_h1(&SymFun::one()).is_zero());

        let am1 = alpha().mul(&alpha_linear(1, -1));
        assert_eq!(apply_h2(&p1), p1.scale(&am1));
        let expected =
            SymFun::p(part![1, 1]).scale(&alpha().mul(&int(2))).add(&SymFun::p(part![2]).scale(&am1.mul(&int(4))));
        assert_eq!(apply_h2(&SymFun::p(part![2])), expected);
        assert!(apply_h2(&SymFun::one()).is_zero());
    }

    #[test]
    fn heisenberg_examples() {
        assert_eq!(heisenberg_a(-2, &SymFun::one()).unwrap(), SymFun::p(part![2]));
        assert_eq!(heisenberg_a(1, &SymFun::p(part![1])).unwrap(), SymFun::constant(alpha()));
        let f = SymFun::p(part![2]);
        let ab = heisenberg_a(1, &heisenberg_a(-1, &f).unwrap()).unwrap();
        let ba = heisenberg_a(-1, &heisenberg_a(1, &f).unwrap()).unwrap();
        assert_eq!(ab.sub(&ba), f.scale(&alpha()));
        assert!(heisenberg_a(0, &f).is_err());
    }

    #[test]
    fn jack_eigen_small() {
        for lam in crate::partition::enumerate_up_to(4) {
            let p = jack_p(&lam).to_p();
            for k in 1..=4 {
                let lhs = apply_a(k, &p);
                assert_eq!(lhs, p.scale(&eigenvalue_a_k(&lam, k)), "λ = {lam}, k = {k}");
            }
        }
    }
}
