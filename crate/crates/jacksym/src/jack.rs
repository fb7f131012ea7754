//! Jack symmetric functions `P_λ` and the Pieri coefficients for
//! multiplication by `p_1` and for `∂/∂p_1`.
//!
//! `P_λ` is the unique element `m_λ + Σ_{μ<λ} c_μ m_μ` orthogonal to every
//! `P_μ` with `μ < λ` under the Jack form. It is computed by Gram–Schmidt on
//! the monomial basis of one weight, processed along a linear extension of
//! dominance. A whole weight is computed at once and memoized.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::alpha::{alpha, alpha_linear, alpha_pow, int, AlphaRat};
use crate::error::{Error, Result};
use crate::partition::{enumerate, z_of, Partition};
use crate::symfun::{weight_table, Basis, SymFun};

/// `P_λ` expanded in the monomial basis.
#[derive(Clone, Debug, PartialEq)]
pub struct JackExpansion {
    pub label: Partition,
    pub body: SymFun,
}

impl JackExpansion {
    pub fn to_p(&self) -> SymFun {
        self.body.to_p()
    }
}

/// Gram matrix `⟨m_a, m_b⟩` of the monomial basis of weight `n`, indexed as in
/// the weight table.
#[allow(clippy::needless_range_loop)]
pub fn monomial_gram(n: u32) -> Vec<Vec<AlphaRat>> {
    let table = weight_table(n);
    let size = table.partitions.len();
    let norms: Vec<AlphaRat> = table.partitions.iter().map(|nu| alpha_pow(nu.len() as u32).mul(&z_of(nu))).collect();
    let mut gram = vec![vec![AlphaRat::zero(); size]; size];
    for a in 0..size {
        for b in a..size {
            let mut acc = AlphaRat::zero();
            let row_b: HashMap<usize, &_> = table.m_in_p[b].iter().map(|(k, c)| (*k, c)).collect();
            for (nu, ca) in &table.m_in_p[a] {
                if let Some(cb) = row_b.get(nu) {
                    acc = acc.add(&norms[*nu].scale(&(ca * *cb)));
                }
            }
            gram[b][a] = acc.clone();
            gram[a][b] = acc;
        }
    }
    gram
}

/// Partitions of `n` in increasing lexicographic order: a linear extension
/// of dominance, smallest first.
pub fn lex_extension(n: u32) -> Vec<Partition> {
    let mut v = enumerate(n, None);
    v.reverse();
    v
}

/// A second linear extension of dominance: decreasing lexicographic order of
/// the conjugate partitions. Conjugation reverses dominance.
pub fn conjugate_extension(n: u32) -> Vec<Partition> {
    let mut v = enumerate(n, None);
    v.sort_by(|a, b| b.conjugate().parts().cmp(a.conjugate().parts()));
    v
}

/// Gram–Schmidt on the monomial basis of one weight along `order`, which must
/// list every partition of that weight, smallest first.
pub fn gram_schmidt(order: &[Partition]) -> Vec<JackExpansion> {
    let Some(first) = order.first() else {
        return Vec::new();
    };
    let n = first.weight();
    let table = weight_table(n);
    let size = table.partitions.len();
    assert_eq!(order.len(), size, "order must cover the whole weight component");
    let gram = monomial_gram(n);

    // For each processed P_s keep its coordinates, G·P_s and ⟨P_s, P_s⟩.
    let mut done: Vec<(Vec<AlphaRat>, Vec<AlphaRat>, AlphaRat)> = Vec::with_capacity(size);
    let mut out = Vec::with_capacity(size);
    for lam in order {
        let l = table.index[lam];
        let mut coords = vec![AlphaRat::zero(); size];
        coords[l] = int(1);
        let mut gp: Vec<AlphaRat> = (0..size).map(|k| gram[k][l].clone()).collect();
        for (ps, gps, norm) in &done {
            let proj = gps[l].div(norm).expect("Jack norms are nonzero");
            if proj.is_zero() {
                continue;
            }
            for k in 0..size {
                if !ps[k].is_zero() {
                    coords[k] = coords[k].sub(&proj.mul(&ps[k]));
                }
                if !gps[k].is_zero() {
                    gp[k] = gp[k].sub(&proj.mul(&gps[k]));
                }
            }
        }
        let norm = gp[l].clone();
        let body = SymFun::from_terms(
            Basis::Monomial,
            coords.iter().enumerate().map(|(k, c)| (table.partitions[k].clone(), c.clone())),
        );
        out.push(JackExpansion { label: lam.clone(), body });
        done.push((coords, gp, norm));
    }
    out
}

type WeightCache = RwLock<HashMap<u32, Arc<HashMap<Partition, JackExpansion>>>>;

/// All `P_λ` of weight `n`, keyed by label; computed once per weight.
pub fn jack_weight(n: u32) -> Arc<HashMap<Partition, JackExpansion>> {
    static CACHE: OnceLock<WeightCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(w) = cache.read().expect("jack cache").get(&n) {
        return w.clone();
    }
    let computed: HashMap<Partition, JackExpansion> =
        gram_schmidt(&lex_extension(n)).into_iter().map(|j| (j.label.clone(), j)).collect();
    cache.write().expect("jack cache").entry(n).or_insert_with(|| Arc::new(computed)).clone()
}

/// The Jack symmetric function `P_λ` in the monomial basis.
pub fn jack_p(lambda: &Partition) -> JackExpansion {
    jack_weight(lambda.weight())[lambda].clone()
}

/// ⟨P_λ, P_λ⟩.
pub fn jack_norm(lambda: &Partition) -> AlphaRat {
    let p = jack_p(lambda);
    crate::symfun::inner_product(&p.body, &p.body)
}

/// Expands `f` (any basis, arbitrary degree) in the Jack basis by
/// triangular elimination from the top of each weight.
pub fn to_jack_basis(f: &SymFun) -> Vec<(Partition, AlphaRat)> {
    let mut rest = f.to_m();
    let mut out = Vec::new();
    while let Some((lam, c)) = rest.terms().iter().next_back().map(|(l, c)| (l.clone(), c.clone())) {
        // The largest remaining partition in graded lex order is maximal for
        // dominance inside its weight, so its coefficient is the P-coefficient.
        let p = jack_p(&lam);
        rest = rest.sub(&p.body.scale(&c));
        out.push((lam, c));
    }
    out
}

/// Coefficient of `P_λ` in `p_1 P_μ`, where `λ` adds a box to row `i` of `μ`.
pub fn pieri_up_coeff(mu: &Partition, i: usize) -> Result<AlphaRat> {
    let lam = mu.add_box(i).ok_or_else(|| Error::InvalidIndex { partition: mu.to_string(), index: i })?;
    let li = lam.part(i) as i64;
    let mut acc = int(1);
    for j in 1..i {
        let lj = lam.part(j) as i64;
        let (i, j) = (i as i64, j as i64);
        let num1 = alpha_linear(li - lj, -i + j - 1);
        let den1 = alpha_linear(li - lj - 1, -i + j);
        let num2 = alpha_linear(li - lj - 1, -i + j + 1);
        let den2 = alpha_linear(li - lj, -i + j);
        acc = acc.mul(&num1).mul(&num2).div(&den1.mul(&den2))?;
    }
    Ok(acc)
}

/// Coefficient of `P_μ` in `∂P_λ/∂p_1`, where `μ` removes a box from row `i` of `λ`.
pub fn pieri_down_coeff(lambda: &Partition, i: usize) -> Result<AlphaRat> {
    lambda.remove_box(i).ok_or_else(|| Error::InvalidIndex { partition: lambda.to_string(), index: i })?;
    let conj = lambda.conjugate();
    let li = lambda.part(i) as i64;
    let ii = i as i64;
    let mut acc = int(1);
    for j in 1..li {
        let cj = conj.part(j as usize) as i64;
        let num1 = alpha_linear(li - j - 1, cj - ii + 1);
        let den1 = alpha_linear(li - j, cj - ii);
        let num2 = alpha_linear(li - j + 1, cj - ii);
        let den2 = alpha_linear(li - j, cj - ii + 1);
        acc = acc.mul(&num1).mul(&num2).div(&den1.mul(&den2))?;
    }
    Ok(acc)
}

/// `p_1 P_μ` expanded through the Pieri coefficients.
pub fn pieri_up_expansion(mu: &Partition) -> Result<Vec<(Partition, AlphaRat)>> {
    mu.up_steps().into_iter().map(|(i, lam)| Ok((lam, pieri_up_coeff(mu, i)?))).collect()
}

/// `∂P_λ/∂p_1` expanded through the Pieri coefficients.
pub fn pieri_down_expansion(lambda: &Partition) -> Result<Vec<(Partition, AlphaRat)>> {
    lambda.down_steps().into_iter().map(|(i, mu)| Ok((mu, pieri_down_coeff(lambda, i)?))).collect()
}

/// Σ c_λ P_λ as a symmetric function in the monomial basis.
pub fn from_jack_basis(terms: &[(Partition, AlphaRat)]) -> SymFun {
    let mut out = SymFun::zero(Basis::Monomial);
    for (lam, c) in terms {
        out = out.add(&jack_p(lam).body.scale(c));
    }
    out
}

/// `α^{-1} p_1^*`, i.e. `∂/∂p_1`, written through the adjoint for symmetry
/// with the up direction.
pub fn d_dp1(f: &SymFun) -> SymFun {
    let star = crate::symfun::adjoint_apply(&SymFun::p(Partition::new(vec![1])), f);
    star.scale(&int(1).div(&alpha()).expect("α ≠ 0"))
}
