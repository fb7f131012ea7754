//! Finitely many variables: sparse multivariate polynomials, the
//! Sekiguchi–Debiard determinant `S_N(u)`, its stability under `x_N = 0`, and
//! checks of the determinantal identity behind the infinite-variable theorem.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::alpha::{alpha_linear, int, AlphaRat};
use crate::error::{Error, Result};
use crate::field::{parse_rational, rational_to_string, Field, Rational};
use crate::ops::{pochhammer, shifted_factorial, u_plus, UPoly};
use crate::partition::{c_of, enumerate, Partition};
use crate::poly::Poly;
use crate::symfun::SymFun;

/// Sparse polynomial in `nvars` commuting variables over Q(α).
#[derive(Clone, PartialEq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, AlphaRat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: AlphaRat) -> Self {
        MultiPoly::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, int(1))
    }

    /// `c · x^exps`.
    pub fn monomial(nvars: usize, exps: Vec<u32>, c: AlphaRat) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut p = MultiPoly::zero(nvars);
        p.add_term(exps, &c);
        p
    }

    /// The variable `x_i`, 0-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MultiPoly::monomial(nvars, e, int(1))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, AlphaRat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &AlphaRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&int(-1))
    }

    pub fn scale(&self, c: &AlphaRat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v.mul(c))).collect() }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &ca.mul(cb));
            }
        }
        out
    }

    /// Keeps only the terms accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(&[u32]) -> bool) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Invariance under every transposition of adjacent variables among the first `n`.
    pub fn is_symmetric_in(&self, n: usize) -> bool {
        (1..n).all(|i| {
            let swapped = MultiPoly {
                nvars: self.nvars,
                terms: self
                    .terms
                    .iter()
                    .map(|(e, c)| {
                        let mut e = e.clone();
                        e.swap(i - 1, i);
                        (e, c.clone())
                    })
                    .collect(),
            };
            swapped == *self
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_symmetric_in(self.nvars)
    }

    /// Sets the last variable to zero and drops it.
    pub fn drop_last(&self) -> MultiPoly {
        assert!(self.nvars > 0, "no variable to drop");
        let n = self.nvars - 1;
        MultiPoly {
            nvars: n,
            terms: self.terms.iter().filter(|(e, _)| e[n] == 0).map(|(e, c)| (e[..n].to_vec(), c.clone())).collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    ///
    /// Uses lexicographic leading terms; for an exact multiple every
    /// intermediate leading term is divisible by the leading term of `d`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (lead_e, lead_c) = d.terms.iter().next_back()?;
        let lead_inv = lead_c.inv().ok()?;
        let mut rest = self.clone();
        let mut quotient = MultiPoly::zero(self.nvars);
        while let Some((e, c)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let t = MultiPoly::monomial(self.nvars, qe, c.mul(&lead_inv));
            rest = rest.sub(&t.mul(d));
            quotient = quotient.add(&t);
        }
        Some(quotient)
    }

    /// Value with every variable specialized to a rational.
    pub fn eval(&self, point: &[AlphaRat]) -> AlphaRat {
        let mut acc = AlphaRat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t = t.mul(&x.pow(k));
            }
            acc = acc.add(&t);
        }
        acc
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monomial = |e: &[u32]| {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                .collect();
            factors.join("·")
        };
        crate::alpha::write_signed_sum(f, self.terms.iter().rev().map(|(e, c)| (c, monomial(e))))
    }
}

/// Polynomial in the spectral variable u whose coefficients are
/// multivariate polynomials; index = power of u.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralPoly {
    nvars: usize,
    coeffs: Vec<MultiPoly>,
}

impl SpectralPoly {
    pub fn zero(nvars: usize) -> Self {
        SpectralPoly { nvars, coeffs: Vec::new() }
    }

    /// `p(u) · f`.
    pub fn product(p: &UPoly, f: &MultiPoly) -> Self {
        let mut out = SpectralPoly::zero(f.nvars());
        out.add_product(p, f);
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(MultiPoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// Coefficient of `u^k`.
    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(|| MultiPoly::zero(self.nvars))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `self += p(u) · f`.
    pub fn add_product(&mut self, p: &UPoly, f: &MultiPoly) {
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            while self.coeffs.len() <= k {
                self.coeffs.push(MultiPoly::zero(self.nvars));
            }
            self.coeffs[k] = self.coeffs[k].add(&f.scale(c));
        }
        self.trim();
    }

    pub fn add(&self, other: &SpectralPoly) -> SpectralPoly {
        let mut out = self.clone();
        for (k, c) in other.coeffs.iter().enumerate() {
            let mut mono = vec![AlphaRat::zero(); k];
            mono.push(int(1));
            out.add_product(&Poly::new(mono), c);
        }
        out
    }

    pub fn sub(&self, other: &SpectralPoly) -> SpectralPoly {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &AlphaRat) -> SpectralPoly {
        let mut out = SpectralPoly { nvars: self.nvars, coeffs: self.coeffs.iter().map(|m| m.scale(c)).collect() };
        out.trim();
        out
    }

    pub fn mul(&self, other: &SpectralPoly) -> SpectralPoly {
        let mut out = SpectralPoly::zero(self.nvars);
        for (a, fa) in self.coeffs.iter().enumerate() {
            for (b, fb) in other.coeffs.iter().enumerate() {
                let prod = fa.mul(fb);
                while out.coeffs.len() <= a + b {
                    out.coeffs.push(MultiPoly::zero(self.nvars));
                }
                out.coeffs[a + b] = out.coeffs[a + b].add(&prod);
            }
        }
        out.trim();
        out
    }

    /// `p(u) · self`.
    pub fn mul_upoly(&self, p: &UPoly) -> SpectralPoly {
        let mut out = SpectralPoly::zero(self.nvars);
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut shifted = vec![AlphaRat::zero(); k];
            shifted.extend(p.coeffs().iter().cloned());
            out.add_product(&Poly::new(shifted), c);
        }
        out
    }

    /// Applies `g` to every coefficient.
    pub fn map(&self, g: impl Fn(&MultiPoly) -> MultiPoly) -> SpectralPoly {
        let coeffs: Vec<MultiPoly> = self.coeffs.iter().map(g).collect();
        let nvars = coeffs.first().map_or(self.nvars, MultiPoly::nvars);
        let mut out = SpectralPoly { nvars, coeffs };
        out.trim();
        out
    }

    /// Coefficientwise exact division.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<SpectralPoly> {
        let coeffs = self.coeffs.iter().map(|c| c.div_exact(d)).collect::<Option<Vec<_>>>()?;
        Some(SpectralPoly { nvars: self.nvars, coeffs })
    }
}

/// All permutations of `0..n` with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut perms = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (p, sign)
        })
        .collect()
}

/// Distinct rearrangements of `exps`.
fn distinct_rearrangements(exps: &[u32]) -> Vec<Vec<u32>> {
    fn rec(counts: &mut BTreeMap<u32, usize>, left: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        let keys: Vec<u32> = counts.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect();
        for k in keys {
            *counts.get_mut(&k).expect("key") -= 1;
            prefix.push(k);
            rec(counts, left - 1, prefix, out);
            prefix.pop();
            *counts.get_mut(&k).expect("key") += 1;
        }
    }
    let mut counts = BTreeMap::new();
    for &e in exps {
        *counts.entry(e).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    rec(&mut counts, exps.len(), &mut Vec::new(), &mut out);
    out
}

/// `m_λ` in the `count` variables starting at index `offset` of an
/// `nvars`-variable ring; zero when `ℓ(λ) > count`.
pub fn monomial_poly_in(lambda: &Partition, nvars: usize, offset: usize, count: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    if lambda.len() > count {
        return out;
    }
    let mut padded = lambda.parts().to_vec();
    padded.resize(count, 0);
    for arrangement in distinct_rearrangements(&padded) {
        let mut e = vec![0; nvars];
        e[offset..offset + count].copy_from_slice(&arrangement);
        out.add_term(e, &int(1));
    }
    out
}

/// `m_λ(x_1, …, x_N)`.
pub fn monomial_poly(lambda: &Partition, n: usize) -> MultiPoly {
    monomial_poly_in(lambda, n, 0, n)
}

/// Image of `f` under `x_{N+1} = x_{N+2} = … = 0`.
pub fn restrict(f: &SymFun, n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    for (lam, c) in f.to_m().terms() {
        out = out.add(&monomial_poly(lam, n).scale(c));
    }
    out
}

/// The Vandermonde polynomial `Π_{i<j} (x_i − x_j)` in the first `n` of `nvars` variables.
pub fn vandermonde(n: usize, nvars: usize) -> MultiPoly {
    let mut out = MultiPoly::one(nvars);
    for i in 0..n {
        for j in i + 1..n {
            out = out.mul(&MultiPoly::var(nvars, i).sub(&MultiPoly::var(nvars, j)));
        }
    }
    out
}

/// `S_N(u) f` for `f` in `N` variables: the alternating sum over `σ` of
/// `Π_i x_i^{N−σ(i)}(u + σ(i) − 1 − α x_i ∂_i)`, divided exactly by the Vandermonde.
pub fn apply_s_n(f: &MultiPoly) -> Result<SpectralPoly> {
    let n = f.nvars();
    let perms = signed_permutations(n);
    let mut numerator = SpectralPoly::zero(n);
    for (e, c) in f.terms() {
        for (sigma, sign) in &perms {
            let mut factor: UPoly = Poly::constant(c.mul(&int(*sign)));
            let mut shifted = e.clone();
            for i in 0..n {
                let s = sigma[i] + 1;
                // x_i ∂_i acts on x^e as e_i.
                factor = factor.mul(&u_plus(alpha_linear(-(e[i] as i64), s as i64 - 1)));
                shifted[i] += (n - s) as u32;
            }
            numerator.add_product(&factor, &MultiPoly::monomial(n, shifted, int(1)));
        }
    }
    numerator
        .div_exact(&vandermonde(n, n))
        .ok_or_else(|| Error::InexactDivision("S_N numerator is not divisible by the Vandermonde".into()))
}

/// The operator coefficient of `u^k` in `S_N(u)`, applied to `f`.
pub fn s_n_coefficient(f: &MultiPoly, k: usize) -> Result<MultiPoly> {
    Ok(apply_s_n(f)?.coeff(k))
}

/// `Π_{i≤N} (u + i − 1 − αλ_i)`.
pub fn finite_eigenvalue(lambda: &Partition, n: usize) -> UPoly {
    (1..=n).fold(Poly::one(), |acc, i| acc.mul(&u_plus(alpha_linear(-(lambda.part(i) as i64), i as i64 - 1))))
}

/// Whether `S_N(u) P_λ = Π_{i≤N}(u + i − 1 − αλ_i) P_λ` in `N` variables.
pub fn check_eigen_s_n(lambda: &Partition, n: usize) -> Result<bool> {
    if lambda.len() > n {
        return Err(Error::Precondition(format!("ℓ({lambda}) exceeds N = {n}")));
    }
    let p = restrict(&crate::jack::jack_p(lambda).body, n);
    Ok(apply_s_n(&p)? == SpectralPoly::product(&finite_eigenvalue(lambda, n), &p))
}

/// Whether setting `x_N = 0` intertwines `A_N(u) = S_N(u)/(u)_N` with
/// `A_{N−1}(u)` on the restriction of `f`; compared after clearing the
/// Pochhammer denominators.
pub fn check_stability_a_n(f: &SymFun, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::Precondition("N must be at least 1".into()));
    }
    let g = restrict(f, n);
    let lhs = apply_s_n(&g)?.map(MultiPoly::drop_last).mul_upoly(&pochhammer(n - 1));
    let rhs = apply_s_n(&g.drop_last())?.mul_upoly(&pochhammer(n));
    Ok(lhs == rhs)
}

/// A numeric solution `Ψ(x, y) = x/(x − ψ(y))` of the three-term relation,
/// sampled at `x_1..x_N` and `ψ_1..ψ_M`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PsiRepr", into = "PsiRepr")]
pub struct PsiInstance {
    pub x: Vec<Rational>,
    pub psi: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct PsiRepr {
    x: Vec<String>,
    psi: Vec<String>,
}

impl TryFrom<PsiRepr> for PsiInstance {
    type Error = Error;

    fn try_from(r: PsiRepr) -> Result<Self> {
        let parse = |v: &[String]| {
            v.iter()
                .map(|s| parse_rational(s).ok_or_else(|| Error::Parse(format!("bad rational {s:?}"))))
                .collect::<Result<Vec<_>>>()
        };
        PsiInstance::new(parse(&r.x)?, parse(&r.psi)?)
    }
}

impl From<PsiInstance> for PsiRepr {
    fn from(p: PsiInstance) -> Self {
        PsiRepr { x: p.x.iter().map(rational_to_string).collect(), psi: p.psi.iter().map(rational_to_string).collect() }
    }
}

fn small_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-12i64..=12).into(), rng.gen_range(1i64..=6).into())
}

impl PsiInstance {
    /// Validates: at least one `x`, all `x` distinct and nonzero, and no `x_i = ψ_l`.
    pub fn new(x: Vec<Rational>, psi: Vec<Rational>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::Precondition("need at least one x value".into()));
        }
        for (i, a) in x.iter().enumerate() {
            if Field::is_zero(a) {
                return Err(Error::Precondition("x values must be nonzero".into()));
            }
            if x[..i].contains(a) {
                return Err(Error::Precondition("x values must be distinct".into()));
            }
            if psi.contains(a) {
                return Err(Error::Precondition("x values must avoid the ψ values".into()));
            }
        }
        Ok(PsiInstance { x, psi })
    }

    /// A random valid instance with small numerators and denominators.
    pub fn random(n: usize, m: usize, rng: &mut impl Rng) -> Self {
        loop {
            let x: Vec<Rational> = (0..n).map(|_| small_rational(rng)).collect();
            let psi: Vec<Rational> = (0..m).map(|_| small_rational(rng)).collect();
            if let Ok(inst) = PsiInstance::new(x, psi) {
                return inst;
            }
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn m(&self) -> usize {
        self.psi.len()
    }

    /// `Ψ_{il} = x_i/(x_i − ψ_l)`.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        self.x.iter().map(|xi| self.psi.iter().map(|p| xi / (xi - p)).collect()).collect()
    }

    /// `(x_i − x_j) Ψ_{il} Ψ_{jl} = x_i Ψ_{jl} − x_j Ψ_{il}` for all `i, j, l`.
    pub fn three_term_relation_holds(&self) -> bool {
        let psi = self.matrix();
        (0..self.n()).all(|i| {
            (0..self.n()).all(|j| {
                (0..self.m()).all(|l| {
                    let (xi, xj) = (&self.x[i], &self.x[j]);
                    (xi - xj) * &psi[i][l] * &psi[j][l] == xi * &psi[j][l] - xj * &psi[i][l]
                })
            })
        })
    }
}

type QPoly = Poly<Rational>;

fn qint(n: i64) -> Rational {
    Rational::from_i64(n)
}

/// Sums of `Π_r w[i_r][j_r]` over sets of `k` pairs with distinct rows and
/// distinct columns, for every `k`, grouped by `k`.
fn partial_matching_sums<T: Clone>(
    w: &[Vec<T>],
    ncols: usize,
    zero: T,
    one: T,
    add: impl Fn(&T, &T) -> T + Copy,
    mul: impl Fn(&T, &T) -> T + Copy,
) -> Vec<T> {
    struct Walk<'a, T, A, M> {
        w: &'a [Vec<T>],
        used: Vec<bool>,
        sums: Vec<T>,
        add: A,
        mul: M,
    }
    impl<T: Clone, A: Fn(&T, &T) -> T, M: Fn(&T, &T) -> T> Walk<'_, T, A, M> {
        fn rec(&mut self, row: usize, k: usize, prod: T) {
            if row == self.w.len() {
                self.sums[k] = (self.add)(&self.sums[k], &prod);
                return;
            }
            self.rec(row + 1, k, prod.clone());
            for col in 0..self.used.len() {
                if !self.used[col] {
                    self.used[col] = true;
                    let next = (self.mul)(&prod, &self.w[row][col]);
                    self.rec(row + 1, k + 1, next);
                    self.used[col] = false;
                }
            }
        }
    }
    let mut walk = Walk { w, used: vec![false; ncols], sums: vec![zero; w.len() + 1], add, mul };
    walk.rec(0, 0, one);
    walk.sums
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for i in start..n {
            prefix.push(i);
            rec(i + 1, n, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The same sums written as increasing row and column sets and a permutation
/// matching them.
fn symmetrized_sums(psi: &[Vec<Rational>], ncols: usize) -> Vec<Rational> {
    let n = psi.len();
    (0..=n)
        .map(|k| {
            let mut total = qint(0);
            for rows in subsets(n, k) {
                for cols in subsets(ncols, k) {
                    for (sigma, _) in signed_permutations(k) {
                        total += (0..k).fold(qint(1), |acc, r| acc * &psi[rows[r]][cols[sigma[r]]]);
                    }
                }
            }
            total
        })
        .collect()
}

fn vandermonde_value(x: &[Rational]) -> Rational {
    let mut acc = qint(1);
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            acc *= &x[i] - &x[j];
        }
    }
    acc
}

/// Both sides of the determinantal identity for a numeric instance, as
/// polynomials in `u`: the determinant of `x_i^{N−j}(u + j − 1 + Σ_l Ψ_{il})`
/// and `Δ Σ_k (u+k)…(u+N−1) Σ_{k pairs} Π Ψ`.
pub fn detid_sides(inst: &PsiInstance) -> (QPoly, QPoly) {
    let n = inst.n();
    let psi = inst.matrix();
    let row_sums: Vec<Rational> = psi.iter().map(|row| row.iter().fold(qint(0), |a, b| a + b)).collect();
    let mut lhs = QPoly::zero();
    for (sigma, sign) in signed_permutations(n) {
        let mut term = QPoly::constant(qint(sign));
        for i in 0..n {
            let j = sigma[i] + 1;
            let power = num_traits::pow(inst.x[i].clone(), n - j);
            let entry = QPoly::linear(power.clone(), power * (qint(j as i64 - 1) + &row_sums[i]));
            term = term.mul(&entry);
        }
        lhs = lhs.add(&term);
    }
    let layers = partial_matching_sums(&psi, inst.m(), qint(0), qint(1), |a, b| a + b, |a, b| a * b);
    let rhs = detid_rhs(&layers, &vandermonde_value(&inst.x));
    (lhs, rhs)
}

fn detid_rhs(layers: &[Rational], delta: &Rational) -> QPoly {
    let n = layers.len() - 1;
    let mut rhs = QPoly::zero();
    for (k, s) in layers.iter().enumerate() {
        rhs = rhs.add(&shifted_factorial::<Rational>(k, n).scale(s));
    }
    rhs.scale(delta)
}

/// The right side computed from the symmetrized form of the pair sum.
pub fn detid_rhs_symmetrized(inst: &PsiInstance) -> QPoly {
    detid_rhs(&symmetrized_sums(&inst.matrix(), inst.m()), &vandermonde_value(&inst.x))
}

/// Whether the determinantal identity holds exactly on `inst`, with the
/// pair-set and symmetrized forms of the right side agreeing.
pub fn detid_check(inst: &PsiInstance) -> bool {
    let (lhs, rhs) = detid_sides(inst);
    lhs == rhs && rhs == detid_rhs_symmetrized(inst)
}

/// Variables `x_1..x_N, y_1..y_N` of the series check.
fn series_ring(n: usize) -> usize {
    2 * n
}

fn y_degree(e: &[u32], n: usize) -> u32 {
    e[n..].iter().sum()
}

/// `Ψ(x_i, y_l) = x_i y_l/(x_i y_l − 1) = −Σ_{m≥1} (x_i y_l)^m`, truncated at `y`-degree `d`.
fn psi_series(n: usize, i: usize, l: usize, d: u32) -> MultiPoly {
    let nv = series_ring(n);
    let mut out = MultiPoly::zero(nv);
    for m in 1..=d {
        let mut e = vec![0; nv];
        e[i] = m;
        e[n + l] = m;
        out.add_term(e, &int(-1));
    }
    out
}

/// Determinant side of the series form: `det[x_i^{N−j}(u + j − 1 + Σ_l Ψ(x_i, y_l))]`
/// with `N` variables `y`, truncated at `y`-degree `d`.
pub fn detid_series_determinant(n: usize, d: u32) -> SpectralPoly {
    let nv = series_ring(n);
    let truncate = |p: &SpectralPoly| p.map(|c| c.filter(|e| y_degree(e, n) <= d));
    let row_sums: Vec<MultiPoly> =
        (0..n).map(|i| (0..n).fold(MultiPoly::zero(nv), |acc, l| acc.add(&psi_series(n, i, l, d)))).collect();
    let mut det = SpectralPoly::zero(nv);
    for (sigma, sign) in signed_permutations(n) {
        let mut term = SpectralPoly::product(&Poly::constant(int(sign)), &MultiPoly::one(nv));
        for i in 0..n {
            let j = sigma[i] + 1;
            let mut e = vec![0; nv];
            e[i] = (n - j) as u32;
            let power = MultiPoly::monomial(nv, e, int(1));
            let mut entry = SpectralPoly::product(&u_plus(int(j as i64 - 1)), &power);
            entry = entry.add(&SpectralPoly::product(&Poly::one(), &power.mul(&row_sums[i])));
            term = truncate(&term.mul(&entry));
        }
        det = det.add(&term);
    }
    det
}

/// `Σ_k (−1)^k (u+k)…(u+N−1) Σ_{ℓ(λ)=k, |λ|≤d} c_λ m_λ(x) m_λ(y)`.
pub fn detid_series_target(n: usize, d: u32) -> SpectralPoly {
    let nv = series_ring(n);
    let mut out = SpectralPoly::zero(nv);
    for k in 0..=n {
        let mut layer = MultiPoly::zero(nv);
        for w in 0..=d {
            for lam in enumerate(w, Some(k)) {
                let mx = monomial_poly_in(&lam, nv, 0, n);
                let my = monomial_poly_in(&lam, nv, n, n);
                layer = layer.add(&mx.mul(&my).scale(&c_of(&lam)));
            }
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        out.add_product(&shifted_factorial(k, n).scale(&int(sign)), &layer);
    }
    out
}

/// Series form of the identity with `Ψ(x, y) = xy/(xy − 1)`, `N` variables
/// `y`, truncated at `y`-degree `d`: the determinant equals `Δ` times the
/// pair-sum side, and after exact division by `Δ` equals
/// [`detid_series_target`].
pub fn detid_check_series(n: usize, d: u32) -> Result<bool> {
    if n == 0 || d == 0 {
        return Err(Error::Precondition("N and D must be at least 1".into()));
    }
    let nv = series_ring(n);
    let det = detid_series_determinant(n, d);
    let delta = vandermonde(n, nv);

    let psi: Vec<Vec<MultiPoly>> = (0..n).map(|i| (0..n).map(|l| psi_series(n, i, l, d)).collect()).collect();
    let layers = partial_matching_sums(&psi, n, MultiPoly::zero(nv), MultiPoly::one(nv), MultiPoly::add, |a, b| {
        a.mul(b).filter(|e| y_degree(e, n) <= d)
    });
    let mut pair_side = SpectralPoly::zero(nv);
    for (k, s) in layers.iter().enumerate() {
        pair_side.add_product(&shifted_factorial(k, n), &s.mul(&delta).filter(|e| y_degree(e, n) <= d));
    }
    let quotient = det
        .div_exact(&delta)
        .ok_or_else(|| Error::InexactDivision("series determinant is not divisible by Δ".into()))?;
    Ok(det == pair_side && quotient == detid_series_target(n, d))
}

/// Number of quadruples `(i, s, σ, r)` in the cancelling sum of the
/// induction step, for the fixed rows `i_1..i_k = 1..k`: `i ∉ {i_1..i_k}`,
/// `1 ≤ s ≤ k`, `σ ∈ S_N` with `σ(i) = 1`, and `2 ≤ r ≤ σ(i_s) − 1`.
pub fn detid_term_count(n: usize, k: usize) -> Result<u64> {
    Ok(cancelling_sum(n, k)?.0)
}

/// The closed form `(N−1)!(N−2)(N−k)k/2`.
pub fn term_count_closed_form(n: usize, k: usize) -> u64 {
    let fact: u64 = (1..n as u64).product();
    fact * (n as u64).saturating_sub(2) * (n - k) as u64 * k as u64 / 2
}

/// Enumerates the cancelling sum: returns the number of terms and the sum
/// itself, `Σ (−1)^σ x_i^{N−r} x_{i_s}^{N−σ(i_s)+r−1} Π_{j≠i,i_s} x_j^{N−σ(j)}`,
/// which vanishes identically.
pub fn cancelling_sum(n: usize, k: usize) -> Result<(u64, MultiPoly)> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::Precondition(format!("need N ≥ 2 and 1 ≤ k ≤ N − 1, got N = {n}, k = {k}")));
    }
    let perms = signed_permutations(n);
    let mut count = 0;
    let mut sum = MultiPoly::zero(n);
    for i in k..n {
        for is in 0..k {
            for (sigma, sign) in perms.iter().filter(|(p, _)| p[i] == 0) {
                let top = sigma[is] + 1;
                for r in 2..top {
                    count += 1;
                    let mut e: Vec<u32> = sigma.iter().map(|&s| (n - 1 - s) as u32).collect();
                    e[i] = (n - r) as u32;
                    e[is] = (n - top + r - 1) as u32;
                    sum.add_term(e, &int(*sign));
                }
            }
        }
    }
    Ok((count, sum))
}
