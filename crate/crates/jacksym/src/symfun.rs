//! The algebra Λ of symmetric functions over Q(α).
//!
//! Elements are sparse expansions in either the monomial basis `m_λ` or the
//! power-sum basis `p_λ`. Arithmetic happens in the power-sum basis, where
//! multiplication is concatenation of partitions and the adjoint of
//! multiplication by `p_n` is the derivation `α n ∂/∂p_n`. The monomial basis
//! is reached through per-weight transition tables built from refinement
//! counts and cached for the lifetime of the process.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::alpha::{alpha, alpha_pow, int, AlphaRat};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::partition::{enumerate, refinement_count, z_of, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "p")]
    PowerSum,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
        }
    }
}

/// Transition data between the `m` and `p` bases in one weight.
#[derive(Debug)]
pub struct WeightTable {
    /// Partitions of the weight in reverse lexicographic order.
    pub partitions: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `p_μ = Σ_λ R[λ][μ] m_λ`.
    pub refinement: Vec<Vec<u64>>,
    /// `m_λ = Σ_μ m_in_p[λ][μ] p_μ` (sparse rows).
    pub m_in_p: Vec<Vec<(usize, Rational)>>,
}

impl WeightTable {
    fn build(n: u32) -> WeightTable {
        let partitions = enumerate(n, None);
        let index: HashMap<Partition, usize> = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let size = partitions.len();
        let refinement: Vec<Vec<u64>> =
            partitions.iter().map(|lam| partitions.iter().map(|mu| refinement_count(lam, mu)).collect()).collect();
        // R[ν][λ] ≠ 0 forces λ ≤ ν in dominance, so ν precedes λ in reverse
        // lexicographic order and back-substitution runs top-down.
        let mut m_in_p: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(size);
        for l in 0..size {
            let mut row = vec![Rational::from_i64(0); size];
            row[l] = Rational::from_i64(1);
            for (nu, earlier) in m_in_p.iter().enumerate() {
                let r = refinement[nu][l];
                if r == 0 {
                    continue;
                }
                let r = Rational::from_integer(BigInt::from(r));
                for (mu, c) in earlier {
                    row[*mu] = row[*mu].sub(&c.mul(&r));
                }
            }
            let diag = Rational::from_integer(BigInt::from(refinement[l][l]));
            let inv = diag.inv().expect("nonzero diagonal");
            m_in_p.push(
                row.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !Field::is_zero(c))
                    .map(|(mu, c)| (mu, c.mul(&inv)))
                    .collect(),
            );
        }
        WeightTable { partitions, index, refinement, m_in_p }
    }
}

/// The shared transition table for weight `n`; built once, then reused.
pub fn weight_table(n: u32) -> Arc<WeightTable> {
    static TABLES: OnceLock<RwLock<HashMap<u32, Arc<WeightTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = tables.read().expect("table lock").get(&n) {
        return t.clone();
    }
    let built = Arc::new(WeightTable::build(n));
    tables.write().expect("table lock").entry(n).or_insert(built).clone()
}

/// A symmetric function: a finite sparse expansion in one of the two bases.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFun {
    basis: Basis,
    terms: BTreeMap<Partition, AlphaRat>,
}

impl SymFun {
    pub fn zero(basis: Basis) -> Self {
        SymFun { basis, terms: BTreeMap::new() }
    }

    pub fn constant(c: AlphaRat) -> Self {
        SymFun::zero(Basis::PowerSum).with_term(Partition::empty(), c)
    }

    pub fn one() -> Self {
        SymFun::constant(int(1))
    }

    /// The power sum `p_λ`.
    pub fn p(lambda: Partition) -> Self {
        SymFun::zero(Basis::PowerSum).with_term(lambda, int(1))
    }

    /// The monomial function `m_λ`.
    pub fn m(lambda: Partition) -> Self {
        SymFun::zero(Basis::Monomial).with_term(lambda, int(1))
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, AlphaRat)>) -> Self {
        let mut f = SymFun::zero(basis);
        for (l, c) in terms {
            f.add_term(l, &c);
        }
        f
    }

    fn with_term(mut self, l: Partition, c: AlphaRat) -> Self {
        self.add_term(l, &c);
        self
    }

    /// Adds `c · b_λ`, dropping the entry if it cancels.
    pub fn add_term(&mut self, lambda: Partition, c: &AlphaRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, AlphaRat> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> AlphaRat {
        self.terms.get(lambda).cloned().unwrap_or_else(AlphaRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// max |λ| over the support; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::weight).max()
    }

    /// The same element expanded in `basis`.
    pub fn in_basis(&self, basis: Basis) -> SymFun {
        match (self.basis, basis) {
            (a, b) if a == b => self.clone(),
            (Basis::PowerSum, Basis::Monomial) => p_to_m(self),
            _ => m_to_p(self),
        }
    }

    pub fn to_p(&self) -> SymFun {
        self.in_basis(Basis::PowerSum)
    }

    pub fn to_m(&self) -> SymFun {
        self.in_basis(Basis::Monomial)
    }

    pub fn add(&self, other: &SymFun) -> SymFun {
        let other = other.in_basis(self.basis);
        let mut out = self.clone();
        for (l, c) in other.terms {
            out.add_term(l, &c);
        }
        out
    }

    pub fn sub(&self, other: &SymFun) -> SymFun {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFun {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, c: &AlphaRat) -> SymFun {
        if c.is_zero() {
            return SymFun::zero(self.basis);
        }
        self.map_coeffs(|x| x.mul(c))
    }

    fn map_coeffs(&self, f: impl Fn(&AlphaRat) -> AlphaRat) -> SymFun {
        SymFun::from_terms(self.basis, self.terms.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    /// Equality as elements of Λ, regardless of the stored basis.
    pub fn same_element(&self, other: &SymFun) -> bool {
        self.to_p() == other.to_p()
    }

    /// Degree-`n` homogeneous component.
    pub fn component(&self, n: u32) -> SymFun {
        SymFun::from_terms(
            self.basis,
            self.terms.iter().filter(|(l, _)| l.weight() == n).map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    /// Terms in reverse lexicographic (descending graded) order.
    pub fn sorted_terms(&self) -> impl Iterator<Item = (&Partition, &AlphaRat)> {
        self.terms.iter().rev()
    }
}

/// p-basis expansion rewritten in the m-basis via `p_μ = Σ_λ R_λμ m_λ`.
pub fn p_to_m(f: &SymFun) -> SymFun {
    assert_eq!(f.basis, Basis::PowerSum, "p_to_m expects a p-basis input");
    let mut out = SymFun::zero(Basis::Monomial);
    for (mu, c) in &f.terms {
        let table = weight_table(mu.weight());
        let j = table.index[mu];
        for (i, lam) in table.partitions.iter().enumerate() {
            let r = table.refinement[i][j];
            if r != 0 {
                out.add_term(lam.clone(), &c.scale(&Rational::from_integer(BigInt::from(r))));
            }
        }
    }
    out
}

/// m-basis expansion rewritten in the p-basis using the inverted transition.
pub fn m_to_p(f: &SymFun) -> SymFun {
    assert_eq!(f.basis, Basis::Monomial, "m_to_p expects an m-basis input");
    let mut out = SymFun::zero(Basis::PowerSum);
    for (lam, c) in &f.terms {
        let table = weight_table(lam.weight());
        let i = table.index[lam];
        for (mu, t) in &table.m_in_p[i] {
            out.add_term(table.partitions[*mu].clone(), &c.scale(t));
        }
    }
    out
}

/// Product in Λ, returned in the p-basis.
pub fn mul(f: &SymFun, g: &SymFun) -> SymFun {
    let (f, g) = (f.to_p(), g.to_p());
    let mut out = SymFun::zero(Basis::PowerSum);
    for (a, x) in &f.terms {
        for (b, y) in &g.terms {
            out.add_term(a.union(b), &x.mul(y));
        }
    }
    out
}

/// ⟨p_λ, p_λ⟩ = α^{ℓ(λ)} z_λ.
pub fn p_norm(lambda: &Partition) -> AlphaRat {
    alpha_pow(lambda.len() as u32).mul(&z_of(lambda))
}

/// The Jack bilinear form ⟨p_λ, p_μ⟩ = α^{ℓ(λ)} z_λ δ_{λμ}, extended bilinearly.
pub fn inner_product(f: &SymFun, g: &SymFun) -> AlphaRat {
    let (f, g) = (f.to_p(), g.to_p());
    let (small, large) = if f.terms.len() <= g.terms.len() { (&f, &g) } else { (&g, &f) };
    let mut acc = AlphaRat::zero();
    for (l, c) in &small.terms {
        if let Some(d) = large.terms.get(l) {
            acc = acc.add(&c.mul(d).mul(&p_norm(l)));
        }
    }
    acc
}

/// ∂/∂p_n on a p-basis expansion.
pub fn p_derivative(g: &SymFun, n: u32) -> SymFun {
    debug_assert_eq!(g.basis, Basis::PowerSum);
    let mut out = SymFun::zero(Basis::PowerSum);
    for (l, c) in &g.terms {
        let count = l.parts().iter().filter(|&&p| p == n).count();
        if count == 0 {
            continue;
        }
        let mut parts = l.parts().to_vec();
        let pos = parts.iter().position(|&p| p == n).expect("present");
        parts.remove(pos);
        out.add_term(Partition::new(parts), &c.mul(&int(count as i64)));
    }
    out
}

/// p_λ* = Π_i (α λ_i ∂/∂p_{λ_i}) applied to `g` (p-basis).
pub fn p_star(lambda: &Partition, g: &SymFun) -> SymFun {
    let mut cur = g.to_p();
    for &n in lambda.parts() {
        if cur.is_zero() {
            break;
        }
        cur = p_derivative(&cur, n).scale(&alpha().mul(&int(n as i64)));
    }
    cur
}

/// f*(g): the adjoint of multiplication by `f`, applied to `g`.
pub fn adjoint_apply(f: &SymFun, g: &SymFun) -> SymFun {
    let f = f.to_p();
    let g = g.to_p();
    let gdeg = g.degree().unwrap_or(0);
    let mut out = SymFun::zero(Basis::PowerSum);
    for (l, c) in &f.terms {
        if l.weight() > gdeg {
            continue;
        }
        for (mu, d) in p_star(l, &g).terms {
            out.add_term(mu, &d.mul(c));
        }
    }
    out
}

/// A formal series in `p_λ(x) p_μ(y)`, stored sparsely.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct KernelSeries {
    pub terms: BTreeMap<(Partition, Partition), AlphaRat>,
}

impl KernelSeries {
    fn add_term(&mut self, key: (Partition, Partition), c: &AlphaRat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(AlphaRat::zero);
        *slot = slot.add(c);
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Product truncated to x-degree at most `d`.
    fn mul_truncated(&self, other: &KernelSeries, d: u32) -> KernelSeries {
        let mut out = KernelSeries::default();
        for ((a, b), x) in &self.terms {
            for ((c, e), y) in &other.terms {
                if a.weight() + c.weight() <= d {
                    out.add_term((a.union(c), b.union(e)), &x.mul(y));
                }
            }
        }
        out
    }

    fn truncate(&self, d: u32) -> KernelSeries {
        KernelSeries {
            terms: self
                .terms
                .iter()
                .filter(|((a, _), _)| a.weight() <= d)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

/// exp(sign · Σ_{n≤d} p_n(x) p_n(y) / (α n)) truncated to degree `d`.
fn kernel_exponential(d: u32, sign: i64) -> KernelSeries {
    let mut s = KernelSeries::default();
    for n in 1..=d {
        let c = int(sign).div(&alpha().mul(&int(n as i64))).expect("nonzero");
        s.add_term((Partition::new(vec![n]), Partition::new(vec![n])), &c);
    }
    let mut result = KernelSeries::default();
    result.add_term((Partition::empty(), Partition::empty()), &int(1));
    // Σ_j S^j / j!; S has x-degree ≥ 1 so j ≤ d suffices.
    let mut power = result.clone();
    let mut factorial = 1i64;
    for j in 1..=d {
        power = power.mul_truncated(&s, d);
        factorial *= j as i64;
        let inv_fact = int(1).div(&int(factorial)).expect("nonzero");
        for (k, v) in &power.terms {
            result.add_term(k.clone(), &v.mul(&inv_fact));
        }
    }
    result
}

/// The reproducing kernel Π = exp(Σ_n p_n(x)p_n(y)/(αn)) truncated at degree
/// `d` in each set of variables.
pub fn kernel_truncated(d: u32) -> BTreeMap<(Partition, Partition), AlphaRat> {
    kernel_exponential(d, 1).terms
}

/// Checks f*(Π)/Π = f(y) on the truncation of Π at degree `d`.
///
/// `f*` acts on the x side; the quotient is formed by multiplying with the
/// truncated inverse series exp(−Σ p_n(x)p_n(y)/(αn)).
pub fn kernel_lemma_check(f: &SymFun, d: u32) -> Result<bool> {
    let f = f.to_p();
    let fdeg = f.degree().unwrap_or(0);
    if fdeg > d {
        return Err(Error::Precondition(format!("deg f = {fdeg} exceeds truncation {d}")));
    }
    let pi = kernel_exponential(d, 1);
    let mut applied = KernelSeries::default();
    for ((x, y), c) in &pi.terms {
        let px = SymFun::p(x.clone());
        for (lam, a) in &f.terms {
            if lam.weight() > x.weight() {
                continue;
            }
            for (rest, b) in p_star(lam, &px).terms {
                applied.add_term((rest, y.clone()), &b.mul(a).mul(c));
            }
        }
    }
    let keep = d - fdeg;
    let quotient = applied.truncate(keep).mul_truncated(&kernel_exponential(keep, -1), keep);
    let mut expected = KernelSeries::default();
    for (lam, a) in &f.terms {
        expected.add_term((Partition::empty(), lam.clone()), a);
    }
    Ok(quotient == expected)
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    #[serde(with = "crate::alpha::serde_alpha")]
    coeff: AlphaRat,
}

#[derive(Serialize, Deserialize)]
struct SymFunRepr {
    basis: Basis,
    terms: Vec<TermRepr>,
}

impl Serialize for SymFun {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFunRepr {
            basis: self.basis,
            terms: self.sorted_terms().map(|(l, c)| TermRepr { partition: l.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFun {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SymFunRepr::deserialize(d)?;
        Ok(SymFun::from_terms(repr.basis, repr.terms.into_iter().map(|t| (t.partition, t.coeff))))
    }
}

/// Text rendering, e.g. `m[2] + 2/(α+1)·m[1,1]`.
impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.basis.symbol();
        let terms =
            self.sorted_terms().map(|(l, c)| (c, if l.is_empty() { String::new() } else { format!("{b}[{l}]") }));
        crate::alpha::write_signed_sum(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::{alpha_linear, frac};
    use crate::part;

    #[test]
    fn p_to_m_examples() {
        assert_eq!(p_to_m(&SymFun::p(part![2])), SymFun::m(part![2]));
        let expected = SymFun::from_terms(Basis::Monomial, [(part![2], int(1)), (part![1, 1], int(2))]);
        assert_eq!(p_to_m(&SymFun::p(part![1, 1])), expected);
        assert_eq!(p_to_m(&SymFun::one()), SymFun::from_terms(Basis::Monomial, [(Partition::empty(), int(1))]));
    }

    #[test]
    fn m_to_p_examples() {
        assert_eq!(m_to_p(&SymFun::m(part![2])), SymFun::p(part![2]));
        let expected = SymFun::from_terms(Basis::PowerSum, [(part![1, 1], frac(1, 2)), (part![2], frac(-1, 2))]);
        assert_eq!(m_to_p(&SymFun::m(part![1, 1])), expected);
        assert_eq!(m_to_p(&SymFun::m(Partition::empty())), SymFun::one());
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(mul(&SymFun::p(part![2]), &SymFun::p(part![1])), SymFun::p(part![2, 1]));
        let sq = mul(&SymFun::m(part![1]), &SymFun::m(part![1])).to_m();
        assert_eq!(sq, SymFun::from_terms(Basis::Monomial, [(part![2], int(1)), (part![1, 1], int(2))]));
        let f = SymFun::p(part![3, 1]).scale(&alpha_linear(1, 2));
        assert_eq!(mul(&f, &SymFun::one()), f);
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(inner_product(&SymFun::p(part![1]), &SymFun::p(part![1])), alpha());
        assert!(inner_product(&SymFun::p(part![2]), &SymFun::p(part![1, 1])).is_zero());
        assert_eq!(inner_product(&SymFun::p(part![1, 1]), &SymFun::p(part![1, 1])), alpha_pow(2).mul(&int(2)));
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(adjoint_apply(&SymFun::p(part![1]), &SymFun::p(part![1])), SymFun::constant(alpha()));
        assert_eq!(
            adjoint_apply(&SymFun::p(part![2]), &SymFun::p(part![2, 1])),
            SymFun::p(part![1]).scale(&alpha().mul(&int(2)))
        );
        assert!(adjoint_apply(&SymFun::p(part![3]), &SymFun::p(part![1, 1])).is_zero());
    }

    #[test]
    fn kernel_low_orders() {
        let k0 = kernel_truncated(0);
        assert_eq!(k0.len(), 1);
        assert_eq!(k0[&(Partition::empty(), Partition::empty())], int(1));
        let k1 = kernel_truncated(1);
        assert_eq!(k1[&(part![1], part![1])], int(1).div(&alpha()).unwrap());
        let k2 = kernel_truncated(2);
        assert_eq!(k2.len(), 4);
        assert_eq!(k2[&(part![2], part![2])], int(1).div(&alpha().mul(&int(2))).unwrap());
        assert_eq!(k2[&(part![1, 1], part![1, 1])], int(1).div(&alpha_pow(2).mul(&int(2))).unwrap());
    }

    #[test]
    fn kernel_lemma_examples() {
        assert!(kernel_lemma_check(&SymFun::p(part![1]), 3).unwrap());
        assert!(kernel_lemma_check(&SymFun::one(), 0).unwrap());
        assert!(kernel_lemma_check(&SymFun::p(part![2, 1]), 5).unwrap());
        assert!(kernel_lemma_check(&SymFun::p(part![2, 1]), 2).is_err());
    }

    #[test]
    fn json_is_sorted_and_round_trips() {
        let f = SymFun::from_terms(
            Basis::Monomial,
            [(part![1, 1], int(2).div(&alpha_linear(1, 1)).unwrap()), (part![2], int(1))],
        );
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.starts_with(r#"{"basis":"m","terms":[{"partition":[2],"coeff""#));
        let back: SymFun = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
        assert_eq!(f.to_string(), "m[2] + 2/(α+1)·m[1,1]");
    }
}
