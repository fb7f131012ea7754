//! The coefficient field Q(α).
//!
//! [`AlphaPoly`] is a dense polynomial in α with exact rational coefficients
//! and [`AlphaRat`] a reduced ratio of two of them with monic denominator, so
//! that equal field elements are structurally equal.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{parse_rational, rat, rational_to_string, Field, Rational};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;

pub type AlphaPoly = Poly<Rational>;
pub type AlphaRat = RatFunc<Rational>;

/// The parameter α itself.
pub fn alpha() -> AlphaRat {
    AlphaRat::var()
}

/// The integer `n` as a constant.
pub fn int(n: i64) -> AlphaRat {
    AlphaRat::constant(Rational::from_i64(n))
}

/// The rational `p/q` as a constant.
pub fn frac(p: i64, q: i64) -> AlphaRat {
    AlphaRat::constant(rat(p, q))
}

/// `a α + b` for integers `a`, `b`.
pub fn alpha_linear(a: i64, b: i64) -> AlphaRat {
    AlphaRat::from_poly(Poly::linear(Rational::from_i64(a), Rational::from_i64(b)))
}

/// α^k.
pub fn alpha_pow(k: u32) -> AlphaRat {
    let mut coeffs = vec![Rational::from_i64(0); k as usize];
    coeffs.push(Rational::from_i64(1));
    AlphaRat::from_poly(Poly::new(coeffs))
}

/// Exact value of `a` at α = `r`.
pub fn eval_alpha(a: &AlphaRat, r: &Rational) -> Result<Rational> {
    a.eval(r).map_err(|_| Error::Pole(format!("α = {}", rational_to_string(r))))
}

/// Polynomial in α with the given `(power, rational)` pairs.
pub fn alpha_poly_from_pairs(pairs: &[(usize, Rational)]) -> AlphaPoly {
    let len = pairs.iter().map(|(k, _)| k + 1).max().unwrap_or(0);
    let mut coeffs = vec![Rational::from_i64(0); len];
    for (k, c) in pairs {
        coeffs[*k] = coeffs[*k].add(c);
    }
    Poly::new(coeffs)
}

fn poly_to_pairs(p: &AlphaPoly) -> Vec<(usize, String)> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !Field::is_zero(*c))
        .map(|(k, c)| (k, rational_to_string(c)))
        .collect()
}

#[derive(Serialize, Deserialize)]
struct AlphaRatRepr {
    num: Vec<(usize, String)>,
    den: Vec<(usize, String)>,
}

fn pairs_to_poly(pairs: &[(usize, String)]) -> Result<AlphaPoly> {
    let parsed = pairs
        .iter()
        .map(|(k, s)| parse_rational(s).map(|r| (*k, r)).ok_or_else(|| Error::Parse(format!("bad rational {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(alpha_poly_from_pairs(&parsed))
}

/// JSON form `{"num": [[k, "p/q"], ...], "den": [[k, "p/q"], ...]}`.
pub fn alpha_rat_to_json(a: &AlphaRat) -> serde_json::Value {
    serde_json::to_value(AlphaRatRepr { num: poly_to_pairs(a.num()), den: poly_to_pairs(a.den()) })
        .expect("serializable")
}

pub fn alpha_rat_from_json(v: &serde_json::Value) -> Result<AlphaRat> {
    let repr: AlphaRatRepr = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    AlphaRat::new(pairs_to_poly(&repr.num)?, pairs_to_poly(&repr.den)?)
}

/// Serde adapter for fields holding an [`AlphaRat`].
pub mod serde_alpha {
    use super::*;

    pub fn serialize<S: Serializer>(a: &AlphaRat, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlphaRatRepr { num: poly_to_pairs(a.num()), den: poly_to_pairs(a.den()) }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<AlphaRat, D::Error> {
        let repr = AlphaRatRepr::deserialize(d)?;
        let num = pairs_to_poly(&repr.num).map_err(serde::de::Error::custom)?;
        let den = pairs_to_poly(&repr.den).map_err(serde::de::Error::custom)?;
        AlphaRat::new(num, den).map_err(serde::de::Error::custom)
    }
}

/// Renders a polynomial with the given variable name, e.g. `α^2-3α+1/2`.
pub fn format_poly(p: &Poly<Rational>, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if Field::is_zero(c) {
            continue;
        }
        let negative = c < &Rational::from_i64(0);
        let abs = if negative { -c.clone() } else { c.clone() };
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = rational_to_string(&abs);
        match k {
            0 => out.push_str(&mag),
            _ => {
                if !Field::is_one(&abs) {
                    if abs.denom() == &BigInt::from(1) {
                        out.push_str(&mag);
                    } else {
                        out.push_str(&format!("({mag})"));
                    }
                }
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    out
}

fn is_single_term(p: &Poly<Rational>) -> bool {
    p.coeffs().iter().filter(|c| !Field::is_zero(*c)).count() <= 1
}

/// Numerator and denominator rescaled to coprime integer coefficients with
/// positive leading denominator coefficient.
fn integral_form(a: &RatFunc<Rational>) -> (Poly<Rational>, Poly<Rational>) {
    use num_integer::Integer;
    let coeffs = a.num().coeffs().iter().chain(a.den().coeffs());
    let lcm = coeffs.clone().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let scale = Rational::from_integer(lcm);
    let (num, den) = (a.num().scale(&scale), a.den().scale(&scale));
    let gcd = num.coeffs().iter().chain(den.coeffs()).fold(BigInt::from(0), |acc, c| acc.gcd(c.numer()));
    let unscale = Rational::new(BigInt::from(1), gcd);
    (num.scale(&unscale), den.scale(&unscale))
}

/// Renders a rational function with integer coefficients where possible,
/// parenthesizing compound numerator and denominator.
pub fn format_ratfunc(a: &RatFunc<Rational>, var: &str) -> String {
    let integral = a.num().coeffs().iter().all(|c| c.is_integer());
    if a.den().is_one() && integral {
        return format_poly(a.num(), var);
    }
    let (num, den) = integral_form(a);
    if den.is_one() {
        return format_poly(&num, var);
    }
    let num_str = format_poly(&num, var);
    let num = if is_single_term(&num) { num_str } else { format!("({num_str})") };
    let den_str = format_poly(&den, var);
    let bare = is_single_term(&den) && (den.degree() == Some(0) || den.leading().is_some_and(Field::is_one));
    let den = if bare { den_str } else { format!("({den_str})") };
    format!("{num}/{den}")
}

/// Splits a leading minus sign off the rendering of `c` when the rest is the
/// rendering of `−c`: `-2/(α+1)` splits, `-α+1` does not.
pub fn signed_parts(c: &AlphaRat) -> (bool, String) {
    let text = ShowAlpha(c).to_string();
    let negated = ShowAlpha(&c.neg()).to_string();
    if text.starts_with('-') && text[1..] == negated {
        (true, negated)
    } else {
        (false, text)
    }
}

/// Whether `text` has a `+` or `-` outside parentheses after its first character.
pub fn is_top_level_sum(text: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

/// Writes `Σ c·basis` with signs folded into the separators: the first term
/// gets a bare `-`, later ones ` - ` or ` + `; compound coefficients are
/// parenthesized and unit coefficients dropped.
pub fn write_signed_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a AlphaRat, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, basis) in terms {
        let (negative, text) = signed_parts(c);
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if basis.is_empty() {
            f.write_str(&text)?;
        } else if text == "1" {
            f.write_str(&basis)?;
        } else if is_top_level_sum(&text) {
            write!(f, "({text})·{basis}")?;
        } else {
            write!(f, "{text}·{basis}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Display wrapper for [`AlphaRat`] values, e.g. `2/(α+1)`.
pub struct ShowAlpha<'a>(pub &'a AlphaRat);

impl fmt::Display for ShowAlpha<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_ratfunc(self.0, "α"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn telescoping_sum() {
        let a = alpha().div(&alpha_linear(1, 1)).unwrap();
        let b = int(1).div(&alpha_linear(1, 1)).unwrap();
        assert_eq!(&a + &b, int(1));
    }

    #[test]
    fn inverse_pair() {
        let a = alpha_linear(1, 1);
        assert_eq!(&a * &a.inv().unwrap(), int(1));
    }

    #[test]
    fn difference_of_squares_division() {
        // Long-division oracle: α²−1 = (α−1)(α+1) + 0.
        let num = AlphaPoly::new(vec![rat(-1, 1), rat(0, 1), rat(1, 1)]);
        let (q, r) = num.div_rem(&AlphaPoly::new(vec![rat(-1, 1), rat(1, 1)])).unwrap();
        assert!(r.is_zero());
        let quotient = AlphaRat::from_poly(num).div(&alpha_linear(1, -1)).unwrap();
        assert_eq!(quotient, AlphaRat::from_poly(q));
        assert_eq!(quotient, alpha_linear(1, 1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(int(1).div(&int(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn evaluation() {
        let two_over = int(2).div(&alpha_linear(1, 1)).unwrap();
        assert_eq!(eval_alpha(&two_over, &rat(1, 1)).unwrap(), rat(1, 1));
        assert_eq!(eval_alpha(&alpha(), &rat(3, 2)).unwrap(), rat(3, 2));
        let pole = int(1).div(&alpha_linear(1, -1)).unwrap();
        assert!(matches!(eval_alpha(&pole, &rat(1, 1)), Err(Error::Pole(_))));
    }

    #[test]
    fn display() {
        let a = int(2).div(&alpha_linear(1, 1)).unwrap();
        assert_eq!(ShowAlpha(&a).to_string(), "2/(α+1)");
        let b = alpha_linear(1, -1).div(&alpha_linear(1, 1)).unwrap();
        assert_eq!(ShowAlpha(&b).to_string(), "(α-1)/(α+1)");
        assert_eq!(ShowAlpha(&(alpha() * alpha()).neg()).to_string(), "-α^2");
        assert_eq!(ShowAlpha(&frac(1, 2).mul(&alpha())).to_string(), "α/2");
        let e = alpha_linear(1, 1).mul(&alpha_linear(1, 2)).mul(&alpha()).scale(&rat(1, 6));
        assert_eq!(ShowAlpha(&e).to_string(), "(α^3+3α^2+2α)/6");
        assert_eq!(ShowAlpha(&frac(-3, 4)).to_string(), "-3/4");
        assert_eq!(ShowAlpha(&int(1).div(&alpha()).unwrap()).to_string(), "1/α");
        let c = alpha().div(&alpha_linear(2, 2).mul(&alpha_linear(2, 1))).unwrap();
        assert_eq!(ShowAlpha(&c).to_string(), "α/(4α^2+6α+2)");
        let d = frac(1, 2).div(&alpha_linear(3, 0)).unwrap();
        assert_eq!(ShowAlpha(&d).to_string(), "1/(6α)");
    }

    #[test]
    fn json_shape() {
        let a = int(2).div(&alpha_linear(1, 1)).unwrap();
        let v = alpha_rat_to_json(&a);
        assert_eq!(v, serde_json::json!({"num": [[0, "2"]], "den": [[0, "1"], [1, "1"]]}));
        assert_eq!(alpha_rat_from_json(&v).unwrap(), a);
        // Unreduced input is normalized on the way in.
        let w = serde_json::json!({"num": [[0, "2"], [1, "2"]], "den": [[1, "4"], [0, "4"]]});
        assert_eq!(alpha_rat_from_json(&w).unwrap(), frac(1, 2));
    }
}
