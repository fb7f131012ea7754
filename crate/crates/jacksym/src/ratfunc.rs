//! Rational functions in one variable over a [`Field`], kept in canonical
//! form: the denominator is monic and coprime to the numerator.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    /// Builds `num / den` in canonical form.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let inv = den.coeff(0).inv().expect("nonzero denominator");
            return RatFunc { num: num.scale(&inv), den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lead_inv = den.leading().expect("nonzero").inv().expect("nonzero");
        if lead_inv.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc { num: num.scale(&lead_inv), den: den.scale(&lead_inv) }
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a field constant, if it is one.
    pub fn as_constant(&self) -> Option<F> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        if other.den.is_one() {
            return RatFunc { num: self.num.add(&other.num.mul(&self.den)), den: self.den.clone() };
        }
        if self.den.is_one() {
            return RatFunc { num: other.num.add(&self.num.mul(&other.den)), den: other.den.clone() };
        }
        // Henrici: only the common factor of the denominators can cancel.
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return RatFunc { num, den: self.den.mul(&other.den) }.fix_zero();
        }
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d2).add(&other.num.mul(&d1));
        let den = d1.mul(&other.den);
        if num.is_zero() {
            return Self::zero();
        }
        let h = num.gcd(&g);
        if h.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc { num: num.div_exact(&h).expect("gcd divides"), den: den.div_exact(&h).expect("gcd divides") }
        }
    }

    fn fix_zero(self) -> Self {
        if self.num.is_zero() {
            Self::zero()
        } else {
            self
        }
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        if let Some(c) = self.as_constant() {
            return RatFunc { num: other.num.scale(&c), den: other.den.clone() };
        }
        if let Some(c) = other.as_constant() {
            return RatFunc { num: self.num.scale(&c), den: self.den.clone() };
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        // gcd divisors are monic, so den stays monic up to a constant factor.
        let lead_inv = den.leading().expect("nonzero").inv().expect("nonzero");
        if lead_inv.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc { num: num.scale(&lead_inv), den: den.scale(&lead_inv) }
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lead_inv = self.num.leading().expect("nonzero").inv().expect("nonzero");
        Ok(RatFunc { num: self.den.scale(&lead_inv), den: self.num.scale(&lead_inv) })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        // Coprime inputs stay coprime under powers.
        RatFunc { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Value at `x`; errors when the (reduced) denominator vanishes there.
    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        match d.inv() {
            Some(di) => Ok(self.num.eval(x).mul(&di)),
            None => Err(Error::Pole(format!("{x:?}"))),
        }
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatFunc::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFunc::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self).ok()
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::constant(F::from_i64(n))
    }
}


macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl<F: Field> std::ops::$tr<&RatFunc<F>> for &RatFunc<F> {
            type Output = RatFunc<F>;
            fn $m(self, rhs: &RatFunc<F>) -> RatFunc<F> {
                RatFunc::$m(self, rhs)
            }
        }
        impl<F: Field> std::ops::$tr<RatFunc<F>> for RatFunc<F> {
            type Output = RatFunc<F>;
            fn $m(self, rhs: RatFunc<F>) -> RatFunc<F> {
                RatFunc::$m(&self, &rhs)
            }
        }
        impl<F: Field> std::ops::$tr<&RatFunc<F>> for RatFunc<F> {
            type Output = RatFunc<F>;
            fn $m(self, rhs: &RatFunc<F>) -> RatFunc<F> {
                RatFunc::$m(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<F: Field> std::ops::Neg for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc::neg(self)
    }
}

impl<F: Field> std::ops::Neg for RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc::neg(&self)
    }
}
