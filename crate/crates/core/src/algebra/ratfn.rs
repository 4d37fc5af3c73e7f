use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{AlgebraError, Monomial, Poly, Rat};

/// Quotient of two polynomials.
///
/// The pair is not gcd-reduced. Construction applies a few cheap
/// normalizations (constant denominators folded into the numerator, exact
/// polynomial division when it succeeds, leading denominator coefficient
/// scaled to one) but equality is always decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    /// `num / den`; fails with `DivisionByZero` when `den` is the zero
    /// polynomial.
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.n() != den.n() {
            return Err(AlgebraError::DimensionMismatch {
                left: num.n(),
                right: den.n(),
            });
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFn {
                den: Poly::one(num.n()),
                num,
            };
        }
        if let Some(c) = den.as_constant() {
            let inv = c.recip().expect("nonzero denominator");
            return RatFn {
                num: num.scale(&inv),
                den: Poly::one(den.n()),
            };
        }
        if let Some(q) = num.div_exact(&den) {
            return RatFn {
                den: Poly::one(q.n()),
                num: q,
            };
        }
        let (num, den) = {
            let common = num.monomial_content();
            let shared = Monomial::from_exponents(
                &common
                    .exponents()
                    .iter()
                    .zip(den.monomial_content().exponents())
                    .map(|(&a, &b)| a.min(b))
                    .collect::<Vec<_>>(),
            );
            if shared.is_one() {
                (num, den)
            } else {
                (
                    num.div_monomial(&shared).expect("common factor"),
                    den.div_monomial(&shared).expect("common factor"),
                )
            }
        };
        let (dc, den) = den.content_split();
        let (nc, num) = num.content_split();
        let ratio = &nc / &dc;
        // Sign of the denominator's leading coefficient moves to the numerator.
        let flip = den.leading().map(|(_, c)| c.is_negative()).unwrap_or(false);
        let (num, den) = if flip { (-&num, -&den) } else { (num, den) };
        RatFn {
            num: num.scale(&ratio),
            den,
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        let n = p.n();
        RatFn {
            num: p,
            den: Poly::one(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_poly(Poly::zero(n))
    }

    pub fn one(n: usize) -> Self {
        Self::from_poly(Poly::one(n))
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        Self::from_poly(Poly::constant(n, c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn n(&self) -> usize {
        self.num.n()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        let d = self.den.as_constant()?;
        Some(&self.num.as_constant()? / &d)
    }

    /// Cross-multiplication equality: `a.num·b.den − b.num·a.den = 0`.
    pub fn ratfn_eq(&self, other: &RatFn) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn checked_add(&self, other: &RatFn) -> Result<RatFn, AlgebraError> {
        self.combine(other, false)
    }

    pub fn checked_sub(&self, other: &RatFn) -> Result<RatFn, AlgebraError> {
        self.combine(other, true)
    }

    fn combine(&self, other: &RatFn, negate: bool) -> Result<RatFn, AlgebraError> {
        let join = |a: &Poly, b: &Poly| {
            if negate {
                a.checked_sub(b)
            } else {
                a.checked_add(b)
            }
        };
        if self.den == other.den {
            return Ok(Self::normalized(
                join(&self.num, &other.num)?,
                self.den.clone(),
            ));
        }
        if other.den.is_one() {
            let rhs = other.num.checked_mul(&self.den)?;
            return Ok(Self::normalized(join(&self.num, &rhs)?, self.den.clone()));
        }
        if self.den.is_one() {
            let lhs = self.num.checked_mul(&other.den)?;
            return Ok(Self::normalized(join(&lhs, &other.num)?, other.den.clone()));
        }
        let num = join(
            &self.num.checked_mul(&other.den)?,
            &other.num.checked_mul(&self.den)?,
        )?;
        Ok(Self::normalized(num, self.den.checked_mul(&other.den)?))
    }

    pub fn checked_mul(&self, other: &RatFn) -> Result<RatFn, AlgebraError> {
        if self.is_zero() || other.is_zero() {
            if self.n() != other.n() {
                return Err(AlgebraError::DimensionMismatch {
                    left: self.n(),
                    right: other.n(),
                });
            }
            return Ok(RatFn::zero(self.n()));
        }
        if self.den.is_one() && other.den.is_one() {
            return Ok(RatFn::from_poly(self.num.checked_mul(&other.num)?));
        }
        // Cancel a denominator against the other numerator when exact.
        if let Some(q) = (!self.den.is_one())
            .then(|| other.num.div_exact(&self.den))
            .flatten()
        {
            return Ok(Self::normalized(
                self.num.checked_mul(&q)?,
                other.den.clone(),
            ));
        }
        if let Some(q) = (!other.den.is_one())
            .then(|| self.num.div_exact(&other.den))
            .flatten()
        {
            return Ok(Self::normalized(
                q.checked_mul(&other.num)?,
                self.den.clone(),
            ));
        }
        Ok(Self::normalized(
            self.num.checked_mul(&other.num)?,
            self.den.checked_mul(&other.den)?,
        ))
    }

    pub fn checked_div(&self, other: &RatFn) -> Result<RatFn, AlgebraError> {
        self.checked_mul(&other.recip()?)
    }

    pub fn recip(&self) -> Result<RatFn, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &Rat) -> RatFn {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFn {
        self * &RatFn::from_poly(p.clone())
    }

    /// Integer power; negative exponents invert (fails on zero).
    pub fn powi(&self, e: i32) -> Result<RatFn, AlgebraError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(Self::normalized(base.num.pow(k), base.den.pow(k)))
    }

    /// Quotient-rule partial derivative with respect to variable `v`.
    pub fn partial(&self, v: usize) -> Result<RatFn, AlgebraError> {
        let dn = self.num.partial(v)?;
        if self.den.is_one() {
            return Ok(RatFn::from_poly(dn));
        }
        let dd = self.den.partial(v)?;
        if dd.is_zero() {
            return Ok(Self::normalized(dn, self.den.clone()));
        }
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        Ok(Self::normalized(num, self.den.pow(2)))
    }

    pub fn eval(&self, point: &[Rat]) -> Option<Rat> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(point) / &d)
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        self.ratfn_eq(other)
    }
}

impl Eq for RatFn {}

impl From<Poly> for RatFn {
    fn from(p: Poly) -> Self {
        RatFn::from_poly(p)
    }
}

impl<'a> Add<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        self.checked_add(rhs)
            .expect("rational function dimension mismatch")
    }
}

impl<'a> Sub<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self.checked_sub(rhs)
            .expect("rational function dimension mismatch")
    }
}

impl<'a> Mul<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        self.checked_mul(rhs)
            .expect("rational function dimension mismatch")
    }
}

/// Panics on division by zero; use [`RatFn::checked_div`] to handle it.
impl<'a> Div<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn div(self, rhs: &RatFn) -> RatFn {
        self.checked_div(rhs).expect("rational function division")
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$f:ident),*) => {$(
        impl $tr for RatFn {
            type Output = RatFn;
            fn $f(self, rhs: RatFn) -> RatFn {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);
