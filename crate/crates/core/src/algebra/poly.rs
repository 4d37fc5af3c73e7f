use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use super::{AlgebraError, Rat};

/// Exponent vector over `(x_1..x_n, y_1..y_n, z)`.
///
/// Ordered graded-lexicographically: higher total degree first is *greater*,
/// ties broken by comparing exponents left to right (`x_1` most significant).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[v] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with rational coefficients in `2n+1` variables.
///
/// Terms are stored in strictly decreasing monomial order with no zero
/// coefficients, so derived equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    n: usize,
    terms: Vec<(Monomial, Rat)>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly {
            n,
            terms: Vec::new(),
        }
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Self::zero(n);
        }
        Poly {
            n,
            terms: vec![(Monomial::one(2 * n + 1), c)],
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rat::one())
    }

    /// The coordinate function with index `v` (`0..2n+1`).
    pub fn var(n: usize, v: usize) -> Result<Self, AlgebraError> {
        let nvars = 2 * n + 1;
        if v >= nvars {
            return Err(AlgebraError::VariableOutOfRange { index: v, nvars });
        }
        Ok(Poly {
            n,
            terms: vec![(Monomial::var(nvars, v), Rat::one())],
        })
    }

    pub fn x(n: usize, i: usize) -> Self {
        assert!(i < n);
        Self::var(n, i).unwrap()
    }

    pub fn y(n: usize, i: usize) -> Self {
        assert!(i < n);
        Self::var(n, n + i).unwrap()
    }

    pub fn z(n: usize) -> Self {
        Self::var(n, 2 * n).unwrap()
    }

    /// Builds from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rat)>,
    {
        let mut acc: HashMap<Monomial, Rat> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), 2 * n + 1, "monomial arity");
            let slot = acc.entry(m).or_default();
            *slot = &*slot + &c;
        }
        Self::from_map(n, acc)
    }

    fn from_map(n: usize, acc: HashMap<Monomial, Rat>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { n, terms }
    }

    /// Half-dimension `n` of the ambient `ℝ^{2n+1}`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        2 * self.n + 1
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn leading(&self) -> Option<&(Monomial, Rat)> {
        self.terms.first()
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> Rat {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rat::zero(),
        }
    }

    fn check_dim(&self, other: &Poly) -> Result<(), AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &Rat| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Poly {
            n: self.n,
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check_dim(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check_dim(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check_dim(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.n));
        }
        if other.terms.len() == 1 {
            return Ok(self.mul_term(&other.terms[0].0, &other.terms[0].1));
        }
        if self.terms.len() == 1 {
            return Ok(other.mul_term(&self.terms[0].0, &self.terms[0].1));
        }
        let mut acc: HashMap<Monomial, Rat> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                let slot = acc.entry(ma.mul(mb)).or_default();
                *slot = &*slot + &c;
            }
        }
        Ok(Self::from_map(self.n, acc))
    }

    /// Multiplies by a single term; monomial multiplication preserves order.
    fn mul_term(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        self.mul_term(&Monomial::one(self.nvars()), c)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to variable `v`.
    pub fn partial(&self, v: usize) -> Result<Poly, AlgebraError> {
        if v >= self.nvars() {
            return Err(AlgebraError::VariableOutOfRange {
                index: v,
                nvars: self.nvars(),
            });
        }
        // Differentiation is not order preserving, so re-sort.
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.0[v];
            (e > 0).then(|| {
                let mut m = m.clone();
                m.0[v] -= 1;
                (m, c * &Rat::from_int(e as i64))
            })
        });
        let mut terms: Vec<_> = terms.collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Ok(Poly { n: self.n, terms })
    }

    /// Exact quotient `self / d` if `d` divides `self`, else `None`.
    ///
    /// Uses the division algorithm against the leading term of `d`; the
    /// first leading term of the remainder not divisible by `LT(d)` proves
    /// non-divisibility.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.leading()?;
        if self.n != d.n {
            return None;
        }
        if d.terms.len() == 1 {
            let inv = lc.recip()?;
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return None;
                }
                out.push((m.div(lm), c * &inv));
            }
            return Some(Poly {
                n: self.n,
                terms: out,
            });
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.terms.first() {
            if !lm.divides(rm) || rm.degree() < lm.degree() {
                return None;
            }
            let qm = rm.div(lm);
            let qc = rc / lc;
            rem = &rem - &d.mul_term(&qm, &qc);
            quot.push((qm, qc));
        }
        Some(Poly {
            n: self.n,
            terms: quot,
        })
    }

    /// Positive rational `c` and polynomial `p` with `self = c·p`, where `p`
    /// has integer coefficients with gcd 1.
    /// Largest monomial dividing every term (`1` for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut terms = self.terms.iter();
        let Some((first, _)) = terms.next() else {
            return Monomial::one(self.nvars());
        };
        let mut exps: SmallVec<[u32; 8]> = first.0.clone();
        for (m, _) in terms {
            for (e, &f) in exps.iter_mut().zip(m.0.iter()) {
                *e = (*e).min(f);
            }
        }
        Monomial(exps)
    }

    /// Divides by a monomial that divides every term; term order is kept.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Poly> {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| {
                let exps: Option<SmallVec<[u32; 8]>> =
                    t.0.iter()
                        .zip(m.0.iter())
                        .map(|(&a, &b)| a.checked_sub(b))
                        .collect();
                exps.map(|e| (Monomial(e), c.clone()))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Poly { n: self.n, terms })
    }

    pub fn content_split(&self) -> (Rat, Poly) {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Zero};
        if self.is_zero() {
            return (Rat::one(), self.clone());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(&c.numer());
            den_lcm = den_lcm.lcm(&c.denom());
        }
        let content = Rat::from_bigints(num_gcd, den_lcm);
        let inv = content.recip().expect("nonzero content");
        (content, self.scale(&inv))
    }

    /// Evaluates at a point of `ℚ^{2n+1}`.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs)
            .expect("polynomial dimension mismatch")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs)
            .expect("polynomial dimension mismatch")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs)
            .expect("polynomial dimension mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
