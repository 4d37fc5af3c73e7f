use std::ops::{Add, Neg, Sub};

use crate::algebra::{Poly, Rat, RatFn};

use super::ExteriorError;

/// Vector field in the coordinate frame `∂x_1..∂x_n, ∂y_1..∂y_n, ∂z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    n: usize,
    coeffs: Vec<RatFn>,
}

impl VectorField {
    pub fn new(n: usize, coeffs: Vec<RatFn>) -> Result<Self, ExteriorError> {
        if coeffs.len() != 2 * n + 1 {
            return Err(ExteriorError::WrongLength {
                expected: 2 * n + 1,
                found: coeffs.len(),
            });
        }
        if let Some(bad) = coeffs.iter().find(|c| c.n() != n) {
            return Err(ExteriorError::DimensionMismatch {
                left: n,
                right: bad.n(),
            });
        }
        Ok(VectorField { n, coeffs })
    }

    pub fn from_polys(n: usize, coeffs: Vec<Poly>) -> Result<Self, ExteriorError> {
        Self::new(n, coeffs.into_iter().map(RatFn::from_poly).collect())
    }

    pub fn zero(n: usize) -> Self {
        VectorField {
            n,
            coeffs: vec![RatFn::zero(n); 2 * n + 1],
        }
    }

    /// The coordinate field `∂/∂(var k)`.
    pub fn coordinate(n: usize, k: usize) -> Self {
        let mut f = Self::zero(n);
        f.coeffs[k] = RatFn::one(n);
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[RatFn] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &RatFn {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFn::is_zero)
    }

    fn check_dim(&self, n: usize) -> Result<(), ExteriorError> {
        if self.n != n {
            return Err(ExteriorError::DimensionMismatch {
                left: self.n,
                right: n,
            });
        }
        Ok(())
    }

    /// Directional derivative `X(f) = Σ_k X^k ∂_k f`.
    pub fn apply(&self, f: &RatFn) -> Result<RatFn, ExteriorError> {
        self.check_dim(f.n())?;
        let mut acc = RatFn::zero(self.n);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = f.partial(k)?;
            if !d.is_zero() {
                acc = &acc + &(c * &d);
            }
        }
        Ok(acc)
    }

    /// Pointwise product `f·X`.
    pub fn scale(&self, f: &RatFn) -> VectorField {
        VectorField {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * f).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rat) -> VectorField {
        VectorField {
            n: self.n,
            coeffs: self.coeffs.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// `[X, Y]^k = X(Y^k) − Y(X^k)`.
    pub fn lie_bracket(&self, other: &VectorField) -> Result<VectorField, ExteriorError> {
        self.check_dim(other.n)?;
        let coeffs = (0..self.coeffs.len())
            .map(|k| Ok(&self.apply(&other.coeffs[k])? - &other.apply(&self.coeffs[k])?))
            .collect::<Result<Vec<_>, ExteriorError>>()?;
        Ok(VectorField { n: self.n, coeffs })
    }

    pub fn checked_add(&self, other: &VectorField) -> Result<VectorField, ExteriorError> {
        self.check_dim(other.n)?;
        Ok(VectorField {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &VectorField) -> Result<VectorField, ExteriorError> {
        self.check_dim(other.n)?;
        Ok(VectorField {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }
}

impl<'a> Add<&'a VectorField> for &'a VectorField {
    type Output = VectorField;
    fn add(self, rhs: &VectorField) -> VectorField {
        self.checked_add(rhs)
            .expect("vector field dimension mismatch")
    }
}

impl<'a> Sub<&'a VectorField> for &'a VectorField {
    type Output = VectorField;
    fn sub(self, rhs: &VectorField) -> VectorField {
        self.checked_sub(rhs)
            .expect("vector field dimension mismatch")
    }
}

impl Neg for &VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        VectorField {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half(p: Poly) -> RatFn {
        RatFn::from_poly(p.scale(&Rat::new(1, 2)))
    }

    #[test]
    fn bracket_of_hamiltonian_fields_is_reeb() {
        let n = 1;
        let (x, y) = (Poly::x(n, 0), Poly::y(n, 0));
        // X_x = ∂y + (x/2)∂z, X_y = −∂x + (y/2)∂z
        let xx = VectorField::new(n, vec![RatFn::zero(n), RatFn::one(n), half(x)]).unwrap();
        let xy = VectorField::new(n, vec![-RatFn::one(n), RatFn::zero(n), half(y)]).unwrap();
        assert_eq!(xx.lie_bracket(&xy).unwrap(), VectorField::coordinate(n, 2));
        assert!(xx.lie_bracket(&xx).unwrap().is_zero());
    }

    #[test]
    fn wrong_length_rejected() {
        assert_eq!(
            VectorField::new(1, vec![RatFn::zero(1)]),
            Err(ExteriorError::WrongLength {
                expected: 3,
                found: 1
            })
        );
    }

    #[test]
    fn apply_is_directional_derivative() {
        let n = 1;
        let x = Poly::x(n, 0);
        let f = RatFn::from_poly(&x * &x);
        let dx = VectorField::coordinate(n, 0).scale(&RatFn::from_poly(Poly::y(n, 0)));
        assert_eq!(
            dx.apply(&f).unwrap(),
            RatFn::from_poly((&x * &Poly::y(n, 0)).scale(&Rat::from_int(2)))
        );
    }
}
