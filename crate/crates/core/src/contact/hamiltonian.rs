use crate::algebra::{Rat, RatFn};
use crate::exterior::VectorField;

use super::{ContactError, DarbouxModel, Density};

/// A contact Hamiltonian `H = α(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hamiltonian(pub RatFn);

impl Hamiltonian {
    pub fn function(&self) -> &RatFn {
        &self.0
    }

    pub fn into_inner(self) -> RatFn {
        self.0
    }

    /// `𝓗 = H·α^{-1}`, a density of weight `−1/(n+1)`.
    pub fn as_density(&self) -> Density {
        let n = self.0.n() as i64;
        Density::new(self.0.clone(), Rat::new(-1, n + 1))
    }
}

impl From<RatFn> for Hamiltonian {
    fn from(f: RatFn) -> Self {
        Hamiltonian(f)
    }
}

impl DarbouxModel {
    /// `X_H = H·Z − Σ_i (A_i(H)·B_i − B_i(H)·A_i)`.
    pub fn hamiltonian_to_field(&self, h: &Hamiltonian) -> Result<VectorField, ContactError> {
        let h = h.function();
        self.check_fn(h)?;
        let frame = self.frame();
        let mut x = frame.z.scale(h);
        for (a, b) in frame.a.iter().zip(&frame.b) {
            let ah = a.apply(h)?;
            let bh = b.apply(h)?;
            if !ah.is_zero() {
                x = x.checked_sub(&b.scale(&ah))?;
            }
            if !bh.is_zero() {
                x = x.checked_add(&a.scale(&bh))?;
            }
        }
        Ok(x)
    }

    /// `H = i_X α`; defined for any field.
    pub fn field_to_hamiltonian(&self, x: &VectorField) -> Result<Hamiltonian, ContactError> {
        self.check_field(x)?;
        Ok(Hamiltonian(self.alpha_of(x)?))
    }

    /// The factor `f_X` in `L_X α = f_X α`, extracted as `i_Z(L_X α)` and
    /// verified by proportionality.
    pub fn contact_factor(&self, x: &VectorField) -> Result<RatFn, ContactError> {
        self.check_field(x)?;
        let lie = self.alpha().lie_derivative(x)?;
        let f = lie
            .interior(self.reeb())?
            .as_function()
            .expect("contraction of a 1-form");
        if !lie.checked_sub(&self.alpha().scale(&f))?.is_zero() {
            return Err(ContactError::NotContact);
        }
        Ok(f)
    }

    /// `{H_1, H_2} = X_{H_1}(H_2) − Z(H_1)·H_2`.
    pub fn lagrange_bracket(
        &self,
        h1: &Hamiltonian,
        h2: &Hamiltonian,
    ) -> Result<Hamiltonian, ContactError> {
        self.check_fn(h2.function())?;
        let x1 = self.hamiltonian_to_field(h1)?;
        let transport = x1.apply(h2.function())?;
        let zh1 = self.reeb().apply(h1.function())?;
        Ok(Hamiltonian(&transport - &(&zh1 * h2.function())))
    }

    /// Splits `X = X_H + Y` with `H = α(X)` and `Y` tangent.
    pub fn decompose(&self, x: &VectorField) -> Result<(Hamiltonian, VectorField), ContactError> {
        let h = self.field_to_hamiltonian(x)?;
        let y = x.checked_sub(&self.hamiltonian_to_field(&h)?)?;
        if !self.alpha_of(&y)?.is_zero() {
            return Err(ContactError::InvariantViolated(
                "decomposition remainder not tangent",
            ));
        }
        Ok((h, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    fn ham(p: Poly) -> Hamiltonian {
        Hamiltonian(RatFn::from_poly(p))
    }

    fn half(p: Poly) -> RatFn {
        RatFn::from_poly(p.scale(&Rat::new(1, 2)))
    }

    #[test]
    fn hamiltonian_fields_n1() {
        let m = DarbouxModel::new(1).unwrap();
        let n = 1;
        assert_eq!(
            &m.hamiltonian_to_field(&ham(Poly::one(n))).unwrap(),
            m.reeb()
        );
        let xx = m.hamiltonian_to_field(&ham(Poly::x(n, 0))).unwrap();
        let expected =
            VectorField::new(n, vec![RatFn::zero(n), RatFn::one(n), half(Poly::x(n, 0))]);
        assert_eq!(xx, expected.unwrap());
        let xz = m.hamiltonian_to_field(&ham(Poly::z(n))).unwrap();
        let expected = VectorField::new(
            n,
            vec![
                half(Poly::x(n, 0)),
                half(Poly::y(n, 0)),
                RatFn::from_poly(Poly::z(n)),
            ],
        );
        assert_eq!(xz, expected.unwrap());
    }

    #[test]
    fn field_to_hamiltonian_examples() {
        let m = DarbouxModel::new(1).unwrap();
        assert_eq!(m.field_to_hamiltonian(m.reeb()).unwrap().0, RatFn::one(1));
        assert!(m.field_to_hamiltonian(&m.frame().a[0]).unwrap().0.is_zero());
        let xz = m.hamiltonian_to_field(&ham(Poly::z(1))).unwrap();
        assert_eq!(m.field_to_hamiltonian(&xz).unwrap(), ham(Poly::z(1)));
    }

    #[test]
    fn contact_factor_examples() {
        let m = DarbouxModel::new(1).unwrap();
        assert!(m.contact_factor(m.reeb()).unwrap().is_zero());
        let xz = m.hamiltonian_to_field(&ham(Poly::z(1))).unwrap();
        assert_eq!(m.contact_factor(&xz).unwrap(), RatFn::one(1));
        assert_eq!(
            m.contact_factor(&m.frame().a[0]),
            Err(ContactError::NotContact)
        );
    }

    #[test]
    fn lagrange_bracket_examples() {
        let m = DarbouxModel::new(1).unwrap();
        let x = ham(Poly::x(1, 0));
        let y = ham(Poly::y(1, 0));
        assert_eq!(m.lagrange_bracket(&x, &y).unwrap(), ham(Poly::one(1)));
        assert!(m.lagrange_bracket(&x, &x).unwrap().0.is_zero());
        let h = ham(&(&Poly::z(1) * &Poly::z(1)) + &Poly::x(1, 0));
        let zh = m.reeb().apply(h.function()).unwrap();
        assert_eq!(
            m.lagrange_bracket(&ham(Poly::one(1)), &h).unwrap(),
            Hamiltonian(zh)
        );
    }

    #[test]
    fn decompose_examples() {
        let m = DarbouxModel::new(1).unwrap();
        let (h, y) = m.decompose(m.reeb()).unwrap();
        assert_eq!(h, ham(Poly::one(1)));
        assert!(y.is_zero());

        let a = &m.frame().a[0];
        let (h, y) = m.decompose(a).unwrap();
        assert!(h.0.is_zero());
        assert_eq!(&y, a);

        let dx = VectorField::coordinate(1, 0);
        let (h, y) = m.decompose(&dx).unwrap();
        assert_eq!(h, ham(Poly::y(1, 0).scale(&Rat::new(-1, 2))));
        let expected = VectorField::new(
            1,
            vec![
                RatFn::constant(1, Rat::new(1, 2)),
                RatFn::zero(1),
                RatFn::from_poly(Poly::y(1, 0).scale(&Rat::new(1, 4))),
            ],
        )
        .unwrap();
        assert_eq!(y, expected);
    }
}
