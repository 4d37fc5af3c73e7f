use crate::algebra::{Rat, RatFn};
use crate::exterior::VectorField;

use super::{ContactError, DarbouxModel};

/// Tensor density `coeff · Ω^weight`, anchored to the Darboux volume form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Density {
    pub coeff: RatFn,
    pub weight: Rat,
}

impl Density {
    pub fn new(coeff: RatFn, weight: Rat) -> Self {
        Density { coeff, weight }
    }

    pub fn checked_add(&self, other: &Density) -> Result<Density, ContactError> {
        if self.weight != other.weight {
            return Err(ContactError::WeightMismatch {
                left: self.weight.clone(),
                right: other.weight.clone(),
            });
        }
        Ok(Density::new(
            &self.coeff + &other.coeff,
            self.weight.clone(),
        ))
    }

    /// Tensor product; weights add.
    pub fn mul(&self, other: &Density) -> Density {
        Density::new(&self.coeff * &other.coeff, &self.weight + &other.weight)
    }
}

impl DarbouxModel {
    /// `L_X(f Ω^λ) = (X(f) + λ(n+1) f_X f) Ω^λ` for a contact field `X`.
    pub fn density_lie(&self, x: &VectorField, phi: &Density) -> Result<Density, ContactError> {
        self.check_fn(&phi.coeff)?;
        let fx = self.contact_factor(x)?;
        let scale = &phi.weight * &Rat::from_int(self.n() as i64 + 1);
        let coeff = &x.apply(&phi.coeff)? + &(&fx * &phi.coeff).scale(&scale);
        Ok(Density::new(coeff, phi.weight.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;
    use crate::contact::Hamiltonian;

    #[test]
    fn reeb_transports_coefficient() {
        let m = DarbouxModel::new(1).unwrap();
        let f = RatFn::from_poly(&Poly::z(1) * &Poly::x(1, 0));
        let phi = Density::new(f.clone(), Rat::new(3, 7));
        let out = m.density_lie(m.reeb(), &phi).unwrap();
        assert_eq!(
            out,
            Density::new(m.reeb().apply(&f).unwrap(), Rat::new(3, 7))
        );
    }

    #[test]
    fn volume_form_scales_by_divergence() {
        let m = DarbouxModel::new(1).unwrap();
        let xz = m
            .hamiltonian_to_field(&Hamiltonian(RatFn::from_poly(Poly::z(1))))
            .unwrap();
        let omega = Density::new(RatFn::one(1), Rat::one());
        let out = m.density_lie(&xz, &omega).unwrap();
        assert_eq!(out.coeff, RatFn::constant(1, Rat::from_int(2)));
        // coordinate divergence of (x/2, y/2, z)
        let div = (0..3).fold(RatFn::zero(1), |acc, k| {
            &acc + &xz.coeff(k).partial(k).unwrap()
        });
        assert_eq!(out.coeff, div);
    }

    #[test]
    fn non_contact_rejected() {
        let m = DarbouxModel::new(1).unwrap();
        let phi = Density::new(RatFn::one(1), Rat::one());
        assert_eq!(
            m.density_lie(&m.frame().a[0], &phi),
            Err(ContactError::NotContact)
        );
    }

    #[test]
    fn weights() {
        let a = Density::new(RatFn::one(1), Rat::new(1, 2));
        let b = Density::new(RatFn::one(1), Rat::new(-1, 2));
        assert!(a.checked_add(&b).is_err());
        assert_eq!(a.mul(&b).weight, Rat::zero());
        assert_eq!(
            a.checked_add(&a).unwrap().coeff,
            RatFn::constant(1, Rat::from_int(2))
        );
    }
}
