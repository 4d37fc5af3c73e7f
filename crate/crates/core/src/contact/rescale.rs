//! Other contact forms on the model: `α' = f·α`, Reeb fields of arbitrary
//! contact forms, and contact fields built directly from `(α', H')`.

use crate::algebra::RatFn;
use crate::exterior::{solve_linear, solve_system, DiffForm, ExteriorError, VectorField};

use super::model::volume_of;
use super::{ContactError, DarbouxModel, Hamiltonian};

/// The data attached to a rescaled contact form `α' = f·α`.
#[derive(Clone, Debug)]
pub struct RescaledContact {
    pub factor: RatFn,
    pub alpha: DiffForm,
    pub d_alpha: DiffForm,
    pub omega_vol: DiffForm,
}

impl RescaledContact {
    /// `H' = α'(X)`.
    pub fn hamiltonian(&self, x: &VectorField) -> Result<Hamiltonian, ContactError> {
        let h = self.alpha.interior(x)?.as_function().expect("0-form");
        Ok(Hamiltonian(h))
    }

    /// `H'_{X,Y} = −i_Y i_X dα'` for fields tangent to `ker α'`.
    pub fn pairing(&self, x: &VectorField, y: &VectorField) -> Result<Hamiltonian, ContactError> {
        for v in [x, y] {
            if !self.hamiltonian(v)?.0.is_zero() {
                return Err(ContactError::NotTangent);
            }
        }
        let c = self.d_alpha.interior(x)?.interior(y)?;
        Ok(Hamiltonian(-c.as_function().expect("0-form")))
    }
}

/// `dα'(e_k, e_j)` for all coordinate pairs.
fn two_form_matrix(w: &DiffForm) -> Vec<Vec<RatFn>> {
    let n = w.n();
    let dim = 2 * n + 1;
    let mut m = vec![vec![RatFn::zero(n); dim]; dim];
    for (idx, c) in w.components() {
        m[idx[0]][idx[1]] = c.clone();
        m[idx[1]][idx[0]] = -c;
    }
    m
}

impl DarbouxModel {
    fn check_one_form(&self, form: &DiffForm) -> Result<(), ContactError> {
        if form.n() != self.n() {
            return Err(ContactError::DimensionMismatch {
                model: self.n(),
                value: form.n(),
            });
        }
        if form.degree() != 1 {
            return Err(ContactError::Exterior(ExteriorError::DegreeMismatch {
                left: 1,
                right: form.degree(),
            }));
        }
        Ok(())
    }

    /// Whether `α' ∧ (dα')^n` is a nonzero form.
    pub fn is_contact_form(&self, form: &DiffForm) -> Result<bool, ContactError> {
        self.check_one_form(form)?;
        Ok(!volume_of(form, &form.ext_d()?)?.is_zero())
    }

    /// `α' = f·α` with `dα'` and `Ω' = α'∧(dα')^n`; checks
    /// `Ω' = f^{n+1}·Ω` symbolically.
    pub fn rescale_contact_form(&self, f: &RatFn) -> Result<RescaledContact, ContactError> {
        self.check_fn(f)?;
        if f.is_zero() {
            return Err(ContactError::ZeroFunction);
        }
        let alpha = self.alpha().scale(f);
        let d_alpha = alpha.ext_d()?;
        let omega_vol = volume_of(&alpha, &d_alpha)?;
        let expected = self.omega_vol().scale(&f.powi(self.n() as i32 + 1)?);
        if omega_vol != expected {
            return Err(ContactError::InvariantViolated("Omega' != f^(n+1) Omega"));
        }
        Ok(RescaledContact {
            factor: f.clone(),
            alpha,
            d_alpha,
            omega_vol,
        })
    }

    /// Checks `(fH)^{−(n+1)}·Ω' = H^{−(n+1)}·Ω` under cross-multiplication.
    pub fn rescale_check_integrand(
        &self,
        f: &RatFn,
        h: &Hamiltonian,
    ) -> Result<bool, ContactError> {
        self.check_fn(h.function())?;
        if h.function().is_zero() {
            return Err(ContactError::ZeroFunction);
        }
        let rescaled = self.rescale_contact_form(f)?;
        let top: Vec<usize> = (0..2 * self.n() + 1).collect();
        let e = -(self.n() as i32 + 1);
        let h_new = f * h.function();
        let lhs = &h_new.powi(e)? * &rescaled.omega_vol.component(&top);
        let rhs = &h.function().powi(e)? * &self.omega_coeff();
        Ok(lhs.ratfn_eq(&rhs))
    }

    /// The Reeb field of a contact form `α'`: `i_{Z'} dα' = 0`,
    /// `i_{Z'} α' = 1`, solved as a `(2n+2) × (2n+1)` linear system.
    pub fn reeb_of(&self, form: &DiffForm) -> Result<VectorField, ContactError> {
        if !self.is_contact_form(form)? {
            return Err(ContactError::NotContact);
        }
        let n = self.n();
        let dim = 2 * n + 1;
        let d_form = form.ext_d()?;
        let w = two_form_matrix(&d_form);
        // Row j: Σ_k dα'(e_k, e_j) Z^k = 0.
        let mut matrix: Vec<Vec<RatFn>> = (0..dim)
            .map(|j| (0..dim).map(|k| w[k][j].clone()).collect())
            .collect();
        matrix.push((0..dim).map(|k| form.component(&[k])).collect());
        let mut rhs = vec![RatFn::zero(n); dim];
        rhs.push(RatFn::one(n));
        let sol = match solve_system(&matrix, &rhs) {
            Ok(s) => s,
            Err(ExteriorError::SingularMatrix | ExteriorError::InconsistentSystem) => {
                return Err(ContactError::NotContact)
            }
            Err(e) => return Err(e.into()),
        };
        let z = VectorField::new(n, sol)?;
        let normalized = form.interior(&z)?.as_function().expect("0-form").is_one();
        if !normalized || !d_form.interior(&z)?.is_zero() {
            return Err(ContactError::InvariantViolated(
                "Reeb equations fail on back-substitution",
            ));
        }
        Ok(z)
    }

    /// The unique contact field `X` of `α'` with `α'(X) = H'`, found by
    /// solving `dH' + i_X dα' = g·α'`, `α'(X) = H'` for `(X, g)`.
    pub fn generic_contact_field(
        &self,
        form: &DiffForm,
        h: &RatFn,
    ) -> Result<VectorField, ContactError> {
        self.check_fn(h)?;
        if !self.is_contact_form(form)? {
            return Err(ContactError::NotContact);
        }
        let n = self.n();
        let dim = 2 * n + 1;
        let d_form = form.ext_d()?;
        let w = two_form_matrix(&d_form);
        let mut matrix = Vec::with_capacity(dim + 1);
        let mut rhs = Vec::with_capacity(dim + 1);
        #[allow(clippy::needless_range_loop)]
        for j in 0..dim {
            let mut row: Vec<RatFn> = (0..dim).map(|k| w[k][j].clone()).collect();
            row.push(-form.component(&[j]));
            matrix.push(row);
            rhs.push(-h.partial(j)?);
        }
        let mut last: Vec<RatFn> = (0..dim).map(|k| form.component(&[k])).collect();
        last.push(RatFn::zero(n));
        matrix.push(last);
        rhs.push(h.clone());

        let mut sol = solve_linear(&matrix, &rhs)?;
        let g = sol.pop().expect("multiplier");
        let x = VectorField::new(n, sol)?;
        let lie = form.lie_derivative(&x)?;
        if lie != form.scale(&g) {
            return Err(ContactError::InvariantViolated(
                "solved field is not contact",
            ));
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Poly, Rat};

    fn rf(p: Poly) -> RatFn {
        RatFn::from_poly(p)
    }

    fn one_plus_x2(n: usize) -> RatFn {
        rf(&Poly::one(n) + &(&Poly::x(n, 0) * &Poly::x(n, 0)))
    }

    #[test]
    fn identity_rescaling() {
        let m = DarbouxModel::new(1).unwrap();
        let r = m.rescale_contact_form(&RatFn::one(1)).unwrap();
        assert_eq!(&r.alpha, m.alpha());
        assert_eq!(&r.omega_vol, m.omega_vol());
        assert_eq!(
            m.rescale_contact_form(&RatFn::zero(1)).unwrap_err(),
            ContactError::ZeroFunction
        );
    }

    #[test]
    fn rescaled_volume_n1() {
        let m = DarbouxModel::new(1).unwrap();
        let f = one_plus_x2(1);
        let r = m.rescale_contact_form(&f).unwrap();
        assert_eq!(r.omega_vol, m.omega_vol().scale(&(&f * &f)));
    }

    #[test]
    fn integrand_examples() {
        let m = DarbouxModel::new(1).unwrap();
        let h = Hamiltonian(rf(&Poly::one(1) + &(&Poly::z(1) * &Poly::z(1))));
        assert!(m.rescale_check_integrand(&RatFn::one(1), &h).unwrap());
        assert!(m.rescale_check_integrand(&one_plus_x2(1), &h).unwrap());
        assert_eq!(
            m.rescale_check_integrand(&RatFn::one(1), &Hamiltonian(RatFn::zero(1))),
            Err(ContactError::ZeroFunction)
        );
    }

    #[test]
    fn reeb_examples() {
        let m = DarbouxModel::new(1).unwrap();
        assert_eq!(&m.reeb_of(m.alpha()).unwrap(), m.reeb());
        let two = m.alpha().scale_rat(&Rat::from_int(2));
        assert_eq!(
            m.reeb_of(&two).unwrap(),
            m.reeb().scale_rat(&Rat::new(1, 2))
        );
        let f = one_plus_x2(1);
        let scaled = m.alpha().scale(&f);
        let z = m.reeb_of(&scaled).unwrap();
        assert!(scaled.interior(&z).unwrap().as_function().unwrap().is_one());
        assert!(scaled.ext_d().unwrap().interior(&z).unwrap().is_zero());
    }

    #[test]
    fn non_contact_forms_rejected() {
        let m = DarbouxModel::new(1).unwrap();
        let dz = DiffForm::basis(1, &[2], RatFn::one(1)).unwrap();
        assert_eq!(m.reeb_of(&dz), Err(ContactError::NotContact));
        assert_eq!(
            m.generic_contact_field(&dz, &RatFn::one(1)),
            Err(ContactError::NotContact)
        );
    }

    #[test]
    fn generic_field_reduces_to_hamiltonian_field() {
        let m = DarbouxModel::new(1).unwrap();
        assert_eq!(
            &m.generic_contact_field(m.alpha(), &RatFn::one(1)).unwrap(),
            m.reeb()
        );
        let z = rf(Poly::z(1));
        let two = RatFn::constant(1, Rat::from_int(2));
        let a = m.generic_contact_field(m.alpha(), &z).unwrap();
        let b = m
            .generic_contact_field(&m.alpha().scale(&two), &(&two * &z))
            .unwrap();
        assert_eq!(a, b);
        assert_eq!(a, m.hamiltonian_to_field(&Hamiltonian(z)).unwrap());

        let f = one_plus_x2(1);
        let x = rf(Poly::x(1, 0));
        let a = m.generic_contact_field(m.alpha(), &x).unwrap();
        let b = m
            .generic_contact_field(&m.alpha().scale(&f), &(&f * &x))
            .unwrap();
        assert_eq!(a, b);
    }
}
