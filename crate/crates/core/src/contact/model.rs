use crate::algebra::{Poly, Rat, RatFn};
use crate::exterior::{solve_linear, DiffForm, VectorField};

use super::ContactError;

/// The Heisenberg frame `A_i = ∂x_i + (y_i/2)∂z`, `B_i = −∂y_i + (x_i/2)∂z`,
/// `Z = ∂z`.
#[derive(Clone, Debug)]
pub struct HeisenbergFrame {
    pub a: Vec<VectorField>,
    pub b: Vec<VectorField>,
    pub z: VectorField,
}

impl HeisenbergFrame {
    fn darboux(n: usize) -> Self {
        let half = Rat::new(1, 2);
        let zi = 2 * n;
        let a = (0..n)
            .map(|i| {
                let mut c = vec![RatFn::zero(n); 2 * n + 1];
                c[i] = RatFn::one(n);
                c[zi] = RatFn::from_poly(Poly::y(n, i).scale(&half));
                VectorField::new(n, c).expect("frame arity")
            })
            .collect();
        let b = (0..n)
            .map(|i| {
                let mut c = vec![RatFn::zero(n); 2 * n + 1];
                c[n + i] = -RatFn::one(n);
                c[zi] = RatFn::from_poly(Poly::x(n, i).scale(&half));
                VectorField::new(n, c).expect("frame arity")
            })
            .collect();
        HeisenbergFrame {
            a,
            b,
            z: VectorField::coordinate(n, zi),
        }
    }

    /// The tangent part `(A_1..A_n, B_1..B_n)` of the frame.
    pub fn tangent_basis(&self) -> impl Iterator<Item = &VectorField> {
        self.a.iter().chain(self.b.iter())
    }
}

/// The Darboux model of `ℝ^{2n+1}` with `α = Σ (x_i dy_i − y_i dx_i)/2 + dz`.
#[derive(Clone, Debug)]
pub struct DarbouxModel {
    n: usize,
    alpha: DiffForm,
    d_alpha: DiffForm,
    omega_vol: DiffForm,
    frame: HeisenbergFrame,
}

/// `α ∧ (dα)^n`.
pub(crate) fn volume_of(alpha: &DiffForm, d_alpha: &DiffForm) -> Result<DiffForm, ContactError> {
    let mut vol = alpha.clone();
    for _ in 0..alpha.n() {
        vol = vol.wedge(d_alpha)?;
    }
    Ok(vol)
}

impl DarbouxModel {
    /// Builds the model and checks every structural invariant (volume form,
    /// Reeb normalization, tangency and commutation relations of the frame,
    /// frame independence at the origin).
    pub fn new(n: usize) -> Result<Self, ContactError> {
        if n == 0 {
            return Err(ContactError::InvalidDimension(n));
        }
        let half = Rat::new(1, 2);
        let mut comps = Vec::with_capacity(2 * n + 1);
        for i in 0..n {
            comps.push((vec![i], RatFn::from_poly(-Poly::y(n, i).scale(&half))));
            comps.push((vec![n + i], RatFn::from_poly(Poly::x(n, i).scale(&half))));
        }
        comps.push((vec![2 * n], RatFn::one(n)));
        let alpha = DiffForm::from_components(n, 1, comps)?;
        let d_alpha = alpha.ext_d()?;
        let omega_vol = volume_of(&alpha, &d_alpha)?;
        let model = DarbouxModel {
            n,
            alpha,
            d_alpha,
            omega_vol,
            frame: HeisenbergFrame::darboux(n),
        };
        model.check_invariants()?;
        Ok(model)
    }

    fn check_invariants(&self) -> Result<(), ContactError> {
        let n = self.n;
        let fail = |what: &'static str| Err(ContactError::InvariantViolated(what));

        // n!·dx_1∧dy_1∧…∧dx_n∧dy_n∧dz, in the interleaved order.
        let order: Vec<usize> = (0..n).flat_map(|i| [i, n + i]).chain([2 * n]).collect();
        let factorial = (1..=n as i64).product::<i64>();
        let expected = DiffForm::basis(n, &order, RatFn::constant(n, Rat::from_int(factorial)))?;
        if self.omega_vol != expected {
            return fail("volume form is not n!·dx_1∧dy_1∧…∧dz");
        }

        let z = &self.frame.z;
        if self.alpha_of(z)? != RatFn::one(n) {
            return fail("alpha(Z) != 1");
        }
        if !self.d_alpha.interior(z)?.is_zero() {
            return fail("i_Z d alpha != 0");
        }
        for t in self.frame.tangent_basis() {
            if !self.alpha_of(t)?.is_zero() {
                return fail("frame field not tangent");
            }
            if !t.lie_bracket(z)?.is_zero() {
                return fail("frame field does not commute with Z");
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ab = self.frame.a[i].lie_bracket(&self.frame.b[j])?;
                let expected = if i == j {
                    z.clone()
                } else {
                    VectorField::zero(n)
                };
                if ab != expected {
                    return fail("[A_i, B_j] != delta_ij Z");
                }
                if !self.frame.a[i].lie_bracket(&self.frame.a[j])?.is_zero()
                    || !self.frame.b[i].lie_bracket(&self.frame.b[j])?.is_zero()
                {
                    return fail("[A_i, A_j] or [B_i, B_j] nonzero");
                }
            }
        }

        // Constant parts of A_i, B_i, Z at the origin must be independent.
        let fields: Vec<&VectorField> = self.frame.tangent_basis().chain([z]).collect();
        let at_origin: Vec<Vec<RatFn>> = (0..2 * n + 1)
            .map(|k| {
                fields
                    .iter()
                    .map(|f| RatFn::constant(n, f.coeff(k).num().constant_term()))
                    .collect()
            })
            .collect();
        let rhs = vec![RatFn::zero(n); 2 * n + 1];
        if solve_linear(&at_origin, &rhs).is_err() {
            return fail("frame not independent at the origin");
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &DiffForm {
        &self.alpha
    }

    pub fn d_alpha(&self) -> &DiffForm {
        &self.d_alpha
    }

    /// `Ω = α ∧ (dα)^n`.
    pub fn omega_vol(&self) -> &DiffForm {
        &self.omega_vol
    }

    /// The single coefficient of `Ω` on `dx_1∧…∧dx_n∧dy_1∧…∧dy_n∧dz`.
    pub fn omega_coeff(&self) -> RatFn {
        let top: Vec<usize> = (0..2 * self.n + 1).collect();
        self.omega_vol.component(&top)
    }

    pub fn frame(&self) -> &HeisenbergFrame {
        &self.frame
    }

    pub fn reeb(&self) -> &VectorField {
        &self.frame.z
    }

    /// `i_X α`.
    pub fn alpha_of(&self, x: &VectorField) -> Result<RatFn, ContactError> {
        Ok(self
            .alpha
            .interior(x)?
            .as_function()
            .expect("contraction of a 1-form"))
    }

    pub(crate) fn check_field(&self, x: &VectorField) -> Result<(), ContactError> {
        if x.n() != self.n {
            return Err(ContactError::DimensionMismatch {
                model: self.n,
                value: x.n(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_fn(&self, f: &RatFn) -> Result<(), ContactError> {
        if f.n() != self.n {
            return Err(ContactError::DimensionMismatch {
                model: self.n,
                value: f.n(),
            });
        }
        Ok(())
    }

    /// Whether `i_X α = 0`.
    pub fn is_tangent(&self, x: &VectorField) -> Result<bool, ContactError> {
        self.check_field(x)?;
        Ok(self.alpha_of(x)?.is_zero())
    }

    /// Membership of a 2-form in `Ω²₀`: every contraction with two frame
    /// tangent fields vanishes.
    pub fn in_omega2_0(&self, w: &DiffForm) -> Result<bool, ContactError> {
        if w.degree() != 2 {
            return Ok(false);
        }
        let basis: Vec<&VectorField> = self.frame.tangent_basis().collect();
        for (i, t1) in basis.iter().enumerate() {
            let c1 = w.interior(t1)?;
            for t2 in &basis[i + 1..] {
                if !c1.interior(t2)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_dimension_rejected() {
        assert_eq!(
            DarbouxModel::new(0).unwrap_err(),
            ContactError::InvalidDimension(0)
        );
    }

    #[test]
    fn volume_forms() {
        let m1 = DarbouxModel::new(1).unwrap();
        assert_eq!(
            m1.omega_vol(),
            &DiffForm::basis(1, &[0, 1, 2], RatFn::one(1)).unwrap()
        );
        let m2 = DarbouxModel::new(2).unwrap();
        // 2·dx1∧dy1∧dx2∧dy2∧dz = −2·dx1∧dx2∧dy1∧dy2∧dz
        assert_eq!(
            m2.omega_vol(),
            &DiffForm::basis(2, &[0, 2, 1, 3, 4], RatFn::constant(2, Rat::from_int(2))).unwrap()
        );
        assert_eq!(m2.omega_coeff(), RatFn::constant(2, Rat::from_int(-2)));
        assert!(DarbouxModel::new(3).is_ok());
    }

    #[test]
    fn alpha_components() {
        let m = DarbouxModel::new(1).unwrap();
        let h = Rat::new(1, 2);
        assert_eq!(
            m.alpha().component(&[0]),
            RatFn::from_poly(-Poly::y(1, 0).scale(&h))
        );
        assert_eq!(
            m.alpha().component(&[1]),
            RatFn::from_poly(Poly::x(1, 0).scale(&h))
        );
        assert_eq!(m.alpha().component(&[2]), RatFn::one(1));
    }

    #[test]
    fn frame_contractions_of_d_alpha() {
        let m = DarbouxModel::new(2).unwrap();
        let f = m.frame();
        for i in 0..2 {
            for j in 0..2 {
                let ab = m
                    .d_alpha()
                    .interior(&f.b[j])
                    .unwrap()
                    .interior(&f.a[i])
                    .unwrap();
                let expected = if i == j {
                    RatFn::one(2)
                } else {
                    RatFn::zero(2)
                };
                assert_eq!(ab.as_function().unwrap(), expected);
                let aa = m
                    .d_alpha()
                    .interior(&f.a[j])
                    .unwrap()
                    .interior(&f.a[i])
                    .unwrap();
                assert!(aa.is_zero());
            }
        }
    }
}
