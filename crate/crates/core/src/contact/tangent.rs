//! Tangent fields: frame coordinates, the pairing `TVect ∧ TVect → CVect`,
//! the matrix action of contact fields, and the realization as weighted
//! 2-forms.

use crate::algebra::{Rat, RatFn};
use crate::exterior::{DiffForm, VectorField};

use super::{ContactError, DarbouxModel, Density, Hamiltonian};

/// Coordinates `(F, G)` of a tangent field `Σ (F_i A_i + G_i B_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentCoords {
    pub f: Vec<RatFn>,
    pub g: Vec<RatFn>,
}

impl TangentCoords {
    pub fn new(f: Vec<RatFn>, g: Vec<RatFn>) -> Result<Self, ContactError> {
        if f.len() != g.len() || f.is_empty() {
            return Err(ContactError::WrongArity {
                expected: f.len(),
                found: g.len(),
            });
        }
        Ok(TangentCoords { f, g })
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    /// `Σ (F_i A_i + G_i B_i)`.
    pub fn reconstruct(&self, m: &DarbouxModel) -> Result<VectorField, ContactError> {
        if self.n() != m.n() {
            return Err(ContactError::WrongArity {
                expected: m.n(),
                found: self.n(),
            });
        }
        let frame = m.frame();
        let mut out = VectorField::zero(m.n());
        for i in 0..m.n() {
            out = out.checked_add(&frame.a[i].scale(&self.f[i]))?;
            out = out.checked_add(&frame.b[i].scale(&self.g[i]))?;
        }
        Ok(out)
    }
}

/// Second-derivative blocks of a Hamiltonian in the frame.
///
/// Entry `(i, j)` of each block is the coefficient multiplying the `j`-th
/// input coordinate in the `i`-th output coordinate:
/// `ab[i][j] = A_j B_i (H)`, `bb[i][j] = B_j B_i (H)`,
/// `aa[i][j] = A_j A_i (H)`, `ba[i][j] = B_j A_i (H)`.
#[derive(Clone, Debug)]
pub struct ActionMatrix {
    pub aa: Vec<Vec<RatFn>>,
    pub ab: Vec<Vec<RatFn>>,
    pub ba: Vec<Vec<RatFn>>,
    pub bb: Vec<Vec<RatFn>>,
}

impl ActionMatrix {
    /// `A_i B_i(H) − B_i A_i(H)` for each `i`.
    pub fn partial_traces(&self) -> Vec<RatFn> {
        (0..self.ab.len())
            .map(|i| &self.ab[i][i] - &self.ba[i][i])
            .collect()
    }
}

/// The image of a tangent field in `Ω²₀ ⊗ 𝓕_{−2/(n+1)}`.
#[derive(Clone, Debug)]
pub struct RealizedTangent {
    pub two_form: DiffForm,
    pub weight_part: Density,
}

impl RealizedTangent {
    /// The same tensor with the density coefficient folded into the form.
    pub fn normalized(&self) -> RealizedTangent {
        let n = self.two_form.n();
        RealizedTangent {
            two_form: self.two_form.scale(&self.weight_part.coeff),
            weight_part: Density::new(RatFn::one(n), self.weight_part.weight.clone()),
        }
    }

    /// Leibniz rule over the tensor factors:
    /// `L_X(ω ⊗ φ) = L_X ω ⊗ φ + ω ⊗ L_X φ`.
    pub fn lie_derivative(
        &self,
        m: &DarbouxModel,
        x: &VectorField,
    ) -> Result<RealizedTangent, ContactError> {
        let lw = self.two_form.lie_derivative(x)?;
        let lphi = m.density_lie(x, &self.weight_part)?;
        let two_form = lw
            .scale(&self.weight_part.coeff)
            .checked_add(&self.two_form.scale(&lphi.coeff))?;
        Ok(RealizedTangent {
            two_form,
            weight_part: Density::new(RatFn::one(m.n()), self.weight_part.weight.clone()),
        })
    }
}

impl PartialEq for RealizedTangent {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.normalized(), other.normalized());
        a.weight_part.weight == b.weight_part.weight && a.two_form == b.two_form
    }
}

impl DarbouxModel {
    fn require_tangent(&self, x: &VectorField) -> Result<(), ContactError> {
        if !self.is_tangent(x)? {
            return Err(ContactError::NotTangent);
        }
        Ok(())
    }

    /// Frame coordinates of a tangent field, read from the `∂x` and `∂y`
    /// coefficients; the `∂z` coefficient is then forced and checked.
    pub fn tangent_coords(&self, y: &VectorField) -> Result<TangentCoords, ContactError> {
        self.require_tangent(y)?;
        let n = self.n();
        let f: Vec<RatFn> = (0..n).map(|i| y.coeff(i).clone()).collect();
        let g: Vec<RatFn> = (0..n).map(|i| -y.coeff(n + i)).collect();
        let half = Rat::new(1, 2);
        let mut forced = RatFn::zero(n);
        for i in 0..n {
            let yi = RatFn::from_poly(crate::algebra::Poly::y(n, i).scale(&half));
            let xi = RatFn::from_poly(crate::algebra::Poly::x(n, i).scale(&half));
            forced = &forced + &(&(&f[i] * &yi) + &(&g[i] * &xi));
        }
        if &forced != y.coeff(2 * n) {
            return Err(ContactError::InconsistentFrame);
        }
        Ok(TangentCoords { f, g })
    }

    /// `H_{X,Y} = α([X,Y]) = −i_Y i_X dα` for tangent `X`, `Y`.
    pub fn pairing(&self, x: &VectorField, y: &VectorField) -> Result<Hamiltonian, ContactError> {
        self.require_tangent(x)?;
        self.require_tangent(y)?;
        let c = self.d_alpha().interior(x)?.interior(y)?;
        Ok(Hamiltonian(-c.as_function().expect("0-form")))
    }

    /// Decomposes `[X,Y]` for tangent `X`, `Y`; the Hamiltonian part equals
    /// the pairing.
    pub fn bracket_tangent_split(
        &self,
        x: &VectorField,
        y: &VectorField,
    ) -> Result<(Hamiltonian, VectorField), ContactError> {
        let pairing = self.pairing(x, y)?;
        let (h, rest) = self.decompose(&x.lie_bracket(y)?)?;
        if h != pairing {
            return Err(ContactError::InvariantViolated(
                "Hamiltonian of [X,Y] differs from the pairing",
            ));
        }
        Ok((h, rest))
    }

    pub fn action_matrix(&self, h: &Hamiltonian) -> Result<ActionMatrix, ContactError> {
        let n = self.n();
        let frame = self.frame();
        let ah = frame
            .a
            .iter()
            .map(|a| a.apply(h.function()))
            .collect::<Result<Vec<_>, _>>()?;
        let bh = frame
            .b
            .iter()
            .map(|b| b.apply(h.function()))
            .collect::<Result<Vec<_>, _>>()?;
        let block = |outer: &[VectorField], inner: &[RatFn]| {
            (0..n)
                .map(|i| (0..n).map(|j| outer[j].apply(&inner[i])).collect())
                .collect::<Result<Vec<Vec<_>>, _>>()
        };
        Ok(ActionMatrix {
            aa: block(&frame.a, &ah)?,
            ab: block(&frame.a, &bh)?,
            ba: block(&frame.b, &ah)?,
            bb: block(&frame.b, &bh)?,
        })
    }

    /// Frame coordinates of `[X_H, Y]` computed by the first-order matrix
    /// operator `X_H·1 − [[AB, BB], [−AA, −BA]]`.
    pub fn matrix_action(
        &self,
        h: &Hamiltonian,
        t: &TangentCoords,
    ) -> Result<TangentCoords, ContactError> {
        let n = self.n();
        if t.n() != n {
            return Err(ContactError::WrongArity {
                expected: n,
                found: t.n(),
            });
        }
        let xh = self.hamiltonian_to_field(h)?;
        let mat = self.action_matrix(h)?;
        let mut f = Vec::with_capacity(n);
        let mut g = Vec::with_capacity(n);
        for i in 0..n {
            let mut fi = xh.apply(&t.f[i])?;
            let mut gi = xh.apply(&t.g[i])?;
            for j in 0..n {
                fi = &fi - &(&(&mat.ab[i][j] * &t.f[j]) + &(&mat.bb[i][j] * &t.g[j]));
                gi = &gi + &(&(&mat.aa[i][j] * &t.f[j]) + &(&mat.ba[i][j] * &t.g[j]));
            }
            f.push(fi);
            g.push(gi);
        }
        Ok(TangentCoords { f, g })
    }

    /// `Y ↦ −α ∧ i_Y dα ⊗ α^{−2}`.
    pub fn realize_tangent(&self, y: &VectorField) -> Result<RealizedTangent, ContactError> {
        self.require_tangent(y)?;
        let two_form = -&self.alpha().wedge(&self.d_alpha().interior(y)?)?;
        if !self.in_omega2_0(&two_form)? {
            return Err(ContactError::InvariantViolated(
                "realized form not in Omega^2_0",
            ));
        }
        let n = self.n() as i64;
        Ok(RealizedTangent {
            two_form,
            weight_part: Density::new(RatFn::one(self.n()), Rat::new(-2, n + 1)),
        })
    }
}
