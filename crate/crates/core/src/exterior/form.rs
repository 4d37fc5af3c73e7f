use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::algebra::{Rat, RatFn};

use super::{ExteriorError, VectorField};

/// Differential `k`-form over rational-function coefficients.
///
/// Components are keyed by strictly increasing index tuples into the
/// coordinate list `(x_1..x_n, y_1..y_n, z)`; zero components are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffForm {
    n: usize,
    degree: usize,
    comps: BTreeMap<Vec<usize>, RatFn>,
}

/// Sign of the permutation that sorts `a ++ b`, or `None` if they share an
/// index. Both inputs must be strictly increasing.
fn shuffle_sign(a: &[usize], b: &[usize]) -> Option<(bool, Vec<usize>)> {
    let mut inversions = 0usize;
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            merged.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            // b[j] jumps over the remaining a[i..].
            inversions += a.len() - i;
            merged.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((inversions % 2 == 1, merged))
}

impl DiffForm {
    pub fn zero(n: usize, degree: usize) -> Self {
        DiffForm {
            n,
            degree,
            comps: BTreeMap::new(),
        }
    }

    /// The 0-form `f`.
    pub fn function(f: RatFn) -> Self {
        let mut out = Self::zero(f.n(), 0);
        if !f.is_zero() {
            out.comps.insert(Vec::new(), f);
        }
        out
    }

    /// `coeff · dx^{i_1} ∧ … ∧ dx^{i_k}` for arbitrary (unsorted) indices.
    pub fn basis(n: usize, indices: &[usize], coeff: RatFn) -> Result<Self, ExteriorError> {
        let nvars = 2 * n + 1;
        if let Some(&bad) = indices.iter().find(|&&i| i >= nvars) {
            return Err(ExteriorError::IndexOutOfRange { index: bad, nvars });
        }
        let mut sorted = indices.to_vec();
        let mut odd = false;
        // insertion sort, tracking parity
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        let mut out = Self::zero(n, indices.len());
        if sorted.windows(2).any(|w| w[0] == w[1]) || coeff.is_zero() {
            return Ok(out);
        }
        out.comps.insert(sorted, if odd { -coeff } else { coeff });
        Ok(out)
    }

    /// Builds from `(indices, coeff)` pairs, summing repeated entries.
    pub fn from_components<I>(n: usize, degree: usize, comps: I) -> Result<Self, ExteriorError>
    where
        I: IntoIterator<Item = (Vec<usize>, RatFn)>,
    {
        let mut out = Self::zero(n, degree);
        for (idx, c) in comps {
            if idx.len() != degree {
                return Err(ExteriorError::DegreeMismatch {
                    left: degree,
                    right: idx.len(),
                });
            }
            out = out.checked_add(&Self::basis(n, &idx, c)?)?;
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Non-zero components in increasing index order.
    pub fn components(&self) -> impl Iterator<Item = (&[usize], &RatFn)> {
        self.comps.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Coefficient of a strictly increasing index tuple.
    pub fn component(&self, indices: &[usize]) -> RatFn {
        self.comps
            .get(indices)
            .cloned()
            .unwrap_or_else(|| RatFn::zero(self.n))
    }

    /// The function of a 0-form.
    pub fn as_function(&self) -> Option<RatFn> {
        (self.degree == 0).then(|| self.component(&[]))
    }

    fn insert_add(&mut self, key: Vec<usize>, c: RatFn) {
        use std::collections::btree_map::Entry;
        match self.comps.entry(key) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_compat(&self, other: &DiffForm) -> Result<(), ExteriorError> {
        if self.n != other.n {
            return Err(ExteriorError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.degree != other.degree {
            return Err(ExteriorError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &DiffForm) -> Result<DiffForm, ExteriorError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (k, v) in &other.comps {
            out.insert_add(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &DiffForm) -> Result<DiffForm, ExteriorError> {
        self.checked_add(&-other)
    }

    /// Pointwise product `f·ω`.
    pub fn scale(&self, f: &RatFn) -> DiffForm {
        let mut out = Self::zero(self.n, self.degree);
        if f.is_zero() {
            return out;
        }
        for (k, v) in &self.comps {
            out.comps.insert(k.clone(), v * f);
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> DiffForm {
        self.scale(&RatFn::constant(self.n, c.clone()))
    }

    /// Exterior product with the shuffle-sign convention.
    pub fn wedge(&self, other: &DiffForm) -> Result<DiffForm, ExteriorError> {
        if self.n != other.n {
            return Err(ExteriorError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = Self::zero(self.n, self.degree + other.degree);
        for (ka, va) in &self.comps {
            for (kb, vb) in &other.comps {
                if let Some((odd, key)) = shuffle_sign(ka, kb) {
                    let c = va * vb;
                    out.insert_add(key, if odd { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Exterior derivative. The top-degree input yields the zero form of
    /// degree `2n+2`.
    pub fn ext_d(&self) -> Result<DiffForm, ExteriorError> {
        let nvars = 2 * self.n + 1;
        let mut out = Self::zero(self.n, self.degree + 1);
        for (key, c) in &self.comps {
            for j in 0..nvars {
                if key.contains(&j) {
                    continue;
                }
                let d = c.partial(j)?;
                if d.is_zero() {
                    continue;
                }
                let pos = key.iter().take_while(|&&i| i < j).count();
                let mut k2 = key.clone();
                k2.insert(pos, j);
                out.insert_add(k2, if pos % 2 == 1 { -d } else { d });
            }
        }
        Ok(out)
    }

    /// Interior product `i_X ω`, contracting the first slot.
    pub fn interior(&self, x: &VectorField) -> Result<DiffForm, ExteriorError> {
        if self.degree == 0 {
            return Err(ExteriorError::DegreeZero);
        }
        if self.n != x.n() {
            return Err(ExteriorError::DimensionMismatch {
                left: self.n,
                right: x.n(),
            });
        }
        let mut out = Self::zero(self.n, self.degree - 1);
        for (key, c) in &self.comps {
            for (m, &i) in key.iter().enumerate() {
                let xi = x.coeff(i);
                if xi.is_zero() {
                    continue;
                }
                let mut k2 = key.clone();
                k2.remove(m);
                let t = c * xi;
                out.insert_add(k2, if m % 2 == 1 { -t } else { t });
            }
        }
        Ok(out)
    }

    /// Lie derivative via Cartan's formula `L_X = d∘i_X + i_X∘d`; on
    /// functions it is `X(f)`.
    pub fn lie_derivative(&self, x: &VectorField) -> Result<DiffForm, ExteriorError> {
        if self.degree == 0 {
            let f = self.component(&[]);
            return Ok(DiffForm::function(x.apply(&f)?));
        }
        let d_of_i = self.interior(x)?.ext_d()?;
        if self.degree == 2 * self.n + 1 {
            return Ok(d_of_i);
        }
        let i_of_d = self.ext_d()?.interior(x)?;
        d_of_i.checked_add(&i_of_d)
    }
}

impl<'a> Add<&'a DiffForm> for &'a DiffForm {
    type Output = DiffForm;
    fn add(self, rhs: &DiffForm) -> DiffForm {
        self.checked_add(rhs).expect("incompatible forms")
    }
}

impl<'a> Sub<&'a DiffForm> for &'a DiffForm {
    type Output = DiffForm;
    fn sub(self, rhs: &DiffForm) -> DiffForm {
        self.checked_sub(rhs).expect("incompatible forms")
    }
}

impl Neg for &DiffForm {
    type Output = DiffForm;
    fn neg(self) -> DiffForm {
        DiffForm {
            n: self.n,
            degree: self.degree,
            comps: self.comps.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}
