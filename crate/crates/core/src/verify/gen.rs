use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, Poly, Rat, RatFn};
use crate::contact::{DarbouxModel, Hamiltonian, TangentCoords};
use crate::exterior::{DiffForm, VectorField};

use super::VerifyError;

/// Parameters for the random value generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    pub seed: u64,
    pub n: usize,
    pub max_degree: u32,
    pub max_terms: usize,
    pub coeff_bound: i64,
}

impl GenConfig {
    pub fn new(seed: u64, n: usize) -> Self {
        GenConfig {
            seed,
            n,
            max_degree: 3,
            max_terms: 4,
            coeff_bound: 5,
        }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.n == 0 {
            return Err(VerifyError::InvalidConfig("n must be at least 1"));
        }
        if self.coeff_bound < 1 && self.max_terms > 0 {
            return Err(VerifyError::InvalidConfig("coeff_bound must be positive"));
        }
        Ok(())
    }

    /// Same parameters, different seed.
    pub fn with_seed(&self, seed: u64) -> Self {
        GenConfig {
            seed,
            ..self.clone()
        }
    }
}

/// SplitMix64 finalizer; derives independent per-trial seeds.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic stream of random polynomials, fields and forms.
pub struct Generator {
    cfg: GenConfig,
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(cfg: GenConfig) -> Self {
        let rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        Generator { cfg, rng }
    }

    pub fn config(&self) -> &GenConfig {
        &self.cfg
    }

    pub fn n(&self) -> usize {
        self.cfg.n
    }

    fn monomial(&mut self, max_degree: u32) -> Monomial {
        let nvars = 2 * self.cfg.n + 1;
        let deg = self.rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; nvars];
        for _ in 0..deg {
            exps[self.rng.gen_range(0..nvars)] += 1;
        }
        Monomial::from_exponents(&exps)
    }

    fn coefficient(&mut self) -> Rat {
        let b = self.cfg.coeff_bound;
        let mut c = self.rng.gen_range(1..=b);
        if self.rng.gen_bool(0.5) {
            c = -c;
        }
        Rat::from_int(c)
    }

    fn poly_with(&mut self, max_degree: u32, max_terms: usize) -> Poly {
        if max_terms == 0 {
            return Poly::zero(self.cfg.n);
        }
        let k = self.rng.gen_range(1..=max_terms);
        let terms: Vec<_> = (0..k)
            .map(|_| (self.monomial(max_degree), self.coefficient()))
            .collect();
        Poly::from_terms(self.cfg.n, terms)
    }

    /// At most `max_terms` monomials of total degree at most `max_degree`,
    /// coefficients in `[−coeff_bound, coeff_bound] \ {0}`.
    pub fn poly(&mut self) -> Poly {
        self.poly_with(self.cfg.max_degree, self.cfg.max_terms)
    }

    pub fn nonzero_poly(&mut self) -> Poly {
        loop {
            let p = self.poly_with(self.cfg.max_degree, self.cfg.max_terms.max(1));
            if !p.is_zero() {
                return p;
            }
        }
    }

    pub fn ratfn(&mut self) -> RatFn {
        RatFn::from_poly(self.poly())
    }

    pub fn hamiltonian(&mut self) -> Hamiltonian {
        Hamiltonian(self.ratfn())
    }

    pub fn nonzero_hamiltonian(&mut self) -> Hamiltonian {
        Hamiltonian(RatFn::from_poly(self.nonzero_poly()))
    }

    /// Arbitrary field in the coordinate frame.
    pub fn field(&mut self) -> VectorField {
        let coeffs = (0..2 * self.cfg.n + 1).map(|_| self.poly()).collect();
        VectorField::from_polys(self.cfg.n, coeffs).expect("field arity")
    }

    pub fn tangent_coords(&mut self) -> TangentCoords {
        let f = (0..self.cfg.n).map(|_| self.ratfn()).collect();
        let g = (0..self.cfg.n).map(|_| self.ratfn()).collect();
        TangentCoords { f, g }
    }

    /// `Σ (F_i A_i + G_i B_i)` from random `F`, `G`; tangent by construction.
    pub fn tangent_field(&mut self, m: &DarbouxModel) -> VectorField {
        self.tangent_coords()
            .reconstruct(m)
            .expect("generator matches model dimension")
    }

    /// A random `k`-form with polynomial coefficients.
    pub fn form(&mut self, degree: usize) -> DiffForm {
        let n = self.cfg.n;
        let nvars = 2 * n + 1;
        let count = self.rng.gen_range(1..=3);
        let comps: Vec<_> = (0..count)
            .map(|_| {
                let idx: Vec<usize> = (0..degree).map(|_| self.rng.gen_range(0..nvars)).collect();
                (idx, self.ratfn())
            })
            .collect();
        comps
            .into_iter()
            .fold(DiffForm::zero(n, degree), |acc, (idx, c)| {
                &acc + &DiffForm::basis(n, &idx, c).expect("index in range")
            })
    }

    /// `1 + p²` with `p` nonzero and without constant term: nonconstant and
    /// positive wherever defined.
    pub fn rescale_fn(&mut self) -> RatFn {
        let n = self.cfg.n;
        let deg = self.cfg.max_degree.clamp(1, 2);
        loop {
            let p = self.poly_with(deg, self.cfg.max_terms.clamp(1, 2));
            let p = &p - &Poly::constant(n, p.constant_term());
            if !p.is_zero() {
                return RatFn::from_poly(&Poly::one(n) + &(&p * &p));
            }
        }
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }
}
