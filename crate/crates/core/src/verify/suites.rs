//! One randomized check per identity. Each check draws its inputs from the
//! supplied generator and compares both sides with exact equality.

use std::fmt;

use crate::algebra::{AlgebraError, Rat, RatFn};
use crate::contact::{ContactError, DarbouxModel, Density, Hamiltonian};
use crate::exterior::{DiffForm, ExteriorError, VectorField};

use super::gen::Generator;

/// Why a single trial failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrialError {
    /// Both sides were computed but differ.
    Mismatch(String),
    /// An operation returned an error on valid input.
    Error(ContactError),
}

impl fmt::Display for TrialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrialError::Mismatch(s) => write!(f, "mismatch: {s}"),
            TrialError::Error(e) => write!(f, "{}: {e}", e.name()),
        }
    }
}

impl From<ContactError> for TrialError {
    fn from(e: ContactError) -> Self {
        TrialError::Error(e)
    }
}

impl From<AlgebraError> for TrialError {
    fn from(e: AlgebraError) -> Self {
        TrialError::Error(e.into())
    }
}

impl From<ExteriorError> for TrialError {
    fn from(e: ExteriorError) -> Self {
        TrialError::Error(e.into())
    }
}

type Trial = Result<(), TrialError>;

pub(crate) type Check = fn(&DarbouxModel, &mut Generator) -> Trial;

/// A named identity suite.
pub struct SuiteInfo {
    pub id: &'static str,
    /// The identity the suite checks, in formula form.
    pub identity: &'static str,
    pub(crate) check: Check,
}

pub const SUITES: &[SuiteInfo] = &[
    SuiteInfo {
        id: "homomorphism",
        identity: "[X_H1, X_H2] = X_{H1,H2}",
        check: homomorphism,
    },
    SuiteInfo {
        id: "jacobi",
        identity: "{{H1,H2},H3} + {{H2,H3},H1} + {{H3,H1},H2} = 0, {H1,H2} = X_H1(H2) - Z(H1) H2",
        check: jacobi,
    },
    SuiteInfo {
        id: "splitting",
        identity: "X = X_H + Y with H = alpha(X), i_Y alpha = 0; decompose(X_H' + Y') = (H', Y')",
        check: splitting,
    },
    SuiteInfo {
        id: "pairing-sympl",
        identity: "Gram matrix of H_{X,Y} on (A_1..A_n, B_1..B_n) = [[0, I], [-I, 0]]; skew, C-infinity bilinear",
        check: pairing_sympl,
    },
    SuiteInfo {
        id: "bracket-pairing",
        identity: "alpha([X,Y]) = H_{X,Y} for tangent X, Y",
        check: bracket_pairing,
    },
    SuiteInfo {
        id: "invariance-B",
        identity: "{H, H_{X,Y}} = H_{[X_H,X],Y} + H_{X,[X_H,Y]}",
        check: invariance_b,
    },
    SuiteInfo {
        id: "matrix-action",
        identity: "coords([X_H, Y]) = (X_H 1 - [[AB(H), BB(H)], [-AA(H), -BA(H)]]) (F, G)",
        check: matrix_action,
    },
    SuiteInfo {
        id: "trace",
        identity: "A_i B_i(H) - B_i A_i(H) = Z(H)",
        check: trace,
    },
    SuiteInfo {
        id: "density-bracket",
        identity: "L_{X_H1}(H2 Omega^{-1/(n+1)}) = {H1,H2} Omega^{-1/(n+1)}; L_{X_H} Omega = (n+1) Z(H) Omega",
        check: density_bracket,
    },
    SuiteInfo {
        id: "realize-equivariance",
        identity: "L_{X_H}(-alpha ^ i_Y d alpha (x) alpha^-2) = realize([X_H, Y]); image in Omega^2_0",
        check: realize_equivariance,
    },
    SuiteInfo {
        id: "rescale",
        identity: "alpha' = f alpha: H' = f H, H'_{X,Y} = f H_{X,Y}, Omega' = f^(n+1) Omega",
        check: rescale,
    },
    SuiteInfo {
        id: "integrand",
        identity: "(f H)^-(n+1) Omega' = H^-(n+1) Omega",
        check: integrand,
    },
    SuiteInfo {
        id: "reeb",
        identity: "i_Z' d alpha' = 0, alpha'(Z') = 1 for alpha' = f alpha; Z = d/dz for alpha",
        check: reeb,
    },
    SuiteInfo {
        id: "generic-field",
        identity: "contact field of (f alpha, f H) = contact field of (alpha, H) = X_H",
        check: generic_field,
    },
    SuiteInfo {
        id: "cartan",
        identity: "L_X = d i_X + i_X d agrees with the Leibniz extension; L_[X,Y] = [L_X, L_Y]",
        check: cartan,
    },
    SuiteInfo {
        id: "interior-bracket",
        identity: "i_[X,Y] = L_X i_Y - i_Y L_X",
        check: interior_bracket,
    },
    SuiteInfo {
        id: "field-jacobi",
        identity: "[[X,Y],W] + [[Y,W],X] + [[W,X],Y] = 0",
        check: field_jacobi,
    },
    SuiteInfo {
        id: "d-squared",
        identity: "d d w = 0; d(w ^ e) = dw ^ e + (-1)^|w| w ^ de",
        check: d_squared,
    },
];

pub fn find_suite(id: &str) -> Option<&'static SuiteInfo> {
    SUITES.iter().find(|s| s.id == id)
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Trial {
    if ok {
        Ok(())
    } else {
        Err(TrialError::Mismatch(what()))
    }
}

fn homomorphism(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let (h1, h2) = (g.hamiltonian(), g.hamiltonian());
    let lhs = m
        .hamiltonian_to_field(&h1)?
        .lie_bracket(&m.hamiltonian_to_field(&h2)?)?;
    let rhs = m.hamiltonian_to_field(&m.lagrange_bracket(&h1, &h2)?)?;
    ensure(lhs == rhs, || format!("H1 = {:?}, H2 = {:?}", h1, h2))
}

fn jacobi(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let (a, b, c) = (g.hamiltonian(), g.hamiltonian(), g.hamiltonian());
    let br = |p: &Hamiltonian, q: &Hamiltonian| m.lagrange_bracket(p, q);
    let t1 = br(&br(&a, &b)?, &c)?;
    let t2 = br(&br(&b, &c)?, &a)?;
    let t3 = br(&br(&c, &a)?, &b)?;
    let sum = &(&t1.0 + &t2.0) + &t3.0;
    ensure(sum.is_zero(), || format!("cyclic sum = {:?}", sum))
}

fn splitting(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let x = g.field();
    let (h, y) = m.decompose(&x)?;
    let rebuilt = m.hamiltonian_to_field(&h)?.checked_add(&y)?;
    ensure(rebuilt == x, || "X != X_H + Y".into())?;
    ensure(m.alpha_of(&y)?.is_zero(), || "remainder not tangent".into())?;
    ensure(h == m.field_to_hamiltonian(&x)?, || "H != alpha(X)".into())?;

    let (h2, y2) = (g.hamiltonian(), g.tangent_field(m));
    let x2 = m.hamiltonian_to_field(&h2)?.checked_add(&y2)?;
    let (h3, y3) = m.decompose(&x2)?;
    ensure(h3 == h2 && y3 == y2, || "decomposition not unique".into())
}

fn pairing_sympl(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let n = m.n();
    let basis: Vec<&VectorField> = m.frame().tangent_basis().collect();
    for (i, ei) in basis.iter().enumerate() {
        for (j, ej) in basis.iter().enumerate() {
            let expected = if j == i + n {
                1
            } else if i == j + n {
                -1
            } else {
                0
            };
            let got = m.pairing(ei, ej)?.0;
            ensure(got == RatFn::constant(n, Rat::from_int(expected)), || {
                format!("Gram[{i}][{j}] = {got:?}, expected {expected}")
            })?;
        }
    }
    let (x, y) = (g.tangent_field(m), g.tangent_field(m));
    let f = g.ratfn();
    let pxy = m.pairing(&x, &y)?.0;
    ensure(pxy == -m.pairing(&y, &x)?.0, || "pairing not skew".into())?;
    ensure(m.pairing(&x.scale(&f), &y)?.0 == &f * &pxy, || {
        "pairing not C-infinity linear".into()
    })?;
    let (s, t) = (m.tangent_coords(&x)?, m.tangent_coords(&y)?);
    let det = (0..n).fold(RatFn::zero(n), |acc, i| {
        &acc + &(&(&s.f[i] * &t.g[i]) - &(&s.g[i] * &t.f[i]))
    });
    ensure(pxy == det, || "determinant formula fails".into())
}

fn bracket_pairing(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let (x, y) = (g.tangent_field(m), g.tangent_field(m));
    let bracket = x.lie_bracket(&y)?;
    let lhs = m.alpha_of(&bracket)?;
    let rhs = m.pairing(&x, &y)?.0;
    ensure(lhs == rhs, || "alpha([X,Y]) != H_{X,Y}".into())?;
    let (h, rest) = m.bracket_tangent_split(&x, &y)?;
    ensure(h.0 == rhs && m.is_tangent(&rest)?, || {
        "split of [X,Y] wrong".into()
    })
}

fn invariance_b(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let h = g.hamiltonian();
    let (x, y) = (g.tangent_field(m), g.tangent_field(m));
    let xh = m.hamiltonian_to_field(&h)?;
    let lhs = m.lagrange_bracket(&h, &m.pairing(&x, &y)?)?;
    let r1 = m.pairing(&xh.lie_bracket(&x)?, &y)?;
    let r2 = m.pairing(&x, &xh.lie_bracket(&y)?)?;
    ensure(lhs.0 == &r1.0 + &r2.0, || "pairing not invariant".into())
}

fn matrix_action(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let h = g.hamiltonian();
    let t = g.tangent_coords();
    let y = t.reconstruct(m)?;
    let direct = m.tangent_coords(&m.hamiltonian_to_field(&h)?.lie_bracket(&y)?)?;
    let via_matrix = m.matrix_action(&h, &t)?;
    ensure(direct == via_matrix, || format!("H = {:?}", h))
}

fn trace(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let h = g.hamiltonian();
    let zh = m.reeb().apply(h.function())?;
    let traces = m.action_matrix(&h)?.partial_traces();
    ensure(traces.iter().all(|t| *t == zh), || format!("H = {:?}", h))
}

fn density_bracket(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let (h1, h2) = (g.hamiltonian(), g.hamiltonian());
    let x1 = m.hamiltonian_to_field(&h1)?;
    let lie = m.density_lie(&x1, &h2.as_density())?;
    let bracket = m.lagrange_bracket(&h1, &h2)?;
    ensure(lie == bracket.as_density(), || {
        "density action != bracket".into()
    })?;

    let n = m.n();
    let omega = Density::new(RatFn::one(n), Rat::one());
    let lie = m.density_lie(&x1, &omega)?;
    let zh = m.reeb().apply(h1.function())?;
    let expected = zh.scale(&Rat::from_int(n as i64 + 1));
    ensure(lie.coeff == expected, || {
        "L_X Omega != (n+1) Z(H) Omega".into()
    })?;
    // The same law read off the volume form itself.
    let lie_form = m.omega_vol().lie_derivative(&x1)?;
    ensure(lie_form == m.omega_vol().scale(&expected), || {
        "L_X Omega (as a form) != (n+1) Z(H) Omega".into()
    })
}

fn realize_equivariance(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let h = g.hamiltonian();
    let y = g.tangent_field(m);
    let xh = m.hamiltonian_to_field(&h)?;
    let realized = m.realize_tangent(&y)?;
    ensure(m.in_omega2_0(&realized.two_form)?, || {
        "image not in Omega^2_0".into()
    })?;
    let lhs = realized.lie_derivative(m, &xh)?;
    let rhs = m.realize_tangent(&xh.lie_bracket(&y)?)?;
    ensure(lhs == rhs, || "realization not equivariant".into())
}

fn rescale(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let f = g.rescale_fn();
    let r = m.rescale_contact_form(&f)?;
    let n = m.n();
    ensure(
        r.omega_vol == m.omega_vol().scale(&f.powi(n as i32 + 1)?),
        || "Omega' != f^(n+1) Omega".into(),
    )?;
    let h = g.hamiltonian();
    let xh = m.hamiltonian_to_field(&h)?;
    ensure(r.hamiltonian(&xh)?.0 == &f * h.function(), || {
        "H' != f H".into()
    })?;
    let (x, y) = (g.tangent_field(m), g.tangent_field(m));
    let lhs = r.pairing(&x, &y)?.0;
    ensure(lhs == &f * &m.pairing(&x, &y)?.0, || {
        "H'_{X,Y} != f H_{X,Y}".into()
    })
}

fn integrand(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let f = g.rescale_fn();
    let h = g.nonzero_hamiltonian();
    ensure(m.rescale_check_integrand(&f, &h)?, || {
        "integrand not invariant".into()
    })
}

fn reeb(m: &DarbouxModel, g: &mut Generator) -> Trial {
    ensure(&m.reeb_of(m.alpha())? == m.reeb(), || {
        "Reeb of alpha != d/dz".into()
    })?;
    let f = g.rescale_fn();
    let form = m.alpha().scale(&f);
    let z = m.reeb_of(&form)?;
    let normalized = form.interior(&z)?.as_function().expect("0-form");
    ensure(normalized.is_one(), || "alpha'(Z') != 1".into())?;
    ensure(form.ext_d()?.interior(&z)?.is_zero(), || {
        "i_Z' d alpha' != 0".into()
    })
}

fn generic_field(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let h = g.hamiltonian();
    let f = g.rescale_fn();
    let direct = m.generic_contact_field(m.alpha(), h.function())?;
    ensure(direct == m.hamiltonian_to_field(&h)?, || {
        "generic field != X_H".into()
    })?;
    let scaled = m.generic_contact_field(&m.alpha().scale(&f), &(&f * h.function()))?;
    ensure(scaled == direct, || {
        "contact field depends on the form".into()
    })
}

fn cartan(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let n = m.n();
    let x = g.field();
    let (f, p, q) = (g.ratfn(), g.ratfn(), g.ratfn());
    let dp = DiffForm::function(p.clone()).ext_d()?;
    let dq = DiffForm::function(q.clone()).ext_d()?;
    // L_X(f dp ∧ dq) by Leibniz from L_X f = X(f) and L_X dp = d(X(p)).
    let w = dp.wedge(&dq)?.scale(&f);
    let d_xp = DiffForm::function(x.apply(&p)?).ext_d()?;
    let d_xq = DiffForm::function(x.apply(&q)?).ext_d()?;
    let leibniz = &(&dp.wedge(&dq)?.scale(&x.apply(&f)?) + &d_xp.wedge(&dq)?.scale(&f))
        + &dp.wedge(&d_xq)?.scale(&f);
    ensure(w.lie_derivative(&x)? == leibniz, || {
        "Cartan != Leibniz".into()
    })?;

    let y = g.field();
    let k = 1 + g.index(2 * n);
    let eta = g.form(k);
    let xy = x.lie_bracket(&y)?;
    let lhs = eta.lie_derivative(&xy)?;
    let rhs = &eta.lie_derivative(&y)?.lie_derivative(&x)?
        - &eta.lie_derivative(&x)?.lie_derivative(&y)?;
    ensure(lhs == rhs, || "L_[X,Y] != [L_X, L_Y]".into())
}

fn interior_bracket(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let n = m.n();
    let (x, y) = (g.field(), g.field());
    let k = 1 + g.index(2 * n + 1);
    let w = g.form(k);
    let lhs = w.interior(&x.lie_bracket(&y)?)?;
    let iy = w.interior(&y)?;
    let rhs = &iy.lie_derivative(&x)? - &w.lie_derivative(&x)?.interior(&y)?;
    ensure(lhs == rhs, || "i_[X,Y] != L_X i_Y - i_Y L_X".into())
}

fn field_jacobi(_m: &DarbouxModel, g: &mut Generator) -> Trial {
    let (x, y, w) = (g.field(), g.field(), g.field());
    let a = x.lie_bracket(&y)?.lie_bracket(&w)?;
    let b = y.lie_bracket(&w)?.lie_bracket(&x)?;
    let c = w.lie_bracket(&x)?.lie_bracket(&y)?;
    ensure((&(&a + &b) + &c).is_zero(), || {
        "Jacobi fails for fields".into()
    })
}

fn d_squared(m: &DarbouxModel, g: &mut Generator) -> Trial {
    let top = 2 * m.n() + 1;
    for k in 0..top {
        let w = g.form(k);
        ensure(w.ext_d()?.ext_d()?.is_zero(), || {
            format!("d d w != 0 in degree {k}")
        })?;
    }
    let k = g.index(top);
    let l = g.index(top - k);
    let (w, e) = (g.form(k), g.form(l));
    let lhs = w.wedge(&e)?.ext_d()?;
    let first = w.ext_d()?.wedge(&e)?;
    let second = w.wedge(&e.ext_d()?)?;
    let rhs = if k.is_multiple_of(2) {
        &first + &second
    } else {
        &first - &second
    };
    ensure(lhs == rhs, || "graded Leibniz rule fails for d".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::gen::GenConfig;

    #[test]
    fn every_suite_has_an_identity() {
        for s in SUITES {
            assert!(!s.identity.trim().is_empty(), "{} lacks an identity", s.id);
        }
        let mut ids: Vec<_> = SUITES.iter().map(|s| s.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), SUITES.len());
    }

    #[test]
    fn each_suite_passes_a_few_trials_n1() {
        let m = DarbouxModel::new(1).unwrap();
        for s in SUITES {
            for seed in 0..3 {
                let mut g = Generator::new(GenConfig::new(seed, 1));
                (s.check)(&m, &mut g).unwrap_or_else(|e| panic!("{}: {e}", s.id));
            }
        }
    }
}
