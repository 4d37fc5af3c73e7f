//! Canonical text form of kernel values. The output re-parses (with
//! [`super::syntax`]) to an equal value.

use std::fmt::Write;

use crate::algebra::{Monomial, Poly, Rat, RatFn};
use crate::contact::Density;
use crate::exterior::{DiffForm, VectorField};

pub fn variable_name(index: usize, n: usize) -> String {
    if index < n {
        format!("x{}", index + 1)
    } else if index < 2 * n {
        format!("y{}", index - n + 1)
    } else {
        "z".to_string()
    }
}

fn monomial(m: &Monomial, n: usize) -> String {
    let mut parts = Vec::new();
    for (v, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(variable_name(v, n)),
            _ => parts.push(format!("{}^{}", variable_name(v, n), e)),
        }
    }
    parts.join("*")
}

/// A term without its sign, e.g. `3/2*x1^2` or `y1` or `5`.
fn unsigned_term(m: &Monomial, c: &Rat, n: usize) -> String {
    let c = c.abs();
    if m.is_one() {
        c.to_string()
    } else if c.is_one() {
        monomial(m, n)
    } else {
        format!("{}*{}", c, monomial(m, n))
    }
}

pub fn poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        match (k, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&unsigned_term(m, c, p.n()));
    }
    out
}

fn is_bare_power(p: &Poly) -> bool {
    match p.terms() {
        [(m, c)] => c.is_one() && m.exponents().iter().filter(|&&e| e > 0).count() <= 1,
        _ => false,
    }
}

pub fn ratfn(f: &RatFn) -> String {
    if f.den().is_one() {
        return poly(f.num());
    }
    let num = if f.num().terms().len() > 1 {
        format!("({})", poly(f.num()))
    } else {
        poly(f.num())
    };
    let den = if is_bare_power(f.den()) {
        poly(f.den())
    } else {
        format!("({})", poly(f.den()))
    };
    format!("{num}/{den}")
}

/// A coefficient in a linear combination: the sign separately, the rest
/// bracketed unless it is a single polynomial term.
fn coefficient(f: &RatFn) -> (bool, String) {
    if f.den().is_one() {
        if let [(m, c)] = f.num().terms() {
            return (c.is_negative(), unsigned_term(m, c, f.n()));
        }
    }
    (false, format!("({})", ratfn(f)))
}

fn combination<'a>(items: impl Iterator<Item = (&'a RatFn, String)>) -> String {
    let mut out = String::new();
    for (coeff, basis) in items {
        if coeff.is_zero() {
            continue;
        }
        let (neg, body) = coefficient(coeff);
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        let _ = write!(out, "{body} {basis}");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn field(x: &VectorField) -> String {
    let n = x.n();
    combination(
        x.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (c, format!("d/d{}", variable_name(k, n)))),
    )
}

pub fn form(w: &DiffForm) -> String {
    if let Some(f) = w.as_function() {
        return ratfn(&f);
    }
    let n = w.n();
    combination(w.components().map(|(idx, c)| {
        let basis: Vec<String> = idx
            .iter()
            .map(|&i| format!("d{}", variable_name(i, n)))
            .collect();
        (c, basis.join("^"))
    }))
}

pub fn density(d: &Density) -> String {
    let (neg, body) = coefficient(&d.coeff);
    let sign = if neg { "-" } else { "" };
    format!("{sign}{body} * Omega^{}", d.weight)
}

pub fn list(items: &[RatFn]) -> String {
    let parts: Vec<String> = items.iter().map(ratfn).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::syntax::parse_ratfn;
    use crate::contact::DarbouxModel;

    #[test]
    fn polynomial_order_and_signs() {
        let p = parse_ratfn("-3/2*z + y1*x1^2", 1).unwrap();
        assert_eq!(ratfn(&p), "x1^2*y1 - 3/2*z");
        assert_eq!(ratfn(&parse_ratfn("-x1 + 1", 1).unwrap()), "-x1 + 1");
        assert_eq!(ratfn(&parse_ratfn("0*x", 1).unwrap()), "0");
        assert_eq!(ratfn(&parse_ratfn("-7/3", 1).unwrap()), "-7/3");
    }

    #[test]
    fn fractions_bracket_where_needed() {
        assert_eq!(ratfn(&parse_ratfn("1/x", 1).unwrap()), "1/x1");
        assert_eq!(
            ratfn(&parse_ratfn("(x+1)/(x*y)", 1).unwrap()),
            "(x1 + 1)/(x1*y1)"
        );
        assert_eq!(
            ratfn(&parse_ratfn("x/(y^2 - 1)", 1).unwrap()),
            "x1/(y1^2 - 1)"
        );
        assert_eq!(ratfn(&parse_ratfn("-x/y^3", 1).unwrap()), "-x1/y1^3");
        assert_eq!(ratfn(&parse_ratfn("x/(2*y)", 1).unwrap()), "1/2*x1/y1");
    }

    #[test]
    fn model_forms() {
        let m = DarbouxModel::new(1).unwrap();
        assert_eq!(form(m.alpha()), "-1/2*y1 dx1 + 1/2*x1 dy1 + 1 dz");
        assert_eq!(form(m.d_alpha()), "1 dx1^dy1");
        assert_eq!(field(m.reeb()), "1 d/dz");
        assert_eq!(field(&m.frame().b[0]), "-1 d/dy1 + 1/2*x1 d/dz");
        assert_eq!(field(&VectorField::zero(1)), "0");
        assert_eq!(form(&DiffForm::zero(1, 2)), "0");
    }

    #[test]
    fn compound_coefficients() {
        let x = VectorField::new(
            1,
            vec![
                parse_ratfn("x + y", 1).unwrap(),
                parse_ratfn("-x*y", 1).unwrap(),
                parse_ratfn("1/x", 1).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(field(&x), "(x1 + y1) d/dx1 - x1*y1 d/dy1 + (1/x1) d/dz");
    }

    #[test]
    fn densities() {
        let d = Density::new(parse_ratfn("x - z", 1).unwrap(), Rat::new(-1, 2));
        assert_eq!(density(&d), "(x1 - z) * Omega^-1/2");
        let d = Density::new(RatFn::one(1), Rat::from_int(-1));
        assert_eq!(density(&d), "1 * Omega^-1");
    }
}
