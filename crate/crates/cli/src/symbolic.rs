//! Symbolic form of the six-variable SU(2,2) system: parsing the golden
//! list and printing computed inequalities in the same notation.

use momentcone::polytope::Inequality;
use momentcone::vector::Vector;
use momentcone::Rational;
use num_traits::{One, Signed, Zero};

pub const VARS: [&str; 6] = ["lambda1", "lambda2", "mu1", "mu2", "nu1", "nu2"];

fn var_index(name: &str) -> Option<usize> {
    VARS.iter().position(|v| *v == name)
}

/// Parses `"-lambda1 + 2 mu2 - nu1"` into coefficients over [`VARS`] plus
/// a constant term.
pub fn parse_linear(expr: &str) -> Result<(Vec<Rational>, Rational), String> {
    let mut coeffs = vec![Rational::zero(); VARS.len()];
    let mut constant = Rational::zero();
    let spaced = expr.replace('+', " + ").replace('-', " - ");
    let mut sign = Rational::one();
    let mut factor: Option<Rational> = None;
    let mut seen_term = false;
    for tok in spaced.split_whitespace() {
        match tok {
            "+" | "-" => {
                if let Some(c) = factor.take() {
                    constant += c * sign.clone();
                    sign = Rational::one();
                    seen_term = true;
                }
                if tok == "-" {
                    sign = -sign;
                }
            }
            _ => {
                if let Some(i) = var_index(tok) {
                    let c = factor.take().unwrap_or_else(Rational::one) * sign.clone();
                    coeffs[i] += c;
                    sign = Rational::one();
                    seen_term = true;
                } else if let Some(x) = momentcone::scalar::parse_fraction::<Rational>(tok) {
                    if factor.replace(x).is_some() {
                        return Err(format!("two numbers in a row in {expr:?}"));
                    }
                } else {
                    return Err(format!("unknown token {tok:?} in {expr:?}"));
                }
            }
        }
    }
    if let Some(c) = factor {
        constant += c * sign;
        seen_term = true;
    }
    if !seen_term {
        return Err(format!("empty expression {expr:?}"));
    }
    Ok((coeffs, constant))
}

fn vec(c: Vec<Rational>) -> Vector<Rational> {
    Vector::new(c)
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// One golden line, `lhs <= rhs` or `lhs >= rhs`; a right-hand side
/// `|x|` after `>=` expands to two inequalities.
pub fn parse_line(line: &str) -> Result<Vec<Inequality<Rational>>, String> {
    let (lhs, rhs, geq) = if let Some((l, r)) = line.split_once("<=") {
        (l, r, false)
    } else if let Some((l, r)) = line.split_once(">=") {
        (l, r, true)
    } else {
        return Err(format!("no comparison in {line:?}"));
    };
    let (lc, lk) = parse_linear(lhs)?;
    let rhs = rhs.trim();
    let rhs_variants: Vec<(Vec<Rational>, Rational)> =
        if let Some(inner) = rhs.strip_prefix('|').and_then(|r| r.strip_suffix('|')) {
            if !geq {
                return Err(format!("|x| is only supported after >=: {line:?}"));
            }
            let (c, k) = parse_linear(inner)?;
            let neg = c.iter().map(|x| -x.clone()).collect();
            vec![(c, k.clone()), (neg, -k)]
        } else {
            vec![parse_linear(rhs)?]
        };
    Ok(rhs_variants
        .into_iter()
        .map(|(rc, rk)| {
            // lhs - rhs <= 0 (or >= 0)
            let d = sub(&lc, &rc);
            let k = rk - lk.clone();
            if geq {
                Inequality::at_least(vec(d), k)
            } else {
                Inequality::new(vec(d), k)
            }
        })
        .collect())
}

/// Parses a whole golden file, skipping blank lines and `#` comments.
pub fn parse_system(text: &str) -> Result<Vec<Inequality<Rational>>, String> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.extend(parse_line(line)?);
    }
    Ok(out)
}

fn render_linear(coeffs: &[Rational], names: &[&str], constant: &Rational) -> String {
    let mut out = String::new();
    let terms = coeffs
        .iter()
        .zip(names)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| (c.clone(), Some(*n)))
        .chain((!constant.is_zero()).then(|| (constant.clone(), None)));
    for (c, name) in terms {
        let mag = c.abs();
        let body = match name {
            Some(n) if mag.is_one() => n.to_string(),
            Some(n) => format!("{mag} {n}"),
            None => mag.to_string(),
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `a . x <= b` over [`VARS`], written with the `nu` terms on the left and a
/// positive leading `nu` coefficient; inequalities free of `nu` are written
/// as `expr >= const`.
pub fn render(h: &Inequality<Rational>) -> String {
    let a = h.normal().coords();
    let b = h.offset();
    let (other, nu) = a.split_at(4);
    let neg = |xs: &[Rational]| -> Vec<Rational> { xs.iter().map(|x| -x.clone()).collect() };
    match nu.iter().find(|c| !c.is_zero()) {
        Some(lead) if lead.is_positive() => format!(
            "{} <= {}",
            render_linear(nu, &VARS[4..], &Rational::zero()),
            render_linear(&neg(other), &VARS[..4], b)
        ),
        Some(_) => format!(
            "{} >= {}",
            render_linear(&neg(nu), &VARS[4..], &Rational::zero()),
            render_linear(other, &VARS[..4], &-b.clone())
        ),
        None => format!(
            "{} >= {}",
            render_linear(&neg(other), &VARS[..4], &Rational::zero()),
            render_linear(&[], &[], &-b.clone())
        ),
    }
}

/// The six chamber inequalities `x1 >= x2 >= 0` for each weight.
pub fn chamber() -> Vec<Inequality<Rational>> {
    let mut out = Vec::new();
    for block in 0..3 {
        let mut d = vec![Rational::zero(); 6];
        d[2 * block] = -Rational::one();
        d[2 * block + 1] = Rational::one();
        out.push(Inequality::new(Vector::new(d), Rational::zero()));
        let mut z = vec![Rational::zero(); 6];
        z[2 * block + 1] = -Rational::one();
        out.push(Inequality::new(Vector::new(z), Rational::zero()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use momentcone::ExactField;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn parses_linear_forms() {
        let (c, k) = parse_linear("-lambda1 + 2 mu2 - nu1 + 3").unwrap();
        assert_eq!(c, vec![q(-1), q(0), q(0), q(2), q(-1), q(0)]);
        assert_eq!(k, q(3));
        assert!(parse_linear("kappa1").is_err());
        assert!(parse_linear("").is_err());
    }

    #[test]
    fn absolute_values_expand() {
        assert_eq!(parse_linear("2 - mu1").unwrap().1, q(2));
        assert_eq!(parse_linear("2 - mu1").unwrap().0[2], q(-1));
        let hs = parse_line("nu1 >= |lambda1 - mu1|").unwrap();
        let text: Vec<String> = hs.iter().map(render).collect();
        assert_eq!(text, ["nu1 >= lambda1 - mu1", "nu1 >= -lambda1 + mu1"]);
        assert!(parse_line("nu1 <= |lambda1|").is_err());
    }

    #[test]
    fn render_round_trips() {
        for line in [
            "nu1 <= lambda1 + mu1",
            "nu1 - nu2 >= -lambda1 - lambda2 + mu1 - mu2",
            "nu1 + nu2 <= lambda1 + lambda2 + mu1 + mu2",
            "nu2 >= 0",
            "lambda1 - lambda2 >= 0",
        ] {
            let h = parse_line(line).unwrap();
            assert_eq!(render(&h[0]), line);
        }
    }
}
