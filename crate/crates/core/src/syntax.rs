//! Text syntax for polynomials and polynomial vector fields.
//!
//! A field is a signed sum of terms `coef*x1^2*x2 d1`; the trailing `d<i>`
//! names the direction `d/dx_i`. Polynomials use the same term grammar
//! without the direction marker. Coefficients are integers or fractions
//! (`1/2`). Printing is canonical: terms sorted by direction and then by
//! exponent vector, unit coefficients elided, so `parse(print(v)) == v`
//! and `print(parse(s)) == s` for any printed `s`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::{Exponents, Poly, Rational};

/// Maps variable names such as `x3` or `m1` to ring indices.
///
/// Variables are grouped by prefix; group `g` with `count` variables
/// occupies a contiguous block of indices, named `<prefix>1 .. <prefix><count>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarNames {
    groups: Vec<(String, usize)>,
}

impl VarNames {
    pub fn new(groups: Vec<(String, usize)>) -> Self {
        VarNames { groups }
    }

    /// `x1 .. xn`.
    pub fn coordinates(n: usize) -> Self {
        Self::new(vec![("x".into(), n)])
    }

    /// `m1 .. mn`, the base-point symbols of jet coefficients.
    pub fn base_point(n: usize) -> Self {
        Self::new(vec![("m".into(), n)])
    }

    /// `m1 .. mn, x1 .. xn`, the ring of extension families.
    pub fn family(n: usize) -> Self {
        Self::new(vec![("m".into(), n), ("x".into(), n)])
    }

    pub fn len(&self) -> usize {
        self.groups.iter().map(|(_, c)| c).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lookup(&self, ident: &str) -> Option<usize> {
        let mut offset = 0;
        for (prefix, count) in &self.groups {
            if let Some(rest) = ident.strip_prefix(prefix.as_str()) {
                if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) && !rest.starts_with('0') {
                    if let Ok(k) = rest.parse::<usize>() {
                        if (1..=*count).contains(&k) {
                            return Some(offset + k - 1);
                        }
                    }
                }
            }
            offset += count;
        }
        None
    }

    fn name(&self, mut index: usize) -> String {
        for (prefix, count) in &self.groups {
            if index < *count {
                return format!("{prefix}{}", index + 1);
            }
            index -= count;
        }
        panic!("variable index out of range")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, message: message.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = s[start..i].parse().map_err(|_| ParseError { pos: start, message: "bad number".into() })?;
            out.push((start, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
        } else if "+-*/^".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return err(i, format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

fn direction_of(ident: &str) -> Option<usize> {
    let rest = ident.strip_prefix('d')?;
    if rest.is_empty() || rest.starts_with('0') || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

/// One parsed term: coefficient, exponents, optional direction (zero based).
type Term = (Rational, Exponents, Option<usize>);

fn parse_terms(s: &str, vars: &VarNames) -> Result<Vec<Term>, ParseError> {
    let toks = tokenize(s)?;
    let nvars = vars.len();
    let mut terms = Vec::new();
    let mut i = 0;
    if toks.is_empty() {
        return err(0, "empty expression");
    }
    // bare "0" is the zero element
    if toks.len() == 1 && toks[0].1 == Tok::Num(BigInt::zero()) {
        return Ok(terms);
    }
    loop {
        let mut sign = Rational::one();
        match toks.get(i) {
            Some((_, Tok::Sym('-'))) => {
                sign = -sign;
                i += 1;
            }
            Some((_, Tok::Sym('+'))) if i > 0 => i += 1,
            Some((p, Tok::Sym('+'))) => return err(*p, "leading '+'"),
            _ if i > 0 => return err(toks[i.min(toks.len() - 1)].0, "expected '+' or '-'"),
            _ => {}
        }
        let mut coef = sign;
        let mut exps = vec![0u32; nvars];
        let mut dir = None;
        let mut expect_factor = true;
        while let Some((pos, tok)) = toks.get(i) {
            match tok {
                Tok::Ident(name) if direction_of(name).is_some() => {
                    let d = direction_of(name).unwrap();
                    if dir.is_some() {
                        return err(*pos, "two direction markers in one term");
                    }
                    dir = Some(d - 1);
                    i += 1;
                    expect_factor = false;
                    // direction marker ends the term
                    break;
                }
                Tok::Num(n) if expect_factor => {
                    i += 1;
                    let mut value = Rational::from_integer(n.clone());
                    if let Some((_, Tok::Sym('/'))) = toks.get(i) {
                        match toks.get(i + 1) {
                            Some((p, Tok::Num(d))) => {
                                if d.is_zero() {
                                    return err(*p, "zero denominator");
                                }
                                value /= Rational::from_integer(d.clone());
                                i += 2;
                            }
                            _ => return err(*pos, "expected denominator after '/'"),
                        }
                    }
                    coef *= value;
                    expect_factor = false;
                }
                Tok::Ident(name) if expect_factor => {
                    let Some(v) = vars.lookup(name) else {
                        return err(*pos, format!("unknown variable {name:?}"));
                    };
                    i += 1;
                    let mut power = 1u32;
                    if let Some((_, Tok::Sym('^'))) = toks.get(i) {
                        match toks.get(i + 1) {
                            Some((p, Tok::Num(k))) => {
                                power = u32::try_from(k).map_err(|_| ParseError { pos: *p, message: "exponent too large".into() })?;
                                i += 2;
                            }
                            _ => return err(*pos, "expected exponent after '^'"),
                        }
                    }
                    exps[v] += power;
                    expect_factor = false;
                }
                Tok::Sym('*') if !expect_factor => {
                    i += 1;
                    expect_factor = true;
                }
                Tok::Sym('+') | Tok::Sym('-') if !expect_factor => break,
                _ => return err(*pos, "unexpected token"),
            }
        }
        if expect_factor {
            let pos = toks.get(i).map(|t| t.0).unwrap_or(s.len());
            return err(pos, "incomplete term");
        }
        terms.push((coef, exps, dir));
        if i >= toks.len() {
            break;
        }
    }
    Ok(terms)
}

/// Parses a polynomial in the variables named by `vars`.
pub fn parse_poly(s: &str, vars: &VarNames) -> Result<Poly, ParseError> {
    let mut p = Poly::zero(vars.len());
    for (c, e, dir) in parse_terms(s, vars)? {
        if dir.is_some() {
            return err(0, "direction marker in a polynomial");
        }
        p.add_term(e, c);
    }
    Ok(p)
}

/// Parses a vector field with `dirs` directions; returns one polynomial per direction.
pub fn parse_field(s: &str, vars: &VarNames, dirs: usize) -> Result<Vec<Poly>, ParseError> {
    let mut comps: Vec<Poly> = (0..dirs).map(|_| Poly::zero(vars.len())).collect();
    for (c, e, dir) in parse_terms(s, vars)? {
        let Some(d) = dir else {
            return err(0, "term without direction marker d<i>");
        };
        if d >= dirs {
            return err(0, format!("direction d{} out of range 1..={dirs}", d + 1));
        }
        comps[d].add_term(e, c);
    }
    Ok(comps)
}

fn write_term(out: &mut String, first: bool, c: &Rational, e: &[u32], vars: &VarNames) {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let constant = e.iter().all(|&k| k == 0);
    let mut need_star = false;
    if constant || !abs.is_one() {
        let _ = write!(out, "{abs}");
        need_star = true;
    }
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if need_star {
            out.push('*');
        }
        out.push_str(&vars.name(i));
        if k > 1 {
            let _ = write!(out, "^{k}");
        }
        need_star = true;
    }
}

/// Canonical text of a polynomial; `"0"` for zero.
pub fn format_poly(p: &Poly, vars: &VarNames) -> String {
    let mut out = String::new();
    for (idx, (e, c)) in p.terms().enumerate() {
        write_term(&mut out, idx == 0, c, e, vars);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical text of a vector field given by its components.
pub fn format_field(components: &[Poly], vars: &VarNames) -> String {
    let mut out = String::new();
    let mut first = true;
    for (d, p) in components.iter().enumerate() {
        for (e, c) in p.terms() {
            write_term(&mut out, first, c, e, vars);
            let _ = write!(out, " d{}", d + 1);
            first = false;
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn parses_the_documented_example() {
        let vars = VarNames::coordinates(2);
        let f = parse_field("3*x1^2*x2 d1 - 1/2*x2 d2", &vars, 2).unwrap();
        assert_eq!(f[0], Poly::monomial(2, vec![2, 1], rat(3, 1)));
        assert_eq!(f[1], Poly::monomial(2, vec![0, 1], rat(-1, 2)));
        assert_eq!(format_field(&f, &vars), "3*x1^2*x2 d1 - 1/2*x2 d2");
    }

    #[test]
    fn canonical_form_sorts_and_merges() {
        let vars = VarNames::coordinates(2);
        let f = parse_field("x2 d2 + x1*x1 d1 + 2*x1^2 d1 - d2", &vars, 2).unwrap();
        assert_eq!(format_field(&f, &vars), "3*x1^2 d1 - 1 d2 + x2 d2");
    }

    #[test]
    fn zero_round_trips() {
        let vars = VarNames::coordinates(1);
        let f = parse_field("0", &vars, 1).unwrap();
        assert!(f[0].is_zero());
        assert_eq!(format_field(&f, &vars), "0");
        assert_eq!(format_poly(&Poly::zero(1), &vars), "0");
    }

    #[test]
    fn polynomial_with_base_point_symbols() {
        let vars = VarNames::family(2);
        let p = parse_poly("m1*x2 - 2/3*m2^2 + 5", &vars).unwrap();
        assert_eq!(p.coeff(&[1, 0, 0, 1]), rat(1, 1));
        assert_eq!(p.coeff(&[0, 2, 0, 0]), rat(-2, 3));
        assert_eq!(format_poly(&p, &vars), "5 - 2/3*m2^2 + m1*x2");
    }

    #[test]
    fn rejects_malformed_input() {
        let vars = VarNames::coordinates(2);
        assert!(parse_field("x3 d1", &vars, 2).is_err());
        assert!(parse_field("x1 d3", &vars, 2).is_err());
        assert!(parse_field("x1", &vars, 2).is_err());
        assert!(parse_field("x1 d1 +", &vars, 2).is_err());
        assert!(parse_field("x1 ** x2 d1", &vars, 2).is_err());
        assert!(parse_poly("1/0", &vars).is_err());
        assert!(parse_poly("x1 d1", &vars).is_err());
        assert!(parse_field("", &vars, 2).is_err());
    }
}
