//! Text input for polynomials.
//!
//! Two forms are accepted: a comma-separated ascending coefficient list
//! `c0,c1,...,cn` of exact rationals (`p/q` allowed), and an expression in
//! `x`, `a0..an`, integers, `+ - * ^` and parentheses. Division by an integer
//! constant is also accepted in expressions so that printed rational output
//! reads back.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::param::{pack, Monomial, ParamPoly, MAX_VARS};
use crate::xpoly::{NumPoly, SymPoly};

/// Parses `"c0,c1,...,cn"` into a numeric polynomial.
pub fn parse_coeff_list(s: &str) -> Result<NumPoly> {
    let coeffs = s
        .split(',')
        .map(|t| parse_rational(t.trim()))
        .collect::<Result<Vec<_>>>()?;
    Ok(NumPoly::new(coeffs))
}

pub fn parse_rational(t: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational number: {t:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {t:?}")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Sparse polynomial in `x` and the parameters with rational coefficients,
/// keyed by `(x exponent, parameter monomial)`.
type Terms = BTreeMap<(u32, Monomial), BigRational>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    X,
    Param(usize),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = cs[st..i].iter().collect();
            out.push(Tok::Num(digits.parse().unwrap()));
        } else if c == 'x' {
            out.push(Tok::X);
            i += 1;
        } else if c == 'a' {
            let st = i + 1;
            i = st;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let idx: String = cs[st..i].iter().collect();
            let v: usize = idx
                .parse()
                .map_err(|_| Error::Parse("parameter needs an index, e.g. a3".into()))?;
            if v >= MAX_VARS {
                return Err(Error::Parse(format!("parameter index {v} too large")));
            }
            out.push(Tok::Param(v));
        } else if "+-*^/()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

fn mul_terms(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for ((xa, ma), ca) in a {
        for ((xb, mb), cb) in b {
            let m = ma + mb;
            assert!(m & 0x8080_8080_8080_8080_8080_8080_8080_8080 == 0, "exponent overflow");
            let e = out.entry((xa + xb, m)).or_insert_with(BigRational::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn add_terms(a: &mut Terms, b: &Terms, sign: i32) {
    for (k, c) in b {
        let e = a.entry(*k).or_insert_with(BigRational::zero);
        if sign < 0 {
            *e -= c;
        } else {
            *e += c;
        }
    }
    a.retain(|_, c| !c.is_zero());
}

fn constant(c: BigRational) -> Terms {
    let mut t = Terms::new();
    if !c.is_zero() {
        t.insert((0, 0), c);
    }
    t
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Terms> {
        let mut acc = if self.eat('-') {
            let mut t = Terms::new();
            add_terms(&mut t, &self.term()?, -1);
            t
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                let t = self.term()?;
                add_terms(&mut acc, &t, 1);
            } else if self.eat('-') {
                let t = self.term()?;
                add_terms(&mut acc, &t, -1);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Terms> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = mul_terms(&acc, &self.power()?);
            } else if self.eat('/') {
                let d = self.power()?;
                let c = match d.len() {
                    1 => d.get(&(0, 0)).cloned(),
                    _ => None,
                }
                .ok_or_else(|| Error::Parse("division only by nonzero constants".into()))?;
                acc = mul_terms(&acc, &constant(BigRational::one() / c));
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Terms> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = match self.toks.get(self.pos) {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                u32::try_from(v).map_err(|_| Error::Parse("exponent too large".into()))?
            }
            _ => return Err(Error::Parse("exponent must be a non-negative integer".into())),
        };
        let mut acc = constant(BigRational::one());
        for _ in 0..e {
            acc = mul_terms(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Terms> {
        let tok = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Num(v) => Ok(constant(BigRational::from_integer(v))),
            Tok::X => Ok(Terms::from([((1, 0), BigRational::one())])),
            Tok::Param(i) => {
                let mut exps = vec![0; i + 1];
                exps[i] = 1;
                Ok(Terms::from([((0, pack(&exps)), BigRational::one())]))
            }
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Tok::Op('-') => {
                let mut t = Terms::new();
                add_terms(&mut t, &self.power()?, -1);
                Ok(t)
            }
            Tok::Op(c) => Err(Error::Parse(format!("unexpected {c:?}"))),
        }
    }
}

fn parse_terms(s: &str) -> Result<Terms> {
    let mut p = Parser {
        toks: lex(s)?,
        pos: 0,
    };
    let t = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(t)
}

/// Parses an expression whose coefficients are integer polynomials in the
/// parameters.
pub fn parse_symbolic(s: &str) -> Result<SymPoly> {
    let t = parse_terms(s)?;
    let deg = t.keys().map(|(e, _)| *e as usize).max().unwrap_or(0);
    let mut rows: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); deg + 1];
    for ((e, m), c) in t {
        if !c.is_integer() {
            return Err(Error::Parse("symbolic coefficients must be integers".into()));
        }
        rows[e as usize].push((m, c.to_integer()));
    }
    Ok(SymPoly::new(rows.into_iter().map(ParamPoly::from_terms).collect()))
}

/// Parses an expression in `x` alone into a numeric polynomial.
pub fn parse_numeric(s: &str) -> Result<NumPoly> {
    let t = parse_terms(s)?;
    let deg = t.keys().map(|(e, _)| *e as usize).max().unwrap_or(0);
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    for ((e, m), c) in t {
        if m != 0 {
            return Err(Error::Parse("numeric expression must not contain parameters".into()));
        }
        coeffs[e as usize] = c;
    }
    Ok(NumPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_list_is_ascending() {
        let p = parse_coeff_list("-2,5,-6,6,-4,1").unwrap();
        assert_eq!(p, parse_numeric("x^5-4*x^4+6*x^3-6*x^2+5*x-2").unwrap());
        let r = parse_coeff_list("1/2, -3/4").unwrap();
        assert_eq!(r.to_string(), "-3/4*x + 1/2");
        assert!(parse_coeff_list("1,/2").is_err());
        assert!(parse_coeff_list("1/0").is_err());
    }

    #[test]
    fn symbolic_round_trip_through_display() {
        let p = parse_symbolic("a3*x^3 + a2*x^2 + (a1 - 2*a0)*x - 6*a3^2*(3*a3*x + a2)").unwrap();
        let again = parse_symbolic(&p.to_string()).unwrap();
        assert_eq!(p, again);
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn numeric_rejects_parameters() {
        assert!(parse_numeric("a0*x").is_err());
        assert!(parse_numeric("(x+1").is_err());
        assert_eq!(parse_numeric("-(x+1)^2").unwrap(), NumPoly::from_i64s(&[-1, -2, -1]));
        assert_eq!(parse_numeric("x/2").unwrap().to_string(), "1/2*x");
    }
}
