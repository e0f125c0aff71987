//! Dense univariate polynomials in `x` over an exact coefficient ring.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::param::ParamPoly;
use crate::ring::Ring;

/// `coeffs[i]` is the coefficient of `x^i`; the last stored coefficient is
/// never zero, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XPoly<C> {
    coeffs: Vec<C>,
}

/// Symbolic polynomial in `x` with coefficients in the parameter ring.
pub type SymPoly = XPoly<ParamPoly>;
/// Numeric polynomial with exact rational coefficients.
pub type NumPoly = XPoly<BigRational>;

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn falling(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}

impl<C: Ring> XPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn from_i64s(ascending: &[i64]) -> Self {
        Self::new(ascending.iter().map(|&v| C::from_i64(v)).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> XPoly<D> {
        XPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(Ring::neg).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides every coefficient exactly by `c`.
    pub fn div_coeffs_exact(&self, c: &C) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.div_exact(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(coeffs))
    }

    /// The `k`-th derivative.
    pub fn derivative(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        Self::new(
            (k..self.coeffs.len())
                .map(|i| self.coeffs[i].mul(&C::from_bigint(&falling(i, k))))
                .collect(),
        )
    }

    /// The `k`-th derivative divided by `k!`. The quotient is formed by the
    /// binomial `C(i, k)` directly and checked against the raw derivative in
    /// debug builds.
    pub fn scaled_derivative(&self, k: usize) -> Self {
        let out = Self::new(
            (k..self.coeffs.len())
                .map(|i| self.coeffs[i].mul(&C::from_bigint(&binomial(i, k))))
                .collect(),
        );
        debug_assert!(
            out.scale(&C::from_bigint(&falling(k, k))) == self.derivative(k),
            "k! does not divide the k-th derivative exactly"
        );
        out
    }

    /// `(P^(0), P^(1), ..., P^(n))`, optionally each divided by `k!`.
    pub fn derivative_tower(&self, scaled: bool) -> Vec<Self> {
        let n = self.degree().unwrap_or(0);
        (0..=n)
            .map(|k| if scaled { self.scaled_derivative(k) } else { self.derivative(k) })
            .collect()
    }

    /// Pseudo-remainder: `lc(B)^(deg A - deg B + 1) * A` reduced modulo `B`.
    /// When `deg A < deg B` the exponent is taken as zero and `A` is returned.
    pub fn prem(&self, b: &Self) -> Result<Self> {
        let db = b.degree().ok_or(Error::ZeroDivisor("prem by the zero polynomial"))?;
        let da = match self.degree() {
            Some(d) if d >= db => d,
            _ => return Ok(self.clone()),
        };
        let lb = b.leading_coeff().unwrap().clone();
        let mut r = self.clone();
        let mut e = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading_coeff().unwrap().clone();
            r = r.scale(&lb).sub(&b.scale(&lr).shift(dr - db));
            e -= 1;
        }
        Ok(r.scale(&lb.pow(e as u32)))
    }

    /// Horner evaluation at `x = v`.
    pub fn eval(&self, v: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.mul(v).add(c))
    }
}

impl SymPoly {
    /// Evaluates every coefficient at `pt` (`pt[i]` is the value of `a_i`).
    pub fn instantiate(&self, pt: &[BigRational]) -> NumPoly {
        self.map(|c| c.eval(pt))
    }

    /// Primitive part with the lex-leading integer of the leading
    /// `x`-coefficient made positive.
    pub fn normalize_assoc(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(&c.content());
        }
        let lead_negative = self
            .leading_coeff()
            .and_then(|c| c.leading_coeff())
            .is_some_and(|v| v.is_negative());
        if lead_negative {
            g = -g;
        }
        Ok(self.map(|c| c.div_scalar_exact(&g).expect("content divides every coefficient")))
    }

    /// The generic symbolic polynomial `a_n x^n + ... + a_0`, with optional
    /// fixed values for some coefficients.
    pub fn generic(n: usize, fixed: &[(usize, BigInt)]) -> Self {
        Self::new(
            (0..=n)
                .map(|i| match fixed.iter().find(|(k, _)| *k == i) {
                    Some((_, v)) => ParamPoly::constant(v.clone()),
                    None => ParamPoly::var(i),
                })
                .collect(),
        )
    }
}

impl NumPoly {
    /// The integer primitive associate with positive leading coefficient.
    pub fn normalize_assoc(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading_coeff().unwrap().is_negative() {
            content = -content;
        }
        Ok(self.map(|c| c / &content))
    }

    /// Monic associate; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(l) => {
                let l = l.clone();
                self.map(|c| c / &l)
            }
        }
    }

    /// Quotient and remainder over the rationals.
    pub fn div_rem(&self, b: &Self) -> Result<(Self, Self)> {
        let db = b.degree().ok_or(Error::ZeroDivisor("division by the zero polynomial"))?;
        let lb = b.leading_coeff().unwrap().clone();
        let mut q = vec![<BigRational as Zero>::zero(); self.coeffs.len().saturating_sub(db)];
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let t = r.leading_coeff().unwrap() / &lb;
            q[dr - db] = t.clone();
            r = r.sub(&b.scale(&t).shift(dr - db));
        }
        Ok((Self::new(q), r))
    }

    /// Monic gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl<C: Ring> fmt::Debug for XPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Ring> fmt::Display for XPoly<C> {
    /// Descending powers of `x`; compound coefficients are parenthesised.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let compound = s[1..].contains([' ', '+', '-']);
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ if compound => (false, format!("({s})")),
                _ => (false, s.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let xs = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            match (k, body.as_str()) {
                (0, _) => write!(f, "{body}")?,
                (_, "1") => write!(f, "{xs}")?,
                _ => write!(f, "{body}*{xs}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn np(asc: &[i64]) -> NumPoly {
        NumPoly::from_i64s(asc)
    }

    const EX4: [i64; 8] = [-1, 1, 1, -1, 1, -1, -1, 1];

    #[test]
    fn derivatives_of_the_septic() {
        let p = np(&EX4);
        assert_eq!(p.derivative(1), np(&[1, 2, -3, 4, -5, -6, 7]));
        assert_eq!(p.derivative(0), p);
        assert!(np(&[1, 0, 1]).derivative(3).is_zero());
        assert_eq!(p.scaled_derivative(2), np(&[1, -3, 6, -10, -15, 21]));
        assert_eq!(np(&[0, 0, 0, 1]).scaled_derivative(3), np(&[1]));
    }

    #[test]
    fn prem_small_cases() {
        let a = np(&[-1, 0, 1]);
        assert_eq!(a.prem(&np(&[0, 2])).unwrap(), np(&[-4]));
        assert!(a.prem(&a).unwrap().is_zero());
        assert!(a.prem(&NumPoly::zero()).is_err());
    }

    #[test]
    fn normalization_of_associates() {
        assert_eq!(
            np(&[-1536, 1536, 1536, -1536]).normalize_assoc().unwrap(),
            np(&[1, -1, -1, 1])
        );
        assert_eq!(np(&[-1, 1]).normalize_assoc().unwrap(), np(&[-1, 1]));
        assert_eq!(np(&[-56623104]).normalize_assoc().unwrap(), np(&[1]));
        let half = NumPoly::new(vec![BigRational::new(1.into(), 2.into()), BigRational::new((-3).into(), 4.into())]);
        assert_eq!(half.normalize_assoc().unwrap(), np(&[-2, 3]));
        assert!(NumPoly::zero().normalize_assoc().is_err());
    }

    #[test]
    fn instantiate_symbolic() {
        let p = SymPoly::new(vec![ParamPoly::var(2), ParamPoly::var(3)]);
        let pt: Vec<BigRational> = [0, 0, 2, 5].iter().map(|&v| q(v)).collect();
        assert_eq!(p.instantiate(&pt), np(&[2, 5]));
        let seven = SymPoly::from_i64s(&[7]);
        assert_eq!(seven.instantiate(&pt), np(&[7]));
    }

    #[test]
    fn euclidean_gcd_is_monic() {
        let a = np(&[1, -2, 1]).mul(&np(&[1, 1]));
        let b = np(&[1, -2, 1]).mul(&np(&[2, 0, 3]));
        assert_eq!(a.gcd(&b), np(&[1, -2, 1]));
        assert_eq!(a.gcd(&np(&[5])), np(&[1]));
    }

    #[test]
    fn display_is_descending() {
        assert_eq!(np(&[-2, 0, 1]).to_string(), "x^2 - 2");
        assert_eq!(np(&[1, -3]).to_string(), "-3*x + 1");
        let s = SymPoly::new(vec![ParamPoly::var(0), ParamPoly::var(1).sub(&ParamPoly::var(2))]);
        assert_eq!(s.to_string(), "(-a2 + a1)*x + a0");
    }
}
