//! Sparse multivariate integer polynomials in the parameters `a0..an`.
//!
//! Monomials are packed into a `u128`, eight bits per variable with `a_i` in
//! bits `8i..8i+8`. Because the highest-indexed variable sits in the most
//! significant byte, integer order on the packed word is lexicographic order
//! with `a0 < a1 < ... < an`. Terms are stored in strictly decreasing monomial
//! order with nonzero coefficients, so equality is structural.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Maximum number of parameters a monomial can carry.
pub const MAX_VARS: usize = 16;
/// Maximum exponent of a single parameter.
pub const MAX_EXP: u32 = 127;

const HIGH_BITS: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

pub type Monomial = u128;

fn field(m: Monomial, var: usize) -> u32 {
    ((m >> (8 * var)) & 0xff) as u32
}

fn mono_mul(a: Monomial, b: Monomial) -> Monomial {
    let s = a + b;
    assert!(s & HIGH_BITS == 0, "parameter exponent exceeds {MAX_EXP}");
    s
}

/// `a / b` when every exponent of `b` is at most the matching one in `a`.
fn mono_div(a: Monomial, b: Monomial) -> Option<Monomial> {
    (((a | HIGH_BITS) - b) & HIGH_BITS == HIGH_BITS).then(|| a - b)
}

fn mono_degree(m: Monomial) -> u32 {
    (0..MAX_VARS).map(|v| field(m, v)).sum()
}

/// Packs an exponent vector, `exps[i]` being the exponent of `a_i`.
pub fn pack(exps: &[u32]) -> Monomial {
    assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} parameters");
    exps.iter().enumerate().fold(0, |m, (i, &e)| {
        assert!(e <= MAX_EXP, "parameter exponent exceeds {MAX_EXP}");
        m | ((e as u128) << (8 * i))
    })
}

/// Unpacks a monomial into `nvars` exponents.
pub fn unpack(m: Monomial, nvars: usize) -> Vec<u32> {
    (0..nvars).map(|v| field(m, v)).collect()
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(0, c)],
            }
        }
    }

    /// The parameter `a_i`.
    pub fn var(i: usize) -> Self {
        let mut exps = vec![0; i + 1];
        exps[i] = 1;
        Self {
            terms: vec![(pack(&exps), BigInt::one())],
        }
    }

    pub fn monomial(exps: &[u32], c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: vec![(pack(exps), c)],
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(mut terms: Vec<(Monomial, BigInt)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| mono_degree(*m)).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| field(*m, var)).max()
    }

    /// Number of variable slots needed to write every monomial.
    pub fn nvars_used(&self) -> usize {
        (0..MAX_VARS)
            .rev()
            .find(|&v| self.terms.iter().any(|(m, _)| field(*m, v) > 0))
            .map_or(0, |v| v + 1)
    }

    /// Leading coefficient in lex order.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Gcd of the integer coefficients, zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, x) in &self.terms {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.push((*m, q));
        }
        Some(Self { terms })
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (m, c) in &b[j..] {
            out.push((*m, if negate { -c } else { c.clone() }));
        }
        Self { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    /// Product via a heap merge of the rows `a_i * b`, which keeps memory
    /// proportional to the output.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, b) = if self.terms.len() <= other.terms.len() {
            (&self.terms, &other.terms)
        } else {
            (&other.terms, &self.terms)
        };
        if a.len() == 1 {
            let (ma, ca) = &a[0];
            return Self {
                terms: b.iter().map(|(mb, cb)| (mono_mul(*ma, *mb), ca * cb)).collect(),
            };
        }
        let mut heap: BinaryHeap<(Monomial, u32, u32)> = a
            .iter()
            .enumerate()
            .map(|(i, (m, _))| (mono_mul(*m, b[0].0), i as u32, 0))
            .collect();
        let mut out: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some(&(m, _, _)) = heap.peek() {
            let mut acc = BigInt::zero();
            while let Some(&(top, i, j)) = heap.peek() {
                if top != m {
                    break;
                }
                heap.pop();
                let (i, j) = (i as usize, j as usize);
                acc += &a[i].1 * &b[j].1;
                if j + 1 < b.len() {
                    heap.push((mono_mul(a[i].0, b[j + 1].0), i as u32, (j + 1) as u32));
                }
            }
            if !acc.is_zero() {
                out.push((m, acc));
            }
        }
        Self { terms: out }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder. Quotient terms come out in decreasing order while a heap
    /// streams the products `q_i * divisor_j` against the dividend.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let g = &divisor.terms;
        if g.is_empty() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if g.len() == 1 {
            let (gm, gc) = &g[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let qm = mono_div(*m, *gm)?;
                let (q, r) = c.div_rem(gc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((qm, q));
            }
            return Some(Self { terms });
        }
        let f = &self.terms;
        let (g0m, g0c) = (&g[0].0, &g[0].1);
        let mut q: Vec<(Monomial, BigInt)> = Vec::new();
        let mut heap: BinaryHeap<(Monomial, u32, u32)> = BinaryHeap::new();
        let mut k = 0;
        loop {
            let fm = f.get(k).map(|t| t.0);
            let hm = heap.peek().map(|t| t.0);
            let m = match (fm, hm) {
                (None, None) => break,
                (Some(x), None) | (None, Some(x)) => x,
                (Some(x), Some(y)) => x.max(y),
            };
            let mut acc = BigInt::zero();
            if fm == Some(m) {
                acc += &f[k].1;
                k += 1;
            }
            while let Some(&(top, i, j)) = heap.peek() {
                if top != m {
                    break;
                }
                heap.pop();
                let (i, j) = (i as usize, j as usize);
                acc -= &q[i].1 * &g[j].1;
                if j + 1 < g.len() {
                    heap.push((mono_mul(q[i].0, g[j + 1].0), i as u32, (j + 1) as u32));
                }
            }
            if acc.is_zero() {
                continue;
            }
            let qm = mono_div(m, *g0m)?;
            let (qc, r) = acc.div_rem(g0c);
            if !r.is_zero() {
                return None;
            }
            heap.push((mono_mul(qm, g[1].0), q.len() as u32, 1));
            q.push((qm, qc));
        }
        Some(Self { terms: q })
    }

    /// Value at a point, `point[i]` being the value of `a_i`.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let nv = self.nvars_used();
        assert!(point.len() >= nv, "point has too few coordinates");
        let mut powers: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]; nv];
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (v, pw) in powers.iter_mut().enumerate() {
                let e = field(*m, v) as usize;
                while pw.len() <= e {
                    let next = pw.last().unwrap() * &point[v];
                    pw.push(next);
                }
                if e > 0 {
                    t *= &pw[e];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes constants for some parameters, keeping the others symbolic.
    pub fn substitute(&self, values: &[(usize, BigInt)]) -> Self {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut mm = *m;
            let mut cc = c.clone();
            for (v, val) in values {
                let e = field(mm, *v);
                if e > 0 {
                    mm &= !(0xffu128 << (8 * v));
                    cc *= num_traits::pow(val.clone(), e as usize);
                }
            }
            if !cc.is_zero() {
                out.push((mm, cc));
            }
        }
        Self::from_terms(out)
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || *m == 0 {
                factors.push(abs.to_string());
            }
            for v in (0..MAX_VARS).rev() {
                match field(*m, v) {
                    0 => {}
                    1 => factors.push(format!("a{v}")),
                    e => factors.push(format!("a{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl crate::ring::Ring for ParamPoly {
    const EXPAND_MINORS: bool = true;

    fn zero() -> Self {
        ParamPoly::zero()
    }
    fn one() -> Self {
        ParamPoly::constant(BigInt::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_bigint(v: &BigInt) -> Self {
        ParamPoly::constant(v.clone())
    }
    fn add(&self, other: &Self) -> Self {
        ParamPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        ParamPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        ParamPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        ParamPoly::neg(self)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        ParamPoly::div_exact(self, other)
    }
}
