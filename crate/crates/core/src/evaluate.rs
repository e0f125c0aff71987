//! Evaluating conditions at rational coefficient points and classifying
//! concrete polynomials.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::discriminate::{build_condition, Atom, Condition, ConditionSet, PolyKey, PolyRegistry};
use crate::error::{Error, Result};
use crate::partitions::{conjugate, enumerate_m, trim, CompletePartition};
use crate::signs::{count_roots, signs, var};
use crate::sylvester::{discriminant_prefix, subresultant};
use crate::xpoly::NumPoly;

/// Coefficient values `a_0..a_n`.
pub type RationalPoint = Vec<BigRational>;

/// The evaluated atoms of a condition, in order, up to and including the
/// first false one.
pub type Trace = Vec<(Atom, bool)>;

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub mu_c: CompletePartition,
    pub trace: Trace,
}

/// Supplies the value of a keyed polynomial at a fixed point.
trait KeyValues {
    fn poly(&mut self, k: &PolyKey) -> Result<NumPoly>;

    fn scalar(&mut self, k: &PolyKey) -> Result<BigRational> {
        let p = self.poly(k)?;
        if p.degree().unwrap_or(0) > 0 {
            return Err(Error::Invalid(format!("{k} is not a scalar")));
        }
        Ok(p.coeff(0))
    }
}

struct Instantiated<'a> {
    registry: &'a PolyRegistry,
    pt: &'a [BigRational],
    cache: BTreeMap<PolyKey, NumPoly>,
}

impl KeyValues for Instantiated<'_> {
    fn poly(&mut self, k: &PolyKey) -> Result<NumPoly> {
        if let Some(p) = self.cache.get(k) {
            return Ok(p.clone());
        }
        let p = self.registry.get(k)?.instantiate(self.pt);
        self.cache.insert(k.clone(), p.clone());
        Ok(p)
    }
}

/// Computes subresultants and their discriminant sequences directly from a
/// numeric derivative tower. A candidate below its nominal degree has an
/// all-zero leading column in its discrimination matrix, so every entry of
/// its sequence is zero, which is what instantiating the symbolic entry
/// gives.
struct Numeric {
    n: usize,
    tower: Vec<NumPoly>,
    subs: BTreeMap<Vec<usize>, NumPoly>,
    discs: BTreeMap<Vec<usize>, Vec<BigRational>>,
}

impl Numeric {
    fn new(p: &NumPoly, scaled: bool) -> Result<Self> {
        let n = p.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(Self { n, tower: p.derivative_tower(scaled), subs: BTreeMap::new(), discs: BTreeMap::new() })
    }

    fn sub(&mut self, delta: &[usize]) -> Result<NumPoly> {
        if let Some(r) = self.subs.get(delta) {
            return Ok(r.clone());
        }
        let r = subresultant(&self.tower, delta)?;
        self.subs.insert(delta.to_vec(), r.clone());
        Ok(r)
    }

    fn disc(&mut self, delta: &[usize], j: usize) -> Result<BigRational> {
        let nominal = self.n - delta.iter().sum::<usize>();
        if j == 0 || j > nominal {
            return Err(Error::UnknownKey(PolyKey::Disc(delta.to_vec(), j).to_string()));
        }
        if !self.discs.contains_key(delta) {
            let r = self.sub(delta)?;
            let seq = if r.degree() == Some(nominal) {
                discriminant_prefix(&r, nominal)?
            } else {
                vec![BigRational::zero(); nominal]
            };
            self.discs.insert(delta.to_vec(), seq);
        }
        Ok(self.discs[delta][j - 1].clone())
    }
}

impl KeyValues for Numeric {
    fn poly(&mut self, k: &PolyKey) -> Result<NumPoly> {
        match k {
            PolyKey::Sub(d) => self.sub(d),
            PolyKey::Disc(d, j) => Ok(NumPoly::constant(self.disc(d, *j)?)),
            _ => Err(Error::UnknownKey(k.to_string())),
        }
    }
}

fn eval_atoms(cond: &Condition, values: &mut dyn KeyValues) -> Result<(bool, Trace)> {
    let mut trace = Vec::with_capacity(cond.atoms.len());
    for atom in &cond.atoms {
        let holds = match atom {
            Atom::EqZero(k) => values.poly(k)?.is_zero(),
            Atom::NeqZero(k) => !values.poly(k)?.is_zero(),
            Atom::VarEq { keys, target } => {
                let vals = keys.iter().map(|k| values.scalar(k)).collect::<Result<Vec<_>>>()?;
                var(&signs(&vals)) == *target
            }
        };
        trace.push((atom.clone(), holds));
        if !holds {
            return Ok((false, trace));
        }
    }
    Ok((true, trace))
}

/// Evaluates `cond` with every registry polynomial instantiated at `pt`.
pub fn eval_condition(cond: &Condition, registry: &PolyRegistry, pt: &[BigRational]) -> Result<(bool, Trace)> {
    let mut values = Instantiated { registry, pt, cache: BTreeMap::new() };
    eval_atoms(cond, &mut values)
}

/// The coefficient point of `p` for a condition set, rescaled to a unit
/// leading coefficient when the set was generated monic.
pub fn point_for(cs: &ConditionSet, p: &NumPoly) -> Result<RationalPoint> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n != cs.degree {
        return Err(Error::Invalid(format!("degree {n} polynomial against degree-{} conditions", cs.degree)));
    }
    let p = if cs.monic { p.monic() } else { p.clone() };
    for &k in &cs.drop {
        if !p.coeff(k).is_zero() {
            return Err(Error::Invalid(format!("coefficient a{k} must be zero for these conditions")));
        }
    }
    Ok((0..=n).map(|i| p.coeff(i)).collect())
}

/// Evaluates every condition of `cs` and requires exactly one to hold.
pub fn classify_with(cs: &ConditionSet, p: &NumPoly) -> Result<Verdict> {
    let pt = point_for(cs, p)?;
    let mut values = Instantiated { registry: &cs.registry, pt: &pt, cache: BTreeMap::new() };
    let mut hits = Vec::new();
    for (mu_c, cond) in &cs.items {
        let (ok, trace) = eval_atoms(cond, &mut values)?;
        if ok {
            hits.push(Verdict { mu_c: mu_c.clone(), trace });
        }
    }
    match hits.len() {
        1 => Ok(hits.pop().expect("one hit")),
        k => Err(Error::MatchCount(k)),
    }
}

/// Classifies `p` by running the pipeline on its own coefficients: the
/// lex-greatest partition `γ` of `n` with `R_γ ≠ 0` is the conjugate of the
/// complex multiplicity, and the root counts of each `G_i` give the
/// conjugate of the imaginary part. The generated condition for the result is
/// then evaluated numerically as a self-check and returned as the trace.
pub fn classify(p: &NumPoly) -> Result<Verdict> {
    classify_opts(p, true)
}

pub fn classify_opts(p: &NumPoly, scaled: bool) -> Result<Verdict> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::Invalid("degree must be at least 2".into()));
    }
    let mut num = Numeric::new(p, scaled)?;
    let mut conj = None;
    for gamma in enumerate_m(n) {
        if !num.sub(&gamma)?.is_zero() {
            conj = Some(gamma);
            break;
        }
    }
    let conj = conj.ok_or_else(|| Error::Degenerate("every subresultant vanishes".into()))?;
    let mu = trim(&conjugate(&conj, n));
    let mut conj_i = Vec::with_capacity(mu[0]);
    for i in 0..mu[0] {
        let g = if i == 0 { p.clone() } else { num.sub(&conj[..i])? };
        let (_, pairs) = if g.degree().unwrap_or(0) >= 1 { count_roots(&g)? } else { (0, 0) };
        conj_i.push(2 * pairs);
    }
    let imag = trim(&conjugate(&conj_i, 0));
    let mut real = mu.clone();
    for m in &imag {
        let pos = real
            .iter()
            .position(|r| r == m)
            .ok_or_else(|| Error::Degenerate(format!("imaginary multiplicity {m} not in {mu:?}")))?;
        real.remove(pos);
    }
    let mu_c = CompletePartition::new(real, imag);
    if !mu_c.is_valid() {
        return Err(Error::Degenerate(format!("inconsistent structure {mu_c}")));
    }
    let cond = build_condition(n, &mu_c)?;
    let (ok, trace) = eval_atoms(&cond, &mut num)?;
    if !ok {
        return Err(Error::MatchCount(0));
    }
    Ok(Verdict { mu_c, trace })
}

/// `c * P(x + q)` with exact arithmetic.
pub fn scale_and_shift(p: &NumPoly, c: &BigRational, q: &BigRational) -> NumPoly {
    let lin = NumPoly::new(vec![q.clone(), BigRational::one()]);
    let mut acc = NumPoly::zero();
    for coeff in p.coeffs().iter().rev() {
        acc = acc.mul(&lin).add(&NumPoly::constant(coeff.clone()));
    }
    acc.scale(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discriminate::{generate_all, GenOptions};
    use crate::parse::{parse_coeff_list, parse_numeric};

    fn cp(real: &[usize], imag: &[usize]) -> CompletePartition {
        CompletePartition::new(real.to_vec(), imag.to_vec())
    }

    #[test]
    fn fast_path_examples() {
        let cases = [
            ("x^5-4*x^4+6*x^3-6*x^2+5*x-2", cp(&[2, 1], &[1, 1])),
            ("x^7-x^6-x^5+x^4-x^3+x^2+x-1", cp(&[3, 2], &[1, 1])),
            ("(x^2+x+1)^2", cp(&[], &[2, 2])),
            ("x^2+1", cp(&[], &[1, 1])),
            ("(x-3)^4", cp(&[4], &[])),
            ("(x^2+1)*(x^2+4)", cp(&[], &[1, 1, 1, 1])),
        ];
        for (expr, want) in cases {
            let v = classify(&parse_numeric(expr).unwrap()).unwrap();
            assert_eq!(v.mu_c, want, "{expr}");
            assert!(v.trace.iter().all(|(_, ok)| *ok));
            let v = classify_opts(&parse_numeric(expr).unwrap(), false).unwrap();
            assert_eq!(v.mu_c, want, "{expr} raw");
        }
    }

    #[test]
    fn quintic_conditions_at_example_point() {
        let cs = generate_all(5, &GenOptions::default()).unwrap();
        let p = parse_coeff_list("-2,5,-6,6,-4,1").unwrap();
        let pt = point_for(&cs, &p).unwrap();
        let (ok, trace) = eval_condition(cs.condition_for(&cp(&[2, 1], &[1, 1])).unwrap(), &cs.registry, &pt).unwrap();
        assert!(ok);
        assert_eq!(trace.len(), cs.condition_for(&cp(&[2, 1], &[1, 1])).unwrap().atoms.len());
        let (ok, _) = eval_condition(cs.condition_for(&cp(&[1, 1, 1, 1, 1], &[])).unwrap(), &cs.registry, &pt).unwrap();
        assert!(!ok);
        let v = classify_with(&cs, &p).unwrap();
        assert_eq!(v.mu_c, cp(&[2, 1], &[1, 1]));
    }

    #[test]
    fn trace_stops_at_vanishing_nonzero_atom() {
        let cs = generate_all(3, &GenOptions::default()).unwrap();
        // (x-1)^3 makes R_(2,1) vanish, which the simple-roots condition needs nonzero
        let pt: Vec<BigRational> = [-1, 3, -3, 1].iter().map(|&v| BigRational::from_integer(v.into())).collect();
        let cond = cs.condition_for(&cp(&[1, 1, 1], &[])).unwrap();
        let (ok, trace) = eval_condition(cond, &cs.registry, &pt).unwrap();
        assert!(!ok);
        let (last, holds) = trace.last().unwrap();
        assert!(!holds);
        assert!(matches!(last, Atom::NeqZero(_)));
    }

    #[test]
    fn scaling_and_shifting_preserve_the_verdict() {
        let p = parse_numeric("(x-1)^3*(x+1)^2*(x^2+1)").unwrap();
        let q = scale_and_shift(&p, &BigRational::new((-7).into(), 3.into()), &BigRational::new(5.into(), 2.into()));
        assert_eq!(classify(&p).unwrap().mu_c, classify(&q).unwrap().mu_c);
        let r = scale_and_shift(&parse_numeric("x^2-2").unwrap(), &BigRational::one(), &BigRational::one());
        assert_eq!(r, parse_numeric("x^2+2*x-1").unwrap());
    }

    #[test]
    fn monic_set_rejects_nonzero_dropped_coefficient() {
        let opts = GenOptions { monic: true, drop: vec![2], ..GenOptions::default() };
        let cs = generate_all(3, &opts).unwrap();
        assert!(point_for(&cs, &parse_numeric("2*x^3-6*x+4").unwrap()).is_ok());
        assert!(point_for(&cs, &parse_numeric("x^3+x^2+1").unwrap()).is_err());
        let v = classify_with(&cs, &parse_numeric("2*(x-1)^2*(x+2)").unwrap()).unwrap();
        assert_eq!(v.mu_c, cp(&[2, 1], &[]));
    }
}
