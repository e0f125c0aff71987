//! Condition generation.
//!
//! [`generate_all`] builds, for every complete multiplicity structure of a
//! degree-`n` polynomial with symbolic coefficients, a conjunction of sign
//! conditions on the coefficients. Every polynomial it needs is a subresultant
//! of the derivative tower `(P, P', ..., P^(n))` or an entry of the
//! discriminant sequence of one of them, so nesting depth never exceeds two.
//!
//! [`yhz_generate_all`] is the classical baseline built from the nested
//! repeated-gcd chain `G~_i = R_k(G~_{i-1}, G~_{i-1}')`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::param::{pack, unpack, ParamPoly};
use crate::partitions::{conjugate, enumerate_all_complete, enumerate_m, enumerate_n, lex_greater, trim, CompletePartition};
use crate::sylvester::{discriminant_prefix, subresultant};
use crate::xpoly::SymPoly;

/// Structural name of a registry polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolyKey {
    /// Subresultant `R_δ` of the derivative tower.
    Sub(Vec<usize>),
    /// `D_j` of `R_δ`.
    Disc(Vec<usize>, usize),
    /// Node of the nested chain reached by the given index sequence.
    Chain(Vec<usize>),
    /// `D_j` of a chain node.
    ChainDisc(Vec<usize>, usize),
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for PolyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyKey::Sub(d) => write!(f, "R[{}]", join(d)),
            PolyKey::Disc(d, j) => write!(f, "D[{};{j}]", join(d)),
            PolyKey::Chain(c) => write!(f, "Y[{}]", join(c)),
            PolyKey::ChainDisc(c, j) => write!(f, "YD[{};{j}]", join(c)),
        }
    }
}

impl FromStr for PolyKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad registry key {s:?}"));
        let (tag, rest) = s.split_once('[').ok_or_else(bad)?;
        let body = rest.strip_suffix(']').ok_or_else(bad)?;
        let nums = |t: &str| -> Result<Vec<usize>> {
            if t.is_empty() {
                return Ok(Vec::new());
            }
            t.split(',').map(|x| x.parse().map_err(|_| bad())).collect()
        };
        let with_index = |t: &str| -> Result<(Vec<usize>, usize)> {
            let (a, j) = t.split_once(';').ok_or_else(bad)?;
            Ok((nums(a)?, j.parse().map_err(|_| bad())?))
        };
        match tag {
            "R" => Ok(PolyKey::Sub(nums(body)?)),
            "Y" => Ok(PolyKey::Chain(nums(body)?)),
            "D" => with_index(body).map(|(d, j)| PolyKey::Disc(d, j)),
            "YD" => with_index(body).map(|(d, j)| PolyKey::ChainDisc(d, j)),
            _ => Err(bad()),
        }
    }
}

impl PolyKey {
    /// Number of nested constructions between `P` and this polynomial.
    pub fn depth(&self) -> usize {
        match self {
            PolyKey::Sub(d) => usize::from(!d.is_empty()),
            PolyKey::Disc(d, _) => usize::from(!d.is_empty()) + 1,
            PolyKey::Chain(c) => c.len(),
            PolyKey::ChainDisc(c, _) => c.len() + 1,
        }
    }

    /// True for the polynomials that partition the parameter space, as
    /// opposed to intermediate candidates whose only role is to feed
    /// discriminant sequences.
    pub fn is_condition_polynomial(&self, n: usize) -> bool {
        match self {
            PolyKey::Sub(d) => d.iter().sum::<usize>() == n,
            PolyKey::Disc(..) | PolyKey::ChainDisc(..) => true,
            PolyKey::Chain(_) => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    EqZero(PolyKey),
    NeqZero(PolyKey),
    /// Sign changes of the revised sign list of the keyed values.
    VarEq { keys: Vec<PolyKey>, target: usize },
}

impl Atom {
    pub fn keys(&self) -> Vec<&PolyKey> {
        match self {
            Atom::EqZero(k) | Atom::NeqZero(k) => vec![k],
            Atom::VarEq { keys, .. } => keys.iter().collect(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::EqZero(k) => write!(f, "{k} = 0"),
            Atom::NeqZero(k) => write!(f, "{k} != 0"),
            Atom::VarEq { keys, target } => {
                let ks: Vec<String> = keys.iter().map(ToString::to_string).collect();
                write!(f, "Var({}) = {target}", ks.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Condition {
    pub atoms: Vec<Atom>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Qxy,
    Yhz,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Qxy => "qxy",
            Method::Yhz => "yhz",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "qxy" => Ok(Method::Qxy),
            "yhz" => Ok(Method::Yhz),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

/// Which discriminant-sequence entries are stored for each candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscScope {
    /// `D_1..D_d` for every candidate of degree `d >= 2`, the accounting
    /// behind the closed-form polynomial counts.
    Full,
    /// Only the entries some condition references.
    Referenced,
}

#[derive(Debug, Clone)]
pub struct GenOptions {
    /// Use `P^(k)/k!` in the derivative tower.
    pub scaled: bool,
    /// Fix the leading coefficient to 1.
    pub monic: bool,
    /// Coefficient indices fixed to zero.
    pub drop: Vec<usize>,
    pub disc_scope: DiscScope,
    /// Worker threads for the registry fill; 1 runs inline.
    pub threads: usize,
    pub deadline: Option<Instant>,
}

impl Default for GenOptions {
    fn default() -> Self {
        Self {
            scaled: true,
            monic: false,
            drop: Vec::new(),
            disc_scope: DiscScope::Full,
            threads: 1,
            deadline: None,
        }
    }
}

impl GenOptions {
    fn fixed(&self, n: usize) -> Vec<(usize, BigInt)> {
        let mut f: Vec<(usize, BigInt)> = self.drop.iter().map(|&k| (k, BigInt::zero())).collect();
        if self.monic {
            f.push((n, BigInt::from(1)));
        }
        f
    }

    fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::Timeout),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegEntry {
    pub poly: SymPoly,
    pub depth: usize,
}

/// Polynomials keyed structurally; each key is computed once.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PolyRegistry {
    pub entries: BTreeMap<PolyKey, RegEntry>,
}

impl PolyRegistry {
    pub fn get(&self, k: &PolyKey) -> Result<&SymPoly> {
        self.entries
            .get(k)
            .map(|e| &e.poly)
            .ok_or_else(|| Error::UnknownKey(k.to_string()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn insert(&mut self, k: PolyKey, poly: SymPoly) {
        let depth = k.depth();
        self.entries.entry(k).or_insert(RegEntry { poly, depth });
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionSet {
    pub degree: usize,
    pub method: Method,
    pub scaled: bool,
    pub monic: bool,
    pub drop: Vec<usize>,
    pub registry: PolyRegistry,
    pub items: Vec<(CompletePartition, Condition)>,
}

fn run_parallel<T: Send, R: Send>(threads: usize, items: Vec<T>, f: impl Fn(T) -> R + Sync + Send) -> Vec<R> {
    if threads <= 1 {
        return items.into_iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(|| items.into_par_iter().map(f).collect())
}

fn degree_at_least(p: &SymPoly, nominal: usize) -> Result<()> {
    if p.degree() == Some(nominal) {
        Ok(())
    } else {
        Err(Error::Degenerate(format!(
            "candidate of nominal degree {nominal} has degree {:?} for this coefficient pattern",
            p.degree()
        )))
    }
}

/// `(G_0, ..., G_{μ_1 - 1})` with `G_0 = P` and `G_i` the subresultant of the
/// derivative tower indexed by the first `i` entries of the conjugate of `mu`.
pub fn gcd_candidates<C: crate::ring::Ring>(
    tower: &[crate::xpoly::XPoly<C>],
    mu: &[usize],
) -> Result<Vec<crate::xpoly::XPoly<C>>> {
    let n = tower.first().and_then(|p| p.degree()).ok_or(Error::ConstantBase)?;
    let conj = conjugate(mu, n);
    let top = mu.first().copied().unwrap_or(0);
    (0..top)
        .map(|i| if i == 0 { Ok(tower[0].clone()) } else { subresultant(tower, &conj[..i]) })
        .collect()
}

/// The conjunction characterising one complete multiplicity structure.
pub fn build_condition(n: usize, mu_c: &CompletePartition) -> Result<Condition> {
    if !mu_c.is_valid() || mu_c.degree() != n {
        return Err(Error::Invalid(format!("{mu_c} is not a structure of degree {n}")));
    }
    let mu = mu_c.merged();
    let conj = conjugate(&mu, n);
    let conj_i = conjugate(&mu_c.imag, n);
    let mut atoms = Vec::new();
    for gamma in enumerate_m(n) {
        if lex_greater(&gamma, &conj) {
            atoms.push(Atom::EqZero(PolyKey::Sub(gamma)));
        }
    }
    atoms.push(Atom::NeqZero(PolyKey::Sub(trim(&conj))));
    for i in 0..mu[0] {
        let base = conj[..i].to_vec();
        let deg = n - base.iter().sum::<usize>();
        if conj_i[i] % 2 == 1 {
            return Err(Error::Invalid(format!("odd imaginary count in {mu_c}")));
        }
        let keys = if deg >= 2 {
            (1..=conj[i]).map(|j| PolyKey::Disc(base.clone(), j)).collect()
        } else {
            Vec::new()
        };
        atoms.push(Atom::VarEq { keys, target: conj_i[i] / 2 });
    }
    Ok(Condition { atoms })
}

/// The nested-chain condition for one structure.
pub fn yhz_build_condition(n: usize, mu_c: &CompletePartition) -> Result<Condition> {
    if !mu_c.is_valid() || mu_c.degree() != n {
        return Err(Error::Invalid(format!("{mu_c} is not a structure of degree {n}")));
    }
    let mu = mu_c.merged();
    let conj = conjugate(&mu, n);
    let conj_i = conjugate(&mu_c.imag, n);
    let top = mu[0];
    let degree_at = |i: usize| n - conj[..i].iter().sum::<usize>();
    let mut atoms = Vec::new();
    for i in 0..top.saturating_sub(1) {
        let chain = conj[..i].to_vec();
        for j in conj[i] + 1..=degree_at(i) {
            atoms.push(Atom::EqZero(PolyKey::ChainDisc(chain.clone(), j)));
        }
    }
    let last = top - 1;
    let s_last = degree_at(last);
    // a linear last node has D_1 = lc^2, and its leading coefficient is a
    // nonzero multiple of the parent's D_k exactly when the parent has k
    // distinct roots, so the parent entry carries the test
    atoms.push(if s_last >= 2 {
        Atom::NeqZero(PolyKey::ChainDisc(conj[..last].to_vec(), s_last))
    } else if last == 0 {
        return Err(Error::Invalid("degree must be at least 2".into()));
    } else {
        Atom::NeqZero(PolyKey::ChainDisc(conj[..last - 1].to_vec(), conj[last - 1]))
    });
    for i in 0..top {
        let chain = conj[..i].to_vec();
        let keys = if degree_at(i) >= 2 {
            (1..=conj[i]).map(|j| PolyKey::ChainDisc(chain.clone(), j)).collect()
        } else {
            Vec::new()
        };
        atoms.push(Atom::VarEq { keys, target: conj_i[i] / 2 });
    }
    Ok(Condition { atoms })
}

fn referenced(items: &[(CompletePartition, Condition)]) -> BTreeMap<PolyKey, ()> {
    items
        .iter()
        .flat_map(|(_, c)| c.atoms.iter().flat_map(|a| a.keys().into_iter().cloned()))
        .map(|k| (k, ()))
        .collect()
}

/// Conditions for every complete multiplicity structure of a degree-`n`
/// polynomial with symbolic coefficients.
pub fn generate_all(n: usize, opts: &GenOptions) -> Result<ConditionSet> {
    if n < 2 {
        return Err(Error::Invalid("degree must be at least 2".into()));
    }
    let p = SymPoly::generic(n, &opts.fixed(n));
    let tower = p.derivative_tower(opts.scaled);
    let items = enumerate_all_complete(n)
        .into_iter()
        .map(|mc| build_condition(n, &mc).map(|c| (mc, c)))
        .collect::<Result<Vec<_>>>()?;

    let mut deltas = enumerate_m(n);
    deltas.extend(enumerate_n(n));
    let subs = run_parallel(opts.threads, deltas, |d| {
        opts.check_deadline()?;
        let r = subresultant(&tower, &d)?;
        Ok::<_, Error>((d, r))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let mut registry = PolyRegistry::default();
    let refs = referenced(&items);
    let mut jobs = Vec::new();
    for (d, r) in &subs {
        let deg = n - d.iter().sum::<usize>();
        if deg >= 2 {
            degree_at_least(r, deg)?;
            let m = match opts.disc_scope {
                DiscScope::Full => deg,
                DiscScope::Referenced => (1..=deg)
                    .rev()
                    .find(|&j| refs.contains_key(&PolyKey::Disc(d.clone(), j)))
                    .unwrap_or(0),
            };
            jobs.push((d.clone(), r.clone(), m));
        }
    }
    for (d, r) in subs {
        registry.insert(PolyKey::Sub(d), r);
    }
    let discs = run_parallel(opts.threads, jobs, |(d, r, m)| {
        opts.check_deadline()?;
        Ok::<_, Error>((d, discriminant_prefix(&r, m)?))
    });
    for res in discs {
        let (d, seq) = res?;
        for (j, v) in seq.into_iter().enumerate() {
            registry.insert(PolyKey::Disc(d.clone(), j + 1), SymPoly::constant(v));
        }
    }
    Ok(ConditionSet {
        degree: n,
        method: Method::Qxy,
        scaled: opts.scaled,
        monic: opts.monic,
        drop: opts.drop.clone(),
        registry,
        items,
    })
}

/// The baseline built from nested chains: every node of degree `d` spawns
/// children `R_k(G, G')` for `k = 1..d-1`, and every node of degree at least
/// two contributes its full discriminant sequence.
pub fn yhz_generate_all(n: usize, opts: &GenOptions) -> Result<ConditionSet> {
    if n < 2 {
        return Err(Error::Invalid("degree must be at least 2".into()));
    }
    let p = SymPoly::generic(n, &opts.fixed(n));
    let items = enumerate_all_complete(n)
        .into_iter()
        .map(|mc| yhz_build_condition(n, &mc).map(|c| (mc, c)))
        .collect::<Result<Vec<_>>>()?;
    let refs = referenced(&items);

    let mut registry = PolyRegistry::default();
    let mut level: Vec<(Vec<usize>, SymPoly)> = vec![(Vec::new(), p)];
    while !level.is_empty() {
        let work = std::mem::take(&mut level);
        let results = run_parallel(opts.threads, work, |(chain, g)| {
            opts.check_deadline()?;
            let d = g.degree().ok_or(Error::ZeroPolynomial)?;
            let m = match opts.disc_scope {
                DiscScope::Full => d,
                DiscScope::Referenced => (1..=d)
                    .rev()
                    .find(|&j| refs.contains_key(&PolyKey::ChainDisc(chain.clone(), j)))
                    .unwrap_or(0),
            };
            let seq = discriminant_prefix(&g, m)?;
            let dg = g.derivative(1);
            let mut children = Vec::new();
            for k in 1..d.saturating_sub(1) {
                let child = subresultant(&[g.clone(), dg.clone()], &[k])?;
                degree_at_least(&child, d - k)?;
                let mut c = chain.clone();
                c.push(k);
                children.push((c, child));
            }
            Ok::<_, Error>((chain, g, seq, children))
        });
        for res in results {
            let (chain, g, seq, children) = res?;
            for (j, v) in seq.into_iter().enumerate() {
                registry.insert(PolyKey::ChainDisc(chain.clone(), j + 1), SymPoly::constant(v));
            }
            registry.insert(PolyKey::Chain(chain), g);
            level.extend(children);
        }
    }
    Ok(ConditionSet {
        degree: n,
        method: Method::Yhz,
        scaled: false,
        monic: opts.monic,
        drop: opts.drop.clone(),
        registry,
        items,
    })
}

fn poly_to_json(p: &SymPoly, nvars: usize) -> Value {
    let mut coeffs = Vec::new();
    for (e, c) in p.coeffs().iter().enumerate().rev() {
        for (m, v) in c.terms() {
            let mut exps = vec![e as u32];
            exps.extend(unpack(*m, nvars));
            coeffs.push(json!([exps, v.to_string()]));
        }
    }
    json!({ "xdeg": p.degree().unwrap_or(0), "coeffs": coeffs })
}

fn poly_from_json(v: &Value) -> Result<SymPoly> {
    let bad = |what: &str| Error::Parse(format!("registry entry: {what}"));
    let xdeg = v["xdeg"].as_u64().ok_or_else(|| bad("xdeg"))? as usize;
    let mut rows: Vec<Vec<(u128, BigInt)>> = vec![Vec::new(); xdeg + 1];
    for t in v["coeffs"].as_array().ok_or_else(|| bad("coeffs"))? {
        let exps: Vec<u32> = t[0]
            .as_array()
            .ok_or_else(|| bad("exponents"))?
            .iter()
            .map(|e| e.as_u64().map(|x| x as u32).ok_or_else(|| bad("exponent")))
            .collect::<Result<_>>()?;
        let c: BigInt = t[1].as_str().ok_or_else(|| bad("coefficient"))?.parse().map_err(|_| bad("coefficient"))?;
        let (&e, rest) = exps.split_first().ok_or_else(|| bad("empty exponents"))?;
        let row = rows.get_mut(e as usize).ok_or_else(|| bad("x exponent above xdeg"))?;
        row.push((pack(rest), c));
    }
    Ok(SymPoly::new(rows.into_iter().map(ParamPoly::from_terms).collect()))
}

fn atom_to_json(a: &Atom) -> Value {
    match a {
        Atom::EqZero(k) => json!({ "eq_zero": k.to_string() }),
        Atom::NeqZero(k) => json!({ "neq_zero": k.to_string() }),
        Atom::VarEq { keys, target } => json!({
            "var_eq": { "keys": keys.iter().map(ToString::to_string).collect::<Vec<_>>(), "target": target }
        }),
    }
}

fn atom_from_json(v: &Value) -> Result<Atom> {
    let bad = || Error::Parse(format!("bad atom {v}"));
    let key = |x: &Value| -> Result<PolyKey> { x.as_str().ok_or_else(bad)?.parse() };
    if let Some(k) = v.get("eq_zero") {
        return Ok(Atom::EqZero(key(k)?));
    }
    if let Some(k) = v.get("neq_zero") {
        return Ok(Atom::NeqZero(key(k)?));
    }
    let ve = v.get("var_eq").ok_or_else(bad)?;
    let keys = ve["keys"].as_array().ok_or_else(bad)?.iter().map(key).collect::<Result<_>>()?;
    let target = ve["target"].as_u64().ok_or_else(bad)? as usize;
    Ok(Atom::VarEq { keys, target })
}

impl ConditionSet {
    /// Serializes to the JSON schema; object keys are sorted so output is
    /// byte-for-byte reproducible.
    pub fn to_json(&self) -> Value {
        let nvars = self.degree + 1;
        let mut reg = Map::new();
        for (k, e) in &self.registry.entries {
            let mut v = poly_to_json(&e.poly, nvars);
            v["depth"] = json!(e.depth);
            reg.insert(k.to_string(), v);
        }
        let conds: Vec<Value> = self
            .items
            .iter()
            .map(|(mc, c)| {
                json!({
                    "mu_c": serde_json::to_value(mc).expect("serializable"),
                    "atoms": c.atoms.iter().map(atom_to_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "degree": self.degree,
            "method": self.method.to_string(),
            "scaled_derivatives": self.scaled,
            "monic": self.monic,
            "drop": self.drop,
            "registry": reg,
            "conditions": conds,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("condition set: {what}"));
        let degree = v["degree"].as_u64().ok_or_else(|| bad("degree"))? as usize;
        let method = v["method"].as_str().unwrap_or("qxy").parse()?;
        let mut registry = PolyRegistry::default();
        for (k, e) in v["registry"].as_object().ok_or_else(|| bad("registry"))? {
            let key: PolyKey = k.parse()?;
            let depth = e["depth"].as_u64().map_or(key.depth(), |d| d as usize);
            registry.entries.insert(key, RegEntry { poly: poly_from_json(e)?, depth });
        }
        let mut items = Vec::new();
        for c in v["conditions"].as_array().ok_or_else(|| bad("conditions"))? {
            let mc: CompletePartition =
                serde_json::from_value(c["mu_c"].clone()).map_err(|e| bad(&e.to_string()))?;
            let atoms = c["atoms"]
                .as_array()
                .ok_or_else(|| bad("atoms"))?
                .iter()
                .map(atom_from_json)
                .collect::<Result<_>>()?;
            items.push((mc, Condition { atoms }));
        }
        let drop = v["drop"]
            .as_array()
            .map(|a| a.iter().filter_map(|x| x.as_u64().map(|y| y as usize)).collect())
            .unwrap_or_default();
        let cs = ConditionSet {
            degree,
            method,
            scaled: v["scaled_derivatives"].as_bool().unwrap_or(true),
            monic: v["monic"].as_bool().unwrap_or(false),
            drop,
            registry,
            items,
        };
        cs.validate()?;
        Ok(cs)
    }

    /// Every atom key resolves in the registry.
    pub fn validate(&self) -> Result<()> {
        for (_, c) in &self.items {
            for a in &c.atoms {
                for k in a.keys() {
                    self.registry.get(k)?;
                }
            }
        }
        Ok(())
    }

    pub fn condition_for(&self, mu_c: &CompletePartition) -> Option<&Condition> {
        self.items.iter().find(|(m, _)| m == mu_c).map(|(_, c)| c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_numeric, parse_symbolic};
    use crate::xpoly::NumPoly;

    fn cp(real: &[usize], imag: &[usize]) -> CompletePartition {
        CompletePartition::new(real.to_vec(), imag.to_vec())
    }

    #[test]
    fn key_strings_round_trip() {
        for k in [
            PolyKey::Sub(vec![]),
            PolyKey::Sub(vec![4, 2, 1]),
            PolyKey::Disc(vec![2], 3),
            PolyKey::Disc(vec![], 1),
            PolyKey::Chain(vec![1, 1]),
            PolyKey::ChainDisc(vec![], 4),
        ] {
            assert_eq!(k.to_string().parse::<PolyKey>().unwrap(), k);
        }
        assert!("Q[1]".parse::<PolyKey>().is_err());
    }

    #[test]
    fn candidates_of_the_septic() {
        let p = NumPoly::from_i64s(&[-1, 1, 1, -1, 1, -1, -1, 1]);
        let g = gcd_candidates(&p.derivative_tower(false), &[3, 2, 1, 1]).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g[0], p);
        assert_eq!(g[1], parse_numeric("-1536*(x-1)^2*(x+1)").unwrap());
        assert_eq!(g[2], parse_numeric("-1179648*(x-1)").unwrap());
        assert_eq!(gcd_candidates(&p.derivative_tower(false), &[1; 7]).unwrap(), vec![p]);
    }

    #[test]
    fn symbolic_cubic_candidate() {
        let tower = SymPoly::generic(3, &[]).derivative_tower(false);
        let g = gcd_candidates(&tower, &[2, 1]).unwrap();
        assert_eq!(
            g[1],
            parse_symbolic("a3*((6*a1*a3 - 2*a2^2)*x + (9*a0*a3 - a1*a2))").unwrap()
        );
    }

    #[test]
    fn quartic_conditions_by_hand() {
        // (1,1,1,1) is lex-minimal, so every other partition must vanish
        let c = build_condition(4, &cp(&[4], &[])).unwrap();
        let eq: Vec<Atom> = [vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1]]
            .into_iter()
            .map(|g| Atom::EqZero(PolyKey::Sub(g)))
            .collect();
        assert_eq!(c.atoms[..4], eq[..]);
        assert_eq!(c.atoms[4], Atom::NeqZero(PolyKey::Sub(vec![1, 1, 1, 1])));
        assert_eq!(c.atoms.len(), 9);
        assert!(c.atoms[5..].iter().all(|a| matches!(a, Atom::VarEq { target: 0, .. })));

        let c = build_condition(4, &cp(&[1, 1, 1, 1], &[])).unwrap();
        let d: Vec<PolyKey> = (1..=4).map(|j| PolyKey::Disc(vec![], j)).collect();
        assert_eq!(
            c.atoms,
            vec![Atom::NeqZero(PolyKey::Sub(vec![4])), Atom::VarEq { keys: d, target: 0 }]
        );

        let c = build_condition(4, &cp(&[], &[2, 2])).unwrap();
        let real = build_condition(4, &cp(&[2, 2], &[])).unwrap();
        let targets: Vec<usize> = c
            .atoms
            .iter()
            .filter_map(|a| match a {
                Atom::VarEq { target, .. } => Some(*target),
                _ => None,
            })
            .collect();
        assert_eq!(targets, vec![1, 1]);
        assert_eq!(c.atoms.len(), real.atoms.len());
        // (2,2) has conjugate (2,2,0,0); only (4) and (3,1) are lex-greater
        assert_eq!(c.atoms[0], Atom::EqZero(PolyKey::Sub(vec![4])));
        assert_eq!(c.atoms[1], Atom::EqZero(PolyKey::Sub(vec![3, 1])));
    }

    #[test]
    fn cubic_registry_counts() {
        let cs = generate_all(3, &GenOptions::default()).unwrap();
        assert_eq!(cs.items.len(), 4);
        let counted = cs.registry.entries.keys().filter(|k| k.is_condition_polynomial(3)).count();
        assert_eq!(counted, 8);
        let yhz = yhz_generate_all(3, &GenOptions::default()).unwrap();
        let counted = yhz.registry.entries.keys().filter(|k| k.is_condition_polynomial(3)).count();
        assert_eq!(counted, 5);
        for (k, e) in &cs.registry.entries {
            assert_eq!(e.depth, k.depth());
            assert!(e.depth <= 2);
        }
    }

    #[test]
    fn json_round_trip_is_stable() {
        let cs = generate_all(3, &GenOptions::default()).unwrap();
        let a = serde_json::to_string(&cs.to_json()).unwrap();
        let back = ConditionSet::from_json(&serde_json::from_str(&a).unwrap()).unwrap();
        assert_eq!(back, cs);
        let again = serde_json::to_string(&generate_all(3, &GenOptions::default()).unwrap().to_json()).unwrap();
        assert_eq!(a, again);
    }

    #[test]
    fn quadratic_has_three_structures() {
        let cs = generate_all(2, &GenOptions::default()).unwrap();
        let got: Vec<String> = cs.items.iter().map(|(m, _)| m.to_string()).collect();
        assert_eq!(got, vec!["((2);())", "((1,1);())", "(();(1,1))"]);
    }
}
