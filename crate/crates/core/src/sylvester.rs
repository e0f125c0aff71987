//! Determinant polynomials, generalized Sylvester matrices, subresultants and
//! discriminant sequences.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::xpoly::XPoly;

/// Which shifted polynomial produced a matrix row: `x^shift * F_poly`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowLabel {
    pub poly: usize,
    pub shift: usize,
}

#[derive(Clone, PartialEq)]
pub struct PolyMatrix<C> {
    rows: usize,
    cols: usize,
    entries: Vec<C>,
    labels: Vec<RowLabel>,
}

impl<C: Ring> PolyMatrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![C::zero(); rows * cols],
            labels: Vec::new(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
            labels: Vec::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Row provenance; empty for matrices not built from polynomials.
    pub fn labels(&self) -> &[RowLabel] {
        &self.labels
    }

    /// Copies the leading `r x c` block.
    pub fn leading_block(&self, r: usize, c: usize) -> Self {
        let rows = (0..r).map(|i| self.row(i)[..c].to_vec()).collect();
        let mut m = Self::from_rows(rows);
        m.labels = self.labels.iter().take(r).copied().collect();
        m
    }

    fn push_poly_row(&mut self, p: &XPoly<C>, shift: usize, label: RowLabel) {
        let q = self.cols;
        let mut row = vec![C::zero(); q];
        for (k, c) in p.coeffs().iter().enumerate() {
            // power k + shift sits in column q - 1 - (k + shift)
            row[q - 1 - k - shift] = c.clone();
        }
        self.entries.extend(row);
        self.labels.push(label);
        self.rows += 1;
    }
}

impl<C: Ring> fmt::Display for PolyMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for PolyMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Fraction-free elimination of the first `steps` columns of a working copy,
/// with structural row swaps. Returns `None` when a column has no nonzero
/// candidate pivot, otherwise the reduced entries and the swap parity.
fn bareiss_prefix<C: Ring>(m: &PolyMatrix<C>, steps: usize) -> Option<(Vec<Vec<C>>, bool)> {
    let (p, q) = (m.rows, m.cols);
    let mut a: Vec<Vec<C>> = (0..p).map(|i| m.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = C::one();
    for k in 0..steps {
        let piv = (k..p).find(|&r| !a[r][k].is_zero())?;
        if piv != k {
            a.swap(piv, k);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in (k + 1)..q {
                let v = if lead.is_zero() {
                    if row[j].is_zero() {
                        continue;
                    }
                    pivot_row[k].mul(&row[j])
                } else {
                    pivot_row[k].mul_sub(&row[j], &lead, &pivot_row[j])
                };
                row[j] = if prev.is_one() {
                    v
                } else {
                    v.div_exact(&prev).expect("Bareiss division is exact")
                };
            }
            row[k] = C::zero();
        }
        prev = a[k][k].clone();
    }
    Some((a, negate))
}

/// `dp M = sum_i |M_1, ..., M_{p-1}, M_{q-i}| x^i` for a `p x q` matrix,
/// `p <= q`. One elimination of the first `p - 1` columns yields every minor
/// in the last reduced row.
pub fn determinant_polynomial<C: Ring>(m: &PolyMatrix<C>) -> Result<XPoly<C>> {
    let (p, q) = (m.rows, m.cols);
    if p > q {
        return Err(Error::TooManyRows { rows: p, cols: q });
    }
    if p == 0 {
        return Ok(XPoly::constant(C::one()));
    }
    if C::EXPAND_MINORS && q <= 64 {
        let rows: Vec<Vec<C>> = (0..p).map(|i| m.row(i).to_vec()).collect();
        let base = low_mask(p - 1);
        let targets: Vec<u64> = (0..=q - p).map(|i| base | 1u64 << (q - 1 - i)).collect();
        return Ok(XPoly::new(minors_by_expansion(&rows, &targets)));
    }
    let Some((a, negate)) = bareiss_prefix(m, p - 1) else {
        return Ok(XPoly::zero());
    };
    let last = &a[p - 1];
    let coeffs = (0..=q - p)
        .map(|i| {
            let v = last[q - 1 - i].clone();
            if negate {
                v.neg()
            } else {
                v
            }
        })
        .collect();
    Ok(XPoly::new(coeffs))
}

/// Determinant of a square matrix.
pub fn determinant<C: Ring>(m: &PolyMatrix<C>) -> Result<C> {
    if m.rows != m.cols {
        return Err(Error::Invalid(format!("{}x{} matrix is not square", m.rows, m.cols)));
    }
    Ok(determinant_polynomial(m)?.coeff(0))
}

/// The implied shift count of the first polynomial: `max(d_i + δ_i) - d_0`
/// over the nonzero `δ_i` when that is nonnegative, otherwise 1.
pub fn delta0<C: Ring>(f: &[XPoly<C>], delta: &[usize]) -> Result<usize> {
    let d0 = f.first().and_then(XPoly::degree).ok_or(Error::ConstantBase)?;
    let mut best: Option<usize> = None;
    for (i, &di) in delta.iter().enumerate() {
        if di == 0 {
            continue;
        }
        let fi = f.get(i + 1).ok_or(Error::MissingPolynomial(i + 1))?;
        if let Some(deg) = fi.degree() {
            best = Some(best.map_or(deg + di, |b| b.max(deg + di)));
        }
    }
    Ok(match best {
        Some(b) if b >= d0 => b - d0,
        _ => 1,
    })
}

/// The generalized Sylvester matrix `M_δ(F)`: `δ_0` shifts of `F_0` followed
/// by `δ_i` shifts of each `F_i`, highest shift first, coefficients in
/// descending powers of `x`.
pub fn generalized_sylvester<C: Ring>(f: &[XPoly<C>], delta: &[usize]) -> Result<PolyMatrix<C>> {
    let d0 = f.first().and_then(XPoly::degree).ok_or(Error::ConstantBase)?;
    if d0 == 0 {
        return Err(Error::ConstantBase);
    }
    let sum: usize = delta.iter().sum();
    if sum > d0 {
        return Err(Error::IndexTooLarge { sum, degree: d0 });
    }
    let e0 = delta0(f, delta)?;
    let mut m = PolyMatrix::zeros(0, e0 + d0);
    for (poly, &count) in std::iter::once(&e0).chain(delta.iter()).enumerate() {
        for r in 0..count {
            let shift = count - 1 - r;
            m.push_poly_row(&f[poly], shift, RowLabel { poly, shift });
        }
    }
    Ok(m)
}

/// `R_δ(F) = dp M_δ(F)`.
pub fn subresultant<C: Ring>(f: &[XPoly<C>], delta: &[usize]) -> Result<XPoly<C>> {
    determinant_polynomial(&generalized_sylvester(f, delta)?)
}

/// Coefficient of `x^(d_0 - |δ|)` in `R_δ(F)`.
pub fn psc<C: Ring>(f: &[XPoly<C>], delta: &[usize]) -> Result<C> {
    let d0 = f.first().and_then(XPoly::degree).ok_or(Error::ConstantBase)?;
    let sum: usize = delta.iter().sum();
    Ok(subresultant(f, delta)?.coeff(d0.saturating_sub(sum)))
}

fn minus_unit(delta: &[usize], i: usize) -> Vec<usize> {
    let mut d = delta.to_vec();
    d[i] -= 1;
    d
}

/// `R_δ(F)` from two smaller subresultants:
/// `psc(δ - e_j - e_t) * R_δ = prem(R_{δ-e_j}, R_{δ-e_t})`, where `t` is the
/// last position and `j < t` the first position with `δ_j > δ_{j+1}`.
/// Fails when the index is not of that shape, when the divisor vanishes, or
/// when either operand falls below its nominal degree.
pub fn subresultant_via_prem<C: Ring>(f: &[XPoly<C>], delta: &[usize]) -> Result<XPoly<C>> {
    let t = delta.len();
    let bad = || Error::BadPremIndex(delta.to_vec());
    if t < 2 || delta[t - 1] == 0 || delta.windows(2).any(|w| w[0] < w[1]) {
        return Err(bad());
    }
    let j = (0..t - 1).find(|&j| delta[j] > delta[j + 1]).ok_or_else(bad)?;
    let d0 = f.first().and_then(XPoly::degree).ok_or(Error::ConstantBase)?;
    let sum: usize = delta.iter().sum();
    if sum > d0 {
        return Err(Error::IndexTooLarge { sum, degree: d0 });
    }
    let dj = minus_unit(delta, j);
    let dt = minus_unit(delta, t - 1);
    let djt = minus_unit(&dj, t - 1);
    let a = subresultant(f, &dj)?;
    let b = subresultant(f, &dt)?;
    let nominal = d0 + 1 - sum;
    if a.degree() != Some(nominal) || b.degree() != Some(nominal) {
        return Err(Error::Degenerate(format!(
            "operands of the pseudo-remainder for {delta:?} drop below degree {nominal}"
        )));
    }
    let divisor = psc(f, &djt)?;
    if divisor.is_zero() {
        return Err(Error::ZeroDivisor("vanishing principal subresultant coefficient"));
    }
    a.prem(&b)?
        .div_coeffs_exact(&divisor)
        .ok_or_else(|| Error::Degenerate("pseudo-remainder not divisible by the coefficient".into()))
}

/// The `2n x 2n` matrix interleaving shifts of `P` and of `P'` (the latter
/// written with a leading zero so both rows have `n + 1` slots).
pub fn discrimination_matrix<C: Ring>(p: &XPoly<C>) -> Result<PolyMatrix<C>> {
    let n = p.degree().filter(|&d| d >= 1).ok_or(Error::ConstantBase)?;
    let dp = p.derivative(1);
    let desc_p: Vec<C> = (0..=n).rev().map(|i| p.coeff(i)).collect();
    let desc_dp: Vec<C> = (0..=n).rev().map(|i| dp.coeff(i)).collect();
    let mut m = PolyMatrix::zeros(0, 2 * n);
    for k in 0..n {
        for (poly, desc) in [(0, &desc_p), (1, &desc_dp)] {
            let mut row = vec![C::zero(); 2 * n];
            for (s, c) in desc.iter().enumerate() {
                if k + s < 2 * n {
                    row[k + s] = c.clone();
                }
            }
            m.entries.extend(row);
            m.labels.push(RowLabel { poly, shift: n - 1 - k });
            m.rows += 1;
        }
    }
    Ok(m)
}

/// `D_1, ..., D_m` where `D_i` is the leading principal minor of order `2i`
/// of the discrimination matrix. A single unpivoted elimination yields the
/// minors as successive pivots; if a pivot vanishes the remaining minors are
/// computed one by one.
pub fn discriminant_prefix<C: Ring>(p: &XPoly<C>, m: usize) -> Result<Vec<C>> {
    let full = discrimination_matrix(p)?;
    let n = full.rows / 2;
    if m > n {
        return Err(Error::Invalid(format!("only {n} discriminants exist, {m} requested")));
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    let size = 2 * m;
    if C::EXPAND_MINORS {
        let rows: Vec<Vec<C>> = (0..size).map(|i| full.row(i)[..size].to_vec()).collect();
        let orders: Vec<usize> = (1..=m).map(|i| 2 * i).collect();
        return Ok(leading_minors_by_expansion(&rows, &orders));
    }
    let mut a: Vec<Vec<C>> = (0..size).map(|i| full.row(i)[..size].to_vec()).collect();
    let mut out = Vec::with_capacity(m);
    let mut prev = C::one();
    for k in 0..size {
        if k % 2 == 1 {
            out.push(a[k][k].clone());
        }
        if a[k][k].is_zero() {
            break;
        }
        if k + 1 == size {
            break;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in (k + 1)..size {
                let v = if lead.is_zero() {
                    if row[j].is_zero() {
                        continue;
                    }
                    pivot_row[k].mul(&row[j])
                } else {
                    pivot_row[k].mul_sub(&row[j], &lead, &pivot_row[j])
                };
                row[j] = if prev.is_one() {
                    v
                } else {
                    v.div_exact(&prev).expect("Bareiss division is exact")
                };
            }
            row[k] = C::zero();
        }
        prev = a[k][k].clone();
    }
    for i in out.len() + 1..=m {
        out.push(determinant(&full.leading_block(2 * i, 2 * i))?);
    }
    Ok(out)
}

/// Leading principal minors of the given orders of a square matrix.
pub fn leading_minors_by_expansion<C: Ring>(a: &[Vec<C>], orders: &[usize]) -> Vec<C> {
    let targets: Vec<u64> = orders.iter().map(|&t| low_mask(t)).collect();
    minors_by_expansion(a, &targets)
}

fn low_mask(t: usize) -> u64 {
    if t >= 64 {
        u64::MAX
    } else {
        (1u64 << t) - 1
    }
}

/// For each column set `T`, the minor on the first `|T|` rows and the columns
/// of `T`, by Laplace expansion along successive rows with every minor of the
/// rows so far memoised by its column set. Only original entries multiply
/// stored minors, so nothing is divided. Column sets that can no longer be
/// completed to some target are dropped.
pub fn minors_by_expansion<C: Ring>(a: &[Vec<C>], targets: &[u64]) -> Vec<C> {
    let size = targets.iter().map(|t| t.count_ones() as usize).max().unwrap_or(0);
    let cols = targets.iter().map(|t| 64 - t.leading_zeros() as usize).max().unwrap_or(0);
    assert!(a.len() >= size, "not enough rows for the requested minors");
    // rows holding a nonzero, per column
    let nonzero_rows: Vec<u64> = (0..cols)
        .map(|j| (0..size).filter(|&r| !a[r][j].is_zero()).fold(0, |m, r| m | 1 << r))
        .collect();
    let viable = |mask: u64, r: usize| {
        targets.iter().any(|&t| {
            let rows = t.count_ones() as usize;
            let pending = low_mask(rows) & !low_mask(r);
            rows >= r
                && mask & !t == 0
                && (0..cols).all(|j| t & (1 << j) == 0 || mask & (1 << j) != 0 || nonzero_rows[j] & pending != 0)
        })
    };
    let mut out: Vec<C> = vec![C::zero(); targets.len()];
    let mut level: HashMap<u64, C> = HashMap::new();
    level.insert(0, C::one());
    for r in 0..size {
        let mut next: HashMap<u64, C> = HashMap::new();
        for (&mask, minor) in &level {
            for c in 0..cols {
                let bit = 1u64 << c;
                if mask & bit != 0 || a[r][c].is_zero() || !viable(mask | bit, r + 1) {
                    continue;
                }
                let below = (mask & (bit - 1)).count_ones() as usize;
                let term = a[r][c].mul(minor);
                let slot = next.entry(mask | bit).or_insert_with(C::zero);
                *slot = if (r + below).is_multiple_of(2) { slot.add(&term) } else { slot.sub(&term) };
            }
        }
        next.retain(|_, v| !v.is_zero());
        level = next;
        for (i, &t) in targets.iter().enumerate() {
            if t.count_ones() as usize == r + 1 {
                if let Some(v) = level.get(&t) {
                    out[i] = v.clone();
                }
            }
        }
    }
    out
}

/// The full discriminant sequence `D_1, ..., D_n`.
pub fn discriminant_sequence<C: Ring>(p: &XPoly<C>) -> Result<Vec<C>> {
    let n = p.degree().ok_or(Error::ConstantBase)?;
    discriminant_prefix(p, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use crate::param::ParamPoly;
    use crate::parse::{parse_numeric, parse_symbolic};
    use crate::xpoly::{NumPoly, SymPoly};

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn qmat(rows: &[&[i64]]) -> PolyMatrix<BigRational> {
        PolyMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect())
    }

    /// Leibniz expansion, independent of elimination.
    fn leibniz(m: &PolyMatrix<BigRational>) -> BigRational {
        fn rec(m: &PolyMatrix<BigRational>, row: usize, used: &mut Vec<bool>) -> BigRational {
            if row == m.rows() {
                return q(1);
            }
            let mut acc = q(0);
            let mut sign = 1;
            for c in 0..m.cols() {
                if used[c] {
                    continue;
                }
                if !m.get(row, c).is_zero() {
                    used[c] = true;
                    let sub = rec(m, row + 1, used);
                    used[c] = false;
                    let t = m.get(row, c) * sub;
                    acc = if sign > 0 { acc + t } else { acc - t };
                }
                sign = -sign;
            }
            acc
        }
        rec(m, 0, &mut vec![false; m.cols()])
    }

    fn ex4() -> NumPoly {
        NumPoly::from_i64s(&[-1, 1, 1, -1, 1, -1, -1, 1])
    }

    #[test]
    fn dp_of_a_wide_integer_matrix() {
        let m = qmat(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(determinant_polynomial(&m).unwrap(), NumPoly::from_i64s(&[-6, -3]));
        let sq = qmat(&[&[2, 1], &[7, 4]]);
        assert_eq!(determinant_polynomial(&sq).unwrap(), NumPoly::from_i64s(&[1]));
        assert!(determinant_polynomial(&qmat(&[&[1], &[2]])).is_err());
    }

    #[test]
    fn dp_needs_row_swaps() {
        let m = qmat(&[&[0, 1, 2, 3], &[0, 4, 5, 6], &[1, 0, 0, 1]]);
        let want = [3, 2].map(|c| {
            leibniz(&PolyMatrix::from_rows(
                (0..3).map(|i| vec![m.get(i, 0).clone(), m.get(i, 1).clone(), m.get(i, c).clone()]).collect(),
            ))
        });
        let dp = determinant_polynomial(&m).unwrap();
        assert_eq!(dp.coeff(0), want[0]);
        assert_eq!(dp.coeff(1), want[1]);
        let singular = qmat(&[&[0, 1, 2], &[0, 3, 4]]);
        assert!(determinant_polynomial(&singular).unwrap().is_zero());
    }

    #[test]
    fn septic_candidates_raw_and_scaled() {
        let raw = ex4().derivative_tower(false);
        let m = generalized_sylvester(&raw, &[4]).unwrap();
        assert_eq!((m.rows(), m.cols()), (7, 10));
        assert_eq!(
            subresultant(&raw, &[4]).unwrap(),
            parse_numeric("-1536*(x-1)^2*(x+1)").unwrap()
        );
        assert_eq!(subresultant(&raw, &[4, 2]).unwrap(), parse_numeric("-1179648*(x-1)").unwrap());
        assert_eq!(subresultant(&raw, &[4, 2, 1]).unwrap(), NumPoly::from_i64s(&[-56623104]));
        let scaled = ex4().derivative_tower(true);
        assert_eq!(generalized_sylvester(&scaled, &[4, 2]).unwrap().rows(), 9);
        // each row of x^s P^(k)/k! divides the determinant by k!
        assert_eq!(subresultant(&scaled, &[4, 2]).unwrap(), parse_numeric("-1179648/4*(x-1)").unwrap());
        assert_eq!(subresultant(&scaled, &[4, 2, 1]).unwrap(), parse_numeric("-56623104/24").unwrap());
    }

    #[test]
    fn sylvester_shapes_and_labels() {
        let f = ex4().derivative_tower(false);
        let m = generalized_sylvester(&f, &[0]).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 8));
        assert_eq!(subresultant(&f, &[]).unwrap(), ex4());
        assert_eq!(subresultant(&f, &[1]).unwrap(), f[1]);
        let m = generalized_sylvester(&f, &[4]).unwrap();
        assert_eq!(m.labels()[0], RowLabel { poly: 0, shift: 2 });
        assert_eq!(m.labels()[3], RowLabel { poly: 1, shift: 3 });
        assert_eq!(m.row(3)[0..2], [q(7), q(-6)]);
        assert!(generalized_sylvester(&f, &[5, 3]).is_err());
        let m = generalized_sylvester(&f, &[2, 0, 1]).unwrap();
        assert!(m.labels().iter().all(|l| l.poly != 2));
    }

    fn cubic() -> Vec<SymPoly> {
        SymPoly::generic(3, &[]).derivative_tower(false)
    }

    #[test]
    fn symbolic_cubic_subresultants() {
        let f = cubic();
        assert_eq!(subresultant(&f, &[1, 1]).unwrap(), parse_symbolic("6*a3*(3*a3*x + a2)").unwrap());
        assert_eq!(
            subresultant(&f, &[2, 0]).unwrap(),
            parse_symbolic("a3*((6*a1*a3 - 2*a2^2)*x + (9*a0*a3 - a1*a2))").unwrap()
        );
        assert_eq!(psc(&f, &[1, 0]).unwrap(), parse_symbolic("3*a3").unwrap().coeff(0));
        let a = subresultant(&f, &[1, 1]).unwrap();
        let b = subresultant(&f, &[2, 0]).unwrap();
        let disc = "27*a0*a3^2 - 9*a1*a2*a3 + 2*a2^3";
        assert_eq!(a.prem(&b).unwrap(), parse_symbolic(&format!("-6*a3^2*({disc})")).unwrap());
        let want = parse_symbolic(&format!("-2*a3*({disc})")).unwrap();
        assert_eq!(subresultant(&f, &[2, 1]).unwrap(), want);
        assert_eq!(subresultant_via_prem(&f, &[2, 1]).unwrap(), want);
    }

    #[test]
    fn prem_route_on_a_generic_quartic() {
        let f = SymPoly::generic(4, &[]).derivative_tower(true);
        for delta in [vec![2, 1], vec![3, 1], vec![2, 1, 1], vec![2, 2, 0]] {
            match subresultant_via_prem(&f, &delta) {
                Ok(r) => assert_eq!(r, subresultant(&f, &delta).unwrap(), "{delta:?}"),
                Err(e) => assert!(matches!(e, Error::BadPremIndex(_)), "{delta:?}: {e}"),
            }
        }
        assert!(subresultant_via_prem(&f, &[2, 2]).is_err());
    }

    #[test]
    fn prem_route_guards_a_vanishing_divisor() {
        // x^3 shares x^2 with its derivative, so R_(2,0) vanishes
        let f = NumPoly::from_i64s(&[0, 0, 0, 1]).derivative_tower(false);
        assert!(subresultant_via_prem(&f, &[2, 1]).is_err());
    }

    #[test]
    fn discriminants_of_small_polynomials() {
        let p = NumPoly::from_i64s(&[1, 0, 1]);
        assert_eq!(discriminant_sequence(&p).unwrap(), vec![q(2), q(-4)]);
        let g = SymPoly::generic(4, &[]);
        let d = discriminant_sequence(&g).unwrap();
        assert_eq!(d[0], ParamPoly::var(4).mul(&ParamPoly::var(4)).scale(&BigInt::from(4)));
        let m = discrimination_matrix(&g).unwrap();
        assert_eq!((m.rows(), m.cols()), (8, 8));
    }

    #[test]
    fn discriminants_match_leibniz_minors() {
        let p = parse_numeric("(x-1)^2*(x-2)*(x^2+1)").unwrap();
        let m = discrimination_matrix(&p).unwrap();
        let d = discriminant_sequence(&p).unwrap();
        for i in 1..=5 {
            assert_eq!(d[i - 1], leibniz(&m.leading_block(2 * i, 2 * i)), "D{i}");
        }
        // zero pivots force the per-minor fallback
        let p = parse_numeric("x^4").unwrap();
        let m = discrimination_matrix(&p).unwrap();
        let d = discriminant_sequence(&p).unwrap();
        for i in 1..=4 {
            assert_eq!(d[i - 1], leibniz(&m.leading_block(2 * i, 2 * i)), "D{i}");
        }
    }
}
