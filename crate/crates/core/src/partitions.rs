//! Integer partitions, conjugates and complete multiplicity structures.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Weakly decreasing positive parts.
pub type Partition = Vec<usize>;

/// A split of a partition into real-root multiplicities and imaginary-root
/// multiplicities, the latter listed once per root so each conjugate pair
/// contributes two equal adjacent entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CompletePartition {
    pub real: Vec<usize>,
    pub imag: Vec<usize>,
}

impl CompletePartition {
    pub fn new(mut real: Vec<usize>, mut imag: Vec<usize>) -> Self {
        real.sort_unstable_by(|a, b| b.cmp(a));
        imag.sort_unstable_by(|a, b| b.cmp(a));
        Self { real, imag }
    }

    pub fn degree(&self) -> usize {
        self.real.iter().sum::<usize>() + self.imag.iter().sum::<usize>()
    }

    /// The merged complex multiplicity vector.
    pub fn merged(&self) -> Partition {
        let mut all: Vec<usize> = self.real.iter().chain(&self.imag).copied().collect();
        all.sort_unstable_by(|a, b| b.cmp(a));
        all
    }

    /// True if the imaginary parts pair up as adjacent equal entries.
    pub fn is_valid(&self) -> bool {
        let dec = |v: &[usize]| v.windows(2).all(|w| w[0] >= w[1]) && v.iter().all(|&x| x > 0);
        dec(&self.real)
            && dec(&self.imag)
            && self.imag.len().is_multiple_of(2)
            && self.imag.chunks(2).all(|c| c[0] == c[1])
    }
}

impl fmt::Display for CompletePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "(({});({}))", j(&self.real), j(&self.imag))
    }
}

/// All partitions of `n` in descending lexicographic order; `M(0)` holds the
/// empty partition.
pub fn enumerate_m(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Partition, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            rec(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// `M(0) ∪ ... ∪ M(n-1)`, grouped by increasing sum, each group in
/// descending lexicographic order.
pub fn enumerate_n(n: usize) -> Vec<Partition> {
    (0..n).flat_map(enumerate_m).collect()
}

/// Number of partitions of each `0..=n`.
pub fn partition_counts(n: usize) -> Vec<u128> {
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for s in part..=n {
            p[s] += p[s - part];
        }
    }
    p
}

/// `conj[i] = #{parts >= i + 1}`, zero-padded to `pad_to` entries.
pub fn conjugate(mu: &[usize], pad_to: usize) -> Vec<usize> {
    let len = pad_to.max(mu.first().copied().unwrap_or(0));
    (1..=len).map(|i| mu.iter().filter(|&&m| m >= i).count()).collect()
}

/// Drops trailing zeros.
pub fn trim(v: &[usize]) -> Vec<usize> {
    let end = v.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
    v[..end].to_vec()
}

/// Lexicographic comparison, shorter lists padded with zeros.
pub fn lex_cmp(a: &[usize], b: &[usize]) -> Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let (x, y) = (a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0));
        match x.cmp(&y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

pub fn lex_greater(a: &[usize], b: &[usize]) -> bool {
    lex_cmp(a, b) == Ordering::Greater
}

/// Every way to split `mu` into real and paired imaginary multiplicities.
pub fn enumerate_complete(mu: &[usize]) -> Vec<CompletePartition> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &m in mu {
        match groups.last_mut() {
            Some((v, c)) if *v == m => *c += 1,
            _ => groups.push((m, 1)),
        }
    }
    let mut out = vec![CompletePartition::new(Vec::new(), Vec::new())];
    for (value, count) in groups {
        let mut next = Vec::new();
        for cp in &out {
            for pairs in 0..=count / 2 {
                let mut real = cp.real.clone();
                let mut imag = cp.imag.clone();
                real.extend(std::iter::repeat_n(value, count - 2 * pairs));
                imag.extend(std::iter::repeat_n(value, 2 * pairs));
                next.push(CompletePartition { real, imag });
            }
        }
        out = next;
    }
    out
}

/// All complete multiplicity structures of degree `n`, grouped by the
/// merged partition in descending lexicographic order.
pub fn enumerate_all_complete(n: usize) -> Vec<CompletePartition> {
    enumerate_m(n).iter().flat_map(|mu| enumerate_complete(mu)).collect()
}
