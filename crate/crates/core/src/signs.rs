//! Revised sign lists, sign-change counts and root counting from the
//! discriminant sequence.

use num_rational::BigRational;

use crate::error::Result;
use crate::ring::sign_of;
use crate::sylvester::discriminant_sequence;
use crate::xpoly::NumPoly;

/// Replaces each zero run strictly between two nonzero entries by the
/// pattern `-s, -s, s, s, -s, ...` where `s` is the sign before the run.
/// Leading and trailing zeros are kept.
pub fn revise(sigma: &[i8]) -> Vec<i8> {
    let mut out = sigma.to_vec();
    let mut i = 0;
    while i < out.len() {
        if out[i] == 0 {
            i += 1;
            continue;
        }
        let Some(next) = (i + 1..out.len()).find(|&k| out[k] != 0) else {
            break;
        };
        let s = out[i];
        for k in 1..next - i {
            out[i + k] = if k.div_ceil(2) % 2 == 1 { -s } else { s };
        }
        i = next;
    }
    out
}

/// Sign changes between consecutive nonzero entries of the revised list.
pub fn var(sigma: &[i8]) -> usize {
    let nz: Vec<i8> = revise(sigma).into_iter().filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of nonzero entries after revision.
pub fn nonzero_count(sigma: &[i8]) -> usize {
    revise(sigma).iter().filter(|&&s| s != 0).count()
}

pub fn signs(values: &[BigRational]) -> Vec<i8> {
    values.iter().map(sign_of).collect()
}

/// `(distinct real roots, pairs of distinct imaginary roots)` of a numeric
/// polynomial of positive degree, read off the signs of its discriminant
/// sequence.
pub fn count_roots(p: &NumPoly) -> Result<(usize, usize)> {
    let s = signs(&discriminant_sequence(p)?);
    let nu = var(&s);
    let eta = nonzero_count(&s);
    Ok((eta - 2 * nu, nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_numeric;
    use proptest::prelude::*;

    #[test]
    fn revision_patterns() {
        assert_eq!(revise(&[1, 0, 0, -1]), vec![1, -1, -1, -1]);
        assert_eq!(revise(&[1, 1, 1]), vec![1, 1, 1]);
        assert_eq!(revise(&[1, 0, 0, 0, 0, 1]), vec![1, -1, -1, 1, 1, 1]);
        assert_eq!(revise(&[0, -1, 0, 1, 0, 0]), vec![0, -1, 1, 1, 0, 0]);
    }

    #[test]
    fn sign_changes() {
        assert_eq!(var(&[1, 0, 0, -1]), 1);
        assert_eq!(var(&[1, 1, 1, 1]), 0);
        assert_eq!(var(&[1, -1, 1, 0, 0]), 2);
    }

    #[test]
    fn root_counts_of_known_polynomials() {
        let q = parse_numeric("(x-1)^2*(x-2)*(x^2+1)").unwrap();
        let s = signs(&discriminant_sequence(&q).unwrap());
        assert_eq!(var(&s), 1);
        assert_eq!(count_roots(&q).unwrap(), (2, 1));
        assert_eq!(count_roots(&parse_numeric("x^2+1").unwrap()).unwrap(), (0, 1));
        assert_eq!(count_roots(&parse_numeric("(x-1)*(x-2)*(x-3)").unwrap()).unwrap(), (3, 0));
        assert_eq!(count_roots(&parse_numeric("(x^2+1)^2*(x-5)^3").unwrap()).unwrap(), (1, 1));
    }

    proptest! {
        #[test]
        fn revision_is_identity_without_interior_zeros(
            lead in 0usize..4, body in prop::collection::vec(prop::sample::select(vec![-1i8, 1]), 0..8), tail in 0usize..4
        ) {
            let mut s = vec![0i8; lead];
            s.extend(&body);
            s.extend(vec![0i8; tail]);
            prop_assert_eq!(revise(&s), s.clone());
        }

        #[test]
        fn revision_leaves_no_interior_zeros(s in prop::collection::vec(prop::sample::select(vec![-1i8, 0, 1]), 0..12)) {
            let r = revise(&s);
            let nz: Vec<usize> = (0..r.len()).filter(|&i| r[i] != 0).collect();
            if let (Some(&a), Some(&b)) = (nz.first(), nz.last()) {
                prop_assert!(r[a..=b].iter().all(|&x| x != 0));
            }
            prop_assert_eq!(revise(&r), r.clone());
            prop_assert!(var(&s) < s.len().max(1));
        }
    }
}
