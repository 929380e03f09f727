//! Admissible sequences: any two equal entries are separated by a larger one.

use crate::error::{Error, Result};

/// Largest `n` for which [`enumerate_d`] materializes `D_n` by default.
pub const DEFAULT_MAX_ENUMERATION: u32 = 6;

pub fn is_admissible(s: &[u32]) -> bool {
    for (a, &x) in s.iter().enumerate() {
        let mut between_max = 0;
        for &y in &s[a + 1..] {
            if y == x {
                if between_max <= x {
                    return false;
                }
                break;
            }
            between_max = between_max.max(y);
        }
    }
    true
}

/// All admissible sequences over `1..n`, shortest first then lexicographic.
///
/// Built from `D_n = D_{n−1} ⊔ D_{n−1}·(n−1)·D_{n−1}`.
pub fn enumerate_d(n: u32, max_n: u32) -> Result<Vec<Vec<u32>>> {
    if n < 1 {
        return Err(Error::Precondition("D_n needs n >= 1".into()));
    }
    if n > max_n {
        return Err(Error::GuardExceeded {
            what: "admissible-sequence bound n",
            limit: max_n as usize,
            got: n as usize,
        });
    }
    let mut d: Vec<Vec<u32>> = vec![Vec::new()];
    for top in 1..n {
        let mut next = d.clone();
        next.reserve(d.len() * d.len());
        for left in &d {
            for right in &d {
                let mut s = Vec::with_capacity(left.len() + right.len() + 1);
                s.extend_from_slice(left);
                s.push(top);
                s.extend_from_slice(right);
                next.push(s);
            }
        }
        d = next;
    }
    d.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(d)
}

/// `|D_n|` from `|D_n| = |D_{n−1}|² + |D_{n−1}|`; `None` on overflow.
pub fn count_d(n: u32) -> Option<u128> {
    let mut c: u128 = 1;
    for _ in 1..n {
        c = c.checked_mul(c)?.checked_add(c)?;
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&[1, 2, 1]));
        assert!(!is_admissible(&[1, 1]));
        assert!(!is_admissible(&[2, 1, 2]));
        assert!(is_admissible(&[]));
        assert!(is_admissible(&[3, 1, 2, 1, 3, 1]) == false);
        assert!(is_admissible(&[1, 2, 1, 3, 1, 2, 1]));
    }

    #[test]
    fn small_d_sets() {
        assert_eq!(enumerate_d(1, 6).unwrap(), vec![Vec::<u32>::new()]);
        assert_eq!(enumerate_d(2, 6).unwrap(), vec![vec![], vec![1]]);
        assert_eq!(
            enumerate_d(3, 6).unwrap(),
            vec![vec![], vec![1], vec![2], vec![1, 2], vec![2, 1], vec![1, 2, 1]]
        );
    }

    #[test]
    fn counts_follow_recursion() {
        assert_eq!(enumerate_d(4, 6).unwrap().len(), 42);
        assert_eq!(count_d(4), Some(42));
        assert_eq!(count_d(5), Some(1806));
        assert_eq!(count_d(6), Some(1806 * 1806 + 1806));
    }

    #[test]
    fn guard_rejects_large_n() {
        assert!(matches!(
            enumerate_d(7, DEFAULT_MAX_ENUMERATION),
            Err(Error::GuardExceeded { got: 7, .. })
        ));
        assert!(enumerate_d(0, 6).is_err());
    }
}
