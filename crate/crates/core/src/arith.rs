//! Small integer helpers shared across modules.

use num_integer::Integer;

/// Nonnegative gcd of a list; the gcd of an empty or all-zero list is 0.
pub fn gcd_all<I: IntoIterator<Item = i64>>(values: I) -> i64 {
    values.into_iter().fold(0i64, |acc, v| acc.gcd(&v))
}

/// Canonical representative of `v` modulo `r`; `r == 0` means integers.
pub fn residue(v: i64, r: u64) -> i64 {
    if r == 0 {
        v
    } else {
        v.rem_euclid(r as i64)
    }
}

/// `a` divides `b`, with the convention that only 0 is divisible by 0.
pub fn divides(a: i64, b: i64) -> bool {
    if a == 0 {
        b == 0
    } else {
        b % a == 0
    }
}

/// Positive divisors of `n` (empty for 0), ascending.
pub fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_conventions() {
        assert_eq!(gcd_all([]), 0);
        assert_eq!(gcd_all([0, 0]), 0);
        assert_eq!(gcd_all([-24, -4]), 4);
        assert_eq!(gcd_all([0, 12]), 12);
    }

    #[test]
    fn residues() {
        assert_eq!(residue(-1, 4), 3);
        assert_eq!(residue(-1, 0), -1);
        assert_eq!(residue(9, 3), 0);
    }

    #[test]
    fn divisor_listing() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(-9), vec![1, 3, 9]);
        assert!(divisors(0).is_empty());
    }
}
