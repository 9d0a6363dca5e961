use crate::error::{invalid, Result};

/// Number of ones in the binary expansion of `n`.
#[inline]
pub fn s2(n: u64) -> u32 {
    n.count_ones()
}

/// 2-adic valuation of a positive integer.
pub fn nu2(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(invalid("nu2 is undefined for 0"));
    }
    Ok(n.trailing_zeros())
}

/// The expansion `n = sum 4^j a_j` with `a_j` in {0,1,3,6} below the top
/// digit and the top digit in {1,2,3,6}, least significant digit first.
///
/// Built from the low end: the digit is forced by `n mod 4`, with residue 2
/// taking the digit 6 unless what remains is exactly 2.
pub fn base4_digits_0136(n: u64) -> Result<Vec<u8>> {
    if n == 0 {
        return Err(invalid("base-4 {0,1,3,6} expansion needs n >= 1"));
    }
    let mut digits = Vec::new();
    let mut rest = n;
    while rest > 0 {
        let d: u8 = match rest % 4 {
            0 => 0,
            1 => 1,
            3 => 3,
            _ if rest == 2 => 2,
            _ => 6,
        };
        rest = (rest - d as u64) / 4;
        digits.push(d);
    }
    Ok(digits)
}

/// Inverse of [`base4_digits_0136`].
pub fn eval_base4(digits: &[u8]) -> u64 {
    digits.iter().rev().fold(0u64, |acc, &d| acc * 4 + d as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_sums() {
        assert_eq!(s2(0), 0);
        assert_eq!(s2(3), 2);
        for k in 0..64 {
            assert_eq!(s2(1u64 << k), 1);
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(nu2(1).unwrap(), 0);
        assert_eq!(nu2(12).unwrap(), 2);
        assert_eq!(nu2(1 << 20).unwrap(), 20);
        assert!(nu2(0).is_err());
    }

    #[test]
    fn digit_bookkeeping() {
        // Stripping the trailing zeros leaves the digit sum alone.
        for n in 1..=1_000_000u64 {
            let v = nu2(n).unwrap();
            assert_eq!(s2(n >> v), s2(n));
        }
    }

    #[test]
    fn base4_small() {
        assert_eq!(base4_digits_0136(1).unwrap(), vec![1]);
        assert_eq!(base4_digits_0136(2).unwrap(), vec![2]);
        assert_eq!(base4_digits_0136(6).unwrap(), vec![6]);
        assert_eq!(base4_digits_0136(11).unwrap(), vec![3, 2]);
        assert!(base4_digits_0136(0).is_err());
    }

    /// All admissible digit strings up to a length, evaluated; every n must
    /// be hit exactly once and the greedy expansion must be that string.
    #[test]
    fn base4_unique_by_enumeration() {
        const LIMIT: u64 = 100_000;
        let mut seen: Vec<Option<Vec<u8>>> = vec![None; LIMIT as usize + 1];
        fn extend(prefix: &mut Vec<u8>, seen: &mut Vec<Option<Vec<u8>>>) {
            for &top in &[1u8, 2, 3, 6] {
                prefix.push(top);
                let v = eval_base4(prefix);
                if v <= LIMIT {
                    assert!(seen[v as usize].is_none(), "two expansions of {v}");
                    seen[v as usize] = Some(prefix.clone());
                }
                prefix.pop();
            }
            // Smallest value with this prefix and one more digit above it.
            let base = eval_base4(prefix);
            if base + 4u64.pow(prefix.len() as u32) > LIMIT {
                return;
            }
            for &d in &[0u8, 1, 3, 6] {
                prefix.push(d);
                extend(prefix, seen);
                prefix.pop();
            }
        }
        extend(&mut Vec::new(), &mut seen);
        for n in 1..=LIMIT {
            let expected = seen[n as usize]
                .as_ref()
                .unwrap_or_else(|| panic!("{n} missed"));
            assert_eq!(&base4_digits_0136(n).unwrap(), expected);
        }
    }
}
