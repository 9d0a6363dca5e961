use num_bigint::BigInt;
use num_traits::Zero;

/// Operand length below which the quadratic product is used.
pub(crate) const KARATSUBA_THRESHOLD: usize = 64;

pub(crate) fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn add_into(dst: &mut [BigInt], src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

fn sub_into(dst: &mut [BigInt], src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= s;
    }
}

fn sum(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    add_into(&mut out, short);
    out
}

/// Karatsuba product of coefficient slices (untrimmed result of length
/// `a.len() + b.len() - 1`).
pub(crate) fn karatsuba(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if short.len() < KARATSUBA_THRESHOLD {
        return schoolbook(a, b);
    }
    let half = long.len() / 2;
    if short.len() <= half {
        // Unbalanced: cut the long operand into pieces the size of the short one.
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (idx, chunk) in long.chunks(short.len()).enumerate() {
            let part = karatsuba(chunk, short);
            add_into(&mut out[idx * short.len()..], &part);
        }
        return out;
    }
    let (a0, a1) = long.split_at(half);
    let (b0, b1) = short.split_at(half);
    let z0 = karatsuba(a0, b0);
    let z2 = karatsuba(a1, b1);
    let mut z1 = karatsuba(&sum(a0, a1), &sum(b0, b1));
    sub_into(&mut z1, &z0);
    sub_into(&mut z1, &z2);

    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    add_into(&mut out, &z0);
    add_into(&mut out[half..], &z1);
    add_into(&mut out[2 * half..], &z2);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(n: usize, seed: i64) -> Vec<BigInt> {
        (0..n as i64)
            .map(|i| BigInt::from((i * 7919 + seed) % 211 - 105))
            .collect()
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        for &(n, m) in &[
            (64, 64),
            (65, 200),
            (300, 70),
            (257, 255),
            (1000, 64),
            (130, 129),
        ] {
            let a = seq(n, 3);
            let b = seq(m, 11);
            assert_eq!(karatsuba(&a, &b), schoolbook(&a, &b), "{n}x{m}");
        }
    }
}
