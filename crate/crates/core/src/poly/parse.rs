use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{invalid, Error};

/// Parses the rendering produced by [`IntPoly::display_with`]: a sum of
/// terms `c`, `c*v`, `c*v^d`, `v`, `v^d` with any single-word variable name.
/// The same power may appear more than once; terms are summed.
impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(invalid("empty polynomial"));
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut var: Option<String> = None;
        for (negative, term) in split_terms(&compact)? {
            let (c, d) = parse_term(term, &mut var)?;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigInt::zero());
            }
            if negative {
                coeffs[d] -= c;
            } else {
                coeffs[d] += c;
            }
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>, Error> {
    let mut terms = Vec::new();
    let mut negative = false;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        // A sign after `^` would be a negative exponent, which we reject below.
        if (b == b'+' || b == b'-') && (i == 0 || bytes[i - 1] != b'^') {
            if i > start {
                terms.push((negative, &s[start..i]));
            } else if i != 0 {
                return Err(invalid(format!("dangling sign in {s:?}")));
            }
            negative = b == b'-';
            start = i + 1;
        }
        i += 1;
    }
    if start >= s.len() {
        return Err(invalid(format!("trailing sign in {s:?}")));
    }
    terms.push((negative, &s[start..]));
    Ok(terms)
}

fn parse_term(term: &str, var: &mut Option<String>) -> Result<(BigInt, usize), Error> {
    let (coeff_part, power_part) = match term.find(|c: char| c.is_alphabetic()) {
        None => return Ok((parse_int(term)?, 0)),
        Some(0) => (None, term),
        Some(pos) => {
            let head = term[..pos]
                .strip_suffix('*')
                .ok_or_else(|| invalid(format!("expected '*' in term {term:?}")))?;
            (Some(head), &term[pos..])
        }
    };
    let c = match coeff_part {
        Some(h) => parse_int(h)?,
        None => BigInt::one(),
    };
    let (name, exp) = match power_part.split_once('^') {
        Some((n, e)) => {
            let d: usize = e
                .parse()
                .map_err(|_| invalid(format!("bad exponent in term {term:?}")))?;
            (n, d)
        }
        None => (power_part, 1),
    };
    if !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
        return Err(invalid(format!("bad variable in term {term:?}")));
    }
    match var {
        Some(v) if v != name => {
            return Err(invalid(format!("mixed variables {v:?} and {name:?}")));
        }
        Some(_) => {}
        None => *var = Some(name.to_string()),
    }
    Ok((c, exp))
}

fn parse_int(s: &str) -> Result<BigInt, Error> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(invalid(format!("bad coefficient {s:?}")));
    }
    s.parse()
        .map_err(|_| invalid(format!("bad coefficient {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rendered_forms() {
        let p: IntPoly = "1 + 10*x + 5*x^2".parse().unwrap();
        assert_eq!(p, IntPoly::from_i64s(&[1, 10, 5]));
        let q: IntPoly = "-3*t + t^2".parse().unwrap();
        assert_eq!(q, IntPoly::from_i64s(&[0, -3, 1]));
        let r: IntPoly = "x - x + 7".parse().unwrap();
        assert_eq!(r, IntPoly::constant(7));
        assert_eq!("0".parse::<IntPoly>().unwrap(), IntPoly::zero());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1 +", "x*3", "x + y", "2**x", "x^-1", "1.5"] {
            assert!(bad.parse::<IntPoly>().is_err(), "{bad:?}");
        }
    }
}
