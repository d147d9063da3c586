use std::fmt;

use serde::Serialize;

use super::BraidError;

/// A Laurent polynomial in `s` with exact `i128` coefficients. Zero
/// coefficients at either end are trimmed, so equal polynomials compare
/// equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LaurentPoly {
    min_degree: i64,
    coefficients: Vec<i128>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly {
            min_degree: 0,
            coefficients: Vec::new(),
        }
    }

    pub fn constant(c: i128) -> LaurentPoly {
        LaurentPoly::new(0, vec![c])
    }

    pub fn monomial(c: i128, degree: i64) -> LaurentPoly {
        LaurentPoly::new(degree, vec![c])
    }

    pub fn new(min_degree: i64, coefficients: Vec<i128>) -> LaurentPoly {
        let mut p = LaurentPoly {
            min_degree,
            coefficients,
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coefficients.last() == Some(&0) {
            self.coefficients.pop();
        }
        let lead = self.coefficients.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coefficients.drain(..lead);
            self.min_degree += lead as i64;
        }
        if self.coefficients.is_empty() {
            self.min_degree = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.coefficients.len() as i64 - 1
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: i64) -> i128 {
        let i = degree - self.min_degree;
        if i < 0 {
            return 0;
        }
        self.coefficients.get(i as usize).copied().unwrap_or(0)
    }

    /// Value at `s = 1`.
    pub fn eval_one(&self) -> Result<i128, BraidError> {
        self.coefficients.iter().try_fold(0i128, |acc, &c| {
            acc.checked_add(c).ok_or(BraidError::Overflow)
        })
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            min_degree: self.min_degree + k,
            coefficients: self.coefficients.clone(),
        }
    }

    pub fn neg(&self) -> Result<LaurentPoly, BraidError> {
        self.scale(-1)
    }

    pub fn scale(&self, k: i128) -> Result<LaurentPoly, BraidError> {
        let coefficients = self
            .coefficients
            .iter()
            .map(|&c| c.checked_mul(k).ok_or(BraidError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(LaurentPoly::new(self.min_degree, coefficients))
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly, BraidError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.max_degree().max(other.max_degree());
        let coefficients = (lo..=hi)
            .map(|d| {
                self.coefficient(d)
                    .checked_add(other.coefficient(d))
                    .ok_or(BraidError::Overflow)
            })
            .collect::<Result<_, _>>()?;
        Ok(LaurentPoly::new(lo, coefficients))
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, BraidError> {
        self.add(&other.neg()?)
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, BraidError> {
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let mut out = vec![0i128; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, &x) in self.coefficients.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in other.coefficients.iter().enumerate() {
                let term = x.checked_mul(y).ok_or(BraidError::Overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or(BraidError::Overflow)?;
            }
        }
        Ok(LaurentPoly::new(self.min_degree + other.min_degree, out))
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no
    /// remainder and every quotient coefficient is an integer.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, BraidError> {
        if divisor.is_zero() {
            return Err(BraidError::InexactDivision);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let mut rem = self.coefficients.clone();
        let d = &divisor.coefficients;
        if rem.len() < d.len() {
            return Err(BraidError::InexactDivision);
        }
        let lead = *d.last().expect("nonzero divisor");
        let mut quotient = vec![0i128; rem.len() - d.len() + 1];
        for k in (0..quotient.len()).rev() {
            let top = rem[k + d.len() - 1];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return Err(BraidError::InexactDivision);
            }
            let q = top / lead;
            quotient[k] = q;
            for (i, &c) in d.iter().enumerate() {
                let term = c.checked_mul(q).ok_or(BraidError::Overflow)?;
                rem[k + i] = rem[k + i].checked_sub(term).ok_or(BraidError::Overflow)?;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(BraidError::InexactDivision);
        }
        Ok(LaurentPoly::new(
            self.min_degree - divisor.min_degree,
            quotient,
        ))
    }
}

/// Sparse `coeff·s^e` terms, exponents ascending, e.g. `1·s^-1 - 1·s^0 + 1·s^1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = self.min_degree + i as i64;
            let sign = match (first, c < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            write!(f, "{sign}{}\u{b7}s^{e}", c.unsigned_abs())?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(lo: i64, c: &[i128]) -> LaurentPoly {
        LaurentPoly::new(lo, c.to_vec())
    }

    #[test]
    fn arithmetic() {
        let a = p(0, &[1, 1]);
        let b = p(0, &[1, -1]);
        assert_eq!(a.mul(&b).unwrap(), p(0, &[1, 0, -1]));
        assert_eq!(a.add(&b).unwrap(), p(0, &[2]));
        assert_eq!(a.sub(&a).unwrap(), LaurentPoly::zero());
        assert_eq!(p(-1, &[0, 0, 3]), LaurentPoly::monomial(3, 1));
    }

    #[test]
    fn exact_division() {
        let num = p(0, &[1, 0, -1]);
        assert_eq!(num.div_exact(&p(0, &[1, 1])).unwrap(), p(0, &[1, -1]));
        assert_eq!(
            num.div_exact(&p(0, &[1, 2])),
            Err(BraidError::InexactDivision)
        );
        assert_eq!(
            p(0, &[1, 1]).div_exact(&p(0, &[2])),
            Err(BraidError::InexactDivision)
        );
    }

    #[test]
    fn overflow_is_reported() {
        let big = LaurentPoly::constant(i128::MAX);
        assert_eq!(
            big.add(&LaurentPoly::constant(1)),
            Err(BraidError::Overflow)
        );
        assert_eq!(
            big.mul(&LaurentPoly::constant(2)),
            Err(BraidError::Overflow)
        );
    }

    #[test]
    fn display() {
        assert_eq!(
            p(-1, &[1, -1, 1]).to_string(),
            "1\u{b7}s^-1 - 1\u{b7}s^0 + 1\u{b7}s^1"
        );
        assert_eq!(p(0, &[-2, 0, 3]).to_string(), "-2\u{b7}s^0 + 3\u{b7}s^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
