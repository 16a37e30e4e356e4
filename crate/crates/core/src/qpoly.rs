//! Exact univariate polynomials with arbitrary-precision integer coefficients,
//! and the q-analogs built from them.
//!
//! Coefficients are stored densely in ascending degree with no trailing
//! zeros, so structural equality is polynomial equality. The variable name is
//! not part of the value; it is chosen at render time.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Display name of the indeterminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Q,
    T,
}

impl Var {
    pub fn as_str(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
        }
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// `c · x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c.into());
        IntPoly::from_coeffs(coeffs)
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    /// Sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Quotient and remainder by long division. Every quotient coefficient must
    /// be an integer; otherwise [`Error::InexactDivision`].
    pub fn div_rem(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InexactDivision);
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&d| d >= dd) else {
            return Ok((IntPoly::zero(), self.clone()));
        };
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// `self / divisor`, failing unless the remainder is zero.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Coefficients are symmetric about `center / 2`: `c_i = c_{center-i}`
    /// and nothing lives above degree `center`.
    pub fn is_palindromic(&self, center: usize) -> bool {
        if self.degree().is_some_and(|d| d > center) {
            return false;
        }
        (0..=center).all(|i| self.coeff(i) == self.coeff(center - i))
    }

    /// Weakly increasing, then weakly decreasing.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let mut i = 1;
        while i < c.len() && c[i] >= c[i - 1] {
            i += 1;
        }
        while i < c.len() && c[i] <= c[i - 1] {
            i += 1;
        }
        i >= c.len()
    }

    pub fn display(&self, var: Var) -> PolyDisplay<'_> {
        PolyDisplay { poly: self, var }
    }

    /// `{"var": "q", "coeffs": ["1", "2", …]}`. Coefficients are decimal
    /// strings so that values beyond 64 bits survive JSON round trips.
    pub fn to_json(&self, var: Var) -> Value {
        json!({
            "var": var.as_str(),
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    /// Inverse of [`IntPoly::to_json`]; also accepts plain JSON integers.
    pub fn from_json(value: &Value) -> Option<(IntPoly, Var)> {
        let var = match value.get("var")?.as_str()? {
            "q" => Var::Q,
            "t" => Var::T,
            _ => return None,
        };
        let coeffs = value
            .get("coeffs")?
            .as_array()?
            .iter()
            .map(|c| match c {
                Value::String(s) => s.parse::<BigInt>().ok(),
                Value::Number(n) => n.as_i64().map(BigInt::from),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some((IntPoly::from_coeffs(coeffs), var))
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a IntPoly,
    var: Var,
}

impl fmt::Display for PolyDisplay<'_> {
    /// ASCII rendering such as `1 + 2q + 2q^2 - q^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var.as_str();
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str(v)?,
                _ => write!(f, "{v}^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(Var::Q).fmt(f)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |a, b| a + b)
    }
}

impl Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |a, b| a * b)
    }
}

impl<'a> Product<&'a IntPoly> for IntPoly {
    fn product<I: Iterator<Item = &'a IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |a, b| a * b)
    }
}

/// `[i] = 1 + q + … + q^{i-1}`; `[0] = 0`.
pub fn q_int(i: usize) -> IntPoly {
    IntPoly::from_coeffs(vec![BigInt::one(); i])
}

/// `[n]! = [1][2]⋯[n]`.
pub fn q_factorial(n: usize) -> IntPoly {
    (1..=n).map(q_int).product()
}

/// `(i) = 1 + q^i`.
pub fn two_term(i: usize) -> IntPoly {
    &IntPoly::one() + &IntPoly::monomial(1, i)
}

/// `(n)! = (1)(2)⋯(n)`.
pub fn two_factorial(n: usize) -> IntPoly {
    (1..=n).map(two_term).product()
}

/// Gaussian binomial `[n]! / ([p]! [n-p]!)`.
///
/// # Panics
///
/// If `p > n`, or if the division is inexact (which would mean the
/// arithmetic is broken).
pub fn q_binomial(n: usize, p: usize) -> IntPoly {
    assert!(p <= n, "q_binomial({n}, {p})");
    let den = &q_factorial(p) * &q_factorial(n - p);
    q_factorial(n)
        .div_exact(&den)
        .expect("Gaussian binomial division is exact")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn ring_operations() {
        let a = poly(&[1, 1]);
        assert_eq!(&a * &a, poly(&[1, 2, 1]));
        assert_eq!(&a + &IntPoly::zero(), a);
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(poly(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(poly(&[0, 0, 3]).degree(), Some(2));
        assert_eq!(a.scale(&BigInt::from(3)), poly(&[3, 3]));
        assert_eq!(a.pow(3), poly(&[1, 3, 3, 1]));
    }

    #[test]
    fn q_analogs() {
        assert_eq!(q_factorial(3), poly(&[1, 2, 2, 1]));
        assert_eq!(q_factorial(3).eval_at_one(), BigInt::from(6));
        assert_eq!(two_factorial(2), poly(&[1, 1, 1, 1]));
        assert_eq!(q_binomial(2, 1), poly(&[1, 1]));
        assert_eq!(q_binomial(4, 2), poly(&[1, 1, 2, 1, 1]));
        assert_eq!(q_factorial(0), IntPoly::one());
        assert_eq!(q_int(0), IntPoly::zero());
    }

    #[test]
    fn evaluations_at_one() {
        for n in 0..=10usize {
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(q_factorial(n).eval_at_one(), BigInt::from(fact));
            assert_eq!(two_factorial(n).eval_at_one(), BigInt::from(1u64 << n));
            for p in 0..=n {
                let b = num_integer::binomial(n as u64, p as u64);
                assert_eq!(q_binomial(n, p).eval_at_one(), BigInt::from(b));
                assert_eq!(q_binomial(n, p), q_binomial(n, n - p));
                let qb = q_binomial(n, p);
                assert!(qb.coeffs().iter().all(|c| !c.is_negative()));
                assert!(qb.is_palindromic(p * (n - p)));
            }
        }
    }

    #[test]
    fn big_coefficients_do_not_wrap() {
        // Coefficient sum 2^25 · 25! is far beyond u64.
        let f = &q_factorial(25) * &two_factorial(25);
        let expect = BigInt::from(1u64 << 25) * (1..=25u32).map(BigInt::from).product::<BigInt>();
        assert_eq!(f.eval_at_one(), expect);
    }

    #[test]
    fn division() {
        let f = poly(&[1, 2, 2, 2, 1]);
        assert_eq!(f.div_exact(&poly(&[1, 1])).unwrap(), poly(&[1, 1, 1, 1]));
        assert_eq!(
            poly(&[1, 1]).div_exact(&poly(&[0, 2])),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            poly(&[1, 0, 1]).div_exact(&poly(&[1, 1])),
            Err(Error::InexactDivision)
        );
        assert_eq!(f.div_exact(&IntPoly::zero()), Err(Error::InexactDivision));
        let (q, r) = poly(&[1]).div_rem(&poly(&[1, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, poly(&[1]));
    }

    #[test]
    fn shape_predicates() {
        assert!(poly(&[1, 2, 2, 2, 1]).is_palindromic(4));
        assert!(!poly(&[1, 2]).is_palindromic(1));
        assert!(!poly(&[1, 1]).is_palindromic(0));
        assert!(poly(&[0, 1, 1]).is_palindromic(3));
        assert!(poly(&[1, 10, 10, 1]).is_unimodal());
        assert!(!poly(&[1, 0, 1]).is_unimodal());
        assert!(IntPoly::zero().is_unimodal());
        assert!(poly(&[3, 2, 2, 1]).is_unimodal());
    }

    #[test]
    fn rendering() {
        let f = poly(&[1, 2, 2, 2, 1]);
        assert_eq!(f.to_string(), "1 + 2q + 2q^2 + 2q^3 + q^4");
        assert_eq!(poly(&[0, -1, 3]).display(Var::T).to_string(), "-t + 3t^2");
        assert_eq!(poly(&[-2, 0, -1]).to_string(), "-2 - q^2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        let j = f.to_json(Var::Q);
        assert_eq!(
            j.to_string(),
            r#"{"coeffs":["1","2","2","2","1"],"var":"q"}"#
        );
        assert_eq!(IntPoly::from_json(&j), Some((f, Var::Q)));
    }

    proptest! {
        #[test]
        fn div_inverts_mul(a in prop::collection::vec(-50i64..50, 0..6),
                           b in prop::collection::vec(-50i64..50, 1..5)) {
            let (a, b) = (poly(&a), poly(&b));
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }

        #[test]
        fn json_round_trip(c in prop::collection::vec(any::<i64>(), 0..8)) {
            let f = &poly(&c) * &poly(&c);
            prop_assert_eq!(IntPoly::from_json(&f.to_json(Var::T)), Some((f, Var::T)));
        }
    }
}
