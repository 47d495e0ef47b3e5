//! Exact univariate polynomial arithmetic over arbitrary-precision integers,
//! plus the extraction of the Wiener and hyper-Wiener indices from a Hosoya
//! polynomial.
//!
//! Hosoya polynomials themselves have nonnegative coefficients and a zero
//! constant term, but the rational closed forms evaluated elsewhere in the
//! crate go through signed numerators such as `t^{kd} - k t^d + (k-1)`, so
//! coefficients are signed `BigInt` throughout. The representation is dense
//! (distance polynomials of connected graphs have no gaps below the diameter)
//! and canonical: trailing zero coefficients are stripped, the zero
//! polynomial is the empty coefficient sequence, and equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from polynomial arithmetic and index extraction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// `div_exact` found that the division leaves a remainder. When the
    /// dividend came from a transcribed closed-form identity, this is the
    /// misprint detector: the identity does not hold in ℤ[t].
    #[error("polynomial division leaves a nonzero remainder")]
    NonzeroRemainder,
    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    /// `geometric_sum` requires a positive exponent step.
    #[error("geometric sum requires step d >= 1, got 0")]
    ZeroStep,
    /// A Hosoya polynomial must have no constant term.
    #[error("polynomial has a nonzero constant term, not a Hosoya polynomial")]
    NonzeroConstantTerm,
}

/// Dense univariate polynomial with exact integer coefficients;
/// `coeffs[k]` is the coefficient of `t^k`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    /// The zero polynomial (empty coefficient sequence).
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial::term(1, 0)
    }

    /// The monomial `c * t^degree`.
    pub fn term<C: Into<BigInt>>(coeff: C, degree: usize) -> Self {
        let c: BigInt = coeff.into();
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    /// Builds a polynomial from low-to-high coefficients, canonicalizing.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Polynomial { coeffs };
        p.canonicalize();
        p
    }

    /// Convenience constructor from machine integers, low-to-high.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Low-to-high coefficients in canonical form (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Sum of all coefficients, i.e. the value at t = 1. For a Hosoya
    /// polynomial of a connected graph on n vertices this is n(n-1)/2.
    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// True if every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by `t^d` (shift of the coefficient sequence).
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() || d == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Multiplies every coefficient by the integer `c`.
    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c: BigInt = c.into();
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * &c).collect(),
        }
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at an integer point (Horner).
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = BigInt::zero();
            if let Some(a) = self.coeffs.get(k) {
                c += a;
            }
            if let Some(b) = rhs.coeffs.get(k) {
                c += b;
            }
            coeffs.push(c);
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// `1 + t^d + t^{2d} + ... + t^{(k-1)d}`, the k-term geometric sum in `t^d`.
/// `k = 0` gives the zero polynomial; `d = 0` is rejected.
pub fn geometric_sum(d: usize, k: usize) -> Result<Polynomial, PolyError> {
    if d == 0 {
        return Err(PolyError::ZeroStep);
    }
    if k == 0 {
        return Ok(Polynomial::zero());
    }
    let mut coeffs = vec![BigInt::zero(); (k - 1) * d + 1];
    for j in 0..k {
        coeffs[j * d] = BigInt::one();
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Exact division in ℤ[t]: returns `q` with `q * den == num`, or
/// [`PolyError::NonzeroRemainder`] when no such integer polynomial exists.
///
/// The closed-form identities evaluated by `construct` and `chem` are
/// rational expressions that must collapse to polynomials; running them
/// through `div_exact` makes any transcription slip surface as an error
/// instead of a silently wrong result.
pub fn div_exact(num: &Polynomial, den: &Polynomial) -> Result<Polynomial, PolyError> {
    if den.is_zero() {
        return Err(PolyError::ZeroDivisor);
    }
    if num.is_zero() {
        return Ok(Polynomial::zero());
    }
    let dd = den.degree().expect("nonzero");
    let nd = match num.degree() {
        Some(nd) if nd >= dd => nd,
        _ => return Err(PolyError::NonzeroRemainder),
    };
    let lead = &den.coeffs[dd];
    let mut rem = num.coeffs.clone();
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..quot.len()).rev() {
        let top = std::mem::take(&mut rem[k + dd]);
        if top.is_zero() {
            continue;
        }
        let (q, r) = num_integer::Integer::div_rem(&top, lead);
        if !r.is_zero() {
            return Err(PolyError::NonzeroRemainder);
        }
        for (i, c) in den.coeffs.iter().enumerate().take(dd) {
            if !c.is_zero() {
                rem[k + i] -= c * &q;
            }
        }
        quot[k] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(PolyError::NonzeroRemainder);
    }
    Ok(Polynomial::from_coeffs(quot))
}

/// How a Hosoya polynomial was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "brute")]
    Brute,
    #[serde(rename = "decomposition")]
    Decomposition,
    #[serde(rename = "construction-formula")]
    ConstructionFormula,
    #[serde(rename = "family-closed-form")]
    FamilyClosedForm,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Brute => "brute",
            Method::Decomposition => "decomposition",
            Method::ConstructionFormula => "construction-formula",
            Method::FamilyClosedForm => "family-closed-form",
        };
        f.write_str(s)
    }
}

/// A Hosoya polynomial together with the distance indices derived from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub hosoya: Polynomial,
    #[serde(with = "bigint_string")]
    pub wiener: BigInt,
    #[serde(with = "bigint_string")]
    pub hyper_wiener: BigInt,
    pub method: Method,
}

/// Derives the Wiener and hyper-Wiener indices from a Hosoya polynomial:
/// `W = Σ k·c_k` (the derivative at 1) and `WW = Σ (k + k²)/2 · c_k`
/// (always an integer, since k + k² is even).
///
/// Rejects polynomials with a nonzero constant term; a Hosoya polynomial
/// counts pairs of *distinct* vertices.
pub fn indices_from_hosoya(h: &Polynomial, method: Method) -> Result<IndexReport, PolyError> {
    if !h.coeff(0).is_zero() {
        return Err(PolyError::NonzeroConstantTerm);
    }
    let mut wiener = BigInt::zero();
    let mut double_ww = BigInt::zero();
    for (k, c) in h.coeffs().iter().enumerate() {
        let k = BigInt::from(k);
        wiener += &k * c;
        double_ww += (&k + &k * &k) * c;
    }
    Ok(IndexReport {
        hosoya: h.clone(),
        wiener,
        hyper_wiener: double_ww / 2,
        method,
    })
}

impl fmt::Display for Polynomial {
    /// Renders terms in ascending powers: `6t + 6t^2 + 3t^3`. Unit
    /// coefficients drop the "1", zero terms are omitted, the zero
    /// polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.magnitude();
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if k == 1 {
                    f.write_str("t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    /// A polynomial serializes as a JSON array of decimal coefficient
    /// strings, index = degree; strings keep arbitrary precision intact.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            let c: BigInt = s
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid integer coefficient {s:?}")))?;
            coeffs.push(c);
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

/// Serializes a `BigInt` as a decimal string.
pub(crate) mod bigint_string {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
        v.to_string().serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse()
            .map_err(|_| D::Error::custom(format!("invalid integer {s:?}")))
    }
}
