//! Dense exact polynomials over the integers and rationals, and the
//! construction of the polynomial families `p_n`, `q_n`, `lambda_{r,v}`,
//! `fs_n`, `fh_n` together with the exact identities relating them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{self, binomial, factorial, sf, Rational};
use crate::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, stored dense in
/// ascending degree order with trailing zeros trimmed (empty = zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Polynomial with exact rational coefficients, same storage convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

fn trim<T: Zero>(coeffs: &mut Vec<T>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// c * x^k
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        IntPoly::new(coeffs)
    }

    /// x + a
    pub fn linear(a: i64) -> Self {
        IntPoly::new(vec![BigInt::from(a), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^k, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by `d`, which must divide exactly.
    ///
    /// Panics on a nonzero remainder: callers only use this where exactness
    /// is a proven invariant, so failure is an internal inconsistency.
    fn div_exact_scalar(&self, d: &BigInt) -> Self {
        assert!(!d.is_zero(), "division by zero scalar");
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let (q, r) = num_integer::Integer::div_rem(a, d);
                assert!(r.is_zero(), "inexact scalar division of {a} by {d}");
                q
            })
            .collect();
        IntPoly { coeffs }
    }

    /// First formal derivative.
    pub fn derivative1(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        IntPoly::new(coeffs)
    }

    /// k-th formal derivative (k = 0 returns a copy).
    pub fn derivative(&self, k: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..k {
            out = out.derivative1();
        }
        out
    }

    /// Exact Horner evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Substitutes x + c for x (exact Taylor shift, Horner style).
    pub fn shift(&self, c: i64) -> Self {
        let lin = IntPoly::linear(c);
        let mut acc = IntPoly::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = &acc * &lin;
            acc = &acc + &IntPoly::constant(coeff.clone());
        }
        acc
    }

    /// Long division by a monic divisor; returns (quotient, remainder).
    pub fn div_rem_monic(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(d.is_monic(), "divisor must be monic");
        let dd = d.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[k], BigInt::zero());
            if q.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate().take(dd) {
                let delta = dc * &q;
                rem[k - dd + i] -= delta;
            }
            quot[k - dd] = q;
        }
        rem.truncate(dd);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Coefficient 1-norm, sum of absolute values.
    pub fn one_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        }
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative1(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from(BigInt::from(k)))
            .collect();
        RatPoly::new(coeffs)
    }

    pub fn derivative(&self, k: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..k {
            out = out.derivative1();
        }
        out
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of absolute values of the coefficients.
    pub fn one_norm(&self) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, c| acc + c.abs())
    }

    /// Converts to an integer polynomial if every denominator is 1.
    pub fn to_int(&self) -> Option<IntPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.denom().is_one() {
                return None;
            }
            coeffs.push(c.numer().clone());
        }
        Some(IntPoly::new(coeffs))
    }
}

macro_rules! poly_binop {
    ($ty:ident, $elem:ty, $trait:ident, $method:ident, $op:tt) => {
        impl $trait for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                let n = self.coeffs.len().max(rhs.coeffs.len());
                let mut coeffs: Vec<$elem> = Vec::with_capacity(n);
                for k in 0..n {
                    let a = self.coeffs.get(k).cloned().unwrap_or_else(Zero::zero);
                    let b = rhs.coeffs.get(k).cloned().unwrap_or_else(Zero::zero);
                    coeffs.push(a $op b);
                }
                $ty::new(coeffs)
            }
        }
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(IntPoly, BigInt, Add, add, +);
poly_binop!(IntPoly, BigInt, Sub, sub, -);
poly_binop!(RatPoly, BigRational, Add, add, +);
poly_binop!(RatPoly, BigRational, Sub, sub, -);

macro_rules! poly_mul {
    ($ty:ident, $elem:ty) => {
        impl Mul for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                if self.is_zero() || rhs.is_zero() {
                    return $ty::zero();
                }
                let mut coeffs: Vec<$elem> =
                    vec![Zero::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
                for (i, a) in self.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in rhs.coeffs.iter().enumerate() {
                        coeffs[i + j] += a * b;
                    }
                }
                $ty::new(coeffs)
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                (&self) * (&rhs)
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty {
                    coeffs: self.coeffs.iter().map(|c| -c).collect(),
                }
            }
        }
    };
}

poly_mul!(IntPoly, BigInt);
poly_mul!(RatPoly, BigRational);

fn fmt_poly<F>(f: &mut fmt::Formatter<'_>, coeffs_desc: F) -> fmt::Result
where
    F: Fn() -> Vec<(usize, BigRational)>,
{
    let terms = coeffs_desc();
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (k, c)) in terms.iter().enumerate() {
        if i == 0 {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let a = c.abs();
        let unit = a.is_one();
        if !unit || *k == 0 {
            write!(f, "{}", exact::rational_string(&a))?;
        }
        match k {
            0 => {}
            1 => write!(f, "x")?,
            _ => write!(f, "x^{k}")?,
        }
    }
    Ok(())
}

/// Renders in descending powers with explicit signs, e.g.
/// `x^4 - 2x^3 - 9x^2 - 6x`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, || {
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, BigRational::from(c.clone())))
                .collect()
        })
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, || {
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect()
        })
    }
}

/// Family tag carried in polynomial JSON records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolyKind {
    P,
    Q,
    Custom,
}

/// Serialization form: coefficients as decimal strings, ascending, with
/// rationals rendered `num/den`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub kind: PolyKind,
    pub n: u64,
    pub coeffs: Vec<String>,
}

impl PolyRecord {
    pub fn from_int(kind: PolyKind, n: u64, p: &IntPoly) -> Self {
        PolyRecord {
            kind,
            n,
            coeffs: p.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_rat(kind: PolyKind, n: u64, p: &RatPoly) -> Self {
        PolyRecord {
            kind,
            n,
            coeffs: p.coeffs.iter().map(exact::rational_string).collect(),
        }
    }

    pub fn parse_rat(&self) -> Result<RatPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|s| exact::parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(RatPoly::new(coeffs))
    }

    pub fn parse_int(&self) -> Result<IntPoly> {
        self.parse_rat()?
            .to_int()
            .ok_or_else(|| Error::parse("expected integer coefficients".into()))
    }
}

/// (x+1)(x+2)..(x+m), the falling factorial (x+m)_m; 1 for m = 0.
fn prod_shifted_linears(m: usize) -> IntPoly {
    let mut acc = IntPoly::one();
    for t in 1..=m {
        acc = &acc * &IntPoly::linear(t as i64);
    }
    acc
}

/// C(x + shift, m) over the rationals.
fn binom_poly(shift: i64, m: usize) -> RatPoly {
    let mut acc = IntPoly::one();
    for i in 0..m {
        acc = &acc * &IntPoly::linear(shift - i as i64);
    }
    acc.to_rat()
        .scale(&BigRational::new(BigInt::one(), factorial(m)))
}

/// The v-th forward difference of (x+1)^n in x, expanded exactly:
/// sum_j (-1)^(v-j) C(v,j) (x+1+j)^n.
fn diff_power(v: usize, n: usize) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for j in 0..=v {
        let w = binomial(v, j as i64);
        let sign_neg = (v - j) % 2 == 1;
        let a = BigInt::from(1 + j as u64);
        // (x+a)^n = sum_k C(n,k) a^(n-k) x^k
        let mut apow = BigInt::one();
        for k in (0..=n).rev() {
            let term = binomial(n, k as i64) * &apow * &w;
            if sign_neg {
                coeffs[k] -= term;
            } else {
                coeffs[k] += term;
            }
            apow *= &a;
        }
    }
    IntPoly::new(coeffs)
}

/// lambda_{r,v}: the degree-r integer polynomial with
/// lambda_{r,v}(n) = sum_{k=v}^r sf(r,k) C(n,v) C(n+1-v, k-v).
pub fn lambda_poly(r: usize, v: usize) -> Result<IntPoly> {
    if r < 1 {
        return Err(Error::domain("lambda_poly", "r must be >= 1".into()));
    }
    if v > r {
        return Err(Error::domain(
            "lambda_poly",
            format!("v = {v} exceeds r = {r}"),
        ));
    }
    let mut inner = RatPoly::zero();
    for k in v..=r {
        let w = BigRational::from(sf(r, k)?);
        inner = &inner + &binom_poly(1 - v as i64, k - v).scale(&w);
    }
    let prod = &binom_poly(0, v) * &inner;
    Ok(prod
        .to_int()
        .expect("lambda polynomial must have integer coefficients"))
}

/// p_n by the binomial-difference construction:
/// sum_v (-1)^v 2^(n-v) C(x+v,v) diff_power(v, n).
pub fn build_p(n: usize) -> Result<IntPoly> {
    if n < 1 {
        return Err(Error::domain("build_p", "n must be >= 1".into()));
    }
    let mut acc = IntPoly::zero();
    for v in 0..=n {
        let pow2 = BigInt::one() << (n - v);
        // C(x+v,v) * diff_power(v,n) stays in the integers: the numerator
        // product is multiplied in first and the whole product divided by
        // v!, which a v-th difference always absorbs.
        let num = &prod_shifted_linears(v) * &diff_power(v, n);
        let term = num.div_exact_scalar(&factorial(v)).scale(&pow2);
        acc = if v % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    Ok(acc)
}

/// p_n by the independent lambda route:
/// sum_v (-1)^v 2^(n-v) lambda_{n,v}(x+v).
pub fn build_p_lambda(n: usize) -> Result<IntPoly> {
    if n < 1 {
        return Err(Error::domain("build_p_lambda", "n must be >= 1".into()));
    }
    let mut acc = IntPoly::zero();
    for v in 0..=n {
        let pow2 = BigInt::one() << (n - v);
        let term = lambda_poly(n, v)?.shift(v as i64).scale(&pow2);
        acc = if v % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    Ok(acc)
}

/// q_n, the cofactor of p_n after removing its forced linear factors:
/// p_n = (x+1)^2 q_n for odd n >= 3, p_n = x(x+1) q_n for even n >= 4.
///
/// A nonzero remainder in the division would contradict an exact identity,
/// so it panics rather than returning an error.
pub fn build_q(n: usize) -> Result<IntPoly> {
    if n < 3 {
        return Err(Error::domain("build_q", "n must be >= 3".into()));
    }
    let p = build_p(n)?;
    let divisor = if n % 2 == 1 {
        // (x+1)^2
        IntPoly::new(vec![BigInt::one(), BigInt::from(2), BigInt::one()])
    } else {
        // x(x+1)
        IntPoly::new(vec![BigInt::zero(), BigInt::one(), BigInt::one()])
    };
    let (q, rem) = p.div_rem_monic(&divisor);
    assert!(
        rem.is_zero(),
        "p_{n} is not divisible by its forced factors; remainder {rem}"
    );
    Ok(q)
}

/// fs_n(x) = sum_{v=1}^n sf(n,v) x^v.
pub fn fs_poly(n: usize) -> Result<RatPoly> {
    if n < 1 {
        return Err(Error::domain("fs_poly", "n must be >= 1".into()));
    }
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (v, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = BigRational::from(sf(n, v)?);
    }
    Ok(RatPoly::new(coeffs))
}

/// fh_n(x) = sum_{v=1}^n sf(n,v) H_v x^v with H_v the v-th harmonic number.
pub fn fh_poly(n: usize) -> Result<RatPoly> {
    if n < 1 {
        return Err(Error::domain("fh_poly", "n must be >= 1".into()));
    }
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (v, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = BigRational::from(sf(n, v)?) * exact::harmonic(v)?;
    }
    Ok(RatPoly::new(coeffs))
}

/// The k-th derivative of p_n by the closed-form expansion
///
/// sum_{j=0}^k C(k,j) (n-1)_j sum_{v=0}^{n-1-j} (-1)^v 2^(n-1-v)
///   d^(k-j)/dx^(k-j) [(x+1)..(x+v+1)] * (1/v!) diff_power(v, n-1-j),
///
/// exercised against the formal derivative as an exact identity.
pub fn derivative_expansion(n: usize, k: usize) -> Result<IntPoly> {
    if k < 1 || n <= k {
        return Err(Error::domain(
            "derivative_expansion",
            format!("requires n > k >= 1, got n = {n}, k = {k}"),
        ));
    }
    let mut acc = RatPoly::zero();
    // (n-1)_j, updated as j advances.
    let mut falling = BigInt::one();
    for j in 0..=k {
        if j > 0 {
            falling *= BigInt::from((n - j) as u64);
        }
        let outer = BigRational::from(binomial(k, j as i64) * &falling);
        if outer.is_zero() {
            continue;
        }
        let mut inner = RatPoly::zero();
        for v in 0..=(n - 1 - j) {
            let ff = prod_shifted_linears(v + 1).derivative(k - j);
            if ff.is_zero() {
                continue;
            }
            let w = BigRational::new(BigInt::one() << (n - 1 - v), factorial(v));
            let term = (&ff * &diff_power(v, n - 1 - j)).to_rat().scale(&w);
            inner = if v % 2 == 0 {
                &inner + &term
            } else {
                &inner - &term
            };
        }
        acc = &acc + &inner.scale(&outer);
    }
    Ok(acc
        .to_int()
        .expect("derivative expansion must have integer coefficients"))
}

/// The rational polynomial whose functional value equals
/// sum_j alpha_j * zeta(n_j + 1)/zeta(n_j): each p_{n_j} is scaled by
/// 1/(2^(n_j - 1) (2^(n_j + 1) - 1) B_{n_j}).
pub fn quotient_combination_poly(terms: &[(Rational, usize)]) -> Result<RatPoly> {
    if terms.is_empty() {
        return Err(Error::domain(
            "quotient_combination_poly",
            "term list is empty".into(),
        ));
    }
    let mut acc = RatPoly::zero();
    let mut prev = 0usize;
    for (alpha, n) in terms {
        if *n < 2 || n % 2 != 0 {
            return Err(Error::domain(
                "quotient_combination_poly",
                format!("index {n} must be even and positive"),
            ));
        }
        if *n <= prev {
            return Err(Error::domain(
                "quotient_combination_poly",
                "indices must be strictly increasing".into(),
            ));
        }
        if alpha.is_zero() {
            return Err(Error::domain(
                "quotient_combination_poly",
                "weights must be nonzero".into(),
            ));
        }
        prev = *n;
        let two_n1 = (BigInt::one() << (n + 1)) - BigInt::one();
        let scale = BigRational::from((BigInt::one() << (n - 1)) * two_n1) * exact::bernoulli(*n);
        let term = build_p(*n)?.to_rat().scale(&(alpha / scale));
        acc = &acc + &term;
    }
    Ok(acc)
}
