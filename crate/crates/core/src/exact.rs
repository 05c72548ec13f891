//! Exact integer/rational arithmetic and the combinatorial number sequences
//! everything else consumes: binomials, Stirling numbers of both kinds, the
//! numbers `sf(n,k) = k!*S2(n,k)`, harmonic numbers, Bernoulli numbers, and
//! tangent numbers.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

/// Which kind of Stirling number [`stirling`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    /// Signed Stirling numbers of the first kind: coefficients of the
    /// falling factorial, `(x)_n = sum_k S1(n,k) x^k`.
    First,
    /// Stirling numbers of the second kind: `x^n = sum_k S2(n,k) (x)_k`.
    Second,
}

#[derive(Default)]
struct Tables {
    /// Pascal's triangle, row n holds C(n, 0..=n).
    binomial: Vec<Vec<BigInt>>,
    /// Signed first-kind rows, row n holds S1(n, 0..=n).
    s1: Vec<Vec<BigInt>>,
    /// Second-kind rows.
    s2: Vec<Vec<BigInt>>,
    /// sf(n,k) = k! * S2(n,k) rows.
    sf: Vec<Vec<BigInt>>,
    /// harmonic[n] = H_n, with H_0 = 0 as anchor.
    harmonic: Vec<BigRational>,
    /// bernoulli[n] = B_n (B_1 = -1/2).
    bernoulli: Vec<BigRational>,
    /// Seidel triangle rows; row n holds E(n, 0..=n), zigzag = E(n,n).
    seidel: Vec<Vec<BigInt>>,
}

impl Tables {
    fn grow_binomial(&mut self, n: usize) {
        if self.binomial.is_empty() {
            self.binomial.push(vec![BigInt::one()]);
        }
        while self.binomial.len() <= n {
            let prev = self.binomial.last().unwrap();
            let m = prev.len();
            let mut row = Vec::with_capacity(m + 1);
            row.push(BigInt::one());
            for i in 1..m {
                row.push(&prev[i - 1] + &prev[i]);
            }
            row.push(BigInt::one());
            self.binomial.push(row);
        }
    }

    fn grow_s1(&mut self, n: usize) {
        if self.s1.is_empty() {
            self.s1.push(vec![BigInt::one()]);
        }
        // S1(n+1,k) = S1(n,k-1) - n*S1(n,k)
        while self.s1.len() <= n {
            let m = self.s1.len();
            let prev = self.s1.last().unwrap();
            let mut row = vec![BigInt::zero(); m + 1];
            for k in 1..=m {
                row[k] = &prev[k - 1]
                    - if k < m {
                        &prev[k] * BigInt::from(m - 1)
                    } else {
                        BigInt::zero()
                    };
            }
            self.s1.push(row);
        }
    }

    fn grow_s2(&mut self, n: usize) {
        if self.s2.is_empty() {
            self.s2.push(vec![BigInt::one()]);
        }
        // S2(n+1,k) = S2(n,k-1) + k*S2(n,k)
        while self.s2.len() <= n {
            let m = self.s2.len();
            let prev = self.s2.last().unwrap();
            let mut row = vec![BigInt::zero(); m + 1];
            for k in 1..=m {
                row[k] = &prev[k - 1]
                    + if k < m {
                        &prev[k] * BigInt::from(k)
                    } else {
                        BigInt::zero()
                    };
            }
            self.s2.push(row);
        }
    }

    fn grow_sf(&mut self, n: usize) {
        if self.sf.is_empty() {
            self.sf.push(vec![BigInt::one()]);
        }
        // sf(n+1,k) = k*(sf(n,k) + sf(n,k-1))
        while self.sf.len() <= n {
            let m = self.sf.len();
            let prev = self.sf.last().unwrap();
            let mut row = vec![BigInt::zero(); m + 1];
            row[0] = BigInt::zero();
            for k in 1..=m {
                let prev_k = if k < m { prev[k].clone() } else { BigInt::zero() };
                row[k] = BigInt::from(k) * (prev_k + &prev[k - 1]);
            }
            self.sf.push(row);
        }
    }

    fn grow_harmonic(&mut self, n: usize) {
        if self.harmonic.is_empty() {
            self.harmonic.push(BigRational::zero());
        }
        while self.harmonic.len() <= n {
            let m = self.harmonic.len();
            let next = self.harmonic.last().unwrap()
                + BigRational::new(BigInt::one(), BigInt::from(m));
            self.harmonic.push(next);
        }
    }

    fn grow_bernoulli(&mut self, n: usize) {
        if self.bernoulli.is_empty() {
            self.bernoulli.push(BigRational::one());
        }
        // sum_{k=0}^{n} C(n+1,k) B_k = 0, solved for B_n.
        while self.bernoulli.len() <= n {
            let m = self.bernoulli.len();
            self.grow_binomial(m + 1);
            let mut acc = BigRational::zero();
            for k in 0..m {
                acc += &self.bernoulli[k] * BigRational::from(self.binomial[m + 1][k].clone());
            }
            let b = -acc / BigRational::from(BigInt::from(m + 1));
            self.bernoulli.push(b);
        }
    }

    fn grow_seidel(&mut self, n: usize) {
        if self.seidel.is_empty() {
            self.seidel.push(vec![BigInt::one()]);
        }
        // E(n,0) = 0, E(n,k) = E(n,k-1) + E(n-1,n-k); zigzag Z_n = E(n,n).
        // Row 0 stores the seed E(0,0) = 1 so Z_1 = E(1,1) = 1 comes out.
        while self.seidel.len() <= n {
            let m = self.seidel.len();
            let prev = self.seidel.last().unwrap();
            let mut row = vec![BigInt::zero(); m + 1];
            for k in 1..=m {
                let carry = if m - k < prev.len() {
                    prev[m - k].clone()
                } else {
                    BigInt::zero()
                };
                row[k] = &row[k - 1] + carry;
            }
            self.seidel.push(row);
        }
    }
}

/// Memoized exact tables for the combinatorial sequences.
///
/// All accessors take `&self`; fills are idempotent behind a mutex, so
/// concurrent callers see consistent values.
pub struct CombiTables {
    inner: Mutex<Tables>,
}

impl Default for CombiTables {
    fn default() -> Self {
        Self::new()
    }
}

impl CombiTables {
    pub fn new() -> Self {
        CombiTables {
            inner: Mutex::new(Tables::default()),
        }
    }

    /// C(n,k); zero outside `0 <= k <= n`.
    pub fn binomial(&self, n: usize, k: i64) -> BigInt {
        if k < 0 || k as usize > n {
            return BigInt::zero();
        }
        let k = k as usize;
        let mut t = self.inner.lock().unwrap();
        t.grow_binomial(n);
        t.binomial[n][k].clone()
    }

    /// Signed S1 or S2; `k > n` is a domain error.
    pub fn stirling(&self, kind: StirlingKind, n: usize, k: usize) -> Result<BigInt> {
        if k > n {
            return Err(Error::domain("stirling", format!("k = {k} exceeds n = {n}")));
        }
        let mut t = self.inner.lock().unwrap();
        Ok(match kind {
            StirlingKind::First => {
                t.grow_s1(n);
                t.s1[n][k].clone()
            }
            StirlingKind::Second => {
                t.grow_s2(n);
                t.s2[n][k].clone()
            }
        })
    }

    /// sf(n,k) = k! * S2(n,k), the k-th forward difference of x^n at 0.
    pub fn sf(&self, n: usize, k: usize) -> Result<BigInt> {
        if k > n {
            return Err(Error::domain("sf", format!("k = {k} exceeds n = {n}")));
        }
        let mut t = self.inner.lock().unwrap();
        t.grow_sf(n);
        Ok(t.sf[n][k].clone())
    }

    /// H_n as an exact rational; `n >= 1`.
    pub fn harmonic(&self, n: usize) -> Result<BigRational> {
        if n < 1 {
            return Err(Error::domain("harmonic", "n must be >= 1".into()));
        }
        let mut t = self.inner.lock().unwrap();
        t.grow_harmonic(n);
        Ok(t.harmonic[n].clone())
    }

    /// Exact Bernoulli number B_n with the B_1 = -1/2 convention.
    pub fn bernoulli(&self, n: usize) -> BigRational {
        let mut t = self.inner.lock().unwrap();
        t.grow_bernoulli(n);
        t.bernoulli[n].clone()
    }

    /// Zigzag number Z_n (n-th coefficient of sec + tan, times n!).
    fn zigzag(&self, n: usize) -> BigInt {
        let mut t = self.inner.lock().unwrap();
        t.grow_seidel(n);
        t.seidel[n][n].clone()
    }

    /// n-th derivative of tanh at 0, via the Seidel boustrophedon triangle.
    ///
    /// Zero for even n; `(-1)^((n-1)/2) * Z_n` for odd n. Independent of the
    /// polynomial machinery, which makes it a usable oracle for `p_n(0)`.
    pub fn tangent_number(&self, n: usize) -> BigInt {
        if n == 0 || n.is_multiple_of(2) {
            return BigInt::zero();
        }
        let z = self.zigzag(n);
        if ((n - 1) / 2).is_multiple_of(2) {
            z
        } else {
            -z
        }
    }
}

fn global() -> &'static CombiTables {
    static TABLES: std::sync::OnceLock<CombiTables> = std::sync::OnceLock::new();
    TABLES.get_or_init(CombiTables::new)
}

/// C(n,k) from the shared process-wide table; zero for k < 0 or k > n.
pub fn binomial(n: usize, k: i64) -> BigInt {
    global().binomial(n, k)
}

/// Stirling number of the given kind from the shared table.
pub fn stirling(kind: StirlingKind, n: usize, k: usize) -> Result<BigInt> {
    global().stirling(kind, n, k)
}

/// sf(n,k) = k! * S2(n,k) from the shared table.
pub fn sf(n: usize, k: usize) -> Result<BigInt> {
    global().sf(n, k)
}

/// k-th forward difference of x^n evaluated at `base` (0 or 1), exactly:
/// `sum_v (-1)^(k-v) C(k,v) (base+v)^n`.
pub fn diff_monomial(n: u32, k: usize, base: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for v in 0..=k {
        let term = binomial(k, v as i64) * BigInt::from(base as u64 + v as u64).pow(n);
        if (k - v).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Harmonic number H_n, exact; `n >= 1`.
pub fn harmonic(n: usize) -> Result<BigRational> {
    global().harmonic(n)
}

/// Bernoulli number B_n, exact.
pub fn bernoulli(n: usize) -> BigRational {
    global().bernoulli(n)
}

/// n-th derivative of tanh at 0.
pub fn tangent_number(n: usize) -> BigInt {
    global().tangent_number(n)
}

/// n! as a BigInt.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Renders a rational as `num/den` (or plain integer when den = 1).
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num` or `num/den` decimal strings.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let mk_err = || Error::parse(format!("invalid rational literal {s:?}"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| mk_err())?;
            Ok(BigRational::from(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.parse().map_err(|_| mk_err())?;
            let d: BigInt = den.parse().map_err(|_| mk_err())?;
            if d.is_zero() || d.is_negative() {
                return Err(mk_err());
            }
            Ok(BigRational::new(n, d))
        }
    }
}
