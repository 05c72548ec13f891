//! Residue arithmetic modulo small primes: the congruence lemmas behind the
//! polynomial families, the Eisenstein certificate for q_{p+1}, and mod-p
//! irreducibility witnesses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exact;
use crate::poly::{self, IntPoly};
use crate::{Error, Result};

/// Deterministic primality by trial division; every input here is desk
/// scale, so nothing faster is warranted.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn require_prime(func: &str, p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::domain(func, format!("{p} is not prime")))
    }
}

fn require_odd_prime(func: &str, p: u64) -> Result<()> {
    require_prime(func, p)?;
    if p == 2 {
        return Err(Error::domain(func, "p must be odd".into()));
    }
    Ok(())
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse of a nonzero residue by the extended Euclidean algorithm.
fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "residue not invertible");
    t0.rem_euclid(p as i128) as u64
}

fn residue(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// Dense polynomial over the field with `p` elements, coefficients stored
/// ascending in `[0, p)` with the leading residue nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        require_prime("ModPoly::new", p)?;
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(ModPoly { p, coeffs })
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Result<Self> {
        require_prime("ModPoly::from_int_poly", p)?;
        let coeffs = f.coeffs().iter().map(|c| residue(c, p)).collect();
        ModPoly::new(p, coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    fn x(p: u64) -> Self {
        ModPoly {
            p,
            coeffs: vec![0, 1],
        }
    }

    fn constant(p: u64, c: u64) -> Self {
        ModPoly { p, coeffs: vec![c % p] }.trim()
    }

    pub fn add(&self, o: &ModPoly) -> ModPoly {
        debug_assert_eq!(self.p, o.p);
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = o.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        ModPoly { p: self.p, coeffs }.trim()
    }

    pub fn sub(&self, o: &ModPoly) -> ModPoly {
        debug_assert_eq!(self.p, o.p);
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = o.coeffs.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        ModPoly { p: self.p, coeffs }.trim()
    }

    pub fn mul(&self, o: &ModPoly) -> ModPoly {
        debug_assert_eq!(self.p, o.p);
        if self.is_zero() || o.is_zero() {
            return ModPoly {
                p: self.p,
                coeffs: vec![],
            };
        }
        let mut acc = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        let cap = u128::MAX - (self.p as u128 - 1).pow(2);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                let cell = &mut acc[i + j];
                *cell += a as u128 * b as u128;
                if *cell > cap {
                    *cell %= self.p as u128;
                }
            }
        }
        let coeffs = acc.into_iter().map(|c| (c % self.p as u128) as u64).collect();
        ModPoly { p: self.p, coeffs }.trim()
    }

    pub fn derivative(&self) -> ModPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(i as u64 % self.p, c, self.p))
            .collect();
        ModPoly { p: self.p, coeffs }.trim()
    }

    /// Remainder of self by a nonzero divisor.
    pub fn rem(&self, g: &ModPoly) -> ModPoly {
        debug_assert_eq!(self.p, g.p);
        assert!(!g.is_zero(), "division by the zero polynomial");
        let dg = g.coeffs.len() - 1;
        let lead_inv = inv_mod(*g.coeffs.last().unwrap(), self.p);
        let mut r = self.coeffs.clone();
        while r.len() > dg {
            let k = r.len() - 1 - dg;
            let factor = mul_mod(*r.last().unwrap(), lead_inv, self.p);
            if factor != 0 {
                for (i, &gc) in g.coeffs.iter().enumerate() {
                    let t = mul_mod(factor, gc, self.p);
                    r[k + i] = (r[k + i] + self.p - t) % self.p;
                }
            }
            debug_assert_eq!(*r.last().unwrap(), 0);
            r.pop();
        }
        ModPoly {
            p: self.p,
            coeffs: r,
        }
        .trim()
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if let Some(&lead) = a.coeffs.last() {
            if lead != 1 {
                let inv = inv_mod(lead, a.p);
                for c in &mut a.coeffs {
                    *c = mul_mod(*c, inv, a.p);
                }
            }
        }
        a
    }

    /// self^e reduced mod `f`, by square and multiply.
    pub fn powmod(&self, e: u64, f: &ModPoly) -> ModPoly {
        let mut base = self.rem(f);
        let mut acc = ModPoly::constant(self.p, 1);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(f);
            }
        }
        acc
    }

    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl std::fmt::Display for ModPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.to_int_poly(), self.p)
    }
}

/// Eisenstein criterion at `p`: every non-leading coefficient divisible by
/// p, the leading one not, and the constant term not divisible by p^2.
pub fn eisenstein_check(f: &IntPoly, p: u64) -> Result<bool> {
    require_prime("eisenstein_check", p)?;
    let Some(d) = f.degree() else {
        return Ok(false);
    };
    if d == 0 {
        return Ok(false);
    }
    let p_big = BigInt::from(p);
    if f.leading().is_multiple_of(&p_big) {
        return Ok(false);
    }
    for c in &f.coeffs()[..d] {
        if !c.is_multiple_of(&p_big) {
            return Ok(false);
        }
    }
    Ok(!f.coeff(0).is_multiple_of(&(&p_big * &p_big)))
}

/// Order of `p` in a nonzero integer.
fn ord_p(value: &BigInt, p: u64) -> u32 {
    let p_big = BigInt::from(p);
    let mut v = value.abs();
    let mut ord = 0;
    while v.is_multiple_of(&p_big) {
        v /= &p_big;
        ord += 1;
    }
    ord
}

/// Everything checked about q_{p+1} at an odd prime p: the Eisenstein
/// property and that its constant term beta_0 has p-order exactly one,
/// cross-checked against the closed form (n-1) 2^n (2^n - 1) B_n / n.
#[derive(Debug, Clone, Serialize)]
pub struct QuotientFamilyReport {
    pub p: u64,
    pub n: u64,
    pub eisenstein: bool,
    pub beta0: String,
    pub beta0_ord_p: u32,
    pub closed_form_agrees: bool,
    pub pass: bool,
}

pub fn quotient_family_suite(p: u64) -> Result<QuotientFamilyReport> {
    require_odd_prime("quotient_family_suite", p)?;
    let n = (p + 1) as usize;
    let q = poly::build_q(n)?;
    let eisenstein = eisenstein_check(&q, p)?;
    let beta0 = q.coeff(0);
    let ord = if beta0.is_zero() { 0 } else { ord_p(&beta0, p) };

    let n_big = BigInt::from(n as u64);
    let pow = (BigInt::one() << n) - BigInt::one();
    let closed_form = exact::Rational::from((&n_big - BigInt::one()) * (BigInt::one() << n) * pow)
        * exact::bernoulli(n)
        / exact::Rational::from(n_big);
    let closed_form_agrees = closed_form.is_integer() && closed_form.to_integer() == beta0;

    let pass = eisenstein && ord == 1 && closed_form_agrees;
    Ok(QuotientFamilyReport {
        p,
        n: n as u64,
        eisenstein,
        beta0: beta0.to_string(),
        beta0_ord_p: ord,
        closed_form_agrees,
        pass,
    })
}

/// With n = p+1, checks p | p_n^(k)(0) for all 1 <= k <= n-2. The k-th
/// derivative at zero is k! times the k-th coefficient, taken exactly.
pub fn deriv_congruence_check(p: u64) -> Result<bool> {
    require_odd_prime("deriv_congruence_check", p)?;
    let n = (p + 1) as usize;
    let f = poly::build_p(n)?;
    let p_big = BigInt::from(p);
    let mut kfact = BigInt::one();
    for k in 1..=n - 2 {
        kfact *= BigInt::from(k as u64);
        if !(&kfact * f.coeff(k)).is_multiple_of(&p_big) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that (1/k!) Delta^k x^p at x = 1 is congruent mod p to 1 for
/// k in {0, 1, p} and to 0 otherwise.
pub fn diff_xp_check(p: u64) -> Result<bool> {
    require_prime("diff_xp_check", p)?;
    let mut kfact = BigInt::one();
    for k in 0..=p as usize {
        if k > 0 {
            kfact *= BigInt::from(k as u64);
        }
        let diff = exact::diff_monomial(p as u32, k, 1);
        let (value, rem) = diff.div_rem(&kfact);
        assert!(rem.is_zero(), "divided difference must be an integer");
        let expected = u64::from(k == 0 || k == 1 || k == p as usize);
        if residue(&value, p) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that the k-th derivatives of 1 + (x-1)(x-2)...(x-(p-1)) at zero
/// reduce mod p to minus the indicator of k = p-1, for 0 <= k <= p-1.
pub fn fac_p1_check(p: u64) -> Result<bool> {
    require_prime("fac_p1_check", p)?;
    let mut g = IntPoly::one();
    for j in 1..p {
        g = &g * &IntPoly::linear(-(j as i64));
    }
    g = &g + &IntPoly::one();
    let mut kfact = BigInt::one();
    for k in 0..p as usize {
        if k > 0 {
            kfact *= BigInt::from(k as u64);
        }
        let deriv0 = &kfact * g.coeff(k);
        let expected = if k == (p - 1) as usize { p - 1 } else { 0 };
        if residue(&deriv0, p) != expected % p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Residue of an exact rational mod p via the modular inverse of its
/// denominator; fails when p divides the denominator.
fn rational_residue(r: &exact::Rational, p: u64, func: &str) -> Result<u64> {
    let den = residue(r.denom(), p);
    if den == 0 {
        return Err(Error::domain(
            func,
            format!("{p} divides the denominator of {r}"),
        ));
    }
    Ok(mul_mod(residue(r.numer(), p), inv_mod(den, p), p))
}

/// Kummer congruence B_n/n = B_m/m (mod p) for even n = m (mod p-1) with
/// neither index divisible by p-1. Hypothesis violations are domain
/// errors, not check failures.
pub fn kummer_check(n: u64, m: u64, p: u64) -> Result<bool> {
    require_odd_prime("kummer_check", p)?;
    let mk_domain = |reason: String| Error::domain("kummer_check", reason);
    if n == 0 || m == 0 || !n.is_multiple_of(2) || !m.is_multiple_of(2) {
        return Err(mk_domain("indices must be positive and even".into()));
    }
    if n % (p - 1) != m % (p - 1) {
        return Err(mk_domain(format!("{n} and {m} differ mod {}", p - 1)));
    }
    if n.is_multiple_of(p - 1) {
        return Err(mk_domain(format!("indices divisible by {}", p - 1)));
    }
    let bn = exact::bernoulli(n as usize) / exact::Rational::from(BigInt::from(n));
    let bm = exact::bernoulli(m as usize) / exact::Rational::from(BigInt::from(m));
    Ok(rational_residue(&bn, p, "kummer_check")? == rational_residue(&bm, p, "kummer_check")?)
}

/// Irreducibility over the field with p elements: squarefree via the
/// derivative gcd, x^(p^d) = x mod f, and gcd(x^(p^(d/r)) - x, f) = 1 for
/// every prime r dividing d. The gcd form of the subfield condition is
/// required; testing x^(p^(d/r)) != x alone wrongly accepts some composite
/// factor-degree patterns (for example degrees 1+2+3 at d = 6).
pub fn irreducible_mod_p(f: &ModPoly) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::domain("irreducible_mod_p", "f must be monic".into()));
    }
    let d = f.degree().unwrap();
    if d == 0 {
        return Ok(false);
    }
    if d == 1 {
        return Ok(true);
    }
    let p = f.modulus();
    let one = ModPoly::constant(p, 1);
    if f.gcd(&f.derivative()) != one {
        return Ok(false);
    }
    let x = ModPoly::x(p);
    // frobenius[j] = x^(p^j) mod f, built by iterated p-th powers
    let mut frob = x.rem(f);
    let mut powers = vec![frob.clone()];
    for _ in 1..=d {
        frob = frob.powmod(p, f);
        powers.push(frob.clone());
    }
    if powers[d] != x.rem(f) {
        return Ok(false);
    }
    let mut rest = d;
    let mut r = 2;
    while r * r <= rest {
        if rest.is_multiple_of(r) {
            if powers[d / r].sub(&x).gcd(f) != one {
                return Ok(false);
            }
            while rest.is_multiple_of(r) {
                rest /= r;
            }
        }
        r += 1;
    }
    if rest > 1 && powers[d / rest].sub(&x).gcd(f) != one {
        return Ok(false);
    }
    Ok(true)
}

/// Scans primes up to `prime_bound` in increasing order and returns the
/// least one modulo which q_n is irreducible. `None` is not a disproof:
/// some irreducible integer polynomials factor modulo every prime.
pub fn witness_scan(n: usize, prime_bound: u64) -> Result<Option<u64>> {
    if n < 4 {
        return Err(Error::domain("witness_scan", "n must be >= 4".into()));
    }
    let q = poly::build_q(n)?;
    for p in 2..=prime_bound {
        if !is_prime(p) {
            continue;
        }
        let reduced = ModPoly::from_int_poly(&q, p)?;
        if reduced.degree() != q.degree() {
            continue;
        }
        if irreducible_mod_p(&reduced)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// The two certificate kinds are independent: an Eisenstein certificate
/// says nothing about irreducibility mod p and vice versa.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateClaim {
    Eisenstein,
    ModpIrreducible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub n: u64,
    pub claim: CertificateClaim,
    pub prime: u64,
    pub pass: bool,
}
