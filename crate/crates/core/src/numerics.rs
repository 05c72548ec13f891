//! Certified arbitrary-precision evaluation of the sequence `l_n`, the
//! Dirichlet series L(s), the linear functional on polynomials, an
//! independent zeta oracle, and the even-index zeta-quotient formula.
//!
//! Every public result is an [`ErrFloat`]: a dyadic value paired with an
//! absolute error bound that is propagated conservatively through every
//! intermediate operation. Internally all arithmetic runs on fixed-point
//! integers at a working scale of `W` fractional bits, where one ulp is
//! `2^-W`; each operation accounts for its rounding in whole ulps, and each
//! truncated series adds an explicit analytic tail bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{self, binomial};
use crate::poly::{IntPoly, RatPoly};
use crate::{Error, Result};

/// Exact dyadic number `mantissa * 2^exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    pub mantissa: BigInt,
    pub exp: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn to_rational(&self) -> BigRational {
        let num = self.mantissa.clone();
        if self.exp >= 0 {
            BigRational::from(num << self.exp as usize)
        } else {
            BigRational::new(num, BigInt::one() << (-self.exp) as usize)
        }
    }

    /// Scales to an integer numerator over 10^digits, truncated toward zero.
    fn decimal_scaled(&self, digits: usize) -> BigInt {
        let scaled = &self.mantissa * BigInt::from(10u32).pow(digits as u32);
        if self.exp >= 0 {
            scaled << self.exp as usize
        } else {
            let den = BigInt::one() << (-self.exp) as usize;
            scaled / den
        }
    }

    /// Fixed-point decimal string with `digits` fractional digits, truncated
    /// toward zero, e.g. `-0.693147`.
    pub fn to_decimal(&self, digits: usize) -> String {
        format_scaled(self.decimal_scaled(digits), digits)
    }

    /// Decimal string guaranteed to be >= |self| (used for error bounds):
    /// the magnitude is rounded up by one in the last printed digit.
    pub fn to_decimal_upper(&self, digits: usize) -> String {
        let t = self.decimal_scaled(digits).abs() + BigInt::one();
        format_scaled(t, digits)
    }
}

fn format_scaled(t: BigInt, digits: usize) -> String {
    let neg = t.is_negative();
    let s = t.abs().to_string();
    let (int_part, frac_part) = if s.len() > digits {
        let split = s.len() - digits;
        (s[..split].to_string(), s[split..].to_string())
    } else {
        ("0".to_string(), format!("{s:0>digits$}"))
    };
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Parses a plain decimal literal like `-12.345` into an exact rational.
pub fn parse_decimal(s: &str) -> Result<BigRational> {
    let mk_err = || Error::parse(format!("invalid decimal literal {s:?}"));
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(mk_err());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(mk_err());
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| mk_err())?
    };
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(BigRational::new(num * BigInt::from(sign), den))
}

/// A certified numeric value: `|true - value| <= abs_err`.
#[derive(Debug, Clone)]
pub struct ErrFloat {
    pub value: Dyadic,
    pub abs_err: Dyadic,
    pub prec_bits: u32,
}

/// Serialization form of an [`ErrFloat`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericRecord {
    pub value: String,
    pub abs_err_le: String,
    pub prec_bits: u32,
}

impl ErrFloat {
    pub fn lower(&self) -> BigRational {
        self.value.to_rational() - self.abs_err.to_rational()
    }

    pub fn upper(&self) -> BigRational {
        self.value.to_rational() + self.abs_err.to_rational()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        (self.value.to_rational() - x).abs() <= self.abs_err.to_rational()
    }

    pub fn overlaps(&self, other: &ErrFloat) -> bool {
        self.lower() <= other.upper() && other.lower() <= self.upper()
    }

    /// True when the whole enclosure lies strictly below the other's.
    pub fn certainly_below(&self, other: &ErrFloat) -> bool {
        self.upper() < other.lower()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal record. The value is truncated to `digits` fractional digits
    /// and the printed bound is widened by one ulp of the last digit, so the
    /// record still encloses the true value.
    pub fn to_record(&self, digits: usize) -> NumericRecord {
        NumericRecord {
            value: self.value.to_decimal(digits),
            abs_err_le: self.abs_err.to_decimal_upper(digits),
            prec_bits: self.prec_bits,
        }
    }

    /// Default digit count: enough decimal digits to exhaust prec_bits.
    pub fn record_digits(&self) -> usize {
        (self.prec_bits as usize * 302) / 1000 + 2
    }
}

/// Complex evaluation point; the floats are taken as exact inputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexArg {
    pub re: f64,
    pub im: f64,
}

impl ComplexArg {
    pub fn real(re: f64) -> Self {
        ComplexArg { re, im: 0.0 }
    }
}

// ---------------------------------------------------------------------------
// Fixed-point kernel.
//
// An `Fx` encloses a real number in [(m-err) * 2^-W, (m+err) * 2^-W]. Addition
// and subtraction are exact; multiplication and division round once and
// widen `err` by a proven bound in ulps.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
struct Fx {
    m: BigInt,
    err: BigInt,
    scale: u32,
}

fn ceil_div(num: &BigInt, den: &BigInt) -> BigInt {
    debug_assert!(den.is_positive());
    num.div_ceil(den)
}

impl Fx {
    fn zero(scale: u32) -> Self {
        Fx {
            m: BigInt::zero(),
            err: BigInt::zero(),
            scale,
        }
    }

    fn exact_int(c: i64, scale: u32) -> Self {
        Fx {
            m: BigInt::from(c) << scale,
            err: BigInt::zero(),
            scale,
        }
    }

    /// Floor of `r * 2^scale` with a one-ulp bound (zero if exact).
    fn from_rational(r: &BigRational, scale: u32) -> Self {
        let (q, rem) = (r.numer() << scale).div_mod_floor(r.denom());
        Fx {
            m: q,
            err: if rem.is_zero() {
                BigInt::zero()
            } else {
                BigInt::one()
            },
            scale,
        }
    }

    fn add(&self, o: &Fx) -> Fx {
        debug_assert_eq!(self.scale, o.scale);
        Fx {
            m: &self.m + &o.m,
            err: &self.err + &o.err,
            scale: self.scale,
        }
    }

    fn sub(&self, o: &Fx) -> Fx {
        debug_assert_eq!(self.scale, o.scale);
        Fx {
            m: &self.m - &o.m,
            err: &self.err + &o.err,
            scale: self.scale,
        }
    }

    fn neg(&self) -> Fx {
        Fx {
            m: -&self.m,
            err: self.err.clone(),
            scale: self.scale,
        }
    }

    /// Exact scaling by an integer.
    fn mul_int(&self, c: &BigInt) -> Fx {
        Fx {
            m: &self.m * c,
            err: &self.err * c.abs(),
            scale: self.scale,
        }
    }

    /// Scaling by an exact rational with a single floor rounding, so the
    /// added error is one ulp regardless of the operand's magnitude.
    fn mul_rational(&self, r: &BigRational) -> Fx {
        let m = (&self.m * r.numer()).div_floor(r.denom());
        let err = ceil_div(&(&self.err * r.numer().abs()), r.denom()) + 1;
        Fx {
            m,
            err,
            scale: self.scale,
        }
    }

    /// Product with one floor rounding; the cross terms of the two error
    /// intervals all land in `err`.
    fn mul(&self, o: &Fx) -> Fx {
        debug_assert_eq!(self.scale, o.scale);
        let m = (&self.m * &o.m) >> self.scale;
        let cross = self.m.abs() * &o.err + o.m.abs() * &self.err + &self.err * &o.err;
        Fx {
            m,
            err: (cross >> self.scale) + 2,
            scale: self.scale,
        }
    }

    /// Quotient; fails when the divisor's enclosure contains zero.
    fn div(&self, o: &Fx) -> Result<Fx> {
        debug_assert_eq!(self.scale, o.scale);
        let ob = o.m.abs();
        if ob <= o.err {
            return Err(Error::precision(
                "fixed-point divide",
                "divisor enclosure contains zero".into(),
            ));
        }
        let m = (&self.m << self.scale).div_floor(&o.m);
        // |a/b - m_a/m_b| <= (e_a|m_b| + |m_a|e_b) / (|m_b|(|m_b|-e_b))
        let num = (&self.err * &ob + self.m.abs() * &o.err) << self.scale;
        let den = &ob * (&ob - &o.err);
        Fx {
            m,
            err: ceil_div(&num, &den) + 2,
            scale: self.scale,
        }
        .pipe_ok()
    }

    fn pipe_ok(self) -> Result<Fx> {
        Ok(self)
    }

    /// Divide by a small positive integer with one floor rounding.
    fn div_int(&self, c: u64) -> Fx {
        let c = BigInt::from(c);
        Fx {
            m: self.m.div_floor(&c),
            err: ceil_div(&self.err, &c) + 1,
            scale: self.scale,
        }
    }

    /// Multiply by 2^-k (floor); the enclosure stays valid.
    fn shr(&self, k: u32) -> Fx {
        Fx {
            m: &self.m >> k,
            err: (&self.err >> k) + 2,
            scale: self.scale,
        }
    }

    /// Upper bound on |value| in ulps.
    fn abs_upper(&self) -> BigInt {
        self.m.abs() + &self.err
    }

    fn add_err(&mut self, extra: &BigInt) {
        self.err += extra;
    }

    /// Converts to the public form, certifying `abs_err <= 2^-prec`.
    fn to_errfloat(&self, prec: u32, what: &str) -> Result<ErrFloat> {
        if self.scale < prec || self.err > (BigInt::one() << (self.scale - prec)) {
            return Err(Error::precision(
                what,
                format!(
                    "accumulated error {} ulps at scale {} exceeds 2^-{}",
                    self.err, self.scale, prec
                ),
            ));
        }
        Ok(ErrFloat {
            value: Dyadic {
                mantissa: self.m.clone(),
                exp: -(self.scale as i64),
            },
            abs_err: Dyadic {
                mantissa: self.err.clone(),
                exp: -(self.scale as i64),
            },
            prec_bits: prec,
        })
    }
}

/// Complex fixed-point pair.
#[derive(Debug, Clone)]
struct CFx {
    re: Fx,
    im: Fx,
}

impl CFx {
    fn mul(&self, o: &CFx) -> CFx {
        CFx {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    fn add(&self, o: &CFx) -> CFx {
        CFx {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    fn div_int(&self, c: u64) -> CFx {
        CFx {
            re: self.re.div_int(c),
            im: self.im.div_int(c),
        }
    }

    fn shr(&self, k: u32) -> CFx {
        CFx {
            re: self.re.shr(k),
            im: self.im.shr(k),
        }
    }

    /// Upper bound on |re| + |im| in ulps, which dominates the modulus.
    fn norm1_upper(&self) -> BigInt {
        self.re.abs_upper() + self.im.abs_upper()
    }
}

// ---------------------------------------------------------------------------
// Certified elementary constants and logarithms.
// ---------------------------------------------------------------------------

/// atanh(1/q) for integer q >= 3 by the odd power series. Each kept term
/// rounds down once; once a term underflows one ulp the geometric tail is
/// below 9/8 ulp, so two ulps cover truncation and the final term.
fn atanh_recip(q: u64, scale: u32) -> Fx {
    let q = BigInt::from(q);
    let mut qpow = q.clone();
    let qq = &q * &q;
    let mut acc = BigInt::zero();
    let mut terms: u64 = 0;
    let mut j: u64 = 0;
    loop {
        let den = &qpow * BigInt::from(2 * j + 1);
        let c = (BigInt::one() << scale) / den;
        if c.is_zero() {
            break;
        }
        acc += c;
        terms += 1;
        j += 1;
        qpow *= &qq;
    }
    Fx {
        m: acc,
        err: BigInt::from(terms + 2),
        scale,
    }
}

/// log 2 = 2 atanh(1/3).
fn ln2_fx(scale: u32) -> Fx {
    atanh_recip(3, scale).mul_int(&BigInt::from(2))
}

/// atan(1/x) by the alternating odd series; the truncation error is below
/// the first omitted term, hence below one ulp at the stop condition.
fn atan_recip(x: u64, scale: u32) -> Fx {
    let x = BigInt::from(x);
    let mut xpow = x.clone();
    let xx = &x * &x;
    let mut acc = BigInt::zero();
    let mut terms: u64 = 0;
    let mut j: u64 = 0;
    loop {
        let den = &xpow * BigInt::from(2 * j + 1);
        let c = (BigInt::one() << scale) / den;
        if c.is_zero() {
            break;
        }
        if j.is_multiple_of(2) {
            acc += c;
        } else {
            acc -= c;
        }
        terms += 1;
        j += 1;
        xpow *= &xx;
    }
    Fx {
        m: acc,
        err: BigInt::from(terms + 2),
        scale,
    }
}

/// pi = 16 atan(1/5) - 4 atan(1/239).
fn pi_fx(scale: u32) -> Fx {
    let a = atan_recip(5, scale).mul_int(&BigInt::from(16));
    let b = atan_recip(239, scale).mul_int(&BigInt::from(4));
    a.sub(&b)
}

/// atanh of a certified argument with |x| < 1/4, by the odd series; the
/// term ratio is below 1/16, so the tail after a sub-ulp term is under a
/// fifteenth of it.
fn atanh_fx(x: &Fx) -> Fx {
    assert!(
        x.abs_upper() < (BigInt::one() << x.scale) >> 2u32,
        "atanh argument out of range"
    );
    let xx = x.mul(x);
    let mut power = x.clone();
    let mut acc = x.clone();
    let mut j: u64 = 1;
    loop {
        power = power.mul(&xx);
        let contrib = power.div_int(2 * j + 1);
        acc = acc.add(&contrib);
        if contrib.abs_upper() <= BigInt::from(2) {
            acc.add_err(&BigInt::one());
            break;
        }
        j += 1;
        assert!(j < 4 * x.scale as u64, "atanh series failed to converge");
    }
    acc
}

/// Certified log 2, the value of both l_1 and the sequence bound n*l_n.
pub fn ln2(prec: u32) -> Result<ErrFloat> {
    ln2_fx(prec + 16).to_errfloat(prec, "ln2")
}

/// Certified log(pi/2) = 2 atanh((pi - 2)/(pi + 2)), the reference value
/// for the Dirichlet series at s = 0.
pub fn log_pi_over_2(prec: u32) -> Result<ErrFloat> {
    let scale = prec + 48;
    let pi = pi_fx(scale);
    let two = Fx::exact_int(2, scale);
    let t = pi.sub(&two).div(&pi.add(&two))?;
    atanh_fx(&t)
        .mul_int(&BigInt::from(2))
        .to_errfloat(prec, "log_pi_over_2")
}

/// Certified natural logs of 1..=n_max (index k holds log k). Built by the
/// recurrences log(2k) = log k + log 2 and, for odd k,
/// log k = log(k-1) + 2 atanh(1/(2k-1)), so series work stays on fast
/// reciprocal series.
fn ln_table(n_max: usize, scale: u32) -> Vec<Fx> {
    let ln2 = ln2_fx(scale);
    let mut table = Vec::with_capacity(n_max + 1);
    table.push(Fx::zero(scale));
    if n_max >= 1 {
        table.push(Fx::zero(scale));
    }
    for k in 2..=n_max {
        let fx = if k % 2 == 0 {
            table[k / 2].add(&ln2)
        } else {
            let bump = atanh_recip(2 * k as u64 - 1, scale).mul_int(&BigInt::from(2));
            table[k - 1].add(&bump)
        };
        table.push(fx);
    }
    table
}

// ---------------------------------------------------------------------------
// The sequence l_n and the coefficients a_n = l_n / 2^n.
// ---------------------------------------------------------------------------

/// l_n as the alternating binomial sum over log(1+v). The binomial weights
/// are exact, so the accumulated rounding is at most 2^n times the log-table
/// ulp error, absorbed by the caller's scale margin.
fn l_single_fx(n: usize, scale: u32) -> Fx {
    let logs = ln_table(n + 1, scale);
    let mut acc = Fx::zero(scale);
    for v in 1..=n {
        let term = logs[v + 1].mul_int(&binomial(n, v as i64));
        acc = if v % 2 == 1 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// All of l_1..=l_n by the forward-difference triangle over the log table:
/// row k of the triangle starts with the k-th difference of log at 1, and
/// l_k is that value up to sign. Only exact subtractions are involved.
fn l_triangle_fx(n_max: usize, scale: u32) -> Vec<Fx> {
    let mut row = ln_table(n_max + 1, scale);
    row.remove(0);
    let mut out = Vec::with_capacity(n_max);
    for k in 1..=n_max {
        let len = row.len() - 1;
        for i in 0..len {
            row[i] = row[i + 1].sub(&row[i]);
        }
        row.truncate(len);
        // Delta^k log|1 = row[0]; l_k = (-1)^(k+1) * that.
        out.push(if k % 2 == 1 {
            row[0].clone()
        } else {
            row[0].neg()
        });
    }
    out
}

/// l_n with a certified bound: `|result - l_n| <= 2^-prec`.
///
/// The working scale is prec + n + 32 bits: the alternating sum cancels
/// roughly n bits, and the log-table errors stay well under 2^32 ulps.
pub fn l_value(n: usize, prec: u32) -> Result<ErrFloat> {
    if n < 1 {
        return Err(Error::domain("l_value", "n must be >= 1".into()));
    }
    let scale = prec + n as u32 + 32;
    l_single_fx(n, scale).to_errfloat(prec, "l_value")
}

/// Certified l_1..=l_n in one pass (index i holds l_{i+1}).
pub fn l_sequence(n_max: usize, prec: u32) -> Result<Vec<ErrFloat>> {
    if n_max < 1 {
        return Err(Error::domain("l_sequence", "n_max must be >= 1".into()));
    }
    let scale = prec + n_max as u32 + 32;
    l_triangle_fx(n_max, scale)
        .iter()
        .map(|fx| fx.to_errfloat(prec, "l_sequence"))
        .collect()
}

/// Float-only quadrature cross-check of l_n via the integral form
/// (1/n) integral over [0,1] of dt / ((1+t)(1+t/2)..(1+t/n)), adaptive Simpson to `tol`.
/// Deliberately uncertified; never used inside certified paths.
pub fn l_integral_oracle(n: usize, tol: f64) -> f64 {
    assert!(n >= 1, "l_integral_oracle requires n >= 1");
    let g = |t: f64| {
        let mut prod = 1.0;
        for k in 1..=n {
            prod *= 1.0 + t / k as f64;
        }
        1.0 / prod
    };
    fn simpson(g: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = g(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    #[allow(clippy::too_many_arguments)]
    fn adapt(
        g: &dyn Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (left, lm, flm) = simpson(g, a, fa, m, fm);
        let (right, rm, frm) = simpson(g, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            adapt(g, a, fa, m, fm, left, lm, flm, tol / 2.0, depth - 1)
                + adapt(g, m, fm, b, fb, right, rm, frm, tol / 2.0, depth - 1)
        }
    }
    let (fa, fb) = (g(0.0), g(1.0));
    let (whole, m, fm) = simpson(&g, 0.0, fa, 1.0, fb);
    adapt(&g, 0.0, fa, 1.0, fb, whole, m, fm, tol, 40) / n as f64
}

// ---------------------------------------------------------------------------
// Complex exponential and the Dirichlet series L(s).
// ---------------------------------------------------------------------------

/// Certified exp of a complex fixed-point argument: argument halving until
/// the 1-norm is at most 1/4, Taylor summation with a geometric tail bound,
/// then repeated squaring.
fn cexp(z: &CFx, scale: u32) -> CFx {
    let unit = BigInt::one() << scale;
    let norm = z.norm1_upper();
    let mut r: u32 = 2;
    while (&norm >> r) >= (&unit >> 2u32) {
        r += 1;
    }
    let w = z.shr(r);
    let mut acc = CFx {
        re: Fx::exact_int(1, scale),
        im: Fx::zero(scale),
    };
    let mut term = acc.clone();
    let mut j: u64 = 1;
    loop {
        term = term.mul(&w).div_int(j);
        acc = acc.add(&term);
        // |w| <= 1/4, so the remaining tail is under a third of this term's
        // bound. The threshold sits above the per-term rounding floor of a
        // few ulps so the loop always terminates.
        if term.norm1_upper() <= BigInt::from(16) {
            let pad = BigInt::from(6);
            acc.re.add_err(&pad);
            acc.im.add_err(&pad);
            break;
        }
        j += 1;
        assert!(j < 8 * scale as u64, "exp series failed to converge");
    }
    for _ in 0..r {
        acc = acc.mul(&acc);
    }
    acc
}

fn fx_from_f64(x: f64, scale: u32) -> Result<Fx> {
    let r = BigRational::from_float(x)
        .ok_or_else(|| Error::domain("complex argument", format!("{x} is not finite")))?;
    Ok(Fx::from_rational(&r, scale))
}

/// L(s) = sum a_n n^-s as certified (re, im) parts.
///
/// Truncation: with mu = max(0, ceil(-re(s))) the term magnitudes are below
/// log 2 * n^mu * 2^-n, whose ratio is at most 3/4 once n >= 4mu, so the
/// tail after N terms is at most 4 * (N+1)^mu * 2^-(N+1).
pub fn l_eval(s: ComplexArg, prec: u32) -> Result<(ErrFloat, ErrFloat)> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::domain("l_eval", "argument must be finite".into()));
    }
    if s.re.abs() > 1e4 || s.im.abs() > 1e4 {
        return Err(Error::domain(
            "l_eval",
            "argument magnitude beyond supported range".into(),
        ));
    }
    let mu = (-s.re).ceil().max(0.0) as u32;
    let mut n_terms: usize = 32.max(4 * mu as usize);
    loop {
        let need = prec as usize + 3 + mu as usize * usize_bits(n_terms + 1);
        if n_terms >= need {
            break;
        }
        n_terms = need;
    }
    let scale = prec + 96 + (mu + 2) * usize_bits(n_terms + 2) as u32;

    let ls = l_triangle_fx(n_terms, scale);
    let logs = ln_table(n_terms, scale);
    let minus_re = fx_from_f64(-s.re, scale)?;
    let minus_im = fx_from_f64(-s.im, scale)?;
    let mut acc = CFx {
        re: Fx::zero(scale),
        im: Fx::zero(scale),
    };
    for n in 1..=n_terms {
        let a_n = ls[n - 1].shr(n as u32);
        let factor = if n == 1 {
            CFx {
                re: Fx::exact_int(1, scale),
                im: Fx::zero(scale),
            }
        } else {
            let z = CFx {
                re: minus_re.mul(&logs[n]),
                im: minus_im.mul(&logs[n]),
            };
            cexp(&z, scale)
        };
        acc.re = acc.re.add(&factor.re.mul(&a_n));
        acc.im = acc.im.add(&factor.im.mul(&a_n));
    }
    // tail <= 4 (N+1)^mu 2^-(N+1), converted to ulps rounding up.
    let tail_num = BigInt::from(4u32) * BigInt::from(n_terms as u64 + 1).pow(mu);
    let tail_ulps = shifted_ceil(&tail_num, scale, n_terms as u32 + 1);
    acc.re.add_err(&tail_ulps);
    acc.im.add_err(&tail_ulps);
    Ok((
        acc.re.to_errfloat(prec, "l_eval re")?,
        acc.im.to_errfloat(prec, "l_eval im")?,
    ))
}

/// ceil(num * 2^scale / 2^shift), for small tail numerators.
fn shifted_ceil(num: &BigInt, scale: u32, shift: u32) -> BigInt {
    if shift <= scale {
        num << (scale - shift)
    } else {
        ceil_div(num, &(BigInt::one() << (shift - scale)))
    }
}

fn usize_bits(x: usize) -> usize {
    (usize::BITS - x.leading_zeros()) as usize
}

// ---------------------------------------------------------------------------
// The linear functional on polynomials.
// ---------------------------------------------------------------------------

/// Certified sum of a_k f(k) over k >= 1 for a rational polynomial f.
///
/// Truncation keeps N >= 4(deg f + 1); combined with l_k <= (log 2)/k the
/// term ratio is at most 3/4, giving the tail bound
/// 4 * ||f||_1 * (N+1)^(d-1) * 2^-(N+1).
pub fn lstar_eval(f: &RatPoly, prec: u32) -> Result<ErrFloat> {
    let zero_scale = prec + 8;
    let Some(d) = f.degree() else {
        return Fx::zero(zero_scale).to_errfloat(prec, "lstar_eval");
    };
    let norm = f.one_norm();
    let norm_bits = rational_bits_upper(&norm);

    let mut n_terms: usize = 8.max(4 * (d + 1));
    loop {
        let need = prec as usize + 4 + norm_bits + d.saturating_sub(1) * usize_bits(n_terms + 1);
        if n_terms >= need {
            break;
        }
        n_terms = need;
    }
    let scale =
        prec + 64 + norm_bits as u32 + ((d + 1) * usize_bits(n_terms + 1)) as u32;

    let ls = l_triangle_fx(n_terms, scale);
    let mut acc = Fx::zero(scale);
    for k in 1..=n_terms {
        let a_k = ls[k - 1].shr(k as u32);
        let fk = f.eval(&BigRational::from(BigInt::from(k)));
        if fk.is_zero() {
            continue;
        }
        acc = acc.add(&a_k.mul_rational(&fk));
    }
    // tail <= 4 ||f||_1 (N+1)^(d-1) 2^-(N+1) in ulps, rounded up.
    let pow = BigInt::from(n_terms as u64 + 1).pow(d.saturating_sub(1) as u32);
    let num = (BigInt::from(4u32) * norm.numer().abs() * pow) << scale;
    let den = norm.denom() * (BigInt::one() << (n_terms as u32 + 1));
    acc.add_err(&ceil_div(&num, &den));
    acc.to_errfloat(prec, "lstar_eval")
}

/// [`lstar_eval`] for integer polynomials.
pub fn lstar_eval_int(f: &IntPoly, prec: u32) -> Result<ErrFloat> {
    lstar_eval(&f.to_rat(), prec)
}

/// Upper bound on log2 of a positive rational, as a usize.
fn rational_bits_upper(r: &BigRational) -> usize {
    let nb = r.numer().abs().bits() as usize;
    let db = r.denom().bits() as usize;
    nb.saturating_sub(db) + 1
}

// ---------------------------------------------------------------------------
// Independent zeta oracle and quotient formulas.
// ---------------------------------------------------------------------------

/// zeta(m) by Euler-Maclaurin at the cutoff K = 2^kappa: the partial sum,
/// the integral tail K^(1-m)/(m-1), half the boundary term, and Bernoulli
/// corrections until they drop below the error budget. For x^-m all
/// derivatives are monotone of one sign, so the remainder is bounded by
/// twice the first omitted correction.
fn zeta_fx(m: usize, prec: u32) -> Result<Fx> {
    if m < 2 {
        return Err(Error::domain("zeta_int", "m must be >= 2".into()));
    }
    let kappa: u32 = usize_bits(prec as usize).max(4) as u32 + 2;
    let k_cut: u64 = 1 << kappa;
    let scale = prec + 2 * kappa + 32;
    let unit = BigInt::one() << scale;

    let mut acc = Fx::zero(scale);
    let mut partial_err = BigInt::zero();
    for k in 1..k_cut {
        let kp = BigInt::from(k).pow(m as u32);
        acc.m += &unit / kp;
        partial_err += 1;
    }
    acc.add_err(&partial_err);

    // K^-m / 2: exact shift of one ulp numerator.
    let boundary = Fx {
        m: &unit >> (kappa * m as u32 + 1),
        err: BigInt::one(),
        scale,
    };
    acc = acc.add(&boundary);

    // integral tail K^(1-m)/(m-1)
    let int_den = BigInt::from(m as u64 - 1) << (kappa * (m as u32 - 1));
    acc = acc.add(&Fx {
        m: &unit / &int_den,
        err: BigInt::one(),
        scale,
    });

    // Bernoulli corrections: B_2j/(2j)! * m(m+1)..(m+2j-2) * K^(1-m-2j).
    let budget = BigInt::one() << scale.saturating_sub(prec + 2);
    let mut rising = BigRational::from(BigInt::from(m as u64));
    let mut fact = BigRational::from(BigInt::from(2u32));
    let mut j = 1usize;
    loop {
        let coeff = exact::bernoulli(2 * j) / &fact * &rising;
        let shift = kappa as i64 * (m as i64 + 2 * j as i64 - 1);
        let term_num = coeff.numer() << scale;
        let magnitude = ceil_div(
            &term_num.abs(),
            &(coeff.denom() << shift.min(i64::from(u32::MAX)) as u32),
        );
        let term = Fx {
            m: term_num.div_floor(&(coeff.denom() << shift as u32)),
            err: BigInt::one(),
            scale,
        };
        if magnitude < budget {
            // remainder of the expansion: at most twice this omitted term
            acc.add_err(&(magnitude * 2u32 + 2u32));
            break;
        }
        acc = acc.add(&term);
        // advance (2j)! -> (2j+2)! and the rising factorial by two factors
        j += 1;
        fact *= BigRational::from(BigInt::from((2 * j - 1) as u64 * (2 * j) as u64));
        rising *= BigRational::from(BigInt::from(
            (m as u64 + 2 * j as u64 - 3) * (m as u64 + 2 * j as u64 - 2),
        ));
        assert!(j < 4 * prec as usize, "zeta corrections failed to converge");
    }
    Ok(acc)
}

/// Certified zeta(m) for integer m >= 2.
pub fn zeta_int(m: usize, prec: u32) -> Result<ErrFloat> {
    zeta_fx(m, prec + 1)?.to_errfloat(prec, "zeta_int")
}

/// Certified zeta(n+1)/zeta(n), the oracle side of the quotient checks.
pub fn zeta_ratio(n: usize, prec: u32) -> Result<ErrFloat> {
    let num = zeta_fx(n + 1, prec + 8)?;
    let den = zeta_fx(n, prec + 8)?;
    num.div(&den)?.to_errfloat(prec, "zeta_ratio")
}

/// Certified sum of alpha_j * zeta(n_j+1)/zeta(n_j) over the given terms.
pub fn zeta_ratio_combination(terms: &[(exact::Rational, usize)], prec: u32) -> Result<ErrFloat> {
    if terms.is_empty() {
        return Err(Error::domain(
            "zeta_ratio_combination",
            "term list is empty".into(),
        ));
    }
    let margin: u32 = 16 + 2 * terms.len() as u32;
    let inner = prec + margin;
    let scale = inner + 8;
    let mut acc = Fx::zero(scale);
    for (alpha, n) in terms {
        let num = zeta_fx(n + 1, inner)?;
        let den = zeta_fx(*n, inner)?;
        let rescaled_num = rescale(&num, scale);
        let rescaled_den = rescale(&den, scale);
        let ratio = rescaled_num.div(&rescaled_den)?;
        acc = acc.add(&ratio.mul_rational(alpha));
    }
    acc.to_errfloat(prec, "zeta_ratio_combination")
}

/// Changes working scale, keeping the enclosure sound.
fn rescale(fx: &Fx, scale: u32) -> Fx {
    if scale >= fx.scale {
        let up = scale - fx.scale;
        Fx {
            m: &fx.m << up,
            err: &fx.err << up,
            scale,
        }
    } else {
        let down = fx.scale - scale;
        Fx {
            m: &fx.m >> down,
            err: (&fx.err >> down) + 2,
            scale,
        }
    }
}

/// H(-n) = 2^-n * lstar(p_n), certified.
pub fn h_neg(n: usize, prec: u32) -> Result<ErrFloat> {
    if n < 1 {
        return Err(Error::domain("h_neg", "n must be >= 1".into()));
    }
    let inner = lstar_eval_int(&crate::poly::build_p(n)?, prec + n as u32)?;
    Ok(ErrFloat {
        value: Dyadic {
            mantissa: inner.value.mantissa,
            exp: inner.value.exp - n as i64,
        },
        abs_err: Dyadic {
            mantissa: inner.abs_err.mantissa,
            exp: inner.abs_err.exp - n as i64,
        },
        prec_bits: prec,
    })
}

/// r_n = lstar(p_n)/p_n'(0) for even n, the ratio that tends to 1.
pub fn quotient_ratio(n: usize, prec: u32) -> Result<ErrFloat> {
    quotient_parts(n, prec, false)
}

/// zeta(n+1)/zeta(n) for even n via the closed formula
/// (1 - 1/n)(1 - 1/(2^(n+1)-1)) * lstar(p_n)/p_n'(0).
pub fn zeta_quotient(n: usize, prec: u32) -> Result<ErrFloat> {
    quotient_parts(n, prec, true)
}

fn quotient_parts(n: usize, prec: u32, with_prefactor: bool) -> Result<ErrFloat> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::domain(
            "zeta_quotient",
            "n must be even and positive".into(),
        ));
    }
    let p = crate::poly::build_p(n)?;
    let dp0 = p.derivative1().eval_int(&BigInt::zero());
    if dp0.is_zero() {
        return Err(Error::precision(
            "zeta_quotient",
            "derivative at zero vanished".into(),
        ));
    }
    let inner_prec = prec + 16;
    let lstar = lstar_eval_int(&p, inner_prec)?;
    let scale = inner_prec + 32;
    let fx = Fx {
        m: rescale_mantissa(&lstar.value, scale),
        err: rescale_mantissa(&lstar.abs_err, scale) + 1,
        scale,
    };
    let mut factor = BigRational::new(BigInt::one(), dp0);
    if with_prefactor {
        let n_int = BigInt::from(n as u64);
        let two_pow = (BigInt::one() << (n + 1)) - BigInt::one();
        factor *= BigRational::new(&n_int - BigInt::one(), n_int.clone());
        factor *= BigRational::new(&two_pow - BigInt::one(), two_pow);
    }
    fx.mul_rational(&factor).to_errfloat(prec, "zeta_quotient")
}

/// Mantissa of a dyadic re-expressed at `2^-scale`, floor-rounded.
fn rescale_mantissa(d: &Dyadic, scale: u32) -> BigInt {
    let target = -(scale as i64);
    if d.exp >= target {
        &d.mantissa << (d.exp - target) as u32
    } else {
        &d.mantissa >> (target - d.exp) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::build_p;
    use proptest::prelude::*;

    const LN2: &str = "0.693147180559945309417232121458176568075500134360255254120680";
    const LN_4_3: &str = "0.287682072451780927439219005993827431503509710897761056506666";
    const LN_32_27: &str = "0.169899036795397472900424896523305726435028998333027915399317";
    const PI_REF: &str = "3.14159265358979323846264338327950288419716939937510582097494";
    const LOG_PI_2: &str = "0.451582705289454864726195229894882143571794678555056317392943";
    const ZETA_2: &str = "1.64493406684822643647241516664602518921894990120679843773556";
    const ZETA_3: &str = "1.20205690315959428539973816151144999076498629234049888179227";
    const ZETA_4: &str = "1.08232323371113819151600369654116790277475095191872690768298";
    const ZETA_5: &str = "1.03692775514336992633136548645703416805708091950191281197419";
    const Z3_OVER_Z2: &str =
        "0.730762969401438498726036731307714639528011605079374470071325";
    const Z5_OVER_Z4: &str =
        "0.958057374032234913683600495854716468628523203475865170124569";
    const L_AT_MINUS_1: &str =
        "0.609274778369362539951197864407583478829308372987024747777751";
    const L_AT_10: &str = "0.346644192069282412626224065093509061631117872213252307230152";
    const LSTAR_P2: &str = "1.70511359527002316369408570638466749223202707851854043016643";
    const H_NEG_1: &str = "0.530428741829408702338696547151232811200551525771040532585347";
    const H_NEG_2: &str = "0.426278398817505790923521426596166873058006769629635107541606";
    const H_NEG_3: &str =
        "0.0234819574160897148454193394097651312835335102272028559821040";

    /// The reference strings are rounded at sixty digits, so allow a hair
    /// beyond the certified bound when comparing.
    fn assert_encloses(ef: &ErrFloat, reference: &str) {
        let r = parse_decimal(reference).unwrap();
        let slack = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(55));
        let dev = (ef.value.to_rational() - &r).abs();
        assert!(
            dev <= ef.abs_err.to_rational() + slack,
            "value {} deviates from {reference} by {}",
            ef.value.to_decimal(40),
            dev.to_f64().unwrap_or(f64::NAN),
        );
    }

    fn enclosure_within(ef: &ErrFloat, max_err: f64) {
        assert!(ef.abs_err.to_rational().to_f64().unwrap() <= max_err);
    }

    #[test]
    fn shifts_floor_toward_negative_infinity() {
        assert_eq!(BigInt::from(-5) >> 1u32, BigInt::from(-3));
        assert_eq!(BigInt::from(5) >> 1u32, BigInt::from(2));
        assert_eq!(BigInt::from(-1) >> 3u32, BigInt::from(-1));
    }

    #[test]
    fn constants_match_references() {
        let scale = 240;
        let ln2 = ln2_fx(scale).to_errfloat(230, "ln2").unwrap();
        assert_encloses(&ln2, LN2);
        let pi = pi_fx(scale).to_errfloat(230, "pi").unwrap();
        assert_encloses(&pi, PI_REF);
        assert_encloses(&log_pi_over_2(192).unwrap(), LOG_PI_2);
    }

    #[test]
    fn ln_table_is_consistent() {
        let scale = 200;
        let table = ln_table(20, scale);
        // log 6 = log 2 + log 3, log 16 = 4 log 2, checked as enclosures.
        let lhs = table[6].clone();
        let rhs = table[2].add(&table[3]);
        let diff = lhs.sub(&rhs);
        assert!(diff.m.abs() <= diff.err);
        let l16 = table[16].sub(&table[2].mul_int(&BigInt::from(4)));
        assert!(l16.m.abs() <= l16.err);
    }

    #[test]
    fn l_values_match_closed_forms() {
        let l1 = l_value(1, 128).unwrap();
        assert_encloses(&l1, LN2);
        enclosure_within(&l1, 2.94e-39);
        assert_encloses(&l_value(2, 128).unwrap(), LN_4_3);
        assert_encloses(&l_value(3, 128).unwrap(), LN_32_27);
    }

    #[test]
    fn l_sequence_agrees_with_single_route() {
        let seq = l_sequence(24, 128).unwrap();
        for (i, batch) in seq.iter().enumerate() {
            let single = l_value(i + 1, 128).unwrap();
            assert!(
                batch.overlaps(&single),
                "enclosures disjoint at n = {}",
                i + 1
            );
        }
    }

    #[test]
    fn l_sequence_is_strictly_decreasing() {
        let seq = l_sequence(30, 96).unwrap();
        for w in seq.windows(2) {
            assert!(w[1].certainly_below(&w[0]));
        }
        // n * l_n > (n+1) * l_{n+1} on certified bounds
        for (i, w) in seq.windows(2).enumerate() {
            let n = BigRational::from(BigInt::from(i as u64 + 1));
            let np1 = BigRational::from(BigInt::from(i as u64 + 2));
            assert!(w[0].lower() * n > w[1].upper() * np1, "at n = {}", i + 1);
        }
    }

    #[test]
    fn quadrature_oracle_agrees() {
        for n in [1usize, 2, 3, 5, 8, 13, 17, 25, 33, 40] {
            let certified = l_value(n, 96).unwrap().to_f64();
            let quad = l_integral_oracle(n, 1e-17);
            assert!(
                (certified - quad).abs() < 1e-15,
                "n = {n}: {certified} vs {quad}"
            );
        }
    }

    #[test]
    fn l_eval_special_values() {
        let (re, im) = l_eval(ComplexArg::real(0.0), 128).unwrap();
        assert_encloses(&re, LOG_PI_2);
        assert!(im.contains(&BigRational::zero()));
        // fully certified route: the enclosure intersects log(pi/2)
        assert!(re.overlaps(&log_pi_over_2(128).unwrap()));

        let (re, _) = l_eval(ComplexArg::real(-1.0), 128).unwrap();
        assert_encloses(&re, L_AT_MINUS_1);

        let (re, _) = l_eval(ComplexArg::real(10.0), 128).unwrap();
        assert_encloses(&re, L_AT_10);
    }

    #[test]
    fn l_eval_accepts_complex_points() {
        let (re, im) = l_eval(ComplexArg { re: 2.0, im: 3.0 }, 96).unwrap();
        let (re2, im2) = l_eval(ComplexArg { re: 2.0, im: 3.0 }, 160).unwrap();
        assert!(re.contains(&re2.value.to_rational()));
        assert!(im.contains(&im2.value.to_rational()));
    }

    #[test]
    fn lstar_basic_values() {
        let one = RatPoly::constant(BigRational::one());
        assert_encloses(&lstar_eval(&one, 128).unwrap(), LOG_PI_2);

        let x = RatPoly::new(vec![BigRational::zero(), BigRational::one()]);
        assert_encloses(&lstar_eval(&x, 128).unwrap(), L_AT_MINUS_1);

        let p2 = build_p(2).unwrap();
        assert_encloses(&lstar_eval_int(&p2, 160).unwrap(), LSTAR_P2);

        let empty = RatPoly::zero();
        assert!(lstar_eval(&empty, 64)
            .unwrap()
            .contains(&BigRational::zero()));
    }

    #[test]
    fn zeta_reference_values() {
        assert_encloses(&zeta_int(2, 192).unwrap(), ZETA_2);
        assert_encloses(&zeta_int(3, 192).unwrap(), ZETA_3);
        assert_encloses(&zeta_int(4, 192).unwrap(), ZETA_4);
        assert_encloses(&zeta_int(5, 192).unwrap(), ZETA_5);
        assert!(zeta_int(1, 64).is_err());
    }

    #[test]
    fn zeta_ratio_matches_reference() {
        assert_encloses(&zeta_ratio(2, 192).unwrap(), Z3_OVER_Z2);
        assert_encloses(&zeta_ratio(4, 192).unwrap(), Z5_OVER_Z4);
    }

    #[test]
    fn h_neg_reference_values() {
        assert_encloses(&h_neg(1, 128).unwrap(), H_NEG_1);
        assert_encloses(&h_neg(2, 128).unwrap(), H_NEG_2);
        assert_encloses(&h_neg(3, 128).unwrap(), H_NEG_3);
        assert!(h_neg(0, 64).is_err());
    }

    #[test]
    fn quotient_formula_matches_oracle() {
        for n in [2usize, 4, 6] {
            let formula = zeta_quotient(n, 160).unwrap();
            let oracle = zeta_ratio(n, 160).unwrap();
            assert!(
                formula.overlaps(&oracle),
                "quotient mismatch at n = {n}: {} vs {}",
                formula.value.to_decimal(30),
                oracle.value.to_decimal(30)
            );
        }
        assert!(zeta_quotient(3, 64).is_err());
    }

    #[test]
    fn quotient_ratio_examples() {
        // p_2'(0) = 1, so r_2 equals lstar(p_2)
        assert_encloses(&quotient_ratio(2, 160).unwrap(), LSTAR_P2);
        let r20 = quotient_ratio(20, 96).unwrap();
        let dev = (r20.value.to_rational() - BigRational::one()).abs();
        assert!(dev <= BigRational::new(BigInt::from(2), BigInt::from(20)));
    }

    #[test]
    fn zeta_ratio_combination_single_term() {
        let one = BigRational::one();
        let combined = zeta_ratio_combination(&[(one, 2)], 160).unwrap();
        assert_encloses(&combined, Z3_OVER_Z2);
        assert!(zeta_ratio_combination(&[], 64).is_err());
    }

    #[test]
    fn refinement_stays_inside_coarser_enclosure() {
        let coarse = l_value(7, 96).unwrap();
        let fine = l_value(7, 160).unwrap();
        assert!(coarse.contains(&fine.value.to_rational()));

        let coarse = lstar_eval_int(&build_p(6).unwrap(), 96).unwrap();
        let fine = lstar_eval_int(&build_p(6).unwrap(), 160).unwrap();
        assert!(coarse.contains(&fine.value.to_rational()));

        let coarse = zeta_int(5, 96).unwrap();
        let fine = zeta_int(5, 160).unwrap();
        assert!(coarse.contains(&fine.value.to_rational()));
    }

    #[test]
    fn decimal_rendering() {
        let half = Dyadic {
            mantissa: BigInt::one(),
            exp: -1,
        };
        assert_eq!(half.to_decimal(3), "0.500");
        let neg = Dyadic {
            mantissa: BigInt::from(-3),
            exp: -2,
        };
        assert_eq!(neg.to_decimal(2), "-0.75");
        assert_eq!(neg.to_decimal_upper(1), "0.8");
        let big = Dyadic {
            mantissa: BigInt::from(5),
            exp: 3,
        };
        assert_eq!(big.to_decimal(0), "40");
        assert_eq!(parse_decimal("-0.75").unwrap(), neg.to_rational());
        assert!(parse_decimal("1.2.3").is_err());
        assert!(parse_decimal("abc").is_err());
    }

    #[test]
    fn record_round_trip_encloses() {
        let ef = l_value(5, 128).unwrap();
        let rec = ef.to_record(ef.record_digits());
        assert_eq!(rec.prec_bits, 128);
        let val = parse_decimal(&rec.value).unwrap();
        let err = parse_decimal(&rec.abs_err_le).unwrap();
        let true_val = ef.value.to_rational();
        assert!((val - true_val).abs() <= err);
        let text = serde_json::to_string(&rec).unwrap();
        let back: NumericRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rec);
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-999i64..999, 1i64..99)
            .prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    fn fx_contains(fx: &Fx, x: &BigRational) -> bool {
        let v = BigRational::new(fx.m.clone(), BigInt::one() << fx.scale);
        let e = BigRational::new(fx.err.clone(), BigInt::one() << fx.scale);
        (v - x).abs() <= e
    }

    proptest! {
        #[test]
        fn fixed_point_ops_enclose_exact_arithmetic(a in small_rational(), b in small_rational()) {
            let scale = 96;
            let fa = Fx::from_rational(&a, scale);
            let fb = Fx::from_rational(&b, scale);
            prop_assert!(fx_contains(&fa.add(&fb), &(&a + &b)));
            prop_assert!(fx_contains(&fa.sub(&fb), &(&a - &b)));
            prop_assert!(fx_contains(&fa.mul(&fb), &(&a * &b)));
            prop_assert!(fx_contains(&fa.shr(5), &(a.clone() / BigRational::from(BigInt::from(32)))));
            if !b.is_zero() {
                let q = fa.div(&fb).unwrap();
                prop_assert!(fx_contains(&q, &(&a / &b)));
            }
        }

        #[test]
        fn fixed_point_int_ops_enclose(a in small_rational(), c in -99i64..99, d in 1u64..40) {
            let scale = 80;
            let fa = Fx::from_rational(&a, scale);
            let c_big = BigInt::from(c);
            prop_assert!(fx_contains(&fa.mul_int(&c_big), &(&a * BigRational::from(c_big.clone()))));
            prop_assert!(fx_contains(&fa.div_int(d), &(&a / BigRational::from(BigInt::from(d)))));
        }
    }
}
