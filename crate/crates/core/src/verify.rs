//! Named verification suites over the exact, numeric, and modular layers.
//! The command-line `verify` command and the integration tests both run
//! these, so a pass here is the single source of truth for "the library
//! reproduces its claims".

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact;
use crate::modular;
use crate::numerics::{self, ComplexArg};
use crate::poly::{self, IntPoly};
use crate::Result;
use serde::Serialize;

/// Outcome of one named check. `detail` carries the interesting number
/// (a witness prime, a maximal deviation) or the first violation found.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, pass: bool, detail: String) -> Self {
        CheckResult {
            name: name.into(),
            pass,
            detail,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<CheckResult>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        SuiteReport {
            suite: suite.into(),
            checks,
            pass,
        }
    }
}

/// Golden table of p_1..p_8, coefficients ascending.
pub const P_TABLE: [(usize, &[i64]); 8] = [
    (1, &[1, 1]),
    (2, &[0, 1, 1]),
    (3, &[-2, -3, 0, 1]),
    (4, &[0, -6, -9, -2, 1]),
    (5, &[16, 30, 5, -15, -5, 1]),
    (6, &[0, 80, 150, 65, -15, -9, 1]),
    (7, &[-272, -588, -196, 315, 210, 0, -14, 1]),
    (8, &[0, -1904, -4116, -2492, 105, 448, 42, -20, 1]),
];

/// Golden table of q_3..q_10, coefficients ascending.
pub const Q_TABLE: [(usize, &[i64]); 8] = [
    (3, &[-2, 1]),
    (4, &[-6, -3, 1]),
    (5, &[16, -2, -7, 1]),
    (6, &[80, 70, -5, -10, 1]),
    (7, &[-272, -44, 164, 31, -16, 1]),
    (8, &[-1904, -2212, -280, 385, 63, -21, 1]),
    (9, &[7936, 3088, -5076, -2512, 377, 183, -29, 1]),
    (10, &[71424, 99216, 27804, -15204, -7119, 504, 306, -36, 1]),
];

fn int_poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

/// Exact-layer suite: golden tables, the two construction routes, the
/// structural identities of the family, the tangent/Bernoulli constant
/// term, and the harmonic-coefficient identity.
pub fn exact_suite(n_max: usize) -> Result<SuiteReport> {
    let mut checks = Vec::new();

    let mut bad = Vec::new();
    for (n, coeffs) in P_TABLE {
        if poly::build_p(n)? != int_poly(coeffs) {
            bad.push(format!("p_{n}"));
        }
    }
    for (n, coeffs) in Q_TABLE {
        if poly::build_q(n)? != int_poly(coeffs) {
            bad.push(format!("q_{n}"));
        }
    }
    checks.push(CheckResult::new(
        "golden tables",
        bad.is_empty(),
        if bad.is_empty() {
            "p_1..p_8 and q_3..q_10 match".into()
        } else {
            format!("mismatch: {}", bad.join(", "))
        },
    ));

    let route_max = n_max.min(30);
    let mut pass = true;
    let mut detail = format!("binomial and lambda routes agree for n <= {route_max}");
    for n in 1..=route_max {
        if poly::build_p(n)? != poly::build_p_lambda(n)? {
            pass = false;
            detail = format!("routes disagree at n = {n}");
            break;
        }
    }
    checks.push(CheckResult::new("construction routes", pass, detail));

    let mut pass = true;
    let mut detail = format!("monic with the parity root pattern for n <= {n_max}");
    'outer: for n in 1..=n_max {
        let p = poly::build_p(n)?;
        let minus_one = BigInt::from(-1);
        if !p.is_monic() || p.degree() != Some(n) {
            pass = false;
            detail = format!("p_{n} is not monic of degree {n}");
            break;
        }
        if !p.eval_int(&minus_one).is_zero() {
            pass = false;
            detail = format!("p_{n}(-1) != 0");
            break;
        }
        if n % 2 == 0 && !p.coeff(0).is_zero() {
            pass = false;
            detail = format!("p_{n}(0) != 0 despite even index");
            break;
        }
        if n >= 3 {
            let divisor = if n % 2 == 1 {
                int_poly(&[1, 2, 1])
            } else {
                int_poly(&[0, 1, 1])
            };
            let (q, r) = p.div_rem_monic(&divisor);
            if !r.is_zero() {
                pass = false;
                detail = format!("parity factor of p_{n} leaves a remainder");
                break 'outer;
            }
            if (&q * &divisor) != p {
                pass = false;
                detail = format!("parity factorization of p_{n} does not reconstruct");
                break 'outer;
            }
        }
    }
    checks.push(CheckResult::new("parity factorization", pass, detail));

    let mut pass = true;
    let mut detail = format!("derivative transfer identities hold for n <= {n_max}");
    for n in 2..=n_max {
        let p = poly::build_p(n)?;
        let prev_at_zero = poly::build_p(n - 1)?.coeff(0);
        let dp = p.derivative1();
        if dp.eval_int(&BigInt::from(-1)) != -&prev_at_zero {
            pass = false;
            detail = format!("p_{n}'(-1) != -p_{}(0)", n - 1);
            break;
        }
        if n % 2 == 0 && dp.coeff(0) != BigInt::from(n as u64 - 1) * &prev_at_zero {
            pass = false;
            detail = format!("p_{n}'(0) != (n-1) p_{}(0)", n - 1);
            break;
        }
    }
    checks.push(CheckResult::new("derivative transfer", pass, detail));

    let tangent_max = n_max.min(40);
    let mut pass = true;
    let mut detail = format!(
        "p_n(0) equals the tangent number and the Bernoulli form for n <= {tangent_max}"
    );
    for n in 1..=tangent_max {
        let c0 = poly::build_p(n)?.coeff(0);
        if c0 != exact::tangent_number(n) {
            pass = false;
            detail = format!("p_{n}(0) differs from the boustrophedon tangent number");
            break;
        }
        let m = n as u64 + 1;
        let closed = BigRational::from(
            (BigInt::one() << m) * ((BigInt::one() << m) - BigInt::one()),
        ) * exact::bernoulli(n + 1)
            / BigRational::from(BigInt::from(m));
        if !closed.is_integer() || closed.to_integer() != c0 {
            pass = false;
            detail = format!("p_{n}(0) differs from the Bernoulli closed form");
            break;
        }
    }
    checks.push(CheckResult::new("tangent constant term", pass, detail));

    let fh_max = n_max.min(40);
    let mut pass = true;
    let mut detail = format!("harmonic identity holds for even n <= {fh_max}");
    let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    for n in (2..=fh_max).step_by(2) {
        let lhs = poly::fh_poly(n)?.eval(&half);
        let rhs = poly::fs_poly(n - 1)?.eval(&half)
            * BigRational::new(BigInt::from(-(n as i64 - 1)), BigInt::from(2));
        if lhs != rhs {
            pass = false;
            detail = format!("harmonic identity fails at n = {n}");
            break;
        }
    }
    checks.push(CheckResult::new("harmonic identity", pass, detail));

    let deriv_max = n_max.min(12);
    let mut pass = true;
    let mut detail = format!("expansion matches formal derivatives for n <= {deriv_max}");
    'deriv: for n in 2..=deriv_max {
        for k in 1..n {
            if poly::derivative_expansion(n, k)? != poly::build_p(n)?.derivative(k) {
                pass = false;
                detail = format!("derivative expansion differs at (n, k) = ({n}, {k})");
                break 'deriv;
            }
        }
    }
    checks.push(CheckResult::new("derivative expansion", pass, detail));

    Ok(SuiteReport::new("exact", checks))
}

fn f64_of(r: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// Numeric-layer suite: certified sequence laws, the special value at zero,
/// the quotient formula against the independent zeta oracle, the limit
/// trend, quadrature agreement, and interval refinement.
pub fn numeric_suite(n_max: usize, prec: u32) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let seq_max = n_max.max(2);
    let seq = numerics::l_sequence(seq_max, 96)?;

    let mut pass = true;
    let mut detail = format!("l_n strictly decreasing for n <= {seq_max} (certified)");
    for (i, w) in seq.windows(2).enumerate() {
        if !w[1].certainly_below(&w[0]) {
            pass = false;
            detail = format!("no certified decrease from l_{} to l_{}", i + 1, i + 2);
            break;
        }
    }
    checks.push(CheckResult::new("sequence decreasing", pass, detail));

    let mut pass = true;
    let mut detail = format!("n*l_n strictly decreasing for n <= {seq_max} (certified)");
    for (i, w) in seq.windows(2).enumerate() {
        let n = BigRational::from(BigInt::from(i as u64 + 1));
        let np1 = BigRational::from(BigInt::from(i as u64 + 2));
        if w[0].lower() * n <= w[1].upper() * np1 {
            pass = false;
            detail = format!("no certified decrease of n*l_n at n = {}", i + 1);
            break;
        }
    }
    checks.push(CheckResult::new("weighted sequence decreasing", pass, detail));

    let log2 = numerics::ln2(96)?;
    let mut pass = seq[0].overlaps(&log2);
    let mut detail = format!("l_1 encloses log 2 and n*l_n < log 2 up to n = {seq_max}");
    if !pass {
        detail = "l_1 enclosure misses log 2".into();
    } else {
        for (i, ef) in seq.iter().enumerate().skip(1) {
            let n = BigRational::from(BigInt::from(i as u64 + 1));
            if ef.upper() * n >= log2.lower() {
                pass = false;
                detail = format!("log 2 bound not certified at n = {}", i + 1);
                break;
            }
        }
    }
    checks.push(CheckResult::new("log 2 bound", pass, detail));

    let (re, im) = numerics::l_eval(ComplexArg::real(0.0), 128)?;
    let reference = numerics::log_pi_over_2(128)?;
    let pass = re.overlaps(&reference) && im.contains(&BigRational::zero());
    checks.push(CheckResult::new(
        "special value at zero",
        pass,
        format!(
            "L(0) = {} agrees with log(pi/2) within {}",
            re.value.to_decimal(30),
            f64_of(&(re.abs_err.to_rational() + reference.abs_err.to_rational())),
        ),
    ));

    let quot_max = n_max.clamp(2, 20);
    let tol = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(25));
    let mut pass = true;
    let mut worst = BigRational::zero();
    let mut detail_fail = String::new();
    for n in (2..=quot_max).step_by(2) {
        let formula = numerics::zeta_quotient(n, prec)?;
        let oracle = numerics::zeta_ratio(n, prec)?;
        let dev = (formula.value.to_rational() - oracle.value.to_rational()).abs();
        if dev > worst {
            worst = dev.clone();
        }
        if !formula.overlaps(&oracle) || (prec >= 256 && dev > tol) {
            pass = false;
            detail_fail = format!("quotient formula vs oracle fails at n = {n}");
            break;
        }
    }
    let detail = if pass {
        format!(
            "even n <= {quot_max} at {prec} bits, worst deviation {:.3e}",
            f64_of(&worst)
        )
    } else {
        detail_fail
    };
    checks.push(CheckResult::new("quotient formula vs oracle", pass, detail));

    let trend_max = n_max.clamp(4, 40);
    let mut pass = true;
    let mut detail = format!("|lstar(p_n)/p_n'(0) - 1| <= 2/n for even n <= {trend_max}");
    for n in (4..=trend_max).step_by(2) {
        let r = numerics::quotient_ratio(n, 96)?;
        let dev = (r.value.to_rational() - BigRational::one()).abs() + r.abs_err.to_rational();
        if dev > BigRational::new(BigInt::from(2), BigInt::from(n as u64)) {
            pass = false;
            detail = format!("limit trend band violated at n = {n}");
            break;
        }
    }
    checks.push(CheckResult::new("limit trend", pass, detail));

    let quad_max = n_max.min(40);
    let mut pass = true;
    let mut detail = format!("quadrature agrees within 1e-15 for n <= {quad_max}");
    for n in 1..=quad_max {
        let certified = numerics::l_value(n, 96)?.to_f64();
        let quad = numerics::l_integral_oracle(n, 1e-17);
        if (certified - quad).abs() >= 1e-15 {
            pass = false;
            detail = format!("quadrature deviates at n = {n}: {certified} vs {quad}");
            break;
        }
    }
    checks.push(CheckResult::new("quadrature cross-check", pass, detail));

    let mut pass = true;
    let mut detail = "refinements at +64 bits stay inside coarser enclosures".to_string();
    {
        let pairs: [(crate::ErrFloat, crate::ErrFloat); 3] = [
            (numerics::l_value(7, 96)?, numerics::l_value(7, 160)?),
            (
                numerics::lstar_eval_int(&poly::build_p(6)?, 96)?,
                numerics::lstar_eval_int(&poly::build_p(6)?, 160)?,
            ),
            (numerics::zeta_int(5, 96)?, numerics::zeta_int(5, 160)?),
        ];
        for (i, (coarse, fine)) in pairs.iter().enumerate() {
            if !coarse.contains(&fine.value.to_rational()) {
                pass = false;
                detail = format!("refinement escaped the coarse enclosure (case {i})");
                break;
            }
        }
    }
    checks.push(CheckResult::new("interval refinement", pass, detail));

    let combo_terms = [
        (BigRational::one(), 2usize),
        (BigRational::from(BigInt::from(-2)), 4usize),
    ];
    let combo_poly = poly::quotient_combination_poly(&combo_terms)?;
    let lhs = numerics::lstar_eval(&combo_poly, prec)?;
    let rhs = numerics::zeta_ratio_combination(&combo_terms, prec)?;
    let dev = (lhs.value.to_rational() - rhs.value.to_rational()).abs();
    let combo_tol = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(20));
    let pass = lhs.overlaps(&rhs) && (prec < 256 || dev <= combo_tol);
    checks.push(CheckResult::new(
        "linear combination",
        pass,
        format!(
            "functional of the combined polynomial vs oracle, deviation {:.3e}",
            f64_of(&dev)
        ),
    ));

    Ok(SuiteReport::new("numeric", checks))
}

/// Modular-layer suite: the congruence lemmas and Eisenstein certificates
/// at every odd prime up to `p_max`, Kummer pairs, Stirling columns, and
/// irreducibility witnesses for q_4..q_10.
pub fn modular_suite(p_max: u64) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let odd_primes: Vec<u64> = (3..=p_max).filter(|&p| modular::is_prime(p)).collect();
    let all_primes: Vec<u64> = (2..=p_max).filter(|&p| modular::is_prime(p)).collect();

    let mut pass = true;
    let mut detail = format!("Eisenstein and ord_p checks pass for odd p <= {p_max}");
    for &p in &odd_primes {
        let report = modular::quotient_family_suite(p)?;
        if !report.pass {
            pass = false;
            detail = format!(
                "q_{} at p = {p}: eisenstein={}, ord={}, closed form agrees={}",
                report.n, report.eisenstein, report.beta0_ord_p, report.closed_form_agrees
            );
            break;
        }
    }
    checks.push(CheckResult::new("eisenstein family", pass, detail));

    let mut pass = true;
    let mut detail = format!("p | p_(p+1)^(k)(0) for 1 <= k <= p-1, odd p <= {p_max}");
    for &p in &odd_primes {
        if !modular::deriv_congruence_check(p)? {
            pass = false;
            detail = format!("derivative congruence fails at p = {p}");
            break;
        }
    }
    checks.push(CheckResult::new("derivative congruence", pass, detail));

    let mut pass = true;
    let mut detail = format!("divided differences of x^p reduce to 1,1,0,..,0,1 for p <= {p_max}");
    for &p in &all_primes {
        if !modular::diff_xp_check(p)? {
            pass = false;
            detail = format!("divided difference pattern fails at p = {p}");
            break;
        }
    }
    checks.push(CheckResult::new("divided differences", pass, detail));

    let mut pass = true;
    let mut detail = format!("derivatives of 1+(x-1)...(x-p+1) at 0 match -delta for p <= {p_max}");
    for &p in &all_primes {
        if !modular::fac_p1_check(p)? {
            pass = false;
            detail = format!("factorial lemma fails at p = {p}");
            break;
        }
    }
    checks.push(CheckResult::new("factorial lemma", pass, detail));

    let triples: [(u64, u64, u64); 10] = [
        (2, 6, 5),
        (6, 10, 5),
        (2, 8, 7),
        (4, 10, 7),
        (8, 14, 7),
        (2, 12, 11),
        (4, 14, 11),
        (6, 16, 11),
        (2, 14, 13),
        (4, 16, 13),
    ];
    let mut pass = true;
    let mut detail = format!("{} Kummer pairs agree", triples.len());
    for (n, m, p) in triples {
        if !modular::kummer_check(n, m, p)? {
            pass = false;
            detail = format!("Kummer congruence fails for B_{n}/{n} vs B_{m}/{m} mod {p}");
            break;
        }
    }
    checks.push(CheckResult::new("kummer congruences", pass, detail));

    let stirling_max = p_max.min(31);
    let mut pass = true;
    let mut detail = format!("S1(p,k) and S2(p,k) vanish mod p for 1 < k < p <= {stirling_max}");
    'stirling: for &p in all_primes.iter().filter(|&&p| p <= stirling_max) {
        for k in 2..p as usize {
            let s1 = exact::stirling(exact::StirlingKind::First, p as usize, k)?;
            let s2 = exact::stirling(exact::StirlingKind::Second, p as usize, k)?;
            let p_big = BigInt::from(p);
            if !(&s1 % &p_big).is_zero() || !(&s2 % &p_big).is_zero() {
                pass = false;
                detail = format!("Stirling column not divisible at (p, k) = ({p}, {k})");
                break 'stirling;
            }
        }
    }
    checks.push(CheckResult::new("stirling columns", pass, detail));

    let mut pass = true;
    let mut found = Vec::new();
    let mut detail_fail = String::new();
    for n in 4..=10usize {
        match modular::witness_scan(n, 500)? {
            Some(p) => found.push(format!("q_{n}: p = {p}")),
            None => {
                pass = false;
                detail_fail = format!("no witness below 500 for q_{n}");
                break;
            }
        }
    }
    let detail = if pass { found.join(", ") } else { detail_fail };
    checks.push(CheckResult::new("irreducibility witnesses", pass, detail));

    Ok(SuiteReport::new("modular", checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_suite_passes() {
        let report = exact_suite(20).unwrap();
        assert!(
            report.pass,
            "failures: {:?}",
            report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .collect::<Vec<_>>()
        );
        assert_eq!(report.suite, "exact");
        assert_eq!(report.checks.len(), 7);
    }

    #[test]
    fn numeric_suite_passes() {
        let report = numeric_suite(12, 128).unwrap();
        assert!(
            report.pass,
            "failures: {:?}",
            report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .collect::<Vec<_>>()
        );
        assert_eq!(report.checks.len(), 9);
    }

    #[test]
    fn modular_suite_passes() {
        let report = modular_suite(13).unwrap();
        assert!(
            report.pass,
            "failures: {:?}",
            report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .collect::<Vec<_>>()
        );
        assert_eq!(report.checks.len(), 7);
    }

    #[test]
    fn suite_report_serializes_deterministically() {
        let report = SuiteReport::new(
            "demo",
            vec![CheckResult::new("a", true, "fine".into())],
        );
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"{"suite":"demo","checks":[{"name":"a","pass":true,"detail":"fine"}],"pass":true}"#
        );
    }
}
