use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Embedding precision in bits used when none is requested.
pub const DEFAULT_PRECISION: usize = 256;

const RM: RoundingMode = RoundingMode::ToEven;
/// Extra working bits carried beyond the requested precision.
const GUARD: usize = 32;

fn consts() -> Consts {
    Consts::new().expect("allocating astro-float constant cache")
}

/// Complex number with arbitrary-precision real and imaginary parts.
#[derive(Clone, Debug)]
pub struct BigComplex {
    re: BigFloat,
    im: BigFloat,
    precision: usize,
}

impl BigComplex {
    pub fn zero(precision: usize) -> Self {
        let wp = precision + GUARD;
        BigComplex {
            re: BigFloat::from_i64(0, wp),
            im: BigFloat::from_i64(0, wp),
            precision,
        }
    }

    pub fn from_rational(q: &BigRational, precision: usize) -> Self {
        let mut z = Self::zero(precision);
        z.re = bigfloat_from_rational(q, precision + GUARD);
        z
    }

    pub fn from_f64(re: f64, im: f64, precision: usize) -> Self {
        let wp = precision + GUARD;
        BigComplex {
            re: BigFloat::from_f64(re, wp),
            im: BigFloat::from_f64(im, wp),
            precision,
        }
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    fn wp(&self) -> usize {
        self.precision + GUARD
    }

    pub fn re(&self) -> &BigFloat {
        &self.re
    }

    pub fn im(&self) -> &BigFloat {
        &self.im
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let p = self.wp();
        BigComplex {
            re: self.re.add(&rhs.re, p, RM),
            im: self.im.add(&rhs.im, p, RM),
            precision: self.precision,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let p = self.wp();
        BigComplex {
            re: self.re.sub(&rhs.re, p, RM),
            im: self.im.sub(&rhs.im, p, RM),
            precision: self.precision,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.wp();
        let ac = self.re.mul(&rhs.re, p, RM);
        let bd = self.im.mul(&rhs.im, p, RM);
        let ad = self.re.mul(&rhs.im, p, RM);
        let bc = self.im.mul(&rhs.re, p, RM);
        BigComplex {
            re: ac.sub(&bd, p, RM),
            im: ad.add(&bc, p, RM),
            precision: self.precision,
        }
    }

    /// `None` when `rhs` is exactly zero.
    pub fn div(&self, rhs: &Self) -> Option<Self> {
        let p = self.wp();
        let den = rhs.norm_sqr();
        if den.is_zero() {
            return None;
        }
        let re = self
            .re
            .mul(&rhs.re, p, RM)
            .add(&self.im.mul(&rhs.im, p, RM), p, RM);
        let im = self
            .im
            .mul(&rhs.re, p, RM)
            .sub(&self.re.mul(&rhs.im, p, RM), p, RM);
        Some(BigComplex {
            re: re.div(&den, p, RM),
            im: im.div(&den, p, RM),
            precision: self.precision,
        })
    }

    pub fn norm_sqr(&self) -> BigFloat {
        let p = self.wp();
        self.re
            .mul(&self.re, p, RM)
            .add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Natural logarithm of the modulus.
    pub fn ln_abs(&self) -> BigFloat {
        let p = self.wp();
        let mut cc = consts();
        let ln = self.norm_sqr().ln(p, RM, &mut cc);
        ln.div(&BigFloat::from_i64(2, p), p, RM)
    }

    /// Rough `log2 |z|` (within one unit); `-inf` for zero.
    pub fn abs_log2(&self) -> f64 {
        let e = |x: &BigFloat| {
            if x.is_zero() {
                i64::MIN
            } else {
                x.exponent().map_or(i64::MAX, |e| e as i64)
            }
        };
        let m = e(&self.re).max(e(&self.im));
        if m == i64::MIN {
            f64::NEG_INFINITY
        } else {
            m as f64
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (bigfloat_to_f64(&self.re), bigfloat_to_f64(&self.im))
    }
}

pub(crate) fn pi(precision: usize) -> BigFloat {
    consts().pi(precision + GUARD, RM)
}

pub(crate) fn working_precision(precision: usize) -> usize {
    precision + GUARD
}

pub(crate) fn bigfloat_from_rational(q: &BigRational, p: usize) -> BigFloat {
    let mut cc = consts();
    let n = BigFloat::parse(&q.numer().to_string(), Radix::Dec, p, RM, &mut cc);
    if q.denom() == &1.into() {
        return n;
    }
    let d = BigFloat::parse(&q.denom().to_string(), Radix::Dec, p, RM, &mut cc);
    n.div(&d, p, RM)
}

pub(crate) fn bigfloat_from_decimal(text: &str, p: usize) -> Option<BigFloat> {
    let mut cc = consts();
    let x = BigFloat::parse(text.trim(), Radix::Dec, p, RM, &mut cc);
    (!x.is_nan()).then_some(x)
}

pub(crate) fn bigfloat_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let mut cc = consts();
    x.format(Radix::Dec, RM, &mut cc)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(f64::NAN)
}

/// Decimal rendering rounded (half up) to `digits` significant digits.
/// Fixed notation for decimal exponents in `[-5, digits)`, scientific
/// otherwise.
pub fn format_significant(x: &BigFloat, digits: usize) -> String {
    assert!(digits >= 1);
    if x.is_zero() {
        return "0".to_string();
    }
    let mut cc = consts();
    let s = x.format(Radix::Dec, RM, &mut cc).expect("finite value");
    let (negative, s) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.as_str()),
    };
    let (mantissa, exp) = s.split_once('e').expect("scientific format");
    let mut exp: i64 = exp.parse().expect("decimal exponent");
    let mut d: Vec<u8> = mantissa
        .bytes()
        .filter(u8::is_ascii_digit)
        .map(|b| b - b'0')
        .collect();
    // Normalize away leading zeros, if any.
    while d.len() > 1 && d[0] == 0 {
        d.remove(0);
        exp -= 1;
    }
    if d.len() > digits {
        let round_up = d[digits] >= 5;
        d.truncate(digits);
        if round_up {
            let mut i = digits;
            loop {
                if i == 0 {
                    d.insert(0, 1);
                    d.truncate(digits);
                    exp += 1;
                    break;
                }
                i -= 1;
                if d[i] == 9 {
                    d[i] = 0;
                } else {
                    d[i] += 1;
                    break;
                }
            }
        }
    }
    d.resize(digits, 0);
    let digit_str: String = d.iter().map(|b| char::from(b'0' + b)).collect();

    let body = if exp < -5 || exp >= digits as i64 {
        let (head, tail) = digit_str.split_at(1);
        if tail.is_empty() {
            format!("{head}e{exp:+}")
        } else {
            format!("{head}.{tail}e{exp:+}")
        }
    } else if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digit_str)
    } else {
        let int_len = exp as usize + 1;
        let (head, tail) = digit_str.split_at(int_len);
        if tail.is_empty() {
            head.to_string()
        } else {
            format!("{head}.{tail}")
        }
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Refines `approx`, a root of the monic polynomial `modulus`, by Newton
/// iteration until the step falls below `2^-precision` relative size.
pub(crate) fn newton_root(
    modulus: &[BigRational],
    approx: Complex64,
    precision: usize,
) -> Result<BigComplex> {
    let coeffs: Vec<BigComplex> = modulus
        .iter()
        .map(|c| BigComplex::from_rational(c, precision))
        .collect();
    let deriv: Vec<BigComplex> = modulus
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| {
            let k = BigRational::from_integer(i.into());
            BigComplex::from_rational(&(c * k), precision)
        })
        .collect();
    let horner = |cs: &[BigComplex], z: &BigComplex| {
        cs.iter()
            .rev()
            .fold(BigComplex::zero(precision), |acc, c| acc.mul(z).add(c))
    };

    let target = -((precision + GUARD / 2) as f64);
    let mut z = BigComplex::from_f64(approx.re, approx.im, precision);
    let mut converged = false;
    for _ in 0..100 {
        let f = horner(&coeffs, &z);
        if f.is_zero() {
            converged = true;
            break;
        }
        let df = horner(&deriv, &z);
        let step = f.div(&df).ok_or(Error::NewtonFailed)?;
        z = z.sub(&step);
        if step.abs_log2() < target + z.abs_log2().max(0.0) {
            converged = true;
            break;
        }
    }
    if !converged || !(z.re.is_zero() || z.re.exponent().is_some()) {
        return Err(Error::NewtonFailed);
    }
    Ok(z)
}
