//! Exact arithmetic in number fields `Q[x]/(m(x))` with a distinguished
//! complex embedding.

pub(crate) mod complex;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use complex::{format_significant, BigComplex, DEFAULT_PRECISION};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Rational = BigRational;

/// `Q[x]/(m(x))` for a monic, squarefree integer polynomial `m`, together
/// with the root of `m` selected by an embedding hint.
#[derive(Debug, PartialEq)]
pub struct NumberField {
    /// Monic modulus, constant coefficient first; length `degree + 1`.
    modulus: Vec<BigRational>,
    modulus_int: Vec<BigInt>,
    /// Double-precision approximation of the selected root.
    root_approx: Complex64,
}

impl NumberField {
    /// `Q` itself, presented as `Q[x]/(x)`.
    pub fn rationals() -> Arc<Self> {
        Arc::new(NumberField {
            modulus: vec![BigRational::zero(), BigRational::one()],
            modulus_int: vec![BigInt::zero(), BigInt::one()],
            root_approx: Complex64::new(0.0, 0.0),
        })
    }

    /// Builds the field of `min_poly` (constant coefficient first). For
    /// degree >= 2 the hint must lie clearly closer to one root than to
    /// every other; the tool never picks a conjugate on its own.
    pub fn new(min_poly: &[BigInt], hint: Option<(f64, f64)>) -> Result<Arc<Self>> {
        if min_poly.len() < 2 {
            return Err(Error::InvalidField("degree must be at least 1".into()));
        }
        if !min_poly.last().unwrap().is_one() {
            return Err(Error::InvalidField(
                "minimal polynomial must be monic".into(),
            ));
        }
        let modulus: Vec<BigRational> = min_poly
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect();
        let degree = modulus.len() - 1;

        let derivative: Vec<BigRational> = modulus
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        if poly_degree(&poly_gcd(&modulus, &derivative)) > 0 {
            return Err(Error::InvalidField(
                "minimal polynomial has a repeated root".into(),
            ));
        }

        let root_approx = if degree == 1 {
            let r = -modulus[0].to_f64().unwrap_or(f64::NAN);
            Complex64::new(r, 0.0)
        } else {
            let (re, im) = hint.ok_or_else(|| {
                Error::BadEmbeddingHint("a hint is required for fields of degree >= 2".into())
            })?;
            select_root(&modulus, Complex64::new(re, im))?
        };

        Ok(Arc::new(NumberField {
            modulus,
            modulus_int: min_poly.to_vec(),
            root_approx,
        }))
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Minimal polynomial, constant coefficient first.
    pub fn modulus(&self) -> &[BigRational] {
        &self.modulus
    }

    pub fn root_approx(&self) -> Complex64 {
        self.root_approx
    }

    /// The class of `x`.
    pub fn generator(self: &Arc<Self>) -> NfElement {
        self.element(vec![BigRational::zero(), BigRational::one()])
    }

    /// Element with the given coefficients (constant first), reduced mod `m`.
    pub fn element(self: &Arc<Self>, coeffs: Vec<BigRational>) -> NfElement {
        let mut coeffs = coeffs;
        poly_trim(&mut coeffs);
        if coeffs.len() > self.degree() {
            coeffs = poly_rem_monic(&coeffs, &self.modulus);
        }
        NfElement::from_rationals(&coeffs, Some(Arc::clone(self)))
    }

    pub fn from_integer(self: &Arc<Self>, n: i64) -> NfElement {
        self.element(vec![BigRational::from_integer(n.into())])
    }

    /// The selected root of `m`, refined by Newton iteration to `precision` bits.
    pub fn root(&self, precision: usize) -> Result<BigComplex> {
        if precision < 64 {
            return Err(Error::Precision(precision));
        }
        if self.degree() == 1 {
            return Ok(BigComplex::from_rational(
                &-self.modulus[0].clone(),
                precision,
            ));
        }
        complex::newton_root(&self.modulus, self.root_approx, precision)
    }
}

/// Picks the root of `modulus` nearest to `hint`, rejecting ambiguous hints.
fn select_root(modulus: &[BigRational], hint: Complex64) -> Result<Complex64> {
    let roots = durand_kerner(modulus).ok_or_else(|| {
        Error::BadEmbeddingHint("could not isolate the roots of the minimal polynomial".into())
    })?;
    let mut by_distance: Vec<(f64, Complex64)> =
        roots.iter().map(|r| ((r - hint).norm(), *r)).collect();
    by_distance.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (d1, nearest) = by_distance[0];
    let d2 = by_distance[1].0;
    if 3.0 * d1 >= d2 {
        return Err(Error::BadEmbeddingHint(format!(
            "hint ({}, {}) is not clearly nearest to a single root (distances {d1:.3e}, {d2:.3e})",
            hint.re, hint.im
        )));
    }
    Ok(nearest)
}

/// All complex roots of a monic squarefree polynomial in double precision.
fn durand_kerner(modulus: &[BigRational]) -> Option<Vec<Complex64>> {
    let c: Vec<f64> = modulus
        .iter()
        .map(|q| q.to_f64().unwrap_or(f64::NAN))
        .collect();
    let d = c.len() - 1;
    let eval = |z: Complex64| {
        c.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &k| acc * z + k)
    };
    let bound = 1.0 + c[..d].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..d)
        .map(|k| seed.powu(k as u32) * (bound / 2.0).max(0.5))
        .collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * bound {
            break;
        }
    }
    let ok = roots.iter().all(|r| {
        r.re.is_finite() && r.im.is_finite() && eval(*r).norm() < 1e-8 * bound.powi(d as i32)
    });
    ok.then_some(roots)
}

/// Element of a number field: `num / den` with `num` the integer
/// coefficients (constant first) of a polynomial of degree below the field
/// degree, `den > 0`, and no common factor between `den` and every
/// coefficient.
///
/// Rational constants carry no field context, which lets `zero()` and
/// `one()` exist without one; any binary operation adopts the context of
/// the operand that has it.
#[derive(Clone)]
pub struct NfElement {
    num: Vec<BigInt>,
    den: BigInt,
    field: Option<Arc<NumberField>>,
}

impl NfElement {
    fn from_parts(mut num: Vec<BigInt>, mut den: BigInt, field: Option<Arc<NumberField>>) -> Self {
        int_trim(&mut num);
        if num.is_empty() {
            den = BigInt::one();
        } else if !den.is_one() {
            if den.is_negative() {
                den = -den;
                for c in &mut num {
                    *c = -std::mem::take(c);
                }
            }
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if !g.is_one() {
                for c in &mut num {
                    *c /= &g;
                }
                den /= &g;
            }
        }
        NfElement { num, den, field }
    }

    fn from_rationals(coeffs: &[BigRational], field: Option<Arc<NumberField>>) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::from_parts(num, den, field)
    }

    pub fn rational(q: BigRational) -> Self {
        Self::from_rationals(&[q], None)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_parts(vec![BigInt::from(n)], BigInt::one(), None)
    }

    /// Trimmed coefficients, constant first; empty for zero.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// Coefficient vector padded to the field degree.
    pub fn coefficient_vector(&self) -> Vec<BigRational> {
        let d = self
            .field
            .as_ref()
            .map_or(1, |f| f.degree())
            .max(self.num.len());
        let mut v = self.coefficients();
        v.resize(d, BigRational::zero());
        v
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    /// Exact zero test on the coefficient vector.
    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.num.len() {
            0 => Some(BigRational::zero()),
            1 => Some(BigRational::new(self.num[0].clone(), self.den.clone())),
            _ => None,
        }
    }

    /// Value under the distinguished embedding at `precision` bits.
    pub fn embed(&self, precision: usize) -> Result<BigComplex> {
        if precision < 64 {
            return Err(Error::Precision(precision));
        }
        if let Some(q) = self.as_rational() {
            return Ok(BigComplex::from_rational(&q, precision));
        }
        let field = self
            .field
            .as_ref()
            .ok_or_else(|| Error::Internal("irrational element without a field".into()))?;
        let root = field.root(precision)?;
        let mut acc = BigComplex::zero(precision);
        for c in self.coefficients().iter().rev() {
            acc = acc.mul(&root).add(&BigComplex::from_rational(c, precision));
        }
        Ok(acc)
    }

    pub fn pow(&self, mut e: u32) -> NfElement {
        let mut base = self.clone();
        let mut acc = NfElement::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }

    fn context(a: &NfElement, b: &NfElement) -> Option<Arc<NumberField>> {
        match (&a.field, &b.field) {
            (Some(x), Some(y)) => {
                assert!(
                    Arc::ptr_eq(x, y) || x.modulus == y.modulus,
                    "arithmetic between elements of different number fields"
                );
                Some(Arc::clone(x))
            }
            (Some(x), None) | (None, Some(x)) => Some(Arc::clone(x)),
            (None, None) => None,
        }
    }

    fn add_signed(self, rhs: &NfElement, negate: bool) -> NfElement {
        let field = NfElement::context(&self, rhs);
        let (mut num, den, scale) = if self.den == rhs.den {
            (self.num, self.den, None)
        } else {
            let g = self.den.gcd(&rhs.den);
            let left = &rhs.den / &g;
            let right = &self.den / &g;
            let num = self.num.into_iter().map(|c| c * &left).collect();
            (num, self.den * &left, Some(right))
        };
        if num.len() < rhs.num.len() {
            num.resize(rhs.num.len(), BigInt::zero());
        }
        for (c, r) in num.iter_mut().zip(&rhs.num) {
            let r = match &scale {
                Some(s) => r * s,
                None => r.clone(),
            };
            if negate {
                *c -= r;
            } else {
                *c += r;
            }
        }
        NfElement::from_parts(num, den, field)
    }
}

impl PartialEq for NfElement {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl Eq for NfElement {}

impl fmt::Debug for NfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_coeff_string())
    }
}

impl fmt::Display for NfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_coeff_string())
    }
}

impl<'a> Add<&'a NfElement> for NfElement {
    type Output = NfElement;

    fn add(self, rhs: &'a NfElement) -> NfElement {
        self.add_signed(rhs, false)
    }
}

impl<'a> Sub<&'a NfElement> for NfElement {
    type Output = NfElement;

    fn sub(self, rhs: &'a NfElement) -> NfElement {
        self.add_signed(rhs, true)
    }
}

impl<'a> Mul<&'a NfElement> for NfElement {
    type Output = NfElement;

    fn mul(self, rhs: &'a NfElement) -> NfElement {
        let field = NfElement::context(&self, rhs);
        if self.is_zero() || rhs.is_zero() {
            return NfElement::from_parts(Vec::new(), BigInt::one(), field);
        }
        let mut num = int_poly_mul(&self.num, &rhs.num);
        if let Some(f) = &field {
            int_rem_monic(&mut num, &f.modulus_int);
        } else {
            debug_assert!(
                num.len() <= 1,
                "product of irrational elements without a field"
            );
        }
        let den = if rhs.den.is_one() {
            self.den
        } else {
            self.den * &rhs.den
        };
        NfElement::from_parts(num, den, field)
    }
}

macro_rules! forward_nf_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for NfElement {
            type Output = NfElement;
            fn $m(self, rhs: NfElement) -> NfElement {
                self.$m(&rhs)
            }
        }
        impl<'a> $tr<&'a NfElement> for &'a NfElement {
            type Output = NfElement;
            fn $m(self, rhs: &'a NfElement) -> NfElement {
                self.clone().$m(rhs)
            }
        }
    };
}
forward_nf_binop!(Add, add);
forward_nf_binop!(Sub, sub);
forward_nf_binop!(Mul, mul);

impl Neg for NfElement {
    type Output = NfElement;

    fn neg(mut self) -> NfElement {
        for c in &mut self.num {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &NfElement {
    type Output = NfElement;

    fn neg(self) -> NfElement {
        -self.clone()
    }
}

impl Zero for NfElement {
    fn zero() -> Self {
        NfElement {
            num: Vec::new(),
            den: BigInt::one(),
            field: None,
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
}

impl One for NfElement {
    fn one() -> Self {
        NfElement::from_integer(1)
    }
}

impl Scalar for NfElement {
    /// Inverse by the extended Euclidean algorithm against the modulus.
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.num.len() == 1 {
            return Some(NfElement::from_parts(
                vec![self.den.clone()],
                self.num[0].clone(),
                self.field.clone(),
            ));
        }
        let field = self.field.as_ref()?;
        let coeffs = poly_inverse_mod(&self.coefficients(), &field.modulus)?;
        Some(NfElement::from_rationals(&coeffs, Some(Arc::clone(field))))
    }

    fn from_rational(q: &BigRational) -> Self {
        NfElement::rational(q.clone())
    }

    fn from_i64(n: i64) -> Self {
        NfElement::from_integer(n)
    }

    fn leading_sign(&self) -> i8 {
        match self.num.first() {
            None => 0,
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    fn to_coeff_string(&self) -> String {
        if self.num.is_empty() {
            return "[0]".to_string();
        }
        let parts: Vec<String> = self.coefficients().iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

fn int_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Reduces `a` in place modulo the monic integer polynomial `m`.
fn int_rem_monic(a: &mut Vec<BigInt>, m: &[BigInt]) {
    let d = m.len() - 1;
    int_trim(a);
    while a.len() > d {
        let top = a.pop().unwrap();
        let shift = a.len() - d;
        for (i, c) in m[..d].iter().enumerate() {
            if !c.is_zero() {
                a[shift + i] -= &top * c;
            }
        }
        int_trim(a);
    }
}

/// Parses a bracketed coefficient vector such as `[1/2,-3]` into `field`.
pub fn parse_coefficient_vector(
    text: &str,
    field: &Arc<NumberField>,
) -> std::result::Result<NfElement, String> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| format!("expected a bracketed vector, found `{text}`"))?;
    let mut coeffs = Vec::new();
    for part in inner.split(',') {
        let part = part.trim();
        coeffs.push(parse_rational(part)?);
    }
    if coeffs.len() > field.degree() {
        return Err(format!(
            "vector `{text}` has {} entries, field degree is {}",
            coeffs.len(),
            field.degree()
        ));
    }
    Ok(field.element(coeffs))
}

pub fn parse_rational(text: &str) -> std::result::Result<BigRational, String> {
    let bad = || format!("bad rational `{text}`");
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

// Dense polynomial helpers over Q, constant coefficient first, trimmed.

fn poly_trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn poly_degree(v: &[BigRational]) -> usize {
    v.len().saturating_sub(1)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

/// Quotient and remainder of `a` by nonzero `b`.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let factor = r.last().unwrap() * &lead_inv;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &factor * c;
        }
        q[shift] = factor;
        r.pop();
        poly_trim(&mut r);
    }
    poly_trim(&mut q);
    (q, r)
}

fn poly_rem_monic(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    poly_divrem(a, m).1
}

fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !y.is_empty() {
        let r = poly_divrem(&x, &y).1;
        x = y;
        y = r;
    }
    x
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (o, c) in out.iter_mut().zip(b) {
        *o -= c;
    }
    poly_trim(&mut out);
    out
}

/// Inverse of `a` modulo `m`, or `None` when they share a factor.
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) =
        (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = if q.is_empty() || s1.is_empty() {
            s0.clone()
        } else {
            poly_sub(&s0, &poly_mul(&q, &s1))
        };
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    let mut out: Vec<BigRational> = s0.iter().map(|x| x * &c).collect();
    poly_trim(&mut out);
    Some(poly_rem_monic(&out, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn eisenstein() -> Arc<NumberField> {
        NumberField::new(&[1.into(), 1.into(), 1.into()], Some((-0.5, 0.87))).unwrap()
    }

    #[test]
    fn reduction_by_minimal_polynomial() {
        let k = eisenstein();
        let u = k.generator();
        let minus_one_minus_u = k.element(vec![q(-1, 1), q(-1, 1)]);
        assert_eq!(u.clone() * &u, minus_one_minus_u);
        assert_eq!(u.clone() * &minus_one_minus_u, NfElement::one());
        assert_eq!(u.inv().unwrap(), minus_one_minus_u);
        assert_eq!(u.clone() + &NfElement::zero(), u);
    }

    #[test]
    fn zero_tests_are_symbolic() {
        let k = eisenstein();
        let u = k.generator();
        assert!(NfElement::zero().is_zero());
        assert!(!u.is_zero());
        let m = u.clone() * &u + &u + &NfElement::one();
        assert!(m.is_zero());
        assert!(m.inv().is_none());
    }

    #[test]
    fn embedding_of_generator() {
        let k = eisenstein();
        let z = k.generator().embed(256).unwrap();
        let (re, im) = z.to_f64();
        assert!((re + 0.5).abs() < 1e-15);
        assert!((im - 0.866_025_403_784_438_6).abs() < 1e-15);
        let half3 = NfElement::rational(q(3, 2)).embed(64).unwrap();
        assert_eq!(half3.to_f64(), (1.5, 0.0));
    }

    #[test]
    fn minimal_polynomial_annihilates_embedding() {
        let k = eisenstein();
        for p in [64usize, 128, 256, 512] {
            let z = k.root(p).unwrap();
            let v = z
                .mul(&z)
                .add(&z)
                .add(&BigComplex::from_rational(&q(1, 1), p));
            assert!(
                v.abs_log2() < 1.0 - p as f64,
                "precision {p}: {}",
                v.abs_log2()
            );
        }
    }

    #[test]
    fn conjugate_hint_selects_other_root() {
        let k = NumberField::new(&[1.into(), 1.into(), 1.into()], Some((-0.5, -0.87))).unwrap();
        let (_, im) = k.generator().embed(128).unwrap().to_f64();
        assert!(im < 0.0);
    }

    #[test]
    fn bad_fields_and_hints() {
        assert!(matches!(
            NumberField::new(&[1.into(), 1.into(), 1.into()], Some((0.0, 0.0))),
            Err(Error::BadEmbeddingHint(_))
        ));
        assert!(matches!(
            NumberField::new(&[1.into(), 1.into(), 2.into()], Some((0.0, 1.0))),
            Err(Error::InvalidField(_))
        ));
        assert!(matches!(
            NumberField::new(&[1.into(), 2.into(), 1.into()], Some((-1.0, 0.1))),
            Err(Error::InvalidField(_))
        ));
        assert!(NumberField::new(&[1.into(), 1.into(), 1.into()], None).is_err());
        assert!(matches!(eisenstein().root(32), Err(Error::Precision(32))));
    }

    #[test]
    fn rationals_field() {
        let k = NumberField::rationals();
        assert_eq!(k.degree(), 1);
        let x = k.element(vec![q(2, 3)]);
        assert_eq!(x.inv().unwrap(), NfElement::rational(q(3, 2)));
        // x reduces to the root 0 in Q[x]/(x).
        assert!(k.generator().is_zero());
    }

    #[test]
    fn higher_degree_inverse() {
        // Q(2^(1/3)), hint at the real root.
        let k = NumberField::new(
            &[(-2).into(), 0.into(), 0.into(), 1.into()],
            Some((1.26, 0.0)),
        )
        .unwrap();
        let a = k.element(vec![q(1, 1), q(-2, 1), q(3, 5)]);
        let b = a.inv().unwrap();
        assert_eq!(a * &b, NfElement::one());
        let c = k.generator().pow(3);
        assert_eq!(c, NfElement::from_integer(2));
    }

    #[test]
    fn parse_vectors() {
        let k = eisenstein();
        let x = parse_coefficient_vector("[1/2, -3]", &k).unwrap();
        assert_eq!(x.coefficients(), vec![q(1, 2), q(-3, 1)]);
        assert_eq!(x.to_coeff_string(), "[1/2,-3]");
        assert!(parse_coefficient_vector("[1,2,3]", &k).is_err());
        assert!(parse_coefficient_vector("1,2", &k).is_err());
        assert!(parse_coefficient_vector("[1/0]", &k).is_err());
    }
}
