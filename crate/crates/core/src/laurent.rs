//! Exact Laurent polynomials in `t`, reduced rational functions, and
//! matrices of Laurent polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// `sum c_i t^(low + i)`; no zero coefficient at either end, and the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<F> {
    low: i64,
    coeffs: Vec<F>,
}

impl<F: Scalar> LaurentPoly<F> {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: F, exponent: i64) -> Self {
        Self::from_coeffs(exponent, vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(F::one(), 1)
    }

    /// `sum coeffs[i] t^(low + i)`, normalized.
    pub fn from_coeffs(low: i64, coeffs: Vec<F>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i64, F)>>(terms: I) -> Self {
        let terms: Vec<(i64, F)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![F::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            let i = (e - lo) as usize;
            coeffs[i] = coeffs[i].clone() + &c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    /// Ordinary polynomial from integer coefficients, constant first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(0, coeffs.iter().map(|&c| F::from_i64(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// `high - low`; zero for constants and monomials.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficient(&self, exponent: i64) -> F {
        let i = exponent - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            F::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Coefficients from the lowest exponent upward.
    pub fn coefficients(&self) -> &[F] {
        &self.coeffs
    }

    pub fn lowest_coefficient(&self) -> Option<&F> {
        self.coeffs.first()
    }

    pub fn leading_coefficient(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// `(exponent, coefficient)` pairs in ascending order, nonzero only.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_coeffs(
            self.low,
            self.coeffs.iter().map(|x| x.clone() * c).collect(),
        )
    }

    /// Substitution `t -> t^-1`.
    pub fn reciprocal(&self) -> Self {
        match self.high_exponent() {
            None => Self::zero(),
            Some(hi) => Self::from_coeffs(-hi, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    /// Exact value at a nonzero point.
    pub fn evaluate(&self, at: &F) -> Result<F> {
        if at.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        let factor = if self.low >= 0 {
            pow(at, self.low as u64)
        } else {
            pow(&at.inv().expect("nonzero"), (-self.low) as u64)
        };
        Ok(acc * &factor)
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn value_at_one(&self) -> F {
        self.coeffs.iter().fold(F::zero(), |acc, c| acc + c)
    }

    /// Splits `self = t^low * p` with `p(0) != 0`, returning `(low, p)`
    /// with `p` as ordinary coefficients, constant first.
    fn split_monomial(&self) -> (i64, Vec<F>) {
        (self.low, self.coeffs.clone())
    }

    /// Exact quotient `self / divisor` in the Laurent ring, or `None` when
    /// the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a, p) = self.split_monomial();
        let (b, d) = divisor.split_monomial();
        let (q, r) = poly_divrem(&p, &d);
        r.is_empty().then(|| Self::from_coeffs(a - b, q))
    }

    /// Monic greatest common divisor with lowest exponent 0. Laurent
    /// monomials are units, so they never contribute.
    pub fn gcd(&self, other: &Self) -> Self {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials"
        );
        let mut x = self.coeffs.clone();
        let mut y = other.coeffs.clone();
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            let r = poly_divrem(&x, &y).1;
            x = y;
            y = make_monic(r);
        }
        Self::from_coeffs(0, make_monic(x))
    }

    /// Largest `k` with `(t - 1)^k | self`, found by repeated synthetic
    /// division, and the value at `t = 1` of the cofactor.
    pub fn order_at_one(&self) -> (usize, F) {
        let (k, cofactor) = self.divide_out_one();
        (k, cofactor.value_at_one())
    }

    /// `(k, q)` with `self = (t - 1)^k q` and `q(1) != 0`.
    pub fn divide_out_one(&self) -> (usize, Self) {
        assert!(!self.is_zero(), "order at t = 1 of the zero polynomial");
        let mut q = self.coeffs.clone();
        let mut k = 0;
        loop {
            let total = q.iter().fold(F::zero(), |acc, c| acc + c);
            if !total.is_zero() {
                break;
            }
            // Synthetic division by (t - 1), highest degree first.
            let n = q.len();
            let mut out = vec![F::zero(); n - 1];
            let mut carry = F::zero();
            for i in (1..n).rev() {
                carry = carry + &q[i];
                out[i - 1] = carry.clone();
            }
            q = out;
            k += 1;
        }
        (k, Self::from_coeffs(self.low, q))
    }

    /// Canonical representative up to the units `+-t^k`: lowest exponent 0
    /// and positive [`Scalar::leading_sign`] of the lowest coefficient.
    pub fn unit_normalized(&self) -> (Unit, Self) {
        if self.is_zero() {
            return (Unit { sign: 1, shift: 0 }, Self::zero());
        }
        let sign = if self.coeffs[0].leading_sign() < 0 {
            -1
        } else {
            1
        };
        let p = Self::from_coeffs(0, self.coeffs.clone());
        let p = if sign < 0 { -p } else { p };
        (
            Unit {
                sign,
                shift: self.low,
            },
            p,
        )
    }

    /// Equality up to a unit `+-t^k`.
    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        let a = self.unit_normalized().1;
        let b = other.unit_normalized().1;
        a == b || a == -b
    }

    pub fn evaluate_int(&self, x: i64) -> F {
        self.evaluate(&F::from_i64(x))
            .expect("nonzero integer point")
    }

    /// Print format `c*t^k + ...`, descending exponents, coefficients as
    /// bracketed vectors; `0` for the zero polynomial.
    pub fn to_term_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<String> = self
            .terms()
            .map(|(e, c)| format!("{}*t^{}", c.to_coeff_string(), e))
            .collect();
        terms.reverse();
        terms.join(" + ")
    }

    /// Inverse of [`to_term_string`](Self::to_term_string), with a
    /// caller-supplied coefficient parser.
    pub fn parse_terms<P>(text: &str, parse_coeff: P) -> std::result::Result<Self, String>
    where
        P: Fn(&str) -> std::result::Result<F, String>,
    {
        let text = text.trim();
        if text == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        for part in text.split(" + ") {
            let (c, e) = part
                .rsplit_once("*t^")
                .ok_or_else(|| format!("bad term `{part}`"))?;
            let e: i64 = e.parse().map_err(|_| format!("bad exponent in `{part}`"))?;
            terms.push((e, parse_coeff(c)?));
        }
        Ok(Self::from_terms(terms))
    }

    /// Human-readable rendering, e.g. `t^2 - 4*t + 1`. Coefficients that
    /// are not rational are shown as bracketed vectors.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self
            .terms()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .enumerate()
        {
            let s = c.to_coeff_string();
            let inner = &s[1..s.len() - 1];
            let rational = !inner.contains(',');
            let (neg, mag) = if rational && inner.starts_with('-') {
                (true, &inner[1..])
            } else if rational {
                (false, inner)
            } else {
                (false, s.as_str())
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if mono.is_empty() {
                out.push_str(mag);
            } else if mag == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

fn pow<F: Scalar>(x: &F, mut e: u64) -> F {
    let mut base = x.clone();
    let mut acc = F::one();
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

fn trim<F: Scalar>(v: &mut Vec<F>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn make_monic<F: Scalar>(mut v: Vec<F>) -> Vec<F> {
    trim(&mut v);
    if let Some(lc) = v.last() {
        if !lc.is_one() {
            let s = lc.inv().expect("nonzero leading coefficient");
            for c in &mut v {
                *c = c.clone() * &s;
            }
        }
    }
    v
}

/// Ordinary polynomial division, constant coefficient first.
fn poly_divrem<F: Scalar>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    let mut q = vec![F::zero(); r.len() - db];
    while !r.is_empty() && r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = r.last().unwrap().clone() * &lead_inv;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].clone() - factor.clone() * c;
        }
        q[shift] = factor;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Unit `sign * t^shift` of the Laurent ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unit {
    pub sign: i8,
    pub shift: i64,
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{sign}t^{}", self.shift)
    }
}

impl<F: Scalar> Add<&LaurentPoly<F>> for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;

    fn add(self, rhs: &LaurentPoly<F>) -> LaurentPoly<F> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self
            .high_exponent()
            .unwrap()
            .max(rhs.high_exponent().unwrap());
        let mut coeffs = vec![F::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = (self.low - low) as usize + i;
            coeffs[k] = coeffs[k].clone() + c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            let k = (rhs.low - low) as usize + i;
            coeffs[k] = coeffs[k].clone() + c;
        }
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

impl<F: Scalar> Neg for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;

    fn neg(self) -> LaurentPoly<F> {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<F: Scalar> Neg for LaurentPoly<F> {
    type Output = LaurentPoly<F>;

    fn neg(self) -> LaurentPoly<F> {
        -&self
    }
}

impl<F: Scalar> Sub<&LaurentPoly<F>> for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;

    fn sub(self, rhs: &LaurentPoly<F>) -> LaurentPoly<F> {
        self + &(-rhs)
    }
}

impl<F: Scalar> Mul<&LaurentPoly<F>> for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;

    fn mul(self, rhs: &LaurentPoly<F>) -> LaurentPoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + &(a.clone() * b);
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_laurent_binop {
    ($tr:ident, $m:ident) => {
        impl<F: Scalar> $tr for LaurentPoly<F> {
            type Output = LaurentPoly<F>;
            fn $m(self, rhs: LaurentPoly<F>) -> LaurentPoly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_laurent_binop!(Add, add);
forward_laurent_binop!(Sub, sub);
forward_laurent_binop!(Mul, mul);

/// Quotient of Laurent polynomials with the common factor cancelled and
/// the denominator monic with lowest exponent 0.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<F> {
    numerator: LaurentPoly<F>,
    denominator: LaurentPoly<F>,
}

impl<F: Scalar> RationalFunction<F> {
    pub fn reduce(numerator: LaurentPoly<F>, denominator: LaurentPoly<F>) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numerator.is_zero() {
            return Ok(RationalFunction {
                numerator,
                denominator: LaurentPoly::one(),
            });
        }
        let g = numerator.gcd(&denominator);
        let num = numerator.div_exact(&g).expect("gcd divides the numerator");
        let den = denominator
            .div_exact(&g)
            .expect("gcd divides the denominator");
        let shift = den.low;
        let lc_inv = den
            .leading_coefficient()
            .unwrap()
            .inv()
            .expect("nonzero leading coefficient");
        Ok(RationalFunction {
            numerator: num.shift(-shift).scale(&lc_inv),
            denominator: den.shift(-shift).scale(&lc_inv),
        })
    }

    pub fn from_polynomial(p: LaurentPoly<F>) -> Self {
        RationalFunction {
            numerator: p,
            denominator: LaurentPoly::one(),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly<F> {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPoly<F> {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Canonical representative up to `+-t^k`, and the unit `u` with
    /// `self = u * normalized`.
    pub fn unit_normalized(&self) -> (Unit, Self) {
        let (unit, num) = self.numerator.unit_normalized();
        (
            unit,
            RationalFunction {
                numerator: num,
                denominator: self.denominator.clone(),
            },
        )
    }

    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        self.denominator == other.denominator && self.numerator.eq_up_to_unit(&other.numerator)
    }

    /// `num` alone when the denominator is 1, else `(num) / (den)`.
    pub fn to_term_string(&self) -> String {
        if self.denominator.is_one() {
            self.numerator.to_term_string()
        } else {
            format!(
                "({}) / ({})",
                self.numerator.to_term_string(),
                self.denominator.to_term_string()
            )
        }
    }

    pub fn parse_terms<P>(text: &str, parse_coeff: P) -> std::result::Result<Self, String>
    where
        P: Fn(&str) -> std::result::Result<F, String>,
    {
        let text = text.trim();
        match text.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            Some(inner) if inner.contains(") / (") => {
                let (n, d) = inner.split_once(") / (").unwrap();
                let num = LaurentPoly::parse_terms(n, &parse_coeff)?;
                let den = LaurentPoly::parse_terms(d, &parse_coeff)?;
                RationalFunction::reduce(num, den).map_err(|e| e.to_string())
            }
            _ => Ok(Self::from_polynomial(LaurentPoly::parse_terms(
                text,
                parse_coeff,
            )?)),
        }
    }

    pub fn pretty(&self) -> String {
        if self.denominator.is_one() {
            self.numerator.pretty()
        } else {
            format!(
                "({}) / ({})",
                self.numerator.pretty(),
                self.denominator.pretty()
            )
        }
    }
}

/// Rectangular matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly<F>>,
}

impl<F: Scalar> PolyMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly<F>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// `t^exponent * m`.
    pub fn from_scalar_matrix(m: &Matrix<F>, exponent: i64) -> Self {
        PolyMatrix {
            rows: m.rows(),
            cols: m.cols(),
            entries: m
                .entries()
                .iter()
                .map(|c| LaurentPoly::monomial(c.clone(), exponent))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly<F>) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Copies `block` into the submatrix with top-left corner `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &PolyMatrix<F>) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    /// Drops columns `start..start + width`.
    pub fn without_columns(&self, start: usize, width: usize) -> Self {
        let keep: Vec<usize> = (0..self.cols)
            .filter(|j| *j < start || *j >= start + width)
            .collect();
        let mut out = Self::zeros(self.rows, keep.len());
        for i in 0..self.rows {
            for (jj, &j) in keep.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    /// Entrywise value at a nonzero point.
    pub fn evaluate(&self, at: &F) -> Result<Matrix<F>> {
        let data = self
            .entries
            .iter()
            .map(|p| p.evaluate(at))
            .collect::<Result<Vec<F>>>()?;
        Ok(Matrix::new(self.rows, self.cols, data))
    }

    /// Exact determinant by evaluation and interpolation.
    ///
    /// Each row is shifted by its lowest exponent so all entries become
    /// ordinary polynomials; the shifted determinant has degree at most
    /// `D`, the sum of the row degrees. It is evaluated by fraction-free
    /// elimination at `t = 1, ..., D + 1`, interpolated, checked against
    /// one further point, and shifted back.
    pub fn determinant(&self) -> LaurentPoly<F> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut shift = 0i64;
        let mut degree_bound = 0usize;
        let mut shifted: Vec<Vec<F>> = Vec::with_capacity(n * n);
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            let Some(row_low) = row.iter().filter_map(LaurentPoly::low_exponent).min() else {
                return LaurentPoly::zero();
            };
            let row_high = row
                .iter()
                .filter_map(LaurentPoly::high_exponent)
                .max()
                .unwrap();
            shift += row_low;
            degree_bound += (row_high - row_low) as usize;
            for p in row {
                let mut v = vec![F::zero(); (row_high - row_low + 1) as usize];
                for (e, c) in p.terms() {
                    v[(e - row_low) as usize] = c.clone();
                }
                shifted.push(v);
            }
        }

        let det_at = |x: i64| -> F {
            let xf = F::from_i64(x);
            let data = shifted
                .iter()
                .map(|v| v.iter().rev().fold(F::zero(), |acc, c| acc * &xf + c))
                .collect();
            Matrix::new(n, n, data).determinant()
        };

        let points: Vec<i64> = (1..=degree_bound as i64 + 2).collect();
        let mut values: Vec<F> = points.par_iter().map(|&x| det_at(x)).collect();
        let check = values.pop().unwrap();

        let coeffs = interpolate(&values);
        let x_check = F::from_i64(degree_bound as i64 + 2);
        let at_check = coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * &x_check + c);
        assert!(
            at_check == check,
            "interpolated determinant disagrees at the check point; degree bound is wrong"
        );
        LaurentPoly::from_coeffs(shift, coeffs)
    }
}

/// Coefficients (constant first) of the polynomial of degree `< values.len()`
/// taking `values[k]` at `t = k + 1`, via Newton divided differences.
fn interpolate<F: Scalar>(values: &[F]) -> Vec<F> {
    let m = values.len();
    let mut c = values.to_vec();
    for j in 1..m {
        let inv_j = F::from_i64(j as i64).inv().expect("nonzero");
        for i in (j..m).rev() {
            c[i] = (c[i].clone() - &c[i - 1]) * &inv_j;
        }
    }
    // Expand c_0 + c_1 (t - 1) + c_2 (t - 1)(t - 2) + ... by Horner.
    let mut poly: Vec<F> = Vec::new();
    for k in (0..m).rev() {
        // poly = poly * (t - (k + 1)) + c_k
        let xk = F::from_i64(k as i64 + 1);
        let mut next = vec![F::zero(); poly.len() + 1];
        for (i, a) in poly.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + a;
            next[i] = next[i].clone() - &(a.clone() * &xk);
        }
        next[0] = next[0].clone() + &c[k];
        poly = next;
    }
    trim(&mut poly);
    poly
}
