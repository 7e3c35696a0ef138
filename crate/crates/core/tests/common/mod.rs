//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use proptest::prelude::*;
use twistvol::group::{Letter, Word};
use twistvol::{Job, LaurentPoly, Matrix, NfElement, NumberField, PolyMatrix};

pub const FIG8_JOB: &str = include_str!("../../examples/figure-eight.job");

pub fn fig8() -> Job {
    Job::parse(FIG8_JOB).expect("bundled job parses")
}

pub fn eisenstein() -> Arc<NumberField> {
    static FIELD: OnceLock<Arc<NumberField>> = OnceLock::new();
    Arc::clone(FIELD.get_or_init(|| {
        NumberField::new(&[1.into(), 1.into(), 1.into()], Some((-0.5, 0.87))).unwrap()
    }))
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn int_poly(c: &[i64]) -> LaurentPoly<NfElement> {
    LaurentPoly::from_ints(c)
}

pub fn product(factors: &[&[i64]]) -> LaurentPoly<NfElement> {
    factors
        .iter()
        .fold(LaurentPoly::one(), |acc, f| &acc * &int_poly(f))
}

/// Laplace expansion along the first row.
pub fn cofactor_determinant(m: &PolyMatrix<NfElement>) -> LaurentPoly<NfElement> {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return LaurentPoly::one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = LaurentPoly::zero();
    for j in 0..n {
        if m.get(0, j).is_zero() {
            continue;
        }
        let mut minor = PolyMatrix::zeros(n - 1, n - 1);
        for i in 1..n {
            let mut jj = 0;
            for k in 0..n {
                if k != j {
                    minor.set(i - 1, jj, m.get(i, k).clone());
                    jj += 1;
                }
            }
        }
        let term = m.get(0, j) * &cofactor_determinant(&minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// Integer Laurent polynomial as exponent -> coefficient.
pub type IntPoly = BTreeMap<i64, i64>;

fn int_add(a: &mut IntPoly, e: i64, c: i64) {
    let v = a.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        a.remove(&e);
    }
}

pub fn int_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = IntPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            int_add(&mut out, ea + eb, ca * cb);
        }
    }
    out
}

/// Abelianized Fox derivative `d w / d x_g` evaluated at `x -> t^alpha(x)`,
/// computed letter by letter with integer exponents.
pub fn untwisted_fox(w: &Word, g: usize, alpha: &[i64]) -> IntPoly {
    let mut out = IntPoly::new();
    let mut prefix = 0i64;
    for l in w.letters() {
        let a = alpha[l.generator];
        if l.generator == g {
            if l.inverse {
                int_add(&mut out, prefix - a, -1);
            } else {
                int_add(&mut out, prefix, 1);
            }
        }
        prefix += if l.inverse { -a } else { a };
    }
    out
}

/// Integer determinant of a square matrix of integer Laurent polynomials
/// by Laplace expansion.
pub fn int_determinant(m: &[Vec<IntPoly>]) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::from([(0, 1)]);
    }
    let mut acc = IntPoly::new();
    for j in 0..n {
        let minor: Vec<Vec<IntPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = int_mul(&m[0][j], &int_determinant(&minor));
        for (e, c) in term {
            int_add(&mut acc, e, if j % 2 == 0 { c } else { -c });
        }
    }
    acc
}

pub fn int_to_laurent(p: &IntPoly) -> LaurentPoly<NfElement> {
    LaurentPoly::from_terms(p.iter().map(|(e, c)| (*e, NfElement::from_integer(*c))))
}

pub fn letters(generators: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (0..generators, any::<bool>()).prop_map(|(g, inv)| Letter::new(g, inv)),
        0..=max_len,
    )
}

pub fn word(generators: usize, max_len: usize) -> impl Strategy<Value = Word> {
    letters(generators, max_len).prop_map(Word::free_reduce)
}

pub fn small_rational() -> impl Strategy<Value = BigRational> + Clone {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

pub fn eisenstein_element() -> impl Strategy<Value = NfElement> + Clone {
    (small_rational(), small_rational()).prop_map(|(a, b)| eisenstein().element(vec![a, b]))
}

pub fn nonzero_eisenstein_element() -> impl Strategy<Value = NfElement> {
    eisenstein_element().prop_filter("nonzero", |x| !x.is_zero())
}

/// Product of elementary SL(2) matrices with entries from `entry`.
pub fn sl2<S>(entry: S) -> impl Strategy<Value = Matrix<NfElement>>
where
    S: Strategy<Value = NfElement> + Clone,
{
    prop::collection::vec((entry, any::<bool>()), 1..=3).prop_map(|factors| {
        let one = NfElement::from_integer(1);
        let zero = NfElement::from_integer(0);
        factors
            .into_iter()
            .fold(Matrix::identity(2), |acc, (x, upper)| {
                let e = if upper {
                    Matrix::from_rows(vec![vec![one.clone(), x], vec![zero.clone(), one.clone()]])
                } else {
                    Matrix::from_rows(vec![vec![one.clone(), zero.clone()], vec![x, one.clone()]])
                };
                &acc * &e
            })
    })
}

pub fn rational_entry() -> impl Strategy<Value = NfElement> + Clone {
    small_rational().prop_map(NfElement::rational)
}

/// Laurent polynomial with exponents in `lo..=lo + span` over `Q(u)`.
pub fn laurent(max_span: usize) -> impl Strategy<Value = LaurentPoly<NfElement>> {
    (
        -2i64..=2,
        prop::collection::vec(eisenstein_element(), 0..=max_span + 1),
    )
        .prop_map(|(lo, c)| LaurentPoly::from_coeffs(lo, c))
}

pub fn poly_matrix(n: usize, max_span: usize) -> impl Strategy<Value = PolyMatrix<NfElement>> {
    prop::collection::vec(prop::collection::vec(laurent(max_span), n), n)
        .prop_map(PolyMatrix::from_rows)
}
