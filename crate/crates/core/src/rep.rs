//! SL(2) representations of a presented group and their symmetric powers.

use crate::error::{Error, Result};
use crate::group::{Presentation, Word};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Generator-indexed 2x2 images.
#[derive(Clone, Debug)]
pub struct RepSl2<F> {
    images: Vec<Matrix<F>>,
    inverses: Vec<Matrix<F>>,
}

impl<F: Scalar> RepSl2<F> {
    /// Builds a representation, requiring every image to be 2x2 with
    /// determinant exactly 1.
    pub fn new(images: Vec<Matrix<F>>, names: &[char]) -> Result<Self> {
        let rep = Self::new_unchecked(images)?;
        if let Some((g, det)) = rep.determinant_failures().into_iter().next() {
            return Err(Error::NotSl2 {
                generator: names.get(g).copied().unwrap_or('?'),
                det: det.to_coeff_string(),
            });
        }
        Ok(rep)
    }

    /// Builds a representation with only invertibility enforced, for
    /// diagnostics that report determinant failures themselves.
    pub fn new_unchecked(images: Vec<Matrix<F>>) -> Result<Self> {
        let mut inverses = Vec::with_capacity(images.len());
        for (g, m) in images.iter().enumerate() {
            if m.rows() != 2 || m.cols() != 2 {
                return Err(Error::Internal(format!(
                    "image of generator #{g} is not 2x2"
                )));
            }
            inverses.push(inverse2(m).ok_or(Error::DivisionByZero)?);
        }
        Ok(RepSl2 { images, inverses })
    }

    /// Every generator sent to the identity.
    pub fn trivial(generators: usize) -> Self {
        let id = Matrix::identity(2);
        RepSl2 {
            images: vec![id.clone(); generators],
            inverses: vec![id; generators],
        }
    }

    pub fn num_generators(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, g: usize) -> &Matrix<F> {
        &self.images[g]
    }

    /// Generators whose image does not have determinant 1, with the
    /// offending determinant.
    pub fn determinant_failures(&self) -> Vec<(usize, F)> {
        self.images
            .iter()
            .enumerate()
            .filter_map(|(g, m)| {
                let det = m.determinant();
                (!det.is_one()).then_some((g, det))
            })
            .collect()
    }

    /// Left-to-right product of generator images and their inverses.
    pub fn evaluate_word(&self, w: &Word) -> Result<Matrix<F>> {
        let mut acc = Matrix::identity(2);
        for l in w.letters() {
            let m = if l.inverse {
                self.inverses.get(l.generator)
            } else {
                self.images.get(l.generator)
            }
            .ok_or_else(|| Error::UnknownGenerator(format!("#{}", l.generator)))?;
            acc = &acc * m;
        }
        Ok(acc)
    }
}

fn inverse2<F: Scalar>(m: &Matrix<F>) -> Option<Matrix<F>> {
    let (a, b, c, d) = (&m[(0, 0)], &m[(0, 1)], &m[(1, 0)], &m[(1, 1)]);
    let det = a.clone() * d - b.clone() * c;
    let s = det.inv()?;
    Some(Matrix::from_rows(vec![
        vec![d.clone() * &s, -(b.clone() * &s)],
        vec![-(c.clone() * &s), a.clone() * &s],
    ]))
}

/// Coefficients of `(p x + q y)^k` in the basis `x^k, x^(k-1) y, ..., y^k`.
fn linear_form_power<F: Scalar>(p: &F, q: &F, k: usize) -> Vec<F> {
    let mut out = vec![F::one()];
    for _ in 0..k {
        let mut next = vec![F::zero(); out.len() + 1];
        for (i, c) in out.iter().enumerate() {
            next[i] = next[i].clone() + &(c.clone() * p);
            next[i + 1] = next[i + 1].clone() + &(c.clone() * q);
        }
        out = next;
    }
    out
}

/// Action of `m` on homogeneous polynomials of degree `n - 1` in `x, y`
/// by `p(v) -> p(m^-1 v)`, in the basis `x^(n-1), x^(n-2) y, ..., y^(n-1)`.
///
/// Column `j` holds `(ax + by)^(n-1-j) (cx + dy)^j` where
/// `m^-1 = [[a, b], [c, d]]`.
pub fn symmetric_power<F: Scalar>(m: &Matrix<F>, n: usize) -> Matrix<F> {
    assert!(n >= 1, "symmetric power dimension must be positive");
    assert!(
        m.rows() == 2 && m.cols() == 2,
        "symmetric power of a non-2x2 matrix"
    );
    let inv = inverse2(m).expect("symmetric power of a singular matrix");
    let (a, b, c, d) = (&inv[(0, 0)], &inv[(0, 1)], &inv[(1, 0)], &inv[(1, 1)]);
    let first: Vec<Vec<F>> = (0..n).map(|k| linear_form_power(a, b, k)).collect();
    let second: Vec<Vec<F>> = (0..n).map(|k| linear_form_power(c, d, k)).collect();

    let mut out = Matrix::<F>::zeros(n, n);
    for j in 0..n {
        let p = &first[n - 1 - j];
        let q = &second[j];
        for (r, x) in p.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (s, y) in q.iter().enumerate() {
                let v = out[(r + s, j)].clone() + &(x.clone() * y);
                out[(r + s, j)] = v;
            }
        }
    }
    out
}

/// A relation whose two sides evaluate to different matrices.
#[derive(Clone, Debug)]
pub struct RelationFailure<F> {
    pub index: usize,
    /// `evaluate(lhs) - evaluate(rhs)`
    pub difference: Matrix<F>,
}

/// Exact check of every relation; empty iff `rep` respects `pres`.
pub fn check_relations<F: Scalar>(
    rep: &RepSl2<F>,
    pres: &Presentation,
) -> Result<Vec<RelationFailure<F>>> {
    let mut failures = Vec::new();
    for (index, (lhs, rhs)) in pres.relations().iter().enumerate() {
        let difference = rep.evaluate_word(lhs)?.sub(&rep.evaluate_word(rhs)?);
        if !difference.is_zero() {
            failures.push(RelationFailure { index, difference });
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{NfElement, NumberField};
    use std::sync::Arc;

    fn field() -> Arc<NumberField> {
        NumberField::new(&[1.into(), 1.into(), 1.into()], Some((-0.5, 0.87))).unwrap()
    }

    fn int(n: i64) -> NfElement {
        NfElement::from_integer(n)
    }

    fn fig8_rep(k: &Arc<NumberField>) -> RepSl2<NfElement> {
        let u = k.generator();
        let a = Matrix::from_rows(vec![vec![int(1), int(1)], vec![int(0), int(1)]]);
        let b = Matrix::from_rows(vec![vec![int(1), int(0)], vec![-u, int(1)]]);
        RepSl2::new(vec![a, b], &['a', 'b']).unwrap()
    }

    fn ints(rows: &[&[i64]]) -> Matrix<NfElement> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn symmetric_powers_of_a() {
        let k = field();
        let rep = fig8_rep(&k);
        assert_eq!(symmetric_power(rep.image(0), 2), ints(&[&[1, 0], &[-1, 1]]));
        assert_eq!(
            symmetric_power(rep.image(0), 3),
            ints(&[&[1, 0, 0], &[-2, 1, 0], &[1, -1, 1]])
        );
        assert_eq!(
            symmetric_power(rep.image(0), 4),
            ints(&[
                &[1, 0, 0, 0],
                &[-3, 1, 0, 0],
                &[3, -2, 1, 0],
                &[-1, 1, -1, 1]
            ])
        );
    }

    #[test]
    fn symmetric_powers_of_b() {
        let k = field();
        let rep = fig8_rep(&k);
        let u = k.generator();
        let (o, z) = (int(1), int(0));
        let expected3 = Matrix::from_rows(vec![
            vec![o.clone(), u.clone(), u.pow(2)],
            vec![z.clone(), o.clone(), int(2) * &u],
            vec![z.clone(), z.clone(), o.clone()],
        ]);
        assert_eq!(symmetric_power(rep.image(1), 3), expected3);
        let expected4 = Matrix::from_rows(vec![
            vec![o.clone(), u.clone(), u.pow(2), u.pow(3)],
            vec![z.clone(), o.clone(), int(2) * &u, int(3) * &u.pow(2)],
            vec![z.clone(), z.clone(), o.clone(), int(3) * &u],
            vec![z.clone(), z.clone(), z, o],
        ]);
        assert_eq!(symmetric_power(rep.image(1), 4), expected4);
    }

    #[test]
    fn trivial_dimension_and_identity() {
        let k = field();
        let rep = fig8_rep(&k);
        assert_eq!(symmetric_power(rep.image(1), 1), Matrix::identity(1));
        for n in 1..6 {
            assert_eq!(
                symmetric_power(&Matrix::<NfElement>::identity(2), n),
                Matrix::identity(n)
            );
        }
    }

    #[test]
    fn evaluate_words() {
        let k = field();
        let rep = fig8_rep(&k);
        let names = ['a', 'b'];
        let u = k.generator();
        assert_eq!(
            rep.evaluate_word(&Word::identity()).unwrap(),
            Matrix::identity(2)
        );
        let ab = rep
            .evaluate_word(&Word::parse_with("ab", &names).unwrap())
            .unwrap();
        let expected = Matrix::from_rows(vec![vec![int(1) - &u, int(1)], vec![-u, int(1)]]);
        assert_eq!(ab, expected);
        let r = Word::parse_with("aBAbaBabAB", &names).unwrap();
        assert_eq!(rep.evaluate_word(&r).unwrap(), Matrix::identity(2));
        let bad = Word::parse_with("c", &['a', 'b', 'c']).unwrap();
        assert!(matches!(
            rep.evaluate_word(&bad),
            Err(Error::UnknownGenerator(_))
        ));
    }

    #[test]
    fn relation_check() {
        let k = field();
        let pres = Presentation::parse("gens: a b\nrel: aBAba = baBAb").unwrap();
        assert!(check_relations(&fig8_rep(&k), &pres).unwrap().is_empty());

        // u -> 1 breaks the relation.
        let a = ints(&[&[1, 1], &[0, 1]]);
        let b = ints(&[&[1, 0], &[-1, 1]]);
        let bad = RepSl2::new(vec![a, b], &['a', 'b']).unwrap();
        let failures = check_relations(&bad, &pres).unwrap();
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].index, 0);

        let unknot = Presentation::parse("gens: a").unwrap();
        assert!(check_relations(&RepSl2::<NfElement>::trivial(1), &unknot)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn non_sl2_rejected() {
        let a = ints(&[&[2, 0], &[0, 1]]);
        let err = RepSl2::new(vec![a], &['a']).unwrap_err();
        assert!(matches!(err, Error::NotSl2 { generator: 'a', .. }));
    }

    #[test]
    fn f64_symmetric_power_has_unit_determinant() {
        let m = Matrix::from_rows(vec![vec![2.0, 3.0], vec![1.0, 2.0]]);
        for n in 1..6 {
            let s = symmetric_power(&m, n);
            assert!((s.determinant() - 1.0).abs() < 1e-9, "n = {n}");
        }
    }
}
