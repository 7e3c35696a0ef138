mod common;

use common::{eisenstein_element, rational_entry, sl2, small_rational};
use num_traits::{One, Zero};
use proptest::prelude::*;
use twistvol::{symmetric_power, Matrix, NfElement, Scalar};

/// `sum_r s[r][j] x^(n-1-r) y^r` against `(a x + b y)^(n-1-j) (c x + d y)^j`
/// with `[[a, b], [c, d]] = m^-1`, at a single point.
fn action_matches_at(
    m: &Matrix<NfElement>,
    s: &Matrix<NfElement>,
    x: &NfElement,
    y: &NfElement,
) -> bool {
    let n = s.rows();
    let inv = m.inverse().unwrap();
    let u = inv[(0, 0)].clone() * x + &(inv[(0, 1)].clone() * y);
    let v = inv[(1, 0)].clone() * x + &(inv[(1, 1)].clone() * y);
    (0..n).all(|j| {
        let lhs = (0..n).fold(NfElement::zero(), |acc, r| {
            acc + &(s[(r, j)].clone() * &x.pow((n - 1 - r) as u32) * &y.pow(r as u32))
        });
        lhs == u.pow((n - 1 - j) as u32) * &v.pow(j as u32)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplicative_over_q(a in sl2(rational_entry()), b in sl2(rational_entry()), n in 1usize..=8) {
        let ab = &a * &b;
        prop_assert_eq!(symmetric_power(&ab, n), &symmetric_power(&a, n) * &symmetric_power(&b, n));
    }

    #[test]
    fn multiplicative_over_eisenstein(a in sl2(eisenstein_element()), b in sl2(eisenstein_element()), n in 1usize..=6) {
        let ab = &a * &b;
        prop_assert_eq!(symmetric_power(&ab, n), &symmetric_power(&a, n) * &symmetric_power(&b, n));
    }

    #[test]
    fn determinant_one_and_inverse(m in sl2(eisenstein_element()), n in 1usize..=8) {
        let s = symmetric_power(&m, n);
        prop_assert!(s.determinant().is_one());
        let inv = m.inverse().unwrap();
        prop_assert_eq!(symmetric_power(&inv, n), s.inverse().unwrap());
        prop_assert_eq!(&s * &symmetric_power(&inv, n), Matrix::identity(n));
    }

    #[test]
    fn matches_polynomial_action(m in sl2(eisenstein_element()), n in 1usize..=7, x in eisenstein_element(), y in eisenstein_element()) {
        prop_assert!(action_matches_at(&m, &symmetric_power(&m, n), &x, &y));
    }

    #[test]
    fn two_dimensional_power_is_inverse_transpose(m in sl2(eisenstein_element())) {
        prop_assert_eq!(symmetric_power(&m, 2), m.inverse().unwrap().transpose());
    }

    #[test]
    fn diagonal_trace_is_geometric_sum(l in small_rational().prop_filter("nonzero", |q| !q.is_zero()), n in 1usize..=8) {
        let l = NfElement::rational(l);
        let li = l.inv().unwrap();
        let m = Matrix::from_rows(vec![vec![l.clone(), NfElement::zero()], vec![NfElement::zero(), li.clone()]]);
        // sum_k l^(n-1-2k), written as sum_k l^(n-1-k) l^-k
        let expected = (0..n).fold(NfElement::zero(), |acc, k| acc + &(l.pow((n - 1 - k) as u32) * &li.pow(k as u32)));
        prop_assert_eq!(symmetric_power(&m, n).trace(), expected);
    }
}

#[test]
fn identity_and_first_power() {
    let id = Matrix::<NfElement>::identity(2);
    for n in 1..=6 {
        assert_eq!(symmetric_power(&id, n), Matrix::identity(n));
    }
    let k = common::eisenstein();
    let m = Matrix::from_rows(vec![
        vec![NfElement::one(), NfElement::zero()],
        vec![-k.generator(), NfElement::one()],
    ]);
    assert_eq!(symmetric_power(&m, 1), Matrix::identity(1));
}
