mod common;

use common::{cofactor_determinant, eisenstein, laurent, poly_matrix, product};
use proptest::prelude::*;
use twistvol::field::parse_coefficient_vector;
use twistvol::{LaurentPoly, NfElement, PolyMatrix, RationalFunction};

fn swap_rows(m: &PolyMatrix<NfElement>, a: usize, b: usize) -> PolyMatrix<NfElement> {
    let mut out = m.clone();
    for j in 0..m.cols() {
        out.set(a, j, m.get(b, j).clone());
        out.set(b, j, m.get(a, j).clone());
    }
    out
}

fn nonzero_laurent(max_span: usize) -> impl Strategy<Value = LaurentPoly<NfElement>> {
    laurent(max_span).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinant_matches_cofactor_expansion(m in (1usize..=5).prop_flat_map(|n| poly_matrix(n, 2))) {
        prop_assert_eq!(m.determinant(), cofactor_determinant(&m));
    }

    #[test]
    fn determinant_alternates_under_row_swap(m in (2usize..=4).prop_flat_map(|n| poly_matrix(n, 2))) {
        let swapped = swap_rows(&m, 0, m.rows() - 1);
        prop_assert_eq!(swapped.determinant(), -m.determinant());
    }

    #[test]
    fn reduce_cancels_common_factor(a in nonzero_laurent(3), b in nonzero_laurent(3), c in nonzero_laurent(2)) {
        let plain = RationalFunction::reduce(a.clone(), b.clone()).unwrap();
        let padded = RationalFunction::reduce(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(&plain, &padded);
        let g = plain.numerator().gcd(plain.denominator());
        prop_assert!(g.is_one());
        prop_assert_eq!(plain.denominator().low_exponent(), Some(0));
    }

    #[test]
    fn order_at_one_factorization(p in nonzero_laurent(3), k in 0usize..=3) {
        let mut q = p.clone();
        for _ in 0..k {
            q = &q * &product(&[&[-1, 1]]);
        }
        let (order, cofactor) = q.divide_out_one();
        prop_assert!(order >= k);
        prop_assert!(!cofactor.value_at_one().is_zero());
        let mut rebuilt = cofactor.clone();
        for _ in 0..order {
            rebuilt = &rebuilt * &product(&[&[-1, 1]]);
        }
        prop_assert_eq!(rebuilt, q.clone());
        prop_assert_eq!(q.order_at_one().1, cofactor.value_at_one());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_laurent(3), b in nonzero_laurent(3), c in nonzero_laurent(2)) {
        let x = &a * &c;
        let y = &b * &c;
        let g = x.gcd(&y);
        prop_assert!(x.div_exact(&g).is_some());
        prop_assert!(y.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c.gcd(&c)).is_some());
    }

    #[test]
    fn term_string_round_trip(p in laurent(4)) {
        let k = eisenstein();
        let printed = p.to_term_string();
        let parsed = LaurentPoly::parse_terms(&printed, |s| parse_coefficient_vector(s, &k)).unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn rational_function_round_trip(a in nonzero_laurent(3), b in nonzero_laurent(3)) {
        let k = eisenstein();
        let f = RationalFunction::reduce(a, b).unwrap();
        let parsed = RationalFunction::parse_terms(&f.to_term_string(), |s| parse_coefficient_vector(s, &k)).unwrap();
        prop_assert_eq!(parsed, f);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in laurent(3), b in laurent(3), x in 2i64..=5) {
        let ab = &a * &b;
        let sum = &a + &b;
        prop_assert_eq!(ab.evaluate_int(x), a.evaluate_int(x) * &b.evaluate_int(x));
        prop_assert_eq!(sum.evaluate_int(x), a.evaluate_int(x) + &b.evaluate_int(x));
    }
}

#[test]
fn fixed_five_by_five_determinant() {
    let rows: Vec<Vec<LaurentPoly<NfElement>>> = (0..5)
        .map(|i| {
            (0..5)
                .map(|j| LaurentPoly::from_ints(&[(i * 5 + j) % 7 - 3, (i + 2 * j) % 3 - 1]))
                .collect()
        })
        .collect();
    let m = PolyMatrix::from_rows(rows);
    assert_eq!(m.determinant(), cofactor_determinant(&m));
}
