//! Wada's twisted Alexander invariant of a deficiency-one presentation.

use crate::error::{Error, Result};
use crate::group::{fox_derivative, GroupRingElement, Presentation, Word};
use crate::laurent::{LaurentPoly, PolyMatrix, RationalFunction, Unit};
use crate::matrix::Matrix;
use crate::rep::{symmetric_power, RepSl2};
use crate::scalar::Scalar;

/// Which block column of the Wada matrix is deleted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Column {
    /// First generator, in declaration order, with `det Phi(x - 1) != 0`.
    #[default]
    Auto,
    Generator(usize),
}

#[derive(Debug)]
pub struct TwistConfig<'a, F> {
    pub presentation: &'a Presentation,
    pub rep: &'a RepSl2<F>,
    pub n: usize,
    pub column: Column,
}

impl<F> Clone for TwistConfig<'_, F> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<F> Copy for TwistConfig<'_, F> {}

impl<'a, F: Scalar> TwistConfig<'a, F> {
    pub fn new(presentation: &'a Presentation, rep: &'a RepSl2<F>, n: usize) -> Self {
        assert!(n >= 1, "symmetric power dimension must be positive");
        TwistConfig {
            presentation,
            rep,
            n,
            column: Column::Auto,
        }
    }

    pub fn with_column(self, column: Column) -> Self {
        TwistConfig { column, ..self }
    }
}

/// Reduced invariant in unit-normalized form. `unit * value` is the
/// quotient as computed before normalization.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedAlexander<F> {
    pub n: usize,
    pub value: RationalFunction<F>,
    pub unit: Unit,
    /// Index of the generator whose block column was deleted.
    pub column: usize,
}

/// `t^alpha(w) * sigma_n(rho(w))` for a single word.
pub fn phi_word<F: Scalar>(w: &Word, cfg: &TwistConfig<'_, F>) -> Result<PolyMatrix<F>> {
    let m = symmetric_power(&cfg.rep.evaluate_word(w)?, cfg.n);
    Ok(PolyMatrix::from_scalar_matrix(
        &m,
        cfg.presentation.abelianize(w),
    ))
}

/// `sum c_w t^alpha(w) sigma_n(rho(w))`.
pub fn phi<F: Scalar>(e: &GroupRingElement, cfg: &TwistConfig<'_, F>) -> Result<PolyMatrix<F>> {
    let n = cfg.n;
    let mut acc: Vec<Vec<Vec<(i64, F)>>> = vec![vec![Vec::new(); n]; n];
    for (w, c) in e.terms() {
        let m = symmetric_power(&cfg.rep.evaluate_word(w)?, n);
        let e = cfg.presentation.abelianize(w);
        let c = F::from_i64(c);
        for (i, row) in acc.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let x = &m[(i, j)];
                if !x.is_zero() {
                    cell.push((e, x.clone() * &c));
                }
            }
        }
    }
    Ok(PolyMatrix::from_rows(
        acc.into_iter()
            .map(|row| row.into_iter().map(LaurentPoly::from_terms).collect())
            .collect(),
    ))
}

/// Block matrix `Phi(d r_i / d x_j)`: one block row per relator, one block
/// column per generator.
pub fn wada_matrix<F: Scalar>(cfg: &TwistConfig<'_, F>) -> Result<PolyMatrix<F>> {
    let n = cfg.n;
    let g = cfg.presentation.num_generators();
    let relators = cfg.presentation.relators();
    let mut out = PolyMatrix::zeros(n * relators.len(), n * g);
    for (i, r) in relators.iter().enumerate() {
        for j in 0..g {
            let block = phi(&fox_derivative(r, j), cfg)?;
            out.set_block(i * n, j * n, &block);
        }
    }
    Ok(out)
}

/// `det Phi(x_j - 1)`.
pub fn column_denominator<F: Scalar>(cfg: &TwistConfig<'_, F>, j: usize) -> Result<LaurentPoly<F>> {
    let x = GroupRingElement::from_word(Word::generator(j));
    let e = &x - &GroupRingElement::one();
    Ok(phi(&e, cfg)?.determinant())
}

/// Unreduced quotient `det M_j / det Phi(x_j - 1)`, or `None` when column
/// `j` is inadmissible.
pub fn column_quotient<F: Scalar>(
    cfg: &TwistConfig<'_, F>,
    wada: &PolyMatrix<F>,
    j: usize,
) -> Result<Option<(LaurentPoly<F>, LaurentPoly<F>)>> {
    let den = column_denominator(cfg, j)?;
    if den.is_zero() {
        return Ok(None);
    }
    let num = wada.without_columns(j * cfg.n, cfg.n).determinant();
    Ok(Some((num, den)))
}

fn finish<F: Scalar>(
    n: usize,
    column: usize,
    num: LaurentPoly<F>,
    den: LaurentPoly<F>,
) -> Result<TwistedAlexander<F>> {
    let reduced = RationalFunction::reduce(num, den)?;
    let (unit, value) = reduced.unit_normalized();
    Ok(TwistedAlexander {
        n,
        value,
        unit,
        column,
    })
}

pub fn twisted_alexander<F: Scalar>(cfg: &TwistConfig<'_, F>) -> Result<TwistedAlexander<F>> {
    let wada = wada_matrix(cfg)?;
    let g = cfg.presentation.num_generators();
    match cfg.column {
        Column::Generator(j) => {
            if j >= g {
                return Err(Error::UnknownGenerator(format!("#{j}")));
            }
            let (num, den) = column_quotient(cfg, &wada, j)?
                .ok_or(Error::InadmissibleColumn(cfg.presentation.generators()[j]))?;
            finish(cfg.n, j, num, den)
        }
        Column::Auto => {
            for j in 0..g {
                if let Some((num, den)) = column_quotient(cfg, &wada, j)? {
                    return finish(cfg.n, j, num, den);
                }
            }
            Err(Error::NoAdmissibleColumn)
        }
    }
}

/// Invariants for every admissible column.
pub fn all_columns<F: Scalar>(cfg: &TwistConfig<'_, F>) -> Result<Vec<TwistedAlexander<F>>> {
    let wada = wada_matrix(cfg)?;
    let mut out = Vec::new();
    for j in 0..cfg.presentation.num_generators() {
        if let Some((num, den)) = column_quotient(cfg, &wada, j)? {
            out.push(finish(cfg.n, j, num, den)?);
        }
    }
    Ok(out)
}

impl<F: Scalar> TwistedAlexander<F> {
    /// Order of vanishing of the numerator at `t = 1`.
    pub fn order_at_one(&self) -> usize {
        if self.value.is_zero() {
            return usize::MAX;
        }
        self.value.numerator().order_at_one().0
    }

    /// Value used in the ratios: `Delta(1)` for `n = 1` and even `n`, the
    /// cofactor value of the simple zero at `t = 1` for odd `n >= 3`.
    pub fn value_at_one(&self) -> Result<F> {
        let den = self.value.denominator().value_at_one();
        let den_inv = den.inv().ok_or(Error::DenominatorVanishes { n: self.n })?;
        let num = self.value.numerator();
        if self.n.is_multiple_of(2) || self.n == 1 || num.is_zero() {
            if num.is_zero() && self.n % 2 == 1 && self.n > 1 {
                return Err(Error::SimpleZeroViolation {
                    n: self.n,
                    order: usize::MAX,
                });
            }
            return Ok(num.value_at_one() * &den_inv);
        }
        let (order, cofactor) = num.order_at_one();
        if order != 1 {
            return Err(Error::SimpleZeroViolation { n: self.n, order });
        }
        Ok(cofactor * &den_inv)
    }

    /// Equality of invariants up to `+-t^k`.
    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        self.value.eq_up_to_unit(&other.value)
    }
}

/// `t * M - I` for a scalar matrix `M`.
pub fn t_minus_identity<F: Scalar>(m: &Matrix<F>) -> PolyMatrix<F> {
    let mut out = PolyMatrix::from_scalar_matrix(m, 1);
    for i in 0..m.rows() {
        let p = out.get(i, i) - &LaurentPoly::one();
        out.set(i, i, p);
    }
    out
}
