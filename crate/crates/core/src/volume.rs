//! Ratios `A_n(1)` of invariant values and the volume estimates
//! `v_n = 4 pi log|A_n(1)| / n^2`.

use std::collections::BTreeMap;

use astro_float::{BigFloat, RoundingMode};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::complex::{bigfloat_from_decimal, bigfloat_to_f64, pi, working_precision};
use crate::field::{format_significant, NfElement};
use crate::group::Presentation;
use crate::invariant::{twisted_alexander, Column, TwistConfig, TwistedAlexander};
use crate::rep::RepSl2;
use crate::scalar::Scalar;

const RM: RoundingMode = RoundingMode::ToEven;

/// Smallest `n` for which `A_n` is reported.
pub const FIRST_RATIO: usize = 4;

/// Significant digits in table output.
pub const TABLE_DIGITS: usize = 6;

#[derive(Clone, Debug)]
pub struct VolumeRow {
    pub n: usize,
    pub ratio: NfElement,
    /// `|A_n(1)|` under the selected embedding.
    pub ratio_abs: BigFloat,
    /// `v_n`.
    pub estimate: BigFloat,
    /// `|v_n - reference|`, when a reference is supplied.
    pub gap: Option<BigFloat>,
}

/// Invariant data for one `n` of a sweep.
#[derive(Clone, Debug)]
pub struct InvariantRow {
    pub n: usize,
    pub invariant: TwistedAlexander<NfElement>,
    /// `None` only for `n = 1` when the denominator vanishes at `t = 1`.
    pub value_at_one: Option<NfElement>,
}

#[derive(Clone, Debug)]
pub struct VolumeReport {
    pub invariants: Vec<InvariantRow>,
    pub rows: Vec<VolumeRow>,
    pub reference: Option<BigFloat>,
    pub precision: usize,
}

#[derive(Clone, Debug)]
pub struct VolumeConfig<'a> {
    pub presentation: &'a Presentation,
    pub rep: &'a RepSl2<NfElement>,
    pub column: Column,
    /// Embedding precision in bits, at least 64.
    pub precision: usize,
    pub reference: Option<BigFloat>,
}

/// Decimal reference volume at the working precision of `precision`.
pub fn parse_reference(text: &str, precision: usize) -> Result<BigFloat> {
    bigfloat_from_decimal(text, working_precision(precision))
        .filter(|x| !x.is_inf())
        .ok_or_else(|| Error::BadReference(text.to_string()))
}

/// Base dimension of the ratio for `n`: 2 for even, 3 for odd.
pub fn base_dimension(n: usize) -> usize {
    if n.is_multiple_of(2) {
        2
    } else {
        3
    }
}

/// `A_n(1) = value(n) / value(base)`.
pub fn a_ratio(n: usize, values: &BTreeMap<usize, NfElement>) -> Result<NfElement> {
    assert!(n >= FIRST_RATIO, "A_n is defined for n >= {FIRST_RATIO}");
    let base = base_dimension(n);
    let missing = |k| Error::Internal(format!("value at t = 1 for n = {k} was not computed"));
    let num = values.get(&n).ok_or_else(|| missing(n))?;
    let den = values.get(&base).ok_or_else(|| missing(base))?;
    let inv = den.inv().ok_or(Error::ZeroBase { n: base })?;
    Ok(num.clone() * &inv)
}

/// `v_n = 4 pi log|ratio| / n^2` at `precision` bits.
pub fn volume_estimate(n: usize, ratio: &NfElement, precision: usize) -> Result<VolumeRow> {
    if precision < 64 {
        return Err(Error::Precision(precision));
    }
    if ratio.is_zero() {
        return Err(Error::Internal(format!("A_{n}(1) is exactly zero")));
    }
    let z = ratio.embed(precision)?;
    if z.is_zero() {
        return Err(Error::Internal(format!(
            "A_{n}(1) embeds to zero at {precision} bits"
        )));
    }
    let p = working_precision(precision);
    let ratio_abs = z.norm_sqr().sqrt(p, RM);
    let four_pi = pi(precision).mul(&BigFloat::from_i64(4, p), p, RM);
    let n_sq = BigFloat::from_i64((n * n) as i64, p);
    let estimate = four_pi.mul(&z.ln_abs(), p, RM).div(&n_sq, p, RM);
    Ok(VolumeRow {
        n,
        ratio: ratio.clone(),
        ratio_abs,
        estimate,
        gap: None,
    })
}

fn compute_invariant(cfg: &VolumeConfig<'_>, n: usize) -> Result<TwistedAlexander<NfElement>> {
    twisted_alexander(&TwistConfig::new(cfg.presentation, cfg.rep, n).with_column(cfg.column))
}

/// Invariants for every `n` in `n_min..=n_max` and estimates for
/// `n >= 4`. Dimensions run in parallel; rows come out sorted by `n`.
pub fn volume_table(cfg: &VolumeConfig<'_>, n_min: usize, n_max: usize) -> Result<VolumeReport> {
    assert!(n_min >= 1 && n_max >= n_min, "empty or invalid n range");
    if cfg.precision < 64 {
        return Err(Error::Precision(cfg.precision));
    }
    let mut needed: Vec<usize> = (n_min..=n_max).collect();
    for n in n_min.max(FIRST_RATIO)..=n_max {
        let b = base_dimension(n);
        if !needed.contains(&b) {
            needed.push(b);
        }
    }
    needed.sort_unstable();

    let computed: Vec<(usize, TwistedAlexander<NfElement>)> = needed
        .par_iter()
        .map(|&n| compute_invariant(cfg, n).map(|d| (n, d)))
        .collect::<Result<_>>()?;

    let mut values = BTreeMap::new();
    let mut invariants = Vec::new();
    for (n, d) in computed {
        let value = match d.value_at_one() {
            Ok(v) => Some(v),
            Err(_) if n == 1 => None,
            Err(e) => return Err(e),
        };
        if let Some(v) = &value {
            values.insert(n, v.clone());
        }
        if (n_min..=n_max).contains(&n) {
            invariants.push(InvariantRow {
                n,
                invariant: d,
                value_at_one: value,
            });
        }
    }

    let ratio_ns: Vec<usize> = (n_min.max(FIRST_RATIO)..=n_max).collect();
    let rows = ratio_ns
        .par_iter()
        .map(|&n| {
            let ratio = a_ratio(n, &values)?;
            let mut row = volume_estimate(n, &ratio, cfg.precision)?;
            if let Some(r) = &cfg.reference {
                let p = working_precision(cfg.precision);
                row.gap = Some(row.estimate.sub(r, p, RM).abs());
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(VolumeReport {
        invariants,
        rows,
        reference: cfg.reference.clone(),
        precision: cfg.precision,
    })
}

impl VolumeReport {
    /// Decimal digits carried by CSV output.
    pub fn full_digits(&self) -> usize {
        (self.precision as f64 * std::f64::consts::LOG10_2).floor() as usize
    }

    fn cells(&self, digits: usize) -> Vec<[String; 5]> {
        let mut out = Vec::new();
        for inv in &self.invariants {
            let value = inv
                .value_at_one
                .as_ref()
                .map_or_else(|| "-".to_string(), |v| v.to_coeff_string());
            let row = self.rows.iter().find(|r| r.n == inv.n);
            let fmt = |x: &BigFloat| format_significant(x, digits);
            out.push([
                inv.n.to_string(),
                value,
                row.map_or("-".into(), |r| fmt(&r.ratio_abs)),
                row.map_or("-".into(), |r| fmt(&r.estimate)),
                row.and_then(|r| r.gap.as_ref()).map_or("-".into(), fmt),
            ]);
        }
        out
    }

    /// Aligned text table with values rounded to six significant digits.
    pub fn to_table(&self) -> String {
        let header = ["n", "Delta_n(1)", "|A_n(1)|", "v_n", "gap"];
        let cells = self.cells(TABLE_DIGITS);
        let widths: Vec<usize> = (0..5)
            .map(|c| {
                cells
                    .iter()
                    .map(|r| r[c].len())
                    .chain([header[c].len()])
                    .max()
                    .unwrap()
            })
            .collect();
        let line = |r: &[&str]| {
            let mut s = String::new();
            for (c, cell) in r.iter().enumerate() {
                if c > 0 {
                    s.push_str("  ");
                }
                if c == 0 {
                    s.push_str(&format!("{cell:>w$}", w = widths[c]));
                } else {
                    s.push_str(&format!("{cell:<w$}", w = widths[c]));
                }
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line(&header);
        for r in &cells {
            out.push_str(&line(&r.iter().map(String::as_str).collect::<Vec<_>>()));
        }
        out
    }

    /// CSV with full-precision decimal strings; `-` cells become empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,delta_at_one,abs_a_at_one,v_n,gap\n");
        for r in self.cells(self.full_digits()) {
            let fields: Vec<String> = r
                .iter()
                .map(|c| match c.as_str() {
                    "-" => String::new(),
                    s if s.contains(',') => format!("\"{s}\""),
                    s => s.to_string(),
                })
                .collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    /// Least-squares fit of `v_n = V - c log(n) / n` over the reported
    /// rows, as `(V, c)`; `None` with fewer than two rows.
    pub fn experimental_fit(&self) -> Option<(f64, f64)> {
        if self.rows.len() < 2 {
            return None;
        }
        let pts: Vec<(f64, f64)> = self
            .rows
            .iter()
            .map(|r| {
                let n = r.n as f64;
                (-n.ln() / n, bigfloat_to_f64(&r.estimate))
            })
            .collect();
        let m = pts.len() as f64;
        let sx: f64 = pts.iter().map(|p| p.0).sum();
        let sy: f64 = pts.iter().map(|p| p.1).sum();
        let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
        let det = m * sxx - sx * sx;
        if det.abs() < f64::EPSILON {
            return None;
        }
        let c = (m * sxy - sx * sy) / det;
        let v = (sy - c * sx) / m;
        Some((v, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> NfElement {
        NfElement::rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn ratio_examples() {
        let mut values = BTreeMap::new();
        values.insert(2, q(-2, 1));
        values.insert(3, q(-3, 1));
        values.insert(4, q(4, 1));
        values.insert(5, q(28, 1));
        assert_eq!(a_ratio(4, &values).unwrap(), q(-2, 1));
        assert_eq!(a_ratio(5, &values).unwrap(), q(-28, 3));
        values.insert(2, q(0, 1));
        assert_eq!(a_ratio(4, &values), Err(Error::ZeroBase { n: 2 }));
    }

    #[test]
    fn estimate_examples() {
        let v4 = volume_estimate(4, &q(-2, 1), 256).unwrap();
        assert_eq!(format_significant(&v4.estimate, 6), "0.544397");
        assert_eq!(format_significant(&v4.ratio_abs, 6), "2.00000");
        let v5 = volume_estimate(5, &q(-28, 3), 256).unwrap();
        assert_eq!(format_significant(&v5.estimate, 6), "1.12273");
        let one = volume_estimate(7, &q(-1, 1), 128).unwrap();
        assert!(one.estimate.is_zero() || one.estimate.exponent().unwrap() < -100);
        assert_eq!(
            volume_estimate(4, &q(2, 1), 32).unwrap_err(),
            Error::Precision(32)
        );
    }

    #[test]
    fn fit_recovers_exact_model() {
        let rows = (4..12)
            .map(|n| {
                let v = 2.0 - 1.5 * (n as f64).ln() / n as f64;
                VolumeRow {
                    n,
                    ratio: q(1, 1),
                    ratio_abs: BigFloat::from_f64(1.0, 64),
                    estimate: bigfloat_from_decimal(&format!("{v:.17}"), 128).unwrap(),
                    gap: None,
                }
            })
            .collect();
        let report = VolumeReport {
            invariants: Vec::new(),
            rows,
            reference: None,
            precision: 128,
        };
        let (v, c) = report.experimental_fit().unwrap();
        assert!((v - 2.0).abs() < 1e-9 && (c - 1.5).abs() < 1e-9);
    }
}
