//! Self-checks run against a job.

use std::fmt;

use crate::group::{fox_derivative, GroupRingElement, Word};
use crate::invariant::{all_columns, TwistConfig};
use crate::job::Job;
use crate::rep::check_relations;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn result(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        name: name.into(),
        status: if ok { Status::Pass } else { Status::Fail },
        detail: detail.into(),
    }
}

fn skipped(name: impl Into<String>, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        name: name.into(),
        status: Status::Skip,
        detail: detail.into(),
    }
}

/// `sum_j (d w / d x_j)(x_j - 1) == w - 1`.
pub fn fox_identity_holds(w: &Word, generators: usize) -> bool {
    let one = GroupRingElement::one();
    let mut sum = GroupRingElement::zero();
    for j in 0..generators {
        let x = &GroupRingElement::from_word(Word::generator(j)) - &one;
        sum = &sum + &(&fox_derivative(w, j) * &x);
    }
    sum == &GroupRingElement::from_word(w.clone()) - &one
}

/// Determinant, relation, Fox-identity, column-independence (n = 2, 3) and
/// parity checks. Invariant checks are skipped when the images do not
/// form a representation.
pub fn run_checks(job: &Job) -> Vec<CheckResult> {
    let pres = &job.presentation;
    let names = pres.generators();
    let mut out = Vec::new();

    let det_failures = job.rep.determinant_failures();
    out.push(result(
        "determinant one",
        det_failures.is_empty(),
        det_failures
            .iter()
            .map(|(g, d)| format!("det rho({}) = {}", names[*g], d.to_coeff_string()))
            .collect::<Vec<_>>()
            .join(", "),
    ));

    let rel_ok = match check_relations(&job.rep, pres) {
        Ok(failures) => {
            let detail = failures
                .iter()
                .map(|f| {
                    let (l, r) = &pres.relations()[f.index];
                    format!("{} != {}", pres.format_word(l), pres.format_word(r))
                })
                .collect::<Vec<_>>()
                .join(", ");
            out.push(result("relations", failures.is_empty(), detail));
            failures.is_empty()
        }
        Err(e) => {
            out.push(result("relations", false, e.to_string()));
            false
        }
    };

    let bad_fox: Vec<usize> = pres
        .relators()
        .iter()
        .enumerate()
        .filter(|(_, r)| !fox_identity_holds(r, pres.num_generators()))
        .map(|(i, _)| i)
        .collect();
    out.push(result(
        "Fox fundamental identity",
        bad_fox.is_empty(),
        if bad_fox.is_empty() {
            String::new()
        } else {
            format!("relators {bad_fox:?}")
        },
    ));

    for n in [2usize, 3] {
        let name = format!("column independence, n = {n}");
        let parity = format!("order at t = 1, n = {n}");
        if !(rel_ok && det_failures.is_empty()) {
            out.push(skipped(name, "images do not form a representation"));
            out.push(skipped(parity, "images do not form a representation"));
            continue;
        }
        let invariants = match all_columns(&TwistConfig::new(pres, &job.rep, n)) {
            Ok(v) => v,
            Err(e) => {
                out.push(result(name, false, e.to_string()));
                out.push(skipped(parity, "no invariant"));
                continue;
            }
        };
        let Some(first) = invariants.first() else {
            out.push(result(name, false, "no admissible column"));
            out.push(skipped(parity, "no invariant"));
            continue;
        };
        let agree = invariants.iter().all(|d| d.eq_up_to_unit(first));
        let columns: Vec<String> = invariants
            .iter()
            .map(|d| names[d.column].to_string())
            .collect();
        out.push(result(
            name,
            agree,
            format!("columns {}", columns.join(", ")),
        ));

        if first.value.is_zero() {
            out.push(result(parity, true, "invariant is zero"));
            continue;
        }
        let order = first.order_at_one();
        let expected = if n % 2 == 0 { 0 } else { 1 };
        out.push(result(
            parity,
            order == expected,
            format!("order {order}, expected {expected}"),
        ));
    }
    out
}

/// `true` iff no check failed.
pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.status != Status::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG8: &str = include_str!("../examples/figure-eight.job");

    #[test]
    fn figure_eight_passes() {
        let results = run_checks(&Job::parse(FIG8).unwrap());
        assert!(
            results.iter().all(|r| r.status == Status::Pass),
            "{results:#?}"
        );
        assert_eq!(results.len(), 7);
    }

    #[test]
    fn broken_relation_fails() {
        let job = Job::parse_unchecked(&FIG8.replace("[[0,-1],[1]]", "[[-1],[1]]")).unwrap();
        let results = run_checks(&job);
        assert!(!all_passed(&results));
        assert_eq!(results[1].status, Status::Fail);
        assert!(results.iter().skip(3).all(|r| r.status == Status::Skip));
    }

    #[test]
    fn trivial_relation_passes() {
        let job = Job::parse(&FIG8.replace("rel: aBAba = baBAb", "rel: ab = ab")).unwrap();
        let results = run_checks(&job);
        assert!(all_passed(&results), "{results:#?}");
    }

    #[test]
    fn fox_identity_on_examples() {
        let names = ['a', 'b'];
        for w in ["1", "a", "A", "aBAbaBabAB", "abAB"] {
            assert!(
                fox_identity_holds(&Word::parse_with(w, &names).unwrap(), 2),
                "{w}"
            );
        }
    }
}
