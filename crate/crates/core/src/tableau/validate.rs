use std::fmt;

use super::{ButcherTableau, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightRow {
    B,
    BHat,
}

impl fmt::Display for WeightRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightRow::B => "b",
            WeightRow::BHat => "b_hat",
        })
    }
}

/// A violated tableau invariant. Stage indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    InvalidName(String),
    NotStrictlyLowerTriangular {
        row: usize,
        col: usize,
        value: Rational,
    },
    FirstNodeNonzero(Rational),
    /// `residual = c^i - sum_j a^i_j`
    RowSum {
        stage: usize,
        residual: Rational,
    },
    /// `residual = sum_j w_j - 1`
    WeightSum {
        row: WeightRow,
        residual: Rational,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidName(name) => write!(f, "name `{name}` is not a valid identifier"),
            Violation::NotStrictlyLowerTriangular { row, col, value } => {
                write!(f, "not strictly lower-triangular at ({row},{col}), value {value}")
            }
            Violation::FirstNodeNonzero(c) => write!(f, "first node c^1 = {c}, expected 0"),
            Violation::RowSum { stage, residual } => {
                write!(f, "row-sum, stage {stage}, residual {residual}")
            }
            Violation::WeightSum { row, residual } => {
                write!(f, "weight sum of {row} differs from 1 by {residual}")
            }
        }
    }
}

/// Advisory findings from strict validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// `residual = sum_j w_j c^j - 1/2`
    SecondOrder { row: WeightRow, residual: Rational },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::SecondOrder { row, residual } => {
                let exact = residual.to_string();
                let shown = if exact.len() > 40 {
                    format!("{:.3e}", residual.to_f64())
                } else {
                    exact
                };
                write!(
                    f,
                    "second-order condition sum({row}_j c^j) = 1/2 violated, residual {shown}"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub method: String,
    pub violations: Vec<Violation>,
    pub warnings: Vec<Warning>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "{}: ok", self.method)?;
        } else {
            write!(f, "{}: {} violation(s)", self.method, self.violations.len())?;
            for v in &self.violations {
                write!(f, "\n  {v}")?;
            }
        }
        for w in &self.warnings {
            write!(f, "\n  warning: {w}")?;
        }
        Ok(())
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Check the structural invariants exactly. Order conditions beyond the
/// first are not checked.
pub fn validate_tableau(t: &ButcherTableau) -> ValidationReport {
    let mut violations = Vec::new();
    if !is_identifier(t.name()) {
        violations.push(Violation::InvalidName(t.name().to_string()));
    }
    for (i, row) in t.a().iter().enumerate() {
        for (j, value) in row.iter().enumerate().skip(i) {
            if !value.is_zero() {
                violations.push(Violation::NotStrictlyLowerTriangular {
                    row: i + 1,
                    col: j + 1,
                    value: value.clone(),
                });
            }
        }
    }
    if !t.c()[0].is_zero() {
        violations.push(Violation::FirstNodeNonzero(t.c()[0].clone()));
    }
    for (i, (row, c)) in t.a().iter().zip(t.c()).enumerate() {
        let residual = c - &row[..i].iter().sum::<Rational>();
        if !residual.is_zero() {
            violations.push(Violation::RowSum {
                stage: i + 1,
                residual,
            });
        }
    }
    for (row, weights) in [(WeightRow::B, t.b()), (WeightRow::BHat, t.b_hat())] {
        let residual = weights.iter().sum::<Rational>() - Rational::one();
        if !residual.is_zero() {
            violations.push(Violation::WeightSum { row, residual });
        }
    }
    ValidationReport {
        method: t.name().to_string(),
        violations,
        warnings: Vec::new(),
    }
}

/// [`validate_tableau`] plus the second-order condition for every weight row
/// whose declared order is at least two, reported as warnings.
pub fn validate_tableau_strict(t: &ButcherTableau) -> ValidationReport {
    let mut report = validate_tableau(t);
    let half = Rational::ratio(1, 2);
    for (row, weights, order) in [
        (WeightRow::B, t.b(), t.order()),
        (WeightRow::BHat, t.b_hat(), t.embedded_order()),
    ] {
        if order < 2 {
            continue;
        }
        let bc: Rational = weights.iter().zip(t.c()).map(|(w, c)| w * c).sum();
        let residual = bc - half.clone();
        if !residual.is_zero() {
            report.warnings.push(Warning::SecondOrder { row, residual });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{sample_tableau, shipped_methods};

    #[test]
    fn sample_is_ok() {
        let report = validate_tableau(&sample_tableau());
        assert!(report.is_ok(), "{report}");
        assert!(validate_tableau_strict(&sample_tableau()).warnings.is_empty());
    }

    #[test]
    fn wrong_node_reports_residual() {
        let t = sample_tableau().with_c(2, Rational::ratio(1, 3));
        let report = validate_tableau(&t);
        assert_eq!(
            report.violations,
            vec![Violation::RowSum {
                stage: 3,
                residual: Rational::ratio(-1, 6)
            }]
        );
        assert_eq!(
            report.violations[0].to_string(),
            "row-sum, stage 3, residual -1/6"
        );
    }

    #[test]
    fn diagonal_entry_is_flagged() {
        let t = sample_tableau().with_a(1, 1, Rational::one());
        let report = validate_tableau(&t);
        assert!(report.violations.iter().any(|v| v
            .to_string()
            .starts_with("not strictly lower-triangular at (2,2)")));
    }

    #[test]
    fn weight_sums_and_first_node() {
        let t = sample_tableau()
            .with_b_hat(vec![
                Rational::ratio(1, 6),
                Rational::ratio(1, 6),
                Rational::ratio(1, 3),
            ])
            .with_c(0, Rational::ratio(1, 5));
        let v = validate_tableau(&t).violations;
        assert!(v.contains(&Violation::FirstNodeNonzero(Rational::ratio(1, 5))));
        assert!(v.contains(&Violation::WeightSum {
            row: WeightRow::BHat,
            residual: Rational::ratio(-1, 3)
        }));
    }

    #[test]
    fn names_must_be_identifiers() {
        for bad in ["", "1abc", "a-b", "a b"] {
            let report = validate_tableau(&sample_tableau().with_name(bad));
            assert!(
                matches!(report.violations[0], Violation::InvalidName(_)),
                "{bad:?}"
            );
        }
        assert!(validate_tableau(&sample_tableau().with_name("Rk4_3b")).is_ok());
    }

    #[test]
    fn strict_flags_first_order_only_rows() {
        // b = (1, 0, 0) is consistent but only first order.
        let t = sample_tableau();
        let t = crate::tableau::ButcherTableau::new(
            "X",
            "",
            2,
            3,
            t.a().to_vec(),
            vec![Rational::one(), Rational::zero(), Rational::zero()],
            t.b_hat().to_vec(),
            t.c().to_vec(),
        )
        .unwrap();
        let report = validate_tableau_strict(&t);
        assert!(report.is_ok());
        assert_eq!(
            report.warnings,
            vec![Warning::SecondOrder {
                row: WeightRow::B,
                residual: Rational::ratio(-1, 2)
            }]
        );
    }

    #[test]
    fn shipped_methods_validate_strictly() {
        for t in shipped_methods() {
            let report = validate_tableau_strict(&t);
            assert!(report.is_ok(), "{report}");
            // DOPRI8 carries rational approximations of irrational coefficients.
            if t.name() == "DOPRI8" {
                for w in &report.warnings {
                    let Warning::SecondOrder { residual, .. } = w;
                    assert!(residual.to_f64().abs() < 1e-17, "{report}");
                }
            } else {
                assert!(report.warnings.is_empty(), "{report}");
            }
        }
    }

    #[test]
    fn validation_is_pure() {
        for t in shipped_methods() {
            assert_eq!(validate_tableau(&t), validate_tableau(&t));
        }
    }
}
