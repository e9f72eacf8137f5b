//! Embedded Runge–Kutta methods as exact rational Butcher tableaus.
//!
//! A method file is a JSON array of objects with the keys `name`,
//! `description`, `stage`, `order`, `extrapolation_order`, `a`, `b`, `b_hat`
//! and `c`. Coefficients are strings `"m"` / `"m/n"` or integer JSON numbers.

mod literal;
mod parse;
mod rational;
mod validate;

pub use literal::render_coefficient_literal;
pub use parse::parse_method_file;
pub use rational::{Rational, RationalError};
pub use validate::{
    validate_tableau, validate_tableau_strict, ValidationReport, Violation, Warning, WeightRow,
};

/// Method file shipped with the crate.
pub const SHIPPED_METHODS: &str = include_str!("../../methods/erk_methods.json");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("malformed JSON at byte {offset}: {message}")]
    Json { offset: usize, message: String },
    #[error("method file must be a JSON array of method objects")]
    NotAnArray,
    #[error("method {index}: missing key `{key}`")]
    MissingKey { index: usize, key: &'static str },
    #[error("method {index}: key `{key}`: {message}")]
    Schema {
        index: usize,
        key: String,
        message: String,
    },
    #[error("method {index}: `{key}` has length {found}, expected {expected}")]
    Dimension {
        index: usize,
        key: String,
        expected: usize,
        found: usize,
    },
    #[error("method {index}: `{key}`: {source}")]
    Value {
        index: usize,
        key: String,
        source: RationalError,
    },
}

/// Coefficients `a`, `b`, `b_hat` and `c` of an embedded explicit method with
/// main order `order` and embedded order `embedded_order`.
///
/// Construction only checks shapes; use [`validate_tableau`] for the
/// consistency conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ButcherTableau {
    name: String,
    description: String,
    order: u32,
    embedded_order: u32,
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    b_hat: Vec<Rational>,
    c: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("`{key}` has length {found}, expected {expected}")]
pub struct ShapeError {
    pub key: String,
    pub expected: usize,
    pub found: usize,
}

impl ButcherTableau {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        description: impl Into<String>,
        order: u32,
        embedded_order: u32,
        a: Vec<Vec<Rational>>,
        b: Vec<Rational>,
        b_hat: Vec<Rational>,
        c: Vec<Rational>,
    ) -> Result<Self, ShapeError> {
        let s = b.len();
        let check = |key: String, found: usize| {
            if found == s {
                Ok(())
            } else {
                Err(ShapeError {
                    key,
                    expected: s,
                    found,
                })
            }
        };
        if s == 0 {
            return Err(ShapeError {
                key: "b".into(),
                expected: 1,
                found: 0,
            });
        }
        check("a".into(), a.len())?;
        for (i, row) in a.iter().enumerate() {
            check(format!("a[{i}]"), row.len())?;
        }
        check("b_hat".into(), b_hat.len())?;
        check("c".into(), c.len())?;
        Ok(ButcherTableau {
            name: name.into(),
            description: description.into(),
            order,
            embedded_order,
            a,
            b,
            b_hat,
            c,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn stages(&self) -> usize {
        self.b.len()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn embedded_order(&self) -> u32 {
        self.embedded_order
    }

    /// `a[i][j]` with zero-based stage indices.
    pub fn a(&self) -> &[Vec<Rational>] {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    pub fn b_hat(&self) -> &[Rational] {
        &self.b_hat
    }

    pub fn c(&self) -> &[Rational] {
        &self.c
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_c(mut self, stage: usize, value: Rational) -> Self {
        self.c[stage] = value;
        self
    }

    pub fn with_a(mut self, row: usize, col: usize, value: Rational) -> Self {
        self.a[row][col] = value;
        self
    }

    pub fn with_b_hat(mut self, b_hat: Vec<Rational>) -> Self {
        assert_eq!(b_hat.len(), self.stages());
        self.b_hat = b_hat;
        self
    }
}

/// Tableau from the method-file listing used throughout the tests:
/// `a = [[0,0,0],[1,0,0],[1/4,1/4,0]]`, `b = [1/2,1/2,0]`,
/// `b_hat = [1/6,1/6,2/3]`, `c = [0,1,1/2]`.
pub fn sample_tableau() -> ButcherTableau {
    let r = |s: &str| s.parse::<Rational>().unwrap();
    let row = |v: [&str; 3]| v.iter().map(|s| r(s)).collect::<Vec<_>>();
    ButcherTableau::new(
        "Sample3",
        "three-stage sample method",
        2,
        3,
        vec![
            row(["0", "0", "0"]),
            row(["1", "0", "0"]),
            row(["1/4", "1/4", "0"]),
        ],
        row(["1/2", "1/2", "0"]),
        row(["1/6", "1/6", "2/3"]),
        row(["0", "1", "1/2"]),
    )
    .unwrap()
}

/// Every method in [`SHIPPED_METHODS`].
pub fn shipped_methods() -> Vec<ButcherTableau> {
    parse_method_file(SHIPPED_METHODS.as_bytes()).expect("shipped method file parses")
}
