use num_bigint::BigInt;
use serde_json::{Map, Value};

use super::{ButcherTableau, Rational, RationalError, TableauError};

const KEYS: [&str; 9] = [
    "name",
    "description",
    "stage",
    "order",
    "extrapolation_order",
    "a",
    "b",
    "b_hat",
    "c",
];

/// Parse a method file. Input order is preserved.
pub fn parse_method_file(text: &[u8]) -> Result<Vec<ButcherTableau>, TableauError> {
    let doc: Value = serde_json::from_slice(text).map_err(|e| TableauError::Json {
        offset: byte_offset(text, e.line(), e.column()),
        message: e.to_string(),
    })?;
    let Value::Array(items) = doc else {
        return Err(TableauError::NotAnArray);
    };
    items
        .iter()
        .enumerate()
        .map(|(index, item)| parse_method(index, item))
        .collect()
}

// serde_json reports 1-based line and column (in bytes).
fn byte_offset(text: &[u8], line: usize, column: usize) -> usize {
    let mut offset = 0;
    for (n, l) in text.split_inclusive(|&b| b == b'\n').enumerate() {
        if n + 1 == line {
            return (offset + column.saturating_sub(1)).min(text.len());
        }
        offset += l.len();
    }
    text.len()
}

fn parse_method(index: usize, item: &Value) -> Result<ButcherTableau, TableauError> {
    let Value::Object(obj) = item else {
        return Err(TableauError::Schema {
            index,
            key: String::new(),
            message: "method entry is not a JSON object".into(),
        });
    };
    if let Some(extra) = obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(TableauError::Schema {
            index,
            key: extra.clone(),
            message: "unexpected key".into(),
        });
    }
    let get = |key: &'static str| obj.get(key).ok_or(TableauError::MissingKey { index, key });
    for key in KEYS {
        get(key)?;
    }

    let name = string_field(index, obj, "name")?;
    let description = string_field(index, obj, "description")?;
    let stages = positive_int(index, obj, "stage")? as usize;
    let order = positive_int(index, obj, "order")?;
    let embedded_order = positive_int(index, obj, "extrapolation_order")?;

    let rows = array_of_len(index, "a", get("a")?, stages)?;
    let mut a = Vec::with_capacity(stages);
    for (i, row) in rows.iter().enumerate() {
        let key = format!("a[{i}]");
        a.push(coefficient_row(index, &key, row, stages)?);
    }
    let b = coefficient_row(index, "b", get("b")?, stages)?;
    let b_hat = coefficient_row(index, "b_hat", get("b_hat")?, stages)?;
    let c = coefficient_row(index, "c", get("c")?, stages)?;

    ButcherTableau::new(name, description, order, embedded_order, a, b, b_hat, c).map_err(|e| {
        TableauError::Dimension {
            index,
            key: e.key,
            expected: e.expected,
            found: e.found,
        }
    })
}

fn string_field(index: usize, obj: &Map<String, Value>, key: &str) -> Result<String, TableauError> {
    match &obj[key] {
        Value::String(s) => Ok(s.clone()),
        _ => Err(TableauError::Schema {
            index,
            key: key.into(),
            message: "expected a string".into(),
        }),
    }
}

fn positive_int(index: usize, obj: &Map<String, Value>, key: &str) -> Result<u32, TableauError> {
    obj[key]
        .as_u64()
        .filter(|&v| v > 0 && v <= u32::MAX as u64)
        .map(|v| v as u32)
        .ok_or_else(|| TableauError::Schema {
            index,
            key: key.into(),
            message: "expected a positive integer".into(),
        })
}

fn array_of_len<'v>(
    index: usize,
    key: &str,
    value: &'v Value,
    len: usize,
) -> Result<&'v [Value], TableauError> {
    let Value::Array(items) = value else {
        return Err(TableauError::Schema {
            index,
            key: key.into(),
            message: "expected an array".into(),
        });
    };
    if items.len() != len {
        return Err(TableauError::Dimension {
            index,
            key: key.into(),
            expected: len,
            found: items.len(),
        });
    }
    Ok(items)
}

fn coefficient_row(
    index: usize,
    key: &str,
    value: &Value,
    len: usize,
) -> Result<Vec<Rational>, TableauError> {
    array_of_len(index, key, value, len)?
        .iter()
        .enumerate()
        .map(|(j, v)| coefficient(index, &format!("{key}[{j}]"), v))
        .collect()
}

fn coefficient(index: usize, key: &str, value: &Value) -> Result<Rational, TableauError> {
    let value_err = |source| TableauError::Value {
        index,
        key: key.into(),
        source,
    };
    match value {
        Value::String(s) => s.parse().map_err(value_err),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::new(BigInt::from(u), BigInt::from(1)).expect("unit denominator"))
            } else {
                // Binary floats would smuggle representation error into exact tables.
                Err(value_err(RationalError::Malformed(format!(
                    "{n} (non-integer numbers must be written as \"m/n\" strings)"
                ))))
            }
        }
        other => Err(TableauError::Schema {
            index,
            key: key.into(),
            message: format!("expected a coefficient string or integer, found {other}"),
        }),
    }
}
