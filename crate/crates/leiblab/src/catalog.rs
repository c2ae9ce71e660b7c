//! Built-in fixture algebras and the on-disk JSON format for algebras and
//! isoclinism witnesses.
//!
//! Files use 1-based basis indices (matching the `a_1..a_n` naming used in
//! reports) and write coefficients as decimal or `num/den` strings so that
//! exactness survives the round trip.

use crate::algebra::{build_algebra, Algebra, BracketSpec};
use crate::error::{Error, Result};
use crate::iso::IsoclinismWitness;
use crate::mat::{Mat, Vector};
use crate::scalar::{parse_field, FieldSpec, Scalar};
use serde_json::{json, Value};

/// Names accepted by [`fixture`]; `L2a` additionally accepts a rational
/// parameter as `L2a(num)` or `L2a(num/den)`.
pub const FIXTURE_NAMES: [&str; 7] = ["LEF", "L2c", "L2a", "L2f", "R21", "R2", "L3s"];

fn q() -> FieldSpec {
    FieldSpec::Rational
}

fn c(v: i64) -> Scalar {
    q().from_i64(v)
}

/// The built-in example algebras, all over the rationals:
/// - `LEF`: the 2-dimensional Lie algebra [e, f] = e.
/// - `L2c`: [a2,a2] = [a3,a3] = a1 (Lie-stem, class 2).
/// - `L2a(γ)`: [a2,a2] = γ·a1, [a3,a2] = a1, [a3,a3] = a1 (default γ = 1).
/// - `L2f`: [a2,a3] = a2, [a3,a2] = −a2, [a3,a3] = a1.
/// - `R21`: [a1,a2] = a4, [a2,a1] = −a4, [a3,a3] = a4.
/// - `R2`: [a1,a4] = a1, [a2,a4] = a2 (not Lie-nilpotent).
/// - `L3s`: [a3,a3] = a1 (Lie-filiform, dimension 3).
pub fn fixture(name: &str) -> Result<Algebra> {
    let trimmed = name.trim();
    if let Some(rest) = trimmed.strip_prefix("L2a(") {
        let Some(param) = rest.strip_suffix(')') else {
            return Err(Error::UnknownFixture(name.to_string()));
        };
        let gamma = q().parse_scalar(param)?;
        return l2a(gamma);
    }
    match trimmed {
        "LEF" => build_algebra(
            q(),
            2,
            &[(0, 1, vec![(0, c(1))]), (1, 0, vec![(0, c(-1))])],
        )?
        .with_labels(vec!["e".into(), "f".into()]),
        "L2c" => build_algebra(
            q(),
            3,
            &[(1, 1, vec![(0, c(1))]), (2, 2, vec![(0, c(1))])],
        ),
        "L2a" => l2a(c(1)),
        "L2f" => build_algebra(
            q(),
            3,
            &[
                (1, 2, vec![(1, c(1))]),
                (2, 1, vec![(1, c(-1))]),
                (2, 2, vec![(0, c(1))]),
            ],
        ),
        "R21" => build_algebra(
            q(),
            4,
            &[
                (0, 1, vec![(3, c(1))]),
                (1, 0, vec![(3, c(-1))]),
                (2, 2, vec![(3, c(1))]),
            ],
        ),
        "R2" => build_algebra(
            q(),
            4,
            &[(0, 3, vec![(0, c(1))]), (1, 3, vec![(1, c(1))])],
        ),
        "L3s" => build_algebra(q(), 3, &[(2, 2, vec![(0, c(1))])]),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

fn l2a(gamma: Scalar) -> Result<Algebra> {
    build_algebra(
        q(),
        3,
        &[
            (1, 1, vec![(0, gamma)]),
            (2, 1, vec![(0, c(1))]),
            (2, 2, vec![(0, c(1))]),
        ],
    )
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::ParseError(msg.into())
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|u| u as usize)
        .ok_or_else(|| parse_err(format!("{what} must be a non-negative integer, got {v}")))
}

/// A 1-based index from a file, checked against the dimension.
fn as_index(v: &Value, dim: usize, what: &str) -> Result<usize> {
    let idx = as_usize(v, what)?;
    if idx == 0 || idx > dim {
        return Err(parse_err(format!(
            "{what} {idx} out of range 1..={dim}"
        )));
    }
    Ok(idx - 1)
}

fn as_coeff(field: FieldSpec, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse_scalar(s),
        Value::Number(n) => n
            .as_i64()
            .map(|i| field.from_i64(i))
            .ok_or_else(|| parse_err(format!("coefficient {n} is not an exact integer"))),
        other => Err(parse_err(format!(
            "coefficient must be a string or integer, got {other}"
        ))),
    }
}

/// Parses the JSON algebra format:
/// `{"dim": n, "field": "rational"|"gf(p)", "basis": [names],
///   "brackets": [[i, j, [[k, "coeff"], ...]], ...]}`
/// with 1-based indices. Unlisted pairs bracket to zero; repeated entries
/// accumulate additively.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
    let obj = root
        .as_object()
        .ok_or_else(|| parse_err("top level must be a JSON object"))?;
    let dim = as_usize(
        obj.get("dim").ok_or_else(|| parse_err("missing \"dim\""))?,
        "\"dim\"",
    )?;
    let field_str = obj
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| parse_err("missing or non-string \"field\""))?;
    let field = parse_field(field_str)?;
    let mut brackets: Vec<BracketSpec> = Vec::new();
    if let Some(rows) = obj.get("brackets") {
        let rows = rows
            .as_array()
            .ok_or_else(|| parse_err("\"brackets\" must be an array"))?;
        for (row_no, row) in rows.iter().enumerate() {
            let parts = row.as_array().filter(|p| p.len() == 3).ok_or_else(|| {
                parse_err(format!(
                    "bracket row {} must be [i, j, [[k, coeff], ...]]",
                    row_no + 1
                ))
            })?;
            let i = as_index(&parts[0], dim, "bracket index")?;
            let j = as_index(&parts[1], dim, "bracket index")?;
            let term_rows = parts[2]
                .as_array()
                .ok_or_else(|| parse_err("bracket terms must be an array"))?;
            let mut terms = Vec::with_capacity(term_rows.len());
            for term in term_rows {
                let pair = term.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                    parse_err(format!("term in bracket row {} must be [k, coeff]", row_no + 1))
                })?;
                let k = as_index(&pair[0], dim, "term index")?;
                terms.push((k, as_coeff(field, &pair[1])?));
            }
            brackets.push((i, j, terms));
        }
    }
    let mut algebra = build_algebra(field, dim, &brackets)?;
    if let Some(basis) = obj.get("basis") {
        let names = basis
            .as_array()
            .ok_or_else(|| parse_err("\"basis\" must be an array of strings"))?;
        let mut labels = Vec::with_capacity(names.len());
        for name in names {
            labels.push(
                name.as_str()
                    .ok_or_else(|| parse_err("basis names must be strings"))?
                    .to_string(),
            );
        }
        if labels.len() != dim {
            return Err(parse_err(format!(
                "\"basis\" lists {} names for dimension {dim}",
                labels.len()
            )));
        }
        algebra = algebra.with_labels(labels)?;
    }
    Ok(algebra)
}

/// Serializes an algebra into the file format. Keys are emitted sorted and
/// bracket rows sorted by (i, j), so output is byte-stable; parsing the
/// result reproduces the algebra exactly.
pub fn serialize_algebra(a: &Algebra) -> String {
    let n = a.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let col = a.bracket_basis(i, j);
            let terms: Vec<Value> = col
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.is_zero())
                .map(|(k, s)| json!([k + 1, s.to_string()]))
                .collect();
            if !terms.is_empty() {
                rows.push(json!([i + 1, j + 1, terms]));
            }
        }
    }
    let doc = json!({
        "dim": n,
        "field": a.field().to_string(),
        "basis": a.labels(),
        "brackets": rows,
    });
    serde_json::to_string_pretty(&doc).expect("JSON document serializes")
}

fn parse_matrix(field: FieldSpec, v: &Value, what: &str) -> Result<Mat> {
    let rows = v
        .as_array()
        .ok_or_else(|| parse_err(format!("{what} must be an array of rows")))?;
    let mut out: Vec<Vector> = Vec::with_capacity(rows.len());
    let mut width: Option<usize> = None;
    for row in rows {
        let entries = row
            .as_array()
            .ok_or_else(|| parse_err(format!("{what} rows must be arrays")))?;
        match width {
            None => width = Some(entries.len()),
            Some(w) if w != entries.len() => {
                return Err(parse_err(format!("{what} rows have unequal lengths")))
            }
            _ => {}
        }
        let mut parsed = Vec::with_capacity(entries.len());
        for e in entries {
            parsed.push(as_coeff(field, e)?);
        }
        out.push(parsed);
    }
    Mat::from_rows(field, width.unwrap_or(0), out)
}

/// Parses a witness document `{"eta": [[...]], "xi": [[...]]}` over the
/// given field (coefficients in the same syntax as algebra files).
pub fn parse_witness(field: FieldSpec, text: &str) -> Result<IsoclinismWitness> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
    let obj = root
        .as_object()
        .ok_or_else(|| parse_err("top level must be a JSON object"))?;
    let eta = parse_matrix(
        field,
        obj.get("eta").ok_or_else(|| parse_err("missing \"eta\""))?,
        "\"eta\"",
    )?;
    let xi = parse_matrix(
        field,
        obj.get("xi").ok_or_else(|| parse_err("missing \"xi\""))?,
        "\"xi\"",
    )?;
    Ok(IsoclinismWitness { eta, xi })
}

fn matrix_value(m: &Mat) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| {
            let entries: Vec<Value> = m
                .row(r)
                .iter()
                .map(|s| Value::String(s.to_string()))
                .collect();
            Value::Array(entries)
        })
        .collect();
    Value::Array(rows)
}

pub fn serialize_witness(w: &IsoclinismWitness) -> String {
    let doc = json!({
        "eta": matrix_value(&w.eta),
        "xi": matrix_value(&w.xi),
    });
    serde_json::to_string_pretty(&doc).expect("JSON document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build_and_have_expected_dims() {
        let dims = [
            ("LEF", 2),
            ("L2c", 3),
            ("L2a", 3),
            ("L2f", 3),
            ("R21", 4),
            ("R2", 4),
            ("L3s", 3),
        ];
        for (name, d) in dims {
            assert_eq!(fixture(name).unwrap().dim(), d, "{name}");
        }
        assert!(matches!(
            fixture("nope"),
            Err(Error::UnknownFixture(_))
        ));
    }

    #[test]
    fn l2a_parameter_parses() {
        let a = fixture("L2a(2/3)").unwrap();
        assert_eq!(a.c(1, 1, 0), &q().parse_scalar("2/3").unwrap());
        assert!(fixture("L2a(").is_err());
    }

    #[test]
    fn round_trip_all_fixtures() {
        for name in FIXTURE_NAMES {
            let a = fixture(name).unwrap();
            let text = serialize_algebra(&a);
            let b = parse_algebra(&text).unwrap();
            assert_eq!(a, b, "{name}");
            assert_eq!(a.labels(), b.labels(), "{name}");
            assert_eq!(text, serialize_algebra(&b), "{name}");
        }
    }

    #[test]
    fn gf2_file_rejected_as_char2() {
        let text = r#"{"dim": 1, "field": "gf(2)", "brackets": []}"#;
        assert!(matches!(parse_algebra(text), Err(Error::Char2Field)));
    }

    #[test]
    fn bad_index_is_parse_error() {
        let text = r#"{"dim": 3, "field": "rational",
                       "brackets": [[1, 5, [[1, "1"]]]]}"#;
        assert!(matches!(parse_algebra(text), Err(Error::ParseError(_))));
        let zero = r#"{"dim": 3, "field": "rational",
                       "brackets": [[0, 1, [[1, "1"]]]]}"#;
        assert!(matches!(parse_algebra(zero), Err(Error::ParseError(_))));
    }

    #[test]
    fn witness_round_trip() {
        let a = fixture("L2c").unwrap();
        let w = crate::iso::identity_witness(&a);
        let text = serialize_witness(&w);
        let back = parse_witness(a.field(), &text).unwrap();
        assert_eq!(w.eta, back.eta);
        assert_eq!(w.xi, back.xi);
    }
}
