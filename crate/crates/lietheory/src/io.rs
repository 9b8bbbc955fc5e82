//! File formats and input parsing.
//!
//! Algebras, representations, towers, and derivations are stored as JSON
//! with every rational written as a string `"p/q"` (or `"p"`, or a plain
//! JSON integer). Parsing walks the JSON value tree by hand so that every
//! error names the field path it came from, and every loader validates
//! eagerly: an algebra file that breaks the Jacobi identity or a
//! representation file that is not a homomorphism is rejected at load
//! time, not deep inside an analysis.
//!
//! The formats:
//!
//! * algebra: `{"dim": 3, "basis": ["e","h","f"], "brackets":
//!   [[i, j, [[k, "c"], ...]], ...]}` listing `[e_i, e_j]` for `i < j`;
//!   the antisymmetric completion is implicit.
//! * representation: `{"algebra": <object or file path>, "module_dim": m,
//!   "operators": [matrix, ...]}` with one matrix per basis element.
//! * tower: `{"levels": [<algebra object or file path>, ...],
//!   "embeddings": [matrix, ...]}`.
//! * derivation: `{"per_level": [matrix, ...]}`.
//!
//! Matrices are row-major arrays of rational strings.

use std::path::Path;

use num_traits::Zero;
use serde_json::{Map, Value};
use thiserror::Error;

use crate::exactla::{format_rational, parse_rational, QMatrix, Rat, Subspace};
use crate::fitting_weights::{RepError, Representation};
use crate::liecore::{AlgebraError, LieAlgebra, ValidationReport};
use crate::tower::{validate_tower, Tower, TowerDerivation, TowerValidation};

/// Errors from reading, parsing, or eagerly validating input files.
#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path} is not valid JSON: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("{field}: {message}")]
    Schema { field: String, message: String },
    #[error(
        "algebra bracket table is not a Lie algebra: {} antisymmetry and {} Jacobi failures",
        .report.antisymmetry_failures.len(),
        .report.jacobi_failures.len()
    )]
    InvalidAlgebra { report: ValidationReport },
    #[error("operators are not a homomorphism at {} basis pairs, first {:?}", .pairs.len(), .pairs.first())]
    NotHomomorphism { pairs: Vec<(usize, usize)> },
    #[error("tower failed validation: {report:?}")]
    InvalidTower { report: TowerValidation },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Representation(#[from] RepError),
}

fn schema(field: &str, message: impl Into<String>) -> IoError {
    IoError::Schema {
        field: field.to_string(),
        message: message.into(),
    }
}

fn as_object<'a>(value: &'a Value, field: &str) -> Result<&'a Map<String, Value>, IoError> {
    value
        .as_object()
        .ok_or_else(|| schema(field, "expected an object"))
}

fn as_array<'a>(value: &'a Value, field: &str) -> Result<&'a Vec<Value>, IoError> {
    value
        .as_array()
        .ok_or_else(|| schema(field, "expected an array"))
}

fn as_index(value: &Value, field: &str) -> Result<usize, IoError> {
    value
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| schema(field, "expected a nonnegative integer"))
}

fn get<'a>(
    object: &'a Map<String, Value>,
    key: &str,
    parent: &str,
) -> Result<&'a Value, IoError> {
    object.get(key).ok_or_else(|| {
        schema(
            &join(parent, key),
            "missing required field",
        )
    })
}

fn join(parent: &str, key: &str) -> String {
    if parent.is_empty() {
        key.to_string()
    } else {
        format!("{parent}.{key}")
    }
}

/// One rational from a JSON string like `"3/4"` or `"-2"`, or a plain
/// JSON integer.
pub fn rational_from_value(value: &Value, field: &str) -> Result<Rat, IoError> {
    match value {
        Value::String(s) => parse_rational(s).map_err(|e| schema(field, e.to_string())),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rat::from_integer(i.into()))
            .ok_or_else(|| schema(field, "numbers must be integers; write fractions as strings")),
        _ => Err(schema(field, "expected a rational string or an integer")),
    }
}

/// A row-major matrix of rationals.
pub fn matrix_from_value(value: &Value, field: &str) -> Result<QMatrix, IoError> {
    let rows = as_array(value, field)?;
    let mut parsed: Vec<Vec<Rat>> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row_field = format!("{field}[{i}]");
        let entries = as_array(row, &row_field)?;
        let mut out = Vec::with_capacity(entries.len());
        for (j, entry) in entries.iter().enumerate() {
            out.push(rational_from_value(entry, &format!("{row_field}[{j}]"))?);
        }
        parsed.push(out);
    }
    QMatrix::from_rows(parsed).map_err(|e| schema(field, e.to_string()))
}

/// An algebra from its JSON object form; validates the bracket table.
pub fn algebra_from_value(value: &Value, field: &str) -> Result<LieAlgebra, IoError> {
    let object = as_object(value, field)?;
    let dim = as_index(get(object, "dim", field)?, &join(field, "dim"))?;

    let labels = match object.get("basis") {
        None => (0..dim).map(|i| format!("e{i}")).collect(),
        Some(value) => {
            let field = join(field, "basis");
            let entries = as_array(value, &field)?;
            if entries.len() != dim {
                return Err(schema(
                    &field,
                    format!("{} labels for dimension {}", entries.len(), dim),
                ));
            }
            entries
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    v.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| schema(&format!("{field}[{i}]"), "expected a string"))
                })
                .collect::<Result<Vec<String>, IoError>>()?
        }
    };

    let brackets_field = join(field, "brackets");
    let mut brackets = Vec::new();
    for (b, entry) in as_array(get(object, "brackets", field)?, &brackets_field)?
        .iter()
        .enumerate()
    {
        let entry_field = format!("{brackets_field}[{b}]");
        let triple = as_array(entry, &entry_field)?;
        if triple.len() != 3 {
            return Err(schema(&entry_field, "expected [i, j, [[k, coeff], ...]]"));
        }
        let i = as_index(&triple[0], &format!("{entry_field}[0]"))?;
        let j = as_index(&triple[1], &format!("{entry_field}[1]"))?;
        let terms_field = format!("{entry_field}[2]");
        let mut terms = Vec::new();
        for (t, term) in as_array(&triple[2], &terms_field)?.iter().enumerate() {
            let term_field = format!("{terms_field}[{t}]");
            let pair = as_array(term, &term_field)?;
            if pair.len() != 2 {
                return Err(schema(&term_field, "expected [k, coeff]"));
            }
            let k = as_index(&pair[0], &format!("{term_field}[0]"))?;
            let c = rational_from_value(&pair[1], &format!("{term_field}[1]"))?;
            terms.push((k, c));
        }
        brackets.push((i, j, terms));
    }

    let algebra = LieAlgebra::from_sparse_brackets(labels, &brackets)?;
    let report = algebra.validate();
    if !report.is_valid() {
        return Err(IoError::InvalidAlgebra { report });
    }
    Ok(algebra)
}

/// An algebra given either inline or as a path to another file,
/// resolved relative to `base_dir`.
fn algebra_from_value_or_ref(
    value: &Value,
    field: &str,
    base_dir: &Path,
) -> Result<LieAlgebra, IoError> {
    match value {
        Value::String(path) => load_algebra(base_dir.join(path)),
        _ => algebra_from_value(value, field),
    }
}

fn read_json(path: &Path) -> Result<Value, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| IoError::Json {
        path: path.display().to_string(),
        source,
    })
}

/// Loads and validates an algebra file.
pub fn load_algebra(path: impl AsRef<Path>) -> Result<LieAlgebra, IoError> {
    algebra_from_value(&read_json(path.as_ref())?, "")
}

/// A representation from its JSON object form. `base_dir` resolves an
/// algebra given as a file path; the homomorphism property is checked.
pub fn representation_from_value(
    value: &Value,
    field: &str,
    base_dir: &Path,
) -> Result<Representation, IoError> {
    let object = as_object(value, field)?;
    let algebra = algebra_from_value_or_ref(
        get(object, "algebra", field)?,
        &join(field, "algebra"),
        base_dir,
    )?;
    let module_dim = as_index(get(object, "module_dim", field)?, &join(field, "module_dim"))?;
    let operators_field = join(field, "operators");
    let operators = as_array(get(object, "operators", field)?, &operators_field)?
        .iter()
        .enumerate()
        .map(|(i, v)| matrix_from_value(v, &format!("{operators_field}[{i}]")))
        .collect::<Result<Vec<QMatrix>, IoError>>()?;
    let rep = Representation::new(algebra, module_dim, operators)?;
    let pairs = rep.homomorphism_failures();
    if !pairs.is_empty() {
        return Err(IoError::NotHomomorphism { pairs });
    }
    Ok(rep)
}

/// Loads and validates a representation file.
pub fn load_representation(path: impl AsRef<Path>) -> Result<Representation, IoError> {
    let path = path.as_ref();
    let base_dir = path.parent().unwrap_or_else(|| Path::new("."));
    representation_from_value(&read_json(path)?, "", base_dir)
}

/// A tower from its JSON object form; runs tower validation eagerly.
pub fn tower_from_value(value: &Value, field: &str, base_dir: &Path) -> Result<Tower, IoError> {
    let object = as_object(value, field)?;
    let levels_field = join(field, "levels");
    let levels = as_array(get(object, "levels", field)?, &levels_field)?
        .iter()
        .enumerate()
        .map(|(i, v)| algebra_from_value_or_ref(v, &format!("{levels_field}[{i}]"), base_dir))
        .collect::<Result<Vec<LieAlgebra>, IoError>>()?;
    let embeddings_field = join(field, "embeddings");
    let embeddings = as_array(get(object, "embeddings", field)?, &embeddings_field)?
        .iter()
        .enumerate()
        .map(|(i, v)| matrix_from_value(v, &format!("{embeddings_field}[{i}]")))
        .collect::<Result<Vec<QMatrix>, IoError>>()?;
    let tower = Tower { levels, embeddings };
    let report = validate_tower(&tower);
    if !report.is_valid() {
        return Err(IoError::InvalidTower { report });
    }
    Ok(tower)
}

/// Loads and validates a tower file.
pub fn load_tower(path: impl AsRef<Path>) -> Result<Tower, IoError> {
    let path = path.as_ref();
    let base_dir = path.parent().unwrap_or_else(|| Path::new("."));
    tower_from_value(&read_json(path)?, "", base_dir)
}

/// A tower derivation from its JSON object form. Shape and derivation
/// checks happen against a specific tower at analysis time.
pub fn derivation_from_value(value: &Value, field: &str) -> Result<TowerDerivation, IoError> {
    let object = as_object(value, field)?;
    let per_level_field = join(field, "per_level");
    let per_level = as_array(get(object, "per_level", field)?, &per_level_field)?
        .iter()
        .enumerate()
        .map(|(i, v)| matrix_from_value(v, &format!("{per_level_field}[{i}]")))
        .collect::<Result<Vec<QMatrix>, IoError>>()?;
    Ok(TowerDerivation { per_level })
}

/// Loads a derivation file.
pub fn load_derivation(path: impl AsRef<Path>) -> Result<TowerDerivation, IoError> {
    derivation_from_value(&read_json(path.as_ref())?, "")
}

/// Serializes a rational as its canonical string.
pub fn rational_to_value(r: &Rat) -> Value {
    Value::String(format_rational(r))
}

/// Serializes a matrix as row-major rational strings.
pub fn matrix_to_value(m: &QMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(rational_to_value).collect()))
            .collect(),
    )
}

/// Serializes a subspace as its canonical basis rows.
pub fn subspace_to_value(s: &Subspace) -> Value {
    Value::Array(
        s.basis()
            .iter()
            .map(|row| Value::Array(row.iter().map(rational_to_value).collect()))
            .collect(),
    )
}

/// Serializes an algebra in the sparse bracket format.
pub fn algebra_to_value(algebra: &LieAlgebra) -> Value {
    let dim = algebra.dim();
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let terms: Vec<Value> = algebra
                .bracket_basis(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| Value::Array(vec![Value::from(k), rational_to_value(c)]))
                .collect();
            if !terms.is_empty() {
                brackets.push(Value::Array(vec![
                    Value::from(i),
                    Value::from(j),
                    Value::Array(terms),
                ]));
            }
        }
    }
    let mut object = Map::new();
    object.insert("dim".to_string(), Value::from(dim));
    object.insert(
        "basis".to_string(),
        Value::Array(
            algebra
                .labels()
                .iter()
                .map(|l| Value::String(l.clone()))
                .collect(),
        ),
    );
    object.insert("brackets".to_string(), Value::Array(brackets));
    Value::Object(object)
}

/// Serializes a tower with inline levels.
pub fn tower_to_value(tower: &Tower) -> Value {
    let mut object = Map::new();
    object.insert(
        "levels".to_string(),
        Value::Array(tower.levels.iter().map(algebra_to_value).collect()),
    );
    object.insert(
        "embeddings".to_string(),
        Value::Array(tower.embeddings.iter().map(matrix_to_value).collect()),
    );
    Value::Object(object)
}

/// Serializes a tower derivation.
pub fn derivation_to_value(derivation: &TowerDerivation) -> Value {
    let mut object = Map::new();
    object.insert(
        "per_level".to_string(),
        Value::Array(derivation.per_level.iter().map(matrix_to_value).collect()),
    );
    Value::Object(object)
}

/// Serializes a representation with its algebra inline.
pub fn representation_to_value(rep: &Representation) -> Value {
    let mut object = Map::new();
    object.insert("algebra".to_string(), algebra_to_value(rep.algebra()));
    object.insert("module_dim".to_string(), Value::from(rep.module_dim()));
    object.insert(
        "operators".to_string(),
        Value::Array(rep.operators().iter().map(matrix_to_value).collect()),
    );
    Value::Object(object)
}

/// Parses a linear combination of basis labels, e.g. `"h"`,
/// `"2e - f"`, or `"1/2*x + y"`. Terms are separated by `+` or `-`;
/// each term is an optional rational coefficient, an optional `*`, and
/// a basis label, or a bare rational times nothing is rejected.
pub fn parse_element(input: &str, algebra: &LieAlgebra) -> Result<Vec<Rat>, IoError> {
    let field = "element";
    let text = input.trim();
    if text.is_empty() {
        return Err(schema(field, "empty element expression"));
    }
    let mut coords = vec![Rat::from_integer(0.into()); algebra.dim()];
    // Split into signed terms, keeping track of signs.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut first = true;
    for c in text.chars() {
        match c {
            '+' | '-' if !first => {
                if current.trim().is_empty() {
                    return Err(schema(field, format!("dangling sign in {input:?}")));
                }
                terms.push((negative, current.trim().to_string()));
                current = String::new();
                negative = c == '-';
            }
            '-' if first => {
                negative = true;
                first = false;
            }
            _ => {
                if !c.is_whitespace() {
                    first = false;
                }
                current.push(c);
            }
        }
    }
    if current.trim().is_empty() {
        return Err(schema(field, format!("dangling sign in {input:?}")));
    }
    terms.push((negative, current.trim().to_string()));

    for (negative, term) in terms {
        // Split an optional leading coefficient from the label: the
        // label is the trailing run that matches a basis name.
        let (coeff_text, label) = match term.split_once('*') {
            Some((c, l)) => (Some(c.trim()), l.trim().to_string()),
            None => {
                let split = term
                    .char_indices()
                    .find(|(_, c)| !(c.is_ascii_digit() || *c == '/'))
                    .map(|(i, _)| i);
                match split {
                    Some(0) => (None, term.clone()),
                    Some(i) => (Some(term[..i].trim()), term[i..].trim().to_string()),
                    None => {
                        return Err(schema(
                            field,
                            format!("term {term:?} has no basis label"),
                        ))
                    }
                }
            }
        };
        let index = algebra
            .labels()
            .iter()
            .position(|l| l == &label)
            .ok_or_else(|| {
                schema(
                    field,
                    format!(
                        "unknown basis label {:?}; expected one of {:?}",
                        label,
                        algebra.labels()
                    ),
                )
            })?;
        let mut coeff = match coeff_text {
            None | Some("") => Rat::from_integer(1.into()),
            Some(text) => parse_rational(text).map_err(|e| schema(field, e.to_string()))?,
        };
        if negative {
            coeff = -coeff;
        }
        coords[index] += coeff;
    }
    Ok(coords)
}

/// Parses a `;`-separated list of element expressions.
pub fn parse_elements(input: &str, algebra: &LieAlgebra) -> Result<Vec<Vec<Rat>>, IoError> {
    input
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_element(s, algebra))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::fixtures;

    fn rt(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn sl2_file_round_trips() {
        let sl2 = fixtures::sl2();
        let value = algebra_to_value(&sl2);
        let back = algebra_from_value(&value, "").unwrap();
        assert_eq!(back, sl2);
        assert_eq!(back.labels(), sl2.labels());
    }

    #[test]
    fn every_fixture_round_trips() {
        let algebras = vec![
            fixtures::sl2(),
            fixtures::so3(),
            fixtures::r2(),
            fixtures::h3(),
            fixtures::n3(),
            fixtures::abelian(3),
            fixtures::dsum(&[&fixtures::sl2(), &fixtures::r2()]),
        ];
        for algebra in algebras {
            let back = algebra_from_value(&algebra_to_value(&algebra), "").unwrap();
            assert_eq!(back, algebra);
        }
    }

    #[test]
    fn literal_sl2_text_parses() {
        let text = r#"{
            "dim": 3,
            "basis": ["e", "h", "f"],
            "brackets": [
                [0, 1, [[0, "-2"]]],
                [0, 2, [[1, "1"]]],
                [1, 2, [[2, "-2"]]]
            ]
        }"#;
        let value: Value = serde_json::from_str(text).unwrap();
        let algebra = algebra_from_value(&value, "").unwrap();
        assert_eq!(algebra, fixtures::sl2());
    }

    #[test]
    fn zero_denominator_names_the_field() {
        let text = r#"{"dim": 2, "brackets": [[0, 1, [[1, "1/0"]]]]}"#;
        let value: Value = serde_json::from_str(text).unwrap();
        let err = algebra_from_value(&value, "").unwrap_err();
        let message = err.to_string();
        assert!(message.contains("brackets[0][2][0][1]"), "{message}");
        assert!(message.contains("denominator"), "{message}");
    }

    #[test]
    fn missing_fields_are_named() {
        let value: Value = serde_json::from_str(r#"{"basis": []}"#).unwrap();
        let err = algebra_from_value(&value, "").unwrap_err();
        assert!(err.to_string().contains("dim"), "{err}");
    }

    #[test]
    fn bracket_indices_are_checked() {
        let text = r#"{"dim": 2, "brackets": [[0, 5, [[1, "1"]]]]}"#;
        let value: Value = serde_json::from_str(text).unwrap();
        assert!(matches!(
            algebra_from_value(&value, ""),
            Err(IoError::Algebra(AlgebraError::IndexOutOfRange { index: 5, dim: 2 }))
        ));
    }

    #[test]
    fn jacobi_violations_are_rejected_at_load() {
        // [x,y]=y, [x,z]=z, [y,z]=x has Jacobiator 2x on (x,y,z).
        let text = r#"{"dim": 3, "brackets": [
            [0, 1, [[1, "1"]]],
            [0, 2, [[2, "1"]]],
            [1, 2, [[0, "1"]]]
        ]}"#;
        let value: Value = serde_json::from_str(text).unwrap();
        assert!(matches!(
            algebra_from_value(&value, ""),
            Err(IoError::InvalidAlgebra { .. })
        ));
    }

    #[test]
    fn representation_round_trips_and_checks_homomorphism() {
        let rep = fixtures::natural_sl2_rep();
        let value = representation_to_value(&rep);
        let back = representation_from_value(&value, "", Path::new(".")).unwrap();
        assert_eq!(back.operators(), rep.operators());
        assert_eq!(back.module_dim(), 2);

        // Corrupt one operator: no longer a homomorphism.
        let mut broken = value.clone();
        broken["operators"][2] = matrix_to_value(&QMatrix::zero(2, 2));
        assert!(matches!(
            representation_from_value(&broken, "", Path::new(".")),
            Err(IoError::NotHomomorphism { .. })
        ));
    }

    #[test]
    fn files_load_from_disk_with_refs() {
        let dir = std::env::temp_dir().join(format!(
            "lietheory-io-test-{}",
            std::process::id()
        ));
        std::fs::create_dir_all(&dir).unwrap();
        let algebra_path = dir.join("sl2.json");
        std::fs::write(
            &algebra_path,
            serde_json::to_string_pretty(&algebra_to_value(&fixtures::sl2())).unwrap(),
        )
        .unwrap();
        let loaded = load_algebra(&algebra_path).unwrap();
        assert_eq!(loaded, fixtures::sl2());

        // Representation referring to the algebra by relative path.
        let mut rep_value = representation_to_value(&fixtures::natural_sl2_rep());
        rep_value["algebra"] = Value::String("sl2.json".to_string());
        let rep_path = dir.join("natural.json");
        std::fs::write(&rep_path, serde_json::to_string(&rep_value).unwrap()).unwrap();
        let rep = load_representation(&rep_path).unwrap();
        assert_eq!(rep.algebra(), &fixtures::sl2());

        let missing = load_algebra(dir.join("nope.json"));
        assert!(matches!(missing, Err(IoError::Read { .. })));

        std::fs::write(dir.join("bad.json"), "{not json").unwrap();
        assert!(matches!(
            load_algebra(dir.join("bad.json")),
            Err(IoError::Json { .. })
        ));

        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn tower_round_trips_and_validates() {
        let tower = fixtures::sl2_tower(3);
        let value = tower_to_value(&tower);
        let back = tower_from_value(&value, "", Path::new(".")).unwrap();
        assert_eq!(back, tower);

        // Mismatched embedding dimensions fail validation at load.
        let mut broken = value.clone();
        broken["embeddings"][0] = matrix_to_value(&QMatrix::identity(3));
        assert!(matches!(
            tower_from_value(&broken, "", Path::new(".")),
            Err(IoError::InvalidTower { .. })
        ));
    }

    #[test]
    fn derivation_round_trips() {
        let derivation = fixtures::sl2_tower_derivation_persistent(&fixtures::sl2_tower(3));
        let value = derivation_to_value(&derivation);
        let back = derivation_from_value(&value, "").unwrap();
        assert_eq!(back, derivation);
    }

    #[test]
    fn ragged_matrices_are_rejected() {
        let value: Value = serde_json::from_str(r#"[["1", "0"], ["1"]]"#).unwrap();
        let err = matrix_from_value(&value, "m").unwrap_err();
        assert!(err.to_string().starts_with("m:"), "{err}");

        let value: Value = serde_json::from_str(r#"[["1", 0.5]]"#).unwrap();
        let err = matrix_from_value(&value, "m").unwrap_err();
        assert!(err.to_string().contains("m[0][1]"), "{err}");
    }

    #[test]
    fn elements_parse_as_linear_combinations() {
        let sl2 = fixtures::sl2();
        assert_eq!(parse_element("h", &sl2).unwrap(), vec![rt(0), rt(1), rt(0)]);
        assert_eq!(
            parse_element("2e + 1/3*h - f", &sl2).unwrap(),
            vec![rt(2), rat(1, 3), rt(-1)]
        );
        assert_eq!(
            parse_element("-e + e", &sl2).unwrap(),
            vec![rt(0), rt(0), rt(0)]
        );
        assert_eq!(
            parse_element("3/2f", &sl2).unwrap(),
            vec![rt(0), rt(0), rat(3, 2)]
        );

        let err = parse_element("2q", &sl2).unwrap_err();
        assert!(err.to_string().contains("unknown basis label"), "{err}");
        assert!(parse_element("", &sl2).is_err());
        assert!(parse_element("2 +", &sl2).is_err());

        let elements = parse_elements("e; h", &sl2).unwrap();
        assert_eq!(elements.len(), 2);
        assert_eq!(elements[0], vec![rt(1), rt(0), rt(0)]);
    }
}
