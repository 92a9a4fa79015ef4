//! The structure-constant file format: JSON with scalars written as decimal
//! strings `"n"` or `"n/d"`.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use tkk_core::exactla::{Field, FieldError, Matrix, Scalar, Vector};
use tkk_core::freemod::{BilinearMap, FreeModule, ModuleError, TrilinearMap};
use tkk_core::jordan::{JordanAlgebra, JordanError, JordanPair, JordanTriple};
use tkk_core::liegrad::{AntiGradedInvolution, GradedLieAlgebra, LieError, Sl2Triple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn field(self) -> Result<Field, FieldError> {
        match self {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Prime(p) => Field::prime(p),
        }
    }
}

impl From<Field> for FieldSpec {
    fn from(f: Field) -> Self {
        match f {
            Field::Rational => FieldSpec::Rational,
            Field::Prime(p) => FieldSpec::Prime(p),
        }
    }
}

/// `(i, j, out, value)`.
pub type Entry3 = (usize, usize, usize, String);
/// `(i, j, k, out, value)`.
pub type Entry4 = (usize, usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub degree: i32,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sl2Coords {
    pub h: Vec<String>,
    pub e: Vec<String>,
    pub f: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Structure {
    JordanAlgebra {
        labels: Vec<String>,
        product: Vec<Entry3>,
        identity: Vec<String>,
    },
    JordanTriple {
        labels: Vec<String>,
        product: Vec<Entry4>,
    },
    JordanPair {
        minus_labels: Vec<String>,
        plus_labels: Vec<String>,
        minus_product: Vec<Entry4>,
        plus_product: Vec<Entry4>,
    },
    /// Bracket entries are listed for `i < j` only; `[x_j, x_i]` follows.
    LieGraded {
        components: Vec<Component>,
        bracket: Vec<Entry3>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sl2: Option<Sl2Coords>,
        /// Columns of the involution matrix.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        involution: Option<Vec<Vec<String>>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub field: FieldSpec,
    #[serde(flatten)]
    pub structure: Structure,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
}

fn invalid(path: impl Into<String>, message: impl ToString) -> ParseError {
    ParseError::Invalid {
        path: path.into(),
        message: message.to_string(),
    }
}

pub fn parse(bytes: &[u8]) -> Result<AlgebraFile, ParseError> {
    let file: AlgebraFile = serde_json::from_slice(bytes).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.validate()?;
    Ok(file)
}

pub fn emit(file: &AlgebraFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("serializable");
    s.push('\n');
    s
}

/// An input before its axioms are checked.
#[derive(Clone, Debug)]
pub enum Loaded {
    Algebra(JordanAlgebra),
    Triple(JordanTriple),
    Pair(JordanPair),
    Lie {
        algebra: GradedLieAlgebra,
        sl2: Option<Sl2Triple>,
        involution: Option<AntiGradedInvolution>,
    },
}

fn scalar(field: Field, path: &str, s: &str) -> Result<Scalar, ParseError> {
    field.parse(s).map_err(|e| invalid(path, e))
}

fn vector(field: Field, path: &str, v: &[String], dim: usize) -> Result<Vector, ParseError> {
    if v.len() != dim {
        return Err(invalid(path, format!("expected {dim} coordinates, got {}", v.len())));
    }
    v.iter()
        .enumerate()
        .map(|(i, s)| scalar(field, &format!("{path}[{i}]"), s))
        .collect()
}

fn check_index(path: &str, i: usize, dim: usize) -> Result<(), ParseError> {
    if i >= dim {
        return Err(invalid(path, format!("index {i} out of range for dimension {dim}")));
    }
    Ok(())
}

fn module(field: Field, path: &str, labels: &[String]) -> Result<FreeModule, ParseError> {
    FreeModule::new(field, labels.to_vec()).map_err(|e| invalid(path, e))
}

fn bilinear(field: Field, path: &str, entries: &[Entry3], dims: [usize; 3]) -> Result<BilinearMap, ParseError> {
    let mut m = BilinearMap::zero(field, dims[0], dims[1], dims[2]);
    for (n, (i, j, l, v)) in entries.iter().enumerate() {
        let p = format!("{path}[{n}]");
        for (x, d) in [*i, *j, *l].into_iter().zip(dims) {
            check_index(&p, x, d)?;
        }
        m.add_entry(*i, *j, *l, scalar(field, &p, v)?).map_err(|e| invalid(&p, e))?;
    }
    Ok(m)
}

fn trilinear(field: Field, path: &str, entries: &[Entry4], dims: [usize; 4]) -> Result<TrilinearMap, ParseError> {
    let mut m = TrilinearMap::zero(field, [dims[0], dims[1], dims[2]], dims[3]);
    for (n, (i, j, k, l, v)) in entries.iter().enumerate() {
        let p = format!("{path}[{n}]");
        for (x, d) in [*i, *j, *k, *l].into_iter().zip(dims) {
            check_index(&p, x, d)?;
        }
        m.add_entry([*i, *j, *k, *l], scalar(field, &p, v)?)
            .map_err(|e| invalid(&p, e))?;
    }
    Ok(m)
}

fn lie_error(path: &str, e: LieError) -> ParseError {
    invalid(path, e)
}

fn jordan_error(path: &str, e: JordanError) -> ParseError {
    invalid(path, e)
}

fn module_error(path: &str, e: ModuleError) -> ParseError {
    invalid(path, e)
}

impl AlgebraFile {
    pub fn kind(&self) -> &'static str {
        match self.structure {
            Structure::JordanAlgebra { .. } => "jordan_algebra",
            Structure::JordanTriple { .. } => "jordan_triple",
            Structure::JordanPair { .. } => "jordan_pair",
            Structure::LieGraded { .. } => "lie_graded",
        }
    }

    pub fn validate(&self) -> Result<(), ParseError> {
        let field = self.field.field().map_err(|e| invalid("field", e))?;
        self.load(field).map(|_| ())
    }

    /// Builds the structure over `field`; scalars are read in that field.
    pub fn load(&self, field: Field) -> Result<Loaded, ParseError> {
        Ok(match &self.structure {
            Structure::JordanAlgebra {
                labels,
                product,
                identity,
            } => {
                let d = labels.len();
                let m = module(field, "labels", labels)?;
                let prod = bilinear(field, "product", product, [d, d, d])?;
                let one = vector(field, "identity", identity, d)?;
                Loaded::Algebra(JordanAlgebra::new(m, prod, one).map_err(|e| jordan_error("identity", e))?)
            }
            Structure::JordanTriple { labels, product } => {
                let d = labels.len();
                let m = module(field, "labels", labels)?;
                let prod = trilinear(field, "product", product, [d; 4])?;
                Loaded::Triple(JordanTriple::new(m, prod).map_err(|e| module_error("product", e))?)
            }
            Structure::JordanPair {
                minus_labels,
                plus_labels,
                minus_product,
                plus_product,
            } => {
                let (m, p) = (minus_labels.len(), plus_labels.len());
                let mm = module(field, "minus_labels", minus_labels)?;
                let pm = module(field, "plus_labels", plus_labels)?;
                let tm = trilinear(field, "minus_product", minus_product, [m, p, m, m])?;
                let tp = trilinear(field, "plus_product", plus_product, [p, m, p, p])?;
                Loaded::Pair(JordanPair::new(mm, pm, tm, tp).map_err(|e| module_error("minus_product", e))?)
            }
            Structure::LieGraded {
                components,
                bracket,
                sl2,
                involution,
            } => {
                let labels: Vec<String> = components.iter().flat_map(|c| c.labels.iter().cloned()).collect();
                let degrees: Vec<i32> = components
                    .iter()
                    .flat_map(|c| std::iter::repeat_n(c.degree, c.labels.len()))
                    .collect();
                let n = labels.len();
                let m = module(field, "components", &labels)?;
                let mut br = BilinearMap::zero(field, n, n, n);
                for (k, (i, j, l, v)) in bracket.iter().enumerate() {
                    let p = format!("bracket[{k}]");
                    for x in [*i, *j, *l] {
                        check_index(&p, x, n)?;
                    }
                    if i >= j {
                        return Err(invalid(&p, "bracket entries need i < j"));
                    }
                    let c = scalar(field, &p, v)?;
                    br.add_entry(*i, *j, *l, c.clone()).map_err(|e| invalid(&p, e))?;
                    br.add_entry(*j, *i, *l, -c).map_err(|e| invalid(&p, e))?;
                }
                let algebra = GradedLieAlgebra::new(m, degrees, br).map_err(|e| lie_error("components", e))?;
                let sl2 = sl2
                    .as_ref()
                    .map(|s| -> Result<Sl2Triple, ParseError> {
                        Ok(Sl2Triple {
                            h: vector(field, "sl2.h", &s.h, n)?,
                            e: vector(field, "sl2.e", &s.e, n)?,
                            f: vector(field, "sl2.f", &s.f, n)?,
                        })
                    })
                    .transpose()?;
                let involution = involution
                    .as_ref()
                    .map(|cols| -> Result<AntiGradedInvolution, ParseError> {
                        if cols.len() != n {
                            return Err(invalid("involution", format!("expected {n} columns, got {}", cols.len())));
                        }
                        let cols: Vec<Vector> = cols
                            .iter()
                            .enumerate()
                            .map(|(c, v)| vector(field, &format!("involution[{c}]"), v, n))
                            .collect::<Result<_, _>>()?;
                        Ok(AntiGradedInvolution {
                            matrix: Matrix::from_cols(field, n, &cols),
                        })
                    })
                    .transpose()?;
                Loaded::Lie {
                    algebra,
                    sl2,
                    involution,
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k1_text() -> &'static str {
        r#"{"name": "k1", "field": "rational", "kind": "jordan_algebra",
            "labels": ["u"], "product": [[0, 0, 0, "1"]], "identity": ["1"]}"#
    }

    #[test]
    fn parses_and_reemits() {
        let f = parse(k1_text().as_bytes()).unwrap();
        assert_eq!(f.kind(), "jordan_algebra");
        assert_eq!(parse(emit(&f).as_bytes()).unwrap(), f);
    }

    #[test]
    fn index_out_of_range() {
        let t = k1_text().replace("[0, 0, 0, \"1\"]", "[0, 1, 0, \"1\"]");
        let err = parse(t.as_bytes()).unwrap_err();
        assert!(matches!(err, ParseError::Invalid { ref path, .. } if path == "product[0]"), "{err}");
    }

    #[test]
    fn syntax_error_is_positioned() {
        let err = parse(b"{\n  \"name\": ,\n}").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }), "{err}");
    }

    #[test]
    fn third_over_gf5() {
        let t = k1_text()
            .replace("\"rational\"", "{\"prime\": 5}")
            .replace("\"product\": [[0, 0, 0, \"1\"]]", "\"product\": [[0, 0, 0, \"1/3\"]]");
        let f = parse(t.as_bytes()).unwrap();
        let field = f.field.field().unwrap();
        let Loaded::Algebra(j) = f.load(field).unwrap() else {
            panic!("kind")
        };
        assert_eq!(j.product().basis(0, 0)[0].1, field.from_i64(2));
    }

    #[test]
    fn lie_needs_ordered_pairs() {
        let t = r#"{"name": "x", "field": "rational", "kind": "lie_graded",
            "components": [{"degree": 0, "labels": ["a", "b"]}], "bracket": [[1, 0, 0, "1"]]}"#;
        assert!(parse(t.as_bytes()).is_err());
    }

    #[test]
    fn small_characteristic_rejected() {
        let t = k1_text().replace("\"rational\"", "{\"prime\": 3}");
        assert!(matches!(parse(t.as_bytes()), Err(ParseError::Invalid { ref path, .. }) if path == "field"));
    }
}
