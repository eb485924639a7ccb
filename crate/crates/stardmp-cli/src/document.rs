//! The on-disk element document format and the dynamic carrier layer the
//! command line dispatches through.
//!
//! Exact values travel as strings ("p/q" or "p/q+r/s i") so nothing is
//! lost in transport; rationals are accepted unreduced and printed
//! reduced, and documents round-trip losslessly.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use stardmp::finite::ZnRing;
use stardmp::matrix::{FpMatrixRing, GaussianMatrixRing, Matrix};
use stardmp::ring::Involution;
use stardmp::scalar::GaussianRational;

/// The `ring` header of an element document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RingDoc {
    #[serde(rename = "gaussian-rational-matrix")]
    GaussianRationalMatrix { n: usize, involution: String },
    #[serde(rename = "zn")]
    Zn { n: u64 },
    #[serde(rename = "zp-matrix")]
    ZpMatrix {
        p: u64,
        k: usize,
        #[serde(default = "transpose_str")]
        involution: String,
    },
}

fn transpose_str() -> String {
    "transpose".to_string()
}

/// A parsed element document: carrier descriptor plus carrier-specific
/// payload.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementDocument {
    pub ring: RingDoc,
    pub value: Value,
}

/// A concrete carrier instantiated from a document header.
#[derive(Debug)]
pub enum AnyCarrier {
    Gaussian(GaussianMatrixRing),
    Zn(ZnRing),
    Fp(FpMatrixRing),
}

/// A payload element of one of the three carriers.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyElem {
    Gaussian(Matrix<GaussianRational>),
    Zn(u64),
    Fp(Matrix<u64>),
}

impl AnyCarrier {
    pub fn from_doc(doc: &RingDoc) -> Result<Self, String> {
        match doc {
            RingDoc::GaussianRationalMatrix { n, involution } => {
                let inv = Involution::parse(involution).ok_or_else(|| {
                    format!("ring.involution: unknown involution '{involution}' (expected conjugate-transpose, transpose or identity)")
                })?;
                GaussianMatrixRing::new(*n, inv)
                    .map(AnyCarrier::Gaussian)
                    .map_err(|e| format!("ring: {e}"))
            }
            RingDoc::Zn { n } => ZnRing::new(*n)
                .map(AnyCarrier::Zn)
                .map_err(|e| format!("ring.n: {e}")),
            RingDoc::ZpMatrix { p, k, involution } => {
                match Involution::parse(involution) {
                    Some(Involution::Transpose | Involution::ConjugateTranspose) => {}
                    Some(Involution::Identity) if *k == 1 => {}
                    Some(_) => {
                        return Err(
                            "ring.involution: identity involution requires k = 1".to_string()
                        )
                    }
                    None => {
                        return Err(format!("ring.involution: unknown involution '{involution}'"))
                    }
                }
                FpMatrixRing::new(*p, *k)
                    .map(AnyCarrier::Fp)
                    .map_err(|e| format!("ring: {e}"))
            }
        }
    }

    pub fn ring_doc(&self) -> RingDoc {
        match self {
            AnyCarrier::Gaussian(r) => RingDoc::GaussianRationalMatrix {
                n: r.dim(),
                involution: r.involution().as_str().to_string(),
            },
            AnyCarrier::Zn(r) => RingDoc::Zn { n: r.modulus() },
            AnyCarrier::Fp(r) => RingDoc::ZpMatrix {
                p: r.field().p(),
                k: r.dim(),
                involution: "transpose".to_string(),
            },
        }
    }

    /// Parses the carrier-specific payload, naming the offending field on
    /// error.
    pub fn parse_value(&self, value: &Value) -> Result<AnyElem, String> {
        match self {
            AnyCarrier::Gaussian(r) => {
                let rows = matrix_rows(value, r.dim())?;
                let mut entries = Vec::with_capacity(r.dim() * r.dim());
                for (i, row) in rows.iter().enumerate() {
                    for (j, cell) in row.iter().enumerate() {
                        let text = cell.as_str().ok_or_else(|| {
                            format!("value[{i}][{j}]: expected a string entry, got {cell}")
                        })?;
                        let e: GaussianRational = text
                            .parse()
                            .map_err(|err| format!("value[{i}][{j}]: {err}"))?;
                        entries.push(e);
                    }
                }
                Ok(AnyElem::Gaussian(Matrix::new(r.dim(), r.dim(), entries)))
            }
            AnyCarrier::Zn(r) => {
                let v = value
                    .as_i64()
                    .ok_or_else(|| format!("value: expected an integer, got {value}"))?;
                Ok(AnyElem::Zn(r.element(v)))
            }
            AnyCarrier::Fp(r) => {
                let rows = matrix_rows(value, r.dim())?;
                let mut entries = Vec::with_capacity(r.dim() * r.dim());
                for (i, row) in rows.iter().enumerate() {
                    for (j, cell) in row.iter().enumerate() {
                        let v = cell.as_i64().ok_or_else(|| {
                            format!("value[{i}][{j}]: expected an integer, got {cell}")
                        })?;
                        entries.push(r.field().reduce(v));
                    }
                }
                Ok(AnyElem::Fp(Matrix::new(r.dim(), r.dim(), entries)))
            }
        }
    }

    /// Canonical payload serialization; `parse_value` of the result is the
    /// identity.
    pub fn value_json(&self, elem: &AnyElem) -> Value {
        match (self, elem) {
            (AnyCarrier::Gaussian(_), AnyElem::Gaussian(m)) => gaussian_json(m),
            (AnyCarrier::Zn(_), AnyElem::Zn(v)) => json!(v),
            (AnyCarrier::Fp(_), AnyElem::Fp(m)) => fp_json(m),
            _ => unreachable!("element does not belong to this carrier"),
        }
    }
}

fn matrix_rows(value: &Value, n: usize) -> Result<Vec<Vec<Value>>, String> {
    let rows = value
        .as_array()
        .ok_or_else(|| format!("value: expected an {n}x{n} array of rows"))?;
    if rows.len() != n {
        return Err(format!("value: expected {n} rows, got {}", rows.len()));
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let cells = row
                .as_array()
                .ok_or_else(|| format!("value[{i}]: expected an array of {n} entries"))?;
            if cells.len() != n {
                return Err(format!(
                    "value[{i}]: expected {n} entries, got {}",
                    cells.len()
                ));
            }
            Ok(cells.clone())
        })
        .collect()
}

pub fn gaussian_json(m: &Matrix<GaussianRational>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array(
                    (0..m.cols())
                        .map(|c| Value::String(m.at(r, c).to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn fp_json(m: &Matrix<u64>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array(
                    (0..m.cols())
                        .map(|c| json!(m.at(r, c)))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Loads and fully validates an element document from a JSON string.
pub fn load_document(text: &str) -> Result<(AnyCarrier, AnyElem), String> {
    let doc: ElementDocument =
        serde_json::from_str(text).map_err(|e| format!("document: {e}"))?;
    let carrier = AnyCarrier::from_doc(&doc.ring)?;
    let elem = carrier.parse_value(&doc.value)?;
    Ok((carrier, elem))
}

/// Serializes an element back into document form.
pub fn print_document(carrier: &AnyCarrier, elem: &AnyElem) -> ElementDocument {
    ElementDocument {
        ring: carrier.ring_doc(),
        value: carrier.value_json(elem),
    }
}

/// Runs `$body` with the concrete ring, element(s) and payload serializer
/// of one carrier kind in scope.
#[macro_export]
macro_rules! with_carrier {
    ($carrier:expr, $elem:expr, |$ring:ident, $a:ident, $to_json:ident| $body:expr) => {
        match ($carrier, $elem) {
            ($crate::document::AnyCarrier::Gaussian($ring), $crate::document::AnyElem::Gaussian($a)) => {
                let $to_json = $crate::document::gaussian_json;
                $body
            }
            ($crate::document::AnyCarrier::Zn($ring), $crate::document::AnyElem::Zn($a)) => {
                let $to_json = |v: &u64| ::serde_json::json!(v);
                $body
            }
            ($crate::document::AnyCarrier::Fp($ring), $crate::document::AnyElem::Fp($a)) => {
                let $to_json = $crate::document::fp_json;
                $body
            }
            _ => unreachable!("element does not belong to this carrier"),
        }
    };
    ($carrier:expr, $elem_a:expr, $elem_b:expr, |$ring:ident, $a:ident, $b:ident, $to_json:ident| $body:expr) => {
        match ($carrier, $elem_a, $elem_b) {
            (
                $crate::document::AnyCarrier::Gaussian($ring),
                $crate::document::AnyElem::Gaussian($a),
                $crate::document::AnyElem::Gaussian($b),
            ) => {
                let $to_json = $crate::document::gaussian_json;
                $body
            }
            (
                $crate::document::AnyCarrier::Zn($ring),
                $crate::document::AnyElem::Zn($a),
                $crate::document::AnyElem::Zn($b),
            ) => {
                let $to_json = |v: &u64| ::serde_json::json!(v);
                $body
            }
            (
                $crate::document::AnyCarrier::Fp($ring),
                $crate::document::AnyElem::Fp($a),
                $crate::document::AnyElem::Fp($b),
            ) => {
                let $to_json = $crate::document::fp_json;
                $body
            }
            _ => unreachable!("elements do not belong to this carrier"),
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_document_round_trip() {
        let text = r#"{
            "ring": {"kind": "gaussian-rational-matrix", "n": 2, "involution": "transpose"},
            "value": [["i", "0"], ["2/4", "1/2-3/4i"]]
        }"#;
        let (carrier, elem) = load_document(text).unwrap();
        let doc = print_document(&carrier, &elem);
        // Unreduced input prints reduced and then round-trips exactly.
        assert_eq!(doc.value[1][0], "1/2");
        let reparsed = carrier.parse_value(&doc.value).unwrap();
        assert_eq!(reparsed, elem);
    }

    #[test]
    fn zn_accepts_out_of_range_and_prints_canonical() {
        let text = r#"{"ring": {"kind": "zn", "n": 6}, "value": -5}"#;
        let (carrier, elem) = load_document(text).unwrap();
        assert_eq!(elem, AnyElem::Zn(1));
        let doc = print_document(&carrier, &elem);
        assert_eq!(doc.value, serde_json::json!(1));
    }

    #[test]
    fn errors_name_the_offending_field() {
        let bad_entry = r#"{
            "ring": {"kind": "gaussian-rational-matrix", "n": 2, "involution": "transpose"},
            "value": [["i", "0"], ["1/0", "0"]]
        }"#;
        let err = load_document(bad_entry).unwrap_err();
        assert!(err.contains("value[1][0]"), "{err}");

        let bad_shape = r#"{
            "ring": {"kind": "zp-matrix", "p": 2, "k": 2},
            "value": [[1, 0, 1], [0, 1]]
        }"#;
        let err = load_document(bad_shape).unwrap_err();
        assert!(err.contains("value[0]"), "{err}");

        let bad_ring = r#"{"ring": {"kind": "zn", "n": 1}, "value": 0}"#;
        let err = load_document(bad_ring).unwrap_err();
        assert!(err.contains("ring.n"), "{err}");

        let bad_involution = r#"{
            "ring": {"kind": "gaussian-rational-matrix", "n": 2, "involution": "adjoint"},
            "value": [["0", "0"], ["0", "0"]]
        }"#;
        let err = load_document(bad_involution).unwrap_err();
        assert!(err.contains("ring.involution"), "{err}");
    }

    #[test]
    fn fp_entries_are_reduced_mod_p() {
        let text = r#"{"ring": {"kind": "zp-matrix", "p": 3, "k": 2}, "value": [[4, -1], [0, 5]]}"#;
        let (carrier, elem) = load_document(text).unwrap();
        let doc = print_document(&carrier, &elem);
        assert_eq!(doc.value, serde_json::json!([[1, 2], [0, 2]]));
    }
}
