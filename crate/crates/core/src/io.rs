//! JSON input documents and the structured spectrum report.
//!
//! Inputs are validated field by field so that errors name the offending
//! entry (`generators[2]`, `terms[0].coeff`, ...). Unknown fields such as
//! provenance notes are ignored.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graded::{DiagonalFamily, MuEntry};
use crate::ideal::{Exponent, MonomialIdeal};
use crate::jumping::JumpSpectrum;
use crate::poly::SparsePolynomial;
use crate::rational::{self, Rational};

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::parse("document", e.to_string()))
}

fn field<'a>(doc: &'a Value, name: &str) -> Result<&'a Value> {
    doc.get(name).ok_or_else(|| Error::parse(name, "missing field"))
}

fn dimension_of(doc: &Value) -> Result<usize> {
    let d = field(doc, "dimension")?
        .as_u64()
        .ok_or_else(|| Error::parse("dimension", "expected a positive integer"))?;
    if d == 0 {
        return Err(Error::parse("dimension", "must be positive"));
    }
    Ok(d as usize)
}

fn exponent_of(v: &Value, d: usize, path: &str) -> Result<Exponent> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::parse(path, "expected a list of nonnegative integers"))?;
    if items.len() != d {
        return Err(Error::parse(
            path,
            format!("expected {d} entries, found {}", items.len()),
        ));
    }
    items
        .iter()
        .enumerate()
        .map(|(k, x)| {
            x.as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| Error::parse(format!("{path}[{k}]"), "expected a nonnegative integer"))
        })
        .collect()
}

fn rational_of(v: &Value, path: &str) -> Result<Rational> {
    match v {
        Value::String(s) => {
            rational::parse_rational(s).map_err(|_| Error::parse(path, format!("not a rational: {s:?}")))
        }
        Value::Number(n) => n
            .as_i64()
            .map(rational::int)
            .ok_or_else(|| Error::parse(path, "numbers must be integers; write fractions as \"p/q\"")),
        _ => Err(Error::parse(path, "expected a \"p/q\" string")),
    }
}

/// `{"dimension": d, "generators": [[e_1, ..., e_d], ...]}`
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let doc = parse_json(text)?;
    let d = dimension_of(&doc)?;
    let gens = field(&doc, "generators")?
        .as_array()
        .ok_or_else(|| Error::parse("generators", "expected a list"))?;
    let exps = gens
        .iter()
        .enumerate()
        .map(|(k, g)| exponent_of(g, d, &format!("generators[{k}]")))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(exps, d)
}

/// `{"dimension": d, "terms": [{"coeff": "p/q", "exp": [...]}, ...]}`
pub fn parse_polynomial(text: &str) -> Result<SparsePolynomial> {
    let doc = parse_json(text)?;
    let d = dimension_of(&doc)?;
    let terms = field(&doc, "terms")?
        .as_array()
        .ok_or_else(|| Error::parse("terms", "expected a list"))?;
    let mut parsed = Vec::with_capacity(terms.len());
    for (k, t) in terms.iter().enumerate() {
        let coeff = t
            .get("coeff")
            .ok_or_else(|| Error::parse(format!("terms[{k}].coeff"), "missing field"))?;
        let exp = t
            .get("exp")
            .ok_or_else(|| Error::parse(format!("terms[{k}].exp"), "missing field"))?;
        parsed.push((
            exponent_of(exp, d, &format!("terms[{k}].exp"))?,
            rational_of(coeff, &format!("terms[{k}].coeff"))?,
        ));
    }
    let f = SparsePolynomial::from_terms(d, parsed)?;
    if f.is_zero() {
        return Err(Error::parse("terms", "polynomial is zero"));
    }
    Ok(f)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Diagonal(DiagonalFamily),
    Hyperbola,
}

/// `{"type": "diagonal", "mu": ["3/2", "2"]}` or `{"type": "hyperbola"}`.
/// A weight may also be `{"name": "sqrt2", "value": "1414/1000",
/// "radius": "1/1000"}`.
pub fn parse_family(text: &str) -> Result<FamilySpec> {
    let doc = parse_json(text)?;
    let kind = field(&doc, "type")?
        .as_str()
        .ok_or_else(|| Error::parse("type", "expected a string"))?;
    match kind {
        "hyperbola" => Ok(FamilySpec::Hyperbola),
        "diagonal" => {
            let mu = field(&doc, "mu")?
                .as_array()
                .ok_or_else(|| Error::parse("mu", "expected a list"))?;
            let entries = mu
                .iter()
                .enumerate()
                .map(|(k, m)| {
                    let path = format!("mu[{k}]");
                    match m {
                        Value::Object(obj) => {
                            let name = obj.get("name").and_then(Value::as_str).unwrap_or("approximation");
                            let value = obj
                                .get("value")
                                .ok_or_else(|| Error::parse(format!("{path}.value"), "missing field"))?;
                            let radius = obj
                                .get("radius")
                                .ok_or_else(|| Error::parse(format!("{path}.radius"), "missing field"))?;
                            Ok(MuEntry::approximation(
                                name,
                                rational_of(value, &format!("{path}.value"))?,
                                rational_of(radius, &format!("{path}.radius"))?,
                            ))
                        }
                        other => Ok(MuEntry::exact(rational_of(other, &path)?)),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            DiagonalFamily::new(entries)
                .map(FamilySpec::Diagonal)
                .map_err(|e| Error::parse("mu", e.to_string()))
        }
        other => Err(Error::parse("type", format!("unknown family {other:?}"))),
    }
}

/// `{"roots": ["-7/12", ...]}`
pub fn parse_roots(text: &str) -> Result<Vec<Rational>> {
    let doc = parse_json(text)?;
    field(&doc, "roots")?
        .as_array()
        .ok_or_else(|| Error::parse("roots", "expected a list"))?
        .iter()
        .enumerate()
        .map(|(k, r)| rational_of(r, &format!("roots[{k}]")))
        .collect()
}

#[derive(Serialize)]
struct IdealDoc<'a> {
    dimension: usize,
    generators: &'a [Exponent],
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> String {
    serde_json::to_string(&IdealDoc {
        dimension: ideal.dimension(),
        generators: ideal.generators(),
    })
    .expect("plain data serializes")
}

#[derive(Serialize)]
struct TermDoc {
    coeff: String,
    exp: Exponent,
}

#[derive(Serialize)]
struct PolyDoc {
    dimension: usize,
    terms: Vec<TermDoc>,
}

pub fn polynomial_to_json(f: &SparsePolynomial) -> String {
    serde_json::to_string(&PolyDoc {
        dimension: f.dimension(),
        terms: f
            .terms()
            .map(|(e, c)| TermDoc {
                coeff: rational::format_rational(c),
                exp: e.clone(),
            })
            .collect(),
    })
    .expect("plain data serializes")
}

/// First 16 hex digits of the SHA-256 of the canonical ideal document.
pub fn ideal_hash(ideal: &MonomialIdeal) -> String {
    let digest = Sha256::digest(ideal_to_json(ideal).as_bytes());
    hex::encode(&digest[..8])
}

/// A spectrum as ordered `("p/q", multiplicity)` pairs plus the metadata
/// needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub ideal: String,
    pub ideal_hash: String,
    pub dimension: usize,
    pub generators: Vec<Exponent>,
    #[serde(with = "rational::serde_str")]
    pub cutoff: Rational,
    pub witness_box: Vec<u32>,
    pub uniform_box_bound: u32,
    pub jumps: Vec<(String, Option<u64>)>,
}

impl SpectrumReport {
    pub fn new(ideal: &MonomialIdeal, spectrum: &JumpSpectrum, uniform_box_bound: u32) -> Self {
        let jumps = spectrum
            .jumps
            .iter()
            .enumerate()
            .map(|(k, x)| {
                (
                    rational::format_rational(x),
                    spectrum.multiplicities.as_ref().map(|m| m[k]),
                )
            })
            .collect();
        SpectrumReport {
            ideal: ideal.to_string(),
            ideal_hash: ideal_hash(ideal),
            dimension: ideal.dimension(),
            generators: ideal.generators().to_vec(),
            cutoff: spectrum.cutoff.clone(),
            witness_box: spectrum.witness_box.clone(),
            uniform_box_bound,
            jumps,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn ideal_documents() {
        let i =
            parse_ideal(r#"{"dimension": 2, "generators": [[3, 0], [0, 4], [3, 1]], "note": "x"}"#).unwrap();
        assert_eq!(i, MonomialIdeal::diagonal(&[3, 4]).unwrap());
        assert_eq!(parse_ideal(&ideal_to_json(&i)).unwrap(), i);
        let err = parse_ideal(r#"{"dimension": 2, "generators": [[3, 0], [1]]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { ref field, .. } if field == "generators[1]"));
        let err = parse_ideal(r#"{"dimension": 2, "generators": [[3, -1]]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { ref field, .. } if field == "generators[0][1]"));
        assert!(matches!(parse_ideal("{}"), Err(Error::Parse { ref field, .. }) if field == "dimension"));
    }

    #[test]
    fn polynomial_documents() {
        let text =
            r#"{"dimension": 2, "terms": [{"coeff": "1", "exp": [3, 0]}, {"coeff": "-1/2", "exp": [0, 4]}]}"#;
        let f = parse_polynomial(text).unwrap();
        assert_eq!(f.coefficient(&[0, 4]), rat(-1, 2));
        assert_eq!(parse_polynomial(&polynomial_to_json(&f)).unwrap(), f);
        let bad = r#"{"dimension": 2, "terms": [{"coeff": "1/0", "exp": [3, 0]}]}"#;
        assert!(
            matches!(parse_polynomial(bad), Err(Error::Parse { ref field, .. }) if field == "terms[0].coeff")
        );
        let zero = r#"{"dimension": 1, "terms": [{"coeff": 2, "exp": [1]}, {"coeff": -2, "exp": [1]}]}"#;
        assert!(parse_polynomial(zero).is_err());
    }

    #[test]
    fn family_documents() {
        match parse_family(r#"{"type": "diagonal", "mu": ["3/2", "2"]}"#).unwrap() {
            FamilySpec::Diagonal(f) => assert_eq!(f.lct().unwrap(), rat(2, 3) + rat(1, 2)),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            parse_family(r#"{"type": "hyperbola"}"#).unwrap(),
            FamilySpec::Hyperbola
        );
        let approx =
            r#"{"type": "diagonal", "mu": [{"name": "sqrt2", "value": "1414/1000", "radius": "1/1000"}]}"#;
        assert!(matches!(parse_family(approx).unwrap(), FamilySpec::Diagonal(f) if !f.is_exact()));
        assert!(parse_family(r#"{"type": "diagonal", "mu": ["0"]}"#).is_err());
        assert!(parse_family(r#"{"type": "spiral"}"#).is_err());
    }

    #[test]
    fn root_documents() {
        let r = parse_roots(r#"{"roots": ["-7/12", "-5/6", "-11/12", "-1"]}"#).unwrap();
        assert_eq!(r, vec![rat(-7, 12), rat(-5, 6), rat(-11, 12), int(-1)]);
        assert!(parse_roots(r#"{"roots": ["x"]}"#).is_err());
    }

    #[test]
    fn report_is_stable() {
        let i = MonomialIdeal::diagonal(&[3, 4]).unwrap();
        let s = crate::jumping::jumps_upto(&i, &int(1)).unwrap();
        let r = SpectrumReport::new(&i, &s, 5);
        assert_eq!(r.jumps[0], ("7/12".to_string(), Some(1)));
        assert_eq!(r.ideal_hash.len(), 16);
        assert_eq!(
            r.ideal_hash,
            ideal_hash(&MonomialIdeal::diagonal(&[3, 4]).unwrap())
        );
        assert_ne!(
            r.ideal_hash,
            ideal_hash(&MonomialIdeal::diagonal(&[4, 3]).unwrap())
        );
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#"["7/12",1]"#));
    }
}
