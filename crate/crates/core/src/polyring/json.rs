//! Canonical JSON form of polynomials:
//!
//! ```json
//! {"terms":[{"coeff":"2","mono":{"x1":1,"y2":1}}]}
//! ```
//!
//! Terms appear in ascending graded-lex order and monomial keys in variable
//! order, so equal polynomials always serialize to identical bytes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};

use super::{Monomial, Polynomial, Variable};
use crate::Error;

struct MonoRef<'a>(&'a Monomial);

impl Serialize for MonoRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let exps = self.0.exponents();
        let mut map = s.serialize_map(Some(exps.len()))?;
        for (v, e) in exps {
            map.serialize_entry(&v.to_string(), e)?;
        }
        map.end()
    }
}

struct TermRef<'a>(&'a Monomial, &'a BigInt);

impl Serialize for TermRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("coeff", &self.1.to_string())?;
        st.serialize_field("mono", &MonoRef(self.0))?;
        st.end()
    }
}

struct TermsRef<'a>(&'a Polynomial);

impl Serialize for TermsRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (m, c) in self.0.terms() {
            seq.serialize_element(&TermRef(m, c))?;
        }
        seq.end()
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Polynomial", 1)?;
        st.serialize_field("terms", &TermsRef(self))?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    coeff: String,
    mono: BTreeMap<String, u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPolynomial {
    terms: Vec<RawTerm>,
}

impl TryFrom<RawPolynomial> for Polynomial {
    type Error = Error;

    fn try_from(raw: RawPolynomial) -> Result<Self, Error> {
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("invalid coefficient {:?}", t.coeff)))?;
            let pairs = t
                .mono
                .iter()
                .map(|(name, &e)| Ok((name.parse::<Variable>()?, e)))
                .collect::<Result<Vec<_>, Error>>()?;
            terms.push((Monomial::from_pairs(pairs), c));
        }
        Ok(Polynomial::from_terms(terms))
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawPolynomial::deserialize(d)?;
        Polynomial::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl Polynomial {
    /// Canonical single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Polynomial, Error> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}
