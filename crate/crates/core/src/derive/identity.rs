use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Result, ZetaError};
use crate::exactmath::{int, Polynomial, Rational};

/// One series coefficient: `r_k` multiplies `Poch(s, k)/(k+1)! · (ζ(s+k) − 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub k: u32,
    #[serde(with = "rational_text")]
    pub r: Rational,
}

/// Polynomial in `k` reproducing every stored `r_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub k_poly: Polynomial,
}

/// A depth-`p` identity in canonical form
///
/// ```text
/// ζ(s) = c/(s−1) + Q_p(s) + Σ_{k=k0}^{∞} r_k · Poch(s,k)/(k+1)! · (ζ(s+k) − 1),   Re s > bound
/// ```
///
/// Coefficients `r_k` are stored for consecutive `k` from `k0` on; entries
/// below `k0` are zero and not stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySpec {
    pub p: u32,
    pub k0: u32,
    #[serde(with = "rational_text")]
    pub pole_coefficient: Rational,
    pub q_poly: Polynomial,
    pub terms: Vec<SeriesTerm>,
    pub closed_form: Option<ClosedForm>,
    #[serde(with = "rational_text")]
    pub validity_re_gt: Rational,
    #[serde(with = "optional_rational_text")]
    pub extended_validity_re_gt: Option<Rational>,
}

impl IdentitySpec {
    /// Largest stored `k`.
    pub fn k_max(&self) -> u32 {
        self.terms.last().map_or(self.k0.saturating_sub(1), |t| t.k)
    }

    /// Stored `r_k`, zero below `k0`, `None` past the stored range.
    pub fn stored_coefficient(&self, k: u32) -> Option<Rational> {
        if k < self.k0 {
            return Some(Rational::zero());
        }
        self.terms.get((k - self.k0) as usize).map(|t| t.r.clone())
    }

    /// `r_k` from the stored table, falling back to the closed form past it.
    pub fn coefficient(&self, k: u32) -> Option<Rational> {
        self.stored_coefficient(k).or_else(|| {
            self.closed_form
                .as_ref()
                .map(|cf| cf.k_poly.eval(&int(i64::from(k))))
        })
    }

    /// Real-part bound actually in force: the extended one when present.
    pub fn evaluation_bound(&self) -> &Rational {
        self.extended_validity_re_gt
            .as_ref()
            .unwrap_or(&self.validity_re_gt)
    }

    /// Checks the structural invariants; used after deserialization.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(ZetaError::Parse(format!("identity p={}: {msg}", self.p)));
        if self.p == 0 {
            return fail("p must be positive".into());
        }
        for (i, t) in self.terms.iter().enumerate() {
            let expected = self.k0 + i as u32;
            if t.k != expected {
                return fail(format!("terms not consecutive: expected k={expected}, found k={}", t.k));
            }
        }
        if let Some(first) = self.terms.first() {
            if first.r.is_zero() {
                return fail(format!("r_k0 at k0={} must be nonzero", self.k0));
            }
        }
        if let Some(cf) = &self.closed_form {
            if let Some(t) = self.terms.iter().find(|t| cf.k_poly.eval(&int(i64::from(t.k))) != t.r) {
                return fail(format!("closed form disagrees with stored r_k at k={}", t.k));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("identity serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: IdentitySpec =
            serde_json::from_str(text).map_err(|e| ZetaError::Parse(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn list_to_json(specs: &[IdentitySpec]) -> String {
        serde_json::to_string_pretty(specs).expect("identity serialization is infallible")
    }

    /// Reads either a single record or an array of records.
    pub fn list_from_json(text: &str) -> Result<Vec<Self>> {
        let specs = Self::list_from_json_unchecked(text)?;
        specs.iter().try_for_each(IdentitySpec::validate)?;
        Ok(specs)
    }

    /// As [`IdentitySpec::list_from_json`] without [`IdentitySpec::validate`],
    /// for callers that diagnose inconsistent records themselves.
    pub fn list_from_json_unchecked(text: &str) -> Result<Vec<Self>> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| ZetaError::Parse(e.to_string()))?;
        if value.is_array() {
            serde_json::from_value(value)
        } else {
            serde_json::from_value(value).map(|s| vec![s])
        }
        .map_err(|e| ZetaError::Parse(e.to_string()))
    }

    pub fn has_unit_pole(&self) -> bool {
        self.pole_coefficient.is_one()
    }
}

mod rational_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exactmath::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

mod optional_rational_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exactmath::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| parse_rational(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}
