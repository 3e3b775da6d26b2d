//! Reference identities for depths 1 through 12, embedded at build time.

use std::sync::OnceLock;

use num_traits::One;
use serde::Deserialize;

use super::engine::DEFAULT_K_MAX;
use super::identity::{ClosedForm, IdentitySpec, SeriesTerm};
use crate::error::{Result, ZetaError};
use crate::exactmath::{int, parse_rational, Polynomial, Rational};

const TABLE: &str = include_str!("../../data/reference_identities.toml");

pub const REFERENCE_DEPTHS: std::ops::RangeInclusive<u32> = 1..=12;

#[derive(Debug, Deserialize)]
struct Table {
    identity: Vec<Record>,
}

#[derive(Debug, Deserialize)]
struct Record {
    p: Vec<u32>,
    k0: u32,
    q_numerator: Vec<String>,
    q_denominator: String,
    series_scale: String,
    series_factors: Vec<Vec<i64>>,
}

#[derive(Debug)]
struct Entry {
    depths: Vec<u32>,
    k0: u32,
    q_poly: Polynomial,
    k_poly: Polynomial,
}

fn parse_all(text: &str) -> Result<Vec<Entry>> {
    let table: Table = toml::from_str(text).map_err(|e| ZetaError::Parse(e.to_string()))?;
    table
        .identity
        .into_iter()
        .map(|rec| {
            let numerator = rec
                .q_numerator
                .iter()
                .map(|c| parse_rational(c))
                .collect::<Result<Vec<_>>>()?;
            let q_poly = Polynomial::new(numerator).scale(&(Rational::one() / parse_rational(&rec.q_denominator)?));
            let k_poly = rec
                .series_factors
                .iter()
                .fold(Polynomial::constant(parse_rational(&rec.series_scale)?), |acc, f| {
                    &acc * &Polynomial::from_integers(f)
                });
            Ok(Entry {
                depths: rec.p,
                k0: rec.k0,
                q_poly,
                k_poly,
            })
        })
        .collect()
}

fn entries() -> &'static [Entry] {
    static ENTRIES: OnceLock<Vec<Entry>> = OnceLock::new();
    ENTRIES.get_or_init(|| parse_all(TABLE).expect("embedded reference table is well formed"))
}

/// The reference identity for depth `p` with coefficients tabulated up to
/// [`DEFAULT_K_MAX`]. Even depths `p ≥ 4` return the record of `p − 1`.
pub fn reference_identity(p: u32) -> Result<IdentitySpec> {
    reference_identity_to(p, DEFAULT_K_MAX)
}

pub fn reference_identity_to(p: u32, k_max: u32) -> Result<IdentitySpec> {
    if !REFERENCE_DEPTHS.contains(&p) {
        return Err(ZetaError::Domain(format!(
            "reference identities exist for p in 1..=12, got {p}"
        )));
    }
    let entry = entries()
        .iter()
        .find(|e| e.depths.contains(&p))
        .ok_or_else(|| ZetaError::Internal(format!("reference table lacks p={p}")))?;
    let terms = (entry.k0..=k_max)
        .map(|k| SeriesTerm {
            k,
            r: entry.k_poly.eval(&int(i64::from(k))),
        })
        .collect();
    let paired = entry.depths.len() > 1 && entry.depths[0] == p;
    Ok(IdentitySpec {
        p,
        k0: entry.k0,
        pole_coefficient: Rational::one(),
        q_poly: entry.q_poly.clone(),
        terms,
        closed_form: Some(ClosedForm {
            k_poly: entry.k_poly.clone(),
        }),
        validity_re_gt: int(1 - i64::from(p)),
        extended_validity_re_gt: paired.then(|| int(-i64::from(p))),
    })
}
