use std::path::Path;

use zetacont_core::derive::{derive_identity, IdentitySpec};
use zetacont_core::evalzeta::{admits, bits_for_digits, float_from_rational, BigComplex};
use zetacont_core::exactmath::{parse_decimal, to_f64, Rational};

use crate::error::{io_error, CliError};

/// Largest depth tried when `--p` is omitted.
pub const MAX_AUTO_DEPTH: u32 = 12;

/// Parses `5`, `1..12` (inclusive) or `2,4,6`.
pub fn parse_depths(text: &str) -> Result<Vec<u32>, CliError> {
    let bad = || CliError::Usage(format!("invalid depth list {text:?}; expected 5, 1..12 or 2,4,6"));
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        match part.split_once("..") {
            Some((a, b)) => {
                let a: u32 = a.trim().parse().map_err(|_| bad())?;
                let b: u32 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    Ok(out)
}

pub fn read_identities(path: &Path) -> Result<Vec<IdentitySpec>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    IdentitySpec::list_from_json(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Loads records without the consistency check so that `verify` can name
/// the offending coefficient itself.
pub fn read_identities_unchecked(path: &Path) -> Result<Vec<IdentitySpec>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    IdentitySpec::list_from_json_unchecked(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Where identities come from: derived on demand or loaded from a file.
pub struct Source {
    k_max: u32,
    loaded: Option<Vec<IdentitySpec>>,
}

impl Source {
    pub fn new(k_max: u32, file: Option<&Path>) -> Result<Self, CliError> {
        let loaded = file.map(read_identities).transpose()?;
        Ok(Source { k_max, loaded })
    }

    pub fn get(&self, p: u32) -> Result<IdentitySpec, CliError> {
        match &self.loaded {
            Some(specs) => specs
                .iter()
                .find(|s| s.p == p)
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("no p={p} identity in the loaded file"))),
            None => Ok(derive_identity(p, self.k_max)?),
        }
    }

    fn depths(&self) -> Vec<u32> {
        match &self.loaded {
            Some(specs) => {
                let mut ps: Vec<u32> = specs.iter().map(|s| s.p).collect();
                ps.sort_unstable();
                ps
            }
            None => (1..=MAX_AUTO_DEPTH).collect(),
        }
    }

    /// The smallest depth whose half-plane contains `re`; an odd depth is
    /// replaced by its even partner when both describe the same identity.
    pub fn choose(&self, re: f64) -> Result<IdentitySpec, CliError> {
        let depths = self.depths();
        for &p in &depths {
            let spec = self.get(p)?;
            if !admits(&spec, re) {
                continue;
            }
            if p % 2 == 1 && spec.extended_validity_re_gt.is_some() && depths.contains(&(p + 1)) {
                let partner = self.get(p + 1)?;
                if admits(&partner, re) {
                    return Ok(partner);
                }
            }
            return Ok(spec);
        }
        Err(CliError::Usage(format!("no available identity reaches Re s = {re}")))
    }

    pub fn resolve(&self, p: Option<u32>, re: f64) -> Result<IdentitySpec, CliError> {
        match p {
            Some(p) => self.get(p),
            None => self.choose(re),
        }
    }
}

/// Inclusive rectangular grid with exact rational coordinates.
pub struct Grid {
    pub re: Vec<Rational>,
    pub im: Vec<Rational>,
}

impl Grid {
    pub fn parse(re: [&str; 3], im: [&str; 3]) -> Result<Self, CliError> {
        Ok(Grid {
            re: axis(re)?,
            im: axis(im)?,
        })
    }

    /// Points in row order: real part outer, imaginary part inner.
    pub fn points(&self) -> Vec<(Rational, Rational)> {
        self.re
            .iter()
            .flat_map(|x| self.im.iter().map(move |y| (x.clone(), y.clone())))
            .collect()
    }
}

fn axis([min, max, step]: [&str; 3]) -> Result<Vec<Rational>, CliError> {
    let min = parse_decimal(min)?;
    let max = parse_decimal(max)?;
    let step = parse_decimal(step)?;
    if step <= Rational::from_integer(0.into()) {
        return Err(CliError::Usage(format!("grid step must be positive, got {step}")));
    }
    if max < min {
        return Err(CliError::Usage(format!("grid maximum {max} is below minimum {min}")));
    }
    let mut out = Vec::new();
    let mut x = min;
    while x <= max {
        out.push(x.clone());
        x += &step;
    }
    Ok(out)
}

pub fn complex_point(re: &Rational, im: &Rational, digits: u32) -> BigComplex {
    let prec = bits_for_digits(digits);
    BigComplex::new(float_from_rational(re, prec), float_from_rational(im, prec), digits)
}

/// Short decimal label for a grid coordinate.
pub fn label(r: &Rational) -> String {
    to_f64(r).to_string()
}
