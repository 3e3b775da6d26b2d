use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use rayon::prelude::*;
use zetacont_core::derive::{derive_identity, IdentitySpec};
use zetacont_core::evalzeta::{eval_identity, format_float, BigComplex, EvalReport};

use crate::error::{io_error, CliError};
use crate::input::{complex_point, label, parse_depths, Grid, Source};
use crate::verify::{self, Outcome};
use crate::Format;

fn describe(spec: &IdentitySpec) -> String {
    let mut out = format!("p={}  k0={}  valid for Re s > {}", spec.p, spec.k0, spec.validity_re_gt);
    if let Some(ext) = &spec.extended_validity_re_gt {
        out += &format!(" (extended to Re s > {ext})");
    }
    out += &format!("\n  pole coefficient: {}", spec.pole_coefficient);
    out += &format!("\n  Q_{}(s) = {}", spec.p, spec.q_poly.display_in("s"));
    match &spec.closed_form {
        Some(c) => out += &format!("\n  r_k = {}", c.k_poly.display_in("k")),
        None => out += "\n  r_k: no closed form found",
    }
    out
}

pub fn derive(depths: &str, k_max: u32, out: Option<&Path>) -> Result<(), CliError> {
    let specs = parse_depths(depths)?
        .into_iter()
        .map(|p| derive_identity(p, k_max))
        .collect::<Result<Vec<_>, _>>()?;
    for spec in &specs {
        println!("{}", describe(spec));
    }
    if let Some(path) = out {
        std::fs::write(path, IdentitySpec::list_to_json(&specs)).map_err(|e| io_error(path, e))?;
        println!("wrote {} identities to {}", specs.len(), path.display());
    }
    Ok(())
}

pub fn eval(
    s: &str,
    p: Option<u32>,
    digits: u32,
    k_max: u32,
    identities: Option<&Path>,
    format: Format,
) -> Result<(), CliError> {
    let point = BigComplex::parse(s, digits)?;
    let source = Source::new(k_max, identities)?;
    let spec = source.resolve(p, point.to_f64_pair().0)?;
    let report = eval_identity(&spec, &point, digits)?;
    match format {
        Format::Json => println!("{}", report.to_json(&point)),
        Format::Text | Format::Csv => {
            println!("zeta({s}) = {}", report.value.to_decimal(digits as usize));
            println!(
                "p = {}, terms = {}, error estimate = {:.2e}",
                report.p_used, report.terms_used, report.error_estimate
            );
        }
    }
    Ok(())
}

struct Row {
    s_re: String,
    s_im: String,
    report: EvalReport,
    point: BigComplex,
}

pub fn table(
    grid: &Grid,
    p: Option<u32>,
    digits: u32,
    k_max: u32,
    identities: Option<&Path>,
    format: Format,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let source = Source::new(k_max, identities)?;
    // Resolved up front so the parallel section only evaluates.
    let jobs = grid
        .points()
        .into_iter()
        .map(|(re, im)| {
            let point = complex_point(&re, &im, digits);
            let spec = source.resolve(p, point.to_f64_pair().0)?;
            Ok((label(&re), label(&im), point, spec))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    // Indexed collect keeps grid order.
    let rows = jobs
        .into_par_iter()
        .map(|(s_re, s_im, point, spec)| {
            let report =
                eval_identity(&spec, &point, digits).map_err(|e| CliError::Usage(format!("s = {s_re}{s_im:+}i: {e}")))?;
            Ok(Row { s_re, s_im, report, point })
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let mut sink: Box<dyn Write> = match out {
        Some(path) => Box::new(std::fs::File::create(path).map_err(|e| io_error(path, e))?),
        None => Box::new(std::io::stdout().lock()),
    };
    let io = |e: std::io::Error| match out {
        Some(path) => io_error(path, e),
        None => CliError::Io(format!("stdout: {e}")),
    };
    let sig = digits as usize;
    match format {
        Format::Json => {
            let values: Vec<_> = rows.iter().map(|r| r.report.to_json(&r.point)).collect();
            let text = serde_json::to_string_pretty(&values).expect("JSON values serialize");
            writeln!(sink, "{text}").map_err(io)?;
        }
        Format::Csv | Format::Text => {
            let mut w = csv::Writer::from_writer(sink);
            let csv_err = |e: csv::Error| CliError::Io(format!("writing CSV: {e}"));
            w.write_record(["s_re", "s_im", "value_re", "value_im", "terms_used", "error_estimate"])
                .map_err(csv_err)?;
            for r in &rows {
                w.write_record([
                    r.s_re.clone(),
                    r.s_im.clone(),
                    format_float(r.report.value.re(), sig),
                    format_float(r.report.value.im(), sig),
                    r.report.terms_used.to_string(),
                    format!("{:.3e}", r.report.error_estimate),
                ])
                .map_err(csv_err)?;
            }
            w.flush().map_err(io)?;
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpecialCheck {
    Zeta0,
    Zetaprime0,
    Zeta2,
    #[value(name = "sum_identity", alias = "sum-identity")]
    SumIdentity,
    #[value(name = "trivial_zeros", alias = "trivial-zeros")]
    TrivialZeros,
}

fn depths_or(p: Option<u32>, default: impl IntoIterator<Item = u32>) -> Result<Vec<IdentitySpec>, CliError> {
    let depths: Vec<u32> = match p {
        Some(p) => vec![p],
        None => default.into_iter().collect(),
    };
    Ok(depths
        .into_iter()
        .map(|p| derive_identity(p, 64))
        .collect::<Result<Vec<_>, _>>()?)
}

pub fn special(check: SpecialCheck, p: Option<u32>, digits: u32) -> Result<(), CliError> {
    let outcome: Outcome = match check {
        SpecialCheck::Zeta0 => verify::zeta0(&depths_or(p, 2..=12)?, digits)?,
        SpecialCheck::Zetaprime0 => verify::zetaprime0(&depths_or(p, [2, 3])?, digits)?,
        SpecialCheck::Zeta2 => verify::zeta2(&depths_or(p, [5])?[0], digits)?,
        SpecialCheck::SumIdentity => verify::sum_identity(digits)?,
        SpecialCheck::TrivialZeros => verify::trivial_zeros(&depths_or(p, 2..=12)?, digits)?,
    };
    println!("{}", outcome.detail);
    if outcome.pass {
        Ok(())
    } else {
        Err(CliError::Verify(outcome.detail))
    }
}
