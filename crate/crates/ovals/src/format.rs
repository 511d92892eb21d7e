//! Curve files and JSON reports.
//!
//! The curve format is line-oriented UTF-8 text: `#` starts a comment
//! (whole-line or trailing), `a0 <decimal>` sets the mean term exactly
//! once, and `h <n> <a> <b>` adds the harmonic of order `n ≥ 1`, each
//! order at most once. Serialization writes 17 significant digits, which
//! is enough for `f64` to round-trip exactly — golden files stay diffable
//! *and* lossless.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::inequalities::DeficitReport;
use crate::support::FourierSupport;

/// Parses the curve file format.
///
/// # Errors
///
/// Malformed, duplicate, or unknown directives — and non-finite numbers —
/// are [`Error::Parse`] with the 1-based line number; a missing `a0` is
/// reported at end of input.
///
/// ```
/// let p = ovals::parse_curve("# an oval\na0 5\nh 2 0 1\n")?;
/// assert_eq!(p.a0(), 5.0);
/// assert_eq!(p.coefficient(2), (0.0, 1.0));
/// # Ok::<(), ovals::Error>(())
/// ```
pub fn parse_curve(text: &str) -> Result<FourierSupport> {
    let mut a0: Option<f64> = None;
    let mut harmonics: Vec<(u32, f64, f64)> = Vec::new();
    let mut line_count = 0;
    for (idx, raw) in text.lines().enumerate() {
        line_count = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let mut fields = line.split_whitespace();
        let Some(directive) = fields.next() else {
            continue;
        };
        match directive {
            "a0" => {
                if a0.is_some() {
                    return Err(Error::parse(line_count, "duplicate a0 directive"));
                }
                a0 = Some(number_field(fields.next(), line_count, "a0 value")?);
                end_of_line(fields.next(), line_count)?;
            }
            "h" => {
                let n = fields
                    .next()
                    .ok_or_else(|| Error::parse(line_count, "missing harmonic order"))?;
                let n: u32 = n.parse().map_err(|_| {
                    Error::parse(line_count, format!("malformed harmonic order `{n}`"))
                })?;
                if n == 0 {
                    return Err(Error::parse(line_count, "harmonic order must be ≥ 1"));
                }
                if harmonics.iter().any(|&(m, _, _)| m == n) {
                    return Err(Error::parse(
                        line_count,
                        format!("duplicate harmonic of order {n}"),
                    ));
                }
                let a = number_field(fields.next(), line_count, "cosine coefficient")?;
                let b = number_field(fields.next(), line_count, "sine coefficient")?;
                end_of_line(fields.next(), line_count)?;
                harmonics.push((n, a, b));
            }
            other => {
                return Err(Error::parse(
                    line_count,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }
    let Some(a0) = a0 else {
        return Err(Error::parse(line_count + 1, "missing a0 directive"));
    };
    Ok(FourierSupport::new(a0, harmonics).expect("entries are validated line by line"))
}

fn number_field(token: Option<&str>, line: usize, what: &str) -> Result<f64> {
    let token = token.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    let value: f64 = token
        .parse()
        .map_err(|_| Error::parse(line, format!("malformed {what} `{token}`")))?;
    if !value.is_finite() {
        return Err(Error::parse(line, format!("non-finite {what} `{token}`")));
    }
    Ok(value)
}

fn end_of_line(token: Option<&str>, line: usize) -> Result<()> {
    match token {
        None => Ok(()),
        Some(extra) => Err(Error::parse(line, format!("trailing field `{extra}`"))),
    }
}

/// Serializes a curve so that [`parse_curve`] reproduces it exactly.
pub fn serialize_curve(p: &FourierSupport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# p(φ) = {p}");
    let _ = writeln!(out, "a0 {:.16e}", p.a0());
    for h in p.harmonics() {
        let _ = writeln!(out, "h {} {:.16e} {:.16e}", h.n, h.a, h.b);
    }
    out
}

/// Renders a [`DeficitReport`] as JSON with a fixed key order and 17
/// significant digits, so identical reports serialize byte-identically.
///
/// Top-level keys, in order: `L`, `F`, `A`, `F_e`, `delta`, `delta2_sq`,
/// `bounds`, `slacks`, `constant_width`, `classification`, `residual`.
/// The constant-width entries of `bounds` and `slacks` appear only when
/// `constant_width` is true.
pub fn report_json(report: &DeficitReport) -> String {
    let mut bounds: Vec<(&str, f64)> = vec![
        ("lower_general", report.bounds.lower_general),
        ("lower_groemer", report.bounds.lower_groemer),
        ("upper_hurwitz", report.bounds.upper_hurwitz),
        ("pedal_gap_upper", report.bounds.pedal_gap_upper),
    ];
    if let Some(v) = report.bounds.lower_cw {
        bounds.push(("lower_cw", v));
    }
    if let Some(v) = report.bounds.lower_groemer_cw {
        bounds.push(("lower_groemer_cw", v));
    }

    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"L\": {:.16e},", report.length);
    let _ = writeln!(out, "  \"F\": {:.16e},", report.area);
    let _ = writeln!(out, "  \"A\": {:.16e},", report.pedal_area);
    let _ = writeln!(out, "  \"F_e\": {:.16e},", report.evolute_area);
    let _ = writeln!(out, "  \"delta\": {:.16e},", report.deficit);
    let _ = writeln!(out, "  \"delta2_sq\": {:.16e},", report.delta2_sq);
    write_object(&mut out, "bounds", &bounds);
    write_object(&mut out, "slacks", &report.slacks.entries());
    let _ = writeln!(out, "  \"constant_width\": {},", report.constant_width);
    let _ = writeln!(
        out,
        "  \"classification\": \"{}\",",
        report.classification.case.label()
    );
    let _ = writeln!(
        out,
        "  \"residual\": {:.16e}",
        report.classification.residual
    );
    out.push('}');
    out.push('\n');
    out
}

fn write_object(out: &mut String, name: &str, entries: &[(&str, f64)]) {
    let _ = writeln!(out, "  \"{name}\": {{");
    for (i, (key, value)) in entries.iter().enumerate() {
        let comma = if i + 1 < entries.len() { "," } else { "" };
        let _ = writeln!(out, "    \"{key}\": {value:.16e}{comma}");
    }
    out.push_str("  },\n");
}
