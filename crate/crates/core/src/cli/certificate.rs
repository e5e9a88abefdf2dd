//! Plain-text lift certificates.
//!
//! Sections always appear in the order `LIFT`, `COORD_CHANGE`, `TRACE`,
//! `CHECKS`, `META`, one item per line:
//!
//! ```text
//! LIFT
//! X -> X^2
//! COORD_CHANGE
//! 1 0
//! TRACE
//! 1, 1, 0
//! CHECKS
//! commutation: pass
//! META
//! seed: 0
//! ```

use std::fmt::Write as _;
use std::sync::Arc;

use super::CliError;
use crate::liftengine::{CheckOutcome, LiftCertificate, VerificationReport};
use crate::polyring::{parse_polynomial, Matrix, Polynomial, VarContext, VariableMap};

const SECTIONS: [&str; 5] = ["LIFT", "COORD_CHANGE", "TRACE", "CHECKS", "META"];

pub fn check_line(check: &CheckOutcome, report: &VerificationReport) -> String {
    match (&check.witness, check.passed) {
        (_, true) if check.name == "m_primary" => match report.quotient_dimension {
            Some(k) => format!("{}: pass (quotient dimension {k})", check.name),
            None => format!("{}: pass", check.name),
        },
        (_, true) => format!("{}: pass", check.name),
        (Some(w), false) => format!("{}: fail ({w})", check.name),
        (None, false) => format!("{}: fail", check.name),
    }
}

pub fn render(cert: &LiftCertificate) -> String {
    let ctx = cert.lift.source();
    let mut out = String::new();
    out.push_str("LIFT\n");
    for (name, image) in ctx.names().iter().zip(cert.lift.images()) {
        writeln!(out, "{name} -> {image}").unwrap();
    }
    out.push_str("COORD_CHANGE\n");
    for row in cert.coordinate_change.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    out.push_str("TRACE\n");
    for step in &cert.trace {
        writeln!(out, "{}, {}, {}", step.t, step.dimension, step.adjuster).unwrap();
    }
    out.push_str("CHECKS\n");
    for check in &cert.report.checks {
        writeln!(out, "{}", check_line(check, &cert.report)).unwrap();
    }
    out.push_str("META\n");
    writeln!(out, "seed: {}", cert.seed).unwrap();
    writeln!(out, "attempts: {}", cert.attempts).unwrap();
    writeln!(out, "version: {}", env!("CARGO_PKG_VERSION")).unwrap();
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedCertificate {
    pub lift: VariableMap,
    pub coordinate_change: Matrix,
    /// `(t, dimension, adjuster)`.
    pub trace: Vec<(usize, i64, Polynomial)>,
    /// `(name, status)` as written.
    pub checks: Vec<(String, String)>,
    pub meta: Vec<(String, String)>,
}

fn err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Certificate {
        line,
        message: message.into(),
    }
}

fn key_value(line: usize, text: &str) -> Result<(String, String), CliError> {
    let (k, v) = text
        .split_once(':')
        .ok_or_else(|| err(line, format!("expected `name: value`, found `{text}`")))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

/// Reads a certificate against the problem's ring.
pub fn parse(text: &str, ctx: &Arc<VarContext>) -> Result<ParsedCertificate, CliError> {
    let mut bodies: Vec<Vec<(usize, &str)>> = vec![Vec::new(); SECTIONS.len()];
    let mut current: Option<usize> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.trim();
        if content.is_empty() {
            continue;
        }
        if let Some(s) = SECTIONS.iter().position(|s| *s == content) {
            if current.is_some_and(|c| s <= c) || (current.is_none() && s != 0) {
                return Err(err(line, format!("section `{content}` out of order")));
            }
            if current.map_or(0, |c| c + 1) != s {
                return Err(err(line, format!("missing section before `{content}`")));
            }
            current = Some(s);
            continue;
        }
        let Some(c) = current else {
            return Err(err(line, "content before the first section"));
        };
        bodies[c].push((line, content));
    }
    if current != Some(SECTIONS.len() - 1) {
        return Err(err(0, "certificate is missing sections"));
    }

    let mut images: Vec<Option<Polynomial>> = vec![None; ctx.nvars()];
    for &(line, text) in &bodies[0] {
        let (v, image) = text
            .split_once("->")
            .ok_or_else(|| err(line, format!("expected `variable -> image`, found `{text}`")))?;
        let i = ctx
            .index_of(v.trim())
            .ok_or_else(|| err(line, format!("unknown variable `{}`", v.trim())))?;
        let p = parse_polynomial(image.trim(), ctx).map_err(|e| err(line, e.to_string()))?;
        if images[i].replace(p).is_some() {
            return Err(err(line, format!("`{}` listed twice", v.trim())));
        }
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| err(0, format!("no lift for `{}`", ctx.names()[i]))))
        .collect::<Result<Vec<_>, _>>()?;
    let lift = VariableMap::new(ctx, images).map_err(|e| err(0, e.to_string()))?;

    let field = ctx.field();
    let mut rows = Vec::new();
    for &(line, text) in &bodies[1] {
        let row = text
            .split_whitespace()
            .map(|c| field.parse_scalar(c).map_err(|e| err(line, e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != ctx.nvars() {
            return Err(err(line, format!("expected {} entries", ctx.nvars())));
        }
        rows.push(row);
    }
    if rows.len() != ctx.nvars() {
        return Err(err(0, format!("coordinate change needs {} rows", ctx.nvars())));
    }
    let coordinate_change = Matrix::from_rows(field, ctx.nvars(), rows);

    let mut trace = Vec::new();
    for &(line, text) in &bodies[2] {
        let parts: Vec<&str> = text.splitn(3, ',').map(str::trim).collect();
        let [t, dim, adjuster] = parts.as_slice() else {
            return Err(err(line, "expected `t, dimension, adjuster`"));
        };
        let t = t.parse().map_err(|_| err(line, format!("bad step `{t}`")))?;
        let dim = dim.parse().map_err(|_| err(line, format!("bad dimension `{dim}`")))?;
        let adjuster = parse_polynomial(adjuster, ctx).map_err(|e| err(line, e.to_string()))?;
        trace.push((t, dim, adjuster));
    }

    let checks = bodies[3].iter().map(|&(l, t)| key_value(l, t)).collect::<Result<_, _>>()?;
    let meta = bodies[4].iter().map(|&(l, t)| key_value(l, t)).collect::<Result<_, _>>()?;
    Ok(ParsedCertificate {
        lift,
        coordinate_change,
        trace,
        checks,
        meta,
    })
}
