//! Line-oriented problem files.
//!
//! ```text
//! # comments run to the end of the line
//! field Q            # or: field F 101
//! ring X Y Z
//! ideal: Z           # generators separated by `;`, may be empty
//! map: X -> X^2; Y -> Y^2; Z -> 0
//! mode: local        # or: graded
//! ```

use std::sync::Arc;

use super::CliError;
use crate::liftengine::{Presentation, SelfMapOnA};
use crate::polyring::{parse_polynomial, Polynomial, VarContext, VariableMap};
use crate::scalars::FieldSpec;
use crate::stdbasis::{IdealData, Mode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub field: FieldSpec,
    pub variables: Vec<String>,
    pub ideal: Vec<String>,
    /// `(variable, image)` pairs, in file order.
    pub map: Option<Vec<(String, String)>>,
    pub mode: Option<Mode>,
    /// Line of each section, for error messages.
    lines: Lines,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Lines {
    ring: usize,
    ideal: usize,
    map: usize,
}

fn err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

fn items(text: &str) -> Vec<String> {
    text.split(';').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut field = None;
        let mut variables = None;
        let mut ideal = None;
        let mut map = None;
        let mut mode = None;
        let mut lines = Lines::default();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (keyword, rest) = content
                .split_once(|c: char| c == ':' || c.is_whitespace())
                .unwrap_or((content, ""));
            let rest = rest.trim_start_matches(':').trim();
            match keyword {
                "field" => {
                    let words: Vec<&str> = rest.split_whitespace().collect();
                    field = Some(match words.as_slice() {
                        ["Q"] => FieldSpec::Rationals,
                        ["F", p] => {
                            let p: u64 = p.parse().map_err(|_| err(line, format!("bad prime `{p}`")))?;
                            FieldSpec::prime(p).map_err(|e| err(line, e.to_string()))?
                        }
                        _ => return Err(err(line, "expected `field Q` or `field F <prime>`")),
                    });
                }
                "ring" => {
                    variables = Some(rest.split_whitespace().map(String::from).collect());
                    lines.ring = line;
                }
                "ideal" => {
                    ideal = Some(items(rest));
                    lines.ideal = line;
                }
                "map" => {
                    let pairs = items(rest)
                        .iter()
                        .map(|item| {
                            let (v, image) = item
                                .split_once("->")
                                .ok_or_else(|| err(line, format!("expected `variable -> image`, found `{item}`")))?;
                            Ok((v.trim().to_string(), image.trim().to_string()))
                        })
                        .collect::<Result<Vec<_>, CliError>>()?;
                    map = Some(pairs);
                    lines.map = line;
                }
                "mode" => mode = Some(rest.parse::<Mode>().map_err(|e| err(line, e))?),
                other => return Err(err(line, format!("unknown section `{other}`"))),
            }
        }
        Ok(ProblemFile {
            field: field.ok_or_else(|| err(0, "missing `field` line"))?,
            variables: variables.ok_or_else(|| err(0, "missing `ring` line"))?,
            ideal: ideal.unwrap_or_default(),
            map,
            mode,
            lines,
        })
    }

    pub fn context(&self) -> Result<Arc<VarContext>, CliError> {
        VarContext::new(self.field, self.variables.iter().cloned()).map_err(|e| err(self.lines.ring, e.to_string()))
    }

    fn poly(&self, ctx: &Arc<VarContext>, text: &str, line: usize) -> Result<Polynomial, CliError> {
        parse_polynomial(text, ctx).map_err(|e| err(line, format!("`{text}`: {e}")))
    }

    /// `override_mode` wins over the file's `mode` line.
    pub fn presentation(&self, override_mode: Option<Mode>) -> Result<Presentation, CliError> {
        let ctx = self.context()?;
        let gens = self
            .ideal
            .iter()
            .map(|g| self.poly(&ctx, g, self.lines.ideal))
            .collect::<Result<Vec<_>, _>>()?;
        let ideal = IdealData::new(&ctx, gens).map_err(|e| err(self.lines.ideal, e.to_string()))?;
        let mode = override_mode.or(self.mode).unwrap_or_default();
        Ok(Presentation::new(ideal, mode)?)
    }

    /// Images parsed in the ring's context, in variable order.
    pub fn map_images(&self, ctx: &Arc<VarContext>) -> Result<Vec<Polynomial>, CliError> {
        let pairs = self.map.as_ref().ok_or_else(|| err(0, "missing `map` line"))?;
        let line = self.lines.map;
        let mut images: Vec<Option<Polynomial>> = vec![None; ctx.nvars()];
        for (v, text) in pairs {
            let i = ctx.index_of(v).ok_or_else(|| err(line, format!("unknown variable `{v}`")))?;
            if images[i].is_some() {
                return Err(err(line, format!("`{v}` mapped twice")));
            }
            images[i] = Some(self.poly(ctx, text, line)?);
        }
        images
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| err(line, format!("no image for `{}`", ctx.names()[i]))))
            .collect()
    }

    pub fn self_map(&self, override_mode: Option<Mode>) -> Result<SelfMapOnA, CliError> {
        let pres = self.presentation(override_mode)?;
        let images = self.map_images(pres.context())?;
        let map = VariableMap::new(pres.context(), images).map_err(|e| err(self.lines.map, e.to_string()))?;
        Ok(SelfMapOnA::new(pres, map)?)
    }
}
