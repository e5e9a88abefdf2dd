use crate::polyring::{parse_polynomial, VarContext, VariableMap};
use crate::scalars::FieldSpec;
use crate::stdbasis::{IdealData, Mode};

use super::{LiftError, Presentation, SelfMapOnA};

pub fn setup(
    names: &[&str],
    gens: &[&str],
    images: &[&str],
    mode: Mode,
) -> Result<SelfMapOnA, LiftError> {
    setup_over(FieldSpec::Rationals, names, gens, images, mode)
}

pub fn setup_over(
    field: FieldSpec,
    names: &[&str],
    gens: &[&str],
    images: &[&str],
    mode: Mode,
) -> Result<SelfMapOnA, LiftError> {
    let ctx = VarContext::new(field, names.iter().copied()).unwrap();
    let parse = |s: &&str| parse_polynomial(s, &ctx).unwrap();
    let ideal = IdealData::new(&ctx, gens.iter().map(parse).collect()).unwrap();
    let pres = Presentation::new(ideal, mode)?;
    let map = VariableMap::new(&ctx, images.iter().map(parse).collect())?;
    SelfMapOnA::new(pres, map)
}

