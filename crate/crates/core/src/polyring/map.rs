use std::sync::Arc;

use super::polynomial::{Polynomial, VarContext};
use super::PolyError;

/// How a map acts on coefficients. Only the identity is representable: the
/// supported fields have no other endomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CoefficientAction {
    #[default]
    Identity,
}

/// K-algebra homomorphism given by the images of the source variables.
///
/// Images live in a common target context and have zero constant term, so
/// the map sends the maximal ideal into the maximal ideal. Source and target
/// coincide for self maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableMap {
    source: Arc<VarContext>,
    target: Arc<VarContext>,
    images: Vec<Polynomial>,
    action: CoefficientAction,
}

impl VariableMap {
    /// Self map of `ctx`.
    pub fn new(ctx: &Arc<VarContext>, images: Vec<Polynomial>) -> Result<Self, PolyError> {
        VariableMap::between(ctx, ctx, images)
    }

    pub fn between(
        source: &Arc<VarContext>,
        target: &Arc<VarContext>,
        images: Vec<Polynomial>,
    ) -> Result<Self, PolyError> {
        if images.len() != source.nvars() {
            return Err(PolyError::ImageCount {
                expected: source.nvars(),
                found: images.len(),
            });
        }
        if source.field() != target.field() {
            return Err(PolyError::ContextMismatch);
        }
        let mut rehomed = Vec::with_capacity(images.len());
        for (i, image) in images.into_iter().enumerate() {
            let image = image.with_context(target)?;
            if image.has_constant_term() {
                return Err(PolyError::ImageNotInMaximalIdeal {
                    variable: source.names()[i].clone(),
                });
            }
            rehomed.push(image);
        }
        Ok(VariableMap {
            source: source.clone(),
            target: target.clone(),
            images: rehomed,
            action: CoefficientAction::Identity,
        })
    }

    pub fn identity(ctx: &Arc<VarContext>) -> Self {
        VariableMap {
            source: ctx.clone(),
            target: ctx.clone(),
            images: (0..ctx.nvars()).map(|i| Polynomial::var(ctx, i)).collect(),
            action: CoefficientAction::Identity,
        }
    }

    pub fn source(&self) -> &Arc<VarContext> {
        &self.source
    }

    pub fn target(&self) -> &Arc<VarContext> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn image(&self, index: usize) -> &Polynomial {
        &self.images[index]
    }

    pub fn coefficient_action(&self) -> CoefficientAction {
        self.action
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, p)| *p == Polynomial::var(&self.target, i))
    }

    /// The image of `p` under the map.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, PolyError> {
        if **p.context() != *self.source {
            return Err(PolyError::ContextMismatch);
        }
        let n = self.source.nvars();
        // powers[i][k] = images[i]^k, filled on demand
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(&self.target)]; n];
        let mut acc = Polynomial::zero(&self.target);
        for (m, c) in p.terms() {
            let mut t = Polynomial::constant(&self.target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &self.images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
                if t.is_zero() {
                    break;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// `then ∘ self`: first apply `self`, then `then`.
    pub fn and_then(&self, then: &VariableMap) -> Result<VariableMap, PolyError> {
        if *self.target != *then.source {
            return Err(PolyError::ContextMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|p| then.apply(&p.with_context(&then.source)?))
            .collect::<Result<Vec<_>, _>>()?;
        VariableMap::between(&self.source, &then.target, images)
    }
}

/// Applies `map` to `p`.
pub fn substitute(p: &Polynomial, map: &VariableMap) -> Result<Polynomial, PolyError> {
    map.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;
    use crate::scalars::FieldSpec;

    fn ctx() -> Arc<VarContext> {
        VarContext::new(FieldSpec::Rationals, ["X", "Y"]).unwrap()
    }

    fn p(s: &str, c: &Arc<VarContext>) -> Polynomial {
        parse_polynomial(s, c).unwrap()
    }

    #[test]
    fn substitution_examples() {
        let c = ctx();
        let squares = VariableMap::new(&c, vec![p("X^2", &c), p("Y^2", &c)]).unwrap();
        assert_eq!(squares.apply(&p("X*Y", &c)).unwrap(), p("X^2*Y^2", &c));
        let id = VariableMap::identity(&c);
        assert!(id.is_identity());
        assert_eq!(id.apply(&p("X^3 - 2*Y + X*Y", &c)).unwrap(), p("X^3 - 2*Y + X*Y", &c));
        let swap = VariableMap::new(&c, vec![p("Y", &c), p("X", &c)]).unwrap();
        assert_eq!(swap.apply(&p("X^2 - Y", &c)).unwrap(), p("Y^2 - X", &c));
        let comp = squares.and_then(&swap).unwrap();
        assert_eq!(comp.images(), &[p("Y^2", &c), p("X^2", &c)]);
    }

    #[test]
    fn rejects_bad_images() {
        let c = ctx();
        assert!(matches!(
            VariableMap::new(&c, vec![p("X + 1", &c), p("Y", &c)]),
            Err(PolyError::ImageNotInMaximalIdeal { .. })
        ));
        assert!(matches!(
            VariableMap::new(&c, vec![p("X", &c)]),
            Err(PolyError::ImageCount { .. })
        ));
        let other = VarContext::new(FieldSpec::Rationals, ["Z"]).unwrap();
        let m = VariableMap::identity(&c);
        assert_eq!(m.apply(&p("Z", &other)), Err(PolyError::ContextMismatch));
    }
}
