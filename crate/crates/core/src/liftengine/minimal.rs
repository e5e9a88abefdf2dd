use std::sync::Arc;

use super::{LiftError, Presentation};
use crate::polyring::{Monomial, Polynomial, VarContext, VariableMap};
use crate::stdbasis::IdealData;

/// A presentation in `e` variables with ideal inside `𝔪²`, isomorphic to
/// the input.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimalPresentation {
    pub presentation: Presentation,
    /// Old ring to new ring: eliminated variables go to their solved form.
    pub forward: VariableMap,
    /// New ring to old ring: each remaining variable to itself.
    pub backward: VariableMap,
    /// Names of the eliminated variables, in elimination order.
    pub eliminated: Vec<String>,
}

fn linear_coefficient(p: &Polynomial, j: usize) -> Option<crate::scalars::Scalar> {
    p.coefficient(&Monomial::var(p.context().nvars(), j))
        .filter(|c| !c.is_zero())
        .cloned()
}

/// Gauss-Jordan elimination on the generators, driven by their linear
/// parts. Row operations keep the ideal unchanged.
fn echelon(mut gens: Vec<Polynomial>, n: usize) -> Vec<Polynomial> {
    let mut row = 0;
    for col in 0..n {
        let Some(r) = (row..gens.len()).find(|&r| linear_coefficient(&gens[r], col).is_some()) else {
            continue;
        };
        gens.swap(r, row);
        let c = linear_coefficient(&gens[row], col).expect("pivot");
        gens[row] = gens[row].scale(&c.inv().expect("nonzero"));
        for other in 0..gens.len() {
            if other == row {
                continue;
            }
            if let Some(c) = linear_coefficient(&gens[other], col) {
                gens[other] = &gens[other] - &gens[row].scale(&c);
            }
        }
        row += 1;
    }
    gens.retain(|g| !g.is_zero());
    gens
}

/// `Xⱼ` occurs in `g` only through its linear term.
fn occurs_linearly_only(g: &Polynomial, j: usize) -> bool {
    g.terms()
        .all(|(m, _)| m.exponents()[j] == 0 || m.as_variable() == Some(j))
}

/// Solve generators with a linear term for that variable and substitute,
/// until no generator has a linear part.
///
/// An elimination needs a generator `c·Xⱼ + h` with `h` free of `Xⱼ`; when
/// every linear variable also occurs in higher terms (as in `X - X²`) no
/// polynomial substitution exists and the error names the obstruction.
pub fn minimal_presentation(pres: &Presentation) -> Result<MinimalPresentation, LiftError> {
    let original = pres.context().clone();
    let mut ctx: Arc<VarContext> = original.clone();
    let mut gens: Vec<Polynomial> = pres.ideal().generators().to_vec();
    let mut forward = VariableMap::identity(&original);
    let mut eliminated = Vec::new();
    loop {
        gens = echelon(gens, ctx.nvars());
        let linear: Vec<&Polynomial> = gens.iter().filter(|g| !g.linear_part().is_zero()).collect();
        let Some(first) = linear.first() else {
            break;
        };
        let choice = linear.iter().enumerate().find_map(|(gi, g)| {
            (0..ctx.nvars())
                .find(|&j| linear_coefficient(g, j).is_some() && occurs_linearly_only(g, j))
                .map(|j| (gi, j))
        });
        let Some((gi, j)) = choice else {
            let j = (0..ctx.nvars())
                .find(|&j| linear_coefficient(first, j).is_some())
                .expect("linear part");
            return Err(LiftError::NoPolynomialElimination {
                variable: ctx.names()[j].clone(),
                generator: first.to_string(),
            });
        };
        let g = linear[gi].clone();
        let c = linear_coefficient(&g, j).expect("chosen");
        // Xⱼ = -(g - c·Xⱼ)/c
        let rest = &g - &Polynomial::var(&ctx, j).scale(&c);
        let solved = rest.scale(&(-&c.inv().expect("nonzero")));

        let next = ctx.without(j);
        let reindex = |k: usize| -> Polynomial {
            match k.cmp(&j) {
                std::cmp::Ordering::Less => Polynomial::var(&next, k),
                std::cmp::Ordering::Greater => Polynomial::var(&next, k - 1),
                std::cmp::Ordering::Equal => Polynomial::zero(&next),
            }
        };
        let project = VariableMap::between(&ctx, &next, (0..ctx.nvars()).map(reindex).collect())?;
        let mut images: Vec<Polynomial> = (0..ctx.nvars()).map(reindex).collect();
        images[j] = project.apply(&solved)?;
        let step = VariableMap::between(&ctx, &next, images)?;

        gens = gens
            .iter()
            .filter(|h| **h != g)
            .map(|h| step.apply(h))
            .collect::<Result<Vec<_>, _>>()?;
        gens.retain(|h| !h.is_zero());
        forward = forward.and_then(&step)?;
        eliminated.push(ctx.names()[j].clone());
        ctx = next;
    }
    let backward = VariableMap::between(
        &ctx,
        &original,
        ctx.names()
            .iter()
            .map(|name| Polynomial::var(&original, original.index_of(name).expect("kept variable")))
            .collect(),
    )?;
    let presentation = Presentation::new(IdealData::new(&ctx, gens)?, pres.mode())?;
    Ok(MinimalPresentation {
        presentation,
        forward,
        backward,
        eliminated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liftengine::testutil::setup;
    use crate::stdbasis::Mode;

    fn minimal(names: &[&str], gens: &[&str]) -> MinimalPresentation {
        let m = setup(names, gens, names, Mode::Local).unwrap();
        minimal_presentation(m.presentation()).unwrap()
    }

    fn shown(map: &VariableMap) -> Vec<String> {
        map.images().iter().map(ToString::to_string).collect()
    }

    fn assert_round_trips(pres: &Presentation, mp: &MinimalPresentation) {
        let there_and_back = mp.forward.and_then(&mp.backward).unwrap();
        for (i, img) in there_and_back.images().iter().enumerate() {
            assert!(pres.contains(&(img - &Polynomial::var(pres.context(), i))));
        }
        let back_and_there = mp.backward.and_then(&mp.forward).unwrap();
        let new_ctx = mp.presentation.context();
        for (i, img) in back_and_there.images().iter().enumerate() {
            assert!(mp.presentation.contains(&(img - &Polynomial::var(new_ctx, i))));
        }
    }

    #[test]
    fn examples() {
        let mp = minimal(&["X1", "X2"], &["X1 - X2^2"]);
        assert_eq!(mp.presentation.context().names(), ["X2"]);
        assert!(mp.presentation.ideal().generators().is_empty());
        assert_eq!(shown(&mp.forward), ["X2^2", "X2"]);

        let mp = minimal(&["X1", "X2"], &["X1*X2"]);
        assert_eq!(mp.presentation.nvars(), 2);
        assert!(mp.forward.is_identity());
        assert_eq!(shown(&mp.backward), ["X1", "X2"]);

        let mp = minimal(&["X1", "X2"], &["X1 + X2"]);
        assert_eq!(mp.presentation.nvars(), 1);
        assert!(mp.presentation.ideal().generators().is_empty());
        assert_eq!(shown(&mp.forward), ["-X2", "X2"]);
    }

    #[test]
    fn several_eliminations_round_trip() {
        let names = ["X", "Y", "Z", "W"];
        let gens = ["X - Y*Z", "Y + Z^2 + W^3", "Z*W - W^3"];
        let m = setup(&names, &gens, &names, Mode::Local).unwrap();
        let pres = m.presentation();
        let mp = minimal_presentation(pres).unwrap();
        assert_eq!(mp.presentation.nvars(), pres.embedding_dimension());
        for g in mp.presentation.ideal().generators() {
            assert!(g.order_of_vanishing().unwrap() >= 2);
        }
        assert_round_trips(pres, &mp);
    }

    #[test]
    fn reports_obstruction() {
        let m = setup(&["X"], &["X - X^2"], &["X"], Mode::Local).unwrap();
        assert!(matches!(
            minimal_presentation(m.presentation()),
            Err(LiftError::NoPolynomialElimination { .. })
        ));
    }
}
