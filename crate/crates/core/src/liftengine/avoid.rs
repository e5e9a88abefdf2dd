use super::candidates::Sweep;
use super::{LiftError, PipelineConfig, Presentation};
use crate::polyring::{Monomial, Polynomial};
use crate::stdbasis::Mode;

/// An element `u + a` of the coset `u + 𝔞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Avoidance {
    pub element: Polynomial,
    /// `a`, an explicit combination of the generators of `𝔞`.
    pub adjuster: Polynomial,
    pub attempts: usize,
}

struct Atom {
    poly: Polynomial,
    degree: u32,
}

/// Products `m·g` of monomials with generators.
///
/// Local mode uses every multiplier of degree at most `cap`. Graded mode
/// keeps products homogeneous: of degree exactly `degree` when one is
/// required, otherwise of degree `degree` first and then any degree
/// reachable with multipliers up to `cap`.
fn atoms(pres: &Presentation, cap: u32, degree: Option<u32>, exact: bool) -> Vec<Atom> {
    let n = pres.nvars();
    let mut out: Vec<(u32, u32, Monomial, usize, Polynomial)> = Vec::new();
    for (gi, g) in pres.ideal().generators().iter().enumerate() {
        let gdeg = g.total_degree().expect("nonzero generator");
        let multipliers = match (pres.mode(), degree) {
            (Mode::Graded, Some(d)) if exact => {
                if d < gdeg {
                    continue;
                }
                Monomial::all_of_degree(n, d - gdeg)
            }
            _ => Monomial::all_up_to_degree(n, cap),
        };
        for m in multipliers {
            let p = g.mul_term(&m, &pres.context().field().one());
            let total = if pres.mode() == Mode::Graded { gdeg + m.degree() } else { 0 };
            let rank = u32::from(degree.is_some_and(|d| d != total));
            out.push((rank, total, m, gi, p));
        }
    }
    // earlier multipliers first, larger monomials first within a degree
    out.sort_by(|a, b| {
        (a.0, a.1, a.2.degree(), a.3)
            .cmp(&(b.0, b.1, b.2.degree(), b.3))
            .then_with(|| b.2.cmp(&a.2))
    });
    out.into_iter()
        .map(|(_, total, _, _, poly)| Atom { poly, degree: total })
        .collect()
}

/// Replace `u` by `u + a` with `a ∈ 𝔞` so that `dim R/⟨fixed, u + a⟩`
/// equals `target_dim`.
///
/// `a = 0` is tried first. Adjusters after that are combinations of
/// products `m·g` with small monomial multipliers. `degree` is the degree
/// every image must have in graded mode, if known. Requires
/// `⟨fixed⟩ + 𝔞` to be `𝔪`-primary, which guarantees a suitable `a`
/// exists.
pub fn coset_avoid(
    u: &Polynomial,
    pres: &Presentation,
    fixed: &[Polynomial],
    target_dim: i64,
    degree: Option<u32>,
    config: &PipelineConfig,
) -> Result<Avoidance, LiftError> {
    if pres.dimension_with(fixed)? != 0 {
        return Err(LiftError::InternalAssertion(
            "coset avoidance needs the fixed elements and the ideal to be m-primary".into(),
        ));
    }
    let ctx = pres.context();
    let step = fixed.len() + 1;
    let graded = pres.mode() == Mode::Graded;
    let degree = if graded && !u.is_zero() { u.total_degree() } else { degree };
    let atoms = atoms(pres, config.adjuster_degree_cap, degree, graded && !u.is_zero());
    let same_degree = |support: &[usize]| {
        !graded || support.iter().all(|&i| atoms[i].degree == atoms[support[0]].degree)
    };
    let sweep = Sweep {
        natoms: atoms.len(),
        field: ctx.field(),
        coeff_bound: config.coeff_bound,
        max_support: 2,
        normalize: u.is_zero(),
        admissible: &same_degree,
        budget: config.sweep_budget,
    };
    let adjusters = std::iter::once(Polynomial::zero(ctx)).chain(
        sweep.stream(config.seed, (1 << 32) | step as u64).map(|comb| {
            let mut a = Polynomial::zero(ctx);
            for (i, c) in comb {
                a = &a + &atoms[i].poly.scale(&c);
            }
            a
        }),
    );
    let accepts = |a: &Polynomial| {
        let mut all = fixed.to_vec();
        all.push(u + a);
        pres.ambient_dimension(&all).ok() == Some(target_dim)
    };
    match config.execution.search(adjusters, config.max_attempts, accepts) {
        Ok((index, adjuster)) => Ok(Avoidance {
            element: u + &adjuster,
            adjuster,
            attempts: index + 1,
        }),
        Err(attempts) => Err(LiftError::SearchExhausted { step, attempts }),
    }
}
