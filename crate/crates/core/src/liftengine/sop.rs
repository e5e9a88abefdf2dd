use super::candidates::Sweep;
use super::{LiftError, PipelineConfig, Presentation};
use crate::polyring::{linear_rank_extend, Matrix, Polynomial};

/// A strong system of parameters `x₁, …, x_d` of `A` with its evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SopCertificate {
    pub elements: Vec<Polynomial>,
    /// `dim A/⟨x₁, …, xᵢ⟩` for `i = 1..d`, so `d-1, …, 0`.
    pub dimension_trace: Vec<i64>,
    /// Rank of the linear parts of the generators of `𝔞`.
    pub ideal_linear_rank: usize,
    /// Rank of those linear parts together with `x₁..xᵢ`, for `i = 1..d`.
    pub rank_trace: Vec<usize>,
    /// Candidates examined at each step, the accepted one included.
    pub attempts: Vec<usize>,
}

pub(crate) fn linear_rank(pres: &Presentation, polys: &[&Polynomial]) -> usize {
    let rows = polys.iter().map(|p| p.linear_coefficients()).collect();
    Matrix::from_rows(pres.context().field(), pres.nvars(), rows).rank()
}

/// Greedy parameter search over linear forms in the free coordinates.
///
/// Linear candidates suffice: a prime other than `𝔪` cannot contain a
/// space of linear forms spanning `𝔪/𝔪²`. A candidate is kept only when
/// the dimension drops by one and its linear part stays independent modulo
/// `𝔪² + 𝔞`.
pub fn strong_sop(pres: &Presentation, config: &PipelineConfig) -> Result<SopCertificate, LiftError> {
    let ctx = pres.context();
    let d = pres.dimension();
    let ideal_linear: Vec<Polynomial> = pres
        .ideal()
        .generators()
        .iter()
        .map(Polynomial::linear_part)
        .collect();
    let (base_rank, free) = linear_rank_extend(ctx, &ideal_linear);
    let all = |_: &[usize]| true;
    let sweep = Sweep {
        natoms: free.len(),
        field: ctx.field(),
        coeff_bound: config.coeff_bound,
        max_support: free.len(),
        normalize: true,
        admissible: &all,
        budget: config.sweep_budget,
    };
    let mut cert = SopCertificate {
        elements: Vec::new(),
        dimension_trace: Vec::new(),
        ideal_linear_rank: base_rank,
        rank_trace: Vec::new(),
        attempts: Vec::new(),
    };
    for step in 1..=d {
        let target = (d - step) as i64;
        let candidates = sweep.stream(config.seed, step as u64).map(|comb| {
            let mut p = Polynomial::zero(ctx);
            for (j, c) in comb {
                p = &p + &free[j].scale(&c);
            }
            p
        });
        let accepts = |cand: &Polynomial| {
            let mut rows: Vec<&Polynomial> = ideal_linear.iter().chain(&cert.elements).collect();
            rows.push(cand);
            if linear_rank(pres, &rows) != base_rank + step {
                return false;
            }
            let mut prefix = cert.elements.clone();
            prefix.push(cand.clone());
            pres.dimension_with(&prefix).ok() == Some(target)
        };
        match config.execution.search(candidates, config.max_attempts, accepts) {
            Ok((index, x)) => {
                cert.elements.push(x);
                cert.dimension_trace.push(target);
                cert.rank_trace.push(base_rank + step);
                cert.attempts.push(index + 1);
            }
            Err(attempts) => return Err(LiftError::SearchExhausted { step, attempts }),
        }
    }
    Ok(cert)
}
