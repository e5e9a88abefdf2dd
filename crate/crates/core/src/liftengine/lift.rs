use super::sop::linear_rank;
use super::{
    coset_avoid, is_finite_map, strong_sop, verify_lift, LiftError, PipelineConfig, Presentation,
    SelfMapOnA, SopCertificate, VerificationReport,
};
use crate::polyring::{linear_rank_extend, Matrix, Monomial, Polynomial, VariableMap};
use crate::stdbasis::{IdealData, Mode};

/// One step of the construction, in the original coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub t: usize,
    /// `dim R/⟨f₁, …, f_t⟩`.
    pub dimension: i64,
    /// `f_t = ψ(ℓ_t)` for the `t`-th new coordinate `ℓ_t`.
    pub element: Polynomial,
    /// The element of `𝔞` added to the representative; zero if none.
    pub adjuster: Polynomial,
    pub attempts: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftCertificate {
    /// `ψ`, with `ψ(Xᵢ)` the lift of `φ(Xᵢ)`.
    pub lift: VariableMap,
    /// Row `i` holds the coefficients of the new coordinate `ℓᵢ`.
    pub coordinate_change: Matrix,
    pub inverse: Matrix,
    pub sop: SopCertificate,
    pub trace: Vec<TraceStep>,
    pub report: VerificationReport,
    pub seed: u64,
    /// Candidates examined over all searches.
    pub attempts: usize,
}

impl LiftCertificate {
    pub fn commutation_residues(&self) -> &[Polynomial] {
        &self.report.residues
    }

    pub fn quotient_dimension(&self) -> Option<usize> {
        self.report.quotient_dimension
    }
}

fn linear_form(pres: &Presentation, row: &[crate::scalars::Scalar]) -> Polynomial {
    Polynomial::from_linear_coefficients(pres.context(), row)
}

/// New coordinates: the parameters, then free coordinates completing them
/// to a minimal generating set of `𝔪_A`, then coordinate variables up to a
/// basis of all linear forms.
fn coordinate_change(pres: &Presentation, sop: &SopCertificate) -> Result<(Matrix, Matrix), LiftError> {
    let ctx = pres.context();
    let ideal_linear: Vec<Polynomial> = pres
        .ideal()
        .generators()
        .iter()
        .map(Polynomial::linear_part)
        .collect();
    let (_, free) = linear_rank_extend(ctx, &ideal_linear);
    let mut rows: Vec<Polynomial> = sop.elements.clone();
    for v in &free {
        let mut with: Vec<&Polynomial> = ideal_linear.iter().chain(&rows).collect();
        let before = linear_rank(pres, &with);
        with.push(v);
        if linear_rank(pres, &with) > before {
            rows.push(v.clone());
        }
    }
    let (_, completion) = linear_rank_extend(ctx, &rows);
    rows.extend(completion);
    let matrix = Matrix::from_rows(
        ctx.field(),
        ctx.nvars(),
        rows.iter().map(Polynomial::linear_coefficients).collect(),
    );
    let inverse = matrix
        .inverse()
        .ok_or_else(|| LiftError::InternalAssertion("coordinate change is singular".into()))?;
    Ok((matrix, inverse))
}

/// Smallest `D` with `Xᵢ^D ∈ 𝔞` for every `i`; `𝔞` must be `𝔪`-primary.
fn nilpotency_degree(pres: &Presentation) -> u32 {
    let n = pres.nvars();
    (1..)
        .find(|&d| {
            (0..n).all(|i| {
                let mut e = vec![0; n];
                e[i] = d;
                pres.contains(&Polynomial::term(pres.context(), Monomial::new(e), pres.context().field().one()))
            })
        })
        .expect("m-primary ideal")
}

/// Lift a finite self map `φ` of `A` to a finite self map `ψ` of the
/// ambient ring with `ψ(Xᵢ) ≡ φ(Xᵢ)` modulo `𝔞`.
///
/// In coordinates where `ℓ₁, …, ℓ_d` is a strong system of parameters, the
/// first `d` images are the canonical representatives, which generate an
/// ideal of height `d`. Each later representative is moved inside its coset
/// of `𝔞` until it cuts the dimension by one more. The result is
/// self-verified before it is returned.
pub fn lift_map(m: &SelfMapOnA, config: &PipelineConfig) -> Result<LiftCertificate, LiftError> {
    if !is_finite_map(m) {
        return Err(LiftError::NotFinite {
            dimension: m.image_dimension(),
        });
    }
    let pres = m.presentation();
    let ctx = pres.context();
    let n = pres.nvars();
    let d = pres.dimension();
    let sop = strong_sop(pres, config)?;
    let (matrix, inverse) = coordinate_change(pres, &sop)?;

    // α: new coordinates to old, β = α⁻¹
    let alpha = VariableMap::new(ctx, matrix.rows().iter().map(|r| linear_form(pres, r)).collect())?;
    let beta = VariableMap::new(ctx, inverse.rows().iter().map(|r| linear_form(pres, r)).collect())?;
    let moved_ideal = IdealData::new(
        ctx,
        pres.ideal()
            .generators()
            .iter()
            .map(|g| beta.apply(g))
            .collect::<Result<_, _>>()?,
    )?;
    let moved = Presentation::new(moved_ideal, pres.mode())?;
    let mut lifts: Vec<Polynomial> = alpha
        .images()
        .iter()
        .map(|l| Ok(moved.representative(&beta.apply(&m.map().apply(l)?)?)))
        .collect::<Result<_, LiftError>>()?;

    let height = moved.ambient_dimension(&lifts[..d])?;
    if height != (n - d) as i64 {
        return Err(LiftError::InternalAssertion(format!(
            "the first {d} representatives cut out dimension {height}, expected {}",
            n - d
        )));
    }
    let mut trace = Vec::with_capacity(n);
    for t in 1..=d {
        trace.push(TraceStep {
            t,
            dimension: moved.ambient_dimension(&lifts[..t])?,
            element: alpha.apply(&lifts[t - 1])?,
            adjuster: Polynomial::zero(ctx),
            attempts: 0,
        });
    }
    let degree = match (pres.mode(), m.degree()) {
        (Mode::Graded, None) => Some(nilpotency_degree(pres)),
        (_, degree) => degree,
    };
    for t in d..n {
        let target = (n - t - 1) as i64;
        let found = coset_avoid(&lifts[t], &moved, &lifts[..t], target, degree, config)?;
        lifts[t] = found.element;
        trace.push(TraceStep {
            t: t + 1,
            dimension: target,
            element: alpha.apply(&lifts[t])?,
            adjuster: alpha.apply(&found.adjuster)?,
            attempts: found.attempts,
        });
    }

    // ψ(Xⱼ) = Σᵢ inverse[j][i] · α(fᵢ)
    let moved_back: Vec<Polynomial> = lifts.iter().map(|f| alpha.apply(f)).collect::<Result<_, _>>()?;
    let images = inverse
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .zip(&moved_back)
                .fold(Polynomial::zero(ctx), |acc, (c, f)| &acc + &f.scale(c))
        })
        .collect();
    let lift = VariableMap::new(ctx, images)?;
    let report = verify_lift(m, &lift);
    if !report.all_passed() {
        return Err(LiftError::InternalAssertion(format!(
            "constructed lift failed verification: {:?}",
            report.checks
        )));
    }
    let attempts = sop.attempts.iter().sum::<usize>() + trace.iter().map(|s| s.attempts).sum::<usize>();
    Ok(LiftCertificate {
        lift,
        coordinate_change: matrix,
        inverse,
        sop,
        trace,
        report,
        seed: config.seed,
        attempts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liftengine::testutil::setup;

    fn images(cert: &LiftCertificate) -> Vec<String> {
        cert.lift.images().iter().map(ToString::to_string).collect()
    }

    fn lift(names: &[&str], gens: &[&str], phi: &[&str], mode: Mode) -> LiftCertificate {
        let m = setup(names, gens, phi, mode).unwrap();
        lift_map(&m, &PipelineConfig::default()).unwrap()
    }

    #[test]
    fn plane_example() {
        let cert = lift(&["X", "Y", "Z"], &["Z"], &["X^2", "Y^2", "0"], Mode::Local);
        assert_eq!(images(&cert), ["X^2", "Y^2", "Z"]);
        assert!(cert.coordinate_change.is_identity());
        assert_eq!(cert.quotient_dimension(), Some(4));
        let dims: Vec<i64> = cert.trace.iter().map(|s| s.dimension).collect();
        assert_eq!(dims, [2, 1, 0]);
        assert_eq!(cert.trace[2].adjuster.to_string(), "Z");
    }

    #[test]
    fn identity_and_artinian() {
        let cert = lift(&["X", "Y"], &[], &["X", "Y"], Mode::Local);
        assert!(cert.lift.is_identity());
        let cert = lift(&["X"], &["X^2"], &["0"], Mode::Local);
        assert_eq!(images(&cert), ["X^2"]);
        let cert = lift(&["X"], &["X^2"], &["0"], Mode::Graded);
        assert_eq!(images(&cert), ["X^2"]);
    }

    #[test]
    fn needs_coordinate_change() {
        let cert = lift(&["X", "Y"], &["X - Y^2"], &["X^2", "Y^2"], Mode::Local);
        assert!(!cert.coordinate_change.is_identity());
        assert!(cert.coordinate_change.mul(&cert.inverse).is_identity());
        assert!(cert.report.all_passed());

        let cert = lift(&["X", "Y"], &["X*Y"], &["X^2", "Y^2"], Mode::Local);
        assert_eq!(cert.sop.elements[0].to_string(), "X + Y");
        assert!(cert.report.all_passed());
    }

    #[test]
    fn refuses_non_finite() {
        let m = setup(&["X", "Y"], &["X*Y"], &["X^2", "0"], Mode::Local).unwrap();
        assert_eq!(
            lift_map(&m, &PipelineConfig::default()),
            Err(LiftError::NotFinite { dimension: 1 })
        );
    }
}
