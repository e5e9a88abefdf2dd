use super::SelfMapOnA;
use crate::invariants::{krull_dimension, quotient_k_dimension};
use crate::polyring::{Polynomial, VariableMap};
use crate::stdbasis::IdealData;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Why the check failed.
    pub witness: Option<String>,
}

impl CheckOutcome {
    fn pass(name: &'static str) -> Self {
        CheckOutcome {
            name,
            passed: true,
            witness: None,
        }
    }

    fn fail(name: &'static str, witness: String) -> Self {
        CheckOutcome {
            name,
            passed: false,
            witness: Some(witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// `commutation`, `ideal_preserved` and `m_primary`, in that order.
    pub checks: Vec<CheckOutcome>,
    /// Normal forms of `ψ(Xᵢ) - rep φ(Xᵢ)` modulo `𝔞`.
    pub residues: Vec<Polynomial>,
    /// `dim_K R/⟨ψ(X₁), …, ψ(Xₙ)⟩` when finite.
    pub quotient_dimension: Option<usize>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub const CHECK_NAMES: [&str; 3] = ["commutation", "ideal_preserved", "m_primary"];

/// Three independent checks of a proposed lift `ψ` of `φ`:
/// `ψ(Xᵢ) ≡ φ(Xᵢ)` modulo `𝔞`, `ψ(𝔞) ⊆ 𝔞`, and `⟨ψ(X₁), …, ψ(Xₙ)⟩`
/// `𝔪`-primary.
pub fn verify_lift(m: &SelfMapOnA, psi: &VariableMap) -> VerificationReport {
    let pres = m.presentation();
    let ctx = pres.context();
    if psi.source() != ctx || psi.target() != ctx {
        let why = "lift is over a different ring".to_string();
        return VerificationReport {
            checks: CHECK_NAMES.iter().map(|n| CheckOutcome::fail(n, why.clone())).collect(),
            residues: Vec::new(),
            quotient_dimension: None,
        };
    }
    let names = ctx.names();

    let mut residues = Vec::new();
    let mut commutation = CheckOutcome::pass(CHECK_NAMES[0]);
    for (i, (lifted, image)) in psi.images().iter().zip(m.map().images()).enumerate() {
        let rep = pres.representative(image);
        let residue = pres.residue(&(lifted - &rep));
        if !residue.is_zero() && commutation.passed {
            commutation = CheckOutcome::fail(
                CHECK_NAMES[0],
                format!("{}: {} not in ideal", names[i], &rep - lifted),
            );
        }
        residues.push(residue);
    }

    let mut preserved = CheckOutcome::pass(CHECK_NAMES[1]);
    for g in pres.ideal().generators() {
        let image = psi.apply(g).expect("same context");
        if !pres.contains(&image) {
            preserved = CheckOutcome::fail(CHECK_NAMES[1], format!("{g} maps to {image}, not in ideal"));
            break;
        }
    }

    let images = IdealData::new(ctx, psi.images().to_vec()).expect("same context");
    let (primary, quotient_dimension) = match krull_dimension(&images, pres.mode()) {
        Ok(r) if r.dimension == 0 => (
            CheckOutcome::pass(CHECK_NAMES[2]),
            quotient_k_dimension(&images, pres.mode()).ok().flatten(),
        ),
        Ok(r) => (
            CheckOutcome::fail(CHECK_NAMES[2], format!("images generate an ideal of dimension {}", r.dimension)),
            None,
        ),
        Err(e) => (CheckOutcome::fail(CHECK_NAMES[2], e.to_string()), None),
    };

    VerificationReport {
        checks: vec![commutation, preserved, primary],
        residues,
        quotient_dimension,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liftengine::testutil::setup;
    use crate::polyring::parse_polynomial;
    use crate::stdbasis::Mode;

    fn psi(m: &SelfMapOnA, images: &[&str]) -> VariableMap {
        let ctx = m.presentation().context();
        VariableMap::new(ctx, images.iter().map(|s| parse_polynomial(s, ctx).unwrap()).collect()).unwrap()
    }

    #[test]
    fn examples() {
        let m = setup(&["X", "Y", "Z"], &["Z"], &["X^2", "Y^2", "0"], Mode::Local).unwrap();
        let report = verify_lift(&m, &psi(&m, &["X^2", "Y^2", "Z"]));
        assert!(report.all_passed());
        assert_eq!(report.quotient_dimension, Some(4));
        assert!(report.residues.iter().all(Polynomial::is_zero));

        let tampered = verify_lift(&m, &psi(&m, &["X^2", "Y^2", "0"]));
        assert_eq!(
            tampered.checks.iter().map(|c| c.passed).collect::<Vec<_>>(),
            [true, true, false]
        );

        let m = setup(&["X", "Y"], &["X*Y"], &["X^2", "Y^2"], Mode::Local).unwrap();
        let report = verify_lift(&m, &VariableMap::identity(m.presentation().context()));
        assert!(!report.checks[0].passed);
        assert_eq!(report.checks[0].witness.as_deref(), Some("X: X^2 - X not in ideal"));
    }
}
