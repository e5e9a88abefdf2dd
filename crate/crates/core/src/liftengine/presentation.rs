use std::fmt;
use std::sync::Arc;

use super::LiftError;
use crate::invariants::{embedding_dimension, krull_dimension, krull_dimension_cached, InvariantError};
use crate::polyring::{MonomialOrder, PolyError, Polynomial, VarContext, VariableMap};
use crate::stdbasis::{BasisCache, IdealData, Mode};

/// `A = K⟦X⟧/𝔞` given by polynomial generators, with its dimension `d` and
/// embedding dimension `e` computed once at construction.
#[derive(Clone)]
pub struct Presentation {
    ideal: IdealData,
    mode: Mode,
    dimension: usize,
    embedding_dimension: usize,
    cache: Arc<BasisCache>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("ideal", &self.ideal)
            .field("mode", &self.mode)
            .field("dimension", &self.dimension)
            .field("embedding_dimension", &self.embedding_dimension)
            .finish()
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.ideal == other.ideal && self.mode == other.mode
    }
}

impl Presentation {
    /// Fails when a generator has a constant term, or is not homogeneous in
    /// graded mode.
    pub fn new(ideal: IdealData, mode: Mode) -> Result<Self, LiftError> {
        if let Some(g) = ideal.generators().iter().find(|g| g.has_constant_term()) {
            return Err(InvariantError::ConstantTerm(g.to_string()).into());
        }
        let cache = Arc::new(BasisCache::new());
        let report = krull_dimension_cached(&ideal, mode, &cache)?;
        let dimension = usize::try_from(report.dimension)
            .map_err(|_| LiftError::InternalAssertion("proper ideal with negative dimension".into()))?;
        let embedding_dimension = embedding_dimension(&ideal);
        Ok(Presentation {
            ideal,
            mode,
            dimension,
            embedding_dimension,
            cache,
        })
    }

    pub fn context(&self) -> &Arc<VarContext> {
        self.ideal.context()
    }

    pub fn ideal(&self) -> &IdealData {
        &self.ideal
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn nvars(&self) -> usize {
        self.context().nvars()
    }

    /// `d = dim A`.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// `e = dim_K 𝔪_A/𝔪_A²`.
    pub fn embedding_dimension(&self) -> usize {
        self.embedding_dimension
    }

    /// Canonical representative: the Gröbner normal form modulo `𝔞`.
    ///
    /// The global normal form is used in both modes. A local weak normal
    /// form is only determined up to a unit, which would not give a
    /// well-defined representative.
    pub fn representative(&self, f: &Polynomial) -> Polynomial {
        self.cache
            .basis(&self.ideal, MonomialOrder::DegRevLexGlobal)
            .normal_form(f)
    }

    /// Membership in `𝔞` (in the power series ring for local mode).
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.cache.basis(&self.ideal, self.mode.order()).contains(f)
    }

    /// Mode normal form of `f`; zero exactly when `f ∈ 𝔞`.
    pub fn residue(&self, f: &Polynomial) -> Polynomial {
        self.cache.basis(&self.ideal, self.mode.order()).normal_form(f)
    }

    /// `dim R/(𝔞 + ⟨extra⟩)`.
    pub fn dimension_with(&self, extra: &[Polynomial]) -> Result<i64, InvariantError> {
        Ok(krull_dimension(&self.ideal.extended(extra), self.mode)?.dimension)
    }

    /// `dim R/⟨polys⟩`, ignoring `𝔞`.
    pub fn ambient_dimension(&self, polys: &[Polynomial]) -> Result<i64, InvariantError> {
        let ideal = IdealData::new(self.context(), polys.to_vec()).expect("same context");
        Ok(krull_dimension(&ideal, self.mode)?.dimension)
    }
}

/// A self map `φ` of `A`, stored as representatives of the images of the
/// variables. Construction checks that `φ(𝔞) ⊆ 𝔞`.
#[derive(Debug, Clone, PartialEq)]
pub struct SelfMapOnA {
    presentation: Presentation,
    map: VariableMap,
    degree: Option<u32>,
}

impl SelfMapOnA {
    pub fn new(presentation: Presentation, map: VariableMap) -> Result<Self, LiftError> {
        let ctx = presentation.context();
        if map.source() != ctx || map.target() != ctx {
            return Err(PolyError::ContextMismatch.into());
        }
        let degree = if presentation.mode() == Mode::Graded {
            common_degree(&map)?
        } else {
            None
        };
        for g in presentation.ideal().generators() {
            let image = map.apply(g)?;
            if !presentation.contains(&image) {
                return Err(LiftError::IllDefinedMap {
                    generator: g.to_string(),
                    image: image.to_string(),
                });
            }
        }
        Ok(SelfMapOnA {
            presentation,
            map,
            degree,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn map(&self) -> &VariableMap {
        &self.map
    }

    /// Common degree of the nonzero images in graded mode.
    pub fn degree(&self) -> Option<u32> {
        self.degree
    }

    /// `dim R/(𝔞 + ⟨φ(X₁), …, φ(Xₙ)⟩)`.
    pub fn image_dimension(&self) -> i64 {
        self.presentation
            .dimension_with(self.map.images())
            .expect("images were validated at construction")
    }
}

fn common_degree(map: &VariableMap) -> Result<Option<u32>, LiftError> {
    let names = map.source().names();
    let mut degree = None;
    for (i, image) in map.images().iter().enumerate() {
        if image.is_zero() {
            continue;
        }
        if !image.is_homogeneous() {
            return Err(LiftError::NotGraded(format!(
                "image of {} is not homogeneous",
                names[i]
            )));
        }
        let d = image.total_degree().expect("nonzero");
        match degree {
            None => degree = Some(d),
            Some(prev) if prev != d => {
                return Err(LiftError::NotGraded(format!(
                    "image of {} has degree {d}, expected {prev}",
                    names[i]
                )))
            }
            _ => {}
        }
    }
    Ok(degree)
}

/// `φ` is finite iff `𝔞 + ⟨φ(X₁), …, φ(Xₙ)⟩` is `𝔪`-primary; the residue
/// field extension is trivial since both sides have residue field `K`.
pub fn is_finite_map(m: &SelfMapOnA) -> bool {
    m.image_dimension() == 0
}
