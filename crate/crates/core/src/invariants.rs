//! Ideal invariants: leading ideals, Krull dimension, colength, embedding dimension.

use thiserror::Error;

use crate::polyring::{linear_rank_extend, Monomial};
use crate::stdbasis::{BasisCache, ComputedBasis, IdealData, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("graded mode needs homogeneous generators; `{0}` is not")]
    NotHomogeneous(String),
    #[error("local mode needs generators in the maximal ideal; `{0}` has a constant term")]
    ConstantTerm(String),
}

/// Monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Keeps only minimal generators, in first-seen order.
    pub fn new(nvars: usize, generators: impl IntoIterator<Item = Monomial>) -> Self {
        let all: Vec<Monomial> = generators.into_iter().collect();
        let mut minimal: Vec<Monomial> = Vec::new();
        for (i, m) in all.iter().enumerate() {
            let redundant = all.iter().enumerate().any(|(j, other)| {
                j != i && other.divides(m) && (other != m || j < i)
            });
            if !redundant {
                minimal.push(m.clone());
            }
        }
        MonomialIdeal {
            nvars,
            generators: minimal,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    /// For each variable, the smallest `a` with `Xi^a` a generator.
    pub fn pure_powers(&self) -> Vec<Option<u32>> {
        (0..self.nvars)
            .map(|i| {
                self.generators
                    .iter()
                    .filter(|g| g.support().all(|j| j == i) && !g.is_one())
                    .map(|g| g.exponents()[i])
                    .min()
            })
            .collect()
    }
}

/// Dimension of `K[X]/⟨m⟩` with a witnessing independent variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialDimension {
    /// `-1` for the unit ideal.
    pub dimension: i64,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub ideal: IdealData,
    pub mode: Mode,
    pub dimension: i64,
    pub witness: Vec<usize>,
}

impl DimensionReport {
    pub fn witness_names(&self) -> Vec<&str> {
        let names = self.ideal.context().names();
        self.witness.iter().map(|&i| names[i].as_str()).collect()
    }
}

pub fn leading_ideal(basis: &ComputedBasis) -> MonomialIdeal {
    MonomialIdeal::new(basis.ideal.context().nvars(), basis.leading_monomials())
}

pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                current = Some(next);
                break;
            }
        }
        Some(out)
    })
}

/// Largest variable set supporting no generator; ties go to the
/// lexicographically first set.
pub fn monomial_dimension(m: &MonomialIdeal) -> MonomialDimension {
    if m.is_unit() {
        return MonomialDimension {
            dimension: -1,
            witness: Vec::new(),
        };
    }
    let supports: Vec<u64> = m
        .generators
        .iter()
        .map(|g| g.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    for k in (0..=m.nvars).rev() {
        for set in combinations(m.nvars, k) {
            let mask = set.iter().fold(0u64, |acc, &i| acc | (1 << i));
            if supports.iter().all(|&s| s & !mask != 0) {
                return MonomialDimension {
                    dimension: k as i64,
                    witness: set,
                };
            }
        }
    }
    unreachable!("the empty set is independent for a proper ideal")
}

fn validate(ideal: &IdealData, mode: Mode) -> Result<(), InvariantError> {
    for g in ideal.generators() {
        match mode {
            Mode::Graded if !g.is_homogeneous() => {
                return Err(InvariantError::NotHomogeneous(g.to_string()))
            }
            Mode::Local if g.has_constant_term() => {
                return Err(InvariantError::ConstantTerm(g.to_string()))
            }
            _ => {}
        }
    }
    Ok(())
}

pub fn krull_dimension(ideal: &IdealData, mode: Mode) -> Result<DimensionReport, InvariantError> {
    krull_dimension_cached(ideal, mode, &BasisCache::new())
}

/// Dimension of the graded ring `K[X]/I` or of the localization at the
/// origin, read off the leading ideal of a Gröbner or standard basis.
pub fn krull_dimension_cached(
    ideal: &IdealData,
    mode: Mode,
    cache: &BasisCache,
) -> Result<DimensionReport, InvariantError> {
    validate(ideal, mode)?;
    let basis = cache.basis(ideal, mode.order());
    let md = monomial_dimension(&leading_ideal(&basis));
    Ok(DimensionReport {
        ideal: ideal.clone(),
        mode,
        dimension: md.dimension,
        witness: md.witness,
    })
}

pub fn is_m_primary(ideal: &IdealData, mode: Mode) -> Result<bool, InvariantError> {
    is_m_primary_cached(ideal, mode, &BasisCache::new())
}

pub fn is_m_primary_cached(
    ideal: &IdealData,
    mode: Mode,
    cache: &BasisCache,
) -> Result<bool, InvariantError> {
    Ok(krull_dimension_cached(ideal, mode, cache)?.dimension == 0)
}

/// Number of standard monomials; `None` when the quotient is infinite
/// dimensional.
pub fn quotient_k_dimension(ideal: &IdealData, mode: Mode) -> Result<Option<usize>, InvariantError> {
    quotient_k_dimension_cached(ideal, mode, &BasisCache::new())
}

pub fn quotient_k_dimension_cached(
    ideal: &IdealData,
    mode: Mode,
    cache: &BasisCache,
) -> Result<Option<usize>, InvariantError> {
    validate(ideal, mode)?;
    let lead = leading_ideal(&cache.basis(ideal, mode.order()));
    if lead.is_unit() {
        return Ok(Some(0));
    }
    let Some(bounds) = lead.pure_powers().into_iter().collect::<Option<Vec<u32>>>() else {
        return Ok(None);
    };
    Ok(Some(standard_monomials_in_box(&lead, &bounds).len()))
}

/// Monomials outside `lead` with `exponent[i] < bounds[i]`.
pub fn standard_monomials_in_box(lead: &MonomialIdeal, bounds: &[u32]) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = vec![0u32; bounds.len()];
    if bounds.contains(&0) {
        return out;
    }
    loop {
        let m = Monomial::new(e.clone());
        if !lead.contains(&m) {
            out.push(m);
        }
        let mut i = 0;
        loop {
            if i == e.len() {
                return out;
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

/// `dim_K m/(m² + I)` for `I` inside the maximal ideal: the number of
/// variables minus the rank of the generators' linear parts.
pub fn embedding_dimension(ideal: &IdealData) -> usize {
    let ctx = ideal.context();
    let linear: Vec<_> = ideal.generators().iter().map(|g| g.linear_part()).collect();
    let (rank, _) = linear_rank_extend(ctx, &linear);
    ctx.nvars() - rank
}
