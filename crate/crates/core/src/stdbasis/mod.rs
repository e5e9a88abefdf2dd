//! Gröbner bases for the global order and standard bases for the local order.

mod cache;
mod reduce;

pub use cache::BasisCache;
pub use reduce::{
    divide, mora_division, mora_normal_form, normal_form, s_polynomial, Division, LocalDivision,
};

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::polyring::{Monomial, MonomialOrder, PolyError, Polynomial, VarContext};

/// Which ambient ring a computation lives in: the graded polynomial ring
/// with its global order, or the local ring at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    Graded,
    #[default]
    Local,
}

impl Mode {
    pub fn order(self) -> MonomialOrder {
        match self {
            Mode::Graded => MonomialOrder::DegRevLexGlobal,
            Mode::Local => MonomialOrder::DegRevLexLocal,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Graded => "graded",
            Mode::Local => "local",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graded" => Ok(Mode::Graded),
            "local" => Ok(Mode::Local),
            other => Err(format!("unknown mode `{other}` (expected `local` or `graded`)")),
        }
    }
}

/// Generators of an ideal; zero generators are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealData {
    ctx: Arc<VarContext>,
    generators: Vec<Polynomial>,
}

impl IdealData {
    pub fn new(ctx: &Arc<VarContext>, generators: Vec<Polynomial>) -> Result<Self, PolyError> {
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.with_context(ctx))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IdealData {
            ctx: ctx.clone(),
            generators,
        })
    }

    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        IdealData {
            ctx: ctx.clone(),
            generators: Vec::new(),
        }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// `self + ⟨extra⟩`.
    pub fn extended<'a>(&self, extra: impl IntoIterator<Item = &'a Polynomial>) -> IdealData {
        let mut generators = self.generators.clone();
        generators.extend(extra.into_iter().filter(|p| !p.is_zero()).cloned());
        IdealData {
            ctx: self.ctx.clone(),
            generators,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn in_maximal_ideal(&self) -> bool {
        self.generators.iter().all(|g| !g.has_constant_term())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Groebner,
    Standard,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputedBasis {
    pub ideal: IdealData,
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial>,
    pub kind: BasisKind,
}

impl ComputedBasis {
    /// Global: fully reduced normal form. Local: Mora weak normal form.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        match self.kind {
            BasisKind::Groebner => normal_form(f, &self.elements, self.order),
            BasisKind::Standard => mora_normal_form(f, &self.elements, self.order),
        }
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|g| g.leading_monomial(self.order).cloned())
            .collect()
    }
}

/// Basis for whichever kind of order is given.
pub fn compute_basis(ideal: &IdealData, order: MonomialOrder) -> ComputedBasis {
    if order.is_global() {
        buchberger(ideal, order)
    } else {
        standard_basis(ideal, order)
    }
}

struct PairQueue {
    pending: Vec<(usize, usize)>,
}

impl PairQueue {
    /// Normal strategy: smallest lcm degree, then smallest lcm in degrevlex,
    /// then smallest indices.
    fn pop(&mut self, lcm: impl Fn(usize, usize) -> Monomial) -> Option<(usize, usize)> {
        let best = self
            .pending
            .iter()
            .enumerate()
            .min_by(|(_, &(a, b)), (_, &(c, d))| {
                let (l1, l2) = (lcm(a, b), lcm(c, d));
                l1.cmp(&l2).then((a, b).cmp(&(c, d)))
            })
            .map(|(k, _)| k)?;
        Some(self.pending.swap_remove(best))
    }

    fn contains(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.pending.contains(&key)
    }
}

fn monic_generators(ideal: &IdealData, order: MonomialOrder) -> Vec<Polynomial> {
    let mut seen = HashSet::new();
    ideal
        .generators
        .iter()
        .map(|g| g.monic(order))
        .filter(|g| seen.insert(g.clone()))
        .collect()
}

/// Drops elements whose leading monomial is divisible by an earlier-kept or
/// other element's leading monomial.
fn minimize(elements: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    let lms: Vec<Monomial> = elements
        .iter()
        .map(|g| g.leading_monomial(order).expect("nonzero").clone())
        .collect();
    elements
        .into_iter()
        .enumerate()
        .filter(|(i, _)| {
            !lms.iter().enumerate().any(|(j, m)| {
                j != *i && m.divides(&lms[*i]) && (m != &lms[*i] || j < *i)
            })
        })
        .map(|(_, g)| g)
        .collect()
}

fn sort_by_leading(elements: &mut [Polynomial], order: MonomialOrder) {
    elements.sort_by(|a, b| {
        let (x, y) = (
            a.leading_monomial(order).expect("nonzero"),
            b.leading_monomial(order).expect("nonzero"),
        );
        order.compare(y, x)
    });
}

/// Reduced Gröbner basis for a global order, with the coprime and chain
/// criteria.
pub fn buchberger(ideal: &IdealData, order: MonomialOrder) -> ComputedBasis {
    assert!(order.is_global(), "Buchberger needs a global order");
    let mut basis = monic_generators(ideal, order);
    if basis.iter().any(|g| g.leading_monomial(order).is_some_and(Monomial::is_one)) {
        basis = vec![Polynomial::one(ideal.context())];
    }
    let mut leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).unwrap().clone())
        .collect();
    let mut queue = PairQueue {
        pending: (0..basis.len())
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect(),
    };
    while let Some((i, j)) = queue.pop(|a, b| leads[a].lcm(&leads[b])) {
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let lcm = leads[i].lcm(&leads[j]);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&lcm)
                && !queue.contains(i, k)
                && !queue.contains(j, k)
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let h = normal_form(&s, &basis, order);
        if h.is_zero() {
            continue;
        }
        let h = h.monic(order);
        let k = basis.len();
        leads.push(h.leading_monomial(order).unwrap().clone());
        basis.push(h);
        queue.pending.extend((0..k).map(|i| (i, k)));
    }
    let minimal = minimize(basis, order);
    let mut reduced = minimal.clone();
    for i in 0..reduced.len() {
        let others: Vec<Polynomial> = reduced
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        reduced[i] = normal_form(&reduced[i], &others, order);
    }
    sort_by_leading(&mut reduced, order);
    ComputedBasis {
        ideal: ideal.clone(),
        order,
        elements: reduced,
        kind: BasisKind::Groebner,
    }
}

/// Standard basis for a local order (Buchberger's loop driven by Mora's
/// weak normal form). The result is minimal; tails are not reduced.
pub fn standard_basis(ideal: &IdealData, order: MonomialOrder) -> ComputedBasis {
    assert!(!order.is_global(), "standard bases need a local order");
    let mut basis = monic_generators(ideal, order);
    if basis.iter().any(Polynomial::has_constant_term) {
        basis = vec![Polynomial::one(ideal.context())];
    }
    let mut leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).unwrap().clone())
        .collect();
    let mut queue = PairQueue {
        pending: (0..basis.len())
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect(),
    };
    while let Some((i, j)) = queue.pop(|a, b| leads[a].lcm(&leads[b])) {
        let s = s_polynomial(&basis[i], &basis[j], order);
        if s.is_zero() {
            continue;
        }
        let h = mora_normal_form(&s, &basis, order);
        if h.is_zero() {
            continue;
        }
        let h = h.monic(order);
        let k = basis.len();
        leads.push(h.leading_monomial(order).unwrap().clone());
        basis.push(h);
        queue.pending.extend((0..k).map(|i| (i, k)));
    }
    let mut elements = minimize(basis, order);
    sort_by_leading(&mut elements, order);
    ComputedBasis {
        ideal: ideal.clone(),
        order,
        elements,
        kind: BasisKind::Standard,
    }
}

/// Ideal membership in the polynomial ring (graded) or in the local ring at
/// the origin (local).
pub fn is_member(f: &Polynomial, ideal: &IdealData, mode: Mode) -> bool {
    compute_basis(ideal, mode.order()).contains(f)
}
