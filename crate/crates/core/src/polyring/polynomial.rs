use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::PolyError;
use crate::scalars::{FieldSpec, Scalar};

/// Ordered variable names together with the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
    field: FieldSpec,
}

impl VarContext {
    pub fn new<S: Into<String>>(
        field: FieldSpec,
        names: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Self>, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(PolyError::BadVariableName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(PolyError::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(VarContext { names, field }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Context with the variable at `index` removed.
    pub fn without(&self, index: usize) -> Arc<Self> {
        let mut names = self.names.clone();
        names.remove(index);
        Arc::new(VarContext {
            names,
            field: self.field,
        })
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Sparse polynomial with terms kept in global degrevlex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: Arc<VarContext>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Arc<VarContext>, c: Scalar) -> Self {
        Polynomial::term(ctx, Monomial::one(ctx.nvars()), c)
    }

    pub fn one(ctx: &Arc<VarContext>) -> Self {
        Polynomial::constant(ctx, ctx.field().one())
    }

    pub fn var(ctx: &Arc<VarContext>, index: usize) -> Self {
        Polynomial::term(ctx, Monomial::var(ctx.nvars(), index), ctx.field().one())
    }

    pub fn term(ctx: &Arc<VarContext>, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.nvars(), ctx.nvars(), "monomial arity");
        assert_eq!(c.field(), ctx.field(), "coefficient field");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms(
        ctx: &Arc<VarContext>,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = Polynomial::zero(ctx);
        for (m, c) in terms {
            assert_eq!(m.nvars(), ctx.nvars(), "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn field(&self) -> FieldSpec {
        self.ctx.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from largest to smallest in global degrevlex.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn constant_term(&self) -> Scalar {
        self.terms
            .get(&Monomial::one(self.ctx.nvars()))
            .cloned()
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn has_constant_term(&self) -> bool {
        !self.constant_term().is_zero()
    }

    /// Maximum total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Minimal total degree among the terms; `None` (infinite order) for zero.
    pub fn order_of_vanishing(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn homogeneous_component(&self, degree: u32) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn linear_part(&self) -> Polynomial {
        self.homogeneous_component(1)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Coefficients of `X1..Xn` in the linear part.
    pub fn linear_coefficients(&self) -> Vec<Scalar> {
        let n = self.ctx.nvars();
        (0..n)
            .map(|i| {
                self.terms
                    .get(&Monomial::var(n, i))
                    .cloned()
                    .unwrap_or_else(|| self.field().zero())
            })
            .collect()
    }

    pub fn from_linear_coefficients(ctx: &Arc<VarContext>, coeffs: &[Scalar]) -> Polynomial {
        Polynomial::from_terms(
            ctx,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(ctx.nvars(), i), c.clone())),
        )
    }

    pub fn uses_variable(&self, index: usize) -> bool {
        self.terms.keys().any(|m| m.exponents()[index] > 0)
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        match order {
            MonomialOrder::DegRevLexGlobal => self.terms.iter().next_back(),
            MonomialOrder::DegRevLexLocal => self
                .terms
                .iter()
                .max_by(|a, b| order.compare(a.0, b.0)),
        }
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|t| t.0)
    }

    /// Total degree minus degree of the leading monomial.
    pub fn ecart(&self, order: MonomialOrder) -> u32 {
        match (self.total_degree(), self.leading_monomial(order)) {
            (Some(d), Some(m)) => d - m.degree(),
            _ => 0,
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect(),
        }
    }

    /// `self - c * m * other`, the elementary reduction step.
    pub fn sub_mul_term(&mut self, m: &Monomial, c: &Scalar, other: &Polynomial) {
        let neg = -c;
        for (a, b) in &other.terms {
            self.add_term(a.mul(m), b * &neg);
        }
    }

    fn check(&self, other: &Polynomial) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        let (mut acc, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            acc.add_term(m.clone(), c.clone());
        }
        Ok(acc)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        let mut acc = Polynomial::zero(&self.ctx);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                acc.add_term(a.mul(b), x * y);
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Re-homes a polynomial into an equal context held by a different `Arc`.
    pub fn with_context(&self, ctx: &Arc<VarContext>) -> Result<Polynomial, PolyError> {
        if **ctx != *self.ctx {
            return Err(PolyError::ContextMismatch);
        }
        Ok(Polynomial {
            ctx: ctx.clone(),
            terms: self.terms.clone(),
        })
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial context mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(&-rhs).expect("polynomial context mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial context mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

fn format_monomial(ctx: &VarContext, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ctx.names[i].clone()),
            _ => parts.push(format!("{}^{}", ctx.names[i], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let (negative, magnitude) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            let body = if m.is_one() {
                magnitude.to_string()
            } else if magnitude.is_one() {
                format_monomial(&self.ctx, m)
            } else {
                format!("{}*{}", magnitude, format_monomial(&self.ctx, m))
            };
            match (k, negative) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}
