//! Brute-force cross-checks, independent of the basis algorithms.
//!
//! Everything here is exponential and meant for tests only.

use thiserror::Error;

use crate::exec::Execution;
use crate::invariants::MonomialIdeal;
use crate::polyring::{Matrix, Monomial, Polynomial};
use crate::scalars::{FieldSpec, Scalar};
use crate::stdbasis::{IdealData, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("oracle precondition: {0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_variables: usize,
    pub max_degree: u32,
    pub max_field_scan_extension: u32,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_variables: 5,
            max_degree: 6,
            max_field_scan_extension: 2,
        }
    }
}

/// Points examined by one zero-locus scan at most.
const MAX_SCAN_POINTS: u64 = 1 << 22;

/// Largest `|S|` over variable subsets `S` containing the support of no
/// generator, by checking all `2ⁿ` subsets; `-1` for the unit ideal.
pub fn monomial_dim_bruteforce(m: &MonomialIdeal, budget: &OracleBudget) -> Result<i64, OracleError> {
    let n = m.nvars();
    if n > budget.max_variables {
        return Err(OracleError::BudgetExceeded(format!("{n} variables")));
    }
    let supports: Vec<u32> = m
        .generators()
        .iter()
        .map(|g| g.support().fold(0, |acc, i| acc | (1 << i)))
        .collect();
    let best = (0u32..1 << n)
        .filter(|&s| supports.iter().all(|&g| g & !s != 0))
        .map(|s| s.count_ones() as i64)
        .max();
    Ok(best.unwrap_or(-1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardMonomials {
    /// In increasing degree, larger monomials first within a degree.
    pub monomials: Vec<Monomial>,
    /// A standard monomial of the full bound degree exists, so the list
    /// may continue past the bound.
    pub truncated: bool,
}

/// Standard monomials of degree at most `bound`, from linear algebra alone.
///
/// Modulo `𝔪^(bound+1)` the ideal is the span of the products `m·g`
/// truncated above `bound`. Row reducing them with columns sorted by the
/// mode's order leaves exactly the leading monomials as pivots, so the
/// non-pivot columns are the standard monomials.
pub fn standard_monomials_bounded(
    ideal: &IdealData,
    mode: Mode,
    bound: u32,
    budget: &OracleBudget,
) -> Result<StandardMonomials, OracleError> {
    let ctx = ideal.context();
    let n = ctx.nvars();
    if n > budget.max_variables || bound > budget.max_degree {
        return Err(OracleError::BudgetExceeded(format!("{n} variables, degree {bound}")));
    }
    if mode == Mode::Graded && !ideal.is_homogeneous() {
        return Err(OracleError::Unsupported("graded mode needs a homogeneous ideal".into()));
    }
    let order = mode.order();
    let mut columns = Monomial::all_up_to_degree(n, bound);
    columns.sort_by(|a, b| order.compare(b, a));
    let index = |m: &Monomial| columns.iter().position(|c| c == m);
    let one = ctx.field().one();
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let low = g.order_of_vanishing().unwrap_or(0);
        for mult in Monomial::all_up_to_degree(n, bound.saturating_sub(low)) {
            let p = g.mul_term(&mult, &one);
            let mut row = vec![ctx.field().zero(); columns.len()];
            for (m, c) in p.terms() {
                if let Some(j) = index(m) {
                    row[j] = c.clone();
                }
            }
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    let pivots = Matrix::from_rows(ctx.field(), columns.len(), rows).pivot_columns();
    let mut monomials: Vec<Monomial> = columns
        .iter()
        .enumerate()
        .filter(|(j, _)| !pivots.contains(j))
        .map(|(_, m)| m.clone())
        .collect();
    monomials.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    let truncated = monomials.iter().any(|m| m.degree() == bound);
    Ok(StandardMonomials { monomials, truncated })
}

/// Irreducible monic polynomials `x^j + c_{j-1}x^{j-1} + … + c₀`, stored as
/// `[c₀, …, c_{j-1}]`.
const IRREDUCIBLE: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (3, 2, &[1, 0]),
    (3, 3, &[1, 2, 0]),
    (5, 2, &[2, 0]),
    (5, 3, &[1, 1, 0]),
    (7, 2, &[1, 0]),
    (7, 3, &[2, 0, 0]),
];

/// `F_{p^j}` as `F_p[x]/(modulus)`; elements are coefficient vectors.
#[derive(Debug, Clone)]
struct ExtensionField {
    p: u64,
    tail: Vec<u64>,
}

impl ExtensionField {
    fn new(p: u64, j: u32) -> Option<Self> {
        if j == 1 {
            return Some(ExtensionField { p, tail: vec![0] });
        }
        IRREDUCIBLE
            .iter()
            .find(|(q, k, _)| *q == p && *k == j)
            .map(|(_, _, tail)| ExtensionField { p, tail: tail.to_vec() })
    }

    fn degree(&self) -> usize {
        self.tail.len()
    }

    fn element(&self, mut code: u64) -> Vec<u64> {
        (0..self.degree())
            .map(|_| {
                let digit = code % self.p;
                code /= self.p;
                digit
            })
            .collect()
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let k = self.degree();
        let mut prod = vec![0u64; 2 * k];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // x^k = -tail
        for top in (k..2 * k).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, t) in self.tail.iter().enumerate() {
                let sub = c * t % self.p;
                prod[top - k + i] = (prod[top - k + i] + self.p - sub) % self.p;
            }
        }
        prod.truncate(k);
        prod
    }

    fn scalar(&self, c: &Scalar) -> Vec<u64> {
        let Scalar::Residue { value, .. } = c else {
            unreachable!("prime field coefficients")
        };
        let mut v = vec![0; self.degree()];
        v[0] = *value;
        v
    }

    fn eval(&self, f: &Polynomial, point: &[Vec<u64>]) -> Vec<u64> {
        let mut acc = vec![0; self.degree()];
        for (m, c) in f.terms() {
            let mut t = self.scalar(c);
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = self.mul(&t, &point[i]);
                }
            }
            acc = self.add(&acc, &t);
        }
        acc
    }
}

/// Whether the origin is the only common zero of a homogeneous ideal over
/// `F_{p^j}` for every `j ≤ cap`.
///
/// Only a necessary condition for `𝔪`-primary: a nontrivial zero over a
/// larger field is not looked for.
pub fn zero_locus_scan(
    ideal: &IdealData,
    cap: u32,
    budget: &OracleBudget,
    exec: Execution,
) -> Result<bool, OracleError> {
    let ctx = ideal.context();
    let FieldSpec::PrimeField(p) = ctx.field() else {
        return Err(OracleError::Unsupported("zero-locus scans need a prime field".into()));
    };
    if !ideal.is_homogeneous() {
        return Err(OracleError::Unsupported("zero-locus scans need a homogeneous ideal".into()));
    }
    if cap > budget.max_field_scan_extension || ctx.nvars() > budget.max_variables {
        return Err(OracleError::BudgetExceeded(format!("extension degree {cap}")));
    }
    let n = ctx.nvars() as u32;
    for j in 1..=cap {
        let field = ExtensionField::new(p, j)
            .ok_or_else(|| OracleError::Unsupported(format!("no table entry for F_{p}^{j}")))?;
        let q = p.checked_pow(j).expect("small field");
        let points = q
            .checked_pow(n)
            .filter(|&c| c <= MAX_SCAN_POINTS)
            .ok_or_else(|| OracleError::BudgetExceeded(format!("{q}^{n} points")))?;
        let codes: Vec<u64> = (1..points).collect();
        let has_zero = exec.any(&codes, |&code| {
            let mut rest = code;
            let point: Vec<Vec<u64>> = (0..n)
                .map(|_| {
                    let c = rest % q;
                    rest /= q;
                    field.element(c)
                })
                .collect();
            ideal
                .generators()
                .iter()
                .all(|g| field.eval(g, &point).iter().all(|&x| x == 0))
        });
        if has_zero {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{is_m_primary, leading_ideal, monomial_dimension};
    use crate::polyring::{parse_polynomial, VarContext};
    use crate::stdbasis::compute_basis;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn ctx(field: FieldSpec, n: usize) -> Arc<VarContext> {
        VarContext::new(field, ["X", "Y", "Z", "W", "V"][..n].iter().copied()).unwrap()
    }

    fn ideal(field: FieldSpec, n: usize, gens: &[&str]) -> IdealData {
        let c = ctx(field, n);
        IdealData::new(&c, gens.iter().map(|g| parse_polynomial(g, &c).unwrap()).collect()).unwrap()
    }

    fn mono(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())))
    }

    fn names(ideal: &IdealData, s: &StandardMonomials) -> Vec<String> {
        let c = ideal.context();
        s.monomials
            .iter()
            .map(|m| Polynomial::term(c, m.clone(), c.field().one()).to_string())
            .collect()
    }

    #[test]
    fn bruteforce_examples() {
        let b = OracleBudget::default();
        assert_eq!(monomial_dim_bruteforce(&mono(2, &[&[1, 1]]), &b), Ok(1));
        assert_eq!(monomial_dim_bruteforce(&mono(1, &[&[1]]), &b), Ok(0));
        assert_eq!(monomial_dim_bruteforce(&mono(3, &[]), &b), Ok(3));
        assert_eq!(monomial_dim_bruteforce(&mono(2, &[&[0, 0]]), &b), Ok(-1));
        assert!(monomial_dim_bruteforce(&mono(6, &[]), &b).is_err());
    }

    #[test]
    fn standard_monomial_examples() {
        let b = OracleBudget::default();
        let q = FieldSpec::Rationals;
        let i = ideal(q, 2, &["X^2", "Y^2"]);
        let s = standard_monomials_bounded(&i, Mode::Local, 4, &b).unwrap();
        assert_eq!(names(&i, &s), ["1", "X", "Y", "X*Y"]);
        assert!(!s.truncated);

        let i = ideal(q, 1, &["X"]);
        let s = standard_monomials_bounded(&i, Mode::Graded, 3, &b).unwrap();
        assert_eq!(names(&i, &s), ["1"]);

        let i = ideal(q, 2, &["X*Y"]);
        let s = standard_monomials_bounded(&i, Mode::Graded, 2, &b).unwrap();
        assert_eq!(names(&i, &s), ["1", "X", "Y", "X^2", "Y^2"]);
        assert!(s.truncated);

        // locally X - X^2 is X times a unit
        let i = ideal(q, 1, &["X - X^2"]);
        let s = standard_monomials_bounded(&i, Mode::Local, 3, &b).unwrap();
        assert_eq!(names(&i, &s), ["1"]);
    }

    #[test]
    fn zero_locus_examples() {
        let b = OracleBudget::default();
        let f3 = FieldSpec::prime(3).unwrap();
        let seq = Execution::Sequential;
        assert_eq!(zero_locus_scan(&ideal(f3, 2, &["X", "Y"]), 2, &b, seq), Ok(true));
        assert_eq!(zero_locus_scan(&ideal(f3, 2, &["X*Y"]), 1, &b, seq), Ok(false));
        let circle = ideal(f3, 2, &["X^2 + Y^2"]);
        assert_eq!(zero_locus_scan(&circle, 1, &b, seq), Ok(true));
        assert_eq!(zero_locus_scan(&circle, 2, &b, Execution::Parallel), Ok(false));
        assert!(zero_locus_scan(&ideal(FieldSpec::Rationals, 1, &["X"]), 1, &b, seq).is_err());
    }

    #[test]
    fn irreducible_table_has_no_roots() {
        for &(p, j, tail) in IRREDUCIBLE {
            for x in 0..p {
                let mut value = 0;
                let mut power = 1;
                for &c in tail {
                    value = (value + c * power) % p;
                    power = power * x % p;
                }
                // degree ≤ 3, so no root means irreducible
                assert_ne!((value + power) % p, 0, "x^{j} + … over F_{p} has root {x}");
            }
        }
    }

    fn arb_monomial_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (1usize..=5).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(0u32..=4, n), 0..=6).prop_map(move |gens| {
                let gens = gens.into_iter().map(|mut e| {
                    while e.iter().sum::<u32>() > 4 {
                        let i = e.iter().position(|&x| x > 0).unwrap();
                        e[i] -= 1;
                    }
                    Monomial::new(e)
                });
                MonomialIdeal::new(n, gens)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn bruteforce_matches_independent_sets(m in arb_monomial_ideal()) {
            let b = OracleBudget::default();
            prop_assert_eq!(monomial_dim_bruteforce(&m, &b).unwrap(), monomial_dimension(&m).dimension);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn macaulay_matches_basis(
            gens in prop::collection::vec((0u32..3, 0u32..3, -2i64..=2, -2i64..=2), 1..=3),
            local in any::<bool>(),
        ) {
            let c = ctx(FieldSpec::Rationals, 2);
            let polys: Vec<Polynomial> = gens
                .iter()
                .map(|&(a, b, s, t)| {
                    let lead = Polynomial::term(&c, Monomial::new(vec![a + 1, b]), c.field().one());
                    let tail = Polynomial::term(&c, Monomial::new(vec![a, b + 2]), c.field().from_i64(s));
                    let low = Polynomial::term(&c, Monomial::new(vec![0, b + 1]), c.field().from_i64(t));
                    &(&lead + &tail) + &low
                })
                .collect();
            let ideal = IdealData::new(&c, polys).unwrap();
            let mode = if local { Mode::Local } else { Mode::Graded };
            prop_assume!(mode == Mode::Local || ideal.is_homogeneous());
            let lead = leading_ideal(&compute_basis(&ideal, mode.order()));
            let bound = 4;
            let s = standard_monomials_bounded(&ideal, mode, bound, &OracleBudget::default()).unwrap();
            let expected: Vec<Monomial> = Monomial::all_up_to_degree(2, bound)
                .into_iter()
                .filter(|m| !lead.contains(m))
                .collect();
            let mut got = s.monomials.clone();
            got.sort();
            let mut expected = expected;
            expected.sort();
            prop_assert_eq!(got, expected);
        }

        #[test]
        fn scan_never_contradicts_primary(
            a in 1u32..=3, b in 1u32..=3, extra in any::<bool>(),
        ) {
            let f2 = FieldSpec::prime(2).unwrap();
            let mut gens = vec![format!("X^{a}"), format!("Y^{b}")];
            if extra {
                gens = vec![format!("X^{a} + Y^{a}")];
            }
            let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
            let i = ideal(f2, 2, &refs);
            if is_m_primary(&i, Mode::Graded).unwrap() {
                prop_assert!(zero_locus_scan(&i, 2, &OracleBudget::default(), Execution::Sequential).unwrap());
            }
        }
    }
}
