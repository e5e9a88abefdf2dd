use std::cmp::Ordering;

use super::monomial::{degrevlex, revlex_tiebreak, Monomial};

/// Computational monomial orderings.
///
/// `DegRevLexGlobal` is a well-order with `1` smallest. `DegRevLexLocal` is
/// negative degree reverse lexicographic: lower total degree is larger, so
/// `1` is the largest monomial and leading terms live in the lowest-degree
/// part of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    DegRevLexGlobal,
    DegRevLexLocal,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLexGlobal => degrevlex(a, b),
            MonomialOrder::DegRevLexLocal => b
                .degree()
                .cmp(&a.degree())
                .then_with(|| revlex_tiebreak(a, b)),
        }
    }

    pub fn is_global(self) -> bool {
        matches!(self, MonomialOrder::DegRevLexGlobal)
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::DegRevLexGlobal => "dp",
            MonomialOrder::DegRevLexLocal => "ds",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, n).prop_map(Monomial::new)
    }

    #[test]
    fn extreme_elements() {
        let one = Monomial::one(2);
        let x = Monomial::var(2, 0);
        let y = Monomial::var(2, 1);
        let g = MonomialOrder::DegRevLexGlobal;
        let l = MonomialOrder::DegRevLexLocal;
        assert_eq!(g.compare(&one, &x), Ordering::Less);
        assert_eq!(l.compare(&one, &x), Ordering::Greater);
        assert_eq!(g.compare(&x, &y), Ordering::Greater);
        assert_eq!(l.compare(&x, &y), Ordering::Greater);
        assert_eq!(l.compare(&x, &Monomial::new(vec![2, 0])), Ordering::Greater);
    }

    proptest! {
        #[test]
        fn total_and_multiplicative(a in mono(3), b in mono(3), c in mono(3)) {
            for ord in [MonomialOrder::DegRevLexGlobal, MonomialOrder::DegRevLexLocal] {
                let ab = ord.compare(&a, &b);
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(ab.reverse(), ord.compare(&b, &a));
                prop_assert_eq!(ord.compare(&a.mul(&c), &b.mul(&c)), ab);
                if ab == Ordering::Less && ord.compare(&b, &c) == Ordering::Less {
                    prop_assert_eq!(ord.compare(&a, &c), Ordering::Less);
                }
                let one = Monomial::one(3);
                if !a.is_one() {
                    let expected = if ord.is_global() { Ordering::Less } else { Ordering::Greater };
                    prop_assert_eq!(ord.compare(&one, &a), expected);
                }
            }
        }
    }
}
