//! Division by a list of polynomials.
//!
//! Global orders use ordinary full reduction. Local orders use Mora's weak
//! normal form: reducers are chosen by smallest écart, and an intermediate
//! remainder joins the reducer list whenever the chosen reducer has larger
//! écart than it. The recorded variant keeps `unit * f = remainder + Σ qᵢ gᵢ`
//! as an exact polynomial identity.

use crate::polyring::{Monomial, MonomialOrder, Polynomial};

/// `f = Σ quotients[i] * basis[i] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// `unit * f = Σ quotients[i] * basis[i] + remainder`, with `unit` a unit of
/// the local ring (constant term one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalDivision {
    pub unit: Polynomial,
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

struct Lead {
    monomial: Monomial,
    coeff: crate::scalars::Scalar,
}

fn leads(basis: &[Polynomial], order: MonomialOrder) -> Vec<Option<Lead>> {
    basis
        .iter()
        .map(|g| {
            g.leading_term(order).map(|(m, c)| Lead {
                monomial: m.clone(),
                coeff: c.clone(),
            })
        })
        .collect()
}

fn global_division(
    f: &Polynomial,
    basis: &[Polynomial],
    order: MonomialOrder,
    track: bool,
) -> Division {
    assert!(order.is_global(), "full reduction needs a global order");
    let ctx = f.context();
    let leads = leads(basis, order);
    let mut quotients = if track {
        vec![Polynomial::zero(ctx); basis.len()]
    } else {
        Vec::new()
    };
    let mut p = f.clone();
    let mut remainder = Polynomial::zero(ctx);
    while let Some((m, c)) = p.leading_term(order) {
        let (m, c) = (m.clone(), c.clone());
        let hit = leads.iter().enumerate().find_map(|(i, l)| match l {
            Some(l) if l.monomial.divides(&m) => Some((i, l)),
            _ => None,
        });
        match hit {
            Some((i, lead)) => {
                let t = m.div(&lead.monomial);
                let coef = c.try_div(&lead.coeff).expect("nonzero leading coefficient");
                p.sub_mul_term(&t, &coef, &basis[i]);
                if track {
                    quotients[i].add_term(t, coef);
                }
            }
            None => {
                p.add_term(m.clone(), -&c);
                remainder.add_term(m, c);
            }
        }
    }
    Division {
        quotients,
        remainder,
    }
}

/// Full division under a global order, with quotients.
pub fn divide(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Division {
    global_division(f, basis, order, true)
}

/// Fully reduced remainder under a global order.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    global_division(f, basis, order, false).remainder
}

enum Origin {
    Basis(usize),
    Intermediate {
        unit: Polynomial,
        quotients: Vec<Polynomial>,
    },
}

struct Reducer {
    poly: Polynomial,
    lead: Lead,
    ecart: u32,
    origin: Origin,
}

fn mora(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder, track: bool) -> LocalDivision {
    assert!(!order.is_global(), "Mora reduction needs a local order");
    let ctx = f.context();
    let mut reducers: Vec<Reducer> = basis
        .iter()
        .enumerate()
        .filter_map(|(i, g)| {
            let (m, c) = g.leading_term(order)?;
            Some(Reducer {
                lead: Lead {
                    monomial: m.clone(),
                    coeff: c.clone(),
                },
                ecart: g.ecart(order),
                poly: g.clone(),
                origin: Origin::Basis(i),
            })
        })
        .collect();
    let mut unit = Polynomial::one(ctx);
    let mut quotients = if track {
        vec![Polynomial::zero(ctx); basis.len()]
    } else {
        Vec::new()
    };
    let mut h = f.clone();
    while let Some((hm, hc)) = h.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let chosen = reducers
            .iter()
            .enumerate()
            .filter(|(_, r)| r.lead.monomial.divides(&hm))
            .min_by_key(|(i, r)| (r.ecart, *i))
            .map(|(i, _)| i);
        let Some(k) = chosen else {
            break;
        };
        let h_ecart = h.ecart(order);
        if reducers[k].ecart > h_ecart {
            reducers.push(Reducer {
                poly: h.clone(),
                lead: Lead {
                    monomial: hm.clone(),
                    coeff: hc.clone(),
                },
                ecart: h_ecart,
                origin: Origin::Intermediate {
                    unit: if track { unit.clone() } else { Polynomial::zero(ctx) },
                    quotients: quotients.clone(),
                },
            });
        }
        let r = &reducers[k];
        let t = hm.div(&r.lead.monomial);
        let coef = hc.try_div(&r.lead.coeff).expect("nonzero leading coefficient");
        h.sub_mul_term(&t, &coef, &r.poly);
        if track {
            match &r.origin {
                Origin::Basis(i) => quotients[*i].add_term(t, coef),
                Origin::Intermediate {
                    unit: u,
                    quotients: a,
                } => {
                    unit.sub_mul_term(&t, &coef, u);
                    for (q, ak) in quotients.iter_mut().zip(a) {
                        q.sub_mul_term(&t, &coef, ak);
                    }
                }
            }
        }
    }
    LocalDivision {
        unit,
        quotients,
        remainder: h,
    }
}

/// Mora weak normal form of `f` with respect to `basis` under a local order.
pub fn mora_normal_form(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    mora(f, basis, order, false).remainder
}

/// Weak normal form together with the unit and quotients that certify it.
pub fn mora_division(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> LocalDivision {
    mora(f, basis, order, true)
}

/// `m_g * g - m_f * f` scaled by leading coefficients so leading terms cancel.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let ctx = f.context();
    let (Some((fm, fc)), Some((gm, gc))) = (f.leading_term(order), g.leading_term(order)) else {
        return Polynomial::zero(ctx);
    };
    let lcm = fm.lcm(gm);
    let left = f.mul_term(&lcm.div(fm), &fc.inv().expect("nonzero"));
    let right = g.mul_term(&lcm.div(gm), &gc.inv().expect("nonzero"));
    &left - &right
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, VarContext};
    use crate::scalars::FieldSpec;
    use std::sync::Arc;

    const LOCAL: MonomialOrder = MonomialOrder::DegRevLexLocal;
    const GLOBAL: MonomialOrder = MonomialOrder::DegRevLexGlobal;

    fn ctx() -> Arc<VarContext> {
        VarContext::new(FieldSpec::Rationals, ["X", "Y"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &ctx()).unwrap()
    }

    fn check_local(f: &Polynomial, basis: &[Polynomial], d: &LocalDivision) {
        assert!(d.unit.constant_term().is_one());
        let mut rhs = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(basis) {
            rhs = &rhs + &(q * g);
        }
        assert_eq!(&d.unit * f, rhs);
    }

    #[test]
    fn mora_examples() {
        let basis = [p("X - X^2")];
        assert!(mora_normal_form(&p("X"), &basis, LOCAL).is_zero());
        // witness: (1 - X) * X = X - X^2
        assert_eq!(&p("1 - X") * &p("X"), basis[0]);
        let d = mora_division(&p("X"), &basis, LOCAL);
        check_local(&p("X"), &basis, &d);

        assert_eq!(mora_normal_form(&p("1"), &[p("X")], LOCAL), p("1"));
        assert!(mora_normal_form(&p("X^2"), &[p("X")], LOCAL).is_zero());
    }

    #[test]
    fn mora_records_unit_on_cascade() {
        let basis = [p("X - Y^2"), p("Y - X^3 - Y^3")];
        for f in ["X", "Y", "X*Y + X^2", "Y^2 - X^4"] {
            let f = p(f);
            let d = mora_division(&f, &basis, LOCAL);
            check_local(&f, &basis, &d);
        }
    }

    #[test]
    fn global_division_identity() {
        let basis = [p("X^2 - Y"), p("X*Y")];
        let f = p("X^3*Y + X^2 + Y^3");
        let d = divide(&f, &basis, GLOBAL);
        let mut rhs = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(&basis) {
            rhs = &rhs + &(q * g);
        }
        assert_eq!(rhs, f);
        assert!(normal_form(&p("X"), &basis, GLOBAL) == p("X"));
    }
}
