//! Exact coefficient arithmetic over the rationals and prime fields.
//!
//! Every value is kept in canonical form: rationals are reduced with a
//! positive denominator, residues live in `[0, p)`. Structural equality is
//! therefore field equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Largest modulus accepted for prime fields (primality is checked by trial division).
pub const MAX_PRIME: u64 = u32::MAX as u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported bound {MAX_PRIME}")]
    PrimeTooLarge(u64),
    #[error("malformed scalar literal `{0}`")]
    Malformed(String),
    #[error("`{literal}` is not an element of {field}")]
    NotInField { literal: String, field: FieldSpec },
}

/// The coefficient field: rationals or `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if p > MAX_PRIME {
            return Err(ScalarError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Residue {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
        }
    }

    /// Reads an integer or `a/b` literal as an element of this field.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, ScalarError> {
        let text = text.trim();
        let malformed = || ScalarError::Malformed(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (text, None),
        };
        let num = BigInt::from_str(num).map_err(|_| malformed())?;
        let den = match den {
            Some(d) => BigInt::from_str(d).map_err(|_| malformed())?,
            None => BigInt::one(),
        };
        let den = self.from_bigint(&den);
        if den.is_zero() {
            return Err(ScalarError::NotInField {
                literal: text.to_string(),
                field: self,
            });
        }
        Ok(self.from_bigint(&num) * den.inv().expect("nonzero"))
    }

    /// Candidate pool for avoidance searches: `0, 1, -1, 2, -2, ..., bound,
    /// -bound`. Over `F_p` duplicates are dropped, so a large bound yields
    /// every residue once.
    pub fn enumerate(self, bound: u64) -> Vec<Scalar> {
        let mut out = vec![self.zero()];
        let limit = match self {
            FieldSpec::PrimeField(p) => bound.min(p / 2),
            FieldSpec::Rationals => bound,
        };
        for k in 1..=limit as i64 {
            for v in [self.from_i64(k), self.from_i64(-k)] {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F {p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of the coefficient field in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }

    fn check(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => {
                let e = BigInt::from(*value).extended_gcd(&BigInt::from(*modulus));
                let inv = e.x.mod_floor(&BigInt::from(*modulus));
                Scalar::Residue {
                    value: inv.to_u64().expect("residue fits"),
                    modulus: *modulus,
                }
            }
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_mul(&other.inv()?)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

// Operator forms panic on mixed fields; polynomials never mix them because
// every coefficient is checked against the ring context on construction.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar field mismatch")
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Scalar {
        FieldSpec::Rationals.parse_scalar(s).unwrap()
    }

    #[test]
    fn rational_add_and_mul() {
        assert_eq!(&q("1/2") + &q("1/3"), q("5/6"));
        assert_eq!(&q("2/3") * &q("3/4"), q("1/2"));
        assert_eq!(q("2/3").inv().unwrap(), q("3/2"));
        assert_eq!(q("-4/6").to_string(), "-2/3");
        assert_eq!(q("3/-6").to_string(), "-1/2");
    }

    #[test]
    fn residue_arithmetic() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(&f5.from_i64(3) + &f5.from_i64(4), f5.from_i64(2));
        assert_eq!(&f5.from_i64(2) * &f5.from_i64(3), f5.one());
        let f7 = FieldSpec::prime(7).unwrap();
        // 3 * 5 = 15 = 1 mod 7, and 5 is the only such residue
        let witnesses: Vec<u64> = (1..7).filter(|b| (3 * b) % 7 == 1).collect();
        assert_eq!(witnesses, vec![5]);
        assert_eq!(f7.from_i64(3).inv().unwrap(), f7.from_i64(5));
        assert_eq!(f7.one().inv().unwrap(), f7.one());
        assert_eq!(f7.parse_scalar("-1").unwrap().to_string(), "6");
        assert_eq!(f7.parse_scalar("1/2").unwrap(), f7.from_i64(4));
    }

    #[test]
    fn identities() {
        for f in [FieldSpec::Rationals, FieldSpec::prime(11).unwrap()] {
            let x = f.from_i64(9);
            assert_eq!(&x + &f.zero(), x);
            assert_eq!(&x * &f.one(), x);
        }
    }

    #[test]
    fn errors() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.zero().inv(), Err(ScalarError::DivisionByZero));
        assert!(matches!(
            q("1").try_add(&f5.one()),
            Err(ScalarError::FieldMismatch(..))
        ));
        assert!(matches!(FieldSpec::prime(9), Err(ScalarError::NotPrime(9))));
        assert!(matches!(FieldSpec::prime(1), Err(ScalarError::NotPrime(1))));
        assert!(matches!(
            f5.parse_scalar("1/5"),
            Err(ScalarError::NotInField { .. })
        ));
        assert!(matches!(
            FieldSpec::Rationals.parse_scalar("1/0"),
            Err(ScalarError::NotInField { .. })
        ));
        assert!(FieldSpec::Rationals.parse_scalar("x").is_err());
    }

    #[test]
    fn enumeration_order() {
        let f3 = FieldSpec::prime(3).unwrap();
        let show = |v: Vec<Scalar>| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert_eq!(show(f3.enumerate(10)), ["0", "1", "2"]);
        assert_eq!(show(FieldSpec::prime(2).unwrap().enumerate(1)), ["0", "1"]);
        assert_eq!(show(FieldSpec::Rationals.enumerate(2)), ["0", "1", "-1", "2", "-2"]);
        assert_eq!(show(FieldSpec::prime(7).unwrap().enumerate(2)), ["0", "1", "6", "2", "5"]);
    }

    fn arb_field() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![
            Just(FieldSpec::Rationals),
            Just(FieldSpec::PrimeField(2)),
            Just(FieldSpec::PrimeField(101)),
            Just(FieldSpec::PrimeField(4_294_967_291)),
        ]
    }

    fn arb_triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
        arb_field().prop_flat_map(|f| {
            let elem = (any::<i32>(), 1..1000i64).prop_map(move |(n, d)| {
                &f.from_i64(n as i64) * &f.from_i64(d).inv().unwrap_or_else(|_| f.one())
            });
            (elem.clone(), elem.clone(), elem)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn field_axioms((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn literal_round_trip((a, _, _) in arb_triple()) {
            let printed = a.to_string();
            let reparsed = a.field().parse_scalar(&printed).unwrap();
            prop_assert_eq!(reparsed.to_string(), printed);
            prop_assert_eq!(reparsed, a);
        }
    }
}
