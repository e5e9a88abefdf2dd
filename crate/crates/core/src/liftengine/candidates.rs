//! Candidate streams for the avoidance searches.
//!
//! A candidate is a sparse combination `Σ cᵢ·atomᵢ` over a fixed list of
//! atoms. The stream starts with a deterministic sweep (coefficient size,
//! then support size, then lexicographic supports and coefficient tuples)
//! and continues with seeded pseudorandom combinations once the sweep
//! budget is spent.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::invariants::combinations;
use crate::scalars::{FieldSpec, Scalar};

pub type Combination = Vec<(usize, Scalar)>;

pub struct Sweep<'a> {
    pub natoms: usize,
    pub field: FieldSpec,
    pub coeff_bound: u64,
    pub max_support: usize,
    /// Fix the first coefficient to one; right for ideal-generating
    /// candidates, where scaling changes nothing.
    pub normalize: bool,
    /// Supports that may be used at all.
    pub admissible: &'a dyn Fn(&[usize]) -> bool,
    pub budget: usize,
}

fn nonzero_pool(field: FieldSpec, bound: u64) -> Vec<Scalar> {
    field.enumerate(bound).into_iter().filter(|c| !c.is_zero()).collect()
}

fn tuples(pool: &[Scalar], k: usize) -> Vec<Vec<Scalar>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                pool.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    out
}

impl Sweep<'_> {
    /// The deterministic part, at most `budget` combinations.
    pub fn sweep(&self) -> Vec<Combination> {
        let mut out = Vec::new();
        let one = self.field.one();
        let mut previous: Vec<Scalar> = Vec::new();
        for bound in 1..=self.coeff_bound.max(1) {
            let pool = nonzero_pool(self.field, bound);
            if pool.len() == previous.len() {
                continue;
            }
            for k in 1..=self.max_support.min(self.natoms) {
                for support in combinations(self.natoms, k) {
                    if !(self.admissible)(&support) {
                        continue;
                    }
                    for coeffs in tuples(&pool, k) {
                        if self.normalize && coeffs[0] != one {
                            continue;
                        }
                        if coeffs.iter().all(|c| previous.contains(c)) {
                            continue;
                        }
                        out.push(support.iter().copied().zip(coeffs).collect());
                        if out.len() >= self.budget {
                            return out;
                        }
                    }
                }
            }
            previous = pool;
        }
        out
    }

    /// Sweep followed by an endless seeded random tail.
    pub fn stream(&self, seed: u64, stream_id: u64) -> impl Iterator<Item = Combination> + '_ {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ stream_id.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let random = std::iter::from_fn(move || self.random(&mut rng));
        self.sweep().into_iter().chain(random)
    }

    fn random(&self, rng: &mut ChaCha8Rng) -> Option<Combination> {
        if self.natoms == 0 {
            return None;
        }
        let width = self.natoms.min(self.max_support.max(1) + 1);
        for _ in 0..64 {
            let k = rng.random_range(1..=width);
            let mut support = sample(rng, self.natoms, k).into_vec();
            support.sort_unstable();
            if !(self.admissible)(&support) {
                continue;
            }
            let coeffs = support.iter().enumerate().map(|(i, _)| {
                if i == 0 && self.normalize {
                    self.field.one()
                } else {
                    self.random_nonzero(rng)
                }
            });
            return Some(support.iter().copied().zip(coeffs).collect());
        }
        None
    }

    fn random_nonzero(&self, rng: &mut ChaCha8Rng) -> Scalar {
        match self.field {
            FieldSpec::PrimeField(p) => self.field.from_i64(rng.random_range(1..p) as i64),
            FieldSpec::Rationals => {
                let r = 10 * self.coeff_bound.max(1) as i64;
                let v = rng.random_range(1..=r);
                self.field.from_i64(if rng.random_bool(0.5) { v } else { -v })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(c: &Combination) -> String {
        c.iter().map(|(i, s)| format!("{s}*a{i}")).collect::<Vec<_>>().join(" + ")
    }

    #[test]
    fn sweep_order() {
        let all = |_: &[usize]| true;
        let sweep = Sweep {
            natoms: 2,
            field: FieldSpec::Rationals,
            coeff_bound: 2,
            max_support: 2,
            normalize: true,
            admissible: &all,
            budget: 100,
        };
        let got: Vec<String> = sweep.sweep().iter().map(show).collect();
        assert_eq!(
            got[..6],
            ["1*a0", "1*a1", "1*a0 + 1*a1", "1*a0 + -1*a1", "1*a0 + 2*a1", "1*a0 + -2*a1"]
        );
        assert_eq!(got.len(), 6);

        let unnormalized = Sweep {
            normalize: false,
            budget: 3,
            ..sweep
        };
        let got: Vec<String> = unnormalized.sweep().iter().map(show).collect();
        assert_eq!(got, ["1*a0", "-1*a0", "1*a1"]);
    }

    #[test]
    fn stream_is_seeded() {
        let all = |_: &[usize]| true;
        let sweep = Sweep {
            natoms: 3,
            field: FieldSpec::prime(101).unwrap(),
            coeff_bound: 1,
            max_support: 1,
            normalize: false,
            admissible: &all,
            budget: 4,
        };
        let a: Vec<_> = sweep.stream(7, 0).take(20).collect();
        let b: Vec<_> = sweep.stream(7, 0).take(20).collect();
        let c: Vec<_> = sweep.stream(8, 0).take(20).collect();
        assert_eq!(a, b);
        assert_eq!(a[..4], c[..4]);
        assert_ne!(a, c);
        assert!(a.iter().all(|comb| comb.iter().all(|(_, s)| !s.is_zero())));
    }
}
