//! Normalized 3-cocycles on finite groups.

use std::sync::Arc;

use num_integer::Integer;
use thiserror::Error;

use crate::groups::FiniteGroup;
use crate::scalars::RootOfUnity;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("expected {expected} table entries, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("not normalized: value at ({0}, {1}, {2}) is not 1")]
    NotNormalized(usize, usize, usize),
    #[error("cocycle identity fails at ({0}, {1}, {2}, {3})")]
    CocycleIdentity(usize, usize, usize, usize),
}

/// A normalized 3-cocycle with values in the roots of unity of a fixed
/// order, stored densely as exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeCocycle {
    group: Arc<FiniteGroup>,
    order: u64,
    exponents: Vec<u64>,
}

impl ThreeCocycle {
    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        ThreeCocycle { group, order: 1, exponents: vec![0; n * n * n] }
    }

    /// Checks normalization and the cocycle identity over all quadruples.
    /// Entries are indexed by `a·n² + b·n + c`.
    pub fn verify(group: Arc<FiniteGroup>, values: &[RootOfUnity]) -> Result<Self, CocycleError> {
        let n = group.order();
        if values.len() != n * n * n {
            return Err(CocycleError::WrongSize { expected: n * n * n, got: values.len() });
        }
        let order = values.iter().fold(1u64, |acc, v| acc.lcm(&v.order()));
        let exponents = values.iter().map(|v| v.embed(order).expect("order divides lcm").exponent()).collect();
        let candidate = ThreeCocycle { group, order, exponents };
        candidate.check()?;
        Ok(candidate)
    }

    fn check(&self) -> Result<(), CocycleError> {
        let g = &self.group;
        let n = g.order();
        let e = g.identity();
        for a in 0..n {
            for b in 0..n {
                for (x, y, z) in [(e, a, b), (a, e, b), (a, b, e)] {
                    if self.exp(x, y, z) != 0 {
                        return Err(CocycleError::NotNormalized(x, y, z));
                    }
                }
            }
        }
        let m = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = g.mul(a, b);
                for c in 0..n {
                    let bc = g.mul(b, c);
                    let abc = self.exp(a, b, c);
                    for d in 0..n {
                        let cd = g.mul(c, d);
                        let lhs = abc + self.exp(a, bc, d) + self.exp(b, c, d);
                        let rhs = self.exp(ab, c, d) + self.exp(a, b, cd);
                        if lhs % m != rhs % m {
                            return Err(CocycleError::CocycleIdentity(a, b, c, d));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `λ_q(a, b, c) = ζ_n^{q·a·⌊(b+c)/n⌋}` on `Z_n`.
    pub fn cyclic(n: usize, q: i64) -> Self {
        assert!(n >= 1);
        let group = Arc::new(FiniteGroup::cyclic(n));
        let nn = n as u64;
        let q = q.rem_euclid(n as i64) as u64;
        let mut exponents = vec![0; n * n * n];
        for a in 0..nn {
            for b in 0..nn {
                for c in 0..nn {
                    exponents[(a * nn * nn + b * nn + c) as usize] = q * a * ((b + c) / nn) % nn;
                }
            }
        }
        ThreeCocycle { group, order: nn, exponents }
    }

    /// The same family on any cyclic group, written in powers of its
    /// least-index generator. `None` if the group is not cyclic.
    pub fn cyclic_on(group: Arc<FiniteGroup>, q: i64) -> Option<Self> {
        let gamma = group.cyclic_generator()?;
        let n = group.order();
        let mut log = vec![0u64; n];
        let mut x = group.identity();
        for k in 0..n {
            log[x] = k as u64;
            x = group.mul(x, gamma);
        }
        let base = ThreeCocycle::cyclic(n, q);
        let mut exponents = vec![0; n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    exponents[(a * n + b) * n + c] = base.exp(log[a] as usize, log[b] as usize, log[c] as usize);
                }
            }
        }
        Some(ThreeCocycle { group, order: base.order, exponents })
    }

    fn exp(&self, a: usize, b: usize, c: usize) -> u64 {
        let n = self.group.order();
        self.exponents[(a * n + b) * n + c]
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Common order of all values.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn value(&self, a: usize, b: usize, c: usize) -> RootOfUnity {
        RootOfUnity::new(self.order, self.exp(a, b, c) as i64)
    }

    pub fn values(&self) -> Vec<RootOfUnity> {
        self.exponents.iter().map(|&e| RootOfUnity::new(self.order, e as i64)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Pointwise product, re-verified.
    pub fn product(&self, other: &ThreeCocycle) -> Result<ThreeCocycle, CocycleError> {
        let values: Vec<RootOfUnity> =
            self.values().into_iter().zip(other.values()).map(|(a, b)| a * b).collect();
        ThreeCocycle::verify(self.group.clone(), &values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // independent evaluation of the defining identity with RootOfUnity arithmetic
    fn brute_force_ok(group: &FiniteGroup, values: &[RootOfUnity]) -> bool {
        let n = group.order();
        let v = |a: usize, b: usize, c: usize| values[a * n * n + b * n + c];
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    (0..n).all(|d| {
                        v(a, b, c) * v(a, group.mul(b, c), d) * v(b, c, d)
                            == v(group.mul(a, b), c, d) * v(a, b, group.mul(c, d))
                    })
                })
            })
        })
    }

    #[test]
    fn cyclic_examples() {
        let l = ThreeCocycle::cyclic(2, 1);
        assert_eq!(l.value(1, 1, 1), RootOfUnity::minus_one());
        assert!(l.value(1, 1, 0).is_one() && l.value(1, 0, 1).is_one() && l.value(0, 1, 1).is_one());
        assert!(brute_force_ok(l.group(), &l.values()));
        assert_eq!(ThreeCocycle::cyclic(3, 1).value(1, 2, 2), RootOfUnity::new(3, 1));
        assert!(ThreeCocycle::cyclic(5, 0).is_trivial());
        assert!(ThreeCocycle::cyclic(4, 8).is_trivial());
    }

    #[test]
    fn verify_accepts_cyclic_family() {
        for n in 1..=6 {
            for q in 0..n as i64 {
                let l = ThreeCocycle::cyclic(n, q);
                assert!(ThreeCocycle::verify(l.group().clone(), &l.values()).is_ok(), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn verify_reports_violations() {
        let l3 = ThreeCocycle::cyclic(3, 1);
        let mut values = l3.values();
        values[13] = RootOfUnity::new(3, 1);
        assert!(matches!(
            ThreeCocycle::verify(l3.group().clone(), &values),
            Err(CocycleError::CocycleIdentity(..))
        ));
        let l = ThreeCocycle::cyclic(2, 1);
        let mut values = l.values();
        values[1] = RootOfUnity::minus_one();
        assert_eq!(ThreeCocycle::verify(l.group().clone(), &values), Err(CocycleError::NotNormalized(0, 0, 1)));
        assert!(matches!(
            ThreeCocycle::verify(l.group().clone(), &values[..3]),
            Err(CocycleError::WrongSize { expected: 8, got: 3 })
        ));
    }

    #[test]
    fn negated_entry_agrees_with_brute_force() {
        let l = ThreeCocycle::cyclic(3, 1);
        let n = 3;
        for a in 1..n {
            for b in 1..n {
                for c in 1..n {
                    let mut values = l.values();
                    let i = a * n * n + b * n + c;
                    values[i] = values[i] * RootOfUnity::minus_one();
                    let expected = brute_force_ok(l.group(), &values);
                    assert_eq!(ThreeCocycle::verify(l.group().clone(), &values).is_ok(), expected);
                    assert!(!expected);
                }
            }
        }
    }

    #[test]
    fn cyclic_on_relabelled_group() {
        let z4 = Arc::new(FiniteGroup::from_generators(4, &[vec![1, 2, 3, 0]], 512).unwrap());
        let l = ThreeCocycle::cyclic_on(z4.clone(), 1).unwrap();
        assert!(ThreeCocycle::verify(z4, &l.values()).is_ok());
        let klein = Arc::new(FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)));
        assert!(ThreeCocycle::cyclic_on(klein, 1).is_none());
        assert_eq!(ThreeCocycle::cyclic_on(Arc::new(FiniteGroup::cyclic(3)), 1).unwrap(), ThreeCocycle::cyclic(3, 1));
    }

    proptest! {
        #[test]
        fn cyclic_family_is_additive(n in 1usize..7, q in 0i64..7, r in 0i64..7) {
            let sum = ThreeCocycle::cyclic(n, q).product(&ThreeCocycle::cyclic(n, r)).unwrap();
            let expected = ThreeCocycle::cyclic(n, q + r);
            prop_assert_eq!(sum.values(), expected.values());
        }
    }
}
