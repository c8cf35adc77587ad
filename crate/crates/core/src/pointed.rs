//! The skeletal pivotal category of `G`-graded vector spaces twisted by a
//! 3-cocycle `λ`, with pivotal structure given by a character `d`.
//!
//! Conventions: the associator `(k_a⊗k_b)⊗k_c → k_a⊗(k_b⊗k_c)` is
//! `λ(a,b,c)`, the dual of `k_g` is `k_{g⁻¹}`, evaluation is `1` and
//! coevaluation is `λ(g,g⁻¹,g)⁻¹`.

use std::sync::Arc;

use num_integer::Integer;
use thiserror::Error;

use crate::cocycles::ThreeCocycle;
use crate::groups::{FiniteGroup, GroupHom};
use crate::scalars::RootOfUnity;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PointedError {
    #[error("cocycle and character live on different groups")]
    GroupMismatch,
    #[error("pivotal scalars fail monoidality at ({0}, {1})")]
    NotMonoidal(usize, usize),
    #[error("base sphericity via d² needs a trivial cocycle; use the center-level sphericity report")]
    NontrivialCocycle,
}

#[derive(Clone, Debug)]
pub struct PointedCategory {
    group: Arc<FiniteGroup>,
    lambda: ThreeCocycle,
    d: GroupHom,
}

impl PointedCategory {
    pub fn new(lambda: ThreeCocycle, d: GroupHom) -> Result<Self, PointedError> {
        if lambda.group() != d.source() {
            return Err(PointedError::GroupMismatch);
        }
        Ok(PointedCategory { group: lambda.group().clone(), lambda, d })
    }

    /// Trivial cocycle and trivial pivotal character.
    pub fn untwisted(group: Arc<FiniteGroup>) -> Self {
        let d = GroupHom::trivial(group.clone());
        PointedCategory { lambda: ThreeCocycle::trivial(group.clone()), group, d }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn lambda(&self) -> &ThreeCocycle {
        &self.lambda
    }

    pub fn d(&self) -> &GroupHom {
        &self.d
    }

    pub fn lam(&self, a: usize, b: usize, c: usize) -> RootOfUnity {
        self.lambda.value(a, b, c)
    }

    /// Order of a root of unity field containing every structure constant
    /// of the base category and the character values of `G`.
    pub fn conductor(&self) -> u64 {
        let d_order = self.d.values().iter().fold(1u64, |acc, v| acc.lcm(&v.reduced().order()));
        (self.lambda.order().lcm(&d_order)).lcm(&(self.group.exponent() as u64))
    }

    pub fn coev_scalar(&self, g: usize) -> RootOfUnity {
        self.lam(g, self.group.inv(g), g).inv()
    }

    /// Both zigzag composites for `k_g` and its dual, as scalars.
    pub fn zigzags(&self, g: usize) -> (RootOfUnity, RootOfUnity) {
        let gi = self.group.inv(g);
        let c = self.coev_scalar(g);
        // k_g → (k_g⊗k_g⁻¹)⊗k_g → k_g⊗(k_g⁻¹⊗k_g) → k_g
        let first = c * self.lam(g, gi, g);
        // k_g⁻¹ → k_g⁻¹⊗(k_g⊗k_g⁻¹) → (k_g⁻¹⊗k_g)⊗k_g⁻¹ → k_g⁻¹
        let second = c * self.lam(gi, g, gi).inv();
        (first, second)
    }

    /// `ω_g = d(g)·λ(g,g⁻¹,g)`.
    pub fn pivotal_scalar(&self, g: usize) -> RootOfUnity {
        self.d.value(g) * self.lam(g, self.group.inv(g), g)
    }

    /// Scalar of the canonical isomorphism `k_b^∨ ⊗ k_a^∨ → (k_a ⊗ k_b)^∨`.
    pub fn dual_tensor_factor(&self, a: usize, b: usize) -> RootOfUnity {
        let g = &self.group;
        let (ai, bi) = (g.inv(a), g.inv(b));
        self.lam(ai, a, b) * self.lam(bi, ai, g.mul(a, b)).inv()
    }

    /// Monoidal structure of the double dual on `k_a ⊗ k_b`.
    pub fn double_dual_factor(&self, a: usize, b: usize) -> RootOfUnity {
        let g = &self.group;
        self.dual_tensor_factor(a, b) * self.dual_tensor_factor(g.inv(b), g.inv(a)).inv()
    }

    /// Checks `ω_{ab} = j(a,b)·ω_a·ω_b` for all pairs.
    pub fn verify_pivotality(&self) -> Result<(), PointedError> {
        for a in self.group.elements() {
            for b in self.group.elements() {
                let lhs = self.pivotal_scalar(self.group.mul(a, b));
                let rhs = self.double_dual_factor(a, b) * self.pivotal_scalar(a) * self.pivotal_scalar(b);
                if lhs != rhs {
                    return Err(PointedError::NotMonoidal(a, b));
                }
            }
        }
        Ok(())
    }

    /// Right dimension of `k_g`: coevaluation followed by the pivotal
    /// evaluation.
    pub fn right_dimension(&self, g: usize) -> RootOfUnity {
        self.coev_scalar(g) * self.pivotal_scalar(g)
    }

    /// Left dimension of `k_g`, using the coevaluation of `k_g^∨`.
    pub fn left_dimension(&self, g: usize) -> RootOfUnity {
        self.coev_scalar(self.group.inv(g)) * self.pivotal_scalar(g).inv()
    }

    /// Sphericity of the base category as equality of left and right
    /// dimensions of all simple objects.
    pub fn dimensions_agree(&self) -> bool {
        self.group.elements().all(|g| self.left_dimension(g) == self.right_dimension(g))
    }

    /// `d² = 1`, meaningful for trivial `λ` only.
    pub fn base_sphericity(&self) -> Result<bool, PointedError> {
        if !self.lambda.is_trivial() {
            return Err(PointedError::NontrivialCocycle);
        }
        Ok(self.d.values().iter().all(|v| v.pow(2).is_one()))
    }
}
