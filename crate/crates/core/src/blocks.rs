//! Fusion rings of the center and the dimensions of its conformal blocks.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::center::{CenterError, SimpleObject};
use crate::groups::FiniteGroup;
use crate::gvduality::{dualizing_object, gv_dual_character, GvError};
use crate::pointed::PointedCategory;
use crate::scalars::{Cyclotomic, RootOfUnity};

/// Default largest genus accepted by [`block_dim`].
pub const DEFAULT_GENUS_BOUND: u64 = 32;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BlocksError {
    #[error(transparent)]
    Center(#[from] CenterError),
    #[error(transparent)]
    Gv(#[from] GvError),
    #[error("genus {genus} exceeds the bound {bound}")]
    GenusBound { genus: u64, bound: u64 },
    #[error("fusion coefficient for ({0}, {1}, {2}) is not a non-negative integer")]
    NotIntegral(usize, usize, usize),
    #[error("the closed form needs an abelian group and a trivial cocycle")]
    NotAbelianUntwisted,
    #[error("no simple object is isomorphic to the dualizing object")]
    NoDualizingSimple,
    #[error("graded characters of the simples are not orthonormal at ({0}, {1})")]
    NotOrthonormal(usize, usize),
}

/// Traces `χ(g, h)` of half braidings on commuting pairs, zero elsewhere.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedCharacter {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl GradedCharacter {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(values.len(), group.order() * group.order());
        GradedCharacter { group, values }
    }

    pub fn value(&self, g: usize, h: usize) -> &Cyclotomic {
        &self.values[g * self.group.order() + h]
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn dim(&self) -> Cyclotomic {
        let e = self.group.identity();
        self.group.elements().fold(Cyclotomic::zero(self.values[0].conductor()), |acc, g| &acc + self.value(g, e))
    }

    pub fn add(&self, other: &GradedCharacter) -> GradedCharacter {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        GradedCharacter { group: self.group.clone(), values }
    }

    /// `(χ⊗χ')(g, h) = Σ_{g₁g₂ = g} χ(g₁, h)·χ'(g₂, h)`.
    pub fn tensor(&self, other: &GradedCharacter) -> GradedCharacter {
        let g_ = &self.group;
        let n = g_.order();
        let conductor = self.values[0].conductor();
        let mut values = vec![Cyclotomic::zero(conductor); n * n];
        for g1 in 0..n {
            for h in 0..n {
                let a = self.value(g1, h);
                if a.is_zero() {
                    continue;
                }
                for g2 in 0..n {
                    let b = other.value(g2, h);
                    if !b.is_zero() {
                        let idx = g_.mul(g1, g2) * n + h;
                        values[idx] = &values[idx] + &(a * b);
                    }
                }
            }
        }
        GradedCharacter { group: self.group.clone(), values }
    }

    /// Character of the rigid dual: `conj χ(g⁻¹, h)`.
    pub fn rigid_dual(&self) -> GradedCharacter {
        let g_ = &self.group;
        let n = g_.order();
        let values = (0..n * n).map(|i| self.value(g_.inv(i / n), i % n).conj()).collect();
        GradedCharacter { group: self.group.clone(), values }
    }

    /// Multiplies `χ(g, h)` by `c(h)`, the effect of tensoring with a
    /// grade-`e` line.
    pub fn twist(&self, c: impl Fn(usize) -> RootOfUnity) -> GradedCharacter {
        let n = self.group.order();
        let conductor = self.values[0].conductor();
        let factors: Vec<Cyclotomic> = (0..n).map(|h| Cyclotomic::from_root_in(conductor, c(h))).collect();
        let values = (0..n * n)
            .map(|i| if self.values[i].is_zero() { self.values[i].clone() } else { &self.values[i] * &factors[i % n] })
            .collect();
        GradedCharacter { group: self.group.clone(), values }
    }

    /// `(1/|G|) Σ χ(g,h)·conj χ'(g,h)`.
    pub fn inner(&self, other: &GradedCharacter) -> Cyclotomic {
        let conductor = self.values[0].conductor();
        let mut acc = Cyclotomic::zero(conductor);
        for (a, b) in self.values.iter().zip(&other.values) {
            if !a.is_zero() && !b.is_zero() {
                acc = &acc + &(a * &b.conj());
            }
        }
        acc.scale(&BigRational::new(BigInt::one(), BigInt::from(self.group.order())))
    }

    /// Trace of the monodromy on `V⊗W`: `Σ χ_V(a, b)·χ_W(b, a)`.
    pub fn monodromy_trace(&self, other: &GradedCharacter) -> Cyclotomic {
        let n = self.group.order();
        let mut acc = Cyclotomic::zero(self.values[0].conductor());
        for a in 0..n {
            for b in 0..n {
                let x = self.value(a, b);
                let y = other.value(b, a);
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
        }
        acc
    }
}

/// Checks orthonormality of the characters of a list of simples.
pub fn check_orthonormal(simples: &[SimpleObject]) -> Result<(), BlocksError> {
    for (i, s) in simples.iter().enumerate() {
        for (j, t) in simples.iter().enumerate() {
            let ip = s.character.inner(&t.character);
            let ok = if i == j { ip.is_one() } else { ip.is_zero() };
            if !ok {
                return Err(BlocksError::NotOrthonormal(i, j));
            }
        }
    }
    Ok(())
}

/// Grothendieck ring of the center on the basis of simples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionRing {
    pub labels: Vec<String>,
    /// `n[s][t][u] = N_{st}^u`.
    pub structure: Vec<Vec<Vec<u64>>>,
    pub dual: Vec<usize>,
    pub unit: usize,
}

/// An element of the fusion ring, as coefficients on the simples.
pub type RingElement = Vec<BigUint>;

impl FusionRing {
    fn finish(labels: Vec<String>, structure: Vec<Vec<Vec<u64>>>) -> FusionRing {
        let r = labels.len();
        let unit = (0..r).find(|&u| (0..r).all(|s| structure[u][s][s] == 1)).unwrap_or(0);
        let dual = (0..r).map(|s| (0..r).find(|&t| structure[s][t][unit] == 1).unwrap_or(s)).collect();
        FusionRing { labels, structure, dual, unit }
    }

    /// Structure constants `⟨χ_s ⊗ χ_t, χ_u⟩` from graded characters.
    /// The character of a tensor product carries no associator factors, so
    /// this is only valid for a trivial cocycle.
    pub fn from_characters(simples: &[SimpleObject]) -> Result<FusionRing, BlocksError> {
        let r = simples.len();
        let mut structure = vec![vec![vec![0u64; r]; r]; r];
        for s in 0..r {
            for t in 0..r {
                let prod = simples[s].character.tensor(&simples[t].character);
                for u in 0..r {
                    let c = prod.inner(&simples[u].character);
                    structure[s][t][u] = c
                        .to_integer()
                        .and_then(|x| x.to_u64())
                        .ok_or(BlocksError::NotIntegral(s, t, u))?;
                }
            }
        }
        Ok(FusionRing::finish(simples.iter().map(|s| s.label.clone()).collect(), structure))
    }

    /// Structure constants `dim Hom(s⊗t, u)` from explicit objects.
    pub fn from_objects(simples: &[SimpleObject]) -> Result<FusionRing, BlocksError> {
        let r = simples.len();
        let objects: Vec<_> = simples
            .iter()
            .map(|s| s.object.clone().ok_or_else(|| CenterError::Unsupported(format!("{} has no matrices", s.label))))
            .collect::<Result<_, _>>()?;
        let mut structure = vec![vec![vec![0u64; r]; r]; r];
        for s in 0..r {
            for t in 0..r {
                let prod = objects[s].tensor(&objects[t])?;
                for u in 0..r {
                    if prod.dims().iter().zip(objects[u].dims()).any(|(&p, &q)| q > 0 && p == 0) {
                        continue;
                    }
                    structure[s][t][u] = prod.hom_dim(&objects[u])? as u64;
                }
            }
        }
        Ok(FusionRing::finish(simples.iter().map(|s| s.label.clone()).collect(), structure))
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn basis(&self, s: usize) -> RingElement {
        let mut v = vec![BigUint::zero(); self.rank()];
        v[s] = BigUint::one();
        v
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let r = self.rank();
        let mut out = vec![BigUint::zero(); r];
        for s in 0..r {
            if a[s].is_zero() {
                continue;
            }
            for t in 0..r {
                if b[t].is_zero() {
                    continue;
                }
                let ab = &a[s] * &b[t];
                for u in 0..r {
                    let n = self.structure[s][t][u];
                    if n != 0 {
                        out[u] += &ab * n;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|s| (0..r).all(|t| self.structure[s][t] == self.structure[t][s]))
    }

    pub fn is_associative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|a| {
            (0..r).all(|b| {
                (0..r).all(|c| {
                    let ab = self.mul(&self.basis(a), &self.basis(b));
                    let bc = self.mul(&self.basis(b), &self.basis(c));
                    self.mul(&ab, &self.basis(c)) == self.mul(&self.basis(a), &bc)
                })
            })
        })
    }
}

/// The fusion ring, from explicit matrices when every simple has them and
/// from graded characters otherwise.
pub fn fusion_ring(simples: &[SimpleObject]) -> Result<FusionRing, BlocksError> {
    if simples.iter().all(|s| s.object.is_some()) {
        FusionRing::from_objects(simples)
    } else {
        check_orthonormal(simples)?;
        FusionRing::from_characters(simples)
    }
}

/// Index of the simple isomorphic to the dualizing object `α`.
pub fn dualizing_index(cat: &Arc<PointedCategory>, simples: &[SimpleObject]) -> Result<usize, BlocksError> {
    let k = dualizing_object(cat);
    for (i, s) in simples.iter().enumerate() {
        let found = match &s.object {
            Some(obj) => obj.dims() == k.dims() && obj.hom_dim(&k)? == 1,
            None => false,
        };
        if found {
            return Ok(i);
        }
    }
    // character route: χ_K(g, h) = δ_{g,e}·d(h)²
    let unit = simples.first().ok_or(BlocksError::NoDualizingSimple)?;
    let chi = gv_dual_character(cat, &unit.character);
    simples.iter().position(|s| s.character == chi).ok_or(BlocksError::NoDualizingSimple)
}

/// `[α]·Σ_s [s*][s]`.
pub fn coend_class(ring: &FusionRing, alpha: usize) -> RingElement {
    let r = ring.rank();
    let mut sum = vec![BigUint::zero(); r];
    for s in 0..r {
        sum = ring.add(&sum, &ring.mul(&ring.basis(ring.dual[s]), &ring.basis(s)));
    }
    ring.mul(&ring.basis(alpha), &sum)
}

/// Fusion data needed for block dimensions.
#[derive(Clone, Debug)]
pub struct Blocks {
    pub ring: FusionRing,
    pub alpha: usize,
    pub coend: RingElement,
}

impl Blocks {
    pub fn new(cat: &Arc<PointedCategory>, simples: &[SimpleObject]) -> Result<Self, BlocksError> {
        let ring = fusion_ring(simples)?;
        let alpha = dualizing_index(cat, simples)?;
        let coend = coend_class(&ring, alpha);
        Ok(Blocks { ring, alpha, coend })
    }

    /// Multiplicity of `[α]` in `[𝔽]^g`; for `g = 0` this is `dim Hom(α, I)`.
    pub fn dim(&self, genus: u64) -> BigUint {
        if genus == 0 {
            return BigUint::from(u8::from(self.alpha == self.ring.unit));
        }
        let mut acc = self.coend.clone();
        for _ in 1..genus {
            acc = self.ring.mul(&acc, &self.coend);
        }
        acc[self.alpha].clone()
    }

    pub fn table(&self, max_genus: u64) -> Vec<BigUint> {
        (0..=max_genus).map(|g| self.dim(g)).collect()
    }
}

pub fn block_dim(cat: &Arc<PointedCategory>, genus: u64, bound: u64) -> Result<BigUint, BlocksError> {
    if genus > bound {
        return Err(BlocksError::GenusBound { genus, bound });
    }
    let simples = crate::center::simples(cat)?;
    Ok(Blocks::new(cat, &simples)?.dim(genus))
}

/// `|G|^{2g}` if `d^{2-2g}` is trivial, else `0`.
pub fn abelian_closed_form(cat: &PointedCategory, genus: u64) -> Result<BigUint, BlocksError> {
    if !cat.group().is_abelian() || !cat.lambda().is_trivial() {
        return Err(BlocksError::NotAbelianUntwisted);
    }
    let euler = 2 - 2 * genus as i64;
    if cat.d().values().iter().all(|v| v.pow(euler).is_one()) {
        Ok(BigUint::from(cat.group().order()).pow(2 * genus as u32))
    } else {
        Ok(BigUint::zero())
    }
}
