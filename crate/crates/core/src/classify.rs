//! Müger centers, Picard groups and the computable stages of the exact
//! sequence classifying ribbon Grothendieck-Verdier structures.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::blocks::{fusion_ring, BlocksError, FusionRing};
use crate::center::{CenterError, SimpleObject};
use crate::groups::{FiniteGroup, GroupError, GroupHom};
use crate::gvduality::{GvError, GvStructure};
use crate::pointed::PointedCategory;
use crate::scalars::RootOfUnity;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassifyError {
    #[error(transparent)]
    Center(#[from] CenterError),
    #[error(transparent)]
    Gv(#[from] GvError),
    #[error(transparent)]
    Blocks(#[from] BlocksError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("simple object {0} is not invertible")]
    NotInvertible(String),
}

/// Indices of simples whose double braiding with every simple is trivial.
pub fn transparent_indices(simples: &[SimpleObject]) -> Result<Vec<usize>, CenterError> {
    let mut out = Vec::new();
    'outer: for (i, s) in simples.iter().enumerate() {
        for t in simples {
            let trivial = match (&s.object, &t.object) {
                (Some(a), Some(b)) => a.double_braiding(b)?.is_identity(),
                _ => {
                    let dims = BigInt::from(s.dim) * BigInt::from(t.dim);
                    s.character.monodromy_trace(&t.character).to_integer() == Some(dims)
                }
            };
            if !trivial {
                continue 'outer;
            }
        }
        out.push(i);
    }
    Ok(out)
}

/// The data of a semisimple balanced braided category with a GV duality
/// that the classification needs.
#[derive(Clone, Debug)]
pub struct BalancedBraidedData {
    pub labels: Vec<String>,
    pub dims: Vec<u64>,
    pub fusion: FusionRing,
    pub transparent: Vec<usize>,
    pub thetas: Vec<RootOfUnity>,
    pub dual_of: Vec<usize>,
    pub dualizing: usize,
}

impl BalancedBraidedData {
    pub fn from_center(cat: &Arc<PointedCategory>) -> Result<Self, ClassifyError> {
        let gv = GvStructure::new(cat)?;
        Self::from_gv(&gv)
    }

    pub fn from_gv(gv: &GvStructure) -> Result<Self, ClassifyError> {
        let fusion = fusion_ring(&gv.simples)?;
        let dualizing = crate::blocks::dualizing_index(&gv.category, &gv.simples)?;
        Ok(BalancedBraidedData {
            labels: gv.simples.iter().map(|s| s.label.clone()).collect(),
            dims: gv.simples.iter().map(|s| s.dim).collect(),
            transparent: transparent_indices(&gv.simples)?,
            thetas: gv.simples.iter().map(|s| s.theta).collect(),
            dual_of: gv.dual_of.clone(),
            dualizing,
            fusion,
        })
    }

    /// `Vect_G` for abelian `G` with trivial braiding, trivial balancing
    /// and rigid duality.
    pub fn symmetric_vect(group: &FiniteGroup) -> Result<Self, ClassifyError> {
        if !group.is_abelian() {
            return Err(GroupError::NotAbelian.into());
        }
        let n = group.order();
        let mut structure = vec![vec![vec![0u64; n]; n]; n];
        for a in 0..n {
            for b in 0..n {
                structure[a][b][group.mul(a, b)] = 1;
            }
        }
        let labels: Vec<String> = group.names().to_vec();
        let e = group.identity();
        Ok(BalancedBraidedData {
            fusion: FusionRing {
                labels: labels.clone(),
                structure,
                dual: (0..n).map(|g| group.inv(g)).collect(),
                unit: e,
            },
            labels,
            dims: vec![1; n],
            transparent: (0..n).collect(),
            thetas: vec![RootOfUnity::one(); n],
            dual_of: (0..n).map(|g| group.inv(g)).collect(),
            dualizing: e,
        })
    }

    fn invertible(&self) -> Vec<usize> {
        (0..self.labels.len()).filter(|&s| self.dims[s] == 1).collect()
    }

    /// Product of two invertible simples.
    fn product(&self, s: usize, t: usize) -> usize {
        let row = &self.fusion.structure[s][t];
        row.iter().position(|&n| n == 1).expect("invertible product is simple")
    }

    /// Group of invertible simples, indexed as in `members`.
    fn group_on(&self, members: &[usize]) -> Result<Arc<FiniteGroup>, ClassifyError> {
        let pos = |x: usize| members.iter().position(|&m| m == x).expect("closed under products");
        let table: Vec<Vec<usize>> =
            members.iter().map(|&s| members.iter().map(|&t| pos(self.product(s, t))).collect()).collect();
        let names = members.iter().map(|&s| self.labels[s].clone()).collect();
        Ok(Arc::new(FiniteGroup::from_cayley(table, Some(names))?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MugerData {
    pub transparent: Vec<String>,
    pub balanced_transparent: Vec<String>,
    pub picard: Vec<String>,
    pub picard_order: usize,
    #[serde(skip)]
    pub picard_indices: Vec<usize>,
}

pub fn muger_data(data: &BalancedBraidedData) -> MugerData {
    let balanced: Vec<usize> = data.transparent.iter().copied().filter(|&s| data.thetas[s].is_one()).collect();
    let picard: Vec<usize> = balanced.iter().copied().filter(|&s| data.dims[s] == 1).collect();
    let names = |v: &[usize]| v.iter().map(|&s| data.labels[s].clone()).collect::<Vec<_>>();
    MugerData {
        transparent: names(&data.transparent),
        balanced_transparent: names(&balanced),
        picard: names(&picard),
        picard_order: picard.len(),
        picard_indices: picard,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub transparent: Vec<String>,
    pub balanced_transparent: Vec<String>,
    pub picard_order: usize,
    /// Twists `L` giving candidate dualities `D ⊗ L`.
    pub extension_candidates: Vec<String>,
    pub uniqueness_certified: bool,
    /// Stages of the sequence that are not computed.
    pub not_computed: Vec<String>,
}

pub fn ribbon_gv_extensions(data: &BalancedBraidedData) -> ExtensionReport {
    let m = muger_data(data);
    let candidates: Vec<String> = m
        .picard_indices
        .iter()
        .filter(|&&s| data.thetas[s].is_one())
        .map(|&s| data.labels[s].clone())
        .collect();
    ExtensionReport {
        uniqueness_certified: candidates.len() == 1,
        transparent: m.transparent,
        balanced_transparent: m.balanced_transparent,
        picard_order: m.picard_order,
        extension_candidates: candidates,
        not_computed: vec!["Aut_fE2".into(), "cAut_fE2".into()],
    }
}

/// An abelian group of monoidal automorphisms of the identity, given by
/// characters of the group of simples.
#[derive(Clone, Debug)]
pub struct AutGroup {
    pub simples_group: Arc<FiniteGroup>,
    /// Indices of the simples, in the element order of `simples_group`.
    pub members: Vec<usize>,
    pub elements: Vec<GroupHom>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Invariant factors of the subgroup, from its multiplication table.
    pub fn invariant_factors(&self) -> Result<Vec<u64>, ClassifyError> {
        let pos = |h: &GroupHom| self.elements.iter().position(|x| x == h).expect("closed subgroup");
        let table: Vec<Vec<usize>> =
            self.elements.iter().map(|a| self.elements.iter().map(|b| pos(&a.combine(b, 1))).collect()).collect();
        Ok(FiniteGroup::from_cayley(table, None)?.invariant_factors()?)
    }

    /// Value of the automorphism `chi` on simple `s`.
    pub fn value_on(&self, chi: &GroupHom, s: usize) -> RootOfUnity {
        chi.value(self.members.iter().position(|&m| m == s).expect("simple in group"))
    }
}

pub fn aut_tensor_id(data: &BalancedBraidedData) -> Result<AutGroup, ClassifyError> {
    if let Some(s) = (0..data.labels.len()).find(|&s| data.dims[s] != 1) {
        return Err(ClassifyError::NotInvertible(data.labels[s].clone()));
    }
    let members: Vec<usize> = data.invertible();
    let group = data.group_on(&members)?;
    let elements = group.character_group()?;
    Ok(AutGroup { simples_group: group, members, elements })
}

/// Automorphisms `χ` compatible with the duality, `χ(s)·χ(Ds) = 1` for all
/// simples `s`; equivalently `χ(K) = 1` for the dualizing object `K`.
pub fn caut_tensor_id(data: &BalancedBraidedData) -> Result<AutGroup, ClassifyError> {
    let aut = aut_tensor_id(data)?;
    let elements = aut
        .elements
        .iter()
        .filter(|chi| (0..data.labels.len()).all(|s| (aut.value_on(chi, s) * aut.value_on(chi, data.dual_of[s])).is_one()))
        .cloned()
        .collect();
    Ok(AutGroup { elements, ..aut })
}

/// The map `Aut_⊗(id) → Aut(I) = k^×`, `χ ↦ χ(K)`, and its image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessCheck {
    pub aut_order: usize,
    pub caut_order: usize,
    pub image_order: usize,
    pub kernel_is_caut: bool,
    pub quotient_cyclic: bool,
}

pub fn exactness_check(data: &BalancedBraidedData) -> Result<ExactnessCheck, ClassifyError> {
    let aut = aut_tensor_id(data)?;
    let caut = caut_tensor_id(data)?;
    let image: Vec<RootOfUnity> = aut.elements.iter().map(|chi| aut.value_on(chi, data.dualizing)).collect();
    let mut distinct: Vec<RootOfUnity> = Vec::new();
    for v in &image {
        if !distinct.contains(v) {
            distinct.push(*v);
        }
    }
    let kernel: Vec<&GroupHom> = aut.elements.iter().zip(&image).filter(|(_, v)| v.is_one()).map(|(c, _)| c).collect();
    let kernel_is_caut = kernel.len() == caut.order() && kernel.iter().all(|c| caut.elements.contains(c));
    // a finite subgroup of k^× is cyclic; check that the image has an element of full order
    let quotient_cyclic = distinct.iter().any(|v| v.multiplicative_order() as usize == distinct.len());
    Ok(ExactnessCheck {
        aut_order: aut.order(),
        caut_order: caut.order(),
        image_order: distinct.len(),
        kernel_is_caut,
        quotient_cyclic,
    })
}
