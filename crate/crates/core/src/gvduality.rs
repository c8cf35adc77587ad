//! The ribbon Grothendieck-Verdier structure on the center: dualizing
//! object, duality `D = (−)* ⊗ K`, the pivotal scalars `ξ` on invertible
//! objects, the ribbon check `θ_{DX} = Dθ_X`, and sphericity.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::blocks::GradedCharacter;
use crate::center::{simples, CenterError, CenterObject, SimpleObject};
use crate::classify::transparent_indices;
use crate::pointed::PointedCategory;
use crate::scalars::RootOfUnity;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GvError {
    #[error(transparent)]
    Center(#[from] CenterError),
    #[error("object is not invertible")]
    NotInvertible,
    #[error("no simple object matches the dual of {0}")]
    Unmatched(String),
    #[error("sphericity conditions disagree: {0:?}")]
    Inconsistent(SphericityReport),
}

/// Grade-`e` line whose half braiding is `d(h)²`.
///
/// This is `ω_h² = d(h)²·λ(h,h⁻¹,h)²`, corrected by the squared associator
/// factor so that it is multiplicative for every normalized cocycle.
pub fn dualizing_object(cat: &Arc<PointedCategory>) -> CenterObject {
    let d = cat.d().clone();
    CenterObject::line(cat.clone(), cat.group().identity(), move |h| d.value(h).pow(2))
}

/// `K⁻¹`, the grade-`e` line with half braiding `d(h)⁻²`.
pub fn dualizing_inverse(cat: &Arc<PointedCategory>) -> CenterObject {
    let d = cat.d().clone();
    CenterObject::line(cat.clone(), cat.group().identity(), move |h| d.value(h).pow(-2))
}

/// Duality functor on objects: rigid dual tensored with `K`.
pub fn gv_dual(v: &CenterObject) -> CenterObject {
    let k = dualizing_object(v.category());
    v.rigid_dual().tensor(&k).expect("same category")
}

/// Graded character of `D V` for trivial `λ`.
pub fn gv_dual_character(cat: &PointedCategory, chi: &GradedCharacter) -> GradedCharacter {
    let d = cat.d();
    chi.rigid_dual().twist(|h| d.value(h).pow(2))
}

/// `ξ_s = d(g)²·ω_g` for an invertible object at grade `g`.
pub fn gv_pivot(s: &CenterObject) -> Result<RootOfUnity, GvError> {
    if s.dim() != 1 {
        return Err(GvError::NotInvertible);
    }
    let g = s.support()[0];
    let cat = s.category();
    Ok(cat.d().value(g).pow(2) * cat.pivotal_scalar(g))
}

/// Scalar of the balancing on a simple object.
pub fn theta_scalar(v: &CenterObject) -> Option<RootOfUnity> {
    v.balancing().as_scalar()?.as_root_of_unity()
}

/// Balancing scalar read off a graded character of a simple object.
pub fn theta_from_character(cat: &PointedCategory, chi: &GradedCharacter) -> Option<RootOfUnity> {
    let group = cat.group();
    let g = group.elements().find(|&g| !chi.value(g, group.identity()).is_zero())?;
    let ratio = chi.value(g, g) * &chi.value(g, group.identity()).inv()?;
    Some(ratio.as_root_of_unity()? * cat.d().value(g).inv())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RibbonEntry {
    pub label: String,
    pub theta: RootOfUnity,
    pub theta_of_dual: RootOfUnity,
    pub ribbon_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RibbonReport {
    pub entries: Vec<RibbonEntry>,
}

impl RibbonReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.ribbon_ok)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphericityReport {
    pub dualizing_is_unit: bool,
    pub base_spherical: bool,
    pub duality_is_rigid: bool,
    pub rigid_ribbon_modular: bool,
}

impl SphericityReport {
    pub fn consistent(&self) -> bool {
        let v = [self.dualizing_is_unit, self.base_spherical, self.duality_is_rigid, self.rigid_ribbon_modular];
        v.iter().all(|&b| b == v[0])
    }

    pub fn spherical(&self) -> bool {
        self.consistent() && self.dualizing_is_unit
    }
}

/// The GV structure together with the simples it is checked on.
#[derive(Clone, Debug)]
pub struct GvStructure {
    pub category: Arc<PointedCategory>,
    pub dualizing: CenterObject,
    pub simples: Vec<SimpleObject>,
    /// Index of the simple isomorphic to `D s`.
    pub dual_of: Vec<usize>,
    /// Index of the simple isomorphic to the rigid dual of `s`.
    pub rigid_dual_of: Vec<usize>,
}

impl GvStructure {
    pub fn new(cat: &Arc<PointedCategory>) -> Result<Self, GvError> {
        let simples = simples(cat)?;
        Self::from_simples(cat, simples)
    }

    pub fn from_simples(cat: &Arc<PointedCategory>, simples: Vec<SimpleObject>) -> Result<Self, GvError> {
        let dualizing = dualizing_object(cat);
        let mut dual_of = Vec::with_capacity(simples.len());
        let mut rigid_dual_of = Vec::with_capacity(simples.len());
        for s in &simples {
            let (gv, rigid) = match &s.object {
                Some(obj) => (
                    match_object(&simples, &gv_dual(obj))?,
                    match_object(&simples, &obj.rigid_dual())?,
                ),
                None => (
                    match_character(&simples, &gv_dual_character(cat, &s.character)),
                    match_character(&simples, &s.character.rigid_dual()),
                ),
            };
            dual_of.push(gv.ok_or_else(|| GvError::Unmatched(s.label.clone()))?);
            rigid_dual_of.push(rigid.ok_or_else(|| GvError::Unmatched(s.label.clone()))?);
        }
        Ok(GvStructure { category: cat.clone(), dualizing, simples, dual_of, rigid_dual_of })
    }

    /// Compares `θ_s` with the balancing of `D s`, computed directly on
    /// `D s` (matrices where available, characters otherwise).
    pub fn verify_ribbon(&self) -> RibbonReport {
        let entries = self
            .simples
            .iter()
            .map(|s| {
                let theta_of_dual = match &s.object {
                    Some(obj) => theta_scalar(&gv_dual(obj)),
                    None => theta_from_character(&self.category, &gv_dual_character(&self.category, &s.character)),
                };
                let theta_of_dual = theta_of_dual.unwrap_or(RootOfUnity::new(1, 0));
                RibbonEntry { label: s.label.clone(), theta: s.theta, theta_of_dual, ribbon_ok: theta_of_dual == s.theta }
            })
            .collect();
        RibbonReport { entries }
    }

    pub fn sphericity_report(&self) -> Result<SphericityReport, GvError> {
        let cat = &self.category;
        let unit = CenterObject::unit(cat.clone());
        let dualizing_is_unit = self.dualizing.hom_dim(&unit)? == 1;
        let base_spherical = match cat.base_sphericity() {
            Ok(b) => b,
            Err(_) => cat.dimensions_agree(),
        };
        let duality_is_rigid = self.dual_of == self.rigid_dual_of;
        let transparent = transparent_indices(&self.simples)?;
        let rigid_ribbon = self.simples.iter().all(|s| {
            let theta_rigid = match &s.object {
                Some(obj) => theta_scalar(&obj.rigid_dual()),
                None => theta_from_character(cat, &s.character.rigid_dual()),
            };
            theta_rigid == Some(s.theta)
        });
        let report = SphericityReport {
            dualizing_is_unit,
            base_spherical,
            duality_is_rigid,
            rigid_ribbon_modular: rigid_ribbon && transparent == vec![0],
        };
        if report.consistent() {
            Ok(report)
        } else {
            Err(GvError::Inconsistent(report))
        }
    }
}

fn match_object(simples: &[SimpleObject], v: &CenterObject) -> Result<Option<usize>, GvError> {
    for (i, s) in simples.iter().enumerate() {
        if let Some(obj) = &s.object {
            if obj.dims() == v.dims() && obj.hom_dim(v)? == 1 {
                return Ok(Some(i));
            }
        }
    }
    Ok(None)
}

fn match_character(simples: &[SimpleObject], chi: &GradedCharacter) -> Option<usize> {
    simples.iter().position(|s| s.character == *chi)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycles::ThreeCocycle;
    use crate::groups::{FiniteGroup, GroupHom};

    fn cyclic(n: usize, q: i64, k: i64) -> Arc<PointedCategory> {
        let lambda = ThreeCocycle::cyclic(n, q);
        let g = lambda.group().clone();
        let d = GroupHom::from_generator_values(g, &[1 % n], &[RootOfUnity::new(n as u64, k)]).unwrap();
        Arc::new(PointedCategory::new(lambda, d).unwrap())
    }

    #[test]
    fn dualizing_object_is_unit_iff_d_squared_trivial() {
        for (n, k, expect) in [(2, 1, true), (3, 0, true), (3, 1, false), (4, 2, true), (4, 1, false)] {
            let cat = cyclic(n, 0, k);
            let unit = CenterObject::unit(cat.clone());
            let dualizing = dualizing_object(&cat);
            dualizing.verify_half_braiding().unwrap();
            assert_eq!(dualizing.hom_dim(&unit).unwrap() == 1, expect, "n={n} k={k}");
            let inverse = dualizing_inverse(&cat);
            assert_eq!(dualizing.tensor(&inverse).unwrap().hom_dim(&unit).unwrap(), 1);
        }
    }

    #[test]
    fn gv_dual_of_unit_is_dualizing_object() {
        let cat = cyclic(3, 1, 2);
        let unit = CenterObject::unit(cat.clone());
        assert_eq!(gv_dual(&unit).hom_dim(&dualizing_object(&cat)).unwrap(), 1);
    }

    #[test]
    fn gv_pivot_of_unit_is_one() {
        let cat = cyclic(4, 1, 1);
        assert!(gv_pivot(&CenterObject::unit(cat.clone())).unwrap().is_one());
        let two = CenterObject::unit(cat.clone()).direct_sum(&CenterObject::unit(cat)).unwrap();
        assert_eq!(gv_pivot(&two), Err(GvError::NotInvertible));
    }

    #[test]
    fn spherical_z2_reports() {
        let gv = GvStructure::new(&cyclic(2, 0, 1)).unwrap();
        assert!(gv.verify_ribbon().passed());
        let report = gv.sphericity_report().unwrap();
        assert!(report.spherical());
        let gv = GvStructure::new(&cyclic(3, 0, 1)).unwrap();
        let report = gv.sphericity_report().unwrap();
        assert_eq!(
            report,
            SphericityReport { dualizing_is_unit: false, base_spherical: false, duality_is_rigid: false, rigid_ribbon_modular: false }
        );
    }

    #[test]
    fn theta_from_character_agrees_with_matrices() {
        let cat = Arc::new(PointedCategory::untwisted(Arc::new(FiniteGroup::cyclic(4))));
        for s in crate::center::simples(&cat).unwrap() {
            assert_eq!(theta_from_character(&cat, &s.character), Some(s.theta));
            assert_eq!(theta_scalar(s.object.as_ref().unwrap()), Some(s.theta));
        }
    }

    #[test]
    fn inconsistent_report_is_not_spherical() {
        let r = SphericityReport { dualizing_is_unit: true, base_spherical: false, duality_is_rigid: true, rigid_ribbon_modular: true };
        assert!(!r.consistent());
        assert!(!r.spherical());
    }
}
