#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::Rng;

use gvcenter_core::center::{simples, CenterObject, CenterObjectRepr};
use gvcenter_core::cocycles::ThreeCocycle;
use gvcenter_core::groups::{FiniteGroup, GroupHom};
use gvcenter_core::gvduality::dualizing_object;
use gvcenter_core::linalg::Matrix;
use gvcenter_core::pointed::PointedCategory;
use gvcenter_core::scalars::{Cyclotomic, RootOfUnity};

pub fn cyclic(n: usize, q: i64, k: i64) -> Arc<PointedCategory> {
    let lambda = ThreeCocycle::cyclic(n, q);
    let g = lambda.group().clone();
    let d = GroupHom::from_generator_values(g, &[1 % n], &[RootOfUnity::new(n as u64, k)]).unwrap();
    Arc::new(PointedCategory::new(lambda, d).unwrap())
}

pub fn untwisted(group: FiniteGroup) -> Arc<PointedCategory> {
    Arc::new(PointedCategory::untwisted(Arc::new(group)))
}

pub fn with_character(group: Arc<FiniteGroup>, d: GroupHom) -> Arc<PointedCategory> {
    Arc::new(PointedCategory::new(ThreeCocycle::trivial(group), d).unwrap())
}

pub fn s3() -> FiniteGroup {
    FiniteGroup::from_generators(3, &[vec![1, 0, 2], vec![1, 2, 0]], 512).unwrap()
}

pub fn klein() -> FiniteGroup {
    FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2))
}

/// Every pivotal character on `group` with trivial cocycle.
pub fn all_pivotal(group: FiniteGroup) -> Vec<Arc<PointedCategory>> {
    let g = Arc::new(group);
    g.linear_characters().into_iter().map(|d| with_character(g.clone(), d)).collect()
}

/// Cyclic groups up to order 4 with every cocycle class and character,
/// plus the Klein group and S3 with every character.
pub fn supported_family() -> Vec<Arc<PointedCategory>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for q in 0..n as i64 {
            for k in 0..n as i64 {
                out.push(cyclic(n, q, k));
            }
        }
    }
    out.extend(all_pivotal(klein()));
    out.extend(all_pivotal(s3()));
    out
}

pub fn describe(cat: &PointedCategory) -> String {
    format!(
        "|G|={} lambda_trivial={} d={:?}",
        cat.group().order(),
        cat.lambda().is_trivial(),
        cat.d().values().iter().map(|v| v.to_string()).collect::<Vec<_>>()
    )
}

/// `α ⊗ ⊕_s s^∨ ⊗ s`, assembled from explicit objects.
pub fn coend_object(cat: &Arc<PointedCategory>) -> CenterObject {
    let list = simples(cat).unwrap();
    let mut sum: Option<CenterObject> = None;
    for s in &list {
        let obj = s.object.as_ref().expect("explicit simples");
        let term = obj.rigid_dual().tensor(obj).unwrap();
        sum = Some(match sum {
            None => term,
            Some(acc) => acc.direct_sum(&term).unwrap(),
        });
    }
    dualizing_object(cat).tensor(&sum.unwrap()).unwrap()
}

pub fn brute_force_block(cat: &Arc<PointedCategory>, genus: u32) -> usize {
    let alpha = dualizing_object(cat);
    let f = coend_object(cat);
    let mut power = CenterObject::unit(cat.clone());
    for _ in 0..genus {
        power = power.tensor(&f).unwrap();
    }
    alpha.hom_dim(&power).unwrap()
}

pub fn verlinde(dims: &[u64], order: u64, genus: u32) -> BigUint {
    // Σ_s (|G| / dim s)^{2g-2}, each term an integer since dim s divides |G|
    dims.iter().map(|&d| BigUint::from(order / d).pow(2 * genus - 2)).sum()
}

/// Explicit simples together with the dualizing object.
pub fn objects(cat: &Arc<PointedCategory>) -> Vec<CenterObject> {
    let mut out: Vec<CenterObject> = simples(cat).unwrap().into_iter().filter_map(|s| s.object).collect();
    out.push(dualizing_object(cat));
    out
}

/// Doubles a nonzero entry or sets a zero entry to one.
pub fn corrupt(repr: &mut CenterObjectRepr, rng: &mut StdRng) -> String {
    let keys: Vec<String> = repr.sigma.keys().cloned().collect();
    let key = keys[rng.gen_range(0..keys.len())].clone();
    let m = &repr.sigma[&key];
    let mut rows = m.to_rows();
    let i = rng.gen_range(0..m.rows());
    let j = rng.gen_range(0..m.cols());
    let c = m.conductor();
    rows[i][j] = if rows[i][j].is_zero() { Cyclotomic::one(c) } else { &rows[i][j] + &rows[i][j] };
    repr.sigma.insert(key.clone(), Matrix::from_rows(c, rows).unwrap());
    format!("{key} ({i},{j})")
}
