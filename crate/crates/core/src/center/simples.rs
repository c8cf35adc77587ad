//! Complete lists of simple objects of the center.
//!
//! For trivial `λ` the simples are induced from a conjugacy class `[r]`
//! and an irreducible representation `ψ` of the centralizer of `r`. With
//! `t_g` the least-index element satisfying `t_g⁻¹ r t_g = g`, the half
//! braiding is `σ^g_h = ψ(t_g h t_{h⁻¹gh}⁻¹)`. Only one-dimensional `ψ` are
//! realized by matrices; the others are carried by their graded character.
//!
//! For abelian `G` with nontrivial `λ`, every simple is a line at some grade
//! `a` whose half braiding is a projective character for the 2-cocycle
//! obtained from `λ` at `a`; these are found by search.

use std::sync::Arc;

use super::{field_conductor, CenterError, CenterObject};
use crate::blocks::GradedCharacter;
use crate::groups::chartable::character_table;
use crate::linalg::Matrix;
use crate::pointed::PointedCategory;
use crate::scalars::{Cyclotomic, RootOfUnity};

/// Bound on the number of candidate generator assignments in the twisted search.
const TWISTED_SEARCH_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub struct SimpleObject {
    pub label: String,
    /// Representative grade of the support.
    pub grade: usize,
    pub dim: u64,
    pub theta: RootOfUnity,
    pub object: Option<CenterObject>,
    pub character: GradedCharacter,
}

impl SimpleObject {
    pub fn is_invertible(&self) -> bool {
        self.dim == 1
    }
}

pub fn simples(cat: &Arc<PointedCategory>) -> Result<Vec<SimpleObject>, CenterError> {
    if cat.lambda().is_trivial() {
        Ok(induced_simples(cat))
    } else if cat.group().is_abelian() {
        twisted_lines(cat)
    } else {
        Err(CenterError::Unsupported("nontrivial cocycle on a nonabelian group".into()))
    }
}

/// One irreducible representation of a centralizer, as values on its
/// elements (local indices) plus its degree.
struct LocalIrrep {
    degree: u64,
    values: Vec<Cyclotomic>,
}

fn induced_simples(cat: &Arc<PointedCategory>) -> Vec<SimpleObject> {
    let group = cat.group();
    let n = group.order();
    let conductor = field_conductor(cat);
    let mut classes = group.conjugacy_classes();
    let unit_class = classes.iter().position(|c| c.representative == group.identity()).expect("identity class");
    let unit = classes.remove(unit_class);
    classes.insert(0, unit);

    let mut out = Vec::new();
    for class in &classes {
        let r = class.representative;
        let centralizer = group.centralizer(r);
        let local_group = centralizer.group.clone();
        let irreps: Vec<LocalIrrep> = if local_group.is_abelian() {
            local_group
                .linear_characters()
                .into_iter()
                .map(|chi| LocalIrrep {
                    degree: 1,
                    values: chi.values().iter().map(|&v| Cyclotomic::from_root_in(conductor, v)).collect(),
                })
                .collect()
        } else {
            let table = character_table(&local_group);
            table
                .characters
                .iter()
                .map(|ch| LocalIrrep {
                    degree: ch.degree,
                    values: local_group.elements().map(|x| ch.values[table.class_of[x]].embed(conductor)).collect(),
                })
                .collect()
        };
        // transversal: t_g with t_g⁻¹ r t_g = g
        let mut transversal = vec![usize::MAX; n];
        for t in group.elements() {
            let g = group.conjugate(r, t);
            if transversal[g] == usize::MAX {
                transversal[g] = t;
            }
        }
        let local = |x: usize| centralizer.local(x).expect("element of the centralizer");
        let r_local = local(r);
        for (k, psi) in irreps.iter().enumerate() {
            let label = format!("({}, {})", group.name(r), k);
            let dim = class.elements.len() as u64 * psi.degree;
            let central = psi.values[r_local]
                .scale(&num_rational::BigRational::new(1.into(), (psi.degree as i64).into()))
                .as_root_of_unity()
                .expect("central element acts by a root of unity");
            let theta = cat.d().value(r).inv() * central;
            let mut values = vec![Cyclotomic::zero(conductor); n * n];
            for &g in &class.elements {
                let t = transversal[g];
                for h in group.elements() {
                    if group.commute(g, h) {
                        let x = group.mul(group.mul(t, h), group.inv(t));
                        values[g * n + h] = psi.values[local(x)].clone();
                    }
                }
            }
            let character = GradedCharacter::new(group.clone(), values);
            let object = (psi.degree == 1).then(|| {
                let mut dims = vec![0; n];
                let mut sigma = vec![None; n * n];
                for &g in &class.elements {
                    dims[g] = 1;
                }
                for &g in &class.elements {
                    for h in group.elements() {
                        let g2 = group.conjugate(g, h);
                        let x = group.mul(group.mul(transversal[g], h), group.inv(transversal[g2]));
                        let v = psi.values[local(x)].clone();
                        sigma[g * n + h] = Some(Matrix::from_rows(conductor, vec![vec![v]]).expect("1×1"));
                    }
                }
                CenterObject::unchecked(cat.clone(), dims, sigma)
            });
            out.push(SimpleObject { label, grade: r, dim, theta, object, character });
        }
    }
    out
}

fn twisted_lines(cat: &Arc<PointedCategory>) -> Result<Vec<SimpleObject>, CenterError> {
    let group = cat.group();
    let n = group.order();
    let gens = group.generators();
    let k = group.exponent() as u64 * cat.lambda().order();
    let candidates = k.checked_pow(gens.len() as u32).filter(|&c| c <= TWISTED_SEARCH_LIMIT);
    let Some(candidates) = candidates else {
        return Err(CenterError::Unsupported("twisted search space too large".into()));
    };
    let mut grades: Vec<usize> = group.elements().collect();
    grades.retain(|&g| g != group.identity());
    grades.insert(0, group.identity());

    let mut out = Vec::new();
    for &a in &grades {
        let beta = |h: usize, h2: usize| {
            cat.lam(h, h2, a).inv() * cat.lam(h, a, h2) * cat.lam(a, h, h2).inv()
        };
        let mut found = 0;
        for code in 0..candidates {
            let mut rest = code;
            let mut gen_values = vec![RootOfUnity::one(); gens.len()];
            // last generator varies fastest
            for v in gen_values.iter_mut().rev() {
                *v = RootOfUnity::new(k, (rest % k) as i64);
                rest /= k;
            }
            let Some(s) = extend_projective(cat, &gens, &gen_values, &beta) else { continue };
            let object = CenterObject::line(cat.clone(), a, |h| s[h]);
            let theta = object
                .balancing()
                .as_scalar()
                .and_then(|c| c.as_root_of_unity())
                .expect("balancing of a line is a root of unity");
            let character = GradedCharacter::new(group.clone(), object.graded_trace());
            out.push(SimpleObject {
                label: format!("({}, {})", group.name(a), found),
                grade: a,
                dim: 1,
                theta,
                object: Some(object),
                character,
            });
            found += 1;
        }
        if found != n {
            return Err(CenterError::Unsupported(format!(
                "grade {} carries higher-dimensional simples",
                group.name(a)
            )));
        }
    }
    Ok(out)
}

/// Extends generator values to `s : G → μ` with `s(hh') = β(h,h')·s(h)·s(h')`.
fn extend_projective(
    cat: &PointedCategory,
    gens: &[usize],
    values: &[RootOfUnity],
    beta: &impl Fn(usize, usize) -> RootOfUnity,
) -> Option<Vec<RootOfUnity>> {
    let group = cat.group();
    let n = group.order();
    let mut s: Vec<Option<RootOfUnity>> = vec![None; n];
    s[group.identity()] = Some(RootOfUnity::one());
    let mut queue = std::collections::VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        let sx = s[x].expect("assigned");
        for (&g, &v) in gens.iter().zip(values) {
            let y = group.mul(x, g);
            let want = beta(x, g) * sx * v;
            match s[y] {
                None => {
                    s[y] = Some(want);
                    queue.push_back(y);
                }
                Some(sy) if sy != want => return None,
                Some(_) => {}
            }
        }
    }
    let s: Vec<RootOfUnity> = s.into_iter().collect::<Option<_>>()?;
    for h in 0..n {
        for h2 in 0..n {
            if s[group.mul(h, h2)] != beta(h, h2) * s[h] * s[h2] {
                return None;
            }
        }
    }
    Some(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycles::ThreeCocycle;
    use crate::groups::{FiniteGroup, GroupHom};

    fn cat(group: FiniteGroup) -> Arc<PointedCategory> {
        Arc::new(PointedCategory::untwisted(Arc::new(group)))
    }

    #[test]
    fn abelian_untwisted_simples_are_pairs() {
        let list = simples(&cat(FiniteGroup::cyclic(3))).unwrap();
        assert_eq!(list.len(), 9);
        assert!(list.iter().all(|s| s.is_invertible() && s.object.is_some()));
        assert_eq!(list[0].grade, 0);
        assert!(list[0].theta.is_one());
        // θ_{(g,χ)} = χ(g)
        let thetas: Vec<u64> = list.iter().map(|s| s.theta.reduced().order()).collect();
        assert_eq!(thetas.iter().filter(|&&o| o == 1).count(), 5);
    }

    #[test]
    fn s3_has_eight_simples() {
        let g = FiniteGroup::from_generators(3, &[vec![1, 0, 2], vec![1, 2, 0]], 512).unwrap();
        let list = simples(&cat(g)).unwrap();
        assert_eq!(list.len(), 8);
        let mut dims: Vec<u64> = list.iter().map(|s| s.dim).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 2, 2, 2, 2, 3, 3]);
        assert_eq!(list.iter().filter(|s| s.object.is_none()).count(), 1);
    }

    #[test]
    fn twisted_cyclic_simples() {
        for (n, q) in [(2, 1), (3, 1), (4, 2)] {
            let lambda = ThreeCocycle::cyclic(n, q);
            let d = GroupHom::trivial(lambda.group().clone());
            let c = Arc::new(PointedCategory::new(lambda, d).unwrap());
            let list = simples(&c).unwrap();
            assert_eq!(list.len(), n * n);
            for s in &list {
                s.object.as_ref().unwrap().verify_half_braiding().unwrap();
            }
        }
    }

    #[test]
    fn twisted_nonabelian_is_unsupported() {
        let s3 = Arc::new(FiniteGroup::from_generators(3, &[vec![1, 0, 2], vec![1, 2, 0]], 512).unwrap());
        let sign = |g: usize| usize::from(s3.element_order(g) == 2);
        let z2 = ThreeCocycle::cyclic(2, 1);
        let mut values = Vec::new();
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    values.push(z2.value(sign(a), sign(b), sign(c)));
                }
            }
        }
        let lambda = ThreeCocycle::verify(s3.clone(), &values).unwrap();
        assert!(!lambda.is_trivial());
        let c = Arc::new(PointedCategory::new(lambda, GroupHom::trivial(s3)).unwrap());
        assert!(matches!(simples(&c), Err(CenterError::Unsupported(_))));
    }
}
