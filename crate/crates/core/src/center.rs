//! Objects of the Drinfeld center of a pointed category, stored as graded
//! spaces with half-braiding matrices `σ^g_h : V_g → V_{h⁻¹gh}`.
//!
//! Tensor products order the summands `V_a ⊗ W_b` of `(V⊗W)_g` by the index
//! of `a`, and the basis of `V_a ⊗ W_b` is `v_i ⊗ w_j ↦ i·dim W_b + j`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{Echelon, Matrix};
use crate::pointed::PointedCategory;
use crate::scalars::{Cyclotomic, RootOfUnity};

pub mod simples;

pub use simples::{simples, SimpleObject};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CenterError {
    #[error("graded dimensions must have one entry per group element")]
    GradingLength,
    #[error("half braiding at ({g}, {h}) has the wrong shape or is missing")]
    Shape { g: usize, h: usize },
    #[error("half braiding at grade {0} is not the identity for the unit")]
    NotUnital(usize),
    #[error("half braiding at ({g}, {h}) is not invertible")]
    NotInvertible { g: usize, h: usize },
    #[error("half braiding relation fails at ({g}, {h}, {h2})")]
    Relation { g: usize, h: usize, h2: usize },
    #[error("objects live over different categories")]
    CategoryMismatch,
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("scalar outside the field of conductor {0}")]
    Field(u64),
}

/// Conductor of the field used for all center computations over `cat`.
pub fn field_conductor(cat: &PointedCategory) -> u64 {
    let base = cat.conductor();
    if cat.lambda().is_trivial() {
        base
    } else {
        base.lcm(&(cat.group().exponent() as u64 * cat.lambda().order()))
    }
}

#[derive(Clone, Debug)]
pub struct CenterObject {
    category: Arc<PointedCategory>,
    conductor: u64,
    dims: Vec<usize>,
    // index g·|G| + h; present iff dims[g] > 0
    sigma: Vec<Option<Matrix>>,
}

/// A grade-preserving map, one block per group element.
#[derive(Clone, Debug, PartialEq)]
pub struct CenterMorphism {
    pub blocks: Vec<Matrix>,
}

impl CenterMorphism {
    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|b| b.rows() == 0 || b.is_identity())
    }

    /// The scalar `c` if the morphism is `c·id` (on a nonzero object).
    pub fn as_scalar(&self) -> Option<Cyclotomic> {
        let mut found: Option<Cyclotomic> = None;
        for b in self.blocks.iter().filter(|b| b.rows() > 0) {
            let c = b.as_scalar()?;
            match &found {
                Some(f) if *f != c => return None,
                Some(_) => {}
                None => found = Some(c),
            }
        }
        found
    }

    pub fn compose(&self, first: &CenterMorphism) -> CenterMorphism {
        CenterMorphism { blocks: self.blocks.iter().zip(&first.blocks).map(|(a, b)| a.mul(b)).collect() }
    }
}

/// Serialized shape: `{"graded_dims": {"g": n}, "sigma": {"g,h": matrix}}`
/// with element indices as keys.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CenterObjectRepr {
    pub graded_dims: BTreeMap<String, usize>,
    pub sigma: BTreeMap<String, Matrix>,
}

impl CenterObject {
    /// Validates shapes, unitality, invertibility and the twisted
    /// composition law.
    pub fn new(category: Arc<PointedCategory>, dims: Vec<usize>, sigma: Vec<Option<Matrix>>) -> Result<Self, CenterError> {
        let n = category.group().order();
        if dims.len() != n {
            return Err(CenterError::GradingLength);
        }
        let conductor = field_conductor(&category);
        let mut embedded = Vec::with_capacity(n * n);
        for m in sigma {
            embedded.push(match m {
                Some(m) if conductor % m.conductor() == 0 => Some(m.embed(conductor)),
                Some(m) => return Err(CenterError::Field(m.conductor())),
                None => None,
            });
        }
        if embedded.len() != n * n {
            return Err(CenterError::Shape { g: embedded.len() / n.max(1), h: 0 });
        }
        let object = CenterObject { category, conductor, dims, sigma: embedded };
        object.verify_half_braiding()?;
        Ok(object)
    }

    pub(crate) fn unchecked(category: Arc<PointedCategory>, dims: Vec<usize>, sigma: Vec<Option<Matrix>>) -> Self {
        let conductor = field_conductor(&category);
        CenterObject { category, conductor, dims, sigma }
    }

    pub fn verify_half_braiding(&self) -> Result<(), CenterError> {
        let cat = &self.category;
        let g_ = cat.group();
        let n = g_.order();
        let e = g_.identity();
        for g in 0..n {
            for h in 0..n {
                let target = g_.conjugate(g, h);
                let ok = match &self.sigma[g * n + h] {
                    None => self.dims[g] == 0,
                    Some(m) => self.dims[g] > 0 && m.cols() == self.dims[g] && m.rows() == self.dims[target],
                };
                if !ok {
                    return Err(CenterError::Shape { g, h });
                }
            }
        }
        for g in self.support() {
            if !self.sigma(g, e).is_identity() {
                return Err(CenterError::NotUnital(g));
            }
            for h in 0..n {
                if self.sigma(g, h).inverse().is_none() {
                    return Err(CenterError::NotInvertible { g, h });
                }
            }
        }
        for g in self.support() {
            for h in 0..n {
                let gh = g_.conjugate(g, h);
                let first = self.sigma(g, h);
                for h2 in 0..n {
                    let hh = g_.mul(h, h2);
                    let end = g_.conjugate(g, hh);
                    let factor = cat.lam(h, h2, end).inv() * cat.lam(h, gh, h2) * cat.lam(g, h, h2).inv();
                    let rhs = self.sigma(gh, h2).mul(first).scale_root(factor);
                    if *self.sigma(g, hh) != rhs {
                        return Err(CenterError::Relation { g, h, h2 });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn category(&self) -> &Arc<PointedCategory> {
        &self.category
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&g| self.dims[g] > 0).collect()
    }

    /// `σ^g_h`; panics if `g` is outside the support.
    pub fn sigma(&self, g: usize, h: usize) -> &Matrix {
        let n = self.dims.len();
        self.sigma[g * n + h].as_ref().expect("grade in support")
    }

    pub fn sigma_table(&self) -> &[Option<Matrix>] {
        &self.sigma
    }

    fn same_category(&self, other: &CenterObject) -> Result<(), CenterError> {
        if Arc::ptr_eq(&self.category, &other.category)
            || (self.category.group() == other.category.group()
                && self.category.lambda() == other.category.lambda()
                && self.category.d() == other.category.d())
        {
            Ok(())
        } else {
            Err(CenterError::CategoryMismatch)
        }
    }

    pub fn unit(category: Arc<PointedCategory>) -> Self {
        let e = category.group().identity();
        Self::line(category, e, |_| RootOfUnity::one())
    }

    /// One-dimensional object at a central grade `g` with `σ^g_h = s(h)`.
    /// Not verified.
    pub fn line(category: Arc<PointedCategory>, g: usize, s: impl Fn(usize) -> RootOfUnity) -> Self {
        let n = category.group().order();
        let conductor = field_conductor(&category);
        let mut dims = vec![0; n];
        dims[g] = 1;
        let mut sigma = vec![None; n * n];
        for h in 0..n {
            sigma[g * n + h] = Some(Matrix::scalar(conductor, 1, s(h)));
        }
        CenterObject { category, conductor, dims, sigma }
    }

    pub fn direct_sum(&self, other: &CenterObject) -> Result<CenterObject, CenterError> {
        self.same_category(other)?;
        let n = self.dims.len();
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let group = self.category.group();
        let mut sigma = vec![None; n * n];
        for g in 0..n {
            if dims[g] == 0 {
                continue;
            }
            for h in 0..n {
                let t = group.conjugate(g, h);
                let mut m = Matrix::zeros(self.conductor, dims[t], dims[g]);
                if self.dims[g] > 0 {
                    place(&mut m, 0, 0, self.sigma(g, h));
                }
                if other.dims[g] > 0 {
                    place(&mut m, self.dims[t], self.dims[g], other.sigma(g, h));
                }
                sigma[g * n + h] = Some(m);
            }
        }
        Ok(CenterObject::unchecked(self.category.clone(), dims, sigma))
    }

    /// Summands `(a, b, offset)` of `(V⊗W)_g`, in order.
    fn tensor_layout(&self, other: &CenterObject, g: usize) -> Vec<(usize, usize, usize)> {
        let group = self.category.group();
        let mut out = Vec::new();
        let mut offset = 0;
        for a in self.support() {
            let b = group.mul(group.inv(a), g);
            if other.dims[b] > 0 {
                out.push((a, b, offset));
                offset += self.dims[a] * other.dims[b];
            }
        }
        out
    }

    pub fn tensor(&self, other: &CenterObject) -> Result<CenterObject, CenterError> {
        self.same_category(other)?;
        let cat = &self.category;
        let group = cat.group();
        let n = group.order();
        let layouts: Vec<Vec<(usize, usize, usize)>> = (0..n).map(|g| self.tensor_layout(other, g)).collect();
        let dims: Vec<usize> = layouts
            .iter()
            .map(|l| l.last().map_or(0, |&(a, b, off)| off + self.dims[a] * other.dims[b]))
            .collect();
        let mut sigma = vec![None; n * n];
        for g in 0..n {
            if dims[g] == 0 {
                continue;
            }
            for h in 0..n {
                let t = group.conjugate(g, h);
                let mut m = Matrix::zeros(self.conductor, dims[t], dims[g]);
                for &(a, b, off) in &layouts[g] {
                    let (a2, b2) = (group.conjugate(a, h), group.conjugate(b, h));
                    let target_off = layouts[t].iter().find(|&&(x, _, _)| x == a2).expect("conjugate summand").2;
                    let factor = cat.lam(a, b, h) * cat.lam(a, h, b2).inv() * cat.lam(h, a2, b2);
                    let block = self.sigma(a, h).kron(other.sigma(b, h)).scale_root(factor);
                    place(&mut m, target_off, off, &block);
                }
                sigma[g * n + h] = Some(m);
            }
        }
        Ok(CenterObject::unchecked(cat.clone(), dims, sigma))
    }

    /// `c_{V,W} : V⊗W → W⊗V`, `v⊗w ↦ w⊗σ_V(v)`.
    pub fn braiding(&self, other: &CenterObject) -> Result<CenterMorphism, CenterError> {
        self.same_category(other)?;
        let group = self.category.group();
        let n = group.order();
        let mut blocks = Vec::with_capacity(n);
        for g in 0..n {
            let src = self.tensor_layout(other, g);
            let dst = other.tensor_layout(self, g);
            let size = src.last().map_or(0, |&(a, b, off)| off + self.dims[a] * other.dims[b]);
            let mut m = Matrix::zeros(self.conductor, size, size);
            for &(a, b, off) in &src {
                let a2 = group.conjugate(a, b);
                let toff = dst.iter().find(|&&(x, _, _)| x == b).expect("braided summand").2;
                let s = self.sigma(a, b);
                let (dv, dw, dv2) = (self.dims[a], other.dims[b], self.dims[a2]);
                for iv in 0..dv {
                    for iw in 0..dw {
                        for jv in 0..dv2 {
                            let x = &s[(jv, iv)];
                            if !x.is_zero() {
                                m.set(toff + iw * dv2 + jv, off + iv * dw + iw, x.clone());
                            }
                        }
                    }
                }
            }
            blocks.push(m);
        }
        Ok(CenterMorphism { blocks })
    }

    /// `c_{W,V} ∘ c_{V,W}` on `V⊗W`.
    pub fn double_braiding(&self, other: &CenterObject) -> Result<CenterMorphism, CenterError> {
        Ok(other.braiding(self)?.compose(&self.braiding(other)?))
    }

    /// Rigid dual: `(V*)_{g⁻¹} = (V_g)*` with the inverse-transposed half
    /// braiding, corrected by associator factors.
    pub fn rigid_dual(&self) -> CenterObject {
        let cat = &self.category;
        let group = cat.group();
        let n = group.order();
        let mut dims = vec![0; n];
        for g in self.support() {
            dims[group.inv(g)] = self.dims[g];
        }
        let mut sigma = vec![None; n * n];
        for g in self.support() {
            let gi = group.inv(g);
            for h in 0..n {
                let b = group.conjugate(g, h);
                let bi = group.inv(b);
                let kappa = cat.lam(b, bi, b).inv()
                    * cat.lam(h, b, bi).inv()
                    * cat.lam(g, h, bi)
                    * cat.lam(gi, g, group.mul(h, bi)).inv();
                let m = self.sigma(g, h).inverse().expect("half braiding is invertible").transpose().scale_root(kappa);
                sigma[gi * n + h] = Some(m);
            }
        }
        CenterObject::unchecked(cat.clone(), dims, sigma)
    }

    /// Dimension of the space of grade-preserving maps intertwining the
    /// half braidings. Generators of `G` suffice by the composition law.
    pub fn hom_dim(&self, other: &CenterObject) -> Result<usize, CenterError> {
        self.same_category(other)?;
        let group = self.category.group();
        let n = group.order();
        let mut offsets = vec![usize::MAX; n];
        let mut unknowns = 0;
        for g in 0..n {
            if self.dims[g] > 0 && other.dims[g] > 0 {
                offsets[g] = unknowns;
                unknowns += self.dims[g] * other.dims[g];
            }
        }
        if unknowns == 0 {
            return Ok(0);
        }
        // f_g[r][c] has index offsets[g] + r·dim V_g + c
        let var = |g: usize, r: usize, c: usize| offsets[g] + r * self.dims[g] + c;
        let mut ech = Echelon::new(unknowns);
        for h in group.generators() {
            for g in self.support() {
                let t = group.conjugate(g, h);
                if other.dims[g] == 0 {
                    continue;
                }
                let (sv, sw) = (self.sigma(g, h), other.sigma(g, h));
                for r in 0..other.dims[t] {
                    for c in 0..self.dims[g] {
                        let mut row: BTreeMap<usize, Cyclotomic> = BTreeMap::new();
                        // (σ_W f_g)[r][c]
                        for k in 0..other.dims[g] {
                            let x = &sw[(r, k)];
                            if !x.is_zero() {
                                add_entry(&mut row, var(g, k, c), x.clone());
                            }
                        }
                        // -(f_t σ_V)[r][c]
                        for k in 0..self.dims[t] {
                            let x = &sv[(k, c)];
                            if !x.is_zero() {
                                add_entry(&mut row, var(t, r, k), -x);
                            }
                        }
                        ech.insert(row.into_iter().collect());
                    }
                }
            }
        }
        Ok(ech.nullity())
    }

    /// `θ|_{V_g} = d(g)⁻¹ · σ^g_g`.
    pub fn balancing(&self) -> CenterMorphism {
        let n = self.dims.len();
        let blocks = (0..n)
            .map(|g| {
                if self.dims[g] == 0 {
                    Matrix::zeros(self.conductor, 0, 0)
                } else {
                    self.sigma(g, g).scale_root(self.category.d().value(g).inv())
                }
            })
            .collect();
        CenterMorphism { blocks }
    }

    /// Applies `f ⊗ f'` blockwise to `V⊗W`, with `f, f'` grade-preserving.
    pub fn tensor_morphisms(&self, other: &CenterObject, f: &CenterMorphism, f2: &CenterMorphism) -> CenterMorphism {
        let n = self.dims.len();
        let blocks = (0..n)
            .map(|g| {
                let layout = self.tensor_layout(other, g);
                let size = layout.last().map_or(0, |&(a, b, off)| off + self.dims[a] * other.dims[b]);
                let mut m = Matrix::zeros(self.conductor, size, size);
                for &(a, b, off) in &layout {
                    place(&mut m, off, off, &f.blocks[a].kron(&f2.blocks[b]));
                }
                m
            })
            .collect();
        CenterMorphism { blocks }
    }

    /// Trace of `σ^g_h` on commuting pairs, zero elsewhere; index `g·|G| + h`.
    pub fn graded_trace(&self) -> Vec<Cyclotomic> {
        let group = self.category.group();
        let n = group.order();
        let mut out = vec![Cyclotomic::zero(self.conductor); n * n];
        for g in self.support() {
            for h in 0..n {
                if group.commute(g, h) {
                    out[g * n + h] = self.sigma(g, h).trace();
                }
            }
        }
        out
    }

    pub fn to_repr(&self) -> CenterObjectRepr {
        let n = self.dims.len();
        let graded_dims = self.support().into_iter().map(|g| (g.to_string(), self.dims[g])).collect();
        let mut sigma = BTreeMap::new();
        for g in self.support() {
            for h in 0..n {
                sigma.insert(format!("{g},{h}"), self.sigma(g, h).clone());
            }
        }
        CenterObjectRepr { graded_dims, sigma }
    }

    /// Parses and verifies a serialized object over `category`.
    pub fn from_repr(category: Arc<PointedCategory>, repr: &CenterObjectRepr) -> Result<Self, CenterError> {
        let n = category.group().order();
        let mut dims = vec![0; n];
        for (k, &v) in &repr.graded_dims {
            let g: usize = k.trim().parse().map_err(|_| CenterError::GradingLength)?;
            if g >= n {
                return Err(CenterError::GradingLength);
            }
            dims[g] = v;
        }
        let mut sigma = vec![None; n * n];
        for (k, m) in &repr.sigma {
            let parts: Vec<&str> = k.split(',').collect();
            let parse = |s: &str| s.trim().parse::<usize>().ok().filter(|&x| x < n);
            let (Some(g), Some(h)) = (parts.first().and_then(|s| parse(s)), parts.get(1).and_then(|s| parse(s))) else {
                return Err(CenterError::Shape { g: n, h: n });
            };
            if parts.len() != 2 {
                return Err(CenterError::Shape { g, h });
            }
            sigma[g * n + h] = Some(m.clone());
        }
        CenterObject::new(category, dims, sigma)
    }
}

fn add_entry(row: &mut BTreeMap<usize, Cyclotomic>, col: usize, x: Cyclotomic) {
    match row.get_mut(&col) {
        Some(v) => *v = &*v + &x,
        None => {
            row.insert(col, x);
        }
    }
}

fn place(m: &mut Matrix, row: usize, col: usize, block: &Matrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let x = &block[(i, j)];
            if !x.is_zero() {
                m.set(row + i, col + j, x.clone());
            }
        }
    }
}
