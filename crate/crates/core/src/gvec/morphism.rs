use std::fmt;

use num_traits::One;

use super::object::{Category, GradedObject, Word};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Rational};

/// A grade-preserving linear map: one block per grade, of shape
/// `target.mult(g) x source.mult(g)`. Zero-dimensional blocks are stored as
/// empty matrices, so equality is plain structural equality.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedMorphism {
    pub(crate) source: GradedObject,
    pub(crate) target: GradedObject,
    pub(crate) blocks: Vec<Matrix>,
}

impl fmt::Debug for GradedMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?} ", self.source, self.target)?;
        let mut m = f.debug_map();
        for (g, b) in self.blocks.iter().enumerate() {
            if b.rows() > 0 && b.cols() > 0 {
                m.entry(&g, b);
            }
        }
        m.finish()
    }
}

impl GradedMorphism {
    pub fn new(source: GradedObject, target: GradedObject, blocks: Vec<Matrix>) -> Result<Self> {
        source.cat.ensure_same(&target.cat)?;
        if blocks.len() != source.cat.grades() {
            return Err(Error::ObjectMismatch {
                op: "morphism",
                detail: format!("expected {} blocks, got {}", source.cat.grades(), blocks.len()),
            });
        }
        for (g, b) in blocks.iter().enumerate() {
            let expected = (target.mult(g), source.mult(g));
            if b.shape() != expected {
                return Err(Error::BlockShape {
                    grade: g,
                    expected,
                    found: b.shape(),
                });
            }
        }
        Ok(GradedMorphism {
            source,
            target,
            blocks,
        })
    }

    /// Builds blocks from a closure called once per grade.
    pub fn from_fn(
        source: &GradedObject,
        target: &GradedObject,
        mut block: impl FnMut(usize) -> Matrix,
    ) -> Result<Self> {
        let blocks = (0..source.cat.grades()).map(&mut block).collect();
        Self::new(source.clone(), target.clone(), blocks)
    }

    pub fn identity(obj: &GradedObject) -> Self {
        GradedMorphism {
            source: obj.clone(),
            target: obj.clone(),
            blocks: obj.basis.iter().map(|b| Matrix::identity(b.len())).collect(),
        }
    }

    pub fn zero(source: &GradedObject, target: &GradedObject) -> Result<Self> {
        Self::from_fn(source, target, |g| Matrix::zeros(target.mult(g), source.mult(g)))
    }

    /// Matches basis vectors by word: entry `(r, c)` of grade `g` is 1 when the
    /// `r`-th word of `target` equals the `c`-th word of `source`. Gives the
    /// canonical inclusions and projections between an object and its
    /// restrictions.
    pub fn by_words(source: &GradedObject, target: &GradedObject) -> Result<Self> {
        Self::from_fn(source, target, |g| {
            let tw: &[Word] = target.basis(g);
            let sw: &[Word] = source.basis(g);
            Matrix::from_fn(tw.len(), sw.len(), |r, c| {
                if tw[r] == sw[c] {
                    Rational::one()
                } else {
                    num_traits::Zero::zero()
                }
            })
        })
    }

    pub fn category(&self) -> &Category {
        &self.source.cat
    }

    pub fn source(&self) -> &GradedObject {
        &self.source
    }

    pub fn target(&self) -> &GradedObject {
        &self.target
    }

    pub fn block(&self, g: usize) -> &Matrix {
        &self.blocks[g]
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.blocks.iter().all(Matrix::is_identity)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GradedMorphism) -> Result<GradedMorphism> {
        if inner.target != self.source {
            return Err(Error::ObjectMismatch {
                op: "compose",
                detail: format!("{:?} does not match {:?}", inner.target, self.source),
            });
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&inner.blocks)
            .map(|(a, b)| a.matmul(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GradedMorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            blocks,
        })
    }

    /// Composes a chain written left to right as in `f_n ∘ ... ∘ f_1`.
    pub fn compose_all(chain: &[&GradedMorphism]) -> Result<GradedMorphism> {
        let (last, rest) = chain.split_last().expect("nonempty chain");
        rest.iter().rev().try_fold((*last).clone(), |acc, f| f.compose(&acc))
    }

    pub fn add(&self, other: &GradedMorphism) -> Result<GradedMorphism> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ObjectMismatch {
                op: "add",
                detail: "source or target differ".into(),
            });
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GradedMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks,
        })
    }

    pub fn sub(&self, other: &GradedMorphism) -> Result<GradedMorphism> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> GradedMorphism {
        GradedMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    /// Same matrices viewed between differently labelled objects with the
    /// same multiplicities.
    pub fn retype(&self, source: &GradedObject, target: &GradedObject) -> Result<GradedMorphism> {
        if !self.source.same_class(source) || !self.target.same_class(target) {
            return Err(Error::ObjectMismatch {
                op: "retype",
                detail: "multiplicities differ".into(),
            });
        }
        GradedMorphism::new(source.clone(), target.clone(), self.blocks.clone())
    }

    /// `R_J(f)`: the restriction `1_J ⊗ f ⊗ 1_J`.
    pub fn restrict(&self, objects: &[usize]) -> GradedMorphism {
        let g = self.category().groupoid();
        let source = self.source.restrict(objects);
        let target = self.target.restrict(objects);
        let blocks = self
            .blocks
            .iter()
            .enumerate()
            .map(|(k, b)| {
                if objects.contains(&g.src(k)) && objects.contains(&g.tgt(k)) {
                    b.clone()
                } else {
                    Matrix::zeros(0, 0)
                }
            })
            .collect();
        GradedMorphism {
            source,
            target,
            blocks,
        }
    }

    /// Basis of `Hom(v, w)`: one matrix unit per (grade, row, column).
    pub fn hom_basis(v: &GradedObject, w: &GradedObject) -> Result<Vec<GradedMorphism>> {
        v.cat.ensure_same(&w.cat)?;
        let mut out = Vec::new();
        for g in 0..v.cat.grades() {
            for r in 0..w.mult(g) {
                for c in 0..v.mult(g) {
                    out.push(GradedMorphism::from_fn(v, w, |k| {
                        let mut m = Matrix::zeros(w.mult(k), v.mult(k));
                        if k == g {
                            m.set(r, c, Rational::one());
                        }
                        m
                    })?);
                }
            }
        }
        Ok(out)
    }

    pub fn hom_dim(v: &GradedObject, w: &GradedObject) -> usize {
        (0..v.cat.grades()).map(|g| v.mult(g) * w.mult(g)).sum()
    }
}
