//! Groupoid-graded finite-dimensional vector spaces over the rationals.

mod abelian;
mod morphism;
mod object;
mod tensor;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use abelian::{
    cokernel, direct_sum_mor, direct_sum_obj, factor_through_kernel, image_factorization, is_epi, is_iso,
    is_mono, kernel, Cokernel, DirectSum, ImageFactorization, Kernel,
};
pub use morphism::GradedMorphism;
pub use object::{Atom, Category, GradedObject, Word};
pub use tensor::{
    dual_mor, dual_mor_via_pairings, dual_obj, left_dual, tensor_mor, tensor_mors, tensor_obj, tensor_objs,
    whisker_left, whisker_right, LeftDual,
};

use crate::error::{Error, Result};
use crate::exactlin::Matrix;

/// `i_J : 1_J -> 1`.
pub fn unit_inclusion(cat: &Category, objects: &[usize]) -> Result<GradedMorphism> {
    GradedMorphism::by_words(&cat.unit_summand(objects)?, &cat.unit())
}

/// `p_J : 1 -> 1_J`.
pub fn unit_projection(cat: &Category, objects: &[usize]) -> Result<GradedMorphism> {
    GradedMorphism::by_words(&cat.unit(), &cat.unit_summand(objects)?)
}

/// `i_{X_ij} : X_ij -> X`.
pub fn component_inclusion(x: &GradedObject, i: usize, j: usize) -> Result<GradedMorphism> {
    GradedMorphism::by_words(&x.component(i, j), x)
}

/// `p_{X_ij} : X -> X_ij`.
pub fn component_projection(x: &GradedObject, i: usize, j: usize) -> Result<GradedMorphism> {
    GradedMorphism::by_words(x, &x.component(i, j))
}

/// `i_{X_J} : X_J -> X`.
pub fn restriction_inclusion(x: &GradedObject, objects: &[usize]) -> Result<GradedMorphism> {
    GradedMorphism::by_words(&x.restrict(objects), x)
}

/// `p_{X_J} : X -> X_J`.
pub fn restriction_projection(x: &GradedObject, objects: &[usize]) -> Result<GradedMorphism> {
    GradedMorphism::by_words(x, &x.restrict(objects))
}

/// File form of an object: multiplicities keyed by grade index, or a unit
/// summand `1_J`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectSpec {
    Mult { mult: BTreeMap<String, usize> },
    Unit { unit: Vec<usize> },
}

impl ObjectSpec {
    pub fn build(&self, cat: &Category) -> Result<GradedObject> {
        match self {
            ObjectSpec::Mult { mult } => {
                let mut dense = BTreeMap::new();
                for (k, &m) in mult {
                    let g: usize = k
                        .parse()
                        .map_err(|_| Error::Input(format!("grade key {k:?} is not an index")))?;
                    dense.insert(g, m);
                }
                cat.from_mult_map(&dense)
            }
            ObjectSpec::Unit { unit } => cat.unit_summand(unit),
        }
    }

    /// Unit summands round-trip as `{"unit": ...}`, everything else by
    /// multiplicities.
    pub fn of(obj: &GradedObject) -> ObjectSpec {
        match obj.unit_support() {
            Some(j) if !obj.is_zero() => ObjectSpec::Unit { unit: j },
            _ => ObjectSpec::Mult {
                mult: obj.mult_map().into_iter().map(|(g, m)| (g.to_string(), m)).collect(),
            },
        }
    }
}

/// File form of a morphism. Absent blocks are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismSpec {
    pub source: ObjectSpec,
    pub target: ObjectSpec,
    #[serde(default)]
    pub blocks: BTreeMap<String, Matrix>,
}

impl MorphismSpec {
    pub fn build(&self, cat: &Category) -> Result<GradedMorphism> {
        let source = self.source.build(cat)?;
        let target = self.target.build(cat)?;
        self.build_between(&source, &target)
    }

    /// Reads the blocks onto given source and target objects, which must
    /// match the declared multiplicities.
    pub fn build_between(&self, source: &GradedObject, target: &GradedObject) -> Result<GradedMorphism> {
        let cat = source.category();
        let mut blocks: Vec<Matrix> = (0..cat.grades())
            .map(|g| Matrix::zeros(target.mult(g), source.mult(g)))
            .collect();
        for (k, m) in &self.blocks {
            let g: usize = k
                .parse()
                .map_err(|_| Error::Input(format!("grade key {k:?} is not an index")))?;
            if g >= blocks.len() {
                return Err(Error::OutOfRange {
                    what: "grade",
                    index: g,
                    bound: blocks.len(),
                });
            }
            if m.rows() == 0 || m.cols() == 0 {
                continue;
            }
            blocks[g] = m.clone();
        }
        GradedMorphism::new(source.clone(), target.clone(), blocks)
    }

    pub fn of(f: &GradedMorphism) -> MorphismSpec {
        MorphismSpec {
            source: ObjectSpec::of(f.source()),
            target: ObjectSpec::of(f.target()),
            blocks: f
                .blocks()
                .iter()
                .enumerate()
                .filter(|(_, b)| b.rows() > 0 && b.cols() > 0)
                .map(|(g, b)| (g.to_string(), b.clone()))
                .collect(),
        }
    }
}
