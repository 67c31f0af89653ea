//! Split monomorphisms, split epimorphisms and weak inverses.
//!
//! Morphisms are grade-diagonal, so each search is a family of independent
//! linear systems, one per grade.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::gvec::{image_factorization, GradedMorphism};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitKind {
    /// `r ∘ f = id`
    Retraction,
    /// `f ∘ s = id`
    Section,
    /// `f ∘ g ∘ f = f`
    WeakInverse,
}

#[derive(Debug, Clone)]
pub struct SplitWitness {
    pub kind: SplitKind,
    pub witness: GradedMorphism,
}

impl SplitWitness {
    /// Re-checks the defining equation against `f`.
    pub fn verify(&self, f: &GradedMorphism) -> Result<bool> {
        let w = &self.witness;
        Ok(match self.kind {
            SplitKind::Retraction => w.source() == f.target() && w.compose(f)?.is_identity(),
            SplitKind::Section => w.target() == f.source() && f.compose(w)?.is_identity(),
            SplitKind::WeakInverse => GradedMorphism::compose_all(&[f, w, f])? == *f,
        })
    }
}

/// Some `r` with `r ∘ f = id_source`, if `f` is split mono.
pub fn find_retraction(f: &GradedMorphism) -> Result<Option<SplitWitness>> {
    let mut blocks = Vec::with_capacity(f.blocks().len());
    for b in f.blocks() {
        match b.solve_left(&Matrix::identity(b.cols()))? {
            Some(r) => blocks.push(r),
            None => return Ok(None),
        }
    }
    let witness = GradedMorphism::new(f.target().clone(), f.source().clone(), blocks)?;
    Ok(Some(SplitWitness {
        kind: SplitKind::Retraction,
        witness,
    }))
}

/// Some `s` with `f ∘ s = id_target`, if `f` is split epi.
pub fn find_section(f: &GradedMorphism) -> Result<Option<SplitWitness>> {
    let mut blocks = Vec::with_capacity(f.blocks().len());
    for b in f.blocks() {
        match b.solve_right(&Matrix::identity(b.rows()))? {
            Some(s) => blocks.push(s),
            None => return Ok(None),
        }
    }
    let witness = GradedMorphism::new(f.target().clone(), f.source().clone(), blocks)?;
    Ok(Some(SplitWitness {
        kind: SplitKind::Section,
        witness,
    }))
}

/// `g = ψ' ∘ φ'` where `f = φ ∘ ψ` is the image factorization, `ψ'` a section
/// of `ψ` and `φ'` a retraction of `φ`. Then `f g f = φ ψ ψ' φ' φ ψ = f`.
pub fn weak_inverse(f: &GradedMorphism) -> Result<SplitWitness> {
    let im = image_factorization(f)?;
    let psi_s = find_section(&im.psi)?
        .ok_or_else(|| Error::Consistency("image coprojection has no section".into()))?;
    let phi_r = find_retraction(&im.phi)?
        .ok_or_else(|| Error::Consistency("image inclusion has no retraction".into()))?;
    let witness = psi_s.witness.compose(&phi_r.witness)?;
    let w = SplitWitness {
        kind: SplitKind::WeakInverse,
        witness,
    };
    if !w.verify(f)? {
        return Err(Error::Consistency("weak inverse fails f g f = f".into()));
    }
    Ok(w)
}

/// Always true in this model; a failure surfaces as a consistency error.
pub fn is_regular(f: &GradedMorphism) -> Result<bool> {
    weak_inverse(f).map(|_| true)
}

pub fn is_mono(f: &GradedMorphism) -> bool {
    crate::gvec::is_mono(f)
}

pub fn is_epi(f: &GradedMorphism) -> bool {
    crate::gvec::is_epi(f)
}

pub fn is_split_mono(f: &GradedMorphism) -> Result<bool> {
    Ok(find_retraction(f)?.is_some())
}

pub fn is_split_epi(f: &GradedMorphism) -> Result<bool> {
    Ok(find_section(f)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Matrix;
    use crate::groupoid::Groupoid;
    use crate::gvec::{kernel, unit_inclusion, unit_projection, Category};
    use crate::sampling::{random_arrow, rng};
    use proptest::prelude::*;

    fn pair2() -> Category {
        Category::new(Groupoid::pair(2).unwrap())
    }

    fn z2() -> Category {
        Category::new(Groupoid::cyclic(2).unwrap())
    }

    #[test]
    fn identity_splits_both_ways() {
        let c = z2();
        let id = GradedMorphism::identity(&c.atomic(&[2, 1]).unwrap());
        assert!(find_retraction(&id).unwrap().unwrap().witness.is_identity());
        assert!(find_section(&id).unwrap().unwrap().witness.is_identity());
        assert!(weak_inverse(&id).unwrap().witness.is_identity());
    }

    #[test]
    fn projection_to_unit_summand() {
        let c = pair2();
        let p0 = unit_projection(&c, &[0]).unwrap();
        assert!(find_retraction(&p0).unwrap().is_none());
        assert!(!is_mono(&p0));
        assert_eq!(kernel(&p0).unwrap().object.mults(), c.unit_summand(&[1]).unwrap().mults());
        let s = find_section(&p0).unwrap().unwrap();
        assert_eq!(s.witness, unit_inclusion(&c, &[0]).unwrap());
    }

    #[test]
    fn group_algebra_unit_retraction() {
        // u : 1 -> k[Z2] has block [1] at e (the unit sits in the e-slot)
        let c = z2();
        let a = c.atomic(&[1, 1]).unwrap();
        let u = GradedMorphism::new(c.unit(), a, vec![Matrix::from_i64(&[&[1]]), Matrix::zeros(1, 0)]).unwrap();
        let r = find_retraction(&u).unwrap().unwrap();
        assert_eq!(r.witness.block(0), &Matrix::from_i64(&[&[1]]));
        assert_eq!(r.witness.block(1).shape(), (0, 1));
    }

    #[test]
    fn zero_map_has_no_section() {
        let c = z2();
        let v = c.atomic(&[1, 0]).unwrap();
        let w = c.atomic(&[1, 1]).unwrap();
        assert!(find_section(&GradedMorphism::zero(&v, &w).unwrap()).unwrap().is_none());
    }

    #[test]
    fn zero_map_weak_inverse_is_zero() {
        let c = z2();
        let v = c.atomic(&[1, 2]).unwrap();
        let w = c.atomic(&[2, 1]).unwrap();
        assert!(weak_inverse(&GradedMorphism::zero(&v, &w).unwrap()).unwrap().witness.is_zero());
    }

    #[test]
    fn weak_inverse_of_rank_one_row() {
        let c = z2();
        let src = c.atomic(&[2, 0]).unwrap();
        let tgt = c.atomic(&[1, 0]).unwrap();
        let f = GradedMorphism::new(src, tgt, vec![Matrix::from_i64(&[&[1, 1]]), Matrix::zeros(0, 0)]).unwrap();
        let g = weak_inverse(&f).unwrap();
        assert_eq!(GradedMorphism::compose_all(&[&f, &g.witness, &f]).unwrap(), f);
    }

    fn categories() -> Vec<Category> {
        vec![
            z2(),
            Category::new(Groupoid::symmetric3()),
            pair2(),
            Category::new(Groupoid::pair(3).unwrap()),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn every_morphism_is_regular(seed in any::<u64>(), which in 0usize..4) {
            let mut r = rng(seed);
            let f = random_arrow(&categories()[which], &mut r, 4);
            let g = weak_inverse(&f).unwrap();
            prop_assert_eq!(GradedMorphism::compose_all(&[&f, &g.witness, &f]).unwrap(), f);
        }

        #[test]
        fn mono_iff_split_mono_and_epi_iff_split_epi(seed in any::<u64>(), which in 0usize..4) {
            let mut r = rng(seed);
            let f = random_arrow(&categories()[which], &mut r, 4);
            let ret = find_retraction(&f).unwrap();
            let sec = find_section(&f).unwrap();
            prop_assert_eq!(is_mono(&f), ret.is_some());
            prop_assert_eq!(is_epi(&f), sec.is_some());
            if let Some(w) = &ret {
                prop_assert!(w.verify(&f).unwrap());
            }
            if let Some(w) = &sec {
                prop_assert!(w.verify(&f).unwrap());
            }
            prop_assert_eq!(crate::gvec::is_iso(&f), ret.is_some() && sec.is_some());
        }
    }
}
