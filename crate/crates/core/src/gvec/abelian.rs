//! Kernels, cokernels, images and direct sums, computed grade by grade.

use super::morphism::GradedMorphism;
use super::object::{Category, GradedObject};
use crate::error::{Error, Result};
use crate::exactlin::Matrix;

/// `incl : ker(f) -> source(f)`, with `f ∘ incl = 0`.
#[derive(Debug, Clone)]
pub struct Kernel {
    pub object: GradedObject,
    pub incl: GradedMorphism,
}

/// `proj : target(f) -> coker(f)`, with `proj ∘ f = 0`.
#[derive(Debug, Clone)]
pub struct Cokernel {
    pub object: GradedObject,
    pub proj: GradedMorphism,
}

/// `f = phi ∘ psi` with `psi` epi onto the image and `phi` mono.
#[derive(Debug, Clone)]
pub struct ImageFactorization {
    pub image: GradedObject,
    pub psi: GradedMorphism,
    pub phi: GradedMorphism,
}

pub fn kernel(f: &GradedMorphism) -> Result<Kernel> {
    let ks: Vec<Matrix> = f.blocks().iter().map(Matrix::kernel_basis).collect();
    let mult: Vec<usize> = ks.iter().map(Matrix::cols).collect();
    let object = f.category().atomic(&mult)?;
    let incl = GradedMorphism::new(object.clone(), f.source().clone(), ks)?;
    Ok(Kernel { object, incl })
}

pub fn cokernel(f: &GradedMorphism) -> Result<Cokernel> {
    let qs: Vec<Matrix> = f
        .blocks()
        .iter()
        .map(|b| b.transpose().kernel_basis().transpose())
        .collect();
    let mult: Vec<usize> = qs.iter().map(Matrix::rows).collect();
    let object = f.category().atomic(&mult)?;
    let proj = GradedMorphism::new(f.target().clone(), object.clone(), qs)?;
    Ok(Cokernel { object, proj })
}

/// Column-space factorization from the reduced row echelon form: `phi` takes
/// the pivot columns of each block, `psi` the nonzero rows of its RREF.
pub fn image_factorization(f: &GradedMorphism) -> Result<ImageFactorization> {
    let mut phis = Vec::new();
    let mut psis = Vec::new();
    for b in f.blocks() {
        let rr = b.rref();
        let r = rr.pivots.len();
        phis.push(b.select_columns(&rr.pivots));
        psis.push(rr.reduced.select_rows(&(0..r).collect::<Vec<_>>()));
    }
    let mult: Vec<usize> = phis.iter().map(Matrix::cols).collect();
    let image = f.category().atomic(&mult)?;
    let psi = GradedMorphism::new(f.source().clone(), image.clone(), psis)?;
    let phi = GradedMorphism::new(image.clone(), f.target().clone(), phis)?;
    Ok(ImageFactorization { image, psi, phi })
}

/// Factor `h` through the kernel of `f`, if `f ∘ h = 0`.
pub fn factor_through_kernel(k: &Kernel, h: &GradedMorphism) -> Result<Option<GradedMorphism>> {
    if h.target() != k.incl.target() {
        return Err(Error::ObjectMismatch {
            op: "factor_through_kernel",
            detail: "target differs from kernel ambient".into(),
        });
    }
    let mut blocks = Vec::new();
    for (kb, hb) in k.incl.blocks().iter().zip(h.blocks()) {
        match kb.solve_right(hb)? {
            Some(x) => blocks.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(GradedMorphism::new(h.source().clone(), k.object.clone(), blocks)?))
}

pub fn is_mono(f: &GradedMorphism) -> bool {
    f.blocks().iter().all(|b| b.rank() == b.cols())
}

pub fn is_epi(f: &GradedMorphism) -> bool {
    f.blocks().iter().all(|b| b.rank() == b.rows())
}

pub fn is_iso(f: &GradedMorphism) -> bool {
    f.blocks().iter().all(|b| b.rows() == b.cols() && b.rank() == b.rows())
}

/// A direct sum with its injections and projections, summands in order.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub object: GradedObject,
    pub injections: Vec<GradedMorphism>,
    pub projections: Vec<GradedMorphism>,
}

pub fn direct_sum_obj(parts: &[&GradedObject]) -> Result<DirectSum> {
    let cat: &Category = parts.first().ok_or(Error::Input("empty direct sum".into()))?.category();
    for p in parts {
        cat.ensure_same(p.category())?;
    }
    let n = cat.grades();
    let mult: Vec<usize> = (0..n).map(|g| parts.iter().map(|p| p.mult(g)).sum()).collect();
    let object = cat.atomic(&mult)?;
    let mut offsets = vec![0usize; n];
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for p in parts {
        let inj = GradedMorphism::from_fn(p, &object, |g| {
            let mut m = Matrix::zeros(mult[g], p.mult(g));
            for s in 0..p.mult(g) {
                m.set(offsets[g] + s, s, num_traits::One::one());
            }
            m
        })?;
        let proj = GradedMorphism::from_fn(&object, p, |g| inj.block(g).transpose())?;
        for (g, off) in offsets.iter_mut().enumerate() {
            *off += p.mult(g);
        }
        injections.push(inj);
        projections.push(proj);
    }
    Ok(DirectSum {
        object,
        injections,
        projections,
    })
}

/// `f1 ⊕ f2 ⊕ ...` between the canonical direct sums of sources and targets.
pub fn direct_sum_mor(fs: &[&GradedMorphism]) -> Result<GradedMorphism> {
    let sources: Vec<&GradedObject> = fs.iter().map(|f| f.source()).collect();
    let targets: Vec<&GradedObject> = fs.iter().map(|f| f.target()).collect();
    let s = direct_sum_obj(&sources)?;
    let t = direct_sum_obj(&targets)?;
    let mut acc = GradedMorphism::zero(&s.object, &t.object)?;
    for (k, f) in fs.iter().enumerate() {
        let term = GradedMorphism::compose_all(&[&t.injections[k], f, &s.projections[k]])?;
        acc = acc.add(&term)?;
    }
    Ok(acc)
}
