//! Tensor products and left duals.
//!
//! The grade-`k` part of `V ⊗ W` is spanned by pairs of basis vectors at
//! grades `g1, g2` with `g1 * g2 = k`; its basis is sorted by the concatenated
//! word. For objects with one-letter words this is the lexicographic order on
//! `(g1, g2)` with slots left-factor-major, and flattened n-fold products come
//! out in lexicographic order on tuples, so `(U ⊗ V) ⊗ W` and `U ⊗ (V ⊗ W)`
//! are the same value, as are `1 ⊗ V`, `V` and `V ⊗ 1`.

use num_traits::{One, Zero};

use super::morphism::GradedMorphism;
use super::object::{dual_word, GradedObject, Word};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Rational};

/// Position of each factor pair inside the tensor basis, per grade and per
/// factorization (aligned with `Groupoid::factorizations`).
pub(crate) struct TensorLayout {
    /// `index[k][p][a * n_b + b]` is the position of `(a, b)` for the `p`-th
    /// factorization of grade `k`.
    index: Vec<Vec<Vec<usize>>>,
}

pub(crate) fn tensor_with_layout(v: &GradedObject, w: &GradedObject) -> Result<(GradedObject, TensorLayout)> {
    v.cat.ensure_same(&w.cat)?;
    let grp = v.cat.groupoid();
    let mut basis = Vec::with_capacity(grp.morphism_count());
    let mut index = Vec::with_capacity(grp.morphism_count());
    for k in 0..grp.morphism_count() {
        let pairs = grp.factorizations(k);
        let mut entries: Vec<(Word, usize, usize)> = Vec::new();
        for (p, &(g1, g2)) in pairs.iter().enumerate() {
            let nb = w.mult(g2);
            for (a, wa) in v.basis(g1).iter().enumerate() {
                for (b, wb) in w.basis(g2).iter().enumerate() {
                    let mut word = Vec::with_capacity(wa.len() + wb.len());
                    word.extend_from_slice(wa);
                    word.extend_from_slice(wb);
                    entries.push((word, p, a * nb + b));
                }
            }
        }
        entries.sort();
        if entries.windows(2).any(|e| e[0].0 == e[1].0) {
            return Err(Error::Consistency(format!(
                "tensor basis words collide at grade {k}"
            )));
        }
        let mut idx: Vec<Vec<usize>> = pairs
            .iter()
            .map(|&(g1, g2)| vec![0; v.mult(g1) * w.mult(g2)])
            .collect();
        let mut words = Vec::with_capacity(entries.len());
        for (pos, (word, p, slot)) in entries.into_iter().enumerate() {
            idx[p][slot] = pos;
            words.push(word);
        }
        basis.push(words);
        index.push(idx);
    }
    Ok((
        GradedObject {
            cat: v.cat.clone(),
            basis,
        },
        TensorLayout { index },
    ))
}

pub fn tensor_obj(v: &GradedObject, w: &GradedObject) -> Result<GradedObject> {
    Ok(tensor_with_layout(v, w)?.0)
}

/// Iterated tensor product of a nonempty list.
pub fn tensor_objs(objs: &[&GradedObject]) -> Result<GradedObject> {
    let (first, rest) = objs.split_first().expect("nonempty");
    rest.iter().try_fold((*first).clone(), |acc, o| tensor_obj(&acc, o))
}

pub fn tensor_mor(f: &GradedMorphism, h: &GradedMorphism) -> Result<GradedMorphism> {
    let (src, sl) = tensor_with_layout(&f.source, &h.source)?;
    let (tgt, tl) = tensor_with_layout(&f.target, &h.target)?;
    let grp = f.category().groupoid();
    let mut blocks = Vec::with_capacity(grp.morphism_count());
    for k in 0..grp.morphism_count() {
        let mut m = Matrix::zeros(tgt.mult(k), src.mult(k));
        for (p, &(g1, g2)) in grp.factorizations(k).iter().enumerate() {
            let fb = f.block(g1);
            let hb = h.block(g2);
            let (sb, tb) = (hb.cols(), hb.rows());
            for c in 0..fb.rows() {
                for a in 0..fb.cols() {
                    let x = fb.get(c, a);
                    if x.is_zero() {
                        continue;
                    }
                    for d in 0..hb.rows() {
                        for b in 0..hb.cols() {
                            let y = hb.get(d, b);
                            if y.is_zero() {
                                continue;
                            }
                            let row = tl.index[k][p][c * tb + d];
                            let col = sl.index[k][p][a * sb + b];
                            m.set(row, col, x * y);
                        }
                    }
                }
            }
        }
        blocks.push(m);
    }
    GradedMorphism::new(src, tgt, blocks)
}

pub fn tensor_mors(fs: &[&GradedMorphism]) -> Result<GradedMorphism> {
    let (first, rest) = fs.split_first().expect("nonempty");
    rest.iter().try_fold((*first).clone(), |acc, f| tensor_mor(&acc, f))
}

/// `id_V ⊗ f`.
pub fn whisker_left(v: &GradedObject, f: &GradedMorphism) -> Result<GradedMorphism> {
    tensor_mor(&GradedMorphism::identity(v), f)
}

/// `f ⊗ id_V`.
pub fn whisker_right(f: &GradedMorphism, v: &GradedObject) -> Result<GradedMorphism> {
    tensor_mor(f, &GradedMorphism::identity(v))
}

/// A left dual together with its evaluation and coevaluation.
#[derive(Debug, Clone)]
pub struct LeftDual {
    pub dual: GradedObject,
    /// `ev : V* ⊗ V -> 1`
    pub ev: GradedMorphism,
    /// `coev : 1 -> V ⊗ V*`
    pub coev: GradedMorphism,
}

/// For each grade `g` of `v`, the position in `v*` (grade `g⁻¹`) of the dual
/// of each basis vector.
fn dual_positions(v: &GradedObject) -> (GradedObject, Vec<Vec<usize>>) {
    let grp = v.cat.groupoid();
    let n = grp.morphism_count();
    let mut basis = vec![Vec::new(); n];
    let mut pos = vec![Vec::new(); n];
    for g in 0..n {
        let mut entries: Vec<(Word, usize)> = v
            .basis(g)
            .iter()
            .enumerate()
            .map(|(a, w)| (dual_word(w), a))
            .collect();
        entries.sort();
        let mut p = vec![0; entries.len()];
        for (q, (_, a)) in entries.iter().enumerate() {
            p[*a] = q;
        }
        basis[grp.inverse_of(g)] = entries.into_iter().map(|(w, _)| w).collect();
        pos[g] = p;
    }
    (
        GradedObject {
            cat: v.cat.clone(),
            basis,
        },
        pos,
    )
}

pub fn dual_obj(v: &GradedObject) -> GradedObject {
    dual_positions(v).0
}

pub fn left_dual(v: &GradedObject) -> Result<LeftDual> {
    let (dual, pos) = dual_positions(v);
    let grp = v.cat.groupoid();
    let unit = v.cat.unit();
    let (dv, dv_layout) = tensor_with_layout(&dual, v)?;
    let (vd, vd_layout) = tensor_with_layout(v, &dual)?;
    let n = grp.morphism_count();

    let mut ev_blocks: Vec<Matrix> = (0..n).map(|k| Matrix::zeros(unit.mult(k), dv.mult(k))).collect();
    let mut coev_blocks: Vec<Matrix> = (0..n).map(|k| Matrix::zeros(vd.mult(k), unit.mult(k))).collect();
    for g in 0..n {
        let m = v.mult(g);
        if m == 0 {
            continue;
        }
        let gi = grp.inverse_of(g);
        // ev pairs (g⁻¹, g) landing in id_{tgt g}
        let k = grp.compose(gi, g).expect("inverse composes");
        let p = grp.factorizations(k).iter().position(|&e| e == (gi, g)).unwrap();
        for a in 0..m {
            let col = dv_layout.index[k][p][pos[g][a] * m + a];
            ev_blocks[k].set(0, col, Rational::one());
        }
        // coev pairs (g, g⁻¹) leaving id_{src g}
        let k = grp.compose(g, gi).expect("inverse composes");
        let p = grp.factorizations(k).iter().position(|&e| e == (g, gi)).unwrap();
        for a in 0..m {
            let row = vd_layout.index[k][p][a * m + pos[g][a]];
            coev_blocks[k].set(row, 0, Rational::one());
        }
    }
    let ev = GradedMorphism::new(dv, unit.clone(), ev_blocks)?;
    let coev = GradedMorphism::new(unit, vd, coev_blocks)?;
    Ok(LeftDual { dual, ev, coev })
}

/// The transpose `f* : W* -> V*` of `f : V -> W`.
pub fn dual_mor(f: &GradedMorphism) -> Result<GradedMorphism> {
    let (vd, vpos) = dual_positions(&f.source);
    let (wd, wpos) = dual_positions(&f.target);
    let grp = f.category().groupoid();
    let n = grp.morphism_count();
    let mut blocks: Vec<Matrix> = (0..n).map(|k| Matrix::zeros(vd.mult(k), wd.mult(k))).collect();
    for g in 0..n {
        let b = f.block(g);
        let gi = grp.inverse_of(g);
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                let x = b.get(r, c);
                if !x.is_zero() {
                    blocks[gi].set(vpos[g][c], wpos[g][r], x.clone());
                }
            }
        }
    }
    GradedMorphism::new(wd, vd, blocks)
}

/// `f*` computed through evaluation and coevaluation:
/// `(ev_W ⊗ id_{V*}) ∘ (id_{W*} ⊗ f ⊗ id_{V*}) ∘ (id_{W*} ⊗ coev_V)`.
pub fn dual_mor_via_pairings(f: &GradedMorphism) -> Result<GradedMorphism> {
    let dv = left_dual(&f.source)?;
    let dw = left_dual(&f.target)?;
    let step1 = whisker_left(&dw.dual, &dv.coev)?;
    let step2 = tensor_mors(&[
        &GradedMorphism::identity(&dw.dual),
        f,
        &GradedMorphism::identity(&dv.dual),
    ])?;
    let step3 = whisker_right(&dw.ev, &dv.dual)?;
    GradedMorphism::compose_all(&[&step3, &step2, &step1])
}

