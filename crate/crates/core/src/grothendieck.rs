//! The Grothendieck ring and the Z₊ / based / fusion ring predicates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::functors::separability_verdict;
use crate::gvec::{dual_obj, tensor_obj, Category};
use crate::internal::{AlgebraGen, CorpusAlgebra};

/// A ring with a distinguished basis: `b_i b_j = Σ_k c[i][j][k] b_k`,
/// `1 = Σ_k unit[k] b_k`. Entries are signed so that mutated data can be
/// represented and rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasedRingData {
    pub basis_labels: Vec<String>,
    pub structure_constants: Vec<Vec<Vec<i64>>>,
    pub unit_coeffs: Vec<i64>,
    pub involution: Vec<usize>,
}

impl BasedRingData {
    pub fn rank(&self) -> usize {
        self.basis_labels.len()
    }

    /// `τ(b_i b_j)`: the coefficient sum of `b_i b_j` over basis elements
    /// occurring in `1`.
    pub fn tau_of_product(&self, i: usize, j: usize) -> i64 {
        (0..self.rank())
            .filter(|&k| self.unit_coeffs[k] != 0)
            .map(|k| self.structure_constants[i][j][k])
            .sum()
    }
}

/// Basis from simples, constants from multiplicities of `S_i ⊗ S_j`, unit
/// from `1`, involution from left duals.
pub fn grothendieck_ring(cat: &Category) -> Result<BasedRingData> {
    let g = cat.groupoid();
    let n = cat.grades();
    let simples = cat.simples();
    let mut c = vec![vec![vec![0i64; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for (k, m) in tensor_obj(&simples[i], &simples[j])?.mults().into_iter().enumerate() {
                c[i][j][k] = m as i64;
            }
        }
    }
    let mut involution = Vec::with_capacity(n);
    for s in &simples {
        match dual_obj(s).decompose_simples().as_slice() {
            [(k, 1)] => involution.push(*k),
            other => {
                return Err(Error::Consistency(format!("dual of a simple decomposes as {other:?}")));
            }
        }
    }
    Ok(BasedRingData {
        basis_labels: (0..n).map(|k| g.label(k).to_string()).collect(),
        structure_constants: c,
        unit_coeffs: cat.unit().mults().into_iter().map(|m| m as i64).collect(),
        involution,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingFailure {
    pub axiom: &'static str,
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<RingFailure>,
}

impl RingVerdict {
    fn from(failure: Option<RingFailure>) -> RingVerdict {
        RingVerdict {
            holds: failure.is_none(),
            failure,
        }
    }
}

fn fail(axiom: &'static str, indices: Vec<usize>) -> Option<RingFailure> {
    Some(RingFailure { axiom, indices })
}

fn zplus_failure(r: &BasedRingData) -> Option<RingFailure> {
    let n = r.rank();
    let c = &r.structure_constants;
    if c.len() != n || c.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) || r.unit_coeffs.len() != n {
        return fail("shape", vec![]);
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if c[i][j][k] < 0 {
                    return fail("nonnegativity", vec![i, j, k]);
                }
            }
        }
    }
    if let Some(k) = (0..n).find(|&k| r.unit_coeffs[k] < 0) {
        return fail("nonnegativity", vec![k]);
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let lhs: i64 = (0..n).map(|m| c[i][j][m] * c[m][k][l]).sum();
                    let rhs: i64 = (0..n).map(|m| c[j][k][m] * c[i][m][l]).sum();
                    if lhs != rhs {
                        return fail("associativity", vec![i, j, k, l]);
                    }
                }
            }
        }
    }
    for j in 0..n {
        for k in 0..n {
            let delta = i64::from(j == k);
            let left: i64 = (0..n).map(|u| r.unit_coeffs[u] * c[u][j][k]).sum();
            if left != delta {
                return fail("left_unit", vec![j, k]);
            }
            let right: i64 = (0..n).map(|u| r.unit_coeffs[u] * c[j][u][k]).sum();
            if right != delta {
                return fail("right_unit", vec![j, k]);
            }
        }
    }
    None
}

/// Associative with non-negative constants and a unit that is a
/// non-negative combination of basis elements.
pub fn is_zplus_ring(r: &BasedRingData) -> RingVerdict {
    RingVerdict::from(zplus_failure(r))
}

fn based_failure(r: &BasedRingData) -> Option<RingFailure> {
    if let Some(f) = zplus_failure(r) {
        return Some(f);
    }
    let n = r.rank();
    let inv = &r.involution;
    if inv.len() != n || inv.iter().any(|&k| k >= n) {
        return fail("involution", vec![]);
    }
    if let Some(i) = (0..n).find(|&i| inv[inv[i]] != i) {
        return fail("involution", vec![i]);
    }
    let c = &r.structure_constants;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if c[i][j][k] != c[inv[j]][inv[i]][inv[k]] {
                    return fail("anti_involution", vec![i, j, k]);
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if r.tau_of_product(i, j) != i64::from(j == inv[i]) {
                return fail("tau_pairing", vec![i, j]);
            }
        }
    }
    None
}

/// Z₊-ring with an anti-involution of the basis and `τ(b_i b_j) = δ_{j,i*}`.
pub fn is_based_ring(r: &BasedRingData) -> RingVerdict {
    RingVerdict::from(based_failure(r))
}

/// Based ring of finite rank whose unit is a single basis element.
pub fn is_fusion_ring(r: &BasedRingData) -> RingVerdict {
    if let Some(f) = based_failure(r) {
        return RingVerdict::from(Some(f));
    }
    let support: Vec<usize> = (0..r.rank()).filter(|&k| r.unit_coeffs[k] != 0).collect();
    if support.len() != 1 || r.unit_coeffs[support[0]] != 1 {
        return RingVerdict::from(fail("unit_basis_element", support));
    }
    RingVerdict::from(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FusionIffSeparable {
    pub fusion_ring: bool,
    pub all_separable: bool,
    /// First corpus algebra whose free functor is not separable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<AlgebraGen>,
}

/// Both sides of the equivalence over a corpus; disagreement is a
/// consistency error.
pub fn fusion_iff_separable_check(cat: &Category, corpus: &[CorpusAlgebra]) -> Result<FusionIffSeparable> {
    let fusion_ring = is_fusion_ring(&grothendieck_ring(cat)?).holds;
    let mut witness = None;
    for e in corpus {
        if !separability_verdict(&e.algebra)?.separable {
            witness = Some(e.gen.clone());
            break;
        }
    }
    let all_separable = witness.is_none();
    if fusion_ring != all_separable {
        return Err(Error::Consistency(format!(
            "Gr fusion = {fusion_ring} but every corpus algebra separable = {all_separable}"
        )));
    }
    Ok(FusionIffSeparable {
        fusion_ring,
        all_separable,
        witness,
    })
}
