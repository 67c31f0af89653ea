//! The free functors `- ⊗ A : C -> C_A` and `- ⊗ C : C -> C^C`, and the
//! inclusion/projection pair `L_J : C_J -> C`, `R_J : C -> C_J`.

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::gvec::{
    image_factorization, is_iso, restriction_inclusion, restriction_projection, tensor_mor, tensor_obj,
    unit_inclusion, unit_projection, Category, GradedMorphism, GradedObject,
};
use crate::internal::{restrict_to_j, support, InternalAlgebra, InternalCoalgebra};
use crate::morphcalc::{find_retraction, find_section, is_split_epi, is_split_mono, weak_inverse, SplitWitness};

/// A right `A`-module `(M, μ : M ⊗ A -> M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleObject {
    pub carrier: GradedObject,
    pub action: GradedMorphism,
}

impl ModuleObject {
    pub fn validate(&self, a: &InternalAlgebra) -> Result<bool> {
        let id_m = GradedMorphism::identity(&self.carrier);
        let id_a = GradedMorphism::identity(&a.carrier);
        let assoc = self.action.compose(&tensor_mor(&self.action, &id_a)?)? == self.action.compose(&tensor_mor(&id_m, &a.mult)?)?;
        let unital = self.action.compose(&tensor_mor(&id_m, &a.unit)?)?.is_identity();
        Ok(assoc && unital)
    }
}

/// `(M ⊗ A, M ⊗ m_A)`.
pub fn free_module(m: &GradedObject, a: &InternalAlgebra) -> Result<ModuleObject> {
    Ok(ModuleObject {
        carrier: tensor_obj(m, &a.carrier)?,
        action: tensor_mor(&GradedMorphism::identity(m), &a.mult)?,
    })
}

/// `f ⊗ A`.
pub fn induce_mor(f: &GradedMorphism, a: &InternalAlgebra) -> Result<GradedMorphism> {
    tensor_mor(f, &GradedMorphism::identity(&a.carrier))
}

pub fn is_module_morphism(g: &GradedMorphism, m: &ModuleObject, n: &ModuleObject, a: &InternalAlgebra) -> Result<bool> {
    if g.source() != &m.carrier || g.target() != &n.carrier {
        return Ok(false);
    }
    Ok(g.compose(&m.action)? == n.action.compose(&induce_mor(g, a)?)?)
}

/// The module map `M ⊗ A -> N ⊗ A` adjoint to `φ : M -> N ⊗ A`, namely
/// `(N ⊗ m_A)(φ ⊗ A)`. Every module map between free modules is of this form.
pub fn free_extension(phi: &GradedMorphism, n: &GradedObject, a: &InternalAlgebra) -> Result<GradedMorphism> {
    let act = tensor_mor(&GradedMorphism::identity(n), &a.mult)?;
    act.compose(&induce_mor(phi, a)?)
}

/// A right `C`-comodule `(M, ρ : M -> M ⊗ C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComoduleObject {
    pub carrier: GradedObject,
    pub coaction: GradedMorphism,
}

impl ComoduleObject {
    pub fn validate(&self, c: &InternalCoalgebra) -> Result<bool> {
        let id_m = GradedMorphism::identity(&self.carrier);
        let id_c = GradedMorphism::identity(&c.carrier);
        let coassoc = tensor_mor(&self.coaction, &id_c)?.compose(&self.coaction)? == tensor_mor(&id_m, &c.comult)?.compose(&self.coaction)?;
        let counital = tensor_mor(&id_m, &c.counit)?.compose(&self.coaction)?.is_identity();
        Ok(coassoc && counital)
    }
}

/// `(M ⊗ C, M ⊗ Δ_C)`.
pub fn cofree_comodule(m: &GradedObject, c: &InternalCoalgebra) -> Result<ComoduleObject> {
    Ok(ComoduleObject {
        carrier: tensor_obj(m, &c.carrier)?,
        coaction: tensor_mor(&GradedMorphism::identity(m), &c.comult)?,
    })
}

pub fn coinduce_mor(f: &GradedMorphism, c: &InternalCoalgebra) -> Result<GradedMorphism> {
    tensor_mor(f, &GradedMorphism::identity(&c.carrier))
}

/// The comodule map `M ⊗ C -> N ⊗ C` adjoint to `φ : M ⊗ C -> N`, namely
/// `(φ ⊗ C)(M ⊗ Δ_C)`.
pub fn cofree_extension(phi: &GradedMorphism, m: &GradedObject, c: &InternalCoalgebra) -> Result<GradedMorphism> {
    let coact = tensor_mor(&GradedMorphism::identity(m), &c.comult)?;
    coinduce_mor(phi, c)?.compose(&coact)
}

#[derive(Debug, Clone)]
pub struct SeparabilityVerdict {
    pub separable: bool,
    pub semiseparable: bool,
    pub naturally_full: bool,
    /// Retraction of `u_A` (or section of `ε_C`) when separable.
    pub witness: Option<SplitWitness>,
    /// Section of `u_A` (or retraction of `ε_C`) when naturally full.
    pub co_witness: Option<SplitWitness>,
    pub weak_inverse: SplitWitness,
    pub idempotent_trivial: bool,
}

pub fn separability_verdict(a: &InternalAlgebra) -> Result<SeparabilityVerdict> {
    if a.is_zero() {
        return Err(Error::ZeroInput("algebra"));
    }
    let witness = find_retraction(&a.unit)?;
    let co_witness = find_section(&a.unit)?;
    Ok(SeparabilityVerdict {
        separable: witness.is_some(),
        semiseparable: true,
        naturally_full: co_witness.is_some(),
        witness,
        co_witness,
        weak_inverse: weak_inverse(&a.unit)?,
        idempotent_trivial: unit_idempotent(a)?.is_identity(),
    })
}

/// `- ⊗ C` is separable iff `ε_C` is split epi and naturally full iff it is
/// split mono.
pub fn coseparability_verdict(c: &InternalCoalgebra) -> Result<SeparabilityVerdict> {
    if c.is_zero() {
        return Err(Error::ZeroInput("coalgebra"));
    }
    let witness = find_section(&c.counit)?;
    let co_witness = find_retraction(&c.counit)?;
    Ok(SeparabilityVerdict {
        separable: witness.is_some(),
        semiseparable: true,
        naturally_full: co_witness.is_some(),
        witness,
        co_witness,
        weak_inverse: weak_inverse(&c.counit)?,
        idempotent_trivial: counit_idempotent(c)?.is_identity(),
    })
}

/// `P(g) = (N ⊗ r) g (M ⊗ u_A)` for `g : M ⊗ A -> N ⊗ A`.
pub fn section_of_hom(
    a: &InternalAlgebra,
    r: &GradedMorphism,
    g: &GradedMorphism,
    m: &GradedObject,
    n: &GradedObject,
) -> Result<GradedMorphism> {
    let pre = tensor_mor(&GradedMorphism::identity(m), &a.unit)?;
    let post = tensor_mor(&GradedMorphism::identity(n), r)?;
    GradedMorphism::compose_all(&[&post, g, &pre])
}

fn ensure_retraction(a: &InternalAlgebra, r: &GradedMorphism) -> Result<()> {
    if r.source() != &a.carrier || r.target() != a.unit.source() || !r.compose(&a.unit)?.is_identity() {
        return Err(Error::InvalidAlgebra("given map is not a retraction of the unit".into()));
    }
    Ok(())
}

/// Checks `P(f ⊗ A) = f` for every `f` in the hom basis of each pair.
pub fn check_section_identity(a: &InternalAlgebra, r: &GradedMorphism, pairs: &[(GradedObject, GradedObject)]) -> Result<bool> {
    ensure_retraction(a, r)?;
    for (m, n) in pairs {
        for f in GradedMorphism::hom_basis(m, n)? {
            if section_of_hom(a, r, &induce_mor(&f, a)?, m, n)? != f {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Naturality of `P` at the module map adjoint to `φ : M -> N ⊗ A`:
/// `P((k ⊗ A) g (h ⊗ A)) = k P(g) h` for `h : M' -> M` and `k : N -> N'`.
pub fn check_section_naturality(
    a: &InternalAlgebra,
    r: &GradedMorphism,
    phi: &GradedMorphism,
    h: &GradedMorphism,
    k: &GradedMorphism,
) -> Result<bool> {
    ensure_retraction(a, r)?;
    let (m, n) = (h.target(), k.source());
    let g = free_extension(phi, n, a)?;
    let moved = GradedMorphism::compose_all(&[&induce_mor(k, a)?, &g, &induce_mor(h, a)?])?;
    let lhs = section_of_hom(a, r, &moved, h.source(), k.target())?;
    let rhs = GradedMorphism::compose_all(&[k, &section_of_hom(a, r, &g, m, n)?, h])?;
    Ok(lhs == rhs)
}

/// `P(g) = (N ⊗ ε_C) g (M ⊗ s)` for `g : M ⊗ C -> N ⊗ C`, with `ε_C s = id`.
pub fn cosection_of_hom(
    c: &InternalCoalgebra,
    s: &GradedMorphism,
    g: &GradedMorphism,
    m: &GradedObject,
    n: &GradedObject,
) -> Result<GradedMorphism> {
    let pre = tensor_mor(&GradedMorphism::identity(m), s)?;
    let post = tensor_mor(&GradedMorphism::identity(n), &c.counit)?;
    GradedMorphism::compose_all(&[&post, g, &pre])
}

pub fn check_cosection_identity(c: &InternalCoalgebra, s: &GradedMorphism, pairs: &[(GradedObject, GradedObject)]) -> Result<bool> {
    if !c.counit.compose(s)?.is_identity() {
        return Err(Error::InvalidAlgebra("given map is not a section of the counit".into()));
    }
    for (m, n) in pairs {
        for f in GradedMorphism::hom_basis(m, n)? {
            if cosection_of_hom(c, s, &coinduce_mor(&f, c)?, m, n)? != f {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn check_cosection_naturality(
    c: &InternalCoalgebra,
    s: &GradedMorphism,
    phi: &GradedMorphism,
    h: &GradedMorphism,
    k: &GradedMorphism,
) -> Result<bool> {
    let (m, n) = (h.target(), k.source());
    let g = cofree_extension(phi, m, c)?;
    let moved = GradedMorphism::compose_all(&[&coinduce_mor(k, c)?, &g, &coinduce_mor(h, c)?])?;
    let lhs = cosection_of_hom(c, s, &moved, h.source(), k.target())?;
    let rhs = GradedMorphism::compose_all(&[k, &cosection_of_hom(c, s, &g, m, n)?, h])?;
    Ok(lhs == rhs)
}

/// A nonzero `f : M -> N` with `f ⊗ X = 0`, found as a kernel vector of the
/// linear map `f ↦ f ⊗ X` on the hom basis.
pub fn hom_map_kernel(x: &GradedObject, m: &GradedObject, n: &GradedObject) -> Result<Option<GradedMorphism>> {
    let basis = GradedMorphism::hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let id_x = GradedMorphism::identity(x);
    let images = basis.iter().map(|f| tensor_mor(f, &id_x)).collect::<Result<Vec<_>>>()?;
    let flat: Vec<Vec<_>> = images
        .iter()
        .map(|img| img.blocks().iter().flat_map(|b| b.entries().iter().cloned()).collect())
        .collect();
    let len = flat[0].len();
    let mat = Matrix::from_fn(len, basis.len(), |i, j| flat[j][i].clone());
    let v = mat.kernel_basis();
    if v.cols() == 0 {
        return Ok(None);
    }
    let mut f = GradedMorphism::zero(m, n)?;
    for (j, b) in basis.iter().enumerate() {
        f = f.add(&b.scale(v.get(j, 0)))?;
    }
    Ok(Some(f))
}

/// First simple `S_g` with `S_g ⊗ X = 0`.
pub fn annihilated_simple(x: &GradedObject) -> Result<Option<usize>> {
    let cat = x.category();
    for g in 0..cat.grades() {
        if tensor_obj(&cat.simple(g), x)?.is_zero() {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone)]
pub struct Faithfulness {
    pub faithful: bool,
    /// `id_S` for a simple with `S ⊗ X = 0`.
    pub witness: Option<GradedMorphism>,
}

fn faithful_tensor_by(x: &GradedObject) -> Result<Faithfulness> {
    Ok(match annihilated_simple(x)? {
        Some(g) => Faithfulness {
            faithful: false,
            witness: Some(GradedMorphism::identity(&x.category().simple(g))),
        },
        None => Faithfulness {
            faithful: true,
            witness: None,
        },
    })
}

/// `- ⊗ A` is faithful iff no simple is killed: `f ⊗ id_A` has Kronecker
/// blocks `f_g ⊗ id` over every grade `g` composable with the support of `A`.
pub fn is_faithful_tensor(a: &InternalAlgebra) -> Result<Faithfulness> {
    if a.is_zero() {
        return Err(Error::ZeroInput("algebra"));
    }
    faithful_tensor_by(&a.carrier)
}

pub fn is_faithful_cotensor(c: &InternalCoalgebra) -> Result<Faithfulness> {
    if c.is_zero() {
        return Err(Error::ZeroInput("coalgebra"));
    }
    faithful_tensor_by(&c.carrier)
}

#[derive(Debug, Clone)]
pub struct Reflection {
    pub holds: bool,
    pub witness: Option<GradedMorphism>,
    /// Sampled morphisms checked when no killed simple exists.
    pub sampled: usize,
}

#[derive(Debug, Clone)]
pub struct ReflectionReport {
    /// Reflects split monos.
    pub maschke: Reflection,
    /// Reflects split epis.
    pub dual_maschke: Reflection,
    /// Reflects isos.
    pub conservative: Reflection,
}

/// Counterexamples from a killed simple `S`: `S -> 0` is not split mono and
/// not iso, `0 -> S` is not split epi, while their images are `id_0`.
/// Otherwise each sample is checked with splitting in `C` as the hypothesis,
/// which is implied by splitting in the module category.
fn reflection_by(x: &GradedObject, samples: &[GradedMorphism]) -> Result<ReflectionReport> {
    let cat = x.category();
    if let Some(g) = annihilated_simple(x)? {
        let s = cat.simple(g);
        let zero = cat.zero();
        let out = GradedMorphism::zero(&s, &zero)?;
        let inn = GradedMorphism::zero(&zero, &s)?;
        let id_x = GradedMorphism::identity(x);
        let (out_x, inn_x) = (tensor_mor(&out, &id_x)?, tensor_mor(&inn, &id_x)?);
        if is_split_mono(&out)? || !is_split_mono(&out_x)? || is_split_epi(&inn)? || !is_split_epi(&inn_x)? || !is_iso(&out_x) {
            return Err(Error::Consistency("killed simple does not yield reflection counterexamples".into()));
        }
        let fail = |w: &GradedMorphism| Reflection {
            holds: false,
            witness: Some(w.clone()),
            sampled: 0,
        };
        return Ok(ReflectionReport {
            maschke: fail(&out),
            dual_maschke: fail(&inn),
            conservative: fail(&out),
        });
    }
    let mut report = ReflectionReport {
        maschke: Reflection { holds: true, witness: None, sampled: samples.len() },
        dual_maschke: Reflection { holds: true, witness: None, sampled: samples.len() },
        conservative: Reflection { holds: true, witness: None, sampled: samples.len() },
    };
    let id_x = GradedMorphism::identity(x);
    for f in samples {
        let fx = tensor_mor(f, &id_x)?;
        if report.maschke.holds && is_split_mono(&fx)? && !is_split_mono(f)? {
            report.maschke = Reflection { holds: false, witness: Some(f.clone()), sampled: samples.len() };
        }
        if report.dual_maschke.holds && is_split_epi(&fx)? && !is_split_epi(f)? {
            report.dual_maschke = Reflection { holds: false, witness: Some(f.clone()), sampled: samples.len() };
        }
        if report.conservative.holds && is_iso(&fx) && !is_iso(f) {
            report.conservative = Reflection { holds: false, witness: Some(f.clone()), sampled: samples.len() };
        }
    }
    Ok(report)
}

pub fn reflection_checks(a: &InternalAlgebra, samples: &[GradedMorphism]) -> Result<ReflectionReport> {
    if a.is_zero() {
        return Err(Error::ZeroInput("algebra"));
    }
    reflection_by(&a.carrier, samples)
}

pub fn coreflection_checks(c: &InternalCoalgebra, samples: &[GradedMorphism]) -> Result<ReflectionReport> {
    if c.is_zero() {
        return Err(Error::ZeroInput("coalgebra"));
    }
    reflection_by(&c.carrier, samples)
}

/// `ψ' ψ : 1 -> 1` where `u_A = φ ψ` is the image factorization and `ψ'` a
/// section of `ψ`.
pub fn unit_idempotent(a: &InternalAlgebra) -> Result<GradedMorphism> {
    let im = image_factorization(&a.unit)?;
    let s = find_section(&im.psi)?.ok_or_else(|| Error::Consistency("image coprojection has no section".into()))?;
    s.witness.compose(&im.psi)
}

/// `e_M = M ⊗ ψ' ψ : M -> M`.
pub fn idempotent_e(a: &InternalAlgebra, m: &GradedObject) -> Result<GradedMorphism> {
    tensor_mor(&GradedMorphism::identity(m), &unit_idempotent(a)?)
}

/// `φ φ' : 1 -> 1` where `ε_C = φ ψ` and `φ'` is a retraction of `φ`.
pub fn counit_idempotent(c: &InternalCoalgebra) -> Result<GradedMorphism> {
    let im = image_factorization(&c.counit)?;
    let r = find_retraction(&im.phi)?.ok_or_else(|| Error::Consistency("image inclusion has no retraction".into()))?;
    im.phi.compose(&r.witness)
}

pub fn coidempotent_e(c: &InternalCoalgebra, m: &GradedObject) -> Result<GradedMorphism> {
    tensor_mor(&GradedMorphism::identity(m), &counit_idempotent(c)?)
}

/// Structure maps of a functor `F` between the unit objects `src_unit` (of
/// the source category) and `dst_unit`.
pub struct MonoidalStructure<'a> {
    pub obj: &'a dyn Fn(&GradedObject) -> GradedObject,
    pub mor: &'a dyn Fn(&GradedMorphism) -> GradedMorphism,
    /// `φ_{X,Y} : FX ⊗ FY -> F(X ⊗ Y)`
    pub phi: &'a dyn Fn(&GradedObject, &GradedObject) -> Result<GradedMorphism>,
    /// `ψ_{X,Y} : F(X ⊗ Y) -> FX ⊗ FY`
    pub psi: &'a dyn Fn(&GradedObject, &GradedObject) -> Result<GradedMorphism>,
    /// `φ_0 : 1' -> F(1)`
    pub phi0: GradedMorphism,
    /// `ψ_0 : F(1) -> 1'`
    pub psi0: GradedMorphism,
    pub src_unit: GradedObject,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct StructureChecks {
    pub lax_associativity: bool,
    pub lax_unitality: bool,
    pub colax_coassociativity: bool,
    pub colax_counitality: bool,
    pub phi_natural: bool,
    pub psi_natural: bool,
    pub frobenius_left: bool,
    pub frobenius_right: bool,
    /// `φ ψ = id_{F(X ⊗ Y)}`
    pub phi_psi_identity: bool,
    /// `ψ φ = id_{FX ⊗ FY}`
    pub psi_phi_identity: bool,
    pub instances: usize,
}

/// Every axiom on every sampled triple and every sampled pair of morphisms.
pub fn check_structure(
    s: &MonoidalStructure<'_>,
    triples: &[(GradedObject, GradedObject, GradedObject)],
    morphisms: &[(GradedMorphism, GradedMorphism)],
) -> Result<StructureChecks> {
    let id = |x: &GradedObject| GradedMorphism::identity(&(s.obj)(x));
    let mut c = StructureChecks {
        lax_associativity: true,
        lax_unitality: true,
        colax_coassociativity: true,
        colax_counitality: true,
        phi_natural: true,
        psi_natural: true,
        frobenius_left: true,
        frobenius_right: true,
        phi_psi_identity: true,
        psi_phi_identity: true,
        instances: triples.len() + morphisms.len(),
    };
    let one = &s.src_unit;
    for (x, y, z) in triples {
        let xy = tensor_obj(x, y)?;
        let yz = tensor_obj(y, z)?;
        let (fx, fz) = (id(x), id(z));
        let lhs = (s.phi)(x, &yz)?.compose(&tensor_mor(&fx, &(s.phi)(y, z)?)?)?;
        let rhs = (s.phi)(&xy, z)?.compose(&tensor_mor(&(s.phi)(x, y)?, &fz)?)?;
        c.lax_associativity &= lhs == rhs;
        let lhs = tensor_mor(&(s.psi)(x, y)?, &fz)?.compose(&(s.psi)(&xy, z)?)?;
        let rhs = tensor_mor(&fx, &(s.psi)(y, z)?)?.compose(&(s.psi)(x, &yz)?)?;
        c.colax_coassociativity &= lhs == rhs;
        let lhs = tensor_mor(&fx, &(s.phi)(y, z)?)?.compose(&tensor_mor(&(s.psi)(x, y)?, &fz)?)?;
        let rhs = (s.psi)(x, &yz)?.compose(&(s.phi)(&xy, z)?)?;
        c.frobenius_left &= lhs == rhs;
        let lhs = tensor_mor(&(s.phi)(x, y)?, &fz)?.compose(&tensor_mor(&fx, &(s.psi)(y, z)?)?)?;
        let rhs = (s.psi)(&xy, z)?.compose(&(s.phi)(x, &yz)?)?;
        c.frobenius_right &= lhs == rhs;
        c.phi_psi_identity &= (s.phi)(x, y)?.compose(&(s.psi)(x, y)?)?.is_identity();
        c.psi_phi_identity &= (s.psi)(x, y)?.compose(&(s.phi)(x, y)?)?.is_identity();
        for w in [x, y, z] {
            let fw = id(w);
            let l = (s.phi)(one, w)?.compose(&tensor_mor(&s.phi0, &fw)?)?;
            let r = (s.phi)(w, one)?.compose(&tensor_mor(&fw, &s.phi0)?)?;
            c.lax_unitality &= l.is_identity() && r.is_identity();
            let l = tensor_mor(&s.psi0, &fw)?.compose(&(s.psi)(one, w)?)?;
            let r = tensor_mor(&fw, &s.psi0)?.compose(&(s.psi)(w, one)?)?;
            c.colax_counitality &= l.is_identity() && r.is_identity();
        }
    }
    for (f, g) in morphisms {
        let ffg = (s.mor)(&tensor_mor(f, g)?);
        let lhs = ffg.compose(&(s.phi)(f.source(), g.source())?)?;
        let rhs = (s.phi)(f.target(), g.target())?.compose(&tensor_mor(&(s.mor)(f), &(s.mor)(g))?)?;
        c.phi_natural &= lhs == rhs;
        let lhs = (s.psi)(f.target(), g.target())?.compose(&ffg)?;
        let rhs = tensor_mor(&(s.mor)(f), &(s.mor)(g))?.compose(&(s.psi)(f.source(), g.source())?)?;
        c.psi_natural &= lhs == rhs;
    }
    Ok(c)
}

/// `R_J`'s structure: `φ_{X,Y}` includes `X_J ⊗ Y_J` into `(X ⊗ Y)_J` and
/// `ψ_{X,Y}` projects back; `φ_0 = ψ_0 = id_{1_J}`.
pub fn projection_rj(cat: &Category, objects: &[usize]) -> Result<(Vec<usize>, GradedObject)> {
    if objects.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    Ok((objects.to_vec(), cat.unit_summand(objects)?))
}

pub fn rj_phi(x: &GradedObject, y: &GradedObject, objects: &[usize]) -> Result<GradedMorphism> {
    GradedMorphism::by_words(&tensor_obj(&x.restrict(objects), &y.restrict(objects))?, &tensor_obj(x, y)?.restrict(objects))
}

pub fn rj_psi(x: &GradedObject, y: &GradedObject, objects: &[usize]) -> Result<GradedMorphism> {
    GradedMorphism::by_words(&tensor_obj(x, y)?.restrict(objects), &tensor_obj(&x.restrict(objects), &y.restrict(objects))?)
}

/// Axioms of `R_J` on objects and morphisms of `C`.
pub fn rj_structure_checks(
    cat: &Category,
    objects: &[usize],
    triples: &[(GradedObject, GradedObject, GradedObject)],
    morphisms: &[(GradedMorphism, GradedMorphism)],
) -> Result<StructureChecks> {
    let (j, one_j) = projection_rj(cat, objects)?;
    let obj = |x: &GradedObject| x.restrict(&j);
    let mor = |f: &GradedMorphism| f.restrict(&j);
    let phi = |x: &GradedObject, y: &GradedObject| rj_phi(x, y, &j);
    let psi = |x: &GradedObject, y: &GradedObject| rj_psi(x, y, &j);
    let s = MonoidalStructure {
        obj: &obj,
        mor: &mor,
        phi: &phi,
        psi: &psi,
        phi0: GradedMorphism::identity(&one_j),
        psi0: GradedMorphism::identity(&one_j),
        src_unit: cat.unit(),
    };
    check_structure(&s, triples, morphisms)
}

/// Axioms of `L_J` on objects of `C_J`: `φ = ψ = id`, `φ_0 = p_J`,
/// `ψ_0 = i_J`. Inputs outside `C_J` are an error.
pub fn lj_structure_checks(
    cat: &Category,
    objects: &[usize],
    triples: &[(GradedObject, GradedObject, GradedObject)],
    morphisms: &[(GradedMorphism, GradedMorphism)],
) -> Result<StructureChecks> {
    if objects.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let inside = |x: &GradedObject| x.lies_in(objects);
    if !triples.iter().all(|(x, y, z)| inside(x) && inside(y) && inside(z))
        || !morphisms.iter().all(|(f, g)| [f.source(), f.target(), g.source(), g.target()].into_iter().all(inside))
    {
        return Err(Error::Input("L_J is only defined on C_J".into()));
    }
    let obj = |x: &GradedObject| x.clone();
    let mor = |f: &GradedMorphism| f.clone();
    let phi = |x: &GradedObject, y: &GradedObject| Ok(GradedMorphism::identity(&tensor_obj(x, y)?));
    let s = MonoidalStructure {
        obj: &obj,
        mor: &mor,
        phi: &phi,
        psi: &phi,
        phi0: unit_projection(cat, objects)?,
        psi0: unit_inclusion(cat, objects)?,
        src_unit: cat.unit_summand(objects)?,
    };
    check_structure(&s, triples, morphisms)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct FrobeniusPairReport {
    /// `Hom_C(L B, A) ≅ Hom_{C_J}(B, R A)` via `f ↦ R f`, inverse `g ↦ i g`.
    pub left_adjunction: bool,
    /// `Hom_C(A, L B) ≅ Hom_{C_J}(R A, B)` via `f ↦ R f`, inverse `g ↦ g p`.
    pub right_adjunction: bool,
    pub dims_equal: bool,
    pub naturality: bool,
}

/// Both hom bijections for `B` in `C_J` and `A` in `C`, checked on full hom
/// bases, and naturality along `b : B' -> B` (in `C_J`) and `a : A -> A'`.
pub fn frobenius_pair_check(
    objects: &[usize],
    b: &GradedObject,
    a: &GradedObject,
    b_maps: &[GradedMorphism],
    a_maps: &[GradedMorphism],
) -> Result<FrobeniusPairReport> {
    if objects.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    if !b.lies_in(objects) {
        return Err(Error::Input("B must lie in C_J".into()));
    }
    let r = |f: &GradedMorphism| f.restrict(objects);
    let (ra, i_a, p_a) = (a.restrict(objects), restriction_inclusion(a, objects)?, restriction_projection(a, objects)?);
    let left_c = GradedMorphism::hom_basis(b, a)?;
    let left_j = GradedMorphism::hom_basis(b, &ra)?;
    let right_c = GradedMorphism::hom_basis(a, b)?;
    let right_j = GradedMorphism::hom_basis(&ra, b)?;
    let mut rep = FrobeniusPairReport {
        left_adjunction: true,
        right_adjunction: true,
        dims_equal: left_c.len() == left_j.len() && right_c.len() == right_j.len(),
        naturality: true,
    };
    for f in &left_c {
        rep.left_adjunction &= i_a.compose(&r(f))? == *f;
    }
    for g in &left_j {
        rep.left_adjunction &= r(&i_a.compose(g)?) == *g;
    }
    for f in &right_c {
        rep.right_adjunction &= r(f).compose(&p_a)? == *f;
    }
    for g in &right_j {
        rep.right_adjunction &= r(&g.compose(&p_a)?) == *g;
    }
    for bm in b_maps.iter().filter(|m| m.target() == b && m.source().lies_in(objects)) {
        for am in a_maps.iter().filter(|m| m.source() == a) {
            for f in &left_c {
                let lhs = r(&GradedMorphism::compose_all(&[am, f, bm])?);
                let rhs = GradedMorphism::compose_all(&[&r(am), &r(f), bm])?;
                rep.naturality &= lhs == rhs;
            }
        }
    }
    for bm in b_maps.iter().filter(|m| m.source() == b && m.target().lies_in(objects)) {
        for am in a_maps.iter().filter(|m| m.target() == a) {
            for f in &right_c {
                let lhs = r(&GradedMorphism::compose_all(&[bm, f, am])?);
                let rhs = GradedMorphism::compose_all(&[bm, &r(f), &r(am)])?;
                rep.naturality &= lhs == rhs;
            }
        }
    }
    Ok(rep)
}

#[derive(Debug, Clone)]
pub struct RestrictedSeparability {
    pub objects: Vec<usize>,
    pub retraction: SplitWitness,
}

/// `- ⊗ A_J` on `C_J` for `J` the support of `A`. A missing retraction of
/// `u_{A_J}` is reported as a consistency error.
pub fn restricted_separability(a: &InternalAlgebra) -> Result<RestrictedSeparability> {
    if a.is_zero() {
        return Err(Error::ZeroInput("algebra"));
    }
    let j = support(a)?;
    let r = restrict_to_j(a, &j)?;
    let retraction = find_retraction(&r.algebra.unit)?
        .ok_or_else(|| Error::Consistency(format!("u_(A_J) has no retraction for J = {j:?}")))?;
    Ok(RestrictedSeparability { objects: j, retraction })
}

#[cfg(test)]
mod tests;
