//! End-to-end audit of a category instance: the fifteen equivalent
//! conditions with witnesses, the structural results about `C_J`, `A_J` and
//! `L_J`/`R_J`, and the Grothendieck ring.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::ratio;
use crate::functors::{
    check_cosection_identity, check_section_identity, coidempotent_e, coreflection_checks, coseparability_verdict,
    frobenius_pair_check, idempotent_e, is_faithful_cotensor, is_faithful_tensor, lj_structure_checks,
    reflection_checks, restricted_separability, rj_structure_checks, separability_verdict, ReflectionReport,
    StructureChecks, FrobeniusPairReport,
};
use crate::groupoid::{Groupoid, GroupoidSpec};
use crate::grothendieck::{
    fusion_iff_separable_check, grothendieck_ring, is_based_ring, is_fusion_ring, is_zplus_ring, BasedRingData,
    FusionIffSeparable, RingVerdict,
};
use crate::gvec::{
    is_epi, is_iso, is_mono, tensor_mor, tensor_obj, unit_inclusion, unit_projection, Category, GradedMorphism, GradedObject,
    MorphismSpec, ObjectSpec,
};
use crate::internal::{
    algebra_corpus, coalgebra_corpus, corner_report, dualize_algebra, support, unit_algebra, unit_summand_algebra,
    unit_summand_coalgebra, AlgebraGen, AlgebraSpec, CornerReport, CorpusAlgebra, CorpusCoalgebra, InternalAlgebra,
    InternalCoalgebra, ValidationReport,
};
use crate::morphcalc::{find_retraction, find_section, is_split_epi, is_split_mono, weak_inverse};
use crate::sampling::{random_arrow, random_morphism, random_object, rng, SampleRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditOptions {
    pub seed: u64,
    /// Seeded draws added to the fixed family `1`, `1_i`, full groupoid algebra.
    pub corpus_size: usize,
    pub sample_objects: usize,
    pub sample_morphisms: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            seed: 1,
            corpus_size: 6,
            sample_objects: 32,
            sample_morphisms: 64,
        }
    }
}

pub fn load_category(spec: &GroupoidSpec) -> Result<Category> {
    let g: Groupoid = spec.build()?;
    Ok(Category::new(g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CategoryInfo {
    pub fingerprint: String,
    pub objects: usize,
    pub morphisms: usize,
    pub labels: Vec<String>,
}

impl CategoryInfo {
    pub fn of(cat: &Category) -> CategoryInfo {
        let g = cat.groupoid();
        CategoryInfo {
            fingerprint: g.fingerprint(),
            objects: g.object_count(),
            morphisms: g.morphism_count(),
            labels: g.labels().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Sampled,
}

/// A failure witness in file form. Objects inside `morphism` are rebuilt on
/// the carriers named by `algebra`/`coalgebra` when re-verifying.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct Witness {
    pub claim: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub algebra: Option<AlgebraGen>,
    /// The coalgebra is the dual of the algebra this builds.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coalgebra_dual_of: Option<AlgebraGen>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub simple: Option<usize>,
    pub morphism: MorphismSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub statement: &'static str,
    pub holds: bool,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

pub const STATEMENTS: [&str; 15] = [
    "unit object is simple",
    "- ⊗ A separable for every nonzero algebra A",
    "- ⊗ C separable for every nonzero coalgebra C",
    "- ⊗ A faithful for every nonzero algebra A",
    "- ⊗ C faithful for every nonzero coalgebra C",
    "- ⊗ A reflects split monos for every nonzero algebra A",
    "- ⊗ C reflects split monos for every nonzero coalgebra C",
    "- ⊗ A reflects split epis for every nonzero algebra A",
    "- ⊗ C reflects split epis for every nonzero coalgebra C",
    "- ⊗ A reflects isos for every nonzero algebra A",
    "- ⊗ C reflects isos for every nonzero coalgebra C",
    "u_A mono for every nonzero algebra A",
    "ε_C epi for every nonzero coalgebra C",
    "nonzero algebra maps 1 -> A are mono",
    "nonzero coalgebra maps C -> 1 are epi",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitCrossCheck {
    pub identity_grades: usize,
    /// First `i` with `1_i -> 1` mono but not iso.
    pub proper_summand: Option<usize>,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraStructural {
    pub algebra: AlgebraGen,
    pub support: Vec<usize>,
    pub corner: CornerReport,
    pub restricted_separable: bool,
    pub separable: bool,
    pub semiseparable: bool,
    pub naturally_full: bool,
    pub idempotent_trivial: bool,
    /// `e_M` idempotent and natural on the sampled objects and morphisms.
    pub idempotent_laws: bool,
    /// `P(f ⊗ A) = f` on sampled hom bases, or a nonzero `f` with
    /// `f ⊗ A = 0` when not separable.
    pub section_contract: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoalgebraStructural {
    pub dual_of: AlgebraGen,
    pub separable: bool,
    pub semiseparable: bool,
    pub naturally_full: bool,
    pub idempotent_trivial: bool,
    pub idempotent_laws: bool,
    pub section_contract: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetStructural {
    pub objects: Vec<usize>,
    /// `C_J` is closed under `⊗` with unit `1_J` on the sampled objects.
    pub subcategory_monoidal: bool,
    pub lj: StructureChecks,
    pub rj: StructureChecks,
    pub frobenius_pair: FrobeniusPairReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrothendieckSummary {
    pub zplus: RingVerdict,
    pub based: RingVerdict,
    pub fusion: RingVerdict,
    pub fusion_iff_separable: FusionIffSeparable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Structural {
    /// Every `1_i` is a valid algebra and coalgebra.
    pub unit_summands_are_algebras: bool,
    /// `Hom(X_ij, Y_kl) = 0` unless `(i, j) = (k, l)`, on sampled objects.
    pub components_orthogonal: bool,
    pub sampled_morphisms: usize,
    pub all_regular: bool,
    pub mono_iff_split_mono: bool,
    pub epi_iff_split_epi: bool,
    pub algebras: Vec<AlgebraStructural>,
    pub coalgebras: Vec<CoalgebraStructural>,
    pub subsets: Vec<SubsetStructural>,
    pub grothendieck: GrothendieckSummary,
}

impl Structural {
    pub fn all_hold(&self) -> bool {
        let sub_ok = |s: &SubsetStructural| {
            let lj = &s.lj;
            let rj = &s.rj;
            s.subcategory_monoidal
                && lj.lax_associativity
                && lj.lax_unitality
                && lj.colax_coassociativity
                && lj.colax_counitality
                && lj.phi_natural
                && lj.psi_natural
                && lj.frobenius_left
                && lj.frobenius_right
                && lj.phi_psi_identity
                && rj.lax_associativity
                && rj.lax_unitality
                && rj.colax_coassociativity
                && rj.colax_counitality
                && rj.phi_natural
                && rj.psi_natural
                && s.frobenius_pair.left_adjunction
                && s.frobenius_pair.right_adjunction
                && s.frobenius_pair.dims_equal
                && s.frobenius_pair.naturality
        };
        let alg_ok = |a: &AlgebraStructural| {
            let c = &a.corner;
            c.mult_equation
                && c.unit_equation
                && c.valid_in_cj
                && c.valid_in_c
                && c.incl_is_algebra_morphism
                && c.unit_mono
                && a.restricted_separable
                && a.semiseparable
                && a.idempotent_laws
                && a.section_contract
                && a.separable == a.idempotent_trivial
        };
        let co_ok = |c: &CoalgebraStructural| {
            c.semiseparable && c.idempotent_laws && c.section_contract && c.separable == c.idempotent_trivial
        };
        self.unit_summands_are_algebras
            && self.components_orthogonal
            && self.all_regular
            && self.mono_iff_split_mono
            && self.epi_iff_split_epi
            && self.algebras.iter().all(alg_ok)
            && self.coalgebras.iter().all(co_ok)
            && self.subsets.iter().all(sub_ok)
            && self.grothendieck.zplus.holds
            && self.grothendieck.based.holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusInfo {
    pub seed: u64,
    pub corpus_size: usize,
    pub algebras: Vec<AlgebraGen>,
    pub coalgebras_dual_of: Vec<AlgebraGen>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleSizes {
    pub objects: usize,
    pub morphisms: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub category: CategoryInfo,
    pub unit_simple: bool,
    pub unit_cross_check: UnitCrossCheck,
    pub conditions: BTreeMap<u8, Condition>,
    pub structural: Structural,
    pub corpus: CorpusInfo,
    pub samples: SampleSizes,
    pub consistency: bool,
}

fn exact(id: usize, holds: bool, witness: Option<Witness>) -> Condition {
    Condition {
        statement: STATEMENTS[id - 1],
        holds,
        method: Method::Exact,
        witness,
    }
}

fn unit_cross_check(cat: &Category) -> Result<UnitCrossCheck> {
    let n = cat.groupoid().object_count();
    let mut proper = None;
    for i in 0..n {
        let inc = unit_inclusion(cat, &[i])?;
        if is_mono(&inc) && !is_epi(&inc) {
            proper = Some(i);
            break;
        }
    }
    let identity_grades = cat.unit().decompose_simples().len();
    Ok(UnitCrossCheck {
        identity_grades,
        proper_summand: proper,
        agrees: (proper.is_none() && !cat.unit().is_zero()) == (identity_grades == 1) && (identity_grades == n),
    })
}

struct Samples {
    objects: Vec<GradedObject>,
    morphisms: Vec<GradedMorphism>,
}

fn draw_samples(cat: &Category, rng: &mut SampleRng, opts: &AuditOptions) -> Samples {
    let objects = (0..opts.sample_objects).map(|_| random_object(cat, rng, 0, 4)).collect();
    let morphisms = (0..opts.sample_morphisms).map(|_| random_arrow(cat, rng, 4)).collect();
    Samples { objects, morphisms }
}

/// Invertible diagonal endomorphisms of `1` and the idempotents `i_J p_J`
/// for singletons; composed with `u_A` or `ε_C` these give candidate
/// (co)algebra maps, kept only when they verify.
fn unit_endomorphisms(cat: &Category, rng: &mut SampleRng) -> Result<Vec<GradedMorphism>> {
    let one = cat.unit();
    let mut ts = vec![GradedMorphism::identity(&one)];
    for _ in 0..2 {
        ts.push(GradedMorphism::from_fn(&one, &one, |k| {
            crate::exactlin::Matrix::from_fn(one.mult(k), one.mult(k), |_, _| {
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                ratio(sign * rng.gen_range(1..=3), rng.gen_range(1..=2))
            })
        })?);
    }
    for i in 0..cat.groupoid().object_count() {
        ts.push(unit_inclusion(cat, &[i])?.compose(&unit_projection(cat, &[i])?)?);
    }
    Ok(ts)
}

fn algebra_map_candidates(a: &InternalAlgebra, rng: &mut SampleRng) -> Result<Vec<GradedMorphism>> {
    let mut out = Vec::new();
    for t in unit_endomorphisms(a.category(), rng)? {
        let f = a.unit.compose(&t)?;
        if !f.is_zero() {
            out.push(f);
        }
    }
    Ok(out)
}

fn coalgebra_map_candidates(c: &InternalCoalgebra, rng: &mut SampleRng) -> Result<Vec<GradedMorphism>> {
    let mut out = Vec::new();
    for t in unit_endomorphisms(c.category(), rng)? {
        let f = t.compose(&c.counit)?;
        if !f.is_zero() {
            out.push(f);
        }
    }
    Ok(out)
}

fn unit_coalgebra(cat: &Category) -> InternalCoalgebra {
    let one = cat.unit();
    let id = GradedMorphism::identity(&one);
    InternalCoalgebra::new(one, id.clone(), id)
}

fn witness_alg(gen: &AlgebraGen, claim: &str, f: &GradedMorphism, simple: Option<usize>) -> Witness {
    Witness {
        claim: claim.to_string(),
        algebra: Some(gen.clone()),
        coalgebra_dual_of: None,
        simple,
        morphism: MorphismSpec::of(f),
    }
}

fn witness_co(gen: &AlgebraGen, claim: &str, f: &GradedMorphism, simple: Option<usize>) -> Witness {
    Witness {
        claim: claim.to_string(),
        algebra: None,
        coalgebra_dual_of: Some(gen.clone()),
        simple,
        morphism: MorphismSpec::of(f),
    }
}

fn simple_of(f: &GradedMorphism) -> Option<usize> {
    let s = if f.source().is_zero() { f.target() } else { f.source() };
    match s.decompose_simples().as_slice() {
        [(g, 1)] => Some(*g),
        _ => None,
    }
}

/// Reflection condition from per-algebra reports; the method is sampled
/// whenever the verdict rests on samples.
fn reflection_condition<'a>(
    id: usize,
    reports: impl Iterator<Item = (&'a AlgebraGen, &'a crate::functors::Reflection)>,
    co: bool,
    claim: &str,
) -> Condition {
    for (gen, r) in reports {
        if !r.holds {
            let f = r.witness.as_ref().expect("failure carries a witness");
            let w = if co { witness_co(gen, claim, f, simple_of(f)) } else { witness_alg(gen, claim, f, simple_of(f)) };
            return exact(id, false, Some(w));
        }
    }
    Condition {
        statement: STATEMENTS[id - 1],
        holds: true,
        method: Method::Sampled,
        witness: None,
    }
}

fn sample_pairs(objs: &[GradedObject], count: usize) -> Vec<(GradedObject, GradedObject)> {
    objs.chunks(2)
        .filter(|c| c.len() == 2)
        .take(count)
        .map(|c| (c[0].clone(), c[1].clone()))
        .collect()
}

fn algebra_structural(
    e: &CorpusAlgebra,
    samples: &Samples,
    pairs: &[(GradedObject, GradedObject)],
) -> Result<AlgebraStructural> {
    let a = &e.algebra;
    let j = support(a)?;
    let corner = corner_report(a, &j)?;
    let restricted = restricted_separability(a).is_ok();
    let v = separability_verdict(a)?;
    let mut laws = true;
    for (k, m) in samples.objects.iter().enumerate().take(8) {
        let em = idempotent_e(a, m)?;
        laws &= em.compose(&em)? == em;
        if let Some(f) = samples.morphisms.get(k) {
            let (es, et) = (idempotent_e(a, f.source())?, idempotent_e(a, f.target())?);
            laws &= f.compose(&es)? == et.compose(f)?;
        }
    }
    let section_contract = match &v.witness {
        Some(r) => check_section_identity(a, &r.witness, pairs)?,
        None => match is_faithful_tensor(a)?.witness {
            Some(f) => !f.is_zero() && tensor_mor(&f, &GradedMorphism::identity(&a.carrier))?.is_zero(),
            None => false,
        },
    };
    Ok(AlgebraStructural {
        algebra: e.gen.clone(),
        support: j,
        corner,
        restricted_separable: restricted,
        separable: v.separable,
        semiseparable: v.semiseparable,
        naturally_full: v.naturally_full,
        idempotent_trivial: v.idempotent_trivial,
        idempotent_laws: laws,
        section_contract,
    })
}

fn coalgebra_structural(
    e: &CorpusCoalgebra,
    samples: &Samples,
    pairs: &[(GradedObject, GradedObject)],
) -> Result<CoalgebraStructural> {
    let c = &e.coalgebra;
    let v = coseparability_verdict(c)?;
    let mut laws = true;
    for (k, m) in samples.objects.iter().enumerate().take(8) {
        let em = coidempotent_e(c, m)?;
        laws &= em.compose(&em)? == em;
        if let Some(f) = samples.morphisms.get(k) {
            let (es, et) = (coidempotent_e(c, f.source())?, coidempotent_e(c, f.target())?);
            laws &= f.compose(&es)? == et.compose(f)?;
        }
    }
    let section_contract = match &v.witness {
        Some(s) => check_cosection_identity(c, &s.witness, pairs)?,
        None => match is_faithful_cotensor(c)?.witness {
            Some(f) => !f.is_zero() && tensor_mor(&f, &GradedMorphism::identity(&c.carrier))?.is_zero(),
            None => false,
        },
    };
    Ok(CoalgebraStructural {
        dual_of: e.dual_of.clone(),
        separable: v.separable,
        semiseparable: v.semiseparable,
        naturally_full: v.naturally_full,
        idempotent_trivial: v.idempotent_trivial,
        idempotent_laws: laws,
        section_contract,
    })
}

fn subset_structural(cat: &Category, j: &[usize], rng: &mut SampleRng) -> Result<SubsetStructural> {
    let inside = |r: &mut SampleRng| random_object(cat, r, 0, 3).restrict(j).relabelled();
    let anywhere = |r: &mut SampleRng| random_object(cat, r, 0, 3);
    let one_j = cat.unit_summand(j)?;
    let mut monoidal = true;
    let mut lj_triples = Vec::new();
    let mut rj_triples = Vec::new();
    for _ in 0..4 {
        let (x, y, z) = (inside(rng), inside(rng), inside(rng));
        let xy = tensor_obj(&x, &y)?;
        monoidal &= xy.lies_in(j) && tensor_obj(&one_j, &x)? == x && tensor_obj(&x, &one_j)? == x;
        lj_triples.push((x, y, z));
        rj_triples.push((anywhere(rng), anywhere(rng), anywhere(rng)));
    }
    let mut lj_mors = Vec::new();
    let mut rj_mors = Vec::new();
    for _ in 0..3 {
        let (a, b, c, d) = (inside(rng), inside(rng), inside(rng), inside(rng));
        lj_mors.push((random_morphism(rng, &a, &b), random_morphism(rng, &c, &d)));
        let (a, b, c, d) = (anywhere(rng), anywhere(rng), anywhere(rng), anywhere(rng));
        rj_mors.push((random_morphism(rng, &a, &b), random_morphism(rng, &c, &d)));
    }
    let lj = lj_structure_checks(cat, j, &lj_triples, &lj_mors)?;
    let rj = rj_structure_checks(cat, j, &rj_triples, &rj_mors)?;
    let (b, b0, a, a1) = (inside(rng), inside(rng), anywhere(rng), anywhere(rng));
    let b_maps = [random_morphism(rng, &b0, &b), random_morphism(rng, &b, &b0)];
    let a_maps = [random_morphism(rng, &a, &a1), random_morphism(rng, &a1, &a)];
    let frobenius_pair = frobenius_pair_check(j, &b, &a, &b_maps, &a_maps)?;
    Ok(SubsetStructural {
        objects: j.to_vec(),
        subcategory_monoidal: monoidal,
        lj,
        rj,
        frobenius_pair,
    })
}

fn components_orthogonal(cat: &Category, objs: &[GradedObject]) -> Result<bool> {
    let n = cat.groupoid().object_count();
    for w in objs.chunks(2).filter(|c| c.len() == 2).take(4) {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        if (i, j) != (k, l) && GradedMorphism::hom_dim(&w[0].component(i, j), &w[1].component(k, l)) != 0 {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Runs every condition and structural check. Theorem-level contradictions
/// inside the engine surface as `Error::Consistency`; disagreement between
/// conditions and the unit verdict is reported through `consistency`.
pub fn run_audit(cat: &Category, opts: &AuditOptions) -> Result<AuditReport> {
    if opts.corpus_size == 0 {
        return Err(Error::Input("corpus size must be at least 1".into()));
    }
    let g = cat.groupoid();
    let n = g.object_count();
    let unit_simple = n == 1;
    let algebras = algebra_corpus(cat, opts.seed, opts.corpus_size)?;
    let coalgebras = coalgebra_corpus(&algebras)?;
    let mut r = rng(opts.seed.wrapping_add(0x5eed));
    let samples = draw_samples(cat, &mut r, opts);
    let pairs = sample_pairs(&samples.objects, 6);

    let mut conditions = BTreeMap::new();
    let cond1 = if unit_simple {
        exact(1, true, None)
    } else {
        let f = unit_inclusion(cat, &[0])?;
        Some(Witness {
            claim: "1_0 -> 1 is a mono that is not an iso".into(),
            algebra: None,
            coalgebra_dual_of: None,
            simple: Some(g.identity_of(0)),
            morphism: MorphismSpec::of(&f),
        })
        .map(|w| exact(1, false, Some(w)))
        .expect("witness built")
    };
    conditions.insert(1, cond1);

    // (2), (4), (12): algebra-side exact conditions
    let mut c2 = exact(2, true, None);
    let mut c4 = exact(4, true, None);
    let mut c12 = exact(12, true, None);
    let mut refl: Vec<(AlgebraGen, ReflectionReport)> = Vec::new();
    for e in &algebras {
        let a = &e.algebra;
        let v = separability_verdict(a)?;
        if !v.separable && c2.holds {
            c2 = exact(2, false, Some(witness_alg(&e.gen, "u_A has no retraction", &a.unit, None)));
        }
        let fa = is_faithful_tensor(a)?;
        if let (false, Some(f), true) = (fa.faithful, &fa.witness, c4.holds) {
            c4 = exact(4, false, Some(witness_alg(&e.gen, "f is nonzero and f ⊗ A = 0", f, simple_of(f))));
        }
        if !is_mono(&a.unit) && c12.holds {
            c12 = exact(12, false, Some(witness_alg(&e.gen, "u_A has nonzero kernel", &a.unit, None)));
        }
        refl.push((e.gen.clone(), reflection_checks(a, &samples.morphisms)?));
    }
    let mut c3 = exact(3, true, None);
    let mut c5 = exact(5, true, None);
    let mut c13 = exact(13, true, None);
    let mut corefl: Vec<(AlgebraGen, ReflectionReport)> = Vec::new();
    for e in &coalgebras {
        let c = &e.coalgebra;
        let v = coseparability_verdict(c)?;
        if !v.separable && c3.holds {
            c3 = exact(3, false, Some(witness_co(&e.dual_of, "ε_C has no section", &c.counit, None)));
        }
        let fc = is_faithful_cotensor(c)?;
        if let (false, Some(f), true) = (fc.faithful, &fc.witness, c5.holds) {
            c5 = exact(5, false, Some(witness_co(&e.dual_of, "f is nonzero and f ⊗ C = 0", f, simple_of(f))));
        }
        if !is_epi(&c.counit) && c13.holds {
            c13 = exact(13, false, Some(witness_co(&e.dual_of, "ε_C has nonzero cokernel", &c.counit, None)));
        }
        corefl.push((e.dual_of.clone(), coreflection_checks(c, &samples.morphisms)?));
    }
    conditions.insert(2, c2);
    conditions.insert(3, c3);
    conditions.insert(4, c4);
    conditions.insert(5, c5);
    conditions.insert(6, reflection_condition(6, refl.iter().map(|(g, r)| (g, &r.maschke)), false, "f is not split mono but f ⊗ A is"));
    conditions.insert(7, reflection_condition(7, corefl.iter().map(|(g, r)| (g, &r.maschke)), true, "f is not split mono but f ⊗ C is"));
    conditions.insert(8, reflection_condition(8, refl.iter().map(|(g, r)| (g, &r.dual_maschke)), false, "f is not split epi but f ⊗ A is"));
    conditions.insert(9, reflection_condition(9, corefl.iter().map(|(g, r)| (g, &r.dual_maschke)), true, "f is not split epi but f ⊗ C is"));
    conditions.insert(10, reflection_condition(10, refl.iter().map(|(g, r)| (g, &r.conservative)), false, "f is not iso but f ⊗ A is"));
    conditions.insert(11, reflection_condition(11, corefl.iter().map(|(g, r)| (g, &r.conservative)), true, "f is not iso but f ⊗ C is"));
    conditions.insert(12, c12);
    conditions.insert(13, c13);

    let one_alg = unit_algebra(cat);
    let mut c14 = Condition { statement: STATEMENTS[13], holds: true, method: Method::Sampled, witness: None };
    for e in &algebras {
        for f in algebra_map_candidates(&e.algebra, &mut r)? {
            if one_alg.is_morphism_to(&e.algebra, &f)? && !is_mono(&f) {
                c14 = exact(14, false, Some(witness_alg(&e.gen, "nonzero algebra map 1 -> A with nonzero kernel", &f, None)));
                break;
            }
        }
        if !c14.holds {
            break;
        }
    }
    conditions.insert(14, c14);
    let one_co = unit_coalgebra(cat);
    let mut c15 = Condition { statement: STATEMENTS[14], holds: true, method: Method::Sampled, witness: None };
    for e in &coalgebras {
        for f in coalgebra_map_candidates(&e.coalgebra, &mut r)? {
            if e.coalgebra.is_morphism_to(&one_co, &f)? && !is_epi(&f) {
                c15 = exact(15, false, Some(witness_co(&e.dual_of, "nonzero coalgebra map C -> 1 with nonzero cokernel", &f, None)));
                break;
            }
        }
        if !c15.holds {
            break;
        }
    }
    conditions.insert(15, c15);

    // structural results
    let mut unit_summands_ok = true;
    for i in 0..n {
        unit_summands_ok &= unit_summand_algebra(cat, i)?.validate()?.is_valid();
        unit_summands_ok &= unit_summand_coalgebra(cat, i)?.validate()?.is_valid();
    }
    let mut all_regular = true;
    let mut mono_split = true;
    let mut epi_split = true;
    for f in &samples.morphisms {
        all_regular &= weak_inverse(f)?.verify(f)?;
        mono_split &= is_mono(f) == find_retraction(f)?.is_some();
        epi_split &= is_epi(f) == find_section(f)?.is_some();
    }
    let alg_struct = algebras.iter().map(|e| algebra_structural(e, &samples, &pairs)).collect::<Result<Vec<_>>>()?;
    let co_struct = coalgebras.iter().map(|e| coalgebra_structural(e, &samples, &pairs)).collect::<Result<Vec<_>>>()?;
    let mut subsets_j: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    if n > 1 {
        subsets_j.push((0..n).collect());
    }
    let subsets = subsets_j.iter().map(|j| subset_structural(cat, j, &mut r)).collect::<Result<Vec<_>>>()?;
    let ring = grothendieck_ring(cat)?;
    let grothendieck = GrothendieckSummary {
        zplus: is_zplus_ring(&ring),
        based: is_based_ring(&ring),
        fusion: is_fusion_ring(&ring),
        fusion_iff_separable: fusion_iff_separable_check(cat, &algebras)?,
    };
    let structural = Structural {
        unit_summands_are_algebras: unit_summands_ok,
        components_orthogonal: components_orthogonal(cat, &samples.objects)?,
        sampled_morphisms: samples.morphisms.len(),
        all_regular,
        mono_iff_split_mono: mono_split,
        epi_iff_split_epi: epi_split,
        algebras: alg_struct,
        coalgebras: co_struct,
        subsets,
        grothendieck,
    };
    let unit_cross_check = unit_cross_check(cat)?;
    let consistency = conditions.values().all(|c| c.holds == unit_simple)
        && unit_cross_check.agrees
        && structural.all_hold()
        && structural.grothendieck.fusion.holds == unit_simple;
    let mut report = AuditReport {
        category: CategoryInfo::of(cat),
        unit_simple,
        unit_cross_check,
        conditions,
        structural,
        corpus: CorpusInfo {
            seed: opts.seed,
            corpus_size: opts.corpus_size,
            algebras: algebras.iter().map(|e| e.gen.clone()).collect(),
            coalgebras_dual_of: coalgebras.iter().map(|e| e.dual_of.clone()).collect(),
        },
        samples: SampleSizes {
            objects: opts.sample_objects,
            morphisms: opts.sample_morphisms,
        },
        consistency,
    };
    // a witness that does not re-verify is itself an inconsistency
    for (id, c) in &report.conditions {
        if let Some(w) = &c.witness {
            if !verify_witness(cat, *id, w)? {
                report.consistency = false;
            }
        }
    }
    Ok(report)
}

/// Rebuilds a witness from its file form and re-checks its claim.
pub fn verify_witness(cat: &Category, condition: u8, w: &Witness) -> Result<bool> {
    let alg = w.algebra.as_ref().map(|g| g.build(cat)).transpose()?;
    let co = match &w.coalgebra_dual_of {
        Some(g) => Some(dualize_algebra(&g.build(cat)?)?),
        None => None,
    };
    let carrier = alg.as_ref().map(|a| a.carrier.clone()).or_else(|| co.as_ref().map(|c| c.carrier.clone()));
    if let Some(a) = &alg {
        if !a.validate()?.is_valid() || a.is_zero() {
            return Ok(false);
        }
    }
    let plain = || w.morphism.build(cat);
    Ok(match condition {
        1 => {
            let f = plain()?;
            f.target() == &cat.unit() && !f.source().is_zero() && is_mono(&f) && !is_iso(&f)
        }
        2 | 12 | 14 => {
            let a = alg.ok_or_else(|| Error::Input("witness names no algebra".into()))?;
            let f = w.morphism.build_between(&cat.unit(), &a.carrier)?;
            match condition {
                2 => f == a.unit && find_retraction(&f)?.is_none(),
                12 => f == a.unit && !is_mono(&f),
                _ => !f.is_zero() && unit_algebra(cat).is_morphism_to(&a, &f)? && !is_mono(&f),
            }
        }
        3 | 13 | 15 => {
            let c = co.ok_or_else(|| Error::Input("witness names no coalgebra".into()))?;
            let f = w.morphism.build_between(&c.carrier, &cat.unit())?;
            match condition {
                3 => f == c.counit && find_section(&f)?.is_none(),
                13 => f == c.counit && !is_epi(&f),
                _ => !f.is_zero() && c.is_morphism_to(&unit_coalgebra(cat), &f)? && !is_epi(&f),
            }
        }
        4..=11 => {
            let x = carrier.ok_or_else(|| Error::Input("witness names no algebra or coalgebra".into()))?;
            let f = plain()?;
            let fx = tensor_mor(&f, &GradedMorphism::identity(&x))?;
            match condition {
                4 | 5 => !f.is_zero() && fx.is_zero(),
                6 | 7 => !is_split_mono(&f)? && is_split_mono(&fx)?,
                8 | 9 => !is_split_epi(&f)? && is_split_epi(&fx)?,
                _ => !is_iso(&f) && is_iso(&fx),
            }
        }
        _ => return Err(Error::Input(format!("no condition {condition}"))),
    })
}

pub fn render_table(report: &AuditReport) -> String {
    let mut s = String::new();
    let c = &report.category;
    let _ = writeln!(s, "category {} ({} objects, {} morphisms)", &c.fingerprint[..12], c.objects, c.morphisms);
    let _ = writeln!(s, "unit simple: {}", report.unit_simple);
    for (id, cond) in &report.conditions {
        let method = match cond.method {
            Method::Exact => "exact",
            Method::Sampled => "sampled",
        };
        let wit = cond.witness.as_ref().map(|w| w.claim.as_str()).unwrap_or("");
        let line = format!("({id:>2}) {:<5} {:<7} {:<56} {}", cond.holds, method, cond.statement, wit);
        let _ = writeln!(s, "{}", line.trim_end());
    }
    let _ = writeln!(s, "structural checks: {}", if report.structural.all_hold() { "pass" } else { "FAIL" });
    let _ = writeln!(s, "consistency: {}", report.consistency);
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureWithLabels {
    pub equation: &'static str,
    pub grades: Vec<usize>,
    pub grade_labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraVerdicts {
    pub support: Vec<usize>,
    pub carrier_j: ObjectSpec,
    pub corner: CornerReport,
    pub separable: bool,
    pub semiseparable: bool,
    pub naturally_full: bool,
    pub idempotent_trivial: bool,
    pub faithful: bool,
    pub restricted_separable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub retraction: Option<MorphismSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restricted_retraction: Option<MorphismSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckAlgebraReport {
    pub category: CategoryInfo,
    pub valid: bool,
    pub zero: bool,
    pub failures: Vec<FailureWithLabels>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<AlgebraVerdicts>,
}

fn labelled(cat: &Category, r: &ValidationReport) -> Vec<FailureWithLabels> {
    let g = cat.groupoid();
    r.failures
        .iter()
        .map(|f| FailureWithLabels {
            equation: f.equation,
            grades: f.grades.clone(),
            grade_labels: f.grades.iter().map(|&k| g.label(k).to_string()).collect(),
            detail: f.detail.clone(),
        })
        .collect()
}

/// Validation, support, corner equations and separability verdicts for one
/// algebra. Invalid algebras get the validation part only.
pub fn check_algebra(cat: &Category, spec: &AlgebraSpec) -> Result<CheckAlgebraReport> {
    let a = spec.build(cat)?;
    let v = a.validate()?;
    let mut report = CheckAlgebraReport {
        category: CategoryInfo::of(cat),
        valid: v.is_valid(),
        zero: v.zero,
        failures: labelled(cat, &v),
        verdicts: None,
    };
    if !v.is_valid() || v.zero {
        return Ok(report);
    }
    let j = support(&a)?;
    let sep = separability_verdict(&a)?;
    let rs = restricted_separability(&a)?;
    report.verdicts = Some(AlgebraVerdicts {
        carrier_j: ObjectSpec::of(&a.carrier.restrict(&j)),
        corner: corner_report(&a, &j)?,
        separable: sep.separable,
        semiseparable: sep.semiseparable,
        naturally_full: sep.naturally_full,
        idempotent_trivial: sep.idempotent_trivial,
        faithful: is_faithful_tensor(&a)?.faithful,
        restricted_separable: true,
        retraction: sep.witness.as_ref().map(|w| MorphismSpec::of(&w.witness)),
        restricted_retraction: Some(MorphismSpec::of(&rs.retraction.witness)),
        support: j,
    });
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrReport {
    pub category: CategoryInfo,
    pub ring: BasedRingData,
    pub zplus: RingVerdict,
    pub based: RingVerdict,
    pub fusion: RingVerdict,
    pub fusion_iff_separable: FusionIffSeparable,
}

pub fn gr_report(cat: &Category, opts: &AuditOptions) -> Result<GrReport> {
    let ring = grothendieck_ring(cat)?;
    let corpus = algebra_corpus(cat, opts.seed, opts.corpus_size)?;
    Ok(GrReport {
        category: CategoryInfo::of(cat),
        zplus: is_zplus_ring(&ring),
        based: is_based_ring(&ring),
        fusion: is_fusion_ring(&ring),
        fusion_iff_separable: fusion_iff_separable_check(cat, &corpus)?,
        ring,
    })
}
