//! Algebras and coalgebras internal to `Vec_G`.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{ratio, Matrix};
use crate::gvec::{
    direct_sum_obj, dual_mor, dual_obj, is_mono, left_dual, restriction_inclusion, restriction_projection,
    tensor_mor, tensor_mors, tensor_obj, unit_inclusion, unit_projection, Category, GradedMorphism, GradedObject,
    MorphismSpec, ObjectSpec,
};
use crate::sampling::{random_object, random_subset, SampleRng};

/// `(A, m, u)` with `m : A ⊗ A -> A` and `u : 1' -> A`, where `1'` is the
/// unit of the ambient category: `1` for `C`, `1_J` for `C_J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalAlgebra {
    pub carrier: GradedObject,
    pub mult: GradedMorphism,
    pub unit: GradedMorphism,
}

/// `(C, Δ, ε)` with `Δ : C -> C ⊗ C` and `ε : C -> 1'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalCoalgebra {
    pub carrier: GradedObject,
    pub comult: GradedMorphism,
    pub counit: GradedMorphism,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub equation: &'static str,
    pub grades: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub zero: bool,
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failing(&self, equation: &str) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.equation == equation)
    }
}

/// Grades at which two parallel-looking morphisms disagree, counting a
/// mismatch of source or target words at a grade as a disagreement.
fn differing_grades(f: &GradedMorphism, g: &GradedMorphism) -> Vec<usize> {
    (0..f.category().grades())
        .filter(|&k| {
            f.source().basis(k) != g.source().basis(k)
                || f.target().basis(k) != g.target().basis(k)
                || f.block(k) != g.block(k)
        })
        .collect()
}

fn shape_failure(what: &str, expected: &GradedObject, found: &GradedObject) -> AxiomFailure {
    AxiomFailure {
        equation: "shape",
        grades: (0..expected.category().grades())
            .filter(|&k| expected.basis(k) != found.basis(k))
            .collect(),
        detail: Some(format!("{what}: expected {expected:?}, found {found:?}")),
    }
}

fn push_if_differs(out: &mut Vec<AxiomFailure>, equation: &'static str, lhs: &GradedMorphism, rhs: &GradedMorphism) {
    let grades = differing_grades(lhs, rhs);
    if !grades.is_empty() {
        out.push(AxiomFailure {
            equation,
            grades,
            detail: None,
        });
    }
}

impl InternalAlgebra {
    pub fn new(carrier: GradedObject, mult: GradedMorphism, unit: GradedMorphism) -> Self {
        InternalAlgebra { carrier, mult, unit }
    }

    pub fn category(&self) -> &Category {
        self.carrier.category()
    }

    /// The unit object this algebra's unit leaves from.
    pub fn ambient_unit(&self) -> &GradedObject {
        self.unit.source()
    }

    pub fn is_zero(&self) -> bool {
        self.carrier.is_zero()
    }

    /// Associativity and both unit laws, compared as exact matrices. The unit
    /// laws read `m (u ⊗ id) = id` and `m (id ⊗ u) = id` because `1' ⊗ A = A`
    /// on the nose.
    pub fn validate(&self) -> Result<ValidationReport> {
        let a = &self.carrier;
        let aa = tensor_obj(a, a)?;
        let mut failures = Vec::new();
        if self.mult.source() != &aa {
            failures.push(shape_failure("multiplication source", &aa, self.mult.source()));
        }
        if self.mult.target() != a {
            failures.push(shape_failure("multiplication target", a, self.mult.target()));
        }
        if self.unit.target() != a {
            failures.push(shape_failure("unit target", a, self.unit.target()));
        }
        if !self.unit.source().is_unit_like() {
            failures.push(AxiomFailure {
                equation: "shape",
                grades: Vec::new(),
                detail: Some("unit source is not a unit summand".into()),
            });
        }
        if !failures.is_empty() {
            return Ok(ValidationReport {
                zero: a.is_zero(),
                failures,
            });
        }
        let id = GradedMorphism::identity(a);
        let lhs = self.mult.compose(&tensor_mor(&self.mult, &id)?)?;
        let rhs = self.mult.compose(&tensor_mor(&id, &self.mult)?)?;
        push_if_differs(&mut failures, "associativity", &lhs, &rhs);
        let left = self.mult.compose(&tensor_mor(&self.unit, &id)?).ok();
        let right = self.mult.compose(&tensor_mor(&id, &self.unit)?).ok();
        match left {
            Some(l) => push_if_differs(&mut failures, "left_unit", &l, &id),
            None => failures.push(unit_mismatch("left_unit", a, &self.unit)),
        }
        match right {
            Some(r) => push_if_differs(&mut failures, "right_unit", &r, &id),
            None => failures.push(unit_mismatch("right_unit", a, &self.unit)),
        }
        Ok(ValidationReport {
            zero: a.is_zero(),
            failures,
        })
    }

    /// An algebra morphism `f : self -> other` satisfies `f m = m' (f ⊗ f)`
    /// and `f u = u'`.
    pub fn is_morphism_to(&self, other: &InternalAlgebra, f: &GradedMorphism) -> Result<bool> {
        if f.source() != &self.carrier || f.target() != &other.carrier {
            return Ok(false);
        }
        let lhs = f.compose(&self.mult)?;
        let rhs = other.mult.compose(&tensor_mor(f, f)?)?;
        if lhs != rhs {
            return Ok(false);
        }
        Ok(self.unit.source() == other.unit.source() && f.compose(&self.unit)? == other.unit)
    }
}

fn unit_mismatch(equation: &'static str, a: &GradedObject, unit: &GradedMorphism) -> AxiomFailure {
    let grades = (0..a.category().grades())
        .filter(|&k| {
            let g = a.category().groupoid();
            a.mult(k) > 0 && !(unit.source().mult(g.identity_of(g.src(k))) > 0 && unit.source().mult(g.identity_of(g.tgt(k))) > 0)
        })
        .collect();
    AxiomFailure {
        equation,
        grades,
        detail: Some("carrier does not lie over the unit summand".into()),
    }
}

impl InternalCoalgebra {
    pub fn new(carrier: GradedObject, comult: GradedMorphism, counit: GradedMorphism) -> Self {
        InternalCoalgebra {
            carrier,
            comult,
            counit,
        }
    }

    pub fn category(&self) -> &Category {
        self.carrier.category()
    }

    pub fn ambient_unit(&self) -> &GradedObject {
        self.counit.target()
    }

    pub fn is_zero(&self) -> bool {
        self.carrier.is_zero()
    }

    pub fn validate(&self) -> Result<ValidationReport> {
        let c = &self.carrier;
        let cc = tensor_obj(c, c)?;
        let mut failures = Vec::new();
        if self.comult.target() != &cc {
            failures.push(shape_failure("comultiplication target", &cc, self.comult.target()));
        }
        if self.comult.source() != c {
            failures.push(shape_failure("comultiplication source", c, self.comult.source()));
        }
        if self.counit.source() != c {
            failures.push(shape_failure("counit source", c, self.counit.source()));
        }
        if !self.counit.target().is_unit_like() {
            failures.push(AxiomFailure {
                equation: "shape",
                grades: Vec::new(),
                detail: Some("counit target is not a unit summand".into()),
            });
        }
        if !failures.is_empty() {
            return Ok(ValidationReport {
                zero: c.is_zero(),
                failures,
            });
        }
        let id = GradedMorphism::identity(c);
        let lhs = tensor_mor(&self.comult, &id)?.compose(&self.comult)?;
        let rhs = tensor_mor(&id, &self.comult)?.compose(&self.comult)?;
        push_if_differs(&mut failures, "coassociativity", &lhs, &rhs);
        match tensor_mor(&self.counit, &id)?.compose(&self.comult).ok() {
            Some(l) => push_if_differs(&mut failures, "left_counit", &l, &id),
            None => failures.push(unit_mismatch("left_counit", c, &self.counit_as_unit())),
        }
        match tensor_mor(&id, &self.counit)?.compose(&self.comult).ok() {
            Some(r) => push_if_differs(&mut failures, "right_counit", &r, &id),
            None => failures.push(unit_mismatch("right_counit", c, &self.counit_as_unit())),
        }
        Ok(ValidationReport {
            zero: c.is_zero(),
            failures,
        })
    }

    fn counit_as_unit(&self) -> GradedMorphism {
        GradedMorphism::zero(self.counit.target(), self.counit.source()).expect("same category")
    }

    /// A coalgebra morphism `f : self -> other` satisfies `Δ' f = (f ⊗ f) Δ`
    /// and `ε' f = ε`.
    pub fn is_morphism_to(&self, other: &InternalCoalgebra, f: &GradedMorphism) -> Result<bool> {
        if f.source() != &self.carrier || f.target() != &other.carrier {
            return Ok(false);
        }
        let lhs = other.comult.compose(f)?;
        let rhs = tensor_mor(f, f)?.compose(&self.comult)?;
        if lhs != rhs {
            return Ok(false);
        }
        Ok(self.counit.target() == other.counit.target() && other.counit.compose(f)? == self.counit)
    }
}

/// The unit algebra `(1, id, id)`.
pub fn unit_algebra(cat: &Category) -> InternalAlgebra {
    let one = cat.unit();
    let id = GradedMorphism::identity(&one);
    InternalAlgebra::new(one, id.clone(), id)
}

/// `1_i` with multiplication the identity of `1_i ⊗ 1_i = 1_i` and unit `p_i`.
pub fn unit_summand_algebra(cat: &Category, i: usize) -> Result<InternalAlgebra> {
    let one_i = cat.unit_summand(&[i])?;
    let id = GradedMorphism::identity(&one_i);
    Ok(InternalAlgebra::new(one_i, id, unit_projection(cat, &[i])?))
}

/// `1_i` with comultiplication the identity and counit `i_i`.
pub fn unit_summand_coalgebra(cat: &Category, i: usize) -> Result<InternalCoalgebra> {
    let one_i = cat.unit_summand(&[i])?;
    let id = GradedMorphism::identity(&one_i);
    Ok(InternalCoalgebra::new(one_i, id, unit_inclusion(cat, &[i])?))
}

/// The groupoid algebra of the full subgroupoid on `objects`: one basis
/// vector per arrow between objects of `J`, multiplied by composition, with
/// unit the sum of identities of `J`.
pub fn groupoid_algebra(cat: &Category, objects: &[usize]) -> Result<InternalAlgebra> {
    if objects.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let g = cat.groupoid();
    for &i in objects {
        if i >= g.object_count() {
            return Err(Error::OutOfRange {
                what: "object",
                index: i,
                bound: g.object_count(),
            });
        }
    }
    let inside = |k: usize| objects.contains(&g.src(k)) && objects.contains(&g.tgt(k));
    let mult: Vec<usize> = (0..cat.grades()).map(|k| usize::from(inside(k))).collect();
    let a = cat.atomic(&mult)?;
    let aa = tensor_obj(&a, &a)?;
    // Each grade of A ⊗ A holds one word per composable pair, all mapping to
    // the single basis vector of the product grade.
    let m = GradedMorphism::from_fn(&aa, &a, |k| Matrix::from_fn(a.mult(k), aa.mult(k), |_, _| ratio(1, 1)))?;
    let one = cat.unit();
    let u = GradedMorphism::from_fn(&one, &a, |k| {
        Matrix::from_fn(a.mult(k), one.mult(k), |_, _| ratio(1, 1))
    })?;
    Ok(InternalAlgebra::new(a, m, u))
}

/// `X ⊗ X*` with multiplication `id ⊗ ev ⊗ id` and unit `coev`.
pub fn internal_end(x: &GradedObject) -> Result<InternalAlgebra> {
    if x.is_zero() {
        return Err(Error::ZeroInput("internal_end argument"));
    }
    let d = left_dual(x)?;
    let carrier = tensor_obj(x, &d.dual)?;
    let mult = tensor_mors(&[&GradedMorphism::identity(x), &d.ev, &GradedMorphism::identity(&d.dual)])?;
    Ok(InternalAlgebra::new(carrier, mult, d.coev))
}

/// The coalgebra on `A*` with `Δ = m*` and `ε = u*`. Uses `(A ⊗ A)* = A* ⊗ A*`
/// and `1* = 1`, both of which hold on the nose.
pub fn dualize_algebra(a: &InternalAlgebra) -> Result<InternalCoalgebra> {
    if !a.validate()?.is_valid() {
        return Err(Error::InvalidAlgebra("cannot dualize an invalid algebra".into()));
    }
    let carrier = dual_obj(&a.carrier);
    let comult = dual_mor(&a.mult)?;
    let counit = dual_mor(&a.unit)?;
    Ok(InternalCoalgebra::new(carrier, comult, counit))
}

/// Direct sum with zero cross products.
pub fn direct_sum_algebra(parts: &[&InternalAlgebra]) -> Result<InternalAlgebra> {
    let carriers: Vec<&GradedObject> = parts.iter().map(|a| &a.carrier).collect();
    let ds = direct_sum_obj(&carriers)?;
    let cat = ds.object.category().clone();
    let one = cat.unit();
    let aa = tensor_obj(&ds.object, &ds.object)?;
    let mut m = GradedMorphism::zero(&aa, &ds.object)?;
    let mut u = GradedMorphism::zero(&one, &ds.object)?;
    for (k, a) in parts.iter().enumerate() {
        if a.unit.source() != &one {
            return Err(Error::InvalidAlgebra("summands must be algebras in the ambient category".into()));
        }
        let pp = tensor_mor(&ds.projections[k], &ds.projections[k])?;
        m = m.add(&GradedMorphism::compose_all(&[&ds.injections[k], &a.mult, &pp])?)?;
        u = u.add(&ds.injections[k].compose(&a.unit)?)?;
    }
    Ok(InternalAlgebra::new(ds.object, m, u))
}

/// `J = { i : X_ii ≠ 0 }`.
pub fn diagonal_support(x: &GradedObject) -> Vec<usize> {
    let n = x.category().groupoid().object_count();
    (0..n).filter(|&i| !x.component(i, i).is_zero()).collect()
}

/// The support `J` of an algebra, after checking that every component
/// outside `J × J` vanishes. A violation means the algebra was not valid or
/// the engine has a bug.
pub fn support(a: &InternalAlgebra) -> Result<Vec<usize>> {
    let j = diagonal_support(&a.carrier);
    if !a.carrier.lies_in(&j) {
        let g = a.category().groupoid();
        let bad: Vec<String> = (0..a.category().grades())
            .filter(|&k| a.carrier.mult(k) > 0 && !(j.contains(&g.src(k)) && j.contains(&g.tgt(k))))
            .map(|k| g.label(k).to_string())
            .collect();
        return Err(Error::Consistency(format!(
            "support theorem violated: components {bad:?} lie outside J = {j:?}"
        )));
    }
    Ok(j)
}

/// `A_J` as an algebra in `C_J`, together with the canonical maps relating it
/// to `A`.
#[derive(Debug, Clone)]
pub struct Restricted {
    pub objects: Vec<usize>,
    /// `(A_J, R_J(m) φ_{A,A}, R_J(u) φ_0)` with unit `1_J -> A_J`.
    pub algebra: InternalAlgebra,
    /// `i_{A_J} : A_J -> A`
    pub incl: GradedMorphism,
    /// `p_J : 1 -> 1_J`
    pub p_j: GradedMorphism,
}

impl Restricted {
    /// `(A_J, m_{A_J}, u_{A_J} p_J)`, the same algebra seen in `C`.
    pub fn in_ambient(&self) -> Result<InternalAlgebra> {
        Ok(InternalAlgebra::new(
            self.algebra.carrier.clone(),
            self.algebra.mult.clone(),
            self.algebra.unit.compose(&self.p_j)?,
        ))
    }
}

/// The corner `A_J = 1_J ⊗ A ⊗ 1_J` with the structure transported along the
/// lax structure of `R_J`.
pub fn restrict_to_j(a: &InternalAlgebra, objects: &[usize]) -> Result<Restricted> {
    if objects.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let cat = a.category();
    let aj = a.carrier.restrict(objects);
    let phi = GradedMorphism::by_words(&tensor_obj(&aj, &aj)?, &tensor_obj(&a.carrier, &a.carrier)?.restrict(objects))?;
    let mult = a.mult.restrict(objects).compose(&phi)?;
    let unit = a.unit.restrict(objects);
    Ok(Restricted {
        objects: objects.to_vec(),
        algebra: InternalAlgebra::new(aj, mult, unit),
        incl: restriction_inclusion(&a.carrier, objects)?,
        p_j: unit_projection(cat, objects)?,
    })
}

/// `C_J` with `Δ_J = ψ_{C,C} R_J(Δ)` and `ε_J = ψ_0 R_J(ε)`.
#[derive(Debug, Clone)]
pub struct RestrictedCo {
    pub objects: Vec<usize>,
    pub coalgebra: InternalCoalgebra,
    /// `p_{C_J} : C -> C_J`
    pub proj: GradedMorphism,
    /// `i_J : 1_J -> 1`
    pub i_j: GradedMorphism,
}

pub fn restrict_coalgebra_to_j(c: &InternalCoalgebra, objects: &[usize]) -> Result<RestrictedCo> {
    if objects.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let cat = c.category();
    let cj = c.carrier.restrict(objects);
    let psi = GradedMorphism::by_words(&tensor_obj(&c.carrier, &c.carrier)?.restrict(objects), &tensor_obj(&cj, &cj)?)?;
    let comult = psi.compose(&c.comult.restrict(objects))?;
    let counit = c.counit.restrict(objects);
    Ok(RestrictedCo {
        objects: objects.to_vec(),
        coalgebra: InternalCoalgebra::new(cj, comult, counit),
        proj: restriction_projection(&c.carrier, objects)?,
        i_j: unit_inclusion(cat, objects)?,
    })
}

/// The equations tying `A_J` to `A`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CornerReport {
    pub objects: Vec<usize>,
    /// `i m_{A_J} = m_A (i ⊗ i)`
    pub mult_equation: bool,
    /// `i u_{A_J} p_J = u_A`
    pub unit_equation: bool,
    pub valid_in_cj: bool,
    pub valid_in_c: bool,
    /// `i_{A_J}` is an algebra morphism `(A_J, m_{A_J}, u_{A_J} p_J) -> A`.
    pub incl_is_algebra_morphism: bool,
    pub unit_mono: bool,
}

pub fn corner_report(a: &InternalAlgebra, objects: &[usize]) -> Result<CornerReport> {
    let r = restrict_to_j(a, objects)?;
    let i = &r.incl;
    let mult_equation = i.compose(&r.algebra.mult)? == a.mult.compose(&tensor_mor(i, i)?)?;
    let unit_equation = GradedMorphism::compose_all(&[i, &r.algebra.unit, &r.p_j])? == a.unit;
    let ambient = r.in_ambient()?;
    Ok(CornerReport {
        objects: objects.to_vec(),
        mult_equation,
        unit_equation,
        valid_in_cj: r.algebra.validate()?.is_valid(),
        valid_in_c: ambient.validate()?.is_valid(),
        incl_is_algebra_morphism: ambient.is_morphism_to(a, i)?,
        unit_mono: is_mono(&r.algebra.unit),
    })
}

/// Generator form of an algebra, as used in corpora and spec files.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "gen", rename_all = "snake_case")]
pub enum AlgebraGen {
    Unit,
    UnitSummand { i: usize },
    GroupoidAlgebra { objects: Vec<usize> },
    InternalEnd { x: BTreeMap<String, usize> },
    Sum { parts: Vec<AlgebraGen> },
}

impl AlgebraGen {
    pub fn build(&self, cat: &Category) -> Result<InternalAlgebra> {
        match self {
            AlgebraGen::Unit => Ok(unit_algebra(cat)),
            AlgebraGen::UnitSummand { i } => unit_summand_algebra(cat, *i),
            AlgebraGen::GroupoidAlgebra { objects } => groupoid_algebra(cat, objects),
            AlgebraGen::InternalEnd { x } => internal_end(&ObjectSpec::Mult { mult: x.clone() }.build(cat)?),
            AlgebraGen::Sum { parts } => {
                if parts.is_empty() {
                    return Err(Error::Input("sum needs at least one part".into()));
                }
                let built = parts.iter().map(|p| p.build(cat)).collect::<Result<Vec<_>>>()?;
                direct_sum_algebra(&built.iter().collect::<Vec<_>>())
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            AlgebraGen::Unit => "1".into(),
            AlgebraGen::UnitSummand { i } => format!("1_{i}"),
            AlgebraGen::GroupoidAlgebra { objects } => format!("k[G_{objects:?}]"),
            AlgebraGen::InternalEnd { x } => format!("End({x:?})"),
            AlgebraGen::Sum { parts } => parts.iter().map(AlgebraGen::describe).collect::<Vec<_>>().join(" ⊕ "),
        }
    }
}

/// An algebra given by explicit blocks on a carrier. `mult` blocks are read
/// against `carrier ⊗ carrier` and `unit` blocks against the unit object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitAlgebra {
    pub carrier: ObjectSpec,
    pub mult: BTreeMap<String, Matrix>,
    pub unit: BTreeMap<String, Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSpec {
    Gen(AlgebraGen),
    Explicit(ExplicitAlgebra),
}

impl AlgebraSpec {
    /// Builds the structure without validating it.
    pub fn build(&self, cat: &Category) -> Result<InternalAlgebra> {
        match self {
            AlgebraSpec::Gen(g) => g.build(cat),
            AlgebraSpec::Explicit(e) => {
                let a = e.carrier.build(cat)?;
                let aa = tensor_obj(&a, &a)?;
                let one = cat.unit();
                let spec = |blocks: &BTreeMap<String, Matrix>| MorphismSpec {
                    source: ObjectSpec::of(&a),
                    target: ObjectSpec::of(&a),
                    blocks: blocks.clone(),
                };
                let mult = spec(&e.mult).build_between(&aa, &a)?;
                let unit = spec(&e.unit).build_between(&one, &a)?;
                Ok(InternalAlgebra::new(a, mult, unit))
            }
        }
    }
}

/// One member of a generated corpus.
#[derive(Debug, Clone)]
pub struct CorpusAlgebra {
    pub gen: AlgebraGen,
    pub algebra: InternalAlgebra,
}

#[derive(Debug, Clone)]
pub struct CorpusCoalgebra {
    /// The coalgebra is the dual of the algebra this generator builds.
    pub dual_of: AlgebraGen,
    pub coalgebra: InternalCoalgebra,
}

fn small_gen(cat: &Category, rng: &mut SampleRng, depth: usize) -> AlgebraGen {
    let n = cat.groupoid().object_count();
    let choice = if depth == 0 { rng.gen_range(0..3) } else { rng.gen_range(0..4) };
    match choice {
        0 => AlgebraGen::UnitSummand { i: rng.gen_range(0..n) },
        1 => AlgebraGen::GroupoidAlgebra {
            objects: random_subset(rng, n),
        },
        2 => {
            let x = random_object(cat, rng, 1, 2);
            AlgebraGen::InternalEnd {
                x: x.mult_map().into_iter().map(|(g, m)| (g.to_string(), m)).collect(),
            }
        }
        _ => AlgebraGen::Sum {
            parts: vec![small_gen(cat, rng, 0), small_gen(cat, rng, 0)],
        },
    }
}

/// The fixed family `1`, every `1_i` and the full groupoid algebra, followed
/// by `extra` distinct seeded draws of groupoid algebras, internal
/// endomorphism algebras and two-term direct sums. Large groupoid algebras
/// are kept out of sums to bound the cost of triple tensor products.
pub fn algebra_corpus(cat: &Category, seed: u64, extra: usize) -> Result<Vec<CorpusAlgebra>> {
    let n = cat.groupoid().object_count();
    let mut gens = vec![AlgebraGen::Unit];
    gens.extend((0..n).map(|i| AlgebraGen::UnitSummand { i }));
    gens.push(AlgebraGen::GroupoidAlgebra {
        objects: (0..n).collect(),
    });
    let mut rng = crate::sampling::rng(seed);
    let mut attempts = 0;
    let target = gens.len() + extra;
    while gens.len() < target && attempts < 50 * (extra + 1) {
        attempts += 1;
        let g = small_gen(cat, &mut rng, 1);
        if gens.contains(&g) || g.build(cat)?.carrier.total_dim() > 8 {
            continue;
        }
        gens.push(g);
    }
    gens.into_iter()
        .map(|gen| {
            let algebra = gen.build(cat)?;
            Ok(CorpusAlgebra { gen, algebra })
        })
        .collect()
}

pub fn coalgebra_corpus(algebras: &[CorpusAlgebra]) -> Result<Vec<CorpusCoalgebra>> {
    algebras
        .iter()
        .map(|a| {
            Ok(CorpusCoalgebra {
                dual_of: a.gen.clone(),
                coalgebra: dualize_algebra(&a.algebra)?,
            })
        })
        .collect()
}
