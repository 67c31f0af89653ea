use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;

/// Handle to the groupoid that grades a category instance. Cheap to clone.
#[derive(Clone)]
pub struct Category(Arc<Groupoid>);

impl PartialEq for Category {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Category {}

impl fmt::Debug for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Category({} objects, {} grades)",
            self.0.object_count(),
            self.0.morphism_count()
        )
    }
}

impl From<Groupoid> for Category {
    fn from(g: Groupoid) -> Self {
        Category(Arc::new(g))
    }
}

/// One letter of a basis word.
///
/// Objects built from multiplicities label the `s`-th basis vector of grade
/// `g` by the one-letter word `[(g, s)]`. Tensor products concatenate words,
/// duals reverse them and flip `dual`, and the unit and its summands use the
/// empty word. Every basis is kept sorted by word, which is what makes the
/// tensor product strictly associative and strictly unital.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub grade: u32,
    pub slot: u32,
    pub dual: bool,
}

pub type Word = Vec<Atom>;

pub(crate) fn dual_word(w: &[Atom]) -> Word {
    w.iter()
        .rev()
        .map(|a| Atom {
            dual: !a.dual,
            ..*a
        })
        .collect()
}

/// An object of `Vec_G`: a finite-dimensional space for each grade.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedObject {
    pub(crate) cat: Category,
    pub(crate) basis: Vec<Vec<Word>>,
}

impl fmt::Debug for GradedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.cat.groupoid();
        let parts: Vec<String> = self
            .mults()
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(k, m)| format!("{}:{}", g.label(k), m))
            .collect();
        let tag = if self.is_unit_like() && !self.is_zero() { "unit" } else { "obj" };
        write!(f, "{tag}{{{}}}", parts.join(","))
    }
}

impl Category {
    pub fn new(g: Groupoid) -> Self {
        g.into()
    }

    pub fn groupoid(&self) -> &Groupoid {
        &self.0
    }

    pub fn grades(&self) -> usize {
        self.0.morphism_count()
    }

    pub fn zero(&self) -> GradedObject {
        GradedObject {
            cat: self.clone(),
            basis: vec![Vec::new(); self.grades()],
        }
    }

    /// Object with the given multiplicity at each grade and one-letter words.
    pub fn atomic(&self, mult: &[usize]) -> Result<GradedObject> {
        if mult.len() != self.grades() {
            return Err(Error::ObjectMismatch {
                op: "atomic",
                detail: format!("expected {} multiplicities, got {}", self.grades(), mult.len()),
            });
        }
        let basis = mult
            .iter()
            .enumerate()
            .map(|(g, &m)| {
                (0..m)
                    .map(|s| {
                        vec![Atom {
                            grade: g as u32,
                            slot: s as u32,
                            dual: false,
                        }]
                    })
                    .collect()
            })
            .collect();
        Ok(GradedObject {
            cat: self.clone(),
            basis,
        })
    }

    pub fn from_mult_map(&self, mult: &BTreeMap<usize, usize>) -> Result<GradedObject> {
        let mut dense = vec![0; self.grades()];
        for (&g, &m) in mult {
            if g >= dense.len() {
                return Err(Error::OutOfRange {
                    what: "grade",
                    index: g,
                    bound: dense.len(),
                });
            }
            dense[g] = m;
        }
        self.atomic(&dense)
    }

    /// The simple object concentrated in grade `g`.
    pub fn simple(&self, g: usize) -> GradedObject {
        let mut m = vec![0; self.grades()];
        m[g] = 1;
        self.atomic(&m).expect("dimension matches")
    }

    pub fn simples(&self) -> Vec<GradedObject> {
        (0..self.grades()).map(|g| self.simple(g)).collect()
    }

    pub fn unit(&self) -> GradedObject {
        let all: Vec<usize> = (0..self.0.object_count()).collect();
        self.unit_summand(&all).expect("all objects are in range")
    }

    /// `1_J`, the sum of the unit summands `1_i` for `i` in `J`.
    pub fn unit_summand(&self, objects: &[usize]) -> Result<GradedObject> {
        let mut basis = vec![Vec::new(); self.grades()];
        for &i in objects {
            if i >= self.0.object_count() {
                return Err(Error::OutOfRange {
                    what: "object",
                    index: i,
                    bound: self.0.object_count(),
                });
            }
            basis[self.0.identity_of(i)] = vec![Vec::new()];
        }
        Ok(GradedObject {
            cat: self.clone(),
            basis,
        })
    }

    pub fn ensure_same(&self, other: &Category) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::CategoryMismatch)
        }
    }
}

impl GradedObject {
    pub fn category(&self) -> &Category {
        &self.cat
    }

    pub fn mult(&self, g: usize) -> usize {
        self.basis[g].len()
    }

    pub fn mults(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn mult_map(&self) -> BTreeMap<usize, usize> {
        self.basis
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_empty())
            .map(|(g, b)| (g, b.len()))
            .collect()
    }

    pub fn basis(&self, g: usize) -> &[Word] {
        &self.basis[g]
    }

    pub fn total_dim(&self) -> usize {
        self.basis.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.iter().all(Vec::is_empty)
    }

    /// Same multiplicities, i.e. isomorphic, though possibly labelled
    /// differently.
    pub fn same_class(&self, other: &GradedObject) -> bool {
        self.cat == other.cat && self.mults() == other.mults()
    }

    /// All basis words are empty: the object is `1_J` for some `J`.
    pub fn is_unit_like(&self) -> bool {
        self.basis.iter().all(|b| b.iter().all(Vec::is_empty))
    }

    /// Objects `i` such that this object is `1_J` with `i` in `J`; `None` if
    /// the object is not of that form.
    pub fn unit_support(&self) -> Option<Vec<usize>> {
        let g = self.cat.groupoid();
        let mut out = Vec::new();
        for (k, b) in self.basis.iter().enumerate() {
            match b.len() {
                0 => {}
                1 if b[0].is_empty() && g.is_identity(k) => out.push(g.src(k)),
                _ => return None,
            }
        }
        Some(out)
    }

    /// `X_ij = 1_i ⊗ X ⊗ 1_j`: keeps the grades from `i` to `j`.
    pub fn component(&self, i: usize, j: usize) -> GradedObject {
        let g = self.cat.groupoid();
        self.filter_grades(|k| g.src(k) == i && g.tgt(k) == j)
    }

    /// `X_J = 1_J ⊗ X ⊗ 1_J`: keeps the grades with both endpoints in `J`.
    pub fn restrict(&self, objects: &[usize]) -> GradedObject {
        let g = self.cat.groupoid();
        self.filter_grades(|k| objects.contains(&g.src(k)) && objects.contains(&g.tgt(k)))
    }

    /// Whether every grade in the support has both endpoints in `J`.
    pub fn lies_in(&self, objects: &[usize]) -> bool {
        let g = self.cat.groupoid();
        self.basis
            .iter()
            .enumerate()
            .all(|(k, b)| b.is_empty() || (objects.contains(&g.src(k)) && objects.contains(&g.tgt(k))))
    }

    pub(crate) fn filter_grades(&self, keep: impl Fn(usize) -> bool) -> GradedObject {
        GradedObject {
            cat: self.cat.clone(),
            basis: self
                .basis
                .iter()
                .enumerate()
                .map(|(k, b)| if keep(k) { b.clone() } else { Vec::new() })
                .collect(),
        }
    }

    /// Simple constituents as `(grade, multiplicity)` over the support.
    pub fn decompose_simples(&self) -> Vec<(usize, usize)> {
        self.mult_map().into_iter().collect()
    }

    /// Same basis sizes with fresh one-letter words.
    pub fn relabelled(&self) -> GradedObject {
        self.cat.atomic(&self.mults()).expect("same dimension")
    }
}
