//! Finite groupoids, the grading data behind every category instance.
//!
//! Composition is written in diagrammatic order: `compose(g1, g2)` is "g1
//! then g2" and is defined exactly when `tgt(g1) == src(g2)`. With this
//! convention the grades with source `i` and target `j` form the component
//! `1_i ⊗ C ⊗ 1_j`.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("table is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("entry {value} out of range at ({a}, {b})")]
    OutOfRange { a: usize, b: usize, value: usize },
    #[error("index 0 is not a two-sided identity (fails at element {0})")]
    NoIdentity(usize),
    #[error("not associative at triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("a groupoid needs at least one object")]
    Empty,
    #[error("identity of object {object} is invalid: {reason}")]
    BadIdentity { object: usize, reason: &'static str },
    #[error("compose({0}, {1}) defined iff tgt = src is violated")]
    BadDomain(usize, usize),
    #[error("compose({0}, {1}) has wrong endpoints")]
    BadEndpoints(usize, usize),
    #[error("identity law fails for morphism {0}")]
    IdentityLaw(usize),
    #[error("inverse law fails for morphism {0}")]
    InverseLaw(usize),
    #[error("malformed explicit groupoid: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    object_count: usize,
    arrows: Vec<Arrow>,
    identity: Vec<usize>,
    compose: Vec<Vec<Option<usize>>>,
    inverse: Vec<usize>,
    labels: Vec<String>,
    /// For each morphism `k`, the composable pairs `(g1, g2)` with
    /// `g1 * g2 = k`, sorted lexicographically.
    factorizations: Vec<Vec<(usize, usize)>>,
}

impl Groupoid {
    /// Builds and validates a groupoid from explicit tables.
    pub fn from_parts(
        object_count: usize,
        arrows: Vec<Arrow>,
        identity: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
        inverse: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupoidError> {
        let n = arrows.len();
        if object_count == 0 {
            return Err(GroupoidError::Empty);
        }
        if identity.len() != object_count
            || inverse.len() != n
            || compose.len() != n
            || compose.iter().any(|r| r.len() != n)
        {
            return Err(GroupoidError::Malformed("table sizes disagree".into()));
        }
        if arrows.iter().any(|a| a.src >= object_count || a.tgt >= object_count)
            || identity.iter().any(|&g| g >= n)
            || inverse.iter().any(|&g| g >= n)
            || compose.iter().flatten().flatten().any(|&g| g >= n)
        {
            return Err(GroupoidError::Malformed("index out of range".into()));
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|g| g.to_string()).collect());
        if labels.len() != n {
            return Err(GroupoidError::Malformed("label count".into()));
        }
        let mut factorizations = vec![Vec::new(); n];
        for (g1, row) in compose.iter().enumerate() {
            for (g2, k) in row.iter().enumerate() {
                if let Some(k) = k {
                    factorizations[*k].push((g1, g2));
                }
            }
        }
        let g = Groupoid {
            object_count,
            arrows,
            identity,
            compose,
            inverse,
            labels,
            factorizations,
        };
        g.validate()?;
        Ok(g)
    }

    /// One-object groupoid from a group multiplication table with identity at
    /// index 0.
    pub fn from_group_table(table: &[Vec<usize>]) -> Result<Self, GroupoidError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupoidError::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(GroupoidError::NotSquare {
                    row,
                    found: r.len(),
                    expected: n,
                });
            }
            for (b, &v) in r.iter().enumerate() {
                if v >= n {
                    return Err(GroupoidError::OutOfRange { a: row, b, value: v });
                }
            }
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(GroupoidError::NoIdentity(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupoidError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == 0 && table[b][a] == 0)
                .ok_or(GroupoidError::NoInverse(a))?;
            inverse.push(inv);
        }
        let compose = table
            .iter()
            .map(|r| r.iter().map(|&v| Some(v)).collect())
            .collect();
        let labels = (0..n)
            .map(|g| if g == 0 { "e".to_string() } else { format!("g{g}") })
            .collect();
        Self::from_parts(
            1,
            vec![Arrow { src: 0, tgt: 0 }; n],
            vec![0],
            compose,
            inverse,
            Some(labels),
        )
    }

    pub fn trivial() -> Self {
        Self::from_group_table(&[vec![0]]).expect("trivial group")
    }

    pub fn cyclic(n: usize) -> Result<Self, GroupoidError> {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_group_table(&table)
    }

    /// Symmetric group on three letters, elements ordered
    /// e, (12), (13), (23), (123), (132).
    pub fn symmetric3() -> Self {
        // permutations as images of (0,1,2); product a*b = "a then b"
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table: Vec<Vec<usize>> = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| idx([perms[b][perms[a][0]], perms[b][perms[a][1]], perms[b][perms[a][2]]]))
                    .collect()
            })
            .collect();
        Self::from_group_table(&table).expect("S3 table is a group")
    }

    /// Pair groupoid on `n` objects: one morphism `g_ij : i -> j` per ordered
    /// pair, enumerated row-major (`g_ij` has index `i*n + j`).
    pub fn pair(n: usize) -> Result<Self, GroupoidError> {
        if n == 0 {
            return Err(GroupoidError::Empty);
        }
        let idx = |i: usize, j: usize| i * n + j;
        let mut arrows = Vec::with_capacity(n * n);
        let mut labels = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                arrows.push(Arrow { src: i, tgt: j });
                labels.push(format!("g{i}{j}"));
            }
        }
        let mut compose = vec![vec![None; n * n]; n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    compose[idx(i, j)][idx(j, k)] = Some(idx(i, k));
                }
            }
        }
        let identity = (0..n).map(|i| idx(i, i)).collect();
        let inverse = arrows.iter().map(|a| idx(a.tgt, a.src)).collect();
        Self::from_parts(n, arrows, identity, compose, inverse, Some(labels))
    }

    /// Disjoint union: objects and morphisms of `b` are shifted past those of
    /// `a`; nothing composes across the two blocks.
    pub fn disjoint_union(a: &Groupoid, b: &Groupoid) -> Groupoid {
        let (na, ma) = (a.object_count, a.arrows.len());
        let m = ma + b.arrows.len();
        let mut arrows = a.arrows.clone();
        arrows.extend(b.arrows.iter().map(|x| Arrow {
            src: x.src + na,
            tgt: x.tgt + na,
        }));
        let mut identity = a.identity.clone();
        identity.extend(b.identity.iter().map(|g| g + ma));
        let mut inverse = a.inverse.clone();
        inverse.extend(b.inverse.iter().map(|g| g + ma));
        let mut compose = vec![vec![None; m]; m];
        for (g1, row) in a.compose.iter().enumerate() {
            for (g2, k) in row.iter().enumerate() {
                compose[g1][g2] = *k;
            }
        }
        for (g1, row) in b.compose.iter().enumerate() {
            for (g2, k) in row.iter().enumerate() {
                compose[g1 + ma][g2 + ma] = k.map(|k| k + ma);
            }
        }
        let mut labels: Vec<String> = a.labels.iter().map(|l| format!("a.{l}")).collect();
        labels.extend(b.labels.iter().map(|l| format!("b.{l}")));
        Self::from_parts(na + b.object_count, arrows, identity, compose, inverse, Some(labels))
            .expect("disjoint union of groupoids is a groupoid")
    }

    /// Exhaustive check of identity, associativity, inverse and domain laws.
    pub fn validate(&self) -> Result<(), GroupoidError> {
        let n = self.arrows.len();
        for (o, &id) in self.identity.iter().enumerate() {
            let a = self.arrows[id];
            if a.src != o || a.tgt != o {
                return Err(GroupoidError::BadIdentity {
                    object: o,
                    reason: "endpoints differ from the object",
                });
            }
        }
        for g1 in 0..n {
            for g2 in 0..n {
                let defined = self.compose[g1][g2];
                let composable = self.arrows[g1].tgt == self.arrows[g2].src;
                if defined.is_some() != composable {
                    return Err(GroupoidError::BadDomain(g1, g2));
                }
                if let Some(k) = defined {
                    if self.arrows[k].src != self.arrows[g1].src || self.arrows[k].tgt != self.arrows[g2].tgt {
                        return Err(GroupoidError::BadEndpoints(g1, g2));
                    }
                }
            }
        }
        for g in 0..n {
            let Arrow { src, tgt } = self.arrows[g];
            if self.compose[self.identity[src]][g] != Some(g) || self.compose[g][self.identity[tgt]] != Some(g) {
                return Err(GroupoidError::IdentityLaw(g));
            }
            let inv = self.inverse[g];
            if self.compose[g][inv] != Some(self.identity[src]) || self.compose[inv][g] != Some(self.identity[tgt]) {
                return Err(GroupoidError::InverseLaw(g));
            }
        }
        for g1 in 0..n {
            for g2 in 0..n {
                let Some(h) = self.compose[g1][g2] else { continue };
                for g3 in 0..n {
                    let Some(k) = self.compose[g2][g3] else { continue };
                    if self.compose[h][g3] != self.compose[g1][k] {
                        return Err(GroupoidError::NotAssociative(g1, g2, g3));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.object_count
    }

    pub fn morphism_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, g: usize) -> Arrow {
        self.arrows[g]
    }

    pub fn src(&self, g: usize) -> usize {
        self.arrows[g].src
    }

    pub fn tgt(&self, g: usize) -> usize {
        self.arrows[g].tgt
    }

    pub fn identity_of(&self, object: usize) -> usize {
        self.identity[object]
    }

    pub fn is_identity(&self, g: usize) -> bool {
        self.identity[self.arrows[g].src] == g
    }

    pub fn compose(&self, g1: usize, g2: usize) -> Option<usize> {
        self.compose[g1][g2]
    }

    pub fn inverse_of(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn factorizations(&self, k: usize) -> &[(usize, usize)] {
        &self.factorizations[k]
    }

    /// Grades with source `i` and target `j`.
    pub fn hom(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&g| self.arrows[g].src == i && self.arrows[g].tgt == j)
    }

    /// Canonical explicit description, suitable for hashing and round trips.
    pub fn to_explicit(&self) -> GroupoidSpec {
        GroupoidSpec::Explicit {
            objects: self.object_count,
            morphisms: self.arrows.clone(),
            identity: self.identity.clone(),
            compose: self.compose.clone(),
            inverse: self.inverse.clone(),
        }
    }

    /// SHA-256 of the canonical explicit JSON, hex encoded.
    pub fn fingerprint(&self) -> String {
        let json = serde_json::to_vec(&self.to_explicit()).expect("explicit spec serializes");
        hex::encode(Sha256::digest(&json))
    }
}

/// JSON description of a groupoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupoidSpec {
    Group {
        table: Vec<Vec<usize>>,
    },
    Pair {
        objects: usize,
    },
    Union {
        parts: Vec<GroupoidSpec>,
    },
    Explicit {
        objects: usize,
        morphisms: Vec<Arrow>,
        identity: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
        inverse: Vec<usize>,
    },
}

impl GroupoidSpec {
    pub fn build(&self) -> Result<Groupoid, GroupoidError> {
        match self {
            GroupoidSpec::Group { table } => Groupoid::from_group_table(table),
            GroupoidSpec::Pair { objects } => Groupoid::pair(*objects),
            GroupoidSpec::Union { parts } => {
                let mut built = parts.iter().map(GroupoidSpec::build);
                let first = built.next().ok_or(GroupoidError::Empty)??;
                built.try_fold(first, |acc, p| Ok(Groupoid::disjoint_union(&acc, &p?)))
            }
            GroupoidSpec::Explicit {
                objects,
                morphisms,
                identity,
                compose,
                inverse,
            } => Groupoid::from_parts(
                *objects,
                morphisms.clone(),
                identity.clone(),
                compose.clone(),
                inverse.clone(),
                None,
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> Groupoid {
        Groupoid::from_group_table(&[vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn group_constructors() {
        let g = z2();
        assert_eq!((g.object_count(), g.morphism_count()), (1, 2));
        let t = Groupoid::trivial();
        assert_eq!((t.object_count(), t.morphism_count()), (1, 1));
    }

    #[test]
    fn s3_inverses_match_brute_force() {
        let s3 = Groupoid::symmetric3();
        assert_eq!((s3.object_count(), s3.morphism_count()), (1, 6));
        for a in 0..6 {
            let brute: Vec<usize> = (0..6).filter(|&b| s3.compose(a, b) == Some(0)).collect();
            assert_eq!(brute, vec![s3.inverse_of(a)]);
        }
        // S3 is non-abelian
        assert!((0..6).any(|a| (0..6).any(|b| s3.compose(a, b) != s3.compose(b, a))));
        // transpositions are involutions, 3-cycles are inverse to each other
        assert_eq!(s3.inverse_of(1), 1);
        assert_eq!(s3.inverse_of(4), 5);
    }

    #[test]
    fn group_table_errors() {
        assert!(matches!(
            Groupoid::from_group_table(&[vec![1, 0], vec![0, 1]]),
            Err(GroupoidError::NoIdentity(_))
        ));
        // identity at 0, but 1*1 = 1 so 1 has no inverse
        assert!(matches!(
            Groupoid::from_group_table(&[vec![0, 1], vec![1, 1]]),
            Err(GroupoidError::NoInverse(1))
        ));
        // a quasigroup-like table that fails associativity
        let bad = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 0]];
        assert!(matches!(
            Groupoid::from_group_table(&bad),
            Err(GroupoidError::NotAssociative(..))
        ));
        assert!(matches!(
            Groupoid::from_group_table(&[vec![0, 1], vec![1]]),
            Err(GroupoidError::NotSquare { .. })
        ));
    }

    #[test]
    fn pair_groupoids() {
        let p1 = Groupoid::pair(1).unwrap();
        assert_eq!((p1.object_count(), p1.morphism_count()), (1, 1));
        let p2 = Groupoid::pair(2).unwrap();
        assert_eq!(p2.morphism_count(), 4);
        // g01 * g10 = g00
        assert_eq!(p2.compose(1, 2), Some(0));
        assert_eq!(p2.compose(1, 1), None);
        let p3 = Groupoid::pair(3).unwrap();
        assert_eq!(p3.morphism_count(), 9);
        p3.validate().unwrap();
        assert_eq!(Groupoid::pair(0), Err(GroupoidError::Empty));
    }

    #[test]
    fn unions() {
        let u = Groupoid::disjoint_union(&z2(), &z2());
        assert_eq!((u.object_count(), u.morphism_count()), (2, 4));
        assert_eq!(u.compose(0, 2), None);
        assert_eq!(u.compose(3, 3), Some(2));

        let tt = Groupoid::disjoint_union(&Groupoid::trivial(), &Groupoid::trivial());
        assert_eq!((tt.object_count(), tt.morphism_count()), (2, 2));
        assert!((0..2).all(|g| tt.is_identity(g)));

        let zp = Groupoid::disjoint_union(&z2(), &Groupoid::pair(2).unwrap());
        assert_eq!((zp.object_count(), zp.morphism_count()), (3, 6));
        zp.validate().unwrap();
    }

    #[test]
    fn inverse_is_involution() {
        for g in [Groupoid::symmetric3(), Groupoid::pair(3).unwrap()] {
            for m in 0..g.morphism_count() {
                assert_eq!(g.inverse_of(g.inverse_of(m)), m);
                assert_eq!(g.src(g.inverse_of(m)), g.tgt(m));
            }
        }
    }

    #[test]
    fn validate_catches_broken_tables() {
        let p = Groupoid::pair(2).unwrap();
        let GroupoidSpec::Explicit {
            objects,
            morphisms,
            identity,
            mut compose,
            inverse,
        } = p.to_explicit()
        else {
            unreachable!()
        };
        compose[1][2] = Some(3);
        let err = Groupoid::from_parts(objects, morphisms, identity, compose, inverse, None);
        assert!(matches!(err, Err(GroupoidError::BadEndpoints(1, 2))));
    }

    #[test]
    fn json_specs() {
        let spec: GroupoidSpec = serde_json::from_str(
            r#"{"kind":"union","parts":[{"kind":"group","table":[[0,1],[1,0]]},{"kind":"pair","objects":2}]}"#,
        )
        .unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.morphism_count(), 6);
        let round = g.to_explicit().build().unwrap();
        assert_eq!(round.fingerprint(), g.fingerprint());
        assert_ne!(z2().fingerprint(), Groupoid::trivial().fingerprint());
    }

    #[test]
    fn factorizations_are_sorted() {
        let s3 = Groupoid::symmetric3();
        for k in 0..6 {
            let f = s3.factorizations(k);
            assert_eq!(f.len(), 6);
            assert!(f.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
