//! The category `C_n` of strictly increasing sequences.
//!
//! Objects are `0, 1, ..., n`. A morphism `i → j` (only for `j ≤ i`) is a
//! strictly increasing tuple `(a_1, ..., a_j)` with entries in `{1..i}`,
//! written `(a_1,...,a_j)^i`. Composition selects entries:
//! `(b_1..b_k)^j ∘ (a_1..a_j)^i = (a_{b_1}, ..., a_{b_k})^i`.
//! Its Möbius function is `(-1)^(i-j)`.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::category::{FiniteCategory, Morphism};

/// Largest `n` accepted by [`build_cn`].
pub const MAX_CN: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("n = {0} is outside 0..={MAX_CN}")]
    OutOfRange(usize),
    #[error("cannot compose: first morphism ends at {first_target}, second starts at {second_source}")]
    Mismatch { first_target: usize, second_source: usize },
    #[error("entries {entries:?} are not a strictly increasing tuple in 1..={from}")]
    Invalid { from: usize, entries: Vec<usize> },
}

/// `(a_1, ..., a_j)^i : i → j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeqMorphism {
    source: usize,
    entries: Vec<usize>,
}

impl SeqMorphism {
    pub fn new(source: usize, entries: Vec<usize>) -> Result<Self, SeqError> {
        let ok = entries.windows(2).all(|w| w[0] < w[1]) && entries.iter().all(|&a| (1..=source).contains(&a));
        if !ok {
            return Err(SeqError::Invalid { from: source, entries });
        }
        Ok(Self { source, entries })
    }

    pub fn identity(i: usize) -> Self {
        Self { source: i, entries: (1..=i).collect() }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.target() == self.source
    }
}

impl fmt::Display for SeqMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.entries.iter().map(usize::to_string).collect();
        write!(f, "({})^{}", body.join(","), self.source)
    }
}

/// `later ∘ earlier`: `earlier` runs `i → j`, `later` runs `j → k`.
pub fn compose_seq(later: &SeqMorphism, earlier: &SeqMorphism) -> Result<SeqMorphism, SeqError> {
    if earlier.target() != later.source {
        return Err(SeqError::Mismatch { first_target: earlier.target(), second_source: later.source });
    }
    Ok(SeqMorphism { source: earlier.source, entries: later.entries.iter().map(|&b| earlier.entries[b - 1]).collect() })
}

/// `(-1)^(i-j)`.
pub fn mu_closed_form(m: &SeqMorphism) -> i64 {
    (-1i64).pow((m.source - m.target()) as u32)
}

/// `C_n` with the sequence behind each morphism index.
#[derive(Debug, Clone)]
pub struct SeqCategory {
    n: usize,
    category: FiniteCategory,
    morphisms: Vec<SeqMorphism>,
    index: HashMap<SeqMorphism, usize>,
}

impl SeqCategory {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    pub fn sequence(&self, x: usize) -> &SeqMorphism {
        &self.morphisms[x]
    }

    pub fn sequences(&self) -> &[SeqMorphism] {
        &self.morphisms
    }

    pub fn index_of(&self, m: &SeqMorphism) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// Builds `C_n`, morphisms ordered by source, then target, then tuple.
pub fn build_cn(n: usize) -> Result<SeqCategory, SeqError> {
    if n > MAX_CN {
        return Err(SeqError::OutOfRange(n));
    }
    let mut morphisms = Vec::new();
    for i in 0..=n {
        for j in 0..=i {
            for mask in 0u32..1 << i {
                if mask.count_ones() as usize == j {
                    let entries = (1..=i).filter(|a| mask >> (a - 1) & 1 == 1).collect();
                    morphisms.push(SeqMorphism { source: i, entries });
                }
            }
        }
    }
    // within a hom-set, order tuples lexicographically
    morphisms.sort_by(|a, b| (a.source, a.target(), &a.entries).cmp(&(b.source, b.target(), &b.entries)));
    let index: HashMap<SeqMorphism, usize> = morphisms.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    let objects = (0..=n).map(|i| i.to_string()).collect();
    let mors = morphisms
        .iter()
        .map(|m| Morphism { label: m.to_string(), dom: m.source, cod: m.target() })
        .collect();
    let identities = (0..=n).map(|i| index[&SeqMorphism::identity(i)]).collect();
    let category = FiniteCategory::new(objects, mors, identities, |later, earlier| {
        compose_seq(&morphisms[later], &morphisms[earlier]).ok().and_then(|c| index.get(&c).copied())
    })
    .expect("C_n is closed under entry selection");
    Ok(SeqCategory { n, category, morphisms, index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::IncidenceAlgebra;

    fn seq(i: usize, e: &[usize]) -> SeqMorphism {
        SeqMorphism::new(i, e.to_vec()).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
    }

    #[test]
    fn hom_set_sizes() {
        let c3 = build_cn(3).unwrap();
        let cat = c3.category();
        assert_eq!(cat.hom(3, 1).len(), 3);
        assert_eq!(cat.hom(2, 3).len(), 0);
        assert_eq!(cat.morphism_count(), 15);
        for n in 0..=6 {
            let c = build_cn(n).unwrap();
            assert_eq!(c.category().morphism_count(), (1 << (n + 1)) - 1);
            for i in 0..=n {
                for j in 0..=n {
                    let expected = if j <= i { binomial(i, j) } else { 0 };
                    assert_eq!(c.category().hom(i, j).len(), expected, "Hom({i},{j}) in C_{n}");
                }
            }
        }
        assert_eq!(build_cn(13).unwrap_err(), SeqError::OutOfRange(13));
    }

    #[test]
    fn composition_rule() {
        assert_eq!(compose_seq(&seq(2, &[2]), &seq(3, &[1, 3])).unwrap(), seq(3, &[3]));
        let a = seq(4, &[1, 3, 4]);
        assert_eq!(compose_seq(&SeqMorphism::identity(3), &a).unwrap(), a);
        assert_eq!(compose_seq(&a, &SeqMorphism::identity(4)).unwrap(), a);
        assert_eq!(compose_seq(&seq(3, &[]), &a).unwrap(), seq(4, &[]));
        assert_eq!(
            compose_seq(&seq(2, &[1]), &a),
            Err(SeqError::Mismatch { first_target: 3, second_source: 2 })
        );
        assert!(SeqMorphism::new(3, vec![2, 2]).is_err());
        assert!(SeqMorphism::new(3, vec![4]).is_err());
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(mu_closed_form(&SeqMorphism::identity(3)), 1);
        assert_eq!(mu_closed_form(&seq(3, &[2])), 1);
        assert_eq!(mu_closed_form(&seq(3, &[])), -1);
    }

    #[test]
    fn axioms_and_labels() {
        let c = build_cn(3).unwrap();
        c.category().check_axioms().unwrap();
        let x = c.index_of(&seq(3, &[1, 3])).unwrap();
        assert_eq!(c.category().morphism(x).label, "(1,3)^3");
        assert_eq!(c.category().morphism(c.category().identity(0)).label, "()^0");
    }

    #[test]
    fn convolution_mobius_matches_closed_form() {
        for n in 0..=5 {
            let c = build_cn(n).unwrap();
            let alg = IncidenceAlgebra::new(c.category());
            let mu = alg.mobius().unwrap().to_integers().unwrap();
            for (x, m) in c.sequences().iter().enumerate() {
                assert_eq!(mu[x], mu_closed_form(m), "{m}");
            }
        }
    }
}
