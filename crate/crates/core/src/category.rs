//! Finite categories stored as explicit composition tables, and the standard
//! division category `C(S)` of an inverse monoid together with its full
//! subcategories `C_F(S)` on idempotent transversals.
//!
//! A morphism of `C(S)` is a pair `(s, e)` with `s⁻¹s ≤ e`; it runs from `e`
//! to `ss⁻¹` and `(t, f) · (s, e) = (ts, e)`. The same `s` under different
//! `e` gives different morphisms.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::monoid::{FiniteInverseMonoid, MonoidError, Transversal};

/// Default morphism bound for [`FiniteCategory::has_pushouts`].
pub const DEFAULT_PUSHOUT_GUARD: usize = 40;
/// Default morphism bound for [`FiniteCategory::is_isomorphic`].
pub const DEFAULT_ISO_GUARD: usize = 30;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("identity for object {0} is missing or has the wrong endpoints")]
    BadIdentity(usize),
    #[error("morphism {0} has an endpoint outside the object set")]
    BadEndpoint(usize),
    #[error("composite of {later} after {earlier} is undefined")]
    MissingComposite { later: usize, earlier: usize },
    #[error("composite of {later} after {earlier} has the wrong endpoints")]
    BadComposite { later: usize, earlier: usize },
    #[error("identity law fails at morphism {0}")]
    IdentityLaw(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),
    #[error("{check} refused: {morphisms} morphisms exceed the guard of {limit}")]
    SizeGuard { check: &'static str, morphisms: usize, limit: usize },
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

/// Identifies the category an incidence function was built for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CategoryId(u64);

static NEXT_CATEGORY_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub label: String,
    pub dom: usize,
    pub cod: usize,
}

/// A category with finitely many objects and morphisms.
///
/// `compose(later, earlier)` is defined exactly when
/// `cod(earlier) == dom(later)`.
#[derive(Debug, Clone)]
pub struct FiniteCategory {
    id: CategoryId,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    comp: Vec<u32>,
    hom: Vec<Vec<usize>>,
}

impl FiniteCategory {
    /// Fills the composition table by calling `compose(later, earlier)` on
    /// every composable pair. Endpoints of every composite are checked; the
    /// identity and associativity laws are left to [`check_axioms`].
    ///
    /// [`check_axioms`]: Self::check_axioms
    pub fn new<F>(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        mut compose: F,
    ) -> Result<Self, CategoryError>
    where
        F: FnMut(usize, usize) -> Option<usize>,
    {
        let (k, m) = (objects.len(), morphisms.len());
        for (x, mor) in morphisms.iter().enumerate() {
            if mor.dom >= k || mor.cod >= k {
                return Err(CategoryError::BadEndpoint(x));
            }
        }
        if identities.len() != k {
            return Err(CategoryError::BadIdentity(identities.len().min(k)));
        }
        for (o, &id) in identities.iter().enumerate() {
            if id >= m || morphisms[id].dom != o || morphisms[id].cod != o {
                return Err(CategoryError::BadIdentity(o));
            }
        }
        let mut hom = vec![Vec::new(); k * k];
        for (x, mor) in morphisms.iter().enumerate() {
            hom[mor.dom * k + mor.cod].push(x);
        }
        let mut comp = vec![NONE; m * m];
        for earlier in 0..m {
            let mid = morphisms[earlier].cod;
            for c in 0..k {
                for &later in &hom[mid * k + c] {
                    let r = compose(later, earlier).ok_or(CategoryError::MissingComposite { later, earlier })?;
                    if r >= m || morphisms[r].dom != morphisms[earlier].dom || morphisms[r].cod != c {
                        return Err(CategoryError::BadComposite { later, earlier });
                    }
                    comp[later * m + earlier] = r as u32;
                }
            }
        }
        let id = CategoryId(NEXT_CATEGORY_ID.fetch_add(1, Ordering::Relaxed));
        Ok(Self { id, objects, morphisms, identities, comp, hom })
    }

    /// The category of a finite poset: one morphism `x → y` per `x ≤ y`.
    pub fn from_poset<F>(labels: Vec<String>, leq: F) -> Result<Self, CategoryError>
    where
        F: Fn(usize, usize) -> bool,
    {
        let k = labels.len();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        for x in 0..k {
            for y in 0..k {
                if leq(x, y) {
                    index.insert((x, y), morphisms.len());
                    morphisms.push(Morphism { label: format!("{}<={}", labels[x], labels[y]), dom: x, cod: y });
                }
            }
        }
        let identities = (0..k).map(|x| index.get(&(x, x)).copied().unwrap_or(usize::MAX)).collect();
        let ends: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.dom, m.cod)).collect();
        Self::new(labels, morphisms, identities, |later, earlier| index.get(&(ends[earlier].0, ends[later].1)).copied())
    }

    pub fn id(&self) -> CategoryId {
        self.id
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism(&self, x: usize) -> &Morphism {
        &self.morphisms[x]
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identities[object]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, x: usize) -> bool {
        self.identities[self.morphisms[x].dom] == x
    }

    /// `later ∘ earlier`, if composable.
    #[inline]
    pub fn compose(&self, later: usize, earlier: usize) -> Option<usize> {
        match self.comp[later * self.morphisms.len() + earlier] {
            NONE => None,
            r => Some(r as usize),
        }
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.hom[a * self.objects.len() + b]
    }

    /// Every ordered pair `(later, earlier)` with `later ∘ earlier = x`.
    pub fn factorizations(&self) -> Vec<Vec<(usize, usize)>> {
        let m = self.morphisms.len();
        let mut out = vec![Vec::new(); m];
        for later in 0..m {
            for earlier in 0..m {
                if let Some(r) = self.compose(later, earlier) {
                    out[r].push((later, earlier));
                }
            }
        }
        out
    }

    /// Identity laws and associativity, exhaustively.
    pub fn check_axioms(&self) -> Result<(), CategoryError> {
        for (x, mor) in self.morphisms.iter().enumerate() {
            if self.compose(x, self.identities[mor.dom]) != Some(x)
                || self.compose(self.identities[mor.cod], x) != Some(x)
            {
                return Err(CategoryError::IdentityLaw(x));
            }
        }
        let m = self.morphisms.len();
        for f in 0..m {
            for g in 0..m {
                let Some(gf) = self.compose(g, f) else { continue };
                for h in 0..m {
                    let Some(hg) = self.compose(h, g) else { continue };
                    if self.compose(h, gf) != self.compose(hg, f) {
                        return Err(CategoryError::Associativity(f, g, h));
                    }
                }
            }
        }
        Ok(())
    }

    /// `g ∘ x = h ∘ x` implies `g = h`.
    pub fn is_epimorphism(&self, x: usize) -> bool {
        let b = self.morphisms[x].cod;
        (0..self.object_count()).all(|c| {
            let hs = self.hom(b, c);
            let mut seen = HashMap::new();
            hs.iter().all(|&g| seen.insert(self.compose(g, x), g).is_none())
        })
    }

    /// `x ∘ g = x ∘ h` implies `g = h`.
    pub fn is_monomorphism(&self, x: usize) -> bool {
        let a = self.morphisms[x].dom;
        (0..self.object_count()).all(|c| {
            let hs = self.hom(c, a);
            let mut seen = HashMap::new();
            hs.iter().all(|&g| seen.insert(self.compose(x, g), g).is_none())
        })
    }

    /// Objects with at least one morphism to every object.
    pub fn quasi_initial_objects(&self) -> Vec<usize> {
        let k = self.object_count();
        (0..k).filter(|&a| (0..k).all(|b| !self.hom(a, b).is_empty())).collect()
    }

    /// Non-identity morphisms that are not a composite of two non-identities.
    pub fn indecomposables(&self) -> Vec<usize> {
        let facts = self.factorizations();
        (0..self.morphism_count())
            .filter(|&x| !self.is_identity(x))
            .filter(|&x| facts[x].iter().all(|&(l, e)| self.is_identity(l) || self.is_identity(e)))
            .collect()
    }

    /// Whether every span has a pushout. Refuses categories larger than
    /// `guard` morphisms.
    pub fn has_pushouts(&self, guard: usize) -> Result<bool, CategoryError> {
        Ok(self.span_without_pushout(guard)?.is_none())
    }

    /// The first span `(f, g)` (common domain) with no pushout, if any.
    pub fn span_without_pushout(&self, guard: usize) -> Result<Option<(usize, usize)>, CategoryError> {
        let m = self.morphism_count();
        if m > guard {
            return Err(CategoryError::SizeGuard { check: "pushout search", morphisms: m, limit: guard });
        }
        let k = self.object_count();
        for f in 0..m {
            for g in 0..m {
                if self.morphisms[f].dom != self.morphisms[g].dom {
                    continue;
                }
                let (b, c) = (self.morphisms[f].cod, self.morphisms[g].cod);
                let mut cocones = Vec::new();
                for d in 0..k {
                    for &p in self.hom(b, d) {
                        for &q in self.hom(c, d) {
                            if self.compose(p, f) == self.compose(q, g) {
                                cocones.push((p, q));
                            }
                        }
                    }
                }
                let universal = |&(p, q): &(usize, usize)| {
                    let d = self.morphisms[p].cod;
                    cocones.iter().all(|&(p2, q2)| {
                        let target = self.morphisms[p2].cod;
                        self.hom(d, target)
                            .iter()
                            .filter(|&&u| self.compose(u, p) == Some(p2) && self.compose(u, q) == Some(q2))
                            .count()
                            == 1
                    })
                };
                if !cocones.iter().any(universal) {
                    return Ok(Some((f, g)));
                }
            }
        }
        Ok(None)
    }

    /// Brute-force isomorphism test. Refuses if either side has more than
    /// `guard` morphisms.
    pub fn is_isomorphic(&self, other: &FiniteCategory, guard: usize) -> Result<bool, CategoryError> {
        Ok(self.find_isomorphism(other, guard)?.is_some())
    }

    /// Searches object bijections that preserve hom-set sizes, then morphism
    /// bijections within hom-sets, propagating forced images of composites.
    pub fn find_isomorphism(&self, other: &FiniteCategory, guard: usize) -> Result<Option<Functor>, CategoryError> {
        let biggest = self.morphism_count().max(other.morphism_count());
        if biggest > guard {
            return Err(CategoryError::SizeGuard { check: "isomorphism search", morphisms: biggest, limit: guard });
        }
        if self.object_count() != other.object_count() || self.morphism_count() != other.morphism_count() {
            return Ok(None);
        }
        let mut search = IsoSearch { a: self, b: other, objects: vec![None; self.object_count()], found: None };
        search.assign_object(0);
        Ok(search.found)
    }
}

/// An isomorphism found by [`FiniteCategory::find_isomorphism`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

struct IsoSearch<'a> {
    a: &'a FiniteCategory,
    b: &'a FiniteCategory,
    objects: Vec<Option<usize>>,
    found: Option<Functor>,
}

#[derive(Clone)]
struct MorphismMap {
    forward: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn assign_object(&mut self, o: usize) {
        if self.found.is_some() {
            return;
        }
        let k = self.a.object_count();
        if o == k {
            let objects: Vec<usize> = self.objects.iter().map(|x| x.expect("all assigned")).collect();
            let mut map = MorphismMap { forward: vec![None; self.a.morphism_count()], used: vec![false; self.b.morphism_count()] };
            let ids: Vec<(usize, usize)> =
                (0..k).map(|x| (self.a.identity(x), self.b.identity(objects[x]))).collect();
            if self.propagate(&objects, &mut map, ids) {
                if let Some(morphisms) = self.assign_morphism(&objects, map) {
                    self.found = Some(Functor { objects, morphisms });
                }
            }
            return;
        }
        for cand in 0..k {
            if self.objects.contains(&Some(cand)) {
                continue;
            }
            let fits = (0..o).chain([o]).all(|p| {
                let q = if p == o { cand } else { self.objects[p].expect("assigned") };
                self.a.hom(p, o).len() == self.b.hom(q, cand).len() && self.a.hom(o, p).len() == self.b.hom(cand, q).len()
            });
            if fits {
                self.objects[o] = Some(cand);
                self.assign_object(o + 1);
                self.objects[o] = None;
            }
        }
    }

    fn assign_morphism(&self, objects: &[usize], map: MorphismMap) -> Option<Vec<usize>> {
        let Some(x) = map.forward.iter().position(Option::is_none) else {
            return Some(map.forward.into_iter().map(|y| y.expect("complete")).collect());
        };
        let mor = self.a.morphism(x);
        for &y in self.b.hom(objects[mor.dom], objects[mor.cod]) {
            if map.used[y] {
                continue;
            }
            let mut next = map.clone();
            if self.propagate(objects, &mut next, vec![(x, y)]) {
                if let Some(done) = self.assign_morphism(objects, next) {
                    return Some(done);
                }
            }
        }
        None
    }

    fn propagate(&self, objects: &[usize], map: &mut MorphismMap, mut work: Vec<(usize, usize)>) -> bool {
        while let Some((x, y)) = work.pop() {
            match map.forward[x] {
                Some(prev) if prev == y => continue,
                Some(_) => return false,
                None => {}
            }
            let (mx, my) = (self.a.morphism(x), self.b.morphism(y));
            if map.used[y] || objects[mx.dom] != my.dom || objects[mx.cod] != my.cod {
                return false;
            }
            map.forward[x] = Some(y);
            map.used[y] = true;
            for z in 0..map.forward.len() {
                let Some(w) = map.forward[z] else { continue };
                if let Some(c) = self.a.compose(x, z) {
                    work.push((c, self.b.compose(y, w).expect("endpoints agree")));
                }
                if let Some(c) = self.a.compose(z, x) {
                    work.push((c, self.b.compose(w, y).expect("endpoints agree")));
                }
            }
        }
        true
    }
}

/// `C(S)` or a full subcategory of it, with the `(s, e)` pair behind each
/// morphism. Objects and pairs are monoid indices.
#[derive(Debug, Clone)]
pub struct DivisionCategory {
    category: FiniteCategory,
    objects: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    lookup: HashMap<(usize, usize), usize>,
}

/// The standard division category `C(S)` on all idempotents.
pub fn build_standard(m: &FiniteInverseMonoid) -> DivisionCategory {
    build_full_subcategory(m, m.idempotents().to_vec())
}

/// The reduced standard division category `C_F(S)`.
pub fn build_reduced(m: &FiniteInverseMonoid, transversal: &Transversal) -> Result<DivisionCategory, CategoryError> {
    let checked = Transversal::from_members(m, transversal.members().to_vec())?;
    Ok(build_full_subcategory(m, checked.members().to_vec()))
}

fn build_full_subcategory(m: &FiniteInverseMonoid, mut objects: Vec<usize>) -> DivisionCategory {
    objects.sort_unstable();
    let leq = |f: usize, e: usize| m.mul(f, e) == f;

    let mut by_label: Vec<usize> = (0..m.len()).collect();
    by_label.sort_by(|&a, &b| m.label(a).cmp(m.label(b)));

    let mut pairs = Vec::new();
    let mut morphisms = Vec::new();
    for (dom, &e) in objects.iter().enumerate() {
        for (cod, &f) in objects.iter().enumerate() {
            for &s in &by_label {
                if m.target_idempotent(s) == f && leq(m.source_idempotent(s), e) {
                    pairs.push((s, e));
                    morphisms.push(Morphism { label: format!("({},{})", m.label(s), m.label(e)), dom, cod });
                }
            }
        }
    }
    let lookup: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let identities = objects.iter().map(|&e| lookup[&(e, e)]).collect();
    let labels = objects.iter().map(|&e| m.label(e).to_owned()).collect();

    let category = FiniteCategory::new(labels, morphisms, identities, |later, earlier| {
        let (t, _) = pairs[later];
        let (s, e) = pairs[earlier];
        lookup.get(&(m.mul(t, s), e)).copied()
    })
    .expect("C(S) is closed under its composition rule");
    DivisionCategory { category, objects, pairs, lookup }
}

impl DivisionCategory {
    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    pub fn into_category(self) -> FiniteCategory {
        self.category
    }

    /// Idempotent behind each object.
    pub fn object_idempotents(&self) -> &[usize] {
        &self.objects
    }

    pub fn object_of(&self, e: usize) -> Option<usize> {
        self.objects.iter().position(|&x| x == e)
    }

    /// `(s, e)` behind morphism `x`.
    pub fn pair(&self, x: usize) -> (usize, usize) {
        self.pairs[x]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn morphism_of(&self, s: usize, e: usize) -> Option<usize> {
        self.lookup.get(&(s, e)).copied()
    }

    /// Morphism named by bracket text of `s` and `e`.
    pub fn find(&self, m: &FiniteInverseMonoid, s: &str, e: &str) -> Option<usize> {
        self.morphism_of(m.find(s).ok()?, m.find(e).ok()?)
    }

    /// `Hom(e, f)` for idempotents `e`, `f` given as monoid indices.
    pub fn hom_between(&self, e: usize, f: usize) -> Vec<usize> {
        match (self.object_of(e), self.object_of(f)) {
            (Some(a), Some(b)) => self.category.hom(a, b).to_vec(),
            _ => Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{all_transversals, enumerate_io};

    fn setup() -> (FiniteInverseMonoid, DivisionCategory) {
        let m = enumerate_io(3).unwrap();
        let t = m.choose_transversal();
        let c = build_reduced(&m, &t).unwrap();
        (m, c)
    }

    fn hom_labels(m: &FiniteInverseMonoid, c: &DivisionCategory, e: &str, f: &str) -> Vec<String> {
        let mut v: Vec<String> = c
            .hom_between(m.find(e).unwrap(), m.find(f).unwrap())
            .into_iter()
            .map(|x| c.category().morphism(x).label.clone())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn standard_category_of_io3() {
        let m = enumerate_io(3).unwrap();
        let c = build_standard(&m);
        assert_eq!(c.category().object_count(), 8);
        c.category().check_axioms().unwrap();
        let mor = |s: &str, e: &str| c.find(&m, s, e).unwrap();
        assert_eq!(c.category().compose(mor("[23][1]", "[1]"), mor("[12]", "i")), Some(mor("[13][2]", "i")));
        for o in 0..c.category().object_count() {
            let e = c.object_idempotents()[o];
            assert_eq!(c.pair(c.category().identity(o)), (e, e));
        }
        assert_eq!(c.category().quasi_initial_objects(), vec![c.object_of(m.identity()).unwrap()]);
    }

    #[test]
    fn reduced_hom_sets() {
        let (m, c) = setup();
        c.category().check_axioms().unwrap();
        assert_eq!(hom_labels(&m, &c, "i", "[1][2]"), ["([13][2],i)", "([1][2],i)", "([23][1],i)"]);
        assert_eq!(hom_labels(&m, &c, "[1]", "[1][2]"), ["([1][2],[1])", "([23][1],[1])"]);
        assert_eq!(hom_labels(&m, &c, "i", "i"), ["(i,i)"]);
        assert_eq!(c.category().morphism_count(), 15);
    }

    #[test]
    fn reduced_rejects_foreign_transversal() {
        let m3 = enumerate_io(3).unwrap();
        let m2 = enumerate_io(2).unwrap();
        let t2 = m2.choose_transversal();
        // indices from IO_2 do not form a transversal of IO_3
        assert!(build_reduced(&m3, &t2).is_err());
    }

    #[test]
    fn epi_mono_and_quasi_initial() {
        let (m, c) = setup();
        let cat = c.category();
        assert!((0..cat.morphism_count()).all(|x| cat.is_epimorphism(x)));
        let zero = c.object_of(m.zero().unwrap()).unwrap();
        let into_zero: Vec<usize> =
            (0..cat.morphism_count()).filter(|&x| cat.morphism(x).cod == zero && !cat.is_identity(x)).collect();
        assert_eq!(into_zero.len(), 3);
        // only the identity enters i, so i → 0 is left-cancellable
        let from_top = c.find(&m, "0", "i").unwrap();
        for &x in &into_zero {
            assert_eq!(cat.is_monomorphism(x), x == from_top, "{}", cat.morphism(x).label);
        }
        assert!(cat.identities().iter().all(|&x| cat.is_epimorphism(x) && cat.is_monomorphism(x)));
        assert_eq!(cat.quasi_initial_objects(), vec![c.object_of(m.identity()).unwrap()]);
    }

    #[test]
    fn pushouts_exist_in_reduced_io3() {
        let (_, c) = setup();
        assert_eq!(c.category().has_pushouts(DEFAULT_PUSHOUT_GUARD), Ok(true));
        assert!(matches!(c.category().has_pushouts(10), Err(CategoryError::SizeGuard { morphisms: 15, .. })));
    }

    #[test]
    fn indecomposables_of_reduced_io3() {
        let (m, c) = setup();
        let cat = c.category();
        let ind = cat.indecomposables();
        assert_eq!(ind.len(), 6);
        let obj = |s: &str| c.object_of(m.find(s).unwrap()).unwrap();
        let count = |a: &str, b: &str| ind.iter().filter(|&&x| (cat.morphism(x).dom, cat.morphism(x).cod) == (obj(a), obj(b))).count();
        assert_eq!((count("[1][2]", "0"), count("[1]", "[1][2]"), count("i", "[1]")), (1, 2, 3));
        let i_to_zero = c.find(&m, "0", "i").unwrap();
        assert!(!ind.contains(&i_to_zero));
    }

    #[test]
    fn transversal_independence() {
        let m = enumerate_io(3).unwrap();
        let base = build_reduced(&m, &m.choose_transversal()).unwrap();
        let alt = Transversal::parse(&m, &["0", "[2]", "[1][3]", "i"]).unwrap();
        let other = build_reduced(&m, &alt).unwrap();
        assert!(base.category().is_isomorphic(other.category(), DEFAULT_ISO_GUARD).unwrap());
        assert!(base.category().is_isomorphic(base.category(), DEFAULT_ISO_GUARD).unwrap());
        for t in all_transversals(&m) {
            let c = build_reduced(&m, &t).unwrap();
            assert!(base.category().is_isomorphic(c.category(), DEFAULT_ISO_GUARD).unwrap());
        }
    }

    #[test]
    fn non_isomorphic_categories() {
        let chain = |k: usize| FiniteCategory::from_poset((0..k).map(|x| x.to_string()).collect(), |a, b| a <= b).unwrap();
        let antichain = FiniteCategory::from_poset(vec!["a".into(), "b".into(), "c".into()], |a, b| a == b).unwrap();
        assert!(!chain(3).is_isomorphic(&antichain, 30).unwrap());
        assert!(!chain(3).is_isomorphic(&chain(4), 30).unwrap());
        // two categories with equal counts: V-shape (a<=b, a<=c) vs Λ-shape (b<=a, c<=a)
        let v = FiniteCategory::from_poset(vec!["a".into(), "b".into(), "c".into()], |x, y| x == y || x == 0).unwrap();
        let l = FiniteCategory::from_poset(vec!["a".into(), "b".into(), "c".into()], |x, y| x == y || y == 0).unwrap();
        assert!(!v.is_isomorphic(&l, 30).unwrap());
        assert!(v.is_isomorphic(&v, 30).unwrap());
    }

    #[test]
    fn iso_guard() {
        let (_, c) = setup();
        let err = c.category().is_isomorphic(c.category(), 10).unwrap_err();
        assert!(matches!(err, CategoryError::SizeGuard { check: "isomorphism search", .. }));
    }

    #[test]
    fn constructor_validation() {
        let objects = vec!["a".to_string()];
        let morphisms = vec![Morphism { label: "id".into(), dom: 0, cod: 0 }, Morphism { label: "f".into(), dom: 0, cod: 0 }];
        assert!(matches!(
            FiniteCategory::new(objects.clone(), morphisms.clone(), vec![0], |_, _| None),
            Err(CategoryError::MissingComposite { .. })
        ));
        // f∘f = id makes a valid two-element group
        let z2 = FiniteCategory::new(objects.clone(), morphisms.clone(), vec![0], |a, b| Some(a ^ b)).unwrap();
        z2.check_axioms().unwrap();
        assert_eq!(z2.indecomposables(), vec![1]);
        // always returning f breaks the identity law
        let bad = FiniteCategory::new(objects, morphisms, vec![0], |_, _| Some(1)).unwrap();
        assert!(matches!(bad.check_axioms(), Err(CategoryError::IdentityLaw(_))));
    }
}
