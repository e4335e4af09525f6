//! Finite inverse monoids of partial bijections.
//!
//! [`MonoidTable`] is a bare Cayley table and carries the checks that make
//! sense for any finite monoid (inverse-monoid axioms, Green's relations by
//! their ideal definitions). [`FiniteInverseMonoid`] adds the partial
//! bijections behind each index together with the inverse table, and is what
//! the category constructions consume.

use std::collections::HashMap;

use thiserror::Error;

use crate::pbij::{self, PartialBijection, PbijError};

/// Cayley tables above this many cells are refused.
pub const MAX_TABLE_CELLS: usize = 1 << 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error(transparent)]
    Element(#[from] PbijError),
    #[error("Cayley table for {elements} elements exceeds the {MAX_TABLE_CELLS}-cell limit")]
    TooLarge { elements: usize },
    #[error("product table is not closed: entry ({row}, {col}) = {value} with {order} elements")]
    NotClosed { row: usize, col: usize, value: usize, order: usize },
    #[error("element {0} is not a two-sided identity")]
    BadIdentity(usize),
    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),
    #[error("{x} is not below {y} in the idempotent order")]
    NotComparable { x: usize, y: usize },
    #[error("{0} is not a member of this poset")]
    NotInPoset(usize),
    #[error("no element of this monoid is {0}")]
    UnknownElement(String),
    #[error("invalid transversal: {0}")]
    InvalidTransversal(String),
}

/// Bare multiplication table of a finite monoid on `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidTable {
    order: usize,
    product: Vec<u32>,
    identity: usize,
}

impl MonoidTable {
    /// `product[a * order + b]` is `a · b`.
    pub fn new(order: usize, product: Vec<usize>, identity: usize) -> Result<Self, MonoidError> {
        assert_eq!(product.len(), order * order, "product table must be square");
        for (k, &v) in product.iter().enumerate() {
            if v >= order {
                return Err(MonoidError::NotClosed { row: k / order, col: k % order, value: v, order });
            }
        }
        let table = Self { order, product: product.into_iter().map(|v| v as u32).collect(), identity };
        if identity >= order || (0..order).any(|a| table.mul(identity, a) != a || table.mul(a, identity) != a) {
            return Err(MonoidError::BadIdentity(identity));
        }
        Ok(table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.order + b] as usize
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&e| self.mul(e, e) == e).collect()
    }

    /// All `t` with `sts = s` and `tst = t`.
    pub fn inverses_of(&self, s: usize) -> Vec<usize> {
        (0..self.order)
            .filter(|&t| self.mul(self.mul(s, t), s) == s && self.mul(self.mul(t, s), t) == t)
            .collect()
    }

    /// Membership mask of the principal right ideal `sS`.
    pub fn right_ideal(&self, s: usize) -> Vec<bool> {
        let mut mask = vec![false; self.order];
        for x in 0..self.order {
            mask[self.mul(s, x)] = true;
        }
        mask
    }

    /// Membership mask of the principal left ideal `Ss`.
    pub fn left_ideal(&self, s: usize) -> Vec<bool> {
        let mut mask = vec![false; self.order];
        for x in 0..self.order {
            mask[self.mul(x, s)] = true;
        }
        mask
    }

    /// R (`sS = tS`) and L (`Ss = St`) computed from principal ideals.
    pub fn green_by_ideals(&self) -> (Partition, Partition) {
        let r = Partition::by_key((0..self.order).map(|s| self.right_ideal(s)));
        let l = Partition::by_key((0..self.order).map(|s| self.left_ideal(s)));
        (r, l)
    }
}

/// Outcome of [`verify_inverse_monoid`]. Each flag is one axiom; `failures`
/// lists the offending elements in human-readable form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InverseMonoidReport {
    pub unique_inverses: bool,
    pub idempotents_commute: bool,
    pub one_idempotent_per_r_class: bool,
    pub one_idempotent_per_l_class: bool,
    pub failures: Vec<String>,
}

impl InverseMonoidReport {
    pub fn all_pass(&self) -> bool {
        self.unique_inverses
            && self.idempotents_commute
            && self.one_idempotent_per_r_class
            && self.one_idempotent_per_l_class
    }
}

/// Checks the inverse-monoid axioms directly on a product table.
pub fn verify_inverse_monoid(table: &MonoidTable) -> InverseMonoidReport {
    let mut report = InverseMonoidReport::default();
    let mut failures = Vec::new();

    report.unique_inverses = true;
    for s in 0..table.order() {
        let inv = table.inverses_of(s);
        if inv.len() != 1 {
            report.unique_inverses = false;
            failures.push(format!("element {s} has {} inverses", inv.len()));
        }
    }

    let idem = table.idempotents();
    report.idempotents_commute = true;
    'outer: for (k, &e) in idem.iter().enumerate() {
        for &f in &idem[k + 1..] {
            if table.mul(e, f) != table.mul(f, e) {
                report.idempotents_commute = false;
                failures.push(format!("idempotents {e} and {f} do not commute"));
                break 'outer;
            }
        }
    }

    let (r, l) = table.green_by_ideals();
    let is_idem: Vec<bool> = (0..table.order()).map(|x| table.mul(x, x) == x).collect();
    let one_each = |p: &Partition, name: &str, failures: &mut Vec<String>| {
        let mut ok = true;
        for class in p.classes() {
            let count = class.iter().filter(|&&x| is_idem[x]).count();
            if count != 1 {
                ok = false;
                failures.push(format!("{name}-class of {} holds {count} idempotents", class[0]));
            }
        }
        ok
    };
    report.one_idempotent_per_r_class = one_each(&r, "R", &mut failures);
    report.one_idempotent_per_l_class = one_each(&l, "L", &mut failures);
    report.failures = failures;
    report
}

/// A partition of `0..len` into classes. Classes are ordered by least member
/// and each class is ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Groups indices with equal keys.
    pub fn by_key<K, I>(keys: I) -> Self
    where
        K: std::hash::Hash + Eq,
        I: IntoIterator<Item = K>,
    {
        let mut ids: HashMap<K, usize> = HashMap::new();
        let mut class_of = Vec::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (x, key) in keys.into_iter().enumerate() {
            let next = ids.len();
            let c = *ids.entry(key).or_insert(next);
            if c == classes.len() {
                classes.push(Vec::new());
            }
            classes[c].push(x);
            class_of.push(c);
        }
        Self { class_of, classes }
    }

    /// Join (finest common coarsening) of two partitions of the same set.
    pub fn join(&self, other: &Partition) -> Self {
        assert_eq!(self.len(), other.len());
        let mut parent: Vec<usize> = (0..self.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for p in [self, other] {
            for class in p.classes() {
                for &x in &class[1..] {
                    let (a, b) = (find(&mut parent, class[0]), find(&mut parent, x));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        Self::by_key((0..self.len()).map(|x| find(&mut parent, x)))
    }

    /// Number of elements partitioned.
    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_index(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_of(&self, x: usize) -> &[usize] {
        &self.classes[self.class_of[x]]
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.len() == self.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenStructure {
    pub r: Partition,
    pub l: Partition,
    pub h: Partition,
    pub d: Partition,
}

impl GreenStructure {
    /// Whether `D` coincides with the relational product `R ∘ L`.
    pub fn d_is_r_then_l(&self) -> bool {
        let n = self.d.len();
        for s in 0..n {
            let mut reach = vec![false; n];
            for &u in self.r.class_of(s) {
                for &t in self.l.class_of(u) {
                    reach[t] = true;
                }
            }
            if (0..n).any(|t| reach[t] != self.d.related(s, t)) {
                return false;
            }
        }
        true
    }

    /// Same check for `L ∘ R`.
    pub fn d_is_l_then_r(&self) -> bool {
        let swapped = GreenStructure { r: self.l.clone(), l: self.r.clone(), h: self.h.clone(), d: self.d.clone() };
        swapped.d_is_r_then_l()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonoidKind {
    /// `IO_n`: order-preserving partial bijections.
    OrderPreserving,
    /// `I(M_n)`: all partial bijections.
    Symmetric,
}

/// A finite inverse monoid of partial bijections on `{1..n}`.
///
/// Elements are ordered by rank descending, then by bracket text.
#[derive(Debug, Clone)]
pub struct FiniteInverseMonoid {
    n: usize,
    kind: MonoidKind,
    elements: Vec<PartialBijection>,
    keys: Vec<String>,
    index: HashMap<PartialBijection, usize>,
    table: MonoidTable,
    inverse_of: Vec<usize>,
    idempotents: Vec<usize>,
    zero: Option<usize>,
}

/// `IO_n`.
pub fn enumerate_io(n: usize) -> Result<FiniteInverseMonoid, MonoidError> {
    FiniteInverseMonoid::from_elements(n, MonoidKind::OrderPreserving, pbij::order_preserving_partial_bijections(n)?)
}

/// `I(M_n)`, the symmetric inverse monoid.
pub fn enumerate_symmetric(n: usize) -> Result<FiniteInverseMonoid, MonoidError> {
    FiniteInverseMonoid::from_elements(n, MonoidKind::Symmetric, pbij::all_partial_bijections(n)?)
}

pub fn enumerate(kind: MonoidKind, n: usize) -> Result<FiniteInverseMonoid, MonoidError> {
    match kind {
        MonoidKind::OrderPreserving => enumerate_io(n),
        MonoidKind::Symmetric => enumerate_symmetric(n),
    }
}

impl FiniteInverseMonoid {
    fn from_elements(n: usize, kind: MonoidKind, elements: Vec<PartialBijection>) -> Result<Self, MonoidError> {
        let m = elements.len();
        if !matches!(m.checked_mul(m), Some(c) if c <= MAX_TABLE_CELLS) {
            return Err(MonoidError::TooLarge { elements: m });
        }
        let mut keyed: Vec<(String, PartialBijection)> =
            elements.into_iter().map(|f| (f.render_key(), f)).collect();
        keyed.sort_by(|(ka, a), (kb, b)| b.rank().cmp(&a.rank()).then_with(|| ka.cmp(kb)));
        let (keys, elements): (Vec<_>, Vec<_>) = keyed.into_iter().unzip();
        let index: HashMap<PartialBijection, usize> =
            elements.iter().cloned().enumerate().map(|(k, f)| (f, k)).collect();

        let lookup = |f: &PartialBijection| -> usize { index[f] };
        let mut product = Vec::with_capacity(m * m);
        for a in &elements {
            for b in &elements {
                product.push(lookup(&a.compose(b)?));
            }
        }
        let identity = lookup(&PartialBijection::identity(n)?);
        let table = MonoidTable::new(m, product, identity)?;
        let inverse_of = elements.iter().map(|f| lookup(&f.invert())).collect();
        let zero = index.get(&PartialBijection::zero(n)?).copied();
        let idempotents = table.idempotents();
        Ok(Self { n, kind, elements, keys, index, table, inverse_of, idempotents, zero })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> MonoidKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PartialBijection] {
        &self.elements
    }

    pub fn element(&self, x: usize) -> &PartialBijection {
        &self.elements[x]
    }

    /// Bracket text of element `x` (for `n > 9` an extended-alphabet key).
    pub fn label(&self, x: usize) -> &str {
        &self.keys[x]
    }

    pub fn index_of(&self, f: &PartialBijection) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// Looks an element up by bracket text.
    pub fn find(&self, text: &str) -> Result<usize, MonoidError> {
        let f = PartialBijection::parse(text, self.n).map_err(|_| MonoidError::UnknownElement(text.to_owned()))?;
        self.index_of(&f).ok_or_else(|| MonoidError::UnknownElement(text.to_owned()))
    }

    pub fn table(&self) -> &MonoidTable {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.mul(a, b)
    }

    #[inline]
    pub fn inverse(&self, x: usize) -> usize {
        self.inverse_of[x]
    }

    pub fn identity(&self) -> usize {
        self.table.identity()
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    /// `s⁻¹s`, the domain idempotent.
    pub fn source_idempotent(&self, s: usize) -> usize {
        self.mul(self.inverse(s), s)
    }

    /// `ss⁻¹`, the range idempotent.
    pub fn target_idempotent(&self, s: usize) -> usize {
        self.mul(s, self.inverse(s))
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn rank(&self, x: usize) -> usize {
        self.elements[x].rank()
    }

    /// Natural partial order: `s ≤ t` iff `s = et` for some idempotent `e`.
    pub fn natural_leq(&self, s: usize, t: usize) -> bool {
        self.idempotents.iter().any(|&e| self.mul(e, t) == s)
    }

    /// The four standard characterisations of `s ≤ t`, in order:
    /// `s = et` for an idempotent `e`; `ss⁻¹ = st⁻¹`; `s⁻¹s = t⁻¹s`;
    /// `s = st⁻¹s`.
    pub fn natural_leq_conditions(&self, s: usize, t: usize) -> [bool; 4] {
        let (si, ti) = (self.inverse(s), self.inverse(t));
        [
            self.natural_leq(s, t),
            self.mul(s, si) == self.mul(s, ti),
            self.mul(si, s) == self.mul(ti, s),
            self.mul(self.mul(s, ti), s) == s,
        ]
    }

    /// Green's relations via `ss⁻¹` and `s⁻¹s`; `D` as the join of `R`, `L`.
    pub fn green(&self) -> GreenStructure {
        let r = Partition::by_key((0..self.len()).map(|s| self.target_idempotent(s)));
        let l = Partition::by_key((0..self.len()).map(|s| self.source_idempotent(s)));
        let h = Partition::by_key((0..self.len()).map(|s| (self.target_idempotent(s), self.source_idempotent(s))));
        let d = r.join(&l);
        GreenStructure { r, l, h, d }
    }

    /// Trivial subgroups, i.e. `H` is equality.
    pub fn is_combinatorial(&self) -> bool {
        self.green().h.is_discrete()
    }

    /// D-classes restricted to idempotents, ordered by least member.
    pub fn idempotent_d_classes(&self) -> Vec<Vec<usize>> {
        let d = self.green().d;
        d.classes()
            .iter()
            .map(|c| c.iter().copied().filter(|&x| self.is_idempotent(x)).collect::<Vec<_>>())
            .filter(|c| !c.is_empty())
            .collect()
    }

    /// `(E(S), ≤)` with its cover relation.
    pub fn idempotent_poset(&self) -> IdempotentPoset {
        IdempotentPoset::new(self, self.idempotents.clone())
    }

    /// `E(eSe) = {f ∈ E(S) : f ≤ e}` with the induced order.
    pub fn local_idempotents(&self, e: usize) -> Result<IdempotentPoset, MonoidError> {
        if !self.is_idempotent(e) {
            return Err(MonoidError::NotIdempotent(e));
        }
        let below = self.idempotents.iter().copied().filter(|&f| self.mul(f, e) == f && self.mul(e, f) == f).collect();
        Ok(IdempotentPoset::new(self, below))
    }

    /// Picks, in each idempotent D-class, the idempotent whose domain is
    /// greatest in colex order. For `IO_n` and `I(M_n)` that is the identity
    /// on the top segment `{n-r+1, ..., n}` of each rank `r`.
    pub fn choose_transversal(&self) -> Transversal {
        let pick = |class: &Vec<usize>| -> usize {
            *class
                .iter()
                .max_by_key(|&&e| {
                    let mut dom = self.elements[e].domain();
                    dom.reverse();
                    dom
                })
                .expect("classes are non-empty")
        };
        let mut members: Vec<usize> = self.idempotent_d_classes().iter().map(pick).collect();
        members.sort_unstable();
        Transversal { members }
    }
}

/// `E(S)` or a down-set of it, ordered by `e ≤ f ⇔ e = ef = fe`.
///
/// Members are monoid indices in monoid order; `leq` and the covers are
/// stored over local positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentPoset {
    members: Vec<usize>,
    position: HashMap<usize, usize>,
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
}

impl IdempotentPoset {
    fn new(m: &FiniteInverseMonoid, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        let k = members.len();
        let mut leq = vec![false; k * k];
        for (a, &e) in members.iter().enumerate() {
            for (b, &f) in members.iter().enumerate() {
                leq[a * k + b] = m.mul(e, f) == e && m.mul(f, e) == e;
            }
        }
        let mut covers = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if a != b
                    && leq[a * k + b]
                    && !(0..k).any(|c| c != a && c != b && leq[a * k + c] && leq[c * k + b])
                {
                    covers.push((members[a], members[b]));
                }
            }
        }
        let position = members.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        Self { members, position, leq, covers }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.position.contains_key(&e)
    }

    /// `e ≤ f` for monoid indices; `None` if either is not a member.
    pub fn leq(&self, e: usize, f: usize) -> Option<bool> {
        let (a, b) = (self.position.get(&e)?, self.position.get(&f)?);
        Some(self.leq[a * self.len() + b])
    }

    /// Members above `e`.
    pub fn up_set(&self, e: usize) -> Vec<usize> {
        self.members.iter().copied().filter(|&f| self.leq(e, f) == Some(true)).collect()
    }

    /// Cover pairs `(lower, upper)` as monoid indices.
    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Möbius value of the interval `[x, y]`:
    /// `μ(x,x) = 1`, `μ(x,y) = -Σ_{x ≤ z < y} μ(x,z)`.
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64, MonoidError> {
        let px = *self.position.get(&x).ok_or(MonoidError::NotInPoset(x))?;
        let py = *self.position.get(&y).ok_or(MonoidError::NotInPoset(y))?;
        let k = self.len();
        if !self.leq[px * k + py] {
            return Err(MonoidError::NotComparable { x, y });
        }
        // interval members, topologically sorted by the size of their down-set
        let mut interval: Vec<usize> = (0..k).filter(|&z| self.leq[px * k + z] && self.leq[z * k + py]).collect();
        interval.sort_by_key(|&z| (0..k).filter(|&w| self.leq[w * k + z]).count());
        let mut mu: HashMap<usize, i64> = HashMap::new();
        for &z in &interval {
            let value = if z == px {
                1
            } else {
                -interval
                    .iter()
                    .filter(|&&w| w != z && self.leq[w * k + z])
                    .map(|w| mu[w])
                    .sum::<i64>()
            };
            mu.insert(z, value);
        }
        Ok(mu[&py])
    }
}

/// One idempotent per D-class, including the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    members: Vec<usize>,
}

impl Transversal {
    /// Validates a user-supplied transversal.
    pub fn from_members(m: &FiniteInverseMonoid, mut members: Vec<usize>) -> Result<Self, MonoidError> {
        members.sort_unstable();
        members.dedup();
        for &e in &members {
            if e >= m.len() || !m.is_idempotent(e) {
                return Err(MonoidError::InvalidTransversal(format!("{} is not an idempotent", label_or_index(m, e))));
            }
        }
        if !members.contains(&m.identity()) {
            return Err(MonoidError::InvalidTransversal("the identity must be a member".into()));
        }
        for class in m.idempotent_d_classes() {
            let hits: Vec<&str> = class.iter().filter(|e| members.contains(e)).map(|&e| m.label(e)).collect();
            if hits.len() != 1 {
                return Err(MonoidError::InvalidTransversal(format!(
                    "D-class of {} has {} chosen members [{}]",
                    m.label(class[0]),
                    hits.len(),
                    hits.join(", ")
                )));
            }
        }
        Ok(Self { members })
    }

    /// Same as [`from_members`](Self::from_members) from bracket text.
    pub fn parse(m: &FiniteInverseMonoid, texts: &[&str]) -> Result<Self, MonoidError> {
        let members = texts.iter().map(|t| m.find(t.trim())).collect::<Result<Vec<_>, _>>()?;
        Self::from_members(m, members)
    }

    /// Members in monoid order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }
}

fn label_or_index(m: &FiniteInverseMonoid, e: usize) -> String {
    if e < m.len() {
        m.label(e).to_owned()
    } else {
        format!("#{e}")
    }
}

/// Every transversal of the idempotent D-classes (product of the classes).
pub fn all_transversals(m: &FiniteInverseMonoid) -> Vec<Transversal> {
    let mut out = vec![Vec::new()];
    for class in m.idempotent_d_classes() {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                class.iter().map(move |&e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|mut members| {
            members.sort_unstable();
            Transversal { members }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn io3() -> FiniteInverseMonoid {
        enumerate_io(3).unwrap()
    }

    fn labels(m: &FiniteInverseMonoid, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| m.label(x).to_owned()).collect()
    }

    #[test]
    fn io3_elements() {
        let m = io3();
        let mut got = labels(&m, &(0..m.len()).collect::<Vec<_>>());
        let mut expected: Vec<String> = "[1],[2],[3],[12],[21],[23],[32],[123],[321],[1][2],[1][3],[2][3],\
             [31][2],[13][2],[32][1],[23][1],[12][3],[21][3],0,i"
            .split(',')
            .map(str::to_owned)
            .collect();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn canonical_order() {
        let m = io3();
        assert_eq!(m.label(0), "i");
        assert_eq!(m.label(m.len() - 1), "0");
        let ranks: Vec<usize> = (0..m.len()).map(|x| m.rank(x)).collect();
        assert!(ranks.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn sizes() {
        assert_eq!(enumerate_io(1).unwrap().len(), 2);
        assert_eq!(enumerate_io(4).unwrap().len(), 70);
        assert_eq!(enumerate_symmetric(1).unwrap().len(), 2);
        assert_eq!(enumerate_symmetric(3).unwrap().len(), 34);
        assert_eq!(enumerate_symmetric(4).unwrap().len(), 209);
        assert!(matches!(enumerate_io(0), Err(MonoidError::Element(PbijError::EmptyGroundSet))));
        assert!(matches!(enumerate_io(9), Err(MonoidError::TooLarge { elements: 48620 })));
    }

    #[test]
    fn io1_is_zero_and_identity() {
        let m = enumerate_io(1).unwrap();
        assert_eq!(labels(&m, &[0, 1]), ["i", "0"]);
    }

    #[test]
    fn axioms_hold_for_io3_and_im3() {
        assert!(verify_inverse_monoid(io3().table()).all_pass());
        assert!(verify_inverse_monoid(enumerate_symmetric(3).unwrap().table()).all_pass());
    }

    /// Full transformation monoid on {1,2}: id, const1, const2, swap.
    fn full_transformations_2() -> MonoidTable {
        let maps: [[usize; 2]; 4] = [[0, 1], [0, 0], [1, 1], [1, 0]];
        let idx = |f: [usize; 2]| maps.iter().position(|&g| g == f).unwrap();
        let mut product = Vec::new();
        for a in maps {
            for b in maps {
                product.push(idx([a[b[0]], a[b[1]]]));
            }
        }
        MonoidTable::new(4, product, 0).unwrap()
    }

    #[test]
    fn non_inverse_monoid_is_flagged() {
        let t = full_transformations_2();
        let report = verify_inverse_monoid(&t);
        assert!(!report.unique_inverses);
        assert!(!report.all_pass());
        assert_eq!(t.inverses_of(1), vec![1, 2]);
    }

    #[test]
    fn table_validation() {
        assert!(matches!(MonoidTable::new(2, vec![0, 1, 1, 2], 0), Err(MonoidError::NotClosed { .. })));
        assert!(matches!(MonoidTable::new(2, vec![0, 0, 0, 1], 0), Err(MonoidError::BadIdentity(0))));
    }

    #[test]
    fn natural_order_examples() {
        let m = io3();
        let f = |s: &str| m.find(s).unwrap();
        assert!(m.natural_leq(f("[1][2]"), f("[1]")));
        assert!(!m.natural_leq(f("i"), f("[1]")));
        for t in 0..m.len() {
            assert!(m.natural_leq(f("0"), t));
        }
    }

    #[test]
    fn green_examples() {
        let m = io3();
        let f = |s: &str| m.find(s).unwrap();
        let g = m.green();
        assert!(g.d.related(f("[1]"), f("[2]")));
        let s = f("[12]");
        assert_eq!((m.source_idempotent(s), m.target_idempotent(s)), (f("[2]"), f("[1]")));
        assert!(g.h.is_discrete());
        assert!(g.d_is_r_then_l() && g.d_is_l_then_r());
        let classes: Vec<Vec<String>> = m.idempotent_d_classes().iter().map(|c| labels(&m, c)).collect();
        assert_eq!(classes, [vec!["i"], vec!["[1]", "[2]", "[3]"], vec!["[1][2]", "[1][3]", "[2][3]"], vec!["0"]]);
    }

    #[test]
    fn symmetric_monoid_is_not_combinatorial() {
        assert!(!enumerate_symmetric(2).unwrap().is_combinatorial());
        assert!(enumerate_io(3).unwrap().is_combinatorial());
    }

    #[test]
    fn idempotent_poset_of_io3() {
        let m = io3();
        let f = |s: &str| m.find(s).unwrap();
        let p = m.idempotent_poset();
        assert_eq!(p.len(), 8);
        assert_eq!(m.mul(f("[1]"), f("[2]")), f("[1][2]"));
        let mut above_zero: Vec<String> = p
            .hasse_edges()
            .iter()
            .filter(|(lo, _)| *lo == f("0"))
            .map(|&(_, hi)| m.label(hi).to_owned())
            .collect();
        above_zero.sort();
        assert_eq!(above_zero, ["[1][2]", "[1][3]", "[2][3]"]);
    }

    #[test]
    fn transversal_and_local_idempotents() {
        let m = io3();
        let f = |s: &str| m.find(s).unwrap();
        let t = m.choose_transversal();
        let mut got = labels(&m, t.members());
        got.sort();
        assert_eq!(got, ["0", "[1]", "[1][2]", "i"]);

        let local = m.local_idempotents(f("[1]")).unwrap();
        let mut got = labels(&m, local.members());
        got.sort();
        assert_eq!(got, ["0", "[1]", "[1][2]", "[1][3]"]);
        assert_eq!(m.local_idempotents(m.identity()).unwrap().members(), m.idempotent_poset().members());
        assert_eq!(m.local_idempotents(f("[12]")), Err(MonoidError::NotIdempotent(f("[12]"))));
    }

    #[test]
    fn user_transversals() {
        let m = io3();
        assert!(Transversal::parse(&m, &["0", "[2]", "[1][3]", "i"]).is_ok());
        assert!(Transversal::parse(&m, &["0", "[2]", "[1]", "[1][3]", "i"]).is_err());
        assert!(Transversal::parse(&m, &["0", "[2]", "[1][3]"]).is_err());
        assert!(Transversal::parse(&m, &["0", "[12]", "[1][3]", "i"]).is_err());
        assert_eq!(all_transversals(&m).len(), 9);
    }

    #[test]
    fn poset_mobius_examples() {
        let m = io3();
        let f = |s: &str| m.find(s).unwrap();
        let p = m.idempotent_poset();
        assert_eq!(p.mobius(f("[1]"), f("[1]")), Ok(1));
        assert_eq!(p.mobius(f("0"), f("i")), Ok(-1));
        assert_eq!(p.mobius(f("[1][2]"), f("i")), Ok(1));
        assert_eq!(p.mobius(f("i"), f("0")), Err(MonoidError::NotComparable { x: f("i"), y: f("0") }));
        assert_eq!(p.mobius(f("[12]"), f("i")), Err(MonoidError::NotInPoset(f("[12]"))));
    }

    #[test]
    fn partition_join() {
        let a = Partition::by_key([0, 0, 1, 2, 3]);
        let b = Partition::by_key([0, 1, 1, 2, 2]);
        let j = a.join(&b);
        assert_eq!(j.classes(), [vec![0, 1, 2], vec![3, 4]]);
    }
}
