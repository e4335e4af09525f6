//! The incidence algebra of a finite category over exact rationals.
//!
//! Functions on morphisms multiply by convolution,
//! `(ξ * η)(α) = Σ_{βγ = α} ξ(β) η(γ)`, summing over every ordered
//! factorization including those with identity factors. `δ` (1 on
//! identities, 0 elsewhere) is the unit and `ζ` is constantly 1. The Möbius
//! function is the convolution inverse of `ζ`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};
use std::ops::Index;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::category::{CategoryId, DivisionCategory, FiniteCategory};
use crate::monoid::{FiniteInverseMonoid, MonoidError};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncidenceError {
    #[error("incidence function is bound to a different category")]
    ForeignFunction,
    #[error("expected {expected} values, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("function has no convolution inverse")]
    NotInvertible,
    #[error("monoid has a non-trivial subgroup, so its reduced category is not Möbius")]
    NotCombinatorial,
    #[error("value {value} at morphism {morphism} is not an integer")]
    NotInteger { morphism: usize, value: String },
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

/// An exact rational value on every morphism of one category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceFunction {
    category: CategoryId,
    values: Vec<Rational>,
}

impl IncidenceFunction {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Values as machine integers; fails on a non-unit denominator.
    pub fn to_integers(&self) -> Result<Vec<i64>, IncidenceError> {
        self.values
            .iter()
            .enumerate()
            .map(|(k, v)| {
                v.is_integer()
                    .then(|| v.to_integer().to_i64())
                    .flatten()
                    .ok_or_else(|| IncidenceError::NotInteger { morphism: k, value: v.to_string() })
            })
            .collect()
    }
}

impl Index<usize> for IncidenceFunction {
    type Output = Rational;

    fn index(&self, x: usize) -> &Rational {
        &self.values[x]
    }
}

/// How [`IncidenceAlgebra::inverse_with_method`] solved its system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseMethod {
    /// Substitution in dependency order.
    Peeling,
    /// Dense Gaussian elimination, used when the dependencies are cyclic.
    Elimination,
}

/// `A(C)` for a finite category, with every morphism's factorizations
/// precomputed once.
#[derive(Debug, Clone)]
pub struct IncidenceAlgebra<'c> {
    cat: &'c FiniteCategory,
    factorizations: Vec<Vec<(usize, usize)>>,
}

impl<'c> IncidenceAlgebra<'c> {
    pub fn new(cat: &'c FiniteCategory) -> Self {
        Self { cat, factorizations: cat.factorizations() }
    }

    pub fn category(&self) -> &'c FiniteCategory {
        self.cat
    }

    /// Ordered pairs `(β, γ)` with `β ∘ γ = x`.
    pub fn factorizations(&self, x: usize) -> &[(usize, usize)] {
        &self.factorizations[x]
    }

    pub fn function(&self, values: Vec<Rational>) -> Result<IncidenceFunction, IncidenceError> {
        let expected = self.cat.morphism_count();
        if values.len() != expected {
            return Err(IncidenceError::WrongLength { expected, got: values.len() });
        }
        Ok(IncidenceFunction { category: self.cat.id(), values })
    }

    pub fn from_integers(&self, values: &[i64]) -> Result<IncidenceFunction, IncidenceError> {
        self.function(values.iter().map(|&v| Rational::from_integer(BigInt::from(v))).collect())
    }

    pub fn delta(&self) -> IncidenceFunction {
        let values = (0..self.cat.morphism_count())
            .map(|x| if self.cat.is_identity(x) { Rational::one() } else { Rational::zero() })
            .collect();
        IncidenceFunction { category: self.cat.id(), values }
    }

    pub fn zeta(&self) -> IncidenceFunction {
        IncidenceFunction { category: self.cat.id(), values: vec![Rational::one(); self.cat.morphism_count()] }
    }

    fn check(&self, f: &IncidenceFunction) -> Result<(), IncidenceError> {
        if f.category != self.cat.id() {
            return Err(IncidenceError::ForeignFunction);
        }
        Ok(())
    }

    pub fn convolve(&self, xi: &IncidenceFunction, eta: &IncidenceFunction) -> Result<IncidenceFunction, IncidenceError> {
        self.check(xi)?;
        self.check(eta)?;
        let values = self
            .factorizations
            .iter()
            .map(|fs| fs.iter().fold(Rational::zero(), |acc, &(b, g)| acc + &xi.values[b] * &eta.values[g]))
            .collect();
        Ok(IncidenceFunction { category: self.cat.id(), values })
    }

    pub fn inverse(&self, xi: &IncidenceFunction) -> Result<IncidenceFunction, IncidenceError> {
        self.inverse_with_method(xi).map(|(f, _)| f)
    }

    /// Solves `ξ * ν = δ` for `ν`. In a finite-dimensional algebra a one-sided
    /// inverse is two-sided, so `ν * ξ = δ` follows.
    ///
    /// Row `α` reads `Σ_{βγ=α} ξ(β) ν(γ) = δ(α)`. When no morphism depends on
    /// itself through a non-trivial right factor the rows are triangular and
    /// are solved by substitution, fewest factorizations first; otherwise the
    /// whole system goes through Gaussian elimination.
    pub fn inverse_with_method(
        &self,
        xi: &IncidenceFunction,
    ) -> Result<(IncidenceFunction, InverseMethod), IncidenceError> {
        self.check(xi)?;
        let m = self.cat.morphism_count();
        let rows: Vec<BTreeMap<usize, Rational>> = self
            .factorizations
            .iter()
            .map(|fs| {
                let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                for &(b, g) in fs {
                    *row.entry(g).or_insert_with(Rational::zero) += &xi.values[b];
                }
                row
            })
            .collect();
        let rhs: Vec<Rational> = self.delta().values;

        if let Some(order) = self.peeling_order() {
            let mut nu: Vec<Option<Rational>> = vec![None; m];
            for a in order {
                let diag = rows[a].get(&a).cloned().unwrap_or_else(Rational::zero);
                if diag.is_zero() {
                    return Err(IncidenceError::NotInvertible);
                }
                let rest = rows[a]
                    .iter()
                    .filter(|(&g, _)| g != a)
                    .fold(Rational::zero(), |acc, (&g, c)| acc + c * nu[g].as_ref().expect("dependency solved"));
                nu[a] = Some((&rhs[a] - rest) / diag);
            }
            let values = nu.into_iter().map(|v| v.expect("every morphism solved")).collect();
            return Ok((IncidenceFunction { category: self.cat.id(), values }, InverseMethod::Peeling));
        }

        let mut matrix: Vec<Vec<Rational>> = rows
            .iter()
            .zip(rhs)
            .map(|(row, r)| {
                let mut dense = vec![Rational::zero(); m + 1];
                for (&g, c) in row {
                    dense[g] = c.clone();
                }
                dense[m] = r;
                dense
            })
            .collect();
        let values = solve(&mut matrix).ok_or(IncidenceError::NotInvertible)?;
        Ok((IncidenceFunction { category: self.cat.id(), values }, InverseMethod::Elimination))
    }

    /// Dependency order for substitution, or `None` if some right factor
    /// dependency is cyclic.
    fn peeling_order(&self) -> Option<Vec<usize>> {
        let m = self.cat.morphism_count();
        let mut pending = vec![0usize; m];
        let mut dependents: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (a, fs) in self.factorizations.iter().enumerate() {
            let mut deps: Vec<usize> = fs.iter().map(|&(_, g)| g).filter(|&g| g != a).collect();
            deps.sort_unstable();
            deps.dedup();
            pending[a] = deps.len();
            for g in deps {
                dependents[g].push(a);
            }
        }
        let mut ready: BinaryHeap<Reverse<(usize, usize)>> =
            (0..m).filter(|&a| pending[a] == 0).map(|a| Reverse((self.factorizations[a].len(), a))).collect();
        let mut order = Vec::with_capacity(m);
        while let Some(Reverse((_, a))) = ready.pop() {
            order.push(a);
            for &b in &dependents[a] {
                pending[b] -= 1;
                if pending[b] == 0 {
                    ready.push(Reverse((self.factorizations[b].len(), b)));
                }
            }
        }
        (order.len() == m).then_some(order)
    }

    /// `μ = ζ⁻¹`.
    pub fn mobius(&self) -> Result<IncidenceFunction, IncidenceError> {
        self.inverse(&self.zeta())
    }

    /// Whether `μ` takes only the values `1` and `-1`.
    pub fn is_special_mobius(&self) -> Result<bool, IncidenceError> {
        let mu = self.mobius()?;
        let (one, minus_one) = (Rational::one(), -Rational::one());
        Ok(mu.values.iter().all(|v| *v == one || *v == minus_one))
    }

    /// `η = ξ * ζ ⇔ ξ = η * μ`, checked both ways for the given `ξ`.
    pub fn verify_inversion(&self, xi: &IncidenceFunction, mu: &IncidenceFunction) -> Result<bool, IncidenceError> {
        let zeta = self.zeta();
        let eta = self.convolve(xi, &zeta)?;
        let forward = self.convolve(&eta, mu)? == *xi;
        let back = self.convolve(&self.convolve(xi, mu)?, &zeta)? == *xi;
        Ok(forward && back)
    }
}

/// Gauss-Jordan on an augmented `m × (m+1)` matrix. `None` if singular.
fn solve(a: &mut [Vec<Rational>]) -> Option<Vec<Rational>> {
    let m = a.len();
    for col in 0..m {
        let pivot = (col..m).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v /= &p;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * pv;
            }
        }
    }
    Some(a.iter().map(|row| row[m].clone()).collect())
}

/// `μ(s, e) = μ_{E(eSe)}(s⁻¹s, e)`, Möbius value on `C_F(S)` from the
/// idempotent lattice below `e`.
pub fn mobius_via_lattice(
    m: &FiniteInverseMonoid,
    category: &DivisionCategory,
    morphism: usize,
) -> Result<i64, IncidenceError> {
    if !m.is_combinatorial() {
        return Err(IncidenceError::NotCombinatorial);
    }
    let (s, e) = category.pair(morphism);
    let local = m.local_idempotents(e)?;
    Ok(local.mobius(m.source_idempotent(s), e)?)
}
