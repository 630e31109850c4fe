//! Brute-force verifier working in the free associative algebra.
//!
//! Lie elements are expanded into noncommutative polynomials (`[u,v] ↦ uv − vu`)
//! and ideal dimensions are obtained by exact elimination on the expansions of
//! left-normed brackets `[r, y1, ..., ym]`. Nothing here uses the Jacobi
//! rewriting or the reduction machinery of the Gröbner–Shirshov engine.
//!
//! Elimination only keeps the coefficients of regular words. The expansion of
//! a basis element `(w)` is `w` plus lex-smaller words of the same length, so
//! this projection is injective on Lie polynomials and preserves both rank
//! and top degree.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freelie::LieElement;
use crate::gsbasis::Presentation;
use crate::linalg::{Echelon, SparseRow};
use crate::scalar::{FieldSpec, Scalar};
use crate::words::{is_regular, regular_bracketing, Letter, Monomial, Word};

/// A noncommutative polynomial without constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocPoly {
    field: FieldSpec,
    terms: BTreeMap<Word, Scalar>,
}

impl AssocPoly {
    pub fn zero(field: FieldSpec) -> Self {
        AssocPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn letter(l: Letter, field: FieldSpec) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Word::letter(l), field.one());
        AssocPoly { field, terms }
    }

    pub fn from_terms(field: FieldSpec, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = AssocPoly::zero(field);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    /// Deg-lex greatest word with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> usize {
        self.leading().map_or(0, |(w, _)| w.len())
    }

    fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                let s = &*e + &c;
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> AssocPoly {
        let mut out = AssocPoly::zero(self.field);
        for (w, d) in &self.terms {
            out.add_term(w.clone(), c * d);
        }
        out
    }

    pub fn mul(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = AssocPoly::zero(self.field);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    pub fn commutator(&self, other: &AssocPoly) -> AssocPoly {
        self.mul(other).sub(&other.mul(self))
    }

    /// `[self, y]` for a single letter `y`.
    pub fn commutator_letter(&self, y: Letter) -> AssocPoly {
        let mut out = AssocPoly::zero(self.field);
        for (w, c) in &self.terms {
            let mut right = w.letters().to_vec();
            right.push(y);
            let mut left = Vec::with_capacity(w.len() + 1);
            left.push(y);
            left.extend_from_slice(w.letters());
            out.add_term(Word::new(right).expect("nonempty"), c.clone());
            out.add_term(Word::new(left).expect("nonempty"), -c);
        }
        out
    }

    /// Coefficients on regular words only.
    pub fn regular_projection(&self) -> SparseRow<Word> {
        self.terms
            .iter()
            .filter(|(w, _)| is_regular(w.letters()))
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect()
    }
}

/// Expansion of a bracketing: `[u, v] ↦ uv − vu`.
pub fn expand(m: &Monomial, field: FieldSpec) -> AssocPoly {
    match m {
        Monomial::Leaf(l) => AssocPoly::letter(*l, field),
        Monomial::Bracket(l, r) => expand(l, field).commutator(&expand(r, field)),
    }
}

/// Expansion of a Lie element, each basis word taken with its regular bracketing.
pub fn expand_elem(f: &LieElement) -> AssocPoly {
    let field = f.field();
    let mut out = AssocPoly::zero(field);
    for (w, c) in f.terms() {
        let m = regular_bracketing(w).expect("support words are regular");
        out = out.add(&expand(&m, field).scale(c));
    }
    out
}

/// Dimension of the free Lie algebra on `letters` generators in degree `degree`,
/// by the necklace formula `(1/n) Σ_{m|n} μ(m) k^{n/m}`.
pub fn witt_dimension(letters: usize, degree: usize) -> usize {
    if degree == 0 {
        return 0;
    }
    let k = letters as i128;
    let mut total: i128 = 0;
    for m in 1..=degree {
        if degree.is_multiple_of(m) {
            total += mobius(m) as i128 * k.pow((degree / m) as u32);
        }
    }
    (total / degree as i128) as usize
}

fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimKind {
    Ideal,
    Quotient,
}

/// Per-degree dimensions, `dims[k - 1]` for degree `k`, qualified by the lift
/// bound used. `stabilized` records whether the same numbers were already
/// obtained at `lift_bound - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTable {
    pub kind: DimKind,
    pub dims: Vec<usize>,
    pub lift_bound: usize,
    pub stabilized: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Member,
    NotProven,
}

/// Limits on the brute-force spanning computation.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    pub max_rows: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_rows: 200_000 }
    }
}

/// Echelon form of the span of `[r, y1, ..., ym]` with top degree `<= lift_bound`.
pub struct IdealSpan {
    echelon: Echelon<Word>,
    previous_counts: Vec<usize>,
    lift_bound: usize,
}

impl IdealSpan {
    pub fn build(p: &Presentation, lift_bound: usize, budget: OracleBudget) -> Result<Self> {
        let field = p.field();
        let letters: Vec<Letter> = p.alphabet().letters().collect();
        let mut echelon: Echelon<Word> = Echelon::new(field);
        let mut previous_counts = Vec::new();
        // generators of the current bracket level; each level is pruned to a
        // linearly independent set, which spans the same next level
        let mut level: Vec<AssocPoly> = Vec::new();
        let mut rows_seen = 0usize;
        for t in 1..=lift_bound {
            let mut next_level = Vec::new();
            let mut level_echelon: Echelon<Word> = Echelon::new(field);
            let mut push = |poly: AssocPoly, next: &mut Vec<AssocPoly>| -> Result<()> {
                rows_seen += 1;
                if rows_seen > budget.max_rows {
                    return Err(Error::BudgetExceeded(format!(
                        "oracle spanning set exceeds {} rows",
                        budget.max_rows
                    )));
                }
                let proj = poly.regular_projection();
                if level_echelon.insert(proj.clone()) {
                    echelon.insert(proj);
                    next.push(poly);
                }
                Ok(())
            };
            for s in &level {
                for &y in &letters {
                    push(s.commutator_letter(y), &mut next_level)?;
                }
            }
            for r in p.relators() {
                if r.degree() == t {
                    push(expand_elem(r), &mut next_level)?;
                }
            }
            level = next_level;
            if t + 1 == lift_bound {
                previous_counts = cumulative_counts(&echelon, lift_bound);
            }
        }
        if lift_bound <= 1 {
            previous_counts = Vec::new();
        }
        Ok(IdealSpan {
            echelon,
            previous_counts,
            lift_bound,
        })
    }

    pub fn lift_bound(&self) -> usize {
        self.lift_bound
    }

    /// `dim(I ∩ F_{<=k})` for `k = 1..=d`.
    pub fn cumulative(&self, d: usize) -> Vec<usize> {
        (1..=d)
            .map(|k| self.echelon.count_pivots(|w| w.len() <= k))
            .collect()
    }

    pub fn contains(&self, f: &LieElement) -> bool {
        self.echelon.contains(expand_elem(f).regular_projection())
    }

    fn stabilized(&self, d: usize) -> bool {
        if self.previous_counts.is_empty() {
            return false;
        }
        let now = self.cumulative(d);
        now.iter()
            .enumerate()
            .all(|(i, &c)| self.previous_counts.get(i) == Some(&c))
    }
}

fn cumulative_counts(e: &Echelon<Word>, up_to: usize) -> Vec<usize> {
    (1..=up_to).map(|k| e.count_pivots(|w| w.len() <= k)).collect()
}

fn check_bounds(d: usize, lift_bound: usize) -> Result<()> {
    if lift_bound < d {
        return Err(Error::InvalidInput(format!(
            "lift bound {lift_bound} is below degree {d}"
        )));
    }
    Ok(())
}

/// Per-degree dimensions of the ideal: `dim(I ∩ F_{<=k}) − dim(I ∩ F_{<=k-1})`.
pub fn ideal_dims(p: &Presentation, d: usize, lift_bound: usize) -> Result<DimTable> {
    ideal_dims_with(p, d, lift_bound, OracleBudget::default())
}

pub fn ideal_dims_with(p: &Presentation, d: usize, lift_bound: usize, budget: OracleBudget) -> Result<DimTable> {
    check_bounds(d, lift_bound)?;
    let span = IdealSpan::build(p, lift_bound, budget)?;
    let cum = span.cumulative(d);
    let dims = differences(&cum);
    Ok(DimTable {
        kind: DimKind::Ideal,
        dims,
        lift_bound,
        stabilized: span.stabilized(d),
    })
}

fn differences(cum: &[usize]) -> Vec<usize> {
    let mut prev = 0;
    cum.iter()
        .map(|&c| {
            let d = c - prev;
            prev = c;
            d
        })
        .collect()
}

/// Per-degree quotient dimensions: free Lie dimension minus ideal dimension.
pub fn quotient_dims(p: &Presentation, d: usize, lift_bound: usize) -> Result<DimTable> {
    quotient_dims_with(p, d, lift_bound, OracleBudget::default())
}

pub fn quotient_dims_with(p: &Presentation, d: usize, lift_bound: usize, budget: OracleBudget) -> Result<DimTable> {
    let ideal = ideal_dims_with(p, d, lift_bound, budget)?;
    let k = p.alphabet().len();
    let dims = ideal
        .dims
        .iter()
        .enumerate()
        .map(|(i, &x)| witt_dimension(k, i + 1) - x)
        .collect();
    Ok(DimTable {
        kind: DimKind::Quotient,
        dims,
        lift_bound,
        stabilized: ideal.stabilized,
    })
}

/// Positive membership certificate: `f` lies in the span at this lift bound.
pub fn is_member(f: &LieElement, p: &Presentation, lift_bound: usize) -> Result<Membership> {
    let span = IdealSpan::build(p, lift_bound, OracleBudget::default())?;
    Ok(if span.contains(f) {
        Membership::Member
    } else {
        Membership::NotProven
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn w(v: &[Letter]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    #[test]
    fn witt_counts() {
        let two: Vec<usize> = (1..=8).map(|n| witt_dimension(2, n)).collect();
        assert_eq!(two, [2, 1, 2, 3, 6, 9, 18, 30]);
        let three: Vec<usize> = (1..=4).map(|n| witt_dimension(3, n)).collect();
        assert_eq!(three, [3, 3, 8, 18]);
    }

    #[test]
    fn expand_small_brackets() {
        let (a, b) = (1, 0);
        let ab = Monomial::bracket(Monomial::Leaf(a), Monomial::Leaf(b));
        let e = expand(&ab, Q);
        assert_eq!(e, AssocPoly::from_terms(Q, [(w(&[a, b]), Q.one()), (w(&[b, a]), Q.from_i64(-1))]));
        let aab = Monomial::bracket(Monomial::Leaf(a), ab);
        let e = expand(&aab, Q);
        let expect = AssocPoly::from_terms(
            Q,
            [
                (w(&[a, a, b]), Q.one()),
                (w(&[a, b, a]), Q.from_i64(-2)),
                (w(&[b, a, a]), Q.one()),
            ],
        );
        assert_eq!(e, expect);
        assert_eq!(expand(&Monomial::Leaf(a), Q), AssocPoly::letter(a, Q));
    }

    #[test]
    fn leading_associative_word_of_basis_element() {
        // a > b > c
        let f = LieElement::basis(w(&[2, 2, 0, 1]), Q).unwrap();
        let e = expand_elem(&f);
        let (lw, lc) = e.leading().unwrap();
        assert_eq!(lw, &w(&[2, 2, 0, 1]));
        assert!(lc.is_one());
        assert!(expand_elem(&LieElement::zero(Q)).is_zero());
    }
}
