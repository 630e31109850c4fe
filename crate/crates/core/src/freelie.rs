//! Elements of the free Lie algebra in the basis of regular words.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};
use crate::words::{lex_cmp, standard_split, Alphabet, Letter, Monomial, Word};

/// Integer combination of basis words; brackets of basis elements have
/// integer coefficients whatever the ground field.
type IntComb = BTreeMap<Word, i128>;

/// Memo table for brackets of basis elements. Keeping one alive across many
/// calls (as the reducer does) avoids recomputing the Jacobi rewrites.
#[derive(Default, Debug, Clone)]
pub struct BracketMemo {
    brackets: BTreeMap<(Word, Word), IntComb>,
    splits: BTreeMap<Word, usize>,
}

impl BracketMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.brackets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.brackets.is_empty()
    }

    fn split(&mut self, w: &Word) -> (Word, Word) {
        let k = match self.splits.get(w) {
            Some(&k) => k,
            None => {
                let (u, _) = standard_split(w.letters());
                let k = u.len();
                self.splits.insert(w.clone(), k);
                k
            }
        };
        let l = w.letters();
        (Word::from_slice(&l[..k]), Word::from_slice(&l[k..]))
    }

    /// `[(u), (v)]` expanded in the regular-word basis.
    fn basis_bracket(&mut self, u: &Word, v: &Word) -> IntComb {
        match lex_cmp(u.letters(), v.letters()) {
            Ordering::Equal => IntComb::new(),
            Ordering::Less => {
                let mut r = self.basis_bracket(v, u);
                r.values_mut().for_each(|c| *c = -*c);
                r
            }
            Ordering::Greater => {
                let key = (u.clone(), v.clone());
                if let Some(r) = self.brackets.get(&key) {
                    return r.clone();
                }
                let r = self.bracket_ordered(u, v);
                self.brackets.insert(key, r.clone());
                r
            }
        }
    }

    // u >_lex v
    fn bracket_ordered(&mut self, u: &Word, v: &Word) -> IntComb {
        let mut out = IntComb::new();
        if u.len() == 1 {
            out.insert(u.concat(v), 1);
            return out;
        }
        let (u1, u2) = self.split(u);
        if lex_cmp(u2.letters(), v.letters()) != Ordering::Greater {
            out.insert(u.concat(v), 1);
            return out;
        }
        // [[u1,u2],v] = [[u1,v],u2] + [u1,[u2,v]]
        let first = self.basis_bracket(&u1, v);
        for (w, c) in first {
            let inner = self.basis_bracket(&w, &u2);
            accumulate(&mut out, &inner, c);
        }
        let second = self.basis_bracket(&u2, v);
        for (w, c) in second {
            let inner = self.basis_bracket(&u1, &w);
            accumulate(&mut out, &inner, c);
        }
        out
    }
}

fn accumulate(acc: &mut IntComb, terms: &IntComb, scale: i128) {
    for (w, c) in terms {
        let delta = c
            .checked_mul(scale)
            .expect("basis bracket coefficient overflow");
        let entry = acc.entry(w.clone()).or_insert(0);
        *entry = entry.checked_add(delta).expect("basis bracket coefficient overflow");
        if *entry == 0 {
            acc.remove(w);
        }
    }
}

/// A finite linear combination of regular words, each standing for its
/// regular bracketing. Zero coefficients are never stored; the deg-lex
/// greatest key is the leading word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    field: FieldSpec,
    terms: BTreeMap<Word, Scalar>,
}

impl LieElement {
    pub fn zero(field: FieldSpec) -> Self {
        LieElement {
            field,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `(w)`; `w` must be regular.
    pub fn basis(w: Word, field: FieldSpec) -> Result<Self> {
        if !w.is_regular() {
            return Err(Error::NotRegular(format!("{:?}", w.letters())));
        }
        let mut terms = BTreeMap::new();
        terms.insert(w, field.one());
        Ok(LieElement { field, terms })
    }

    pub fn letter(l: Letter, field: FieldSpec) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Word::letter(l), field.one());
        LieElement { field, terms }
    }

    pub fn from_terms(field: FieldSpec, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Result<Self> {
        let mut out = LieElement::zero(field);
        for (w, c) in terms {
            if !w.is_regular() {
                return Err(Error::NotRegular(format!("{:?}", w.letters())));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), c.field().to_string()));
            }
            out.add_term(w, &c);
        }
        Ok(out)
    }

    /// Expands an arbitrary bracketing in the regular-word basis.
    pub fn from_monomial(m: &Monomial, field: FieldSpec) -> Self {
        let mut memo = BracketMemo::new();
        Self::from_monomial_with(m, field, &mut memo)
    }

    pub fn from_monomial_with(m: &Monomial, field: FieldSpec, memo: &mut BracketMemo) -> Self {
        match m {
            Monomial::Leaf(l) => LieElement::letter(*l, field),
            Monomial::Bracket(l, r) => {
                let a = Self::from_monomial_with(l, field, memo);
                let b = Self::from_monomial_with(r, field, memo);
                a.bracket_unchecked(&b, memo)
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing deg-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.values().next_back()
    }

    /// Length of the leading word; 0 for the zero element.
    pub fn degree(&self) -> usize {
        self.leading_word().map_or(0, Word::len)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Scalar::is_one)
    }

    /// Every word in the support has the same length.
    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(a), Some(b)) => a.len() == b.len(),
            _ => true,
        }
    }

    pub fn make_monic(&self) -> Result<Self> {
        let lc = self.leading_coeff().ok_or(Error::ZeroElement)?;
        let inv = lc.inverse().expect("nonzero scalar is invertible");
        Ok(self.scale(&inv))
    }

    pub(crate) fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                let s = &*e + c;
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    /// `self += c * other`
    pub(crate) fn add_scaled(&mut self, c: &Scalar, other: &LieElement) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), &(c * d));
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Word, Scalar)> {
        self.terms.pop_last()
    }

    fn check_field(&self, other: &LieElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &LieElement) -> Result<Self> {
        self.check_field(other)?;
        let mut out = self.clone();
        out.add_scaled(&self.field.one(), other);
        Ok(out)
    }

    pub fn sub(&self, other: &LieElement) -> Result<Self> {
        self.check_field(other)?;
        let mut out = self.clone();
        out.add_scaled(&self.field.from_i64(-1), other);
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = LieElement::zero(self.field);
        out.add_scaled(c, self);
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.from_i64(-1))
    }

    pub fn bracket(&self, other: &LieElement) -> Result<Self> {
        self.check_field(other)?;
        let mut memo = BracketMemo::new();
        Ok(self.bracket_unchecked(other, &mut memo))
    }

    pub fn bracket_with(&self, other: &LieElement, memo: &mut BracketMemo) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.bracket_unchecked(other, memo))
    }

    pub(crate) fn bracket_unchecked(&self, other: &LieElement, memo: &mut BracketMemo) -> Self {
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let ab = a * b;
                for (w, n) in memo.basis_bracket(u, v) {
                    let c = &ab * &self.field.from_i128(n);
                    match acc.get_mut(&w) {
                        Some(e) => *e = &*e + &c,
                        None => {
                            acc.insert(w, c);
                        }
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LieElement {
            field: self.field,
            terms: acc,
        }
    }

    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> Self {
        let mut out = LieElement::zero(self.field);
        for (w, c) in &self.terms {
            out.add_term(w.map_letters(&f), c);
        }
        out
    }

    /// Largest letter index used, if any.
    pub fn max_letter(&self) -> Option<Letter> {
        self.terms.keys().flat_map(|w| w.letters().iter().copied()).max()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> ElementDisplay<'a> {
        ElementDisplay {
            element: self,
            alphabet,
        }
    }
}

/// Renders `coeff * word` terms in decreasing deg-lex order, e.g.
/// `a a c b - b d`; the zero element prints as `0`.
pub struct ElementDisplay<'a> {
    element: &'a LieElement,
    alphabet: &'a Alphabet,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.element.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, c) in self.element.terms.iter().rev() {
            let (neg, mag) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if !mag.is_one() {
                write!(f, "{mag} * ")?;
            }
            f.write_str(&self.alphabet.format_word(w.letters()))?;
        }
        Ok(())
    }
}

impl LieElement {
    pub fn to_string_with(&self, alphabet: &Alphabet) -> String {
        self.display(alphabet).to_string()
    }

    pub fn words(&self) -> Vec<Word> {
        self.terms.keys().cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::regular_bracketing;

    fn w(v: &[Letter]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn jacobi_rewrite_of_abc() {
        // a > b > c
        let (a, b, c) = (2, 1, 0);
        let m = Monomial::bracket(
            Monomial::bracket(Monomial::Leaf(a), Monomial::Leaf(b)),
            Monomial::Leaf(c),
        );
        let e = LieElement::from_monomial(&m, Q);
        let expect = LieElement::from_terms(Q, [(w(&[a, b, c]), Q.one()), (w(&[a, c, b]), Q.one())]).unwrap();
        assert_eq!(e, expect);
        assert_eq!(e.leading_word(), Some(&w(&[a, b, c])));
    }

    #[test]
    fn antisymmetry_kills_self_bracket() {
        let m = Monomial::bracket(Monomial::Leaf(0), Monomial::Leaf(0));
        assert!(LieElement::from_monomial(&m, Q).is_zero());
    }

    #[test]
    fn a_ab_is_basis() {
        let (a, b) = (1, 0);
        let m = Monomial::bracket(
            Monomial::Leaf(a),
            Monomial::bracket(Monomial::Leaf(a), Monomial::Leaf(b)),
        );
        let e = LieElement::from_monomial(&m, Q);
        assert_eq!(e, LieElement::basis(w(&[a, a, b]), Q).unwrap());
    }

    #[test]
    fn regular_bracketing_is_its_own_expansion() {
        for word in crate::words::regular_words_upto(3, 6) {
            let m = regular_bracketing(&word).unwrap();
            assert_eq!(LieElement::from_monomial(&m, Q), LieElement::basis(word, Q).unwrap());
        }
    }

    #[test]
    fn linear_ops() {
        let f = LieElement::basis(w(&[1, 0]), Q).unwrap();
        assert!(f.add(&f.neg()).unwrap().is_zero());
        assert!(f.scale(&Q.zero()).is_zero());
        let two = f.scale(&Q.from_i64(2));
        let five = two.add(&f.scale(&Q.from_i64(3))).unwrap();
        assert_eq!(five.leading_coeff(), Some(&Q.from_i64(5)));
        assert!(five.make_monic().unwrap().is_monic());
        let g = LieElement::letter(0, FieldSpec::Prime(7));
        assert!(matches!(f.add(&g), Err(Error::FieldMismatch(..))));
        assert!(matches!(f.bracket(&g), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn leading_word_is_deglex() {
        // (a) + (ab): the longer word leads although ab <_lex a
        let f = LieElement::from_terms(Q, [(w(&[1]), Q.one()), (w(&[1, 0]), Q.one())]).unwrap();
        assert_eq!(f.leading_word(), Some(&w(&[1, 0])));
        assert!(LieElement::zero(Q).make_monic().is_err());
    }

    #[test]
    fn display_format() {
        let alpha = Alphabet::new(["d", "c", "b", "a"]).unwrap();
        let f = LieElement::from_terms(
            Q,
            [(w(&[3, 3, 1, 2]), Q.one()), (w(&[2, 0]), Q.from_i64(-1))],
        )
        .unwrap();
        assert_eq!(f.display(&alpha).to_string(), "a a c b - b d");
        let g = f.scale(&Q.parse_scalar("-3/2").unwrap());
        assert_eq!(g.display(&alpha).to_string(), "-3/2 * a a c b + 3/2 * b d");
        assert_eq!(LieElement::zero(Q).display(&alpha).to_string(), "0");
    }
}
