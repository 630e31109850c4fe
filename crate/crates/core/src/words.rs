//! Associative words over an ordered alphabet, regular words and their
//! bracketings.
//!
//! Letters are alphabet indices; a larger index is a larger letter. The
//! lexicographic order treats a proper prefix as *larger* than any of its
//! extensions (`ab <_lex a`), and the deg-lex order compares lengths first.
//! [`Word`]'s `Ord` implementation is the deg-lex order.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

pub type Letter = u32;

/// Distinct letter names listed in strictly increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::InvalidInput("empty letter name".into()));
            }
            if seen.insert(n.as_str(), i).is_some() {
                return Err(Error::NameCollision(n.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter as usize]
    }

    pub fn index(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name).map(|i| i as Letter)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.names.len() as Letter
    }

    /// Letters joined by single spaces, e.g. `a a c b`.
    pub fn format_word(&self, w: &[Letter]) -> String {
        let mut out = String::new();
        for (i, &l) in w.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(self.name(l));
        }
        out
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let l = self
                .index(tok)
                .ok_or_else(|| Error::InvalidWord(format!("unknown letter `{tok}`")))?;
            letters.push(l);
        }
        Word::new(letters)
    }

    pub fn contains_word(&self, w: &[Letter]) -> bool {
        w.iter().all(|&l| (l as usize) < self.names.len())
    }
}

/// A nonempty associative word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidWord("empty word".into()));
        }
        Ok(Word(letters))
    }

    pub fn letter(l: Letter) -> Self {
        Word(alloc::vec![l])
    }

    pub(crate) fn from_slice(s: &[Letter]) -> Self {
        debug_assert!(!s.is_empty());
        Word(s.to_vec())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn is_regular(&self) -> bool {
        is_regular(&self.0)
    }

    pub fn lex_less(&self, other: &Word) -> bool {
        lex_cmp(&self.0, &other.0) == Ordering::Less
    }

    pub fn deglex_less(&self, other: &Word) -> bool {
        self < other
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        !find_occurrences(&self.0, &pattern.0).is_empty()
    }

    /// Applies a letter relabelling.
    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> Word {
        Word(self.0.iter().map(|&l| f(l)).collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic comparison in which a proper prefix is the larger word.
pub fn lex_cmp(u: &[Letter], v: &[Letter]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    v.len().cmp(&u.len())
}

pub fn lex_less(u: &[Letter], v: &[Letter]) -> bool {
    lex_cmp(u, v) == Ordering::Less
}

pub fn deglex_cmp(u: &[Letter], v: &[Letter]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| lex_cmp(u, v))
}

pub fn deglex_less(u: &[Letter], v: &[Letter]) -> bool {
    deglex_cmp(u, v) == Ordering::Less
}

/// `w` is strictly greater than each of its proper rotations.
pub fn is_regular(w: &[Letter]) -> bool {
    if w.is_empty() {
        return false;
    }
    let n = w.len();
    (1..n).all(|k| {
        // compare w with the rotation w[k..] w[..k]; equal lengths
        let rot = w[k..].iter().chain(&w[..k]);
        for (a, b) in w.iter().zip(rot) {
            match a.cmp(b) {
                Ordering::Greater => return true,
                Ordering::Less => return false,
                Ordering::Equal => {}
            }
        }
        false
    })
}

/// Start index of the longest proper regular suffix of `w`.
fn lprs_start(w: &[Letter]) -> Option<usize> {
    (1..w.len()).find(|&k| is_regular(&w[k..]))
}

pub fn longest_proper_regular_suffix(w: &Word) -> Result<Word> {
    if w.len() < 2 || !w.is_regular() {
        return Err(Error::NotRegular(format!("{:?}", w.0)));
    }
    let k = lprs_start(&w.0).expect("a regular word of length >= 2 has a regular proper suffix");
    Ok(Word::from_slice(&w.0[k..]))
}

/// Splits a regular word of length at least two as `(prefix, lprs)`.
pub(crate) fn standard_split(w: &[Letter]) -> (&[Letter], &[Letter]) {
    let k = lprs_start(w).expect("regular word of length >= 2");
    (&w[..k], &w[k..])
}

/// A non-associative word: a letter or a bracket of two non-associative words.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Monomial {
    Leaf(Letter),
    Bracket(Box<Monomial>, Box<Monomial>),
}

impl Monomial {
    pub fn bracket(left: Monomial, right: Monomial) -> Monomial {
        Monomial::Bracket(Box::new(left), Box::new(right))
    }

    /// Left-normed bracket `[x1, x2, ..., xk] = [[..[x1, x2], ...], xk]`.
    pub fn left_normed(letters: &[Letter]) -> Option<Monomial> {
        let (&first, rest) = letters.split_first()?;
        Some(
            rest.iter()
                .fold(Monomial::Leaf(first), |acc, &l| Monomial::bracket(acc, Monomial::Leaf(l))),
        )
    }

    pub fn degree(&self) -> usize {
        match self {
            Monomial::Leaf(_) => 1,
            Monomial::Bracket(l, r) => l.degree() + r.degree(),
        }
    }

    /// The underlying associative word, read left to right.
    pub fn word(&self) -> Word {
        let mut out = Vec::with_capacity(self.degree());
        self.push_letters(&mut out);
        Word(out)
    }

    fn push_letters(&self, out: &mut Vec<Letter>) {
        match self {
            Monomial::Leaf(l) => out.push(*l),
            Monomial::Bracket(l, r) => {
                l.push_letters(out);
                r.push_letters(out);
            }
        }
    }

    /// Checks both conditions of non-associative regularity recursively.
    pub fn is_nonassociative_regular(&self) -> bool {
        if !self.word().is_regular() {
            return false;
        }
        match self {
            Monomial::Leaf(_) => true,
            Monomial::Bracket(l, r) => {
                if !l.is_nonassociative_regular() || !r.is_nonassociative_regular() {
                    return false;
                }
                match l.as_ref() {
                    Monomial::Bracket(_, l2) => {
                        lex_cmp(l2.word().letters(), r.word().letters()) != Ordering::Greater
                    }
                    Monomial::Leaf(_) => true,
                }
            }
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> MonomialDisplay<'a> {
        MonomialDisplay {
            monomial: self,
            alphabet,
        }
    }

    pub fn map_letters(&self, f: &impl Fn(Letter) -> Letter) -> Monomial {
        match self {
            Monomial::Leaf(l) => Monomial::Leaf(f(*l)),
            Monomial::Bracket(l, r) => Monomial::bracket(l.map_letters(f), r.map_letters(f)),
        }
    }
}

/// Renders a monomial as `[a,[[a,c],b]]`.
pub struct MonomialDisplay<'a> {
    monomial: &'a Monomial,
    alphabet: &'a Alphabet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.monomial {
            Monomial::Leaf(l) => f.write_str(self.alphabet.name(*l)),
            Monomial::Bracket(l, r) => write!(
                f,
                "[{},{}]",
                l.display(self.alphabet),
                r.display(self.alphabet)
            ),
        }
    }
}

fn bracketing_of(w: &[Letter]) -> Monomial {
    if w.len() == 1 {
        return Monomial::Leaf(w[0]);
    }
    let (u, v) = standard_split(w);
    Monomial::bracket(bracketing_of(u), bracketing_of(v))
}

/// The unique non-associative regular bracketing of a regular word.
pub fn regular_bracketing(w: &Word) -> Result<Monomial> {
    if !w.is_regular() {
        return Err(Error::NotRegular(format!("{:?}", w.0)));
    }
    Ok(bracketing_of(&w.0))
}

/// All regular words of length at most `max_degree` over the given letters,
/// skipping any word that contains one of `forbidden` as a factor.
/// The result is sorted deg-lex.
///
/// Regular words here are exactly the Lyndon words for the reversed letter
/// order, so they are produced by the Fredricksen–Kessler–Maiorana prenecklace
/// recursion; forbidden factors prune whole subtrees.
pub fn enumerate_regular(letters: &[Letter], max_degree: usize, forbidden: &[Word]) -> Vec<Word> {
    let mut letters: Vec<Letter> = letters.to_vec();
    letters.sort_unstable();
    letters.dedup();
    let mut out = Vec::new();
    if max_degree == 0 || letters.is_empty() {
        return out;
    }
    let mut buf = Vec::with_capacity(max_degree);
    for &first in &letters {
        buf.push(first);
        if !ends_with_forbidden(&buf, forbidden) {
            prenecklace(&letters, max_degree, forbidden, &mut buf, 1, &mut out);
        }
        buf.pop();
    }
    out.sort();
    out
}

fn ends_with_forbidden(buf: &[Letter], forbidden: &[Word]) -> bool {
    forbidden.iter().any(|f| buf.ends_with(&f.0))
}

fn prenecklace(
    letters: &[Letter],
    max_degree: usize,
    forbidden: &[Word],
    buf: &mut Vec<Letter>,
    period: usize,
    out: &mut Vec<Word>,
) {
    let t = buf.len();
    if period == t {
        out.push(Word(buf.clone()));
    }
    if t == max_degree {
        return;
    }
    let reference = buf[t - period];
    for &c in letters.iter().filter(|&&c| c <= reference) {
        buf.push(c);
        if !ends_with_forbidden(buf, forbidden) {
            let p = if c == reference { period } else { t + 1 };
            prenecklace(letters, max_degree, forbidden, buf, p, out);
        }
        buf.pop();
    }
}

/// All regular words of length at most `d` on an alphabet of `size` letters.
pub fn regular_words_upto(size: usize, d: usize) -> Vec<Word> {
    let letters: Vec<Letter> = (0..size as Letter).collect();
    enumerate_regular(&letters, d, &[])
}

/// Start positions (0-based) of every contiguous occurrence of `v` in `w`.
pub fn find_occurrences(w: &[Letter], v: &[Letter]) -> Vec<usize> {
    if v.is_empty() || v.len() > w.len() {
        return Vec::new();
    }
    (0..=w.len() - v.len()).filter(|&i| &w[i..i + v.len()] == v).collect()
}

/// A proper overlap `w = a·b·c` of `u = a·b` and `v = b·c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlap {
    pub word: Word,
    /// Length of the shared middle factor `b`.
    pub shared: usize,
    pub regular: bool,
}

/// Proper overlaps of a suffix of `u` with a prefix of `v` (all of `a`, `b`,
/// `c` nonempty). Occurrences of `v` inside `u` are reported by
/// [`inclusions`].
pub fn overlaps(u: &Word, v: &Word) -> Vec<Overlap> {
    let max = u.len().min(v.len());
    let mut out = Vec::new();
    for shared in 1..max {
        if u.0[u.len() - shared..] == v.0[..shared] {
            let mut w = u.0.clone();
            w.extend_from_slice(&v.0[shared..]);
            let regular = is_regular(&w);
            out.push(Overlap {
                word: Word(w),
                shared,
                regular,
            });
        }
    }
    out
}

/// Positions where `v` occurs inside `u`, excluding `u == v` itself.
pub fn inclusions(u: &Word, v: &Word) -> Vec<usize> {
    if u == v {
        return Vec::new();
    }
    find_occurrences(&u.0, &v.0)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "<{}>", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    // a > b > c > d
    const A: Letter = 3;
    const B: Letter = 2;
    const C: Letter = 1;

    fn w(v: &[Letter]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lex_prefix_is_larger() {
        assert!(lex_less(&[A, B], &[A]));
        assert!(lex_less(&[B], &[A]));
        assert!(!lex_less(&[A, A, C, B], &[A, C, B, A]));
        assert!(lex_less(&[A, C, B, A], &[A, A, C, B]));
    }

    #[test]
    fn deglex_compares_length_first() {
        assert!(deglex_less(&[A], &[A, B]));
        assert!(!deglex_less(&[A, B], &[A]));
        assert!(deglex_less(&[B, A], &[A, B]));
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&[A, A, C, B]));
        assert!(!is_regular(&[A, A]));
        assert!(is_regular(&[A, A, B, A, B]));
        assert!(!is_regular(&[B, A]));
        assert!(is_regular(&[B]));
        assert!(!is_regular(&[]));
    }

    #[test]
    fn lprs_chain() {
        assert_eq!(longest_proper_regular_suffix(&w(&[A, A, C, B])).unwrap(), w(&[A, C, B]));
        assert_eq!(longest_proper_regular_suffix(&w(&[A, C, B])).unwrap(), w(&[B]));
        assert_eq!(longest_proper_regular_suffix(&w(&[A, C])).unwrap(), w(&[C]));
        assert!(longest_proper_regular_suffix(&w(&[A])).is_err());
        assert!(longest_proper_regular_suffix(&w(&[B, A])).is_err());
    }

    #[test]
    fn bracketing_of_a2cb() {
        let alpha = Alphabet::new(["d", "c", "b", "a"]).unwrap();
        let m = regular_bracketing(&w(&[A, A, C, B])).unwrap();
        assert_eq!(m.display(&alpha).to_string(), "[a,[[a,c],b]]");
        let m = regular_bracketing(&w(&[A, A, B, A, B])).unwrap();
        assert_eq!(m.display(&alpha).to_string(), "[[a,[a,b]],[a,b]]");
        assert_eq!(regular_bracketing(&w(&[A])).unwrap(), Monomial::Leaf(A));
        assert!(regular_bracketing(&w(&[B, A])).is_err());
    }

    #[test]
    fn small_enumerations() {
        let two = regular_words_upto(2, 2);
        assert_eq!(two, vec![w(&[0]), w(&[1]), w(&[1, 0])]);
        let three = regular_words_upto(3, 2);
        assert_eq!(three.iter().filter(|x| x.len() == 2).count(), 3);
    }

    #[test]
    fn forbidden_factors_prune() {
        // on y > x, every regular word of length >= 2 contains "yx"
        let words = enumerate_regular(&[0, 1], 6, &[w(&[1, 0])]);
        assert_eq!(words, vec![w(&[0]), w(&[1])]);
    }

    #[test]
    fn occurrences() {
        let aabab = [A, A, B, A, B];
        assert_eq!(find_occurrences(&aabab, &[A, B]), vec![1, 3]);
        assert_eq!(find_occurrences(&aabab, &[B, A]), vec![2]);
        assert!(find_occurrences(&[A, B, C], &[A, B, C, 0]).is_empty());
    }

    #[test]
    fn overlap_examples() {
        // y > x
        let (y, x) = (1, 0);
        let ov = overlaps(&w(&[y, y, x]), &w(&[y, x, x]));
        assert_eq!(ov.len(), 1);
        assert_eq!(ov[0].word, w(&[y, y, x, x]));
        assert_eq!(ov[0].shared, 2);
        assert!(ov[0].regular);
        assert!(overlaps(&w(&[A, A, B, A, B]), &w(&[A, A, B, B, A, B])).is_empty());
        assert!(overlaps(&w(&[y, x]), &w(&[y, x])).is_empty());
    }

    #[test]
    fn left_normed_shape() {
        let alpha = Alphabet::new(["x", "y"]).unwrap();
        let m = Monomial::left_normed(&[1, 0, 0]).unwrap();
        assert_eq!(m.display(&alpha).to_string(), "[[y,x],x]");
        assert!(Monomial::left_normed(&[]).is_none());
    }

    #[test]
    fn alphabet_rejects_duplicates() {
        assert!(matches!(Alphabet::new(["a", "a"]), Err(Error::NameCollision(_))));
        let alpha = Alphabet::new(["b", "a"]).unwrap();
        assert_eq!(alpha.parse_word("a a b").unwrap(), w(&[1, 1, 0]));
        assert!(alpha.parse_word("a q").is_err());
        assert_eq!(alpha.format_word(&[1, 0]), "a b");
    }
}
