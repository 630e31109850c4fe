//! Numerical invariants of presented algebras: Hilbert functions, truncated
//! centers, homology ranks of overlap-free presentations, lower central
//! series membership and two bounded property checks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::freelie::LieElement;
use crate::gsbasis::{GsBasis, Reducer};
use crate::linalg::{rank, Echelon, SparseRow};
use crate::oracle::DimTable;
use crate::scalar::Scalar;
use crate::words::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HilbertSource {
    IrreducibleCount,
    Oracle,
}

/// Quotient dimension in each degree `1..=degree_bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    pub dims: Vec<usize>,
    pub degree_bound: usize,
    pub source: HilbertSource,
}

impl From<&DimTable> for HilbertTable {
    fn from(t: &DimTable) -> Self {
        HilbertTable {
            dims: t.dims.clone(),
            degree_bound: t.dims.len(),
            source: HilbertSource::Oracle,
        }
    }
}

/// Counts irreducible words per degree.
pub fn hilbert(g: &GsBasis, d: usize) -> Result<HilbertTable> {
    let mut dims = alloc::vec![0; d];
    for w in g.irreducible_words(d)? {
        dims[w.len() - 1] += 1;
    }
    Ok(HilbertTable {
        dims,
        degree_bound: d,
        source: HilbertSource::IrreducibleCount,
    })
}

/// Irreducible words `f ≠ x` of degree `<= d` with `[f, x] = 0` in the
/// quotient. `x` must be the smallest letter.
pub fn center_truncated(g: &GsBasis, x: Letter, d: usize) -> Result<Vec<Word>> {
    if x != 0 || g.alphabet().is_empty() {
        return Err(Error::InvalidInput(format!(
            "centralizer test needs the minimal letter, got index {x}"
        )));
    }
    if !g.certified_up_to(d + 1) {
        return Err(Error::Uncertified(d + 1));
    }
    let field = g.field();
    let xe = LieElement::letter(x, field);
    let mut reducer = g.reducer();
    let mut out = Vec::new();
    for w in g.irreducible_words(d)? {
        if w.len() == 1 && w.letters()[0] == x {
            continue;
        }
        let b = reducer.bracket(&LieElement::basis(w.clone(), field)?, &xe)?;
        if reducer.reduce(&b).is_zero() {
            out.push(w);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub h1: usize,
    pub h2: usize,
    /// rows of the linear-parts matrix (relators)
    pub rows: usize,
    /// columns of the linear-parts matrix (generators)
    pub cols: usize,
    pub rank: usize,
    pub overlap_free: bool,
}

/// `H₁` and `H₂` ranks from the linear parts of the relators. Only valid
/// without overlaps, where the minimal resolution stops at length two.
pub fn homology_ranks(g: &GsBasis) -> Result<HomologyReport> {
    if !g.is_certified() {
        return Err(Error::Uncertified(g.checked_degree()));
    }
    if !g.is_overlap_free() {
        return Err(Error::NotOverlapFree);
    }
    let field = g.field();
    let cols = g.alphabet().len();
    let matrix: Vec<Vec<Scalar>> = g
        .relators()
        .iter()
        .map(|r| {
            (0..cols as Letter)
                .map(|l| r.coeff(&Word::letter(l)).cloned().unwrap_or_else(|| field.zero()))
                .collect()
        })
        .collect();
    let rk = rank(field, &matrix);
    Ok(HomologyReport {
        h1: cols - rk,
        h2: matrix.len() - rk,
        rows: matrix.len(),
        cols,
        rank: rk,
        overlap_free: true,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcsVerdict {
    Member,
    /// the lift bound does not reach the degree of the element
    NotProven,
    /// outside the span computed at this lift bound
    NonMemberAtBound,
}

/// Caps the basis size of each lower-central-series level.
#[derive(Clone, Copy, Debug)]
pub struct LcsBudget {
    pub max_level_rank: usize,
}

impl Default for LcsBudget {
    fn default() -> Self {
        LcsBudget { max_level_rank: 20_000 }
    }
}

/// Normal forms of left-normed brackets of `n..=lift_bound` generators.
#[derive(Clone, Debug)]
pub struct LcsSpan {
    pub n: usize,
    pub lift_bound: usize,
    span: Echelon<Word>,
}

fn to_row(f: &LieElement) -> SparseRow<Word> {
    f.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}

impl LcsSpan {
    pub fn build(g: &GsBasis, n: usize, lift_bound: usize, budget: LcsBudget) -> Result<Self> {
        if !g.certified_up_to(lift_bound) {
            return Err(Error::Uncertified(lift_bound));
        }
        let field = g.field();
        let mut span = Echelon::new(field);
        if n > lift_bound {
            return Ok(LcsSpan { n, lift_bound, span });
        }
        let mut reducer: Reducer = g.reducer();
        let letters: Vec<LieElement> = g.alphabet().letters().map(|l| LieElement::letter(l, field)).collect();
        let mut level: Vec<LieElement> = letters.iter().map(|x| reducer.reduce(x)).filter(|f| !f.is_zero()).collect();
        for k in 1..=lift_bound {
            if k >= n {
                for f in &level {
                    span.insert(to_row(f));
                }
            }
            if k == lift_bound || level.is_empty() {
                break;
            }
            let mut next: Echelon<Word> = Echelon::new(field);
            for v in &level {
                for x in &letters {
                    let b = reducer.bracket(v, x)?;
                    next.insert(to_row(&reducer.reduce(&b)));
                    if next.rank() > budget.max_level_rank {
                        return Err(Error::BudgetExceeded(format!(
                            "lower central level {} exceeds {} elements",
                            k + 1,
                            budget.max_level_rank
                        )));
                    }
                }
            }
            level = next
                .rows()
                .map(|r| LieElement::from_terms(field, r.iter().map(|(w, c)| (w.clone(), c.clone()))))
                .collect::<Result<_>>()?;
        }
        Ok(LcsSpan { n, lift_bound, span })
    }

    pub fn dimension(&self) -> usize {
        self.span.rank()
    }

    pub fn verdict(&self, g: &GsBasis, f: &LieElement) -> LcsVerdict {
        let nf = g.reduce(f);
        if self.span.contains(to_row(&nf)) {
            LcsVerdict::Member
        } else if nf.degree() > self.lift_bound {
            LcsVerdict::NotProven
        } else {
            LcsVerdict::NonMemberAtBound
        }
    }
}

/// Whether `f` lies in the `n`-th lower central term, as far as brackets of
/// at most `lift_bound` generators can tell.
pub fn lcs_membership(g: &GsBasis, f: &LieElement, n: usize, lift_bound: usize) -> Result<LcsVerdict> {
    Ok(LcsSpan::build(g, n, lift_bound, LcsBudget::default())?.verdict(g, f))
}

/// `max(|r̄| − shortest lower word)` over relators with lower terms, at least 1.
pub fn bound_constant(relators: &[LieElement]) -> usize {
    relators
        .iter()
        .filter_map(|r| {
            let lead = r.leading_word()?.len();
            let lowest = r.terms().rev().skip(1).map(|(w, _)| w.len()).min()?;
            Some(lead - lowest)
        })
        .max()
        .unwrap_or(1)
        .max(1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub word: Word,
    pub length: usize,
    pub n: usize,
    pub verdict: LcsVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub c: usize,
    pub lift_bound: usize,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn all_non_member(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == LcsVerdict::NonMemberAtBound)
    }
}

/// For every irreducible word of degree `ℓ <= d`, tests membership in
/// `L^n` with `n = (C + 1)·ℓ + 1`.
pub fn residual_nilpotence_check(g: &GsBasis, d: usize, lift_bound: usize) -> Result<BoundReport> {
    if g.presentation().metadata().get("construction").map(String::as_str) != Some("rips") {
        return Err(Error::InvalidInput("expected the output of the Rips construction".into()));
    }
    let c = bound_constant(g.relators());
    let field = g.field();
    let mut spans: BTreeMap<usize, LcsSpan> = BTreeMap::new();
    let mut entries = Vec::new();
    for w in g.irreducible_words(d)? {
        let n = (c + 1) * w.len() + 1;
        if let alloc::collections::btree_map::Entry::Vacant(e) = spans.entry(n) {
            e.insert(LcsSpan::build(g, n, lift_bound, LcsBudget::default())?);
        }
        let verdict = spans[&n].verdict(g, &LieElement::basis(w.clone(), field)?);
        entries.push(BoundEntry {
            length: w.len(),
            word: w,
            n,
            verdict,
        });
    }
    Ok(BoundReport { c, lift_bound, entries })
}



#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L1Failure {
    pub u: Word,
    pub j: Letter,
    pub expected: Word,
    pub got: Option<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L1Report {
    pub samples: usize,
    pub passes: usize,
    pub seed: u64,
    pub failures: Vec<L1Failure>,
}

fn meta_usize(g: &GsBasis, key: &str) -> Result<usize> {
    g.presentation()
        .metadata()
        .get(key)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::InvalidInput(format!("missing `{key}` in construction metadata")))
}

/// Random regular irreducible words `u = u₀ h_{i₁}⋯h_{i_k}` and `j < i_k`:
/// the leading word of the normal form of `[u, h_j]` must be `u` with `h_j`
/// inserted into the sorted tail.
pub fn lemma_l1_check(g: &GsBasis, samples: usize, seed: u64) -> Result<L1Report> {
    if g.presentation().metadata().get("construction").map(String::as_str) != Some("embed") {
        return Err(Error::InvalidInput("expected the output of the embedding construction".into()));
    }
    let nh = meta_usize(g, "N")?;
    let n = meta_usize(g, "n")?;
    if nh < 2 {
        return Err(Error::InvalidInput("need at least two h-letters to sample j < i_k".into()));
    }
    let total = (nh + 2 * n) as Letter;
    let nh_l = nh as Letter;
    let field = g.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reducer = g.reducer();
    let mut report = L1Report {
        samples,
        passes: 0,
        seed,
        failures: Vec::new(),
    };
    let max_attempts = samples.saturating_mul(2_000).max(2_000);
    let mut attempts = 0;
    let mut done = 0;
    while done < samples {
        attempts += 1;
        if attempts > max_attempts {
            return Err(Error::InvalidInput("could not construct admissible samples".into()));
        }
        let len0 = rng.gen_range(1..=3usize);
        let mut u0: Vec<Letter> = (0..len0).map(|_| rng.gen_range(0..total)).collect();
        if u0[len0 - 1] < nh_l {
            u0[len0 - 1] = rng.gen_range(nh_l..total);
        }
        let k = rng.gen_range(1..=3usize);
        let mut tail: Vec<Letter> = (0..k).map(|_| rng.gen_range(0..nh_l)).collect();
        tail.sort_unstable();
        let ik = tail[k - 1];
        if ik == 0 {
            continue;
        }
        let mut letters = u0.clone();
        letters.extend(&tail);
        let u = Word::new(letters)?;
        if !u.is_regular() || !reducer.is_irreducible(&u) {
            continue;
        }
        let j = rng.gen_range(0..ik);
        let t = tail.partition_point(|&i| i <= j);
        let mut expected = u0;
        expected.extend(&tail[..t]);
        expected.push(j);
        expected.extend(&tail[t..]);
        let expected = Word::new(expected)?;
        let b = reducer.bracket(&LieElement::basis(u.clone(), field)?, &LieElement::letter(j, field))?;
        let got = reducer.reduce(&b).leading_word().cloned();
        done += 1;
        if got.as_ref() == Some(&expected) {
            report.passes += 1;
        } else {
            report.failures.push(L1Failure { u, j, expected, got });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example, rips, Example};
    use crate::gsbasis::Presentation;
    use crate::scalar::FieldSpec;
    use crate::words::Alphabet;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn basis(p: &Presentation, d: usize) -> GsBasis {
        GsBasis::complete(p, d).unwrap()
    }

    fn yx(minus_x: bool) -> Presentation {
        let w = Word::new(alloc::vec![1, 0]).unwrap();
        let mut r = LieElement::basis(w, Q).unwrap();
        if minus_x {
            r = r.sub(&LieElement::letter(0, Q)).unwrap();
        }
        Presentation::new(Alphabet::new(["x", "y"]).unwrap(), Q, alloc::vec![r]).unwrap()
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert(&basis(&yx(true), 3), 3).unwrap().dims, [2, 0, 0]);
        let free = Presentation::free(Alphabet::new(["a", "b"]).unwrap(), Q);
        assert_eq!(hilbert(&basis(&free, 6), 6).unwrap().dims, [2, 1, 2, 3, 6, 9]);
        let v = basis(&example(Example::V, Q).unwrap(), 8);
        assert_eq!(hilbert(&v, 4).unwrap().dims, [3, 3, 8, 18]);
    }

    #[test]
    fn centers() {
        let ab = basis(&yx(false), 4);
        assert_eq!(center_truncated(&ab, 0, 2).unwrap(), [Word::letter(1)]);
        let free = basis(&Presentation::free(Alphabet::new(["b", "a"]).unwrap(), Q), 4);
        assert!(center_truncated(&free, 0, 2).unwrap().is_empty());
        assert!(center_truncated(&free, 1, 2).is_err());
    }

    #[test]
    fn homology_examples() {
        let v = basis(&example(Example::V, Q).unwrap(), 8);
        let h = homology_ranks(&v).unwrap();
        assert_eq!((h.h1, h.h2), (0, 0));
        let ab = basis(&yx(false), 4);
        let h = homology_ranks(&ab).unwrap();
        assert_eq!((h.h1, h.h2), (2, 1));
        let heis = basis(&example(Example::Heisenberg, Q).unwrap(), 4);
        assert!(matches!(homology_ranks(&heis), Err(Error::NotOverlapFree)));
    }

    #[test]
    fn lcs_examples() {
        let free = basis(&Presentation::free(Alphabet::new(["b", "a"]).unwrap(), Q), 8);
        let a = LieElement::letter(1, Q);
        let ab = LieElement::basis(Word::new(alloc::vec![1, 0]).unwrap(), Q).unwrap();
        assert_eq!(lcs_membership(&free, &a, 1, 4).unwrap(), LcsVerdict::Member);
        assert_eq!(lcs_membership(&free, &ab, 2, 4).unwrap(), LcsVerdict::Member);
        for bound in 2..6 {
            assert_eq!(lcs_membership(&free, &a, 2, bound).unwrap(), LcsVerdict::NonMemberAtBound);
        }
    }

    #[test]
    fn rips_bound_constant() {
        let q = Presentation::new(
            Alphabet::new(["x1", "x2"]).unwrap(),
            Q,
            alloc::vec![LieElement::basis(Word::new(alloc::vec![1, 0]).unwrap(), Q).unwrap()],
        )
        .unwrap();
        let g = rips(&q).unwrap();
        assert_eq!(bound_constant(&g.relators()[..1]), 3);
        assert_eq!(bound_constant(g.relators()), 7);
        let report = residual_nilpotence_check(&g, 2, 8).unwrap();
        assert!(report.all_non_member());
        assert!(!report.entries.is_empty());
    }
}
