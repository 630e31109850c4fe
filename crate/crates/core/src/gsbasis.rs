//! Gröbner–Shirshov bases: lifting relators to prescribed leading words,
//! reduction to normal form, compositions, verification and bounded
//! completion.
//!
//! Reduction always rewrites the deg-lex greatest reducible word first. When
//! several relators apply it uses the one with the greatest leading word, at
//! its leftmost occurrence, so normal forms are reproducible.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::freelie::{BracketMemo, LieElement};
use crate::scalar::{FieldSpec, Scalar};
use crate::words::{
    enumerate_regular, find_occurrences, inclusions, lex_cmp, overlaps, standard_split, Alphabet,
    Letter, Word,
};

/// Generators, field and monic relators, plus free-form named parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    field: FieldSpec,
    relators: Vec<LieElement>,
    metadata: BTreeMap<String, String>,
}

impl Presentation {
    /// Makes every relator monic; rejects zero relators, foreign letters and
    /// mismatched fields.
    pub fn new(alphabet: Alphabet, field: FieldSpec, relators: Vec<LieElement>) -> Result<Self> {
        let mut monic = Vec::with_capacity(relators.len());
        for r in relators {
            if r.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), r.field().to_string()));
            }
            if r.is_zero() {
                return Err(Error::ZeroElement);
            }
            if let Some(m) = r.max_letter() {
                if m as usize >= alphabet.len() {
                    return Err(Error::InvalidWord(format!("letter index {m} outside the alphabet")));
                }
            }
            monic.push(r.make_monic()?);
        }
        Ok(Presentation {
            alphabet,
            field,
            relators: monic,
            metadata: BTreeMap::new(),
        })
    }

    pub fn free(alphabet: Alphabet, field: FieldSpec) -> Self {
        Presentation {
            alphabet,
            field,
            relators: Vec::new(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn relators(&self) -> &[LieElement] {
        &self.relators
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.relators
            .iter()
            .map(|r| r.leading_word().expect("relators are nonzero").clone())
            .collect()
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    pub fn set_metadata(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.metadata.insert(key.into(), value.into());
    }

    pub fn with_metadata(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.set_metadata(key, value);
        self
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relators.iter().all(LieElement::is_homogeneous)
    }

    pub(crate) fn with_relators(&self, relators: Vec<LieElement>) -> Self {
        Presentation {
            alphabet: self.alphabet.clone(),
            field: self.field,
            relators,
            metadata: self.metadata.clone(),
        }
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.alphabet
            .index(name)
            .ok_or_else(|| Error::InvalidWord(format!("unknown letter `{name}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Step {
    /// `p ↦ [p, (t)]`
    Right(Word),
    /// `p ↦ [(t), p]`
    Left(Word),
}

/// The bracketing path of the regular bracketing of `w` from the node covering
/// `target` up to the root, if such a node exists.
fn tree_path(w: &[Letter], offset: usize, target: (usize, usize)) -> Option<Vec<Step>> {
    if (offset, offset + w.len()) == target {
        return Some(Vec::new());
    }
    if w.len() == 1 {
        return None;
    }
    let (u, v) = standard_split(w);
    let split = offset + u.len();
    if target.1 <= split {
        let mut path = tree_path(u, offset, target)?;
        path.push(Step::Right(Word::from_slice(v)));
        Some(path)
    } else if target.0 >= split {
        let mut path = tree_path(v, split, target)?;
        path.push(Step::Left(Word::from_slice(u)));
        Some(path)
    } else {
        None
    }
}

/// Breadth-first search for a chain of one-sided extensions by regular
/// factors, each satisfying the leading-word condition of `[f, g]` with
/// `f̄ >_lex ḡ`.
fn search_path(w: &[Letter], target: (usize, usize)) -> Option<Vec<Step>> {
    let n = w.len();
    let mut parent: BTreeMap<(usize, usize), ((usize, usize), Step)> = BTreeMap::new();
    let mut queue = VecDeque::new();
    queue.push_back(target);
    let mut seen = BTreeSet::new();
    seen.insert(target);
    while let Some((i, j)) = queue.pop_front() {
        if (i, j) == (0, n) {
            let mut steps = Vec::new();
            let mut cur = (0, n);
            while cur != target {
                let (prev, step) = parent.remove(&cur).expect("path recorded");
                steps.push(step);
                cur = prev;
            }
            steps.reverse();
            return Some(steps);
        }
        let current = &w[i..j];
        for k in j + 1..=n {
            let t = &w[j..k];
            if crate::words::is_regular(t) && lex_cmp(current, t) == Ordering::Greater && seen.insert((i, k)) {
                parent.insert((i, k), ((i, j), Step::Right(Word::from_slice(t))));
                queue.push_back((i, k));
            }
        }
        for h in (0..i).rev() {
            let t = &w[h..i];
            if crate::words::is_regular(t) && lex_cmp(t, current) == Ordering::Greater && seen.insert((h, j)) {
                parent.insert((h, j), ((i, j), Step::Left(Word::from_slice(t))));
                queue.push_back((h, j));
            }
        }
    }
    None
}

fn special_bracketing(w: &Word, pos: usize, len: usize) -> Option<Vec<Step>> {
    let target = (pos, pos + len);
    tree_path(w.letters(), 0, target).or_else(|| search_path(w.letters(), target))
}

fn lift_with(r: &LieElement, w: &Word, pos: usize, memo: &mut BracketMemo) -> Result<LieElement> {
    let s = r.leading_word().ok_or(Error::ZeroElement)?;
    if !r.is_monic() {
        return Err(Error::InvalidInput("lift needs a monic relator".into()));
    }
    if !w.is_regular() {
        return Err(Error::NotRegular(format!("{:?}", w.letters())));
    }
    let l = w.letters();
    if pos + s.len() > l.len() || &l[pos..pos + s.len()] != s.letters() {
        return Err(Error::InvalidOccurrence(pos));
    }
    if s == w {
        return Ok(r.clone());
    }
    let plan = special_bracketing(w, pos, s.len())
        .ok_or_else(|| Error::LiftFailed(format!("{:?}", w.letters())))?;
    let field = r.field();
    let mut p = r.clone();
    for step in plan {
        p = match step {
            Step::Right(t) => p.bracket_unchecked(&LieElement::basis(t, field)?, memo),
            Step::Left(t) => LieElement::basis(t, field)?.bracket_unchecked(&p, memo),
        };
    }
    if p.leading_word() != Some(w) {
        return Err(Error::LiftFailed(format!("{:?}", w.letters())));
    }
    p.make_monic()
}

/// A monic element of the ideal generated by `r` whose leading word is `w`,
/// where `r̄` occurs in `w` at `occurrence`.
pub fn lift(r: &LieElement, w: &Word, occurrence: usize) -> Result<LieElement> {
    lift_with(r, w, occurrence, &mut BracketMemo::new())
}

/// Normal-form computation against a fixed list of monic relators, with
/// caches for basis brackets and lifts.
#[derive(Clone, Debug)]
pub struct Reducer {
    relators: Vec<LieElement>,
    leading: Vec<Word>,
    /// relator indices, greatest leading word first
    order: Vec<usize>,
    memo: BracketMemo,
    lifts: BTreeMap<(usize, Word, usize), LieElement>,
}

impl Reducer {
    pub fn new(relators: Vec<LieElement>) -> Self {
        Self::with_memo(relators, BracketMemo::new())
    }

    pub fn with_memo(relators: Vec<LieElement>, memo: BracketMemo) -> Self {
        let relators: Vec<LieElement> = relators
            .into_iter()
            .map(|r| r.make_monic().expect("relators are nonzero"))
            .collect();
        let leading: Vec<Word> = relators
            .iter()
            .map(|r| r.leading_word().expect("nonzero").clone())
            .collect();
        let mut order: Vec<usize> = (0..relators.len()).collect();
        order.sort_by(|&a, &b| leading[b].cmp(&leading[a]).then(a.cmp(&b)));
        Reducer {
            relators,
            leading,
            order,
            memo,
            lifts: BTreeMap::new(),
        }
    }

    pub fn relators(&self) -> &[LieElement] {
        &self.relators
    }

    pub fn memo(&mut self) -> &mut BracketMemo {
        &mut self.memo
    }

    pub fn into_memo(self) -> BracketMemo {
        self.memo
    }

    /// `(relator index, position)` that rewrites `w`, if `w` is reducible.
    pub fn find_reducer(&self, w: &Word) -> Option<(usize, usize)> {
        self.order.iter().find_map(|&i| {
            find_occurrences(w.letters(), self.leading[i].letters())
                .first()
                .map(|&pos| (i, pos))
        })
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_reducer(w).is_none()
    }

    pub fn lift(&mut self, index: usize, w: &Word, pos: usize) -> Result<LieElement> {
        let key = (index, w.clone(), pos);
        if let Some(p) = self.lifts.get(&key) {
            return Ok(p.clone());
        }
        let p = lift_with(&self.relators[index], w, pos, &mut self.memo)?;
        self.lifts.insert(key, p.clone());
        Ok(p)
    }

    /// Fully reduced representative: every word in the support is irreducible.
    pub fn reduce(&mut self, f: &LieElement) -> LieElement {
        let mut rest = f.clone();
        let mut out = LieElement::zero(f.field());
        while let Some((w, c)) = rest.pop_leading() {
            match self.find_reducer(&w) {
                None => out.add_term(w, &c),
                Some((i, pos)) => {
                    let p = self
                        .lift(i, &w, pos)
                        .expect("special bracketing exists for every regular word");
                    let neg = -&c;
                    for (u, d) in p.terms().rev().skip(1) {
                        rest.add_term(u.clone(), &(&neg * d));
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&mut self, f: &LieElement, g: &LieElement) -> Result<LieElement> {
        f.bracket_with(g, &mut self.memo)
    }
}

/// Reduces `f` against the relator list.
pub fn reduce(f: &LieElement, relators: &[LieElement]) -> LieElement {
    Reducer::new(relators.to_vec()).reduce(f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CompositionKind {
    /// overlap of `f̄ = ab` and `ḡ = bc` at `abc`
    Intersection,
    /// `ḡ` occurs inside `f̄`
    Inclusion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionItem {
    pub left: usize,
    pub right: usize,
    pub kind: CompositionKind,
    pub ambiguity: Word,
    pub element: LieElement,
    pub normal_form: LieElement,
}

/// Ambiguities of `(f, g)` without the algebra: `(kind, word, position of ḡ)`.
fn ambiguities(fl: &Word, gl: &Word) -> Vec<(CompositionKind, Word, usize)> {
    let mut out = Vec::new();
    for ov in overlaps(fl, gl) {
        if ov.regular {
            let pos = fl.len() - ov.shared;
            out.push((CompositionKind::Intersection, ov.word, pos));
        }
    }
    for pos in inclusions(fl, gl) {
        out.push((CompositionKind::Inclusion, fl.clone(), pos));
    }
    out
}

fn composition_element(
    f: &LieElement,
    g: &LieElement,
    kind: CompositionKind,
    u: &Word,
    pos: usize,
    memo: &mut BracketMemo,
) -> Result<LieElement> {
    let lg = lift_with(g, u, pos, memo)?;
    let lf = match kind {
        CompositionKind::Intersection => lift_with(f, u, 0, memo)?,
        CompositionKind::Inclusion => f.clone(),
    };
    lf.sub(&lg)
}

/// All compositions of the monic elements `f` and `g` (in this order), with
/// normal forms taken with respect to `{f, g}`.
pub fn compositions(f: &LieElement, g: &LieElement) -> Result<Vec<CompositionItem>> {
    let f = f.make_monic()?;
    let g = g.make_monic()?;
    let fl = f.leading_word().expect("nonzero").clone();
    let gl = g.leading_word().expect("nonzero").clone();
    let pair = if f == g { vec![f.clone()] } else { vec![f.clone(), g.clone()] };
    let mut reducer = Reducer::new(pair);
    let mut out = Vec::new();
    for (kind, u, pos) in ambiguities(&fl, &gl) {
        let element = composition_element(&f, &g, kind, &u, pos, reducer.memo())?;
        let normal_form = reducer.reduce(&element);
        out.push(CompositionItem {
            left: 0,
            right: 1,
            kind,
            ambiguity: u,
            element,
            normal_form,
        });
    }
    Ok(out)
}

/// Outcome of a composition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsReport {
    /// every checked composition reduced to zero
    pub solvable: bool,
    /// solvable and nothing left unchecked
    pub certified: bool,
    pub overlap_free: bool,
    pub checked_degree: usize,
    pub checked: usize,
    /// `(left, right, ambiguity word)` beyond the degree bound
    pub unchecked: Vec<(usize, usize, Word)>,
    pub failures: Vec<CompositionItem>,
}

fn check_reduced(relators: &[LieElement]) -> Result<Vec<Word>> {
    let mut leading = Vec::with_capacity(relators.len());
    for r in relators {
        if !r.is_monic() {
            return Err(Error::NotReduced("relator is not monic".into()));
        }
        leading.push(r.leading_word().expect("monic is nonzero").clone());
    }
    for (i, a) in leading.iter().enumerate() {
        for (j, b) in leading.iter().enumerate() {
            if i != j && !find_occurrences(b.letters(), a.letters()).is_empty() {
                return Err(Error::NotReduced(format!(
                    "leading word of relator {i} occurs in that of relator {j}"
                )));
            }
        }
    }
    Ok(leading)
}

/// Checks that every intersection composition with ambiguity word of length
/// at most `degree_bound` reduces to zero. The input must be reduced.
pub fn is_gs_basis(relators: &[LieElement], degree_bound: usize) -> Result<GsReport> {
    let leading = check_reduced(relators)?;
    let mut reducer = Reducer::new(relators.to_vec());
    check_with(&mut reducer, &leading, degree_bound)
}

fn check_with(reducer: &mut Reducer, leading: &[Word], degree_bound: usize) -> Result<GsReport> {
    let relators = reducer.relators().to_vec();
    let mut report = GsReport {
        solvable: true,
        certified: true,
        overlap_free: true,
        checked_degree: degree_bound,
        checked: 0,
        unchecked: Vec::new(),
        failures: Vec::new(),
    };
    for i in 0..relators.len() {
        for j in 0..relators.len() {
            for ov in overlaps(&leading[i], &leading[j]) {
                if !ov.regular {
                    continue;
                }
                report.overlap_free = false;
                if ov.word.len() > degree_bound {
                    report.unchecked.push((i, j, ov.word));
                    continue;
                }
                let pos = leading[i].len() - ov.shared;
                let element = composition_element(
                    &relators[i],
                    &relators[j],
                    CompositionKind::Intersection,
                    &ov.word,
                    pos,
                    reducer.memo(),
                )?;
                let normal_form = reducer.reduce(&element);
                report.checked += 1;
                if !normal_form.is_zero() {
                    report.failures.push(CompositionItem {
                        left: i,
                        right: j,
                        kind: CompositionKind::Intersection,
                        ambiguity: ov.word,
                        element,
                        normal_form,
                    });
                }
            }
        }
    }
    report.solvable = report.failures.is_empty();
    report.certified = report.solvable && report.unchecked.is_empty();
    Ok(report)
}

/// Makes relators monic, drops those that reduce to zero, and removes
/// inclusions among leading words; tails are reduced as well. The result is
/// sorted by leading word.
pub fn interreduce(relators: &[LieElement], memo: &mut BracketMemo) -> Result<Vec<LieElement>> {
    let mut pending: Vec<LieElement> = Vec::new();
    for r in relators {
        if r.is_zero() {
            return Err(Error::ZeroElement);
        }
        pending.push(r.make_monic()?);
    }
    let mut basis: Vec<LieElement> = Vec::new();
    // smallest leading word first
    pending.sort_by(|a, b| b.leading_word().cmp(&a.leading_word()));
    while let Some(r) = pending.pop() {
        let mut reducer = Reducer::with_memo(basis.clone(), core::mem::take(memo));
        let nf = reducer.reduce(&r);
        *memo = reducer.into_memo();
        if nf.is_zero() {
            continue;
        }
        let nf = nf.make_monic()?;
        let lw = nf.leading_word().expect("nonzero").clone();
        let mut kept = Vec::with_capacity(basis.len() + 1);
        for b in basis {
            if b.leading_word().expect("nonzero").contains(&lw) {
                pending.push(b);
            } else {
                kept.push(b);
            }
        }
        kept.push(nf);
        basis = kept;
        pending.sort_by(|a, b| b.leading_word().cmp(&a.leading_word()));
    }
    // tail reduction
    for i in 0..basis.len() {
        let others: Vec<LieElement> = basis
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, b)| b.clone())
            .collect();
        let mut reducer = Reducer::with_memo(others, core::mem::take(memo));
        basis[i] = reducer.reduce(&basis[i]);
        *memo = reducer.into_memo();
    }
    basis.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()));
    Ok(basis)
}

/// Caps on completion work.
#[derive(Clone, Copy, Debug)]
pub struct CompletionBudget {
    pub max_relators: usize,
    pub max_rounds: usize,
}

impl Default for CompletionBudget {
    fn default() -> Self {
        CompletionBudget {
            max_relators: 400,
            max_rounds: 5_000,
        }
    }
}

/// A relator set together with its certification data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsBasis {
    presentation: Presentation,
    reduced: bool,
    overlap_free: bool,
    solvable: bool,
    checked_degree: usize,
    certified: bool,
}

impl GsBasis {
    /// Interreduces the relators, then checks compositions up to `degree_bound`
    /// without adding anything.
    pub fn check(p: &Presentation, degree_bound: usize) -> Result<(GsBasis, GsReport)> {
        let mut memo = BracketMemo::new();
        let relators = interreduce(p.relators(), &mut memo)?;
        let leading = check_reduced(&relators)?;
        let mut reducer = Reducer::with_memo(relators.clone(), memo);
        let report = check_with(&mut reducer, &leading, degree_bound)?;
        let basis = GsBasis {
            presentation: p.with_relators(relators),
            reduced: true,
            overlap_free: report.overlap_free,
            solvable: report.solvable,
            checked_degree: degree_bound,
            certified: report.certified,
        };
        Ok((basis, report))
    }

    /// Shirshov completion up to `degree_bound`.
    pub fn complete(p: &Presentation, degree_bound: usize) -> Result<GsBasis> {
        Self::complete_with(p, degree_bound, CompletionBudget::default())
    }

    pub fn complete_with(p: &Presentation, degree_bound: usize, budget: CompletionBudget) -> Result<GsBasis> {
        let mut memo = BracketMemo::new();
        let mut basis = interreduce(p.relators(), &mut memo)?;
        let mut next_id: u64 = 0;
        let mut ids: Vec<u64> = basis
            .iter()
            .map(|_| {
                next_id += 1;
                next_id
            })
            .collect();
        let mut done: BTreeSet<(u64, u64, Word)> = BTreeSet::new();
        let mut rounds = 0usize;
        loop {
            rounds += 1;
            if rounds > budget.max_rounds {
                return Err(Error::BudgetExceeded(format!(
                    "completion exceeded {} rounds",
                    budget.max_rounds
                )));
            }
            let leading: Vec<Word> = basis
                .iter()
                .map(|r| r.leading_word().expect("nonzero").clone())
                .collect();
            let mut queue: Vec<(usize, Word, usize, usize, usize)> = Vec::new();
            for i in 0..basis.len() {
                for j in 0..basis.len() {
                    for ov in overlaps(&leading[i], &leading[j]) {
                        if ov.regular && ov.word.len() <= degree_bound {
                            let pos = leading[i].len() - ov.shared;
                            queue.push((ov.word.len(), ov.word, i, j, pos));
                        }
                    }
                }
            }
            queue.sort_by(|a, b| {
                a.0.cmp(&b.0)
                    .then_with(|| lex_cmp(a.1.letters(), b.1.letters()))
                    .then_with(|| (a.2, a.3, a.4).cmp(&(b.2, b.3, b.4)))
            });
            let mut reducer = Reducer::with_memo(basis.clone(), core::mem::take(&mut memo));
            let mut found: Option<LieElement> = None;
            for (_, u, i, j, pos) in queue {
                let key = (ids[i], ids[j], u.clone());
                if done.contains(&key) {
                    continue;
                }
                let element = composition_element(
                    &basis[i],
                    &basis[j],
                    CompositionKind::Intersection,
                    &u,
                    pos,
                    reducer.memo(),
                )?;
                let nf = reducer.reduce(&element);
                done.insert(key);
                if !nf.is_zero() {
                    found = Some(nf);
                    break;
                }
            }
            memo = reducer.into_memo();
            match found {
                Some(nf) => {
                    let mut all = basis.clone();
                    all.push(nf);
                    let new_basis = interreduce(&all, &mut memo)?;
                    if new_basis.len() > budget.max_relators {
                        return Err(Error::BudgetExceeded(format!(
                            "completion exceeded {} relators",
                            budget.max_relators
                        )));
                    }
                    ids = new_basis
                        .iter()
                        .map(|r| match basis.iter().position(|b| b == r) {
                            Some(k) => ids[k],
                            None => {
                                next_id += 1;
                                next_id
                            }
                        })
                        .collect();
                    basis = new_basis;
                }
                None => {
                    // full re-verification; memoized verdicts were obtained
                    // against earlier bases
                    let mut reducer = Reducer::with_memo(basis.clone(), core::mem::take(&mut memo));
                    let report = check_with(&mut reducer, &leading, degree_bound)?;
                    memo = reducer.into_memo();
                    if let Some(item) = report.failures.into_iter().next() {
                        let mut all = basis.clone();
                        all.push(item.normal_form);
                        basis = interreduce(&all, &mut memo)?;
                        ids = basis
                            .iter()
                            .map(|_| {
                                next_id += 1;
                                next_id
                            })
                            .collect();
                        continue;
                    }
                    return Ok(GsBasis {
                        presentation: p.with_relators(basis),
                        reduced: true,
                        overlap_free: report.overlap_free,
                        solvable: true,
                        checked_degree: degree_bound,
                        certified: report.certified,
                    });
                }
            }
        }
    }

    pub(crate) fn from_report(p: Presentation, report: &GsReport) -> GsBasis {
        Self::from_parts(
            p,
            report.overlap_free,
            report.solvable,
            report.checked_degree,
            report.certified,
        )
    }

    pub(crate) fn from_parts(
        presentation: Presentation,
        overlap_free: bool,
        solvable: bool,
        checked_degree: usize,
        certified: bool,
    ) -> GsBasis {
        GsBasis {
            presentation,
            reduced: true,
            overlap_free,
            solvable,
            checked_degree,
            certified,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn into_presentation(self) -> Presentation {
        self.presentation
    }

    pub fn relators(&self) -> &[LieElement] {
        self.presentation.relators()
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.presentation.alphabet()
    }

    pub fn field(&self) -> FieldSpec {
        self.presentation.field()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_overlap_free(&self) -> bool {
        self.overlap_free
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn is_solvable(&self) -> bool {
        self.solvable
    }

    pub fn checked_degree(&self) -> usize {
        self.checked_degree
    }

    pub fn set_metadata(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.presentation.set_metadata(key, value);
    }

    /// Irreducible words of degree `<= d` form a basis of the quotient in
    /// those degrees. Partial certification only counts for homogeneous
    /// relators: an unchecked high-degree composition of inhomogeneous
    /// relators may still collapse low degrees.
    pub fn certified_up_to(&self, d: usize) -> bool {
        self.certified
            || (self.solvable && self.checked_degree >= d && self.presentation.is_homogeneous())
    }

    fn require(&self, d: usize) -> Result<()> {
        if self.certified_up_to(d) {
            Ok(())
        } else {
            Err(Error::Uncertified(d))
        }
    }

    pub fn reducer(&self) -> Reducer {
        Reducer::new(self.relators().to_vec())
    }

    pub fn reduce(&self, f: &LieElement) -> LieElement {
        self.reducer().reduce(f)
    }

    /// Regular words of degree `<= d` avoiding every leading word, deg-lex sorted.
    pub fn irreducible_words(&self, d: usize) -> Result<Vec<Word>> {
        self.require(d)?;
        let letters: Vec<Letter> = self.alphabet().letters().collect();
        Ok(enumerate_regular(&letters, d, &self.presentation.leading_words()))
    }

    /// Irreducible words restricted to a subset of the letters.
    pub fn irreducible_words_in(&self, letters: &[Letter], d: usize) -> Result<Vec<Word>> {
        self.require(d)?;
        Ok(enumerate_regular(letters, d, &self.presentation.leading_words()))
    }

    pub fn quotient_bracket(&self, f: &LieElement, g: &LieElement) -> Result<LieElement> {
        self.require(f.degree() + g.degree())?;
        let mut r = self.reducer();
        let b = r.bracket(f, g)?;
        Ok(r.reduce(&b))
    }

    pub fn equal_mod(&self, f: &LieElement, g: &LieElement) -> Result<bool> {
        self.require(f.degree().max(g.degree()))?;
        Ok(self.reduce(&f.sub(g)?).is_zero())
    }

    /// Brackets of the first `n` irreducible basis words, expressed in the
    /// irreducible basis of degree `<= d`.
    pub fn structure_constants(&self, n: usize, d: usize) -> Result<StructureConstants> {
        let basis = self.irreducible_words(d)?;
        if n > basis.len() {
            return Err(Error::DegreeEscape(format!(
                "only {} irreducible words up to degree {d}",
                basis.len()
            )));
        }
        let index: BTreeMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let field = self.field();
        let mut reducer = self.reducer();
        let mut table = Vec::new();
        for i in 0..n {
            for j in 0..i {
                let f = LieElement::basis(basis[i].clone(), field)?;
                let g = LieElement::basis(basis[j].clone(), field)?;
                let b = reducer.bracket(&f, &g)?;
                let nf = reducer.reduce(&b);
                let mut row = Vec::new();
                for (w, c) in nf.terms() {
                    let t = *index.get(w).ok_or_else(|| {
                        Error::DegreeEscape(format!("bracket of basis words {i} and {j} has degree {}", w.len()))
                    })?;
                    row.push((t, c.clone()));
                }
                table.push((i, j, row));
            }
        }
        Ok(StructureConstants { basis, n, table })
    }
}

/// `[e_i, e_j] = Σ_t c_t e_t` for `i > j`, over an irreducible-word basis.
/// `(i, j, [(k, c)])`: the bracket of basis words `i > j` reduces to `sum c e_k`.
pub type StructureEntry = (usize, usize, Vec<(usize, Scalar)>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub basis: Vec<Word>,
    pub n: usize,
    pub table: Vec<StructureEntry>,
}
