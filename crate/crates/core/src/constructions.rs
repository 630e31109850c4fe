//! Presentations built from other presentations: Rips-type quotients,
//! SQ-universality embeddings, the embedding construction for pairs of
//! nilpotent algebras, the `H̃` transform, free products and named fixtures.
//!
//! Every generator re-verifies its output with [`is_gs_basis`] instead of
//! trusting the schema.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::freelie::LieElement;
use crate::gsbasis::{is_gs_basis, GsBasis, Presentation};
use crate::linalg::{Echelon, SparseRow};
use crate::scalar::{FieldSpec, Scalar};
use crate::words::{inclusions, overlaps, Alphabet, Letter, Monomial, Word};

fn basis(letters: Vec<Letter>, field: FieldSpec) -> Result<LieElement> {
    LieElement::basis(Word::new(letters)?, field)
}

/// `a a b^i a b` as letters.
fn wi_letters(a: Letter, b: Letter, i: usize) -> Vec<Letter> {
    let mut v = vec![a, a];
    v.extend(core::iter::repeat_n(b, i));
    v.extend([a, b]);
    v
}

/// Checks every composition of the assembled relators and wraps the result.
fn verified(p: Presentation) -> Result<GsBasis> {
    let report = is_gs_basis(p.relators(), usize::MAX)?;
    Ok(GsBasis::from_report(p, &report))
}

fn check_names(existing: &[String], reserved: &[&str]) -> Result<()> {
    match reserved.iter().find(|r| existing.iter().any(|n| n == *r)) {
        Some(r) => Err(Error::NameCollision(r.to_string())),
        None => Ok(()),
    }
}

/// Rips-type presentation over `Q`'s generators plus `b < a`.
pub fn rips(q_pres: &Presentation) -> Result<GsBasis> {
    let names = q_pres.alphabet().names();
    check_names(names, &["a", "b"])?;
    let field = q_pres.field();
    let d = names.len();
    let longest = q_pres.relators().iter().map(LieElement::degree).max().unwrap_or(0);
    let q = (2 * d).max(1 + longest);
    let mut all: Vec<String> = names.to_vec();
    all.extend(["b".to_string(), "a".to_string()]);
    let alphabet = Alphabet::new(all)?;
    let (b, a) = (d as Letter, d as Letter + 1);
    let mut relators = Vec::new();
    for i in 1..=d {
        let x = (i - 1) as Letter;
        let lead = basis(wi_letters(a, b, i), field)?;
        relators.push(lead.sub(&basis(vec![a, x], field)?)?);
    }
    for i in 1..=d {
        let x = (i - 1) as Letter;
        let lead = basis(wi_letters(a, b, d + i), field)?;
        relators.push(lead.sub(&basis(vec![b, x], field)?)?);
    }
    for (i, r) in q_pres.relators().iter().enumerate() {
        let lead = basis(wi_letters(a, b, q + i + 1), field)?;
        relators.push(lead.sub(r)?);
    }
    let p = Presentation::new(alphabet, field, relators)?
        .with_metadata("construction", "rips")
        .with_metadata("q", q.to_string())
        .with_metadata("d", d.to_string())
        .with_metadata("m", q_pres.relators().len().to_string());
    verified(p)
}

/// Embeds `B` (given by a certified basis on `e_1 < e_2 < …`) into a
/// two-generated quotient: `S ∪ {a²bⁱab : i ≤ q+m} ∪ {a²b^{q+m+i}ab − e_i : i ≤ n}`.
pub fn sq_embedding(b_pres: &GsBasis, q: usize, m: usize, n: usize) -> Result<GsBasis> {
    if !b_pres.is_certified() {
        return Err(Error::Uncertified(b_pres.checked_degree()));
    }
    let names = b_pres.alphabet().names();
    check_names(names, &["a", "b"])?;
    if n > names.len() {
        return Err(Error::InvalidInput(format!(
            "truncation {n} exceeds the {} generators",
            names.len()
        )));
    }
    let field = b_pres.field();
    let k = names.len();
    let mut all: Vec<String> = names.to_vec();
    all.extend(["b".to_string(), "a".to_string()]);
    let alphabet = Alphabet::new(all)?;
    let (b, a) = (k as Letter, k as Letter + 1);
    let mut relators = b_pres.relators().to_vec();
    for i in 1..=q + m {
        relators.push(basis(wi_letters(a, b, i), field)?);
    }
    for i in 1..=n {
        let lead = basis(wi_letters(a, b, q + m + i), field)?;
        relators.push(lead.sub(&LieElement::letter((i - 1) as Letter, field))?);
    }
    let p = Presentation::new(alphabet, field, relators)?
        .with_metadata("construction", "sq")
        .with_metadata("q", q.to_string())
        .with_metadata("m", m.to_string())
        .with_metadata("N", n.to_string());
    verified(p)
}

/// Which factor's letters come first in a free product.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ProductOrder {
    #[default]
    FirstBelow,
    SecondBelow,
}

/// Free product; the union of two Gröbner–Shirshov bases on disjoint
/// letters. Cross ambiguities are searched for, not assumed absent.
pub fn free_product(p1: &GsBasis, p2: &GsBasis, order: ProductOrder) -> Result<GsBasis> {
    let (low, high) = match order {
        ProductOrder::FirstBelow => (p1, p2),
        ProductOrder::SecondBelow => (p2, p1),
    };
    if low.field() != high.field() {
        return Err(Error::FieldMismatch(low.field().to_string(), high.field().to_string()));
    }
    check_names(
        low.alphabet().names(),
        &high.alphabet().names().iter().map(String::as_str).collect::<Vec<_>>(),
    )?;
    let shift = low.alphabet().len() as Letter;
    let mut names: Vec<String> = low.alphabet().names().to_vec();
    names.extend(high.alphabet().names().iter().cloned());
    let mut relators = low.relators().to_vec();
    relators.extend(high.relators().iter().map(|r| r.map_letters(|l| l + shift)));
    let lows: Vec<Word> = low.presentation().leading_words();
    let highs: Vec<Word> = high
        .presentation()
        .leading_words()
        .into_iter()
        .map(|w| w.map_letters(|l| l + shift))
        .collect();
    let crossing = lows.iter().any(|u| {
        highs.iter().any(|v| {
            !overlaps(u, v).is_empty()
                || !overlaps(v, u).is_empty()
                || !inclusions(u, v).is_empty()
                || !inclusions(v, u).is_empty()
        })
    });
    let mut p = Presentation::new(Alphabet::new(names)?, low.field(), relators)?;
    for (k, v) in low.presentation().metadata().iter().chain(high.presentation().metadata()) {
        if k != "construction" {
            p.set_metadata(k.clone(), v.clone());
        }
    }
    p.set_metadata("construction", "free-product");
    if crossing {
        return verified(p);
    }
    Ok(GsBasis::from_parts(
        p,
        low.is_overlap_free() && high.is_overlap_free(),
        low.is_solvable() && high.is_solvable(),
        low.checked_degree().min(high.checked_degree()),
        low.is_certified() && high.is_certified(),
    ))
}

/// Structure constants of a finite-dimensional Lie algebra on an ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    names: Vec<String>,
    field: FieldSpec,
    /// `[e_i, e_j]` for `i > j`
    coeffs: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>>,
}

type Vector = BTreeMap<usize, Scalar>;

fn axpy(acc: &mut Vector, c: &Scalar, v: &Vector) {
    crate::linalg::add_scaled_row(acc, c, v);
}

type IntEntry<'a> = (usize, usize, &'a [(usize, i64)]);

impl StructureTable {
    /// Abelian algebra on the given basis names.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>, field: FieldSpec) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        Alphabet::new(names.clone())?;
        if names.is_empty() {
            return Err(Error::InvalidInput("empty structure table".into()));
        }
        Ok(StructureTable {
            names,
            field,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Sets `[e_i, e_j] = Σ c_t e_t` (0-based indices); `[e_j, e_i]` follows.
    pub fn set_bracket(&mut self, i: usize, j: usize, terms: &[(usize, Scalar)]) -> Result<()> {
        let n = self.dimension();
        if i == j || i >= n || j >= n || terms.iter().any(|(t, _)| *t >= n) {
            return Err(Error::InvalidInput(format!("bad structure constant index ({i}, {j})")));
        }
        let mut v = Vector::new();
        for (t, c) in terms {
            if c.field() != self.field {
                return Err(Error::FieldMismatch(self.field.to_string(), c.field().to_string()));
            }
            let one: Vector = [(*t, self.field.one())].into_iter().collect();
            axpy(&mut v, c, &one);
        }
        let (key, v) = if i > j {
            ((i, j), v)
        } else {
            ((j, i), v.into_iter().map(|(t, c)| (t, -c)).collect())
        };
        if v.is_empty() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, v);
        }
        Ok(())
    }

    fn with_ints(mut self, entries: &[IntEntry<'_>]) -> Self {
        for (i, j, terms) in entries {
            let terms: Vec<(usize, Scalar)> = terms.iter().map(|&(t, c)| (t, self.field.from_i64(c))).collect();
            self.set_bracket(*i, *j, &terms).expect("fixture indices are valid");
        }
        self
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        match i.cmp(&j) {
            core::cmp::Ordering::Equal => Vector::new(),
            core::cmp::Ordering::Greater => self.coeffs.get(&(i, j)).cloned().unwrap_or_default(),
            core::cmp::Ordering::Less => self
                .coeffs
                .get(&(j, i))
                .map(|v| v.iter().map(|(t, c)| (*t, -c)).collect())
                .unwrap_or_default(),
        }
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::new();
        for (i, a) in x {
            for (j, b) in y {
                axpy(&mut out, &(a * b), &self.basis_bracket(*i, *j));
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vector {
        [(i, self.field.one())].into_iter().collect()
    }

    /// Fails on the first triple `i > j > k` violating the Jacobi identity.
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dimension();
        for i in 0..n {
            for j in 0..i {
                for k in 0..j {
                    let (ei, ej, ek) = (self.unit(i), self.unit(j), self.unit(k));
                    let mut s = self.bracket(&ei, &self.bracket(&ej, &ek));
                    let one = self.field.one();
                    axpy(&mut s, &one, &self.bracket(&ej, &self.bracket(&ek, &ei)));
                    axpy(&mut s, &one, &self.bracket(&ek, &self.bracket(&ei, &ej)));
                    if !s.is_empty() {
                        return Err(Error::JacobiFailure(i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        Ok(())
    }

    fn span(&self, vectors: impl IntoIterator<Item = Vector>) -> Echelon<usize> {
        let mut e = Echelon::new(self.field);
        for v in vectors {
            e.insert(v);
        }
        e
    }

    /// Dimensions of the lower central series terms until they stabilize.
    pub fn lower_central_dims(&self) -> Vec<usize> {
        let n = self.dimension();
        let mut dims = vec![n];
        let mut current: Vec<Vector> = (0..n).map(|i| self.unit(i)).collect();
        loop {
            let next: Vec<Vector> = (0..n)
                .flat_map(|i| current.iter().map(move |v| (i, v)))
                .map(|(i, v)| self.bracket(&self.unit(i), v))
                .collect();
            let e = self.span(next);
            let d = e.rank();
            if d == *dims.last().expect("nonempty") {
                return dims;
            }
            dims.push(d);
            if d == 0 {
                return dims;
            }
            current = e.rows().cloned().collect::<Vec<SparseRow<usize>>>();
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_dims().last() == Some(&0)
    }

    /// Whether basis element `index` lies in `[A, A]`.
    pub fn derived_contains(&self, index: usize) -> bool {
        let n = self.dimension();
        let e = self.span((0..n).flat_map(|i| (0..i).map(move |j| (i, j))).map(|(i, j)| self.basis_bracket(i, j)));
        e.contains(self.unit(index))
    }

    /// Relators `e_i e_j − Σ c_t e_t` for every `i > j`, over letters named
    /// after the basis.
    pub fn to_presentation(&self) -> Result<Presentation> {
        self.to_presentation_named(&self.names)
    }

    fn to_presentation_named(&self, names: &[String]) -> Result<Presentation> {
        let alphabet = Alphabet::new(names.to_vec())?;
        let relators = self.relators(0)?;
        Presentation::new(alphabet, self.field, relators)
    }

    /// Structure relators with basis element `t` mapped to letter `offset + t`.
    fn relators(&self, offset: Letter) -> Result<Vec<LieElement>> {
        let n = self.dimension();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..i {
                let mut r = basis(vec![offset + i as Letter, offset + j as Letter], self.field)?;
                for (t, c) in self.basis_bracket(i, j) {
                    r = r.sub(&LieElement::letter(offset + t as Letter, self.field).scale(&c))?;
                }
                out.push(r);
            }
        }
        Ok(out)
    }

    /// Reads a table back from relators of the form `e_i e_j − (linear)`;
    /// pairs without a relator are taken to commute.
    pub fn from_presentation(p: &Presentation) -> Result<Self> {
        let mut t = StructureTable::new(p.alphabet().names().to_vec(), p.field())?;
        for r in p.relators() {
            let lead = r.leading_word().expect("relators are nonzero");
            if lead.len() != 2 || r.terms().rev().skip(1).any(|(w, _)| w.len() != 1) {
                return Err(Error::InvalidInput(format!(
                    "relator `{}` is not a structure constant",
                    r.to_string_with(p.alphabet())
                )));
            }
            let (i, j) = (lead.letters()[0] as usize, lead.letters()[1] as usize);
            let terms: Vec<(usize, Scalar)> = r
                .terms()
                .rev()
                .skip(1)
                .map(|(w, c)| (w.letters()[0] as usize, -c))
                .collect();
            t.set_bracket(i, j, &terms)?;
        }
        Ok(t)
    }

    /// `[e3, e2] = e1`.
    pub fn heisenberg(field: FieldSpec) -> Self {
        Self::new(["e1", "e2", "e3"], field)
            .expect("valid names")
            .with_ints(&[(2, 1, &[(0, 1)])])
    }

    /// `[e2, e1] = e1`.
    pub fn nonabelian2(field: FieldSpec) -> Self {
        Self::new(["e1", "e2"], field).expect("valid names").with_ints(&[(1, 0, &[(0, 1)])])
    }

    /// `[e4, e3] = e2`, `[e4, e2] = e1`.
    pub fn filiform4(field: FieldSpec) -> Self {
        Self::new(["e1", "e2", "e3", "e4"], field)
            .expect("valid names")
            .with_ints(&[(3, 2, &[(1, 1)]), (3, 1, &[(0, 1)])])
    }

    /// `sl2` on `f < h < e`: `[e, h] = −2e`, `[e, f] = h`, `[h, f] = −2f`.
    pub fn sl2(field: FieldSpec) -> Self {
        Self::new(["f", "h", "e"], field)
            .expect("valid names")
            .with_ints(&[(2, 1, &[(2, -2)]), (2, 0, &[(1, 1)]), (1, 0, &[(0, -2)])])
    }
}

/// Inputs of the embedding construction. `a_1`, `b_1` and `b_n` are the
/// designated non-generators.
#[derive(Clone, Debug)]
pub struct EmbedSpec {
    pub a: StructureTable,
    pub b: StructureTable,
    pub h: GsBasis,
    /// number of type-(4) relators, and of basis elements of `H` used
    pub n_h: usize,
}

/// Deepest degree searched for the first `N` basis words of `H`.
const H_BASIS_DEGREE: usize = 12;

type BracketTable = BTreeMap<(usize, usize), Vec<(usize, Scalar)>>;

/// First `n` irreducible words of `h` and the brackets among them.
fn h_structure(h: &GsBasis, n: usize) -> Result<(Vec<Word>, BracketTable)> {
    let mut words = Vec::new();
    for d in 1..=H_BASIS_DEGREE {
        if !h.certified_up_to(d) {
            break;
        }
        words = h.irreducible_words(d)?;
        if words.len() >= n {
            break;
        }
    }
    if words.len() < n {
        return Err(Error::InvalidInput(format!(
            "H has only {} certified basis words, {n} requested",
            words.len()
        )));
    }
    words.truncate(n);
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let field = h.field();
    let mut theta = BTreeMap::new();
    for i in 0..n {
        for j in 0..i {
            let f = LieElement::basis(words[i].clone(), field)?;
            let g = LieElement::basis(words[j].clone(), field)?;
            let nf = h.quotient_bracket(&f, &g)?;
            let mut row = Vec::new();
            for (w, c) in nf.terms() {
                let t = index.get(w).ok_or_else(|| {
                    Error::DegreeEscape(format!("[h{}, h{}] leaves the first {n} basis elements", i + 1, j + 1))
                })?;
                row.push((*t, c.clone()));
            }
            theta.insert((i, j), row);
        }
    }
    Ok((words, theta))
}

/// Letters `h1 < … < hN < b1 < … < bn < a1 < … < an` with the four relator
/// families: structure constants of `A`, `B` and `H`, and
/// `a_n² b_1^i a_n b_1 − h_i` for `i ≤ N`.
pub fn embed_construction(spec: &EmbedSpec) -> Result<GsBasis> {
    let n = spec.a.dimension();
    if spec.b.dimension() != n || n < 4 {
        return Err(Error::InvalidInput(format!(
            "need dim A = dim B >= 4, got {} and {}",
            n,
            spec.b.dimension()
        )));
    }
    if spec.n_h == 0 {
        return Err(Error::InvalidInput("N must be at least 1".into()));
    }
    let field = spec.a.field();
    for other in [spec.b.field(), spec.h.field()] {
        if other != field {
            return Err(Error::FieldMismatch(field.to_string(), other.to_string()));
        }
    }
    spec.a.check_jacobi()?;
    spec.b.check_jacobi()?;
    if spec.a.is_nilpotent() && !spec.a.derived_contains(0) {
        return Err(Error::NonGenerator("a1".into()));
    }
    if spec.b.is_nilpotent() {
        if !spec.b.derived_contains(0) {
            return Err(Error::NonGenerator("b1".into()));
        }
        if !spec.b.derived_contains(n - 1) {
            return Err(Error::NonGenerator(format!("b{n}")));
        }
    }
    let nh = spec.n_h;
    let (_, theta) = h_structure(&spec.h, nh)?;
    let mut names: Vec<String> = (1..=nh).map(|i| format!("h{i}")).collect();
    names.extend((1..=n).map(|i| format!("b{i}")));
    names.extend((1..=n).map(|i| format!("a{i}")));
    let alphabet = Alphabet::new(names)?;
    let b_off = nh as Letter;
    let a_off = (nh + n) as Letter;
    let mut relators = spec.a.relators(a_off)?;
    relators.extend(spec.b.relators(b_off)?);
    for ((i, j), row) in &theta {
        let mut r = basis(vec![*i as Letter, *j as Letter], field)?;
        for (t, c) in row {
            r = r.sub(&LieElement::letter(*t as Letter, field).scale(c))?;
        }
        relators.push(r);
    }
    let an = a_off + n as Letter - 1;
    let b1 = b_off;
    for i in 1..=nh {
        let lead = basis(wi_letters(an, b1, i), field)?;
        relators.push(lead.sub(&LieElement::letter((i - 1) as Letter, field))?);
    }
    let p = Presentation::new(alphabet, field, relators)?
        .with_metadata("construction", "embed")
        .with_metadata("n", n.to_string())
        .with_metadata("N", nh.to_string())
        .with_metadata("non-generators", format!("a1,b1,b{n}"))
        .with_metadata("embeddability", "unchecked");
    verified(p)
}

/// `(S ⊕ K) ∗ H` on new letters `h1 < h2 < h3` below `H`'s, so that
/// `[h1, h2] = h1 = [h1, h3]` and `[h2, h3] = 0`.
pub fn h_tilde(h: &GsBasis) -> Result<GsBasis> {
    check_names(h.alphabet().names(), &["h1", "h2", "h3"])?;
    let field = h.field();
    let s = StructureTable::new(["h1", "h2", "h3"], field)?.with_ints(&[(1, 0, &[(0, -1)]), (2, 0, &[(0, -1)])]);
    let s = verified(s.to_presentation()?)?;
    let mut out = free_product(&s, h, ProductOrder::FirstBelow)?;
    out.set_metadata("construction", "htilde");
    Ok(out)
}

/// Named fixtures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Example {
    /// three generators, three relators, no overlaps
    V,
    /// four generators `t < z < y < x`, bracket relators
    Gamma,
    /// `a²bⁱab` over `b < a`
    Wi(usize),
    S2,
    Sl2,
    Heisenberg,
    Filiform4,
}

impl FromStr for Example {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let wi = |rest: &str| -> Result<Example> {
            let digits = rest.trim_start_matches('(').trim_end_matches(')');
            match digits.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(Example::Wi(i)),
                _ => Err(Error::UnknownExample(s.to_string())),
            }
        };
        match lower.as_str() {
            "v" => Ok(Example::V),
            "gamma" => Ok(Example::Gamma),
            "s2" => Ok(Example::S2),
            "sl2" | "sl2-like" => Ok(Example::Sl2),
            "heisenberg" => Ok(Example::Heisenberg),
            "filiform4" | "filiform" => Ok(Example::Filiform4),
            _ if lower.starts_with("wi") => wi(&lower[2..]),
            _ => Err(Error::UnknownExample(s.to_string())),
        }
    }
}

pub fn example(which: Example, field: FieldSpec) -> Result<Presentation> {
    let p = match which {
        Example::V => {
            let alphabet = Alphabet::new(["z", "y", "x"])?;
            let (z, y, x) = (0, 1, 2);
            let rels = [
                (vec![x, x, y, x, y], x),
                (vec![x, x, y, y, x, y], y),
                (vec![x, x, y, y, y, x, y], z),
            ]
            .into_iter()
            .map(|(w, l)| basis(w, field)?.sub(&LieElement::letter(l, field)))
            .collect::<Result<Vec<_>>>()?;
            Presentation::new(alphabet, field, rels)?
        }
        Example::Gamma => {
            let alphabet = Alphabet::new(["t", "z", "y", "x"])?;
            let (t, z, y, x) = (0, 1, 2, 3);
            let leaf = Monomial::Leaf;
            let br = |l: Letter, r: Letter| Monomial::bracket(leaf(l), leaf(r));
            let m = |mono: &Monomial| LieElement::from_monomial(mono, field);
            let rels = vec![
                m(&Monomial::bracket(leaf(x), br(y, z))).sub(&LieElement::letter(z, field))?,
                m(&br(x, t)),
                m(&br(y, t)),
                m(&br(y, z)).sub(&m(&br(z, t)))?,
            ];
            Presentation::new(alphabet, field, rels)?
        }
        Example::Wi(i) => {
            if i == 0 {
                return Err(Error::UnknownExample("wi(0)".into()));
            }
            let alphabet = Alphabet::new(["b", "a"])?;
            Presentation::new(alphabet, field, vec![basis(wi_letters(1, 0, i), field)?])?
        }
        Example::S2 => StructureTable::nonabelian2(field).to_presentation()?,
        Example::Sl2 => StructureTable::sl2(field).to_presentation()?,
        Example::Heisenberg => StructureTable::heisenberg(field).to_presentation()?,
        Example::Filiform4 => StructureTable::filiform4(field).to_presentation()?,
    };
    let name = match which {
        Example::Wi(i) => format!("wi({i})"),
        other => format!("{other:?}"),
    };
    Ok(p.with_metadata("example", name))
}
