use proptest::prelude::*;
use shirshov_core::gsbasis::{is_gs_basis, lift, reduce};
use shirshov_core::oracle::{expand, expand_elem, is_member, quotient_dims, witt_dimension, Membership};
use shirshov_core::words::{lex_cmp, regular_bracketing, regular_words_upto};
use shirshov_core::*;
use std::cmp::Ordering;

const Q: FieldSpec = FieldSpec::Rationals;

fn gf7() -> FieldSpec {
    FieldSpec::prime(7).unwrap()
}

fn scalar(field: FieldSpec) -> impl Strategy<Value = Scalar> {
    (-50i64..50, 1i64..20).prop_map(move |(n, d)| {
        let num = field.from_i64(n);
        match field.from_i64(d).inverse() {
            Some(inv) => &num * &inv,
            None => num,
        }
    })
}

fn word(letters: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..letters, 1..=max_len).prop_map(|v| Word::new(v).unwrap())
}

/// Random element supported on regular words of degree `<= d` over `k` letters.
fn element(field: FieldSpec, k: usize, d: usize) -> impl Strategy<Value = LieElement> {
    let words = regular_words_upto(k, d);
    let n = words.len();
    prop::collection::vec((0..n, scalar(field)), 1..5).prop_map(move |terms| {
        LieElement::from_terms(field, terms.into_iter().map(|(i, c)| (words[i].clone(), c))).unwrap()
    })
    .prop_filter("nonzero", |f| !f.is_zero())
}

fn yx_minus_x() -> LieElement {
    LieElement::basis(Word::new(vec![1, 0]).unwrap(), Q)
        .unwrap()
        .sub(&LieElement::letter(0, Q))
        .unwrap()
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(Q), b in scalar(Q), c in scalar(Q), p in scalar(gf7()), r in scalar(gf7()), s in scalar(gf7())) {
        for (a, b, c) in [(a, b, c), (p, r, s)] {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inverse().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn parse_print_parse(n in -1000i64..1000, d in 1i64..1000) {
        for field in [Q, gf7()] {
            let text = format!("{n}/{d}");
            if let Ok(x) = field.parse_scalar(&text) {
                prop_assert_eq!(field.parse_scalar(&x.to_string()).unwrap(), x);
            }
        }
    }

    #[test]
    fn lex_is_a_total_order(u in word(3, 5), v in word(3, 5), w in word(3, 5)) {
        let uv = lex_cmp(u.letters(), v.letters());
        prop_assert_eq!(uv, lex_cmp(v.letters(), u.letters()).reverse());
        prop_assert_eq!(uv == Ordering::Equal, u == v);
        if uv == Ordering::Less && lex_cmp(v.letters(), w.letters()) == Ordering::Less {
            prop_assert_eq!(lex_cmp(u.letters(), w.letters()), Ordering::Less);
        }
    }

    #[test]
    fn lt_product(f in element(Q, 3, 5), g in element(Q, 3, 5)) {
        let (f, g) = match lex_cmp(f.leading_word().unwrap().letters(), g.leading_word().unwrap().letters()) {
            Ordering::Greater => (f, g),
            Ordering::Less => (g, f),
            Ordering::Equal => return Ok(()),
        };
        let b = f.bracket(&g).unwrap();
        let expected = f.leading_word().unwrap().concat(g.leading_word().unwrap());
        prop_assert_eq!(b.leading_word(), Some(&expected));
        prop_assert_eq!(b.leading_coeff().unwrap(), &(f.leading_coeff().unwrap() * g.leading_coeff().unwrap()));
    }

    #[test]
    fn bracket_is_antisymmetric_and_matches_commutator(f in element(gf7(), 2, 4), g in element(gf7(), 2, 4)) {
        let fg = f.bracket(&g).unwrap();
        prop_assert_eq!(fg.neg(), g.bracket(&f).unwrap());
        prop_assert_eq!(expand_elem(&fg), expand_elem(&f).commutator(&expand_elem(&g)));
    }

    #[test]
    fn jacobi(f in element(Q, 2, 3), g in element(Q, 2, 3), h in element(Q, 2, 3)) {
        let a = f.bracket(&g.bracket(&h).unwrap()).unwrap();
        let b = g.bracket(&h.bracket(&f).unwrap()).unwrap();
        let c = h.bracket(&f.bracket(&g).unwrap()).unwrap();
        prop_assert!(a.add(&b).unwrap().add(&c).unwrap().is_zero());
    }

    #[test]
    fn reduce_contract(f in element(Q, 2, 5)) {
        let r = yx_minus_x();
        let nf = reduce(&f, std::slice::from_ref(&r));
        prop_assert_eq!(reduce(&nf, std::slice::from_ref(&r)), nf.clone());
        let ry = r.leading_word().unwrap().clone();
        prop_assert!(nf.terms().all(|(w, _)| !w.contains(&ry)));
        let p = Presentation::new(Alphabet::new(["x", "y"]).unwrap(), Q, vec![r]).unwrap();
        let diff = f.sub(&nf).unwrap();
        if !diff.is_zero() {
            prop_assert_eq!(is_member(&diff, &p, 6).unwrap(), Membership::Member);
        }
    }
}

#[test]
fn witt_counts_match_enumeration() {
    for (k, d) in [(2usize, 8usize), (3, 8)] {
        let words = regular_words_upto(k, d);
        for deg in 1..=d {
            let count = words.iter().filter(|w| w.len() == deg).count();
            assert_eq!(count, witt_dimension(k, deg), "{k} letters, degree {deg}");
        }
    }
}

#[test]
fn every_lift_meets_its_contract() {
    let r = yx_minus_x();
    let p = Presentation::new(Alphabet::new(["x", "y"]).unwrap(), Q, vec![r.clone()]).unwrap();
    let lead = r.leading_word().unwrap().clone();
    for w in regular_words_upto(2, 6) {
        for pos in shirshov_core::words::find_occurrences(w.letters(), lead.letters()) {
            let l = lift(&r, &w, pos).unwrap();
            assert_eq!(l.leading_word(), Some(&w));
            assert!(l.is_monic());
            assert_eq!(is_member(&l, &p, 6).unwrap(), Membership::Member);
        }
    }
}

#[test]
fn expansion_respects_bracketing() {
    for w in regular_words_upto(3, 5) {
        let m = regular_bracketing(&w).unwrap();
        let e = LieElement::from_monomial(&m, Q);
        assert_eq!(e, LieElement::basis(w.clone(), Q).unwrap());
        assert_eq!(expand_elem(&e), expand(&m, Q));
        let lead = expand(&m, Q).leading().map(|(w, _)| w.clone());
        assert_eq!(lead, Some(w));
    }
}

#[test]
fn ideal_members_have_reducible_leading_words() {
    // Heisenberg relators; every member of the ideal has a leading word
    // containing one of theirs
    let p = shirshov_core::constructions::example(shirshov_core::constructions::Example::Heisenberg, Q).unwrap();
    let leads = p.leading_words();
    let letters: Vec<LieElement> = (0..3).map(|l| LieElement::letter(l, Q)).collect();
    let mut members: Vec<LieElement> = p.relators().to_vec();
    for _ in 0..2 {
        let next: Vec<LieElement> = members
            .iter()
            .flat_map(|m| letters.iter().map(move |x| m.bracket(x).unwrap()))
            .collect();
        members.extend(next);
    }
    let mut combo = LieElement::zero(Q);
    for (i, m) in members.iter().enumerate() {
        combo = combo.add(&m.scale(&Q.from_i64(i as i64 % 5 - 2))).unwrap();
        for f in [m, &combo] {
            if let Some(w) = f.leading_word() {
                assert!(leads.iter().any(|l| w.contains(l)), "{w:?}");
            }
        }
    }
}

#[test]
fn certified_counts_agree_with_oracle() {
    let f = FieldSpec::prime(5).unwrap();
    let alphabet = Alphabet::new(["x", "y", "z"]).unwrap();
    let zy = LieElement::basis(Word::new(vec![2, 1]).unwrap(), f).unwrap();
    let rel = zy.sub(&LieElement::letter(0, f)).unwrap();
    let p = Presentation::new(alphabet, f, vec![rel]).unwrap();
    let g = GsBasis::complete(&p, 6).unwrap();
    assert!(g.is_certified());
    let dims = quotient_dims(&p, 6, 8).unwrap();
    assert!(dims.stabilized);
    assert_eq!(shirshov_core::invariants::hilbert(&g, 6).unwrap().dims, dims.dims);
    assert!(is_gs_basis(g.relators(), 6).unwrap().certified);
}
