use shirshov_core::constructions::*;
use shirshov_core::invariants::*;
use shirshov_core::oracle::quotient_dims;
use shirshov_core::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn abelian_plane() -> Presentation {
    let alphabet = Alphabet::new(["x1", "x2"]).unwrap();
    let r = LieElement::basis(Word::new(vec![1, 0]).unwrap(), Q).unwrap();
    Presentation::new(alphabet, Q, vec![r]).unwrap()
}

fn embed_fixture() -> GsBasis {
    let mut a = StructureTable::new(["a1", "a2", "a3", "a4"], Q).unwrap();
    a.set_bracket(2, 1, &[(0, Q.one())]).unwrap();
    let mut b = StructureTable::new(["b1", "b2", "b3", "b4"], Q).unwrap();
    b.set_bracket(2, 1, &[(3, Q.from_i64(-1))]).unwrap();
    b.set_bracket(3, 1, &[(0, Q.from_i64(-1))]).unwrap();
    let h = GsBasis::complete(&example(Example::Heisenberg, Q).unwrap(), 6).unwrap();
    embed_construction(&EmbedSpec { a, b, h, n_h: 3 }).unwrap()
}

#[test]
fn rips_kernel_relators_vanish() {
    let g = rips(&abelian_plane()).unwrap();
    let p = g.presentation();
    let (x1, x2, b, a) = (0, 1, 2, 3);
    let word = |v: Vec<u32>| LieElement::basis(Word::new(v).unwrap(), Q).unwrap();
    for (i, x) in [(1usize, x1), (2, x2)] {
        let mut w = vec![a, a];
        w.extend(std::iter::repeat_n(b, i));
        w.extend([a, b]);
        let ax = word(w.clone()).sub(&word(vec![a, x])).unwrap();
        assert!(g.reduce(&ax).is_zero());
        let mut w = vec![a, a];
        w.extend(std::iter::repeat_n(b, 2 + i));
        w.extend([a, b]);
        let bx = word(w).sub(&word(vec![b, x])).unwrap();
        assert!(g.reduce(&bx).is_zero());
    }
    assert_eq!(p.metadata()["construction"], "rips");
    assert!(center_truncated(&g, 0, 3).unwrap().is_empty());
}

#[test]
fn rips_hilbert_matches_oracle() {
    let g = rips(&abelian_plane()).unwrap();
    let dims = quotient_dims(g.presentation(), 5, 6).unwrap();
    assert_eq!(hilbert(&g, 5).unwrap().dims, dims.dims);
}

#[test]
fn embedding_fixture() {
    let g = embed_fixture();
    assert_eq!(g.relators().len(), 18);
    assert!(g.is_certified());
    let degree_one = g.irreducible_words(1).unwrap();
    for h in 0..3 {
        assert!(degree_one.contains(&Word::letter(h)));
    }
    let report = lemma_l1_check(&g, 100, 11).unwrap();
    assert_eq!(report.passes, 100, "{:?}", report.failures);
}

#[test]
fn killing_b_leaves_a() {
    let g = embed_fixture();
    let p = g.presentation();
    let mut rels = p.relators().to_vec();
    for l in 3..7 {
        rels.push(LieElement::letter(l, Q));
    }
    let q = Presentation::new(p.alphabet().clone(), Q, rels).unwrap();
    let c = GsBasis::complete(&q, 6).unwrap();
    assert!(c.is_certified());
    let dims = hilbert(&c, 6).unwrap().dims;
    assert_eq!(dims.iter().sum::<usize>(), 4);
    assert_eq!(dims[0], 4);
}

#[test]
fn sq_of_heisenberg() {
    let h = GsBasis::complete(&example(Example::Heisenberg, Q).unwrap(), 6).unwrap();
    let g = sq_embedding(&h, 3, 1, 3).unwrap();
    assert!(g.is_certified());
    assert_eq!(g.relators().len(), 3 + 4 + 3);
    let ones = g.irreducible_words(1).unwrap();
    assert_eq!(ones.len(), 5);
}

#[test]
fn embed_rejects_bad_designation() {
    // a1 outside the derived subalgebra
    let mut a = StructureTable::new(["a1", "a2", "a3", "a4"], Q).unwrap();
    a.set_bracket(2, 1, &[(3, Q.one())]).unwrap();
    let b = StructureTable::filiform4(Q);
    let h = GsBasis::complete(&example(Example::Heisenberg, Q).unwrap(), 6).unwrap();
    let err = embed_construction(&EmbedSpec { a, b, h, n_h: 3 }).unwrap_err();
    assert!(matches!(err, Error::NonGenerator(_)));
}
