use proptest::prelude::*;

use sovfft::combinat::{build_bratteli, ChainKind, VertexId};
use sovfft::diagrams::{self, diagram_mul, Diagram, FactorChain};
use sovfft::pathalg::PathTable;
use sovfft::reps::AdaptedRep;
use sovfft::scalar::{default_q, int, ratio};
use sovfft::transform::{fft_naive, fft_sov, inverse_ft, AlgebraElement};

const KINDS: [ChainKind; 3] = [ChainKind::SymmetricGroup, ChainKind::Brauer, ChainKind::TemperleyLieb];

fn size_for(kind: ChainKind) -> usize {
    match kind {
        ChainKind::TemperleyLieb => 5,
        _ => 3,
    }
}

fn element(kind: ChainKind, n: usize, vals: &[i8]) -> AlgebraElement {
    let mut f = AlgebraElement::zero(kind, n);
    for (d, &v) in diagrams::all_diagrams(kind, n).iter().zip(vals.iter().cycle()) {
        f.add_term(d, int(v as i64)).unwrap();
    }
    f
}

fn rep_of(kind: ChainKind, n: usize) -> AdaptedRep {
    let q = (kind != ChainKind::SymmetricGroup).then(default_q);
    AdaptedRep::new(kind, n, q.as_ref()).unwrap()
}

fn kind_strategy() -> impl Strategy<Value = ChainKind> {
    (0..3usize).prop_map(|i| KINDS[i])
}

fn sparse_vals() -> impl Strategy<Value = Vec<i8>> {
    prop::collection::vec(prop_oneof![3 => Just(0i8), 2 => -9i8..=9], 1..48)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sov_equals_naive(kind in kind_strategy(), vals in sparse_vals()) {
        let n = size_for(kind);
        let r = rep_of(kind, n);
        let f = element(kind, n, &vals);
        prop_assert_eq!(fft_sov(&f, &r).unwrap().0, fft_naive(&f, &r).unwrap().0);
    }

    #[test]
    fn scaling_keeps_operation_pattern(kind in kind_strategy(), vals in sparse_vals(), p in 1i64..20, q in 1i64..20) {
        let n = size_for(kind);
        let r = rep_of(kind, n);
        let f = element(kind, n, &vals);
        let c = ratio(p, q);
        let (a, oa) = fft_sov(&f, &r).unwrap();
        let (b, ob) = fft_sov(&f.scale(&c), &r).unwrap();
        prop_assert_eq!(oa, ob);
        for (x, y) in a.blocks.iter().zip(&b.blocks) {
            prop_assert_eq!(x.scale(&c), y.clone());
        }
    }

    #[test]
    fn inverse_is_linear(kind in kind_strategy(), u in sparse_vals(), v in sparse_vals()) {
        let n = size_for(kind).min(4);
        let r = rep_of(kind, n);
        let (f, g) = (element(kind, n, &u), element(kind, n, &v));
        let img = |x: &AlgebraElement| fft_naive(x, &r).unwrap().0;
        let sum = f.add(&g).unwrap();
        let lhs = inverse_ft(&img(&sum), &r).unwrap();
        prop_assert_eq!(lhs.clone(), sum);
        let rhs = inverse_ft(&img(&f), &r).unwrap().add(&inverse_ft(&img(&g), &r).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sov_mults_within_prediction(kind in kind_strategy(), vals in sparse_vals()) {
        let n = size_for(kind);
        let r = rep_of(kind, n);
        let (_, ops) = fft_sov(&element(kind, n, &vals), &r).unwrap();
        let plan = sovfft::transform::sov_plan(kind, n).unwrap();
        prop_assert!(int(ops.mul as i64) <= plan.predicted_total());
        prop_assert!(ops.add <= ops.mul);
    }

    #[test]
    fn multiplication_is_associative(kind in kind_strategy(), a in 0usize..1000, b in 0usize..1000, c in 0usize..1000) {
        let n = 4;
        let all = diagrams::all_diagrams(kind, n);
        let (x, y, z) = (&all[a % all.len()], &all[b % all.len()], &all[c % all.len()]);
        let xy = diagram_mul(x, y).unwrap();
        let left = diagram_mul(&xy.diagram, z).unwrap();
        let yz = diagram_mul(y, z).unwrap();
        let right = diagram_mul(x, &yz.diagram).unwrap();
        prop_assert_eq!(&left.diagram, &right.diagram);
        prop_assert_eq!(xy.loops + left.loops, yz.loops + right.loops);
    }

    #[test]
    fn factor_words_replay(kind in kind_strategy(), k in 0usize..1000) {
        let n = 5;
        let all = diagrams::all_diagrams(kind, n);
        let d = &all[k % all.len()];
        let w = FactorChain::new(kind, n).unwrap().word_of(d).unwrap();
        let p = diagrams::evaluate(kind, n, &w).unwrap();
        prop_assert_eq!(&p.diagram, d);
        prop_assert_eq!(p.loops, 0);
    }

    #[test]
    fn coefficient_json_roundtrip(kind in kind_strategy(), vals in sparse_vals(), p in -50i64..50, q in 1i64..50) {
        let n = size_for(kind);
        let f = element(kind, n, &vals).scale(&ratio(p, q));
        let qv = (kind != ChainKind::SymmetricGroup).then(default_q);
        let (g, back_q) = AlgebraElement::from_json(&f.to_json(qv.as_ref())).unwrap();
        prop_assert_eq!(g, f);
        prop_assert_eq!(back_q, qv);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn loop_parameter_scales_products(num in 1i64..30, den in 1i64..30) {
        let q = ratio(num, den);
        let e = AlgebraElement::delta(&diagrams::generator(ChainKind::TemperleyLieb, diagrams::Token::E(1), 3).unwrap());
        let sq = e.mul(&e, &q).unwrap();
        prop_assert_eq!(sq, e.scale(&q));
    }
}

#[test]
fn gt_index_is_a_bijection() {
    for kind in KINDS {
        let b = build_bratteli(kind, 6);
        let t = PathTable::new(&b);
        for l in 0..=6 {
            for v in 0..b.level_len(l) {
                let g = t.at(VertexId::new(l, v));
                assert_eq!(g.len() as u64, b.dim(VertexId::new(l, v)));
                for i in 0..g.len() {
                    assert_eq!(g.index_of(g.path(i)), Some(i));
                }
            }
        }
    }
}

#[test]
fn identity_image_inverts_to_delta() {
    for kind in KINDS {
        let r = rep_of(kind, 3);
        let id = Diagram::identity(kind, 3);
        let img = fft_sov(&AlgebraElement::delta(&id), &r).unwrap().0;
        assert_eq!(inverse_ft(&img, &r).unwrap(), AlgebraElement::delta(&id));
    }
}
