use std::sync::Arc;

use proptest::prelude::*;

use icosa_a5::icosa::vertex_domain;
use icosa_a5::{Domain, Model, Permutation};

fn perm_on(domain: Arc<Domain>) -> impl Strategy<Value = Permutation> {
    let n = domain.len();
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |images| Permutation::from_images(&domain, images).unwrap())
}

fn ico() -> impl Strategy<Value = Permutation> {
    perm_on(vertex_domain())
}

fn model() -> &'static Model {
    use std::sync::OnceLock;
    static MODEL: OnceLock<Model> = OnceLock::new();
    MODEL.get_or_init(|| Model::published().unwrap())
}

fn rotation() -> impl Strategy<Value = Permutation> {
    (0..60usize).prop_map(|i| model().rotations().elements()[i].clone())
}

proptest! {
    #[test]
    fn composition_is_associative(p in ico(), q in ico(), r in ico()) {
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_neutral(p in ico()) {
        let e = Permutation::identity(p.domain());
        prop_assert_eq!(&p.compose(&e).unwrap(), &p);
        prop_assert_eq!(&e.compose(&p).unwrap(), &p);
    }

    #[test]
    fn inverse_cancels(p in ico()) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn compose_applies_left_factor_first(p in ico(), q in ico()) {
        let pq = p.compose(&q).unwrap();
        for x in 0..p.domain().len() {
            prop_assert_eq!(pq.apply(x), q.apply(p.apply(x)));
        }
    }

    #[test]
    fn conjugation_keeps_cycle_type(p in ico(), g in ico()) {
        let conj = g.inverse().compose(&p).unwrap().compose(&g).unwrap();
        prop_assert_eq!(conj.cycle_type(), p.cycle_type());
    }

    #[test]
    fn cycle_notation_round_trips(p in ico()) {
        let text = p.format_cycles();
        prop_assert_eq!(Permutation::parse(&text, p.domain()).unwrap(), p);
    }

    #[test]
    fn order_kills_the_permutation(p in ico()) {
        prop_assert!(p.power(p.order() as i64).is_identity());
        prop_assert_eq!(p.power(-1), p.inverse());
    }

    #[test]
    fn parity_is_multiplicative(p in ico(), q in ico()) {
        let even = |x: &Permutation| x.parity() == icosa_a5::Parity::Even;
        prop_assert_eq!(even(&p.compose(&q).unwrap()), even(&p) == even(&q));
    }

    #[test]
    fn isomorphism_is_multiplicative(g in rotation(), h in rotation()) {
        let iso = &model().iso;
        let gh = g.compose(&h).unwrap();
        let lhs = iso.image(&gh).unwrap();
        let rhs = iso.image(&g).unwrap().compose(iso.image(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, &rhs);
    }

    #[test]
    fn rotations_preserve_the_graph(g in rotation()) {
        prop_assert!(model().graph.is_automorphism(&g));
    }

    #[test]
    fn shortest_words_evaluate_back(g in rotation()) {
        let group = model().rotations();
        let word = group.shortest_word(&g).unwrap();
        prop_assert_eq!(group.generators().evaluate(word).unwrap(), g);
    }

    #[test]
    fn parser_never_panics(text in "[(),0-9'+ ]{0,24}") {
        let _ = Permutation::parse(&text, &vertex_domain());
    }
}
