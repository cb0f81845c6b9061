//! Property tests for the structural invariants.

use proptest::prelude::*;

use treesnark::bisection::{quick_ok, verify, Bisection};
use treesnark::graph::{Colour, Graph, VertexId};
use treesnark::graph6;

fn arbitrary_graph() -> impl Strategy<Value = Graph> {
    (1usize..=13).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        let len = pairs.len();
        proptest::sample::subsequence(pairs, 0..=len)
            .prop_map(move |edges| Graph::from_edges(n, &edges).unwrap())
    })
}

proptest! {
    #[test]
    fn graph6_round_trip_on_arbitrary_simple_graphs(g in arbitrary_graph()) {
        let encoded = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(&encoded).unwrap(), g);
    }

    #[test]
    fn handshake_holds_after_random_joins(seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut m = treesnark::pole::petersen_4pole().pole;
        // try a few random join operations; failures are fine, the
        // invariant must hold on whatever succeeds
        for _ in 0..3 {
            let d = m.dangling().to_vec();
            if d.len() < 2 {
                break;
            }
            let i = rng.random_range(0..d.len());
            let j = rng.random_range(0..d.len());
            if i != j {
                if let Ok(next) = m.join_dangling(&d[i].label, &d[j].label) {
                    m = next;
                }
            }
        }
        let degsum: usize = (0..m.n()).map(|v| m.degree(VertexId::from(v))).sum();
        prop_assert_eq!(degsum, 2 * m.inner_edges().len() + m.dangling().len());
    }

    #[test]
    fn verifier_equals_local_rule(seed in any::<u64>(), mask in any::<u16>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = treesnark::gen::random_cubic(12, &mut rng);
        let colours: Vec<Colour> = (0..12)
            .map(|v| if (mask >> v) & 1 == 0 { Colour::Black } else { Colour::White })
            .collect();
        let by_components = verify(&g, &Bisection::new(colours.clone())).unwrap().ok();
        prop_assert_eq!(quick_ok(g.graph(), &colours), by_components);
    }
}
