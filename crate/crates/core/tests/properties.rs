use std::sync::Arc;

use proptest::prelude::*;

use fracdomatic::decomposition::Path;
use fracdomatic::formats::{decode_graph6, encode_graph6, parse_edge_list, write_edge_list};
use fracdomatic::generate::RandomGraphs;
use fracdomatic::oracle::exact_fd;
use fracdomatic::rational::ratio;
use fracdomatic::synthesis::{cycle_configuration, ear_extend};
use fracdomatic::{classify, Graph, Verdict};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// The nice `(2r+1, r)`-configuration of `C_m` for the pair `(0, j)`.
fn nice_cycle(m: usize, j: usize) -> fracdomatic::Configuration {
    cycle_configuration(m).unwrap().trim_to_odd().unwrap().make_nice(0, j).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn make_nice_on_cycles(m in 3usize..14, j in 1usize..13) {
        prop_assume!(j < m && m != 4);
        let base = cycle_configuration(m).unwrap().trim_to_odd().unwrap();
        let k = base.s();
        let nice = base.make_nice(0, j).unwrap();
        prop_assert!(nice.is_valid());
        prop_assert!(nice.is_nice(0, j).unwrap());
        prop_assert!(nice.s() == k || nice.s() == 2 * k + 1);
        prop_assert_eq!(nice.k(), 2 * nice.s() + 1);
    }

    #[test]
    fn ear_extend_keeps_shape(m in 3usize..10, j in 1usize..9, len in 1usize..7) {
        prop_assume!(j < m && m != 4);
        let c = nice_cycle(m, j);
        let mut edges: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        let mut path = vec![0];
        for t in 0..len {
            path.push(m + t);
        }
        path.push(j);
        for w in path.windows(2) {
            edges.push((w[0], w[1]));
        }
        let g = Arc::new(Graph::from_edge_list(m + len, &edges).unwrap());
        let out = ear_extend(&c, &g, &Path::new(path)).unwrap();
        prop_assert!(out.is_valid());
        prop_assert_eq!((out.k(), out.s()), (c.k(), c.s()));
        prop_assert_eq!(out.graph(), &*g);
    }

    #[test]
    fn normalize_reaches_every_target(m in 3usize..12, extra in 0usize..5) {
        let c = cycle_configuration(m).unwrap();
        prop_assume!(c.k() > 2 * c.s());
        let t = c.s() + extra;
        let odd = c.normalize_to_odd(t).unwrap();
        prop_assert!(odd.is_valid());
        prop_assert_eq!((odd.k(), odd.s()), (2 * t + 1, t));
    }

    #[test]
    fn combine_adds_parameters(a in 3usize..10) {
        let c = cycle_configuration(a).unwrap();
        let both = c.combine(&c).unwrap();
        prop_assert!(both.is_valid());
        prop_assert_eq!((both.k(), both.s()), (2 * c.k(), 2 * c.s()));
        prop_assert_eq!(both.value(), c.value());
    }

    #[test]
    fn classify_certificates_are_sound(seed in any::<u64>()) {
        let g = RandomGraphs::new(seed, 4, 9).connected().next().unwrap();
        let c = classify(&g).unwrap();
        if g.recognize_cycle() == Some(4) {
            prop_assert_eq!(c.verdict, Verdict::FdTwo);
            return Ok(());
        }
        prop_assert_eq!(c.verdict, Verdict::FdAboveTwo);
        let cert = c.certificate.unwrap();
        prop_assert!(cert.is_valid());
        prop_assert!(cert.value() > ratio(2, 1));
        prop_assert!(exact_fd(&g).unwrap().value >= cert.value());
    }
}
