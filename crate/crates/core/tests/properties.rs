mod common;

use proptest::prelude::*;

use common::{arc_list, cycle_covers, cycle_count, hamiltonian_dfs};
use twodd::canon::{canonical_code, is_isomorphic};
use twodd::generation::{random_2dd, random_2digraph};
use twodd::{certify, enumerate_factors, io, verify, CertifyOptions, TwoDigraph, Verdict, DEFAULT_CAP};

fn graph() -> impl Strategy<Value = TwoDigraph> {
    (1usize..5, 1usize..4, any::<u64>(), any::<bool>(), 0usize..16).prop_map(|(m, k, seed, full, splices)| {
        if full {
            random_2dd(m, k, seed)
        } else {
            random_2digraph(m, k, splices % (m * k + 1), seed)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn serialization_round_trips(g in graph()) {
        let back = io::parse(&io::serialize(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn relabeling_preserves_canonical_code(g in graph(), dv in 1u32..50, da in 1u32..50) {
        let shifted = g.shifted(dv, da);
        prop_assert_eq!(canonical_code(&g), canonical_code(&shifted));
        prop_assert!(is_isomorphic(&g, &shifted));
    }

    #[test]
    fn factors_are_the_cycle_covers(g in random_graph_2dd()) {
        let (n, arcs) = arc_list(&g);
        let mut oracle: Vec<usize> = cycle_covers(n, &arcs).iter().map(|s| cycle_count(s)).collect();
        let mut ours: Vec<usize> = enumerate_factors(&g, DEFAULT_CAP).unwrap().map(|f| f.index()).collect();
        oracle.sort_unstable();
        ours.sort_unstable();
        prop_assert_eq!(ours, oracle);
    }

    #[test]
    fn certificates_verify_and_agree_with_search(g in random_graph_2dd()) {
        let cert = certify(&g, &CertifyOptions::default());
        prop_assert_eq!(verify(&g, &cert), Ok(true));
        let (n, arcs) = arc_list(&g);
        let ham = g.is_connected() && hamiltonian_dfs(n, &arcs);
        match cert.verdict {
            Verdict::Hamiltonian => prop_assert!(ham),
            Verdict::NonHamiltonian => prop_assert!(!ham),
            Verdict::Undecided => prop_assert!(false, "undecided"),
        }
    }
}

fn random_graph_2dd() -> impl Strategy<Value = TwoDigraph> {
    (1usize..6, 1usize..4, any::<u64>()).prop_map(|(m, k, seed)| random_2dd(m, k, seed))
}
