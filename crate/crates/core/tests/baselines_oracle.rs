mod common;

use common::{ci_by_distances, dense_leaderrank, dense_pagerank, floyd_warshall, h_index_by_definition, peel_core_numbers};
use proptest::prelude::*;
use voterank::baselines::{self, PageRankParams};
use voterank::{generators, Graph, Method};

fn undirected_graph() -> impl Strategy<Value = Graph> {
    (1usize..120, 0.0f64..5.0, any::<u64>()).prop_map(|(n, density, seed)| {
        let m = ((density * n as f64) as usize).min(n * (n - 1) / 2);
        generators::gnm(n, m, false, seed)
    })
}

fn any_graph() -> impl Strategy<Value = Graph> {
    (2usize..40, 0.0f64..4.0, any::<bool>(), any::<u64>()).prop_map(|(n, density, directed, seed)| {
        let pairs = if directed { n * (n - 1) } else { n * (n - 1) / 2 };
        let m = ((density * n as f64) as usize).min(pairs);
        generators::gnm(n, m, directed, seed)
    })
}

fn is_sorted_by_score_then_id(order: &[usize], scores: &[f64]) -> bool {
    order
        .windows(2)
        .all(|w| scores[w[0]] > scores[w[1]] || (scores[w[0]] == scores[w[1]] && w[0] < w[1]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn core_numbers_match_peeling(g in undirected_graph()) {
        prop_assert_eq!(baselines::core_numbers(&g), peel_core_numbers(&g));
    }

    #[test]
    fn pagerank_matches_linear_solve(g in any_graph()) {
        let params = PageRankParams { epsilon: 1e-13, max_iters: 2000, ..Default::default() };
        let ranked = baselines::pagerank(&g, params);
        prop_assert!(ranked.converged);
        let want = dense_pagerank(&g, 0.85);
        for (a, b) in ranked.scores.iter().zip(&want) {
            prop_assert!((a - b).abs() < 1e-8, "{} vs {}", a, b);
        }
        prop_assert!((ranked.scores.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        prop_assert!(is_sorted_by_score_then_id(&ranked.order, &ranked.scores));
    }

    #[test]
    fn leaderrank_matches_linear_solve(g in any_graph()) {
        let ranked = baselines::leaderrank(&g, 1e-13, 20000);
        let want = dense_leaderrank(&g);
        for (a, b) in ranked.scores.iter().zip(&want) {
            prop_assert!((a - b).abs() < 1e-8, "{} vs {}", a, b);
        }
        prop_assert!((ranked.scores.iter().sum::<f64>() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn h_index_matches_definition(g in undirected_graph()) {
        let ranked = baselines::h_index_rank(&g).unwrap();
        for u in 0..g.node_count() {
            let h = ranked.scores[u] as usize;
            prop_assert_eq!(h, h_index_by_definition(&g, u));
            prop_assert!(h <= g.degree(u));
        }
    }

    #[test]
    fn every_ranking_is_a_sorted_permutation(g in undirected_graph()) {
        let opts = Default::default();
        for method in Method::ALL {
            let Some(ranked) = method.ranking(&g, &opts) else { continue };
            let ranked = ranked.unwrap();
            let mut order = ranked.order.clone();
            order.sort_unstable();
            prop_assert_eq!(order, (0..g.node_count()).collect::<Vec<_>>());
            if method == Method::KShell {
                // shell first, then degree
                let key = |u: usize| (std::cmp::Reverse(ranked.scores[u] as usize), std::cmp::Reverse(g.degree(u)), u);
                prop_assert!(ranked.order.windows(2).all(|w| key(w[0]) < key(w[1])));
            } else {
                prop_assert!(is_sorted_by_score_then_id(&ranked.order, &ranked.scores));
            }
        }
    }
}

#[test]
fn collective_influence_matches_distance_matrix() {
    let g = generators::erdos_renyi(50, 0.08, false, 4);
    let dist = floyd_warshall(&g);
    for radius in 1..=3 {
        let ranked = baselines::collective_influence(&g, radius).unwrap();
        for u in 0..50 {
            assert_eq!(ranked.scores[u], ci_by_distances(&g, &dist, u, radius), "node {u} radius {radius}");
            if g.degree(u) == 1 {
                assert_eq!(ranked.scores[u], 0.0);
            }
        }
    }
}

#[test]
fn kshell_non_picks_are_independent() {
    let g = generators::barabasi_albert(300, 3, 6);
    let set = baselines::kshell_rank_non(&g, 20).unwrap();
    for (i, &a) in set.nodes.iter().enumerate() {
        for &b in &set.nodes[i + 1..] {
            assert!(!g.are_adjacent(a, b));
        }
    }
    let core = baselines::core_numbers(&g);
    assert!(set.nodes.windows(2).all(|w| core[w[0]] >= core[w[1]]));
}

#[test]
fn clusterrank_on_a_triangle_with_pendant() {
    // node 0: neighbors 1,2,3; one link among them, c = 1/3
    let g = Graph::from_edges(4, false, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
    let ranked = baselines::clusterrank(&g);
    let want0 = 10f64.powf(-1.0 / 3.0) * (3.0 + 3.0 + 2.0);
    assert!((ranked.scores[0] - want0).abs() < 1e-12);
    // node 3 has clustering 0 and one neighbor of degree 3
    assert!((ranked.scores[3] - 4.0).abs() < 1e-12);
}
