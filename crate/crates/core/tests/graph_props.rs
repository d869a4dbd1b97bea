mod common;

use std::io::Write;

use common::floyd_warshall;
use proptest::prelude::*;
use voterank::graph::{compute_stats, load_edge_list, parse_edge_list};
use voterank::{generators, Graph};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn bfs_matches_floyd_warshall(n in 2usize..50, p in 0.0f64..0.2, directed in any::<bool>(), seed in any::<u64>()) {
        let g = generators::erdos_renyi(n, p, directed, seed);
        let fw = floyd_warshall(&g);
        for u in 0..n {
            prop_assert_eq!(&g.distances_from(u).unwrap(), &fw[u]);
        }
        for u in 0..n {
            for v in 0..n {
                if !directed {
                    prop_assert_eq!(fw[u][v], fw[v][u]);
                }
                for w in 0..n {
                    if let (Some(a), Some(b), Some(c)) = (fw[u][w], fw[u][v], fw[v][w]) {
                        prop_assert!(a <= b + c);
                    }
                }
            }
        }
    }

    #[test]
    fn degree_sum_is_twice_edge_count(n in 1usize..200, m in 0usize..600, seed in any::<u64>()) {
        let m = m.min(n * (n - 1) / 2);
        let g = generators::gnm(n, m, false, seed);
        prop_assert_eq!(g.edge_count(), m);
        prop_assert_eq!((0..n).map(|u| g.degree(u)).sum::<usize>(), 2 * m);
    }

    #[test]
    fn directed_in_and_out_degrees_balance(n in 1usize..100, m in 0usize..400, seed in any::<u64>()) {
        let m = m.min(n * (n - 1));
        let g = generators::gnm(n, m, true, seed);
        let outs: usize = (0..n).map(|u| g.out_degree(u)).sum();
        let ins: usize = (0..n).map(|u| g.in_degree(u)).sum();
        prop_assert_eq!((outs, ins), (m, m));
        for u in 0..n {
            for &v in g.out_neighbors(u) {
                prop_assert!(g.in_neighbors(v).contains(&u));
            }
        }
    }
}

#[test]
fn regular_graphs_are_homogeneous() {
    for (n, k) in [(20, 2), (30, 4), (40, 6)] {
        let stats = compute_stats(&generators::ring_lattice(n, k));
        assert_eq!(stats.heterogeneity, Some(1.0));
        assert_eq!(stats.mean_degree, k as f64);
    }
    assert_eq!(compute_stats(&generators::complete(7)).heterogeneity, Some(1.0));
}

#[test]
fn scale_free_graph_is_heterogeneous() {
    let stats = compute_stats(&generators::barabasi_albert(5000, 3, 12));
    assert!((stats.mean_degree - 6.0).abs() < 0.01);
    assert!(stats.heterogeneity.unwrap() > 1.5);
    assert!(stats.max_degree > 50);
}

#[test]
fn loading_the_same_file_twice_gives_identical_graphs() {
    let g = generators::gnm(300, 900, false, 3);
    let path = std::env::temp_dir().join(format!("voterank-load-{}.txt", std::process::id()));
    {
        let mut f = std::fs::File::create(&path).unwrap();
        writeln!(f, "# FromNodeId\tToNodeId").unwrap();
        for u in 0..300 {
            for &v in g.neighbors(u) {
                writeln!(f, "{}\t{}", u * 7 + 1, v * 7 + 1).unwrap();
            }
        }
    }
    let a = load_edge_list(&path, false).unwrap();
    let b = load_edge_list(&path, false).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.edge_count(), g.edge_count());
    let sa = compute_stats(&a);
    let sg = compute_stats(&g);
    assert_eq!(sa.edges, sg.edges);
    assert_eq!(sa.max_degree, sg.max_degree);
}

#[test]
fn labels_survive_parsing() {
    let g = parse_edge_list("a b\nb c\n".as_bytes(), true).unwrap();
    assert_eq!(g.labels(), ["a", "b", "c"]);
    assert_eq!(g.id_of("c"), Some(2));
    assert_eq!(g.shortest_path_length(0, 2).unwrap(), Some(2));
    assert_eq!(g.shortest_path_length(2, 0).unwrap(), None);
    assert!(Graph::from_edges(2, false, [(0, 5)]).is_err());
}
