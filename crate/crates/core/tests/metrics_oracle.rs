mod common;

use common::floyd_warshall;
use voterank::metrics::average_spreader_distance;
use voterank::{generators, Method};

fn pairwise_mean(dist: &[Vec<Option<usize>>], set: &[usize]) -> (Option<f64>, usize) {
    let (mut total, mut count, mut missing) = (0, 0, 0);
    for &a in set {
        for &b in set {
            if a == b {
                continue;
            }
            match dist[a][b] {
                Some(d) => {
                    total += d;
                    count += 1;
                }
                None => missing += 1,
            }
        }
    }
    ((count > 0).then(|| total as f64 / count as f64), missing)
}

#[test]
fn spreader_distance_matches_all_pairs_oracle() {
    for (seed, directed) in [(1, false), (2, true), (3, false)] {
        let g = generators::erdos_renyi(100, 0.03, directed, seed);
        let dist = floyd_warshall(&g);
        for method in [Method::VoteRank, Method::Degree, Method::PageRank] {
            let set = method.select(&g, 10, &Default::default()).unwrap();
            let got = average_spreader_distance(&g, &set.nodes).unwrap();
            let (mean, missing) = pairwise_mean(&dist, &set.nodes);
            assert_eq!(got.unreachable_pairs, missing);
            assert_eq!(got.reachable_pairs + missing, 90);
            match (got.mean, mean) {
                (Some(a), Some(b)) => assert!((a - b).abs() < 1e-12),
                (a, b) => assert_eq!(a, b),
            }
        }
    }
}

#[test]
fn voterank_spreads_wider_than_degree_on_a_scale_free_graph() {
    let g = generators::barabasi_albert(2000, 3, 5);
    let opts = Default::default();
    let vr = Method::VoteRank.select(&g, 20, &opts).unwrap();
    let dg = Method::Degree.select(&g, 20, &opts).unwrap();
    let l_vr = average_spreader_distance(&g, &vr.nodes).unwrap().mean.unwrap();
    let l_dg = average_spreader_distance(&g, &dg.nodes).unwrap().mean.unwrap();
    assert!(l_vr > l_dg, "{l_vr} <= {l_dg}");
}
