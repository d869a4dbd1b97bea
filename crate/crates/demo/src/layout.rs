//! Force-directed node placement.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use voterank::Graph;

/// Fruchterman-Reingold layout in the unit square, flattened as `x0, y0, x1, y1, ...`.
pub fn fruchterman_reingold(g: &Graph, iterations: usize, seed: u64) -> Vec<f64> {
    let n = g.node_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pos: Vec<[f64; 2]> = (0..n).map(|_| [rng.random::<f64>(), rng.random::<f64>()]).collect();
    if n < 2 {
        return pos.iter().flat_map(|_| [0.5, 0.5]).collect();
    }
    let k = (1.0 / n as f64).sqrt();
    let mut temperature = 0.1;
    let cooling = temperature / (iterations as f64 + 1.0);
    let mut shift = vec![[0.0f64; 2]; n];
    for _ in 0..iterations {
        shift.iter_mut().for_each(|d| *d = [0.0, 0.0]);
        for u in 0..n {
            for v in u + 1..n {
                let (dx, dy) = (pos[u][0] - pos[v][0], pos[u][1] - pos[v][1]);
                let dist2 = (dx * dx + dy * dy).max(1e-9);
                let push = k * k / dist2;
                shift[u][0] += dx * push;
                shift[u][1] += dy * push;
                shift[v][0] -= dx * push;
                shift[v][1] -= dy * push;
            }
        }
        for u in 0..n {
            for &v in g.out_neighbors(u) {
                let (dx, dy) = (pos[u][0] - pos[v][0], pos[u][1] - pos[v][1]);
                let pull = (dx * dx + dy * dy).sqrt() / k;
                shift[u][0] -= dx * pull;
                shift[u][1] -= dy * pull;
                shift[v][0] += dx * pull;
                shift[v][1] += dy * pull;
            }
        }
        for (p, d) in pos.iter_mut().zip(&shift) {
            let len = (d[0] * d[0] + d[1] * d[1]).sqrt().max(1e-12);
            let step = len.min(temperature);
            p[0] += d[0] / len * step;
            p[1] += d[1] / len * step;
        }
        temperature -= cooling;
    }
    normalise(&mut pos);
    pos.iter().flat_map(|p| *p).collect()
}

fn normalise(pos: &mut [[f64; 2]]) {
    for axis in 0..2 {
        let lo = pos.iter().map(|p| p[axis]).fold(f64::INFINITY, f64::min);
        let hi = pos.iter().map(|p| p[axis]).fold(f64::NEG_INFINITY, f64::max);
        let span = (hi - lo).max(1e-12);
        for p in pos.iter_mut() {
            p[axis] = (p[axis] - lo) / span;
        }
    }
}
