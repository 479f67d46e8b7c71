#![allow(dead_code)]

use maxkcut::graph::{splitmix64, Family, Graph};

/// Best cut weight over all `k^n` labelings, with no symmetry breaking.
pub fn naive_max_kcut(g: &Graph, k: usize) -> f64 {
    let n = g.n();
    let mut lab = vec![0usize; n];
    let mut best = 0.0f64;
    loop {
        let w: f64 = g.edges().iter().filter(|e| lab[e.u] != lab[e.v]).map(|e| e.w).sum();
        best = best.max(w);
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            lab[i] += 1;
            if lab[i] < k {
                break;
            }
            lab[i] = 0;
            i += 1;
        }
    }
}

/// True if `a` is a restricted-growth string: starts at 0 and each value is
/// at most one more than every value before it.
pub fn is_rgs(a: &[usize]) -> bool {
    let mut next = 0;
    for &x in a {
        if x > next {
            return false;
        }
        if x == next {
            next += 1;
        }
    }
    true
}

/// The criterion-4 sweep: 200 graphs, `n = 4 + i % 9`, `p` cycling through
/// {0.3, 0.5, 0.8} every 9 instances, seed `1000 + i`.
pub fn sweep_instances() -> Vec<(usize, f64, u64, Graph)> {
    let ps = [0.3, 0.5, 0.8];
    (0..200)
        .map(|i| {
            let n = 4 + i % 9;
            let p = ps[(i / 9) % 3];
            let seed = 1000 + i as u64;
            let g = Family::Gnp { n, p, seed }.generate().unwrap();
            (n, p, seed, g)
        })
        .collect()
}

/// Small deterministic stream for test randomness.
pub struct Stream(pub u64);

impl Stream {
    pub fn below(&mut self, bound: usize) -> usize {
        (splitmix64(&mut self.0) % bound as u64) as usize
    }

    pub fn unit(&mut self) -> f64 {
        (splitmix64(&mut self.0) >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Random graph with weights drawn from {1, ..., 5} or, when `real`, from (0.1, 5.1).
pub fn random_weighted(n: usize, p: f64, real: bool, s: &mut Stream) -> Graph {
    let mut raw = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if s.unit() < p {
                let w = if real { 0.1 + 5.0 * s.unit() } else { (1 + s.below(5)) as f64 };
                raw.push((u, v, Some(w)));
            }
        }
    }
    Graph::build(n, &raw).unwrap()
}
