//! Test-only oracles, independent of the library's BFS and pair loop.
#![allow(dead_code, clippy::needless_range_loop)]

use rand::Rng;

/// Floyd–Warshall on an edge list.
pub fn floyd_warshall(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u64>> {
    const INF: u64 = u64::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Pair sum over ordered off-diagonal pairs, halved, plus the diagonal.
/// Returns coefficients with trailing zeros stripped.
pub fn oracle_coeffs(n: usize, edges: &[(usize, usize)], zeta: &[u32], product: bool) -> Vec<i64> {
    let d = floyd_warshall(n, edges);
    let w = |u: usize, v: usize| {
        let (a, b) = (zeta[u] as i64, zeta[v] as i64);
        if product { a * b } else { a + b }
    };
    let diameter = d.iter().flatten().copied().max().unwrap() as usize;
    let mut twice = vec![0i64; diameter + 1];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                twice[d[u][v] as usize] += w(u, v);
            }
        }
    }
    let mut c: Vec<i64> = twice.iter().map(|t| {
        assert_eq!(t % 2, 0);
        t / 2
    }).collect();
    for u in 0..n {
        c[0] += w(u, u);
    }
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

/// Random spanning tree plus independent extra edges.
pub fn random_connected(rng: &mut impl Rng, max_n: usize, p_extra: f64) -> (usize, Vec<(usize, usize)>) {
    let n = rng.gen_range(1..=max_n);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p_extra) && !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    (n, edges)
}

pub fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

pub fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

pub fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn biclique_edges(a: usize, b: usize) -> Vec<(usize, usize)> {
    (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect()
}
