#![allow(dead_code)]

use isotemp::graph::{TemporalGraph, TimeWindow, Vertex};
use isotemp::ingest::{generate_random_temporal_graph, plant_isolated_clique};
use isotemp::IsolationParam;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub const EPSILON: &str = "0.001";
pub const C_GRID: [&str; 5] = ["0.001", "1", "1.5", "2.5", "5"];
pub const P_GRID: [f64; 3] = [0.2, 0.5, 0.8];

pub fn param(s: &str) -> IsolationParam {
    s.parse().unwrap()
}

/// The two-layer graph used throughout the examples, labels 1..4 as ids 0..3.
pub fn graph_x() -> TemporalGraph {
    TemporalGraph::new(
        4,
        vec![
            vec![(0, 1), (0, 2), (1, 2), (0, 3)],
            vec![(0, 1), (0, 2), (1, 2)],
        ],
    )
    .unwrap()
}

/// Graph parameters of corpus instance `i`: every (n, τ, p) combination with
/// n ∈ 3..=10, τ ∈ 1..=6, p ∈ P_GRID appears once per 144 indices.
pub fn corpus_shape(i: u64) -> (usize, usize, f64) {
    let n = 3 + (i % 8) as usize;
    let tau = 1 + (i / 8 % 6) as usize;
    let p = P_GRID[(i / 48 % 3) as usize];
    (n, tau, p)
}

pub fn corpus_graph(i: u64) -> TemporalGraph {
    let (n, tau, p) = corpus_shape(i);
    generate_random_temporal_graph(n, tau, p, 0x5EED_0000 + i).unwrap()
}

/// Hub-shaped graph on at most 10 vertices, seeded by `i`.
pub fn hub_corpus_graph(i: u64) -> TemporalGraph {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x4B_0000 + i);
    let size = rng.gen_range(3..=6);
    let tau = rng.gen_range(1..=4);
    hub_instance(&mut rng, size, 10 - size, tau).0
}

pub fn random_window<R: Rng>(rng: &mut R, tau: usize) -> TimeWindow {
    let a = rng.gen_range(1..=tau);
    let b = rng.gen_range(a..=tau);
    TimeWindow::new(a, b)
}

/// Random threshold: grid values, small fractions, and ε.
pub fn random_param<R: Rng>(rng: &mut R) -> IsolationParam {
    match rng.gen_range(0..3) {
        0 => param(C_GRID.choose(rng).unwrap()),
        1 => IsolationParam::new(rng.gen_range(1..=12), rng.gen_range(1..=6)).unwrap(),
        _ => IsolationParam::new(rng.gen_range(1..=40), 4).unwrap(),
    }
}

/// Random temporal graph with a clique of `size` planted on `w`, leaving at
/// most `budget` outgoing edges per layer.
pub fn planted_instance<R: Rng>(
    rng: &mut R,
    size: usize,
    extra: usize,
    tau: usize,
    budget: usize,
) -> (TemporalGraph, Vec<Vertex>, TimeWindow) {
    let n = size + extra;
    let p = *P_GRID.choose(rng).unwrap();
    let base = generate_random_temporal_graph(n.max(2), tau, p, rng.gen()).unwrap();
    let mut ids: Vec<Vertex> = (0..n as Vertex).collect();
    ids.shuffle(rng);
    let mut clique = ids[..size].to_vec();
    clique.sort_unstable();
    let w = random_window(rng, tau);
    let tg = plant_isolated_clique(&base, &clique, w, budget).unwrap();
    (tg, clique, w)
}

/// Random clique of the window intersection, grown greedily from a random
/// start; `None` if the intersection has no edge.
pub fn random_clique<R: Rng>(rng: &mut R, tg: &TemporalGraph, w: TimeWindow) -> Option<Vec<Vertex>> {
    let g = tg.intersection_graph(w).unwrap();
    let mut order: Vec<Vertex> = (0..tg.vertex_count() as Vertex).collect();
    order.shuffle(rng);
    let start = *order.iter().find(|&&v| g.degree(v) > 0)?;
    let cap = rng.gen_range(2..=tg.vertex_count());
    let mut clique = vec![start];
    for &v in &order {
        if clique.len() >= cap {
            break;
        }
        if v != start && clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.sort_unstable();
    Some(clique)
}

/// Clique `0..size` on every layer, where a few "hub" members carry many
/// outside contacts and the rest carry few: the regime in which only the
/// highest-degree vertices may be removed.
pub fn hub_instance<R: Rng>(
    rng: &mut R,
    size: usize,
    outside: usize,
    tau: usize,
) -> (TemporalGraph, Vec<Vertex>, TimeWindow) {
    let n = size + outside;
    let hubs = rng.gen_range(1..=2.min(size));
    let layers: Vec<Vec<(Vertex, Vertex)>> = (0..tau)
        .map(|_| {
            let mut edges = Vec::new();
            for u in 0..size as Vertex {
                for v in u + 1..size as Vertex {
                    edges.push((u, v));
                }
                let reach = if (u as usize) < hubs {
                    rng.gen_range(size / 2..=outside)
                } else {
                    rng.gen_range(0..=1)
                };
                let mut pool: Vec<Vertex> = (size as Vertex..n as Vertex).collect();
                pool.shuffle(rng);
                edges.extend(pool[..reach].iter().map(|&x| (u, x)));
            }
            edges
        })
        .collect();
    let tg = TemporalGraph::new(n, layers).unwrap();
    let clique = (0..size as Vertex).collect();
    (tg, clique, TimeWindow::new(1, tau))
}
