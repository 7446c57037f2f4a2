mod common;

use isotemp::enumerate::{
    is_maximal_usually_family, is_vertex_maximal_neighborhood, isolated_subsets, isolated_subsets_alltime_avg,
    Enumerator,
};
use isotemp::graph::{TemporalGraph, TimeWindow, Vertex};
use isotemp::ingest::{generate_random_temporal_graph, plant_isolated_clique};
use isotemp::oracle::{brute_force_enumerate, brute_force_isolated_subsets, OracleCaps};
use isotemp::{enumerate_maximal_isolated, is_isolated, Error, IsolationKind, IsolationSpec, ResultSet, TemporalClique};

use common::*;

fn spec(kind: IsolationKind, c: &str) -> IsolationSpec {
    IsolationSpec::new(kind, param(c))
}

fn listing(rs: &ResultSet) -> Vec<(Vec<Vertex>, usize, usize)> {
    rs.iter().map(|t| (t.vertices.clone(), t.window.a, t.window.b)).collect()
}

#[test]
fn graph_x_at_epsilon_every_kind() {
    let tg = graph_x();
    for kind in IsolationKind::SUPPORTED {
        let s = spec(kind, EPSILON);
        let fast = enumerate_maximal_isolated(&tg, &s).unwrap();
        assert_eq!(listing(&fast), vec![(vec![0, 1, 2], 2, 2)], "{kind}");
        assert_eq!(fast, brute_force_enumerate(&tg, &s).unwrap());
    }
}

#[test]
fn graph_x_alltime_max_one_and_a_half() {
    let tg = graph_x();
    let s = spec(IsolationKind::AlltimeMax, "1.5");
    let fast = enumerate_maximal_isolated(&tg, &s).unwrap();
    assert_eq!(listing(&fast), vec![(vec![0, 1, 2], 1, 2)]);
    assert_eq!(fast, brute_force_enumerate(&tg, &s).unwrap());
}

fn read_golden(text: &str) -> Vec<(Vec<Vertex>, usize, usize)> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let nums: Vec<usize> = l.split_whitespace().map(|x| x.parse().unwrap()).collect();
            let vertices = nums[2..].iter().map(|&label| label as Vertex - 1).collect();
            (vertices, nums[0], nums[1])
        })
        .collect()
}

#[test]
fn graph_x_usually_max_golden() {
    let golden = read_golden(include_str!("golden/graph_x_usually_max_0.75.txt"));
    let rs = brute_force_enumerate(&graph_x(), &spec(IsolationKind::UsuallyMax, "0.75")).unwrap();
    assert_eq!(listing(&rs), golden);
}

#[test]
fn usually_max_needs_the_oracle() {
    let tg = graph_x();
    let err = Enumerator::new(&tg, spec(IsolationKind::UsuallyMax, "1")).unwrap_err();
    assert!(matches!(err, Error::UnsupportedKind));
    assert!(err.to_string().contains("use oracle"));
}

#[test]
fn subsets_on_graph_x_match_the_oracle() {
    let tg = graph_x();
    let c3 = [0, 1, 2];
    let w = TimeWindow::new(1, 2);
    for (kind, c) in [
        (IsolationKind::AlltimeMax, "1.5"),
        (IsolationKind::AlltimeMax, "1"),
        (IsolationKind::AvgAlltime, "0.5"),
        (IsolationKind::AlltimeAvg, "0.5"),
        (IsolationKind::AlltimeAvg, "1/3"),
        (IsolationKind::UsuallyAvg, "0.2"),
        (IsolationKind::UsuallyAvg, "1/6"),
        (IsolationKind::MaxUsually, "0.5"),
    ] {
        let s = spec(kind, c);
        let oracle = brute_force_isolated_subsets(&tg, &c3, w, &s).unwrap();
        assert_eq!(isolated_subsets(&tg, &c3, w, 2, &s), oracle, "{s}");
    }
}

#[test]
fn alltime_avg_one_third_is_fixed_by_the_oracle() {
    // layer 1 violates at c = 1/3: degree sum 7 is not below 3 · (2 + 1/3)
    let tg = graph_x();
    let w = TimeWindow::new(1, 2);
    let c = param("1/3");
    let s = IsolationSpec::new(IsolationKind::AlltimeAvg, c);
    let oracle = brute_force_isolated_subsets(&tg, &[0, 1, 2], w, &s).unwrap();
    assert!(oracle.is_empty());
    assert_eq!(isolated_subsets_alltime_avg(&tg, &[0, 1, 2], w, 2, &c), oracle);
}

#[test]
fn single_top_score_removal() {
    // vertex 0 carries six outside contacts; dropping it alone isolates the rest
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    edges.extend((4..10).map(|x| (0, x)));
    let tg = TemporalGraph::new(10, vec![edges]).unwrap();
    let w = TimeWindow::single(1);
    let s = spec(IsolationKind::UsuallyAvg, "1.5");
    let oracle = brute_force_isolated_subsets(&tg, &[0, 1, 2, 3], w, &s).unwrap();
    assert_eq!(oracle, vec![vec![1, 2, 3]]);
    assert_eq!(isolated_subsets(&tg, &[0, 1, 2, 3], w, 3, &s), oracle);
    assert_eq!(enumerate_maximal_isolated(&tg, &s).unwrap(), brute_force_enumerate(&tg, &s).unwrap());
}

#[test]
fn usually_avg_wider_isolated_window_rejects() {
    let tg = TemporalGraph::new(3, vec![vec![(0, 1), (1, 2)], vec![(0, 1)]]).unwrap();
    let s = spec(IsolationKind::UsuallyAvg, "0.5");
    let narrow = TemporalClique::new(vec![0, 1], TimeWindow::single(2));
    assert!(is_isolated(&tg, &s, &[0, 1], TimeWindow::new(1, 2)).unwrap());
    assert!(!is_maximal_usually_family(&tg, &narrow, &s));
    let oracle = brute_force_enumerate(&tg, &s).unwrap();
    assert!(!oracle.contains(&narrow));
    assert!(oracle.contains(&TemporalClique::new(vec![0, 1], TimeWindow::new(1, 2))));
}

#[test]
fn max_usually_superset_on_wider_window_rejects() {
    let tg = TemporalGraph::new(
        5,
        vec![
            vec![(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (3, 4)],
            vec![(0, 1), (0, 4), (1, 4), (2, 4), (3, 4)],
            vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        ],
    )
    .unwrap();
    let s = spec(IsolationKind::MaxUsually, "2");
    let rc = TemporalClique::new(vec![0, 1], TimeWindow::single(2));
    assert!(is_isolated(&tg, &s, &rc.vertices, rc.window).unwrap());
    // nothing larger on its own window
    assert!(is_vertex_maximal_neighborhood(&tg, &rc, &s));
    assert!(!is_maximal_usually_family(&tg, &rc, &s));
    let oracle = brute_force_enumerate(&tg, &s).unwrap();
    assert!(!oracle.contains(&rc));
    assert_eq!(enumerate_maximal_isolated(&tg, &s).unwrap(), oracle);
}

#[test]
fn planted_over_full_lifetime_is_reported() {
    let base = generate_random_temporal_graph(9, 3, 0.5, 17).unwrap();
    let clique = [2, 5, 7];
    let tg = plant_isolated_clique(&base, &clique, TimeWindow::new(1, 3), 0).unwrap();
    for kind in IsolationKind::SUPPORTED {
        let s = spec(kind, "1");
        let fast = enumerate_maximal_isolated(&tg, &s).unwrap();
        assert!(
            fast.iter().any(|t| clique.iter().all(|v| t.vertices.contains(v))),
            "{kind}"
        );
        assert_eq!(fast, brute_force_enumerate(&tg, &s).unwrap(), "{kind}");
    }
}

#[test]
fn planted_budget_one_threshold() {
    let base = generate_random_temporal_graph(8, 2, 0.9, 5).unwrap();
    let clique = [0, 3, 6];
    let w = TimeWindow::new(1, 2);
    let tg = plant_isolated_clique(&base, &clique, w, 1).unwrap();
    // one outgoing edge per layer: isolated iff 1 < 3c
    assert!(is_isolated(&tg, &spec(IsolationKind::AlltimeAvg, "0.34"), &clique, w).unwrap());
    assert!(!is_isolated(&tg, &spec(IsolationKind::AlltimeAvg, "1/3"), &clique, w).unwrap());
}

#[test]
fn error_paths() {
    let tg = graph_x();
    let s = spec(IsolationKind::AlltimeMax, "1");
    assert!(matches!(
        is_isolated(&tg, &s, &[0, 3], TimeWindow::new(1, 2)),
        Err(Error::NotACliqueInWindow(_))
    ));
    assert!(matches!(tg.delta_union_transform(2), Err(Error::WindowExceedsLifetime { .. })));
    let big = generate_random_temporal_graph(12, 2, 0.5, 1).unwrap();
    let caps = OracleCaps { max_vertices: 10, max_layers: 8 };
    assert!(matches!(
        isotemp::oracle::brute_force_enumerate_with(&big, &s, caps),
        Err(Error::OracleTooLarge(_))
    ));
}

#[test]
fn outputs_are_canonical_and_thread_invariant() {
    let tg = generate_random_temporal_graph(10, 5, 0.6, 99).unwrap();
    for kind in IsolationKind::SUPPORTED {
        let s = spec(kind, "1.5");
        let one = Enumerator::new(&tg, s).unwrap().threads(Some(1)).run().unwrap();
        let three = Enumerator::new(&tg, s).unwrap().threads(Some(3)).run().unwrap();
        let a: Vec<&TemporalClique> = one.iter().collect();
        let b: Vec<&TemporalClique> = three.iter().collect();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|p| p[0] < p[1]), "strictly increasing, no duplicates");
    }
}
