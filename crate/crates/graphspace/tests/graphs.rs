use std::collections::HashMap;

use graphspace::{compose_space, overlay_compose, Graph, GraphError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vcompose::{connectivity, min_overlap, CompositionPair};
use vspace::GroundSet;

fn random_graph(rng: &mut ChaCha8Rng, nv: usize, ne: usize, prefix: &str) -> Graph {
    let vertices: Vec<String> = (0..nv).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String, String)> = (0..ne)
        .map(|i| {
            let t = rng.gen_range(0..nv);
            let h = rng.gen_range(0..nv);
            (format!("{prefix}{i}"), vertices[t].clone(), vertices[h].clone())
        })
        .collect();
    let refs: Vec<(&str, &str, &str)> = edges.iter().map(|(l, t, h)| (l.as_str(), t.as_str(), h.as_str())).collect();
    Graph::new(vertices, &refs).unwrap()
}

fn set(names: &[&str]) -> GroundSet {
    GroundSet::of(names)
}

#[test]
fn graph_minors_match_space_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..150 {
        let nv = rng.gen_range(1..=6);
        let ne = rng.gen_range(0..=8);
        let g = random_graph(&mut rng, nv, ne, "e");
        let v = g.incidence_space();
        assert_eq!(v.rank(), g.vertices().len() - g.component_count());

        let x = g.edge_labels().subset(rng.gen::<u64>() & g.edge_labels().full());
        assert_eq!(g.restrict(&x).unwrap().incidence_space(), v.restrict(&x).unwrap());
        assert_eq!(g.contract(&x).unwrap().incidence_space(), v.contract(&x).unwrap());
    }
}

/// Builds `G_SPQ` with the `P` edges forming a connected subgraph, then splits
/// it into `G_SP` and `G_PQ` with the right side's private vertices renamed.
#[test]
fn overlay_agrees_with_space_route() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let mut checked = 0;
    for _ in 0..200 {
        let shared_v: usize = rng.gen_range(1..=3);
        let np = rng.gen_range(shared_v - 1..=3);
        // a path through the shared vertices keeps G_P connected
        let mut p_edges: Vec<(String, usize, usize)> = (1..shared_v).map(|i| (format!("p{}", i - 1), i - 1, i)).collect();
        for i in p_edges.len()..np {
            p_edges.push((format!("p{i}"), rng.gen_range(0..shared_v), rng.gen_range(0..shared_v)));
        }
        if p_edges.is_empty() {
            continue;
        }
        let (ls, rs) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let left_vs: Vec<String> = (0..shared_v + ls).map(|i| format!("a{i}")).collect();
        let right_vs: Vec<String> = (0..shared_v + rs).map(|i| format!("b{i}")).collect();
        let mut left: Vec<(String, String, String)> = Vec::new();
        let mut right: Vec<(String, String, String)> = Vec::new();
        for (l, t, h) in &p_edges {
            left.push((l.clone(), left_vs[*t].clone(), left_vs[*h].clone()));
            right.push((l.clone(), right_vs[*t].clone(), right_vs[*h].clone()));
        }
        for i in 0..rng.gen_range(0..=4) {
            let (t, h) = (rng.gen_range(0..left_vs.len()), rng.gen_range(0..left_vs.len()));
            left.push((format!("s{i}"), left_vs[t].clone(), left_vs[h].clone()));
        }
        for i in 0..rng.gen_range(0..=4) {
            let (t, h) = (rng.gen_range(0..right_vs.len()), rng.gen_range(0..right_vs.len()));
            right.push((format!("q{i}"), right_vs[t].clone(), right_vs[h].clone()));
        }
        let build = |vs: &[String], es: &[(String, String, String)]| {
            let refs: Vec<(&str, &str, &str)> = es.iter().map(|(l, t, h)| (l.as_str(), t.as_str(), h.as_str())).collect();
            Graph::new(vs.to_vec(), &refs).unwrap()
        };
        let (g_sp, g_pq) = (build(&left_vs, &left), build(&right_vs, &right));
        let map: HashMap<String, String> = (0..shared_v).map(|i| (right_vs[i].clone(), left_vs[i].clone())).collect();
        let g = overlay_compose(&g_sp, &g_pq, &map).unwrap();
        let space = compose_space(&g_sp, &g_pq).unwrap();
        assert!(g.incidence_space().same_space(&space));
        checked += 1;
    }
    assert!(checked > 150);
}

#[test]
fn one_shared_edge_between_paths() {
    let g_sp = Graph::from_edges(&[("s1", "a", "b"), ("s2", "b", "c"), ("p", "a", "c")]).unwrap();
    let g_pq = Graph::from_edges(&[("p", "x", "y"), ("q1", "y", "z"), ("q2", "z", "x")]).unwrap();
    let map = HashMap::from([("x".to_string(), "a".to_string()), ("y".to_string(), "c".to_string())]);
    let g = overlay_compose(&g_sp, &g_pq, &map).unwrap();
    // the result is a 4-cycle a-b-c-z-a
    assert_eq!(g.vertices().len(), 4);
    assert_eq!(g.incidence_space().rank(), 3);
    assert!(g.incidence_space().same_space(&compose_space(&g_sp, &g_pq).unwrap()));
}

#[test]
fn empty_right_side_deletes_shared_edges() {
    let g_sp = Graph::from_edges(&[("s1", "a", "b"), ("p", "b", "c"), ("s2", "c", "a")]).unwrap();
    let g_pq = Graph::from_edges(&[("p", "u", "w")]).unwrap();
    let map = HashMap::from([("u".to_string(), "b".to_string()), ("w".to_string(), "c".to_string())]);
    let g = overlay_compose(&g_sp, &g_pq, &map).unwrap();
    assert_eq!(g, g_sp.delete_edges(&set(&["p"])).unwrap());
}

#[test]
fn triangle_sum_reduces_to_tree() {
    // two wheels glued on a triangle; the glue can shrink to a spanning tree
    let g_sp = Graph::from_edges(&[
        ("p1", "1", "2"),
        ("p2", "2", "3"),
        ("p3", "3", "1"),
        ("s1", "1", "h"),
        ("s2", "2", "h"),
        ("s3", "3", "h"),
    ])
    .unwrap();
    let g_pq = Graph::from_edges(&[
        ("p1", "1", "2"),
        ("p2", "2", "3"),
        ("p3", "3", "1"),
        ("q1", "1", "k"),
        ("q2", "2", "k"),
        ("q3", "3", "k"),
    ])
    .unwrap();
    let id: HashMap<String, String> = ["1", "2", "3"].iter().map(|v| (v.to_string(), v.to_string())).collect();
    let full = overlay_compose(&g_sp, &g_pq, &id).unwrap();
    let tree = ["p1", "p2"];
    let drop = set(&["p3"]);
    let small =
        overlay_compose(&g_sp.delete_edges(&drop).unwrap(), &g_pq.delete_edges(&drop).unwrap(), &id).unwrap();
    assert!(full.incidence_space().same_space(&small.incidence_space()));
    let s = set(&["s1", "s2", "s3"]);
    assert_eq!(connectivity(&full.incidence_space(), &s).unwrap(), tree.len());
}

#[test]
fn disconnected_shared_part_is_refused() {
    let g_sp = Graph::from_edges(&[("p1", "a", "b"), ("p2", "c", "d"), ("s", "b", "c")]).unwrap();
    let g_pq = Graph::from_edges(&[("p1", "a", "b"), ("p2", "c", "d"), ("q", "a", "d")]).unwrap();
    let id: HashMap<String, String> = ["a", "b", "c", "d"].iter().map(|v| (v.to_string(), v.to_string())).collect();
    assert_eq!(overlay_compose(&g_sp, &g_pq, &id), Err(GraphError::Disconnected));
    // the space route still works; both sides are forests, so nothing is constrained
    assert_eq!(compose_space(&g_sp, &g_pq).unwrap().rank(), 2);
}

/// Connected S side, Q side in two pieces. Trees on the vertices each Q piece
/// shares with the S side give a decomposition with `|P| = λ`.
#[test]
fn connected_s_disconnected_q() {
    let g_sq = Graph::from_edges(&[
        ("s1", "1", "2"),
        ("s2", "2", "3"),
        ("s3", "3", "4"),
        ("s4", "4", "5"),
        ("q1", "1", "2"),
        ("q2", "2", "3"),
        ("q3", "3", "1"),
        ("q4", "4", "5"),
        ("q5", "5", "4"),
    ])
    .unwrap();
    let s = set(&["s1", "s2", "s3", "s4"]);
    let q = set(&["q1", "q2", "q3", "q4", "q5"]);
    assert!(g_sq.restrict(&s).unwrap().is_connected());
    assert!(!g_sq.restrict(&q).unwrap().is_connected());
    let lambda = connectivity(&g_sq.incidence_space(), &s).unwrap();
    assert_eq!(lambda, 3);

    let g_spq = Graph::from_edges(&[
        ("s1", "1", "2"),
        ("s2", "2", "3"),
        ("s3", "3", "4"),
        ("s4", "4", "5"),
        ("p1", "1", "2"),
        ("p2", "2", "3"),
        ("p3", "4", "5"),
        ("q1", "1", "2"),
        ("q2", "2", "3"),
        ("q3", "3", "1"),
        ("q4", "4", "5"),
        ("q5", "5", "4"),
    ])
    .unwrap();
    let p = set(&["p1", "p2", "p3"]);
    let g_sp = g_spq.restrict(&s.union(&p)).unwrap();
    let g_pq = g_spq.restrict(&p.union(&q)).unwrap();
    assert!(!g_sp.restrict(&p).unwrap().is_connected());
    let composed = compose_space(&g_sp, &g_pq).unwrap();
    assert!(composed.same_space(&g_sq.incidence_space()));
    assert_eq!(p.len(), lambda);

    // the space minimizer cannot improve on it
    let pair = CompositionPair::new(g_sp.incidence_space(), g_pq.incidence_space()).unwrap();
    assert_eq!(min_overlap(&pair).overlap.len(), lambda);
}

/// Reconstruction of the doubly disconnected example: S = {e1,e2,e3} and
/// Q = {e4,...,e7} on vertices a,b,c,d,f,g. Only the facts the impossibility
/// argument uses are checked.
#[test]
fn doubly_disconnected_fixture() {
    let g = Graph::from_edges(&[
        ("e1", "a", "b"),
        ("e2", "c", "d"),
        ("e3", "f", "g"),
        ("e4", "a", "c"),
        ("e5", "c", "g"),
        ("e6", "b", "d"),
        ("e7", "d", "f"),
    ])
    .unwrap();
    let s = set(&["e1", "e2", "e3"]);
    let q = set(&["e4", "e5", "e6", "e7"]);
    let v = g.incidence_space();
    assert_eq!(connectivity(&v, &s).unwrap(), 2);
    assert_eq!(connectivity(&v, &q).unwrap(), 2);
    assert!(!g.restrict(&s).unwrap().is_connected());
    assert!(!g.restrict(&q).unwrap().is_connected());

    // contracting Q fuses {a,c,g} and {b,d,f}; contracting S fuses {a,b},{c,d},{f,g}
    let classes = |fuse: &GroundSet| -> Vec<Vec<&str>> {
        let n = g.vertices().len();
        let mut label: Vec<usize> = (0..n).collect();
        loop {
            let mut changed = false;
            for l in fuse.iter() {
                let e = g.edge(l).unwrap();
                let m = label[e.tail].min(label[e.head]);
                for end in [e.tail, e.head] {
                    if label[end] != m {
                        label[end] = m;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut cls: Vec<Vec<&str>> = Vec::new();
        for root in 0..n {
            let c: Vec<&str> = (0..n).filter(|&v| label[v] == root).map(|v| g.vertices()[v].as_str()).collect();
            if !c.is_empty() {
                cls.push(c);
            }
        }
        cls
    };
    let by_s = classes(&s);
    let by_q = classes(&q);
    assert_eq!(by_s, vec![vec!["a", "b"], vec!["c", "d"], vec!["f", "g"]]);
    assert_eq!(by_q, vec![vec!["a", "c", "g"], vec!["b", "d", "f"]]);

    let same = |cls: &[Vec<&str>], x: &str, y: &str| cls.iter().any(|c| c.contains(&x) && c.contains(&y));
    let names = ["a", "b", "c", "d", "f", "g"];
    let mut loop_free = Vec::new();
    for (i, x) in names.iter().enumerate() {
        for y in &names[i + 1..] {
            let loop_s = same(&by_s, x, y);
            let loop_q = same(&by_q, x, y);
            // no pair is a self-loop in both contractions
            assert!(!(loop_s && loop_q), "{x}{y}");
            if !loop_s && !loop_q {
                loop_free.push(format!("{x}{y}"));
            }
        }
    }
    assert_eq!(loop_free, vec!["ad", "af", "bc", "bg", "cf", "dg"]);
}
