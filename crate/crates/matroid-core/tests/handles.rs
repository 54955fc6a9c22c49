use matroid_core::sets::{bits, size};
use matroid_core::{
    enumerate_bases, explicit, free, graphic, linear, matroid_equal, parse_matroid, uniform, write_bases, zero,
    GroundSet, Matroid, MatroidBody, MatroidError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vspace::{Field, VSpace};

fn labels(n: usize) -> GroundSet {
    let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    GroundSet::of(&refs)
}

fn random_space(rng: &mut ChaCha8Rng, sizes: std::ops::Range<usize>) -> VSpace {
    let n = rng.gen_range(sizes);
    let p = [2, 3, 7][rng.gen_range(0..3)];
    let rows: Vec<Vec<i64>> =
        (0..rng.gen_range(0..=n)).map(|_| (0..n).map(|_| rng.gen_range(0..p as i64)).collect()).collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    VSpace::from_ints(Field::gf(p).unwrap(), labels(n), &refs).unwrap()
}

fn random_split(rng: &mut ChaCha8Rng, g: &GroundSet) -> GroundSet {
    g.subset(rng.gen_range(0..=g.full()))
}

fn doubled_triangle() -> Matroid {
    let g = graphspace::Graph::from_edges(&[
        ("e1", "a", "b"),
        ("e2", "b", "c"),
        ("e3", "c", "a"),
        ("e4", "b", "c"),
        ("e5", "c", "a"),
        ("e6", "a", "b"),
    ])
    .unwrap();
    graphic(&g)
}

#[test]
fn double_dual_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let m = linear(&random_space(&mut rng, 1..9));
        assert!(matroid_equal(&m.dual().dual(), &m).unwrap());
        assert_eq!(m.dual().full_rank(), m.len() - m.full_rank());
    }
}

#[test]
fn uniform_duals() {
    for n in 0..8 {
        for k in 0..=n {
            let u = uniform(labels(n), k).unwrap();
            assert!(matroid_equal(&u.dual(), &uniform(labels(n), n - k).unwrap()).unwrap());
        }
    }
    assert!(matches!(uniform(labels(3), 4), Err(MatroidError::Precondition(_))));
}

#[test]
fn linear_commutes_with_minors_and_duals() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..150 {
        let v = random_space(&mut rng, 1..9);
        let m = linear(&v);
        let t = random_split(&mut rng, v.columns());
        assert!(matroid_equal(&m.restrict(&t).unwrap(), &linear(&v.restrict(&t).unwrap())).unwrap());
        assert!(matroid_equal(&m.contract(&t).unwrap(), &linear(&v.contract(&t).unwrap())).unwrap());
        assert!(matroid_equal(&m.dual(), &linear(&v.orthogonal())).unwrap());
    }
}

#[test]
fn graphic_commutes_with_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let verts = ["a", "b", "c", "d", "e"];
    for _ in 0..100 {
        let names: Vec<String> = (1..=rng.gen_range(1..9)).map(|i| format!("e{i}")).collect();
        let edges: Vec<(&str, &str, &str)> = names
            .iter()
            .map(|n| (n.as_str(), verts[rng.gen_range(0..5)], verts[rng.gen_range(0..5)]))
            .collect();
        let g = graphspace::Graph::from_edges(&edges).unwrap();
        let m = graphic(&g);
        assert!(matroid_equal(&m, &linear(&g.incidence_space())).unwrap());
        let t = random_split(&mut rng, m.ground());
        assert!(matroid_equal(&m.restrict(&t).unwrap(), &graphic(&g.restrict(&t).unwrap())).unwrap());
        assert!(matroid_equal(&m.contract(&t).unwrap(), &graphic(&g.contract(&t).unwrap())).unwrap());
    }
}

#[test]
fn doubled_triangle_fixture() {
    let m = doubled_triangle();
    let e = enumerate_bases(&m).unwrap();
    assert_eq!(e.len(), 12);
    for pair in [["e1", "e6"], ["e2", "e4"], ["e3", "e5"]] {
        assert!(!e.contains(m.mask(&pair)));
        assert_eq!(m.rank(m.mask(&pair)), 1);
    }
    assert_eq!(m.full_rank(), 2);
}

#[test]
fn rank_splits_over_a_part() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..150 {
        let m = linear(&random_space(&mut rng, 1..9));
        let s = random_split(&mut rng, m.ground());
        let p = m.ground().minus(&s);
        // r(M) = r(M∘S) + r(M×P)
        assert_eq!(m.full_rank(), m.restrict(&s).unwrap().full_rank() + m.contract(&p).unwrap().full_rank());
    }
}

#[test]
fn four_cycle_is_not_u42() {
    let g = graphspace::Graph::from_edges(&[("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "d"), ("e4", "d", "a")])
        .unwrap();
    let c4 = graphic(&g);
    // a 4-cycle has rank 3: it is U(4,3), not U(4,2)
    assert!(matroid_equal(&c4, &uniform(labels(4), 3).unwrap()).unwrap());
    assert!(!matroid_equal(&c4, &uniform(labels(4), 2).unwrap()).unwrap());
    assert!(matroid_equal(&c4.dual(), &uniform(labels(4), 1).unwrap()).unwrap());
}

#[test]
fn closure_loops_coloops() {
    let m = doubled_triangle();
    assert_eq!(m.closure(m.mask(&["e1"])), m.mask(&["e1", "e6"]));
    assert_eq!(m.loops(), 0);
    assert_eq!(m.coloops(), 0);
    let z = free(labels(2)).direct_sum(&zero(GroundSet::of(&["x"]))).unwrap();
    assert_eq!(z.loops(), 0b100);
    assert_eq!(z.coloops(), 0b011);
}

#[test]
fn bases_round_trip_through_text() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..100 {
        let m = linear(&random_space(&mut rng, 0..8));
        let e = enumerate_bases(&m).unwrap();
        let text = write_bases(&e);
        let doc = parse_matroid(&text).unwrap();
        let MatroidBody::Bases(list) = doc.body else { panic!("bases body expected") };
        let masks: Vec<u64> = list.iter().map(|b| doc.ground.mask(b).unwrap()).collect();
        let back = enumerate_bases(&explicit(doc.ground.clone(), masks).unwrap()).unwrap();
        assert_eq!(back, e);
        assert_eq!(write_bases(&back), text);
    }
}

#[test]
fn explicit_rejects_non_matroids() {
    let g = labels(3);
    assert!(matches!(explicit(g.clone(), [0b001, 0b110]), Err(MatroidError::BaseAxiom(_))));
    assert!(explicit(g, [0b011, 0b101, 0b110]).is_ok());
}

#[test]
fn guard_applies_to_enumeration() {
    let m = free(labels(23));
    assert!(matches!(enumerate_bases(&m), Err(MatroidError::Guard { .. })));
    assert_eq!(bits(m.base()).count(), 23);
    assert_eq!(size(m.full()), 23);
}
