use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vcompose::{connectivity, decompose, min_overlap, pseudo_identity, CompositionPair};
use vspace::{Field, GroundSet, Label, VSpace};

fn labels(prefix: &str, n: usize) -> GroundSet {
    let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    GroundSet::of(&refs)
}

fn random_space(rng: &mut ChaCha8Rng, f: Field, cols: &GroundSet) -> VSpace {
    let n = cols.len();
    let k = rng.gen_range(0..=n);
    let rows: Vec<Vec<i64>> = (0..k)
        .map(|_| (0..n).map(|_| if rng.gen_bool(0.3) { 0 } else { rng.gen_range(-3..=3) }).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    VSpace::from_ints(f, cols.clone(), &refs).unwrap()
}

fn gf7() -> Field {
    Field::gf(7).unwrap()
}

#[test]
fn min_overlap_preserves_composition_and_reaches_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let s = labels("s", rng.gen_range(0..=3));
        let p = labels("p", rng.gen_range(0..=4));
        let q = labels("q", rng.gen_range(0..=3));
        let pair = CompositionPair::new(
            random_space(&mut rng, gf7(), &s.union(&p)),
            random_space(&mut rng, gf7(), &p.union(&q)),
        )
        .unwrap();
        let small = min_overlap(&pair);
        assert!(small.overlap.is_subset_of(&pair.overlap));
        assert_eq!(small.compose(), pair.compose());
        assert_eq!(small.overlap.len(), pair.reducible_size());
        // minimizing again changes nothing
        assert_eq!(min_overlap(&small).overlap.len(), small.overlap.len());
    }
}

#[test]
fn matching_minors_reach_connectivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for i in 0..200 {
        let s = labels("s", rng.gen_range(0..=3));
        let p = labels("p", rng.gen_range(0..=3));
        let pair = if i % 2 == 0 {
            // V_PQ is a copy of V_SP with S renamed to Q
            let vsp = random_space(&mut rng, gf7(), &s.union(&p));
            let q = labels("q", s.len());
            let map: HashMap<Label, Label> = s.iter().cloned().zip(q.iter().cloned()).collect();
            CompositionPair::new(vsp.clone(), vsp.relabel(&map).unwrap()).unwrap()
        } else {
            let q = labels("q", rng.gen_range(0..=3));
            let v = random_space(&mut rng, gf7(), &s.union(&q));
            CompositionPair::new(v.primed_on(&q).unwrap(), pseudo_identity(&v, &q).unwrap()).unwrap()
        };
        assert!(pair.minors_match());
        let composed = pair.compose();
        let lambda = connectivity(&composed, &pair.s()).unwrap();
        let small = min_overlap(&pair);
        assert_eq!(small.overlap.len(), lambda);
        assert_eq!(small.compose(), composed);
    }
}

#[test]
fn decompose_round_trips_at_connectivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let fields = [gf7(), Field::gf(2).unwrap(), Field::Rational];
    for i in 0..240 {
        let f = fields[i % 3];
        let s = labels("s", rng.gen_range(0..=4));
        let q = labels("q", rng.gen_range(0..=4));
        let v = random_space(&mut rng, f, &s.union(&q));
        let pair = decompose(&v, &s, &q).unwrap();
        let lambda = connectivity(&v, &s).unwrap();
        assert_eq!(pair.overlap.len(), lambda);
        assert_eq!(lambda, connectivity(&v, &q).unwrap());
        assert_eq!(pair.compose().reorder(v.columns()).unwrap(), v);
    }
}

#[test]
fn pseudo_identity_parts() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..200 {
        let s = labels("s", rng.gen_range(0..=3));
        let q = labels("q", rng.gen_range(0..=3));
        let v = random_space(&mut rng, gf7(), &s.union(&q));
        let qp = q.primed();
        let w = pseudo_identity(&v, &q).unwrap();

        // swapping Q and Q' leaves it unchanged
        let mut swap: HashMap<Label, Label> = q.iter().cloned().zip(qp.iter().cloned()).collect();
        swap.extend(qp.iter().cloned().zip(q.iter().cloned()));
        assert!(w.relabel(&swap).unwrap().same_space(&w));

        // every f_Q in the restriction pairs with its own copy
        for row in w.restrict(&q).unwrap().basis_matrix() {
            let mut doubled = row.clone();
            doubled.extend(row.iter().cloned());
            assert!(w.contains_vector(&doubled));
        }

        assert_eq!(w.restrict(&q).unwrap(), v.restrict(&q).unwrap());
        assert_eq!(w.contract(&q).unwrap(), v.contract(&q).unwrap());

        let vp = v.primed_on(&q).unwrap();
        assert!(v.matched_compose(&w).unwrap().same_space(&vp));
        assert!(vp.matched_compose(&w).unwrap().same_space(&v));
    }
}

#[test]
fn size_identities_both_directions() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    let mut matched = 0;
    let mut converse_fails = 0;
    for i in 0..300 {
        let s = labels("s", rng.gen_range(0..=3));
        let p = labels("p", rng.gen_range(0..=3));
        let q = labels("q", rng.gen_range(0..=3));
        let vsp = random_space(&mut rng, gf7(), &s.union(&p));
        let vpq = if i % 3 == 0 {
            let map: HashMap<Label, Label> = s.iter().cloned().zip(labels("q", s.len()).iter().cloned()).collect();
            vsp.relabel(&map).unwrap()
        } else {
            random_space(&mut rng, gf7(), &p.union(&q))
        };
        let pair = CompositionPair::new(vsp.clone(), vpq.clone()).unwrap();
        let (s, q) = (pair.s(), pair.q());
        let c = pair.compose();
        let (cs, cxs) = (c.restrict(&s).unwrap(), c.contract(&s).unwrap());
        let (cq, cxq) = (c.restrict(&q).unwrap(), c.contract(&q).unwrap());
        let (ls, lxs) = (vsp.restrict(&s).unwrap(), vsp.contract(&s).unwrap());
        let (rq, rxq) = (vpq.restrict(&q).unwrap(), vpq.contract(&q).unwrap());
        assert!(cs.is_subspace_of(&ls) && lxs.is_subspace_of(&cxs));
        assert!(cq.is_subspace_of(&rq) && rxq.is_subspace_of(&cxq));
        let all_equal = cs == ls && cxs == lxs && cq == rq && cxq == rxq;
        let lambda = connectivity(&c, &s).unwrap();
        let left_gap = connectivity(&vsp, &s).unwrap();
        assert_eq!(left_gap, connectivity(&vsp, &pair.overlap).unwrap());
        assert!(lambda <= left_gap);
        let gaps_equal = lambda == left_gap && connectivity(&c, &q).unwrap() == connectivity(&vpq, &q).unwrap();
        // equal gaps and equal minors are the same statement given the containments
        assert_eq!(gaps_equal, all_equal);
        if pair.minors_match() {
            assert!(all_equal);
            matched += 1;
        } else if all_equal {
            converse_fails += 1;
        }
    }
    // the converse is not a theorem; see `converse_counterexample`
    assert!(converse_fails > 0);
    assert!(matched >= 100, "only {matched} matched instances");
}

/// Matching minors on `P` are sufficient for the four equalities but not
/// necessary: a left side that ignores `P` composes the same way with any right
/// side that ignores `P`.
#[test]
fn converse_counterexample() {
    let f = gf7();
    let (s, p, q) = (labels("s", 1), labels("p", 1), labels("q", 1));
    let vsp = VSpace::full(f, s.union(&p));
    let vpq = VSpace::zero(f, p.clone()).sum(&VSpace::full(f, q.clone())).unwrap();
    let pair = CompositionPair::new(vsp.clone(), vpq.clone()).unwrap();
    let c = pair.compose();
    assert_eq!(c, VSpace::full(f, s.union(&q)));
    assert_eq!(c.restrict(&s).unwrap(), vsp.restrict(&s).unwrap());
    assert_eq!(c.contract(&s).unwrap(), vsp.contract(&s).unwrap());
    assert_eq!(c.restrict(&q).unwrap(), vpq.restrict(&q).unwrap());
    assert_eq!(c.contract(&q).unwrap(), vpq.contract(&q).unwrap());
    assert!(!pair.minors_match());
}

/// Every subspace of GF(2)^n on the given columns.
fn all_gf2_spaces(cols: &GroundSet) -> Vec<VSpace> {
    let f = Field::gf(2).unwrap();
    let n = cols.len();
    let vectors: Vec<Vec<i64>> = (1u32..1 << n).map(|m| (0..n).map(|i| (m >> i & 1) as i64).collect()).collect();
    let mut seen: HashSet<Vec<Vec<vspace::Scalar>>> = HashSet::new();
    let zero = VSpace::zero(f, cols.clone());
    seen.insert(zero.basis_matrix().to_vec());
    let mut all = vec![zero];
    let mut frontier = 0;
    while frontier < all.len() {
        let base = all[frontier].clone();
        frontier += 1;
        for v in &vectors {
            let mut rows: Vec<Vec<i64>> = base
                .basis_matrix()
                .iter()
                .map(|r| r.iter().map(|x| if f.is_zero(x) { 0 } else { 1 }).collect())
                .collect();
            rows.push(v.clone());
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            let w = VSpace::from_ints(f, cols.clone(), &refs).unwrap();
            if seen.insert(w.basis_matrix().to_vec()) {
                all.push(w);
            }
        }
    }
    all
}

#[test]
fn gf2_subspace_counts() {
    // Gaussian binomial sums: 1, 2, 5, 16, 67, 374
    let counts: Vec<usize> = (0..=5).map(|n| all_gf2_spaces(&labels("x", n)).len()).collect();
    assert_eq!(counts, vec![1, 2, 5, 16, 67, 374]);
}

/// No composition through `|P|` ports has connectivity above `|P|`, and
/// `decompose` reaches connectivity; together `λ` is the exact minimum.
#[test]
fn exhaustive_gf2_lower_bound() {
    for total in 2..=5usize {
        for ns in 1..total {
            let nq = total - ns;
            let (s, q) = (labels("s", ns), labels("q", nq));
            for np in 0..ns.min(nq) {
                let p = labels("p", np);
                let lefts = all_gf2_spaces(&s.union(&p));
                let rights = all_gf2_spaces(&p.union(&q));
                for l in &lefts {
                    for r in &rights {
                        let c = l.matched_compose(r).unwrap();
                        assert!(connectivity(&c, &s).unwrap() <= np);
                    }
                }
            }
            for v in all_gf2_spaces(&s.union(&q)) {
                let pair = decompose(&v, &s, &q).unwrap();
                assert_eq!(pair.overlap.len(), connectivity(&v, &s).unwrap());
                assert_eq!(pair.compose(), v);
            }
        }
    }
}

#[test]
fn unused_free_overlap() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    let s = labels("s", 2);
    let p = labels("p", 2);
    let q = labels("q", 2);
    for _ in 0..20 {
        let v = random_space(&mut rng, gf7(), &s);
        let w = random_space(&mut rng, gf7(), &q);
        let left = v.sum(&VSpace::full(gf7(), p.clone())).unwrap();
        let right = VSpace::full(gf7(), p.clone()).sum(&w).unwrap();
        let pair = CompositionPair::new(left, right).unwrap();
        let small = min_overlap(&pair);
        assert_eq!(small.overlap.len(), pair.reducible_size());
        assert_eq!(small.compose(), v.sum(&w).unwrap());
    }
}
