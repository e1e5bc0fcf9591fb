mod common;

use common::*;
use contracta::canon::canonical_labeling;
use contracta::connectivity::is_k_connected;
use contracta::contraction::{contractible_by_contraction, CutTable};
use contracta::enumerate::generate_3connected;
use contracta::structure::min_fan_interior;
use contracta::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn flow_connectivity_matches_subset_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1500 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.2..0.95);
        let g = random_graph(&mut rng, n, p);
        let k = vertex_connectivity(&g).unwrap();
        assert_eq!(k, brute_kappa(&g), "{:?}", g.edges());
        for j in 0..=4 {
            assert_eq!(is_k_connected(&g, j), j <= k, "k={k} j={j}");
        }
    }
}

#[test]
fn classes_of_order_six_match_generator() {
    let oracle = three_connected_classes(6);
    let generated = generate_3connected(6).unwrap();
    assert_eq!(oracle.len(), 17);
    assert_eq!(generated.len(), oracle.len());
    for g in &oracle {
        assert_eq!(generated.iter().filter(|h| brute_isomorphic(g, h)).count(), 1);
    }
}

#[test]
fn both_contractibility_tests_match_brute_force() {
    for n in 5..=7 {
        for g in generate_3connected(n).unwrap() {
            let table = CutTable::new(&g).unwrap();
            for (u, v) in non_edges(&g) {
                let expected = brute_contractible(&g, u, v);
                assert_eq!(table.is_contractible(u, v), expected);
                assert_eq!(contractible_by_contraction(&g, u, v).unwrap(), expected);
            }
        }
    }
}

#[test]
fn canonical_isomorphism_matches_permutation_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut agreements = [0usize; 2];
    for _ in 0..300 {
        let n = rng.gen_range(1..=7);
        let g = random_graph(&mut rng, n, 0.5);
        // Half the pairs are relabelings, half independent draws of the same size.
        let h = if rng.gen_bool(0.5) {
            g.permuted(&random_permutation(&mut rng, n))
        } else {
            random_graph(&mut rng, n, 0.5)
        };
        let truth = brute_isomorphic(&g, &h);
        assert_eq!(are_isomorphic(&g, &h), truth, "{:?} vs {:?}", g.edges(), h.edges());
        agreements[truth as usize] += 1;
    }
    assert!(agreements[0] > 0 && agreements[1] > 0);
}

#[test]
fn orbit_sizes_match_automorphism_counts() {
    for g in generate_3connected(6).unwrap() {
        let lab = canonical_labeling(&g);
        let aut = automorphism_count(&g);
        // Orbit-stabilizer: every orbit size divides the group order.
        for orbit in lab.orbits() {
            assert_eq!(aut % orbit.len(), 0);
        }
        let transitive = lab.orbits().len() == 1;
        let brute_transitive =
            (1..g.order()).all(|v| permutations(g.order()).iter().any(|p| p[0] == v && g.permuted(p) == g));
        assert_eq!(transitive, brute_transitive);
    }
}

#[test]
fn flow_fans_are_minimum() {
    for n in 5..=7 {
        for g in generate_3connected(n).unwrap() {
            if vertex_connectivity(&g).unwrap() != 3 {
                continue;
            }
            for rec in smallest_cuts(&g).unwrap() {
                let cut = rec.cut_vertices();
                for comp in &rec.components {
                    let inside = comp.to_vec();
                    for &c in &inside {
                        let flow = 4 + min_fan_interior(&g, c, &rec.cut, comp).unwrap();
                        assert_eq!(Some(flow), brute_min_fan_order(&g, c, &cut, &inside));
                        let fan = min_fan_from(&g, c, &rec.cut, comp).unwrap();
                        assert_eq!(fan.order(), flow);
                        assert_eq!(fan.order(), fan.edge_count() + 1);
                    }
                }
            }
        }
    }
}

#[test]
fn smallest_cuts_are_minimal_and_partition() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rng.gen_range(4..=8);
        let p = rng.gen_range(0.3..0.9);
        let g = random_graph(&mut rng, n, p);
        if g.is_complete() || !g.is_connected() {
            continue;
        }
        let kappa = vertex_connectivity(&g).unwrap();
        for rec in smallest_cuts(&g).unwrap() {
            assert_eq!(rec.cut.len(), kappa);
            assert!(rec.components.len() >= 2);
            let mut union = rec.cut.clone();
            for (i, c) in rec.components.iter().enumerate() {
                assert!(g.is_connected_within(c));
                assert!(union.is_disjoint(c));
                union.union_with(c);
                for d in &rec.components[i + 1..] {
                    assert!(c.iter().all(|x| d.iter().all(|y| !g.has_edge(x, y))));
                }
            }
            assert_eq!(union, g.vertex_set());
            for v in rec.cut.iter() {
                let mut smaller = rec.cut.clone();
                smaller.remove(v);
                assert!(g.is_connected_within(&g.vertex_set().difference(&smaller)));
            }
        }
    }
}

#[test]
fn fragments_close_under_complement_and_satisfy_inequality() {
    for g in generate_3connected(7).unwrap() {
        if g.is_complete() {
            continue;
        }
        let cuts = smallest_cuts(&g).unwrap();
        let frags: Vec<Fragment> = cuts.iter().flat_map(|t| fragments_of(&g, t, FragmentMode::Exhaustive)).collect();
        for f in &frags {
            assert!(!f.vertices.is_empty() && !f.complement.is_empty());
            assert!(frags.contains(&f.complementary()));
            for x in f.vertices.iter() {
                assert!(g.neighbor_iter(x).all(|y| f.vertices.contains(y) || f.cut.contains(y)));
            }
        }
        for f in &frags {
            for h in &frags {
                assert!(lemma5_check(f, h).unwrap());
            }
        }
    }
}

#[test]
fn two_connected_witness_implies_contractible() {
    let mut hits = 0;
    for g in generate_3connected(7).unwrap() {
        let n = g.order();
        let pairs = non_edges(&g);
        for mask in 1u32..1 << n {
            if mask.count_ones() < 3 {
                continue;
            }
            let h = VertexSet::from_iter_with(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            for &(u, v) in &pairs {
                if h.contains(u) || h.contains(v) {
                    continue;
                }
                if lemma1_witness(&g, &h, u, v).unwrap() {
                    hits += 1;
                    assert!(brute_contractible(&g, u, v));
                }
            }
        }
    }
    assert!(hits > 0);
}
