mod common;

use permcsp::csp::{evaluate, Constraint, Ordering, PermCspInstance};
use permcsp::generate::{random_bounded_degree_graph, random_grid, random_sparse_cnf, rng_from_seed};
use permcsp::graph::{GridGraph, SimpleGraph};
use permcsp::io;
use permcsp::reductions::{
    distance3_partition, reduce_clique_to_perm6, reduce_dcnnb_to_perm4, ternary_gray,
};
use permcsp::solvers::{solve_brute, solve_dp3, BruteOptions};
use proptest::prelude::*;

fn instance(max_n: usize, max_len: usize) -> impl Strategy<Value = PermCspInstance> {
    (2..=max_n).prop_flat_map(move |n| {
        let con = Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_flat_map(move |vars| {
                (1..=max_len.min(n)).prop_map(move |len| Constraint::new(vars[..len].to_vec()))
            });
        prop::collection::vec(con, 0..12)
            .prop_map(move |cons| PermCspInstance::new(n, cons).unwrap())
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle()
}

fn grid(max_side: usize) -> impl Strategy<Value = GridGraph> {
    (1..=max_side, any::<u64>(), 0.0..1.0f64)
        .prop_map(|(side, seed, p)| random_grid(&mut rng_from_seed(seed), side, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_preserves_the_count(
        (inst, perm, order) in instance(7, 4).prop_flat_map(|i| {
            let n = i.num_vars();
            (Just(i), permutation(n), permutation(n))
        })
    ) {
        // Rename variable v to perm[v] in both the instance and the ordering.
        let renamed = PermCspInstance::new(
            inst.num_vars(),
            inst.constraints()
                .iter()
                .map(|c| Constraint::new(c.vars().iter().map(|&v| perm[v as usize]).collect::<Vec<_>>()))
                .collect(),
        )
        .unwrap();
        let ord = Ordering::from_sequence(&order).unwrap();
        let moved: Vec<u32> = order.iter().map(|&v| perm[v as usize]).collect();
        let ord2 = Ordering::from_sequence(&moved).unwrap();
        prop_assert_eq!(evaluate(&inst, &ord).unwrap(), evaluate(&renamed, &ord2).unwrap());
    }

    #[test]
    fn reversal_complements_pair_constraints(
        (inst, order) in instance(7, 4).prop_flat_map(|i| {
            let n = i.num_vars();
            (Just(i), permutation(n))
        })
    ) {
        let short = PermCspInstance::new(
            inst.num_vars(),
            inst.constraints().iter().filter(|c| c.len() <= 2).cloned().collect(),
        )
        .unwrap();
        let ord = Ordering::from_sequence(&order).unwrap();
        let mut rev = order.clone();
        rev.reverse();
        let rev = Ordering::from_sequence(&rev).unwrap();
        let pairs = short.constraints().iter().filter(|c| c.len() == 2).count() as u64;
        let singles = short.num_constraints() as u64 - pairs;
        // A pair is satisfied by exactly one of an ordering and its reverse.
        prop_assert_eq!(
            evaluate(&short, &ord).unwrap() + evaluate(&short, &rev).unwrap(),
            pairs + 2 * singles
        );
    }

    #[test]
    fn dp3_equals_brute(inst in instance(7, 3)) {
        let d = solve_dp3(&inst).unwrap();
        let b = solve_brute(&inst, &BruteOptions::default()).unwrap();
        prop_assert_eq!(d.optimum, b.optimum);
        prop_assert_eq!(evaluate(&inst, &d.witness).unwrap(), d.optimum);
    }

    #[test]
    fn adding_a_constraint_never_lowers_the_optimum(
        (inst, extra) in instance(6, 3).prop_flat_map(|i| {
            let n = i.num_vars();
            (Just(i), permutation(n).prop_map(|p| Constraint::new(p[..2].to_vec())))
        })
    ) {
        let before = solve_dp3(&inst).unwrap().optimum;
        let mut cons = inst.constraints().to_vec();
        cons.push(extra);
        let after = solve_dp3(&PermCspInstance::new(inst.num_vars(), cons).unwrap()).unwrap().optimum;
        prop_assert!(after == before || after == before + 1);
    }

    #[test]
    fn brute_is_thread_count_independent(inst in instance(7, 4), threads in 1..4usize) {
        let one = solve_brute(&inst, &BruteOptions::default()).unwrap();
        let many = solve_brute(&inst, &BruteOptions { threads, ..BruteOptions::default() }).unwrap();
        prop_assert_eq!(one.optimum, many.optimum);
        prop_assert_eq!(one.witness, many.witness);
    }

    #[test]
    fn pcsp_round_trip(inst in instance(9, 5)) {
        let text = io::write_pcsp(&inst);
        let back = io::read_pcsp(&text).unwrap();
        prop_assert_eq!(io::write_pcsp(&back), text);
        prop_assert_eq!(back, inst);
    }

    #[test]
    fn ordering_round_trip(order in (1..12usize).prop_flat_map(permutation)) {
        let ord = Ordering::from_sequence(&order).unwrap();
        prop_assert_eq!(io::read_ordering(&io::write_ordering(&ord), order.len()).unwrap(), ord);
    }

    #[test]
    fn grid_round_trip(g in grid(4)) {
        let text = io::write_grid(&g);
        prop_assert_eq!(io::read_grid(&text).unwrap(), g);
    }

    #[test]
    fn cnf_and_graph_round_trip(seed in any::<u64>(), vars in 3..8usize, clauses in 1..8usize) {
        let mut rng = rng_from_seed(seed);
        if let Ok(cnf) = random_sparse_cnf(&mut rng, vars, clauses, 3, 1..=3) {
            prop_assert_eq!(io::read_dimacs(&io::write_dimacs(&cnf)).unwrap(), cnf);
        }
        let g = random_bounded_degree_graph(&mut rng, vars, 3, vars).unwrap();
        prop_assert_eq!(io::read_graph(&io::write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn certificate_round_trip(g in grid(3)) {
        let cert = reduce_clique_to_perm6(&g, 2 * g.side()).unwrap();
        let text = io::write_certificate(&cert);
        prop_assert_eq!(io::read_certificate(&text).unwrap(), cert);
    }

    #[test]
    fn decoded_grid_rebuilds_the_certificate(g in grid(3)) {
        let cert = reduce_clique_to_perm6(&g, 2 * g.side()).unwrap();
        prop_assert_eq!(cert.decode_grid().unwrap(), g);
    }

    #[test]
    fn partition_classes_are_far_apart(seed in any::<u64>(), n in 2..30usize, deg in 1..5usize) {
        let mut rng = rng_from_seed(seed);
        let m = (n * deg / 2).min(n * (n - 1) / 2) / 2;
        let g = random_bounded_degree_graph(&mut rng, n, deg, m).unwrap();
        let parts = distance3_partition(&g, deg).unwrap();
        prop_assert_eq!(parts.len(), deg * deg + 1);
        let dist = bfs_all(&g);
        for class in &parts {
            for (a, &u) in class.iter().enumerate() {
                for &v in &class[a + 1..] {
                    prop_assert!(dist[u][v] >= 3, "{} and {} at distance {}", u, v, dist[u][v]);
                }
            }
        }
    }
}

fn bfs_all(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.num_vertices();
    (0..n)
        .map(|s| {
            let mut d = vec![usize::MAX; n];
            d[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in g.neighbors(u) {
                    if d[v] == usize::MAX {
                        d[v] = d[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

#[test]
fn gray_code_is_a_bijection_with_single_digit_steps() {
    for x in 1..=6 {
        let g = ternary_gray(x).unwrap();
        for (i, w) in g.words().enumerate() {
            assert_eq!(g.index_of(w), Some(i));
        }
        for i in 1..g.len() {
            let diff = g.word(i - 1).iter().zip(g.word(i)).filter(|(a, b)| a != b).count();
            assert_eq!(diff, 1);
        }
    }
}

#[test]
fn larger_dummy_counts_keep_the_count_identity() {
    // The identity depends only on regularity, not on how many dummies.
    let mut rng = rng_from_seed(11);
    for h in common::handcrafted_bicliques(&mut rng, 2, 2, 40) {
        for dummies in [8, 9, 12] {
            let cert = reduce_dcnnb_to_perm4(&h, 2, dummies).unwrap();
            let conv = permcsp::solvers::solve_convenient(&cert, &h).unwrap();
            assert!(conv.result.optimum <= cert.target);
        }
    }
}
