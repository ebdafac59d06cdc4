mod common;

use num_rational::Ratio;
use proptest::prelude::*;
use tlsra_core::bounds::upper_bound;
use tlsra_core::exact::solve_exact_with;
use tlsra_core::greedy::run_greedy;
use tlsra_core::*;

fn small_instance() -> impl Strategy<Value = Instance> {
    (2usize..=9, any::<u64>(), 0.0f64..0.4, 0.3f64..0.9, any::<bool>()).prop_filter_map(
        "max-power graph must connect",
        |(n, seed, lo, hi, geometric)| {
            if geometric {
                gen_geometric(GeometricParams {
                    n,
                    r_min: 0.05 + lo * 0.5,
                    r_max: 0.3 + hi * 0.6,
                    side: 1.0,
                    seed,
                })
                .ok()
            } else {
                gen_random_abstract(n, lo, hi, seed).ok()
            }
        },
    )
}

fn order() -> impl Strategy<Value = MergingOrder> {
    prop_oneof![
        Just(MergingOrder::Lexicographic),
        any::<u64>().prop_map(MergingOrder::Permutation),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn edges_are_exactly_the_mutual_pairs(inst in small_instance()) {
        let g = inst.graph();
        let n = inst.n() as NodeId;
        for max in [false, true] {
            let derived = if max { g.e_max() } else { g.e_min() };
            let mut oracle = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if common::mutual(&inst, max, u, v) {
                        oracle.push((u, v));
                    }
                }
            }
            prop_assert_eq!(derived, &oracle[..]);
        }
        for e in g.e_min() {
            prop_assert!(g.e_max().binary_search(e).is_ok());
        }
    }

    #[test]
    fn components_agree_with_union_find(inst in small_instance()) {
        let g = inst.graph();
        let bfs = components(inst.n(), g.e_min());
        let mut sets = DisjointSets::new(inst.n());
        for &(u, v) in g.e_min() {
            sets.union(u, v);
        }
        prop_assert_eq!(bfs.count(), sets.set_count());
        for u in 0..inst.n() as NodeId {
            for v in 0..inst.n() as NodeId {
                prop_assert_eq!(bfs.label(u) == bfs.label(v), sets.find(u) == sets.find(v));
            }
        }
        prop_assert!(bfs.labels().iter().all(|&l| (l as usize) < bfs.count()));
    }

    #[test]
    fn min_max_graph_is_monotone(inst in small_instance(), bits in any::<u16>(), extra in any::<u16>()) {
        let n = inst.n();
        let small: Vec<NodeId> = (0..n as NodeId).filter(|&v| bits >> v & 1 == 1).collect();
        let big: Vec<NodeId> = (0..n as NodeId).filter(|&v| (bits | extra) >> v & 1 == 1).collect();
        let g = inst.graph();
        let es = g.min_max_edges(&small).unwrap();
        let eb = g.min_max_edges(&big).unwrap();
        prop_assert!(es.iter().all(|e| eb.binary_search(e).is_ok()));
        let fs = g.is_feasible(&small);
        prop_assert_eq!(fs, common::feasible(&inst, &small));
        if fs {
            prop_assert!(g.is_feasible(&big));
        }
    }

    #[test]
    fn greedy_is_feasible_progressive_and_phase_maximal(inst in small_instance(), k in 2usize..=5, order in order()) {
        let run = run_greedy(&inst, k, &order).unwrap();
        let sol = &run.solution;
        prop_assert!(common::feasible(&inst, &sol.u_set));
        let taken: Vec<Vec<NodeId>> = sol.trace.iter().map(|m| m.nodes.clone()).collect();
        let mut before = common::count(&common::labels_after(&inst, &[]));
        for (i, m) in sol.trace.iter().enumerate() {
            let labels = common::labels_after(&inst, &taken[..i]);
            prop_assert!(common::is_merging(&inst, &labels, &m.nodes));
            prop_assert_eq!(m.nodes.len(), m.phase_k);
            let after = common::count(&common::labels_after(&inst, &taken[..=i]));
            prop_assert_eq!(before - after, m.phase_k - 1);
            before = after;
        }
        prop_assert_eq!(before, 1);
        let mut u: Vec<NodeId> = taken.concat();
        u.sort_unstable();
        u.dedup();
        prop_assert_eq!(&u, &sol.u_set);
        for &(phase, end) in &run.phase_ends {
            let labels = common::labels_after(&inst, &taken[..end]);
            prop_assert!(common::all_mergings(&inst, &labels, phase).is_empty(),
                "{}-merging left after its phase", phase);
        }
    }

    #[test]
    fn fast3_single_pass_leaves_no_three_merging(inst in small_instance()) {
        let run = fast3_solve(&inst).unwrap();
        let sol = &run.solution;
        prop_assert!(common::feasible(&inst, &sol.u_set));
        let taken: Vec<Vec<NodeId>> = sol.trace.iter().map(|m| m.nodes.clone()).collect();
        prop_assert!(sol.trace[..run.three_mergings].iter().all(|m| m.phase_k == 3));
        prop_assert!(sol.trace[run.three_mergings..].iter().all(|m| m.phase_k == 2));
        let mut before = common::count(&common::labels_after(&inst, &[]));
        for (i, m) in sol.trace.iter().enumerate() {
            prop_assert!(common::is_merging(&inst, &common::labels_after(&inst, &taken[..i]), &m.nodes));
            let after = common::count(&common::labels_after(&inst, &taken[..=i]));
            prop_assert_eq!(before - after, m.phase_k - 1);
            before = after;
        }
        prop_assert_eq!(before, 1);
        let labels = common::labels_after(&inst, &taken[..run.three_mergings]);
        prop_assert!(common::all_mergings(&inst, &labels, 3).is_empty());
    }

    #[test]
    fn exact_matches_brute_force_and_bounds_hold(inst in small_instance()) {
        let exact = solve_exact(&inst, None).unwrap();
        let plain = solve_exact_with(&inst, ExactOptions { budget: None, prune: false }).unwrap();
        let (opt, sols) = common::brute_opt(&inst);
        prop_assert_eq!(exact.size, opt);
        prop_assert_eq!(plain.size, opt);
        prop_assert_eq!(&exact.u_opt, &sols[0]);

        let cc = lower_bound_cc(&inst);
        prop_assert!(cc <= opt);
        if cc >= 2 {
            prop_assert!(opt <= 2 * (cc - 1));
        }
        let mut sizes = vec![
            spanning_tree_baseline(&inst).unwrap().size(),
            fast3_solve(&inst).unwrap().solution.size(),
        ];
        for k in 2..=5 {
            let s = approx_2lsra_k(&inst, k, &MergingOrder::Lexicographic).unwrap().size();
            if opt > 0 {
                let r = Ratio::new(s as i128, opt as i128);
                prop_assert!(r <= upper_bound(k), "k = {} ratio {} above bound", k, r);
            }
            sizes.push(s);
        }
        if opt > 0 {
            prop_assert!(Ratio::new(sizes[1] as i128, opt as i128) <= upper_bound(3));
        }
        for s in sizes {
            prop_assert!(s >= opt);
            if cc >= 2 {
                prop_assert!(s <= 2 * (cc - 1));
            } else {
                prop_assert_eq!(s, 0);
            }
        }
    }
}
