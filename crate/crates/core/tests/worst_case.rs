mod common;

use tlsra_core::exact::feasible_subsets_of_size;
use tlsra_core::fast3::scan_order_from_schedule;
use tlsra_core::generators::ScheduleFile;
use tlsra_core::greedy::run_greedy;
use tlsra_core::instance::{load, min_max_graph, save};
use tlsra_core::*;

fn i1(k: usize) -> WorstCase {
    gen_worst_case(WorstCaseParams { k, t: 1 }).unwrap()
}

// Edge counts from expanding the set definitions term by term:
// |E_min| = t + t(k-1); |E_max| = |E_min| + t + 2t(k-2) + t + t(k-1).
fn expected_edges(k: usize, t: usize) -> (usize, usize) {
    let e_min = t + t * (k - 1);
    (e_min, e_min + t + 2 * t * (k - 2) + t + t * (k - 1))
}

#[test]
fn edge_counts_match_set_definitions() {
    let wc = i1(3);
    let g = wc.instance.graph();
    assert_eq!((g.e_min().len(), g.e_max().len()), (3, 9));
    for k in 3..7 {
        for t in [1, 2, 5] {
            let wc = gen_worst_case(WorstCaseParams { k, t }).unwrap();
            let g = wc.instance.graph();
            assert_eq!((g.e_min().len(), g.e_max().len()), expected_edges(k, t));
            assert_eq!(wc.instance.n(), 1 + t + 3 * t * (k - 1));
        }
    }
}

#[test]
fn min_components_are_one_plus_two_k_minus_one_t() {
    for k in 3..6 {
        for t in 1..4 {
            let wc = gen_worst_case(WorstCaseParams { k, t }).unwrap();
            let n = wc.instance.n();
            let cc = components(n, wc.instance.graph().e_min());
            let oracle = common::flood_labels(n, |a, b| common::mutual(&wc.instance, false, a, b));
            assert_eq!(cc.count(), common::count(&oracle));
            assert_eq!(cc.count(), 1 + 2 * (k - 1) * t);
            assert_eq!(lower_bound_cc(&wc.instance), wc.expected_opt);
        }
    }
}

#[test]
fn min_max_graph_of_row_three() {
    let wc = i1(3);
    let row: Vec<NodeId> = (0..3).map(|c| wc.id_of((1, 3, c)).unwrap()).collect();
    let mut expected = wc.instance.graph().e_min().to_vec();
    expected.push((row[0], row[1]));
    expected.push((row[1], row[2]));
    expected.sort_unstable();
    assert_eq!(min_max_graph(&wc.instance, &row).unwrap(), expected);
}

#[test]
fn optimal_set_is_feasible_and_empty_is_not() {
    let wc = i1(3);
    let opt = wc.optimal_set();
    let by_label: Vec<NodeId> = [(0, 0, 0), (1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)]
        .into_iter()
        .map(|l| wc.id_of(l).unwrap())
        .collect();
    assert_eq!(opt, by_label);
    assert!(is_feasible_both(&wc.instance, &opt));
    assert!(!is_feasible_both(&wc.instance, &[]));
    let all: Vec<NodeId> = (0..wc.instance.n() as NodeId).collect();
    assert!(is_feasible_both(&wc.instance, &all));
}

fn is_feasible_both(inst: &Instance, u: &[NodeId]) -> bool {
    let fast = inst.graph().is_feasible(u);
    assert_eq!(fast, common::feasible(inst, u));
    fast
}

#[test]
fn first_three_merging_by_brute_force() {
    let wc = i1(3);
    let inst = &wc.instance;
    let labels = common::labels_after(inst, &[]);
    let all = common::all_mergings(inst, &labels, 3);
    // (0,0,0),(1,1,1),(1,2,1) / (0,0,0),(1,2,1),(1,2,2) / (1,1,1),(1,2,1),(1,2,2)
    // (1,1,2),(1,2,1),(1,2,2) / (1,3,0),(1,3,1),(1,3,2)
    assert_eq!(
        all,
        vec![vec![0, 1, 3], vec![0, 3, 4], vec![1, 3, 4], vec![2, 3, 4], vec![5, 6, 7]]
    );
    let g = inst.graph();
    let found = find_k_merging(3, g.min_components(), g, &MergingOrder::Lexicographic);
    assert_eq!(found, Some(all[0].clone()));
    assert!(all.contains(&wc.schedule[0]));
}

#[test]
fn adversarial_replay_i1_k3() {
    let wc = i1(3);
    let sol = approx_2lsra_k(&wc.instance, 3, &MergingOrder::Schedule(wc.schedule.clone())).unwrap();
    assert_eq!(sol.size(), 7);
    let phases: Vec<usize> = sol.trace.iter().map(|m| m.phase_k).collect();
    assert_eq!(phases, vec![3, 2, 2]);
    assert!(common::feasible(&wc.instance, &sol.u_set));
}

#[test]
fn adversarial_replay_formula() {
    for k in 3..6 {
        for t in [1, 2, 5] {
            let wc = gen_worst_case(WorstCaseParams { k, t }).unwrap();
            let run = run_greedy(&wc.instance, k, &MergingOrder::Schedule(wc.schedule.clone())).unwrap();
            assert_eq!(run.solution.size(), k * t + 2 * (k - 1) * t);
            assert_eq!(run.solution.trace.len(), wc.schedule.len());
        }
    }
}

#[test]
fn schedule_steps_are_mergings_at_replay() {
    let wc = gen_worst_case(WorstCaseParams { k: 4, t: 2 }).unwrap();
    for (i, m) in wc.schedule.iter().enumerate() {
        let labels = common::labels_after(&wc.instance, &wc.schedule[..i]);
        assert!(common::is_merging(&wc.instance, &labels, m), "step {i}");
    }
}

#[test]
fn fast3_adversarial_scan_order() {
    let wc = i1(3);
    let order = scan_order_from_schedule(wc.instance.graph(), &wc.schedule);
    assert_eq!(order[0], wc.id_of((1, 3, 1)).unwrap());
    let run = fast3_solve_with_order(&wc.instance, Some(&order)).unwrap();
    assert_eq!(run.solution.size(), 7);
    assert_eq!(run.three_mergings, 1);
    // natural scan order finds the optimum here
    assert_eq!(fast3_solve(&wc.instance).unwrap().solution.size(), 5);
}

#[test]
fn exact_optimum_and_uniqueness() {
    let wc = i1(3);
    let r = solve_exact(&wc.instance, None).unwrap();
    assert_eq!(r.size, 5);
    assert_eq!(r.u_opt, wc.optimal_set());
    assert_eq!(feasible_subsets_of_size(&wc.instance, 5).unwrap(), vec![wc.optimal_set()]);
    let (size, sols) = common::brute_opt(&wc.instance);
    assert_eq!((size, sols), (5, vec![wc.optimal_set()]));

    let wc = i1(4);
    assert_eq!(wc.instance.n(), 11);
    let r = solve_exact(&wc.instance, None).unwrap();
    assert_eq!(r.size, 7);
    assert_eq!(common::brute_opt(&wc.instance).0, 7);
}

#[test]
fn save_load_round_trip_with_schedule() {
    let dir = tempfile::tempdir().unwrap();
    let wc = gen_worst_case(WorstCaseParams { k: 4, t: 3 }).unwrap();
    let path = dir.path().join("i3.json");
    save(&wc.instance, &path).unwrap();
    let back = load(&path).unwrap();
    assert_eq!(back, wc.instance);
    assert_eq!(back.digest(), wc.instance.digest());
    assert_eq!(std::fs::read(&path).unwrap(), back.to_canonical_bytes());

    let spath = dir.path().join("schedule.json");
    wc.schedule_file().save(&spath).unwrap();
    assert_eq!(ScheduleFile::load(&spath).unwrap().mergings, wc.schedule);
}
