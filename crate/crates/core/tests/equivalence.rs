mod common;

use tlsra_core::*;

fn counterexample() -> Instance {
    let edges_max = [(0, 1), (0, 3), (1, 2), (1, 3), (1, 4), (3, 4)];
    let mut dmax = vec![Vec::new(); 5];
    for (u, v) in edges_max {
        dmax[u].push(v as NodeId);
        dmax[v].push(u as NodeId);
    }
    let mut dmin = vec![Vec::new(); 5];
    dmin[0].push(1);
    dmin[1].push(0);
    Instance::new(5, dmin, dmax).unwrap()
}

// fast3 and greedy-3 are both valid executions of the same greedy scheme but
// break ties differently, so their sizes can differ.
#[test]
fn tie_breaking_can_change_size() {
    let inst = counterexample();
    let fast = fast3_solve(&inst).unwrap().solution;
    let greedy = approx_2lsra_k(&inst, 3, &MergingOrder::Lexicographic).unwrap();
    assert_eq!(fast.trace, vec![Merging::new(vec![1, 2, 3], 3), Merging::new(vec![1, 4], 2)]);
    assert_eq!(greedy.trace, vec![Merging::new(vec![0, 3, 4], 3), Merging::new(vec![1, 2], 2)]);
    assert_eq!((fast.size(), greedy.size()), (4, 5));

    // replaying fast3's choices through the generic solver is accepted
    let schedule = fast.trace.iter().map(|m| m.nodes.clone()).collect();
    let replay = approx_2lsra_k(&inst, 3, &MergingOrder::Schedule(schedule)).unwrap();
    assert_eq!(replay.u_set, fast.u_set);
}

#[test]
fn fast3_is_a_valid_greedy_execution_on_corpus() {
    for e in generators::small_corpus(200, 99) {
        let fast = fast3_solve(&e.instance).unwrap().solution;
        let schedule = fast.trace.iter().map(|m| m.nodes.clone()).collect();
        let replay = approx_2lsra_k(&e.instance, 3, &MergingOrder::Schedule(schedule))
            .unwrap_or_else(|err| panic!("{}: {err}", e.name));
        assert_eq!(replay.u_set, fast.u_set, "{}", e.name);
    }
}
