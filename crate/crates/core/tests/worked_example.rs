use rdclique::rd::{self, EntryKind, IterationOutcome};
use rdclique::{bb, ColoringKind, Graph, OrderingKind, SolverConfig};

const EDGES: [(usize, usize); 19] = [
    (0, 1), (0, 4), (0, 6), (1, 2), (1, 8), (2, 3), (2, 6), (2, 7), (2, 8), (3, 4),
    (3, 6), (3, 7), (4, 5), (4, 8), (5, 6), (6, 7), (7, 8), (8, 9), (9, 0),
];

fn example() -> Graph {
    Graph::from_edges(10, &EDGES).unwrap()
}

fn config(interruption: bool) -> SolverConfig {
    SolverConfig::new(ColoringKind::Greedy, OrderingKind::Identity).with_interruption(interruption)
}

#[test]
fn rd_trace() {
    let g = example();
    for interruption in [false, true] {
        let (res, trace) = rd::solve_traced(&g, &config(interruption));
        assert_eq!(res.omega, 4);
        assert!(res.proven);
        assert_eq!(res.witness, vec![2, 3, 6, 7]);

        let its = &trace.iterations;
        assert_eq!(its.len(), 3);
        let candidates: Vec<&[usize]> = its.iter().map(|i| i.candidates.as_slice()).collect();
        assert_eq!(candidates, [&[][..], &[0, 3, 5], &[0, 2, 3, 5]]);
        assert_eq!(its.iter().map(|i| i.vertex).collect::<Vec<_>>(), [0, 4, 6]);
        assert_eq!(its.iter().map(|i| i.max_before).collect::<Vec<_>>(), [0, 2, 2]);
        assert_eq!(its[1].outcome, IterationOutcome::No);
        assert_eq!(its[0].classes, vec![vec![0, 2, 5], vec![1, 3, 9]]);
        assert_eq!(its[2].classes, vec![vec![6, 8], vec![7]]);
        assert_eq!(its[2].extended, vec![2, 3, 6, 7]);

        assert_eq!(trace.sequence(), vec![0, 2, 5, 1, 3, 9, 4, 6, 8, 7]);
        assert_eq!(trace.bounds(), vec![1, 1, 1, 2, 2, 2, 2, 3, 3, 4]);
        let decided: Vec<usize> = trace
            .entries
            .iter()
            .filter(|e| e.kind == EntryKind::Decided)
            .map(|e| e.vertex)
            .collect();
        assert_eq!(decided, vec![4]);
    }
}

#[test]
fn rd_counters() {
    let res = rd::solve(&example(), &config(false));
    assert_eq!(res.stats.subproblems_all, 3);
    assert_eq!(res.stats.subproblems_ne, 2);
}

#[test]
fn bb_root_children() {
    let g = example();
    let mut search = bb::BbSearch::new(&g, config(false));
    assert!(search.run());
    assert_eq!(search.max(), 4);
    let kids = search.root_children();
    let sets: Vec<&[usize]> = kids.iter().map(|c| c.candidates.as_slice()).collect();
    assert_eq!(sets, [&[0, 8][..], &[1, 2, 4, 7], &[2, 3, 6]]);
    let mut prev = 0;
    let increments: Vec<usize> = kids
        .iter()
        .map(|c| {
            let inc = c.max_after - prev;
            prev = c.max_after;
            inc
        })
        .collect();
    assert_eq!(increments, vec![2, 1, 1]);
}

#[test]
fn dimacs_numbering_round_trip() {
    let g = example();
    let mut out = Vec::new();
    rdclique::graph::write_dimacs(&g, &mut out).unwrap();
    let parsed = rdclique::graph::parse_dimacs_str(std::str::from_utf8(&out).unwrap()).unwrap();
    assert_eq!(parsed.graph.edges(), g.edges());
    assert_eq!(bb::solve(&parsed.graph, &SolverConfig::default()).witness, vec![2, 3, 6, 7]);
}
