//! Russian Dolls maximum clique search (RDMC).
//!
//! Vertices enter the explored set `R` one doll at a time. For the smallest
//! unexplored vertex `v` we decide whether `R ∩ N(v)` holds a clique as large
//! as the incumbent. A "no" just moves `v` into `R`. A "yes" grows the
//! incumbent by `k`, after which any `k`-partite piece of the unexplored set
//! can join `R` without its dolls ever being examined. Decision subproblems
//! are solved by the same scheme recursively.

use crate::bitset::BitSet;
use crate::coloring::{max_partite_subgraph, Colorer};
use crate::config::{Algorithm, SolverConfig};
use crate::graph::{ordering, Graph};
use crate::stats::{SearchStats, SolveResult};
use serde::Serialize;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    /// A clique of the requested size exists and was written to `cq`.
    Yes,
    No,
    /// A clique larger than the incumbent turned up through a greedy
    /// extension; the whole decision search was abandoned.
    Interrupted,
    TimedOut,
}

/// Adds to `cq`, in increasing id order, every vertex of `s` adjacent to all
/// of the current clique. Returns how many were added.
pub fn extend_clique(g: &Graph, s: &BitSet, cq: &mut BitSet) -> usize {
    let mut candidates = s.diff(cq);
    for u in cq.iter() {
        candidates.intersect_with(g.neighbors(u));
    }
    greedy_extend(g, &mut candidates, cq)
}

/// `candidates` must already be the common neighborhood of `cq`.
#[inline]
fn greedy_extend(g: &Graph, candidates: &mut BitSet, cq: &mut BitSet) -> usize {
    let mut added = 0;
    while let Some(v) = candidates.first() {
        cq.add(v);
        candidates.rem(v);
        candidates.intersect_with(g.neighbors(v));
        added += 1;
    }
    added
}

/// If `|cq| >= threshold * max`, greedily extends a copy of `cq` over
/// `new_s ∪ outside` and returns it when it beats `max`.
pub fn try_interrupt(
    g: &Graph,
    cq: &BitSet,
    new_s: &BitSet,
    outside: &BitSet,
    max: usize,
    threshold: f64,
) -> Option<BitSet> {
    if (cq.cardinality() as f64) < threshold * max as f64 {
        return None;
    }
    let mut clique = cq.clone();
    extend_clique(g, &new_s.union(outside), &mut clique);
    (clique.cardinality() > max).then_some(clique)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    /// Entered `R` after a "no" decision.
    Decided,
    /// Entered `R` through a partial coloring.
    Colored,
}

/// One vertex of the doll sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DollEntry {
    pub vertex: usize,
    pub kind: EntryKind,
    /// 1-based top-level iteration that inserted the vertex.
    pub iteration: usize,
    /// Exact clique number of the doll for decided entries, an upper bound
    /// for colored ones.
    pub bound: usize,
    /// 1-based color class, for colored entries.
    pub color: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IterationOutcome {
    Yes,
    No,
    Interrupted,
    TimedOut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IterationRecord {
    pub iteration: usize,
    pub vertex: usize,
    pub max_before: usize,
    /// `R ∩ N(v)`, the decision subproblem.
    pub candidates: Vec<usize>,
    pub outcome: IterationOutcome,
    /// Clique returned by the decision (empty unless it succeeded).
    pub found: Vec<usize>,
    /// Incumbent after the greedy extension, when it changed.
    pub extended: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

/// Instrumentation of a top-level run. Vertex ids are in the numbering of
/// the graph handed to the solver.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DollTrace {
    pub entries: Vec<DollEntry>,
    pub iterations: Vec<IterationRecord>,
}

impl DollTrace {
    pub fn sequence(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.vertex).collect()
    }

    pub fn bounds(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.bound).collect()
    }

    fn relabel(&mut self, map: &[usize]) {
        let m = |xs: &mut Vec<usize>| xs.iter_mut().for_each(|x| *x = map[*x]);
        for e in &mut self.entries {
            e.vertex = map[e.vertex];
        }
        for it in &mut self.iterations {
            it.vertex = map[it.vertex];
            m(&mut it.candidates);
            m(&mut it.found);
            m(&mut it.extended);
            it.classes.iter_mut().for_each(m);
            it.candidates.sort_unstable();
            it.found.sort_unstable();
            it.extended.sort_unstable();
        }
    }
}

pub(crate) struct Clock {
    start: Instant,
    limit: Duration,
    ticks: u32,
    expired: bool,
}

impl Clock {
    const STRIDE: u32 = 1024;

    pub(crate) fn new(limit: Duration) -> Self {
        Clock {
            start: Instant::now(),
            limit,
            ticks: 0,
            expired: false,
        }
    }

    /// True once the limit has passed; the clock is only read every
    /// `STRIDE` ticks.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.ticks += 1;
        if self.ticks >= Self::STRIDE {
            self.ticks = 0;
            self.expired = self.start.elapsed() >= self.limit;
        }
        self.expired
    }

    pub(crate) fn seconds(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }
}

#[derive(Clone, Debug, Default)]
struct Frame {
    s: BitSet,
    r: BitSet,
    /// Common neighborhood of the current path, maintained only when
    /// interruption is enabled.
    common: BitSet,
    scratch: BitSet,
    colorer: Option<Colorer>,
}

pub struct RdSearch<'g> {
    g: &'g Graph,
    config: SolverConfig,
    max: usize,
    best: BitSet,
    /// Unexplored vertices at the current top-level iteration.
    outside: BitSet,
    path: Vec<usize>,
    frames: Vec<Frame>,
    pending: Option<BitSet>,
    stats: SearchStats,
    clock: Clock,
    trace: Option<DollTrace>,
}

impl<'g> RdSearch<'g> {
    pub fn new(g: &'g Graph, config: SolverConfig) -> Self {
        let n = g.n();
        RdSearch {
            g,
            clock: Clock::new(config.time_limit),
            config,
            max: 0,
            best: BitSet::new(n),
            outside: BitSet::new(n),
            path: Vec::new(),
            frames: Vec::new(),
            pending: None,
            stats: SearchStats::default(),
            trace: None,
        }
    }

    pub fn with_trace(mut self) -> Self {
        self.trace = Some(DollTrace::default());
        self
    }

    pub fn max(&self) -> usize {
        self.max
    }

    pub fn best(&self) -> &BitSet {
        &self.best
    }

    pub fn stats(&self) -> &SearchStats {
        &self.stats
    }

    pub fn take_trace(&mut self) -> Option<DollTrace> {
        self.trace.take()
    }

    /// Sets the incumbent used by [`RdSearch::decide`]'s interruption test.
    pub fn set_incumbent(&mut self, clique: BitSet) {
        self.max = clique.cardinality();
        self.best = clique;
    }

    /// Clique that interrupted the last decision, if any.
    pub fn interrupting_clique(&self) -> Option<&BitSet> {
        self.pending.as_ref()
    }

    fn frame(&mut self, depth: usize) -> &mut Frame {
        let n = self.g.n();
        while self.frames.len() <= depth {
            self.frames.push(Frame {
                s: BitSet::new(n),
                r: BitSet::new(n),
                common: BitSet::new(n),
                scratch: BitSet::new(n),
                colorer: Some(Colorer::new(n)),
            });
        }
        &mut self.frames[depth]
    }

    /// Does `G[s]` contain a clique of `ell` vertices? On `Yes` the clique is
    /// added to `cq`. `outside` is the unexplored set used by interruption.
    pub fn decide(&mut self, s: &BitSet, ell: usize, cq: &mut BitSet, outside: &BitSet) -> Decision {
        self.outside.copy_from(outside);
        self.pending = None;
        self.path.clear();
        let n = self.g.n();
        let f = self.frame(0);
        f.s.copy_from(s);
        f.common = BitSet::full(n);
        self.decide_at(0, ell, cq)
    }

    fn decide_at(&mut self, depth: usize, ell: usize, cq: &mut BitSet) -> Decision {
        if self.clock.tick() {
            return Decision::TimedOut;
        }
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if ell == 0 {
            return Decision::Yes;
        }
        let g = self.g;
        let recolor = self.config.recolor_at(depth, self.max);
        let interrupt = self.config.interruption;
        self.frame(depth + 1);

        let mut f = std::mem::take(&mut self.frames[depth]);
        let mut colorer = f.colorer.take().expect("frame colorer");
        f.r.clear();
        self.stats.subproblems_all += 1;
        colorer.partite(g, &mut f.s, &mut f.r, ell - 1, recolor);
        if !f.s.is_empty() {
            self.stats.subproblems_ne += 1;
        }

        let outcome = loop {
            let Some(v) = f.s.first() else {
                break Decision::No;
            };
            let child = self.frame(depth + 1);
            child.s.assign_inter(&f.r, g.neighbors(v));
            self.path.push(v);
            if interrupt {
                let child = &mut self.frames[depth + 1];
                child.common.assign_inter(&f.common, g.neighbors(v));
                if let Some(better) = self.interrupt_check(depth + 1) {
                    self.path.pop();
                    self.pending = Some(better);
                    self.stats.interruptions += 1;
                    break Decision::Interrupted;
                }
            }
            let answer = self.decide_at(depth + 1, ell - 1, cq);
            self.path.pop();
            match answer {
                Decision::Yes => {
                    cq.add(v);
                    break Decision::Yes;
                }
                Decision::No => {
                    f.r.add(v);
                    f.s.rem(v);
                }
                other => break other,
            }
        };

        f.colorer = Some(colorer);
        self.frames[depth] = f;
        outcome
    }

    /// Interruption test for the child frame at `depth`, whose candidate
    /// set and path neighborhood are already filled in.
    fn interrupt_check(&mut self, depth: usize) -> Option<BitSet> {
        let size = self.path.len();
        if (size as f64) < self.config.interruption_threshold * self.max as f64 {
            return None;
        }
        let g = self.g;
        let f = &mut self.frames[depth];
        f.scratch.copy_from(&f.s);
        f.scratch.union_with(&self.outside);
        f.scratch.intersect_with(&f.common);
        if size + f.scratch.cardinality() <= self.max {
            return None;
        }
        let mut clique = BitSet::from_elements(g.n(), self.path.iter().copied());
        let added = greedy_extend(g, &mut f.scratch, &mut clique);
        (size + added > self.max).then_some(clique)
    }

    fn record_best(&mut self, clique: BitSet) {
        self.max = clique.cardinality();
        self.best = clique;
        self.stats.best_found_at = self.clock.seconds();
    }

    /// Runs the top-level doll enumeration. Returns false if the time limit
    /// stopped it.
    pub fn run(&mut self) -> bool {
        let g = self.g;
        let n = g.n();
        let mut s = BitSet::full(n);
        let mut r = BitSet::new(n);
        let mut iteration = 0;
        let mut proven = true;

        while let Some(v) = s.first() {
            iteration += 1;
            let max_before = self.max;
            self.outside.copy_from(&s);
            self.pending = None;
            self.path.clear();
            self.path.push(v);
            let interrupt = self.config.interruption;
            let f = self.frame(0);
            f.s.assign_inter(&r, g.neighbors(v));
            if interrupt {
                f.common.copy_from(g.neighbors(v));
            }
            let candidates = self.trace.as_ref().map(|_| self.frames[0].s.to_vec());

            let mut cq = BitSet::new(n);
            let decision = self.decide_at(0, self.max, &mut cq);
            let found = cq.to_vec();

            let grown = match decision {
                Decision::Yes => {
                    extend_clique(g, &s, &mut cq);
                    Some(cq)
                }
                Decision::Interrupted => {
                    let mut better = self.pending.take().expect("interrupting clique");
                    extend_clique(g, &s, &mut better);
                    Some(better)
                }
                Decision::No => {
                    s.rem(v);
                    r.add(v);
                    None
                }
                Decision::TimedOut => {
                    proven = false;
                    None
                }
            };

            let mut classes = Vec::new();
            let mut extended = Vec::new();
            if let Some(clique) = grown {
                let k = clique.cardinality() - max_before;
                debug_assert!(k >= 1 && clique.contains(v));
                debug_assert!(g.is_clique(clique.iter()));
                extended = clique.to_vec();
                self.record_best(clique);
                let recolor = self.config.recolor_at(0, max_before);
                classes = max_partite_subgraph(g, &mut s, &mut r, k, recolor).to_vecs();
            }

            if let Some(trace) = self.trace.as_mut() {
                match decision {
                    Decision::No => {
                        let bound = trace.entries.last().map_or(0, |e| e.bound);
                        trace.entries.push(DollEntry {
                            vertex: v,
                            kind: EntryKind::Decided,
                            iteration,
                            bound,
                            color: None,
                        });
                    }
                    Decision::Yes | Decision::Interrupted => {
                        for (c, class) in classes.iter().enumerate() {
                            for &u in class {
                                trace.entries.push(DollEntry {
                                    vertex: u,
                                    kind: EntryKind::Colored,
                                    iteration,
                                    bound: max_before + c + 1,
                                    color: Some(c + 1),
                                });
                            }
                        }
                    }
                    Decision::TimedOut => {}
                }
                trace.iterations.push(IterationRecord {
                    iteration,
                    vertex: v,
                    max_before,
                    candidates: candidates.unwrap_or_default(),
                    outcome: match decision {
                        Decision::Yes => IterationOutcome::Yes,
                        Decision::No => IterationOutcome::No,
                        Decision::Interrupted => IterationOutcome::Interrupted,
                        Decision::TimedOut => IterationOutcome::TimedOut,
                    },
                    found,
                    extended,
                    classes,
                });
            }
            if !proven {
                break;
            }
        }
        self.stats.elapsed = self.clock.seconds();
        proven
    }
}

fn solve_inner(g: &Graph, config: &SolverConfig, traced: bool) -> (SolveResult, Option<DollTrace>) {
    let perm = ordering(g, config.ordering);
    let h = g.renumber(&perm).expect("orderings are permutations");
    let mut search = RdSearch::new(&h, config.clone());
    if traced {
        search = search.with_trace();
    }
    let proven = search.run();
    let mut witness: Vec<usize> = search.best().iter().map(|v| perm[v]).collect();
    witness.sort_unstable();
    let mut trace = search.take_trace();
    if let Some(t) = trace.as_mut() {
        t.relabel(&perm);
    }
    let result = SolveResult {
        algorithm: Algorithm::Rdmc,
        omega: search.max(),
        witness,
        proven,
        stats: search.stats().clone(),
        config: config.clone(),
    };
    (result, trace)
}

/// Maximum clique of `g` by Russian Dolls search. Renumbering according to
/// `config.ordering` happens before the clock starts.
pub fn solve(g: &Graph, config: &SolverConfig) -> SolveResult {
    solve_inner(g, config, false).0
}

/// As [`solve`], also returning the doll sequence.
pub fn solve_traced(g: &Graph, config: &SolverConfig) -> (SolveResult, DollTrace) {
    let (result, trace) = solve_inner(g, config, true);
    (result, trace.expect("tracing was requested"))
}
