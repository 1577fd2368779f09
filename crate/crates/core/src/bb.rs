//! Partial-coloring branch and bound (PBBMC).
//!
//! Each node colors as much of its candidate set as the incumbent allows
//! with `MAX - CUR` colors; colored vertices cannot lead to a better clique
//! and are never branched on. Uncolored vertices are branched on greatest
//! first, and whenever a child improves the incumbent the freed budget is
//! spent coloring more of what is left.

use crate::bitset::BitSet;
use crate::coloring::Colorer;
use crate::config::{Algorithm, SolverConfig};
use crate::graph::{ordering, Graph};
use crate::rd::Clock;
use crate::stats::{SearchStats, SolveResult};

/// Root-level branching record, used by the worked-example tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootChild {
    pub vertex: usize,
    pub candidates: Vec<usize>,
    pub max_after: usize,
}

#[derive(Clone, Debug)]
struct Frame {
    s: BitSet,
    r: BitSet,
    colorer: Colorer,
}

pub struct BbSearch<'g> {
    g: &'g Graph,
    config: SolverConfig,
    max: usize,
    best: Vec<usize>,
    path: Vec<usize>,
    frames: Vec<Option<Frame>>,
    stats: SearchStats,
    clock: Clock,
    root_children: Vec<RootChild>,
}

impl<'g> BbSearch<'g> {
    pub fn new(g: &'g Graph, config: SolverConfig) -> Self {
        BbSearch {
            g,
            clock: Clock::new(config.time_limit),
            config,
            max: 0,
            best: Vec::new(),
            path: Vec::new(),
            frames: Vec::new(),
            stats: SearchStats::default(),
            root_children: Vec::new(),
        }
    }

    pub fn max(&self) -> usize {
        self.max
    }

    /// Incumbent clique, increasing.
    pub fn best(&self) -> Vec<usize> {
        let mut b = self.best.clone();
        b.sort_unstable();
        b
    }

    pub fn stats(&self) -> &SearchStats {
        &self.stats
    }

    pub fn root_children(&self) -> &[RootChild] {
        &self.root_children
    }

    fn frame(&mut self, depth: usize) -> &mut Frame {
        let n = self.g.n();
        while self.frames.len() <= depth {
            self.frames.push(None);
        }
        self.frames[depth].get_or_insert_with(|| Frame {
            s: BitSet::new(n),
            r: BitSet::new(n),
            colorer: Colorer::new(n),
        })
    }

    /// Searches the whole graph. Returns false if the time limit stopped it.
    pub fn run(&mut self) -> bool {
        let all = self.g.vertices();
        self.path.clear();
        self.frame(0).s.copy_from(&all);
        let proven = self.optimize(0);
        self.stats.elapsed = self.clock.seconds();
        proven
    }

    /// `frames[cur].s` holds the candidates, all adjacent to every vertex of
    /// `path` (which has `cur` vertices).
    fn optimize(&mut self, cur: usize) -> bool {
        if self.clock.tick() {
            return false;
        }
        let g = self.g;
        debug_assert_eq!(self.path.len(), cur);
        debug_assert!(g.is_clique(self.path.iter().copied()));
        debug_assert!(self
            .path
            .iter()
            .all(|&u| self.frames[cur].as_ref().unwrap().s.is_subset(g.neighbors(u))));

        self.stats.max_depth = self.stats.max_depth.max(cur);
        if cur > self.max {
            self.max = cur;
            self.best.clone_from(&self.path);
            self.stats.best_found_at = self.clock.seconds();
        }
        self.frame(cur + 1);
        let mut f = self.frames[cur].take().expect("frame allocated");
        f.r.clear();

        let mut k = self.max - cur;
        let recolor = self.config.recolor_at(cur, self.max);
        f.colorer.partite(g, &mut f.s, &mut f.r, k, recolor);
        self.stats.subproblems_all += 1;
        if !f.s.is_empty() {
            self.stats.subproblems_ne += 1;
        }

        let mut completed = true;
        while let Some(v) = f.s.gsb() {
            let child = self.frame(cur + 1);
            child.s.assign_inter(&f.s, g.neighbors(v));
            for (c, (x, y)) in child.s.words_mut().iter_mut().zip(f.r.words().iter().zip(g.neighbors(v).words())) {
                *c |= x & y;
            }
            let candidates = (cur == 0).then(|| child.s.to_vec());

            self.path.push(v);
            let ok = self.optimize(cur + 1);
            self.path.pop();
            if let Some(candidates) = candidates {
                self.root_children.push(RootChild {
                    vertex: v,
                    candidates,
                    max_after: self.max,
                });
            }
            if !ok {
                completed = false;
                break;
            }

            f.s.rem(v);
            let extra = self.max - cur - k;
            if extra > 0 {
                let recolor = self.config.recolor_at(cur, self.max);
                f.colorer.partite(g, &mut f.s, &mut f.r, extra, recolor);
            }
            k = self.max - cur;
        }

        self.frames[cur] = Some(f);
        completed
    }
}

/// Maximum clique of `g` by partial-coloring branch and bound.
pub fn solve(g: &Graph, config: &SolverConfig) -> SolveResult {
    let perm = ordering(g, config.ordering);
    let h = g.renumber(&perm).expect("orderings are permutations");
    let mut search = BbSearch::new(&h, config.clone());
    let proven = search.run();
    let mut witness: Vec<usize> = search.best().iter().map(|&v| perm[v]).collect();
    witness.sort_unstable();
    SolveResult {
        algorithm: Algorithm::Pbbmc,
        omega: search.max(),
        witness,
        proven,
        stats: search.stats().clone(),
        config: config.clone(),
    }
}
