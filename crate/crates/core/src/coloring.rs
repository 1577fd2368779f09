//! Partial colorings used as clique-size bounds.
//!
//! A vertex set that splits into `k` stable sets holds no clique larger than
//! `k`. Both solvers repeatedly carve such a `k`-partite piece out of their
//! candidate set and only branch on what is left over.

use crate::bitset::{BitSet, Overlap};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Which colors may receive a vertex displaced during recoloring. With
/// `Exclusive` the target color `j` satisfies `i < j < d` (1-based), with
/// `Inclusive` it may also be `d`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecolorRange {
    #[default]
    Exclusive,
    Inclusive,
}

/// Ordered stable sets `C_1..C_k` plus their union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorClasses {
    classes: Vec<BitSet>,
    colored: BitSet,
}

impl ColorClasses {
    pub fn new(universe: usize) -> Self {
        ColorClasses {
            classes: Vec::new(),
            colored: BitSet::new(universe),
        }
    }

    pub fn classes(&self) -> &[BitSet] {
        &self.classes
    }

    pub fn colored(&self) -> &BitSet {
        &self.colored
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// 1-based color of `v`, if colored.
    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v)).map(|i| i + 1)
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(BitSet::to_vec).collect()
    }

    /// Disjoint stable classes whose union is `colored`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut union = BitSet::new(self.colored.universe());
        for class in &self.classes {
            if class.intersects(&union) {
                return false;
            }
            if class.iter().any(|v| g.neighbors(v).intersects(class)) {
                return false;
            }
            union.union_with(class);
        }
        union == self.colored
    }
}

/// Builds one maximal stable set inside `pool` by scanning it in increasing
/// order. Chosen vertices leave `pool` and are reported to `sink` one word
/// at a time as `(word index, bits)`.
#[inline]
fn extract_class(g: &Graph, pool: &mut BitSet, scratch: &mut BitSet, mut sink: impl FnMut(usize, u64)) {
    scratch.copy_from(pool);
    let adj = g.adjacency();
    let pool = pool.words_mut();
    let free = scratch.words_mut();
    let words = free.len();
    for w in 0..words {
        let mut cur = free[w];
        let mut taken = 0u64;
        while cur != 0 {
            let bit = cur & cur.wrapping_neg();
            taken |= bit;
            let v = (w << 6) + bit.trailing_zeros() as usize;
            let nv = &adj[v].words()[..words];
            cur &= !bit & !nv[w];
            for (f, n) in free[w + 1..].iter_mut().zip(&nv[w + 1..]) {
                *f &= !n;
            }
        }
        if taken != 0 {
            pool[w] &= !taken;
            sink(w, taken);
        }
    }
}

/// Colors `pool` class by class with at most `d` colors. Colored vertices
/// leave `pool`; what remains is the uncolored part.
pub fn greedy_coloring(g: &Graph, pool: &mut BitSet, d: usize) -> ColorClasses {
    let mut out = ColorClasses::new(pool.universe());
    let mut scratch = BitSet::new(pool.universe());
    while out.classes.len() < d && !pool.is_empty() {
        let mut class = BitSet::new(pool.universe());
        extract_class(g, pool, &mut scratch, |w, bits| class.words_mut()[w] |= bits);
        out.colored.union_with(&class);
        out.classes.push(class);
    }
    out
}

/// Tries to fit each remaining pool vertex `v` (increasing id) into the
/// first `d` colors. At the smallest color `i` where `v` has a single
/// neighbor `u`, `u` is moved to a higher color `j` it has no neighbor in,
/// and `v` takes its place in `i`. If `v` has no neighbor at all in some
/// color (possible after earlier moves) it joins that color directly.
fn recolor_classes(
    g: &Graph,
    classes: &mut [BitSet],
    pool: &mut BitSet,
    d: usize,
    range: RecolorRange,
    mut on_color: impl FnMut(usize),
) {
    let d = d.min(classes.len());
    if d < 2 {
        return;
    }
    let upper = match range {
        RecolorRange::Exclusive => d - 1,
        RecolorRange::Inclusive => d,
    };
    let mut cursor = pool.first();
    while let Some(v) = cursor {
        let nv = g.neighbors(v);
        for i in 0..d {
            match nv.overlap(&classes[i]) {
                Overlap::Many => continue,
                Overlap::None => {
                    classes[i].add(v);
                    pool.rem(v);
                    on_color(v);
                }
                Overlap::Single(u) => {
                    let nu = g.neighbors(u);
                    if let Some(j) = (i + 1..upper).find(|&j| !nu.intersects(&classes[j])) {
                        classes[i].rem(u);
                        classes[j].add(u);
                        classes[i].add(v);
                        pool.rem(v);
                        on_color(v);
                    }
                }
            }
            break;
        }
        cursor = pool.fsb(v + 1);
    }
}

pub fn recolor(
    g: &Graph,
    classes: &mut ColorClasses,
    pool: &mut BitSet,
    d: usize,
    range: RecolorRange,
) {
    let colored = &mut classes.colored;
    recolor_classes(g, &mut classes.classes, pool, d, range, |v| colored.add(v));
}

/// Moves a maximal `k`-partite induced subgraph of `G[s]` from `s` into `r`
/// and returns its classes. `recolor` enables the recoloring pass.
pub fn max_partite_subgraph(
    g: &Graph,
    s: &mut BitSet,
    r: &mut BitSet,
    k: usize,
    recolor_range: Option<RecolorRange>,
) -> ColorClasses {
    debug_assert!(!s.intersects(r));
    let mut classes = greedy_coloring(g, s, k);
    if let Some(range) = recolor_range {
        recolor(g, &mut classes, s, k, range);
    }
    r.union_with(&classes.colored);
    classes
}

/// Reusable buffers for the solvers' inner loops. Same results as
/// [`max_partite_subgraph`] without materializing classes unless
/// recoloring needs them.
#[derive(Debug, Clone)]
pub(crate) struct Colorer {
    scratch: BitSet,
    classes: Vec<BitSet>,
}

impl Colorer {
    pub(crate) fn new(universe: usize) -> Self {
        Colorer {
            scratch: BitSet::new(universe),
            classes: Vec::new(),
        }
    }

    /// Returns the number of classes built.
    pub(crate) fn partite(
        &mut self,
        g: &Graph,
        s: &mut BitSet,
        r: &mut BitSet,
        k: usize,
        recolor_range: Option<RecolorRange>,
    ) -> usize {
        let mut built = 0;
        match recolor_range {
            None => {
                while built < k && !s.is_empty() {
                    extract_class(g, s, &mut self.scratch, |w, bits| r.words_mut()[w] |= bits);
                    built += 1;
                }
            }
            Some(range) => {
                while built < k && !s.is_empty() {
                    if self.classes.len() == built {
                        self.classes.push(BitSet::new(s.universe()));
                    }
                    let class = &mut self.classes[built];
                    class.reset_to(s.universe());
                    extract_class(g, s, &mut self.scratch, |w, bits| {
                        class.words_mut()[w] |= bits;
                        r.words_mut()[w] |= bits;
                    });
                    built += 1;
                }
                if !s.is_empty() {
                    recolor_classes(g, &mut self.classes[..built], s, k, range, |v| r.add(v));
                }
            }
        }
        built
    }
}
