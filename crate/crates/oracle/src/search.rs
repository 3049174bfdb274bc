use rayon::prelude::*;

use crosskit_graph::{EdgeId, Graph};

use crate::planarize::{planarize, PlanarizationSelection};
use crate::symmetry::part_automorphisms;
use crate::witness::Witness;
use crate::OracleError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest crossing count tried.
    pub k_max: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Prune selections that are images of others under automorphisms.
    pub symmetry: bool,
}

impl SearchOptions {
    pub fn new(k_max: usize) -> SearchOptions {
        SearchOptions { k_max, jobs: None, symmetry: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCrossingNumber {
    pub value: usize,
    pub witness: Witness,
}

/// Independent edge pairs and their images under a set of automorphisms.
struct Space<'g> {
    g: &'g Graph,
    pairs: Vec<(EdgeId, EdgeId)>,
    images: Vec<Vec<usize>>,
    orbit_min: Vec<usize>,
}

impl<'g> Space<'g> {
    fn new(g: &'g Graph, symmetry: bool) -> Space<'g> {
        let n = g.vertex_count();
        let m = g.edge_count();
        let edges = g.edges();
        let mut pairs = Vec::new();
        let mut pair_at = vec![usize::MAX; m * m];
        for e in 0..m {
            for f in e + 1..m {
                if !edges[e].shares_endpoint(&edges[f]) {
                    pair_at[e * m + f] = pairs.len();
                    pairs.push((EdgeId(e), EdgeId(f)));
                }
            }
        }
        let group = if symmetry { part_automorphisms(g) } else { vec![(0..n).collect()] };
        let mut edge_at = vec![usize::MAX; n * n];
        for (i, ed) in edges.iter().enumerate() {
            edge_at[ed.a.0 * n + ed.b.0] = i;
            edge_at[ed.b.0 * n + ed.a.0] = i;
        }
        let images: Vec<Vec<usize>> = group
            .iter()
            .map(|p| {
                let emap: Vec<usize> = edges.iter().map(|ed| edge_at[p[ed.a.0] * n + p[ed.b.0]]).collect();
                pairs
                    .iter()
                    .map(|&(e, f)| {
                        let (a, b) = (emap[e.0], emap[f.0]);
                        pair_at[a.min(b) * m + a.max(b)]
                    })
                    .collect()
            })
            .collect();
        let orbit_min = (0..pairs.len()).map(|i| images.iter().map(|img| img[i]).min().unwrap_or(i)).collect();
        Space { g, pairs, images, orbit_min }
    }

    /// True iff the sorted tuple `s` is lexicographically least among its
    /// images.
    fn canonical(&self, s: &[usize], buf: &mut Vec<usize>) -> bool {
        for img in &self.images {
            let lo = s.iter().map(|&i| img[i]).min().expect("nonempty selection");
            if lo > s[0] {
                continue;
            }
            if lo < s[0] {
                return false;
            }
            buf.clear();
            buf.extend(s.iter().map(|&i| img[i]));
            buf.sort_unstable();
            if buf.as_slice() < s {
                return false;
            }
        }
        true
    }

    /// Tries every crossing order on the edges of selection `s`.
    fn realize(&self, s: &[usize]) -> Option<PlanarizationSelection> {
        let m = self.g.edge_count();
        let pairs: Vec<(EdgeId, EdgeId)> = s.iter().map(|&i| self.pairs[i]).collect();
        let mut paths: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (c, &(e, f)) in pairs.iter().enumerate() {
            paths[e.0].push(c);
            paths[f.0].push(c);
        }
        let multi: Vec<usize> = (0..m).filter(|&e| paths[e].len() >= 2).collect();
        let orders: Vec<Vec<Vec<usize>>> = multi.iter().map(|&e| permutations_of(&paths[e])).collect();
        let mut digits = vec![0usize; multi.len()];
        loop {
            for (j, &e) in multi.iter().enumerate() {
                paths[e].clone_from(&orders[j][digits[j]]);
            }
            let sel = PlanarizationSelection::from_checked(pairs.clone(), paths.clone());
            if planarize(self.g, &sel).is_planar() {
                return Some(sel);
            }
            let mut j = 0;
            loop {
                if j == digits.len() {
                    return None;
                }
                digits[j] += 1;
                if digits[j] < orders[j].len() {
                    break;
                }
                digits[j] = 0;
                j += 1;
            }
        }
    }

    /// Searches the `k`-selections whose least pair is `first`, in
    /// lexicographic order.
    fn search_from(&self, first: usize, k: usize) -> Option<PlanarizationSelection> {
        let rest: Vec<usize> = (first + 1..self.pairs.len()).filter(|&p| self.orbit_min[p] >= first).collect();
        let r = k - 1;
        if rest.len() < r {
            return None;
        }
        let mut idx: Vec<usize> = (0..r).collect();
        let mut s = vec![first; k];
        let mut buf = Vec::with_capacity(k);
        loop {
            for (j, &i) in idx.iter().enumerate() {
                s[j + 1] = rest[i];
            }
            if self.canonical(&s, &mut buf) {
                if let Some(sel) = self.realize(&s) {
                    return Some(sel);
                }
            }
            // next combination
            let mut j = r;
            loop {
                if j == 0 {
                    return None;
                }
                j -= 1;
                if idx[j] < rest.len() - r + j {
                    idx[j] += 1;
                    for t in j + 1..r {
                        idx[t] = idx[t - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn level(&self, k: usize) -> Option<PlanarizationSelection> {
        if k == 0 {
            let sel = PlanarizationSelection::from_checked(Vec::new(), vec![Vec::new(); self.g.edge_count()]);
            return planarize(self.g, &sel).is_planar().then_some(sel);
        }
        let firsts: Vec<usize> = (0..self.pairs.len()).filter(|&p| self.orbit_min[p] == p).collect();
        firsts.par_iter().find_map_first(|&f| self.search_from(f, k))
    }
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// The crossing number of `g` if it is at most `k_max`, with a witness
/// drawing. Iterative deepening over `k`; every level below the answer is
/// searched exhaustively, so the value is exact.
pub fn exact_crossing_number(g: &Graph, k_max: usize) -> Result<ExactCrossingNumber, OracleError> {
    exact_crossing_number_with(g, &SearchOptions::new(k_max))
}

pub fn exact_crossing_number_with(g: &Graph, opts: &SearchOptions) -> Result<ExactCrossingNumber, OracleError> {
    let run = || {
        let space = Space::new(g, opts.symmetry);
        for k in 0..=opts.k_max {
            if let Some(sel) = space.level(k) {
                return Ok(ExactCrossingNumber { value: k, witness: Witness::from_selection(g, &sel) });
            }
        }
        Err(OracleError::BudgetExceeded { at_least: opts.k_max + 1 })
    };
    match opts.jobs.and_then(|j| rayon::ThreadPoolBuilder::new().num_threads(j).build().ok()) {
        Some(pool) => pool.install(run),
        None => run(),
    }
}
