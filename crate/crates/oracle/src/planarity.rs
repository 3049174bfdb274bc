//! Left-right planarity testing (de Fraysseix–Rosenstiehl, in the
//! formulation of Brandes) with construction of a combinatorial embedding.

const NONE: usize = usize::MAX;

/// A rotation system: for every vertex, its neighbors in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub rotations: Vec<Vec<usize>>,
}

impl Embedding {
    /// Number of face orbits of the rotation system.
    pub fn face_orbits(&self) -> usize {
        let n = self.rotations.len();
        let mut seen: Vec<Vec<bool>> = self.rotations.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = 0;
        for v in 0..n {
            for i in 0..self.rotations[v].len() {
                if seen[v][i] {
                    continue;
                }
                faces += 1;
                let (mut a, mut j) = (v, i);
                while !seen[a][j] {
                    seen[a][j] = true;
                    let b = self.rotations[a][j];
                    let back = self.rotations[b].iter().position(|&x| x == a).expect("symmetric rotations");
                    (a, j) = (b, (back + 1) % self.rotations[b].len());
                }
            }
        }
        faces
    }

    /// True iff the rotation system is symmetric, covers exactly the edges
    /// given, and has genus zero on every component.
    pub fn is_plane_embedding_of(&self, n: usize, edges: &[(usize, usize)]) -> bool {
        if self.rotations.len() != n {
            return false;
        }
        let mut want: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in edges {
            want[a].push(b);
            want[b].push(a);
        }
        for (w, r) in want.iter_mut().zip(&self.rotations) {
            let mut r = r.clone();
            r.sort_unstable();
            w.sort_unstable();
            if *w != r {
                return false;
            }
        }
        let components = components(n, edges);
        let isolated = want.iter().filter(|w| w.is_empty()).count();
        // Euler: V − E + F = 2 per component, an isolated vertex being one face
        let f = self.face_orbits() + isolated;
        n as i64 - edges.len() as i64 + f as i64 == 2 * components as i64
    }
}

fn components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            (p[y], y) = (r, p[y]);
        }
        r
    }
    let mut count = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

#[derive(Debug, Clone, Copy, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// State of one run. Oriented edges are numbered in the order the
/// orientation phase meets them.
struct Lr<'a> {
    n: usize,
    adj: &'a [Vec<usize>],
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    id: Vec<usize>,
    src: Vec<usize>,
    dst: Vec<usize>,
    out: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    refs: Vec<Option<usize>>,
    side: Vec<i64>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    roots: Vec<usize>,
}

impl<'a> Lr<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Lr<'a> {
        let n = adj.len();
        Lr {
            n,
            adj,
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            id: vec![NONE; n * n],
            src: Vec::new(),
            dst: Vec::new(),
            out: vec![Vec::new(); n],
            lowpt: Vec::new(),
            lowpt2: Vec::new(),
            nesting: Vec::new(),
            refs: Vec::new(),
            side: Vec::new(),
            lowpt_edge: Vec::new(),
            stack_bottom: Vec::new(),
            stack: Vec::new(),
            roots: Vec::new(),
        }
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for &w in &self.adj[v] {
            if self.id[v * self.n + w] != NONE || self.id[w * self.n + v] != NONE {
                continue;
            }
            let vw = self.src.len();
            self.id[v * self.n + w] = vw;
            self.src.push(v);
            self.dst.push(w);
            self.out[v].push(vw);
            self.lowpt.push(self.height[v]);
            self.lowpt2.push(self.height[v]);
            self.nesting.push(0);
            if self.height[w] == NONE {
                self.parent_edge[w] = vw;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }
            self.nesting[vw] = 2 * self.lowpt[vw] as i64;
            if self.lowpt2[vw] < self.height[v] {
                self.nesting[vw] += 1;
            }
            if e != NONE {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high.expect("nonempty interval has a top")] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        let lp = |e: Option<usize>| self.lowpt[e.expect("nonempty interval has a bottom")];
        if p.left.is_empty() {
            lp(p.right.low)
        } else if p.right.is_empty() {
            lp(p.left.low)
        } else {
            lp(p.left.low).min(lp(p.right.low))
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let ordered = self.out[v].clone();
        for (idx, &ei) in ordered.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == ei {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval { low: Some(ei), high: Some(ei) },
                });
            }
            if self.lowpt[ei] < self.height[v] {
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("return edge interval");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(l) = p.right.low {
                    self.refs[l] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[qlow] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked above");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(l) = p.right.low {
                self.refs[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(l) = p.left.low {
                self.refs[l] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().expect("checked above");
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high.filter(|&h| self.dst[h] == u) {
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low.take() {
                    self.refs[l] = p.right.low;
                    self.side[l] = -1;
                }
            }
            while let Some(h) = p.right.high.filter(|&h| self.dst[h] == u) {
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() {
                if let Some(l) = p.right.low.take() {
                    self.refs[l] = p.left.low;
                    self.side[l] = -1;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("a return edge remains");
            let (hl, hr) = (top.left.high, top.right.high);
            self.refs[e] = match (hl, hr) {
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                (Some(l), None) => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = vec![e];
        while let Some(r) = self.refs[*chain.last().expect("nonempty")] {
            chain.push(r);
        }
        // resolve from the far end back to e
        for i in (0..chain.len() - 1).rev() {
            let (a, b) = (chain[i], chain[i + 1]);
            self.side[a] *= self.side[b];
            self.refs[a] = None;
        }
        self.side[e]
    }

    fn embed(&mut self, v: usize, rot: &mut [Vec<usize>], left_ref: &mut [usize], right_ref: &mut [usize]) {
        let ordered = self.out[v].clone();
        for ei in ordered {
            let w = self.dst[ei];
            if self.parent_edge[w] == ei {
                rot[w].insert(0, v);
                left_ref[v] = w;
                right_ref[v] = w;
                self.embed(w, rot, left_ref, right_ref);
            } else if self.side[ei] == 1 {
                let at = position(&rot[w], right_ref[w]);
                rot[w].insert(at + 1, v);
            } else {
                let at = position(&rot[w], left_ref[w]);
                rot[w].insert(at, v);
                left_ref[w] = v;
            }
        }
    }

    fn run(mut self) -> Option<Embedding> {
        let n = self.n;
        let m: usize = self.adj.iter().map(Vec::len).sum::<usize>() / 2;
        if n > 2 && m > 3 * n - 6 {
            return None;
        }
        for v in 0..n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        let me = self.src.len();
        self.refs = vec![None; me];
        self.side = vec![1; me];
        self.lowpt_edge = vec![NONE; me];
        self.stack_bottom = vec![0; me];
        for v in 0..n {
            let mut out = std::mem::take(&mut self.out[v]);
            out.sort_by_key(|&e| self.nesting[e]);
            self.out[v] = out;
        }
        for r in self.roots.clone() {
            if !self.test(r) {
                return None;
            }
        }
        for e in 0..me {
            self.nesting[e] *= self.sign(e);
        }
        let mut rot: Vec<Vec<usize>> = Vec::with_capacity(n);
        for v in 0..n {
            let mut out = std::mem::take(&mut self.out[v]);
            out.sort_by_key(|&e| self.nesting[e]);
            rot.push(out.iter().map(|&e| self.dst[e]).collect());
            self.out[v] = out;
        }
        let mut left_ref = vec![NONE; n];
        let mut right_ref = vec![NONE; n];
        for r in self.roots.clone() {
            self.embed(r, &mut rot, &mut left_ref, &mut right_ref);
        }
        Some(Embedding { rotations: rot })
    }
}

fn position(list: &[usize], x: usize) -> usize {
    list.iter().position(|&y| y == x).expect("reference neighbor is placed")
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// A planar embedding of the simple graph on `0..n`, or `None` if the graph
/// is not planar.
pub fn planar_embedding(n: usize, edges: &[(usize, usize)]) -> Option<Embedding> {
    let adj = adjacency(n, edges);
    Lr::new(&adj).run()
}

/// True iff the simple graph on `0..n` is planar.
pub fn is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    planar_embedding(n, edges).is_some()
}
