use crosskit_graph::Graph;
use crosskit_map::Drawing;

use crate::LemmaError;

/// Candidate sets `U` for splitting `v`: every union of whole parts that
/// lie in the neighborhood of `v` and hold an even number of vertices.
pub fn part_unions(g: &Graph, v: &str) -> Result<Vec<Vec<String>>, LemmaError> {
    let vid = g.require(v)?;
    let eligible: Vec<Vec<String>> = g
        .parts()
        .iter()
        .filter(|part| part.iter().all(|&u| g.are_adjacent(vid, u)))
        .map(|part| part.iter().map(|&u| g.label(u).to_string()).collect())
        .collect();
    if eligible.len() > 16 {
        return Err(LemmaError::BadContext(format!("{} parts are too many to combine", eligible.len())));
    }
    let mut out = Vec::new();
    for mask in 1u32..1 << eligible.len() {
        let set: Vec<String> =
            eligible.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).flat_map(|(_, p)| p.clone()).collect();
        if set.len().is_multiple_of(2) {
            out.push(set);
        }
    }
    Ok(out)
}

/// A vertex `v` of a drawing with an even set `U` of its neighbors, read in
/// rotation order `u_0, …, u_{p−1}`, and the gaps `W_i` of the other
/// neighbors between `u_i` and `u_{i+1}`. Gap indices are taken mod `p`.
#[derive(Debug, Clone)]
pub struct Lemma1Context {
    pub drawing: Drawing,
    pub v: String,
    pub u: Vec<String>,
    pub w: Vec<String>,
    pub gaps: Vec<Vec<String>>,
    pub k: usize,
    /// Label of the vertex split off `v`.
    pub x_label: String,
    /// Label of the twin of that vertex (second construction only).
    pub y_label: String,
}

impl Lemma1Context {
    /// Reads `U` around `v` counterclockwise starting at `u_set[0]`. New
    /// vertices are labeled `x` and `y`; see [`Lemma1Context::with_labels`].
    pub fn new(d: &Drawing, v: &str, u_set: &[&str], k: usize) -> Result<Lemma1Context, LemmaError> {
        let first = u_set.first().ok_or_else(|| LemmaError::BadContext("U is empty".into()))?;
        let rot = d.rotation(v)?.starting_at(first)?;
        let keep: Vec<String> = u_set.iter().map(|s| s.to_string()).collect();
        let mut sorted = keep.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != keep.len() {
            return Err(LemmaError::BadContext(format!("U = {keep:?} repeats a vertex")));
        }
        let u = rot.restricted(&keep);
        if u.len() != keep.len() {
            return Err(LemmaError::BadContext(format!("U = {keep:?} is not a set of neighbors of {v}")));
        }
        let p = u.len();
        if p % 2 == 1 {
            return Err(LemmaError::OddP(p));
        }
        if k >= p {
            return Err(LemmaError::BadContext(format!("k = {k} is not below p = {p}")));
        }
        let gaps = (0..p).map(|i| rot.interval(&u[i], &u[(i + 1) % p])).collect::<Result<Vec<_>, _>>()?;
        let w = rot.neighbors.iter().filter(|n| !u.contains(n)).cloned().collect();
        Ok(Lemma1Context {
            drawing: d.clone(),
            v: v.to_string(),
            u,
            w,
            gaps,
            k,
            x_label: "x".into(),
            y_label: "y".into(),
        })
    }

    pub fn with_labels(mut self, x: &str, y: &str) -> Lemma1Context {
        self.x_label = x.to_string();
        self.y_label = y.to_string();
        self
    }

    pub fn with_k(mut self, k: usize) -> Lemma1Context {
        self.k = k;
        self
    }

    pub fn p(&self) -> usize {
        self.u.len()
    }

    pub fn q(&self) -> usize {
        self.w.len()
    }

    /// `u_i` with `i` taken mod `p`.
    pub fn u_at(&self, i: usize) -> &str {
        &self.u[i % self.p()]
    }

    /// `|W_s|` with `s` taken mod `p`.
    pub fn gap_len(&self, s: usize) -> i64 {
        self.gaps[s % self.p()].len() as i64
    }

    /// Crossings the split adds inside a small disk around `v` when `x` is
    /// placed on `v·u_k`:
    /// `Σ_{s=k}^{k+p/2−2} (k+p/2−s−1)|W_s| + Σ_{s=k+p/2}^{k+p−1} (s+1−k−p/2)|W_s|`.
    pub fn disk_sum(&self, k: usize) -> i64 {
        let h = self.p() / 2;
        let first: i64 = (k..(k + h).saturating_sub(1)).map(|s| (k + h - s - 1) as i64 * self.gap_len(s)).sum();
        let second: i64 = (k + h..k + self.p()).map(|s| (s + 1 - k - h) as i64 * self.gap_len(s)).sum();
        first + second
    }

    /// Neighbors of `v` met when turning clockwise from `u_i` to `u_k`.
    pub(crate) fn clockwise_between(&self, i: usize, k: usize) -> Result<Vec<String>, LemmaError> {
        let rot = self.drawing.rotation(&self.v)?;
        let mut out = rot.interval(self.u_at(k), self.u_at(i))?;
        out.reverse();
        Ok(out)
    }

    /// Neighbors of `v` met when turning counterclockwise from `u_i` to `u_k`.
    pub(crate) fn counterclockwise_between(&self, i: usize, k: usize) -> Result<Vec<String>, LemmaError> {
        Ok(self.drawing.rotation(&self.v)?.interval(self.u_at(i), self.u_at(k))?)
    }
}
