use crosskit_graph::{Graph, VertexId};

/// Largest vertex-permutation group used for pruning. Any set of
/// automorphisms keeps the search sound; larger groups only prune more.
pub const MAX_GROUP: usize = 50_000;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).try_fold(1usize, |a, b| a.checked_mul(b)).unwrap_or(usize::MAX)
}

fn compose(group: &[Vec<usize>], gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(group.len() * gens.len());
    for g in group {
        for h in gens {
            out.push(g.iter().map(|&v| h[v]).collect());
        }
    }
    out
}

/// Vertex automorphisms of `g` generated by the part structure: vertices of
/// a part are interchangeable, and so are parts of equal size. Graphs that
/// are not complete multipartite get the trivial group, as do groups above
/// [`MAX_GROUP`] once the part swaps alone are too many.
pub fn part_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let identity: Vec<usize> = (0..n).collect();
    let Some(classes) = g.independent_classes() else {
        return vec![identity];
    };
    let within: usize =
        classes.iter().map(|c| factorial(c.len())).try_fold(1usize, |a, b| a.checked_mul(b)).unwrap_or(usize::MAX);
    let mut by_size: std::collections::BTreeMap<usize, Vec<&Vec<VertexId>>> = Default::default();
    for c in &classes {
        by_size.entry(c.len()).or_default().push(c);
    }
    let swaps: usize =
        by_size.values().map(|cs| factorial(cs.len())).try_fold(1usize, |a, b| a.checked_mul(b)).unwrap_or(usize::MAX);
    let mut group = vec![identity.clone()];
    if within.saturating_mul(swaps) <= MAX_GROUP {
        for c in &classes {
            let gens: Vec<Vec<usize>> = permutations(c.len())
                .into_iter()
                .map(|p| {
                    let mut img = identity.clone();
                    for (i, &j) in p.iter().enumerate() {
                        img[c[i].0] = c[j].0;
                    }
                    img
                })
                .collect();
            group = compose(&group, &gens);
        }
    } else if swaps > MAX_GROUP {
        return group;
    }
    for cs in by_size.values() {
        let gens: Vec<Vec<usize>> = permutations(cs.len())
            .into_iter()
            .map(|p| {
                let mut img = identity.clone();
                for (i, &j) in p.iter().enumerate() {
                    for (a, b) in cs[i].iter().zip(cs[j].iter()) {
                        img[a.0] = b.0;
                    }
                }
                img
            })
            .collect();
        group = compose(&group, &gens);
    }
    group
}
