use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of terminals accepted by [`enumerate_topologies`].
pub const TOPOLOGY_CAP: usize = 6;

/// Abstract tree on `terminals` bound vertices (indices `0..terminals`, vertex
/// `i` bound to terminal `i`) and `steiner` free vertices (the following
/// indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Topology {
    pub terminals: usize,
    pub steiner: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Topology {
    pub fn vertex_count(&self) -> usize {
        self.terminals + self.steiner
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count()];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Every Steiner vertex has degree 3 and every terminal is a leaf.
    pub fn is_full(&self) -> bool {
        let d = self.degrees();
        d[..self.terminals].iter().all(|&x| x == 1) && d[self.terminals..].iter().all(|&x| x == 3)
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        let n = self.vertex_count();
        if self.edges.len() + 1 != n {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// Canonical form: edges with the smaller end first, sorted.
    fn canonical(mut self) -> Self {
        for e in &mut self.edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        self.edges.sort_unstable();
        self
    }
}

/// All Steiner topologies on `k` terminals: trees whose free vertices have
/// degree exactly 3 and whose terminals have degree at most 3, up to
/// relabelling of the free vertices.
///
/// Trees are grown by adding terminal `j` to a tree on the first `j − 1`
/// terminals in one of four ways: as a leaf on a terminal, as a leaf on a new
/// free vertex splitting an edge, as a degree-2 vertex splitting an edge, or
/// by taking the place of a free vertex. Deleting the last terminal inverts
/// exactly one of these moves, so every tree is produced once.
pub fn enumerate_topologies(k: usize) -> Result<Vec<Topology>> {
    enumerate_topologies_capped(k, TOPOLOGY_CAP)
}

pub fn enumerate_topologies_capped(k: usize, cap: usize) -> Result<Vec<Topology>> {
    if k > cap {
        return Err(Error::TooManyTerminals { k, cap });
    }
    if k == 0 {
        return Err(Error::InvalidInput("at least one terminal is required".into()));
    }
    // internal labels: terminals 0..k are fixed, free vertices are numbered
    // from k upwards in creation order and compacted at the end
    let mut trees = vec![Vec::<(usize, usize)>::new()];
    let mut free_count = vec![0usize];
    for j in 1..k {
        let mut next = Vec::new();
        let mut next_free = Vec::new();
        for (edges, &s) in trees.iter().zip(&free_count) {
            let degree = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
            let steiner_id = k + s;
            for t in 0..j {
                if degree(t) < 3 {
                    let mut e = edges.clone();
                    e.push((t, j));
                    next.push(e);
                    next_free.push(s);
                }
            }
            for (i, &(a, b)) in edges.iter().enumerate() {
                let mut e = edges.clone();
                e[i] = (a, steiner_id);
                e.push((steiner_id, b));
                e.push((steiner_id, j));
                next.push(e);
                next_free.push(s + 1);

                let mut e = edges.clone();
                e[i] = (a, j);
                e.push((j, b));
                next.push(e);
                next_free.push(s);
            }
            for f in k..k + s {
                let e = edges
                    .iter()
                    .map(|&(a, b)| (if a == f { j } else { a }, if b == f { j } else { b }))
                    .collect::<Vec<_>>();
                // the replaced free vertex leaves a hole in the numbering
                let e = e
                    .into_iter()
                    .map(|(a, b)| (if a > f { a - 1 } else { a }, if b > f { b - 1 } else { b }))
                    .collect();
                next.push(e);
                next_free.push(s - 1);
            }
        }
        trees = next;
        free_count = next_free;
    }
    Ok(trees
        .into_iter()
        .zip(free_count)
        .map(|(edges, steiner)| Topology { terminals: k, steiner, edges }.canonical())
        .collect())
}
