//! Maximum-cardinality bipartite matching (Hopcroft–Karp) and an
//! independent augmenting-path certificate.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;
const INF: usize = usize::MAX;

/// Edges from left vertices `0..left` to right vertices `0..right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Adjacency {
    /// Compressed rows: neighbours of `u` are `targets[offsets[u]..offsets[u+1]]`.
    Lists {
        right: usize,
        offsets: Vec<usize>,
        targets: Vec<u32>,
    },
    /// Every left vertex is adjacent to every right vertex.
    Complete { left: usize, right: usize },
}

impl Adjacency {
    pub fn from_lists(right: usize, lists: Vec<Vec<u32>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        let mut targets = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        for list in lists {
            debug_assert!(list.iter().all(|&v| (v as usize) < right));
            targets.extend(list);
            offsets.push(targets.len());
        }
        Adjacency::Lists { right, offsets, targets }
    }

    pub fn left_count(&self) -> usize {
        match self {
            Adjacency::Lists { offsets, .. } => offsets.len() - 1,
            Adjacency::Complete { left, .. } => *left,
        }
    }

    pub fn right_count(&self) -> usize {
        match self {
            Adjacency::Lists { right, .. } | Adjacency::Complete { right, .. } => *right,
        }
    }

    pub fn degree(&self, u: usize) -> usize {
        match self {
            Adjacency::Lists { offsets, .. } => offsets[u + 1] - offsets[u],
            Adjacency::Complete { right, .. } => *right,
        }
    }

    #[inline]
    pub fn neighbor(&self, u: usize, i: usize) -> usize {
        match self {
            Adjacency::Lists { offsets, targets, .. } => targets[offsets[u] + i] as usize,
            Adjacency::Complete { .. } => i,
        }
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.degree(u)).map(move |i| self.neighbor(u, i))
    }

    pub fn edge_count(&self) -> usize {
        match self {
            Adjacency::Lists { targets, .. } => targets.len(),
            Adjacency::Complete { left, right } => left * right,
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match self {
            Adjacency::Lists { .. } => self.neighbors(u).any(|w| w == v),
            Adjacency::Complete { left, right } => u < *left && v < *right,
        }
    }
}

/// A matching stored from both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Matching {
    fn empty(left: usize, right: usize) -> Self {
        Matching {
            left: vec![NONE; left],
            right: vec![NONE; right],
        }
    }

    pub fn partner_of_left(&self, u: usize) -> Option<usize> {
        self.left.get(u).copied().filter(|&v| v != NONE)
    }

    pub fn partner_of_right(&self, v: usize) -> Option<usize> {
        self.right.get(v).copied().filter(|&u| u != NONE)
    }

    pub fn size(&self) -> usize {
        self.left.iter().filter(|&&v| v != NONE).count()
    }

    /// Matched `(left, right)` pairs in increasing left order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != NONE)
            .map(|(u, &v)| (u, v))
    }

    /// Both sides consistent and every pair an edge of `adj`.
    pub fn is_valid_for(&self, adj: &Adjacency) -> bool {
        self.left.len() == adj.left_count()
            && self.right.len() == adj.right_count()
            && self.pairs().all(|(u, v)| self.right[v] == u && adj.has_edge(u, v))
            && self
                .right
                .iter()
                .enumerate()
                .all(|(v, &u)| u == NONE || self.left[u] == v)
    }
}

/// Hopcroft–Karp. Vertices and edges are scanned in index order, so the
/// result is a deterministic function of `adj`.
pub fn hopcroft_karp(adj: &Adjacency) -> Matching {
    let (nl, nr) = (adj.left_count(), adj.right_count());
    let mut m = Matching::empty(nl, nr);

    // greedy start
    for u in 0..nl {
        if let Some(v) = adj.neighbors(u).find(|&v| m.right[v] == NONE) {
            m.left[u] = v;
            m.right[v] = u;
        }
    }

    let mut dist = vec![INF; nl];
    let mut cursor = vec![0usize; nl];
    let mut queue = VecDeque::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut via: Vec<usize> = Vec::new();
    loop {
        // layer the free left vertices and everything reachable by alternating paths
        queue.clear();
        for u in 0..nl {
            if m.left[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for v in adj.neighbors(u) {
                let w = m.right[v];
                if w == NONE {
                    found = true;
                } else if dist[w] == INF {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }

        cursor.iter_mut().for_each(|c| *c = 0);
        for root in 0..nl {
            if m.left[root] != NONE {
                continue;
            }
            stack.clear();
            via.clear();
            stack.push(root);
            while let Some(&u) = stack.last() {
                if cursor[u] == adj.degree(u) {
                    dist[u] = INF;
                    stack.pop();
                    via.pop();
                    continue;
                }
                let v = adj.neighbor(u, cursor[u]);
                cursor[u] += 1;
                let w = m.right[v];
                if w == NONE {
                    via.push(v);
                    for (&a, &b) in stack.iter().zip(&via) {
                        m.left[a] = b;
                        m.right[b] = a;
                    }
                    break;
                }
                if dist[w] == dist[u] + 1 {
                    via.push(v);
                    stack.push(w);
                }
            }
        }
    }
    m
}

/// Searches for an augmenting path by plain breadth-first search from every
/// free left vertex. Returns the path as alternating left/right vertices.
pub fn find_augmenting_path(adj: &Adjacency, m: &Matching) -> Option<Vec<usize>> {
    let nl = adj.left_count();
    let mut parent_of_right = vec![NONE; adj.right_count()];
    let mut seen_left = vec![false; nl];
    let mut queue = VecDeque::new();
    for u in (0..nl).filter(|&u| m.partner_of_left(u).is_none()) {
        seen_left[u] = true;
        queue.push_back(u);
    }
    while let Some(u) = queue.pop_front() {
        for v in adj.neighbors(u) {
            if parent_of_right[v] != NONE || m.partner_of_left(u) == Some(v) {
                continue;
            }
            parent_of_right[v] = u;
            match m.partner_of_right(v) {
                None => {
                    let mut path = vec![v];
                    let mut cur = u;
                    loop {
                        path.push(cur);
                        match m.partner_of_left(cur) {
                            None => break,
                            Some(r) => {
                                path.push(r);
                                cur = parent_of_right[r];
                            }
                        }
                    }
                    path.reverse();
                    return Some(path);
                }
                Some(w) if !seen_left[w] => {
                    seen_left[w] = true;
                    queue.push_back(w);
                }
                Some(_) => {}
            }
        }
    }
    None
}
