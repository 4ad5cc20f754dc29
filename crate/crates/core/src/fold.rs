//! Stallings folding for deciding whether a tuple of words generates the
//! whole free group. Used as the decider behind the basis test; free groups
//! are Hopfian, so a surjective endomorphism is an automorphism.

use std::collections::{BTreeSet, HashMap};

use crate::word::{Rank, Word};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn add(&mut self) -> usize {
        let v = self.parent.len();
        self.parent.push(v);
        v
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// True iff `words` generate the full rank-`g` free group.
pub(crate) fn generates_whole_group(words: &[Word], rank: Rank) -> bool {
    let base = 0usize;
    let mut uf = UnionFind::new(1);
    // Directed edges `from --x_k--> to`; one loop at the base per word.
    let mut edges: Vec<(usize, u32, usize)> = Vec::new();
    for w in words {
        let mut prev = base;
        let n = w.len();
        for (idx, l) in w.letters().iter().enumerate() {
            let next = if idx + 1 == n { base } else { uf.add() };
            if l.is_inverse() {
                edges.push((next, l.generator(), prev));
            } else {
                edges.push((prev, l.generator(), next));
            }
            prev = next;
        }
    }

    // Fold until the transition relation is deterministic in both directions.
    loop {
        let mut out: HashMap<(usize, u32), usize> = HashMap::new();
        let mut inc: HashMap<(usize, u32), usize> = HashMap::new();
        let mut merged = false;
        for &(f, k, t) in &edges {
            let (f, t) = (uf.find(f), uf.find(t));
            match out.get(&(f, k)) {
                Some(&t2) if t2 != t => {
                    uf.union(t2, t);
                    merged = true;
                    break;
                }
                _ => {
                    out.insert((f, k), t);
                }
            }
            match inc.get(&(t, k)) {
                Some(&f2) if f2 != f => {
                    uf.union(f2, f);
                    merged = true;
                    break;
                }
                _ => {
                    inc.insert((t, k), f);
                }
            }
        }
        if !merged {
            break;
        }
    }

    let mut folded: BTreeSet<(usize, u32, usize)> = edges
        .iter()
        .map(|&(f, k, t)| (uf.find(f), k, uf.find(t)))
        .collect();
    let root = uf.find(base);

    // Trim hairs: non-base vertices of degree <= 1.
    loop {
        let mut degree: HashMap<usize, usize> = HashMap::new();
        for &(f, _, t) in &folded {
            *degree.entry(f).or_default() += 1;
            *degree.entry(t).or_default() += 1;
        }
        let hair = folded
            .iter()
            .copied()
            .find(|&(f, _, t)| (f != root && degree[&f] <= 1) || (t != root && degree[&t] <= 1));
        match hair {
            Some(e) => {
                folded.remove(&e);
            }
            None => break,
        }
    }

    // The core graph of the whole group is the rose: every surviving edge is
    // a loop at the base and every generator label occurs there.
    folded.iter().all(|&(f, _, t)| f == root && t == root)
        && (1..=rank.get()).all(|k| folded.contains(&(root, k, root)))
}
