//! The Whitehead graph of a cyclic word and its combinatorics: connectivity,
//! cut vertices, the Stallings binding criterion, and deterministic DOT and
//! JSON exports.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{CyclicWord, Letter, Rank};

/// Multigraph on the `2g` signed letters with one edge per cyclically
/// adjacent letter pair of the source word.
///
/// Edge convention: the pair `(w_i, w_{i+1})`, indices mod `n`, contributes
/// the undirected edge `{w_i, w_{i+1}^-1}`. This is one of the two mirror
/// conventions in use; it is fixed here so exports are reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteheadGraph {
    rank: Rank,
    /// Sorted edge multiset; each edge stores its endpoints in letter order.
    edges: Vec<(Letter, Letter)>,
}

/// Outcome of the one-directional Stallings criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StallingsCriterion {
    /// Connected with no cut vertex: the word binds, no further search
    /// needed.
    BindsCertified,
    /// The criterion does not apply; the word may still bind.
    Inconclusive,
}

impl WhiteheadGraph {
    /// Builds the Whitehead graph of a non-empty cyclic word.
    pub fn build(c: &CyclicWord) -> Result<WhiteheadGraph> {
        if c.is_empty() {
            return Err(Error::EmptyWord);
        }
        let letters = c.letters();
        let n = letters.len();
        let mut edges: Vec<(Letter, Letter)> = (0..n)
            .map(|i| {
                let u = letters[i];
                let v = letters[(i + 1) % n].inverse();
                if u <= v {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect();
        edges.sort_unstable();
        Ok(WhiteheadGraph {
            rank: c.rank(),
            edges,
        })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// Vertices in canonical order `x1, X1, x2, X2, ...`
    pub fn vertices(&self) -> Vec<Letter> {
        self.rank.letters().collect()
    }

    /// The sorted edge multiset, parallel edges repeated.
    pub fn edges(&self) -> &[(Letter, Letter)] {
        &self.edges
    }

    fn vertex_index(&self, l: Letter) -> usize {
        let k = (l.generator() - 1) as usize;
        2 * k + usize::from(l.is_inverse())
    }

    /// Deduplicated adjacency lists over all `2g` vertices; loops ignored.
    fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let n = 2 * self.rank.get() as usize;
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in &self.edges {
            let (ui, vi) = (self.vertex_index(u), self.vertex_index(v));
            if ui != vi {
                adj[ui].insert(vi);
                adj[vi].insert(ui);
            }
        }
        adj
    }

    /// Connectivity over all `2g` vertices; an unused generator makes the
    /// graph disconnected by definition.
    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let n = adj.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    /// All articulation points: vertices whose removal increases the number
    /// of connected components. Parallel edges count as a single adjacency,
    /// so they never create biconnectivity between two vertices alone.
    pub fn cut_vertices(&self) -> BTreeSet<Letter> {
        let adj = self.adjacency();
        let n = adj.len();
        let mut disc = vec![0usize; n];
        let mut low = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut is_cut = vec![false; n];
        let mut timer = 1usize;

        // Iterative Tarjan DFS from every unvisited vertex.
        for root in 0..n {
            if visited[root] {
                continue;
            }
            let mut root_children = 0usize;
            // stack frames: (vertex, parent, neighbor iterator position)
            let mut stack: Vec<(usize, usize, Vec<usize>, usize)> = Vec::new();
            visited[root] = true;
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, adj[root].iter().copied().collect(), 0));
            while let Some((v, parent, neighbors, mut idx)) = stack.pop() {
                if idx < neighbors.len() {
                    let u = neighbors[idx];
                    idx += 1;
                    stack.push((v, parent, neighbors, idx));
                    if !visited[u] {
                        if v == root {
                            root_children += 1;
                        }
                        visited[u] = true;
                        disc[u] = timer;
                        low[u] = timer;
                        timer += 1;
                        stack.push((u, v, adj[u].iter().copied().collect(), 0));
                    } else if u != parent {
                        low[v] = low[v].min(disc[u]);
                    }
                } else if let Some(top) = stack.last_mut() {
                    // v is fully explored; fold its low value into the parent
                    let p = top.0;
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }

        self.rank
            .letters()
            .filter(|&l| is_cut[self.vertex_index(l)])
            .collect()
    }

    /// Deterministic DOT export: vertices in canonical order, edges sorted
    /// by endpoints, parallel edges repeated.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph whitehead {\n");
        for v in self.vertices() {
            let _ = writeln!(out, "  {};", vertex_name(v));
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {} -- {};", vertex_name(u), vertex_name(v));
        }
        out.push_str("}\n");
        out
    }

    /// JSON export in the same deterministic order as the DOT output.
    pub fn to_json(&self) -> String {
        #[derive(serde::Serialize)]
        struct GraphJson {
            vertices: Vec<String>,
            edges: Vec<[String; 2]>,
        }
        let json = GraphJson {
            vertices: self.vertices().iter().map(|&v| vertex_name(v)).collect(),
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| [vertex_name(u), vertex_name(v)])
                .collect(),
        };
        serde_json::to_string(&json).expect("graph serialization cannot fail")
    }
}

fn vertex_name(l: Letter) -> String {
    if l.is_inverse() {
        format!("X{}", l.generator())
    } else {
        format!("x{}", l.generator())
    }
}

/// One-directional binding test: a connected Whitehead graph without cut
/// vertices certifies that the word binds the free group. Inconclusive
/// never means separable.
pub fn stallings_criterion(c: &CyclicWord) -> Result<StallingsCriterion> {
    let graph = WhiteheadGraph::build(c)?;
    if graph.is_connected() && graph.cut_vertices().is_empty() {
        Ok(StallingsCriterion::BindsCertified)
    } else {
        Ok(StallingsCriterion::Inconclusive)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rank(g: u32) -> Rank {
        Rank::new(g).unwrap()
    }

    fn cyc(text: &str, g: u32) -> CyclicWord {
        CyclicWord::parse(text, rank(g)).unwrap()
    }

    fn graph(text: &str, g: u32) -> WhiteheadGraph {
        WhiteheadGraph::build(&cyc(text, g)).unwrap()
    }

    fn edge_strings(g: &WhiteheadGraph) -> Vec<(String, String)> {
        g.edges()
            .iter()
            .map(|&(u, v)| (u.to_string(), v.to_string()))
            .collect()
    }

    #[test]
    fn build_examples() {
        let g = graph("abAB", 2);
        assert_eq!(
            edge_strings(&g),
            vec![
                ("a".into(), "b".into()),
                ("a".into(), "B".into()),
                ("A".into(), "b".into()),
                ("A".into(), "B".into()),
            ]
        );
        assert!(g.is_connected());
        assert!(g.cut_vertices().is_empty());

        let g = graph("aa", 2);
        assert_eq!(
            edge_strings(&g),
            vec![("a".into(), "A".into()), ("a".into(), "A".into())]
        );
        assert!(!g.is_connected());

        let g = graph("aabb", 2);
        assert_eq!(
            edge_strings(&g),
            vec![
                ("a".into(), "A".into()),
                ("a".into(), "B".into()),
                ("A".into(), "b".into()),
                ("b".into(), "B".into()),
            ]
        );
        assert!(g.is_connected());
        assert!(g.cut_vertices().is_empty());
    }

    #[test]
    fn build_rejects_empty() {
        assert_eq!(WhiteheadGraph::build(&cyc("", 2)), Err(Error::EmptyWord));
    }

    #[test]
    fn cut_vertices_of_the_level_six_word() {
        let g = graph("ababbb", 2);
        let expected_edges = vec![
            ("a".into(), "B".into()),
            ("a".into(), "B".into()),
            ("A".into(), "b".into()),
            ("A".into(), "b".into()),
            ("b".into(), "B".into()),
            ("b".into(), "B".into()),
        ];
        assert_eq!(edge_strings(&g), expected_edges);
        assert!(g.is_connected());
        // Both of x2's vertices separate the path A - b - B - a.
        let cuts: Vec<String> = g.cut_vertices().iter().map(|l| l.to_string()).collect();
        assert_eq!(cuts, vec!["b".to_string(), "B".to_string()]);
    }

    /// Brute-force articulation points: delete each vertex and count
    /// components among the rest.
    fn cut_vertices_by_removal(g: &WhiteheadGraph) -> BTreeSet<Letter> {
        let vertices = g.vertices();
        let components = |skip: Option<Letter>| -> usize {
            let keep: Vec<Letter> = vertices
                .iter()
                .copied()
                .filter(|&v| Some(v) != skip)
                .collect();
            let mut comp = 0;
            let mut seen: BTreeSet<Letter> = BTreeSet::new();
            for &start in &keep {
                if seen.contains(&start) {
                    continue;
                }
                comp += 1;
                let mut stack = vec![start];
                seen.insert(start);
                while let Some(v) = stack.pop() {
                    for &(a, b) in g.edges() {
                        if Some(a) == skip || Some(b) == skip || a == b {
                            continue;
                        }
                        for (from, to) in [(a, b), (b, a)] {
                            if from == v && !seen.contains(&to) {
                                seen.insert(to);
                                stack.push(to);
                            }
                        }
                    }
                }
            }
            comp
        };
        let base = components(None);
        vertices
            .iter()
            .copied()
            .filter(|&v| components(Some(v)) > base)
            .collect()
    }

    #[test]
    fn tarjan_matches_removal_oracle() {
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..300 {
            let g = rng.gen_range(1..=3);
            let len = rng.gen_range(1..=10);
            let mut letters = Vec::new();
            while letters.len() < len {
                let l = Letter::new(rng.gen_range(1..=g), rng.gen_bool(0.5));
                if letters.last() == Some(&l.inverse()) {
                    continue;
                }
                letters.push(l);
            }
            let word = Word::from_letters(letters);
            let (cyc, _) = CyclicWord::reduce(&word, rank(g)).unwrap();
            if cyc.is_empty() {
                continue;
            }
            let graph = WhiteheadGraph::build(&cyc).unwrap();
            assert_eq!(
                graph.cut_vertices(),
                cut_vertices_by_removal(&graph),
                "word {cyc}"
            );
        }
    }

    #[test]
    fn edge_count_equals_cyclic_length() {
        let mut rng = StdRng::seed_from_u64(22);
        for _ in 0..1000 {
            let g = rng.gen_range(1..=4);
            let len = rng.gen_range(1..=16);
            let mut letters = Vec::new();
            while letters.len() < len {
                let l = Letter::new(rng.gen_range(1..=g), rng.gen_bool(0.5));
                if letters.last() == Some(&l.inverse()) {
                    continue;
                }
                letters.push(l);
            }
            let (cyc, _) = CyclicWord::reduce(&Word::from_letters(letters), rank(g)).unwrap();
            if cyc.is_empty() {
                continue;
            }
            let graph = WhiteheadGraph::build(&cyc).unwrap();
            assert_eq!(graph.edges().len(), cyc.len());
        }
    }

    #[test]
    fn inversion_symmetry() {
        for text in ["abAB", "ababbb", "aabb", "abb"] {
            let c = cyc(text, 2);
            let g = WhiteheadGraph::build(&c).unwrap();
            let gi = WhiteheadGraph::build(&c.inverse()).unwrap();
            // v -> v^-1 maps the edge multiset of one onto the other
            let mut mapped: Vec<(Letter, Letter)> = g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (u.inverse(), v.inverse());
                    if a <= b {
                        (a, b)
                    } else {
                        (b, a)
                    }
                })
                .collect();
            mapped.sort_unstable();
            assert_eq!(mapped, gi.edges());
        }
    }

    #[test]
    fn stallings_examples() {
        assert_eq!(
            stallings_criterion(&cyc("abAB", 2)).unwrap(),
            StallingsCriterion::BindsCertified
        );
        assert_eq!(
            stallings_criterion(&cyc("ababbb", 2)).unwrap(),
            StallingsCriterion::Inconclusive
        );
        assert_eq!(
            stallings_criterion(&cyc("abab", 2)).unwrap(),
            StallingsCriterion::Inconclusive
        );
        assert!(!graph("abab", 2).is_connected());
    }

    #[test]
    fn dot_and_json_exports() {
        assert_eq!(
            graph("aa", 2).to_dot(),
            "graph whitehead {\n  x1;\n  X1;\n  x2;\n  X2;\n  x1 -- X1;\n  x1 -- X1;\n}\n"
        );
        assert_eq!(
            graph("abAB", 2).to_dot(),
            "graph whitehead {\n  x1;\n  X1;\n  x2;\n  X2;\n  x1 -- x2;\n  x1 -- X2;\n  X1 -- x2;\n  X1 -- X2;\n}\n"
        );
        assert_eq!(
            graph("a", 1).to_dot(),
            "graph whitehead {\n  x1;\n  X1;\n  x1 -- X1;\n}\n"
        );
        assert_eq!(
            graph("aa", 2).to_json(),
            r#"{"vertices":["x1","X1","x2","X2"],"edges":[["x1","X1"],["x1","X1"]]}"#
        );
    }

    #[test]
    fn rotation_invariance_before_canonicalization() {
        let base = cyc("ababbb", 2);
        let letters = base.letters().to_vec();
        for shift in 0..letters.len() {
            let mut rotated = letters.clone();
            rotated.rotate_left(shift);
            let c = CyclicWord::from_cyclically_reduced(rotated, rank(2));
            assert_eq!(
                WhiteheadGraph::build(&c).unwrap(),
                WhiteheadGraph::build(&base).unwrap()
            );
        }
    }
}
