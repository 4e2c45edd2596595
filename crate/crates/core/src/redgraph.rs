//! The graph of reduced expressions of an element, with braid moves as
//! edges labelled by their length `m_{i,j}`, its contractions, 2-colourings,
//! and the T- and punctual sign functions.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::coxeter::{Budget, CoxeterSystem, Element, Meter};
use crate::error::{Error, Result};
use crate::words::{s_sign, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// Lengths of the braid moves fused into this edge.
    pub lengths: BTreeSet<u32>,
}

/// Vertices are classes of reduced words (singletons before any contraction),
/// listed by their lexicographically least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedGraph {
    classes: Vec<Vec<Word>>,
    edges: Vec<Edge>,
}

/// Which lengths to contract; see [`Minor::lengths`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Minor {
    Full,
    /// contract commutations (length 2)
    Comm,
    /// contract length-3 moves
    Braid,
    /// contract every even length, keeping odd moves
    Odd,
    /// contract every odd length, keeping even moves
    Even,
    /// contract odd lengths and then every length above 2
    Two,
}

impl std::str::FromStr for Minor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Minor> {
        match s {
            "full" | "none" => Ok(Minor::Full),
            "comm" => Ok(Minor::Comm),
            "braid" => Ok(Minor::Braid),
            "odd" => Ok(Minor::Odd),
            "even" => Ok(Minor::Even),
            "two" | "2" => Ok(Minor::Two),
            _ => Err(Error::Invalid(format!(
                "unknown minor `{s}` (full, comm, braid, odd, even, two)"
            ))),
        }
    }
}

impl Minor {
    /// The edge lengths contracted to obtain this minor, among `present`.
    pub fn lengths(self, present: &[u32]) -> BTreeSet<u32> {
        present
            .iter()
            .copied()
            .filter(|&m| match self {
                Minor::Full => false,
                Minor::Comm => m == 2,
                Minor::Braid => m == 3,
                Minor::Odd => m % 2 == 0,
                Minor::Even => m % 2 == 1,
                Minor::Two => m % 2 == 1 || m > 2,
            })
            .collect()
    }
}

/// Either a proper 2-colouring (`±1` per vertex) or an odd closed walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    Coloring(Vec<i8>),
    OddCycle(Vec<usize>),
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so roots are lexicographically least
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

impl RedGraph {
    /// The graph on `R(w)`.
    pub fn build(sys: &CoxeterSystem, w: &Element, budget: Budget) -> Result<RedGraph> {
        let mut meter = Meter::new("building the graph of reduced words", budget);
        let mut words = Vec::new();
        for v in sys.reduced_words(w) {
            meter.tick(1)?;
            words.push(v);
        }
        Ok(Self::from_words(sys, words))
    }

    /// The graph on `R(w₀)`.
    pub fn longest(sys: &CoxeterSystem, budget: Budget) -> Result<RedGraph> {
        Self::build(sys, &sys.longest_element(), budget)
    }

    /// The braid-move graph on a set of words closed under braid moves.
    pub fn from_words(sys: &CoxeterSystem, mut words: Vec<Word>) -> RedGraph {
        words.sort();
        words.dedup();
        let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut edges = Vec::new();
        for (a, w) in words.iter().enumerate() {
            for mv in sys.braid_moves(w) {
                let b = *index
                    .get(&mv.result)
                    .expect("word set must be closed under braid moves");
                if a < b {
                    edges.push(Edge {
                        a,
                        b,
                        lengths: BTreeSet::from([mv.len as u32]),
                    });
                }
            }
        }
        edges.sort_by(|x, y| (x.a, x.b).cmp(&(y.a, y.b)));
        RedGraph {
            classes: words.into_iter().map(|w| vec![w]).collect(),
            edges,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<Word>] {
        &self.classes
    }

    /// Lexicographically least member of each class.
    pub fn representatives(&self) -> Vec<&Word> {
        self.classes.iter().map(|c| &c[0]).collect()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Class index of a word.
    pub fn class_of(&self, w: &Word) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(w).is_ok())
    }

    /// Count of edges per label.
    pub fn edge_length_counts(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for e in &self.edges {
            for &l in &e.lengths {
                *out.entry(l).or_insert(0) += 1;
            }
        }
        out
    }

    /// Contracts every edge carrying one of `lengths`; parallel edges are
    /// fused and keep the union of their labels. Edges inside a class that
    /// were not contracted survive as loops.
    pub fn contract(&self, lengths: &BTreeSet<u32>) -> RedGraph {
        let n = self.classes.len();
        let mut uf = UnionFind((0..n).collect());
        for e in &self.edges {
            if e.lengths.iter().any(|l| lengths.contains(l)) {
                uf.union(e.a, e.b);
            }
        }
        let mut new_index = vec![usize::MAX; n];
        let mut classes: Vec<Vec<Word>> = Vec::new();
        for v in 0..n {
            let r = uf.find(v);
            if new_index[r] == usize::MAX {
                new_index[r] = classes.len();
                classes.push(Vec::new());
            }
            new_index[v] = new_index[r];
            classes[new_index[v]].extend(self.classes[v].iter().cloned());
        }
        for c in classes.iter_mut() {
            c.sort();
        }
        let mut fused: BTreeMap<(usize, usize), BTreeSet<u32>> = BTreeMap::new();
        for e in &self.edges {
            if e.lengths.iter().any(|l| lengths.contains(l)) {
                continue;
            }
            let (a, b) = (new_index[e.a], new_index[e.b]);
            fused
                .entry((a.min(b), a.max(b)))
                .or_default()
                .extend(e.lengths.iter().copied());
        }
        RedGraph {
            classes,
            edges: fused
                .into_iter()
                .map(|((a, b), lengths)| Edge { a, b, lengths })
                .collect(),
        }
    }

    pub fn minor(&self, sys: &CoxeterSystem, minor: Minor) -> RedGraph {
        self.contract(&minor.lengths(&sys.edge_lengths()))
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.classes.len()];
        for (k, e) in self.edges.iter().enumerate() {
            adj[e.a].push((e.b, k));
            if e.a != e.b {
                adj[e.b].push((e.a, k));
            }
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.classes.is_empty() {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.classes.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// A 2-colouring with vertex 0 of each component coloured `+1`, or an
    /// odd cycle (a loop counts as a cycle of length 1).
    pub fn bipartition(&self) -> Bipartition {
        let n = self.classes.len();
        let adj = self.adjacency();
        let mut color = vec![0i8; n];
        let mut parent = vec![usize::MAX; n];
        for start in 0..n {
            if color[start] != 0 {
                continue;
            }
            color[start] = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(v, _) in &adj[u] {
                    if v == u {
                        return Bipartition::OddCycle(vec![u]);
                    }
                    if color[v] == 0 {
                        color[v] = -color[u];
                        parent[v] = u;
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return Bipartition::OddCycle(odd_cycle(&parent, u, v));
                    }
                }
            }
        }
        Bipartition::Coloring(color)
    }

    /// Graphviz rendering: solid edges for even lengths, dashed for odd,
    /// doubled strokes for 4 and 5.
    pub fn to_dot(&self, name: &str, signs: Option<&SignAssignment>) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{name}\" {{");
        let _ = writeln!(out, "  node [shape=plaintext];");
        for (i, class) in self.classes.iter().enumerate() {
            let mut label = if class.len() == 1 {
                class[0].to_string()
            } else {
                let members: Vec<String> = class.iter().map(|w| w.to_string()).collect();
                format!("{{{}}}", members.join(","))
            };
            if let Some(s) = signs.and_then(|s| s.signs.get(&class[0])) {
                label.push_str(if *s > 0 { " +" } else { " -" });
            }
            let _ = writeln!(out, "  v{i} [label=\"{label}\"];");
        }
        for e in &self.edges {
            let labels: Vec<String> = e.lengths.iter().map(|l| l.to_string()).collect();
            let m = *e.lengths.iter().next().unwrap_or(&2);
            let style = if m % 2 == 0 { "solid" } else { "dashed" };
            let color = if m == 4 || m == 5 { "black:invis:black" } else { "black" };
            let _ = writeln!(
                out,
                "  v{} -- v{} [label=\"{}\", style={style}, color=\"{color}\"];",
                e.a,
                e.b,
                labels.join(",")
            );
        }
        out.push_str("}\n");
        out
    }

    /// `{vertices, classes, edges: [{a, b, length}], signs}`; one edge entry per label.
    pub fn to_json(&self, signs: Option<&SignAssignment>) -> serde_json::Value {
        let vertices: Vec<String> = self.classes.iter().map(|c| c[0].to_string()).collect();
        let classes: Vec<Vec<String>> = self
            .classes
            .iter()
            .map(|c| c.iter().map(|w| w.to_string()).collect())
            .collect();
        let edges: Vec<serde_json::Value> = self
            .edges
            .iter()
            .flat_map(|e| {
                e.lengths
                    .iter()
                    .map(move |l| serde_json::json!({"a": e.a, "b": e.b, "length": l}))
            })
            .collect();
        let signs: serde_json::Value = match signs {
            Some(s) => vertices
                .iter()
                .zip(&self.classes)
                .map(|(name, c)| (name.clone(), serde_json::json!(s.signs.get(&c[0]))))
                .collect::<serde_json::Map<_, _>>()
                .into(),
            None => serde_json::Value::Null,
        };
        serde_json::json!({"vertices": vertices, "classes": classes, "edges": edges, "signs": signs})
    }
}

fn odd_cycle(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let (pu, pv) = (path(u), path(v));
    let on_pv: HashMap<usize, usize> = pv.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let (iu, &lca) = pu
        .iter()
        .enumerate()
        .find(|(_, x)| on_pv.contains_key(x))
        .expect("both ends lie in one BFS tree");
    let mut cycle: Vec<usize> = pu[..=iu].to_vec();
    cycle.extend(pv[..on_pv[&lca]].iter().rev());
    cycle
}

/// Braid-move closure of one word, by breadth-first search.
pub fn braid_closure(sys: &CoxeterSystem, start: &Word, budget: Budget) -> Result<BTreeSet<Word>> {
    let mut meter = Meter::new("closing under braid moves", budget);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(w) = queue.pop_front() {
        meter.tick(1)?;
        for mv in sys.braid_moves(&w) {
            if seen.insert(mv.result.clone()) {
                queue.push_back(mv.result);
            }
        }
    }
    Ok(seen)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SignKind {
    S,
    T,
    Punctual,
}

impl std::str::FromStr for SignKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<SignKind> {
        match s.to_ascii_lowercase().as_str() {
            "s" => Ok(SignKind::S),
            "t" => Ok(SignKind::T),
            "punctual" | "st" => Ok(SignKind::Punctual),
            _ => Err(Error::Invalid(format!("unknown sign kind `{s}` (s, t, punctual)"))),
        }
    }
}

/// How the global sign of `τ` is fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TNormalization {
    /// `τ = +1` on the reduced word of `w₀` read off greedily from
    /// `(s_1 ⋯ s_n)^∞`, i.e. the occurrence with the smallest positions.
    #[default]
    GreedyOccurrence,
    /// `τ = +1` on the lexicographically least reduced word of `w₀`.
    LexLeast,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignAssignment {
    pub kind: SignKind,
    pub signs: BTreeMap<Word, i8>,
}

impl SignAssignment {
    pub fn get(&self, w: &Word) -> Option<i8> {
        self.signs.get(w).copied()
    }

    pub fn flipped(&self) -> SignAssignment {
        SignAssignment {
            kind: self.kind,
            signs: self.signs.iter().map(|(w, s)| (w.clone(), -s)).collect(),
        }
    }
}

/// The reduced word of `w₀` spelled by the leftmost occurrence in `(s_1 ⋯ s_n)^∞`.
pub fn greedy_longest_word(sys: &CoxeterSystem) -> Word {
    let n = sys.rank() as u8;
    let target = sys.longest_length();
    let mut w = sys.identity();
    let mut letters = Vec::with_capacity(target);
    let mut s = 1u8;
    while letters.len() < target {
        if !sys.is_right_descent(&w, s) {
            w = sys.mul_gen(&w, s);
            letters.push(s);
        }
        s = s % n + 1;
    }
    Word::new(letters)
}

pub fn s_signs(graph: &RedGraph) -> SignAssignment {
    SignAssignment {
        kind: SignKind::S,
        signs: graph
            .classes
            .iter()
            .flatten()
            .map(|w| (w.clone(), s_sign(w)))
            .collect(),
    }
}

/// `τ` on the vertices of an uncontracted graph, propagated along a BFS tree
/// by `τ(w′) = (−1)^{m−1} τ(w)` from `root` (`τ(root) = +1`) and then
/// checked on every edge.
pub fn t_signs_from(graph: &RedGraph, root: &Word) -> Result<SignAssignment> {
    let adj = graph.adjacency();
    let r = graph
        .class_of(root)
        .ok_or_else(|| Error::Invalid(format!("{root} is not a vertex")))?;
    let mut tau = vec![0i8; graph.classes.len()];
    tau[r] = 1;
    let mut queue = VecDeque::from([r]);
    let flip = |e: &Edge| {
        let m = *e.lengths.iter().next().expect("edges carry a length");
        if m % 2 == 0 {
            -1
        } else {
            1
        }
    };
    while let Some(u) = queue.pop_front() {
        for &(v, k) in &adj[u] {
            if tau[v] == 0 {
                tau[v] = tau[u] * flip(&graph.edges[k]);
                queue.push_back(v);
            }
        }
    }
    for e in &graph.edges {
        if e.lengths.len() != 1 || tau[e.a] * flip(e) != tau[e.b] || tau[e.a] == 0 {
            return Err(Error::InconsistentSign {
                a: graph.classes[e.a][0].to_string(),
                b: graph.classes[e.b][0].to_string(),
            });
        }
    }
    Ok(SignAssignment {
        kind: SignKind::T,
        signs: graph
            .classes
            .iter()
            .zip(&tau)
            .flat_map(|(c, &t)| c.iter().map(move |w| (w.clone(), t)))
            .collect(),
    })
}

/// `τ` on `R(w₀)` under the chosen normalisation.
pub fn t_signs(sys: &CoxeterSystem, graph: &RedGraph, norm: TNormalization) -> Result<SignAssignment> {
    let root = match norm {
        TNormalization::GreedyOccurrence => greedy_longest_word(sys),
        TNormalization::LexLeast => graph.classes.iter().flatten().min().cloned().unwrap_or_default(),
    };
    t_signs_from(graph, &root)
}

/// `⧗ = σ·τ`.
pub fn punctual_signs(sys: &CoxeterSystem, graph: &RedGraph, norm: TNormalization) -> Result<SignAssignment> {
    let tau = t_signs(sys, graph, norm)?;
    Ok(SignAssignment {
        kind: SignKind::Punctual,
        signs: tau
            .signs
            .into_iter()
            .map(|(w, t)| {
                let s = s_sign(&w) * t;
                (w, s)
            })
            .collect(),
    })
}

pub fn signs(sys: &CoxeterSystem, graph: &RedGraph, kind: SignKind, norm: TNormalization) -> Result<SignAssignment> {
    match kind {
        SignKind::S => Ok(s_signs(graph)),
        SignKind::T => t_signs(sys, graph, norm),
        SignKind::Punctual => punctual_signs(sys, graph, norm),
    }
}
