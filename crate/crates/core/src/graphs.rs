//! Simple graphs, the named families, and perfect-matching enumeration.
//!
//! Edges are stored as sorted pairs `(a, b)` with `a < b`; an edge's index is
//! its position in the sorted edge list and doubles as the index of its
//! variable in [`crate::polyalg::MatchingPolynomial`].

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Citation metadata for a graph's orientable genus. Never computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusNote {
    pub genus: usize,
    pub citation: &'static str,
}

const GENUS_K33_BLOCKS: &str =
    "genus(K33) = 1 and genus is additive over connected components (Battle-Harary-Kodama-Youngs)";
const GENUS_CHAIN: &str =
    "contains K33 blocks as a spanning subgraph (genus >= g); one block per handle with connectors drawn between handles (genus <= g)";

/// The parameterised graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", content = "param", rename_all = "kebab-case")]
pub enum Family {
    /// Complete bipartite `K_{n,n}`.
    Knn(usize),
    /// Complete graph on `2n` vertices.
    K2n(usize),
    /// `r` vertex-disjoint copies of `K_{3,3}`.
    K33Blocks(usize),
    /// `g` copies of `K_{3,3}` joined in a chain by two connector edges.
    Chain(usize),
    /// [`Family::Chain`] plus the edges `a_1 b_1` and `alpha_1 beta_1`.
    ChainPlus(usize),
}

impl Family {
    pub fn param(&self) -> usize {
        match *self {
            Family::Knn(p)
            | Family::K2n(p)
            | Family::K33Blocks(p)
            | Family::Chain(p)
            | Family::ChainPlus(p) => p,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Family::Knn(_) => "knn",
            Family::K2n(_) => "k2n",
            Family::K33Blocks(_) => "k33-blocks",
            Family::Chain(_) => "chain",
            Family::ChainPlus(_) => "chain-plus",
        }
    }

    /// Parses a tag and parameter, e.g. `("chain", 3)`.
    pub fn from_tag(tag: &str, param: usize) -> Result<Family> {
        Ok(match tag.to_ascii_lowercase().as_str() {
            "knn" => Family::Knn(param),
            "k2n" => Family::K2n(param),
            "k33-blocks" | "k33blocks" | "blocks" => Family::K33Blocks(param),
            "chain" => Family::Chain(param),
            "chain-plus" | "chainplus" | "chain+" => Family::ChainPlus(param),
            other => return Err(Error::domain(format!("unknown graph family '{other}'"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.tag(), self.param())
    }
}

/// Finite simple graph with canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    bipartition: Option<(Vec<usize>, Vec<usize>)>,
    genus_note: Option<GenusNote>,
}

/// Set of edge indices, sorted. When produced by the enumerator the edges
/// cover every vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    edges: Vec<usize>,
}

impl Matching {
    pub fn new(mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Default cap on the number of perfect matchings produced by one
/// enumeration.
pub const DEFAULT_MATCHING_CAP: usize = 1_000_000;

impl Graph {
    /// Builds a graph from any edge list. Endpoints are normalised to
    /// `a < b` and edges sorted; loops, duplicates and out-of-range
    /// endpoints are rejected.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::domain(format!("loop at vertex {a}")));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::domain(format!(
                    "edge ({a}, {b}) outside vertex range 0..{vertex_count}"
                )));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::domain(format!("duplicate edge {:?}", w[0])));
        }
        Ok(Graph {
            vertex_count,
            edges: list,
            bipartition: None,
            genus_note: None,
        })
    }

    /// Records a bipartition. `u` and `v` must partition the vertex set and
    /// every edge must cross it.
    pub fn with_bipartition(mut self, mut u: Vec<usize>, mut v: Vec<usize>) -> Result<Graph> {
        u.sort_unstable();
        v.sort_unstable();
        let mut side = vec![None; self.vertex_count];
        for (part, list) in [(0u8, &u), (1u8, &v)] {
            for &x in list.iter() {
                if x >= self.vertex_count {
                    return Err(Error::domain(format!("bipartition vertex {x} out of range")));
                }
                if side[x].is_some() {
                    return Err(Error::domain(format!("vertex {x} listed twice in bipartition")));
                }
                side[x] = Some(part);
            }
        }
        if let Some(x) = side.iter().position(Option::is_none) {
            return Err(Error::domain(format!("vertex {x} missing from bipartition")));
        }
        if let Some(&(a, b)) = self.edges.iter().find(|&&(a, b)| side[a] == side[b]) {
            return Err(Error::domain(format!("edge ({a}, {b}) does not cross the bipartition")));
        }
        self.bipartition = Some((u, v));
        Ok(self)
    }

    fn with_genus(mut self, genus: usize, citation: &'static str) -> Graph {
        self.genus_note = Some(GenusNote { genus, citation });
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn bipartition(&self) -> Option<(&[usize], &[usize])> {
        self.bipartition.as_ref().map(|(u, v)| (u.as_slice(), v.as_slice()))
    }

    pub fn genus_note(&self) -> Option<&GenusNote> {
        self.genus_note.as_ref()
    }

    /// Index of edge `{a, b}`, if present.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    /// Incident edge indices per vertex, in increasing edge-index order.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            inc[a].push(i);
            inc[b].push(i);
        }
        inc
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let inc = self.incidence();
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &e in &inc[x] {
                let (a, b) = self.edges[e];
                let y = if a == x { b } else { a };
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Two-colours the graph by BFS, independently of any recorded
    /// bipartition. Returns the colour classes when the graph is bipartite.
    pub fn two_coloring(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let inc = self.incidence();
        let mut color: Vec<Option<bool>> = vec![None; self.vertex_count];
        for start in 0..self.vertex_count {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let cx = color[x].unwrap();
                for &e in &inc[x] {
                    let (a, b) = self.edges[e];
                    let y = if a == x { b } else { a };
                    match color[y] {
                        None => {
                            color[y] = Some(!cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let u = (0..self.vertex_count).filter(|&x| color[x] == Some(false)).collect();
        let v = (0..self.vertex_count).filter(|&x| color[x] == Some(true)).collect();
        Some((u, v))
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    // ---- named small graphs ----

    /// Complete bipartite `K_{m,n}` with `U = 0..m`, `V = m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Graph {
        let edges = (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b)));
        Graph::new(m + n, edges)
            .and_then(|g| g.with_bipartition((0..m).collect(), (m..m + n).collect()))
            .expect("complete bipartite construction is valid")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::new(n, edges).expect("complete graph construction is valid")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::domain("a cycle needs at least 3 vertices"));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::domain("a path needs at least 1 vertex"));
        }
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `rows x cols` grid; vertex `(r, c)` is numbered `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
        if rows == 0 || cols == 0 {
            return Err(Error::domain("grid dimensions must be positive"));
        }
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let x = r * cols + c;
                if c + 1 < cols {
                    edges.push((x, x + 1));
                }
                if r + 1 < rows {
                    edges.push((x, x + cols));
                }
            }
        }
        Graph::new(rows * cols, edges)
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        let g = Graph::new(self.vertex_count + other.vertex_count, edges)
            .expect("disjoint union of valid graphs is valid");
        match (self.bipartition(), other.bipartition()) {
            (Some((u1, v1)), Some((u2, v2))) => {
                let u = u1.iter().copied().chain(u2.iter().map(|x| x + shift)).collect();
                let v = v1.iter().copied().chain(v2.iter().map(|x| x + shift)).collect();
                g.with_bipartition(u, v).expect("union of bipartitions is a bipartition")
            }
            _ => g,
        }
    }
}

/// Position of each named vertex inside a `K_{3,3}` block of the chain
/// families: `a, b, c` form `U_i`, `alpha, beta, gamma` form `V_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockVertex {
    A = 0,
    B = 1,
    C = 2,
    Alpha = 3,
    Beta = 4,
    Gamma = 5,
}

/// Vertex number of `which` in block `block` (0-based) of the chain
/// families. Blocks are laid out consecutively, six vertices each.
pub fn block_vertex(block: usize, which: BlockVertex) -> usize {
    6 * block + which as usize
}

/// Connector edges `a_i beta_{i+1}` and `b_{i+1} alpha_i` for `i` in
/// `0..blocks-1`, as vertex pairs.
pub fn chain_connectors(blocks: usize) -> Vec<(usize, usize)> {
    use BlockVertex::*;
    (0..blocks.saturating_sub(1))
        .flat_map(|i| {
            [
                (block_vertex(i, A), block_vertex(i + 1, Beta)),
                (block_vertex(i + 1, B), block_vertex(i, Alpha)),
            ]
        })
        .collect()
}

fn k33_block_edges(blocks: usize) -> Vec<(usize, usize)> {
    use BlockVertex::*;
    let mut edges = Vec::with_capacity(9 * blocks);
    for i in 0..blocks {
        for u in [A, B, C] {
            for v in [Alpha, Beta, Gamma] {
                edges.push((block_vertex(i, u), block_vertex(i, v)));
            }
        }
    }
    edges
}

fn block_bipartition(blocks: usize) -> (Vec<usize>, Vec<usize>) {
    let u = (0..blocks).flat_map(|i| (0..3).map(move |k| 6 * i + k)).collect();
    let v = (0..blocks).flat_map(|i| (3..6).map(move |k| 6 * i + k)).collect();
    (u, v)
}

/// Builds a member of one of the named families.
pub fn construct_family(family: Family) -> Result<Graph> {
    let p = family.param();
    if p < 1 {
        return Err(Error::domain(format!("{family}: parameter must be at least 1")));
    }
    let graph = match family {
        Family::Knn(n) => Graph::complete_bipartite(n, n),
        Family::K2n(n) => Graph::complete(2 * n),
        Family::K33Blocks(r) => {
            let (u, v) = block_bipartition(r);
            Graph::new(6 * r, k33_block_edges(r))?
                .with_bipartition(u, v)?
                .with_genus(r, GENUS_K33_BLOCKS)
        }
        Family::Chain(g) => {
            let mut edges = k33_block_edges(g);
            edges.extend(chain_connectors(g));
            let (u, v) = block_bipartition(g);
            Graph::new(6 * g, edges)?
                .with_bipartition(u, v)?
                .with_genus(g, GENUS_CHAIN)
        }
        Family::ChainPlus(g) => {
            use BlockVertex::*;
            let mut edges = k33_block_edges(g);
            edges.extend(chain_connectors(g));
            edges.push((block_vertex(0, A), block_vertex(0, B)));
            edges.push((block_vertex(0, Alpha), block_vertex(0, Beta)));
            Graph::new(6 * g, edges)?
        }
    };
    Ok(graph)
}

/// A spanning subgraph together with the map back to the parent's edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningSubgraph {
    pub graph: Graph,
    /// `parent_edge[i]` is the parent index of the subgraph's edge `i`.
    pub parent_edge: Vec<usize>,
    /// `child_edge[e]` is the subgraph index of parent edge `e`, if kept.
    pub child_edge: Vec<Option<usize>>,
}

/// Deletes edges by index, keeping every vertex.
pub fn delete_edges(graph: &Graph, removed: &[usize]) -> Result<SpanningSubgraph> {
    let mut keep = vec![true; graph.edge_count()];
    for &e in removed {
        if e >= graph.edge_count() {
            return Err(Error::domain(format!(
                "edge index {e} out of range (graph has {} edges)",
                graph.edge_count()
            )));
        }
        keep[e] = false;
    }
    let parent_edge: Vec<usize> = (0..graph.edge_count()).filter(|&e| keep[e]).collect();
    let mut child_edge = vec![None; graph.edge_count()];
    for (i, &e) in parent_edge.iter().enumerate() {
        child_edge[e] = Some(i);
    }
    let sub = Graph {
        vertex_count: graph.vertex_count,
        edges: parent_edge.iter().map(|&e| graph.edges[e]).collect(),
        bipartition: graph.bipartition.clone(),
        genus_note: None,
    };
    Ok(SpanningSubgraph {
        graph: sub,
        parent_edge,
        child_edge,
    })
}

/// All perfect matchings in lexicographic order of their edge-index
/// sequences.
///
/// The enumerator always matches the lowest uncovered vertex, trying its
/// incident edges in increasing index order; the chosen edges therefore come
/// out sorted and the depth-first order is lexicographic.
pub fn enumerate_perfect_matchings(graph: &Graph, cap: usize) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    if graph.vertex_count % 2 == 1 {
        return Ok(out);
    }
    let inc = graph.incidence();
    let mut covered = vec![false; graph.vertex_count];
    let mut chosen = Vec::with_capacity(graph.vertex_count / 2);
    extend_matching(graph, &inc, &mut covered, &mut chosen, 0, cap, &mut out)?;
    Ok(out)
}

fn extend_matching(
    graph: &Graph,
    inc: &[Vec<usize>],
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
    from: usize,
    cap: usize,
    out: &mut Vec<Matching>,
) -> Result<()> {
    let Some(v) = (from..covered.len()).find(|&x| !covered[x]) else {
        if out.len() >= cap {
            return Err(Error::resource(format!(
                "more than {cap} perfect matchings"
            )));
        }
        out.push(Matching {
            edges: chosen.clone(),
        });
        return Ok(());
    };
    covered[v] = true;
    for &e in &inc[v] {
        let (a, b) = graph.edges[e];
        let w = if a == v { b } else { a };
        if covered[w] {
            continue;
        }
        covered[w] = true;
        chosen.push(e);
        extend_matching(graph, inc, covered, chosen, v + 1, cap, out)?;
        chosen.pop();
        covered[w] = false;
    }
    covered[v] = false;
    Ok(())
}

/// Why a graph is or is not matching-covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "edge", rename_all = "kebab-case")]
pub enum Coverage {
    Covered,
    Disconnected,
    /// First edge index lying in no perfect matching.
    UncoveredEdge(usize),
}

/// Classifies `graph` by the matching-covered definition: connected, and
/// every edge lies in some perfect matching.
pub fn matching_coverage(graph: &Graph, cap: usize) -> Result<Coverage> {
    if !graph.is_connected() {
        return Ok(Coverage::Disconnected);
    }
    let mut used = vec![false; graph.edge_count()];
    for m in enumerate_perfect_matchings(graph, cap)? {
        for &e in m.edges() {
            used[e] = true;
        }
    }
    Ok(match used.iter().position(|&u| !u) {
        Some(e) => Coverage::UncoveredEdge(e),
        None => Coverage::Covered,
    })
}

pub fn is_matching_covered(graph: &Graph, cap: usize) -> Result<bool> {
    Ok(matching_coverage(graph, cap)? == Coverage::Covered)
}

impl fmt::Display for Graph {
    /// Graph text format: `vertices <n>`, optional
    /// `bipartition <u..> | <v..>`, then one `edge <a> <b>` per edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.vertex_count)?;
        if let Some((u, v)) = &self.bipartition {
            let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            writeln!(f, "bipartition {} | {}", join(u), join(v))?;
        }
        for &(a, b) in &self.edges {
            writeln!(f, "edge {a} {b}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Graph> {
        let mut vertex_count = None;
        let mut bipartition = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap_or_default();
            let num = |w: &str| {
                w.parse::<usize>()
                    .map_err(|_| Error::parse(line_no, format!("expected a vertex number, got '{w}'")))
            };
            match keyword {
                "vertices" => {
                    if vertex_count.is_some() {
                        return Err(Error::parse(line_no, "repeated 'vertices' line"));
                    }
                    let n = words
                        .next()
                        .ok_or_else(|| Error::parse(line_no, "missing vertex count"))?;
                    vertex_count = Some(num(n)?);
                }
                "bipartition" => {
                    let rest: Vec<&str> = words.collect();
                    let bar = rest
                        .iter()
                        .position(|&w| w == "|")
                        .ok_or_else(|| Error::parse(line_no, "bipartition needs a '|' separator"))?;
                    let u = rest[..bar].iter().map(|w| num(w)).collect::<Result<Vec<_>>>()?;
                    let v = rest[bar + 1..].iter().map(|w| num(w)).collect::<Result<Vec<_>>>()?;
                    bipartition = Some((line_no, u, v));
                }
                "edge" => {
                    let a = words.next().ok_or_else(|| Error::parse(line_no, "edge needs two endpoints"))?;
                    let b = words.next().ok_or_else(|| Error::parse(line_no, "edge needs two endpoints"))?;
                    edges.push((line_no, num(a)?, num(b)?));
                }
                other => return Err(Error::parse(line_no, format!("unknown keyword '{other}'"))),
            }
            if line.split_whitespace().count() > 3 && keyword != "bipartition" {
                return Err(Error::parse(line_no, "trailing tokens"));
            }
        }
        let n = vertex_count.ok_or_else(|| Error::parse(1, "missing 'vertices' line"))?;
        for &(line_no, a, b) in &edges {
            if a >= n || b >= n || a == b {
                return Err(Error::parse(line_no, format!("invalid edge ({a}, {b})")));
            }
        }
        let graph = Graph::new(n, edges.iter().map(|&(_, a, b)| (a, b)))
            .map_err(|e| Error::parse(0, e.to_string()))?;
        match bipartition {
            Some((line_no, u, v)) => graph
                .with_bipartition(u, v)
                .map_err(|e| Error::parse(line_no, e.to_string())),
            None => Ok(graph),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = DEFAULT_MATCHING_CAP;

    #[test]
    fn family_sizes() {
        let k33 = construct_family(Family::Knn(3)).unwrap();
        assert_eq!((k33.vertex_count(), k33.edge_count()), (6, 9));
        assert!(k33.bipartition().is_some());

        let chain3 = construct_family(Family::Chain(3)).unwrap();
        assert_eq!((chain3.vertex_count(), chain3.edge_count()), (18, 31));
        assert_eq!(chain3.genus_note().unwrap().genus, 3);

        let k6 = construct_family(Family::K2n(3)).unwrap();
        assert_eq!(k6.edge_count(), 15);
        assert!(k6.bipartition().is_none());
    }

    #[test]
    fn family_rejects_zero_parameter() {
        for fam in [Family::Knn(0), Family::K2n(0), Family::K33Blocks(0), Family::Chain(0), Family::ChainPlus(0)] {
            assert!(matches!(construct_family(fam), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn chain_plus_has_the_triangle() {
        use BlockVertex::*;
        let g = construct_family(Family::ChainPlus(1)).unwrap();
        let (a, b, al) = (block_vertex(0, A), block_vertex(0, B), block_vertex(0, Alpha));
        assert!(g.edge_index(a, b).is_some());
        assert!(g.edge_index(b, al).is_some());
        assert!(g.edge_index(a, al).is_some());
        assert!(!g.is_bipartite());
    }

    #[test]
    fn delete_nothing_is_identity() {
        let g = construct_family(Family::Chain(2)).unwrap();
        let sub = delete_edges(&g, &[]).unwrap();
        assert_eq!(sub.graph.edges(), g.edges());
        assert_eq!(sub.parent_edge, (0..g.edge_count()).collect::<Vec<_>>());
    }

    #[test]
    fn delete_connectors_gives_blocks() {
        for g in 1..=4 {
            let chain = construct_family(Family::Chain(g)).unwrap();
            let removed: Vec<usize> = chain_connectors(g)
                .into_iter()
                .map(|(a, b)| chain.edge_index(a, b).unwrap())
                .collect();
            assert_eq!(removed.len(), 2 * (g - 1));
            let sub = delete_edges(&chain, &removed).unwrap();
            let blocks = construct_family(Family::K33Blocks(g)).unwrap();
            assert_eq!(sub.graph.edges(), blocks.edges());
            assert_eq!(sub.graph.vertex_count(), blocks.vertex_count());
        }
    }

    #[test]
    fn delete_everything_and_bad_index() {
        let g = Graph::complete(4);
        let all: Vec<usize> = (0..g.edge_count()).collect();
        let sub = delete_edges(&g, &all).unwrap();
        assert_eq!(sub.graph.edge_count(), 0);
        assert_eq!(sub.graph.vertex_count(), 4);
        assert!(matches!(delete_edges(&g, &[6]), Err(Error::Domain(_))));
    }

    #[test]
    fn matching_counts_small() {
        assert_eq!(enumerate_perfect_matchings(&Graph::complete_bipartite(3, 3), CAP).unwrap().len(), 6);
        assert_eq!(enumerate_perfect_matchings(&Graph::complete(4), CAP).unwrap().len(), 3);
        assert_eq!(enumerate_perfect_matchings(&Graph::complete(5), CAP).unwrap().len(), 0);
        let chain2 = construct_family(Family::Chain(2)).unwrap();
        assert_eq!(enumerate_perfect_matchings(&chain2, CAP).unwrap().len(), 40);
    }

    #[test]
    fn factorial_and_double_factorial_counts() {
        let mut fact = 1;
        let mut dfact = 1;
        for n in 1..=4 {
            fact *= n;
            if n > 1 {
                dfact *= 2 * n - 1;
            }
            let knn = construct_family(Family::Knn(n)).unwrap();
            let k2n = construct_family(Family::K2n(n)).unwrap();
            assert_eq!(enumerate_perfect_matchings(&knn, CAP).unwrap().len(), fact);
            assert_eq!(enumerate_perfect_matchings(&k2n, CAP).unwrap().len(), dfact);
        }
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let ms = enumerate_perfect_matchings(&Graph::complete(6), CAP).unwrap();
        assert!(ms.windows(2).all(|w| w[0].edges() < w[1].edges()));
        assert!(ms.iter().all(|m| m.edges().windows(2).all(|w| w[0] < w[1])));
    }

    #[test]
    fn enumeration_cap() {
        let g = Graph::complete(8);
        assert!(matches!(enumerate_perfect_matchings(&g, 104), Err(Error::Resource(_))));
        assert_eq!(enumerate_perfect_matchings(&g, 105).unwrap().len(), 105);
    }

    #[test]
    fn disjoint_union_multiplies_counts() {
        let a = Graph::complete_bipartite(2, 2);
        let b = Graph::complete(4);
        let u = a.disjoint_union(&b);
        assert_eq!(enumerate_perfect_matchings(&u, CAP).unwrap().len(), 2 * 3);
    }

    #[test]
    fn chain_junction_rule() {
        for g in 2..=3 {
            let chain = construct_family(Family::Chain(g)).unwrap();
            let conns: Vec<usize> = chain_connectors(g)
                .into_iter()
                .map(|(a, b)| chain.edge_index(a, b).unwrap())
                .collect();
            for m in enumerate_perfect_matchings(&chain, CAP).unwrap() {
                for pair in conns.chunks(2) {
                    let first = m.edges().contains(&pair[0]);
                    let second = m.edges().contains(&pair[1]);
                    assert_eq!(first, second, "junction rule broken in {m:?}");
                }
            }
        }
    }

    #[test]
    fn matching_covered_examples() {
        let chain2 = construct_family(Family::Chain(2)).unwrap();
        assert_eq!(matching_coverage(&chain2, CAP).unwrap(), Coverage::Covered);
        let plus1 = construct_family(Family::ChainPlus(1)).unwrap();
        assert!(is_matching_covered(&plus1, CAP).unwrap());
        let p4 = Graph::path(4).unwrap();
        assert_eq!(matching_coverage(&p4, CAP).unwrap(), Coverage::UncoveredEdge(1));
        let blocks = construct_family(Family::K33Blocks(2)).unwrap();
        assert_eq!(matching_coverage(&blocks, CAP).unwrap(), Coverage::Disconnected);
    }

    #[test]
    fn two_coloring_detects_odd_cycles() {
        assert!(Graph::cycle(4).unwrap().is_bipartite());
        assert!(!Graph::cycle(5).unwrap().is_bipartite());
        assert!(Graph::grid(2, 3).unwrap().is_bipartite());
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(4, [(0, 1), (2, 3)]).unwrap().with_bipartition(vec![0, 1], vec![2, 3]).is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let g = construct_family(Family::Knn(2)).unwrap();
        let text = g.to_string();
        assert_eq!(
            text,
            "vertices 4\nbipartition 0 1 | 2 3\nedge 0 2\nedge 0 3\nedge 1 2\nedge 1 3\n"
        );
        let back: Graph = text.parse().unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.bipartition(), g.bipartition());
    }

    #[test]
    fn text_format_errors_carry_line_numbers() {
        let err = "vertices 3\nedge 0 1\nedge 0 x\n".parse::<Graph>().unwrap_err();
        assert_eq!(err, Error::parse(3, "expected a vertex number, got 'x'"));
        let err = "vertices 3\nedge 0 5\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = "edge 0 1\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }
}
