//! Finite simple undirected graphs on vertices `0..d`, with the standard
//! families, connectivity, small-scale isomorphism machinery, and graph6 I/O.
//!
//! Adjacency is one [`SmallSet`] per vertex. Everything here is a pure
//! function on immutable values. Vertices are 0-based internally and in JSON;
//! human-readable output writes `v1..vd`.

use serde::{Deserialize, Serialize};

use crate::bits::{SmallSet, CAPACITY};
use crate::error::{Error, Result};

/// Isomorphism, canonical form, and automorphism search are brute force and
/// guarded to this many vertices.
pub const ISO_LIMIT: usize = 10;

/// Graph enumeration (`classify`) is guarded to this many vertices.
pub const ENUMERATION_LIMIT: usize = 7;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    d: usize,
    adj: Vec<SmallSet>,
}

/// Disjoint vertex blocks covering `0..d`, ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<SmallSet>,
}

impl VertexPartition {
    pub(crate) fn from_blocks(mut blocks: Vec<SmallSet>) -> VertexPartition {
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b.min_elem());
        VertexPartition { blocks }
    }

    pub fn blocks(&self) -> &[SmallSet] {
        &self.blocks
    }

    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `v`, if any.
    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(v))
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list, rejecting self-loops,
    /// out-of-range endpoints, and duplicate edges.
    pub fn new(d: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if d > CAPACITY {
            return Err(Error::TooLarge {
                what: "graph",
                got: d,
                limit: CAPACITY,
            });
        }
        let mut adj = vec![SmallSet::EMPTY; d];
        for &(u, v) in edges {
            if u >= d {
                return Err(Error::VertexOutOfRange { vertex: u, d });
            }
            if v >= d {
                return Err(Error::VertexOutOfRange { vertex: v, d });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { d, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.d
    }

    pub fn neighbors(&self, v: usize) -> SmallSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.d && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.d {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        self.d >= 1 && self.adj.iter().all(|a| a.len() == self.d - 1)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().count() <= 1
    }

    /// Maximal connected vertex blocks, ordered by least vertex.
    /// The 0-vertex graph has zero components.
    pub fn connected_components(&self) -> VertexPartition {
        let mut seen = SmallSet::EMPTY;
        let mut blocks = Vec::new();
        for start in 0..self.d {
            if seen.contains(start) {
                continue;
            }
            let mut block = SmallSet::singleton(start);
            let mut frontier = vec![start];
            while let Some(u) = frontier.pop() {
                for w in self.adj[u].iter() {
                    if !block.contains(w) {
                        block.insert(w);
                        frontier.push(w);
                    }
                }
            }
            seen = seen.union(block);
            blocks.push(block);
        }
        VertexPartition::from_blocks(blocks)
    }

    /// Subgraph induced by `vertices`, renumbered to `0..|S|` preserving
    /// order. Also returns the map from new index to original vertex.
    pub fn induced_subgraph(&self, vertices: SmallSet) -> Result<(Graph, Vec<usize>)> {
        if let Some(v) = vertices.iter().find(|&v| v >= self.d) {
            return Err(Error::VertexOutOfRange { vertex: v, d: self.d });
        }
        let old: Vec<usize> = vertices.to_vec();
        let mut adj = vec![SmallSet::EMPTY; old.len()];
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate() {
                if self.adj[u].contains(v) {
                    adj[i].insert(j);
                }
            }
        }
        Ok((
            Graph {
                d: old.len(),
                adj,
            },
            old,
        ))
    }

    fn check_iso_limit(&self) -> Result<()> {
        if self.d > ISO_LIMIT {
            Err(Error::TooLarge {
                what: "isomorphism search",
                got: self.d,
                limit: ISO_LIMIT,
            })
        } else {
            Ok(())
        }
    }

    /// Searches for a vertex bijection onto `other` preserving adjacency in
    /// both directions. Guarded to [`ISO_LIMIT`] vertices.
    pub fn is_isomorphic(&self, other: &Graph) -> Result<Option<Vec<usize>>> {
        self.check_iso_limit()?;
        other.check_iso_limit()?;
        if self.d != other.d {
            return Ok(None);
        }
        let mut deg_self: Vec<usize> = (0..self.d).map(|v| self.degree(v)).collect();
        let mut deg_other: Vec<usize> = (0..self.d).map(|v| other.degree(v)).collect();
        deg_self.sort_unstable();
        deg_other.sort_unstable();
        if deg_self != deg_other {
            return Ok(None);
        }
        let mut map = vec![usize::MAX; self.d];
        let mut used = SmallSet::EMPTY;
        if extend_embedding(self, other, &mut map, &mut used, 0, false, &mut Vec::new()) {
            Ok(Some(map))
        } else {
            Ok(None)
        }
    }

    /// All automorphisms, as vertex maps. Guarded to [`ISO_LIMIT`] vertices.
    pub fn automorphisms(&self) -> Result<Vec<Vec<usize>>> {
        self.check_iso_limit()?;
        let mut map = vec![usize::MAX; self.d];
        let mut used = SmallSet::EMPTY;
        let mut all = Vec::new();
        extend_embedding(self, self, &mut map, &mut used, 0, true, &mut all);
        Ok(all)
    }

    /// Isomorphism-invariant byte string: the vertex count followed by the
    /// lexicographically least upper-triangle adjacency bit string over all
    /// vertex permutations (column-major bit order, as in graph6).
    pub fn canonical_form(&self) -> Result<Vec<u8>> {
        self.check_iso_limit()?;
        let bits = canonical_bits(self);
        let nbits = self.d * (self.d - 1) / 2;
        let mut out = vec![self.d as u8];
        let mut i = 0;
        while i < nbits {
            let byte = ((bits << i) >> 56) as u8;
            out.push(byte);
            i += 8;
        }
        Ok(out)
    }

    /// The canonically relabeled graph itself (same form as
    /// [`Graph::canonical_form`], but as a graph).
    pub fn canonical_graph(&self) -> Result<Graph> {
        self.check_iso_limit()?;
        let bits = canonical_bits(self);
        let mut edges = Vec::new();
        let mut t = 0;
        for j in 1..self.d {
            for i in 0..j {
                if (bits >> (63 - t)) & 1 == 1 {
                    edges.push((i, j));
                }
                t += 1;
            }
        }
        Graph::new(self.d, &edges)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(d={}, edges={:?})", self.d, self.edges())
    }
}

/// Backtracking embedding search; with `collect_all` it gathers every
/// complete map (used for automorphism groups), otherwise it stops at the
/// first and leaves it in `map`.
fn extend_embedding(
    g: &Graph,
    h: &Graph,
    map: &mut [usize],
    used: &mut SmallSet,
    v: usize,
    collect_all: bool,
    all: &mut Vec<Vec<usize>>,
) -> bool {
    if v == g.vertex_count() {
        if collect_all {
            all.push(map.to_vec());
        }
        return true;
    }
    for w in 0..h.vertex_count() {
        if used.contains(w) || g.degree(v) != h.degree(w) {
            continue;
        }
        let ok = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !ok {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if extend_embedding(g, h, map, used, v + 1, collect_all, all) && !collect_all {
            return true;
        }
        used.remove(w);
        map[v] = usize::MAX;
    }
    false
}

/// Minimal upper-triangle bit string over all permutations, packed MSB-first
/// into a `u64` (at most 45 bits for d <= 10) so prefix comparison is a
/// masked integer compare.
fn canonical_bits(g: &Graph) -> u64 {
    let d = g.vertex_count();
    if d < 2 {
        return 0;
    }
    struct State<'a> {
        g: &'a Graph,
        d: usize,
        best: u64,
        perm: Vec<usize>,
        used: SmallSet,
    }
    fn descend(st: &mut State, depth: usize, val: u64, bits_filled: usize) {
        if depth == st.d {
            if val < st.best {
                st.best = val;
            }
            return;
        }
        let col = depth; // column `depth` contributes `depth` bits
        for v in 0..st.d {
            if st.used.contains(v) {
                continue;
            }
            let mut col_val = val;
            for (i, t) in (bits_filled..bits_filled + col).enumerate() {
                if st.g.has_edge(st.perm[i], v) {
                    col_val |= 1u64 << (63 - t);
                }
            }
            let filled = bits_filled + col;
            let mask = if filled == 0 { 0 } else { !0u64 << (64 - filled) };
            if col_val & mask > st.best & mask {
                continue;
            }
            st.perm.push(v);
            st.used.insert(v);
            descend(st, depth + 1, col_val, filled);
            st.used.remove(v);
            st.perm.pop();
        }
    }
    let mut st = State {
        g,
        d,
        best: u64::MAX,
        perm: Vec::with_capacity(d),
        used: SmallSet::EMPTY,
    };
    descend(&mut st, 0, 0, 0);
    st.best
}

// ---------------------------------------------------------------------------
// Standard families
// ---------------------------------------------------------------------------

/// Path on `d >= 1` vertices `0 - 1 - .. - (d-1)`.
pub fn path(d: usize) -> Result<Graph> {
    if d < 1 {
        return Err(Error::InvalidParameter("path needs d >= 1".into()));
    }
    let edges: Vec<_> = (0..d.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(d, &edges)
}

/// Cycle on `d >= 3` vertices.
pub fn cycle(d: usize) -> Result<Graph> {
    if d < 3 {
        return Err(Error::InvalidParameter("cycle needs d >= 3".into()));
    }
    let edges: Vec<_> = (0..d).map(|i| (i, (i + 1) % d)).collect();
    Graph::new(d, &edges)
}

/// Complete graph on `d >= 1` vertices.
pub fn complete(d: usize) -> Result<Graph> {
    if d < 1 {
        return Err(Error::InvalidParameter("complete needs d >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..d {
        for v in u + 1..d {
            edges.push((u, v));
        }
    }
    Graph::new(d, &edges)
}

/// Edgeless graph on `d >= 0` vertices.
pub fn empty(d: usize) -> Result<Graph> {
    Graph::new(d, &[])
}

/// Star on `d >= 2` vertices; vertex 0 is the center.
pub fn star(d: usize) -> Result<Graph> {
    if d < 2 {
        return Err(Error::InvalidParameter("star needs d >= 2".into()));
    }
    let edges: Vec<_> = (1..d).map(|v| (0, v)).collect();
    Graph::new(d, &edges)
}

/// Complete multipartite graph; vertices are grouped into consecutive parts
/// and adjacent exactly when they lie in different parts.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.iter().any(|&p| p == 0) {
        return Err(Error::InvalidParameter(
            "complete_multipartite needs nonempty parts".into(),
        ));
    }
    let d: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(d);
    for (k, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(k).take(p));
    }
    let mut edges = Vec::new();
    for u in 0..d {
        for v in u + 1..d {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(d, &edges)
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`,
/// spokes `i - (i+5)`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::new(10, &edges).expect("petersen edge list is valid")
}

/// Hamming-style graph on tuples choosing one index per part: vertices are
/// mixed-radix tuples `(j_1, .., j_m)` with `j_k < parts[k]` (last coordinate
/// fastest), adjacent exactly when they differ in a single coordinate.
pub fn hamming(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.iter().any(|&p| p == 0) {
        return Err(Error::InvalidParameter(
            "hamming needs part sizes >= 1".into(),
        ));
    }
    let d: usize = parts.iter().product();
    if d > CAPACITY {
        return Err(Error::TooLarge {
            what: "hamming graph",
            got: d,
            limit: CAPACITY,
        });
    }
    let tuples = hamming_tuples(parts);
    let mut edges = Vec::new();
    for u in 0..d {
        for v in u + 1..d {
            let diff = tuples[u]
                .iter()
                .zip(&tuples[v])
                .filter(|(a, b)| a != b)
                .count();
            if diff == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(d, &edges)
}

/// Tuple list for [`hamming`], in vertex order.
pub fn hamming_tuples(parts: &[usize]) -> Vec<Vec<usize>> {
    let d: usize = parts.iter().product();
    let mut tuples = Vec::with_capacity(d);
    for mut ix in 0..d {
        let mut t = vec![0; parts.len()];
        for k in (0..parts.len()).rev() {
            t[k] = ix % parts[k];
            ix /= parts[k];
        }
        tuples.push(t);
    }
    tuples
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

/// Encodes into the standard graph6 short form (`d <= 62`).
pub fn graph6_encode(g: &Graph) -> Result<String> {
    let d = g.vertex_count();
    if d > 62 {
        return Err(Error::TooLarge {
            what: "graph6 short form",
            got: d,
            limit: 62,
        });
    }
    let mut out = vec![63 + d as u8];
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..d {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes a graph6 short-form string. Errors carry the byte offset of the
/// first offending byte.
pub fn graph6_decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            offset: 0,
            reason: "empty input".into(),
        });
    }
    let first = bytes[0];
    if first == 126 {
        return Err(Error::Graph6 {
            offset: 0,
            reason: "multi-byte vertex counts (d > 62) are not supported".into(),
        });
    }
    if !(63..=125).contains(&first) {
        return Err(Error::Graph6 {
            offset: 0,
            reason: format!("invalid size byte {first}"),
        });
    }
    let d = (first - 63) as usize;
    let nbits = d * (d - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(Error::Graph6 {
            offset: bytes.len().min(1 + nbytes),
            reason: format!(
                "expected {} body bytes for d={}, found {}",
                nbytes,
                d,
                bytes.len() - 1
            ),
        });
    }
    let mut bitpos = 0;
    let mut edges = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(nbits);
    for j in 1..d {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    for (k, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6 {
                offset: 1 + k,
                reason: format!("invalid body byte {b}"),
            });
        }
        let chunk = b - 63;
        for t in 0..6 {
            let bit = (chunk >> (5 - t)) & 1;
            if bitpos < nbits {
                if bit == 1 {
                    edges.push(pairs[bitpos]);
                }
            } else if bit == 1 {
                return Err(Error::Graph6 {
                    offset: 1 + k,
                    reason: "nonzero padding bits".into(),
                });
            }
            bitpos += 1;
        }
    }
    Graph::new(d, &edges)
}

// ---------------------------------------------------------------------------
// JSON form
// ---------------------------------------------------------------------------

/// JSON shape `{"d": int, "edges": [[u, v], ..]}` with 0-based vertices.
#[derive(Serialize, Deserialize)]
pub struct GraphJson {
    pub d: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> GraphJson {
        GraphJson {
            d: g.vertex_count(),
            edges: g.edges(),
        }
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let gj: GraphJson = serde_json::from_str(text)?;
        Graph::new(gj.d, &gj.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_graph_validates() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(Graph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, d: 2 })
        ));
        assert!(matches!(
            Graph::new(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert_eq!(Graph::new(3, &[]).unwrap().edge_count(), 0);
    }

    #[test]
    fn families_have_expected_shapes() {
        assert_eq!(complete(3).unwrap().edge_count(), 3);
        let s = star(4).unwrap();
        assert_eq!(s.degree(0), 3);
        assert!((1..4).all(|v| s.degree(v) == 1));
        let c5 = cycle(5).unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2));
        let h22 = hamming(&[2, 2]).unwrap();
        assert_eq!(h22.vertex_count(), 4);
        assert!((0..4).all(|v| h22.degree(v) == 2));
        let p = petersen();
        assert_eq!(p.vertex_count(), 10);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(p.edge_count(), 15);
        let k23 = complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert!(cycle(2).is_err());
        assert!(star(1).is_err());
        assert!(hamming(&[2, 0]).is_err());
    }

    #[test]
    fn components_are_deterministic_partitions() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.connected_components().count(), 1);
        assert_eq!(empty(3).unwrap().connected_components().count(), 3);
        assert_eq!(empty(0).unwrap().connected_components().count(), 0);
        let two = empty(2).unwrap();
        let p = two.connected_components();
        assert_eq!(p.count(), 2);
        assert_eq!(p.blocks()[0].to_vec(), vec![0]);
        assert_eq!(p.blocks()[1].to_vec(), vec![1]);
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = complete(4).unwrap();
        let (g, map) = k4
            .induced_subgraph(SmallSet::from_iter([0, 1, 2]))
            .unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(map, vec![0, 1, 2]);
        let c5 = cycle(5).unwrap();
        let (g, _) = c5
            .induced_subgraph(SmallSet::from_iter([0, 1, 2]))
            .unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(c5.induced_subgraph(SmallSet::singleton(9)).is_err());
        // the outer ring of the Petersen graph is a 5-cycle
        let p = petersen();
        let (ring, _) = p
            .induced_subgraph(SmallSet::from_iter([0, 1, 2, 3, 4]))
            .unwrap();
        assert!(ring.is_isomorphic(&cycle(5).unwrap()).unwrap().is_some());
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = cycle(4).unwrap();
        let h = hamming(&[2, 2]).unwrap();
        let bij = c4.is_isomorphic(&h).unwrap().expect("C4 ~ hamming(2,2)");
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(c4.has_edge(u, v), h.has_edge(bij[u], bij[v]));
            }
        }
        let k3 = complete(3).unwrap();
        let p3 = path(3).unwrap();
        assert!(k3.is_isomorphic(&p3).unwrap().is_none());
        assert!(k3.is_isomorphic(&k3).unwrap().is_some());
        let big = empty(11).unwrap();
        assert!(big.is_isomorphic(&big).is_err());
    }

    #[test]
    fn canonical_form_examples() {
        let c4 = cycle(4).unwrap();
        let h = hamming(&[2, 2]).unwrap();
        assert_eq!(c4.canonical_form().unwrap(), h.canonical_form().unwrap());
        assert_ne!(
            complete(3).unwrap().canonical_form().unwrap(),
            path(3).unwrap().canonical_form().unwrap()
        );
        assert_eq!(empty(1).unwrap().canonical_form().unwrap(), vec![1u8]);
        let cg = c4.canonical_graph().unwrap();
        assert!(cg.is_isomorphic(&c4).unwrap().is_some());
    }

    #[test]
    fn petersen_automorphisms() {
        assert_eq!(petersen().automorphisms().unwrap().len(), 120);
    }

    #[test]
    fn graph6_known_values() {
        assert_eq!(graph6_encode(&complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(graph6_encode(&empty(2).unwrap()).unwrap(), "A?");
        let g = graph6_decode("Bw").unwrap();
        assert!(g.is_isomorphic(&complete(3).unwrap()).unwrap().is_some());
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(graph6_decode("A?").unwrap().edge_count(), 0);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        match graph6_decode("") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        match graph6_decode("B") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        match graph6_decode("B\x1f") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(graph6_decode("~??").is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = petersen();
        let back = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(back.edges(), g.edges());
    }
}
