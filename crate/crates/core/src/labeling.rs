//! Admissible labelings: each vertex gets a distinct s-element subset of
//! `{1, .., n}`, the labels jointly cover the ground set, and two vertices
//! are adjacent exactly when their labels share s-1 elements.
//!
//! Ground elements are 1-based in JSON and display output; internally they
//! are bit positions `0..n`.

use serde::{Deserialize, Serialize};

use crate::bits::{SmallSet, CAPACITY};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    n: usize,
    s: usize,
    labels: Vec<SmallSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ViolationKind {
    /// A label does not have exactly `s` elements.
    Size,
    /// Two vertices carry the same label.
    Injective,
    /// The labels do not cover `{1, .., n}`.
    Union,
    /// An adjacent pair meets in other than `s - 1` elements.
    Edge,
    /// A non-adjacent pair meets in exactly `s - 1` elements.
    NonEdge,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub vertices: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl Labeling {
    /// Wraps raw label data. Only the ground-set range is enforced here;
    /// everything else (sizes, injectivity, the covering and adjacency
    /// conditions) is the business of [`verify_labeling`], which reports
    /// violations instead of refusing to construct.
    pub fn new(n: usize, s: usize, labels: Vec<SmallSet>) -> Result<Labeling> {
        if n > CAPACITY {
            return Err(Error::TooLarge {
                what: "ground set",
                got: n,
                limit: CAPACITY,
            });
        }
        let ground = SmallSet::full(n);
        for l in &labels {
            if let Some(e) = l.difference(ground).min_elem() {
                return Err(Error::ElementOutOfRange { element: e + 1, n });
            }
        }
        Ok(Labeling { n, s, labels })
    }

    /// Builds from 1-based element lists.
    pub fn from_one_based(n: usize, s: usize, labels: &[Vec<u32>]) -> Result<Labeling> {
        let mut sets = Vec::with_capacity(labels.len());
        for list in labels {
            let mut set = SmallSet::EMPTY;
            for &e in list {
                if e == 0 || e as usize > n {
                    return Err(Error::ElementOutOfRange {
                        element: e as usize,
                        n,
                    });
                }
                set.insert(e as usize - 1);
            }
            sets.push(set);
        }
        Labeling::new(n, s, sets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn labels(&self) -> &[SmallSet] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> SmallSet {
        self.labels[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Writes one label: concatenated digits when the ground set fits in
    /// single digits (`n <= 9`), else comma-separated.
    pub fn format_label(&self, v: usize) -> String {
        format_set(self.labels[v], self.n)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&LabelingJson::from(self)).expect("labeling serializes")
    }

    pub fn from_json(text: &str) -> Result<Labeling> {
        let lj: LabelingJson = serde_json::from_str(text)?;
        Labeling::from_one_based(lj.n, lj.s, &lj.labels)
    }
}

impl std::fmt::Debug for Labeling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Labeling(n={}, s={}, ", self.n, self.s)?;
        let lists: Vec<Vec<u32>> = self.labels.iter().map(|l| l.to_one_based()).collect();
        write!(f, "{lists:?})")
    }
}

pub(crate) fn format_set(set: SmallSet, n: usize) -> String {
    let elems = set.to_one_based();
    if n <= 9 {
        elems.iter().map(|e| e.to_string()).collect()
    } else {
        elems
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// JSON shape `{"n": int, "s": int, "labels": [[ints], ..]}`, 1-based,
/// elements sorted ascending.
#[derive(Serialize, Deserialize)]
pub struct LabelingJson {
    pub n: usize,
    pub s: usize,
    pub labels: Vec<Vec<u32>>,
}

impl From<&Labeling> for LabelingJson {
    fn from(l: &Labeling) -> LabelingJson {
        LabelingJson {
            n: l.n,
            s: l.s,
            labels: l.labels.iter().map(|set| set.to_one_based()).collect(),
        }
    }
}

/// Checks the two defining conditions plus the structural ones (label sizes,
/// injectivity) and reports every violation. A mismatch between the label
/// count and the vertex count is an error, not a failing report.
pub fn verify_labeling(g: &Graph, l: &Labeling) -> Result<VerificationReport> {
    if l.vertex_count() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            labels: l.vertex_count(),
            d: g.vertex_count(),
        });
    }
    let mut violations = Vec::new();
    for (v, &label) in l.labels.iter().enumerate() {
        if label.len() != l.s {
            violations.push(Violation {
                kind: ViolationKind::Size,
                vertices: vec![v],
                detail: format!("label has {} elements, expected s={}", label.len(), l.s),
            });
        }
    }
    let mut union = SmallSet::EMPTY;
    for &label in &l.labels {
        union = union.union(label);
    }
    if union != SmallSet::full(l.n) {
        let missing = SmallSet::full(l.n).difference(union);
        violations.push(Violation {
            kind: ViolationKind::Union,
            vertices: vec![],
            detail: format!("ground elements {:?} uncovered", missing.to_one_based()),
        });
    }
    for v in 0..l.vertex_count() {
        for w in v + 1..l.vertex_count() {
            let meet = l.labels[v].intersection(l.labels[w]).len();
            if l.labels[v] == l.labels[w] {
                violations.push(Violation {
                    kind: ViolationKind::Injective,
                    vertices: vec![v, w],
                    detail: "equal labels".into(),
                });
                continue;
            }
            if g.has_edge(v, w) {
                if meet + 1 != l.s {
                    violations.push(Violation {
                        kind: ViolationKind::Edge,
                        vertices: vec![v, w],
                        detail: format!("adjacent pair meets in {meet} elements"),
                    });
                }
            } else if meet + 1 == l.s {
                violations.push(Violation {
                    kind: ViolationKind::NonEdge,
                    vertices: vec![v, w],
                    detail: format!("non-adjacent pair meets in {meet} elements"),
                });
            }
        }
    }
    Ok(VerificationReport {
        ok: violations.is_empty(),
        violations,
    })
}

fn require_verified(g: &Graph, l: &Labeling) -> Result<()> {
    let report = verify_labeling(g, l)?;
    if report.ok {
        Ok(())
    } else {
        let first = &report.violations[0];
        Err(Error::NotAdmissible(format!(
            "{:?} violation at vertices {:?}: {}",
            first.kind, first.vertices, first.detail
        )))
    }
}

// ---------------------------------------------------------------------------
// Constructive labelings for the standard families
// ---------------------------------------------------------------------------

/// Path on `d` vertices: vertex `i` gets `{i+1, i+2}` (1-based), so `n = d+1`,
/// `s = 2`.
pub fn path_labeling(d: usize) -> Result<Labeling> {
    if d < 1 {
        return Err(Error::InvalidParameter("path labeling needs d >= 1".into()));
    }
    let labels = (0..d).map(|i| SmallSet::from_iter([i, i + 1])).collect();
    Labeling::new(d + 1, 2, labels)
}

/// Cycle on `d >= 3` vertices: vertex `i` gets `{i+1, (i+1 mod d)+1}`, so
/// `n = d`, `s = 2`.
pub fn cycle_labeling(d: usize) -> Result<Labeling> {
    if d < 3 {
        return Err(Error::InvalidParameter(
            "cycle labeling needs d >= 3".into(),
        ));
    }
    let labels = (0..d)
        .map(|i| SmallSet::from_iter([i, (i + 1) % d]))
        .collect();
    Labeling::new(d, 2, labels)
}

/// Complete graph: singleton labels, `n = d`, `s = 1`.
pub fn complete_labeling(d: usize) -> Result<Labeling> {
    if d < 1 {
        return Err(Error::InvalidParameter(
            "complete labeling needs d >= 1".into(),
        ));
    }
    let labels = (0..d).map(SmallSet::singleton).collect();
    Labeling::new(d, 1, labels)
}

/// Edgeless graph: vertex `i` gets `{2i+1, 2i+2}` (1-based), so `n = 2d`,
/// `s = 2`.
pub fn empty_labeling(d: usize) -> Result<Labeling> {
    let labels = (0..d)
        .map(|i| SmallSet::from_iter([2 * i, 2 * i + 1]))
        .collect();
    Labeling::new(2 * d, 2, labels)
}

/// Star on `d >= 2` vertices with center first (matching [`crate::graph::star`]):
/// the center gets `{1, .., d-1}` and leaf `i` gets
/// `{1, .., d-1} - {i} + {d-1+i}`, so `n = 2(d-1)`, `s = d-1`, and the
/// intersection of all labels is empty.
pub fn star_labeling(d: usize) -> Result<Labeling> {
    if d < 2 {
        return Err(Error::InvalidParameter("star labeling needs d >= 2".into()));
    }
    let base = SmallSet::full(d - 1);
    let mut labels = vec![base];
    for i in 0..d - 1 {
        let mut l = base;
        l.remove(i);
        l.insert(d - 1 + i);
        labels.push(l);
    }
    Labeling::new(2 * (d - 1), d - 1, labels)
}

/// Graph-plus-labeling for the Hamming-style family: the tuple `(j_1, .., j_m)`
/// is labeled by one ground element per part, so `s = m` and `n` is the total
/// part size. The graph is regular of degree `sum(parts[k] - 1)`.
pub fn hamming_labeling(parts: &[usize]) -> Result<(Graph, Labeling)> {
    let g = crate::graph::hamming(parts)?;
    let n: usize = parts.iter().sum();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for &p in parts {
        offsets.push(acc);
        acc += p;
    }
    let labels = crate::graph::hamming_tuples(parts)
        .into_iter()
        .map(|t| SmallSet::from_iter(t.iter().enumerate().map(|(k, &j)| offsets[k] + j)))
        .collect();
    let l = Labeling::new(n, parts.len(), labels)?;
    Ok((g, l))
}

// ---------------------------------------------------------------------------
// Restriction, normalization, composition
// ---------------------------------------------------------------------------

/// Restricts a verified labeling to an induced subgraph, compacting the
/// ground set to the elements actually used (preserving relative order).
/// The result verifies on `g.induced_subgraph(vertices)`.
pub fn restrict_labeling(g: &Graph, l: &Labeling, vertices: SmallSet) -> Result<Labeling> {
    require_verified(g, l)?;
    if let Some(v) = vertices.iter().find(|&v| v >= g.vertex_count()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            d: g.vertex_count(),
        });
    }
    let kept: Vec<SmallSet> = vertices.iter().map(|v| l.labels[v]).collect();
    let mut used = SmallSet::EMPTY;
    for &label in &kept {
        used = used.union(label);
    }
    let order: Vec<usize> = used.to_vec();
    let compact = |set: SmallSet| {
        SmallSet::from_iter(
            order
                .iter()
                .enumerate()
                .filter(|(_, &e)| set.contains(e))
                .map(|(i, _)| i),
        )
    };
    Labeling::new(order.len(), l.s, kept.into_iter().map(compact).collect())
}

/// Rewrites a verified labeling of a connected graph (`d >= 2`) to one with
/// `s' = d - 1` and `n' = n - s + d - 1`.
///
/// For `s >= d` the `s - d + 1` largest elements common to all labels are
/// removed and the ground set compacted; for `s < d - 1` fresh elements are
/// appended to every label; `s = d - 1` is the identity.
pub fn normalize_labeling(g: &Graph, l: &Labeling) -> Result<Labeling> {
    if g.vertex_count() < 2 {
        return Err(Error::InvalidParameter("normalization needs d >= 2".into()));
    }
    if !g.is_connected() {
        return Err(Error::InvalidParameter(
            "normalization needs a connected graph".into(),
        ));
    }
    require_verified(g, l)?;
    let d = g.vertex_count();
    let s = l.s;
    if s == d - 1 {
        return Ok(l.clone());
    }
    if s < d - 1 {
        let add = (d - 1) - s;
        let fresh = SmallSet::from_iter(l.n..l.n + add);
        let labels = l.labels.iter().map(|lab| lab.union(fresh)).collect();
        return Labeling::new(l.n + add, d - 1, labels);
    }
    // s >= d: the intersection of all labels has at least s - d + 1 elements.
    let mut common = SmallSet::full(l.n);
    for &label in &l.labels {
        common = common.intersection(label);
    }
    let need = s - (d - 1);
    if common.len() < need {
        return Err(Error::Invariant(format!(
            "common intersection has {} elements, expected at least {}",
            common.len(),
            need
        )));
    }
    let mut removed = SmallSet::EMPTY;
    let mut elems = common.to_vec();
    elems.reverse();
    for e in elems.into_iter().take(need) {
        removed.insert(e);
    }
    let keep: Vec<usize> = SmallSet::full(l.n).difference(removed).to_vec();
    let compact = |set: SmallSet| {
        SmallSet::from_iter(
            keep.iter()
                .enumerate()
                .filter(|(_, &e)| set.contains(e))
                .map(|(i, _)| i),
        )
    };
    let labels = l
        .labels
        .iter()
        .map(|lab| compact(lab.difference(removed)))
        .collect();
    Labeling::new(l.n - need, d - 1, labels)
}

/// Glues labeled graphs into their disjoint union: every part is first padded
/// to the common label size `max(2, max s_i)`, then its ground set is shifted
/// past the previous parts'. Labels from distinct parts end up disjoint, so
/// the result verifies and has one component per part.
pub fn compose_components(parts: &[(Graph, Labeling)]) -> Result<(Graph, Labeling)> {
    for (g, l) in parts {
        require_verified(g, l)?;
    }
    let s_target = parts
        .iter()
        .filter(|(g, _)| g.vertex_count() > 0)
        .map(|(_, l)| l.s)
        .max()
        .unwrap_or(2)
        .max(2);
    let mut vertex_offset = 0;
    let mut ground_offset = 0;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for (g, l) in parts {
        let pad = s_target - l.s.min(s_target);
        let fresh = SmallSet::from_iter(l.n..l.n + pad);
        let part_n = if g.vertex_count() == 0 { l.n } else { l.n + pad };
        if ground_offset + part_n > CAPACITY {
            return Err(Error::TooLarge {
                what: "composed ground set",
                got: ground_offset + part_n,
                limit: CAPACITY,
            });
        }
        for (u, v) in g.edges() {
            edges.push((vertex_offset + u, vertex_offset + v));
        }
        for &label in &l.labels {
            let padded = label.union(fresh);
            labels.push(SmallSet::from_iter(
                padded.iter().map(|e| e + ground_offset),
            ));
        }
        vertex_offset += g.vertex_count();
        ground_offset += part_n;
    }
    let graph = Graph::new(vertex_offset, &edges)?;
    let labeling = Labeling::new(ground_offset, s_target, labels)?;
    Ok((graph, labeling))
}

// ---------------------------------------------------------------------------
// Union / intersection cardinality bounds
// ---------------------------------------------------------------------------

/// Connected vertex subsets of `g` with `1 <= |S| <= max_size`, each
/// enumerated exactly once (rooted at its smallest vertex).
pub fn connected_subsets(g: &Graph, max_size: usize) -> Vec<SmallSet> {
    fn grow(
        g: &Graph,
        allowed: SmallSet,
        sub: SmallSet,
        frontier: SmallSet,
        max_size: usize,
        out: &mut Vec<SmallSet>,
    ) {
        out.push(sub);
        if sub.len() == max_size {
            return;
        }
        let mut excluded = SmallSet::EMPTY;
        for u in frontier.iter() {
            let next = sub.union(SmallSet::singleton(u));
            let new_frontier = frontier
                .union(g.neighbors(u).intersection(allowed))
                .difference(next)
                .difference(excluded);
            grow(g, allowed, next, new_frontier, max_size, out);
            excluded.insert(u);
        }
    }
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        let allowed = SmallSet::from_iter(v..g.vertex_count());
        let frontier = g.neighbors(v).intersection(allowed);
        grow(
            g,
            allowed,
            SmallSet::singleton(v),
            frontier,
            max_size.max(1),
            &mut out,
        );
    }
    out
}

fn default_subset_cap(d: usize) -> usize {
    if d <= 10 {
        d
    } else {
        10
    }
}

/// True when `|union of labels over S| <= s + |S| - 1` for every connected
/// induced subgraph on up to `cap` vertices.
pub fn check_union_bound_with_cap(g: &Graph, l: &Labeling, cap: usize) -> bool {
    connected_subsets(g, cap).into_iter().all(|sub| {
        let mut union = SmallSet::EMPTY;
        for v in sub.iter() {
            union = union.union(l.labels[v]);
        }
        union.len() <= l.s + sub.len() - 1
    })
}

/// True when `|intersection of labels over S| >= s - |S| + 1` for every
/// connected induced subgraph on up to `cap` vertices.
pub fn check_intersection_bound_with_cap(g: &Graph, l: &Labeling, cap: usize) -> bool {
    connected_subsets(g, cap).into_iter().all(|sub| {
        let mut meet = SmallSet::full(l.n);
        for v in sub.iter() {
            meet = meet.intersection(l.labels[v]);
        }
        meet.len() + sub.len() >= l.s + 1
    })
}

pub fn check_union_bound(g: &Graph, l: &Labeling) -> bool {
    check_union_bound_with_cap(g, l, default_subset_cap(g.vertex_count()))
}

pub fn check_intersection_bound(g: &Graph, l: &Labeling) -> bool {
    check_intersection_bound_with_cap(g, l, default_subset_cap(g.vertex_count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    fn assert_verifies(g: &Graph, l: &Labeling) {
        let report = verify_labeling(g, l).unwrap();
        assert!(report.ok, "violations: {:?}", report.violations);
    }

    #[test]
    fn family_constructors_verify() {
        for d in 1..=8 {
            assert_verifies(&graph::path(d).unwrap(), &path_labeling(d).unwrap());
            assert_verifies(&graph::complete(d).unwrap(), &complete_labeling(d).unwrap());
            assert_verifies(&graph::empty(d).unwrap(), &empty_labeling(d).unwrap());
            if d >= 2 {
                assert_verifies(&graph::star(d).unwrap(), &star_labeling(d).unwrap());
            }
            if d >= 3 {
                assert_verifies(&graph::cycle(d).unwrap(), &cycle_labeling(d).unwrap());
            }
        }
    }

    #[test]
    fn constructor_values_match_formulas() {
        assert_eq!(
            LabelingJson::from(&path_labeling(3).unwrap()).labels,
            vec![vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        assert_eq!(
            LabelingJson::from(&cycle_labeling(5).unwrap()).labels,
            vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![1, 5]]
        );
        assert_eq!(
            LabelingJson::from(&empty_labeling(2).unwrap()).labels,
            vec![vec![1, 2], vec![3, 4]]
        );
        let star4 = star_labeling(4).unwrap();
        assert_eq!(star4.n(), 6);
        assert_eq!(star4.s(), 3);
        assert_eq!(
            LabelingJson::from(&star4).labels,
            vec![vec![1, 2, 3], vec![2, 3, 4], vec![1, 3, 5], vec![1, 2, 6]]
        );
        let star2 = star_labeling(2).unwrap();
        assert_eq!(LabelingJson::from(&star2).labels, vec![vec![1], vec![2]]);
    }

    #[test]
    fn star_labels_have_empty_intersection() {
        let l = star_labeling(5).unwrap();
        let mut meet = SmallSet::full(l.n());
        for &label in l.labels() {
            meet = meet.intersection(label);
        }
        assert!(meet.is_empty());
    }

    #[test]
    fn hamming_labelings() {
        let (g, l) = hamming_labeling(&[3]).unwrap();
        assert!(g.is_complete());
        assert_eq!(l.s(), 1);
        assert_verifies(&g, &l);

        let (g, l) = hamming_labeling(&[2, 2]).unwrap();
        assert_verifies(&g, &l);
        let lists = LabelingJson::from(&l).labels;
        assert_eq!(lists, vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]);
        assert!(g
            .is_isomorphic(&graph::cycle(4).unwrap())
            .unwrap()
            .is_some());

        let (g, l) = hamming_labeling(&[2, 3]).unwrap();
        assert!((0..6).all(|v| g.degree(v) == 3));
        assert_verifies(&g, &l);
    }

    #[test]
    fn verify_reports_specific_violations() {
        let g = graph::complete(3).unwrap();
        let l = complete_labeling(3).unwrap();
        assert_verifies(&g, &l);

        // break one label: {1},{2},{3} -> {1},{2},{2}
        let broken = Labeling::new(
            3,
            1,
            vec![
                SmallSet::singleton(0),
                SmallSet::singleton(1),
                SmallSet::singleton(1),
            ],
        )
        .unwrap();
        let report = verify_labeling(&g, &broken).unwrap();
        assert!(!report.ok);
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::Injective && v.vertices == vec![1, 2]));
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::Union));

        let mismatch = verify_labeling(&g, &complete_labeling(4).unwrap());
        assert!(matches!(mismatch, Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn restrict_examples() {
        let g = graph::path(3).unwrap();
        let l = path_labeling(3).unwrap();
        let ends = restrict_labeling(&g, &l, SmallSet::from_iter([0, 2])).unwrap();
        assert_eq!(
            LabelingJson::from(&ends).labels,
            vec![vec![1, 2], vec![3, 4]]
        );
        let (induced, _) = g.induced_subgraph(SmallSet::from_iter([0, 2])).unwrap();
        assert_verifies(&induced, &ends);

        let all = restrict_labeling(&g, &l, SmallSet::full(3)).unwrap();
        assert_eq!(all.labels(), l.labels());

        let k3 = graph::complete(3).unwrap();
        let two =
            restrict_labeling(&k3, &complete_labeling(3).unwrap(), SmallSet::from_iter([0, 1]))
                .unwrap();
        assert_eq!(LabelingJson::from(&two).labels, vec![vec![1], vec![2]]);
    }

    #[test]
    fn restrict_rejects_unverified_input() {
        let g = graph::path(3).unwrap();
        let not_admissible = Labeling::new(
            4,
            2,
            vec![
                SmallSet::from_iter([0, 1]),
                SmallSet::from_iter([0, 1]),
                SmallSet::from_iter([2, 3]),
            ],
        )
        .unwrap();
        assert!(matches!(
            restrict_labeling(&g, &not_admissible, SmallSet::full(3)),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn normalize_examples() {
        // K_3 singletons pad up to s' = 2 with one shared fresh element
        let k3 = graph::complete(3).unwrap();
        let norm = normalize_labeling(&k3, &complete_labeling(3).unwrap()).unwrap();
        assert_eq!(norm.n(), 4);
        assert_eq!(norm.s(), 2);
        assert_eq!(
            LabelingJson::from(&norm).labels,
            vec![vec![1, 4], vec![2, 4], vec![3, 4]]
        );
        assert_verifies(&k3, &norm);

        // already at target: unchanged
        let star5 = star_labeling(5).unwrap();
        let norm = normalize_labeling(&graph::star(5).unwrap(), &star5).unwrap();
        assert_eq!(norm.labels(), star5.labels());
        let l3 = path_labeling(3).unwrap();
        let norm = normalize_labeling(&graph::path(3).unwrap(), &l3).unwrap();
        assert_eq!(norm.labels(), l3.labels());

        // s >= d: drop common elements. K_2 with labels {1,2,3},{1,2,4}:
        // s=3, d=2, common = {1,2}, need to drop 2, keeping s'=1.
        let k2 = graph::complete(2).unwrap();
        let fat = Labeling::from_one_based(4, 3, &[vec![1, 2, 3], vec![1, 2, 4]]).unwrap();
        let norm = normalize_labeling(&k2, &fat).unwrap();
        assert_eq!(norm.s(), 1);
        assert_eq!(norm.n(), 2);
        assert_verifies(&k2, &norm);

        assert!(
            normalize_labeling(&graph::empty(2).unwrap(), &empty_labeling(2).unwrap()).is_err()
        );
    }

    #[test]
    fn compose_examples() {
        let k2 = graph::complete(2).unwrap();
        let l = complete_labeling(2).unwrap();
        let (g, composed) =
            compose_components(&[(k2.clone(), l.clone()), (k2.clone(), l.clone())]).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.connected_components().count(), 2);
        assert_eq!(
            LabelingJson::from(&composed).labels,
            vec![vec![1, 3], vec![2, 3], vec![4, 6], vec![5, 6]]
        );
        assert_verifies(&g, &composed);

        // single part: unchanged up to padding
        let (g1, c1) = compose_components(&[(k2.clone(), l.clone())]).unwrap();
        assert_eq!(c1.s(), 2);
        assert_verifies(&g1, &c1);

        // K_2 with a lone vertex
        let k1 = graph::complete(1).unwrap();
        let (g2, c2) = compose_components(&[
            (k2, path_labeling(2).unwrap()),
            (k1, complete_labeling(1).unwrap()),
        ])
        .unwrap();
        assert_eq!(g2.connected_components().count(), 2);
        assert_verifies(&g2, &c2);

        // cross-part labels are disjoint
        let first_part = [c2.label(0), c2.label(1)];
        for a in first_part {
            assert!(a.intersection(c2.label(2)).is_empty());
        }
    }

    #[test]
    fn cardinality_bounds_hold_on_verified_labelings() {
        let cases: Vec<(Graph, Labeling)> = vec![
            (graph::path(5).unwrap(), path_labeling(5).unwrap()),
            (graph::cycle(6).unwrap(), cycle_labeling(6).unwrap()),
            (graph::star(5).unwrap(), star_labeling(5).unwrap()),
            (graph::complete(4).unwrap(), complete_labeling(4).unwrap()),
            (graph::empty(3).unwrap(), empty_labeling(3).unwrap()),
        ];
        for (g, l) in &cases {
            assert!(check_union_bound(g, l));
            assert!(check_intersection_bound(g, l));
        }
    }

    #[test]
    fn connected_subset_enumeration_counts() {
        // C_4: 4 singletons, 4 edges, 4 paths of three vertices, 1 full set
        let c4 = graph::cycle(4).unwrap();
        let subs = connected_subsets(&c4, 4);
        assert_eq!(subs.len(), 13);
        let mut sorted = subs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), subs.len());
    }

    #[test]
    fn label_formatting() {
        let l = Labeling::from_one_based(6, 3, &[vec![1, 4, 6]]).unwrap();
        assert_eq!(l.format_label(0), "146");
        let wide = Labeling::from_one_based(12, 2, &[vec![3, 11]]).unwrap();
        assert_eq!(wide.format_label(0), "3,11");
    }

    #[test]
    fn json_round_trip() {
        let l = star_labeling(4).unwrap();
        let back = Labeling::from_json(&l.to_json()).unwrap();
        assert_eq!(back.labels(), l.labels());
        assert!(Labeling::from_one_based(3, 1, &[vec![4]]).is_err());
        assert!(Labeling::from_one_based(3, 1, &[vec![0]]).is_err());
    }
}
