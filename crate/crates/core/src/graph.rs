//! Simple undirected graphs with 1-based vertex labels.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result, VertexSet};

/// An immutable simple undirected graph on vertices `1..=n`.
///
/// Any order is accepted. Closed-neighbourhood bitmasks are cached when
/// `n <= 64`, and every operation that involves a [`VertexSet`] needs them.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    size: usize,
    closed: Vec<VertexSet>,
}

/// How two distinct vertices relate as twins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Twins {
    None,
    /// `N(u) = N(v)`.
    Open,
    /// `N[u] = N[v]`.
    Closed,
}

/// An induced subgraph together with the map back to the parent's labels.
#[derive(Debug, Clone)]
pub struct Induced {
    pub graph: Graph,
    /// `labels[i]` is the parent label of vertex `i + 1` of `graph`.
    pub labels: Vec<usize>,
}

impl Induced {
    pub fn parent_label(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    pub fn local_label(&self, parent: usize) -> Option<usize> {
        self.labels.iter().position(|&p| p == parent).map(|i| i + 1)
    }

    /// Map a set of local labels into the parent graph's labels.
    pub fn lift(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.parent_label(v)).collect()
    }
}

impl Graph {
    /// Build a graph from an edge list, rejecting self-loops, duplicate edges
    /// and endpoints outside `1..=n`.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut size = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u - 1].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u - 1].push(v);
            adj[v - 1].push(u);
            size += 1;
        }
        Ok(Self::from_adjacency(adj, size))
    }

    /// Like [`Graph::new`] but silently merges repeated edges.
    pub fn from_edge_set<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        list.sort_unstable();
        list.dedup();
        Graph::new(n, list)
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_adjacency(vec![Vec::new(); n], 0)
    }

    fn from_adjacency(mut adj: Vec<Vec<usize>>, size: usize) -> Graph {
        for list in &mut adj {
            list.sort_unstable();
        }
        let n = adj.len();
        let closed = if n <= 64 {
            adj.iter()
                .enumerate()
                .map(|(i, list)| {
                    let mut s: VertexSet = list.iter().copied().collect();
                    s.insert(i + 1);
                    s
                })
                .collect()
        } else {
            Vec::new()
        };
        Graph { adj, size, closed }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vertices(&self) -> core::ops::RangeInclusive<usize> {
        1..=self.order()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, list)| {
            let u = i + 1;
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// Fails unless the graph is small enough for bitmask codes.
    pub fn check_bitmask_width(&self) -> Result<()> {
        if self.order() > 64 {
            Err(Error::TooLarge {
                order: self.order(),
                limit: 64,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        self.check_bitmask_width()?;
        match s.max_vertex() {
            Some(v) if v > self.order() => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            }),
            _ => Ok(()),
        }
    }

    /// Sorted neighbour labels of `v`. Panics on an invalid label.
    #[inline]
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1].binary_search(&v).is_ok()
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v - 1].is_empty()
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighbourhood(&self, v: usize) -> Result<VertexSet> {
        self.check_bitmask_width()?;
        self.check_vertex(v)?;
        Ok(self.closed[v - 1])
    }

    pub fn open_neighbourhood(&self, v: usize) -> Result<VertexSet> {
        let mut s = self.closed_neighbourhood(v)?;
        s.remove(v);
        Ok(s)
    }

    /// Cached closed neighbourhoods, indexed by `v - 1`. Empty when `n > 64`.
    pub(crate) fn closed_sets(&self) -> &[VertexSet] {
        &self.closed
    }

    pub fn twins(&self, u: usize, v: usize) -> Result<Twins> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let (nu, nv) = (&self.adj[u - 1], &self.adj[v - 1]);
        if nu == nv {
            return Ok(Twins::Open);
        }
        // N[u] = N[v] iff u ~ v and N(u) - v = N(v) - u.
        if self.has_edge(u, v)
            && nu.len() == nv.len()
            && nu
                .iter()
                .filter(|&&w| w != v)
                .eq(nv.iter().filter(|&&w| w != u))
        {
            return Ok(Twins::Closed);
        }
        Ok(Twins::None)
    }

    /// Maximal sets of pairwise twins with at least two members. Open and
    /// closed classes are never mixed, and a vertex belongs to at most one class.
    pub fn twin_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for u in 1..=n {
            if seen[u - 1] {
                continue;
            }
            let mut class = vec![u];
            for v in u + 1..=n {
                if !seen[v - 1] && self.twins(u, v).is_ok_and(|t| t != Twins::None) {
                    class.push(v);
                }
            }
            if class.len() > 1 {
                for &v in &class {
                    seen[v - 1] = true;
                }
                classes.push(class);
            }
        }
        classes
    }

    /// Subgraph induced by the given labels, relabelled `1..` in ascending parent order.
    pub fn induced<I>(&self, keep: I) -> Result<Induced>
    where
        I: IntoIterator<Item = usize>,
    {
        let n = self.order();
        let mut kept = vec![false; n];
        for v in keep {
            self.check_vertex(v)?;
            kept[v - 1] = true;
        }
        let labels: Vec<usize> = (1..=n).filter(|&v| kept[v - 1]).collect();
        let mut local = vec![0usize; n];
        for (i, &v) in labels.iter().enumerate() {
            local[v - 1] = i + 1;
        }
        let mut adj = vec![Vec::new(); labels.len()];
        let mut size = 0;
        for (i, &v) in labels.iter().enumerate() {
            for &w in &self.adj[v - 1] {
                if kept[w - 1] {
                    adj[i].push(local[w - 1]);
                    if w > v {
                        size += 1;
                    }
                }
            }
        }
        Ok(Induced {
            graph: Graph::from_adjacency(adj, size),
            labels,
        })
    }

    /// `G - W`, relabelled compactly; the label map is returned alongside.
    pub fn delete_vertices<I>(&self, remove: I) -> Result<Induced>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut gone = vec![false; self.order()];
        for v in remove {
            self.check_vertex(v)?;
            gone[v - 1] = true;
        }
        self.induced(self.vertices().filter(|&v| !gone[v - 1]))
    }

    /// Connected components as ascending label lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 1..=n {
            if comp[s - 1] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s - 1] = id;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u - 1] {
                    if comp[w - 1] == usize::MAX {
                        comp[w - 1] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for s in 1..=n {
            if side[s - 1] != u8::MAX {
                continue;
            }
            side[s - 1] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u - 1] {
                    if side[w - 1] == u8::MAX {
                        side[w - 1] = side[u - 1] ^ 1;
                        queue.push_back(w);
                    } else if side[w - 1] == side[u - 1] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff no two cycles share an edge.
    ///
    /// Every non-tree edge of a DFS forest closes one fundamental cycle made
    /// of tree edges. The graph is a cactus exactly when no tree edge lies on
    /// two of those cycles.
    pub fn is_cactus(&self) -> bool {
        let n = self.order();
        let mut parent = vec![0usize; n];
        let mut depth = vec![usize::MAX; n];
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for root in 1..=n {
            if depth[root - 1] != usize::MAX {
                continue;
            }
            depth[root - 1] = 0;
            stack.push((root, 0));
            while let Some((u, next)) = stack.pop() {
                if let Some(&w) = self.adj[u - 1].get(next) {
                    stack.push((u, next + 1));
                    if depth[w - 1] == usize::MAX {
                        depth[w - 1] = depth[u - 1] + 1;
                        parent[w - 1] = u;
                        stack.push((w, 0));
                    }
                }
            }
        }
        // covered[c] counts fundamental cycles through tree edge (parent[c], c).
        let mut covered = vec![0u8; n];
        for u in 1..=n {
            for &a in &self.adj[u - 1] {
                if depth[a - 1] + 1 >= depth[u - 1] {
                    continue;
                }
                let mut c = u;
                while c != a {
                    covered[c - 1] += 1;
                    if covered[c - 1] > 1 {
                        return false;
                    }
                    c = parent[c - 1];
                }
            }
        }
        true
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, star};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn closed_neighbourhoods() {
        let p3 = path(3).unwrap();
        assert_eq!(p3.closed_neighbourhood(2).unwrap(), set(&[1, 2, 3]));
        assert_eq!(p3.closed_neighbourhood(1).unwrap(), set(&[1, 2]));
        let k13 = star(3).unwrap();
        assert_eq!(k13.closed_neighbourhood(1).unwrap(), set(&[1, 2, 3, 4]));
        assert!(matches!(
            p3.closed_neighbourhood(4),
            Err(Error::VertexOutOfRange {
                vertex: 4,
                order: 3
            })
        ));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge(1, 2))
        );
        assert!(Graph::new(3, [(1, 4)]).is_err());
        assert_eq!(Graph::from_edge_set(3, [(1, 2), (2, 1)]).unwrap().size(), 1);
    }

    #[test]
    fn large_graphs_are_accepted_without_bitmasks() {
        let g = path(70).unwrap();
        assert!(g.is_connected());
        assert!(g.is_cactus());
        assert!(matches!(
            g.closed_neighbourhood(1),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn deletion() {
        let p10 = path(10).unwrap();
        let d = p10.delete_vertices([10]).unwrap();
        assert_eq!(d.graph, path(9).unwrap());
        let split = p10.delete_vertices([5]).unwrap();
        let sizes: Vec<usize> = split
            .graph
            .connected_components()
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(sizes, vec![4, 5]);
        assert_eq!(split.parent_label(5), 6);
        assert_eq!(split.local_label(6), Some(5));
        assert_eq!(split.local_label(5), None);
        let same = p10.delete_vertices([]).unwrap();
        assert_eq!(same.graph, p10);
        assert_eq!(same.labels, (1..=10).collect::<Vec<_>>());
    }

    #[test]
    fn twin_kinds() {
        let k13 = star(3).unwrap();
        assert_eq!(k13.twins(2, 3).unwrap(), Twins::Open);
        let k2 = path(2).unwrap();
        assert_eq!(k2.twins(1, 2).unwrap(), Twins::Closed);
        let p4 = path(4).unwrap();
        assert_eq!(p4.twins(1, 3).unwrap(), Twins::None);
        assert_eq!(p4.twins(2, 2), Err(Error::SameVertex(2)));
        assert_eq!(k13.twin_classes(), vec![vec![2, 3, 4]]);
    }

    #[test]
    fn components() {
        assert_eq!(path(5).unwrap().connected_components().len(), 1);
        let g = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![1, 2], vec![3]]);
        assert_eq!(Graph::empty(3).connected_components().len(), 3);
        assert!(!g.is_connected());
    }

    #[test]
    fn cactus_and_bipartite() {
        let c4 = cycle(4).unwrap();
        assert!(c4.is_cactus() && c4.is_bipartite());
        let k4 = Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(!k4.is_cactus());
        assert!(!k4.is_bipartite());
        let bowtie = Graph::new(
            7,
            [
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 1),
                (1, 5),
                (5, 6),
                (6, 7),
                (7, 1),
            ],
        )
        .unwrap();
        assert!(bowtie.is_cactus());
        assert!(!cycle(5).unwrap().is_bipartite());
    }
}
