//! Simple labeled graphs on at most 63 vertices, stored as bit-packed
//! adjacency rows so that a vertex subset is a single `u64`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result, MAX_VERTICES};

/// Subset of the vertices 0..n, one bit per vertex.
pub type VertexSubset = u64;

/// Default cap for exhaustive enumeration of all labeled graphs.
pub const DEFAULT_LABELED_ENUMERATION_CAP: usize = 8;

/// Iterates the set bit positions of a mask in ascending order.
pub fn bits(mask: u64) -> Bits {
    Bits(mask)
}

pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// Simple undirected graph with vertices 0..n and no self-loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    /// Edgeless graph on n vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeCapExceeded { size: n, cap: MAX_VERTICES });
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    /// Graph with exactly the listed edges; duplicates are idempotent.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Mask with one bit per vertex.
    pub fn full_mask(&self) -> VertexSubset {
        if self.n == 0 {
            0
        } else {
            u64::MAX >> (64 - self.n)
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbor set of v as a mask.
    pub fn neighbors(&self, v: usize) -> VertexSubset {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// The adjacency rows, which are also the rows of the GF(2) adjacency
    /// matrix (symmetric, zero diagonal).
    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Induced subgraph on the vertices in `s`, relabeled by increasing
    /// original index.
    pub fn induced(&self, s: VertexSubset) -> SimpleGraph {
        let s = s & self.full_mask();
        let verts: Vec<usize> = bits(s).collect();
        let adj = verts
            .iter()
            .map(|&u| {
                let mut row = 0u64;
                for (j, &v) in verts.iter().enumerate() {
                    row |= (self.adj[u] >> v & 1) << j;
                }
                row
            })
            .collect();
        SimpleGraph { n: verts.len(), adj }
    }

    fn check_pair(&self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            Err(Error::SameVertex(a))
        } else {
            Ok(())
        }
    }

    fn flip(&mut self, u: usize, v: usize) {
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    /// Copy of the graph with the edge ab added if absent, removed if
    /// present. Involutive.
    pub fn toggle_edge(&self, a: usize, b: usize) -> Result<SimpleGraph> {
        self.check_pair(a, b)?;
        let mut g = self.clone();
        g.flip(a, b);
        Ok(g)
    }

    /// Copy of the graph where the adjacency between a and every neighbor
    /// of b other than a and b has been flipped; the edge ab itself is
    /// untouched. Involutive, and not symmetric in a and b.
    pub fn neighbor_toggle(&self, a: usize, b: usize) -> Result<SimpleGraph> {
        self.check_pair(a, b)?;
        let mut g = self.clone();
        for c in bits(self.adj[b] & !(1 << a)) {
            g.flip(a, c);
        }
        Ok(g)
    }

    /// Block-diagonal union; vertices of `other` are shifted by self.n.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::SizeCapExceeded { size: n, cap: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << self.n));
        Ok(SimpleGraph { n, adj })
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSubset> {
        let mut seen: u64 = 0;
        let mut comps = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            loop {
                let mut grown = comp;
                for u in bits(comp) {
                    grown |= self.adj[u];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Parses the graph text format: first significant line is the vertex
    /// count, each later line one edge "u v". Blank lines and lines starting
    /// with '#' are ignored.
    pub fn parse_text(text: &str) -> Result<SimpleGraph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or(Error::EmptyInput)?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::BadParameter(format!("invalid vertex count {header:?}")))?;
        let mut g = SimpleGraph::new(n)?;
        for line in lines {
            let mut it = line.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => return Err(Error::BadParameter(format!("invalid edge line {line:?}"))),
            };
            let parse = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| Error::BadParameter(format!("invalid vertex {t:?}")))
            };
            g.add_edge(parse(u)?, parse(v)?)?;
        }
        Ok(g)
    }

    /// Inverse of [`SimpleGraph::parse_text`], edges sorted.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

pub fn complete_graph(n: usize) -> Result<SimpleGraph> {
    let mut g = SimpleGraph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Complete bipartite graph with sides 0..m and m..m+n.
pub fn complete_bipartite(m: usize, n: usize) -> Result<SimpleGraph> {
    let mut g = SimpleGraph::new(m + n)?;
    for u in 0..m {
        for v in 0..n {
            g.add_edge(u, m + v)?;
        }
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<SimpleGraph> {
    let mut g = SimpleGraph::new(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// Each of the n(n-1)/2 possible edges is included independently with
/// probability p, drawn from a seeded ChaCha8 stream: the same (n, p, seed)
/// always produces the same graph.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<SimpleGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = SimpleGraph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// All 2^(n(n-1)/2) labeled simple graphs on n vertices, in edge-mask order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = SimpleGraph>> {
    enumerate_labeled_graphs_capped(n, DEFAULT_LABELED_ENUMERATION_CAP)
}

pub fn enumerate_labeled_graphs_capped(
    n: usize,
    cap: usize,
) -> Result<impl Iterator<Item = SimpleGraph>> {
    if n > cap {
        return Err(Error::SizeCapExceeded { size: n, cap });
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if pairs.len() >= 64 {
        // the edge mask must fit in a u64 no matter what cap was passed
        return Err(Error::SizeCapExceeded { size: n, cap: 11 });
    }
    Ok((0..1u64 << pairs.len()).map(move |mask| {
        let mut g = SimpleGraph::new(n).expect("n within cap");
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v).expect("vertices in range");
            }
        }
        g
    }))
}
