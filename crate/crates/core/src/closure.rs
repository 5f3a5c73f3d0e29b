//! One-generated arrow-closed subcontexts.
//!
//! A subcontext `(H, N)` is arrow-closed when every `h ∈ H` with `h ↗ m`
//! forces `m ∈ N`, and every `n ∈ N` with `g ↙ n` forces `g ∈ H`. The
//! smallest one containing a generator is its forward-reachable set in the
//! graph on `G ⊎ M` with edges `g → m` for `g ↗ m` and `m → g` for `g ↙ m`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::context::{arrows_from_irreducibles, ArrowRelations, FormalContext};
use crate::irreducible::{join_irreducibles, meet_irreducibles};
use crate::error::Error;
use crate::partition::Partition;

/// A node of the arrow graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Object(usize),
    Attribute(usize),
}

/// Directed graph on `G ⊎ M`; objects are nodes `0..|G|`, attributes follow.
#[derive(Debug, Clone)]
pub struct ArrowGraph {
    objects: usize,
    attributes: usize,
    adjacency: Vec<Vec<usize>>,
}

impl ArrowGraph {
    pub fn new(objects: usize, attributes: usize, arrows: &ArrowRelations) -> Self {
        let mut adjacency = vec![Vec::new(); objects + attributes];
        for &(g, m) in &arrows.up {
            adjacency[g].push(objects + m);
        }
        for &(g, m) in &arrows.down {
            adjacency[objects + m].push(g);
        }
        Self { objects, attributes, adjacency }
    }

    pub fn node_count(&self) -> usize {
        self.objects + self.attributes
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    fn id(&self, node: Node) -> Option<usize> {
        match node {
            Node::Object(g) if g < self.objects => Some(g),
            Node::Attribute(m) if m < self.attributes => Some(self.objects + m),
            _ => None,
        }
    }

    /// Edges as `(from, to)` nodes.
    pub fn edges(&self) -> impl Iterator<Item = (Node, Node)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(move |(u, adj)| adj.iter().map(move |&v| (self.node(u), self.node(v))))
    }

    fn node(&self, id: usize) -> Node {
        if id < self.objects {
            Node::Object(id)
        } else {
            Node::Attribute(id - self.objects)
        }
    }

    /// Forward-reachable closure from `generator`.
    pub fn closure(&self, generator: Node) -> Result<Subcontext, Error> {
        let start = self.id(generator).ok_or(Error::UnknownGenerator)?;
        let mut seen = vec![false; self.node_count()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        let mut objects = BTreeSet::new();
        let mut attributes = BTreeSet::new();
        for (id, _) in seen.iter().enumerate().filter(|(_, &s)| s) {
            match self.node(id) {
                Node::Object(g) => objects.insert(g),
                Node::Attribute(m) => attributes.insert(m),
            };
        }
        Ok(Subcontext { generator, objects, attributes })
    }
}

/// The graph of `ctx` under `arrows`.
pub fn arrow_graph(ctx: &FormalContext, arrows: &ArrowRelations) -> ArrowGraph {
    ArrowGraph::new(ctx.objects().len(), ctx.attributes().len(), arrows)
}

/// An arrow-closed subcontext `(H, N)` and the generator it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subcontext {
    pub generator: Node,
    pub objects: BTreeSet<usize>,
    pub attributes: BTreeSet<usize>,
}

impl Subcontext {
    /// `(|H|, |N|)`.
    pub fn format(&self) -> (usize, usize) {
        (self.objects.len(), self.attributes.len())
    }

    pub fn is_1x1(&self) -> bool {
        self.format() == (1, 1)
    }

    /// Same `(H, N)`, ignoring the generator.
    pub fn same_sets(&self, other: &Self) -> bool {
        self.objects == other.objects && self.attributes == other.attributes
    }

    pub fn contains(&self, node: Node) -> bool {
        match node {
            Node::Object(g) => self.objects.contains(&g),
            Node::Attribute(m) => self.attributes.contains(&m),
        }
    }
}

/// Checks arrow-closedness of arbitrary `(H, N)` against full arrow relations.
pub fn is_arrow_closed(
    objects: &BTreeSet<usize>,
    attributes: &BTreeSet<usize>,
    arrows: &ArrowRelations,
) -> bool {
    let up_ok = arrows.up.iter().all(|(g, m)| !objects.contains(g) || attributes.contains(m));
    let down_ok = arrows.down.iter().all(|(g, m)| !attributes.contains(m) || objects.contains(g));
    up_ok && down_ok
}

/// Closure of a single object or attribute.
pub fn one_generated_closure(
    ctx: &FormalContext,
    arrows: &ArrowRelations,
    generator: Node,
) -> Result<Subcontext, Error> {
    arrow_graph(ctx, arrows).closure(generator)
}

/// Closure of the object or attribute named by a partition (objects first).
pub fn closure_of_partition(
    ctx: &FormalContext,
    arrows: &ArrowRelations,
    p: &Partition,
) -> Result<Subcontext, Error> {
    let node = ctx
        .object_index(p)
        .map(Node::Object)
        .or_else(|| ctx.attribute_index(p).map(Node::Attribute))
        .ok_or(Error::UnknownGenerator)?;
    one_generated_closure(ctx, arrows, node)
}

/// Distinct closures generated by each object, in generator order.
pub fn all_one_generated_closures_with(
    object_count: usize,
    attribute_count: usize,
    arrows: &ArrowRelations,
) -> Vec<Subcontext> {
    let graph = ArrowGraph::new(object_count, attribute_count, arrows);
    let mut seen: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    let mut out = Vec::new();
    for g in 0..object_count {
        let sub = graph.closure(Node::Object(g)).expect("object index in range");
        let key = (sub.objects.iter().copied().collect(), sub.attributes.iter().copied().collect());
        if seen.insert(key) {
            out.push(sub);
        }
    }
    out
}

/// Distinct one-generated closures of `K(L_n)`, generated from objects.
pub fn all_one_generated_closures(n: u32) -> Result<Vec<Subcontext>, Error> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let joins = join_irreducibles(n);
    let meets = meet_irreducibles(n);
    let arrows = arrows_from_irreducibles(&joins, &meets);
    Ok(all_one_generated_closures_with(joins.len(), meets.len(), &arrows))
}

/// Number of distinct one-generated `1×1` arrow-closed subcontexts of `K(L_n)`.
pub fn count_1x1_closures(n: u32) -> Result<usize, Error> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    Ok(all_one_generated_closures(n)?.iter().filter(|s| s.is_1x1()).count())
}
