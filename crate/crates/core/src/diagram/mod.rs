//! Combinatorial knot, link and spatial-graph diagrams.
//!
//! A diagram is a set of nodes (crossings and graph vertices) whose slots are
//! listed counterclockwise, joined by directed arcs. At a crossing the
//! under-strand enters at slot 0 and leaves at slot 2; slots 1 and 3 carry
//! the over-strand. An arc with no endpoints is a closed loop.

mod iso;
pub(crate) mod moves;
mod text;
pub(crate) mod wiring;

pub use iso::is_isomorphic;
pub use moves::{
    cap_region, crossing_change, crossing_to_vertex, delete_strands, disjoint_union, double_link_diagram,
    insert_twists, r1_add, r1_remove, r2_add, r2_remove, smooth_crossing, splice_knot, Keep, R2Side, Smoothing,
    TwistRegion,
};
pub use text::{parse_diagram, parse_unchecked};

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::AbstractGraph;
use crate::union_find::UnionFind;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Crossing,
    Vertex,
}

/// Which end of an arc sits in a slot: `Head` means the arc ends here
/// (`:in`), `Tail` means it starts here (`:out`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Head,
    Tail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArcEnd {
    pub arc: usize,
    pub end: End,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Port {
    pub node: usize,
    pub slot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub name: String,
    pub kind: NodeKind,
    pub slots: Vec<ArcEnd>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub name: String,
    pub tail: Option<Port>,
    pub head: Option<Port>,
    /// θ-edge label `1..=3`.
    pub edge: Option<u8>,
    /// Link component label.
    pub component: Option<u32>,
}

impl Arc {
    pub fn is_free_loop(&self) -> bool {
        self.tail.is_none() && self.head.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Link,
    Theta,
}

impl Format {
    pub fn header(self) -> &'static str {
        match self {
            Format::Link => "link-v1",
            Format::Theta => "theta-v1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub(crate) format: Format,
    pub(crate) nodes: Vec<Node>,
    pub(crate) arcs: Vec<Arc>,
}

/// One violated invariant, tagged with the offending node when there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Issue {
    pub node: Option<String>,
    pub message: String,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Some(n) => write!(f, "{n}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

/// Result of [`validate_diagram`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub(crate) fn into_result(self) -> Result<(), Error> {
        if self.is_valid() {
            Ok(())
        } else {
            let msg = self.issues.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("; ");
            Err(Error::Invalid(msg))
        }
    }
}

impl Diagram {
    /// The diagram with no arcs and no nodes.
    pub fn empty() -> Self {
        Self { format: Format::Link, nodes: Vec::new(), arcs: Vec::new() }
    }

    /// `k` disjoint crossingless circles.
    pub fn unlink(k: usize) -> Self {
        let arcs = (0..k)
            .map(|i| Arc { name: format!("a{}", i + 1), tail: None, head: None, edge: None, component: Some(i as u32 + 1) })
            .collect();
        Self { format: Format::Link, nodes: Vec::new(), arcs }
    }

    pub fn format(&self) -> Format {
        self.format
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn node(&self, i: usize) -> &Node {
        &self.nodes[i]
    }

    pub fn arc(&self, i: usize) -> &Arc {
        &self.arcs[i]
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.name == name)
    }

    pub fn arc_index(&self, name: &str) -> Option<usize> {
        self.arcs.iter().position(|a| a.name == name)
    }

    pub fn crossings(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes.iter().enumerate().filter(|(_, n)| n.kind == NodeKind::Crossing).map(|(i, _)| i)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes.iter().enumerate().filter(|(_, n)| n.kind == NodeKind::Vertex).map(|(i, _)| i)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings().count()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().count()
    }

    pub fn free_loop_count(&self) -> usize {
        self.arcs.iter().filter(|a| a.is_free_loop()).count()
    }

    pub fn is_link(&self) -> bool {
        self.vertex_count() == 0
    }

    pub(crate) fn require_link(&self, what: &str) -> Result<(), Error> {
        if self.is_link() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("{what} needs a link diagram, found {} graph vertices", self.vertex_count())))
        }
    }

    /// Arc occupying a slot.
    pub fn arc_at(&self, port: Port) -> ArcEnd {
        self.nodes[port.node].slots[port.slot]
    }

    /// Port at which `end` of `arc` is attached.
    pub fn port_of(&self, arc: usize, end: End) -> Option<Port> {
        match end {
            End::Head => self.arcs[arc].head,
            End::Tail => self.arcs[arc].tail,
        }
    }

    /// Sign of crossing `x`: `+1` when the over-strand enters at slot 3, so
    /// that a counterclockwise quarter turn of the over direction gives the
    /// under direction.
    pub fn crossing_sign(&self, x: usize) -> i32 {
        let node = &self.nodes[x];
        debug_assert_eq!(node.kind, NodeKind::Crossing);
        if node.slots[3].end == End::Head {
            1
        } else {
            -1
        }
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings().map(|x| i64::from(self.crossing_sign(x))).sum()
    }

    /// Arc following `arc` along its strand: through the crossing at its
    /// head, or `None` at a graph vertex or for a free loop.
    pub fn next_arc(&self, arc: usize) -> Option<usize> {
        let head = self.arcs[arc].head?;
        let node = &self.nodes[head.node];
        if node.kind != NodeKind::Crossing {
            return None;
        }
        Some(node.slots[(head.slot + 2) % 4].arc)
    }

    /// Strands: maximal arc sequences running straight through crossings.
    /// Closed strands come first in arc order; open strands start and end at
    /// graph vertices.
    pub fn strands(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.arcs.len()];
        let mut out = Vec::new();
        // open strands first begin at arcs whose tail is at a vertex
        let starts: Vec<usize> = (0..self.arcs.len())
            .filter(|&a| self.arcs[a].tail.is_some_and(|p| self.nodes[p.node].kind == NodeKind::Vertex))
            .collect();
        for s in starts.into_iter().chain(0..self.arcs.len()) {
            if seen[s] {
                continue;
            }
            let mut strand = vec![s];
            seen[s] = true;
            let mut cur = s;
            while let Some(n) = self.next_arc(cur) {
                if seen[n] {
                    break;
                }
                seen[n] = true;
                strand.push(n);
                cur = n;
            }
            out.push(strand);
        }
        out
    }

    /// Components of a link diagram as arc sequences in traversal order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.strands()
    }

    pub fn component_count(&self) -> usize {
        if self.is_link() {
            self.strands().len()
        } else {
            self.underlying_graph().mu()
        }
    }

    /// Arcs carrying component label `c`.
    pub fn component_arcs(&self, c: u32) -> Vec<usize> {
        (0..self.arcs.len()).filter(|&a| self.arcs[a].component == Some(c)).collect()
    }

    pub fn component_labels(&self) -> BTreeSet<u32> {
        self.arcs.iter().filter_map(|a| a.component).collect()
    }

    /// Labels every arc of a link diagram by traversal order, `1..`.
    pub(crate) fn relabel_components(&mut self) {
        for (k, strand) in self.strands().into_iter().enumerate() {
            for a in strand {
                self.arcs[a].component = Some(k as u32 + 1);
            }
        }
    }

    /// Spreads labels along strands. A strand whose labelled arcs agree gets
    /// that label on every arc. Link components fall back to traversal
    /// numbering when labels are missing or shared between components.
    pub(crate) fn propagate_labels(&mut self) {
        let strands = self.strands();
        let link = self.is_link();
        for strand in &strands {
            let agreed = |get: &dyn Fn(&Arc) -> Option<u32>| {
                let mut seen = strand.iter().filter_map(|&a| get(&self.arcs[a]));
                let first = seen.next()?;
                seen.all(|l| l == first).then_some(first)
            };
            if link {
                let c = agreed(&|a: &Arc| a.component);
                for &a in strand {
                    self.arcs[a].component = c;
                }
            } else {
                let e = agreed(&|a: &Arc| a.edge.map(u32::from)).map(|e| e as u8);
                for &a in strand {
                    self.arcs[a].edge = e;
                }
            }
        }
        if link {
            let labels: Vec<Option<u32>> = strands.iter().map(|s| self.arcs[s[0]].component).collect();
            let distinct: BTreeSet<u32> = labels.iter().flatten().copied().collect();
            if labels.iter().any(Option::is_none) || distinct.len() != labels.len() {
                self.relabel_components();
            }
        }
    }

    /// Abstract graph of the diagram viewed as a spatial graph: vertices are
    /// the graph vertices, edges are strands between them, and each closed
    /// strand contributes one vertex with a loop. Crossings are ignored.
    pub fn underlying_graph(&self) -> AbstractGraph {
        let vids: Vec<usize> = self.vertices().collect();
        let vindex = |node: usize| vids.iter().position(|&v| v == node).unwrap();
        let mut n = vids.len();
        let mut edges = Vec::new();
        for strand in self.strands() {
            let first = &self.arcs[strand[0]];
            let last = &self.arcs[*strand.last().unwrap()];
            match (first.tail, last.head) {
                (Some(t), Some(h)) if self.nodes[t.node].kind == NodeKind::Vertex => {
                    edges.push((vindex(t.node), vindex(h.node)));
                }
                _ => {
                    edges.push((n, n));
                    n += 1;
                }
            }
        }
        AbstractGraph::new(n, edges)
    }

    /// Exponent `|E| - |V| + 1` of the underlying graph.
    pub fn cycle_exponent(&self) -> i64 {
        let g = self.underlying_graph();
        g.edge_count() as i64 - g.vertices as i64 + 1
    }

    /// Number of loops left after smoothing every crossing as in `state`
    /// (`true` = A-smoothing joining slots (0,1),(2,3); `false` = B-smoothing
    /// joining (0,3),(1,2)).
    pub(crate) fn loops_for_state(&self, crossings: &[usize], state: impl Fn(usize) -> bool) -> usize {
        let mut uf = UnionFind::new(self.arcs.len());
        for (k, &x) in crossings.iter().enumerate() {
            let s = &self.nodes[x].slots;
            if state(k) {
                uf.union(s[0].arc, s[1].arc);
                uf.union(s[2].arc, s[3].arc);
            } else {
                uf.union(s[0].arc, s[3].arc);
                uf.union(s[1].arc, s[2].arc);
            }
        }
        uf.count()
    }
}

/// Checks slot/endpoint bijection, closedness, and strand directions.
pub fn validate_diagram(d: &Diagram) -> ValidationReport {
    let mut issues = Vec::new();
    let mut issue = |node: Option<&str>, msg: String| issues.push(Issue { node: node.map(str::to_string), message: msg });

    let mut head_uses = vec![0usize; d.arcs.len()];
    let mut tail_uses = vec![0usize; d.arcs.len()];
    for (ni, node) in d.nodes.iter().enumerate() {
        match node.kind {
            NodeKind::Crossing if node.slots.len() != 4 => {
                issue(Some(&node.name), format!("crossing has {} slots, expected 4", node.slots.len()));
                continue;
            }
            NodeKind::Vertex if node.slots.is_empty() => {
                issue(Some(&node.name), "vertex has no slots".into());
                continue;
            }
            _ => {}
        }
        for (si, ae) in node.slots.iter().enumerate() {
            if ae.arc >= d.arcs.len() {
                issue(Some(&node.name), format!("slot {si} references a missing arc"));
                continue;
            }
            let arc = &d.arcs[ae.arc];
            let (uses, recorded) = match ae.end {
                End::Head => (&mut head_uses, arc.head),
                End::Tail => (&mut tail_uses, arc.tail),
            };
            uses[ae.arc] += 1;
            if recorded != Some(Port { node: ni, slot: si }) {
                issue(Some(&node.name), format!("slot {si}: arc {} does not point back to this slot", arc.name));
            }
        }
        if node.kind == NodeKind::Crossing {
            let s = &node.slots;
            if s[0].end != End::Head {
                issue(Some(&node.name), "under-strand must enter at slot 0".into());
            }
            if s[2].end != End::Tail {
                issue(Some(&node.name), "under-strand must leave at slot 2".into());
            }
            if s[1].end == s[3].end {
                issue(Some(&node.name), "over-strand must enter at one of slots 1, 3 and leave at the other".into());
            }
        }
    }
    for (ai, arc) in d.arcs.iter().enumerate() {
        if head_uses[ai] > 1 {
            issue(None, format!("arc {} is attached {} times at its head", arc.name, head_uses[ai]));
        }
        if tail_uses[ai] > 1 {
            issue(None, format!("arc {} is attached {} times at its tail", arc.name, tail_uses[ai]));
        }
        if arc.head.is_some() != arc.tail.is_some() {
            issue(None, format!("arc {} has a free end", arc.name));
        }
        for (p, uses, what) in [(arc.head, head_uses[ai], "head"), (arc.tail, tail_uses[ai], "tail")] {
            if p.is_some() && uses == 0 {
                issue(None, format!("arc {} claims a {what} slot that does not hold it", arc.name));
            }
        }
    }
    ValidationReport { issues }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::to_text(self))
    }
}
