//! Mutable wiring used to build and transform diagrams.
//!
//! A wiring is a set of nodes with numbered ports (crossings, graph vertices
//! and degree-2 joints) plus connections between ports. [`Wiring::build`]
//! contracts joints, orients every strand consistently, rotates crossing
//! slots so the under-strand enters at slot 0, and emits a [`Diagram`].

use super::{Arc, ArcEnd, Diagram, End, Format, Node, NodeKind, Port};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum WKind {
    Crossing,
    Vertex,
    Joint,
    Dropped,
}

#[derive(Debug, Clone)]
pub(crate) struct WNode {
    pub name: String,
    pub kind: WKind,
    pub ports: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct WPort {
    pub node: usize,
    pub port: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct Conn {
    pub tail: WPort,
    pub head: WPort,
    pub pin: bool,
    pub edge: Option<u8>,
    pub comp: Option<u32>,
}

#[derive(Debug, Clone)]
pub(crate) struct Wiring {
    pub format: Format,
    pub nodes: Vec<WNode>,
    pub conns: Vec<Option<Conn>>,
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Labels {
    pub edge: Option<u8>,
    pub comp: Option<u32>,
}

impl Wiring {
    pub fn new(format: Format) -> Self {
        Self { format, nodes: Vec::new(), conns: Vec::new() }
    }

    /// Wiring of an existing diagram. Node `i` and connection `i` correspond
    /// to node `i` and arc `i` of `d`; each free loop gets a private joint.
    pub fn from_diagram(d: &Diagram) -> Self {
        let mut w = Self::new(d.format);
        for n in &d.nodes {
            let kind = match n.kind {
                NodeKind::Crossing => WKind::Crossing,
                NodeKind::Vertex => WKind::Vertex,
            };
            w.nodes.push(WNode { name: n.name.clone(), kind, ports: n.slots.len() });
        }
        for a in &d.arcs {
            let labels = Labels { edge: a.edge, comp: a.component };
            let (tail, head) = match (a.tail, a.head) {
                (Some(t), Some(h)) => (WPort { node: t.node, port: t.slot }, WPort { node: h.node, port: h.slot }),
                _ => {
                    let j = w.add_joint(&format!("{}.loop", a.name));
                    (WPort { node: j, port: 1 }, WPort { node: j, port: 0 })
                }
            };
            w.conns.push(Some(Conn { tail, head, pin: false, edge: labels.edge, comp: labels.comp }));
        }
        w
    }

    pub fn add_node(&mut self, name: &str, kind: WKind, ports: usize) -> usize {
        self.nodes.push(WNode { name: name.to_string(), kind, ports });
        self.nodes.len() - 1
    }

    pub fn add_crossing(&mut self, name: &str) -> usize {
        self.add_node(name, WKind::Crossing, 4)
    }

    pub fn add_joint(&mut self, name: &str) -> usize {
        self.add_node(name, WKind::Joint, 2)
    }

    pub fn connect(&mut self, tail: WPort, head: WPort, pin: bool, labels: Labels) -> usize {
        self.conns.push(Some(Conn { tail, head, pin, edge: labels.edge, comp: labels.comp }));
        self.conns.len() - 1
    }

    /// A free loop through a fresh joint.
    #[cfg(test)]
    pub fn add_circle(&mut self, name: &str, labels: Labels) {
        let j = self.add_joint(name);
        self.connect(WPort { node: j, port: 1 }, WPort { node: j, port: 0 }, false, labels);
    }

    pub fn take_conn(&mut self, c: usize) -> Conn {
        self.conns[c].take().expect("connection already removed")
    }

    /// Moves whatever is attached at `from` to `to`.
    pub fn repoint(&mut self, from: WPort, to: WPort) {
        for c in self.conns.iter_mut().flatten() {
            if c.head == from {
                c.head = to;
            } else if c.tail == from {
                c.tail = to;
            }
        }
    }

    /// Replaces node `x` by joints, one for each listed port pair.
    pub fn split_into_joints(&mut self, x: usize, pairs: &[(usize, usize)]) {
        let name = self.nodes[x].name.clone();
        for (k, &(p, q)) in pairs.iter().enumerate() {
            let j = self.add_joint(&format!("{name}.j{k}"));
            self.repoint(WPort { node: x, port: p }, WPort { node: j, port: 0 });
            self.repoint(WPort { node: x, port: q }, WPort { node: j, port: 1 });
        }
        self.nodes[x].kind = WKind::Dropped;
    }

    /// Renumbers ports of node `x`: new port `k` is old port `perm[k]`.
    pub fn permute_ports(&mut self, x: usize, perm: &[usize]) {
        let mut inverse = vec![0; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        for c in self.conns.iter_mut().flatten() {
            for p in [&mut c.head, &mut c.tail] {
                if p.node == x {
                    p.port = inverse[p.port];
                }
            }
        }
    }

    fn port_table(&self) -> Result<Vec<Vec<Option<(usize, bool)>>>, Error> {
        let mut table: Vec<Vec<Option<(usize, bool)>>> = self.nodes.iter().map(|n| vec![None; n.ports]).collect();
        for (ci, c) in self.conns.iter().enumerate() {
            let Some(c) = c else { continue };
            for (p, is_head) in [(c.head, true), (c.tail, false)] {
                let node = &self.nodes[p.node];
                if node.kind == WKind::Dropped || p.port >= node.ports {
                    return Err(Error::Invalid(format!("connection into removed node {}", node.name)));
                }
                let cell = &mut table[p.node][p.port];
                if cell.is_some() {
                    return Err(Error::Invalid(format!("port {} of {} used twice", p.port, node.name)));
                }
                *cell = Some((ci, is_head));
            }
        }
        for (ni, n) in self.nodes.iter().enumerate() {
            if n.kind == WKind::Dropped {
                continue;
            }
            if n.kind == WKind::Joint && table[ni].iter().all(Option::is_none) {
                continue;
            }
            if let Some(p) = table[ni].iter().position(Option::is_none) {
                return Err(Error::Invalid(format!("port {p} of {} is free", n.name)));
            }
        }
        Ok(table)
    }

    pub fn build(&self) -> Result<Diagram, Error> {
        let table = self.port_table()?;
        let is_joint = |p: WPort| self.nodes[p.node].kind == WKind::Joint;
        let conn = |i: usize| self.conns[i].as_ref().unwrap();

        // 1. contract chains through joints into super-arcs
        struct Super {
            a: Option<WPort>,
            b: Option<WPort>,
            a_to_b: bool,
            pinned: bool,
            edge: Option<u8>,
            comp: Option<u32>,
        }
        let mut supers: Vec<Super> = Vec::new();
        let mut done = vec![false; self.conns.len()];
        for start in 0..self.conns.len() {
            if self.conns[start].is_none() || done[start] {
                continue;
            }
            done[start] = true;
            // members with forward flag: traversal goes tail -> head
            let mut members = vec![(start, true)];
            let mut cycle = false;
            let mut exit = conn(start).head;
            while is_joint(exit) {
                let other = WPort { node: exit.node, port: 1 - exit.port };
                let (next, next_is_head) = table[other.node][other.port].unwrap();
                if next == start {
                    cycle = true;
                    break;
                }
                done[next] = true;
                let fwd = !next_is_head;
                members.push((next, fwd));
                exit = if fwd { conn(next).head } else { conn(next).tail };
            }
            let mut entry = conn(start).tail;
            if !cycle {
                while is_joint(entry) {
                    let other = WPort { node: entry.node, port: 1 - entry.port };
                    let (prev, prev_is_head) = table[other.node][other.port].unwrap();
                    done[prev] = true;
                    let fwd = prev_is_head;
                    members.insert(0, (prev, fwd));
                    entry = if fwd { conn(prev).tail } else { conn(prev).head };
                }
            }
            let mut a_to_b = true;
            let mut pinned = false;
            for &(ci, fwd) in &members {
                if conn(ci).pin {
                    if pinned && a_to_b != fwd {
                        return Err(Error::Invalid("conflicting pinned directions along one arc".into()));
                    }
                    pinned = true;
                    a_to_b = fwd;
                }
            }
            let common = |f: &dyn Fn(&Conn) -> Option<u32>| {
                let first = f(conn(members[0].0));
                members.iter().all(|&(ci, _)| f(conn(ci)) == first).then_some(first).flatten()
            };
            let edge = common(&|c: &Conn| c.edge.map(u32::from)).map(|e| e as u8);
            let comp = common(&|c: &Conn| c.comp);
            let (a, b) = if cycle { (None, None) } else { (Some(entry), Some(exit)) };
            supers.push(Super { a, b, a_to_b, pinned, edge, comp });
        }

        // 2. orient strands through crossings
        let mut at_port: Vec<Vec<Option<(usize, bool)>>> = self.nodes.iter().map(|n| vec![None; n.ports]).collect();
        for (si, s) in supers.iter().enumerate() {
            if let Some(a) = s.a {
                at_port[a.node][a.port] = Some((si, false));
            }
            if let Some(b) = s.b {
                at_port[b.node][b.port] = Some((si, true));
            }
        }
        let is_crossing = |p: WPort| self.nodes[p.node].kind == WKind::Crossing;
        let mut oriented: Vec<Option<bool>> = vec![None; supers.len()];
        for seed in 0..supers.len() {
            if oriented[seed].is_some() {
                continue;
            }
            // strand members with flag: traversal goes a -> b
            let mut strand = vec![(seed, true)];
            let mut seen = vec![seed];
            let mut closed = false;
            let mut cur = (seed, true);
            loop {
                let s = &supers[cur.0];
                let Some(exit) = (if cur.1 { s.b } else { s.a }) else { break };
                if !is_crossing(exit) {
                    break;
                }
                let (next, at_b) = at_port[exit.node][(exit.port + 2) % 4].unwrap();
                if next == seed {
                    closed = true;
                    break;
                }
                cur = (next, !at_b);
                seen.push(next);
                strand.push(cur);
            }
            if !closed {
                let mut cur = (seed, true);
                loop {
                    let s = &supers[cur.0];
                    let Some(entry) = (if cur.1 { s.a } else { s.b }) else { break };
                    if !is_crossing(entry) {
                        break;
                    }
                    let (prev, at_b) = at_port[entry.node][(entry.port + 2) % 4].unwrap();
                    cur = (prev, at_b);
                    seen.push(prev);
                    strand.insert(0, cur);
                }
            }
            let mut keep: Option<bool> = None;
            for &(si, fwd) in &strand {
                if supers[si].pinned {
                    let want = fwd == supers[si].a_to_b;
                    if keep.is_some_and(|k| k != want) {
                        return Err(Error::Invalid("conflicting pinned directions along one strand".into()));
                    }
                    keep = Some(want);
                }
            }
            let keep = keep.unwrap_or(supers[seed].a_to_b);
            for &(si, fwd) in &strand {
                oriented[si] = Some(fwd == keep);
            }
        }

        // 3. emit nodes, rotating crossings so the under-strand enters at 0
        let mut new_index = vec![usize::MAX; self.nodes.len()];
        let mut rotate = vec![0usize; self.nodes.len()];
        let mut nodes = Vec::new();
        for (ni, n) in self.nodes.iter().enumerate() {
            let kind = match n.kind {
                WKind::Crossing => NodeKind::Crossing,
                WKind::Vertex => NodeKind::Vertex,
                _ => continue,
            };
            if kind == NodeKind::Crossing {
                let (si, at_b) = at_port[ni][0].unwrap();
                let a_to_b = oriented[si].unwrap();
                // head at port 0 iff the arc runs into port 0
                let head_here = at_b == a_to_b;
                if !head_here {
                    rotate[ni] = 2;
                }
            }
            new_index[ni] = nodes.len();
            nodes.push(Node { name: n.name.clone(), kind, slots: Vec::with_capacity(n.ports) });
        }
        let map_port = |p: WPort| Port { node: new_index[p.node], slot: (p.port + 4 - rotate[p.node]) % self.nodes[p.node].ports };
        let mut arcs = Vec::with_capacity(supers.len());
        for (si, s) in supers.iter().enumerate() {
            let a_to_b = oriented[si].unwrap();
            let (tail, head) = if a_to_b { (s.a, s.b) } else { (s.b, s.a) };
            arcs.push(Arc {
                name: format!("a{}", si + 1),
                tail: tail.map(map_port),
                head: head.map(map_port),
                edge: s.edge,
                component: s.comp,
            });
        }
        for (ni, n) in self.nodes.iter().enumerate() {
            if new_index[ni] != usize::MAX {
                nodes[new_index[ni]].slots = vec![ArcEnd { arc: usize::MAX, end: End::Head }; n.ports];
            }
        }
        for (ai, a) in arcs.iter().enumerate() {
            if let Some(t) = a.tail {
                nodes[t.node].slots[t.slot] = ArcEnd { arc: ai, end: End::Tail };
            }
            if let Some(h) = a.head {
                nodes[h.node].slots[h.slot] = ArcEnd { arc: ai, end: End::Head };
            }
        }
        let mut d = Diagram { format: self.format, nodes, arcs };
        if d.is_link() {
            d.format = Format::Link;
            for a in d.arcs.iter_mut() {
                a.edge = None;
            }
        } else {
            for a in d.arcs.iter_mut() {
                a.component = None;
            }
        }
        d.propagate_labels();
        super::validate_diagram(&d).into_result()?;
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn joint_cycle_becomes_free_loop() {
        let mut w = Wiring::new(Format::Link);
        w.add_circle("c", Labels::default());
        let d = w.build().unwrap();
        assert_eq!(d.free_loop_count(), 1);
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn crossing_is_rotated_to_under_in() {
        // a curl whose under-strand is wired backwards
        let mut w = Wiring::new(Format::Link);
        let x = w.add_crossing("x");
        let p = |port| WPort { node: x, port };
        w.connect(p(0), p(3), false, Labels::default());
        w.connect(p(1), p(2), false, Labels::default());
        let d = w.build().unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.arcs().len(), 2);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn pins_fix_direction() {
        let mut w = Wiring::new(Format::Link);
        let j = w.add_joint("j");
        w.connect(WPort { node: j, port: 0 }, WPort { node: j, port: 1 }, true, Labels::default());
        let d = w.build().unwrap();
        assert_eq!(d.free_loop_count(), 1);
    }
}
