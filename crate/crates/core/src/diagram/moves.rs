//! Diagram transformations: smoothings, crossing changes, Reidemeister I/II,
//! strand deletion, blackboard doubling, twist insertion and splicing.

use super::wiring::{Labels, WKind, WPort, Wiring};
use super::{Diagram, Format, NodeKind};
use crate::Error;

/// Planar smoothing of a crossing. `A` joins slots (0,1),(2,3); `B` joins
/// (0,3),(1,2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Smoothing {
    A,
    B,
}

impl Smoothing {
    pub(crate) fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Smoothing::A => [(0, 1), (2, 3)],
            Smoothing::B => [(0, 3), (1, 2)],
        }
    }
}

/// Which labelled strands survive [`delete_strands`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Keep {
    Edges(Vec<u8>),
    Components(Vec<u32>),
}

/// Side of arc `b` on which the over-arc `a` approaches in [`r2_add`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum R2Side {
    /// With both arcs heading the same way, `a` starts on the left of `b`.
    #[default]
    Left,
    Right,
}

/// Two arcs running side by side, both pointing away from the bottom of
/// the region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistRegion {
    pub left: usize,
    pub right: usize,
}

fn p(node: usize, port: usize) -> WPort {
    WPort { node, port }
}

fn check_crossing(d: &Diagram, x: usize) -> Result<(), Error> {
    match d.nodes.get(x) {
        Some(n) if n.kind == NodeKind::Crossing => Ok(()),
        _ => Err(Error::Invalid(format!("node {x} is not a crossing"))),
    }
}

fn check_arc(d: &Diagram, a: usize) -> Result<(), Error> {
    if a < d.arcs.len() {
        Ok(())
    } else {
        Err(Error::Invalid(format!("arc {a} does not exist")))
    }
}

/// Replaces crossing `x` by a planar smoothing.
pub fn smooth_crossing(d: &Diagram, x: usize, s: Smoothing) -> Result<Diagram, Error> {
    check_crossing(d, x)?;
    let mut w = Wiring::from_diagram(d);
    w.split_into_joints(x, &s.pairs());
    w.build()
}

/// Replaces crossing `x` by a degree-4 graph vertex.
pub fn crossing_to_vertex(d: &Diagram, x: usize) -> Result<Diagram, Error> {
    check_crossing(d, x)?;
    let mut w = Wiring::from_diagram(d);
    w.nodes[x].kind = WKind::Vertex;
    w.build()
}

/// Swaps over and under at crossing `x`.
pub fn crossing_change(d: &Diagram, x: usize) -> Result<Diagram, Error> {
    check_crossing(d, x)?;
    let mut w = Wiring::from_diagram(d);
    w.permute_ports(x, &[1, 2, 3, 0]);
    w.build()
}

/// Adds a curl of the given sign in the middle of `arc`.
pub fn r1_add(d: &Diagram, arc: usize, sign: i32) -> Result<Diagram, Error> {
    check_arc(d, arc)?;
    if sign != 1 && sign != -1 {
        return Err(Error::Invalid(format!("curl sign must be +1 or -1, got {sign}")));
    }
    let mut w = Wiring::from_diagram(d);
    let c = w.take_conn(arc);
    let labels = Labels { edge: c.edge, comp: c.comp };
    let x = w.add_crossing(&format!("r1.{}", d.nodes.len()));
    w.connect(c.tail, p(x, 0), c.pin, labels);
    if sign > 0 {
        w.connect(p(x, 2), p(x, 3), c.pin, labels);
        w.connect(p(x, 1), c.head, c.pin, labels);
    } else {
        w.connect(p(x, 2), p(x, 1), c.pin, labels);
        w.connect(p(x, 3), c.head, c.pin, labels);
    }
    w.build()
}

/// Removes the curl at crossing `x`.
pub fn r1_remove(d: &Diagram, x: usize) -> Result<Diagram, Error> {
    check_crossing(d, x)?;
    let slots = &d.nodes[x].slots;
    let curl = (0..4).any(|k| {
        let a = slots[k].arc;
        let b = slots[(k + 1) % 4].arc;
        a == b
    });
    if !curl {
        return Err(Error::Invalid(format!("crossing {} is not a curl", d.nodes[x].name)));
    }
    let mut w = Wiring::from_diagram(d);
    w.split_into_joints(x, &[(0, 2), (1, 3)]);
    w.build()
}

/// Pushes arc `over` across arc `under`, creating two crossings.
pub fn r2_add(d: &Diagram, over: usize, under: usize, side: R2Side) -> Result<Diagram, Error> {
    check_arc(d, over)?;
    check_arc(d, under)?;
    if over == under {
        return Err(Error::Invalid("R2 needs two distinct arcs".into()));
    }
    let mut w = Wiring::from_diagram(d);
    let a = w.take_conn(over);
    let b = w.take_conn(under);
    let la = Labels { edge: a.edge, comp: a.comp };
    let lb = Labels { edge: b.edge, comp: b.comp };
    let n = d.nodes.len();
    let c1 = w.add_crossing(&format!("r2.{n}a"));
    let c2 = w.add_crossing(&format!("r2.{n}b"));
    let (enter, leave) = match side {
        R2Side::Left => (3, 1),
        R2Side::Right => (1, 3),
    };
    w.connect(b.tail, p(c1, 0), b.pin, lb);
    w.connect(p(c1, 2), p(c2, 0), b.pin, lb);
    w.connect(p(c2, 2), b.head, b.pin, lb);
    w.connect(a.tail, p(c1, enter), a.pin, la);
    w.connect(p(c1, leave), p(c2, leave), a.pin, la);
    w.connect(p(c2, enter), a.head, a.pin, la);
    w.build()
}

/// Removes a bigon between crossings `x` and `y` whose two sides are the
/// under-strand at both and the over-strand at both.
pub fn r2_remove(d: &Diagram, x: usize, y: usize) -> Result<Diagram, Error> {
    check_crossing(d, x)?;
    check_crossing(d, y)?;
    let joins = |under: bool| {
        d.arcs.iter().any(|a| match (a.tail, a.head) {
            (Some(t), Some(h)) => {
                let ends = (t.node == x && h.node == y) || (t.node == y && h.node == x);
                ends && (t.slot % 2 == 0) == under && (h.slot % 2 == 0) == under
            }
            _ => false,
        })
    };
    if x == y || !joins(true) || !joins(false) {
        return Err(Error::Invalid(format!(
            "crossings {} and {} do not form a removable bigon",
            d.nodes[x].name, d.nodes[y].name
        )));
    }
    let mut w = Wiring::from_diagram(d);
    w.split_into_joints(x, &[(0, 2), (1, 3)]);
    w.split_into_joints(y, &[(0, 2), (1, 3)]);
    w.build()
}

/// Removes every arc whose label is not kept. Crossings losing a strand are
/// erased, and graph vertices left with two ends are smoothed away.
pub fn delete_strands(d: &Diagram, keep: &Keep) -> Result<Diagram, Error> {
    let kept = |ai: usize| {
        let a = &d.arcs[ai];
        match keep {
            Keep::Edges(es) => a.edge.is_some_and(|e| es.contains(&e)),
            Keep::Components(cs) => a.component.is_some_and(|c| cs.contains(&c)),
        }
    };
    for a in &d.arcs {
        let labelled = match keep {
            Keep::Edges(_) => a.edge.is_some(),
            Keep::Components(_) => a.component.is_some(),
        };
        if !labelled {
            return Err(Error::Invalid(format!("arc {} carries no label", a.name)));
        }
    }
    let mut w = Wiring::from_diagram(d);
    for ai in 0..d.arcs.len() {
        if !kept(ai) {
            w.take_conn(ai);
        }
    }
    for (ni, node) in d.nodes.iter().enumerate() {
        let alive: Vec<usize> = (0..node.slots.len()).filter(|&s| kept(node.slots[s].arc)).collect();
        match node.kind {
            NodeKind::Crossing => match alive.as_slice() {
                [_, _, _, _] => {}
                [] => w.nodes[ni].kind = WKind::Dropped,
                [a, b] if (a + 2) % 4 == *b => w.split_into_joints(ni, &[(*a, *b)]),
                _ => return Err(Error::Invalid(format!("crossing {} has inconsistent labels", node.name))),
            },
            NodeKind::Vertex => match alive.len() {
                0 => w.nodes[ni].kind = WKind::Dropped,
                1 => return Err(Error::Invalid(format!("deletion leaves a free end at {}", node.name))),
                2 => w.split_into_joints(ni, &[(alive[0], alive[1])]),
                k => {
                    if k < node.slots.len() {
                        let mut perm = alive.clone();
                        perm.extend((0..node.slots.len()).filter(|s| !alive.contains(s)));
                        w.permute_ports(ni, &perm);
                        w.nodes[ni].ports = k;
                    }
                }
            },
        }
    }
    w.build()
}

/// Disjoint union, with the second diagram's component labels shifted past
/// the first's.
pub fn disjoint_union(d1: &Diagram, d2: &Diagram) -> Result<Diagram, Error> {
    let mut w = Wiring::from_diagram(d1);
    let shift = d1.component_labels().last().copied().unwrap_or(0);
    append(&mut w, d2, "", |l| Labels { edge: l.edge, comp: l.comp.map(|c| c + shift) });
    if d2.format == Format::Theta {
        w.format = Format::Theta;
    }
    w.build()
}

/// Copies `d` into `w`; returns the offset of its nodes and the connection
/// index of each of its arcs.
fn append(w: &mut Wiring, d: &Diagram, prefix: &str, relabel: impl Fn(Labels) -> Labels) -> (usize, Vec<usize>) {
    let other = Wiring::from_diagram(d);
    let offset = w.nodes.len();
    for n in &other.nodes {
        let name = format!("{prefix}{}", n.name);
        w.add_node(&name, n.kind, n.ports);
    }
    let shift = |q: WPort| WPort { node: q.node + offset, port: q.port };
    let conns = other
        .conns
        .iter()
        .map(|c| {
            let c = c.as_ref().unwrap();
            w.connect(shift(c.tail), shift(c.head), c.pin, relabel(Labels { edge: c.edge, comp: c.comp }))
        })
        .collect();
    (offset, conns)
}

/// Cuts `d` at `arc` and `knot` at `knot_arc` and joins the two, tying the
/// knot into the strand through `arc`.
pub fn splice_knot(d: &Diagram, arc: usize, knot: &Diagram, knot_arc: usize) -> Result<Diagram, Error> {
    check_arc(d, arc)?;
    check_arc(knot, knot_arc)?;
    knot.require_link("splice_knot")?;
    if knot.component_count() != 1 {
        return Err(Error::Invalid("splice_knot needs a one-component knot".into()));
    }
    let mut w = Wiring::from_diagram(d);
    let (_, conns) = append(&mut w, knot, "k.", |_| Labels::default());
    let c = w.take_conn(arc);
    let k = w.take_conn(conns[knot_arc]);
    let labels = Labels { edge: c.edge, comp: c.comp };
    for &ci in &conns {
        if let Some(cc) = w.conns[ci].as_mut() {
            cc.edge = labels.edge;
            cc.comp = labels.comp;
        }
    }
    w.connect(c.tail, k.head, c.pin, labels);
    w.connect(k.tail, c.head, c.pin, labels);
    w.build()
}

/// Adds a chain of `2|n|` crossings between two parallel strands. Returns the
/// chain's outer ports (bottom-left, bottom-right, top-left, top-right), or
/// `None` for `n = 0`. Each strand stays on its own side: bottom-left runs
/// to top-left and bottom-right to top-right.
pub(crate) fn twist_chain(w: &mut Wiring, n: i64, name: &str) -> Option<[WPort; 4]> {
    if n == 0 {
        return None;
    }
    // port numbers of a crossing at (bottom-left, bottom-right, top-right, top-left)
    let map = if n > 0 { [3, 0, 1, 2] } else { [0, 1, 2, 3] };
    let count = 2 * n.unsigned_abs() as usize;
    let xs: Vec<usize> = (0..count).map(|k| w.add_crossing(&format!("{name}.t{k}"))).collect();
    for k in 0..count - 1 {
        let (lo, hi) = (xs[k], xs[k + 1]);
        w.connect(p(lo, map[3]), p(hi, map[0]), false, Labels::default());
        w.connect(p(lo, map[2]), p(hi, map[1]), false, Labels::default());
    }
    let (first, last) = (xs[0], xs[count - 1]);
    Some([p(first, map[0]), p(first, map[1]), p(last, map[3]), p(last, map[2])])
}

fn region_ports(d: &Diagram, w: &mut Wiring, r: TwistRegion) -> Result<[(WPort, WPort, bool, Labels); 2], Error> {
    check_arc(d, r.left)?;
    check_arc(d, r.right)?;
    if r.left == r.right {
        return Err(Error::Invalid("twist region needs two distinct arcs".into()));
    }
    let mut take = |a: usize| {
        let c = w.take_conn(a);
        (c.tail, c.head, c.pin, Labels { edge: c.edge, comp: c.comp })
    };
    Ok([take(r.left), take(r.right)])
}

/// Inserts `n` full twists between the two arcs of `r`.
pub fn insert_twists(d: &Diagram, r: TwistRegion, n: i64) -> Result<Diagram, Error> {
    let mut w = Wiring::from_diagram(d);
    let [(lt, lh, _, ll), (rt, rh, _, rl)] = region_ports(d, &mut w, r)?;
    match twist_chain(&mut w, n, "tw") {
        None => {
            w.connect(lt, lh, false, ll);
            w.connect(rt, rh, false, rl);
        }
        Some([bl, br, tl, tr]) => {
            w.connect(lt, bl, false, ll);
            w.connect(rt, br, false, rl);
            w.connect(tl, lh, false, Labels::default());
            w.connect(tr, rh, false, Labels::default());
        }
    }
    w.build()
}

/// The region's arcs cut and reconnected as a cap below and a cup above.
pub fn cap_region(d: &Diagram, r: TwistRegion) -> Result<Diagram, Error> {
    let mut w = Wiring::from_diagram(d);
    let [(lt, lh, _, _), (rt, rh, _, _)] = region_ports(d, &mut w, r)?;
    w.connect(lt, rt, false, Labels::default());
    w.connect(lh, rh, false, Labels::default());
    w.build()
}

/// Result of doubling every arc of a diagram into a parallel pair.
pub(crate) struct Doubled {
    pub wiring: Wiring,
    /// Connection of the right-hand copy of each arc, running with the arc.
    pub right: Vec<usize>,
    /// Connection of the left-hand copy, running against the arc.
    pub left: Vec<usize>,
}

/// Blackboard-framed doubling. Each crossing becomes four crossings; at a
/// graph vertex, neighbouring band edges are joined without new crossings.
pub(crate) fn double_wiring(d: &Diagram) -> Doubled {
    let mut w = Wiring::new(Format::Link);
    // sub-crossing index for each crossing, by (x, y) in {-1,1}^2
    let mut sub = vec![[0usize; 4]; d.nodes.len()];
    let si = |x: i32, y: i32| ((x + 1) + (y + 1) / 2) as usize;
    // gap joints at graph vertices
    let mut gaps = vec![Vec::new(); d.nodes.len()];
    for (ni, node) in d.nodes.iter().enumerate() {
        match node.kind {
            NodeKind::Crossing => {
                for x in [-1, 1] {
                    for y in [-1, 1] {
                        sub[ni][si(x, y)] = w.add_crossing(&format!("{}.{}{}", node.name, sgn(x), sgn(y)));
                    }
                }
                let c = |x, y| sub[ni][si(x, y)];
                const S: usize = 0;
                const E: usize = 1;
                const N: usize = 2;
                const W: usize = 3;
                w.connect(p(c(1, -1), N), p(c(1, 1), S), true, Labels::default());
                w.connect(p(c(-1, 1), S), p(c(-1, -1), N), true, Labels::default());
                w.connect(p(c(-1, -1), E), p(c(1, -1), W), true, Labels::default());
                w.connect(p(c(1, 1), W), p(c(-1, 1), E), true, Labels::default());
            }
            NodeKind::Vertex => {
                gaps[ni] = (0..node.slots.len()).map(|k| w.add_joint(&format!("{}.g{k}", node.name))).collect();
            }
        }
    }
    // the doubled endpoint at side `b` (else `a`) of slot `slot` of node `n`
    let vport = |n: usize, slot: usize, b: bool| -> WPort {
        match d.nodes[n].kind {
            NodeKind::Vertex => {
                let g = &gaps[n];
                if b {
                    p(g[slot], 0)
                } else {
                    p(g[(slot + g.len() - 1) % g.len()], 1)
                }
            }
            NodeKind::Crossing => {
                let c = |x, y| sub[n][si(x, y)];
                match (slot, b) {
                    (0, false) => p(c(-1, -1), 0),
                    (0, true) => p(c(1, -1), 0),
                    (1, false) => p(c(1, -1), 1),
                    (1, true) => p(c(1, 1), 1),
                    (2, false) => p(c(1, 1), 2),
                    (2, true) => p(c(-1, 1), 2),
                    (3, false) => p(c(-1, 1), 3),
                    _ => p(c(-1, -1), 3),
                }
            }
        }
    };
    let mut right = Vec::with_capacity(d.arcs.len());
    let mut left = Vec::with_capacity(d.arcs.len());
    for (ai, a) in d.arcs.iter().enumerate() {
        match (a.tail, a.head) {
            (Some(t), Some(h)) => {
                right.push(w.connect(vport(t.node, t.slot, false), vport(h.node, h.slot, true), true, Labels::default()));
                left.push(w.connect(vport(h.node, h.slot, false), vport(t.node, t.slot, true), true, Labels::default()));
            }
            _ => {
                let name = &d.arcs[ai].name;
                let jr = w.add_joint(&format!("{name}.r"));
                let jl = w.add_joint(&format!("{name}.l"));
                right.push(w.connect(p(jr, 1), p(jr, 0), true, Labels::default()));
                left.push(w.connect(p(jl, 1), p(jl, 0), true, Labels::default()));
            }
        }
    }
    Doubled { wiring: w, right, left }
}

fn sgn(v: i32) -> char {
    if v < 0 {
        '-'
    } else {
        '+'
    }
}

/// Blackboard 2-parallel of a link diagram.
pub fn double_link_diagram(d: &Diagram) -> Result<Diagram, Error> {
    d.require_link("double_link_diagram")?;
    double_wiring(d).wiring.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn curl_then_uncurl() {
        let circle = Diagram::unlink(1);
        for sign in [1, -1] {
            let curl = r1_add(&circle, 0, sign).unwrap();
            assert_eq!(curl.crossing_count(), 1);
            assert_eq!(curl.writhe(), i64::from(sign));
            let back = r1_remove(&curl, 0).unwrap();
            assert!(crate::diagram::is_isomorphic(&back, &circle));
        }
    }

    #[test]
    fn r2_round_trip() {
        let two = Diagram::unlink(2);
        for side in [R2Side::Left, R2Side::Right] {
            let d = r2_add(&two, 0, 1, side).unwrap();
            assert_eq!(d.crossing_count(), 2);
            assert_eq!(d.writhe(), 0);
            let back = r2_remove(&d, 0, 1).unwrap();
            assert!(crate::diagram::is_isomorphic(&back, &two));
        }
    }

    #[test]
    fn r1_remove_rejects_non_curl() {
        let hopf = fixtures::load("hopf").unwrap();
        assert!(r1_remove(&hopf, 0).is_err());
        assert!(r2_remove(&hopf, 0, 0).is_err());
    }

    #[test]
    fn doubling_counts() {
        let circle = Diagram::unlink(1);
        let dd = double_link_diagram(&circle).unwrap();
        assert_eq!((dd.crossing_count(), dd.component_count()), (0, 2));
        let curl = r1_add(&circle, 0, 1).unwrap();
        let dd = double_link_diagram(&curl).unwrap();
        assert_eq!((dd.crossing_count(), dd.component_count()), (4, 2));
        let t = fixtures::load("trefoil").unwrap();
        let dd = double_link_diagram(&t).unwrap();
        assert_eq!((dd.crossing_count(), dd.component_count()), (12, 2));
    }

    #[test]
    fn hopf_keep_one_component() {
        let hopf = fixtures::load("hopf").unwrap();
        let labels: Vec<u32> = hopf.component_labels().into_iter().collect();
        let k = delete_strands(&hopf, &Keep::Components(vec![labels[0]])).unwrap();
        assert_eq!(k.crossing_count(), 0);
        assert_eq!(k.component_count(), 1);
    }

    #[test]
    fn theta_keep_two_edges() {
        let t = fixtures::load("trivial-theta").unwrap();
        let k = delete_strands(&t, &Keep::Edges(vec![2, 3])).unwrap();
        assert!(k.is_link());
        assert_eq!(k.arcs().len(), 1);
        assert!(delete_strands(&t, &Keep::Edges(vec![1])).is_err());
    }

    #[test]
    fn crossing_change_flips_sign() {
        let curl = r1_add(&Diagram::unlink(1), 0, 1).unwrap();
        let flipped = crossing_change(&curl, 0).unwrap();
        assert_eq!(flipped.writhe(), -1);
    }

    #[test]
    fn twist_chain_counts() {
        // two concentric circles, both counterclockwise
        let d = fixtures::load("twist-annulus").unwrap();
        let r = TwistRegion { left: 0, right: 1 };
        for n in 1..=3i64 {
            let tw = insert_twists(&d, r, n).unwrap();
            assert_eq!(tw.crossing_count() as i64, 2 * n);
            let tw = insert_twists(&d, r, -n).unwrap();
            assert_eq!(tw.crossing_count() as i64, 2 * n);
        }
        let capped = cap_region(&d, r).unwrap();
        assert_eq!(capped.component_count(), 1);
    }
}
