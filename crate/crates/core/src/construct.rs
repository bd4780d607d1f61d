//! Generators for θ-curve diagrams: braid-like θ-curves, curl and clasp
//! decorations, knotted edges, and before/after pairs for the six local moves.

use crate::diagram::wiring::{Labels, WKind, WPort, Wiring};
use crate::diagram::{
    crossing_change, parse_diagram, r1_add, r2_add, splice_knot, Diagram, Format, R2Side,
};
use crate::theta::validate_theta;
use crate::{fixtures, Error};

fn p(node: usize, port: usize) -> WPort {
    WPort { node, port }
}

/// θ-curve with `v1` below three parallel edges e1, e2, e3 (left to right),
/// the braid `word` applied upwards, and `v2` on top. Letter `i` is σ_i
/// (the strand moving right passes over), `-i` its inverse. The underlying
/// permutation must be even so that `v2` keeps the cyclic order e1, e2, e3.
pub fn braid_theta(word: &[i32]) -> Result<Diagram, Error> {
    let mut w = Wiring::new(Format::Theta);
    let v1 = w.add_node("v1", WKind::Vertex, 3);
    let v2 = w.add_node("v2", WKind::Vertex, 3);
    // position k holds (edge label, open port)
    let mut pos: Vec<(u8, WPort)> = (0..3).map(|k| (k as u8 + 1, p(v1, 2 - k))).collect();
    for (step, &letter) in word.iter().enumerate() {
        let i = letter.unsigned_abs() as usize;
        if letter == 0 || i > 2 {
            return Err(Error::Invalid(format!("braid letter {letter} is not one of ±1, ±2")));
        }
        let x = w.add_crossing(&format!("x{}", step + 1));
        // ports facing SW, SE, NW, NE
        let (sw, se, nw, ne) = if letter > 0 { (3, 0, 2, 1) } else { (0, 1, 3, 2) };
        let (l, r) = (pos[i - 1], pos[i]);
        w.connect(l.1, p(x, sw), true, edge(l.0));
        w.connect(r.1, p(x, se), true, edge(r.0));
        pos[i - 1] = (r.0, p(x, nw));
        pos[i] = (l.0, p(x, ne));
    }
    let top: Vec<u8> = pos.iter().map(|s| s.0).collect();
    if ![[1, 2, 3], [2, 3, 1], [3, 1, 2]].contains(&[top[0], top[1], top[2]]) {
        return Err(Error::Invalid(format!("braid permutation {top:?} is odd")));
    }
    for (k, (e, port)) in pos.into_iter().enumerate() {
        w.connect(port, p(v2, k), true, edge(e));
    }
    w.build()
}

/// One step of a θ-curve drawn bottom to top between `v1` and `v2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TangleOp {
    /// σ_i for `i > 0`, σ_|i|⁻¹ for `i < 0`, acting on positions |i| and |i|+1.
    Cross(i32),
    /// A local minimum creating two strands at positions `i`, `i+1` (0-based).
    Cup(usize),
    /// A local maximum joining the strands at positions `i`, `i+1` (0-based).
    Cap(usize),
}

/// θ-curve from a plat-like word: `v1` emits e1, e2, e3 left to right, the
/// operations act upwards, and the three remaining strands enter `v2`.
pub fn tangle_theta(ops: &[TangleOp]) -> Result<Diagram, Error> {
    let mut w = Wiring::new(Format::Theta);
    let v1 = w.add_node("v1", WKind::Vertex, 3);
    let v2 = w.add_node("v2", WKind::Vertex, 3);
    // open strand ends with their edge label, if known
    let mut pos: Vec<(Option<u8>, WPort)> = (0..3).map(|k| (Some(k as u8 + 1), p(v1, 2 - k))).collect();
    let link = |w: &mut Wiring, from: (Option<u8>, WPort), to: WPort| {
        let pin = from.1.node == v1 || to.node == v2;
        w.connect(from.1, to, pin, Labels { edge: from.0, comp: None });
    };
    for (step, op) in ops.iter().enumerate() {
        let bad = || Error::Invalid(format!("step {} ({op:?}) is out of range", step + 1));
        match *op {
            TangleOp::Cross(letter) => {
                let i = letter.unsigned_abs() as usize;
                if letter == 0 || i >= pos.len() {
                    return Err(bad());
                }
                let x = w.add_crossing(&format!("x{}", step + 1));
                // ports facing SW, SE, NW, NE
                let (sw, se, nw, ne) = if letter > 0 { (3, 0, 2, 1) } else { (0, 1, 3, 2) };
                let (l, r) = (pos[i - 1], pos[i]);
                link(&mut w, l, p(x, sw));
                link(&mut w, r, p(x, se));
                pos[i - 1] = (r.0, p(x, nw));
                pos[i] = (l.0, p(x, ne));
            }
            TangleOp::Cup(i) => {
                if i > pos.len() {
                    return Err(bad());
                }
                let j = w.add_joint(&format!("cup{}", step + 1));
                pos.insert(i, (None, p(j, 1)));
                pos.insert(i, (None, p(j, 0)));
            }
            TangleOp::Cap(i) => {
                if i + 1 >= pos.len() {
                    return Err(bad());
                }
                let r = pos.remove(i + 1);
                let l = pos.remove(i);
                let j = w.add_joint(&format!("cap{}", step + 1));
                link(&mut w, l, p(j, 0));
                link(&mut w, r, p(j, 1));
            }
        }
    }
    if pos.len() != 3 {
        return Err(Error::Invalid(format!("{} strands reach v2, expected 3", pos.len())));
    }
    for (k, end) in pos.into_iter().enumerate() {
        link(&mut w, end, p(v2, k));
    }
    w.build()
}

fn edge(e: u8) -> Labels {
    Labels { edge: Some(e), comp: None }
}

/// First arc of edge `e` counted from `v1`.
pub fn edge_arc(d: &Diagram, e: u8) -> Result<usize, Error> {
    let t = validate_theta(d)?;
    Ok(t.edge_path(e)[0])
}

/// Last arc of edge `e`, next to `v2`.
pub fn edge_arc_near_v2(d: &Diagram, e: u8) -> Result<usize, Error> {
    let t = validate_theta(d)?;
    Ok(*t.edge_path(e).last().unwrap())
}

/// Adds a curl of sign `sign` on edge `e`.
pub fn add_curl(d: &Diagram, e: u8, sign: i32) -> Result<Diagram, Error> {
    r1_add(d, edge_arc(d, e)?, sign)
}

/// Clasps edge `over` across edge `under` with two crossings of the same sign.
/// `flip` picks which of the two sign choices.
pub fn add_clasp(d: &Diagram, over: u8, under: u8, flip: bool) -> Result<Diagram, Error> {
    let n = d.nodes().len();
    let side = if flip { R2Side::Right } else { R2Side::Left };
    let r2 = r2_add(d, edge_arc(d, over)?, edge_arc(d, under)?, side)?;
    let x = r2
        .node_index(&format!("r2.{n}b"))
        .ok_or_else(|| Error::Invalid("clasp crossing not found".into()))?;
    crossing_change(&r2, x)
}

/// Ties a right-handed trefoil into edge `e`.
pub fn add_trefoil(d: &Diagram, e: u8) -> Result<Diagram, Error> {
    let k = fixtures::load("trefoil")?;
    splice_knot(d, edge_arc_near_v2(d, e)?, &k, 0)
}

pub fn trivial_theta() -> Diagram {
    braid_theta(&[]).expect("empty braid")
}

/// One positive curl on e1.
pub fn curl_theta() -> Result<Diagram, Error> {
    add_curl(&trivial_theta(), 1, 1)
}

/// e1 clasped over e2.
pub fn clasp_theta() -> Result<Diagram, Error> {
    add_clasp(&trivial_theta(), 1, 2, false)
}

/// A trefoil tied into e1.
pub fn trefoil_theta() -> Result<Diagram, Error> {
    add_trefoil(&trivial_theta(), 1)
}

/// A 6-crossing brunnian θ-curve of Kinoshita type: all three subknots have
/// trivial Jones polynomial while the normalized Yamada polynomial differs
/// from the trivial θ-curve's.
pub fn kinoshita_theta() -> Result<Diagram, Error> {
    use TangleOp::{Cap, Cross, Cup};
    tangle_theta(&[Cup(2), Cross(2), Cross(2), Cross(4), Cross(3), Cross(3), Cross(1), Cap(1)])
}

const MOVE4_BEFORE: &str = "\
format theta-v1
arc a1
arc a2
arc b1
arc b2
arc c1
arc c2
arc c3
vertex v1 c1:out b1:out a1:out
vertex v2 a2:in b2:in c3:in
crossing x1 a1:in c2:in a2:out c3:out
crossing x2 b1:in c1:in b2:out c2:out
edge e1 a1 a2
edge e2 b1 b2
edge e3 c1 c2 c3
";

const MOVE4_AFTER: &str = "\
format theta-v1
arc a1
arc b1
arc c1
arc c2
arc c3
vertex v1 c1:out b1:out a1:out
vertex v2 a1:in b1:in c3:in
crossing x1 c1:in c3:out c2:out c2:in
edge e1 a1
edge e2 b1
edge e3 c1 c2 c3
";

/// Before/after diagrams for move `k` in 1..=6:
/// 1 a curl, 2 a bigon, 3 a triangle, 4 a strand passing over a vertex,
/// 5 a full turn of a vertex, 6 a full twist of two edges at a vertex.
pub fn move_pair(k: u8) -> Result<(Diagram, Diagram), Error> {
    match k {
        1 => {
            let d = clasp_theta()?;
            let after = add_curl(&d, 3, -1)?;
            Ok((d, after))
        }
        2 => {
            let d = curl_theta()?;
            let after = r2_add(&d, edge_arc(&d, 2)?, edge_arc(&d, 3)?, R2Side::Left)?;
            Ok((d, after))
        }
        3 => Ok((braid_theta(&[1, 2, 1, -2, -1, -2, 1, 1])?, braid_theta(&[2, 1, 2, -2, -1, -2, 1, 1])?)),
        4 => {
            let before = add_trefoil(&parse_diagram(MOVE4_BEFORE)?, 2)?;
            let after = add_trefoil(&parse_diagram(MOVE4_AFTER)?, 2)?;
            Ok((before, after))
        }
        5 => Ok((braid_theta(&[1, 1])?, braid_theta(&[1, 2, 1, 1, 2, 1, 1, 1])?)),
        6 => Ok((braid_theta(&[1, -2, 1, -2])?, braid_theta(&[1, 1, 1, -2, 1, -2])?)),
        _ => Err(Error::Unsupported(format!("no move numbered {k}"))),
    }
}

/// Generated fixtures as (name, description, diagram), in shipping order.
pub fn catalogue() -> Result<Vec<(String, String, Diagram)>, Error> {
    let mut out = vec![
        ("curl-theta".to_string(), "Trivial θ-curve with one positive curl on e1.".to_string(), curl_theta()?),
        ("clasp-theta".to_string(), "Trivial θ-curve with e1 clasped over e2 (two like-signed crossings).".to_string(), clasp_theta()?),
        ("trefoil-theta".to_string(), "Trivial θ-curve with a right-handed trefoil tied into e1.".to_string(), trefoil_theta()?),
        (
            "kinoshita-theta".to_string(),
            "Brunnian θ-curve of Kinoshita type, drawn as a plat with one cup and one cap:\n\
             cup at 2, crossings s2 s2 s4 s3 s3 s1, cap at 1."
                .to_string(),
            kinoshita_theta()?,
        ),
    ];
    let what = ["a curl on e3", "a bigon between e2 and e3", "a triangle move", "a strand of e3 pushed across v1", "a full turn of v1", "a full twist of e1 and e2 at v1"];
    for k in 1..=6u8 {
        let (before, after) = move_pair(k)?;
        let desc = what[usize::from(k) - 1];
        out.push((format!("move-{k}-before"), format!("Move pair {k} ({desc}), before."), before));
        out.push((format!("move-{k}-after"), format!("Move pair {k} ({desc}), after."), after));
    }
    Ok(out)
}
