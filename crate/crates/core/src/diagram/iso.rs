//! Diagram isomorphism up to renaming of nodes and arcs.

use std::collections::VecDeque;

use super::{Diagram, NodeKind};

/// True when a bijection of nodes and arcs carries `d1` onto `d2`, keeping
/// arc directions, crossing slots exactly and vertex slots up to rotation.
pub fn is_isomorphic(d1: &Diagram, d2: &Diagram) -> bool {
    if d1.nodes.len() != d2.nodes.len()
        || d1.arcs.len() != d2.arcs.len()
        || d1.free_loop_count() != d2.free_loop_count()
        || d1.crossing_count() != d2.crossing_count()
    {
        return false;
    }
    let mut node_map: Vec<Option<usize>> = vec![None; d1.nodes.len()];
    let mut used = vec![false; d2.nodes.len()];
    for seed in 0..d1.nodes.len() {
        if node_map[seed].is_some() {
            continue;
        }
        let mut found = false;
        for cand in 0..d2.nodes.len() {
            if used[cand] || d1.nodes[seed].kind != d2.nodes[cand].kind {
                continue;
            }
            let deg = d1.nodes[seed].slots.len();
            if d2.nodes[cand].slots.len() != deg {
                continue;
            }
            let offsets = if d1.nodes[seed].kind == NodeKind::Crossing { 1 } else { deg };
            for off in 0..offsets {
                if let Some(assign) = propagate(d1, d2, seed, cand, off, &node_map, &used) {
                    for (a, b) in assign {
                        node_map[a] = Some(b);
                        used[b] = true;
                    }
                    found = true;
                    break;
                }
            }
            if found {
                break;
            }
        }
        if !found {
            return false;
        }
    }
    true
}

/// Extends `seed -> cand` (with slot rotation `off`) across the connected
/// component of `seed`. Returns the new node pairs, or `None` on conflict.
fn propagate(
    d1: &Diagram,
    d2: &Diagram,
    seed: usize,
    cand: usize,
    off: usize,
    node_map: &[Option<usize>],
    used: &[bool],
) -> Option<Vec<(usize, usize)>> {
    let mut map: Vec<Option<(usize, usize)>> = node_map.iter().map(|m| m.map(|v| (v, usize::MAX))).collect();
    let mut taken = used.to_vec();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    map[seed] = Some((cand, off));
    taken[cand] = true;
    out.push((seed, cand));
    queue.push_back(seed);
    while let Some(n1) = queue.pop_front() {
        let (n2, off) = map[n1].unwrap();
        let deg = d1.nodes[n1].slots.len();
        for s in 0..deg {
            let e1 = d1.nodes[n1].slots[s];
            let e2 = d2.nodes[n2].slots[(s + off) % deg];
            if e1.end != e2.end {
                return None;
            }
            // the opposite end of each arc
            let far1 = d1.port_of(e1.arc, other(e1.end))?;
            let far2 = d2.port_of(e2.arc, other(e2.end))?;
            let (m1, m2) = (far1.node, far2.node);
            if d1.nodes[m1].kind != d2.nodes[m2].kind || d1.nodes[m1].slots.len() != d2.nodes[m2].slots.len() {
                return None;
            }
            let mdeg = d1.nodes[m1].slots.len();
            let moff = (far2.slot + mdeg - far1.slot) % mdeg;
            if d1.nodes[m1].kind == NodeKind::Crossing && moff != 0 {
                return None;
            }
            match map[m1] {
                // nodes fixed by earlier components carry no offset and never match
                Some((img, o)) => {
                    if img != m2 || o != moff {
                        return None;
                    }
                }
                None => {
                    if taken[m2] {
                        return None;
                    }
                    taken[m2] = true;
                    map[m1] = Some((m2, moff));
                    out.push((m1, m2));
                    queue.push_back(m1);
                }
            }
        }
    }
    Some(out)
}

fn other(e: super::End) -> super::End {
    match e {
        super::End::Head => super::End::Tail,
        super::End::Tail => super::End::Head,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn renaming_is_isomorphic() {
        let t = fixtures::load("trefoil").unwrap();
        let mut renamed = t.clone();
        renamed.nodes.reverse();
        let n = renamed.nodes.len();
        for a in renamed.arcs.iter_mut() {
            for p in [&mut a.tail, &mut a.head].into_iter().flatten() {
                p.node = n - 1 - p.node;
            }
        }
        assert!(is_isomorphic(&t, &renamed));
        assert!(!is_isomorphic(&t, &fixtures::load("hopf").unwrap()));
    }

    #[test]
    fn mirror_is_not_isomorphic() {
        let t = fixtures::load("trefoil").unwrap();
        let mut m = t.clone();
        for x in 0..3 {
            m = crate::diagram::crossing_change(&m, x).unwrap();
        }
        assert!(!is_isomorphic(&t, &m));
    }
}
