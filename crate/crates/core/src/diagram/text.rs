//! Line-oriented diagram files (`format link-v1` / `format theta-v1`).

use std::collections::HashMap;
use std::fmt::Write;

use super::{validate_diagram, Arc, ArcEnd, Diagram, End, Format, Node, NodeKind, Port};
use crate::Error;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parses and validates a diagram file.
pub fn parse_diagram(text: &str) -> Result<Diagram, Error> {
    let d = parse_unchecked(text)?;
    validate_diagram(&d).into_result()?;
    Ok(d)
}

/// Parses a diagram file, checking syntax and references but not strand
/// directions.
pub fn parse_unchecked(text: &str) -> Result<Diagram, Error> {
    let mut format = None;
    let mut arcs: Vec<Arc> = Vec::new();
    let mut arc_ids: HashMap<String, usize> = HashMap::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut node_ids: HashMap<String, usize> = HashMap::new();
    let mut groups: Vec<(usize, String, Vec<String>, bool)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let keyword = words.next().unwrap();
        let args: Vec<&str> = words.collect();
        if format.is_none() && keyword != "format" {
            return Err(perr(line, "expected `format link-v1` or `format theta-v1` header"));
        }
        match keyword {
            "format" => {
                if format.is_some() {
                    return Err(perr(line, "duplicate format header"));
                }
                format = Some(match args.as_slice() {
                    ["link-v1"] => Format::Link,
                    ["theta-v1"] => Format::Theta,
                    _ => return Err(perr(line, format!("unknown format {:?}", args.join(" ")))),
                });
            }
            "arc" => {
                let [id] = args.as_slice() else {
                    return Err(perr(line, "expected `arc <id>`"));
                };
                if arc_ids.contains_key(*id) {
                    return Err(perr(line, format!("arc {id} declared twice")));
                }
                arc_ids.insert(id.to_string(), arcs.len());
                arcs.push(Arc { name: id.to_string(), tail: None, head: None, edge: None, component: None });
            }
            "vertex" | "crossing" => {
                let kind = if keyword == "vertex" { NodeKind::Vertex } else { NodeKind::Crossing };
                let Some((id, refs)) = args.split_first() else {
                    return Err(perr(line, format!("expected `{keyword} <id> <arcref>...`")));
                };
                if kind == NodeKind::Crossing && refs.len() != 4 {
                    return Err(perr(line, format!("crossing {id} needs 4 arc references, found {}", refs.len())));
                }
                if refs.is_empty() {
                    return Err(perr(line, format!("vertex {id} has no arc references")));
                }
                if node_ids.contains_key(*id) {
                    return Err(perr(line, format!("node {id} declared twice")));
                }
                let ni = nodes.len();
                let mut slots = Vec::with_capacity(refs.len());
                for (si, r) in refs.iter().enumerate() {
                    let (aid, dir) = r.rsplit_once(':').ok_or_else(|| perr(line, format!("arc reference {r} lacks :in/:out")))?;
                    let end = match dir {
                        "in" => End::Head,
                        "out" => End::Tail,
                        _ => return Err(perr(line, format!("arc reference {r}: expected :in or :out"))),
                    };
                    let &ai = arc_ids.get(aid).ok_or_else(|| perr(line, format!("unknown arc {aid}")))?;
                    let slot = match end {
                        End::Head => &mut arcs[ai].head,
                        End::Tail => &mut arcs[ai].tail,
                    };
                    if slot.is_some() {
                        let which = if end == End::Head { "head" } else { "tail" };
                        return Err(perr(line, format!("arc {aid} already attached at its {which}")));
                    }
                    *slot = Some(Port { node: ni, slot: si });
                    slots.push(ArcEnd { arc: ai, end });
                }
                node_ids.insert(id.to_string(), ni);
                nodes.push(Node { name: id.to_string(), kind, slots });
            }
            "component" | "edge" => {
                let Some((label, members)) = args.split_first() else {
                    return Err(perr(line, format!("expected `{keyword} <label> <arcid>...`")));
                };
                if members.is_empty() {
                    return Err(perr(line, format!("{keyword} {label} lists no arcs")));
                }
                groups.push((line, label.to_string(), members.iter().map(|s| s.to_string()).collect(), keyword == "edge"));
            }
            other => return Err(perr(line, format!("unknown keyword {other}"))),
        }
    }
    let format = format.ok_or_else(|| perr(1, "missing format header"))?;

    for (line, label, members, is_edge) in groups {
        if is_edge && format != Format::Theta {
            return Err(perr(line, "`edge` lines are only allowed in theta-v1 files"));
        }
        if !is_edge && format != Format::Link {
            return Err(perr(line, "`component` lines are only allowed in link-v1 files"));
        }
        let edge_num = if is_edge {
            match label.as_str() {
                "e1" => Some(1u8),
                "e2" => Some(2),
                "e3" => Some(3),
                _ => return Err(perr(line, format!("edge label must be e1, e2 or e3, found {label}"))),
            }
        } else {
            None
        };
        let comp_num = if is_edge {
            None
        } else {
            Some(label.parse::<u32>().map_err(|_| perr(line, format!("component label {label} is not an integer")))?)
        };
        let mut prev: Option<usize> = None;
        for m in &members {
            let &ai = arc_ids.get(m).ok_or_else(|| perr(line, format!("unknown arc {m}")))?;
            let arc = &mut arcs[ai];
            if arc.edge.is_some() || arc.component.is_some() {
                return Err(perr(line, format!("arc {m} assigned twice")));
            }
            arc.edge = edge_num;
            arc.component = comp_num;
            if let Some(p) = prev {
                let joined = match (arcs[p].head, arcs[ai].tail) {
                    (Some(h), Some(t)) => {
                        h.node == t.node
                            && nodes[h.node].kind == NodeKind::Crossing
                            && (h.slot + 2) % 4 == t.slot
                    }
                    _ => false,
                };
                if !joined {
                    return Err(perr(line, format!("arcs {} and {m} are not consecutive along a strand", arcs[p].name)));
                }
            }
            prev = Some(ai);
        }
    }

    Ok(Diagram { format, nodes, arcs })
}

fn arcref(d: &Diagram, ae: ArcEnd) -> String {
    let dir = if ae.end == End::Head { "in" } else { "out" };
    format!("{}:{dir}", d.arcs[ae.arc].name)
}

/// Serializes a diagram in the file format read by [`parse_diagram`].
pub(crate) fn to_text(d: &Diagram) -> String {
    let mut out = String::new();
    writeln!(out, "format {}", d.format.header()).unwrap();
    for a in &d.arcs {
        writeln!(out, "arc {}", a.name).unwrap();
    }
    for n in d.nodes.iter().filter(|n| n.kind == NodeKind::Vertex) {
        let refs: Vec<String> = n.slots.iter().map(|&s| arcref(d, s)).collect();
        writeln!(out, "vertex {} {}", n.name, refs.join(" ")).unwrap();
    }
    for n in d.nodes.iter().filter(|n| n.kind == NodeKind::Crossing) {
        let refs: Vec<String> = n.slots.iter().map(|&s| arcref(d, s)).collect();
        writeln!(out, "crossing {} {}", n.name, refs.join(" ")).unwrap();
    }
    match d.format {
        Format::Link => {
            for strand in d.strands() {
                let label = d.arcs[strand[0]].component.map_or_else(|| "?".to_string(), |c| c.to_string());
                let names: Vec<&str> = strand.iter().map(|&a| d.arcs[a].name.as_str()).collect();
                writeln!(out, "component {label} {}", names.join(" ")).unwrap();
            }
        }
        Format::Theta => {
            for e in 1..=3u8 {
                let path: Vec<&str> = d
                    .strands()
                    .into_iter()
                    .filter(|s| d.arcs[s[0]].edge == Some(e))
                    .flatten()
                    .map(|a| d.arcs[a].name.as_str())
                    .collect();
                if !path.is_empty() {
                    writeln!(out, "edge e{e} {}", path.join(" ")).unwrap();
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_circle() {
        let d = parse_diagram("format link-v1\narc a1\ncomponent 1 a1\n").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn trivial_theta_file() {
        let text = "format theta-v1\narc a1\narc a2\narc a3\n\
                    vertex v1 a3:out a2:out a1:out\nvertex v2 a1:in a2:in a3:in\n\
                    edge e1 a1\nedge e2 a2\nedge e3 a3\n";
        let d = parse_diagram(text).unwrap();
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.arcs().len(), 3);
        let again = parse_diagram(&to_text(&d)).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn undeclared_arc_is_named() {
        let text = "format link-v1\narc a1\ncrossing x a1:in a9:out a1:out a9:in\n";
        match parse_unchecked(text) {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 3);
                assert!(msg.contains("a9"), "{msg}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn head_attached_twice() {
        let text = "format link-v1\narc a\narc b\nvertex v a:in a:in\n";
        let Err(Error::Parse { msg, .. }) = parse_unchecked(text) else { panic!() };
        assert!(msg.contains("already attached"), "{msg}");
    }

    #[test]
    fn free_end_fails_validation() {
        let text = "format theta-v1\narc a\nvertex v a:out\n";
        assert!(matches!(parse_diagram(text), Err(Error::Invalid(_))));
    }

    #[test]
    fn missing_header() {
        assert!(matches!(parse_unchecked("arc a\n"), Err(Error::Parse { line: 1, .. })));
    }
}
