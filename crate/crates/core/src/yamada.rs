//! The h-polynomial, flow polynomial, Yamada polynomial and its Jaeger
//! specialization.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::bracket::kauffman_bracket_with;
use crate::diagram::{crossing_to_vertex, double_link_diagram, smooth_crossing, Diagram, NodeKind, Smoothing};
use crate::graph::AbstractGraph;
use crate::laurent::{LaurentPoly, RationalFn};
use crate::union_find::UnionFind;
use crate::{Error, Limits};

/// Local replacement of one crossing in a Yamada state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YamadaState {
    /// A-smoothing, weight `A`.
    Plus,
    /// B-smoothing, weight `A^-1`.
    Minus,
    /// A new degree-4 vertex, weight 1.
    Zero,
}

/// `-A - 2 - A^-1`.
pub fn yamada_y() -> LaurentPoly {
    LaurentPoly::from_terms([(1, -1), (0, -2), (-1, -1)])
}

/// Abstract graph left after replacing each crossing as in `state` (listed
/// in crossing order). Graph vertices keep their order, followed by the
/// `Zero` crossings, followed by one vertex per closed loop.
pub fn resolve_yamada_state(d: &Diagram, state: &[YamadaState]) -> Result<AbstractGraph, Error> {
    let xs: Vec<usize> = d.crossings().collect();
    if xs.len() != state.len() {
        return Err(Error::Invalid(format!("state has {} entries for {} crossings", state.len(), xs.len())));
    }
    let mut kinds = vec![None; d.nodes().len()];
    for (k, &x) in xs.iter().enumerate() {
        kinds[x] = Some(state[k]);
    }
    Ok(state_graph(d, |n| kinds[n]))
}

fn state_graph(d: &Diagram, kind: impl Fn(usize) -> Option<YamadaState>) -> AbstractGraph {
    let m = d.arcs().len();
    let mut uf = UnionFind::new(m);
    let mut vid = vec![usize::MAX; d.nodes().len()];
    let mut n = 0;
    for ni in d.vertices() {
        vid[ni] = n;
        n += 1;
    }
    for (ni, node) in d.nodes().iter().enumerate() {
        if node.kind != NodeKind::Crossing {
            continue;
        }
        let s = &node.slots;
        match kind(ni).expect("crossing without a state") {
            YamadaState::Plus => {
                uf.union(s[0].arc, s[1].arc);
                uf.union(s[2].arc, s[3].arc);
            }
            YamadaState::Minus => {
                uf.union(s[0].arc, s[3].arc);
                uf.union(s[1].arc, s[2].arc);
            }
            YamadaState::Zero => {
                vid[ni] = n;
                n += 1;
            }
        }
    }
    // attachments of each arc class to vertices
    let mut attach: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (ni, node) in d.nodes().iter().enumerate() {
        if vid[ni] == usize::MAX {
            continue;
        }
        for s in &node.slots {
            let r = uf.find(s.arc);
            attach[r].push(vid[ni]);
        }
    }
    let mut edges = Vec::new();
    for a in 0..m {
        if uf.find(a) != a {
            continue;
        }
        match attach[a].as_slice() {
            [u, v] => edges.push((*u, *v)),
            [] => {
                edges.push((n, n));
                n += 1;
            }
            other => unreachable!("arc class with {} vertex ends", other.len()),
        }
    }
    AbstractGraph::new(n, edges)
}

/// `h(G; -1, y)` as the plain sum over all edge subsets.
pub fn h_subset_sum(g: &AbstractGraph, y: &LaurentPoly) -> LaurentPoly {
    if g.vertices == 0 {
        return LaurentPoly::one();
    }
    let e = g.edge_count();
    assert!(e < 40, "subset sum over {e} edges");
    let mut counts: HashMap<(bool, usize), u64> = HashMap::new();
    for mask in 0u64..1 << e {
        let kept = g.edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 0).map(|(_, &uv)| uv);
        let mu = g.mu_of(kept);
        let size = e - mask.count_ones() as usize;
        let beta = size + mu - g.vertices;
        *counts.entry((mu % 2 == 1, beta)).or_default() += 1;
    }
    let mut total = LaurentPoly::zero();
    for ((odd, beta), n) in counts {
        let c = if odd { -BigInt::from(n) } else { BigInt::from(n) };
        total += &y.pow(beta as u32).scale(&c);
    }
    total
}

/// `h(G; -1, y)` through `(-1)^(|E|-|V|) F(G; -y)`.
pub fn h_eval(g: &AbstractGraph, y: &LaurentPoly) -> LaurentPoly {
    if g.vertices == 0 {
        return LaurentPoly::one();
    }
    let f = flow_polynomial(g);
    let value = f.compose(&-y);
    if (g.edge_count() + g.vertices) % 2 == 1 {
        -value
    } else {
        value
    }
}

/// Flow polynomial `Σ_F (-1)^|F| t^β(G-F)` as a polynomial in `t`, by the
/// subset sum.
pub fn flow_polynomial_subset_sum(g: &AbstractGraph) -> LaurentPoly {
    let e = g.edge_count();
    assert!(e < 40, "subset sum over {e} edges");
    let mut total = LaurentPoly::zero();
    for mask in 0u64..1 << e {
        let kept = g.edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 0).map(|(_, &uv)| uv);
        let mu = g.mu_of(kept);
        let removed = mask.count_ones() as usize;
        let beta = e - removed + mu - g.vertices;
        let sign = if removed % 2 == 0 { 1 } else { -1 };
        total += &LaurentPoly::monomial(sign, beta as i32);
    }
    assert!(total.min_exp().unwrap_or(0) >= 0, "flow polynomial with negative powers");
    total
}

/// Flow polynomial by deletion and contraction.
pub fn flow_polynomial(g: &AbstractGraph) -> LaurentPoly {
    let edges: Vec<(usize, usize)> = g.edges.clone();
    let f = flow_rec(g.vertices, edges);
    assert!(f.min_exp().unwrap_or(0) >= 0, "flow polynomial with negative powers");
    f
}

fn flow_rec(n: usize, mut edges: Vec<(usize, usize)>) -> LaurentPoly {
    let t_minus_1 = LaurentPoly::from_terms([(1, 1), (0, -1)]);
    let before = edges.len();
    edges.retain(|&(u, v)| u != v);
    let loops = before - edges.len();
    let mut factor = LaurentPoly::one();
    for _ in 0..loops {
        factor = &factor * &t_minus_1;
    }
    if edges.is_empty() {
        return factor;
    }
    let mut degree = vec![0usize; n];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    if degree.iter().any(|&d| d == 1) {
        return LaurentPoly::zero();
    }
    // an edge at a vertex of least positive degree
    let v = (0..n).filter(|&v| degree[v] > 0).min_by_key(|&v| degree[v]).unwrap();
    let ei = edges.iter().position(|&(a, b)| a == v || b == v).unwrap();
    let (a, b) = edges[ei];
    let mut rest = edges.clone();
    rest.swap_remove(ei);
    if is_bridge(n, &rest, a, b) {
        return LaurentPoly::zero();
    }
    let contracted = contract(&rest, a, b);
    if degree[v] == 2 {
        // series pair: the other edge at v carries the same flow
        return &factor * &flow_rec(n - 1, contracted);
    }
    let with = flow_rec(n - 1, contracted);
    let without = flow_rec(n, rest);
    &factor * &(with - without)
}

fn is_bridge(n: usize, rest: &[(usize, usize)], a: usize, b: usize) -> bool {
    let mut uf = UnionFind::new(n);
    for &(u, v) in rest {
        uf.union(u, v);
    }
    uf.find(a) != uf.find(b)
}

/// Merges `b` into `a` and renumbers vertices to `0..n-1`.
fn contract(rest: &[(usize, usize)], a: usize, b: usize) -> Vec<(usize, usize)> {
    let idx = |v: usize| {
        let v = if v == b { a } else { v };
        if v > b {
            v - 1
        } else {
            v
        }
    };
    rest.iter().map(|&(u, v)| (idx(u), idx(v))).collect()
}

fn yamada_states(c: usize, limit: usize) -> Result<(), Error> {
    if c > limit {
        return Err(Error::Resource(format!("{c} crossings exceed the Yamada limit of {limit}")));
    }
    Ok(())
}

/// Yamada polynomial as the sum over all `3^c` states.
pub fn yamada_state_sum(d: &Diagram, limits: &Limits) -> Result<LaurentPoly, Error> {
    let xs: Vec<usize> = d.crossings().collect();
    let c = xs.len();
    yamada_states(c, limits.yamada)?;
    if d.arcs().is_empty() && d.nodes().is_empty() {
        return Ok(LaurentPoly::one());
    }
    let total = 3u64.pow(c as u32);
    // group states by resulting graph, then evaluate h once per graph
    let groups = (0..total)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<(usize, Vec<(usize, usize)>), HashMap<i32, u64>>, code| {
            let mut kinds = vec![None; d.nodes().len()];
            let mut rest = code;
            let mut exp = 0i32;
            for &x in &xs {
                let s = match rest % 3 {
                    0 => YamadaState::Plus,
                    1 => YamadaState::Minus,
                    _ => YamadaState::Zero,
                };
                exp += match s {
                    YamadaState::Plus => 1,
                    YamadaState::Minus => -1,
                    YamadaState::Zero => 0,
                };
                kinds[x] = Some(s);
                rest /= 3;
            }
            let g = state_graph(d, |n| kinds[n]);
            let mut key = g.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect::<Vec<_>>();
            key.sort_unstable();
            *acc.entry((g.vertices, key)).or_default().entry(exp).or_default() += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                let slot = a.entry(k).or_default();
                for (e, n) in v {
                    *slot.entry(e).or_default() += n;
                }
            }
            a
        });
    let y = yamada_y();
    let parts: Vec<LaurentPoly> = groups
        .into_par_iter()
        .map(|((n, edges), exps)| {
            let h = h_eval(&AbstractGraph::new(n, edges), &y);
            let mut weight = LaurentPoly::zero();
            for (e, count) in exps {
                weight += &LaurentPoly::monomial(count, e);
            }
            &weight * &h
        })
        .collect();
    Ok(parts.into_iter().sum())
}

/// Yamada polynomial by resolving one crossing at a time into both
/// smoothings and a degree-4 vertex.
pub fn yamada_skein(d: &Diagram, limits: &Limits) -> Result<LaurentPoly, Error> {
    yamada_states(d.crossing_count(), limits.yamada)?;
    skein_rec(d)
}

fn skein_rec(d: &Diagram) -> Result<LaurentPoly, Error> {
    let Some(x) = d.crossings().next() else {
        return Ok(h_eval(&d.underlying_graph(), &yamada_y()));
    };
    let plus = skein_rec(&smooth_crossing(d, x, Smoothing::A)?)?;
    let minus = skein_rec(&smooth_crossing(d, x, Smoothing::B)?)?;
    let zero = skein_rec(&crossing_to_vertex(d, x)?)?;
    Ok(plus.shift(1) + minus.shift(-1) + zero)
}

/// `-Y(A^4) / φ^exponent`.
pub fn jaeger_from_yamada(y: &LaurentPoly, exponent: i64) -> Result<RationalFn, Error> {
    let num = -y.substitute_power(4)?;
    let phi = LaurentPoly::phi();
    let r = if exponent >= 0 {
        RationalFn::new(num, phi.pow(exponent as u32))?
    } else {
        RationalFn::new(&num * &phi.pow((-exponent) as u32), LaurentPoly::one())?
    };
    Ok(r)
}

/// Jaeger specialization through the Yamada polynomial:
/// `-Y(A^4) / φ^(|E|-|V|+1)` for a diagram of a connected graph.
pub fn jaeger(d: &Diagram, limits: &Limits) -> Result<RationalFn, Error> {
    let g = d.underlying_graph();
    if g.is_empty() {
        return Err(Error::Unsupported("the Jaeger polynomial needs a nonempty graph".into()));
    }
    if g.mu() != 1 {
        return Err(Error::Unsupported(format!("the Jaeger polynomial needs a connected graph, found {} pieces", g.mu())));
    }
    let y = yamada_state_sum(d, limits)?;
    jaeger_from_yamada(&y, d.cycle_exponent())
}

fn require_knot(k: &Diagram) -> Result<(), Error> {
    k.require_link("a knot invariant")?;
    if k.component_count() != 1 {
        return Err(Error::Unsupported(format!("expected a knot, found {} components", k.component_count())));
    }
    Ok(())
}

/// Jaeger polynomial of a knot through its blackboard double:
/// `<K²> + 1/φ`.
pub fn jaeger_knot(k: &Diagram, limits: &Limits) -> Result<RationalFn, Error> {
    require_knot(k)?;
    let double = double_link_diagram(k)?;
    let b = kauffman_bracket_with(&double, limits)?;
    let inv_phi = RationalFn::recip_of(LaurentPoly::phi())?;
    Ok(&RationalFn::from(b) + &inv_phi)
}

/// `A^(-8 writhe) (<K²> + 1/φ)`.
pub fn normalized_jaeger_knot(k: &Diagram, limits: &Limits) -> Result<RationalFn, Error> {
    let j = jaeger_knot(k, limits)?;
    Ok(j.shift(-8 * k.writhe() as i32))
}

/// `A^(-2 writhe) Y` for a knot.
pub fn normalized_yamada_knot(k: &Diagram, limits: &Limits) -> Result<LaurentPoly, Error> {
    require_knot(k)?;
    Ok(yamada_state_sum(k, limits)?.shift(-2 * k.writhe() as i32))
}
