//! θ-curve diagrams: crossing-sign matrix, twist numbers, subknots, the
//! boundary link and the associated link, and exact checks of the identities
//! relating the Yamada polynomial to link brackets.

use std::fmt;

use crate::bracket::{jones_with, kauffman_bracket_with};
use crate::diagram::moves::{double_wiring, twist_chain};
use crate::diagram::wiring::Labels;
use crate::diagram::{delete_strands, double_link_diagram, Diagram, End, Keep, NodeKind, TwistRegion};
use crate::laurent::{LaurentPoly, RationalFn};
use crate::yamada::{jaeger, normalized_jaeger_knot, yamada_state_sum};
use crate::{Error, Limits};

/// A validated θ-curve diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaDiagram {
    diagram: Diagram,
    v1: usize,
    v2: usize,
    /// Arcs of each edge in order from `v1` to `v2`.
    paths: [Vec<usize>; 3],
}

impl ThetaDiagram {
    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn v1(&self) -> usize {
        self.v1
    }

    pub fn v2(&self) -> usize {
        self.v2
    }

    /// Arcs of edge `e` (1..=3) in order from `v1`.
    pub fn edge_path(&self, e: u8) -> &[usize] {
        &self.paths[usize::from(e) - 1]
    }

    /// Edge label (1..=3) of an arc.
    pub fn edge_of(&self, arc: usize) -> u8 {
        self.diagram.arc(arc).edge.expect("validated θ arcs carry edge labels")
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

/// Checks the θ-curve structure: two trivalent vertices `v1`, `v2`, each
/// edge label forming one path from `v1` to `v2`, and the prescribed cyclic
/// orders (e3, e2, e1) at `v1` and (e1, e2, e3) at `v2`.
pub fn validate_theta(d: &Diagram) -> Result<ThetaDiagram, Error> {
    let vs: Vec<usize> = d.vertices().collect();
    if vs.len() != 2 {
        return Err(bad(format!("a θ-curve needs exactly two vertices, found {}", vs.len())));
    }
    let v1 = d.node_index("v1").ok_or_else(|| bad("no vertex named v1"))?;
    let v2 = d.node_index("v2").ok_or_else(|| bad("no vertex named v2"))?;
    for v in [v1, v2] {
        let n = d.node(v);
        if n.kind != NodeKind::Vertex || n.slots.len() != 3 {
            return Err(bad(format!("vertex {} must have degree 3, found {}", n.name, n.slots.len())));
        }
    }
    for a in d.arcs() {
        if a.edge.is_none() {
            return Err(bad(format!("arc {} has no edge label", a.name)));
        }
    }
    let order = |v: usize, end: End, want: [u8; 3], name: &str| -> Result<(), Error> {
        let slots = &d.node(v).slots;
        if slots.iter().any(|s| s.end != end) {
            return Err(bad(format!("edges must run from v1 to v2; wrong direction at {name}")));
        }
        let labels: Vec<u8> = slots.iter().map(|s| d.arc(s.arc).edge.unwrap()).collect();
        let ok = (0..3).any(|r| (0..3).all(|k| labels[(k + r) % 3] == want[k]));
        if ok {
            Ok(())
        } else {
            Err(bad(format!("cyclic order at {name} reads {labels:?}, expected a rotation of {want:?}")))
        }
    };
    order(v1, End::Tail, [3, 2, 1], "v1")?;
    order(v2, End::Head, [1, 2, 3], "v2")?;

    let mut paths: [Vec<usize>; 3] = Default::default();
    for slot in &d.node(v1).slots {
        let e = d.arc(slot.arc).edge.unwrap();
        let mut path = vec![slot.arc];
        let mut cur = slot.arc;
        while let Some(next) = d.next_arc(cur) {
            if d.arc(next).edge != Some(e) {
                return Err(bad(format!("edge e{e} is broken at arc {}", d.arc(next).name)));
            }
            path.push(next);
            cur = next;
            if path.len() > d.arcs().len() {
                return Err(bad(format!("edge e{e} does not reach v2")));
            }
        }
        if d.arc(cur).head.map(|h| h.node) != Some(v2) {
            return Err(bad(format!("edge e{e} does not end at v2")));
        }
        let total = d.arcs().iter().filter(|a| a.edge == Some(e)).count();
        if total != path.len() {
            return Err(bad(format!("edge e{e} is not a single path: {} of its {total} arcs reached from v1", path.len())));
        }
        paths[usize::from(e) - 1] = path;
    }
    Ok(ThetaDiagram { diagram: d.clone(), v1, v2, paths })
}

/// Signed crossing counts between (and within) the three edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OmegaMatrix {
    pub w: [[i64; 3]; 3],
}

impl OmegaMatrix {
    /// Entry for edges `i`, `j` in 1..=3.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.w[i - 1][j - 1]
    }
}

impl fmt::Display for OmegaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "w11={} w22={} w33={} w12={} w13={} w23={}",
            self.get(1, 1),
            self.get(2, 2),
            self.get(3, 3),
            self.get(1, 2),
            self.get(1, 3),
            self.get(2, 3)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TwistTriple {
    pub n: [i64; 3],
}

impl TwistTriple {
    pub fn sum(&self) -> i64 {
        self.n.iter().sum()
    }
}

impl fmt::Display for TwistTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n[0], self.n[1], self.n[2])
    }
}

pub fn omega_matrix(t: &ThetaDiagram) -> OmegaMatrix {
    let d = &t.diagram;
    let mut w = [[0i64; 3]; 3];
    for x in d.crossings() {
        let s = &d.node(x).slots;
        let under = usize::from(t.edge_of(s[0].arc)) - 1;
        let over = usize::from(t.edge_of(s[1].arc)) - 1;
        let sign = i64::from(d.crossing_sign(x));
        w[under][over] += sign;
        if under != over {
            w[over][under] += sign;
        }
    }
    OmegaMatrix { w }
}

/// `n_i = -ω_ii + (ω_ij + ω_ik - ω_jk) / 2`.
pub fn twist_numbers(t: &ThetaDiagram) -> Result<TwistTriple, Error> {
    twists_from_omega(&omega_matrix(t))
}

pub fn twists_from_omega(w: &OmegaMatrix) -> Result<TwistTriple, Error> {
    let cross = w.get(1, 2) + w.get(1, 3) + w.get(2, 3);
    if cross % 2 != 0 {
        return Err(bad(format!("ω12 + ω13 + ω23 = {cross} is odd; the diagram is mis-encoded")));
    }
    let mut n = [0i64; 3];
    for i in 1..=3 {
        let (j, k) = others(i);
        n[i - 1] = -w.get(i, i) + (w.get(i, j) + w.get(i, k) - w.get(j, k)) / 2;
    }
    Ok(TwistTriple { n })
}

fn others(i: usize) -> (usize, usize) {
    match i {
        1 => (2, 3),
        2 => (1, 3),
        _ => (1, 2),
    }
}

/// The knot `e_j ∪ e_k` with `{i, j, k} = {1, 2, 3}`.
pub fn subknot(t: &ThetaDiagram, i: usize) -> Result<Diagram, Error> {
    if !(1..=3).contains(&i) {
        return Err(bad(format!("subknot index {i} is not in 1..=3")));
    }
    let (j, k) = others(i);
    delete_strands(&t.diagram, &Keep::Edges(vec![j as u8, k as u8]))
}

/// Component carrying each side of band `e`: the right-hand side (running
/// with the edge) and the left-hand side (running against it).
fn band_components(e: u8) -> (u32, u32) {
    let e = u32::from(e);
    let prev = if e == 1 { 3 } else { e - 1 };
    let next = if e == 3 { 1 } else { e + 1 };
    (prev, next)
}

/// Boundary of the band surface around the θ diagram with `twists[i]` full
/// twists in band `e_i` next to `v1`.
fn band_link(t: &ThetaDiagram, twists: [i64; 3]) -> Result<Diagram, Error> {
    let d = &t.diagram;
    let mut doubled = double_wiring(d);
    let w = &mut doubled.wiring;
    for (ai, arc) in d.arcs().iter().enumerate() {
        let (r, l) = band_components(arc.edge.unwrap());
        w.conns[doubled.right[ai]].as_mut().unwrap().comp = Some(r);
        w.conns[doubled.left[ai]].as_mut().unwrap().comp = Some(l);
    }
    for e in 1..=3u8 {
        let n = twists[usize::from(e) - 1];
        let first = t.edge_path(e)[0];
        let (rl, ll) = band_components(e);
        if let Some([bl, br, tl, tr]) = twist_chain(w, n, &format!("e{e}")) {
            let right = w.take_conn(doubled.right[first]);
            let left = w.take_conn(doubled.left[first]);
            let lr = Labels { edge: None, comp: Some(rl) };
            let lf = Labels { edge: None, comp: Some(ll) };
            w.connect(right.tail, br, true, lr);
            w.connect(tr, right.head, true, lr);
            w.connect(bl, left.head, true, lf);
            w.connect(left.tail, tl, true, lf);
        }
    }
    let link = w.build()?;
    if link.component_labels().into_iter().collect::<Vec<_>>() != [1, 2, 3] || link.component_count() != 3 {
        return Err(bad("band boundary does not have three components l1, l2, l3"));
    }
    Ok(link)
}

/// The 3-component link `L` bounding the thickened diagram, with `l_i`
/// carrying component label `i`.
pub fn boundary_link(t: &ThetaDiagram) -> Result<Diagram, Error> {
    band_link(t, [0; 3])
}

/// `L(n1, n2, n3)`: the boundary link with `n_i` full twists in band `e_i`.
pub fn associated_link(t: &ThetaDiagram) -> Result<Diagram, Error> {
    let n = twist_numbers(t)?;
    band_link(t, n.n)
}

/// `A^(2(n-1)) (1 - A^(-8n)) / (1 + A^-4)`.
pub fn f_n(n: i64) -> RationalFn {
    let n = n as i32;
    let num = &LaurentPoly::monomial(1, 2 * (n - 1)) * &(LaurentPoly::one() - LaurentPoly::monomial(1, -8 * n));
    RationalFn::new(num, LaurentPoly::from_terms([(0, 1), (-4, 1)])).expect("nonzero denominator")
}

/// Checks `<n twists> = A^(2n) <no twist> + f_n <cut>` on a 2-strand region.
pub fn verify_twist_reduction(d: &Diagram, region: TwistRegion, n: i64, limits: &Limits) -> Result<bool, Error> {
    use crate::diagram::{cap_region, insert_twists};
    let twisted = insert_twists(d, region, n)?;
    let cut = cap_region(d, region)?;
    let lhs = RationalFn::from(kauffman_bracket_with(&twisted, limits)?);
    let a0 = kauffman_bracket_with(d, limits)?;
    let ainf = kauffman_bracket_with(&cut, limits)?;
    let rhs = &RationalFn::from(a0.shift(2 * n as i32)) + &f_n(n).scale_poly(&ainf);
    Ok(lhs == rhs)
}

/// The addition laws for `f`:
/// `A^(2n) f_m + A^(-6m) f_n = f_(n+m) = A^(2m) f_n + A^(-6n) f_m`
/// and their average, checked after clearing the factor 1/2.
pub fn verify_twist_addition(n: i64, m: i64) -> bool {
    let (fn_, fm, fnm) = (f_n(n), f_n(m), f_n(n + m));
    let (ni, mi) = (n as i32, m as i32);
    let left = fm.shift(2 * ni) + fn_.shift(-6 * mi);
    let right = fn_.shift(2 * mi) + fm.shift(-6 * ni);
    let one_plus = |k: i32| LaurentPoly::one() + LaurentPoly::monomial(1, -8 * k);
    let averaged = fm.scale_poly(&one_plus(ni)).shift(2 * ni) + fn_.scale_poly(&one_plus(mi)).shift(2 * mi);
    let twice = fnm.scale_poly(&LaurentPoly::constant(2));
    left == fnm && right == fnm && averaged == twice
}

/// `A^(2(n1+n2+n3)) Y`.
pub fn normalized_yamada(t: &ThetaDiagram, limits: &Limits) -> Result<LaurentPoly, Error> {
    let n = twist_numbers(t)?;
    Ok(yamada_state_sum(&t.diagram, limits)?.shift(2 * n.sum() as i32))
}

/// `A^(8(n1+n2+n3)) 𝔍`.
pub fn normalized_jaeger(t: &ThetaDiagram, limits: &Limits) -> Result<RationalFn, Error> {
    let n = twist_numbers(t)?;
    Ok(jaeger(&t.diagram, limits)?.shift(8 * n.sum() as i32))
}

/// Two sides of an identity and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub lhs: RationalFn,
    pub rhs: RationalFn,
    pub equal: bool,
}

impl IdentityReport {
    fn new(lhs: RationalFn, rhs: RationalFn) -> Self {
        let equal = lhs == rhs;
        Self { lhs: lhs.tidy(), rhs: rhs.tidy(), equal }
    }
}

/// Brackets of `L` and of the doubled components `l_i^(2)`.
#[derive(Debug, Clone)]
pub struct LinkBrackets {
    pub link: LaurentPoly,
    pub doubled: [LaurentPoly; 3],
}

pub fn link_brackets(t: &ThetaDiagram, limits: &Limits) -> Result<LinkBrackets, Error> {
    let l = boundary_link(t)?;
    let link = kauffman_bracket_with(&l, limits)?;
    let mut doubled: [LaurentPoly; 3] = Default::default();
    for i in 0..3 {
        let li = delete_strands(&l, &Keep::Components(vec![i as u32 + 1]))?;
        doubled[i] = kauffman_bracket_with(&double_link_diagram(&li)?, limits)?;
    }
    Ok(LinkBrackets { link, doubled })
}

fn phi_recip(power: u32) -> RationalFn {
    RationalFn::new(LaurentPoly::one(), LaurentPoly::phi().pow(power)).expect("φ is nonzero")
}

/// `<L> + (1/φ) Σ <l_i^(2)> + 2/φ²`.
pub fn bracket_route_jaeger(b: &LinkBrackets) -> RationalFn {
    let sum: LaurentPoly = b.doubled.iter().cloned().sum();
    RationalFn::from(b.link.clone()) + phi_recip(1).scale_poly(&sum) + phi_recip(2).scale_poly(&LaurentPoly::constant(2))
}

/// Yamada route against bracket route for `Y(A^4) = -φ² 𝔍`.
pub fn verify_prop1(t: &ThetaDiagram, limits: &Limits) -> Result<IdentityReport, Error> {
    let y4 = yamada_state_sum(&t.diagram, limits)?.substitute_power(4)?;
    let j = bracket_route_jaeger(&link_brackets(t, limits)?);
    let phi2 = LaurentPoly::phi().pow(2);
    Ok(IdentityReport::new(RationalFn::from(y4), -j.scale_poly(&phi2)))
}

/// `V(L(n))` against the closed form in `<L>`, `<l_i^(2)>` and the `n_i`.
pub fn verify_prop2(t: &ThetaDiagram, limits: &Limits) -> Result<IdentityReport, Error> {
    let n = twist_numbers(t)?;
    let lhs = jones_with(&associated_link(t)?, limits)?;
    let b = link_brackets(t, limits)?;
    Ok(IdentityReport::new(RationalFn::from(lhs), associated_jones_closed_form(&b, &n)))
}

/// `A^(8Σn) { <L> + Σ (1 - A^(-8 n_i))/φ <l_i^(2)> + (2 - Σ A^(-8 n_i) + A^(-8 Σn))/φ² }`.
pub fn associated_jones_closed_form(b: &LinkBrackets, n: &TwistTriple) -> RationalFn {
    let m = |k: i64| LaurentPoly::monomial(1, -8 * k as i32);
    let mut inner = RationalFn::from(b.link.clone());
    let mut last = LaurentPoly::constant(2) + m(n.sum());
    for i in 0..3 {
        let coeff = LaurentPoly::one() - m(n.n[i]);
        inner = inner + phi_recip(1).scale_poly(&(&coeff * &b.doubled[i]));
        last = last - m(n.n[i]);
    }
    inner = inner + phi_recip(2).scale_poly(&last);
    inner.shift(8 * n.sum() as i32)
}

/// Yamada-route `𝔍` against `<L> + (1/φ) Σ <l_i^(2)> + 2/φ²`.
pub fn verify_prop3(t: &ThetaDiagram, limits: &Limits) -> Result<IdentityReport, Error> {
    let lhs = jaeger(&t.diagram, limits)?;
    let rhs = bracket_route_jaeger(&link_brackets(t, limits)?);
    Ok(IdentityReport::new(lhs, rhs))
}

/// `𝔍̃(Θ) - V(L(n))` against `(1/φ) Σ 𝔍̃(K_i) - 1/φ²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Report {
    pub difference: RationalFn,
    pub rhs: RationalFn,
    pub equal: bool,
    pub subknots: [RationalFn; 3],
}

pub fn theorem1_report(t: &ThetaDiagram, limits: &Limits) -> Result<Theorem1Report, Error> {
    let jt = normalized_jaeger(t, limits)?;
    let v = jones_with(&associated_link(t)?, limits)?;
    let difference = jt - RationalFn::from(v);
    let subknots: [RationalFn; 3] = [
        normalized_jaeger_knot(&subknot(t, 1)?, limits)?,
        normalized_jaeger_knot(&subknot(t, 2)?, limits)?,
        normalized_jaeger_knot(&subknot(t, 3)?, limits)?,
    ];
    let sum: RationalFn = subknots.iter().cloned().sum();
    let rhs = &(&sum * &phi_recip(1)) - &phi_recip(2);
    let equal = difference == rhs;
    Ok(Theorem1Report { difference: difference.tidy(), rhs: rhs.tidy(), equal, subknots: subknots.map(|s| s.tidy()) })
}

/// `-3 + 2/φ²`.
pub fn brunnian_difference() -> RationalFn {
    RationalFn::from(LaurentPoly::constant(-3)) + phi_recip(2).scale_poly(&LaurentPoly::constant(2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corollary1Report {
    /// Every subknot has Jones polynomial 1 (necessary for unknotted).
    pub subknots_trivial_proxy: bool,
    pub difference: RationalFn,
    pub matches: bool,
}

pub fn corollary1_check(t: &ThetaDiagram, limits: &Limits) -> Result<Corollary1Report, Error> {
    let mut proxy = true;
    for i in 1..=3 {
        proxy &= jones_with(&subknot(t, i)?, limits)?.is_one();
    }
    let jt = normalized_jaeger(t, limits)?;
    let v = jones_with(&associated_link(t)?, limits)?;
    let difference = jt - RationalFn::from(v);
    let matches = difference == brunnian_difference();
    Ok(Corollary1Report { subknots_trivial_proxy: proxy, difference: difference.tidy(), matches })
}

/// Writhe checks on the associated link and its pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistReport {
    pub omega: OmegaMatrix,
    pub twists: TwistTriple,
    pub writhe: i64,
    /// `writhe(L(n)) = -2 Σ n`.
    pub writhe_law: bool,
    /// `writhe(l_i) = -(n_j + n_k)` for each `i`.
    pub component_writhes: [i64; 3],
    pub component_law: bool,
}

pub fn twist_report(t: &ThetaDiagram) -> Result<TwistReport, Error> {
    let omega = omega_matrix(t);
    let twists = twists_from_omega(&omega)?;
    let writhe = associated_link(t)?.writhe();
    let l = boundary_link(t)?;
    let mut component_writhes = [0; 3];
    let mut component_law = true;
    for i in 1..=3usize {
        let li = delete_strands(&l, &Keep::Components(vec![i as u32]))?;
        component_writhes[i - 1] = li.writhe();
        let (j, k) = others(i);
        component_law &= li.writhe() == -(twists.n[j - 1] + twists.n[k - 1]);
    }
    Ok(TwistReport { omega, twists, writhe, writhe_law: writhe == -2 * twists.sum(), component_writhes, component_law })
}
