use proptest::prelude::*;
use yamada_core::bracket::{contraction_bracket, jones, naive_bracket, resolve_bracket_state};
use yamada_core::construct::{tangle_theta, TangleOp};
use yamada_core::diagram::{
    disjoint_union, double_link_diagram, is_isomorphic, parse_diagram, r1_add, r2_add, smooth_crossing, R2Side,
    Smoothing,
};
use yamada_core::theta::*;
use yamada_core::yamada::*;
use yamada_core::{AbstractGraph, Diagram, LaurentPoly, Limits};

fn arb_ops(max_cross: usize) -> impl Strategy<Value = Vec<TangleOp>> {
    (0usize..=3, prop::collection::vec((1i32..=4, any::<bool>()), 0..=max_cross), 0usize..=3).prop_map(
        |(cup, letters, cap)| {
            let mut ops = vec![TangleOp::Cup(cup)];
            ops.extend(letters.into_iter().map(|(i, pos)| TangleOp::Cross(if pos { i } else { -i })));
            ops.push(TangleOp::Cap(cap));
            ops
        },
    )
}

/// θ-curve diagrams with at most `max_cross` crossings.
fn arb_theta(max_cross: usize) -> impl Strategy<Value = ThetaDiagram> {
    arb_ops(max_cross).prop_filter_map("not a θ-curve", |ops| validate_theta(&tangle_theta(&ops).ok()?).ok())
}

/// Knots and 3-component links: subknots and boundary links of small θ-curves.
fn arb_link() -> impl Strategy<Value = Diagram> {
    (arb_theta(5), 0usize..=3).prop_map(|(t, which)| match which {
        0 => boundary_link(&t).unwrap(),
        k => subknot(&t, k).unwrap(),
    })
}

fn arb_graph() -> impl Strategy<Value = AbstractGraph> {
    (1usize..=5).prop_flat_map(|v| {
        prop::collection::vec((0..v, 0..v), 0..=9).prop_map(move |edges| AbstractGraph::new(v, edges))
    })
}

fn lim() -> Limits {
    Limits::default()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn loop_count_bounds(d in arb_link(), bits in any::<u64>()) {
        prop_assume!(d.crossing_count() <= 20);
        let c = d.crossing_count();
        let state: Vec<Smoothing> = (0..c).map(|k| if bits >> k & 1 == 1 { Smoothing::A } else { Smoothing::B }).collect();
        let loops = resolve_bracket_state(&d, &state).unwrap();
        prop_assert!(loops >= 1 && loops <= c + d.free_loop_count().max(1));
    }

    #[test]
    fn all_zero_state_graph(t in arb_theta(5)) {
        let d = t.diagram();
        let c = d.crossing_count();
        let g = resolve_yamada_state(d, &vec![YamadaState::Zero; c]).unwrap();
        prop_assert_eq!(g.vertices, 2 + c);
        prop_assert_eq!(g.edge_count(), 3 + 2 * c);
        let (mu, beta) = g.mu_beta();
        prop_assert_eq!(beta + g.vertices, g.edge_count() + mu);
    }

    #[test]
    fn doubling_counts(d in arb_link()) {
        let dd = double_link_diagram(&d).unwrap();
        prop_assert_eq!(dd.crossing_count(), 4 * d.crossing_count());
        prop_assert_eq!(dd.component_count(), 2 * d.component_count());
    }

    #[test]
    fn text_round_trip(t in arb_theta(5), l in arb_link()) {
        for d in [t.diagram().clone(), l] {
            let again = parse_diagram(&d.to_string()).unwrap();
            prop_assert!(is_isomorphic(&d, &again));
        }
    }

    #[test]
    fn bracket_skein(d in arb_link(), pick in any::<prop::sample::Index>()) {
        prop_assume!(d.crossing_count() > 0);
        let xs: Vec<usize> = d.crossings().collect();
        let x = xs[pick.index(xs.len())];
        let a = contraction_bracket(&smooth_crossing(&d, x, Smoothing::A).unwrap()).unwrap();
        let b = contraction_bracket(&smooth_crossing(&d, x, Smoothing::B).unwrap()).unwrap();
        prop_assert_eq!(contraction_bracket(&d).unwrap(), a.shift(1) + b.shift(-1));
    }

    #[test]
    fn reidemeister_moves(d in arb_link(), pick in any::<prop::sample::Index>(), pick2 in any::<prop::sample::Index>(), positive in any::<bool>(), left in any::<bool>()) {
        let arc = pick.index(d.arcs().len());
        let sign = if positive { 1 } else { -1 };
        let curled = r1_add(&d, arc, sign).unwrap();
        let factor = LaurentPoly::monomial(-1, 3 * sign);
        prop_assert_eq!(contraction_bracket(&curled).unwrap(), &factor * &contraction_bracket(&d).unwrap());
        prop_assert_eq!(jones(&curled).unwrap(), jones(&d).unwrap());
        let other = pick2.index(d.arcs().len());
        prop_assume!(other != arc);
        let side = if left { R2Side::Left } else { R2Side::Right };
        let pushed = r2_add(&d, arc, other, side).unwrap();
        prop_assert_eq!(jones(&pushed).unwrap(), jones(&d).unwrap());
    }

    #[test]
    fn contraction_matches_state_sum(d in arb_link()) {
        prop_assume!(d.crossing_count() <= 12);
        prop_assert_eq!(contraction_bracket(&d).unwrap(), naive_bracket(&d, 12).unwrap());
    }

    #[test]
    fn yamada_routes_agree(t in arb_theta(5)) {
        let d = t.diagram();
        prop_assert_eq!(yamada_skein(d, &lim()).unwrap(), yamada_state_sum(d, &lim()).unwrap());
    }

    #[test]
    fn h_oracle(g in arb_graph()) {
        let y = yamada_y();
        prop_assert_eq!(h_eval(&g, &y), h_subset_sum(&g, &y));
        prop_assert_eq!(flow_polynomial(&g), flow_polynomial_subset_sum(&g));
    }

    #[test]
    fn yamada_multiplicative(t in arb_theta(3), k in arb_link()) {
        prop_assume!(k.crossing_count() <= 4);
        let u = disjoint_union(t.diagram(), &k).unwrap();
        let lhs = yamada_state_sum(&u, &lim()).unwrap();
        let rhs = &yamada_state_sum(t.diagram(), &lim()).unwrap() * &yamada_state_sum(&k, &lim()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn curl_changes_yamada_by_a_monomial(t in arb_theta(4), pick in any::<prop::sample::Index>(), positive in any::<bool>()) {
        let d = t.diagram();
        let curled = r1_add(d, pick.index(d.arcs().len()), if positive { 1 } else { -1 }).unwrap();
        let before = yamada_state_sum(d, &lim()).unwrap();
        let ratio = yamada_state_sum(&curled, &lim()).unwrap().div_exact(&before).unwrap();
        let (c, _) = ratio.as_monomial().unwrap();
        prop_assert!(c == 1.into() || c == (-1).into());
        let ty = validate_theta(&curled).unwrap();
        prop_assert_eq!(normalized_yamada(&ty, &lim()).unwrap(), normalized_yamada(&t, &lim()).unwrap());
    }

    #[test]
    fn knot_jaeger_routes(t in arb_theta(5), i in 1usize..=3) {
        let k = subknot(&t, i).unwrap();
        prop_assert_eq!(jaeger(&k, &lim()).unwrap(), jaeger_knot(&k, &lim()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn theta_identities(t in arb_theta(4)) {
        let rep = twist_report(&t).unwrap();
        prop_assert!(rep.writhe_law && rep.component_law);
        let y4 = normalized_yamada(&t, &lim()).unwrap().substitute_power(4).unwrap();
        let j = normalized_jaeger(&t, &lim()).unwrap();
        prop_assert_eq!(yamada_core::RationalFn::from(y4), -j.scale_poly(&LaurentPoly::phi().pow(2)));
        prop_assert!(verify_prop2(&t, &lim()).unwrap().equal);
        prop_assert!(verify_prop3(&t, &lim()).unwrap().equal);
        prop_assert!(theorem1_report(&t, &lim()).unwrap().equal);
    }

    #[test]
    fn writhe_law_after_clasping(t in arb_theta(4), i in 1u8..=3, j in 1u8..=3, flip in any::<bool>()) {
        prop_assume!(i != j);
        let clasped = validate_theta(&yamada_core::construct::add_clasp(t.diagram(), i, j, flip).unwrap()).unwrap();
        prop_assert_eq!(associated_link(&clasped).unwrap().writhe(), -2 * twist_numbers(&clasped).unwrap().sum());
    }
}
