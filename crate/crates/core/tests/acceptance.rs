//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use yamada_core::bracket::{contraction_bracket, naive_bracket};
use yamada_core::construct::{add_clasp, trivial_theta};
use yamada_core::diagram::{delete_strands, double_link_diagram, r1_add, r2_add, Keep, R2Side, TwistRegion};
use yamada_core::theta::*;
use yamada_core::yamada::{
    h_eval, h_subset_sum, resolve_yamada_state, yamada_skein, yamada_state_sum, yamada_y, YamadaState,
};
use yamada_core::{fixtures, AbstractGraph, Diagram, Limits, LaurentPoly, RationalFn};

type Outcome = Result<String, String>;

fn naive() -> Limits {
    Limits { fast_bracket: false, ..Limits::default() }
}

fn fast() -> Limits {
    Limits::default()
}

fn theta_fixture(name: &str) -> ThetaDiagram {
    validate_theta(&fixtures::load(name).unwrap()).unwrap()
}

fn theta_fixture_names() -> Vec<&'static str> {
    fixtures::names().filter(|n| n.ends_with("theta") || n.starts_with("move-")).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, budget: Duration, what: &str) -> Result<(), String> {
    let spent = t.elapsed();
    ensure(spent <= budget, || format!("{what} took {spent:?}, budget {budget:?}"))
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let t = theta_fixture("trivial-theta");
    let expected: LaurentPoly = "-A^2 - A - 2 - A^-1 - A^-2".parse().map_err(e)?;
    let by_states = yamada_state_sum(t.diagram(), &naive()).map_err(e)?;
    let by_skein = yamada_skein(t.diagram(), &naive()).map_err(e)?;
    ensure(by_states == expected, || format!("state sum gave {by_states}"))?;
    ensure(by_skein == expected, || format!("skein gave {by_skein}"))?;
    let brackets = link_brackets(&t, &naive()).map_err(e)?;
    let j = bracket_route_jaeger(&brackets);
    let phi2 = LaurentPoly::phi().pow(2);
    let via_brackets = -j.scale_poly(&phi2);
    let y4 = RationalFn::from(expected.substitute_power(4).map_err(e)?);
    ensure(y4 == via_brackets, || format!("Y(A^4) = {y4} but -φ²𝔍 = {}", via_brackets.tidy()))?;
    let cor = corollary1_check(&t, &naive()).map_err(e)?;
    ensure(cor.matches, || format!("difference {}", cor.difference))?;
    within(start, Duration::from_secs(1), "trivial θ suite")?;
    Ok(format!("Y = {expected} three ways; difference = {}", cor.difference))
}

/// Places `k` decorations, each a curl or a clasp, on random arcs.
fn decorate(rng: &mut StdRng, base: &Diagram, plan: &[Deco]) -> Result<Diagram, String> {
    let mut d = base.clone();
    for deco in plan {
        let t = validate_theta(&d).map_err(e)?;
        let pick = |rng: &mut StdRng, edge: u8| {
            let path = t.edge_path(edge);
            path[rng.gen_range(0..path.len())]
        };
        d = match *deco {
            Deco::Curl(edge, sign) => r1_add(&d, pick(rng, edge), sign).map_err(e)?,
            Deco::Clasp(over, under, flip) => {
                if rng.gen_bool(0.5) {
                    add_clasp(&d, over, under, flip).map_err(e)?
                } else {
                    let side = if flip { R2Side::Right } else { R2Side::Left };
                    let n = d.nodes().len();
                    let r2 = r2_add(&d, pick(rng, over), pick(rng, under), side).map_err(e)?;
                    let x = r2.node_index(&format!("r2.{n}b")).ok_or("missing clasp crossing")?;
                    yamada_core::diagram::crossing_change(&r2, x).map_err(e)?
                }
            }
        };
    }
    Ok(d)
}

#[derive(Clone, Copy, Debug)]
enum Deco {
    Curl(u8, i32),
    Clasp(u8, u8, bool),
}

fn decoration_plans() -> Vec<Vec<Deco>> {
    let mut curls = Vec::new();
    for edge in 1..=3 {
        for sign in [1, -1] {
            curls.push(Deco::Curl(edge, sign));
        }
    }
    let mut clasps = Vec::new();
    for over in 1..=3 {
        for under in 1..=3 {
            if over != under {
                for flip in [false, true] {
                    clasps.push(Deco::Clasp(over, under, flip));
                }
            }
        }
    }
    let mut plans: Vec<Vec<Deco>> = vec![vec![]];
    // multisets of up to three curls
    for a in 0..curls.len() {
        plans.push(vec![curls[a]]);
        for b in a..curls.len() {
            plans.push(vec![curls[a], curls[b]]);
            for c in b..curls.len() {
                plans.push(vec![curls[a], curls[b], curls[c]]);
            }
        }
    }
    for &cl in &clasps {
        plans.push(vec![cl]);
        for &cu in &curls {
            plans.push(vec![cl, cu]);
        }
    }
    plans
}

fn criterion2() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x7e7a);
    let base = trivial_theta();
    let mut cases = 0;
    let mut triples = BTreeSet::new();
    for plan in decoration_plans() {
        let d = decorate(&mut rng, &base, &plan)?;
        let t = validate_theta(&d).map_err(e)?;
        let n = twist_numbers(&t).map_err(e)?;
        if n.n.iter().map(|x| x.abs()).sum::<i64>() > 4 || d.crossing_count() > 3 {
            continue;
        }
        let rep = verify_prop2(&t, &naive()).map_err(e)?;
        ensure(rep.equal, || format!("plan {plan:?}, n = {n}: V = {} but closed form = {}", rep.lhs, rep.rhs))?;
        triples.insert(n.n);
        cases += 1;
    }
    // every triple with Σ|n_i| ≤ 3 is reachable by curls alone
    let mut missing = Vec::new();
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            for c in -3i64..=3 {
                if a.abs() + b.abs() + c.abs() <= 3 && !triples.contains(&[a, b, c]) {
                    missing.push([a, b, c]);
                }
            }
        }
    }
    ensure(missing.is_empty(), || format!("twist triples not covered: {missing:?}"))?;
    ensure(cases >= 50, || format!("only {cases} cases"))?;
    within(start, Duration::from_secs(300), "associated link sweep")?;
    Ok(format!("{cases} decorated diagrams, {} distinct twist triples", triples.len()))
}

fn criterion3() -> Outcome {
    let mut checked = 0;
    for name in theta_fixture_names() {
        let t = theta_fixture(name);
        if t.diagram().crossing_count() > 3 {
            continue;
        }
        let p3 = verify_prop3(&t, &naive()).map_err(e)?;
        ensure(p3.equal, || format!("{name}: Yamada route {} vs bracket route {}", p3.lhs, p3.rhs))?;
        let p1 = verify_prop1(&t, &naive()).map_err(e)?;
        ensure(p1.equal, || format!("{name}: Y(A^4) {} vs -φ²𝔍 {}", p1.lhs, p1.rhs))?;
        checked += 1;
    }
    Ok(format!("{checked} θ fixtures with at most 3 crossings"))
}

fn criterion4() -> Outcome {
    for name in ["trivial-theta", "curl-theta", "clasp-theta", "trefoil-theta"] {
        let start = Instant::now();
        let rep = theorem1_report(&theta_fixture(name), &naive()).map_err(e)?;
        ensure(rep.equal, || format!("{name}: difference {} vs {}", rep.difference, rep.rhs))?;
        within(start, Duration::from_secs(60), name)?;
    }
    let start = Instant::now();
    let rep = theorem1_report(&theta_fixture("kinoshita-theta"), &fast()).map_err(e)?;
    ensure(rep.equal, || format!("kinoshita-theta: difference {} vs {}", rep.difference, rep.rhs))?;
    within(start, Duration::from_secs(600), "kinoshita-theta")?;
    Ok(format!("5 θ-curves; kinoshita-theta in {:?}", start.elapsed()))
}

fn criterion5() -> Outcome {
    let k = theta_fixture("kinoshita-theta");
    let rep = corollary1_check(&k, &fast()).map_err(e)?;
    ensure(rep.subknots_trivial_proxy, || "a subknot has non-trivial Jones polynomial".into())?;
    ensure(rep.matches, || format!("difference {}", rep.difference))?;
    let yk = normalized_yamada(&k, &fast()).map_err(e)?;
    let y0 = normalized_yamada(&theta_fixture("trivial-theta"), &fast()).map_err(e)?;
    ensure(yk != y0, || "normalized Yamada does not separate kinoshita-theta from the trivial θ".into())?;
    Ok(format!("difference = {}; normalized Y = {yk}", rep.difference))
}

fn criterion6() -> Outcome {
    let regions = [("twist-annulus", TwistRegion { left: 0, right: 1 }), ("trefoil", TwistRegion { left: 3, right: 0 })];
    for (name, region) in regions {
        let d = fixtures::load(name).map_err(e)?;
        for n in -3..=3 {
            let ok = verify_twist_reduction(&d, region, n, &naive()).map_err(e)?;
            ensure(ok, || format!("{name}, n = {n}"))?;
        }
    }
    for n in -3..=3 {
        for m in -3..=3 {
            ensure(verify_twist_addition(n, m), || format!("addition law fails at n = {n}, m = {m}"))?;
        }
    }
    Ok("two closures, n in -3..=3; addition laws on [-3, 3]²".into())
}

fn criterion7() -> Outcome {
    let names = theta_fixture_names();
    for name in &names {
        let rep = twist_report(&theta_fixture(name)).map_err(e)?;
        ensure(rep.writhe_law, || format!("{name}: writhe {} with n = {}", rep.writhe, rep.twists))?;
    }
    Ok(format!("{} θ fixtures", names.len()))
}

/// Every diagram derived from the fixtures: the fixtures, subknots, boundary
/// and associated links, and doubled boundary components.
fn corpus() -> Result<Vec<(String, Diagram)>, String> {
    let mut out = Vec::new();
    for name in fixtures::names() {
        let d = fixtures::load(name).map_err(e)?;
        out.push((name.to_string(), d.clone()));
        let Ok(t) = validate_theta(&d) else { continue };
        for i in 1..=3 {
            out.push((format!("{name}/K{i}"), subknot(&t, i).map_err(e)?));
        }
        let l = boundary_link(&t).map_err(e)?;
        for i in 1..=3u32 {
            let li = delete_strands(&l, &Keep::Components(vec![i])).map_err(e)?;
            out.push((format!("{name}/l{i}(2)"), double_link_diagram(&li).map_err(e)?));
        }
        out.push((format!("{name}/L"), l));
        out.push((format!("{name}/L(n)"), associated_link(&t).map_err(e)?));
    }
    Ok(out)
}

fn state_graphs(d: &Diagram) -> Result<Vec<AbstractGraph>, String> {
    let c = d.crossing_count();
    let mut out = vec![d.underlying_graph()];
    for code in 0..3usize.pow(c as u32) {
        let state: Vec<YamadaState> = (0..c)
            .map(|k| match code / 3usize.pow(k as u32) % 3 {
                0 => YamadaState::Plus,
                1 => YamadaState::Minus,
                _ => YamadaState::Zero,
            })
            .collect();
        out.push(resolve_yamada_state(d, &state).map_err(e)?);
    }
    Ok(out)
}

fn criterion8() -> Outcome {
    let y = yamada_y();
    let mut graphs = BTreeSet::new();
    for name in fixtures::names() {
        let d = fixtures::load(name).map_err(e)?;
        if d.crossing_count() > 6 {
            continue;
        }
        for g in state_graphs(&d)? {
            if g.edge_count() <= 12 {
                graphs.insert((g.vertices, g.edges.clone()));
            }
        }
    }
    for (v, edges) in &graphs {
        let g = AbstractGraph::new(*v, edges.clone());
        let (fast_h, slow_h) = (h_eval(&g, &y), h_subset_sum(&g, &y));
        ensure(fast_h == slow_h, || format!("h differs on {g:?}: {fast_h} vs {slow_h}"))?;
    }
    let mut diagrams = 0;
    for (name, d) in corpus()? {
        if !d.is_link() || d.crossing_count() > 12 {
            continue;
        }
        let fast_b = contraction_bracket(&d).map_err(e)?;
        let slow_b = naive_bracket(&d, 12).map_err(e)?;
        ensure(fast_b == slow_b, || format!("{name}: contraction {fast_b} vs state sum {slow_b}"))?;
        diagrams += 1;
    }
    Ok(format!("{} graphs, {diagrams} link diagrams, no discrepancies", graphs.len()))
}

fn criterion9() -> Outcome {
    for k in 1..=6 {
        let before = theta_fixture(&format!("move-{k}-before"));
        let after = theta_fixture(&format!("move-{k}-after"));
        let (yb, ya) = (normalized_yamada(&before, &fast()).map_err(e)?, normalized_yamada(&after, &fast()).map_err(e)?);
        ensure(yb == ya, || format!("move {k}: normalized Y {yb} vs {ya}"))?;
        let (jb, ja) = (normalized_jaeger(&before, &fast()).map_err(e)?, normalized_jaeger(&after, &fast()).map_err(e)?);
        ensure(jb == ja, || format!("move {k}: normalized 𝔍 {jb} vs {ja}"))?;
    }
    let mut factors = Vec::new();
    for (b, a) in [("move-1-before", "move-1-after"), ("trivial-theta", "curl-theta")] {
        let yb = yamada_state_sum(theta_fixture(b).diagram(), &fast()).map_err(e)?;
        let ya = yamada_state_sum(theta_fixture(a).diagram(), &fast()).map_err(e)?;
        let ratio = ya.div_exact(&yb).ok_or_else(|| format!("{a}: Y is not a multiple of Y({b})"))?;
        let (c, k) = ratio.as_monomial().ok_or_else(|| format!("{a}: Y ratio {ratio} is not a monomial"))?;
        ensure(c == 1.into() || c == (-1).into(), || format!("{a}: Y ratio {ratio}"))?;
        factors.push(format!("{}A^{k}", if c < 0.into() { "-" } else { "" }));
    }
    Ok(format!("6 move pairs invariant; curl factors {}", factors.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("trivial θ suite", criterion1),
        ("associated link closed form", criterion2),
        ("two routes to 𝔍", criterion3),
        ("difference formula", criterion4),
        ("brunnian difference", criterion5),
        ("twist calculus", criterion6),
        ("writhe law", criterion7),
        ("oracle equivalence", criterion8),
        ("move invariance", criterion9),
    ];
    let filter = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let label = format!("criterion {} ({title})", i + 1);
        if filter.as_deref().is_some_and(|f| !label.contains(f)) {
            continue;
        }
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("PASS {label} [{ms} ms]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {label} [{ms} ms]: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
