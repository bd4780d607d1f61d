//! Kauffman bracket, writhe and Jones polynomial of link diagrams.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::diagram::{Diagram, Smoothing};
use crate::laurent::LaurentPoly;
use crate::union_find::UnionFind;
use crate::{Error, Limits};

/// Loops left after smoothing each crossing of `d` as in `state`, listed in
/// crossing order.
pub fn resolve_bracket_state(d: &Diagram, state: &[Smoothing]) -> Result<usize, Error> {
    d.require_link("a bracket state")?;
    let xs: Vec<usize> = d.crossings().collect();
    if xs.len() != state.len() {
        return Err(Error::Invalid(format!("state has {} entries for {} crossings", state.len(), xs.len())));
    }
    Ok(d.loops_for_state(&xs, |k| state[k] == Smoothing::A))
}

/// Bracket with the default limits.
pub fn kauffman_bracket(d: &Diagram) -> Result<LaurentPoly, Error> {
    kauffman_bracket_with(d, &Limits::default())
}

/// Bracket using contraction when `fast_bracket` is set, else the state sum
/// up to `naive_bracket` crossings.
pub fn kauffman_bracket_with(d: &Diagram, limits: &Limits) -> Result<LaurentPoly, Error> {
    d.require_link("the Kauffman bracket")?;
    if limits.fast_bracket {
        contraction_bracket(d)
    } else {
        naive_bracket(d, limits.naive_bracket)
    }
}

fn delta_powers(n: usize) -> Vec<LaurentPoly> {
    let delta = LaurentPoly::delta();
    let mut out = vec![LaurentPoly::one()];
    for k in 1..=n {
        let next = &out[k - 1] * &delta;
        out.push(next);
    }
    out
}

/// Sum over all `2^c` states of `A^(#A - #B) δ^(loops - 1)`.
pub fn naive_bracket(d: &Diagram, max_crossings: usize) -> Result<LaurentPoly, Error> {
    d.require_link("the Kauffman bracket")?;
    let xs: Vec<usize> = d.crossings().collect();
    let c = xs.len();
    if c > max_crossings || c > 40 {
        return Err(Error::Resource(format!("{c} crossings exceed the state-sum limit of {max_crossings}")));
    }
    if d.arcs().is_empty() {
        return Ok(LaurentPoly::one());
    }
    let m = d.arcs().len();
    let pairs: Vec<[usize; 4]> =
        xs.iter().map(|&x| std::array::from_fn(|s| d.node(x).slots[s].arc)).collect();
    // histogram[b][loops], b = number of B-smoothings
    let width = m + 1;
    let fold = |mut hist: Vec<u64>, state: u64| {
        let mut uf = UnionFind::new(m);
        for (k, s) in pairs.iter().enumerate() {
            if state >> k & 1 == 0 {
                uf.union(s[0], s[1]);
                uf.union(s[2], s[3]);
            } else {
                uf.union(s[0], s[3]);
                uf.union(s[1], s[2]);
            }
        }
        let b = state.count_ones() as usize;
        hist[b * width + uf.count()] += 1;
        hist
    };
    let zero = || vec![0u64; (c + 1) * width];
    let add = |mut a: Vec<u64>, b: Vec<u64>| {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        a
    };
    let hist = if c < 12 {
        (0..1u64 << c).fold(zero(), fold)
    } else {
        (0..1u64 << c).into_par_iter().fold(zero, fold).reduce(zero, add)
    };
    let dp = delta_powers(width);
    let mut total = LaurentPoly::zero();
    for b in 0..=c {
        for loops in 1..width {
            let n = hist[b * width + loops];
            if n > 0 {
                let term = dp[loops - 1].shift(c as i32 - 2 * b as i32).scale(&BigInt::from(n));
                total += &term;
            }
        }
    }
    Ok(total)
}

/// Bracket by adding crossings one at a time to a growing tangle, keeping
/// one weight per way of pairing up the tangle's boundary arcs.
pub fn contraction_bracket(d: &Diagram) -> Result<LaurentPoly, Error> {
    d.require_link("the Kauffman bracket")?;
    let delta = LaurentPoly::delta();
    let xs: Vec<usize> = d.crossings().collect();
    let free = d.free_loop_count();
    if xs.is_empty() {
        return Ok(if free == 0 { LaurentPoly::one() } else { delta.pow(free as u32 - 1) });
    }
    let slots: Vec<[u32; 4]> =
        xs.iter().map(|&x| std::array::from_fn(|s| d.node(x).slots[s].arc as u32)).collect();
    let mut ends_done = vec![0u8; d.arcs().len()];
    let mut done = vec![false; xs.len()];
    // key: sorted pairs of open arcs joined inside the tangle
    let mut states: HashMap<Vec<(u32, u32)>, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one());

    for _ in 0..xs.len() {
        let next = (0..xs.len())
            .filter(|&k| !done[k])
            .max_by_key(|&k| (slots[k].iter().filter(|&&a| ends_done[a as usize] == 1).count(), std::cmp::Reverse(k)))
            .unwrap();
        done[next] = true;
        let s = slots[next];
        for &a in &s {
            ends_done[a as usize] += 1;
        }
        let mut out: HashMap<Vec<(u32, u32)>, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (key, w) in &states {
            for (smoothing, exp) in [(Smoothing::A, 1), (Smoothing::B, -1)] {
                let links: [(u32, u32); 2] = smoothing.pairs().map(|(i, j)| (s[i], s[j]));
                let (new_key, cycles) = merge(key, &links, &s);
                let mut weight = w.shift(exp);
                for _ in 0..cycles {
                    weight = &weight * &delta;
                }
                match out.get_mut(&new_key) {
                    Some(acc) => *acc += &weight,
                    None => {
                        out.insert(new_key, weight);
                    }
                }
            }
        }
        out.retain(|_, w| !w.is_zero());
        states = out;
    }
    let total = states.remove(&Vec::new()).unwrap_or_else(LaurentPoly::zero);
    debug_assert!(states.is_empty());
    let closed = total.div_exact(&delta).ok_or_else(|| Error::Invalid("tangle contraction left an open arc".into()))?;
    Ok(&closed * &delta.pow(free as u32))
}

/// Adds the two smoothing links at one crossing to a boundary pairing.
/// Returns the new pairing and the number of closed cycles.
fn merge(key: &[(u32, u32)], links: &[(u32, u32); 2], touched: &[u32; 4]) -> (Vec<(u32, u32)>, usize) {
    let mut kept = Vec::with_capacity(key.len() + 2);
    let mut local: Vec<(u32, u32)> = links.to_vec();
    for &(a, b) in key {
        if touched.contains(&a) || touched.contains(&b) {
            local.push((a, b));
        } else {
            kept.push((a, b));
        }
    }
    // nodes are arcs; every node has degree 1 (boundary) or 2 (interior)
    let mut nodes: Vec<u32> = local.iter().flat_map(|&(a, b)| [a, b]).collect();
    nodes.sort_unstable();
    nodes.dedup();
    let idx = |a: u32| nodes.binary_search(&a).unwrap();
    let mut degree = vec![0u8; nodes.len()];
    let mut uf = UnionFind::new(nodes.len());
    for &(a, b) in &local {
        degree[idx(a)] += 1;
        degree[idx(b)] += 1;
        uf.union(idx(a), idx(b));
    }
    let mut ends: Vec<Option<u32>> = vec![None; nodes.len()];
    let mut has_end = vec![false; nodes.len()];
    for (i, &a) in nodes.iter().enumerate() {
        if degree[i] == 1 {
            let r = uf.find(i);
            has_end[r] = true;
            match ends[r].take() {
                None => ends[r] = Some(a),
                Some(other) => kept.push((other.min(a), other.max(a))),
            }
        }
    }
    let mut cycles = 0;
    for i in 0..nodes.len() {
        if uf.find(i) == i && !has_end[i] {
            cycles += 1;
        }
    }
    kept.sort_unstable();
    (kept, cycles)
}

pub fn writhe(d: &Diagram) -> i64 {
    d.writhe()
}

/// `(-A^3)^(-writhe) <d>`.
pub fn jones(d: &Diagram) -> Result<LaurentPoly, Error> {
    jones_with(d, &Limits::default())
}

pub fn jones_with(d: &Diagram, limits: &Limits) -> Result<LaurentPoly, Error> {
    let b = kauffman_bracket_with(d, limits)?;
    Ok(normalize_writhe(&b, d.writhe()))
}

pub(crate) fn normalize_writhe(bracket: &LaurentPoly, w: i64) -> LaurentPoly {
    let shifted = bracket.shift((-3 * w) as i32);
    if w % 2 == 0 {
        shifted
    } else {
        -shifted
    }
}
