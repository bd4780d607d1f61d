//! Random search for θ-curve diagrams whose three subknots have trivial
//! Jones polynomial but whose normalized Yamada polynomial differs from the
//! trivial θ-curve's.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use yamada_core::bracket::jones;
use yamada_core::construct::{tangle_theta, trivial_theta, TangleOp};
use yamada_core::theta::{normalized_yamada, subknot, validate_theta};
use yamada_core::Limits;

fn main() {
    let mut args = std::env::args().skip(1);
    let tries: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(100_000);
    let max_len: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let lim = Limits::default();
    let trivial = normalized_yamada(&validate_theta(&trivial_theta()).unwrap(), &lim).unwrap();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut best = usize::MAX;
    for _ in 0..tries {
        let len = rng.gen_range(4..=max_len);
        let mut ops = vec![TangleOp::Cup(rng.gen_range(0..=3))];
        for _ in 0..len {
            let i = rng.gen_range(1..=4);
            ops.push(TangleOp::Cross(if rng.gen() { i } else { -i }));
        }
        ops.push(TangleOp::Cap(rng.gen_range(0..=3)));
        let Ok(d) = tangle_theta(&ops) else { continue };
        let Ok(t) = validate_theta(&d) else { continue };
        let proxy = (1..=3).all(|i| jones(&subknot(&t, i).unwrap()).unwrap().is_one());
        if !proxy {
            continue;
        }
        let y = normalized_yamada(&t, &lim).unwrap();
        if y != trivial && len <= best {
            best = len;
            println!("{len} {ops:?}\n  {y}");
        }
    }
}
