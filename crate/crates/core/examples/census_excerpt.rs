//! Regenerates `data/census_excerpt.txt`: fifty pairwise non-isomorphic
//! reflexive 3-polytopes with vertices in `{-1,0,1}^3`, told apart by
//! lattice invariants.
//!
//! cargo run -p toric-audit --example census_excerpt > crates/core/data/census_excerpt.txt

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_audit::ingest::{emit_palp, PolytopeRecord};
use toric_audit::LatticePolytope;

type Invariants = (usize, usize, usize, usize, usize);

fn invariants(p: &LatticePolytope) -> Option<Invariants> {
    if !p.is_full_dimensional().ok()? || !p.is_reflexive().ok()? {
        return None;
    }
    let polar = p.polar().ok()?;
    let facets = p.facets().ok()?;
    let edges = {
        let v = p.vertices().ok()?.len();
        let mut n = 0;
        for i in 0..v {
            for j in i + 1..v {
                let shared = facets
                    .iter()
                    .filter(|(_, t)| t.contains(&i) && t.contains(&j))
                    .count();
                n += usize::from(shared >= 2);
            }
        }
        n
    };
    Some((
        p.vertices().ok()?.len(),
        facets.len(),
        edges,
        p.count_lattice_points().ok()?,
        polar.count_lattice_points().ok()?,
    ))
}

fn record(p: &LatticePolytope) -> PolytopeRecord {
    let vertices = p
        .vertices()
        .unwrap()
        .iter()
        .map(|v| v.to_integral().unwrap())
        .collect();
    PolytopeRecord {
        index: 0,
        lines: (0, 0),
        rank: 3,
        vertices,
    }
}

fn points(raw: &[[i64; 3]]) -> Vec<Vec<BigInt>> {
    raw.iter()
        .map(|p| p.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

fn main() {
    let cube: Vec<[i64; 3]> = (0..27)
        .map(|i| [i % 3 - 1, (i / 3) % 3 - 1, i / 9 - 1])
        .filter(|p| *p != [0, 0, 0])
        .collect();
    let mut seen: BTreeSet<Invariants> = BTreeSet::new();
    let mut out = Vec::new();
    let seeds: [&[[i64; 3]]; 2] = [
        &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]],
        &[[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1], [0, 0, -1]],
    ];
    for s in seeds {
        let p = LatticePolytope::from_points(&points(s)).unwrap();
        seen.insert(invariants(&p).expect("reflexive seed"));
        out.push(record(&p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4319);
    while out.len() < 50 {
        let k = rng.gen_range(4..=12);
        let pick: Vec<[i64; 3]> = cube.choose_multiple(&mut rng, k).copied().collect();
        let Ok(p) = LatticePolytope::from_points(&points(&pick)) else {
            continue;
        };
        if let Some(inv) = invariants(&p) {
            if seen.insert(inv) {
                out.push(record(&p));
            }
        }
    }
    for (i, r) in out.iter_mut().enumerate() {
        r.index = i;
    }
    print!("{}", emit_palp(&out));
}
