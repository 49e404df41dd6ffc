#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use toric_audit::{Divisor, Fan};

pub fn random_divisor(fan: &Arc<Fan>, rng: &mut ChaCha8Rng, bound: i64) -> Divisor {
    let c: Vec<i64> = (0..fan.num_rays())
        .map(|_| rng.gen_range(-bound..=bound))
        .collect();
    Divisor::from_i64(fan, &c).unwrap()
}

/// Rejection-samples a divisor satisfying `keep`.
pub fn sample(
    fan: &Arc<Fan>,
    rng: &mut ChaCha8Rng,
    bound: i64,
    keep: impl Fn(&Divisor) -> bool,
) -> Divisor {
    for _ in 0..100_000 {
        let d = random_divisor(fan, rng, bound);
        if keep(&d) {
            return d;
        }
    }
    panic!("no sample found");
}

pub fn census_excerpt() -> String {
    std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/census_excerpt.txt"
    ))
    .unwrap()
}
