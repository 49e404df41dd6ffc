mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_audit::audit::{
    conjecture_audit, hyperbolicity_audit, restriction_surjectivity, ConjectureVariant, Verdict,
};
use toric_audit::{fixtures, Divisor};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// h0(E) - h0(E - D) never exceeds h0(E|_D), and equals it for nef E.
    #[test]
    fn restriction_is_left_exact(seed in any::<u64>(), which in 0usize..9) {
        let fan = fixtures::smooth_fixtures()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = common::sample(&fan, &mut rng, 3, |d| d.is_nef());
        for rho in 0..fan.num_rays() {
            let s = restriction_surjectivity(&e, rho).unwrap();
            prop_assert!(s.h0_total >= s.h0_twisted);
            prop_assert!(s.h0_total - s.h0_twisted <= s.h0_restricted);
            prop_assert!(s.balanced());
        }
    }

    #[test]
    fn conjecture_audit_delegates(seed in any::<u64>(), which in 0usize..8) {
        // surfaces and P3 keep the recursion cheap
        let fan = fixtures::smooth_fixtures()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bound = if fan.rank() == 2 { 2 } else { 1 };
        let l = common::sample(&fan, &mut rng, bound, |d| d.is_ample());
        let n = Divisor::canonical(&fan).add(&l.scale(fan.rank() as i64 + 1)).unwrap();
        let direct = hyperbolicity_audit(&n, &l);
        prop_assert_eq!(conjecture_audit(&l, ConjectureVariant::Full), direct.clone());
        prop_assert_eq!(&direct.verdict, &Verdict::Hyperbolic);
        prop_assert!(direct.is_consistent());
        prop_assert!(direct.genus_table.iter().all(|g| g.genus >= 2));
    }
}
