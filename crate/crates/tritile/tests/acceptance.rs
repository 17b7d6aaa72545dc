//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//! Every check is exact; the only tolerances are the stated wall-clock
//! budgets.

mod common;

use common::{brute_force_packings, mutate_tiling, random_sigma, random_triangle_pair, Mutation};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;
use std::time::Instant;
use tritile::certify::{certify_range, certify_uniqueness, CandidateStatus, Evidence};
use tritile::field::rational::rat;
use tritile::field::{sign_real, CycloNum, PiAngle, Sign};
use tritile::tiling::{
    canonical_tiling, square_ladder_tiling, verify_tiling, verify_tiling_shape, ShapeClass,
};
use tritile::vertex::{
    check_2k_over_n, enumerate_packings, eq1_evaluate, n6_case_analysis, select_k, N6Branch,
    N6Verdict, TrianglePair,
};

/// 1. Uniqueness sweep: certificates for every n in [3, 2000] except 4,
/// all naming the canonical pair, within 30 seconds.
#[test]
fn criterion_1_uniqueness_sweep() {
    let start = Instant::now();
    let certs = certify_range(3, 2000).expect("sweep must certify");
    let elapsed = start.elapsed();

    assert_eq!(certs.len(), 2000 - 3 + 1 - 1);
    for cert in &certs {
        assert_ne!(cert.n, 4);
        assert_eq!(
            cert.unique_pair,
            TrianglePair::canonical_for(cert.n),
            "n = {}",
            cert.n
        );
    }
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "sweep took {:?}, budget is 30s",
        elapsed
    );
    println!(
        "criterion 1 (uniqueness sweep 3..=2000): PASS ({} certificates in {:.2?})",
        certs.len(),
        elapsed
    );
}

/// 2. Elimination table: for every n in [5, 2000] \ {6} the witness
/// satisfies frac(k/2) = 1/2, frac(2k/n) > 1/2, and lhs != 1, all exactly.
#[test]
fn criterion_2_elimination_table() {
    let half = rat(1, 2);
    let mut checked = 0u32;
    for n in 5..=2000u64 {
        if n == 6 {
            continue;
        }
        let k = select_k(n).unwrap();
        let w = eq1_evaluate(n, k).unwrap();
        assert_eq!(w.term3, half, "frac(k/2) at n = {}", n);
        assert!(w.term2 > half, "frac(2k/n) at n = {}", n);
        assert_eq!(w.term2, check_2k_over_n(n, k).unwrap(), "n = {}", n);
        assert_ne!(w.lhs, rat(1, 1), "lhs at n = {}", n);
        assert_eq!(&w.term1 + &w.term2 + &w.term3, w.lhs, "sum at n = {}", n);
        checked += 1;
    }
    assert_eq!(checked, 1995);
    println!(
        "criterion 2 (elimination side facts, {} values of n): PASS",
        checked
    );
}

/// 3. The n = 6 trace reproduces the four branch outcomes structurally.
#[test]
fn criterion_3_hexagon_trace() {
    let records = n6_case_analysis();
    let shape: Vec<(N6Branch, u64, Option<u64>, N6Verdict)> = records
        .iter()
        .map(|r| (r.branch, r.s, r.u, r.verdict))
        .collect();
    assert_eq!(
        shape,
        vec![
            (N6Branch::CornerS2, 2, None, N6Verdict::ForcesBTwoThirds),
            (N6Branch::InteriorS3U2, 3, Some(2), N6Verdict::ForcesBTwoThirds),
            (N6Branch::InteriorS6U3, 6, Some(3), N6Verdict::Contradiction),
            (N6Branch::InteriorS6U4, 6, Some(4), N6Verdict::ForcesBTwoThirds),
        ]
    );
    for r in &records {
        if r.verdict == N6Verdict::ForcesBTwoThirds {
            assert_eq!(r.b.as_ref(), Some(&rat(2, 3)));
        } else {
            assert_eq!(r.b, None);
        }
    }
    println!("criterion 3 (n = 6 branch trace): PASS (4 records, survivors all force b = 2/3)");
}

/// 4. Constructive existence: canonical tilings for n in [3, 64] and
/// ladders for steps in [1, 64] verify with exact area equality, within
/// 2 minutes combined.
#[test]
fn criterion_4_constructive_existence() {
    let start = Instant::now();
    for n in 3..=64u64 {
        let t = canonical_tiling(n);
        let report = verify_tiling(&t, &TrianglePair::canonical_for(n)).unwrap();
        assert!(report.verdict, "canonical n = {}: {:?}", n, report);
        assert!(report.area_ok, "exact area equality at n = {}", n);
    }
    for steps in 1..=64u64 {
        let t = square_ladder_tiling(steps);
        let shape = ShapeClass::from_leg_ratio(rat(steps as i64, 1)).unwrap();
        let report = verify_tiling_shape(&t, &shape).unwrap();
        assert!(report.verdict, "ladder steps = {}: {:?}", steps, report);
        assert!(report.area_ok, "exact area equality at steps = {}", steps);
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 120.0,
        "existence sweep took {:?}, budget is 120s",
        elapsed
    );
    println!(
        "criterion 4 (constructive existence, 62 canonical + 64 ladders): PASS ({:.2?})",
        elapsed
    );
}

/// 5. Mutation suite: delete / duplicate / translate each flip the
/// verdict on 20 randomized instances each, with full detection.
#[test]
fn criterion_5_mutation_suite() {
    let mut rng = StdRng::seed_from_u64(0xacce_57);
    let mut detected = [0u32; 3];
    for (class, which) in [Mutation::Delete, Mutation::Duplicate, Mutation::Translate]
        .iter()
        .enumerate()
    {
        for _ in 0..20 {
            let n = rng.gen_range(3u64..=16);
            let t = canonical_tiling(n);
            let pair = TrianglePair::canonical_for(n);
            let idx = rng.gen_range(0..t.tiles.len());
            let mutated = mutate_tiling(&t, which, idx, &mut rng);
            let report = verify_tiling(&mutated, &pair).unwrap();
            assert!(!report.verdict, "undetected mutation class {}", class);
            match which {
                Mutation::Delete => assert!(!report.area_ok),
                Mutation::Duplicate => assert!(!report.disjoint_ok),
                Mutation::Translate => assert!(!report.disjoint_ok || !report.inside_ok),
            }
            detected[class] += 1;
        }
    }
    assert_eq!(detected, [20, 20, 20]);
    println!("criterion 5 (mutation detection 3 x 20): PASS (60/60 detected)");
}

/// 6. Oracle equivalence: the packing enumerator against brute force on
/// 500 random pairs, and sign determination against the 200-digit decimal
/// oracle on 1000 random real elements, with full agreement.
#[test]
fn criterion_6_oracle_equivalence() {
    let mut rng = StdRng::seed_from_u64(0x04ac1e);
    for _ in 0..500 {
        let pair = random_triangle_pair(&mut rng);
        let sigma = random_sigma(&mut rng);
        let expected = brute_force_packings(&pair, &sigma);
        let got: BTreeSet<(u64, u64, u64)> = enumerate_packings(&pair, &sigma, None)
            .into_iter()
            .map(|e| (e.p, e.q, e.r))
            .collect();
        assert_eq!(got, expected, "pair {} sigma {}", pair, sigma);
    }

    let orders = [3u64, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 18, 20, 24];
    let mut agreements = 0u32;
    for trial in 0..1000 {
        let m = orders[rng.gen_range(0..orders.len())];
        let phi = CycloNum::zero(m).coeffs().len();
        let coeffs: Vec<_> = (0..phi)
            .map(|_| rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4)))
            .collect();
        let z = CycloNum::from_poly_coeffs(m, coeffs).unwrap();
        let real = z.try_add(&z.conj()).unwrap();
        let computed = sign_real(&real).unwrap();
        match common::oracle_real_sign(&real) {
            Some(s) => assert_eq!(computed, s, "trial {} order {}", trial, m),
            None => assert_eq!(computed, Sign::Zero, "trial {} order {}", trial, m),
        }
        agreements += 1;
    }
    assert_eq!(agreements, 1000);
    println!("criterion 6 (oracle equivalence, 500 packings + 1000 signs): PASS");
}

/// 7. Degenerate candidate: n = 8 produces the isosceles (pi/4, pi/4)
/// candidate and eliminates it via k = 3 with lhs = 2.
#[test]
fn criterion_7_degenerate_candidate() {
    let cert = certify_uniqueness(8).unwrap();
    let isosceles = TrianglePair::from_alpha(PiAngle::from_ratio(1, 4)).unwrap();
    let cand = cert
        .candidates
        .iter()
        .find(|c| c.pair == isosceles)
        .expect("the isosceles candidate must appear");
    assert!(cand.pair.is_isosceles());
    assert_eq!(cand.status, CandidateStatus::Eliminated);
    match &cand.evidence {
        Some(Evidence::Eq1(w)) => {
            assert_eq!(w.n, 8);
            assert_eq!(w.k, 3);
            assert_eq!(w.lhs, rat(2, 1));
            assert_eq!(w.term1, rat(3, 4));
            assert_eq!(w.term2, rat(3, 4));
            assert_eq!(w.term3, rat(1, 2));
        }
        other => panic!("expected eq1 evidence, got {:?}", other),
    }
    assert_eq!(cert.unique_pair, TrianglePair::canonical_for(8));
    println!("criterion 7 (n = 8 isosceles edge path): PASS (k = 3, lhs = 2)");
}
