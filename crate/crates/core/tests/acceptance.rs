//! Acceptance suite: one test per criterion, run serially so the timing
//! bounds are meaningful. Each prints a `criterion N: PASS/FAIL` line
//! (visible with `--nocapture`).

use std::collections::BTreeSet;
use std::sync::{Mutex, PoisonError};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use halphen::audit;
use halphen::elliptic::{six_torsion, torsion_curve, CubicGroup};
use halphen::halphen::match_reference_tables;
use halphen::hesse::Pencil;
use halphen::numeric::WeierstrassEngine;
use halphen::numfield::{rat_i64, Rat};
use halphen::plane::PPoint;
use halphen::torsion::{p1_torsion_exact, s3_orbit};
use halphen::KElem;

static SERIAL: Mutex<()> = Mutex::new(());

fn serial() -> std::sync::MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(PoisonError::into_inner)
}

struct Timer {
    criterion: u32,
    start: Instant,
    budget: Duration,
}

impl Timer {
    fn start(criterion: u32, budget_secs: u64) -> Timer {
        Timer {
            criterion,
            start: Instant::now(),
            budget: Duration::from_secs(budget_secs),
        }
    }

    fn finish(self) {
        let elapsed = self.start.elapsed();
        let ok = elapsed <= self.budget;
        println!(
            "criterion {}: {} ({elapsed:.2?}, budget {:?})",
            self.criterion,
            if ok { "PASS" } else { "FAIL (over budget)" },
            self.budget
        );
        assert!(
            ok,
            "criterion {} exceeded its time budget: {elapsed:.2?}",
            self.criterion
        );
    }
}

#[test]
fn criterion_1_torsion_parameters_exact() {
    let _guard = serial();
    let timer = Timer::start(1, 1);
    let one = p1_torsion_exact(1).expect("order 1");
    let expect1: BTreeSet<KElem> = [-KElem::eps(), -KElem::eps2()].into_iter().collect();
    assert_eq!(one.values, expect1, "order-1 parameter set");

    let two = p1_torsion_exact(2).expect("order 2");
    assert_eq!(two.values.len(), 11, "order-2 parameter count");
    let rationals: BTreeSet<KElem> = two
        .values
        .iter()
        .filter(|u| u.is_rational())
        .cloned()
        .collect();
    let expect_rat: BTreeSet<KElem> = [
        KElem::from_int(-1),
        KElem::from_frac(1, 2),
        KElem::from_int(2),
    ]
    .into_iter()
    .collect();
    assert_eq!(rationals, expect_rat, "rational order-2 parameters");

    // Stated criterion: the six irrational new parameters have common
    // minimal polynomial x^6 - 3x^5 + 5x^3 - 3x + 1. The construction pinned
    // by the printed cubic tables (criterion 2) produces parameters whose
    // exact common minimal polynomial is measured below; the stated
    // polynomial does not annihilate them, so this clause fails.
    let stated: Vec<Rat> = [1i64, -3, 0, 5, 0, -3, 1].map(|n| rat_i64(n, 1)).to_vec();
    let irrational: Vec<&KElem> = two
        .values
        .iter()
        .filter(|u| !u.is_rational() && !expect1.contains(*u))
        .collect();
    assert_eq!(irrational.len(), 6);
    let measured = irrational[0].minimal_polynomial();
    for u in &irrational {
        assert_eq!(
            u.minimal_polynomial(),
            measured,
            "orbit shares one minimal polynomial"
        );
    }
    let stated_holds = irrational
        .iter()
        .all(|u| u.eval_rat_poly(&stated).is_zero());
    if !stated_holds {
        let rendered: Vec<String> = measured.iter().map(|c| c.to_string()).collect();
        println!("criterion 1: FAIL (stated minimal polynomial clause)");
        panic!(
            "the six irrational order-2 parameters are not roots of the stated \
             x^6-3x^5+5x^3-3x+1; their exact common minimal polynomial has ascending \
             coefficients {rendered:?} (= x^6-3x^5+60x^4-115x^3+60x^2-3x+1, verified \
             independently by elementary symmetric functions of the numeric torsion \
             values). Every other clause of criterion 1 passes."
        );
    }
    timer.finish();
}

#[test]
fn criterion_2_halphen_cubic_tables() {
    let _guard = serial();
    let timer = Timer::start(2, 5);
    let rep1 = match_reference_tables(1).expect("order 1 reconciliation");
    assert!(rep1.pass);
    assert_eq!(rep1.matched, 8);
    let rep2 = match_reference_tables(2).expect("order 2 reconciliation");
    assert!(rep2.pass);
    assert_eq!(rep2.matched, 44);
    assert_eq!(rep2.generated, 44);
    // The known label anomalies are reported, not failures.
    assert!(rep2.label_collision, "duplicated printed label is flagged");
    assert!(!rep1.label_notes.is_empty(), "label swaps are reported");
    timer.finish();
}

#[test]
fn criterion_3_census_order_one() {
    let _guard = serial();
    let timer = Timer::start(3, 30);
    let rep = audit::census(1).expect("order-1 census");
    assert!(rep.pass, "{rep:?}");
    assert_eq!(rep.vertices.len(), 12);
    for v in &rep.vertices {
        assert_eq!(v.multiplicity, 6);
        assert_eq!(v.triples, 2);
        let dirs: BTreeSet<String> = v.directions.iter().cloned().collect();
        let expect: BTreeSet<String> = ["-e".to_string(), "-e^2".to_string()].into_iter().collect();
        assert_eq!(dirs, expect);
    }
    assert_eq!(rep.triple_total, 24);
    assert_eq!(rep.quadruple_total, 0);
    assert!(
        rep.tangency_pattern_ok,
        "cross-pencil pattern {{2,2,2,1,1,1}}"
    );
    assert!(rep.bezout_ledger_ok);
    timer.finish();
}

#[test]
fn criterion_4_census_order_two() {
    let _guard = serial();
    let timer = Timer::start(4, 600);
    let rep = audit::census(2).expect("order-2 census");
    assert!(rep.pass, "{rep:?}");
    for v in &rep.vertices {
        assert_eq!(v.multiplicity, 33);
        assert_eq!(v.triples, 11);
        assert!(v.directions_match_torsion);
    }
    assert_eq!(rep.triple_total, 132);
    assert_eq!(rep.quadruple_total, 297);
    assert!(rep.bezout_ledger_ok);
    assert!(rep.coincidence_ok);
    assert_eq!(rep.coincidence_certificates, 132);
    assert_eq!(rep.max_local_multiplicity, 2);
    timer.finish();
}

#[test]
fn criterion_5_harbourne_index() {
    let _guard = serial();
    let timer = Timer::start(5, 10);
    assert_eq!(audit::harbourne_index(3).unwrap(), rat_i64(-2, 1));
    assert_eq!(audit::harbourne_index(6).unwrap(), rat_i64(-176, 49));
    let mut prev = audit::harbourne_index(3).unwrap();
    for k in 2..=100u64 {
        let h = audit::harbourne_index(3 * k).unwrap();
        assert!(h < prev, "h(3k) strictly decreasing at k = {k}");
        prev = h;
    }
    let h300 = audit::harbourne_index(300).unwrap();
    assert!(h300 > rat_i64(-4, 1));
    assert!(h300 < rat_i64(-395, 100));
    timer.finish();
}

#[test]
fn criterion_6_torsion_translate() {
    let _guard = serial();
    let timer = Timer::start(6, 60);
    let set = halphen::halphen::halphen_cubics(1).unwrap();
    let checks = audit::torsion_translate_check(&set).unwrap();
    assert_eq!(checks, 72, "8 components times 9 base points");
    timer.finish();
}

#[test]
fn criterion_7_abelian_certificate() {
    let _guard = serial();
    let timer = Timer::start(7, 5);
    let cert = halphen::abelian::verify().unwrap();
    assert!(cert.pass, "{cert:?}");
    assert_eq!(cert.psi_on_fixed_points, 81);
    assert_eq!(cert.kernel_checks, 9);
    assert!(cert.theta_eigen_points_match);
    assert!(cert.intersection_table_ok);
    assert!(cert.n_meets_v0_at_fixed_points);
    timer.finish();
}

#[test]
fn criterion_8_numeric_crosscheck() {
    let _guard = serial();
    let timer = Timer::start(8, 30);
    let engine = WeierstrassEngine::new(60).expect("60-digit engine");
    let tol = engine.tolerance(20); // 1e-40
    for m in [1u32, 2] {
        let exact = p1_torsion_exact(m).unwrap();
        let numeric = engine.p1_torsion_numeric(m).unwrap();
        assert_eq!(numeric.len(), exact.values.len());
        for u in &exact.values {
            let eu = u.embed_complex(70).with_bits(engine.bits());
            assert!(
                numeric.iter().any(|v| v.dist(&eu) < tol),
                "order-{m} exact parameter missing numerically"
            );
        }
    }
    let m3 = engine.p1_torsion_numeric(3).unwrap();
    assert_eq!(m3.len(), 26);
    assert!(engine.s3_closed(&m3, &engine.tolerance(10)));
    timer.finish();
}

#[test]
fn criterion_9_property_suites() {
    let _guard = serial();
    let timer = Timer::start(9, 120);

    // Field axioms and inverse round-trips over 10^4 seeded-random elements.
    let mut rng = Lcg::new(0x5eed_cafe);
    let mut elems: Vec<KElem> = Vec::with_capacity(10_000);
    for _ in 0..10_000 {
        elems.push(random_kelem(&mut rng));
    }
    for w in elems.chunks_exact(3) {
        let (a, b, c) = (&w[0], &w[1], &w[2]);
        assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        assert_eq!(
            (a.clone() * b.clone()) * c.clone(),
            a.clone() * (b.clone() * c.clone())
        );
        assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
    }
    for a in &elems {
        if !a.is_zero() {
            assert!((a.clone() * a.inv().unwrap()).is_one());
        }
    }

    // Group-law associativity on 10^3 random torsion-point triples, under a
    // non-flex base point.
    let curve = torsion_curve();
    let pool = six_torsion().unwrap();
    let o = PPoint::new([KElem::one(), -KElem::b(), KElem::from_int(-1)]).unwrap();
    let group = CubicGroup::new(curve, o).unwrap();
    for i in 0..1_000 {
        let p = &pool[(rng.next() % 36) as usize];
        let q = &pool[(rng.next() % 36) as usize];
        let r = &pool[(rng.next() % 36) as usize];
        let pq = group.add(p, q).unwrap();
        assert_eq!(pq, group.add(q, p).unwrap());
        let left = group.add(&pq, r).unwrap();
        let right = group.add(p, &group.add(q, r).unwrap()).unwrap();
        assert_eq!(left, right);
        if i % 10 == 0 {
            let neg = group.neg(p).unwrap();
            assert_eq!(group.add(p, &neg).unwrap(), group.identity);
        }
    }

    // Bezout ledger on every audited pair of the order-1 sweep.
    let rep = audit::census(1).unwrap();
    assert!(rep.bezout_ledger_ok);
    assert_eq!(rep.pairs_audited, 28);

    // S3 invariance of every exact parameter set.
    for m in [1u32, 2] {
        let set = p1_torsion_exact(m).unwrap();
        assert!(set.is_s3_closed());
        for u in &set.values {
            for v in s3_orbit(u).unwrap() {
                assert!(set.values.contains(&v));
            }
        }
    }
    timer.finish();
}

// Deterministic linear congruential generator; no external dependency needed.
struct Lcg(u64);

impl Lcg {
    fn new(seed: u64) -> Lcg {
        Lcg(seed)
    }

    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 11
    }
}

fn random_kelem(rng: &mut Lcg) -> KElem {
    let mut coords: [Rat; 6] = Default::default();
    for c in coords.iter_mut() {
        let num = (rng.next() % 19) as i64 - 9;
        let den = (rng.next() % 9) as i64 + 1;
        *c = Rat::new(BigInt::from(num), BigInt::from(den));
    }
    KElem::new(coords)
}
