//! Acceptance suite: one test per shipping criterion, every comparison
//! exact (no tolerances anywhere). Run with
//! `cargo test -p upsilon-cli --test acceptance` to get one pass/fail line
//! per criterion.

use std::process::Command;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use upsilon_core::algebra::{dual, tensor};
use upsilon_core::altdef::{transform_check, upsilon_alt};
use upsilon_core::complex::Complex;
use upsilon_core::gf2::{kernel_basis, quotient_dim, GF2Matrix, GF2Vector};
use upsilon_core::pl::{jump_spectrum, PLFunction};
use upsilon_core::upsilon::{
    check_crossing_change, genus_bounds, nu_minus, tau, upsilon_at, upsilon_pl, BoundsReport,
};
use upsilon_core::{ratio, rational, Rational};

use upsilon_cli::examples;
use upsilon_cli::parse_rational;

fn bundled() -> Vec<(String, Complex)> {
    examples::NAMES
        .iter()
        .map(|name| examples::get(name).expect("bundled example"))
        .collect()
}

fn torus_trio() -> [Complex; 3] {
    [
        examples::get("t23").unwrap().1,
        examples::get("t25").unwrap().1,
        examples::get("t37").unwrap().1,
    ]
}

fn sample_ts() -> [Rational; 7] {
    [
        ratio(1, 3),
        ratio(1, 2),
        ratio(2, 3),
        ratio(4, 5),
        rational(1),
        ratio(3, 2),
        rational(2),
    ]
}

fn run_cli(args: &[&str]) -> (Option<i32>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_upsilon"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn criterion_01_t37_closed_form() {
    // Through the real CLI: the emitted vertices must reproduce -6t on
    // [0, 2/3] and the constant -4 on [2/3, 1].
    let (code, json) = run_cli(&["upsilon", "examples/t37.json"]);
    assert_eq!(code, Some(0));
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let vertices: Vec<(Rational, Rational)> = doc["payload"]["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| {
            (
                parse_rational(v["t"].as_str().unwrap()).unwrap(),
                parse_rational(v["value"].as_str().unwrap()).unwrap(),
            )
        })
        .collect();
    let f = PLFunction::from_samples(vertices);
    for t in [rational(0), ratio(1, 4), ratio(1, 3), ratio(1, 2), ratio(2, 3)] {
        assert_eq!(f.eval(t), -rational(6) * t, "left branch at t = {t}");
    }
    for t in [ratio(2, 3), ratio(3, 4), ratio(4, 5), ratio(9, 10), rational(1)] {
        assert_eq!(f.eval(t), rational(-4), "flat branch at t = {t}");
    }

    let (code, value) = run_cli(&["eval", "examples/t37.json", "--t", "4/5"]);
    assert_eq!(code, Some(0));
    assert_eq!(value.trim(), "-4");
}

#[test]
fn criterion_02_t23_is_minus_t() {
    let f = upsilon_pl(&examples::get("t23").unwrap().1);
    for k in 0..=8 {
        let t = ratio(k, 8);
        assert_eq!(f.eval(t), -t, "t = {t}");
    }
    assert_eq!(f.vertices()[1], (rational(1), rational(-1)));
}

#[test]
fn criterion_03_unknot_invariants_vanish() {
    let unknot = examples::get("unknot").unwrap().1;
    let f = upsilon_pl(&unknot);
    assert!(f.is_zero());
    assert_eq!(f.vertices(), &[(rational(0), rational(0)), (rational(2), rational(0))]);
    assert_eq!(tau(&unknot).unwrap(), 0);
    assert_eq!(nu_minus(&unknot), 0);
}

#[test]
fn criterion_04_additivity_over_torus_pairs() {
    for a in &torus_trio() {
        for b in &torus_trio() {
            let product = upsilon_pl(&tensor(a, b));
            let sum = upsilon_pl(a).add(&upsilon_pl(b));
            assert_eq!(product, sum);
        }
    }
}

#[test]
fn criterion_05_negation_and_slice_vanishing() {
    for (name, c) in bundled() {
        assert_eq!(
            upsilon_pl(&dual(&c)),
            upsilon_pl(&c).neg(),
            "mirror of {name}"
        );
        assert!(
            upsilon_pl(&tensor(&c, &dual(&c))).is_zero(),
            "{name} # -{name} must have vanishing upsilon"
        );
    }
}

#[test]
fn criterion_06_tau_methods_agree() {
    for (name, c) in bundled() {
        assert!(tau(&c).is_ok(), "tau methods disagree on {name}");
    }
    for a in &torus_trio() {
        for b in &torus_trio() {
            assert!(tau(&tensor(a, b)).is_ok());
        }
    }
    assert_eq!(tau(&examples::get("t37").unwrap().1).unwrap(), 6);
    assert_eq!(tau(&examples::get("t25").unwrap().1).unwrap(), 2);
    assert_eq!(tau(&examples::get("t23").unwrap().1).unwrap(), 1);
}

#[test]
fn criterion_07_definitions_agree() {
    for (name, c) in bundled() {
        for t in sample_ts() {
            assert_eq!(
                upsilon_alt(&c, t).unwrap(),
                upsilon_at(&c, t),
                "{name} at t = {t}"
            );
            assert!(transform_check(&c, t), "{name} at t = {t}");
        }
    }
}

#[test]
fn criterion_08_pl_structure() {
    // Known three-genus of each bundled model; for these staircases and
    // their sums it coincides with the complex width.
    for (name, c) in bundled() {
        let g3 = c.width();
        let f = upsilon_pl(&c);

        let corner_slopes: std::collections::BTreeSet<i64> = c
            .grading_slice(0)
            .iter()
            .map(|e| e.alg - e.alex)
            .collect();
        for s in f.slopes() {
            assert!(s.is_integer(), "{name}: slope {s}");
            assert!(
                corner_slopes.contains(&s.to_integer()),
                "{name}: slope {s} is not i - j of a grading-zero lattice point"
            );
        }

        for j in jump_spectrum(&f) {
            let p = *j.t.numer();
            let q = *j.t.denom();
            // (t/2) |delta| must be an integer multiple of p (odd p) or a
            // half-integer multiple (even p).
            let scaled = j.t / rational(2) * j.delta;
            let k_doubled = scaled * rational(2) / rational(p);
            assert!(k_doubled.is_integer(), "{name}: jump at {}", j.t);
            if p % 2 != 0 {
                assert_eq!(
                    k_doubled.to_integer() % 2,
                    0,
                    "{name}: odd-p jump at {} needs integer k",
                    j.t
                );
                assert!(q <= g3, "{name}: odd-p jump denominator {q} > g3 = {g3}");
            } else {
                assert!(
                    q <= 2 * g3,
                    "{name}: even-p jump denominator {q} > 2 g3 = {}",
                    2 * g3
                );
            }
        }
    }
}

#[test]
fn criterion_09_genus_bounds_tight_for_t37() {
    let f = upsilon_pl(&examples::get("t37").unwrap().1);
    let bounds = genus_bounds(&f, &jump_spectrum(&f));
    assert_eq!(bounds, BoundsReport { g3: 6, g4: 6, gc: 6 });
}

/// Independent brute-force search for nu-minus: for each candidate m the
/// sublevel cycle space of the quadrant region is computed outright from
/// kernel and quotient dimensions.
fn nu_minus_brute_force(c: &Complex) -> i64 {
    let slice0 = c.grading_slice(0);
    let out = c.boundary_matrix(0);
    let inn = c.boundary_matrix(1);
    let boundaries: Vec<GF2Vector> = (0..inn.cols()).map(|k| inn.column(k).clone()).collect();
    let mut candidates: Vec<i64> = slice0
        .iter()
        .filter(|e| e.alg <= 0)
        .map(|e| e.alex)
        .collect();
    candidates.sort();
    candidates.dedup();
    for m in candidates {
        let cols: Vec<usize> = (0..slice0.len())
            .filter(|&k| slice0[k].alg <= 0 && slice0[k].alex <= m)
            .collect();
        let mut sub = GF2Matrix::zeros(out.rows(), cols.len());
        for (j, &col) in cols.iter().enumerate() {
            for r in out.column(col).support() {
                sub.set(r, j, true);
            }
        }
        let cycles: Vec<GF2Vector> = kernel_basis(&sub)
            .into_iter()
            .map(|k| {
                let mut full = GF2Vector::zeros(slice0.len());
                for j in k.support() {
                    full.set(cols[j], true);
                }
                full
            })
            .collect();
        if quotient_dim(&cycles, &boundaries) > 0 {
            return m;
        }
    }
    panic!("no escape found in quadrant region");
}

#[test]
fn criterion_10_nu_minus_dominates_and_matches_oracle() {
    for (name, c) in bundled() {
        let nm = nu_minus(&c);
        assert_eq!(nm, nu_minus_brute_force(&c), "{name}");
        for t in sample_ts() {
            assert!(
                -upsilon_at(&c, t) <= t * rational(nm),
                "{name} at t = {t}"
            );
        }
    }
    assert_eq!(nu_minus(&examples::get("t37").unwrap().1), 6);
}

#[test]
fn criterion_11_crossing_change_for_unknotting_the_trefoil() {
    let unknot = upsilon_pl(&examples::get("unknot").unwrap().1);
    let trefoil = upsilon_pl(&examples::get("t23").unwrap().1);
    assert!(check_crossing_change(&unknot, &trefoil));
}

fn random_palindromic_steps(rng: &mut StdRng, max_width: i64) -> Vec<i64> {
    loop {
        let half = rng.random_range(1..=6usize);
        let mut head: Vec<i64> = (0..half).map(|_| rng.random_range(1..=3i64)).collect();
        let mut steps = head.clone();
        head.reverse();
        steps.extend(head);
        let width: i64 = steps.iter().step_by(2).sum();
        if width <= max_width {
            return steps;
        }
    }
}

fn random_t(rng: &mut StdRng) -> Rational {
    let q = rng.random_range(1..=12i64);
    let p = rng.random_range(0..=2 * q);
    ratio(p, q)
}

#[test]
fn criterion_12_randomized_property_suite() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(2024);

    let complexes: Vec<Complex> = (0..200)
        .map(|_| Complex::staircase(&random_palindromic_steps(&mut rng, 8)).unwrap())
        .collect();

    for c in &complexes {
        assert!(c.validate().is_admissible());
        let f = upsilon_pl(c);
        for _ in 0..20 {
            let t = random_t(&mut rng);
            assert_eq!(f.eval(t), upsilon_at(c, t), "pointwise mismatch at t = {t}");
        }
    }

    for _ in 0..20 {
        let a = &complexes[rng.random_range(0..complexes.len())];
        let b = &complexes[rng.random_range(0..complexes.len())];
        assert_eq!(
            upsilon_pl(&tensor(a, b)),
            upsilon_pl(a).add(&upsilon_pl(b)),
            "additivity failed"
        );
    }

    for c in &complexes {
        for _ in 0..3 {
            let q = rng.random_range(1..=12i64);
            let p = rng.random_range(1..=2 * q);
            let t = ratio(p, q);
            assert_eq!(upsilon_alt(c, t).unwrap(), upsilon_at(c, t), "t = {t}");
        }
    }

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "property suite took {elapsed:?}, budget is 60 s"
    );
}
