//! Release gate. One test per advertised guarantee; the test name is the
//! pass/fail line. Randomized checks run 1000 cases from a fixed seed so
//! a red run is always reproducible.

use std::collections::BTreeMap;
use std::process::{Command, Output};
use std::time::Instant;

use casimir_liv::bounds::{liv_upper_bound, MeasurementRecord};
use casimir_liv::observables::{
    casimir_pressure, observables_record, PlateGeometry, UnitSystem,
};
use casimir_liv::regularization::{
    closed_form_energy, direct_regulated_sum, log_grid, oracle_zeta_agreement,
};
use casimir_liv::sme::{
    kappa_from_kf, kappa_hb_brute_force, liv_factor, FieldStats, KappaSet, KfTensor, Medium,
};
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use serde_json::Value;

const PI: f64 = core::f64::consts::PI;

fn rel(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}

fn runner_1000() -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases: 1000,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir-liv"))
        .args(args)
        .output()
        .expect("binary should run")
}

#[test]
fn criterion_1_pressure_and_sapphire_force_match_reference_values() {
    // natural units, unit separation: P = -pi^2/240
    let p = casimir_pressure(1.0, 0.0, UnitSystem::Natural).unwrap();
    assert!(rel(p, -PI * PI / 240.0) < 1e-12, "pressure {p}");

    // SI, 1.25 cm disk at 100 nm: F = -1.5955e-3 N
    let disk = PlateGeometry::with_disk_diameter(1e-7, 1.25e-2, "disk").unwrap();
    let record = observables_record(&disk, 0.0, UnitSystem::Si).unwrap();
    assert!(rel(record.force, -1.5955e-3) < 1e-4, "force {}", record.force);
}

#[test]
fn criterion_2_cutoff_oracle_agrees_with_continuation_to_a_tenth_percent() {
    let start = Instant::now();
    let grid = log_grid(0.1, 10.0, 10).unwrap();
    let rows = oracle_zeta_agreement(&grid).unwrap();
    let elapsed = start.elapsed();

    assert_eq!(rows.len(), 10);
    for row in &rows {
        assert!(
            row.relative_deviation < 1e-3,
            "a = {}: deviation {}",
            row.a,
            row.relative_deviation
        );
    }
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
}

#[test]
fn criterion_3_direct_sum_anchors_the_continuation_where_it_converges() {
    for s in [4.0, 5.0, 6.0, 7.0] {
        for a in [1.0, 2.0] {
            let direct = direct_regulated_sum(s, a).unwrap();
            let closed = closed_form_energy(s, a).unwrap().energy_per_volume;
            assert!(
                rel(direct, closed) < 1e-8,
                "s = {s}, a = {a}: direct {direct}, closed {closed}"
            );
        }
    }
}

#[test]
fn criterion_4_liv_correction_is_exactly_multiplicative_for_1000_inputs() {
    let strategy = (-0.5..0.5f64, 1e-9..10.0f64, any::<bool>());
    runner_1000()
        .run(&strategy, |(l, a, si)| {
            let units = if si { UnitSystem::Si } else { UnitSystem::Natural };
            let base = casimir_pressure(a, 0.0, units).unwrap();
            let shifted = casimir_pressure(a, l, units).unwrap();
            prop_assert_eq!(shifted.to_bits(), ((1.0 + l) * base).to_bits());
            Ok(())
        })
        .unwrap();
}

#[test]
// j and k index four matrices at once; iterators would bury the symmetry
#[allow(clippy::needless_range_loop)]
fn criterion_5_kappa_identities_hold_exactly_for_1000_random_tensors() {
    // index pairs with mu < nu; an orbit is an unordered pair of them
    const PAIRS: [[u8; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
    let strategy = vec((0..6usize, 0..6usize, -1e-2..1e-2f64), 1..8);

    runner_1000()
        .run(&strategy, |orbits| {
            let mut by_orbit = BTreeMap::new();
            for (p, q, value) in orbits {
                let key = (p.min(q), p.max(q));
                by_orbit.insert(key, value);
            }
            let entries: Vec<([u8; 4], f64)> = by_orbit
                .into_iter()
                .map(|((p, q), value)| {
                    let [a, b] = PAIRS[p];
                    let [c, d] = PAIRS[q];
                    ([a, b, c, d], value)
                })
                .collect();
            let tensor = KfTensor::from_entries(&entries).unwrap();

            let kappa = kappa_from_kf(&tensor).unwrap();
            let brute = kappa_hb_brute_force(&tensor);
            for j in 0..3 {
                for k in 0..3 {
                    // optimized kappa_HB equals the 81-term contraction bit for bit
                    prop_assert_eq!(
                        kappa.kappa_hb[j][k].to_bits(),
                        brute[j][k].to_bits()
                    );
                    // symmetric blocks are exactly symmetric
                    prop_assert_eq!(
                        kappa.kappa_de[j][k].to_bits(),
                        kappa.kappa_de[k][j].to_bits()
                    );
                    prop_assert_eq!(
                        kappa.kappa_hb[j][k].to_bits(),
                        kappa.kappa_hb[k][j].to_bits()
                    );
                    // the cross blocks are exact negative transposes
                    prop_assert_eq!(
                        kappa.kappa_he[j][k].to_bits(),
                        (-kappa.kappa_db[k][j]).to_bits()
                    );
                }
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn criterion_6_isotropic_liv_factor_is_the_mean_of_alpha_and_beta() {
    let alpha = 4e-5;
    let beta = 6e-5;
    let kappa = KappaSet::isotropic(alpha, beta);
    let fields = FieldStats::Isotropic {
        e_sq: 1.0,
        b_sq: 1.0,
    };
    let l = liv_factor(&kappa, &fields, &Medium::vacuum()).unwrap();
    assert!(
        (l - (alpha + beta) / 2.0).abs() < 1e-15,
        "L = {l}, expected {}",
        (alpha + beta) / 2.0
    );
}

#[test]
fn criterion_7_sapphire_bound_is_6_27e14_and_discrepancy_is_reported() {
    // library route
    let disk = PlateGeometry::with_disk_diameter(1e-8, 1.25e-2, "disk").unwrap();
    let record = MeasurementRecord::new(1e-12, disk, "disk", "1 pN accuracy").unwrap();
    let bound = liv_upper_bound(&record, UnitSystem::Si).unwrap();
    assert!(rel(bound.l_max, 6.27e-14) < 1e-2, "L_max {}", bound.l_max);

    // binary route, including the reported-bound discrepancy note
    let out = bin(&["bound", "--preset", "paper_inputs", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let l_max = v["l_max"].as_f64().unwrap();
    assert!(rel(l_max, 6.27e-14) < 1e-2, "CLI L_max {l_max}");

    let disc = &v["reported_bound_discrepancy"];
    assert_eq!(disc["reported_upper_bound"].as_f64().unwrap(), 1.6e-5);
    assert!(!disc["note"].as_str().unwrap().is_empty());
}

#[test]
fn criterion_8_pressure_is_the_energy_per_area_derivative() {
    for a in [0.5, 1.0, 2.0] {
        let geometry = PlateGeometry::with_area(a, 1.0, "plates").unwrap();
        let h = a * 1e-5;
        let up = observables_record(
            &geometry.at_separation(a + h).unwrap(),
            0.0,
            UnitSystem::Natural,
        )
        .unwrap()
        .energy_per_area;
        let down = observables_record(
            &geometry.at_separation(a - h).unwrap(),
            0.0,
            UnitSystem::Natural,
        )
        .unwrap()
        .energy_per_area;
        let fd_pressure = -(up - down) / (2.0 * h);
        let p = casimir_pressure(a, 0.0, UnitSystem::Natural).unwrap();
        assert!(
            rel(fd_pressure, p) < 1e-6,
            "a = {a}: finite difference {fd_pressure}, analytic {p}"
        );
    }
}

#[test]
fn criterion_9_cli_is_deterministic_and_partitions_exit_codes() {
    // byte-for-byte repeatability
    let force_args = [
        "force", "--a", "1e-7", "--disk-diameter", "1.25e-2", "--si", "--format", "json",
    ];
    assert_eq!(bin(&force_args).stdout, bin(&force_args).stdout);
    let bound_args = ["bound", "--preset", "paper_inputs", "--format", "json"];
    assert_eq!(bin(&bound_args).stdout, bin(&bound_args).stdout);

    // 0 = success, 2 = usage, 3 = unreadable file, 4 = domain
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
    let usage = bin(&["force", "--a", "0", "--area", "1"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&usage.stderr).contains("a > 0"),
        "usage error names the precondition"
    );
    assert_eq!(
        bin(&["kappa", "--input", "/no/such/file.toml"]).status.code(),
        Some(3)
    );
    assert_eq!(
        bin(&["bound", "--delta-f", "0", "--a", "1e-8", "--area", "1e-4"])
            .status
            .code(),
        Some(4)
    );
}
