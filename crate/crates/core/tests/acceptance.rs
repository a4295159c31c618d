//! Acceptance battery: one criterion per test, one printed pass/fail
//! line each. Every criterion delegates to the deterministic named
//! suites, so `coserial verify` reproduces the same verdicts.

use coserial_core::oracles::run_suite;

const SEED: u64 = 0xC05E71A1;

fn criterion(number: usize, title: &str, suite: &str) {
    let report = run_suite(suite, SEED).expect("suite exists");
    println!(
        "criterion {:2} [{}] {}: {} ({})",
        number,
        if report.passed { "PASS" } else { "FAIL" },
        title,
        suite,
        report.detail
    );
    assert!(
        report.passed,
        "criterion {} failed: {}",
        number, report.detail
    );
}

#[test]
fn criterion_01_shape_classification() {
    criterion(
        1,
        "shape classification matches the definitional check",
        "shape",
    );
}

#[test]
fn criterion_02_opposite_duality() {
    criterion(
        2,
        "left seriality equals right seriality of the opposite",
        "duality",
    );
}

#[test]
fn criterion_03_localization_label_formula() {
    criterion(
        3,
        "localized labels equal the path-count oracle",
        "localization",
    );
}

#[test]
fn criterion_04_label_monotonicity() {
    criterion(
        4,
        "localized labels never shrink below the original arrow",
        "monotonicity",
    );
}

#[test]
fn criterion_05_local_global_seriality() {
    criterion(
        5,
        "size-3 subset sweeps decide right seriality",
        "equivserial",
    );
}

#[test]
fn criterion_06_uniseriality_oracle() {
    criterion(
        6,
        "Loewy uniseriality equals the chain-lattice oracle",
        "uniserial",
    );
}

#[test]
fn criterion_07_periodicity() {
    criterion(
        7,
        "composition factors repeat mod h on crowns, never on lines",
        "periodicity",
    );
}

#[test]
fn criterion_08_indecomposables_are_truncations() {
    criterion(
        8,
        "brute force agrees with the soc^k E family on serial input",
        "indecomposables",
    );
}

#[test]
fn criterion_09_almost_split_sequences() {
    criterion(
        9,
        "every line(4) sequence verifies as almost split",
        "almostsplit",
    );
}

#[test]
fn criterion_10_mesh_figures() {
    criterion(
        10,
        "window mesh, wedge and stable tubes match golden graphs",
        "meshes",
    );
}

#[test]
fn criterion_11_eisenbud_griffith_pipeline() {
    criterion(11, "obstruction chain lands on the expected verdicts", "eg");
}
