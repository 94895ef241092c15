//! Acceptance criteria. Each test prints one `criterion N ...: PASS|FAIL`
//! line straight to stdout (so it shows without `--nocapture`) and then
//! asserts.

use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

use hopf_core::algebra::{q, qi, rank, LinComb};
use hopf_core::frame::{beta_u, frame_coefficient, hall_identity_check, iterated_integral};
use hopf_core::lyndon::{
    check_hall_axioms, hall_forests, hall_tree_of_lyndon, lyndon_generate, pbw_element, AxiomReading, Orientation,
};
use hopf_core::morphisms::{zhao_eps, zhao_zstar, Composition};
use hopf_core::parse::{parse_forest, parse_tree, parse_word};
use hopf_core::suites::{diagram_checks, duality_checks, hopf_axiom_checks, pi_checks, AxiomBounds, CheckLine};
use hopf_core::trees::Tree;
use hopf_core::words::{e_gen, lie_bracket, words_of_weight, words_up_to_weight, DualWordElement};

fn report(n: u32, title: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "criterion {n:>2} {title}: {status}");
    for f in failures.iter().take(5) {
        let _ = writeln!(out, "    {f}");
    }
    let _ = out.flush();
    assert!(failures.is_empty(), "criterion {n} failed: {failures:?}");
}

fn failed(lines: &[CheckLine], filter: impl Fn(&CheckLine) -> bool) -> Vec<String> {
    assert!(lines.iter().any(&filter), "no matching checks");
    lines
        .iter()
        .filter(|l| filter(l) && !l.report_only && !l.pass)
        .map(|l| format!("{}: {}", l.name, l.detail))
        .collect()
}

fn hopf(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_hopf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn criterion_01_hopf_axioms() {
    let bounds = AxiomBounds {
        ck_vertices: 6,
        ck_weight: 5,
        word_weight: 5,
        foissy_vertices: 5,
    };
    let lines = hopf_axiom_checks(bounds);
    let wanted = ["ck/", "ck-labeled/", "shuffle/", "quasi-shuffle/", "foissy/"];
    for p in wanted {
        assert!(lines.iter().any(|l| l.name.starts_with(p)), "missing {p}");
    }
    report(1, "Hopf axioms", &failed(&lines, |_| true));
}

#[test]
fn criterion_02_gl_ck_duality() {
    let lines = duality_checks(5);
    report(2, "GL/CK duality", &failed(&lines, |l| l.name.starts_with("gl-ck/")));
}

#[test]
fn criterion_03_hoffman() {
    let lines = duality_checks(5);
    report(
        3,
        "Hoffman isomorphism",
        &failed(&lines, |l| l.name.starts_with("hoffman/")),
    );
}

#[test]
fn criterion_04_pi() {
    let lines = pi_checks(5);
    let fails = failed(&lines, |l| l.name.starts_with("pi/"));
    for n in ["pi/bplus", "pi/multiplicative", "pi/kernel", "pi/universal-cocycle"] {
        assert!(lines.iter().any(|l| l.name == n), "missing {n}");
    }
    report(4, "pi homomorphism", &fails);
}

/// Rank of all left-normed brackets of letters of weight n.
fn free_lie_dimension(n: u32) -> usize {
    let brackets: Vec<DualWordElement> = words_of_weight(n)
        .iter()
        .map(|w| {
            let mut letters = w.letters().iter();
            let first = e_gen(*letters.next().unwrap());
            letters.fold(first, |acc, &k| lie_bracket(&e_gen(k), &acc))
        })
        .collect();
    rank(&brackets)
}

#[test]
fn criterion_05_lyndon_hall() {
    let mut fails = Vec::new();
    let words = lyndon_generate(6);
    for (n, expected) in (1..=6).zip([1usize, 1, 2, 3, 6, 9]) {
        let count = words.iter().filter(|w| w.weight() == n).count();
        let dim = free_lie_dimension(n);
        if count != expected || dim != expected {
            fails.push(format!(
                "weight {n}: {count} words, free Lie rank {dim}, expected {expected}"
            ));
        }
    }
    for w in &words {
        match hall_tree_of_lyndon(w) {
            Ok(t) if t.foliage == *w => {}
            _ => fails.push(format!("foliage round trip fails on {w}")),
        }
    }
    let axioms = check_hall_axioms(5, AxiomReading::DropAll);
    if !axioms.all_hold() {
        fails.push(format!("Hall axioms: {axioms:?}"));
    }
    report(5, "Lyndon/Hall", &fails);
}

#[test]
fn criterion_06_pbw_rank() {
    let mut fails = Vec::new();
    for n in 1..=5u32 {
        let elems: Vec<_> = hall_forests(n)
            .iter()
            .map(|u| pbw_element(u, Orientation::Frame))
            .collect();
        let r = rank(&elems);
        if r != 1 << (n - 1) {
            fails.push(format!("weight {n}: rank {r}"));
        }
    }
    report(6, "PBW rank", &fails);
}

#[test]
fn criterion_07_zhao() {
    let mut fails = Vec::new();
    if zhao_eps(1) != LinComb::basis(Tree::ladder(2)) {
        fails.push(format!("eps1 = {}", zhao_eps(1)));
    }
    if zhao_eps(2) != LinComb::term(parse_tree("[[],[]]").unwrap(), q(1, 2)) {
        fails.push(format!("eps2 = {}", zhao_eps(2)));
    }
    let z = zhao_zstar(&LinComb::basis(parse_forest("[[],[]]").unwrap()));
    let expected: LinComb<Composition> = [(Composition(vec![1, 1, 1]), qi(2)), (Composition(vec![2, 1]), qi(1))]
        .into_iter()
        .collect();
    if z != expected {
        fails.push(format!("Z*(cherry) = {z}"));
    }
    report(7, "Zhao", &fails);
}

#[test]
fn criterion_08_diagrams() {
    let lines = diagram_checks(4).unwrap();
    let mut fails = failed(&lines, |_| true);
    for d in ["ladder-square", "ladder-square-dual", "beta-square", "theta1"] {
        if !lines.iter().any(|l| l.name == d && !l.report_only) {
            fails.push(format!("{d} not checked"));
        }
    }
    let o = hopf(&["check", "--suite", "diagrams", "--max-weight", "4"]);
    if !o.status.success() || String::from_utf8_lossy(&o.stdout) != golden("diagrams_4.txt") {
        fails.push("diagram report differs from golden file".into());
    }
    report(8, "diagrams", &fails);
}

#[test]
fn criterion_09_frame_coefficients() {
    let mut fails = Vec::new();
    for w in words_up_to_weight(6) {
        if frame_coefficient(&w) != iterated_integral(&w) {
            fails.push(format!("{w}"));
        }
    }
    let spot = [
        ("f1", q(1, 1)),
        ("f2", q(1, 2)),
        ("f1.f1", q(1, 2)),
        ("f1.f2", q(1, 3)),
        ("f2.f1", q(1, 6)),
    ];
    for (s, v) in spot {
        let got = frame_coefficient(&parse_word(s).unwrap());
        if got != v {
            fails.push(format!("{s}: {got}"));
        }
    }
    report(9, "frame coefficients", &fails);
}

#[test]
fn criterion_10_hall_identity() {
    let mut fails = Vec::new();
    for n in 1..=5 {
        let r = hall_identity_check(n, Orientation::Frame);
        if let Some(m) = r.mismatches.first() {
            let k = r.mismatches.len();
            fails.push(format!(
                "N = {n}: {k} mismatches, first {}: frame {} against {}",
                m.word, m.frame, m.hall
            ));
        }
    }
    let b = beta_u(5);
    for (u, v) in b.iter() {
        if u.len() >= 2 && *v != qi(0) {
            fails.push(format!("beta_u({u}) = {v}"));
        }
    }
    if b.at(&parse_forest("f2[f1]").unwrap()).unwrap() != q(1, 12) {
        fails.push("beta_u(f2[f1]) != 1/12".into());
    }
    report(10, "exponential Hall identity", &fails);
}

#[test]
fn criterion_11_cli_determinism() {
    let mut fails = Vec::new();
    let cases: [(&[&str], &str); 3] = [
        (&["frame", "--max-weight", "4", "--format", "json"], "frame_json_4.txt"),
        (&["lyndon", "--max-weight", "5"], "lyndon_5.txt"),
        (&["hall", "--max-weight", "4"], "hall_4.txt"),
    ];
    for (args, file) in cases {
        let o = hopf(args);
        if !o.status.success() || String::from_utf8_lossy(&o.stdout) != golden(file) {
            fails.push(format!("{args:?} differs from {file}"));
        }
    }
    let o = hopf(&["check", "--suite", "all", "--max-weight", "4"]);
    if o.status.code() != Some(0) {
        fails.push(format!("check --suite all exited {:?}", o.status.code()));
    }
    report(11, "CLI determinism", &fails);
}
