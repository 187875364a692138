//! One line per acceptance criterion. Every comparison is exact.

use keypoly::base_fields::{FieldContext, FieldElement};
use keypoly::diskoid::{decompose, diskoid_value, epsilon_radius, non_multiplicative_diskoid};
use keypoly::newton::lower_hull;
use keypoly::polynomials::Polynomial;
use keypoly::report::Report;
use keypoly::suites::{self, count};
use keypoly::valuations::{epsilon_factor, value_of, PolyValuation};
use keypoly::value_group::GroupValue;

const SEED: u64 = 1;

fn tq() -> FieldContext {
    FieldContext::tadic()
}

fn p(s: &str) -> Polynomial {
    Polynomial::parse(s, tq()).unwrap()
}

fn el(s: &str) -> FieldElement {
    FieldElement::parse(s, tq()).unwrap()
}

fn v(s: &str) -> GroupValue {
    s.parse().unwrap()
}

/// All listed properties passed in full, and each ran at least `min` times.
fn counts_ok(report: &Report, props: &[&str], min: usize) -> (bool, String) {
    let mut ok = report.passed();
    let mut notes = Vec::new();
    for prop in props {
        match count(report, prop) {
            Some((passed, total)) => {
                ok &= passed == total && total >= min;
                notes.push(format!("{prop} {passed}/{total}"));
            }
            None => {
                ok = false;
                notes.push(format!("{prop} missing"));
            }
        }
    }
    (ok, notes.join(", "))
}

fn criterion_1() -> (bool, String) {
    let a = el("t^-1");
    let f = p("X*(X - t^-1)");
    let d = decompose(&f, &[el("0"), a.clone()], &v("-1")).unwrap();
    let vx = diskoid_value(&d, &p("X")).unwrap();
    let vxa = diskoid_value(&d, &p("X - t^-1")).unwrap();
    let vf = diskoid_value(&d, &f).unwrap();
    let sum = vx.try_add(&vxa).unwrap();
    let e0 = epsilon_radius(&el("0"), &f, &v("-1")).unwrap();
    let ea = epsilon_radius(&a, &f, &v("-1")).unwrap();
    let ok = vx == v("-1")
        && vxa == v("-1")
        && vf == v("-1")
        && sum == v("-2")
        && e0 == v("0")
        && ea == v("0")
        && non_multiplicative_diskoid(&a).unwrap().passed();
    (
        ok,
        format!("X: {vx}, X-a: {vxa}, product: {vf}, sum: {sum}, eps radii: {e0}, {ea}"),
    )
}

fn criterion_2() -> (bool, String) {
    let pts: Vec<(usize, GroupValue)> = [
        (0, 9),
        (2, 10),
        (6, 3),
        (8, 2),
        (8, 6),
        (10, 5),
        (11, 8),
        (12, 0),
        (14, 3),
        (20, 8),
    ]
    .iter()
    .map(|(a, g)| (*a, GroupValue::from_int(*g)))
    .collect();
    let poly = lower_hull(&pts).unwrap();
    let want_v: Vec<(usize, GroupValue)> = [(0, 9), (6, 3), (12, 0), (20, 8)]
        .iter()
        .map(|(a, g)| (*a, GroupValue::from_int(*g)))
        .collect();
    let want_s = vec![v("1"), v("1/2"), v("-1")];
    let ok = poly.vertices == want_v && poly.slopes == want_s;
    let verts: Vec<String> = poly
        .vertices
        .iter()
        .map(|(a, g)| format!("({a},{g})"))
        .collect();
    let slopes: Vec<String> = poly.slopes.iter().map(|s| s.to_string()).collect();
    (
        ok,
        format!(
            "vertices {}, slopes ({})",
            verts.join(" "),
            slopes.join(", ")
        ),
    )
}

fn criterion_3(corr: &Report) -> (bool, String) {
    let mu = PolyValuation::pair(el("t^(1/2)"), v("3/2")).unwrap();
    let trunc = mu.truncate(&p("X^2 - t")).unwrap();
    let hand = value_of(&trunc, &p("X^2")).unwrap() == v("1")
        && value_of(&trunc, &p("X^2 - t")).unwrap() == v("2");
    let (ok, notes) = counts_ok(
        corr,
        &[
            "truncation = pair on K[X]",
            "hand-computed truncation values",
        ],
        2,
    );
    let big = count(corr, "truncation = pair on K[X]").map_or(0, |c| c.1) >= 200;
    (
        ok && hand && big,
        format!("{notes}; mu_Q(X^2) = 1, mu_Q(Q) = 2: {hand}"),
    )
}

fn criterion_4(corr: &Report) -> (bool, String) {
    let mu = PolyValuation::pair(el("t^(1/2)"), v("3/2")).unwrap();
    let trunc = mu.truncate(&p("X^2 - t")).unwrap();
    let e_x2 = epsilon_factor(&trunc, &p("X^2")).unwrap();
    let e_q = epsilon_factor(&trunc, &p("X^2 - t")).unwrap();
    let spot = e_x2 == v("1/2") && e_q == v("3/2");
    let (ok, notes) = counts_ok(
        corr,
        &["epsilon bound and biconditional", "eps spot values"],
        1,
    );
    let big = count(corr, "epsilon bound and biconditional").map_or(0, |c| c.1) >= 200;
    (
        ok && spot && big,
        format!("{notes}; eps_muQ(X^2) = {e_x2}, eps_muQ(Q) = {e_q}"),
    )
}

fn criterion_5(newton: &Report) -> (bool, String) {
    counts_ok(newton, &["slope data = root configuration"], 100)
}

fn criterion_6(newton: &Report) -> (bool, String) {
    counts_ok(newton, &["hull = oracle"], 200)
}

fn criterion_7(axioms: &Report) -> (bool, String) {
    let v_props = [
        "gauss V1",
        "gauss V2",
        "gauss V3",
        "pair V1",
        "pair V2",
        "pair V3",
        "truncation V1",
        "truncation V2",
        "truncation V3",
    ];
    let (ok_v, notes_v) = counts_ok(axioms, &v_props, 1);
    let pairs: usize = ["gauss V1", "pair V1", "truncation V1"]
        .iter()
        .map(|p| count(axioms, p).map_or(0, |c| c.1))
        .sum();
    let (ok_h, notes_h) = counts_ok(axioms, &["hasse leibniz", "hasse composition"], 200);
    (
        ok_v && ok_h && pairs >= 500,
        format!("{pairs} axiom pairs; {notes_v}; {notes_h}"),
    )
}

fn criterion_8(disk: &Report) -> (bool, String) {
    counts_ok(disk, &["ball minimum attained"], 100)
}

fn criterion_9() -> (bool, String) {
    let reports = suites::fixture_reports();
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.claim.as_str())
        .collect();
    let ok = failed.is_empty();
    let note = if ok {
        format!("{} fixture reports pass", reports.len())
    } else {
        format!("failing: {}", failed.join("; "))
    };
    (ok, note)
}

fn main() {
    let started = std::time::Instant::now();
    let axioms = suites::axioms_suite(SEED);
    let newton = suites::newton_suite(SEED);
    let corr = suites::correspondence_suite(SEED);
    let disk = suites::diskoid_suite(SEED);

    let results = [
        ("non-multiplicative diskoid", criterion_1()),
        ("ten-point polygon", criterion_2()),
        ("truncation = pair valuation", criterion_3(&corr)),
        ("epsilon biconditional", criterion_4(&corr)),
        ("slope data = root configuration", criterion_5(&newton)),
        ("hull oracle", criterion_6(&newton)),
        (
            "valuation axioms and Hasse identities",
            criterion_7(&axioms),
        ),
        ("ball minimum attainment", criterion_8(&disk)),
        ("fixture checks", criterion_9()),
    ];
    let mut all = true;
    for (i, (name, (ok, note))) in results.iter().enumerate() {
        all &= ok;
        println!(
            "criterion {}: {} {name} ({note})",
            i + 1,
            if *ok { "PASS" } else { "FAIL" }
        );
    }
    println!("seed {SEED}, {:.2?}", started.elapsed());
    if !all {
        std::process::exit(1);
    }
}
