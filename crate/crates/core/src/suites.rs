//! Seeded property suites. Each suite draws its samples from a ChaCha stream,
//! so a `(suite, seed)` pair always reproduces the same report.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::base_fields::{binomial_roots, FieldContext, FieldElement};
use crate::diskoid::{
    attain_ball_minimum, ball_value, decompose, diskoid_value, membership,
    non_multiplicative_diskoid, verify_conjugate_invariance, verify_root_matching, Ball, Diskoid,
};
use crate::error::{Error, Result};
use crate::newton::{
    check_support, lower_hull, root_configuration, slope_data, verify_coefficient_polygon,
    verify_slope_root_equivalence,
};
use crate::polynomials::{binomial, hasse_derivative, taylor_at, Polynomial};
use crate::report::{corpus_hash, Report};
use crate::valuations::{
    epsilon_factor, pairs_equivalent, value_of, verify_epsilon_equality, verify_graded_rewrite,
    verify_product_rule, verify_truncation_correspondence, PolyValuation,
};
use crate::value_group::{GroupValue, Rational};

pub const SUITES: [&str; 5] = ["all", "axioms", "newton", "correspondence", "diskoid"];

/// Per-property pass counts with the first few failures kept for the report.
#[derive(Default)]
struct Tally {
    counts: BTreeMap<&'static str, (usize, usize)>,
    failures: Vec<Value>,
}

impl Tally {
    fn record(&mut self, name: &'static str, ok: bool, context: impl FnOnce() -> Value) {
        let entry = self.counts.entry(name).or_default();
        entry.1 += 1;
        if ok {
            entry.0 += 1;
        } else if self.failures.len() < 10 {
            self.failures
                .push(json!({"property": name, "case": context()}));
        }
    }

    fn record_result(
        &mut self,
        name: &'static str,
        res: Result<bool>,
        context: impl FnOnce() -> Value,
    ) {
        match res {
            Ok(ok) => self.record(name, ok, context),
            Err(e) => {
                let msg = e.to_string();
                self.record(name, false, || json!({"error": msg, "case": context()}))
            }
        }
    }

    fn record_report(&mut self, name: &'static str, res: Result<Report>) {
        match res {
            Ok(r) => {
                let ok = r.passed();
                self.record(name, ok, || serde_json::to_value(&r).unwrap())
            }
            Err(e) => {
                let msg = e.to_string();
                self.record(name, false, || json!({"error": msg}))
            }
        }
    }

    fn into_report(self, claim: &str, seed: u64) -> Report {
        let mut report = Report::new(claim);
        report.detail(json!({"seed": seed}));
        let counts: BTreeMap<&str, Value> = self
            .counts
            .iter()
            .map(|(k, (p, t))| (*k, json!({"passed": p, "total": t})))
            .collect();
        report.detail(json!({"counts": counts}));
        for f in self.failures {
            report.fail(f);
        }
        if self.counts.values().any(|(p, t)| p != t) {
            report.status = crate::report::Status::Fail;
        }
        report
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn ctx() -> FieldContext {
    FieldContext::tadic()
}

fn small_nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    let v = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

/// `Σ c·t^{k/d}` with one to `max_terms` terms, `d` drawn from `denoms`.
fn random_element(rng: &mut ChaCha8Rng, denoms: &[i64], max_terms: usize) -> FieldElement {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let mut x = FieldElement::zero(ctx());
        for _ in 0..n {
            let d = *denoms.choose(rng).unwrap();
            let k = rng.gen_range(-2 * d..=3 * d);
            let c = Rational::from_integer(small_nonzero(rng, 4).into());
            x = &x + &FieldElement::monomial(ctx(), c, Rational::new(k.into(), d.into())).unwrap();
        }
        // Terms can cancel; redraw rather than return zero.
        if !x.is_zero() {
            return x;
        }
    }
}

fn maybe_zero_element(rng: &mut ChaCha8Rng, denoms: &[i64]) -> FieldElement {
    if rng.gen_bool(0.2) {
        FieldElement::zero(ctx())
    } else {
        random_element(rng, denoms, 2)
    }
}

fn random_poly(rng: &mut ChaCha8Rng, denoms: &[i64], min_deg: usize, max_deg: usize) -> Polynomial {
    let n = rng.gen_range(min_deg..=max_deg);
    let mut coeffs: Vec<FieldElement> = (0..n).map(|_| maybe_zero_element(rng, denoms)).collect();
    coeffs.push(random_element(rng, denoms, 2));
    Polynomial::from_coeffs(ctx(), coeffs).unwrap()
}

fn random_value(rng: &mut ChaCha8Rng, max_den: i64, lo: i64, hi: i64) -> GroupValue {
    let d = rng.gen_range(1..=max_den);
    GroupValue::rank1(Rational::new(
        rng.gen_range(lo * d..=hi * d).into(),
        d.into(),
    ))
}

fn fixture_q() -> Polynomial {
    Polynomial::parse("X^2 - t", ctx()).unwrap()
}

fn fixture_center() -> FieldElement {
    FieldElement::parse("t^(1/2)", ctx()).unwrap()
}

fn fixture_delta() -> GroupValue {
    GroupValue::from_ratio(3, 2)
}

fn fixture_pair() -> PolyValuation {
    PolyValuation::pair(fixture_center(), fixture_delta()).unwrap()
}

fn fixture_truncation() -> PolyValuation {
    fixture_pair().truncate(&fixture_q()).unwrap()
}

/// `(V1) μ(fg) = μ(f) + μ(g)`, `(V2) μ(f+g) ≥ min`, `(V3) μ(1) = 0, μ(0) = ∞`.
fn check_axioms(
    t: &mut Tally,
    name: [&'static str; 3],
    mu: &PolyValuation,
    f: &Polynomial,
    g: &Polynomial,
) {
    let case = || json!({"mu": mu.to_string(), "f": f.to_string(), "g": g.to_string()});
    t.record_result(
        name[0],
        (|| {
            let lhs = value_of(mu, &(f * g))?;
            let rhs = value_of(mu, f)?.try_add(&value_of(mu, g)?)?;
            Ok(lhs == rhs)
        })(),
        case,
    );
    t.record_result(
        name[1],
        (|| {
            let lhs = value_of(mu, &(f + g))?;
            let vf = value_of(mu, f)?;
            let vg = value_of(mu, g)?;
            let min = if vf.try_cmp(&vg)?.is_le() { vf } else { vg };
            Ok(lhs.try_cmp(&min)?.is_ge())
        })(),
        case,
    );
    t.record_result(
        name[2],
        (|| {
            Ok(value_of(mu, &Polynomial::one(ctx()))? == ctx().zero_value()
                && value_of(mu, &Polynomial::zero(ctx()))?.is_infinite())
        })(),
        case,
    );
}

/// Valuation axioms for Gauss, pair and truncation valuations; Leibniz and
/// composition identities of Hasse derivatives; Taylor against Hasse.
pub fn axioms_suite(seed: u64) -> Report {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, 1);
    let kbar = [1, 2, 3];
    for _ in 0..200 {
        let mu = PolyValuation::gauss(random_value(&mut rng, 6, -2, 3)).unwrap();
        let f = random_poly(&mut rng, &kbar, 0, 4);
        let g = random_poly(&mut rng, &kbar, 0, 4);
        check_axioms(&mut t, ["gauss V1", "gauss V2", "gauss V3"], &mu, &f, &g);
    }
    for _ in 0..200 {
        let a = random_element(&mut rng, &kbar, 3);
        let mu = PolyValuation::pair(a, random_value(&mut rng, 6, -2, 3)).unwrap();
        let f = random_poly(&mut rng, &kbar, 0, 4);
        let g = random_poly(&mut rng, &kbar, 0, 4);
        check_axioms(&mut t, ["pair V1", "pair V2", "pair V3"], &mu, &f, &g);
    }
    // The truncation is a valuation on K[X], where it agrees with the pair valuation.
    let trunc = fixture_truncation();
    for _ in 0..200 {
        let f = random_poly(&mut rng, &[1], 0, 4);
        let g = random_poly(&mut rng, &[1], 0, 4);
        check_axioms(
            &mut t,
            ["truncation V1", "truncation V2", "truncation V3"],
            &trunc,
            &f,
            &g,
        );
    }
    for _ in 0..200 {
        let f = random_poly(&mut rng, &kbar, 0, 5);
        let g = random_poly(&mut rng, &kbar, 0, 5);
        let fg = &f * &g;
        let leibniz = (0..=fg.deg()).all(|i| {
            let rhs = (0..=i).fold(Polynomial::zero(ctx()), |acc, j| {
                &acc + &(&hasse_derivative(&f, j) * &hasse_derivative(&g, i - j))
            });
            hasse_derivative(&fg, i) == rhs
        });
        t.record(
            "hasse leibniz",
            leibniz,
            || json!({"f": f.to_string(), "g": g.to_string()}),
        );
        let composition = (0..=f.deg()).all(|i| {
            (0..=f.deg()).all(|j| {
                let c = FieldElement::from_rational(
                    ctx(),
                    Rational::from_integer(binomial(i + j, i).into()),
                );
                hasse_derivative(&hasse_derivative(&f, j), i)
                    == hasse_derivative(&f, i + j).scale(&c)
            })
        });
        t.record(
            "hasse composition",
            composition,
            || json!({"f": f.to_string()}),
        );
        let a = random_element(&mut rng, &kbar, 2);
        let taylor = taylor_at(&f, &a).map(|tc| {
            (0..=f.deg()).all(|i| {
                tc.get(i)
                    .cloned()
                    .unwrap_or_else(|| FieldElement::zero(ctx()))
                    == hasse_derivative(&f, i).eval(&a)
            })
        });
        t.record_result(
            "taylor = hasse at a point",
            taylor,
            || json!({"f": f.to_string(), "a": a.to_string()}),
        );
    }
    t.into_report("valuation axioms and Hasse-Schmidt identities", seed)
}

/// Brute-force lower hull over rank-one values: every pair of points whose
/// line has all points weakly above it supports a face; each face runs between
/// the extreme points on its line.
pub fn oracle_hull(points: &[(usize, Rational)]) -> (Vec<(usize, Rational)>, Vec<Rational>) {
    let mut faces: Vec<(usize, usize, Rational)> = Vec::new();
    for p in points {
        for q in points {
            if p.0 >= q.0 {
                continue;
            }
            // Natural slope and intercept of the line through p and q.
            let m = (&q.1 - &p.1) / Rational::from_integer(((q.0 - p.0) as i64).into());
            let line =
                |x: usize| &p.1 + &m * Rational::from_integer(((x as i64) - (p.0 as i64)).into());
            if points.iter().all(|r| r.1 >= line(r.0)) {
                let on: Vec<usize> = points
                    .iter()
                    .filter(|r| r.1 == line(r.0))
                    .map(|r| r.0)
                    .collect();
                let (lo, hi) = (*on.iter().min().unwrap(), *on.iter().max().unwrap());
                if !faces.iter().any(|f| f.0 == lo && f.1 == hi) {
                    faces.push((lo, hi, -m));
                }
            }
        }
    }
    faces.sort_by_key(|f| f.0);
    let height = |x: usize| {
        points
            .iter()
            .filter(|r| r.0 == x)
            .map(|r| r.1.clone())
            .min()
            .unwrap()
    };
    if faces.is_empty() {
        let x = points.iter().map(|r| r.0).min().unwrap();
        return (vec![(x, height(x))], Vec::new());
    }
    let mut vertices = vec![(faces[0].0, height(faces[0].0))];
    for f in &faces {
        vertices.push((f.1, height(f.1)));
    }
    (vertices, faces.into_iter().map(|f| f.2).collect())
}

/// Roots drawn as linear factors and `±` pairs of binomial factors `X² − s²t^e`.
fn random_roots(rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    let mut roots = Vec::new();
    let factors = rng.gen_range(1..=3);
    for _ in 0..factors {
        if rng.gen_bool(0.5) {
            roots.push(random_element(rng, &[1, 2, 3], 2));
        } else {
            let s = Rational::from_integer(small_nonzero(rng, 3).into());
            let e = Rational::new(rng.gen_range(-3..=5).into(), rng.gen_range(1..=2).into());
            let c = FieldElement::monomial(ctx(), &s * &s, e).unwrap();
            roots.extend(binomial_roots(&c, 2).unwrap());
        }
    }
    // Occasionally repeat a root.
    if rng.gen_bool(0.2) {
        let r = roots[0].clone();
        roots.push(r);
    }
    roots
}

fn random_kbar_valuation(rng: &mut ChaCha8Rng, roots: &[FieldElement]) -> PolyValuation {
    let delta = random_value(rng, 4, -2, 3);
    match rng.gen_range(0..3) {
        0 => PolyValuation::gauss(delta).unwrap(),
        1 => PolyValuation::pair(roots.choose(rng).unwrap().clone(), delta).unwrap(),
        _ => PolyValuation::pair(random_element(rng, &[1, 2], 2), delta).unwrap(),
    }
}

/// Hull against the brute-force oracle; slope data against root
/// configuration; support property; classical coefficient polygon.
pub fn newton_suite(seed: u64) -> Report {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, 2);
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        let pts: Vec<(usize, Rational)> = (0..n)
            .map(|_| {
                let d: i64 = rng.gen_range(1..=12);
                (
                    rng.gen_range(0..=15),
                    Rational::new(rng.gen_range(-6 * d..=6 * d).into(), d.into()),
                )
            })
            .collect();
        let input: Vec<(usize, GroupValue)> = pts
            .iter()
            .map(|(a, v)| (*a, GroupValue::rank1(v.clone())))
            .collect();
        let ours = lower_hull(&input).unwrap();
        let (ov, os) = oracle_hull(&pts);
        let same = ours
            .vertices
            .iter()
            .map(|(a, g)| (*a, g.as_rank1().unwrap().clone()))
            .collect::<Vec<_>>()
            == ov
            && ours
                .slopes
                .iter()
                .map(|s| s.as_rank1().unwrap().clone())
                .collect::<Vec<_>>()
                == os;
        t.record("hull = oracle", same, || {
            json!({"points": pts.iter().map(|(a, v)| json!([a, v.to_string()])).collect::<Vec<_>>()})
        });
        t.record_result("hull support property", check_support(&ours), || {
            json!(null)
        });
    }
    for _ in 0..120 {
        let roots = random_roots(&mut rng);
        let lc = random_element(&mut rng, &[1], 1);
        let f = Polynomial::from_roots(&lc, &roots);
        let mu = random_kbar_valuation(&mut rng, &roots);
        t.record_report(
            "slope data = root configuration",
            verify_slope_root_equivalence(&f, &roots, &mu),
        );
        t.record_report(
            "coefficient polygon",
            verify_coefficient_polygon(&f, &roots),
        );
        let first = slope_data(&f, &mu)
            .and_then(|p| Ok(p.slopes.first().cloned() == Some(epsilon_factor(&mu, &f)?)));
        t.record_result(
            "first slope = epsilon",
            first,
            || json!({"f": f.to_string()}),
        );
        let delta1 = root_configuration(&roots, &mu)
            .and_then(|rc| Ok(rc.groups[0].1 == crate::valuations::delta_invariant(&mu, &roots)?));
        t.record_result(
            "delta = first root value",
            delta1,
            || json!({"f": f.to_string()}),
        );
    }
    t.into_report("newton polygons", seed)
}

/// Truncation against pair valuation on the `X² − t` fixture over a seeded
/// `K[X]` corpus, with the ε comparison and the graded rewrite.
pub fn correspondence_suite(seed: u64) -> Report {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, 3);
    let q = fixture_q();
    let mu = fixture_pair();
    let trunc = fixture_truncation();
    let mut corpus = vec![Polynomial::parse("X^2", ctx()).unwrap(), q.clone()];
    while corpus.len() < 202 {
        corpus.push(random_poly(&mut rng, &[1], 1, 6));
    }

    let hand = [("X^2", "1"), ("X^2 - t", "2")];
    for (f, want) in hand {
        let f = Polynomial::parse(f, ctx()).unwrap();
        let ok = value_of(&trunc, &f).map(|v| v.to_string() == want);
        t.record_result(
            "hand-computed truncation values",
            ok,
            || json!({"f": f.to_string()}),
        );
    }
    let spot = epsilon_factor(&trunc, &corpus[0])
        .and_then(|a| Ok((a, epsilon_factor(&trunc, &q)?)))
        .map(|(a, b)| a == GroupValue::from_ratio(1, 2) && b == fixture_delta());
    t.record_result("eps spot values", spot, || json!(null));

    let report = verify_truncation_correspondence(&q, &fixture_center(), &fixture_delta(), &corpus);
    let hash = corpus_hash(&corpus);
    for f in &corpus {
        let ok = (|| Ok(value_of(&trunc, f)? == value_of(&mu, f)?))();
        t.record_result(
            "truncation = pair on K[X]",
            ok,
            || json!({"f": f.to_string()}),
        );
        t.record_report(
            "epsilon bound and biconditional",
            verify_epsilon_equality(&q, &mu, f),
        );
        let below =
            epsilon_factor(&mu, f).and_then(|e| Ok(e.try_cmp(&epsilon_factor(&mu, &q)?)?.is_lt()));
        if let Ok(true) = below {
            t.record_report("graded rewrite", verify_graded_rewrite(&q, &mu, f));
        }
    }
    for _ in 0..50 {
        let parts: Vec<Polynomial> = (0..rng.gen_range(2..=3))
            .map(|_| random_poly(&mut rng, &[1], 1, 1))
            .collect();
        t.record_report("product rule", verify_product_rule(&mu, &q, &parts));
    }
    let mut out = t.into_report("truncation and pair valuation agree on K[X]", seed);
    out.detail(json!({"corpus": corpus.len(), "corpus_sha256": hash}));
    if let Ok(r) = report {
        out.absorb(r);
    }
    out
}

/// Diskoid properties on random root sets plus the attainment search.
pub fn diskoid_suite(seed: u64) -> Report {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, 4);
    for _ in 0..120 {
        let a = random_element(&mut rng, &[1, 2, 3], 2);
        let delta = random_value(&mut rng, 3, -2, 3);
        let g = random_poly(&mut rng, &[1, 2], 1, 4);
        let attained = attain_ball_minimum(&a, &delta, &g)
            .map(|at| at.witness.is_some() && at.attempts <= g.deg() + 1);
        t.record_result(
            "ball minimum attained",
            attained,
            || json!({"a": a.to_string(), "delta": delta.to_string(), "g": g.to_string()}),
        );
        let mu = PolyValuation::pair(a.clone(), delta.clone()).unwrap();
        let same = (|| Ok(ball_value(&a, &delta, &g)? == value_of(&mu, &g)?))();
        t.record_result(
            "ball value = pair value",
            same,
            || json!({"g": g.to_string()}),
        );
        let h = random_poly(&mut rng, &[1, 2], 0, 3);
        let single = Diskoid {
            defining: Polynomial::linear(&a),
            radius: delta.clone(),
            balls: vec![Ball::new(a.clone(), delta.clone())],
        };
        let v1 = (|| {
            Ok(diskoid_value(&single, &(&g * &h))?
                == diskoid_value(&single, &g)?.try_add(&diskoid_value(&single, &h)?)?)
        })();
        t.record_result(
            "single ball is multiplicative",
            v1,
            || json!({"g": g.to_string(), "h": h.to_string()}),
        );
    }
    for _ in 0..100 {
        let roots = random_roots(&mut rng);
        let f = Polynomial::from_roots(&FieldElement::one(ctx()), &roots);
        let rho = random_value(&mut rng, 3, -3, 4);
        let d = match decompose(&f, &roots, &rho) {
            Ok(d) => d,
            Err(e) => {
                t.record("decompose", false, || json!({"error": e.to_string()}));
                continue;
            }
        };
        let g = random_poly(&mut rng, &[1, 2], 0, 3);
        let h = random_poly(&mut rng, &[1, 2], 0, 3);
        let ultra = (|| {
            let s = diskoid_value(&d, &(&g + &h))?;
            let (vg, vh) = (diskoid_value(&d, &g)?, diskoid_value(&d, &h)?);
            let min = if vg.try_cmp(&vh)?.is_le() { vg } else { vh };
            Ok(s.try_cmp(&min)?.is_ge())
        })();
        t.record_result("diskoid ultrametric", ultra, || json!({"f": f.to_string()}));
        let sup = (|| {
            let p = diskoid_value(&d, &(&g * &h))?;
            let sum = diskoid_value(&d, &g)?.try_add(&diskoid_value(&d, &h)?)?;
            Ok(p.try_cmp(&sum)?.is_ge())
        })();
        t.record_result(
            "diskoid super-multiplicative",
            sup,
            || json!({"f": f.to_string()}),
        );
        for x in [
            roots.choose(&mut rng).unwrap() + &random_element(&mut rng, &[1, 2], 1),
            random_element(&mut rng, &[1, 2, 3], 2),
            roots[0].clone(),
        ] {
            t.record_report("membership coherence", membership(&x, &d));
        }
    }
    // Diskoid of the fixture key polynomial recovers the truncation on K[X].
    let q = fixture_q();
    let qd = decompose(
        &q,
        &[fixture_center(), -&fixture_center()],
        &GroupValue::from_int(2),
    )
    .unwrap();
    let trunc = fixture_truncation();
    for _ in 0..100 {
        let f = random_poly(&mut rng, &[1], 0, 5);
        let ok = (|| Ok(diskoid_value(&qd, &f)? == value_of(&trunc, &f)?))();
        t.record_result(
            "diskoid of Q = truncation",
            ok,
            || json!({"f": f.to_string()}),
        );
    }
    t.into_report("diskoids and balls", seed)
}

fn el(s: &str) -> FieldElement {
    FieldElement::parse(s, ctx()).unwrap()
}

fn poly(s: &str) -> Polynomial {
    Polynomial::parse(s, ctx()).unwrap()
}

/// The fixed instances: product rule, pair equivalence, graded rewrite,
/// conjugate invariance, root matching, and the non-multiplicative diskoid.
pub fn fixture_reports() -> Vec<Report> {
    let q = fixture_q();
    let mu = fixture_pair();
    let mut out = Vec::new();
    out.push(verify_product_rule(&mu, &q, &[poly("X"), poly("X")]));
    out.push(verify_product_rule(
        &mu,
        &q,
        &[poly("X - t"), poly("X - t")],
    ));

    let mut eq = Report::new("equivalent pairs define the same valuation");
    let (a, a2) = (el("t^(1/2)"), el("t^(1/2) + t^2"));
    let equivalent = pairs_equivalent(&a, &fixture_delta(), &a2, &fixture_delta()).unwrap_or(false);
    eq.check(
        "pairs equivalent",
        equivalent,
        json!({"a": a.to_string(), "a'": a2.to_string()}),
    );
    let mu2 = PolyValuation::pair(a2, fixture_delta()).unwrap();
    for f in [
        "X",
        "X^2 - t",
        "X^3 + t*X",
        "X - t^(1/2)",
        "t^(1/3)*X^2 - 1",
    ] {
        let same = value_of(&mu, &poly(f)).ok() == value_of(&mu2, &poly(f)).ok();
        eq.check("same value", same, json!({"f": f}));
    }
    let unequal = !pairs_equivalent(
        &el("0"),
        &GroupValue::from_int(1),
        &el("0"),
        &GroupValue::from_int(2),
    )
    .unwrap_or(true);
    eq.check("different radii differ", unequal, json!(null));
    out.push(Ok(eq));

    out.push(verify_graded_rewrite(&q, &mu, &poly("X^2")));
    out.push(verify_graded_rewrite(&q, &mu, &poly("X + t")));
    let conj = [el("t^(1/2)"), el("-t^(1/2)")];
    out.push(verify_conjugate_invariance(
        &conj,
        &fixture_delta(),
        &[poly("X^2"), poly("X^3")],
    ));
    out.push(verify_root_matching(
        &q,
        &poly("X^2 - t*(1 + t)^2"),
        &conj,
        &[el("t^(1/2) + t^(3/2)"), el("-t^(1/2) - t^(3/2)")],
    ));
    out.push(verify_root_matching(&q, &q, &conj, &conj));
    out.push(non_multiplicative_diskoid(&el("t^-1")));
    out.into_iter()
        .map(|r| {
            r.unwrap_or_else(|e| {
                let mut bad = Report::new("fixture");
                bad.fail(json!({"error": e.to_string()}));
                bad
            })
        })
        .collect()
}

pub fn fixtures_report() -> Report {
    let mut report = Report::new("fixed instances");
    for r in fixture_reports() {
        report.absorb(r);
    }
    report
}

pub fn run_suite(name: &str, seed: u64) -> Result<Report> {
    let report = match name {
        "axioms" => axioms_suite(seed),
        "newton" => newton_suite(seed),
        "correspondence" => correspondence_suite(seed),
        "diskoid" => diskoid_suite(seed),
        "all" => {
            let mut all = Report::new("all suites");
            all.detail(json!({"seed": seed}));
            for r in [
                axioms_suite(seed),
                newton_suite(seed),
                correspondence_suite(seed),
                diskoid_suite(seed),
                fixtures_report(),
            ] {
                all.absorb(r);
            }
            all
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(report)
}

/// `(passed, total)` for one property of a suite report.
pub fn count(report: &Report, property: &str) -> Option<(usize, usize)> {
    report.details.iter().find_map(|d| {
        let c = d.get("counts")?.get(property)?;
        Some((
            c["passed"].as_u64()? as usize,
            c["total"].as_u64()? as usize,
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn oracle_on_ten_points() {
        let pts: Vec<(usize, Rational)> = [
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
        .map(|(a, v)| (*a, r(*v, 1)))
        .collect();
        let (v, s) = oracle_hull(&pts);
        assert_eq!(
            v,
            vec![(0, r(9, 1)), (6, r(3, 1)), (12, r(0, 1)), (20, r(8, 1))]
        );
        assert_eq!(s, vec![r(1, 1), r(1, 2), r(-1, 1)]);
    }

    #[test]
    fn oracle_degenerate() {
        let (v, s) = oracle_hull(&[(3, r(1, 2)), (3, r(-1, 2))]);
        assert_eq!((v, s), (vec![(3, r(-1, 2))], vec![]));
        let (v, s) = oracle_hull(&[(0, r(2, 1)), (1, r(1, 1)), (2, r(0, 1))]);
        assert_eq!(v, vec![(0, r(2, 1)), (2, r(0, 1))]);
        assert_eq!(s, vec![r(1, 1)]);
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope", 1), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn suites_are_deterministic() {
        let a = run_suite("newton", 3).unwrap().to_json();
        assert_eq!(a, run_suite("newton", 3).unwrap().to_json());
    }

    #[test]
    fn fixtures_pass() {
        for r in fixture_reports() {
            assert!(r.passed(), "{}", r.to_json());
        }
    }
}
