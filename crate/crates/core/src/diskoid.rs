//! Balls `D(a, δ)` and diskoids `D̃(f, ρ) = {x : ν̄(f(x)) ≥ ρ}` in the finite
//! Puiseux model.
//!
//! The value of a polynomial on a ball is the explicit minimum
//! `min_i ν̄(∂_i g(a)) + iδ`; on a diskoid it is the minimum over the balls of
//! its decomposition. Points of `K̄` are only ever sampled.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::base_fields::{FieldElement, FieldKind};
use crate::error::{Error, Result};
use crate::newton::ensure_roots_factor;
use crate::polynomials::{hasse_derivative, Polynomial};
use crate::report::{corpus_hash, Report};
use crate::value_group::{affine, slope, try_max, try_min, GroupValue, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub center: FieldElement,
    /// `Infinity` is the singleton `{center}`.
    pub radius: GroupValue,
}

impl Ball {
    pub fn new(center: FieldElement, radius: GroupValue) -> Self {
        Ball { center, radius }
    }

    pub fn contains(&self, x: &FieldElement) -> Result<bool> {
        Ok((x - &self.center)
            .valuation()
            .try_cmp(&self.radius)?
            .is_ge())
    }

    pub fn value(&self, g: &Polynomial) -> Result<GroupValue> {
        ball_value(&self.center, &self.radius, g)
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({}, {})", self.center, self.radius)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diskoid {
    pub defining: Polynomial,
    pub radius: GroupValue,
    pub balls: Vec<Ball>,
}

impl Diskoid {
    pub fn contains(&self, x: &FieldElement) -> Result<bool> {
        for b in &self.balls {
            if b.contains(x)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        json!({
            "defining": self.defining.to_string(),
            "rho": self.radius.to_string(),
            "balls": self.balls.iter().map(|b| json!({
                "center": b.center.to_string(),
                "radius": b.radius.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Diskoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let balls: Vec<String> = self.balls.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", balls.join(" ∪ "))
    }
}

/// `min_{x ∈ D(a,δ)} ν̄(g(x)) = min_i ν̄(∂_i g(a)) + iδ`, and `ν̄(g(a))` for `δ = ∞`.
pub fn ball_value(a: &FieldElement, delta: &GroupValue, g: &Polynomial) -> Result<GroupValue> {
    if delta.is_infinite() || g.is_zero() {
        return Ok(g.eval(a).valuation());
    }
    let terms = (0..=g.deg())
        .map(|i| affine(&hasse_derivative(g, i).eval(a).valuation(), i, delta))
        .collect::<Result<Vec<_>>>()?;
    Ok(try_min(terms)?.unwrap())
}

/// `ε(a; f, ρ) = max_{i≥1} (ρ − ν̄(∂_i f(a))) / i`, the least `λ` with `D(a, λ) ⊆ D̃(f, ρ)`.
pub fn epsilon_radius(a: &FieldElement, f: &Polynomial, rho: &GroupValue) -> Result<GroupValue> {
    if rho.is_infinite() {
        return Err(Error::InfiniteDelta);
    }
    if f.is_zero() || !f.eval(a).is_zero() {
        return Err(Error::NotARoot(a.to_string()));
    }
    let candidates = (1..=f.deg())
        .map(|i| (i, hasse_derivative(f, i).eval(a)))
        .filter(|(_, d)| !d.is_zero())
        .map(|(i, d)| slope(rho, &d.valuation(), i))
        .collect::<Result<Vec<_>>>()?;
    try_max(candidates)?.ok_or(Error::ConstantPolynomial)
}

/// One ball per distinct root, each of radius `ε(c; f, ρ)`.
pub fn decompose(f: &Polynomial, roots: &[FieldElement], rho: &GroupValue) -> Result<Diskoid> {
    ensure_roots_factor(f, roots)?;
    let mut balls: Vec<Ball> = Vec::new();
    for c in roots {
        let radius = epsilon_radius(c, f, rho)?;
        match balls.iter_mut().find(|b| b.center == *c) {
            Some(b) => {
                if radius.try_cmp(&b.radius)?.is_lt() {
                    b.radius = radius;
                }
            }
            None => balls.push(Ball::new(c.clone(), radius)),
        }
    }
    Ok(Diskoid {
        defining: f.clone(),
        radius: rho.clone(),
        balls,
    })
}

pub fn diskoid_value(d: &Diskoid, g: &Polynomial) -> Result<GroupValue> {
    let values = d
        .balls
        .iter()
        .map(|b| b.value(g))
        .collect::<Result<Vec<_>>>()?;
    Ok(try_min(values)?.unwrap_or(GroupValue::Infinity))
}

/// The two descriptions of `x ∈ D̃(f, ρ)`: `ν̄(f(x)) ≥ ρ`, and membership in a ball.
pub fn membership(x: &FieldElement, d: &Diskoid) -> Result<Report> {
    let fx = d.defining.eval(x).valuation();
    let by_value = fx.try_cmp(&d.radius)?.is_ge();
    let by_balls = d.contains(x)?;
    let mut report = Report::new("diskoid membership by value and by balls");
    report.detail(json!({
        "x": x.to_string(),
        "v(f(x))": fx.to_string(),
        "by_value": by_value,
        "by_balls": by_balls,
    }));
    report.check("definitions agree", by_value == by_balls, json!(null));
    Ok(report)
}

/// `ν̄(a)` of an element of `K̄` as a plain rational, when the group has rank 1
/// or the element sits in the field's embedded coordinate.
fn field_coordinate(ctx_dim: usize, delta: &GroupValue) -> Result<Rational> {
    let coords = delta
        .coords()
        .ok_or_else(|| Error::NotRepresentable("infinite radius".into()))?;
    if coords.len() != ctx_dim || coords[..ctx_dim - 1].iter().any(|c| !c.is_zero()) {
        return Err(Error::NotRepresentable(format!(
            "radius {delta} is outside the field's value group"
        )));
    }
    Ok(coords[ctx_dim - 1].clone())
}

/// An element of value exactly `δ`: `t^δ`, or `p^δ` for integral `δ` in the p-adic case.
pub fn element_of_value(a: &FieldElement, delta: &GroupValue) -> Result<FieldElement> {
    let ctx = a.context();
    let e = field_coordinate(ctx.group_dim(), delta)?;
    match ctx.kind() {
        FieldKind::TAdic => FieldElement::monomial(ctx, Rational::one(), e),
        FieldKind::Padic { p } => {
            if !e.is_integer() {
                return Err(Error::NotRepresentable(format!("p^{e} for p = {p}")));
            }
            let base = FieldElement::from_int(ctx, p as i64);
            let n = e.to_integer();
            let m: u32 = n
                .abs()
                .try_into()
                .map_err(|_| Error::NotRepresentable(format!("p^{n}")))?;
            let pow = base.pow(m);
            if n.is_negative() {
                pow.inverse()
            } else {
                Ok(pow)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attainment {
    pub formula: GroupValue,
    /// First `x = a + u·b` with `ν̄(g(x))` equal to the formula, if found.
    pub witness: Option<(FieldElement, usize)>,
    pub attempts: usize,
}

/// Searches `x = a + u·b`, `ν̄(b) = δ`, `u = 0, 1, …, deg g`, for a point of the
/// ball where `ν̄(g(x))` equals the ball formula.
pub fn attain_ball_minimum(
    a: &FieldElement,
    delta: &GroupValue,
    g: &Polynomial,
) -> Result<Attainment> {
    let formula = ball_value(a, delta, g)?;
    if delta.is_infinite() {
        return Ok(Attainment {
            formula,
            witness: Some((a.clone(), 0)),
            attempts: 1,
        });
    }
    let b = element_of_value(a, delta)?;
    let ctx = a.context();
    let mut attempts = 0;
    for u in 0..=g.deg() {
        attempts += 1;
        let x = a + &(&b * &FieldElement::from_int(ctx, u as i64));
        if g.eval(&x).valuation() == formula {
            return Ok(Attainment {
                formula,
                witness: Some((x, u)),
                attempts,
            });
        }
    }
    Ok(Attainment {
        formula,
        witness: None,
        attempts,
    })
}

/// The non-multiplicative diskoid `D̃(X(X−a), ν(a)) = D(0,0) ∪ D(a,0)` for `ν(a) < 0`.
pub fn non_multiplicative_diskoid(a: &FieldElement) -> Result<Report> {
    let ctx = a.context();
    let rho = a.valuation();
    if rho.try_cmp(&ctx.zero_value())?.is_ge() {
        return Err(Error::PreconditionViolated(format!(
            "needs v(a) < 0, got v({a}) = {rho}"
        )));
    }
    let zero = FieldElement::zero(ctx);
    let x = Polynomial::x(ctx);
    let x_minus_a = Polynomial::linear(a);
    let f = &x * &x_minus_a;
    let d = decompose(&f, &[zero.clone(), a.clone()], &rho)?;
    let eps0 = epsilon_radius(&zero, &f, &rho)?;
    let eps_a = epsilon_radius(a, &f, &rho)?;
    let vx = diskoid_value(&d, &x)?;
    let vxa = diskoid_value(&d, &x_minus_a)?;
    let vf = diskoid_value(&d, &f)?;
    let sum = vx.try_add(&vxa)?;
    let zero_value = ctx.zero_value();

    let mut report = Report::new("diskoid value is not multiplicative");
    report.detail(json!({
        "a": a.to_string(),
        "f": f.to_string(),
        "rho": rho.to_string(),
        "diskoid": d.to_json_value(),
        "value(X)": vx.to_string(),
        "value(X - a)": vxa.to_string(),
        "value(f)": vf.to_string(),
        "sum": sum.to_string(),
    }));
    report.check(
        "eps(0) = eps(a) = 0",
        eps0 == zero_value && eps_a == zero_value,
        json!({"eps(0)": eps0.to_string(), "eps(a)": eps_a.to_string()}),
    );
    report.check("value(X) = v(a)", vx == rho, json!(null));
    report.check("value(X - a) = v(a)", vxa == rho, json!(null));
    report.check("value(f) = v(a)", vf == rho, json!(null));
    report.check(
        "value(f) != value(X) + value(X - a)",
        vf != sum,
        json!(null),
    );
    Ok(report)
}

/// Ball values at all conjugate centers agree for every `g ∈ K[X]`.
pub fn verify_conjugate_invariance(
    roots: &[FieldElement],
    delta: &GroupValue,
    samples: &[Polynomial],
) -> Result<Report> {
    if roots.is_empty() {
        return Err(Error::EmptyRoots);
    }
    if let Some(s) = samples.iter().find(|s| !s.in_base_ring()) {
        return Err(Error::SampleNotInBaseRing(s.to_string()));
    }
    let mut report = Report::new("ball values are invariant under conjugation of the center");
    report.detail(json!({
        "roots": roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "delta": delta.to_string(),
        "samples": samples.len(),
        "corpus_sha256": corpus_hash(samples),
    }));
    for g in samples {
        let values = roots
            .iter()
            .map(|c| ball_value(c, delta, g))
            .collect::<Result<Vec<_>>>()?;
        if values.iter().any(|v| *v != values[0]) {
            report.fail(json!({
                "g": g.to_string(),
                "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            }));
        } else {
            report.detail(json!({"g": g.to_string(), "value": values[0].to_string()}));
        }
    }
    Ok(report)
}

/// Maximum bipartite matching (augmenting paths); `adj[i]` lists the right
/// vertices allowed for left vertex `i`. Returns `match_of_left`.
fn perfect_matching(adj: &[Vec<usize>], n: usize) -> Option<Vec<usize>> {
    fn augment(
        i: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        right: &mut [Option<usize>],
    ) -> bool {
        for &j in &adj[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if right[j].is_none() || augment(right[j].unwrap(), adj, seen, right) {
                right[j] = Some(i);
                return true;
            }
        }
        false
    }
    let mut right: Vec<Option<usize>> = vec![None; n];
    for i in 0..adj.len() {
        if !augment(i, adj, &mut vec![false; n], &mut right) {
            return None;
        }
    }
    let mut left = vec![0; adj.len()];
    for (j, i) in right.iter().enumerate() {
        left[i.unwrap()] = j;
    }
    Some(left)
}

/// For monic `f`, `f*` of degree `n` with integral coefficients: some bijection
/// of roots has `ν(α − α*) ≥ V(f − f*)/n` for every pair, where `V` is the
/// minimum coefficient value.
pub fn verify_root_matching(
    f: &Polynomial,
    fstar: &Polynomial,
    roots: &[FieldElement],
    roots_star: &[FieldElement],
) -> Result<Report> {
    if f.deg() != fstar.deg() {
        return Err(Error::DegreeMismatch {
            left: f.deg(),
            right: fstar.deg(),
        });
    }
    let n = f.deg();
    if n < 2 {
        return Err(Error::PreconditionViolated(format!(
            "degree {n} is below 2"
        )));
    }
    for g in [f, fstar] {
        if !g.is_monic() {
            return Err(Error::NonMonic(g.leading_coefficient().to_string()));
        }
    }
    ensure_roots_factor(f, roots)?;
    ensure_roots_factor(fstar, roots_star)?;

    let ctx = f.context();
    let zero = ctx.zero_value();
    let mut report = Report::new("roots of nearby monic polynomials can be matched");
    let mut zero_valued = Vec::new();
    for g in [f, fstar] {
        for c in &g.coeffs()[..n] {
            let v = c.valuation();
            if v.try_cmp(&zero)?.is_lt() {
                report.check(
                    "coefficient values >= 0",
                    false,
                    json!({"polynomial": g.to_string(), "coefficient": c.to_string()}),
                );
            } else if v == zero {
                zero_valued.push(c.to_string());
            }
        }
    }
    if !zero_valued.is_empty() {
        // The bound is stated for coefficients of positive value; value 0 is accepted and flagged.
        report.detail(
            json!({"flag": "coefficients of value 0 accepted", "coefficients": zero_valued}),
        );
    }

    let diff = f - fstar;
    let v_diff =
        try_min(diff.coeffs().iter().map(|c| c.valuation()))?.unwrap_or(GroupValue::Infinity);
    let bound = if v_diff.is_infinite() {
        GroupValue::Infinity
    } else {
        v_diff.scale(&Rational::new(1.into(), (n as i64).into()))
    };
    let adj = roots
        .iter()
        .map(|r| {
            let mut row = Vec::new();
            for (j, s) in roots_star.iter().enumerate() {
                if (r - s).valuation().try_cmp(&bound)?.is_ge() {
                    row.push(j);
                }
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    let matching = perfect_matching(&adj, n);
    report.detail(json!({
        "V(f - f*)": v_diff.to_string(),
        "bound": bound.to_string(),
    }));
    match matching {
        Some(m) => {
            let pairs: Vec<_> = m
                .iter()
                .enumerate()
                .map(|(i, &j)| {
                    json!({
                        "root": roots[i].to_string(),
                        "root*": roots_star[j].to_string(),
                        "v(diff)": (&roots[i] - &roots_star[j]).valuation().to_string(),
                    })
                })
                .collect();
            report.check("matching meets the bound", true, json!(pairs));
        }
        None => {
            report.check("matching meets the bound", false, json!(null));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_fields::FieldContext;
    use crate::valuations::{value_of, PolyValuation};

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

    fn counterexample_diskoid() -> Diskoid {
        decompose(&p("X*(X - t^-1)"), &[el("0"), el("t^-1")], &v("-1")).unwrap()
    }

    #[test]
    fn ball_value_examples() {
        assert_eq!(
            ball_value(&el("t^(1/2)"), &v("3/2"), &p("X^2")).unwrap(),
            v("1")
        );
        assert_eq!(
            ball_value(&el("t^(1/2)"), &GroupValue::Infinity, &p("X^2 + t^3")).unwrap(),
            v("1")
        );
        assert_eq!(
            ball_value(&el("0"), &v("0"), &p("X - t^-1")).unwrap(),
            v("-1")
        );
        let g = p("X^3 - t*X + 7");
        let mu = PolyValuation::pair(el("t^(1/3) + 1"), v("2/3")).unwrap();
        assert_eq!(
            ball_value(&el("t^(1/3) + 1"), &v("2/3"), &g).unwrap(),
            value_of(&mu, &g).unwrap()
        );
    }

    #[test]
    fn epsilon_radius_examples() {
        assert_eq!(
            epsilon_radius(&el("0"), &p("X*(X - t^-1)"), &v("-1")).unwrap(),
            v("0")
        );
        assert_eq!(
            epsilon_radius(&el("t^-1"), &p("X*(X - t^-1)"), &v("-1")).unwrap(),
            v("0")
        );
        assert_eq!(
            epsilon_radius(&el("t^(1/2)"), &p("X^2 - t"), &v("2")).unwrap(),
            v("3/2")
        );
        assert_eq!(
            epsilon_radius(&el("t^4"), &p("X - t^4"), &v("-7/2")).unwrap(),
            v("-7/2")
        );
        assert!(matches!(
            epsilon_radius(&el("t"), &p("X^2 - t"), &v("2")),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn decompose_examples() {
        let d = counterexample_diskoid();
        assert_eq!(
            d.balls,
            vec![Ball::new(el("0"), v("0")), Ball::new(el("t^-1"), v("0"))]
        );
        let d = decompose(&p("X^2 - t"), &[el("t^(1/2)"), el("-t^(1/2)")], &v("2")).unwrap();
        assert_eq!(
            d.balls.iter().map(|b| b.radius.clone()).collect::<Vec<_>>(),
            vec![v("3/2"); 2]
        );
        let d = decompose(&p("X - 3"), &[el("3")], &v("5")).unwrap();
        assert_eq!(d.balls, vec![Ball::new(el("3"), v("5"))]);
        let d = decompose(&p("(X - 1)^2"), &[el("1"), el("1")], &v("2")).unwrap();
        assert_eq!(d.balls, vec![Ball::new(el("1"), v("1"))]);
        assert!(matches!(
            decompose(&p("X^2 - t"), &[el("t")], &v("1")),
            Err(Error::RootsDontFactor(_))
        ));
    }

    #[test]
    fn diskoid_value_examples() {
        let d = counterexample_diskoid();
        assert_eq!(diskoid_value(&d, &p("X")).unwrap(), v("-1"));
        assert_eq!(diskoid_value(&d, &p("X - t^-1")).unwrap(), v("-1"));
        assert_eq!(diskoid_value(&d, &p("X*(X - t^-1)")).unwrap(), v("-1"));
        assert_eq!(d.balls[0].value(&p("X")).unwrap(), v("0"));
        assert_eq!(d.balls[1].value(&p("X")).unwrap(), v("-1"));
        let d = decompose(&p("X^2 - t"), &[el("t^(1/2)"), el("-t^(1/2)")], &v("2")).unwrap();
        assert_eq!(diskoid_value(&d, &p("X^2")).unwrap(), v("1"));
        assert_eq!(
            d.balls[0].value(&p("X^2")).unwrap(),
            d.balls[1].value(&p("X^2")).unwrap()
        );
    }

    #[test]
    fn counterexample_report() {
        let r = non_multiplicative_diskoid(&el("t^-1")).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        let r = non_multiplicative_diskoid(&el("2*t^-3 + 1")).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert!(non_multiplicative_diskoid(&el("t")).is_err());
    }

    #[test]
    fn membership_examples() {
        let d = counterexample_diskoid();
        for (x, inside) in [
            ("t", true),
            ("t^-2", false),
            ("t^-1", true),
            ("0", true),
            ("t^-1 + 1", true),
        ] {
            let r = membership(&el(x), &d).unwrap();
            assert!(r.passed(), "{x}: {}", r.to_json());
            assert_eq!(d.contains(&el(x)).unwrap(), inside, "{x}");
        }
    }

    #[test]
    fn attainment() {
        let a = attain_ball_minimum(&el("t^(1/2)"), &v("3/2"), &p("X^2")).unwrap();
        assert_eq!(a.formula, v("1"));
        assert!(a.witness.is_some());
        // At u = 0 the center is a root, so the search must move off it.
        let a = attain_ball_minimum(&el("t"), &v("1"), &p("X^2 - t^2")).unwrap();
        let (x, u) = a.witness.unwrap();
        assert!(u >= 1 && a.attempts <= 3);
        assert_eq!(p("X^2 - t^2").eval(&x).valuation(), v("2"));
        let ctx = FieldContext::padic(5).unwrap();
        let a = attain_ball_minimum(
            &FieldElement::from_int(ctx, 1),
            &v("1"),
            &Polynomial::parse("X^2 - 1", ctx).unwrap(),
        )
        .unwrap();
        assert!(a.witness.is_some());
    }

    #[test]
    fn conjugate_invariance_examples() {
        let roots = [el("t^(1/2)"), el("-t^(1/2)")];
        let r = verify_conjugate_invariance(&roots, &v("3/2"), &[p("X^2"), p("X^3")]).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(
            ball_value(&roots[0], &v("3/2"), &p("X^3")).unwrap(),
            v("3/2")
        );
        assert_eq!(
            ball_value(&roots[1], &v("3/2"), &p("X^3")).unwrap(),
            v("3/2")
        );
        assert!(matches!(
            verify_conjugate_invariance(&roots, &v("3/2"), &[p("X - t^(1/2)")]),
            Err(Error::SampleNotInBaseRing(_))
        ));
    }

    #[test]
    fn root_matching_examples() {
        let f = p("X^2 - t");
        let fs = p("X^2 - t*(1 + t)^2");
        let roots = [el("t^(1/2)"), el("-t^(1/2)")];
        let roots_star = [el("-t^(1/2) - t^(3/2)"), el("t^(1/2) + t^(3/2)")];
        let r = verify_root_matching(&f, &fs, &roots, &roots_star).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert!(r.to_json().contains("\"bound\": \"1\""));
        let r = verify_root_matching(&f, &f, &roots, &roots).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert!(matches!(
            verify_root_matching(&f, &p("X^3"), &roots, &[el("0"), el("0"), el("0")]),
            Err(Error::DegreeMismatch { .. })
        ));
        let g = p("X^2 - t^-2");
        let r = verify_root_matching(
            &g,
            &g,
            &[el("t^-1"), el("-t^-1")],
            &[el("t^-1"), el("-t^-1")],
        )
        .unwrap();
        assert!(!r.passed());
    }
}
