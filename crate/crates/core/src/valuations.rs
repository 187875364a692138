//! Valuations on `K[X]` (and on `K̄[X]` for the finite Puiseux model).
//!
//! Three shapes are supported:
//!
//! * `Gauss(γ)`: `Σ a_i X^i ↦ min ν(a_i) + iγ`;
//! * `Pair(a, δ)`: `Σ a_i (X−a)^i ↦ min ν̄(a_i) + iδ`, the valuation defined by a
//!   center and a radius;
//! * `Truncation(Q, μ)`: `Σ f_i Q^i ↦ min μ(f_i) + iμ(Q)` over the `Q`-expansion.
//!
//! A truncation is a valuation when `Q` is an abstract key polynomial for the
//! inner valuation. That property quantifies over every lower-degree
//! polynomial, so it is only ever refuted over finite families here, never
//! certified. The `verify_*` functions turn the correspondences between these
//! objects into checks on explicit samples and return a [`Report`].

use std::collections::BTreeSet;
use std::fmt;

use serde_json::json;

use crate::base_fields::{FieldContext, FieldElement};
use crate::error::{Error, Result, Span};
use crate::polynomials::{euclid_divide, hasse_derivative, q_expansion, taylor_at, Polynomial};
use crate::report::{corpus_hash, Report};
use crate::value_group::{self, affine, slope, try_max, try_min, GroupValue};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PolyValuation {
    Gauss {
        gamma: GroupValue,
    },
    Pair {
        center: FieldElement,
        delta: GroupValue,
    },
    Truncation {
        q: Polynomial,
        inner: Box<PolyValuation>,
    },
}

impl PolyValuation {
    pub fn gauss(gamma: GroupValue) -> Result<Self> {
        if gamma.is_infinite() {
            return Err(Error::InfiniteDelta);
        }
        Ok(PolyValuation::Gauss { gamma })
    }

    /// Valuation of the pair `(center, delta)`. `delta` must be finite and of
    /// the context's group dimension.
    pub fn pair(center: FieldElement, delta: GroupValue) -> Result<Self> {
        let dim = center.context().group_dim();
        match delta.dim() {
            None => return Err(Error::InfiniteDelta),
            Some(d) if d != dim => {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: d,
                })
            }
            _ => {}
        }
        Ok(PolyValuation::Pair { center, delta })
    }

    /// Truncation of `inner` by a monic `q` of degree at least one.
    pub fn truncation(q: Polynomial, inner: PolyValuation) -> Result<Self> {
        if q.deg() == 0 {
            return Err(Error::DegreeZeroQ);
        }
        if !q.is_monic() {
            return Err(Error::NonMonic(q.leading_coefficient().to_string()));
        }
        Ok(PolyValuation::Truncation {
            q,
            inner: Box::new(inner),
        })
    }

    /// Wraps `self` in a truncation by `q`.
    pub fn truncate(&self, q: &Polynomial) -> Result<Self> {
        PolyValuation::truncation(q.clone(), self.clone())
    }

    pub fn value(&self, f: &Polynomial) -> Result<GroupValue> {
        value_of(self, f)
    }

    pub fn epsilon(&self, f: &Polynomial) -> Result<GroupValue> {
        epsilon_factor(self, f)
    }
}

/// `μ(f)`; `∞` exactly for `f = 0` (for finite radii).
pub fn value_of(mu: &PolyValuation, f: &Polynomial) -> Result<GroupValue> {
    let ctx = f.context();
    if f.is_zero() {
        return Ok(GroupValue::Infinity);
    }
    match mu {
        PolyValuation::Gauss { gamma } => {
            check_dim(ctx, gamma)?;
            let terms = f
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| affine(&c.valuation(), i, gamma))
                .collect::<Result<Vec<_>>>()?;
            Ok(try_min(terms)?.unwrap())
        }
        PolyValuation::Pair { center, delta } => {
            ctx.check(&center.context())?;
            check_dim(ctx, delta)?;
            let taylor = taylor_at(f, center)?;
            let terms = taylor
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| affine(&c.valuation(), i, delta))
                .collect::<Result<Vec<_>>>()?;
            Ok(try_min(terms)?.unwrap())
        }
        PolyValuation::Truncation { q, inner } => {
            let values = expansion_values(inner, q, f)?;
            Ok(try_min(values.into_iter().map(|(_, v)| v))?.unwrap())
        }
    }
}

fn check_dim(ctx: FieldContext, v: &GroupValue) -> Result<()> {
    match v.dim() {
        Some(d) if d != ctx.group_dim() => Err(Error::DimensionMismatch {
            left: ctx.group_dim(),
            right: d,
        }),
        _ => Ok(()),
    }
}

/// `(i, μ(f_i) + i·μ(Q))` for the nonzero parts of the `Q`-expansion of `f`.
fn expansion_values(
    inner: &PolyValuation,
    q: &Polynomial,
    f: &Polynomial,
) -> Result<Vec<(usize, GroupValue)>> {
    let parts = q_expansion(f, q)?;
    let q_value = value_of(inner, q)?;
    parts
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(i, p)| Ok((i, affine(&value_of(inner, p)?, i, &q_value)?)))
        .collect()
}

/// Indices attaining `μ_Q(f)` in the `Q`-expansion, and their maximum `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSet {
    pub indices: BTreeSet<usize>,
    pub d: usize,
}

impl SupportSet {
    pub fn is_only_zero(&self) -> bool {
        self.indices.len() == 1 && self.indices.contains(&0)
    }
}

pub fn support_set(mu_inner: &PolyValuation, q: &Polynomial, f: &Polynomial) -> Result<SupportSet> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let values = expansion_values(mu_inner, q, f)?;
    let min = try_min(values.iter().map(|(_, v)| v.clone()))?.unwrap();
    let indices: BTreeSet<usize> = values
        .into_iter()
        .filter(|(_, v)| *v == min)
        .map(|(i, _)| i)
        .collect();
    let d = *indices.iter().next_back().unwrap();
    Ok(SupportSet { indices, d })
}

/// `ε_μ(f) = max_{i≥1} (μ(f) − μ(∂_i f)) / i`.
pub fn epsilon_factor(mu: &PolyValuation, f: &Polynomial) -> Result<GroupValue> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::ConstantPolynomial),
    };
    let top = value_of(mu, f)?;
    let slopes = (1..=n)
        .map(|i| (i, hasse_derivative(f, i)))
        .filter(|(_, d)| !d.is_zero())
        .map(|(i, d)| slope(&top, &value_of(mu, &d)?, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(try_max(slopes)?.unwrap())
}

/// `max_c μ(X − c)` over the supplied roots `c`.
pub fn delta_invariant(mu: &PolyValuation, roots: &[FieldElement]) -> Result<GroupValue> {
    if roots.is_empty() {
        return Err(Error::EmptyRoots);
    }
    let values = roots
        .iter()
        .map(|c| value_of(mu, &Polynomial::linear(c)))
        .collect::<Result<Vec<_>>>()?;
    Ok(try_max(values)?.unwrap())
}

/// `in_μ(f) = in_μ(g)`, decided as `μ(f) = μ(g) < μ(f − g)`.
pub fn initial_forms_equal(mu: &PolyValuation, f: &Polynomial, g: &Polynomial) -> Result<bool> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vf = value_of(mu, f)?;
    let vg = value_of(mu, g)?;
    if vf != vg {
        return Ok(false);
    }
    let diff = value_of(mu, &(f - g))?;
    Ok(diff.try_cmp(&vf)? == std::cmp::Ordering::Greater)
}

/// Outcome of testing the key polynomial condition on a finite family.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// `witness` has lower degree than `Q` but `ε(witness) ≥ ε(Q)`.
    Refuted {
        witness: Polynomial,
        witness_epsilon: GroupValue,
        q_epsilon: GroupValue,
    },
    /// No candidate refuted the condition. This certifies only the tested family.
    NotRefuted { tested: usize },
}

impl Verdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted { .. })
    }
}

/// Searches `candidates` for an `f` with `deg f < deg Q` and `ε_μ(f) ≥ ε_μ(Q)`.
///
/// Constant candidates are skipped: they have no slope and cannot refute.
pub fn abkp_refute(
    mu: &PolyValuation,
    q: &Polynomial,
    candidates: &[Polynomial],
) -> Result<Verdict> {
    if q.deg() == 0 {
        return Err(Error::DegreeZeroQ);
    }
    if !q.is_monic() {
        return Err(Error::NonMonic(q.leading_coefficient().to_string()));
    }
    for c in candidates {
        if c.deg() >= q.deg() {
            return Err(Error::BadCandidateDegree {
                candidate: c.to_string(),
                degree: c.deg(),
                bound: q.deg(),
            });
        }
    }
    let q_eps = epsilon_factor(mu, q)?;
    let mut tested = 0;
    for c in candidates.iter().filter(|c| !c.is_constant()) {
        tested += 1;
        let eps = epsilon_factor(mu, c)?;
        if eps.try_cmp(&q_eps)?.is_ge() {
            return Ok(Verdict::Refuted {
                witness: c.clone(),
                witness_epsilon: eps,
                q_epsilon: q_eps,
            });
        }
    }
    Ok(Verdict::NotRefuted { tested })
}

/// For `∏ P_i = qQ + r`: checks `μ(∏ P_i) = μ(r) < μ_Q(qQ)`.
pub fn verify_product_rule(
    mu: &PolyValuation,
    q: &Polynomial,
    parts: &[Polynomial],
) -> Result<Report> {
    if parts.len() < 2 {
        return Err(Error::TooFewFactors(parts.len()));
    }
    for p in parts {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.deg() >= q.deg() {
            return Err(Error::BadCandidateDegree {
                candidate: p.to_string(),
                degree: p.deg(),
                bound: q.deg(),
            });
        }
    }
    let mu_q = mu.truncate(q)?;
    let product = parts
        .iter()
        .skip(1)
        .fold(parts[0].clone(), |acc, p| &acc * p);
    let (quot, rem) = euclid_divide(&product, q)?;
    let v_prod = value_of(mu, &product)?;
    let v_rem = value_of(mu, &rem)?;
    let v_qq = value_of(&mu_q, &(&quot * q))?;
    let mut report = Report::new("product rule for factors of lower degree");
    report.detail(json!({
        "product": product.to_string(),
        "quotient": quot.to_string(),
        "remainder": rem.to_string(),
    }));
    report.check(
        "mu(product) = mu(r)",
        v_prod == v_rem,
        json!({"mu(product)": v_prod.to_string(), "mu(r)": v_rem.to_string()}),
    );
    report.check(
        "mu(r) < mu_Q(qQ)",
        v_rem.try_cmp(&v_qq)?.is_lt(),
        json!({"mu(r)": v_rem.to_string(), "mu_Q(qQ)": v_qq.to_string()}),
    );
    Ok(report)
}

fn ensure_base_ring(samples: &[Polynomial]) -> Result<()> {
    match samples.iter().find(|s| !s.in_base_ring()) {
        Some(s) => Err(Error::SampleNotInBaseRing(s.to_string())),
        None => Ok(()),
    }
}

/// Checks `ν̄_{a,δ}(f) = μ_Q(f)` for every sample `f ∈ K[X]`, where `a` is a root
/// of `Q` and the truncation is taken over the pair valuation itself.
pub fn verify_truncation_correspondence(
    q: &Polynomial,
    a: &FieldElement,
    delta: &GroupValue,
    samples: &[Polynomial],
) -> Result<Report> {
    if !q.eval(a).is_zero() {
        return Err(Error::NotARoot(a.to_string()));
    }
    ensure_base_ring(samples)?;
    let pair = PolyValuation::pair(a.clone(), delta.clone())?;
    let trunc = pair.truncate(q)?;
    let mut report = Report::new("restriction of the pair valuation to K[X] equals the truncation");
    report.detail(json!({
        "Q": q.to_string(),
        "center": a.to_string(),
        "delta": delta.to_string(),
        "samples": samples.len(),
        "corpus_sha256": corpus_hash(samples),
    }));
    let mut agreed = 0usize;
    for f in samples {
        let vt = value_of(&trunc, f)?;
        let vp = value_of(&pair, f)?;
        if vt == vp {
            agreed += 1;
        } else {
            report.fail(json!({
                "first_discrepancy": f.to_string(),
                "truncation": vt.to_string(),
                "pair": vp.to_string(),
            }));
            break;
        }
    }
    report.detail(json!({ "agreed": agreed }));
    Ok(report)
}

/// Checks `ε_{μ_Q}(f) ≤ ε_μ(Q)` and `S_{Q,μ}(f) ≠ {0} ⟺ ε_{μ_Q}(f) = ε_μ(Q)`.
pub fn verify_epsilon_equality(
    q: &Polynomial,
    mu: &PolyValuation,
    f: &Polynomial,
) -> Result<Report> {
    let mu_q = mu.truncate(q)?;
    let support = support_set(mu, q, f)?;
    let eps_f = epsilon_factor(&mu_q, f)?;
    let eps_q = epsilon_factor(mu, q)?;
    let eps_q_trunc = epsilon_factor(&mu_q, q)?;
    let mut report = Report::new("epsilon of the truncation against epsilon of Q");
    report.detail(json!({
        "f": f.to_string(),
        "support": support.indices.iter().collect::<Vec<_>>(),
        "eps_muQ(f)": eps_f.to_string(),
        "eps_mu(Q)": eps_q.to_string(),
        "eps_muQ(Q)": eps_q_trunc.to_string(),
    }));
    report.check(
        "eps_muQ(f) <= eps_mu(Q)",
        eps_f.try_cmp(&eps_q)?.is_le(),
        json!(null),
    );
    report.check("eps_muQ(Q) = eps_mu(Q)", eps_q_trunc == eps_q, json!(null));
    report.check(
        "S != {0} iff eps_muQ(f) = eps_mu(Q)",
        !support.is_only_zero() == (eps_f == eps_q),
        json!(null),
    );
    Ok(report)
}

/// Two pairs define the same valuation iff the radii agree and the centers are
/// within that radius.
pub fn pairs_equivalent(
    a: &FieldElement,
    delta: &GroupValue,
    a2: &FieldElement,
    delta2: &GroupValue,
) -> Result<bool> {
    a.context().check(&a2.context())?;
    if delta.try_cmp(delta2)?.is_ne() {
        return Ok(false);
    }
    Ok((a - a2).valuation().try_cmp(delta)?.is_ge())
}

/// When `ε_μ(f) < ε_μ(Q)`, checks `in_{μ_Q}(f) = in_{μ_Q}(f_0)` for the constant
/// part `f_0` of the `Q`-expansion.
pub fn verify_graded_rewrite(q: &Polynomial, mu: &PolyValuation, f: &Polynomial) -> Result<Report> {
    let eps_f = epsilon_factor(mu, f)?;
    let eps_q = epsilon_factor(mu, q)?;
    if eps_f.try_cmp(&eps_q)?.is_ge() {
        return Err(Error::PreconditionViolated(format!(
            "eps({f}) = {eps_f} is not below eps(Q) = {eps_q}"
        )));
    }
    let mu_q = mu.truncate(q)?;
    let f0 = q_expansion(f, q)?.swap_remove(0);
    let mut report = Report::new("initial form rewrite by a polynomial of lower degree");
    report.detail(json!({
        "f": f.to_string(),
        "f0": f0.to_string(),
        "eps(f)": eps_f.to_string(),
        "eps(Q)": eps_q.to_string(),
    }));
    let ok = !f0.is_zero() && initial_forms_equal(&mu_q, f, &f0)?;
    report.check("in_muQ(f) = in_muQ(f0)", ok, json!(null));
    Ok(report)
}

/// For `f` of degree below `deg Q` with the given roots: `δ(f) < δ`,
/// `in(f) = in(f(a))` under the pair valuation, and the truncation agrees
/// with the pair valuation on `f`.
pub fn verify_low_degree_lemma(
    q: &Polynomial,
    a: &FieldElement,
    delta: &GroupValue,
    f: &Polynomial,
    roots: &[FieldElement],
) -> Result<Report> {
    if f.deg() >= q.deg() {
        return Err(Error::PreconditionViolated(format!(
            "deg {f} is not below deg Q"
        )));
    }
    let pair = PolyValuation::pair(a.clone(), delta.clone())?;
    let trunc = pair.truncate(q)?;
    let mut report = Report::new("low-degree polynomials under a minimal pair");
    if !roots.is_empty() {
        if Polynomial::from_roots(&f.leading_coefficient(), roots) != *f {
            return Err(Error::RootsDontFactor(f.to_string()));
        }
        let d = delta_invariant(&pair, roots)?;
        report.check(
            "delta(f) < delta",
            d.try_cmp(delta)?.is_lt(),
            json!({"delta(f)": d.to_string()}),
        );
    }
    let fa = Polynomial::constant(f.eval(a));
    report.check(
        "in(f) = in(f(a))",
        initial_forms_equal(&pair, f, &fa)?,
        json!({"f(a)": fa.to_string()}),
    );
    let (vt, vp) = (value_of(&trunc, f)?, value_of(&pair, f)?);
    report.check(
        "mu_Q(f) = mu(f)",
        vt == vp,
        json!({"truncation": vt.to_string(), "pair": vp.to_string()}),
    );
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Residually transcendental: the defining value is in the divisible hull of `Φ(ν)`.
    ResiduallyTranscendental,
    /// The defining value raises the rational rank.
    ValueTranscendental,
    Indeterminate,
}

/// Classifies `μ/ν` by whether its defining value (`γ`, `δ`, or `ε_μ(Q)` for
/// a truncation) is rationally dependent on the base value group generators.
pub fn classify_extension(
    mu: &PolyValuation,
    base_group_generators: &[GroupValue],
) -> Classification {
    let value = match mu {
        PolyValuation::Gauss { gamma } => Ok(gamma.clone()),
        PolyValuation::Pair { delta, .. } => Ok(delta.clone()),
        PolyValuation::Truncation { q, inner } => epsilon_factor(inner, q),
    };
    let Ok(value) = value else {
        return Classification::Indeterminate;
    };
    if value.is_infinite() {
        return Classification::Indeterminate;
    }
    if base_group_generators.is_empty() {
        return if value.is_zero() {
            Classification::ResiduallyTranscendental
        } else {
            Classification::ValueTranscendental
        };
    }
    match value_group::in_rational_span(&value, base_group_generators) {
        Ok(true) => Classification::ResiduallyTranscendental,
        Ok(false) => Classification::ValueTranscendental,
        Err(_) => Classification::Indeterminate,
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Refuted {
                witness,
                witness_epsilon,
                q_epsilon,
            } => write!(
                f,
                "refuted by {witness}: eps = {witness_epsilon} >= {q_epsilon} = eps(Q)"
            ),
            Verdict::NotRefuted { tested } => {
                write!(f, "not refuted by the {tested} tested candidates")
            }
        }
    }
}

impl fmt::Display for PolyValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyValuation::Gauss { gamma } => write!(f, "gauss:{gamma}"),
            PolyValuation::Pair { center, delta } => write!(f, "pair:{center}:{delta}"),
            PolyValuation::Truncation { q, inner } => write!(f, "trunc[{q}]:{inner}"),
        }
    }
}

impl PolyValuation {
    /// Parses `gauss:<γ>`, `pair:<center>:<δ>` or `trunc[<Q>]:<descriptor>`.
    pub fn parse(text: &str, ctx: FieldContext) -> Result<PolyValuation> {
        parse_descriptor(text, ctx, 0)
    }
}

fn parse_descriptor(text: &str, ctx: FieldContext, base: usize) -> Result<PolyValuation> {
    let whole = Span::new(base, base + text.len());
    if let Some(rest) = text.strip_prefix("gauss:") {
        let gamma = GroupValue::parse_at(rest, base + 6)?;
        check_dim(ctx, &gamma).map_err(|e| Error::parse(e.to_string(), whole))?;
        return PolyValuation::gauss(gamma).map_err(|e| Error::parse(e.to_string(), whole));
    }
    if let Some(rest) = text.strip_prefix("pair:") {
        let cut = rest
            .rfind(':')
            .ok_or_else(|| Error::parse("expected pair:<center>:<delta>", whole))?;
        let center = crate::parse::parse_element_at(&rest[..cut], ctx, base + 5)?;
        let delta = GroupValue::parse_at(&rest[cut + 1..], base + 5 + cut + 1)?;
        return PolyValuation::pair(center, delta).map_err(|e| Error::parse(e.to_string(), whole));
    }
    if let Some(rest) = text.strip_prefix("trunc[") {
        let close = rest
            .find(']')
            .ok_or_else(|| Error::parse("unclosed '['", whole))?;
        let q = crate::parse::parse_polynomial_at(&rest[..close], ctx, base + 6)?;
        let after = &rest[close + 1..];
        let inner_text = after
            .strip_prefix(':')
            .ok_or_else(|| Error::parse("expected ':' after trunc[...]", whole))?;
        let inner = parse_descriptor(inner_text, ctx, base + 6 + close + 2)?;
        return PolyValuation::truncation(q, inner).map_err(|e| Error::parse(e.to_string(), whole));
    }
    Err(Error::parse(
        "expected gauss:, pair: or trunc[...]: descriptor",
        whole,
    ))
}
