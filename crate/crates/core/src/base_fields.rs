//! Exact valued base fields.
//!
//! Two contexts are supported: `(ℚ, ν_p)` and `(ℚ(t), ord_t)`. In the t-adic
//! context an element is a finite Puiseux expression `Σ c_e t^e` with rational
//! exponents, which doubles as a computable model of the part of the algebraic
//! closure the crate ever needs to evaluate at. A p-adic element is the same
//! map restricted to the exponent `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result, Span};
use crate::value_group::{GroupValue, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    /// `(ℚ, ν_p)`.
    Padic { p: u64 },
    /// `(ℚ(t), ord_t)` with finite Puiseux expressions over ℚ.
    TAdic,
}

/// A valued base field together with the dimension of the value group its
/// values live in. Base-field values occupy the last lexicographic coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldContext {
    kind: FieldKind,
    group_dim: usize,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldContext {
    pub fn padic(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldContext {
            kind: FieldKind::Padic { p },
            group_dim: 1,
        })
    }

    pub fn tadic() -> Self {
        FieldContext {
            kind: FieldKind::TAdic,
            group_dim: 1,
        }
    }

    /// Same field, values embedded in a lexicographic group of dimension `dim`.
    pub fn with_group_dim(self, dim: usize) -> Self {
        assert!(dim >= 1);
        FieldContext {
            group_dim: dim,
            ..self
        }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn group_dim(&self) -> usize {
        self.group_dim
    }

    pub fn is_tadic(&self) -> bool {
        self.kind == FieldKind::TAdic
    }

    /// Embeds a base-field value `v` as `(0, …, 0, v)`.
    pub fn embed(&self, v: Rational) -> GroupValue {
        let mut coords = vec![Rational::zero(); self.group_dim];
        coords[self.group_dim - 1] = v;
        GroupValue::finite(coords)
    }

    pub fn zero_value(&self) -> GroupValue {
        GroupValue::zero(self.group_dim)
    }

    pub(crate) fn check(&self, other: &FieldContext) -> Result<()> {
        if self != other {
            return Err(Error::ContextMismatch {
                left: self.to_string(),
                right: other.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Padic { p } => write!(f, "padic:{p}")?,
            FieldKind::TAdic => write!(f, "tadic:QQ")?,
        }
        if self.group_dim > 1 {
            write!(f, ":{}", self.group_dim)?;
        }
        Ok(())
    }
}

impl FromStr for FieldContext {
    type Err = Error;

    /// `padic:<p>` or `tadic:QQ`, optionally followed by `:<group dimension>`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |m: &str| Error::parse(m, Span::new(0, s.len()));
        let parts: Vec<&str> = s.trim().split(':').collect();
        let (ctx, rest) = match parts.as_slice() {
            ["padic", p, rest @ ..] => {
                let p: u64 = p.parse().map_err(|_| err("invalid prime"))?;
                (FieldContext::padic(p)?, rest)
            }
            ["tadic", "QQ", rest @ ..] => (FieldContext::tadic(), rest),
            _ => return Err(err("expected padic:<p> or tadic:QQ")),
        };
        match rest {
            [] => Ok(ctx),
            [d] => {
                let d: usize = d.parse().map_err(|_| err("invalid group dimension"))?;
                if d == 0 {
                    return Err(err("group dimension must be positive"));
                }
                Ok(ctx.with_group_dim(d))
            }
            _ => Err(err("trailing context fields")),
        }
    }
}

/// Residue class of a unit: an element of `𝔽_p` or of ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ResidueElement {
    Prime { p: u64, value: u64 },
    Rational(Rational),
}

impl fmt::Display for ResidueElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueElement::Prime { p, value } => write!(f, "{value} mod {p}"),
            ResidueElement::Rational(q) => write!(f, "{q}"),
        }
    }
}

/// Exact element of a valued field: finitely many nonzero terms `c·t^e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    ctx: FieldContext,
    terms: BTreeMap<Rational, Rational>,
}

impl FieldElement {
    pub fn zero(ctx: FieldContext) -> Self {
        FieldElement {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: FieldContext) -> Self {
        Self::from_rational(ctx, Rational::one())
    }

    pub fn from_rational(ctx: FieldContext, q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Rational::zero(), q);
        }
        FieldElement { ctx, terms }
    }

    pub fn from_int(ctx: FieldContext, n: i64) -> Self {
        Self::from_rational(ctx, Rational::from_integer(BigInt::from(n)))
    }

    /// `coeff · t^exp`; only `exp = 0` exists in a p-adic context.
    pub fn monomial(ctx: FieldContext, coeff: Rational, exp: Rational) -> Result<Self> {
        if !ctx.is_tadic() && !exp.is_zero() {
            return Err(Error::Unsupported(format!("t^{exp} in context {ctx}")));
        }
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Ok(FieldElement { ctx, terms })
    }

    /// `t^exp` in the t-adic context.
    pub fn t_pow(exp: Rational) -> Self {
        Self::monomial(FieldContext::tadic(), Rational::one(), exp).unwrap()
    }

    pub(crate) fn from_terms(ctx: FieldContext, terms: BTreeMap<Rational, Rational>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        FieldElement { ctx, terms }
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    /// `(exponent, coefficient)` pairs by increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.terms.iter()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Rational value of an element with no `t`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Least common denominator `n` of the exponents: all exponents lie in `(1/n)ℤ`.
    pub fn exponent_denominator(&self) -> BigInt {
        self.terms
            .keys()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()))
    }

    /// True for elements of the base field model (Laurent polynomials in `t`).
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.is_integer())
    }

    /// Coefficient of the lowest-order term, i.e. the initial coefficient.
    pub fn initial_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    pub fn valuation(&self) -> GroupValue {
        let Some((exp, coeff)) = self.terms.iter().next() else {
            return GroupValue::Infinity;
        };
        match self.ctx.kind {
            FieldKind::TAdic => self.ctx.embed(exp.clone()),
            FieldKind::Padic { p } => {
                let p = BigInt::from(p);
                let v =
                    padic_int_valuation(coeff.numer(), &p) - padic_int_valuation(coeff.denom(), &p);
                self.ctx.embed(Rational::from_integer(BigInt::from(v)))
            }
        }
    }

    pub fn residue(&self) -> Result<ResidueElement> {
        let v = self.valuation();
        if !v.is_zero() {
            return Err(Error::NotAUnit(v.to_string()));
        }
        match self.ctx.kind {
            FieldKind::TAdic => Ok(ResidueElement::Rational(
                self.terms.get(&Rational::zero()).cloned().unwrap(),
            )),
            FieldKind::Padic { p } => {
                let q = self.as_rational().unwrap();
                let pb = BigInt::from(p);
                let num = q.numer().mod_floor(&pb);
                let den = q.denom().mod_floor(&pb);
                let inv = mod_inverse(&den, &pb).expect("unit denominator");
                let value = (num * inv).mod_floor(&pb).to_u64().unwrap();
                Ok(ResidueElement::Prime { p, value })
            }
        }
    }

    fn assert_same(&self, other: &FieldElement) {
        assert_eq!(
            self.ctx, other.ctx,
            "field elements from different contexts combined"
        );
    }

    pub fn pow(&self, n: u32) -> FieldElement {
        let mut acc = FieldElement::one(self.ctx);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Exact quotient. In the t-adic context this succeeds exactly when the
    /// divisor divides the dividend as Laurent polynomials in `t^{1/n}`.
    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.ctx.check(&other.ctx)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(FieldElement::zero(self.ctx));
        }
        if other.is_monomial() {
            let (de, dc) = other.terms.iter().next().unwrap();
            let terms = self.terms.iter().map(|(e, c)| (e - de, c / dc)).collect();
            return Ok(FieldElement::from_terms(self.ctx, terms));
        }
        laurent_exact_div(self, other)
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        FieldElement::one(self.ctx).checked_div(self)
    }
}

fn padic_int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    while !n.is_zero() && (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let eg = a.extended_gcd(m);
    if !eg.gcd.is_one() {
        return None;
    }
    Some(eg.x.mod_floor(m))
}

fn laurent_exact_div(x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
    let n = x.exponent_denominator().lcm(&y.exponent_denominator());
    let scale = Rational::from_integer(n.clone());
    let to_int = |e: &Rational| -> Result<i64> {
        (e * &scale)
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::Unsupported("exponent out of range".into()))
    };
    let dense = |z: &FieldElement| -> Result<(i64, Vec<Rational>)> {
        let lo = to_int(z.terms.keys().next().unwrap())?;
        let hi = to_int(z.terms.keys().next_back().unwrap())?;
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &z.terms {
            v[(to_int(e)? - lo) as usize] = c.clone();
        }
        Ok((lo, v))
    };
    let (xlo, mut rem) = dense(x)?;
    let (ylo, ys) = dense(y)?;
    if rem.len() < ys.len() {
        return Err(Error::NonTerminatingInverse);
    }
    let dy = ys.len() - 1;
    let lead = ys[dy].clone();
    let mut quot = vec![Rational::zero(); rem.len() - dy];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dy] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, yc) in ys.iter().enumerate() {
            let d = &c * yc;
            rem[k + j] -= d;
        }
        quot[k] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::NonTerminatingInverse);
    }
    let terms = quot
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            (
                Rational::new(BigInt::from(k as i64 + xlo - ylo), n.clone()),
                c,
            )
        })
        .collect();
    Ok(FieldElement::from_terms(x.ctx, terms))
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same(rhs);
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        FieldElement {
            ctx: self.ctx,
            terms,
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        FieldElement {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        -&self
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same(rhs);
        let mut terms: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *terms.entry(e1 + e2).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        FieldElement::from_terms(self.ctx, terms)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;

            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Context-checked field arithmetic.
pub fn field_arith(op: ArithOp, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
    x.ctx.check(&y.ctx)?;
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
    })
}

pub fn valuation_of(x: &FieldElement) -> GroupValue {
    x.valuation()
}

pub fn residue_of(x: &FieldElement) -> Result<ResidueElement> {
    x.residue()
}

fn exact_nth_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let r = n.nth_root(k);
    (r.pow(k) == *n).then_some(r)
}

/// All `n`-th roots of a monomial `q·t^e` that exist in the finite Puiseux model.
///
/// Only real rational roots of `q` are representable, so this yields `±r·t^{e/n}`
/// for even `n` and the single root `r·t^{e/n}` for odd `n`.
pub fn binomial_roots(c: &FieldElement, n: u32) -> Result<Vec<FieldElement>> {
    if n == 0 {
        return Err(Error::PreconditionViolated(
            "root order must be positive".into(),
        ));
    }
    if c.is_zero() {
        return Ok(vec![c.clone()]);
    }
    if !c.is_monomial() {
        return Err(Error::NotRepresentable(format!("{c} is not a monomial")));
    }
    let (exp, coeff) = c.terms().next().unwrap();
    if coeff.is_negative() && n.is_multiple_of(2) {
        return Err(Error::NotRepresentable(format!(
            "{coeff} has no real root of order {n}"
        )));
    }
    let not_rep = || Error::NotRepresentable(format!("{coeff} is not a rational {n}-th power"));
    let num = exact_nth_root(&coeff.numer().abs(), n).ok_or_else(not_rep)?;
    let den = exact_nth_root(coeff.denom(), n).ok_or_else(not_rep)?;
    let mut r = Rational::new(num, den);
    if coeff.is_negative() {
        r = -r;
    }
    let root_exp = exp / Rational::from_integer(BigInt::from(n));
    let root = FieldElement::monomial(c.context(), r, root_exp)?;
    if n.is_multiple_of(2) {
        let neg = -&root;
        Ok(vec![root, neg])
    } else {
        Ok(vec![root])
    }
}

fn fmt_exponent(e: &Rational) -> String {
    if e.is_integer() {
        format!("{e}")
    } else {
        format!("({e})")
    }
}

/// Formats `|coeff|·t^exp`, optionally followed by a power of `X`.
pub(crate) fn fmt_monomial(abs_coeff: &Rational, exp: &Rational, x_part: Option<&str>) -> String {
    let t_part = if exp.is_zero() {
        None
    } else if exp.is_one() {
        Some("t".to_string())
    } else {
        Some(format!("t^{}", fmt_exponent(exp)))
    };
    let rest: Vec<String> = t_part
        .into_iter()
        .chain(x_part.map(str::to_string))
        .collect();
    if rest.is_empty() {
        return abs_coeff.to_string();
    }
    let tail = rest.join("*");
    if abs_coeff.is_one() {
        tail
    } else if abs_coeff.is_integer() {
        format!("{abs_coeff}*{tail}")
    } else {
        format!("({abs_coeff})*{tail}")
    }
}

pub(crate) fn join_signed(parts: Vec<(bool, String)>) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (negative, body)) in parts.into_iter().enumerate() {
        match (i, negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body)
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body)
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body)
            }
        }
    }
    out
}

impl FieldElement {
    pub(crate) fn signed_parts(&self, x_part: Option<&str>) -> Vec<(bool, String)> {
        self.terms
            .iter()
            .map(|(e, c)| (c.is_negative(), fmt_monomial(&c.abs(), e, x_part)))
            .collect()
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_signed(self.signed_parts(None)))
    }
}

impl FieldElement {
    /// Parses element syntax such as `t^(1/2) + 2*t^3 - t^-1` or `3/4`.
    pub fn parse(text: &str, ctx: FieldContext) -> Result<FieldElement> {
        crate::parse::parse_element(text, ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value_group::{int, rat};

    fn tq() -> FieldContext {
        FieldContext::tadic()
    }

    fn el(s: &str) -> FieldElement {
        FieldElement::parse(s, tq()).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(
            field_arith(ArithOp::Mul, &el("t^(1/2)"), &el("t^(1/2)")).unwrap(),
            el("t")
        );
        assert!(field_arith(ArithOp::Add, &el("t^-1"), &el("-t^-1"))
            .unwrap()
            .is_zero());
        assert_eq!(
            field_arith(ArithOp::Div, &el("t + t^2"), &el("t")).unwrap(),
            el("1 + t")
        );
    }

    #[test]
    fn division_errors() {
        assert_eq!(
            field_arith(ArithOp::Div, &el("1"), &el("0")),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            el("1").checked_div(&el("1 + t")),
            Err(Error::NonTerminatingInverse)
        );
        // (1 - t)(1 + t + t^2) = 1 - t^3
        assert_eq!(
            el("1 - t^3").checked_div(&el("1 - t")).unwrap(),
            el("1 + t + t^2")
        );
        assert_eq!(
            el("t^(1/2) - t^2").checked_div(&el("1 - t^(3/2)")).unwrap(),
            el("t^(1/2)")
        );
        let p = FieldContext::padic(3).unwrap();
        assert_eq!(
            field_arith(ArithOp::Add, &el("1"), &FieldElement::one(p)),
            Err(Error::ContextMismatch {
                left: "tadic:QQ".into(),
                right: "padic:3".into()
            })
        );
    }

    #[test]
    fn valuation_examples() {
        let p2 = FieldContext::padic(2).unwrap();
        assert_eq!(
            FieldElement::from_int(p2, 12).valuation(),
            GroupValue::from_int(2)
        );
        let x = FieldElement::from_rational(p2, rat(3, 8));
        assert_eq!(x.valuation(), GroupValue::from_int(-3));
        assert_eq!(el("t^(1/2) + t").valuation(), GroupValue::from_ratio(1, 2));
        assert_eq!(el("0").valuation(), GroupValue::Infinity);
        assert_eq!(FieldElement::zero(p2).valuation(), GroupValue::Infinity);
    }

    #[test]
    fn embedded_valuation_uses_last_coordinate() {
        let ctx = FieldContext::tadic().with_group_dim(2);
        let x = FieldElement::parse("t^3", ctx).unwrap();
        assert_eq!(x.valuation(), "(0,3)".parse().unwrap());
    }

    #[test]
    fn residue_examples() {
        assert_eq!(
            el("1 + t").residue().unwrap(),
            ResidueElement::Rational(int(1))
        );
        let p5 = FieldContext::padic(5).unwrap();
        let x = FieldElement::from_rational(p5, rat(7, 2));
        assert_eq!(
            x.residue().unwrap(),
            ResidueElement::Prime { p: 5, value: 1 }
        );
        assert!(matches!(el("t").residue(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn binomial_root_examples() {
        assert_eq!(
            binomial_roots(&el("t"), 2).unwrap(),
            vec![el("t^(1/2)"), el("-t^(1/2)")]
        );
        assert_eq!(
            binomial_roots(&el("4*t^3"), 2).unwrap(),
            vec![el("2*t^(3/2)"), el("-2*t^(3/2)")]
        );
        assert!(matches!(
            binomial_roots(&el("2*t"), 2),
            Err(Error::NotRepresentable(_))
        ));
        assert_eq!(
            binomial_roots(&el("-8*t"), 3).unwrap(),
            vec![el("-2*t^(1/3)")]
        );
        assert!(matches!(
            binomial_roots(&el("-t"), 2),
            Err(Error::NotRepresentable(_))
        ));
        assert!(matches!(
            binomial_roots(&el("t + 1"), 2),
            Err(Error::NotRepresentable(_))
        ));
    }

    #[test]
    fn display_forms() {
        for s in ["t^(1/2) + 2*t^3", "-t^-1 + 3/4", "0", "(1/2)*t^(-1/3)", "t"] {
            assert_eq!(el(s).to_string(), s);
        }
        assert_eq!(
            el("2*t^3 + t^(1/2) - t^-1").to_string(),
            "-t^-1 + t^(1/2) + 2*t^3"
        );
    }

    #[test]
    fn context_syntax() {
        assert_eq!(
            "padic:2".parse::<FieldContext>().unwrap(),
            FieldContext::padic(2).unwrap()
        );
        assert_eq!(
            "tadic:QQ".parse::<FieldContext>().unwrap(),
            FieldContext::tadic()
        );
        assert_eq!("tadic:QQ:2".parse::<FieldContext>().unwrap().group_dim(), 2);
        assert_eq!("padic:4".parse::<FieldContext>(), Err(Error::NotPrime(4)));
        assert!("qadic:2".parse::<FieldContext>().is_err());
        assert!(FieldElement::parse("t", FieldContext::padic(2).unwrap()).is_err());
    }
}
