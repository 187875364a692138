//! Dense univariate polynomials over [`FieldElement`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::base_fields::{join_signed, FieldContext, FieldElement};
use crate::error::{Error, Result};
use crate::value_group::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: FieldContext,
    // coeffs[i] is the coefficient of X^i; no trailing zeros.
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn zero(ctx: FieldContext) -> Self {
        Polynomial {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: FieldContext) -> Self {
        Self::constant(FieldElement::one(ctx))
    }

    pub fn constant(c: FieldElement) -> Self {
        Polynomial::from_trusted(c.context(), vec![c])
    }

    /// The indeterminate `X`.
    pub fn x(ctx: FieldContext) -> Self {
        Polynomial::from_trusted(ctx, vec![FieldElement::zero(ctx), FieldElement::one(ctx)])
    }

    /// `X − a`.
    pub fn linear(a: &FieldElement) -> Self {
        let ctx = a.context();
        Polynomial::from_trusted(ctx, vec![-a, FieldElement::one(ctx)])
    }

    /// `c·X^n`.
    pub fn monomial(c: FieldElement, n: usize) -> Self {
        let ctx = c.context();
        let mut coeffs = vec![FieldElement::zero(ctx); n];
        coeffs.push(c);
        Polynomial::from_trusted(ctx, coeffs)
    }

    pub fn from_coeffs(ctx: FieldContext, coeffs: Vec<FieldElement>) -> Result<Self> {
        for c in &coeffs {
            ctx.check(&c.context())?;
        }
        Ok(Polynomial::from_trusted(ctx, coeffs))
    }

    pub(crate) fn from_trusted(ctx: FieldContext, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Polynomial { ctx, coeffs }
    }

    /// `lc · ∏ (X − λ)`.
    pub fn from_roots(lc: &FieldElement, roots: &[FieldElement]) -> Self {
        roots
            .iter()
            .fold(Polynomial::constant(lc.clone()), |acc, r| {
                &acc * &Polynomial::linear(r)
            })
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as degree 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coefficient(&self) -> FieldElement {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(self.ctx))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(FieldElement::is_one)
    }

    /// True when every coefficient is in the base field model (integer `t`-exponents).
    pub fn in_base_ring(&self) -> bool {
        self.coeffs.iter().all(FieldElement::has_integer_exponents)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        Polynomial::from_trusted(self.ctx, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &FieldElement) -> Result<Polynomial> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_div(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_trusted(self.ctx, coeffs))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::zero(self.ctx), |acc, c| &(&acc * x) + c)
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        (0..n).fold(Polynomial::one(self.ctx), |acc, _| &acc * self)
    }

    fn assert_same(&self, other: &Polynomial) {
        assert_eq!(
            self.ctx, other.ctx,
            "polynomials from different contexts combined"
        );
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Polynomial::from_trusted(self.ctx, coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::from_trusted(self.ctx, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.ctx);
        }
        let mut coeffs =
            vec![FieldElement::zero(self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::from_trusted(self.ctx, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `f = q·g + r` with `deg r < deg g`.
pub fn euclid_divide(f: &Polynomial, g: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    f.ctx.check(&g.ctx)?;
    let dg = g.degree().ok_or(Error::DivisorZero)?;
    let lead = g.leading_coefficient();
    let mut rem = f.coeffs.clone();
    if rem.len() <= dg {
        return Ok((Polynomial::zero(f.ctx), f.clone()));
    }
    let mut quot = vec![FieldElement::zero(f.ctx); rem.len() - dg];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + dg];
        if top.is_zero() {
            continue;
        }
        let c = top.checked_div(&lead)?;
        for (j, gc) in g.coeffs.iter().enumerate() {
            rem[k + j] = &rem[k + j] - &(&c * gc);
        }
        quot[k] = c;
    }
    rem.truncate(dg);
    Ok((
        Polynomial::from_trusted(f.ctx, quot),
        Polynomial::from_trusted(f.ctx, rem),
    ))
}

/// Unique expansion `f = Σ f_i Q^i` with `deg f_i < deg Q`.
///
/// The zero polynomial expands to the single part `0`.
pub fn q_expansion(f: &Polynomial, q: &Polynomial) -> Result<Vec<Polynomial>> {
    f.ctx.check(&q.ctx)?;
    match q.degree() {
        None | Some(0) => return Err(Error::DegreeZeroQ),
        _ => {}
    }
    if !q.is_monic() {
        return Err(Error::NonMonic(q.leading_coefficient().to_string()));
    }
    if f.is_zero() {
        return Ok(vec![Polynomial::zero(f.ctx)]);
    }
    let mut parts = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (quot, rem) = euclid_divide(&rest, q)?;
        parts.push(rem);
        rest = quot;
    }
    Ok(parts)
}

/// `Σ parts[i] · Q^i`.
pub fn reassemble(parts: &[Polynomial], q: &Polynomial) -> Polynomial {
    parts
        .iter()
        .rev()
        .fold(Polynomial::zero(q.ctx), |acc, p| &(&acc * q) + p)
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    acc
}

/// Hasse-Schmidt derivative `∂_i`, with `∂_i X^n = C(n, i) X^{n−i}`.
pub fn hasse_derivative(f: &Polynomial, i: usize) -> Polynomial {
    if i == 0 {
        return f.clone();
    }
    let coeffs = f
        .coeffs
        .iter()
        .enumerate()
        .skip(i)
        .map(|(n, c)| {
            let b = Rational::from_integer(binomial(n, i).into());
            c * &FieldElement::from_rational(f.ctx, b)
        })
        .collect();
    Polynomial::from_trusted(f.ctx, coeffs)
}

/// Coefficients of `f` in powers of `X − a`, i.e. `(∂_0 f(a), …, ∂_n f(a))`.
///
/// Computed by repeated synthetic division by `X − a`, independently of
/// [`hasse_derivative`].
pub fn taylor_at(f: &Polynomial, a: &FieldElement) -> Result<Vec<FieldElement>> {
    f.ctx.check(&a.context())?;
    if f.is_zero() {
        return Ok(vec![FieldElement::zero(f.ctx)]);
    }
    let mut work = f.coeffs.clone();
    let mut out = Vec::with_capacity(work.len());
    while !work.is_empty() {
        // Horner pass: work becomes the quotient, the last accumulator is f(a).
        let mut acc = FieldElement::zero(f.ctx);
        let mut quot = vec![FieldElement::zero(f.ctx); work.len() - 1];
        for k in (0..work.len()).rev() {
            acc = &(&acc * a) + &work[k];
            if k > 0 {
                quot[k - 1] = acc.clone();
            }
        }
        out.push(acc);
        work = quot;
    }
    Ok(out)
}

/// `Σ c_i (X − a)^i`.
pub fn from_taylor(coeffs: &[FieldElement], a: &FieldElement) -> Polynomial {
    let shift = Polynomial::linear(a);
    coeffs
        .iter()
        .rev()
        .fold(Polynomial::zero(a.context()), |acc, c| {
            &(&acc * &shift) + &Polynomial::constant(c.clone())
        })
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let x_part = match k {
                0 => None,
                1 => Some("X".to_string()),
                _ => Some(format!("X^{k}")),
            };
            match x_part {
                Some(x) if !c.is_monomial() => parts.push((false, format!("({c})*{x}"))),
                _ => parts.extend(c.signed_parts(x_part.as_deref())),
            }
        }
        write!(f, "{}", join_signed(parts))
    }
}

impl Polynomial {
    /// Parses polynomial syntax such as `X^2 - t` or `(1/2)*X^3 + t^(1/2)*X`.
    pub fn parse(text: &str, ctx: FieldContext) -> Result<Polynomial> {
        crate::parse::parse_polynomial(text, ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tq() -> FieldContext {
        FieldContext::tadic()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, tq()).unwrap()
    }

    fn el(s: &str) -> FieldElement {
        FieldElement::parse(s, tq()).unwrap()
    }

    #[test]
    fn euclid_examples() {
        let (q, r) = euclid_divide(&p("X^3 + t"), &p("X^2 - t")).unwrap();
        assert_eq!((q.clone(), r.clone()), (p("X"), p("t*X + t")));
        assert_eq!(&(&q * &p("X^2 - t")) + &r, p("X^3 + t"));
        assert_eq!(
            euclid_divide(&p("X^2 - t"), &p("X^2 - t")).unwrap(),
            (p("1"), p("0"))
        );
        assert_eq!(
            euclid_divide(&p("X + 1"), &p("X^2")).unwrap(),
            (p("0"), p("X + 1"))
        );
        assert_eq!(euclid_divide(&p("X"), &p("0")), Err(Error::DivisorZero));
    }

    #[test]
    fn euclid_non_monic_divisor() {
        let f = p("X^3 + t*X + 1");
        let g = p("t*X^2 + 1");
        let (q, r) = euclid_divide(&f, &g).unwrap();
        assert!(r.deg() < 2);
        assert_eq!(&(&q * &g) + &r, f);
    }

    #[test]
    fn q_expansion_examples() {
        let q = p("X^2 - t");
        assert_eq!(
            q_expansion(&p("X^3 + t"), &q).unwrap(),
            vec![p("t*X + t"), p("X")]
        );
        assert_eq!(
            q_expansion(&q.pow(2), &q).unwrap(),
            vec![p("0"), p("0"), p("1")]
        );
        assert_eq!(q_expansion(&p("t^3"), &q).unwrap(), vec![p("t^3")]);
        assert!(matches!(
            q_expansion(&p("X"), &p("2*X^2")),
            Err(Error::NonMonic(_))
        ));
        assert_eq!(q_expansion(&p("X"), &p("5")), Err(Error::DegreeZeroQ));
    }

    #[test]
    fn hasse_examples() {
        assert_eq!(hasse_derivative(&p("X^2"), 1), p("2*X"));
        assert_eq!(hasse_derivative(&p("X^2"), 2), p("1"));
        assert_eq!(hasse_derivative(&p("X^2 - t"), 2), p("1"));
        assert_eq!(hasse_derivative(&p("X^2 - t"), 3), p("0"));
        let x3 = p("X^3");
        let lhs = hasse_derivative(&hasse_derivative(&x3, 1), 1);
        assert_eq!(lhs, p("6*X"));
        assert_eq!(lhs, hasse_derivative(&x3, 2).scale(&el("2")));
    }

    #[test]
    fn taylor_examples() {
        let a = el("t^(1/2)");
        assert_eq!(
            taylor_at(&p("X^2 - t"), &a).unwrap(),
            vec![el("0"), el("2*t^(1/2)"), el("1")]
        );
        assert_eq!(
            taylor_at(&p("X"), &el("0")).unwrap(),
            vec![el("0"), el("1")]
        );
        assert_eq!(taylor_at(&p("t^2 + 3"), &a).unwrap(), vec![el("t^2 + 3")]);
        let f = p("(1/2)*X^3 + t^(1/2)*X - t^-1");
        let coeffs = taylor_at(&f, &el("1 + t^(2/3)")).unwrap();
        assert_eq!(from_taylor(&coeffs, &el("1 + t^(2/3)")), f);
    }

    #[test]
    fn taylor_agrees_with_hasse() {
        let f = p("X^4 - 3*t*X^2 + t^(1/3)*X + 7");
        let a = el("t^-1 - 2");
        let taylor = taylor_at(&f, &a).unwrap();
        for (i, c) in taylor.iter().enumerate() {
            assert_eq!(*c, hasse_derivative(&f, i).eval(&a));
        }
    }

    #[test]
    fn display_forms() {
        for s in [
            "X^2 - t",
            "(1/2)*X^3 + t^(1/2)*X",
            "(1 + t)*X^2 - 3",
            "-X",
            "0",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn from_roots_reconstructs() {
        let f = Polynomial::from_roots(&el("1"), &[el("t^(1/2)"), el("-t^(1/2)")]);
        assert_eq!(f, p("X^2 - t"));
    }
}
