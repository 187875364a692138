//! Values in the divisible hull of a finite-rank value group.
//!
//! A [`GroupValue`] is either a vector of rationals compared
//! lexicographically, or the absorbing element `inf`. All valuation formulas
//! in the crate are affine combinations `γ + i·δ` of such values, so the type
//! only needs addition, subtraction, scaling by rationals and a total order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result, Span};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupValue {
    Finite(Vec<Rational>),
    Infinity,
}

impl GroupValue {
    /// Finite value from its lexicographic coordinates. Panics on an empty vector.
    pub fn finite(coords: Vec<Rational>) -> Self {
        assert!(!coords.is_empty(), "group values have dimension >= 1");
        GroupValue::Finite(coords)
    }

    pub fn rank1(value: Rational) -> Self {
        GroupValue::Finite(vec![value])
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        GroupValue::rank1(rat(n, d))
    }

    pub fn from_int(n: i64) -> Self {
        GroupValue::rank1(int(n))
    }

    pub fn zero(dim: usize) -> Self {
        GroupValue::finite(vec![Rational::zero(); dim])
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, GroupValue::Infinity)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            GroupValue::Finite(c) => Some(c.len()),
            GroupValue::Infinity => None,
        }
    }

    pub fn coords(&self) -> Option<&[Rational]> {
        match self {
            GroupValue::Finite(c) => Some(c),
            GroupValue::Infinity => None,
        }
    }

    /// The single coordinate of a rank-one value.
    pub fn as_rank1(&self) -> Option<&Rational> {
        match self {
            GroupValue::Finite(c) if c.len() == 1 => Some(&c[0]),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, GroupValue::Finite(c) if c.iter().all(Zero::is_zero))
    }

    fn check_dims(&self, other: &GroupValue) -> Result<()> {
        match (self.dim(), other.dim()) {
            (Some(l), Some(r)) if l != r => Err(Error::DimensionMismatch { left: l, right: r }),
            _ => Ok(()),
        }
    }

    /// Lexicographic comparison; `inf` is above every finite value.
    pub fn try_cmp(&self, other: &GroupValue) -> Result<Ordering> {
        self.check_dims(other)?;
        Ok(match (self, other) {
            (GroupValue::Infinity, GroupValue::Infinity) => Ordering::Equal,
            (GroupValue::Infinity, _) => Ordering::Greater,
            (_, GroupValue::Infinity) => Ordering::Less,
            (GroupValue::Finite(a), GroupValue::Finite(b)) => a.cmp(b),
        })
    }

    pub fn try_add(&self, other: &GroupValue) -> Result<GroupValue> {
        self.check_dims(other)?;
        Ok(match (self, other) {
            (GroupValue::Finite(a), GroupValue::Finite(b)) => {
                GroupValue::Finite(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => GroupValue::Infinity,
        })
    }

    /// Difference of two finite values.
    pub fn try_sub(&self, other: &GroupValue) -> Result<GroupValue> {
        self.check_dims(other)?;
        match (self, other) {
            (GroupValue::Finite(a), GroupValue::Finite(b)) => Ok(GroupValue::Finite(
                a.iter().zip(b).map(|(x, y)| x - y).collect(),
            )),
            _ => Err(Error::InfiniteSlope),
        }
    }

    /// Multiplication by a rational. Scaling `inf` by a positive factor keeps `inf`.
    pub fn scale(&self, factor: &Rational) -> GroupValue {
        match self {
            GroupValue::Finite(c) => GroupValue::Finite(c.iter().map(|x| x * factor).collect()),
            GroupValue::Infinity => {
                assert!(
                    factor.is_positive(),
                    "infinity scaled by a non-positive factor"
                );
                GroupValue::Infinity
            }
        }
    }

    pub fn scale_int(&self, factor: usize) -> GroupValue {
        if factor == 0 {
            return match self {
                GroupValue::Finite(c) => GroupValue::zero(c.len()),
                GroupValue::Infinity => panic!("0 * inf is undefined"),
            };
        }
        self.scale(&Rational::from_integer(BigInt::from(factor)))
    }

    pub fn neg(&self) -> Result<GroupValue> {
        match self {
            GroupValue::Finite(c) => Ok(GroupValue::Finite(c.iter().map(|x| -x).collect())),
            GroupValue::Infinity => Err(Error::InfiniteSlope),
        }
    }
}

impl PartialOrd for GroupValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

/// Total order on values of a common dimension.
pub fn compare(u: &GroupValue, v: &GroupValue) -> Result<Ordering> {
    u.try_cmp(v)
}

/// `γ + i·δ`, with `inf` absorbing.
pub fn affine(gamma: &GroupValue, i: usize, delta: &GroupValue) -> Result<GroupValue> {
    gamma.check_dims(delta)?;
    if i == 0 {
        return Ok(gamma.clone());
    }
    gamma.try_add(&delta.scale_int(i))
}

/// `(top − bottom) / run` for finite endpoints.
pub fn slope(top: &GroupValue, bottom: &GroupValue, run: usize) -> Result<GroupValue> {
    assert!(run > 0, "slope run must be positive");
    if top.is_infinite() || bottom.is_infinite() {
        return Err(Error::InfiniteSlope);
    }
    let diff = top.try_sub(bottom)?;
    Ok(diff.scale(&Rational::new(BigInt::one(), BigInt::from(run))))
}

/// Minimum of a nonempty sequence of values; `None` for an empty one.
pub fn try_min<I>(values: I) -> Result<Option<GroupValue>>
where
    I: IntoIterator<Item = GroupValue>,
{
    let mut best: Option<GroupValue> = None;
    for v in values {
        best = Some(match best {
            None => v,
            Some(b) => {
                if v.try_cmp(&b)? == Ordering::Less {
                    v
                } else {
                    b
                }
            }
        });
    }
    Ok(best)
}

pub fn try_max<I>(values: I) -> Result<Option<GroupValue>>
where
    I: IntoIterator<Item = GroupValue>,
{
    let mut best: Option<GroupValue> = None;
    for v in values {
        best = Some(match best {
            None => v,
            Some(b) => {
                if v.try_cmp(&b)? == Ordering::Greater {
                    v
                } else {
                    b
                }
            }
        });
    }
    Ok(best)
}

/// Rank and rational rank of the subgroup generated by finite values.
///
/// The ℚ-span is triangularized by Gaussian elimination; the rational rank
/// is the number of pivots and the rank counts the distinct lexicographic
/// levels (leading coordinates) occurring in the span. Returns `(rank, rational_rank)`.
pub fn subgroup_ranks(generators: &[GroupValue]) -> Result<(usize, usize)> {
    if generators.is_empty() {
        return Ok((0, 0));
    }
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(generators.len());
    let mut dim = None;
    for g in generators {
        let c = g.coords().ok_or(Error::InfiniteSlope)?;
        match dim {
            None => dim = Some(c.len()),
            Some(d) if d != c.len() => {
                return Err(Error::DimensionMismatch {
                    left: d,
                    right: c.len(),
                })
            }
            _ => {}
        }
        rows.push(c.to_vec());
    }
    let dim = dim.unwrap();
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..dim {
        let Some(p) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, p);
        let pivot = rows[next_row][col].clone();
        for r in next_row + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot;
            let (upper, lower) = rows.split_at_mut(r);
            for (x, y) in lower[0][col..].iter_mut().zip(&upper[next_row][col..]) {
                *x -= &factor * y;
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    // Each pivot column is the leading coordinate of some element of the span,
    // and every leading coordinate in the span is a pivot column.
    let rational_rank = pivots.len();
    let levels = pivots.len();
    Ok((levels, rational_rank))
}

/// True when `value` lies in the ℚ-span of `generators`.
pub fn in_rational_span(value: &GroupValue, generators: &[GroupValue]) -> Result<bool> {
    let (_, base) = subgroup_ranks(generators)?;
    let mut extended = generators.to_vec();
    extended.push(value.clone());
    let (_, with) = subgroup_ranks(&extended)?;
    Ok(with == base)
}

fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

impl fmt::Display for GroupValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupValue::Infinity => write!(f, "inf"),
            GroupValue::Finite(c) if c.len() == 1 => write!(f, "{}", fmt_rational(&c[0])),
            GroupValue::Finite(c) => {
                let parts: Vec<String> = c.iter().map(fmt_rational).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

pub(crate) fn parse_rational(text: &str, offset: usize) -> Result<Rational> {
    let t = text.trim();
    let span = Span::new(offset, offset + text.len());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::parse(format!("invalid integer {num:?}"), span))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::parse(format!("invalid integer {den:?}"), span))?;
    if d.is_zero() {
        return Err(Error::parse("zero denominator", span));
    }
    Ok(Rational::new(n, d))
}

impl GroupValue {
    pub(crate) fn parse_at(text: &str, offset: usize) -> Result<GroupValue> {
        let t = text.trim();
        if t == "inf" {
            return Ok(GroupValue::Infinity);
        }
        if let Some(inner) = t.strip_prefix('(') {
            let inner = inner.strip_suffix(')').ok_or_else(|| {
                Error::parse(
                    "unclosed parenthesis",
                    Span::new(offset, offset + text.len()),
                )
            })?;
            let mut coords = Vec::new();
            let mut pos = offset + text.find('(').unwrap() + 1;
            for part in inner.split(',') {
                coords.push(parse_rational(part, pos)?);
                pos += part.len() + 1;
            }
            return Ok(GroupValue::finite(coords));
        }
        Ok(GroupValue::rank1(parse_rational(t, offset)?))
    }
}

impl FromStr for GroupValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupValue::parse_at(s, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> GroupValue {
        s.parse().unwrap()
    }

    #[test]
    fn compare_examples() {
        assert_eq!(
            compare(&v("(1,0)"), &v("(0,5)")).unwrap(),
            Ordering::Greater
        );
        assert_eq!(compare(&v("inf"), &v("100")).unwrap(), Ordering::Greater);
        assert_eq!(compare(&v("1/2"), &v("1/2")).unwrap(), Ordering::Equal);
        assert_eq!(
            compare(&v("(1,0)"), &v("1")),
            Err(Error::DimensionMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn affine_examples() {
        assert_eq!(affine(&v("1/2"), 3, &v("3/2")).unwrap(), v("5"));
        assert_eq!(affine(&v("inf"), 2, &v("1")).unwrap(), GroupValue::Infinity);
        assert_eq!(affine(&v("(0,1)"), 2, &v("(1,0)")).unwrap(), v("(2,1)"));
    }

    #[test]
    fn slope_examples() {
        assert_eq!(slope(&v("2"), &v("1/2"), 1).unwrap(), v("3/2"));
        assert_eq!(slope(&v("1"), &v("1"), 4).unwrap(), v("0"));
        assert_eq!(slope(&v("(3,1)"), &v("(1,0)"), 2).unwrap(), v("(1,1/2)"));
        assert_eq!(slope(&v("inf"), &v("1"), 1), Err(Error::InfiniteSlope));
    }

    #[test]
    fn ranks_examples() {
        assert_eq!(subgroup_ranks(&[v("1"), v("1/2")]).unwrap(), (1, 1));
        assert_eq!(subgroup_ranks(&[v("(1,0)"), v("(0,1)")]).unwrap(), (2, 2));
        assert_eq!(subgroup_ranks(&[v("(0,1)"), v("(0,2/3)")]).unwrap(), (1, 1));
        assert_eq!(subgroup_ranks(&[]).unwrap(), (0, 0));
        assert_eq!(
            subgroup_ranks(&[v("(1,1)"), v("(2,2)"), v("(0,3)")]).unwrap(),
            (2, 2)
        );
    }

    #[test]
    fn text_form_roundtrip() {
        for s in ["3/4", "-2", "inf", "(1,-1/2,0)", "0"] {
            assert_eq!(v(s).to_string(), s);
        }
        assert_eq!(v(" 6/4 ").to_string(), "3/2");
        assert!("1/0".parse::<GroupValue>().is_err());
        assert!("(1,2".parse::<GroupValue>().is_err());
    }
}
