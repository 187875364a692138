//! Newton polygons in `ℕ × Φ_ℚ`.
//!
//! Slopes follow the negated convention: the face from `(a, γ_a)` to `(b, γ_b)`
//! has slope `(γ_a − γ_b) / (b − a)`, so slopes decrease from left to right.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::json;

use crate::base_fields::FieldElement;
use crate::error::{Error, Result};
use crate::polynomials::{hasse_derivative, Polynomial};
use crate::report::Report;
use crate::valuations::{delta_invariant, epsilon_factor, value_of, PolyValuation};
use crate::value_group::{slope, GroupValue, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// Finite input points after keeping the minimum per abscissa.
    pub points: Vec<(usize, GroupValue)>,
    pub vertices: Vec<(usize, GroupValue)>,
    pub slopes: Vec<GroupValue>,
}

impl NewtonPolygon {
    /// Horizontal lengths `a_t − a_{t−1}` of the faces.
    pub fn lengths(&self) -> Vec<usize> {
        self.vertices.windows(2).map(|w| w[1].0 - w[0].0).collect()
    }

    pub fn first_slope(&self) -> Option<&GroupValue> {
        self.slopes.first()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        json!({
            "vertices": self.vertices.iter().map(|(a, g)| json!([a, g.to_string()])).collect::<Vec<_>>(),
            "slopes": self.slopes.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// `(y0 − y1)·(x2 − x1)` against `(y1 − y2)·(x1 − x0)`: compares the slopes of
/// the faces `p0p1` and `p1p2` without dividing.
fn turn(
    p0: &(usize, GroupValue),
    p1: &(usize, GroupValue),
    p2: &(usize, GroupValue),
) -> Result<Ordering> {
    let left = p0.1.try_sub(&p1.1)?.scale_int(p2.0 - p1.0);
    let right = p1.1.try_sub(&p2.1)?.scale_int(p1.0 - p0.0);
    left.try_cmp(&right)
}

pub fn lower_hull(points: &[(usize, GroupValue)]) -> Result<NewtonPolygon> {
    let mut best: BTreeMap<usize, GroupValue> = BTreeMap::new();
    for (a, g) in points.iter().filter(|(_, g)| g.is_finite()) {
        match best.get(a) {
            Some(old) if old.try_cmp(g)?.is_le() => {}
            _ => {
                best.insert(*a, g.clone());
            }
        }
    }
    if best.is_empty() {
        return Err(Error::NoFinitePoints);
    }
    let kept: Vec<(usize, GroupValue)> = best.into_iter().collect();

    let mut hull: Vec<(usize, GroupValue)> = Vec::new();
    for p in &kept {
        while hull.len() >= 2 {
            let n = hull.len();
            // The middle point stays only if the slope strictly drops there.
            if turn(&hull[n - 2], &hull[n - 1], p)?.is_gt() {
                break;
            }
            hull.pop();
        }
        hull.push(p.clone());
    }
    let slopes = hull
        .windows(2)
        .map(|w| slope(&w[0].1, &w[1].1, w[1].0 - w[0].0))
        .collect::<Result<Vec<_>>>()?;
    Ok(NewtonPolygon {
        points: kept,
        vertices: hull,
        slopes,
    })
}

/// `γ + k·ε` compared at two abscissae, for the support condition.
fn support_level(point: &(usize, GroupValue), eps: &GroupValue) -> Result<GroupValue> {
    let shift = if point.0 == 0 {
        GroupValue::zero(eps.dim().unwrap_or(1))
    } else {
        eps.scale_int(point.0)
    };
    point.1.try_add(&shift)
}

/// Re-checks the support property: every point lies on or above each face's
/// line, strictly above when outside the face.
pub fn check_support(poly: &NewtonPolygon) -> Result<bool> {
    for (t, eps) in poly.slopes.iter().enumerate() {
        let (left, right) = (&poly.vertices[t], &poly.vertices[t + 1]);
        let base = support_level(left, eps)?;
        for p in &poly.points {
            let ord = support_level(p, eps)?.try_cmp(&base)?;
            let inside = left.0 <= p.0 && p.0 <= right.0;
            if ord.is_lt() || (!inside && ord.is_eq()) {
                return Ok(false);
            }
        }
    }
    for w in poly.slopes.windows(2) {
        if w[0].try_cmp(&w[1])?.is_le() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Points `(i, μ(∂_i f))` for `i = 0..=deg f`.
pub fn hasse_points(f: &Polynomial, mu: &PolyValuation) -> Result<Vec<(usize, GroupValue)>> {
    (0..=f.deg())
        .map(|i| Ok((i, value_of(mu, &hasse_derivative(f, i))?)))
        .collect()
}

pub fn slope_data(f: &Polynomial, mu: &PolyValuation) -> Result<NewtonPolygon> {
    if f.is_zero() || f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    lower_hull(&hasse_points(f, mu)?)
}

/// Classical polygon of the coefficient points `(i, ν(a_i))`.
pub fn coefficient_polygon(f: &Polynomial) -> Result<NewtonPolygon> {
    let points: Vec<_> = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| (i, c.valuation()))
        .collect();
    lower_hull(&points)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootConfiguration {
    /// `(l_t, δ_t)` with `δ_1 > … > δ_s`.
    pub groups: Vec<(usize, GroupValue)>,
}

/// Groups a list of values into strictly decreasing classes with multiplicities.
fn decreasing_classes(mut values: Vec<GroupValue>) -> Result<Vec<(usize, GroupValue)>> {
    let mut err = None;
    values.sort_by(|a, b| {
        b.try_cmp(a).unwrap_or_else(|e| {
            err.get_or_insert(e);
            Ordering::Equal
        })
    });
    if let Some(e) = err {
        return Err(e);
    }
    let mut groups: Vec<(usize, GroupValue)> = Vec::new();
    for v in values {
        match groups.last_mut() {
            Some((l, last)) if *last == v => *l += 1,
            _ => groups.push((1, v)),
        }
    }
    Ok(groups)
}

pub fn root_configuration(roots: &[FieldElement], mu: &PolyValuation) -> Result<RootConfiguration> {
    if roots.is_empty() {
        return Err(Error::EmptyRoots);
    }
    let values = roots
        .iter()
        .map(|c| value_of(mu, &Polynomial::linear(c)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RootConfiguration {
        groups: decreasing_classes(values)?,
    })
}

pub(crate) fn ensure_roots_factor(f: &Polynomial, roots: &[FieldElement]) -> Result<()> {
    if f.is_zero() || roots.len() != f.deg() {
        return Err(Error::RootsDontFactor(f.to_string()));
    }
    if Polynomial::from_roots(&f.leading_coefficient(), roots) != *f {
        return Err(Error::RootsDontFactor(f.to_string()));
    }
    Ok(())
}

/// Slope data against root configuration: same number of faces, face lengths
/// equal to multiplicities, slopes equal to root values. Also checks the first
/// slope against the ε factor and the δ invariant.
pub fn verify_slope_root_equivalence(
    f: &Polynomial,
    roots: &[FieldElement],
    mu: &PolyValuation,
) -> Result<Report> {
    ensure_roots_factor(f, roots)?;
    let poly = slope_data(f, mu)?;
    let config = root_configuration(roots, mu)?;
    let lengths = poly.lengths();
    let mults: Vec<usize> = config.groups.iter().map(|g| g.0).collect();
    let deltas: Vec<GroupValue> = config.groups.iter().map(|g| g.1.clone()).collect();
    let show = |v: &[GroupValue]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let mut report = Report::new("slope data equals root configuration");
    report.detail(json!({
        "f": f.to_string(),
        "valuation": mu.to_string(),
        "polygon": poly.to_json_value(),
    }));
    report.check(
        "number of faces",
        poly.slopes.len() == config.groups.len(),
        json!({"faces": poly.slopes.len(), "classes": config.groups.len()}),
    );
    report.check(
        "lengths = multiplicities",
        lengths == mults,
        json!({"lengths": lengths, "multiplicities": mults}),
    );
    report.check(
        "slopes = root values",
        poly.slopes == deltas,
        json!({"slopes": show(&poly.slopes), "root_values": show(&deltas)}),
    );
    let eps = epsilon_factor(mu, f)?;
    report.check(
        "first slope = epsilon",
        poly.first_slope() == Some(&eps),
        json!({"epsilon": eps.to_string()}),
    );
    let delta = delta_invariant(mu, roots)?;
    report.check(
        "delta invariant = first root value",
        deltas.first() == Some(&delta),
        json!({"delta": delta.to_string()}),
    );
    report.check("support property", check_support(&poly)?, json!(null));
    Ok(report)
}

/// The classical statement on coefficient points: a face of slope `ε` and
/// length `ℓ` accounts for exactly `ℓ` roots of value `ε`.
pub fn verify_coefficient_polygon(f: &Polynomial, roots: &[FieldElement]) -> Result<Report> {
    ensure_roots_factor(f, roots)?;
    let poly = coefficient_polygon(f)?;
    let finite: Vec<GroupValue> = roots
        .iter()
        .filter(|r| !r.is_zero())
        .map(|r| r.valuation())
        .collect();
    let classes = decreasing_classes(finite)?;
    // Zero roots shift the polygon right; the remaining faces see the others.
    let faces: Vec<(usize, GroupValue)> = poly
        .lengths()
        .into_iter()
        .zip(poly.slopes.iter().cloned())
        .collect();
    let mut report = Report::new("coefficient polygon counts roots by value");
    report.check(
        "faces = root value classes",
        faces == classes,
        json!({
            "faces": faces.iter().map(|(l, e)| json!([l, e.to_string()])).collect::<Vec<_>>(),
            "classes": classes.iter().map(|(l, e)| json!([l, e.to_string()])).collect::<Vec<_>>(),
        }),
    );
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
    Json,
}

impl std::str::FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            "json" => Ok(RenderFormat::Json),
            other => Err(Error::Unsupported(format!("render format {other}"))),
        }
    }
}

pub fn render(poly: &NewtonPolygon, format: RenderFormat) -> Result<String> {
    match format {
        RenderFormat::Json => Ok(serde_json::to_string(&poly.to_json_value()).unwrap()),
        RenderFormat::Ascii => render_ascii(poly),
        RenderFormat::Svg => render_svg(poly),
    }
}

fn rank1_points(poly: &NewtonPolygon) -> Result<Vec<(usize, Rational)>> {
    poly.points
        .iter()
        .map(|(a, g)| match g.as_rank1() {
            Some(v) => Ok((*a, v.clone())),
            None => Err(Error::UnplottableRank(g.dim().unwrap_or(0))),
        })
        .collect()
}

/// Hull height above abscissa `x`, for `x` between the first and last vertex.
fn hull_height(poly: &NewtonPolygon, x: usize) -> Option<Rational> {
    let w = poly
        .vertices
        .windows(2)
        .find(|w| w[0].0 <= x && x <= w[1].0)?;
    let (x0, y0) = (w[0].0, w[0].1.as_rank1()?);
    let eps = poly.slopes[poly.vertices.iter().position(|v| v.0 == x0)?].as_rank1()?;
    Some(y0 - eps * Rational::from_integer((x - x0).into()))
}

fn render_ascii(poly: &NewtonPolygon) -> Result<String> {
    let pts = rank1_points(poly)?;
    let scale: Rational =
        Rational::from_integer(pts.iter().fold(num_bigint::BigInt::from(1), |acc, (_, v)| {
            num_integer::Integer::lcm(&acc, v.denom())
        }));
    let row = |v: &Rational| (v * &scale).round().to_integer();
    let lo = pts.iter().map(|(_, v)| row(v)).min().unwrap();
    let hi = pts.iter().map(|(_, v)| row(v)).max().unwrap();
    let width = pts.last().unwrap().0 + 1;
    let height: usize = (&hi - &lo).try_into().unwrap_or(0usize) + 1;
    let mut grid = vec![vec![' '; width]; height];
    for x in 0..width {
        let Some(h) = hull_height(poly, x) else {
            continue;
        };
        let r: usize = (row(&h) - &lo).try_into().unwrap_or(0);
        if let Some(cell) = grid.get_mut(r) {
            cell[x] = '.';
        }
    }
    for (a, v) in &pts {
        let r: usize = (row(v) - &lo).try_into().unwrap();
        let vertex = poly.vertices.iter().any(|(b, _)| b == a);
        grid[r][*a] = if vertex { '@' } else { 'o' };
    }
    let mut out = String::new();
    let labels: Vec<String> = (0..height)
        .map(|r| (Rational::from_integer(&lo + num_bigint::BigInt::from(r)) / &scale).to_string())
        .collect();
    let label_width = labels.iter().map(|l| l.len()).max().unwrap();
    for r in (0..height).rev() {
        let label = &labels[r];
        let line: String = grid[r].iter().flat_map(|c| [*c, ' ']).collect();
        let row = format!("{label:>label_width$} | {line}");
        writeln!(out, "{}", row.trim_end()).unwrap();
    }
    writeln!(out, "{} +-{}", " ".repeat(label_width), "--".repeat(width)).unwrap();
    let ticks: String = (0..width).map(|x| format!("{:<2}", x % 10)).collect();
    writeln!(out, "{}   {}", " ".repeat(label_width), ticks.trim_end()).unwrap();
    let verts: Vec<String> = poly
        .vertices
        .iter()
        .map(|(a, g)| format!("({a},{g})"))
        .collect();
    let slopes: Vec<String> = poly.slopes.iter().map(|s| s.to_string()).collect();
    writeln!(out, "vertices: {}", verts.join(" ")).unwrap();
    writeln!(out, "slopes: {}", slopes.join(" ")).unwrap();
    Ok(out)
}

fn svg_num(v: &Rational) -> String {
    let f = num_traits::ToPrimitive::to_f64(v).unwrap_or(0.0);
    let s = format!("{f:.4}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn render_svg(poly: &NewtonPolygon) -> Result<String> {
    let pts = rank1_points(poly)?;
    let ys: Vec<&Rational> = pts.iter().map(|(_, v)| v).collect();
    let lo = ys.iter().min().unwrap().floor();
    let hi = ys.iter().max().unwrap().ceil();
    let width = pts.last().unwrap().0 + 2;
    let height = (&hi - &lo).to_integer() + num_bigint::BigInt::from(3);
    // y grows upward in value space, so plot -value.
    let y = |v: &Rational| svg_num(&-v);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1 {} {} {}">"#,
        y(&(&hi + Rational::from_integer(2.into()))),
        width,
        height
    )
    .unwrap();
    let top = &hi + Rational::from_integer(2.into());
    let first = &poly.vertices[0];
    let last = poly.vertices.last().unwrap();
    for (a, g) in [first, last] {
        writeln!(
            out,
            r#"  <line x1="{a}" y1="{}" x2="{a}" y2="{}" stroke="gray" stroke-width="0.05" stroke-dasharray="0.2"/>"#,
            y(g.as_rank1().unwrap()),
            y(&top)
        )
        .unwrap();
    }
    let path: Vec<String> = poly
        .vertices
        .iter()
        .map(|(a, g)| format!("{a},{}", y(g.as_rank1().unwrap())))
        .collect();
    writeln!(
        out,
        r#"  <polyline points="{}" fill="none" stroke="black" stroke-width="0.08"/>"#,
        path.join(" ")
    )
    .unwrap();
    for (a, v) in &pts {
        let vertex = poly.vertices.iter().any(|(b, _)| b == a);
        writeln!(
            out,
            r#"  <circle cx="{a}" cy="{}" r="0.15" fill="{}"/>"#,
            y(v),
            if vertex { "black" } else { "white" }
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
