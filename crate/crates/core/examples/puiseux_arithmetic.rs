//! Exact arithmetic in finite Puiseux expressions over Q and in (Q, v_p).
use keypoly::base_fields::{binomial_roots, FieldContext, FieldElement};

fn main() {
    let ctx = FieldContext::tadic();
    let x = FieldElement::parse("t^-1 + 2*t^(1/2)", ctx).unwrap();
    let y = FieldElement::parse("3*t^(1/3) - t", ctx).unwrap();
    println!("x = {x}, v(x) = {}", x.valuation());
    println!("y = {y}, v(y) = {}", y.valuation());
    println!("x*y = {}", &x * &y);
    println!("x + y = {}", &x + &y);

    let u = FieldElement::parse("5 + t^(1/2)", ctx).unwrap();
    println!("residue of {u}: {}", u.residue().unwrap());
    let q = FieldElement::parse("t^2 - t^4", ctx).unwrap();
    let d = FieldElement::parse("1 + t", ctx).unwrap();
    println!("({q}) / ({d}) = {}", q.checked_div(&d).unwrap());
    println!("1 / ({d}) = {:?}", d.inverse().map(|e| e.to_string()));

    let c = FieldElement::parse("4*t^3", ctx).unwrap();
    let roots: Vec<String> = binomial_roots(&c, 2)
        .unwrap()
        .iter()
        .map(|r| r.to_string())
        .collect();
    println!("square roots of {c}: {}", roots.join(", "));

    let p5 = FieldContext::padic(5).unwrap();
    let z = FieldElement::parse("75/2", p5).unwrap();
    println!("v_5({z}) = {}", z.valuation());
    let w = FieldElement::parse("7/3", p5).unwrap();
    println!("residue of {w} mod 5: {}", w.residue().unwrap());
}
