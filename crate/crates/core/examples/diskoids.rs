//! Decomposing a diskoid into balls, membership, and attaining the ball minimum.
use keypoly::base_fields::{FieldContext, FieldElement};
use keypoly::diskoid::{attain_ball_minimum, decompose, diskoid_value, membership};
use keypoly::polynomials::Polynomial;
use keypoly::value_group::GroupValue;

fn main() {
    let ctx = FieldContext::tadic();
    let el = |s: &str| FieldElement::parse(s, ctx).unwrap();
    let roots = vec![el("t^(1/2)"), el("-t^(1/2)"), el("t")];
    let f = Polynomial::from_roots(&FieldElement::one(ctx), &roots);
    for rho in ["1", "2", "5/2"] {
        let d = decompose(&f, &roots, &rho.parse().unwrap()).unwrap();
        println!("rho = {rho}: {d}");
        for x in ["0", "t^(1/2) + t^2", "2*t", "t^(1/3)"] {
            let r = membership(&el(x), &d).unwrap();
            println!("  {x}: {}", r.details[0]["by_value"]);
        }
        let g = Polynomial::parse("X^2 + t^(1/2)*X", ctx).unwrap();
        println!("  value of {g}: {}", diskoid_value(&d, &g).unwrap());
    }

    let g = Polynomial::parse("X^2 - t^2", ctx).unwrap();
    let a = attain_ball_minimum(&el("t"), &GroupValue::from_int(1), &g).unwrap();
    let (x, u) = a.witness.unwrap();
    println!(
        "min over D(t, 1) of v({g}) is {}, attained at {x} (u = {u})",
        a.formula
    );
}
