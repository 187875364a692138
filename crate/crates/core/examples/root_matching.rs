//! Roots of nearby monic polynomials can be paired off within V(f - f*)/n.
use keypoly::base_fields::{FieldContext, FieldElement};
use keypoly::diskoid::{verify_conjugate_invariance, verify_root_matching};
use keypoly::polynomials::Polynomial;
use keypoly::value_group::GroupValue;

fn main() {
    let ctx = FieldContext::tadic();
    let el = |s: &str| FieldElement::parse(s, ctx).unwrap();
    let p = |s: &str| Polynomial::parse(s, ctx).unwrap();
    let f = p("X^2 - t");
    let fstar = p("X^2 - t*(1 + t)^2");
    let roots = [el("t^(1/2)"), el("-t^(1/2)")];
    let roots_star = [el("-t^(1/2) - t^(3/2)"), el("t^(1/2) + t^(3/2)")];
    println!(
        "{}",
        verify_root_matching(&f, &fstar, &roots, &roots_star)
            .unwrap()
            .to_json()
    );
    let samples = [p("X^2"), p("X^3"), p("X^4 - t*X + 1")];
    let r = verify_conjugate_invariance(&roots, &GroupValue::from_ratio(3, 2), &samples).unwrap();
    println!("{}", r.to_json());
}
