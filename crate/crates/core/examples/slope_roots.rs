//! The polygon of Hasse-Schmidt values records how far the roots are from a
//! valuation: face lengths are multiplicities and slopes are root values.
use keypoly::base_fields::{FieldContext, FieldElement};
use keypoly::newton::{
    render, root_configuration, slope_data, verify_slope_root_equivalence, RenderFormat,
};
use keypoly::polynomials::Polynomial;
use keypoly::valuations::PolyValuation;

fn main() {
    let ctx = FieldContext::tadic();
    let roots: Vec<FieldElement> = ["t^(1/2)", "-t^(1/2)", "t^(1/2) + t^2", "1", "t^-1"]
        .iter()
        .map(|s| FieldElement::parse(s, ctx).unwrap())
        .collect();
    let f = Polynomial::from_roots(&FieldElement::one(ctx), &roots);
    println!("f = {f}");
    for val in ["pair:t^(1/2):3/2", "gauss:0", "pair:1:1/3"] {
        let mu = PolyValuation::parse(val, ctx).unwrap();
        let poly = slope_data(&f, &mu).unwrap();
        let config = root_configuration(&roots, &mu).unwrap();
        println!("\n{mu}");
        println!("{}", render(&poly, RenderFormat::Ascii).unwrap());
        let groups: Vec<String> = config
            .groups
            .iter()
            .map(|(l, d)| format!("{l} x {d}"))
            .collect();
        println!("root values: {}", groups.join(", "));
        println!(
            "status: {:?}",
            verify_slope_root_equivalence(&f, &roots, &mu)
                .unwrap()
                .status
        );
    }
}
