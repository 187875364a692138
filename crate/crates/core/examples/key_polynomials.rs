//! Testing the key polynomial condition on finite candidate families.
use keypoly::base_fields::FieldContext;
use keypoly::polynomials::Polynomial;
use keypoly::valuations::{
    abkp_refute, verify_epsilon_equality, verify_graded_rewrite, verify_product_rule, PolyValuation,
};

fn main() {
    let ctx = FieldContext::tadic();
    let p = |s: &str| Polynomial::parse(s, ctx).unwrap();
    let q = p("X^2 - t");

    let gauss = PolyValuation::parse("gauss:1/2", ctx).unwrap();
    let verdict = abkp_refute(&gauss, &q, &[p("X - t"), p("X")]).unwrap();
    println!("under {gauss}: {verdict}");

    let pair = PolyValuation::parse("pair:t^(1/2):3/2", ctx).unwrap();
    let family: Vec<Polynomial> = ["X", "X - 1", "X - t", "X + t^-1", "X - 2*t"]
        .iter()
        .map(|s| p(s))
        .collect();
    println!("under {pair}: {}", abkp_refute(&pair, &q, &family).unwrap());

    for f in ["X^2", "X^3 - t*X", "X^4 - 2*t*X^2 + t^2 + t^7"] {
        let r = verify_epsilon_equality(&q, &pair, &p(f)).unwrap();
        println!("{}", r.to_json());
    }
    println!(
        "{}",
        verify_graded_rewrite(&q, &pair, &p("X + t"))
            .unwrap()
            .to_json()
    );
    println!(
        "{}",
        verify_product_rule(&pair, &q, &[p("X - t"), p("X - t")])
            .unwrap()
            .to_json()
    );
}
