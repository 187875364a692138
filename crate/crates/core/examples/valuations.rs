//! Gauss, pair and truncated valuations, the epsilon factor and Q-expansions.
use keypoly::base_fields::FieldContext;
use keypoly::polynomials::{q_expansion, Polynomial};
use keypoly::valuations::{epsilon_factor, support_set, value_of, PolyValuation};

fn main() {
    let ctx = FieldContext::tadic();
    let q = Polynomial::parse("X^2 - t", ctx).unwrap();
    let pair = PolyValuation::parse("pair:t^(1/2):3/2", ctx).unwrap();
    let trunc = pair.truncate(&q).unwrap();
    let gauss = PolyValuation::parse("gauss:1/2", ctx).unwrap();

    for text in [
        "X",
        "X^2",
        "X^2 - t",
        "X^3 + t*X^2 - X + 1",
        "(X^2 - t)^2 + t^5",
    ] {
        let f = Polynomial::parse(text, ctx).unwrap();
        let parts: Vec<String> = q_expansion(&f, &q)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        println!("f = {f}");
        println!("  Q-expansion: [{}]", parts.join(", "));
        for mu in [&gauss, &pair, &trunc] {
            println!(
                "  {mu}: value {}, eps {}",
                value_of(mu, &f).unwrap(),
                epsilon_factor(mu, &f).unwrap()
            );
        }
        let s = support_set(&pair, &q, &f).unwrap();
        println!("  support {:?}, d = {}", s.indices, s.d);
    }
}
