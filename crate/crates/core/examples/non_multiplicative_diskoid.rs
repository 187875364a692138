//! D(0,0) and D(a,0) with v(a) < 0 form a diskoid whose min-value map is not
//! multiplicative.
use keypoly::base_fields::{FieldContext, FieldElement};
use keypoly::diskoid::non_multiplicative_diskoid;

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "t^-1".to_string());
    let a = FieldElement::parse(&text, FieldContext::tadic()).unwrap();
    println!("{}", non_multiplicative_diskoid(&a).unwrap().to_json());
}
