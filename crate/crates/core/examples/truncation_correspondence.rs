//! On K[X] the truncation of a pair valuation by X^2 - t agrees with the pair
//! valuation centered at a root. Checked on a seeded corpus.
use keypoly::suites::correspondence_suite;

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let report = correspondence_suite(seed);
    println!(
        "{}",
        serde_json::to_string_pretty(&report.details[..2]).unwrap()
    );
    println!("status: {:?}", report.status);
}
