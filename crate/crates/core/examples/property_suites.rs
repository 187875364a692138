//! Runs a seeded property suite: `cargo run --example property_suites -- newton 3`.
use keypoly::suites::run_suite;

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "all".to_string());
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    match run_suite(&name, seed) {
        Ok(r) => println!("{}", r.to_json()),
        Err(e) => eprintln!("{e}"),
    }
}
