//! Lower hull of a point set, rendered as text, Svg and Json.
use keypoly::newton::{lower_hull, render, RenderFormat};
use keypoly::value_group::GroupValue;

fn main() {
    let points: Vec<(usize, GroupValue)> = [
        (0, 9),
        (2, 10),
        (6, 3),
        (8, 2),
        (8, 6),
        (10, 5),
        (11, 8),
        (12, 0),
        (14, 3),
        (20, 8),
    ]
    .iter()
    .map(|&(a, g)| (a, GroupValue::from_int(g)))
    .collect();
    let poly = lower_hull(&points).unwrap();
    println!("{}", render(&poly, RenderFormat::Ascii).unwrap());
    println!("{}", render(&poly, RenderFormat::Json).unwrap());
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, render(&poly, RenderFormat::Svg).unwrap()).unwrap();
        println!("wrote {path}");
    }
}
