//! Lexicographic value groups: comparison, affine combinations and ranks.
use keypoly::value_group::{affine, subgroup_ranks, GroupValue};

fn main() {
    let a: GroupValue = "(1,-5)".parse().unwrap();
    let b: GroupValue = "(0,7/2)".parse().unwrap();
    println!("{a} vs {b}: {:?}", a.try_cmp(&b).unwrap());
    println!(
        "{a} vs inf: {:?}",
        a.try_cmp(&GroupValue::Infinity).unwrap()
    );

    let gamma = GroupValue::from_ratio(-1, 3);
    let delta = GroupValue::from_ratio(3, 2);
    println!(
        "{gamma} + 4*{delta} = {}",
        affine(&gamma, 4, &delta).unwrap()
    );

    for gens in [
        vec!["1/2", "3"],
        vec!["(1,0)", "(0,1)", "(2,3)"],
        vec!["(0,1,0)", "(0,0,1/7)"],
    ] {
        let values: Vec<GroupValue> = gens.iter().map(|g| g.parse().unwrap()).collect();
        let (rank, rat_rank) = subgroup_ranks(&values).unwrap();
        println!(
            "<{}>: rank {rank}, rational rank {rat_rank}",
            gens.join(", ")
        );
    }
}
