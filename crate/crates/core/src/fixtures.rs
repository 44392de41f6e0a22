//! Named fixture groupoids shared by the CLI demo and the test suites.

use crate::groupoid::{
    action_groupoid, disjoint_union, one_object, pair_groupoid, GroupTable, Groupoid, SetAction,
};

pub const FIXTURE_NAMES: [&str; 7] =
    ["trivial", "z2", "s3", "pair2", "pair3", "z2-disjoint", "z4-on-2"];

/// Z/4 acting on two points through its generator swapping them.
pub fn z4_on_two_points() -> Groupoid {
    let z4 = GroupTable::cyclic(4);
    let swap = SetAction::new(&z4, vec!["0".into(), "1".into()], |k, p| (p + k) % 2)
        .expect("parity action is an action");
    action_groupoid(&z4, &swap)
}

pub fn fixture(name: &str) -> Option<Groupoid> {
    Some(match name {
        "trivial" => one_object(&GroupTable::cyclic(1)),
        "z2" => one_object(&GroupTable::cyclic(2)),
        "s3" => one_object(&GroupTable::symmetric3()),
        "pair2" => pair_groupoid(2),
        "pair3" => pair_groupoid(3),
        "z2-disjoint" => {
            let z2 = one_object(&GroupTable::cyclic(2));
            disjoint_union(&z2, &z2)
        }
        "z4-on-2" => z4_on_two_points(),
        _ => return None,
    })
}

pub fn all_fixtures() -> Vec<(&'static str, Groupoid)> {
    FIXTURE_NAMES.iter().map(|&n| (n, fixture(n).expect("known fixture"))).collect()
}
