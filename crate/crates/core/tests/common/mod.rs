#![allow(dead_code)]

use num_rational::BigRational;
use rankyank::{AlternativeRoster, Profile, WeakOrder};

pub fn rat(s: &str) -> BigRational {
    s.parse().unwrap()
}

pub fn order(classes: &[&[usize]], m: usize) -> WeakOrder {
    WeakOrder::new(classes.iter().map(|c| c.to_vec()).collect(), m).unwrap()
}

pub fn strict(m: usize, seq: &[usize]) -> WeakOrder {
    WeakOrder::new(seq.iter().map(|&i| vec![i]).collect(), m).unwrap()
}

/// Four alternatives under five weak-order criteria:
/// x1>x2=x3=x4, x2=x3=x4>x1, x1=x2>x3=x4, x3=x4>x1=x2, and a full tie.
/// Symmetric election matrix; everything socially indifferent.
pub fn five_criteria_profile() -> Profile {
    let roster = AlternativeRoster::numbered(4).unwrap();
    Profile::from_orders(
        roster,
        vec![
            order(&[&[0], &[1, 2, 3]], 4),
            order(&[&[1, 2, 3], &[0]], 4),
            order(&[&[0, 1], &[2, 3]], 4),
            order(&[&[2, 3], &[0, 1]], 4),
            order(&[&[0, 1, 2, 3]], 4),
        ],
    )
    .unwrap()
}

/// Four alternatives under six strict criteria: x1 ties every rival 3-3
/// while x2, x3, x4 cycle.
pub fn six_strict_criteria_profile() -> Profile {
    let roster = AlternativeRoster::numbered(4).unwrap();
    let seqs: [[usize; 4]; 6] = [
        [0, 1, 2, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
        [1, 2, 3, 0],
        [2, 3, 1, 0],
        [3, 1, 2, 0],
    ];
    Profile::from_orders(roster, seqs.iter().map(|s| strict(4, s)).collect()).unwrap()
}

/// The classic three-alternative cycle: 2x (x1>x2>x3), 2x (x2>x3>x1),
/// 1x (x3>x1>x2). Nobody can be whipped, yet no sufficient condition holds.
pub fn cyclic_three_profile() -> Profile {
    let roster = AlternativeRoster::numbered(3).unwrap();
    Profile::new(
        roster,
        vec![
            (strict(3, &[0, 1, 2]), 2),
            (strict(3, &[1, 2, 0]), 2),
            (strict(3, &[2, 0, 1]), 1),
        ],
    )
    .unwrap()
}
