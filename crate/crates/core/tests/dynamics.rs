mod common;

use proptest::prelude::*;

use common::{all_trees, arb_tree_and_coloring};
use treedyn::dynamics::{
    classify, node_partition, node_roles, roles_consistent, run_orbit, step, Classification, Coloring, NodeRole,
    ProcessKind,
};
use treedyn::generate::{make_path, make_star};
use treedyn::oracle::brute_force;

fn col(s: &str) -> Coloring {
    s.parse().unwrap()
}

#[test]
fn spec_examples() {
    let star = make_star(5).unwrap();
    assert_eq!(step(&star, &col("00000"), ProcessKind::Minority).unwrap(), col("11111"));
    let p3 = make_path(3).unwrap();
    assert_eq!(step(&p3, &col("010"), ProcessKind::Minority).unwrap(), col("010"));
    let p4 = make_path(4).unwrap();
    assert_eq!(step(&p4, &col("0011"), ProcessKind::Majority).unwrap(), col("0011"));
    assert_eq!(classify(&p4, &col("0001"), ProcessKind::Minority).unwrap(), Classification::Transient);
    for n in 2..10 {
        let p = make_path(n).unwrap();
        let zero = Coloring::zeros(n);
        assert_eq!(classify(&p, &zero, ProcessKind::Minority).unwrap(), Classification::PureTwoCycle);
        assert_eq!(classify(&p, &zero, ProcessKind::Majority).unwrap(), Classification::Fixed);
    }
}

/// Every coloring of every tree up to 8 nodes reaches period 1 or 2.
#[test]
fn exhaustive_period_bound() {
    for t in all_trees(8) {
        let n = t.n();
        for x in 0..1u64 << n {
            let c = Coloring::from_index(n, x);
            for kind in ProcessKind::BOTH {
                let orbit = run_orbit(&t, &c, kind).unwrap();
                assert!(orbit.period <= 2);
                assert!(orbit.transient <= 4 * n * n);
            }
        }
    }
}

/// The fixed/toggle split of every periodic coloring agrees with the local
/// role inequalities, and flipping any single role breaks consistency.
#[test]
fn role_inequalities_match_oracle_two_cycles() {
    let mut mixed = 0;
    for t in all_trees(9) {
        for kind in ProcessKind::BOTH {
            let report = brute_force(&t, kind).unwrap();
            for c in report.pure.iter().chain(&report.mixed_two_cycles).chain(&report.fixed) {
                let roles = node_roles(&t, c, kind).unwrap();
                assert!(roles_consistent(&t, c, kind, &roles), "{:?} {c}", t.edges());
                for v in 0..t.n() {
                    let mut other = roles.clone();
                    other[v] = match other[v] {
                        NodeRole::Fixed => NodeRole::Toggle,
                        NodeRole::Toggle => NodeRole::Fixed,
                    };
                    assert!(!roles_consistent(&t, c, kind, &other));
                }
            }
            for c in &report.mixed_two_cycles {
                let part = node_partition(&t, c, kind).unwrap();
                assert!(!part.fixed.is_empty() && !part.toggle.is_empty());
                mixed += 1;
            }
        }
    }
    assert!(mixed > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn step_is_deterministic_and_complement_equivariant((t, c) in arb_tree_and_coloring(64)) {
        for kind in ProcessKind::BOTH {
            let a = step(&t, &c, kind).unwrap();
            prop_assert_eq!(&a, &step(&t, &c, kind).unwrap());
            prop_assert_eq!(step(&t, &c.complement(), kind).unwrap(), a.complement());
        }
    }

    #[test]
    fn orbits_are_short((t, c) in arb_tree_and_coloring(64)) {
        let n = t.n();
        for kind in ProcessKind::BOTH {
            let orbit = run_orbit(&t, &c, kind).unwrap();
            prop_assert!(orbit.period == 1 || orbit.period == 2);
            prop_assert!(orbit.transient <= 4 * n * n);
            prop_assert_eq!(orbit.cycle_colorings.len(), orbit.period);
            let last = orbit.cycle_colorings.last().unwrap();
            prop_assert_eq!(&step(&t, last, kind).unwrap(), &orbit.cycle_colorings[0]);
        }
    }

    #[test]
    fn pure_iff_every_node_outweighed((t, c) in arb_tree_and_coloring(12)) {
        for kind in ProcessKind::BOTH {
            let strict = (0..t.n()).all(|v| {
                let same = t.neighbors(v).iter().filter(|&&(w, _)| c.get(w) == c.get(v)).count();
                let other = t.degree(v) - same;
                kind.flips(same, other)
            });
            let pure = step(&t, &c, kind).unwrap() == c.complement();
            prop_assert_eq!(strict, pure);
            prop_assert_eq!(pure, classify(&t, &c, kind).unwrap() == Classification::PureTwoCycle);
        }
    }

    #[test]
    fn partition_covers_nodes((t, c) in arb_tree_and_coloring(12)) {
        for kind in ProcessKind::BOTH {
            let orbit = run_orbit(&t, &c, kind).unwrap();
            let periodic = &orbit.cycle_colorings[0];
            let part = node_partition(&t, periodic, kind).unwrap();
            prop_assert_eq!(part.fixed.len() + part.toggle.len(), t.n());
            if orbit.period == 1 {
                prop_assert!(part.toggle.is_empty());
            }
        }
    }
}
