mod common;

use proptest::prelude::*;
use status_lab::status::min_status;
use status_lab::transforms::{
    caterpillar_shift, contract_to_pendant, dumbbell_shift, move_branches, CutEdge,
};
use status_lab::Error;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn contraction_lowers_min_status(seed in any::<u64>()) {
        let Some((g, u, v)) = common::contraction_case(seed) else {
            return Ok(());
        };
        let h = contract_to_pendant(&g, CutEdge::new(&g, u, v).unwrap()).unwrap();
        prop_assert_eq!(h.n(), g.n());
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert_eq!(h.is_tree(), g.is_tree());
        prop_assert_eq!(h.degree(v), 1);
        prop_assert!(h.has_edge(u, v));
        prop_assert!(min_status(&h) < min_status(&g));
    }

    #[test]
    fn branch_moves_raise_min_status(seed in any::<u64>()) {
        let Some((t, u, w, moved)) = common::branch_move_case(seed) else {
            return Ok(());
        };
        let h = move_branches(&t, u, w, &moved).unwrap();
        prop_assert!(h.is_tree());
        prop_assert_eq!(h.n(), t.n());
        for &r in &moved {
            prop_assert!(h.has_edge(w, r) && !h.has_edge(u, r));
        }
        prop_assert!(min_status(&h) > min_status(&t));
    }

    #[test]
    fn branch_move_rejects_moving_the_target_branch(seed in any::<u64>()) {
        let Some((t, u, w, mut moved)) = common::branch_move_case(seed) else {
            return Ok(());
        };
        // Moving the branch that contains w is never valid.
        let b2_root = *t
            .neighbors(u)
            .iter()
            .find(|&&r| common::branch(&t, u, r).contains(&w))
            .unwrap();
        moved.push(b2_root);
        prop_assert!(move_branches(&t, u, w, &moved).is_err());
    }
}

#[test]
fn pendant_edges_are_rejected() {
    for seed in 0..50 {
        let t = status_lab::enumeration::random_tree(12, seed);
        let (a, b) = t
            .edges()
            .find(|&(a, b)| t.degree(a) == 1 || t.degree(b) == 1)
            .unwrap();
        let e = CutEdge::new(&t, a, b).unwrap();
        assert!(e.pendant);
        assert_eq!(contract_to_pendant(&t, e), Err(Error::PendantEdge(a, b)));
    }
}

#[test]
fn shifts_over_all_small_parameters() {
    for n in 4..=30 {
        for p in 0..n {
            for q in 0..n {
                if let Ok((before, after)) = dumbbell_shift(n, p, q) {
                    assert!(
                        min_status(&before) > min_status(&after),
                        "D n={n} p={p} q={q}"
                    );
                }
                if let Ok((before, after)) = caterpillar_shift(n, p, q) {
                    assert!(
                        min_status(&before) > min_status(&after),
                        "C n={n} p={p} q={q}"
                    );
                }
            }
        }
    }
}
