//! Pinned end-to-end fixtures for the rank-2 correspondence: a single word
//! whose tableau pair, cycle structure, and operator images were worked out
//! by hand on paper and are frozen here coordinate by coordinate.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use domino_core::{
    apply_in, apply_op_tableau, apply_sc, cycles, extended_cycle, in_applicable, moved_domino,
    move_through, rs_inverse, rs_map, sc_applicable, CycleKind, Domino, DominoTableau, Operator,
    Side, SignedPermutation, Square,
};

fn word(s: &str) -> SignedPermutation {
    s.parse().expect("fixture word parses")
}

fn tableau(rank: usize, dominos: &[(u32, Domino)]) -> DominoTableau {
    let map: BTreeMap<u32, Domino> = dominos.iter().cloned().collect();
    DominoTableau::from_dominos(rank, map).expect("fixture tableau is valid")
}

/// The insertion tableau of 4,-3,-2,1 at rank 2, built step by step by hand.
fn staircase_fixture() -> DominoTableau {
    tableau(
        2,
        &[
            (1, Domino::horizontal(1, 3)),
            (2, Domino::vertical(3, 1)),
            (3, Domino::vertical(2, 2)),
            (4, Domino::horizontal(2, 3)),
        ],
    )
}

#[test]
fn rank_two_pair_of_the_running_word_matches_hand_computation() {
    let w = word("4,-3,-2,1");
    let pair = rs_map(&w, 2);
    let expected = staircase_fixture();

    // The word is an involution, so both tableaux coincide.
    assert_eq!(w.inverse(), w, "running word is an involution");
    assert_eq!(pair.left(), &expected);
    assert_eq!(pair.right(), &expected);
    assert_eq!(pair.left().shape(), vec![4, 4, 2, 1]);
    assert_eq!(rs_inverse(&pair).expect("pair reverses"), w);
}

#[test]
fn sign_change_at_rank_plus_one_rebuilds_the_right_tableau_only() {
    let w = word("4,-3,-2,1");
    assert!(sc_applicable(&w, 3), "top sign change applies to the fixture");
    let image = apply_sc(&w, 3).expect("sign change applies");
    assert_eq!(image, word("-4,-3,-2,1"));

    let pair = rs_map(&image, 2);
    // Left tableau is untouched; the right tableau re-threads into a snake
    // of verticals along the top two rows.
    assert_eq!(pair.left(), &staircase_fixture());
    let expected_right = tableau(
        2,
        &[
            (1, Domino::vertical(3, 1)),
            (2, Domino::vertical(2, 2)),
            (3, Domino::vertical(1, 3)),
            (4, Domino::vertical(1, 4)),
        ],
    );
    assert_eq!(pair.right(), &expected_right);
    assert_eq!(pair.right().shape(), vec![4, 4, 2, 1]);

    // The tableau-level operator reproduces the same pair without touching
    // the word.
    let direct = apply_op_tableau(Operator::SignChange(3), &rs_map(&w, 2))
        .expect("sign change acts on the pair");
    assert_eq!(&direct, &pair);
}

#[test]
fn cycle_census_of_the_staircase_fixture() {
    let t = staircase_fixture();
    let found = cycles(&t);
    assert_eq!(found.len(), 4, "four singleton cycles");

    for c in &found {
        assert_eq!(c.labels.len(), 1, "every cycle is a singleton here");
    }
    let kind_of = |k: u32| -> &domino_core::Cycle {
        found
            .iter()
            .find(|c| c.labels.contains(&k))
            .expect("label lies in some cycle")
    };
    assert_eq!(kind_of(1).kind, CycleKind::OpenCore);
    assert_eq!(kind_of(2).kind, CycleKind::OpenCore);
    assert_eq!(kind_of(3).kind, CycleKind::OpenCore);

    let top = kind_of(4);
    assert_eq!(top.kind, CycleKind::OpenNonCore);
    assert_eq!(top.back, Some(Square::new(2, 4)));
    assert_eq!(top.front, Some(Square::new(3, 3)));

    // The alternate position of the top domino pivots around its fixed cell.
    let pivoted = moved_domino(&t, 4).expect("top label has an alternate position");
    assert_eq!(pivoted, Domino::vertical(2, 3));

    let moved = move_through(&t, top).expect("non-core open cycle moves");
    assert_eq!(moved.domino(4), Some(Domino::vertical(2, 3)));
    assert_eq!(moved.shape(), vec![4, 3, 3, 1]);
}

#[test]
fn interchange_at_rank_plus_one_matches_hand_computation() {
    let w = word("4,-3,-2,1");
    assert!(in_applicable(&w, 3), "top interchange applies to the fixture");
    let image = apply_in(&w, 3).expect("interchange applies");
    assert_eq!(image, word("4,-3,1,-2"));

    let pair = rs_map(&image, 2);
    let expected_left = tableau(
        2,
        &[
            (1, Domino::horizontal(1, 3)),
            (2, Domino::vertical(3, 1)),
            (3, Domino::vertical(2, 2)),
            (4, Domino::vertical(2, 3)),
        ],
    );
    let expected_right = tableau(
        2,
        &[
            (1, Domino::horizontal(1, 3)),
            (2, Domino::vertical(3, 1)),
            (3, Domino::horizontal(2, 2)),
            (4, Domino::horizontal(3, 2)),
        ],
    );
    assert_eq!(pair.left(), &expected_left);
    assert_eq!(pair.right(), &expected_right);

    // The left tableau of the image is exactly the fixture with its top
    // cycle moved through, and that cycle extends trivially: paired with
    // itself on the other side.
    let before = rs_map(&w, 2);
    let top = cycles(before.left())
        .into_iter()
        .find(|c| c.labels.contains(&4))
        .expect("label 4 lies in a cycle");
    assert_eq!(
        &move_through(before.left(), &top).expect("cycle moves"),
        pair.left()
    );
    for side in [Side::Left, Side::Right] {
        let ext = extended_cycle(&before, 4, side).expect("extended cycle exists");
        let singleton: BTreeSet<u32> = [4].into_iter().collect();
        assert_eq!(ext.in_left, singleton);
        assert_eq!(ext.in_right, singleton);
    }

    let direct = apply_op_tableau(Operator::InSwap(3), &before)
        .expect("interchange acts on the pair");
    assert_eq!(&direct, &pair);
}

#[test]
fn empty_word_maps_to_the_bare_core_at_every_rank() {
    let w = word("");
    for rank in 0..6 {
        let pair = rs_map(&w, rank);
        assert!(pair.left().is_empty());
        assert!(pair.right().is_empty());
        assert_eq!(pair.rank(), rank);
        assert_eq!(rs_inverse(&pair).expect("empty pair reverses"), w);
    }
}

#[test]
fn rank_zero_and_rank_one_images_of_a_short_word() {
    // Small enough to trace by hand: 2,-1 at ranks 0 and 1. The second
    // letter seeds a vertical in column one and bumps the first domino out
    // of its row, so left and right tableaux differ.
    let w = word("2,-1");

    let pair0 = rs_map(&w, 0);
    assert_eq!(
        pair0.left(),
        &tableau(0, &[(1, Domino::vertical(1, 1)), (2, Domino::vertical(1, 2))])
    );
    assert_eq!(
        pair0.right(),
        &tableau(0, &[(1, Domino::horizontal(1, 1)), (2, Domino::horizontal(2, 1))])
    );

    let pair1 = rs_map(&w, 1);
    assert_eq!(
        pair1.left(),
        &tableau(1, &[(1, Domino::vertical(2, 1)), (2, Domino::horizontal(1, 2))])
    );
    assert_eq!(
        pair1.right(),
        &tableau(1, &[(1, Domino::horizontal(1, 2)), (2, Domino::vertical(2, 1))])
    );
}
