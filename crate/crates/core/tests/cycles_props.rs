//! Exhaustive properties of the moving-through calculus over every image
//! tableau at small sizes: involutivity, boxing flips, shape bookkeeping,
//! order independence, extended-cycle moves, and the normal form.

use std::collections::BTreeSet;

use domino_core::{
    cycles, cycle_through, enumerate_group, extended_cycle, in_applicable, is_somewhat_special,
    move_through, move_through_pair, move_through_set, promote, rs_map, special_form, Cycle,
    CycleKind, Domino, DominoTableau, Error, Side, Square, TableauPair,
};

/// Both tableaux of every image pair for the given size and rank.
fn image_tableaux(n: usize, rank: usize) -> Vec<DominoTableau> {
    let mut out = Vec::new();
    for w in enumerate_group(n).expect("enumeration fits under the cap") {
        let (left, right) = rs_map(&w, rank).into_parts();
        out.push(left);
        out.push(right);
    }
    out
}

fn domino_cells(d: Domino) -> BTreeSet<Square> {
    d.cells().into_iter().collect()
}

fn movable(c: &Cycle) -> bool {
    c.kind != CycleKind::OpenCore
}

#[test]
fn cycles_partition_the_label_set() {
    for n in 0..=4 {
        for rank in 0..=4 {
            for t in image_tableaux(n, rank) {
                let found = cycles(&t);
                let mut seen = BTreeSet::new();
                for c in &found {
                    assert!(!c.labels.is_empty(), "cycles are nonempty");
                    for &k in &c.labels {
                        assert!(seen.insert(k), "label {k} appears in two cycles");
                    }
                    assert_eq!(c.is_open(), c.back.is_some());
                    assert_eq!(c.is_open(), c.front.is_some());
                    // Membership lookups agree with the census.
                    let through =
                        cycle_through(&t, c.min_label()).expect("census labels are present");
                    assert_eq!(&through, c);
                }
                let all: BTreeSet<u32> = t.dominos().keys().copied().collect();
                assert_eq!(seen, all, "every label lies in exactly one cycle");
            }
        }
    }
}

#[test]
fn moving_through_twice_restores_the_tableau() {
    for n in 0..=4 {
        for rank in 0..=4 {
            for t in image_tableaux(n, rank) {
                for c in cycles(&t).iter().filter(|c| movable(c)) {
                    let once = move_through(&t, c).expect("movable cycle");
                    let back = cycle_through(&once, c.min_label()).expect("label survives");
                    assert_eq!(back.labels, c.labels, "the label set is stable");
                    assert_eq!(back.kind, c.kind, "the classification is stable");
                    if c.is_open() {
                        assert_eq!(back.back, c.front, "endpoints trade places");
                        assert_eq!(back.front, c.back, "endpoints trade places");
                    }
                    let twice = move_through(&once, &back).expect("movable cycle");
                    assert_eq!(twice, t, "moving through is an involution");
                }
            }
        }
    }
}

#[test]
fn moving_through_flips_the_boxing_of_every_member_domino() {
    for n in 0..=4 {
        for rank in 0..=4 {
            for t in image_tableaux(n, rank) {
                for c in cycles(&t).iter().filter(|c| movable(c)) {
                    let moved = move_through(&t, c).expect("movable cycle");
                    for &k in &c.labels {
                        let before = t.is_boxed(&domino_cells(
                            t.domino(k).expect("member label present"),
                        ));
                        let after = moved.is_boxed(&domino_cells(
                            moved.domino(k).expect("member label survives"),
                        ));
                        assert_ne!(
                            before, after,
                            "n {n} rank {rank} label {k}: boxing must flip"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn moving_through_changes_the_shape_exactly_at_the_endpoints() {
    for n in 0..=4 {
        for rank in 0..=4 {
            for t in image_tableaux(n, rank) {
                for c in cycles(&t).iter().filter(|c| movable(c)) {
                    let moved = move_through(&t, c).expect("movable cycle");
                    let mut expected = t.occupied_squares();
                    match c.kind {
                        CycleKind::Closed => {}
                        CycleKind::OpenNonCore => {
                            let vacated = c.back.expect("open cycles have endpoints");
                            let filled = c.front.expect("open cycles have endpoints");
                            assert!(expected.remove(&vacated), "the vacated square was occupied");
                            assert!(expected.insert(filled), "the filled square was free");
                        }
                        CycleKind::OpenCore => unreachable!("filtered out"),
                    }
                    assert_eq!(moved.occupied_squares(), expected);
                }
            }
        }
    }
}

#[test]
fn core_open_cycles_move_only_as_a_family() {
    for n in 0..=4 {
        for rank in 0..=4 {
            for t in image_tableaux(n, rank) {
                let census = cycles(&t);
                let family: Vec<&Cycle> = census
                    .iter()
                    .filter(|c| c.kind == CycleKind::OpenCore)
                    .collect();
                let bumped = promote(&t).expect("every image tableau promotes");
                assert_eq!(bumped.rank(), rank + 1);
                assert!(bumped.validate().is_ok());
                assert_eq!(
                    bumped.dominos().keys().collect::<Vec<_>>(),
                    t.dominos().keys().collect::<Vec<_>>(),
                    "promotion keeps the labels"
                );
                for c in &family {
                    let lone = move_through(&t, c);
                    if family.len() == 1 {
                        // The whole family is this one cycle, so the lone
                        // move clears the core diagonal by itself.
                        assert_eq!(lone.expect("single-cycle family moves"), bumped);
                    } else {
                        assert_eq!(
                            lone.expect_err("siblings still block the diagonal"),
                            Error::CoreOpenFamily
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn simultaneous_moves_are_order_independent() {
    // Full permutation check at three letters, endpoint check at four.
    for n in 0..=3 {
        for rank in 0..=4 {
            for t in image_tableaux(n, rank) {
                let targets: Vec<Cycle> =
                    cycles(&t).into_iter().filter(movable_ref).collect();
                if targets.len() < 2 {
                    continue;
                }
                let simultaneous =
                    move_through_set(&t, &targets).expect("movable cycles move together");
                for order in permutations(&targets) {
                    let mut stepped = t.clone();
                    for c in order {
                        let live = cycle_through(&stepped, c.min_label())
                            .expect("labels survive earlier moves");
                        assert_eq!(live.labels, c.labels, "disjoint cycles do not interact");
                        stepped = move_through(&stepped, &live).expect("still movable");
                    }
                    assert_eq!(stepped, simultaneous);
                }
            }
        }
    }
    for rank in 0..=4 {
        for t in image_tableaux(4, rank) {
            let targets: Vec<Cycle> = cycles(&t).into_iter().filter(movable_ref).collect();
            if targets.len() < 2 {
                continue;
            }
            let forward = move_through_set(&t, &targets).expect("movable set");
            let mut reversed = targets.clone();
            reversed.reverse();
            let backward = move_through_set(&t, &reversed).expect("movable set");
            assert_eq!(forward, backward);
        }
    }
}

fn movable_ref(c: &Cycle) -> bool {
    movable(c)
}

fn permutations(items: &[Cycle]) -> Vec<Vec<Cycle>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

#[test]
fn extended_cycle_moves_preserve_the_common_shape_and_invert() {
    for n in 0..=4 {
        for rank in 0..=3 {
            for w in enumerate_group(n).expect("enumeration fits under the cap") {
                let pair = rs_map(&w, rank);
                for side in [Side::Left, Side::Right] {
                    for c in cycles(pair.side(side))
                        .iter()
                        .filter(|c| c.kind == CycleKind::OpenNonCore)
                    {
                        let ext = extended_cycle(&pair, c.min_label(), side)
                            .expect("extension of a non-core open cycle");
                        assert!(
                            ext.in_right.contains(&c.min_label())
                                || ext.in_left.contains(&c.min_label()),
                            "the seed label belongs to its own extension"
                        );
                        if has_core_member(&pair, &ext) {
                            continue;
                        }
                        let moved =
                            move_through_pair(&pair, &ext).expect("core-free extension moves");
                        assert_eq!(
                            moved.left().shape(),
                            moved.right().shape(),
                            "the two sides keep a common shape"
                        );
                        let back = extended_cycle(&moved, c.min_label(), side)
                            .expect("extension survives the move");
                        assert_eq!(back.in_left, ext.in_left);
                        assert_eq!(back.in_right, ext.in_right);
                        let restored =
                            move_through_pair(&moved, &back).expect("and moves back");
                        assert_eq!(restored, pair, "the extended move is an involution");
                    }
                }
            }
        }
    }
}

fn has_core_member(pair: &TableauPair, ext: &domino_core::ExtendedCyclePair) -> bool {
    ext.in_left.iter().any(|&k| {
        cycle_through(pair.left(), k).expect("extension label present").kind
            == CycleKind::OpenCore
    }) || ext.in_right.iter().any(|&k| {
        cycle_through(pair.right(), k).expect("extension label present").kind
            == CycleKind::OpenCore
    })
}

/// The pair-level interchange at the top index pivots around the extended
/// cycle of the label just past the rank; that extension never runs into a
/// core cycle, on either side, in either configuration the mechanics visit.
#[test]
fn interchange_extension_never_contains_a_core_cycle() {
    for n in 0..=4 {
        for rank in 0..=4usize {
            if rank + 2 > n {
                continue;
            }
            let k = rank + 1;
            let l = (rank + 2) as u32;
            for w in enumerate_group(n).expect("enumeration fits under the cap") {
                if !in_applicable(&w, k) {
                    continue;
                }
                let pair = rs_map(&w, rank);
                if pair.right().subtableau(l).is_sparse() {
                    continue;
                }
                let staged = match retiled_top(&pair, k as u32) {
                    Some(retiled) => retiled,
                    None => pair.clone(),
                };
                let ext = extended_cycle(&staged, l, Side::Right)
                    .expect("the dense top pair has an extension");
                assert!(
                    !has_core_member(&staged, &ext),
                    "word {w}, rank {rank}: extension touches a core cycle"
                );
            }
        }
    }
}

/// Retiles the 2x2 block held by the labels k and k+1 of the right tableau,
/// when they hold one; mirrors the staging step of the pair-level
/// interchange.
fn retiled_top(p: &TableauPair, k: u32) -> Option<TableauPair> {
    let t = p.right();
    let dk = t.domino(k)?;
    let dl = t.domino(k + 1)?;
    let a = dk.cells()[0];
    let mut dominos = t.dominos().clone();
    if dk.is_vertical() && dl == Domino::vertical(a.row, a.col + 1) {
        dominos.insert(k, Domino::horizontal(a.row, a.col));
        dominos.insert(k + 1, Domino::horizontal(a.row + 1, a.col));
    } else if dk.is_horizontal() && dl == Domino::horizontal(a.row + 1, a.col) {
        dominos.insert(k, Domino::vertical(a.row, a.col));
        dominos.insert(k + 1, Domino::vertical(a.row, a.col + 1));
    } else {
        return None;
    }
    let right = DominoTableau::from_dominos(t.rank(), dominos)
        .expect("the other tiling of a 2x2 block is standard");
    Some(TableauPair::new(p.left().clone(), right).expect("shape unchanged"))
}

#[test]
fn normal_form_is_idempotent_and_constant_on_orbits() {
    for n in 0..=4 {
        for rank in 0..=4 {
            for t in image_tableaux(n, rank) {
                let normal = special_form(&t);
                assert!(is_somewhat_special(&normal));
                assert_eq!(special_form(&normal), normal, "idempotence");
                assert_eq!(normal.dominos().len(), t.dominos().len());
                // Moving any single non-core open cycle stays in the orbit.
                for c in cycles(&t)
                    .iter()
                    .filter(|c| c.kind == CycleKind::OpenNonCore)
                {
                    let moved = move_through(&t, c).expect("movable cycle");
                    assert_eq!(
                        special_form(&moved),
                        normal,
                        "the normal form is an orbit invariant"
                    );
                }
            }
        }
    }
}
