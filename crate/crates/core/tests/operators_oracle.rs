//! The tableau-level operators must agree with the word-level ones
//! transported through the correspondence, on every element of their domain.

use domino_core::{
    applicable, apply, apply_op_tableau, enumerate_group, lambda_set, rs_map, special_form,
    Operator, Side,
};

#[test]
fn tableau_action_matches_the_word_action_everywhere_small() {
    for n in 0..=4 {
        let group = enumerate_group(n).expect("enumeration fits under the cap");
        for rank in 0..=3 {
            for op in lambda_set(n, rank) {
                for w in &group {
                    let pair = rs_map(w, rank);
                    if !applicable(op, w) {
                        let refusal = apply_op_tableau(op, &pair)
                            .expect_err("out-of-domain words are refused at the tableau level");
                        assert!(
                            matches!(refusal, domino_core::Error::NotApplicable { .. }),
                            "unexpected refusal for {op} at {w}: {refusal}"
                        );
                        continue;
                    }
                    let via_words = rs_map(&apply(op, w).expect("domain checked"), rank);
                    let via_tableaux =
                        apply_op_tableau(op, &pair).expect("tableau action covers the domain");
                    assert_eq!(
                        via_tableaux, via_words,
                        "disagreement for {op} at {w}, rank {rank}"
                    );
                }
            }
        }
    }
}

#[test]
fn tableau_action_is_an_involution_on_its_domain() {
    for n in 0..=4 {
        let group = enumerate_group(n).expect("enumeration fits under the cap");
        for rank in 0..=3 {
            for op in lambda_set(n, rank) {
                for w in group.iter().filter(|w| applicable(op, w)) {
                    let pair = rs_map(w, rank);
                    let once = apply_op_tableau(op, &pair).expect("domain checked");
                    let twice =
                        apply_op_tableau(op, &once).expect("the image stays in the domain");
                    assert_eq!(twice, pair, "{op} squared at {w}, rank {rank}");
                }
            }
        }
    }
}

#[test]
fn only_the_top_interchange_may_rearrange_the_left_tableau() {
    for n in 0..=4 {
        let group = enumerate_group(n).expect("enumeration fits under the cap");
        for rank in 0..=3 {
            for op in lambda_set(n, rank) {
                for w in group.iter().filter(|w| applicable(op, w)) {
                    let before = rs_map(w, rank);
                    let after = apply_op_tableau(op, &before).expect("domain checked");
                    if op == Operator::InSwap(rank + 1) {
                        // The top interchange may slide the left tableau
                        // around inside its orbit, but no further.
                        assert_eq!(
                            special_form(before.side(Side::Left)),
                            special_form(after.side(Side::Left)),
                            "{op} at {w}, rank {rank} must fix the normal form"
                        );
                    } else {
                        assert_eq!(
                            before.side(Side::Left),
                            after.side(Side::Left),
                            "{op} at {w}, rank {rank} must fix the left tableau"
                        );
                    }
                }
            }
        }
    }
}
