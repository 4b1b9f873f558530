//! Worked example tableaux used by tests, the acceptance suite and the CLI.
//!
//! Each is listed with its top row first, as it is usually drawn.

use crate::strips::{Step, StripShape};
use crate::tableau::Tableau;

fn rows(r: &[&[u32]], bound: u32) -> Tableau {
    Tableau::from_rows(r, bound).expect("fixture is well formed")
}

/// A staircase displacement tableau of size 6 and torsion 3.
pub fn staircase_size6_torsion3() -> Tableau {
    rows(&[&[11], &[9, 10], &[7, 8, 9], &[5, 6, 7, 8], &[3, 4, 5, 6, 7], &[1, 2, 3, 4, 5, 6]], 11)
}

/// The successive tableaux produced by reflecting a Prym tableau of type
/// `(11, 4, 3)`, from the input to the final reflective tableau.
pub fn reflection_sequence() -> Vec<Tableau> {
    let top: [&[u32]; 3] = [&[9, 15, 17, 18, 21], &[7, 12, 13, 15, 19], &[5, 9, 11, 12, 18]];
    let mid = |a: &'static [u32], b: &'static [u32]| rows(&[top[0], top[1], top[2], a, b], 21);
    vec![
        mid(&[4, 8, 10, 11, 14], &[2, 5, 6, 7, 11]),
        mid(&[4, 8, 10, 11, 14], &[1, 5, 6, 7, 11]),
        mid(&[4, 8, 10, 11, 14], &[1, 3, 6, 7, 11]),
        mid(&[4, 8, 10, 11, 14], &[1, 3, 4, 7, 11]),
        mid(&[4, 8, 10, 11, 14], &[1, 3, 4, 7, 11]),
        mid(&[4, 7, 10, 11, 15], &[1, 3, 4, 7, 11]),
        mid(&[4, 7, 10, 11, 15], &[1, 3, 4, 7, 11]),
        mid(&[4, 7, 10, 11, 15], &[1, 3, 4, 7, 11]),
        rows(
            &[&[11, 15, 17, 18, 21], &[7, 11, 13, 15, 19], &[5, 9, 11, 12, 18], &[4, 7, 10, 11, 15], &[1, 3, 4, 7, 11]],
            21,
        ),
    ]
}

/// The first tableau of [`reflection_sequence`].
pub fn reflection_input() -> Tableau {
    reflection_sequence().remove(0)
}

/// A minimal tableau of size 9 and torsion 5, non-repeating on
/// [`strip_example_shape`].
pub fn strip_example() -> Tableau {
    rows(
        &[
            &[20],
            &[18, 21],
            &[15, 17, 23],
            &[11, 14, 20, 24],
            &[10, 13, 18, 21, 22],
            &[8, 12, 15, 17, 19, 20],
            &[6, 9, 11, 14, 16, 18, 21],
            &[3, 5, 7, 8, 12, 15, 17, 19],
            &[1, 2, 4, 6, 9, 11, 14, 16, 18],
        ],
        24,
    )
}

/// Strip of length 9 and width 3 with word `NNEENN`.
pub fn strip_example_shape() -> StripShape {
    use Step::*;
    StripShape::new(9, 3, vec![North, North, East, East, North, North]).expect("valid strip")
}

/// The three tableaux of one height-lowering move for type `(23, 8, 5)`:
/// the input `t`, the intermediate `u`, and the output `s`.
pub fn height_descent_example() -> [Tableau; 3] {
    let upper: [&[u32]; 4] = [&[17], &[15, 16], &[11, 14, 18], &[9, 12, 17, 19]];
    let make = |row2: &'static [u32]| {
        rows(
            &[
                upper[0],
                upper[1],
                upper[2],
                upper[3],
                &[8, 10, 15, 16, 20],
                &[5, 7, 11, 14, 18, 21],
                row2,
                &[1, 3, 4, 5, 7, 11, 14, 18],
            ],
            22,
        )
    };
    [make(&[2, 6, 9, 12, 13, 15, 16]), make(&[2, 6, 9, 12, 13, 15, 22]), make(&[2, 6, 9, 12, 17, 19, 22])]
}

/// Strip word of the input of [`height_descent_example`].
pub fn height_descent_word() -> Vec<Step> {
    use Step::*;
    vec![North, East, East, North, East]
}

/// The milestones of walking a generic staircase tableau of size 4 to the
/// standard increasing one: each entry follows one cycle or one swap.
pub fn generic_walk_milestones() -> Vec<Tableau> {
    let b = 11;
    vec![
        rows(&[&[4], &[3, 7], &[2, 6, 9], &[1, 5, 8, 10]], b),
        rows(&[&[5], &[4, 8], &[2, 7, 10], &[1, 6, 9, 11]], b),
        rows(&[&[5], &[4, 8], &[2, 7, 10], &[1, 3, 9, 11]], b),
        rows(&[&[6], &[4, 8], &[2, 7, 10], &[1, 3, 9, 11]], b),
        rows(&[&[6], &[4, 8], &[2, 5, 10], &[1, 3, 9, 11]], b),
        rows(&[&[7], &[4, 8], &[2, 5, 10], &[1, 3, 9, 11]], b),
        rows(&[&[7], &[4, 8], &[2, 5, 10], &[1, 3, 6, 11]], b),
        rows(&[&[7], &[4, 8], &[2, 5, 9], &[1, 3, 6, 11]], b),
        rows(&[&[7], &[4, 8], &[2, 5, 9], &[1, 3, 6, 10]], b),
    ]
}
