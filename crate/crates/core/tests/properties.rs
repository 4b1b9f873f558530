use std::sync::OnceLock;

use proptest::prelude::*;

use prym_core::complex::{cycle_out_steps, is_adjacent, swap_in_for, verify_path, walk_to_base};
use prym_core::counting::{count_even_determinant, count_lattice_paths};
use prym_core::dimension::{enumerate_staircase_prym, expected_codim};
use prym_core::json::{tableau_from_json, tableau_to_json};
use prym_core::reflection::{extend_to_reflective, reflectify, restrict_to_staircase};
use prym_core::strips::{
    dominating_non_repeating, enumerate_strip_tableaux, is_non_repeating, to_strip_tableau, StripTableau,
};
use prym_core::tableau::{codimension, dominates, is_displacement, is_prym, is_reflective, is_tableau, reflect_box};
use prym_core::{LatticeBox, PrymParams, Tableau};

const TYPES: &[(u32, u32, u32)] =
    &[(6, 2, 0), (5, 3, 2), (6, 3, 2), (7, 3, 4), (8, 3, 4), (7, 3, 3), (8, 3, 3), (9, 4, 3), (10, 4, 3)];

fn strip_tableaux() -> &'static Vec<(PrymParams, Vec<StripTableau>)> {
    static CELLS: OnceLock<Vec<(PrymParams, Vec<StripTableau>)>> = OnceLock::new();
    CELLS.get_or_init(|| {
        TYPES
            .iter()
            .map(|&(g, r, k)| {
                let p = PrymParams::new(g, r, k).unwrap();
                (p, enumerate_strip_tableaux(&p, None).unwrap())
            })
            .collect()
    })
}

fn staircases() -> &'static Vec<(PrymParams, Vec<Tableau>)> {
    static ALL: OnceLock<Vec<(PrymParams, Vec<Tableau>)>> = OnceLock::new();
    ALL.get_or_init(|| {
        [(5, 2, 2), (5, 2, 3), (6, 2, 0), (6, 3, 4), (7, 3, 3), (6, 3, 2)]
            .iter()
            .map(|&(g, r, k)| {
                let p = PrymParams::new(g, r, k).unwrap();
                (p, enumerate_staircase_prym(&p, false).unwrap())
            })
            .collect()
    })
}

fn a_cell() -> impl Strategy<Value = (PrymParams, Tableau)> {
    (0..TYPES.len(), any::<prop::sample::Index>()).prop_map(|(i, idx)| {
        let (p, cells) = &strip_tableaux()[i];
        (*p, cells[idx.index(cells.len())].extend())
    })
}

fn a_staircase() -> impl Strategy<Value = (PrymParams, Tableau)> {
    (0..6usize, any::<prop::sample::Index>()).prop_map(|(i, idx)| {
        let (p, all) = &staircases()[i];
        (*p, all[idx.index(all.len())].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn non_repeating_extensions_are_displacement_tableaux((p, t) in a_cell()) {
        prop_assert!(is_tableau(&t));
        if p.k >= 2 {
            prop_assert!(is_displacement(&t, p.k).unwrap());
        }
        prop_assert_eq!(codimension(&t, &p), p.codim());
        let st = to_strip_tableau(&t, &p).unwrap();
        prop_assert!(is_non_repeating(&t, st.strip(), &p).unwrap());
        prop_assert_eq!(st.extend(), t);
    }

    #[test]
    fn swaps_and_cycles_keep_tableaux((p, t) in a_cell(), pick in any::<prop::sample::Index>()) {
        let free: Vec<u32> = (1..p.g).filter(|a| !t.contains_symbol(*a)).collect();
        let present: Vec<u32> = t.symbols().into_iter().collect();
        let a = free[pick.index(free.len())];
        let b = present[pick.index(present.len())];
        let steps = cycle_out_steps(&t, b, a).unwrap();
        let mut chain = vec![t.clone()];
        chain.extend(steps);
        prop_assert!(chain.iter().all(is_tableau));
        prop_assert!(!chain.last().unwrap().contains_symbol(b));
        prop_assert!(verify_path(&chain, &p).unwrap());
        if let Ok(s) = swap_in_for(&t, a, b) {
            prop_assert!(is_tableau(&s));
            prop_assert!(is_adjacent(&t, &s, &p).unwrap());
            prop_assert!(is_adjacent(&s, &t, &p).unwrap());
        }
    }

    #[test]
    fn reflection_is_an_involution(r in 0u32..8, x in 1u32..9, y in 1u32..9) {
        prop_assume!(x <= r + 1 && y <= r + 1);
        let b = LatticeBox::new(x, y);
        let c = reflect_box(b, r).unwrap();
        prop_assert_eq!(reflect_box(c, r).unwrap(), b);
        prop_assert_eq!(b.anti_diagonal() + c.anti_diagonal(), 2 * r + 2);
    }

    #[test]
    fn reflective_extension_round_trips((p, t) in a_staircase()) {
        let square = extend_to_reflective(&t, &p).unwrap();
        prop_assert!(is_reflective(&square, &p).unwrap());
        prop_assert!(is_prym(&square, &p).unwrap());
        prop_assert_eq!(restrict_to_staircase(&square, &p).unwrap(), t.clone());
        let again = reflectify(&square, &p).unwrap();
        prop_assert!(dominates(again.result(), &square, &p).unwrap());
    }

    #[test]
    fn dominating_tableaux_have_expected_codimension((p, t) in a_staircase()) {
        let (strip, s) = dominating_non_repeating(&t, &p).unwrap();
        prop_assert!(is_non_repeating(&s, &strip, &p).unwrap());
        prop_assert!(dominates(&s, &t, &p).unwrap());
        prop_assert_eq!(codimension(&s, &p), p.codim());
    }

    #[test]
    fn walks_reach_the_base((p, t) in a_cell()) {
        let walk = walk_to_base(&t, &p).unwrap();
        prop_assert!(verify_path(&walk.tableaux, &p).unwrap());
        let base = prym_core::dimension::standard_base(&p).unwrap();
        prop_assert_eq!(walk.tableaux.last().unwrap(), &base);
    }

    #[test]
    fn json_round_trips((_, t) in a_cell()) {
        let text = tableau_to_json(&t);
        prop_assert_eq!(tableau_from_json(&text).unwrap(), t);
    }

    #[test]
    fn determinant_equals_lattice_paths(r in 2u32..8, half in 1u32..7) {
        let k = 2 * half;
        prop_assume!(k + 2 <= 2 * r);
        prop_assert_eq!(count_even_determinant(r, k).unwrap(), count_lattice_paths(r, k).unwrap());
    }

    #[test]
    fn codimension_is_monotone_in_torsion(r in 1u32..12, k in 2u32..30) {
        prop_assert!(expected_codim(r, k) <= expected_codim(r, k + 1));
        prop_assert!(expected_codim(r, k) <= expected_codim(r, 0));
    }
}
