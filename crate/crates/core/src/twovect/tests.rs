use std::sync::Arc;

use num_traits::Zero;

use super::sampling::{random_commuting_cube, random_one_mor, random_quintet, random_two_mor, rng};
use super::*;

fn one_object() -> Arc<BasedCat> {
    BasedCat::ungraded(1)
}

fn scalar_mor(n: u64) -> OneMor {
    let c = one_object();
    OneMor::new(c.clone(), c, NatMat::from_fn(1, 1, |_, _| n)).unwrap()
}

#[test]
fn compose_with_identity_is_unitor_free() {
    let c = BasedCat::ungraded(2);
    let f = OneMor::new(
        c.clone(),
        c.clone(),
        NatMat::from_fn(2, 2, |r, s| (r + 2 * s) as u64),
    )
    .unwrap();
    let id = OneMor::identity(&c);
    let left = compose1(&id, &f).unwrap();
    let right = compose1(&f, &id).unwrap();
    assert_eq!(left, f);
    assert_eq!(right, f);
    // and the unitor is literally the identity two-morphism
    let a = TwoMor::identity(&f);
    let whiskered = whisker_left(&id, &a).unwrap();
    assert_eq!(whiskered.source, f);
    assert!(whiskered.same_blocks(&TwoMor::identity(&f)));
}

#[test]
fn scalar_composition_enumeration() {
    // two 1x1 categories with matrices (2) and (3): the composite is (6)
    let f = scalar_mor(2);
    let g = scalar_mor(3);
    let gf = compose1(&g, &f).unwrap();
    assert_eq!(gf.mult.get(0, 0), 6);
    let paths = enumerate_paths(&[&f, &g], 0, 0);
    assert_eq!(paths.len(), 6);
    // outer factor (of g) is the major index
    assert_eq!(paths[0].factors, vec![0, 0]);
    assert_eq!(paths[1].factors, vec![1, 0]);
    assert_eq!(paths[2].factors, vec![0, 1]);
    assert_eq!(paths[5].factors, vec![1, 2]);
}

#[test]
fn interchange_law_randomized() {
    let mut r = rng(0);
    for _ in 0..50 {
        let a = super::sampling::random_cat(&mut r, 3);
        let b = super::sampling::random_cat(&mut r, 3);
        let c = super::sampling::random_cat(&mut r, 3);
        let f0 = random_one_mor(&mut r, &a, &b, 3);
        let f1 = random_one_mor(&mut r, &a, &b, 3);
        let f2 = random_one_mor(&mut r, &a, &b, 3);
        let g0 = random_one_mor(&mut r, &b, &c, 3);
        let g1 = random_one_mor(&mut r, &b, &c, 3);
        let g2 = random_one_mor(&mut r, &b, &c, 3);
        let a1 = random_two_mor(&mut r, &f0, &f1);
        let a2 = random_two_mor(&mut r, &f1, &f2);
        let b1 = random_two_mor(&mut r, &g0, &g1);
        let b2 = random_two_mor(&mut r, &g1, &g2);
        let lhs = hcompose(&vcompose(&b2, &b1).unwrap(), &vcompose(&a2, &a1).unwrap()).unwrap();
        let rhs = vcompose(&hcompose(&b2, &a2).unwrap(), &hcompose(&b1, &a1).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn coevaluation_shape() {
    // F = (n): the unit is the n²-row coevaluation with ones at (t, t)
    let f = scalar_mor(3);
    let unit = word_unit(&f.source, &[&f]).unwrap();
    let block = unit.block(0, 0);
    assert_eq!((block.rows(), block.cols()), (9, 1));
    for t in 0..3usize {
        for s in 0..3usize {
            let expect = if t == s { ratio(1) } else { ratio(0) };
            assert_eq!(block.get(t * 3 + s, 0), &expect);
        }
    }
}

#[test]
fn triangle_identities_exhaustive_small() {
    // all multiplicity matrices with shapes ≤ 2x2 and entries ≤ 3, plus a
    // sample of 3x3 shapes; both triangle identities must hold exactly
    fn check(f: &OneMor) {
        let a = &f.source;
        let unit = word_unit(a, &[f]).unwrap();
        let counit = word_counit(a, &[f]).unwrap();
        let ft = f.transpose();
        // (ε F) ∘ (F η) = id_F
        let step1 = word_two_mor(&[
            Seg::Face { face: &unit, src: vec![], tgt: vec![f, &ft] },
            Seg::Id(vec![f]),
        ])
        .unwrap();
        let step2 = word_two_mor(&[
            Seg::Id(vec![f]),
            Seg::Face { face: &counit, src: vec![&ft, f], tgt: vec![] },
        ])
        .unwrap();
        let tri = vcompose(&step2, &step1).unwrap();
        assert!(tri.same_blocks(&TwoMor::identity(f)), "first triangle for {f:?}");
        // (Fᵀ ε) ∘ (η Fᵀ) = id_{Fᵀ}
        let step1 = word_two_mor(&[
            Seg::Id(vec![&ft]),
            Seg::Face { face: &unit, src: vec![], tgt: vec![f, &ft] },
        ])
        .unwrap();
        let step2 = word_two_mor(&[
            Seg::Face { face: &counit, src: vec![&ft, f], tgt: vec![] },
            Seg::Id(vec![&ft]),
        ])
        .unwrap();
        let tri = vcompose(&step2, &step1).unwrap();
        assert!(tri.same_blocks(&TwoMor::identity(&ft)), "second triangle for {f:?}");
    }

    for rows in 1..=2usize {
        for cols in 1..=2usize {
            let src = BasedCat::ungraded(cols);
            let tgt = BasedCat::ungraded(rows);
            let cells = rows * cols;
            for mask in 0..(4u64.pow(cells as u32)) {
                let mult = NatMat::from_fn(rows, cols, |r, c| (mask >> (2 * (r * cols + c))) & 3);
                let f = OneMor::new(src.clone(), tgt.clone(), mult).unwrap();
                check(&f);
            }
        }
    }
    let mut r = rng(7);
    for _ in 0..25 {
        let src = BasedCat::ungraded(3);
        let tgt = BasedCat::ungraded(3);
        check(&random_one_mor(&mut r, &src, &tgt, 3));
    }
}

#[test]
fn adjunction_triangle_upper_triangular_example() {
    let c = BasedCat::ungraded(2);
    let mut mult = NatMat::zero(2, 2);
    mult.set(0, 0, 1);
    mult.set(0, 1, 1);
    mult.set(1, 1, 1);
    let f = OneMor::new(c.clone(), c.clone(), mult).unwrap();
    let adj = transpose_adjunction(&f);
    assert_eq!(adj.right, f.transpose());
    // triangle through the word machinery
    let step1 = word_two_mor(&[
        Seg::Face { face: &adj.unit, src: vec![], tgt: vec![&f, &adj.right] },
        Seg::Id(vec![&f]),
    ])
    .unwrap();
    let step2 = word_two_mor(&[
        Seg::Id(vec![&f]),
        Seg::Face { face: &adj.counit, src: vec![&adj.right, &f], tgt: vec![] },
    ])
    .unwrap();
    let tri = vcompose(&step2, &step1).unwrap();
    assert!(tri.same_blocks(&TwoMor::identity(&f)));
}

#[test]
fn identity_square_mates_are_identities() {
    let c = BasedCat::ungraded(2);
    let id = OneMor::identity(&c);
    let alpha = TwoMor::identity(&id);
    let q = Quintet::from_atoms(id.clone(), id.clone(), id.clone(), id.clone(), alpha).unwrap();
    let rm = right_mate(&q).unwrap();
    assert!(rm.alpha.same_blocks(&TwoMor::identity(&id)));
    let lm = left_mate(&q).unwrap();
    assert!(lm.alpha.same_blocks(&TwoMor::identity(&id)));
    assert!(check_bc(&q, MateSide::Left).unwrap().ok);
    assert!(check_bc(&q, MateSide::Right).unwrap().ok);
}

#[test]
fn unitor_square_right_mate_is_triangle() {
    // square (id, F; F, id) with the unitor: the mate collapses by the
    // triangle identity to the identity of Fᵀ
    let a = BasedCat::ungraded(2);
    let b = BasedCat::ungraded(3);
    let mut r = rng(11);
    let f = random_one_mor(&mut r, &a, &b, 3);
    let ida = OneMor::identity(&a);
    let idb = OneMor::identity(&b);
    // g = id_A (top), h = F (right), f_side = F (left), i = id_B (bottom)
    let top = compose_word(&a, &[&ida, &f]).unwrap();
    let alpha = TwoMor::positional(&top, &compose_word(&a, &[&f, &idb]).unwrap()).unwrap();
    let q = Quintet::from_atoms(f.clone(), ida, f.clone(), idb, alpha).unwrap();
    let rm = right_mate(&q).unwrap();
    let ft = f.transpose();
    assert!(rm.alpha.same_blocks(&TwoMor::identity(&ft)));
}

#[test]
fn mate_round_trips() {
    let mut r = rng(42);
    let mut done = 0;
    while done < 50 {
        let q = match random_quintet(&mut r, 3, 3) {
            Ok(q) => q,
            Err(_) => continue,
        };
        done += 1;
        // right then left returns the original blocks
        let rm = right_mate(&q).unwrap();
        let back = left_mate(&rm).unwrap();
        assert_eq!(back.alpha.source, q.alpha.source);
        assert_eq!(back.alpha.target, q.alpha.target);
        assert!(back.alpha.same_blocks(&q.alpha), "right-then-left round trip");
        // left then right as well
        let lm = left_mate(&q).unwrap();
        let back = right_mate(&lm).unwrap();
        assert!(back.alpha.same_blocks(&q.alpha), "left-then-right round trip");
    }
}

#[test]
fn bc_left_iff_right() {
    let mut r = rng(5);
    let mut seen_true = 0;
    let mut seen_false = 0;
    for _ in 0..50 {
        let q = random_quintet(&mut r, 2, 2).unwrap();
        let l = check_bc(&q, MateSide::Left).unwrap().ok;
        let rr = check_bc(&q, MateSide::Right).unwrap().ok;
        assert_eq!(l, rr, "left and right Beck-Chevalley verdicts agree");
        if l {
            seen_true += 1;
        } else {
            seen_false += 1;
        }
    }
    // the sample should exercise both verdicts
    assert!(seen_false > 0);
    let _ = seen_true;
}

#[test]
fn bc_witness_on_non_square_block() {
    // a square whose mate has a non-square block is rejected with a witness
    let c = one_object();
    let f = scalar_mor(1);
    let g = scalar_mor(2);
    // top (2), verticals (1), bottom (3): the mate block cannot be square
    let h = scalar_mor(3);
    let alpha = TwoMor::positional(
        &compose_word(&c, &[&g, &f]).unwrap(),
        &compose_word(&c, &[&f, &h]).unwrap(),
    )
    .unwrap();
    let q = Quintet::from_atoms(f.clone(), g, f, h, alpha).unwrap();
    let out = check_bc(&q, MateSide::Right).unwrap();
    assert!(!out.ok);
    let w = out.witness.unwrap();
    assert!(w.contains("2x3") || w.contains("3x2"), "witness: {w}");
}

#[test]
fn identity_cube_commutes_and_mates() {
    let c = BasedCat::ungraded(2);
    let cube = Cube::all_identity(&c);
    assert!(check_cube_commutes(&cube).unwrap());
    let lm = cube_mate(&cube, MateDirection::Left).unwrap();
    assert!(check_cube_commutes(&lm).unwrap());
    let rm = cube_mate(&cube, MateDirection::Right).unwrap();
    assert!(check_cube_commutes(&rm).unwrap());
}

#[test]
fn commuting_cubes_stay_commuting_under_mates() {
    let mut r = rng(99);
    for _ in 0..10 {
        let cube = random_commuting_cube(&mut r, 2, 2).unwrap();
        assert!(check_cube_commutes(&cube).unwrap(), "seed cube commutes");
        let lm = cube_mate(&cube, MateDirection::Left).unwrap();
        assert!(check_cube_commutes(&lm).unwrap(), "left mate commutes");
        let rm = cube_mate(&cube, MateDirection::Right).unwrap();
        assert!(check_cube_commutes(&rm).unwrap(), "right mate commutes");
    }
}

#[test]
fn negated_face_breaks_cube() {
    let mut r = rng(3);
    loop {
        let cube = random_commuting_cube(&mut r, 2, 2).unwrap();
        // skip degenerate cubes whose face is all-zero
        if cube.xy_faces[0].blocks().iter().all(|b| {
            (0..b.rows()).all(|i| (0..b.cols()).all(|j| b.get(i, j).is_zero()))
        }) {
            continue;
        }
        let mut bad = cube.clone();
        bad.xy_faces[0] = bad.xy_faces[0].neg();
        assert!(!check_cube_commutes(&bad).unwrap());
        break;
    }
}

#[test]
fn degree_window_tracking() {
    let c = BasedCat::new(vec![
        Simple { label: "a".into(), degree: 0 },
        Simple { label: "b".into(), degree: 2 },
    ]);
    let mut mult = NatMat::zero(2, 2);
    mult.set(1, 0, 1);
    let f = OneMor::new(c.clone(), c.clone(), mult).unwrap();
    assert_eq!(f.degree_window(), Some((2, 2)));
    assert_eq!(OneMor::identity(&c).degree_window(), Some((0, 0)));
}
