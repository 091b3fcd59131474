//! Geometric properties: corner supports of sums and products, corner roots
//! under powers, cell decompositions and ghost components cross-checked by
//! brute evaluation scans, corner-root search postconditions, and the
//! per-cell layer covering test.

mod common;

use common::*;
use rand::Rng;
use std::collections::BTreeSet;
use supertrop::geometry::{
    components_univariate, corner_locus_binomial, corner_roots_univariate, corner_support,
    find_corner_root, ghost_locus_univariate, is_corner_root, is_covered_univariate,
    is_ghost_root, GhostComponent,
};
use supertrop::poly::{ExponentMode, TropPoly};
use supertrop::scalar::{LayeredScalar, NuOrder, SemiringMode};
use supertrop::{rat, Rat};

#[test]
fn corner_roots_survive_powers() {
    for (mi, &mode) in MODES.iter().enumerate() {
        let mut r = rng(600 + mi as u64);
        for _ in 0..40 {
            let f = rand_uni_poly(&mut r, mode, 6, 5, 9, false);
            let g = rand_uni_poly(&mut r, mode, 6, 5, 9, false);
            let s = f.add(&g).unwrap();
            let base = corner_roots_univariate(&s).unwrap();
            for k in 2..=4u32 {
                assert_eq!(
                    corner_roots_univariate(&s.pow(k).unwrap()).unwrap(),
                    base,
                    "k = {k}, f+g = {s}"
                );
            }
        }
    }
}

// The corner support of f + g at a point is f's, g's, or (on a ν-tie of the
// evaluations) the union of both. Powers preserve whether the point is a
// corner root of the sum.
#[test]
fn corner_support_of_sums_splits_three_ways() {
    for (mi, &mode) in MODES.iter().enumerate() {
        let mut r = rng(650 + mi as u64);
        let mut ties = 0;
        for _ in 0..300 {
            let n = r.gen_range(1..=3);
            let f = rand_poly(&mut r, n, mode, 4, 5, false);
            let g = rand_poly(&mut r, n, mode, 4, 5, false);
            let a = rand_point(&mut r, n, -10, 10);
            let s = f.add(&g).unwrap();
            let cs = corner_support(&s, &a).unwrap();
            let fa = f.evaluate(&a).unwrap();
            let ga = g.evaluate(&a).unwrap();
            match fa.nu_compare(&ga) {
                NuOrder::Greater => assert_eq!(cs, corner_support(&f, &a).unwrap()),
                NuOrder::Less => assert_eq!(cs, corner_support(&g, &a).unwrap()),
                NuOrder::Equivalent => {
                    ties += 1;
                    let mut want: BTreeSet<Vec<Rat>> =
                        corner_support(&f, &a).unwrap().into_iter().collect();
                    want.extend(corner_support(&g, &a).unwrap());
                    assert_eq!(cs.into_iter().collect::<BTreeSet<_>>(), want);
                }
            }
            let k = r.gen_range(2..=3u32);
            let sk = f.pow(k).unwrap().add(&g.pow(k).unwrap()).unwrap();
            assert_eq!(
                corner_support(&s, &a).unwrap().len() >= 2,
                corner_support(&sk, &a).unwrap().len() >= 2,
                "k = {k}"
            );
        }
        assert!(ties > 0, "tie branch never exercised");
    }
}

// Corner roots are stable under multiplication, products of non-corners stay
// non-corners, and the deterministic search returns a genuine corner root
// lying on the tie hyperplane of two corner-support exponents.
#[test]
fn corner_roots_multiply_into_products() {
    for (mi, &mode) in MODES.iter().enumerate() {
        let mut r = rng(700 + mi as u64);
        let mut searched = 0;
        let mut singles = 0;
        for _ in 0..150 {
            let n = r.gen_range(1..=2);
            let f = rand_poly(&mut r, n, mode, 4, 6, false);
            let g = rand_poly(&mut r, n, mode, 4, 5, false);
            if f.essential_support().len() >= 2 {
                searched += 1;
                let root = find_corner_root(&f).unwrap();
                let pt: Vec<LayeredScalar> =
                    root.iter().cloned().map(LayeredScalar::tangible).collect();
                assert!(is_corner_root(&f, &pt).unwrap(), "f = {f}, root = {root:?}");
                assert!(
                    is_corner_root(&f.mul(&g).unwrap(), &pt).unwrap(),
                    "f = {f}, g = {g}"
                );
                let cs = corner_support(&f, &pt).unwrap();
                let pair = TropPoly::new(
                    n,
                    f.exponent_mode(),
                    mode,
                    [
                        (cs[0].clone(), f.coeff(&cs[0]).unwrap().clone()),
                        (cs[1].clone(), f.coeff(&cs[1]).unwrap().clone()),
                    ],
                )
                .unwrap();
                assert!(corner_locus_binomial(&pair).unwrap().contains(&root));
            }
            let b = rand_point(&mut r, n, -10, 10);
            if corner_support(&f, &b).unwrap().len() == 1
                && corner_support(&g, &b).unwrap().len() == 1
            {
                singles += 1;
                assert_eq!(corner_support(&f.mul(&g).unwrap(), &b).unwrap().len(), 1);
            }
        }
        assert!(searched >= 50, "search branch starved: {searched}");
        assert!(singles >= 50, "single-support branch starved: {singles}");
    }
}

fn in_components(comps: &[GhostComponent], x: &Rat) -> bool {
    comps.iter().any(|c| match c {
        GhostComponent::Point(a) => x == a,
        GhostComponent::Interval(a, b) => a <= x && x <= b,
        GhostComponent::RayLeft(a) => x <= a,
        GhostComponent::RayRight(a) => x >= a,
        GhostComponent::Line => true,
    })
}

#[test]
fn cells_and_ghost_components_agree_with_evaluation_scans() {
    for (mi, &mode) in [SemiringMode::Supertropical, SemiringMode::Layered]
        .iter()
        .enumerate()
    {
        let mut r = rng(750 + mi as u64);
        for _ in 0..120 {
            let f = rand_uni_poly(&mut r, mode, 6, 6, 9, false);
            let desc = components_univariate(&f).unwrap();
            assert_eq!(desc.breakpoints, corner_roots_univariate(&f).unwrap());
            assert_eq!(desc.cells.len(), desc.breakpoints.len() + 1);
            for (i, cell) in desc.cells.iter().enumerate() {
                assert_eq!(
                    cell.lo,
                    if i == 0 {
                        None
                    } else {
                        Some(desc.breakpoints[i - 1].clone())
                    }
                );
                assert_eq!(cell.hi, desc.breakpoints.get(i).cloned());
                let x = cell.interior_point();
                assert_eq!(
                    corner_support(&f, &[LayeredScalar::tangible(x)]).unwrap(),
                    vec![vec![cell.dominant.clone()]],
                    "cell {i} of {f}"
                );
            }

            let comps = ghost_locus_univariate(&f).unwrap();
            let mut xs: Vec<Rat> = desc.breakpoints.clone();
            for w in desc.breakpoints.windows(2) {
                xs.push((&w[0] + &w[1]) / rat(2));
            }
            if let (Some(first), Some(last)) = (desc.breakpoints.first(), desc.breakpoints.last())
            {
                xs.push(first - rat(1));
                xs.push(last + rat(1));
            }
            for _ in 0..25 {
                xs.push(rand_rat(&mut r, -30, 30));
            }
            for x in xs {
                assert_eq!(
                    is_ghost_root(&f, &[LayeredScalar::tangible(x.clone())]).unwrap(),
                    in_components(&comps, &x),
                    "f = {f}, x = {x}"
                );
            }
        }
    }

    // Pure max-plus has a single layer, so nothing is ever a ghost root.
    let mut r = rng(770);
    for _ in 0..40 {
        let f = rand_uni_poly(&mut r, SemiringMode::MaxPlus, 6, 6, 9, false);
        assert!(ghost_locus_univariate(&f).unwrap().is_empty());
    }
}

#[test]
fn quadratic_with_ghost_middle_has_interval_ghost_locus() {
    let f = TropPoly::univariate(
        ExponentMode::Polynomial,
        SemiringMode::Supertropical,
        [
            (rat(2), LayeredScalar::tangible(rat(0))),
            (rat(1), LayeredScalar::ghost(rat(5))),
            (rat(0), LayeredScalar::tangible(rat(7))),
        ],
    )
    .unwrap();
    assert_eq!(
        ghost_locus_univariate(&f).unwrap(),
        vec![GhostComponent::Interval(rat(2), rat(5))]
    );
}

// Anything written as p1*g1 + p2*g2 is covered by {g1, g2}: on each cell one
// product is the whole function, and its g factor can only lower the layer.
#[test]
fn ideal_combinations_are_covered_by_their_generators() {
    for (mi, &mode) in [SemiringMode::Supertropical, SemiringMode::Layered]
        .iter()
        .enumerate()
    {
        let mut r = rng(800 + mi as u64);
        for _ in 0..60 {
            let g1 = rand_uni_poly(&mut r, mode, 4, 4, 8, false);
            let g2 = rand_uni_poly(&mut r, mode, 4, 4, 8, false);
            let p1 = rand_uni_poly(&mut r, mode, 3, 3, 8, false);
            let p2 = rand_uni_poly(&mut r, mode, 3, 3, 8, false);
            let f = p1.mul(&g1).unwrap().add(&p2.mul(&g2).unwrap()).unwrap();
            let report = is_covered_univariate(&f, &[g1.clone(), g2.clone()]).unwrap();
            assert!(report.covered, "f = {f}, g1 = {g1}, g2 = {g2}");
            assert!(report.cells.iter().all(|c| c.covering_gen.is_some()));
        }
    }
}

#[test]
fn an_all_ghost_generator_covers_nothing_tangible() {
    let f = TropPoly::univariate(
        ExponentMode::Polynomial,
        SemiringMode::Supertropical,
        [
            (rat(1), LayeredScalar::tangible(rat(0))),
            (rat(0), LayeredScalar::tangible(rat(0))),
        ],
    )
    .unwrap();
    let g = TropPoly::univariate(
        ExponentMode::Polynomial,
        SemiringMode::Supertropical,
        [
            (rat(1), LayeredScalar::ghost(rat(0))),
            (rat(0), LayeredScalar::ghost(rat(1))),
        ],
    )
    .unwrap();
    let report = is_covered_univariate(&f, &[g]).unwrap();
    assert!(!report.covered);
    assert!(report
        .cells
        .iter()
        .all(|c| c.covering_gen.is_none() && !c.failures.is_empty()));
}
