//! Seeded generators shared by the integration suites. Everything is
//! ChaCha-seeded so a failing case can be replayed from its loop index.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use supertrop::poly::{ExponentMode, TropPoly};
use supertrop::scalar::{Layer, LayeredScalar, SemiringMode};
use supertrop::{rat, Rat};

pub const MODES: [SemiringMode; 3] = [
    SemiringMode::MaxPlus,
    SemiringMode::Supertropical,
    SemiringMode::Layered,
];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with numerator in `[lo, hi]` and denominator in `[1, 4]`.
pub fn rand_rat(r: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rat {
    let numer: i64 = r.gen_range(lo..=hi);
    let denom: i64 = r.gen_range(1..=4);
    Rat::new(numer.into(), denom.into())
}

pub fn rand_int_rat(r: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rat {
    rat(r.gen_range(lo..=hi))
}

/// A layer valid in the mode: always 1 in max-plus, 1 or ∞ supertropically,
/// and a rational ≥ 1 (or ∞) in the layered mode.
pub fn rand_layer(r: &mut ChaCha8Rng, mode: SemiringMode) -> Layer {
    match mode {
        SemiringMode::MaxPlus => Layer::one(),
        SemiringMode::Supertropical => {
            if r.gen_bool(0.5) {
                Layer::one()
            } else {
                Layer::Infinite
            }
        }
        SemiringMode::Layered => match r.gen_range(0u8..4) {
            0 => Layer::one(),
            1 => Layer::Infinite,
            2 => Layer::finite(rat(r.gen_range(2..=5))),
            _ => Layer::finite(Rat::new(r.gen_range(3..=9).into(), 2.into())),
        },
    }
}

pub fn rand_scalar(r: &mut ChaCha8Rng, mode: SemiringMode) -> LayeredScalar {
    let value = rand_rat(r, -20, 20);
    let layer = rand_layer(r, mode);
    LayeredScalar::new(value, layer, mode).expect("generated layer is valid")
}

/// A scalar that is `Bottom` roughly one time in eight.
pub fn rand_scalar_or_bottom(r: &mut ChaCha8Rng, mode: SemiringMode) -> LayeredScalar {
    if r.gen_range(0u8..8) == 0 {
        LayeredScalar::Bottom
    } else {
        rand_scalar(r, mode)
    }
}

pub fn rand_tangible(r: &mut ChaCha8Rng, lo: i64, hi: i64) -> LayeredScalar {
    LayeredScalar::tangible(rand_rat(r, lo, hi))
}

/// A tangible point with integer-bounded rational coordinates.
pub fn rand_point(r: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<LayeredScalar> {
    (0..n).map(|_| rand_tangible(r, lo, hi)).collect()
}

pub fn tangible_point(values: &[Rat]) -> Vec<LayeredScalar> {
    values
        .iter()
        .map(|v| LayeredScalar::tangible(v.clone()))
        .collect()
}

/// A univariate polynomial with 1 to `max_terms` monomials on integer
/// exponents `0..=max_deg` and coefficient values in `[-coeff, coeff]`.
/// Layers are mode-valid; pass `tangible_only` to keep every layer 1.
pub fn rand_uni_poly(
    r: &mut ChaCha8Rng,
    mode: SemiringMode,
    max_deg: i64,
    max_terms: usize,
    coeff: i64,
    tangible_only: bool,
) -> TropPoly {
    let terms = r.gen_range(1..=max_terms);
    let pairs: Vec<(Rat, LayeredScalar)> = (0..terms)
        .map(|_| {
            let e = rat(r.gen_range(0..=max_deg));
            let c = if tangible_only {
                rand_tangible(r, -coeff, coeff)
            } else {
                rand_scalar(r, mode)
            };
            (e, c)
        })
        .collect();
    TropPoly::univariate(ExponentMode::Polynomial, mode, pairs).expect("nonempty")
}

/// An `n`-variate polynomial on integer exponents in `[0, max_deg]^n`.
pub fn rand_poly(
    r: &mut ChaCha8Rng,
    n: usize,
    mode: SemiringMode,
    max_deg: i64,
    max_terms: usize,
    tangible_only: bool,
) -> TropPoly {
    let terms = r.gen_range(1..=max_terms);
    let pairs: Vec<(Vec<Rat>, LayeredScalar)> = (0..terms)
        .map(|_| {
            let e: Vec<Rat> = (0..n).map(|_| rat(r.gen_range(0..=max_deg))).collect();
            let c = if tangible_only {
                rand_tangible(r, -10, 10)
            } else {
                rand_scalar(r, mode)
            };
            (e, c)
        })
        .collect();
    TropPoly::new(n, ExponentMode::Polynomial, mode, pairs).expect("nonempty")
}

/// The same polynomial with every coefficient's layer rerolled (values
/// kept), giving a ν-equivalent polynomial.
pub fn reroll_layers(r: &mut ChaCha8Rng, f: &TropPoly) -> TropPoly {
    TropPoly::new(
        f.vars(),
        f.exponent_mode(),
        f.mode(),
        f.terms().map(|(e, c)| {
            let v = c.value().expect("non-Bottom").clone();
            let c2 = LayeredScalar::new(v, rand_layer(r, f.mode()), f.mode()).expect("valid");
            (e.clone(), c2)
        }),
    )
    .expect("same support")
}

use std::collections::BTreeSet;

/// A Laurent polynomial with integer exponents and coefficient values in
/// `[-span, span]`, for oracle comparisons on bounded integer data.
pub fn rand_grid_poly(
    r: &mut ChaCha8Rng,
    n: usize,
    mode: SemiringMode,
    span: i64,
    max_terms: usize,
) -> TropPoly {
    let terms = r.gen_range(1..=max_terms);
    let pairs: Vec<(Vec<Rat>, LayeredScalar)> = (0..terms)
        .map(|_| {
            let e: Vec<Rat> = (0..n).map(|_| rat(r.gen_range(-span..=span))).collect();
            let v = rat(r.gen_range(-span..=span));
            let c = LayeredScalar::new(v, rand_layer(r, mode), mode).expect("valid");
            (e, c)
        })
        .collect();
    TropPoly::new(n, ExponentMode::Laurent, mode, pairs).expect("nonempty")
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).fold(Rat::zero(), |acc, t| acc + t)
}

use num_traits::Zero;

/// Essential support by brute force: every monomial's affine score is
/// evaluated on a point set that meets every open cell of the pairwise
/// tie-line arrangement, and unique strict maxima are recorded. Inside an
/// open cell no two scores ever tie, so the strict order of the monomials is
/// constant there; a monomial wins somewhere iff it wins at one of these
/// samples. The decision is plain evaluation, nothing is solved.
pub fn oracle_essential_support(f: &TropPoly) -> Vec<Vec<Rat>> {
    let exps = f.supp();
    if exps.len() == 1 {
        return exps;
    }
    let vals: Vec<Rat> = exps
        .iter()
        .map(|e| f.coeff(e).expect("own support").value().expect("non-Bottom").clone())
        .collect();
    let points = match f.vars() {
        1 => line_samples(&exps, &vals),
        2 => plane_samples(&exps, &vals),
        n => panic!("oracle handles one or two variables, got {n}"),
    };
    let mut wins: BTreeSet<Vec<Rat>> = BTreeSet::new();
    for p in &points {
        if wins.len() == exps.len() {
            break;
        }
        let scores: Vec<Rat> = exps.iter().zip(&vals).map(|(e, v)| v + dot(e, p)).collect();
        let max = scores.iter().max().expect("nonempty").clone();
        let mut top = scores.iter().enumerate().filter(|(_, s)| **s == max);
        if let (Some((i, _)), None) = (top.next(), top.next()) {
            wins.insert(exps[i].clone());
        }
    }
    wins.into_iter().collect()
}

/// One value strictly inside every open interval a finite cut set carves out
/// of the line: midpoints of consecutive cuts plus a point beyond each end.
fn refine_cuts(cuts: &BTreeSet<Rat>) -> Vec<Rat> {
    let cuts: Vec<Rat> = cuts.iter().cloned().collect();
    if cuts.is_empty() {
        return vec![Rat::zero()];
    }
    let mut out = vec![&cuts[0] - rat(1)];
    for w in cuts.windows(2) {
        out.push((&w[0] + &w[1]) / rat(2));
    }
    out.push(cuts.last().expect("nonempty") + rat(1));
    out
}

fn line_samples(exps: &[Vec<Rat>], vals: &[Rat]) -> Vec<Vec<Rat>> {
    let mut ties: BTreeSet<Rat> = BTreeSet::new();
    for i in 0..exps.len() {
        for j in (i + 1)..exps.len() {
            let de = &exps[i][0] - &exps[j][0];
            if !de.is_zero() {
                ties.insert((&vals[j] - &vals[i]) / de);
            }
        }
    }
    refine_cuts(&ties).into_iter().map(|x| vec![x]).collect()
}

/// Bivariate samples by slicing. The critical x values are every pairwise
/// crossing of tie lines plus every vertical tie line; each open cell
/// projects to an open x-interval whose finite endpoints are critical (they
/// come from a vertex or a vertical edge of the cell's closure). So a slice
/// between consecutive critical values, or beyond the extremes, passes
/// through every cell, and refining that slice in y against the non-vertical
/// lines lands a sample inside.
fn plane_samples(exps: &[Vec<Rat>], vals: &[Rat]) -> Vec<Vec<Rat>> {
    // Tie lines <d, x> = c for every pair with distinct exponents.
    let mut lines: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for i in 0..exps.len() {
        for j in (i + 1)..exps.len() {
            let d: Vec<Rat> = exps[i].iter().zip(&exps[j]).map(|(a, b)| a - b).collect();
            if d.iter().any(|x| !x.is_zero()) {
                lines.push((d, &vals[j] - &vals[i]));
            }
        }
    }
    let mut xs: BTreeSet<Rat> = BTreeSet::new();
    for (d, c) in &lines {
        if d[1].is_zero() {
            xs.insert(c / &d[0]);
        }
    }
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            let (d1, c1) = &lines[i];
            let (d2, c2) = &lines[j];
            let det = &d1[0] * &d2[1] - &d1[1] * &d2[0];
            if !det.is_zero() {
                xs.insert((c1 * &d2[1] - c2 * &d1[1]) / det);
            }
        }
    }
    let mut out: Vec<Vec<Rat>> = Vec::new();
    for x0 in refine_cuts(&xs) {
        let mut ys: BTreeSet<Rat> = BTreeSet::new();
        for (d, c) in &lines {
            if !d[1].is_zero() {
                ys.insert((c - &d[0] * &x0) / &d[1]);
            }
        }
        for y0 in refine_cuts(&ys) {
            out.push(vec![x0.clone(), y0]);
        }
    }
    out
}
