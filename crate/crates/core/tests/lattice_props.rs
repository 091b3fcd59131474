//! Lattice reduction of tangibly spanned binomials: echelon shape, span
//! preservation, membership against an independent rational solver, the
//! exchange combination, half-ghost pruning, and binomial factorization
//! round trips.

mod common;

use common::*;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use supertrop::compare::compare_fn;
use supertrop::lattice::{
    combine, factor_binomial, half_ghost_reduce, is_generated, normalize, reduce, GenStatus,
    GeneratorSet, NormalBinomial,
};
use supertrop::parse::parse_poly;
use supertrop::poly::{ExponentMode, TropPoly};
use supertrop::scalar::{LayeredScalar, NuOrder, SemiringMode};
use supertrop::{rat, Rat};

fn rand_exponent(r: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
    loop {
        let e: Vec<Rat> = (0..n).map(|_| rat(r.gen_range(-4..=4))).collect();
        if e.iter().any(|x| !x.is_zero()) {
            return e;
        }
    }
}

fn rand_binomial(r: &mut ChaCha8Rng, n: usize, mode: SemiringMode) -> NormalBinomial {
    NormalBinomial::new(rand_exponent(r, n), rand_tangible(r, -9, 9), mode).unwrap()
}

/// Solves Σ mᵢ·colsᵢ = target over the rationals by plain Gauss-Jordan
/// elimination, free variables pinned to zero. The callers pass echelon
/// generator exponents, which are linearly independent, so any solution is
/// the unique one.
fn solve_rational(cols: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let n = target.len();
    let g = cols.len();
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..g {
        let Some(pr) = (row..n).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let p = m[row][col].clone();
        for x in m[row].iter_mut() {
            *x = &*x / &p;
        }
        for i in 0..n {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..=g {
                    let s = &m[row][j] * &f;
                    m[i][j] -= s;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == n {
            break;
        }
    }
    let mut sol = vec![Rat::zero(); g];
    for &(rr, cc) in &pivots {
        sol[cc] = m[rr][g].clone();
    }
    for i in 0..n {
        let lhs: Rat = (0..g)
            .map(|j| &cols[j][i] * &sol[j])
            .fold(Rat::zero(), |a, b| a + b);
        if lhs != target[i] {
            return None;
        }
    }
    Some(sol)
}

/// Independent membership decision: exponent solvability by the rational
/// solver plus the constant acceptance rule.
fn membership_oracle(b: &NormalBinomial, gens: &GeneratorSet) -> bool {
    if gens.status == GenStatus::Improper {
        return true;
    }
    let cols: Vec<Vec<Rat>> = gens.generators.iter().map(|g| g.exponent.clone()).collect();
    let Some(sol) = solve_rational(&cols, &b.exponent) else {
        return false;
    };
    if sol.iter().any(|m| !m.is_integer()) {
        return false;
    }
    let mut combo = LayeredScalar::unit();
    for (g, m) in gens.generators.iter().zip(&sol) {
        combo = combo.mul(&g.constant.pow(m, b.mode()).unwrap(), b.mode());
    }
    match b.constant.nu_compare(&combo) {
        NuOrder::Equivalent => true,
        NuOrder::Greater => b.constant.is_ghostly(),
        NuOrder::Less => false,
    }
}

#[test]
fn reduce_emits_echelon_generators_spanning_the_inputs() {
    for (mi, &mode) in MODES.iter().enumerate() {
        let mut r = rng(900 + mi as u64);
        for _ in 0..70 {
            let n = r.gen_range(1..=4);
            let k = r.gen_range(1..=10);
            let bins: Vec<NormalBinomial> =
                (0..k).map(|_| rand_binomial(&mut r, n, mode)).collect();
            let gens = reduce(bins.clone(), mode);
            assert!(gens.generators.len() <= n);
            let mut last_pivot = None;
            for g in &gens.generators {
                let p = g.pivot();
                assert!(g.exponent[p].is_positive(), "pivot not positive: {g}");
                if let Some(lp) = last_pivot {
                    assert!(p > lp, "pivot columns not strictly increasing");
                }
                last_pivot = Some(p);
            }
            for b in &bins {
                assert!(is_generated(b, &gens), "input {b} lost by reduction");
            }

            // A small integer combination of the generators must come back in.
            if gens.status != GenStatus::Improper && !gens.generators.is_empty() {
                let ms: Vec<i64> = gens
                    .generators
                    .iter()
                    .map(|_| r.gen_range(-3..=3))
                    .collect();
                let mut e = vec![Rat::zero(); n];
                let mut c = LayeredScalar::unit();
                for (g, &m) in gens.generators.iter().zip(&ms) {
                    for (t, ge) in e.iter_mut().zip(&g.exponent) {
                        *t += ge * rat(m);
                    }
                    c = c.mul(&g.constant.pow(&rat(m), mode).unwrap(), mode);
                }
                if e.iter().any(|x| !x.is_zero()) {
                    let target = NormalBinomial::new(e, c, mode).unwrap();
                    assert!(is_generated(&target, &gens));
                }
            }

            // Random probes agree with the independent solver.
            for _ in 0..5 {
                let probe = rand_binomial(&mut r, n, mode);
                assert_eq!(
                    is_generated(&probe, &gens),
                    membership_oracle(&probe, &gens),
                    "probe {probe}"
                );
            }
        }
    }
}

#[test]
fn same_slope_different_constants_generate_everything() {
    let mode = SemiringMode::Supertropical;
    let f = parse_poly("x + 1", Some(1), ExponentMode::Laurent, mode).unwrap();
    let g = parse_poly("x + 2", Some(1), ExponentMode::Laurent, mode).unwrap();
    let gens = half_ghost_reduce(&[f, g]).unwrap();
    assert_eq!(gens.status, GenStatus::Improper);
    let mut r = rng(910);
    for _ in 0..20 {
        let probe = rand_binomial(&mut r, 1, mode);
        assert!(is_generated(&probe, &gens));
    }
}

#[test]
fn combine_is_antisymmetric_and_stays_in_the_span() {
    for (mi, &mode) in MODES.iter().enumerate() {
        let mut r = rng(920 + mi as u64);
        for _ in 0..80 {
            let n = r.gen_range(1..=4);
            let b1 = rand_binomial(&mut r, n, mode);
            let b2 = rand_binomial(&mut r, n, mode);
            if b1.exponent == b2.exponent {
                assert!(combine(&b1, &b2).is_err());
                continue;
            }
            let c12 = combine(&b1, &b2).unwrap();
            let c21 = combine(&b2, &b1).unwrap();
            let negated: Vec<Rat> = c21.exponent.iter().map(|e| -e.clone()).collect();
            assert_eq!(c12.exponent, negated);
            assert_eq!(c12.constant.mul(&c21.constant, mode), LayeredScalar::unit());
            assert!(is_generated(&c12, &reduce(vec![b1, b2], mode)));
        }
    }
}

#[test]
fn half_ghost_reduction_prunes_exactly_the_spanned_ghosts() {
    for (mi, &mode) in [SemiringMode::Supertropical, SemiringMode::Layered]
        .iter()
        .enumerate()
    {
        let mut r = rng(940 + mi as u64);
        for _ in 0..80 {
            let n = r.gen_range(1..=3);
            let mut bins: Vec<TropPoly> = Vec::new();
            let mut half_inputs: Vec<NormalBinomial> = Vec::new();
            let k = r.gen_range(2..=8);
            for _ in 0..k {
                let ea = rand_exponent(&mut r, n);
                let eb = loop {
                    let e: Vec<Rat> = (0..n).map(|_| rat(r.gen_range(-3..=3))).collect();
                    if e != ea {
                        break e;
                    }
                };
                let ca = rand_tangible(&mut r, -9, 9);
                let half = r.gen_range(0u8..3) == 0;
                let cb = if half {
                    LayeredScalar::ghost(rand_rat(&mut r, -9, 9))
                } else {
                    rand_tangible(&mut r, -9, 9)
                };
                if half {
                    // Orient tangible-minus-ghost by hand to mirror later;
                    // ea carries the tangible coefficient, eb the ghost.
                    let exponent: Vec<Rat> =
                        ea.iter().zip(&eb).map(|(a, b)| a - b).collect();
                    let constant = cb.mul(&ca.inverse().unwrap(), mode);
                    half_inputs.push(NormalBinomial::new(exponent, constant, mode).unwrap());
                }
                bins.push(
                    TropPoly::new(
                        n,
                        ExponentMode::Laurent,
                        mode,
                        [(ea.clone(), ca.clone()), (eb.clone(), cb.clone())],
                    )
                    .unwrap(),
                );
            }
            let gens = half_ghost_reduce(&bins).unwrap();
            if gens.status == GenStatus::Improper {
                continue;
            }
            let (tan, ghosts): (Vec<_>, Vec<_>) = gens
                .generators
                .iter()
                .cloned()
                .partition(|g| g.constant.is_tangible());
            let tangible_set = GeneratorSet {
                generators: tan,
                status: GenStatus::Proper,
            };

            // Tangible part is echelon and spans every fully tangible input.
            assert!(tangible_set.generators.len() <= n);
            let mut last_pivot = None;
            for g in &tangible_set.generators {
                let p = g.pivot();
                assert!(g.exponent[p].is_positive());
                if let Some(lp) = last_pivot {
                    assert!(p > lp);
                }
                last_pivot = Some(p);
            }
            for f in &bins {
                if f.terms().all(|(_, c)| c.is_tangible()) {
                    let nb = normalize(f).unwrap();
                    assert!(is_generated(&nb, &tangible_set), "lost input {f}");
                }
            }

            // Ghost survivors: pairwise distinct exponents, none spanned by
            // the tangible lattice at or below their own constant.
            for (i, a) in ghosts.iter().enumerate() {
                assert!(a.constant.is_ghostly());
                for b in ghosts.iter().skip(i + 1) {
                    assert_ne!(a.exponent, b.exponent, "duplicate ghost exponent kept");
                }
                assert!(
                    !is_generated(a, &tangible_set),
                    "kept ghost {a} is already tangibly spanned"
                );
            }

            // Every half-ghost input is either kept (up to a ν-smaller
            // constant on the same exponent) or provably spanned.
            for h in &half_inputs {
                let kept = ghosts.iter().any(|g| {
                    g.exponent == h.exponent
                        && g.constant.nu_compare(&h.constant) != NuOrder::Greater
                });
                assert!(
                    kept || is_generated(h, &tangible_set),
                    "half-ghost {h} neither kept nor spanned"
                );
            }
        }
    }
}

#[test]
fn factoring_a_binomial_reproduces_it_as_a_function() {
    for (mi, &mode) in [SemiringMode::Supertropical, SemiringMode::Layered]
        .iter()
        .enumerate()
    {
        let mut r = rng(960 + mi as u64);
        let mut nontrivial = 0;
        for _ in 0..120 {
            let n = r.gen_range(1..=3);
            // Build h · (λ^e + γ)^m by hand as the binomial
            // c·λ^{s+m·e} + c·γ^m·λ^{s}.
            let e = rand_exponent(&mut r, n);
            let m = r.gen_range(1..=3u32);
            let s: Vec<Rat> = (0..n).map(|_| rat(r.gen_range(-3..=3))).collect();
            let c = rand_tangible(&mut r, -6, 6);
            let gamma = rand_tangible(&mut r, -6, 6);
            let top: Vec<Rat> = s.iter().zip(&e).map(|(a, b)| a + b * rat(m as i64)).collect();
            let gm = gamma.pow(&rat(m as i64), mode).unwrap();
            let f = TropPoly::new(
                n,
                ExponentMode::Laurent,
                mode,
                [(top, c.clone()), (s.clone(), c.mul(&gm, mode))],
            )
            .unwrap();

            let (h, g, k) = factor_binomial(&f).unwrap();
            assert_eq!(h.len(), 1);
            // The returned binomial is primitive: its cleared exponent
            // entries have gcd one, so no further root can be taken.
            let lcd = g
                .exponent
                .iter()
                .fold(num_bigint::BigInt::from(1), |acc, q| {
                    num_integer::Integer::lcm(&acc, q.denom())
                });
            let content = g.exponent.iter().fold(num_bigint::BigInt::from(0), |acc, q| {
                num_integer::Integer::gcd(
                    &acc,
                    &(q * Rat::from_integer(lcd.clone())).to_integer(),
                )
            });
            assert_eq!(content, num_bigint::BigInt::from(1));
            if k > 1 {
                nontrivial += 1;
            }

            let gp = g
                .to_poly()
                .with_exponent_mode(h.exponent_mode())
                .unwrap();
            let expanded = h.mul(&gp.pow(k).unwrap()).unwrap();
            let cmp = compare_fn(&expanded, &f).unwrap();
            assert!(cmp.nu_equal, "h·g^k differs from {f} as a ν-function");
            if mode == SemiringMode::Supertropical {
                assert!(cmp.surpasses_nu, "h·g^k fails to surpass {f}");
            }
        }
        assert!(nontrivial >= 30, "gcd > 1 cases starved: {nontrivial}");
    }

    // Rational exponents: x^(3/2) + 5 factors through x^(1/2) with the cube
    // root of the constant.
    let f = parse_poly(
        "x^(3/2) + 5",
        Some(1),
        ExponentMode::Rational,
        SemiringMode::Supertropical,
    )
    .unwrap();
    let (h, g, k) = factor_binomial(&f).unwrap();
    assert_eq!(k, 3);
    assert_eq!(g.exponent, vec![Rat::new(1.into(), 2.into())]);
    assert_eq!(
        g.constant,
        LayeredScalar::tangible(Rat::new(5.into(), 3.into()))
    );
    assert_eq!(h.len(), 1);

    let f = parse_poly("x + 1", Some(1), ExponentMode::Laurent, SemiringMode::MaxPlus).unwrap();
    assert!(factor_binomial(&f).is_err());
}
