//! Pointwise comparison of polynomial functions: ν-equivalence, domination,
//! and the surpassing relations, decided exactly for univariate inputs and
//! by seeded sampling plus tie witnesses in higher dimension.
//!
//! All relations are quantified over tangible points. Univariate
//! completeness: tropical monomials are affine in the point's value, so
//! between two consecutive pairwise tie points of the combined monomial set
//! each polynomial is one fixed monomial with a fixed layer, and every
//! relation is constant there. Checking all tie points, the midpoints
//! between them, and one point beyond each end therefore decides the
//! relations on the whole line.

use crate::error::{Error, Result};
use crate::feasibility::{find_point, LinIneq};
use crate::poly::TropPoly;
use crate::scalar::NuOrder;
use crate::Rat;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Overall relation between `f` and `g`, strongest applicable name first
/// per the precedence in [`FnComparison::verdict_from_flags`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NuEquivalent,
    SurpassesNu,
    Surpasses,
    StrictlyDominates,
    Dominates,
    Incomparable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::NuEquivalent => "nu-equivalent",
            Verdict::SurpassesNu => "surpasses-nu",
            Verdict::Surpasses => "surpasses",
            Verdict::StrictlyDominates => "strictly-dominates",
            Verdict::Dominates => "dominates",
            Verdict::Incomparable => "incomparable",
        }
    }
}

/// Whether the comparison was a complete decision or a sampled check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompareScope {
    Exact,
    Sampled(usize),
}

/// The full comparison record: each flag says whether its relation held at
/// every decision point, and each failing relation carries a witness point.
#[derive(Debug, Clone)]
pub struct FnComparison {
    pub verdict: Verdict,
    pub scope: CompareScope,
    /// f(a) = g(a) including layers.
    pub equal: bool,
    /// f(a) ≅_ν g(a).
    pub nu_equal: bool,
    /// f(a) ≥_ν g(a).
    pub dominates: bool,
    /// f(a) >_ν g(a).
    pub strictly_dominates: bool,
    /// f(a) ⊨ g(a).
    pub surpasses: bool,
    /// f(a) ⊨ g(a) and f(a) ≅_ν g(a).
    pub surpasses_nu: bool,
    pub not_equal_at: Option<Vec<Rat>>,
    pub not_nu_equal_at: Option<Vec<Rat>>,
    pub not_dominates_at: Option<Vec<Rat>>,
    pub not_surpasses_at: Option<Vec<Rat>>,
}

impl FnComparison {
    fn verdict_from_flags(&self) -> Verdict {
        if self.equal {
            // Identical functions are reported as ν-equivalent; the `equal`
            // flag records the stronger fact.
            Verdict::NuEquivalent
        } else if self.surpasses_nu {
            Verdict::SurpassesNu
        } else if self.nu_equal {
            Verdict::NuEquivalent
        } else if self.strictly_dominates {
            // Strict domination outranks bare surpassing: in max-plus mode
            // surpassing degenerates to ≥_ν, and "strictly bigger
            // everywhere" is the sharper statement when both hold.
            Verdict::StrictlyDominates
        } else if self.surpasses {
            Verdict::Surpasses
        } else if self.dominates {
            Verdict::Dominates
        } else {
            Verdict::Incomparable
        }
    }
}

/// Compares `f` and `g` at exactly the given tangible points.
pub fn compare_fn_at(f: &TropPoly, g: &TropPoly, points: &[Vec<Rat>], scope: CompareScope) -> Result<FnComparison> {
    let mut cmp = FnComparison {
        verdict: Verdict::Incomparable,
        scope,
        equal: true,
        nu_equal: true,
        dominates: true,
        strictly_dominates: true,
        surpasses: true,
        surpasses_nu: true,
        not_equal_at: None,
        not_nu_equal_at: None,
        not_dominates_at: None,
        not_surpasses_at: None,
    };
    let mode = f.mode();
    for a in points {
        let fv = f.evaluate_tangible(a)?;
        let gv = g.evaluate_tangible(a)?;
        if fv != gv && cmp.equal {
            cmp.equal = false;
            cmp.not_equal_at = Some(a.clone());
        }
        let ord = fv.nu_compare(&gv);
        if ord != NuOrder::Equivalent && cmp.nu_equal {
            cmp.nu_equal = false;
            cmp.not_nu_equal_at = Some(a.clone());
        }
        if ord == NuOrder::Less && cmp.dominates {
            cmp.dominates = false;
            cmp.not_dominates_at = Some(a.clone());
        }
        if ord != NuOrder::Greater {
            cmp.strictly_dominates = false;
        }
        if !fv.surpasses(&gv, mode) && cmp.surpasses {
            cmp.surpasses = false;
            cmp.not_surpasses_at = Some(a.clone());
        }
    }
    cmp.surpasses_nu = cmp.surpasses && cmp.nu_equal;
    cmp.verdict = cmp.verdict_from_flags();
    Ok(cmp)
}

/// All monomials of both polynomials as affine functions of the point
/// value(s): (exponent, coefficient value).
fn combined_lines(f: &TropPoly, g: &TropPoly) -> Vec<(Vec<Rat>, Rat)> {
    let mut lines: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for p in [f, g] {
        for (e, c) in p.terms() {
            let v = c.value().expect("non-Bottom coefficient").clone();
            if !lines.contains(&(e.clone(), v.clone())) {
                lines.push((e.clone(), v));
            }
        }
    }
    lines
}

/// The complete univariate decision set: pairwise tie points, midpoints
/// between consecutive ones, and one point beyond each end.
pub fn decision_points_univariate(f: &TropPoly, g: &TropPoly) -> Vec<Rat> {
    let lines = combined_lines(f, g);
    let mut ties: Vec<Rat> = Vec::new();
    for (i, (e1, v1)) in lines.iter().enumerate() {
        for (e2, v2) in lines.iter().skip(i + 1) {
            if e1[0] != e2[0] {
                let x = (v2 - v1) / (&e1[0] - &e2[0]);
                if !ties.contains(&x) {
                    ties.push(x);
                }
            }
        }
    }
    ties.sort();
    if ties.is_empty() {
        return vec![Rat::zero()];
    }
    let mut points: Vec<Rat> = Vec::new();
    points.push(ties[0].clone() - Rat::one());
    for (i, x) in ties.iter().enumerate() {
        if i > 0 {
            points.push((&ties[i - 1] + x) / Rat::from_integer(2.into()));
        }
        points.push(x.clone());
    }
    points.push(ties.last().unwrap().clone() + Rat::one());
    points
}

/// Seeded random tangible points: each coordinate a rational with numerator
/// in [−60, 60] and denominator in [1, 6].
pub fn random_points(n: usize, seed: u64, count: usize) -> Vec<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let numer: i64 = rng.gen_range(-60..=60);
                    let denom: i64 = rng.gen_range(1..=6);
                    Rat::new(numer.into(), denom.into())
                })
                .collect()
        })
        .collect()
}

/// Points where a pair of monomials ties while both reach the max of their
/// own polynomial: the loci where evaluated layers can jump. Scanning these
/// catches differences that random sampling almost surely misses.
pub fn live_tie_witnesses(f: &TropPoly, g: &TropPoly) -> Vec<Vec<Rat>> {
    let n = f.vars();
    let mut found: Vec<Vec<Rat>> = Vec::new();
    // Pairs within one polynomial (layer jumps of that polynomial) and
    // cross pairs dominant in their own polynomials (value crossings).
    let polys = [f, g];
    for (pi, p) in polys.iter().enumerate() {
        for (qi, q) in polys.iter().enumerate().skip(pi) {
            let ps = p.supp();
            let qs = q.supp();
            for e1 in &ps {
                for e2 in &qs {
                    if pi == qi && e1 >= e2 {
                        continue;
                    }
                    let v1 = p.coeff(e1).unwrap().value().unwrap().clone();
                    let v2 = q.coeff(e2).unwrap().value().unwrap().clone();
                    if e1 == e2 && v1 != v2 {
                        continue; // parallel distinct lines never tie
                    }
                    let mut sys: Vec<LinIneq> = Vec::new();
                    // h1 = h2 as two opposite non-strict inequalities.
                    let delta: Vec<Rat> = e1.iter().zip(e2).map(|(a, b)| a - b).collect();
                    let dv = &v1 - &v2;
                    sys.push(LinIneq::new(delta.clone(), dv.clone(), false));
                    sys.push(LinIneq::new(
                        delta.iter().map(|x| -x.clone()).collect(),
                        -dv,
                        false,
                    ));
                    // h1 reaches the max of p, h2 the max of q.
                    for (e3, c3) in p.terms() {
                        if e3 == e1 {
                            continue;
                        }
                        sys.push(LinIneq::new(
                            e1.iter().zip(e3).map(|(a, b)| a - b).collect(),
                            &v1 - c3.value().unwrap(),
                            false,
                        ));
                    }
                    for (e3, c3) in q.terms() {
                        if e3 == e2 {
                            continue;
                        }
                        sys.push(LinIneq::new(
                            e2.iter().zip(e3).map(|(a, b)| a - b).collect(),
                            &v2 - c3.value().unwrap(),
                            false,
                        ));
                    }
                    if let Some(w) = find_point(&sys, n) {
                        if !found.contains(&w) {
                            found.push(w);
                        }
                    }
                }
            }
        }
    }
    found
}

/// Compares two polynomial functions. Univariate (and constant) inputs are
/// decided exactly; multivariate inputs are checked at `samples` seeded
/// random points plus, when `include_ties` is set, all live tie witnesses.
pub fn compare_fn_seeded(
    f: &TropPoly,
    g: &TropPoly,
    seed: u64,
    samples: usize,
    include_ties: bool,
) -> Result<FnComparison> {
    if f.vars() != g.vars() || f.exponent_mode() != g.exponent_mode() || f.mode() != g.mode() {
        return Err(Error::ModeMismatch {
            op: "compare_fn",
            left: format!("{} vars, {}, {}", f.vars(), f.exponent_mode().name(), f.mode()),
            right: format!("{} vars, {}, {}", g.vars(), g.exponent_mode().name(), g.mode()),
        });
    }
    let n = f.vars();
    if n == 0 {
        return compare_fn_at(f, g, &[Vec::new()], CompareScope::Exact);
    }
    if n == 1 {
        let points: Vec<Vec<Rat>> = decision_points_univariate(f, g)
            .into_iter()
            .map(|x| vec![x])
            .collect();
        return compare_fn_at(f, g, &points, CompareScope::Exact);
    }
    let mut points = random_points(n, seed, samples);
    if include_ties {
        for w in live_tie_witnesses(f, g) {
            if !points.contains(&w) {
                points.push(w);
            }
        }
    }
    let count = points.len();
    compare_fn_at(f, g, &points, CompareScope::Sampled(count))
}

/// Comparison with the default sampling plan (200 points, seed 0, tie
/// witnesses included).
pub fn compare_fn(f: &TropPoly, g: &TropPoly) -> Result<FnComparison> {
    compare_fn_seeded(f, g, 0, 200, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ExponentMode;
    use crate::scalar::{LayeredScalar, SemiringMode};
    use crate::{rat, ratio};

    fn t(v: i64) -> LayeredScalar {
        LayeredScalar::tangible(rat(v))
    }

    fn uni(mode: SemiringMode, pairs: &[(i64, LayeredScalar)]) -> TropPoly {
        TropPoly::univariate(
            ExponentMode::Polynomial,
            mode,
            pairs.iter().map(|(e, c)| (rat(*e), c.clone())),
        )
        .unwrap()
    }

    #[test]
    fn self_comparison_is_nu_equivalent_and_equal() {
        let f = uni(SemiringMode::Layered, &[(2, t(0)), (1, t(0)), (0, t(3))]);
        let cmp = compare_fn(&f, &f).unwrap();
        assert_eq!(cmp.verdict, Verdict::NuEquivalent);
        assert!(cmp.equal);
        assert_eq!(cmp.scope, CompareScope::Exact);
    }

    #[test]
    fn hidden_coefficient_still_dominates() {
        // f = λ² + λ + 3 dominates g = 1λ + 3 even though f's λ-coefficient
        // is smaller: the λ monomial is inessential in f, so the
        // coefficientwise comparison of shared essential exponents is not
        // violated.
        let m = SemiringMode::Layered;
        let f = uni(m, &[(2, t(0)), (1, t(0)), (0, t(3))]);
        let g = uni(m, &[(1, t(1)), (0, t(3))]);
        let cmp = compare_fn(&f, &g).unwrap();
        assert!(cmp.dominates);
        assert_eq!(cmp.verdict, Verdict::Dominates);
        // They tie in value on x ≤ 1, so not strictly.
        assert!(!cmp.strictly_dominates);
    }

    #[test]
    fn square_versus_spread_out_form() {
        // (λ+2)² vs λ²+4: ν-equivalent everywhere, layers differ at x = 2.
        let m = SemiringMode::Layered;
        let f = uni(m, &[(1, t(0)), (0, t(2))]).pow(2).unwrap();
        let g = uni(m, &[(2, t(0)), (0, t(4))]);
        let cmp = compare_fn(&f, &g).unwrap();
        assert_eq!(cmp.verdict, Verdict::NuEquivalent);
        assert!(!cmp.equal);
        assert_eq!(cmp.not_equal_at, Some(vec![rat(2)]));
        // In supertropical mode both sides give 4^[∞] at x = 2 (the ghost
        // middle coefficient and the corner tie each normalize to ∞), so
        // the functions are pointwise equal.
        let m = SemiringMode::Supertropical;
        let f = uni(m, &[(1, t(0)), (0, t(2))]).pow(2).unwrap();
        let g = uni(m, &[(2, t(0)), (0, t(4))]);
        let cmp = compare_fn(&f, &g).unwrap();
        assert!(cmp.equal);
        assert_eq!(cmp.verdict, Verdict::NuEquivalent);
    }

    #[test]
    fn strict_domination_and_incomparability() {
        let m = SemiringMode::MaxPlus;
        let f = uni(m, &[(1, t(0)), (0, t(5))]);
        let g = uni(m, &[(0, t(3))]);
        assert_eq!(compare_fn(&f, &g).unwrap().verdict, Verdict::StrictlyDominates);
        let h = uni(m, &[(1, t(0)), (0, t(0))]);
        let k = uni(m, &[(0, t(2))]);
        let cmp = compare_fn(&h, &k).unwrap();
        assert_eq!(cmp.verdict, Verdict::Incomparable);
        assert!(cmp.not_dominates_at.is_some());
    }

    #[test]
    fn ghost_polynomial_surpasses_without_nu_equality() {
        let m = SemiringMode::Supertropical;
        let f = uni(
            m,
            &[(1, LayeredScalar::ghost(rat(0))), (0, LayeredScalar::ghost(rat(6)))],
        );
        let g = uni(m, &[(1, t(0)), (0, t(5))]);
        let cmp = compare_fn(&f, &g).unwrap();
        assert_eq!(cmp.verdict, Verdict::Surpasses);
        assert!(cmp.surpasses && !cmp.nu_equal);
    }

    #[test]
    fn repeated_addition_and_the_surpassing_threshold() {
        let m = SemiringMode::Layered;
        let f = TropPoly::new(
            2,
            ExponentMode::Polynomial,
            m,
            [
                (vec![rat(1), rat(0)], t(0)),
                (vec![rat(0), rat(1)], t(0)),
                (vec![rat(0), rat(0)], t(0)),
            ],
        )
        .unwrap();
        // One extra copy only doubles layers: v^[2] does not surpass v^[1]
        // in layered mode (the added layer 1 is not a 1-ghost).
        let doubled = f.add(&f).unwrap();
        let cmp = compare_fn(&doubled, &f).unwrap();
        assert_eq!(cmp.verdict, Verdict::NuEquivalent);
        assert!(!cmp.equal && !cmp.surpasses);
        assert!(matches!(cmp.scope, CompareScope::Sampled(_)));
        // Two extra copies reach layer 3 = 1 + 2, and 2 is a 1-ghost.
        let tripled = doubled.add(&f).unwrap();
        let cmp = compare_fn(&tripled, &f).unwrap();
        assert_eq!(cmp.verdict, Verdict::SurpassesNu);
        // In supertropical mode one extra copy already ghosts everything.
        let m = SemiringMode::Supertropical;
        let f = TropPoly::new(
            2,
            ExponentMode::Polynomial,
            m,
            [
                (vec![rat(1), rat(0)], t(0)),
                (vec![rat(0), rat(1)], t(0)),
            ],
        )
        .unwrap();
        let cmp = compare_fn(&f.add(&f).unwrap(), &f).unwrap();
        assert_eq!(cmp.verdict, Verdict::SurpassesNu);
    }

    #[test]
    fn tie_witnesses_catch_diagonal_only_differences() {
        // g adds a boundary monomial that only fires on the diagonal
        // x₁ = x₂; random sampling essentially never lands there.
        let m = SemiringMode::Layered;
        let f = TropPoly::new(
            2,
            ExponentMode::Rational,
            m,
            [
                (vec![rat(1), rat(0)], t(0)),
                (vec![rat(0), rat(1)], t(0)),
            ],
        )
        .unwrap();
        let g = f
            .add(
                &TropPoly::monomial(
                    2,
                    ExponentMode::Rational,
                    m,
                    vec![ratio(1, 2), ratio(1, 2)],
                    t(0),
                )
                .unwrap(),
            )
            .unwrap();
        let cmp = compare_fn(&g, &f).unwrap();
        assert!(!cmp.equal, "the diagonal layer difference must be detected");
        let w = cmp.not_equal_at.unwrap();
        assert_eq!(w[0], w[1]);
    }

    #[test]
    fn rational_exponents_compare_exactly() {
        let m = SemiringMode::Supertropical;
        let f = TropPoly::univariate(
            ExponentMode::Rational,
            m,
            [(ratio(5, 3), t(0)), (rat(0), t(7))],
        )
        .unwrap();
        let cmp = compare_fn(&f, &f).unwrap();
        assert_eq!(cmp.scope, CompareScope::Exact);
        assert!(cmp.equal);
    }
}
