//! Multivariate tropical polynomials: finite maps from exponent vectors to
//! layered coefficients, in polynomial, Laurent, or rational exponent mode.
//!
//! Exponent vectors are `Vec<Rat>` ordered lexicographically with coordinate
//! 0 most significant, which is exactly the ordering `BTreeMap` gives them;
//! the last key is the leading monomial. Coefficients are never `Bottom` and
//! the map is never empty.

use crate::error::{Error, Result};
use crate::feasibility::{find_point, find_point_2d, LinIneq};
use crate::scalar::{LayeredScalar, NuOrder, SemiringMode};
use crate::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Which exponents a polynomial may carry: nonnegative integers, integers,
/// or arbitrary rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExponentMode {
    Polynomial,
    Laurent,
    Rational,
}

impl ExponentMode {
    pub fn name(self) -> &'static str {
        match self {
            ExponentMode::Polynomial => "poly",
            ExponentMode::Laurent => "laurent",
            ExponentMode::Rational => "rational",
        }
    }

    pub fn admits(self, e: &Rat) -> bool {
        match self {
            ExponentMode::Polynomial => e.is_integer() && *e >= Rat::zero(),
            ExponentMode::Laurent => e.is_integer(),
            ExponentMode::Rational => true,
        }
    }
}

/// Essentiality of one monomial within its polynomial. `Essential` monomials
/// strictly dominate everywhere on some open set; `Inessential` ones never
/// affect the function; `Boundary` ones reach the maximum only in ties, which
/// leaves values alone but raises layers (so they matter in the supertropical
/// and layered modes but not in max-plus).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialStatus {
    Essential,
    Boundary,
    Inessential,
}

/// A tropical polynomial. Carries its ambient variable count, exponent mode,
/// and semiring mode; operations between polynomials require all three to
/// match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropPoly {
    vars: usize,
    emode: ExponentMode,
    mode: SemiringMode,
    terms: BTreeMap<Vec<Rat>, LayeredScalar>,
}

impl TropPoly {
    /// Builds a polynomial from (exponent, coefficient) pairs. Duplicate
    /// exponents merge by semiring addition; `Bottom` coefficients are
    /// dropped (they are the additive neutral). At least one real term must
    /// survive.
    pub fn new(
        vars: usize,
        emode: ExponentMode,
        mode: SemiringMode,
        terms: impl IntoIterator<Item = (Vec<Rat>, LayeredScalar)>,
    ) -> Result<TropPoly> {
        let mut map: BTreeMap<Vec<Rat>, LayeredScalar> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != vars {
                return Err(Error::DimensionMismatch {
                    op: "polynomial construction",
                    expected: vars,
                    got: e.len(),
                });
            }
            for x in &e {
                if !emode.admits(x) {
                    return Err(Error::ExponentOutOfMode {
                        op: "polynomial construction",
                        exponent: x.to_string(),
                        mode: emode.name().to_string(),
                    });
                }
            }
            if c.is_bottom() {
                continue;
            }
            if let Some(layer) = c.sort() {
                if !layer.valid_in(mode) {
                    return Err(Error::InvalidLayer {
                        layer: layer.to_string(),
                        mode: mode.name().to_string(),
                    });
                }
            }
            match map.entry(e) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let merged = o.get().add(&c, mode);
                    *o.get_mut() = merged;
                }
            }
        }
        if map.is_empty() {
            return Err(Error::TooFewMonomials {
                op: "polynomial construction",
                needed: 1,
                got: 0,
            });
        }
        Ok(TropPoly {
            vars,
            emode,
            mode,
            terms: map,
        })
    }

    /// Single-monomial polynomial.
    pub fn monomial(
        vars: usize,
        emode: ExponentMode,
        mode: SemiringMode,
        exps: Vec<Rat>,
        coeff: LayeredScalar,
    ) -> Result<TropPoly> {
        TropPoly::new(vars, emode, mode, [(exps, coeff)])
    }

    /// Constant polynomial (all exponents zero).
    pub fn constant(
        vars: usize,
        emode: ExponentMode,
        mode: SemiringMode,
        coeff: LayeredScalar,
    ) -> Result<TropPoly> {
        TropPoly::monomial(vars, emode, mode, vec![Rat::zero(); vars], coeff)
    }

    /// Univariate convenience: pairs of (exponent, coefficient).
    pub fn univariate(
        emode: ExponentMode,
        mode: SemiringMode,
        pairs: impl IntoIterator<Item = (Rat, LayeredScalar)>,
    ) -> Result<TropPoly> {
        TropPoly::new(1, emode, mode, pairs.into_iter().map(|(e, c)| (vec![e], c)))
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn exponent_mode(&self) -> ExponentMode {
        self.emode
    }

    pub fn mode(&self) -> SemiringMode {
        self.mode
    }

    /// Terms in ascending exponent order (leading monomial last).
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Rat>, &LayeredScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the nonempty invariant holds by construction
    }

    pub fn coeff(&self, e: &[Rat]) -> Option<&LayeredScalar> {
        self.terms.get(e)
    }

    /// The support: all exponent vectors, ascending.
    pub fn supp(&self) -> Vec<Vec<Rat>> {
        self.terms.keys().cloned().collect()
    }

    /// The tangible support: exponents whose coefficients have layer 1.
    pub fn tsupp(&self) -> Vec<Vec<Rat>> {
        self.terms
            .iter()
            .filter(|(_, c)| c.is_tangible())
            .map(|(e, _)| e.clone())
            .collect()
    }

    pub fn is_tangibly_spanned(&self) -> bool {
        self.terms.values().all(|c| c.is_tangible())
    }

    /// Leading (lexicographically largest) exponent and coefficient.
    pub fn leading(&self) -> (&Vec<Rat>, &LayeredScalar) {
        self.terms.iter().next_back().expect("nonempty invariant")
    }

    /// Univariate degree: the largest exponent.
    pub fn degree(&self) -> Result<Rat> {
        self.check_univariate("degree")?;
        Ok(self.leading().0[0].clone())
    }

    pub fn check_univariate(&self, op: &'static str) -> Result<()> {
        if self.vars != 1 {
            return Err(Error::NotUnivariate {
                op,
                vars: self.vars,
            });
        }
        Ok(())
    }

    /// Univariate view: (exponent, coefficient) pairs ascending.
    pub fn uni_pairs(&self) -> Vec<(Rat, LayeredScalar)> {
        debug_assert_eq!(self.vars, 1);
        self.terms
            .iter()
            .map(|(e, c)| (e[0].clone(), c.clone()))
            .collect()
    }

    fn check_compatible(&self, other: &TropPoly, op: &'static str) -> Result<()> {
        if self.vars != other.vars || self.emode != other.emode || self.mode != other.mode {
            return Err(Error::ModeMismatch {
                op,
                left: format!("{} vars, {}, {}", self.vars, self.emode.name(), self.mode),
                right: format!(
                    "{} vars, {}, {}",
                    other.vars,
                    other.emode.name(),
                    other.mode
                ),
            });
        }
        Ok(())
    }

    /// Monomial-wise sum.
    pub fn add(&self, other: &TropPoly) -> Result<TropPoly> {
        self.check_compatible(other, "poly_add")?;
        let terms = self
            .terms
            .iter()
            .chain(other.terms.iter())
            .map(|(e, c)| (e.clone(), c.clone()));
        TropPoly::new(self.vars, self.emode, self.mode, terms)
    }

    /// Full convolution product.
    pub fn mul(&self, other: &TropPoly) -> Result<TropPoly> {
        self.check_compatible(other, "poly_mul")?;
        let mut terms: Vec<(Vec<Rat>, LayeredScalar)> = Vec::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<Rat> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                terms.push((e, c1.mul(c2, self.mode)));
            }
        }
        TropPoly::new(self.vars, self.emode, self.mode, terms)
    }

    /// k-th power by repeated multiplication, k ≥ 1.
    pub fn pow(&self, k: u32) -> Result<TropPoly> {
        assert!(k >= 1, "poly_pow: k must be at least 1");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplies every coefficient by `c` (scaling by a scalar).
    pub fn scale(&self, c: &LayeredScalar) -> Result<TropPoly> {
        TropPoly::new(
            self.vars,
            self.emode,
            self.mode,
            self.terms
                .iter()
                .map(|(e, k)| (e.clone(), k.mul(c, self.mode))),
        )
    }

    /// The same polynomial under a different exponent mode. Fails when some
    /// exponent is not admitted by the target mode.
    pub fn with_exponent_mode(&self, emode: ExponentMode) -> Result<TropPoly> {
        TropPoly::new(
            self.vars,
            emode,
            self.mode,
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    /// Multiplies by the monomial `coeff · Λ^shift`. The shifted exponents
    /// must stay inside the exponent mode.
    pub fn mul_monomial(&self, shift: &[Rat], coeff: &LayeredScalar) -> Result<TropPoly> {
        if shift.len() != self.vars {
            return Err(Error::DimensionMismatch {
                op: "mul_monomial",
                expected: self.vars,
                got: shift.len(),
            });
        }
        TropPoly::new(
            self.vars,
            self.emode,
            self.mode,
            self.terms.iter().map(|(e, c)| {
                let shifted: Vec<Rat> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
                (shifted, c.mul(coeff, self.mode))
            }),
        )
    }

    /// The polynomial without the given exponent; `None` when that would
    /// empty it.
    pub fn without(&self, e: &[Rat]) -> Option<TropPoly> {
        if self.terms.len() <= 1 && self.terms.contains_key(e) {
            return None;
        }
        let mut terms = self.terms.clone();
        terms.remove(e);
        Some(TropPoly {
            vars: self.vars,
            emode: self.emode,
            mode: self.mode,
            terms,
        })
    }

    /// Restricts to the given exponents; `None` if nothing survives.
    pub fn restricted_to(&self, keep: &[Vec<Rat>]) -> Option<TropPoly> {
        let terms: BTreeMap<Vec<Rat>, LayeredScalar> = self
            .terms
            .iter()
            .filter(|(e, _)| keep.contains(e))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        if terms.is_empty() {
            return None;
        }
        Some(TropPoly {
            vars: self.vars,
            emode: self.emode,
            mode: self.mode,
            terms,
        })
    }

    /// The value of the single monomial `e` at the point: coeff · ∏ aⱼ^{eⱼ}.
    pub fn monomial_value(&self, e: &[Rat], point: &[LayeredScalar]) -> Result<LayeredScalar> {
        let coeff = self.terms.get(e).expect("exponent present");
        let mut acc = coeff.clone();
        for (a, exp) in point.iter().zip(e) {
            acc = acc.mul(&a.pow(exp, self.mode)?, self.mode);
        }
        Ok(acc)
    }

    /// Evaluates the polynomial at a point by summing all monomial values.
    ///
    /// Rational powers of tangible entries are exact; ghost entries admit
    /// only nonnegative integer exponents (their layer is raised along), and
    /// anything else reports `RationalPowerOfGhost`.
    pub fn evaluate(&self, point: &[LayeredScalar]) -> Result<LayeredScalar> {
        if point.len() != self.vars {
            return Err(Error::DimensionMismatch {
                op: "evaluate",
                expected: self.vars,
                got: point.len(),
            });
        }
        let mut sum = LayeredScalar::Bottom;
        for e in self.terms.keys() {
            sum = sum.add(&self.monomial_value(e, point)?, self.mode);
        }
        Ok(sum)
    }

    /// Evaluates at an all-tangible rational point.
    pub fn evaluate_tangible(&self, point: &[Rat]) -> Result<LayeredScalar> {
        let pt: Vec<LayeredScalar> = point
            .iter()
            .map(|v| LayeredScalar::tangible(v.clone()))
            .collect();
        self.evaluate(&pt)
    }

    /// The strict-domination system for monomial `e`: where does it beat
    /// every other monomial in value? Returns the inequalities over the
    /// evaluation point.
    fn domination_system(&self, e: &[Rat], strict: bool) -> Vec<LinIneq> {
        let ce = self.terms[e].value().expect("non-Bottom coefficient");
        self.terms
            .iter()
            .filter(|(e2, _)| e2.as_slice() != e)
            .map(|(e2, c2)| {
                let coeffs: Vec<Rat> = e.iter().zip(e2).map(|(a, b)| a - b).collect();
                let constant = ce - c2.value().expect("non-Bottom coefficient");
                LinIneq::new(coeffs, constant, strict)
            })
            .collect()
    }

    /// Where (if anywhere) monomial `e` strictly beats all other monomials:
    /// a witness point, or `None`.
    pub fn strict_win_witness(&self, e: &[Rat]) -> Option<Vec<Rat>> {
        self.solve_domination(self.domination_system(e, true))
    }

    /// Where (if anywhere) monomial `e` reaches the pointwise maximum.
    pub fn tie_witness(&self, e: &[Rat]) -> Option<Vec<Rat>> {
        self.solve_domination(self.domination_system(e, false))
    }

    fn solve_domination(&self, sys: Vec<LinIneq>) -> Option<Vec<Rat>> {
        if self.vars == 2 {
            // Dense supports (polynomial products) make the pairing step of
            // elimination quadratic per monomial; the planar clip is linear.
            find_point_2d(&sys)
        } else {
            find_point(&sys, self.vars)
        }
    }

    /// Classifies one monomial as essential, boundary, or inessential.
    pub fn monomial_status(&self, e: &[Rat]) -> MonomialStatus {
        if self.terms.len() == 1 {
            return MonomialStatus::Essential;
        }
        if self.strict_win_witness(e).is_some() {
            return MonomialStatus::Essential;
        }
        if self.mode == SemiringMode::MaxPlus {
            // A max-plus tie adds nothing: 1 + 1 = 1, so a monomial that
            // never strictly wins never affects the function.
            return MonomialStatus::Inessential;
        }
        if self.tie_witness(e).is_some() {
            MonomialStatus::Boundary
        } else {
            MonomialStatus::Inessential
        }
    }

    /// Exponents of the essential monomials, ascending.
    pub fn essential_support(&self) -> Vec<Vec<Rat>> {
        if self.terms.len() == 1 {
            return self.terms.keys().cloned().collect();
        }
        // Equivalent to keeping the `Essential` monomials, but without the
        // tie search `monomial_status` runs on every non-winner.
        self.terms
            .keys()
            .filter(|e| self.strict_win_witness(e).is_some())
            .cloned()
            .collect()
    }

    /// The essential part f^es: the sum of the essential monomials with
    /// their original coefficients.
    pub fn essential_part(&self) -> TropPoly {
        let keep = self.essential_support();
        self.restricted_to(&keep)
            .expect("a polynomial always has at least one essential monomial")
    }

    /// Divides by the leading coefficient, making the polynomial monic.
    pub fn make_monic(&self) -> Result<TropPoly> {
        let (_, lead) = self.leading();
        let inv = lead.inverse().map_err(|_| Error::GhostLeading {
            coeff: lead.to_string(),
            input: self.to_string(),
        })?;
        self.scale(&inv)
    }

    /// Is the leading coefficient the multiplicative unit 0^[1]?
    pub fn is_monic(&self) -> bool {
        let (_, lead) = self.leading();
        lead.is_tangible() && lead.value().map(|v| v.is_zero()).unwrap_or(false)
    }
}

impl std::fmt::Display for TropPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::parse::print_poly(self))
    }
}

/// Ordering of two exponent vectors under the coordinate-0-major
/// lexicographic order used throughout.
pub fn lex_cmp(a: &[Rat], b: &[Rat]) -> std::cmp::Ordering {
    a.cmp(b)
}

/// The point t·a + (1−t)·b on the tropical path from b (t = 0) to a (t = 1),
/// componentwise in values.
pub fn path_point(a: &[Rat], b: &[Rat], t: &Rat) -> Result<Vec<Rat>> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            op: "path_point",
            expected: a.len(),
            got: b.len(),
        });
    }
    if *t < Rat::zero() || *t > Rat::one() {
        return Err(Error::PathParameterOutOfRange { t: t.to_string() });
    }
    let s = Rat::one() - t;
    Ok(a.iter()
        .zip(b)
        .map(|(x, y)| x * t + y * &s)
        .collect())
}

/// ν-comparison of two evaluations, as a convenience for tests.
pub fn nu_order(a: &LayeredScalar, b: &LayeredScalar) -> NuOrder {
    a.nu_compare(b)
}
