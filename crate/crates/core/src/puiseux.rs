//! Classical polynomials over exact Puiseux-style coefficients, the
//! valuation map into the tangible tropical world, and the
//! monomial-elimination combinator that rewrites a sum of two
//! tropicalizations around a chosen common monomial.
//!
//! Coefficients are finite sums `Σ cᵢ t^{eᵢ}` with rational `cᵢ` and
//! rational exponents. The valuation of a nonzero series is the negated
//! smallest exponent, so the series that dominates as `t → 0` gets the
//! larger tropical value and "bigger wins" means the same thing on both
//! sides of the bridge.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{ExponentMode, TropPoly};
use crate::scalar::{LayeredScalar, SemiringMode};
use crate::Rat;

/// How many quotient terms exact series division will produce before
/// giving up. Division of finite sums has no size bound tied to its inputs
/// (the exact quotient may simply be an infinite series), so elimination
/// falls back to the leading-term ratio beyond this.
const DIVISION_TERM_BUDGET: usize = 128;

/// A finite sum `Σ cᵢ t^{eᵢ}` in canonical form: nonzero rational
/// coefficients, strictly increasing rational exponents. The empty sum is
/// the classical zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxScalar {
    terms: Vec<(Rat, Rat)>,
}

impl PuiseuxScalar {
    /// Builds a scalar from arbitrary (coefficient, exponent) pairs,
    /// merging repeated exponents and dropping anything that cancels.
    pub fn new(terms: impl IntoIterator<Item = (Rat, Rat)>) -> PuiseuxScalar {
        let mut merged: BTreeMap<Rat, Rat> = BTreeMap::new();
        for (c, e) in terms {
            let slot = merged.entry(e).or_insert_with(Rat::zero);
            *slot += c;
        }
        PuiseuxScalar {
            terms: merged
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (c, e))
                .collect(),
        }
    }

    pub fn zero() -> PuiseuxScalar {
        PuiseuxScalar { terms: Vec::new() }
    }

    /// The single term `c·t^e` (zero when `c` is zero).
    pub fn term(c: Rat, e: Rat) -> PuiseuxScalar {
        PuiseuxScalar::new([(c, e)])
    }

    /// The rational constant `c·t⁰`.
    pub fn constant(c: Rat) -> PuiseuxScalar {
        PuiseuxScalar::term(c, Rat::zero())
    }

    pub fn one() -> PuiseuxScalar {
        PuiseuxScalar::constant(num_traits::One::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The (coefficient, exponent) pairs, exponents strictly increasing.
    pub fn terms(&self) -> &[(Rat, Rat)] {
        &self.terms
    }

    /// The dominant term as `t → 0`: the one with the smallest exponent.
    pub fn leading(&self) -> Option<&(Rat, Rat)> {
        self.terms.first()
    }

    pub fn add(&self, other: &PuiseuxScalar) -> PuiseuxScalar {
        PuiseuxScalar::new(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(c, e)| (c.clone(), e.clone())),
        )
    }

    pub fn neg(&self) -> PuiseuxScalar {
        PuiseuxScalar {
            terms: self.terms.iter().map(|(c, e)| (-c, e.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &PuiseuxScalar) -> PuiseuxScalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PuiseuxScalar) -> PuiseuxScalar {
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c1, e1) in &self.terms {
            for (c2, e2) in &other.terms {
                out.push((c1 * c2, e1 + e2));
            }
        }
        PuiseuxScalar::new(out)
    }

    /// Multiplies every coefficient by the rational `c`.
    pub fn scale(&self, c: &Rat) -> PuiseuxScalar {
        if c.is_zero() {
            return PuiseuxScalar::zero();
        }
        PuiseuxScalar {
            terms: self.terms.iter().map(|(k, e)| (k * c, e.clone())).collect(),
        }
    }

    /// Exact division: `Some(q)` with `q·other == self` when the quotient
    /// is itself a finite sum reachable within the term budget, `None`
    /// otherwise (either the quotient is an infinite series or too long).
    pub fn div_exact(&self, other: &PuiseuxScalar) -> Option<PuiseuxScalar> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(PuiseuxScalar::zero());
        }
        let (dc, de) = other.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot: Vec<(Rat, Rat)> = Vec::new();
        while !rem.is_zero() {
            if quot.len() >= DIVISION_TERM_BUDGET {
                return None;
            }
            let (rc, re) = rem.leading().expect("nonzero remainder");
            let c = rc / dc;
            let e = re - de;
            rem = rem.sub(&PuiseuxScalar::term(c.clone(), e.clone()).mul(other));
            quot.push((c, e));
        }
        Some(PuiseuxScalar::new(quot))
    }

    /// The tropical valuation: the negated smallest exponent, so the
    /// series dominating as `t → 0` gets the larger value.
    pub fn valuation(&self) -> Result<Rat> {
        match self.leading() {
            Some((_, e)) => Ok(-e),
            None => Err(Error::ZeroHasNoValuation),
        }
    }
}

impl std::fmt::Display for PuiseuxScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let shown: Vec<String> = self
            .terms
            .iter()
            .map(|(c, e)| {
                if e.is_zero() {
                    format!("{c}")
                } else if *e == Rat::from_integer(1.into()) {
                    format!("{c}*t")
                } else {
                    format!("{c}*t^{e}")
                }
            })
            .collect();
        f.write_str(&shown.join(" + "))
    }
}

/// A classical polynomial over Puiseux coefficients: integer exponent
/// vectors mapped to nonzero scalars. The empty map is the zero
/// polynomial (unlike tropical polynomials, classical arithmetic can
/// cancel everything).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalPoly {
    vars: usize,
    terms: BTreeMap<Vec<i64>, PuiseuxScalar>,
}

impl ClassicalPoly {
    pub fn new(
        vars: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, PuiseuxScalar)>,
    ) -> Result<ClassicalPoly> {
        let mut map: BTreeMap<Vec<i64>, PuiseuxScalar> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != vars {
                return Err(Error::DimensionMismatch {
                    op: "classical_poly",
                    expected: vars,
                    got: e.len(),
                });
            }
            let slot = map.entry(e).or_insert_with(PuiseuxScalar::zero);
            *slot = slot.add(&c);
        }
        map.retain(|_, c| !c.is_zero());
        Ok(ClassicalPoly { vars, terms: map })
    }

    pub fn zero(vars: usize) -> ClassicalPoly {
        ClassicalPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(vars: usize, exps: Vec<i64>, coeff: PuiseuxScalar) -> Result<ClassicalPoly> {
        ClassicalPoly::new(vars, [(exps, coeff)])
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &PuiseuxScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i64]) -> Option<&PuiseuxScalar> {
        self.terms.get(e)
    }

    pub fn supp(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    fn check_compatible(&self, other: &ClassicalPoly, op: &'static str) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch {
                op,
                expected: self.vars,
                got: other.vars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassicalPoly) -> Result<ClassicalPoly> {
        self.check_compatible(other, "classical_add")?;
        ClassicalPoly::new(
            self.vars,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn neg(&self) -> ClassicalPoly {
        ClassicalPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &ClassicalPoly) -> Result<ClassicalPoly> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ClassicalPoly) -> Result<ClassicalPoly> {
        self.check_compatible(other, "classical_mul")?;
        let mut out: Vec<(Vec<i64>, PuiseuxScalar)> = Vec::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.push((e, c1.mul(c2)));
            }
        }
        ClassicalPoly::new(self.vars, out)
    }

    /// Multiplies every coefficient by the scalar `c`.
    pub fn scale(&self, c: &PuiseuxScalar) -> ClassicalPoly {
        if c.is_zero() {
            return ClassicalPoly::zero(self.vars);
        }
        ClassicalPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// The monomials whose exponents pass the filter.
    fn filtered(&self, keep: impl Fn(&[i64]) -> bool) -> ClassicalPoly {
        ClassicalPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }
}

fn rat_exps(e: &[i64]) -> Vec<Rat> {
    e.iter().map(|&k| crate::rat(k)).collect()
}

/// Replaces every coefficient by its valuation as a layer-1 scalar, keeping
/// the exponents. The exponent mode is the narrowest fit: plain polynomial
/// exponents when none are negative, Laurent otherwise.
pub fn tropicalize_poly(f: &ClassicalPoly, mode: SemiringMode) -> Result<TropPoly> {
    if f.is_zero() {
        return Err(Error::TooFewMonomials {
            op: "tropicalize_poly",
            needed: 1,
            got: 0,
        });
    }
    let emode = if f.terms().all(|(e, _)| e.iter().all(|&k| k >= 0)) {
        ExponentMode::Polynomial
    } else {
        ExponentMode::Laurent
    };
    TropPoly::new(
        f.vars(),
        emode,
        mode,
        f.terms()
            .map(|(e, c)| {
                Ok((
                    rat_exps(e),
                    LayeredScalar::tangible(c.valuation().expect("nonzero coefficient invariant")),
                ))
            })
            .collect::<Result<Vec<_>>>()?,
    )
}

/// One monomial-elimination rewrite: everything needed to check how a sum
/// of two tropicalizations splits around the eliminated monomial.
#[derive(Debug, Clone)]
pub struct Elimination {
    /// Tropicalization of `pbar` (always nonempty: it keeps `h`).
    pub p: TropPoly,
    /// Tropicalization of `qbar`, absent when everything cancelled.
    pub q: Option<TropPoly>,
    /// The monomials of `fbar` outside the support of `qbar`.
    pub pbar: ClassicalPoly,
    /// The common-support monomials of the eliminated difference, `h`
    /// excluded.
    pub qbar: ClassicalPoly,
    /// The full eliminated difference `fbar − α·gbar`.
    pub dbar: ClassicalPoly,
    /// The scaling used for the elimination.
    pub alpha: PuiseuxScalar,
    /// Whether `alpha` is the exact coefficient quotient at `h` (when not,
    /// it is the leading-term ratio and the `h` coefficient cancels only
    /// to leading order).
    pub alpha_exact: bool,
}

/// Eliminates the common monomial `h` from the pair `(fbar, gbar)`:
/// scales `gbar` so the `h` coefficients cancel, splits the difference
/// into the part `qbar` supported on the common support (minus `h`) and
/// the rest of `fbar` as `pbar`, and returns both with their
/// tropicalizations. By construction `h` stays in `supp(p)`,
/// `supp(q) ⊆ (supp(f) ∩ supp(g)) ∖ {h}`, and `supp(q)` is disjoint from
/// `supp(p)`.
///
/// The scaling prefers the exact coefficient quotient; when that is not a
/// finite sum the leading-term ratio is used instead, which still cancels
/// the valuation-relevant leading behavior at `h` (the residue is then
/// dropped from `qbar` explicitly, keeping the support contract intact).
pub fn monomial_eliminate(
    fbar: &ClassicalPoly,
    gbar: &ClassicalPoly,
    h: &[i64],
    mode: SemiringMode,
) -> Result<Elimination> {
    fbar.check_compatible(gbar, "monomial_eliminate")?;
    if h.len() != fbar.vars() {
        return Err(Error::DimensionMismatch {
            op: "monomial_eliminate",
            expected: fbar.vars(),
            got: h.len(),
        });
    }
    let shown_h = || {
        let parts: Vec<String> = h.iter().map(ToString::to_string).collect();
        format!("({})", parts.join(", "))
    };
    let (Some(fh), Some(gh)) = (fbar.coeff(h), gbar.coeff(h)) else {
        return Err(Error::NotCommonMonomial {
            exponent: shown_h(),
        });
    };
    let (alpha, alpha_exact) = match fh.div_exact(gh) {
        Some(q) => (q, true),
        None => {
            let (fc, fe) = fh.leading().expect("nonzero coefficient invariant");
            let (gc, ge) = gh.leading().expect("nonzero coefficient invariant");
            (PuiseuxScalar::term(fc / gc, fe - ge), false)
        }
    };
    let dbar = fbar.sub(&gbar.scale(&alpha))?;
    let common: BTreeSet<Vec<i64>> = fbar
        .supp()
        .into_iter()
        .filter(|e| gbar.coeff(e).is_some())
        .collect();
    let qbar = dbar.filtered(|e| e != h && common.contains(e));
    let pbar = fbar.filtered(|e| qbar.coeff(e).is_none());
    let p = tropicalize_poly(&pbar, mode)?;
    let q = if qbar.is_zero() {
        None
    } else {
        Some(tropicalize_poly(&qbar, mode)?)
    };
    Ok(Elimination {
        p,
        q,
        pbar,
        qbar,
        dbar,
        alpha,
        alpha_exact,
    })
}
