//! Binomial normal forms, the exchange-law combination, integer-lattice
//! reduction of binomial sets with multiplicative constant tracking, and
//! binomial factorization into powers of an irreducible.
//!
//! A set of monic binomials λ^e + γ spans a sublattice of exponent vectors;
//! reduction is Euclidean row elimination over that lattice, with every row
//! operation mirrored on the constants (row_i ← row_i − q·row_j makes
//! γ_i ← γ_i / γ_j^q, and negating a row inverts its constant). Rational
//! exponents are handled directly: integer-quotient Euclid on rational
//! entries terminates because all entries share a common denominator.

use crate::error::{Error, Result};
use crate::poly::{ExponentMode, TropPoly};
use crate::scalar::{LayeredScalar, NuOrder, SemiringMode};
use crate::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A monic binomial λ^e + γ with a nonzero exponent vector. The constant may
/// be ghostly (half-ghost binomials); the leading monomial is always the
/// tangible unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalBinomial {
    pub exponent: Vec<Rat>,
    pub constant: LayeredScalar,
    mode: SemiringMode,
}

impl NormalBinomial {
    pub fn new(exponent: Vec<Rat>, constant: LayeredScalar, mode: SemiringMode) -> Result<Self> {
        if exponent.iter().all(|e| e.is_zero()) {
            return Err(Error::TooFewMonomials {
                op: "NormalBinomial::new",
                needed: 2,
                got: 1,
            });
        }
        debug_assert!(!constant.is_bottom());
        Ok(NormalBinomial {
            exponent,
            constant,
            mode,
        })
    }

    pub fn mode(&self) -> SemiringMode {
        self.mode
    }

    pub fn vars(&self) -> usize {
        self.exponent.len()
    }

    /// First nonzero coordinate of the exponent.
    pub fn pivot(&self) -> usize {
        self.exponent
            .iter()
            .position(|e| !e.is_zero())
            .expect("nonzero exponent vector")
    }

    /// The binomial as a polynomial, in the narrowest exponent mode that
    /// admits its exponent.
    pub fn to_poly(&self) -> TropPoly {
        let emode = if self.exponent.iter().all(|e| e.is_integer()) {
            if self.exponent.iter().all(|e| !e.is_negative()) {
                ExponentMode::Polynomial
            } else {
                ExponentMode::Laurent
            }
        } else {
            ExponentMode::Rational
        };
        TropPoly::new(
            self.exponent.len(),
            emode,
            self.mode,
            [
                (self.exponent.clone(), LayeredScalar::unit()),
                (vec![Rat::zero(); self.exponent.len()], self.constant.clone()),
            ],
        )
        .expect("normal binomial is a valid polynomial")
    }
}

impl std::fmt::Display for NormalBinomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Brings a binomial with a tangible leading coefficient to the monic form
/// λ^e + γ by dividing through by the lexicographically larger monomial:
/// e = e_large − e_small (lexicographically positive), γ = c_small / c_large.
pub fn normalize(f: &TropPoly) -> Result<NormalBinomial> {
    if f.exponent_mode() == ExponentMode::Polynomial {
        return Err(Error::WrongMode {
            op: "normalize",
            required: "laurent or rational exponents".into(),
            got: f.exponent_mode().name().into(),
        });
    }
    if f.len() != 2 {
        return Err(Error::NotBinomial {
            op: "normalize",
            input: f.to_string(),
        });
    }
    let terms: Vec<(&Vec<Rat>, &LayeredScalar)> = f.terms().collect();
    let (e_small, c_small) = terms[0];
    let (e_large, c_large) = terms[1];
    if !c_large.is_tangible() {
        return Err(Error::GhostLeading {
            coeff: c_large.to_string(),
            input: f.to_string(),
        });
    }
    let exponent: Vec<Rat> = e_large.iter().zip(e_small).map(|(a, b)| a - b).collect();
    let constant = c_small.mul(
        &c_large.inverse().expect("tangible leading"),
        f.mode(),
    );
    NormalBinomial::new(exponent, constant, f.mode())
}

/// The exchange-law combination: from λ^{e₁} + γ₁ and λ^{e₂} + γ₂ the
/// spanned set contains λ^{e₂−e₁} + γ₂/γ₁. Anti-symmetric up to inversion.
pub fn combine(b1: &NormalBinomial, b2: &NormalBinomial) -> Result<NormalBinomial> {
    if b1.mode != b2.mode || b1.vars() != b2.vars() {
        return Err(Error::ModeMismatch {
            op: "combine",
            left: format!("{} ({} vars)", b1.mode, b1.vars()),
            right: format!("{} ({} vars)", b2.mode, b2.vars()),
        });
    }
    if !b1.constant.is_tangible() {
        return Err(Error::GhostConstant {
            op: "combine",
            constant: b1.constant.to_string(),
        });
    }
    if b1.exponent == b2.exponent {
        return Err(Error::EqualExponents {
            exponent: format!("{:?}", b1.exponent.iter().map(|e| e.to_string()).collect::<Vec<_>>()),
        });
    }
    let exponent: Vec<Rat> = b2
        .exponent
        .iter()
        .zip(&b1.exponent)
        .map(|(a, b)| a - b)
        .collect();
    let constant = b2.constant.mul(
        &b1.constant.inverse().expect("tangible constant"),
        b1.mode,
    );
    NormalBinomial::new(exponent, constant, b1.mode)
}

/// Outcome status of a lattice reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenStatus {
    Proper,
    /// The spanned set contains a tangible unit, so it is everything.
    Improper,
    /// Some inputs were redundant; the residual constants witnessing each
    /// drop are recorded.
    RedundanciesDropped(Vec<LayeredScalar>),
}

/// An irredundant generator list in row-echelon form (pivot columns strictly
/// increasing, pivots positive), plus its properness status.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub generators: Vec<NormalBinomial>,
    pub status: GenStatus,
}

/// Classifies a residual constant γ left by a zero exponent row, i.e. the
/// content of the degenerate binomial 1 + γ. Returns `true` if it may be
/// dropped (redundant or absorbed), `false` if it makes the set improper.
fn residual_is_droppable(gamma: &LayeredScalar) -> bool {
    let v = gamma.value().expect("non-Bottom constant");
    if v.is_zero() {
        // ν-unit: a plain redundancy.
        return true;
    }
    // A ghost above the unit is absorbed; anything else yields a tangible
    // unit in the spanned set.
    gamma.is_ghostly() && v.is_positive()
}

/// Reduces a list of tangibly spanned binomials to at most n generators in
/// row-echelon form over the exponent lattice. Every elimination step is
/// mirrored multiplicatively on the constants. Zero rows leave residual
/// constants 1 + γ which are dropped when redundant or ghost-absorbed, and
/// flag the set improper when tangible and non-unit.
pub fn reduce(bins: Vec<NormalBinomial>, mode: SemiringMode) -> GeneratorSet {
    debug_assert!(bins.iter().all(|b| b.mode == mode));
    debug_assert!(bins.iter().all(|b| b.constant.is_tangible()));
    let n = match bins.first() {
        Some(b) => b.vars(),
        None => {
            return GeneratorSet {
                generators: Vec::new(),
                status: GenStatus::Proper,
            }
        }
    };
    let mut rows: Vec<(Vec<Rat>, LayeredScalar)> = bins
        .into_iter()
        .map(|b| (b.exponent, b.constant))
        .collect();
    let mut fixed = 0;
    for col in 0..n {
        loop {
            let active: Vec<usize> = (fixed..rows.len())
                .filter(|&i| !rows[i].0[col].is_zero())
                .collect();
            match active.len() {
                0 => break,
                1 => {
                    let i = active[0];
                    if rows[i].0[col].is_negative() {
                        negate_row(&mut rows[i]);
                    }
                    rows.swap(fixed, i);
                    fixed += 1;
                    break;
                }
                _ => {
                    // One Euclid pass: reduce every active row by the one
                    // with the smallest magnitude entry in this column.
                    let jmin = *active
                        .iter()
                        .min_by(|&&a, &&b| rows[a].0[col].abs().cmp(&rows[b].0[col].abs()))
                        .unwrap();
                    if rows[jmin].0[col].is_negative() {
                        negate_row(&mut rows[jmin]);
                    }
                    let (pivot_row, pivot_gamma) = rows[jmin].clone();
                    for &i in &active {
                        if i == jmin {
                            continue;
                        }
                        let q: BigInt = (&rows[i].0[col] / &pivot_row[col]).floor().to_integer();
                        if q.is_zero() {
                            continue;
                        }
                        let qr = Rat::from_integer(q);
                        for (a, b) in rows[i].0.iter_mut().zip(&pivot_row) {
                            *a -= &qr * b;
                        }
                        let shift = pivot_gamma
                            .pow(&qr, mode)
                            .expect("integer power of a tangible constant");
                        let inv = shift.inverse().expect("tangible");
                        rows[i].1 = rows[i].1.mul(&inv, mode);
                    }
                }
            }
        }
    }
    let mut dropped: Vec<LayeredScalar> = Vec::new();
    let mut improper = false;
    for (e, gamma) in rows.drain(fixed..) {
        debug_assert!(e.iter().all(|x| x.is_zero()));
        if residual_is_droppable(&gamma) {
            dropped.push(gamma);
        } else {
            improper = true;
        }
    }
    let generators = rows
        .into_iter()
        .map(|(e, c)| NormalBinomial::new(e, c, mode).expect("pivot rows are nonzero"))
        .collect();
    let status = if improper {
        GenStatus::Improper
    } else if !dropped.is_empty() {
        GenStatus::RedundanciesDropped(dropped)
    } else {
        GenStatus::Proper
    };
    GeneratorSet { generators, status }
}

fn negate_row(row: &mut (Vec<Rat>, LayeredScalar)) {
    for e in row.0.iter_mut() {
        *e = -e.clone();
    }
    row.1 = row.1.inverse().expect("tangible constant");
}

/// Decides whether a binomial lies in the set spanned by the generators:
/// solve e_b = Σ mᵢ·eᵢ in integers by forward substitution on the echelon
/// rows, then accept when the constants match ν-equivalently, or when the
/// target constant is ghostly and strictly ν-above the combination (the
/// surpassing absorption pattern).
pub fn is_generated(b: &NormalBinomial, gens: &GeneratorSet) -> bool {
    if gens.status == GenStatus::Improper {
        return true;
    }
    let mode = b.mode;
    let mut target = b.exponent.clone();
    let mut combo = LayeredScalar::unit();
    for g in gens.generators.iter().filter(|g| g.constant.is_tangible()) {
        let p = g.pivot();
        if target[p].is_zero() {
            continue;
        }
        let m = &target[p] / &g.exponent[p];
        if !m.is_integer() {
            return false;
        }
        for (t, e) in target.iter_mut().zip(&g.exponent) {
            *t -= &m * e;
        }
        combo = combo.mul(&g.constant.pow(&m, mode).expect("tangible"), mode);
    }
    if !target.iter().all(|t| t.is_zero()) {
        return false;
    }
    match b.constant.nu_compare(&combo) {
        NuOrder::Equivalent => true,
        NuOrder::Greater => b.constant.is_ghostly(),
        NuOrder::Less => false,
    }
}

/// Reduces a mixed list of binomials: tangibly spanned ones go through
/// [`reduce`]; a half-ghost (one tangible monomial, one ghostly) is oriented
/// as λ^{e_t − e_g} + c_g/c_t and kept only while nothing cheaper spans it.
/// A half-ghost is pruned when the tangible lattice reaches its exponent
/// with a combination constant c ≤_ν its ghost constant, and among equal
/// exponents only the ν-smallest ghost constant survives.
pub fn half_ghost_reduce(bins: &[TropPoly]) -> Result<GeneratorSet> {
    let mut tangible: Vec<NormalBinomial> = Vec::new();
    let mut half: Vec<NormalBinomial> = Vec::new();
    let mut mode = SemiringMode::Supertropical;
    for f in bins {
        mode = f.mode();
        if f.len() != 2 {
            return Err(Error::NotBinomial {
                op: "half_ghost_reduce",
                input: f.to_string(),
            });
        }
        let terms: Vec<(&Vec<Rat>, &LayeredScalar)> = f.terms().collect();
        let tangible_sides: Vec<usize> = (0..2).filter(|&i| terms[i].1.is_tangible()).collect();
        match tangible_sides.len() {
            2 => {
                let (e_small, c_small) = terms[0];
                let (e_large, c_large) = terms[1];
                let exponent: Vec<Rat> =
                    e_large.iter().zip(e_small).map(|(a, b)| a - b).collect();
                let constant = c_small.mul(
                    &c_large.inverse().expect("tangible"),
                    f.mode(),
                );
                tangible.push(NormalBinomial::new(exponent, constant, f.mode())?);
            }
            1 => {
                let t = tangible_sides[0];
                let g = 1 - t;
                let (e_t, c_t) = terms[t];
                let (e_g, c_g) = terms[g];
                let exponent: Vec<Rat> = e_t.iter().zip(e_g).map(|(a, b)| a - b).collect();
                let constant = c_g.mul(&c_t.inverse().expect("tangible"), f.mode());
                half.push(NormalBinomial::new(exponent, constant, f.mode())?);
            }
            _ => {
                return Err(Error::GhostLeading {
                    coeff: terms[1].1.to_string(),
                    input: f.to_string(),
                })
            }
        }
    }
    let base = reduce(tangible, mode);
    let mut dropped = match &base.status {
        GenStatus::RedundanciesDropped(d) => d.clone(),
        _ => Vec::new(),
    };
    if base.status == GenStatus::Improper {
        return Ok(base);
    }
    // Equal exponents: the ν-smallest ghost constant spans the others.
    half.sort_by(|a, b| {
        a.exponent
            .cmp(&b.exponent)
            .then_with(|| match a.constant.nu_compare(&b.constant) {
                NuOrder::Less => std::cmp::Ordering::Less,
                NuOrder::Equivalent => std::cmp::Ordering::Equal,
                NuOrder::Greater => std::cmp::Ordering::Greater,
            })
    });
    half.dedup_by(|b, a| {
        if a.exponent == b.exponent {
            dropped.push(b.constant.clone());
            true
        } else {
            false
        }
    });
    let mut survivors = base.generators.clone();
    for hb in half {
        if let Some(c) = tangible_combination(&base, &hb.exponent) {
            if c.nu_compare(&hb.constant) != NuOrder::Greater {
                dropped.push(hb.constant);
                continue;
            }
        }
        survivors.push(hb);
    }
    let status = if dropped.is_empty() {
        GenStatus::Proper
    } else {
        GenStatus::RedundanciesDropped(dropped)
    };
    Ok(GeneratorSet {
        generators: survivors,
        status,
    })
}

/// The constant of the integer combination of echelon generators reaching
/// `exponent`, when one exists.
fn tangible_combination(gens: &GeneratorSet, exponent: &[Rat]) -> Option<LayeredScalar> {
    let mut target = exponent.to_vec();
    let mut combo = LayeredScalar::unit();
    for g in &gens.generators {
        let p = g.pivot();
        if target[p].is_zero() {
            continue;
        }
        let m = &target[p] / &g.exponent[p];
        if !m.is_integer() {
            return None;
        }
        for (t, e) in target.iter_mut().zip(&g.exponent) {
            *t -= &m * e;
        }
        combo = combo.mul(&g.constant.pow(&m, g.mode).expect("tangible"), g.mode);
    }
    if target.iter().all(|t| t.is_zero()) {
        Some(combo)
    } else {
        None
    }
}

/// Factors a binomial as h · g^m: h is the common monomial (leading
/// coefficient on the smaller exponent), m is the gcd of the integer-cleared
/// exponent difference, and g takes the m-th root of the constant.
pub fn factor_binomial(b: &TropPoly) -> Result<(TropPoly, NormalBinomial, u32)> {
    if b.mode() == SemiringMode::MaxPlus {
        return Err(Error::WrongMode {
            op: "factor_binomial",
            required: "supertropical or layered".into(),
            got: b.mode().name().into(),
        });
    }
    if b.len() != 2 {
        return Err(Error::NotBinomial {
            op: "factor_binomial",
            input: b.to_string(),
        });
    }
    // The lattice normal form needs Laurent room even when the input is an
    // ordinary polynomial.
    let lifted = if b.exponent_mode() == ExponentMode::Polynomial {
        TropPoly::new(
            b.vars(),
            ExponentMode::Laurent,
            b.mode(),
            b.terms().map(|(e, c)| (e.clone(), c.clone())),
        )
        .expect("laurent admits polynomial exponents")
    } else {
        b.clone()
    };
    let nb = normalize(&lifted)?;
    let terms: Vec<(&Vec<Rat>, &LayeredScalar)> = b.terms().collect();
    let (e_small, _) = terms[0];
    let (_, c_large) = terms[1];
    let h = TropPoly::new(
        b.vars(),
        b.exponent_mode(),
        b.mode(),
        [(e_small.clone(), c_large.clone())],
    )
    .expect("monomial of the input");
    // gcd of the exponent after clearing denominators.
    let lcd: BigInt = nb
        .exponent
        .iter()
        .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
    let d: BigInt = nb
        .exponent
        .iter()
        .map(|e| (e * Rat::from_integer(lcd.clone())).to_integer())
        .fold(BigInt::zero(), |acc, x| acc.gcd(&x));
    debug_assert!(d.is_positive());
    if d.is_one() {
        return Ok((h, nb, 1));
    }
    if !nb.constant.is_tangible() {
        return Err(Error::GhostConstantRoot {
            degree: d.to_string(),
            constant: nb.constant.to_string(),
        });
    }
    let dr = Rat::from_integer(d.clone());
    let exponent: Vec<Rat> = nb.exponent.iter().map(|e| e / &dr).collect();
    let constant = nb
        .constant
        .pow(&dr.recip(), b.mode())
        .expect("tangible root");
    let g = NormalBinomial::new(exponent, constant, b.mode())?;
    let m = d.to_u32().expect("factorization multiplicity fits in u32");
    Ok((h, g, m))
}
