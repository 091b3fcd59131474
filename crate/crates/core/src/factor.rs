//! Factorization, division, and the product identities that feed the
//! corner-ideal machinery: the permanent-style expansion, binomial
//! extraction, the exchange reduction step, univariate factorization over
//! the ghost extension, and residuation division with certificates.
//!
//! Nothing here guesses. Every factorization re-expands its own answer and
//! records the relation `compare_fn` actually certifies; division computes
//! the residuation quotient (the value-wise largest candidate) and then
//! reports whether the surpassing identity holds, with a counterexample
//! point when it does not.

use std::collections::BTreeSet;

use num_traits::{One, ToPrimitive, Zero};

use crate::compare::{compare_fn, compare_fn_seeded};
use crate::error::{Error, Result};
use crate::geometry::{components_univariate, envelope_vertices, hull_value_at};
use crate::poly::{ExponentMode, TropPoly};
use crate::scalar::{LayeredScalar, SemiringMode};
use crate::Rat;

/// How a re-expanded product relates to the polynomial it claims to factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// Identical term by term, layers included.
    Equal,
    /// Equal as functions up to layers (ν-equivalent everywhere).
    NuEquivalent,
    /// The expansion surpasses the input while staying ν-equivalent.
    SurpassesNu,
    /// Verification failed; nothing is claimed.
    Unfactored,
}

impl Relation {
    pub fn name(self) -> &'static str {
        match self {
            Relation::Equal => "equal",
            Relation::NuEquivalent => "nu-equivalent",
            Relation::SurpassesNu => "surpasses-nu",
            Relation::Unfactored => "unfactored",
        }
    }
}

/// A certified factorization: `unit · ∏ factorᵢ^{multᵢ}` stands in
/// `relation` to the input. Any relation other than `Unfactored` has been
/// re-checked by [`compare_fn`]; `Unfactored` carries the point where the
/// check failed when one exists.
#[derive(Debug, Clone)]
pub struct FactorizationResult {
    pub unit: LayeredScalar,
    pub factors: Vec<(TropPoly, u32)>,
    pub relation: Relation,
    pub witness: Option<Vec<Rat>>,
}

/// A residuation quotient together with its verification outcome: when
/// `verified` is false, `witness` points at a place where `quotient · f`
/// fails to surpass the dividend (if the comparison produced one).
#[derive(Debug, Clone)]
pub struct DivisionResult {
    pub quotient: TropPoly,
    pub verified: bool,
    pub witness: Option<Vec<Rat>>,
}

// ---------------------------------------------------------------------------
// The permanent-style product identity

fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Both sides of the pairwise-sum product identity: the left side is
/// `∏_{i<j} (fᵢ + fⱼ)`, the right side the factor list `g₁, …, g_{m−1}`
/// where `g_k` sums the products over all k-element subsets of the inputs
/// (the elementary symmetric pattern). With two inputs the right side is
/// the single factor `f₁ + f₂`, which equals the left side.
pub fn permanent_factors(
    fs: &[TropPoly],
    mode: SemiringMode,
) -> Result<(TropPoly, Vec<TropPoly>)> {
    if fs.len() < 2 {
        return Err(Error::TooFewPolynomials {
            op: "permanent_factors",
            needed: 2,
            got: fs.len(),
        });
    }
    for f in fs {
        if f.mode() != mode {
            return Err(Error::ModeMismatch {
                op: "permanent_factors",
                left: mode.to_string(),
                right: f.mode().to_string(),
            });
        }
    }
    let m = fs.len();
    let mut lhs: Option<TropPoly> = None;
    for i in 0..m {
        for j in i + 1..m {
            let pair = fs[i].add(&fs[j])?;
            lhs = Some(match lhs {
                None => pair,
                Some(acc) => acc.mul(&pair)?,
            });
        }
    }
    let lhs = lhs.expect("m >= 2 yields at least one pair");
    let mut rhs = Vec::with_capacity(m - 1);
    for k in 1..m {
        let mut gk: Option<TropPoly> = None;
        for subset in k_subsets(m, k) {
            let mut prod = fs[subset[0]].clone();
            for &i in &subset[1..] {
                prod = prod.mul(&fs[i])?;
            }
            gk = Some(match gk {
                None => prod,
                Some(acc) => acc.add(&prod)?,
            });
        }
        rhs.push(gk.expect("every k in 1..m has at least one subset"));
    }
    Ok((lhs, rhs))
}

/// Checks the identity behind [`permanent_factors`] and names the relation
/// between the right-side product and the left side. Formal equality of
/// essential parts is decided exactly and reported as `Equal`; otherwise
/// the product is compared pointwise. Layered-mode sampling skips corner
/// tie witnesses, where layer bookkeeping genuinely breaks the surpassing
/// relation even though it holds at all generic points.
pub fn permanent_relation(
    fs: &[TropPoly],
    mode: SemiringMode,
    seed: u64,
    samples: usize,
) -> Result<(Relation, Option<Vec<Rat>>)> {
    let (lhs, rhs) = permanent_factors(fs, mode)?;
    let mut prod = rhs[0].clone();
    for g in &rhs[1..] {
        prod = prod.mul(g)?;
    }
    // Equality as functions. With at most two layers, essentialization
    // preserves the function (ties stay ties), so equal essential parts
    // decide it. Exact layers additionally count how many monomials meet at
    // each tie, which essentialization disturbs, so only term-for-term
    // equality is conclusive there.
    let formally_equal = match mode {
        SemiringMode::Layered => lhs == prod,
        _ => lhs.essential_part() == prod.essential_part(),
    };
    if formally_equal {
        return Ok((Relation::Equal, None));
    }
    let include_ties = mode != SemiringMode::Layered;
    let cmp = compare_fn_seeded(&prod, &lhs, seed, samples, include_ties)?;
    if cmp.surpasses_nu {
        Ok((Relation::SurpassesNu, None))
    } else if cmp.nu_equal {
        Ok((Relation::NuEquivalent, None))
    } else {
        let w = cmp.not_nu_equal_at.or(cmp.not_surpasses_at);
        Ok((Relation::Unfactored, w))
    }
}

// ---------------------------------------------------------------------------
// Binomial extraction and the exchange step

/// All two-monomial subsums of `f`, in ascending lexicographic pair order.
pub fn binomials_of(f: &TropPoly) -> Result<Vec<TropPoly>> {
    let terms: Vec<(Vec<Rat>, LayeredScalar)> =
        f.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    if terms.len() < 2 {
        return Err(Error::TooFewMonomials {
            op: "binomials_of",
            needed: 2,
            got: terms.len(),
        });
    }
    let mut out = Vec::with_capacity(terms.len() * (terms.len() - 1) / 2);
    for i in 0..terms.len() {
        for j in i + 1..terms.len() {
            out.push(TropPoly::new(
                f.vars(),
                f.exponent_mode(),
                f.mode(),
                [terms[i].clone(), terms[j].clone()],
            )?);
        }
    }
    Ok(out)
}

/// The split produced by one exchange reduction: the ν-common parts of the
/// two inputs (same exponents, ν-equal coefficients, each keeping its own
/// layers) and the merged residual sum. Multiplying `exchanged` by one or
/// both common parts is the caller's move and depends on which corner-ideal
/// variant is being exercised.
#[derive(Debug, Clone)]
pub struct ExchangeStep {
    /// The common monomials with the first input's coefficients.
    pub common_p: TropPoly,
    /// The same monomials with the second input's coefficients.
    pub common_q: TropPoly,
    /// The two residuals added together.
    pub exchanged: TropPoly,
}

/// Splits `p` and `q` into their ν-common part and exchanged residuals.
/// Requires at least one ν-common monomial and support-disjoint residuals;
/// two identical inputs are rejected because both residuals degenerate to
/// nothing and there is no exchange to perform.
pub fn exchange_step(p: &TropPoly, q: &TropPoly) -> Result<ExchangeStep> {
    if p.vars() != q.vars() || p.exponent_mode() != q.exponent_mode() || p.mode() != q.mode() {
        return Err(Error::ModeMismatch {
            op: "exchange_step",
            left: format!("{} vars, {}, {}", p.vars(), p.exponent_mode().name(), p.mode()),
            right: format!("{} vars, {}, {}", q.vars(), q.exponent_mode().name(), q.mode()),
        });
    }
    let mut common: Vec<Vec<Rat>> = Vec::new();
    let mut res_p: Vec<Vec<Rat>> = Vec::new();
    for (e, c) in p.terms() {
        match q.coeff(e) {
            Some(d) if c.nu_equivalent(d) => common.push(e.clone()),
            _ => res_p.push(e.clone()),
        }
    }
    let res_q: Vec<Vec<Rat>> = q
        .terms()
        .filter(|(e, _)| !common.contains(e))
        .map(|(e, _)| e.clone())
        .collect();
    if common.is_empty() {
        return Err(Error::NoCommonPart);
    }
    if let Some(e) = res_p.iter().find(|e| res_q.contains(e)) {
        let shown: Vec<String> = e.iter().map(ToString::to_string).collect();
        return Err(Error::OverlappingResiduals {
            detail: format!("shared exponent ({})", shown.join(", ")),
        });
    }
    if res_p.is_empty() && res_q.is_empty() {
        return Err(Error::OverlappingResiduals {
            detail: "both residuals are empty".into(),
        });
    }
    let common_p = p
        .restricted_to(&common)
        .expect("common part verified nonempty");
    let common_q = q
        .restricted_to(&common)
        .expect("common part verified nonempty");
    let exchanged = match (p.restricted_to(&res_p), q.restricted_to(&res_q)) {
        (Some(a), Some(b)) => a.add(&b)?,
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => unreachable!("both-empty residuals rejected above"),
    };
    Ok(ExchangeStep {
        common_p,
        common_q,
        exchanged,
    })
}

// ---------------------------------------------------------------------------
// Univariate factorization

fn linear(emode: ExponentMode, mode: SemiringMode, constant: LayeredScalar) -> Result<TropPoly> {
    TropPoly::univariate(
        emode,
        mode,
        [
            (Rat::one(), LayeredScalar::unit()),
            (Rat::zero(), constant),
        ],
    )
}

/// `λ^ν + a`: a ghost leading coefficient over a tangible constant.
fn ghost_led_linear(emode: ExponentMode, mode: SemiringMode, a: Rat) -> Result<TropPoly> {
    TropPoly::univariate(
        emode,
        mode,
        [
            (Rat::one(), LayeredScalar::ghost(Rat::zero())),
            (Rat::zero(), LayeredScalar::tangible(a)),
        ],
    )
}

/// `λ² + b^ν λ + ab` for a bounded ghost interval `[a, b]`.
fn ghost_interval_quadratic(
    emode: ExponentMode,
    mode: SemiringMode,
    a: &Rat,
    b: &Rat,
) -> Result<TropPoly> {
    TropPoly::univariate(
        emode,
        mode,
        [
            (Rat::from_integer(2.into()), LayeredScalar::unit()),
            (Rat::one(), LayeredScalar::ghost(b.clone())),
            (Rat::zero(), LayeredScalar::tangible(a + b)),
        ],
    )
}

fn integer_multiplicity(j: &Rat) -> Option<u32> {
    if j.is_integer() {
        j.to_integer().to_u32()
    } else {
        None
    }
}

fn expand_product(
    unit: &LayeredScalar,
    factors: &[(TropPoly, u32)],
    like: &TropPoly,
) -> Result<TropPoly> {
    let mut acc = TropPoly::constant(like.vars(), like.exponent_mode(), like.mode(), unit.clone())?;
    for (g, m) in factors {
        acc = acc.mul(&g.pow(*m)?)?;
    }
    Ok(acc)
}

/// Re-expands and certifies: term-identical gives `Equal`, ν-equivalence
/// everywhere gives `NuEquivalent`, and anything weaker is reported as
/// `Unfactored` with the failing point.
fn certify(unit: LayeredScalar, factors: Vec<(TropPoly, u32)>, f: &TropPoly) -> Result<FactorizationResult> {
    let expansion = expand_product(&unit, &factors, f)?;
    if expansion == *f {
        return Ok(FactorizationResult {
            unit,
            factors,
            relation: Relation::Equal,
            witness: None,
        });
    }
    let cmp = compare_fn(&expansion, f)?;
    let (relation, witness) = if cmp.nu_equal {
        (Relation::NuEquivalent, None)
    } else {
        (Relation::Unfactored, cmp.not_nu_equal_at)
    };
    Ok(FactorizationResult {
        unit,
        factors,
        relation,
        witness,
    })
}

fn unfactored(unit: LayeredScalar) -> FactorizationResult {
    FactorizationResult {
        unit,
        factors: Vec::new(),
        relation: Relation::Unfactored,
        witness: None,
    }
}

/// Factors a tangibly spanned univariate polynomial into linear pieces:
/// the roots are the consecutive differences of the hull-completed
/// coefficient values, largest first, each repeated difference raising the
/// multiplicity, with a single monomial factor carrying the low end of the
/// exponent span. Works in the max-plus and supertropical modes. Inputs
/// whose support leaves the integers are reported `Unfactored` rather than
/// forced into a linear inventory that cannot reproduce them.
pub fn factor_univariate_tangible(f: &TropPoly) -> Result<FactorizationResult> {
    f.check_univariate("factor_univariate_tangible")?;
    if f.mode() == SemiringMode::Layered {
        return Err(Error::WrongMode {
            op: "factor_univariate_tangible",
            required: "maxplus or supertropical".into(),
            got: f.mode().to_string(),
        });
    }
    if !f.is_tangibly_spanned() {
        return Err(Error::NotTangiblySpanned {
            op: "factor_univariate_tangible",
            input: f.to_string(),
        });
    }
    let unit = f.leading().1.clone();
    let monic = f.make_monic()?;
    if monic.uni_pairs().iter().any(|(e, _)| !e.is_integer()) {
        return Ok(unfactored(unit));
    }
    let hull = envelope_vertices(&monic)?;
    let min_e = hull[0].0.to_integer().to_i64().expect("small exponent");
    let deg = hull.last().unwrap().0.to_integer().to_i64().expect("small exponent");
    let mut factors: Vec<(TropPoly, u32)> = Vec::new();
    let mut k = deg;
    while k > min_e {
        let hi = hull_value_at(&hull, &crate::rat(k)).expect("inside the span");
        let lo = hull_value_at(&hull, &crate::rat(k - 1)).expect("inside the span");
        let root = lo - hi;
        match factors.last_mut() {
            Some((g, m)) if *g.coeff(&[Rat::zero()]).expect("linear factor").value().unwrap() == root => {
                *m += 1;
            }
            _ => factors.push((
                linear(f.exponent_mode(), f.mode(), LayeredScalar::tangible(root))?,
                1,
            )),
        }
        k -= 1;
    }
    if min_e != 0 {
        factors.push((
            TropPoly::monomial(
                1,
                f.exponent_mode(),
                f.mode(),
                vec![crate::rat(min_e)],
                LayeredScalar::unit(),
            )?,
            1,
        ));
    }
    certify(unit, factors, f)
}

/// How one hull breakpoint participates in the ghost locus.
#[derive(Clone, Copy, PartialEq)]
enum BpRole {
    /// Both neighbor cells tangible: an isolated tangible corner root.
    Isolated,
    /// Inside a ghost run that is unbounded to the left.
    LeftRay,
    /// Inside a ghost run that is unbounded to the right.
    RightRay,
    /// First breakpoint of a bounded ghost run (carries the quadratic).
    Enter,
    /// Breakpoint strictly inside a bounded ghost run.
    Interior,
    /// Last breakpoint of a bounded ghost run.
    Exit,
}

/// Factors a univariate supertropical polynomial through its ghost-locus
/// inventory. Tangibly spanned inputs delegate to
/// [`factor_univariate_tangible`]. Otherwise each hull breakpoint
/// contributes by its position: isolated tangible corner roots give
/// `λ + a`, a bounded ghost interval `[a, b]` gives the quadratic
/// `λ² + b^ν λ + ab` (extra slope at its ends and any interior breakpoints
/// give tangible linear factors), and half-infinite ghost ends give
/// `λ + a^ν` on the left and `λ^ν + a` on the right, one per breakpoint
/// under the ray. The expansion is re-verified; if the inventory cannot
/// reproduce the input the result is `Unfactored`, never a silent guess.
pub fn factor_univariate_full(f: &TropPoly) -> Result<FactorizationResult> {
    f.check_univariate("factor_univariate_full")?;
    if f.mode() != SemiringMode::Supertropical {
        return Err(Error::WrongMode {
            op: "factor_univariate_full",
            required: "supertropical".into(),
            got: f.mode().to_string(),
        });
    }
    if f.is_tangibly_spanned() {
        return factor_univariate_tangible(f);
    }
    let lead_value = f.leading().1.value().expect("non-Bottom coefficient").clone();
    let unit_t = LayeredScalar::tangible(lead_value);
    if f.len() == 1 {
        // A single ghost monomial: the coefficient is the unit, the rest is
        // a monic monomial.
        let (e, c) = f.leading();
        let mut factors = Vec::new();
        if !e[0].is_zero() {
            factors.push((
                TropPoly::monomial(1, f.exponent_mode(), f.mode(), e.clone(), LayeredScalar::unit())?,
                1,
            ));
        }
        return certify(c.clone(), factors, f);
    }
    let desc = components_univariate(f)?;
    let hull = envelope_vertices(f)?;
    let ghost: Vec<bool> = desc
        .cells
        .iter()
        .map(|c| !c.interior_layer.is_one())
        .collect();
    let ncells = ghost.len();
    if ghost.iter().all(|&g| g) {
        // Ghost on the whole line: no orientation for the ray shapes.
        return Ok(unfactored(unit_t));
    }
    let nbp = desc.breakpoints.len();
    let mut role = vec![BpRole::Isolated; nbp];
    // For each Enter breakpoint, the index of its run's Exit breakpoint.
    let mut exit_of = vec![0usize; nbp];
    let mut i = 0;
    while i < ncells {
        if !ghost[i] {
            i += 1;
            continue;
        }
        let s = i;
        while i < ncells && ghost[i] {
            i += 1;
        }
        let e = i - 1;
        if s == 0 {
            for k in 0..=e {
                role[k] = BpRole::LeftRay;
            }
        } else if e == ncells - 1 {
            for k in s - 1..=e - 1 {
                role[k] = BpRole::RightRay;
            }
        } else {
            role[s - 1] = BpRole::Enter;
            exit_of[s - 1] = e;
            for k in s..e {
                role[k] = BpRole::Interior;
            }
            role[e] = BpRole::Exit;
        }
    }
    let emode = f.exponent_mode();
    let mode = f.mode();
    let mut factors: Vec<(TropPoly, u32)> = Vec::new();
    for k in 0..nbp {
        let a = &desc.breakpoints[k];
        let Some(jump) = integer_multiplicity(&(&hull[k + 1].0 - &hull[k].0)) else {
            return Ok(unfactored(unit_t));
        };
        match role[k] {
            BpRole::Isolated | BpRole::Interior => {
                factors.push((
                    linear(emode, mode, LayeredScalar::tangible(a.clone()))?,
                    jump,
                ));
            }
            BpRole::LeftRay => {
                factors.push((linear(emode, mode, LayeredScalar::ghost(a.clone()))?, jump));
            }
            BpRole::RightRay => {
                factors.push((ghost_led_linear(emode, mode, a.clone())?, jump));
            }
            BpRole::Enter => {
                let b = &desc.breakpoints[exit_of[k]];
                factors.push((ghost_interval_quadratic(emode, mode, a, b)?, 1));
                if jump > 1 {
                    factors.push((
                        linear(emode, mode, LayeredScalar::tangible(a.clone()))?,
                        jump - 1,
                    ));
                }
            }
            BpRole::Exit => {
                if jump > 1 {
                    factors.push((
                        linear(emode, mode, LayeredScalar::tangible(a.clone()))?,
                        jump - 1,
                    ));
                }
            }
        }
    }
    certify(unit_t, factors, f)
}

// ---------------------------------------------------------------------------
// Residuation division and the principal generator

/// The residuation core shared by [`l_divide`] and [`principal_generator`].
/// The dividend's tangible-span requirement is relaxed for the latter so
/// ghostly generators still receive an (honestly failing) certificate.
fn residuation_divide(g: &TropPoly, f: &TropPoly, check_dividend_span: bool) -> Result<DivisionResult> {
    g.check_univariate("l_divide")?;
    f.check_univariate("l_divide")?;
    if g.mode() != f.mode() || g.exponent_mode() != f.exponent_mode() {
        return Err(Error::ModeMismatch {
            op: "l_divide",
            left: format!("{}, {}", g.exponent_mode().name(), g.mode()),
            right: format!("{}, {}", f.exponent_mode().name(), f.mode()),
        });
    }
    if !f.is_tangibly_spanned() {
        return Err(Error::NotTangiblySpanned {
            op: "l_divide",
            input: f.to_string(),
        });
    }
    if check_dividend_span && !g.is_tangibly_spanned() {
        return Err(Error::NotTangiblySpanned {
            op: "l_divide",
            input: g.to_string(),
        });
    }
    for p in [g, f] {
        if !p.is_monic() {
            return Err(Error::NotMonic {
                op: "l_divide",
                input: p.to_string(),
            });
        }
    }
    let deg_g = g.degree()?;
    let deg_f = f.degree()?;
    if deg_f > deg_g {
        return Err(Error::DegreeOrder {
            divisor: f.to_string(),
            dividend: g.to_string(),
        });
    }
    let t = &deg_g - &deg_f;
    let hull = envelope_vertices(g)?;
    let g_min = hull[0].0.clone();
    // Candidate quotient exponents below t: differences of the two supports.
    let mut ks: BTreeSet<Rat> = BTreeSet::new();
    for (e, _) in g.terms() {
        for (j, _) in f.terms() {
            let k = &e[0] - &j[0];
            if k >= Rat::zero() && k < t {
                ks.insert(k);
            }
        }
    }
    let mut terms = vec![(t.clone(), LayeredScalar::unit())];
    for k in ks {
        // u_k is the largest value with u_k · f ≤_ν g as functions: the
        // minimum over f's monomials of the hull-completed coefficient of g
        // at the combined exponent. A combined exponent below g's span hits
        // a position where g's function imposes no finite bound from above
        // as x → −∞ other than absence, so the monomial is dropped.
        let mut bound: Option<Rat> = None;
        let mut feasible = true;
        for (j, fc) in f.terms() {
            let x = &k + &j[0];
            if x < g_min {
                feasible = false;
                break;
            }
            let cap = hull_value_at(&hull, &x).expect("x between g_min and deg g")
                - fc.value().expect("tangible divisor coefficient");
            bound = Some(match bound {
                None => cap,
                Some(b) => b.min(cap),
            });
        }
        if feasible {
            terms.push((k, LayeredScalar::tangible(bound.expect("divisor nonempty"))));
        }
    }
    let quotient = TropPoly::univariate(g.exponent_mode(), g.mode(), terms)?;
    let product = quotient.mul(f)?;
    let cmp = compare_fn(&product, g)?;
    let verified = cmp.surpasses_nu;
    let witness = if verified {
        None
    } else {
        cmp.not_surpasses_at.or(cmp.not_nu_equal_at)
    };
    Ok(DivisionResult {
        quotient,
        verified,
        witness,
    })
}

/// Divides `g` by `f` (both monic, tangibly spanned, univariate, with
/// `deg f ≤ deg g`) by max-plus residuation: the quotient is `λ^t` plus the
/// value-wise largest lower-order part `u` with `u · f ≤_ν g` as functions.
/// The forced monic head can still break the surpassing identity, so the
/// product is re-compared and `verified` reports the outcome.
pub fn l_divide(g: &TropPoly, f: &TropPoly) -> Result<DivisionResult> {
    residuation_divide(g, f, true)
}

/// Lexicographic comparison of monic coefficient sequences read from the
/// highest exponent down, an absent monomial ranking below every present
/// one. Returns true when `a` is strictly smaller.
fn lex_smaller_coeffs(a: &TropPoly, b: &TropPoly) -> bool {
    let mut es: BTreeSet<Rat> = BTreeSet::new();
    for (e, _) in a.terms() {
        es.insert(e[0].clone());
    }
    for (e, _) in b.terms() {
        es.insert(e[0].clone());
    }
    for e in es.iter().rev() {
        let key = [e.clone()];
        match (a.coeff(&key), b.coeff(&key)) {
            (None, None) => continue,
            (None, Some(_)) => return true,
            (Some(_), None) => return false,
            (Some(x), Some(y)) => {
                let (xv, yv) = (x.value().unwrap(), y.value().unwrap());
                if xv != yv {
                    return xv < yv;
                }
                match x.sort().unwrap().cmp_layer(y.sort().unwrap()) {
                    std::cmp::Ordering::Less => return true,
                    std::cmp::Ordering::Greater => return false,
                    std::cmp::Ordering::Equal => continue,
                }
            }
        }
    }
    false
}

/// Picks the candidate principal generator from a univariate generator
/// list: everything is made monic, the minimal-degree tangibly spanned
/// element wins (degree ties broken by the lexicographically smallest
/// coefficient sequence), and every element receives a division
/// certificate against the winner. An element of strictly smaller degree
/// than the winner admits no monic quotient at all; its certificate is the
/// constant-unit quotient marked unverified, with no witness point.
pub fn principal_generator(gens: &[TropPoly]) -> Result<(TropPoly, Vec<DivisionResult>)> {
    if gens.is_empty() {
        return Err(Error::TooFewPolynomials {
            op: "principal_generator",
            needed: 1,
            got: 0,
        });
    }
    for g in gens {
        g.check_univariate("principal_generator")?;
        if g.mode() != gens[0].mode() || g.exponent_mode() != gens[0].exponent_mode() {
            return Err(Error::ModeMismatch {
                op: "principal_generator",
                left: format!("{}, {}", gens[0].exponent_mode().name(), gens[0].mode()),
                right: format!("{}, {}", g.exponent_mode().name(), g.mode()),
            });
        }
    }
    let monic: Vec<TropPoly> = gens
        .iter()
        .map(|g| g.make_monic())
        .collect::<Result<_>>()?;
    let mut best: Option<usize> = None;
    for (i, m) in monic.iter().enumerate() {
        if !m.is_tangibly_spanned() {
            continue;
        }
        best = Some(match best {
            None => i,
            Some(c) => {
                let (dm, dc) = (m.degree()?, monic[c].degree()?);
                if dm < dc || (dm == dc && lex_smaller_coeffs(m, &monic[c])) {
                    i
                } else {
                    c
                }
            }
        });
    }
    let Some(ci) = best else {
        return Err(Error::NoTangibleElement);
    };
    let generator = monic[ci].clone();
    let gen_deg = generator.degree()?;
    let mut certificates = Vec::with_capacity(monic.len());
    for m in &monic {
        if m.degree()? < gen_deg {
            certificates.push(DivisionResult {
                quotient: TropPoly::constant(
                    1,
                    generator.exponent_mode(),
                    generator.mode(),
                    LayeredScalar::unit(),
                )?,
                verified: false,
                witness: None,
            });
        } else {
            certificates.push(residuation_divide(m, &generator, false)?);
        }
    }
    Ok((generator, certificates))
}
