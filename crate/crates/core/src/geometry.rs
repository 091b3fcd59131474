//! Corner supports and roots, ghost and ℓ-loci, univariate cell
//! decompositions, the binomial corner locus, corner-root search, and the
//! layer-covering test.
//!
//! Univariate machinery rests on the upper concave hull of the (exponent,
//! coefficient value) points: hull vertices are exactly the essential
//! monomials, the breakpoints between consecutive vertices are exactly the
//! corner roots, and everything else (cells, ghost components, residuation)
//! reads off that envelope.

use crate::error::{Error, Result};
use crate::feasibility::{find_point, LinIneq};
use crate::poly::TropPoly;
use crate::scalar::{Layer, LayeredScalar, NuOrder};
use crate::Rat;
use num_traits::{One, Zero};

/// The exponents of the monomials that attain the ν-maximum of `f` at the
/// point, in ascending order.
pub fn corner_support(f: &TropPoly, point: &[LayeredScalar]) -> Result<Vec<Vec<Rat>>> {
    if point.len() != f.vars() {
        return Err(Error::DimensionMismatch {
            op: "corner_support",
            expected: f.vars(),
            got: point.len(),
        });
    }
    let mut values: Vec<(Vec<Rat>, LayeredScalar)> = Vec::new();
    for (e, _) in f.terms() {
        values.push((e.clone(), f.monomial_value(e, point)?));
    }
    let max = values
        .iter()
        .map(|(_, v)| v)
        .cloned()
        .reduce(|a, b| if a.nu_compare(&b) == NuOrder::Less { b } else { a })
        .expect("nonempty polynomial");
    Ok(values
        .into_iter()
        .filter(|(_, v)| v.nu_compare(&max) == NuOrder::Equivalent)
        .map(|(e, _)| e)
        .collect())
}

/// A corner root: at least two monomials tie for the maximum.
pub fn is_corner_root(f: &TropPoly, point: &[LayeredScalar]) -> Result<bool> {
    Ok(corner_support(f, point)?.len() >= 2)
}

/// Membership in the prime corner-point ideal P_{a;corn}: the polynomials
/// with a corner root at the point.
pub fn in_corner_point_ideal(f: &TropPoly, point: &[LayeredScalar]) -> Result<bool> {
    is_corner_root(f, point)
}

/// The layering map θ_f: the sort of the evaluated value.
pub fn layering_map(f: &TropPoly, point: &[LayeredScalar]) -> Result<Layer> {
    let v = f.evaluate(point)?;
    Ok(v.sort().expect("polynomial values are never Bottom").clone())
}

/// A ghost root: the evaluated layer exceeds 1.
pub fn is_ghost_root(f: &TropPoly, point: &[LayeredScalar]) -> Result<bool> {
    Ok(!layering_map(f, point)?.is_one())
}

/// Membership in the prime ghost-point ideal P_a: the polynomials with a
/// ghost root at the point.
pub fn in_ghost_point_ideal(f: &TropPoly, point: &[LayeredScalar]) -> Result<bool> {
    is_ghost_root(f, point)
}

/// The ℓ-locus test: the evaluated layer strictly exceeds `ell`. (Note this
/// compares layers by magnitude; it is not the ℓ-ghost divisibility test.)
pub fn in_ell_locus(f: &TropPoly, point: &[LayeredScalar], ell: &Layer) -> Result<bool> {
    Ok(layering_map(f, point)?.cmp_layer(ell) == std::cmp::Ordering::Greater)
}

// ---------------------------------------------------------------------------
// Univariate envelope machinery

/// Upper concave hull of points with strictly increasing x coordinates.
/// Returns the hull vertices only (collinear interior points are dropped).
pub fn upper_concave_hull(points: &[(Rat, Rat)]) -> Vec<(Rat, Rat)> {
    debug_assert!(points.windows(2).all(|w| w[0].0 < w[1].0));
    let mut hull: Vec<(Rat, Rat)> = Vec::new();
    for p in points {
        while hull.len() >= 2 {
            let a = &hull[hull.len() - 2];
            let b = &hull[hull.len() - 1];
            // b lies on or below segment a–p when the turn a→b→p is not a
            // right turn.
            let cross = (&b.0 - &a.0) * (&p.1 - &b.1) - (&b.1 - &a.1) * (&p.0 - &b.0);
            if cross >= Rat::zero() {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p.clone());
    }
    hull
}

/// The hull's value at `x`: linear interpolation between vertices, `None`
/// outside the exponent span.
pub fn hull_value_at(hull: &[(Rat, Rat)], x: &Rat) -> Option<Rat> {
    if hull.is_empty() || *x < hull[0].0 || *x > hull.last().unwrap().0 {
        return None;
    }
    for w in hull.windows(2) {
        let (x0, y0) = &w[0];
        let (x1, y1) = &w[1];
        if x >= x0 && x <= x1 {
            let t = (x - x0) / (x1 - x0);
            return Some(y0 + (y1 - y0) * t);
        }
    }
    Some(hull.last().unwrap().1.clone())
}

/// The essentialized coefficient envelope of a univariate polynomial: the
/// upper concave hull vertices of its (exponent, coefficient value) points.
pub fn envelope_vertices(f: &TropPoly) -> Result<Vec<(Rat, Rat)>> {
    f.check_univariate("univariate envelope")?;
    let points: Vec<(Rat, Rat)> = f
        .uni_pairs()
        .into_iter()
        .map(|(e, c)| (e, c.value().expect("non-Bottom coefficient").clone()))
        .collect();
    Ok(upper_concave_hull(&points))
}

/// The corner roots of a univariate polynomial, ascending: the breakpoints
/// of its upper envelope, computed from consecutive essential exponents i, j
/// as (c_i − c_j) / (j − i).
pub fn corner_roots_univariate(f: &TropPoly) -> Result<Vec<Rat>> {
    let hull = envelope_vertices(f)?;
    Ok(hull
        .windows(2)
        .map(|w| (&w[0].1 - &w[1].1) / (&w[1].0 - &w[0].0))
        .collect())
}

/// One closed component interval of a univariate polynomial: `lo`/`hi` are
/// `None` on unbounded sides. The dominant essential exponent rules the
/// whole cell; `interior_layer` is the evaluated layer at an interior point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub lo: Option<Rat>,
    pub hi: Option<Rat>,
    pub dominant: Rat,
    pub interior_layer: Layer,
}

impl Cell {
    /// A representative interior point.
    pub fn interior_point(&self) -> Rat {
        match (&self.lo, &self.hi) {
            (None, None) => Rat::zero(),
            (None, Some(h)) => h - Rat::one(),
            (Some(l), None) => l + Rat::one(),
            (Some(l), Some(h)) => (l + h) / Rat::from_integer(2.into()),
        }
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.lo.as_ref().map(|l| l <= x).unwrap_or(true)
            && self.hi.as_ref().map(|h| x <= h).unwrap_or(true)
    }
}

/// The full cell decomposition of the line induced by a univariate
/// polynomial: sorted breakpoints and the closed cells between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDescription {
    pub breakpoints: Vec<Rat>,
    pub cells: Vec<Cell>,
}

/// Computes the component cells of a univariate polynomial.
pub fn components_univariate(f: &TropPoly) -> Result<CellDescription> {
    let hull = envelope_vertices(f)?;
    let breakpoints = corner_roots_univariate(f)?;
    let mut cells = Vec::new();
    for (i, (e, _)) in hull.iter().enumerate() {
        let lo = if i == 0 {
            None
        } else {
            Some(breakpoints[i - 1].clone())
        };
        let hi = breakpoints.get(i).cloned();
        let cell = Cell {
            lo,
            hi,
            dominant: e.clone(),
            interior_layer: Layer::one(), // filled below
        };
        cells.push(cell);
    }
    for cell in &mut cells {
        let x = cell.interior_point();
        cell.interior_layer = layering_map(f, &[LayeredScalar::tangible(x)])?;
    }
    Ok(CellDescription { breakpoints, cells })
}

/// One maximal connected component of the univariate ghost locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GhostComponent {
    Point(Rat),
    Interval(Rat, Rat),
    /// (−∞, a]
    RayLeft(Rat),
    /// [a, ∞)
    RayRight(Rat),
    Line,
}

/// The ghost locus of a univariate polynomial as maximal closed components,
/// ascending. Corner ties are ghost in the supertropical and layered modes,
/// so every breakpoint belongs; cell interiors belong when their dominant
/// coefficient is ghostly.
pub fn ghost_locus_univariate(f: &TropPoly) -> Result<Vec<GhostComponent>> {
    let desc = components_univariate(f)?;
    // Closed pieces as (lo, hi) with None for ±∞.
    let mut pieces: Vec<(Option<Rat>, Option<Rat>)> = Vec::new();
    for cell in &desc.cells {
        if !cell.interior_layer.is_one() {
            pieces.push((cell.lo.clone(), cell.hi.clone()));
        }
    }
    for x in &desc.breakpoints {
        if !layering_map(f, &[LayeredScalar::tangible(x.clone())])?.is_one() {
            pieces.push((Some(x.clone()), Some(x.clone())));
        }
    }
    // Sort with −∞ first, then merge touching closed pieces.
    pieces.sort_by(|a, b| match (&a.0, &b.0) {
        (None, None) => std::cmp::Ordering::Equal,
        (None, Some(_)) => std::cmp::Ordering::Less,
        (Some(_), None) => std::cmp::Ordering::Greater,
        (Some(x), Some(y)) => x.cmp(y),
    });
    let mut merged: Vec<(Option<Rat>, Option<Rat>)> = Vec::new();
    for piece in pieces {
        match merged.last_mut() {
            Some(last) => {
                let touches = match (&last.1, &piece.0) {
                    (None, _) => true, // previous reaches +∞: everything touches
                    (Some(_), None) => true,
                    (Some(h), Some(l)) => l <= h,
                };
                if touches {
                    last.1 = match (&last.1, &piece.1) {
                        (None, _) | (_, None) => None,
                        (Some(a), Some(b)) => Some(a.max(b).clone()),
                    };
                } else {
                    merged.push(piece);
                }
            }
            None => merged.push(piece),
        }
    }
    Ok(merged
        .into_iter()
        .map(|(lo, hi)| match (lo, hi) {
            (None, None) => GhostComponent::Line,
            (None, Some(a)) => GhostComponent::RayLeft(a),
            (Some(a), None) => GhostComponent::RayRight(a),
            (Some(a), Some(b)) => {
                if a == b {
                    GhostComponent::Point(a)
                } else {
                    GhostComponent::Interval(a, b)
                }
            }
        })
        .collect())
}

// ---------------------------------------------------------------------------
// Binomial corner locus and corner-root search

/// The corner locus of a binomial: the hyperplane ⟨normal, x⟩ = offset where
/// its two monomial values tie.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Rat>,
    pub offset: Rat,
}

impl Hyperplane {
    pub fn contains(&self, point_values: &[Rat]) -> bool {
        let lhs: Rat = self
            .normal
            .iter()
            .zip(point_values)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, t| acc + t);
        lhs == self.offset
    }
}

/// The corner locus of a two-monomial polynomial, normalized so the normal
/// is the lexicographically larger exponent minus the smaller one.
pub fn corner_locus_binomial(f: &TropPoly) -> Result<Hyperplane> {
    if f.len() != 2 {
        return Err(Error::NotBinomial {
            op: "corner_locus_binomial",
            input: f.to_string(),
        });
    }
    let terms: Vec<(&Vec<Rat>, &LayeredScalar)> = f.terms().collect();
    let (e_small, c_small) = terms[0];
    let (e_large, c_large) = terms[1];
    let normal: Vec<Rat> = e_large.iter().zip(e_small).map(|(a, b)| a - b).collect();
    let offset = c_small.value().expect("non-Bottom") - c_large.value().expect("non-Bottom");
    Ok(Hyperplane { normal, offset })
}

/// Finds a corner root of `f`: a tangible point where two essential
/// monomials tie and jointly reach the maximum.
///
/// Deterministic search: essential exponent pairs are scanned in
/// lexicographic order; for each pair the minimal-norm point of its tie
/// hyperplane is tried first, then an exact feasibility witness for "this
/// pair ties on top of everything else". The first hit wins. Feasibility of
/// some pair is guaranteed whenever at least two monomials are essential.
pub fn find_corner_root(f: &TropPoly) -> Result<Vec<Rat>> {
    let es = f.essential_part();
    let exps = es.supp();
    if exps.len() < 2 {
        return Err(Error::TooFewMonomials {
            op: "find_corner_root",
            needed: 2,
            got: exps.len(),
        });
    }
    let n = f.vars();
    let value = |e: &Vec<Rat>| -> Rat {
        es.coeff(e)
            .unwrap()
            .value()
            .expect("non-Bottom coefficient")
            .clone()
    };
    for (i, e1) in exps.iter().enumerate() {
        for e2 in exps.iter().skip(i + 1) {
            let v1 = value(e1);
            let v2 = value(e2);
            // Minimal-norm solution of ⟨e1 − e2, x⟩ = v2 − v1.
            let delta: Vec<Rat> = e1.iter().zip(e2).map(|(a, b)| a - b).collect();
            let norm2: Rat = delta.iter().map(|d| d * d).fold(Rat::zero(), |a, t| a + t);
            if !norm2.is_zero() {
                let scale = (&v2 - &v1) / norm2;
                let candidate: Vec<Rat> = delta.iter().map(|d| d * &scale).collect();
                let pt: Vec<LayeredScalar> = candidate
                    .iter()
                    .map(|v| LayeredScalar::tangible(v.clone()))
                    .collect();
                if is_corner_root(f, &pt)? {
                    return Ok(candidate);
                }
            }
            // Exact witness: the pair ties while dominating all other
            // essential monomials.
            let mut sys: Vec<LinIneq> = Vec::new();
            let dv = &v1 - &v2;
            sys.push(LinIneq::new(delta.clone(), dv.clone(), false));
            sys.push(LinIneq::new(
                delta.iter().map(|d| -d.clone()).collect(),
                -dv,
                false,
            ));
            for e3 in &exps {
                if e3 == e1 || e3 == e2 {
                    continue;
                }
                sys.push(LinIneq::new(
                    e1.iter().zip(e3).map(|(a, b)| a - b).collect(),
                    &v1 - value(e3),
                    false,
                ));
            }
            if let Some(w) = find_point(&sys, n) {
                let pt: Vec<LayeredScalar> = w
                    .iter()
                    .map(|v| LayeredScalar::tangible(v.clone()))
                    .collect();
                debug_assert!(is_corner_root(f, &pt)?);
                return Ok(w);
            }
        }
    }
    unreachable!("two essential monomials always tie somewhere")
}

// ---------------------------------------------------------------------------
// Covering

/// Per-cell outcome of the covering test.
#[derive(Debug, Clone)]
pub struct CellCover {
    pub cell: Cell,
    /// Index into the generator list of a generator whose layering map stays
    /// at or below f's throughout the cell.
    pub covering_gen: Option<usize>,
    /// When none covers: for each generator, a point in the cell where it
    /// fails.
    pub failures: Vec<(usize, Rat)>,
}

/// Result of [`is_covered_univariate`].
#[derive(Debug, Clone)]
pub struct CoverReport {
    pub covered: bool,
    pub cells: Vec<CellCover>,
}

/// Checks whether, on every component cell of `f`, some generator `g` keeps
/// θ_g ≤ θ_f across the whole cell. Exact: layers are piecewise constant
/// between cell endpoints and the generator's own corner roots, so checking
/// those points plus midpoints (and a point beyond, on rays) decides each
/// cell.
pub fn is_covered_univariate(f: &TropPoly, gens: &[TropPoly]) -> Result<CoverReport> {
    f.check_univariate("is_covered_univariate")?;
    for g in gens {
        if g.vars() != 1 || g.mode() != f.mode() {
            return Err(Error::ModeMismatch {
                op: "is_covered_univariate",
                left: format!("{} vars, {}", f.vars(), f.mode()),
                right: format!("{} vars, {}", g.vars(), g.mode()),
            });
        }
    }
    let desc = components_univariate(f)?;
    let mut report = CoverReport {
        covered: true,
        cells: Vec::new(),
    };
    for cell in &desc.cells {
        let mut cover = CellCover {
            cell: cell.clone(),
            covering_gen: None,
            failures: Vec::new(),
        };
        for (gi, g) in gens.iter().enumerate() {
            let pts = cell_check_points(cell, g)?;
            let mut failed_at: Option<Rat> = None;
            for x in &pts {
                let tf = layering_map(f, &[LayeredScalar::tangible(x.clone())])?;
                let tg = layering_map(g, &[LayeredScalar::tangible(x.clone())])?;
                if tg.cmp_layer(&tf) == std::cmp::Ordering::Greater {
                    failed_at = Some(x.clone());
                    break;
                }
            }
            match failed_at {
                None => {
                    cover.covering_gen = Some(gi);
                    break;
                }
                Some(x) => cover.failures.push((gi, x)),
            }
        }
        if cover.covering_gen.is_none() {
            report.covered = false;
        }
        report.cells.push(cover);
    }
    Ok(report)
}

/// The finite point set that decides layer comparisons on one cell: cell
/// endpoints, the generator's corner roots inside the cell, midpoints
/// between consecutive chosen points, and one point beyond each unbounded
/// side.
fn cell_check_points(cell: &Cell, g: &TropPoly) -> Result<Vec<Rat>> {
    let mut anchors: Vec<Rat> = Vec::new();
    if let Some(l) = &cell.lo {
        anchors.push(l.clone());
    }
    if let Some(h) = &cell.hi {
        if Some(h) != cell.lo.as_ref() {
            anchors.push(h.clone());
        }
    }
    for r in corner_roots_univariate(g)? {
        if cell.contains(&r) && !anchors.contains(&r) {
            anchors.push(r);
        }
    }
    anchors.sort();
    let mut pts: Vec<Rat> = Vec::new();
    if anchors.is_empty() {
        pts.push(Rat::zero());
        return Ok(pts);
    }
    if cell.lo.is_none() {
        pts.push(anchors[0].clone() - Rat::one());
    }
    for (i, a) in anchors.iter().enumerate() {
        if i > 0 {
            pts.push((&anchors[i - 1] + a) / Rat::from_integer(2.into()));
        }
        pts.push(a.clone());
    }
    if cell.hi.is_none() {
        pts.push(anchors.last().unwrap().clone() + Rat::one());
    }
    Ok(pts)
}
