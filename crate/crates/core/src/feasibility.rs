//! Exact linear feasibility over the rationals by Fourier-Motzkin
//! elimination, tracking strict and non-strict inequalities separately and
//! producing a witness point on success.
//!
//! Sizes here are tiny (systems come from polynomial supports, a handful of
//! rows and at most a few variables), so the doubly exponential worst case of
//! Fourier-Motzkin is irrelevant and exactness is what matters.

use crate::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// One inequality `⟨coeffs, x⟩ + constant > 0` (strict) or `≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinIneq {
    pub coeffs: Vec<Rat>,
    pub constant: Rat,
    pub strict: bool,
}

impl LinIneq {
    pub fn new(coeffs: Vec<Rat>, constant: Rat, strict: bool) -> LinIneq {
        LinIneq {
            coeffs,
            constant,
            strict,
        }
    }

    pub fn satisfied_by(&self, x: &[Rat]) -> bool {
        let lhs: Rat = self
            .coeffs
            .iter()
            .zip(x)
            .map(|(c, v)| c * v)
            .fold(self.constant.clone(), |acc, t| acc + t);
        if self.strict {
            lhs.is_positive()
        } else {
            !lhs.is_negative()
        }
    }
}

/// Searches for a rational point satisfying every inequality. Returns a
/// witness on success, `None` when the system is infeasible.
pub fn find_point(ineqs: &[LinIneq], n: usize) -> Option<Vec<Rat>> {
    debug_assert!(ineqs.iter().all(|q| q.coeffs.len() == n));
    let witness = solve(ineqs.to_vec(), n)?;
    debug_assert!(ineqs.iter().all(|q| q.satisfied_by(&witness)));
    Some(witness)
}

/// Recursive elimination of the last variable. Each level records the
/// surviving bounds so the witness can be back-substituted on the way out.
fn solve(ineqs: Vec<LinIneq>, n: usize) -> Option<Vec<Rat>> {
    if n == 0 {
        // Only constants remain: every row must already hold at the empty
        // point.
        return if ineqs.iter().all(|q| {
            if q.strict {
                q.constant.is_positive()
            } else {
                !q.constant.is_negative()
            }
        }) {
            Some(Vec::new())
        } else {
            None
        };
    }

    let var = n - 1;
    // Bounds on x_var in terms of the remaining variables: a row
    // c·x_var + ⟨r, x'⟩ + d {>,≥} 0 with c > 0 is the lower bound
    // x_var {>,≥} −(⟨r,x'⟩+d)/c, with c < 0 an upper bound.
    let mut lowers: Vec<(Vec<Rat>, Rat, bool)> = Vec::new();
    let mut uppers: Vec<(Vec<Rat>, Rat, bool)> = Vec::new();
    let mut rest: Vec<LinIneq> = Vec::new();

    for q in &ineqs {
        let c = &q.coeffs[var];
        if c.is_zero() {
            rest.push(LinIneq::new(
                q.coeffs[..var].to_vec(),
                q.constant.clone(),
                q.strict,
            ));
            continue;
        }
        let bound_coeffs: Vec<Rat> = q.coeffs[..var].iter().map(|r| -(r / c)).collect();
        let bound_const = -(&q.constant / c);
        if c.is_positive() {
            lowers.push((bound_coeffs, bound_const, q.strict));
        } else {
            uppers.push((bound_coeffs, bound_const, q.strict));
        }
    }

    // Every (lower, upper) pair must satisfy lower < upper (or ≤ when both
    // bounds are non-strict): upper − lower {>,≥} 0.
    for (lc, ld, ls) in &lowers {
        for (uc, ud, us) in &uppers {
            let coeffs: Vec<Rat> = uc.iter().zip(lc).map(|(u, l)| u - l).collect();
            rest.push(LinIneq::new(coeffs, ud - ld, *ls || *us));
        }
    }

    let partial = solve(rest, var)?;

    // Back-substitute: evaluate the surviving bounds at the partial witness
    // and pick a value of x_var strictly inside when strictness demands it.
    let eval = |(c, d, s): &(Vec<Rat>, Rat, bool)| -> (Rat, bool) {
        let v = c
            .iter()
            .zip(&partial)
            .map(|(a, b)| a * b)
            .fold(d.clone(), |acc, t| acc + t);
        (v, *s)
    };
    let low = lowers
        .iter()
        .map(eval)
        .max_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let up = uppers
        .iter()
        .map(eval)
        .min_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));

    let value = match (low, up) {
        (None, None) => Rat::zero(),
        (Some((l, _)), None) => l + Rat::one(),
        (None, Some((u, _))) => u - Rat::one(),
        (Some((l, ls)), Some((u, us))) => {
            if l == u {
                // The eliminated pair guaranteed l ≤ u with equality only
                // when both bounds are non-strict.
                debug_assert!(!ls && !us);
                l
            } else {
                (l + u) / Rat::from_integer(2.into())
            }
        }
    };

    let mut witness = partial;
    witness.push(value);
    Some(witness)
}

/// Planar fast path used for the per-monomial domination systems of dense
/// two-variable supports, where Fourier-Motzkin's quadratic pairing of lower
/// and upper bounds is too slow. Clips a safely large box by every
/// half-plane in turn, which is linear in the row count per clip and exits
/// early once the region dies.
///
/// Only uniform systems take the fast path: all rows strict (the region must
/// end up with positive area) or all rows non-strict (any survivor, even a
/// segment or point, is a witness). Mixed systems fall back to elimination,
/// because a flat region can hide a valid witness away from the centroid.
pub fn find_point_2d(ineqs: &[LinIneq]) -> Option<Vec<Rat>> {
    debug_assert!(ineqs.iter().all(|q| q.coeffs.len() == 2));
    let all_strict = ineqs.iter().all(|q| q.strict);
    if !all_strict && !ineqs.iter().all(|q| !q.strict) {
        return find_point(ineqs, 2);
    }

    // Constant rows decide themselves; drop the vacuous ones.
    let mut rows: Vec<&LinIneq> = Vec::with_capacity(ineqs.len());
    for q in ineqs {
        if q.coeffs[0].is_zero() && q.coeffs[1].is_zero() {
            let ok = if q.strict {
                q.constant.is_positive()
            } else {
                !q.constant.is_negative()
            };
            if !ok {
                return None;
            }
        } else {
            rows.push(q);
        }
    }

    // A box certainly containing a witness whenever one exists: scale each
    // row to integer entries and bound minimal-face coordinates by Cramer
    // ratios of two such rows, whose determinants are nonzero integers. Any
    // nonempty closed region then holds a point with coordinates at most
    // 2M², and segments from it into an open region stay strictly feasible,
    // so an open region always meets the open box too.
    let mut m_bound = BigInt::from(1);
    for q in &rows {
        let l = q.coeffs[0]
            .denom()
            .lcm(q.coeffs[1].denom())
            .lcm(q.constant.denom());
        for v in [&q.coeffs[0], &q.coeffs[1], &q.constant] {
            let scaled = (v.numer() * &l / v.denom()).abs();
            if scaled > m_bound {
                m_bound = scaled;
            }
        }
    }
    let b = Rat::from_integer(BigInt::from(2) * &m_bound * &m_bound + BigInt::from(2));
    let mut poly: Vec<(Rat, Rat)> = vec![
        (-b.clone(), -b.clone()),
        (b.clone(), -b.clone()),
        (b.clone(), b.clone()),
        (-b.clone(), b),
    ];

    for q in &rows {
        poly = clip(&poly, &q.coeffs[0], &q.coeffs[1], &q.constant);
        if poly.len() < if all_strict { 3 } else { 1 } {
            return None;
        }
    }

    if all_strict {
        // Positive area is exactly strict feasibility: an interior point of
        // the clipped region satisfies every row strictly, and conversely a
        // strict point owns a neighborhood inside the region.
        let mut doubled_area = Rat::zero();
        for i in 0..poly.len() {
            let (px, py) = &poly[i];
            let (qx, qy) = &poly[(i + 1) % poly.len()];
            doubled_area += px * qy - qx * py;
        }
        if doubled_area.is_zero() {
            return None;
        }
    }

    // The vertex average carries positive weight on every vertex, so it lies
    // in the relative interior of the region: interior when the area is
    // positive, on the segment or point otherwise.
    let k = Rat::from_integer(poly.len().into());
    let cx = poly.iter().fold(Rat::zero(), |a, (x, _)| a + x) / &k;
    let cy = poly.iter().fold(Rat::zero(), |a, (_, y)| a + y) / &k;
    let witness = vec![cx, cy];
    if ineqs.iter().all(|q| q.satisfied_by(&witness)) {
        Some(witness)
    } else {
        debug_assert!(false, "clipped witness failed verification");
        find_point(ineqs, 2)
    }
}

/// One Sutherland-Hodgman pass: the part of a convex polygon inside the
/// closed half-plane w·x + d ≥ 0. Boundary vertices are kept, so degenerate
/// survivors (segments, points) remain visible to the caller.
fn clip(poly: &[(Rat, Rat)], w0: &Rat, w1: &Rat, d: &Rat) -> Vec<(Rat, Rat)> {
    let sides: Vec<Rat> = poly
        .iter()
        .map(|(x, y)| w0 * x + w1 * y + d)
        .collect();
    let mut out = Vec::with_capacity(poly.len() + 1);
    for i in 0..poly.len() {
        let j = (i + 1) % poly.len();
        let (sp, sq) = (&sides[i], &sides[j]);
        if !sp.is_negative() {
            out.push(poly[i].clone());
        }
        if (sp.is_positive() && sq.is_negative()) || (sp.is_negative() && sq.is_positive()) {
            // The edge crosses the boundary at p + t(q − p).
            let t = sp / (sp - sq);
            let (px, py) = &poly[i];
            let (qx, qy) = &poly[j];
            out.push((px + &t * (qx - px), py + &t * (qy - py)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn q(coeffs: &[i64], constant: i64, strict: bool) -> LinIneq {
        LinIneq::new(coeffs.iter().map(|&c| rat(c)).collect(), rat(constant), strict)
    }

    #[test]
    fn strict_opposites_are_infeasible() {
        // x > 0 and −x > 0
        let sys = [q(&[1], 0, true), q(&[-1], 0, true)];
        assert!(find_point(&sys, 1).is_none());
    }

    #[test]
    fn non_strict_opposites_pin_a_point() {
        // x ≥ 0 and −x ≥ 0 forces x = 0.
        let sys = [q(&[1], 0, false), q(&[-1], 0, false)];
        assert_eq!(find_point(&sys, 1), Some(vec![rat(0)]));
    }

    #[test]
    fn open_interval_witness_is_interior() {
        // 1 < x < 2
        let sys = [q(&[1], -1, true), q(&[-1], 2, true)];
        let w = find_point(&sys, 1).unwrap();
        assert!(w[0] > rat(1) && w[0] < rat(2));
    }

    #[test]
    fn mixed_strictness_infeasible_on_touching_bounds() {
        // x ≥ 1 and x < 1
        let sys = [q(&[1], -1, false), q(&[-1], 1, true)];
        assert!(find_point(&sys, 1).is_none());
    }

    #[test]
    fn two_variable_wedge() {
        // y > x, y > −x, y < 1
        let sys = [
            q(&[-1, 1], 0, true),
            q(&[1, 1], 0, true),
            q(&[0, -1], 1, true),
        ];
        let w = find_point(&sys, 2).unwrap();
        assert!(w[1] > w[0] && w[1] > -w[0].clone() && w[1] < rat(1));
    }

    #[test]
    fn unbounded_directions_get_default_values() {
        let sys = [q(&[1, 0], 5, false)];
        let w = find_point(&sys, 2).unwrap();
        assert!(sys[0].satisfied_by(&w));
    }

    #[test]
    fn planar_clip_handles_flat_and_empty_regions() {
        // A strict pencil through the origin has a fat sector.
        let sector = [q(&[1, 0], 0, true), q(&[0, 1], 0, true), q(&[1, 1], 0, true)];
        assert!(find_point_2d(&sector).is_some());

        // Antiparallel strict rows leave a line: zero area, no witness.
        let line = [q(&[1, 0], 0, true), q(&[-1, 0], 0, true)];
        assert!(find_point_2d(&line).is_none());

        // The same rows non-strictly keep the line as a witness source.
        let closed_line = [q(&[1, 0], 0, false), q(&[-1, 0], 0, false)];
        let w = find_point_2d(&closed_line).unwrap();
        assert!(w[0].is_zero());

        // Contradictory slabs die outright.
        let empty = [q(&[1, 0], -1, false), q(&[-1, 0], 0, false)];
        assert!(find_point_2d(&empty).is_none());

        // Constant rows decide themselves.
        assert!(find_point_2d(&[q(&[0, 0], -1, false)]).is_none());
        assert!(find_point_2d(&[q(&[0, 0], 1, true), q(&[1, 1], 3, true)]).is_some());

        // No rows at all: everything is feasible.
        assert!(find_point_2d(&[]).is_some());
    }

    #[test]
    fn planar_clip_agrees_with_elimination() {
        use rand::{Rng, SeedableRng};
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for trial in 0..400 {
            let strict = trial % 2 == 0;
            let rows = r.gen_range(1..=7);
            let sys: Vec<LinIneq> = (0..rows)
                .map(|_| {
                    q(
                        &[r.gen_range(-4..=4), r.gen_range(-4..=4)],
                        r.gen_range(-6..=6),
                        strict,
                    )
                })
                .collect();
            let fast = find_point_2d(&sys);
            let slow = find_point(&sys, 2);
            assert_eq!(
                fast.is_some(),
                slow.is_some(),
                "trial {trial}: {sys:?} fast {fast:?} slow {slow:?}"
            );
            if let Some(w) = fast {
                assert!(sys.iter().all(|c| c.satisfied_by(&w)));
            }
        }
    }
}
