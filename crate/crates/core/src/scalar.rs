//! Layered scalars: tangible max-plus values paired with a sorting layer.
//!
//! A scalar is `value^[layer]`. Multiplication adds values (max-plus product)
//! and multiplies layers; addition keeps the strictly larger value outright
//! and, on a value tie, keeps the value while *adding* the layers. Layer 1
//! elements are tangible, everything reachable from a layer by adding another
//! layer is ghost. The three `SemiringMode`s fix which layers exist and how
//! their sums and products normalize.

use crate::error::{Error, Result};
use crate::Rat;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Which sorting semiring the layers live in.
///
/// * `MaxPlus` — layers are `{1}`; the scalars collapse to the ordinary
///   max-plus semiring (`1+1 = 1`, `1·1 = 1`).
/// * `Supertropical` — layers are `{1, ∞}`; any layer sum or product that
///   would exceed 1 normalizes to ∞, so `a + a = a^[∞]`, the classical ghost.
/// * `Layered` — layers are the exact rationals `≥ 1` together with ∞; sums
///   and products are computed exactly and ∞ absorbs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemiringMode {
    MaxPlus,
    Supertropical,
    Layered,
}

impl SemiringMode {
    pub fn name(self) -> &'static str {
        match self {
            SemiringMode::MaxPlus => "maxplus",
            SemiringMode::Supertropical => "supertropical",
            SemiringMode::Layered => "layered",
        }
    }
}

impl fmt::Display for SemiringMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A sorting layer: a finite rational `≥ 1` or ∞.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Layer {
    Finite(Rat),
    Infinite,
}

impl Layer {
    pub fn one() -> Layer {
        Layer::Finite(Rat::one())
    }

    pub fn finite(q: Rat) -> Layer {
        Layer::Finite(q)
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Layer::Finite(q) if q.is_one())
    }

    /// Checks the layer is a member of the mode's sorting semiring.
    pub fn valid_in(&self, mode: SemiringMode) -> bool {
        match (mode, self) {
            (SemiringMode::MaxPlus, l) => l.is_one(),
            (SemiringMode::Supertropical, Layer::Finite(q)) => q.is_one(),
            (SemiringMode::Supertropical, Layer::Infinite) => true,
            (SemiringMode::Layered, Layer::Finite(q)) => *q >= Rat::one(),
            (SemiringMode::Layered, Layer::Infinite) => true,
        }
    }

    /// Layer addition under the mode's normalization.
    pub fn add(&self, other: &Layer, mode: SemiringMode) -> Layer {
        match mode {
            // 1 + 1 = 1: the idempotent sorting semiring.
            SemiringMode::MaxPlus => Layer::one(),
            // Any sum leaves {1}, so it normalizes to ∞.
            SemiringMode::Supertropical => Layer::Infinite,
            SemiringMode::Layered => match (self, other) {
                (Layer::Finite(a), Layer::Finite(b)) => Layer::Finite(a + b),
                _ => Layer::Infinite,
            },
        }
    }

    /// Layer multiplication under the mode's normalization.
    pub fn mul(&self, other: &Layer, mode: SemiringMode) -> Layer {
        match mode {
            SemiringMode::MaxPlus => Layer::one(),
            SemiringMode::Supertropical => {
                if self.is_one() && other.is_one() {
                    Layer::one()
                } else {
                    Layer::Infinite
                }
            }
            SemiringMode::Layered => match (self, other) {
                (Layer::Finite(a), Layer::Finite(b)) => Layer::Finite(a * b),
                _ => Layer::Infinite,
            },
        }
    }

    /// Layer raised to a nonnegative integer power.
    pub fn pow_u32(&self, n: u32, mode: SemiringMode) -> Layer {
        if n == 0 {
            return Layer::one();
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.mul(self, mode);
        }
        acc
    }

    /// Total order on layers: finite by value, ∞ on top. This is the order
    /// used by the ghost tests, not a semiring operation.
    pub fn cmp_layer(&self, other: &Layer) -> Ordering {
        match (self, other) {
            (Layer::Finite(a), Layer::Finite(b)) => a.cmp(b),
            (Layer::Finite(_), Layer::Infinite) => Ordering::Less,
            (Layer::Infinite, Layer::Finite(_)) => Ordering::Greater,
            (Layer::Infinite, Layer::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Layer::Finite(q) => write!(f, "{}", q),
            Layer::Infinite => f.write_str("inf"),
        }
    }
}

/// Is `k` an `ell`-ghost layer, i.e. does some `p` in the mode's sorting
/// semiring satisfy `ell + p = k`?
///
/// In MaxPlus every layer is 1-ghost (1+1 = 1); in Supertropical only ∞ is
/// ghost over anything; in Layered a finite `k` is `ell`-ghost exactly when
/// `k ≥ ell + 1`, and ∞ is ghost over everything.
pub fn is_ell_ghost(k: &Layer, ell: &Layer, mode: SemiringMode) -> bool {
    match mode {
        SemiringMode::MaxPlus => true, // k = ell = 1 and 1 + 1 = 1
        SemiringMode::Supertropical => matches!(k, Layer::Infinite),
        SemiringMode::Layered => match (k, ell) {
            (Layer::Infinite, _) => true,
            (Layer::Finite(_), Layer::Infinite) => false,
            (Layer::Finite(k), Layer::Finite(ell)) => k - ell >= Rat::one(),
        },
    }
}

/// Ordering of two scalars under the layer-blind ν-comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NuOrder {
    Less,
    Equivalent,
    Greater,
}

/// A layered scalar: `Bottom` is the optional adjoined zero (never stored in
/// polynomials), everything else is a tangible value with a layer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LayeredScalar {
    Bottom,
    Elem { value: Rat, layer: Layer },
}

impl LayeredScalar {
    /// Checked constructor: rejects layers outside the mode.
    pub fn new(value: Rat, layer: Layer, mode: SemiringMode) -> Result<LayeredScalar> {
        if !layer.valid_in(mode) {
            return Err(Error::InvalidLayer {
                layer: layer.to_string(),
                mode: mode.name().to_string(),
            });
        }
        Ok(LayeredScalar::Elem { value, layer })
    }

    /// Tangible scalar `value^[1]`.
    pub fn tangible(value: Rat) -> LayeredScalar {
        LayeredScalar::Elem {
            value,
            layer: Layer::one(),
        }
    }

    /// Ghost `value^[∞]`.
    pub fn ghost(value: Rat) -> LayeredScalar {
        LayeredScalar::Elem {
            value,
            layer: Layer::Infinite,
        }
    }

    /// The multiplicative unit `0^[1]`.
    pub fn unit() -> LayeredScalar {
        LayeredScalar::tangible(Rat::zero())
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, LayeredScalar::Bottom)
    }

    pub fn is_tangible(&self) -> bool {
        matches!(self, LayeredScalar::Elem { layer, .. } if layer.is_one())
    }

    /// True when the sort exceeds 1 (the value is "ghosted" to some degree).
    pub fn is_ghostly(&self) -> bool {
        matches!(self, LayeredScalar::Elem { layer, .. } if !layer.is_one())
    }

    pub fn value(&self) -> Option<&Rat> {
        match self {
            LayeredScalar::Bottom => None,
            LayeredScalar::Elem { value, .. } => Some(value),
        }
    }

    /// The sort map `s`: the layer of a non-Bottom scalar.
    pub fn sort(&self) -> Option<&Layer> {
        match self {
            LayeredScalar::Bottom => None,
            LayeredScalar::Elem { layer, .. } => Some(layer),
        }
    }

    /// Layer-blind comparison. `Bottom` compares below everything.
    pub fn nu_compare(&self, other: &LayeredScalar) -> NuOrder {
        match (self, other) {
            (LayeredScalar::Bottom, LayeredScalar::Bottom) => NuOrder::Equivalent,
            (LayeredScalar::Bottom, _) => NuOrder::Less,
            (_, LayeredScalar::Bottom) => NuOrder::Greater,
            (LayeredScalar::Elem { value: a, .. }, LayeredScalar::Elem { value: b, .. }) => {
                match a.cmp(b) {
                    Ordering::Less => NuOrder::Less,
                    Ordering::Equal => NuOrder::Equivalent,
                    Ordering::Greater => NuOrder::Greater,
                }
            }
        }
    }

    pub fn nu_equivalent(&self, other: &LayeredScalar) -> bool {
        self.nu_compare(other) == NuOrder::Equivalent
    }

    /// Semiring addition: strict ν-max wins outright; a value tie keeps the
    /// value and adds the layers.
    pub fn add(&self, other: &LayeredScalar, mode: SemiringMode) -> LayeredScalar {
        match (self, other) {
            (LayeredScalar::Bottom, x) | (x, LayeredScalar::Bottom) => x.clone(),
            (
                LayeredScalar::Elem { value: a, layer: k },
                LayeredScalar::Elem { value: b, layer: l },
            ) => match a.cmp(b) {
                Ordering::Greater => self.clone(),
                Ordering::Less => other.clone(),
                Ordering::Equal => LayeredScalar::Elem {
                    value: a.clone(),
                    layer: k.add(l, mode),
                },
            },
        }
    }

    /// Semiring multiplication: values add, layers multiply. `Bottom`
    /// absorbs.
    pub fn mul(&self, other: &LayeredScalar, mode: SemiringMode) -> LayeredScalar {
        match (self, other) {
            (LayeredScalar::Bottom, _) | (_, LayeredScalar::Bottom) => LayeredScalar::Bottom,
            (
                LayeredScalar::Elem { value: a, layer: k },
                LayeredScalar::Elem { value: b, layer: l },
            ) => LayeredScalar::Elem {
                value: a + b,
                layer: k.mul(l, mode),
            },
        }
    }

    /// Multiplicative inverse; only tangible scalars are invertible.
    pub fn inverse(&self) -> Result<LayeredScalar> {
        match self {
            LayeredScalar::Elem { value, layer } if layer.is_one() => {
                Ok(LayeredScalar::tangible(-value.clone()))
            }
            other => Err(Error::GhostRoot {
                op: "inverse",
                input: other.to_string(),
            }),
        }
    }

    /// Raises the scalar to a rational power. Tangible scalars accept any
    /// rational exponent (the value scales exactly). Non-tangible scalars
    /// accept only nonnegative integer exponents, where the layer is raised
    /// along; anything else cannot stay inside the layer semiring.
    pub fn pow(&self, exp: &Rat, mode: SemiringMode) -> Result<LayeredScalar> {
        if exp.is_zero() {
            return Ok(LayeredScalar::unit());
        }
        match self {
            LayeredScalar::Bottom => Ok(LayeredScalar::Bottom),
            LayeredScalar::Elem { value, layer } => {
                if layer.is_one() {
                    Ok(LayeredScalar::tangible(value * exp))
                } else if exp.is_integer() && exp.is_positive() {
                    let n = u32::try_from(exp.to_integer()).map_err(|_| {
                        Error::RationalPowerOfGhost {
                            exponent: exp.to_string(),
                            entry: self.to_string(),
                        }
                    })?;
                    Ok(LayeredScalar::Elem {
                        value: value * exp,
                        layer: layer.pow_u32(n, mode),
                    })
                } else {
                    Err(Error::RationalPowerOfGhost {
                        exponent: exp.to_string(),
                        entry: self.to_string(),
                    })
                }
            }
        }
    }

    /// Exact `m`-th root of a tangible scalar (the 1-divisible closure).
    pub fn nth_root(&self, m: u32) -> Result<LayeredScalar> {
        assert!(m >= 1, "nth_root: m must be at least 1");
        match self {
            LayeredScalar::Elem { value, layer } if layer.is_one() => {
                Ok(LayeredScalar::tangible(value / Rat::from_integer(m.into())))
            }
            other => Err(Error::GhostRoot {
                op: "nth_root",
                input: other.to_string(),
            }),
        }
    }

    /// The surpassing relation `self ⊨ other`: equality, or `self` is
    /// `other` plus something ghost over `other`'s sort.
    ///
    /// Closed form: `a ⊨ b` iff `a = b`, or `a >ν b` with `s(a)` an
    /// `s(b)`-ghost, or `a ≅ν b` with `s(a) = s(b) + p` for some `s(b)`-ghost
    /// layer `p` in the mode.
    pub fn surpasses(&self, other: &LayeredScalar, mode: SemiringMode) -> bool {
        if self == other {
            return true;
        }
        match (self, other) {
            // a = Bottom + c forces c = a, and c must be ghost over the zero:
            // only ghost layers surpass Bottom.
            (LayeredScalar::Elem { layer, .. }, LayeredScalar::Bottom) => {
                is_ell_ghost(layer, &Layer::one(), mode)
            }
            (LayeredScalar::Bottom, _) => false,
            (
                LayeredScalar::Elem {
                    value: a,
                    layer: ka,
                },
                LayeredScalar::Elem {
                    value: b,
                    layer: kb,
                },
            ) => match a.cmp(b) {
                Ordering::Less => false,
                // a = b + c forces c = a itself; its sort must be an
                // s(b)-ghost.
                Ordering::Greater => is_ell_ghost(ka, kb, mode),
                // a = b + c with c ν-equal to b: s(a) = s(b) + s(c) with s(c)
                // an s(b)-ghost.
                Ordering::Equal => match mode {
                    SemiringMode::MaxPlus => true,
                    SemiringMode::Supertropical => matches!(ka, Layer::Infinite),
                    SemiringMode::Layered => match (ka, kb) {
                        (Layer::Infinite, _) => true,
                        (Layer::Finite(_), Layer::Infinite) => false,
                        (Layer::Finite(ka), Layer::Finite(kb)) => {
                            // s(c) = ka - kb must exist in L and be ≥ kb + 1.
                            ka - kb >= kb + Rat::one()
                        }
                    },
                },
            },
        }
    }

    /// `self ⊨ other` together with ν-equivalence.
    pub fn surpasses_nu(&self, other: &LayeredScalar, mode: SemiringMode) -> bool {
        self.nu_equivalent(other) && self.surpasses(other, mode)
    }
}

impl fmt::Display for LayeredScalar {
    /// Mode-agnostic text form: `value` for tangibles, `value[layer]`
    /// otherwise. Mode-aware printing (the `v` ghost suffix) lives in
    /// [`crate::parse::print_scalar`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LayeredScalar::Bottom => f.write_str("bot"),
            LayeredScalar::Elem { value, layer } => {
                if layer.is_one() {
                    write!(f, "{}", value)
                } else {
                    write!(f, "{}[{}]", value, layer)
                }
            }
        }
    }
}
