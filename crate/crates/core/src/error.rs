//! Error type shared by every operation in the crate.

use thiserror::Error;

/// All domain errors. Every variant names the operation's complaint and the
/// offending input so CLI users can see what to fix.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mode mismatch in {op}: {left} vs {right}")]
    ModeMismatch {
        op: &'static str,
        left: String,
        right: String,
    },

    #[error("layer {layer} is not legal in {mode} mode")]
    InvalidLayer { layer: String, mode: String },

    #[error("{op}: expected a tangible (layer-1) scalar, got {input}")]
    GhostRoot { op: &'static str, input: String },

    #[error("evaluate: exponent {exponent} cannot be applied to non-tangible point entry {entry}")]
    RationalPowerOfGhost { exponent: String, entry: String },

    #[error("{op}: dimension mismatch, expected {expected} coordinates, got {got}")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("{op}: exponent {exponent} is not legal in {mode} exponent mode")]
    ExponentOutOfMode {
        op: &'static str,
        exponent: String,
        mode: String,
    },

    #[error("{op}: polynomial must be univariate, it has {vars} variables")]
    NotUnivariate { op: &'static str, vars: usize },

    #[error("{op}: operation requires {required} mode, polynomial is in {got}")]
    WrongMode {
        op: &'static str,
        required: String,
        got: String,
    },

    #[error("{op}: input {input} is not a binomial (needs exactly two monomials)")]
    NotBinomial { op: &'static str, input: String },

    #[error("normalize: leading coefficient {coeff} of {input} is not tangible")]
    GhostLeading { coeff: String, input: String },

    #[error("combine: binomials share the exponent {exponent}")]
    EqualExponents { exponent: String },

    #[error("{op}: constant {constant} must be tangible here")]
    GhostConstant { op: &'static str, constant: String },

    #[error("{op}: input {input} must be tangibly spanned")]
    NotTangiblySpanned { op: &'static str, input: String },

    #[error("{op}: polynomial {input} must be monic (leading coefficient the unit)")]
    NotMonic { op: &'static str, input: String },

    #[error("l_divide: divisor degree {divisor} exceeds dividend degree {dividend}")]
    DegreeOrder { divisor: String, dividend: String },

    #[error("principal_generator: no tangibly spanned candidate among the generators")]
    NoTangibleElement,

    #[error("exchange_step: inputs share no nu-common monomial")]
    NoCommonPart,

    #[error("exchange_step: residuals must occupy disjoint supports ({detail})")]
    OverlappingResiduals { detail: String },

    #[error("monomial_eliminate: exponent {exponent} is not a common monomial of both inputs")]
    NotCommonMonomial { exponent: String },

    #[error("valuation: the zero Puiseux series has no valuation")]
    ZeroHasNoValuation,

    #[error("factor_binomial: cannot take a {degree}th root of the non-tangible constant {constant}")]
    GhostConstantRoot { degree: String, constant: String },

    #[error("path_point: parameter {t} lies outside [0, 1]")]
    PathParameterOutOfRange { t: String },

    #[error("{op}: polynomial must have at least {needed} monomials, got {got}")]
    TooFewMonomials {
        op: &'static str,
        needed: usize,
        got: usize,
    },

    #[error("{op}: need at least {needed} polynomials, got {got}")]
    TooFewPolynomials {
        op: &'static str,
        needed: usize,
        got: usize,
    },

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("mode violation at byte {pos}: {msg}")]
    ModeViolation { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
