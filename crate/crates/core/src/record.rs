//! Stable serde record forms for polynomials and scalars.
//!
//! The text grammar is for humans; these records are the machine channel.
//! Every rational is carried as a lowest-terms string (`"7"`, `"-5/2"`),
//! the infinite layer as `"inf"`, and the additive bottom as the value
//! `"-inf"`. Converting a value to its record and back is bit-exact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parse::parse_rat;
use crate::poly::{ExponentMode, TropPoly};
use crate::puiseux::{ClassicalPoly, PuiseuxScalar};
use crate::scalar::{Layer, LayeredScalar, SemiringMode};
use crate::Rat;

/// One layered scalar: `value` is a rational string (or `"-inf"` for the
/// additive bottom, in which case `layer` is ignored), `layer` a rational
/// string or `"inf"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarRecord {
    pub value: String,
    pub layer: String,
}

/// One tropical monomial: exponent strings (one per variable) and its
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialRecord {
    pub exponents: Vec<String>,
    pub coefficient: ScalarRecord,
}

/// A tropical polynomial: variable count, exponent mode (`"poly"`,
/// `"laurent"`, `"rational"`), semiring mode (`"maxplus"`,
/// `"supertropical"`, `"layered"`), and the monomial list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub vars: usize,
    pub exponents: String,
    pub semiring: String,
    pub monomials: Vec<MonomialRecord>,
}

/// One classical monomial: integer exponents and the coefficient as a list
/// of `(c, t-exponent)` rational-string pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalMonomialRecord {
    pub exponents: Vec<i64>,
    pub coefficient: Vec<(String, String)>,
}

/// A classical polynomial over Puiseux coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalPolyRecord {
    pub vars: usize,
    pub monomials: Vec<ClassicalMonomialRecord>,
}

fn malformed(msg: String) -> Error {
    Error::Syntax { pos: 0, msg }
}

fn rat_from_field(s: &str, field: &str) -> Result<Rat> {
    parse_rat(s).map_err(|_| malformed(format!("{field}: expected a rational, got '{s}'")))
}

pub fn scalar_record(a: &LayeredScalar) -> ScalarRecord {
    match a {
        LayeredScalar::Bottom => ScalarRecord {
            value: "-inf".to_string(),
            layer: "1".to_string(),
        },
        LayeredScalar::Elem { value, layer } => ScalarRecord {
            value: value.to_string(),
            layer: match layer {
                Layer::Finite(q) => q.to_string(),
                Layer::Infinite => "inf".to_string(),
            },
        },
    }
}

pub fn scalar_from_record(rec: &ScalarRecord, mode: SemiringMode) -> Result<LayeredScalar> {
    if rec.value == "-inf" {
        return Ok(LayeredScalar::Bottom);
    }
    let value = rat_from_field(&rec.value, "scalar value")?;
    let layer = if rec.layer == "inf" {
        Layer::Infinite
    } else {
        Layer::finite(rat_from_field(&rec.layer, "scalar layer")?)
    };
    LayeredScalar::new(value, layer, mode)
}

pub fn poly_record(f: &TropPoly) -> PolyRecord {
    PolyRecord {
        vars: f.vars(),
        exponents: f.exponent_mode().name().to_string(),
        semiring: f.mode().name().to_string(),
        monomials: f
            .terms()
            .map(|(e, c)| MonomialRecord {
                exponents: e.iter().map(ToString::to_string).collect(),
                coefficient: scalar_record(c),
            })
            .collect(),
    }
}

fn emode_from_name(name: &str) -> Result<ExponentMode> {
    match name {
        "poly" => Ok(ExponentMode::Polynomial),
        "laurent" => Ok(ExponentMode::Laurent),
        "rational" => Ok(ExponentMode::Rational),
        other => Err(malformed(format!(
            "exponent mode must be poly, laurent, or rational, got '{other}'"
        ))),
    }
}

fn mode_from_name(name: &str) -> Result<SemiringMode> {
    match name {
        "maxplus" => Ok(SemiringMode::MaxPlus),
        "supertropical" => Ok(SemiringMode::Supertropical),
        "layered" => Ok(SemiringMode::Layered),
        other => Err(malformed(format!(
            "semiring mode must be maxplus, supertropical, or layered, got '{other}'"
        ))),
    }
}

pub fn poly_from_record(rec: &PolyRecord) -> Result<TropPoly> {
    let emode = emode_from_name(&rec.exponents)?;
    let mode = mode_from_name(&rec.semiring)?;
    let terms = rec
        .monomials
        .iter()
        .map(|m| {
            let exps = m
                .exponents
                .iter()
                .map(|s| rat_from_field(s, "exponent"))
                .collect::<Result<Vec<_>>>()?;
            Ok((exps, scalar_from_record(&m.coefficient, mode)?))
        })
        .collect::<Result<Vec<_>>>()?;
    TropPoly::new(rec.vars, emode, mode, terms)
}

pub fn classical_record(f: &ClassicalPoly) -> ClassicalPolyRecord {
    ClassicalPolyRecord {
        vars: f.vars(),
        monomials: f
            .terms()
            .map(|(e, c)| ClassicalMonomialRecord {
                exponents: e.clone(),
                coefficient: c
                    .terms()
                    .iter()
                    .map(|(c, e)| (c.to_string(), e.to_string()))
                    .collect(),
            })
            .collect(),
    }
}

pub fn classical_from_record(rec: &ClassicalPolyRecord) -> Result<ClassicalPoly> {
    let terms = rec
        .monomials
        .iter()
        .map(|m| {
            let coeff = PuiseuxScalar::new(
                m.coefficient
                    .iter()
                    .map(|(c, e)| {
                        Ok((
                            rat_from_field(c, "Puiseux coefficient")?,
                            rat_from_field(e, "t-exponent")?,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?,
            );
            Ok((m.exponents.clone(), coeff))
        })
        .collect::<Result<Vec<_>>>()?;
    ClassicalPoly::new(rec.vars, terms)
}
