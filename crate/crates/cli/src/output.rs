//! Rendering helpers shared by every subcommand: human text on one side,
//! stable JSON records on the other. The JSON side reuses the serde record
//! forms from the kernel so file input and `--format structured` output
//! speak the same schema.

use serde_json::{json, Value};
use supertrop::geometry::{Cell, CoverReport, GhostComponent};
use supertrop::parse::print_poly;
use supertrop::record::{classical_record, poly_record, scalar_record};
use supertrop::puiseux::{ClassicalPoly, PuiseuxScalar};
use supertrop::scalar::{Layer, LayeredScalar};
use supertrop::{Rat, TropPoly};

pub fn rat_str(q: &Rat) -> String {
    q.to_string()
}

/// A point or witness as a parenthesized coordinate tuple.
pub fn point_str(p: &[Rat]) -> String {
    let coords: Vec<String> = p.iter().map(rat_str).collect();
    format!("({})", coords.join(", "))
}

pub fn layer_str(k: &Layer) -> String {
    match k {
        Layer::Finite(q) => q.to_string(),
        Layer::Infinite => "inf".to_string(),
    }
}

/// A closed interval with `None` as the unbounded side, in the usual
/// half-open bracket notation.
pub fn range_str(lo: &Option<Rat>, hi: &Option<Rat>) -> String {
    let left = match lo {
        Some(a) => format!("[{a}"),
        None => "(-inf".to_string(),
    };
    let right = match hi {
        Some(b) => format!("{b}]"),
        None => "inf)".to_string(),
    };
    format!("{left}, {right}")
}

pub fn ghost_component_str(c: &GhostComponent) -> String {
    match c {
        GhostComponent::Point(a) => format!("{a}"),
        GhostComponent::Interval(a, b) => format!("[{a}, {b}]"),
        GhostComponent::RayLeft(a) => format!("(-inf, {a}]"),
        GhostComponent::RayRight(a) => format!("[{a}, inf)"),
        GhostComponent::Line => "(-inf, inf)".to_string(),
    }
}

// --------------------------------------------------------------------------
// JSON builders

pub fn poly_json(f: &TropPoly) -> Value {
    serde_json::to_value(poly_record(f)).expect("record types serialize")
}

pub fn scalar_json(c: &LayeredScalar) -> Value {
    serde_json::to_value(scalar_record(c)).expect("record types serialize")
}

pub fn classical_json(f: &ClassicalPoly) -> Value {
    serde_json::to_value(classical_record(f)).expect("record types serialize")
}

pub fn rat_json(q: &Rat) -> Value {
    Value::String(rat_str(q))
}

pub fn point_json(p: &[Rat]) -> Value {
    Value::Array(p.iter().map(rat_json).collect())
}

pub fn opt_point_json(p: &Option<Vec<Rat>>) -> Value {
    match p {
        Some(p) => point_json(p),
        None => Value::Null,
    }
}

pub fn exps_json(list: &[Vec<Rat>]) -> Value {
    Value::Array(list.iter().map(|e| point_json(e)).collect())
}

pub fn layer_json(k: &Layer) -> Value {
    Value::String(layer_str(k))
}

pub fn opt_rat_json(q: &Option<Rat>) -> Value {
    match q {
        Some(q) => rat_json(q),
        None => Value::Null,
    }
}

pub fn ghost_component_json(c: &GhostComponent) -> Value {
    match c {
        GhostComponent::Point(a) => json!({ "kind": "point", "at": rat_str(a) }),
        GhostComponent::Interval(a, b) => {
            json!({ "kind": "interval", "lo": rat_str(a), "hi": rat_str(b) })
        }
        GhostComponent::RayLeft(a) => json!({ "kind": "ray-left", "hi": rat_str(a) }),
        GhostComponent::RayRight(a) => json!({ "kind": "ray-right", "lo": rat_str(a) }),
        GhostComponent::Line => json!({ "kind": "line" }),
    }
}

pub fn cell_json(cell: &Cell) -> Value {
    json!({
        "lo": opt_rat_json(&cell.lo),
        "hi": opt_rat_json(&cell.hi),
        "dominant": rat_str(&cell.dominant),
        "layer": layer_str(&cell.interior_layer),
    })
}

pub fn cover_json(report: &CoverReport, gens: &[TropPoly]) -> Value {
    let cells: Vec<Value> = report
        .cells
        .iter()
        .map(|c| {
            json!({
                "lo": opt_rat_json(&c.cell.lo),
                "hi": opt_rat_json(&c.cell.hi),
                "generator": c.covering_gen,
                "failures": c
                    .failures
                    .iter()
                    .map(|(gi, x)| json!({ "generator": gi, "at": rat_str(x) }))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "covered": report.covered,
        "generators": gens.iter().map(|g| print_poly(g)).collect::<Vec<_>>(),
        "cells": cells,
    })
}

pub fn puiseux_json(s: &PuiseuxScalar) -> Value {
    Value::Array(
        s.terms()
            .iter()
            .map(|(c, e)| json!([rat_str(c), rat_str(e)]))
            .collect(),
    )
}
