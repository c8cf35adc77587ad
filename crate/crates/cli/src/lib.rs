//! Report assembly for the `gvcenter` binary.
//!
//! Every command returns a [`serde_json::Value`]; text output is a flat
//! `path = value` rendering of the same document.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use gvcenter_core::blocks::{Blocks, BlocksError};
use gvcenter_core::center::{field_conductor, simples, CenterError, SimpleObject};
use gvcenter_core::classify::{
    exactness_check, muger_data, ribbon_gv_extensions, BalancedBraidedData, ClassifyError,
};
use gvcenter_core::cocycles::CocycleError;
use gvcenter_core::config::{Command, ConfigError, Format, Session};
use gvcenter_core::groups::GroupError;
use gvcenter_core::gvduality::{gv_dual, GvError, GvStructure};
use gvcenter_core::pointed::{PointedCategory, PointedError};
use gvcenter_core::scalars::RootOfUnity;

#[derive(Debug, Error)]
pub enum RunError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("genus {genus} exceeds the bound {bound}")]
    Genus { genus: u64, bound: u64 },
    #[error("verification failed: {message}")]
    Verification { message: String, datum: Value },
}

impl RunError {
    pub fn kind(&self) -> &'static str {
        match self {
            RunError::Io { .. } => "io",
            RunError::Config(e) => e.kind(),
            RunError::Unsupported(_) => "unsupported",
            RunError::Genus { .. } => "cap",
            RunError::Verification { .. } => "verification",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.kind() {
            "io" | "parse" => 2,
            "unsupported" => 3,
            "cap" => 4,
            _ => 5,
        }
    }

    fn datum(&self) -> Value {
        match self {
            RunError::Io { path, .. } => json!({ "path": path }),
            RunError::Config(e) => config_datum(e),
            RunError::Unsupported(_) => Value::Null,
            RunError::Genus { genus, bound } => json!({ "genus": genus, "bound": bound }),
            RunError::Verification { datum, .. } => datum.clone(),
        }
    }

    /// Machine-readable error object.
    pub fn to_json(&self) -> Value {
        json!({
            "error": {
                "kind": self.kind(),
                "code": self.exit_code(),
                "message": self.to_string(),
                "datum": self.datum(),
            }
        })
    }
}

fn config_datum(e: &ConfigError) -> Value {
    match e {
        ConfigError::Cap { what, value, cap } => json!({ "what": what, "value": value, "cap": cap }),
        ConfigError::Cocycle(CocycleError::CocycleIdentity(a, b, c, d)) => json!({ "quadruple": [a, b, c, d] }),
        ConfigError::Cocycle(CocycleError::NotNormalized(a, b, c)) => json!({ "triple": [a, b, c] }),
        ConfigError::Cocycle(CocycleError::WrongSize { expected, got }) => json!({ "expected": expected, "got": got }),
        ConfigError::Group(GroupError::NotAssociative(a, b, c)) => json!({ "triple": [a, b, c] }),
        ConfigError::Group(GroupError::NotAHomomorphism(x, g)) => json!({ "pair": [x, g] }),
        ConfigError::Group(GroupError::OutOfRange { row, col, value }) => json!({ "row": row, "col": col, "value": value }),
        ConfigError::Group(GroupError::NoInverse(g)) => json!({ "element": g }),
        ConfigError::Pivotal(PointedError::NotMonoidal(a, b)) => json!({ "pair": [a, b] }),
        _ => Value::Null,
    }
}

fn center_error(e: CenterError) -> RunError {
    match e {
        CenterError::Unsupported(m) => RunError::Unsupported(m),
        CenterError::Relation { g, h, h2 } => RunError::Verification {
            message: e.to_string(),
            datum: json!({ "triple": [g, h, h2] }),
        },
        CenterError::NotInvertible { g, h } | CenterError::Shape { g, h } => RunError::Verification {
            message: e.to_string(),
            datum: json!({ "pair": [g, h] }),
        },
        e => RunError::Verification { message: e.to_string(), datum: Value::Null },
    }
}

fn gv_error(e: GvError) -> RunError {
    match e {
        GvError::Center(e) => center_error(e),
        GvError::Unmatched(label) => RunError::Verification {
            message: format!("no simple object matches the dual of {label}"),
            datum: json!({ "simple": label }),
        },
        GvError::Inconsistent(report) => RunError::Verification {
            message: "sphericity conditions disagree".into(),
            datum: serde_json::to_value(report).expect("serializable"),
        },
        e => RunError::Verification { message: e.to_string(), datum: Value::Null },
    }
}

fn blocks_error(e: BlocksError) -> RunError {
    match e {
        BlocksError::Center(e) => center_error(e),
        BlocksError::Gv(e) => gv_error(e),
        BlocksError::GenusBound { genus, bound } => RunError::Genus { genus, bound },
        e => RunError::Verification { message: e.to_string(), datum: Value::Null },
    }
}

fn classify_error(e: ClassifyError) -> RunError {
    match e {
        ClassifyError::Center(e) => center_error(e),
        ClassifyError::Gv(e) => gv_error(e),
        ClassifyError::Blocks(e) => blocks_error(e),
        e => RunError::Verification { message: e.to_string(), datum: Value::Null },
    }
}

#[derive(Serialize)]
struct InputSummary {
    group_order: usize,
    abelian: bool,
    elements: Vec<String>,
    lambda_trivial: bool,
    lambda_order: u64,
    d_generators: Vec<String>,
    d_values: Vec<RootOfUnity>,
    field_conductor: u64,
}

fn input_summary(session: &Session) -> InputSummary {
    let cat = &session.category;
    let g = cat.group();
    InputSummary {
        group_order: g.order(),
        abelian: g.is_abelian(),
        elements: g.names().to_vec(),
        lambda_trivial: cat.lambda().is_trivial(),
        lambda_order: cat.lambda().order(),
        d_generators: session.d_generators.iter().map(|&x| g.name(x).to_string()).collect(),
        d_values: session.d_generators.iter().map(|&x| cat.d().value(x)).collect(),
        field_conductor: field_conductor(cat),
    }
}

fn big(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

/// Lazily computed data shared between commands.
struct Context {
    category: Arc<PointedCategory>,
    gv: Option<GvStructure>,
}

impl Context {
    fn gv(&mut self) -> Result<&GvStructure, RunError> {
        if self.gv.is_none() {
            let list = simples(&self.category).map_err(center_error)?;
            self.gv = Some(GvStructure::from_simples(&self.category, list).map_err(gv_error)?);
        }
        Ok(self.gv.as_ref().expect("just computed"))
    }
}

fn verify(ctx: &mut Context) -> Result<Value, RunError> {
    let cat = ctx.category.clone();
    for g in cat.group().elements() {
        let (a, b) = cat.zigzags(g);
        if !a.is_one() || !b.is_one() {
            return Err(RunError::Verification { message: format!("zigzag fails at {g}"), datum: json!({ "element": g }) });
        }
    }
    let gv = ctx.gv()?;
    gv.dualizing.verify_half_braiding().map_err(center_error)?;
    let explicit: Vec<&SimpleObject> = gv.simples.iter().filter(|s| s.object.is_some()).collect();
    let mut checked = 1usize;
    for s in &explicit {
        let obj = s.object.as_ref().expect("filtered");
        let tag = |e: CenterError| match center_error(e) {
            RunError::Verification { message, datum } => {
                RunError::Verification { message, datum: json!({ "simple": s.label, "at": datum }) }
            }
            other => other,
        };
        obj.verify_half_braiding().map_err(tag)?;
        obj.rigid_dual().verify_half_braiding().map_err(tag)?;
        gv_dual(obj).verify_half_braiding().map_err(tag)?;
        checked += 3;
        for t in &explicit {
            obj.tensor(t.object.as_ref().expect("filtered")).map_err(center_error)?.verify_half_braiding().map_err(tag)?;
            checked += 1;
        }
    }
    Ok(json!({
        "cocycle": "ok",
        "pivotality": "ok",
        "zigzags": "ok",
        "half_braidings_checked": checked,
        "explicit_simples": explicit.len(),
        "character_only_simples": gv.simples.len() - explicit.len(),
    }))
}

fn simples_report(ctx: &mut Context) -> Result<Value, RunError> {
    let cat = ctx.category.clone();
    let gv = ctx.gv()?;
    let list: Vec<Value> = gv
        .simples
        .iter()
        .map(|s| {
            json!({
                "label": s.label,
                "grade": cat.group().name(s.grade),
                "dim": s.dim,
                "theta": s.theta,
                "explicit": s.object.is_some(),
            })
        })
        .collect();
    Ok(json!({ "count": list.len(), "simples": list }))
}

fn spherical_report(ctx: &mut Context) -> Result<Value, RunError> {
    let gv = ctx.gv()?;
    let ribbon = gv.verify_ribbon();
    if let Some(bad) = ribbon.entries.iter().find(|e| !e.ribbon_ok) {
        return Err(RunError::Verification {
            message: format!("ribbon condition fails on {}", bad.label),
            datum: serde_json::to_value(bad).expect("serializable"),
        });
    }
    let r = gv.sphericity_report().map_err(gv_error)?;
    Ok(json!({
        "dualizing_is_unit": r.dualizing_is_unit,
        "base_spherical": r.base_spherical,
        "duality_is_rigid": r.duality_is_rigid,
        "rigid_ribbon_modular": r.rigid_ribbon_modular,
        "consistent": r.consistent(),
        "spherical": r.spherical(),
        "ribbon": true,
    }))
}

fn blocks_report(ctx: &mut Context, genus: u64, bound: u64) -> Result<Value, RunError> {
    if genus > bound {
        return Err(RunError::Genus { genus, bound });
    }
    let cat = ctx.category.clone();
    let gv = ctx.gv()?;
    let blocks = Blocks::new(&cat, &gv.simples).map_err(blocks_error)?;
    let table: Vec<Value> = blocks.table(genus).iter().map(big).collect();
    Ok(json!({
        "max_genus": genus,
        "alpha": blocks.ring.labels[blocks.alpha],
        "table": table,
    }))
}

fn classify_report(ctx: &mut Context) -> Result<Value, RunError> {
    let gv = ctx.gv()?;
    let data = BalancedBraidedData::from_gv(gv).map_err(classify_error)?;
    let muger = muger_data(&data);
    let extensions = ribbon_gv_extensions(&data);
    let mut out = json!({
        "muger": muger,
        "extensions": extensions,
    });
    if data.dims.iter().all(|&d| d == 1) {
        out["exactness"] = serde_json::to_value(exactness_check(&data).map_err(classify_error)?).expect("serializable");
    } else {
        out["exactness"] = Value::Null;
        out["exactness_note"] = json!("simples of dimension > 1: automorphism groups not computed");
    }
    Ok(out)
}

/// Runs the configured command and returns the report document.
pub fn run(session: &Session) -> Result<Value, RunError> {
    let cfg = &session.config;
    let mut ctx = Context { category: session.category.clone(), gv: None };
    let mut doc = json!({
        "command": cfg.command,
        "input": input_summary(session),
    });
    let (genus, bound) = (cfg.genus, cfg.caps.genus);
    match cfg.command {
        Command::Verify => doc["verify"] = verify(&mut ctx)?,
        Command::Simples => doc["simples"] = simples_report(&mut ctx)?,
        Command::Spherical => doc["spherical"] = spherical_report(&mut ctx)?,
        Command::Blocks => doc["blocks"] = blocks_report(&mut ctx, genus, bound)?,
        Command::Classify => doc["classify"] = classify_report(&mut ctx)?,
        Command::Report => {
            doc["verify"] = verify(&mut ctx)?;
            doc["simples"] = simples_report(&mut ctx)?;
            doc["spherical"] = spherical_report(&mut ctx)?;
            doc["blocks"] = blocks_report(&mut ctx, genus, bound)?;
            doc["classify"] = classify_report(&mut ctx)?;
        }
    }
    Ok(doc)
}

/// Flat `path = value` lines, one per leaf, keys in sorted order.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    flatten(v, String::new(), &mut out);
    out
}

fn flatten(v: &Value, path: String, out: &mut String) {
    let join = |key: &str| if path.is_empty() { key.to_string() } else { format!("{path}.{key}") };
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, x) in map {
                flatten(x, join(k), out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, x) in items.iter().enumerate() {
                flatten(x, format!("{path}[{i}]"), out);
            }
        }
        Value::String(s) => out.push_str(&format!("{path} = {s}\n")),
        other => out.push_str(&format!("{path} = {other}\n")),
    }
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")),
        Format::Text => to_text(v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering_is_flat() {
        let v = json!({ "b": [1, { "c": "x" }], "a": true, "e": [] });
        assert_eq!(to_text(&v), "a = true\nb[0] = 1\nb[1].c = x\ne = []\n");
    }

    #[test]
    fn exit_codes_are_distinct() {
        let errors = [
            RunError::Config(ConfigError::Parse("x".into())),
            RunError::Unsupported("x".into()),
            RunError::Genus { genus: 3, bound: 2 },
            RunError::Verification { message: "x".into(), datum: Value::Null },
        ];
        let codes: Vec<u8> = errors.iter().map(RunError::exit_code).collect();
        assert_eq!(codes, vec![2, 3, 4, 5]);
        assert_eq!(errors[2].to_json()["error"]["datum"]["bound"], 2);
    }

    #[test]
    fn large_block_dimensions_become_strings() {
        assert_eq!(big(&BigUint::from(7u8)), json!(7));
        assert_eq!(big(&(BigUint::from(u64::MAX) + 1u8)), json!("18446744073709551616"));
    }
}
