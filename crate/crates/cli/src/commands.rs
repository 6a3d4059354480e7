//! Commands over a resolved zeta system.

use std::io::Write;
use std::sync::Arc;

use num_complex::Complex64;
use partial_zeta::continuation::{
    boundary_report, composite_feq_residual, counting_functions, feq_residual, nested_composite_residual,
    overlap_residual, GFunction, PartialLogSource, PartialZetaEvaluator, SingularityCatalog, TruncatedPartial,
};
use partial_zeta::euler::{truncated_zeta, truncated_zeta_pn, Truncated};
use partial_zeta::graph::{ihara_det, RationalG};
use partial_zeta::group::{truncated_z, zp_factorization_residual};
use partial_zeta::numberfield::{find_singularities, ClosedFormG, TailCorrectedPartial};
use partial_zeta::primes::{divisors, is_prime};
use partial_zeta::{TruncationPolicy, ZetaError, VERSION};
use serde_json::{json, Value};

use crate::fmt::{cjson, f15, parse_complex, r15, Grid};
use crate::system::{Resolved, SystemArgs};
use crate::{CliError, OutArgs};

/// Rounds every float in a JSON tree to 15 significant digits.
fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                *v = json!(r15(x));
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_floats),
        Value::Object(o) => o.values_mut().for_each(round_floats),
        _ => {}
    }
}

pub fn config(command: &str, system: Option<Value>, params: Value) -> Value {
    json!({ "command": command, "system": system, "params": params })
}

fn system_json(r: &Resolved) -> Option<Value> {
    serde_json::to_value(r.spec()).ok()
}

fn emit(out: &OutArgs, text: &str) -> Result<(), CliError> {
    match &out.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| CliError::Zeta(ZetaError::Io(e)))
        }
    }
}

pub fn emit_json(out: &OutArgs, config: Value, result: Value) -> Result<(), CliError> {
    let mut doc = json!({ "version": VERSION, "config": config, "result": result });
    round_floats(&mut doc);
    let text = serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n";
    emit(out, &text)
}

/// CSV preceded by `#` lines carrying the version and the resolved config.
fn emit_csv(out: &OutArgs, config: Value, header: &str, rows: &[String]) -> Result<(), CliError> {
    let mut config = config;
    round_floats(&mut config);
    let mut text = format!("# version: {VERSION}\n# config: {config}\n{header}\n");
    for row in rows {
        text.push_str(row);
        text.push('\n');
    }
    emit(out, &text)
}

fn points(raw: &[String]) -> Result<Vec<Complex64>, CliError> {
    raw.iter().map(|t| parse_complex(t).map_err(CliError::Config)).collect()
}

fn require_cutoff(cutoff: f64) -> Result<(), CliError> {
    if cutoff.is_nan() || cutoff < 0.0 {
        return Err(CliError::Config(format!("cutoff {cutoff} must be non-negative")));
    }
    Ok(())
}

fn truncated_json(t: &Truncated) -> Value {
    json!({ "log": cjson(t.log), "tail": t.tail, "certified": t.certified, "factors": t.factors })
}

pub fn sieve(args: &SystemArgs, cutoff: f64, out: &OutArgs) -> Result<(), CliError> {
    require_cutoff(cutoff)?;
    let r = args.resolve()?;
    let primes = r.system().primes(cutoff)?;
    let rows: Vec<String> =
        primes.iter().map(|p| format!("{},{},{},{}", p.id, f15(p.norm), p.frob_class, p.frob_order)).collect();
    let cfg = config("sieve", system_json(&r), json!({ "cutoff": cutoff }));
    emit_csv(out, cfg, "id,norm,frob_class,frob_order", &rows)
}

pub fn eval(args: &SystemArgs, raw: &[String], cutoff: f64, out: &OutArgs) -> Result<(), CliError> {
    require_cutoff(cutoff)?;
    let r = args.resolve()?;
    let sys = r.system();
    let m = r.group_order();
    let pol = TruncationPolicy::new(cutoff);
    let mut results = Vec::new();
    for s in points(raw)? {
        if s.re <= 1.0 {
            return Err(ZetaError::Domain(format!("Euler products need Re s > 1, got {s}")).into());
        }
        let mut partial = serde_json::Map::new();
        for n in divisors(m as u64) {
            partial.insert(n.to_string(), truncated_json(&truncated_zeta_pn(sys, n as u32, s, &pol)?));
        }
        let z = if m >= 2 { Some(truncated_json(&truncated_z(sys, s, &pol)?)) } else { None };
        let reference = match &r {
            Resolved::Abelian(a) => Some(ClosedFormG::new(a).log_zeta_p(s)?),
            Resolved::Graph(vg, _) => {
                let u = (-s * (vg.q_g() as f64).ln()).exp();
                Some(-ihara_det(vg.base())?.eval_complex(u).ln())
            }
            Resolved::Catalog(_) => None,
        };
        results.push(json!({
            "s": cjson(s),
            "zeta_p": truncated_json(&truncated_zeta(sys, s, &pol)?),
            "z_p": z,
            "zeta_p_n": partial,
            "reference_log_zeta_p": reference.map(cjson),
        }));
    }
    let cfg = config("eval", system_json(&r), json!({ "s": raw, "cutoff": cutoff }));
    emit_json(out, cfg, json!({ "points": results }))
}

/// `(q, g, ζ_{P_q} source)` for the systems where `g` is known beyond `Re s > 1`.
fn continuation_parts(
    r: &Resolved,
    cutoff: f64,
    height: f64,
) -> Result<(u32, Arc<dyn GFunction>, Arc<dyn PartialLogSource>), CliError> {
    let q = r.group_order();
    if !is_prime(q as u64) {
        return Err(CliError::Config(format!("continuation needs #G prime, got {q}")));
    }
    match r {
        Resolved::Abelian(a) => Ok((q, Arc::new(ClosedFormG::new(a)), Arc::new(TailCorrectedPartial::new(a, cutoff)?))),
        Resolved::Graph(vg, sys) => Ok((
            q,
            Arc::new(RationalG::new(vg)?.with_catalog(height)?),
            Arc::new(TruncatedPartial::new(sys.clone(), TruncationPolicy::new(cutoff))),
        )),
        Resolved::Catalog(_) => Err(CliError::Config("the catalog backend has no continuation of g".into())),
    }
}

pub fn continue_cmd(
    args: &SystemArgs,
    raw: &[String],
    grid: Option<&str>,
    depth: u32,
    cutoff: f64,
    out: &OutArgs,
) -> Result<(), CliError> {
    require_cutoff(cutoff)?;
    let r = args.resolve()?;
    let grid = grid.map(Grid::parse).transpose().map_err(CliError::Config)?;
    let pts = match &grid {
        Some(g) => g.points(),
        None => points(raw)?,
    };
    let q = r.group_order() as f64;
    let abscissa = q.powi(-(depth as i32));
    if let Some(bad) = pts.iter().find(|s| s.re <= abscissa) {
        return Err(ZetaError::Domain(format!("Re s = {} is not above 1/q^r = {abscissa}", bad.re)).into());
    }
    let max_im = pts.iter().map(|s| s.im.abs()).fold(0.0, f64::max);
    let (q, g, base) = continuation_parts(&r, cutoff, (max_im * abscissa.recip()).max(1.0) + 1.0)?;
    let ev = PartialZetaEvaluator::new(q, depth, g, base)?;
    let values = pts.iter().map(|&s| ev.evaluate(s)).collect::<Result<Vec<_>, _>>()?;
    match grid {
        Some(g) => {
            let rows: Vec<String> = values
                .iter()
                .map(|v| format!("{},{},{},{}", f15(v.s.re), f15(v.s.im), f15(v.log_abs), f15(v.arg)))
                .collect();
            let cfg = config(
                "continue",
                system_json(&r),
                json!({ "grid": { "re": [g.re.0, g.re.1, g.re.2], "im": [g.im.0, g.im.1, g.im.2] }, "depth": depth, "cutoff": cutoff }),
            );
            emit_csv(out, cfg, "re,im,log_abs,arg", &rows)
        }
        None => {
            let results: Vec<Value> = values
                .iter()
                .map(|v| {
                    json!({
                        "s": cjson(v.s),
                        "log": cjson(v.log),
                        "log_abs": v.log_abs,
                        "arg": v.arg,
                        "value": cjson(v.value),
                        "tail": v.tail,
                        "certified": v.certified,
                    })
                })
                .collect();
            let cfg = config("continue", system_json(&r), json!({ "s": raw, "depth": depth, "cutoff": cutoff }));
            emit_json(out, cfg, json!({ "q": q, "abscissa": abscissa, "points": results }))
        }
    }
}

pub fn feq_check(
    args: &SystemArgs,
    raw: &[String],
    cutoff: f64,
    tolerance: f64,
    out: &OutArgs,
) -> Result<(), CliError> {
    require_cutoff(cutoff)?;
    if !(tolerance > 0.0) {
        return Err(CliError::Config(format!("tolerance {tolerance} must be positive")));
    }
    let r = args.resolve()?;
    let sys = r.system();
    let m = r.group_order();
    if m < 2 {
        return Err(CliError::Config("the functional equations need #G >= 2".into()));
    }
    let g: Option<Box<dyn GFunction>> = match &r {
        Resolved::Abelian(a) if is_prime(m as u64) => Some(Box::new(ClosedFormG::new(a))),
        Resolved::Graph(vg, _) => Some(Box::new(RationalG::new(vg)?)),
        _ => None,
    };
    let mut pass = true;
    let mut max_residual: f64 = 0.0;
    let mut results = Vec::new();
    for s in points(raw)? {
        let mut residuals = serde_json::Map::new();
        if is_prime(m as u64) {
            residuals.insert("prime_order".into(), json!(feq_residual(sys, s, cutoff)?));
        } else {
            residuals.insert("composite".into(), json!(composite_feq_residual(sys, s, cutoff)?));
            residuals.insert("nested".into(), json!(nested_composite_residual(sys, s, cutoff)?));
        }
        residuals.insert("factorization".into(), json!(zp_factorization_residual(sys, s, cutoff)?));
        for v in residuals.values() {
            let x = v.as_f64().unwrap_or(f64::INFINITY);
            max_residual = max_residual.max(x);
            pass &= x <= tolerance;
        }
        let overlap = match &g {
            Some(g) => {
                let (res, bound) = overlap_residual(g.as_ref(), sys, s, cutoff)?;
                json!({ "residual": res, "truncation_bound": bound, "within_bound": res <= bound + tolerance })
            }
            None => Value::Null,
        };
        results.push(json!({ "s": cjson(s), "residuals": residuals, "overlap": overlap }));
    }
    let cfg = config("feq-check", system_json(&r), json!({ "s": raw, "cutoff": cutoff, "tolerance": tolerance }));
    emit_json(out, cfg, json!({ "points": results, "max_residual": max_residual, "pass": pass }))?;
    if pass {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn catalog_of(r: &Resolved, height: f64) -> Result<SingularityCatalog, CliError> {
    if !(height > 0.0 && height.is_finite()) {
        return Err(CliError::Config(format!("height {height} must be positive")));
    }
    match r {
        Resolved::Abelian(a) => Ok(find_singularities(&ClosedFormG::new(a), height)?),
        Resolved::Graph(vg, _) => Ok(RationalG::new(vg)?.singularities(height)?),
        Resolved::Catalog(_) => Err(CliError::Config("the catalog backend has no singularity data".into())),
    }
}

fn points_json(cat: &SingularityCatalog) -> Vec<Value> {
    cat.points().iter().map(|p| json!({ "re": p.re, "im": p.im, "order": p.order })).collect()
}

pub fn zeros(args: &SystemArgs, height: f64, csv: bool, out: &OutArgs) -> Result<(), CliError> {
    let r = args.resolve()?;
    let cat = catalog_of(&r, height)?;
    let cfg = config("zeros", system_json(&r), json!({ "height": height }));
    if csv {
        let rows: Vec<String> =
            cat.points().iter().map(|p| format!("{},{},{}", f15(p.re), f15(p.im), p.order)).collect();
        return emit_csv(out, cfg, "re,im,order", &rows);
    }
    emit_json(out, cfg, json!({ "complete_up_to": cat.complete_up_to(), "points": points_json(&cat) }))
}

pub fn boundary(
    args: &SystemArgs,
    height: f64,
    windows: usize,
    delta: f64,
    alpha: f64,
    k_max: u32,
    out: &OutArgs,
) -> Result<(), CliError> {
    let r = args.resolve()?;
    let q = r.group_order();
    if !is_prime(q as u64) {
        return Err(CliError::Config(format!("the boundary criterion needs #G prime, got {q}")));
    }
    let cat = catalog_of(&r, height)?;
    let report = boundary_report(&cat, q, height, windows, delta)?;
    let counts = counting_functions(&cat, q, height, alpha, k_max)?;
    let cfg = config(
        "boundary",
        system_json(&r),
        json!({ "height": height, "windows": windows, "delta": delta, "alpha": alpha, "k_max": k_max }),
    );
    let report = serde_json::to_value(&report).map_err(|e| CliError::Zeta(e.into()))?;
    let counts = serde_json::to_value(counts).map_err(|e| CliError::Zeta(e.into()))?;
    emit_json(out, cfg, json!({ "verdict": report["verdict"].clone(), "report": report, "counts": counts }))
}
