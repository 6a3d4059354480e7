//! `pzeta graph …`: exact polynomial and series computations on a voltage graph.

use std::path::PathBuf;

use clap::{Args, Subcommand};
use partial_zeta::exact::{Polynomial, PowerSeries};
use partial_zeta::graph::{
    count_cycles, ihara_det, ihara_edge, partial_zeta_series, RationalFunction, VoltageGraph, MAX_SERIES_ORDER,
};
use serde_json::{json, Value};

use crate::commands::{config, emit_json};
use crate::system::load_graph;
use crate::{CliError, OutArgs};

#[derive(Args, Debug)]
pub struct GraphArgs {
    /// Edge list: header `n q_g q_c`, then `u v [voltage]` per line.
    #[arg(long)]
    pub graph_file: PathBuf,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Subcommand, Debug)]
pub enum GraphCommand {
    /// Ihara zeta of the base graph, both determinant forms, and cycle counts.
    Ihara {
        #[command(flatten)]
        args: GraphArgs,
        /// Largest cycle length counted.
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// The derived covering graph.
    Cover {
        #[command(flatten)]
        args: GraphArgs,
    },
    /// Graph L-functions det(I - u T_χ) over ℚ(ζ_q), on the power basis.
    Lfun {
        #[command(flatten)]
        args: GraphArgs,
        /// Character index j; all nontrivial ones when omitted.
        #[arg(long)]
        index: Option<u32>,
    },
    /// The partial zeta series by direct enumeration and by the recursion.
    Partial {
        #[command(flatten)]
        args: GraphArgs,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Bass, covering and dual-route identities; exit 1 if any fails.
    Verify {
        #[command(flatten)]
        args: GraphArgs,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
}

fn poly_json(p: &Polynomial) -> Value {
    json!(p.to_strings())
}

fn series_json(s: &PowerSeries) -> Value {
    json!(s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn graph_config(command: &str, vg: &VoltageGraph, params: Value) -> Value {
    config(command, serde_json::to_value(vg.spec()).ok(), params)
}

fn check_order(order: usize) -> Result<(), CliError> {
    if order > MAX_SERIES_ORDER {
        return Err(partial_zeta::ZetaError::Budget(format!("order {order} exceeds {MAX_SERIES_ORDER}")).into());
    }
    Ok(())
}

pub fn run(command: GraphCommand) -> Result<(), CliError> {
    match command {
        GraphCommand::Ihara { args, order } => {
            check_order(order)?;
            let vg = load_graph(&args.graph_file)?;
            let x = vg.base();
            let det = ihara_det(x)?;
            let edge = ihara_edge(x);
            let counts = (1..=order)
                .map(|len| {
                    count_cycles(x, len).map(
                        |(n, p)| json!({ "length": len, "closed": n.to_string(), "primitive_classes": p.to_string() }),
                    )
                })
                .collect::<Result<Vec<_>, _>>()?;
            let result = json!({
                "vertices": x.n(),
                "edges": x.m(),
                "inverse_zeta_bass": poly_json(&det),
                "inverse_zeta_edge": poly_json(&edge),
                "bass_identity": det == edge,
                "cycle_counts": counts,
            });
            emit_json(&args.out, graph_config("graph ihara", &vg, json!({ "order": order })), result)
        }
        GraphCommand::Cover { args } => {
            let vg = load_graph(&args.graph_file)?;
            let cover = vg.build_cover()?;
            let y = &cover.graph;
            let result = json!({
                "vertices": y.n(),
                "edges": y.m(),
                "degree": vg.q_c(),
                "connected": cover.connected,
                "components": y.components(),
                "regularity": y.regularity(),
                "edge_list": y.edges(),
            });
            emit_json(&args.out, graph_config("graph cover", &vg, json!({})), result)
        }
        GraphCommand::Lfun { args, index } => {
            let vg = load_graph(&args.graph_file)?;
            let q = vg.q_c();
            let indices: Vec<u32> = match index {
                Some(j) if j < q => vec![j],
                Some(j) => return Err(CliError::Config(format!("character index {j} must be below {q}"))),
                None => (1..q).collect(),
            };
            let lfuns: Vec<Value> = indices
                .iter()
                .map(|&j| {
                    let coeffs: Vec<Vec<String>> =
                        vg.graph_l(j).iter().map(|c| c.coeffs().iter().map(|r| r.to_string()).collect()).collect();
                    json!({ "index": j, "coefficients": coeffs })
                })
                .collect();
            let result = json!({
                "basis": format!("powers 0..{} of a primitive {q}-th root of unity", q - 2),
                "l_functions": lfuns,
                "nontrivial_product": poly_json(&vg.nontrivial_l_product()?),
            });
            emit_json(&args.out, graph_config("graph lfun", &vg, json!({ "index": index })), result)
        }
        GraphCommand::Partial { args, order } => {
            check_order(order)?;
            let vg = load_graph(&args.graph_file)?;
            let g = RationalFunction::of_cover(&vg)?;
            let (direct, recursive) = partial_zeta_series(&vg, order)?;
            let result = json!({
                "g_numerator": poly_json(&g.num),
                "g_denominator": poly_json(&g.den),
                "direct": series_json(&direct),
                "recursive": series_json(&recursive),
                "agree": direct == recursive,
            });
            emit_json(&args.out, graph_config("graph partial", &vg, json!({ "order": order })), result)
        }
        GraphCommand::Verify { args, order } => {
            check_order(order)?;
            let vg = load_graph(&args.graph_file)?;
            let base = ihara_det(vg.base())?;
            let cover = vg.build_cover()?;
            let cover_det = ihara_det(&cover.graph)?;
            let bass_base = base == ihara_edge(vg.base());
            let bass_cover = cover_det == ihara_edge(&cover.graph);
            let covering = &vg.nontrivial_l_product()? * &base == cover_det;
            let (direct, recursive) = partial_zeta_series(&vg, order)?;
            let dual = direct == recursive;
            let pass = bass_base && bass_cover && covering && dual;
            let result = json!({
                "bass_base": bass_base,
                "bass_cover": bass_cover,
                "covering_identity": covering,
                "dual_routes": dual,
                "pass": pass,
            });
            emit_json(&args.out, graph_config("graph verify", &vg, json!({ "order": order })), result)?;
            if pass {
                Ok(())
            } else {
                Err(CliError::Failed)
            }
        }
    }
}
