//! Resolving `--backend` and its parameters into a zeta system.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use partial_zeta::euler::ExplicitPrime;
use partial_zeta::graph::{parse_edge_list, GraphBackend, VoltageGraph};
use partial_zeta::numberfield::{kronecker_system, AbelianSystem, CharacterSpec};
use partial_zeta::spec::SystemSpec;
use partial_zeta::ZetaSystem;
use serde::Deserialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Quadratic,
    Cyclic,
    Graph,
    Catalog,
}

#[derive(Args, Clone, Debug, Default)]
pub struct SystemArgs {
    /// Backend; inferred when exactly one of --d, --char, --graph-file, --catalog is given.
    #[arg(long, value_enum)]
    pub backend: Option<Backend>,
    /// Discriminant of the quadratic field.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<i64>,
    /// Character as JSON: {"modulus":7,"order":3,"generator_values":[[3,1]]} or {"kronecker_d":-3}.
    #[arg(long = "char")]
    pub character: Option<String>,
    /// Edge list: header `n q_g q_c`, then `u v [voltage]` per line.
    #[arg(long)]
    pub graph_file: Option<PathBuf>,
    /// JSON prime list: {"group_order":2,"primes":[{"norm":2.0,"frob_class":1}]}.
    #[arg(long)]
    pub catalog: Option<PathBuf>,
}

#[derive(Deserialize)]
struct CatalogFile {
    group_order: u32,
    primes: Vec<ExplicitPrime>,
}

/// A validated system together with the structure some commands need.
pub enum Resolved {
    Abelian(AbelianSystem),
    Graph(VoltageGraph, ZetaSystem),
    Catalog(ZetaSystem),
}

impl Resolved {
    pub fn system(&self) -> &ZetaSystem {
        match self {
            Resolved::Abelian(a) => a.system(),
            Resolved::Graph(_, s) | Resolved::Catalog(s) => s,
        }
    }

    pub fn spec(&self) -> SystemSpec {
        self.system().spec()
    }

    pub fn group_order(&self) -> u32 {
        self.system().group_order()
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

pub fn load_graph(path: &PathBuf) -> Result<VoltageGraph, CliError> {
    Ok(parse_edge_list(&read(path)?)?)
}

impl SystemArgs {
    fn backend(&self) -> Result<Backend, CliError> {
        if let Some(b) = self.backend {
            return Ok(b);
        }
        let given: Vec<Backend> = [
            (self.d.is_some(), Backend::Quadratic),
            (self.character.is_some(), Backend::Cyclic),
            (self.graph_file.is_some(), Backend::Graph),
            (self.catalog.is_some(), Backend::Catalog),
        ]
        .into_iter()
        .filter_map(|(on, b)| on.then_some(b))
        .collect();
        match given.as_slice() {
            [b] => Ok(*b),
            [] => Err(CliError::Config("no system given: use --d, --char, --graph-file or --catalog".into())),
            _ => Err(CliError::Config("several systems given; pick one with --backend".into())),
        }
    }

    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let missing = |flag: &str| CliError::Config(format!("this backend needs {flag}"));
        Ok(match self.backend()? {
            Backend::Quadratic => {
                let d = self.d.ok_or_else(|| missing("--d"))?;
                Resolved::Abelian(kronecker_system(d)?)
            }
            Backend::Cyclic => {
                let text = self.character.as_deref().ok_or_else(|| missing("--char"))?;
                let spec: CharacterSpec =
                    serde_json::from_str(text).map_err(|e| CliError::Config(format!("--char: {e}")))?;
                Resolved::Abelian(AbelianSystem::from_character_spec(&spec)?)
            }
            Backend::Graph => {
                let vg = load_graph(self.graph_file.as_ref().ok_or_else(|| missing("--graph-file"))?)?;
                let sys = GraphBackend::new(vg.clone()).into_system();
                Resolved::Graph(vg, sys)
            }
            Backend::Catalog => {
                let text = read(self.catalog.as_ref().ok_or_else(|| missing("--catalog"))?)?;
                let file: CatalogFile =
                    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("--catalog: {e}")))?;
                Resolved::Catalog(SystemSpec::Catalog { group_order: file.group_order, primes: file.primes }.build()?)
            }
        })
    }
}
