//! Serializable descriptions of zeta systems.
//!
//! ```json
//! {"backend": "quadratic", "params": {"d": 5}}
//! {"backend": "cyclic", "params": {"modulus": 7, "order": 3, "generator_values": [[3, 1]]}}
//! {"backend": "graph", "params": {"n": 4, "q_g": 2, "q_c": 3, "edges": [[0, 1, 0], ...]}}
//! {"backend": "catalog", "params": {"group_order": 2, "primes": [{"norm": 2.0, "frob_class": 1}]}}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::euler::{ExplicitBackend, ExplicitPrime, ZetaSystem};
use crate::graph::{GraphBackend, VoltageGraph};
use crate::numberfield::{kronecker_system, AbelianSystem, CharacterSpec};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "backend", content = "params", rename_all = "lowercase")]
pub enum SystemSpec {
    Quadratic { d: i64 },
    Cyclic(CharacterSpec),
    Graph { n: usize, q_g: u32, q_c: u32, edges: Vec<(usize, usize, u32)> },
    Catalog { group_order: u32, primes: Vec<ExplicitPrime> },
}

impl SystemSpec {
    pub fn build(&self) -> Result<ZetaSystem> {
        Ok(match self {
            SystemSpec::Quadratic { d } => kronecker_system(*d)?.system().clone(),
            SystemSpec::Cyclic(chi) => AbelianSystem::from_character_spec(chi)?.system().clone(),
            SystemSpec::Graph { n, q_g, q_c, edges } => {
                let vg = VoltageGraph::from_edges(*n, *q_g, *q_c, edges)?;
                GraphBackend::new(vg).into_system()
            }
            SystemSpec::Catalog { group_order, primes } => ExplicitBackend::new(*group_order, primes)?.into_system(),
        })
    }

    /// The abelian system behind a number-field spec, if any.
    pub fn abelian(&self) -> Option<Result<AbelianSystem>> {
        match self {
            SystemSpec::Quadratic { d } => Some(kronecker_system(*d)),
            SystemSpec::Cyclic(chi) => Some(AbelianSystem::from_character_spec(chi)),
            _ => None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_all_backends() {
        let specs = [
            SystemSpec::Quadratic { d: 5 },
            SystemSpec::Cyclic(CharacterSpec::Generators { modulus: 7, order: 3, generator_values: vec![(3, 1)] }),
            SystemSpec::Cyclic(CharacterSpec::Kronecker { kronecker_d: -3 }),
            SystemSpec::Graph {
                n: 4,
                q_g: 2,
                q_c: 3,
                edges: vec![(0, 1, 0), (0, 2, 0), (0, 3, 0), (1, 2, 1), (1, 3, 0), (2, 3, 0)],
            },
            SystemSpec::Catalog { group_order: 2, primes: vec![ExplicitPrime { norm: 2.0, frob_class: 1 }] },
        ];
        for spec in specs {
            let back = SystemSpec::from_json(&spec.to_json()).unwrap();
            assert_eq!(back, spec);
            let sys = spec.build().unwrap();
            assert_eq!(sys.spec(), spec);
        }
    }

    #[test]
    fn parses_documented_forms() {
        let s = SystemSpec::from_json(r#"{"backend":"quadratic","params":{"d":-1}}"#).unwrap();
        assert_eq!(s, SystemSpec::Quadratic { d: -1 });
        let s = SystemSpec::from_json(r#"{"backend":"cyclic","params":{"kronecker_d":5}}"#).unwrap();
        assert_eq!(s, SystemSpec::Cyclic(CharacterSpec::Kronecker { kronecker_d: 5 }));
        assert!(SystemSpec::from_json(r#"{"backend":"quadratic","params":{"d":4}}"#).unwrap().build().is_err());
    }
}
