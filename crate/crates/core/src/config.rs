//! Session configuration: JSON parsing, size caps, and construction of a
//! validated pointed category.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::center::field_conductor;
use crate::cocycles::{CocycleError, ThreeCocycle};
use crate::groups::{FiniteGroup, GroupError, GroupHom, DEFAULT_ORDER_CAP};
use crate::pointed::{PointedCategory, PointedError};
use crate::scalars::{RootOfUnity, MAX_DESERIALIZED_CONDUCTOR};

pub const DEFAULT_GENUS: u64 = 4;
pub const DEFAULT_GENUS_CAP: u64 = 32;
pub const MAX_PRODUCT_DEPTH: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { n: usize },
    Product { factors: Vec<GroupSpec> },
    Perm { degree: usize, generators: Vec<Vec<usize>> },
    Cayley { table: Vec<Vec<usize>> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum LambdaSpec {
    #[default]
    Trivial,
    Cyclic { q: i64 },
    Table { order: u64, entries: Vec<i64> },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Verify,
    Simples,
    Spherical,
    Blocks,
    Classify,
    #[default]
    Report,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    pub group_order: usize,
    pub genus: u64,
    pub conductor: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { group_order: DEFAULT_ORDER_CAP, genus: DEFAULT_GENUS_CAP, conductor: MAX_DESERIALIZED_CONDUCTOR }
    }
}

fn default_genus() -> u64 {
    DEFAULT_GENUS
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionConfig {
    pub group: GroupSpec,
    #[serde(default)]
    pub lambda: LambdaSpec,
    #[serde(default)]
    pub d: Vec<RootOfUnity>,
    #[serde(default)]
    pub command: Command,
    #[serde(default = "default_genus")]
    pub genus: u64,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub caps: Caps,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("config parse error: {0}")]
    Parse(String),
    #[error("invalid config: {0}")]
    Invalid(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("{what} {value} exceeds the cap {cap}")]
    Cap { what: &'static str, value: u64, cap: u64 },
    #[error(transparent)]
    Group(GroupError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error(transparent)]
    Pivotal(#[from] PointedError),
}

impl ConfigError {
    /// Stable machine-readable kind.
    pub fn kind(&self) -> &'static str {
        match self {
            ConfigError::Parse(_) | ConfigError::Invalid(_) => "parse",
            ConfigError::Unsupported(_) => "unsupported",
            ConfigError::Cap { .. } => "cap",
            ConfigError::Group(_) | ConfigError::Cocycle(_) | ConfigError::Pivotal(_) => "verification",
        }
    }
}

impl From<GroupError> for ConfigError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::TooLarge { cap } => ConfigError::Cap { what: "group order", value: cap as u64 + 1, cap: cap as u64 },
            e => ConfigError::Group(e),
        }
    }
}

fn cap_check(what: &'static str, value: u64, cap: u64) -> Result<(), ConfigError> {
    if value > cap {
        Err(ConfigError::Cap { what, value, cap })
    } else {
        Ok(())
    }
}

impl GroupSpec {
    pub fn from_json(s: &str) -> Result<Self, ConfigError> {
        serde_json::from_str(s).map_err(|e| ConfigError::Parse(e.to_string()))
    }

    /// Order of the described group, where it can be read off without
    /// building anything.
    fn declared_order(&self, depth: usize) -> Result<Option<u64>, ConfigError> {
        if depth > MAX_PRODUCT_DEPTH {
            return Err(ConfigError::Invalid("products nested too deeply".into()));
        }
        Ok(match self {
            GroupSpec::Cyclic { n } => Some(*n as u64),
            GroupSpec::Cayley { table } => Some(table.len() as u64),
            GroupSpec::Perm { .. } => None,
            GroupSpec::Product { factors } => {
                let mut total = Some(1u64);
                for f in factors {
                    total = match (total, f.declared_order(depth + 1)?) {
                        (Some(t), Some(o)) => Some(t.saturating_mul(o)),
                        _ => None,
                    };
                }
                total
            }
        })
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup, ConfigError> {
        if let Some(order) = self.declared_order(0)? {
            cap_check("group order", order, cap as u64)?;
        }
        self.build_inner(cap)
    }

    fn build_inner(&self, cap: usize) -> Result<FiniteGroup, ConfigError> {
        match self {
            GroupSpec::Cyclic { n: 0 } => Err(ConfigError::Invalid("cyclic group of order 0".into())),
            GroupSpec::Cyclic { n } => Ok(FiniteGroup::cyclic(*n)),
            GroupSpec::Cayley { table } => Ok(FiniteGroup::from_cayley(table.clone(), None)?),
            GroupSpec::Perm { degree, generators } => Ok(FiniteGroup::from_generators(*degree, generators, cap)?),
            GroupSpec::Product { factors } => {
                let mut acc = FiniteGroup::cyclic(1);
                for (i, f) in factors.iter().enumerate() {
                    let g = f.build_inner(cap)?;
                    cap_check("group order", (acc.order() * g.order()) as u64, cap as u64)?;
                    acc = if i == 0 { g } else { FiniteGroup::direct_product(&acc, &g) };
                }
                Ok(acc)
            }
        }
    }
}

impl LambdaSpec {
    pub fn build(&self, group: &Arc<FiniteGroup>, conductor_cap: u64) -> Result<ThreeCocycle, ConfigError> {
        match self {
            LambdaSpec::Trivial => Ok(ThreeCocycle::trivial(group.clone())),
            LambdaSpec::Cyclic { q } => ThreeCocycle::cyclic_on(group.clone(), *q)
                .ok_or_else(|| ConfigError::Unsupported("cyclic cocycle on a non-cyclic group".into())),
            LambdaSpec::Table { order, entries } => {
                if *order == 0 {
                    return Err(ConfigError::Invalid("cocycle table order 0".into()));
                }
                cap_check("cocycle order", *order, conductor_cap)?;
                let values: Vec<RootOfUnity> = entries.iter().map(|&e| RootOfUnity::new(*order, e)).collect();
                Ok(ThreeCocycle::verify(group.clone(), &values)?)
            }
        }
    }
}

/// A fully validated session.
#[derive(Clone, Debug)]
pub struct Session {
    pub config: SessionConfig,
    pub category: Arc<PointedCategory>,
    /// Elements on which the `d` values were read.
    pub d_generators: Vec<usize>,
}

impl SessionConfig {
    pub fn from_json(s: &str) -> Result<Self, ConfigError> {
        serde_json::from_str(s).map_err(|e| ConfigError::Parse(e.to_string()))
    }

    /// Builds and checks the group, cocycle, pivotal character and
    /// pivotality, in that order.
    pub fn validate(self) -> Result<Session, ConfigError> {
        cap_check("genus", self.genus, self.caps.genus)?;
        for v in &self.d {
            cap_check("root of unity order", v.order(), self.caps.conductor)?;
        }
        let group = Arc::new(self.group.build(self.caps.group_order)?);
        let lambda = self.lambda.build(&group, self.caps.conductor)?;
        let d_generators = group.generators();
        let d = if self.d.is_empty() {
            GroupHom::trivial(group.clone())
        } else {
            GroupHom::from_generator_values(group.clone(), &d_generators, &self.d)?
        };
        let cat = PointedCategory::new(lambda, d)?;
        cap_check("field conductor", field_conductor(&cat), self.caps.conductor)?;
        cat.verify_pivotality()?;
        Ok(Session { config: self, category: Arc::new(cat), d_generators })
    }
}
