//! TOML / JSON analysis configs and the finite-group table format.
//!
//! A config names one manifold and any number of gauge targets:
//!
//! ```toml
//! [manifold]
//! type = "spherical_space_form"
//! gamma = "binary_icosahedral"
//!
//! [[gauge]]
//! type = "su2_finite_models"
//!
//! [[gauge]]
//! type = "cyclic_z2m"
//! m = 3
//! ```
//!
//! Manifold tags: `torus {n}`, `sphere {n}`, `cp2`, `lens_space {p}`,
//! `spherical_space_form {gamma}`, `de_sitter_quotient {gamma}` and
//! `explicit {presentation | group | group_file, i_star_injective, label}`.
//!
//! Gamma is a bare name (`binary_tetrahedral`, `binary_octahedral`,
//! `binary_icosahedral`) or a table `{type = "cyclic", p = 5}`,
//! `{type = "binary_dihedral", n = 3}`.
//!
//! Gauge tags: `u1`, `cyclic_z2m {m}`, `su2_finite_models`,
//! `finite_model {gamma | group | group_file, name}`,
//! `product {factors = [{target, carries_z}]}`, `sm_model` and
//! `pati_salam {a, b, c_order}`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use spinobstruct_core::catalog::{CatalogError, GammaSpec, GaugeSpec, ManifoldSpec};
use spinobstruct_core::groups::{FiniteGroup, FiniteModel, FramedGroup, Presentation};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("TOML: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

fn invalid(msg: impl Into<String>) -> ConfigError {
    ConfigError::Invalid(msg.into())
}

/// A finite group as a multiplication table, with an optional central
/// involution `z`. Rows are indexed by the left factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub order: usize,
    pub table: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
}

impl GroupTable {
    pub fn from_group(g: &FiniteGroup, z: Option<usize>) -> Self {
        let n = g.order();
        let table = g.table().chunks(n).map(<[u32]>::to_vec).collect();
        GroupTable { order: n, table, labels: Some(g.labels().to_vec()), z }
    }

    pub fn to_group(&self) -> Result<FiniteGroup, ConfigError> {
        if self.table.len() != self.order || self.table.iter().any(|r| r.len() != self.order) {
            return Err(invalid(format!("table must be {0} x {0}", self.order)));
        }
        let flat = self.table.concat();
        FiniteGroup::from_table(flat, self.labels.clone()).map_err(|e| invalid(format!("group table: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = read(path)?;
        Ok(serde_json::from_str(&text)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GammaTable {
    Cyclic { p: u32 },
    BinaryDihedral { n: u32 },
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GammaConfig {
    Name(String),
    Table(GammaTable),
}

impl GammaConfig {
    pub fn to_spec(&self) -> Result<GammaSpec, ConfigError> {
        let table = match self {
            GammaConfig::Table(t) => t.clone(),
            GammaConfig::Name(s) => match s.as_str() {
                "binary_tetrahedral" => GammaTable::BinaryTetrahedral,
                "binary_octahedral" => GammaTable::BinaryOctahedral,
                "binary_icosahedral" => GammaTable::BinaryIcosahedral,
                "cyclic" | "binary_dihedral" => {
                    return Err(invalid(format!("gamma \"{s}\" needs a parameter, e.g. {{ type = \"{s}\", ... }}")))
                }
                other => return Err(invalid(format!("unknown gamma \"{other}\""))),
            },
        };
        Ok(match table {
            GammaTable::Cyclic { p } => GammaSpec::Cyclic(p),
            GammaTable::BinaryDihedral { n } => GammaSpec::BinaryDihedral(n),
            GammaTable::BinaryTetrahedral => GammaSpec::BinaryTetrahedral,
            GammaTable::BinaryOctahedral => GammaSpec::BinaryOctahedral,
            GammaTable::BinaryIcosahedral => GammaSpec::BinaryIcosahedral,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationConfig {
    /// Whitespace separated generator names.
    pub generators: String,
    #[serde(default)]
    pub relators: Vec<String>,
    pub z: String,
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default = "yes")]
    pub i_star_injective: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_file: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ManifoldConfig {
    Torus { n: u32 },
    Sphere { n: u32 },
    Cp2,
    LensSpace { p: u32 },
    SphericalSpaceForm { gamma: GammaConfig },
    DeSitterQuotient { gamma: GammaConfig },
    Explicit(ExplicitConfig),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorConfig {
    pub target: GaugeConfig,
    #[serde(default)]
    pub carries_z: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GaugeConfig {
    U1,
    CyclicZ2m {
        m: u64,
    },
    Su2FiniteModels,
    FiniteModel {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        gamma: Option<GammaConfig>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        group: Option<GroupTable>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        group_file: Option<PathBuf>,
    },
    Product {
        factors: Vec<FactorConfig>,
    },
    SmModel,
    PatiSalam {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        a: Option<GammaConfig>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        b: Option<GammaConfig>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        c_order: Option<u32>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GaugeList {
    One(GaugeConfig),
    Many(Vec<GaugeConfig>),
}

impl Default for GaugeList {
    fn default() -> Self {
        GaugeList::Many(Vec::new())
    }
}

impl GaugeList {
    pub fn items(&self) -> &[GaugeConfig] {
        match self {
            GaugeList::One(g) => std::slice::from_ref(g),
            GaugeList::Many(v) => v,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub manifold: ManifoldConfig,
    #[serde(default)]
    pub gauge: GaugeList,
}

fn read(path: &Path) -> Result<String, ConfigError> {
    fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.to_path_buf(), source })
}

impl Config {
    /// JSON if the text starts with `{`, TOML otherwise.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        if text.trim_start().starts_with('{') {
            Ok(serde_json::from_str(text)?)
        } else {
            Ok(toml::from_str(text)?)
        }
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        Self::parse(&read(path)?)
    }
}

/// Resolves `group_file` entries relative to the config's directory.
pub struct Resolver {
    pub base: PathBuf,
    pub max_cosets: usize,
}

impl Resolver {
    pub fn new(base: impl Into<PathBuf>, max_cosets: usize) -> Self {
        Resolver { base: base.into(), max_cosets }
    }

    fn table(&self, inline: &Option<GroupTable>, file: &Option<PathBuf>) -> Result<GroupTable, ConfigError> {
        match (inline, file) {
            (Some(t), None) => Ok(t.clone()),
            (None, Some(f)) => GroupTable::load(&self.base.join(f)),
            _ => Err(invalid("give exactly one of group and group_file")),
        }
    }

    pub fn manifold(&self, m: &ManifoldConfig) -> Result<ManifoldSpec, ConfigError> {
        Ok(match m {
            ManifoldConfig::Torus { n } => ManifoldSpec::Torus(*n),
            ManifoldConfig::Sphere { n } => ManifoldSpec::Sphere(*n),
            ManifoldConfig::Cp2 => ManifoldSpec::CP2,
            ManifoldConfig::LensSpace { p } => ManifoldSpec::LensSpace(*p),
            ManifoldConfig::SphericalSpaceForm { gamma } => ManifoldSpec::SphericalSpaceForm(gamma.to_spec()?),
            ManifoldConfig::DeSitterQuotient { gamma } => ManifoldSpec::DeSitterQuotient(gamma.to_spec()?),
            ManifoldConfig::Explicit(e) => ManifoldSpec::Explicit(self.explicit(e)?),
        })
    }

    fn explicit(&self, e: &ExplicitConfig) -> Result<FramedGroup, ConfigError> {
        let label = e.label.clone().unwrap_or_else(|| "explicit".into());
        if let Some(p) = &e.presentation {
            if e.group.is_some() || e.group_file.is_some() {
                return Err(invalid("explicit manifold: give a presentation or a group, not both"));
            }
            let rels: Vec<&str> = p.relators.iter().map(String::as_str).collect();
            let pres = Presentation::parse(&p.generators, &rels).map_err(|e| invalid(format!("presentation: {e}")))?;
            let z = pres.parse_word(&p.z).map_err(|e| invalid(format!("z: {e}")))?;
            return FramedGroup::presented(pres, z, e.i_star_injective, label).map_err(|e| invalid(format!("explicit manifold: {e}")));
        }
        let t = self.table(&e.group, &e.group_file)?;
        let z = t.z.ok_or_else(|| invalid("explicit group needs z"))?;
        FramedGroup::finite(t.to_group()?, z, e.i_star_injective, label).map_err(|e| invalid(format!("explicit manifold: {e}")))
    }

    pub fn gauge(&self, g: &GaugeConfig) -> Result<GaugeSpec, ConfigError> {
        Ok(match g {
            GaugeConfig::U1 => GaugeSpec::CircleClass,
            GaugeConfig::CyclicZ2m { m } => GaugeSpec::CyclicZ2m(*m),
            GaugeConfig::Su2FiniteModels => GaugeSpec::Su2FiniteModels,
            GaugeConfig::FiniteModel { name, gamma, group, group_file } => {
                if let Some(gm) = gamma {
                    if group.is_some() || group_file.is_some() {
                        return Err(invalid("finite_model: give gamma or a group, not both"));
                    }
                    let mut model = gm.to_spec()?.model(self.max_cosets)?;
                    if let Some(n) = name {
                        model.name = n.clone();
                    }
                    return Ok(GaugeSpec::FiniteModel(model));
                }
                let t = self.table(group, group_file)?;
                let z = t.z.ok_or_else(|| invalid("finite_model group needs z"))?;
                let model = FiniteModel::new(name.clone().unwrap_or_else(|| format!("G{}", t.order)), t.to_group()?, z)
                    .map_err(|e| invalid(format!("finite_model: {e}")))?;
                GaugeSpec::FiniteModel(model)
            }
            GaugeConfig::Product { factors } => {
                GaugeSpec::Product(factors.iter().map(|f| Ok((self.gauge(&f.target)?, f.carries_z))).collect::<Result<_, ConfigError>>()?)
            }
            GaugeConfig::SmModel => GaugeSpec::StandardModel,
            GaugeConfig::PatiSalam { a, b, c_order } => {
                let GaugeSpec::PatiSalam { a: da, b: db, c_order: dc } = GaugeSpec::pati_salam_default() else { unreachable!() };
                GaugeSpec::PatiSalam {
                    a: a.as_ref().map(GammaConfig::to_spec).transpose()?.unwrap_or(da),
                    b: b.as_ref().map(GammaConfig::to_spec).transpose()?.unwrap_or(db),
                    c_order: c_order.unwrap_or(dc),
                }
            }
        })
    }
}
