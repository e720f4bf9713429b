//! Problem documents: a group, a subgroup and the two cochains, as JSON.
//!
//! ```json
//! {
//!   "group": {"type": "permutation", "degree": 3, "generators": [[1, 0, 2], [0, 2, 1]]},
//!   "subgroup": {"generators": [1]},
//!   "omega": {"type": "trivial"},
//!   "options": {"m_max": 6}
//! }
//! ```

use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cohomology::{Cochain, CochainLiteral};
use crate::error::{Error, Result};
use crate::group::{direct_product, named, FiniteGroup, GroupHom, Subgroup};
use crate::symbols::GroupTheoreticalData;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GroupSpec {
    Permutation { degree: usize, generators: Vec<Vec<usize>> },
    Table { table: Vec<Vec<usize>> },
    Cyclic { n: usize },
    /// Left-nested direct product; two factors keep the product structure
    /// needed by `diagonal` and `double`.
    Product { factors: Vec<GroupSpec> },
    /// One of `S3`, `D4`, `Q8`, `A4`.
    Named { name: String },
}

impl GroupSpec {
    pub fn build(&self) -> Result<Arc<FiniteGroup>> {
        Ok(match self {
            GroupSpec::Permutation { degree, generators } => {
                Arc::new(FiniteGroup::from_permutations(*degree, generators)?)
            }
            GroupSpec::Table { table } => Arc::new(FiniteGroup::from_table(table)?),
            GroupSpec::Cyclic { n } => Arc::new(FiniteGroup::cyclic(*n)?),
            GroupSpec::Product { factors } => {
                let mut it = factors.iter();
                let first = it.next().ok_or_else(|| Error::Parse("empty product".into()))?;
                let mut acc = first.build()?;
                for f in it {
                    acc = direct_product(&acc, &f.build()?)?.group;
                }
                acc
            }
            GroupSpec::Named { name } => match name.to_ascii_uppercase().as_str() {
                "S3" => named::symmetric3(),
                "D4" | "D8" => named::dihedral4(),
                "Q8" => named::quaternion(),
                "A4" => named::alternating4(),
                other => return Err(Error::Parse(format!("unknown group name {other:?}"))),
            },
        })
    }

    /// A spec reproducing `group` exactly.
    pub fn from_group(group: &FiniteGroup) -> Self {
        if group.is_standard_cyclic() {
            GroupSpec::Cyclic { n: group.order() }
        } else if let Some((a, b)) = group.factors() {
            GroupSpec::Product { factors: vec![Self::from_group(a), Self::from_group(b)] }
        } else {
            GroupSpec::Table { table: group.table() }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubgroupSpec {
    /// `"diagonal"`, `"whole"` or `"trivial"`.
    Keyword(String),
    Generators { generators: Vec<usize> },
    Elements { elements: Vec<usize> },
}

impl Default for SubgroupSpec {
    fn default() -> Self {
        SubgroupSpec::Keyword("whole".into())
    }
}

impl SubgroupSpec {
    pub fn build(&self, group: &Arc<FiniteGroup>) -> Result<Subgroup> {
        let check = |xs: &[usize]| {
            xs.iter()
                .find(|&&x| x >= group.order())
                .map_or(Ok(()), |x| Err(Error::Parse(format!("element {x} out of range"))))
        };
        match self {
            SubgroupSpec::Keyword(k) => match k.as_str() {
                "whole" => Ok(Subgroup::whole(group)),
                "trivial" => Ok(Subgroup::trivial(group)),
                "diagonal" => {
                    let (a, b) = group
                        .factors()
                        .ok_or_else(|| Error::Parse("diagonal needs a product group".into()))?;
                    if a != b {
                        return Err(Error::Parse("diagonal needs equal factors".into()));
                    }
                    let els: Vec<usize> = a.elements().map(|x| x * b.order() + x).collect();
                    Subgroup::from_elements(group, &els)
                }
                other => Err(Error::Parse(format!("unknown subgroup keyword {other:?}"))),
            },
            SubgroupSpec::Generators { generators } => {
                check(generators)?;
                Ok(Subgroup::closure(group, generators))
            }
            SubgroupSpec::Elements { elements } => {
                check(elements)?;
                Subgroup::from_elements(group, elements).map_err(|e| Error::Parse(e.to_string()))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Pipeline {
    #[default]
    Auto,
    Adapted,
    General,
    TrivialRestriction,
    Double,
}

impl FromStr for Pipeline {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::Parse(format!("unknown pipeline {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Options {
    pub m_max: usize,
    pub pipeline: Pipeline,
    pub seed: Option<u64>,
    pub eigen_gap: f64,
    pub tolerance: f64,
}

impl Default for Options {
    fn default() -> Self {
        Options { m_max: 6, pipeline: Pipeline::Auto, seed: None, eigen_gap: 1e-8, tolerance: 1e-9 }
    }
}

/// A homomorphism onto `Z/n` and an exponent, for the cyclic twist.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwistSpec {
    pub images: Vec<usize>,
    pub n: usize,
    #[serde(default = "default_t")]
    pub t: i64,
}

fn default_t() -> i64 {
    1
}

impl TwistSpec {
    pub fn hom(&self, group: &Arc<FiniteGroup>) -> Result<GroupHom> {
        GroupHom::new(group.clone(), Arc::new(FiniteGroup::cyclic(self.n)?), self.images.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub group: GroupSpec,
    #[serde(default)]
    pub subgroup: SubgroupSpec,
    #[serde(default)]
    pub omega: CochainLiteral,
    #[serde(default)]
    pub psi: CochainLiteral,
    #[serde(default)]
    pub options: Options,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<TwistSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_subgroup: Option<SubgroupSpec>,
}

impl FromStr for ProblemSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A bound problem: concrete group, subgroup and cochains.
#[derive(Debug, Clone)]
pub struct Problem {
    pub spec: ProblemSpec,
    pub data: GroupTheoreticalData,
}

impl ProblemSpec {
    /// Builds the group and binds the cochains, without checking the
    /// cocycle conditions.
    pub fn bind(&self) -> Result<Problem> {
        let group = self.group.build()?;
        let subgroup = self.subgroup.build(&group)?;
        let omega = self.omega.bind(&group, 3)?;
        let psi = self.psi.bind(&group, 2)?;
        let data = GroupTheoreticalData::new_unchecked(subgroup, omega, psi)?;
        Ok(Problem { spec: self.clone(), data })
    }

    pub fn group(&self) -> Result<Arc<FiniteGroup>> {
        self.group.build()
    }

    pub fn omega(&self) -> Result<Cochain> {
        self.omega.bind(&self.group.build()?, 3)
    }
}
