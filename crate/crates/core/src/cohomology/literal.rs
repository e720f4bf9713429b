//! JSON form of cochains.
//!
//! ```json
//! {"type": "inflate", "hom": {"images": [0, 1, 0, 1]}, "inner": {"type": "cyclic", "n": 2, "t": 1}}
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::cochain::{Cochain, Node};
use super::unit::UnitScalar;
use crate::error::{Error, Result};
use crate::group::{DirectProduct, FiniteGroup, GroupHom};
use crate::problem::GroupSpec;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CochainLiteral {
    Trivial,
    Cyclic {
        n: usize,
        #[serde(default = "one")]
        t: i64,
    },
    CyclicLambda {
        n: usize,
        k: i64,
    },
    Inflate {
        hom: HomLiteral,
        inner: Box<CochainLiteral>,
    },
    Double {
        inner: Box<CochainLiteral>,
    },
    /// Missing entries are 1; keys are comma-separated element indices,
    /// values exponents `p/q`.
    Table {
        arity: usize,
        exponents: BTreeMap<String, UnitScalar>,
    },
    Product {
        factors: Vec<CochainLiteral>,
    },
    Power {
        inner: Box<CochainLiteral>,
        k: i64,
    },
    Coboundary {
        inner: Box<CochainLiteral>,
    },
}

fn one() -> i64 {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomLiteral {
    pub images: Vec<usize>,
    /// Target group; may be omitted when the inner cochain is cyclic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<GroupSpec>,
}

impl Default for CochainLiteral {
    fn default() -> Self {
        CochainLiteral::Trivial
    }
}

fn parse_key(key: &str, arity: usize, order: usize) -> Result<Vec<usize>> {
    let args: Vec<usize> = key
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse(format!("bad table key {key:?}")))?;
    if args.len() != arity || args.iter().any(|&a| a >= order) {
        return Err(Error::Parse(format!("table key {key:?} does not fit arity {arity}")));
    }
    Ok(args)
}

impl CochainLiteral {
    /// Binds the literal to a concrete group.
    pub fn bind(&self, group: &Arc<FiniteGroup>, arity: usize) -> Result<Cochain> {
        let c = match self {
            CochainLiteral::Trivial => Cochain::trivial(group, arity),
            CochainLiteral::Cyclic { n, t } => {
                if group.order() != *n {
                    return Err(Error::Parse(format!(
                        "cyclic cocycle of order {n} on a group of order {}; use inflate",
                        group.order()
                    )));
                }
                Cochain::cyclic_on(group, *t)?
            }
            CochainLiteral::CyclicLambda { n, k } => {
                if group.order() != *n {
                    return Err(Error::Parse("cyclic_lambda order mismatch".into()));
                }
                Cochain::cyclic_lambda_on(group, *k)?
            }
            CochainLiteral::Inflate { hom, inner } => {
                let target = match (&hom.target, inner.as_ref()) {
                    (Some(spec), _) => spec.build()?,
                    (None, CochainLiteral::Cyclic { n, .. } | CochainLiteral::CyclicLambda { n, .. }) => {
                        Arc::new(FiniteGroup::cyclic(*n)?)
                    }
                    (None, _) => {
                        return Err(Error::Parse("inflate needs a hom target group".into()))
                    }
                };
                let h = GroupHom::new(group.clone(), target.clone(), hom.images.clone())?;
                inner.bind(&target, arity)?.inflate(&h)?
            }
            CochainLiteral::Double { inner } => {
                let (left, right) = group
                    .factors()
                    .ok_or_else(|| Error::Parse("double cocycle needs a product group".into()))?;
                let product = DirectProduct { group: group.clone(), left: left.clone(), right: right.clone() };
                inner.bind(left, 3)?.double_on(&product)?
            }
            CochainLiteral::Table { arity: a, exponents } => {
                let entries = exponents
                    .iter()
                    .map(|(k, v)| Ok((parse_key(k, *a, group.order())?, *v)))
                    .collect::<Result<Vec<_>>>()?;
                Cochain::from_entries(group, *a, entries)?
            }
            CochainLiteral::Product { factors } => {
                let bound = factors.iter().map(|f| f.bind(group, arity)).collect::<Result<Vec<_>>>()?;
                Cochain::product(group, arity, &bound)?
            }
            CochainLiteral::Power { inner, k } => inner.bind(group, arity)?.pow(*k),
            CochainLiteral::Coboundary { inner } => {
                if arity < 2 {
                    return Err(Error::Parse("coboundary of a 0-cochain".into()));
                }
                inner.bind(group, arity - 1)?.coboundary()?
            }
        };
        if c.arity() != arity {
            return Err(Error::Parse(format!("expected a {arity}-cochain, got arity {}", c.arity())));
        }
        Ok(c)
    }

    pub fn from_cochain(c: &Cochain) -> Self {
        match c.node() {
            Node::Trivial => CochainLiteral::Trivial,
            Node::Dense(_) | Node::Sparse(_) => {
                let exponents = c
                    .domain()
                    .filter_map(|t| {
                        let v = c.eval(&t);
                        let key = t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                        (!v.is_one()).then_some((key, v))
                    })
                    .collect();
                CochainLiteral::Table { arity: c.arity(), exponents }
            }
            Node::Cyclic { n, t } => CochainLiteral::Cyclic { n: *n, t: *t },
            Node::CyclicLambda { n, k } => CochainLiteral::CyclicLambda { n: *n, k: *k },
            Node::Inflate { hom, inner } => {
                let inner_lit = Self::from_cochain(inner);
                let implied = matches!(
                    inner_lit,
                    CochainLiteral::Cyclic { .. } | CochainLiteral::CyclicLambda { .. }
                );
                CochainLiteral::Inflate {
                    hom: HomLiteral {
                        images: hom.images().to_vec(),
                        target: (!implied).then(|| GroupSpec::from_group(hom.target())),
                    },
                    inner: Box::new(inner_lit),
                }
            }
            Node::Double { inner } => CochainLiteral::Double { inner: Box::new(Self::from_cochain(inner)) },
            Node::Product(fs) => CochainLiteral::Product { factors: fs.iter().map(Self::from_cochain).collect() },
            Node::Power(inner, k) => CochainLiteral::Power { inner: Box::new(Self::from_cochain(inner)), k: *k },
            Node::Coboundary(inner) => CochainLiteral::Coboundary { inner: Box::new(Self::from_cochain(inner)) },
            Node::Memo { inner, .. } => Self::from_cochain(inner),
        }
    }
}
