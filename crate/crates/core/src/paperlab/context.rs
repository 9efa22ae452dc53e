use std::sync::OnceLock;

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::group::{PermGroup, DEFAULT_MAX_ELEMENTS};
use crate::structure;
use crate::subgroups::{all_subgroups, LatticeCaps, Subgroup, SubgroupLattice};

use super::predicates::{is_exponential, is_p_subnormal, s_set};

/// Resource limits shared by the checks, probes and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_order: usize,
    pub max_subgroups: usize,
    pub max_elements: usize,
}

impl Default for Caps {
    fn default() -> Self {
        let lattice = LatticeCaps::default();
        Caps {
            max_order: lattice.max_order,
            max_subgroups: lattice.max_subgroups,
            max_elements: DEFAULT_MAX_ELEMENTS,
        }
    }
}

impl Caps {
    pub fn lattice(&self) -> LatticeCaps {
        LatticeCaps {
            max_order: self.max_order,
            max_subgroups: self.max_subgroups,
        }
    }
}

/// A group with its lattice and per-subgroup data, each computed once on
/// first use. Safe to share across threads.
pub struct GroupContext {
    label: String,
    group: PermGroup,
    caps: Caps,
    lattice: OnceLock<Result<SubgroupLattice>>,
    defects: OnceLock<Vec<Option<usize>>>,
    exponential: OnceLock<Vec<bool>>,
    all_p_subnormal: OnceLock<Result<Vec<bool>>>,
    products: OnceLock<Vec<Vec<usize>>>,
    fitting: OnceLock<Result<Subgroup>>,
    s_set: OnceLock<Result<Subgroup>>,
}

impl GroupContext {
    pub fn new(label: impl Into<String>, group: PermGroup, caps: Caps) -> GroupContext {
        GroupContext {
            label: label.into(),
            group,
            caps,
            lattice: OnceLock::new(),
            defects: OnceLock::new(),
            exponential: OnceLock::new(),
            all_p_subnormal: OnceLock::new(),
            products: OnceLock::new(),
            fitting: OnceLock::new(),
            s_set: OnceLock::new(),
        }
    }

    /// Parses and constructs a group spec.
    pub fn from_spec(spec: &str, caps: Caps) -> Result<GroupContext> {
        let parsed = crate::group::GroupSpec::parse(spec)?;
        Ok(GroupContext::new(spec, crate::group::construct(&parsed)?, caps))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn lattice(&self) -> Result<&SubgroupLattice> {
        self.lattice
            .get_or_init(|| {
                let order = self.group.try_order()?;
                if order > self.caps.max_order as u128 {
                    return Err(Error::ResourceCap(format!(
                        "group order {order} exceeds lattice cap {}",
                        self.caps.max_order
                    )));
                }
                all_subgroups(&self.group, self.caps.lattice())
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Group order as a machine integer; only valid once the lattice exists.
    pub fn order(&self) -> Result<usize> {
        Ok(self.lattice()?.table().order())
    }

    pub fn primes(&self) -> Result<Vec<u64>> {
        Ok(factorize(self.order()? as u128)
            .into_iter()
            .map(|(p, _)| p as u64)
            .collect())
    }

    /// Subnormal defect in the whole group, per lattice index.
    pub fn defects(&self) -> Result<&[Option<usize>]> {
        let lattice = self.lattice()?;
        Ok(self.defects.get_or_init(|| {
            lattice
                .subgroups()
                .iter()
                .map(Subgroup::subnormal_defect)
                .collect()
        }))
    }

    pub fn is_subnormal(&self, i: usize) -> Result<bool> {
        Ok(self.defects()?[i].is_some())
    }

    /// Exponential in the whole group, per lattice index.
    pub fn exponential(&self) -> Result<&[bool]> {
        let lattice = self.lattice()?;
        Ok(self
            .exponential
            .get_or_init(|| lattice.subgroups().iter().map(is_exponential).collect()))
    }

    /// `p`-subnormal for every prime `p`, per lattice index.
    pub fn all_p_subnormal(&self) -> Result<&[bool]> {
        let lattice = self.lattice()?;
        let primes = self.primes()?;
        self.all_p_subnormal
            .get_or_init(|| {
                lattice
                    .subgroups()
                    .iter()
                    .map(|h| {
                        let mut all = true;
                        for &p in &primes {
                            all &= is_p_subnormal(lattice, h, p)?;
                        }
                        Ok(all)
                    })
                    .collect()
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// `|HK|` for every ordered pair of lattice indices, from materialized
    /// product sets.
    pub fn product_sizes(&self) -> Result<&[Vec<usize>]> {
        let lattice = self.lattice()?;
        Ok(self.products.get_or_init(|| {
            let subs = lattice.subgroups();
            subs.iter()
                .map(|h| {
                    subs.iter()
                        .map(|k| h.product_set(k).expect("same parent").count())
                        .collect()
                })
                .collect()
        }))
    }

    pub fn product_size(&self, h: usize, k: usize) -> Result<usize> {
        Ok(self.product_sizes()?[h][k])
    }

    pub fn fitting(&self) -> Result<&Subgroup> {
        let lattice = self.lattice()?;
        self.fitting
            .get_or_init(|| structure::fitting(lattice))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn s_set(&self) -> Result<&Subgroup> {
        let lattice = self.lattice()?;
        self.s_set
            .get_or_init(|| s_set(lattice))
            .as_ref()
            .map_err(Clone::clone)
    }
}

impl std::fmt::Debug for GroupContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupContext")
            .field("label", &self.label)
            .field("degree", &self.group.degree())
            .finish_non_exhaustive()
    }
}
