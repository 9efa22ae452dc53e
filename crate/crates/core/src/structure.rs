//! Sylow subgroups, `O_p`, the Fitting subgroup, power subgroups, the
//! derived and lower central series, and a few subgroup predicates.
//!
//! Series and centers are computed for any subgroup `M` of the tabulated
//! parent, treating `M` as a group in its own right; pass the whole group
//! to get the usual invariants of the parent.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::{factorize, gcd, p_part};
use crate::error::{Error, Result};
use crate::subgroups::{Subgroup, SubgroupLattice};

/// Lattice indices of the Sylow `p`-subgroups.
pub fn sylow_indices(lattice: &SubgroupLattice, p: u64) -> Vec<usize> {
    let target = p_part(lattice.table().order() as u128, p as u128) as usize;
    lattice
        .iter()
        .filter(|(_, s)| s.order() == target)
        .map(|(i, _)| i)
        .collect()
}

/// All Sylow `p`-subgroups; `[trivial]` when `p` does not divide the order.
pub fn sylow_class(lattice: &SubgroupLattice, p: u64) -> Result<Vec<Subgroup>> {
    let indices = sylow_indices(lattice, p);
    let class = lattice.conjugacy_class_of(indices[0]);
    if indices.iter().any(|&i| lattice.conjugacy_class_of(i) != class) {
        return Err(Error::InternalDisagreement(format!(
            "Sylow {p}-subgroups split into several conjugacy classes"
        )));
    }
    Ok(indices.into_iter().map(|i| lattice.get(i).clone()).collect())
}

/// Intersection of all Sylow `p`-subgroups.
pub fn o_p(lattice: &SubgroupLattice, p: u64) -> Result<Subgroup> {
    let class = sylow_class(lattice, p)?;
    class
        .iter()
        .skip(1)
        .try_fold(class[0].clone(), |acc, s| acc.intersection(s))
}

/// Join of `O_p` over the primes dividing the order; checked to be normal,
/// nilpotent and to contain every nilpotent normal subgroup in the lattice.
pub fn fitting(lattice: &SubgroupLattice) -> Result<Subgroup> {
    let mut f = lattice.trivial().clone();
    for (p, _) in factorize(lattice.table().order() as u128) {
        f = f.join(&o_p(lattice, p as u64)?)?;
    }
    if !f.is_normal() || !is_nilpotent(&f) {
        return Err(Error::InternalDisagreement(
            "join of the O_p is not a nilpotent normal subgroup".into(),
        ));
    }
    for i in lattice.normal_indices() {
        let n = lattice.get(i);
        if !n.is_subgroup_of(&f) && is_nilpotent(n) {
            return Err(Error::InternalDisagreement(format!(
                "nilpotent normal subgroup of order {} escapes the Fitting subgroup",
                n.order()
            )));
        }
    }
    Ok(f)
}

/// `⟨x^n : x ∈ M⟩`.
pub fn power_subgroup(m: &Subgroup, n: u64) -> Subgroup {
    let table = m.table();
    let mut powers: Vec<usize> = m.member_indices().map(|x| table.pow(x, n)).collect();
    powers.sort_unstable();
    powers.dedup();
    Subgroup::generated_by(table, &powers)
}

/// `[A, B]` for `A, B ≤ M` with `A` normal in `M`: the normal closure in `M`
/// of the commutators of generators.
pub fn commutator_subgroup(a: &Subgroup, b: &Subgroup, within: &Subgroup) -> Result<Subgroup> {
    let table = a.table();
    let mut comms: Vec<usize> = Vec::new();
    for &x in a.generator_indices() {
        for &y in b.generator_indices() {
            comms.push(table.commutator(x, y));
        }
    }
    Subgroup::generated_by(table, &comms).normal_closure_in(within)
}

pub fn derived_subgroup(m: &Subgroup) -> Subgroup {
    commutator_subgroup(m, m, m).expect("commutators of M lie in M")
}

/// `M ≥ M' ≥ M'' ≥ ..` until it stabilizes.
pub fn derived_series(m: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![m.clone()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup(last);
        if &next == last {
            return series;
        }
        series.push(next);
    }
}

pub fn is_solvable(m: &Subgroup) -> bool {
    derived_series(m).last().unwrap().is_trivial()
}

/// `M = γ1 ≥ γ2 = [γ1, M] ≥ ..` until it stabilizes.
pub fn lower_central_series(m: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![m.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(last, m, m).expect("terms lie in M");
        if &next == last {
            return series;
        }
        series.push(next);
    }
}

pub fn is_nilpotent(m: &Subgroup) -> bool {
    lower_central_series(m).last().unwrap().is_trivial()
}

/// Elements of `M` commuting with every generator of `M`.
pub fn center(m: &Subgroup) -> Subgroup {
    let table = m.table();
    let members = table.set_from(m.member_indices().filter(|&z| {
        m.generator_indices()
            .iter()
            .all(|&g| table.mul(z, g) == table.mul(g, z))
    }));
    Subgroup::from_closed_set(table, members)
}

/// `gcd(|H|, |G:H|) = 1`.
pub fn is_hall(h: &Subgroup) -> bool {
    gcd(h.order() as u128, h.index() as u128) == 1
}

/// Proper, with no lattice member strictly between it and the whole group.
pub fn is_maximal(lattice: &SubgroupLattice, h: &Subgroup) -> Result<bool> {
    let i = lattice.position(h).ok_or(Error::ParentMismatch)?;
    if h.is_whole() {
        return Ok(false);
    }
    Ok(lattice
        .proper_overgroups_of(i)
        .iter()
        .all(|&j| lattice.get(j).is_whole()))
}

#[derive(Debug, Clone, Serialize)]
pub struct SylowSummary {
    pub order: usize,
    pub count: usize,
    pub o_p_order: usize,
}

#[derive(Debug, Clone)]
pub struct StructureReport {
    pub order: usize,
    pub factorization: Vec<(u64, u32)>,
    pub exponent: u64,
    pub fitting: Subgroup,
    pub sylow: BTreeMap<u64, (Subgroup, SylowSummary)>,
    pub derived_series: Vec<usize>,
    pub lower_central_series: Vec<usize>,
    pub is_solvable: bool,
    pub is_nilpotent: bool,
    pub center: Subgroup,
}

pub fn analyze(lattice: &SubgroupLattice) -> Result<StructureReport> {
    let whole = lattice.whole();
    let table = lattice.table();
    let factorization: Vec<(u64, u32)> = factorize(table.order() as u128)
        .into_iter()
        .map(|(p, k)| (p as u64, k))
        .collect();
    let mut sylow = BTreeMap::new();
    for &(p, _) in &factorization {
        let class = sylow_class(lattice, p)?;
        let summary = SylowSummary {
            order: class[0].order(),
            count: class.len(),
            o_p_order: o_p(lattice, p)?.order(),
        };
        sylow.insert(p, (class[0].clone(), summary));
    }
    let derived = derived_series(whole);
    let lower = lower_central_series(whole);
    Ok(StructureReport {
        order: table.order(),
        exponent: table.exponent(),
        fitting: fitting(lattice)?,
        is_solvable: derived.last().unwrap().is_trivial(),
        is_nilpotent: lower.last().unwrap().is_trivial(),
        derived_series: derived.iter().map(Subgroup::order).collect(),
        lower_central_series: lower.iter().map(Subgroup::order).collect(),
        center: center(whole),
        factorization,
        sylow,
    })
}

impl StructureReport {
    pub fn to_json(&self) -> serde_json::Value {
        let sylow: serde_json::Map<String, serde_json::Value> = self
            .sylow
            .iter()
            .map(|(p, (_, s))| (p.to_string(), serde_json::to_value(s).unwrap()))
            .collect();
        serde_json::json!({
            "order": self.order,
            "factorization": self.factorization,
            "exponent": self.exponent,
            "fitting_order": self.fitting.order(),
            "sylow": sylow,
            "solvable": self.is_solvable,
            "nilpotent": self.is_nilpotent,
            "center_order": self.center.order(),
            "derived_series": self.derived_series,
            "lower_central_series": self.lower_central_series,
        })
    }
}
