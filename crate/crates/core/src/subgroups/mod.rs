//! Subgroups of a tabulated group, and the index arithmetic on them.
//!
//! A [`Subgroup`] always carries its full element set, so it only exists
//! for parents small enough to have a [`GroupTable`].

mod lattice;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use lattice::{all_subgroups, LatticeCaps, SubgroupLattice};

use crate::error::{Error, Result};
use crate::group::{ElementSet, GroupTable};
use crate::perm::Perm;

#[derive(Clone)]
pub struct Subgroup {
    table: Arc<GroupTable>,
    members: ElementSet,
    order: usize,
    generators: Vec<usize>,
}

impl Subgroup {
    /// Wraps a set already known to be a subgroup.
    pub(crate) fn from_closed_set(table: &Arc<GroupTable>, members: ElementSet) -> Subgroup {
        let generators = canonical_generators(table, &members);
        Subgroup {
            table: Arc::clone(table),
            order: members.count(),
            members,
            generators,
        }
    }

    pub fn generated_by(table: &Arc<GroupTable>, generators: &[usize]) -> Subgroup {
        Subgroup::from_closed_set(table, table.closure(generators))
    }

    pub fn from_perms(table: &Arc<GroupTable>, generators: &[Perm]) -> Result<Subgroup> {
        let indices = generators
            .iter()
            .map(|g| table.index_of(g).ok_or(Error::NotInParent))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subgroup::generated_by(table, &indices))
    }

    /// Accepts an arbitrary element set, checking closure.
    pub fn from_set(table: &Arc<GroupTable>, members: ElementSet) -> Result<Subgroup> {
        let candidate = Subgroup::from_closed_set(table, members);
        if table.closure(&candidate.generators) != candidate.members {
            return Err(Error::NotASubgroup);
        }
        Ok(candidate)
    }

    pub fn whole(table: &Arc<GroupTable>) -> Subgroup {
        Subgroup::from_closed_set(table, ElementSet::full(table.order()))
    }

    pub fn trivial(table: &Arc<GroupTable>) -> Subgroup {
        Subgroup::from_closed_set(table, table.set_from([0]))
    }

    pub fn cyclic(table: &Arc<GroupTable>, x: usize) -> Subgroup {
        Subgroup::from_closed_set(table, table.set_from(table.cyclic_powers(x)))
    }

    pub fn table(&self) -> &Arc<GroupTable> {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `|G:H|` in the parent.
    pub fn index(&self) -> usize {
        self.table.order() / self.order
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn member_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    #[inline]
    pub fn contains_index(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.table
            .index_of(p)
            .is_some_and(|i| self.members.contains(i))
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> Vec<Perm> {
        self.members
            .iter()
            .map(|i| self.table.element(i).clone())
            .collect()
    }

    /// Greedy generators: each is the least element outside the subgroup
    /// generated by the previous ones.
    pub fn generators(&self) -> Vec<Perm> {
        self.generators
            .iter()
            .map(|&i| self.table.element(i).clone())
            .collect()
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.table.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_parent(other) && self.members.is_subset(&other.members)
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.table, &other.table)
    }

    fn check_parent(&self, other: &Subgroup) -> Result<()> {
        if self.same_parent(other) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_parent(other)?;
        Ok(Subgroup::from_closed_set(
            &self.table,
            self.members.intersection(&other.members),
        ))
    }

    pub fn intersection_order(&self, other: &Subgroup) -> Result<usize> {
        self.check_parent(other)?;
        Ok(self.members.intersection_count(&other.members))
    }

    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_parent(other)?;
        if other.is_subgroup_of(self) {
            return Ok(self.clone());
        }
        if self.is_subgroup_of(other) {
            return Ok(other.clone());
        }
        let gens: Vec<usize> = self
            .generators
            .iter()
            .chain(&other.generators)
            .copied()
            .collect();
        Ok(Subgroup::generated_by(&self.table, &gens))
    }

    /// `|HK:H| = |K : H∩K|`, the number of cosets of `self` met by `other`.
    pub fn product_index(&self, other: &Subgroup) -> Result<usize> {
        Ok(other.order / self.intersection_order(other)?)
    }

    /// `|HK| = |H||K| / |H∩K|`.
    pub fn product_cardinality(&self, other: &Subgroup) -> Result<usize> {
        Ok(self.order * other.order / self.intersection_order(other)?)
    }

    /// The product set `HK`, materialized element by element.
    pub fn product_set(&self, other: &Subgroup) -> Result<ElementSet> {
        self.check_parent(other)?;
        let mut set = self.table.empty_set();
        for h in self.members.iter() {
            for k in other.members.iter() {
                set.insert(self.table.mul(h, k));
            }
        }
        Ok(set)
    }

    /// Whether the product set `HK` is itself a subgroup.
    pub fn is_product_subgroup(&self, other: &Subgroup) -> Result<bool> {
        Ok(self.product_cardinality(other)? == self.join(other)?.order)
    }

    /// `g⁻¹ H g` for a parent element index `g`.
    pub fn conjugate(&self, g: usize) -> Subgroup {
        let members = self
            .table
            .set_from(self.members.iter().map(|h| self.table.conjugate(h, g)));
        Subgroup::from_closed_set(&self.table, members)
    }

    pub fn conjugate_by(&self, g: &Perm) -> Result<Subgroup> {
        let g = self.table.index_of(g).ok_or(Error::NotInParent)?;
        Ok(self.conjugate(g))
    }

    fn conjugate_set(&self, g: usize) -> ElementSet {
        self.table
            .set_from(self.members.iter().map(|h| self.table.conjugate(h, g)))
    }

    /// Normal in the whole parent group.
    pub fn is_normal(&self) -> bool {
        self.table
            .generators()
            .iter()
            .all(|&g| self.generators.iter().all(|&h| self.members.contains(self.table.conjugate(h, g))))
    }

    /// Normal in an intermediate subgroup `overgroup ≥ self`.
    pub fn is_normal_in(&self, overgroup: &Subgroup) -> Result<bool> {
        if !self.is_subgroup_of(overgroup) {
            return Err(Error::NotContained);
        }
        Ok(overgroup.generators.iter().all(|&g| {
            self.generators
                .iter()
                .all(|&h| self.members.contains(self.table.conjugate(h, g)))
        }))
    }

    /// Intersection of all parent conjugates.
    pub fn normal_core(&self) -> Subgroup {
        let mut core = self.members.clone();
        for g in 0..self.table.order() {
            core = core.intersection(&self.conjugate_set(g));
            if core.count() == 1 {
                break;
            }
        }
        Subgroup::from_closed_set(&self.table, core)
    }

    /// Smallest normal subgroup of `overgroup` containing `self`.
    pub fn normal_closure_in(&self, overgroup: &Subgroup) -> Result<Subgroup> {
        if !self.is_subgroup_of(overgroup) {
            return Err(Error::NotContained);
        }
        let mut current = self.clone();
        loop {
            let extra: Vec<usize> = current
                .generators
                .iter()
                .flat_map(|&h| overgroup.generators.iter().map(move |&m| (h, m)))
                .map(|(h, m)| self.table.conjugate(h, m))
                .filter(|&c| !current.members.contains(c))
                .collect();
            if extra.is_empty() {
                return Ok(current);
            }
            let gens: Vec<usize> = current.generators.iter().copied().chain(extra).collect();
            current = Subgroup::generated_by(&self.table, &gens);
        }
    }

    /// Normal closure in the whole parent, `⟨H⟩^G`.
    pub fn normal_closure(&self) -> Subgroup {
        self.normal_closure_in(&Subgroup::whole(&self.table))
            .expect("every subgroup lies in the parent")
    }

    /// Length of the iterated normal-closure series `G = K0 ≥ K1 ≥ ..` down
    /// to `self`, or `None` when the series stalls above it.
    pub fn subnormal_defect(&self) -> Option<usize> {
        self.subnormal_defect_in(&Subgroup::whole(&self.table))
            .expect("every subgroup lies in the parent")
    }

    pub fn subnormal_defect_in(&self, overgroup: &Subgroup) -> Result<Option<usize>> {
        let series = self.normal_closure_series(overgroup)?;
        Ok(if series.last() == Some(self) {
            Some(series.len() - 1)
        } else {
            None
        })
    }

    /// `K0 = overgroup`, `K(i+1)` the normal closure of `self` in `K(i)`,
    /// until the terms reach `self` or stop shrinking.
    pub fn normal_closure_series(&self, overgroup: &Subgroup) -> Result<Vec<Subgroup>> {
        if !self.is_subgroup_of(overgroup) {
            return Err(Error::NotContained);
        }
        let mut series = vec![overgroup.clone()];
        loop {
            let last = series.last().unwrap();
            if last == self {
                return Ok(series);
            }
            let next = self.normal_closure_in(last)?;
            if &next == last {
                return Ok(series);
            }
            series.push(next);
        }
    }

    /// Compact description for reports: order and generators in cycle notation.
    pub fn describe(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.order,
            "generators": self.generators().iter().map(Perm::to_string).collect::<Vec<_>>(),
        })
    }

    /// Like [`Subgroup::describe`] plus the full element list.
    pub fn describe_full(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.order,
            "generators": self.generators().iter().map(Perm::to_string).collect::<Vec<_>>(),
            "elements": self.elements().iter().map(Perm::to_string).collect::<Vec<_>>(),
        })
    }
}

fn canonical_generators(table: &GroupTable, members: &ElementSet) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = table.set_from([0]);
    for x in members.iter() {
        if !span.contains(x) {
            gens.push(x);
            span = table.closure(&gens);
        }
    }
    gens
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

/// `(order, element list)` in canonical element order.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.iter().cmp(other.members.iter()))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, <", self.order)?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{construct, GroupSpec};

    fn table(spec: &str) -> Arc<GroupTable> {
        let g = construct(&GroupSpec::parse(spec).unwrap()).unwrap();
        Arc::new(GroupTable::new(&g, 1000).unwrap())
    }

    fn sub(t: &Arc<GroupTable>, gens: &[&str]) -> Subgroup {
        let degree = t.group().degree();
        let perms: Vec<Perm> = gens.iter().map(|g| Perm::parse(g, degree).unwrap()).collect();
        Subgroup::from_perms(t, &perms).unwrap()
    }

    #[test]
    fn intersections_and_joins() {
        let t = table("sym:3");
        let h = sub(&t, &["(1 2)"]);
        let k = sub(&t, &["(1 3)"]);
        assert!(h.intersection(&k).unwrap().is_trivial());
        let c3 = sub(&t, &["(1 2 3)"]);
        assert!(h.join(&c3).unwrap().is_whole());
        assert_eq!(h.intersection(&h).unwrap(), h);
    }

    #[test]
    fn product_indices() {
        let t = table("sym:3");
        let h = sub(&t, &["(1 2)"]);
        let k = sub(&t, &["(1 2 3)"]);
        assert_eq!(h.product_index(&k).unwrap(), 3);
        assert_eq!(h.product_cardinality(&k).unwrap(), 6);
        assert_eq!(h.product_index(&h).unwrap(), 1);
        let k = sub(&t, &["(1 3)"]);
        assert_eq!(h.product_index(&k).unwrap(), 2);
        assert_eq!(h.product_cardinality(&k).unwrap(), 4);
        assert_eq!(h.product_set(&k).unwrap().count(), 4);
    }

    #[test]
    fn product_subgroups() {
        let t = table("sym:3");
        let h = sub(&t, &["(1 2)"]);
        assert!(h.is_product_subgroup(&Subgroup::trivial(&t)).unwrap());
        assert!(!h.is_product_subgroup(&sub(&t, &["(1 3)"])).unwrap());
        let a3 = sub(&t, &["(1 2 3)"]);
        assert!(a3.is_product_subgroup(&h).unwrap());
    }

    #[test]
    fn cores_and_closures() {
        let t = table("sym:3");
        let h = sub(&t, &["(1 2)"]);
        assert!(h.normal_core().is_trivial());
        assert!(h.normal_closure().is_whole());
        let g = Subgroup::whole(&t);
        assert!(g.is_normal());
        assert_eq!(h.conjugate(0), h);
        assert_eq!(h.conjugate_by(&Perm::parse("(2 3)", 3).unwrap()).unwrap(), sub(&t, &["(1 3)"]));
    }

    #[test]
    fn subnormal_defects() {
        let t = table("sym:4");
        let h = sub(&t, &["(1 2)(3 4)"]);
        assert_eq!(h.subnormal_defect(), Some(2));
        let series = h.normal_closure_series(&Subgroup::whole(&t)).unwrap();
        assert_eq!(series.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![24, 4, 2]);
        assert_eq!(Subgroup::whole(&t).subnormal_defect(), Some(0));

        let t = table("sym:3");
        assert_eq!(sub(&t, &["(1 2)"]).subnormal_defect(), None);
        assert_eq!(sub(&t, &["(1 2 3)"]).subnormal_defect(), Some(1));
    }

    #[test]
    fn parent_mismatch() {
        let a = table("sym:3");
        let b = table("sym:3");
        let h = Subgroup::whole(&a);
        let k = Subgroup::whole(&b);
        assert!(matches!(h.intersection(&k), Err(Error::ParentMismatch)));
        assert!(matches!(h.join(&k), Err(Error::ParentMismatch)));
        assert!(matches!(
            Subgroup::trivial(&a).normal_closure_in(&sub(&a, &["(1 2)"])).map(|s| s.order()),
            Ok(1)
        ));
        assert!(matches!(
            Subgroup::whole(&a).normal_closure_in(&sub(&a, &["(1 2)"])),
            Err(Error::NotContained)
        ));
    }

    #[test]
    fn from_set_rejects_non_subgroups() {
        let t = table("sym:3");
        let h = sub(&t, &["(1 2)"]);
        let k = sub(&t, &["(1 3)"]);
        let product = h.product_set(&k).unwrap();
        assert!(Subgroup::from_set(&t, product).is_err());
        assert!(Subgroup::from_set(&t, h.members().clone()).is_ok());
    }
}
