use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{ElementSet, GroupTable, PermGroup};
use crate::subgroups::Subgroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeCaps {
    pub max_order: usize,
    pub max_subgroups: usize,
}

impl Default for LatticeCaps {
    fn default() -> Self {
        LatticeCaps {
            max_order: 200,
            max_subgroups: 20_000,
        }
    }
}

/// Every subgroup of a small group, sorted canonically, with inclusion,
/// normality and conjugacy data.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    table: Arc<GroupTable>,
    subgroups: Vec<Subgroup>,
    lookup: HashMap<ElementSet, usize>,
    normal: Vec<bool>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    /// `cyclic_of[x]` is the lattice index of `⟨x⟩`.
    cyclic_of: Vec<usize>,
}

pub fn all_subgroups(group: &PermGroup, caps: LatticeCaps) -> Result<SubgroupLattice> {
    let table = Arc::new(GroupTable::new(group, caps.max_order)?);
    SubgroupLattice::enumerate(&table, caps)
}

impl SubgroupLattice {
    /// Seeds with the cyclic subgroups and joins with cyclic subgroups until
    /// nothing new appears.
    pub fn enumerate(table: &Arc<GroupTable>, caps: LatticeCaps) -> Result<SubgroupLattice> {
        if table.order() > caps.max_order {
            return Err(Error::ResourceCap(format!(
                "group order {} exceeds lattice cap {}",
                table.order(),
                caps.max_order
            )));
        }
        let n = table.order();
        let mut found: Vec<(ElementSet, Vec<usize>)> = Vec::new();
        let mut seen: HashMap<ElementSet, usize> = HashMap::new();
        let mut cyclic_reps = Vec::new();

        let trivial = table.set_from([0]);
        seen.insert(trivial.clone(), 0);
        found.push((trivial, Vec::new()));
        for x in 1..n {
            let set = table.set_from(table.cyclic_powers(x));
            if !seen.contains_key(&set) {
                seen.insert(set.clone(), found.len());
                found.push((set, vec![x]));
                cyclic_reps.push(x);
            }
        }

        let mut head = 0;
        while head < found.len() {
            let (set, gens) = found[head].clone();
            head += 1;
            for &x in &cyclic_reps {
                if set.contains(x) {
                    continue;
                }
                let mut joined_gens = gens.clone();
                joined_gens.push(x);
                let joined = table.closure(&joined_gens);
                if seen.contains_key(&joined) {
                    continue;
                }
                if found.len() >= caps.max_subgroups {
                    return Err(Error::ResourceCap(format!(
                        "more than {} subgroups",
                        caps.max_subgroups
                    )));
                }
                seen.insert(joined.clone(), found.len());
                found.push((joined, joined_gens));
            }
        }

        let mut subgroups: Vec<Subgroup> = found
            .into_iter()
            .map(|(set, _)| Subgroup::from_closed_set(table, set))
            .collect();
        subgroups.sort();
        Ok(SubgroupLattice::from_sorted(table, subgroups))
    }

    fn from_sorted(table: &Arc<GroupTable>, subgroups: Vec<Subgroup>) -> SubgroupLattice {
        let lookup: HashMap<ElementSet, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();
        let normal = subgroups.iter().map(Subgroup::is_normal).collect();

        let mut class_of: Vec<usize> = (0..subgroups.len()).collect();
        for (i, s) in subgroups.iter().enumerate() {
            if class_of[i] != i {
                continue;
            }
            for g in 0..table.order() {
                let j = lookup[s.conjugate(g).members()];
                if j > i {
                    class_of[j] = i;
                }
            }
        }
        let mut class_ids: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..subgroups.len() {
            let id = *class_ids.entry(class_of[i]).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[id].push(i);
            class_of[i] = id;
        }

        let cyclic_of = (0..table.order())
            .map(|x| lookup[&table.set_from(table.cyclic_powers(x))])
            .collect();

        SubgroupLattice {
            table: Arc::clone(table),
            subgroups,
            lookup,
            normal,
            class_of,
            classes,
            cyclic_of,
        }
    }

    pub fn table(&self) -> &Arc<GroupTable> {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Subgroup)> {
        self.subgroups.iter().enumerate()
    }

    pub fn position(&self, s: &Subgroup) -> Option<usize> {
        if !Arc::ptr_eq(&self.table, s.table()) {
            return None;
        }
        self.lookup.get(s.members()).copied()
    }

    pub fn position_of_set(&self, set: &ElementSet) -> Option<usize> {
        self.lookup.get(set).copied()
    }

    pub fn trivial(&self) -> &Subgroup {
        &self.subgroups[0]
    }

    pub fn whole(&self) -> &Subgroup {
        self.subgroups.last().expect("lattice is never empty")
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn normal_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.normal[i])
    }

    pub fn conjugacy_class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Lattice index of `⟨x⟩` for an element index `x`.
    pub fn cyclic_of(&self, x: usize) -> usize {
        self.cyclic_of[x]
    }

    /// Indices of the cyclic subgroups, ascending.
    pub fn cyclic_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.cyclic_of.clone();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `j` with `subgroups[j] ≤ subgroups[i]`, `j != i`.
    pub fn proper_subgroups_of(&self, i: usize) -> Vec<usize> {
        let target = self.subgroups[i].members();
        (0..i)
            .filter(|&j| self.subgroups[j].members().is_subset(target))
            .collect()
    }

    /// `j` with `subgroups[i] < subgroups[j]`.
    pub fn proper_overgroups_of(&self, i: usize) -> Vec<usize> {
        let source = self.subgroups[i].members();
        (i + 1..self.len())
            .filter(|&j| source.is_subset(self.subgroups[j].members()))
            .collect()
    }

    /// Maximal proper subgroups of `subgroups[i]` (the Hasse covers below it).
    pub fn maximal_subgroups_of(&self, i: usize) -> Vec<usize> {
        let below = self.proper_subgroups_of(i);
        below
            .iter()
            .copied()
            .filter(|&j| {
                !below.iter().any(|&k| {
                    k != j
                        && self.subgroups[k].order() > self.subgroups[j].order()
                        && self.subgroups[j].members().is_subset(self.subgroups[k].members())
                })
            })
            .collect()
    }

    /// Inclusion Hasse diagram in DOT. Nodes are labeled `order/index`;
    /// normal subgroups are double circles; `shaded[i]` fills node `i`.
    pub fn to_dot(&self, shaded: &[bool]) -> String {
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n");
        for (i, s) in self.iter() {
            let mut attrs = format!("label=\"{}/{}\"", s.order(), s.index());
            if self.normal[i] {
                attrs.push_str(", shape=doublecircle");
            }
            if shaded.get(i).copied().unwrap_or(false) {
                attrs.push_str(", style=filled, fillcolor=lightgray");
            }
            let _ = writeln!(out, "  s{i} [{attrs}];");
        }
        for i in 0..self.len() {
            for j in self.maximal_subgroups_of(i) {
                let _ = writeln!(out, "  s{j} -> s{i};");
            }
        }
        out.push_str("}\n");
        out
    }
}
