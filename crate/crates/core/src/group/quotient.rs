use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{GroupTable, PermGroup};
use crate::perm::Perm;
use crate::subgroups::Subgroup;

/// `G/N` realized as the action of `G` on the right cosets of `N`.
#[derive(Debug, Clone)]
pub struct Quotient {
    kernel: Subgroup,
    group: PermGroup,
    /// Coset label (0-based point of the quotient action) per parent element.
    coset_of: Vec<usize>,
    /// Image permutation per parent element.
    images: Vec<Perm>,
}

/// Builds `G/N` for a normal subgroup `N` of a tabulated `G`. Cosets are
/// labeled in order of their least element.
pub fn quotient(normal: &Subgroup) -> Result<Quotient> {
    if !normal.is_normal() {
        return Err(Error::NotNormal);
    }
    let table = normal.table();
    let n = table.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let label = reps.len();
        reps.push(g);
        for k in normal.member_indices() {
            coset_of[table.mul(k, g)] = label;
        }
    }
    let cosets = reps.len();
    let images = (0..n)
        .map(|g| {
            let points: Vec<usize> = reps.iter().map(|&r| coset_of[table.mul(r, g)]).collect();
            Perm::from_images(&points)
        })
        .collect::<Result<Vec<_>>>()?;
    let generators = table.generators().iter().map(|&g| images[g].clone()).collect();
    let group = PermGroup::from_generators(cosets, generators)?;
    if group.try_order()? * normal.order() as u128 != n as u128 {
        return Err(Error::InternalDisagreement(format!(
            "quotient of order {} by normal subgroup of order {} in group of order {n}",
            group.order(),
            normal.order()
        )));
    }
    Ok(Quotient {
        kernel: normal.clone(),
        group,
        coset_of,
        images,
    })
}

impl Quotient {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn coset_of(&self, element: usize) -> usize {
        self.coset_of[element]
    }

    pub fn image(&self, element: usize) -> &Perm {
        &self.images[element]
    }

    /// `H/N` inside a table of the quotient group, for `N ≤ H`.
    pub fn push_forward(&self, h: &Subgroup, quotient_table: &Arc<GroupTable>) -> Result<Subgroup> {
        if !Arc::ptr_eq(h.table(), self.kernel.table()) {
            return Err(Error::ParentMismatch);
        }
        if !self.kernel.is_subgroup_of(h) {
            return Err(Error::NotContained);
        }
        let gens: Vec<Perm> = h
            .generator_indices()
            .iter()
            .map(|&g| self.images[g].clone())
            .collect();
        Subgroup::from_perms(quotient_table, &gens)
    }

    /// Full preimage in the parent of a subgroup of the quotient.
    pub fn preimage(&self, s: &Subgroup) -> Result<Subgroup> {
        let quotient_table = s.table();
        let parent = self.kernel.table();
        let mut members = parent.empty_set();
        for (g, image) in self.images.iter().enumerate() {
            let idx = quotient_table.index_of(image).ok_or(Error::ParentMismatch)?;
            if s.contains_index(idx) {
                members.insert(g);
            }
        }
        Ok(Subgroup::from_closed_set(parent, members))
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

    #[test]
    fn sym4_mod_klein() {
        let t = table("sym:4");
        let v4 = Subgroup::from_perms(
            &t,
            &[Perm::parse("(1 2)(3 4)", 4).unwrap(), Perm::parse("(1 3)(2 4)", 4).unwrap()],
        )
        .unwrap();
        let q = quotient(&v4).unwrap();
        assert_eq!(q.group().order(), 6);
        assert_eq!(q.group().degree(), 6);
        // the image is non-abelian, hence Sym(3)
        let qt = Arc::new(GroupTable::new(q.group(), 100).unwrap());
        let whole = Subgroup::whole(&qt);
        assert!(!whole.normal_closure().is_trivial());
        let g = q.group().generators();
        assert!(g.iter().any(|a| g.iter().any(|b| a.then(b) != b.then(a))));

        let a4 = Subgroup::from_perms(&t, &[Perm::parse("(1 2 3)", 4).unwrap(), Perm::parse("(1 2)(3 4)", 4).unwrap()]).unwrap();
        let image = q.push_forward(&a4, &qt).unwrap();
        assert_eq!(image.order(), 3);
        assert_eq!(q.preimage(&image).unwrap(), a4);
    }

    #[test]
    fn trivial_and_whole_kernels() {
        let t = table("dih:12");
        let q = quotient(&Subgroup::trivial(&t)).unwrap();
        assert_eq!(q.group().order(), 12);
        let q = quotient(&Subgroup::whole(&t)).unwrap();
        assert_eq!(q.group().order(), 1);
    }

    #[test]
    fn rejects_non_normal() {
        let t = table("sym:3");
        let h = Subgroup::from_perms(&t, &[Perm::parse("(1 2)", 3).unwrap()]).unwrap();
        assert!(matches!(quotient(&h), Err(Error::NotNormal)));
    }
}
