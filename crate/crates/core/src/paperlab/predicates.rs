//! Relative orders, exponential subgroups, `S(G)` and `p`-subnormality as
//! executable predicates over a tabulated group.

use crate::arith::p_part;
use crate::error::{Error, Result};
use crate::group::{ElementSet, PermGroup};
use crate::perm::Perm;
use crate::structure::{power_subgroup, sylow_indices};
use crate::subgroups::{Subgroup, SubgroupLattice};

fn element_index(h: &Subgroup, x: &Perm) -> Result<usize> {
    h.table().index_of(x).ok_or(Error::NotInParent)
}

/// `|⟨x⟩ : ⟨x⟩ ∩ H|` for a parent element index.
pub fn relative_order_at(h: &Subgroup, x: usize) -> usize {
    let table = h.table();
    let cyclic = table.element_order(x);
    let inside = table.cyclic_powers(x).filter(|&y| h.contains_index(y)).count();
    cyclic / inside
}

pub fn relative_order(h: &Subgroup, x: &Perm) -> Result<usize> {
    Ok(relative_order_at(h, element_index(h, x)?))
}

/// Least `n ≥ 1` with `x^n ∈ H`.
pub fn min_power_into_at(h: &Subgroup, x: usize) -> usize {
    let table = h.table();
    let mut n = 1;
    let mut y = x;
    while !h.contains_index(y) {
        y = table.mul(y, x);
        n += 1;
    }
    n
}

pub fn min_power_into(h: &Subgroup, x: &Perm) -> Result<usize> {
    Ok(min_power_into_at(h, element_index(h, x)?))
}

/// `|⟨x⟩ : ⟨x⟩ ∩ H|` when `H` is only available through membership tests.
pub fn relative_order_by_membership(h: &PermGroup, x: &Perm) -> Result<u128> {
    let order = x.order();
    let mut inside = 0u128;
    let mut y = Perm::identity(x.degree());
    for _ in 0..order {
        if h.contains(&y)? {
            inside += 1;
        }
        y = y.then(x);
    }
    Ok(order / inside)
}

pub fn min_power_by_membership(h: &PermGroup, x: &Perm) -> Result<u128> {
    let mut y = x.clone();
    let mut n = 1u128;
    while !h.contains(&y)? {
        y = y.then(x);
        n += 1;
    }
    Ok(n)
}

/// `{x ∈ G : x^n ∈ H}`.
pub fn power_preimage(h: &Subgroup, n: u64) -> ElementSet {
    let table = h.table();
    table.set_from((0..table.order()).filter(|&x| h.contains_index(table.pow(x, n))))
}

/// `x^|M:H| ∈ H` for every `x ∈ M`.
pub fn is_exponential_in(h: &Subgroup, m: &Subgroup) -> Result<bool> {
    if !h.is_subgroup_of(m) {
        return Err(Error::NotContained);
    }
    let index = (m.order() / h.order()) as u64;
    let table = h.table();
    Ok(m.member_indices().all(|x| h.contains_index(table.pow(x, index))))
}

/// `x^|G:H| ∈ H` for every `x` of the parent.
pub fn is_exponential(h: &Subgroup) -> bool {
    let table = h.table();
    let index = h.index() as u64;
    (0..table.order()).all(|x| h.contains_index(table.pow(x, index)))
}

/// The same property via `G^|G:H| ≤ H`.
pub fn is_exponential_via_power_subgroup(h: &Subgroup) -> bool {
    let whole = Subgroup::whole(h.table());
    power_subgroup(&whole, h.index() as u64).is_subgroup_of(h)
}

/// First element `x` (canonical order) with `x^|M:H| ∉ H`.
pub fn exponential_violation(h: &Subgroup, m: &Subgroup) -> Option<usize> {
    let index = (m.order() / h.order()) as u64;
    let table = h.table();
    m.member_indices().find(|&x| !h.contains_index(table.pow(x, index)))
}

pub fn exponential_subgroups(lattice: &SubgroupLattice) -> Vec<Subgroup> {
    lattice
        .subgroups()
        .iter()
        .filter(|h| is_exponential(h))
        .cloned()
        .collect()
}

/// `S(G)` by brute force over the lattice, checked to be a subgroup.
pub fn s_set(lattice: &SubgroupLattice) -> Result<Subgroup> {
    let table = lattice.table();
    let members = table.set_from((0..table.order()).filter(|&x| {
        lattice
            .subgroups()
            .iter()
            .all(|h| h.contains_index(table.pow(x, h.index() as u64)))
    }));
    Subgroup::from_set(table, members).map_err(|_| {
        Error::InternalDisagreement("S(G) computed by brute force is not a subgroup".into())
    })
}

/// Both characterizations: `H ∩ P` is a Sylow `p`-subgroup of `H` for every
/// Sylow `P`, and `|HP|` divides `|G|` for every Sylow `P`.
pub fn is_p_subnormal(lattice: &SubgroupLattice, h: &Subgroup, p: u64) -> Result<bool> {
    let g = lattice.table().order();
    let h_part = p_part(h.order() as u128, p as u128) as usize;
    let mut by_intersection = true;
    let mut by_product = true;
    for i in sylow_indices(lattice, p) {
        let sylow = lattice.get(i);
        let meet = h.intersection_order(sylow)?;
        if meet != h_part {
            by_intersection = false;
        }
        let product = h.order() * sylow.order() / meet;
        if g % product != 0 {
            by_product = false;
        }
    }
    if by_intersection != by_product {
        return Err(Error::InternalDisagreement(format!(
            "{p}-subnormality: Sylow-intersection test says {by_intersection}, product test says {by_product}"
        )));
    }
    Ok(by_intersection)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{construct, GroupSpec};
    use crate::subgroups::{all_subgroups, LatticeCaps};

    fn lattice(spec: &str) -> SubgroupLattice {
        let g = construct(&GroupSpec::parse(spec).unwrap()).unwrap();
        all_subgroups(&g, LatticeCaps::default()).unwrap()
    }

    fn p(l: &SubgroupLattice, text: &str) -> Perm {
        Perm::parse(text, l.table().group().degree()).unwrap()
    }

    fn sub(l: &SubgroupLattice, gens: &[&str]) -> Subgroup {
        let perms: Vec<Perm> = gens.iter().map(|g| p(l, g)).collect();
        Subgroup::from_perms(l.table(), &perms).unwrap()
    }

    #[test]
    fn relative_orders() {
        let l = lattice("sym:3");
        let h = sub(&l, &["(1 2)"]);
        assert_eq!(relative_order(&h, &p(&l, "(1 2 3)")).unwrap(), 3);
        assert_eq!(relative_order(&h, &p(&l, "(1 2)")).unwrap(), 1);
        assert_eq!(relative_order(&h, &p(&l, "(1 3)")).unwrap(), 2);
        assert_eq!(min_power_into(&h, &p(&l, "(1 2 3)")).unwrap(), 3);
        assert_eq!(min_power_into(&h, &Perm::identity(3)).unwrap(), 1);
        let trivial = Subgroup::trivial(l.table());
        assert_eq!(min_power_into(&trivial, &p(&l, "(1 2 3)")).unwrap(), 3);
        assert!(matches!(
            relative_order(&h, &Perm::identity(4)),
            Err(Error::NotInParent)
        ));
    }

    #[test]
    fn membership_route_matches_table_route() {
        let l = lattice("sym:4");
        for h in l.subgroups() {
            let as_group = PermGroup::from_generators(4, h.generators()).unwrap();
            for x in l.table().elements() {
                assert_eq!(
                    relative_order_by_membership(&as_group, x).unwrap(),
                    relative_order(h, x).unwrap() as u128
                );
                assert_eq!(
                    min_power_by_membership(&as_group, x).unwrap(),
                    min_power_into(h, x).unwrap() as u128
                );
            }
        }
    }

    #[test]
    fn exponential_examples() {
        let l = lattice("sym:3");
        assert!(is_exponential(&sub(&l, &["(1 2 3)"])));
        let h = sub(&l, &["(1 2)"]);
        assert!(!is_exponential(&h));
        let x = exponential_violation(&h, l.whole()).unwrap();
        assert_eq!(l.table().element(x), &p(&l, "(2 3)"));
        let orders: Vec<usize> = exponential_subgroups(&l).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 3, 6]);

        let l = lattice("cyc:4 x sym:3");
        let h = sub(&l, &["(1 3)(2 4)", "(5 6)"]);
        assert_eq!(h.order(), 4);
        assert_eq!(h.index(), 6);
        assert!(is_exponential(&h));

        let l = lattice("dih:12");
        for s in l.subgroups().iter().filter(|s| s.order() == 2) {
            assert!(is_exponential(s));
        }
        let l = lattice("cyc:7");
        assert_eq!(exponential_subgroups(&l).len(), 2);
    }

    #[test]
    fn s_set_examples() {
        let l = lattice("sym:3");
        assert_eq!(s_set(&l).unwrap(), sub(&l, &["(1 2 3)"]));
        let l = lattice("sym:4");
        assert_eq!(s_set(&l).unwrap(), sub(&l, &["(1 2)(3 4)", "(1 3)(2 4)"]));
        let l = lattice("cyc:12");
        assert!(s_set(&l).unwrap().is_whole());
    }

    #[test]
    fn p_subnormality() {
        let l = lattice("sym:3");
        assert!(!is_p_subnormal(&l, &sub(&l, &["(1 2)"]), 2).unwrap());
        assert!(is_p_subnormal(&l, l.whole(), 2).unwrap());
        assert!(is_p_subnormal(&l, l.whole(), 3).unwrap());
        let l = lattice("sym:4");
        let a4 = sub(&l, &["(1 2 3)", "(1 2)(3 4)"]);
        assert!(is_p_subnormal(&l, &a4, 2).unwrap());
    }

    #[test]
    fn power_preimage_in_sym3() {
        let l = lattice("sym:3");
        let h = sub(&l, &["(1 2)"]);
        let set = power_preimage(&h, 3);
        let mut got: Vec<String> = set.iter().map(|i| l.table().element(i).to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["()", "(1 2 3)", "(1 2)", "(1 3 2)"]);
    }
}
