//! Permutation groups given by generators.

mod bsgs;
mod quotient;
mod spec;
mod table;

use std::collections::HashSet;
use std::sync::OnceLock;

use rand::Rng;

pub use bsgs::{Bsgs, Level};
pub use quotient::{quotient, Quotient};
pub use spec::{construct, parse_generator_file, read_generator_file, GroupSpec, M10_GENERATORS};
pub use table::{ElementSet, GroupTable};

use crate::arith::checked_lcm;
use crate::error::{Error, Result};
use crate::perm::{exponent_from_cycle_types, Perm, MAX_DEGREE};

/// Default bound on the number of elements materialized by [`PermGroup::elements`].
pub const DEFAULT_MAX_ELEMENTS: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Symmetric,
    Alternating,
}

/// A permutation group on `{0, .., degree-1}`.
///
/// The element list and the stabilizer chain are built on first use and
/// cached; concurrent callers block on a single build.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    bsgs: OnceLock<Bsgs>,
    elements: OnceLock<Vec<Perm>>,
}

impl PermGroup {
    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        if !(1..=MAX_DEGREE).contains(&degree) {
            return Err(Error::BadDegree(degree));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(g.degree(), degree));
        }
        Ok(PermGroup {
            degree,
            generators,
            bsgs: OnceLock::new(),
            elements: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::from_generators(degree, Vec::new()).expect("valid degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.bsgs
            .get_or_init(|| Bsgs::new(self.degree, &self.generators))
    }

    pub fn try_order(&self) -> Result<u128> {
        self.bsgs()
            .checked_order()
            .ok_or_else(|| Error::Overflow("group order exceeds u128".into()))
    }

    /// Exact order from the stabilizer chain. Panics past `u128`.
    pub fn order(&self) -> u128 {
        self.try_order().expect("group order overflows u128")
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(p.degree(), self.degree));
        }
        if let Some(elements) = self.elements.get() {
            return Ok(elements.binary_search(p).is_ok());
        }
        Ok(self.bsgs().contains(p))
    }

    /// All elements in canonical order, built by breadth-first closure over
    /// the generators.
    pub fn elements(&self, cap: usize) -> Result<&[Perm]> {
        if let Some(elements) = self.elements.get() {
            return Ok(elements);
        }
        let order = self.try_order()?;
        if order > cap as u128 {
            return Err(Error::ResourceCap(format!(
                "group of order {order} exceeds element cap {cap}"
            )));
        }
        let elements = self.closure_elements();
        if elements.len() as u128 != order {
            return Err(Error::InternalDisagreement(format!(
                "closure found {} elements, stabilizer chain says {order}",
                elements.len()
            )));
        }
        Ok(self.elements.get_or_init(|| elements))
    }

    fn closure_elements(&self) -> Vec<Perm> {
        let id = self.identity();
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head].clone();
            head += 1;
            for g in &self.generators {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        queue.sort();
        queue
    }

    /// Points moved by at least one generator.
    pub fn moved_points(&self) -> Vec<usize> {
        let mut moved = vec![false; self.degree];
        for g in &self.generators {
            for pt in g.moved_points() {
                moved[pt] = true;
            }
        }
        (0..self.degree).filter(|&i| moved[i]).collect()
    }

    /// Recognizes the full symmetric or alternating group on the moved points
    /// by comparing orders.
    pub fn natural_family(&self) -> Option<(Family, usize)> {
        let m = self.moved_points().len();
        if m < 2 {
            return None;
        }
        let factorial = (1..=m as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))?;
        let order = self.try_order().ok()?;
        if order == factorial {
            Some((Family::Symmetric, m))
        } else if m >= 3 && order * 2 == factorial {
            Some((Family::Alternating, m))
        } else {
            None
        }
    }

    /// Least common multiple of the element orders. Full symmetric and
    /// alternating groups go through cycle types; anything else is
    /// enumerated within `cap`.
    pub fn exponent(&self, cap: usize) -> Result<u128> {
        if self.generators.iter().all(Perm::is_identity) {
            return Ok(1);
        }
        if let Some((family, m)) = self.natural_family() {
            return exponent_from_cycle_types(m, family == Family::Alternating);
        }
        self.exponent_by_enumeration(cap)
    }

    pub fn exponent_by_enumeration(&self, cap: usize) -> Result<u128> {
        self.elements(cap)?.iter().try_fold(1u128, |acc, x| {
            let ord = x
                .cycle_type()
                .checked_order()
                .ok_or_else(|| Error::Overflow("element order".into()))?;
            checked_lcm(acc, ord).ok_or_else(|| Error::Overflow("exponent".into()))
        })
    }

    /// Uniformly distributed element, drawn through the stabilizer chain.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        let bsgs = self.bsgs();
        let choices: Vec<usize> = bsgs
            .levels()
            .iter()
            .map(|l| rng.gen_range(0..l.orbit.len()))
            .collect();
        bsgs.element_from_choices(&choices)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Direct product acting on the disjoint union of the two point sets.
    pub fn direct_product(&self, other: &PermGroup) -> Result<PermGroup> {
        let degree = self.degree + other.degree;
        if degree > MAX_DEGREE {
            return Err(Error::BadDegree(degree));
        }
        let mut gens = Vec::with_capacity(self.generators.len() + other.generators.len());
        for g in &self.generators {
            gens.push(g.shifted(0, degree)?);
        }
        for g in &other.generators {
            gens.push(g.shifted(self.degree, degree)?);
        }
        PermGroup::from_generators(degree, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_generators(
            degree,
            gens.iter().map(|g| Perm::parse(g, degree).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn small_orders() {
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.elements(100).unwrap().len(), 6);
        let trivial = group(4, &[]);
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.elements(10).unwrap(), &[Perm::identity(4)]);
        let klein = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(klein.order(), 4);
        assert!(!klein.contains(&Perm::parse("(1 2)", 4).unwrap()).unwrap());
        assert!(klein.contains(&Perm::parse("(1 4)(2 3)", 4).unwrap()).unwrap());
    }

    #[test]
    fn degree_errors() {
        assert!(matches!(
            PermGroup::from_generators(4, vec![Perm::identity(3)]),
            Err(Error::DegreeMismatch(3, 4))
        ));
        let s3 = group(3, &["(1 2)"]);
        assert!(s3.contains(&Perm::identity(4)).is_err());
    }

    #[test]
    fn element_cap() {
        let s5 = group(5, &["(1 2)", "(1 2 3 4 5)"]);
        assert!(matches!(s5.elements(100), Err(Error::ResourceCap(_))));
        assert_eq!(s5.elements(120).unwrap().len(), 120);
    }

    #[test]
    fn exponent_routes_agree() {
        let a4 = group(4, &["(1 2 3)", "(1 2 4)"]);
        assert_eq!(a4.natural_family(), Some((Family::Alternating, 4)));
        assert_eq!(a4.exponent(1000).unwrap(), 6);
        assert_eq!(a4.exponent_by_enumeration(1000).unwrap(), 6);
        let klein = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(klein.natural_family(), None);
        assert_eq!(klein.exponent(10).unwrap(), 2);
    }

    #[test]
    fn natural_family_on_moved_points_only() {
        // Sym(3) sitting on points 5..7 of a degree-7 set
        let g = group(7, &["(5 6)", "(5 6 7)"]);
        assert_eq!(g.natural_family(), Some((Family::Symmetric, 3)));
        assert_eq!(g.exponent(10).unwrap(), 6);
    }
}
