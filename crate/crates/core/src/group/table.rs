//! Multiplication tables for small groups.

use std::collections::HashMap;
use std::fmt;

use crate::arith::checked_lcm;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

/// Fixed-size bitset over element indices of a [`GroupTable`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    words: Vec<u64>,
    len: usize,
}

impl ElementSet {
    pub fn empty(len: usize) -> ElementSet {
        ElementSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> ElementSet {
        let mut s = ElementSet::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns `true` if `i` was not present.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let word = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
            len: self.len,
        }
    }

    pub fn intersection_count(&self, other: &ElementSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + tz)
            })
        })
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A group of modest order with its elements indexed in canonical order and
/// a full multiplication table. Index 0 is the identity.
pub struct GroupTable {
    group: PermGroup,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    /// `powers[x]` lists `x^0, x^1, ..` up to (excluding) the return to identity.
    powers: Vec<Vec<u32>>,
    exponent: u64,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("degree", &self.group.degree())
            .field("order", &self.elements.len())
            .finish()
    }
}

impl GroupTable {
    pub fn new(group: &PermGroup, max_order: usize) -> Result<GroupTable> {
        let order = group.try_order()?;
        if order > max_order as u128 {
            return Err(Error::ResourceCap(format!(
                "group of order {order} exceeds table cap {max_order}"
            )));
        }
        let elements = group.elements(max_order)?.to_vec();
        let n = elements.len();
        let index: HashMap<Perm, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut mul = vec![0u32; n * n];
        for (a, x) in elements.iter().enumerate() {
            for (b, y) in elements.iter().enumerate() {
                mul[a * n + b] = index[&x.then(y)] as u32;
            }
        }
        let inv = elements.iter().map(|x| index[&x.inverse()] as u32).collect();
        let generators = group
            .generators()
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| index[g])
            .collect();
        let mut powers = Vec::with_capacity(n);
        let mut exponent = 1u64;
        for x in 0..n {
            let mut seq = vec![0u32];
            let mut cur = x;
            while cur != 0 {
                seq.push(cur as u32);
                cur = mul[cur * n + x] as usize;
            }
            exponent = checked_lcm(exponent as u128, seq.len() as u128)
                .and_then(|e| u64::try_from(e).ok())
                .ok_or_else(|| Error::Overflow("exponent".into()))?;
            powers.push(seq);
        }
        Ok(GroupTable {
            group: group.clone(),
            elements,
            index,
            mul,
            inv,
            generators,
            powers,
            exponent,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Indices of the non-identity generators of the underlying group.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// `a` then `b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.powers[a].len()
    }

    #[inline]
    pub fn pow(&self, a: usize, n: u64) -> usize {
        let seq = &self.powers[a];
        seq[(n % seq.len() as u64) as usize] as usize
    }

    /// `a^0, a^1, ..` through one full period.
    pub fn cyclic_powers(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.powers[a].iter().map(|&x| x as usize)
    }

    /// `g⁻¹ a g`.
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let left = self.mul(self.inv(a), self.inv(b));
        self.mul(self.mul(left, a), b)
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.order())
    }

    pub fn set_from<I: IntoIterator<Item = usize>>(&self, items: I) -> ElementSet {
        let mut s = self.empty_set();
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Subgroup generated by the given element indices, as a set.
    pub fn closure(&self, generators: &[usize]) -> ElementSet {
        let mut set = self.set_from([0]);
        let mut queue = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in generators {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }
}
