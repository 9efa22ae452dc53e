//! Permutations of `{0, .., degree-1}` and their cycle structure.
//!
//! Points are 0-based in the Rust API and 1-based in cycle notation.
//! Composition applies the left factor first: `p.compose(&q)` maps `i` to
//! `q(p(i))`.

use std::cmp::Ordering;
use std::fmt;

use crate::arith::checked_lcm;
use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = u16::MAX as usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    /// Panics if `degree` is 0 or above [`MAX_DEGREE`].
    pub fn identity(degree: usize) -> Perm {
        assert!(
            (1..=MAX_DEGREE).contains(&degree),
            "degree {degree} out of range"
        );
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images: point `i` goes to `images[i]`.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let degree = images.len();
        if !(1..=MAX_DEGREE).contains(&degree) {
            return Err(Error::BadDegree(degree));
        }
        let mut seen = vec![false; degree];
        for &im in images {
            if im >= degree || seen[im] {
                return Err(Error::parse(
                    &format!("{images:?}"),
                    "images do not form a bijection",
                ));
            }
            seen[im] = true;
        }
        Ok(Perm {
            images: images.iter().map(|&i| i as u16).collect(),
        })
    }

    /// Builds a permutation from disjoint 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        if !(1..=MAX_DEGREE).contains(&degree) {
            return Err(Error::BadDegree(degree));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt >= degree {
                    return Err(Error::parse(
                        &format!("{cycles:?}"),
                        format!("point {} exceeds degree {degree}", pt + 1),
                    ));
                }
                if used[pt] {
                    return Err(Error::parse(
                        &format!("{cycles:?}"),
                        format!("point {} repeated", pt + 1),
                    ));
                }
                used[pt] = true;
                images[pt] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im as usize)
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &im)| *i != im as usize)
            .map(|(i, _)| i)
    }

    pub fn moved_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &im)| *i != im as usize)
            .map(|(i, _)| i)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    /// Like [`Perm::compose`] without the degree check. Panics on mismatch.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u16;
        }
        Perm { images }
    }

    pub fn pow(&self, exp: u128) -> Perm {
        let mut result = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        result
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().then(self).then(g)
    }

    /// `self⁻¹ · other⁻¹ · self · other`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse()
            .then(&other.inverse())
            .then(self)
            .then(other)
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its
    /// least point, sorted by least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut seen = vec![false; self.degree()];
        let mut parts = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut pt = start;
            while !seen[pt] {
                seen[pt] = true;
                len += 1;
                pt = self.apply(pt);
            }
            parts.push(len);
        }
        CycleType::from_parts(parts)
    }

    pub fn order(&self) -> u128 {
        self.cycle_type().order()
    }

    pub fn parity(&self) -> Parity {
        self.cycle_type().parity()
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Parses 1-based disjoint-cycle notation such as `"(1 2)(3 4)"` or `"()"`.
    pub fn parse(text: &str, degree: usize) -> Result<Perm> {
        parse_cycles(text, degree)
    }

    /// Re-embeds on a larger point set, moving point `i` to `i + offset`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Result<Perm> {
        if offset + self.degree() > degree {
            return Err(Error::DegreeMismatch(offset + self.degree(), degree));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        for (i, im) in self.images().enumerate() {
            images[i + offset] = im + offset;
        }
        Perm::from_images(&images)
    }
}

/// Canonical order: identity first, then permutations are compared by the
/// image of the highest point, then the next highest, with larger images
/// sorting first. Permutations supported on low points therefore precede
/// those that move high points.
impl Ord for Perm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.images
            .len()
            .cmp(&other.images.len())
            .then_with(|| other.images.iter().rev().cmp(self.images.iter().rev()))
    }
}

impl PartialOrd for Perm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}; {}]", self.degree(), self)
    }
}

pub fn format_cycles(p: &Perm) -> String {
    p.to_string()
}

/// `perm := "()" | cycle+ ; cycle := "(" int (sep int)* ")" ; sep := " "+ | ","`
pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
    if !(1..=MAX_DEGREE).contains(&degree) {
        return Err(Error::BadDegree(degree));
    }
    let src = text.trim();
    if src == "()" {
        return Ok(Perm::identity(degree));
    }
    if src.is_empty() {
        return Err(Error::parse(text, "empty input"));
    }
    let bytes = src.as_bytes();
    let mut pos = 0;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(Error::parse(text, format!("expected '(' at offset {pos}")));
        }
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(Error::parse(text, format!("expected a point at offset {pos}")));
            }
            let value: usize = src[start..pos]
                .parse()
                .map_err(|_| Error::parse(text, "point out of range"))?;
            if value == 0 || value > degree {
                return Err(Error::parse(
                    text,
                    format!("point {value} outside 1..={degree}"),
                ));
            }
            cycle.push(value - 1);
            match bytes.get(pos) {
                Some(b')') => {
                    pos += 1;
                    break;
                }
                Some(b',') => pos += 1,
                Some(b' ') => {
                    while bytes.get(pos) == Some(&b' ') {
                        pos += 1;
                    }
                }
                _ => return Err(Error::parse(text, "unterminated cycle")),
            }
        }
        cycles.push(cycle);
    }
    Perm::from_cycles(degree, &cycles).map_err(|e| match e {
        Error::Parse { reason, .. } => Error::parse(text, reason),
        other => other,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Cycle lengths of a permutation, fixed points included, in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn from_parts(mut parts: Vec<usize>) -> CycleType {
        debug_assert!(parts.iter().all(|&p| p > 0));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_cycles(&self) -> usize {
        self.parts.len()
    }

    pub fn parity(&self) -> Parity {
        if (self.degree() - self.num_cycles()) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn checked_order(&self) -> Option<u128> {
        self.parts
            .iter()
            .try_fold(1u128, |acc, &p| checked_lcm(acc, p as u128))
    }

    /// Panics if the lcm of the parts does not fit in a `u128`.
    pub fn order(&self) -> u128 {
        self.checked_order()
            .expect("permutation order overflows u128")
    }
}

/// Iterator over the partitions of `n` as non-increasing part lists.
pub struct Partitions {
    current: Option<Vec<usize>>,
}

pub fn partitions(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

impl Iterator for Partitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        // successor in reverse-lexicographic order
        let mut next = out.clone();
        let mut ones = 0;
        while next.last() == Some(&1) {
            next.pop();
            ones += 1;
        }
        if let Some(last) = next.pop() {
            let part = last - 1;
            let mut rest = ones + 1;
            next.push(part);
            while rest > 0 {
                let take = rest.min(part);
                next.push(take);
                rest -= take;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Degrees up to this bound get a literal walk over all partitions; beyond it
/// the exponent is read off from which cycle lengths can occur at all.
pub const PARTITION_WALK_LIMIT: usize = 40;

/// Exponent of `Sym(n)` or `Alt(n)` from the admissible cycle types.
pub fn exponent_from_cycle_types(n: usize, alternating: bool) -> Result<u128> {
    let overflow = || Error::Overflow(format!("exponent of degree-{n} group"));
    if n <= PARTITION_WALK_LIMIT {
        let mut exp = 1u128;
        for parts in partitions(n) {
            let ct = CycleType::from_parts(parts);
            if alternating && ct.parity() == Parity::Odd {
                continue;
            }
            exp = checked_lcm(exp, ct.checked_order().ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
        return Ok(exp);
    }
    // Sym(n): every length k <= n occurs. Alt(n): odd k occurs as a k-cycle,
    // even k needs an extra transposition, so k <= n - 2.
    let mut exp = 1u128;
    for k in 1..=n {
        if alternating && k % 2 == 0 && k + 2 > n {
            continue;
        }
        exp = checked_lcm(exp, k as u128).ok_or_else(overflow)?;
    }
    Ok(exp)
}
