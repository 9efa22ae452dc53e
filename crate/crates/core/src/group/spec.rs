//! Group constructor expressions such as `sym:4`, `cyc:4 x sym:3` or
//! `file:gens.txt`.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

/// Generators of a degree-10 group of order 720 contained in `Alt(10)`:
/// the action on the projective line over the field with nine elements of
/// `z -> z+1`, `z -> w^2 z`, `z -> -1/z` and `z -> w z^3`, with `w` a
/// primitive element. Checked at construction time.
pub const M10_GENERATORS: [&str; 4] = [
    "(1 2 3)(4 5 6)(7 8 9)",
    "(2 7 3 4)(5 8 9 6)",
    "(1 10)(2 3)(5 8)(6 9)",
    "(2 5 3 9)(4 8 7 6)",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Named { name: String, param: Option<u64> },
    File(PathBuf),
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let factors: Vec<&str> = text.trim().split(" x ").collect();
        if factors.len() > 1 {
            return factors
                .iter()
                .map(|f| GroupSpec::parse_atom(f))
                .collect::<Result<Vec<_>>>()
                .map(GroupSpec::Product);
        }
        GroupSpec::parse_atom(factors[0])
    }

    fn parse_atom(text: &str) -> Result<GroupSpec> {
        if let Some(path) = text.strip_prefix("file:") {
            if path.is_empty() {
                return Err(Error::bad_param("file", "missing path"));
            }
            return Ok(GroupSpec::File(PathBuf::from(path)));
        }
        let (name, param) = match text.split_once(':') {
            Some((name, p)) => {
                let value = p
                    .parse::<u64>()
                    .map_err(|_| Error::bad_param(name, format!("not an integer: {p:?}")))?;
                (name, Some(value))
            }
            None => (text, None),
        };
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric()) {
            return Err(Error::UnknownName(text.to_string()));
        }
        Ok(GroupSpec::Named {
            name: name.to_string(),
            param,
        })
    }

    pub fn construct(&self) -> Result<PermGroup> {
        construct(self)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Named { name, param: None } => f.write_str(name),
            GroupSpec::Named {
                name,
                param: Some(p),
            } => write!(f, "{name}:{p}"),
            GroupSpec::File(path) => write!(f, "file:{}", path.display()),
            GroupSpec::Product(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn construct(spec: &GroupSpec) -> Result<PermGroup> {
    match spec {
        GroupSpec::Named { name, param } => named(name, *param),
        GroupSpec::File(path) => read_generator_file(path),
        GroupSpec::Product(factors) => {
            let mut iter = factors.iter();
            let first = construct(iter.next().expect("non-empty product"))?;
            iter.try_fold(first, |acc, factor| acc.direct_product(&construct(factor)?))
        }
    }
}

fn require(name: &str, param: Option<u64>) -> Result<usize> {
    let n = param.ok_or_else(|| Error::bad_param(name, "missing parameter"))?;
    if n == 0 {
        return Err(Error::bad_param(name, "parameter must be positive"));
    }
    usize::try_from(n)
        .ok()
        .filter(|&n| n <= crate::perm::MAX_DEGREE)
        .ok_or_else(|| Error::bad_param(name, "parameter too large"))
}

fn forbid(name: &str, param: Option<u64>) -> Result<()> {
    match param {
        Some(_) => Err(Error::bad_param(name, "takes no parameter")),
        None => Ok(()),
    }
}

fn named(name: &str, param: Option<u64>) -> Result<PermGroup> {
    match name {
        "sym" => symmetric(require(name, param)?),
        "alt" => alternating(require(name, param)?),
        "cyc" => cyclic(require(name, param)?),
        "dih" => dihedral(require(name, param)?),
        "dic" => dicyclic(require(name, param)?),
        "q8" => {
            forbid(name, param)?;
            dicyclic(8)
        }
        "sl23" => {
            forbid(name, param)?;
            sl23()
        }
        "m10" => {
            forbid(name, param)?;
            m10()
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

fn cycle(points: impl IntoIterator<Item = usize>, degree: usize) -> Result<Perm> {
    Perm::from_cycles(degree, &[points.into_iter().collect()])
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n < 2 {
        return PermGroup::from_generators(n.max(1), Vec::new());
    }
    PermGroup::from_generators(n, vec![cycle([0, 1], n)?, cycle(0..n, n)?])
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return PermGroup::from_generators(n.max(1), Vec::new());
    }
    let gens = (2..n).map(|i| cycle([0, 1, i], n)).collect::<Result<_>>()?;
    PermGroup::from_generators(n, gens)
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 1 {
        return PermGroup::from_generators(1, Vec::new());
    }
    PermGroup::from_generators(n, vec![cycle(0..n, n)?])
}

/// Dihedral group of order `m`, acting on the vertices of an `m/2`-gon.
pub fn dihedral(m: usize) -> Result<PermGroup> {
    if m % 2 != 0 {
        return Err(Error::bad_param("dih", "order must be even"));
    }
    match m {
        2 => cyclic(2),
        4 => PermGroup::from_generators(
            4,
            vec![Perm::parse("(1 2)(3 4)", 4)?, Perm::parse("(1 3)(2 4)", 4)?],
        ),
        _ => {
            let k = m / 2;
            let rotation = cycle(0..k, k)?;
            let reflection: Vec<usize> = (0..k).map(|i| (k - i) % k).collect();
            PermGroup::from_generators(k, vec![rotation, Perm::from_images(&reflection)?])
        }
    }
}

/// Dicyclic group of order `m = 4k` in its regular representation.
/// Element `a^i x^e` is point `2k*e + i`.
pub fn dicyclic(m: usize) -> Result<PermGroup> {
    if m % 4 != 0 || m < 4 {
        return Err(Error::bad_param("dic", "order must be a positive multiple of 4"));
    }
    let two_k = m / 2;
    let k = m / 4;
    let point = |i: usize, e: usize| e * two_k + i % two_k;
    let mut by_a = vec![0; m];
    let mut by_x = vec![0; m];
    for i in 0..two_k {
        // a^i * a = a^(i+1);  a^i x * a = a^(i-1) x
        by_a[point(i, 0)] = point(i + 1, 0);
        by_a[point(i, 1)] = point(i + two_k - 1, 1);
        // a^i * x = a^i x;  a^i x * x = a^(i+k)
        by_x[point(i, 0)] = point(i, 1);
        by_x[point(i, 1)] = point(i + k, 0);
    }
    PermGroup::from_generators(m, vec![Perm::from_images(&by_a)?, Perm::from_images(&by_x)?])
}

/// `SL(2,3)` acting on the eight nonzero row vectors of the plane over the
/// three-element field, vectors numbered in lexicographic order.
pub fn sl23() -> Result<PermGroup> {
    let vectors: Vec<(usize, usize)> = (0..3)
        .flat_map(|a| (0..3).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    let index = |v: (usize, usize)| vectors.iter().position(|&w| w == v).unwrap();
    let act = |m: [[usize; 2]; 2]| -> Result<Perm> {
        let images: Vec<usize> = vectors
            .iter()
            .map(|&(a, b)| index(((a * m[0][0] + b * m[1][0]) % 3, (a * m[0][1] + b * m[1][1]) % 3)))
            .collect();
        Perm::from_images(&images)
    };
    let g = PermGroup::from_generators(8, vec![act([[1, 1], [0, 1]])?, act([[1, 0], [1, 1]])?])?;
    if g.order() != 24 {
        return Err(Error::ValidationFailed(format!("sl23 has order {}", g.order())));
    }
    Ok(g)
}

pub fn m10() -> Result<PermGroup> {
    let gens = M10_GENERATORS
        .iter()
        .map(|t| Perm::parse(t, 10))
        .collect::<Result<Vec<_>>>()?;
    if let Some(odd) = gens.iter().find(|g| !g.is_even()) {
        return Err(Error::ValidationFailed(format!("m10 generator {odd} is odd")));
    }
    let g = PermGroup::from_generators(10, gens)?;
    if g.order() != 720 {
        return Err(Error::ValidationFailed(format!(
            "m10 generators give order {}, expected 720",
            g.order()
        )));
    }
    Ok(g)
}

/// Line 1 is `degree <n>`; every further non-empty line not starting with
/// `#` is one permutation in cycle notation.
pub fn parse_generator_file(text: &str) -> Result<PermGroup> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::parse(text, "missing `degree <n>` line"))?;
    let degree: usize = header
        .strip_prefix("degree ")
        .and_then(|d| d.trim().parse().ok())
        .ok_or_else(|| Error::parse(header, "expected `degree <n>`"))?;
    let gens = lines
        .map(|l| Perm::parse(l, degree))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(degree, gens)
}

pub fn read_generator_file(path: &Path) -> Result<PermGroup> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_generator_file(&text)
}
