//! Deterministic Schreier-Sims.
//!
//! Base points are always the first point moved by the generator that forces
//! a new level, so the base and the strong generating set depend only on the
//! input generator list.

use crate::perm::Perm;

#[derive(Debug, Clone)]
pub struct Level {
    pub base_point: usize,
    /// Strong generators fixing every earlier base point.
    pub generators: Vec<Perm>,
    /// Orbit of `base_point`, in discovery order.
    pub orbit: Vec<usize>,
    /// `transversal[q]` maps `base_point` to `q`, for `q` in the orbit.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Level {
        let mut level = Level {
            base_point,
            generators: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        level.rebuild_orbit();
        level
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.base_point] = Some(Perm::identity(degree));
        self.orbit = vec![self.base_point];
        let mut head = 0;
        while head < self.orbit.len() {
            let pt = self.orbit[head];
            head += 1;
            for g in &self.generators {
                let next = g.apply(pt);
                if self.transversal[next].is_none() {
                    let rep = self.transversal[pt].as_ref().unwrap().then(g);
                    self.transversal[next] = Some(rep);
                    self.orbit.push(next);
                }
            }
        }
    }

    pub fn transversal(&self, point: usize) -> Option<&Perm> {
        self.transversal[point].as_ref()
    }
}

#[derive(Debug, Clone)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(degree: usize, generators: &[Perm]) -> Bsgs {
        let gens: Vec<Perm> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut bsgs = Bsgs {
            degree,
            levels: Vec::new(),
        };
        // every generator must move some base point
        for g in &gens {
            let base: Vec<usize> = bsgs.levels.iter().map(|l| l.base_point).collect();
            if base.iter().all(|&b| g.apply(b) == b) {
                let pt = g.first_moved_point().unwrap();
                bsgs.levels.push(Level::new(pt, degree));
            }
        }
        let base: Vec<usize> = bsgs.levels.iter().map(|l| l.base_point).collect();
        for g in &gens {
            for (i, level) in bsgs.levels.iter_mut().enumerate() {
                if base[..i].iter().all(|&b| g.apply(b) == b) {
                    level.generators.push(g.clone());
                } else {
                    break;
                }
            }
        }
        for level in &mut bsgs.levels {
            level.rebuild_orbit();
        }
        bsgs.complete();
        bsgs
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        'outer: while i > 0 {
            let lvl = i - 1;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].generators.clone();
            for &pt in &orbit {
                let u = self.levels[lvl].transversal(pt).unwrap().clone();
                for s in &gens {
                    let target = s.apply(pt);
                    let back = self.levels[lvl].transversal(target).unwrap().inverse();
                    let schreier = u.then(s).then(&back);
                    let (residue, stop) = self.sift_from(&schreier, lvl + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if stop == self.levels.len() {
                        let pt = residue.first_moved_point().unwrap();
                        self.levels.push(Level::new(pt, self.degree));
                    }
                    for l in lvl + 1..=stop {
                        self.levels[l].generators.push(residue.clone());
                        self.levels[l].rebuild_orbit();
                    }
                    i = stop + 1;
                    continue 'outer;
                }
            }
            i -= 1;
        }
    }

    /// Strips `g` through levels `start..`; returns the residue and the level
    /// where stripping stopped (`levels.len()` if it went all the way).
    fn sift_from(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let pt = h.apply(level.base_point);
            match level.transversal(pt) {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift_from(g, 0).0.is_identity()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn checked_order(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    /// Element indexed by one orbit point per level: the product of the
    /// chosen transversal elements, deepest level first.
    pub fn element_from_choices(&self, choices: &[usize]) -> Perm {
        let mut g = Perm::identity(self.degree);
        for (level, &c) in self.levels.iter().zip(choices).rev() {
            let pt = level.orbit[c % level.orbit.len()];
            g = g.then(level.transversal(pt).unwrap());
        }
        g
    }
}
