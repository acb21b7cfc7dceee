//! Deterministic Schreier-Sims: a base and strong generating set with
//! explicit transversals at every level.

use crate::error::{Error, Result};

use super::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base_point: u32,
    /// Strong generators fixing every earlier base point.
    pub generators: Vec<Permutation>,
    /// Fundamental orbit in breadth-first discovery order; `orbit[0]` is the base point.
    pub orbit: Vec<u32>,
    /// `reps[i]` maps the base point to `orbit[i]`.
    pub reps: Vec<Permutation>,
    pub reps_inv: Vec<Permutation>,
    /// Point -> index into `orbit`, or `NOT_IN_ORBIT`.
    position: Vec<u32>,
}

impl Level {
    fn new(base_point: u32, degree: usize) -> Self {
        let mut level = Level {
            base_point,
            generators: Vec::new(),
            orbit: Vec::new(),
            reps: Vec::new(),
            reps_inv: Vec::new(),
            position: vec![NOT_IN_ORBIT; degree],
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.position.iter_mut().for_each(|p| *p = NOT_IN_ORBIT);
        self.orbit.clear();
        self.reps.clear();
        self.position[self.base_point as usize] = 0;
        self.orbit.push(self.base_point);
        self.reps.push(Permutation::identity(degree));
        let mut next = 0;
        while next < self.orbit.len() {
            let point = self.orbit[next];
            for gen in &self.generators {
                let image = gen.image(point);
                if self.position[image as usize] == NOT_IN_ORBIT {
                    self.position[image as usize] = self.orbit.len() as u32;
                    self.orbit.push(image);
                    self.reps.push(self.reps[next].compose(gen));
                }
            }
            next += 1;
        }
        self.reps_inv = self.reps.iter().map(Permutation::inverse).collect();
    }

    #[inline]
    pub fn position(&self, point: u32) -> Option<usize> {
        match self.position[point as usize] {
            NOT_IN_ORBIT => None,
            i => Some(i as usize),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    /// Base points are chosen as the smallest point moved by the element that
    /// forces a new level, so the chain depends only on the generator list.
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut chain = StabChain { degree, levels: Vec::new() };
        for g in &gens {
            if chain.levels.iter().all(|l| g.image(l.base_point) == l.base_point) {
                let point = g.smallest_moved_point().expect("non-identity");
                chain.levels.push(Level::new(point, degree));
            }
        }
        for i in 0..chain.levels.len() {
            let fixed: Vec<u32> = chain.levels[..i].iter().map(|l| l.base_point).collect();
            chain.levels[i].generators =
                gens.iter().filter(|g| fixed.iter().all(|&b| g.image(b) == b)).cloned().collect();
            chain.levels[i].rebuild_orbit(degree);
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let level = i as usize;
            let orbit_len = self.levels[level].orbit.len();
            for b in 0..orbit_len {
                for x in 0..self.levels[level].generators.len() {
                    let lv = &self.levels[level];
                    let gen = &lv.generators[x];
                    let image = gen.image(lv.orbit[b]);
                    let target = lv.position(image).expect("orbit is closed");
                    let lhs = lv.reps[b].compose(gen);
                    if lhs == lv.reps[target] {
                        continue;
                    }
                    let schreier = lhs.compose(&lv.reps_inv[target]);
                    let (residue, drop) = self.sift(schreier, level + 1);
                    if drop < self.levels.len() || !residue.is_identity() {
                        if drop == self.levels.len() {
                            let point = residue.smallest_moved_point().expect("non-identity residue");
                            self.levels.push(Level::new(point, self.degree));
                        }
                        for l in level + 1..=drop {
                            self.levels[l].generators.push(residue.clone());
                            self.levels[l].rebuild_orbit(self.degree);
                        }
                        i = drop as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Strips `g` through the levels starting at `from`. Returns the residue
    /// and the index of the level where stripping stopped (`levels.len()` if
    /// it passed every level).
    pub fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let image = g.image(level.base_point);
            match level.position(image) {
                Some(pos) => g = g.compose(&level.reps_inv[pos]),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (residue, drop) = self.sift(g.clone(), 0);
        drop == self.levels.len() && residue.is_identity()
    }

    pub fn order(&self) -> Result<u64> {
        self.levels.iter().try_fold(1u64, |acc, l| acc.checked_mul(l.orbit.len() as u64)).ok_or(Error::OrderOverflow)
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.generators {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}
