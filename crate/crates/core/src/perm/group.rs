use std::collections::VecDeque;

use rand::Rng;

use crate::error::{Error, Result};
use crate::Limits;

use super::chain::StabChain;
use super::table::GroupTable;
use super::Permutation;

/// A permutation group with a complete stabilizer chain.
///
/// Immutable after construction.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u64,
}

impl PermGroup {
    pub fn from_generators(generators: Vec<Permutation>, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: bad.degree() });
        }
        let chain = StabChain::new(degree, &generators);
        let order = chain.order()?;
        Ok(PermGroup { degree, generators, chain, order })
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        PermGroup::from_generators(Vec::new(), degree)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn base(&self) -> Vec<u32> {
        self.chain.base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain.strong_generators()
    }

    /// Sizes of the fundamental orbits, from the first base point down.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: g.degree() });
        }
        Ok(self.chain.contains(g))
    }

    pub fn check_enumerable(&self, threshold: u64) -> Result<()> {
        if self.order > threshold {
            return Err(Error::ThresholdExceeded { order: self.order, threshold });
        }
        Ok(())
    }

    /// Every element exactly once, refusing groups above `threshold`.
    pub fn elements(&self, threshold: u64) -> Result<Elements<'_>> {
        self.check_enumerable(threshold)?;
        Ok(self.elements_unchecked())
    }

    pub(crate) fn elements_unchecked(&self) -> Elements<'_> {
        Elements::new(&self.chain)
    }

    /// A uniformly distributed element: one random transversal element per level.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.chain.levels.iter().rev() {
            let i = rng.random_range(0..level.reps.len());
            g = g.compose(&level.reps[i]);
        }
        g
    }

    /// Enumerates the group into an indexed element table.
    pub fn table(&self, limits: &Limits) -> Result<GroupTable> {
        self.check_enumerable(limits.enumeration)?;
        Ok(GroupTable::new(self))
    }

    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point as usize] = true;
        let mut queue = VecDeque::from([point]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.image(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }
}

/// Odometer over the transversals; each element is
/// `reps[k-1][i_{k-1}] * ... * reps[0][i_0]` with `i_0` varying fastest.
pub struct Elements<'a> {
    chain: &'a StabChain,
    indices: Vec<usize>,
    /// `partial[l]` is the product of the chosen reps from the top level down to `l`.
    partial: Vec<Permutation>,
    done: bool,
}

impl<'a> Elements<'a> {
    fn new(chain: &'a StabChain) -> Self {
        let k = chain.levels.len();
        Elements {
            chain,
            indices: vec![0; k],
            partial: vec![Permutation::identity(chain.degree()); k + 1],
            done: false,
        }
    }
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let current = self.partial[0].clone();
        // advance the odometer
        let levels = &self.chain.levels;
        let mut l = 0;
        loop {
            if l == levels.len() {
                self.done = true;
                break;
            }
            self.indices[l] += 1;
            if self.indices[l] < levels[l].reps.len() {
                self.partial[l] = self.partial[l + 1].compose(&levels[l].reps[self.indices[l]]);
                for m in (0..l).rev() {
                    self.indices[m] = 0;
                    self.partial[m] = self.partial[m + 1].clone();
                }
                break;
            }
            l += 1;
        }
        Some(current)
    }
}
