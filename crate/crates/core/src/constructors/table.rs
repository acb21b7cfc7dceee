use std::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::FiniteGroup;
use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

/// An element of a [`TableGroup`]: a pair of coordinates whose meaning
/// depends on the construction (residues, or a vector index and an index
/// into the acting group).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TableElement {
    pub a: u32,
    pub b: u32,
}

impl TableElement {
    pub const fn new(a: u32, b: u32) -> Self {
        TableElement { a, b }
    }
}

impl fmt::Display for TableElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Multiplication rule on `0..first × 0..second`.
pub(crate) trait Law: Send + Sync {
    fn first(&self) -> u32;
    fn second(&self) -> u32;
    fn multiply(&self, x: TableElement, y: TableElement) -> TableElement;
    fn invert(&self, x: TableElement) -> TableElement;
}

/// A group given by an explicit multiplication rule on pairs.
pub struct TableGroup {
    name: String,
    law: Box<dyn Law>,
    generators: Vec<TableElement>,
}

impl fmt::Debug for TableGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TableGroup")
            .field("name", &self.name)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl TableGroup {
    pub(crate) fn new(name: String, law: Box<dyn Law>, generators: Vec<TableElement>) -> Self {
        TableGroup { name, law, generators }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[TableElement] {
        &self.generators
    }

    pub fn index(&self, x: TableElement) -> usize {
        x.a as usize + x.b as usize * self.law.first() as usize
    }

    pub fn element_at(&self, index: usize) -> TableElement {
        let first = self.law.first() as usize;
        TableElement::new((index % first) as u32, (index / first) as u32)
    }

    /// The right regular representation: generator `s` acts on the element
    /// indices by `g ↦ g s`, so the identity (index 0) is sent to `s`.
    pub fn to_perm_group(&self) -> Result<PermGroup> {
        let n = self.order() as usize;
        let gens = self
            .generators
            .iter()
            .map(|&s| {
                let images = (0..n).map(|i| self.index(self.law.multiply(self.element_at(i), s)) as u32).collect();
                Permutation::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        PermGroup::from_generators(gens, n)
    }

    /// The element represented by a permutation of the regular representation.
    pub fn element_of(&self, perm: &Permutation) -> TableElement {
        self.element_at(perm.image(0) as usize)
    }

    /// Identity and inverse laws on every element, associativity on random triples.
    pub fn check_axioms(&self, triples: usize, seed: u64) -> Result<()> {
        let one = FiniteGroup::identity(self);
        for x in FiniteGroup::elements(self) {
            let xi = self.invert(&x);
            if self.multiply(&x, &one) != x || self.multiply(&one, &x) != x {
                return Err(Error::Precondition(format!("identity law fails at {x}")));
            }
            if self.multiply(&x, &xi) != one || self.multiply(&xi, &x) != one {
                return Err(Error::Precondition(format!("inverse law fails at {x}")));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..triples {
            let [x, y, z] = [(); 3].map(|_| self.random_element(&mut rng));
            let left = self.multiply(&self.multiply(&x, &y), &z);
            let right = self.multiply(&x, &self.multiply(&y, &z));
            if left != right {
                return Err(Error::Precondition(format!("associativity fails at {x}, {y}, {z}")));
            }
        }
        Ok(())
    }
}

impl FiniteGroup for TableGroup {
    type Element = TableElement;

    fn identity(&self) -> TableElement {
        TableElement::new(0, 0)
    }

    fn multiply(&self, a: &TableElement, b: &TableElement) -> TableElement {
        self.law.multiply(*a, *b)
    }

    fn invert(&self, a: &TableElement) -> TableElement {
        self.law.invert(*a)
    }

    fn order(&self) -> u64 {
        self.law.first() as u64 * self.law.second() as u64
    }

    fn elements(&self) -> Box<dyn Iterator<Item = TableElement> + '_> {
        let first = self.law.first();
        Box::new((0..self.law.second()).flat_map(move |b| (0..first).map(move |a| TableElement::new(a, b))))
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> TableElement {
        let a = rng.random_range(0..self.law.first());
        let b = rng.random_range(0..self.law.second());
        TableElement::new(a, b)
    }
}
