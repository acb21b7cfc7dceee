use std::fmt;
use std::hash::Hash;

use rand::RngCore;

use crate::perm::{PermGroup, Permutation};

/// The operations every concrete group representation provides.
pub trait FiniteGroup {
    type Element: Clone + Eq + Hash + fmt::Debug + fmt::Display;

    fn identity(&self) -> Self::Element;

    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn invert(&self, a: &Self::Element) -> Self::Element;

    fn order(&self) -> u64;

    /// Every element exactly once. Callers are responsible for size limits.
    fn elements(&self) -> Box<dyn Iterator<Item = Self::Element> + '_>;

    /// A uniformly distributed element.
    fn random_element(&self, rng: &mut dyn RngCore) -> Self::Element;

    fn element_order(&self, a: &Self::Element) -> u64 {
        let one = self.identity();
        let mut x = a.clone();
        let mut n = 1;
        while x != one {
            x = self.multiply(&x, a);
            n += 1;
        }
        n
    }
}

impl FiniteGroup for PermGroup {
    type Element = Permutation;

    fn identity(&self) -> Permutation {
        PermGroup::identity(self)
    }

    fn multiply(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.compose(b)
    }

    fn invert(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }

    fn order(&self) -> u64 {
        PermGroup::order(self)
    }

    fn elements(&self) -> Box<dyn Iterator<Item = Permutation> + '_> {
        Box::new(self.elements_unchecked())
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> Permutation {
        PermGroup::random_element(self, rng)
    }

    fn element_order(&self, a: &Permutation) -> u64 {
        a.order()
    }
}
