use crate::{Error, Result};

use super::table::{Law, TableElement, TableGroup};

struct Quaternion {
    /// `2^(n-1)`, the order of the cyclic subgroup of index 2.
    half: u32,
}

impl Law for Quaternion {
    fn first(&self) -> u32 {
        self.half
    }

    fn second(&self) -> u32 {
        2
    }

    fn multiply(&self, x: TableElement, y: TableElement) -> TableElement {
        let h = self.half as u64;
        let k = if x.b == 0 { y.a as u64 } else { h - y.a as u64 };
        let twist = if x.b == 1 && y.b == 1 { h / 2 } else { 0 };
        TableElement::new(((x.a as u64 + k + twist) % h) as u32, (x.b + y.b) % 2)
    }

    fn invert(&self, x: TableElement) -> TableElement {
        if x.b == 0 {
            TableElement::new((self.half - x.a) % self.half, 0)
        } else {
            TableElement::new((x.a + self.half / 2) % self.half, 1)
        }
    }
}

/// `Q_{2^n}` on pairs `(i mod 2^(n-1), j mod 2)` standing for `x^i y^j`, with
/// `y^-1 x y = x^-1` and `y^2 = x^(2^(n-2))`.
pub fn generalized_quaternion(n: u32) -> Result<TableGroup> {
    if !(3..=31).contains(&n) {
        return Err(Error::Precondition(format!("generalized quaternion needs 3 <= n <= 31, got {n}")));
    }
    let law = Quaternion { half: 1 << (n - 1) };
    let gens = vec![TableElement::new(1, 0), TableElement::new(0, 1)];
    Ok(TableGroup::new(format!("genquat n={n}"), Box::new(law), gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::{count_elements_of_order, spectrum};
    use crate::group::FiniteGroup;
    use crate::Limits;
    use std::collections::BTreeSet;

    #[test]
    fn q8() {
        let limits = Limits::default();
        let g = generalized_quaternion(3).unwrap();
        assert_eq!(g.order(), 8);
        g.check_axioms(1000, 0).unwrap();
        assert_eq!(spectrum(&g, &limits).unwrap().orders, BTreeSet::from([1, 2, 4]));
        assert_eq!(count_elements_of_order(&g, 2, &limits).unwrap(), 1);
    }

    #[test]
    fn larger() {
        let limits = Limits::default();
        for n in 4..=6 {
            let g = generalized_quaternion(n).unwrap();
            g.check_axioms(1000, n as u64).unwrap();
            assert_eq!(g.order(), 1 << n);
            assert_eq!(count_elements_of_order(&g, 2, &limits).unwrap(), 1);
            assert_eq!(g.to_perm_group().unwrap().order(), 1 << n);
        }
        assert!(generalized_quaternion(2).is_err());
    }
}
