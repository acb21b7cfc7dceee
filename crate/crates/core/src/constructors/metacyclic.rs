use crate::arith::{checked_pow, gcd, is_prime, multiplicative_order, pow_mod};
use crate::{Error, Result};

use super::table::{Law, TableElement, TableGroup};

/// Parameters of `<a, b | a^(p^α), b^(q^β), b^-1 a b = a^r>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MetacyclicSpec {
    pub p: u64,
    pub alpha: u32,
    pub q: u64,
    pub beta: u32,
    pub r: u64,
}

impl MetacyclicSpec {
    /// Validates the parameters. `r` defaults to [`find_metacyclic_r`].
    pub fn new(p: u64, alpha: u32, q: u64, beta: u32, r: Option<u64>) -> Result<Self> {
        for n in [p, q] {
            if !is_prime(n) {
                return Err(Error::NotPrime(n));
            }
        }
        if p == q {
            return Err(Error::Precondition(format!("p and q must differ (both {p})")));
        }
        if alpha == 0 || beta == 0 {
            return Err(Error::Precondition("exponents must be at least 1".into()));
        }
        let pa = checked_pow(p, alpha).ok_or(Error::OrderOverflow)?;
        let qb = checked_pow(q, beta).ok_or(Error::OrderOverflow)?;
        if pa.checked_mul(qb).is_none_or(|n| n > u32::MAX as u64) {
            return Err(Error::OrderOverflow);
        }
        let r = match r {
            Some(r) => r,
            None => find_metacyclic_r(p, alpha, q, beta)
                .ok_or_else(|| Error::Precondition(format!("no r of order {q}^{beta} modulo {p}^{alpha}")))?,
        };
        if r < 2 || r >= pa || gcd(r, p) != 1 {
            return Err(Error::Precondition(format!("r = {r} must be a unit in [2, {pa})")));
        }
        if pow_mod(r, qb, pa) != 1 {
            return Err(Error::Precondition(format!("{r}^{qb} is not 1 modulo {pa}")));
        }
        Ok(MetacyclicSpec { p, alpha, q, beta, r })
    }

    pub fn p_power(&self) -> u64 {
        self.p.pow(self.alpha)
    }

    pub fn q_power(&self) -> u64 {
        self.q.pow(self.beta)
    }

    pub fn r_order(&self) -> u64 {
        multiplicative_order(self.r, self.p_power()).expect("r is a unit")
    }

    /// Whether the group is EPPO according to the presentation: `r` has
    /// order exactly `q^β`.
    pub fn predicts_eppo(&self) -> bool {
        self.r_order() == self.q_power()
    }
}

/// Smallest `r` whose multiplicative order modulo `p^α` is exactly `q^β`.
pub fn find_metacyclic_r(p: u64, alpha: u32, q: u64, beta: u32) -> Option<u64> {
    let pa = checked_pow(p, alpha)?;
    let qb = checked_pow(q, beta)?;
    (2..pa).find(|&r| multiplicative_order(r, pa) == Some(qb))
}

/// All `r` in `[2, p^α)` with `r^(q^β) = 1 mod p^α`, i.e. every valid
/// presentation for the given primes and exponents.
pub fn constructible_rs(p: u64, alpha: u32, q: u64, beta: u32) -> Vec<u64> {
    let (pa, qb) = (p.pow(alpha), q.pow(beta));
    (2..pa).filter(|&r| gcd(r, p) == 1 && pow_mod(r, qb, pa) == 1).collect()
}

struct Metacyclic {
    pa: u64,
    qb: u64,
    /// `r^j mod p^α` for `j` in `0..q^β`.
    r_pows: Vec<u64>,
}

impl Law for Metacyclic {
    fn first(&self) -> u32 {
        self.pa as u32
    }

    fn second(&self) -> u32 {
        self.qb as u32
    }

    fn multiply(&self, x: TableElement, y: TableElement) -> TableElement {
        let a = (x.a as u64 + y.a as u64 * self.r_pows[x.b as usize]) % self.pa;
        let b = (x.b as u64 + y.b as u64) % self.qb;
        TableElement::new(a as u32, b as u32)
    }

    fn invert(&self, x: TableElement) -> TableElement {
        let b = (self.qb - x.b as u64) % self.qb;
        let a = (self.pa - x.a as u64 * self.r_pows[b as usize] % self.pa) % self.pa;
        TableElement::new(a as u32, b as u32)
    }
}

/// Pairs `(i mod p^α, j mod q^β)` standing for `a^i b^j`, multiplied by
/// `(i, j)(k, l) = (i + k r^j, j + l)`.
pub fn metacyclic_group(spec: &MetacyclicSpec) -> TableGroup {
    let (pa, qb) = (spec.p_power(), spec.q_power());
    let r_pows = (0..qb).map(|j| pow_mod(spec.r, j, pa)).collect();
    let name = format!("metacyclic p={} a={} q={} b={} r={}", spec.p, spec.alpha, spec.q, spec.beta, spec.r);
    let gens = vec![TableElement::new(1 % pa as u32, 0), TableElement::new(0, 1 % qb as u32)];
    TableGroup::new(name, Box::new(Metacyclic { pa, qb, r_pows }), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::{is_eppo_exhaustive, spectrum};
    use crate::group::FiniteGroup;
    use crate::Limits;
    use std::collections::BTreeSet;

    #[test]
    fn smallest_r() {
        assert_eq!(find_metacyclic_r(3, 1, 2, 1), Some(2));
        assert_eq!(find_metacyclic_r(7, 1, 3, 1), Some(2));
        assert_eq!(find_metacyclic_r(5, 1, 3, 1), None);
        assert_eq!(find_metacyclic_r(5, 1, 2, 2), Some(2));
    }

    #[test]
    fn examples() {
        let limits = Limits::default();
        let g = metacyclic_group(&MetacyclicSpec::new(3, 1, 2, 1, Some(2)).unwrap());
        assert_eq!(g.order(), 6);
        assert_eq!(spectrum(&g, &limits).unwrap().orders, BTreeSet::from([1, 2, 3]));
        let g = metacyclic_group(&MetacyclicSpec::new(5, 1, 2, 2, Some(2)).unwrap());
        assert_eq!(spectrum(&g, &limits).unwrap().orders, BTreeSet::from([1, 2, 4, 5]));
        let spec = MetacyclicSpec::new(5, 1, 2, 2, Some(4)).unwrap();
        assert!(!spec.predicts_eppo());
        let v = is_eppo_exhaustive(&metacyclic_group(&spec), &limits).unwrap();
        assert_eq!(v.witness.unwrap().composite_order(), Some(10));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(MetacyclicSpec::new(5, 1, 2, 1, Some(2)).is_err());
        assert!(MetacyclicSpec::new(5, 1, 5, 1, None).is_err());
        assert!(MetacyclicSpec::new(4, 1, 3, 1, None).is_err());
        assert!(MetacyclicSpec::new(5, 1, 3, 1, None).is_err());
    }

    #[test]
    fn axioms_and_regular_representation() {
        let g = metacyclic_group(&MetacyclicSpec::new(7, 1, 3, 1, None).unwrap());
        g.check_axioms(1000, 1).unwrap();
        let perm = g.to_perm_group().unwrap();
        assert_eq!(perm.order(), 21);
        let x = TableElement::new(3, 2);
        let y = TableElement::new(5, 1);
        let px = perm.elements(100).unwrap().find(|p| g.element_of(p) == x).unwrap();
        let py = perm.elements(100).unwrap().find(|p| g.element_of(p) == y).unwrap();
        assert_eq!(g.element_of(&px.compose(&py)), g.multiply(&x, &y));
    }
}
