//! Element-order spectra, the four EPPO criteria and the counting theorems.
//!
//! The criteria are implemented independently so they can be cross-checked:
//!
//! * exhaustive: every element order is a prime power;
//! * commuting pairs: nontrivial elements of coprime orders never commute;
//! * centralizer: `C(x) ∩ C(y) = 1` for nontrivial `x`, `y` of coprime orders;
//! * Sylow centralizer: the centralizer of every `p`-subgroup `A != 1` is a
//!   `p`-group.
//!
//! The last one is only evaluated on elements `x` of prime order `p`. That is
//! enough: every nontrivial `p`-subgroup `A` contains such an `x`, and
//! `C(A) ⊆ C(x)`, so `C(x)` being a `p`-group forces `C(A)` to be one.

mod verdict;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{divisors, gcd, is_one_or_prime_power, p_part, prime_divisors, prime_power};
use crate::group::FiniteGroup;
use crate::perm::{ElementId, GroupTable, Permutation, Subgroup};
use crate::records::{join, Records};
use crate::{Error, Limits, Result};

pub use verdict::{EppoVerdict, Method, Status, Witness};

/// How a sampled spectrum was drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampling {
    pub samples: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum<E> {
    /// Closed under divisors and always containing 1.
    pub orders: BTreeSet<u64>,
    /// The first element met whose order is not a prime power.
    pub witness: Option<(E, u64)>,
    /// Present when the set is a lower bound from random elements.
    pub sampling: Option<Sampling>,
}

impl<E> Spectrum<E> {
    pub fn map<F>(self, mut f: impl FnMut(E) -> F) -> Spectrum<F> {
        Spectrum { orders: self.orders, witness: self.witness.map(|(e, n)| (f(e), n)), sampling: self.sampling }
    }

    fn empty() -> Self {
        Spectrum { orders: BTreeSet::from([1]), witness: None, sampling: None }
    }

    fn record(&mut self, element: impl FnOnce() -> E, order: u64) {
        if self.orders.contains(&order) {
            return;
        }
        self.orders.extend(divisors(order));
        if self.witness.is_none() && !is_one_or_prime_power(order) {
            self.witness = Some((element(), order));
        }
    }

    pub fn all_prime_power(&self) -> bool {
        self.orders.iter().all(|&n| is_one_or_prime_power(n))
    }

    /// Only prime orders besides 1.
    pub fn all_prime(&self) -> bool {
        self.orders.iter().all(|&n| n == 1 || prime_power(n).is_some_and(|(_, e)| e == 1))
    }

    pub fn is_divisor_closed(&self) -> bool {
        self.orders.contains(&1) && self.orders.iter().all(|&n| divisors(n).iter().all(|d| self.orders.contains(d)))
    }

    pub fn is_sampled(&self) -> bool {
        self.sampling.is_some()
    }

    pub fn primes(&self) -> BTreeSet<u64> {
        self.orders.iter().flat_map(|&n| prime_divisors(n)).collect()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.orders.contains(&n)
    }
}

impl<E: fmt::Display> Spectrum<E> {
    pub fn write(&self, out: &mut Records, prefix: &str) {
        out.push(format!("{prefix}.orders"), join(&self.orders));
        out.push(format!("{prefix}.mode"), if self.is_sampled() { "sampled" } else { "exhaustive" });
        if let Some(s) = self.sampling {
            out.push(format!("{prefix}.samples"), s.samples);
            out.push(format!("{prefix}.seed"), s.seed);
        }
        out.push(format!("{prefix}.all_prime_power"), self.all_prime_power());
        if let Some((e, n)) = &self.witness {
            out.push(format!("{prefix}.witness.element"), e);
            out.push(format!("{prefix}.witness.order"), n);
        }
    }
}

fn check_threshold(order: u64, threshold: u64) -> Result<()> {
    if order > threshold {
        Err(Error::ThresholdExceeded { order, threshold })
    } else {
        Ok(())
    }
}

/// The exact set of element orders.
pub fn spectrum<G: FiniteGroup>(group: &G, limits: &Limits) -> Result<Spectrum<G::Element>> {
    check_threshold(group.order(), limits.enumeration)?;
    let mut s = Spectrum::empty();
    for g in group.elements() {
        let o = group.element_order(&g);
        s.record(|| g, o);
    }
    Ok(s)
}

/// The spectrum read off an already enumerated group.
pub fn table_spectrum(table: &GroupTable) -> Spectrum<Permutation> {
    let mut s = Spectrum::empty();
    for x in table.ids() {
        s.record(|| table.element(x).clone(), table.element_order(x));
    }
    s
}

/// Orders of `n` uniformly random elements, closed under divisors.
///
/// Always a subset of the true spectrum.
pub fn spectrum_sampled<G: FiniteGroup>(group: &G, n: u64, seed: u64) -> Spectrum<G::Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Spectrum::empty();
    for _ in 0..n {
        let g = group.random_element(&mut rng);
        let o = group.element_order(&g);
        s.record(|| g, o);
    }
    s.sampling = Some(Sampling { samples: n, seed });
    s
}

pub fn is_eppo_exhaustive<G: FiniteGroup>(group: &G, limits: &Limits) -> Result<EppoVerdict<G::Element>> {
    check_threshold(group.order(), limits.enumeration)?;
    let witness = group.elements().find_map(|g| {
        let order = group.element_order(&g);
        (!is_one_or_prime_power(order)).then_some(Witness::CompositeOrder { element: g, order })
    });
    Ok(EppoVerdict::definite(Method::Exhaustive, witness))
}

/// A sampled verdict: a negative comes with its witness, a positive is
/// only ever `SampledConsistent`.
pub fn is_eppo_sampled<G: FiniteGroup>(group: &G, n: u64, seed: u64) -> EppoVerdict<G::Element> {
    let s = spectrum_sampled(group, n, seed);
    let witness = s.witness.map(|(element, order)| Witness::CompositeOrder { element, order });
    EppoVerdict {
        status: if witness.is_some() { Status::NotEppo } else { Status::SampledConsistent },
        method: Method::Sampled,
        witness,
        sample_count: Some(n),
        seed: Some(seed),
    }
}

fn element(table: &GroupTable, x: ElementId) -> Permutation {
    table.element(x).clone()
}

/// Scans every pair of nontrivial elements with coprime orders for one that commutes.
pub fn is_eppo_commuting_pairs(table: &GroupTable, limits: &Limits) -> Result<EppoVerdict<Permutation>> {
    check_threshold(table.order(), limits.pairwise)?;
    let orders = table.element_orders();
    let n = table.len() as ElementId;
    for x in 1..n {
        for y in x + 1..n {
            let (ox, oy) = (orders[x as usize], orders[y as usize]);
            if gcd(ox, oy) == 1 && table.commutes(x, y) {
                let witness =
                    Witness::CommutingPair { x: element(table, x), y: element(table, y), order_x: ox, order_y: oy };
                return Ok(EppoVerdict::definite(Method::CommutingPairs, Some(witness)));
            }
        }
    }
    Ok(EppoVerdict::definite(Method::CommutingPairs, None))
}

/// Checks `C(x) ∩ C(y) = 1` for class representatives `x` against every `y`
/// in a later class of coprime order. Conjugating a pair moves `x` to its
/// representative, so this covers all pairs.
pub fn is_eppo_centralizer(table: &GroupTable) -> EppoVerdict<Permutation> {
    let classes = table.conjugacy_classes();
    let orders = table.element_orders();
    for (i, cx) in classes.iter().enumerate() {
        let x = cx.representative;
        if x == table.identity() {
            continue;
        }
        let cent: Vec<ElementId> = table.centralizer(x).members().filter(|&z| z != table.identity()).collect();
        for cy in &classes[i + 1..] {
            if gcd(cx.element_order, cy.element_order) != 1 {
                continue;
            }
            for y in cy.members.iter().copied() {
                debug_assert_eq!(orders[y as usize], cy.element_order);
                if let Some(&z) = cent.iter().find(|&&z| table.commutes(z, y)) {
                    let witness = Witness::CentralizerMeet {
                        x: element(table, x),
                        y: element(table, y),
                        common: element(table, z),
                    };
                    return EppoVerdict::definite(Method::Centralizer, Some(witness));
                }
            }
        }
    }
    EppoVerdict::definite(Method::Centralizer, None)
}

/// Checks that each element of prime order `p` has a `p`-group centralizer.
/// See the module documentation for why prime-order elements suffice.
pub fn is_eppo_sylow_centralizer(table: &GroupTable) -> EppoVerdict<Permutation> {
    for class in table.conjugacy_classes() {
        let Some((p, 1)) = prime_power(class.element_order) else {
            continue;
        };
        let c = table.centralizer(class.representative).order();
        if p_part(c, p) != c {
            let witness = Witness::CentralizerNotPGroup {
                x: element(table, class.representative),
                prime: p,
                centralizer_order: c,
            };
            return EppoVerdict::definite(Method::SylowCentralizer, Some(witness));
        }
    }
    EppoVerdict::definite(Method::SylowCentralizer, None)
}

pub fn count_elements_of_order<G: FiniteGroup>(group: &G, d: u64, limits: &Limits) -> Result<u64> {
    check_threshold(group.order(), limits.enumeration)?;
    Ok(group.elements().filter(|g| group.element_order(g) == d).count() as u64)
}

/// Number of elements of each order.
pub fn order_counts(table: &GroupTable) -> BTreeMap<u64, u64> {
    let mut counts = BTreeMap::new();
    for &o in table.element_orders() {
        *counts.entry(o).or_insert(0) += 1;
    }
    counts
}

fn require_eppo(table: &GroupTable) -> Result<()> {
    if table.element_orders().iter().all(|&o| is_one_or_prime_power(o)) {
        Ok(())
    } else {
        Err(Error::Precondition("the group is not EPPO".into()))
    }
}

/// Whether `|H|` divides the number of elements of order `d`, for an EPPO
/// group, `d > 1` and `gcd(|H|, d) = 1`.
pub fn check_order_count_divisibility(table: &GroupTable, h: &Subgroup, d: u64) -> Result<bool> {
    require_eppo(table)?;
    if d < 2 {
        return Err(Error::Precondition("d must be at least 2".into()));
    }
    if gcd(h.order(), d) != 1 {
        return Err(Error::Precondition(format!("gcd(|H| = {}, d = {d}) is not 1", h.order())));
    }
    let count = table.element_orders().iter().filter(|&&o| o == d).count() as u64;
    Ok(count.is_multiple_of(h.order()))
}

/// Product of the full `p`-parts of `order` over primes `p` not dividing `n`.
pub fn coprime_part(order: u64, n: u64) -> u64 {
    prime_divisors(order).into_iter().filter(|p| !n.is_multiple_of(*p)).map(|p| p_part(order, p)).product()
}

/// For a nontrivial normal subgroup `N` of an EPPO group, whether the
/// `p`-parts of `|G|` for primes outside `π(N)` multiply to a divisor of `|N| - 1`.
pub fn check_normal_subgroup_divisibility(table: &GroupTable, n: &Subgroup) -> Result<bool> {
    require_eppo(table)?;
    if n.is_trivial() {
        return Err(Error::Precondition("N must be nontrivial".into()));
    }
    if !table.is_normal(n) {
        return Err(Error::Precondition("N is not normal".into()));
    }
    Ok((n.order() - 1).is_multiple_of(coprime_part(table.order(), n.order())))
}
