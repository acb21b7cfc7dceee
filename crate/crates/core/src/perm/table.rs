//! Brute-force analysis over an enumerated group.
//!
//! Every element is stored once and addressed by a dense [`ElementId`].
//! Elements are keyed by their images of the base points, which determine
//! a group element uniquely, so products and conjugates cost one pass over
//! the base plus a hash lookup.

use std::cell::OnceCell;
use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallvec::SmallVec;

use crate::arith::{is_prime, p_part};
use crate::error::{Error, Result};

use super::{PermGroup, Permutation};

pub type ElementId = u32;

type BaseKey = SmallVec<[u32; 8]>;

/// Upper bound on random draws while growing a Sylow subgroup.
pub const SYLOW_ATTEMPTS: usize = 1000;

#[derive(Clone, Debug)]
pub struct Subgroup {
    members: FixedBitSet,
    generators: Vec<ElementId>,
    order: u64,
}

impl Subgroup {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.members.contains(x as usize)
    }

    pub fn members(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.ones().map(|i| i as ElementId)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: ElementId,
    pub size: u64,
    pub element_order: u64,
    pub members: Vec<ElementId>,
}

pub struct GroupTable {
    degree: usize,
    base: Vec<u32>,
    elements: Vec<Permutation>,
    index: HashMap<BaseKey, ElementId>,
    inverse: Vec<ElementId>,
    orders: Vec<u64>,
    generators: Vec<ElementId>,
    classes: OnceCell<Vec<ConjugacyClass>>,
    normals: OnceCell<Vec<Subgroup>>,
}

impl GroupTable {
    pub(crate) fn new(group: &PermGroup) -> Self {
        let base = group.base();
        let n = group.order() as usize;
        let mut elements = Vec::with_capacity(n);
        let mut index = HashMap::with_capacity(n);
        for (i, g) in group.elements_unchecked().enumerate() {
            let key: BaseKey = base.iter().map(|&b| g.image(b)).collect();
            index.insert(key, i as ElementId);
            elements.push(g);
        }
        debug_assert_eq!(elements.len(), n);
        let mut table = GroupTable {
            degree: group.degree(),
            base,
            orders: elements.iter().map(Permutation::order).collect(),
            elements,
            index,
            inverse: Vec::new(),
            generators: Vec::new(),
            classes: OnceCell::new(),
            normals: OnceCell::new(),
        };
        table.inverse =
            (0..n).map(|i| table.index_of(&table.elements[i].inverse()).expect("closed under inverse")).collect();
        let mut gens: Vec<ElementId> = group
            .generators()
            .iter()
            .map(|g| table.index_of(g).expect("generator is a member"))
            .filter(|&g| g != table.identity())
            .collect();
        gens.dedup();
        table.generators = gens;
        table
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn element(&self, x: ElementId) -> &Permutation {
        &self.elements[x as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn ids(&self) -> impl Iterator<Item = ElementId> {
        0..self.elements.len() as ElementId
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn index_of(&self, g: &Permutation) -> Option<ElementId> {
        if g.degree() != self.degree {
            return None;
        }
        let key: BaseKey = self.base.iter().map(|&b| g.image(b)).collect();
        let id = *self.index.get(key.as_slice())?;
        (self.elements[id as usize] == *g).then_some(id)
    }

    #[inline]
    fn lookup(&self, key: &[u32]) -> ElementId {
        *self.index.get(key).expect("product of members is a member")
    }

    /// `a` followed by `b`.
    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        let (pa, pb) = (&self.elements[a as usize], &self.elements[b as usize]);
        let key: BaseKey = self.base.iter().map(|&x| pb.image(pa.image(x))).collect();
        self.lookup(&key)
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inverse[a as usize]
    }

    /// `by^-1 * a * by`.
    #[inline]
    pub fn conj(&self, a: ElementId, by: ElementId) -> ElementId {
        let pa = &self.elements[a as usize];
        let pby = &self.elements[by as usize];
        let pinv = &self.elements[self.inverse[by as usize] as usize];
        let key: BaseKey = self.base.iter().map(|&x| pby.image(pa.image(pinv.image(x)))).collect();
        self.lookup(&key)
    }

    /// `a^-1 * b^-1 * a * b`.
    pub fn commutator(&self, a: ElementId, b: ElementId) -> ElementId {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn pow(&self, a: ElementId, mut e: u64) -> ElementId {
        let mut acc = self.identity();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn commutes(&self, a: ElementId, b: ElementId) -> bool {
        let (pa, pb) = (&self.elements[a as usize], &self.elements[b as usize]);
        self.base.iter().all(|&x| pb.image(pa.image(x)) == pa.image(pb.image(x)))
    }

    #[inline]
    pub fn element_order(&self, a: ElementId) -> u64 {
        self.orders[a as usize]
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    fn bitset(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.elements.len())
    }

    pub fn whole(&self) -> Subgroup {
        let mut members = self.bitset();
        members.insert_range(..);
        Subgroup { members, generators: self.generators.clone(), order: self.order() }
    }

    pub fn trivial(&self) -> Subgroup {
        self.closure(&[])
    }

    /// The subgroup generated by `gens`.
    pub fn closure(&self, gens: &[ElementId]) -> Subgroup {
        let mut generators: Vec<ElementId> = Vec::new();
        for &g in gens {
            if g != self.identity() && !generators.contains(&g) {
                generators.push(g);
            }
        }
        let mut members = self.bitset();
        members.insert(self.identity() as usize);
        let mut queue = vec![self.identity()];
        while let Some(x) = queue.pop() {
            for &s in &generators {
                let y = self.mul(x, s);
                if !members.put(y as usize) {
                    queue.push(y);
                }
            }
        }
        let order = members.count_ones(..) as u64;
        Subgroup { members, generators, order }
    }

    /// Wraps a member set known to be a subgroup, choosing generators greedily
    /// in index order.
    pub fn subgroup_from_members(&self, members: FixedBitSet) -> Subgroup {
        let mut current = self.trivial();
        for x in members.ones() {
            let x = x as ElementId;
            if !current.contains(x) {
                let mut gens = current.generators.clone();
                gens.push(x);
                current = self.closure(&gens);
            }
        }
        debug_assert_eq!(current.members, members, "member set is not a subgroup");
        current
    }

    pub fn centralizer(&self, a: ElementId) -> Subgroup {
        let mut members = self.bitset();
        for x in self.ids() {
            if self.commutes(a, x) {
                members.insert(x as usize);
            }
        }
        self.subgroup_from_members(members)
    }

    /// Elements commuting with every generator of `sub`.
    pub fn centralizer_of(&self, sub: &Subgroup) -> Subgroup {
        let mut members = self.bitset();
        for x in self.ids() {
            if sub.generators.iter().all(|&g| self.commutes(g, x)) {
                members.insert(x as usize);
            }
        }
        self.subgroup_from_members(members)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer_of(&self.whole())
    }

    pub fn normalizer(&self, sub: &Subgroup) -> Subgroup {
        let mut members = self.bitset();
        for x in self.ids() {
            if sub.generators.iter().all(|&g| sub.contains(self.conj(g, x))) {
                members.insert(x as usize);
            }
        }
        self.subgroup_from_members(members)
    }

    pub fn is_abelian(&self, sub: &Subgroup) -> bool {
        let gens = &sub.generators;
        gens.iter().enumerate().all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commutes(a, b)))
    }

    /// Whether `sub` is invariant under conjugation by every generator of `within`.
    pub fn is_normal_in(&self, sub: &Subgroup, within: &Subgroup) -> bool {
        sub.generators.iter().all(|&g| within.generators.iter().all(|&t| sub.contains(self.conj(g, t))))
    }

    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        self.is_normal_in(sub, &self.whole())
    }

    /// Smallest subgroup containing `set` and normalized by the generators of `within`.
    pub fn normal_closure_in(&self, set: &[ElementId], within: &Subgroup) -> Subgroup {
        let mut gens: Vec<ElementId> = set.to_vec();
        let mut sub = self.closure(&gens);
        loop {
            let mut extra = None;
            'scan: for &g in &sub.generators {
                for &t in &within.generators {
                    let c = self.conj(g, t);
                    if !sub.contains(c) {
                        extra = Some(c);
                        break 'scan;
                    }
                }
            }
            match extra {
                Some(c) => {
                    gens = sub.generators.clone();
                    gens.push(c);
                    sub = self.closure(&gens);
                }
                None => return sub,
            }
        }
    }

    pub fn normal_closure(&self, set: &[ElementId]) -> Subgroup {
        self.normal_closure_in(set, &self.whole())
    }

    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        self.classes.get_or_init(|| {
            let mut assigned = self.bitset();
            let mut classes = Vec::new();
            for start in self.ids() {
                if assigned.contains(start as usize) {
                    continue;
                }
                assigned.insert(start as usize);
                let mut members = vec![start];
                let mut next = 0;
                while next < members.len() {
                    let x = members[next];
                    for &s in &self.generators {
                        let y = self.conj(x, s);
                        if !assigned.put(y as usize) {
                            members.push(y);
                        }
                    }
                    next += 1;
                }
                members.sort_unstable();
                classes.push(ConjugacyClass {
                    representative: start,
                    size: members.len() as u64,
                    element_order: self.element_order(start),
                    members,
                });
            }
            classes
        })
    }

    /// All normal subgroups, ordered by size and then by member set.
    ///
    /// Each normal subgroup is a union of conjugacy classes and is the join of
    /// the normal closures of the classes it contains, so the lattice is
    /// generated from the class closures by repeated joins.
    pub fn normal_subgroups(&self) -> &[Subgroup] {
        self.normals.get_or_init(|| {
            let whole = self.whole();
            let mut atoms: Vec<Subgroup> = Vec::new();
            for class in self.conjugacy_classes().iter().skip(1) {
                let closure = self.normal_closure_in(&[class.representative], &whole);
                if !atoms.contains(&closure) {
                    atoms.push(closure);
                }
            }
            let mut seen: HashSet<FixedBitSet> = HashSet::new();
            let mut found = vec![self.trivial()];
            seen.insert(found[0].members.clone());
            let mut next = 0;
            while next < found.len() {
                for atom in &atoms {
                    if atom.is_subset_of(&found[next]) {
                        continue;
                    }
                    let mut gens = found[next].generators.clone();
                    gens.extend_from_slice(&atom.generators);
                    let join = self.closure(&gens);
                    if seen.insert(join.members.clone()) {
                        found.push(join);
                    }
                }
                next += 1;
            }
            found.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.members().cmp(b.members())));
            found
        })
    }

    pub fn derived_subgroup(&self, sub: &Subgroup) -> Subgroup {
        let gens = &sub.generators;
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.commutator(a, b);
                if c != self.identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_in(&comms, sub)
    }

    /// `G = G^(0) > G^(1) > ...` until the series stabilizes.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.derived_subgroup(last);
            if next.order == last.order {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subgroup::is_trivial)
    }

    /// `[a, b]` for subgroups: normal closure in `b` of the generator commutators.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut comms = Vec::new();
        for &x in &a.generators {
            for &y in &b.generators {
                let c = self.commutator(x, y);
                if c != self.identity() {
                    comms.push(c);
                }
            }
        }
        let mut within_gens = a.generators.clone();
        within_gens.extend_from_slice(&b.generators);
        let within = self.closure(&within_gens);
        self.normal_closure_in(&comms, &within)
    }

    /// Length of the lower central series of a nilpotent subgroup, `None` if
    /// the series stalls above the trivial group.
    pub fn nilpotency_class(&self, sub: &Subgroup) -> Option<usize> {
        let mut term = sub.clone();
        let mut class = 0;
        while !term.is_trivial() {
            let next = self.commutator_subgroup(&term, sub);
            if next.order == term.order {
                return None;
            }
            term = next;
            class += 1;
        }
        Some(class)
    }

    /// Exactly two normal subgroups, so prime-order cyclic groups count as simple.
    pub fn is_simple(&self) -> bool {
        self.order() > 1 && self.normal_subgroups().len() == 2
    }

    pub fn is_nonabelian_simple(&self) -> bool {
        self.is_simple() && !self.is_abelian(&self.whole())
    }

    /// A Sylow `p`-subgroup, grown from the trivial group by adjoining
    /// `p`-elements of the normalizer that lie outside the current subgroup.
    pub fn sylow_subgroup(&self, p: u64, seed: u64) -> Result<Subgroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let target = p_part(self.order(), p);
        if target == 1 {
            return Err(Error::PrimeNotDividing { p, order: self.order() });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut current = self.trivial();
        let mut failures = 0;
        while current.order < target {
            let normalizer = self.normalizer(&current);
            let pool: Vec<ElementId> = normalizer.members().filter(|&x| !current.contains(x)).collect();
            loop {
                if failures >= SYLOW_ATTEMPTS {
                    return Err(Error::SylowStagnated { p, attempts: failures });
                }
                let x = pool[rng.random_range(0..pool.len())];
                let o = self.element_order(x);
                let y = self.pow(x, o / p_part(o, p));
                if current.contains(y) {
                    failures += 1;
                    continue;
                }
                let mut gens = current.generators.clone();
                gens.push(y);
                current = self.closure(&gens);
                break;
            }
        }
        Ok(current)
    }

    /// Right cosets `N g`, labelled in order of their smallest element.
    pub fn cosets(&self, normal: &Subgroup) -> (Vec<u32>, Vec<ElementId>) {
        let mut label = vec![u32::MAX; self.len()];
        let mut reps = Vec::new();
        for g in self.ids() {
            if label[g as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(g);
            for n in normal.members() {
                label[self.mul(n, g) as usize] = c;
            }
        }
        (label, reps)
    }

    /// `G / N` as a permutation group on the right cosets of `N`.
    pub fn quotient(&self, normal: &Subgroup) -> Result<PermGroup> {
        if !self.is_normal(normal) {
            return Err(Error::Precondition("quotient by a non-normal subgroup".into()));
        }
        let (label, reps) = self.cosets(normal);
        let gens = self
            .generators
            .iter()
            .map(|&s| {
                let images = reps.iter().map(|&r| label[self.mul(r, s) as usize]).collect();
                Permutation::from_images_unchecked(images)
            })
            .collect();
        PermGroup::from_generators(gens, reps.len())
    }

    /// The subgroup as a standalone permutation group on the same points.
    pub fn to_perm_group(&self, sub: &Subgroup) -> Result<PermGroup> {
        let gens = sub.generators.iter().map(|&g| self.element(g).clone()).collect();
        PermGroup::from_generators(gens, self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Limits;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    fn group(degree: usize, gens: &[&[&[u32]]]) -> GroupTable {
        let gens = gens.iter().map(|g| cyc(degree, g)).collect();
        PermGroup::from_generators(gens, degree).unwrap().table(&Limits::default()).unwrap()
    }

    fn a5() -> GroupTable {
        group(5, &[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]])
    }

    fn s3() -> GroupTable {
        group(3, &[&[&[0, 1, 2]], &[&[0, 1]]])
    }

    fn q8() -> GroupTable {
        // regular representation of Q8 on 8 points
        group(8, &[&[&[0, 1, 2, 3], &[4, 5, 6, 7]], &[&[0, 4, 2, 6], &[1, 7, 3, 5]]])
    }

    fn sorted_sizes(t: &GroupTable) -> Vec<u64> {
        let mut s: Vec<u64> = t.conjugacy_classes().iter().map(|c| c.size).collect();
        s.sort();
        s
    }

    #[test]
    fn products_match_permutations() {
        let t = a5();
        for a in t.ids().step_by(7) {
            for b in t.ids().step_by(5) {
                let direct = t.element(a).compose(t.element(b));
                assert_eq!(t.element(t.mul(a, b)), &direct);
                assert_eq!(t.element(t.conj(a, b)), &t.element(b).conjugate(t.element(a)));
            }
        }
    }

    #[test]
    fn centralizers_by_brute_force() {
        let t = a5();
        assert_eq!(t.centralizer(t.identity()).order(), 60);
        let five = t.index_of(&cyc(5, &[&[0, 1, 2, 3, 4]])).unwrap();
        assert_eq!(t.centralizer(five).order(), 5);
        let s = s3();
        let swap = s.index_of(&cyc(3, &[&[0, 1]])).unwrap();
        assert_eq!(s.centralizer(swap).order(), 2);
    }

    #[test]
    fn class_equation() {
        assert_eq!(sorted_sizes(&a5()), vec![1, 12, 12, 15, 20]);
        assert_eq!(sorted_sizes(&s3()), vec![1, 2, 3]);
        let c6 = group(6, &[&[&[0, 1, 2, 3, 4, 5]]]);
        assert!(c6.conjugacy_classes().iter().all(|c| c.size == 1));
    }

    #[test]
    fn normal_subgroup_lattices() {
        let a = a5();
        let orders: Vec<u64> = a.normal_subgroups().iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 60]);
        assert!(a.is_simple());
        let s = s3();
        let orders: Vec<u64> = s.normal_subgroups().iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 3, 6]);
        assert!(!s.is_simple());
        let q = q8();
        // 1, center, three cyclic subgroups of order 4, Q8
        assert_eq!(q.normal_subgroups().len(), 6);
        for n in q.normal_subgroups() {
            assert!(q.is_normal(n));
        }
    }

    #[test]
    fn derived_series_and_solvability() {
        let a = a5();
        assert!(!a.is_solvable());
        assert_eq!(a.derived_subgroup(&a.whole()).order(), 60);
        let s = s3();
        let orders: Vec<u64> = s.derived_series().iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![6, 3, 1]);
        let c6 = group(6, &[&[&[0, 1, 2, 3, 4, 5]]]);
        assert_eq!(c6.derived_series().len(), 2);
        assert!(c6.is_solvable());
    }

    #[test]
    fn sylow_orders() {
        let a = a5();
        assert_eq!(a.sylow_subgroup(2, 0).unwrap().order(), 4);
        assert_eq!(a.sylow_subgroup(5, 1).unwrap().order(), 5);
        let q = q8();
        assert_eq!(q.sylow_subgroup(2, 0).unwrap().order(), 8);
        assert!(matches!(a.sylow_subgroup(7, 0), Err(Error::PrimeNotDividing { .. })));
        assert!(matches!(a.sylow_subgroup(4, 0), Err(Error::NotPrime(4))));
    }

    #[test]
    fn centers() {
        assert!(a5().center().is_trivial());
        assert_eq!(q8().center().order(), 2);
        let c6 = group(6, &[&[&[0, 1, 2, 3, 4, 5]]]);
        assert_eq!(c6.center().order(), 6);
        assert!(!c6.is_simple());
        let c5 = group(5, &[&[&[0, 1, 2, 3, 4]]]);
        assert!(c5.is_simple());
        assert!(!c5.is_nonabelian_simple());
    }

    #[test]
    fn quotients() {
        let s = s3();
        let a3 = &s.normal_subgroups()[1];
        let q = s.quotient(a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.degree(), 2);
        let q8 = q8();
        let z = q8.center();
        assert_eq!(q8.quotient(&z).unwrap().order(), 4);
        let swap = s.index_of(&cyc(3, &[&[0, 1]])).unwrap();
        assert!(s.quotient(&s.closure(&[swap])).is_err());
    }

    #[test]
    fn nilpotency_classes() {
        let q = q8();
        assert_eq!(q.nilpotency_class(&q.whole()), Some(2));
        let c6 = group(6, &[&[&[0, 1, 2, 3, 4, 5]]]);
        assert_eq!(c6.nilpotency_class(&c6.whole()), Some(1));
        assert_eq!(s3().nilpotency_class(&s3().whole()), None);
    }
}
