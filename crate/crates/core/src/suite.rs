//! The verification suite: a fixed corpus of groups and eleven criteria,
//! each reported as deterministic records.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{gcd, is_one_or_prime_power, is_prime, multiplicative_order, p_part, pow_mod, prime_divisors};
use crate::catalog::{self, psl2, simple_eppo_list, CatalogEntry, Fixture};
use crate::constructors::{
    constructible_rs, find_metacyclic_r, fixed_point_free, metacyclic_group, parse_construction, semidirect_product,
    semidirect_spec, MetacyclicSpec, ACTING_CAP,
};
use crate::criteria::{
    check_normal_subgroup_divisibility, check_order_count_divisibility, is_eppo_centralizer, is_eppo_commuting_pairs,
    is_eppo_exhaustive, is_eppo_sampled, is_eppo_sylow_centralizer, order_counts, spectrum, spectrum_sampled,
    table_spectrum, EppoVerdict, Status, Witness,
};
use crate::gf::action::linear_action;
use crate::gf::{monomial_has_fixed_vector, Field, FieldElement, Matrix};
use crate::perm::{GroupTable, PermGroup, Permutation};
use crate::records::{join, Records};
use crate::structure::{
    chief_series_pattern, classify, coprime_subgroup_shape, extension_constraint, is_supersolvable,
    minimal_normal_exponent_check, noncentral_normal_abelian, quaternion_and_solvability_check, recognizes_a5,
    smallest_valid_exponent, supersolvability_check, Classification, PatternCase, SimpleId,
};
use crate::{Limits, Result};

/// Criterion ids and names, in running order.
pub const CRITERIA: [(u8, &str); 11] = [
    (1, "catalog"),
    (2, "predicate-equivalence"),
    (3, "metacyclic"),
    (4, "element-counts"),
    (5, "semidirect"),
    (6, "monomial-fixed-vector"),
    (7, "solvable-structure"),
    (8, "psl2-boundary"),
    (9, "a5-recognizer"),
    (10, "extension-arithmetic"),
    (11, "determinism"),
];

/// Sampling effort of the predicate-equivalence cross-check; the corpus is
/// enumerated anyway, so this only has to exercise the sampled path.
const CROSS_CHECK_SAMPLES: u64 = 200;
const MONOMIAL_TRIALS: usize = 1000;
const EXTENSION_SCAN: u32 = 64;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub limits: Limits,
    pub samples: u64,
    pub seed: u64,
    /// Skips the sampled Sz(32) check and the sampled cross-checks.
    pub skip_sampled: bool,
    pub fixture: Fixture,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            limits: Limits::default(),
            samples: 100_000,
            seed: 0,
            skip_sampled: false,
            fixture: Fixture::bundled(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub checks: u64,
    pub failures: Vec<String>,
    pub records: Records,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks > 0
    }

    pub fn write(&self, out: &mut Records) {
        let prefix = format!("criterion.{}", self.id);
        out.push(format!("{prefix}.name"), self.name);
        out.push(format!("{prefix}.status"), if self.passed() { "pass" } else { "fail" });
        out.push(format!("{prefix}.checks"), self.checks);
        out.push(format!("{prefix}.failures"), self.failures.len());
        for (i, f) in self.failures.iter().enumerate() {
            out.push(format!("{prefix}.failure.{i}"), f);
        }
        for (k, v) in self.records.entries() {
            out.push(format!("{prefix}.{k}"), v);
        }
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {:<24} {status} ({} checks", self.id, self.name, self.checks)?;
        if !self.failures.is_empty() {
            write!(f, ", {} failed; first: {}", self.failures.len(), self.failures[0])?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub seed: u64,
    pub samples: u64,
    pub skip_sampled: bool,
    pub criteria: Vec<CriterionResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(CriterionResult::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CriterionResult> {
        self.criteria.iter().filter(|c| !c.passed())
    }

    pub fn records(&self) -> Records {
        let mut out = Records::new();
        out.push("suite.seed", self.seed);
        out.push("suite.samples", self.samples);
        out.push("suite.skip_sampled", self.skip_sampled);
        for c in &self.criteria {
            c.write(&mut out);
        }
        let failed: Vec<u8> = self.failed().map(|c| c.id).collect();
        out.push("suite.passed", self.criteria.len() - failed.len());
        out.push("suite.failed", join(&failed));
        out.push("suite.status", if failed.is_empty() { "pass" } else { "fail" });
        out
    }
}

struct Tally {
    checks: u64,
    failures: Vec<String>,
    records: Records,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failures: Vec::new(), records: Records::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
        ok
    }

    fn record(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.records.push(key, value);
    }

    /// Unwraps `r`, counting an error as a failed check.
    fn ok<T>(&mut self, context: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{context}: {e}"));
                None
            }
        }
    }

    fn finish(self, id: u8) -> CriterionResult {
        let name = CRITERIA.iter().find(|c| c.0 == id).map_or("unknown", |c| c.1);
        CriterionResult { id, name, checks: self.checks, failures: self.failures, records: self.records }
    }
}

// ---------------------------------------------------------------- corpus

pub fn cyclic(n: u32) -> PermGroup {
    let gen = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("cycle");
    PermGroup::from_generators(vec![gen], n as usize).expect("valid generators")
}

pub fn symmetric(n: u32) -> PermGroup {
    let cycle = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("cycle");
    let swap = Permutation::from_cycles(n as usize, &[vec![0, 1]]).expect("transposition");
    PermGroup::from_generators(vec![cycle, swap], n as usize).expect("valid generators")
}

/// Dihedral group of order `2n` on the vertices of an `n`-gon.
pub fn dihedral(n: u32) -> PermGroup {
    let rotation = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("rotation");
    let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).expect("reflection");
    PermGroup::from_generators(vec![rotation, reflection], n as usize).expect("valid generators")
}

pub fn sl2_3() -> PermGroup {
    let f = Field::new(3, 1).expect("GF(3)");
    let a = Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]).expect("matrix");
    let b = Matrix::from_ints(&f, &[&[1, 0], &[1, 1]]).expect("matrix");
    linear_action(&f, &[a, b]).expect("SL(2,3)")
}

#[derive(Clone, Debug)]
enum Origin {
    Catalog(CatalogEntry),
    Spec(String),
    Cyclic(u32),
    Symmetric(u32),
    Dihedral(u32),
    Sl2Of3,
}

/// A named corpus group, built on demand.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    /// EPPO status known independently of the predicates, where there is one.
    pub expected_eppo: Option<bool>,
    origin: Origin,
}

impl CorpusEntry {
    pub fn build(&self) -> Result<PermGroup> {
        match &self.origin {
            Origin::Catalog(e) => e.build(),
            Origin::Spec(s) => parse_construction(s)?.expect("corpus specs parse").build()?.to_perm_group(),
            Origin::Cyclic(n) => Ok(cyclic(*n)),
            Origin::Symmetric(n) => Ok(symmetric(*n)),
            Origin::Dihedral(n) => Ok(dihedral(*n)),
            Origin::Sl2Of3 => Ok(sl2_3()),
        }
    }
}

pub const PRIME_GRID: [u64; 6] = [2, 3, 5, 7, 13, 17];

/// Every `(p, α, q, β, r)` over the metacyclic grid that defines a group.
pub fn metacyclic_grid() -> Vec<MetacyclicSpec> {
    let mut out = Vec::new();
    for p in PRIME_GRID {
        for q in PRIME_GRID.into_iter().filter(|&q| q != p) {
            for alpha in 1..=2 {
                for beta in 1..=2 {
                    for r in constructible_rs(p, alpha, q, beta) {
                        out.push(MetacyclicSpec::new(p, alpha, q, beta, Some(r)).expect("constructible"));
                    }
                }
            }
        }
    }
    out
}

/// `(q, m, H)` for the semidirect grid, negative controls included.
pub const SEMIDIRECT_GRID: &[(u64, usize, &str)] = &[
    (3, 1, "C2"),
    (3, 1, "C2-trivial"),
    (3, 2, "C4"),
    (3, 2, "Q8"),
    (3, 2, "C2"),
    (3, 2, "C8"),
    (3, 2, "swap"),
    (3, 2, "diag"),
    (3, 2, "C4-sign"),
    (5, 1, "C2"),
    (5, 1, "C4"),
    (5, 1, "C2-trivial"),
    (5, 1, "C4-sign"),
    (5, 2, "C3"),
    (5, 2, "Q8"),
    (5, 2, "swap"),
    (5, 2, "C6"),
    (5, 2, "C8"),
];

fn metacyclic_text(s: &MetacyclicSpec) -> String {
    format!("metacyclic p={} a={} q={} b={} r={}", s.p, s.alpha, s.q, s.beta, s.r)
}

/// The corpus: catalog groups within reach, the constructor grids and a
/// handful of small named groups.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let mut push = |name: String, expected_eppo: Option<bool>, origin: Origin| {
        out.push(CorpusEntry { name, expected_eppo, origin });
    };
    for e in catalog::entries().into_iter().filter(|e| e.expected_order <= 32_000) {
        push(e.name.clone(), Some(true), Origin::Catalog(e));
    }
    for s in metacyclic_grid() {
        let text = metacyclic_text(&s);
        let expected = multiplicative_order(s.r, s.p_power()) == Some(s.q_power());
        push(text.clone(), Some(expected), Origin::Spec(text));
    }
    for &(q, m, h) in SEMIDIRECT_GRID {
        let text = format!("semidirect q={q} m={m} H={h}");
        push(text.clone(), None, Origin::Spec(text));
    }
    for n in 3..=5 {
        let text = format!("genquat n={n}");
        push(text.clone(), Some(true), Origin::Spec(text));
    }
    push("C6".into(), Some(false), Origin::Cyclic(6));
    push("C30".into(), Some(false), Origin::Cyclic(30));
    push("S3".into(), Some(true), Origin::Symmetric(3));
    push("S4".into(), Some(true), Origin::Symmetric(4));
    push("SL2(3)".into(), Some(false), Origin::Sl2Of3);
    for n in 4..=12 {
        push(format!("D{}", 2 * n), Some(is_one_or_prime_power(n as u64)), Origin::Dihedral(n));
    }
    out
}

// ---------------------------------------------------------------- helpers

/// Checks a witness against the group table.
pub fn witness_holds(table: &GroupTable, w: &Witness<Permutation>) -> bool {
    let id = |p: &Permutation| table.index_of(p);
    let nontrivial_coprime = |a: u64, b: u64| a > 1 && b > 1 && gcd(a, b) == 1;
    match w {
        Witness::CompositeOrder { element, order } => {
            id(element).is_some_and(|x| table.element_order(x) == *order) && !is_one_or_prime_power(*order)
        }
        Witness::CommutingPair { x, y, order_x, order_y } => match (id(x), id(y)) {
            (Some(a), Some(b)) => {
                table.commutes(a, b)
                    && table.element_order(a) == *order_x
                    && table.element_order(b) == *order_y
                    && nontrivial_coprime(*order_x, *order_y)
            }
            _ => false,
        },
        Witness::CentralizerMeet { x, y, common } => match (id(x), id(y), id(common)) {
            (Some(a), Some(b), Some(z)) => {
                nontrivial_coprime(table.element_order(a), table.element_order(b))
                    && z != table.identity()
                    && table.commutes(z, a)
                    && table.commutes(z, b)
            }
            _ => false,
        },
        Witness::CentralizerNotPGroup { x, prime, centralizer_order } => id(x).is_some_and(|a| {
            let c = table.centralizer(a).order();
            table.element_order(a) == *prime && c == *centralizer_order && p_part(c, *prime) != c
        }),
    }
}

/// A composite-order witness checked directly on the permutation.
fn composite_witness_holds(group: &PermGroup, w: &Witness<Permutation>) -> bool {
    match w {
        Witness::CompositeOrder { element, order } => {
            element.order() == *order && !is_one_or_prime_power(*order) && group.contains(element).unwrap_or(false)
        }
        _ => false,
    }
}

fn verdict_name<E>(v: &EppoVerdict<E>) -> &'static str {
    v.status.name()
}

struct Analysed {
    entry: CorpusEntry,
    group: PermGroup,
    table: GroupTable,
    eppo: bool,
}

/// Builds corpus groups one at a time, keeping the EPPO ones.
fn for_each_corpus_group(t: &mut Tally, limits: &Limits, mut f: impl FnMut(&mut Tally, &Analysed)) {
    for entry in corpus() {
        let Some(group) = t.ok(&entry.name, entry.build()) else { continue };
        let Some(table) = t.ok(&entry.name, group.table(limits)) else { continue };
        let eppo = table.element_orders().iter().all(|&o| is_one_or_prime_power(o));
        f(t, &Analysed { entry, group, table, eppo });
    }
}

// ---------------------------------------------------------------- criteria

fn catalog_verification(cfg: &SuiteConfig) -> CriterionResult {
    const ORDERS: [u64; 8] = [60, 168, 504, 360, 2448, 20160, 29120, 32537600];
    let mut t = Tally::new();
    let list = simple_eppo_list();
    t.check(list.len() == 8, || format!("{} catalog groups", list.len()));
    for (entry, expected) in list.iter().zip(ORDERS) {
        let name = &entry.name;
        let Some(group) = t.ok(name, entry.build()) else { continue };
        let order = group.order();
        t.record(format!("{name}.order"), order);
        t.check(order == expected && order == entry.expected_order, || {
            format!("{name}: order {order}, expected {expected} (closed form {})", entry.expected_order)
        });
        if order <= cfg.limits.enumeration {
            let Some(v) = t.ok(name, is_eppo_exhaustive(&group, &cfg.limits)) else { continue };
            t.record(format!("{name}.exhaustive"), verdict_name(&v));
            t.check(v.is_eppo(), || format!("{name}: exhaustive verdict {}", verdict_name(&v)));
            let Some(s) = t.ok(name, spectrum(&group, &cfg.limits)) else { continue };
            t.record(format!("{name}.spectrum"), join(&s.orders));
            let fixture = entry.expected_spectrum(&cfg.fixture);
            t.check(fixture.as_ref() == Some(&s.orders), || {
                format!("{name}: spectrum {{{}}} disagrees with fixture {:?}", join(&s.orders), fixture)
            });
            t.check(cfg.fixture.order(name) == Some(order), || {
                format!("{name}: fixture order {:?}", cfg.fixture.order(name))
            });
        } else if cfg.skip_sampled {
            t.record(format!("{name}.sampled"), "skipped");
        } else {
            let s = spectrum_sampled(&group, cfg.samples, cfg.seed);
            let bound = entry.spectrum_bound().unwrap_or_default();
            t.record(format!("{name}.sampled.orders"), join(&s.orders));
            t.record(format!("{name}.sampled.samples"), cfg.samples);
            t.record(format!("{name}.sampled.seed"), cfg.seed);
            t.check(s.witness.is_none() && s.all_prime_power(), || format!("{name}: sampled composite order"));
            t.check(s.orders.is_subset(&bound), || {
                format!("{name}: sampled orders {{{}}} outside {{{}}}", join(&s.orders), join(&bound))
            });
            t.check(cfg.samples > 0, || format!("{name}: no samples drawn"));
        }
    }
    t.finish(1)
}

fn predicate_equivalence(cfg: &SuiteConfig) -> CriterionResult {
    let mut t = Tally::new();
    let mut count = 0;
    let limits = cfg.limits;
    for_each_corpus_group(&mut t, &limits, |t, a| {
        count += 1;
        let name = &a.entry.name;
        let mut verdicts = Vec::new();
        if let Some(v) = t.ok(name, is_eppo_exhaustive(&a.group, &limits)) {
            verdicts.push(v);
        }
        if a.group.order() <= limits.pairwise {
            if let Some(v) = t.ok(name, is_eppo_commuting_pairs(&a.table, &limits)) {
                verdicts.push(v);
            }
        }
        verdicts.push(is_eppo_centralizer(&a.table));
        verdicts.push(is_eppo_sylow_centralizer(&a.table));
        let shown: Vec<String> = verdicts.iter().map(|v| format!("{}={}", v.method.name(), v.status.name())).collect();
        t.record(name.to_string(), shown.join(" "));
        for v in &verdicts {
            t.check(v.is_eppo() == a.eppo, || format!("{name}: {} says {}", v.method.name(), v.status.name()));
            if let Some(w) = &v.witness {
                t.check(witness_holds(&a.table, w), || format!("{name}: invalid {} witness", v.method.name()));
            } else {
                t.check(v.is_eppo(), || format!("{name}: {} gave no witness", v.method.name()));
            }
        }
        if let Some(expected) = a.entry.expected_eppo {
            t.check(expected == a.eppo, || format!("{name}: expected EPPO {expected}"));
        }
        let s = table_spectrum(&a.table);
        t.check(s.is_divisor_closed(), || format!("{name}: spectrum not divisor-closed"));
        if !cfg.skip_sampled {
            let v = is_eppo_sampled(&a.group, CROSS_CHECK_SAMPLES, cfg.seed);
            let consistent = match v.status {
                Status::NotEppo => !a.eppo && v.witness.as_ref().is_some_and(|w| witness_holds(&a.table, w)),
                Status::SampledConsistent => true,
                Status::Eppo => false,
            };
            t.check(consistent, || format!("{name}: sampled verdict {}", v.status.name()));
        }
    });
    t.check(count >= 25, || format!("corpus has {count} groups"));
    t.record("corpus", count);
    t.finish(2)
}

fn metacyclic_criterion(_cfg: &SuiteConfig) -> CriterionResult {
    let mut t = Tally::new();
    let mut eppo_count = 0;
    let mut total = 0;
    for p in PRIME_GRID {
        for q in PRIME_GRID.into_iter().filter(|&q| q != p) {
            for alpha in 1..=2u32 {
                for beta in 1..=2u32 {
                    let pa = p.pow(alpha);
                    let qb = q.pow(beta);
                    // Brute force over every residue: which r define a group, which give order exactly q^β.
                    let defining: Vec<u64> = (2..pa).filter(|&r| gcd(r, p) == 1 && pow_mod(r, qb, pa) == 1).collect();
                    let exact = defining.iter().copied().find(|&r| (1..qb).all(|e| pow_mod(r, e, pa) != 1));
                    let label = format!("p={p} a={alpha} q={q} b={beta}");
                    t.check(constructible_rs(p, alpha, q, beta) == defining, || {
                        format!("{label}: constructible r differ")
                    });
                    let found = find_metacyclic_r(p, alpha, q, beta);
                    t.check(found == exact, || format!("{label}: find_metacyclic_r {found:?}, brute force {exact:?}"));
                    t.check(exact.is_some() == ((p - 1) % qb == 0), || format!("{label}: solvability criterion"));
                    for r in defining {
                        total += 1;
                        let Some(spec) = t.ok(&label, MetacyclicSpec::new(p, alpha, q, beta, Some(r))) else {
                            continue;
                        };
                        let group = metacyclic_group(&spec);
                        let text = metacyclic_text(&spec);
                        let order = crate::group::FiniteGroup::order(&group);
                        t.check(order == pa * qb, || format!("{text}: order {order}"));
                        let Some(v) = t.ok(&text, is_eppo_exhaustive(&group, &Limits::default())) else { continue };
                        let exact_order = (1..qb).all(|e| pow_mod(r, e, pa) != 1);
                        t.record(&text, format!("{} (order of r exactly q^b: {exact_order})", v.status.name()));
                        t.check(v.is_eppo() == exact_order, || format!("{text}: verdict {}", v.status.name()));
                        eppo_count += usize::from(v.is_eppo());
                    }
                }
            }
        }
    }
    t.record("groups", total);
    t.record("eppo", eppo_count);
    t.finish(3)
}

fn element_counts(cfg: &SuiteConfig) -> CriterionResult {
    let mut t = Tally::new();
    let mut groups = 0;
    for_each_corpus_group(&mut t, &cfg.limits, |t, a| {
        if !a.eppo {
            return;
        }
        groups += 1;
        let name = &a.entry.name;
        let table = &a.table;
        let counts = order_counts(table);
        let orders: BTreeSet<u64> = counts.keys().copied().collect();
        // The divisibility depends on H only through |H|, so one cyclic subgroup per element order suffices.
        let mut subgroups = Vec::new();
        for &o in &orders {
            let x = table.ids().find(|&x| table.element_order(x) == o).expect("order occurs");
            subgroups.push((format!("cyclic-{o}"), table.closure(&[x])));
        }
        for p in prime_divisors(table.order()) {
            if let Some(s) = t.ok(name, table.sylow_subgroup(p, cfg.seed)) {
                subgroups.push((format!("sylow-{p}"), s));
            }
        }
        let mut tested = 0;
        for (label, h) in &subgroups {
            let h_order = h.order();
            let mut ds: Vec<u64> = orders.iter().copied().filter(|&d| d > 1 && gcd(d, h_order) == 1).collect();
            let absent = (2..).find(|&d| gcd(d, h_order) == 1 && !orders.contains(&d)).expect("some d");
            ds.push(absent);
            for d in ds {
                let count = counts.get(&d).copied().unwrap_or(0);
                if d == absent {
                    t.check(count == 0, || format!("{name}: {count} elements of absent order {d}"));
                }
                let Some(ok) = t.ok(name, check_order_count_divisibility(table, h, d)) else { continue };
                // Independent of the library routine: divisibility read off the order counts.
                t.check(ok && count % h_order == 0, || {
                    format!("{name}: {label} (|H| = {h_order}) vs d = {d}, count {count}")
                });
                tested += 1;
            }
        }
        let mut normals = 0;
        for n in table.normal_subgroups().iter().filter(|n| !n.is_trivial() && n.order() < table.order()) {
            normals += 1;
            let Some(ok) = t.ok(name, check_normal_subgroup_divisibility(table, n)) else { continue };
            let n_primes = prime_divisors(n.order());
            let product: u64 = prime_divisors(table.order())
                .into_iter()
                .filter(|p| !n_primes.contains(p))
                .map(|p| p_part(table.order(), p))
                .product();
            t.check(ok && (n.order() - 1) % product == 0, || {
                format!("{name}: normal subgroup of order {} ({product} ∤ |N| - 1)", n.order())
            });
        }
        t.record(name, format!("{tested} divisibilities, {normals} normal subgroups"));
    });
    t.record("groups", groups);
    t.finish(4)
}

fn semidirect_criterion(_cfg: &SuiteConfig) -> CriterionResult {
    let mut t = Tally::new();
    let limits = Limits::default();
    for &(q, m, h) in SEMIDIRECT_GRID {
        let label = format!("semidirect q={q} m={m} H={h}");
        let Some(spec) = t.ok(&label, semidirect_spec(q, m, h)) else { continue };
        let Some(action) = t.ok(&label, fixed_point_free(&spec, ACTING_CAP)) else { continue };
        let Some(h_group) = t.ok(&label, spec.acting_group()) else { continue };
        let Some(h_verdict) = t.ok(&label, is_eppo_exhaustive(&h_group, &limits)) else { continue };
        let Some(group) = t.ok(&label, semidirect_product(&spec, ACTING_CAP)) else { continue };
        let order = crate::group::FiniteGroup::order(&group);
        t.check(order == spec.n_order() * h_group.order(), || format!("{label}: order {order}"));
        let Some(v) = t.ok(&label, is_eppo_exhaustive(&group, &limits)) else { continue };
        let predicted = h_verdict.is_eppo() && action.faithful && action.fixed_point_free;
        t.record(
            &label,
            format!(
                "{} (H eppo {}, faithful {}, fixed-point-free {})",
                v.status.name(),
                h_verdict.is_eppo(),
                action.faithful,
                action.fixed_point_free
            ),
        );
        t.check(v.is_eppo() == predicted, || {
            format!("{label}: verdict {} but prediction {predicted}", v.status.name())
        });
    }
    t.finish(5)
}

/// A random monomial matrix with `M^p = I` built from `p`-cycles whose
/// entries multiply to 1, plus fixed coordinates holding `p`-th roots of unity.
/// Returns the matrix, its permutation and its entries (`M e_i = a_i e_σ(i)`).
fn random_monomial(rng: &mut ChaCha8Rng, field: &Field, n: usize, p: usize) -> (Matrix, Vec<usize>, Vec<FieldElement>) {
    let nonzero: Vec<FieldElement> = field.elements().filter(|x| !x.is_zero()).collect();
    let roots: Vec<FieldElement> = nonzero.iter().copied().filter(|&x| field.pow(x, p as i64) == field.one()).collect();
    let cycles = rng.random_range(1..=n / p);
    let mut positions: Vec<usize> = (0..n).collect();
    positions.shuffle(rng);
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut entries = vec![FieldElement::ZERO; n];
    for c in 0..cycles {
        let cycle = &positions[c * p..(c + 1) * p];
        let mut product = field.one();
        for k in 0..p {
            sigma[cycle[k]] = cycle[(k + 1) % p];
            let a = if k + 1 < p {
                nonzero[rng.random_range(0..nonzero.len())]
            } else {
                field.inv(product).expect("nonzero")
            };
            product = field.mul(product, a);
            entries[cycle[k]] = a;
        }
    }
    for &i in &positions[cycles * p..] {
        entries[i] = roots[rng.random_range(0..roots.len())];
    }
    let mut m = Matrix::zero(n, n);
    for i in 0..n {
        m.set(sigma[i], i, entries[i]);
    }
    (m, sigma, entries)
}

fn monomial_criterion(cfg: &SuiteConfig) -> CriterionResult {
    const FIELDS: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];
    let mut t = Tally::new();
    let fields: Vec<Field> = FIELDS.iter().map(|&q| Field::of_size(q).expect("prime power")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut by_size = [0usize; 7];
    for trial in 0..MONOMIAL_TRIALS {
        let field = &fields[rng.random_range(0..fields.len())];
        let n = rng.random_range(2..=6);
        let primes: Vec<usize> = (2..=n).filter(|&p| is_prime(p as u64)).collect();
        let p = primes[rng.random_range(0..primes.len())];
        let (m, sigma, entries) = random_monomial(&mut rng, field, n, p);
        by_size[n] += 1;
        let label = format!("trial {trial}: GF({}) n={n} p={p}", field.size());
        t.check(!m.is_diagonal(), || format!("{label}: diagonal"));
        let Some(ok) = t.ok(&label, monomial_has_fixed_vector(field, &m, p as u64)) else { continue };
        t.check(ok, || format!("{label}: det(I - M) != 0"));
        // An explicit fixed vector: walk one nontrivial cycle with v_σ(i) = a_i v_i.
        let start = (0..n).find(|&i| sigma[i] != i).expect("non-diagonal");
        let mut v = vec![FieldElement::ZERO; n];
        v[start] = field.one();
        let mut i = start;
        while sigma[i] != start {
            v[sigma[i]] = field.mul(entries[i], v[i]);
            i = sigma[i];
        }
        t.check(m.apply(field, &v) == v, || format!("{label}: explicit vector not fixed"));
    }
    for (n, count) in by_size.iter().enumerate().skip(2) {
        t.record(format!("size-{n}"), count);
    }
    t.finish(6)
}

fn solvable_structure(cfg: &SuiteConfig) -> CriterionResult {
    let mut t = Tally::new();
    let (mut tested, mut supersolvable, mut not_supersolvable) = (0, 0, 0);
    let mut m9_seen = false;
    for_each_corpus_group(&mut t, &cfg.limits, |t, a| {
        let table = &a.table;
        if !a.eppo || !table.is_solvable() {
            return;
        }
        let name = &a.entry.name;
        let ss = supersolvability_check(table);
        t.check(ss.passed(), || format!("{name}: supersolvability equivalence fails"));
        if is_supersolvable(table) {
            supersolvable += 1;
        } else {
            not_supersolvable += 1;
        }
        if prime_divisors(table.order()).len() != 2 {
            return;
        }
        tested += 1;
        let Some(pattern) = t.ok(name, chief_series_pattern(table)) else { return };
        t.check(pattern.clauses.applied() && pattern.clauses.passed(), || {
            let failed: Vec<&str> = pattern.clauses.failures().map(|c| c.name.as_str()).collect();
            format!("{name}: chief series pattern (failed: {})", failed.join(", "))
        });
        let flagged: Vec<&str> = pattern
            .clauses
            .clauses
            .iter()
            .filter(|c| c.outcome == crate::structure::Outcome::Flagged)
            .map(|c| c.name.as_str())
            .collect();
        let case = pattern.case.map_or("none", PatternCase::name);
        let factors = pattern.series.as_ref().map(|s| join(&s.factors)).unwrap_or_default();
        t.record(
            name,
            format!(
                "{case} [{factors}]{}",
                if flagged.is_empty() { String::new() } else { format!(" flagged: {}", flagged.join(", ")) }
            ),
        );
        if let Some(q) = pattern.params.as_ref().map(|p| p.q) {
            if let Some(r) = t.ok(name, coprime_subgroup_shape(table, q, cfg.seed)) {
                t.check(r.applied() && r.passed(), || format!("{name}: coprime subgroup shape"));
            }
        }
        if let Some(r) = t.ok(name, quaternion_and_solvability_check(table)) {
            t.check(r.passed(), || format!("{name}: quaternion/solvability"));
        }
        if let Some(r) = t.ok(name, minimal_normal_exponent_check(table)) {
            t.check(r.passed(), || format!("{name}: minimal normal exponent"));
        }
        if !table.is_abelian(&table.whole()) {
            if let Some(n) = t.ok(name, noncentral_normal_abelian(table)) {
                t.check(n.is_some(), || format!("{name}: no noncentral normal abelian subgroup"));
            }
        }
        if name == "M9" {
            m9_seen = true;
            let params = pattern.params.as_ref();
            let ok = pattern.case == Some(PatternCase::QuaternionSylow2)
                && pattern.series.as_ref().is_some_and(|s| s.factors == [2, 2, 2, 9])
                && params
                    .is_some_and(|p| p.b == 2 && p.b_i.iter().all(|&bi| bi > 1 && (bi as u64).is_multiple_of(p.b)));
            t.check(ok, || format!("M9: signature {case} [{factors}], params {params:?}"));
        }
    });
    t.check(m9_seen, || "M9 missing from the corpus".into());
    t.check(supersolvable > 0 && not_supersolvable > 0, || {
        format!("supersolvability seen only one way ({supersolvable} yes, {not_supersolvable} no)")
    });
    t.record("two-prime-groups", tested);
    t.record("supersolvable", supersolvable);
    t.record("not-supersolvable", not_supersolvable);
    t.finish(7)
}

/// `PSL(2, q)`, `q` an odd prime, has element orders `q` and the divisors
/// of `(q ± 1)/2`.
fn psl2_prime_predicts_eppo(q: u64) -> bool {
    is_one_or_prime_power((q - 1) / 2) && is_one_or_prime_power(q.div_ceil(2))
}

fn psl2_boundary(cfg: &SuiteConfig) -> CriterionResult {
    let mut t = Tally::new();
    for q in [5, 7, 17, 13, 31, 127] {
        let label = format!("PSL2({q})");
        let Some(group) = t.ok(&label, psl2(q)) else { continue };
        if group.order() > cfg.limits.enumeration {
            t.record(&label, "above threshold");
            continue;
        }
        let expected = psl2_prime_predicts_eppo(q);
        t.check(expected == matches!(q, 5 | 7 | 17), || format!("{label}: arithmetic prediction {expected}"));
        let Some(v) = t.ok(&label, is_eppo_exhaustive(&group, &cfg.limits)) else { continue };
        t.check(v.is_eppo() == expected, || format!("{label}: verdict {}", v.status.name()));
        match &v.witness {
            Some(w) => {
                t.check(composite_witness_holds(&group, w), || format!("{label}: invalid witness"));
                t.record(&label, format!("{} witness order {}", v.status.name(), w.composite_order().unwrap_or(0)));
            }
            None => t.record(&label, v.status.name()),
        }
    }
    for name in ["PSL2(9)", "M9", "PSL3(4)"] {
        let Some(entry) = t.ok(name, catalog::lookup(name)) else { continue };
        let Some(group) = t.ok(name, entry.build()) else { continue };
        let Some(v) = t.ok(name, is_eppo_exhaustive(&group, &cfg.limits)) else { continue };
        t.record(name, v.status.name());
        t.check(v.is_eppo(), || format!("{name}: verdict {}", v.status.name()));
    }
    t.finish(8)
}

fn a5_recognizer(cfg: &SuiteConfig) -> CriterionResult {
    let mut t = Tally::new();
    let mut recognized = Vec::new();
    for_each_corpus_group(&mut t, &cfg.limits, |t, a| {
        let name = &a.entry.name;
        let Some(record) = t.ok(name, classify(&a.group, &cfg.limits, cfg.samples, cfg.seed, &cfg.fixture)) else {
            return;
        };
        let fired = matches!(record.verdict, Classification::A5Recognized);
        if fired {
            recognized.push(name.clone());
        }
        t.check(fired == (name == "A5"), || format!("{name}: recognizer {fired}"));
        t.check(recognizes_a5(&record.spectrum) == fired, || format!("{name}: recognizer and classification disagree"));
        if matches!(name.as_str(), "C30" | "PSL2(7)") {
            t.check(!recognizes_a5(&table_spectrum(&a.table)), || format!("{name}: spectrum accepted"));
            t.record(name, record.verdict.name());
        }
    });
    t.check(recognized == ["A5"], || format!("recognized: {}", recognized.join(", ")));
    t.record("recognized", recognized.join(", "));
    t.finish(9)
}

fn extension_arithmetic(_cfg: &SuiteConfig) -> CriterionResult {
    let mut t = Tally::new();
    let stated = [
        (SimpleId::Psl2Of5, Some(4)),
        (SimpleId::Psl2Of8, Some(6)),
        (SimpleId::Psl2Of17, None),
        (SimpleId::Sz8, Some(12)),
        (SimpleId::Sz32, None),
    ];
    for (id, exponent) in stated {
        let divisor = id.divisor() as u128;
        let mut valid = Vec::new();
        for k in 1..=EXTENSION_SCAN {
            let direct = ((1u128 << k) - 1).is_multiple_of(divisor);
            if direct {
                valid.push(k);
            }
            match extension_constraint(id, 1u128 << k) {
                Ok(v) => t.check(v == direct, || format!("{}: 2^{k} gives {v}, direct {direct}", id.name())),
                Err(e) => t.check(false, || format!("{}: 2^{k}: {e}", id.name())),
            };
        }
        let smallest = valid.first().copied();
        t.check(smallest == Some(smallest_valid_exponent(id)), || {
            format!("{}: scan finds {smallest:?}, smallest_valid_exponent {}", id.name(), smallest_valid_exponent(id))
        });
        let k = exponent.or(smallest).unwrap_or(0);
        t.check(k > 0 && extension_constraint(id, 1u128 << k).unwrap_or(false), || {
            format!("{}: 2^{k} rejected", id.name())
        });
        t.record(
            id.name(),
            format!("divisor {divisor}, smallest k {smallest:?}, valid k <= {EXTENSION_SCAN}: {}", join(&valid)),
        );
    }
    t.finish(10)
}

/// Runs one of criteria 1 to 10.
pub fn run_criterion(id: u8, cfg: &SuiteConfig) -> Option<CriterionResult> {
    Some(match id {
        1 => catalog_verification(cfg),
        2 => predicate_equivalence(cfg),
        3 => metacyclic_criterion(cfg),
        4 => element_counts(cfg),
        5 => semidirect_criterion(cfg),
        6 => monomial_criterion(cfg),
        7 => solvable_structure(cfg),
        8 => psl2_boundary(cfg),
        9 => a5_recognizer(cfg),
        10 => extension_arithmetic(cfg),
        _ => return None,
    })
}

/// Criterion 11: reruns criteria 1 to 10 and compares the rendered records
/// with `first` byte for byte.
pub fn determinism(first: &[CriterionResult], cfg: &SuiteConfig) -> CriterionResult {
    let mut t = Tally::new();
    for c in first {
        let again = run_criterion(c.id, cfg).expect("known id");
        let (mut a, mut b) = (Records::new(), Records::new());
        c.write(&mut a);
        again.write(&mut b);
        let (a, b) = (a.to_string(), b.to_string());
        t.check(a == b, || format!("criterion {} differs between runs", c.id));
        t.record(format!("criterion-{}", c.id), format!("{} bytes", a.len()));
    }
    t.finish(11)
}

/// Runs all eleven criteria; `progress` sees each result as it completes.
pub fn run_suite(cfg: &SuiteConfig, mut progress: impl FnMut(&CriterionResult)) -> SuiteReport {
    let mut criteria = Vec::new();
    for id in 1..=10 {
        let r = run_criterion(id, cfg).expect("known id");
        progress(&r);
        criteria.push(r);
    }
    let d = determinism(&criteria, cfg);
    progress(&d);
    criteria.push(d);
    SuiteReport { seed: cfg.seed, samples: cfg.samples, skip_sampled: cfg.skip_sampled, criteria }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shape() {
        let c = corpus();
        assert!(c.len() >= 25);
        assert_eq!(metacyclic_grid().len(), 48);
        let names: BTreeSet<&str> = c.iter().map(|e| e.name.as_str()).collect();
        for n in ["A5", "M9", "C6", "C30", "S3", "S4", "SL2(3)", "genquat n=3", "genquat n=4", "D8", "D24"] {
            assert!(names.contains(n), "{n}");
        }
        assert_eq!(dihedral(5).order(), 10);
        assert_eq!(sl2_3().order(), 24);
        assert_eq!(symmetric(4).order(), 24);
    }

    #[test]
    fn monomials_have_the_requested_shape() {
        let f = Field::of_size(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let (m, sigma, _) = random_monomial(&mut rng, &f, 5, 2);
            assert!(m.is_monomial() && !m.is_diagonal());
            assert!(m.pow(&f, 2).unwrap().is_identity());
            assert!(sigma.iter().enumerate().any(|(i, &s)| s != i));
        }
    }

    #[test]
    fn fast_criteria() {
        let cfg = SuiteConfig::default();
        for id in [3, 5, 6, 10] {
            let r = run_criterion(id, &cfg).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
