use crate::arith::{multiplicative_order, p_part, prime_divisors, prime_power};
use crate::perm::{GroupTable, Subgroup};
use crate::records::{join, Records};
use crate::{Error, Result};

use super::{is_cyclic, is_generalized_quaternion, largest_normal_p_subgroup, ClauseReport, Outcome};

/// A chief series `G = C_0 > C_1 > ... > C_s = 1`.
#[derive(Clone, Debug)]
pub struct ChiefSeries {
    /// From the whole group down to the trivial subgroup.
    pub series: Vec<Subgroup>,
    /// `|C_i / C_(i+1)|`, top-down.
    pub factors: Vec<u64>,
}

impl ChiefSeries {
    pub fn all_prime(&self) -> bool {
        self.factors.iter().all(|&f| matches!(prime_power(f), Some((_, 1))))
    }

    pub fn product(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn write(&self, out: &mut Records, prefix: &str) {
        out.push(format!("{prefix}.factors"), join(&self.factors));
    }
}

/// A chief series built bottom-up: each step adds a normal subgroup of
/// least order strictly above the current one. By the correspondence
/// theorem its image is a minimal normal subgroup of the current quotient.
pub fn chief_series(table: &GroupTable) -> ChiefSeries {
    chief_series_through(table, &[]).expect("an empty chain is valid")
}

/// A chief series passing through every member of `chain`, which must be
/// normal subgroups totally ordered by inclusion.
pub fn chief_series_through(table: &GroupTable, chain: &[Subgroup]) -> Result<ChiefSeries> {
    let mut targets: Vec<Subgroup> = chain.to_vec();
    targets.sort_by_key(Subgroup::order);
    targets.push(table.whole());
    for w in targets.windows(2) {
        if !w[0].is_subset_of(&w[1]) {
            return Err(Error::Precondition("chain is not totally ordered".into()));
        }
    }
    if let Some(n) = targets.iter().find(|n| !table.is_normal(n)) {
        return Err(Error::Precondition(format!("chain member of order {} is not normal", n.order())));
    }
    let normals = table.normal_subgroups();
    let mut ascending = vec![table.trivial()];
    for target in &targets {
        while ascending.last().expect("nonempty").order() < target.order() {
            let current = ascending.last().expect("nonempty");
            let next = normals
                .iter()
                .find(|n| n.order() > current.order() && current.is_subset_of(n) && n.is_subset_of(target))
                .expect("the target itself qualifies")
                .clone();
            ascending.push(next);
        }
    }
    ascending.reverse();
    let factors = ascending.windows(2).map(|w| w[0].order() / w[1].order()).collect();
    Ok(ChiefSeries { series: ascending, factors })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternCase {
    /// Sylow 2-subgroups are generalized quaternion.
    QuaternionSylow2,
    /// `O_q(G)` is a Sylow subgroup.
    NormalSylow,
    General,
}

impl PatternCase {
    pub fn name(self) -> &'static str {
        match self {
            PatternCase::QuaternionSylow2 => "quaternion-sylow-2",
            PatternCase::NormalSylow => "normal-sylow",
            PatternCase::General => "general",
        }
    }
}

/// The parameters read off the group and its chief series. `|G| = p^α q^β`,
/// `Q = O_q(G)`, `|G/Q| = p^α q^γ`, the lowest factors are `q^(b_i)` and
/// `b` is the multiplicative order of `q` modulo `p^α` (modulo `2^(α-1)` in
/// the quaternion case).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternParams {
    pub p: u64,
    pub q: u64,
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
    pub b: u64,
    pub b_i: Vec<u32>,
    pub k: usize,
    pub nilpotency_class: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct PatternReport {
    pub case: Option<PatternCase>,
    pub params: Option<PatternParams>,
    pub series: Option<ChiefSeries>,
    pub clauses: ClauseReport,
}

impl PatternReport {
    pub fn write(&self, out: &mut Records, prefix: &str) {
        if let Some(case) = self.case {
            out.push(format!("{prefix}.case"), case.name());
        }
        if let Some(s) = &self.series {
            s.write(out, prefix);
        }
        if let Some(p) = &self.params {
            out.push(format!("{prefix}.p"), p.p);
            out.push(format!("{prefix}.q"), p.q);
            out.push(format!("{prefix}.alpha"), p.alpha);
            out.push(format!("{prefix}.beta"), p.beta);
            out.push(format!("{prefix}.gamma"), p.gamma);
            out.push(format!("{prefix}.b"), p.b);
            out.push(format!("{prefix}.b_i"), join(&p.b_i));
            out.push(format!("{prefix}.k"), p.k);
            if let Some(c) = p.nilpotency_class {
                out.push(format!("{prefix}.nilpotency_class"), c);
            }
        }
        self.clauses.write(out, prefix);
    }
}

fn exponent_of(n: u64, q: u64) -> Option<u32> {
    match prime_power(n) {
        Some((r, e)) if r == q => Some(e),
        _ => None,
    }
}

/// Splits the bottom factors into exponents of `q`, recording a failure
/// when one is not a power of `q`.
fn lower_exponents(report: &mut ClauseReport, factors: &[u64], q: u64) -> Vec<u32> {
    let exps: Vec<Option<u32>> = factors.iter().map(|&f| exponent_of(f, q)).collect();
    report.check(
        "lower-factors-q-powers",
        exps.iter().all(Option::is_some),
        format!("{} are powers of {q}", join(factors)),
    );
    exps.into_iter().flatten().collect()
}

/// Computes a chief series through `O_q(G)` (and, when `O_q(G)` is not a
/// Sylow subgroup, through the normal subgroup `H` with `H / O_q(G)` the
/// Sylow `p`-subgroup of `G / O_q(G)`) and checks the factor pattern of a
/// solvable EPPO group with two prime divisors.
pub fn chief_series_pattern(table: &GroupTable) -> Result<PatternReport> {
    let mut clauses = ClauseReport::new("chief-pattern");
    let order = table.order();
    let primes = prime_divisors(order);
    let eppo = table.element_orders().iter().all(|&o| prime_power(o).is_some() || o == 1);
    let unmet = |mut clauses: ClauseReport, why: &str| {
        clauses.push("hypotheses", Outcome::NotApplicable, why);
        Ok(PatternReport { case: None, params: None, series: None, clauses })
    };
    if !eppo || primes.len() != 2 || !table.is_solvable() {
        return unmet(clauses, "needs a solvable EPPO group with two prime divisors");
    }
    let nontrivial: Vec<(u64, Subgroup)> =
        primes.iter().map(|&r| (r, largest_normal_p_subgroup(table, r))).filter(|(_, n)| !n.is_trivial()).collect();
    if !clauses.check(
        "single-normal-prime",
        nontrivial.len() == 1,
        format!("{} primes with a nontrivial normal subgroup of prime-power order", nontrivial.len()),
    ) {
        return Ok(PatternReport { case: None, params: None, series: None, clauses });
    }
    let (q, big_q) = nontrivial.into_iter().next().expect("one entry");
    let p = *primes.iter().find(|&&r| r != q).expect("two primes");
    let alpha = exponent_of(p_part(order, p), p).expect("p divides the order");
    let beta = exponent_of(p_part(order, q), q).expect("q divides the order");
    let p_alpha = p.pow(alpha);
    let sylow_p = table.sylow_subgroup(p, 0)?;
    let quaternion = p == 2 && is_generalized_quaternion(table, &sylow_p);
    let q_is_sylow = big_q.order() == q.pow(beta);

    let (case, chain) = if quaternion {
        (PatternCase::QuaternionSylow2, vec![big_q.clone()])
    } else if q_is_sylow {
        (PatternCase::NormalSylow, vec![big_q.clone()])
    } else {
        let h = table
            .normal_subgroups()
            .iter()
            .find(|n| n.order() == big_q.order() * p_alpha && big_q.is_subset_of(n))
            .cloned();
        match h {
            Some(h) => (PatternCase::General, vec![big_q.clone(), h]),
            None => {
                clauses.check("normal-p-over-q", false, "no normal subgroup H with |H/Q| = p^alpha");
                return Ok(PatternReport { case: Some(PatternCase::General), params: None, series: None, clauses });
            }
        }
    };
    let series = chief_series_through(table, &chain)?;
    let factors = &series.factors;
    let gamma = match case {
        PatternCase::General => exponent_of(order / chain[1].order(), q).unwrap_or(0),
        _ => 0,
    };
    let g = gamma as usize;
    let a = alpha as usize;
    let mut params = PatternParams { p, q, alpha, beta, gamma, b: 0, b_i: Vec::new(), k: 0, nilpotency_class: None };
    clauses.check("product", series.product() == order, format!("factors multiply to {}", series.product()));
    if g + a > factors.len() {
        clauses.check("length", false, format!("{} factors, expected more than {}", factors.len(), g + a));
        return Ok(PatternReport { case: Some(case), params: Some(params), series: Some(series), clauses });
    }
    clauses.check("top-q-factors", factors[..g].iter().all(|&f| f == q), format!("{gamma} factors equal to {q}"));
    clauses.check(
        "middle-p-factors",
        factors[g..g + a].iter().all(|&f| f == p),
        format!("{alpha} factors equal to {p}"),
    );
    params.b_i = lower_exponents(&mut clauses, &factors[g + a..], q);
    params.k = params.b_i.len();
    match case {
        PatternCase::QuaternionSylow2 => {
            clauses.check("normal-sylow-q", q_is_sylow, format!("|O_q| = {}", big_q.order()));
            params.b = multiplicative_order(q, 1 << (alpha - 1)).unwrap_or(0);
            let b = params.b;
            clauses.check(
                "b-divides-b_i",
                b > 0 && params.b_i.iter().all(|&e| (e as u64).is_multiple_of(b)),
                format!("b = {b}, b_i = {}", join(&params.b_i)),
            );
            clauses.check("b_i-exceed-1", params.b_i.iter().all(|&e| e > 1), format!("b_i = {}", join(&params.b_i)));
        }
        PatternCase::NormalSylow => {
            params.b = multiplicative_order(q, p_alpha).unwrap_or(0);
            let b = params.b;
            clauses.check(
                "equal-lower-factors",
                params.b_i.iter().all(|&e| e as u64 == b),
                format!("b = {b}, b_i = {}", join(&params.b_i)),
            );
            clauses.check(
                "beta-equals-k-b",
                beta as u64 == params.k as u64 * b,
                format!("beta = {beta}, k = {}, b = {b}", params.k),
            );
            params.nilpotency_class = table.nilpotency_class(&big_q);
            clauses.check(
                "nilpotency-class-at-most-k",
                params.nilpotency_class.is_some_and(|c| c <= params.k),
                format!("class {:?}, k = {}", params.nilpotency_class, params.k),
            );
        }
        PatternCase::General => {
            params.b = multiplicative_order(q, p_alpha).unwrap_or(0);
            let b = params.b;
            clauses.check("q-gamma-divides-p-minus-1", (p - 1) % q.pow(gamma) == 0, format!("{q}^{gamma} | {}", p - 1));
            clauses.check(
                "b-divides-b_i",
                b > 0 && params.b_i.iter().all(|&e| (e as u64).is_multiple_of(b)),
                format!("b = {b}, b_i = {}", join(&params.b_i)),
            );
            clauses.check(
                "p-alpha-divides-q-b-minus-1",
                b > 0 && (q.pow(b as u32) - 1) % p_alpha == 0,
                format!("{p_alpha} | {q}^{b} - 1"),
            );
            let top = table.quotient(&chain[1])?.table(&crate::Limits::default())?;
            clauses.check(
                "quotient-metacyclic",
                is_cyclic(table, &sylow_p) && is_cyclic(&top, &top.whole()),
                "Sylow p-subgroup and G/H cyclic",
            );
            let outcome = if (gamma as u64) < b { Outcome::Passed } else { Outcome::Flagged };
            clauses.push("gamma-below-b", outcome, format!("gamma = {gamma}, b = {b}"));
        }
    }
    Ok(PatternReport { case: Some(case), params: Some(params), series: Some(series), clauses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::m9;
    use crate::constructors::{metacyclic_group, MetacyclicSpec};
    use crate::perm::{PermGroup, Permutation};
    use crate::Limits;

    fn table(g: &PermGroup) -> GroupTable {
        g.table(&Limits::default()).unwrap()
    }

    fn metacyclic(p: u64, q: u64, beta: u32, r: u64) -> GroupTable {
        let g = metacyclic_group(&MetacyclicSpec::new(p, 1, q, beta, Some(r)).unwrap());
        table(&g.to_perm_group().unwrap())
    }

    fn s4() -> GroupTable {
        let gens = vec![
            Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
            Permutation::from_cycles(4, &[vec![0, 1]]).unwrap(),
        ];
        table(&PermGroup::from_generators(gens, 4).unwrap())
    }

    #[test]
    fn series_examples() {
        assert_eq!(chief_series(&metacyclic(3, 2, 1, 2)).factors, [2, 3]);
        assert_eq!(chief_series(&table(&m9())).factors, [2, 2, 2, 9]);
        assert_eq!(chief_series(&s4()).factors, [2, 3, 4]);
        let c = chief_series(&table(&crate::catalog::a5()));
        assert_eq!(c.factors, [60]);
    }

    #[test]
    fn frobenius_20() {
        let r = chief_series_pattern(&metacyclic(5, 2, 2, 2)).unwrap();
        assert_eq!(r.case, Some(PatternCase::NormalSylow));
        let p = r.params.unwrap();
        assert_eq!((p.p, p.q, p.alpha, p.b, p.k), (2, 5, 2, 1, 1));
        assert_eq!(r.series.unwrap().factors, [2, 2, 5]);
        assert!(r.clauses.passed() && r.clauses.applied());
    }

    #[test]
    fn m9_quaternion_case() {
        let r = chief_series_pattern(&table(&m9())).unwrap();
        assert_eq!(r.case, Some(PatternCase::QuaternionSylow2));
        let p = r.params.unwrap();
        assert_eq!((p.alpha, p.q, p.b, p.b_i.clone()), (3, 3, 2, vec![2]));
        assert!(r.clauses.passed());
    }

    #[test]
    fn metacyclic_21() {
        let r = chief_series_pattern(&metacyclic(7, 3, 1, 2)).unwrap();
        let p = r.params.unwrap();
        assert_eq!((p.p, p.q, p.b), (3, 7, 1));
        assert_eq!(r.series.unwrap().factors, [3, 7]);
        assert!(r.clauses.passed());
    }

    #[test]
    fn s4_general_case() {
        let r = chief_series_pattern(&s4()).unwrap();
        assert_eq!(r.case, Some(PatternCase::General));
        let p = r.params.unwrap();
        assert_eq!((p.p, p.q, p.alpha, p.gamma, p.b), (3, 2, 1, 1, 2));
        assert_eq!(r.series.unwrap().factors, [2, 3, 4]);
        assert!(r.clauses.passed());
        assert_eq!(r.clauses.outcome("gamma-below-b"), Some(Outcome::Passed));
    }

    #[test]
    fn not_applicable() {
        let r = chief_series_pattern(&table(&crate::catalog::a5())).unwrap();
        assert!(!r.clauses.applied());
        assert_eq!(r.clauses.outcome("hypotheses"), Some(Outcome::NotApplicable));
    }
}
