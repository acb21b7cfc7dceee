use crate::arith::{gcd, is_one_or_prime_power, multiplicative_order, p_part, prime_divisors, prime_power};
use crate::perm::{GroupTable, Subgroup};
use crate::records::join;
use crate::Result;

use super::{chief_series, is_cyclic, is_generalized_quaternion, largest_normal_p_subgroup, ClauseReport, Outcome};

fn is_eppo(table: &GroupTable) -> bool {
    table.element_orders().iter().all(|&o| is_one_or_prime_power(o))
}

/// With a nontrivial normal `q`-subgroup, subgroups of order prime to `q`
/// are cyclic of prime-power order or generalized quaternion. Tested on the
/// cyclic subgroups `<x>` and on Sylow `p`-subgroups for `p != q`;
/// quaternion is only accepted for `p = 2`.
pub fn coprime_subgroup_shape(table: &GroupTable, q: u64, seed: u64) -> Result<ClauseReport> {
    let mut report = ClauseReport::new("coprime-shape");
    if !is_eppo(table) || largest_normal_p_subgroup(table, q).is_trivial() {
        report.push("hypotheses", Outcome::NotApplicable, format!("needs an EPPO group with O_{q} nontrivial"));
        return Ok(report);
    }
    let bad_cyclic = table.ids().map(|x| table.element_order(x)).find(|&o| gcd(o, q) == 1 && !is_one_or_prime_power(o));
    report.check("cyclic-subgroups", bad_cyclic.is_none(), format!("first bad order {bad_cyclic:?}"));
    for p in prime_divisors(table.order()).into_iter().filter(|&p| p != q) {
        let sylow = table.sylow_subgroup(p, seed)?;
        let cyclic = is_cyclic(table, &sylow);
        let quaternion = p == 2 && is_generalized_quaternion(table, &sylow);
        let shape = if cyclic {
            "cyclic"
        } else if quaternion {
            "generalized quaternion"
        } else {
            "other"
        };
        report.check(format!("sylow-{p}"), cyclic || quaternion, format!("order {}, {shape}", sylow.order()));
    }
    if table.is_solvable() {
        let primes = prime_divisors(table.order());
        report.check("two-primes", primes.len() <= 2, format!("primes {}", join(&primes)));
    }
    Ok(report)
}

/// A generalized quaternion Sylow 2-subgroup forces at most one odd prime
/// and a normal Sylow subgroup for it. A nontrivial normal `q`-subgroup
/// forces solvability when `q` is odd, when it is a Sylow subgroup, or when
/// the Sylow 2-subgroup is abelian.
pub fn quaternion_and_solvability_check(table: &GroupTable) -> Result<ClauseReport> {
    let mut report = ClauseReport::new("quaternion-solvability");
    if !is_eppo(table) {
        report.push("hypotheses", Outcome::NotApplicable, "needs an EPPO group");
        return Ok(report);
    }
    let order = table.order();
    let primes = prime_divisors(order);
    let sylow2 = if order.is_multiple_of(2) { Some(table.sylow_subgroup(2, 0)?) } else { None };
    match &sylow2 {
        Some(s) if is_generalized_quaternion(table, s) => {
            report.check("quaternion-primes", primes.len() <= 2, format!("primes {}", join(&primes)));
            let normal_odd = primes
                .iter()
                .filter(|&&r| r != 2)
                .all(|&r| largest_normal_p_subgroup(table, r).order() == p_part(order, r));
            report.check("quaternion-odd-sylow-normal", normal_odd, "");
        }
        _ => report.push("quaternion-primes", Outcome::Vacuous, "Sylow 2-subgroup is not generalized quaternion"),
    }
    let abelian_sylow2 = sylow2.as_ref().is_none_or(|s| table.is_abelian(s));
    let solvable = table.is_solvable();
    let mut any = false;
    for q in primes {
        let big_q = largest_normal_p_subgroup(table, q);
        if big_q.is_trivial() {
            continue;
        }
        any = true;
        let conditions = [
            ("odd-prime", q % 2 == 1),
            ("normal-sylow", big_q.order() == p_part(order, q)),
            ("abelian-sylow-2", abelian_sylow2),
        ];
        for (name, holds) in conditions {
            let clause = format!("solvable-{name}-{q}");
            if holds {
                report.check(clause, solvable, "");
            } else {
                report.push(clause, Outcome::Vacuous, "condition does not hold");
            }
        }
    }
    if !any {
        report.push("solvable", Outcome::Vacuous, "no nontrivial normal subgroup of prime-power order");
    }
    Ok(report)
}

/// A normal abelian subgroup not contained in the center, of least order.
/// `Ok(None)` would contradict the statement for a nonabelian solvable EPPO group.
pub fn noncentral_normal_abelian(table: &GroupTable) -> Result<Option<Subgroup>> {
    let whole = table.whole();
    if !is_eppo(table) || !table.is_solvable() || table.is_abelian(&whole) {
        return Err(crate::Error::Precondition("needs a nonabelian solvable EPPO group".into()));
    }
    let center = table.center();
    Ok(table.normal_subgroups().iter().find(|n| table.is_abelian(n) && !n.is_subset_of(&center)).cloned())
}

/// For `|G| = p^α q^β` with a cyclic Sylow `p`-subgroup and a minimal
/// normal Sylow `q`-subgroup `Q` with `C(Q) = Q`, checks that `β` is the
/// multiplicative order of `q` modulo `p^α`. For EPPO groups it also checks
/// that `C(Q) = Q` follows from the other hypotheses.
pub fn minimal_normal_exponent_check(table: &GroupTable) -> Result<ClauseReport> {
    let mut report = ClauseReport::new("minimal-normal-exponent");
    let order = table.order();
    let primes = prime_divisors(order);
    if primes.len() == 2 {
        let minimal: Vec<&Subgroup> = minimal_normal_subgroups(table);
        for (p, q) in [(primes[0], primes[1]), (primes[1], primes[0])] {
            let big_q = largest_normal_p_subgroup(table, q);
            let (_, beta) = prime_power(p_part(order, q)).expect("q divides the order");
            let p_alpha = p_part(order, p);
            if big_q.order() != q.pow(beta) || !minimal.contains(&&big_q) {
                continue;
            }
            let sylow_p = table.sylow_subgroup(p, 0)?;
            if !is_cyclic(table, &sylow_p) {
                continue;
            }
            let self_centralizing = table.centralizer_of(&big_q) == big_q;
            if is_eppo(table) {
                report.check(
                    "eppo-self-centralizing",
                    self_centralizing,
                    format!("|C(Q)| = {}", table.centralizer_of(&big_q).order()),
                );
            }
            if self_centralizing {
                let e = multiplicative_order(q, p_alpha).unwrap_or(0);
                report.check(
                    "beta-is-order",
                    e == beta as u64,
                    format!("p^alpha = {p_alpha}, q = {q}, beta = {beta}, order {e}"),
                );
            }
            return Ok(report);
        }
    }
    report.push("hypotheses", Outcome::NotApplicable, "needs |G| = p^a q^b, cyclic Sylow p, minimal normal Sylow q");
    Ok(report)
}

fn minimal_normal_subgroups(table: &GroupTable) -> Vec<&Subgroup> {
    let normals = table.normal_subgroups();
    normals
        .iter()
        .filter(|n| !n.is_trivial())
        .filter(|n| !normals.iter().any(|m| !m.is_trivial() && m.order() < n.order() && m.is_subset_of(n)))
        .collect()
}

/// Some chief series has only prime factors. For solvable groups all chief
/// series share their factor orders, so checking one suffices.
pub fn is_supersolvable(table: &GroupTable) -> bool {
    table.is_solvable() && chief_series(table).all_prime()
}

/// An EPPO group is supersolvable exactly when it has a normal subgroup of prime order.
pub fn supersolvability_check(table: &GroupTable) -> ClauseReport {
    let mut report = ClauseReport::new("supersolvable");
    if !is_eppo(table) {
        report.push("hypotheses", Outcome::NotApplicable, "needs an EPPO group");
        return report;
    }
    let supersolvable = is_supersolvable(table);
    let prime_normal = table.normal_subgroups().iter().any(|n| matches!(prime_power(n.order()), Some((_, 1))));
    report.check(
        "equivalence",
        supersolvable == prime_normal,
        format!("supersolvable {supersolvable}, normal subgroup of prime order {prime_normal}"),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{a5, m9};
    use crate::constructors::{metacyclic_group, semidirect_product, semidirect_spec, MetacyclicSpec, ACTING_CAP};
    use crate::perm::PermGroup;
    use crate::Limits;

    fn table(g: &PermGroup) -> GroupTable {
        g.table(&Limits::default()).unwrap()
    }

    fn metacyclic(p: u64, q: u64, beta: u32, r: u64) -> GroupTable {
        let g = metacyclic_group(&MetacyclicSpec::new(p, 1, q, beta, Some(r)).unwrap());
        table(&g.to_perm_group().unwrap())
    }

    fn s3() -> GroupTable {
        metacyclic(3, 2, 1, 2)
    }

    #[test]
    fn coprime_shapes() {
        let r = coprime_subgroup_shape(&table(&m9()), 3, 0).unwrap();
        assert!(r.passed() && r.applied());
        assert!(r.clauses.iter().any(|c| c.detail.contains("generalized quaternion")));
        assert!(coprime_subgroup_shape(&s3(), 3, 0).unwrap().passed());
        assert!(coprime_subgroup_shape(&metacyclic(5, 2, 2, 2), 5, 0).unwrap().passed());
        assert!(!coprime_subgroup_shape(&table(&a5()), 5, 0).unwrap().applied());
    }

    #[test]
    fn quaternion_solvability() {
        let r = quaternion_and_solvability_check(&table(&m9())).unwrap();
        assert!(r.passed());
        assert_eq!(r.outcome("quaternion-odd-sylow-normal"), Some(Outcome::Passed));
        let r = quaternion_and_solvability_check(&table(&a5())).unwrap();
        assert!(r.passed() && !r.applied());
    }

    #[test]
    fn noncentral_abelian() {
        assert_eq!(noncentral_normal_abelian(&s3()).unwrap().unwrap().order(), 3);
        assert_eq!(noncentral_normal_abelian(&table(&m9())).unwrap().unwrap().order(), 9);
        assert_eq!(noncentral_normal_abelian(&metacyclic(5, 2, 2, 2)).unwrap().unwrap().order(), 5);
        assert!(noncentral_normal_abelian(&table(&a5())).is_err());
    }

    #[test]
    fn exponent_check() {
        let r = minimal_normal_exponent_check(&metacyclic(5, 2, 2, 2)).unwrap();
        assert!(r.passed() && r.applied());
        assert!(minimal_normal_exponent_check(&metacyclic(7, 3, 1, 2)).unwrap().applied());
        let g = semidirect_product(&semidirect_spec(3, 2, "C4").unwrap(), ACTING_CAP).unwrap();
        let r = minimal_normal_exponent_check(&table(&g.to_perm_group().unwrap())).unwrap();
        assert!(r.passed() && r.applied());
        // the Sylow 2-subgroup of M9 is not cyclic
        assert!(!minimal_normal_exponent_check(&table(&m9())).unwrap().applied());
    }

    #[test]
    fn supersolvable() {
        assert!(is_supersolvable(&s3()));
        assert!(!is_supersolvable(&table(&m9())));
        assert!(!is_supersolvable(&table(&a5())));
        for t in [s3(), table(&m9()), table(&a5()), metacyclic(5, 2, 2, 2)] {
            assert!(supersolvability_check(&t).passed());
        }
    }
}
