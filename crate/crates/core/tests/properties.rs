use std::collections::BTreeSet;

use proptest::prelude::*;

use eppo::arith::{gcd, is_one_or_prime_power, multiplicative_order};
use eppo::catalog::{self, psl2, Fixture};
use eppo::constructors::{constructible_rs, generalized_quaternion, metacyclic_group, MetacyclicSpec};
use eppo::criteria::{is_eppo_exhaustive, spectrum, spectrum_sampled, table_spectrum};
use eppo::gf::{monomial_has_fixed_vector, Field, FieldElement, Matrix};
use eppo::group::FiniteGroup;
use eppo::perm::Permutation;
use eppo::records::Records;
use eppo::structure::{extension_constraint, smallest_valid_exponent, SimpleId};
use eppo::suite::{corpus, dihedral};
use eppo::Limits;

const FIELD_SIZES: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];

fn field(i: usize) -> Field {
    Field::of_size(FIELD_SIZES[i]).unwrap()
}

/// (field index, n, p, positions, entry choices, number of p-cycles)
fn monomial_inputs() -> impl Strategy<Value = (usize, usize, usize, Vec<usize>, Vec<u32>, usize)> {
    (0..FIELD_SIZES.len(), 2usize..=6).prop_flat_map(|(f, n)| {
        let primes: Vec<usize> = [2, 3, 5].into_iter().filter(|&p| p <= n).collect();
        proptest::sample::select(primes).prop_flat_map(move |p| {
            (
                Just(f),
                Just(n),
                Just(p),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(any::<u32>(), n),
                1..=n / p,
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn monomial_with_cycle_products_one_fixes_a_vector((f, n, p, positions, choices, cycles) in monomial_inputs()) {
        let field = field(f);
        let nonzero: Vec<FieldElement> = field.elements().filter(|x| !x.is_zero()).collect();
        let roots: Vec<FieldElement> = nonzero.iter().copied().filter(|&x| field.pow(x, p as i64) == field.one()).collect();
        let mut m = Matrix::zero(n, n);
        for c in 0..cycles {
            let cycle = &positions[c * p..(c + 1) * p];
            let mut product = field.one();
            for k in 0..p {
                let a = if k + 1 < p {
                    nonzero[choices[cycle[k]] as usize % nonzero.len()]
                } else {
                    field.inv(product).unwrap()
                };
                product = field.mul(product, a);
                m.set(cycle[(k + 1) % p], cycle[k], a);
            }
        }
        for &i in &positions[cycles * p..] {
            m.set(i, i, roots[choices[i] as usize % roots.len()]);
        }
        prop_assert!(!m.is_diagonal());
        prop_assert!(m.pow(&field, p as u64).unwrap().is_identity());
        prop_assert!(monomial_has_fixed_vector(&field, &m, p as u64).unwrap());
        prop_assert!(m.fixed_space_dimension(&field).unwrap() >= 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn invertible_matrices_invert(f in 0..FIELD_SIZES.len(), n in 1usize..=4, raw in proptest::collection::vec(any::<u32>(), 16)) {
        let field = field(f);
        let entries: Vec<FieldElement> = raw[..n * n].iter().map(|r| field.from_raw(r % field.size()).unwrap()).collect();
        let m = Matrix::square(entries).unwrap();
        let det = m.det(&field).unwrap();
        match m.inverse(&field) {
            Ok(inv) => {
                prop_assert!(!det.is_zero());
                prop_assert!(m.mul(&field, &inv).unwrap().is_identity());
                prop_assert!(inv.mul(&field, &m).unwrap().is_identity());
            }
            Err(_) => prop_assert!(det.is_zero()),
        }
        prop_assert_eq!(det.is_zero(), m.rank(&field) < n);
    }

    #[test]
    fn permutation_laws(a in Just((0..7u32).collect::<Vec<_>>()).prop_shuffle(), b in Just((0..7u32).collect::<Vec<_>>()).prop_shuffle(), c in Just((0..7u32).collect::<Vec<_>>()).prop_shuffle()) {
        let (a, b, c) = (Permutation::from_images(a).unwrap(), Permutation::from_images(b).unwrap(), Permutation::from_images(c).unwrap());
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.pow(a.order()).is_identity());
        // apply a then b
        for x in 0..7 {
            prop_assert_eq!(a.compose(&b).image(x), b.image(a.image(x)));
        }
    }

    #[test]
    fn extension_constraint_is_direct_divisibility(k in 1u32..=64, which in 0usize..5) {
        let id = SimpleId::ALL[which];
        let direct = ((1u128 << k) - 1).is_multiple_of(id.divisor() as u128);
        prop_assert_eq!(extension_constraint(id, 1u128 << k).unwrap(), direct);
        prop_assert_eq!(direct, k % smallest_valid_exponent(id) == 0);
    }

    #[test]
    fn records_round_trip(pairs in proptest::collection::vec(("[a-z][a-z0-9.:()=]{0,12}", "[ -~]{0,20}"), 0..8)) {
        let mut r = Records::new();
        for (k, v) in &pairs {
            r.push(k.clone(), v.trim());
        }
        prop_assume!(pairs.iter().all(|(k, _)| !k.contains(": ") && !k.ends_with(':')));
        prop_assert_eq!(Records::parse(&r.to_string()), r);
    }
}

fn metacyclic_specs() -> impl Strategy<Value = MetacyclicSpec> {
    let primes = [2u64, 3, 5, 7, 13];
    (
        proptest::sample::select(primes.to_vec()),
        proptest::sample::select(primes.to_vec()),
        1u32..=2,
        1u32..=2,
        any::<prop::sample::Index>(),
    )
        .prop_filter_map("constructible", |(p, q, a, b, idx)| {
            if p == q {
                return None;
            }
            let rs = constructible_rs(p, a, q, b);
            (!rs.is_empty()).then(|| MetacyclicSpec::new(p, a, q, b, Some(rs[idx.index(rs.len())])).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn table_groups_satisfy_the_axioms(spec in metacyclic_specs(), seed in any::<u64>()) {
        let g = metacyclic_group(&spec);
        prop_assert_eq!(g.order(), spec.p_power() * spec.q_power());
        g.check_axioms(200, seed).unwrap();
        let verdict = is_eppo_exhaustive(&g, &Limits::default()).unwrap();
        prop_assert_eq!(verdict.is_eppo(), multiplicative_order(spec.r, spec.p_power()) == Some(spec.q_power()));
    }

    #[test]
    fn sampled_spectra_are_subsets(spec in metacyclic_specs(), seed in any::<u64>()) {
        let g = metacyclic_group(&spec);
        let full = spectrum(&g, &Limits::default()).unwrap();
        let sampled = spectrum_sampled(&g, 300, seed);
        prop_assert!(sampled.orders.is_subset(&full.orders));
        prop_assert!(full.is_divisor_closed() && sampled.is_divisor_closed());
        prop_assert_eq!(sampled.sampling.map(|s| s.seed), Some(seed));
    }
}

#[test]
fn quaternion_groups() {
    for n in 3..=7 {
        let g = generalized_quaternion(n).unwrap();
        g.check_axioms(300, n as u64).unwrap();
        let s = spectrum(&g, &Limits::default()).unwrap();
        let involutions = g.elements().filter(|x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert_eq!(s.orders.last().copied(), Some(1 << (n - 1)));
    }
}

#[test]
fn psl2_is_doubly_transitive() {
    for q in [4u64, 5, 7, 8, 9, 11, 13, 16, 17, 25, 32] {
        let g = psl2(q).unwrap();
        assert_eq!(g.order(), q * (q * q - 1) / gcd(2, q - 1), "q = {q}");
        assert!(g.is_transitive());
        // the first two basic orbits have lengths q + 1 and q exactly when the
        // point stabilizer is transitive on the remaining points
        let lengths = g.orbit_lengths();
        assert_eq!(&lengths[..2], &[q as usize + 1, q as usize], "q = {q}");
    }
}

#[test]
fn catalog_invariants() {
    let fixture = Fixture::bundled();
    for e in catalog::entries() {
        let g = e.build().unwrap();
        assert_eq!(g.order(), e.expected_order, "{}", e.name);
        assert_eq!(g.degree(), e.degree, "{}", e.name);
        if let Some(s) = e.expected_spectrum(&fixture) {
            assert!(s.iter().all(|&o| is_one_or_prime_power(o)), "{}", e.name);
            assert!(s.iter().all(|&o| e.expected_order % o == 0), "{}", e.name);
            let closed = s.iter().all(|&o| (1..=o).filter(|d| o % d == 0).all(|d| s.contains(&d)));
            assert!(closed, "{}", e.name);
        }
    }
}

#[test]
fn quotients_of_eppo_groups_are_eppo() {
    let limits = Limits::default();
    for entry in corpus().into_iter().filter(|e| e.expected_eppo == Some(true)) {
        let g = entry.build().unwrap();
        if g.order() > 2000 {
            continue;
        }
        let table = g.table(&limits).unwrap();
        for n in table.normal_subgroups() {
            let q = table.quotient(n).unwrap();
            assert_eq!(q.order() * n.order(), g.order());
            let s = spectrum(&q, &limits).unwrap();
            assert!(s.all_prime_power(), "{} / order {}", entry.name, n.order());
        }
        for x in table.ids().step_by(7) {
            let cyclic = table.closure(&[x]);
            assert!(is_one_or_prime_power(cyclic.order()), "{}", entry.name);
        }
    }
}

#[test]
fn dihedral_spectra() {
    for n in 3..=12u32 {
        let g = dihedral(n);
        let table = g.table(&Limits::default()).unwrap();
        let s = table_spectrum(&table);
        let mut expected: BTreeSet<u64> = (1..=n as u64).filter(|d| (n as u64).is_multiple_of(*d)).collect();
        expected.insert(2);
        assert_eq!(s.orders, expected, "D{}", 2 * n);
    }
}
