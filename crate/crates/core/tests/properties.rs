use cluster_finite::diagram::{Diagram, SimpleGraph};
use cluster_finite::matrix::{
    gf2_solve, leading_principal_minors, Gf2Matrix, Gf2Solution, IntMatrix, SkewSymmetrizableMatrix,
};
use cluster_finite::quasi_cartan::{companion_mutate, is_positive, satisfies_positive_bounds, QuasiCartanMatrix};
use cluster_finite::recognizer::{class_type, recognize, Verdict, Witness};
use cluster_finite::roots::{cartan_killing_type, enumerate_roots, default_root_cap, RootEnumeration};
use cluster_finite::sweep::labeled_graphs;
use cluster_finite::CartanKillingType;
use num_bigint::BigInt;
use proptest::prelude::*;

fn cofactor_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * cofactor_det(&minor)
        })
        .sum()
}

/// Induced cycles by testing every vertex subset of size at least 3: the
/// subset induces a cycle when every member has exactly two neighbors in
/// it and it is connected.
fn brute_force_cycles(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() < 3 {
            continue;
        }
        if (0..n).any(|v| mask >> v & 1 == 1 && (adj[v] & mask).count_ones() != 2) {
            continue;
        }
        let mut reached = 1u32 << mask.trailing_zeros();
        loop {
            let grown = (0..n)
                .filter(|&v| reached >> v & 1 == 1)
                .fold(reached, |acc, v| acc | (adj[v] & mask));
            if grown == reached {
                break;
            }
            reached = grown;
        }
        if reached == mask {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

fn cycle_sets(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut sets: Vec<Vec<usize>> = g
        .chordless_cycles()
        .iter()
        .map(|c| {
            let mut v = c.vertices().to_vec();
            v.sort();
            v
        })
        .collect();
    sets.sort();
    sets
}

#[test]
fn chordless_cycles_match_subset_search_up_to_seven_vertices() {
    for n in 0..=7 {
        for g in labeled_graphs(n) {
            assert_eq!(cycle_sets(&g), brute_force_cycles(&g), "{:?}", g.edges());
        }
    }
}

/// Skew-symmetrizable matrices with entries in `[-3, 3]`: `B_ij = c d_j / g`
/// and `B_ji = -c d_i / g` for a random symmetrizer `d`; pairs that would
/// leave the range are dropped.
fn skew_matrix(max_n: usize) -> impl Strategy<Value = SkewSymmetrizableMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(1i64..=3, n),
            proptest::collection::vec(-3i64..=3, n * n),
        )
            .prop_map(move |(d, c)| {
                let mut rows = vec![vec![0i64; n]; n];
                for i in 0..n {
                    for j in i + 1..n {
                        let g = num_integer::gcd(d[i], d[j]);
                        let (x, y) = (c[i * n + j] * d[j] / g, -c[i * n + j] * d[i] / g);
                        if x.abs() <= 3 && y.abs() <= 3 {
                            rows[i][j] = x;
                            rows[j][i] = y;
                        }
                    }
                }
                SkewSymmetrizableMatrix::from_i64(&rows).unwrap()
            })
    })
}

fn small_square(max_n: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(move |n| proptest::collection::vec(proptest::collection::vec(-bound..=bound, n), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn diagram_mutation_follows_matrix_mutation(b in skew_matrix(5), k in 0usize..5) {
        let k = k % b.n();
        let d = Diagram::of_skew(&b);
        let mutated = d.mutate(k).unwrap();
        prop_assert_eq!(&Diagram::of_skew(&b.mutate(k).unwrap()), &mutated);
        prop_assert_eq!(mutated.mutate(k).unwrap(), d);
    }

    #[test]
    fn leading_minors_match_cofactor_expansion(m in small_square(5, 3)) {
        let minors = leading_principal_minors(&IntMatrix::from_i64(&m));
        for (s, minor) in minors.iter().enumerate() {
            let block: Vec<Vec<i64>> = m[..=s].iter().map(|r| r[..=s].to_vec()).collect();
            prop_assert_eq!(minor, &BigInt::from(cofactor_det(&block)));
        }
    }
}

proptest! {
    #[test]
    fn mutation_is_an_involution_keeping_the_symmetrizer(b in skew_matrix(6), k in 0usize..6) {
        let k = k % b.n();
        let mb = b.mutate(k).unwrap();
        prop_assert_eq!(mb.symmetrizer(), b.symmetrizer());
        let dmb = b.symmetrizer().apply(mb.matrix());
        prop_assert_eq!(dmb.transpose(), IntMatrix::zeros(b.n()).sub(&dmb).unwrap());
        prop_assert_eq!(mb.mutate(k).unwrap(), b);
    }

    #[test]
    fn gf2_solutions_reproduce_the_right_hand_side(
        rows in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 6), 1..7),
        rhs_seed in proptest::collection::vec(any::<bool>(), 6),
        pick in proptest::collection::vec(any::<bool>(), 6),
    ) {
        let m = Gf2Matrix::from_rows(&rows).unwrap();
        let rhs = rhs_seed[..rows.len()].to_vec();
        if let Gf2Solution::Solution { particular, nullspace } = gf2_solve(&m, &rhs).unwrap() {
            let mut x = particular.clone();
            for (v, &use_it) in nullspace.iter().zip(&pick) {
                if use_it {
                    for (xi, vi) in x.iter_mut().zip(v) {
                        *xi ^= vi;
                    }
                }
            }
            prop_assert_eq!(m.mul_vec(&x), rhs);
        }
    }

    #[test]
    fn witnesses_replay(b in skew_matrix(6)) {
        let report = recognize(&b);
        prop_assert!(report.verify(&b));
    }

    #[test]
    fn type_survives_flips_and_companion_mutation(b in skew_matrix(6), k in 0usize..6, flips in 0u32..64) {
        let k = k % b.n();
        let report = recognize(&b);
        if let (Verdict::Finite, Witness::OrientedCyclesAndPositiveCompanion { certificate }) =
            (report.verdict, &report.witness)
        {
            let t = cartan_killing_type(&certificate.companion).unwrap();
            let mut a = certificate.companion.clone();
            for v in 0..b.n() {
                if flips >> v & 1 == 1 {
                    a = a.flip_vertex(v);
                }
            }
            prop_assert_eq!(&cartan_killing_type(&a).unwrap(), &t);
            // a companion whose cycle signs multiply to -1 is k-compatible
            let (a2, _) = companion_mutate(&a, &b, k).unwrap();
            prop_assert!(is_positive(&a2));
            prop_assert_eq!(&cartan_killing_type(&a2).unwrap(), &t);
            prop_assert_eq!(&class_type(&b.mutate(k).unwrap()).unwrap(), &t);
        }
    }

    #[test]
    fn type_names_round_trip(b in skew_matrix(6)) {
        if let Some(t) = recognize(&b).cartan_type {
            prop_assert_eq!(t.to_string().parse::<CartanKillingType>().unwrap(), t);
        }
    }
}

#[test]
fn roots_are_finite_exactly_for_positive_matrices() {
    // off-diagonal pairs: both zero, or equal signs with magnitudes at most 2
    let mut pairs = vec![(0i64, 0i64)];
    for a in 1..=2 {
        for b in 1..=2 {
            pairs.push((a, b));
            pairs.push((-a, -b));
        }
    }
    let mut checked = 0;
    for n in 1..=3usize {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for code in 0..pairs.len().pow(slots.len() as u32) {
            let mut rows = vec![vec![0i64; n]; n];
            let mut c = code;
            for i in 0..n {
                rows[i][i] = 2;
            }
            for &(i, j) in &slots {
                let (x, y) = pairs[c % pairs.len()];
                c /= pairs.len();
                rows[i][j] = x;
                rows[j][i] = y;
            }
            let Ok(a) = QuasiCartanMatrix::from_i64(&rows) else {
                continue;
            };
            checked += 1;
            let finite = matches!(enumerate_roots(&a, default_root_cap(n)), RootEnumeration::Finite(_));
            assert_eq!(finite, is_positive(&a), "{:?}", rows);
            if is_positive(&a) {
                assert!(satisfies_positive_bounds(&a), "{:?}", rows);
            }
        }
    }
    assert!(checked > 100);
}
