//! Acceptance run. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or overruns its time budget.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use cluster_finite::diagram::{Diagram, Sign, SimpleGraph};
use cluster_finite::matrix::{determinant, IntMatrix, SkewSymmetrizableMatrix};
use cluster_finite::orient::{assign_signs, differ_by_vertex_flips, is_cyclically_orientable_count, SignAssignment};
use cluster_finite::quasi_cartan::{
    companion_from_signs, companion_mutate, companion_mutate_entrywise, is_k_compatible, is_positive,
    QuasiCartanMatrix,
};
use cluster_finite::recognizer::{class_type, recognize, Caps, Verdict, Witness, DEFAULT_MAX_VISITED};
use cluster_finite::roots::{cartan_killing_type, cartan_matrix, default_root_cap, dn_sequence, enumerate_roots, Family};
use cluster_finite::sweep::{criteria_sweep, oracle_sweep, random_connected_graph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Self {
            ok,
            detail: detail.into(),
        }
    }
}

// ---------------------------------------------------------------------------
// test-side oracles

/// Determinant by Gaussian elimination over the rationals.
fn rational_det(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for r in c + 1..n {
            let f = m[r][c].clone() / m[c][c].clone();
            for k in c..n {
                let t = f.clone() * m[c][k].clone();
                m[r][k] -= t;
            }
        }
    }
    det.to_integer()
}

fn big_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_i64_rows().expect("small entries")
}

/// `B(n)`: above the diagonal -1 at distance 1, 1 at distance 2.
fn b_of(n: usize) -> Vec<Vec<i64>> {
    let mut b = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = match j - i {
                1 => -1,
                2 => 1,
                _ => 0,
            };
            b[i][j] = v;
            b[j][i] = -v;
        }
    }
    b
}

/// The companion of `B(n)` agreeing with it above the diagonal.
fn a_of(n: usize) -> Vec<Vec<i64>> {
    let b = b_of(n);
    let mut a = vec![vec![0; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        for j in i + 1..n {
            a[i][j] = b[i][j];
            a[j][i] = b[i][j];
        }
    }
    a
}

const EXPECTED_AN: [(i64, &str); 8] = [
    (2, "A1"),
    (3, "A2"),
    (4, "A3"),
    (4, "D4"),
    (4, "D5"),
    (3, "E6"),
    (2, "E7"),
    (1, "E8"),
];

/// Coefficients of `(1+x)(1+x+x^2)(1+x^2)(1+x^3) / (1-x^12)` up to `x^limit`.
fn series_dn(limit: usize) -> Vec<i64> {
    let factors: [&[i64]; 4] = [&[1, 1], &[1, 1, 1], &[1, 0, 1], &[1, 0, 0, 1]];
    let mut num = vec![1i64];
    for f in factors {
        let mut out = vec![0; num.len() + f.len() - 1];
        for (i, a) in num.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        num = out;
    }
    (0..=limit).map(|n| num.get(n % 12).copied().unwrap_or(0)).collect()
}

/// Dynkin trees: one weight-3 edge on two vertices; paths with a single
/// weight-2 edge at an end or in the middle of four vertices; weight-1
/// trees that are paths or have one branch point with arms `p, q, r`
/// satisfying `1/(p+1) + 1/(q+1) + 1/(r+1) > 1`.
fn is_dynkin_tree(n: usize, edges: &[(usize, usize, u64)]) -> bool {
    let mut deg = vec![0; n];
    for &(u, v, _) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let heavy: Vec<&(usize, usize, u64)> = edges.iter().filter(|e| e.2 > 1).collect();
    let is_path = deg.iter().all(|&d| d <= 2);
    match heavy.as_slice() {
        [] => {}
        [&(u, v, 3)] => return n == 2 && u != v,
        [&(u, v, 2)] => {
            if !is_path {
                return false;
            }
            let at_end = deg[u] == 1 || deg[v] == 1;
            let middle_of_four = n == 4 && deg[u] == 2 && deg[v] == 2;
            return at_end || middle_of_four;
        }
        _ => return false,
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branch.as_slice() {
        [] => true,
        [c] if deg[*c] == 3 => {
            let mut adj = vec![vec![]; n];
            for &(u, v, _) in edges {
                adj[u].push(v);
                adj[v].push(u);
            }
            let arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            let s: f64 = arms.iter().map(|&a| 1.0 / (a as f64 + 1.0)).sum();
            s > 1.0 + 1e-9
        }
        _ => false,
    }
}

/// Canonical string of a rooted tree.
fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| ahu(adj, w, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// One edge list per unlabeled tree on `n` vertices.
fn unlabeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut parent = vec![0usize; n];
    fn rec(
        v: usize,
        n: usize,
        parent: &mut Vec<usize>,
        seen: &mut BTreeSet<String>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if v == n {
            let edges: Vec<(usize, usize)> = (1..n).map(|i| (parent[i], i)).collect();
            let mut adj = vec![vec![]; n];
            for &(u, w) in &edges {
                adj[u].push(w);
                adj[w].push(u);
            }
            let key = (0..n).map(|r| ahu(&adj, r, usize::MAX)).min().unwrap_or_default();
            if seen.insert(key) {
                out.push(edges);
            }
            return;
        }
        for p in 0..v {
            parent[v] = p;
            rec(v + 1, n, parent, seen, out);
        }
    }
    rec(1.min(n), n, &mut parent, &mut seen, &mut out);
    out
}

/// A random skew-symmetrizable matrix: half the time a Cartan-type seed
/// with random arrows pushed through random mutations, otherwise random
/// entries over a random symmetrizer.
fn random_skew<R: Rng>(rng: &mut R, n: usize) -> SkewSymmetrizableMatrix {
    if rng.gen_bool(0.5) {
        let family = *[Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G]
            .choose(rng)
            .unwrap();
        let rank = match family {
            Family::A => n,
            Family::B => n.max(2),
            Family::C => n.max(3),
            Family::D => n.max(4),
            Family::E => 6,
            Family::F => 4,
            Family::G => 2,
        };
        let a = cartan_matrix(family, rank).unwrap();
        let mut rows = big_rows(a.matrix());
        for i in 0..rank {
            rows[i][i] = 0;
            for j in i + 1..rank {
                if rows[i][j] != 0 && rng.gen_bool(0.5) {
                    rows[i][j] = -rows[i][j];
                } else {
                    rows[j][i] = -rows[j][i];
                }
            }
        }
        let mut b = SkewSymmetrizableMatrix::from_i64(&rows).unwrap();
        for _ in 0..rng.gen_range(0..12) {
            b = b.mutate(rng.gen_range(0..rank)).unwrap();
        }
        return b;
    }
    let d: Vec<i64> = (0..n).map(|_| *[1, 1, 1, 2, 3].choose(rng).unwrap()).collect();
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.55) {
                let c: i64 = *[-2, -1, -1, 1, 1, 2].choose(rng).unwrap();
                let g = num_integer::gcd(d[i], d[j]);
                rows[i][j] = c * d[j] / g;
                rows[j][i] = -c * d[i] / g;
            }
        }
    }
    SkewSymmetrizableMatrix::from_i64(&rows).unwrap()
}

// ---------------------------------------------------------------------------
// criteria

fn criterion_1() -> Outcome {
    for (idx, &(det, name)) in EXPECTED_AN.iter().enumerate() {
        let n = idx + 1;
        let rows = a_of(n);
        let a = QuasiCartanMatrix::from_i64(&rows).unwrap();
        let lib_det = determinant(a.matrix());
        if lib_det != BigInt::from(det) || rational_det(&rows) != BigInt::from(det) {
            return Outcome::new(false, format!("det A({}) = {}, expected {}", n, lib_det, det));
        }
        let t = cartan_killing_type(&a).map(|t| t.to_string());
        if t.as_deref().ok() != Some(name) {
            return Outcome::new(false, format!("type of A({}) = {:?}, expected {}", n, t, name));
        }
    }
    Outcome::new(true, "det and type of A(1..8) match")
}

fn criterion_2() -> Outcome {
    let lib = dn_sequence(52);
    let series = series_dn(52);
    for n in 0..=52 {
        if lib[n] != BigInt::from(series[n]) {
            return Outcome::new(false, format!("d_{} = {}, generating function gives {}", n, lib[n], series[n]));
        }
    }
    for n in 1..=12 {
        if BigInt::from(rational_det(&a_of(n))) != lib[n] {
            return Outcome::new(false, format!("d_{} disagrees with a direct determinant", n));
        }
    }
    let zeros = (9..=11).all(|n| lib[n].is_zero());
    let periodic = (0..=40).all(|n| lib[n + 12] == lib[n]);
    Outcome::new(
        zeros && periodic,
        format!("d_9..d_11 zero: {}, d_(n+12) = d_n for n <= 40: {}", zeros, periodic),
    )
}

fn criterion_3() -> Outcome {
    for n in 1..=16 {
        let b = SkewSymmetrizableMatrix::from_i64(&b_of(n)).unwrap();
        let report = recognize(&b);
        if !report.verify(&b) {
            return Outcome::new(false, format!("witness for B({}) does not replay", n));
        }
        let finite = report.verdict == Verdict::Finite;
        if finite != (n <= 8) {
            return Outcome::new(false, format!("B({}) recognized as {:?}", n, report.verdict));
        }
        if finite {
            let name = report.cartan_type.map(|t| t.to_string());
            if name.as_deref() != Some(EXPECTED_AN[n - 1].1) {
                return Outcome::new(false, format!("B({}) has type {:?}", n, name));
            }
        }
    }
    Outcome::new(true, "B(n) finite exactly for n <= 8 (checked n <= 16), types match")
}

fn criterion_4() -> Outcome {
    let samples = 600;
    let r = criteria_sweep(6, samples, 0x5eed_0004);
    Outcome::new(
        r.passed(),
        match r.failures.first() {
            None => format!("{} graphs ({} random on 7-8 vertices), all tests agree", r.checked, samples),
            Some(f) => format!("{} failures, first: {}", r.failures.len(), f),
        },
    )
}

/// Positive shapes among weighted cycles: all weights 1; a triangle
/// `2, 2, 1`; a square with weights `2, 1, 2, 1` around it.
fn positive_cycle_shape(w: &[u64]) -> bool {
    let p = w.len();
    let mut sorted = w.to_vec();
    sorted.sort();
    w.iter().all(|&x| x == 1)
        || (p == 3 && sorted == [1, 2, 2])
        || (p == 4 && sorted == [1, 1, 2, 2] && w[0] == w[2])
}

fn criterion_5() -> Outcome {
    let mut checked = 0usize;
    let mut positive = 0usize;
    for p in 3..=6usize {
        for wcode in 0..3usize.pow(p as u32) {
            let w: Vec<u64> = (0..p).map(|e| (wcode / 3usize.pow(e as u32) % 3) as u64 + 1).collect();
            let prod: u64 = w.iter().product();
            let r = (prod as f64).sqrt().round() as u64;
            if r * r != prod {
                continue;
            }
            let heavy: Vec<usize> = (0..p).filter(|&e| w[e] > 1).collect();
            for signs in 0..1u32 << p {
                // edge e joins e and e+1; its sign is -sgn(A_ij)
                let minus_count = signs.count_ones();
                let product_minus = minus_count % 2 == 1;
                let expected = positive_cycle_shape(&w) && product_minus;
                let mut realized = false;
                for dirs in 0..1u32 << heavy.len() {
                    let mut rows = vec![vec![0i64; p]; p];
                    for i in 0..p {
                        rows[i][i] = 2;
                    }
                    for e in 0..p {
                        let (i, j) = (e, (e + 1) % p);
                        let s = if signs >> e & 1 == 1 { 1 } else { -1 };
                        let (mut x, mut y) = (1i64, w[e] as i64);
                        if let Some(h) = heavy.iter().position(|&t| t == e) {
                            if dirs >> h & 1 == 1 {
                                std::mem::swap(&mut x, &mut y);
                            }
                        }
                        rows[i][j] = s * x;
                        rows[j][i] = s * y;
                    }
                    let Ok(a) = QuasiCartanMatrix::from_i64(&rows) else {
                        continue;
                    };
                    realized = true;
                    checked += 1;
                    let pos = is_positive(&a);
                    if pos {
                        positive += 1;
                    }
                    if pos != expected {
                        return Outcome::new(
                            false,
                            format!("weights {:?} signs {:b}: positive {}, expected {}", w, signs, pos, expected),
                        );
                    }
                }
                if !realized {
                    return Outcome::new(false, format!("weights {:?} admit no quasi-Cartan matrix", w));
                }
            }
        }
    }
    Outcome::new(true, format!("{} signed cycle matrices, {} positive, all as predicted", checked, positive))
}

fn criterion_6() -> Outcome {
    let mut checked = 0usize;
    let mut dynkin = 0usize;
    for n in 1..=8 {
        for tree in unlabeled_trees(n) {
            let m = tree.len();
            for wcode in 0..3usize.pow(m as u32) {
                let weighted: Vec<(usize, usize, u64)> = tree
                    .iter()
                    .enumerate()
                    .map(|(e, &(u, v))| (u, v, (wcode / 3usize.pow(e as u32) % 3) as u64 + 1))
                    .collect();
                let expected = is_dynkin_tree(n, &weighted);
                let mut rows = vec![vec![0i64; n]; n];
                for i in 0..n {
                    rows[i][i] = 2;
                }
                for &(u, v, w) in &weighted {
                    rows[u][v] = -1;
                    rows[v][u] = -(w as i64);
                }
                let mut a = QuasiCartanMatrix::from_i64(&rows).unwrap();
                // flipping vertices 1..n in Gray-code order visits every sign
                // pattern on the tree's edges exactly once
                for step in 0u32..1 << (n - 1) {
                    if step > 0 {
                        a = a.flip_vertex(step.trailing_zeros() as usize + 1);
                    }
                    checked += 1;
                    if is_positive(&a) != expected {
                        return Outcome::new(false, format!("tree {:?} positivity differs from Dynkin test", weighted));
                    }
                }
                if expected {
                    dynkin += 1;
                }
            }
        }
    }
    Outcome::new(
        true,
        format!("{} signed weighted trees, {} Dynkin weightings, positivity sign-independent", checked, dynkin),
    )
}

fn criterion_7() -> Outcome {
    let r = oracle_sweep(4, &Caps::with_max_visited(DEFAULT_MAX_VISITED));
    Outcome::new(
        r.check.passed(),
        match r.check.failures.first() {
            None => format!(
                "{} matrices: {} finite, {} not finite, {} unknown; {} class walks",
                r.check.checked, r.finite, r.not_finite, r.unknown, r.explorations
            ),
            Some(f) => format!("{} failures, first: {}", r.check.failures.len(), f),
        },
    )
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut finite = 0;
    for case in 0..10_000 {
        let n = rng.gen_range(1..=6);
        let b = random_skew(&mut rng, n);
        let k = rng.gen_range(0..b.n());
        let mb = b.mutate(k).unwrap();
        if mb.mutate(k).unwrap() != b {
            return Outcome::new(false, format!("case {}: mutation is not an involution", case));
        }
        if Diagram::of_skew(&mb) != Diagram::of_skew(&b).mutate(k).unwrap() {
            return Outcome::new(false, format!("case {}: diagram mutation disagrees", case));
        }
        let (r1, r2) = (recognize(&b), recognize(&mb));
        if r1.verdict != r2.verdict {
            return Outcome::new(false, format!("case {}: verdict changed under mutation {}", case, k));
        }
        if r1.verdict == Verdict::Finite {
            finite += 1;
            let (t1, t2) = (class_type(&b).ok(), class_type(&mb).ok());
            if t1.is_none() || t1 != t2 {
                return Outcome::new(false, format!("case {}: type {:?} became {:?}", case, t1, t2));
            }
        }
    }
    Outcome::new(true, format!("10000 pairs ({} finite), verdict and type stable", finite))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let (mut done, mut positive, mut attempts) = (0usize, 0usize, 0usize);
    while done < 1000 {
        attempts += 1;
        if attempts > 200_000 {
            return Outcome::new(false, format!("only {} k-compatible triples found", done));
        }
        let n = rng.gen_range(2..=6);
        let b = random_skew(&mut rng, n);
        let n = b.n();
        let report = recognize(&b);
        let mut a = match (&report.witness, rng.gen_bool(0.7)) {
            (Witness::OrientedCyclesAndPositiveCompanion { certificate }, true) => certificate.companion.clone(),
            _ => {
                let g = Diagram::of_skew(&b).graph();
                let signs: Vec<Sign> = (0..g.edge_count()).map(|_| Sign::from_bit(rng.gen_bool(0.5))).collect();
                let s = SignAssignment::new(g.edges().to_vec(), signs).unwrap();
                companion_from_signs(&b, &s).unwrap().companion
            }
        };
        for v in 0..n {
            if rng.gen_bool(0.3) {
                a = a.flip_vertex(v);
            }
        }
        let k = rng.gen_range(0..n);
        if !is_k_compatible(&a, &b, k).unwrap() {
            continue;
        }
        done += 1;
        let (a2, jf) = companion_mutate(&a, &b, k).unwrap();
        if companion_mutate_entrywise(&a, &b, k).unwrap() != *a2.matrix() {
            return Outcome::new(false, format!("closed form differs from product, k = {}", k));
        }
        if rational_det(&big_rows(&jf)).abs() != BigInt::one() {
            return Outcome::new(false, "det(J - F) is not +-1");
        }
        let d = a.symmetrizer().as_matrix();
        let c = d.mul(a.matrix()).unwrap();
        let c2 = d.mul(a2.matrix()).unwrap();
        if jf.transpose().mul(&c).unwrap().mul(&jf).unwrap() != c2 {
            return Outcome::new(false, "C' differs from (J - F)^T C (J - F)");
        }
        if is_positive(&a) {
            positive += 1;
            if !is_positive(&a2) {
                return Outcome::new(false, "positivity lost under companion mutation");
            }
        }
    }
    Outcome::new(
        true,
        format!("1000 triples ({} positive) from {} draws: all four checks hold", positive, attempts),
    )
}

fn criterion_10() -> Outcome {
    let mut cases: Vec<(Family, usize, usize, usize, usize)> = Vec::new();
    for r in 1..=8 {
        cases.push((Family::A, r, r * (r + 1), r * (r + 1), 0));
    }
    for r in 2..=8 {
        cases.push((Family::B, r, 2 * r * r, 2 * r * (r - 1), 2 * r));
    }
    for r in 3..=8 {
        cases.push((Family::C, r, 2 * r * r, 2 * r, 2 * r * (r - 1)));
    }
    for r in 4..=8 {
        cases.push((Family::D, r, 2 * r * (r - 1), 2 * r * (r - 1), 0));
    }
    cases.extend([
        (Family::E, 6, 72, 72, 0),
        (Family::E, 7, 126, 126, 0),
        (Family::E, 8, 240, 240, 0),
        (Family::F, 4, 48, 24, 24),
        (Family::G, 2, 12, 6, 6),
    ]);
    for &(f, r, total, long, short) in &cases {
        let a = cartan_matrix(f, r).unwrap();
        let Some(roots) = enumerate_roots(&a, default_root_cap(r)).roots().map(|x| x.to_vec()) else {
            return Outcome::new(false, format!("{}{}: orbit exceeded the cap", f, r));
        };
        let c = a.symmetrized();
        let norms: Vec<BigInt> = roots.iter().map(|x| x.pair(&c, x)).collect();
        let max = norms.iter().max().unwrap();
        let n_long = norms.iter().filter(|x| *x == max).count();
        let n_short = roots.len() - n_long;
        if (roots.len(), n_long, n_short) != (total, long, short) {
            return Outcome::new(
                false,
                format!("{}{}: {} roots ({} long, {} short)", f, r, roots.len(), n_long, n_short),
            );
        }
    }
    Outcome::new(true, format!("{} textbook types match the root-count fixtures", cases.len()))
}

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0011);
    let mut graphs: Vec<SimpleGraph> = Vec::new();
    while graphs.len() < 200 {
        let n = rng.gen_range(4..=9);
        let density = rng.gen_range(0.1..0.5);
        let g = random_connected_graph(&mut rng, n, density, 16);
        if g.edge_count() >= n && is_cyclically_orientable_count(&g) {
            graphs.push(g);
        }
    }
    let mut total_valid = 0usize;
    for g in &graphs {
        let edges = g.edges().to_vec();
        let m = edges.len();
        let cycle_masks: Vec<u32> = g
            .chordless_cycles()
            .iter()
            .map(|c| c.edges().fold(0u32, |acc, (u, v)| acc | 1 << g.edge_index(u, v).unwrap()))
            .collect();
        let reference = assign_signs(g).unwrap();
        let to_assignment = |bits: u32| {
            let signs = (0..m).map(|e| Sign::from_bit(bits >> e & 1 == 1)).collect();
            SignAssignment::new(edges.clone(), signs).unwrap()
        };
        let mut valid = 0usize;
        for bits in 0..1u32 << m {
            if cycle_masks.iter().all(|&z| (z & bits).count_ones() % 2 == 1) {
                valid += 1;
                if !differ_by_vertex_flips(g, &reference, &to_assignment(bits)).unwrap() {
                    return Outcome::new(false, format!("valid signs not flip-equivalent on {:?}", edges));
                }
            }
        }
        // the flips of a connected graph reach 2^(|V| - 1) assignments
        if valid != 1 << (g.n() - 1) {
            return Outcome::new(false, format!("{} valid assignments on {:?}", valid, edges));
        }
        total_valid += valid;
    }
    Outcome::new(true, format!("200 graphs, {} valid assignments, each a flip of the computed one", total_valid))
}

fn main() {
    let secs = Duration::from_secs;
    let criteria: Vec<(u32, &str, Option<Duration>, fn() -> Outcome)> = vec![
        (1, "determinants and types of A(n)", Some(secs(1)), criterion_1),
        (2, "determinant sequence", Some(secs(1)), criterion_2),
        (3, "finite-type frontier of B(n)", Some(secs(5)), criterion_3),
        (4, "orientability criteria agree", Some(secs(300)), criterion_4),
        (5, "positive signed cycles", Some(secs(60)), criterion_5),
        (6, "positive signed trees", Some(secs(60)), criterion_6),
        (7, "recognizer agrees with explorer", Some(secs(600)), criterion_7),
        (8, "mutation invariance", None, criterion_8),
        (9, "companion mutation", None, criterion_9),
        (10, "root-count fixtures", Some(secs(30)), criterion_10),
        (11, "sign-assignment uniqueness", None, criterion_11),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = budget.map_or(true, |b| took <= b);
        let ok = out.ok && in_time;
        if !ok {
            failed += 1;
        }
        let budget_note = match budget {
            Some(b) if !in_time => format!("{:.2?}, over the {:?} budget", took, b),
            Some(b) => format!("{:.2?} of {:?}", took, b),
            None => format!("{:.2?}", took),
        };
        println!(
            "criterion {:>2} {}: {} [{}] {}",
            id,
            if ok { "PASS" } else { "FAIL" },
            name,
            budget_note,
            out.detail
        );
    }
    if failed > 0 {
        println!("{} criteria failed", failed);
        std::process::exit(1);
    }
}
