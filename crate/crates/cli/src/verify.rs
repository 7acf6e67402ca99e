//! The `verify` command: known parameters of the built-in families, plus the
//! structural identities checked on desk-scale instances.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use hypercode::codes::{
    graph_self_duality_criterion, min_distance_via_eonv, structural_self_orthogonality,
    DEFAULT_ENUM_CAP,
};
use hypercode::gf2poly::{block_circulant_bound, circulant_matrix, cyclic_code_dimension};
use hypercode::hypergraph::{
    block_row, circulant_hypergraph, complete_3partite, f_count, fano_circulant,
    projective_geometry,
};
use hypercode::{BitMatrix, BitVector, GF2Poly, Hypergraph, LinearCode, SearchLimits, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Reference data the checks compare against. Replaceable for fault injection.
#[derive(Clone, Debug)]
pub struct Fixtures {
    /// Cyclic Fano plane incidence matrix.
    pub fano: BitMatrix,
    /// Parts-of-size-2 tripartite incidence matrix
    /// (rows x1 x2 y1 y2 z1 z2, its own column order).
    pub tripartite_2: BitMatrix,
}

impl Default for Fixtures {
    fn default() -> Self {
        Self {
            fano: BitMatrix::from_strs(&[
                "1000101", "1100010", "0110001", "1011000", "0101100", "0010110", "0001011",
            ])
            .expect("valid fixture"),
            tripartite_2: BitMatrix::from_strs(&[
                "11110000", "00001111", "10011001", "01100110", "11001100", "00110011",
            ])
            .expect("valid fixture"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub tag: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub observed: String,
    pub expected: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Check {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:<15} {}: observed {}; expected {} ({:.2}s of {}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.tag,
            self.title,
            self.observed,
            self.expected,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        )
    }
}

type Outcome = (bool, String, String);

struct Criterion {
    tag: &'static str,
    title: &'static str,
    budget_secs: u64,
    run: fn(&Fixtures) -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        tag: "fano",
        title: "Fano plane gives [7,4,3] with weights {0:1,3:7,4:7,7:1}",
        budget_secs: 1,
        run: check_fano,
    },
    Criterion {
        tag: "k3partite",
        title: "complete 3-partite codes [8,4,4] [27,7,9] [64,10,16], d = n^2 for n <= 5",
        budget_secs: 5,
        run: check_tripartite,
    },
    Criterion {
        tag: "f-formula",
        title: "least positive f(k1,k2,k3) equals n^2 for n <= 50",
        budget_secs: 5,
        run: check_f_formula,
    },
    Criterion {
        tag: "pg",
        title: "PG(2,2) has d = 3, PG(3,2) has d >= 7",
        budget_secs: 30,
        run: check_projective,
    },
    Criterion {
        tag: "engines",
        title: "eonv minimum equals codeword minimum",
        budget_secs: 60,
        run: check_engines,
    },
    Criterion {
        tag: "block-circulant",
        title: "block-circulant codes: d >= k (m = 1) or 2k, eonv sizes {0,k,2k} for m = 1",
        budget_secs: 60,
        run: check_block_circulant,
    },
    Criterion {
        tag: "cyclic-dim",
        title: "cyclic dimension n - deg gcd(p, x^n - 1) equals circulant rank",
        budget_secs: 10,
        run: check_cyclic_dimension,
    },
    Criterion {
        tag: "self-duality",
        title: "structural self-orthogonality and graph self-duality criteria",
        budget_secs: 60,
        run: check_self_duality,
    },
    Criterion {
        tag: "eonv-props",
        title: "row sums have support eonv(S); edge/complement parity split",
        budget_secs: 10,
        run: check_eonv_properties,
    },
];

pub fn tags() -> Vec<&'static str> {
    CRITERIA.iter().map(|c| c.tag).collect()
}

/// Runs every criterion whose tag matches `only` (all when `None`).
pub fn run(fixtures: &Fixtures, only: Option<&str>) -> Vec<Check> {
    CRITERIA
        .iter()
        .filter(|c| only.is_none_or(|t| t == c.tag))
        .map(|c| {
            let start = Instant::now();
            let (ok, observed, expected) = (c.run)(fixtures);
            let elapsed = start.elapsed();
            let budget = Duration::from_secs(c.budget_secs);
            Check {
                tag: c.tag,
                title: c.title,
                passed: ok && elapsed < budget,
                observed,
                expected,
                elapsed,
                budget,
            }
        })
        .collect()
}

fn params(code: &LinearCode) -> String {
    match code.min_distance() {
        Ok(d) => format!("[{},{},{}]", code.length(), code.dimension(), d.distance),
        Err(_) => format!("[{},{},-]", code.length(), code.dimension()),
    }
}

fn sorted_columns(m: &BitMatrix) -> Vec<String> {
    let mut cols: Vec<String> = (0..m.num_cols()).map(|j| m.column(j).to_string()).collect();
    cols.sort();
    cols
}

fn check_fano(fx: &Fixtures) -> Outcome {
    let h = fano_circulant();
    let generated = h.incidence_matrix();
    let same_matrix = generated == fx.fano;
    let code = match LinearCode::from_generator(fx.fano.clone()) {
        Ok(c) => c,
        Err(e) => return (false, e.to_string(), "[7,4,3]".into()),
    };
    let eonv = Hypergraph::from_incidence(&fx.fano)
        .ok()
        .and_then(|hf| hf.eonv_min().ok())
        .map(|b| b.size);
    let weights = code.weight_distribution(DEFAULT_ENUM_CAP).unwrap_or_default();
    let expected_weights = BTreeMap::from([(0, 1), (3, 7), (4, 7), (7, 1)]);
    let p = params(&code);
    let ok = same_matrix && p == "[7,4,3]" && eonv == Some(3) && weights == expected_weights;
    (
        ok,
        format!(
            "{p}, eonv min {eonv:?}, weights {weights:?}, fixture matches generator: {same_matrix}"
        ),
        format!("[7,4,3], eonv min Some(3), weights {expected_weights:?}"),
    )
}

fn check_tripartite(fx: &Fixtures) -> Outcome {
    let mut observed = Vec::new();
    let mut ok = true;
    let two = complete_3partite(2).expect("n >= 1").incidence_matrix();
    let matrix_ok = sorted_columns(&two) == sorted_columns(&fx.tripartite_2);
    ok &= matrix_ok;
    for (n, expected) in [(2, "[8,4,4]"), (3, "[27,7,9]"), (4, "[64,10,16]")] {
        let code = LinearCode::from_hypergraph(&complete_3partite(n).expect("n >= 1")).expect("nonempty");
        let p = params(&code);
        ok &= p == expected;
        observed.push(p);
    }
    let mut distances = Vec::new();
    for n in 1..=5usize {
        let h = complete_3partite(n).expect("n >= 1");
        let c = LinearCode::from_hypergraph(&h)
            .and_then(|c| c.min_distance())
            .map(|d| d.distance);
        let e = min_distance_via_eonv(&h, &SearchLimits::default()).map(|b| b.size);
        ok &= c == Ok(n * n) && e == Ok(n * n);
        distances.push(format!("{}/{}", c.map_or(0, |x| x), e.map_or(0, |x| x)));
    }
    (
        ok,
        format!(
            "{}, d (codeword/eonv) {}, reference 6x8 matrix matches: {matrix_ok}",
            observed.join(" "),
            distances.join(" ")
        ),
        "[8,4,4] [27,7,9] [64,10,16], d 1 4 9 16 25".into(),
    )
}

fn check_f_formula(_: &Fixtures) -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=50u64 {
        let ni = n as i64;
        let zero_set = [(0, 0, 0), (ni, ni, 0), (ni, 0, ni), (0, ni, ni)];
        let mut least = u64::MAX;
        let mut zeros = Vec::new();
        for a in 0..=ni {
            for b in 0..=ni {
                for c in 0..=ni {
                    let f = f_count(n, a, b, c).expect("in range");
                    if f == 0 {
                        zeros.push((a, b, c));
                    } else if !zero_set.contains(&(a, b, c)) {
                        least = least.min(f);
                    }
                }
            }
        }
        zeros.sort_unstable();
        let mut expected_zeros = zero_set.to_vec();
        expected_zeros.sort_unstable();
        if least != n * n || zeros != expected_zeros {
            bad.push(n);
        }
    }
    (
        bad.is_empty(),
        if bad.is_empty() {
            "minimum n^2 and zero set {(0,0,0),(n,n,0),(n,0,n),(0,n,n)} for all n".into()
        } else {
            format!("mismatch at n = {bad:?}")
        },
        "minimum n^2 for n = 1..50".into(),
    )
}

fn check_projective(_: &Fixtures) -> Outcome {
    let fano = LinearCode::from_hypergraph(&projective_geometry(3).expect("n = 3")).expect("nonempty");
    let pg3 = projective_geometry(4).expect("n = 4");
    let code = LinearCode::from_hypergraph(&pg3).expect("nonempty");
    let d3 = fano.min_distance().map(|d| d.distance);
    let d4 = code.min_distance().map(|d| d.distance);
    let e4 = pg3.eonv_min().map(|b| b.size);
    let ok = d3 == Ok(3) && d4.is_ok() && d4 == e4 && d4.as_ref().is_ok_and(|&d| d >= 7);
    (
        ok,
        format!(
            "PG(2,2) d = {}, PG(3,2) {} (eonv min {})",
            d3.map_or("error".into(), |d| d.to_string()),
            params(&code),
            e4.map_or("error".into(), |d| d.to_string())
        ),
        "PG(2,2) d = 3, PG(3,2) d >= min{7, 12} = 7".into(),
    )
}

fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Hypergraph {
    let edges = (0..m)
        .map(|_| loop {
            let e: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            if !e.is_empty() {
                break e;
            }
        })
        .collect();
    Hypergraph::new(n, edges).expect("valid edges")
}

fn engines_agree(h: &Hypergraph) -> bool {
    let c = LinearCode::from_hypergraph(h)
        .and_then(|c| c.min_distance())
        .map(|d| d.distance);
    let e = h.eonv_min().map(|b| b.size);
    c.is_ok() && c == e
}

fn check_engines(_: &Fixtures) -> Outcome {
    let mut checked = 0usize;
    let mut disagreements = 0usize;
    // every simple hypergraph on up to 4 vertices
    for n in 1..=4usize {
        let all_edges: Vec<Vec<usize>> = (1u32..1 << n)
            .map(|e| (0..n).filter(|v| (e >> v) & 1 == 1).collect())
            .collect();
        for family in 1u64..1 << all_edges.len() {
            let edges = all_edges
                .iter()
                .enumerate()
                .filter(|(i, _)| (family >> i) & 1 == 1)
                .map(|(_, e)| e.clone())
                .collect();
            let h = Hypergraph::new(n, edges).expect("valid edges");
            checked += 1;
            disagreements += usize::from(!engines_agree(&h));
        }
    }
    // sampled simple hypergraphs on 5 and 6 vertices
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for n in 5..=6usize {
        let all_edges: Vec<Vec<usize>> = (1u32..1 << n)
            .map(|e| (0..n).filter(|v| (e >> v) & 1 == 1).collect())
            .collect();
        for _ in 0..2000 {
            let edges: Vec<Vec<usize>> = all_edges
                .iter()
                .filter(|_| rng.gen_bool(0.15))
                .cloned()
                .collect();
            if edges.is_empty() {
                continue;
            }
            let h = Hypergraph::new(n, edges).expect("valid edges");
            checked += 1;
            disagreements += usize::from(!engines_agree(&h));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0500);
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        let m = rng.gen_range(1..=18);
        let h = random_hypergraph(&mut rng, n, m);
        checked += 1;
        disagreements += usize::from(!engines_agree(&h));
    }
    (
        disagreements == 0,
        format!("{disagreements} disagreements over {checked} hypergraphs"),
        "0 disagreements".into(),
    )
}

fn eonv_sizes_in(h: &Hypergraph, allowed: &[usize]) -> bool {
    let n = h.num_vertices();
    let masks: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |acc, &v| acc | 1 << v))
        .collect();
    (1u64..1 << n).all(|s| {
        let size = masks.iter().filter(|&&e| (e & s).count_ones() % 2 == 1).count();
        allowed.contains(&size)
    })
}

fn check_block_circulant(_: &Fixtures) -> Outcome {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for k in 1..=9usize {
        for m in 1..=9usize {
            if 2 * k * m > 18 {
                continue;
            }
            let h = circulant_hypergraph(&block_row(k, m).expect("k, m >= 1")).expect("nonzero row");
            let d = h.eonv_min().map(|b| b.size).unwrap_or(0);
            let bound = block_circulant_bound(k, m).expect("k, m >= 1");
            summary.push(format!("({k},{m}):{d}"));
            if d < bound || (m == 1 && d != k) {
                failures.push(format!("(k={k}, m={m}) d={d}"));
            }
        }
    }
    for k in 1..=8usize {
        let h = circulant_hypergraph(&block_row(k, 1).expect("k >= 1")).expect("nonzero row");
        if !eonv_sizes_in(&h, &[0, k, 2 * k]) {
            failures.push(format!("eonv sizes outside {{0,{k},{}}} for k={k}", 2 * k));
        }
    }
    (
        failures.is_empty(),
        if failures.is_empty() {
            format!("exact d per (k,m): {}", summary.join(" "))
        } else {
            failures.join("; ")
        },
        "d >= bound everywhere, d = k and sizes in {0,k,2k} for m = 1".into(),
    )
}

fn check_cyclic_dimension(_: &Fixtures) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0200);
    let mut disagreements = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=64usize);
        let p = loop {
            let bits: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
            let p = GF2Poly::from_coefficients(&BitVector::from_bools(&bits));
            if !p.is_zero() {
                break p;
            }
        };
        let dim = cyclic_code_dimension(&p, n).ok();
        let rank = circulant_matrix(&p, n).map(|m| m.rank()).ok();
        if dim.is_none() || dim != rank {
            disagreements += 1;
        }
    }
    let fano: GF2Poly = "1000101".parse().expect("valid coefficients");
    let fano_dim = cyclic_code_dimension(&fano, 7).ok();
    (
        disagreements == 0 && fano_dim == Some(4),
        format!("{disagreements} disagreements over 200 (p, n); 1000101 at n = 7 -> {fano_dim:?}"),
        "0 disagreements; 1000101 at n = 7 -> Some(4)".into(),
    )
}

/// Calls `visit` on every multiset of `m` edges over the vertex pairs of `0..n`.
fn for_each_multigraph(n: usize, m: usize, visit: &mut dyn FnMut(Hypergraph)) {
    let pairs: Vec<Vec<usize>> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| vec![a, b]))
        .collect();
    let mut counts = vec![0usize; pairs.len()];
    fn rec(
        pairs: &[Vec<usize>],
        n: usize,
        left: usize,
        idx: usize,
        counts: &mut [usize],
        visit: &mut dyn FnMut(Hypergraph),
    ) {
        if idx == pairs.len() {
            if left == 0 {
                let edges = counts
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &c)| std::iter::repeat_n(pairs[i].clone(), c))
                    .collect();
                visit(Hypergraph::new(n, edges).expect("valid edges"));
            }
            return;
        }
        for c in 0..=left {
            counts[idx] = c;
            rec(pairs, n, left - c, idx + 1, counts, visit);
        }
        counts[idx] = 0;
    }
    rec(&pairs, n, m, 0, &mut counts, visit);
}

fn check_self_duality(_: &Fixtures) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1000);
    let mut gram_disagreements = 0;
    for i in 0..1000 {
        let n = rng.gen_range(1..=10);
        let m = rng.gen_range(1..=16);
        let mut h = random_hypergraph(&mut rng, n, m);
        if i % 2 == 0 {
            let doubled = h.edges().iter().flat_map(|e| [e.clone(), e.clone()]).collect();
            h = Hypergraph::new(n, doubled).expect("valid edges");
        }
        if structural_self_orthogonality(&h) != h.incidence_matrix().gram().is_zero() {
            gram_disagreements += 1;
        }
    }

    let mut graphs = 0usize;
    let mut self_dual = 0usize;
    let mut criterion_disagreements = 0usize;
    for n in 2..=5usize {
        for m in 1..=10usize {
            for_each_multigraph(n, m, &mut |g| {
                if !g.is_connected() {
                    return;
                }
                graphs += 1;
                let basis = LinearCode::from_hypergraph(&g).expect("nonempty").basis().clone();
                let direct = basis
                    .row_space_equal(&basis.nullspace_basis())
                    .expect("same length");
                let criterion = graph_self_duality_criterion(&g).expect("connected graph");
                self_dual += usize::from(direct);
                criterion_disagreements += usize::from(direct != criterion);
            });
        }
    }
    (
        gram_disagreements == 0 && criterion_disagreements == 0,
        format!(
            "{gram_disagreements} structural/gram disagreements over 1000 hypergraphs; \
             {criterion_disagreements} criterion disagreements over {graphs} connected multigraphs \
             ({self_dual} self-dual)"
        ),
        "0 and 0 disagreements".into(),
    )
}

fn check_eonv_properties(_: &Fixtures) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut support_failures = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        let m = rng.gen_range(1..=20);
        let h = random_hypergraph(&mut rng, n, m);
        let s = rng.gen_range(1u64..1 << n);
        let set: VertexSet = (0..n).filter(|v| (s >> v) & 1 == 1).collect();
        let support: Vec<usize> = h
            .incidence_matrix()
            .row_combination(set.as_slice())
            .expect("valid rows")
            .support()
            .collect();
        if h.eonv(&set).ok() != Some(support) {
            support_failures += 1;
        }
    }

    // |S| = |S ∩ e| + |S ∩ ē| and the parity split, every S and edge
    let mut corpus: Vec<Hypergraph> = (1..=8usize)
        .map(|n| random_hypergraph(&mut rng, n, 6))
        .collect();
    for k in 1..=4usize {
        for m in 1..=4usize {
            if 2 * k * m <= 16 {
                corpus.push(circulant_hypergraph(&block_row(k, m).expect("k, m >= 1")).expect("nonzero row"));
            }
        }
    }
    let mut parity_failures = 0;
    for h in &corpus {
        let n = h.num_vertices();
        let full = (1u64 << n) - 1;
        let masks: Vec<u64> = h
            .edges()
            .iter()
            .map(|e| e.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect();
        for s in 1u64..=full {
            let size = s.count_ones();
            for &e in &masks {
                let inside = (s & e).count_ones();
                let outside = (s & !e & full).count_ones();
                let split_ok = size == inside + outside;
                let parity_ok = if size % 2 == 0 {
                    inside % 2 == outside % 2
                } else {
                    inside % 2 != outside % 2
                };
                parity_failures += usize::from(!(split_ok && parity_ok));
            }
        }
    }
    (
        support_failures == 0 && parity_failures == 0,
        format!(
            "{support_failures} support mismatches over 200 (H, S); {parity_failures} parity failures over {} hypergraphs",
            corpus.len()
        ),
        "0 and 0".into(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_fano_fixture_fails_fano_only() {
        let mut fx = Fixtures::default();
        let bit = fx.fano.get(2, 5);
        fx.fano.set(2, 5, !bit);
        let checks = run(&fx, Some("fano"));
        assert_eq!(checks.len(), 1);
        assert!(!checks[0].passed);
        assert_eq!(checks[0].tag, "fano");
        assert!(checks[0].line().starts_with("[FAIL] fano"));
    }

    #[test]
    fn filter_selects_by_tag() {
        let checks = run(&Fixtures::default(), Some("f-formula"));
        assert_eq!(checks.len(), 1);
        assert!(checks[0].passed, "{}", checks[0].line());
        assert!(run(&Fixtures::default(), Some("nope")).is_empty());
    }

    #[test]
    fn tags_are_unique() {
        let mut t = tags();
        t.sort_unstable();
        t.dedup();
        assert_eq!(t.len(), CRITERIA.len());
    }

    #[test]
    fn multigraph_enumeration_counts() {
        // multisets of size m from 3 pairs: C(m + 2, 2)
        for m in 0..5 {
            let mut count = 0;
            for_each_multigraph(3, m, &mut |_| count += 1);
            assert_eq!(count, (m + 2) * (m + 1) / 2);
        }
    }
}
