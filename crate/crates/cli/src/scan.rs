//! The `selfdual-scan` command: seeded sampling of connected uniform
//! hypergraphs whose incidence codes are self-orthogonal or self-dual.

use hypercode::codes::{graph_self_duality_criterion, structural_self_orthogonality};
use hypercode::{Hypergraph, LinearCode};
use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Clone, Copy, Debug)]
pub struct ScanConfig {
    pub n_max: usize,
    pub budget: usize,
    pub seed: u64,
    pub uniformity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub sample: usize,
    pub hypergraph: Hypergraph,
    pub rank: usize,
    pub self_orthogonal: bool,
    pub self_dual: bool,
    pub structural: bool,
    /// Graph criterion value, 2-uniform samples only.
    pub graph_criterion: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub samples: usize,
    pub self_orthogonal: usize,
    pub self_dual: usize,
    pub structural_disagreements: usize,
    pub criterion_disagreements: usize,
}

pub fn validate(cfg: &ScanConfig) -> Result<(), String> {
    if cfg.n_max < 2 {
        return Err(format!("--n-max must be at least 2, got {}", cfg.n_max));
    }
    if cfg.uniformity < 2 || cfg.uniformity > cfg.n_max {
        return Err(format!(
            "--uniformity must lie in 2..={}, got {}",
            cfg.n_max, cfg.uniformity
        ));
    }
    Ok(())
}

/// A connected `r`-uniform hypergraph on `n` vertices. Each vertex after the
/// first joins through an edge that also touches an earlier vertex; a few
/// extra edges follow, and half of all samples have every edge doubled.
fn sample(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Hypergraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let random_edge = |rng: &mut ChaCha8Rng, forced: &[usize]| {
        let mut e = forced.to_vec();
        while e.len() < r {
            let v = rng.gen_range(0..n);
            if !e.contains(&v) {
                e.push(v);
            }
        }
        e
    };
    let mut edges = Vec::new();
    let mut seen = vec![false; n];
    seen[order[0]] = true;
    // order[..covered] are all reached by earlier edges
    let mut covered = 1;
    while covered < n {
        let anchor = order[rng.gen_range(0..covered)];
        let e = random_edge(rng, &[anchor, order[covered]]);
        for &v in &e {
            seen[v] = true;
        }
        while covered < n && seen[order[covered]] {
            covered += 1;
        }
        edges.push(e);
    }
    for _ in 0..rng.gen_range(0..=n) {
        let picked = index::sample(rng, n, r).into_vec();
        edges.push(picked);
    }
    if rng.gen_bool(0.5) {
        edges = edges.into_iter().flat_map(|e| [e.clone(), e]).collect();
    }
    Hypergraph::new(n, edges).expect("sampled edges are valid")
}

fn examine(sample_no: usize, h: Hypergraph) -> Finding {
    let code = LinearCode::from_hypergraph(&h).expect("sample has edges");
    let graph_criterion = (h.uniformity() == Some(2))
        .then(|| graph_self_duality_criterion(&h).expect("connected graph"));
    Finding {
        sample: sample_no,
        rank: code.dimension(),
        self_orthogonal: code.is_self_orthogonal(),
        self_dual: code.is_self_dual(),
        structural: structural_self_orthogonality(&h),
        graph_criterion,
        hypergraph: h,
    }
}

/// Draws `budget` samples sequentially from the seed, examines them on the
/// rayon pool, and keeps the self-orthogonal ones in sample order.
pub fn scan(cfg: &ScanConfig) -> (Vec<Finding>, ScanSummary) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let r = cfg.uniformity;
    let samples: Vec<Hypergraph> = (0..cfg.budget)
        .map(|_| {
            let n = rng.gen_range(r.max(2)..=cfg.n_max);
            sample(&mut rng, n, r)
        })
        .collect();
    let examined: Vec<Finding> = samples
        .into_par_iter()
        .enumerate()
        .map(|(i, h)| examine(i, h))
        .collect();

    let mut summary = ScanSummary {
        samples: examined.len(),
        ..ScanSummary::default()
    };
    for f in &examined {
        summary.self_orthogonal += usize::from(f.self_orthogonal);
        summary.self_dual += usize::from(f.self_dual);
        summary.structural_disagreements += usize::from(f.structural != f.self_orthogonal);
        summary.criterion_disagreements +=
            usize::from(f.graph_criterion.is_some_and(|g| g != f.self_dual));
    }
    let findings = examined.into_iter().filter(|f| f.self_orthogonal).collect();
    (findings, summary)
}

fn edge_list(h: &Hypergraph) -> String {
    h.edges()
        .iter()
        .map(|e| {
            e.iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("|")
}

fn opt(b: Option<bool>) -> String {
    b.map_or_else(|| "-".to_string(), |b| b.to_string())
}

pub const CSV_HEADER: &str =
    "sample,n,m,rank,self_orthogonal,self_dual,structural,graph_criterion,edges";

impl Finding {
    pub fn line(&self) -> String {
        format!(
            "sample={} n={} m={} rank={} self_orthogonal={} self_dual={} structural={} graph_criterion={} edges={}",
            self.sample,
            self.hypergraph.num_vertices(),
            self.hypergraph.num_edges(),
            self.rank,
            self.self_orthogonal,
            self.self_dual,
            self.structural,
            opt(self.graph_criterion),
            edge_list(&self.hypergraph)
        )
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.sample,
            self.hypergraph.num_vertices(),
            self.hypergraph.num_edges(),
            self.rank,
            self.self_orthogonal,
            self.self_dual,
            self.structural,
            opt(self.graph_criterion),
            edge_list(&self.hypergraph)
        )
    }
}

impl ScanSummary {
    pub fn line(&self) -> String {
        format!(
            "# samples={} self_orthogonal={} self_dual={} structural_disagreements={} criterion_disagreements={}",
            self.samples,
            self.self_orthogonal,
            self.self_dual,
            self.structural_disagreements,
            self.criterion_disagreements
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n_max: usize, budget: usize, seed: u64, uniformity: usize) -> ScanConfig {
        ScanConfig {
            n_max,
            budget,
            seed,
            uniformity,
        }
    }

    #[test]
    fn samples_are_connected_and_uniform() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..300 {
            let r = rng.gen_range(2..=4);
            let n = rng.gen_range(r..=9);
            let h = sample(&mut rng, n, r);
            assert!(h.is_connected(), "{h:?}");
            assert!(h.is_uniform(r));
        }
    }

    #[test]
    fn graph_findings_obey_the_criterion() {
        let (findings, summary) = scan(&cfg(5, 400, 17, 2));
        assert_eq!(summary.samples, 400);
        assert_eq!(summary.criterion_disagreements, 0);
        assert_eq!(summary.structural_disagreements, 0);
        assert!(summary.self_dual > 0);
        for f in findings.iter().filter(|f| f.self_dual) {
            let n = f.hypergraph.num_vertices();
            assert_eq!(f.hypergraph.num_edges(), 2 * n - 2);
            assert_eq!(f.graph_criterion, Some(true));
        }
    }

    #[test]
    fn zero_budget_finds_nothing() {
        let (findings, summary) = scan(&cfg(6, 0, 1, 3));
        assert!(findings.is_empty());
        assert_eq!(summary, ScanSummary::default());
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(validate(&cfg(1, 5, 0, 2)).is_err());
        assert!(validate(&cfg(4, 5, 0, 5)).is_err());
        assert!(validate(&cfg(4, 5, 0, 3)).is_ok());
    }
}
