//! The `analyze` command: code parameters of a hypergraph or matrix.

use std::collections::BTreeMap;

use hypercode::codes::{min_distance_via_eonv, min_distance_via_row_subsets, preferred_engine, Engine};
use hypercode::{BitMatrix, Error, Hypergraph, LinearCode, SearchLimits};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodArg {
    Codeword,
    Eonv,
    Both,
    /// Whichever enumeration has the smaller exponent.
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Codeword,
    Eonv,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub length: usize,
    pub dimension: usize,
    pub min_distance: Option<usize>,
    pub min_distance_method: Method,
    pub min_distance_exact: bool,
    /// 1-based vertex labels.
    pub witness_subset: Option<Vec<usize>>,
    pub self_orthogonal: bool,
    pub self_dual: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_distribution: Option<BTreeMap<usize, u64>>,
}

/// Input to analyze: a matrix, and the hypergraph it came from if any.
pub struct Subject {
    pub matrix: BitMatrix,
    pub hypergraph: Option<Hypergraph>,
}

#[derive(Debug)]
pub enum AnalyzeError {
    Library(Error),
    /// The two engines returned different distances.
    Disagreement { codeword: usize, eonv: usize },
}

impl From<Error> for AnalyzeError {
    fn from(e: Error) -> Self {
        AnalyzeError::Library(e)
    }
}

pub struct AnalyzeOptions {
    pub method: MethodArg,
    pub weights: bool,
    pub limits: SearchLimits,
}

struct Found {
    distance: usize,
    exact: bool,
    witness: Option<Vec<usize>>,
}

fn run_codeword(code: &LinearCode, limits: &SearchLimits) -> Result<Found, Error> {
    let d = code.min_distance_with(limits)?;
    Ok(Found {
        distance: d.distance,
        exact: d.exact,
        witness: None,
    })
}

fn run_eonv(subject: &Subject, limits: &SearchLimits) -> Result<Found, Error> {
    let best = match &subject.hypergraph {
        Some(h) => min_distance_via_eonv(h, limits)?,
        None => min_distance_via_row_subsets(&subject.matrix, limits)?,
    };
    Ok(Found {
        distance: best.size,
        exact: best.exact,
        witness: Some(best.witness.one_based()),
    })
}

pub fn analyze(subject: &Subject, opts: &AnalyzeOptions) -> Result<AnalysisReport, AnalyzeError> {
    let code = LinearCode::from_generator(subject.matrix.clone())?;
    let method = match opts.method {
        MethodArg::Codeword => Method::Codeword,
        MethodArg::Eonv => Method::Eonv,
        MethodArg::Both => Method::Both,
        MethodArg::Auto => match preferred_engine(subject.matrix.num_rows(), code.dimension()) {
            Engine::Codeword => Method::Codeword,
            Engine::Eonv => Method::Eonv,
        },
    };

    let found = if code.dimension() == 0 {
        None
    } else {
        Some(match method {
            Method::Codeword => run_codeword(&code, &opts.limits)?,
            Method::Eonv => run_eonv(subject, &opts.limits)?,
            Method::Both => {
                let c = run_codeword(&code, &opts.limits)?;
                let e = run_eonv(subject, &opts.limits)?;
                reconcile(c, e)?
            }
        })
    };

    let weight_distribution = if opts.weights {
        Some(code.weight_distribution(opts.limits.cap)?)
    } else {
        None
    };

    Ok(AnalysisReport {
        length: code.length(),
        dimension: code.dimension(),
        min_distance: found.as_ref().map(|f| f.distance),
        min_distance_method: method,
        min_distance_exact: found.as_ref().is_some_and(|f| f.exact),
        witness_subset: found.and_then(|f| f.witness),
        self_orthogonal: code.is_self_orthogonal(),
        self_dual: code.is_self_dual(),
        weight_distribution,
    })
}

// Exact results must coincide; an early-exit bound may not undercut an exact value.
fn reconcile(c: Found, e: Found) -> Result<Found, AnalyzeError> {
    let disagree = || AnalyzeError::Disagreement {
        codeword: c.distance,
        eonv: e.distance,
    };
    match (c.exact, e.exact) {
        (true, true) if c.distance != e.distance => Err(disagree()),
        (true, false) if e.distance < c.distance => Err(disagree()),
        (false, true) if c.distance < e.distance => Err(disagree()),
        (true, _) | (false, true) => Ok(Found {
            distance: if c.exact { c.distance } else { e.distance },
            exact: true,
            witness: e.witness,
        }),
        (false, false) => Ok(Found {
            distance: c.distance.min(e.distance),
            exact: false,
            witness: e.witness,
        }),
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub const CSV_HEADER: &'static str = "length,dimension,min_distance,min_distance_method,min_distance_exact,witness_subset,self_orthogonal,self_dual,weight_distribution";

    /// One flat row; list fields use `;` separators and `weight:count` pairs.
    pub fn to_csv_row(&self) -> String {
        let method = match self.min_distance_method {
            Method::Codeword => "codeword",
            Method::Eonv => "eonv",
            Method::Both => "both",
        };
        let witness = self
            .witness_subset
            .as_ref()
            .map(|w| join(w.iter().map(ToString::to_string)))
            .unwrap_or_default();
        let weights = self
            .weight_distribution
            .as_ref()
            .map(|d| join(d.iter().map(|(w, c)| format!("{w}:{c}"))))
            .unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.length,
            self.dimension,
            self.min_distance.map(|d| d.to_string()).unwrap_or_default(),
            method,
            self.min_distance_exact,
            witness,
            self.self_orthogonal,
            self.self_dual,
            weights
        )
    }
}

fn join(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join(";")
}
