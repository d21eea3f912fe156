//! Timing rows for the `bench` command.

use crate::gen::{generate, GenError, GenKind, GenSpec};
use crate::oracle::{ham_path_oracle, OracleBudget, OracleError};
use crate::solver::{solve, SolveError};
use std::time::Instant;
use thiserror::Error;

/// The oracle only runs up to this many vertices.
pub const ORACLE_MAX_N: usize = 20;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("n={n} seed={seed}: {source}")]
    Gen { n: usize, seed: u64, source: GenError },
    #[error("n={n} seed={seed}: {source}")]
    Solve { n: usize, seed: u64, source: SolveError },
    #[error("n={n} seed={seed}: {source}")]
    Oracle { n: usize, seed: u64, source: OracleError },
    #[error("n={n} seed={seed}: oracle disagrees with the solver")]
    Disagree { n: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    /// first trace record of the certificate
    pub regime: String,
    pub solver_ms: f64,
    pub oracle_ms: Option<f64>,
}

impl BenchRow {
    pub fn csv(&self) -> String {
        let o = self.oracle_ms.map_or_else(|| "NA".to_string(), |x| format!("{x:.3}"));
        format!("{},{},{:.3},{o}", self.n, self.regime, self.solver_ms)
    }
}

pub const CSV_HEADER: &str = "n,regime,solver_ms,oracle_ms";

/// Side sizes for a target n. PROPERTY_A needs 2(|I|-2) <= |K| + 2.
pub fn sides(kind: GenKind, n: usize) -> (usize, usize) {
    let ni = match kind {
        GenKind::PropertyA => (n + 6) / 3,
        _ => n / 2,
    };
    (n - ni, ni)
}

pub fn bench_one(kind: GenKind, n: usize, seed: u64) -> Result<BenchRow, BenchError> {
    let (nk, ni) = sides(kind, n);
    let gd = generate(&GenSpec::new(kind, nk, ni, seed)).map_err(|source| BenchError::Gen { n, seed, source })?;
    let g = &gd.graph;
    let t = Instant::now();
    let c = solve(g).map_err(|source| BenchError::Solve { n, seed, source })?;
    let solver_ms = t.elapsed().as_secs_f64() * 1e3;
    let regime = c.trace.first().map_or_else(|| "-".to_string(), |r| r.claim.clone());
    let oracle_ms = if g.n() <= ORACLE_MAX_N {
        let t = Instant::now();
        let o = ham_path_oracle(g, &OracleBudget::default()).map_err(|source| BenchError::Oracle { n, seed, source })?;
        if o.is_some() != c.is_yes() {
            return Err(BenchError::Disagree { n, seed });
        }
        Some(t.elapsed().as_secs_f64() * 1e3)
    } else {
        None
    };
    Ok(BenchRow { n: g.n(), regime, solver_ms, oracle_ms })
}

pub fn bench_rows(kind: GenKind, sizes: &[usize], seeds: &[u64]) -> Result<Vec<BenchRow>, BenchError> {
    let mut rows = Vec::with_capacity(sizes.len() * seeds.len());
    for &n in sizes {
        for &seed in seeds {
            rows.push(bench_one(kind, n, seed)?);
        }
    }
    Ok(rows)
}

/// Least-squares slope of log(solver_ms) against log(n).
pub fn loglog_slope(rows: &[BenchRow]) -> f64 {
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| ((r.n as f64).ln(), r.solver_ms.max(1e-6).ln())).collect();
    let k = pts.len() as f64;
    let (mx, my) = (pts.iter().map(|p| p.0).sum::<f64>() / k, pts.iter().map(|p| p.1).sum::<f64>() / k);
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_a_power_law() {
        let rows: Vec<BenchRow> = [10usize, 100, 1000]
            .iter()
            .map(|&n| BenchRow { n, regime: "x".into(), solver_ms: (n * n) as f64, oracle_ms: None })
            .collect();
        assert!((loglog_slope(&rows) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn csv_row_shape() {
        let r = BenchRow { n: 12, regime: "SmallI".into(), solver_ms: 1.5, oracle_ms: None };
        assert_eq!(r.csv(), "12,SmallI,1.500,NA");
    }
}
