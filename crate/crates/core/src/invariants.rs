//! Structural invariant checks run over generated corpora.

use crate::graph::{is_connected, Graph};
use crate::solver::delta3::{analyse_delta3, Regime, Stage};
use crate::solver::templates::{case_label, is_documented_omission};
use crate::solver::SolveError;
use crate::split::{delta_i, find_star_split, SplitPartition};
use crate::structure::{cycle_census, restricted_subgraph};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// K1,3-free with Δᴵ = 2 but |I| > 3
    Lemma1 { ni: usize },
    /// short cycles of H: lengths of lone cycles, and components with several
    Lemma6 { lengths: Vec<usize>, tangled: usize },
    Claim(String),
    /// the fallback search would run on a branch with an explicit construction
    UndocumentedFallback { regime: Regime, case: String },
    Solver(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Lemma1 { ni } => write!(f, "Lemma1: K1,3-free with Δᴵ=2 and |I|={ni}"),
            Violation::Lemma6 { lengths, tangled } => {
                write!(f, "Lemma6: short cycles of lengths {lengths:?}")?;
                if *tangled > 0 {
                    write!(f, " and {tangled} components with several cycles")?;
                }
                Ok(())
            }
            Violation::Claim(c) => write!(f, "{c} violated"),
            Violation::UndocumentedFallback { regime, case } => write!(f, "fallback on {} {case}", regime.label()),
            Violation::Solver(e) => write!(f, "solver error: {e}"),
        }
    }
}

/// Lemma 1; `None` when it holds or does not apply.
pub fn lemma1(g: &Graph, p: &SplitPartition) -> Option<Violation> {
    let applies = delta_i(p, g) == 2 && find_star_split(g, p, 3).is_none();
    (applies && p.independent.len() > 3).then(|| Violation::Lemma1 { ni: p.independent.len() })
}

/// Lemma 6 on connected K1,4-free graphs with Δᴵ = 3.
pub fn lemma6(g: &Graph, p: &SplitPartition) -> Option<Violation> {
    if !is_connected(g) || delta_i(p, g) != 3 || find_star_split(g, p, 4).is_some() {
        return None;
    }
    let census = cycle_census(&restricted_subgraph(g, p));
    let lengths: Vec<usize> = census.cycles.iter().map(|c| c.len()).filter(|&l| l < g.n()).collect();
    let bad = census.tangled > 0 || lengths.len() > 1 || lengths.iter().any(|&l| l > 8);
    bad.then_some(Violation::Lemma6 { lengths, tangled: census.tangled })
}

/// Claim assertions and fallback routing on instances inside the Δᴵ = 3 pipeline.
pub fn claims(g: &Graph, p: &SplitPartition) -> Option<Violation> {
    match analyse_delta3(g, p) {
        Ok(Stage::Dispatch { ctx, report, regime }) => {
            if regime.omitted() || crate::solver::templates::construct(g, p, &ctx, &report, regime).is_some() {
                return None;
            }
            let case = case_label(g, p, &ctx, &report, regime);
            (!is_documented_omission(regime.label(), &case)).then_some(Violation::UndocumentedFallback { regime, case })
        }
        Ok(_) | Err(SolveError::PreconditionViolated(_)) => None,
        Err(SolveError::StructuralClaimViolated(c)) => Some(Violation::Claim(c)),
        Err(e) => Some(Violation::Solver(e.to_string())),
    }
}

/// Every check above, in order.
pub fn check_all(g: &Graph, p: &SplitPartition) -> Vec<Violation> {
    let mut out: Vec<Violation> = lemma1(g, p).into_iter().collect();
    out.extend(lemma6(g, p));
    out.extend(claims(g, p));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{generate, GenKind, GenSpec};

    #[test]
    fn generated_instances_pass() {
        for seed in 0..12 {
            for kind in [GenKind::K13Free, GenKind::K14FreeD3] {
                let Ok(gd) = generate(&GenSpec::new(kind, 12, 10, seed)) else { continue };
                assert!(check_all(&gd.graph, &gd.partition).is_empty(), "{kind} seed {seed}");
            }
        }
    }

    #[test]
    fn lemma1_holds_on_a_small_path() {
        // a path 1-2-3-4-5 with K = {2, 4}: Δᴵ = 2 and |I| = 3, within bounds
        let g = crate::graph::build_graph(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 4)]).unwrap();
        let p = SplitPartition::from_sets(5, &[2, 4], &[1, 3, 5]);
        assert_eq!(lemma1(&g, &p), None);
    }

    #[test]
    fn lemma6_fails_on_a_three_vertex_clique() {
        // K = {1, 2, 3}; 4:{1,2}, 5:{2,3}, 6:{2,3}, 7:{1,3}
        let e = [(1, 2), (1, 3), (2, 3), (4, 1), (4, 2), (5, 2), (5, 3), (6, 2), (6, 3), (7, 1), (7, 3)];
        let g = crate::graph::build_graph(7, &e).unwrap();
        let p = SplitPartition::from_sets(7, &[1, 2, 3], &[4, 5, 6, 7]);
        assert!(p.check(&g) && find_star_split(&g, &p, 4).is_none());
        assert_eq!(delta_i(&p, &g), 3);
        assert_eq!(lemma6(&g, &p), Some(Violation::Lemma6 { lengths: vec![], tangled: 1 }));
    }
}
