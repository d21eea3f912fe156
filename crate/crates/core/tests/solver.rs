use splithp::cert::{validate_certificate, Certificate, Verdict, Witness};
use splithp::gen::{generate, GenKind, GenSpec};
use splithp::graph::{build_graph, is_hamiltonian_cycle, Graph, Vertex};
use splithp::oracle::{ham_path_oracle, OracleBudget};
use splithp::reduction::reduce_one;
use splithp::solver::delta3::build_v3_context;
use splithp::solver::{hc_k13, small_i_dp, solve_delta1, solve_delta2, solve_delta3, solve_k13};
use splithp::split::SplitPartition;
use splithp::{solve, SolveError};

fn split(n: usize, k: &[Vertex], edges: &[(Vertex, Vertex)]) -> (Graph, SplitPartition) {
    let mut e = edges.to_vec();
    for (i, &a) in k.iter().enumerate() {
        e.extend(k[i + 1..].iter().map(|&b| (a, b)));
    }
    let g = build_graph(n, &e).unwrap();
    let i: Vec<Vertex> = (1..=n as Vertex).filter(|v| !k.contains(v)).collect();
    let p = SplitPartition::from_sets(n, k, &i);
    assert!(p.check(&g));
    (g, p)
}

fn assert_oracle(g: &Graph, c: &Certificate) {
    assert_eq!(validate_certificate(g, c), Ok(()));
    assert_eq!(c.is_yes(), ham_path_oracle(g, &OracleBudget::default()).unwrap().is_some());
}

#[test]
fn p3_has_a_path() {
    let (g, _) = split(3, &[1, 2], &[(2, 3)]);
    let c = solve(&g).unwrap();
    assert!(c.is_yes());
    assert_oracle(&g, &c);
}

#[test]
fn pendant_trio_is_refuted() {
    let (g, _) = split(4, &[1, 2], &[(1, 3), (1, 4)]);
    let c = solve(&g).unwrap();
    assert_eq!(c.witness, Some(Witness::CutSet(vec![1])));
    assert_oracle(&g, &c);
    // four pendants on one clique vertex
    let (g2, p2) = split(5, &[1, 2], &[(1, 3), (1, 4), (1, 5)]);
    assert_eq!(small_i_dp(&g2, &p2).unwrap().verdict, Verdict::No);
    assert_eq!(solve(&g2).unwrap().verdict, Verdict::No);
}

#[test]
fn square_reduced_instance_has_an_s_t_path() {
    let (g, p) = split(8, &[1, 2, 3, 4], &[(5, 2), (5, 4), (6, 1), (6, 2), (7, 3), (7, 4), (8, 1), (8, 3)]);
    let inst = reduce_one(&g, &p, (4, 7)).unwrap();
    let c = solve(&inst.graph).unwrap();
    assert!(c.is_yes());
    let ends = [c.path[0], *c.path.last().unwrap()];
    assert!(ends.contains(&inst.s) && ends.contains(&inst.t));
    assert_oracle(&inst.graph, &c);
}

#[test]
fn k13_examples() {
    let (g, p) = split(4, &[1, 2], &[(3, 1), (4, 2)]);
    assert_eq!(solve_k13(&g, &p).unwrap().path, vec![3, 1, 2, 4]);

    let (g, p) = split(6, &[1, 2, 3], &[(4, 1), (5, 2), (6, 3)]);
    let c = solve_k13(&g, &p).unwrap();
    assert_eq!(c.witness, Some(Witness::TooManyDegreeOne(vec![4, 5, 6])));
    assert_oracle(&g, &c);

    let (g, p) = split(4, &[1, 2, 3], &[(4, 1), (4, 2)]);
    assert!(solve_k13(&g, &p).unwrap().is_yes());
    let cyc = hc_k13(&g, &p).unwrap().unwrap();
    assert!(is_hamiltonian_cycle(&g, &cyc));
    assert_eq!(cyc, vec![1, 4, 2, 3]);

    let (k3, pk) = split(3, &[1, 2, 3], &[]);
    assert_eq!(hc_k13(&k3, &pk).unwrap(), Some(vec![1, 2, 3]));
    let (p3, pp) = split(3, &[1, 2], &[(2, 3)]);
    assert_eq!(hc_k13(&p3, &pp).unwrap(), None);
}

#[test]
fn delta1_examples() {
    let (g, p) = split(5, &[1, 2, 3], &[(4, 1), (5, 3)]);
    assert_eq!(solve_delta1(&g, &p).unwrap().path, vec![4, 1, 2, 3, 5]);
    let (g, p) = split(3, &[1, 2], &[(3, 1)]);
    let c = solve_delta1(&g, &p).unwrap();
    assert!(c.path == vec![2, 1, 3] || c.path == vec![3, 1, 2]);
    let (g, p) = split(5, &[1, 2], &[(3, 1), (4, 2), (5, 2)]);
    assert!(matches!(solve_delta1(&g, &p), Err(SolveError::PreconditionViolated(_))));
}

#[test]
fn delta2_examples() {
    let (g, p) = split(5, &[1, 2, 3], &[(4, 1), (4, 2), (5, 2), (5, 3)]);
    let c = solve_delta2(&g, &p).unwrap();
    assert_eq!(c.path, vec![1, 4, 2, 5, 3]);

    // vertex 5 joins I on 2 and 6
    let (g, p) = split(6, &[1, 2, 6], &[(3, 1), (4, 1), (5, 2), (5, 6)]);
    let c = solve_delta2(&g, &p).unwrap();
    assert_eq!(c.witness, Some(Witness::ShortIIPath(vec![3, 1, 4])));
    assert_oracle(&g, &c);

    let (g, p) = split(7, &[1, 2, 3, 4], &[(5, 1), (6, 2), (7, 3)]);
    let c = solve(&g).unwrap();
    assert_eq!(c.verdict, Verdict::No);
    assert_oracle(&g, &c);
    let _ = p;
}

#[test]
fn v3_context_needs_a_degree_three_vertex() {
    let (g, p) = split(5, &[1, 2, 3], &[(4, 1), (4, 2), (5, 2), (5, 3)]);
    assert!(matches!(build_v3_context(&g, &p), Err(SolveError::NoV3Vertex)));
}

#[test]
fn property_a_with_a_short_cycle_uses_lemma7() {
    let mut found = 0;
    for seed in 0..40 {
        let mut spec = GenSpec::new(GenKind::PropertyA, 14, 10, seed);
        spec.extras.short_cycles = Some(1);
        let Ok(gd) = generate(&spec) else { continue };
        let c = solve_delta3(&gd.graph, &gd.partition).unwrap();
        assert_oracle(&gd.graph, &c);
        if c.trace.iter().any(|t| t.claim == "Lemma7") {
            found += 1;
        }
    }
    assert!(found > 0);
}

#[test]
fn three_ik_paths_are_refuted() {
    // K = {1..10}, I = {11..19}: three pendants plus a Δᴵ = 3 core
    let mut spec = GenSpec::new(GenKind::K14FreeD3, 12, 10, 0);
    for seed in 0..400 {
        spec.seed = seed;
        let Ok(gd) = generate(&spec) else { continue };
        let Ok(r) = splithp::structure::structure_report(&gd.graph, &gd.partition) else { continue };
        if r.ik_paths + r.short_cycles >= 3 && r.short_ii_paths == 0 {
            let c = solve(&gd.graph).unwrap();
            assert_eq!(c.witness.as_ref().map(|w| w.kind()), Some("TooManyIKPaths"));
            assert_oracle(&gd.graph, &c);
            return;
        }
    }
    panic!("no instance with three I-K paths found");
}

#[test]
fn regimes_are_reached_and_certified() {
    let mut seen = std::collections::BTreeSet::new();
    for seed in 0..300 {
        let ni = 9 + seed as usize % 3;
        let Ok(gd) = generate(&GenSpec::new(GenKind::K14FreeD3, ni + 3, ni, seed)) else { continue };
        let c = solve(&gd.graph).unwrap();
        assert_oracle(&gd.graph, &c);
        if let Some(t) = c.trace.first() {
            seen.insert(t.claim.clone());
        }
    }
    for claim in ["Claim13", "Claim17", "PropertyA"] {
        assert!(seen.contains(claim), "{claim} not reached: {seen:?}");
    }
}

#[test]
fn small_i_examples() {
    let (k4, p) = split(4, &[1, 2, 3, 4], &[]);
    assert!(small_i_dp(&k4, &p).unwrap().is_yes());
}

#[test]
fn too_many_independent_vertices_cut_at_k() {
    let (g, _) = split(6, &[1, 2], &[(3, 1), (4, 1), (5, 2), (6, 2)]);
    let c = solve(&g).unwrap();
    assert_eq!(c.witness, Some(Witness::CutSet(vec![1, 2])));
    assert_oracle(&g, &c);
}

#[test]
fn cycle_through_v_is_built_directly() {
    let mut spec = GenSpec::new(GenKind::PropertyA, 12, 9, 329);
    spec.extras.short_cycles = Some(1);
    spec.extras.ik_paths = Some(0);
    let gd = generate(&spec).unwrap();
    let c = solve(&gd.graph).unwrap();
    assert_eq!(c.trace.len(), 1);
    assert_eq!((c.trace[0].claim.as_str(), c.trace[0].case.as_str()), ("Lemma7", "Case2"));
    assert_eq!(validate_certificate(&gd.graph, &c), Ok(()));
}
