use splithp::format::{read_graph, write_corpus};
use splithp::gen::{generate, GenKind, GenSpec};
use splithp::graph::is_hamiltonian_path;
use splithp::solve;
use splithp::split::{delta_i, find_star_split};
use splithp::structure::structure_report;

#[test]
fn planted_path_is_found() {
    let gd = generate(&GenSpec::new(GenKind::PlantedHp, 10, 9, 1)).unwrap();
    let planted = gd.planted.unwrap();
    assert!(is_hamiltonian_path(&gd.graph, &planted.sequence));
    assert!(solve(&gd.graph).unwrap().is_yes());
}

#[test]
fn one_short_cycle_on_request() {
    let mut made = 0;
    for seed in 0..20 {
        let mut spec = GenSpec::new(GenKind::K14FreeD3, 10, 8, seed);
        spec.extras.short_cycles = Some(1);
        let Ok(gd) = generate(&spec) else { continue };
        let r = structure_report(&gd.graph, &gd.partition).unwrap();
        assert_eq!(r.short_cycles, 1);
        let c = r.pieces.iter().find(|c| c.is_short && c.kind == splithp::structure::PieceKind::Cycle).unwrap();
        assert!(c.vertices.len() <= 8);
        made += 1;
    }
    assert!(made > 0);
}

#[test]
fn split_with_one_clique_vertex_is_the_pendant_trio() {
    let gd = generate(&GenSpec::new(GenKind::Split, 1, 3, 0)).unwrap();
    assert_eq!(gd.graph.m(), 3);
    assert_eq!(gd.graph.degree(1), 3);
    assert!(!solve(&gd.graph).unwrap().is_yes());
}

#[test]
fn kinds_meet_their_predicates() {
    for seed in 0..30 {
        for (kind, nk, ni) in [(GenKind::K13Free, 6, 3), (GenKind::K14FreeD2, 8, 6), (GenKind::K14FreeD3, 10, 8), (GenKind::PropertyA, 14, 10)] {
            let gd = generate(&GenSpec::new(kind, nk, ni, seed)).unwrap();
            let (g, p) = (&gd.graph, &gd.partition);
            match kind {
                GenKind::K13Free => assert!(find_star_split(g, p, 3).is_none()),
                GenKind::K14FreeD2 => assert_eq!(delta_i(p, g), 2),
                _ => {
                    assert_eq!(delta_i(p, g), 3);
                    assert!(find_star_split(g, p, 4).is_none());
                }
            }
            if kind == GenKind::PropertyA {
                assert!(structure_report(g, p).unwrap().property_a);
            }
        }
    }
}

#[test]
fn infeasible_specs_are_rejected() {
    assert!(generate(&GenSpec::new(GenKind::K14FreeD3, 5, 2, 0)).is_err());
    assert!(generate(&GenSpec::new(GenKind::PropertyA, 8, 12, 0)).is_err());
    assert!(generate(&GenSpec::new(GenKind::Split, 0, 3, 0)).is_err());
}

#[test]
fn corpus_is_reproducible() {
    let specs: Vec<GenSpec> = (0..3).map(|s| GenSpec::new(GenKind::PlantedHc, 6, 5, s)).collect();
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let ea = write_corpus(&specs, a.path()).unwrap();
    write_corpus(&specs, b.path()).unwrap();
    assert_eq!(ea.len(), 3);
    assert!(ea.iter().all(|e| e.planted.as_ref().is_some_and(|p| p.0)));
    for e in &ea {
        assert_eq!(std::fs::read(a.path().join(&e.file)).unwrap(), std::fs::read(b.path().join(&e.file)).unwrap());
        assert!(read_graph(&a.path().join(&e.file)).is_ok());
    }
    let manifest = std::fs::read_to_string(a.path().join("manifest.txt")).unwrap();
    assert_eq!(manifest.lines().count(), 3);
    assert!(manifest.contains("seed 2 kind PLANTED_HC expected YES cycle"));
}
