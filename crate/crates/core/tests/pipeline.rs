use egomap_core::community::louvain;
use egomap_core::eval::{
    membership_confusion, partition_similarity, planted_partition, precision, recall,
};
use egomap_core::graph::{build_graph, VertexId, VertexMeta};
use egomap_core::interest::{build_interest_map, Detector, MapConfig};
use egomap_core::io::{export_map, ExportFormat};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn id(s: &str) -> VertexId {
    VertexId::new(s).unwrap()
}

fn coin(rng: &mut ChaCha8Rng, p: f64) -> bool {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64 <= p
}

/// Ego following two groups of eight; bios draw from per-group vocabularies.
fn two_interest_network(seed: u64) -> egomap_core::DirectedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vocab = [
        ["cooking", "recipes", "chef", "baking", "kitchen"],
        ["basketball", "nba", "dunk", "playoffs", "hoops"],
    ];
    let mut vertices = vec![(id("ego"), VertexMeta::default())];
    let mut edges = Vec::new();
    let name = |g: usize, i: usize| format!("{}{i}", ["c", "b"][g]);
    for (g, words) in vocab.iter().enumerate() {
        for i in 0..8 {
            let extra = words[1 + (rng.next_u64() % 4) as usize];
            vertices.push((
                id(&name(g, i)),
                VertexMeta {
                    description: format!("{} {} fan, life", words[0], extra),
                    ..Default::default()
                },
            ));
            edges.push((id("ego"), id(&name(g, i))));
        }
    }
    for g in 0..2 {
        for i in 0..8 {
            for j in 0..8 {
                if i != j && coin(&mut rng, 0.5) {
                    edges.push((id(&name(g, i)), id(&name(g, j))));
                }
            }
            if coin(&mut rng, 0.05) {
                edges.push((id(&name(g, i)), id(&name(1 - g, (i + 3) % 8))));
            }
        }
    }
    build_graph(vertices, edges).unwrap()
}

#[test]
fn every_detector_finds_both_interests() {
    for seed in 0..5 {
        let g = two_interest_network(seed);
        for detector in Detector::ALL {
            let cfg = MapConfig {
                detector,
                seed,
                ..MapConfig::default()
            };
            let map = build_interest_map(&g, &id("ego"), &cfg).unwrap();
            assert_eq!(map.groups.len(), 2, "{detector} seed {seed}");
            let mut heads: Vec<&str> = map
                .groups
                .iter()
                .map(|grp| grp.label_terms[0].term.as_str())
                .collect();
            heads.sort();
            assert_eq!(heads, ["basketball", "cooking"], "{detector} seed {seed}");
            // terms every group uses get the smaller idf
            for grp in &map.groups {
                let head = grp.label_terms[0].weight;
                for t in grp
                    .label_terms
                    .iter()
                    .filter(|t| t.term == "fan" || t.term == "life")
                {
                    assert!(t.weight < head);
                }
            }
        }
    }
}

#[test]
fn map_is_repeatable_and_ego_free() {
    let g = two_interest_network(3);
    let cfg = MapConfig::default();
    let a = build_interest_map(&g, &id("ego"), &cfg).unwrap();
    let b = build_interest_map(&g, &id("ego"), &cfg).unwrap();
    assert_eq!(
        export_map(&a, ExportFormat::Json),
        export_map(&b, ExportFormat::Json)
    );
    assert!(a.groups.iter().all(|grp| !grp.members.contains(&id("ego"))));
    for (i, grp) in a.groups.iter().enumerate() {
        assert_eq!(grp.community_id, i);
        assert_eq!(grp.size, grp.members.len());
        assert!(grp.label_terms.len() <= cfg.label_top_k);
    }
}

#[test]
fn planted_recovery_scores() {
    let pg = planted_partition(3, 12, 0.6, 0.02, 4).unwrap();
    let (found, _) = louvain::<f64>(&pg.graph, 4).unwrap();
    let sim = partition_similarity::<f64>(&found, &pg.truth).unwrap();
    assert!(sim.ari > 0.9 && sim.nmi > 0.9);
    let counts = membership_confusion(&found, &pg.truth).unwrap();
    assert!(precision(&counts).unwrap() > 0.9);
    assert!(recall(&counts).unwrap() > 0.9);
}
