use std::fmt::Write;
use std::str::FromStr;

use crate::interest::InterestMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Dot,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Self::Json),
            "dot" => Ok(Self::Dot),
            _ => Err(format!("unknown format `{s}` (expected json or dot)")),
        }
    }
}

/// Serializes a map. JSON keys follow the field order of [`InterestMap`]
/// and member lists are sorted, so equal maps give identical bytes. DOT
/// output has one `subgraph cluster_N` per group, labeled with its top
/// terms.
pub fn export_map(map: &InterestMap, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(map).expect("map serializes");
            out.push(b'\n');
            out
        }
        ExportFormat::Dot => dot(map).into_bytes(),
    }
}

fn dot(map: &InterestMap) -> String {
    let mut out = String::new();
    writeln!(out, "graph interest_map {{").unwrap();
    writeln!(
        out,
        "  label={};",
        quote(&format!("{} ({})", map.ego, map.detector))
    )
    .unwrap();
    for group in &map.groups {
        let terms: Vec<&str> = group.label_terms.iter().map(|t| t.term.as_str()).collect();
        writeln!(out, "  subgraph cluster_{} {{", group.community_id).unwrap();
        writeln!(out, "    label={};", quote(&terms.join(", "))).unwrap();
        for member in &group.members {
            writeln!(out, "    {};", quote(member.as_str())).unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for v in &map.dropped_vertices {
        writeln!(out, "  {} [style=dashed];", quote(v.as_str())).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                q.push('\\');
                q.push(c);
            }
            '\n' => q.push_str("\\n"),
            _ => q.push(c),
        }
    }
    q.push('"');
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vid;
    use crate::interest::{Detector, InterestGroup, LabelTerm};
    use std::collections::BTreeSet;

    fn group(id: usize, members: &[&str], terms: &[&str]) -> InterestGroup {
        InterestGroup {
            community_id: id,
            size: members.len(),
            label_terms: terms
                .iter()
                .map(|t| LabelTerm {
                    term: (*t).into(),
                    weight: 0.25,
                })
                .collect(),
            members: members.iter().map(|s| vid(s)).collect(),
        }
    }

    fn two_groups() -> InterestMap {
        InterestMap {
            ego: vid("me"),
            detector: Detector::Louvain,
            groups: vec![
                group(0, &["c", "a", "b"], &["cooking", "recipes"]),
                group(1, &["y", "x", "z"], &["nba"]),
            ],
            dropped_vertices: BTreeSet::from([vid("q")]),
        }
    }

    #[test]
    fn empty_map_json() {
        let map = InterestMap {
            ego: vid("me"),
            detector: Detector::Walktrap,
            groups: vec![],
            dropped_vertices: BTreeSet::new(),
        };
        let text = String::from_utf8(export_map(&map, ExportFormat::Json)).unwrap();
        let compact: String = text.split_whitespace().collect();
        assert_eq!(
            compact,
            r#"{"ego":"me","detector":"walktrap","groups":[],"dropped_vertices":[]}"#
        );
    }

    #[test]
    fn json_key_order_and_sorted_members() {
        let text = String::from_utf8(export_map(&two_groups(), ExportFormat::Json)).unwrap();
        let keys = [
            "\"ego\"",
            "\"detector\"",
            "\"groups\"",
            "\"community_id\"",
            "\"size\"",
            "\"label_terms\"",
            "\"term\"",
            "\"weight\"",
            "\"members\"",
            "\"dropped_vertices\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        let compact: String = text.split_whitespace().collect();
        assert!(compact.contains(r#""members":["a","b","c"]"#));
        let round: InterestMap = serde_json::from_str(&text).unwrap();
        assert_eq!(round, two_groups());
    }

    #[test]
    fn dot_has_one_cluster_per_group() {
        let text = String::from_utf8(export_map(&two_groups(), ExportFormat::Dot)).unwrap();
        assert_eq!(text.matches("subgraph cluster_").count(), 2);
        assert!(text.contains("label=\"cooking, recipes\";"));
        assert!(text.starts_with("graph interest_map {"));
    }

    #[test]
    fn export_is_repeatable() {
        for format in [ExportFormat::Json, ExportFormat::Dot] {
            assert_eq!(
                export_map(&two_groups(), format),
                export_map(&two_groups(), format)
            );
        }
    }

    #[test]
    fn dot_escapes_quotes() {
        assert_eq!(quote(r#"a"b\c"#), r#""a\"b\\c""#);
    }
}
