use std::io::Read;

use serde::{Deserialize, Serialize};

use super::IoError;
use crate::graph::{GraphError, VertexId};

const HEADER: [&str; 2] = ["source", "target"];

/// One follow relation: `source` follows `target`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub source: VertexId,
    pub target: VertexId,
}

/// Reads a `source,target` CSV edge list. Blank lines are skipped; fields
/// are taken verbatim (no trimming) and may be quoted.
pub fn parse_edges<R: Read>(reader: R) -> Result<Vec<EdgeRecord>, IoError> {
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(reader);
    let mut records = csv.records();

    match records.next() {
        Some(Ok(header)) if header.iter().eq(HEADER) => {}
        Some(Ok(header)) => {
            return Err(IoError::MissingHeader {
                found: header.iter().collect::<Vec<_>>().join(","),
            })
        }
        Some(Err(e)) => return Err(csv_error(e)),
        None => {
            return Err(IoError::MissingHeader {
                found: String::new(),
            })
        }
    }

    let mut out = Vec::new();
    for record in records {
        let record = record.map_err(csv_error)?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != 2 {
            return Err(IoError::ColumnCount {
                line,
                found: record.len(),
            });
        }
        let id = |s: &str| VertexId::new(s).map_err(|source| IoError::InvalidEdge { line, source });
        let source = id(&record[0])?;
        let target = id(&record[1])?;
        if source == target {
            return Err(IoError::InvalidEdge {
                line,
                source: GraphError::SelfLoop(source),
            });
        }
        out.push(EdgeRecord { source, target });
    }
    Ok(out)
}

/// Writes records in the format [`parse_edges`] reads, header included.
pub fn render_edges(records: &[EdgeRecord]) -> String {
    let mut csv = csv::Writer::from_writer(Vec::new());
    csv.write_record(HEADER).expect("in-memory write");
    for r in records {
        csv.write_record([r.source.as_str(), r.target.as_str()])
            .expect("in-memory write");
    }
    String::from_utf8(csv.into_inner().expect("in-memory flush")).expect("input was UTF-8")
}

fn csv_error(e: csv::Error) -> IoError {
    let line = e.position().map_or(0, |p| p.line());
    IoError::Csv {
        line,
        message: e.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vid;

    fn parse(text: &str) -> Result<Vec<EdgeRecord>, IoError> {
        parse_edges(text.as_bytes())
    }

    fn edge(a: &str, b: &str) -> EdgeRecord {
        EdgeRecord {
            source: vid(a),
            target: vid(b),
        }
    }

    #[test]
    fn simple_file() {
        assert_eq!(parse("source,target\na,b\n").unwrap(), vec![edge("a", "b")]);
    }

    #[test]
    fn blank_lines_skipped() {
        assert_eq!(
            parse("source,target\n\na,b\n\n").unwrap(),
            vec![edge("a", "b")]
        );
        assert_eq!(parse("source,target\r\na,b\r\nb,c").unwrap().len(), 2);
    }

    #[test]
    fn short_row_names_its_line() {
        match parse("source,target\na\n").unwrap_err() {
            IoError::ColumnCount { line, found } => assert_eq!((line, found), (2, 1)),
            other => panic!("unexpected {other:?}"),
        }
        match parse("source,target\n\na,b\nc,d,e\n").unwrap_err() {
            IoError::ColumnCount { line, .. } => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn header_required() {
        assert!(matches!(parse("a,b\n"), Err(IoError::MissingHeader { .. })));
        assert!(matches!(parse(""), Err(IoError::MissingHeader { .. })));
        assert!(matches!(
            parse("target,source\n"),
            Err(IoError::MissingHeader { .. })
        ));
    }

    #[test]
    fn bad_ids_rejected() {
        assert!(matches!(
            parse("source,target\n,b\n"),
            Err(IoError::InvalidEdge {
                line: 2,
                source: GraphError::EmptyId
            })
        ));
        assert!(matches!(
            parse("source,target\na,a\n"),
            Err(IoError::InvalidEdge {
                line: 2,
                source: GraphError::SelfLoop(_)
            })
        ));
    }

    #[test]
    fn quoted_fields_round_trip() {
        let records = vec![edge("a,b", "say \"hi\""), edge(" padded ", "x")];
        assert_eq!(parse(&render_edges(&records)).unwrap(), records);
    }
}
