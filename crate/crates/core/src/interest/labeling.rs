//! Community labels from member profile text.
//!
//! Each community is one document (the concatenated descriptions of its
//! members). Terms are weighted by TF-IDF across the communities of one ego
//! network: `tf = count / tokens in the community`,
//! `idf = ln(documents / documents containing the term) + 1`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::graph::{VertexId, VertexMeta};

const STOPWORDS_EN: &str = include_str!("../../data/stopwords_en.txt");
const MIN_TOKEN_CHARS: usize = 3;

fn stopwords() -> &'static HashSet<&'static str> {
    static WORDS: OnceLock<HashSet<&'static str>> = OnceLock::new();
    WORDS.get_or_init(|| {
        STOPWORDS_EN
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect()
    })
}

pub fn is_stopword(term: &str) -> bool {
    stopwords().contains(term)
}

/// Lowercases, splits on anything that is not a Unicode letter or digit,
/// and drops stopwords and tokens shorter than three characters.
pub fn tokenize(text: &str) -> Vec<String> {
    text.to_lowercase()
        .split(|c: char| !c.is_alphanumeric())
        .filter(|t| t.chars().count() >= MIN_TOKEN_CHARS && !is_stopword(t))
        .map(str::to_owned)
        .collect()
}

/// Term counts over the descriptions of `members`. Members without
/// metadata contribute nothing.
pub fn community_terms(
    members: &BTreeSet<VertexId>,
    meta: &BTreeMap<VertexId, VertexMeta>,
) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    for id in members {
        if let Some(m) = meta.get(id) {
            for token in tokenize(&m.description) {
                *counts.entry(token).or_insert(0) += 1;
            }
        }
    }
    counts
}

/// Document frequencies across the communities of one ego network.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    documents: usize,
    document_frequency: BTreeMap<String, usize>,
}

impl Corpus {
    pub fn new<'a, I>(documents: I) -> Self
    where
        I: IntoIterator<Item = &'a BTreeMap<String, usize>>,
    {
        let mut corpus = Self::default();
        for doc in documents {
            corpus.documents += 1;
            for term in doc.keys() {
                *corpus.document_frequency.entry(term.clone()).or_insert(0) += 1;
            }
        }
        corpus
    }

    pub fn documents(&self) -> usize {
        self.documents
    }

    fn idf(&self, term: &str) -> f64 {
        let docs = self.documents.max(1) as f64;
        let df = self
            .document_frequency
            .get(term)
            .copied()
            .unwrap_or(0)
            .max(1) as f64;
        (docs / df).ln() + 1.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelTerm {
    pub term: String,
    pub weight: f64,
}

/// Top `top_k` TF-IDF terms for a community, heaviest first; equal weights
/// are ordered by term.
pub fn label_community(
    members: &BTreeSet<VertexId>,
    meta: &BTreeMap<VertexId, VertexMeta>,
    corpus: &Corpus,
    top_k: usize,
) -> Vec<LabelTerm> {
    let counts = community_terms(members, meta);
    let total: usize = counts.values().sum();
    if total == 0 {
        return Vec::new();
    }
    let mut terms: Vec<LabelTerm> = counts
        .into_iter()
        .map(|(term, count)| {
            let weight = count as f64 / total as f64 * corpus.idf(&term);
            LabelTerm { term, weight }
        })
        .collect();
    terms.sort_by(|a, b| {
        b.weight
            .total_cmp(&a.weight)
            .then_with(|| a.term.cmp(&b.term))
    });
    terms.truncate(top_k);
    terms
}
