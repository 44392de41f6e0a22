use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

/// An opaque basis label. Tensor bases use [`Label::Pair`]; everything else
/// is an atom.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Atom(String),
    Pair(Box<Label>, Box<Label>),
}

impl Label {
    pub fn atom(s: impl Into<String>) -> Self {
        Label::Atom(s.into())
    }

    pub fn pair(a: Label, b: Label) -> Self {
        Label::Pair(Box::new(a), Box::new(b))
    }

    pub fn as_pair(&self) -> Option<(&Label, &Label)> {
        match self {
            Label::Pair(a, b) => Some((a, b)),
            Label::Atom(_) => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(s) => f.write_str(s),
            Label::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::atom(s)
    }
}

#[derive(Debug)]
struct BasisInner {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

/// An ordered list of pairwise distinct labels. Cloning is cheap.
#[derive(Clone)]
pub struct LabeledBasis(Arc<BasisInner>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("duplicate basis label {0}")]
pub struct DuplicateLabel(pub Label);

impl LabeledBasis {
    pub fn new(labels: Vec<Label>) -> Result<Self, DuplicateLabel> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(DuplicateLabel(l.clone()));
            }
        }
        Ok(LabeledBasis(Arc::new(BasisInner { labels, index })))
    }

    pub fn from_atoms<S: AsRef<str>>(names: &[S]) -> Result<Self, DuplicateLabel> {
        Self::new(names.iter().map(|s| Label::atom(s.as_ref())).collect())
    }

    pub fn empty() -> Self {
        Self::new(Vec::new()).expect("empty basis")
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.0.labels[i]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    pub fn same_as(&self, other: &LabeledBasis) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl PartialEq for LabeledBasis {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for LabeledBasis {}

impl fmt::Debug for LabeledBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels()).finish()
    }
}

/// Pairs `(l1, l2)` ordered lexicographically by position in `b1` then `b2`.
pub fn tensor_basis(b1: &LabeledBasis, b2: &LabeledBasis) -> LabeledBasis {
    let mut labels = Vec::with_capacity(b1.len() * b2.len());
    for l1 in b1.labels() {
        for l2 in b2.labels() {
            labels.push(Label::pair(l1.clone(), l2.clone()));
        }
    }
    LabeledBasis::new(labels).expect("pairs of distinct labels are distinct")
}
