//! Information systems: objects described by categorical attributes.
//!
//! Cell values are opaque symbols. They are interned per column into dense
//! codes on construction, so everything downstream only ever compares codes
//! for equality.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// How decision classes are formed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Decision {
    /// Every object is its own decision class.
    #[default]
    Identity,
    /// A named column of the table, excluded from the conditional attributes.
    Attribute(String),
}

impl Decision {
    /// Parses `identity` or an attribute name.
    pub fn parse(s: &str) -> Self {
        if s == "identity" {
            Decision::Identity
        } else {
            Decision::Attribute(s.to_owned())
        }
    }
}

/// A validated decision table. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InformationSystem {
    object_ids: Vec<String>,
    attributes: Vec<String>,
    /// Column-major value codes: `codes[attr][object]`.
    codes: Vec<Vec<u32>>,
    /// Per-column symbol tables, indexed by code.
    alphabets: Vec<Vec<String>>,
    decision: Decision,
    decision_index: Option<usize>,
}

impl InformationSystem {
    /// Validates and interns a row-major table.
    ///
    /// Row numbers in `MalformedTable` are 1-based positions in `rows`.
    pub fn new(
        object_ids: Vec<String>,
        attributes: Vec<String>,
        rows: Vec<Vec<String>>,
        decision: Decision,
    ) -> Result<Self> {
        if rows.is_empty() || attributes.is_empty() {
            return Err(Error::EmptyTable);
        }
        for (i, a) in attributes.iter().enumerate() {
            if attributes[..i].contains(a) {
                return Err(Error::DuplicateAttribute(a.clone()));
            }
        }
        if let Some(i) = rows.iter().position(|r| r.len() != attributes.len()) {
            return Err(Error::MalformedTable(i + 1));
        }
        if object_ids.len() != rows.len() {
            return Err(Error::MalformedTable(object_ids.len().min(rows.len()) + 1));
        }
        let decision_index = match &decision {
            Decision::Identity => None,
            Decision::Attribute(name) => Some(
                attributes
                    .iter()
                    .position(|a| a == name)
                    .ok_or_else(|| Error::UnknownDecision(name.clone()))?,
            ),
        };
        if decision_index.is_some() && attributes.len() == 1 {
            return Err(Error::NoConditionalAttributes);
        }

        let mut codes = Vec::with_capacity(attributes.len());
        let mut alphabets = Vec::with_capacity(attributes.len());
        for col in 0..attributes.len() {
            let mut lookup: BTreeMap<&str, u32> = BTreeMap::new();
            let mut alphabet: Vec<String> = Vec::new();
            let column = rows
                .iter()
                .map(|row| {
                    let v = row[col].as_str();
                    *lookup.entry(v).or_insert_with(|| {
                        alphabet.push(v.to_owned());
                        (alphabet.len() - 1) as u32
                    })
                })
                .collect();
            codes.push(column);
            alphabets.push(alphabet);
        }

        Ok(InformationSystem {
            object_ids,
            attributes,
            codes,
            alphabets,
            decision,
            decision_index,
        })
    }

    /// Like [`InformationSystem::new`] with objects labelled by row ordinal.
    pub fn from_rows(
        attributes: Vec<String>,
        rows: Vec<Vec<String>>,
        decision: Decision,
    ) -> Result<Self> {
        let ids = (0..rows.len()).map(|i| format!("{i}")).collect();
        Self::new(ids, attributes, rows, decision)
    }

    pub fn num_objects(&self) -> usize {
        self.object_ids.len()
    }

    pub fn object_ids(&self) -> &[String] {
        &self.object_ids
    }

    /// All columns, decision included, in table order.
    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn decision(&self) -> &Decision {
        &self.decision
    }

    pub fn decision_index(&self) -> Option<usize> {
        self.decision_index
    }

    /// Attributes minus the decision column, in table order.
    pub fn conditional_attributes(&self) -> Vec<&str> {
        self.conditional_indices()
            .map(|i| self.attributes[i].as_str())
            .collect()
    }

    pub fn conditional_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.attributes.len()).filter(move |&i| Some(i) != self.decision_index)
    }

    pub fn num_conditional(&self) -> usize {
        self.attributes.len() - usize::from(self.decision_index.is_some())
    }

    /// Column index of any attribute, decision included.
    pub fn attribute_index(&self, name: &str) -> Result<usize> {
        self.attributes
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::UnknownAttribute(name.to_owned()))
    }

    /// Column index of a conditional attribute.
    pub fn conditional_index(&self, name: &str) -> Result<usize> {
        match self.attribute_index(name) {
            Ok(i) if Some(i) != self.decision_index => Ok(i),
            _ => Err(Error::UnknownAttribute(name.to_owned())),
        }
    }

    /// Resolves conditional attribute names to column indices.
    pub fn resolve<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        names
            .iter()
            .map(|n| self.conditional_index(n.as_ref()))
            .collect()
    }

    pub fn name(&self, attr: usize) -> &str {
        &self.attributes[attr]
    }

    /// Interned value codes of one column.
    pub fn column(&self, attr: usize) -> &[u32] {
        &self.codes[attr]
    }

    /// Original symbol of a cell.
    pub fn value(&self, object: usize, attr: usize) -> &str {
        &self.alphabets[attr][self.codes[attr][object] as usize]
    }

    /// Same table with a different decision policy.
    pub fn with_decision(&self, decision: Decision) -> Result<Self> {
        let rows = (0..self.num_objects())
            .map(|o| {
                (0..self.attributes.len())
                    .map(|a| self.value(o, a).to_owned())
                    .collect()
            })
            .collect();
        Self::new(
            self.object_ids.clone(),
            self.attributes.clone(),
            rows,
            decision,
        )
    }
}

/// The seven-segment display of digits 0-9: attributes `a`..`g`, one
/// object per digit, identity decision.
///
/// Digit 0 lights every segment except the middle bar `g`.
pub fn builtin_seven_segment() -> InformationSystem {
    const ROWS: [&str; 10] = [
        "1111110", // 0
        "0110000", // 1
        "1101101", // 2
        "1111001", // 3
        "0110011", // 4
        "1011011", // 5
        "1011111", // 6
        "1110000", // 7
        "1111111", // 8
        "1111011", // 9
    ];
    let attributes = ["a", "b", "c", "d", "e", "f", "g"]
        .iter()
        .map(|s| (*s).to_owned())
        .collect();
    let rows = ROWS
        .iter()
        .map(|r| r.chars().map(String::from).collect())
        .collect();
    InformationSystem::from_rows(attributes, rows, Decision::Identity)
        .expect("builtin table is well formed")
}
