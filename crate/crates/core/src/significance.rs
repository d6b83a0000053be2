//! Positive-region significance of conditional attributes, ranking, and the
//! low/high grouping used by the elimination.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;

use crate::dataset::InformationSystem;
use crate::error::Result;
use crate::partition::{decision_partition, ind_partition_indices, positive_region, Partition};
use crate::rational::Rational;

/// Which half of the ranked list an attribute is routed to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    /// Low-significance group, tested first.
    Low,
    High,
}

/// How the ranked list is cut into the low and high groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GroupPolicy {
    /// Everything strictly below the maximum significance goes low.
    #[default]
    BelowMax,
    /// Significance strictly below the threshold goes low.
    Threshold(Rational),
    /// The first `n` ranked attributes go low (clamped to the attribute count).
    Count(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedAttribute {
    pub name: String,
    /// Column index in the table.
    pub index: usize,
    pub significance: Rational,
    pub group: Group,
}

/// Conditional attributes in ascending significance, ties in column order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignificanceTable {
    ranked: Vec<RankedAttribute>,
}

impl SignificanceTable {
    pub fn ranked(&self) -> &[RankedAttribute] {
        &self.ranked
    }

    pub fn get(&self, name: &str) -> Option<&RankedAttribute> {
        self.ranked.iter().find(|r| r.name == name)
    }

    pub fn group_members(&self, group: Group) -> impl Iterator<Item = &RankedAttribute> {
        self.ranked.iter().filter(move |r| r.group == group)
    }

    pub fn max_significance(&self) -> Rational {
        self.ranked
            .iter()
            .map(|r| r.significance)
            .max()
            .unwrap_or(Rational::ZERO)
    }
}

fn pos_count(cond: &Partition, dec: &Partition) -> usize {
    positive_region(cond, dec).expect("same universe").len()
}

/// `γ(C) − γ(C − {a})` against the table's decision classes.
pub fn significance(is: &InformationSystem, attr: &str) -> Result<Rational> {
    let a = is.conditional_index(attr)?;
    let dec = decision_partition(is);
    let all: Vec<usize> = is.conditional_indices().collect();
    Ok(significance_of(is, &all, a, &dec))
}

fn significance_of(is: &InformationSystem, all: &[usize], a: usize, dec: &Partition) -> Rational {
    let full = pos_count(&ind_partition_indices(is, all), dec);
    let without: Vec<usize> = all.iter().copied().filter(|&i| i != a).collect();
    let reduced = pos_count(&ind_partition_indices(is, &without), dec);
    // POS is monotone under refinement.
    debug_assert!(reduced <= full);
    Rational::new((full - reduced) as u64, is.num_objects() as u64)
}

/// Computes every significance once on the full table and applies the
/// default grouping.
pub fn rank_attributes(is: &InformationSystem) -> SignificanceTable {
    let dec = decision_partition(is);
    let all: Vec<usize> = is.conditional_indices().collect();
    let mut ranked: Vec<RankedAttribute> = all
        .iter()
        .map(|&a| RankedAttribute {
            name: is.name(a).to_owned(),
            index: a,
            significance: significance_of(is, &all, a, &dec),
            group: Group::High,
        })
        .collect();
    // stable: ties keep column order
    ranked.sort_by_key(|r| r.significance);
    split_groups(SignificanceTable { ranked }, GroupPolicy::default())
}

/// Reassigns groups. The low group is always a prefix of the ranking.
pub fn split_groups(mut table: SignificanceTable, policy: GroupPolicy) -> SignificanceTable {
    let low = match policy {
        GroupPolicy::Count(n) => n.min(table.ranked.len()),
        GroupPolicy::Threshold(t) => table
            .ranked
            .iter()
            .take_while(|r| r.significance < t)
            .count(),
        GroupPolicy::BelowMax => {
            let max = table.max_significance();
            table
                .ranked
                .iter()
                .take_while(|r| r.significance < max)
                .count()
        }
    };
    for (i, r) in table.ranked.iter_mut().enumerate() {
        r.group = if i < low { Group::Low } else { Group::High };
    }
    table
}
