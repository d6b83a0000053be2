//! Significance-ordered backward elimination, the exhaustive reduct oracle,
//! and the core.
//!
//! Redundancy is always judged against the base of the *full* conditional
//! attribute set. The candidate base is assembled by composing the bases of
//! the low and high groups separately.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;

use crate::dataset::InformationSystem;
use crate::error::{Error, Result};
use crate::partition::ind_partition_indices;
use crate::rational::Rational;
use crate::significance::{rank_attributes, split_groups, Group, GroupPolicy, SignificanceTable};
use crate::topology::{attribute_base_indices, compose_bases, family_equal, SetFamily};

/// Default cap on the number of conditional attributes the oracle enumerates.
pub const DEFAULT_MAX_ATTRS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Redundant,
    Kept,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub attribute: String,
    pub significance: Rational,
    pub group: Group,
    pub verdict: Verdict,
    /// Base size over the remaining attributes before the test.
    pub base_before: usize,
    /// Base size with the attribute dropped.
    pub base_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductResult {
    /// Kept attributes, in column order.
    pub reduct: Vec<String>,
    /// Eliminated attributes, in removal order.
    pub removed: Vec<String>,
    pub trace: Vec<TraceStep>,
    pub verified_minimal: bool,
}

/// Tests one attribute against the full base, composing the low and high
/// group bases of `remaining − {attr}`.
struct Tester<'a> {
    is: &'a InformationSystem,
    groups: &'a SignificanceTable,
    full_base: SetFamily,
}

impl<'a> Tester<'a> {
    fn new(is: &'a InformationSystem, groups: &'a SignificanceTable) -> Self {
        let all: Vec<usize> = is.conditional_indices().collect();
        Tester {
            is,
            groups,
            full_base: attribute_base_indices(is, &all),
        }
    }

    fn base_over(&self, remaining: &[usize]) -> SetFamily {
        let pick = |g: Group| -> Vec<usize> {
            self.groups
                .group_members(g)
                .map(|r| r.index)
                .filter(|i| remaining.contains(i))
                .collect()
        };
        let low = attribute_base_indices(self.is, &pick(Group::Low));
        let high = attribute_base_indices(self.is, &pick(Group::High));
        compose_bases(&low, &high).expect("same universe")
    }

    /// Returns the verdict and the candidate base.
    fn test(&self, attr: usize, remaining: &[usize]) -> (bool, SetFamily) {
        let without: Vec<usize> = remaining.iter().copied().filter(|&i| i != attr).collect();
        let candidate = self.base_over(&without);
        let same = family_equal(&self.full_base, &candidate).expect("same universe");
        (same, candidate)
    }
}

/// True iff dropping `attr` from `remaining` keeps the full-attribute base.
/// Uses the default grouping to route the base computation.
pub fn is_redundant<S: AsRef<str>>(
    is: &InformationSystem,
    attr: &str,
    remaining: &[S],
) -> Result<bool> {
    let a = is.conditional_index(attr)?;
    let rem = is.resolve(remaining)?;
    if !rem.contains(&a) {
        return Err(Error::NotInRemaining(attr.to_owned()));
    }
    let table = rank_attributes(is);
    Ok(Tester::new(is, &table).test(a, &rem).0)
}

/// Single pass over the ranking: each redundant attribute is dropped at once
/// and never restored; each kept attribute is never retested.
pub fn eliminate(is: &InformationSystem, policy: GroupPolicy) -> ReductResult {
    let table = split_groups(rank_attributes(is), policy);
    eliminate_ranked(is, &table)
}

/// [`eliminate`] over a precomputed, already grouped ranking.
pub fn eliminate_ranked(is: &InformationSystem, table: &SignificanceTable) -> ReductResult {
    let tester = Tester::new(is, table);
    let mut remaining: Vec<usize> = is.conditional_indices().collect();
    let mut removed = Vec::new();
    let mut trace = Vec::with_capacity(remaining.len());
    let mut before = tester.full_base.len();

    // Low group is a prefix of the ranking, so ranked order tests it first.
    for r in table.ranked() {
        let (redundant, candidate) = tester.test(r.index, &remaining);
        trace.push(TraceStep {
            attribute: r.name.clone(),
            significance: r.significance,
            group: r.group,
            verdict: if redundant {
                Verdict::Redundant
            } else {
                Verdict::Kept
            },
            base_before: before,
            base_after: candidate.len(),
        });
        if redundant {
            remaining.retain(|&i| i != r.index);
            removed.push(r.name.clone());
            before = candidate.len();
        }
    }

    let verified_minimal = is_minimal_reduct(is, &remaining);
    ReductResult {
        reduct: remaining.iter().map(|&i| is.name(i).to_owned()).collect(),
        removed,
        trace,
        verified_minimal,
    }
}

/// `IND(R) = IND(C)` and no single attribute of `R` can be dropped.
pub fn is_minimal_reduct(is: &InformationSystem, reduct: &[usize]) -> bool {
    let all: Vec<usize> = is.conditional_indices().collect();
    let target = ind_partition_indices(is, &all);
    if ind_partition_indices(is, reduct) != target {
        return false;
    }
    reduct.iter().all(|&a| {
        let without: Vec<usize> = reduct.iter().copied().filter(|&i| i != a).collect();
        ind_partition_indices(is, &without) != target
    })
}

/// Next mask with the same popcount.
fn next_combination(v: u64) -> u64 {
    let t = v | (v - 1);
    (t + 1) | (((!t & (!t).wrapping_neg()) - 1) >> (v.trailing_zeros() + 1))
}

/// All minimal attribute subsets preserving `IND(C)`, by increasing size.
/// Each reduct is listed in column order.
pub fn exhaustive_reducts(is: &InformationSystem, max_attrs: usize) -> Result<Vec<Vec<String>>> {
    let attrs: Vec<usize> = is.conditional_indices().collect();
    let m = attrs.len();
    if m > max_attrs || m >= 64 {
        return Err(Error::TooManyAttributes {
            count: m,
            cap: max_attrs.min(63),
        });
    }
    let target = ind_partition_indices(is, &attrs);
    let mut found: Vec<u64> = Vec::new();
    for k in 0..=m {
        let mut level = Vec::new();
        if k == 0 {
            if ind_partition_indices(is, &[]) == target {
                level.push(0);
            }
        } else {
            let mut mask: u64 = (1 << k) - 1;
            while mask < (1u64 << m) {
                if !found.iter().any(|&f| f & !mask == 0) {
                    let subset: Vec<usize> = (0..m)
                        .filter(|b| mask >> b & 1 == 1)
                        .map(|b| attrs[b])
                        .collect();
                    if ind_partition_indices(is, &subset) == target {
                        level.push(mask);
                    }
                }
                mask = next_combination(mask);
            }
        }
        found.extend(level);
    }
    Ok(found
        .into_iter()
        .map(|mask| {
            (0..m)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| is.name(attrs[b]).to_owned())
                .collect()
        })
        .collect())
}

/// Attributes whose sole removal changes `IND(C)`.
pub fn core_attributes(is: &InformationSystem) -> Vec<String> {
    let all: Vec<usize> = is.conditional_indices().collect();
    let target = ind_partition_indices(is, &all);
    all.iter()
        .copied()
        .filter(|&a| {
            let without: Vec<usize> = all.iter().copied().filter(|&i| i != a).collect();
            ind_partition_indices(is, &without) != target
        })
        .map(|a| is.name(a).to_owned())
        .collect()
}
