//! Indiscernibility partitions and the positive-region quantities built on them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::dataset::{Decision, InformationSystem};
use crate::error::{Error, Result};
use crate::objset::ObjectSet;
use crate::rational::Rational;

/// Partition of `0..n` into nonempty disjoint blocks.
///
/// Stored as one block label per object, with labels assigned in order of
/// first appearance. That makes label `i` the block with the `i`-th
/// smallest minimum element, so equality is a positional comparison.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    labels: Vec<u32>,
    num_blocks: usize,
}

impl Partition {
    /// Canonicalizes an arbitrary per-object labelling.
    pub fn from_labels<K: Ord + Copy>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut ids: BTreeMap<K, u32> = BTreeMap::new();
        let labels: Vec<u32> = keys
            .into_iter()
            .map(|k| {
                let next = ids.len() as u32;
                *ids.entry(k).or_insert(next)
            })
            .collect();
        Partition {
            labels,
            num_blocks: ids.len(),
        }
    }

    /// `None` unless `blocks` are nonempty, pairwise disjoint and cover `0..universe`.
    pub fn from_blocks(universe: usize, blocks: &[ObjectSet]) -> Option<Self> {
        let mut owner: Vec<Option<usize>> = alloc::vec![None; universe];
        for (b, block) in blocks.iter().enumerate() {
            if block.universe() != universe || block.is_empty() {
                return None;
            }
            for x in block {
                if owner[x].replace(b).is_some() {
                    return None;
                }
            }
        }
        let owner: Option<Vec<usize>> = owner.into_iter().collect();
        Some(Self::from_labels(owner?))
    }

    /// `{U}`: nothing is discerned.
    pub fn trivial(universe: usize) -> Self {
        Partition {
            labels: alloc::vec![0; universe],
            num_blocks: usize::from(universe > 0),
        }
    }

    /// Every object in its own block.
    pub fn singletons(universe: usize) -> Self {
        Partition {
            labels: (0..universe as u32).collect(),
            num_blocks: universe,
        }
    }

    pub fn universe(&self) -> usize {
        self.labels.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Block label of object `x`.
    pub fn block_of(&self, x: usize) -> usize {
        self.labels[x] as usize
    }

    /// Blocks in canonical order (ascending minimum element).
    pub fn blocks(&self) -> Vec<ObjectSet> {
        let n = self.universe();
        let mut blocks = alloc::vec![ObjectSet::empty(n); self.num_blocks];
        for (x, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].insert(x);
        }
        blocks
    }

    /// True iff every block of `self` lies inside one block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.universe() != coarser.universe() {
            return false;
        }
        let mut image: Vec<Option<u32>> = alloc::vec![None; self.num_blocks];
        self.labels
            .iter()
            .zip(&coarser.labels)
            .all(|(&fine, &coarse)| *image[fine as usize].get_or_insert(coarse) == coarse)
    }

    fn check_universe(&self, other: &Partition) -> Result<()> {
        if self.universe() == other.universe() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                left: self.universe(),
                right: other.universe(),
            })
        }
    }

    /// Splits every block by the given per-object codes.
    fn refine_by(&self, codes: &[u32]) -> Partition {
        Self::from_labels(self.labels.iter().copied().zip(codes.iter().copied()))
    }
}

/// Common refinement: the nonempty pairwise intersections of blocks.
pub fn meet(p: &Partition, q: &Partition) -> Result<Partition> {
    p.check_universe(q)?;
    Ok(p.refine_by(&q.labels))
}

/// IND over the given column indices. Indices are not validated.
pub fn ind_partition_indices(is: &InformationSystem, attrs: &[usize]) -> Partition {
    attrs
        .iter()
        .fold(Partition::trivial(is.num_objects()), |p, &a| {
            p.refine_by(is.column(a))
        })
}

/// Groups objects that agree on every attribute in `attrs`. `IND(∅) = {U}`.
pub fn ind_partition<S: AsRef<str>>(is: &InformationSystem, attrs: &[S]) -> Result<Partition> {
    let idx = is.resolve(attrs)?;
    Ok(ind_partition_indices(is, &idx))
}

/// Decision classes of the table's decision policy.
pub fn decision_partition(is: &InformationSystem) -> Partition {
    match (is.decision(), is.decision_index()) {
        (Decision::Attribute(_), Some(d)) => ind_partition_indices(is, &[d]),
        _ => Partition::singletons(is.num_objects()),
    }
}

/// Union of the `cond` blocks that sit inside a single `dec` block.
pub fn positive_region(cond: &Partition, dec: &Partition) -> Result<ObjectSet> {
    cond.check_universe(dec)?;
    let n = cond.universe();
    let mut consistent = alloc::vec![true; cond.num_blocks];
    let mut seen: Vec<Option<u32>> = alloc::vec![None; cond.num_blocks];
    for (&c, &d) in cond.labels.iter().zip(&dec.labels) {
        if *seen[c as usize].get_or_insert(d) != d {
            consistent[c as usize] = false;
        }
    }
    let mut pos = ObjectSet::empty(n);
    for (x, &c) in cond.labels.iter().enumerate() {
        if consistent[c as usize] {
            pos.insert(x);
        }
    }
    Ok(pos)
}

/// Dependency degree `|POS| / |U|`.
pub fn gamma(cond: &Partition, dec: &Partition) -> Result<Rational> {
    let pos = positive_region(cond, dec)?;
    Ok(Rational::new(
        pos.len() as u64,
        cond.universe().max(1) as u64,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::builtin_seven_segment;
    use alloc::vec;

    fn blocks(p: &Partition) -> Vec<Vec<usize>> {
        p.blocks().iter().map(ObjectSet::to_vec).collect()
    }

    #[test]
    fn seven_segment_single_attributes() {
        let is = builtin_seven_segment();
        let p = ind_partition(&is, &["a"]).unwrap();
        assert_eq!(blocks(&p), vec![vec![0, 2, 3, 5, 6, 7, 8, 9], vec![1, 4]]);
        let p = ind_partition::<&str>(&is, &[]).unwrap();
        assert_eq!(blocks(&p), vec![(0..10).collect::<Vec<_>>()]);
    }

    #[test]
    fn seven_segment_b_e() {
        let is = builtin_seven_segment();
        let p = ind_partition(&is, &["b", "e"]).unwrap();
        assert_eq!(
            blocks(&p),
            vec![vec![0, 2, 8], vec![1, 3, 4, 7, 9], vec![5], vec![6]]
        );
        let b = ind_partition(&is, &["b"]).unwrap();
        let e = ind_partition(&is, &["e"]).unwrap();
        assert_eq!(meet(&b, &e).unwrap(), p);
    }

    #[test]
    fn seven_segment_all_attributes_are_singletons() {
        let is = builtin_seven_segment();
        let p = ind_partition(&is, &["a", "b", "c", "d", "e", "f", "g"]).unwrap();
        assert_eq!(p, Partition::singletons(10));
    }

    #[test]
    fn meet_over_d_a_f_g() {
        let is = builtin_seven_segment();
        let p = ["d", "a", "f", "g"]
            .iter()
            .map(|a| ind_partition(&is, &[*a]).unwrap())
            .reduce(|l, r| meet(&l, &r).unwrap())
            .unwrap();
        assert_eq!(
            blocks(&p),
            vec![
                vec![0],
                vec![1],
                vec![2, 3],
                vec![4],
                vec![5, 6, 8, 9],
                vec![7]
            ]
        );
    }

    #[test]
    fn unknown_attribute() {
        let is = builtin_seven_segment();
        assert_eq!(
            ind_partition(&is, &["z"]),
            Err(Error::UnknownAttribute("z".into()))
        );
    }

    #[test]
    fn positive_region_and_gamma() {
        let is = builtin_seven_segment();
        let id = Partition::singletons(10);
        let all = ind_partition(&is, &["a", "b", "c", "d", "e", "f", "g"]).unwrap();
        assert!(positive_region(&all, &id).unwrap().is_full());
        assert_eq!(gamma(&all, &id).unwrap(), Rational::ONE);

        let no_e = ind_partition(&is, &["a", "b", "c", "d", "f", "g"]).unwrap();
        let pos = positive_region(&no_e, &id).unwrap();
        assert_eq!(pos.to_vec(), vec![0, 1, 2, 3, 4, 7]);
        assert_eq!(gamma(&no_e, &id).unwrap(), Rational::new(6, 10));

        let top = Partition::trivial(10);
        assert!(positive_region(&top, &id).unwrap().is_empty());
        assert_eq!(gamma(&top, &id).unwrap(), Rational::ZERO);
    }

    #[test]
    fn universe_mismatch() {
        let p = Partition::trivial(3);
        let q = Partition::trivial(4);
        assert_eq!(
            meet(&p, &q),
            Err(Error::UniverseMismatch { left: 3, right: 4 })
        );
        assert!(positive_region(&p, &q).is_err());
        assert!(gamma(&p, &q).is_err());
    }

    #[test]
    fn from_blocks_validates() {
        let s = |xs: &[usize]| ObjectSet::from_indices(4, xs.iter().copied()).unwrap();
        let p = Partition::from_blocks(4, &[s(&[1, 3]), s(&[0, 2])]).unwrap();
        assert_eq!(blocks(&p), vec![vec![0, 2], vec![1, 3]]);
        assert!(Partition::from_blocks(4, &[s(&[1, 3]), s(&[0, 1, 2])]).is_none());
        assert!(Partition::from_blocks(4, &[s(&[1, 3])]).is_none());
        assert!(Partition::from_blocks(4, &[s(&[0, 1, 2, 3]), s(&[])]).is_none());
    }

    #[test]
    fn refinement() {
        let is = builtin_seven_segment();
        let a = ind_partition(&is, &["a"]).unwrap();
        let ad = ind_partition(&is, &["a", "d"]).unwrap();
        assert!(ad.refines(&a));
        assert!(!a.refines(&ad));
        assert!(a.refines(&Partition::trivial(10)));
    }
}
