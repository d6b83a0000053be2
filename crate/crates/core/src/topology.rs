//! Sub-bases and bases of the topology generated by attribute equivalence
//! classes.
//!
//! Two independent routes compute a base from a sub-base:
//!
//! * [`minimal_neighborhoods`] intersects, for each object `x`, every member
//!   containing `x`. This is the production path.
//! * [`base_alg1`] runs the iterated pairwise-intersection matrix until no
//!   intersections remain, then recovers objects that dropped out from the
//!   earlier iterations.
//!
//! Both yield the coarsest base `{ N(x) : x ∈ U }`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::dataset::InformationSystem;
use crate::error::{Error, Result};
use crate::objset::ObjectSet;
use crate::partition::{ind_partition_indices, Partition};

/// Family of distinct nonempty object sets over a common universe, kept in
/// canonical order (min element, size, lexicographic membership).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    universe: usize,
    members: Vec<ObjectSet>,
}

impl SetFamily {
    /// Drops empty and duplicate members and canonicalizes the order.
    ///
    /// Panics if a member's universe differs from `universe`.
    pub fn new(universe: usize, members: impl IntoIterator<Item = ObjectSet>) -> Self {
        let mut members: Vec<ObjectSet> = members
            .into_iter()
            .inspect(|m| assert_eq!(m.universe(), universe, "member universe mismatch"))
            .filter(|m| !m.is_empty())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        members.sort_by(ObjectSet::canonical_cmp);
        SetFamily { universe, members }
    }

    /// `{U}`, or the empty family when the universe is empty.
    pub fn whole(universe: usize) -> Self {
        Self::new(universe, [ObjectSet::full(universe)])
    }

    pub fn from_partition(p: &Partition) -> Self {
        Self::new(p.universe(), p.blocks())
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn members(&self) -> &[ObjectSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Union of two families over the same universe.
    pub fn union(&self, other: &SetFamily) -> Result<SetFamily> {
        check_universe(self, other)?;
        Ok(Self::new(
            self.universe,
            self.members.iter().chain(&other.members).cloned(),
        ))
    }

    /// First object not contained in any member.
    pub fn uncovered(&self) -> Option<usize> {
        let mut cover = ObjectSet::empty(self.universe);
        for m in &self.members {
            cover.union_with(m);
        }
        (0..self.universe).find(|&x| !cover.contains(x))
    }

    pub fn covers_universe(&self) -> bool {
        self.uncovered().is_none()
    }

    /// `Some` iff the members are pairwise disjoint and cover `U`.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::from_blocks(self.universe, &self.members)
    }

    fn require_cover(&self) -> Result<()> {
        match self.uncovered() {
            Some(x) => Err(Error::NotACover(x)),
            None => Ok(()),
        }
    }
}

fn check_universe(a: &SetFamily, b: &SetFamily) -> Result<()> {
    if a.universe == b.universe {
        Ok(())
    } else {
        Err(Error::UniverseMismatch {
            left: a.universe,
            right: b.universe,
        })
    }
}

/// Union of the single-attribute equivalence classes of `attrs`.
pub fn subbase_of<S: AsRef<str>>(is: &InformationSystem, attrs: &[S]) -> Result<SetFamily> {
    let idx = is.resolve(attrs)?;
    if idx.is_empty() {
        return Err(Error::EmptyAttributeSet);
    }
    Ok(subbase_of_indices(is, &idx))
}

pub(crate) fn subbase_of_indices(is: &InformationSystem, attrs: &[usize]) -> SetFamily {
    SetFamily::new(
        is.num_objects(),
        attrs
            .iter()
            .flat_map(|&a| ind_partition_indices(is, &[a]).blocks()),
    )
}

/// Base of the topology generated by `attrs`; `{U}` for no attributes.
pub fn attribute_base<S: AsRef<str>>(is: &InformationSystem, attrs: &[S]) -> Result<SetFamily> {
    let idx = is.resolve(attrs)?;
    Ok(attribute_base_indices(is, &idx))
}

pub(crate) fn attribute_base_indices(is: &InformationSystem, attrs: &[usize]) -> SetFamily {
    if attrs.is_empty() {
        return SetFamily::whole(is.num_objects());
    }
    minimal_neighborhoods(&subbase_of_indices(is, attrs)).expect("attribute sub-bases cover U")
}

/// `{ N(x) : x ∈ U }` with `N(x)` the intersection of all members containing `x`.
pub fn minimal_neighborhoods(s: &SetFamily) -> Result<SetFamily> {
    s.require_cover()?;
    let n = s.universe;
    let out = (0..n).map(|x| {
        let mut nx = ObjectSet::full(n);
        for m in s.members.iter().filter(|m| m.contains(x)) {
            nx.intersect_with(m);
        }
        nx
    });
    Ok(SetFamily::new(n, out))
}

/// Full record of one run of the iterated intersection matrix.
#[derive(Debug, Clone)]
pub struct MatrixRun {
    /// Families produced by each iteration; `iterations[0]` is the sub-base.
    pub iterations: Vec<SetFamily>,
    /// Objects missing from the last nonempty iteration, in ascending order.
    pub recovered: Vec<usize>,
    pub base: SetFamily,
}

/// Base via the iterated indiscernibility matrix. Output equals
/// [`minimal_neighborhoods`] of the same input.
pub fn base_alg1(s: &SetFamily) -> Result<SetFamily> {
    base_alg1_traced(s).map(|run| run.base)
}

/// [`base_alg1`] keeping every intermediate family.
///
/// Each iteration intersects every pair of distinct members of the previous
/// family, dropping empty and repeated results. Iteration stops once a
/// family has no overlapping pair. An object that appears in only one
/// member of some iteration is absent from the next, and that member is
/// already `N(x)`, so missing objects are recovered as the smallest earlier
/// set containing them.
pub fn base_alg1_traced(s: &SetFamily) -> Result<MatrixRun> {
    s.require_cover()?;
    let n = s.universe;
    let mut iterations = alloc::vec![s.clone()];
    loop {
        let current = iterations.last().expect("nonempty");
        let m = current.members();
        let mut next = Vec::new();
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                let t = m[i].intersection(&m[j]);
                if !t.is_empty() {
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        iterations.push(SetFamily::new(n, next));
    }

    let last = iterations.last().expect("nonempty");
    let mut members = last.members.clone();
    let mut covered = ObjectSet::empty(n);
    for m in &members {
        covered.union_with(m);
    }
    let mut recovered = Vec::new();
    for x in 0..n {
        if covered.contains(x) {
            continue;
        }
        let best = iterations
            .iter()
            .flat_map(|f| f.members.iter())
            .filter(|m| m.contains(x))
            .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.canonical_cmp(b)))
            .expect("sub-base covers U")
            .clone();
        members.push(best);
        recovered.push(x);
    }
    Ok(MatrixRun {
        base: SetFamily::new(n, members),
        iterations,
        recovered,
    })
}

/// Base of the union of two bases.
pub fn compose_bases(g1: &SetFamily, g2: &SetFamily) -> Result<SetFamily> {
    minimal_neighborhoods(&g1.union(g2)?)
}

/// Extensional equality of two families over the same universe.
pub fn family_equal(f1: &SetFamily, f2: &SetFamily) -> Result<bool> {
    check_universe(f1, f2)?;
    Ok(f1.members == f2.members)
}
