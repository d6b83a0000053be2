//! Test-only corpus generation and brute-force oracles that work straight
//! off the raw value grid, never through the library's partition code.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reduct_core::{Decision, InformationSystem};

/// Raw binary table: `rows[object][attr]`.
#[derive(Debug, Clone)]
pub struct Grid {
    pub rows: Vec<Vec<u8>>,
}

impl Grid {
    pub fn objects(&self) -> usize {
        self.rows.len()
    }

    pub fn attrs(&self) -> usize {
        self.rows[0].len()
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.attrs()).map(|a| format!("c{}", a + 1)).collect()
    }

    pub fn to_system(&self) -> InformationSystem {
        InformationSystem::from_rows(
            self.names(),
            self.rows
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect(),
            Decision::Identity,
        )
        .unwrap()
    }

    fn agree(&self, x: usize, y: usize, attrs: &[usize]) -> bool {
        attrs.iter().all(|&a| self.rows[x][a] == self.rows[y][a])
    }

    /// Blocks of IND(attrs) by pairwise row comparison, ordered by minimum.
    pub fn ind_blocks(&self, attrs: &[usize]) -> Vec<Vec<usize>> {
        let n = self.objects();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if out.iter().any(|b| b.contains(&x)) {
                continue;
            }
            out.push((0..n).filter(|&y| self.agree(x, y, attrs)).collect());
        }
        out
    }

    /// `R` preserves the full indiscernibility: agreement on `R` implies
    /// agreement on every attribute.
    pub fn preserves(&self, attrs: &[usize]) -> bool {
        let all: Vec<usize> = (0..self.attrs()).collect();
        let n = self.objects();
        (0..n).all(|x| (0..n).all(|y| !self.agree(x, y, attrs) || self.agree(x, y, &all)))
    }

    /// Every minimal preserving subset, as sorted index lists.
    pub fn reducts(&self) -> Vec<Vec<usize>> {
        let m = self.attrs();
        let mut out = Vec::new();
        for mask in 0u32..(1 << m) {
            let set: Vec<usize> = (0..m).filter(|b| mask >> b & 1 == 1).collect();
            if !self.preserves(&set) {
                continue;
            }
            let minimal = set.iter().all(|&a| {
                let smaller: Vec<usize> = set.iter().copied().filter(|&i| i != a).collect();
                !self.preserves(&smaller)
            });
            if minimal {
                out.push(set);
            }
        }
        out
    }

    /// Identity-decision positive region size over `attrs`: objects with no
    /// other object agreeing on all of `attrs`.
    pub fn pos_count(&self, attrs: &[usize]) -> usize {
        let n = self.objects();
        (0..n)
            .filter(|&x| (0..n).all(|y| y == x || !self.agree(x, y, attrs)))
            .count()
    }

    /// Significance numerator over `|U|`.
    pub fn significance_num(&self, a: usize) -> usize {
        let all: Vec<usize> = (0..self.attrs()).collect();
        let without: Vec<usize> = all.iter().copied().filter(|&i| i != a).collect();
        self.pos_count(&all) - self.pos_count(&without)
    }
}

pub fn random_grid(rng: &mut impl Rng, max_objects: usize, max_attrs: usize) -> Grid {
    let n = rng.gen_range(1..=max_objects);
    let m = rng.gen_range(1..=max_attrs);
    Grid {
        rows: (0..n)
            .map(|_| (0..m).map(|_| rng.gen_range(0..2u8)).collect())
            .collect(),
    }
}

/// Deterministic corpus of random binary tables.
pub fn corpus(seed: u64, count: usize, max_objects: usize, max_attrs: usize) -> Vec<Grid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_grid(&mut rng, max_objects, max_attrs))
        .collect()
}
