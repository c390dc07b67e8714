//! Exhaustive enumeration of set partitions as formula-free ground truth.
//!
//! Partitions of `[n]` are walked as restricted growth strings. A partition
//! with blocks `b_1..b_k` admits `∏ |b_i|!` linear orders inside its blocks,
//! so weighting each set partition by that product counts partitions into
//! linearly ordered blocks.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{factorial, ExactInt};

pub const DEFAULT_CAP: usize = 9;

/// Visits every restricted growth string of length `n`, passing the block
/// sizes of the corresponding set partition.
fn for_each_set_partition(n: usize, mut visit: impl FnMut(&[usize])) {
    if n == 0 {
        visit(&[]);
        return;
    }
    // a[i] is the block of element i; a[0] = 0 and a[i] <= 1 + max(a[..i]).
    let mut a = vec![0usize; n];
    let mut sizes = vec![0usize; n];
    sizes[0] = n;
    loop {
        let blocks = a.iter().max().copied().unwrap_or(0) + 1;
        visit(&sizes[..blocks]);
        // Advance to the next string in lexicographic order.
        let mut i = n - 1;
        loop {
            if i == 0 {
                return;
            }
            let prefix_max = a[..i].iter().max().copied().unwrap_or(0);
            if a[i] <= prefix_max {
                sizes[a[i]] -= 1;
                a[i] += 1;
                sizes[a[i]] += 1;
                for j in i + 1..n {
                    sizes[a[j]] -= 1;
                    a[j] = 0;
                    sizes[0] += 1;
                }
                break;
            }
            i -= 1;
        }
    }
}

#[derive(Debug, Clone)]
pub struct Enumerator {
    cap: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator { cap: DEFAULT_CAP }
    }
}

impl Enumerator {
    pub fn with_cap(cap: usize) -> Self {
        Enumerator { cap }
    }

    fn guard(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::EnumerationCap { n, cap: self.cap });
        }
        Ok(())
    }

    /// Number of partitions of `[n]` into `k` linearly ordered blocks, per `k`.
    pub fn distribution_by_block_count(&self, n: usize) -> Result<BTreeMap<usize, ExactInt>> {
        self.guard(n)?;
        let fact: Vec<ExactInt> = (0..=n).map(factorial).collect();
        let mut out: BTreeMap<usize, ExactInt> = BTreeMap::new();
        for_each_set_partition(n, |sizes| {
            let weight: ExactInt = sizes.iter().map(|&s| &fact[s]).product();
            *out.entry(sizes.len()).or_insert_with(ExactInt::zero) += weight;
        });
        Ok(out)
    }

    pub fn count_ordered_partitions(&self, n: usize, k: usize) -> Result<ExactInt> {
        Ok(self
            .distribution_by_block_count(n)?
            .remove(&k)
            .unwrap_or_else(ExactInt::zero))
    }

    pub fn count_all_ordered_partitions(&self, n: usize) -> Result<ExactInt> {
        Ok(self.distribution_by_block_count(n)?.into_values().sum())
    }

    /// Unweighted count of set partitions of `[n]`, per block count.
    pub fn set_partitions_by_block_count(&self, n: usize) -> Result<BTreeMap<usize, ExactInt>> {
        self.guard(n)?;
        let mut out: BTreeMap<usize, ExactInt> = BTreeMap::new();
        for_each_set_partition(n, |sizes| {
            *out.entry(sizes.len()).or_insert_with(ExactInt::zero) += 1;
        });
        Ok(out)
    }

    pub fn count_set_partitions(&self, n: usize) -> Result<ExactInt> {
        Ok(self.set_partitions_by_block_count(n)?.into_values().sum())
    }
}

pub fn count_ordered_partitions(n: usize, k: usize) -> Result<ExactInt> {
    Enumerator::default().count_ordered_partitions(n, k)
}

pub fn count_all_ordered_partitions(n: usize) -> Result<ExactInt> {
    Enumerator::default().count_all_ordered_partitions(n)
}

pub fn distribution_by_block_count(n: usize) -> Result<BTreeMap<usize, ExactInt>> {
    Enumerator::default().distribution_by_block_count(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::tables::{bell, lah, stirling2};

    #[test]
    fn counts() {
        assert_eq!(count_ordered_partitions(0, 0).unwrap(), int(1));
        assert_eq!(count_ordered_partitions(2, 1).unwrap(), int(2));
        assert_eq!(count_ordered_partitions(3, 2).unwrap(), int(6));
        assert_eq!(count_all_ordered_partitions(0).unwrap(), int(1));
        assert_eq!(count_all_ordered_partitions(2).unwrap(), int(3));
        assert_eq!(count_all_ordered_partitions(3).unwrap(), int(13));
    }

    #[test]
    fn distributions() {
        let d1 = distribution_by_block_count(1).unwrap();
        assert_eq!(d1, BTreeMap::from([(1, int(1))]));
        let d3 = distribution_by_block_count(3).unwrap();
        assert_eq!(d3, BTreeMap::from([(1, int(6)), (2, int(6)), (3, int(1))]));
        let d4 = distribution_by_block_count(4).unwrap();
        assert_eq!(
            d4,
            BTreeMap::from([(1, int(24)), (2, int(36)), (3, int(12)), (4, int(1))])
        );
        assert_eq!(d4.values().sum::<ExactInt>(), int(73));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            count_all_ordered_partitions(10),
            Err(Error::EnumerationCap { n: 10, cap: 9 })
        );
        assert!(Enumerator::with_cap(10).count_set_partitions(10).is_ok());
    }

    #[test]
    fn set_partitions_match_stirling_and_bell() {
        let e = Enumerator::default();
        for n in 0..=8 {
            assert_eq!(e.count_set_partitions(n).unwrap(), bell(n));
            for (k, v) in e.set_partitions_by_block_count(n).unwrap() {
                assert_eq!(v, stirling2(n, k));
            }
        }
    }

    #[test]
    fn enumeration_matches_lah() {
        for n in 0..=9 {
            for k in 0..=n {
                assert_eq!(
                    count_ordered_partitions(n, k).unwrap(),
                    lah(n, k),
                    "n={n} k={k}"
                );
            }
        }
    }
}
