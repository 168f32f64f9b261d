use std::collections::BTreeSet;

use itertools::Itertools;

use super::config::Configuration;

/// A pair of permutations `(π, ψ)` acting by
/// `A'[r][c] = A[π r][ψ c]` and `B'[r][c] = B[ψ r][π c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPermutation {
    pub pi: Vec<usize>,
    pub psi: Vec<usize>,
}

impl BlockPermutation {
    pub fn identity(n: usize) -> Self {
        BlockPermutation { pi: (0..n).collect(), psi: (0..n).collect() }
    }

    /// All `n! · n!` pairs, in lexicographic order.
    pub fn all(n: usize) -> Vec<BlockPermutation> {
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        perms
            .iter()
            .cartesian_product(&perms)
            .map(|(pi, psi)| BlockPermutation { pi: pi.clone(), psi: psi.clone() })
            .collect()
    }

    /// Where each flag of the transformed configuration is read from, as
    /// indices into `A` then `B` row-major.
    pub fn source_indices(&self) -> Vec<usize> {
        let n = self.pi.len();
        let mut out = Vec::with_capacity(2 * n * n);
        for r in 0..n {
            for c in 0..n {
                out.push(self.pi[r] * n + self.psi[c]);
            }
        }
        for r in 0..n {
            for c in 0..n {
                out.push(n * n + self.psi[r] * n + self.pi[c]);
            }
        }
        out
    }

    pub fn apply(&self, cfg: &Configuration) -> Configuration {
        let flags = cfg.flags();
        let moved: Vec<bool> = self.source_indices().into_iter().map(|i| flags[i]).collect();
        Configuration::from_flags(cfg.n(), &moved).expect("same size")
    }
}

/// Every configuration reachable from `cfg` by block permutations.
pub fn equivalence_class(cfg: &Configuration) -> BTreeSet<Configuration> {
    BlockPermutation::all(cfg.n()).iter().map(|g| g.apply(cfg)).collect()
}

/// The member of the class with the lexicographically smallest `k`/`u`
/// string.
pub fn class_representative(cfg: &Configuration) -> Configuration {
    equivalence_class(cfg).into_iter().next().expect("class contains cfg")
}

/// One representative per equivalence class among configurations with
/// `unknowns` unknown blocks, in increasing `k`/`u` string order.
pub fn enumerate_representatives(n: usize, unknowns: usize) -> Representatives {
    let len = 2 * n * n;
    assert!(n >= 1 && unknowns <= len, "need 1 <= n and unknowns <= 2n²");
    let maps = BlockPermutation::all(n).iter().map(BlockPermutation::source_indices).collect();
    let mut flags = vec![false; len];
    flags[len - unknowns..].iter_mut().for_each(|f| *f = true);
    Representatives { n, maps, next: Some(flags) }
}

/// Iterator returned by [`enumerate_representatives`].
pub struct Representatives {
    n: usize,
    maps: Vec<Vec<usize>>,
    next: Option<Vec<bool>>,
}

impl Representatives {
    fn is_minimal(&self, flags: &[bool]) -> bool {
        self.maps.iter().all(|m| m.iter().map(|&i| flags[i]).cmp(flags.iter().copied()) != std::cmp::Ordering::Less)
    }
}

impl Iterator for Representatives {
    type Item = Configuration;

    fn next(&mut self) -> Option<Configuration> {
        loop {
            let flags = self.next.take()?;
            let mut succ = flags.clone();
            if next_permutation(&mut succ) {
                self.next = Some(succ);
            }
            if self.is_minimal(&flags) {
                return Some(Configuration::from_flags(self.n, &flags).expect("length 2n²"));
            }
        }
    }
}

/// Advances to the next lexicographic arrangement; false after the last.
fn next_permutation(v: &mut [bool]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[i - 1] < v[j]).expect("v[i] qualifies");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Number of classes of `n × n` configurations with `unknowns` unknowns.
pub fn class_count(n: usize, unknowns: usize) -> usize {
    enumerate_representatives(n, unknowns).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_stepping() {
        let mut v = vec![false, false, true, true];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![true, true, false, false]);
    }

    #[test]
    fn identity_is_in_class() {
        let cfg = Configuration::parse("kukukkkkk kkukuukku").unwrap();
        let class = equivalence_class(&cfg);
        assert!(class.contains(&cfg));
        assert!(36 % class.len() == 0);
        assert_eq!(BlockPermutation::identity(3).apply(&cfg), cfg);
    }

    #[test]
    fn trivial_counts() {
        assert_eq!(class_count(1, 0), 1);
        assert_eq!(class_count(1, 2), 1);
        assert_eq!(class_count(2, 0), 1);
    }
}
